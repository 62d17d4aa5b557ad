//! Exact characteristic polynomials, representation matrices of abelian
//! gain graphs, and the two-eigenvalue cover classifier.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gain::GainGraph;
use crate::graph::Graph;
use crate::group::{GroupElement, GroupSpec};
use crate::hermitian::{hermitian_spectrum, CMatrix, Spectrum};
use crate::poly::IntPolynomial;

/// Sparse square integer matrix, one `(column, value)` list per row.
pub(crate) type SparseRows = Vec<Vec<(usize, i64)>>;

pub(crate) fn graph_rows(g: &Graph) -> SparseRows {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().map(|&w| (w, 1)).collect())
        .collect()
}

/// `A * M` for sparse `A` and dense big-integer `M`.
pub(crate) fn sparse_mul(a: &SparseRows, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in a.iter().enumerate() {
        for &(l, w) in row {
            for (o, x) in out[i].iter_mut().zip(&m[l]) {
                if w == 1 {
                    *o += x;
                } else {
                    *o += x * w;
                }
            }
        }
    }
    out
}

/// Characteristic polynomial `det(xI - A)` of a square integer matrix by
/// Faddeev-LeVerrier: `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`,
/// `M_{k+1} = A M_k + c_{n-k} I`. All divisions are exact.
pub(crate) fn char_poly_sparse(a: &SparseRows) -> IntPolynomial {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::from(1);
            row
        })
        .collect();
    for k in 1..=n {
        let mut am = sparse_mul(a, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let c = -(trace / BigInt::from(k));
        if k < n {
            for (i, row) in am.iter_mut().enumerate() {
                row[i] += &c;
            }
            m = am;
        }
        coeffs[n - k] = c;
    }
    IntPolynomial::new(coeffs)
}

/// Exact characteristic polynomial of the 0/1 adjacency matrix.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    char_poly_sparse(&graph_rows(g))
}

/// Characteristic polynomial of a dense integer matrix.
pub fn char_poly_matrix(rows: &[Vec<i64>]) -> IntPolynomial {
    let sparse = rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect())
        .collect();
    char_poly_sparse(&sparse)
}

/// `S_j`: the base adjacency with each edge entry replaced by the value of
/// the character `j` on its gain.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix {
    pub matrix: CMatrix,
    pub character: Vec<usize>,
    /// Valency of the base when it is regular.
    pub base_valency: Option<usize>,
}

impl RepMatrix {
    /// Adjacency matrix of `g` under the trivial character.
    pub fn from_graph(g: &Graph) -> Self {
        RepMatrix {
            matrix: CMatrix::from_real(&g.adjacency_matrix()),
            character: vec![0],
            base_valency: g.regular_degree(),
        }
    }
}

/// `chi_j(g) = prod exp(2 pi i j_p g_p / r_p)`.
pub fn character_value(orders: &[usize], j: &[usize], g: &GroupElement) -> Complex64 {
    let GroupElement::Abelian(x) = g else {
        panic!("character of a non-abelian element");
    };
    // accumulate the exponent as an exact fraction of a full turn
    let turn: f64 = orders
        .iter()
        .zip(j)
        .zip(x)
        .map(|((&r, &jp), &gp)| ((jp * gp) % r) as f64 / r as f64)
        .sum();
    let turn = turn.fract();
    // quarter turns exactly, so real signings stay real
    match (turn * 4.0).round() {
        q if (turn * 4.0 - q).abs() < 1e-12 => match q as i64 % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        },
        _ => Complex64::from_polar(1.0, 2.0 * PI * turn),
    }
}

/// All character indices of the abelian group, lexicographic.
pub fn characters(group: &GroupSpec) -> Vec<Vec<usize>> {
    group
        .elements()
        .into_iter()
        .map(|e| match e {
            GroupElement::Abelian(x) => x,
            GroupElement::Perm(_) => unreachable!("characters of a permutation group"),
        })
        .collect()
}

pub fn rep_matrix(f: &GainGraph, j: &[usize]) -> Result<RepMatrix> {
    let GroupSpec::Abelian(orders) = f.group() else {
        return Err(Error::Unsupported(
            "representation matrices need an abelian gain group".into(),
        ));
    };
    if j.len() != orders.len() || j.iter().zip(orders).any(|(&a, &r)| a >= r) {
        return Err(Error::Parameter(format!("character {j:?} does not match group {orders:?}")));
    }
    let n = f.base().n();
    let mut m = CMatrix::zeros(n);
    for (&(u, v), g) in f.base().edges().iter().zip(f.gains()) {
        let z = character_value(orders, j, g);
        m[(u, v)] = z;
        m[(v, u)] = z.conj();
    }
    Ok(RepMatrix {
        matrix: m,
        character: j.to_vec(),
        base_valency: f.base().regular_degree(),
    })
}

/// Multiset union of the spectra of every `S_j`; for an abelian gain
/// graph this is the spectrum of the lift.
pub fn block_spectrum(f: &GainGraph, tol: f64) -> Result<Spectrum> {
    let mut values = Vec::new();
    let mut radius = 0.0f64;
    for j in characters(f.group()) {
        let vals = rep_matrix(f, &j)?.matrix.eigenvalues()?;
        radius = vals.iter().fold(radius, |r, x| r.max(x.abs()));
        values.extend(vals);
    }
    Ok(Spectrum::cluster(&values, tol * radius.max(1.0)))
}

/// The two new eigenvalues of a 2ev cover.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NewEigenvalues {
    pub theta: f64,
    pub tau: f64,
    pub mult_theta: usize,
    pub mult_tau: usize,
    /// `theta + tau`, exact.
    pub lambda: i64,
    /// `-theta * tau`, exact.
    pub mu: i64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoEvCertificate {
    pub is_two_ev: bool,
    pub new_eigenvalues: Option<NewEigenvalues>,
    /// Distinct values in Spec(cover) minus Spec(base).
    pub distinct_new: usize,
    pub cover_connected: bool,
    /// `char_poly(cover) / char_poly(base)`.
    pub quotient: IntPolynomial,
}

impl TwoEvCertificate {
    pub fn lambda(&self) -> Option<i64> {
        self.new_eigenvalues.as_ref().map(|e| e.lambda)
    }

    pub fn mu(&self) -> Option<i64> {
        self.new_eigenvalues.as_ref().map(|e| e.mu)
    }

    /// 2ev with a connected lift: the hypothesis of the regularity theorems.
    pub fn connected_two_ev(&self) -> bool {
        self.is_two_ev && self.cover_connected
    }
}

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Consistency(format!("coefficient {x} exceeds i64")))
}

/// Decides 2ev by exact polynomial division. The quotient's square-free
/// part is a monic integer quadratic `x^2 - lambda x - mu` exactly when the
/// cover adds two distinct eigenvalues.
pub fn classify_two_ev(f: &GainGraph) -> Result<TwoEvCertificate> {
    if !f.base().is_connected() {
        return Err(Error::Disconnected);
    }
    let cover = f.lift();
    let cover_poly = char_poly(cover.graph());
    let base_poly = char_poly(f.base());
    let quotient = cover_poly.div_exact(&base_poly).ok_or_else(|| {
        Error::Consistency("base characteristic polynomial does not divide the cover's".into())
    })?;
    let cover_connected = cover.is_connected();
    certificate_from_quotient(quotient, cover_connected)
}

pub(crate) fn certificate_from_quotient(
    quotient: IntPolynomial,
    cover_connected: bool,
) -> Result<TwoEvCertificate> {
    let sqf = quotient.square_free_part();
    let distinct_new = sqf.degree().unwrap_or(0);
    let mut cert = TwoEvCertificate {
        is_two_ev: distinct_new == 2,
        new_eigenvalues: None,
        distinct_new,
        cover_connected,
        quotient,
    };
    if !cert.is_two_ev {
        return Ok(cert);
    }
    debug_assert!(sqf.is_monic());
    let lambda = -to_i64(&sqf.coeff(1))?;
    let mu = -to_i64(&sqf.coeff(0))?;
    let disc: BigInt = BigInt::from(lambda) * lambda + BigInt::from(mu) * 4;
    if disc.is_negative() {
        return Err(Error::Consistency("new eigenvalues are not real".into()));
    }
    let root = disc.sqrt();
    let (theta, tau, mult_theta, mult_tau);
    if &root * &root == disc {
        // rational, hence integer, roots
        let r = to_i64(&root)?;
        let (t, s) = ((lambda + r) / 2, (lambda - r) / 2);
        let deflate = |x: i64| {
            let lin = IntPolynomial::linear(x);
            let mut q = cert.quotient.clone();
            let mut m = 0;
            while let Some(next) = q.div_exact(&lin) {
                q = next;
                m += 1;
            }
            m
        };
        theta = t as f64;
        tau = s as f64;
        mult_theta = deflate(t);
        mult_tau = deflate(s);
    } else {
        let d = disc.to_f64().unwrap().sqrt();
        theta = (lambda as f64 + d) / 2.0;
        tau = (lambda as f64 - d) / 2.0;
        // irreducible quadratic: the quotient is a power of it
        let half = cert.quotient.degree().unwrap_or(0) / 2;
        mult_theta = half;
        mult_tau = half;
    }
    if mult_theta + mult_tau != cert.quotient.degree().unwrap_or(0) {
        return Err(Error::Consistency("new eigenvalue multiplicities do not add up".into()));
    }
    cert.new_eigenvalues = Some(NewEigenvalues {
        theta,
        tau,
        mult_theta,
        mult_tau,
        lambda,
        mu,
    });
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MinPolyCertificate {
    pub lambda: f64,
    pub mu: f64,
    /// `max |S^2 - lambda S - mu I|`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum MinPolyFailure {
    /// Number of distinct clustered eigenvalues when it is not two.
    NotTwoEigenvalues(usize),
    Residual(f64),
    Valency { mu: f64, k: usize },
    NonzeroDiagonal,
}

/// Certifies `S^2 = lambda S + mu I` from the clustered spectrum of `S`.
pub fn minpoly_certificate(
    s: &RepMatrix,
    tol: f64,
) -> Result<std::result::Result<MinPolyCertificate, MinPolyFailure>> {
    let spec = hermitian_spectrum(&s.matrix, tol)?;
    if spec.distinct() != 2 {
        return Ok(Err(MinPolyFailure::NotTwoEigenvalues(spec.distinct())));
    }
    let (theta, tau) = (spec.pairs()[0].0, spec.pairs()[1].0);
    let lambda = theta + tau;
    let mu = -theta * tau;
    let m = &s.matrix;
    let n = m.n();
    let check = CMatrix::combine(&[
        (Complex64::new(1.0, 0.0), &m.mul(m)),
        (Complex64::new(-lambda, 0.0), m),
        (Complex64::new(-mu, 0.0), &CMatrix::identity(n)),
    ]);
    let residual = check.max_abs();
    let norm = theta.abs().max(tau.abs());
    if residual > 1e-8 * norm.powi(2).max(1.0) {
        return Ok(Err(MinPolyFailure::Residual(residual)));
    }
    if let Some(k) = s.base_valency {
        if (0..n).any(|i| m[(i, i)].norm() != 0.0) {
            return Ok(Err(MinPolyFailure::NonzeroDiagonal));
        }
        if (mu - k as f64).abs() > 1e-7 * (k as f64).max(1.0) {
            return Ok(Err(MinPolyFailure::Valency { mu, k }));
        }
    }
    Ok(Ok(MinPolyCertificate {
        lambda,
        mu,
        residual,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle, hypercube, kneser};

    fn res(x: usize) -> GroupElement {
        GroupElement::Abelian(vec![x])
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly(&complete_graph(3).unwrap()),
            IntPolynomial::from_integer_roots(&[(2, 1), (-1, 2)])
        );
        assert_eq!(
            char_poly(&complete_graph(5).unwrap()),
            IntPolynomial::from_integer_roots(&[(4, 1), (-1, 4)])
        );
        assert_eq!(
            char_poly(&kneser(7, 2).unwrap()),
            IntPolynomial::from_integer_roots(&[(10, 1), (1, 14), (-4, 6)])
        );
        assert_eq!(
            char_poly(&hypercube(3).unwrap()),
            IntPolynomial::from_integer_roots(&[(3, 1), (1, 3), (-1, 3), (-3, 1)])
        );
        assert_eq!(char_poly(&Graph::empty(0)), IntPolynomial::one());
    }

    #[test]
    fn hypercube_poly_matches_eigensolver() {
        // independent numeric route
        let q3 = hypercube(3).unwrap();
        let s = hermitian_spectrum(&CMatrix::from_real(&q3.adjacency_matrix()), 1e-7).unwrap();
        let want = [(3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)];
        for ((x, m), (wx, wm)) in s.pairs().iter().zip(want) {
            assert!((x - wx).abs() < 1e-10);
            assert_eq!(*m, wm);
        }
    }

    #[test]
    fn rep_matrix_trivial_character_is_adjacency() {
        let k4 = complete_graph(4).unwrap();
        let f = GainGraph::new(
            k4.clone(),
            GroupSpec::cyclic(3).unwrap(),
            (0..6).map(|i| res(i % 3)).collect(),
        )
        .unwrap();
        let s = rep_matrix(&f, &[0]).unwrap();
        assert_eq!(s.matrix, CMatrix::from_real(&k4.adjacency_matrix()));
        assert_eq!(s.base_valency, Some(3));
        assert!(rep_matrix(&f, &[3]).is_err());
    }

    #[test]
    fn rep_matrix_signed_k3() {
        let f = GainGraph::new(
            complete_graph(3).unwrap(),
            GroupSpec::cyclic(2).unwrap(),
            vec![res(1), res(0), res(0)],
        )
        .unwrap();
        let s = rep_matrix(&f, &[1]).unwrap().matrix;
        let mut minus = 0;
        for i in 0..3 {
            for j in 0..3 {
                assert!((s[(i, j)].im).abs() < 1e-15);
                assert_eq!(s[(i, j)], s[(j, i)]);
                if s[(i, j)].re < -0.5 {
                    minus += 1;
                }
            }
        }
        assert_eq!(minus, 2);
        assert!((s[(0, 1)].re + 1.0).abs() < 1e-15);
    }

    #[test]
    fn permutation_gains_unsupported() {
        let f = GainGraph::trivial(complete_graph(3).unwrap(), GroupSpec::permutation(3).unwrap());
        assert!(matches!(rep_matrix(&f, &[0]), Err(Error::Unsupported(_))));
    }

    #[test]
    fn classify_identity_k3() {
        let f = GainGraph::trivial(complete_graph(3).unwrap(), GroupSpec::cyclic(2).unwrap());
        let c = classify_two_ev(&f).unwrap();
        assert!(c.is_two_ev);
        assert!(!c.cover_connected);
        let e = c.new_eigenvalues.unwrap();
        assert_eq!((e.theta, e.tau, e.mult_theta, e.mult_tau), (2.0, -1.0, 1, 2));
        assert_eq!((e.lambda, e.mu), (1, 2));
    }

    #[test]
    fn classify_signed_cycle5_is_not_two_ev() {
        let mut f = GainGraph::trivial(cycle(5).unwrap(), GroupSpec::cyclic(2).unwrap());
        f.set_gain(0, 1, res(1)).unwrap();
        let c = classify_two_ev(&f).unwrap();
        assert!(!c.is_two_ev);
        assert_eq!(c.distinct_new, 3);
        assert!(c.cover_connected);
    }

    #[test]
    fn minpoly_of_complete_graphs() {
        for n in 2..7 {
            let s = RepMatrix::from_graph(&complete_graph(n).unwrap());
            let m = minpoly_certificate(&s, 1e-7).unwrap().unwrap();
            assert!((m.lambda - (n as f64 - 2.0)).abs() < 1e-9);
            assert!((m.mu - (n as f64 - 1.0)).abs() < 1e-9);
        }
        let c5 = RepMatrix::from_graph(&cycle(5).unwrap());
        assert_eq!(
            minpoly_certificate(&c5, 1e-7).unwrap(),
            Err(MinPolyFailure::NotTwoEigenvalues(3))
        );
    }

    #[test]
    fn character_values_are_roots_of_unity() {
        let z = character_value(&[4], &[1], &res(1));
        assert!((z - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        let w = character_value(&[2, 3], &[1, 1], &GroupElement::Abelian(vec![1, 2]));
        let want = Complex64::from_polar(1.0, 2.0 * PI * (0.5 + 2.0 / 3.0));
        assert!((w - want).norm() < 1e-14);
    }
}
