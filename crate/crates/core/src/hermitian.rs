//! Dense complex Hermitian matrices and a cyclic Jacobi eigensolver.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_CLUSTER_TOL: f64 = 1e-7;
const MAX_SWEEPS: usize = 100;

#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = Self::zeros(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = Complex64::new(x as f64, 0.0);
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest `|m(i,j) - conj(m(j,i))|`.
    pub fn hermitian_deviation(&self) -> f64 {
        let mut dev = 0.0f64;
        for i in 0..self.n {
            for j in i..self.n {
                dev = dev.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        dev
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// `sum c_i * M_i` over equally sized matrices.
    pub fn combine(terms: &[(Complex64, &CMatrix)]) -> CMatrix {
        let n = terms.first().map_or(0, |t| t.1.n);
        let mut out = CMatrix::zeros(n);
        for (c, m) in terms {
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                *o += c * x;
            }
        }
        out
    }

    /// Eigenvalues, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        let norm = self.frobenius_norm();
        let dev = self.hermitian_deviation();
        if dev > 10.0 * f64::EPSILON * norm.max(1.0) {
            return Err(Error::NotHermitian(dev));
        }
        let mut vals = jacobi_eigenvalues(self.clone())?;
        vals.sort_by(|a, b| b.total_cmp(a));
        Ok(vals)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.n + j]
    }
}

/// Cyclic Jacobi with complex rotations. Each rotation is a phase on
/// column `q` (making the pivot real) followed by a real Givens rotation.
fn jacobi_eigenvalues(mut a: CMatrix) -> Result<Vec<f64>> {
    let n = a.n;
    let scale = a.frobenius_norm();
    if n == 0 {
        return Ok(Vec::new());
    }
    for i in 0..n {
        let d = a[(i, i)].re;
        a[(i, i)] = Complex64::new(d, 0.0);
    }
    if scale == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = (n as f64 * f64::EPSILON * scale).powi(2);
    for _sweep in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].norm_sqr())
            .sum();
        if off <= target {
            return Ok((0..n).map(|i| a[(i, i)].re).collect());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}

fn rotate(a: &mut CMatrix, p: usize, q: usize) {
    let n = a.n;
    let g = a[(p, q)];
    let mag = g.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip pivots that are negligible against both diagonal entries.
    if mag < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    // phase = conj(g)/|g| makes the (p,q) entry real after scaling column q
    let phase = g.conj() / mag;
    let theta = (aqq - app) / (2.0 * mag);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // J = D P with D = diag(1, phase) on (p,q), P the real rotation
    // [[c, s], [-s, c]]; columns: J[:,p] = (c, -s*phase), J[:,q] = (s, c*phase).
    let jpp = Complex64::new(c, 0.0);
    let jqp = -phase * s;
    let jpq = Complex64::new(s, 0.0);
    let jqq = phase * c;
    // A <- A J (columns p, q)
    for k in 0..n {
        let akp = a.data[k * n + p];
        let akq = a.data[k * n + q];
        a.data[k * n + p] = akp * jpp + akq * jqp;
        a.data[k * n + q] = akp * jpq + akq * jqq;
    }
    // A <- J^H A (rows p, q)
    for k in 0..n {
        let apk = a.data[p * n + k];
        let aqk = a.data[q * n + k];
        a.data[p * n + k] = jpp.conj() * apk + jqp.conj() * aqk;
        a.data[q * n + k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    let dp = a[(p, p)].re;
    let dq = a[(q, q)].re;
    a[(p, p)] = Complex64::new(dp, 0.0);
    a[(q, q)] = Complex64::new(dq, 0.0);
}

/// Eigenvalue multiset as `(value, multiplicity)` pairs, descending.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
}

impl Spectrum {
    /// Groups sorted-or-unsorted values: neighbours closer than `gap`
    /// (absolute) fall into the same cluster, whose value is the mean.
    pub fn cluster(values: &[f64], gap: f64) -> Self {
        let mut v: Vec<f64> = values.to_vec();
        v.sort_by(|a, b| b.total_cmp(a));
        let mut pairs: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut prev = f64::NAN;
        for x in v {
            match pairs.last_mut() {
                Some(last) if (prev - x).abs() <= gap => {
                    sum += x;
                    last.1 += 1;
                    last.0 = sum / last.1 as f64;
                }
                _ => {
                    sum = x;
                    pairs.push((x, 1));
                }
            }
            prev = x;
        }
        Spectrum { pairs }
    }

    pub fn from_pairs(mut pairs: Vec<(f64, usize)>) -> Self {
        pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
        Spectrum { pairs }
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn distinct(&self) -> usize {
        self.pairs.len()
    }

    pub fn dimension(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// Multiset union; clusters closer than `gap` are merged.
    pub fn union(&self, other: &Spectrum, gap: f64) -> Spectrum {
        let values: Vec<f64> = self
            .expanded()
            .into_iter()
            .chain(other.expanded())
            .collect();
        Spectrum::cluster(&values, gap)
    }

    /// Every value repeated by its multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|&(x, m)| std::iter::repeat_n(x, m))
            .collect()
    }

    /// Same multiplicities and values within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.pairs.len() == other.pairs.len()
            && self
                .pairs
                .iter()
                .zip(&other.pairs)
                .all(|(a, b)| a.1 == b.1 && (a.0 - b.0).abs() <= tol)
    }
}

/// Eigenvalues of a Hermitian matrix, clustered: two eigenvalues merge iff
/// they differ by at most `tol * max(1, ||m||)`, where `||m||` is the
/// spectral radius.
pub fn hermitian_spectrum(m: &CMatrix, tol: f64) -> Result<Spectrum> {
    let vals = m.eigenvalues()?;
    let radius = vals.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    Ok(Spectrum::cluster(&vals, tol * radius.max(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zero_matrix() {
        let s = hermitian_spectrum(&CMatrix::zeros(4), DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(s.pairs(), &[(0.0, 4)]);
    }

    #[test]
    fn cycle5_closed_form() {
        let c5 = crate::graph::cycle(5).unwrap();
        let s = hermitian_spectrum(&CMatrix::from_real(&c5.adjacency_matrix()), 1e-7).unwrap();
        let want = [
            (2.0, 1),
            (2.0 * (2.0 * PI / 5.0).cos(), 2),
            (2.0 * (4.0 * PI / 5.0).cos(), 2),
        ];
        assert_eq!(s.distinct(), 3);
        for ((x, m), (wx, wm)) in s.pairs().iter().zip(want) {
            assert!((x - wx).abs() < 1e-12, "{x} vs {wx}");
            assert_eq!(*m, wm);
        }
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 2 and 0
        let mut m = CMatrix::zeros(2);
        m[(0, 0)] = Complex64::new(1.0, 0.0);
        m[(1, 1)] = Complex64::new(1.0, 0.0);
        m[(0, 1)] = Complex64::new(0.0, 1.0);
        m[(1, 0)] = Complex64::new(0.0, -1.0);
        let v = m.eigenvalues().unwrap();
        assert!((v[0] - 2.0).abs() < 1e-14 && v[1].abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = CMatrix::zeros(2);
        m[(0, 1)] = Complex64::new(1.0, 0.0);
        assert!(matches!(m.eigenvalues(), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn clustering_merges_chains() {
        let s = Spectrum::cluster(&[1.0, 1.0 + 1e-9, 3.0, -1.0, 1.0 - 1e-9], 1e-7);
        assert_eq!(s.pairs().len(), 3);
        assert_eq!(s.pairs()[1].1, 3);
        assert_eq!(s.dimension(), 5);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_hermitian() -> impl Strategy<Value = CMatrix> {
            (1usize..7).prop_flat_map(|n| {
                proptest::collection::vec((-3.0f64..3.0, -3.0f64..3.0), n * n).prop_map(move |v| {
                    let mut m = CMatrix::zeros(n);
                    for i in 0..n {
                        for j in i..n {
                            let (re, im) = v[i * n + j];
                            if i == j {
                                m[(i, i)] = Complex64::new(re, 0.0);
                            } else {
                                m[(i, j)] = Complex64::new(re, im);
                                m[(j, i)] = Complex64::new(re, -im);
                            }
                        }
                    }
                    m
                })
            })
        }

        proptest! {
            #[test]
            fn trace_and_frobenius_preserved(m in arb_hermitian()) {
                let vals = m.eigenvalues().unwrap();
                let trace: f64 = (0..m.n()).map(|i| m[(i, i)].re).sum();
                let sum: f64 = vals.iter().sum();
                prop_assert!((trace - sum).abs() < 1e-9);
                let fro2: f64 = vals.iter().map(|x| x * x).sum();
                prop_assert!((fro2 - m.frobenius_norm().powi(2)).abs() < 1e-8);
            }

            #[test]
            fn eigenvalues_are_roots(m in arb_hermitian()) {
                // det(M - x I) vanishes: check via trace of powers
                let vals = m.eigenvalues().unwrap();
                let m2 = m.mul(&m);
                let tr2: f64 = (0..m.n()).map(|i| m2[(i, i)].re).sum();
                let sum2: f64 = vals.iter().map(|x| x * x).sum();
                prop_assert!((tr2 - sum2).abs() < 1e-8);
            }
        }
    }
}
