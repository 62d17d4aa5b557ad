//! Built-in gain graphs: Huang signings of hypercubes and their
//! Cohen-Tits covers, Butson-Hadamard covers of `K_{q,q}`, the `S_3` cover
//! of `K_5`, and the signed `K_{3n}` non-example.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gain::{CoverGraph, GainGraph};
use crate::graph::{complete_bipartite, complete_graph, hypercube};
use crate::group::{GroupElement, GroupSpec};
use crate::spectral::character_value;

/// Entry `(u, v)` of the recursive signed matrix
/// `A_1 = [[0, 1], [1, 0]]`, `A_n = [[A_{n-1}, I], [I, -A_{n-1}]]`, for an
/// adjacent pair of `Q_n`.
fn huang_sign(n: usize, u: usize, v: usize) -> i8 {
    if n == 1 {
        return 1;
    }
    let top = 1 << (n - 1);
    match (u & top != 0, v & top != 0) {
        (false, false) => huang_sign(n - 1, u, v),
        (true, true) => -huang_sign(n - 1, u ^ top, v ^ top),
        _ => 1,
    }
}

/// Signed hypercube: residue 1 on the `-1` entries of `A_n`.
pub fn huang_signing(n: usize) -> Result<GainGraph> {
    if n == 0 {
        return Err(Error::Parameter("huang signing needs n >= 1".into()));
    }
    let q = hypercube(n)?;
    let z2 = GroupSpec::cyclic(2)?;
    let gains = q
        .edges()
        .iter()
        .map(|&(u, v)| GroupElement::Abelian(vec![usize::from(huang_sign(n, u, v) < 0)]))
        .collect();
    GainGraph::new(q, z2, gains)
}

/// Integer matrix `A_n` read back from the signing.
pub fn huang_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    let f = huang_signing(n)?;
    let size = f.base().n();
    let mut a = vec![vec![0i64; size]; size];
    for (&(u, v), g) in f.base().edges().iter().zip(f.gains()) {
        let s = if *g == GroupElement::Abelian(vec![1]) { -1 } else { 1 };
        a[u][v] = s;
        a[v][u] = s;
    }
    Ok(a)
}

/// The 2-fold cover of `Q_n` defined by the Huang signing.
pub fn cohen_tits_cover(n: usize) -> Result<CoverGraph> {
    if n < 2 {
        return Err(Error::Parameter("cohen-tits cover needs n >= 2".into()));
    }
    Ok(huang_signing(n)?.lift())
}

/// `q x q` matrix of `r`-th roots of unity, stored as residues mod `r`,
/// with pairwise orthogonal rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ButsonMatrix {
    q: usize,
    r: usize,
    entries: Vec<Vec<usize>>,
}

impl ButsonMatrix {
    pub fn new(r: usize, entries: Vec<Vec<usize>>) -> Result<Self> {
        let q = entries.len();
        if q == 0 || r < 2 || entries.iter().any(|row| row.len() != q || row.iter().any(|&x| x >= r)) {
            return Err(Error::Parameter("butson matrix must be square with residues below r".into()));
        }
        let h = ButsonMatrix { q, r, entries };
        // H H* = q I
        for a in 0..q {
            for b in a + 1..q {
                let dot: Complex64 = (0..q)
                    .map(|k| {
                        let d = (h.entries[a][k] + r - h.entries[b][k]) % r;
                        character_value(&[r], &[1], &GroupElement::Abelian(vec![d]))
                    })
                    .sum();
                if dot.norm() > 1e-9 {
                    return Err(Error::Parameter(format!(
                        "rows {a} and {b} are not orthogonal (|<h_a, h_b>| = {:.3e})",
                        dot.norm()
                    )));
                }
            }
        }
        Ok(h)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }
}

/// Fourier matrix: entry `(j, k) = j k mod q`, roots of order `q`.
pub fn fourier_butson(q: usize) -> Result<ButsonMatrix> {
    if q < 2 {
        return Err(Error::Parameter("fourier matrix needs q >= 2".into()));
    }
    ButsonMatrix::new(q, (0..q).map(|j| (0..q).map(|k| j * k % q).collect()).collect())
}

/// Gain on `K_{q,q}`: left vertex `j` to right vertex `q + k` carries
/// `h(j, k)`.
pub fn butson_gain(h: &ButsonMatrix) -> Result<GainGraph> {
    let q = h.q();
    let base = complete_bipartite(q, q)?;
    let group = GroupSpec::cyclic(h.r())?;
    let oriented: Vec<_> = (0..q)
        .flat_map(|j| (0..q).map(move |k| (j, k)))
        .map(|(j, k)| (j, q + k, GroupElement::Abelian(vec![h.entries()[j][k]])))
        .collect();
    GainGraph::from_oriented(base, group, oriented)
}

/// `S_3` acting on three points over `K_5`: vertex 0 joins everything with
/// the identity; the remaining pairs carry the transpositions
/// `t1 = (0 1)`, `t2 = (1 2)`, `t3 = (0 2)`.
pub fn s3_cover_k5() -> GainGraph {
    let base = complete_graph(5).expect("K5");
    let group = GroupSpec::permutation(3).expect("S3");
    let t1 = GroupElement::Perm(vec![1, 0, 2]);
    let t2 = GroupElement::Perm(vec![0, 2, 1]);
    let t3 = GroupElement::Perm(vec![2, 1, 0]);
    let table = [
        (1, 2, &t1),
        (1, 3, &t2),
        (1, 4, &t3),
        (2, 3, &t3),
        (2, 4, &t2),
        (3, 4, &t1),
    ];
    GainGraph::from_oriented(base, group, table.into_iter().map(|(u, v, g)| (u, v, g.clone())))
        .expect("valid transpositions")
}

/// `K_{3n}` over `Z_2`, residue 1 exactly on the `K_{n,n}` between
/// `{0..n-1}` and `{n..2n-1}`.
pub fn k3n_nonexample(n: usize) -> Result<GainGraph> {
    if n == 0 {
        return Err(Error::Parameter("k3n non-example needs n >= 1".into()));
    }
    let base = complete_graph(3 * n)?;
    let group = GroupSpec::cyclic(2)?;
    let oriented: Vec<_> = (0..n)
        .flat_map(|u| (n..2 * n).map(move |v| (u, v, GroupElement::Abelian(vec![1]))))
        .collect();
    GainGraph::from_oriented(base, group, oriented)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::hermitian::hermitian_spectrum;
    use crate::spectral::rep_matrix;

    #[test]
    fn huang_base_case() {
        let f = huang_signing(1).unwrap();
        assert_eq!(f.base().edge_count(), 1);
        assert_eq!(f.gains(), &[GroupElement::Abelian(vec![0])]);
        assert_eq!(huang_matrix(1).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert!(huang_signing(0).is_err());
    }

    #[test]
    fn huang_matrix_matches_recursion() {
        // build A_n directly from the block recursion
        let mut a: Vec<Vec<i64>> = vec![vec![0, 1], vec![1, 0]];
        for n in 2..=5 {
            let m = a.len();
            let mut next = vec![vec![0i64; 2 * m]; 2 * m];
            for i in 0..m {
                for j in 0..m {
                    next[i][j] = a[i][j];
                    next[m + i][m + j] = -a[i][j];
                }
                next[i][m + i] = 1;
                next[m + i][i] = 1;
            }
            a = next;
            assert_eq!(huang_matrix(n).unwrap(), a, "n = {n}");
        }
    }

    fn four_cycles(g: &Graph) -> Vec<[usize; 4]> {
        let mut out = Vec::new();
        for a in 0..g.n() {
            for &b in g.neighbors(a) {
                for &c in g.neighbors(b) {
                    for &d in g.neighbors(c) {
                        // each cycle once: a smallest, b < d
                        if c != a && d != b && g.has_edge(d, a) && a < b && a < c && a < d && b < d {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn huang_four_cycles_are_odd() {
        let f = huang_signing(4).unwrap();
        let cycles = four_cycles(f.base());
        // Q4 has 24 four-cycles
        assert_eq!(cycles.len(), 24);
        for cyc in cycles {
            let odd = (0..4)
                .filter(|&i| f.gain(cyc[i], cyc[(i + 1) % 4]) == Some(GroupElement::Abelian(vec![1])))
                .count();
            assert_eq!(odd % 2, 1, "{cyc:?}");
        }
    }

    #[test]
    fn huang_rep_matrix_squares_to_n() {
        let s = rep_matrix(&huang_signing(3).unwrap(), &[1]).unwrap();
        let sq = s.matrix.mul(&s.matrix);
        for i in 0..8 {
            for j in 0..8 {
                let want = if i == j { 3.0 } else { 0.0 };
                assert!((sq[(i, j)] - Complex64::new(want, 0.0)).norm() < 1e-12);
            }
        }
        let spec = hermitian_spectrum(&s.matrix, 1e-7).unwrap();
        assert_eq!(spec.distinct(), 2);
        assert!((spec.pairs()[0].0 - 3f64.sqrt()).abs() < 1e-9);
        assert_eq!(spec.pairs()[0].1, 4);
    }

    #[test]
    fn cohen_tits_small_cases() {
        let c2 = cohen_tits_cover(2).unwrap();
        assert_eq!(c2.graph().regular_degree(), Some(2));
        assert_eq!(c2.graph().girth(), Some(8));
        assert!(c2.is_connected());
        let c3 = cohen_tits_cover(3).unwrap();
        assert_eq!((c3.graph().n(), c3.graph().girth()), (16, Some(6)));
        assert!(cohen_tits_cover(1).is_err());
    }

    #[test]
    fn butson_validation() {
        let f3 = fourier_butson(3).unwrap();
        assert_eq!(f3.entries()[2], vec![0, 2, 1]);
        assert!(ButsonMatrix::new(2, vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(ButsonMatrix::new(2, vec![vec![0, 0], vec![0, 1]]).is_ok());
        assert!(ButsonMatrix::new(2, vec![vec![0, 2], vec![0, 1]]).is_err());
        let g = butson_gain(&fourier_butson(2).unwrap()).unwrap();
        let lift = g.lift();
        assert_eq!(lift.graph().n(), 8);
        assert_eq!(lift.graph().girth(), Some(8));
    }

    #[test]
    fn s3_gain_layout() {
        let f = s3_cover_k5();
        assert_eq!(f.gain(0, 3), Some(GroupElement::Perm(vec![0, 1, 2])));
        assert_eq!(f.gain(4, 1), Some(GroupElement::Perm(vec![2, 1, 0])));
        assert_eq!(f.gain(3, 2), Some(GroupElement::Perm(vec![2, 1, 0])));
        let lift = f.lift();
        assert_eq!((lift.graph().n(), lift.graph().regular_degree()), (15, Some(4)));
        assert!(lift.is_cover_of(f.base()));
    }

    #[test]
    fn k3n_layout() {
        let f = k3n_nonexample(2).unwrap();
        let ones = f.gains().iter().filter(|g| **g == GroupElement::Abelian(vec![1])).count();
        assert_eq!(ones, 4);
        assert_eq!(f.gain(1, 3), Some(GroupElement::Abelian(vec![1])));
        assert_eq!(f.gain(0, 1), Some(GroupElement::Abelian(vec![0])));
        assert_eq!(f.gain(4, 5), Some(GroupElement::Abelian(vec![0])));
    }
}
