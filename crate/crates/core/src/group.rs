//! Finite gain groups: products of cyclic groups and symmetric groups
//! acting on `{0, .., r-1}`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `Z_{r1} x ... x Z_{rm}`; a single cyclic group is a one-entry list.
    Abelian(Vec<usize>),
    /// The symmetric group of the given degree, acting on points.
    Permutation(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Residues, one per cyclic factor.
    Abelian(Vec<usize>),
    /// One-line image list: point `i` goes to `images[i]`.
    Perm(Vec<usize>),
}

impl GroupSpec {
    pub fn cyclic(r: usize) -> Result<Self> {
        Self::abelian(vec![r])
    }

    pub fn abelian(orders: Vec<usize>) -> Result<Self> {
        if orders.is_empty() || orders.iter().any(|&r| r < 2) {
            return Err(Error::Parameter(format!(
                "abelian group needs cyclic orders >= 2, got {orders:?}"
            )));
        }
        Ok(GroupSpec::Abelian(orders))
    }

    pub fn permutation(degree: usize) -> Result<Self> {
        if !(2..=12).contains(&degree) {
            return Err(Error::Parameter(format!(
                "permutation degree must be in 2..=12, got {degree}"
            )));
        }
        Ok(GroupSpec::Permutation(degree))
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupSpec::Abelian(_))
    }

    /// Cyclic order when the group is a single cyclic factor.
    pub fn cyclic_order(&self) -> Option<usize> {
        match self {
            GroupSpec::Abelian(o) if o.len() == 1 => Some(o[0]),
            _ => None,
        }
    }

    /// Number of elements of the group.
    pub fn order(&self) -> u128 {
        match self {
            GroupSpec::Abelian(o) => o.iter().map(|&r| r as u128).product(),
            GroupSpec::Permutation(d) => (1..=*d as u128).product(),
        }
    }

    /// Fiber size of a lift: the group order for the regular action of an
    /// abelian group, the degree for a permutation group.
    pub fn sheets(&self) -> usize {
        match self {
            GroupSpec::Abelian(o) => o.iter().product(),
            GroupSpec::Permutation(d) => *d,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self {
            GroupSpec::Abelian(o) => GroupElement::Abelian(vec![0; o.len()]),
            GroupSpec::Permutation(d) => GroupElement::Perm((0..*d).collect()),
        }
    }

    pub fn validate(&self, g: &GroupElement) -> Result<()> {
        match (self, g) {
            (GroupSpec::Abelian(o), GroupElement::Abelian(x)) => {
                if x.len() != o.len() || x.iter().zip(o).any(|(&a, &r)| a >= r) {
                    return Err(Error::Group(format!("{g} is not an element of {self}")));
                }
            }
            (GroupSpec::Permutation(d), GroupElement::Perm(p)) => {
                let mut seen = vec![false; *d];
                if p.len() != *d {
                    return Err(Error::Group(format!("{g} has degree {} not {d}", p.len())));
                }
                for &i in p {
                    if i >= *d || std::mem::replace(&mut seen[i], true) {
                        return Err(Error::Group(format!("{g} is not a permutation")));
                    }
                }
            }
            _ => return Err(Error::Group(format!("{g} does not belong to {self}"))),
        }
        Ok(())
    }

    /// Group product `a * b` (apply `b` first for permutations).
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match (self, a, b) {
            (GroupSpec::Abelian(o), GroupElement::Abelian(x), GroupElement::Abelian(y)) => {
                GroupElement::Abelian(
                    x.iter().zip(y).zip(o).map(|((&p, &q), &r)| (p + q) % r).collect(),
                )
            }
            (GroupSpec::Permutation(_), GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(q.iter().map(|&i| p[i]).collect())
            }
            _ => panic!("compose: element kind does not match {self}"),
        }
    }

    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        match (self, a) {
            (GroupSpec::Abelian(o), GroupElement::Abelian(x)) => {
                GroupElement::Abelian(x.iter().zip(o).map(|(&p, &r)| (r - p) % r).collect())
            }
            (GroupSpec::Permutation(_), GroupElement::Perm(p)) => {
                let mut inv = vec![0; p.len()];
                for (i, &pi) in p.iter().enumerate() {
                    inv[pi] = i;
                }
                GroupElement::Perm(inv)
            }
            _ => panic!("inverse: element kind does not match {self}"),
        }
    }

    /// Sheet reached from `sheet` under `g`. Abelian sheets are group
    /// elements in lexicographic order and `g` acts by translation.
    pub fn act(&self, g: &GroupElement, sheet: usize) -> usize {
        match (self, g) {
            (GroupSpec::Abelian(o), GroupElement::Abelian(x)) => {
                let mut rest = sheet;
                let mut out = 0;
                let mut stride = 1;
                for (&r, &gi) in o.iter().zip(x).rev() {
                    let digit = rest % r;
                    rest /= r;
                    out += ((digit + gi) % r) * stride;
                    stride *= r;
                }
                out
            }
            (GroupSpec::Permutation(_), GroupElement::Perm(p)) => p[sheet],
            _ => panic!("act: element kind does not match {self}"),
        }
    }

    /// Abelian element with lexicographic index `idx`.
    pub fn abelian_element(&self, mut idx: usize) -> GroupElement {
        let GroupSpec::Abelian(o) = self else {
            panic!("abelian_element on {self}");
        };
        let mut x = vec![0; o.len()];
        for (slot, &r) in x.iter_mut().zip(o).rev() {
            *slot = idx % r;
            idx /= r;
        }
        GroupElement::Abelian(x)
    }

    /// All elements, lexicographically ordered.
    pub fn elements(&self) -> Vec<GroupElement> {
        match self {
            GroupSpec::Abelian(_) => (0..self.sheets()).map(|i| self.abelian_element(i)).collect(),
            GroupSpec::Permutation(d) => {
                let mut out = Vec::new();
                let mut p: Vec<usize> = (0..*d).collect();
                loop {
                    out.push(GroupElement::Perm(p.clone()));
                    // next permutation in lexicographic order
                    let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
                        return out;
                    };
                    let j = (i + 1..*d).rev().find(|&j| p[j] > p[i]).unwrap();
                    p.swap(i, j);
                    p[i + 1..].reverse();
                }
            }
        }
    }

    pub fn is_identity(&self, g: &GroupElement) -> bool {
        *g == self.identity()
    }

    /// Parses the element token(s) of a gain-file edge line.
    pub fn parse_element(&self, toks: &[&str]) -> Result<GroupElement> {
        let list = |s: &str| -> Result<Vec<usize>> {
            s.split(',')
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Group(format!("bad residue `{t}`")))
                })
                .collect()
        };
        let g = match (self, toks) {
            (GroupSpec::Abelian(_), [one]) => GroupElement::Abelian(list(one)?),
            (GroupSpec::Permutation(_), ["perm", imgs]) => GroupElement::Perm(list(imgs)?),
            _ => {
                return Err(Error::Group(format!(
                    "cannot read `{}` as an element of {self}",
                    toks.join(" ")
                )))
            }
        };
        self.validate(&g)?;
        Ok(g)
    }

    pub fn parse_header(toks: &[&str]) -> Result<Self> {
        let nums = |ts: &[&str]| -> Result<Vec<usize>> {
            ts.iter()
                .map(|t| t.parse().map_err(|_| Error::Group(format!("bad order `{t}`"))))
                .collect()
        };
        match toks {
            ["cyclic", r] => GroupSpec::cyclic(nums(&[r])?[0]),
            ["abelian", rest @ ..] if !rest.is_empty() => GroupSpec::abelian(nums(rest)?),
            ["perm", d] => GroupSpec::permutation(nums(&[d])?[0]),
            _ => Err(Error::Group(format!("unknown group `{}`", toks.join(" ")))),
        }
    }
}

impl fmt::Display for GroupSpec {
    /// Gain-file header form (without the leading `group`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Abelian(o) if o.len() == 1 => write!(f, "cyclic {}", o[0]),
            GroupSpec::Abelian(o) => {
                write!(f, "abelian")?;
                o.iter().try_for_each(|r| write!(f, " {r}"))
            }
            GroupSpec::Permutation(d) => write!(f, "perm {d}"),
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for GroupElement {
    /// Gain-file form: `1` or `1,0` for abelian, `perm 1,0,2` for permutations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Abelian(x) => f.write_str(&join(x)),
            GroupElement::Perm(p) => write!(f, "perm {}", join(p)),
        }
    }
}
