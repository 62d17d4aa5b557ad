//! Dense univariate polynomials over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `x - a`.
    pub fn linear(a: i64) -> Self {
        Self::from_i64s(&[-a, 1])
    }

    /// `prod (x - a)^m` over the given `(a, m)` pairs.
    pub fn from_integer_roots(roots: &[(i64, usize)]) -> Self {
        roots.iter().fold(Self::one(), |acc, &(a, m)| acc.mul(&Self::linear(a).pow(m)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// gcd of the coefficients, non-negative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Division with remainder, valid when every quotient step divides
    /// exactly (always true for a monic divisor). `None` otherwise.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lead = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient `self / d`; `None` if `d` does not divide `self` in
    /// `Z[x]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        match self.div_rem(d)? {
            (q, r) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    /// Pseudo-remainder of `lc(d)^k * self` by `d`, with the multiplier
    /// taken as `|lc(d)|^k` so signs are preserved.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let abs = lead.abs();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            // rem <- |lc| * rem - sign(lc) * top * x^(rd-dd) * d
            let top = rem.leading().unwrap().clone();
            let mut next: Vec<BigInt> = rem.coeffs.iter().map(|c| c * &abs).collect();
            let factor = if lead.is_negative() { -top } else { top };
            for (j, c) in d.coeffs.iter().enumerate() {
                next[rd - dd + j] -= &factor * c;
            }
            rem = Self::new(next);
        }
        rem
    }

    /// Greatest common divisor in `Z[x]`, primitive with positive leading
    /// coefficient (primitive polynomial remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Product of the distinct irreducible factors, primitive.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Number of distinct complex roots.
    pub fn distinct_root_count(&self) -> usize {
        self.square_free_part().degree().unwrap_or(0)
    }

    /// Splits into `(t_1, t_2, ...)` where `t_i` is square-free and holds
    /// exactly the roots of multiplicity `i`.
    pub fn multiplicity_layers(&self) -> Vec<Self> {
        // g_i = gcd(g_{i-1}, g_{i-1}'), s_i = g_{i-1} / g_i collects roots
        // of multiplicity >= i.
        let mut s = Vec::new();
        let mut g = self.primitive_part();
        while g.degree().unwrap_or(0) > 0 {
            let next = g.gcd(&g.derivative());
            s.push(g.div_exact(&next).expect("gcd divides").primitive_part());
            g = next;
        }
        let mut layers = Vec::with_capacity(s.len());
        for i in 0..s.len() {
            let t = match s.get(i + 1) {
                Some(hi) => s[i].div_exact(hi).expect("nested square-free parts").primitive_part(),
                None => s[i].clone(),
            };
            layers.push(t);
        }
        layers
    }

    /// Sign of the value at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone(), self.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].pseudo_rem(&chain[n - 1]);
            // keep the sign of -rem, drop the content
            let r = Self::new(r.coeffs.iter().map(|c| -c).collect());
            let c = r.content();
            if r.is_zero() {
                chain.push(r);
                break;
            }
            chain.push(Self::new(r.coeffs.iter().map(|a| a / &c).collect()));
        }
        chain.pop();
        chain
    }

    fn sign_changes(chain: &[Self], x: &BigRational) -> usize {
        let signs: Vec<i8> = chain.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Real roots of a square-free polynomial, ascending, each refined by
    /// bisection to an interval narrower than `width`.
    pub fn real_roots_square_free(&self, width: f64) -> Vec<f64> {
        let Some(deg) = self.degree() else { return Vec::new() };
        if deg == 0 {
            return Vec::new();
        }
        let lead = self.leading().unwrap().abs();
        let bound = self.coeffs[..deg]
            .iter()
            .map(|c| c.abs().div_ceil(&lead))
            .max()
            .unwrap_or_default()
            + BigInt::one();
        let chain = self.sturm_chain();
        let lo = BigRational::from_integer(-bound.clone());
        let hi = BigRational::from_integer(bound);
        let mut out = Vec::new();
        let mut stack = vec![(lo, hi)];
        let two = BigRational::from_integer(BigInt::from(2));
        // roots in (a, b] = V(a) - V(b)
        while let Some((a, b)) = stack.pop() {
            let count = Self::sign_changes(&chain, &a) - Self::sign_changes(&chain, &b);
            match count {
                0 => {}
                1 => out.push(self.refine(a, b, width)),
                _ => {
                    let mid = (&a + &b) / &two;
                    stack.push((a, mid.clone()));
                    stack.push((mid, b));
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }

    fn refine(&self, mut a: BigRational, mut b: BigRational, width: f64) -> f64 {
        let two = BigRational::from_integer(BigInt::from(2));
        if self.sign_at(&b) == 0 {
            return b.to_f64().unwrap();
        }
        let sb = self.sign_at(&b);
        while (&b - &a).to_f64().unwrap() > width {
            let mid = (&a + &b) / &two;
            let sm = self.sign_at(&mid);
            if sm == 0 {
                return mid.to_f64().unwrap();
            }
            if sm == sb {
                b = mid;
            } else {
                a = mid;
            }
        }
        ((a + b) / two).to_f64().unwrap()
    }

    /// All real roots with multiplicities, descending by value.
    pub fn real_roots(&self, width: f64) -> Vec<(f64, usize)> {
        let mut out = Vec::new();
        for (i, layer) in self.multiplicity_layers().iter().enumerate() {
            out.extend(layer.real_roots_square_free(width).into_iter().map(|x| (x, i + 1)));
        }
        out.sort_by(|a, b| b.0.total_cmp(&a.0));
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}
