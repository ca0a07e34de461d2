//! Dense univariate polynomials over ℚ.
//!
//! Used both as the coefficient ring ℚ[α] of [`BiPoly`](super::BiPoly) and
//! as the result of specializing α to a rational value (a polynomial in λ).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Coefficients in ascending degree; never has a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

/// A polynomial in the parameter α.
pub type AlphaPoly = UniPoly;

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(int(c))
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b·x` with integer coefficients.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_coeffs(vec![int(a), int(b)])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Constant polynomial value, if the degree is at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rational::to_f64(c);
        }
        acc
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division over ℚ. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Quotient `self / d`, failing unless the remainder vanishes.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Divisibility("division by zero polynomial".into()));
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Divisibility(format!(
                "({}) is not divisible by ({})",
                self.display('a'),
                d.display('a')
            )))
        }
    }

    /// Power sums `p_k = Σ rootᵢ^k` for `k = 1..=count` via Newton's
    /// identities. Requires a nonzero polynomial.
    pub fn power_sums(&self, count: usize) -> Vec<Rational> {
        let n = self.degree().expect("power sums of zero polynomial");
        let lead = &self.coeffs[n];
        // e-coefficients of the monic polynomial: x^n + a_1 x^{n-1} + ... + a_n
        let a: Vec<Rational> = (0..=n).map(|i| &self.coeffs[n - i] / lead).collect();
        let mut p: Vec<Rational> = Vec::with_capacity(count + 1);
        p.push(int(n as i64));
        for k in 1..=count {
            let mut s = if k <= n {
                -(int(k as i64) * &a[k])
            } else {
                Rational::zero()
            };
            for i in 1..k.min(n + 1) {
                s -= &a[i] * &p[k - i];
            }
            p.push(s);
        }
        p.remove(0);
        p
    }

    pub fn display(&self, var: char) -> Display<'_> {
        Display { poly: self, var }
    }
}

/// Renders the polynomial in ascending degree, e.g. `3 + 6a + 9a^2`.
pub struct Display<'a> {
    poly: &'a UniPoly,
    var: char,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_uni(f, self.poly, self.var)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.display('x'))
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }
    fn is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
}

impl One for UniPoly {
    fn one() -> Self {
        UniPoly::one()
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for UniPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn add_into(acc: &mut Vec<Rational>, other: &[Rational], sign_neg: bool) {
    if acc.len() < other.len() {
        acc.resize(other.len(), Rational::zero());
    }
    for (a, b) in acc.iter_mut().zip(other) {
        if sign_neg {
            *a -= b;
        } else {
            *a += b;
        }
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut v = self.coeffs.clone();
        add_into(&mut v, &rhs.coeffs, false);
        UniPoly::from_coeffs(v)
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut v = self.coeffs.clone();
        add_into(&mut v, &rhs.coeffs, true);
        UniPoly::from_coeffs(v)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        UniPoly::from_coeffs(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Add, add, UniPoly);
forward_owned!(Sub, sub, UniPoly);
forward_owned!(Mul, mul, UniPoly);

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        add_into(&mut self.coeffs, &rhs.coeffs, false);
        let v = std::mem::take(&mut self.coeffs);
        *self = UniPoly::from_coeffs(v);
    }
}

impl SubAssign<&UniPoly> for UniPoly {
    fn sub_assign(&mut self, rhs: &UniPoly) {
        add_into(&mut self.coeffs, &rhs.coeffs, true);
        let v = std::mem::take(&mut self.coeffs);
        *self = UniPoly::from_coeffs(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;

    #[test]
    fn division_round_trip() {
        let p = UniPoly::from_ints(&[-1, 0, 0, 1]); // x^3 - 1
        let d = UniPoly::from_ints(&[-1, 1]);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, UniPoly::from_ints(&[1, 1, 1]));
        assert!(UniPoly::from_ints(&[1, 0, 1]).exact_div(&d).is_err());
    }

    #[test]
    fn power_sums_of_known_roots() {
        // roots 1, 2, 3
        let p = &(&UniPoly::linear(-1, 1) * &UniPoly::linear(-2, 1)) * &UniPoly::linear(-3, 1);
        let s = p.power_sums(4);
        assert_eq!(s, vec![int(6), int(14), int(36), int(98)]);
        // non-monic: 2x - 1 has root 1/2
        let s = UniPoly::linear(-1, 2).power_sums(2);
        assert_eq!(s, vec![rat(1, 2), rat(1, 4)]);
    }
}
