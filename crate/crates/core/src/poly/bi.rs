//! Dense polynomials in ℚ[α][λ].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use super::uni::{forward_owned, AlphaPoly, UniPoly};
use crate::error::{Error, Result};

/// A polynomial in λ whose coefficients are polynomials in α.
///
/// Coefficients are stored in ascending powers of λ; the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    coeffs: Vec<AlphaPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_alpha(AlphaPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_alpha(AlphaPoly::from_int(c))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_alpha(AlphaPoly::constant(c))
    }

    pub fn from_alpha(a: AlphaPoly) -> Self {
        Self::from_coeffs(vec![a])
    }

    /// λ
    pub fn lambda() -> Self {
        Self::from_coeffs(vec![AlphaPoly::zero(), AlphaPoly::one()])
    }

    /// α
    pub fn alpha() -> Self {
        Self::from_alpha(AlphaPoly::x())
    }

    /// Lifts a polynomial in λ with rational coefficients.
    pub fn from_lambda_poly(p: &UniPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(AlphaPoly::constant).collect())
    }

    pub fn from_coeffs(mut coeffs: Vec<AlphaPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[AlphaPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lambda_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest α-degree over all coefficients.
    pub fn alpha_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    pub fn coeff(&self, k: usize) -> AlphaPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&AlphaPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &AlphaPoly) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
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

    /// Specializes α to `a`, leaving a polynomial in λ over ℚ.
    pub fn eval_alpha(&self, a: &Rational) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| c.eval(a)).collect())
    }

    /// Returns `den^clear_power · p(num/den)`.
    ///
    /// Computed as `Σ cₖ · numᵏ · den^(clear_power−k)`, so no rational
    /// functions are formed. `den` may involve λ as well as α.
    ///
    /// Panics if `clear_power` is below the λ-degree of `self`.
    pub fn substitute_lambda(&self, num: &BiPoly, den: &BiPoly, clear_power: usize) -> BiPoly {
        let deg = match self.lambda_degree() {
            Some(d) => d,
            None => return BiPoly::zero(),
        };
        assert!(
            clear_power >= deg,
            "clear_power {clear_power} below polynomial degree {deg}"
        );
        // den powers from 0..=clear_power, num powers from 0..=deg
        let mut den_pows = Vec::with_capacity(clear_power + 1);
        den_pows.push(BiPoly::one());
        for k in 1..=clear_power {
            den_pows.push(&den_pows[k - 1] * den);
        }
        let mut acc = BiPoly::zero();
        let mut num_pow = BiPoly::one();
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                num_pow = &num_pow * num;
            }
            if c.is_zero() {
                continue;
            }
            let term = (&num_pow * &den_pows[clear_power - k]).scale(c);
            acc += &term;
        }
        acc
    }

    /// `p(λ + shift)` for an α-dependent shift.
    pub fn shift_lambda(&self, shift: &BiPoly) -> BiPoly {
        let deg = self.lambda_degree().unwrap_or(0);
        self.substitute_lambda(&(&BiPoly::lambda() + shift), &BiPoly::one(), deg)
    }

    /// Exact quotient `self / d` in ℚ[α][λ].
    ///
    /// Long division in λ where every leading-coefficient quotient must
    /// itself be an exact division in ℚ[α]; any nonzero remainder is a
    /// divisibility error.
    pub fn exact_div(&self, d: &BiPoly) -> Result<BiPoly> {
        let dd = d
            .lambda_degree()
            .ok_or_else(|| Error::Divisibility("division by the zero polynomial".into()))?;
        if self.is_zero() {
            return Ok(BiPoly::zero());
        }
        let fail = || {
            Error::Divisibility(format!(
                "{} is not divisible by {}",
                super::text::short(self),
                super::text::short(d)
            ))
        };
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Err(fail());
        }
        let lead = &d.coeffs[dd];
        let mut quot = vec![AlphaPoly::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            if rem[k + dd].is_zero() {
                continue;
            }
            let c = rem[k + dd].exact_div(lead).map_err(|_| fail())?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(fail());
        }
        Ok(BiPoly::from_coeffs(quot))
    }

    /// True when `d` divides `self` exactly.
    pub fn divisible_by(&self, d: &BiPoly) -> bool {
        self.exact_div(d).is_ok()
    }

    /// Largest `k` such that `d^k` divides `self` (for nonzero `self` and a
    /// non-unit `d` of positive λ-degree).
    pub fn multiplicity_of(&self, d: &BiPoly) -> usize {
        let mut k = 0;
        let mut cur = self.clone();
        if cur.is_zero() || d.lambda_degree().unwrap_or(0) == 0 {
            return 0;
        }
        while let Ok(q) = cur.exact_div(d) {
            k += 1;
            cur = q;
        }
        k
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_bi(f, self)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        BiPoly::is_zero(self)
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl From<AlphaPoly> for BiPoly {
    fn from(a: AlphaPoly) -> Self {
        BiPoly::from_alpha(a)
    }
}

impl From<i64> for BiPoly {
    fn from(c: i64) -> Self {
        BiPoly::from_int(c)
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

fn combine(a: &[AlphaPoly], b: &[AlphaPoly], neg: bool) -> Vec<AlphaPoly> {
    let mut v: Vec<AlphaPoly> = a.to_vec();
    if v.len() < b.len() {
        v.resize(b.len(), AlphaPoly::zero());
    }
    for (x, y) in v.iter_mut().zip(b) {
        if neg {
            *x -= y;
        } else {
            *x += y;
        }
    }
    v
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_coeffs(combine(&self.coeffs, &rhs.coeffs, false))
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_coeffs(combine(&self.coeffs, &rhs.coeffs, true))
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut v = vec![AlphaPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += &(a * b);
                }
            }
        }
        BiPoly::from_coeffs(v)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

forward_owned!(Add, add, BiPoly);
forward_owned!(Sub, sub, BiPoly);
forward_owned!(Mul, mul, BiPoly);

impl AddAssign<&BiPoly> for BiPoly {
    fn add_assign(&mut self, rhs: &BiPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&BiPoly> for BiPoly {
    fn sub_assign(&mut self, rhs: &BiPoly) {
        *self = &*self - rhs;
    }
}

// Integer scalars keep closed-form formulas readable: `lam() - alpha() * 3 + 1`.
impl Add<i64> for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: i64) -> BiPoly {
        &self + &BiPoly::from_int(rhs)
    }
}

impl Sub<i64> for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: i64) -> BiPoly {
        &self - &BiPoly::from_int(rhs)
    }
}

impl Mul<i64> for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: i64) -> BiPoly {
        self.scale(&AlphaPoly::constant(int(rhs)))
    }
}

impl Mul<i64> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: i64) -> BiPoly {
        self.scale(&AlphaPoly::constant(int(rhs)))
    }
}

impl Sub<BiPoly> for i64 {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &BiPoly::from_int(self) - &rhs
    }
}

/// λ
pub fn lam() -> BiPoly {
    BiPoly::lambda()
}

/// α
pub fn alpha() -> BiPoly {
    BiPoly::alpha()
}

/// Integer constant as a [`BiPoly`].
pub fn konst(c: i64) -> BiPoly {
    BiPoly::from_int(c)
}
