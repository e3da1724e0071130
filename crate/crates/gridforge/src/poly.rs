//! Integer Laurent polynomials in one variable.
//!
//! Exponents may be negative, which is all the invariants need: knot
//! polynomials live in `Z[t, 1/t]`. Coefficients are `i64`; the diagrams this
//! crate accepts stay far below the range where that could overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in the variable named by `X`.
///
/// Stored sparsely as exponent -> coefficient with zero coefficients never
/// kept, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct Laurent<const X: char> {
    terms: BTreeMap<i64, i64>,
}

impl<const X: char> Laurent<X> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::term(1, 0)
    }

    /// The single term `coeff * X^exp`.
    pub fn term(coeff: i64, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Sum of `(exp, coeff)` terms; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Terms in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Evaluate at `x`, which must be a unit of `Z` (1 or -1) because of the
    /// negative exponents.
    pub fn eval_unit(&self, x: i64) -> i64 {
        assert!(x == 1 || x == -1, "can only evaluate at 1 or -1");
        self.iter()
            .map(|(e, c)| if x == 1 || e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    /// Substitute `1/X` for `X`.
    pub fn invert_variable(&self) -> Self {
        Self {
            terms: self.iter().map(|(e, c)| (-e, c)).collect(),
        }
    }

    /// Multiply by `X^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.iter().map(|(e, c)| (e + k, c)).collect(),
        }
    }

    pub fn scaled(&self, s: i64) -> Self {
        if s == 0 {
            return Self::zero();
        }
        Self {
            terms: self.iter().map(|(e, c)| (e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; panics if `d` does not divide `self`.
    ///
    /// The fraction-free determinant relies on this: there every division is
    /// exact by construction, so a failed division is a bug, not bad input.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let d_max = d.max_exp().unwrap();
        let d_lead = d.coeff(d_max);
        // the quotient's exponents are bounded below by this if the division
        // is exact, which also bounds the loop
        let q_min = self.min_exp().unwrap() - d.min_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() {
            let r_max = rem.max_exp().unwrap();
            let q_e = r_max - d_max;
            assert!(q_e >= q_min, "inexact polynomial division");
            let r_lead = rem.coeff(r_max);
            assert!(r_lead % d_lead == 0, "inexact polynomial division");
            let t = Self::term(r_lead / d_lead, q_e);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        quot
    }
}

impl<const X: char> Add for &Laurent<X> {
    type Output = Laurent<X>;
    fn add(self, rhs: Self) -> Laurent<X> {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c);
        }
        out
    }
}

impl<const X: char> Sub for &Laurent<X> {
    type Output = Laurent<X>;
    fn sub(self, rhs: Self) -> Laurent<X> {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<const X: char> Mul for &Laurent<X> {
    type Output = Laurent<X>;
    fn mul(self, rhs: Self) -> Laurent<X> {
        let mut out = Laurent::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl<const X: char> Neg for Laurent<X> {
    type Output = Laurent<X>;
    fn neg(self) -> Laurent<X> {
        self.scaled(-1)
    }
}

impl<const X: char> Add for Laurent<X> {
    type Output = Laurent<X>;
    fn add(self, rhs: Self) -> Laurent<X> {
        &self + &rhs
    }
}

impl<const X: char> Sub for Laurent<X> {
    type Output = Laurent<X>;
    fn sub(self, rhs: Self) -> Laurent<X> {
        &self - &rhs
    }
}

impl<const X: char> Mul for Laurent<X> {
    type Output = Laurent<X>;
    fn mul(self, rhs: Self) -> Laurent<X> {
        &self * &rhs
    }
}

/// Terms are printed in decreasing exponent order, e.g. `t^2 - 3*t + 1 - t^-1`.
/// Unit coefficients drop the magnitude except on the constant term.
impl<const X: char> fmt::Display for Laurent<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let show_mag = mag != 1 || e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            if e != 0 {
                if show_mag {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{X}")?;
                } else {
                    write!(f, "{X}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<const X: char> fmt::Debug for Laurent<X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
