//! Sparse Laurent polynomials in one variable `u` with arbitrary-precision
//! integer coefficients.
//!
//! These carry every graded quantity in the crate: fake degrees `f_σ(u)`,
//! Hilbert series, and the coefficient polynomials `g_λ(u)` of graded
//! characters.  The representation is a `BTreeMap` from exponent to nonzero
//! coefficient, so iteration is always in ascending exponent order and
//! printing is canonical.  All arithmetic is exact.

use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `Σ c_k u^k`, `c_k ∈ Z`, finitely many nonzero.
///
/// Invariant: no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    /// The monomial `c·u^k`; the zero polynomial if `c = 0`.
    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `u^k` (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Smallest exponent with nonzero coefficient.
    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Largest exponent with nonzero coefficient.
    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    /// Substitute `u → u⁻¹`, i.e. negate every exponent.
    pub fn reverse(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    /// Drop all terms of exponent `> max_degree`.
    pub fn truncate_above(&self, max_degree: i64) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e <= max_degree)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// Evaluate at `u = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// True if every coefficient is `≥ 0`.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.coeffs {
            self.add_term(e, -c.clone());
        }
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// The q-integer `[k]_u = 1 + u + … + u^{k-1}`.
pub fn q_int(k: usize) -> LaurentPolynomial {
    LaurentPolynomial::from_terms((0..k as i64).map(|e| (e, BigInt::one())))
}

/// The q-factorial `[m]_u! = Π_{i=1}^{m} [i]_u`, the Hilbert series of the
/// coinvariant ring `A_m^coin`.
pub fn q_factorial(m: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::one();
    for i in 1..=m {
        out = &out * &q_int(i);
    }
    out
}

/// The Hilbert series `H(A_m) = Π_{i=1}^{m} (1 - u^i)^{-1}` of the ring of
/// symmetric polynomials, truncated above `u^max_degree`.
pub fn symmetric_hilbert_truncated(m: usize, max_degree: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::one();
    for i in 1..=m as i64 {
        // 1/(1-u^i) = 1 + u^i + u^{2i} + …
        let geo = LaurentPolynomial::from_terms(
            (0..=max_degree / i).map(|k| (k * i, BigInt::one())),
        );
        out = (&out * &geo).truncate_above(max_degree);
    }
    out
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.magnitude();
            let sign_str = if first {
                if c.is_negative() {
                    "-"
                } else {
                    ""
                }
            } else if c.is_negative() {
                " - "
            } else {
                " + "
            };
            let body: String = if e == 0 {
                alloc::format!("{mag}")
            } else {
                let var = if e == 1 {
                    String::from("u")
                } else {
                    alloc::format!("u^{e}")
                };
                if mag.is_one() {
                    var
                } else {
                    alloc::format!("{mag}*{var}")
                }
            };
            write!(f, "{sign_str}{body}")?;
            first = false;
        }
        Ok(())
    }
}
