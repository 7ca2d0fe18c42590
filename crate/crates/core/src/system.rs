//! Periodic complex bases `z` with `z^2 = D z - n`, the lattice `Z + zZ`
//! and evaluation of digit strings.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A periodic complex-base numeral system with `n` digits and trace `D`.
///
/// The base is `z = D/2 + i sqrt(n - D^2/4)`, so `|z|^2 = n` and
/// `z^2 = D z - n`. Only the integer pair `(n, D)` is used by the exact
/// lattice routines; the floating `z` is for measurement and rendering.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct System {
    n: i64,
    d: i64,
    z: Complex64,
}

impl System {
    pub fn new(n: i64, d: i64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSystem { n, d, reason: "need n >= 2" });
        }
        let disc = d
            .checked_mul(d)
            .and_then(|dd| n.checked_mul(4).map(|n4| (dd, n4)));
        match disc {
            Some((dd, n4)) if dd < n4 => {}
            _ => {
                return Err(Error::InvalidSystem {
                    n,
                    d,
                    reason: "need D^2 < 4n so that z is not real",
                })
            }
        }
        let re = d as f64 / 2.0;
        let im = (n as f64 - re * re).sqrt();
        Ok(System { n, d, z: Complex64::new(re, im) })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Argument of `z`, in `(0, pi)`.
    pub fn phi(&self) -> f64 {
        self.z.arg()
    }

    pub fn sqrt_n(&self) -> f64 {
        (self.n as f64).sqrt()
    }

    /// `z * (a + b z) = -n b + (a + D b) z`.
    pub fn mul_z(&self, x: LatticePoint) -> Result<LatticePoint> {
        let a = self.n.checked_mul(x.b).and_then(i64::checked_neg).ok_or(Error::Overflow)?;
        let b = self
            .d
            .checked_mul(x.b)
            .and_then(|db| x.a.checked_add(db))
            .ok_or(Error::Overflow)?;
        Ok(LatticePoint::new(a, b))
    }

    pub fn z_pow(&self, k: u32) -> Result<LatticePoint> {
        (0..k).try_fold(LatticePoint::ONE, |acc, _| self.mul_z(acc))
    }

    pub fn to_complex(&self, x: LatticePoint) -> Complex64 {
        x.a as f64 + self.z * x.b as f64
    }

    /// Sum of `digit_i * z^(i + offset)` by Horner's scheme.
    pub fn eval_digits<E: Expansion + ?Sized>(&self, r: &E) -> Complex64 {
        eval_expansion(self.z, r.coefficients(), r.offset())
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, D={})", self.n, self.d)
    }
}

/// Horner evaluation of `sum c_i z^(i + offset)` for an arbitrary base.
pub fn eval_expansion(z: Complex64, coefficients: &[i64], offset: i32) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coefficients.iter().rev() {
        acc = acc * z + c as f64;
    }
    acc * z.powi(offset)
}

/// Exact element `a + b z` of the lattice `X = Z + zZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct LatticePoint {
    pub a: i64,
    pub b: i64,
}

impl LatticePoint {
    pub const ZERO: LatticePoint = LatticePoint { a: 0, b: 0 };
    pub const ONE: LatticePoint = LatticePoint { a: 1, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        LatticePoint { a, b }
    }

    pub fn checked_add(self, o: LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint {
            a: self.a.checked_add(o.a).ok_or(Error::Overflow)?,
            b: self.b.checked_add(o.b).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_sub(self, o: LatticePoint) -> Result<LatticePoint> {
        Ok(LatticePoint {
            a: self.a.checked_sub(o.a).ok_or(Error::Overflow)?,
            b: self.b.checked_sub(o.b).ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<LatticePoint> {
        Ok(LatticePoint {
            a: self.a.checked_neg().ok_or(Error::Overflow)?,
            b: self.b.checked_neg().ok_or(Error::Overflow)?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<LatticePoint> {
        Ok(LatticePoint {
            a: self.a.checked_mul(k).ok_or(Error::Overflow)?,
            b: self.b.checked_mul(k).ok_or(Error::Overflow)?,
        })
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A finitely supported digit sequence, least significant first, where
/// entry `i` is the coefficient of `z^(i + offset)`.
pub trait Expansion {
    fn coefficients(&self) -> &[i64];
    fn offset(&self) -> i32;

    /// Coefficients without trailing (most significant) zeros.
    fn canonical(&self) -> &[i64] {
        let c = self.coefficients();
        let len = c.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1);
        &c[..len]
    }
}

/// Digit string over `{0..n-1}`.
#[derive(Debug, Clone, Eq, Default, Serialize, Deserialize)]
pub struct DigitString {
    digits: Vec<i64>,
    offset: i32,
}

impl DigitString {
    pub fn new(n: i64, digits: Vec<i64>, offset: i32) -> Result<Self> {
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d < 0 || d >= n) {
            return Err(Error::DigitOutOfRange { digit, position, n });
        }
        Ok(DigitString { digits, offset })
    }

    /// Integer-part string (offset 0).
    pub fn integer(n: i64, digits: Vec<i64>) -> Result<Self> {
        Self::new(n, digits, 0)
    }

    pub(crate) fn from_valid(digits: Vec<i64>) -> Self {
        DigitString { digits, offset: 0 }
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn into_canonical(mut self) -> Self {
        let len = self.canonical().len();
        self.digits.truncate(len);
        self
    }
}

impl PartialEq for DigitString {
    fn eq(&self, other: &Self) -> bool {
        self.offset == other.offset && self.canonical() == other.canonical()
    }
}

impl Expansion for DigitString {
    fn coefficients(&self) -> &[i64] {
        &self.digits
    }
    fn offset(&self) -> i32 {
        self.offset
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.digits)
    }
}

/// Digit sequence with arbitrary integer entries.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PseudoRepresentation {
    pub digits: Vec<i64>,
    pub offset: i32,
}

impl PseudoRepresentation {
    pub fn new(digits: Vec<i64>, offset: i32) -> Self {
        PseudoRepresentation { digits, offset }
    }

    pub fn integer(digits: Vec<i64>) -> Self {
        Self::new(digits, 0)
    }
}

impl From<&DigitString> for PseudoRepresentation {
    fn from(s: &DigitString) -> Self {
        PseudoRepresentation { digits: s.digits.clone(), offset: s.offset }
    }
}

impl Expansion for PseudoRepresentation {
    fn coefficients(&self) -> &[i64] {
        &self.digits
    }
    fn offset(&self) -> i32 {
        self.offset
    }
}

impl fmt::Display for PseudoRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, &self.digits)
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: &[i64]) -> fmt::Result {
    for (i, d) in digits.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}
