//! Binary extension fields GF(2^e).
//!
//! Elements are stored as the coefficient vector of a polynomial of degree
//! `< e`, packed into a `u32` with the constant term in the least significant
//! bit. For GF(4) with modulus `x^2 + x + 1` the class of `x` (packed value
//! `2`) is named `ω` and `ω̄ = ω^2 = x + 1` (packed value `3`).
//!
//! The bit-vector isomorphism [`FieldElement::to_bits`] lists coefficients
//! from the highest degree down, so that in GF(4):
//!
//! | bits    | element |
//! |---------|---------|
//! | (0, 0)  | 0       |
//! | (0, 1)  | 1       |
//! | (1, 0)  | ω       |
//! | (1, 1)  | ω̄       |

use std::fmt;
use std::ops::{Add, Mul};

use thiserror::Error;

/// Largest supported extension degree (field order 2^16).
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("field mismatch")]
    FieldMismatch,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("extension degree {0} unsupported (must be 1..={MAX_DEGREE})")]
    UnsupportedDegree(u32),
    #[error("modulus {0:#b} is not a monic polynomial of degree {1}")]
    NotMonic(u32, u32),
    #[error("modulus {0:#b} is reducible over F_2")]
    Reducible(u32),
    #[error("bit vector has length {got}, expected {expected}")]
    BitLength { got: usize, expected: usize },
    #[error("bit vector entries must be 0 or 1")]
    NotABit,
    #[error("value {0} out of range for a field of order {1}")]
    OutOfRange(u32, u32),
    #[error("field order {0} is not a supported power of two")]
    UnsupportedOrder(u32),
}

/// A field GF(2^e) fixed by a monic irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    e: u32,
    modulus: u32,
}

/// Carry-less product of two polynomials over F_2.
fn clmul(a: u32, b: u32) -> u64 {
    let (a, mut b) = (a as u64, b as u64);
    let mut acc = 0u64;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m);
    while a != 0 && degree(a) >= dm {
        a ^= m << (degree(a) - dm);
    }
    a
}

/// Trial division by every polynomial of degree `1..=deg/2`.
fn is_irreducible(p: u32) -> bool {
    let dp = degree(p as u64);
    if dp < 1 {
        return false;
    }
    for dq in 1..=dp / 2 {
        for low in 0..(1u64 << dq) {
            let q = (1u64 << dq) | low;
            if poly_rem(p as u64, q) == 0 {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds a field from a packed modulus (bit `i` = coefficient of `x^i`).
    pub fn from_modulus(e: u32, modulus: u32) -> Result<Self, GfError> {
        if e == 0 || e > MAX_DEGREE {
            return Err(GfError::UnsupportedDegree(e));
        }
        if degree(modulus as u64) != e as i32 {
            return Err(GfError::NotMonic(modulus, e));
        }
        if !is_irreducible(modulus) {
            return Err(GfError::Reducible(modulus));
        }
        Ok(Self { e, modulus })
    }

    /// Builds a field from modulus coefficients listed constant term first.
    pub fn from_modulus_bits(bits: &[u8]) -> Result<Self, GfError> {
        if bits.is_empty() {
            return Err(GfError::UnsupportedDegree(0));
        }
        let mut modulus = 0u32;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 if i < 32 => modulus |= 1 << i,
                1 => return Err(GfError::UnsupportedDegree(i as u32)),
                _ => return Err(GfError::NotABit),
            }
        }
        Self::from_modulus(bits.len() as u32 - 1, modulus)
    }

    /// GF(2^e) with the numerically least monic irreducible modulus of degree `e`.
    pub fn binary_extension(e: u32) -> Result<Self, GfError> {
        if e == 0 || e > MAX_DEGREE {
            return Err(GfError::UnsupportedDegree(e));
        }
        let top = 1u32 << e;
        (top..top << 1)
            .find(|&p| is_irreducible(p))
            .map(|modulus| Self { e, modulus })
            .ok_or(GfError::UnsupportedDegree(e))
    }

    /// The field of order `q`, which must be `2^e` with `1 <= e <= 16`.
    pub fn with_order(q: u32) -> Result<Self, GfError> {
        if q < 2 || !q.is_power_of_two() {
            return Err(GfError::UnsupportedOrder(q));
        }
        Self::binary_extension(q.trailing_zeros())
            .map_err(|_| GfError::UnsupportedOrder(q))
    }

    /// GF(4) with modulus `x^2 + x + 1`.
    pub fn gf4() -> Self {
        Self { e: 2, modulus: 0b111 }
    }

    /// GF(16) with modulus `x^4 + x + 1`.
    pub fn gf16() -> Self {
        Self { e: 4, modulus: 0b10011 }
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u32 {
        1 << self.e
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Modulus coefficients, constant term first (length `e + 1`).
    pub fn modulus_bits(&self) -> Vec<u8> {
        (0..=self.e).map(|i| ((self.modulus >> i) & 1) as u8).collect()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { spec: *self, bits: 1 }
    }

    /// Element with packed coefficient value `value` (constant term = LSB).
    pub fn element(&self, value: u32) -> Result<FieldElement, GfError> {
        if value >= self.order() {
            return Err(GfError::OutOfRange(value, self.order()));
        }
        Ok(FieldElement { spec: *self, bits: value })
    }

    /// All field elements in increasing packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |bits| FieldElement { spec: *self, bits })
    }

    /// Inverse of [`FieldElement::to_bits`].
    pub fn from_bits(&self, bits: &[u8]) -> Result<FieldElement, GfError> {
        if bits.len() != self.e as usize {
            return Err(GfError::BitLength {
                got: bits.len(),
                expected: self.e as usize,
            });
        }
        let mut value = 0u32;
        for &b in bits {
            if b > 1 {
                return Err(GfError::NotABit);
            }
            value = (value << 1) | b as u32;
        }
        Ok(FieldElement { spec: *self, bits: value })
    }

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        poly_rem(clmul(a, b), self.modulus as u64) as u32
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.e <= 8 {
            return (1..self.order()).find(|&b| self.mul_raw(a, b) == 1);
        }
        // Extended Euclid on (modulus, a), tracking only the coefficient of a.
        let (mut r0, mut r1) = (self.modulus as u64, a as u64);
        let (mut t0, mut t1) = (0u64, 1u64);
        while r1 != 0 {
            let (mut q, mut r) = (0u64, r0);
            let d1 = degree(r1);
            while r != 0 && degree(r) >= d1 {
                let shift = degree(r) - d1;
                q ^= 1 << shift;
                r ^= r1 << shift;
            }
            (r0, r1) = (r1, r);
            let t = t0 ^ poly_rem(clmul(q as u32, t1 as u32), self.modulus as u64);
            (t0, t1) = (t1, t);
        }
        debug_assert_eq!(r0, 1);
        Some(poly_rem(t0, self.modulus as u64) as u32)
    }

    /// Renders a packed value the way [`FieldElement`]'s `Display` does.
    pub fn render(&self, value: u32) -> String {
        if self.e == 2 {
            ["0", "1", "w", "W"][value as usize & 3].to_string()
        } else {
            let width = (self.e as usize).div_ceil(4);
            format!("{value:0width$x}")
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    bits: u32,
}

impl FieldElement {
    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// Packed coefficient value; also the default symbol index in `[0, q)`.
    pub fn value(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        if self.spec != other.spec {
            return Err(GfError::FieldMismatch);
        }
        Ok(FieldElement {
            spec: self.spec,
            bits: self.spec.add_raw(self.bits, other.bits),
        })
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement, GfError> {
        if self.spec != other.spec {
            return Err(GfError::FieldMismatch);
        }
        Ok(FieldElement {
            spec: self.spec,
            bits: self.spec.mul_raw(self.bits, other.bits),
        })
    }

    pub fn inv(&self) -> Result<FieldElement, GfError> {
        self.spec
            .inv_raw(self.bits)
            .map(|bits| FieldElement { spec: self.spec, bits })
            .ok_or(GfError::ZeroInverse)
    }

    /// Coefficients from `x^(e-1)` down to the constant term.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.spec.e)
            .rev()
            .map(|i| ((self.bits >> i) & 1) as u8)
            .collect()
    }
}

/// Panics on field mismatch; use [`FieldElement::try_add`] for a checked sum.
impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: FieldElement) -> FieldElement {
        self.try_add(&rhs).expect("field mismatch")
    }
}

/// Panics on field mismatch; use [`FieldElement::try_mul`] for a checked product.
impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.try_mul(&rhs).expect("field mismatch")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec.render(self.bits))
    }
}
