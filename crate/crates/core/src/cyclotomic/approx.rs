//! Fixed-point complex embedding ζ ↦ exp(πi/12) at arbitrary precision.
//!
//! cos(kπ/12) for k = 0..7 only involves 1/2, √2/2, √3/2 and (√6 ± √2)/4, so the
//! basis is evaluated with integer square roots and every approximation carries
//! a rigorous error bound in units of the last place.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Cyclotomic, DEGREE};
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 16;
const SIGN_START_BITS: u32 = 128;

/// mantissa · 2^(−frac_bits), accurate to within `err` units of 2^(−frac_bits).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    pub mantissa: BigInt,
    pub frac_bits: u32,
    pub err: BigInt,
}

impl Fixed {
    pub fn to_f64(&self) -> f64 {
        // keep 64 significant fractional bits before handing over to f64
        if self.frac_bits > 64 {
            let shifted: BigInt = &self.mantissa >> (self.frac_bits - 64);
            shifted.to_f64().unwrap_or(f64::NAN) * (-64f64).exp2()
        } else {
            self.mantissa.to_f64().unwrap_or(f64::NAN) * (-(self.frac_bits as f64)).exp2()
        }
    }

    /// Sign if the error bound excludes zero.
    pub fn certain_sign(&self) -> Option<Ordering> {
        if self.mantissa.abs() > self.err {
            Some(self.mantissa.cmp(&BigInt::zero()))
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexApprox {
    pub re: Fixed,
    pub im: Fixed,
}

impl ComplexApprox {
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

/// floor(2^bits · cos(kπ/12)) for k = 0..7, each within 2 ulps.
fn cos_table(bits: u32) -> [BigInt; DEGREE] {
    let one = BigInt::one() << bits;
    let four_pow = BigInt::one() << (2 * bits);
    let root = |n: u32| (&four_pow * n).sqrt();
    let s2 = root(2);
    let s3 = root(3);
    let s6 = root(6);
    let half = &one >> 1;
    [
        one.clone(),
        (&s6 + &s2) >> 2,
        &s3 >> 1,
        &s2 >> 1,
        half,
        (&s6 - &s2) >> 2,
        BigInt::zero(),
        -((&s6 - &s2) >> 2u32),
    ]
}

impl Cyclotomic {
    /// Evaluates Σ cₖ·exp(kπi/12) with at least `precision_bits` fractional bits.
    pub fn to_complex_float(&self, precision_bits: u32) -> ComplexApprox {
        let bits = precision_bits.max(53) + GUARD_BITS;
        let cos = cos_table(bits);
        // sin(kπ/12) = cos(|6 − k|π/12)
        let sin: [BigInt; DEGREE] = std::array::from_fn(|k| cos[(6 - k as i64).unsigned_abs() as usize].clone());
        let num = self.numerators();
        let den = self.denominator();
        let weight: BigInt = num.iter().map(|c| c.abs()).sum();
        let err = (&weight * 2u32) / den + 2u32;
        let dot = |table: &[BigInt; DEGREE]| -> BigInt {
            let s: BigInt = num.iter().zip(table).map(|(c, t)| c * t).sum();
            num_integer::Integer::div_floor(&s, den)
        };
        ComplexApprox {
            re: Fixed {
                mantissa: dot(&cos),
                frac_bits: bits,
                err: err.clone(),
            },
            im: Fixed {
                mantissa: dot(&sin),
                frac_bits: bits,
                err,
            },
        }
    }

    /// Convenience f64 pair from a 64-bit evaluation.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        self.to_complex_float(64).to_f64()
    }

    /// Sign of a real element.
    ///
    /// Starts at 128 bits and doubles the precision while the approximation is
    /// within 2^(−bits/2) of zero or its error bound does not exclude zero.
    pub fn real_sign(&self) -> Result<Ordering> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(Ordering::Equal);
        }
        let mut bits = SIGN_START_BITS;
        loop {
            let approx = self.to_complex_float(bits).re;
            let threshold = BigInt::one() << (approx.frac_bits - bits / 2);
            if approx.mantissa.abs() >= threshold {
                if let Some(sign) = approx.certain_sign() {
                    return Ok(sign);
                }
            }
            bits *= 2;
        }
    }
}
