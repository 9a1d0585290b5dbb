use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A 2×2 integer matrix of determinant 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMatrix {
    a11: BigInt,
    a12: BigInt,
    a21: BigInt,
    a22: BigInt,
}

impl UnimodularMatrix {
    pub fn new(
        a11: impl Into<BigInt>,
        a12: impl Into<BigInt>,
        a21: impl Into<BigInt>,
        a22: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = UnimodularMatrix {
            a11: a11.into(),
            a12: a12.into(),
            a21: a21.into(),
            a22: a22.into(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::DeterminantNotOne { det });
        }
        Ok(m)
    }

    fn from_entries_unchecked(a11: BigInt, a12: BigInt, a21: BigInt, a22: BigInt) -> Self {
        let m = UnimodularMatrix { a11, a12, a21, a22 };
        debug_assert!(m.det().is_one());
        m
    }

    pub fn identity() -> Self {
        Self::from_entries_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// S = (0 −1; 1 0).
    pub fn s() -> Self {
        Self::from_entries_unchecked(BigInt::zero(), -BigInt::one(), BigInt::one(), BigInt::zero())
    }

    /// Tᵏ = (1 k; 0 1).
    pub fn t_pow(k: impl Into<BigInt>) -> Self {
        Self::from_entries_unchecked(BigInt::one(), k.into(), BigInt::zero(), BigInt::one())
    }

    pub fn a11(&self) -> &BigInt {
        &self.a11
    }
    pub fn a12(&self) -> &BigInt {
        &self.a12
    }
    pub fn a21(&self) -> &BigInt {
        &self.a21
    }
    pub fn a22(&self) -> &BigInt {
        &self.a22
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }

    pub fn det(&self) -> BigInt {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries_unchecked(
            self.a22.clone(),
            -&self.a12,
            -&self.a21,
            self.a11.clone(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Entrywise congruence to the identity modulo `level`.
    pub fn is_identity_mod(&self, level: &BigInt) -> bool {
        let r = |x: &BigInt| x.mod_floor(level);
        let one = BigInt::one().mod_floor(level);
        r(&self.a11) == one && r(&self.a22) == one && r(&self.a12).is_zero() && r(&self.a21).is_zero()
    }

    /// Membership in the principal congruence subgroup Γ(12).
    pub fn in_gamma12(&self) -> bool {
        self.is_identity_mod(&BigInt::from(12))
    }
}

impl Mul for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: &UnimodularMatrix) -> UnimodularMatrix {
        UnimodularMatrix::from_entries_unchecked(
            &self.a11 * &r.a11 + &self.a12 * &r.a21,
            &self.a11 * &r.a12 + &self.a12 * &r.a22,
            &self.a21 * &r.a11 + &self.a22 * &r.a21,
            &self.a21 * &r.a12 + &self.a22 * &r.a22,
        )
    }
}

impl Mul for UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn mul(self, r: UnimodularMatrix) -> UnimodularMatrix {
        &self * &r
    }
}

impl Neg for &UnimodularMatrix {
    type Output = UnimodularMatrix;
    fn neg(self) -> UnimodularMatrix {
        UnimodularMatrix::from_entries_unchecked(-&self.a11, -&self.a12, -&self.a21, -&self.a22)
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{},{})", self.a11, self.a12, self.a21, self.a22)
    }
}
