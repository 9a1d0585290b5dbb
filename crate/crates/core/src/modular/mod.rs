//! The modular group SL(2,ℤ): matrices, S/T words, cofactors and level-12 congruences.

mod generators;
mod matrix;
mod word;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use generators::{gamma12_generator_table, GeneratorEntry};
pub use matrix::UnimodularMatrix;
pub use word::{GeneratorWord, Token};

/// The level of the congruence subgroup in the kernel of the representation.
pub const LEVEL: i64 = 12;

pub fn check_coprime(p: &BigInt, q: &BigInt) -> Result<()> {
    let g = p.gcd(q);
    if g.is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            p: p.clone(),
            q: q.clone(),
            gcd: g,
        })
    }
}

/// Returns (a, b) with a·q − b·p = 1.
///
/// The choice is canonical: 0 ≤ a < |p| when |p| > 1; for |p| = 1 it is
/// (0, −p) and for p = 0 (so q = ±1) it is (q, 0).
pub fn extended_cofactor(p: &BigInt, q: &BigInt) -> Result<(BigInt, BigInt)> {
    check_coprime(p, q)?;
    if p.is_zero() {
        return Ok((q.clone(), BigInt::zero()));
    }
    let modulus = p.abs();
    if modulus.is_one() {
        return Ok((BigInt::zero(), -p));
    }
    // a ≡ q⁻¹ (mod |p|)
    let egcd = q.mod_floor(&modulus).extended_gcd(&modulus);
    debug_assert!(egcd.gcd.is_one());
    let a = egcd.x.mod_floor(&modulus);
    let b = (&a * q - 1) / p;
    debug_assert_eq!(&a * q - &b * p, BigInt::from(1));
    Ok((a, b))
}

/// The matrix (−q b; p −a) whose image under the representation gives Z(L(p,q)).
pub fn lens_matrix(p: &BigInt, q: &BigInt, a: &BigInt, b: &BigInt) -> Result<UnimodularMatrix> {
    UnimodularMatrix::new(-q, b.clone(), p.clone(), -a)
}

/// Cofactors for two congruent pairs that are themselves congruent mod 12.
///
/// Given p ≡ p′ and q ≡ q′ (mod 12), both pairs coprime, returns (a, b, a′, b′)
/// with aq − bp = 1, a′q′ − b′p′ = 1, a ≡ a′ and b ≡ b′ (mod 12). Writing
/// (a′, b′) = (a + 12x, b + 12y), p′ = p + 12z and q′ = q + 12w, the
/// determinant condition reduces to p′y − q′x = aw − zb, which is solvable
/// because p′ and q′ are coprime.
pub fn congruent_lift(
    p: &BigInt,
    q: &BigInt,
    p2: &BigInt,
    q2: &BigInt,
) -> Result<(BigInt, BigInt, BigInt, BigInt)> {
    check_coprime(p, q)?;
    check_coprime(p2, q2)?;
    let level = BigInt::from(LEVEL);
    let (z, rz) = (p2 - p).div_rem(&level);
    let (w, rw) = (q2 - q).div_rem(&level);
    if !rz.is_zero() || !rw.is_zero() {
        return Err(Error::Precondition(format!(
            "({p},{q}) and ({p2},{q2}) are not congruent mod {LEVEL}"
        )));
    }
    let (a, b) = extended_cofactor(p, q)?;
    let rhs = &a * &w - &z * &b;
    // u·q′ − v·p′ = 1  ⇒  p′·(−v) − q′·(−u) = 1
    let (u, v) = extended_cofactor(p2, q2)?;
    let y = -&v * &rhs;
    let x = -&u * &rhs;
    let a2 = &a + &level * x;
    let b2 = &b + &level * y;
    debug_assert!((&a2 * q2 - &b2 * p2).is_one());
    Ok((a, b, a2, b2))
}
