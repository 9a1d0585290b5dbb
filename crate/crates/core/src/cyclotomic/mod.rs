//! Exact arithmetic in the cyclotomic field Q(ζ), ζ = exp(πi/12).
//!
//! ζ is a primitive 24th root of unity with minimal polynomial
//! Φ₂₄(x) = x⁸ − x⁴ + 1, so every element has a unique expansion
//! c₀ + c₁ζ + … + c₇ζ⁷ with rational cᵢ. Equality is coefficient equality.
//!
//! The field contains i = ζ⁶, √2 = ζ³ + ζ⁻³ and √3 = ζ² + ζ⁻², and in fact
//! equals Q(i, √2, √3).
//!
//! Internally a value is stored as eight integer numerators over one positive
//! common denominator, kept in lowest terms; [`Cyclotomic::coeffs`] exposes
//! the reduced rational coefficients.

mod approx;
mod format;
mod linalg;

use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use approx::{ComplexApprox, Fixed};
pub(crate) use linalg::solve;

/// Degree of Q(ζ) over Q.
pub const DEGREE: usize = 8;
/// Multiplicative order of ζ.
pub const ZETA_ORDER: i64 = 24;

/// An element of Q(ζ₂₄) in the power basis {1, ζ, …, ζ⁷}.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    num: [BigInt; DEGREE],
    den: BigInt,
}

/// ζᵏ in the power basis as small integers.
pub(crate) fn zeta_pow_ints(k: i64) -> [i64; DEGREE] {
    let r = k.rem_euclid(ZETA_ORDER);
    let (sign, r) = if r >= 12 { (-1, r - 12) } else { (1, r) };
    let mut out = [0i64; DEGREE];
    if r < 8 {
        out[r as usize] = sign;
    } else {
        // ζ^r = ζ^(r-4) − ζ^(r-8)
        out[(r - 4) as usize] = sign;
        out[(r - 8) as usize] = -sign;
    }
    out
}

/// Folds a coefficient vector of degree ≤ 14 back into the power basis.
fn reduce_poly(mut t: Vec<BigInt>) -> [BigInt; DEGREE] {
    for k in (DEGREE..t.len()).rev() {
        if t[k].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut t[k]);
        t[k - 4] += &c;
        t[k - 8] -= c;
    }
    t.truncate(DEGREE);
    t.resize(DEGREE, BigInt::zero());
    t.try_into().expect("length is DEGREE")
}

impl Cyclotomic {
    fn from_parts(num: [BigInt; DEGREE], den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut c = Cyclotomic { num, den };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in self.num.iter_mut() {
                *c /= &g;
            }
        }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            num: Default::default(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = n.into();
        Cyclotomic::from_parts(num, BigInt::one())
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        num[0] = r.numer().clone();
        Cyclotomic::from_parts(num, r.denom().clone())
    }

    /// Builds a value from small integer coefficients over the power basis.
    pub fn from_int_coeffs(coeffs: [i64; DEGREE]) -> Self {
        Cyclotomic::from_parts(coeffs.map(BigInt::from), BigInt::one())
    }

    /// Builds a value from integer numerators over a common denominator.
    pub fn from_numerators(num: [BigInt; DEGREE], den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Cyclotomic::from_parts(num, den))
    }

    pub fn from_coeffs(coeffs: &[BigRational; DEGREE]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = std::array::from_fn(|k| coeffs[k].numer() * (&den / coeffs[k].denom()));
        Cyclotomic::from_parts(num, den)
    }

    /// ζᵏ reduced to the power basis. Any integer exponent is accepted.
    pub fn zeta_pow(k: i64) -> Self {
        Self::from_int_coeffs(zeta_pow_ints(k))
    }

    /// Same as [`Cyclotomic::zeta_pow`] for an arbitrary-precision exponent.
    pub fn zeta_pow_big(k: &BigInt) -> Self {
        let r = k.mod_floor(&BigInt::from(ZETA_ORDER));
        Self::zeta_pow(r.to_i64().expect("residue below 24"))
    }

    /// i = ζ⁶.
    pub fn i() -> Self {
        Self::zeta_pow(6)
    }

    /// √2 = ζ³ + ζ⁻³.
    pub fn sqrt2() -> Self {
        Self::zeta_pow(3) + Self::zeta_pow(-3)
    }

    /// √3 = ζ² + ζ⁻².
    pub fn sqrt3() -> Self {
        Self::zeta_pow(2) + Self::zeta_pow(-2)
    }

    /// The normalization constant w = 2 + [3]² = 6 + 2√3.
    pub fn w() -> Self {
        let q3 = quantum_integer(3);
        Self::from_integer(2) + &q3 * &q3
    }

    /// Reduced rational coefficient of ζᵏ, k ∈ 0..8.
    pub fn coeff(&self, k: usize) -> BigRational {
        BigRational::new(self.num[k].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> [BigRational; DEGREE] {
        std::array::from_fn(|k| self.coeff(k))
    }

    pub fn numerators(&self) -> &[BigInt; DEGREE] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// True when the value is rational.
    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.clone().map(|c| c * r.numer());
        Cyclotomic::from_parts(num, &self.den * r.denom())
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let num = self.num.clone().map(|c| c * n);
        Cyclotomic::from_parts(num, self.den.clone())
    }

    /// Multiplication by ζᵏ, done by shifting coefficients.
    pub fn mul_zeta_pow(&self, k: i64) -> Self {
        let r = k.rem_euclid(ZETA_ORDER);
        let (negate, steps) = if r >= 12 { (true, r - 12) } else { (false, r) };
        let mut num = self.num.clone();
        for _ in 0..steps {
            // ζ·(c₀ + … + c₇ζ⁷) with c₇ζ⁸ = c₇(ζ⁴ − 1)
            let top = std::mem::take(&mut num[DEGREE - 1]);
            num.rotate_right(1);
            num[0] = -top.clone();
            num[4] += top;
        }
        if negate {
            num = num.map(|c| -c);
        }
        Cyclotomic {
            num,
            den: self.den.clone(),
        }
    }

    /// Multiplicative inverse via the exact 8×8 linear system for multiplication by `self`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let to_rat = |v: &Cyclotomic| v.coeffs();
        // column j is self·ζʲ
        let columns: Vec<[BigRational; DEGREE]> =
            (0..DEGREE as i64).map(|j| to_rat(&self.mul_zeta_pow(j))).collect();
        let m: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|i| columns.iter().map(|col| col[i].clone()).collect())
            .collect();
        let mut rhs = vec![BigRational::zero(); DEGREE];
        rhs[0] = BigRational::one();
        let y = solve(m, rhs).ok_or(Error::DivisionByZero)?;
        let y: [BigRational; DEGREE] = y.try_into().expect("length is DEGREE");
        Ok(Cyclotomic::from_coeffs(&y))
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Complex conjugation, the automorphism ζ ↦ ζ⁻¹.
    pub fn conjugate(&self) -> Self {
        let mut num: [BigInt; DEGREE] = Default::default();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, e) in num.iter_mut().zip(zeta_pow_ints(-(k as i64))) {
                if e != 0 {
                    *slot += c * e;
                }
            }
        }
        Cyclotomic {
            num,
            den: self.den.clone(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.conjugate() == *self
    }

    /// (x + x̄)/2.
    pub fn real_part(&self) -> Self {
        (self + &self.conjugate()).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// (x − x̄)/(2i), itself a real element.
    pub fn imag_part(&self) -> Self {
        let diff = self - &self.conjugate();
        // 1/(2i) = −i/2
        diff.mul_zeta_pow(18).scale(&BigRational::new(1.into(), 2.into()))
    }

    /// |x| of a real element.
    pub fn abs_real(&self) -> Result<Self> {
        Ok(match self.real_sign()? {
            std::cmp::Ordering::Less => -self,
            _ => self.clone(),
        })
    }

    /// x·x̄, the squared complex modulus.
    pub fn norm_squared(&self) -> Self {
        self * &self.conjugate()
    }
}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Cyclotomic::zero()
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.den == rhs.den {
            let num = std::array::from_fn(|k| &self.num[k] + &rhs.num[k]);
            return Cyclotomic::from_parts(num, self.den.clone());
        }
        let num = std::array::from_fn(|k| &self.num[k] * &rhs.den + &rhs.num[k] * &self.den);
        Cyclotomic::from_parts(num, &self.den * &rhs.den)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.is_zero() || rhs.is_zero() {
            return Cyclotomic::zero();
        }
        let mut t = vec![BigInt::zero(); 2 * DEGREE - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    t[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_parts(reduce_poly(t), &self.den * &rhs.den)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            num: self.num.clone().map(|c| -c),
            den: self.den.clone(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

fn inv_zeta_minus_inv() -> &'static Cyclotomic {
    static CELL: OnceLock<Cyclotomic> = OnceLock::new();
    CELL.get_or_init(|| {
        (Cyclotomic::zeta_pow(1) - Cyclotomic::zeta_pow(-1))
            .inv()
            .expect("ζ − ζ⁻¹ is nonzero")
    })
}

/// The quantum integer [n] = (ζⁿ − ζ⁻ⁿ)/(ζ − ζ⁻¹).
pub fn quantum_integer(n: i64) -> Cyclotomic {
    let n = n.rem_euclid(ZETA_ORDER);
    (Cyclotomic::zeta_pow(n) - Cyclotomic::zeta_pow(-n)) * inv_zeta_minus_inv()
}

/// ζᵏ in the power basis; alias kept for callers that think in terms of reduction.
pub fn reduce_power(k: i64) -> Cyclotomic {
    Cyclotomic::zeta_pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: [i64; 8]) -> Cyclotomic {
        Cyclotomic::from_int_coeffs(c)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Independent f64 embedding straight from the coefficients.
    fn embed(x: &Cyclotomic) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in x.coeffs().iter().enumerate() {
            let c = c.numer().to_f64().unwrap() / c.denom().to_f64().unwrap();
            let t = k as f64 * std::f64::consts::PI / 12.0;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    #[test]
    fn reduce_power_examples() {
        assert_eq!(reduce_power(0), ints([1, 0, 0, 0, 0, 0, 0, 0]));
        assert_eq!(reduce_power(24), Cyclotomic::one());
        // ζ¹⁰ = ζ⁶ − ζ²
        let z10 = reduce_power(10);
        assert_eq!(z10, ints([0, 0, -1, 0, 0, 0, 1, 0]));
        let (re, im) = embed(&z10);
        let t = 10.0 * std::f64::consts::PI / 12.0;
        assert!((re - t.cos()).abs() < 1e-14 && (im - t.sin()).abs() < 1e-14);
        assert_eq!(reduce_power(12), -Cyclotomic::one());
        assert_eq!(reduce_power(-1), reduce_power(23));
    }

    #[test]
    fn phi24_annihilates_zeta() {
        let v = reduce_power(8) - reduce_power(4) + Cyclotomic::one();
        assert!(v.is_zero());
        let z = reduce_power(1);
        let mut p = Cyclotomic::one();
        for _ in 0..8 {
            p = &p * &z;
        }
        assert_eq!(p, reduce_power(8));
    }

    #[test]
    fn mul_zeta_pow_matches_mul() {
        let x = ints([3, -1, 4, 1, -5, 9, 2, -6]);
        for k in -30..30 {
            assert_eq!(x.mul_zeta_pow(k), &x * &reduce_power(k), "k={k}");
        }
    }

    #[test]
    fn field_constants() {
        assert_eq!(&reduce_power(1) * &reduce_power(23), Cyclotomic::one());
        let s3 = Cyclotomic::sqrt3();
        assert_eq!(s3, ints([0, 0, 2, 0, 0, 0, -1, 0]));
        assert_eq!(&s3 * &s3, Cyclotomic::from_integer(3));
        let s2 = Cyclotomic::sqrt2();
        assert_eq!(s2, ints([0, 1, 0, 1, 0, -1, 0, 0]));
        assert_eq!(&s2 * &s2, Cyclotomic::from_integer(2));
        let i = Cyclotomic::i();
        assert_eq!(&i * &i, -Cyclotomic::one());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Cyclotomic::one().inv().unwrap(), Cyclotomic::one());
        // (6 + 2√3)⁻¹ = (6 − 2√3)/24 = (3 − √3)/12
        let w = Cyclotomic::w();
        let expected = (Cyclotomic::from_integer(3) - Cyclotomic::sqrt3()).scale(&rat(1, 12));
        assert_eq!(w.inv().unwrap(), expected);
        assert_eq!(&w * &expected, Cyclotomic::one());
        assert_eq!(reduce_power(1).inv().unwrap(), reduce_power(23));
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn quantum_integer_values() {
        let s2 = Cyclotomic::sqrt2();
        let s3 = Cyclotomic::sqrt3();
        let one = Cyclotomic::one();
        assert_eq!(quantum_integer(0), Cyclotomic::zero());
        assert_eq!(quantum_integer(1), one);
        assert_eq!(quantum_integer(2), (&one + &s3).div(&s2).unwrap());
        assert_eq!(quantum_integer(3), &one + &s3);
        assert_eq!(
            quantum_integer(4),
            (Cyclotomic::from_integer(3) + &s3).div(&s2).unwrap()
        );
        assert_eq!(quantum_integer(5), Cyclotomic::from_integer(2) + &s3);
        let (re, im) = embed(&quantum_integer(5));
        let expect = (5.0 * std::f64::consts::PI / 12.0).sin() / (std::f64::consts::PI / 12.0).sin();
        assert!((re - expect).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn quantum_integer_symmetries() {
        for n in -48..=48 {
            assert_eq!(quantum_integer(12 - n), quantum_integer(n), "n={n}");
            assert_eq!(quantum_integer(n + 12), -quantum_integer(n), "n={n}");
        }
    }

    #[test]
    fn quantum_integer_embedding() {
        for n in 1..=11 {
            let (re, im) = embed(&quantum_integer(n));
            let t = std::f64::consts::PI / 12.0;
            let expect = (n as f64 * t).sin() / t.sin();
            assert!((re - expect).abs() < 1e-12 && im.abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(Cyclotomic::one().conjugate(), Cyclotomic::one());
        assert_eq!(reduce_power(6).conjugate(), -reduce_power(6));
        for n in -30..30 {
            let q = quantum_integer(n);
            assert!(q.is_real());
        }
        let x = ints([1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(x.conjugate().conjugate(), x);
        assert!(!reduce_power(1).is_real());
    }

    #[test]
    fn abs_real_examples() {
        assert_eq!(Cyclotomic::zero().abs_real().unwrap(), Cyclotomic::zero());
        assert_eq!(quantum_integer(7).abs_real().unwrap(), quantum_integer(7));
        assert_eq!(quantum_integer(7), Cyclotomic::from_integer(2) + Cyclotomic::sqrt3());
        assert_eq!(quantum_integer(13), -Cyclotomic::one());
        assert_eq!(quantum_integer(13).abs_real().unwrap(), Cyclotomic::one());
        assert_eq!(reduce_power(1).abs_real(), Err(Error::NotReal));
        // convergents of √2 bracket it from both sides
        let above = Cyclotomic::sqrt2() - Cyclotomic::from_integer(99).scale(&rat(1, 70));
        assert_eq!(above.real_sign().unwrap(), std::cmp::Ordering::Less);
        let below = Cyclotomic::sqrt2() - Cyclotomic::from_integer(140).scale(&rat(1, 99));
        assert_eq!(below.real_sign().unwrap(), std::cmp::Ordering::Greater);
    }

    #[test]
    fn real_and_imaginary_parts() {
        let x = ints([1, 2, 0, 0, 0, 0, 3, 0]);
        let recombined = x.real_part() + &x.imag_part() * &Cyclotomic::i();
        assert_eq!(recombined, x);
        assert!(x.real_part().is_real());
        assert!(x.imag_part().is_real());
    }

    #[test]
    fn from_coeffs_reduces() {
        let c: [BigRational; 8] = std::array::from_fn(|k| rat(k as i64, 6));
        let x = Cyclotomic::from_coeffs(&c);
        assert_eq!(x.coeffs(), c);
        assert_eq!(x.denominator(), &BigInt::from(6));
        let y = Cyclotomic::from_numerators(std::array::from_fn(|_| BigInt::from(4)), BigInt::from(-8)).unwrap();
        assert_eq!(y.coeff(3), rat(-1, 2));
        assert_eq!(y.denominator(), &BigInt::from(2));
    }
}
