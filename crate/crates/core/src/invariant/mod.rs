//! Z(L(p,q)) by the representation state sum and by the closed-form case table.
//!
//! The state sum is Z(L(p,q)) = w·ρ(A)₁₁ with A = (−q b; p −a) and aq − bp = 1,
//! normalized so that Z(S³) = Z(L(1,0)) = 1.
//!
//! Two closed forms are provided. [`closed_form`] transcribes the published
//! case table literally, with the sign in ζ^{±3} and ζ^{±2} taken from the
//! residue of q. That sign does not match the state sum for p ≡ 3 or 8 (mod 12);
//! there the true value is the complex conjugate. [`refined_closed_form`]
//! carries the extra dependence on p mod 12 and agrees with the state sum for
//! every coprime pair.

mod sweep;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cyclotomic::{quantum_integer, Cyclotomic};
use crate::error::Result;
use crate::modular::{check_coprime, extended_cofactor, lens_matrix, GeneratorWord};
use crate::representation::rho_word_entry;

pub use sweep::{
    canonical_pairs, check_well_defined, state_sums, table, verify_closed_form, verify_corollary, verify_periodicity,
    verify_well_defined_sweep, TableRow,
};

/// Values of the invariant live in Q(ζ₂₄).
pub type InvariantValue = Cyclotomic;

/// A lens space L(p,q) with gcd(p,q) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensSpace {
    p: BigInt,
    q: BigInt,
}

impl LensSpace {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        check_coprime(&p, &q)?;
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// gcd(|p|, 12); 12 when p = 0.
    pub fn p_gcd_12(&self) -> u32 {
        self.p.gcd(&BigInt::from(12)).to_u32().expect("divisor of 12")
    }

    fn p_mod(&self, m: i64) -> i64 {
        self.p.mod_floor(&BigInt::from(m)).to_i64().expect("small residue")
    }

    fn q_mod(&self, m: i64) -> i64 {
        self.q.mod_floor(&BigInt::from(m)).to_i64().expect("small residue")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// w·ρ(A)₁₁ for the lens matrix built from the given cofactors.
pub fn state_sum_with_cofactor(l: &LensSpace, a: &BigInt, b: &BigInt) -> Result<InvariantValue> {
    let m = lens_matrix(&l.p, &l.q, a, b)?;
    let word = GeneratorWord::decompose(&m);
    Ok(Cyclotomic::w() * rho_word_entry(&word, 0, 0))
}

/// Z(L(p,q)) from the representation, using the canonical cofactor pair.
pub fn state_sum(l: &LensSpace) -> InvariantValue {
    let (a, b) = extended_cofactor(&l.p, &l.q).expect("LensSpace is coprime");
    state_sum_with_cofactor(l, &a, &b).expect("cofactor gives determinant 1")
}

/// Which row of the case table applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedFormCase {
    /// gcd(p,12) = 1: |[p]|.
    Coprime,
    /// gcd(p,12) ∈ {2, 6}: [4][3]/[2].
    Even,
    /// gcd(p,12) = 3: ζ^{3s}[4].
    Three { sign: i8 },
    /// gcd(p,12) = 4: 2ζ^{2s}[3].
    Four { sign: i8 },
    /// 12 | p, q ≡ ±1 (mod 12): 2[4][3]/[2].
    TwelvePlusMinusOne,
    /// 12 | p, q ≡ ±5 (mod 12): 0.
    TwelvePlusMinusFive,
}

fn sign_mod(residue: i64, plus: i64) -> i8 {
    if residue == plus {
        1
    } else {
        -1
    }
}

/// The case of the published table, with signs read from q alone.
pub fn published_case(l: &LensSpace) -> ClosedFormCase {
    match l.p_gcd_12() {
        1 => ClosedFormCase::Coprime,
        2 | 6 => ClosedFormCase::Even,
        3 => ClosedFormCase::Three { sign: sign_mod(l.q_mod(3), 1) },
        4 => ClosedFormCase::Four { sign: sign_mod(l.q_mod(4), 1) },
        12 => match l.q_mod(12) {
            1 | 11 => ClosedFormCase::TwelvePlusMinusOne,
            _ => ClosedFormCase::TwelvePlusMinusFive,
        },
        g => unreachable!("gcd(p,12) = {g} with q coprime to p"),
    }
}

/// The case with the sign corrected by the residue of p.
///
/// For gcd(p,12) = 3 the sign is that of q mod 3 when p ≡ 9 (mod 12) and the
/// opposite when p ≡ 3. For gcd(p,12) = 4 it is that of q mod 4 when
/// p ≡ 4 (mod 12) and the opposite when p ≡ 8.
pub fn refined_case(l: &LensSpace) -> ClosedFormCase {
    match published_case(l) {
        ClosedFormCase::Three { sign } if l.p_mod(12) == 3 => ClosedFormCase::Three { sign: -sign },
        ClosedFormCase::Four { sign } if l.p_mod(12) == 8 => ClosedFormCase::Four { sign: -sign },
        case => case,
    }
}

fn case_value(l: &LensSpace, case: ClosedFormCase) -> InvariantValue {
    let q4_q3_over_q2 = || {
        (quantum_integer(4) * quantum_integer(3))
            .div(&quantum_integer(2))
            .expect("[2] is nonzero")
    };
    match case {
        ClosedFormCase::Coprime => quantum_integer(l.p_mod(24))
            .abs_real()
            .expect("quantum integers are real"),
        ClosedFormCase::Even => q4_q3_over_q2(),
        ClosedFormCase::Three { sign } => quantum_integer(4).mul_zeta_pow(3 * sign as i64),
        ClosedFormCase::Four { sign } => quantum_integer(3).mul_zeta_pow(2 * sign as i64).scale_int(2),
        ClosedFormCase::TwelvePlusMinusOne => q4_q3_over_q2().scale_int(2),
        ClosedFormCase::TwelvePlusMinusFive => Cyclotomic::zero(),
    }
}

/// The published case table, read literally.
pub fn closed_form(l: &LensSpace) -> InvariantValue {
    case_value(l, published_case(l))
}

/// The case table with the p-dependent sign; equal to [`state_sum`] for every coprime pair.
pub fn refined_closed_form(l: &LensSpace) -> InvariantValue {
    case_value(l, refined_case(l))
}

/// Orientation-preserving homotopy equivalence: p = p′ and q ≡ n²q′ (mod p) for some n.
///
/// For p = 0 the only admissible squares are n² = 1, so q must equal q′.
pub fn homotopy_equivalent(l: &LensSpace, other: &LensSpace) -> bool {
    if l.p != other.p {
        return false;
    }
    if l.p.is_zero() {
        return l.q == other.q;
    }
    let modulus = l.p.abs();
    let target = l.q.mod_floor(&modulus);
    let q2 = other.q.mod_floor(&modulus);
    let mut n = BigInt::zero();
    while n < modulus {
        if (&n * &n * &q2).mod_floor(&modulus) == target {
            return true;
        }
        n += 1;
    }
    false
}
