//! The 10-dimensional representation ρ: SL(2,ℤ) → GL₁₀(Q(ζ₂₄)).
//!
//! ρ(T) is diagonal with 24th roots of unity; w·ρ(S) is the symmetric matrix
//! in [`SCALED_RHO_S`] whose entries are small multiples of 1, [3], [2]², X and
//! iX, where X = [4][3]/[2] = 3 + √3. X is not independently known: it is fixed
//! by requiring every row of w·ρ(S) to have squared norm w², and construction
//! verifies that together with the presentation relations.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::cyclotomic::{quantum_integer, Cyclotomic};
use crate::error::{Error, Result};
use crate::modular::{gamma12_generator_table, GeneratorWord, Token, UnimodularMatrix};
use crate::report::{Check, Report, Witness};

pub const DIM: usize = 10;

/// w·ρ(S). Legend: `t` = [3], `a` = [2]², `X` = [4][3]/[2], `iX` = i·X,
/// with an optional sign and integer multiplier in front.
pub const SCALED_RHO_S: [[&str; DIM]; DIM] = [
    ["1", "t", "1", "a", "t", "t", "X", "t", "t", "a"],
    ["t", "iX", "-t", "-t", "0", "-iX", "0", "t", "-t", "t"],
    ["1", "-t", "1", "a", "-t", "-t", "-X", "t", "t", "a"],
    ["a", "-t", "a", "1", "-t", "-t", "X", "-t", "-t", "1"],
    ["t", "0", "-t", "-t", "0", "0", "0", "-2t", "2t", "t"],
    ["t", "-iX", "-t", "-t", "0", "iX", "0", "t", "-t", "t"],
    ["X", "0", "-X", "X", "0", "0", "0", "0", "0", "-X"],
    ["t", "t", "t", "-t", "-2t", "t", "0", "t", "t", "-t"],
    ["t", "-t", "t", "-t", "2t", "-t", "0", "t", "t", "-t"],
    ["a", "t", "a", "1", "t", "t", "-X", "-t", "-t", "1"],
];

/// Exponents e with ρ(T) = diag(ζ^e): 1, −ζ², −1, 1, i, −ζ², 1, ζ⁸, ζ⁻⁴, −1.
pub const RHO_T_EXPONENTS: [i64; DIM] = [0, 14, 12, 0, 6, 14, 0, 8, 20, 12];

/// Order of ρ(T).
pub const RHO_T_ORDER: i64 = 12;

/// A 10×10 matrix over Q(ζ₂₄), row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMatrix {
    entries: Vec<Cyclotomic>,
}

impl RepMatrix {
    pub fn from_fn(f: impl Fn(usize, usize) -> Cyclotomic) -> Self {
        RepMatrix {
            entries: (0..DIM * DIM).map(|k| f(k / DIM, k % DIM)).collect(),
        }
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Cyclotomic::zero())
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { Cyclotomic::one() } else { Cyclotomic::zero() })
    }

    pub fn diagonal(d: &[Cyclotomic; DIM]) -> Self {
        Self::from_fn(|i, j| if i == j { d[i].clone() } else { Cyclotomic::zero() })
    }

    /// Entry at (row, col), 0-based.
    pub fn get(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[row * DIM + col]
    }

    pub fn row(&self, row: usize) -> &[Cyclotomic] {
        &self.entries[row * DIM..(row + 1) * DIM]
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        let mut out = vec![Cyclotomic::zero(); DIM * DIM];
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..DIM {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out[i * DIM + j] += &(a * b);
                    }
                }
            }
        }
        RepMatrix { entries: out }
    }

    pub fn pow(&self, n: u32) -> RepMatrix {
        (0..n).fold(RepMatrix::identity(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Cyclotomic) -> RepMatrix {
        RepMatrix {
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn conjugate_transpose(&self) -> RepMatrix {
        Self::from_fn(|i, j| self.get(j, i).conjugate())
    }

    pub fn transpose(&self) -> RepMatrix {
        Self::from_fn(|i, j| self.get(j, i).clone())
    }

    /// Right multiplication by ρ(T)ᵏ, i.e. column j scaled by ζ^(eⱼk).
    pub fn mul_rho_t_pow(&self, k: &BigInt) -> RepMatrix {
        let k = reduce_t_exponent(k);
        Self::from_fn(|i, j| self.get(i, j).mul_zeta_pow(RHO_T_EXPONENTS[j] * k))
    }

    pub fn is_identity(&self) -> bool {
        self.first_difference(&RepMatrix::identity()).is_none()
    }

    /// First (row, col) where `self` differs from `expected`, as a report witness (1-based).
    pub fn first_difference(&self, expected: &RepMatrix) -> Option<Witness> {
        (0..DIM * DIM)
            .find(|&k| self.entries[k] != expected.entries[k])
            .map(|k| Witness {
                row: Some(k / DIM + 1),
                col: Some(k % DIM + 1),
                expected: expected.entries[k].pretty(),
                actual: self.entries[k].pretty(),
            })
    }

    pub fn to_f64_entry(&self, row: usize, col: usize) -> (f64, f64) {
        self.get(row, col).to_f64_pair()
    }
}

fn reduce_t_exponent(k: &BigInt) -> i64 {
    k.mod_floor(&BigInt::from(RHO_T_ORDER))
        .to_i64()
        .expect("residue below 12")
}

fn parse_cell(cell: &str, x: &Cyclotomic) -> Result<Cyclotomic> {
    let bad = || Error::Transcription(format!("unknown matrix cell {cell:?}"));
    let (sign, rest) = match cell.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, cell),
    };
    let digits = rest.chars().take_while(|c| c.is_ascii_digit()).count();
    let (mult, sym) = rest.split_at(digits);
    let mult: i64 = if mult.is_empty() { 1 } else { mult.parse().map_err(|_| bad())? };
    let base = match sym {
        "" => Cyclotomic::one(),
        "t" => quantum_integer(3),
        "a" => {
            let q2 = quantum_integer(2);
            &q2 * &q2
        }
        "X" => x.clone(),
        "iX" => x * &Cyclotomic::i(),
        _ => return Err(bad()),
    };
    Ok(base.scale_int(sign * mult))
}

/// Builds ρ(S) from a scaled table and a value for X, rejecting the result
/// unless each row of the scaled table has squared norm w² and the
/// presentation relations hold together with ρ(T).
pub fn build_rho_s(table: &[[&str; DIM]; DIM], x: &Cyclotomic) -> Result<RepMatrix> {
    let w = Cyclotomic::w();
    let inv_w = w.inv()?;
    let mut scaled = Vec::with_capacity(DIM * DIM);
    for row in table {
        for cell in row {
            scaled.push(parse_cell(cell, x)?);
        }
    }
    let scaled = RepMatrix { entries: scaled };

    let w_sq = &w * &w;
    for r in 0..DIM {
        let norm: Cyclotomic = scaled.row(r).iter().map(Cyclotomic::norm_squared).sum();
        if norm != w_sq {
            return Err(Error::Transcription(format!(
                "row {} of w·ρ(S) has squared norm {} instead of w²",
                r + 1,
                norm.surd_form().unwrap_or_else(|| norm.to_string())
            )));
        }
    }

    let s = scaled.scale(&inv_w);
    let report = relations_report(&s, &rho_t_matrix());
    if let Some(failed) = report.failures().next() {
        return Err(Error::Transcription(format!(
            "relation {} fails for this ρ(S)",
            failed.check_name
        )));
    }
    Ok(s)
}

/// The value X = [4][3]/[2] used for the unexpanded entries of ρ(S).
pub fn macro_entry_value() -> Cyclotomic {
    (quantum_integer(4) * quantum_integer(3))
        .div(&quantum_integer(2))
        .expect("[2] is nonzero")
}

fn rho_t_matrix() -> RepMatrix {
    RepMatrix::diagonal(&RHO_T_EXPONENTS.map(Cyclotomic::zeta_pow))
}

/// ρ(S); built once and self-checked, panics if the built-in table is inconsistent.
pub fn rho_s() -> &'static RepMatrix {
    static CELL: OnceLock<RepMatrix> = OnceLock::new();
    CELL.get_or_init(|| {
        build_rho_s(&SCALED_RHO_S, &macro_entry_value()).unwrap_or_else(|e| panic!("{e}"))
    })
}

pub fn rho_t() -> &'static RepMatrix {
    static CELL: OnceLock<RepMatrix> = OnceLock::new();
    CELL.get_or_init(rho_t_matrix)
}

/// ρ of a word: the ordered product of ρ(S) and diagonal powers of ρ(T).
pub fn rho_word(word: &GeneratorWord) -> RepMatrix {
    word.tokens()
        .iter()
        .fold(RepMatrix::identity(), |acc, t| match t {
            Token::S => acc.mul(rho_s()),
            Token::T(k) => acc.mul_rho_t_pow(k),
        })
}

/// ρ(A) through the Euclidean word decomposition of A.
pub fn rho_matrix(a: &UnimodularMatrix) -> RepMatrix {
    rho_word(&GeneratorWord::decompose(a))
}

/// A single entry ρ(word)[row][col], propagating one row vector instead of full matrices.
pub fn rho_word_entry(word: &GeneratorWord, row: usize, col: usize) -> Cyclotomic {
    let s = rho_s();
    let mut v: Vec<Cyclotomic> = (0..DIM)
        .map(|j| if j == row { Cyclotomic::one() } else { Cyclotomic::zero() })
        .collect();
    for t in word.tokens() {
        match t {
            Token::S => {
                let mut next = vec![Cyclotomic::zero(); DIM];
                for (i, vi) in v.iter().enumerate() {
                    if vi.is_zero() {
                        continue;
                    }
                    for (j, slot) in next.iter_mut().enumerate() {
                        let sij = s.get(i, j);
                        if !sij.is_zero() {
                            *slot += &(vi * sij);
                        }
                    }
                }
                v = next;
            }
            Token::T(k) => {
                let k = reduce_t_exponent(k);
                for (j, vj) in v.iter_mut().enumerate() {
                    *vj = vj.mul_zeta_pow(RHO_T_EXPONENTS[j] * k);
                }
            }
        }
    }
    v.swap_remove(col)
}

fn matrix_check(name: &str, actual: &RepMatrix, expected: &RepMatrix) -> Check {
    Check::from_result(name, actual.first_difference(expected).map_or(Ok(()), Err))
}

fn relations_report(s: &RepMatrix, t: &RepMatrix) -> Report {
    let mut report = Report::new("relations");
    let id = RepMatrix::identity();
    let s2 = s.mul(s);
    report.push(matrix_check("rho(S)^4 = I", &s2.mul(&s2), &id));
    report.push(matrix_check("(rho(S)rho(T))^3 = rho(S)^2", &s.mul(t).pow(3), &s2));
    report.push(matrix_check("rho(T)^12 = I", &t.pow(12), &id));
    report
}

/// The presentation relations S⁴ = 1, (ST)³ = S², T¹² = 1, plus unitarity and symmetry.
pub fn verify_relations() -> Report {
    let s = rho_s();
    let t = rho_t();
    let mut report = relations_report(s, t);
    let id = RepMatrix::identity();
    report.push(matrix_check("rho(S) unitary", &s.mul(&s.conjugate_transpose()), &id));
    report.push(matrix_check("rho(T) unitary", &t.mul(&t.conjugate_transpose()), &id));
    report.push(matrix_check("rho(S) symmetric", &s.transpose(), s));
    let w = Cyclotomic::w();
    let w_sq = &w * &w;
    let scaled = s.scale(&w);
    for r in 0..DIM {
        let norm: Cyclotomic = scaled.row(r).iter().map(Cyclotomic::norm_squared).sum();
        report.push(Check::equal(
            format!("row {} of w*rho(S) has squared norm w^2", r + 1),
            &w_sq,
            &norm,
        ));
    }
    report
}

/// ρ(P) = I₁₀ for each published generator P of Γ(12).
///
/// Each generator is evaluated through its published word and through the
/// word decomposition of its matrix; entries with a known erratum are also
/// evaluated through the corrected word.
pub fn verify_kernel_generators() -> Report {
    let mut report = Report::new("kernel");
    let id = RepMatrix::identity();
    for entry in gamma12_generator_table() {
        let name = entry.name;
        report.push(Check::equal(
            format!("{name}: published word {} evaluates to the matrix", entry.printed_word.to_compact()),
            &entry.matrix,
            &entry.printed_word.eval(),
        ));
        report.push(matrix_check(
            &format!("{name}: rho(published word) = I"),
            &rho_word(&entry.printed_word),
            &id,
        ));
        if entry.erratum.is_some() {
            report.push(Check::equal(
                format!("{name}: corrected word {} evaluates to the matrix", entry.word.to_compact()),
                &entry.matrix,
                &entry.word.eval(),
            ));
            report.push(matrix_check(
                &format!("{name}: rho(corrected word) = I"),
                &rho_word(&entry.word),
                &id,
            ));
        }
        report.push(matrix_check(
            &format!("{name}: rho(decomposition of matrix) = I"),
            &rho_matrix(&entry.matrix),
            &id,
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macro_entry_is_three_plus_root_three() {
        assert_eq!(macro_entry_value(), Cyclotomic::from_integer(3) + Cyclotomic::sqrt3());
    }

    #[test]
    fn rho_s_spot_entries() {
        let s = rho_s();
        let inv_w = Cyclotomic::w().inv().unwrap();
        assert_eq!(s.get(0, 0), &inv_w);
        assert_eq!(s.get(0, 6), &(macro_entry_value() * &inv_w));
        assert_eq!(s.transpose(), *s);
    }

    #[test]
    fn rho_t_spot_entries() {
        let t = rho_t();
        assert_eq!(t.get(0, 0), &Cyclotomic::one());
        assert_eq!(t.get(7, 7), &Cyclotomic::zeta_pow(8));
        assert_eq!(t.get(1, 1), &-Cyclotomic::zeta_pow(2));
        assert_eq!(t.get(8, 8), &Cyclotomic::zeta_pow(-4));
        assert!(t.pow(12).is_identity());
        assert!(!t.pow(6).is_identity());
    }

    #[test]
    fn wrong_macro_value_aborts_construction() {
        // [4] alone, or X with the wrong sign, breaks the row norms or the relations
        let err = build_rho_s(&SCALED_RHO_S, &quantum_integer(4)).unwrap_err();
        assert!(matches!(err, Error::Transcription(_)));
        let err = build_rho_s(&SCALED_RHO_S, &-macro_entry_value()).unwrap_err();
        assert!(matches!(err, Error::Transcription(_)), "{err}");
    }

    #[test]
    fn sign_flip_in_table_aborts_construction() {
        let mut table = SCALED_RHO_S;
        table[1][1] = "-iX";
        table[1][5] = "iX";
        table[5][1] = "iX";
        table[5][5] = "-iX";
        assert!(matches!(
            build_rho_s(&table, &macro_entry_value()),
            Err(Error::Transcription(_))
        ));
        let mut table = SCALED_RHO_S;
        table[4][7] = "-t";
        assert!(matches!(
            build_rho_s(&table, &macro_entry_value()),
            Err(Error::Transcription(_))
        ));
    }

    #[test]
    fn rho_word_examples() {
        assert!(rho_word(&GeneratorWord::new()).is_identity());
        assert!(rho_word(&"SSSS".parse().unwrap()).is_identity());
        assert!(rho_word(&"S2T12ST12S".parse().unwrap()).is_identity());
        assert!(rho_word(&"T^{-36}".parse().unwrap()).is_identity());
    }

    #[test]
    fn rho_matrix_examples() {
        assert!(rho_matrix(&UnimodularMatrix::identity()).is_identity());
        assert_eq!(rho_matrix(&UnimodularMatrix::s()), *rho_s());
        let minus_i = rho_matrix(&-&UnimodularMatrix::identity());
        assert_eq!(minus_i, rho_s().mul(rho_s()));
        assert!(minus_i.get(0, 0).is_one());
        assert!(!minus_i.is_identity());
    }

    #[test]
    fn single_entry_matches_full_product() {
        let w: GeneratorWord = "T^3ST^-5ST^2ST^-4STS".parse().unwrap();
        let full = rho_word(&w);
        for (r, c) in [(0, 0), (0, 6), (3, 2), (9, 9)] {
            assert_eq!(rho_word_entry(&w, r, c), *full.get(r, c));
        }
    }

    #[test]
    fn relations_all_pass() {
        let r = verify_relations();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks.len(), 6 + DIM);
    }

    #[test]
    fn kernel_report_flags_only_published_errata() {
        let r = verify_kernel_generators();
        let failed: Vec<&str> = r.failures().map(|c| c.check_name.as_str()).collect();
        assert_eq!(failed.len(), 4, "{r}");
        assert!(failed.iter().all(|n| n.starts_with("P_4:") || n.starts_with("P_{15}:")));
        assert!(r.checks.iter().filter(|c| c.check_name.contains("decomposition")).all(|c| c.pass));
        assert!(r.checks.iter().filter(|c| c.check_name.contains("corrected")).all(|c| c.pass));
    }
}
