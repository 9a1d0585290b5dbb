//! The 19 published normal generators of Γ(12) together with their S/T words.
//!
//! Two of the published words do not evaluate to their published matrices:
//! the word for P_4 lacks a leading S² (it evaluates to −P_4), and the word for
//! P_15 has T⁴ where T⁵ is needed (it evaluates to (133,−85;36,−23), which is
//! not even in Γ(12)). The table keeps the words exactly as published and
//! carries a corrected word for those two entries; everything downstream uses
//! [`GeneratorEntry::word`].

use super::{GeneratorWord, UnimodularMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct GeneratorEntry {
    pub name: &'static str,
    pub matrix: UnimodularMatrix,
    /// The word exactly as published.
    pub printed_word: GeneratorWord,
    /// A word that evaluates to `matrix`; equal to `printed_word` unless an erratum applies.
    pub word: GeneratorWord,
    pub erratum: Option<&'static str>,
}

impl GeneratorEntry {
    pub fn printed_word_is_correct(&self) -> bool {
        self.printed_word.eval() == self.matrix
    }
}

pub(crate) struct RawEntry {
    pub name: &'static str,
    pub matrix: [i64; 4],
    pub printed: &'static str,
    pub correction: Option<(&'static str, &'static str)>,
}

const fn entry(name: &'static str, matrix: [i64; 4], printed: &'static str) -> RawEntry {
    RawEntry {
        name,
        matrix,
        printed,
        correction: None,
    }
}

pub(crate) const RAW_TABLE: [RawEntry; 19] = [
    entry("P_{1,+}", [1, 12, 0, 1], "T^{12}"),
    entry("P_{1,-}", [1, -12, 0, 1], "T^{-12}"),
    entry("P_2", [-143, 12, -12, 1], "S^2T^{12}ST^{12}S"),
    entry("P_3", [-155, 84, -24, 13], "S^2T^{7}ST^{2}ST^{7}ST^{2}S"),
    RawEntry {
        name: "P_4",
        matrix: [-191, 156, -60, 49],
        printed: "T^{3}ST^{-5}ST^{2}ST^{-4}STS",
        correction: Some((
            "S^2T^{3}ST^{-5}ST^{2}ST^{-4}STS",
            "published word evaluates to -P_4; prefixed S^2",
        )),
    },
    entry("P_5", [-443, 120, -48, 13], "T^{9}ST^{-4}ST^{3}ST^{4}S"),
    entry("P_6", [-467, 360, -48, 37], "T^{10}ST^{4}ST^{3}ST^{-3}STS"),
    entry("P_7", [-299, 108, -36, 13], "T^{8}ST^{-3}ST^{4}ST^{3}S"),
    entry("P_8", [-311, 216, -36, 25], "T^{9}ST^{3}ST^{4}ST^{-2}STS"),
    entry("P_9", [937, -396, 168, -71], "T^{5}ST^{-2}ST^{-4}ST^{-4}ST^{-3}ST^{2}S"),
    entry("P_{10}", [157, -36, 48, -11], "T^{3}ST^{-4}ST^{-3}ST^{4}S"),
    entry("P_{11}", [157, -48, 36, -11], "T^{4}ST^{-3}ST^{-4}ST^{3}S"),
    entry("P_{12}", [205, -84, 144, -59], "TST^{-2}ST^{3}ST^{4}ST^{-2}ST^{2}S"),
    entry("P_{13}", [157, -72, 24, -11], "T^{6}ST^{-2}ST^{-6}ST^{2}S"),
    entry("P_{14}", [229, -132, 144, -83], "TST^{-2}ST^{-3}ST^{4}ST^{4}ST^{2}S"),
    RawEntry {
        name: "P_{15}",
        matrix: [169, -108, 36, -23],
        printed: "S^2T^{4}ST^{3}ST^{-3}ST^{2}ST^{2}S",
        correction: Some((
            "S^2T^{5}ST^{3}ST^{-3}ST^{2}ST^{2}S",
            "published word evaluates to (133,-85;36,-23); leading T^4 should be T^5",
        )),
    },
    entry("P_{16}", [181, -132, 48, -35], "T^{4}ST^{4}ST^{-3}ST^{-3}STS"),
    entry("P_{17}", [589, -108, 60, -11], "S^2T^{10}ST^{5}ST^{-2}ST^{5}S"),
    entry("P_{18}", [649, -384, 120, -71], "T^{5}ST^{-2}ST^{2}ST^{-4}ST^{3}ST^{2}S"),
];

/// Builds and self-checks the table.
///
/// Every matrix must have determinant 1 and lie in Γ(12), every effective word
/// must evaluate to its matrix, and a published word may fail to do so only
/// when the entry records an erratum.
pub(crate) fn build_table(raw: &[RawEntry]) -> Result<Vec<GeneratorEntry>> {
    raw.iter()
        .map(|r| {
            let fail = |msg: String| Error::Transcription(format!("{}: {msg}", r.name));
            let [a, b, c, d] = r.matrix;
            let matrix = UnimodularMatrix::new(a, b, c, d).map_err(|e| fail(e.to_string()))?;
            if !matrix.in_gamma12() {
                return Err(fail(format!("{matrix} is not congruent to I mod 12")));
            }
            let printed_word: GeneratorWord = r.printed.parse()?;
            let (word, erratum) = match r.correction {
                Some((fixed, note)) => (fixed.parse()?, Some(note)),
                None => (printed_word.clone(), None),
            };
            if word.eval() != matrix {
                return Err(fail(format!("word {word} evaluates to {}", word.eval())));
            }
            let printed_ok = printed_word.eval() == matrix;
            if printed_ok == erratum.is_some() {
                return Err(fail(format!(
                    "published word {printed_word} (evaluates to {}) disagrees with the erratum list",
                    printed_word.eval()
                )));
            }
            Ok(GeneratorEntry {
                name: r.name,
                matrix,
                printed_word,
                word,
                erratum,
            })
        })
        .collect()
}

/// The 19 (name, matrix, word) entries; panics if the built-in table fails its self-check.
pub fn gamma12_generator_table() -> Vec<GeneratorEntry> {
    build_table(&RAW_TABLE).unwrap_or_else(|e| panic!("{e}"))
}
