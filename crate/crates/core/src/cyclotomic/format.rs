//! Text and JSON serializations, plus a readable surd rendering.
//!
//! Canonical text is `c0 + c1*z + c2*z^2 + ... + c7*z^7` with every coefficient
//! written as `num/den` in lowest terms (all eight terms, zeros included).
//! JSON is an array of eight `[num, den]` integer pairs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{solve, Cyclotomic, DEGREE};
use crate::error::Error;

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs().iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}/{}", c.numer(), c.denom())?;
            match k {
                0 => {}
                1 => f.write_str("*z")?,
                _ => write!(f, "*z^{k}")?,
            }
        }
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    let (n, d) = s.split_once('/').ok_or_else(bad)?;
    let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let terms: Vec<&str> = s.trim().split(" + ").collect();
        if terms.len() != DEGREE {
            return Err(Error::Parse(format!(
                "expected {DEGREE} terms, found {}",
                terms.len()
            )));
        }
        let mut coeffs: [BigRational; DEGREE] = Default::default();
        for (k, term) in terms.iter().enumerate() {
            let body = match k {
                0 => Some(*term),
                1 => term.strip_suffix("*z"),
                _ => term.strip_suffix(&format!("*z^{k}")),
            }
            .ok_or_else(|| Error::Parse(format!("term {k} is {term:?}")))?;
            coeffs[k] = parse_rational(body)?;
        }
        Ok(Cyclotomic::from_coeffs(&coeffs))
    }
}

fn json_int(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integer literal")
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(DEGREE))?;
        for c in self.coeffs() {
            seq.serialize_element(&[json_int(c.numer()), json_int(c.denom())])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs: Vec<[serde_json::Number; 2]> = Vec::deserialize(deserializer)?;
        if pairs.len() != DEGREE {
            return Err(D::Error::invalid_length(pairs.len(), &"8 [num, den] pairs"));
        }
        let mut coeffs: [BigRational; DEGREE] = Default::default();
        for (slot, [n, d]) in coeffs.iter_mut().zip(&pairs) {
            let n = BigInt::from_str(&n.to_string()).map_err(D::Error::custom)?;
            let d = BigInt::from_str(&d.to_string()).map_err(D::Error::custom)?;
            if d.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            *slot = BigRational::new(n, d);
        }
        Ok(Cyclotomic::from_coeffs(&coeffs))
    }
}

const SURD_NAMES: [&str; 4] = ["", "√2", "√3", "√6"];
const SURD_LIMIT: u64 = 1_000_000;

/// Inverse of the change of basis {1, √2, √3, √6, i, i√2, i√3, i√6} → power basis.
fn surd_coordinates_matrix() -> &'static Vec<Vec<BigRational>> {
    static CELL: OnceLock<Vec<Vec<BigRational>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let s2 = Cyclotomic::sqrt2();
        let s3 = Cyclotomic::sqrt3();
        let s6 = &s2 * &s3;
        let reals = [Cyclotomic::one(), s2, s3, s6];
        let i = Cyclotomic::i();
        let basis: Vec<[BigRational; DEGREE]> = reals
            .iter()
            .cloned()
            .chain(reals.iter().map(|r| r * &i))
            .map(|b| b.coeffs())
            .collect();
        let m: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|row| basis.iter().map(|col| col[row].clone()).collect())
            .collect();
        // column j of the inverse solves m·x = e_j; stored row-major
        let cols: Vec<Vec<BigRational>> = (0..DEGREE)
            .map(|j| {
                let mut e = vec![BigRational::zero(); DEGREE];
                e[j] = BigRational::one();
                solve(m.clone(), e).expect("surd basis is a basis")
            })
            .collect();
        (0..DEGREE)
            .map(|row| cols.iter().map(|c| c[row].clone()).collect())
            .collect()
    })
}

fn render_part(coords: &[BigRational]) -> String {
    let mut out = String::new();
    for (c, name) in coords.iter().zip(SURD_NAMES) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let (n, d) = (c.numer().abs(), c.denom().clone());
        if name.is_empty() {
            out.push_str(&n.to_string());
        } else if !n.is_one() {
            out.push_str(&n.to_string());
            out.push_str(name);
        } else {
            out.push_str(name);
        }
        if !d.is_one() {
            out.push('/');
            out.push_str(&d.to_string());
        }
    }
    out
}

impl Cyclotomic {
    /// Coordinates over {1, √2, √3, √6} for the real and imaginary parts.
    pub fn surd_coordinates(&self) -> [BigRational; DEGREE] {
        let inv = surd_coordinates_matrix();
        let c = self.coeffs();
        std::array::from_fn(|row| {
            inv[row]
                .iter()
                .zip(&c)
                .map(|(a, b)| a * b)
                .fold(BigRational::zero(), |acc, x| acc + x)
        })
    }

    /// The surd form when one exists, otherwise the canonical coefficient text.
    pub fn pretty(&self) -> String {
        self.surd_form().unwrap_or_else(|| self.to_string())
    }

    /// Renders the value as `a + b√2 + c√3 + d√6 + (…)i`, or `None` when some
    /// coefficient is too large to be worth reading.
    pub fn surd_form(&self) -> Option<String> {
        let coords = self.surd_coordinates();
        let limit = BigInt::from(SURD_LIMIT);
        if coords
            .iter()
            .any(|c| c.numer().abs() > limit || c.denom() > &limit)
        {
            return None;
        }
        let re = render_part(&coords[..4]);
        let im = render_part(&coords[4..]);
        Some(match (re.is_empty(), im.is_empty()) {
            (true, true) => "0".to_string(),
            (false, true) => re,
            (true, false) if im == "1" => "i".to_string(),
            (true, false) => format!("({im})i"),
            (false, false) if im == "1" => format!("{re} + i"),
            (false, false) => format!("{re} + ({im})i"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::quantum_integer;

    #[test]
    fn canonical_text() {
        let x = Cyclotomic::from_int_coeffs([1, 0, -1, 0, 0, 0, 0, 2]).scale(&BigRational::new(1.into(), 2.into()));
        let s = x.to_string();
        assert_eq!(
            s,
            "1/2 + 0/1*z + -1/2*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 1/1*z^7"
        );
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), x);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("1/1".parse::<Cyclotomic>().is_err());
        let bad = "1/0 + 0/1*z + 0/1*z^2 + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7";
        assert_eq!(bad.parse::<Cyclotomic>(), Err(Error::DivisionByZero));
        let swapped = "1/1 + 0/1*z^2 + 0/1*z + 0/1*z^3 + 0/1*z^4 + 0/1*z^5 + 0/1*z^6 + 0/1*z^7";
        assert!(swapped.parse::<Cyclotomic>().is_err());
    }

    #[test]
    fn json_shape() {
        let x = Cyclotomic::w().inv().unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            "[[1,4],[0,1],[-1,6],[0,1],[0,1],[0,1],[1,12],[0,1]]"
        );
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Cyclotomic>("[[1,1]]").is_err());
        let huge = "[[123456789012345678901234567891,7],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1],[0,1]]";
        let big: Cyclotomic = serde_json::from_str(huge).unwrap();
        assert_eq!(serde_json::to_string(&big).unwrap(), huge);
    }

    #[test]
    fn surd_rendering() {
        assert_eq!(quantum_integer(5).surd_form().unwrap(), "2 + √3");
        assert_eq!(Cyclotomic::w().surd_form().unwrap(), "6 + 2√3");
        assert_eq!(Cyclotomic::i().surd_form().unwrap(), "i");
        assert_eq!(Cyclotomic::zero().surd_form().unwrap(), "0");
        assert_eq!(quantum_integer(2).surd_form().unwrap(), "√2/2 + √6/2");
        let z3q4 = Cyclotomic::zeta_pow(3) * quantum_integer(4);
        assert_eq!(z3q4.surd_form().unwrap(), "3/2 + √3/2 + (3/2 + √3/2)i");
        assert_eq!((-Cyclotomic::sqrt3()).surd_form().unwrap(), "-√3");
    }
}
