//! Words in the generators S and T of SL(2,ℤ).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::UnimodularMatrix;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Token {
    S,
    /// Tᵏ with k ≠ 0.
    T(BigInt),
}

/// A product of S and Tᵏ tokens, read left to right.
///
/// Adjacent T powers are always merged and T⁰ never appears; S may repeat.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord {
    tokens: Vec<Token>,
}

impl GeneratorWord {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_tokens(tokens: impl IntoIterator<Item = Token>) -> Self {
        let mut w = Self::new();
        for t in tokens {
            match t {
                Token::S => w.push_s(),
                Token::T(k) => w.push_t(k),
            }
        }
        w
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn push_s(&mut self) {
        self.tokens.push(Token::S);
    }

    pub fn push_t(&mut self, k: impl Into<BigInt>) {
        let k = k.into();
        if k.is_zero() {
            return;
        }
        if let Some(Token::T(prev)) = self.tokens.last_mut() {
            *prev += k;
            if prev.is_zero() {
                self.tokens.pop();
            }
        } else {
            self.tokens.push(Token::T(k));
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &GeneratorWord) -> GeneratorWord {
        GeneratorWord::from_tokens(self.tokens.iter().chain(&other.tokens).cloned())
    }

    /// Left-to-right product of the token matrices; the empty word is I.
    pub fn eval(&self) -> UnimodularMatrix {
        self.tokens
            .iter()
            .fold(UnimodularMatrix::identity(), |acc, t| match t {
                Token::S => &acc * &UnimodularMatrix::s(),
                Token::T(k) => &acc * &UnimodularMatrix::t_pow(k.clone()),
            })
    }

    /// Writes `m` as a word in S and T by Euclidean descent on the first column.
    ///
    /// Right-multiplying by Tᵏ·S replaces the lower row (c, d) by (d + kc, −c);
    /// choosing k = −round(d/c) at least halves |c|. Once c = 0 the matrix is
    /// ±Tⁿ. Since S⁻¹ = −S, undoing the steps only costs a global sign, which
    /// becomes a leading S² when negative.
    pub fn decompose(m: &UnimodularMatrix) -> GeneratorWord {
        let mut cur = m.clone();
        let mut steps: Vec<BigInt> = Vec::new();
        let two = BigInt::from(2);
        while !cur.a21().is_zero() {
            let c = cur.a21().clone();
            let d = cur.a22().clone();
            // round(d/c) = floor((2d + c) / 2c)
            let k = -(&two * &d + &c).div_floor(&(&two * &c));
            cur = &(&cur * &UnimodularMatrix::t_pow(k.clone())) * &UnimodularMatrix::s();
            steps.push(k);
        }
        // cur = ε·Tⁿ
        let epsilon_negative = cur.a11().is_negative();
        let n = cur.a11() * cur.a12();
        let negative = epsilon_negative ^ (steps.len() % 2 == 1);

        let mut word = GeneratorWord::new();
        if negative {
            word.push_s();
            word.push_s();
        }
        word.push_t(n);
        for k in steps.into_iter().rev() {
            word.push_s();
            word.push_t(-k);
        }
        word
    }

    /// Compact form such as `S2T12ST12S`.
    pub fn to_compact(&self) -> String {
        self.render(false)
    }

    fn render(&self, pretty: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.tokens.len() {
            match &self.tokens[i] {
                Token::S => {
                    let run = self.tokens[i..]
                        .iter()
                        .take_while(|t| **t == Token::S)
                        .count();
                    parts.push(match (run, pretty) {
                        (1, _) => "S".to_string(),
                        (n, true) => format!("S^{n}"),
                        (n, false) => format!("S{n}"),
                    });
                    i += run;
                }
                Token::T(k) => {
                    parts.push(match (k.is_one(), pretty) {
                        (true, _) => "T".to_string(),
                        (false, true) => format!("T^{k}"),
                        (false, false) => format!("T{k}"),
                    });
                    i += 1;
                }
            }
        }
        if parts.is_empty() {
            return "I".to_string();
        }
        parts.join(if pretty { " " } else { "" })
    }
}

impl fmt::Display for GeneratorWord {
    /// Pretty form such as `S^2 T^12 S T^12 S`; the empty word prints as `I`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    /// Accepts the compact and pretty forms, and braced exponents like `T^{-4}`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut word = GeneratorWord::new();
        if chars == ['I'] {
            return Ok(word);
        }
        let mut i = 0;
        let err = |msg: String| Error::Parse(format!("word {s:?}: {msg}"));
        while i < chars.len() {
            let gen = chars[i];
            if gen != 'S' && gen != 'T' {
                return Err(err(format!("unexpected {gen:?}")));
            }
            i += 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
            }
            let braced = chars.get(i) == Some(&'{');
            if braced {
                i += 1;
            }
            let start = i;
            if matches!(chars.get(i), Some('-') | Some('+')) {
                i += 1;
            }
            while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            if braced {
                if chars.get(i) != Some(&'}') {
                    return Err(err("unclosed brace".into()));
                }
                i += 1;
            }
            let exp = if digits.is_empty() {
                BigInt::one()
            } else {
                BigInt::from_str(&digits).map_err(|_| err(format!("bad exponent {digits:?}")))?
            };
            match gen {
                'S' => {
                    if exp.is_negative() {
                        return Err(err("negative power of S".into()));
                    }
                    let mut n = exp;
                    while n.is_positive() {
                        word.push_s();
                        n -= 1;
                    }
                }
                _ => word.push_t(exp),
            }
        }
        Ok(word)
    }
}
