//! Seifert invariants `[g, n; (a1,b1), ..., (aM,bM)]`, their text form, and
//! the orbifold Chern number.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU32;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::ParseError;
use crate::rational::{self, Rational};

/// An exceptional fiber of type `(alpha, beta)`, `gcd(alpha, beta) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    pub alpha: i64,
    pub beta: i64,
}

impl Cone {
    pub fn new(alpha: i64, beta: i64) -> Result<Self, ParseError> {
        if alpha < 1 {
            return Err(ParseError::Semantic(format!(
                "cone ({alpha},{beta}): alpha must be at least 1"
            )));
        }
        if rational::gcd_i64(alpha, beta) != 1 {
            return Err(ParseError::Semantic(format!(
                "cone ({alpha},{beta}): gcd(alpha, beta) must be 1"
            )));
        }
        Ok(Cone { alpha, beta })
    }
}

/// A Seifert-fibered three-manifold over an orientable base of genus `g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SeifertData {
    genus: u32,
    euler_int: i64,
    cones: Vec<Cone>,
}

impl SeifertData {
    pub fn new(genus: u32, euler_int: i64, cones: Vec<Cone>) -> Result<Self, ParseError> {
        for c in &cones {
            Cone::new(c.alpha, c.beta)?;
        }
        Ok(SeifertData {
            genus,
            euler_int,
            cones,
        })
    }

    /// Convenience constructor from raw pairs.
    pub fn from_pairs(
        genus: u32,
        euler_int: i64,
        pairs: &[(i64, i64)],
    ) -> Result<Self, ParseError> {
        let cones = pairs
            .iter()
            .map(|&(a, b)| Cone::new(a, b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SeifertData {
            genus,
            euler_int,
            cones,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn euler_int(&self) -> i64 {
        self.euler_int
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// `prod alpha_j` over all cones (1 when there are none).
    pub fn alpha_product(&self) -> BigInt {
        self.cones
            .iter()
            .fold(BigInt::one(), |acc, c| acc * c.alpha)
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {};", self.genus, self.euler_int)?;
        for (i, c) in self.cones.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}({},{})", c.alpha, c.beta)?;
        }
        f.write_str("]")
    }
}

impl core::str::FromStr for SeifertData {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_seifert(s)
    }
}

/// `N = dim T`, the rank of the torus gauge group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusRank(NonZeroU32);

impl TorusRank {
    pub fn new(n: u32) -> Option<Self> {
        NonZeroU32::new(n).map(TorusRank)
    }

    pub fn get(self) -> u32 {
        self.0.get()
    }

    pub fn as_rational(self) -> Rational {
        rational::int(i64::from(self.get()))
    }
}

impl fmt::Display for TorusRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn render_seifert(d: &SeifertData) -> String {
    format!("{d}")
}

/// Parses `[g, n; (a1,b1), ..., (aM,bM)]`. Whitespace is free; `M` may be 0.
pub fn parse_seifert(text: &str) -> Result<SeifertData, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    p.expect('[', "'['")?;
    let genus_pos = p.pos;
    let genus = p.integer()?;
    p.expect(',', "','")?;
    let euler_int = p.integer()?;
    p.expect(';', "';'")?;
    let mut pairs = Vec::new();
    p.skip_ws();
    if p.peek() == Some('(') {
        loop {
            p.expect('(', "'('")?;
            let a = p.integer()?;
            p.expect(',', "','")?;
            let b = p.integer()?;
            p.expect(')', "')'")?;
            pairs.push((a, b));
            p.skip_ws();
            if p.peek() == Some(',') {
                p.pos += 1;
            } else {
                break;
            }
        }
    }
    p.expect(']', "',' or ']'")?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(ParseError::Syntax {
            position: p.pos,
            expected: "end of input",
        });
    }
    if genus < 0 {
        return Err(ParseError::Semantic(format!(
            "genus {genus} at position {genus_pos}: non-orientable bases are not supported"
        )));
    }
    let genus = u32::try_from(genus)
        .map_err(|_| ParseError::Semantic(format!("genus {genus} out of range")))?;
    SeifertData::from_pairs(genus, euler_int, &pairs)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::Syntax {
                position: self.pos,
                expected,
            })
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.peek() {
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let digits_start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits_start {
            return Err(ParseError::Syntax {
                position: digits_start,
                expected: "integer",
            });
        }
        let digits: String = self.chars[digits_start..self.pos].iter().collect();
        let magnitude: i128 = digits.parse().map_err(|_| {
            ParseError::Semantic(format!("integer at position {start} out of range"))
        })?;
        let value = if negative { -magnitude } else { magnitude };
        i64::try_from(value)
            .map_err(|_| ParseError::Semantic(format!("integer at position {start} out of range")))
    }
}

/// Removes every `(1, beta)` cone, folding `beta` into `n`.
pub fn normalize(d: &SeifertData) -> SeifertData {
    let mut euler_int = d.euler_int;
    let mut cones = Vec::with_capacity(d.cones.len());
    for c in &d.cones {
        if c.alpha == 1 {
            euler_int += c.beta;
        } else {
            cones.push(*c);
        }
    }
    SeifertData {
        genus: d.genus,
        euler_int,
        cones,
    }
}

/// Orbifold Chern number `c1(X) = n + sum_j beta_j / alpha_j`.
pub fn chern_number(d: &SeifertData) -> Rational {
    d.cones.iter().fold(rational::int(d.euler_int), |acc, c| {
        acc + rational::ratio(c.beta, c.alpha)
    })
}
