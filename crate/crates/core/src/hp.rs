//! Binary fixed-point reals of arbitrary precision.
//!
//! A [`Real`] is `mantissa / 2^bits`. Values in one computation share the
//! same `bits`; mixing precisions panics. Rounding is to nearest at every
//! multiplication, so a chain of `n` operations loses about `log2 n` bits,
//! which callers cover with guard bits.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    bits: u32,
}

/// Bits needed for `digits` decimal digits, rounded up.
pub fn bits_for_digits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (u64::from(digits) * 33220 / 10000 + 1) as u32
}

fn round_shift(x: BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return x;
    }
    let half = BigInt::one() << (shift - 1);
    (x + half) >> shift
}

fn round_div(num: BigInt, den: &BigInt) -> BigInt {
    // den > 0
    let twice: BigInt = num * 2 + den;
    twice.div_floor(&(den * 2))
}

impl Real {
    pub fn zero(bits: u32) -> Self {
        Real {
            mantissa: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Real {
            mantissa: BigInt::one() << bits,
            bits,
        }
    }

    /// Nearest representable value to `q`.
    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        let scaled = q.numer() << bits;
        Real {
            mantissa: round_div(scaled, q.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn abs(&self) -> Self {
        Real {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    /// Square root of a non-negative value; negative input is clamped to 0.
    pub fn sqrt(&self) -> Self {
        if !self.mantissa.is_positive() {
            return Real::zero(self.bits);
        }
        let m = (&self.mantissa << self.bits).sqrt();
        Real {
            mantissa: m,
            bits: self.bits,
        }
    }

    /// Exact value of the representation.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.bits)
    }

    /// Change precision, rounding when reducing.
    pub fn with_bits(&self, bits: u32) -> Self {
        let mantissa = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (bits - self.bits),
            Ordering::Less => round_shift(self.mantissa.clone(), self.bits - bits),
        };
        Real { mantissa, bits }
    }

    fn check(&self, other: &Real) {
        assert_eq!(self.bits, other.bits, "mixed fixed-point precisions");
    }

    /// Decimal rendering with `significant` digits, rounded to nearest.
    /// Zero renders as `"0"`.
    pub fn to_decimal(&self, significant: u32) -> String {
        let significant = significant.max(1);
        if self.mantissa.is_zero() {
            return "0".into();
        }
        let negative = self.mantissa.is_negative();
        let m = self.mantissa.abs();
        let one = BigInt::one() << self.bits;
        // Decimal exponent e with 10^e <= |v| < 10^(e+1).
        let ten = BigInt::from(10);
        let mut e: i64 = 0;
        if m >= one {
            let int_part = &m >> self.bits;
            e = int_part.to_string().len() as i64 - 1;
        } else {
            let mut t = m.clone();
            while t < one {
                t *= &ten;
                e -= 1;
            }
        }
        let frac_digits = i64::from(significant) - 1 - e;
        let digits = if frac_digits >= 0 {
            let scaled = &m * ten.clone().pow(frac_digits as u32);
            round_shift(scaled, self.bits)
        } else {
            let scaled = round_shift(m, self.bits);
            round_div(scaled, &ten.clone().pow((-frac_digits) as u32))
        };
        let mut text = digits.to_string();
        let body = if frac_digits > 0 {
            let fd = frac_digits as usize;
            if text.len() <= fd {
                let pad = fd + 1 - text.len();
                text.insert_str(0, &"0".repeat(pad));
            }
            let split = text.len() - fd;
            format!("{}.{}", &text[..split], &text[split..])
        } else {
            text.push_str(&"0".repeat((-frac_digits) as usize));
            text
        };
        if negative {
            format!("-{body}")
        } else {
            body
        }
    }
}

impl Add for &Real {
    type Output = Real;

    fn add(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: &self.mantissa + &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Sub for &Real {
    type Output = Real;

    fn sub(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: &self.mantissa - &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl Mul for &Real {
    type Output = Real;

    fn mul(self, rhs: &Real) -> Real {
        self.check(rhs);
        Real {
            mantissa: round_shift(&self.mantissa * &rhs.mantissa, self.bits),
            bits: self.bits,
        }
    }
}

impl Neg for &Real {
    type Output = Real;

    fn neg(self) -> Real {
        Real {
            mantissa: -&self.mantissa,
            bits: self.bits,
        }
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.bits == other.bits).then(|| self.mantissa.cmp(&other.mantissa))
    }
}

/// `sum_{n>=0} (-1)^n x^(2n+1) / (2n+1)` for `x = 1/q`, `q >= 2`.
fn atan_inv(q: u32, bits: u32) -> BigInt {
    let q = BigInt::from(q);
    let q2 = &q * &q;
    let mut power = (BigInt::one() << bits) / &q;
    let mut total = BigInt::zero();
    let mut n: u32 = 0;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * n + 1);
        if n.is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        power /= &q2;
        n += 1;
    }
    total
}

/// `pi` to `bits` fractional bits, from Machin's formula.
pub fn pi(bits: u32) -> Real {
    let work = bits + 16;
    let m = atan_inv(5, work) * 16 - atan_inv(239, work) * 4;
    Real {
        mantissa: round_shift(m, 16),
        bits,
    }
}

/// `(cos x, sin x)` for `|x| <= 1` by their Taylor series.
fn cos_sin_small(x: &Real) -> (Real, Real) {
    let bits = x.bits;
    let x2 = x * x;
    let mut cos = Real::one(bits);
    let mut sin = x.clone();
    // term_c = (-1)^n x^(2n) / (2n)!, term_s = (-1)^n x^(2n+1) / (2n+1)!
    let mut term_c = Real::one(bits);
    let mut term_s = x.clone();
    let mut n: u64 = 1;
    loop {
        let dc = BigInt::from((2 * n - 1) * (2 * n));
        let ds = BigInt::from((2 * n) * (2 * n + 1));
        term_c = Real {
            mantissa: -(&term_c * &x2).mantissa / dc,
            bits,
        };
        term_s = Real {
            mantissa: -(&term_s * &x2).mantissa / ds,
            bits,
        };
        if term_c.is_zero() && term_s.is_zero() {
            break;
        }
        cos = &cos + &term_c;
        sin = &sin + &term_s;
        n += 1;
    }
    (cos, sin)
}

/// Evaluates `cos(pi q)` and `sin(pi q)` at a fixed precision, computing
/// `pi` once.
#[derive(Debug, Clone)]
pub struct Trig {
    bits: u32,
    work: u32,
    pi: Real,
}

impl Trig {
    pub fn new(bits: u32) -> Self {
        let work = bits + 24;
        Trig {
            bits,
            work,
            pi: pi(work),
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `(cos(pi q), sin(pi q))` for rational `q`.
    ///
    /// `q` is reduced mod 2 and split as `m/2 + r` with `|r| <= 1/4`, so
    /// quarter-turn multiples are exact and only `|pi r| <= pi/4` hits the series.
    pub fn cos_sin_pi(&self, q: &Rational) -> (Real, Real) {
        let work = self.work;
        let t = rational::rem_euclid(q, &rational::int(2));
        let twice = &t * rational::int(2);
        let quarter_turns = twice.round();
        let r = (twice - &quarter_turns) / rational::int(2);
        let (c, s) = if r.is_zero() {
            (Real::one(work), Real::zero(work))
        } else {
            let x = &self.pi * &Real::from_rational(&r, work);
            cos_sin_small(&x)
        };
        let quadrant = quarter_turns.to_integer().mod_floor(&BigInt::from(4));
        let (c, s) = match u8::try_from(quadrant).unwrap_or(0) {
            0 => (c, s),
            1 => (-&s, c),
            2 => (-&c, -&s),
            _ => (s, -&c),
        };
        (c.with_bits(self.bits), s.with_bits(self.bits))
    }

    /// `exp(i pi q)`.
    pub fn unit_pi(&self, q: &Rational) -> Complex {
        let (re, im) = self.cos_sin_pi(q);
        Complex { re, im }
    }
}

/// `(cos(pi q), sin(pi q))`; see [`Trig::cos_sin_pi`].
pub fn cos_sin_pi(q: &Rational, bits: u32) -> (Real, Real) {
    Trig::new(bits).cos_sin_pi(q)
}

/// Complex number over [`Real`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn zero(bits: u32) -> Self {
        Complex {
            re: Real::zero(bits),
            im: Real::zero(bits),
        }
    }

    /// `exp(i pi q)`.
    pub fn unit_pi(q: &Rational, bits: u32) -> Self {
        let (re, im) = cos_sin_pi(q, bits);
        Complex { re, im }
    }

    pub fn scale(&self, w: &Real) -> Self {
        Complex {
            re: &self.re * w,
            im: &self.im * w,
        }
    }

    pub fn norm(&self) -> Real {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }
}

impl Add for &Complex {
    type Output = Complex;

    fn add(self, rhs: &Complex) -> Complex {
        Complex {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}
