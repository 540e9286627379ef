//! Dyadic floating-point numbers `man · 2^exp` with explicit directed rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
}

/// Exact dyadic rational. Arithmetic that can be exact (`+`, `-`, `*`) is exact;
/// division and square root take a precision and a rounding direction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Float {
    man: BigInt,
    exp: i64,
}

impl Float {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            return Self::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        Float { man: man >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Self {
        Float { man: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Float { man: BigInt::one(), exp: 0 }
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self::new(v.into(), 0)
    }

    /// Exact conversion; panics on non-finite input.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite float {x}");
        if x == 0.0 {
            return Self::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let raw_exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if raw_exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), raw_exp - 1075) };
        Self::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.man.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Bit length of the mantissa.
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// `e` with `2^(e-1) <= |x| < 2^e`; `i64::MIN` for zero.
    pub fn magnitude(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.man.bits() as i64
        }
    }

    pub fn neg(&self) -> Self {
        Float { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Float { man: self.man.abs(), exp: self.exp }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &other.man << (other.exp - e) as usize;
        Self::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.man * &other.man, self.exp + other.exp)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Float { man: self.man.clone(), exp: self.exp + k }
    }

    /// Round to at most `prec` mantissa bits.
    pub fn round(&self, prec: u32, dir: Round) -> Self {
        let bits = self.man.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let man = match dir {
            Round::Floor => &self.man >> shift,
            Round::Ceil => -((-&self.man) >> shift),
        };
        Self::new(man, self.exp + shift as i64)
    }

    /// Largest (Floor) or smallest (Ceil) integer on the requested side.
    pub fn to_integer(&self, dir: Round) -> BigInt {
        if self.exp >= 0 {
            return &self.man << self.exp as usize;
        }
        let shift = (-self.exp) as u64;
        match dir {
            Round::Floor => &self.man >> shift,
            Round::Ceil => -((-&self.man) >> shift),
        }
    }

    /// `self / other` rounded to `prec` bits in direction `dir`.
    pub fn div(&self, other: &Self, prec: u32, dir: Round) -> Self {
        assert!(!other.is_zero(), "division by zero");
        if self.is_zero() {
            return Self::zero();
        }
        let shift = (prec as i64 + 2 + other.man.bits() as i64 - self.man.bits() as i64).max(0);
        let num = &self.man << shift as usize;
        let (mut q, r) = num.div_mod_floor(&other.man);
        if dir == Round::Ceil && !r.is_zero() {
            q += 1;
        }
        Self::new(q, self.exp - shift - other.exp).round(prec, dir)
    }

    /// Square root of a non-negative number, rounded to `prec` bits.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return Self::zero();
        }
        let want = 2 * (prec as i64 + 2);
        let mut shift = (want - self.man.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let m = &self.man << shift as usize;
        let mut r = m.sqrt();
        if dir == Round::Ceil && &r * &r != m {
            r += 1;
        }
        Self::new(r, (self.exp - shift) / 2).round(prec, dir)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let r = self.round(60, Round::Floor);
        let m = r.man.to_f64().unwrap_or(f64::NAN);
        let e = r.exp.clamp(-2000, 2000) as i32;
        m * 2f64.powi(e / 2) * 2f64.powi(e - e / 2)
    }

    /// `(numerator, denominator)` of the exact value.
    pub fn to_ratio(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.man << self.exp as usize, BigInt::one())
        } else {
            (self.man.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    /// Fixed-point decimal with `frac_digits` digits after the point, rounded to nearest.
    pub fn to_decimal(&self, frac_digits: usize) -> String {
        let (num, den) = self.to_ratio();
        let scaled = num * BigInt::from(10u32).pow(frac_digits as u32);
        let two = BigInt::from(2u32);
        let twice = (scaled * &two + &den).div_floor(&(den * &two));
        let neg = twice.is_negative();
        let digits = twice.abs().to_string();
        let body = if frac_digits == 0 {
            digits
        } else {
            let padded = format!("{digits:0>width$}", width = frac_digits + 1);
            let (int, frac) = padded.split_at(padded.len() - frac_digits);
            format!("{int}.{frac}")
        };
        if neg && body.chars().any(|c| c != '0' && c != '.') {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Scientific notation with `sig` significant digits, rounded away from zero
    /// so that the printed value bounds `|self|` from above.
    pub fn to_sci_up(&self, sig: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sig = sig.max(1);
        let (num, den) = self.abs().to_ratio();
        let ten = BigInt::from(10u32);
        let mut e = ((self.magnitude() - 1) as f64 * std::f64::consts::LOG10_2).floor() as i64;
        let pow = |k: i64| ten.pow(k.unsigned_abs() as u32);
        // locate e with 10^e <= x < 10^(e+1)
        let ge = |e: i64, num: &BigInt, den: &BigInt| {
            if e >= 0 {
                *num >= den * pow(e)
            } else {
                num * pow(e) >= *den
            }
        };
        while !ge(e, &num, &den) {
            e -= 1;
        }
        while ge(e + 1, &num, &den) {
            e += 1;
        }
        let k = sig as i64 - 1 - e;
        let (n2, d2) = if k >= 0 { (num * pow(k), den) } else { (num, den * pow(k)) };
        let mut digits = n2.div_ceil(&d2);
        if digits >= pow(sig as i64) {
            digits = digits.div_ceil(&ten);
            e += 1;
        }
        let s = digits.to_string();
        let mantissa = if s.len() > 1 { format!("{}.{}", &s[..1], &s[1..]) } else { s };
        format!("{mantissa}e{e}")
    }
}

impl PartialOrd for Float {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Float {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sub(other).man.sign().cmp(&Sign::NoSign)
    }
}

impl From<i64> for Float {
    fn from(v: i64) -> Self {
        Float::from_int(v)
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}
