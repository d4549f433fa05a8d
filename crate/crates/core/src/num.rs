//! Exact rational and complex-rational scalars.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn half() -> Q {
    Q::new(1, 2)
}

pub fn is_integer(x: &Q) -> bool {
    x.is_integer()
}

/// True when `x - 1/2` is an integer.
pub fn is_half_odd(x: &Q) -> bool {
    (x - half()).is_integer()
}

/// Parse `"n"`, `"-n"` or `"n/d"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::Validation(format!("not a rational: {s:?}"));
    let parse_i = |t: &str| -> Result<i64, Error> {
        let t = t.trim();
        if t.is_empty() || t.len() > 18 {
            return Err(bad());
        }
        t.parse::<i64>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(q(parse_i(s)?)),
        Some((n, d)) => {
            let n = parse_i(n)?;
            let d = parse_i(d)?;
            if d == 0 {
                return Err(Error::Validation(format!("zero denominator in {s:?}")));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// Always `num/den` with positive reduced denominator.
pub fn format_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Compact human form: `3`, `-1/2`.
pub fn show_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Complex rational `re + i·im`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct C {
    pub re: Q,
    pub im: Q,
}

impl C {
    pub fn new(re: Q, im: Q) -> C {
        C { re, im }
    }
    pub fn real(re: Q) -> C {
        C { re, im: Q::zero() }
    }
    pub fn int(n: i64) -> C {
        C::real(q(n))
    }
    pub fn zero() -> C {
        C::default()
    }
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
    pub fn is_integer(&self) -> bool {
        self.is_real() && self.re.is_integer()
    }
    pub fn is_half_odd(&self) -> bool {
        self.is_real() && is_half_odd(&self.re)
    }
    pub fn scale(&self, k: Q) -> C {
        C::new(self.re * k, self.im * k)
    }
    /// Sign normalisation used for Weyl-orbit normal forms: `z` is
    /// "nonnegative" when `(re, im) >= (0, 0)` lexicographically.
    pub fn is_nonneg(&self) -> bool {
        self.re > Q::zero() || (self.re.is_zero() && self.im >= Q::zero())
    }
    pub fn abs_like(&self) -> C {
        if self.is_nonneg() {
            *self
        } else {
            -*self
        }
    }
}

impl Ord for C {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then(self.im.cmp(&other.im))
    }
}

impl PartialOrd for C {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        C::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        C::new(self.re - o.re, self.im - o.im)
    }
}

impl Neg for C {
    type Output = C;
    fn neg(self) -> C {
        C::new(-self.re, -self.im)
    }
}

impl Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        C::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl fmt::Display for C {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", show_q(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", show_q(&self.im))
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", show_q(&self.re), show_q(&-self.im))
        } else {
            write!(f, "{}+{}i", show_q(&self.re), show_q(&self.im))
        }
    }
}

/// Exact factorial.
pub fn factorial(n: u64) -> num_bigint::BigUint {
    (1..=n).fold(num_bigint::BigUint::one(), |acc, k| acc * k)
}

/// gcd helper for small integers.
pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
