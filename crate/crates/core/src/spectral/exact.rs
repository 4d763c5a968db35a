//! Exact rational helpers and numbers of the form `r + √s`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `10^-e` as an exact rational.
pub fn ten_pow_neg(e: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u32).pow(e))
}

pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Smallest power of two `D` with `1/D <= bound`.
pub fn dyadic_denominator(bound: &BigRational) -> BigInt {
    assert!(bound.is_positive(), "resolution bound must be positive");
    let mut d = BigInt::one();
    while BigRational::new(BigInt::one(), d.clone()) > *bound {
        d <<= 1;
    }
    d
}

/// Smallest multiple of `1/den` that is >= `q`.
pub fn ceil_to(q: &BigRational, den: &BigInt) -> BigRational {
    let scaled = q * BigRational::from_integer(den.clone());
    BigRational::new(scaled.ceil().to_integer(), den.clone())
}

/// Upper-rounded square root of a nonnegative rational, to within `1/den`.
pub fn sqrt_upper(q: &BigRational, den: &BigInt) -> BigRational {
    assert!(!q.is_negative(), "square root of a negative rational");
    // ceil(sqrt(q) * den) = ceil(sqrt(q * den^2)); reduce to integers.
    let target = q * BigRational::from_integer(den * den);
    let numer = target.numer();
    let denom = target.denom();
    // sqrt(a/b) = sqrt(a*b)/b.
    let prod: BigInt = numer * denom;
    let mut s = prod.sqrt();
    // s = floor(sqrt(a*b)); ceil(sqrt(a*b)/b) needs the exact check below.
    if &s * &s < prod {
        s += 1;
    }
    let up = BigRational::new(s, denom.clone()).ceil().to_integer();
    BigRational::new(up, den.clone())
}

/// Exact value `rational + √radicand` with `radicand >= 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: BigRational,
    pub radicand: BigRational,
}

/// Sign of `b + c·√p` for `p >= 0`.
fn sign_of(b: &BigRational, c: &BigRational, p: &BigRational) -> Ordering {
    let sb = b.cmp(&BigRational::zero());
    let sc = if p.is_zero() { Ordering::Equal } else { c.cmp(&BigRational::zero()) };
    match (sb, sc) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (x, y) if x == y => x,
        // Opposite signs: compare b^2 with c^2 p.
        (sb, _) => {
            let lhs = b * b;
            let rhs = c * c * p;
            match lhs.cmp(&rhs) {
                Ordering::Greater => sb,
                Ordering::Less => sb.reverse(),
                Ordering::Equal => Ordering::Equal,
            }
        }
    }
}

impl QuadraticSurd {
    pub fn new(rational: BigRational, radicand: BigRational) -> Self {
        assert!(!radicand.is_negative(), "negative radicand");
        QuadraticSurd { rational, radicand }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.rational) + to_f64(&self.radicand).sqrt()
    }

    /// Rational upper bound within `1/den` of the exact value.
    pub fn upper(&self, den: &BigInt) -> BigRational {
        &self.rational + sqrt_upper(&self.radicand, den)
    }

    /// Exact comparison of `self` with `other`.
    pub fn cmp_exact(&self, other: &QuadraticSurd) -> Ordering {
        // sign((a + √p) − √q) with a = r1 − r2.
        let a = &self.rational - &other.rational;
        let p = &self.radicand;
        let q = &other.radicand;
        let one = BigRational::one();
        let left = sign_of(&a, &one, p);
        if left == Ordering::Less {
            return Ordering::Less;
        }
        if q.is_zero() {
            return left;
        }
        // Both sides nonnegative: compare squares, (a² + p − q) + 2a√p.
        let b = &a * &a + p - q;
        let c = &a * BigRational::from_integer(BigInt::from(2));
        sign_of(&b, &c, p)
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        self.cmp_exact(&QuadraticSurd::new(r.clone(), BigRational::zero()))
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + sqrt({}) (~{})", self.rational, self.radicand, self.to_f64())
    }
}

/// Exact conversion of a finite float to a rational.
pub fn from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// `p/q` string form used in reports.
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_upper_is_tight_upper_bound() {
        let den = BigInt::from(1u64 << 40);
        let two = int(2);
        let s = sqrt_upper(&two, &den);
        let f = to_f64(&s);
        assert!(f >= 2f64.sqrt() && f - 2f64.sqrt() < 1e-11);
        assert!(&s * &s >= two);
        assert_eq!(sqrt_upper(&rat(25, 4), &den), rat(5, 2));
        assert_eq!(sqrt_upper(&int(0), &den), int(0));
    }

    #[test]
    fn surd_comparisons() {
        let s = |r: i64, q: i64| QuadraticSurd::new(int(r), int(q));
        assert_eq!(s(1, 4).cmp_exact(&s(3, 0)), Ordering::Equal);
        assert_eq!(s(0, 2).cmp_exact(&s(1, 0)), Ordering::Greater);
        assert_eq!(s(-2, 2).cmp_exact(&s(0, 0)), Ordering::Less);
        assert_eq!(s(1, 2).cmp_exact(&s(0, 5)), Ordering::Greater); // 2.414 vs 2.236
        assert_eq!(s(0, 5).cmp_exact(&s(1, 2)), Ordering::Less);
        assert_eq!(s(-1, 9).cmp_exact(&s(0, 4)), Ordering::Equal);
        assert_eq!(s(-3, 2).cmp_exact(&s(-2, 0)), Ordering::Greater); // -1.586 > -2
    }

    #[test]
    fn ceil_and_dyadic() {
        let d = dyadic_denominator(&rat(1, 1000));
        assert_eq!(d, BigInt::from(1024));
        assert_eq!(ceil_to(&rat(1, 3), &BigInt::from(4)), rat(1, 2));
        assert_eq!(ceil_to(&rat(1, 2), &BigInt::from(4)), rat(1, 2));
        assert_eq!(rational_string(&rat(6, 4)), "3/2");
        assert_eq!(rational_string(&int(-3)), "-3");
    }
}
