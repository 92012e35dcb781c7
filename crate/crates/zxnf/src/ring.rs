//! Exact arithmetic in the ring of dyadic cyclotomic integers `Z[1/2, w]`,
//! where `w = e^{i pi/4}`.
//!
//! An element is stored as `(a0 + a1 w + a2 w^2 + a3 w^3) / 2^h`. The
//! representation is kept canonical (either `h = 0` or some coefficient is
//! odd, and zero has `h = 0`), so structural equality is value equality.
//! Coefficients live in `i64` while they fit and spill to `BigInt` otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ZxError;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Coeffs {
    Small([i64; 4]),
    Big(Box<[BigInt; 4]>),
}

/// An element of `Z[1/2, w]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingScalar {
    c: Coeffs,
    h: u32,
}

fn small_fits(b: &[BigInt; 4]) -> Option<[i64; 4]> {
    let mut out = [0i64; 4];
    for (o, x) in out.iter_mut().zip(b.iter()) {
        *o = x.to_i64()?;
    }
    Some(out)
}

impl RingScalar {
    fn from_small(mut a: [i64; 4], mut h: u32) -> Self {
        if a.iter().all(|x| *x == 0) {
            return RingScalar { c: Coeffs::Small([0; 4]), h: 0 };
        }
        if h > 0 {
            let tz = a.iter().filter(|x| **x != 0).map(|x| x.trailing_zeros()).min().unwrap();
            let k = tz.min(h);
            if k > 0 {
                for x in a.iter_mut() {
                    *x >>= k;
                }
                h -= k;
            }
        }
        RingScalar { c: Coeffs::Small(a), h }
    }

    fn from_big(mut a: [BigInt; 4], mut h: u32) -> Self {
        if a.iter().all(|x| x.is_zero()) {
            return Self::zero();
        }
        if h > 0 {
            let tz = a
                .iter()
                .filter(|x| !x.is_zero())
                .map(|x| x.trailing_zeros().unwrap() as u32)
                .min()
                .unwrap();
            let k = tz.min(h);
            if k > 0 {
                for x in a.iter_mut() {
                    *x = &*x >> k;
                }
                h -= k;
            }
        }
        match small_fits(&a) {
            Some(s) => RingScalar { c: Coeffs::Small(s), h },
            None => RingScalar { c: Coeffs::Big(Box::new(a)), h },
        }
    }

    /// Builds `(a0 + a1 w + a2 w^2 + a3 w^3) / 2^h` and canonicalises it.
    pub fn new(a: [BigInt; 4], h: u32) -> Self {
        Self::from_big(a, h)
    }

    pub fn from_ints(a: [i64; 4], h: u32) -> Self {
        Self::from_small(a, h)
    }

    pub fn zero() -> Self {
        RingScalar { c: Coeffs::Small([0; 4]), h: 0 }
    }

    pub fn one() -> Self {
        RingScalar { c: Coeffs::Small([1, 0, 0, 0]), h: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_small([n, 0, 0, 0], 0)
    }

    /// `w^k` for any integer `k`.
    pub fn omega(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut a = [0i64; 4];
        if k < 4 {
            a[k] = 1;
        } else {
            a[k - 4] = -1;
        }
        Self::from_small(a, 0)
    }

    /// `sqrt(2) = w - w^3`.
    pub fn sqrt2() -> Self {
        Self::from_small([0, 1, 0, -1], 0)
    }

    /// `1/sqrt(2) = (w - w^3)/2`.
    pub fn inv_sqrt2() -> Self {
        Self::from_small([0, 1, 0, -1], 1)
    }

    pub fn half() -> Self {
        Self::from_small([1, 0, 0, 0], 1)
    }

    /// `sqrt(2)^k` for any integer `k`.
    pub fn sqrt2_pow(k: i64) -> Self {
        let m = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        let base = if odd { Self::sqrt2() } else { Self::one() };
        base.mul_pow2(m)
    }

    /// Multiplies by `2^k`, `k` of either sign.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if k <= 0 {
            let (a, h) = self.big_parts();
            return Self::from_big(a, h + (-k) as u32);
        }
        let k = k as u32;
        if k <= self.h {
            return self.with_h(self.h - k);
        }
        let extra = k - self.h;
        let (a, _) = self.big_parts();
        Self::from_big(a.map(|x| x << extra), 0)
    }

    fn with_h(&self, h: u32) -> Self {
        match &self.c {
            Coeffs::Small(a) => Self::from_small(*a, h),
            Coeffs::Big(b) => Self::from_big((**b).clone(), h),
        }
    }

    fn big_parts(&self) -> ([BigInt; 4], u32) {
        match &self.c {
            Coeffs::Small(a) => (a.map(BigInt::from), self.h),
            Coeffs::Big(b) => ((**b).clone(), self.h),
        }
    }

    /// The four numerator coefficients.
    pub fn coeffs(&self) -> [BigInt; 4] {
        self.big_parts().0
    }

    /// The exponent of the power-of-two denominator.
    pub fn denom_exp(&self) -> u32 {
        self.h
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.c, Coeffs::Small(a) if a.iter().all(|x| *x == 0))
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Complex conjugation: `w -> w^7`.
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// The Galois automorphism `w -> w^j` for odd `j`.
    pub fn galois(&self, j: i64) -> Self {
        let j = j.rem_euclid(8);
        assert!(j % 2 == 1, "galois automorphism needs an odd exponent");
        let (a, h) = self.big_parts();
        let mut out: [BigInt; 4] = Default::default();
        for (k, x) in a.into_iter().enumerate() {
            let t = (k as i64 * j).rem_euclid(8) as usize;
            if t < 4 {
                out[t] += x;
            } else {
                out[t - 4] -= x;
            }
        }
        Self::from_big(out, h)
    }

    /// The rational value if the element is real-rational, as `(num, exp)`
    /// meaning `num / 2^exp`.
    pub fn as_rational(&self) -> Option<(BigInt, u32)> {
        let (a, h) = self.big_parts();
        if a[1].is_zero() && a[2].is_zero() && a[3].is_zero() {
            Some((a[0].clone(), h))
        } else {
            None
        }
    }

    /// `|x|^2` as an exact ring element.
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// If `|x|^2 = 2^r` returns `r`.
    pub fn modulus_log2_sq(&self) -> Option<i64> {
        let (n, h) = self.norm_sq().as_rational()?;
        if !n.is_positive() {
            return None;
        }
        let tz = n.trailing_zeros()? as i64;
        if n != BigInt::one() << tz {
            return None;
        }
        Some(tz - h as i64)
    }

    /// Inverse of a scalar of the form `+-sqrt2^r w^s`.
    pub fn inverse(&self) -> Result<Self, ZxError> {
        if self.is_zero() {
            return Err(ZxError::ZeroInverse);
        }
        let r = self.modulus_log2_sq().ok_or(ZxError::NotInvertible)?;
        // x^-1 = conj(x) / |x|^2 = conj(x) * 2^-r
        Ok(self.conj().mul_pow2(-r))
    }

    /// Exact quotient `self / d`, when it lies in the ring.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let co = &(&d.galois(3) * &d.galois(5)) * &d.galois(7);
        let (n, nh) = (d * &co).as_rational().expect("field norm is rational");
        let num = self * &co;
        let tz = n.trailing_zeros().unwrap();
        let odd = &n >> tz;
        let (mut a, h) = num.big_parts();
        for x in a.iter_mut() {
            let (q, r) = x.div_rem(&odd);
            if !r.is_zero() {
                return None;
            }
            *x = q;
        }
        Some(Self::from_big(a, h).mul_pow2(nh as i64 - tz as i64))
    }

    /// Floating point value, for display and diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let (a, h) = self.big_parts();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let f: Vec<f64> = a.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect();
        let re = f[0] + s * f[1] - s * f[3];
        let im = s * f[1] + f[2] + s * f[3];
        let d = 2f64.powi(h as i32);
        (re / d, im / d)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

fn add_impl(x: &RingScalar, y: &RingScalar, negate: bool) -> RingScalar {
    let h = x.h.max(y.h);
    if let (Coeffs::Small(a), Coeffs::Small(b)) = (&x.c, &y.c) {
        let (dx, dy) = (h - x.h, h - y.h);
        if dx < 62 && dy < 62 {
            let mut out = [0i64; 4];
            let mut ok = true;
            for k in 0..4 {
                let u = a[k].checked_mul(1i64 << dx);
                let v = b[k].checked_mul(1i64 << dy);
                let v = if negate { v.and_then(|v| v.checked_neg()) } else { v };
                match (u, v) {
                    (Some(u), Some(v)) => match u.checked_add(v) {
                        Some(s) => out[k] = s,
                        None => ok = false,
                    },
                    _ => ok = false,
                }
            }
            if ok {
                return RingScalar::from_small(out, h);
            }
        }
    }
    let (a, ah) = x.big_parts();
    let (b, bh) = y.big_parts();
    let mut out: [BigInt; 4] = Default::default();
    for k in 0..4 {
        let u = &a[k] << (h - ah);
        let v = &b[k] << (h - bh);
        out[k] = if negate { u - v } else { u + v };
    }
    RingScalar::from_big(out, h)
}

fn mul_impl(x: &RingScalar, y: &RingScalar) -> RingScalar {
    if x.is_zero() || y.is_zero() {
        return RingScalar::zero();
    }
    let h = x.h + y.h;
    if let (Coeffs::Small(a), Coeffs::Small(b)) = (&x.c, &y.c) {
        let mut acc = [0i128; 4];
        let mut ok = true;
        'outer: for i in 0..4 {
            for j in 0..4 {
                let p = a[i] as i128 * b[j] as i128;
                let k = i + j;
                let r = if k < 4 { acc[k].checked_add(p) } else { acc[k - 4].checked_sub(p) };
                match r {
                    Some(v) => acc[k % 4] = v,
                    None => {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            if acc.iter().all(|v| i64::try_from(*v).is_ok()) {
                return RingScalar::from_small(acc.map(|v| v as i64), h);
            }
            return RingScalar::from_big(acc.map(BigInt::from), h);
        }
    }
    let (a, _) = x.big_parts();
    let (b, _) = y.big_parts();
    let mut out: [BigInt; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            let p = &a[i] * &b[j];
            let k = i + j;
            if k < 4 {
                out[k] += p;
            } else {
                out[k - 4] -= p;
            }
        }
    }
    RingScalar::from_big(out, h)
}

impl<'a> Add<&'a RingScalar> for &'a RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: &RingScalar) -> RingScalar {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a RingScalar> for &'a RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: &RingScalar) -> RingScalar {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a RingScalar> for &'a RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: &RingScalar) -> RingScalar {
        mul_impl(self, rhs)
    }
}

impl Add for RingScalar {
    type Output = RingScalar;
    fn add(self, rhs: RingScalar) -> RingScalar {
        add_impl(&self, &rhs, false)
    }
}

impl Sub for RingScalar {
    type Output = RingScalar;
    fn sub(self, rhs: RingScalar) -> RingScalar {
        add_impl(&self, &rhs, true)
    }
}

impl Mul for RingScalar {
    type Output = RingScalar;
    fn mul(self, rhs: RingScalar) -> RingScalar {
        mul_impl(&self, &rhs)
    }
}

impl Neg for &RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        add_impl(&RingScalar::zero(), self, true)
    }
}

impl Neg for RingScalar {
    type Output = RingScalar;
    fn neg(self) -> RingScalar {
        -&self
    }
}

impl Default for RingScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, h) = self.big_parts();
        write!(f, "({},{},{},{})/2^{}", a[0], a[1], a[2], a[3], h)
    }
}

impl fmt::Debug for RingScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RingScalar {
    type Err = ZxError;

    /// Parses the `(a0,a1,a2,a3)/2^h` form written by `Display`.
    fn from_str(s: &str) -> Result<Self, ZxError> {
        let bad = || ZxError::Parse(format!("bad ring element `{s}`"));
        let s = s.trim();
        let (body, h) = match s.split_once("/2^") {
            Some((b, h)) => (b, h.trim().parse::<u32>().map_err(|_| bad())?),
            None => (s, 0),
        };
        let body = body.trim().strip_prefix('(').and_then(|b| b.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<&str> = body.split(',').collect();
        if parts.len() != 4 {
            return Err(bad());
        }
        let mut a: [BigInt; 4] = Default::default();
        for (x, p) in a.iter_mut().zip(parts) {
            *x = p.trim().parse::<BigInt>().map_err(|_| bad())?;
        }
        Ok(Self::new(a, h))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(x: &RingScalar, re: f64, im: f64) -> bool {
        let (a, b) = x.to_complex();
        (a - re).abs() < 1e-9 && (b - im).abs() < 1e-9
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(&RingScalar::sqrt2() * &RingScalar::sqrt2(), RingScalar::from_int(2));
        assert_eq!(&RingScalar::inv_sqrt2() * &RingScalar::sqrt2(), RingScalar::one());
    }

    #[test]
    fn omega_cycles() {
        assert_eq!(RingScalar::omega(8), RingScalar::one());
        assert_eq!(RingScalar::omega(4), RingScalar::from_int(-1));
        assert_eq!(&RingScalar::omega(3) * &RingScalar::omega(6), RingScalar::omega(1));
    }

    #[test]
    fn conj_of_omega() {
        assert_eq!(RingScalar::omega(1).conj(), RingScalar::omega(7));
        let x = RingScalar::from_ints([1, 2, 3, 4], 1);
        assert_eq!(x.conj(), RingScalar::from_ints([1, -4, -3, -2], 1));
    }

    #[test]
    fn canonical_halving() {
        let x = RingScalar::from_ints([2, 4, 0, -6], 1);
        assert_eq!(x, RingScalar::from_ints([1, 2, 0, -3], 0));
        assert_eq!(x.denom_exp(), 0);
        assert_eq!(RingScalar::from_ints([0, 0, 0, 0], 5).denom_exp(), 0);
    }

    #[test]
    fn inverse_of_unit_forms() {
        for r in -5..=5 {
            for s in 0..8 {
                let x = &RingScalar::sqrt2_pow(r) * &RingScalar::omega(s);
                assert_eq!(&x * &x.inverse().unwrap(), RingScalar::one());
                let y = -&x;
                assert_eq!(&y * &y.inverse().unwrap(), RingScalar::one());
            }
        }
    }

    #[test]
    fn one_plus_omega_is_not_a_stabilizer_unit() {
        let x = &RingScalar::one() + &RingScalar::omega(1);
        assert!(matches!(x.inverse(), Err(ZxError::NotInvertible)));
        // it still divides 2 in the ring
        let q = RingScalar::from_int(2).checked_div(&x).unwrap();
        assert_eq!(&q * &x, RingScalar::from_int(2));
    }

    #[test]
    fn checked_div_rejects_non_members() {
        assert!(RingScalar::one().checked_div(&RingScalar::from_int(3)).is_none());
        assert_eq!(
            RingScalar::from_int(6).checked_div(&RingScalar::from_int(3)),
            Some(RingScalar::from_int(2))
        );
    }

    #[test]
    fn display_round_trip_and_float() {
        let x = RingScalar::inv_sqrt2();
        assert_eq!(x.to_string(), "(0,1,0,-1)/2^1");
        assert_eq!(x.to_string().parse::<RingScalar>().unwrap(), x);
        assert!(close(&x, std::f64::consts::FRAC_1_SQRT_2, 0.0));
    }

    #[test]
    fn big_coefficients_spill_and_return() {
        let x = RingScalar::from_int(1 << 40);
        let y = &x * &x;
        let z = &y * &y; // 2^160
        assert_eq!(z.coeffs()[0], BigInt::one() << 160);
        let back = z.mul_pow2(-160);
        assert_eq!(back, RingScalar::one());
    }

    fn arb() -> impl Strategy<Value = RingScalar> {
        (prop::array::uniform4(-50i64..50), 0u32..4).prop_map(|(a, h)| RingScalar::from_ints(a, h))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb(), y in arb(), z in arb()) {
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&(&x - &y) + &y, x.clone());
            prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        }

        #[test]
        fn division_inverts_multiplication(x in arb(), y in arb()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).checked_div(&y), Some(x));
        }

        #[test]
        fn float_matches_exact_product(x in arb(), y in arb()) {
            let (a, b) = x.to_complex();
            let (c, d) = y.to_complex();
            let p = &x * &y;
            let (re, im) = p.to_complex();
            prop_assert!((re - (a * c - b * d)).abs() < 1e-6 * (1.0 + re.abs()));
            prop_assert!((im - (a * d + b * c)).abs() < 1e-6 * (1.0 + im.abs()));
        }
    }
}
