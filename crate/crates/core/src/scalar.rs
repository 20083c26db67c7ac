//! Scalars for the two simulation backends.
//!
//! [`CycScalar`] is an exact element of the cyclotomic field `Q(ζ)` with
//! `ζ = e^{iπ/4}`, restricted to dyadic coefficients. Every gate entry used by
//! the Ising braid representation (`1`, `i`, `ζ`, `1/√2`) lives in this ring,
//! so matrix identities can be checked with `==`. `Complex64` is the float
//! backend. Both implement [`Scalar`], which is what the rest of the crate is
//! generic over.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which arithmetic a computation ran with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(Error::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

/// Arithmetic shared by the exact and float backends.
///
/// Methods take references so the big-integer backend does not clone on
/// every operation.
pub trait Scalar: Clone + fmt::Debug + Send + Sync + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    /// `ζ^k` with `ζ = e^{iπ/4}`; `k` may be negative.
    fn zeta_pow(k: i64) -> Self;
    fn inv_sqrt2() -> Self;
    /// `num / 2^log2_den`.
    fn dyadic(num: i64, log2_den: u32) -> Self;
    /// Float conversion into the backend. The exact backend returns `None`.
    fn from_c64(z: Complex64) -> Option<Self>;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn half(&self) -> Self;

    fn mul_zeta_pow(&self, k: i64) -> Self {
        self.mul(&Self::zeta_pow(k))
    }

    fn norm_sqr(&self) -> Self {
        self.mul(&self.conj())
    }

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn to_c64(&self) -> Complex64;

    /// Equality for the exact backend, `|a - b| <= tol` for floats.
    fn close_to(&self, other: &Self, tol: f64) -> bool;

    /// `1/√x` for a positive real `x`, if it exists in the backend.
    ///
    /// Floats always succeed for `x > 0`. The exact backend succeeds when `x`
    /// is an even power of `√2`, which covers every measurement probability
    /// that shows up in the protocol.
    fn inv_sqrt_real(&self) -> Option<Self>;

    fn is_exact() -> bool {
        Self::BACKEND == Backend::Exact
    }
}

// ---------------------------------------------------------------------------
// Integers with a machine-word fast path.

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Int {
    Small(i64),
    // only holds values outside the i64 range
    Big(BigInt),
}

impl Int {
    const ZERO: Int = Int::Small(0);

    fn from_big(b: BigInt) -> Int {
        match b.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    fn add(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() + rhs.to_big())
    }

    fn sub(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() - rhs.to_big())
    }

    fn mul(&self, rhs: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() * rhs.to_big())
    }

    fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_big(-b.clone()),
        }
    }

    fn shl(&self, bits: u32) -> Int {
        if bits == 0 {
            return self.clone();
        }
        if let Int::Small(v) = self {
            if bits < 63 {
                if let Some(r) = v.checked_mul(1i64 << bits) {
                    return Int::Small(r);
                }
            }
        }
        Int::from_big(self.to_big() << bits as usize)
    }

    /// Exact halving; caller guarantees the value is even.
    fn halve(&self) -> Int {
        match self {
            Int::Small(v) => Int::Small(v / 2),
            Int::Big(b) => Int::from_big(b / 2),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(b) => b.is_zero(),
        }
    }

    fn is_even(&self) -> bool {
        match self {
            Int::Small(v) => v % 2 == 0,
            Int::Big(b) => (b % 2u32).is_zero(),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Int {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigInt>()
            .map(Int::from_big)
            .map_err(|e| Error::Parse(format!("bad integer `{s}`: {e}")))
    }
}

// ---------------------------------------------------------------------------

/// Exact element `(c0 + c1·ζ + c2·ζ² + c3·ζ³) / 2^k` of `Z[ζ][1/2]`.
///
/// Always stored in canonical form: the denominator exponent `k` is minimal
/// (some coefficient is odd, unless `k = 0`) and zero is `0 0 0 0 / 2^0`.
/// Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    coeffs: [Int; 4],
    exp: u32,
}

impl CycScalar {
    /// Builds `(c0 + c1 ζ + c2 ζ² + c3 ζ³) / 2^exp` and canonicalizes it.
    pub fn new(coeffs: [i64; 4], exp: u32) -> Self {
        Self::from_ints(coeffs.map(Int::Small), exp)
    }

    /// Same as [`CycScalar::new`] with arbitrary-precision numerators.
    pub fn from_big(coeffs: [BigInt; 4], exp: u32) -> Self {
        Self::from_ints(coeffs.map(Int::from_big), exp)
    }

    fn from_ints(coeffs: [Int; 4], exp: u32) -> Self {
        let mut z = CycScalar { coeffs, exp };
        z.canonicalize();
        z
    }

    fn canonicalize(&mut self) {
        if self.coeffs.iter().all(Int::is_zero) {
            self.exp = 0;
            return;
        }
        while self.exp > 0 && self.coeffs.iter().all(Int::is_even) {
            for c in self.coeffs.iter_mut() {
                *c = c.halve();
            }
            self.exp -= 1;
        }
    }

    pub fn zeta() -> Self {
        Self::new([0, 1, 0, 0], 0)
    }

    pub fn i() -> Self {
        Self::new([0, 0, 1, 0], 0)
    }

    /// `√2 = ζ - ζ³`.
    pub fn sqrt2() -> Self {
        Self::new([0, 1, 0, -1], 0)
    }

    /// Power of `√2` with a signed exponent.
    pub fn sqrt2_pow(k: i32) -> Self {
        // (√2)^k = 2^(k div 2) · (√2)^(k mod 2)
        let half = k.div_euclid(2);
        let odd = k.rem_euclid(2) == 1;
        let base = if odd { Self::sqrt2() } else { Self::one_value() };
        if half >= 0 {
            let coeffs = base.coeffs.clone().map(|c| c.shl(half as u32));
            Self::from_ints(coeffs, base.exp)
        } else {
            Self::from_ints(base.coeffs, base.exp + (-half) as u32)
        }
    }

    fn one_value() -> Self {
        Self::new([1, 0, 0, 0], 0)
    }

    /// Numerators as decimal strings, lowest power of `ζ` first.
    pub fn numerators(&self) -> [String; 4] {
        [0, 1, 2, 3].map(|k| self.coeffs[k].to_string())
    }

    /// Numerators as `i64`, when they all fit.
    pub fn numerators_i64(&self) -> Option<[i64; 4]> {
        let mut out = [0i64; 4];
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            match c {
                Int::Small(v) => *o = *v,
                Int::Big(_) => return None,
            }
        }
        Some(out)
    }

    /// Power-of-two denominator exponent `k`.
    pub fn denominator_exp(&self) -> u32 {
        self.exp
    }

    /// Parses numerators given as decimal strings.
    pub fn from_numerator_strs(nums: [&str; 4], exp: u32) -> Result<Self, Error> {
        let mut ints = [Int::ZERO, Int::ZERO, Int::ZERO, Int::ZERO];
        for (slot, s) in ints.iter_mut().zip(nums) {
            *slot = s.trim().parse()?;
        }
        Ok(Self::from_ints(ints, exp))
    }

    /// True iff `z · conj(z) = 1` exactly.
    pub fn unit_check(&self) -> bool {
        self.norm_sqr().is_one()
    }

    /// True iff the value equals its conjugate.
    pub fn is_real(&self) -> bool {
        *self == Scalar::conj(self)
    }

    fn aligned(&self, rhs: &CycScalar) -> ([Int; 4], [Int; 4], u32) {
        let exp = self.exp.max(rhs.exp);
        let a = self.coeffs.clone().map(|c| c.shl(exp - self.exp));
        let b = rhs.coeffs.clone().map(|c| c.shl(exp - rhs.exp));
        (a, b, exp)
    }

    fn rotate(&self, k: i64) -> CycScalar {
        // multiplication by ζ^k permutes coefficients with sign flips
        let mut out = self.coeffs.clone();
        for _ in 0..k.rem_euclid(8) {
            let [c0, c1, c2, c3] = out;
            out = [c3.neg(), c0, c1, c2];
        }
        CycScalar { coeffs: out, exp: self.exp }
    }
}

impl Scalar for CycScalar {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        CycScalar { coeffs: [Int::ZERO, Int::ZERO, Int::ZERO, Int::ZERO], exp: 0 }
    }

    fn one() -> Self {
        Self::one_value()
    }

    fn zeta_pow(k: i64) -> Self {
        let r = k.rem_euclid(8) as usize;
        let mut c = [0i64; 4];
        if r < 4 {
            c[r] = 1;
        } else {
            c[r - 4] = -1;
        }
        Self::new(c, 0)
    }

    fn inv_sqrt2() -> Self {
        Self::new([0, 1, 0, -1], 1)
    }

    fn dyadic(num: i64, log2_den: u32) -> Self {
        Self::new([num, 0, 0, 0], log2_den)
    }

    fn from_c64(_z: Complex64) -> Option<Self> {
        None
    }

    fn add(&self, rhs: &Self) -> Self {
        let (a, b, exp) = self.aligned(rhs);
        let coeffs = [0, 1, 2, 3].map(|k| a[k].add(&b[k]));
        Self::from_ints(coeffs, exp)
    }

    fn sub(&self, rhs: &Self) -> Self {
        let (a, b, exp) = self.aligned(rhs);
        let coeffs = [0, 1, 2, 3].map(|k| a[k].sub(&b[k]));
        Self::from_ints(coeffs, exp)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut acc = [Int::ZERO, Int::ZERO, Int::ZERO, Int::ZERO];
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let p = self.coeffs[i].mul(&rhs.coeffs[j]);
                let k = i + j;
                // ζ⁴ = -1
                if k < 4 {
                    acc[k] = acc[k].add(&p);
                } else {
                    acc[k - 4] = acc[k - 4].sub(&p);
                }
            }
        }
        Self::from_ints(acc, self.exp + rhs.exp)
    }

    fn neg(&self) -> Self {
        CycScalar { coeffs: self.coeffs.clone().map(|c| c.neg()), exp: self.exp }
    }

    fn conj(&self) -> Self {
        // ζ^-1 = -ζ³, ζ^-2 = -ζ², ζ^-3 = -ζ
        let [c0, c1, c2, c3] = &self.coeffs;
        CycScalar { coeffs: [c0.clone(), c3.neg(), c2.neg(), c1.neg()], exp: self.exp }
    }

    fn half(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_ints(self.coeffs.clone(), self.exp + 1)
    }

    fn mul_zeta_pow(&self, k: i64) -> Self {
        self.rotate(k)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Int::is_zero)
    }

    fn is_one(&self) -> bool {
        self.exp == 0
            && self.coeffs[0] == Int::Small(1)
            && self.coeffs[1..].iter().all(Int::is_zero)
    }

    fn to_c64(&self) -> Complex64 {
        // ζ = (1+i)/√2, ζ² = i, ζ³ = (-1+i)/√2
        let [c0, c1, c2, c3] = [0, 1, 2, 3].map(|i| self.coeffs[i].to_f64());
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let scale = 2f64.powi(-(self.exp as i32));
        Complex64::new((c0 + (c1 - c3) * h) * scale, (c2 + (c1 + c3) * h) * scale)
    }

    fn close_to(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn inv_sqrt_real(&self) -> Option<Self> {
        let v = self.to_c64().re;
        if v.is_nan() || v <= 0.0 || !self.is_real() {
            return None;
        }
        // candidate x = (√2)^t, so 1/√x = (√2)^(-t/2)
        let t = (2.0 * v.log2()).round() as i32;
        if t % 2 != 0 || CycScalar::sqrt2_pow(t) != *self {
            return None;
        }
        Some(CycScalar::sqrt2_pow(-t / 2))
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar({self})")
    }
}

/// Text form `a0 a1 a2 a3 / 2^k`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.coeffs;
        write!(f, "{a} {b} {c} {d} / 2^{}", self.exp)
    }
}

impl FromStr for CycScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("expected `a0 a1 a2 a3 / 2^k`, got `{s}`"));
        let (nums, den) = s.split_once('/').ok_or_else(bad)?;
        let exp: u32 = den.trim().strip_prefix("2^").ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
        let parts: Vec<&str> = nums.split_whitespace().collect();
        let parts: [&str; 4] = parts.try_into().map_err(|_| bad())?;
        Self::from_numerator_strs(parts, exp)
    }
}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        Scalar::add(self, rhs)
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        Scalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        Scalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        Scalar::neg(self)
    }
}

impl Scalar for Complex64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn zeta_pow(k: i64) -> Self {
        // exact table avoids drift from from_polar on the axes
        const H: f64 = std::f64::consts::FRAC_1_SQRT_2;
        match k.rem_euclid(8) {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(H, H),
            2 => Complex64::new(0.0, 1.0),
            3 => Complex64::new(-H, H),
            4 => Complex64::new(-1.0, 0.0),
            5 => Complex64::new(-H, -H),
            6 => Complex64::new(0.0, -1.0),
            _ => Complex64::new(H, -H),
        }
    }

    fn inv_sqrt2() -> Self {
        Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0)
    }

    fn dyadic(num: i64, log2_den: u32) -> Self {
        Complex64::new(num as f64 * 2f64.powi(-(log2_den as i32)), 0.0)
    }

    fn from_c64(z: Complex64) -> Option<Self> {
        Some(z)
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn half(&self) -> Self {
        self * 0.5
    }

    fn mul_zeta_pow(&self, k: i64) -> Self {
        match k.rem_euclid(8) {
            0 => *self,
            2 => Complex64::new(-self.im, self.re),
            4 => -self,
            6 => Complex64::new(self.im, -self.re),
            _ => self * <Complex64 as Scalar>::zeta_pow(k),
        }
    }

    fn norm_sqr(&self) -> Self {
        Complex64::new(Complex64::norm_sqr(self), 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn is_one(&self) -> bool {
        self.re == 1.0 && self.im == 0.0
    }

    fn to_c64(&self) -> Complex64 {
        *self
    }

    fn close_to(&self, other: &Self, tol: f64) -> bool {
        (self - other).norm() <= tol
    }

    fn inv_sqrt_real(&self) -> Option<Self> {
        (self.re > 0.0).then(|| Complex64::new(1.0 / self.re.sqrt(), 0.0))
    }
}
