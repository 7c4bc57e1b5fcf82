//! Exact scalar fields.
//!
//! Two implementations of [`Field`] are provided: [`Rational`], the field of
//! rational numbers with arbitrary precision, and [`Fp`], the prime field
//! `GF(P)` with the modulus fixed at compile time.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field.
///
/// All arithmetic in the crate goes through this trait, so every equality
/// test is an exact equality.
pub trait Field:
    Clone
    + Eq
    + Ord
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// 0 for the rationals.
    fn characteristic() -> u64;
    /// Short name used in files and reports, e.g. `Q` or `GF(7)`.
    fn name() -> String;
    fn parse(s: &str) -> Option<Self>;
    /// All roots in the field of the polynomial with the given coefficients
    /// (constant term first), without multiplicity, in ascending order.
    fn roots(poly: &[Self]) -> Vec<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a.clone() * b.clone();
    }
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

/// Arbitrary precision rational number.
///
/// Values whose reduced numerator and denominator fit into `i64` are kept
/// inline; everything else is boxed as a [`BigRational`]. The representation
/// is canonical, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Reduced, denominator > 0.
    Small(i64, i64),
    /// Reduced, and does not fit `Small`.
    Big(Box<BigRational>),
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            )))),
        }
    }

    pub fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with a positive denominator.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Rational(Repr::Small(n, d));
        }
        Rational(Repr::Big(Box::new(r)))
    }

    fn big_op(&self, rhs: &Self, op: impl Fn(BigRational, BigRational) -> BigRational) -> Self {
        Self::from_big(op(self.to_big(), rhs.to_big()))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(Repr::Small(v, 1))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    return Self::from_i128(a + c, b);
                }
                // |a*d| < 2^126, so the sum cannot overflow i128.
                Self::from_i128(a * d + c * b, b * d)
            }
            _ => self.big_op(&rhs, |x, y| x + y),
        }
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => self.big_op(&rhs, |x, y| x * y),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(n) => Rational(Repr::Small(n, d)),
                None => Self::from_big(-BigRational::new_raw(BigInt::from(n), BigInt::from(d))),
            },
            Repr::Big(b) => Self::from_big(-*b),
        }
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        let lhs = core::mem::replace(self, Rational(Repr::Small(0, 1)));
        *self = lhs + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        let lhs = core::mem::replace(self, Rational(Repr::Small(0, 1)));
        *self = lhs - rhs;
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    fn from_i64(v: i64) -> Self {
        v.into()
    }

    fn inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn name() -> String {
        "Q".into()
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Self::from_big(BigRational::new(n, d)))
    }

    fn roots(poly: &[Self]) -> Vec<Self> {
        rational_roots(poly)
    }
}

/// Largest integer whose divisors are enumerated when searching rational
/// roots. Coefficients beyond this make [`Field::roots`] return only the
/// roots it can certify (zero).
const MAX_ROOT_SEARCH: u64 = 1 << 24;

fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let mut coeffs: Vec<Rational> = poly.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    // Strip factors of x.
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
        coeffs.drain(..low);
    }
    if coeffs.len() <= 1 {
        return roots;
    }
    // Clear denominators.
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    let (Some(a0), Some(an)) = (a0.to_u64(), an.to_u64()) else {
        return roots;
    };
    if a0 > MAX_ROOT_SEARCH || an > MAX_ROOT_SEARCH {
        return roots;
    }
    for p in divisors(a0) {
        for q in divisors(an) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(sign * p as i64, q as i64);
                if eval(&coeffs, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}

/// Horner evaluation, constant term first.
pub fn eval<F: Field>(poly: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in poly.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

/// Residue class modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u64> AddAssign for Fp<P> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<const P: u64> SubAssign for Fp<P> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn from_i64(v: i64) -> Self {
        Self::new(v)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn characteristic() -> u64 {
        P
    }

    fn name() -> String {
        format!("GF({P})")
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = Self::parse(n)?;
                let d = Self::parse(d)?;
                Some(n * d.inv()?)
            }
            None => {
                let v: i128 = s.parse().ok()?;
                Some(Fp(v.rem_euclid(P as i128) as u64))
            }
        }
    }

    fn roots(poly: &[Self]) -> Vec<Self> {
        if poly.iter().all(|c| c.is_zero()) {
            return Vec::new();
        }
        // Exhaustive search; only meant for small moduli.
        let limit = P.min(1 << 16);
        (0..limit).map(Fp).filter(|x| eval(poly, x).is_zero()).collect()
    }
}

/// Coefficients (constant first) of the characteristic polynomial
/// `det(x I - A)` of a square matrix, by the Hessenberg method.
pub fn char_poly<F: Field>(a: &[Vec<F>]) -> Vec<F> {
    let n = a.len();
    let mut h: Vec<Vec<F>> = a.to_vec();
    // Reduce to upper Hessenberg form by similarity transforms.
    for k in 0..n.saturating_sub(2) {
        let Some(piv) = (k + 1..n).find(|&i| !h[i][k].is_zero()) else {
            continue;
        };
        if piv != k + 1 {
            h.swap(piv, k + 1);
            for row in h.iter_mut() {
                row.swap(piv, k + 1);
            }
        }
        let inv = h[k + 1][k].inv().expect("nonzero pivot");
        for i in k + 2..n {
            if h[i][k].is_zero() {
                continue;
            }
            let f = h[i][k].clone() * inv.clone();
            for j in 0..n {
                let t = f.clone() * h[k + 1][j].clone();
                h[i][j] -= t;
            }
            for row in h.iter_mut() {
                let t = f.clone() * row[i].clone();
                row[k + 1] += t;
            }
        }
    }
    // p_0 = 1, p_{m}(x) = (x - h_mm) p_{m-1} - sum ...
    let mut polys: Vec<Vec<F>> = vec![vec![F::one()]];
    for m in 0..n {
        let prev = &polys[m];
        let mut next = vec![F::zero(); m + 2];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c.clone();
            next[i] -= h[m][m].clone() * c.clone();
        }
        let mut prod = F::one();
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i].clone();
            let coef = prod.clone() * h[i][m].clone();
            if coef.is_zero() {
                continue;
            }
            for (j, c) in polys[i].iter().enumerate() {
                next[j] -= coef.clone() * c.clone();
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}
