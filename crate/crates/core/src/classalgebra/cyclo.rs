//! Exact arithmetic in cyclotomic fields.
//!
//! An element of `Q(ζ_n)` is stored as rational coefficients on the
//! Zumbroich basis of `Q(ζ_n)`, with `n` reduced to the smallest conductor
//! of a field containing the element. Both steps are deterministic, so two
//! elements are equal exactly when their conductors and coefficients agree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `Σ c_k · e^{2πik/n}` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: BTreeMap<u32, Rational>,
}

fn primes_of(n: u32) -> Vec<(u32, u32)> {
    factorize(n as u128).into_iter().map(|(p, k)| (p as u32, k)).collect()
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    if m == 1 {
        return 0;
    }
    let g = (a as i64).extended_gcd(&(m as i64));
    debug_assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m as i64) as u32
}

/// Rewrites a dense coefficient vector of length `n` onto the Zumbroich basis.
fn zumbroich_reduce(n: u32, dense: &mut [Rational]) {
    let nn = n as usize;
    for (p, k) in primes_of(n) {
        let pk = p.pow(k);
        let top = pk / p;
        let step = (n / p) as usize;
        for e in 0..nn {
            if dense[e].is_zero() {
                continue;
            }
            let digit = (e as u32 % pk) / top;
            if p == 2 {
                if digit == 1 {
                    let c = std::mem::take(&mut dense[e]);
                    dense[(e + step) % nn] -= c;
                }
            } else if digit == 0 {
                let c = std::mem::take(&mut dense[e]);
                for j in 1..p as usize {
                    dense[(e + j * step) % nn] -= &c;
                }
            }
        }
    }
}

fn sparse(dense: Vec<Rational>) -> BTreeMap<u32, Rational> {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(e, c)| (e as u32, c))
        .collect()
}

fn canonical_on(n: u32, terms: impl IntoIterator<Item = (u32, Rational)>) -> BTreeMap<u32, Rational> {
    let mut dense = vec![Rational::zero(); n as usize];
    for (e, c) in terms {
        dense[(e % n) as usize] += c;
    }
    zumbroich_reduce(n, &mut dense);
    sparse(dense)
}

/// Image of `z` (conductor `n`) under averaging over `Gal(Q(ζ_n)/Q(ζ_{n/p}))`,
/// written on `ζ_{n/p}`.
fn average_down(n: u32, p: u32, coeffs: &BTreeMap<u32, Rational>) -> Vec<(u32, Rational)> {
    let m = n / p;
    let mut out = Vec::new();
    if m % p == 0 {
        for (&e, c) in coeffs {
            if e % p == 0 {
                out.push((e / p, c.clone()));
            }
        }
    } else {
        let p_inv = mod_inverse(p % m.max(1), m);
        let m_inv = mod_inverse(m % p, p);
        let off = Rational::new(BigInt::from(-1), BigInt::from(p - 1));
        for (&e, c) in coeffs {
            let x = if m == 1 { 0 } else { (e as u64 * p_inv as u64 % m as u64) as u32 };
            let y = e as u64 * m_inv as u64 % p as u64;
            let c = if y == 0 { c.clone() } else { c * &off };
            out.push((x, c));
        }
    }
    out
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !r.is_zero() {
            coeffs.insert(0, r);
        }
        Cyclotomic { conductor: 1, coeffs }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(v)))
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as u32;
        Self::from_terms(n, [(e, Rational::one())])
    }

    /// `Σ c · ζ_n^e` over the given terms, in canonical form. Exponents are
    /// taken mod `n`; repeated exponents add.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        assert!(n > 0, "conductor must be positive");
        let coeffs = canonical_on(n, terms);
        Cyclotomic { conductor: n, coeffs }.reduce_conductor()
    }

    fn reduce_conductor(mut self) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        'outer: loop {
            let n = self.conductor;
            if n == 1 {
                return self;
            }
            for (p, _) in primes_of(n) {
                let m = n / p;
                let down = canonical_on(m, average_down(n, p, &self.coeffs));
                let up = canonical_on(n, down.iter().map(|(&e, c)| (e * p, c.clone())));
                if up == self.coeffs {
                    self = Cyclotomic {
                        conductor: m,
                        coeffs: down,
                    };
                    continue 'outer;
                }
            }
            return self;
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coefficients on the Zumbroich basis of `Q(ζ_conductor)`.
    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn is_rational_integer(&self) -> bool {
        self.to_rational().is_some_and(|r| r.is_integer())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn lift(&self, n: u32) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        let f = n / self.conductor;
        self.coeffs.iter().map(move |(&e, c)| (e * f, c))
    }

    fn common(&self, other: &Self) -> u32 {
        self.conductor.lcm(&other.conductor)
    }

    /// Galois automorphism `ζ ↦ ζ^k`; `k` must be coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let k = k.rem_euclid(n as i64) as u64;
        debug_assert!(n == 1 || (k as u32).gcd(&n) == 1);
        Self::from_terms(n, self.coeffs.iter().map(|(&e, c)| ((e as u64 * k % n as u64) as u32, c.clone())))
    }

    /// Complex conjugate: exponents negated, then canonicalized.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * r)).collect(),
        }
    }

    /// Numerical value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.coeffs.iter().fold((0.0, 0.0), |(re, im), (&e, c)| {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * e as f64 / n;
            (re + v * t.cos(), im + v * t.sin())
        })
    }

    fn add_impl(&self, other: &Self, sign: bool) -> Self {
        let n = self.common(other);
        let terms = self
            .lift(n)
            .map(|(e, c)| (e, c.clone()))
            .chain(other.lift(n).map(|(e, c)| (e, if sign { c.clone() } else { -c })));
        Self::from_terms(n, terms)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(r) = self.to_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.to_rational() {
            return self.scale(&r);
        }
        let n = self.common(other);
        let mut dense = vec![Rational::zero(); n as usize];
        let right: Vec<(u32, &Rational)> = other.lift(n).collect();
        for (a, ca) in self.lift(n) {
            for &(b, cb) in &right {
                dense[((a + b) % n) as usize] += ca * cb;
            }
        }
        zumbroich_reduce(n, &mut dense);
        Cyclotomic {
            conductor: n,
            coeffs: sparse(dense),
        }
        .reduce_conductor()
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, true)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.add_impl(rhs, false)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.mul_impl(rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(&-Rational::one())
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// GAP-style notation: `E(n)^k` for `ζ_n^k`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", fmt_rational(&r));
        }
        let mut first = true;
        for (&e, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let root = match e {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{}", self.conductor, e),
            };
            match (abs.is_one(), root.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{root}")?,
                (false, true) => write!(f, "{}", fmt_rational(&abs))?,
                (false, false) => write!(f, "{}*{root}", fmt_rational(&abs))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

/// File encoding: a plain integer, or a conductor with `exponent → [num, den]`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CycloRepr {
    Int(i64),
    Full {
        conductor: u32,
        coeffs: BTreeMap<String, [i64; 2]>,
    },
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(v) = self.to_integer().and_then(|i| i.to_i64()) {
            return CycloRepr::Int(v).serialize(s);
        }
        let mut coeffs = BTreeMap::new();
        for (&e, c) in &self.coeffs {
            let (n, d) = (c.numer().to_i64(), c.denom().to_i64());
            match (n, d) {
                (Some(n), Some(d)) => {
                    coeffs.insert(e.to_string(), [n, d]);
                }
                _ => return Err(serde::ser::Error::custom("coefficient exceeds 64 bits")),
            }
        }
        CycloRepr::Full {
            conductor: self.conductor,
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycloRepr::deserialize(d)?;
        Cyclotomic::from_repr(repr).map_err(serde::de::Error::custom)
    }
}

impl Cyclotomic {
    fn from_repr(repr: CycloRepr) -> Result<Self> {
        match repr {
            CycloRepr::Int(v) => Ok(Self::from_int(v)),
            CycloRepr::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(Error::Parse("conductor must be positive".into()));
                }
                let mut terms = Vec::with_capacity(coeffs.len());
                for (k, [num, den]) in coeffs {
                    let e: u32 = k
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent '{k}'")))?;
                    if e >= conductor {
                        return Err(Error::Parse(format!("exponent {e} out of range for conductor {conductor}")));
                    }
                    if den == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    terms.push((e, Rational::new(BigInt::from(num), BigInt::from(den))));
                }
                Ok(Self::from_terms(conductor, terms))
            }
        }
    }
}
