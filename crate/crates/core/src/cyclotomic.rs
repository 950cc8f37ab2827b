//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A value is stored at its minimal conductor `n` as coordinates over the
//! power basis `1, ζ_n, …, ζ_n^{φ(n)-1}`, i.e. as a polynomial reduced
//! modulo the cyclotomic polynomial `Φ_n`. Since both the conductor and the
//! reduced polynomial are unique, equality is plain structural equality.
//!
//! Binary operations lift their operands to the lcm of the two conductors,
//! operate there, and reduce the result back to its minimal conductor.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::FieldScalar;
use crate::util::{euler_phi, prime_factors};

/// An element of a cyclotomic field with coefficients in `Q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<Q> {
    conductor: u64,
    coords: Vec<Q>,
}

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1);
    if let Some(p) = phi_cache().lock().expect("cache lock").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = divide_monic(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    phi_cache().lock().expect("cache lock").insert(n, poly.clone());
    poly
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Reduces a dense polynomial in `ζ_n` modulo `Φ_n`.
fn reduce_mod_phi<Q: FieldScalar>(n: u64, mut dense: Vec<Q>) -> Vec<Q> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    if dense.len() < deg {
        dense.resize(deg, Q::zero());
        return dense;
    }
    for k in (deg..dense.len()).rev() {
        let c = std::mem::replace(&mut dense[k], Q::zero());
        if c.is_zero() {
            continue;
        }
        for (i, &a) in phi.iter().enumerate().take(deg) {
            if a != 0 {
                let t = c.clone() * Q::from_i64(a).expect("small integer");
                dense[k - deg + i] = dense[k - deg + i].clone() - t;
            }
        }
    }
    dense.truncate(deg);
    dense
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (a, m) = (a as i64, m as i64);
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m) as u64
}

impl<Q: FieldScalar> Cyclotomic<Q> {
    pub fn from_rational(q: Q) -> Self {
        Cyclotomic { conductor: 1, coords: vec![q] }
    }

    pub fn zero() -> Self {
        Self::from_rational(Q::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Q::one())
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(Q::from_i64(k).expect("integer fits the scalar type"))
    }

    /// `e^{2πik/n}`.
    pub fn zeta(n: u64, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclotomic conductor must be positive".into()));
        }
        Ok(Self::from_terms(n, &[(k, Q::one())]))
    }

    /// `Σ c·ζ_n^k` over the given `(k, c)` terms; exponents may be any
    /// integers.
    pub fn from_terms(n: u64, terms: &[(i64, Q)]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut dense = vec![Q::zero(); n as usize];
        for (k, c) in terms {
            let idx = k.rem_euclid(n as i64) as usize;
            dense[idx] = dense[idx].clone() + c.clone();
        }
        Self::from_dense(n, dense)
    }

    /// Canonical form of a dense polynomial in `ζ_n`.
    fn from_dense(n: u64, dense: Vec<Q>) -> Self {
        let coords = reduce_mod_phi(n, dense);
        Self::reduce_conductor(n, coords)
    }

    /// Rebuilds a value from power-basis coordinates at conductor `n`.
    pub fn from_coordinates(n: u64, coords: Vec<Q>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclotomic conductor must be positive".into()));
        }
        let phi = euler_phi(n) as usize;
        if coords.len() != phi {
            return Err(Error::LengthMismatch { expected: phi, found: coords.len() });
        }
        Ok(Self::reduce_conductor(n, coords))
    }

    /// Moves reduced coordinates at conductor `n` down to the minimal
    /// conductor.
    fn reduce_conductor(mut n: u64, mut coords: Vec<Q>) -> Self {
        'search: loop {
            if n == 1 {
                break;
            }
            for p in prime_factors(n) {
                let m = n / p;
                if m.is_multiple_of(p) {
                    // Φ_n(x) = Φ_m(x^p): the power basis of ζ_n is the
                    // product basis ζ_m^j ζ_n^s, s < p
                    if coords.iter().enumerate().all(|(k, c)| (k as u64).is_multiple_of(p) || c.is_zero()) {
                        coords = coords.into_iter().step_by(p as usize).collect();
                        n = m;
                        continue 'search;
                    }
                } else if let Some(sub) = Self::project_coprime(n, p, &coords) {
                    coords = sub;
                    n = m;
                    continue 'search;
                }
            }
            break;
        }
        Cyclotomic { conductor: n, coords }
    }

    /// For `n = m·p` with `p ∤ m`, rewrites the value over the basis
    /// `ζ_m^j ζ_p^s` (`j < φ(m)`, `s < p-1`) and returns the `s = 0` slice if
    /// every other slice vanishes.
    fn project_coprime(n: u64, p: u64, coords: &[Q]) -> Option<Vec<Q>> {
        let m = n / p;
        let u = mod_inverse(p % m.max(1), m);
        let v = mod_inverse(m % p, p);
        let (mu, pu) = (m as usize, p as usize);
        let mut grid = vec![vec![Q::zero(); mu]; pu];
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k as u64;
            let a = ((u * k) % m) as usize;
            let s = ((v * k) % p) as usize;
            grid[s][a] = grid[s][a].clone() + c.clone();
        }
        // ζ_p^{p-1} = -(1 + ζ_p + … + ζ_p^{p-2})
        let top = grid.pop().expect("p >= 2");
        for slice in grid.iter_mut() {
            for (a, t) in top.iter().enumerate() {
                if !t.is_zero() {
                    slice[a] = slice[a].clone() - t.clone();
                }
            }
        }
        let mut slices = grid.into_iter().map(|slice| reduce_mod_phi(m, slice));
        let base = slices.next().expect("at least one slice");
        for slice in slices {
            if slice.iter().any(|c| !c.is_zero()) {
                return None;
            }
        }
        Some(base)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coordinates(&self) -> &[Q] {
        &self.coords
    }

    /// Power-basis coordinates over `Q(ζ_n)`; `n` must be a multiple of the
    /// conductor.
    pub fn rational_coordinates(&self, n: u64) -> Result<Vec<Q>> {
        if n == 0 || !n.is_multiple_of(self.conductor) {
            return Err(Error::InvalidInput(format!(
                "conductor {} does not divide {n}",
                self.conductor
            )));
        }
        Ok(self.lift(n))
    }

    fn lift(&self, n: u64) -> Vec<Q> {
        if n == self.conductor {
            return self.coords.clone();
        }
        let step = (n / self.conductor) as usize;
        let mut dense = vec![Q::zero(); n as usize];
        for (j, c) in self.coords.iter().enumerate() {
            dense[j * step] = c.clone();
        }
        reduce_mod_phi(n, dense)
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coords[0].is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Q> {
        if self.conductor == 1 {
            self.coords.first()
        } else {
            None
        }
    }

    /// The Galois automorphism `ζ ↦ ζ^k`, `k` coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.conductor;
        let terms: Vec<(i64, Q)> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j as i64 * k, c.clone()))
            .collect();
        Self::from_terms(n, &terms)
    }

    /// Complex conjugation `ζ_n^k ↦ ζ_n^{n-k}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn scale(&self, q: &Q) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coords: self.coords.iter().map(|c| c.clone() * q.clone()).collect(),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(Q, Q) -> Q) -> Self {
        let n = self.conductor.lcm(&other.conductor);
        let a = self.lift(n);
        let b = other.lift(n);
        let dense: Vec<Q> = a.into_iter().zip(b).map(|(x, y)| f(x, y)).collect();
        Self::reduce_conductor(n, dense)
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_rational() {
            return other.scale(&self.coords[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coords[0]);
        }
        let n = self.conductor.lcm(&other.conductor);
        let a = self.lift(n);
        let b = other.lift(n);
        let mut dense = vec![Q::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[i + j] = dense[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        Self::from_dense(n, dense)
    }

    /// Floating-point value, for sanity checks only.
    pub fn to_complex(&self) -> (f64, f64)
    where
        Q: ToPrimitive,
    {
        let n = self.conductor as f64;
        self.coords.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<Q: FieldScalar> $tr<&Cyclotomic<Q>> for &Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: &Cyclotomic<Q>) -> Cyclotomic<Q> {
                let f: fn(&Cyclotomic<Q>, &Cyclotomic<Q>) -> Cyclotomic<Q> = $body;
                f(self, rhs)
            }
        }
        impl<Q: FieldScalar> $tr for Cyclotomic<Q> {
            type Output = Cyclotomic<Q>;
            fn $method(self, rhs: Cyclotomic<Q>) -> Cyclotomic<Q> {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| a.combine(b, |x, y| x + y));
binop!(Sub, sub, |a, b| a.combine(b, |x, y| x - y));
binop!(Mul, mul, |a, b| a.product(b));

impl<Q: FieldScalar> Neg for &Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(self) -> Cyclotomic<Q> {
        Cyclotomic { conductor: self.conductor, coords: self.coords.iter().map(|c| -c.clone()).collect() }
    }
}

impl<Q: FieldScalar> Neg for Cyclotomic<Q> {
    type Output = Cyclotomic<Q>;
    fn neg(self) -> Cyclotomic<Q> {
        -&self
    }
}

impl<Q: FieldScalar> std::iter::Sum for Cyclotomic<Q> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

/// `E(n)^k` syntax, e.g. `2*E(3)^1 - 1/2*E(3)^2`; the `k = 0` term is
/// written as a bare rational.
impl<Q: FieldScalar + fmt::Display + Signed> fmt::Display for Cyclotomic<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "E({})^{k}", self.conductor)?;
            } else {
                write!(f, "{mag}*E({})^{k}", self.conductor)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<Q: FieldScalar + fmt::Display + Signed> fmt::Debug for Cyclotomic<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_term<Q: FieldScalar + FromStr>(term: &str) -> Result<(u64, i64, Q)> {
    let bad = || Error::Parse(format!("bad cyclotomic term `{term}`"));
    let (coef, mono) = match term.find("E(") {
        None => (term, None),
        Some(0) => ("1", Some(term)),
        Some(i) => {
            let c = term[..i].strip_suffix('*').ok_or_else(bad)?;
            (c, Some(&term[i..]))
        }
    };
    let coef: Q = coef.parse().map_err(|_| bad())?;
    let Some(mono) = mono else {
        return Ok((1, 0, coef));
    };
    let rest = mono.strip_prefix("E(").ok_or_else(bad)?;
    let close = rest.find(')').ok_or_else(bad)?;
    let n: u64 = rest[..close].parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(bad());
    }
    let tail = &rest[close + 1..];
    let k: i64 = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
    };
    Ok((n, k, coef))
}

/// Parses sums of `c*E(n)^k` terms and rationals.
impl<Q: FieldScalar + FromStr> FromStr for Cyclotomic<Q> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cyclotomic".into()));
        }
        let bytes = compact.as_bytes();
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        for i in 0..=bytes.len() {
            let boundary = i == bytes.len()
                || ((bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^' && bytes[i - 1] != b'*');
            if boundary {
                terms.push((negative, &compact[start..i]));
                if i < bytes.len() {
                    negative = bytes[i] == b'-';
                    start = i + 1;
                }
            } else if i == 0 && (bytes[0] == b'-' || bytes[0] == b'+') {
                negative = bytes[0] == b'-';
                start = 1;
            }
        }
        let mut acc = Self::zero();
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(Error::Parse(format!("bad cyclotomic `{s}`")));
            }
            let (n, k, c) = parse_term::<Q>(t)?;
            let c = if neg { -c } else { c };
            acc = &acc + &Self::from_terms(n, &[(k, c)]);
        }
        Ok(acc)
    }
}

/// Exact rational conversion helpers for the arbitrary-precision scalar.
impl Cyclotomic<BigRational> {
    /// Integer power-basis coordinates at conductor `n`, or `None` if some
    /// coordinate is not an integer.
    pub fn integer_coordinates(&self, n: u64) -> Result<Option<Vec<BigInt>>> {
        let coords = self.rational_coordinates(n)?;
        Ok(coords
            .into_iter()
            .map(|q| if q.is_integer() { Some(q.to_integer()) } else { None })
            .collect())
    }
}
