//! Irreducible character tables of small groups by Dixon–Schneider.
//!
//! Central characters are common eigenvectors of the class multiplication
//! matrices. They are found over a prime field `F_ℓ` with `ℓ ≡ 1 (mod e)`,
//! `e` the exponent, and each character value is lifted back to
//! `Q(ζ_e)` through the eigenvalue multiplicities of the represented
//! element, which are small integers and therefore determined mod `ℓ`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{conjugacy_classes, ConjClass, PermGroup, Permutation, DEFAULT_CLASS_CAP};
use crate::util::{inv_mod, is_prime, pow_mod, primitive_root};
use crate::Cyclo;

/// Largest group order accepted by [`character_table`].
pub const CHARACTER_TABLE_CAP: u64 = 10_000;

/// A genuine representation `Σ mult_i · ρ_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RepVector {
    pub mult: Vec<u64>,
}

/// A virtual representation; multiplicities may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VirtualRep {
    pub mult: Vec<i64>,
}

/// Anything with integer multiplicities over `Irr(S)`.
pub trait Multiplicities {
    fn coefficients(&self) -> Vec<i64>;
}

impl Multiplicities for RepVector {
    fn coefficients(&self) -> Vec<i64> {
        self.mult.iter().map(|&m| m as i64).collect()
    }
}

impl Multiplicities for VirtualRep {
    fn coefficients(&self) -> Vec<i64> {
        self.mult.clone()
    }
}

impl RepVector {
    pub fn new(mult: Vec<u64>) -> Self {
        RepVector { mult }
    }

    pub fn zero(r: usize) -> Self {
        RepVector { mult: vec![0; r] }
    }

    pub fn unit(r: usize, i: usize) -> Self {
        let mut v = Self::zero(r);
        v.mult[i] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    pub fn dimension(&self, degrees: &[u64]) -> u64 {
        self.mult.iter().zip(degrees).map(|(m, d)| m * d).sum()
    }

    /// Indices of the irreducible constituents.
    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&i| self.mult[i] > 0).collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn is_subrep_of(&self, other: &RepVector) -> bool {
        self.mult.iter().zip(&other.mult).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &RepVector) -> RepVector {
        RepVector { mult: self.mult.iter().zip(&other.mult).map(|(a, b)| a + b).collect() }
    }

    pub fn to_virtual(&self) -> VirtualRep {
        VirtualRep { mult: self.coefficients() }
    }
}

impl VirtualRep {
    pub fn new(mult: Vec<i64>) -> Self {
        VirtualRep { mult }
    }

    /// Support of a virtual representation: irreducibles with nonzero
    /// multiplicity.
    pub fn support(&self) -> Vec<usize> {
        (0..self.mult.len()).filter(|&i| self.mult[i] != 0).collect()
    }

    /// The genuine representation, if no multiplicity is negative.
    pub fn to_genuine(&self) -> Option<RepVector> {
        self.mult.iter().map(|&m| u64::try_from(m).ok()).collect::<Option<Vec<_>>>().map(RepVector::new)
    }

    pub fn to_bigint(&self) -> Vec<BigInt> {
        self.mult.iter().map(|&m| BigInt::from(m)).collect()
    }

    pub fn from_bigint(v: &[BigInt]) -> Result<Self> {
        v.iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow("virtual representation multiplicity")))
            .collect::<Result<Vec<_>>>()
            .map(VirtualRep::new)
    }
}

/// Writes `Σ c_i r_i` as `-r2 - r3 + 2*r6`, 1-based, `0` when empty.
pub fn format_combination(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(&format!("r{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.coefficients()))
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_combination(&self.mult))
    }
}

/// Irreducible characters of a group, rows ordered by degree.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group_order: u64,
    exponent: u64,
    classes: Vec<ConjClass>,
    class_of: HashMap<Permutation, usize>,
    inverse_class: Vec<usize>,
    chars: Vec<Vec<Cyclo>>,
    degrees: Vec<u64>,
}

impl CharacterTable {
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Number of irreducible characters; equals the class count.
    pub fn irr_count(&self) -> usize {
        self.chars.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn character(&self, i: usize) -> &[Cyclo] {
        &self.chars[i]
    }

    pub fn value(&self, char_index: usize, class_index: usize) -> &Cyclo {
        &self.chars[char_index][class_index]
    }

    pub fn rows(&self) -> &[Vec<Cyclo>] {
        &self.chars
    }

    /// Index of the class containing `g`.
    pub fn class_index(&self, g: &Permutation) -> Option<usize> {
        self.class_of.get(g).copied()
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    /// The regular representation: each irreducible with multiplicity its
    /// degree.
    pub fn regular(&self) -> RepVector {
        RepVector::new(self.degrees.clone())
    }

    pub fn trivial(&self) -> RepVector {
        RepVector::unit(self.irr_count(), 0)
    }

    pub fn export(&self) -> TableExport {
        TableExport {
            order: self.group_order,
            exponent: self.exponent,
            classes: self
                .classes
                .iter()
                .map(|c| ClassExport {
                    representative: c.representative.to_string(),
                    size: c.size,
                    element_order: c.element_order,
                })
                .collect(),
            degrees: self.degrees.clone(),
            characters: self.chars.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect(),
        }
    }
}

/// Serializable form of a character table.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableExport {
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassExport>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClassExport {
    pub representative: String,
    pub size: u64,
    pub element_order: u64,
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > 2√n` and `ℓ ∤ n`.
fn choose_prime(e: u64, n: u64) -> u64 {
    let mut l = e + 1;
    loop {
        if l * l > 4 * n && is_prime(l) && !n.is_multiple_of(l) {
            return l;
        }
        l += e;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Basis of `{c : Σ_t c_t v_t = 0}` for column vectors `v_t` over `F_ℓ`.
fn nullspace_mod(vectors: &[Vec<u64>], l: u64) -> Vec<Vec<u64>> {
    let s = vectors.len();
    if s == 0 {
        return Vec::new();
    }
    let r = vectors[0].len();
    // rows = coordinates, columns = vectors
    let mut m: Vec<Vec<u64>> = (0..r).map(|i| (0..s).map(|t| vectors[t][i]).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..s {
        let Some(p) = (row..r).find(|&i| m[i][col] != 0) else { continue };
        m.swap(row, p);
        let inv = inv_mod(m[row][col], l);
        for x in m[row].iter_mut() {
            *x = mul_mod(*x, inv, l);
        }
        for i in 0..r {
            if i != row && m[i][col] != 0 {
                let f = m[i][col];
                for j in 0..s {
                    m[i][j] = (m[i][j] + l - mul_mod(f, m[row][j], l)) % l;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == r {
            break;
        }
    }
    let free: Vec<usize> = (0..s).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut c = vec![0u64; s];
            c[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                c[pc] = (l - m[i][f]) % l;
            }
            c
        })
        .collect()
}

/// Exact character table of `s`.
pub fn character_table(s: &PermGroup) -> Result<CharacterTable> {
    let n = s.order_u64()?;
    if n > CHARACTER_TABLE_CAP {
        return Err(Error::cap(format!("character table of a group of order {n}"), CHARACTER_TABLE_CAP));
    }
    let classes = conjugacy_classes(s, DEFAULT_CLASS_CAP)?;
    let r = classes.len();
    let mut class_of = HashMap::with_capacity(n as usize);
    for (k, c) in classes.iter().enumerate() {
        for x in &c.elements {
            class_of.insert(x.clone(), k);
        }
    }
    let inverse_class: Vec<usize> = classes.iter().map(|c| class_of[&c.representative.inverse()]).collect();
    let exponent = classes.iter().fold(1u64, |acc, c| acc.lcm(&c.element_order));
    let l = choose_prime(exponent, n);

    // coeff[j][i][k] = #{x ∈ C_j : x⁻¹ z_k ∈ C_i}
    let class_matrix = |j: usize| -> Vec<Vec<u64>> {
        let mut m = vec![vec![0u64; r]; r];
        for (k, ck) in classes.iter().enumerate() {
            for x in &classes[j].elements {
                let y = x.inverse().then(&ck.representative);
                m[class_of[&y]][k] += 1;
            }
        }
        m
    };

    // simultaneous eigenspaces, split class matrix by class matrix
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![identity];
    for j in 1..r {
        if spaces.iter().all(|sp| sp.len() == 1) {
            break;
        }
        let m = class_matrix(j);
        let apply = |v: &[u64]| -> Vec<u64> {
            (0..r)
                .map(|i| (0..r).fold(0u64, |acc, k| (acc + mul_mod(m[i][k] % l, v[k], l)) % l))
                .collect()
        };
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let images: Vec<Vec<u64>> = space.iter().map(|v| apply(v)).collect();
            let mut found = 0;
            for lambda in 0..l {
                let shifted: Vec<Vec<u64>> = images
                    .iter()
                    .zip(&space)
                    .map(|(mv, v)| mv.iter().zip(v).map(|(a, b)| (a + l - mul_mod(lambda, *b, l)) % l).collect())
                    .collect();
                let null = nullspace_mod(&shifted, l);
                if null.is_empty() {
                    continue;
                }
                found += null.len();
                let sub: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|i| space.iter().zip(c).fold(0u64, |acc, (v, ct)| (acc + mul_mod(v[i], *ct, l)) % l))
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == space.len() {
                    break;
                }
            }
            if found != space.len() {
                return Err(Error::Internal("class matrix not diagonalizable mod ℓ".into()));
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|sp| sp.len() != 1) {
        return Err(Error::Internal("eigenspaces did not split".into()));
    }

    // power maps: power[k][t] = class of z_k^t
    let power: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| (0..exponent).map(|t| class_of[&c.representative.pow(t)]).collect())
        .collect();
    let z = pow_mod(primitive_root(l), (l - 1) / exponent, l);
    let e_inv = inv_mod(exponent % l, l);
    let sizes: Vec<u64> = classes.iter().map(|c| c.size % l).collect();
    let root = (n as f64).sqrt().floor() as u64 + 1;

    let mut rows: Vec<(u64, Vec<Cyclo>)> = Vec::with_capacity(r);
    for space in spaces {
        let w = &space[0];
        if w[0] == 0 {
            return Err(Error::Internal("central character vanishes at the identity".into()));
        }
        let w0 = inv_mod(w[0], l);
        let w: Vec<u64> = w.iter().map(|x| mul_mod(*x, w0, l)).collect();
        // d² = n / Σ w_k w_{k*} / h_k
        let mut sum = 0u64;
        for k in 0..r {
            sum = (sum + mul_mod(mul_mod(w[k], w[inverse_class[k]], l), inv_mod(sizes[k], l), l)) % l;
        }
        let d2 = mul_mod(n % l, inv_mod(sum, l), l);
        let d = (1..=root)
            .find(|d| (d * d) % l == d2)
            .ok_or_else(|| Error::Internal("no degree matches the central character".into()))?;
        let values_mod: Vec<u64> =
            (0..r).map(|k| mul_mod(mul_mod(d % l, w[k], l), inv_mod(sizes[k], l), l)).collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let mut terms = Vec::new();
            for s_exp in 0..exponent {
                let mut acc = 0u64;
                for t in 0..exponent {
                    let zt = pow_mod(z, (exponent - (s_exp * t) % exponent) % exponent, l);
                    acc = (acc + mul_mod(values_mod[power[k][t as usize]], zt, l)) % l;
                }
                let mult = mul_mod(acc, e_inv, l);
                if mult > d {
                    return Err(Error::Internal("eigenvalue multiplicity out of range".into()));
                }
                if mult > 0 {
                    terms.push((s_exp as i64, BigRational::from_integer(BigInt::from(mult))));
                }
            }
            row.push(Cyclo::from_terms(exponent, &terms));
        }
        rows.push((d, row));
    }

    let degree_sum: u64 = rows.iter().map(|(d, _)| d * d).sum();
    if degree_sum != n {
        return Err(Error::Internal(format!("degrees squared sum to {degree_sum}, not {n}")));
    }

    // degree, trivial first, then coordinates over Q(ζ_e) descending
    let keyed: Vec<(u64, bool, Vec<Vec<BigRational>>, Vec<Cyclo>)> = rows
        .into_iter()
        .map(|(d, row)| {
            let trivial = row.iter().all(|v| v.as_rational().is_some_and(|q| q == &BigRational::from_integer(1.into())));
            let coords = row.iter().map(|v| v.rational_coordinates(exponent).expect("conductor divides e")).collect();
            (d, !trivial, coords, row)
        })
        .collect();
    let mut keyed = keyed;
    keyed.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)).then_with(|| b.2.cmp(&a.2)));
    let degrees = keyed.iter().map(|k| k.0).collect();
    let chars = keyed.into_iter().map(|k| k.3).collect();

    Ok(CharacterTable { group_order: n, exponent, classes, class_of, inverse_class, chars, degrees })
}

/// The character of `rep`, one value per class.
pub fn character_of(rep: &impl Multiplicities, t: &CharacterTable) -> Result<Vec<Cyclo>> {
    let coeffs = rep.coefficients();
    if coeffs.len() != t.irr_count() {
        return Err(Error::LengthMismatch { expected: t.irr_count(), found: coeffs.len() });
    }
    let mut out = vec![Cyclo::zero(); t.class_count()];
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let q = BigRational::from_integer(BigInt::from(c));
        for (o, v) in out.iter_mut().zip(t.character(i)) {
            *o = &*o + &v.scale(&q);
        }
    }
    Ok(out)
}

/// `(1/|S|) Σ_c |c| a(c) conj(b(c))`.
pub fn inner_product(a: &[Cyclo], b: &[Cyclo], t: &CharacterTable) -> Result<Cyclo> {
    let r = t.class_count();
    for v in [a, b] {
        if v.len() != r {
            return Err(Error::LengthMismatch { expected: r, found: v.len() });
        }
    }
    let mut acc = Cyclo::zero();
    for (k, c) in t.classes().iter().enumerate() {
        if a[k].is_zero() || b[k].is_zero() {
            continue;
        }
        let term = &a[k] * &b[k].conj();
        acc = &acc + &term.scale(&BigRational::from_integer(BigInt::from(c.size)));
    }
    Ok(acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(t.group_order()))))
}

/// Whether a character value is a rational integer, as an `i64`.
pub fn as_integer(v: &Cyclo) -> Option<i64> {
    let q = v.as_rational()?;
    if q.is_integer() {
        q.to_integer().to_i64()
    } else {
        None
    }
}

/// Whether a value is a nonnegative rational integer.
pub fn is_natural(v: &Cyclo) -> bool {
    v.as_rational().is_some_and(|q| q.is_integer() && !q.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::parse(g, Some(degree)).unwrap()).collect();
        PermGroup::from_generators(degree, &gens).unwrap()
    }

    fn int(k: i64) -> Cyclo {
        Cyclo::from_integer(k)
    }

    #[test]
    fn cyclic_three() {
        let t = character_table(&group(3, &["(1,2,3)"])).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1]);
        assert_eq!(t.exponent(), 3);
        let x = &t.classes()[1].representative;
        let values: Vec<Cyclo> = (0..3).map(|i| t.value(i, 1).clone()).collect();
        // the three values at a generator are the three cube roots of unity
        let mut expected = vec![int(1), Cyclo::zeta(3, 1).unwrap(), Cyclo::zeta(3, 2).unwrap()];
        let mut got = values.clone();
        expected.sort_by_key(|v| v.to_string());
        got.sort_by_key(|v| v.to_string());
        assert_eq!(got, expected);
        // the value at x² is the square of the value at x
        let sq = t.class_index(&x.pow(2)).unwrap();
        for i in 0..3 {
            assert_eq!(t.value(i, sq), &(t.value(i, 1) * t.value(i, 1)));
        }
    }

    #[test]
    fn dihedral_eight() {
        let t = character_table(&group(4, &["(1,2,3,4)", "(1,3)"])).unwrap();
        assert_eq!(t.degrees(), &[1, 1, 1, 1, 2]);
        assert!(t.character(0).iter().all(|v| v == &int(1)));
    }

    #[test]
    fn character_of_examples() {
        let t = character_table(&group(3, &["(1,2,3)"])).unwrap();
        assert_eq!(character_of(&t.trivial(), &t).unwrap(), vec![int(1); 3]);
        assert_eq!(character_of(&t.regular(), &t).unwrap(), vec![int(3), int(0), int(0)]);
        let sum = RepVector::new(vec![0, 1, 1]);
        assert_eq!(character_of(&sum, &t).unwrap(), vec![int(2), int(-1), int(-1)]);
        let chi = character_of(&sum, &t).unwrap();
        let one = character_of(&t.trivial(), &t).unwrap();
        assert_eq!(inner_product(&chi, &one, &t).unwrap(), int(0));
        let reg = character_of(&t.regular(), &t).unwrap();
        assert_eq!(inner_product(&reg, &one, &t).unwrap(), int(1));
        assert!(character_of(&RepVector::new(vec![1]), &t).is_err());
        assert!(inner_product(&chi[..2], &one, &t).is_err());
    }

    #[test]
    fn combination_display() {
        assert_eq!(format_combination(&[0, -1, -1, 0, 1]), "-r2 - r3 + r5");
        assert_eq!(format_combination(&[2, 0, 1]), "2*r1 + r3");
        assert_eq!(format_combination(&[0, 0]), "0");
        assert_eq!(VirtualRep::new(vec![-3, 1]).to_string(), "-3*r1 + r2");
    }

    #[test]
    fn prime_choice() {
        assert_eq!(choose_prime(3, 3), 7);
        assert_eq!(choose_prime(4, 8), 13);
        assert_eq!(choose_prime(9, 81), 19);
        // 7 divides 14, so the next candidate is used
        assert_eq!(choose_prime(2, 14), 11);
    }

    #[test]
    fn order_cap() {
        let s8 = group(8, &["(1,2,3,4,5,6,7,8)", "(1,2)"]);
        assert!(character_table(&s8).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn export_shape() {
        let t = character_table(&group(3, &["(1,2)"])).unwrap();
        let e = t.export();
        assert_eq!(e.classes[0].representative, "()");
        assert_eq!(e.characters, vec![vec!["1", "1"], vec!["1", "-1"]]);
    }
}
