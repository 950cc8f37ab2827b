//! Atoms and factorization behaviour of the monoid of invariant
//! representations.
//!
//! The monoid is `N^r ∩ L` for the invariant lattice `L`. In lattice
//! coordinates it is the set of integer points of the pointed cone
//! `{x : x·B ≥ 0}`, and its atoms are the Hilbert basis of that cone:
//! extreme rays by double description, a placing triangulation, the lattice
//! points of each simplicial cone's fundamental parallelepiped, then a
//! global reduction.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::chartab::{CharacterTable, Multiplicities, RepVector, VirtualRep};
use crate::error::{Error, Result};
use crate::fusion::{is_invariant, FusionPattern};
use crate::intlin::{hermite_normal_form, integer_kernel, lattice_basis, solve_integer, Matrix};
use crate::repring::{difference_matrix, RepLattice};
use crate::scalar::IntScalar;
use crate::IntMatrix;

/// Largest lattice rank accepted by [`atoms_hilbert`].
pub const MAX_RANK: usize = 12;
/// Largest number of irreducibles accepted by [`atoms_hilbert`].
pub const MAX_IRR: usize = 32;
/// Cap on the total number of parallelepiped points visited.
pub const MAX_PARALLELEPIPED_POINTS: u64 = 50_000_000;
/// Default node budget for [`atoms_bounded_search`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 200_000_000;

/// Two factorizations of one element, as multisets of atom indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationWitness {
    pub element: RepVector,
    pub decomp_a: Vec<usize>,
    pub decomp_b: Vec<usize>,
}

impl FactorizationWitness {
    /// Splits an integer relation `Σ c_i a_i = 0` into its two sides.
    fn from_relation(relation: &[i64], atoms: &[RepVector]) -> Self {
        let r = atoms.first().map_or(0, |a| a.len());
        let mut element = RepVector::zero(r);
        let mut decomp_a = Vec::new();
        let mut decomp_b = Vec::new();
        for (i, &c) in relation.iter().enumerate() {
            if c > 0 {
                for _ in 0..c {
                    decomp_a.push(i);
                    element = element.add(&atoms[i]);
                }
            } else {
                decomp_b.extend(std::iter::repeat_n(i, (-c) as usize));
            }
        }
        FactorizationWitness { element, decomp_a, decomp_b }
    }

    /// Both sides sum to the element, and the multisets differ.
    pub fn is_valid(&self, atoms: &[RepVector]) -> bool {
        let sum = |idx: &[usize]| {
            idx.iter()
                .try_fold(RepVector::zero(self.element.len()), |acc, &i| atoms.get(i).map(|a| acc.add(a)))
        };
        let (mut a, mut b) = (self.decomp_a.clone(), self.decomp_b.clone());
        a.sort_unstable();
        b.sort_unstable();
        a != b
            && sum(&self.decomp_a).as_ref() == Some(&self.element)
            && sum(&self.decomp_b).as_ref() == Some(&self.element)
    }

    /// `α3 + α4 + α5 = α2 + α7`, with 1-based atom labels.
    pub fn relation_string(&self) -> String {
        let side = |idx: &[usize]| idx.iter().map(|i| format!("α{}", i + 1)).collect::<Vec<_>>().join(" + ");
        format!("{} = {}", side(&self.decomp_a), side(&self.decomp_b))
    }
}

/// Everything known about the monoid of one fusion system.
#[derive(Clone, Debug)]
pub struct MonoidAnalysis {
    pub lattice: RepLattice,
    pub atoms: Vec<RepVector>,
    pub factorial: bool,
    pub half_factorial: bool,
    pub factorial_witness: Option<FactorizationWitness>,
    pub half_factorial_witness: Option<FactorizationWitness>,
    pub regular_conjecture_holds: bool,
    pub transitive: bool,
}

/// Verdict and, when false, a pair of distinct factorizations.
pub fn is_factorial(m: &MonoidAnalysis) -> (bool, Option<&FactorizationWitness>) {
    (m.factorial, m.factorial_witness.as_ref())
}

/// Verdict and, when false, a pair of factorizations of unequal length.
pub fn is_half_factorial(m: &MonoidAnalysis) -> (bool, Option<&FactorizationWitness>) {
    (m.half_factorial, m.half_factorial_witness.as_ref())
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn to_i64(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow("monoid vector"))).collect()
}

fn atom_matrix(atoms: &[RepVector]) -> Result<IntMatrix> {
    let r = atoms.first().map_or(0, |a| a.len());
    Matrix::from_rows(atoms.iter().map(|a| to_big(&a.coefficients())).collect(), r)
}

/// Integer relations among the atoms, as rows.
fn atom_relations(atoms: &[RepVector]) -> Result<Vec<Vec<i64>>> {
    let k = integer_kernel(&atom_matrix(atoms)?);
    k.row_iter().map(to_i64).collect()
}

/// Smallest 1-norm, then lexicographically smallest.
fn pick_relation(relations: impl Iterator<Item = Vec<i64>>) -> Option<Vec<i64>> {
    relations.min_by(|a, b| {
        let na: i64 = a.iter().map(|x| x.abs()).sum();
        let nb: i64 = b.iter().map(|x| x.abs()).sum();
        na.cmp(&nb).then_with(|| a.cmp(b))
    })
}

/// Factorial iff the atom count equals the rank.
pub fn factoriality(atoms: &[RepVector], rank: usize) -> Result<(bool, Option<FactorizationWitness>)> {
    if atoms.len() == rank {
        return Ok((true, None));
    }
    let relations = atom_relations(atoms)?;
    let rel = pick_relation(relations.into_iter())
        .ok_or_else(|| Error::Internal("more atoms than rank but no relation".into()))?;
    Ok((false, Some(FactorizationWitness::from_relation(&rel, atoms))))
}

/// Half-factorial iff every atom relation has coefficient sum zero.
pub fn half_factoriality(atoms: &[RepVector]) -> Result<(bool, Option<FactorizationWitness>)> {
    let relations = atom_relations(atoms)?;
    let bad = pick_relation(relations.into_iter().filter(|r| r.iter().sum::<i64>() != 0));
    Ok(match bad {
        None => (true, None),
        Some(rel) => (false, Some(FactorizationWitness::from_relation(&rel, atoms))),
    })
}

fn popcount(m: u128) -> usize {
    m.count_ones() as usize
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

struct Ray {
    v: Vec<BigInt>,
    zeros: u128,
}

/// Extreme rays of `{x : ⟨x, a_j⟩ ≥ 0 ∀j}` for a full-rank family `a_j`.
fn extreme_rays(ineqs: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>> {
    // start from d independent inequalities: a simplicial cone
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..ineqs.len() {
        let mut rows: Vec<Vec<BigInt>> = chosen.iter().map(|&c| ineqs[c].clone()).collect();
        rows.push(ineqs[j].clone());
        if Matrix::from_rows(rows, d)?.rank() == chosen.len() + 1 {
            chosen.push(j);
            if chosen.len() == d {
                break;
            }
        }
    }
    if chosen.len() < d {
        return Err(Error::Internal("monoid cone is not pointed".into()));
    }
    let a0 = Matrix::from_rows(chosen.iter().map(|&c| ineqs[c].clone()).collect(), d)?.transpose();
    let (adj, det) = a0.adjugate()?;
    let sign = if det.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut processed: u128 = 0;
    for &c in &chosen {
        processed |= 1 << c;
    }
    let mut rays: Vec<Ray> = (0..d)
        .map(|i| {
            let v = primitive(adj.row(i).iter().map(|x| x * &sign).collect());
            let zeros = chosen.iter().enumerate().filter(|&(k, _)| k != i).fold(0u128, |m, (_, &c)| m | 1 << c);
            Ray { v, zeros }
        })
        .collect();

    for j in 0..ineqs.len() {
        if processed & (1 << j) != 0 {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|ray| dot(&ray.v, &ineqs[j])).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros & rays[n].zeros;
                if popcount(common) + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|q| q == p || q == n || rays[q].zeros & common != common);
                if !adjacent {
                    continue;
                }
                let v: Vec<BigInt> =
                    rays[n].v.iter().zip(&rays[p].v).map(|(nv, pv)| &vals[p] * nv - &vals[n] * pv).collect();
                next.push(Ray { v: primitive(v), zeros: common | 1 << j });
            }
        }
        let old = std::mem::take(&mut rays);
        for (i, mut ray) in old.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                ray.zeros |= 1 << j;
            }
            rays.push(ray);
        }
        rays.extend(next);
        processed |= 1 << j;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}

struct Simplex {
    rays: Vec<usize>,
    adj: IntMatrix,
    det: BigInt,
}

impl Simplex {
    fn new(rays: Vec<usize>, all: &[Vec<BigInt>]) -> Result<Self> {
        let d = all[0].len();
        let m = Matrix::from_rows(rays.iter().map(|&i| all[i].clone()).collect(), d)?;
        let (adj, det) = m.adjugate()?;
        Ok(Simplex { rays, adj, det })
    }

    /// Inner normal of the facet opposite position `i`.
    fn normal(&self, i: usize) -> Vec<BigInt> {
        let sign = if self.det.is_negative() { -BigInt::one() } else { BigInt::one() };
        (0..self.adj.rows()).map(|k| self.adj.get(k, i) * &sign).collect()
    }
}

/// Placing triangulation of the cone over `rays`, in the given order.
fn triangulate(rays: &[Vec<BigInt>], d: usize) -> Result<Vec<Simplex>> {
    let mut first: Vec<usize> = Vec::new();
    for i in 0..rays.len() {
        let mut rows: Vec<Vec<BigInt>> = first.iter().map(|&k| rays[k].clone()).collect();
        rows.push(rays[i].clone());
        if Matrix::from_rows(rows, d)?.rank() == first.len() + 1 {
            first.push(i);
            if first.len() == d {
                break;
            }
        }
    }
    if first.len() < d {
        return Err(Error::Internal("extreme rays do not span the cone".into()));
    }
    let mut simplices = vec![Simplex::new(first.clone(), rays)?];
    for v in 0..rays.len() {
        if first.contains(&v) {
            continue;
        }
        let mut faces: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
        for (s, simplex) in simplices.iter().enumerate() {
            for i in 0..d {
                let mut face: Vec<usize> =
                    simplex.rays.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &r)| r).collect();
                face.sort_unstable();
                faces.entry(face).or_default().push((s, i));
            }
        }
        let mut boundary: Vec<(Vec<usize>, (usize, usize))> =
            faces.into_iter().filter(|(_, occ)| occ.len() == 1).map(|(f, occ)| (f, occ[0])).collect();
        boundary.sort();
        let mut added = Vec::new();
        for (face, (s, i)) in boundary {
            if dot(&simplices[s].normal(i), &rays[v]).is_negative() {
                let mut members = face;
                members.push(v);
                added.push(Simplex::new(members, rays)?);
            }
        }
        if added.is_empty() {
            return Err(Error::Internal("ray inside the cone of earlier rays".into()));
        }
        simplices.extend(added);
    }
    Ok(simplices)
}

/// Nonzero lattice points `Σ λ_i v_i`, `0 ≤ λ_i < 1`, of one simplicial
/// cone with generator rows `rays`.
fn parallelepiped_points<T: IntScalar>(rays: &Matrix<T>, adj: &Matrix<T>, det: &T) -> Vec<Vec<T>> {
    let d = rays.rows();
    let (h, _) = hermite_normal_form(rays);
    let diag: Vec<T> = (0..d).map(|i| h.get(i, i).clone()).collect();
    let (sign, vol) = if det.is_negative() { (-T::one(), -det.clone()) } else { (T::one(), det.clone()) };
    let mut out = Vec::new();
    let mut y = vec![T::zero(); d];
    loop {
        // λ = y·adj / det, reduced to fractional parts
        let num = adj.left_mul(&y).expect("shape");
        let mut x = y.clone();
        for (i, n) in num.iter().enumerate() {
            let f = (n.clone() * sign.clone()).div_floor(&vol);
            if !f.is_zero() {
                for (xk, rk) in x.iter_mut().zip(rays.row(i)) {
                    *xk = xk.clone() - f.clone() * rk.clone();
                }
            }
        }
        if x.iter().any(|c| !c.is_zero()) {
            out.push(x);
        }
        // odometer over the box Π [0, h_i)
        let mut k = 0;
        loop {
            if k == d {
                return out;
            }
            y[k] = y[k].clone() + T::one();
            if y[k] < diag[k] {
                break;
            }
            y[k] = T::zero();
            k += 1;
        }
    }
}

fn convert<T: IntScalar>(m: &IntMatrix) -> Matrix<T> {
    let rows: Vec<Vec<T>> =
        m.row_iter().map(|r| r.iter().map(|x| T::from_i128(x.to_i128().expect("checked bound")).expect("fits")).collect()).collect();
    Matrix::from_rows(rows, m.cols()).expect("shape")
}

fn max_abs(m: &IntMatrix) -> BigInt {
    m.row_iter().flatten().map(|x| x.abs()).max().unwrap_or_default()
}

/// Candidate points of one simplex, mapped to multiplicity vectors.
fn simplex_candidates(s: &Simplex, rays: &[Vec<BigInt>], b: &IntMatrix, out: &mut HashSet<Vec<i64>>) -> Result<()> {
    let d = b.rows();
    let r_mat = Matrix::from_rows(s.rays.iter().map(|&i| rays[i].clone()).collect(), d)?;
    let vol = s.det.abs();
    if vol.is_one() {
        return Ok(());
    }
    let bound = BigInt::from(d * d * 4) * max_abs(&s.adj) * &vol * (max_abs(&r_mat) + max_abs(b) + BigInt::one());
    let small = bound < (BigInt::one() << 120);
    let images: Vec<Vec<BigInt>> = if small {
        let r128 = convert::<i128>(&r_mat);
        let a128 = convert::<i128>(&s.adj);
        let b128 = convert::<i128>(b);
        let det = s.det.to_i128().expect("checked bound");
        parallelepiped_points(&r128, &a128, &det)
            .into_iter()
            .map(|x| b128.left_mul(&x).expect("shape").into_iter().map(BigInt::from).collect())
            .collect()
    } else {
        parallelepiped_points(&r_mat, &s.adj, &s.det)
            .into_iter()
            .map(|x| b.left_mul(&x))
            .collect::<Result<_>>()?
    };
    for img in images {
        out.insert(to_i64(&img)?);
    }
    Ok(())
}

/// Keeps the elements with no other candidate below them.
fn minimal_elements(mut candidates: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    candidates.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| a.cmp(b)));
    candidates.dedup();
    let mut kept: Vec<Vec<i64>> = Vec::new();
    for c in candidates {
        if c.iter().all(|&x| x == 0) {
            continue;
        }
        if !kept.iter().any(|k| k.iter().zip(&c).all(|(a, b)| a <= b)) {
            kept.push(c);
        }
    }
    kept
}

fn canonical_order(atoms: &mut [RepVector], degrees: &[u64]) {
    atoms.sort_by(|a, b| a.dimension(degrees).cmp(&b.dimension(degrees)).then_with(|| b.mult.cmp(&a.mult)));
}

fn to_reps(vectors: Vec<Vec<i64>>) -> Result<Vec<RepVector>> {
    vectors
        .into_iter()
        .map(|v| VirtualRep::new(v).to_genuine().ok_or_else(|| Error::Internal("negative monoid element".into())))
        .collect()
}

/// The atoms of `N^r ∩ L`, ordered by dimension then lexicographically
/// descending (so the trivial representation comes first).
pub fn atoms_hilbert(l: &RepLattice) -> Result<Vec<RepVector>> {
    let d = l.rank();
    let r = l.irr_count();
    if d > MAX_RANK {
        return Err(Error::cap("lattice rank for Hilbert basis", MAX_RANK as u64));
    }
    if r > MAX_IRR {
        return Err(Error::cap("irreducible count for Hilbert basis", MAX_IRR as u64));
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let b = l.basis();
    let ineqs: Vec<Vec<BigInt>> = (0..r).map(|j| (0..d).map(|i| b.get(i, j).clone()).collect()).collect();
    let rays = extreme_rays(&ineqs, d)?;
    let mut candidates: HashSet<Vec<i64>> = HashSet::new();
    for ray in &rays {
        let img = b.left_mul(ray)?;
        if img.iter().any(|x| x.is_negative()) {
            return Err(Error::Internal("extreme ray leaves the monoid".into()));
        }
        candidates.insert(to_i64(&img)?);
    }
    let simplices = triangulate(&rays, d)?;
    let volume: BigInt = simplices.iter().map(|s| s.det.abs()).sum();
    if volume > BigInt::from(MAX_PARALLELEPIPED_POINTS) {
        return Err(Error::cap("fundamental parallelepiped points", MAX_PARALLELEPIPED_POINTS));
    }
    for s in &simplices {
        simplex_candidates(s, &rays, b, &mut candidates)?;
    }
    let mut atoms = to_reps(minimal_elements(candidates.into_iter().collect()))?;
    canonical_order(&mut atoms, l.degrees());
    Ok(atoms)
}

/// Nonzero `v` with `0 ≤ v_i ≤ bound_i` and `Σ_i v_i·row_i = 0` for every
/// constraint row, by depth-first search with interval pruning.
fn box_solutions(constraints: &[Vec<i64>], bounds: &[u64], budget: u64) -> Result<Vec<Vec<i64>>> {
    let r = bounds.len();
    // lo[c][i], hi[c][i]: range of Σ_{j ≥ i} a_cj v_j
    let lo: Vec<Vec<i64>> = constraints
        .iter()
        .map(|row| {
            let mut acc = vec![0i64; r + 1];
            for i in (0..r).rev() {
                acc[i] = acc[i + 1] + (row[i] * bounds[i] as i64).min(0);
            }
            acc
        })
        .collect();
    let hi: Vec<Vec<i64>> = constraints
        .iter()
        .map(|row| {
            let mut acc = vec![0i64; r + 1];
            for i in (0..r).rev() {
                acc[i] = acc[i + 1] + (row[i] * bounds[i] as i64).max(0);
            }
            acc
        })
        .collect();
    struct Search<'a> {
        constraints: &'a [Vec<i64>],
        bounds: &'a [u64],
        lo: Vec<Vec<i64>>,
        hi: Vec<Vec<i64>>,
        sums: Vec<i64>,
        v: Vec<i64>,
        nodes: u64,
        budget: u64,
        found: Vec<Vec<i64>>,
    }
    impl Search<'_> {
        fn go(&mut self, i: usize) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::cap("bounded search nodes", self.budget));
            }
            if i == self.bounds.len() {
                if self.v.iter().any(|&x| x != 0) {
                    self.found.push(self.v.clone());
                }
                return Ok(());
            }
            for m in 0..=self.bounds[i] as i64 {
                let ok = (0..self.constraints.len()).all(|c| {
                    let s = self.sums[c] + self.constraints[c][i] * m;
                    s + self.lo[c][i + 1] <= 0 && 0 <= s + self.hi[c][i + 1]
                });
                if !ok {
                    continue;
                }
                for c in 0..self.constraints.len() {
                    self.sums[c] += self.constraints[c][i] * m;
                }
                self.v[i] = m;
                let res = self.go(i + 1);
                for c in 0..self.constraints.len() {
                    self.sums[c] -= self.constraints[c][i] * m;
                }
                self.v[i] = 0;
                res?;
            }
            Ok(())
        }
    }
    let mut search = Search {
        constraints,
        bounds,
        lo,
        hi,
        sums: vec![0; constraints.len()],
        v: vec![0; r],
        nodes: 0,
        budget,
        found: Vec::new(),
    };
    search.go(0)?;
    Ok(search.found)
}

/// Atoms among the subrepresentations of the regular representation,
/// using lattice membership. Complete exactly when every atom is a
/// subrepresentation of the regular one.
pub fn atoms_bounded_search(l: &RepLattice, t: &CharacterTable, budget: u64) -> Result<Vec<RepVector>> {
    if l.irr_count() != t.irr_count() {
        return Err(Error::LengthMismatch { expected: t.irr_count(), found: l.irr_count() });
    }
    // x ∈ L iff x is orthogonal to the annihilator of the basis rows
    let annihilator = integer_kernel(&l.basis().transpose());
    let constraints: Vec<Vec<i64>> = annihilator.row_iter().map(to_i64).collect::<Result<_>>()?;
    let found = box_solutions(&constraints, t.degrees(), budget)?;
    let mut members = Vec::new();
    for v in found {
        if l.contains(&VirtualRep::new(v.clone()))? {
            members.push(v);
        }
    }
    let mut atoms = to_reps(minimal_elements(members))?;
    canonical_order(&mut atoms, t.degrees());
    Ok(atoms)
}

/// Like [`atoms_bounded_search`] but driven by character values alone,
/// with no use of the lattice.
pub fn atoms_bounded_search_by_characters(
    f: &FusionPattern,
    t: &CharacterTable,
    budget: u64,
) -> Result<Vec<RepVector>> {
    let dm = difference_matrix(f, t)?;
    let constraints: Vec<Vec<i64>> = dm.row_iter().map(to_i64).collect::<Result<_>>()?;
    let found = box_solutions(&constraints, t.degrees(), budget)?;
    let mut members = Vec::new();
    for v in found {
        if is_invariant(&VirtualRep::new(v.clone()), f, t)? {
            members.push(v);
        }
    }
    let mut atoms = to_reps(minimal_elements(members))?;
    canonical_order(&mut atoms, t.degrees());
    Ok(atoms)
}

fn rows_matrix(rows: &[Vec<i64>], r: usize) -> Result<IntMatrix> {
    for row in rows {
        if row.len() != r {
            return Err(Error::LengthMismatch { expected: r, found: row.len() });
        }
    }
    Matrix::from_rows(rows.iter().map(|v| to_big(v)).collect(), r)
}

/// Checks that `basis` is a basis of `L`.
fn require_basis(basis: &[Vec<i64>], l: &RepLattice) -> Result<()> {
    let m = rows_matrix(basis, l.irr_count())?;
    if basis.len() != l.rank() || !l.same_as(&m) {
        return Err(Error::NotABasis("vectors do not form a basis of the invariant lattice".into()));
    }
    Ok(())
}

fn has_private_constituent(j: usize, basis: &[Vec<i64>]) -> bool {
    (0..basis[j].len()).any(|i| basis[j][i] != 0 && basis.iter().enumerate().all(|(k, b)| k == j || b[i] == 0))
}

/// Whether every member of a nonnegative basis of `L` has a constituent
/// that no other member has. True certifies factoriality, with the basis
/// as the atom set.
pub fn check_private_irreducible_basis(basis: &[RepVector], l: &RepLattice) -> Result<bool> {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.coefficients()).collect();
    require_basis(&rows, l)?;
    Ok((0..rows.len()).all(|j| has_private_constituent(j, &rows)))
}

/// Whether basis member `j` has a constituent absent from every other
/// member, which certifies that it is an atom.
pub fn certify_irreducible(j: usize, basis: &[RepVector], l: &RepLattice) -> Result<bool> {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.coefficients()).collect();
    require_basis(&rows, l)?;
    if j >= rows.len() {
        return Err(Error::InvalidInput(format!("basis index {j} out of range")));
    }
    Ok(has_private_constituent(j, &rows))
}

/// Whether the supports of a basis of `L` are pairwise disjoint.
pub fn check_disjoint_basis(basis: &[VirtualRep], l: &RepLattice) -> Result<bool> {
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.mult.clone()).collect();
    require_basis(&rows, l)?;
    let r = l.irr_count();
    Ok((0..r).all(|i| rows.iter().filter(|b| b[i] != 0).count() <= 1))
}

/// Whether every atom is an integral combination `Σ λ_j b_j` of the basis
/// with `Σ λ_j = 1`.
///
/// Only the coefficient sum is checked; the coefficients may be negative.
pub fn check_convex_basis(basis: &[VirtualRep], atoms: &[RepVector]) -> Result<bool> {
    let r = basis.first().map(|b| b.mult.len()).or(atoms.first().map(|a| a.len())).unwrap_or(0);
    let rows: Vec<Vec<i64>> = basis.iter().map(|b| b.mult.clone()).collect();
    let m = rows_matrix(&rows, r)?;
    if m.rank() != rows.len() {
        return Err(Error::NotABasis("basis vectors are linearly dependent".into()));
    }
    for a in atoms {
        let lambda = solve_integer(&m, &to_big(&a.coefficients()))?
            .ok_or_else(|| Error::NotABasis(format!("atom {a} is not in the span of the basis")))?;
        if lambda.iter().sum::<BigInt>() != BigInt::one() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exactly two classes: the identity and everything else.
pub fn is_transitive(f: &FusionPattern) -> bool {
    f.class_count() == 2
}

/// Whether every atom is a subrepresentation of the regular
/// representation.
pub fn check_regular_conjecture(atoms: &[RepVector], t: &CharacterTable) -> bool {
    atoms.iter().all(|a| a.mult.iter().zip(t.degrees()).all(|(m, d)| m <= d))
}

/// Full analysis of the monoid of `F`-invariant representations.
pub fn analyze(lattice: RepLattice, t: &CharacterTable, f: &FusionPattern) -> Result<MonoidAnalysis> {
    let atoms = atoms_hilbert(&lattice)?;
    let rank = lattice.rank();
    if atoms.len() < rank {
        return Err(Error::Internal(format!("{} atoms for a lattice of rank {rank}", atoms.len())));
    }
    for a in &atoms {
        if !lattice.contains(a)? {
            return Err(Error::Internal(format!("atom {a} outside the lattice")));
        }
    }
    let (factorial, factorial_witness) = factoriality(&atoms, rank)?;
    let (half_factorial, half_factorial_witness) = half_factoriality(&atoms)?;
    let transitive = is_transitive(f);
    if transitive {
        let trivial = t.trivial();
        let mut reduced = t.regular();
        reduced.mult[0] -= 1;
        if atoms != vec![trivial, reduced] {
            return Err(Error::Internal("transitive pattern with unexpected atoms".into()));
        }
    }
    Ok(MonoidAnalysis {
        regular_conjecture_holds: check_regular_conjecture(&atoms, t),
        lattice,
        atoms,
        factorial,
        half_factorial,
        factorial_witness,
        half_factorial_witness,
        transitive,
    })
}

/// The lattice spanned by `generators`, as a convenience for callers that
/// hold hand-written bases.
pub fn lattice_from_reps(generators: &[VirtualRep], degrees: Vec<u64>) -> Result<RepLattice> {
    let rows: Vec<Vec<i64>> = generators.iter().map(|g| g.mult.clone()).collect();
    let m = rows_matrix(&rows, degrees.len())?;
    RepLattice::from_generators(&lattice_basis(&m), degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::fusion::{fusion_from_partition, fusion_pattern};
    use crate::perm::{sylow_subgroup, PermGroup, Permutation, DEFAULT_CONJUGACY_CAP};
    use crate::repring::rep_lattice;

    fn group(degree: usize, gens: &[&str]) -> PermGroup {
        let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::parse(g, Some(degree)).unwrap()).collect();
        PermGroup::from_generators(degree, &gens).unwrap()
    }

    fn setup(g: &PermGroup, p: u64) -> (CharacterTable, FusionPattern, RepLattice) {
        let s = sylow_subgroup(g, p).unwrap();
        let t = character_table(&s).unwrap();
        let f = fusion_pattern(g, &s, &t, DEFAULT_CONJUGACY_CAP).unwrap();
        let l = rep_lattice(&f, &t).unwrap();
        (t, f, l)
    }

    fn rep(v: &[u64]) -> RepVector {
        RepVector::new(v.to_vec())
    }

    #[test]
    fn sigma_three() {
        let (t, f, l) = setup(&group(3, &["(1,2,3)", "(1,2)"]), 3);
        let atoms = atoms_hilbert(&l).unwrap();
        assert_eq!(atoms, vec![rep(&[1, 0, 0]), rep(&[0, 1, 1])]);
        let m = analyze(l, &t, &f).unwrap();
        assert!(m.factorial && m.half_factorial && m.transitive && m.regular_conjecture_holds);
    }

    #[test]
    fn trivial_fusion_is_free() {
        let s = group(4, &["(1,2,3,4)", "(1,3)"]);
        let t = character_table(&s).unwrap();
        let f = FusionPattern::discrete(5);
        let l = rep_lattice(&f, &t).unwrap();
        let atoms = atoms_hilbert(&l).unwrap();
        assert_eq!(atoms.len(), 5);
        assert!(atoms.iter().all(|a| a.mult.iter().sum::<u64>() == 1));
        let units: Vec<VirtualRep> = (0..5).map(|i| RepVector::unit(5, i).to_virtual()).collect();
        assert!(check_disjoint_basis(&units, &l).unwrap());
        let reps: Vec<RepVector> = (0..5).map(|i| RepVector::unit(5, i)).collect();
        assert!(check_private_irreducible_basis(&reps, &l).unwrap());
        assert_eq!(atoms_bounded_search(&l, &t, DEFAULT_SEARCH_BUDGET).unwrap(), atoms);
        assert!(factoriality(&atoms, 5).unwrap().0);
    }

    #[test]
    fn basis_checks_reject_non_bases() {
        let (_, _, l) = setup(&group(3, &["(1,2,3)", "(1,2)"]), 3);
        let bad = vec![rep(&[1, 0, 0]), rep(&[0, 2, 2])];
        assert!(matches!(check_private_irreducible_basis(&bad, &l), Err(Error::NotABasis(_))));
        assert!(matches!(certify_irreducible(0, &bad, &l), Err(Error::NotABasis(_))));
        let dependent = vec![VirtualRep::new(vec![1, 0, 0]), VirtualRep::new(vec![2, 0, 0])];
        assert!(matches!(check_convex_basis(&dependent, &[]), Err(Error::NotABasis(_))));
    }

    #[test]
    fn transitive_extraspecial_order_27() {
        // Heisenberg group of order 27 acting on F_3^2 by
        // (i, j) ↦ (i + u, j + w·i + v)
        let s = group(9, &["(1,2,3)(4,5,6)(7,8,9)", "(1,4,7)(2,5,8)(3,6,9)", "(4,5,6)(7,9,8)"]);
        assert_eq!(s.order_u64().unwrap(), 27);
        let t = character_table(&s).unwrap();
        let rest: Vec<usize> = (1..t.class_count()).collect();
        let orders: Vec<u64> = t.classes().iter().map(|c| c.element_order).collect();
        assert!(orders[1..].iter().all(|&o| o == 3));
        let f = fusion_from_partition(&[vec![0], rest], &t).unwrap();
        let l = rep_lattice(&f, &t).unwrap();
        let m = analyze(l, &t, &f).unwrap();
        assert!(m.transitive && m.factorial);
        assert_eq!(m.atoms[1].dimension(t.degrees()), 26);
    }

    #[test]
    fn witness_round_trip() {
        let atoms = vec![rep(&[1, 0]), rep(&[0, 1]), rep(&[2, 1])];
        let (f, w) = factoriality(&atoms, 2).unwrap();
        assert!(!f);
        let w = w.unwrap();
        assert!(w.is_valid(&atoms));
        let (hf, hw) = half_factoriality(&atoms).unwrap();
        assert!(!hf);
        let hw = hw.unwrap();
        assert_ne!(hw.decomp_a.len(), hw.decomp_b.len());
        assert_eq!(hw.relation_string(), "α1 + α1 + α2 = α3");
    }

    #[test]
    fn hilbert_matches_search_on_small_cones() {
        // a non-normal-looking lattice: x ≡ y (mod 3) in Z^3 with a free
        // third coordinate
        let gens = vec![VirtualRep::new(vec![1, 1, 0]), VirtualRep::new(vec![3, 0, 0]), VirtualRep::new(vec![0, 0, 1])];
        let l = lattice_from_reps(&gens, vec![3, 3, 1]).unwrap();
        let atoms = atoms_hilbert(&l).unwrap();
        let mut expected = vec![rep(&[0, 0, 1]), rep(&[1, 1, 0]), rep(&[3, 0, 0]), rep(&[0, 3, 0])];
        canonical_order(&mut expected, &[3, 3, 1]);
        assert_eq!(atoms, expected);
        let (hf, _) = half_factoriality(&atoms).unwrap();
        assert!(!hf);
    }

    #[test]
    fn parallelepiped_sizes() {
        let rays = Matrix::<i64>::from_i64(&[&[1, 0], &[1, 3]]);
        let (adj, det) = rays.adjugate().unwrap();
        let pts = parallelepiped_points(&rays, &adj, &det);
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&vec![1, 1]) && pts.contains(&vec![1, 2]));
    }
}
