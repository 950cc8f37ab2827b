//! Permutation groups: Schreier-Sims stabilizer chains, element
//! enumeration, Sylow subgroups, conjugacy classes and conjugacy testing.
//!
//! Points are 0-based internally. Text input and output uses 1-based
//! disjoint-cycle notation such as `(1,2)(3,4)`, with `()` for the
//! identity.
//!
//! Products follow the right-action convention: `a * b` applies `a` first,
//! then `b`, and conjugation is `x^g = g⁻¹ x g`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::ops::{ControlFlow, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Default cap on the size of a conjugation orbit explored by
/// [`is_conjugate`].
pub const DEFAULT_CONJUGACY_CAP: u64 = 1_000_000;

/// Default cap on the group order accepted by [`conjugacy_classes`].
pub const DEFAULT_CLASS_CAP: u64 = 100_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|i| i as u32).collect() })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {degree}",
                        a + 1
                    )));
                }
                if used[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} appears twice",
                        a + 1
                    )));
                }
                used[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses 1-based cycle notation. When `degree` is `None` the degree is
    /// the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().map(|&a| a + 1).max().unwrap_or(0);
        let degree = match degree {
            Some(d) if d < max => {
                return Err(Error::InvalidPermutation(format!(
                    "`{}` mentions point {max} beyond degree {d}",
                    text.trim()
                )))
            }
            Some(d) => d,
            None => max,
        };
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u32;
        }
        Permutation { images }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[other.images[i] as usize] = other.images[j as usize];
        }
        Permutation { images }
    }

    pub fn pow(&self, mut exp: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            exp >>= 1;
        }
        acc
    }

    /// Cycle lengths in nonincreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.image(j);
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn order(&self) -> u64 {
        self.cycle_type().into_iter().fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i as u32 != j).map(|(i, _)| i)
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }
}

impl Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.image(j);
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s, None)
    }
}

/// Parses 1-based cycle notation into 0-based cycles.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty permutation".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected `(` in `{compact}`")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{compact}`")))?;
        let inner = &body[..close];
        if !inner.is_empty() {
            let cycle = inner
                .split(',')
                .map(|tok| match tok.parse::<usize>() {
                    Ok(0) | Err(_) => Err(Error::Parse(format!("bad point `{tok}` in `{compact}`"))),
                    Ok(v) => Ok(v - 1),
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        rest = &body[close + 1..];
    }
    Ok(cycles)
}

/// Parses the group input format: one generator per line, optional
/// `degree N` header, `#` comments.
pub fn parse_generators(text: &str) -> Result<(usize, Vec<Permutation>)> {
    let mut degree = None;
    let mut raw = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(d) = line.strip_prefix("degree") {
            let d = d.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad header `{line}`")))?;
            degree = Some(d);
            continue;
        }
        raw.push(parse_cycles(line)?);
    }
    let max = raw.iter().flatten().flatten().map(|&a| a + 1).max().unwrap_or(0);
    let degree = match degree {
        Some(d) if d < max => {
            return Err(Error::Parse(format!("point {max} exceeds declared degree {d}")))
        }
        Some(d) => d,
        None => max,
    };
    let gens = raw
        .iter()
        .map(|c| Permutation::from_cycles(degree, c))
        .collect::<Result<Vec<_>>>()?;
    Ok((degree, gens))
}

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    orbit: Vec<usize>,
    /// `transversal[b] = (u, u⁻¹)` with `base^u = b`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

/// Which full group a permutation group is on its natural domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NaturalKind {
    Symmetric,
    Alternating,
}

/// A permutation group with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), strong: Vec::new(), levels: Vec::new() }
    }

    /// Builds the group generated by `gens` on `degree` points by
    /// deterministic Schreier-Sims.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let generators: Vec<Permutation> = gens.to_vec();
        let mut group = PermGroup { degree, generators, strong: Vec::new(), levels: Vec::new() };
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        group.schreier_sims(strong);
        Ok(group)
    }

    fn schreier_sims(&mut self, strong: Vec<Permutation>) {
        self.strong = strong;
        let mut bases: Vec<usize> = Vec::new();
        for s in &self.strong {
            if bases.iter().all(|&b| s.image(b) == b) {
                bases.push(s.first_moved_point().expect("non-identity"));
            }
        }
        self.levels = bases.iter().map(|&b| Level { base: b, orbit: vec![], transversal: vec![] }).collect();
        for i in 0..self.levels.len() {
            self.rebuild_level(i);
        }

        let mut i = self.levels.len();
        'outer: while i > 0 {
            let lvl = i - 1;
            let gens = self.level_generators(lvl);
            let orbit = self.levels[lvl].orbit.clone();
            for &beta in &orbit {
                for s in &gens {
                    let (u_beta, _) = self.levels[lvl].transversal[beta].clone().expect("orbit point");
                    let target = s.image(beta);
                    let (_, u_target_inv) =
                        self.levels[lvl].transversal[target].clone().expect("orbit closed");
                    let h = u_beta.then(s).then(&u_target_inv);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, fail) = self.strip(&h, lvl + 1);
                    if fail < self.levels.len() || !residue.is_identity() {
                        if fail == self.levels.len() {
                            let b = residue.first_moved_point().expect("non-identity residue");
                            self.levels.push(Level { base: b, orbit: vec![], transversal: vec![] });
                        }
                        self.strong.push(residue);
                        for l in lvl + 1..=fail {
                            self.rebuild_level(l);
                        }
                        i = fail + 1;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Strong generators fixing the base points of levels before `lvl`.
    fn level_generators(&self, lvl: usize) -> Vec<Permutation> {
        self.strong
            .iter()
            .filter(|s| self.levels[..lvl].iter().all(|l| s.image(l.base) == l.base))
            .cloned()
            .collect()
    }

    fn rebuild_level(&mut self, lvl: usize) {
        let gens = self.level_generators(lvl);
        let base = self.levels[lvl].base;
        let mut transversal: Vec<Option<(Permutation, Permutation)>> = vec![None; self.degree];
        let id = Permutation::identity(self.degree);
        transversal[base] = Some((id.clone(), id));
        let mut orbit = vec![base];
        let mut k = 0;
        while k < orbit.len() {
            let beta = orbit[k];
            let u = transversal[beta].as_ref().expect("visited").0.clone();
            for s in &gens {
                let gamma = s.image(beta);
                if transversal[gamma].is_none() {
                    let v = u.then(s);
                    let vi = v.inverse();
                    transversal[gamma] = Some((v, vi));
                    orbit.push(gamma);
                }
            }
            k += 1;
        }
        self.levels[lvl].orbit = orbit;
        self.levels[lvl].transversal = transversal;
    }

    /// Sifts `g` through the chain from level `start`; returns the residue
    /// and the index of the level where sifting stopped (`levels.len()` if
    /// it went all the way through).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (idx, lvl) in self.levels.iter().enumerate().skip(start) {
            let b = g.image(lvl.base);
            match &lvl.transversal[b] {
                None => return (g, idx),
                Some((_, u_inv)) => g = g.then(u_inv),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u64`, or a cap error for groups too large to enumerate.
    pub fn order_u64(&self) -> Result<u64> {
        self.order().to_u64().ok_or_else(|| Error::cap("group order", u64::MAX))
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        if x.degree() != self.degree {
            return false;
        }
        let (residue, fail) = self.strip(x, 0);
        fail == self.levels.len() && residue.is_identity()
    }

    /// Membership with a degree check.
    pub fn membership(&self, x: &Permutation) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: x.degree() });
        }
        Ok(self.contains(x))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.strong.iter().all(|g| other.contains(g))
    }

    /// Visits every element exactly once in a deterministic order.
    pub fn for_each_element<F>(&self, mut f: F) -> ControlFlow<()>
    where
        F: FnMut(&Permutation) -> ControlFlow<()>,
    {
        fn rec<F: FnMut(&Permutation) -> ControlFlow<()>>(
            levels: &[Level],
            depth: usize,
            acc: &Permutation,
            f: &mut F,
        ) -> ControlFlow<()> {
            if depth == levels.len() {
                return f(acc);
            }
            let lvl = &levels[depth];
            for &b in &lvl.orbit {
                let (u, _) = lvl.transversal[b].as_ref().expect("orbit point");
                rec(levels, depth + 1, &u.then(acc), f)?;
            }
            ControlFlow::Continue(())
        }
        rec(&self.levels, 0, &Permutation::identity(self.degree), &mut f)
    }

    /// All elements, for groups of order at most `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::cap(format!("element enumeration of a group of order {order}"), cap));
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        let _ = self.for_each_element(|g| {
            out.push(g.clone());
            ControlFlow::Continue(())
        });
        Ok(out)
    }

    /// Whether the group is the full symmetric or alternating group on its
    /// whole domain, detected from the order.
    pub fn natural_kind(&self) -> Option<NaturalKind> {
        let n = self.degree;
        let fact = (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        let order = self.order();
        if order == fact {
            Some(NaturalKind::Symmetric)
        } else if n >= 2 && order * 2u32 == fact {
            Some(NaturalKind::Alternating)
        } else {
            None
        }
    }
}

/// `group_from_generators` with the degree taken from the generators.
/// An empty list needs an explicit degree, see [`PermGroup::trivial`].
pub fn group_from_generators(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
    PermGroup::from_generators(degree, gens)
}

fn p_part(mut n: BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut out = BigUint::one();
    while (&n % &p).bits() == 0 {
        n /= &p;
        out *= &p;
    }
    out
}

/// A Sylow `p`-subgroup, grown one normalizing `p`-element at a time.
///
/// While `P` is not Sylow, `p` divides `[N_G(P) : P]`, so some `p`-element
/// of `N_G(P)` lies outside `P` and extends it. Elements are scanned in the
/// deterministic enumeration order, so the result is reproducible.
pub fn sylow_subgroup(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if p < 2 || !crate::util::is_prime(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    let target = p_part(g.order(), p);
    let mut sylow = PermGroup::trivial(g.degree());
    while sylow.order() < target {
        let mut found = None;
        let current = &sylow;
        let _ = g.for_each_element(|x| {
            let o = x.order();
            let mut m = o;
            while m % p == 0 {
                m /= p;
            }
            if m == o {
                return ControlFlow::Continue(());
            }
            let h = x.pow(m);
            if current.contains(&h) {
                return ControlFlow::Continue(());
            }
            let hi = h.inverse();
            if current.strong.iter().all(|s| current.contains(&hi.then(s).then(&h))) {
                found = Some(h);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        let h = found.ok_or_else(|| Error::Internal("no normalizing p-element found".into()))?;
        let mut gens = sylow.generators.clone();
        gens.push(h);
        sylow = PermGroup::from_generators(g.degree(), &gens)?;
    }
    Ok(sylow)
}

/// A conjugacy class of a small group, with all of its elements.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    pub elements: Vec<Permutation>,
}

/// Conjugacy classes of `s` by full enumeration.
///
/// Ordering: identity first, then by element order, class size, and the
/// lexicographically least representative (which is also the stored
/// representative).
pub fn conjugacy_classes(s: &PermGroup, cap: u64) -> Result<Vec<ConjClass>> {
    let elements = s.elements(cap)?;
    let mut seen: HashSet<Permutation> = HashSet::with_capacity(elements.len());
    let gens = s.strong_generators().to_vec();
    let mut classes = Vec::new();
    for x in &elements {
        if seen.contains(x) {
            continue;
        }
        let mut members = vec![x.clone()];
        seen.insert(x.clone());
        let mut k = 0;
        while k < members.len() {
            let y = members[k].clone();
            for g in &gens {
                let z = y.conjugate_by(g);
                if seen.insert(z.clone()) {
                    members.push(z);
                }
            }
            k += 1;
        }
        members.sort();
        let representative = members[0].clone();
        classes.push(ConjClass {
            element_order: representative.order(),
            size: members.len() as u64,
            representative,
            elements: members,
        });
    }
    classes.sort_by(|a, b| {
        (a.element_order, a.size, &a.representative).cmp(&(b.element_order, b.size, &b.representative))
    });
    Ok(classes)
}

/// The conjugation orbit `{x^g : g ∈ G}`, or a cap error.
pub fn conjugacy_orbit(g: &PermGroup, x: &Permutation, cap: u64) -> Result<HashSet<Permutation>> {
    let mut orbit = HashSet::new();
    orbit.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(y) = queue.pop_front() {
        for s in g.strong_generators() {
            let z = y.conjugate_by(s);
            if !orbit.contains(&z) {
                if orbit.len() as u64 >= cap {
                    return Err(Error::cap("conjugacy orbit", cap));
                }
                orbit.insert(z.clone());
                queue.push_back(z);
            }
        }
    }
    Ok(orbit)
}

/// Whether the `S_n` class of a cycle type splits in `A_n`: all cycle
/// lengths (fixed points included) odd and pairwise distinct.
fn splits_in_alternating(cycle_type: &[usize]) -> bool {
    cycle_type.iter().all(|l| l % 2 == 1) && cycle_type.windows(2).all(|w| w[0] != w[1])
}

/// Conjugacy test in `g`.
///
/// Uses cycle types when `g` is the full symmetric group, or the
/// alternating group on a non-splitting class; otherwise enumerates the
/// conjugation orbit of `x` up to `cap` elements.
pub fn is_conjugate(g: &PermGroup, x: &Permutation, y: &Permutation, cap: u64) -> Result<bool> {
    if x.degree() != g.degree() || y.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: g.degree(),
            found: if x.degree() != g.degree() { x.degree() } else { y.degree() },
        });
    }
    let ct = x.cycle_type();
    if ct != y.cycle_type() {
        return Ok(false);
    }
    if x == y {
        return Ok(true);
    }
    match g.natural_kind() {
        Some(NaturalKind::Symmetric) => return Ok(true),
        Some(NaturalKind::Alternating) if !splits_in_alternating(&ct) => return Ok(true),
        _ => {}
    }
    is_conjugate_by_orbit(g, x, y, cap)
}

/// Orbit-enumeration conjugacy test without any fast path.
pub fn is_conjugate_by_orbit(g: &PermGroup, x: &Permutation, y: &Permutation, cap: u64) -> Result<bool> {
    let mut orbit = HashSet::new();
    orbit.insert(x.clone());
    let mut queue = VecDeque::from([x.clone()]);
    while let Some(z) = queue.pop_front() {
        for s in g.strong_generators() {
            let w = z.conjugate_by(s);
            if &w == y {
                return Ok(true);
            }
            if !orbit.contains(&w) {
                if orbit.len() as u64 >= cap {
                    return Err(Error::cap("conjugacy orbit", cap));
                }
                orbit.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    fn sym(n: usize) -> PermGroup {
        if n < 2 {
            return PermGroup::trivial(n);
        }
        let cyc: Vec<usize> = (0..n).collect();
        let gens = vec![
            Permutation::from_cycles(n, &[cyc]).unwrap(),
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
        ];
        PermGroup::from_generators(n, &gens).unwrap()
    }

    #[test]
    fn s3_order() {
        let g = PermGroup::from_generators(3, &[p("(1,2)", 3), p("(1,2,3)", 3)]).unwrap();
        assert_eq!(g.order(), BigUint::from(6u32));
    }

    #[test]
    fn trivial_group_from_empty_list() {
        let g = PermGroup::from_generators(4, &[]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert!(g.contains(&Permutation::identity(4)));
    }

    #[test]
    fn degree_mismatch_is_error() {
        let err = PermGroup::from_generators(3, &[p("(1,2)", 4)]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
    }

    #[test]
    fn orders_match_element_count() {
        for n in 1..=6 {
            let g = sym(n);
            let count = g.elements(10_000).unwrap().len() as u64;
            assert_eq!(BigUint::from(count), g.order());
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(count, fact);
        }
    }

    #[test]
    fn membership_basics() {
        let s3 = sym(3);
        assert!(s3.membership(&p("(1,2)", 3)).unwrap());
        let a3 = PermGroup::from_generators(3, &[p("(1,2,3)", 3)]).unwrap();
        assert!(!a3.membership(&p("(1,2)", 3)).unwrap());
        assert!(a3.membership(&p("(1,2)", 4)).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let x = p("(1,3)(2,5,4)", 6);
        assert_eq!(x.to_string(), "(1,3)(2,5,4)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(x.order(), 6);
        assert!(Permutation::parse("(1,1)", None).is_err());
        assert!(Permutation::parse("(0,1)", None).is_err());
        assert!(Permutation::parse("(1,2", None).is_err());
    }

    #[test]
    fn group_file_format() {
        let (deg, gens) = parse_generators("# S4\ndegree 5\n(1,2,3,4)\n(1,2)\n()\n").unwrap();
        assert_eq!(deg, 5);
        assert_eq!(gens.len(), 3);
        assert!(gens[2].is_identity());
        assert!(parse_generators("degree 2\n(1,2,3)\n").is_err());
    }

    #[test]
    fn composition_convention() {
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        // 1 -a-> 2 -b-> 3
        assert_eq!((&a * &b).image(0), 2);
        let c = p("(1,2,3)", 3);
        assert_eq!(c.conjugate_by(&a), a.inverse().then(&c).then(&a));
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn sylow_orders() {
        for (n, prime, expect) in [(3usize, 3u64, 3u32), (4, 2, 8), (6, 2, 16), (9, 3, 81), (5, 7, 1)] {
            let g = sym(n);
            let s = sylow_subgroup(&g, prime).unwrap();
            assert_eq!(s.order(), BigUint::from(expect), "S{n} at {prime}");
            assert!(s.is_subgroup_of(&g));
        }
    }

    #[test]
    fn class_counts() {
        let z3 = PermGroup::from_generators(3, &[p("(1,2,3)", 3)]).unwrap();
        let cl = conjugacy_classes(&z3, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|c| c.size == 1));
        assert!(cl[0].representative.is_identity());

        let d8 = PermGroup::from_generators(4, &[p("(1,2,3,4)", 4), p("(1,3)", 4)]).unwrap();
        assert_eq!(conjugacy_classes(&d8, DEFAULT_CLASS_CAP).unwrap().len(), 5);

        let s6 = sym(6);
        let s = sylow_subgroup(&s6, 2).unwrap();
        let cl = conjugacy_classes(&s, DEFAULT_CLASS_CAP).unwrap();
        assert_eq!(cl.len(), 10);
        assert_eq!(cl.iter().map(|c| c.size).sum::<u64>(), 16);
    }

    #[test]
    fn class_cap() {
        let g = sym(8);
        assert!(conjugacy_classes(&g, 100).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn conjugacy_in_s3() {
        let s3 = sym(3);
        assert!(is_conjugate(&s3, &p("(1,2,3)", 3), &p("(1,3,2)", 3), 100).unwrap());
        assert!(!is_conjugate(&s3, &p("(1,2,3)", 3), &p("(1,2)", 3), 100).unwrap());
        let a3 = PermGroup::from_generators(3, &[p("(1,2,3)", 3)]).unwrap();
        assert!(!is_conjugate(&a3, &p("(1,2,3)", 3), &p("(1,3,2)", 3), 100).unwrap());
    }

    #[test]
    fn orbit_cap_reports_undecided() {
        let g = sym(7);
        let x = p("(1,2,3,4,5,6,7)", 7);
        let y = Permutation::identity(7);
        let err = is_conjugate_by_orbit(&g, &x, &y, 10).unwrap_err();
        assert!(err.is_cap_exceeded());
    }

    #[test]
    fn d8_fusion_in_s4() {
        let s4 = sym(4);
        let d8 = PermGroup::from_generators(4, &[p("(1,2,3,4)", 4), p("(1,3)", 4)]).unwrap();
        let cl = conjugacy_classes(&d8, DEFAULT_CLASS_CAP).unwrap();
        let mut labels: Vec<usize> = Vec::new();
        for (i, c) in cl.iter().enumerate() {
            let l = (0..i)
                .find(|&j| is_conjugate(&s4, &cl[j].representative, &c.representative, 1000).unwrap())
                .map(|j| labels[j])
                .unwrap_or(i);
            labels.push(l);
        }
        let mut distinct = labels.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn fast_path_agrees_with_orbits() {
        for n in 1..=6 {
            let s = sym(n);
            let evens: Vec<_> = s.elements(1000).unwrap().into_iter().filter(|x| x.is_even()).collect();
            let a = PermGroup::from_generators(n, &evens).unwrap();
            for g in [&s, &a] {
                let els = g.elements(1000).unwrap();
                for x in &els {
                    let orbit = conjugacy_orbit(g, x, 10_000).unwrap();
                    for y in &els {
                        assert_eq!(
                            is_conjugate(g, x, y, 10_000).unwrap(),
                            orbit.contains(y),
                            "{x} {y} in degree {n}"
                        );
                    }
                }
            }
        }
    }
}
