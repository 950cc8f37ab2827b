//! Exact integer linear algebra over any [`IntScalar`].
//!
//! Vectors are rows and matrices act on the right: the kernel of `A` is
//! `{x : x·A = 0}` and lattices are the row spans of their basis matrices.
//! Lattices are kept as canonical row Hermite normal forms, so two bases
//! span the same lattice exactly when their HNFs are equal.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }
}

impl<T: IntScalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when there are no
    /// rows.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<T>> =
            rows.iter().map(|r| r.iter().map(|&x| T::from_i64(x).expect("fits")).collect()).collect();
        Self::from_rows(rows, cols).expect("rectangular")
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).clone() + a.clone() * other.get(k, j).clone();
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// `x·A`.
    pub fn left_mul(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, found: x.len() });
        }
        let mut out = vec![T::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o = o.clone() + xi.clone() * a.clone();
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> Self {
        let rows: Vec<Vec<T>> = idx.into_iter().map(|i| self.row(i).to_vec()).collect();
        Self::from_rows(rows, self.cols).expect("same width")
    }

    pub fn append_rows(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Replaces rows `(a, b)` by `(p·a + q·b, r·a + s·b)`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &T, q: &T, r: &T, s: &T) {
        for j in 0..self.cols {
            let x = self.get(a, j).clone();
            let y = self.get(b, j).clone();
            self.set(a, j, p.clone() * x.clone() + q.clone() * y.clone());
            self.set(b, j, r.clone() * x + s.clone() * y);
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, p: &T, q: &T, r: &T, s: &T) {
        for i in 0..self.rows {
            let x = self.get(i, a).clone();
            let y = self.get(i, b).clone();
            self.set(i, a, p.clone() * x.clone() + q.clone() * y.clone());
            self.set(i, b, r.clone() * x + s.clone() * y);
        }
    }

    /// `row[target] -= factor · row[source]`.
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(target, j).clone() - factor.clone() * self.get(source, j).clone();
            self.set(target, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    pub fn rank(&self) -> usize {
        hermite_normal_form(self).0.row_iter().filter(|r| r.iter().any(|x| !x.is_zero())).count()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if self.rows != self.cols {
            return Err(Error::LengthMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m.get(i, k).is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                m.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(k, k).clone() * m.get(i, j).clone() - m.get(i, k).clone() * m.get(k, j).clone())
                        / prev.clone();
                    m.set(i, j, v);
                }
                m.set(i, k, T::zero());
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1).clone())
    }

    /// `(adj, det)` with `self · adj = adj · self = det · I`, for a square
    /// nonsingular matrix.
    pub fn adjugate(&self) -> Result<(Self, T)> {
        let n = self.rows;
        if n != self.cols {
            return Err(Error::LengthMismatch { expected: n, found: self.cols });
        }
        let det = self.determinant()?;
        if det.is_zero() {
            return Err(Error::NotABasis("singular matrix".into()));
        }
        // Gauss-Jordan over the rationals, then scale by the determinant
        let mut a: Vec<Vec<Ratio<T>>> = (0..n)
            .map(|i| {
                let mut row: Vec<Ratio<T>> = self.row(i).iter().map(|x| Ratio::from_integer(x.clone())).collect();
                row.extend((0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero()).expect("nonsingular");
            a.swap(p, k);
            let inv = a[k][k].recip();
            for x in a[k].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for i in 0..n {
                if i != k && !a[i][k].is_zero() {
                    let f = a[i][k].clone();
                    for j in 0..2 * n {
                        let v = a[i][j].clone() - f.clone() * a[k][j].clone();
                        a[i][j] = v;
                    }
                }
            }
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let v = a[i][n + j].clone() * Ratio::from_integer(det.clone());
                debug_assert!(v.is_integer());
                adj.set(i, j, v.to_integer());
            }
        }
        Ok((adj, det))
    }
}

/// Unimodular `[[s, t], [r, q]]` taking `(x, y)` to `(gcd, 0)`; plain
/// subtraction when `x` already divides `y`.
fn gcd_step<T: IntScalar>(x: &T, y: &T) -> (T, T, T, T) {
    if y.is_multiple_of(x) {
        return (T::one(), T::zero(), -(y.clone() / x.clone()), T::one());
    }
    let e = x.extended_gcd(y);
    let r = -(y.clone() / e.gcd.clone());
    let q = x.clone() / e.gcd;
    (e.x, e.y, r, q)
}

/// Row Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`.
///
/// `H` is in row echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows last; it depends only on
/// the row lattice of `A`.
pub fn hermite_normal_form<T: IntScalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let m = a.rows;
    let mut h = a.clone();
    let mut u = Matrix::identity(m);
    let mut pr = 0;
    for col in 0..a.cols {
        if pr == m {
            break;
        }
        for i in pr + 1..m {
            if h.get(i, col).is_zero() {
                continue;
            }
            if h.get(pr, col).is_zero() {
                h.swap_rows(pr, i);
                u.swap_rows(pr, i);
                continue;
            }
            let x = h.get(pr, col).clone();
            let y = h.get(i, col).clone();
            let (s, t, r, q) = gcd_step(&x, &y);
            h.combine_rows(pr, i, &s, &t, &r, &q);
            u.combine_rows(pr, i, &s, &t, &r, &q);
        }
        if h.get(pr, col).is_zero() {
            continue;
        }
        if h.get(pr, col).is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let pivot = h.get(pr, col).clone();
        for r in 0..pr {
            let f = h.get(r, col).div_floor(&pivot);
            h.sub_row_multiple(r, pr, &f);
            u.sub_row_multiple(r, pr, &f);
        }
        pr += 1;
    }
    (h, u)
}

/// The nonzero rows of the HNF: a canonical basis of the row lattice.
pub fn lattice_basis<T: IntScalar>(a: &Matrix<T>) -> Matrix<T> {
    let (h, _) = hermite_normal_form(a);
    let keep: Vec<usize> = (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).collect();
    h.select_rows(keep)
}

/// A basis of `{x ∈ Z^m : x·A = 0}` in canonical HNF. The returned lattice
/// is the full integer kernel.
pub fn integer_kernel<T: IntScalar>(a: &Matrix<T>) -> Matrix<T> {
    let (h, u) = hermite_normal_form(a);
    let rank = (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count();
    let k = u.select_rows(rank..a.rows);
    lattice_basis(&k)
}

/// Some integer `x` with `x·A = b`, or `None` if there is none.
pub fn solve_integer<T: IntScalar>(a: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    if b.len() != a.cols {
        return Err(Error::LengthMismatch { expected: a.cols, found: b.len() });
    }
    let (h, u) = hermite_normal_form(a);
    let mut residual = b.to_vec();
    let mut y = vec![T::zero(); a.rows];
    for i in 0..h.rows {
        let Some(c) = (0..h.cols).find(|&j| !h.get(i, j).is_zero()) else {
            break;
        };
        if residual[..c].iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        let pivot = h.get(i, c);
        let (q, r) = residual[c].div_rem(pivot);
        if !r.is_zero() {
            return Ok(None);
        }
        for (res, hv) in residual.iter_mut().zip(h.row(i)) {
            *res = res.clone() - q.clone() * hv.clone();
        }
        y[i] = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return Ok(None);
    }
    Ok(Some(u.left_mul(&y)?))
}

/// Whether two matrices have the same row lattice.
pub fn same_lattice<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    a.cols == b.cols && lattice_basis(a) == lattice_basis(b)
}

/// Smith normal form: `(D, U, V)` with `U·A·V = D` diagonal, nonnegative,
/// and each diagonal entry dividing the next.
pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> (Matrix<T>, Matrix<T>, Matrix<T>) {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut v = Matrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // smallest nonzero entry of the trailing block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            let mut changed = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let x = d.get(t, t).clone();
                let y = d.get(i, t).clone();
                let (s, w, r, q) = gcd_step(&x, &y);
                d.combine_rows(t, i, &s, &w, &r, &q);
                u.combine_rows(t, i, &s, &w, &r, &q);
                changed = true;
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let x = d.get(t, t).clone();
                let y = d.get(t, j).clone();
                let (s, w, r, q) = gcd_step(&x, &y);
                d.combine_cols(t, j, &s, &w, &r, &q);
                v.combine_cols(t, j, &s, &w, &r, &q);
                changed = true;
            }
            if !changed {
                // divisibility condition with the rest of the block
                let pivot = d.get(t, t).clone();
                let bad = (t + 1..m).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&(i, j)| {
                    !d.get(i, j).is_zero() && !d.get(i, j).is_multiple_of(&pivot)
                });
                match bad {
                    Some((i, _)) => {
                        // add row i to row t and repeat elimination
                        let one = T::one();
                        let neg = -one.clone();
                        d.sub_row_multiple(t, i, &neg);
                        u.sub_row_multiple(t, i, &neg);
                    }
                    None => break,
                }
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (d, u, v)
}

/// Diagonal of the Smith normal form, zeros dropped.
pub fn elementary_divisors<T: IntScalar>(a: &Matrix<T>) -> Vec<T> {
    let (d, _, _) = smith_normal_form(a);
    (0..d.rows.min(d.cols)).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Signed;
    use proptest::prelude::*;

    type M = Matrix<BigInt>;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hnf_examples() {
        let id = M::identity(3);
        let (h, u) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);

        let a = M::from_i64(&[&[2, 4], &[1, 2]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, M::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(u.mul(&a).unwrap(), h);
    }

    #[test]
    fn kernel_examples() {
        let zero = M::zeros(3, 2);
        assert_eq!(integer_kernel(&zero), M::identity(3));
        let a = M::from_i64(&[&[1], &[1]]);
        assert_eq!(integer_kernel(&a), M::from_i64(&[&[1, -1]]));
        // zero-column matrix: every vector is in the kernel
        assert_eq!(integer_kernel(&M::zeros(4, 0)), M::identity(4));
    }

    #[test]
    fn solve_examples() {
        let a = M::from_i64(&[&[2]]);
        assert_eq!(solve_integer(&a, &[bi(0)]).unwrap(), Some(vec![bi(0)]));
        assert_eq!(solve_integer(&a, &[bi(1)]).unwrap(), None);
        let b = M::from_i64(&[&[2, 0], &[0, 3], &[1, 1]]);
        let x = solve_integer(&b, &[bi(1), bi(0)]).unwrap().unwrap();
        assert_eq!(b.left_mul(&x).unwrap(), vec![bi(1), bi(0)]);
    }

    #[test]
    fn determinant_and_adjugate() {
        let a = M::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(a.determinant().unwrap(), bi(18));
        let (adj, det) = a.adjugate().unwrap();
        assert_eq!(a.mul(&adj).unwrap(), {
            let mut d = M::zeros(3, 3);
            for i in 0..3 {
                d.set(i, i, det.clone());
            }
            d
        });
        let sing = M::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.adjugate().is_err());
    }

    #[test]
    fn smith_examples() {
        let a = M::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        assert_eq!(elementary_divisors(&a), vec![bi(2), bi(6), bi(12)]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d);
    }

    #[test]
    fn big_entries_are_exact() {
        let big = BigInt::parse_bytes(b"1000000000000000000000000000000", 10).unwrap();
        let a = M::from_rows(
            vec![vec![big.clone(), bi(1), bi(3)], vec![bi(7), big.clone() + 1, bi(-2)], vec![bi(1), bi(1), bi(1)]],
            3,
        )
        .unwrap();
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(u.mul(&a).unwrap(), h);
        assert!(u.determinant().unwrap().abs().is_one());
        let stacked = a.append_rows(&M::from_i64(&[&[1, 1, 1]])).unwrap();
        let k = integer_kernel(&stacked);
        assert_eq!(k.rows(), 1);
        assert!(stacked.left_mul(k.row(0)).unwrap().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn machine_integers_share_the_code_path() {
        let a = Matrix::<i64>::from_i64(&[&[4, 6], &[6, 9], &[2, 3]]);
        assert_eq!(integer_kernel(&a).rows(), 2);
        assert_eq!(lattice_basis(&a), Matrix::<i64>::from_i64(&[&[2, 3]]));
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = M> {
        prop::collection::vec(-9i64..=9, rows * cols).prop_map(move |v| {
            let rows: Vec<Vec<BigInt>> = v.chunks(cols).map(|c| c.iter().map(|&x| bi(x)).collect()).collect();
            M::from_rows(rows, cols).unwrap()
        })
    }

    fn arb_unimodular(n: usize) -> impl Strategy<Value = M> {
        prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
            let mut p = M::identity(n);
            for (a, b, f) in ops {
                if a != b {
                    p.sub_row_multiple(a, b, &bi(f));
                } else {
                    p.negate_row(a);
                }
            }
            p
        })
    }

    proptest! {
        #[test]
        fn hnf_transform_is_unimodular(a in arb_matrix(6, 10)) {
            let (h, u) = hermite_normal_form(&a);
            prop_assert_eq!(u.mul(&a).unwrap(), h);
            prop_assert!(u.determinant().unwrap().abs().is_one());
        }

        #[test]
        fn hnf_is_canonical(a in arb_matrix(5, 4), p in arb_unimodular(5)) {
            let pa = p.mul(&a).unwrap();
            prop_assert_eq!(hermite_normal_form(&pa).0, hermite_normal_form(&a).0);
        }

        #[test]
        fn kernel_is_saturated(a in arb_matrix(7, 3), coeffs in prop::collection::vec(-5i64..=5, 7)) {
            let k = integer_kernel(&a);
            for row in k.row_iter() {
                prop_assert!(a.left_mul(row).unwrap().iter().all(|x| x.is_zero()));
            }
            // any kernel element, made from a random combination, is an
            // integer combination of the basis
            let kt = k.clone();
            let c: Vec<BigInt> = coeffs.iter().take(kt.rows()).map(|&x| bi(x)).collect();
            if !c.is_empty() {
                let v = kt.left_mul(&c).unwrap();
                // divide out common content so v is primitive, then solve
                let g = v.iter().fold(bi(0), |g, x| g.gcd(x));
                if !g.is_zero() {
                    let prim: Vec<BigInt> = v.iter().map(|x| x / &g).collect();
                    prop_assert!(a.left_mul(&prim).unwrap().iter().all(|x| x.is_zero()));
                    prop_assert!(solve_integer(&k, &prim).unwrap().is_some());
                }
            }
            if k.rows() > 0 {
                prop_assert!(elementary_divisors(&k).iter().all(|d| d.is_one()));
            }
        }

        #[test]
        fn solve_finds_solutions(a in arb_matrix(4, 3), x in prop::collection::vec(-4i64..=4, 4)) {
            let x: Vec<BigInt> = x.into_iter().map(bi).collect();
            let b = a.left_mul(&x).unwrap();
            let y = solve_integer(&a, &b).unwrap().unwrap();
            prop_assert_eq!(a.left_mul(&y).unwrap(), b);
        }

        #[test]
        fn smith_is_diagonal_and_divisible(a in arb_matrix(4, 5)) {
            let (d, u, v) = smith_normal_form(&a);
            prop_assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d.clone());
            prop_assert!(u.determinant().unwrap().abs().is_one());
            prop_assert!(v.determinant().unwrap().abs().is_one());
            let diag = elementary_divisors(&a);
            for w in diag.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert_eq!(diag.len(), a.rank());
        }

        #[test]
        fn huge_entries(vals in prop::collection::vec(-1_000_000i64..1_000_000, 12)) {
            let scale = BigInt::parse_bytes(b"1000000000000000000000000", 10).unwrap();
            let rows: Vec<Vec<BigInt>> = vals.chunks(4).map(|c| c.iter().map(|&x| bi(x) * &scale + bi(x % 7)).collect()).collect();
            let a = M::from_rows(rows, 4).unwrap();
            let (h, u) = hermite_normal_form(&a);
            prop_assert_eq!(u.mul(&a).unwrap(), h);
        }
    }
}
