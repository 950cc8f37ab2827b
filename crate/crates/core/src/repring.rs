//! The lattice of fusion-invariant virtual representations.
//!
//! A virtual representation `x ∈ Z^r` is invariant when its character
//! agrees on fused classes. Writing the character differences over an
//! integral basis of `Z[ζ_e]` turns this into integer linear equations, so
//! the invariant lattice is an integer kernel.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::chartab::{format_combination, CharacterTable, Multiplicities, VirtualRep};
use crate::error::{Error, Result};
use crate::fusion::FusionPattern;
use crate::intlin::{integer_kernel, lattice_basis, solve_integer, Matrix};
use crate::IntMatrix;

/// Rows: one per (fusing pair, coordinate of `Z[ζ_e]`). Columns: one per
/// irreducible character, holding `χ_j(s_1) - χ_j(s_2)`.
///
/// Pairs join the first class of each label to each other class of it.
pub fn difference_matrix(f: &FusionPattern, t: &CharacterTable) -> Result<IntMatrix> {
    if f.len() != t.class_count() {
        return Err(Error::LengthMismatch { expected: t.class_count(), found: f.len() });
    }
    let e = t.exponent();
    let r = t.irr_count();
    let mut rows = Vec::new();
    for group in f.groups() {
        let head = group[0];
        for &other in &group[1..] {
            let cols: Vec<Vec<BigInt>> = (0..r)
                .map(|j| {
                    let diff = t.value(j, head) - t.value(j, other);
                    diff.integer_coordinates(e)?
                        .ok_or_else(|| Error::Internal("character value is not an algebraic integer".into()))
                })
                .collect::<Result<_>>()?;
            let width = cols.first().map_or(0, |c| c.len());
            for c in 0..width {
                let row: Vec<BigInt> = cols.iter().map(|col| col[c].clone()).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(rows, r)
}

/// `R(F)` as a sublattice of `Z^r`, stored as a canonical HNF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct RepLattice {
    basis: IntMatrix,
    degrees: Vec<u64>,
}

impl fmt::Debug for RepLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepLattice {{ rank: {}, irr: {}, basis: {:?} }}", self.rank(), self.irr_count(), self.basis)
    }
}

impl RepLattice {
    /// Lattice spanned by the rows of `basis`, put into canonical form.
    pub fn from_generators(generators: &IntMatrix, degrees: Vec<u64>) -> Result<Self> {
        if generators.cols() != degrees.len() {
            return Err(Error::LengthMismatch { expected: degrees.len(), found: generators.cols() });
        }
        Ok(RepLattice { basis: lattice_basis(generators), degrees })
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn irr_count(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn basis_reps(&self) -> Result<Vec<VirtualRep>> {
        self.basis.row_iter().map(VirtualRep::from_bigint).collect()
    }

    /// Coordinates of `v` over the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &impl Multiplicities) -> Result<Option<Vec<BigInt>>> {
        let c: Vec<BigInt> = v.coefficients().into_iter().map(BigInt::from).collect();
        solve_integer(&self.basis, &c)
    }

    pub fn contains(&self, v: &impl Multiplicities) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Whether `other` spans exactly this lattice.
    pub fn same_as(&self, other: &IntMatrix) -> bool {
        other.cols() == self.irr_count() && lattice_basis(other) == self.basis
    }

    /// Basis rows as signed combinations of `r1..rN`.
    pub fn display_lines(&self) -> Vec<String> {
        self.basis_reps()
            .map(|rows| rows.iter().map(|v| format_combination(&v.mult)).collect())
            .unwrap_or_else(|_| vec!["<overflow>".into()])
    }
}

/// `R(F)`: the integer kernel of the difference matrix.
pub fn rep_lattice(f: &FusionPattern, t: &CharacterTable) -> Result<RepLattice> {
    let d = difference_matrix(f, t)?;
    let basis = integer_kernel(&d.transpose());
    if basis.rows() != f.class_count() {
        return Err(Error::RankMismatch { expected: f.class_count(), found: basis.rows() });
    }
    Ok(RepLattice { basis, degrees: t.degrees().to_vec() })
}
