//! The twisted commutator `r (B_L ⊠ B_R) − ((B_L ⊠ B_R) r̲)^τ` and the r-matrix theorems.

use super::rmatrix::{disk_r, trig_r, RMatrix};
use crate::algebra::{Matrix, TensorElement};
use crate::bracket::{matrix_db_spectral, BracketParams, BracketTable, GeneratorTable};
use crate::error::{Error, Result};
use crate::io::{serialize_tensor, Labels};
use crate::network::{boundary_matrix, Network, Surface};
use crate::report::Defect;
use crate::scalar::{Scalar, Var};

fn add_checked(cell: &mut TensorElement, term: &TensorElement, k: &Scalar, at: (usize, usize, usize, usize)) -> Result<()> {
    if k.is_zero() || term.is_zero() {
        return Ok(());
    }
    if (term.slot1(), term.slot2()) != (cell.slot1(), cell.slot2()) {
        return Err(Error::Inconsistent(format!(
            "term {:?}⊗{:?} breaks the endpoint typing of cell {:?}",
            term.slot1(),
            term.slot2(),
            at
        )));
    }
    cell.add_assign(&term.scale(k))
}

/// Cell `((a1,a3),(b1,b3))` equals
/// `Σ r_{a1a2}^{b1b2} (B(v1)_{a2a3} ⊗ B(v2)_{b2b3}) − Σ (B(v2)_{b1b2} ⊗ B(v1)_{a1a2}) r̲_{a2a3}^{b2b3}`,
/// with `B` given in λ and the r-matrices taken at `(v1, v2)`.
pub fn twisted_commutator(r: &RMatrix, r_out: &RMatrix, bm: &Matrix, v1: Var, v2: Var) -> Result<BracketTable> {
    let b1 = bm.substitute(Var::Lambda, v1);
    let b2 = bm.substitute(Var::Lambda, v2);
    twisted_commutator_pair(r, r_out, &b1, &b2, v1, v2)
}

/// [`twisted_commutator`] with the two copies `B(v1)`, `B(v2)` supplied directly.
pub fn twisted_commutator_pair(
    r: &RMatrix,
    r_out: &RMatrix,
    b1: &Matrix,
    b2: &Matrix,
    v1: Var,
    v2: Var,
) -> Result<BracketTable> {
    let (m, n) = (b1.nrows(), b1.ncols());
    if r.size() != m || r_out.size() != n {
        return Err(Error::SizeMismatch(format!(
            "r-matrices of sizes {} and {} for a {m}×{n} matrix",
            r.size(),
            r_out.size()
        )));
    }
    let (rows, cols) = (b1.rows(), b1.cols());
    BracketTable::from_fn([m, n, m, n], |(a1, a3, b1i, b3)| {
        let at = (a1, a3, b1i, b3);
        let mut cell = TensorElement::zero((rows[b1i], cols[a3]), (rows[a1], cols[b3]));
        for a2 in 0..m {
            for b2i in 0..m {
                let k = r.get_at(a1, a2, b1i, b2i, v1, v2);
                if !k.is_zero() {
                    add_checked(&mut cell, &TensorElement::pure(b1.get(a2, a3), b2.get(b2i, b3)), &k, at)?;
                }
            }
        }
        for a2 in 0..n {
            for b2i in 0..n {
                let k = r_out.get_at(a2, a3, b2i, b3, v1, v2);
                if !k.is_zero() {
                    let term = TensorElement::pure(b2.get(b1i, b2i), b1.get(a1, a2));
                    add_checked(&mut cell, &term, &k.neg_ref(), at)?;
                }
            }
        }
        Ok(cell)
    })
}

/// Cellwise comparison of two tables, one defect per differing cell (1-based indices).
pub fn table_defects(expected: &BracketTable, actual: &BracketTable, labels: &dyn Labels) -> Result<Vec<Defect>> {
    Ok(actual
        .differences(expected)?
        .into_iter()
        .map(|((i, j, k, l), a, e)| {
            Defect::new(
                format!("cell ({},{}),({},{})", i + 1, j + 1, k + 1, l + 1),
                serialize_tensor(e, labels),
                serialize_tensor(a, labels),
            )
        })
        .collect())
}

/// Both sides of the r-matrix formula for a network with the standard bracket:
/// `(⟪B(λ), B(μ)⟫, twisted commutator)`, disk r-matrices on a disk, trigonometric on a cylinder.
pub fn rmatrix_sides(net: &Network) -> Result<(BracketTable, BracketTable)> {
    let table = GeneratorTable::from_network(net, &BracketParams::standard())?;
    let b = boundary_matrix(net)?;
    let (m, n) = (b.nrows(), b.ncols());
    let (r, r_out) = match net.surface {
        Surface::Disk => (disk_r(m)?, disk_r(n)?),
        Surface::Cylinder => (trig_r(m)?, trig_r(n)?),
    };
    let lhs = matrix_db_spectral(&table, &b)?;
    let rhs = twisted_commutator(&r, &r_out, &b, Var::Lambda, Var::Mu)?;
    Ok((lhs, rhs))
}

/// Checks `⟪B, B⟫ = r (B_L ⊠ B_R) − ((B_L ⊠ B_R) r̲)^τ` cell by cell.
pub fn verify_rmatrix_theorem(net: &Network) -> Result<Vec<Defect>> {
    let (lhs, rhs) = rmatrix_sides(net)?;
    table_defects(&rhs, &lhs, net)
}
