//! Brackets of whole matrices: `⟪X, Y⟫ = Σ ⟪x_ij, y_kl⟫ E_ij ⊠ E_kl`.

use super::generators::GeneratorTable;
use super::leibniz::db;
use crate::algebra::{Matrix, TensorElement};
use crate::error::{Error, Result};
use crate::scalar::Var;

/// Cells `((i, j), (k, l))` indexed from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    dims: [usize; 4],
    cells: Vec<TensorElement>,
}

pub type CellIndex = (usize, usize, usize, usize);

impl BracketTable {
    pub fn from_fn(dims: [usize; 4], mut f: impl FnMut(CellIndex) -> Result<TensorElement>) -> Result<BracketTable> {
        let mut cells = Vec::with_capacity(dims.iter().product());
        for i in 0..dims[0] {
            for j in 0..dims[1] {
                for k in 0..dims[2] {
                    for l in 0..dims[3] {
                        cells.push(f((i, j, k, l))?);
                    }
                }
            }
        }
        Ok(BracketTable { dims, cells })
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    fn pos(&self, (i, j, k, l): CellIndex) -> usize {
        ((i * self.dims[1] + j) * self.dims[2] + k) * self.dims[3] + l
    }

    pub fn get(&self, c: CellIndex) -> &TensorElement {
        &self.cells[self.pos(c)]
    }

    pub fn cells(&self) -> impl Iterator<Item = (CellIndex, &TensorElement)> {
        let [_, n1, m2, n2] = self.dims;
        self.cells.iter().enumerate().map(move |(p, t)| {
            let l = p % n2;
            let k = (p / n2) % m2;
            let j = (p / (n2 * m2)) % n1;
            let i = p / (n2 * m2 * n1);
            ((i, j, k, l), t)
        })
    }

    pub fn is_zero(&self) -> bool {
        self.cells.iter().all(TensorElement::is_zero)
    }

    /// Cells where the two tables differ, in index order.
    pub fn differences<'a>(&'a self, o: &'a BracketTable) -> Result<Vec<(CellIndex, &'a TensorElement, &'a TensorElement)>> {
        if self.dims != o.dims {
            return Err(Error::SizeMismatch(format!("tables {:?} and {:?}", self.dims, o.dims)));
        }
        Ok(self
            .cells()
            .zip(o.cells.iter())
            .filter(|((_, a), b)| a.terms().ne(b.terms()))
            .map(|((c, a), b)| (c, a, b))
            .collect())
    }
}

/// Cellwise `⟪X_ij, Y_kl⟫`.
pub fn matrix_db(table: &GeneratorTable, x: &Matrix, y: &Matrix) -> Result<BracketTable> {
    BracketTable::from_fn([x.nrows(), x.ncols(), y.nrows(), y.ncols()], |(i, j, k, l)| {
        Ok(db(table, x.get(i, j), y.get(k, l)))
    })
}

/// `⟪X(λ), X(μ)⟫`: the second copy carried in μ.
pub fn matrix_db_spectral(table: &GeneratorTable, x: &Matrix) -> Result<BracketTable> {
    matrix_db(table, x, &x.substitute(Var::Lambda, Var::Mu))
}

/// Powers `X^0..X^(k-1)`, with `X^0` the identity on `objs`.
fn powers(x: &Matrix, k: usize, objs: &[crate::algebra::ObjectId]) -> Result<Vec<Matrix>> {
    let mut out = vec![Matrix::identity(objs.to_vec())];
    for p in 1..k {
        out.push(if p == 1 { x.clone() } else { out[p - 1].mul(x)? });
    }
    Ok(out)
}

/// `⟪X(λ)^k, X(μ)^l⟫` assembled from `⟪X, X⟫` by the matrix Leibniz rule
/// `Σ (X_R^i ⊠ Y_L^j) ⟪X, Y⟫ (X_L^(k-1-i) ⊠ Y_R^(l-1-j))`.
pub fn matrix_power_db(table: &GeneratorTable, x: &Matrix, k: usize, l: usize) -> Result<BracketTable> {
    if k == 0 || l == 0 {
        return Err(Error::Argument("powers start at 1".into()));
    }
    if (k > 1 || l > 1) && x.rows() != x.cols() {
        return Err(Error::SizeMismatch("powers need a square matrix with matching objects".into()));
    }
    let y = x.substitute(Var::Lambda, Var::Mu);
    let base = matrix_db(table, x, &y)?;
    let (xl, xr) = (powers(x, k, x.rows())?, powers(x, k, x.cols())?);
    let (yl, yr) = (powers(&y, l, y.rows())?, powers(&y, l, y.cols())?);
    let (m, n) = (x.nrows(), x.ncols());
    BracketTable::from_fn([m, n, m, n], |(a, b, c, d)| {
        let mut cell: Option<TensorElement> = None;
        for p in 0..k {
            for q in 0..l {
                let (xa, xb) = (&xl[p], &xr[k - 1 - p]);
                let (yc, yd) = (&yl[q], &yr[l - 1 - q]);
                for a2 in 0..m {
                    for b2 in 0..n {
                        for c2 in 0..m {
                            for d2 in 0..n {
                                let t = base.get((a2, b2, c2, d2));
                                let (u, v) = (yc.get(c, c2), xa.get(a, a2));
                                let (s, w) = (xb.get(b2, b), yd.get(d2, d));
                                if t.is_zero() || u.is_zero() || v.is_zero() || s.is_zero() || w.is_zero() {
                                    continue;
                                }
                                let term = t.sandwich_left(u, v)?.sandwich_right(s, w)?;
                                match cell.as_mut() {
                                    Some(acc) => acc.add_assign(&term)?,
                                    None => cell = Some(term),
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(cell.unwrap_or_else(|| {
            let (xe, ye) = (x.get(a, b), y.get(c, d));
            TensorElement::zero((ye.src(), xe.dst()), (xe.src(), ye.dst()))
        }))
    })
}
