//! Matrices of path-algebra elements.

use super::element::{Element, ObjectId};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, Var};

/// Entry `(i, j)` lives in `Hom(rows[i], cols[j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: Vec<ObjectId>,
    cols: Vec<ObjectId>,
    entries: Vec<Element>,
}

impl Matrix {
    pub fn zero(rows: Vec<ObjectId>, cols: Vec<ObjectId>) -> Matrix {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in &rows {
            for c in &cols {
                entries.push(Element::zero(*r, *c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn identity(objs: Vec<ObjectId>) -> Matrix {
        let mut m = Matrix::zero(objs.clone(), objs.clone());
        for (i, o) in objs.iter().enumerate() {
            m.set(i, i, Element::identity(*o));
        }
        m
    }

    pub fn from_fn(
        rows: Vec<ObjectId>,
        cols: Vec<ObjectId>,
        mut f: impl FnMut(usize, usize) -> Element,
    ) -> Matrix {
        let mut m = Matrix::zero(rows, cols);
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                let e = f(i, j);
                m.set(i, j, e);
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> &[ObjectId] {
        &self.rows
    }

    pub fn cols(&self) -> &[ObjectId] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.entries[i * self.cols.len() + j]
    }

    /// Stores `e`, forcing the declared endpoints when `e` is zero.
    pub fn set(&mut self, i: usize, j: usize, e: Element) {
        let (r, c) = (self.rows[i], self.cols[j]);
        let e = if e.is_zero() { Element::zero(r, c) } else { e };
        let n = self.cols.len();
        self.entries[i * n + j] = e;
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Matrix {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            let (s, d) = (e.src(), e.dst());
            let n = f(e);
            *e = if n.is_zero() { Element::zero(s, d) } else { n };
        }
        m
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        self.map(|e| e.scale(k))
    }

    pub fn substitute(&self, from: Var, to: Var) -> Matrix {
        self.map(|e| e.substitute(from, to))
    }

    pub fn truncate(&self, max_len: usize) -> Matrix {
        self.map(|e| e.truncate(max_len))
    }

    /// Replaces column objects, e.g. sinks by their identified sources.
    pub fn with_cols(&self, cols: Vec<ObjectId>) -> Result<Matrix> {
        if cols.len() != self.cols.len() {
            return Err(Error::SizeMismatch("column relabeling".into()));
        }
        let mut m = Matrix::zero(self.rows.clone(), cols);
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                let e = self.get(i, j).clone().with_endpoints(m.rows[i], m.cols[j]);
                m.set(i, j, e);
            }
        }
        Ok(m)
    }

    pub fn try_add(&self, o: &Matrix) -> Result<Matrix> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::SizeMismatch("matrix sum".into()));
        }
        let mut m = self.clone();
        for (a, b) in m.entries.iter_mut().zip(&o.entries) {
            a.add_assign(b)?;
        }
        Ok(m)
    }

    pub fn try_sub(&self, o: &Matrix) -> Result<Matrix> {
        self.try_add(&o.scale(&Scalar::int(-1)))
    }

    pub fn mul(&self, o: &Matrix) -> Result<Matrix> {
        self.mul_truncated(o, usize::MAX)
    }

    pub fn mul_truncated(&self, o: &Matrix, max_len: usize) -> Result<Matrix> {
        if self.cols != o.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{} (or inner objects differ)",
                self.nrows(),
                self.ncols(),
                o.nrows(),
                o.ncols()
            )));
        }
        let mut m = Matrix::zero(self.rows.clone(), o.cols.clone());
        for i in 0..self.nrows() {
            for j in 0..o.ncols() {
                let mut acc = Element::zero(self.rows[i], o.cols[j]);
                for k in 0..self.ncols() {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.add_assign(&a.concat_truncated(b, max_len)?)?;
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// `self^k` for a square matrix; `k = 0` gives the identity.
    pub fn pow(&self, k: usize) -> Result<Matrix> {
        self.pow_truncated(k, usize::MAX)
    }

    pub fn pow_truncated(&self, k: usize, max_len: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows.clone());
        for _ in 0..k {
            acc = acc.mul_truncated(self, max_len)?;
        }
        Ok(acc)
    }

    /// Diagonal sum of a square matrix (a based loop element per object).
    pub fn diagonal(&self) -> Result<Vec<Element>> {
        if !self.is_square() {
            return Err(Error::SizeMismatch("trace of a non-square matrix".into()));
        }
        Ok((0..self.nrows()).map(|i| self.get(i, i).clone()).collect())
    }
}
