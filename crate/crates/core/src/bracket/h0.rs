//! Brackets induced on loops: `{h, g} = μ ∘ ⟪h, g⟫` and its cyclic reduction.

use super::generators::GeneratorTable;
use super::leibniz::db_truncated;
use crate::algebra::{cyclic_reduce, CyclicElement, Element, ObjectId};
use crate::error::{Error, Result};

/// `{h, g}`; `h` must be a loop.
pub fn h0_bracket(table: &GeneratorTable, h: &Element, g: &Element) -> Result<Element> {
    h0_bracket_truncated(table, h, g, None)
}

pub fn h0_bracket_truncated(table: &GeneratorTable, h: &Element, g: &Element, max_len: Option<usize>) -> Result<Element> {
    if !h.is_zero() && !h.is_loop() {
        return Err(Error::NotALoop("first argument of the H0 bracket".into()));
    }
    db_truncated(table, h, g, max_len).multiply()
}

/// `{x, g}` for a cyclic class `x`, using any based representatives.
pub fn h0_bracket_cyclic(table: &GeneratorTable, x: &CyclicElement, g: &Element, max_len: Option<usize>) -> Result<Element> {
    let mut out = Element::zero(g.src(), g.dst());
    for h in x.representatives(|_| ObjectId(0)) {
        out.add_assign(&h0_bracket_truncated(table, &h, g, max_len)?)?;
    }
    Ok(out)
}

/// `⟨x, y⟩`, the cyclic reduction of `{x, y}`.
pub fn lie_bracket(table: &GeneratorTable, x: &CyclicElement, y: &CyclicElement) -> Result<CyclicElement> {
    let mut out = CyclicElement::zero();
    for g in y.representatives(|_| ObjectId(0)) {
        out.add_assign(&cyclic_reduce(&h0_bracket_cyclic(table, x, &g, None)?)?);
    }
    Ok(out)
}
