//! Trace Hamiltonians of a torus network, the Lax equation `{tr B(λ)^k, B(μ)} = MB − BM`
//! and involutivity of the traces.

use std::collections::BTreeMap;

use crate::algebra::{cyclic_reduce, CyclicElement, CyclicWord, Element, Matrix};
use crate::bracket::{h0_bracket, BracketParams, GeneratorTable};
use crate::error::{Error, Result};
use crate::io::{serialize_cyclic, serialize_element};
use crate::network::TorusContext;
use crate::report::Defect;
use crate::rmatrix::{trig_rho, RhoMatrix};
use crate::scalar::{Scalar, Var};

/// `H_kj`, the coefficient of `λ^j` in `tr B(λ)^k`.
pub type HamiltonianSet = BTreeMap<(usize, i64), CyclicElement>;

/// Generator brackets of the underlying cylinder; seam points contribute nothing.
pub fn torus_table(ctx: &TorusContext) -> Result<GeneratorTable> {
    GeneratorTable::from_network(&ctx.net, &BracketParams::standard())
}

fn trace(m: &Matrix) -> Result<CyclicElement> {
    let mut out = CyclicElement::zero();
    for d in m.diagonal()? {
        if d.is_zero() {
            continue;
        }
        out.add_assign(&cyclic_reduce(&d)?);
    }
    Ok(out)
}

/// `tr B(λ)^k` as a cyclic element; `k = 0` gives one identity loop per point.
pub fn trace_power(ctx: &TorusContext, k: usize) -> Result<CyclicElement> {
    trace(&ctx.b.pow(k)?)
}

/// Splits a cyclic element by powers of λ.
pub fn split_lambda(x: &CyclicElement) -> Result<BTreeMap<i64, CyclicElement>> {
    let mut out: BTreeMap<i64, CyclicElement> = BTreeMap::new();
    for (w, c) in x.terms() {
        let terms = c
            .laurent_terms()
            .ok_or_else(|| Error::Inconsistent(format!("trace coefficient {c} is not a Laurent polynomial")))?;
        for (mut e, p, q) in terms {
            let j = e[Var::Lambda as usize];
            e[Var::Lambda as usize] = 0;
            out.entry(j).or_insert_with(CyclicElement::zero).add_term(w.clone(), Scalar::from_laurent_monomial(e, p, q));
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// All `H_kj` for `k ≤ max_k`.
pub fn hamiltonians(ctx: &TorusContext, max_k: usize) -> Result<HamiltonianSet> {
    let mut out = HamiltonianSet::new();
    for k in 0..=max_k {
        for (j, h) in split_lambda(&trace_power(ctx, k)?)? {
            out.insert((k, j), h);
        }
    }
    Ok(out)
}

/// `M(λ,μ;k)_{b1b2} = k ρ_{b2b1}(λ,μ) (B(λ)^k)_{b1b2}`.
pub fn lax_m(ctx: &TorusContext, rho: &RhoMatrix, k: usize) -> Result<Matrix> {
    if k == 0 {
        return Err(Error::Argument("the Lax matrix needs k ≥ 1".into()));
    }
    if rho.size() != ctx.b.nrows() {
        return Err(Error::SizeMismatch(format!("ρ of size {} on {} points", rho.size(), ctx.b.nrows())));
    }
    let bk = ctx.b.pow(k)?;
    let kk = Scalar::int(k as i64);
    Ok(Matrix::from_fn(bk.rows().to_vec(), bk.cols().to_vec(), |b1, b2| {
        bk.get(b1, b2).scale(&kk.mul_ref(&rho.get_at(b2, b1, Var::Lambda, Var::Mu)))
    }))
}

/// `Σ_i {(X)_ii, g}` for a square matrix `X` of loops.
fn trace_bracket(table: &GeneratorTable, diag: &[Element], g: &Element) -> Result<Element> {
    let mut out = Element::zero(g.src(), g.dst());
    for h in diag {
        out.add_assign(&h0_bracket(table, h, g)?)?;
    }
    Ok(out)
}

/// `[M, Y] = MY − YM`.
fn commutator(m: &Matrix, y: &Matrix) -> Result<Matrix> {
    m.mul(y)?.try_sub(&y.mul(m)?)
}

/// `({tr B(λ)^k, B(μ)}, M B(μ) − B(μ) M)` entrywise.
pub fn lax_sides(ctx: &TorusContext, table: &GeneratorTable, rho: &RhoMatrix, k: usize) -> Result<(Matrix, Matrix)> {
    let diag = ctx.b.pow(k)?.diagonal()?;
    let bmu = ctx.b.substitute(Var::Lambda, Var::Mu);
    let mut lhs = Matrix::zero(bmu.rows().to_vec(), bmu.cols().to_vec());
    for a in 0..bmu.nrows() {
        for b in 0..bmu.ncols() {
            lhs.set(a, b, trace_bracket(table, &diag, bmu.get(a, b))?);
        }
    }
    let rhs = commutator(&lax_m(ctx, rho, k)?, &bmu)?;
    Ok((lhs, rhs))
}

fn matrix_defects(ctx: &TorusContext, what: &str, expected: &Matrix, actual: &Matrix) -> Vec<Defect> {
    let mut out = Vec::new();
    for a in 0..expected.nrows() {
        for b in 0..expected.ncols() {
            let (e, x) = (expected.get(a, b), actual.get(a, b));
            if e != x {
                out.push(Defect::new(
                    format!("{what} ({},{})", a + 1, b + 1),
                    serialize_element(e, &ctx.net),
                    serialize_element(x, &ctx.net),
                ));
            }
        }
    }
    out
}

/// The Lax equation with an explicit `ρ`.
pub fn verify_lax_with(ctx: &TorusContext, rho: &RhoMatrix, k: usize) -> Result<Vec<Defect>> {
    let table = torus_table(ctx)?;
    let (lhs, rhs) = lax_sides(ctx, &table, rho, k)?;
    Ok(matrix_defects(ctx, &format!("lax k={k} entry"), &rhs, &lhs))
}

/// The Lax equation with the trigonometric `ρ`.
pub fn verify_lax(ctx: &TorusContext, k: usize) -> Result<Vec<Defect>> {
    verify_lax_with(ctx, &trig_rho(ctx.b.nrows())?, k)
}

/// Outcome of an involutivity check.
#[derive(Clone, Debug, Default)]
pub struct Involutivity {
    pub defects: Vec<Defect>,
    /// Whether some `{tr B(λ)^k, (B(μ)^ℓ)_bb}` was nonzero before cyclic reduction.
    pub nonvacuous: bool,
}

/// `⟨tr B(λ)^k, tr B(μ)^ℓ⟩ = 0`, together with `{tr B(λ)^k, B(μ)^ℓ} = [M, B(μ)^ℓ]` on the diagonal.
pub fn verify_involutivity(ctx: &TorusContext, k: usize, l: usize) -> Result<Involutivity> {
    if k == 0 || l == 0 {
        // Identity loops bracket to zero.
        return Ok(Involutivity::default());
    }
    let table = torus_table(ctx)?;
    let diag = ctx.b.pow(k)?.diagonal()?;
    let bl = ctx.b.substitute(Var::Lambda, Var::Mu).pow(l)?;
    let expected = commutator(&lax_m(ctx, &trig_rho(ctx.b.nrows())?, k)?, &bl)?;
    let mut report = Involutivity::default();
    let mut total = CyclicElement::zero();
    for b in 0..bl.nrows() {
        let mid = trace_bracket(&table, &diag, bl.get(b, b))?;
        if mid != *expected.get(b, b) {
            report.defects.push(Defect::new(
                format!("involution k={k} l={l} diagonal ({},{})", b + 1, b + 1),
                serialize_element(expected.get(b, b), &ctx.net),
                serialize_element(&mid, &ctx.net),
            ));
        }
        report.nonvacuous |= !mid.is_zero();
        if !mid.is_zero() {
            total.add_assign(&cyclic_reduce(&mid)?);
        }
    }
    if !total.is_zero() {
        report.defects.push(Defect::new(format!("involution k={k} l={l}"), "0", serialize_cyclic(&total, &ctx.net)));
    }
    Ok(report)
}

/// `⟨H_kj, H_lm⟩` for two λ-free cyclic elements of the torus.
pub fn hamiltonian_bracket(table: &GeneratorTable, x: &CyclicElement, y: &CyclicElement) -> Result<CyclicElement> {
    crate::bracket::lie_bracket(table, x, y)
}

/// Identity loop class at every point, the value of `tr B^0`.
pub fn identity_classes(ctx: &TorusContext) -> CyclicElement {
    let mut out = CyclicElement::zero();
    for o in &ctx.objects {
        out.add_term(CyclicWord::new(&[], *o), Scalar::one());
    }
    out
}
