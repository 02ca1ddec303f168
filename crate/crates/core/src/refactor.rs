//! Refactorization dynamics on free generators `X_ij`, with `B = 1 + X` and every
//! element truncated at word length `D`.

use crate::algebra::{cyclic_reduce, CyclicElement, Element, Gen, Matrix, ObjectId};
use crate::bracket::{h0_bracket_cyclic, GeneratorTable};
use crate::error::{Error, Result};
use crate::io::{serialize_cyclic, serialize_element, NameTable};
use crate::report::Defect;
use crate::rmatrix::{disk_r, disk_rho, twisted_commutator_pair, RhoMatrix};
use crate::scalar::{Scalar, Var};

/// `N × N` free generators `X_ij : o_i → o_j` and the truncation degree.
#[derive(Clone, Debug)]
pub struct FreeMatrixContext {
    pub n: usize,
    pub degree: usize,
}

impl FreeMatrixContext {
    pub fn new(n: usize, degree: usize) -> Result<FreeMatrixContext> {
        if n == 0 {
            return Err(Error::Argument("matrix size must be at least 1".into()));
        }
        Ok(FreeMatrixContext { n, degree })
    }

    pub fn gen(&self, i: usize, j: usize) -> Gen {
        Gen((i * self.n + j) as u32)
    }

    pub fn objects(&self) -> Vec<ObjectId> {
        (0..self.n as u32).map(ObjectId).collect()
    }

    pub fn x(&self) -> Matrix {
        Matrix::from_fn(self.objects(), self.objects(), |i, j| {
            Element::generator(ObjectId(i as u32), ObjectId(j as u32), self.gen(i, j))
        })
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.objects())
    }

    /// `B = 1 + X`.
    pub fn b(&self) -> Matrix {
        self.identity().try_add(&self.x()).expect("same shape")
    }

    /// `X11, X12, ...` and `o1, o2, ...`.
    pub fn labels(&self) -> NameTable {
        let mut t = NameTable::default();
        for i in 0..self.n {
            for j in 0..self.n {
                t.gens.push(format!("X{}{}", i + 1, j + 1));
            }
            t.objects.push(format!("o{}", i + 1));
        }
        t
    }

    fn mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        a.mul_truncated(b, self.degree)
    }
}

/// `⟪X_a1a3, X_b1b3⟫ = ⟪B_a1a3, B_b1b3⟫`, the twisted commutator with the disk r-matrix on `1 + X`.
pub fn db_generators(ctx: &FreeMatrixContext) -> Result<GeneratorTable> {
    let r = disk_r(ctx.n)?;
    let b = ctx.b();
    let cells = twisted_commutator_pair(&r, &r, &b, &b, Var::Lambda, Var::Mu)?;
    let mut table = GeneratorTable::new();
    for ((a1, a3, b1, b3), cell) in cells.cells() {
        let wt = cell.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
        table.add(ctx.gen(a1, a3), ctx.gen(b1, b3), &wt);
    }
    Ok(table)
}

fn scaled_sum(ctx: &FreeMatrixContext, terms: impl IntoIterator<Item = (Scalar, Matrix)>) -> Result<Matrix> {
    let mut acc = Matrix::zero(ctx.objects(), ctx.objects());
    for (k, m) in terms {
        acc = acc.try_add(&m.scale(&k))?;
    }
    Ok(acc)
}

/// Powers `X^1..X^D`, truncated.
fn x_powers(ctx: &FreeMatrixContext) -> Result<Vec<Matrix>> {
    let x = ctx.x();
    let mut out = Vec::new();
    let mut p = x.clone();
    for _ in 0..ctx.degree {
        out.push(p.clone());
        p = ctx.mul(&p, &x)?;
    }
    Ok(out)
}

/// `log B = Σ_{k=1}^D (−1)^{k+1}/k X^k`.
pub fn log_b(ctx: &FreeMatrixContext) -> Result<Matrix> {
    let pw = x_powers(ctx)?;
    scaled_sum(
        ctx,
        pw.into_iter().enumerate().map(|(i, m)| {
            let k = i as i64 + 1;
            (Scalar::ratio(if k % 2 == 1 { 1 } else { -1 }, k), m)
        }),
    )
}

fn trace(m: &Matrix) -> Result<CyclicElement> {
    let mut out = CyclicElement::zero();
    for d in m.diagonal()? {
        if !d.is_zero() {
            out.add_assign(&cyclic_reduce(&d)?);
        }
    }
    Ok(out)
}

/// `c_k = 1 + 1/2 + ... + 1/k`.
pub fn harmonic(k: usize) -> Scalar {
    (1..=k as i64).fold(Scalar::zero(), |s, j| &s + &Scalar::ratio(1, j))
}

/// `½ tr (log B)²`, truncated.
pub fn hamiltonian_square(ctx: &FreeMatrixContext) -> Result<CyclicElement> {
    let l = log_b(ctx)?;
    Ok(trace(&ctx.mul(&l, &l)?)?.scale(&Scalar::ratio(1, 2)))
}

/// `Σ_k (−1)^{k+1} c_k/(k+1) tr X^{k+1}`, truncated.
pub fn hamiltonian_series(ctx: &FreeMatrixContext) -> Result<CyclicElement> {
    let pw = x_powers(ctx)?;
    let mut out = CyclicElement::zero();
    for k in 1..ctx.degree {
        let sign = if k % 2 == 1 { Scalar::one() } else { Scalar::int(-1) };
        let c = &(&sign * &harmonic(k)) / &Scalar::int(k as i64 + 1);
        out.add_assign(&trace(&pw[k])?.scale(&c));
    }
    Ok(out)
}

/// `H = ½ tr (log B)²`, computed in both forms, which must agree.
pub fn hamiltonian(ctx: &FreeMatrixContext) -> Result<CyclicElement> {
    let (a, b) = (hamiltonian_square(ctx)?, hamiltonian_series(ctx)?);
    if a != b {
        let labels = ctx.labels();
        return Err(Error::Inconsistent(format!(
            "hamiltonian forms differ: {} against {}",
            serialize_cyclic(&a, &labels),
            serialize_cyclic(&b, &labels)
        )));
    }
    Ok(a)
}

/// `M̃_{b1b2} = ρ_{b2b1} (log B)_{b1b2}` with the disk `ρ`.
pub fn m_tilde(ctx: &FreeMatrixContext) -> Result<Matrix> {
    m_tilde_with(ctx, &disk_rho(ctx.n)?)
}

pub fn m_tilde_with(ctx: &FreeMatrixContext, rho: &RhoMatrix) -> Result<Matrix> {
    let l = log_b(ctx)?;
    Ok(Matrix::from_fn(ctx.objects(), ctx.objects(), |b1, b2| l.get(b1, b2).scale(rho.get(b2, b1))))
}

/// `M_ij = (log B)_ij` above the diagonal, `−(log B)_ij` below, zero on it.
pub fn m_corollary(ctx: &FreeMatrixContext) -> Result<Matrix> {
    let l = log_b(ctx)?;
    Ok(Matrix::from_fn(ctx.objects(), ctx.objects(), |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Less => l.get(i, j).clone(),
        std::cmp::Ordering::Equal => Element::zero(ObjectId(i as u32), ObjectId(j as u32)),
        std::cmp::Ordering::Greater => l.get(i, j).neg(),
    }))
}

/// `{H, Y_ij}` entrywise, keeping words up to the truncation degree.
pub fn hamiltonian_flow(ctx: &FreeMatrixContext, table: &GeneratorTable, h: &CyclicElement, y: &Matrix) -> Result<Matrix> {
    let mut out = Matrix::zero(y.rows().to_vec(), y.cols().to_vec());
    for i in 0..y.nrows() {
        for j in 0..y.ncols() {
            out.set(i, j, h0_bracket_cyclic(table, h, y.get(i, j), Some(ctx.degree))?);
        }
    }
    Ok(out)
}

/// `[M, Y]`, truncated.
pub fn commutator(ctx: &FreeMatrixContext, m: &Matrix, y: &Matrix) -> Result<Matrix> {
    ctx.mul(m, y)?.try_sub(&ctx.mul(y, m)?)
}

fn matrix_defects(labels: &NameTable, what: &str, expected: &Matrix, actual: &Matrix, upto: usize) -> Vec<Defect> {
    let mut out = Vec::new();
    for i in 0..expected.nrows() {
        for j in 0..expected.ncols() {
            let (e, a) = (expected.get(i, j).truncate(upto), actual.get(i, j).truncate(upto));
            if e != a {
                out.push(Defect::new(
                    format!("{what} ({},{}) to degree {upto}", i + 1, j + 1),
                    serialize_element(&e, labels),
                    serialize_element(&a, labels),
                ));
            }
        }
    }
    out
}

/// `{H, B}` and `M̃`, with the defects of `{H, B} = M̃B − BM̃` through degree `D − 2`.
pub fn flow_rhs(ctx: &FreeMatrixContext) -> Result<(Matrix, Matrix, Vec<Defect>)> {
    flow_rhs_with(ctx, &m_tilde(ctx)?, ctx.degree.saturating_sub(2))
}

/// [`flow_rhs`] against an arbitrary candidate `M`, compared through degree `upto`.
pub fn flow_rhs_with(ctx: &FreeMatrixContext, m: &Matrix, upto: usize) -> Result<(Matrix, Matrix, Vec<Defect>)> {
    if ctx.degree < 2 {
        return Err(Error::Argument("the flow needs degree at least 2".into()));
    }
    let table = db_generators(ctx)?;
    let h = hamiltonian(ctx)?;
    let b = ctx.b();
    let lhs = hamiltonian_flow(ctx, &table, &h, &b)?;
    let rhs = commutator(ctx, m, &b)?;
    let d = matrix_defects(&ctx.labels(), "{H,B}", &rhs, &lhs, upto);
    Ok((lhs, m.clone(), d))
}

/// `G(t) = Σ_{k=0}^D t^k (log B)^k / k!`, truncated.
pub fn exp_tlog(ctx: &FreeMatrixContext) -> Result<Matrix> {
    let l = log_b(ctx)?;
    let mut term = ctx.identity();
    let mut acc = ctx.identity();
    for k in 1..=ctx.degree {
        term = ctx.mul(&term, &l)?;
        let c = &Scalar::var_pow(Var::T, k as i32) / &Scalar::int((1..=k as i64).product());
        acc = acc.try_add(&term.scale(&c))?;
    }
    Ok(acc)
}

/// Entries strictly above the diagonal.
pub fn strict_upper(m: &Matrix) -> Matrix {
    Matrix::from_fn(m.rows().to_vec(), m.cols().to_vec(), |i, j| {
        if i < j {
            m.get(i, j).clone()
        } else {
            Element::zero(m.rows()[i], m.cols()[j])
        }
    })
}

/// `Σ_{k=0}^D (1 − g)^k`, the inverse of `g = 1 + (positive degree)`.
pub fn series_inverse(ctx: &FreeMatrixContext, g: &Matrix) -> Result<Matrix> {
    let one = ctx.identity();
    let y = one.try_sub(g)?;
    let mut term = one.clone();
    let mut acc = one;
    for _ in 0..ctx.degree {
        term = ctx.mul(&term, &y)?;
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// `g_+ G = g_−` with `g_+` unitriangular upper and `g_−` lower triangular.
pub fn gauss_factor(ctx: &FreeMatrixContext, g: &Matrix) -> Result<(Matrix, Matrix)> {
    let one = ctx.identity();
    let h = g.try_sub(&one)?;
    for i in 0..ctx.n {
        for j in 0..ctx.n {
            if !h.get(i, j).homogeneous(0).is_zero() {
                return Err(Error::Argument(format!("degree-0 part of G differs from 1 at ({},{})", i + 1, j + 1)));
            }
        }
    }
    // Each pass fixes one more degree of U.
    let mut u = Matrix::zero(ctx.objects(), ctx.objects());
    for _ in 0..ctx.degree {
        let next = strict_upper(&h.try_add(&ctx.mul(&u, &h)?)?).scale(&Scalar::int(-1));
        if next == u {
            break;
        }
        u = next;
    }
    let g_plus = one.try_add(&u)?;
    let g_minus = ctx.mul(&g_plus, g)?;
    let above = strict_upper(&g_minus);
    if !above.is_zero() {
        return Err(Error::Inconsistent("g_+ G is not lower triangular".into()));
    }
    Ok((g_plus, g_minus))
}

/// Results of the refactorization checks; each list holds defects.
#[derive(Clone, Debug, Default)]
pub struct FlowReport {
    /// `d/dt B_t = {H, B_t}` through degree `D − 2`.
    pub flow: Vec<Defect>,
    /// `g_+ B g_+^{-1} = g_− B g_−^{-1}` through degree `D`.
    pub factorization: Vec<Defect>,
    /// `tr B_t^k = tr B^k` through degree `D`, `k ≤ 3`.
    pub traces: Vec<Defect>,
}

impl FlowReport {
    pub fn all(&self) -> Vec<Defect> {
        self.flow.iter().chain(&self.factorization).chain(&self.traces).cloned().collect()
    }
}

/// `B_t = g_+ B g_+^{-1}` from the factorization of `e^{t log B}`.
pub fn b_t(ctx: &FreeMatrixContext) -> Result<(Matrix, Matrix, Matrix)> {
    let (gp, gm) = gauss_factor(ctx, &exp_tlog(ctx)?)?;
    let b = ctx.b();
    let bt = ctx.mul(&ctx.mul(&gp, &b)?, &series_inverse(ctx, &gp)?)?;
    Ok((bt, gp, gm))
}

pub fn verify_flow(ctx: &FreeMatrixContext) -> Result<FlowReport> {
    if ctx.degree < 3 {
        return Err(Error::Argument("the flow check needs degree at least 3".into()));
    }
    let labels = ctx.labels();
    let d = ctx.degree;
    let (bt, _, gm) = b_t(ctx)?;
    let b = ctx.b();
    let mut report = FlowReport::default();

    let table = db_generators(ctx)?;
    let h = hamiltonian(ctx)?;
    let dt = bt.map(|e| e.map_coeffs(|c| c.derivative(Var::T)));
    let rhs = hamiltonian_flow(ctx, &table, &h, &bt)?;
    report.flow = matrix_defects(&labels, "d/dt B_t", &rhs, &dt, d - 2);

    let bt_minus = ctx.mul(&ctx.mul(&gm, &b)?, &series_inverse(ctx, &gm)?)?;
    report.factorization = matrix_defects(&labels, "g_- B g_-^-1", &bt, &bt_minus, d);

    let (mut p, mut q) = (ctx.identity(), ctx.identity());
    for k in 1..=3 {
        p = ctx.mul(&p, &bt)?;
        q = ctx.mul(&q, &b)?;
        let (tp, tq) = (trace(&p)?, trace(&q)?);
        if tp != tq {
            report.traces.push(Defect::new(
                format!("tr B_t^{k}"),
                serialize_cyclic(&tq, &labels),
                serialize_cyclic(&tp, &labels),
            ));
        }
    }
    Ok(report)
}
