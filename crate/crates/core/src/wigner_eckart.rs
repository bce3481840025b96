//! Inner-product tensors `(ψ^r_ℓ, Q^q_k(φ^p_j))^X` and their factorization
//! into Clebsch–Gordan coefficients and reduced matrix elements.

use serde::Serialize;

use crate::algebra::{Kind, Side};
use crate::cg::CgSystem;
use crate::corep::IrrepTable;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat, CVec, C64, ZERO};
use crate::regular::{BasisFunctionSet, Carrier};
use crate::report::Report;
use crate::tensor_ops::TensorOperatorFamily;

/// `t[ℓ][k][j] = (ψ^r_ℓ, Q_k(φ^p_j))^X`, inner product of the carrier.
pub fn we_tensor(carrier: &Carrier, psi: &BasisFunctionSet, fam: &TensorOperatorFamily, phi: &BasisFunctionSet) -> Result<Vec<CMat>> {
    if psi.side != carrier.side || phi.side != carrier.side || fam.variant.side != carrier.side {
        return Err(Error::SideMismatch("basis functions, family and carrier must share a side".into()));
    }
    let g = &carrier.gram;
    let ys: Vec<CVec> = phi.functions.iter().map(|f| carrier.to_coords(f)).collect();
    let gx: Vec<CVec> = psi.functions.iter().map(|f| g.adjoint() * carrier.to_coords(f)).collect();
    Ok(gx
        .iter()
        .map(|w| CMat::from_fn(fam.len(), phi.len(), |k, j| w.dotc(&(&fam.operators[k] * &ys[j]))))
        .collect())
}

/// Row of the CG matrix holding the pair `(k, j)` (ordinary, `(q,p)`
/// system) or `(j, k)` (twisted, `(p,q)` system).
fn cg_row(cg: &CgSystem, kind: Kind, k: usize, j: usize) -> usize {
    match kind {
        Kind::Ordinary => cg.pair(k, j),
        Kind::Twisted => cg.pair(j, k),
    }
}

fn check_dims(cg: &CgSystem, kind: Kind, dq: usize, dp: usize) -> Result<()> {
    let want = match kind {
        Kind::Ordinary => (dq, dp),
        Kind::Twisted => (dp, dq),
    };
    if (cg.dp, cg.dq) != want {
        return Err(Error::Shape(format!("CG system is {}x{}, expected {}x{}", cg.dp, cg.dq, want.0, want.1)));
    }
    Ok(())
}

/// `(r|Q|p)_α = Σ t[u][t][s] C[(t,s),(r,α,v)] (F^r)^{-1}_vu / tr (F^r)^{-1}`.
pub fn reduced_elements(tensor: &[CMat], kind: Kind, table: &IrrepTable, r: usize, cg: &CgSystem) -> Result<Vec<C64>> {
    let fr = table.get(r).f_matrix()?;
    let tr = fr.trace_f_inv();
    if tr.norm() < 1e-14 {
        return Err(Error::TraceZero);
    }
    let Some(b) = cg.block(r) else { return Ok(Vec::new()) };
    let dr = table.get(r).dim();
    let (dq, dp) = (tensor[0].nrows(), tensor[0].ncols());
    check_dims(cg, kind, dq, dp)?;
    let mut out = Vec::with_capacity(b.multiplicity);
    for alpha in 0..b.multiplicity {
        let mut acc = ZERO;
        for u in 0..dr {
            for v in 0..dr {
                let col = cg.col(b, dr, alpha, v);
                let mut m = ZERO;
                for t in 0..dq {
                    for s in 0..dp {
                        m += tensor[u][(t, s)] * cg.c[(cg_row(cg, kind, t, s), col)];
                    }
                }
                acc += m * fr.f_inv[(v, u)];
            }
        }
        out.push(acc / tr);
    }
    Ok(out)
}

/// `Σ_α Cinv[(r,α,ℓ),(k,j)] red_α`.
pub fn reconstruct(reduced: &[C64], kind: Kind, table: &IrrepTable, r: usize, cg: &CgSystem, dq: usize, dp: usize) -> Vec<CMat> {
    let dr = table.get(r).dim();
    let mut out = vec![CMat::zeros(dq, dp); dr];
    if let Some(b) = cg.block(r) {
        for (alpha, red) in reduced.iter().enumerate() {
            for (l, t) in out.iter_mut().enumerate() {
                let col = cg.col(b, dr, alpha, l);
                for k in 0..dq {
                    for j in 0..dp {
                        t[(k, j)] += cg.cinv[(col, cg_row(cg, kind, k, j))] * red;
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct WeReport {
    pub p: String,
    pub q: String,
    pub r: String,
    pub side: Side,
    pub kind: Kind,
    /// Which CG system was used, `"(q,p)"` or `"(p,q)"`, with its irreps.
    pub cg_order: String,
    /// `[ℓ][k][j]` as `[re, im]`.
    pub tensor: Vec<Vec<Vec<[f64; 2]>>>,
    pub reduced: Vec<[f64; 2]>,
    pub reduced_least_squares: Vec<[f64; 2]>,
    pub reconstruction_residual: f64,
    pub checks: Report,
}

impl WeReport {
    pub fn passed(&self) -> bool {
        self.checks.passed()
    }
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

/// Least-squares reduced elements: fits the tensor to the CG columns.
fn reduced_least_squares(tensor: &[CMat], kind: Kind, table: &IrrepTable, r: usize, cg: &CgSystem) -> Vec<C64> {
    let Some(b) = cg.block(r) else { return Vec::new() };
    let (dq, dp) = (tensor[0].nrows(), tensor[0].ncols());
    let mult = b.multiplicity;
    let flat = |ts: &[CMat]| CVec::from_iterator(ts.len() * dq * dp, ts.iter().flat_map(|t| t.transpose().iter().copied().collect::<Vec<_>>()));
    let cols: Vec<CVec> = (0..mult)
        .map(|a| {
            let mut unit = vec![ZERO; mult];
            unit[a] = C64::new(1.0, 0.0);
            flat(&reconstruct(&unit, kind, table, r, cg, dq, dp))
        })
        .collect();
    let a = CMat::from_columns(&cols);
    let y = flat(tensor);
    let x = linalg::lstsq(&a, &CMat::from_column_slice(y.len(), 1, y.as_slice()));
    x.column(0).iter().copied().collect()
}

/// Tensor, reduced elements and factorization residual for one `(p, q, r)`.
#[allow(clippy::too_many_arguments)]
pub fn verify_wigner_eckart(
    carrier: &Carrier,
    table: &IrrepTable,
    r: usize,
    psi: &BasisFunctionSet,
    fam: &TensorOperatorFamily,
    phi: &BasisFunctionSet,
    cg: &CgSystem,
    tol: f64,
) -> Result<WeReport> {
    let kind = fam.variant.kind;
    let tensor = we_tensor(carrier, psi, fam, phi)?;
    let (dq, dp) = (fam.len(), phi.len());
    if psi.len() != table.get(r).dim() {
        return Err(Error::Shape("ψ does not match π^r".into()));
    }
    check_dims(cg, kind, dq, dp)?;
    let reduced = reduced_elements(&tensor, kind, table, r, cg)?;
    let rebuilt = reconstruct(&reduced, kind, table, r, cg, dq, dp);
    let resid = tensor.iter().zip(&rebuilt).map(|(a, b)| linalg::max_abs_diff(a, b)).fold(0.0, f64::max);
    let lsq = reduced_least_squares(&tensor, kind, table, r, cg);
    let agree = reduced.iter().zip(&lsq).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    let mut checks = Report::new(format!("Wigner-Eckart factorization ({kind}, {} side)", carrier.side));
    checks.push("factorization", resid, tol);
    checks.push("least_squares_agreement", agree, tol);
    if reduced.is_empty() {
        let zero = tensor.iter().flat_map(|t| t.iter()).map(|z| z.norm()).fold(0.0, f64::max);
        checks.push("selection_rule_zero", zero, tol);
    }
    let order = match kind {
        Kind::Ordinary => "(q,p)",
        Kind::Twisted => "(p,q)",
    };
    Ok(WeReport {
        p: phi.corep_label.clone(),
        q: fam.corep_label.clone(),
        r: table.get(r).label.clone(),
        side: carrier.side,
        kind,
        cg_order: format!("{order} = ({}, {})", table.get(cg.p).label, table.get(cg.q).label),
        tensor: tensor.iter().map(|t| (0..dq).map(|k| (0..dp).map(|j| pair(t[(k, j)])).collect()).collect()).collect(),
        reduced: reduced.iter().copied().map(pair).collect(),
        reduced_least_squares: lsq.into_iter().map(pair).collect(),
        reconstruction_residual: resid,
        checks,
    })
}
