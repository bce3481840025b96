//! Characters, tensor products and Clebsch-Gordan coefficients.

use crate::algebra::{Element, HopfAlgebraSpec, Kind, Side};
use crate::corep::{morphism_space, Corepresentation, IrrepTable};
use crate::error::{Error, Result};
use crate::haar::HaarFunctional;
use crate::linalg::{self, c, fix_phase, max_abs, max_abs_diff, CMat, CVec, C64};
use crate::regular::{check_basis_functions, BasisFunctionSet};
use crate::report::Report;

/// Distance from the nearest integer tolerated for multiplicities.
pub const INTEGER_TOL: f64 = 1e-8;

/// `(h(χa* χb), h(χb χa*))`.
pub fn character_inner(spec: &HopfAlgebraSpec, haar: &HaarFunctional, chi_a: &Element, chi_b: &Element) -> (C64, C64) {
    let sa = spec.star(chi_a);
    (haar.eval(&spec.multiply(&sa, chi_b)), haar.eval(&spec.multiply(chi_b, &sa)))
}

/// Multiplicity `h(χ^V χ^p*)` rounded to an integer.
pub fn multiplicity_in(spec: &HopfAlgebraSpec, haar: &HaarFunctional, chi_v: &Element, chi_p: &Element) -> Result<usize> {
    let v = haar.eval(&spec.multiply(chi_v, &spec.star(chi_p)));
    let r = v.re.round();
    if (v - c(r, 0.0)).norm() > INTEGER_TOL || r < 0.0 {
        return Err(Error::NonIntegerMultiplicity(v.re));
    }
    Ok(r as usize)
}

/// Characters of a table are orthonormal in both orders.
pub fn verify_character_orthogonality(spec: &HopfAlgebraSpec, haar: &HaarFunctional, table: &IrrepTable, tol: f64) -> Report {
    let mut r: f64 = 0.0;
    for (i, p) in table.irreps.iter().enumerate() {
        for (j, q) in table.irreps.iter().enumerate() {
            let (a, b) = character_inner(spec, haar, &p.character(), &q.character());
            let want = if i == j { 1.0 } else { 0.0 };
            r = r.max((a - c(want, 0.0)).norm()).max((b - c(want, 0.0)).norm());
        }
    }
    let mut rep = Report::new("character orthogonality");
    rep.push("orthonormal", r, tol);
    rep
}

/// `(π^V ⊠ π^W)_{(s,t),(j,k)} = π^V_sj π^W_tk` (ordinary) or
/// `π^W_tk π^V_sj` (twisted); pairs are ordered `j * d_W + k`.
pub fn tensor_product(spec: &HopfAlgebraSpec, v: &Corepresentation, w: &Corepresentation, kind: Kind) -> Corepresentation {
    let (dv, dw) = (v.dim(), w.dim());
    let d = dv * dw;
    let mut entries = Vec::with_capacity(d * d);
    let ve: Vec<Element> = (0..dv * dv).map(|i| v.entry(i / dv, i % dv)).collect();
    let we: Vec<Element> = (0..dw * dw).map(|i| w.entry(i / dw, i % dw)).collect();
    for row in 0..d {
        let (s, t) = (row / dw, row % dw);
        for col in 0..d {
            let (j, k) = (col / dw, col % dw);
            let x = &ve[s * dv + j];
            let y = &we[t * dw + k];
            entries.push(match kind {
                Kind::Ordinary => spec.multiply(x, y),
                Kind::Twisted => spec.multiply(y, x),
            });
        }
    }
    let sym = match kind {
        Kind::Ordinary => "⊠",
        Kind::Twisted => "⊠~",
    };
    Corepresentation::from_entries(format!("{}{sym}{}", v.label, w.label), d, spec.dim(), &entries).expect("consistent shapes")
}

/// `n[p][q][r] = h(χ^p χ^q χ^r*)`.
pub fn fusion_table(spec: &HopfAlgebraSpec, haar: &HaarFunctional, table: &IrrepTable) -> Result<Vec<Vec<Vec<usize>>>> {
    let chis: Vec<Element> = table.irreps.iter().map(|p| p.character()).collect();
    let k = chis.len();
    let mut out = vec![vec![vec![0; k]; k]; k];
    for p in 0..k {
        for q in 0..k {
            let pq = spec.multiply(&chis[p], &chis[q]);
            for r in 0..k {
                out[p][q][r] = multiplicity_in(spec, haar, &pq, &chis[r])?;
            }
        }
    }
    Ok(out)
}

/// Index of the irrep equivalent to the conjugate of `p`.
pub fn conjugate_index(spec: &HopfAlgebraSpec, table: &IrrepTable, p: usize) -> Option<usize> {
    table.index_of_character(&spec.star(&table.get(p).character()), 1e-8)
}

/// `n_pq^r = n_{p̄r}^q` and `n_{rp̄}^q = n_qp^r`.
pub fn conjugate_multiplicity_symmetries(spec: &HopfAlgebraSpec, haar: &HaarFunctional, table: &IrrepTable) -> Result<Report> {
    let n = fusion_table(spec, haar, table)?;
    let k = table.len();
    let mut bad = 0usize;
    for p in 0..k {
        let pb = conjugate_index(spec, table, p).ok_or_else(|| Error::UnknownLabel(format!("conjugate of {}", table.get(p).label)))?;
        for q in 0..k {
            for r in 0..k {
                if n[p][q][r] != n[pb][r][q] || n[r][pb][q] != n[q][p][r] {
                    bad += 1;
                }
            }
        }
    }
    let mut rep = Report::new("conjugate multiplicity symmetries");
    rep.push("violations", bad as f64, 0.0);
    Ok(rep)
}

/// Columns of one irrep `r` inside a CG matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CgBlock {
    pub r: usize,
    pub multiplicity: usize,
    pub offset: usize,
}

/// Unitary change of basis from `π^p ⊠ π^q` to `⊕ n_pq^r π^r`.
/// Rows are pairs `(j,k) -> j*d_q + k`, columns `(r, α, ℓ)`.
#[derive(Clone, Debug)]
pub struct CgSystem {
    pub p: usize,
    pub q: usize,
    pub dp: usize,
    pub dq: usize,
    pub blocks: Vec<CgBlock>,
    pub c: CMat,
    pub cinv: CMat,
}

impl CgSystem {
    pub fn block(&self, r: usize) -> Option<&CgBlock> {
        self.blocks.iter().find(|b| b.r == r)
    }

    pub fn multiplicity(&self, r: usize) -> usize {
        self.block(r).map(|b| b.multiplicity).unwrap_or(0)
    }

    pub fn pair(&self, j: usize, k: usize) -> usize {
        j * self.dq + k
    }

    /// Column of `(r, α, ℓ)`.
    pub fn col(&self, b: &CgBlock, dr: usize, alpha: usize, l: usize) -> usize {
        b.offset + alpha * dr + l
    }

    /// Multiplies the columns of copy `α` of `r` by `z` (and the rows of
    /// the inverse by `1/z`).
    pub fn rephased(&self, table: &IrrepTable, r: usize, alpha: usize, z: C64) -> CgSystem {
        let mut out = self.clone();
        if let Some(b) = self.block(r) {
            let dr = table.get(r).dim();
            for l in 0..dr {
                let col = self.col(b, dr, alpha, l);
                let mut cc = out.c.column_mut(col);
                cc *= z;
                let mut rr = out.cinv.row_mut(col);
                rr *= C64::new(1.0, 0.0) / z;
            }
        }
        out
    }
}

/// Solves the intertwining equations for every irrep of the table.
pub fn solve_cg(spec: &HopfAlgebraSpec, table: &IrrepTable, p: usize, q: usize) -> Result<CgSystem> {
    let pp = table.get(p);
    let qq = table.get(q);
    let t = tensor_product(spec, pp, qq, Kind::Ordinary);
    let d = t.dim();
    let mut cols: Vec<CVec> = Vec::new();
    let mut blocks = Vec::new();
    for (r, pr) in table.irreps.iter().enumerate() {
        let dr = pr.dim();
        let space = morphism_space(pr, &t);
        if space.is_empty() {
            continue;
        }
        blocks.push(CgBlock { r, multiplicity: space.len(), offset: cols.len() });
        for x in space {
            // columns of an isometric intertwiner
            let mut x = x * c((dr as f64).sqrt(), 0.0);
            let mut first: CVec = x.column(0).into_owned();
            let before = first.clone();
            fix_phase(&mut first);
            let idx = before.iter().position(|z| z.norm() > 1e-8).unwrap_or(0);
            if before[idx].norm() > 0.0 {
                x *= first[idx] / before[idx];
            }
            for l in 0..dr {
                cols.push(x.column(l).into_owned());
            }
        }
    }
    if cols.len() != d {
        return Err(Error::MultiplicityMismatch(format!(
            "{} columns for a {}-dimensional product of {} and {}",
            cols.len(),
            d,
            pp.label,
            qq.label
        )));
    }
    let cm = CMat::from_columns(&cols);
    let cinv = linalg::inverse(&cm)?;
    Ok(CgSystem { p, q, dp: pp.dim(), dq: qq.dim(), blocks, c: cm, cinv })
}

/// The direct sum `⊕ n π^r` in the column order of `cg`.
pub fn block_sum(table: &IrrepTable, cg: &CgSystem, n: usize) -> Vec<CMat> {
    let d = cg.c.ncols();
    (0..n)
        .map(|m| {
            let mut out = CMat::zeros(d, d);
            for b in &cg.blocks {
                let pr = table.get(b.r);
                let dr = pr.dim();
                for a in 0..b.multiplicity {
                    let o = b.offset + a * dr;
                    out.view_mut((o, o), (dr, dr)).copy_from(&pr.components()[m]);
                }
            }
            out
        })
        .collect()
}

/// Intertwining residual, block diagonalization, unitarity and
/// multiplicities against characters.
pub fn certify_cg(spec: &HopfAlgebraSpec, haar: &HaarFunctional, table: &IrrepTable, cg: &CgSystem, tol: f64) -> Result<Report> {
    let t = tensor_product(spec, table.get(cg.p), table.get(cg.q), Kind::Ordinary);
    let sum = block_sum(table, cg, spec.dim());
    let (mut inter, mut diag): (f64, f64) = (0.0, 0.0);
    for (m, s) in sum.iter().enumerate() {
        let tm = &t.components()[m];
        inter = inter.max(max_abs_diff(&(tm * &cg.c), &(&cg.c * s)));
        diag = diag.max(max_abs_diff(&(&cg.cinv * tm * &cg.c), s));
    }
    let d = cg.c.nrows();
    let mut rep = Report::new(format!("Clebsch-Gordan {} x {}", table.get(cg.p).label, table.get(cg.q).label));
    rep.push("intertwining", inter, tol);
    rep.push("block_diagonalization", diag, tol);
    rep.push("unitary", max_abs_diff(&(cg.c.adjoint() * &cg.c), &CMat::identity(d, d)), tol);
    rep.push("inverse", max_abs_diff(&(&cg.cinv * &cg.c), &CMat::identity(d, d)), tol);
    let chi = spec.multiply(&table.get(cg.p).character(), &table.get(cg.q).character());
    let mut mism = 0usize;
    for r in 0..table.len() {
        if multiplicity_in(spec, haar, &chi, &table.get(r).character())? != cg.multiplicity(r) {
            mism += 1;
        }
    }
    rep.push("multiplicities_match_characters", mism as f64, 0.0);
    Ok(rep)
}

/// Haar integrals of triple products against CG data, in both orders.
pub fn verify_triple_haar(
    spec: &HopfAlgebraSpec,
    haar: &HaarFunctional,
    table: &IrrepTable,
    cg_pq: &CgSystem,
    cg_qp: &CgSystem,
    r: usize,
    tol: f64,
) -> Result<Report> {
    let (p, q) = (cg_pq.p, cg_pq.q);
    if cg_qp.p != q || cg_qp.q != p {
        return Err(Error::Shape("second CG system must be for the swapped pair".into()));
    }
    let (pp, qq, rr) = (table.get(p), table.get(q), table.get(r));
    let (dp, dq, dr) = (pp.dim(), qq.dim(), rr.dim());
    let f = rr.f_matrix()?;
    let trinv = f.trace_f_inv();
    let pe: Vec<Element> = (0..dp * dp).map(|i| pp.entry(i / dp, i % dp)).collect();
    let qe: Vec<Element> = (0..dq * dq).map(|i| qq.entry(i / dq, i % dq)).collect();
    let rs: Vec<Element> = (0..dr * dr).map(|i| spec.star(&rr.entry(i / dr, i % dr))).collect();
    let predict = |cg: &CgSystem, row_sum: usize, row_inv: usize, u: usize, l: usize| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        if let Some(b) = cg.block(r) {
            for a in 0..b.multiplicity {
                for v in 0..dr {
                    acc += cg.cinv[(cg.col(b, dr, a, l), row_inv)] * cg.c[(row_sum, cg.col(b, dr, a, v))] * f.f_inv[(v, u)];
                }
            }
        }
        acc / trinv
    };
    let (mut r1, mut r2): (f64, f64) = (0.0, 0.0);
    for u in 0..dr {
        for l in 0..dr {
            let x = &rs[u * dr + l];
            for s in 0..dp {
                for j in 0..dp {
                    let xp = spec.multiply(x, &pe[s * dp + j]);
                    for t in 0..dq {
                        for k in 0..dq {
                            let v1 = haar.eval(&spec.multiply(&xp, &qe[t * dq + k]));
                            let w1 = predict(cg_pq, s * dq + t, j * dq + k, u, l);
                            r1 = r1.max((v1 - w1).norm());
                            let xq = spec.multiply(x, &qe[t * dq + k]);
                            let v2 = haar.eval(&spec.multiply(&xq, &pe[s * dp + j]));
                            let w2 = predict(cg_qp, t * dp + s, k * dp + j, u, l);
                            r2 = r2.max((v2 - w2).norm());
                        }
                    }
                }
            }
        }
    }
    let mut rep = Report::new(format!("triple Haar integrals ({}, {}, {})", pp.label, qq.label, rr.label));
    rep.push("order_pq", r1, tol);
    rep.push("order_qp", r2, tol);
    Ok(rep)
}

/// Coupled basis functions `θ^{r,α}_ℓ` for one `(r, α)`.
#[derive(Clone, Debug)]
pub struct CoupledSet {
    pub r: usize,
    pub alpha: usize,
    pub set: BasisFunctionSet,
}

#[derive(Clone, Debug)]
pub struct CoupledBasisFunctions {
    pub sets: Vec<CoupledSet>,
    /// Residual of re-expanding each product `φ_j ψ_k` in the `θ`.
    pub inverse_residual: f64,
    /// The products `φ_j ψ_k` are linearly dependent in `A`.
    pub products_dependent: bool,
}

/// Couples `φ` (for `p`) and `ψ` (for `q`); side R takes the `(p,q)`
/// system, side L the `(q,p)` system.
pub fn coupled_basis_functions(
    spec: &HopfAlgebraSpec,
    table: &IrrepTable,
    phi: &BasisFunctionSet,
    psi: &BasisFunctionSet,
    cg: &CgSystem,
) -> Result<CoupledBasisFunctions> {
    if phi.side != psi.side {
        return Err(Error::SideMismatch("φ and ψ come from different sides".into()));
    }
    let side = phi.side;
    let (dp, dq) = (phi.len(), psi.len());
    let (ep, eq) = match side {
        Side::R => (cg.dp, cg.dq),
        Side::L => (cg.dq, cg.dp),
    };
    if (ep, eq) != (dp, dq) {
        return Err(Error::Shape("CG system does not match the basis-function sets".into()));
    }
    // row index of the pair (j, k) in the CG matrix
    let row = |j: usize, k: usize| match side {
        Side::R => j * dq + k,
        Side::L => k * dp + j,
    };
    let prods: Vec<Element> = (0..dp * dq).map(|i| spec.multiply(&phi.functions[i / dq], &psi.functions[i % dq])).collect();
    let mut sets = Vec::new();
    let mut thetas: Vec<Element> = vec![CVec::zeros(spec.dim()); cg.c.ncols()];
    for b in &cg.blocks {
        let dr = table.get(b.r).dim();
        for a in 0..b.multiplicity {
            let mut functions = Vec::with_capacity(dr);
            for l in 0..dr {
                let col = cg.col(b, dr, a, l);
                let mut th = CVec::zeros(spec.dim());
                for j in 0..dp {
                    for k in 0..dq {
                        th += &prods[j * dq + k] * cg.c[(row(j, k), col)];
                    }
                }
                thetas[col] = th.clone();
                functions.push(th);
            }
            sets.push(CoupledSet { r: b.r, alpha: a, set: BasisFunctionSet { side, corep_label: table.get(b.r).label.clone(), functions } });
        }
    }
    let mut inv: f64 = 0.0;
    for j in 0..dp {
        for k in 0..dq {
            let mut back = CVec::zeros(spec.dim());
            for (col, th) in thetas.iter().enumerate() {
                back += th * cg.cinv[(col, row(j, k))];
            }
            inv = inv.max(max_abs((back - &prods[j * dq + k]).iter()));
        }
    }
    let pm = CMat::from_columns(&prods);
    let dependent = linalg::rank(&pm, 1e-9) < prods.len();
    Ok(CoupledBasisFunctions { sets, inverse_residual: inv, products_dependent: dependent })
}

/// Coupled sets satisfy the basis-function relation for their `π^r`.
pub fn verify_coupled_basis_functions(spec: &HopfAlgebraSpec, table: &IrrepTable, coupled: &CoupledBasisFunctions, tol: f64) -> Report {
    let mut rep = Report::new("coupled basis functions");
    let mut r: f64 = 0.0;
    for s in &coupled.sets {
        r = r.max(check_basis_functions(spec, &s.set, table.get(s.r), tol).max_residual());
    }
    rep.push("coaction_relation", r, tol);
    rep.push("inverse_expansion", coupled.inverse_residual, tol);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{self, Construction};
    use crate::corep::build_irrep_table;
    use crate::haar::solve_haar;
    use crate::regular::canonical_basis_functions;

    fn s3(cons: Construction) -> (HopfAlgebraSpec, HaarFunctional, IrrepTable) {
        let a = builtins::build(&builtins::s3(), cons);
        let h = solve_haar(&a, 1e-12).unwrap();
        let t = build_irrep_table(&a, &h, 2).unwrap();
        (a, h, t)
    }

    #[test]
    fn std_squared_decomposes() {
        let (a, h, t) = s3(Construction::Function);
        let cg = solve_cg(&a, &t, 2, 2).unwrap();
        assert_eq!(cg.blocks.iter().map(|b| (b.r, b.multiplicity)).collect::<Vec<_>>(), vec![(0, 1), (1, 1), (2, 1)]);
        assert!(certify_cg(&a, &h, &t, &cg, 1e-9).unwrap().passed());
    }

    #[test]
    fn all_pairs_certify_and_triple_haar() {
        for cons in [Construction::Function, Construction::Group] {
            let (a, h, t) = s3(cons);
            let k = t.len();
            for p in 0..k {
                for q in 0..k {
                    let pq = solve_cg(&a, &t, p, q).unwrap();
                    let qp = solve_cg(&a, &t, q, p).unwrap();
                    assert!(certify_cg(&a, &h, &t, &pq, 1e-9).unwrap().passed());
                    for r in 0..k {
                        let rep = verify_triple_haar(&a, &h, &t, &pq, &qp, r, 1e-9).unwrap();
                        assert!(rep.passed(), "{p} {q} {r}: {rep:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn characters_and_fusion() {
        let (a, h, t) = s3(Construction::Function);
        assert!(verify_character_orthogonality(&a, &h, &t, 1e-10).passed());
        let n = fusion_table(&a, &h, &t).unwrap();
        assert_eq!(n[2][2], vec![1, 1, 1]);
        assert_eq!(n[1][2], vec![0, 0, 1]);
        assert!(conjugate_multiplicity_symmetries(&a, &h, &t).unwrap().passed());
        let (g, hg, tg) = s3(Construction::Group);
        assert!(conjugate_multiplicity_symmetries(&g, &hg, &tg).unwrap().passed());
    }

    #[test]
    fn non_integer_multiplicity_rejected() {
        let (a, h, t) = s3(Construction::Function);
        let half = t.get(2).character() * c(0.5, 0.0);
        assert!(matches!(multiplicity_in(&a, &h, &half, &t.get(2).character()), Err(Error::NonIntegerMultiplicity(_))));
    }

    #[test]
    fn coupled_sets() {
        let (a, _, t) = s3(Construction::Function);
        let p = t.get(2);
        for side in Side::ALL {
            let phi = canonical_basis_functions(&a, p, side, 0).unwrap();
            let psi = canonical_basis_functions(&a, p, side, 1).unwrap();
            let cg = solve_cg(&a, &t, 2, 2).unwrap();
            let cb = coupled_basis_functions(&a, &t, &phi, &psi, &cg).unwrap();
            let rep = verify_coupled_basis_functions(&a, &t, &cb, 1e-10);
            assert!(rep.passed(), "{side}: {rep:?}");
        }
    }

    #[test]
    fn cg_phase_is_fixed() {
        let (a, _, t) = s3(Construction::Function);
        let cg = solve_cg(&a, &t, 2, 2).unwrap();
        for b in &cg.blocks {
            let col = cg.c.column(b.offset);
            let z = col.iter().find(|z| z.norm() > 1e-8).unwrap();
            assert!(z.im.abs() < 1e-12 && z.re > 0.0);
        }
    }
}
