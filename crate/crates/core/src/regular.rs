//! Regular coactions of `A` on itself, basis functions, projection
//! operators and the dual-algebra actions.

use crate::algebra::{build_dual, Element, HopfAlgebraSpec, Side, TensorElement};
use crate::corep::{Corepresentation, Flag, IrrepTable};
use crate::error::{Error, Result};
use crate::haar::HaarFunctional;
use crate::linalg::{c, max_abs, max_abs_diff, CMat, CVec, C64, ZERO};
use crate::report::Report;

/// `π^R = Δ`, `π^L = σ ∘ (S ⊗ id) ∘ Δ`.
pub fn regular_coaction(spec: &HopfAlgebraSpec, side: Side, x: &Element) -> TensorElement {
    let d = spec.coproduct(x);
    match side {
        Side::R => d,
        Side::L => (spec.s_op() * d).transpose(),
    }
}

/// Regular coaction as a corepresentation on `A`:
/// `π^X(a_j) = Σ_k a_k ⊗ π_kj`.
pub fn regular_corep(spec: &HopfAlgebraSpec, side: Side) -> Corepresentation {
    let n = spec.dim();
    let imgs: Vec<TensorElement> = (0..n).map(|j| regular_coaction(spec, side, &spec.basis(j))).collect();
    let comps = (0..n).map(|m| CMat::from_fn(n, n, |k, j| imgs[j][(k, m)])).collect();
    Corepresentation::from_components(format!("{side} regular"), comps).expect("square")
}

/// Unitarity of the regular coaction for the matching Gram matrix:
/// `Σ_k G[i][k] S(π_kj) = Σ_k G[k][j] π_ki*`.
pub fn regular_unitarity(spec: &HopfAlgebraSpec, haar: &HaarFunctional, side: Side, tol: f64) -> Report {
    let n = spec.dim();
    let pi = regular_corep(spec, side);
    let g = haar.gram.side(side);
    let mut r: f64 = 0.0;
    let sp: Vec<Element> = (0..n * n).map(|i| spec.antipode(&pi.entry(i / n, i % n))).collect();
    let st: Vec<Element> = (0..n * n).map(|i| spec.star(&pi.entry(i / n, i % n))).collect();
    for i in 0..n {
        for j in 0..n {
            let mut lhs = CVec::zeros(n);
            let mut rhs = CVec::zeros(n);
            for k in 0..n {
                lhs += &sp[k * n + j] * g[(i, k)];
                rhs += &st[k * n + i] * g[(k, j)];
            }
            r = r.max(max_abs((lhs - rhs).iter()));
        }
    }
    let mut rep = Report::new(format!("unitarity of the {side} regular coaction"));
    rep.push("unitary_for_gram", r, tol);
    rep
}

/// A space carrying a regular coaction: `A` itself, or a coideal subalgebra
/// embedded in `A`. Carrier coordinates refer to the columns of `embedding`.
#[derive(Clone, Debug)]
pub struct Carrier {
    pub side: Side,
    /// `n x d`, columns are the carrier basis inside `A`.
    pub embedding: CMat,
    /// `d x n`, left inverse of `embedding` on its image.
    pub coords: CMat,
    /// `π(e_i) = Σ_x e_x ⊗ π_xi`.
    pub coaction: Corepresentation,
    /// Inner product in carrier coordinates.
    pub gram: CMat,
}

impl Carrier {
    pub fn regular(spec: &HopfAlgebraSpec, haar: &HaarFunctional, side: Side) -> Carrier {
        let n = spec.dim();
        Carrier {
            side,
            embedding: CMat::identity(n, n),
            coords: CMat::identity(n, n),
            coaction: regular_corep(spec, side),
            gram: haar.gram.side(side).clone(),
        }
    }

    /// `A` with the coefficient inner product; usable without a Haar functional.
    pub fn bare(spec: &HopfAlgebraSpec, side: Side) -> Carrier {
        let n = spec.dim();
        Carrier {
            side,
            embedding: CMat::identity(n, n),
            coords: CMat::identity(n, n),
            coaction: regular_corep(spec, side),
            gram: CMat::identity(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.embedding.ncols()
    }

    pub fn to_coords(&self, x: &Element) -> CVec {
        &self.coords * x
    }

    pub fn embed(&self, y: &CVec) -> Element {
        &self.embedding * y
    }

    /// Distance of `x` from the carrier subspace.
    pub fn membership_residual(&self, x: &Element) -> f64 {
        max_abs((self.embed(&self.to_coords(x)) - x).iter())
    }

    /// Coaction of a carrier vector as a `d x n` coefficient matrix.
    pub fn coact(&self, y: &CVec) -> CMat {
        let d = self.dim();
        let comps = self.coaction.components();
        CMat::from_fn(d, comps.len(), |x, m| (comps[m].row(x) * y)[(0, 0)])
    }

    /// Operator on the carrier as an operator on `A` (zero off the image).
    pub fn lift_operator(&self, q: &CMat) -> CMat {
        &self.embedding * q * &self.coords
    }
}

/// Functions `ψ_1..ψ_d` with `π^X(ψ_j) = Σ_k ψ_k ⊗ π_kj`.
#[derive(Clone, Debug)]
pub struct BasisFunctionSet {
    pub side: Side,
    pub corep_label: String,
    pub functions: Vec<Element>,
}

impl BasisFunctionSet {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

/// Residual of the defining relation, on the regular comodule of `A`.
pub fn check_basis_functions(spec: &HopfAlgebraSpec, set: &BasisFunctionSet, pi: &Corepresentation, tol: f64) -> Report {
    let mut rep = Report::new(format!("basis functions for {} ({} side)", pi.label, set.side));
    if set.len() != pi.dim() {
        rep.push("length", f64::INFINITY, tol);
        return rep;
    }
    let mut r: f64 = 0.0;
    for j in 0..pi.dim() {
        let lhs = regular_coaction(spec, set.side, &set.functions[j]);
        let mut rhs = CMat::zeros(spec.dim(), spec.dim());
        for k in 0..pi.dim() {
            rhs += HopfAlgebraSpec::outer(&set.functions[k], &pi.entry(k, j));
        }
        r = r.max(max_abs_diff(&lhs, &rhs));
    }
    rep.push("coaction_relation", r, tol);
    rep
}

/// Same relation for a set living in a carrier (membership is checked too).
pub fn check_basis_functions_in(carrier: &Carrier, set: &BasisFunctionSet, pi: &Corepresentation, tol: f64) -> Result<Report> {
    if set.side != carrier.side {
        return Err(Error::SideMismatch(format!("set is {} side, carrier is {} side", set.side, carrier.side)));
    }
    let mut rep = Report::new(format!("basis functions for {} in carrier", pi.label));
    if set.len() != pi.dim() {
        rep.push("length", f64::INFINITY, tol);
        return Ok(rep);
    }
    let ys: Vec<CVec> = set.functions.iter().map(|f| carrier.to_coords(f)).collect();
    let member = set.functions.iter().map(|f| carrier.membership_residual(f)).fold(0.0, f64::max);
    let mut r: f64 = 0.0;
    for j in 0..pi.dim() {
        let lhs = carrier.coact(&ys[j]);
        let mut rhs = CMat::zeros(carrier.dim(), pi.algebra_dim());
        for k in 0..pi.dim() {
            rhs += &ys[k] * pi.entry(k, j).transpose();
        }
        r = r.max(max_abs_diff(&lhs, &rhs));
    }
    rep.push("membership", member, tol);
    rep.push("coaction_relation", r, tol);
    Ok(rep)
}

/// Row `ℓ` of `π` (side R) or `S^{-2}` of the conjugated column `ℓ` (side L).
pub fn canonical_basis_functions(spec: &HopfAlgebraSpec, pi: &Corepresentation, side: Side, row: usize) -> Result<BasisFunctionSet> {
    let d = pi.dim();
    if row >= d {
        return Err(Error::Shape(format!("row {row} out of range for dimension {d}")));
    }
    let functions = match side {
        Side::R => (0..d).map(|j| pi.entry(row, j)).collect(),
        Side::L => {
            if pi.unitary != Flag::Yes {
                return Err(Error::NotUnitary(pi.label.clone()));
            }
            (0..d)
                .map(|j| {
                    let x = spec.star(&pi.entry(j, row));
                    spec.antipode_inv(&spec.antipode_inv(&x))
                })
                .collect()
        }
    };
    Ok(BasisFunctionSet { side, corep_label: pi.label.clone(), functions })
}

/// `[(ψ_k, φ_j)^X]` with rows indexed by `k`.
pub fn basis_function_gram(haar: &HaarFunctional, side: Side, psi: &BasisFunctionSet, phi: &BasisFunctionSet) -> CMat {
    CMat::from_fn(psi.len(), phi.len(), |k, j| haar.gram.inner(side, &psi.functions[k], &phi.functions[j]))
}

/// Orthogonality of two basis-function sets. For `same_irrep` the matrix
/// must be diagonal with constant diagonal, otherwise zero.
pub fn basis_function_orthogonality(
    haar: &HaarFunctional,
    psi: &BasisFunctionSet,
    phi: &BasisFunctionSet,
    same_irrep: bool,
    tol: f64,
) -> Report {
    let side = psi.side;
    let g = basis_function_gram(haar, side, psi, phi);
    let mut rep = Report::new("basis function orthogonality");
    if !same_irrep || psi.len() != phi.len() {
        rep.push("cross_irreps_vanish", max_abs(g.iter()), tol);
        return rep;
    }
    let mut off: f64 = 0.0;
    let mut diag: f64 = 0.0;
    for k in 0..g.nrows() {
        for j in 0..g.ncols() {
            if k != j {
                off = off.max(g[(k, j)].norm());
            } else {
                diag = diag.max((g[(k, k)] - g[(0, 0)]).norm());
            }
        }
    }
    rep.push("off_diagonal_vanish", off, tol);
    rep.push("diagonal_constant", diag, tol);
    rep
}

/// Inner products of canonical sets from rows `s` and `t` against
/// `(F^{-1})_ts / tr F^{-1}`.
pub fn canonical_set_inner_products(
    spec: &HopfAlgebraSpec,
    haar: &HaarFunctional,
    pi: &Corepresentation,
    side: Side,
    tol: f64,
) -> Result<Report> {
    let f = pi.f_matrix()?;
    let d = pi.dim();
    let sets: Vec<BasisFunctionSet> = (0..d).map(|r| canonical_basis_functions(spec, pi, side, r)).collect::<Result<_>>()?;
    let tr = f.trace_f_inv();
    let mut r: f64 = 0.0;
    for s in 0..d {
        for t in 0..d {
            let want = f.f_inv[(t, s)] / tr;
            for j in 0..d {
                let v = haar.gram.inner(side, &sets[s].functions[j], &sets[t].functions[j]);
                r = r.max((v - want).norm());
            }
        }
    }
    let mut rep = Report::new(format!("canonical inner products of {} ({side})", pi.label));
    rep.push("rows_formula", r, tol);
    Ok(rep)
}

/// Placement of the Haar argument in a projection operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectionOrdering {
    /// `h(π*_mn · a_[2])`.
    Standard,
    /// `h(a_[2] · π*_mn)`; kept only as a diagnostic.
    Reversed,
}

fn projection_weights(spec: &HopfAlgebraSpec, haar: &HaarFunctional, pi: &Corepresentation, m: usize, nn: usize, ordering: ProjectionOrdering) -> CVec {
    let n = spec.dim();
    let ps = spec.star(&pi.entry(m, nn));
    CVec::from_iterator(
        n,
        (0..n).map(|k| {
            let e = spec.basis(k);
            match ordering {
                ProjectionOrdering::Standard => haar.eval(&spec.multiply(&ps, &e)),
                ProjectionOrdering::Reversed => haar.eval(&spec.multiply(&e, &ps)),
            }
        }),
    )
}

/// `a ↦ d Σ a_[1] h(π*_mn a_[2])` as an operator matrix.
pub fn projection_operator(
    spec: &HopfAlgebraSpec,
    haar: &HaarFunctional,
    pi: &Corepresentation,
    m: usize,
    nn: usize,
    side: Side,
    ordering: ProjectionOrdering,
) -> CMat {
    let n = spec.dim();
    let w = projection_weights(spec, haar, pi, m, nn, ordering) * c(pi.dim() as f64, 0.0);
    let cols: Vec<CVec> = (0..n).map(|i| regular_coaction(spec, side, &spec.basis(i)) * &w).collect();
    CMat::from_columns(&cols)
}

/// Operator of the dual basis element `a^m` acting on `A` through the
/// regular coaction, assembled from structure constants.
pub fn dual_basis_operator(spec: &HopfAlgebraSpec, side: Side, m: usize) -> CMat {
    let n = spec.dim();
    let s = spec.antipode_matrix();
    match side {
        Side::R => CMat::from_fn(n, n, |j, k| spec.comult(k, j, m)),
        Side::L => CMat::from_fn(n, n, |j, k| (0..n).map(|l| spec.comult(k, l, j) * s[(l, m)]).sum()),
    }
}

/// Projection operator expanded over the dual-basis operators.
pub fn projection_operator_dual(spec: &HopfAlgebraSpec, haar: &HaarFunctional, pi: &Corepresentation, m: usize, nn: usize, side: Side) -> CMat {
    let n = spec.dim();
    let w = projection_weights(spec, haar, pi, m, nn, ProjectionOrdering::Standard);
    let mut out = CMat::zeros(n, n);
    for k in 0..n {
        if w[k] != ZERO {
            out += dual_basis_operator(spec, side, k) * w[k];
        }
    }
    out * c(pi.dim() as f64, 0.0)
}

/// Composition law, action on canonical basis functions and completeness
/// of the projection operators for a full irrep table.
pub fn verify_projection_identities(
    spec: &HopfAlgebraSpec,
    haar: &HaarFunctional,
    table: &IrrepTable,
    side: Side,
    ordering: ProjectionOrdering,
    tol: f64,
) -> Result<Report> {
    let n = spec.dim();
    let mut ops: Vec<Vec<CMat>> = Vec::new();
    for p in &table.irreps {
        let d = p.dim();
        ops.push((0..d * d).map(|i| projection_operator(spec, haar, p, i / d, i % d, side, ordering)).collect());
    }
    let (mut comp, mut act, mut dual): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut completeness = CMat::zeros(n, n);
    for (pi_, p) in table.irreps.iter().enumerate() {
        let dp = p.dim();
        let f = p.f_matrix()?;
        let trinv = f.trace_f_inv();
        let wsum = trinv / c(dp as f64, 0.0);
        for m in 0..dp {
            for nn in 0..dp {
                let pmn = &ops[pi_][m * dp + nn];
                completeness += pmn * (f.f[(m, nn)] * wsum);
                if ordering == ProjectionOrdering::Standard {
                    dual = dual.max(max_abs_diff(pmn, &projection_operator_dual(spec, haar, p, m, nn, side)));
                }
                for (qi, q) in table.irreps.iter().enumerate() {
                    let dq = q.dim();
                    for j in 0..dq {
                        for k in 0..dq {
                            let lhs = pmn * &ops[qi][j * dq + k];
                            let rhs = if qi == pi_ {
                                &ops[pi_][m * dp + k] * (c(dp as f64, 0.0) * f.f_inv[(nn, j)] / trinv)
                            } else {
                                CMat::zeros(n, n)
                            };
                            comp = comp.max(max_abs_diff(&lhs, &rhs));
                        }
                    }
                    let qf = q.f_matrix()?;
                    for row in 0..dq {
                        let set = canonical_basis_functions(spec, q, side, row)?;
                        for k in 0..dq {
                            let lhs = pmn * &set.functions[k];
                            let mut rhs = CVec::zeros(n);
                            if qi == pi_ && nn == k {
                                for l in 0..dq {
                                    rhs += &set.functions[l] * (c(dp as f64, 0.0) * qf.f_inv[(l, m)] / qf.trace_f_inv());
                                }
                            }
                            act = act.max(max_abs((lhs - rhs).iter()));
                        }
                    }
                }
            }
        }
    }
    let mut rep = Report::new(format!("projection identities ({side} side)"));
    rep.push("composition", comp, tol);
    rep.push("action_on_basis_functions", act, tol);
    rep.push("completeness", max_abs_diff(&completeness, &CMat::identity(n, n)), tol);
    if ordering == ProjectionOrdering::Standard {
        rep.push("dual_operator_expansion", dual, tol);
    }
    Ok(rep)
}

/// Residual of `π^X(ab) = Σ a_[1] b_[1] ⊗ (a_[2] b_[2] or b_[2] a_[2])`.
pub fn product_rule_residual(spec: &HopfAlgebraSpec, side: Side, twisted: bool) -> f64 {
    let n = spec.dim();
    let imgs: Vec<TensorElement> = (0..n).map(|j| regular_coaction(spec, side, &spec.basis(j))).collect();
    let mut r: f64 = 0.0;
    for j in 0..n {
        for k in 0..n {
            let lhs = regular_coaction(spec, side, spec.basis_product(j, k));
            let rhs = if twisted {
                spec.tensor_multiply_twisted(&imgs[j], &imgs[k])
            } else {
                spec.tensor_multiply(&imgs[j], &imgs[k])
            };
            r = r.max(max_abs_diff(&lhs, &rhs));
        }
    }
    r
}

/// Product rules of the regular coactions: untwisted for R, twisted for L.
pub fn product_coaction_check(spec: &HopfAlgebraSpec, tol: f64) -> Report {
    let mut rep = Report::new("regular coaction product rules");
    rep.push("right_rule", product_rule_residual(spec, Side::R, false), tol);
    rep.push("left_rule_twisted", product_rule_residual(spec, Side::L, true), tol);
    rep
}

/// Right and left actions of the dual algebra on `A`, built from the
/// coproduct and pairing directly and from structure constants, checked
/// against each other, the action axioms and the regular coactions.
pub fn dual_action_crosscheck(spec: &HopfAlgebraSpec, tol: f64) -> Report {
    let n = spec.dim();
    let dual = build_dual(spec);
    let pair = |x: &CVec, a: &CVec| -> C64 { x.iter().zip(a.iter()).map(|(p, q)| p * q).sum() };
    let action = |side: Side, x: &CVec| -> CMat {
        let cols: Vec<CVec> = (0..n)
            .map(|k| {
                let d = spec.coproduct(&spec.basis(k));
                let mut out = CVec::zeros(n);
                for p in 0..n {
                    for q in 0..n {
                        let w = d[(p, q)];
                        if w == ZERO {
                            continue;
                        }
                        match side {
                            Side::R => out += spec.basis(p) * (w * pair(x, &spec.basis(q))),
                            Side::L => out += spec.basis(q) * (w * pair(x, &spec.antipode(&spec.basis(p)))),
                        }
                    }
                }
                out
            })
            .collect();
        CMat::from_columns(&cols)
    };
    let mut rep = Report::new("dual action cross-check");
    for side in Side::ALL {
        let ops: Vec<CMat> = (0..n).map(|m| action(side, &dual.basis(m))).collect();
        let (mut agree, mut hom, mut recon): (f64, f64, f64) = (0.0, 0.0, 0.0);
        for m in 0..n {
            agree = agree.max(max_abs_diff(&ops[m], &dual_basis_operator(spec, side, m)));
            for k in 0..n {
                let prod = dual.multiply(&dual.basis(m), &dual.basis(k));
                hom = hom.max(max_abs_diff(&(&ops[m] * &ops[k]), &action(side, &prod)));
            }
        }
        let unit = max_abs_diff(&action(side, &dual.one()), &CMat::identity(n, n));
        for v in 0..n {
            let want = regular_coaction(spec, side, &spec.basis(v));
            let mut got = CMat::zeros(n, n);
            for (j, op) in ops.iter().enumerate() {
                got += HopfAlgebraSpec::outer(&op.column(v).into_owned(), &spec.basis(j));
            }
            recon = recon.max(max_abs_diff(&want, &got));
        }
        rep.push(format!("{side}_pairing_vs_structure_constants"), agree, tol);
        rep.push(format!("{side}_action_multiplicative"), hom, tol);
        rep.push(format!("{side}_action_unital"), unit, tol);
        rep.push(format!("{side}_reconstructs_coaction"), recon, tol);
    }
    rep
}

/// Coaction axioms of the regular coactions.
pub fn coaction_axioms(spec: &HopfAlgebraSpec, side: Side, tol: f64) -> Report {
    let pi = regular_corep(spec, side);
    let mut rep = crate::corep::verify_corep(spec, &pi, tol);
    rep.title = format!("{side} regular coaction axioms");
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{self, Construction};
    use crate::corep::build_irrep_table;
    use crate::haar::solve_haar;

    fn setup(g: crate::group::GroupTable, cons: Construction) -> (HopfAlgebraSpec, HaarFunctional, IrrepTable) {
        let a = builtins::build(&g, cons);
        let h = solve_haar(&a, 1e-12).unwrap();
        let t = build_irrep_table(&a, &h, 11).unwrap();
        (a, h, t)
    }

    #[test]
    fn left_coaction_on_group_like() {
        let g = builtins::s3();
        let a = builtins::build(&g, Construction::Group);
        let t = regular_coaction(&a, Side::L, &a.basis(4));
        assert_eq!(t[(4, g.inv(4))], C64::new(1.0, 0.0));
        assert!((t.norm() - 1.0).abs() < 1e-15);
        for side in Side::ALL {
            assert!(coaction_axioms(&a, side, 1e-12).passed());
        }
    }

    #[test]
    fn canonical_sets_and_orthogonality() {
        let (a, h, t) = setup(builtins::s3(), Construction::Function);
        for side in Side::ALL {
            for p in &t.irreps {
                for row in 0..p.dim() {
                    let s = canonical_basis_functions(&a, p, side, row).unwrap();
                    assert!(check_basis_functions(&a, &s, p, 1e-10).passed());
                }
                assert!(canonical_set_inner_products(&a, &h, p, side, 1e-10).unwrap().passed());
            }
            let std = t.get(2);
            let s0 = canonical_basis_functions(&a, std, side, 0).unwrap();
            let g = basis_function_gram(&h, side, &s0, &s0);
            assert!((g[(0, 0)] - C64::new(0.5, 0.0)).norm() < 1e-12);
            assert!(basis_function_orthogonality(&h, &s0, &s0, true, 1e-10).passed());
            let tr = canonical_basis_functions(&a, t.get(0), side, 0).unwrap();
            let sg = canonical_basis_functions(&a, t.get(1), side, 0).unwrap();
            assert!(basis_function_orthogonality(&h, &tr, &sg, false, 1e-10).passed());
        }
    }

    #[test]
    fn constants_are_not_basis_functions_of_nontrivial_irrep() {
        let (a, _, t) = setup(builtins::s3(), Construction::Function);
        let set = BasisFunctionSet { side: Side::R, corep_label: "x".into(), functions: vec![a.one(), a.one()] };
        assert!(!check_basis_functions(&a, &set, t.get(2), 1e-9).passed());
    }

    #[test]
    fn left_canonical_needs_unitarity() {
        let (a, _, t) = setup(builtins::s3(), Construction::Function);
        let mut p = t.get(2).clone();
        p.unitary = Flag::Unknown;
        assert!(matches!(canonical_basis_functions(&a, &p, Side::L, 0), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn projection_identities_both_algebras() {
        for cons in [Construction::Function, Construction::Group] {
            let (a, h, t) = setup(builtins::s3(), cons);
            for side in Side::ALL {
                let r = verify_projection_identities(&a, &h, &t, side, ProjectionOrdering::Standard, 1e-10).unwrap();
                assert!(r.passed(), "{}: {:?}", a.label, r);
            }
        }
    }

    #[test]
    fn trivial_projection_averages() {
        let (a, h, t) = setup(builtins::s3(), Construction::Function);
        let p = projection_operator(&a, &h, t.get(0), 0, 0, Side::R, ProjectionOrdering::Standard);
        let want = CMat::from_element(6, 6, C64::new(1.0 / 6.0, 0.0));
        assert!(max_abs_diff(&p, &want) < 1e-14);
    }

    #[test]
    fn product_rules() {
        for cons in [Construction::Function, Construction::Group] {
            let a = builtins::build(&builtins::s3(), cons);
            assert!(product_coaction_check(&a, 1e-12).passed());
        }
        let cs3 = builtins::build(&builtins::s3(), Construction::Group);
        assert!(product_rule_residual(&cs3, Side::L, false) > 0.5);
        let cz = builtins::build(&builtins::s3(), Construction::Function);
        assert!(product_rule_residual(&cz, Side::L, false) < 1e-14);
    }

    #[test]
    fn dual_actions() {
        for a in builtins::standard_suite() {
            let r = dual_action_crosscheck(&a, 1e-12);
            assert!(r.passed(), "{}: {:?}", a.label, r);
        }
        let triv = builtins::build(&builtins::cyclic(1), Construction::Function);
        assert!(dual_action_crosscheck(&triv, 1e-12).passed());
    }

    #[test]
    fn regular_coactions_unitary() {
        for a in builtins::standard_suite() {
            let h = solve_haar(&a, 1e-12).unwrap();
            for side in Side::ALL {
                assert!(regular_unitarity(&a, &h, side, 1e-12).passed(), "{}", a.label);
            }
        }
    }
}
