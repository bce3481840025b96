//! Coideal *-subalgebras `B ⊂ A` and harmonic analysis restricted to them.
//!
//! Side R uses right coideals (`Δ(B) ⊆ B ⊗ A`), side L left coideals
//! (`Δ(B) ⊆ A ⊗ B`, with `S²(B) ⊆ B`).

use crate::algebra::{HopfAlgebraSpec, Kind, Side};
use crate::cg::CgSystem;
use crate::corep::{check_unitary, verify_corep, Corepresentation, IrrepTable};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::haar::HaarFunctional;
use crate::linalg::{self, max_abs, CMat, CVec, C64, ZERO};
use crate::regular::{canonical_basis_functions, regular_coaction, BasisFunctionSet, Carrier};
use crate::report::Report;
use crate::tensor_ops::{couple_families, CoupledFamily, OperatorSpace, TensorOperatorFamily};
use crate::wigner_eckart::{verify_wigner_eckart, WeReport};

#[derive(Clone, Debug)]
pub struct CoidealSubalgebra {
    pub label: String,
    pub side: Side,
    /// `n x b`, user-facing spanning basis of `B`.
    pub span: CMat,
    /// `n x n` orthogonal projector onto `B` for the coefficient inner product.
    projector: CMat,
}

impl CoidealSubalgebra {
    /// Candidate subspace; nothing is verified here.
    pub fn new(label: impl Into<String>, side: Side, span: CMat) -> Self {
        let q = linalg::orthonormalize(&span);
        let projector = &q * q.adjoint();
        CoidealSubalgebra { label: label.into(), side, span, projector }
    }

    pub fn dim(&self) -> usize {
        self.span.ncols()
    }

    /// Distance of `x` from `B`.
    pub fn membership_residual(&self, x: &CVec) -> f64 {
        max_abs((x - &self.projector * x).iter())
    }
}

/// Functions constant on the left cosets `xH` (side L) or right cosets
/// `Hx` (side R) of `C(G)`; the span is the coset indicators.
pub fn build_coset_subalgebra(g: &GroupTable, subgroup: &[usize], side: Side) -> Result<CoidealSubalgebra> {
    let mut h: Vec<usize> = subgroup.to_vec();
    h.sort_unstable();
    h.dedup();
    if !g.is_subgroup(&h) {
        return Err(Error::NotASubgroup(format!("{h:?} in {}", g.name)));
    }
    let cosets = match side {
        Side::L => g.left_cosets(&h),
        Side::R => g.right_cosets(&h),
    };
    let n = g.order();
    let cols: Vec<CVec> = cosets
        .iter()
        .map(|c| {
            let mut v = CVec::zeros(n);
            for &x in c {
                v[x] = C64::new(1.0, 0.0);
            }
            v
        })
        .collect();
    Ok(CoidealSubalgebra::new(format!("C({}/{h:?})", g.name), side, CMat::from_columns(&cols)))
}

/// Closure, unit membership, the coideal condition of the side and
/// `S²`-invariance.
pub fn verify_coideal(spec: &HopfAlgebraSpec, b: &CoidealSubalgebra, tol: f64) -> Report {
    let n = spec.dim();
    let comp = CMat::identity(n, n) - &b.projector;
    let cols: Vec<CVec> = (0..b.dim()).map(|i| b.span.column(i).into_owned()).collect();
    let (mut prod, mut star, mut co, mut s2): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for x in &cols {
        for y in &cols {
            prod = prod.max(b.membership_residual(&spec.multiply(x, y)));
        }
        star = star.max(b.membership_residual(&spec.star(x)));
        let d = spec.coproduct(x);
        let leak = match b.side {
            Side::R => &comp * d,
            Side::L => d * comp.transpose(),
        };
        co = co.max(max_abs(leak.iter()));
        s2 = s2.max(b.membership_residual(&spec.antipode(&spec.antipode(x))));
    }
    let mut rep = Report::new(format!("coideal subalgebra {} ({} side)", b.label, b.side));
    rep.push("subalgebra_closure", prod, tol);
    rep.push("star_closure", star, tol);
    rep.push("unit_membership", b.membership_residual(&spec.one()), tol);
    let name = match b.side {
        Side::R => "right_coideal",
        Side::L => "left_coideal",
    };
    rep.push(name, co, tol);
    rep.push("s2_invariance", s2, tol);
    rep
}

/// Gram matrix of `(·,·)^X` on the spanning basis of `B`.
pub fn restricted_gram(spec: &HopfAlgebraSpec, b: &CoidealSubalgebra, haar: &HaarFunctional, tol: f64) -> Result<CMat> {
    if b.side == Side::L {
        let s2 = (0..b.dim())
            .map(|i| b.membership_residual(&spec.antipode(&spec.antipode(&b.span.column(i).into_owned()))))
            .fold(0.0, f64::max);
        if s2 > tol {
            return Err(Error::NotS2Invariant(format!("{} (residual {s2:.3e})", b.label)));
        }
    }
    let g = b.span.adjoint() * haar.gram.side(b.side) * &b.span;
    if !linalg::is_positive_definite(&g, crate::haar::POSITIVITY_REL, tol.max(1e-12)) {
        return Err(Error::Positivity(format!("restricted Gram of {}", b.label)));
    }
    Ok(g)
}

/// `B` as a carrier: an internal basis orthonormal for the restricted inner
/// product and the restricted coaction written in it.
pub fn restricted_carrier(spec: &HopfAlgebraSpec, b: &CoidealSubalgebra, haar: &HaarFunctional, tol: f64) -> Result<Carrier> {
    let rep = verify_coideal(spec, b, tol);
    for name in ["subalgebra_closure", "star_closure", "unit_membership", "right_coideal", "left_coideal"] {
        if let Some(c) = rep.get(name) {
            if !c.passed {
                return Err(Error::CoidealMismatch(format!("{}: {name} residual {:.3e}", b.label, c.residual)));
            }
        }
    }
    let m = restricted_gram(spec, b, haar, tol)?;
    let r = linalg::cholesky_upper(&m)?;
    let e = &b.span * linalg::inverse(&r)?;
    let coords = e.adjoint() * haar.gram.side(b.side);
    let dim = e.ncols();
    let n = spec.dim();
    let imgs: Vec<CMat> = (0..dim).map(|i| &coords * regular_coaction(spec, b.side, &e.column(i).into_owned())).collect();
    let comps = (0..n).map(|mm| CMat::from_fn(dim, dim, |x, i| imgs[i][(x, mm)])).collect();
    let coaction = Corepresentation::from_components(format!("{} restricted {}", b.label, b.side), comps)?;
    Ok(Carrier { side: b.side, embedding: e, coords, coaction, gram: CMat::identity(dim, dim) })
}

/// Coaction axioms, Haar invariance and unitarity of the restricted coaction.
pub fn restricted_coaction_report(spec: &HopfAlgebraSpec, carrier: &Carrier, haar: &HaarFunctional, tol: f64) -> Report {
    let mut rep = Report::new(format!("restricted {} coaction", carrier.side));
    rep.absorb("axioms", verify_corep(spec, &carrier.coaction, tol));
    rep.absorb("unitary", check_unitary(spec, &carrier.coaction, tol));
    // (id ⊗ h) π(b) = h(b) 1_B
    let one = carrier.to_coords(&spec.one());
    let mut inv: f64 = 0.0;
    for i in 0..carrier.dim() {
        let mut e = CVec::zeros(carrier.dim());
        e[i] = C64::new(1.0, 0.0);
        let lhs = carrier.coact(&e) * &haar.h.0;
        let rhs = &one * haar.eval(&carrier.embed(&e));
        inv = inv.max(max_abs((lhs - rhs).iter()));
    }
    rep.push("haar_invariance", inv, tol);
    rep
}

/// Basis of the `d_p`-tuples in `B` obeying the basis-function relation.
pub fn solve_restricted_basis_functions(carrier: &Carrier, pi: &Corepresentation) -> Vec<BasisFunctionSet> {
    let b = carrier.dim();
    let dp = pi.dim();
    let n = pi.algebra_dim();
    let comps = carrier.coaction.components();
    let mut sys = CMat::zeros(dp * b * n, dp * b);
    for j in 0..dp {
        for x in 0..b {
            for m in 0..n {
                let row = (j * b + x) * n + m;
                for i in 0..b {
                    sys[(row, j * b + i)] += comps[m][(x, i)];
                }
                for k in 0..dp {
                    let c = pi.components()[m][(k, j)];
                    if c != ZERO {
                        sys[(row, k * b + x)] -= c;
                    }
                }
            }
        }
    }
    let scale = comps.iter().chain(pi.components()).map(|m| max_abs(m.iter())).fold(0.0, f64::max);
    let null = linalg::canonical_basis(&linalg::nullspace_with_floor(&sys, 1e-9, 1e-9 * scale));
    (0..null.ncols())
        .map(|c| {
            let v = null.column(c);
            let functions = (0..dp).map(|j| carrier.embed(&CVec::from_fn(b, |i, _| v[j * b + i]))).collect();
            BasisFunctionSet { side: carrier.side, corep_label: pi.label.clone(), functions }
        })
        .collect()
}

/// Canonical sets (row `ℓ` of `π`, or its side-L analogue) lying in `B`.
pub fn canonical_restricted_candidates(spec: &HopfAlgebraSpec, carrier: &Carrier, pi: &Corepresentation, tol: f64) -> Vec<(usize, BasisFunctionSet)> {
    (0..pi.dim())
        .filter_map(|l| {
            let set = canonical_basis_functions(spec, pi, carrier.side, l).ok()?;
            let inside = set.functions.iter().all(|f| carrier.membership_residual(f) <= tol);
            inside.then_some((l, set))
        })
        .collect()
}

pub fn solve_restricted_family(spec: &HopfAlgebraSpec, carrier: &Carrier, pi: &Corepresentation, kind: Kind) -> Vec<TensorOperatorFamily> {
    OperatorSpace::new(spec, carrier).solve_family_space(pi, kind)
}

pub fn check_restricted_family(spec: &HopfAlgebraSpec, carrier: &Carrier, fam: &TensorOperatorFamily, pi: &Corepresentation, tol: f64) -> Report {
    OperatorSpace::new(spec, carrier).check_family(fam, pi, tol)
}

#[allow(clippy::too_many_arguments)]
pub fn restricted_wigner_eckart(
    carrier: &Carrier,
    table: &IrrepTable,
    r: usize,
    psi: &BasisFunctionSet,
    fam: &TensorOperatorFamily,
    phi: &BasisFunctionSet,
    cg: &CgSystem,
    tol: f64,
) -> Result<WeReport> {
    for f in psi.functions.iter().chain(&phi.functions) {
        let m = carrier.membership_residual(f);
        if m > tol {
            return Err(Error::CoidealMismatch(format!("basis function outside B (residual {m:.3e})")));
        }
    }
    verify_wigner_eckart(carrier, table, r, psi, fam, phi, cg, tol)
}

pub fn couple_restricted_families(table: &IrrepTable, fam_p: &TensorOperatorFamily, fam_q: &TensorOperatorFamily, cg: &CgSystem) -> Result<Vec<CoupledFamily>> {
    couple_families(table, fam_p, fam_q, cg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{self, Construction};
    use crate::cg::solve_cg;
    use crate::corep::build_irrep_table;
    use crate::haar::solve_haar;
    use crate::tensor_ops::{identity_family, CoactionRule, OperatorVariant};

    fn setup() -> (GroupTable, HopfAlgebraSpec, HaarFunctional, IrrepTable) {
        let g = builtins::s3();
        let spec = builtins::build(&g, Construction::Function);
        let haar = solve_haar(&spec, 1e-12).unwrap();
        let table = build_irrep_table(&spec, &haar, 7).unwrap();
        (g, spec, haar, table)
    }

    #[test]
    fn coset_algebras_are_coideals() {
        let (g, spec, haar, _) = setup();
        for side in Side::ALL {
            for h in [vec![0], vec![0, 1], vec![0, 4, 5], (0..6).collect()] {
                let b = build_coset_subalgebra(&g, &h, side).unwrap();
                assert_eq!(b.dim(), 6 / h.len());
                assert!(verify_coideal(&spec, &b, 1e-12).passed());
                let c = restricted_carrier(&spec, &b, &haar, 1e-12).unwrap();
                assert!(restricted_coaction_report(&spec, &c, &haar, 1e-10).passed());
            }
        }
        assert!(matches!(build_coset_subalgebra(&g, &[0, 1, 2], Side::L), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn delta_span_is_not_a_coideal() {
        let (_, spec, _, _) = setup();
        let b = CoidealSubalgebra::new("delta", Side::R, CMat::from_columns(&[spec.basis(1)]));
        let rep = verify_coideal(&spec, &b, 1e-10);
        assert!(!rep.get("right_coideal").unwrap().passed);
    }

    #[test]
    fn coset_gram_is_a_third() {
        let (g, spec, haar, _) = setup();
        let b = build_coset_subalgebra(&g, &[0, 1], Side::R).unwrap();
        let m = restricted_gram(&spec, &b, &haar, 1e-12).unwrap();
        assert!(linalg::max_abs_diff(&m, &(CMat::identity(3, 3) * C64::new(1.0 / 3.0, 0.0))) < 1e-14);
    }

    #[test]
    fn restricted_basis_function_dimensions() {
        let (g, spec, haar, table) = setup();
        for side in Side::ALL {
            let b = build_coset_subalgebra(&g, &[0, 1], side).unwrap();
            let c = restricted_carrier(&spec, &b, &haar, 1e-12).unwrap();
            let dims: Vec<usize> = table.irreps.iter().map(|p| solve_restricted_basis_functions(&c, p).len()).collect();
            assert_eq!(dims, vec![1, 0, 1]);
        }
    }

    #[test]
    fn identity_and_multiplication_families_on_cosets() {
        let (g, spec, haar, table) = setup();
        for side in Side::ALL {
            let b = build_coset_subalgebra(&g, &[0, 1], side).unwrap();
            let c = restricted_carrier(&spec, &b, &haar, 1e-12).unwrap();
            let space = OperatorSpace::new(&spec, &c);
            for kind in Kind::ALL {
                assert!(space.identity_residual(CoactionRule::from(kind)) < 1e-12);
                let id = identity_family(3, OperatorVariant::new(kind, side), "trivial");
                assert!(check_restricted_family(&spec, &c, &id, table.get(0), 1e-10).passed());
                for p in &table.irreps {
                    for set in solve_restricted_basis_functions(&c, p) {
                        let fam = space.multiplication_family(&set, kind).unwrap();
                        assert!(space.check_family(&fam, p, 1e-10).passed());
                    }
                }
            }
        }
    }

    #[test]
    fn restricted_wigner_eckart_standard() {
        let (g, spec, haar, table) = setup();
        let std = table.find("std").unwrap();
        for side in Side::ALL {
            let b = build_coset_subalgebra(&g, &[0, 1], side).unwrap();
            let c = restricted_carrier(&spec, &b, &haar, 1e-12).unwrap();
            let space = OperatorSpace::new(&spec, &c);
            let phi = solve_restricted_basis_functions(&c, table.get(std)).remove(0);
            for kind in Kind::ALL {
                let fam = space.multiplication_family(&phi, kind).unwrap();
                let cg = solve_cg(&spec, &table, std, std).unwrap();
                for r in 0..table.len() {
                    let psis = solve_restricted_basis_functions(&c, table.get(r));
                    for psi in psis {
                        let rep = restricted_wigner_eckart(&c, &table, r, &psi, &fam, &phi, &cg, 1e-10).unwrap();
                        assert!(rep.passed(), "{side} {kind} {r}");
                    }
                }
                for cf in couple_restricted_families(&table, &fam, &fam, &cg).unwrap() {
                    assert!(space.check_family(&cf.family, table.get(cf.r), 1e-10).passed());
                }
            }
        }
    }
}
