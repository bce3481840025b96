use std::sync::OnceLock;

use cqg_core::builtins::{self, Construction};
use cqg_core::cg::{certify_cg, solve_cg};
use cqg_core::corep::{build_irrep_table, verify_corep, IrrepTable};
use cqg_core::haar::{solve_haar, HaarFunctional};
use cqg_core::linalg::{self, CMat, CVec, C64};
use cqg_core::regular::{canonical_basis_functions, Carrier};
use cqg_core::tensor_ops::{CoactionRule, OperatorSpace};
use cqg_core::wigner_eckart::verify_wigner_eckart;
use cqg_core::{HopfAlgebraSpec, Kind, Side};
use proptest::prelude::*;

struct Fixture {
    spec: HopfAlgebraSpec,
    haar: HaarFunctional,
    table: IrrepTable,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        builtins::standard_suite()
            .into_iter()
            .map(|spec| {
                let haar = solve_haar(&spec, 1e-12).unwrap();
                let table = build_irrep_table(&spec, &haar, 7).unwrap();
                Fixture { spec, haar, table }
            })
            .collect()
    })
}

fn s3_fixture(cons: Construction) -> &'static Fixture {
    &fixtures()[if cons == Construction::Function { 3 } else { 5 }]
}

fn complex() -> impl Strategy<Value = C64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| C64::new(re, im))
}

fn vector(n: usize) -> impl Strategy<Value = CVec> {
    prop::collection::vec(complex(), n).prop_map(move |v| CVec::from_vec(v))
}

fn matrix(r: usize, c: usize) -> impl Strategy<Value = CMat> {
    prop::collection::vec(complex(), r * c).prop_map(move |v| CMat::from_vec(r, c, v))
}

fn norm(v: &CVec) -> f64 {
    linalg::max_abs(v.iter())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hopf_identities_on_random_elements(idx in 0usize..6, seed in vector(18)) {
        let f = &fixtures()[idx];
        let spec = &f.spec;
        let n = spec.dim();
        let x = CVec::from_fn(n, |i, _| seed[i]);
        let y = CVec::from_fn(n, |i, _| seed[6 + i]);
        let z = CVec::from_fn(n, |i, _| seed[12 + i]);
        let xy = spec.multiply(&x, &y);
        prop_assert!(norm(&(spec.multiply(&xy, &z) - spec.multiply(&x, &spec.multiply(&y, &z)))) < 1e-12);
        let lhs = spec.coproduct(&xy);
        let rhs = spec.tensor_multiply(&spec.coproduct(&x), &spec.coproduct(&y));
        prop_assert!(linalg::max_abs_diff(&lhs, &rhs) < 1e-12);
        prop_assert!(norm(&(spec.antipode(&xy) - spec.multiply(&spec.antipode(&y), &spec.antipode(&x)))) < 1e-12);
        prop_assert!(norm(&(spec.star(&xy) - spec.multiply(&spec.star(&y), &spec.star(&x)))) < 1e-12);
        prop_assert!(norm(&(spec.antipode_inv(&spec.antipode(&x)) - &x)) < 1e-12);
        prop_assert!((spec.counit_of(&xy) - spec.counit_of(&x) * spec.counit_of(&y)).norm() < 1e-12);
    }

    #[test]
    fn haar_is_invariant_and_positive(idx in 0usize..6, x in vector(6)) {
        let f = &fixtures()[idx];
        let n = f.spec.dim();
        let x = CVec::from_fn(n, |i, _| x[i]);
        let d = f.spec.coproduct(&x);
        let target = f.spec.one() * f.haar.eval(&x);
        prop_assert!(norm(&(f.haar.h.apply_left(&d) - &target)) < 1e-12);
        prop_assert!(norm(&(f.haar.h.apply_right(&d) - &target)) < 1e-12);
        let pos = f.haar.eval(&f.spec.multiply(&f.spec.star(&x), &x));
        prop_assert!(pos.im.abs() < 1e-12 && pos.re > -1e-12);
    }

    #[test]
    fn corep_survives_unitary_change_of_basis(a in matrix(2, 2)) {
        let f = s3_fixture(Construction::Function);
        let pi = f.table.get(2);
        let h = &a + a.adjoint();
        let (_, vecs) = linalg::hermitian_eigen(&h);
        let moved = pi.transformed(&vecs.adjoint(), &vecs);
        prop_assert!(verify_corep(&f.spec, &moved, 1e-12).passed());
        prop_assert!(norm(&(moved.character() - pi.character())) < 1e-12);
    }

    #[test]
    fn operator_coaction_is_a_comodule(q in matrix(6, 6), qp in matrix(6, 6), group in any::<bool>(), left in any::<bool>()) {
        let f = s3_fixture(if group { Construction::Group } else { Construction::Function });
        let side = if left { Side::L } else { Side::R };
        let carrier = Carrier::bare(&f.spec, side);
        let space = OperatorSpace::new(&f.spec, &carrier);
        for kind in Kind::ALL {
            let (coassoc, counit) = space.comodule_residuals(std::slice::from_ref(&q), CoactionRule::from(kind));
            prop_assert!(coassoc < 1e-11 && counit < 1e-11);
            prop_assert!(space.product_rule_residual(&q, &qp, kind) < 1e-11);
        }
        if !group {
            let o = space.coaction(&q, Kind::Ordinary);
            let t = space.coaction(&q, Kind::Twisted);
            prop_assert!(o.max_diff(&t) < 1e-12);
        }
    }

    #[test]
    fn cg_rephasing_is_still_a_cg_system(theta in 0.0f64..std::f64::consts::TAU, r in 0usize..3) {
        let f = s3_fixture(Construction::Function);
        let cg = solve_cg(&f.spec, &f.table, 2, 2).unwrap();
        let z = C64::from_polar(1.0, theta);
        let moved = cg.rephased(&f.table, r, 0, z);
        prop_assert!(certify_cg(&f.spec, &f.haar, &f.table, &moved, 1e-10).unwrap().passed());
    }

    #[test]
    fn reduced_elements_scale_with_the_family(z in complex(), theta in 0.0f64..std::f64::consts::TAU, twisted in any::<bool>()) {
        prop_assume!(z.norm() > 1e-3);
        let f = s3_fixture(Construction::Function);
        let kind = if twisted { Kind::Twisted } else { Kind::Ordinary };
        let carrier = Carrier::regular(&f.spec, &f.haar, Side::R);
        let space = OperatorSpace::new(&f.spec, &carrier);
        let set = |p: usize| canonical_basis_functions(&f.spec, f.table.get(p), Side::R, 0).unwrap();
        let (p, q, r) = (2, 2, 2);
        let fam = space.multiplication_family(&set(q), kind).unwrap();
        let mut scaled = fam.clone();
        for op in &mut scaled.operators {
            *op *= z;
        }
        let cg = solve_cg(&f.spec, &f.table, q, p).unwrap();
        let base = verify_wigner_eckart(&carrier, &f.table, r, &set(r), &fam, &set(p), &cg, 1e-9).unwrap();
        let again = verify_wigner_eckart(&carrier, &f.table, r, &set(r), &scaled, &set(p), &cg, 1e-9).unwrap();
        prop_assert!(again.passed());
        for (a, b) in base.reduced.iter().zip(&again.reduced) {
            let (a, b) = (C64::new(a[0], a[1]), C64::new(b[0], b[1]));
            prop_assert!((a * z - b).norm() < 1e-10);
        }
        // rephasing copy 0 of r multiplies the reduced element by the same phase
        let w = C64::from_polar(1.0, theta);
        let moved = cg.rephased(&f.table, r, 0, w);
        let rephased = verify_wigner_eckart(&carrier, &f.table, r, &set(r), &fam, &set(p), &moved, 1e-9).unwrap();
        prop_assert!(rephased.passed());
        let (a, b) = (base.reduced[0], rephased.reduced[0]);
        prop_assert!((C64::new(a[0], a[1]) * w - C64::new(b[0], b[1])).norm() < 1e-10);
    }

    #[test]
    fn nullspace_of_low_rank_products(b in matrix(7, 3), c in matrix(3, 5)) {
        let a = &b * &c;
        let k = linalg::rank(&a, 1e-9);
        let null = linalg::nullspace(&a, 1e-9);
        prop_assert_eq!(null.ncols(), 5 - k);
        prop_assert!(k <= 3);
        prop_assert!(linalg::max_abs((&a * &null).iter()) < 1e-10 * linalg::max_abs(a.iter()).max(1.0));
        prop_assert!(linalg::max_abs_diff(&(null.adjoint() * &null), &CMat::identity(null.ncols(), null.ncols())) < 1e-10);
    }
}
