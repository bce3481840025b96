mod common;

use common::*;
use cqg_core::builtins::{self, Construction};
use cqg_core::corep::{build_irrep_table, verify_orthogonality};
use cqg_core::haar::solve_haar;
use cqg_core::homspace::{build_coset_subalgebra, restricted_carrier, solve_restricted_basis_functions};
use cqg_core::regular::Carrier;
use cqg_core::tensor_ops::OperatorSpace;
use cqg_core::{Kind, Side};

/// Frozen from `operator_space_multiplicity` for (S3, standard).
const S3_STANDARD_FAMILY_SPACE: usize = 12;

#[test]
fn builtin_s3_table_matches_permutation_composition() {
    let g = builtins::s3();
    let perms = s3_perms();
    for a in 0..6 {
        for b in 0..6 {
            assert_eq!(perms[g.mul(a, b)], compose(&perms[a], &perms[b]));
        }
    }
}

#[test]
fn character_table_of_s3() {
    let spec = builtins::build(&builtins::s3(), Construction::Function);
    let haar = solve_haar(&spec, 1e-12).unwrap();
    let table = build_irrep_table(&spec, &haar, 7).unwrap();
    let oracle = s3_characters();
    assert_eq!(table.len(), oracle.len());
    for (p, (_, chi)) in table.irreps.iter().zip(&oracle) {
        let got = p.character();
        for x in 0..6 {
            assert!((got[x].re - chi[x]).abs() < 1e-10 && got[x].im.abs() < 1e-10);
        }
    }
}

#[test]
fn group_algebra_irreps_are_group_elements() {
    let spec = builtins::build(&builtins::s3(), Construction::Group);
    let haar = solve_haar(&spec, 1e-12).unwrap();
    let table = build_irrep_table(&spec, &haar, 7).unwrap();
    let mut seen = vec![false; 6];
    for p in &table.irreps {
        assert_eq!(p.dim(), 1);
        let chi = p.character();
        let g = (0..6).find(|&x| (chi[x].re - 1.0).abs() < 1e-10).unwrap();
        assert!((0..6).all(|x| x == g || chi[x].norm() < 1e-10));
        seen[g] = true;
    }
    assert!(seen.iter().all(|&s| s));
}

#[test]
fn schur_orthogonality_against_group_sums() {
    let g = builtins::s3();
    let spec = builtins::build(&g, Construction::Function);
    let haar = solve_haar(&spec, 1e-12).unwrap();
    let table = build_irrep_table(&spec, &haar, 7).unwrap();
    for p in &table.irreps {
        let d = p.dim();
        let m = |x: usize, j: usize, k: usize| p.components()[x][(j, k)];
        for j in 0..d {
            for k in 0..d {
                for a in 0..d {
                    for b in 0..d {
                        let oracle: cqg_core::linalg::C64 = (0..6).map(|x| m(x, j, k) * m(g.inv(x), a, b)).sum::<cqg_core::linalg::C64>() / 6.0;
                        let want = if j == b && a == k { 1.0 / d as f64 } else { 0.0 };
                        assert!((oracle.re - want).abs() < 1e-12 && oracle.im.abs() < 1e-12);
                        let lib = haar.eval(&spec.multiply(&p.entry(j, k), &spec.antipode(&p.entry(a, b))));
                        assert!((lib - oracle).norm() < 1e-12);
                    }
                }
            }
        }
        assert!(verify_orthogonality(&spec, &haar, p, p, 1e-10).unwrap().passed());
    }
}

#[test]
fn family_space_dimension_matches_enumeration() {
    let g = builtins::s3();
    let chi = &s3_characters()[2].1;
    assert_eq!(operator_space_multiplicity(&g, chi), S3_STANDARD_FAMILY_SPACE);
    let spec = builtins::build(&g, Construction::Function);
    let haar = solve_haar(&spec, 1e-12).unwrap();
    let table = build_irrep_table(&spec, &haar, 7).unwrap();
    let carrier = Carrier::regular(&spec, &haar, Side::R);
    let space = OperatorSpace::new(&spec, &carrier);
    let fams = space.solve_family_space(table.get(table.find("std").unwrap()), Kind::Ordinary);
    assert_eq!(fams.len(), S3_STANDARD_FAMILY_SPACE);
    for (name, chi) in s3_characters() {
        let p = table.find(if name == "standard" { "std" } else { name }).unwrap_or(1);
        let n = space.solve_family_space(table.get(p), Kind::Ordinary).len();
        assert_eq!(n, operator_space_multiplicity(&g, &chi), "{name}");
    }
}

#[test]
fn restricted_dimensions_follow_frobenius_reciprocity() {
    let g = builtins::s3();
    let spec = builtins::build(&g, Construction::Function);
    let haar = solve_haar(&spec, 1e-12).unwrap();
    let table = build_irrep_table(&spec, &haar, 7).unwrap();
    for h in [vec![0], vec![0, 1], vec![0, 2], vec![0, 4, 5], (0..6).collect::<Vec<_>>()] {
        for side in Side::ALL {
            let b = build_coset_subalgebra(&g, &h, side).unwrap();
            let carrier = restricted_carrier(&spec, &b, &haar, 1e-12).unwrap();
            for (p, (_, chi)) in table.irreps.iter().zip(s3_characters()) {
                let got = solve_restricted_basis_functions(&carrier, p).len();
                assert_eq!(got, coset_multiplicity(&g, &h, side == Side::L, &chi), "{h:?} {side} {}", p.label);
            }
        }
    }
}
