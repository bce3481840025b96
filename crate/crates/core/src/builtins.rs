//! Built-in group tables and the two Hopf *-algebras attached to a group.

use crate::algebra::HopfAlgebraSpec;
use crate::group::GroupTable;
use crate::linalg::{CMat, CVec, C64, ONE, ZERO};

/// Function algebra `C(G)` or group algebra `CG`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Function,
    Group,
}

pub fn cyclic(n: usize) -> GroupTable {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels = (0..n).map(|a| format!("{a}")).collect();
    GroupTable::new(format!("Z{n}"), table, Some(labels)).expect("cyclic table")
}

/// Symmetric group on three letters; `a·b` applies `b` first.
pub fn s3() -> GroupTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let labels = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"];
    let table = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let p: [usize; 3] = std::array::from_fn(|i| perms[a][perms[b][i]]);
                    perms.iter().position(|q| *q == p).expect("closed")
                })
                .collect()
        })
        .collect();
    GroupTable::new("S3", table, Some(labels.iter().map(|s| s.to_string()).collect())).expect("S3 table")
}

pub fn group_by_name(name: &str) -> Option<GroupTable> {
    match name {
        "Z1" | "z1" => Some(cyclic(1)),
        "Z2" | "z2" => Some(cyclic(2)),
        "Z3" | "z3" => Some(cyclic(3)),
        "Z4" | "z4" => Some(cyclic(4)),
        "S3" | "s3" => Some(s3()),
        _ => None,
    }
}

pub fn build(g: &GroupTable, construction: Construction) -> HopfAlgebraSpec {
    match construction {
        Construction::Function => build_function_algebra(g),
        Construction::Group => build_group_algebra(g),
    }
}

/// `C(G)` in the basis of point indicators `δ_x`.
pub fn build_function_algebra(g: &GroupTable) -> HopfAlgebraSpec {
    let n = g.order();
    let mut mult = vec![ZERO; n * n * n];
    let mut comult = vec![ZERO; n * n * n];
    let mut antipode = CMat::zeros(n, n);
    let mut counit = CVec::zeros(n);
    for x in 0..n {
        mult[(x * n + x) * n + x] = ONE;
        antipode[(x, g.inv(x))] = ONE;
        for y in 0..n {
            let z = g.mul(x, y);
            comult[(z * n + x) * n + y] = ONE;
        }
    }
    counit[0] = ONE;
    let unit = CVec::from_element(n, ONE);
    HopfAlgebraSpec::new(format!("C({})", g.name), n, &mult, &comult, antipode, counit, unit, CMat::identity(n, n))
        .expect("function algebra shapes")
}

/// `CG` in the basis of group elements.
pub fn build_group_algebra(g: &GroupTable) -> HopfAlgebraSpec {
    let n = g.order();
    let mut mult = vec![ZERO; n * n * n];
    let mut comult = vec![ZERO; n * n * n];
    let mut antipode = CMat::zeros(n, n);
    let mut star = CMat::zeros(n, n);
    for x in 0..n {
        comult[(x * n + x) * n + x] = ONE;
        antipode[(x, g.inv(x))] = ONE;
        star[(x, g.inv(x))] = ONE;
        for y in 0..n {
            mult[(x * n + y) * n + g.mul(x, y)] = ONE;
        }
    }
    let counit = CVec::from_element(n, ONE);
    let mut unit = CVec::zeros(n);
    unit[0] = ONE;
    HopfAlgebraSpec::new(format!("C{}", g.name), n, &mult, &comult, antipode, counit, unit, star)
        .expect("group algebra shapes")
}

/// `C(Z2), C(Z3), C(Z4), C(S3), CZ3, CS3`.
pub fn standard_suite() -> Vec<HopfAlgebraSpec> {
    vec![
        build_function_algebra(&cyclic(2)),
        build_function_algebra(&cyclic(3)),
        build_function_algebra(&cyclic(4)),
        build_function_algebra(&s3()),
        build_group_algebra(&cyclic(3)),
        build_group_algebra(&s3()),
    ]
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = -gx`. Its antipode has `S² ≠ id`, so it carries
/// no compatible *-structure; the star stored here is a placeholder
/// (identity) and the star axioms fail. Useful only for checks that rely on
/// the Hopf structure alone.
pub fn sweedler() -> HopfAlgebraSpec {
    let n = 4;
    let idx = |a: usize, b: usize| a + 2 * b;
    let mut mult = vec![ZERO; n * n * n];
    for a in 0..2 {
        for b in 0..2 {
            for cc in 0..2 {
                for d in 0..2 {
                    if b + d >= 2 {
                        continue;
                    }
                    let sign = if b * cc == 1 { -1.0 } else { 1.0 };
                    mult[(idx(a, b) * n + idx(cc, d)) * n + idx((a + cc) % 2, b + d)] = C64::new(sign, 0.0);
                }
            }
        }
    }
    let mut comult = vec![ZERO; n * n * n];
    let mut set = |l: usize, j: usize, k: usize| comult[(l * n + j) * n + k] = ONE;
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 2, 0);
    set(2, 1, 2);
    set(3, 3, 1);
    set(3, 0, 3);
    let mut antipode = CMat::zeros(n, n);
    antipode[(0, 0)] = ONE;
    antipode[(1, 1)] = ONE;
    antipode[(2, 3)] = -ONE;
    antipode[(3, 2)] = ONE;
    let counit = CVec::from_vec(vec![ONE, ONE, ZERO, ZERO]);
    let unit = CVec::from_vec(vec![ONE, ZERO, ZERO, ZERO]);
    HopfAlgebraSpec::new("Sweedler", n, &mult, &comult, antipode, counit, unit, CMat::identity(n, n))
        .expect("Sweedler shapes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{verify_hopf_axioms, verify_star_axioms};

    #[test]
    fn s3_is_nonabelian() {
        let g = s3();
        assert_ne!(g.mul(1, 2), g.mul(2, 1));
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn sweedler_is_hopf_but_not_star() {
        let a = sweedler();
        let h = verify_hopf_axioms(&a, 1e-12);
        assert!(h.passed(), "{:?}", h.failures().collect::<Vec<_>>());
        assert!(!verify_star_axioms(&a, 1e-12).passed());
        // S² ≠ id
        let x = a.basis(2);
        let s2 = a.antipode(&a.antipode(&x));
        assert!((s2 + &x).norm() < 1e-15);
    }

    #[test]
    fn trivial_group() {
        let a = build_function_algebra(&cyclic(1));
        assert!(verify_hopf_axioms(&a, 1e-12).passed());
    }
}
