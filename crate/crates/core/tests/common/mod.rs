//! Brute-force group-theoretic oracles, independent of the algebra code.
#![allow(dead_code)]

use cqg_core::group::GroupTable;

/// S3 as permutations of {0,1,2} in the order e, (12), (13), (23), (123), (132).
pub fn s3_perms() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]]
}

/// `(a b)(i) = a(b(i))`.
pub fn compose(a: &[usize; 3], b: &[usize; 3]) -> [usize; 3] {
    [a[b[0]], a[b[1]], a[b[2]]]
}

pub fn parity(p: &[usize; 3]) -> f64 {
    let mut inv = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn fixed_points(p: &[usize; 3]) -> usize {
    (0..3).filter(|&i| p[i] == i).count()
}

/// Classical characters of S3: trivial, sign, standard (fixed points - 1).
pub fn s3_characters() -> Vec<(&'static str, Vec<f64>)> {
    let perms = s3_perms();
    vec![
        ("trivial", perms.iter().map(|_| 1.0).collect()),
        ("sign", perms.iter().map(parity).collect()),
        ("standard", perms.iter().map(|p| fixed_points(p) as f64 - 1.0).collect()),
    ]
}

/// Multiplicity of the irrep with character `chi` in `End(C(G))` under
/// conjugation by right translations, counted by enumerating the matrix
/// units `E_ab` and checking which ones each translation fixes.
pub fn operator_space_multiplicity(g: &GroupTable, chi: &[f64]) -> usize {
    let n = g.order();
    let mut acc = 0.0;
    for x in 0..n {
        // right translation by x: δ_z ↦ δ_{z x^{-1}}
        let sigma: Vec<usize> = (0..n).map(|z| g.mul(z, g.inv(x))).collect();
        let mut trace = 0usize;
        for a in 0..n {
            for b in 0..n {
                if sigma[a] == a && sigma[b] == b {
                    trace += 1;
                }
            }
        }
        acc += chi[x] * trace as f64;
    }
    (acc / n as f64).round() as usize
}

/// Multiplicity of the irrep with character `chi` in the permutation
/// representation of G on the cosets of H (left cosets `yH` if `left`).
pub fn coset_multiplicity(g: &GroupTable, h: &[usize], left: bool, chi: &[f64]) -> usize {
    let n = g.order();
    let coset = |y: usize| -> Vec<usize> {
        let mut c: Vec<usize> = h.iter().map(|&k| if left { g.mul(y, k) } else { g.mul(k, y) }).collect();
        c.sort_unstable();
        c
    };
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for y in 0..n {
        let c = coset(y);
        if !reps.contains(&c) {
            reps.push(c);
        }
    }
    let mut acc = 0.0;
    for x in 0..n {
        let fixed = reps
            .iter()
            .filter(|c| {
                let y = c[0];
                // left cosets carry the action x·yH, right cosets Hy·x^{-1}
                let moved = if left { coset(g.mul(x, y)) } else { coset(g.mul(y, g.inv(x))) };
                &moved == *c
            })
            .count();
        acc += chi[x] * fixed as f64;
    }
    (acc / n as f64).round() as usize
}
