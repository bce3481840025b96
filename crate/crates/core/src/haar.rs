//! Haar functional and the two invariant inner products on `A`.

use crate::algebra::{Element, HopfAlgebraSpec, LinearFunctional, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, max_abs, CMat, CVec, C64, ONE};
use crate::report::Report;

/// Relative cut for the smallest Gram eigenvalue.
pub const POSITIVITY_REL: f64 = 1e-10;

/// Gram matrices `G^R[j][k] = h(a_j* a_k)` and `G^L[j][k] = h(a_k (S²a_j)*)`.
#[derive(Clone, Debug)]
pub struct GramPair {
    pub r: CMat,
    pub l: CMat,
}

impl GramPair {
    pub fn side(&self, side: Side) -> &CMat {
        match side {
            Side::R => &self.r,
            Side::L => &self.l,
        }
    }

    /// `(x, y)^X`, antilinear in `x`.
    pub fn inner(&self, side: Side, x: &Element, y: &Element) -> C64 {
        x.dotc(&(self.side(side) * y))
    }
}

#[derive(Clone, Debug)]
pub struct HaarFunctional {
    pub h: LinearFunctional,
    pub gram: GramPair,
    pub certificates: Report,
}

impl HaarFunctional {
    pub fn eval(&self, x: &Element) -> C64 {
        self.h.eval(x)
    }
}

pub fn gram_matrices(spec: &HopfAlgebraSpec, h: &LinearFunctional) -> GramPair {
    let n = spec.dim();
    let stars: Vec<Element> = (0..n).map(|j| spec.star(&spec.basis(j))).collect();
    let s2stars: Vec<Element> = (0..n)
        .map(|j| spec.star(&spec.antipode(&spec.antipode(&spec.basis(j)))))
        .collect();
    let r = CMat::from_fn(n, n, |j, k| h.eval(&spec.multiply(&stars[j], &spec.basis(k))));
    let l = CMat::from_fn(n, n, |j, k| h.eval(&spec.multiply(&spec.basis(k), &s2stars[j])));
    GramPair { r, l }
}

/// Solves the invariance equations for `h` and certifies the result.
pub fn solve_haar(spec: &HopfAlgebraSpec, tol: f64) -> Result<HaarFunctional> {
    let n = spec.dim();
    let u = spec.unit_vector();
    // (h ⊗ id)Δ(a_l) = h(a_l) 1 and (id ⊗ h)Δ(a_l) = h(a_l) 1
    let mut sys = CMat::zeros(2 * n * n, n);
    for l in 0..n {
        let d = spec.basis_coproduct(l);
        for k in 0..n {
            let row = l * n + k;
            for j in 0..n {
                sys[(row, j)] += d[(j, k)];
            }
            sys[(row, l)] -= u[k];
        }
        for j in 0..n {
            let row = n * n + l * n + j;
            for k in 0..n {
                sys[(row, k)] += d[(j, k)];
            }
            sys[(row, l)] -= u[j];
        }
    }
    let null = linalg::nullspace(&sys, 1e-9);
    match null.ncols() {
        0 => return Err(Error::NoHaar),
        1 => {}
        d => return Err(Error::NonUniqueHaar(d)),
    }
    let v: CVec = null.column(0).into_owned();
    let norm: C64 = u.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
    if norm.norm() < 1e-12 {
        return Err(Error::NoHaar);
    }
    let h = LinearFunctional(v / norm);
    let gram = gram_matrices(spec, &h);
    let mut cert = haar_certificates(spec, &h, &gram, tol);
    for side in Side::ALL {
        if !linalg::is_positive_definite(gram.side(side), POSITIVITY_REL, tol.max(1e-12)) {
            let (lo, hi) = linalg::eig_range(gram.side(side));
            return Err(Error::Positivity(format!("{side} Gram eigenvalues in [{lo:.3e}, {hi:.3e}]")));
        }
    }
    cert.title = format!("Haar functional of {}", spec.label);
    Ok(HaarFunctional { h, gram, certificates: cert })
}

/// Normalization, invariance, positivity, reality and `S`-invariance of `h`.
pub fn haar_certificates(spec: &HopfAlgebraSpec, h: &LinearFunctional, gram: &GramPair, tol: f64) -> Report {
    let n = spec.dim();
    let mut rep = Report::new("Haar certificates");
    rep.push("normalization", (h.eval(&spec.one()) - ONE).norm(), tol);
    let (mut left, mut right, mut real, mut sinv): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for l in 0..n {
        let a = spec.basis(l);
        let d = spec.basis_coproduct(l);
        let target = spec.one() * h.eval(&a);
        left = left.max(max_abs((h.apply_left(d) - &target).iter()));
        right = right.max(max_abs((h.apply_right(d) - &target).iter()));
        let z = a * C64::new(0.6, 0.8);
        real = real.max((h.eval(&spec.star(&z)) - h.eval(&z).conj()).norm());
        sinv = sinv.max((h.eval(&spec.antipode(&z)) - h.eval(&z)).norm());
    }
    rep.push("left_invariance", left, tol);
    rep.push("right_invariance", right, tol);
    rep.push("star_reality", real, tol);
    rep.push("antipode_invariance", sinv, tol);
    for side in Side::ALL {
        let g = gram.side(side);
        rep.push(format!("gram_{side}_hermitian"), linalg::hermiticity_residual(g), tol);
        let (lo, hi) = linalg::eig_range(g);
        rep.push_exceeds(format!("gram_{side}_min_eigenvalue_ratio"), lo / hi.max(1e-300), POSITIVITY_REL);
    }
    rep
}

/// The two Haar exchange lemmas and `h = (h ⊗ h) ∘ π^X` on all basis pairs.
pub fn verify_haar_lemmas(spec: &HopfAlgebraSpec, h: &LinearFunctional, tol: f64) -> Report {
    let n = spec.dim();
    let mut rep = Report::new("Haar lemmas");
    let hp = CMat::from_fn(n, n, |j, k| h.eval(spec.basis_product(j, k)));
    let sop = spec.s_op();
    let (mut ex1, mut ex2): (f64, f64) = (0.0, 0.0);
    for j in 0..n {
        let dj = spec.basis_coproduct(j);
        for k in 0..n {
            let dk = spec.basis_coproduct(k);
            // Σ h(a b_(1)) S(b_(2)) = Σ h(a_(1) b) a_(2)
            let mut lhs = CVec::zeros(n);
            let mut rhs = CVec::zeros(n);
            // Σ h(b_(2) a) S(b_(1)) = Σ h(b a_(2)) a_(1)
            let mut lhs2 = CVec::zeros(n);
            let mut rhs2 = CVec::zeros(n);
            for p in 0..n {
                for q in 0..n {
                    let ck = dk[(p, q)];
                    if ck != C64::new(0.0, 0.0) {
                        lhs += sop.column(q) * (ck * hp[(j, p)]);
                        lhs2 += sop.column(p) * (ck * hp[(q, j)]);
                    }
                    let cj = dj[(p, q)];
                    if cj != C64::new(0.0, 0.0) {
                        rhs[q] += cj * hp[(p, k)];
                        rhs2[p] += cj * hp[(k, q)];
                    }
                }
            }
            ex1 = ex1.max(max_abs((lhs - rhs).iter()));
            ex2 = ex2.max(max_abs((lhs2 - rhs2).iter()));
        }
    }
    rep.push("exchange_coproduct_right", ex1, tol);
    rep.push("exchange_coproduct_left", ex2, tol);
    for side in Side::ALL {
        let mut r: f64 = 0.0;
        for l in 0..n {
            let a = spec.basis(l);
            let t = crate::regular::regular_coaction(spec, side, &a);
            r = r.max((h.apply_both(&t) - h.eval(&a)).norm());
        }
        rep.push(format!("haar_factorizes_{side}"), r, tol);
    }
    rep
}
