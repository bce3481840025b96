//! Finite-dimensional Hopf *-algebras given by structure constants.
//!
//! Elements are coefficient vectors in the basis `a_0..a_{n-1}`; elements of
//! `A ⊗ A` are `n x n` matrices `t` standing for `Σ t[j][k] a_j ⊗ a_k`.
//! Linear maps `A -> A` are `n x n` matrices `O` with `O(a_j) = Σ_k O[k][j] a_k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{c, max_abs, max_abs_diff, CMat, CVec, C64, ONE, ZERO};
use crate::report::Report;

pub type Element = CVec;
pub type TensorElement = CMat;

/// Which regular coaction (right `Δ` or left `σ(S⊗id)Δ`) a construction uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    R,
    L,
}

/// Ordinary or twisted tensor-operator conventions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Ordinary,
    Twisted,
}

impl Side {
    pub const ALL: [Side; 2] = [Side::R, Side::L];
}

impl Kind {
    pub const ALL: [Kind; 2] = [Kind::Ordinary, Kind::Twisted];
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::R => "R",
            Side::L => "L",
        })
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::Ordinary => "ordinary",
            Kind::Twisted => "twisted",
        })
    }
}

/// Linear functional `A -> C`, `f(a_j) = values[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional(pub CVec);

impl LinearFunctional {
    pub fn eval(&self, x: &Element) -> C64 {
        self.0.iter().zip(x.iter()).map(|(a, b)| a * b).sum()
    }

    /// `(f ⊗ id)(t)`.
    pub fn apply_left(&self, t: &TensorElement) -> Element {
        t.transpose() * &self.0
    }

    /// `(id ⊗ f)(t)`.
    pub fn apply_right(&self, t: &TensorElement) -> Element {
        t * &self.0
    }

    /// `(f ⊗ f)(t)`.
    pub fn apply_both(&self, t: &TensorElement) -> C64 {
        self.eval(&self.apply_right(t))
    }
}

/// Structure constants of a Hopf *-algebra with its cached derived maps.
#[derive(Clone, Debug)]
pub struct HopfAlgebraSpec {
    pub label: String,
    n: usize,
    /// `prod[j*n+k]` is `a_j a_k`.
    prod: Vec<CVec>,
    /// `coprod[l]` is `Δ(a_l)`.
    coprod: Vec<CMat>,
    antipode: CMat,
    counit: CVec,
    unit: CVec,
    star: CMat,
    s_op: CMat,
    sinv_op: CMat,
}

impl HopfAlgebraSpec {
    /// `mult[(j*n+k)*n+l]` is the coefficient of `a_l` in `a_j a_k`,
    /// `comult[(l*n+j)*n+k]` that of `a_j ⊗ a_k` in `Δ(a_l)`.
    /// `antipode[(j,k)]` is the coefficient of `a_k` in `S(a_j)`, and
    /// `(Σ x_j a_j)* = Σ conj(x_j) star[(j,k)] a_k`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        label: impl Into<String>,
        n: usize,
        mult: &[C64],
        comult: &[C64],
        antipode: CMat,
        counit: CVec,
        unit: CVec,
        star: CMat,
    ) -> Result<Self> {
        let n3 = n * n * n;
        if n == 0 {
            return Err(Error::Shape("dimension must be positive".into()));
        }
        if mult.len() != n3 || comult.len() != n3 {
            return Err(Error::Shape(format!("structure tensors need {n3} entries")));
        }
        if antipode.shape() != (n, n) || star.shape() != (n, n) {
            return Err(Error::Shape("antipode and star must be n x n".into()));
        }
        if counit.len() != n || unit.len() != n {
            return Err(Error::Shape("counit and unit must have length n".into()));
        }
        let prod = (0..n * n)
            .map(|jk| CVec::from_iterator(n, (0..n).map(|l| mult[jk * n + l])))
            .collect();
        let coprod = (0..n)
            .map(|l| CMat::from_fn(n, n, |j, k| comult[(l * n + j) * n + k]))
            .collect();
        let s_op = antipode.transpose();
        let sinv_op = match s_op.clone().try_inverse() {
            Some(m) => m,
            None => star_conjugated(&star, &s_op),
        };
        Ok(HopfAlgebraSpec { label: label.into(), n, prod, coprod, antipode, counit, unit, star, s_op, sinv_op })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mult(&self, j: usize, k: usize, l: usize) -> C64 {
        self.prod[j * self.n + k][l]
    }

    pub fn comult(&self, l: usize, j: usize, k: usize) -> C64 {
        self.coprod[l][(j, k)]
    }

    pub fn antipode_matrix(&self) -> &CMat {
        &self.antipode
    }

    pub fn star_matrix(&self) -> &CMat {
        &self.star
    }

    pub fn counit_vector(&self) -> &CVec {
        &self.counit
    }

    pub fn unit_vector(&self) -> &CVec {
        &self.unit
    }

    pub fn counit(&self) -> LinearFunctional {
        LinearFunctional(self.counit.clone())
    }

    /// Largest modulus over all structure constants.
    pub fn scale(&self) -> f64 {
        let mut m = max_abs(self.antipode.iter())
            .max(max_abs(self.star.iter()))
            .max(max_abs(self.counit.iter()))
            .max(max_abs(self.unit.iter()));
        for p in &self.prod {
            m = m.max(max_abs(p.iter()));
        }
        for t in &self.coprod {
            m = m.max(max_abs(t.iter()));
        }
        m
    }

    pub fn basis(&self, j: usize) -> Element {
        let mut e = CVec::zeros(self.n);
        e[j] = ONE;
        e
    }

    pub fn one(&self) -> Element {
        self.unit.clone()
    }

    pub fn basis_product(&self, j: usize, k: usize) -> &CVec {
        &self.prod[j * self.n + k]
    }

    pub fn basis_coproduct(&self, l: usize) -> &CMat {
        &self.coprod[l]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = CVec::zeros(self.n);
        for j in 0..self.n {
            if x[j] == ZERO {
                continue;
            }
            for k in 0..self.n {
                let w = x[j] * y[k];
                if w != ZERO {
                    out.axpy(w, &self.prod[j * self.n + k], ONE);
                }
            }
        }
        out
    }

    /// Matrix of `a ↦ x a`.
    pub fn left_mult_op(&self, x: &Element) -> CMat {
        let n = self.n;
        CMat::from_fn(n, n, |l, k| (0..n).map(|j| x[j] * self.prod[j * n + k][l]).sum())
    }

    /// Matrix of `a ↦ a y`.
    pub fn right_mult_op(&self, y: &Element) -> CMat {
        let n = self.n;
        CMat::from_fn(n, n, |l, j| (0..n).map(|k| y[k] * self.prod[j * n + k][l]).sum())
    }

    pub fn coproduct(&self, x: &Element) -> TensorElement {
        let mut out = CMat::zeros(self.n, self.n);
        for l in 0..self.n {
            if x[l] != ZERO {
                out += &self.coprod[l] * x[l];
            }
        }
        out
    }

    pub fn antipode(&self, x: &Element) -> Element {
        &self.s_op * x
    }

    pub fn antipode_inv(&self, x: &Element) -> Element {
        &self.sinv_op * x
    }

    pub fn s_op(&self) -> &CMat {
        &self.s_op
    }

    pub fn sinv_op(&self) -> &CMat {
        &self.sinv_op
    }

    pub fn star(&self, x: &Element) -> Element {
        self.star.transpose() * x.map(|z| z.conj())
    }

    pub fn counit_of(&self, x: &Element) -> C64 {
        self.counit.iter().zip(x.iter()).map(|(a, b)| a * b).sum()
    }

    /// `M(t)`.
    pub fn mult_tensor(&self, t: &TensorElement) -> Element {
        let mut out = CVec::zeros(self.n);
        for j in 0..self.n {
            for k in 0..self.n {
                let w = t[(j, k)];
                if w != ZERO {
                    out.axpy(w, &self.prod[j * self.n + k], ONE);
                }
            }
        }
        out
    }

    /// `(x ⊗ y)` as a tensor.
    pub fn outer(x: &Element, y: &Element) -> TensorElement {
        x * y.transpose()
    }

    /// Product in `A ⊗ A` with the componentwise multiplication.
    pub fn tensor_multiply(&self, t: &TensorElement, u: &TensorElement) -> TensorElement {
        let n = self.n;
        let mut out = CMat::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                let a = t[(p, q)];
                if a == ZERO {
                    continue;
                }
                for s in 0..n {
                    for tt in 0..n {
                        let b = u[(s, tt)];
                        if b == ZERO {
                            continue;
                        }
                        let x = &self.prod[p * n + s];
                        let y = &self.prod[q * n + tt];
                        out += (x * y.transpose()) * (a * b);
                    }
                }
            }
        }
        out
    }

    /// Product in `A ⊗ A` with the second legs multiplied in reverse,
    /// `(x ⊗ y)(x' ⊗ y') = x x' ⊗ y' y`.
    pub fn tensor_multiply_twisted(&self, t: &TensorElement, u: &TensorElement) -> TensorElement {
        let n = self.n;
        let mut out = CMat::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                let a = t[(p, q)];
                if a == ZERO {
                    continue;
                }
                for s in 0..n {
                    for tt in 0..n {
                        let b = u[(s, tt)];
                        if b == ZERO {
                            continue;
                        }
                        let x = &self.prod[p * n + s];
                        let y = &self.prod[tt * n + q];
                        out += (x * y.transpose()) * (a * b);
                    }
                }
            }
        }
        out
    }

    /// `(*⊗*)(t)`.
    pub fn star_tensor(&self, t: &TensorElement) -> TensorElement {
        self.star.transpose() * t.map(|z| z.conj()) * &self.star
    }

    /// `(O ⊗ P)(t)` for linear maps given as matrices.
    pub fn apply_ops(o: &CMat, p: &CMat, t: &TensorElement) -> TensorElement {
        o * t * p.transpose()
    }
}

/// Matrix of `* ∘ O ∘ *`.
fn star_conjugated(star: &CMat, op: &CMat) -> CMat {
    let st_t = star.transpose();
    &st_t * op.map(|z| z.conj()) * st_t.map(|z| z.conj())
}

fn scaled(tol: f64, spec: &HopfAlgebraSpec) -> f64 {
    tol * spec.scale().max(1.0)
}

/// Residuals of the Hopf algebra axioms; `tol` is scaled by the largest
/// structure-constant modulus.
pub fn verify_hopf_axioms(spec: &HopfAlgebraSpec, tol: f64) -> Report {
    let n = spec.n;
    let t = scaled(tol, spec);
    let mut rep = Report::new(format!("Hopf axioms of {}", spec.label));
    let e: Vec<Element> = (0..n).map(|j| spec.basis(j)).collect();
    let one = spec.one();

    let mut assoc: f64 = 0.0;
    for j in 0..n {
        for k in 0..n {
            let jk = spec.basis_product(j, k).clone();
            for l in 0..n {
                let lhs = spec.multiply(&jk, &e[l]);
                let rhs = spec.multiply(&e[j], spec.basis_product(k, l));
                assoc = assoc.max(max_abs((lhs - rhs).iter()));
            }
        }
    }
    rep.push("associativity", assoc, t);

    let mut coassoc: f64 = 0.0;
    for l in 0..n {
        let d = spec.basis_coproduct(l);
        for j in 0..n {
            for k in 0..n {
                for tt in 0..n {
                    let lhs: C64 = (0..n).map(|s| d[(s, tt)] * spec.comult(s, j, k)).sum();
                    let rhs: C64 = (0..n).map(|s| d[(j, s)] * spec.comult(s, k, tt)).sum();
                    coassoc = coassoc.max((lhs - rhs).norm());
                }
            }
        }
    }
    rep.push("coassociativity", coassoc, t);

    let mut bialg: f64 = 0.0;
    let mut eps_mult: f64 = 0.0;
    let mut s_anti: f64 = 0.0;
    for j in 0..n {
        for k in 0..n {
            let p = spec.basis_product(j, k);
            let lhs = spec.coproduct(p);
            let rhs = spec.tensor_multiply(spec.basis_coproduct(j), spec.basis_coproduct(k));
            bialg = bialg.max(max_abs_diff(&lhs, &rhs));
            eps_mult = eps_mult.max((spec.counit_of(p) - spec.counit[j] * spec.counit[k]).norm());
            let sl = spec.antipode(p);
            let sr = spec.multiply(&spec.antipode(&e[k]), &spec.antipode(&e[j]));
            s_anti = s_anti.max(max_abs((sl - sr).iter()));
        }
    }
    rep.push("coproduct_multiplicative", bialg, t);
    rep.push("counit_multiplicative", eps_mult, t);

    let mut counit_law: f64 = 0.0;
    let mut unit_law: f64 = 0.0;
    let mut s_coanti: f64 = 0.0;
    let mut s_conv: f64 = 0.0;
    let mut eps_s: f64 = 0.0;
    let eps = spec.counit();
    for l in 0..n {
        let d = spec.basis_coproduct(l);
        counit_law = counit_law
            .max(max_abs((eps.apply_left(d) - &e[l]).iter()))
            .max(max_abs((eps.apply_right(d) - &e[l]).iter()));
        unit_law = unit_law
            .max(max_abs((spec.multiply(&one, &e[l]) - &e[l]).iter()))
            .max(max_abs((spec.multiply(&e[l], &one) - &e[l]).iter()));
        let lhs = spec.coproduct(&spec.antipode(&e[l]));
        let rhs = HopfAlgebraSpec::apply_ops(&spec.s_op, &spec.s_op, &d.transpose());
        s_coanti = s_coanti.max(max_abs_diff(&lhs, &rhs));
        let target = &one * spec.counit[l];
        let left = spec.mult_tensor(&(&spec.s_op * d));
        let right = spec.mult_tensor(&(d * spec.s_op.transpose()));
        s_conv = s_conv
            .max(max_abs((left - &target).iter()))
            .max(max_abs((right - &target).iter()));
        eps_s = eps_s.max((spec.counit_of(&spec.antipode(&e[l])) - spec.counit[l]).norm());
    }
    rep.push("counit_laws", counit_law, t);
    rep.push("unit_laws", unit_law, t);
    let unit_cop = max_abs_diff(&spec.coproduct(&one), &HopfAlgebraSpec::outer(&one, &one));
    rep.push("unit_coproduct", unit_cop, t);
    rep.push("unit_counit", (spec.counit_of(&one) - ONE).norm(), t);
    rep.push("antipode_anti_multiplicative", s_anti, t);
    rep.push("antipode_anti_comultiplicative", s_coanti, t);
    rep.push("antipode_convolution", s_conv, t);
    rep.push("counit_antipode", eps_s, t);
    rep.push("antipode_unit", max_abs((spec.antipode(&one) - &one).iter()), t);
    rep
}

/// Residuals of the *-structure axioms.
pub fn verify_star_axioms(spec: &HopfAlgebraSpec, tol: f64) -> Report {
    let n = spec.n;
    let t = scaled(tol, spec);
    let mut rep = Report::new(format!("star axioms of {}", spec.label));
    let e: Vec<Element> = (0..n).map(|j| spec.basis(j)).collect();
    let one = spec.one();
    // probe with a complex multiple to catch linear (not antilinear) stars
    let z = c(0.3, 0.7);
    let mut invol: f64 = 0.0;
    let mut anti: f64 = 0.0;
    let mut cop: f64 = 0.0;
    let mut cou: f64 = 0.0;
    let mut s_star: f64 = 0.0;
    let mut inv: f64 = 0.0;
    for j in 0..n {
        let x = &e[j] * z;
        invol = invol.max(max_abs((spec.star(&spec.star(&x)) - &x).iter()));
        let xs = spec.star(&x);
        cop = cop.max(max_abs_diff(&spec.coproduct(&xs), &spec.star_tensor(&spec.coproduct(&x))));
        cou = cou.max((spec.counit_of(&xs) - spec.counit_of(&x).conj()).norm());
        let round = spec.star(&spec.antipode(&spec.star(&spec.antipode(&x))));
        s_star = s_star.max(max_abs((round - &x).iter()));
        for k in 0..n {
            let lhs = spec.star(spec.basis_product(j, k));
            let rhs = spec.multiply(&spec.star(&e[k]), &spec.star(&e[j]));
            anti = anti.max(max_abs((lhs - rhs).iter()));
        }
    }
    rep.push("star_involution", invol, t);
    rep.push("star_anti_multiplicative", anti, t);
    rep.push("star_coproduct", cop, t);
    rep.push("star_counit", cou, t);
    rep.push("antipode_star_involution", s_star, t);
    inv = inv.max(max_abs_diff(&star_conjugated(&spec.star, &spec.s_op), &spec.sinv_op));
    rep.push("antipode_inverse_via_star", inv, t);
    rep.push("star_unit", max_abs((spec.star(&one) - &one).iter()), t);
    rep
}

/// Both axiom reports in one.
pub fn verify_all_axioms(spec: &HopfAlgebraSpec, tol: f64) -> Report {
    let mut rep = Report::new(format!("axioms of {}", spec.label));
    rep.absorb("hopf", verify_hopf_axioms(spec, tol));
    rep.absorb("star", verify_star_axioms(spec, tol));
    rep
}

/// The dual Hopf *-algebra in the dual basis `a^j`, `<a^j, a_k> = δ_jk`.
pub fn build_dual(spec: &HopfAlgebraSpec) -> HopfAlgebraSpec {
    let n = spec.n;
    let mut mult = vec![ZERO; n * n * n];
    let mut comult = vec![ZERO; n * n * n];
    for j in 0..n {
        for k in 0..n {
            for l in 0..n {
                mult[(j * n + k) * n + l] = spec.comult(l, j, k);
                comult[(l * n + j) * n + k] = spec.mult(j, k, l);
            }
        }
    }
    let antipode = spec.antipode.transpose();
    // <x*, a> = conj <x, S(a)*>
    let cols: Vec<CVec> = (0..n).map(|k| spec.star(&spec.antipode(&spec.basis(k)))).collect();
    let star = CMat::from_fn(n, n, |j, k| cols[k][j].conj());
    HopfAlgebraSpec::new(
        format!("dual of {}", spec.label),
        n,
        &mult,
        &comult,
        antipode,
        spec.unit.clone(),
        spec.counit.clone(),
        star,
    )
    .expect("shapes carried over")
}

/// Checks that the identity pairing between `spec` and `dual` intertwines
/// every structure map.
pub fn verify_dual_pairing(spec: &HopfAlgebraSpec, dual: &HopfAlgebraSpec, tol: f64) -> Report {
    let n = spec.n;
    let t = scaled(tol, spec);
    let mut rep = Report::new("dual pairing");
    if dual.n != n {
        rep.push("dimension", f64::INFINITY, t);
        return rep;
    }
    let pair = |x: &CVec, a: &CVec| -> C64 { x.iter().zip(a.iter()).map(|(p, q)| p * q).sum() };
    let pair2 = |x: &CMat, a: &CMat| -> C64 { x.iter().zip(a.iter()).map(|(p, q)| p * q).sum() };
    let (mut m, mut d, mut s, mut st) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for j in 0..n {
        let xj = dual.basis(j);
        for k in 0..n {
            let xk = dual.basis(k);
            let xy = dual.multiply(&xj, &xk);
            for l in 0..n {
                let al = spec.basis(l);
                // <xy, a> = <x ⊗ y, Δa>
                let lhs = pair(&xy, &al);
                let rhs = pair2(&HopfAlgebraSpec::outer(&xj, &xk), &spec.coproduct(&al));
                m = m.max((lhs - rhs).norm());
                // <Δx, a ⊗ b> = <x, ab>
                let ak = spec.basis(k);
                let lhs = pair2(&dual.coproduct(&spec.basis(l)), &HopfAlgebraSpec::outer(&spec.basis(j), &ak));
                let rhs = pair(&spec.basis(l), spec.basis_product(j, k));
                d = d.max((lhs - rhs).norm());
            }
            let ak = spec.basis(k);
            s = s.max((pair(&dual.antipode(&xj), &ak) - pair(&xj, &spec.antipode(&ak))).norm());
            let lhs = pair(&dual.star(&xj), &ak);
            let rhs = pair(&xj, &spec.star(&spec.antipode(&ak))).conj();
            st = st.max((lhs - rhs).norm());
        }
    }
    rep.push("pairing_multiplication", m, t);
    rep.push("pairing_comultiplication", d, t);
    rep.push("pairing_antipode", s, t);
    let unit = (0..n).map(|k| (pair(&dual.one(), &spec.basis(k)) - spec.counit[k]).norm()).fold(0.0, f64::max);
    let counit = (0..n).map(|k| (dual.counit_of(&dual.basis(k)) - spec.unit[k]).norm()).fold(0.0, f64::max);
    rep.push("pairing_unit", unit, t);
    rep.push("pairing_counit", counit, t);
    rep.push("pairing_star", st, t);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::{self, Construction};

    fn all() -> Vec<HopfAlgebraSpec> {
        builtins::standard_suite()
    }

    #[test]
    fn builtins_satisfy_axioms() {
        for a in all() {
            let r = verify_all_axioms(&a, 1e-12);
            assert!(r.passed(), "{}: {:?}", a.label, r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn broken_associativity_is_reported() {
        let g = builtins::cyclic(2);
        let a = builtins::build(&g, Construction::Function);
        let n = a.dim();
        let mut mult = vec![ZERO; n * n * n];
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    mult[(j * n + k) * n + l] = a.mult(j, k, l);
                }
            }
        }
        mult[n] += 0.5;
        let mut comult = vec![ZERO; n * n * n];
        for l in 0..n {
            for j in 0..n {
                for k in 0..n {
                    comult[(l * n + j) * n + k] = a.comult(l, j, k);
                }
            }
        }
        let b = HopfAlgebraSpec::new(
            "bad",
            n,
            &mult,
            &comult,
            a.antipode_matrix().clone(),
            a.counit_vector().clone(),
            a.unit_vector().clone(),
            a.star_matrix().clone(),
        )
        .unwrap();
        let r = verify_hopf_axioms(&b, 1e-12);
        assert!(r.get("associativity").unwrap().residual > 0.1);
    }

    #[test]
    fn dual_of_group_algebra_is_function_algebra() {
        let g = builtins::s3();
        let ga = builtins::build(&g, Construction::Group);
        let fa = builtins::build(&g, Construction::Function);
        let d = build_dual(&ga);
        let n = ga.dim();
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    assert!((d.mult(j, k, l) - fa.mult(j, k, l)).norm() < 1e-15);
                    assert!((d.comult(l, j, k) - fa.comult(l, j, k)).norm() < 1e-15);
                }
            }
        }
        assert!(max_abs_diff(d.star_matrix(), fa.star_matrix()) < 1e-15);
        assert!(max_abs_diff(d.antipode_matrix(), fa.antipode_matrix()) < 1e-15);
    }

    #[test]
    fn dual_pairing_and_double_dual() {
        for a in all() {
            let d = build_dual(&a);
            assert!(verify_all_axioms(&d, 1e-12).passed(), "{}", a.label);
            assert!(verify_dual_pairing(&a, &d, 1e-12).passed(), "{}", a.label);
            let dd = build_dual(&d);
            assert!(max_abs_diff(dd.star_matrix(), a.star_matrix()) < 1e-14);
            assert!(max_abs_diff(dd.antipode_matrix(), a.antipode_matrix()) < 1e-14);
        }
    }

    #[test]
    fn shape_errors() {
        let r = HopfAlgebraSpec::new("x", 2, &[ZERO; 7], &[ZERO; 8], CMat::zeros(2, 2), CVec::zeros(2), CVec::zeros(2), CMat::zeros(2, 2));
        assert!(matches!(r, Err(Error::Shape(_))));
    }
}
