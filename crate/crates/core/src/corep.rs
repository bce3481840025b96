//! Matrix corepresentations, intertwiners, the F matrix and the
//! decomposition of comodules into irreducibles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Element, HopfAlgebraSpec};
use crate::error::{Error, Result};
use crate::haar::HaarFunctional;
use crate::linalg::{self, c, max_abs, max_abs_diff, CMat, CVec, C64, ONE, ZERO};
use crate::report::Report;

/// Relative singular-value cut used for intertwiner spaces.
pub const NULLSPACE_REL: f64 = 1e-9;
/// Relative gap below which eigenvalues are merged during decomposition.
pub const CLUSTER_REL: f64 = 1e-8;
const MAX_SPLIT_ATTEMPTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flag {
    Unknown,
    Yes,
    No,
}

impl From<bool> for Flag {
    fn from(b: bool) -> Self {
        if b {
            Flag::Yes
        } else {
            Flag::No
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FNormalization {
    /// Hermitian positive definite, scaled to `tr F = d`.
    HermitianPositive,
    /// Unit Frobenius norm with real positive trace.
    UnitFrobenius,
}

/// Intertwiner `F π = S²(π) F`.
#[derive(Clone, Debug)]
pub struct FMatrix {
    pub f: CMat,
    pub f_inv: CMat,
    pub normalization: FNormalization,
}

impl FMatrix {
    pub fn trace_f(&self) -> C64 {
        self.f.trace()
    }

    pub fn trace_f_inv(&self) -> C64 {
        self.f_inv.trace()
    }
}

/// A `d x d` matrix with entries in `A`, stored as one scalar matrix per
/// basis component: `π_jk = Σ_m comps[m][(j,k)] a_m`.
#[derive(Clone, Debug)]
pub struct Corepresentation {
    pub label: String,
    d: usize,
    comps: Vec<CMat>,
    pub verified: Flag,
    pub unitary: Flag,
    pub irreducible: Flag,
    pub f: Option<FMatrix>,
}

impl Corepresentation {
    pub fn from_components(label: impl Into<String>, comps: Vec<CMat>) -> Result<Self> {
        let d = comps.first().map(|m| m.nrows()).unwrap_or(0);
        if comps.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::Shape("components must be square of equal size".into()));
        }
        Ok(Corepresentation {
            label: label.into(),
            d,
            comps,
            verified: Flag::Unknown,
            unitary: Flag::Unknown,
            irreducible: Flag::Unknown,
            f: None,
        })
    }

    /// Entries given row-major as `d*d` elements of an `n`-dimensional algebra.
    pub fn from_entries(label: impl Into<String>, d: usize, n: usize, entries: &[Element]) -> Result<Self> {
        if entries.len() != d * d || entries.iter().any(|e| e.len() != n) {
            return Err(Error::Shape(format!("need {} entries of length {n}", d * d)));
        }
        let comps = (0..n).map(|m| CMat::from_fn(d, d, |j, k| entries[j * d + k][m])).collect();
        Corepresentation::from_components(label, comps)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn algebra_dim(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[CMat] {
        &self.comps
    }

    pub fn entry(&self, j: usize, k: usize) -> Element {
        CVec::from_iterator(self.comps.len(), self.comps.iter().map(|m| m[(j, k)]))
    }

    pub fn character(&self) -> Element {
        CVec::from_iterator(self.comps.len(), self.comps.iter().map(|m| m.trace()))
    }

    /// `T π T'` entrywise.
    pub fn transformed(&self, t: &CMat, t_right: &CMat) -> Corepresentation {
        let comps = self.comps.iter().map(|m| t * m * t_right).collect();
        let mut out = Corepresentation::from_components(self.label.clone(), comps).expect("shapes agree");
        out.verified = self.verified;
        out
    }

    /// Applies a linear map `A -> A` (matrix convention of the algebra) entrywise.
    pub fn map_entries(&self, op: &CMat) -> Corepresentation {
        let n = self.comps.len();
        let comps = (0..n)
            .map(|mp| {
                let mut acc = CMat::zeros(self.d, self.d);
                for m in 0..n {
                    let w = op[(mp, m)];
                    if w != ZERO {
                        acc += &self.comps[m] * w;
                    }
                }
                acc
            })
            .collect();
        Corepresentation::from_components(self.label.clone(), comps).expect("shapes agree")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn same_entries(&self, other: &Corepresentation, tol: f64) -> bool {
        self.d == other.d
            && self.comps.len() == other.comps.len()
            && self.comps.iter().zip(&other.comps).all(|(a, b)| max_abs_diff(a, b) <= tol)
    }

    pub fn f_matrix(&self) -> Result<&FMatrix> {
        self.f.as_ref().ok_or(Error::NoF)
    }
}

/// `Δ(π_jk) = Σ π_jl ⊗ π_lk` and `ε(π_jk) = δ_jk`.
pub fn verify_corep(spec: &HopfAlgebraSpec, pi: &Corepresentation, tol: f64) -> Report {
    let d = pi.dim();
    let n = spec.dim();
    let mut rep = Report::new(format!("corepresentation {}", pi.label));
    if pi.algebra_dim() != n {
        rep.push("algebra_dimension", f64::INFINITY, tol);
        return rep;
    }
    let (mut cop, mut cou): (f64, f64) = (0.0, 0.0);
    for j in 0..d {
        for k in 0..d {
            let lhs = spec.coproduct(&pi.entry(j, k));
            let rhs = CMat::from_fn(n, n, |p, q| (0..d).map(|l| pi.comps[p][(j, l)] * pi.comps[q][(l, k)]).sum());
            cop = cop.max(max_abs_diff(&lhs, &rhs));
            let want = if j == k { ONE } else { ZERO };
            cou = cou.max((spec.counit_of(&pi.entry(j, k)) - want).norm());
        }
    }
    rep.push("coproduct", cop, tol);
    rep.push("counit", cou, tol);
    rep
}

/// `S(π_jk) = π_kj*`, `Σ π_lj* π_lk = δ_jk 1` and `Σ π_jl π_kl* = δ_jk 1`.
pub fn check_unitary(spec: &HopfAlgebraSpec, pi: &Corepresentation, tol: f64) -> Report {
    let d = pi.dim();
    let mut rep = Report::new(format!("unitarity of {}", pi.label));
    let e: Vec<Element> = (0..d * d).map(|i| pi.entry(i / d, i % d)).collect();
    let es: Vec<Element> = e.iter().map(|x| spec.star(x)).collect();
    let one = spec.one();
    let (mut sr, mut a, mut b): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for j in 0..d {
        for k in 0..d {
            sr = sr.max(max_abs((spec.antipode(&e[j * d + k]) - &es[k * d + j]).iter()));
            let want = if j == k { one.clone() } else { CVec::zeros(spec.dim()) };
            let mut s1 = CVec::zeros(spec.dim());
            let mut s2 = CVec::zeros(spec.dim());
            for l in 0..d {
                s1 += spec.multiply(&es[l * d + j], &e[l * d + k]);
                s2 += spec.multiply(&e[j * d + l], &es[k * d + l]);
            }
            a = a.max(max_abs((s1 - &want).iter()));
            b = b.max(max_abs((s2 - &want).iter()));
        }
    }
    rep.push("antipode_is_conjugate_transpose", sr, tol);
    rep.push("columns_orthonormal", a, tol);
    rep.push("rows_orthonormal", b, tol);
    rep
}

/// Runs both checks and records the outcome in the flags.
pub fn certify(spec: &HopfAlgebraSpec, mut pi: Corepresentation, tol: f64) -> (Corepresentation, Report) {
    let mut rep = Report::new(format!("certificate of {}", pi.label));
    let v = verify_corep(spec, &pi, tol);
    pi.verified = v.passed().into();
    rep.absorb("corep", v);
    let u = check_unitary(spec, &pi, tol);
    pi.unitary = u.passed().into();
    rep.absorb("unitary", u);
    (pi, rep)
}

/// Basis of `{Φ : Φ π^V = π^W Φ}`, each `Φ` of shape `d_W x d_V`.
pub fn morphism_space(v: &Corepresentation, w: &Corepresentation) -> Vec<CMat> {
    let (dv, dw) = (v.dim(), w.dim());
    let n = v.algebra_dim();
    let nvar = dw * dv;
    let mut sys = CMat::zeros(n * dw * dv, nvar);
    for m in 0..n {
        let pv = &v.comps[m];
        let pw = &w.comps[m];
        for j in 0..dw {
            for k in 0..dv {
                let row = (m * dw + j) * dv + k;
                for l in 0..dv {
                    sys[(row, j * dv + l)] += pv[(l, k)];
                }
                for l in 0..dw {
                    sys[(row, l * dv + k)] -= pw[(j, l)];
                }
            }
        }
    }
    let scale = v.comps.iter().chain(&w.comps).fold(0.0f64, |m, x| m.max(max_abs(x.iter())));
    let null = linalg::canonical_basis(&linalg::nullspace_with_floor(&sys, NULLSPACE_REL, NULLSPACE_REL * scale));
    null.column_iter()
        .map(|col| CMat::from_fn(dw, dv, |a, b| col[a * dv + b]))
        .collect()
}

pub fn is_irreducible(pi: &Corepresentation) -> bool {
    morphism_space(pi, pi).len() == 1
}

/// `π‡ = S²(π)` entrywise.
pub fn doubly_contragredient(spec: &HopfAlgebraSpec, pi: &Corepresentation) -> Corepresentation {
    let s2 = spec.s_op() * spec.s_op();
    pi.map_entries(&s2).with_label(format!("{}‡", pi.label))
}

/// `π̄_jk = π_jk*`.
pub fn conjugate_corep(spec: &HopfAlgebraSpec, pi: &Corepresentation) -> Corepresentation {
    let entries: Vec<Element> = (0..pi.dim() * pi.dim())
        .map(|i| spec.star(&pi.entry(i / pi.dim(), i % pi.dim())))
        .collect();
    Corepresentation::from_entries(format!("{}bar", pi.label), pi.dim(), spec.dim(), &entries).expect("same shape")
}

/// The intertwiner from `π` to `S²(π)`, normalized.
pub fn compute_f(spec: &HopfAlgebraSpec, pi: &Corepresentation) -> Result<FMatrix> {
    let pdd = doubly_contragredient(spec, pi);
    let space = morphism_space(pi, &pdd);
    if space.len() != 1 {
        return Err(Error::NoF);
    }
    let f0 = &space[0];
    let tr = f0.trace();
    if tr.norm() < 1e-10 * f0.norm().max(1e-300) {
        return Err(Error::TraceZero);
    }
    let f1 = f0 * (tr.conj() / tr.norm());
    let hermitian = linalg::hermiticity_residual(&f1) < 1e-9 * f1.norm();
    let (f, normalization) = if hermitian && linalg::is_positive_definite(&f1, 1e-12, 1e-9 * f1.norm()) {
        let t = f1.trace().re;
        let mut f = &f1 * c(pi.dim() as f64 / t, 0.0);
        f = (&f + f.adjoint()) * c(0.5, 0.0);
        (f, FNormalization::HermitianPositive)
    } else {
        (&f1 * c(1.0 / f1.norm(), 0.0), FNormalization::UnitFrobenius)
    };
    let f_inv = linalg::inverse(&f)?;
    Ok(FMatrix { f, f_inv, normalization })
}

pub fn with_f(spec: &HopfAlgebraSpec, mut pi: Corepresentation) -> Result<Corepresentation> {
    pi.f = Some(compute_f(spec, &pi)?);
    Ok(pi)
}

/// `[h(a_j a_k)]`.
pub fn haar_products(spec: &HopfAlgebraSpec, haar: &HaarFunctional) -> CMat {
    let n = spec.dim();
    CMat::from_fn(n, n, |j, k| haar.eval(spec.basis_product(j, k)))
}

/// Haar orthogonality between two irreducible unitary coreps.
///
/// Identical representatives are checked against the F-matrix formulas,
/// inequivalent ones against zero.
pub fn verify_orthogonality(
    spec: &HopfAlgebraSpec,
    haar: &HaarFunctional,
    p: &Corepresentation,
    q: &Corepresentation,
    tol: f64,
) -> Result<Report> {
    let hp = haar_products(spec, haar);
    let same = p.same_entries(q, 1e-12);
    if !same && !morphism_space(p, q).is_empty() {
        return Err(Error::EquivalentRepresentatives(format!("{} and {}", p.label, q.label)));
    }
    let sq = q.map_entries(spec.s_op());
    let sp = p.map_entries(spec.s_op());
    let (dp, dq) = (p.dim(), q.dim());
    let hprod = |x: &Corepresentation, a: usize, b: usize, y: &Corepresentation, cc: usize, dd: usize| -> C64 {
        let xv = x.entry(a, b);
        let yv = y.entry(cc, dd);
        (xv.transpose() * &hp * yv)[(0, 0)]
    };
    let mut rep = Report::new(format!("orthogonality of {} and {}", p.label, q.label));
    let (mut r1, mut r2): (f64, f64) = (0.0, 0.0);
    let f = if same { Some(p.f_matrix()?) } else { None };
    for j in 0..dp {
        for k in 0..dp {
            for m in 0..dq {
                for nn in 0..dq {
                    let v1 = hprod(p, j, k, &sq, m, nn);
                    let v2 = hprod(&sp, j, k, q, m, nn);
                    let (w1, w2) = match f {
                        Some(f) if j == nn => (f.f[(m, k)] / f.trace_f(), f.f_inv[(m, k)] / f.trace_f_inv()),
                        _ => (ZERO, ZERO),
                    };
                    r1 = r1.max((v1 - w1).norm());
                    r2 = r2.max((v2 - w2).norm());
                }
            }
        }
    }
    rep.push("haar_pi_spi", r1, tol);
    rep.push("haar_spi_pi", r2, tol);
    Ok(rep)
}

/// Invariant inner product `G_jk = Σ_l h(π_lj* π_lk)` on the carrier.
pub fn invariant_gram(haar: &HaarFunctional, pi: &Corepresentation) -> CMat {
    let d = pi.dim();
    let g = &haar.gram.r;
    CMat::from_fn(d, d, |j, k| (0..d).map(|l| pi.entry(l, j).dotc(&(g * pi.entry(l, k)))).sum())
}

/// Unitary representative `R π R^{-1}` with `G = R^H R` the invariant Gram
/// matrix; returns it together with `R`.
pub fn unitarize(spec: &HopfAlgebraSpec, haar: &HaarFunctional, pi: &Corepresentation) -> Result<(Corepresentation, CMat)> {
    let g = invariant_gram(haar, pi);
    let r = linalg::cholesky_upper(&g)?;
    let rinv = linalg::inverse(&r)?;
    let mut out = pi.transformed(&r, &rinv);
    out.unitary = check_unitary(spec, &out, 1e-9).passed().into();
    Ok((out, r))
}

/// Invariant subspace of a comodule with the irreducible coaction on it.
#[derive(Clone, Debug)]
pub struct ComoduleBlock {
    /// Columns span the subspace, orthonormal for the given Gram matrix.
    pub basis: CMat,
    pub corep: Corepresentation,
}

/// Splits a comodule with invariant inner product `gram` into irreducible
/// orthogonal pieces using random self-adjoint elements of the commutant.
pub fn decompose_comodule(pi: &Corepresentation, gram: &CMat, seed: u64) -> Result<Vec<ComoduleBlock>> {
    let r = linalg::cholesky_upper(gram)?;
    let rinv = linalg::inverse(&r)?;
    let unitary = pi.transformed(&r, &rinv);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split(&unitary, &CMat::identity(pi.dim(), pi.dim()), &mut rng, &mut out)?;
    for b in &mut out {
        b.basis = &rinv * &b.basis;
    }
    Ok(out)
}

fn split(pi: &Corepresentation, basis: &CMat, rng: &mut ChaCha8Rng, out: &mut Vec<ComoduleBlock>) -> Result<()> {
    let comm = morphism_space(pi, pi);
    if comm.len() <= 1 {
        let mut p = pi.clone();
        p.irreducible = Flag::Yes;
        p.unitary = Flag::Yes;
        out.push(ComoduleBlock { basis: basis.clone(), corep: p });
        return Ok(());
    }
    for _ in 0..MAX_SPLIT_ATTEMPTS {
        let mut x = CMat::zeros(pi.dim(), pi.dim());
        for m in &comm {
            x += m * c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let (vals, vecs) = linalg::hermitian_eigen(&((&x + x.adjoint()) * c(0.5, 0.0)));
        let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(1e-300);
        let mut clusters: Vec<Vec<usize>> = vec![vec![0]];
        for i in 1..vals.len() {
            if vals[i] - vals[i - 1] <= CLUSTER_REL * scale {
                clusters.last_mut().expect("nonempty").push(i);
            } else {
                clusters.push(vec![i]);
            }
        }
        if clusters.len() < 2 {
            continue;
        }
        for cl in clusters {
            let cols: Vec<CVec> = cl.iter().map(|&i| vecs.column(i).into_owned()).collect();
            let w = CMat::from_columns(&cols);
            let sub = pi.transformed(&w.adjoint(), &w);
            split(&sub, &(basis * &w), rng, out)?;
        }
        return Ok(());
    }
    Err(Error::DecompositionStall(MAX_SPLIT_ATTEMPTS))
}

/// Lexicographic key of a character, rounded to suppress noise.
pub fn character_fingerprint(chi: &Element) -> Vec<(i64, i64)> {
    chi.iter()
        .map(|z| ((z.re * 1e8).round() as i64, (z.im * 1e8).round() as i64))
        .collect()
}

/// One representative per equivalence class of irreducible coreps, in
/// canonical order (dimension, trivial first, character fingerprint).
#[derive(Clone, Debug)]
pub struct IrrepTable {
    pub irreps: Vec<Corepresentation>,
    /// Multiplicity in the decomposed comodule.
    pub multiplicities: Vec<usize>,
    pub seed: u64,
}

impl IrrepTable {
    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn get(&self, i: usize) -> &Corepresentation {
        &self.irreps[i]
    }

    pub fn labels(&self) -> Vec<String> {
        self.irreps.iter().map(|p| p.label.clone()).collect()
    }

    /// Index of the irrep whose character equals `chi`.
    pub fn index_of_character(&self, chi: &Element, tol: f64) -> Option<usize> {
        self.irreps.iter().position(|p| max_abs((p.character() - chi).iter()) <= tol)
    }

    /// Resolves a label, a numeric index, or one of the aliases
    /// `trivial`, `sign` (unique nontrivial real 1-dim) and `std`
    /// (unique irrep of dimension > 1).
    pub fn find(&self, name: &str) -> Result<usize> {
        if let Some(i) = self.irreps.iter().position(|p| p.label == name) {
            return Ok(i);
        }
        if let Ok(i) = name.parse::<usize>() {
            if i < self.len() {
                return Ok(i);
            }
        }
        let unique = |f: &dyn Fn(&Corepresentation) -> bool| -> Option<usize> {
            let hits: Vec<usize> = (0..self.len()).filter(|&i| f(&self.irreps[i])).collect();
            (hits.len() == 1).then(|| hits[0])
        };
        let hit = match name {
            "triv" => unique(&|p| p.label == "trivial"),
            "sign" => unique(&|p| {
                p.dim() == 1 && p.label != "trivial" && p.character().iter().all(|z| z.im.abs() < 1e-9)
            }),
            "std" | "standard" => unique(&|p| p.dim() > 1),
            _ => None,
        };
        hit.ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }
}

/// Right regular coaction as a corepresentation on `A`:
/// `Δ(a_j) = Σ_k a_k ⊗ π_kj`.
pub fn right_regular_corep(spec: &HopfAlgebraSpec) -> Corepresentation {
    let n = spec.dim();
    let comps = (0..n).map(|m| CMat::from_fn(n, n, |k, j| spec.comult(j, k, m))).collect();
    Corepresentation::from_components("right regular", comps).expect("square")
}

/// Decomposes the right regular comodule and tabulates the irreps.
pub fn build_irrep_table(spec: &HopfAlgebraSpec, haar: &HaarFunctional, seed: u64) -> Result<IrrepTable> {
    let reg = right_regular_corep(spec);
    let blocks = decompose_comodule(&reg, &haar.gram.r, seed)?;
    let mut reps: Vec<Corepresentation> = Vec::new();
    let mut mult: Vec<usize> = Vec::new();
    for b in blocks {
        let chi = b.corep.character();
        match reps.iter().position(|p| max_abs((p.character() - &chi).iter()) < 1e-8) {
            Some(i) => mult[i] += 1,
            None => {
                reps.push(b.corep);
                mult.push(1);
            }
        }
    }
    let one = spec.one();
    let key = |p: &Corepresentation| {
        let chi = p.character();
        let trivial = max_abs((&chi - &one).iter()) < 1e-8;
        (p.dim(), !trivial, character_fingerprint(&chi))
    };
    let mut order: Vec<usize> = (0..reps.len()).collect();
    order.sort_by_key(|&i| key(&reps[i]));
    let mut irreps = Vec::new();
    let mut multiplicities = Vec::new();
    let mut per_dim: std::collections::BTreeMap<usize, u8> = Default::default();
    for i in order {
        let mut p = reps[i].clone();
        let trivial = !key(&p).1;
        let label = if trivial {
            "trivial".to_string()
        } else {
            let cnt = per_dim.entry(p.dim()).or_insert(0);
            let l = format!("{}{}", p.dim(), (b'a' + *cnt) as char);
            *cnt += 1;
            l
        };
        p.label = label;
        let (mut p, _) = certify(spec, p, 1e-9);
        p.irreducible = Flag::Yes;
        p = with_f(spec, p)?;
        irreps.push(p);
        multiplicities.push(mult[i]);
    }
    Ok(IrrepTable { irreps, multiplicities, seed })
}

/// Dimension and multiplicity bookkeeping of the regular decomposition.
pub fn peter_weyl_report(spec: &HopfAlgebraSpec, table: &IrrepTable) -> Report {
    let mut rep = Report::new("regular decomposition");
    let n = spec.dim() as f64;
    let sum_sq: usize = table.irreps.iter().map(|p| p.dim() * p.dim()).sum();
    let sum_md: usize = table.irreps.iter().zip(&table.multiplicities).map(|(p, m)| p.dim() * m).sum();
    let mism = table.irreps.iter().zip(&table.multiplicities).filter(|(p, m)| p.dim() != **m).count();
    rep.push("sum_of_squared_dimensions", (sum_sq as f64 - n).abs(), 0.0);
    rep.push("sum_of_multiplicity_times_dimension", (sum_md as f64 - n).abs(), 0.0);
    rep.push("multiplicity_equals_dimension", mism as f64, 0.0);
    rep
}
