//! Irreducible tensor operators (ordinary/twisted, right/left) and the
//! coactions on operator space.
//!
//! Operators act on a [`Carrier`]: either `A` itself or a subspace of `A`
//! that carries the restricted regular coaction. All of `L(A)` is admitted.

use crate::algebra::{Element, HopfAlgebraSpec, Kind, Side};
use crate::cg::CgSystem;
use crate::corep::{Corepresentation, IrrepTable};
use crate::error::{Error, Result};
use crate::linalg::{self, max_abs_diff, CMat, CVec, C64, ZERO};
use crate::regular::{BasisFunctionSet, Carrier};
use crate::report::Report;

/// Singular-value cut for [`OperatorSpace::solve_family_space`], relative to
/// the larger of the largest singular value and the data scale.
pub const FAMILY_NULLSPACE_REL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OperatorVariant {
    pub kind: Kind,
    pub side: Side,
}

impl OperatorVariant {
    pub const ALL: [OperatorVariant; 4] = [
        OperatorVariant { kind: Kind::Ordinary, side: Side::R },
        OperatorVariant { kind: Kind::Twisted, side: Side::R },
        OperatorVariant { kind: Kind::Ordinary, side: Side::L },
        OperatorVariant { kind: Kind::Twisted, side: Side::L },
    ];

    pub fn new(kind: Kind, side: Side) -> Self {
        OperatorVariant { kind, side }
    }
}

impl std::fmt::Display for OperatorVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.kind, self.side)
    }
}

/// How the second leg is recombined after `π^X ⊗ id`.
///
/// `Ordinary`: `(id⊗M)(π^X⊗id)(Q⊗S)π^X`. `Twisted`: `M∘σ` and `S^{-1}`.
/// The other two swap only one ingredient and are kept as diagnostics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactionRule {
    Ordinary,
    Twisted,
    SwapOnly,
    InverseOnly,
}

impl From<Kind> for CoactionRule {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Ordinary => CoactionRule::Ordinary,
            Kind::Twisted => CoactionRule::Twisted,
        }
    }
}

/// `Σ_m Q^{(m)} ⊗ a_m`.
#[derive(Clone, Debug)]
pub struct OperatorCoaction {
    pub terms: Vec<CMat>,
}

impl OperatorCoaction {
    pub fn zeros(d: usize, n: usize) -> Self {
        OperatorCoaction { terms: vec![CMat::zeros(d, d); n] }
    }

    pub fn max_diff(&self, other: &OperatorCoaction) -> f64 {
        self.terms.iter().zip(&other.terms).map(|(a, b)| max_abs_diff(a, b)).fold(0.0, f64::max)
    }

    /// `Σ_k Q_k ⊗ π_kj`.
    pub fn from_family(ops: &[CMat], pi: &Corepresentation, j: usize) -> Self {
        let d = ops[0].nrows();
        let n = pi.algebra_dim();
        let mut out = OperatorCoaction::zeros(d, n);
        for (k, q) in ops.iter().enumerate() {
            let e = pi.entry(k, j);
            for m in 0..n {
                if e[m] != ZERO {
                    out.terms[m] += q * e[m];
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct TensorOperatorFamily {
    pub variant: OperatorVariant,
    pub corep_label: String,
    pub operators: Vec<CMat>,
    /// Largest defining-condition residual seen at construction.
    pub residual: f64,
}

impl TensorOperatorFamily {
    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }
}

/// `K[m'][(y, m)]`: coefficient of `a_m` in the recombined second leg.
fn recombination(spec: &HopfAlgebraSpec, rule: CoactionRule) -> Vec<CMat> {
    let n = spec.dim();
    (0..n)
        .map(|mp| {
            let s = spec.s_op().column(mp).into_owned();
            let si = spec.sinv_op().column(mp).into_owned();
            let mut k = CMat::zeros(n, n);
            for y in 0..n {
                let ay = spec.basis(y);
                let v = match rule {
                    CoactionRule::Ordinary => spec.multiply(&ay, &s),
                    CoactionRule::Twisted => spec.multiply(&si, &ay),
                    CoactionRule::SwapOnly => spec.multiply(&s, &ay),
                    CoactionRule::InverseOnly => spec.multiply(&ay, &si),
                };
                k.set_row(y, &v.transpose());
            }
            k
        })
        .collect()
}

/// Precomputed data for evaluating operator coactions on a carrier.
pub struct OperatorSpace<'a> {
    pub spec: &'a HopfAlgebraSpec,
    pub carrier: &'a Carrier,
    /// `t[i]` is `d x n`: `π(e_i) = Σ t[i][x][m] e_x ⊗ a_m`.
    t: Vec<CMat>,
}

impl<'a> OperatorSpace<'a> {
    pub fn new(spec: &'a HopfAlgebraSpec, carrier: &'a Carrier) -> Self {
        let d = carrier.dim();
        let t = (0..d)
            .map(|i| {
                let mut e = CVec::zeros(d);
                e[i] = C64::new(1.0, 0.0);
                carrier.coact(&e)
            })
            .collect();
        OperatorSpace { spec, carrier, t }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn side(&self) -> Side {
        self.carrier.side
    }

    /// Operator coaction for any recombination rule.
    pub fn coaction_with_rule(&self, q: &CMat, rule: CoactionRule) -> OperatorCoaction {
        let k = recombination(self.spec, rule);
        self.coaction_with(q, &k)
    }

    fn coaction_with(&self, q: &CMat, k: &[CMat]) -> OperatorCoaction {
        let d = self.dim();
        let n = self.spec.dim();
        let mut out = OperatorCoaction::zeros(d, n);
        for i in 0..d {
            let w = q * &self.t[i];
            let mut col = CMat::zeros(d, n);
            for xx in 0..d {
                let mut inner = CMat::zeros(n, n);
                for mp in 0..n {
                    if w[(xx, mp)] != ZERO {
                        inner += &k[mp] * w[(xx, mp)];
                    }
                }
                col += &self.t[xx] * inner;
            }
            for m in 0..n {
                out.terms[m].set_column(i, &col.column(m));
            }
        }
        out
    }

    pub fn coaction(&self, q: &CMat, kind: Kind) -> OperatorCoaction {
        self.coaction_with_rule(q, kind.into())
    }

    /// Residual of `π^X(Q_j e_i) = Σ_k Q_k(x') ⊗ π_kj y'` (ordinary) or
    /// `⊗ y' π_kj` (twisted), where `π^X(e_i) = Σ x' ⊗ y'`.
    pub fn defining_residual(&self, ops: &[CMat], pi: &Corepresentation, kind: Kind) -> f64 {
        let d = self.dim();
        let n = self.spec.dim();
        let mut r: f64 = 0.0;
        let entries: Vec<Element> = (0..pi.dim() * pi.dim()).map(|i| pi.entry(i / pi.dim(), i % pi.dim())).collect();
        for (j, qj) in ops.iter().enumerate() {
            for i in 0..d {
                let lhs = self.carrier.coact(&qj.column(i).into_owned());
                let mut rhs = CMat::zeros(d, n);
                for (k, qk) in ops.iter().enumerate() {
                    let e = &entries[k * pi.dim() + j];
                    for xp in 0..d {
                        for mp in 0..n {
                            let c = self.t[i][(xp, mp)];
                            if c == ZERO {
                                continue;
                            }
                            let y = self.spec.basis(mp);
                            let second = match kind {
                                Kind::Ordinary => self.spec.multiply(e, &y),
                                Kind::Twisted => self.spec.multiply(&y, e),
                            };
                            rhs += qk.column(xp) * second.transpose() * c;
                        }
                    }
                }
                r = r.max(max_abs_diff(&lhs, &rhs));
            }
        }
        r
    }

    /// Residual of `Φ(Q_j) = Σ_k Q_k ⊗ π_kj`.
    pub fn coaction_form_residual(&self, ops: &[CMat], pi: &Corepresentation, kind: Kind) -> f64 {
        let k = recombination(self.spec, kind.into());
        (0..ops.len())
            .map(|j| self.coaction_with(&ops[j], &k).max_diff(&OperatorCoaction::from_family(ops, pi, j)))
            .fold(0.0, f64::max)
    }

    /// Comodule axioms for the operator coaction on the given operators.
    pub fn comodule_residuals(&self, ops: &[CMat], rule: CoactionRule) -> (f64, f64) {
        let n = self.spec.dim();
        let k = recombination(self.spec, rule);
        let (mut coassoc, mut counit): (f64, f64) = (0.0, 0.0);
        for q in ops {
            let phi = self.coaction_with(q, &k);
            let mut eps = CMat::zeros(q.nrows(), q.ncols());
            for m in 0..n {
                eps += &phi.terms[m] * self.spec.counit_vector()[m];
            }
            counit = counit.max(max_abs_diff(&eps, q));
            let twice: Vec<OperatorCoaction> = phi.terms.iter().map(|t| self.coaction_with(t, &k)).collect();
            for u in 0..n {
                for v in 0..n {
                    let mut rhs = CMat::zeros(q.nrows(), q.ncols());
                    for m in 0..n {
                        let c = self.spec.comult(m, u, v);
                        if c != ZERO {
                            rhs += &phi.terms[m] * c;
                        }
                    }
                    coassoc = coassoc.max(max_abs_diff(&twice[v].terms[u], &rhs));
                }
            }
        }
        (coassoc, counit)
    }

    /// `Φ(QQ')` against the product of `Φ(Q)` and `Φ(Q')`, second legs
    /// multiplied in order (ordinary) or reversed (twisted).
    pub fn product_rule_residual(&self, q: &CMat, qp: &CMat, kind: Kind) -> f64 {
        let n = self.spec.dim();
        let a = self.coaction(q, kind);
        let b = self.coaction(qp, kind);
        let lhs = self.coaction(&(q * qp), kind);
        let mut rhs = OperatorCoaction::zeros(self.dim(), n);
        for u in 0..n {
            for v in 0..n {
                let prod = &a.terms[u] * &b.terms[v];
                for m in 0..n {
                    let c = match kind {
                        Kind::Ordinary => self.spec.mult(u, v, m),
                        Kind::Twisted => self.spec.mult(v, u, m),
                    };
                    if c != ZERO {
                        rhs.terms[m] += &prod * c;
                    }
                }
            }
        }
        lhs.max_diff(&rhs)
    }

    /// Residual of `Φ(id) = id ⊗ 1_A`.
    pub fn identity_residual(&self, rule: CoactionRule) -> f64 {
        let d = self.dim();
        let phi = self.coaction_with_rule(&CMat::identity(d, d), rule);
        let u = self.spec.unit_vector();
        (0..self.spec.dim())
            .map(|m| max_abs_diff(&phi.terms[m], &(CMat::identity(d, d) * u[m])))
            .fold(0.0, f64::max)
    }

    /// Families for `π^q` of the given kind, as a canonical basis of the
    /// solution space of the linear defining conditions.
    pub fn solve_family_space(&self, pi: &Corepresentation, kind: Kind) -> Vec<TensorOperatorFamily> {
        let d = self.dim();
        let n = self.spec.dim();
        let dq = pi.dim();
        let k = recombination(self.spec, kind.into());
        let mut images = Vec::with_capacity(d * d);
        for a in 0..d {
            for b in 0..d {
                let mut e = CMat::zeros(d, d);
                e[(a, b)] = C64::new(1.0, 0.0);
                images.push(self.coaction_with(&e, &k));
            }
        }
        let unknowns = dq * d * d;
        let mut sys = CMat::zeros(dq * n * d * d, unknowns);
        for j in 0..dq {
            for m in 0..n {
                for x in 0..d {
                    for i in 0..d {
                        let row = ((j * n + m) * d + x) * d + i;
                        for (ab, img) in images.iter().enumerate() {
                            sys[(row, j * d * d + ab)] += img.terms[m][(x, i)];
                        }
                        for kk in 0..dq {
                            let coeff = pi.components()[m][(kk, j)];
                            if coeff != ZERO {
                                sys[(row, kk * d * d + x * d + i)] -= coeff;
                            }
                        }
                    }
                }
            }
        }
        // data scale guards the cut when the whole system is round-off
        let scale = self.t.iter().chain(pi.components()).map(|m| linalg::max_abs(m.iter())).fold(0.0, f64::max);
        let null = linalg::canonical_basis(&linalg::nullspace_with_floor(&sys, FAMILY_NULLSPACE_REL, FAMILY_NULLSPACE_REL * scale));
        let variant = OperatorVariant::new(kind, self.side());
        (0..null.ncols())
            .map(|c| {
                let v = null.column(c);
                let operators: Vec<CMat> = (0..dq).map(|j| CMat::from_fn(d, d, |a, b| v[j * d * d + a * d + b])).collect();
                let residual = self.coaction_form_residual(&operators, pi, kind);
                TensorOperatorFamily { variant, corep_label: pi.label.clone(), operators, residual }
            })
            .collect()
    }

    /// Multiplication operators built from basis functions, restricted to
    /// the carrier.
    pub fn multiplication_family(&self, psi: &BasisFunctionSet, kind: Kind) -> Result<TensorOperatorFamily> {
        if psi.side != self.side() {
            return Err(Error::SideMismatch(format!("basis functions are {} side, carrier is {} side", psi.side, self.side())));
        }
        let left = matches!((kind, psi.side), (Kind::Ordinary, Side::R) | (Kind::Twisted, Side::L));
        let operators = psi
            .functions
            .iter()
            .map(|f| {
                let m = if left { self.spec.left_mult_op(f) } else { self.spec.right_mult_op(f) };
                &self.carrier.coords * m * &self.carrier.embedding
            })
            .collect();
        Ok(TensorOperatorFamily {
            variant: OperatorVariant::new(kind, psi.side),
            corep_label: psi.corep_label.clone(),
            operators,
            residual: f64::NAN,
        })
    }

    /// Both forms of the defining condition for `fam` read as `variant`.
    pub fn check_family_as(&self, fam: &TensorOperatorFamily, pi: &Corepresentation, variant: OperatorVariant, tol: f64) -> Report {
        let mut rep = Report::new(format!("{variant} tensor operators for {} (T(A) = L(A))", pi.label));
        if fam.len() != pi.dim() || variant.side != self.side() {
            rep.push("shape", f64::INFINITY, tol);
            return rep;
        }
        rep.push("defining_condition", self.defining_residual(&fam.operators, pi, variant.kind), tol);
        rep.push("coaction_form", self.coaction_form_residual(&fam.operators, pi, variant.kind), tol);
        rep
    }

    pub fn check_family(&self, fam: &TensorOperatorFamily, pi: &Corepresentation, tol: f64) -> Report {
        self.check_family_as(fam, pi, fam.variant, tol)
    }

    /// Least-squares distance of `fam` from the span of `basis`.
    pub fn span_residual(&self, fam: &TensorOperatorFamily, basis: &[TensorOperatorFamily]) -> f64 {
        let flat = |f: &TensorOperatorFamily| -> CVec {
            CVec::from_iterator(f.operators.iter().map(|q| q.len()).sum(), f.operators.iter().flat_map(|q| q.transpose().iter().copied().collect::<Vec<_>>()))
        };
        let target = flat(fam);
        if basis.is_empty() {
            return target.iter().map(|z| z.norm()).fold(0.0, f64::max);
        }
        let cols: Vec<CVec> = basis.iter().map(flat).collect();
        let a = CMat::from_columns(&cols);
        let b = CMat::from_column_slice(target.len(), 1, target.as_slice());
        let x = linalg::lstsq(&a, &b);
        linalg::max_abs((a * x - b).iter())
    }

    /// `π^X(Q_k φ_j) = Σ_{s,t} Q_t(φ_s) ⊗ π^q_tk π^p_sj` for ordinary
    /// families, `π^p_sj π^q_tk` for twisted ones.
    pub fn apply_family_to_basis_functions(
        &self,
        fam: &TensorOperatorFamily,
        pi_q: &Corepresentation,
        phi: &BasisFunctionSet,
        pi_p: &Corepresentation,
        tol: f64,
    ) -> Result<Report> {
        if fam.variant.side != self.side() || phi.side != self.side() {
            return Err(Error::SideMismatch("family, basis functions and carrier must share a side".into()));
        }
        let (dq, dp) = (fam.len(), phi.len());
        let ys: Vec<CVec> = phi.functions.iter().map(|f| self.carrier.to_coords(f)).collect();
        let img = |t: usize, s: usize| -> CVec { &fam.operators[t] * &ys[s] };
        let mut r: f64 = 0.0;
        for k in 0..dq {
            for j in 0..dp {
                let lhs = self.carrier.coact(&img(k, j));
                let mut rhs = CMat::zeros(self.dim(), self.spec.dim());
                for s in 0..dp {
                    for t in 0..dq {
                        let (a, b) = (pi_q.entry(t, k), pi_p.entry(s, j));
                        let coeff = match fam.variant.kind {
                            Kind::Ordinary => self.spec.multiply(&a, &b),
                            Kind::Twisted => self.spec.multiply(&b, &a),
                        };
                        rhs += img(t, s) * coeff.transpose();
                    }
                }
                r = r.max(max_abs_diff(&lhs, &rhs));
            }
        }
        let mut rep = Report::new(format!("{} family on basis functions for {}", fam.variant, pi_p.label));
        rep.push("coaction_of_images", r, tol);
        Ok(rep)
    }
}

/// A coupled family together with its target irrep and copy index.
#[derive(Clone, Debug)]
pub struct CoupledFamily {
    pub r: usize,
    pub alpha: usize,
    pub family: TensorOperatorFamily,
}

/// `Σ C[(j,k),(r,α,ℓ)] Q^p_j Q^q_k` with the `(p,q)` system for ordinary
/// families and the `(q,p)` system (rows `(k,j)`) for twisted ones.
pub fn couple_families(
    table: &IrrepTable,
    fam_p: &TensorOperatorFamily,
    fam_q: &TensorOperatorFamily,
    cg: &CgSystem,
) -> Result<Vec<CoupledFamily>> {
    if fam_p.variant != fam_q.variant {
        return Err(Error::Shape("families of different variants".into()));
    }
    let (dp, dq) = (fam_p.len(), fam_q.len());
    let kind = fam_p.variant.kind;
    let ok = match kind {
        Kind::Ordinary => (cg.dp, cg.dq) == (dp, dq),
        Kind::Twisted => (cg.dp, cg.dq) == (dq, dp),
    };
    if !ok {
        return Err(Error::Shape("CG system does not match the families".into()));
    }
    let row = |j: usize, k: usize| match kind {
        Kind::Ordinary => j * dq + k,
        Kind::Twisted => k * dp + j,
    };
    let d = fam_p.operators[0].nrows();
    let mut out = Vec::new();
    for b in &cg.blocks {
        let pr = table.get(b.r);
        let dr = pr.dim();
        for alpha in 0..b.multiplicity {
            let operators = (0..dr)
                .map(|l| {
                    let col = cg.col(b, dr, alpha, l);
                    let mut q = CMat::zeros(d, d);
                    for j in 0..dp {
                        for k in 0..dq {
                            let c = cg.c[(row(j, k), col)];
                            if c != ZERO {
                                q += &fam_p.operators[j] * &fam_q.operators[k] * c;
                            }
                        }
                    }
                    q
                })
                .collect();
            out.push(CoupledFamily {
                r: b.r,
                alpha,
                family: TensorOperatorFamily { variant: fam_p.variant, corep_label: pr.label.clone(), operators, residual: f64::NAN },
            });
        }
    }
    Ok(out)
}

/// The one-element family `{id}` on the trivial corepresentation.
pub fn identity_family(d: usize, variant: OperatorVariant, trivial_label: &str) -> TensorOperatorFamily {
    TensorOperatorFamily { variant, corep_label: trivial_label.to_string(), operators: vec![CMat::identity(d, d)], residual: 0.0 }
}

/// Operator coaction on `A` evaluated basis element by basis element
/// through the elementary maps `Δ`, `S`, `S^{-1}` and multiplication.
pub fn coaction_on_operator(spec: &HopfAlgebraSpec, q: &CMat, variant: OperatorVariant) -> OperatorCoaction {
    let n = spec.dim();
    let mut out = OperatorCoaction::zeros(n, n);
    let id = CMat::identity(n, n);
    let s2 = spec.s_op() * spec.s_op();
    for j in 0..n {
        let dj = spec.basis_coproduct(j);
        let mut t = CMat::zeros(n, n);
        for p in 0..n {
            for r in 0..n {
                let c = dj[(p, r)];
                if c == ZERO {
                    continue;
                }
                let term = match (variant.kind, variant.side) {
                    (Kind::Ordinary, Side::R) => {
                        let x = spec.coproduct(&q.column(p).into_owned());
                        let ar = spec.antipode(&spec.basis(r));
                        HopfAlgebraSpec::apply_ops(&id, &spec.right_mult_op(&ar), &x)
                    }
                    (Kind::Twisted, Side::R) => {
                        let x = spec.coproduct(&q.column(p).into_owned());
                        let ar = spec.antipode_inv(&spec.basis(r));
                        HopfAlgebraSpec::apply_ops(&id, &spec.left_mult_op(&ar), &x)
                    }
                    (Kind::Ordinary, Side::L) => {
                        let x = spec.coproduct(&q.column(r).into_owned());
                        let s2p = s2.column(p).into_owned();
                        (spec.right_mult_op(&s2p) * spec.s_op() * x).transpose()
                    }
                    (Kind::Twisted, Side::L) => {
                        let x = spec.coproduct(&q.column(r).into_owned());
                        (spec.left_mult_op(&spec.basis(p)) * spec.s_op() * x).transpose()
                    }
                };
                t += term * c;
            }
        }
        for m in 0..n {
            out.terms[m].set_column(j, &t.column(m));
        }
    }
    out
}

/// The same coaction written as a contraction of structure constants.
pub fn coaction_on_operator_structure(spec: &HopfAlgebraSpec, q: &CMat, variant: OperatorVariant) -> OperatorCoaction {
    let n = spec.dim();
    let s = spec.s_op();
    let si = spec.sinv_op();
    let mut out = OperatorCoaction::zeros(n, n);
    for j in 0..n {
        for p in 0..n {
            for r in 0..n {
                let cj = spec.comult(j, p, r);
                if cj == ZERO {
                    continue;
                }
                for i in 0..n {
                    let qi = match variant.side {
                        Side::R => q[(i, p)],
                        Side::L => q[(i, r)],
                    };
                    if qi == ZERO {
                        continue;
                    }
                    for u in 0..n {
                        for k in 0..n {
                            let ci = match variant.side {
                                Side::R => spec.comult(i, k, u),
                                Side::L => spec.comult(i, u, k),
                            };
                            if ci == ZERO {
                                continue;
                            }
                            let w0 = cj * qi * ci;
                            for w in 0..n {
                                for m in 0..n {
                                    let c = match (variant.kind, variant.side) {
                                        (Kind::Ordinary, Side::R) => s[(w, r)] * spec.mult(u, w, m),
                                        (Kind::Twisted, Side::R) => si[(w, r)] * spec.mult(w, u, m),
                                        (Kind::Ordinary, Side::L) => {
                                            let mut acc = ZERO;
                                            for t in 0..n {
                                                acc += s[(w, t)] * s[(t, p)];
                                            }
                                            let mut z = ZERO;
                                            for v in 0..n {
                                                z += s[(v, u)] * spec.mult(v, w, m);
                                            }
                                            acc * z
                                        }
                                        (Kind::Twisted, Side::L) => {
                                            if w != 0 {
                                                continue;
                                            }
                                            let mut z = ZERO;
                                            for v in 0..n {
                                                z += s[(v, u)] * spec.mult(p, v, m);
                                            }
                                            z
                                        }
                                    };
                                    if c != ZERO {
                                        out.terms[m][(k, j)] += w0 * c;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Family-space dimensions, identity and product-rule checks and the three
/// coaction routes for one algebra.
pub fn operator_space_report(spec: &HopfAlgebraSpec, seed: u64, tol: f64) -> Report {
    use rand::{Rng, SeedableRng};
    let n = spec.dim();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut random = || CMat::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let ops: Vec<CMat> = (0..3).map(|_| random()).collect();
    let mut rep = Report::new(format!("operator-space coactions on {} (T(A) = L(A))", spec.label));
    for side in Side::ALL {
        let carrier = Carrier::bare(spec, side);
        let space = OperatorSpace::new(spec, &carrier);
        for kind in Kind::ALL {
            let v = OperatorVariant::new(kind, side);
            let mut routes: f64 = 0.0;
            for q in &ops {
                let a = space.coaction(q, kind);
                routes = routes.max(a.max_diff(&coaction_on_operator(spec, q, v)));
                routes = routes.max(a.max_diff(&coaction_on_operator_structure(spec, q, v)));
            }
            rep.push(format!("{v}_routes_agree"), routes, tol);
            rep.push(format!("{v}_identity"), space.identity_residual(kind.into()), tol);
            let (co, cu) = space.comodule_residuals(&ops, kind.into());
            rep.push(format!("{v}_coassociative"), co, tol);
            rep.push(format!("{v}_counital"), cu, tol);
            rep.push(format!("{v}_product_rule"), space.product_rule_residual(&ops[0], &ops[1], kind), tol);
        }
    }
    rep
}
