use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cqg_core::algebra::verify_all_axioms;
use cqg_core::builtins::{self, Construction};
use cqg_core::cg::{certify_cg, fusion_table, solve_cg, verify_character_orthogonality};
use cqg_core::corep::{build_irrep_table, peter_weyl_report, verify_orthogonality, IrrepTable};
use cqg_core::group::GroupTable;
use cqg_core::haar::{solve_haar, verify_haar_lemmas, HaarFunctional};
use cqg_core::homspace::{
    build_coset_subalgebra, restricted_carrier, restricted_coaction_report, restricted_gram, restricted_wigner_eckart,
    solve_restricted_basis_functions, verify_coideal,
};
use cqg_core::io::{self, ReportFile};
use cqg_core::regular::{canonical_basis_functions, verify_projection_identities, Carrier, ProjectionOrdering};
use cqg_core::tensor_ops::{identity_family, operator_space_report, CoactionRule, OperatorSpace, OperatorVariant};
use cqg_core::wigner_eckart::verify_wigner_eckart;
use cqg_core::{Error, HopfAlgebraSpec, Kind, Side};

#[derive(Parser)]
#[command(name = "cqg", version, about = "Harmonic analysis on finite-dimensional compact quantum group algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructionArg {
    Function,
    Group,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    R,
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ordinary,
    Twisted,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::R => Side::R,
            SideArg::L => Side::L,
        }
    }
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Ordinary => Kind::Ordinary,
            KindArg::Twisted => Kind::Twisted,
        }
    }
}

#[derive(Args, Clone)]
struct Common {
    /// Algebra file (JSON).
    #[arg(long, conflicts_with_all = ["group", "builtin"])]
    algebra: Option<PathBuf>,
    /// Group table file (JSON).
    #[arg(long, conflicts_with = "builtin")]
    group: Option<PathBuf>,
    /// Built-in group: Z2, Z3, Z4 or S3.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(long, value_enum, ignore_case = true, default_value = "function")]
    construction: ConstructionArg,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, ignore_case = true, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Hopf and star axioms.
    Validate(Common),
    /// Haar functional, its certificates and lemmas.
    Haar(Common),
    /// Irreducible corepresentations of the right regular comodule.
    Irreps(Common),
    /// Clebsch-Gordan coefficients for a pair of irreps.
    Cg {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Operator-space coactions and tensor-operator families for one irrep.
    TensorOps {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: String,
        #[arg(long, value_enum, ignore_case = true, default_value = "r")]
        side: SideArg,
        #[arg(long, value_enum, ignore_case = true, default_value = "ordinary")]
        kind: KindArg,
    },
    /// Wigner-Eckart factorization for multiplication operators.
    WignerEckart {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        r: String,
        #[arg(long, value_enum, ignore_case = true, default_value = "r")]
        side: SideArg,
        #[arg(long, value_enum, ignore_case = true, default_value = "ordinary")]
        kind: KindArg,
    },
    /// Coset coideal subalgebra of C(G) and restricted analysis.
    Homspace {
        #[command(flatten)]
        common: Common,
        /// Subgroup element indices, comma separated.
        #[arg(long, value_delimiter = ',')]
        subgroup: Vec<usize>,
        #[arg(long, value_enum, ignore_case = true, default_value = "l")]
        side: SideArg,
    },
    /// Runs every pipeline on the built-in algebras.
    Demo(Common),
    /// Writes the selected algebra (or group table with --construction omitted) to --output.
    Export {
        #[command(flatten)]
        common: Common,
        /// Export the group table instead of the algebra.
        #[arg(long)]
        table: bool,
    },
}

/// Error type of a pipeline run: usage and file problems exit 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Usage>;

fn construction(c: ConstructionArg) -> Construction {
    match c {
        ConstructionArg::Function => Construction::Function,
        ConstructionArg::Group => Construction::Group,
    }
}

fn load_group(common: &Common) -> Run<Option<GroupTable>> {
    if let Some(p) = &common.group {
        return Ok(Some(io::load_group(p)?));
    }
    if common.algebra.is_some() {
        return Ok(None);
    }
    let name = common.builtin.as_deref().unwrap_or("S3");
    builtins::group_by_name(name).map(Some).ok_or_else(|| Usage(format!("unknown built-in group {name:?}")))
}

fn load_spec(common: &Common, rep: &mut ReportFile) -> Run<HopfAlgebraSpec> {
    let spec = match &common.algebra {
        Some(p) => {
            rep.input("algebra", p.display().to_string());
            io::load_algebra(p)?
        }
        None => {
            let g = load_group(common)?.expect("group source");
            let c = construction(common.construction);
            rep.input("group", g.name.clone());
            rep.input("construction", format!("{c:?}").to_lowercase());
            builtins::build(&g, c)
        }
    };
    rep.input("label", spec.label.clone());
    Ok(spec)
}

fn haar_or_fail(spec: &HopfAlgebraSpec, tol: f64) -> Run<HaarFunctional> {
    Ok(solve_haar(spec, tol)?)
}

fn table_for(spec: &HopfAlgebraSpec, haar: &HaarFunctional, seed: u64) -> Run<IrrepTable> {
    Ok(build_irrep_table(spec, haar, seed)?)
}

fn complex(z: cqg_core::linalg::C64) -> Value {
    json!([z.re, z.im])
}

fn matrix(m: &cqg_core::linalg::CMat) -> Value {
    Value::Array((0..m.nrows()).map(|j| Value::Array((0..m.ncols()).map(|k| complex(m[(j, k)])).collect())).collect())
}

fn irreps_data(table: &IrrepTable) -> Value {
    Value::Array(
        table
            .irreps
            .iter()
            .zip(&table.multiplicities)
            .map(|(p, m)| {
                json!({
                    "label": p.label,
                    "dim": p.dim(),
                    "multiplicity": m,
                    "f_normalization": p.f.as_ref().map(|f| format!("{:?}", f.normalization)),
                })
            })
            .collect(),
    )
}

fn validate(common: &Common) -> Run<ReportFile> {
    let mut rep = ReportFile::new("validate", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    rep.section(verify_all_axioms(&spec, common.tolerance));
    Ok(rep)
}

fn haar(common: &Common) -> Run<ReportFile> {
    let mut rep = ReportFile::new("haar", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    let h = haar_or_fail(&spec, common.tolerance)?;
    rep.section(h.certificates.clone());
    rep.section(verify_haar_lemmas(&spec, &h.h, common.tolerance));
    rep.data = json!({ "h": h.h.0.iter().copied().map(complex).collect::<Vec<_>>() });
    Ok(rep)
}

fn irreps(common: &Common) -> Run<ReportFile> {
    let mut rep = ReportFile::new("irreps", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    let h = haar_or_fail(&spec, common.tolerance)?;
    let table = table_for(&spec, &h, common.seed)?;
    rep.conventions.push("F normalized Hermitian positive with tr F = d, else unit Frobenius norm".into());
    rep.conventions.push("irreps ordered by dimension, trivial first, then character".into());
    rep.section(peter_weyl_report(&spec, &table));
    rep.section(verify_character_orthogonality(&spec, &h, &table, common.tolerance));
    for p in &table.irreps {
        for q in &table.irreps {
            rep.section(verify_orthogonality(&spec, &h, p, q, common.tolerance)?);
        }
    }
    for side in Side::ALL {
        rep.section(verify_projection_identities(&spec, &h, &table, side, ProjectionOrdering::Standard, common.tolerance)?);
    }
    rep.data = json!({ "irreps": irreps_data(&table), "fusion": fusion_table(&spec, &h, &table)? });
    Ok(rep)
}

fn cg(common: &Common, p: &str, q: &str) -> Run<ReportFile> {
    let mut rep = ReportFile::new("cg", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    let h = haar_or_fail(&spec, common.tolerance)?;
    let table = table_for(&spec, &h, common.seed)?;
    let (pi, qi) = (table.find(p)?, table.find(q)?);
    rep.input("p", table.get(pi).label.clone());
    rep.input("q", table.get(qi).label.clone());
    rep.conventions.push("rows (j,k) -> j*d_q + k; columns (r, alpha, l) grouped by irrep".into());
    rep.conventions.push("each multiplicity copy is isometric; first significant entry of its first column is real positive".into());
    let sys = solve_cg(&spec, &table, pi, qi)?;
    rep.section(certify_cg(&spec, &h, &table, &sys, common.tolerance)?);
    let blocks: Vec<Value> = sys
        .blocks
        .iter()
        .map(|b| json!({ "r": table.get(b.r).label, "multiplicity": b.multiplicity, "offset": b.offset }))
        .collect();
    rep.data = json!({ "blocks": blocks, "c": matrix(&sys.c), "cinv": matrix(&sys.cinv) });
    Ok(rep)
}

fn tensor_ops(common: &Common, q: &str, side: Side, kind: Kind) -> Run<ReportFile> {
    let mut rep = ReportFile::new("tensor-ops", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    let h = haar_or_fail(&spec, common.tolerance)?;
    let table = table_for(&spec, &h, common.seed)?;
    let qi = table.find(q)?;
    let pq = table.get(qi);
    rep.input("q", pq.label.clone());
    rep.input("side", side.to_string());
    rep.input("kind", kind.to_string());
    rep.conventions.push("T(A) = L(A) (finite dimension)".into());
    rep.section(operator_space_report(&spec, common.seed, common.tolerance));
    let carrier = Carrier::regular(&spec, &h, side);
    let space = OperatorSpace::new(&spec, &carrier);
    let mut ident = cqg_core::Report::new("identity operator");
    for r in [CoactionRule::Ordinary, CoactionRule::Twisted] {
        ident.push(format!("{r:?}"), space.identity_residual(r), common.tolerance);
    }
    rep.section(ident);
    let psi = canonical_basis_functions(&spec, pq, side, 0)?;
    let fam = space.multiplication_family(&psi, kind)?;
    rep.section(space.check_family(&fam, pq, common.tolerance));
    let solved = space.solve_family_space(pq, kind);
    let mut span = cqg_core::Report::new("solved family space");
    span.push("multiplication_family_in_span", space.span_residual(&fam, &solved), common.tolerance);
    for (i, f) in solved.iter().enumerate() {
        span.push(format!("family_{i}_coaction_form"), f.residual, common.tolerance);
    }
    rep.section(span);
    if qi == 0 {
        let id = identity_family(spec.dim(), OperatorVariant::new(kind, side), &pq.label);
        rep.section(space.check_family(&id, pq, common.tolerance));
    }
    rep.data = json!({ "family_space_dimension": solved.len() });
    Ok(rep)
}

fn wigner_eckart(common: &Common, p: &str, q: &str, r: &str, side: Side, kind: Kind) -> Run<ReportFile> {
    let mut rep = ReportFile::new("wigner-eckart", common.tolerance, common.seed);
    let spec = load_spec(common, &mut rep)?;
    let h = haar_or_fail(&spec, common.tolerance)?;
    let table = table_for(&spec, &h, common.seed)?;
    let (pi, qi, ri) = (table.find(p)?, table.find(q)?, table.find(r)?);
    for (k, i) in [("p", pi), ("q", qi), ("r", ri)] {
        rep.input(k, table.get(i).label.clone());
    }
    rep.input("side", side.to_string());
    rep.input("kind", kind.to_string());
    rep.conventions.push("ordinary families use the (q,p) CG system, twisted families the (p,q) system".into());
    rep.conventions.push("canonical basis functions from row 0; multiplication operator families".into());
    let carrier = Carrier::regular(&spec, &h, side);
    let space = OperatorSpace::new(&spec, &carrier);
    let phi = canonical_basis_functions(&spec, table.get(pi), side, 0)?;
    let psi = canonical_basis_functions(&spec, table.get(ri), side, 0)?;
    let fam = space.multiplication_family(&canonical_basis_functions(&spec, table.get(qi), side, 0)?, kind)?;
    let cg = match kind {
        Kind::Ordinary => solve_cg(&spec, &table, qi, pi)?,
        Kind::Twisted => solve_cg(&spec, &table, pi, qi)?,
    };
    let we = verify_wigner_eckart(&carrier, &table, ri, &psi, &fam, &phi, &cg, common.tolerance)?;
    rep.section(we.checks.clone());
    rep.data = serde_json::to_value(&we).map_err(|e| Usage(e.to_string()))?;
    Ok(rep)
}

fn homspace(common: &Common, subgroup: &[usize], side: Side) -> Run<ReportFile> {
    let mut rep = ReportFile::new("homspace", common.tolerance, common.seed);
    let g = load_group(common)?.ok_or_else(|| Usage("homspace needs --group or --builtin".into()))?;
    let spec = builtins::build(&g, Construction::Function);
    rep.input("group", g.name.clone());
    rep.input("subgroup", json!(subgroup));
    rep.input("side", side.to_string());
    let h = haar_or_fail(&spec, common.tolerance)?;
    let table = table_for(&spec, &h, common.seed)?;
    let b = build_coset_subalgebra(&g, subgroup, side)?;
    rep.conventions.push("side L: functions constant on left cosets xH; side R: on right cosets Hx".into());
    rep.section(verify_coideal(&spec, &b, common.tolerance));
    let gram = restricted_gram(&spec, &b, &h, common.tolerance)?;
    let carrier = restricted_carrier(&spec, &b, &h, common.tolerance)?;
    rep.section(restricted_coaction_report(&spec, &carrier, &h, common.tolerance));
    let sets: Vec<_> = table.irreps.iter().map(|p| solve_restricted_basis_functions(&carrier, p)).collect();
    let space = OperatorSpace::new(&spec, &carrier);
    for (ri, psis) in sets.iter().enumerate() {
        for (pi, phis) in sets.iter().enumerate() {
            for (qi, qs) in sets.iter().enumerate() {
                let (Some(psi), Some(phi), Some(qset)) = (psis.first(), phis.first(), qs.first()) else { continue };
                for kind in Kind::ALL {
                    let fam = space.multiplication_family(qset, kind)?;
                    let cg = match kind {
                        Kind::Ordinary => solve_cg(&spec, &table, qi, pi)?,
                        Kind::Twisted => solve_cg(&spec, &table, pi, qi)?,
                    };
                    let mut we = restricted_wigner_eckart(&carrier, &table, ri, psi, &fam, phi, &cg, common.tolerance)?.checks;
                    we.title = format!("restricted Wigner-Eckart {kind} ({}, {}, {})", table.get(pi).label, table.get(qi).label, table.get(ri).label);
                    rep.section(we);
                }
            }
        }
    }
    let dims: Vec<Value> = table.irreps.iter().zip(&sets).map(|(p, s)| json!({ "irrep": p.label, "dimension": s.len() })).collect();
    rep.data = json!({ "b": b.dim(), "gram": matrix(&gram), "basis_function_spaces": dims });
    Ok(rep)
}

fn demo(common: &Common) -> Run<ReportFile> {
    let mut rep = ReportFile::new("demo", common.tolerance, common.seed);
    let mut summary = Vec::new();
    for spec in builtins::standard_suite() {
        let ax = verify_all_axioms(&spec, common.tolerance);
        let h = haar_or_fail(&spec, common.tolerance)?;
        let table = table_for(&spec, &h, common.seed)?;
        let mut pw = peter_weyl_report(&spec, &table);
        pw.title = format!("{}: {}", spec.label, pw.title);
        let mut ops = operator_space_report(&spec, common.seed, common.tolerance);
        ops.title = format!("{}: operator coactions", spec.label);
        summary.push(json!({ "algebra": spec.label, "irreps": irreps_data(&table) }));
        let mut axr = ax;
        axr.title = format!("{}: axioms", spec.label);
        rep.section(axr);
        rep.section(pw);
        rep.section(ops);
    }
    rep.data = Value::Array(summary);
    Ok(rep)
}

fn export(common: &Common, table: bool) -> Run<ExitCode> {
    let out = common.output.as_ref().ok_or_else(|| Usage("export needs --output".into()))?;
    if table {
        let g = load_group(common)?.ok_or_else(|| Usage("no group selected".into()))?;
        io::save_group(out, &g)?;
    } else {
        let mut scratch = ReportFile::new("export", common.tolerance, common.seed);
        let spec = load_spec(common, &mut scratch)?;
        io::save_algebra(out, &spec)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn emit(rep: &ReportFile, common: &Common) -> Run<()> {
    let text = match common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rep).map_err(|e| Usage(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io_err = |e: csv::Error| Usage(e.to_string());
            w.write_record(["section", "check", "residual", "tolerance", "passed"]).map_err(io_err)?;
            for row in rep.rows() {
                w.write_record(&row).map_err(io_err)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| Usage(e.to_string()))?).expect("utf-8")
        }
    };
    match &common.output {
        Some(p) => std::fs::write(p, text).map_err(|e| Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Run<ExitCode> {
    let (rep, common) = match &cli.command {
        Command::Validate(c) => (validate(c)?, c),
        Command::Haar(c) => (haar(c)?, c),
        Command::Irreps(c) => (irreps(c)?, c),
        Command::Cg { common, p, q } => (cg(common, p, q)?, common),
        Command::TensorOps { common, q, side, kind } => (tensor_ops(common, q, (*side).into(), (*kind).into())?, common),
        Command::WignerEckart { common, p, q, r, side, kind } => {
            (wigner_eckart(common, p, q, r, (*side).into(), (*kind).into())?, common)
        }
        Command::Homspace { common, subgroup, side } => (homspace(common, subgroup, (*side).into())?, common),
        Command::Demo(c) => (demo(c)?, c),
        Command::Export { common, table } => return export(common, *table),
    };
    emit(&rep, common)?;
    if rep.passed {
        Ok(ExitCode::SUCCESS)
    } else {
        for s in &rep.sections {
            for c in s.failures() {
                eprintln!("FAILED {} / {}: residual {:e} (tolerance {:e})", s.title, c.name, c.residual, c.tolerance);
            }
        }
        Ok(ExitCode::from(1))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
