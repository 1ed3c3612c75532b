//! Command-line front end. Every verb builds a JSON report
//! `{"verb", "inputs", "results", "pass"}`; `--format csv|pretty` renders
//! the same results as a table or as text.

pub mod json;

use std::f64::consts::PI;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::{Matrix4, Vector4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{
    check_isomorphism, enumerate_sp4_subgroups, o33_basis, secii_basis, sl4_basis, sp4_basis,
    tables, verify_table, BasisSet, ExpectedTable, Label, TableReport,
};
use crate::catalog::{reorder, Edition, GeneratorCatalog, GeneratorName, Ordering, SecIIName};
use crate::errata::correction;
use crate::error::{Error, Result};
use crate::exactnum::ExactMatrix;
use crate::oscillator::{
    normal_form, reconstruct, reduce, spectrum, RawParams, SpectrumSpec, SpectrumVariant,
};
use crate::phasespace::{
    canonical_deviation, classify_generators, random_canonical_word, transform_state,
    GaussianState, GroupElement, SymplecticForm, CANONICAL_TOL,
};
use crate::realizations::{diffop, diffop_basis, FockChecker};

#[derive(Parser, Debug)]
#[command(
    name = "oscsym",
    version,
    about = "Generator algebra and phase-space checks for two coupled oscillators"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value = "consistent", value_parser = parse_edition)]
    edition: Edition,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print catalog matrices or their differential operators.
    DumpGenerators(DumpArgs),
    /// Check computed brackets against an expected table.
    VerifyAlgebra(VerifyArgs),
    /// Compare structure constants of two realizations.
    VerifyIsomorphism(IsoArgs),
    /// Enumerate the ten-element closed subalgebras.
    Subgroups(SubgroupArgs),
    /// Normal form and spectrum of a coupled pair.
    #[command(allow_negative_numbers = true)]
    Solve(SolveArgs),
    /// Test a supplied 4x4 matrix for canonicity.
    CheckTransform(TransformArgs),
    /// Push a Gaussian state through generator exponentials.
    #[command(allow_negative_numbers = true)]
    Evolve(EvolveArgs),
    /// Ladder-operator bracket residuals on a truncated Fock space.
    FockCheck(FockArgs),
}

fn parse_edition(s: &str) -> std::result::Result<Edition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ordering(s: &str) -> std::result::Result<Ordering, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DumpSet {
    Sl4,
    Sp4,
    Extras,
    O33,
    Modes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Realization {
    Matrix,
    Diffop,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[arg(long, value_enum, default_value = "sl4")]
    set: DumpSet,
    /// Comma-separated subset of names.
    #[arg(long, value_delimiter = ',')]
    names: Vec<String>,
    #[arg(long, default_value = "interleaved", value_parser = parse_ordering)]
    ordering: Ordering,
    #[arg(long, value_enum, default_value = "matrix")]
    realization: Realization,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraSet {
    Sl4,
    Sp4,
    O33,
    G3Line,
    Sp2Mode1,
    Sp2Mode2,
    Sp2Sum,
    Sp2Mixed,
    Sp2Three,
    Sp2Claimed,
    Coupling,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "sl4")]
    set: AlgebraSet,
    #[arg(long, default_value = "interleaved", value_parser = parse_ordering)]
    ordering: Ordering,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Against {
    O33,
    Traditional,
    Diffop,
}

#[derive(Args, Debug)]
struct IsoArgs {
    /// Realization compared with the interleaved 4x4 generators.
    #[arg(long, value_enum, default_value = "o33")]
    against: Against,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SubgroupArgs {
    /// Ordering of the symplectic form used for the canonicity split.
    #[arg(long, default_value = "interleaved", value_parser = parse_ordering)]
    ordering: Ordering,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long = "A")]
    a: f64,
    #[arg(long = "B")]
    b: f64,
    #[arg(long = "C")]
    c: f64,
    #[arg(long, default_value_t = 1.0)]
    m1: f64,
    #[arg(long, default_value_t = 1.0)]
    m2: f64,
    /// Highest quantum number per mode in the spectrum listing.
    #[arg(long, default_value_t = 2)]
    levels: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// JSON file with the matrix, or "-" for stdin.
    #[arg(long)]
    matrix: String,
    #[arg(long, default_value = "interleaved", value_parser = parse_ordering)]
    ordering: Ordering,
    #[arg(long, default_value_t = CANONICAL_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct EvolveArgs {
    #[arg(long)]
    generator: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    theta: f64,
    /// vacuum, coupled, a state JSON file, or "-" for stdin.
    #[arg(long, default_value = "vacuum")]
    state: String,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long, default_value = "interleaved", value_parser = parse_ordering)]
    ordering: Ordering,
    /// Exit 1 when the final state violates the uncertainty bound.
    #[arg(long)]
    gate: bool,
    /// Check this many random canonical words instead of one generator.
    #[arg(long)]
    words: Option<usize>,
    /// Longest word length.
    #[arg(long, default_value_t = 4)]
    length: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct FockArgs {
    #[arg(long = "N", default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[command(flatten)]
    common: Common,
}

/// What a verb produced, in all three renderings.
struct Outcome {
    verb: &'static str,
    inputs: Value,
    results: Value,
    pass: bool,
    csv: String,
    pretty: String,
}

impl Outcome {
    fn report(&self) -> Value {
        json!({
            "verb": self.verb,
            "inputs": self.inputs,
            "results": self.results,
            "pass": self.pass,
        })
    }
}

/// Run one command line. Returns the process exit code: 0 on success,
/// 1 when a requested check fails, 2 on usage or input errors.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let format = match &cli.verb {
        Verb::DumpGenerators(a) => a.common.format,
        Verb::VerifyAlgebra(a) => a.common.format,
        Verb::VerifyIsomorphism(a) => a.common.format,
        Verb::Subgroups(a) => a.common.format,
        Verb::Solve(a) => a.format,
        Verb::CheckTransform(a) => a.format,
        Verb::Evolve(a) => a.common.format,
        Verb::FockCheck(a) => a.common.format,
    };
    let outcome = match cli.verb {
        Verb::DumpGenerators(a) => dump_generators(a),
        Verb::VerifyAlgebra(a) => verify_algebra(a),
        Verb::VerifyIsomorphism(a) => verify_isomorphism(a),
        Verb::Subgroups(a) => subgroups(a),
        Verb::Solve(a) => solve(a),
        Verb::CheckTransform(a) => check_transform(a, stdin),
        Verb::Evolve(a) => evolve(a, stdin),
        Verb::FockCheck(a) => fock_check(a),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let text = match format {
        Format::Json => json::render(&outcome.report(), json::digits_from_env()),
        Format::Csv => outcome.csv.clone(),
        Format::Pretty => outcome.pretty.clone(),
    };
    if stdout.write_all(text.as_bytes()).is_err() {
        return 2;
    }
    if outcome.pass {
        0
    } else {
        1
    }
}

fn matrix_rows(m: &Matrix4<f64>) -> Value {
    json!((0..4)
        .map(|r| m.row(r).iter().copied().collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

fn fmt_f(x: f64) -> String {
    json::format_float(x, json::digits_from_env())
}

fn matrix_csv(name: &str, m: &ExactMatrix, out: &mut String) {
    for r in 0..m.n() {
        for c in 0..m.n() {
            let e = m.get(r, c);
            out.push_str(&format!("{name},{r},{c},{},{}\n", e.re, e.im));
        }
    }
}

fn parse_names<N: std::str::FromStr<Err = Error> + Copy>(
    names: &[String],
    all: &[N],
) -> Result<Vec<N>> {
    if names.is_empty() {
        return Ok(all.to_vec());
    }
    names.iter().map(|s| s.trim().parse()).collect()
}

fn dump_generators(a: DumpArgs) -> Result<Outcome> {
    let cat = GeneratorCatalog::new(a.common.edition);
    let mut items: Vec<(String, ExactMatrix, Value)> = Vec::new();
    match a.set {
        DumpSet::Modes => {
            if a.realization == Realization::Diffop {
                return Err(Error::Parse(
                    "differential operators exist only for the fifteen generators".into(),
                ));
            }
            for n in parse_names(&a.names, &SecIIName::ALL)? {
                let m = reorder(cat.secii_generator(n), Ordering::Interleaved, a.ordering);
                items.push((n.to_string(), m, json!({})));
            }
        }
        set => {
            let all: &[GeneratorName] = match set {
                DumpSet::Sp4 => &GeneratorName::SP4,
                DumpSet::Extras => &GeneratorName::EXTRA,
                _ => &GeneratorName::ALL,
            };
            for g in parse_names(&a.names, all)? {
                if !all.contains(&g) {
                    return Err(Error::CatalogMiss {
                        name: g.to_string(),
                        ordering: a.ordering.to_string(),
                    });
                }
                match (set, a.realization) {
                    (DumpSet::O33, Realization::Diffop) => {
                        return Err(Error::Parse(
                            "differential operators act on 4-dimensional phase space".into(),
                        ))
                    }
                    (DumpSet::O33, Realization::Matrix) => {
                        items.push((g.to_string(), cat.o33_generator(g).clone(), json!({})))
                    }
                    (_, Realization::Matrix) => {
                        items.push((g.to_string(), cat.generator(g, a.ordering), json!({})))
                    }
                    (_, Realization::Diffop) => {
                        let d = diffop(g, a.common.edition);
                        let c = reorder(d.coeff().matrix(), Ordering::Interleaved, a.ordering);
                        let mut extra = json!({ "op_form": d.op_form() });
                        if let Some(fix) = d.correction() {
                            extra["correction"] = json!({ "id": fix.id, "literal": fix.literal, "consistent": fix.consistent });
                        }
                        items.push((g.to_string(), c, extra));
                    }
                }
            }
        }
    }
    let mut csv = String::from("name,row,col,re,im\n");
    let mut pretty = String::new();
    let mut list = Vec::new();
    for (name, m, extra) in &items {
        matrix_csv(name, m, &mut csv);
        pretty.push_str(&format!("{name}:\n{}", m.pretty()));
        if let Some(form) = extra.get("op_form").and_then(Value::as_str) {
            pretty.push_str(&format!("  D = {form}\n"));
        }
        pretty.push('\n');
        let mut v = serde_json::to_value(m).expect("matrix serializes");
        v["name"] = json!(name);
        if let Value::Object(more) = extra {
            for (k, x) in more {
                v[k] = x.clone();
            }
        }
        list.push(v);
    }
    let set = format!("{:?}", a.set).to_lowercase();
    Ok(Outcome {
        verb: "dump-generators",
        inputs: json!({
            "set": set,
            "names": a.names,
            "ordering": a.ordering,
            "edition": a.common.edition,
            "realization": format!("{:?}", a.realization).to_lowercase(),
        }),
        results: json!({ "count": list.len(), "generators": list }),
        pass: true,
        csv,
        pretty,
    })
}

fn report_csv<L: Label>(reports: &[TableReport<L>]) -> String {
    let mut out = String::from("table,left,right,status,computed,expected\n");
    for r in reports {
        for p in &r.pairs {
            let fmt = |t: &Option<Vec<crate::algebra::Term<L>>>| {
                t.as_ref()
                    .map_or_else(String::new, |t| crate::algebra::format_terms(t))
            };
            out.push_str(&format!(
                "\"{}\",{},{},{},\"{}\",\"{}\"\n",
                r.title,
                p.left,
                p.right,
                format!("{:?}", p.status).to_lowercase(),
                fmt(&p.computed),
                fmt(&p.expected)
            ));
        }
    }
    out
}

fn check<L: Label>(
    basis: Result<BasisSet<L>>,
    expected: ExpectedTable<L>,
) -> Result<TableReport<L>> {
    Ok(verify_table(&basis?, &expected))
}

fn verify_algebra(a: VerifyArgs) -> Result<Outcome> {
    use SecIIName::*;
    let edition = a.common.edition;
    let cat = GeneratorCatalog::new(edition);
    let sp2 = |a: SecIIName, b: SecIIName, c: SecIIName| {
        check(
            secii_basis(&cat, &[a, b, c]),
            tables::sp2(&format!("Sp(2) on ({a}, {b}, {c})"), a, b, c),
        )
    };
    let mut gen_reports: Vec<TableReport<GeneratorName>> = Vec::new();
    let mut mode_reports: Vec<TableReport<SecIIName>> = Vec::new();
    let mut notes: Vec<&str> = Vec::new();
    match a.set {
        AlgebraSet::Sl4 => {
            gen_reports.push(verify_table(
                &sl4_basis(&cat, a.ordering),
                &tables::sl4(edition),
            ));
            if edition == Edition::Consistent {
                notes.extend(["S2-MATRIX", "GG-ROW"]);
            }
        }
        AlgebraSet::Sp4 => {
            gen_reports.push(verify_table(&sp4_basis(&cat, a.ordering), &tables::sp4()))
        }
        AlgebraSet::O33 => {
            gen_reports.push(verify_table(&o33_basis(&cat), &tables::sl4(edition)));
            if edition == Edition::Consistent {
                notes.extend(["S2-MATRIX", "GG-ROW"]);
            }
        }
        AlgebraSet::G3Line => {
            gen_reports.push(verify_table(
                &sl4_basis(&cat, a.ordering),
                &tables::g3_line(edition),
            ));
            if edition == Edition::Consistent {
                notes.push("G3-LINE");
            }
        }
        AlgebraSet::Sp2Mode1 => mode_reports.push(sp2(A1, B1, C1)?),
        AlgebraSet::Sp2Mode2 => mode_reports.push(sp2(A2, B2, C2)?),
        AlgebraSet::Sp2Sum => mode_reports.push(sp2(Aplus, Bplus, Cplus)?),
        AlgebraSet::Sp2Mixed => {
            for (x, y, z) in [
                (Aplus, Bminus, Cminus),
                (Aminus, Bplus, Cminus),
                (Aminus, Bminus, Cplus),
            ] {
                mode_reports.push(sp2(x, y, z)?);
            }
        }
        AlgebraSet::Sp2Three => mode_reports.push(sp2(Aplus, B3, C3)?),
        AlgebraSet::Sp2Claimed => mode_reports.push(sp2(Aplus, B1, C1)?),
        AlgebraSet::Coupling => mode_reports.push(check(
            secii_basis(&cat, &SecIIName::COMBINED),
            tables::coupling(),
        )?),
    }
    let (tables_json, pretty, csv, checked, failed, pass) = if gen_reports.is_empty() {
        summarize(&mode_reports)
    } else {
        summarize(&gen_reports)
    };
    let corrections: Vec<Value> = notes
        .iter()
        .filter_map(|id| correction(id))
        .map(|c| json!({ "id": c.id, "subject": c.subject, "literal": c.literal, "consistent": c.consistent }))
        .collect();
    Ok(Outcome {
        verb: "verify-algebra",
        inputs: json!({
            "set": a.set.to_possible_value().expect("named").get_name(),
            "ordering": a.ordering,
            "edition": edition,
        }),
        results: json!({
            "tables": tables_json,
            "pairs_checked": checked,
            "pairs_failed": failed,
            "corrections": corrections,
        }),
        pass,
        csv,
        pretty,
    })
}

fn summarize<L: Label>(
    reports: &[TableReport<L>],
) -> (Vec<Value>, String, String, usize, usize, bool) {
    (
        reports.iter().map(TableReport::to_json).collect(),
        reports
            .iter()
            .map(TableReport::to_text)
            .collect::<Vec<_>>()
            .join("\n"),
        report_csv(reports),
        reports.iter().map(TableReport::checked).sum(),
        reports.iter().map(|r| r.failures().len()).sum(),
        reports.iter().all(TableReport::passed),
    )
}

fn verify_isomorphism(a: IsoArgs) -> Result<Outcome> {
    let edition = a.common.edition;
    let cat = GeneratorCatalog::new(edition);
    let first = sl4_basis(&cat, Ordering::Interleaved);
    let second = match a.against {
        Against::O33 => o33_basis(&cat),
        Against::Traditional => sl4_basis(&cat, Ordering::Traditional),
        Against::Diffop => diffop_basis(edition)?,
    };
    let report = check_isomorphism(&first, &second)?;
    let mut csv = String::from("left,right,first,second\n");
    let mut pretty = format!(
        "{} of {} brackets agree -> {}\n",
        report.pairs_checked - report.mismatches.len(),
        report.pairs_checked,
        if report.isomorphic() { "PASS" } else { "FAIL" }
    );
    for (l, r, x, y) in &report.mismatches {
        let (x, y) = (
            crate::algebra::format_terms(x),
            crate::algebra::format_terms(y),
        );
        csv.push_str(&format!("{l},{r},\"{x}\",\"{y}\"\n"));
        pretty.push_str(&format!("  [{l}, {r}]: {x}  vs  {y}\n"));
    }
    Ok(Outcome {
        verb: "verify-isomorphism",
        inputs: json!({
            "first": "interleaved 4x4",
            "against": format!("{:?}", a.against).to_lowercase(),
            "edition": edition,
        }),
        results: report.to_json(),
        pass: report.isomorphic(),
        csv,
        pretty,
    })
}

fn subgroups(a: SubgroupArgs) -> Result<Outcome> {
    let cat = GeneratorCatalog::new(a.common.edition);
    let form = SymplecticForm::j_matrix(a.ordering);
    let classes = classify_generators(&cat, &form);
    let subs = enumerate_sp4_subgroups(&cat)?;
    let mut list = Vec::new();
    let mut csv = String::from("pivot,kind,members,noncanonical\n");
    let mut pretty = String::new();
    let mut all_canonical = Vec::new();
    let mut others_ok = true;
    for s in &subs {
        let non: Vec<GeneratorName> = s
            .members
            .iter()
            .copied()
            .filter(|g| classes.noncanonical.contains(g))
            .collect();
        if non.is_empty() {
            all_canonical.push(s.pivot);
        } else if non.len() < 2 {
            others_ok = false;
        }
        let names = |v: &[GeneratorName]| v.iter().map(|g| g.to_string()).collect::<Vec<_>>();
        let kind = match s.kind {
            crate::algebra::SubgroupKind::O32Like => "O(3,2)-like",
            crate::algebra::SubgroupKind::O23Like => "O(2,3)-like",
        };
        csv.push_str(&format!(
            "{},{kind},{},{}\n",
            s.pivot,
            names(&s.members).join(" "),
            names(&non).join(" ")
        ));
        pretty.push_str(&format!(
            "{:>2}  {kind:<12} {{{}}}  {}\n",
            s.pivot,
            names(&s.members).join(", "),
            if non.is_empty() {
                "canonical".to_string()
            } else {
                format!("noncanonical: {}", names(&non).join(", "))
            }
        ));
        list.push(json!({
            "pivot": s.pivot,
            "kind": kind,
            "members": s.members,
            "noncanonical_members": non,
            "canonical": non.is_empty(),
        }));
    }
    let pass = subs.len() == 6 && all_canonical == [GeneratorName::S3] && others_ok;
    Ok(Outcome {
        verb: "subgroups",
        inputs: json!({ "edition": a.common.edition, "ordering": a.ordering }),
        results: json!({
            "count": subs.len(),
            "subgroups": list,
            "canonical_generators": classes.canonical,
            "noncanonical_generators": classes.noncanonical,
            "fully_canonical": all_canonical,
        }),
        pass,
        csv,
        pretty,
    })
}

fn solve(a: SolveArgs) -> Result<Outcome> {
    let raw = RawParams::new(a.m1, a.m2, a.a, a.b, a.c)?;
    let p = reduce(&raw)?;
    let nf = normal_form(&p)?;
    let (ra, rb, rc) = reconstruct(&nf);
    let mut levels = Vec::new();
    let mut csv = String::from("n1,n2,E\n");
    for n1 in 0..=a.levels {
        for n2 in 0..=a.levels {
            let e = spectrum(
                Some(&nf),
                SpectrumSpec {
                    n1,
                    n2,
                    variant: SpectrumVariant::CoupledH,
                },
            )?;
            csv.push_str(&format!("{n1},{n2},{}\n", fmt_f(e)));
            levels.push(json!({ "n1": n1, "n2": n2, "E": e }));
        }
    }
    let pretty = format!(
        "m = {}\nA = {}  B = {}  C = {}\nK = {}\neta = {}\nalpha = {} ({} deg)\nomega = {}\n",
        fmt_f(p.m),
        fmt_f(p.a),
        fmt_f(p.b),
        fmt_f(p.c),
        fmt_f(nf.k),
        fmt_f(nf.eta),
        fmt_f(nf.alpha),
        fmt_f(nf.alpha * 180.0 / PI),
        fmt_f(nf.omega)
    );
    Ok(Outcome {
        verb: "solve",
        inputs: json!({ "A": a.a, "B": a.b, "C": a.c, "m1": a.m1, "m2": a.m2, "levels": a.levels }),
        results: json!({
            "m": p.m,
            "A": p.a,
            "B": p.b,
            "C": p.c,
            "K": nf.k,
            "eta": nf.eta,
            "alpha": nf.alpha,
            "omega": nf.omega,
            "reconstructed": { "A": ra, "B": rb, "C": rc },
            "spectrum": levels,
        }),
        pass: true,
        csv,
        pretty,
    })
}

fn read_source(path: &str, stdin: &mut dyn Read) -> Result<(String, String)> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        Ok(("<stdin>".into(), text))
    } else {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        Ok((path.to_string(), text))
    }
}

/// A 4x4 real matrix from either the exact schema `{"n", "entries"}` or a
/// plain array of rows.
pub fn parse_matrix(source: &str, text: &str) -> Result<Matrix4<f64>> {
    let v: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    let rows: Vec<Vec<f64>> = if v.is_object() {
        let m: ExactMatrix =
            serde_json::from_value(v).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        let n = m.n();
        let flat = m.to_real_f64()?;
        flat.chunks(n).map(<[f64]>::to_vec).collect()
    } else {
        serde_json::from_value(v)
            .map_err(|e| Error::Parse(format!("{source}: expected an array of rows: {e}")))?
    };
    if rows.len() != 4 {
        return Err(Error::DimensionMismatch(format!(
            "{source}: {} rows, need 4",
            rows.len()
        )));
    }
    if let Some((r, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != 4) {
        return Err(Error::DimensionMismatch(format!(
            "{source}: row {r} has {} entries, need 4",
            row.len()
        )));
    }
    Ok(Matrix4::from_fn(|r, c| rows[r][c]))
}

fn state_summary(s: &GaussianState) -> Value {
    let (n1, n2) = s.symplectic_eigenvalues();
    json!({
        "state": s,
        "symplectic_eigenvalues": [n1, n2],
        "admissible": s.uncertainty_ok(),
    })
}

fn check_transform(a: TransformArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let (source, text) = read_source(&a.matrix, stdin)?;
    let m = parse_matrix(&source, &text)?;
    let g = GroupElement::from_matrix(m, a.ordering);
    let form = SymplecticForm::j_matrix(a.ordering);
    let dev = canonical_deviation(&g, &form)?;
    let canonical = dev <= a.tol;
    let image = state_summary(&transform_state(&GaussianState::vacuum(a.ordering), &g)?);
    let pretty = format!(
        "max |M J M^T - J| = {}\ndet M = {}\n{}\n",
        fmt_f(dev),
        fmt_f(g.det()),
        if canonical {
            "canonical"
        } else {
            "not canonical"
        }
    );
    Ok(Outcome {
        verb: "check-transform",
        inputs: json!({ "matrix": source, "ordering": a.ordering, "tol": a.tol }),
        results: json!({
            "matrix": matrix_rows(&m),
            "deviation": dev,
            "det": g.det(),
            "canonical": canonical,
            "vacuum_image": image,
        }),
        pass: canonical,
        csv: format!(
            "deviation,det,canonical\n{},{},{canonical}\n",
            fmt_f(dev),
            fmt_f(g.det())
        ),
        pretty,
    })
}

fn initial_state(a: &EvolveArgs, stdin: &mut dyn Read) -> Result<GaussianState> {
    let s = match a.state.as_str() {
        "vacuum" => GaussianState::vacuum(Ordering::Interleaved),
        "coupled" => GaussianState::coupled_ground_state(a.eta, a.alpha),
        path => {
            let (source, text) = read_source(path, stdin)?;
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{source}: {e}")))?
        }
    };
    Ok(s.reordered(a.ordering))
}

fn evolve(a: EvolveArgs, stdin: &mut dyn Read) -> Result<Outcome> {
    let cat = GeneratorCatalog::new(a.common.edition);
    let form = SymplecticForm::j_matrix(a.ordering);
    let start = initial_state(&a, stdin)?;
    let inputs = json!({
        "generator": a.generator,
        "theta": a.theta,
        "state": a.state,
        "eta": a.eta,
        "alpha": a.alpha,
        "ordering": a.ordering,
        "edition": a.common.edition,
        "gate": a.gate,
        "words": a.words,
        "length": a.length,
        "seed": a.seed,
    });
    if let Some(count) = a.words {
        if a.generator.is_some() {
            return Err(Error::Parse("--words and --generator are exclusive".into()));
        }
        if a.length == 0 {
            return Err(Error::Parse("--length must be at least 1".into()));
        }
        let (s1, s2) = start.symplectic_eigenvalues();
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let (mut worst, mut worst_canon, mut all_admissible) = (0.0f64, 0.0f64, true);
        for _ in 0..count {
            let len = rng.random_range(1..=a.length);
            let w = random_canonical_word(&mut rng, &cat, len, a.ordering);
            worst_canon = worst_canon.max(canonical_deviation(&w, &form)?);
            let end = transform_state(&start, &w)?;
            let (n1, n2) = end.symplectic_eigenvalues();
            worst = worst.max((n1 - s1).abs()).max((n2 - s2).abs());
            all_admissible &= end.uncertainty_ok();
        }
        let pass = worst <= 1e-10 && all_admissible;
        return Ok(Outcome {
            verb: "evolve",
            inputs,
            results: json!({
                "words": count,
                "initial_symplectic_eigenvalues": [s1, s2],
                "max_eigenvalue_deviation": worst,
                "max_canonical_deviation": worst_canon,
                "all_admissible": all_admissible,
            }),
            pass,
            csv: format!(
                "words,max_eigenvalue_deviation,max_canonical_deviation,all_admissible\n{count},{},{},{all_admissible}\n",
                fmt_f(worst),
                fmt_f(worst_canon)
            ),
            pretty: format!(
                "{count} random canonical words of length <= {}\nmax eigenvalue drift {}\nmax |M J M^T - J| {}\n{}\n",
                a.length,
                fmt_f(worst),
                fmt_f(worst_canon),
                if pass { "PASS" } else { "FAIL" }
            ),
        });
    }
    let g = match &a.generator {
        Some(name) => GroupElement::exp_generator(&cat, name.parse()?, a.theta, a.ordering),
        None => GroupElement::identity(a.ordering),
    };
    let end = transform_state(&start, &g)?;
    let (n1, n2) = end.symplectic_eigenvalues();
    let admissible = end.uncertainty_ok();
    let dev = canonical_deviation(&g, &form)?;
    let mean: Vector4<f64> = *end.mean();
    let pretty = format!(
        "transform {}\ncanonical deviation {}\nsymplectic eigenvalues {} {}\n{}\n",
        g.provenance(),
        fmt_f(dev),
        fmt_f(n1),
        fmt_f(n2),
        if admissible {
            "admissible"
        } else {
            "violates the uncertainty bound"
        }
    );
    Ok(Outcome {
        verb: "evolve",
        inputs,
        results: json!({
            "transform": {
                "provenance": g.provenance().to_string(),
                "matrix": matrix_rows(g.matrix()),
                "det": g.det(),
                "canonical": dev <= CANONICAL_TOL,
                "canonical_deviation": dev,
            },
            "initial": state_summary(&start),
            "final": end,
            "symplectic_eigenvalues": [n1, n2],
            "admissible": admissible,
            "wigner_at_mean": end.wigner_eval(&mean)?,
        }),
        pass: admissible || !a.gate,
        csv: format!(
            "nu1,nu2,admissible\n{},{},{admissible}\n",
            fmt_f(n1),
            fmt_f(n2)
        ),
        pretty,
    })
}

fn fock_check(a: FockArgs) -> Result<Outcome> {
    let checker = FockChecker::new(a.n, a.common.edition)?;
    let rows = checker.all()?;
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let failing: Vec<Value> = rows
        .iter()
        .filter(|r| r.residual > a.tol)
        .map(|r| json!([r.left, r.right]))
        .collect();
    let mut csv = String::from("left,right,residual\n");
    let mut pretty = format!(
        "N = {}, {} guarded states, max residual {}\n",
        a.n,
        checker.truncation().guarded_states().len(),
        fmt_f(worst)
    );
    for r in &rows {
        csv.push_str(&format!("{},{},{}\n", r.left, r.right, fmt_f(r.residual)));
        if r.residual > a.tol {
            pretty.push_str(&format!(
                "  FAIL [{}, {}] residual {}\n",
                r.left,
                r.right,
                fmt_f(r.residual)
            ));
        }
    }
    Ok(Outcome {
        verb: "fock-check",
        inputs: json!({ "N": a.n, "tol": a.tol, "edition": a.common.edition }),
        results: json!({
            "guarded_states": checker.truncation().guarded_states().len(),
            "pairs": rows,
            "max_residual": worst,
            "failing": failing,
        }),
        pass: failing.is_empty(),
        csv,
        pretty,
    })
}
