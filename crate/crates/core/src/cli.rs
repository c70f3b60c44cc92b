//! Command-line front end. `run` returns the exit status and the text for
//! stdout and stderr so that the binary stays a thin wrapper.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::codes::{code_params, hilbert_function, monomials_of_degree, parse_degree};
use crate::gfq::{Elem, Field};
use crate::points::{enumerate_points, length_count, length_snf};
use crate::poly::{ideal_equal, irredundant, PolyRing, Polynomial};
use crate::toric::{Guards, ToricInstance};
use crate::vanish::{
    ideal_via_elimination, ideal_via_lattice, is_complete_intersection, is_q_homogeneous,
    lattice_degenerate, lattice_l, lattice_via_colon, VanishingIdealResult,
};
use crate::{Error, IntLattice, IntMatrix, Result};

#[derive(Parser, Debug)]
#[command(
    name = "toricode",
    version,
    about = "Vanishing ideals and parameters of parameterized toric codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Instance file (JSON).
    #[arg(long)]
    input: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generators of the vanishing ideal of Y_Q.
    Ideal {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = IdealMethod::Both)]
        method: IdealMethod,
    },
    /// Basis of the lattice L with I(Y_Q) = I_L.
    Lattice {
        #[command(flatten)]
        common: Common,
        /// Also report the colon shortcut, homogeneity of Q and, for diagonal Q,
        /// the degenerate-torus lattice.
        #[arg(long)]
        shortcut: bool,
    },
    /// Length N = |Y_Q| of the codes.
    Length {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = LengthMethod::All)]
        method: LengthMethod,
    },
    /// Length, dimension and optionally minimum distance at a degree.
    Params {
        #[command(flatten)]
        common: Common,
        /// Degree, comma separated; overrides the file.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Also compute the minimum distance by exhaustive search.
        #[arg(long)]
        distance: bool,
        /// Print the generator matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Multigraded Hilbert function of I(Y_Q).
    Hf {
        #[command(flatten)]
        common: Common,
        /// Degree, comma separated; overrides the file.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Box of degrees, e.g. `-6..-4,0..2` (inclusive ranges).
        #[arg(long, allow_hyphen_values = true)]
        sweep: Option<String>,
    },
    /// Complete-intersection test for I(Y_Q).
    CheckCi {
        #[command(flatten)]
        common: Common,
    },
    /// Canonical representatives of Y_Q.
    Points {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum IdealMethod {
    Elim,
    Lattice,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum LengthMethod {
    Count,
    Snf,
    Points,
    All,
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct GuardsFile {
    enumeration: Option<u64>,
    groebner: Option<usize>,
    monomial_box: Option<u64>,
    distance: Option<u64>,
    ci_box: Option<i64>,
    dominating_size: Option<usize>,
}

/// The JSON instance format.
#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub q: u64,
    pub phi: Vec<Vec<i64>>,
    #[serde(rename = "Q")]
    pub q_mat: Vec<Vec<i64>>,
    #[serde(default)]
    pub beta: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub alpha: Option<Vec<i64>>,
    #[serde(default)]
    guards: Option<GuardsFile>,
}

fn matrix(name: &str, rows: &[Vec<i64>], cols: Option<usize>) -> Result<IntMatrix> {
    let width = cols.or_else(|| rows.first().map(Vec::len)).unwrap_or(0);
    if let Some(row) = rows.iter().find(|r| r.len() != width) {
        return Err(Error::InvalidInput(format!(
            "{name}: row of length {} where {width} was expected",
            row.len()
        )));
    }
    Ok(IntMatrix::from_i64_rows(rows, width))
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("instance file: {e}")))
    }

    pub fn instance(&self) -> Result<ToricInstance> {
        let field = Arc::new(Field::new(self.q)?);
        if self.phi.is_empty() {
            return Err(Error::InvalidInput("phi has no rows".into()));
        }
        let phi = matrix("phi", &self.phi, None)?;
        let q_mat = matrix("Q", &self.q_mat, Some(phi.rows()))?;
        let beta = match &self.beta {
            Some(b) => Some(matrix("beta", b, Some(phi.rows()))?),
            None => None,
        };
        let mut guards = Guards::default();
        if let Some(g) = &self.guards {
            guards.enumeration = g.enumeration.unwrap_or(guards.enumeration);
            guards.groebner = g.groebner.unwrap_or(guards.groebner);
            guards.monomial_box = g.monomial_box.unwrap_or(guards.monomial_box);
            guards.distance = g.distance.unwrap_or(guards.distance);
            guards.ci_box = g.ci_box.unwrap_or(guards.ci_box);
            guards.dominating_size = g.dominating_size.unwrap_or(guards.dominating_size);
        }
        ToricInstance::new(field, phi, beta, q_mat, guards)
    }
}

/// Outcome of one invocation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn common(cmd: &Command) -> &Common {
    match cmd {
        Command::Ideal { common, .. }
        | Command::Lattice { common, .. }
        | Command::Length { common, .. }
        | Command::Params { common, .. }
        | Command::Hf { common, .. }
        | Command::CheckCi { common }
        | Command::Points { common } => common,
    }
}

fn execute(cmd: &Command) -> Result<String> {
    let c = common(cmd);
    let text = std::fs::read_to_string(&c.input)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", c.input.display())))?;
    let file = InstanceFile::parse(&text)?;
    let inst = file.instance()?;
    let mut report = Report::new(&inst, c.json);
    match cmd {
        Command::Ideal { method, .. } => cmd_ideal(&inst, *method, &mut report)?,
        Command::Lattice { shortcut, .. } => cmd_lattice(&inst, *shortcut, &mut report)?,
        Command::Length { method, .. } => cmd_length(&inst, *method, &mut report)?,
        Command::Params {
            alpha,
            distance,
            matrix,
            ..
        } => {
            let alpha = degree(&file, alpha.as_deref())?;
            cmd_params(&inst, &alpha, *distance, *matrix, &mut report)?
        }
        Command::Hf { alpha, sweep, .. } => cmd_hf(
            &inst,
            &file,
            alpha.as_deref(),
            sweep.as_deref(),
            &mut report,
        )?,
        Command::CheckCi { .. } => cmd_check_ci(&inst, &mut report)?,
        Command::Points { .. } => cmd_points(&inst, &mut report)?,
    }
    Ok(report.finish())
}

fn degree(file: &InstanceFile, flag: Option<&str>) -> Result<Vec<BigInt>> {
    match (flag, &file.alpha) {
        (Some(text), _) => parse_degree(text),
        (None, Some(a)) => Ok(a.iter().map(|&x| BigInt::from(x)).collect()),
        (None, None) => Err(Error::InvalidInput(
            "no degree: pass --alpha or set \"alpha\" in the file".into(),
        )),
    }
}

/// Accumulates either text lines or a JSON object.
struct Report {
    json: Option<serde_json::Map<String, Value>>,
    text: String,
}

fn int_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    m.row_vecs()
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn json_ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big_json).collect())
}

fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(i) => json!(i),
        Err(_) => json!(x.to_string()),
    }
}

fn bracket(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl Report {
    fn new(inst: &ToricInstance, json: bool) -> Self {
        let names: Vec<String> = (1..=inst.r).map(|i| format!("x_{i}")).collect();
        let source = if inst.beta_supplied {
            "supplied"
        } else {
            "derived"
        };
        if json {
            let mut map = serde_json::Map::new();
            map.insert("q".into(), json!(inst.q()));
            map.insert(
                "beta".into(),
                json!(inst
                    .beta
                    .row_vecs()
                    .iter()
                    .map(|r| json_ints(r))
                    .collect::<Vec<_>>()),
            );
            map.insert("beta_source".into(), json!(source));
            map.insert("variables".into(), json!(names));
            map.insert("order".into(), json!("lex"));
            Report {
                json: Some(map),
                text: String::new(),
            }
        } else {
            let rows: Vec<String> = inst.beta.row_vecs().iter().map(|r| bracket(r)).collect();
            let mut text = String::new();
            let _ = writeln!(text, "q = {}", inst.q());
            let _ = writeln!(text, "beta ({source}) = [{}]", rows.join(", "));
            let _ = writeln!(text, "order = lex {}", names.join(" > "));
            Report { json: None, text }
        }
    }

    fn is_json(&self) -> bool {
        self.json.is_some()
    }

    fn put(&mut self, key: &str, value: Value) {
        if let Some(map) = &mut self.json {
            map.insert(key.into(), value);
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        if self.json.is_none() {
            self.text.push_str(s.as_ref());
            self.text.push('\n');
        }
    }

    fn finish(self) -> String {
        match self.json {
            Some(map) => {
                let mut s =
                    serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
                s.push('\n');
                s
            }
            None => self.text,
        }
    }
}

fn poly_json(ring: &PolyRing, f: &Polynomial) -> Value {
    let field = ring.field();
    let terms: Vec<Value> = f
        .terms()
        .iter()
        .map(|t| json!({ "coeff": field.export(t.coeff), "exp": t.exp }))
        .collect();
    json!({ "text": ring.render(f), "terms": terms })
}

fn lattice_json(l: &IntLattice) -> Value {
    Value::Array(l.basis_vectors().iter().map(|v| json_ints(v)).collect())
}

fn lattice_lines(report: &mut Report, label: &str, l: &IntLattice) {
    report.line(format!("{label} (rank {}):", l.rank()));
    for v in l.basis_vectors() {
        report.line(format!("  {}", bracket(&v)));
    }
}

fn cmd_ideal(inst: &ToricInstance, method: IdealMethod, report: &mut Report) -> Result<()> {
    let mut results: Vec<VanishingIdealResult> = Vec::new();
    if matches!(method, IdealMethod::Elim | IdealMethod::Both) {
        results.push(ideal_via_elimination(inst)?);
    }
    if matches!(method, IdealMethod::Lattice | IdealMethod::Both) {
        results.push(ideal_via_lattice(inst)?);
    }
    let mut entries = Vec::new();
    for res in &results {
        let minimal = irredundant(&res.ring, &res.generators)?;
        report.line(format!("method {}:", res.method.name()));
        report.line(format!("  ring order: lex {}", res.order));
        report.line(format!("  groebner basis ({}):", res.generators.len()));
        for g in &res.generators {
            report.line(format!("    {}", res.ring.render(g)));
        }
        report.line(format!("  generators ({}):", minimal.len()));
        for g in &minimal {
            report.line(format!("    {}", res.ring.render(g)));
        }
        let mut entry = json!({
            "method": res.method.name(),
            "ring_order": res.order,
            "groebner_basis": res.generators.iter().map(|g| poly_json(&res.ring, g)).collect::<Vec<_>>(),
            "generators": minimal.iter().map(|g| poly_json(&res.ring, g)).collect::<Vec<_>>(),
        });
        if let Some(l) = &res.lattice {
            entry["lattice"] = lattice_json(l);
        }
        entries.push(entry);
    }
    report.put("results", Value::Array(entries));
    if let [a, b] = results.as_slice() {
        let equal = ideal_equal(&a.ring, &a.generators, &b.generators)?;
        report.line(format!("ideals equal: {}", yes_no(equal)));
        report.put("equal", json!(equal));
    }
    Ok(())
}

fn cmd_lattice(inst: &ToricInstance, shortcut: bool, report: &mut Report) -> Result<()> {
    let l = lattice_l(inst);
    let index = l.index_in(&inst.l_beta());
    lattice_lines(report, "lattice L", &l);
    report.put("lattice", lattice_json(&l));
    if let Some(i) = &index {
        report.line(format!("index in ker beta: {i}"));
        report.put("index", big_json(i));
    }
    if shortcut {
        let colon = lattice_via_colon(inst)?;
        lattice_lines(
            report,
            "colon shortcut (L_Q ∩ L_beta) + (q-1) L_beta",
            &colon.lattice,
        );
        report.line(format!(
            "colon condition holds: {}",
            yes_no(colon.condition_holds)
        ));
        let homogeneous = is_q_homogeneous(inst);
        report.line(format!("Q homogeneous: {}", yes_no(homogeneous)));
        report.put("shortcut", lattice_json(&colon.lattice));
        report.put("condition_holds", json!(colon.condition_holds));
        report.put("q_homogeneous", json!(homogeneous));
        match lattice_degenerate(inst) {
            Ok(d) => {
                lattice_lines(report, "degenerate-torus lattice", &d);
                report.put("degenerate", lattice_json(&d));
            }
            Err(Error::NotDiagonal) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

fn cmd_length(inst: &ToricInstance, method: LengthMethod, report: &mut Report) -> Result<()> {
    let mut values: Vec<BigInt> = Vec::new();
    if matches!(method, LengthMethod::Count | LengthMethod::All) {
        let c = length_count(inst)?;
        report.line(format!(
            "count: N = {} (parameters in kernel: {})",
            c.length, c.kernel_size
        ));
        report.put(
            "count",
            json!({ "length": c.length, "kernel_size": c.kernel_size }),
        );
        values.push(c.length.into());
    }
    if matches!(method, LengthMethod::Snf | LengthMethod::All) {
        let n = length_snf(inst);
        report.line(format!("snf: N = {n}"));
        report.put("snf", big_json(&n));
        values.push(n);
    }
    if matches!(method, LengthMethod::Points | LengthMethod::All) {
        let n = enumerate_points(inst)?.len();
        report.line(format!("points: N = {n}"));
        report.put("points", json!(n));
        values.push(n.into());
    }
    if values.len() > 1 {
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        report.line(format!("agree: {}", yes_no(agree)));
        report.put("agree", json!(agree));
    }
    Ok(())
}

fn element_rows(field: &Field, m: &[Vec<Elem>]) -> (Vec<Vec<i64>>, Vec<String>) {
    let ints = m
        .iter()
        .map(|r| r.iter().map(|&x| field.export(x)).collect())
        .collect();
    let text = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| field.render(x))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    (ints, text)
}

fn cmd_params(
    inst: &ToricInstance,
    alpha: &[BigInt],
    distance: bool,
    matrix: bool,
    report: &mut Report,
) -> Result<()> {
    let code = code_params(inst, alpha, distance)?;
    let ring = PolyRing::standard(inst.field.clone(), inst.r);
    let monomials: Vec<String> = code
        .monomials
        .monomials
        .iter()
        .map(|m| ring.render(&ring.term(Elem::ONE, m.clone())))
        .collect();
    report.line(format!("alpha = {}", bracket(alpha)));
    report.line(format!(
        "monomials ({}): {}",
        monomials.len(),
        monomials.join(", ")
    ));
    report.line(format!("N = {}", code.length));
    report.line(format!("k = {}", code.dimension));
    if distance {
        let d = code.distance.map_or("-".to_string(), |d| d.to_string());
        report.line(format!("d = {d}"));
    }
    report.put("alpha", json_ints(alpha));
    report.put("monomials", json!(code.monomials.monomials));
    report.put("length", json!(code.length));
    report.put("dimension", json!(code.dimension));
    if distance {
        report.put("distance", json!(code.distance));
    }
    if matrix {
        let (ints, text) = element_rows(&inst.field, &code.generator_matrix);
        report.line("generator matrix (rows are points):");
        for row in text {
            report.line(format!("  {row}"));
        }
        report.put("generator_matrix", json!(ints));
    }
    Ok(())
}

fn parse_sweep(text: &str) -> Result<Vec<(i64, i64)>> {
    let bad = || {
        Error::InvalidInput(format!(
            "bad sweep {text:?}; expected ranges like -6..-4,0..2"
        ))
    };
    text.split(',')
        .map(|part| {
            let (a, b) = part.trim().split_once("..").ok_or_else(bad)?;
            let lo: i64 = a.trim().parse().map_err(|_| bad())?;
            let hi: i64 = b.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok((lo, hi))
        })
        .collect()
}

fn cmd_hf(
    inst: &ToricInstance,
    file: &InstanceFile,
    alpha: Option<&str>,
    sweep: Option<&str>,
    report: &mut Report,
) -> Result<()> {
    let ideal = ideal_via_lattice(inst)?;
    let degrees: Vec<Vec<BigInt>> = match sweep {
        Some(text) => {
            let ranges = parse_sweep(text)?;
            if ranges.len() != inst.d {
                return Err(Error::DimensionMismatch(format!(
                    "sweep has {} ranges; the grading has {}",
                    ranges.len(),
                    inst.d
                )));
            }
            let cells: u128 = ranges.iter().map(|(a, b)| (b - a + 1) as u128).product();
            if cells > inst.guards.monomial_box as u128 {
                return Err(Error::guard(
                    "degree sweep",
                    cells,
                    inst.guards.monomial_box as u128,
                ));
            }
            let mut out = vec![Vec::new()];
            for (lo, hi) in ranges {
                out = out
                    .into_iter()
                    .flat_map(|p: Vec<BigInt>| {
                        (lo..=hi).map(move |x| {
                            let mut p = p.clone();
                            p.push(BigInt::from(x));
                            p
                        })
                    })
                    .collect();
            }
            out
        }
        None => vec![degree(file, alpha)?],
    };
    let mut rows = Vec::new();
    for a in &degrees {
        let value = hilbert_function(inst, &ideal.generators, a)?;
        let size = monomials_of_degree(inst, a)?.len();
        report.line(format!(
            "HF({}) = {value}   (monomials: {size})",
            bracket(a)
        ));
        rows.push(json!({ "alpha": json_ints(a), "value": value, "monomials": size }));
    }
    report.put("values", Value::Array(rows));
    Ok(())
}

fn cmd_check_ci(inst: &ToricInstance, report: &mut Report) -> Result<()> {
    let ci = is_complete_intersection(inst)?;
    lattice_lines(report, "lattice L", &ci.lattice);
    let source = if ci.from_search {
        "found by search"
    } else {
        "canonical"
    };
    report.line(format!("tested basis ({source}):"));
    for row in int_rows(&ci.basis) {
        report.line(format!("  [{}]", row.join(" ")));
    }
    report.line(format!("mixed: {}", yes_no(ci.mixed)));
    report.line(format!("dominating: {}", yes_no(ci.dominating)));
    let verdict = if ci.complete_intersection {
        "yes"
    } else {
        "not certified"
    };
    report.line(format!("complete intersection: {verdict}"));
    for w in &ci.warnings {
        report.line(format!("warning: {w}"));
    }
    report.put("lattice", lattice_json(&ci.lattice));
    report.put(
        "basis",
        Value::Array(ci.basis.columns().iter().map(|c| json_ints(c)).collect()),
    );
    report.put("basis_from_search", json!(ci.from_search));
    report.put("mixed", json!(ci.mixed));
    report.put("dominating", json!(ci.dominating));
    report.put("complete_intersection", json!(ci.complete_intersection));
    report.put("warnings", json!(ci.warnings));
    Ok(())
}

fn cmd_points(inst: &ToricInstance, report: &mut Report) -> Result<()> {
    let pts = enumerate_points(inst)?;
    let field = &inst.field;
    report.line(format!("N = {}", pts.len()));
    report.line("key | point");
    let mut rows = Vec::new();
    for c in &pts {
        let coords: Vec<String> = c.point.coords.iter().map(|&x| field.render(x)).collect();
        let key: Vec<String> = c.key.iter().map(ToString::to_string).collect();
        report.line(format!("[{}] | [{}]", key.join(", "), coords.join(" : ")));
        if report.is_json() {
            let exported: Vec<i64> = c.point.coords.iter().map(|&x| field.export(x)).collect();
            rows.push(json!({ "key": c.key, "point": exported, "dlogs": c.point.dlogs }));
        }
    }
    report.put("length", json!(pts.len()));
    report.put("points", Value::Array(rows));
    Ok(())
}
