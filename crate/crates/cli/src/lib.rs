//! The `groupoid` command.
//!
//! Exit codes: 0 when the input is valid or the artifact was produced, 1
//! when a check ran and found violations, 2 when the input could not be
//! checked (malformed file, bad flags, resource limit).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use groupoid_core::enumerate::DEFAULT_LIMIT;
use groupoid_core::format;
use groupoid_core::{
    action_groupoid, are_isomorphic, base, check_hom, cobase, connected_components, disjoint_union,
    dualize_groupoid, enumerate_groupoids, from_classical, group_groupoid, hopf_check,
    is_group_object, orbits, pair_groupoid, partial_bijection_groupoid, product_groupoid, self_action,
    structure_theorem_check, to_classical, validate_action, validate_algebra_groupoid,
    validate_category, validate_cogroupoid, validate_groupoid, build_abelian_extension, CayleyTable,
    Error, Field, FiniteGroupoid, GroupoidHom, ValidationReport, Violation,
};
use serde_json::{json, Map, Value};

#[derive(Parser, Debug)]
#[command(name = "groupoid", version, about = "Finite groupoids, cogroupoids and actions")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Text)]
    report: ReportFormat,
    /// Worker threads for parallel steps; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write the artifact here instead of standard output.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a groupoid file (category axioms only if it has no upsilon).
    Check { file: PathBuf },
    /// Enumerate groupoids on n elements.
    Enumerate {
        n: usize,
        /// Report the labeled count.
        #[arg(long, conflicts_with = "up_to_iso")]
        labeled: bool,
        /// Report the count up to isomorphism (default).
        #[arg(long)]
        up_to_iso: bool,
        /// Write one file per isomorphism class.
        #[arg(long)]
        emit_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    /// Build a standard groupoid.
    #[command(subcommand)]
    Construct(Construct),
    /// Print the base (identities) and connected components.
    Base { file: PathBuf },
    /// Convert to the two-object presentation, or back with --inverse.
    Classical {
        file: PathBuf,
        #[arg(long)]
        inverse: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check a carrier map `{"map": [...]}` between two groupoids.
    Hom { domain: PathBuf, codomain: PathBuf, map: PathBuf },
    /// The cogroupoid of functions on a groupoid.
    Dualize {
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        field: String,
        #[command(flatten)]
        out: OutArg,
    },
    #[command(subcommand)]
    Cogroupoid(CogroupoidCmd),
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    #[command(subcommand)]
    Action(ActionCmd),
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Pair groupoid on k points.
    Pair {
        k: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Group as a one-object groupoid: Z<k>, V4, D<m>, Q8, or --table FILE.
    Group {
        name: Option<String>,
        /// `{"rows": [[...]], "unit": e}`.
        #[arg(long, conflicts_with = "name")]
        table: Option<PathBuf>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Partial bijections of a k-set.
    PartialBij {
        k: usize,
        #[arg(long, default_value_t = 4096)]
        limit: usize,
        #[command(flatten)]
        out: OutArg,
    },
    Union {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug)]
enum CogroupoidCmd {
    /// Validate a cogroupoid file.
    Check { file: PathBuf },
    /// Extract the Hopf algebra when S = T factors through the counit.
    Hopf {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Validate an algebra or an algebra groupoid object.
    Check { file: PathBuf },
    /// Abelian extension from an algebra and a bimodule.
    BuildExt {
        algebra: PathBuf,
        bimodule: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Decompose a groupoid object as kernel plus image of Σ.
    Structure { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ActionCmd {
    /// Validate an action file.
    Check { file: PathBuf },
    /// The action of a groupoid on its own carrier.
    #[command(name = "self")]
    SelfAction {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// The action groupoid.
    Semidirect {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

/// What one invocation found.
#[derive(Debug)]
struct Outcome {
    command: &'static str,
    exit_code: i32,
    summary: String,
    violations: Vec<Violation>,
    notes: Vec<String>,
    data: Map<String, Value>,
    /// File content destined for standard output (no `--out` given).
    artifact: Option<String>,
}

impl Outcome {
    fn new(command: &'static str, summary: impl Into<String>) -> Outcome {
        Outcome {
            command,
            exit_code: 0,
            summary: summary.into(),
            violations: Vec::new(),
            notes: Vec::new(),
            data: Map::new(),
            artifact: None,
        }
    }

    fn from_report(command: &'static str, what: &str, ok: String, r: ValidationReport) -> Outcome {
        let mut o = if r.is_valid() {
            Outcome::new(command, ok)
        } else {
            let mut o = Outcome::new(command, format!("invalid {what}: {r}"));
            o.exit_code = 1;
            o
        };
        o.violations = r.violations;
        o.notes = r.notes;
        o
    }

    fn with(mut self, key: &str, v: Value) -> Outcome {
        self.data.insert(key.into(), v);
        self
    }

    fn text_lines(&self) -> Vec<String> {
        let mut lines = vec![self.summary.clone()];
        lines.extend(self.violations.iter().map(|v| v.to_string()));
        lines.extend(self.notes.iter().cloned());
        lines
    }

    fn to_json(&self) -> Value {
        let status = match self.exit_code {
            0 => "ok",
            1 => "invalid",
            _ => "error",
        };
        let violations: Vec<Value> = self
            .violations
            .iter()
            .map(|v| {
                json!({
                    "axiom": v.axiom.code(),
                    "law": v.axiom.law(),
                    "derived": v.axiom.is_derived(),
                    "detail": v.detail,
                })
            })
            .collect();
        let mut data = self.data.clone();
        if let Some(a) = &self.artifact {
            data.insert("artifact".into(), serde_json::from_str(a).expect("artifact is JSON"));
        }
        json!({
            "command": self.command,
            "status": status,
            "exit_code": self.exit_code,
            "summary": self.summary,
            "violations": violations,
            "notes": self.notes,
            "data": data,
            "text": self.text_lines(),
        })
    }
}

fn error_outcome(command: &'static str, e: Error) -> Outcome {
    let mut o = Outcome::new(command, e.to_string());
    o.exit_code = if e.is_input_error() { 2 } else { 1 };
    if let Error::Rejected { report, .. } = e {
        o.violations = report.violations;
        o.notes = report.notes;
    }
    o
}

type CmdResult = Result<Outcome, Error>;

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::malformed(path.display().to_string(), e.to_string()))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::malformed(path.display().to_string(), e.to_string()))
}

fn load_groupoid(path: &Path) -> Result<FiniteGroupoid, Error> {
    format::groupoid_from_json(&read(path)?)
}

/// Sends an artifact to `--out` or keeps it for standard output.
fn deliver(mut o: Outcome, out: &OutArg, text: String) -> CmdResult {
    match &out.out {
        Some(p) => {
            write(p, &text)?;
            o.notes.push(format!("wrote {}", p.display()));
        }
        None => o.artifact = Some(text),
    }
    Ok(o)
}

fn groupoid_summary(g: &FiniteGroupoid) -> Result<String, Error> {
    let b = base(g)?;
    Ok(format!("valid groupoid, base size {}", b.len()))
}

fn cmd_check(file: &Path) -> CmdResult {
    let g = load_groupoid(file)?;
    if !g.has_inversion() {
        let r = validate_category(&g);
        let ok = if r.is_valid() {
            format!("valid category, base size {}", base(&g)?.len())
        } else {
            String::new()
        };
        return Ok(Outcome::from_report("check", "category", ok, r).with("n", json!(g.n())));
    }
    let r = validate_groupoid(&g)?;
    let ok = if r.is_valid() { groupoid_summary(&g)? } else { String::new() };
    Ok(Outcome::from_report("check", "groupoid", ok, r).with("n", json!(g.n())))
}

fn cmd_enumerate(n: usize, labeled: bool, emit_dir: Option<&Path>, limit: usize) -> CmdResult {
    let s = enumerate_groupoids(n, limit)?;
    let summary = if labeled {
        format!("n={n}: {} labeled groupoids", s.count_labeled)
    } else {
        format!("n={n}: {} classes up to isomorphism", s.count_up_to_iso)
    };
    let mut o = Outcome::new("enumerate", summary)
        .with("n", json!(n))
        .with("count_labeled", json!(s.count_labeled))
        .with("count_up_to_iso", json!(s.count_up_to_iso));
    if let Some(dir) = emit_dir {
        fs::create_dir_all(dir).map_err(|e| Error::malformed(dir.display().to_string(), e.to_string()))?;
        let mut files = Vec::new();
        for (i, g) in s.representatives.iter().enumerate() {
            let name = format!("gpd_{n}_{i}.json");
            write(&dir.join(&name), &format::groupoid_to_json(g))?;
            files.push(name);
        }
        o.notes.push(format!("wrote {} files to {}", files.len(), dir.display()));
        o = o.with("files", json!(files));
    }
    Ok(o)
}

fn named_group(name: &str) -> Result<CayleyTable, Error> {
    let bad = || Error::malformed("name", format!("unknown group {name:?}; use Z<k>, V4, D<m> or Q8"));
    let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match name {
        "V4" => Ok(CayleyTable::klein_four()),
        "Q8" => Ok(CayleyTable::quaternion()),
        _ if name.starts_with('Z') => {
            let k = number(&name[1..])?;
            if k == 0 {
                return Err(bad());
            }
            Ok(CayleyTable::cyclic(k))
        }
        _ if name.starts_with('D') => {
            let m = number(&name[1..])?;
            if m < 1 {
                return Err(bad());
            }
            Ok(CayleyTable::dihedral(m))
        }
        _ => Err(bad()),
    }
}

fn table_file(path: &Path) -> Result<CayleyTable, Error> {
    let v: Value = serde_json::from_str(&read(path)?).map_err(|e| Error::malformed("json", e.to_string()))?;
    let rows = v
        .get("rows")
        .and_then(|r| serde_json::from_value::<Vec<Vec<usize>>>(r.clone()).ok())
        .ok_or_else(|| Error::malformed("rows", "expected a square array of indices"))?;
    let unit = v
        .get("unit")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::malformed("unit", "expected an index"))?;
    CayleyTable::new(rows, unit as usize)
}

fn constructed(g: FiniteGroupoid, what: String, out: &OutArg) -> CmdResult {
    let o = Outcome::new("construct", format!("{what}: {}", groupoid_summary(&g)?)).with("n", json!(g.n()));
    deliver(o, out, format::groupoid_to_json(&g))
}

fn cmd_construct(c: &Construct) -> CmdResult {
    match c {
        Construct::Pair { k, out } => constructed(pair_groupoid(*k)?, format!("pair({k})"), out),
        Construct::Group { name, table, out } => {
            let (t, label) = match (name, table) {
                (Some(n), _) => (named_group(n)?, n.clone()),
                (None, Some(p)) => (table_file(p)?, "group".to_string()),
                (None, None) => return Err(Error::malformed("name", "give a group name or --table")),
            };
            constructed(group_groupoid(&t)?, label, out)
        }
        Construct::PartialBij { k, limit, out } => {
            constructed(partial_bijection_groupoid(*k, *limit)?, format!("partial-bij({k})"), out)
        }
        Construct::Union { left, right, out } => {
            let g = disjoint_union(&load_groupoid(left)?, &load_groupoid(right)?)?;
            constructed(g, "union".into(), out)
        }
        Construct::Product { left, right, out } => {
            let g = product_groupoid(&load_groupoid(left)?, &load_groupoid(right)?)?;
            constructed(g, "product".into(), out)
        }
    }
}

fn cmd_base(file: &Path) -> CmdResult {
    let g = load_groupoid(file)?;
    let b = base(&g)?;
    let mut o = Outcome::new("base", format!("base {b:?}")).with("base", json!(b));
    if g.has_inversion() {
        let comps = connected_components(&g)?;
        let listed: Vec<Value> = comps
            .iter()
            .map(|c| json!({ "objects": c.base, "arrows": c.morphisms, "vertex_group_order": c.vertex_group_order() }))
            .collect();
        for c in &comps {
            o.notes.push(format!(
                "component objects {:?}, {} arrows, vertex group order {}",
                c.base,
                c.morphisms.len(),
                c.vertex_group_order()
            ));
        }
        o = o.with("components", Value::Array(listed));
        if !g.is_empty() {
            o = o.with("group_object", json!(is_group_object(&g)?));
        }
    }
    Ok(o)
}

fn cmd_classical(file: &Path, inverse: bool, out: &OutArg) -> CmdResult {
    let text = read(file)?;
    if inverse {
        let c = format::classical_from_json(&text)?;
        let g = from_classical(&c)?;
        let o = Outcome::new("classical", groupoid_summary(&g)?);
        return deliver(o, out, format::groupoid_to_json(&g));
    }
    let g = format::groupoid_from_json(&text)?;
    let c = to_classical(&g)?;
    let r = c.validate()?;
    if !r.is_valid() {
        return Ok(Outcome::from_report("classical", "classical presentation", String::new(), r));
    }
    let o = Outcome::new("classical", format!("classical presentation over {} objects", c.base().len()));
    deliver(o, out, format::classical_to_json(&c))
}

fn cmd_hom(domain: &Path, codomain: &Path, map: &Path) -> CmdResult {
    let g = load_groupoid(domain)?;
    let k = load_groupoid(codomain)?;
    let f = format::carrier_map_from_json(&read(map)?)?;
    let r = check_hom(&GroupoidHom::new(&g, &k, f))?;
    Ok(Outcome::from_report("hom", "homomorphism", "valid homomorphism".into(), r))
}

fn cmd_dualize(file: &Path, field: &str, out: &OutArg) -> CmdResult {
    let g = load_groupoid(file)?;
    let field: Field = field.parse()?;
    let c = dualize_groupoid(&g, field)?;
    let o = Outcome::new(
        "dualize",
        format!("cogroupoid over {}: dim C = {}, dim C2 = {}", field.descriptor(), c.c.dim(), c.csq.dim()),
    )
    .with("dim", json!(c.c.dim()))
    .with("dim_csq", json!(c.csq.dim()));
    deliver(o, out, format::cogroupoid_to_json(&c))
}

fn cmd_cogroupoid(c: &CogroupoidCmd) -> CmdResult {
    match c {
        CogroupoidCmd::Check { file } => {
            let cg = format::cogroupoid_from_json(&read(file)?)?;
            let r = validate_cogroupoid(&cg)?;
            if !r.is_valid() {
                return Ok(Outcome::from_report("cogroupoid", "cogroupoid", String::new(), r));
            }
            let fixed = cobase(&cg)?.len();
            let mut o = Outcome::from_report(
                "cogroupoid",
                "cogroupoid",
                format!("valid cogroupoid, cobase dimension {fixed}"),
                r,
            );
            o.data.insert("dim".into(), json!(cg.c.dim()));
            o.data.insert("dim_csq".into(), json!(cg.csq.dim()));
            o.data.insert("cobase_dim".into(), json!(fixed));
            Ok(o)
        }
        CogroupoidCmd::Hopf { file, out } => {
            let cg = format::cogroupoid_from_json(&read(file)?)?;
            match hopf_check(&cg)? {
                Some(h) => {
                    let o = Outcome::new("cogroupoid", format!("Hopf algebra of dimension {}", h.algebra.dim()));
                    deliver(o, out, format::hopf_to_json(&h))
                }
                None => {
                    let mut o = Outcome::new(
                        "cogroupoid",
                        "not a Hopf algebra: S and T do not both equal unit times counit",
                    );
                    o.exit_code = 1;
                    Ok(o)
                }
            }
        }
    }
}

fn cmd_algebra(c: &AlgebraCmd) -> CmdResult {
    match c {
        AlgebraCmd::Check { file } => {
            let text = read(file)?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::malformed("json", e.to_string()))?;
            if v.get("sigma").is_some() {
                let a = format::algebra_groupoid_from_json(&text)?;
                let r = validate_algebra_groupoid(&a)?;
                Ok(Outcome::from_report("algebra", "algebra groupoid object", "valid algebra groupoid object".into(), r))
            } else {
                let a = format::algebra_from_json(&text)?;
                let r = a.check_associative();
                let ok = format!(
                    "valid algebra of dimension {}, {}, {}",
                    a.dim(),
                    if a.is_commutative() { "commutative" } else { "noncommutative" },
                    if a.unit().is_some() { "unital" } else { "non-unital" },
                );
                Ok(Outcome::from_report("algebra", "algebra", ok, r))
            }
        }
        AlgebraCmd::BuildExt { algebra, bimodule, out } => {
            let h = format::algebra_from_json(&read(algebra)?)?;
            let n = format::bimodule_from_json(&read(bimodule)?, h.field())?;
            let a = build_abelian_extension(&h, &n)?;
            let o = Outcome::new(
                "algebra",
                format!("abelian extension: dim G = {}, dim G2 = {}", a.g.dim(), a.g2_dim()),
            );
            deliver(o, out, format::algebra_groupoid_to_json(&a))
        }
        AlgebraCmd::Structure { file } => {
            let a = format::algebra_groupoid_from_json(&read(file)?)?;
            let s = structure_theorem_check(&a)?;
            let mut o = Outcome::new(
                "algebra",
                if s.all_pass() {
                    format!("structure theorem holds: dim ker Σ = {}, dim im Σ = {}", s.dim_kernel, s.dim_image)
                } else {
                    "structure theorem fails".to_string()
                },
            );
            if !s.all_pass() {
                o.exit_code = 1;
            }
            o.notes = s.details.clone();
            Ok(o.with("sigma_equals_tau", json!(s.sigma_equals_tau))
                .with("upsilon_splits", json!(s.upsilon_splits))
                .with("kernel_square_zero", json!(s.kernel_square_zero))
                .with("mu_is_sum", json!(s.mu_is_sum))
                .with("dim_kernel", json!(s.dim_kernel))
                .with("dim_image", json!(s.dim_image)))
        }
    }
}

fn cmd_action(c: &ActionCmd) -> CmdResult {
    match c {
        ActionCmd::Check { file } => {
            let a = format::action_from_json(&read(file)?)?;
            let r = validate_action(&a)?;
            let ok = if r.is_valid() {
                format!("valid action on {} points, {} orbits", a.m(), orbits(&a).len())
            } else {
                String::new()
            };
            Ok(Outcome::from_report("action", "action", ok, r))
        }
        ActionCmd::SelfAction { file, out } => {
            let a = self_action(&load_groupoid(file)?)?;
            let o = Outcome::new("action", format!("self-action on {} points", a.m()));
            deliver(o, out, format::action_to_json(&a))
        }
        ActionCmd::Semidirect { file, out } => {
            let a = format::action_from_json(&read(file)?)?;
            let g = action_groupoid(&a)?;
            let mut o = Outcome::new("action", format!("action groupoid: {}", groupoid_summary(&g)?));
            if are_isomorphic(&g, a.groupoid()).is_some() {
                o.notes.push("isomorphic to the acting groupoid".into());
            }
            deliver(o, out, format::groupoid_to_json(&g))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check { .. } => "check",
        Command::Enumerate { .. } => "enumerate",
        Command::Construct(_) => "construct",
        Command::Base { .. } => "base",
        Command::Classical { .. } => "classical",
        Command::Hom { .. } => "hom",
        Command::Dualize { .. } => "dualize",
        Command::Cogroupoid(_) => "cogroupoid",
        Command::Algebra(_) => "algebra",
        Command::Action(_) => "action",
    }
}

fn dispatch(c: &Command) -> CmdResult {
    match c {
        Command::Check { file } => cmd_check(file),
        Command::Enumerate { n, labeled, emit_dir, limit, .. } => {
            cmd_enumerate(*n, *labeled, emit_dir.as_deref(), *limit)
        }
        Command::Construct(c) => cmd_construct(c),
        Command::Base { file } => cmd_base(file),
        Command::Classical { file, inverse, out } => cmd_classical(file, *inverse, out),
        Command::Hom { domain, codomain, map } => cmd_hom(domain, codomain, map),
        Command::Dualize { file, field, out } => cmd_dualize(file, field, out),
        Command::Cogroupoid(c) => cmd_cogroupoid(c),
        Command::Algebra(c) => cmd_algebra(c),
        Command::Action(c) => cmd_action(c),
    }
}

/// Runs one command, writing the report to `out` and diagnostics to `err`.
pub fn run_with(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: thread pool: {e}");
            return 2;
        }
    };
    let outcome = pool
        .install(|| dispatch(&cli.command))
        .unwrap_or_else(|e| error_outcome(name, e));
    let written = match cli.report {
        ReportFormat::Json => {
            let mut s = serde_json::to_string(&outcome.to_json()).expect("serializable");
            s.push('\n');
            out.write_all(s.as_bytes())
        }
        ReportFormat::Text => match (&outcome.artifact, outcome.exit_code) {
            (Some(a), 0) => out.write_all(a.as_bytes()),
            (_, 2) => err.write_all(format!("error: {}\n", outcome.summary).as_bytes()),
            _ => {
                let mut s = outcome.text_lines().join("\n");
                s.push('\n');
                out.write_all(s.as_bytes())
            }
        },
    };
    if written.is_err() {
        return 2;
    }
    outcome.exit_code
}

/// Runs one command against the process's standard streams.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
