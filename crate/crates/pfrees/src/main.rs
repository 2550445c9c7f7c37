use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfrees_core::covergraph::{build_g, cover_ideal, cover_sizes, is_unmixed, label, minimal_vertex_covers};
use pfrees_core::diagonal::{diagonal_presentation_11, diagonal_reduce};
use pfrees_core::groebner::{ideal_equal, IdealHandle};
use pfrees_core::koszulcheck::{antidiagonal_order, koszul_certify, koszul_refute_via_powers, KoszulStatus};
use pfrees_core::matalg::skew_tridiagonal;
use pfrees_core::orders::{order_pool, ORDER_SAMPLE, ORDER_SEED};
use pfrees_core::pfideal::pf_ideal_maximal;
use pfrees_core::rees::{explicit_generic_relations, linear_type_verdict, rees_by_elimination, taylor_rees, ReesPresentation};
use pfrees_core::resolution::{betti_table, has_linear_resolution};
use pfrees_core::{Budget, MonomialOrder, Polynomial, Ring};
use pfrees::budget::{resolve_seconds, Deadline};
use pfrees::certificate::{certificate_to_json, replay};
use pfrees::claims::registry;
use pfrees::config::Config;
use pfrees::error::CliError;
use pfrees::family::{pfaffian_generators, Family};
use pfrees::formats::{
    betti_to_json, format_edge_list, graph_to_json, ideal_to_json, order_to_json, parse_graph, parse_order, SCHEMA,
};
use pfrees::report::{aggregate_exit, ClaimReport, Status};
use pfrees::runner::{default_jobs, run_claims, RunOptions};
use serde_json::{json, Value};

/// Pfaffian ideals, their Rees algebras and diagonal subalgebras.
#[derive(Debug, Parser)]
#[command(name = "pfrees", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Monomial order: `grevlex`, `grlex` or `lex`, optionally `kind:a>b>...`.
    #[arg(long, global = true)]
    order: Option<String>,
    /// Wall-clock budget; overrides PFREES_BUDGET and the config file.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Worker threads for `verify`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// TOML file with budget_seconds, order_sample, order_seed, jobs.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct FamilyArgs {
    /// Generic skew-symmetric matrix of order N.
    #[arg(long, value_name = "N")]
    generic: Option<usize>,
    /// Tridiagonal skew-symmetric matrix of odd order N.
    #[arg(long, value_name = "N")]
    tridiagonal: Option<usize>,
    /// Sparse matrix of order 2R+1 with the four-entry block pattern.
    #[arg(long, value_name = "R")]
    blockx4: Option<usize>,
    /// The sparse matrix of order 7.
    #[arg(long)]
    sparse7: bool,
    /// Skew-symmetric matrix read from a text file.
    #[arg(long, value_name = "FILE")]
    custom: Option<PathBuf>,
}

impl FamilyArgs {
    fn family(&self) -> Family {
        if let Some(n) = self.generic {
            Family::Generic(n)
        } else if let Some(n) = self.tridiagonal {
            Family::Tridiagonal(n)
        } else if let Some(r) = self.blockx4 {
            Family::BlockX4(r)
        } else if self.sparse7 {
            Family::Sparse7
        } else {
            Family::Custom(self.custom.clone().expect("clap enforces one family"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Elimination,
    Explicit,
    Taylor,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Pfaffian ideal of a matrix.
    Pf {
        #[command(flatten)]
        family: FamilyArgs,
        /// Order of the Pfaffians (even).
        #[arg(long)]
        t: Option<usize>,
        /// Use the closed-form generators of the family.
        #[arg(long)]
        closed_form: bool,
    },
    /// Defining ideal of the Rees algebra.
    Rees {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Elimination)]
        method: Method,
        /// Decide linear type and Gröbner linear type.
        #[arg(long)]
        verdict: bool,
    },
    /// Graded Betti numbers of the quotient by the Pfaffian ideal.
    Betti {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// The (1,1)-diagonal of the Rees algebra.
    Diag {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        t: Option<usize>,
        /// Substitute away the identified variables.
        #[arg(long)]
        reduce: bool,
        /// Also compute the Krull dimension.
        #[arg(long)]
        dimension: bool,
    },
    /// Minimal vertex covers of a labeled bipartite graph.
    Graph {
        /// The graph attached to the tridiagonal matrix of odd order N.
        #[arg(long, value_name = "N", conflicts_with = "edges", required_unless_present = "edges")]
        n: Option<usize>,
        /// Edge list or graph JSON file.
        #[arg(long, value_name = "FILE")]
        edges: Option<PathBuf>,
        /// Compare the cover ideal with the tridiagonal Pfaffian ideal.
        #[arg(long)]
        ideal_check: bool,
    },
    /// Certify or refute Koszulness of the Rees algebra.
    Koszul {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Elimination)]
        method: Method,
        /// Look for a non-linear Betti entry of I^j for j up to this bound.
        #[arg(long, value_name = "J")]
        powers: Option<u32>,
        #[arg(long, value_name = "FILE")]
        certificate_out: Option<PathBuf>,
    },
    /// Run registered checks.
    Verify {
        /// Claim ids, see `--list`.
        ids: Vec<String>,
        /// Every registered claim.
        #[arg(long)]
        all: bool,
        /// Skip claims carrying this tag.
        #[arg(long, value_name = "TAG")]
        skip: Vec<String>,
        /// Replay a certificate file.
        #[arg(long, value_name = "FILE")]
        replay: Option<PathBuf>,
        /// List the registry.
        #[arg(long)]
        list: bool,
        /// Write each witness to DIR/<id>.json.
        #[arg(long, value_name = "DIR")]
        certificate_dir: Option<PathBuf>,
    },
}

/// A command's result in both renderings.
struct Rendered {
    json: Value,
    text: String,
    code: i32,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Rendered { json, text, code: 0 }
    }
}

/// Stages finished so far, reported when the budget runs out.
#[derive(Default)]
struct Progress(Vec<String>);

impl Progress {
    fn done(&mut self, s: impl Into<String>) {
        self.0.push(s.into());
    }
}

struct Ctx {
    order: Option<String>,
    config: Config,
    deadline: Deadline,
}

impl Ctx {
    fn order_for(&self, ring: &Ring) -> Result<Option<MonomialOrder>, CliError> {
        self.order.as_deref().map(|s| parse_order(s, ring)).transpose()
    }

    /// The requested order, then grevlex, grlex, lex and seeded random orders.
    fn pool(&self, ring: &Ring, first: Vec<MonomialOrder>) -> Result<Vec<MonomialOrder>, CliError> {
        let n = ring.nvars();
        let mut named: Vec<MonomialOrder> = self.order_for(ring)?.into_iter().collect();
        named.extend(first);
        named.extend([MonomialOrder::grevlex(n), MonomialOrder::grlex(n), MonomialOrder::lex(n)]);
        let sample = self.config.order_sample.unwrap_or(ORDER_SAMPLE);
        let seed = self.config.order_seed.unwrap_or(ORDER_SEED);
        Ok(order_pool(n, &named, sample, seed))
    }
}

fn strs(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn lines(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| format!("{p}\n")).collect()
}

fn base_ideal(family: &Family, t: Option<usize>) -> Result<(Ring, Vec<Polynomial>), CliError> {
    pfaffian_generators(&family.matrix()?, t)
}

fn rees_of(family: &Family, t: Option<usize>, method: Method, budget: &dyn Budget) -> Result<ReesPresentation, CliError> {
    match method {
        Method::Explicit => match family {
            Family::Generic(n) if t.is_none() => Ok(explicit_generic_relations(*n)?),
            _ => Err(CliError::Usage(String::from("--method explicit needs --generic N"))),
        },
        Method::Taylor => {
            let gens = match family {
                Family::Tridiagonal(_) | Family::BlockX4(_) if t.is_none() => family.closed_form()?,
                _ => base_ideal(family, t)?.1,
            };
            Ok(taylor_rees(&gens, 1, budget)?)
        }
        Method::Elimination => {
            let (ring, gens) = base_ideal(family, t)?;
            if gens.is_empty() {
                return Err(CliError::Usage(String::from("the Pfaffian ideal is zero")));
            }
            Ok(rees_by_elimination(&IdealHandle::new(&ring, gens)?, budget)?)
        }
    }
}

fn census_json(r: &ReesPresentation) -> Value {
    Value::Object(r.census().iter().map(|(&(a, b), &k)| (format!("({a},{b})"), json!(k))).collect())
}

fn cmd_pf(family: &Family, t: Option<usize>, closed_form: bool) -> Result<Rendered, CliError> {
    let (ring, gens) = if closed_form {
        let gens = family.closed_form()?;
        let ring = match gens.first() {
            Some(g) => g.ring().clone(),
            None => family.matrix()?.ring().clone(),
        };
        (ring, gens)
    } else {
        base_ideal(family, t)?
    };
    let j = serde_json::to_value(ideal_to_json(&ring, &gens)).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Rendered::ok(j, lines(&gens)))
}

fn cmd_rees(ctx: &Ctx, family: &Family, t: Option<usize>, method: Method, verdict: bool, p: &mut Progress) -> Result<Rendered, CliError> {
    let budget = &ctx.deadline;
    let r = rees_of(family, t, method, budget)?;
    p.done("presentation");
    let mut j = json!({
        "schema": SCHEMA,
        "matrix": family.describe(),
        "method": r.method().name(),
        "relations": strs(r.defining_gens()),
        "census": census_json(&r),
        "ideal": ideal_to_json(r.ring(), r.defining_gens()),
    });
    let mut text = format!("# {} relations ({})\n{}", r.defining_gens().len(), r.method().name(), lines(r.defining_gens()));
    if verdict {
        let pool = ctx.pool(r.ring(), Vec::new())?;
        let v = linear_type_verdict(&r, &pool, budget)?;
        let order = v.order.as_ref().map(|o| o.describe(r.ring()));
        j["verdict"] = json!(v.verdict.name());
        j["order"] = json!(order);
        j["orders_tried"] = json!(v.orders_tried);
        text.push_str(&format!("verdict: {}\n", v.verdict.name()));
        if let Some(o) = order {
            text.push_str(&format!("order: {o}\n"));
        }
    }
    Ok(Rendered::ok(j, text))
}

fn cmd_betti(ctx: &Ctx, family: &Family, t: Option<usize>, max_len: Option<usize>, p: &mut Progress) -> Result<Rendered, CliError> {
    let (ring, gens) = base_ideal(family, t)?;
    let ideal = IdealHandle::new(&ring, gens)?;
    let table = betti_table(&ideal, max_len.unwrap_or(ring.nvars() + 1), &ctx.deadline)?;
    p.done("betti table");
    let linear = has_linear_resolution(&ideal, &ctx.deadline)?;
    let mut j = serde_json::to_value(betti_to_json(&table)).map_err(|e| CliError::Internal(e.to_string()))?;
    j["linear_resolution"] = json!(linear);
    let text = format!("{table}linear resolution: {linear}\n");
    Ok(Rendered::ok(j, text))
}

fn cmd_diag(ctx: &Ctx, family: &Family, t: Option<usize>, reduce: bool, dimension: bool, p: &mut Progress) -> Result<Rendered, CliError> {
    let r = rees_of(family, t, Method::Elimination, &ctx.deadline)?;
    p.done("rees presentation");
    let d = diagonal_presentation_11(&r)?;
    let mut j = json!({
        "schema": SCHEMA,
        "matrix": family.describe(),
        "shape": d.shape(),
        "segre": d.segre_gens().len(),
        "relations": strs(d.extra_gens()),
    });
    let mut text = format!(
        "# {}x{} variables, {} Segre minors, {} further relations\n{}",
        d.shape().0,
        d.shape().1,
        d.segre_gens().len(),
        d.extra_gens().len(),
        lines(d.extra_gens())
    );
    if reduce {
        let red = diagonal_reduce(&d)?;
        j["substitutions"] = json!(red.substitutions);
        j["cycles"] = json!(red.cycles);
        j["reduced"] = json!(strs(red.ideal.gens()));
        j["ring"] = json!(red.ideal.ring().names());
        text.push_str("# after identification\n");
        for (a, b) in &red.substitutions {
            text.push_str(&format!("{a} -> {b}\n"));
        }
        text.push_str(&lines(red.ideal.gens()));
    }
    if dimension {
        let (dim, _) = d.ideal()?.dimension(&ctx.deadline)?;
        p.done("dimension");
        j["dimension"] = json!(dim);
        text.push_str(&format!("dimension: {dim}\n"));
    }
    Ok(Rendered::ok(j, text))
}

fn cmd_graph(ctx: &Ctx, n: Option<usize>, edges: Option<&Path>, ideal_check: bool) -> Result<Rendered, CliError> {
    let g = match (n, edges) {
        (Some(n), _) => build_g(n)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
            parse_graph(&text)?
        }
        (None, None) => return Err(CliError::Usage(String::from("give --n or --edges"))),
    };
    let covers = minimal_vertex_covers(&g)?;
    let mut j = json!({
        "schema": SCHEMA,
        "graph": graph_to_json(&g),
        "covers": covers,
        "sizes": cover_sizes(&covers),
        "unmixed": is_unmixed(&covers),
    });
    let mut text = format_edge_list(&g);
    text.push_str(&format!("# {} minimal covers\n", covers.len()));
    for c in &covers {
        text.push_str(&c.iter().map(|&v| label(v)).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    text.push_str(&format!("unmixed: {}\n", is_unmixed(&covers)));
    if ideal_check {
        let ci = cover_ideal(&g)?;
        let pf = pf_ideal_maximal(&skew_tridiagonal(g.n())?)?.ideal()?;
        let mapped = ci.gens().iter().map(|p| p.map_by_name(pf.ring())).collect::<Result<_, _>>()?;
        let same = ideal_equal(&IdealHandle::new(pf.ring(), mapped)?, &pf, &MonomialOrder::grevlex(pf.ring().nvars()), &ctx.deadline)?;
        j["cover_ideal"] = json!(strs(ci.gens()));
        j["equals_pfaffian_ideal"] = json!(same);
        text.push_str(&format!("cover ideal equals the Pfaffian ideal: {same}\n"));
    }
    Ok(Rendered::ok(j, text))
}

fn write_json_file(path: &Path, v: &impl serde::Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).map_err(|e| CliError::Internal(e.to_string()))?;
    std::fs::write(path, text + "\n").map_err(|e| CliError::Io(path.display().to_string(), e))
}

fn cmd_koszul(
    ctx: &Ctx,
    family: &Family,
    t: Option<usize>,
    method: Method,
    powers: Option<u32>,
    certificate_out: Option<&Path>,
    p: &mut Progress,
) -> Result<Rendered, CliError> {
    let budget = &ctx.deadline;
    let r = rees_of(family, t, method, budget)?;
    p.done("rees presentation");
    let first = match family {
        Family::BlockX4(k) => vec![antidiagonal_order(r.ring(), *k)?],
        _ => Vec::new(),
    };
    let pool = ctx.pool(r.ring(), first)?;
    let mut v = koszul_certify(r.defining_gens(), &pool, budget)?;
    p.done("certification");
    let mut subject: (Ring, Vec<Polynomial>) = (r.ring().clone(), r.defining_gens().to_vec());
    if v.status == KoszulStatus::Unknown {
        if let Some(jmax) = powers {
            let refute = koszul_refute_via_powers(r.base_gens(), jmax, budget)?;
            let mut log = v.log;
            log.extend(refute.log.iter().cloned());
            if refute.status == KoszulStatus::CertifiedNotKoszul {
                subject = (r.base_ring().clone(), r.base_gens().to_vec());
            }
            v = refute;
            v.log = log;
        }
    }
    let kind = v.certificate.as_ref().map(|c| c.kind());
    let mut j = json!({
        "schema": SCHEMA,
        "matrix": family.describe(),
        "status": v.status.name(),
        "certificate": kind,
        "log": v.log,
    });
    if let Some(c) = &v.certificate {
        if let pfrees_core::koszulcheck::KoszulCertificate::GQuadratic { order, .. } = c {
            j["order"] = json!(order_to_json(order, &subject.0)?);
        }
        if let Some(path) = certificate_out {
            write_json_file(path, &certificate_to_json(&subject.0, &subject.1, c)?)?;
            j["certificate_path"] = json!(path.display().to_string());
        }
    }
    let mut text = format!("status: {}\n", v.status.name());
    if let Some(k) = kind {
        text.push_str(&format!("certificate: {k}\n"));
    }
    for l in &v.log {
        text.push_str(&format!("  {l}\n"));
    }
    Ok(Rendered::ok(j, text))
}

struct VerifyArgs<'a> {
    ids: &'a [String],
    all: bool,
    skip: &'a [String],
    replay: Option<&'a Path>,
    list: bool,
    certificate_dir: Option<&'a Path>,
}

fn cmd_verify(ctx: &Ctx, budget_flag: Option<f64>, jobs: usize, a: VerifyArgs<'_>) -> Result<Rendered, CliError> {
    let reg = registry();
    if a.list {
        let j: Vec<Value> = reg
            .iter()
            .map(|c| {
                json!({
                    "id": c.id, "description": c.description, "modules": c.modules, "budget_s": c.budget_s,
                    "expected": c.expected, "reference": c.reference, "tags": c.tags,
                })
            })
            .collect();
        let text = reg
            .iter()
            .map(|c| format!("{:<28} {:>6}s {:<6} {}\n", c.id, c.budget_s, c.tags.join(","), c.description))
            .collect();
        return Ok(Rendered::ok(json!(j), text));
    }
    if let Some(path) = a.replay {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let start = Instant::now();
        let ok = replay(&text, &ctx.deadline)?;
        let status = if ok { Status::Pass } else { Status::Fail };
        let mut rep = ClaimReport::new("replay", status, start.elapsed().as_millis() as u64, 0.0, json!({"file": path.display().to_string()}));
        rep.certificate_path = Some(path.display().to_string());
        let code = aggregate_exit(std::slice::from_ref(&rep));
        let text = rep.text_line() + "\n";
        return Ok(Rendered { json: serde_json::to_value(&rep).map_err(|e| CliError::Internal(e.to_string()))?, text, code });
    }
    let selected: Vec<_> = if a.all {
        reg.into_iter().filter(|c| !a.skip.iter().any(|t| c.has_tag(t))).collect()
    } else {
        if a.ids.is_empty() {
            return Err(CliError::Usage(String::from("give claim ids, --all, --list or --replay")));
        }
        let mut out = Vec::new();
        for id in a.ids {
            match reg.iter().find(|c| c.id == id) {
                Some(c) => out.push(c.clone()),
                None => return Err(CliError::Usage(format!("unknown claim `{id}`"))),
            }
        }
        out
    };
    let opts = RunOptions { budget_s: budget_flag, certificate_dir: a.certificate_dir.map(Path::to_path_buf) };
    let reports = run_claims(&selected, jobs, &opts);
    let code = aggregate_exit(&reports);
    let json_lines: Vec<Value> = reports.iter().map(|r| serde_json::to_value(r).expect("report serializes")).collect();
    let text = reports.iter().map(|r| r.text_line() + "\n").collect();
    Ok(Rendered { json: Value::Array(json_lines), text, code })
}

fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(p.display().to_string(), e)),
        None => {
            let mut s = std::io::stdout().lock();
            s.write_all(body.as_bytes()).map_err(|e| CliError::Io(String::from("stdout"), e))
        }
    }
}

fn render(format: Format, is_verify: bool, r: &Rendered) -> String {
    match format {
        Format::Text => r.text.clone(),
        // Verify prints one object per line.
        Format::Json => match (&r.json, is_verify) {
            (Value::Array(items), true) => items.iter().map(|v| format!("{v}\n")).collect(),
            (v, _) => format!("{v}\n"),
        },
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let is_verify = matches!(cli.command, Command::Verify { .. });
    let seconds = resolve_seconds(cli.budget_seconds, config.budget_seconds, 0.0);
    let budget_flag = if is_verify && (cli.budget_seconds.is_some() || std::env::var(pfrees::budget::BUDGET_ENV).is_ok()) {
        Some(seconds)
    } else {
        cli.budget_seconds
    };
    let jobs = cli.jobs.or(config.jobs).unwrap_or_else(default_jobs);
    let ctx = Ctx { order: cli.order.clone(), config, deadline: Deadline::after(seconds) };
    let start = Instant::now();
    let mut progress = Progress::default();
    let result = match &cli.command {
        Command::Pf { family, t, closed_form } => cmd_pf(&family.family(), *t, *closed_form),
        Command::Rees { family, t, method, verdict } => cmd_rees(&ctx, &family.family(), *t, *method, *verdict, &mut progress),
        Command::Betti { family, t, max_len } => cmd_betti(&ctx, &family.family(), *t, *max_len, &mut progress),
        Command::Diag { family, t, reduce, dimension } => {
            cmd_diag(&ctx, &family.family(), *t, *reduce, *dimension, &mut progress)
        }
        Command::Graph { n, edges, ideal_check } => cmd_graph(&ctx, *n, edges.as_deref(), *ideal_check),
        Command::Koszul { family, t, method, powers, certificate_out } => {
            cmd_koszul(&ctx, &family.family(), *t, *method, *powers, certificate_out.as_deref(), &mut progress)
        }
        Command::Verify { ids, all, skip, replay, list, certificate_dir } => cmd_verify(
            &ctx,
            budget_flag,
            jobs,
            VerifyArgs {
                ids,
                all: *all,
                skip,
                replay: replay.as_deref(),
                list: *list,
                certificate_dir: certificate_dir.as_deref(),
            },
        ),
    };
    match result {
        Ok(r) => {
            emit(cli.out.as_deref(), &render(cli.format, is_verify, &r))?;
            Ok(r.code)
        }
        Err(CliError::Budget) => {
            let partial = json!({
                "schema": SCHEMA,
                "status": "BUDGET_EXCEEDED",
                "budget_s": seconds,
                "wall_ms": start.elapsed().as_millis() as u64,
                "completed": progress.0,
            });
            emit(cli.out.as_deref(), &format!("{partial}\n"))?;
            Err(CliError::Budget)
        }
        Err(e) => Err(e),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("pfrees: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
