//! Command-line surface and report rendering.
//!
//! Exit codes: 0 success (or FINITE), 2 UNDETERMINED, 1 error or FAIL.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::ar::{enumerate_partial, ext1_dim, is_injective, is_projective, tau, Enumeration, Limits};
use crate::category::IndexedCategory;
use crate::error::{Error, Result};
use crate::format::parse_algebra;
use crate::partition::{
    compose_chain, partition, postprojective_epi_chain, preinjective_mono_chain, verify_cocover, verify_cover,
    verify_propdan, Partition, PartitionKind,
};
use crate::presets::preset;
use crate::qh::{delta_good_category, delta_multiplicities, verify_delta_good, verify_tilting, QhData, QhOrder};
use crate::radical::{finite_type_certificate, rad_power_table, simple_envelopes, Clause, FiniteType, RadTable};
use crate::rep::Rep;

#[derive(Parser, Debug)]
#[command(name = "radfilt", version, about = "Radical filtrations, depths and partitions of bound quiver algebras")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Global {
    /// Algebra file (JSON).
    #[arg(long, global = true, conflicts_with = "preset")]
    pub algebra: Option<PathBuf>,
    /// Built-in algebra: A1, A2, A3, N3, kronecker, QH4.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    #[arg(long, global = true, default_value_t = Limits::default().max_dim)]
    pub max_dim: usize,
    #[arg(long, global = true, default_value_t = Limits::default().max_modules)]
    pub max_modules: usize,
    #[arg(long, global = true, default_value_t = crate::radical::DEFAULT_MAX_POWER)]
    pub max_power: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Post,
    Pre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChainKind {
    Mono,
    Epi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Propdan,
    Section3,
    Section4,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Path basis of the algebra.
    Basis,
    /// Indecomposable modules.
    Indec,
    /// Dimensions of radical powers.
    Radical {
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        pair: Option<Vec<String>>,
        #[arg(long)]
        power: Option<usize>,
    },
    /// Depth of pi:S, iota:S, theta:S (in mod A), beta:i or pi_delta:i (in F(Delta)).
    Depth {
        #[arg(long)]
        morphism: String,
    },
    /// Postprojective or preinjective partition of mod A.
    Partitions {
        #[arg(long, value_enum, default_value_t = KindArg::Post)]
        kind: KindArg,
    },
    /// Finite type certificate.
    Certify,
    /// Standard and costandard modules, quasi-hereditary check.
    Qh,
    /// Characteristic modules T(i) and beta(i).
    Tilting,
    /// The category F(Delta), its partitions, p(Delta) and q(Delta).
    Fdelta,
    /// Verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Mono chain into I_0 or epi chain from P_0 for one module.
    Chain {
        #[arg(long)]
        module: String,
        #[arg(long, value_enum)]
        kind: ChainKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Ok,
    Finite,
    Undetermined,
    Fail,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Finite => 0,
            Status::Undetermined => 2,
            Status::Fail => 1,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Finite => "FINITE",
            Status::Undetermined => "UNDETERMINED",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AlgebraSummary {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: usize,
    pub relations: usize,
    pub dim: usize,
    pub qh_order: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub algebra: AlgebraSummary,
    pub status: Status,
    #[serde(skip)]
    pub lines: Vec<String>,
    pub result: Value,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("plain data") + "\n",
            Format::Text => {
                let a = &self.algebra;
                let mut out = format!("command: {}\n", self.command);
                out += &format!(
                    "algebra: {} ({} vertices, {} arrows, {} relations, dim {})\n",
                    a.name,
                    a.vertices.len(),
                    a.arrows,
                    a.relations,
                    a.dim
                );
                for l in &self.lines {
                    out += l;
                    out.push('\n');
                }
                out += &format!("status: {}\n", self.status.label());
                out
            }
        }
    }
}

/// Parses `argv` (program name first), runs the command and renders the
/// report. Returns the text to print and the exit code.
pub fn run_command<I, T>(argv: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_command_with(argv, None)
}

/// Like [`run_command`], with the algebra given as JSON text instead of a flag.
pub fn run_command_with<I, T>(argv: I, algebra_text: Option<&str>) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return (e.render().to_string(), code);
        }
    };
    let echo = std::iter::once("radfilt".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    match run_with(&cli, &echo, algebra_text) {
        Ok(r) => (r.render(cli.global.format), r.exit_code()),
        Err(e) => (format!("error: {e}\n"), 1),
    }
}

struct Ctx {
    alg: Algebra,
    order: QhOrder,
    limits: Limits,
    max_power: usize,
    summary: AlgebraSummary,
    echo: String,
}

impl Ctx {
    fn report(&self, status: Status, lines: Vec<String>, result: Value) -> Report {
        Report { command: self.echo.clone(), algebra: self.summary.clone(), status, lines, result }
    }

    fn enumerate(&self) -> Result<Enumeration> {
        enumerate_partial(&self.alg, self.limits)
    }

    fn undetermined(&self, bound: &str, en: &Enumeration) -> Report {
        let names = en.category.names().to_vec();
        self.report(
            Status::Undetermined,
            vec![format!("enumeration stopped: {bound}"), format!("modules found before stopping: {}", names.len())],
            json!({ "bound": bound, "partial_modules": names }),
        )
    }

    /// Runs `f` on the full category, or reports UNDETERMINED.
    fn with_full(&self, f: impl FnOnce(&IndexedCategory) -> Result<Report>) -> Result<Report> {
        let en = self.enumerate()?;
        match &en.bound {
            Some(b) => Ok(self.undetermined(b, &en)),
            None => f(&en.category),
        }
    }

    fn qh(&self) -> Result<QhData> {
        QhData::new(&self.alg, self.order.clone())
    }

    fn vertex(&self, name: &str) -> Result<usize> {
        self.alg.quiver().vertex_index(name).ok_or_else(|| Error::InvalidInput(format!("unknown vertex '{name}'")))
    }
}

fn load(g: &Global, text: Option<&str>) -> Result<(Algebra, QhOrder)> {
    let file = match (text, &g.algebra, &g.preset) {
        (Some(t), _, _) => parse_algebra(t)?,
        (None, Some(p), _) => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", p.display())))?;
            parse_algebra(&text)?
        }
        (None, None, Some(name)) => preset(name)?,
        (None, None, None) => return Err(Error::InvalidInput("one of --algebra or --preset is required".into())),
    };
    file.build()
}

pub fn run(cli: &Cli, echo: &str) -> Result<Report> {
    run_with(cli, echo, None)
}

pub fn run_with(cli: &Cli, echo: &str, algebra_text: Option<&str>) -> Result<Report> {
    let (alg, order) = load(&cli.global, algebra_text)?;
    let summary = AlgebraSummary {
        name: alg.name().to_string(),
        vertices: alg.quiver().vertices().to_vec(),
        arrows: alg.arrow_count(),
        relations: alg.relations().len(),
        dim: alg.dim(),
        qh_order: order.order().iter().map(|&v| alg.vertex_name(v).to_string()).collect(),
    };
    let ctx = Ctx {
        alg,
        order,
        limits: Limits { max_modules: cli.global.max_modules, max_dim: cli.global.max_dim },
        max_power: cli.global.max_power,
        summary,
        echo: echo.to_string(),
    };
    match &cli.command {
        Command::Basis => Ok(basis(&ctx)),
        Command::Indec => indec(&ctx),
        Command::Radical { pair, power } => ctx.with_full(|c| radical(&ctx, c, pair.as_deref(), *power)),
        Command::Depth { morphism } => ctx.with_full(|c| depth(&ctx, c, morphism)),
        Command::Partitions { kind } => ctx.with_full(|c| partitions(&ctx, c, *kind)),
        Command::Certify => certify(&ctx),
        Command::Qh => qh_cmd(&ctx),
        Command::Tilting => tilting(&ctx),
        Command::Fdelta => ctx.with_full(|c| fdelta(&ctx, c)),
        Command::Verify { suite } => ctx.with_full(|c| verify(&ctx, c, *suite)),
        Command::Chain { module, kind } => ctx.with_full(|c| chain(&ctx, c, module, *kind)),
    }
}

fn clause_line(c: &Clause) -> String {
    let mark = if c.pass { "PASS" } else { "FAIL" };
    if c.detail.is_empty() {
        format!("{mark}  {}", c.name)
    } else {
        format!("{mark}  {}  ({})", c.name, c.detail)
    }
}

fn clause_status(clauses: &[Clause]) -> Status {
    if clauses.iter().all(|c| c.pass) {
        Status::Ok
    } else {
        Status::Fail
    }
}

fn names_of(c: &IndexedCategory, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| c.name(i).to_string()).collect()
}

fn name_of(c: &IndexedCategory, m: &Rep) -> String {
    c.find(m).map_or_else(|| format!("[{}] (not listed)", m.dim_vector_string()), |(i, _)| c.name(i).to_string())
}

/// `P:v`, `S:v`, `I:v`, a listed name like `[1,1,0]`, or a bare dimension vector.
fn resolve(ctx: &Ctx, c: &IndexedCategory, spec: &str) -> Result<usize> {
    if let Some(i) = c.index_of(spec) {
        return Ok(i);
    }
    if let Some(i) = c.index_of(&format!("[{spec}]")) {
        return Ok(i);
    }
    if let Some((kind, v)) = spec.split_once(':') {
        let v = ctx.vertex(v)?;
        let m = match kind {
            "P" => Rep::projective(&ctx.alg, v),
            "S" => Rep::simple(&ctx.alg, v),
            "I" => Rep::injective(&ctx.alg, v),
            _ => return Err(Error::InvalidInput(format!("unknown module kind '{kind}'"))),
        };
        return c.find(&m).map(|(i, _)| i).ok_or_else(|| Error::InvalidInput(format!("{spec} is not listed")));
    }
    Err(Error::InvalidInput(format!("unknown module '{spec}' (known: {})", c.names().join(" "))))
}

fn partition_lines(c: &IndexedCategory, p: &Partition, prefix: &str) -> (Vec<String>, Value) {
    let letter = p.kind.letter();
    let mut lines = Vec::new();
    let mut levels = Vec::new();
    for (k, l) in p.levels.iter().enumerate() {
        let ns = names_of(c, l);
        lines.push(format!("{letter}_{k}{prefix}: {}", ns.join(" ")));
        levels.push(ns);
    }
    let s = p.summary().unwrap_or(0);
    let sym = if p.kind == PartitionKind::Postprojective { "p" } else { "q" };
    lines.push(format!("{sym}{prefix} = {s}"));
    (lines, json!({ "levels": levels, sym: s }))
}

fn basis(ctx: &Ctx) -> Report {
    let alg = &ctx.alg;
    let q = alg.quiver();
    let mut lines = vec![format!("dim A = {}", alg.dim())];
    let mut paths = Vec::new();
    for p in alg.basis_paths() {
        let s = p.display(q);
        lines.push(format!("  {} -> {}: {s}", q.vertices()[p.source], q.vertices()[p.target]));
        paths.push(json!({ "from": q.vertices()[p.source], "to": q.vertices()[p.target], "path": s }));
    }
    let mut proj = serde_json::Map::new();
    for v in 0..alg.vertex_count() {
        let d = alg.dim_vector_of_projective(v);
        lines.push(format!("P({}) = [{}]", alg.vertex_name(v), join(&d)));
        proj.insert(alg.vertex_name(v).to_string(), json!(d));
    }
    ctx.report(Status::Ok, lines, json!({ "dim": alg.dim(), "paths": paths, "projectives": proj }))
}

fn join(d: &[usize]) -> String {
    d.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn indec(ctx: &Ctx) -> Result<Report> {
    let en = ctx.enumerate()?;
    let c = &en.category;
    let mut lines = vec![format!("count = {}", c.len())];
    let mut mods = Vec::new();
    for (i, m) in c.objects().iter().enumerate() {
        let proj = is_projective(m);
        let inj = is_injective(m);
        let t = if proj { "-".to_string() } else { name_of(c, &tau(m)) };
        let flags = format!("{}{}", if proj { "P" } else { "" }, if inj { "I" } else { "" });
        lines.push(format!("  {:<12} dim {:<3} {:<2} tau = {t}", c.name(i), m.total_dim(), flags));
        mods.push(json!({ "name": c.name(i), "dims": m.dims(), "projective": proj, "injective": inj, "tau": t }));
    }
    let status = match &en.bound {
        None => Status::Ok,
        Some(b) => {
            lines.push(format!("enumeration stopped: {b}"));
            Status::Undetermined
        }
    };
    Ok(ctx.report(status, lines, json!({ "count": c.len(), "complete": en.bound.is_none(), "modules": mods })))
}

fn radical(ctx: &Ctx, c: &IndexedCategory, pair: Option<&[String]>, power: Option<usize>) -> Result<Report> {
    let t = rad_power_table(c, ctx.max_power);
    let n0 = t.stabilization_index();
    let mut lines = vec![match n0 {
        Some(n) => format!("stabilizes at N0 = {n}"),
        None => format!("no fixed point within {} powers", ctx.max_power),
    }];
    if let Some([m, n]) = pair {
        let (i, j) = (resolve(ctx, c, m)?, resolve(ctx, c, n)?);
        let hom = c.hom(i, j).dim();
        let top = power.unwrap_or(t.computed());
        let dims: Vec<usize> = (1..=top).map(|k| t.power_or_hom(k, i, j).dim()).collect();
        lines.push(format!("dim Hom({}, {}) = {hom}", c.name(i), c.name(j)));
        match power {
            Some(k) => lines.push(format!(
                "dim rad^{k}({}, {}) = {}",
                c.name(i),
                c.name(j),
                dims[k - 1..].first().copied().unwrap_or(hom)
            )),
            None => lines.push(format!("dim rad^n, n = 1..{top}: {}", join(&dims))),
        }
        let result =
            json!({ "source": c.name(i), "target": c.name(j), "hom": hom, "power": power, "rad_dims": dims, "n0": n0 });
        return Ok(ctx.report(Status::Ok, lines, result));
    }
    let top = power.map_or(t.computed(), |k| k.min(t.computed()));
    let mut tables = Vec::new();
    lines
        .push(format!("objects: {}", (0..c.len()).map(|i| format!("{i}={}", c.name(i))).collect::<Vec<_>>().join(" ")));
    let header: String = (0..c.len()).map(|j| format!("{j:>3}")).collect();
    for k in 1..=top {
        lines.push(format!("dim rad^{k}(row, column):"));
        lines.push(format!("     {header}"));
        let mut rows = Vec::new();
        for i in 0..c.len() {
            let row: Vec<usize> = (0..c.len()).map(|j| t.power(k, i, j).dim()).collect();
            lines.push(format!("  {i:>3}{}", row.iter().map(|d| format!("{d:>3}")).collect::<String>()));
            rows.push(row);
        }
        tables.push(rows);
    }
    lines.push(format!("rad^inf = 0: {}", t.is_stable() && t.rad_infinity_is_zero()));
    let result = json!({ "n0": n0, "objects": c.names(), "tables": tables });
    Ok(ctx.report(Status::Ok, lines, result))
}

fn depth(ctx: &Ctx, c: &IndexedCategory, spec: &str) -> Result<Report> {
    let (kind, arg) =
        spec.split_once(':').ok_or_else(|| Error::InvalidInput(format!("morphism '{spec}' should look like pi:S")))?;
    let v = ctx.vertex(arg)?;
    let (value, scope) = match kind {
        "pi" | "iota" | "theta" => {
            let t = rad_power_table(c, ctx.max_power);
            let env = simple_envelopes(&ctx.alg).swap_remove(v);
            let f = match kind {
                "pi" => env.pi,
                "iota" => env.iota,
                _ => env.theta,
            };
            (t.depth(&f)?, "mod A")
        }
        "beta" | "pi_delta" => {
            let qh = ctx.qh()?;
            let dgc = delta_good_category(&qh, c, ctx.max_power)?;
            let f = if kind == "beta" { qh.characteristic_modules()?.swap_remove(v).beta } else { qh.pi[v].clone() };
            (dgc.depth(&f)?, "F(Delta)")
        }
        _ => return Err(Error::InvalidInput(format!("unknown morphism kind '{kind}'"))),
    };
    let lines = vec![format!("dp({spec}) = {value}  [{scope}]")];
    Ok(ctx.report(Status::Ok, lines, json!({ "morphism": spec, "scope": scope, "depth": value })))
}

fn cover_clauses(c: &IndexedCategory, p: &Partition) -> Vec<Clause> {
    (0..p.levels.len())
        .map(|k| {
            let r = match p.kind {
                PartitionKind::Postprojective => verify_cover(c, p, k),
                PartitionKind::Preinjective => verify_cocover(c, p, k),
            };
            let what = if p.kind == PartitionKind::Postprojective { "cover" } else { "cocover" };
            let mut detail = Vec::new();
            if !r.failures.is_empty() {
                detail.push(format!("misses {}", names_of(c, &r.failures).join(" ")));
            }
            if !r.redundant.is_empty() {
                detail.push(format!("redundant {}", names_of(c, &r.redundant).join(" ")));
            }
            Clause::new(format!("{}_{k} is a minimal {what}", p.kind.letter()), r.pass(), detail.join("; "))
        })
        .collect()
}

fn partitions(ctx: &Ctx, c: &IndexedCategory, kind: KindArg) -> Result<Report> {
    let kind = match kind {
        KindArg::Post => PartitionKind::Postprojective,
        KindArg::Pre => PartitionKind::Preinjective,
    };
    let p = partition(c, kind)?;
    let (mut lines, result) = partition_lines(c, &p, "");
    let clauses = cover_clauses(c, &p);
    lines.extend(clauses.iter().map(clause_line));
    Ok(ctx.report(clause_status(&clauses), lines, json!({ "partition": result, "clauses": clauses })))
}

fn certify(ctx: &Ctx) -> Result<Report> {
    let cert = finite_type_certificate(&ctx.alg, ctx.limits, ctx.max_power)?;
    let mut lines = Vec::new();
    let status = match &cert.outcome {
        FiniteType::Finite(n) => {
            lines.push(format!("indecomposables: {n}"));
            if cert.all_pass() {
                Status::Finite
            } else {
                Status::Fail
            }
        }
        FiniteType::Undetermined(b) => {
            lines.push(format!("enumeration stopped: {b}"));
            lines.push(format!("on the {} modules found before stopping:", cert.table.category().len()));
            Status::Undetermined
        }
    };
    if let Some(n) = cert.table.stabilization_index() {
        lines.push(format!("N0 = {n}"));
    }
    for s in &cert.simples {
        lines.push(format!("S({}): dp(pi) = {}, dp(iota) = {}, dp(theta) = {}", s.vertex, s.pi, s.iota, s.theta));
    }
    lines.extend(cert.clauses.iter().map(clause_line));
    let outcome = match &cert.outcome {
        FiniteType::Finite(n) => json!({ "finite": n }),
        FiniteType::Undetermined(b) => json!({ "undetermined": b }),
    };
    let result = json!({ "outcome": outcome, "n0": cert.table.stabilization_index(), "simples": cert.simples, "clauses": cert.clauses });
    Ok(ctx.report(status, lines, result))
}

fn order_clause(qh: &QhData) -> Result<Clause> {
    let mut bad = Vec::new();
    for j in 0..qh.delta.len() {
        for l in 0..qh.delta.len() {
            if qh.order.rank(j) >= qh.order.rank(l) && ext1_dim(&qh.delta[j], &qh.delta[l])? > 0 {
                bad.push(format!("({},{})", qh.alg.vertex_name(j), qh.alg.vertex_name(l)));
            }
        }
    }
    Ok(Clause::new("Ext^1(Delta(j), Delta(l)) = 0 for j >= l", bad.is_empty(), bad.join(" ")))
}

fn qh_clauses(qh: &QhData) -> Result<Vec<Clause>> {
    let mut clauses = qh.is_quasi_hereditary().clauses;
    clauses.push(order_clause(qh)?);
    Ok(clauses)
}

fn qh_cmd(ctx: &Ctx) -> Result<Report> {
    let qh = ctx.qh()?;
    let check = qh.is_quasi_hereditary();
    let mut lines = vec![format!("order: {}", ctx.summary.qh_order.join(" < "))];
    let mut rows = Vec::new();
    for &v in qh.vertices() {
        let name = ctx.alg.vertex_name(v);
        let layers: Vec<&str> = check.projective_layers[v].iter().map(|&l| ctx.alg.vertex_name(l)).collect();
        lines.push(format!(
            "{name}: Delta = [{}]  Nabla = [{}]  P layers (bottom to top) = {}",
            qh.delta[v].dim_vector_string(),
            qh.nabla[v].dim_vector_string(),
            layers.join(" ")
        ));
        rows.push(json!({ "vertex": name, "delta": qh.delta[v].dims(), "nabla": qh.nabla[v].dims(), "projective_layers": layers }));
    }
    let clauses = qh_clauses(&qh)?;
    lines.extend(clauses.iter().map(clause_line));
    Ok(ctx.report(clause_status(&clauses), lines, json!({ "vertices": rows, "clauses": clauses })))
}

fn tilting(ctx: &Ctx) -> Result<Report> {
    let qh = ctx.qh()?;
    let qc = qh_clauses(&qh)?;
    if !qc.iter().all(|c| c.pass) {
        let lines = qc.iter().map(clause_line).collect();
        return Ok(ctx.report(Status::Fail, lines, json!({ "clauses": qc })));
    }
    let ts = qh.characteristic_modules()?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for &v in qh.vertices() {
        let t = &ts[v];
        let name = ctx.alg.vertex_name(v);
        let mult = delta_multiplicities(&qh, &t.module).unwrap_or_default();
        lines.push(format!(
            "{name}: T = [{}]  beta: [{}] -> [{}] rank {}  X = [{}]  Delta-multiplicities [{}]",
            t.module.dim_vector_string(),
            qh.delta[v].dim_vector_string(),
            t.module.dim_vector_string(),
            t.beta.rank(),
            t.cokernel.dim_vector_string(),
            join(&mult)
        ));
        rows.push(json!({
            "vertex": name, "tilting": t.module.dims(), "beta_rank": t.beta.rank(),
            "cokernel": t.cokernel.dims(), "delta_multiplicities": mult,
        }));
    }
    let clauses = verify_tilting(&qh, &ts)?;
    lines.extend(clauses.iter().map(clause_line));
    Ok(ctx.report(clause_status(&clauses), lines, json!({ "vertices": rows, "clauses": clauses })))
}

fn fdelta(ctx: &Ctx, c: &IndexedCategory) -> Result<Report> {
    let qh = ctx.qh()?;
    let qc = qh_clauses(&qh)?;
    if !qc.iter().all(|c| c.pass) {
        let lines = qc.iter().map(clause_line).collect();
        return Ok(ctx.report(Status::Fail, lines, json!({ "clauses": qc })));
    }
    let dgc = delta_good_category(&qh, c, ctx.max_power)?;
    let d = dgc.category();
    let ts = qh.characteristic_modules()?;
    let outside: Vec<usize> = (0..c.len()).filter(|i| !dgc.members.contains(i)).collect();
    let mut lines = vec![
        format!("F(Delta): {} of {} indecomposables", dgc.members.len(), c.len()),
        format!("  members: {}", names_of(c, &dgc.members).join(" ")),
        format!("  outside: {}", if outside.is_empty() { "none".to_string() } else { names_of(c, &outside).join(" ") }),
    ];
    let (pl, pj) = partition_lines(d, &dgc.post, "(Delta)");
    let (il, ij) = partition_lines(d, &dgc.pre, "(Delta)");
    lines.extend(pl);
    lines.extend(il);
    let tnames: Vec<String> =
        qh.vertices().iter().map(|&v| format!("T({})={}", ctx.alg.vertex_name(v), name_of(d, &ts[v].module))).collect();
    lines.push(format!("characteristic modules: {}", tnames.join(" ")));
    let plain = names_of(d, dgc.pre_plain.levels.first().map_or(&[][..], Vec::as_slice));
    let i0 = names_of(d, dgc.pre.levels.first().map_or(&[][..], Vec::as_slice));
    if plain != i0 {
        lines.push(format!("note: counting every mono, level 0 would be {}", plain.join(" ")));
    }
    let result = json!({
        "members": names_of(c, &dgc.members), "outside": names_of(c, &outside),
        "post": pj, "pre": ij, "p_delta": dgc.p_delta(), "q_delta": dgc.q_delta(),
        "i0": i0, "i0_all_monos": plain, "tilting": tnames,
    });
    Ok(ctx.report(Status::Ok, lines, result))
}

fn propdan_clauses(c: &IndexedCategory, t: &RadTable) -> Result<Vec<Clause>> {
    let mut out = Vec::new();
    for kind in [PartitionKind::Postprojective, PartitionKind::Preinjective] {
        let p = partition(c, kind)?;
        let r = verify_propdan(t, &p);
        let label = match kind {
            PartitionKind::Postprojective => "Hom(M,N) = rad^i(M,N) for M in P_0, N in P_i",
            PartitionKind::Preinjective => "Hom(M,N) = rad^i(M,N) for M in I_i, N in I_0",
        };
        let detail = r
            .violations
            .iter()
            .map(|v| format!("{}->{} level {}: {} vs {}", v.source, v.target, v.level, v.hom_dim, v.rad_dim))
            .collect::<Vec<_>>();
        out.push(Clause::new(
            label,
            r.pass(),
            if detail.is_empty() { format!("{} pairs", r.checked) } else { detail.join("; ") },
        ));
        if !r.precondition.pass {
            out.push(r.precondition);
        }
    }
    Ok(out)
}

fn finiteness_clauses(ctx: &Ctx, c: &IndexedCategory) -> Result<Vec<Clause>> {
    let cert = finite_type_certificate(&ctx.alg, ctx.limits, ctx.max_power)?;
    let mut out = cert.clauses;
    for kind in [PartitionKind::Postprojective, PartitionKind::Preinjective] {
        out.extend(cover_clauses(c, &partition(c, kind)?));
    }
    Ok(out)
}

fn delta_good_clauses(ctx: &Ctx, c: &IndexedCategory) -> Result<Vec<Clause>> {
    let qh = ctx.qh()?;
    let mut out = qh_clauses(&qh)?;
    if !out.iter().all(|c| c.pass) {
        return Ok(out);
    }
    let ts = qh.characteristic_modules()?;
    out.extend(verify_tilting(&qh, &ts)?);
    let mut disagreements = Vec::new();
    for (i, m) in c.objects().iter().enumerate() {
        if qh.delta_membership(m)? != qh.delta_filtration(m).is_some() {
            disagreements.push(c.name(i).to_string());
        }
    }
    out.push(Clause::new(
        "Ext criterion agrees with the filtration search",
        disagreements.is_empty(),
        if disagreements.is_empty() { format!("{} modules", c.len()) } else { disagreements.join(" ") },
    ));
    let dgc = delta_good_category(&qh, c, ctx.max_power)?;
    let full = rad_power_table(c, ctx.max_power);
    let rep = verify_delta_good(&qh, &ts, &dgc, &full)?;
    let depths =
        rep.depths.iter().map(|d| format!("{}: pi {} beta {}", d.vertex, d.pi, d.beta)).collect::<Vec<_>>().join(", ");
    out.push(Clause::new("depths in F(Delta)", true, depths));
    out.extend(rep.clauses);
    Ok(out)
}

fn verify(ctx: &Ctx, c: &IndexedCategory, suite: Suite) -> Result<Report> {
    let mut sections: Vec<(&str, Vec<Clause>)> = Vec::new();
    let t = rad_power_table(c, ctx.max_power);
    if matches!(suite, Suite::Propdan | Suite::All) {
        sections.push(("propdan", propdan_clauses(c, &t)?));
    }
    if matches!(suite, Suite::Section3 | Suite::All) {
        sections.push(("section3", finiteness_clauses(ctx, c)?));
    }
    if matches!(suite, Suite::Section4 | Suite::All) {
        sections.push(("section4", delta_good_clauses(ctx, c)?));
    }
    let mut lines = Vec::new();
    let mut all = Vec::new();
    let mut result = serde_json::Map::new();
    for (name, clauses) in &sections {
        lines.push(format!("[{name}]"));
        lines.extend(clauses.iter().map(clause_line));
        result.insert(name.to_string(), json!(clauses));
        all.extend(clauses.iter().cloned());
    }
    Ok(ctx.report(clause_status(&all), lines, Value::Object(result)))
}

fn chain(ctx: &Ctx, c: &IndexedCategory, module: &str, kind: ChainKind) -> Result<Report> {
    let m = resolve(ctx, c, module)?;
    let t = rad_power_table(c, ctx.max_power);
    let (p, steps) = match kind {
        ChainKind::Mono => {
            let p = partition(c, PartitionKind::Preinjective)?;
            let s = preinjective_mono_chain(c, &p, m)?;
            (p, s)
        }
        ChainKind::Epi => {
            let p = partition(c, PartitionKind::Postprojective)?;
            let s = postprojective_epi_chain(c, &p, m)?;
            (p, s)
        }
    };
    let level = p.level_of(m).expect("partition exhausts the category");
    let mut lines = vec![format!("{} is in {}_{level}", c.name(m), p.kind.letter())];
    let mut rows = Vec::new();
    for (s, step) in steps.iter().enumerate() {
        let objs = names_of(c, &step.targets);
        let ok = match kind {
            ChainKind::Mono => step.map.is_injective(),
            ChainKind::Epi => step.map.is_surjective(),
        };
        lines.push(format!("step {}: {} ({})", s + 1, objs.join(" + "), if ok { "ok" } else { "broken" }));
        rows.push(json!({ "objects": objs, "ok": ok }));
    }
    let mut status = Status::Ok;
    let mut composite_depth = None;
    if kind == ChainKind::Mono {
        let g = compose_chain(c.object(m), &steps);
        let d = t.depth(&g)?;
        lines.push(format!("composite depth = {d}"));
        composite_depth = Some(d);
    }
    if rows.iter().any(|r| r["ok"] == json!(false)) {
        status = Status::Fail;
    }
    let result = json!({ "module": c.name(m), "level": level, "steps": rows, "composite_depth": composite_depth });
    Ok(ctx.report(status, lines, result))
}
