use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crosscap::classifier::{
    computed_class, cross_validate, report_text, report_tsv, theory_comaximal, theory_gamma, ComputedWitness,
    GraphClass, RingUniverse, TheoryVerdict,
};
use crosscap::graph::{
    build_comaximal, build_unit_graph, build_unitary_cayley, complete_bipartite, complete_graph, disjoint_copies,
    gamma_with_units, isomorphic, parse_edge_list, to_dot, to_edge_list, Graph, SubdivisionModel,
};
use crosscap::obstruction::{obstruction, ObstructionName};
use crosscap::reproduce::{exit_code, run_checks, CheckConfig, CHECKS};
use crosscap::ring::{canonicalize, compile_ring, FiniteRing, RingSpec};
use crosscap::surface::{
    crosscap_exact, CrosscapResult, EmbeddingCertificate, LowerWitness, SearchConfig, UpperWitness,
};

#[derive(Parser)]
#[command(name = "crosscap", version, about = "Crosscap numbers of graphs from finite commutative rings")]
struct Cli {
    /// Search budget in backtracking nodes, per search call.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads for searches and sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    /// Directory for certificates, obstruction models and exported graphs.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// Γ(R, U(R), S)
    Gamma,
    /// Unit graph, S = {1}
    Unit,
    /// Unitary Cayley graph, S = {-1}
    Cayley,
    Comaximal,
}

#[derive(Args, Clone)]
struct RingGraphArgs {
    /// Ring spec, e.g. "Z2 x Z3[x]/(x^2)".
    #[arg(long)]
    ring: String,
    #[arg(long, value_enum, default_value_t = FamilyArg::Gamma)]
    family: FamilyArg,
    /// Connection set for the gamma family: elements separated by commas or
    /// spaces, each a bare code, a tuple "(a,b)" or "-1"; "U" for all units.
    #[arg(long = "S", default_value = "1")]
    s: String,
}

#[derive(Subcommand)]
enum Command {
    /// Order, units, radical, locality and index-2 ideals of a ring.
    Ring { spec: String },
    /// Build a ring graph and print or export it.
    Graph(RingGraphArgs),
    /// Planar / projective / neither, from the classification and from search.
    Classify {
        #[command(flatten)]
        target: Option<RingGraphArgs>,
        /// Classify every member of the default ring universe instead.
        #[arg(long, conflicts_with = "ring")]
        universe: bool,
    },
    /// Crosscap number (or a certified bracket) of a graph.
    Crosscap {
        /// Edge-list file.
        #[arg(long, conflicts_with_all = ["ring", "named"])]
        graph: Option<PathBuf>,
        /// Named graph: "K6", "K3,4", an obstruction name, optionally "2*K5".
        #[arg(long, conflicts_with = "ring")]
        named: Option<String>,
        #[command(flatten)]
        target: Option<RingGraphArgs>,
    },
    /// The catalog of embedding obstructions.
    Obstruction {
        #[command(subcommand)]
        action: ObstructionAction,
    },
    /// Run the reproduction checks. Exit code 0: all pass, 1: a failure, 2: unknown.
    VerifyPaper {
        /// Also run the slow checks.
        #[arg(long)]
        include_slow: bool,
        /// Only run checks from this section (repeatable).
        #[arg(long)]
        section: Vec<u8>,
    },
}

#[derive(Subcommand)]
enum ObstructionAction {
    /// Names with vertex and edge counts.
    List,
    /// Print or export one obstruction graph.
    Show { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn config(cli: &Cli) -> SearchConfig {
    SearchConfig { budget: cli.budget, workers: cli.workers as usize }
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Ring { spec } => cmd_ring(cli, spec),
        Command::Graph(args) => cmd_graph(cli, args),
        Command::Classify { universe: true, .. } => cmd_universe(cli),
        Command::Classify { target: Some(args), .. } => cmd_classify(cli, args),
        Command::Classify { .. } => bail!("classify needs --ring or --universe"),
        Command::Crosscap { graph, named, target } => {
            cmd_crosscap(cli, graph.as_deref(), named.as_deref(), target.as_ref())
        }
        Command::Obstruction { action } => cmd_obstruction(cli, action),
        Command::VerifyPaper { include_slow, section } => cmd_verify(cli, *include_slow, section),
    }
}

fn parse_ring(spec: &str) -> Result<FiniteRing> {
    let spec = RingSpec::parse(spec).with_context(|| format!("ring spec {spec:?}"))?;
    Ok(compile_ring(&spec)?)
}

/// Splits on commas and whitespace that are not inside parentheses.
fn split_elements(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ' ' | '\t' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out.into_iter().map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_set(r: &FiniteRing, text: &str) -> Result<Vec<usize>> {
    let text = text.trim().trim_start_matches('{').trim_end_matches('}');
    if text.eq_ignore_ascii_case("u") || text.eq_ignore_ascii_case("units") {
        return Ok(r.units().to_vec());
    }
    let mut s = split_elements(text).into_iter().map(|e| r.parse_element(e)).collect::<Result<Vec<_>, _>>()?;
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

fn format_set(r: &FiniteRing, s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|&x| r.format_element(x)).collect();
    format!("{{{}}}", parts.join(","))
}

struct RingGraph {
    ring: FiniteRing,
    s: Vec<usize>,
    graph: Graph,
    family: FamilyArg,
}

fn ring_graph(args: &RingGraphArgs) -> Result<RingGraph> {
    let ring = parse_ring(&args.ring)?;
    let (s, graph) = match args.family {
        FamilyArg::Gamma => {
            let s = parse_set(&ring, &args.s)?;
            let g = gamma_with_units(&ring, &s, false)?;
            (s, g)
        }
        FamilyArg::Unit => (vec![ring.one()], build_unit_graph(&ring)),
        FamilyArg::Cayley => (vec![ring.minus_one()], build_unitary_cayley(&ring)),
        FamilyArg::Comaximal => (Vec::new(), build_comaximal(&ring)),
    };
    Ok(RingGraph { ring, s, graph, family: args.family })
}

impl RingGraph {
    fn title(&self) -> String {
        match self.family {
            FamilyArg::Comaximal => format!("C({})", self.ring.name()),
            _ => format!("Γ({}, {})", self.ring.name(), format_set(&self.ring, &self.s)),
        }
    }

    fn slug(&self) -> String {
        let mut slug = String::new();
        let family = match self.family {
            FamilyArg::Comaximal => "comaximal",
            _ => "gamma",
        };
        slug.push_str(family);
        slug.push('_');
        for c in self.ring.name().chars() {
            if c.is_ascii_alphanumeric() {
                slug.push(c.to_ascii_lowercase());
            } else if !slug.ends_with('_') {
                slug.push('_');
            }
        }
        for &x in &self.s {
            write!(slug, "_s{}", x).unwrap();
        }
        slug.trim_end_matches('_').to_string()
    }

    /// Classification verdict, when the ring is a product of catalog local rings.
    fn theory(&self) -> Option<TheoryVerdict> {
        let cf = canonicalize(&self.ring).ok()?;
        match self.family {
            FamilyArg::Comaximal => theory_comaximal(&cf.spec()).ok(),
            _ => theory_gamma(&cf.spec(), &cf.map_set(&self.s)).ok(),
        }
    }
}

fn write_out(cli: &Cli, name: &str, contents: &str) -> Result<Option<PathBuf>> {
    let Some(dir) = &cli.out else { return Ok(None) };
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    Ok(Some(path))
}

fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(g),
        Format::Text => to_edge_list(g),
        Format::Tsv => {
            let mut out = String::from("u\tv\n");
            for (u, v) in g.edges() {
                writeln!(out, "{}\t{}", g.label(u), g.label(v)).unwrap();
            }
            out
        }
    }
}

fn cmd_ring(cli: &Cli, spec: &str) -> Result<u8> {
    let r = parse_ring(spec)?;
    let mut rows: Vec<(&str, String)> = vec![
        ("ring", r.name().to_string()),
        ("order", r.order().to_string()),
        ("units", r.units().len().to_string()),
        ("jacobson", r.jacobson_radical().len().to_string()),
        ("local", r.is_local().to_string()),
        ("field", r.is_field().to_string()),
        ("characteristic", r.characteristic().to_string()),
    ];
    if let Some(m) = r.local_maximal_ideal() {
        rows.push(("maximal-ideal", m.len().to_string()));
    }
    rows.push(("index-2-maximal-ideals", r.index2_maximal_ideals().len().to_string()));
    rows.push(("canonical", canonicalize(&r).map_or_else(|e| format!("none ({e})"), |cf| cf.spec().to_string())));
    for (k, v) in rows {
        match cli.format {
            Format::Tsv => println!("{k}\t{v}"),
            _ => println!("{k:<24}{v}"),
        }
    }
    Ok(0)
}

fn cmd_graph(cli: &Cli, args: &RingGraphArgs) -> Result<u8> {
    let rg = ring_graph(args)?;
    let text = render_graph(&rg.graph, cli.format);
    let ext = match cli.format {
        Format::Dot => "dot",
        Format::Tsv => "tsv",
        Format::Text => "edges",
    };
    match write_out(cli, &format!("{}.{ext}", rg.slug()), &text)? {
        Some(path) => println!("{}: p={} q={} -> {}", rg.title(), rg.graph.p(), rg.graph.q(), path.display()),
        None => print!("{text}"),
    }
    Ok(0)
}

fn model_text(name: &str, model: &SubdivisionModel, g: &Graph) -> String {
    let mut out = format!("pattern {name}\nbranch");
    for &v in &model.branch {
        write!(out, " {}", g.label(v)).unwrap();
    }
    out.push('\n');
    for ((a, b), path) in &model.paths {
        let labels: Vec<String> = path.iter().map(|&v| g.label(v)).collect();
        writeln!(out, "path {a} {b}: {}", labels.join(" ")).unwrap();
    }
    out
}

fn save_certificate(cli: &Cli, stem: &str, cert: &EmbeddingCertificate) -> Result<()> {
    if let Some(path) = write_out(cli, &format!("{stem}.cert"), &cert.to_text())? {
        println!("certificate  {}", path.display());
    }
    Ok(())
}

fn save_model(cli: &Cli, stem: &str, name: &str, model: &SubdivisionModel, g: &Graph) -> Result<()> {
    if let Some(path) =
        write_out(cli, &format!("{stem}.{}.model", name.to_ascii_lowercase()), &model_text(name, model, g))?
    {
        println!("obstruction  {}", path.display());
    }
    Ok(())
}

fn cmd_classify(cli: &Cli, args: &RingGraphArgs) -> Result<u8> {
    let rg = ring_graph(args)?;
    let g = &rg.graph;
    let theory = rg.theory();
    let computed = computed_class(g, config(cli))?;
    let stem = rg.slug();

    let witness = match &computed.witness {
        ComputedWitness::Obstruction { name, .. } => {
            let named = obstruction(*name).graph;
            if g.p() == named.p() && isomorphic(&g.simple(), &named).is_some() {
                format!("obstruction {name} (isomorphic)")
            } else {
                format!("obstruction {name} (subdivision)")
            }
        }
        w => w.summary(),
    };
    let computed_label = computed.class.map_or("unknown", GraphClass::as_str);
    let theory_label = theory.as_ref().map_or("n/a", |t| t.class.as_str());
    match cli.format {
        Format::Tsv => {
            println!("graph\tp\tq\ttheory\tcomputed\twitness");
            println!("{}\t{}\t{}\t{theory_label}\t{computed_label}\t{witness}", rg.title(), g.p(), g.q());
        }
        _ => {
            println!("graph        {}", rg.title());
            println!("size         p={} q={}", g.p(), g.q());
            match &theory {
                Some(t) => println!("theory       {} ({})", t.class, t.reason),
                None => println!("theory       n/a (not a product of catalog rings)"),
            }
            println!("computed     {computed_label}");
            println!("witness      {witness}");
        }
    }
    if let Some(cert) = computed.witness.certificate() {
        save_certificate(cli, &stem, cert)?;
    }
    match &computed.witness {
        ComputedWitness::ProjectiveEmbedding { kuratowski, model, .. } => save_model(cli, &stem, kuratowski, model, g)?,
        ComputedWitness::Obstruction { name, model } => save_model(cli, &stem, name.as_str(), model, g)?,
        _ => {}
    }
    Ok(match (computed.class, theory) {
        (None, _) => 2,
        (Some(c), Some(t)) if c != t.class => 1,
        _ => 0,
    })
}

fn cmd_universe(cli: &Cli) -> Result<u8> {
    let verdicts = cross_validate(&RingUniverse::default(), config(cli))?;
    let text = match cli.format {
        Format::Tsv => report_tsv(&verdicts),
        _ => report_text(&verdicts),
    };
    print!("{text}");
    write_out(cli, "universe.tsv", &report_tsv(&verdicts))?;
    if verdicts.iter().any(|v| v.computed.class.is_some() && !v.agrees()) {
        Ok(1)
    } else if verdicts.iter().any(|v| v.computed.class.is_none()) {
        Ok(2)
    } else {
        Ok(0)
    }
}

/// `K6`, `K3,4`, an obstruction name, each optionally prefixed by `n*`.
fn named_graph(text: &str) -> Result<Graph> {
    let (copies, base) = match text.split_once('*') {
        Some((n, rest)) => (n.trim().parse::<usize>().context("copy count")?, rest.trim()),
        None => (1, text.trim()),
    };
    if copies == 0 {
        bail!("copy count must be positive");
    }
    let g = if let Ok(name) = base.parse::<ObstructionName>() {
        obstruction(name).graph
    } else if let Some(rest) = base.strip_prefix('K').or_else(|| base.strip_prefix('k')) {
        match rest.split_once(',') {
            Some((m, n)) => complete_bipartite(m.trim().parse()?, n.trim().parse()?),
            None => complete_graph(rest.parse().map_err(|_| anyhow!("unknown graph {base:?}"))?),
        }
    } else {
        bail!("unknown graph {base:?}");
    };
    Ok(disjoint_copies(&g, copies))
}

fn lower_text(w: &LowerWitness) -> String {
    match w {
        LowerWitness::Trivial => "trivial".into(),
        LowerWitness::EdgeBound => "edge-count bound".into(),
        LowerWitness::MinDegree => "minimum-degree bound".into(),
        LowerWitness::Formula => "closed form".into(),
        LowerWitness::Obstruction { name, .. } => format!("{name} subdivision"),
        LowerWitness::Exhaustive => "exhaustive search".into(),
        LowerWitness::Composition => "component composition".into(),
        LowerWitness::ComponentBracket => "component bracket".into(),
    }
}

fn upper_text(w: &UpperWitness) -> String {
    match w {
        UpperWitness::Certificate(c) => format!("embedding, {} faces", c.faces()),
        UpperWitness::Formula => "closed form".into(),
        UpperWitness::TwiceGenusPlusOne(c) => format!("orientable embedding of Euler genus {}", c.euler_genus()),
        UpperWitness::Composition => "component composition".into(),
        UpperWitness::ComponentBracket => "component bracket".into(),
    }
}

fn print_crosscap(r: &CrosscapResult) {
    println!("crosscap     {}", r.bracket());
    println!("lower        {} ({})", r.lower, lower_text(&r.lower_witness));
    match (&r.upper, &r.upper_witness) {
        (Some(u), Some(w)) => println!("upper        {u} ({})", upper_text(w)),
        _ => println!("upper        unknown"),
    }
    for (i, c) in r.components.iter().enumerate() {
        let genus = c.genus.exact().map_or_else(|| "?".to_string(), |g| g.to_string());
        println!("component {i:<2} p={} crosscap {} genus {genus}", c.vertices.len(), c.crosscap.bracket());
    }
}

fn cmd_crosscap(cli: &Cli, file: Option<&Path>, named: Option<&str>, target: Option<&RingGraphArgs>) -> Result<u8> {
    let (g, stem) = match (file, named, target) {
        (Some(path), _, _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let stem = path.file_stem().map_or("graph".into(), |s| s.to_string_lossy().into_owned());
            (parse_edge_list(&text)?, stem)
        }
        (None, Some(name), _) => (named_graph(name)?, name.replace(['*', ','], "_")),
        (None, None, Some(args)) => {
            let rg = ring_graph(args)?;
            let stem = rg.slug();
            (rg.graph, stem)
        }
        (None, None, None) => bail!("crosscap needs --graph, --named or --ring"),
    };
    let result = crosscap_exact(&g, config(cli))?;
    match cli.format {
        Format::Tsv => println!(
            "p\tq\tlower\tupper\texact\n{}\t{}\t{}\t{}\t{}",
            g.p(),
            g.q(),
            result.lower,
            result.upper.map_or("-".into(), |u| u.to_string()),
            result.exact().is_some()
        ),
        _ => {
            println!("size         p={} q={}", g.p(), g.q());
            print_crosscap(&result);
        }
    }
    if let Some(cert) = result.certificate() {
        save_certificate(cli, &stem, cert)?;
    }
    if let LowerWitness::Obstruction { name, model } = &result.lower_witness {
        save_model(cli, &stem, name.as_str(), model, &g)?;
    }
    Ok(if result.is_exact() { 0 } else { 2 })
}

fn cmd_obstruction(cli: &Cli, action: &ObstructionAction) -> Result<u8> {
    match action {
        ObstructionAction::List => {
            for name in ObstructionName::ALL {
                let ng = obstruction(name);
                match cli.format {
                    Format::Tsv => println!("{name}\t{}\t{}\t{}", ng.graph.p(), ng.graph.q(), ng.provenance),
                    _ => println!("{:<5} p={:<3} q={:<3} {}", name.as_str(), ng.graph.p(), ng.graph.q(), ng.provenance),
                }
            }
        }
        ObstructionAction::Show { name } => {
            let name: ObstructionName = name.parse()?;
            let g = obstruction(name).graph;
            let text = render_graph(&g, cli.format);
            let ext = if cli.format == Format::Dot { "dot" } else { "edges" };
            match write_out(cli, &format!("{}.{ext}", name.as_str().to_ascii_lowercase()), &text)? {
                Some(path) => println!("{name}: p={} q={} -> {}", g.p(), g.q(), path.display()),
                None => print!("{text}"),
            }
        }
    }
    Ok(0)
}

fn cmd_verify(cli: &Cli, include_slow: bool, sections: &[u8]) -> Result<u8> {
    if let Some(bad) = sections.iter().find(|s| !CHECKS.iter().any(|c| c.section == **s)) {
        bail!("no checks in section {bad}");
    }
    let cfg = CheckConfig {
        search: config(cli),
        include_slow,
        sections: (!sections.is_empty()).then(|| sections.to_vec()),
        ..CheckConfig::default()
    };
    let outcomes = run_checks(&cfg);
    let mut report = String::new();
    for o in &outcomes {
        match cli.format {
            Format::Tsv => {
                writeln!(report, "{}\t{}\t{}\t{}\t{:.3}", o.id, o.section, o.status, o.title, o.elapsed.as_secs_f64())
            }
            _ => writeln!(report, "{o}"),
        }
        .unwrap();
        if cli.format != Format::Tsv {
            for d in &o.details {
                writeln!(report, "       {d}").unwrap();
            }
        }
    }
    print!("{report}");
    write_out(cli, "verify.txt", &report)?;
    Ok(exit_code(&outcomes) as u8)
}
