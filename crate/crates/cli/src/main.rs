use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fanramsey::construct::{
    build_asymmetric_lower_bound, build_lemma3_tightness, build_symmetric_lower_bound, ConstructionReport,
};
use fanramsey::detect::{check_certificate, find_fan, read_certificate, write_certificate, Certificate, Host};
use fanramsey::extract::{
    extract_corollary1, extract_lemma2, extract_lemma3, extract_theorem1_upper, ExtractionOutcome, Side,
};
use fanramsey::graph::{read_coloring, read_graph, write_coloring, write_graph_with_comments};
use fanramsey::harness::{
    random_campaign, ramsey_check, CampaignConfig, CampaignMode, SearchOptions, Target, Verdict,
};
use fanramsey::{Color, ColoredCompleteGraph, Error, Result, VertexSet};

#[derive(Parser)]
#[command(name = "fanramsey", version, about = "Fan Ramsey constructions, certificates and searches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Symmetric,
    Asymmetric,
    Tightness,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Corollary1,
    Lemma2,
    Lemma3,
    Theorem1,
}

#[derive(Clone, Copy, ValueEnum)]
enum CampaignKind {
    Corollary1,
    Lemma2,
    Theorem1,
}

#[derive(Subcommand)]
enum Command {
    /// Build a lower-bound or tightness graph.
    Construct {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exit 0 iff the graph (or its complement) has no F_n.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long = "no-fan")]
        no_fan: usize,
        #[arg(long)]
        complement: bool,
    },
    /// Extract a monochromatic fan or clique from a coloring.
    Extract {
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Clique vertices for lemma3, comma or space separated.
        #[arg(long)]
        v0: Option<String>,
        /// Color class for lemma3 (the graph) and corollary1 (the neighborhood).
        #[arg(long)]
        color: Option<String>,
        /// Center for corollary1.
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive search: does every coloring of K_N contain a target?
    Search {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long = "N")]
        big_n: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        deterministic: bool,
        #[arg(long = "no-symmetry")]
        no_symmetry: bool,
        /// Write the witness coloring here, if one is found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an extractor over seeded random colorings.
    Campaign {
        #[arg(long, value_enum)]
        mode: CampaignKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        vertices: Option<usize>,
    },
    /// Re-validate a certificate against a graph or coloring file.
    Check {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::input(format!("{}: {e}", path.display())))
}

fn parse_color(s: &str) -> Result<Color> {
    Color::from_letter(s).ok_or_else(|| Error::input(format!("bad color {s:?}, expected R or B")))
}

fn parse_set(s: &str) -> Result<VertexSet> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::input(format!("bad vertex {t:?}"))))
        .collect()
}

fn construct(kind: Kind, n: usize, m: Option<usize>, out: &Path) -> Result<u8> {
    let rep: ConstructionReport = match kind {
        Kind::Symmetric => build_symmetric_lower_bound(n)?,
        Kind::Asymmetric => {
            let m = m.ok_or_else(|| Error::input("--m is required for the asymmetric construction"))?;
            build_asymmetric_lower_bound(n, m)?
        }
        Kind::Tightness => build_lemma3_tightness(n)?,
    };
    write(out, &write_graph_with_comments(&rep.graph, &rep.comment_lines()))?;
    println!(
        "wrote {} vertices, {} edges, max degree {}",
        rep.graph.n_vertices(),
        rep.graph.edge_count(),
        rep.graph.max_degree()
    );
    Ok(0)
}

fn verify(graph: &Path, n: usize, complement: bool) -> Result<u8> {
    let mut g = read_graph(&read(graph)?)?;
    if complement {
        g = g.complement();
    }
    let side = if complement { "complement" } else { "graph" };
    match find_fan(&g, n)? {
        None => {
            println!("no F_{n} in {side}");
            Ok(0)
        }
        Some(f) => {
            print!("F_{n} found in {side}\n{}", write_certificate(&Certificate::Fan(f)));
            Ok(1)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn extract(
    coloring: &Path,
    mode: Mode,
    n: usize,
    m: Option<usize>,
    v0: Option<&str>,
    color: Option<&str>,
    vertex: Option<usize>,
    trace: bool,
    out: &Path,
) -> Result<u8> {
    let c = read_coloring(&read(coloring)?)?;
    let outcome: ExtractionOutcome = match mode {
        Mode::Corollary1 => {
            let v = vertex.unwrap_or(0);
            let col = match color {
                Some(s) => parse_color(s)?,
                None if v < c.n_vertices() && c.degree(v, Color::Blue) > c.degree(v, Color::Red) => Color::Blue,
                None => Color::Red,
            };
            extract_corollary1(&c, v, col, n)?
        }
        Mode::Lemma2 => {
            let m = m.ok_or_else(|| Error::input("--m is required for lemma2"))?;
            extract_lemma2(&c, n, m)?
        }
        Mode::Lemma3 => return extract_clique_mode(&c, n, v0, color, trace, out),
        Mode::Theorem1 => extract_theorem1_upper(&c, n)?,
    };
    if trace {
        print!("{}", outcome.trace);
    }
    write(out, &write_certificate(&outcome.result.to_certificate()))?;
    Ok(0)
}

fn extract_clique_mode(
    c: &ColoredCompleteGraph,
    n: usize,
    v0: Option<&str>,
    color: Option<&str>,
    trace: bool,
    out: &Path,
) -> Result<u8> {
    let v0 = parse_set(v0.ok_or_else(|| Error::input("--v0 is required for lemma3"))?)?;
    let col = parse_color(color.ok_or_else(|| Error::input("--color is required for lemma3"))?)?;
    let res = extract_lemma3(c.view(col), &v0, n)?;
    if trace {
        print!("{}", res.trace);
    }
    let mut fan = res.fan;
    fan.color = Some(match res.side {
        Side::Graph => col,
        Side::Complement => col.other(),
    });
    write(out, &write_certificate(&Certificate::Fan(fan)))?;
    Ok(0)
}

fn search(
    red: &str,
    blue: &str,
    big_n: usize,
    budget: Option<u64>,
    deterministic: bool,
    no_symmetry: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let red: Target = red.parse()?;
    let blue: Target = blue.parse()?;
    let opts = SearchOptions {
        budget,
        deterministic,
        symmetry_breaking: !no_symmetry,
        ..Default::default()
    };
    let r = ramsey_check(red, blue, big_n, &opts)?;
    let stats = format!("nodes {} time {:.3}s", r.stats.nodes, r.stats.elapsed.as_secs_f64());
    match r.verdict {
        Verdict::Arrow => {
            println!("arrow: K_{big_n} -> (red {red}, blue {blue}); {stats}");
            Ok(0)
        }
        Verdict::Witness => {
            println!("witness: K_{big_n} has a coloring avoiding red {red} and blue {blue}; {stats}");
            let text = write_coloring(r.witness.as_ref().expect("witness verdict carries a coloring"));
            match out {
                Some(p) => write(p, &text)?,
                None => print!("{text}"),
            }
            Ok(1)
        }
        Verdict::Inconclusive => {
            println!("inconclusive: budget exhausted; {stats}");
            Ok(4)
        }
    }
}

fn campaign(cfg: CampaignConfig) -> Result<u8> {
    let r = random_campaign(&cfg)?;
    println!(
        "campaign {} n={} N={} seed={}: {}/{} passed",
        r.mode, cfg.n, r.n_vertices, cfg.seed, r.passed, r.trials
    );
    for f in &r.failures {
        eprintln!("trial {} failed: {}", f.trial, f.message);
        eprint!("{}", f.trace);
    }
    Ok(if r.all_passed() { 0 } else { 3 })
}

fn check(cert: &Path, host: &Path) -> Result<u8> {
    let cert = read_certificate(&read(cert)?)?;
    let text = read(host)?;
    let header = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    let verdict = if header.starts_with("coloring") {
        let c = read_coloring(&text)?;
        check_certificate(&cert, Host::Coloring(&c))
    } else {
        let g = read_graph(&text)?;
        check_certificate(&cert, Host::Graph(&g))
    };
    match verdict {
        Ok(()) => {
            println!("valid");
            Ok(0)
        }
        Err(e) => {
            println!("invalid: {e}");
            Ok(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Construct { kind, n, m, out } => construct(kind, n, m, &out),
        Command::Verify {
            graph,
            no_fan,
            complement,
        } => verify(&graph, no_fan, complement),
        Command::Extract {
            coloring,
            mode,
            n,
            m,
            v0,
            color,
            vertex,
            trace,
            out,
        } => extract(
            &coloring,
            mode,
            n,
            m,
            v0.as_deref(),
            color.as_deref(),
            vertex,
            trace,
            &out,
        ),
        Command::Search {
            red,
            blue,
            big_n,
            budget,
            deterministic,
            no_symmetry,
            out,
        } => search(&red, &blue, big_n, budget, deterministic, no_symmetry, out.as_deref()),
        Command::Campaign {
            mode,
            n,
            m,
            trials,
            seed,
            vertices,
        } => campaign(CampaignConfig {
            mode: match mode {
                CampaignKind::Corollary1 => CampaignMode::Corollary1,
                CampaignKind::Lemma2 => CampaignMode::Lemma2,
                CampaignKind::Theorem1 => CampaignMode::Theorem1,
            },
            n,
            m,
            trials,
            seed,
            vertices,
        }),
        Command::Check { cert, host } => check(&cert, &host),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("{e}");
            if let Error::Logic { trace, .. } = &e {
                eprint!("{trace}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
