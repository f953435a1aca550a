//! Acceptance gate. One PASS/FAIL line per criterion; the process fails if any
//! criterion fails or overruns its time limit.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use fanramsey::detect::{check_certificate, find_clique, find_fan_at, find_mono_fan, read_certificate, Host};
use fanramsey::graph::{read_coloring, read_graph, write_coloring};
use fanramsey::harness::{oracle_clique, oracle_fan, oracle_max_matching};
use fanramsey::matching::{hall_witness, max_matching, tutte_witness};
use fanramsey::{Color, ColoredCompleteGraph, SimpleGraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LIMIT_SYMMETRIC: Duration = Duration::from_secs(60);
const LIMIT_ASYMMETRIC: Duration = Duration::from_secs(120);
const LIMIT_TIGHTNESS: Duration = Duration::from_secs(30);
const LIMIT_TRIANGLE: Duration = Duration::from_secs(10);
const LIMIT_F2_WITNESS: Duration = Duration::from_secs(600);
const LIMIT_MATCHING_FAN: Duration = Duration::from_secs(600);
const LIMIT_LEMMA2: Duration = Duration::from_secs(300);
const LIMIT_THEOREM1: Duration = Duration::from_secs(600);
const LIMIT_ORACLES: Duration = Duration::from_secs(120);
const LIMIT_K9: Duration = Duration::from_secs(600);
const LIMIT_WITNESSES: Duration = Duration::from_secs(60);
const K9_BUDGET: u64 = 2_000_000_000;
const CAMPAIGN_TRIALS: u64 = 1000;
const CAMPAIGN_SEED: u64 = 7;
const RANDOM_GRAPHS: usize = 500;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Out {
    let o = Command::new(env!("CARGO_BIN_EXE_fanramsey"))
        .args(args)
        .output()
        .expect("binary runs");
    Out {
        code: o.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&o.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&o.stderr).into_owned(),
    }
}

fn expect_code(o: &Out, code: i32, what: &str) -> Result<(), String> {
    if o.code == code {
        Ok(())
    } else {
        Err(format!("{what}: exit {} (want {code}); {}{}", o.code, o.stdout, o.stderr))
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 temp path")
}

fn block(text: &str, name: &str) -> Option<Vec<usize>> {
    let prefix = format!("# block {name}:");
    let line = text.lines().find(|l| l.starts_with(&prefix))?;
    line[prefix.len()..]
        .split_whitespace()
        .map(|t| t.parse().ok())
        .collect()
}

fn criterion1(dir: &Path) -> Result<String, String> {
    for n in 2..=40usize {
        let f = dir.join(format!("sym{n}.txt"));
        let nstr = n.to_string();
        expect_code(
            &cli(&["construct", "--kind", "symmetric", "--n", &nstr, "--out", path_str(&f)]),
            0,
            "construct",
        )?;
        let g = read_graph(&fs::read_to_string(&f).unwrap()).map_err(|e| e.to_string())?;
        let mut t = 0;
        while 2 * (t + 2) < 3 * n {
            t += 2;
        }
        if g.n_vertices() != 3 * t {
            return Err(format!("n = {n}: {} vertices, want 3t = {}", g.n_vertices(), 3 * t));
        }
        let deg = n.div_ceil(2) + t - 1;
        if (0..g.n_vertices()).any(|v| g.degree(v) != deg) {
            return Err(format!("n = {n}: not {deg}-regular"));
        }
        if 2 * (3 * t + 1) + 10 < 9 * n {
            return Err(format!("n = {n}: 3t + 1 below 9n/2 - 5"));
        }
        expect_code(&cli(&["verify", "--graph", path_str(&f), "--no-fan", &nstr]), 0, "verify")?;
        expect_code(
            &cli(&["verify", "--graph", path_str(&f), "--no-fan", &nstr, "--complement"]),
            0,
            "verify complement",
        )?;
    }
    Ok("n = 2..40 fan-free on both sides, sizes and degrees exact".into())
}

fn criterion2(dir: &Path) -> Result<String, String> {
    let mut count = 0;
    for m in 1..=20usize {
        for n in m..=20 * 2 {
            if 2 * n + 6 > 3 * m {
                break;
            }
            let f = dir.join(format!("asym{n}_{m}.txt"));
            let (ns, ms) = (n.to_string(), m.to_string());
            expect_code(
                &cli(&["construct", "--kind", "asymmetric", "--n", &ns, "--m", &ms, "--out", path_str(&f)]),
                0,
                "construct",
            )?;
            expect_code(&cli(&["verify", "--graph", path_str(&f), "--no-fan", &ns]), 0, "no F_n")?;
            expect_code(
                &cli(&["verify", "--graph", path_str(&f), "--no-fan", &ms, "--complement"]),
                0,
                "no F_m in complement",
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} pairs (n, m)"))
}

fn criterion3(dir: &Path) -> Result<String, String> {
    for n in (2..=20usize).step_by(2) {
        let f = dir.join(format!("tight{n}.txt"));
        expect_code(
            &cli(&["construct", "--kind", "tightness", "--n", &n.to_string(), "--out", path_str(&f)]),
            0,
            "construct",
        )?;
        let text = fs::read_to_string(&f).unwrap();
        let g = read_graph(&text).map_err(|e| e.to_string())?;
        let v0: VertexSet = block(&text, "V0").ok_or("no V0 block")?.into();
        if 2 * v0.len() != 3 * n {
            return Err(format!("n = {n}: |V0| = {}", v0.len()));
        }
        let comp = g.complement();
        let mut best = 0;
        for &v in &v0 {
            let outside = g.neighbors(v).filter(|&u| !v0.contains(u)).count();
            if outside != n {
                return Err(format!("n = {n}: vertex {v} has {outside} outside neighbors"));
            }
            for h in [&g, &comp] {
                if find_fan_at(h, v, n).map_err(|e| e.to_string())?.is_some() {
                    return Err(format!("n = {n}: fan centered at {v}"));
                }
            }
            let nb: VertexSet = g.neighbors(v).collect();
            best = best.max(max_matching(&g.induced(&nb).unwrap().graph).len());
        }
        if best != n - 1 {
            return Err(format!("n = {n}: max center matching {best}"));
        }
    }
    Ok("even n = 2..20".into())
}

fn criterion4(dir: &Path) -> Result<String, String> {
    let start = Instant::now();
    expect_code(
        &cli(&["search", "--red", "fan:1", "--blue", "fan:1", "--N", "6"]),
        0,
        "F_1 arrow at 6",
    )?;
    expect_code(
        &cli(&["search", "--red", "fan:1", "--blue", "fan:1", "--N", "5"]),
        1,
        "F_1 witness at 5",
    )?;
    let t1 = start.elapsed();
    if t1 > LIMIT_TRIANGLE {
        return Err(format!("r(F_1) took {t1:?}"));
    }

    let start = Instant::now();
    let w = dir.join("f2_witness.txt");
    expect_code(
        &cli(&["search", "--red", "fan:2", "--blue", "fan:2", "--N", "8", "--out", path_str(&w)]),
        1,
        "F_2 witness at 8",
    )?;
    let c = read_coloring(&fs::read_to_string(&w).unwrap()).map_err(|e| e.to_string())?;
    if c.n_vertices() != 8 || find_mono_fan(&c, 2).map_err(|e| e.to_string())?.is_some() {
        return Err("K_8 witness contains a monochromatic F_2".into());
    }
    let t2 = start.elapsed();
    if t2 > LIMIT_F2_WITNESS {
        return Err(format!("K_8 witness took {t2:?}"));
    }

    let o = cli(&[
        "search",
        "--red",
        "fan:2",
        "--blue",
        "fan:2",
        "--N",
        "9",
        "--budget",
        &K9_BUDGET.to_string(),
    ]);
    let k9 = match o.code {
        0 => "arrow",
        4 => "inconclusive",
        _ => return Err(format!("K_9 F_2 check: exit {}; {}", o.code, o.stdout)),
    };
    Ok(format!(
        "r(F_1) = 6 in {:.2}s, F_2-free K_8 in {:.2}s, K_9 -> F_2: {k9}",
        t1.as_secs_f64(),
        t2.as_secs_f64()
    ))
}

fn criterion5() -> Result<String, String> {
    let mut pairs = Vec::new();
    for n in 1..=4usize {
        for m in 1..=n {
            if 2 * n + m <= 9 {
                pairs.push((n, m));
            }
        }
    }
    for &(n, m) in &pairs {
        let red = format!("matching:{n}");
        let blue = format!("fan:{m}");
        let big = (2 * n + m).to_string();
        let small = (2 * n + m - 1).to_string();
        expect_code(
            &cli(&["search", "--red", &red, "--blue", &blue, "--N", &big, "--deterministic"]),
            0,
            &format!("arrow at {big} for ({n},{m})"),
        )?;
        expect_code(
            &cli(&["search", "--red", &red, "--blue", &blue, "--N", &small, "--deterministic"]),
            1,
            &format!("witness at {small} for ({n},{m})"),
        )?;
    }
    Ok(format!("{} pairs {pairs:?}", pairs.len()))
}

fn campaign(args: &[&str], big_n: usize) -> Result<(), String> {
    let o = cli(args);
    expect_code(&o, 0, &args.join(" "))?;
    let want = format!("N={big_n} seed={CAMPAIGN_SEED}: {CAMPAIGN_TRIALS}/{CAMPAIGN_TRIALS} passed");
    if !o.stdout.contains(&want) {
        return Err(format!("unexpected report: {}", o.stdout));
    }
    Ok(())
}

fn criterion6() -> Result<String, String> {
    let trials = CAMPAIGN_TRIALS.to_string();
    let seed = CAMPAIGN_SEED.to_string();
    for (n, m) in [(2usize, 4usize), (3, 5), (4, 7), (5, 8), (8, 13)] {
        let big_n = 4 * n + m + 6 * n / m + 1;
        campaign(
            &[
                "campaign", "--mode", "lemma2", "--n", &n.to_string(), "--m", &m.to_string(), "--trials", &trials,
                "--seed", &seed,
            ],
            big_n,
        )?;
    }
    Ok("1000/1000 for each (n, m)".into())
}

fn criterion7(dir: &Path) -> Result<String, String> {
    let trials = CAMPAIGN_TRIALS.to_string();
    let seed = CAMPAIGN_SEED.to_string();
    for n in [2usize, 3, 4, 6, 8] {
        let big_n = (11 * n).div_ceil(2) + 6;
        campaign(
            &[
                "campaign",
                "--mode",
                "theorem1",
                "--n",
                &n.to_string(),
                "--trials",
                &trials,
                "--seed",
                &seed,
                "--vertices",
                &big_n.to_string(),
            ],
            big_n,
        )?;
    }

    let g_file = dir.join("sym4.txt");
    expect_code(
        &cli(&["construct", "--kind", "symmetric", "--n", "4", "--out", path_str(&g_file)]),
        0,
        "construct",
    )?;
    let g = read_graph(&fs::read_to_string(&g_file).unwrap()).map_err(|e| e.to_string())?;
    let base = g.n_vertices();
    let c = ColoredCompleteGraph::from_fn(27, |u, v| {
        if u >= base || v >= base || g.has_edge(u, v) {
            Color::Red
        } else {
            Color::Blue
        }
    });
    let col_file = dir.join("padded.txt");
    let cert_file = dir.join("padded.cert");
    fs::write(&col_file, write_coloring(&c)).unwrap();
    expect_code(
        &cli(&[
            "extract",
            "--coloring",
            path_str(&col_file),
            "--mode",
            "theorem1",
            "--n",
            "4",
            "--out",
            path_str(&cert_file),
        ]),
        0,
        "extract padded",
    )?;
    expect_code(
        &cli(&["check", "--cert", path_str(&cert_file), "--host", path_str(&col_file)]),
        0,
        "check padded",
    )?;
    let cert = read_certificate(&fs::read_to_string(&cert_file).unwrap()).map_err(|e| e.to_string())?;
    check_certificate(&cert, Host::Coloring(&c)).map_err(|e| e.to_string())?;
    Ok("1000/1000 for each n, padded K_27 certificate checked".into())
}

fn random_graph(rng: &mut ChaCha8Rng) -> SimpleGraph {
    let n = rng.gen_range(1..=12);
    let p = rng.gen_range(0.1..0.9);
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn criterion8() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..RANDOM_GRAPHS {
        let g = random_graph(&mut rng);
        let n = g.n_vertices();
        if max_matching(&g).len() != oracle_max_matching(&g).unwrap() {
            return Err(format!("graph {i}: matching number differs"));
        }
        for k in 1..=4 {
            let fast = (0..n).any(|v| find_fan_at(&g, v, k).unwrap().is_some());
            if fast != oracle_fan(&g, k).unwrap().is_some() {
                return Err(format!("graph {i}: fan {k} differs"));
            }
        }
        for m in 1..=6 {
            if find_clique(&g, m).unwrap().is_some() != oracle_clique(&g, m).unwrap().is_some() {
                return Err(format!("graph {i}: clique {m} differs"));
            }
        }
    }
    Ok(format!("{RANDOM_GRAPHS} graphs"))
}

fn criterion9() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..RANDOM_GRAPHS {
        let g = random_graph(&mut rng);
        let n = g.n_vertices();
        if !tutte_witness(&g).equality_holds(n) {
            return Err(format!("graph {i}: Tutte-Berge equality fails"));
        }
        let x: VertexSet = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        let y: VertexSet = (0..n).filter(|&v| !x.contains(v)).collect();
        if !hall_witness(&g, &x, &y).unwrap().equality_holds() {
            return Err(format!("graph {i}: Konig defect equality fails"));
        }
    }
    Ok(format!("{RANDOM_GRAPHS} graphs and bipartitions"))
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let d: PathBuf = dir.path().to_path_buf();
    type Check<'a> = Box<dyn Fn() -> Result<String, String> + 'a>;
    let criteria: Vec<(u32, &str, Duration, Check)> = vec![
        (1, "symmetric lower-bound construction", LIMIT_SYMMETRIC, Box::new(|| criterion1(&d))),
        (2, "asymmetric construction", LIMIT_ASYMMETRIC, Box::new(|| criterion2(&d))),
        (3, "clique-lemma tightness graph", LIMIT_TIGHTNESS, Box::new(|| criterion3(&d))),
        (
            4,
            "small Ramsey ground truth",
            LIMIT_TRIANGLE + LIMIT_F2_WITNESS + LIMIT_K9,
            Box::new(|| criterion4(&d)),
        ),
        (5, "r(nK_2, F_m) = 2n + m", LIMIT_MATCHING_FAN, Box::new(criterion5)),
        (6, "lemma2 extraction totality", LIMIT_LEMMA2, Box::new(criterion6)),
        (7, "theorem1 extraction totality", LIMIT_THEOREM1, Box::new(|| criterion7(&d))),
        (8, "oracle equivalence", LIMIT_ORACLES, Box::new(criterion8)),
        (9, "witness algebra", LIMIT_WITNESSES, Box::new(criterion9)),
    ];
    let mut failed = 0;
    for (k, name, limit, check) in &criteria {
        let start = Instant::now();
        let res = check();
        let took = start.elapsed();
        let res = match res {
            Ok(msg) if took > *limit => Err(format!("{msg}; took {took:?}, limit {limit:?}")),
            r => r,
        };
        match res {
            Ok(msg) => println!("PASS criterion {k}: {name}: {msg} ({:.2}s)", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {k}: {name}: {msg} ({:.2}s)", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
