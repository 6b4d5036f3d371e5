//! Thin command-line front end: every verb parses its inputs, calls one
//! library entry point, and prints the result in the requested format.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 input error,
//! 3 policy violation under --strict, 4 inconclusive at the bounds ceiling.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gha::*;

#[derive(Parser)]
#[command(name = "gha", version, about = "Exact graph homomorphism numbers, connection matrices and graph algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for matrix and profile filling.
    #[arg(long, global = true, env = "GHA_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone, Copy)]
struct BoundsArgs {
    /// Largest node count of catalog graphs (default: k + 3).
    #[arg(long)]
    max_nodes: Option<usize>,
    /// Largest total edge multiplicity of catalog graphs.
    #[arg(long, default_value_t = 6)]
    max_edges: u32,
    /// Largest multiplicity of a single edge.
    #[arg(long, default_value_t = 2)]
    max_mult: u32,
}

impl BoundsArgs {
    fn for_k(&self, k: usize) -> CatalogBounds {
        CatalogBounds::new(self.max_nodes.unwrap_or(k + 3), self.max_edges, self.max_mult)
    }
}

#[derive(Args, Clone, Copy)]
struct CeilingArgs {
    /// Escalation ceiling on node count (default: k + 5).
    #[arg(long)]
    ceil_nodes: Option<usize>,
    /// Escalation ceiling on total edge multiplicity.
    #[arg(long, default_value_t = 8)]
    ceil_edges: u32,
    /// Escalation ceiling on single-edge multiplicity.
    #[arg(long, default_value_t = 3)]
    ceil_mult: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Print the hom number of a pattern into a target, or a partial hom
    /// number when --phi pins the labeled nodes.
    Hom {
        pattern: PathBuf,
        target: PathBuf,
        /// Comma-separated images of the labels, e.g. "0,2".
        #[arg(long)]
        phi: Option<String>,
    },
    /// Exact rank of the connection-matrix truncation N(k, G).
    Rank {
        target: PathBuf,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Also write the N truncation to this path (.csv for CSV,
        /// anything else for a JSON array of "p/q" rows).
        #[arg(long)]
        dump_n: Option<PathBuf>,
    },
    /// Automorphism orbits on ordered k-tuples.
    Orbits {
        target: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Twin classes of a weighted graph.
    Twins { target: PathBuf },
    /// The twin-free quotient of a weighted graph.
    Quotient { target: PathBuf },
    /// Run the full verification suite against one target.
    Verify {
        target: PathBuf,
        #[arg(long)]
        k: usize,
        /// Refuse targets with twins instead of quotienting them.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        bounds: BoundsArgs,
        #[command(flatten)]
        ceiling: CeilingArgs,
    },
    /// Profile-based isomorphism test for twin-free weighted graphs.
    Iso {
        g1: PathBuf,
        g2: PathBuf,
        #[arg(long, default_value_t = 5)]
        max_pattern_nodes: usize,
        /// Refuse inputs with twins instead of quotienting them.
        #[arg(long)]
        strict: bool,
    },
    /// List all canonical k-labeled graphs within bounds.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        bounds: BoundsArgs,
        /// Keep only graphs without repeated edges.
        #[arg(long)]
        simple: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn parse_file<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_phi(text: &str) -> Result<Vec<usize>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad map entry {part:?} in --phi"))
        })
        .collect()
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Hom { pattern, target, phi } => {
            let f: KLabeledGraph = parse_file(pattern)?;
            let g: WeightedGraph = parse_file(target)?;
            match phi {
                None => {
                    let value = hom(&f, &g);
                    emit(cli, &HomOutput { hom: format_rational(&value) }, format_rational(&value))
                }
                Some(text) => {
                    let targets = parse_phi(text)?;
                    if targets.len() != f.k() {
                        return Err(format!(
                            "--phi has {} entries but the pattern has {} labels",
                            targets.len(),
                            f.k()
                        ));
                    }
                    if let Some(&t) = targets.iter().find(|&&t| t >= g.m()) {
                        return Err(format!("--phi entry {t} is not a node of the target"));
                    }
                    let phi = MapAssignment::new(targets);
                    let value = hom_partial(&f, &g, &phi);
                    emit(
                        cli,
                        &HomPhiOutput {
                            hom_phi: format_rational(&value),
                            phi: phi.targets().to_vec(),
                        },
                        format_rational(&value),
                    )
                }
            }
        }
        Command::Rank { target, k, bounds, dump_n } => {
            let g: WeightedGraph = parse_file(target)?;
            let b = bounds.for_k(*k);
            let catalog = enumerate_k_labeled(*k, b).map_err(|e| e.to_string())?;
            let n = build_n(*k, &g, &catalog);
            if let Some(path) = dump_n {
                let payload = if path.extension().is_some_and(|e| e == "csv") {
                    n.to_csv()
                } else {
                    serde_json::to_string_pretty(&n.to_string_rows()).unwrap()
                };
                fs::write(path, payload).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let rank = rank_exact(&n);
            emit(
                cli,
                &RankOutput { k: *k, bounds: b, catalog: catalog.len(), rank },
                rank.to_string(),
            )
        }
        Command::Orbits { target, k } => {
            let g: WeightedGraph = parse_file(target)?;
            let partition = orbit_partition(&g, *k);
            let text = partition.block_count().to_string();
            emit(
                cli,
                &OrbitsOutput {
                    k: *k,
                    orb: partition.block_count(),
                    blocks: partition.tuples(),
                },
                text,
            )
        }
        Command::Twins { target } => {
            let g: WeightedGraph = parse_file(target)?;
            let twins = find_twins(&g);
            let text = twins.to_string();
            emit(
                cli,
                &TwinsOutput { twin_free: twins.is_discrete(), blocks: twins.blocks.clone() },
                text,
            )
        }
        Command::Quotient { target } => {
            let g: WeightedGraph = parse_file(target)?;
            let q = twin_quotient(&g);
            let text = format!(
                "{} node(s); alpha [{}]",
                q.m(),
                q.alphas().iter().map(format_rational).collect::<Vec<_>>().join(", ")
            );
            emit(cli, &q, text)
        }
        Command::Verify { target, k, strict, bounds, ceiling } => {
            let g: WeightedGraph = parse_file(target)?;
            cmd_verify(cli, &g, *k, *strict, bounds, ceiling)
        }
        Command::Iso { g1, g2, max_pattern_nodes, strict } => {
            let a: WeightedGraph = parse_file(g1)?;
            let b: WeightedGraph = parse_file(g2)?;
            cmd_iso(cli, &a, &b, *max_pattern_nodes, *strict)
        }
        Command::Enumerate { k, bounds, simple } => {
            let mut b = bounds.for_k(*k);
            if *simple {
                b.max_multiplicity = 1;
            }
            let catalog = enumerate_k_labeled(*k, b).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(catalog.graphs()).unwrap())
                }
                Format::Csv => {
                    for f in catalog.iter() {
                        let edges: Vec<String> =
                            f.edges().map(|(u, v, m)| format!("{u}-{v}x{m}")).collect();
                        println!("{},{},{}", f.k(), f.n(), edges.join(";"));
                    }
                }
                Format::Text => {
                    for f in catalog.iter() {
                        println!("{f}");
                    }
                    println!("{} graph(s)", catalog.len());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct HomOutput {
    hom: String,
}

#[derive(Serialize)]
struct HomPhiOutput {
    hom_phi: String,
    phi: Vec<usize>,
}

#[derive(Serialize)]
struct RankOutput {
    k: usize,
    bounds: CatalogBounds,
    catalog: usize,
    rank: usize,
}

#[derive(Serialize)]
struct OrbitsOutput {
    k: usize,
    orb: usize,
    blocks: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct TwinsOutput {
    twin_free: bool,
    blocks: Vec<Vec<usize>>,
}

fn emit<T: Serialize>(cli: &Cli, json: &T, text: String) -> Result<ExitCode, String> {
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(json).unwrap()),
        Format::Csv | Format::Text => println!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct CheckReport {
    name: &'static str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct VerifyOutput {
    k: usize,
    twin_notice: Option<String>,
    checks: Vec<CheckReport>,
}

fn cmd_verify(
    cli: &Cli,
    g: &WeightedGraph,
    k: usize,
    strict: bool,
    bounds: &BoundsArgs,
    ceiling: &CeilingArgs,
) -> Result<ExitCode, String> {
    let twins = find_twins(g);
    let twin_notice = if twins.is_discrete() {
        None
    } else if strict {
        eprintln!("target has twins: {twins}");
        return Ok(ExitCode::from(3));
    } else {
        Some(format!("twins {twins}; quotient applied"))
    };
    let quotient = twin_quotient(g);
    let esc = Escalation::new(
        bounds.for_k(k),
        CatalogBounds::new(
            ceiling.ceil_nodes.unwrap_or(k + 5),
            ceiling.ceil_edges,
            ceiling.ceil_mult,
        ),
    );
    let mut checks = Vec::new();

    // Rank equals orbit count on the twin-free quotient.
    let theorem = verify_theorem(k, &quotient, &esc);
    checks.push(CheckReport {
        name: "rank_equals_orbits",
        status: if theorem.equal { "pass" } else { "inconclusive" },
        detail: Some(serde_json::to_value(&theorem).unwrap()),
    });

    // Factorization M = N^T A N and rank agreement on one truncation.
    // M is quadratic in the catalog, so check it on a prefix.
    let catalog = enumerate_k_labeled(k, esc.start)
        .map_err(|e| e.to_string())?
        .truncate(32);
    let factorization = verify_factorization(k, &quotient, &catalog);
    let rank_n = rank_exact(&build_n(k, &quotient, &catalog));
    let rank_m = rank_exact(&build_m(k, &quotient, &catalog));
    checks.push(CheckReport {
        name: "factorization",
        status: if factorization && rank_n == rank_m { "pass" } else { "fail" },
        detail: Some(serde_json::json!({
            "catalog": catalog.len(),
            "rank_n": rank_n,
            "rank_m": rank_m,
        })),
    });

    // Map equivalence coincides with automorphism orbits.
    let homeq = verify_homeq(k, &quotient, &esc).map_err(|e| e.to_string())?;
    checks.push(CheckReport {
        name: "equivalence_matches_orbits",
        status: match homeq.status {
            VerifyStatus::Equal => "pass",
            VerifyStatus::InconclusiveAtBounds => "inconclusive",
        },
        detail: Some(serde_json::to_value(&homeq).unwrap()),
    });

    // Columns span exactly the invariant vectors.
    let homrep = verify_homrep(k, &quotient, &esc);
    checks.push(CheckReport {
        name: "columns_span_invariants",
        status: if homrep.columns_invariant && homrep.equal {
            "pass"
        } else if homrep.columns_invariant {
            "inconclusive"
        } else {
            "fail"
        },
        detail: Some(serde_json::to_value(&homrep).unwrap()),
    });

    // Quotient preserves hom numbers.
    let zero_catalog =
        enumerate_k_labeled(0, CatalogBounds::new(4, 4, 2)).map_err(|e| e.to_string())?;
    let preserved = zero_catalog.iter().all(|f| hom(f, g) == hom(f, &quotient));
    checks.push(CheckReport {
        name: "quotient_preserves_hom",
        status: if preserved { "pass" } else { "fail" },
        detail: Some(serde_json::json!({ "patterns": zero_catalog.len() })),
    });

    // Twin-free rigidity by exhaustion, when small enough.
    if quotient.m() <= 7 {
        let rigid = verify_twin_free_rigidity(&quotient).map_err(|e| e.to_string())?;
        checks.push(CheckReport {
            name: "twin_free_rigidity",
            status: if rigid { "pass" } else { "fail" },
            detail: None,
        });
    } else {
        checks.push(CheckReport {
            name: "twin_free_rigidity",
            status: "skipped",
            detail: Some(serde_json::json!({ "reason": "m^m self-maps too many" })),
        });
    }

    // Trace compatibility and the idempotent identities at this k.
    let algebra_ok = {
        let level = if k == 0 { 1 } else { k };
        let cat = enumerate_k_labeled(level, CatalogBounds::new(level + 2, 4, 2))
            .map_err(|e| e.to_string())?;
        let trace_ok = cat
            .iter()
            .all(|f| trace_a(&f_k(f, &quotient), &quotient) == f_k(&f.trace_graph(), &quotient));
        let ws = idempotent_basis(k, &quotient, &catalog);
        let unit = AlgebraVector::unit(quotient.m(), k);
        let mut sum = ws[0].zero_like();
        let mut idem_ok = true;
        for (i, w) in ws.iter().enumerate() {
            idem_ok &= algebra_product(w, w) == *w;
            for w2 in ws.iter().skip(i + 1) {
                idem_ok &= algebra_product(w, w2) == w.zero_like();
            }
            sum = sum.add(w);
        }
        idem_ok &= sum == unit;
        trace_ok && idem_ok
    };
    checks.push(CheckReport {
        name: "trace_and_idempotents",
        status: if algebra_ok { "pass" } else { "fail" },
        detail: None,
    });

    let output = VerifyOutput { k, twin_notice, checks };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&output).unwrap()),
        Format::Csv | Format::Text => {
            if let Some(notice) = &output.twin_notice {
                println!("notice: {notice}");
            }
            for check in &output.checks {
                println!("{}: {}", check.name, check.status);
            }
        }
    }
    let any_fail = output.checks.iter().any(|c| c.status == "fail");
    let any_inconclusive = output.checks.iter().any(|c| c.status == "inconclusive");
    Ok(if any_fail {
        ExitCode::from(1)
    } else if any_inconclusive {
        ExitCode::from(4)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct IsoOutput {
    twin_notice: Option<String>,
    #[serde(flatten)]
    verdict: IsoVerdict,
}

fn cmd_iso(
    cli: &Cli,
    g1: &WeightedGraph,
    g2: &WeightedGraph,
    max_pattern_nodes: usize,
    strict: bool,
) -> Result<ExitCode, String> {
    let mut notice = Vec::new();
    let mut prepared = Vec::new();
    for (name, g) in [("g1", g1), ("g2", g2)] {
        let twins = find_twins(g);
        if !twins.is_discrete() {
            if strict {
                eprintln!("{name} has twins: {twins}");
                return Ok(ExitCode::from(3));
            }
            notice.push(format!("{name}: twins {twins}; quotient applied"));
            prepared.push(twin_quotient(g));
        } else {
            prepared.push(g.clone());
        }
    }
    let verdict = decide_isomorphic(&prepared[0], &prepared[1], IsoBounds { max_pattern_nodes })
        .map_err(|e| e.to_string())?;
    let twin_notice = if notice.is_empty() { None } else { Some(notice.join("; ")) };
    let output = IsoOutput { twin_notice, verdict };
    let code = match &output.verdict {
        IsoVerdict::InconclusiveAtBounds { .. } => ExitCode::from(4),
        _ => ExitCode::SUCCESS,
    };
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&output).unwrap()),
        Format::Csv | Format::Text => {
            if let Some(n) = &output.twin_notice {
                println!("notice: {n}");
            }
            match &output.verdict {
                IsoVerdict::IsomorphicWithWitness { witness } => {
                    println!(
                        "isomorphic; witness [{}]",
                        witness
                            .images()
                            .iter()
                            .map(|x| x.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                }
                IsoVerdict::DistinguishedByPattern { pattern, hom_g1, hom_g2 } => {
                    println!("not isomorphic; pattern {pattern} gives {hom_g1} vs {hom_g2}");
                }
                IsoVerdict::InconclusiveAtBounds { bounds } => {
                    println!(
                        "inconclusive at bounds (patterns up to {} nodes)",
                        bounds.max_nodes
                    );
                }
            }
        }
    }
    Ok(code)
}
