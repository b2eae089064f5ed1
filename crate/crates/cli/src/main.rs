use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use chrono::{SecondsFormat, Utc};
use clap::{Args, Parser, Subcommand, ValueEnum};

use diogon::model::{classify, is_trapezoid, CatalogEntry, ConfigClass, QuadDistances};
use diogon::pell;
use diogon::search::{
    claim_ids, enumerate_quads, verify_claim, RoleFilter, SearchConfig, SearchError, SearchResult,
    ShapeFilter, Verdict,
};
use diogon_cli::catalog::{
    self, catalog_doc, digest_of, pointset_doc, surd_str, ConfigDoc, EntryDoc, ManifestDoc,
    PointSetDoc, TriangleCatalogDoc,
};
use diogon_cli::checkpoint;

/// Exact searches over integer-distance plane configurations.
#[derive(Parser)]
#[command(name = "diogon", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate configurations with a prescribed distance k.
    Search(SearchArgs),
    /// Run a registered claim and check its expected verdict.
    Verify(VerifyArgs),
    /// Solutions of x^2 - D*y^2 = 1.
    Pell(PellArgs),
    /// Classify one labeled six-distance record.
    Classify(ClassifyArgs),
    /// List the registered claim ids.
    Claims,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoleArg {
    Side,
    Diagonal,
    Any,
}

impl From<RoleArg> for RoleFilter {
    fn from(r: RoleArg) -> Self {
        match r {
            RoleArg::Side => RoleFilter::Side,
            RoleArg::Diagonal => RoleFilter::Diagonal,
            RoleArg::Any => RoleFilter::Any,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Convex,
    Concave,
    Any,
}

impl From<ShapeArg> for ShapeFilter {
    fn from(s: ShapeArg) -> Self {
        match s {
            ShapeArg::Convex => ShapeFilter::Convex,
            ShapeArg::Concave => ShapeFilter::Concave,
            ShapeArg::Any => ShapeFilter::Any,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct SearchArgs {
    /// Number of points: 3 lists triangles, 4 catalogs quadrilaterals,
    /// 5..7 run the point-set extension search.
    #[arg(long, value_parser = clap::value_parser!(u8).range(3..=7))]
    n: u8,
    /// The prescribed distance.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Role the distance k must play (quadrilaterals only).
    #[arg(long, value_enum, default_value_t = RoleArg::Any)]
    role: RoleArg,
    /// Upper bound on every pairwise distance.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
    #[arg(long, value_enum, default_value_t = ShapeArg::Any)]
    shape: ShapeArg,
    /// Keep only cyclic entries.
    #[arg(long)]
    cyclic: bool,
    /// Keep only tangential entries.
    #[arg(long)]
    tangential: bool,
    /// Keep only trapezoids.
    #[arg(long)]
    trapezoid: bool,
    /// Also emit degenerate collinear records.
    #[arg(long)]
    include_degenerate: bool,
    /// Worker threads; defaults to DIOGON_THREADS or the machine parallelism.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the catalog here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Checkpoint file for resumable runs (n = 4 only).
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Write the checkpoint after every N partitions.
    #[arg(long, default_value_t = 1)]
    checkpoint_every: usize,
    /// Visit budget for point-set searches; exceeding it yields an explicit
    /// partial result.
    #[arg(long)]
    budget: Option<u64>,
    /// Print point-set search progress to stderr every N base sets.
    #[arg(long)]
    progress_every: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id; see `diogon claims`.
    #[arg(long)]
    claim: String,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    dmax: u32,
    #[arg(long)]
    threads: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct PellArgs {
    /// The non-square modulus D.
    #[arg(long)]
    d: u64,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    count: u32,
    /// Print the side-2 family parameters b c instead of x y (D = 12).
    #[arg(long)]
    quad: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Six comma-separated distances: ab,bc,cd,da,ac,bd.
    record: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Search(args) => cmd_search(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Pell(args) => cmd_pell(args),
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::Claims => {
            for id in claim_ids() {
                println!("{id}");
            }
            Ok(0)
        }
    }
}

fn default_threads(requested: Option<usize>) -> usize {
    requested
        .or_else(|| {
            std::env::var("DIOGON_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1)
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn manifest_sidecar(out: &Option<PathBuf>, manifest: &ManifestDoc) -> Result<()> {
    let json = serde_json::to_string_pretty(manifest)?;
    match out {
        Some(path) => {
            let side = path.with_extension("manifest.json");
            std::fs::write(side, json)?;
        }
        None => eprintln!("{json}"),
    }
    Ok(())
}

fn cmd_search(args: SearchArgs) -> Result<u8> {
    let threads = default_threads(args.threads);
    let cfg = SearchConfig {
        n: args.n,
        k: args.k,
        k_role: args.role.into(),
        dmax: args.dmax,
        shape: args.shape.into(),
        require_cyclic: args.cyclic,
        require_tangential: args.tangential,
        require_trapezoid: args.trapezoid,
        include_degenerate: args.include_degenerate,
        threads,
    };
    if let Err(e) = cfg.validate() {
        bail!("{e}");
    }

    let started = now();
    match cfg.n {
        3 => {
            let triangles = diogon::triangles::enumerate_triangles(cfg.k, cfg.dmax)
                .into_iter()
                .map(|(k, a, b)| [k, a, b])
                .collect::<Vec<_>>();
            let digest = digest_of(&triangles);
            let doc = TriangleCatalogDoc {
                manifest: catalog::manifest(&cfg, started, now(), triangles.len() as u64, digest),
                triangles,
            };
            match args.format {
                FormatArg::Json => {
                    write_output(&args.out, &(serde_json::to_string_pretty(&doc)? + "\n"))?
                }
                FormatArg::Csv => {
                    let mut text = String::from("k,a,b\n");
                    for t in &doc.triangles {
                        text.push_str(&format!("{},{},{}\n", t[0], t[1], t[2]));
                    }
                    write_output(&args.out, &text)?;
                    manifest_sidecar(&args.out, &doc.manifest)?;
                }
            }
            eprintln!("{} triangles", doc.triangles.len());
            Ok(0)
        }
        4 => {
            let res = match &args.checkpoint {
                Some(path) => {
                    let t0 = std::time::Instant::now();
                    let (entries, visited) =
                        checkpoint::search_with_checkpoint(&cfg, path, args.checkpoint_every)?;
                    SearchResult {
                        entries,
                        visited,
                        elapsed: t0.elapsed(),
                    }
                }
                None => enumerate_quads(&cfg).map_err(|e| anyhow::anyhow!("{e}"))?,
            };
            let doc = catalog_doc(&cfg, &res, started, now());
            match args.format {
                FormatArg::Json => {
                    write_output(&args.out, &(serde_json::to_string_pretty(&doc)? + "\n"))?
                }
                FormatArg::Csv => {
                    let text = catalog::entries_csv(&doc.entries)?;
                    write_output(&args.out, &text)?;
                    manifest_sidecar(&args.out, &doc.manifest)?;
                }
            }
            eprintln!(
                "{} entries, visited {}, {:?}",
                doc.entries.len(),
                res.visited,
                res.elapsed
            );
            Ok(0)
        }
        _ => {
            let every = args.progress_every.unwrap_or(0);
            let res = diogon::search::enumerate_ngon_pointsets_with_progress(
                cfg.n,
                cfg.k,
                cfg.dmax,
                threads,
                args.budget,
                |p| {
                    if every > 0 && (p.processed % every == 0 || p.processed == p.total) {
                        eprintln!(
                            "growing to {} points: {}/{} base sets",
                            p.growing_to, p.processed, p.total
                        );
                    }
                },
            )
            .map_err(|e| anyhow::anyhow!("{e}"))?;
            let doc = pointset_doc(&cfg, &res, started, now());
            match args.format {
                FormatArg::Json => {
                    write_output(&args.out, &(serde_json::to_string_pretty(&doc)? + "\n"))?
                }
                FormatArg::Csv => {
                    let mut text = String::from("n,radicand,dists,coords\n");
                    for p in &doc.pointsets {
                        let dists = p
                            .dists
                            .iter()
                            .map(|row| {
                                row.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
                            })
                            .collect::<Vec<_>>()
                            .join(";");
                        let coords = p
                            .coords
                            .iter()
                            .map(|c| format!("{} {}", c[0], c[1]))
                            .collect::<Vec<_>>()
                            .join(";");
                        text.push_str(&format!("{},{},\"{}\",\"{}\"\n", p.n, p.radicand, dists, coords));
                    }
                    write_output(&args.out, &text)?;
                    manifest_sidecar(&args.out, &doc.manifest)?;
                }
            }
            if !res.complete {
                eprintln!("partial result: visit budget exhausted");
            }
            eprintln!(
                "{} point sets, visited {}, {:?}",
                doc.pointsets.len(),
                res.visited,
                res.elapsed
            );
            Ok(0)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let threads = default_threads(args.threads);
    let report = match verify_claim(&args.claim, args.dmax, threads) {
        Ok(r) => r,
        Err(SearchError::UnknownClaim(id)) => {
            eprintln!("error: unknown claim id {id:?}; see `diogon claims`");
            return Ok(2);
        }
        Err(e) => bail!("{e}"),
    };

    if matches!(args.format, Some(FormatArg::Json)) {
        let witnesses: Vec<EntryDoc> = report.witnesses.iter().map(EntryDoc::from_entry).collect();
        let pointsets: Vec<PointSetDoc> = report
            .pointset_witnesses
            .iter()
            .map(PointSetDoc::from_record)
            .collect();
        let json = serde_json::json!({
            "claim": report.claim_id,
            "config": ConfigDoc::from_config(&report.config),
            "verdict": report.verdict.to_string(),
            "witnesses": witnesses,
            "pointset_witnesses": pointsets,
            "visited": report.visited,
            "elapsed_ms": report.elapsed.as_millis() as u64,
            "notes": report.notes,
        });
        println!("{}", serde_json::to_string_pretty(&json)?);
    } else {
        println!("claim: {}", report.claim_id);
        println!(
            "config: n={} k={} role={} dmax={} shape={}",
            report.config.n, report.config.k, report.config.k_role, report.config.dmax, report.config.shape
        );
        println!("verdict: {}", report.verdict);
        println!(
            "witnesses: {}",
            report.witnesses.len() + report.pointset_witnesses.len()
        );
        for w in &report.witnesses {
            println!("  {} {} cyclic={} tangential={} trapezoid={}", w.canonical, w.class.kind_str(), w.cyclic, w.tangential, w.trapezoid);
        }
        for p in &report.pointset_witnesses {
            println!("  point set dists={:?} radicand={}", p.dists, p.points.radicand());
        }
        println!("visited: {}", report.visited);
        println!("elapsed_ms: {}", report.elapsed.as_millis());
        for n in &report.notes {
            println!("note: {n}");
        }
    }
    Ok(if report.verdict == Verdict::HoldsUpToBound {
        0
    } else {
        1
    })
}

fn cmd_pell(args: PellArgs) -> Result<u8> {
    let solutions = match pell::stream(args.d, args.count as usize) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    for s in &solutions {
        if args.quad {
            match pell::quad_parameters(s) {
                Ok((b, c)) => println!("{b} {c}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(2);
                }
            }
        } else {
            println!("{} {}", s.x, s.y);
        }
    }
    Ok(0)
}

fn cmd_classify(args: ClassifyArgs) -> Result<u8> {
    let parts: Vec<&str> = args.record.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        eprintln!("error: expected six comma-separated distances ab,bc,cd,da,ac,bd");
        return Ok(2);
    }
    let mut d = [0u32; 6];
    for (slot, part) in d.iter_mut().zip(&parts) {
        *slot = match part.parse::<u32>() {
            Ok(v) if v >= 1 => v,
            _ => {
                eprintln!("error: distances must be positive integers, got {part:?}");
                return Ok(2);
            }
        };
    }
    let q = QuadDistances::from_array(d);
    let class = classify(&q);
    println!("input: {q}");
    println!("canonical: {}", q.canonical_form());
    println!("class: {class}");
    match class {
        ConfigClass::Convex | ConfigClass::Concave { .. } | ConfigClass::DegenerateCollinear { .. } => {
            if let Some(entry) = CatalogEntry::build(&q, d[0]) {
                println!("cyclic: {}", entry.cyclic);
                println!("tangential: {}", entry.tangential);
                let kind = if class == ConfigClass::Convex || matches!(class, ConfigClass::Concave { .. }) {
                    is_trapezoid(&q).map(|k| k.to_string()).unwrap_or_else(|_| "none".into())
                } else {
                    "none".into()
                };
                println!("trapezoid: {kind}");
                println!("radicand: {}", entry.radicand);
                let emb = diogon::exact::embed(&q).expect("realizable");
                for (i, name) in ["A", "B", "C", "D"].iter().enumerate() {
                    let (x, y) = emb.point(i);
                    println!("{name} = ({}, {})", surd_str(&x), surd_str(&y));
                }
            }
        }
        _ => {}
    }
    Ok(0)
}
