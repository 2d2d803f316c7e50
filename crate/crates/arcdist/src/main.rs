use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use arcdist::check::check;
use arcdist::corpus::{build_examples, record_input, run_record};
use arcdist::format::{
    self, parse_certificate, to_pretty, ArcJson, Certificate, DistanceCertJson, LevelCertJson,
    PairInput, PathCertJson, ShadowInputJson, TriangulationJson,
};
use arcdist::{render, CliError};
use arcdist_core::arc::{intersection, random_arc};
use arcdist_core::distance::{classify, SearchBounds, ShadowPairInput, Verdict};
use arcdist_core::leveling::level_number_report;
use arcdist_core::surface::validate;
use arcdist_core::surgery::{descent_profile, path_between};
use arcdist_core::{ArcWord, Triangulation};
use clap::{Args, Parser, Subcommand};

/// Arcs between two marked points on a closed surface: intersection numbers,
/// arc-complex distances and level positions, with checkable certificates.
#[derive(Parser)]
#[command(name = "arcdist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the standard triangulation or validate one from a file.
    Tri {
        #[arg(long, value_name = "GENUS", conflicts_with = "check")]
        standard: Option<u32>,
        #[arg(long, value_name = "FILE")]
        check: Option<PathBuf>,
    },
    /// Classify the distance between two arcs.
    Dist {
        /// Pair document; omit with --random-genus.
        input: Option<PathBuf>,
        /// Use a seeded random pair on the standard triangulation instead
        /// (seed from ARCDIST_SEED, default 0).
        #[arg(long, value_name = "GENUS", conflicts_with = "input")]
        random_genus: Option<u32>,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Surgery path from w to v.
    Path {
        input: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Level number of a knot given by lists of shadows.
    Level {
        input: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate from the file alone.
    CheckCert { cert: PathBuf },
    /// Draw a certificate as SVG.
    Render {
        cert: PathBuf,
        #[arg(long, value_name = "DIR")]
        svg: PathBuf,
    },
    /// Run the bundled examples.
    Examples {
        /// Write each record's input and certificate here.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Also search arcs with at most this many crossings when the distance
    /// is at least 3.
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long, default_value_t = 4)]
    max_depth: usize,
}

impl SearchArgs {
    fn bounds(&self) -> Option<SearchBounds> {
        self.max_len.map(|max_len| SearchBounds {
            max_len,
            max_depth: self.max_depth,
        })
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn seed() -> Result<u64, CliError> {
    match std::env::var("ARCDIST_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| {
            CliError::Schema(format!(
                "ARCDIST_SEED must be an unsigned integer, got {s:?}"
            ))
        }),
        Err(_) => Ok(0),
    }
}

fn load_pair(path: &Path) -> Result<(Triangulation, ArcWord, ArcWord), CliError> {
    let doc: PairInput = serde_json::from_str(&read(path)?)?;
    let t = doc.triangulation.to_core()?;
    let v = doc.v.to_core_tightened(&t)?;
    let w = doc.w.to_core_tightened(&t)?;
    Ok((t, v, w))
}

fn verdict_text(v: Verdict) -> String {
    match v {
        Verdict::Exact(d) => format!("exact({d})"),
        Verdict::Bounds { lower, upper } => format!("bounds [{lower}, {upper}]"),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Tri { standard, check } => match (standard, check) {
            (Some(g), None) => {
                let t = Triangulation::standard(g)?;
                emit(&to_pretty(&TriangulationJson::from_core(&t)), None)
            }
            (None, Some(path)) => {
                let doc: TriangulationJson = serde_json::from_str(&read(&path)?)?;
                let table = doc.table()?;
                let violations = validate(&table);
                for v in &violations {
                    eprintln!("violation: {v}");
                }
                let t = Triangulation::from_table(&table)?;
                println!(
                    "ok: genus {}, V = {}, E = {}, F = {}, euler characteristic {}, id {}",
                    t.genus(),
                    t.num_vertices(),
                    t.num_edges(),
                    t.num_triangles(),
                    t.euler_characteristic(),
                    format::fingerprint_hex(&t)
                );
                Ok(())
            }
            _ => Err(CliError::Schema(
                "give exactly one of --standard or --check".into(),
            )),
        },
        Command::Dist {
            input,
            random_genus,
            steps,
            search,
            out,
        } => {
            let (t, v, w) = match (input, random_genus) {
                (Some(path), None) => load_pair(&path)?,
                (None, Some(g)) => {
                    let t = Triangulation::standard(g)?;
                    let s = seed()?;
                    let v = random_arc(&t, s, steps)?;
                    let w = random_arc(&t, s.wrapping_add(1), steps)?;
                    (t, v, w)
                }
                _ => {
                    return Err(CliError::Schema(
                        "give an input file or --random-genus".into(),
                    ))
                }
            };
            let c = classify(&t, &v, &w, search.bounds())?;
            eprintln!(
                "distance {} with i(v, w) = {}",
                verdict_text(c.verdict),
                c.intersection
            );
            emit(
                &to_pretty(&DistanceCertJson::from_core(&t, &c)),
                out.as_deref(),
            )
        }
        Command::Path { input, out } => {
            let (t, v, w) = load_pair(&input)?;
            let seq = path_between(&t, &v, &w)?;
            let doc = PathCertJson {
                format: format::PATH_FORMAT.into(),
                version: format::VERSION,
                triangulation: TriangulationJson::from_core(&t),
                v: ArcJson::from_core(&t, &v),
                w: ArcJson::from_core(&t, &w),
                intersection: intersection(&t, &v, &w)?,
                descent: descent_profile(&t, &v, &seq)?,
                path: format::arcs_from_core(&t, seq.arcs()),
            };
            eprintln!(
                "path of {} steps, i(v, w) = {}",
                seq.steps(),
                doc.intersection
            );
            emit(&to_pretty(&doc), out.as_deref())
        }
        Command::Level { input, search, out } => {
            let doc: ShadowInputJson = serde_json::from_str(&read(&input)?)?;
            let t = doc.triangulation.to_core()?;
            let shadows = ShadowPairInput {
                v_side: doc
                    .v_side
                    .iter()
                    .map(|a| a.to_core_tightened(&t))
                    .collect::<Result<_, _>>()?,
                w_side: doc
                    .w_side
                    .iter()
                    .map(|a| a.to_core_tightened(&t))
                    .collect::<Result<_, _>>()?,
            };
            let report = level_number_report(&t, &shadows, search.bounds())?;
            if report.trivial_knot {
                eprintln!("distance 0: identical shadows, the trivial knot");
            } else {
                eprintln!(
                    "level number {} (upper bound for the knot over the supplied shadows)",
                    verdict_text(report.level)
                );
            }
            let cert = LevelCertJson::from_core(&t, &shadows.v_side, &shadows.w_side, &report);
            emit(&to_pretty(&cert), out.as_deref())
        }
        Command::CheckCert { cert } => {
            let c = parse_certificate(&read(&cert)?)?;
            println!("{}", check(&c)?);
            Ok(())
        }
        Command::Render { cert, svg } => {
            let c = parse_certificate(&read(&cert)?)?;
            fs::create_dir_all(&svg).map_err(|e| CliError::io(&svg, e))?;
            render_certificate(&c, &svg)
        }
        Command::Examples { out } => {
            if let Some(dir) = &out {
                fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            }
            let mut failures = 0;
            for record in build_examples() {
                let outcome = run_record(&record)?;
                let levels = outcome.levels.map_or("no level position".to_string(), |n| {
                    format!("{n}-level certificate")
                });
                println!(
                    "{} {}: expected {}, got {}, {}",
                    if outcome.passed { "PASS" } else { "FAIL" },
                    record.name,
                    verdict_text(record.expected),
                    verdict_text(outcome.got),
                    levels
                );
                if !outcome.passed {
                    failures += 1;
                }
                if let Some(dir) = &out {
                    write_file(
                        &dir.join(format!("{}.input.json", record.name)),
                        &to_pretty(&record_input(&record)),
                    )?;
                    write_file(
                        &dir.join(format!("{}.cert.json", record.name)),
                        &to_pretty(&outcome.certificate),
                    )?;
                }
            }
            if failures > 0 {
                return Err(CliError::Verification(format!(
                    "{failures} example(s) failed"
                )));
            }
            Ok(())
        }
    }
}

fn render_certificate(c: &Certificate, dir: &Path) -> Result<(), CliError> {
    match c {
        Certificate::Distance(d) => {
            let t = d.triangulation.to_core()?;
            let cert = d.body.to_core(&t)?;
            let mut arcs = vec![("v", &cert.v), ("w", &cert.w)];
            if let Some(u) = &cert.witness {
                arcs.push(("witness", u));
            }
            let title = format!("distance {}", verdict_text(cert.verdict));
            write_file(
                &dir.join("distance.svg"),
                &render::arcs_svg(&t, &title, &arcs),
            )
        }
        Certificate::Path(p) => {
            let t = p.triangulation.to_core()?;
            let path = format::arcs_to_core(&t, &p.path)?;
            let names: Vec<String> = (0..path.len()).map(|k| format!("u{k}")).collect();
            let arcs: Vec<(&str, &ArcWord)> = names.iter().map(String::as_str).zip(&path).collect();
            let title = format!("surgery path, {} steps", path.len() - 1);
            write_file(&dir.join("path.svg"), &render::arcs_svg(&t, &title, &arcs))
        }
        Certificate::Level(l) => {
            let t = l.triangulation.to_core()?;
            let best = l.best.to_core(&t)?;
            let mut arcs = vec![("v", &best.v), ("w", &best.w)];
            if let Some(u) = &best.witness {
                arcs.push(("witness", u));
            }
            let title = format!("level number {}", verdict_text(l.level.to_core()));
            write_file(&dir.join("pair.svg"), &render::arcs_svg(&t, &title, &arcs))?;
            if let Some(p) = &l.position {
                let pos = p.to_core(&t)?;
                for (k, page) in render::level_svgs(&t, &pos, &best.path)
                    .into_iter()
                    .enumerate()
                {
                    write_file(&dir.join(format!("level-{}.svg", k + 1)), &page)?;
                }
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
