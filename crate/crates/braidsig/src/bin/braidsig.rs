use braidsig::{
    best_class, build_report, certificate_check, csv_row, cut_bound_check, enumerate,
    extract_subwords, normalize_far_commutation, parse_braid, place_dots, random_words,
    render_syllables, seifert_matrix, signature_defect, syllables, thm1_bounds, thm2_bounds,
    thm3_check, twist_number, BraidWord, Constants, EnumerationSpec, SymmetricIntMatrix,
    CSV_HEADER,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "braidsig", version, about = "Invariants of positive braid closures")]
struct Cli {
    /// Number of strands; inferred from the word when absent.
    #[arg(long, global = true)]
    strands: Option<usize>,
    /// Emit JSON instead of text/CSV.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for random families.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Minimize the twist number by breadth-first search over rotations
    /// and far commutations (words up to 20 letters).
    #[arg(long, global = true)]
    exhaustive_twist: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Family {
    #[arg(long, default_value_t = 3)]
    min_strands: usize,
    #[arg(long, default_value_t = 5)]
    max_strands: usize,
    /// Minimum syllable count.
    #[arg(long, default_value_t = 4)]
    min_twist: usize,
    /// Maximum syllable count.
    #[arg(long, default_value_t = 6)]
    max_twist: usize,
    /// Allowed syllable exponents, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "3,4")]
    exponents: Vec<usize>,
    /// Keep words failing the sufficiently-complicated or hyperbolicity
    /// filters (they are excluded from assertions either way).
    #[arg(long)]
    no_filter: bool,
    /// Stop after this many words.
    #[arg(long)]
    limit: Option<usize>,
    /// Sample this many random words instead of enumerating.
    #[arg(long)]
    random: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one word.
    Invariants { word: String },
    /// Seifert matrix V and V + V^T over the brick basis.
    Matrix {
        word: String,
        /// Print the inertia (p, q, z) of V + V^T as well.
        #[arg(long)]
        inertia: bool,
    },
    /// Dots, mod-3 string classes and extracted subword occurrences.
    Extract { word: String },
    /// Defect, twist number, volume-bound intervals and inequalities.
    Bounds { word: String },
    /// Enumerate a family and check every asserted inequality.
    Verify {
        #[command(flatten)]
        family: Family,
    },
    /// List the words of a family.
    Enumerate {
        #[command(flatten)]
        family: Family,
    },
}

fn family_spec(f: &Family) -> EnumerationSpec {
    EnumerationSpec {
        strands: (f.min_strands, f.max_strands),
        syllable_count: (f.min_twist, f.max_twist),
        exponents: f.exponents.clone(),
        cyclic_dedup: true,
        minimal_only: true,
        require_sufficiently_complicated: !f.no_filter,
        require_hyperbolic: !f.no_filter,
        limit: f.limit,
        cap: 1_000_000,
    }
}

fn family_words(f: &Family, seed: Option<u64>) -> braidsig::Result<Vec<braidsig::SyllableWord>> {
    let spec = family_spec(f);
    match f.random {
        Some(count) => random_words(&spec, seed.unwrap_or(0), count),
        None => enumerate(&spec),
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, body),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle.write_all(body.as_bytes())
        }
    }
}

fn grid(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: &Cli) -> Result<i32, String> {
    let parse = |text: &str| -> Result<BraidWord, String> {
        parse_braid(text, cli.strands).map_err(|e| e.to_string())
    };
    let fail = |e: braidsig::BraidError| e.to_string();
    let mut body = String::new();
    let mut exit = 0;
    match &cli.command {
        Command::Invariants { word } => {
            let w = parse(word)?;
            let r = build_report(&w, cli.exhaustive_twist).map_err(fail)?;
            if cli.json {
                body = serde_json::to_string_pretty(&r).unwrap();
                body.push('\n');
            } else {
                body = format!(
                    "word: {}\nstrands: {}  letters: {}  components: {}\n\
                     b1: {}  sigma: {}  delta_sigma: {}  twist: {}\n\
                     genus: {}\nflags: positive={} sufficiently_complicated={} \
                     hyperbolicity_criterion={}\n\
                     thm1: {}\nthm2: {}\nthm3_ok: {}\n\
                     cut: betti_sub={} betti_full={} delta_betti={} ok={}\n",
                    r.word,
                    r.strands,
                    r.letters,
                    r.components,
                    r.b1,
                    r.sigma,
                    r.delta_sigma,
                    r.twist,
                    r.genus.map_or("-".into(), |g| g.to_string()),
                    r.flags.positive,
                    r.flags.sufficiently_complicated,
                    r.flags.hyperbolicity_criterion,
                    r.thm1
                        .map_or("-".into(), |i| format!("[{:.4}, {:.4})", i.lo, i.hi)),
                    r.thm2
                        .map_or("-".into(), |i| format!("[{:.4}, {:.4})", i.lo, i.hi)),
                    r.thm3_ok,
                    r.cut.betti_sub,
                    r.cut.betti_full,
                    r.cut.delta_betti,
                    r.cut.ok,
                );
            }
        }
        Command::Matrix { word, inertia } => {
            let w = parse(word)?;
            let m = seifert_matrix(&w);
            let sym = m.symmetrized();
            if cli.json {
                let mut value = json!({
                    "size": m.size(),
                    "bricks": m.bricks,
                    "entries": m.entries,
                });
                if *inertia {
                    let t = braidsig::inertia(&SymmetricIntMatrix::new(sym.clone()));
                    value["inertia"] = serde_json::to_value(t).unwrap();
                }
                body = serde_json::to_string_pretty(&value).unwrap();
                body.push('\n');
            } else {
                body = format!("V ({0} x {0}):\n{1}\n\nV + V^T:\n{2}\n", m.size(), grid(&m.entries), grid(&sym));
                if *inertia {
                    let t = braidsig::inertia(&SymmetricIntMatrix::new(sym));
                    body.push_str(&format!(
                        "\ninertia: ({}, {}, {})\n",
                        t.positive, t.negative, t.zero
                    ));
                }
            }
        }
        Command::Extract { word } => {
            let w = parse(word)?;
            let s = normalize_far_commutation(&syllables(&w, true));
            let dots = place_dots(&s);
            let class = best_class(&dots, w.strands);
            let cert = extract_subwords(&s, &class);
            if cli.json {
                body = serde_json::to_string_pretty(&json!({
                    "word": render_syllables(&s),
                    "dots": dots,
                    "class": class,
                    "occurrences": cert.occurrences,
                    "count": cert.count,
                }))
                .unwrap();
                body.push('\n');
            } else {
                body.push_str(&format!("word: {}\ndots: {}\n", render_syllables(&s), dots.len()));
                for d in &dots {
                    body.push_str(&format!(
                        "  between regions {} and {} on string {}\n",
                        d.between.0, d.between.1, d.string
                    ));
                }
                body.push_str(&format!(
                    "class: j={} strings={:?} dots={}\n",
                    class.j, class.strings, class.dots
                ));
                body.push_str(&format!("occurrences: {}\n", cert.count));
                for o in &cert.occurrences {
                    body.push_str(&format!(
                        "  central string {} at regions {:?}\n",
                        o.central_string, o.positions
                    ));
                }
            }
        }
        Command::Bounds { word } => {
            let w = parse(word)?;
            let constants = Constants::default();
            let ds = signature_defect(&w);
            let t = twist_number(&w, cli.exhaustive_twist).map_err(fail)? as i64;
            let cut = cut_bound_check(&w, cli.exhaustive_twist).map_err(fail)?;
            let cert = certificate_check(&w, cli.exhaustive_twist).map_err(fail)?;
            let thm1 = thm1_bounds(ds, &constants);
            let thm2 = thm2_bounds(t, &constants);
            if cli.json {
                body = serde_json::to_string_pretty(&json!({
                    "delta_sigma": ds,
                    "twist": t,
                    "thm1": thm1,
                    "thm2": thm2,
                    "thm3_ok": thm3_check(ds, t),
                    "cut": cut,
                    "certificate": cert,
                }))
                .unwrap();
                body.push('\n');
            } else {
                body = format!(
                    "delta_sigma: {ds}\ntwist: {t}\nthm1: {}\nthm2: {}\nthm3_ok: {}\n\
                     cut: delta_betti={} ok={} ok_weak={}\n\
                     certificate: count={} ok_lower={} ok_defect={}\n",
                    thm1.map_or("-".into(), |i| format!("[{:.4}, {:.4})", i.lo, i.hi)),
                    thm2.map_or("-".into(), |i| format!("[{:.4}, {:.4})", i.lo, i.hi)),
                    thm3_check(ds, t),
                    cut.delta_betti,
                    cut.ok,
                    cut.ok_weak,
                    cert.count,
                    cert.ok_lower,
                    cert.ok_defect,
                );
            }
        }
        Command::Verify { family } => {
            let words = family_words(family, cli.seed).map_err(fail)?;
            let sweep = braidsig::verify_sweep(&words, cli.exhaustive_twist).map_err(fail)?;
            if cli.json {
                body = serde_json::to_string_pretty(&sweep).unwrap();
                body.push('\n');
            } else {
                body.push_str(CSV_HEADER);
                body.push('\n');
                for row in &sweep.rows {
                    body.push_str(&csv_row(row));
                    body.push('\n');
                }
            }
            eprintln!(
                "{} words, {} failures, t/delta_sigma in [{}, {}], {:.2}s",
                sweep.rows.len(),
                sweep.failures.len(),
                sweep.min_ratio.map_or("-".into(), |r| format!("{r:.4}")),
                sweep.max_ratio.map_or("-".into(), |r| format!("{r:.4}")),
                sweep.wall_seconds,
            );
            for f in &sweep.failures {
                eprintln!("FAIL {f}");
            }
            if !sweep.failures.is_empty() {
                exit = 1;
            }
        }
        Command::Enumerate { family } => {
            let words = family_words(family, cli.seed).map_err(fail)?;
            if cli.json {
                let rendered: Vec<serde_json::Value> = words
                    .iter()
                    .map(|s| {
                        json!({
                            "word": render_syllables(s),
                            "strands": s.strands,
                        })
                    })
                    .collect();
                body = serde_json::to_string_pretty(&rendered).unwrap();
                body.push('\n');
            } else {
                for s in &words {
                    body.push_str(&format!("{}\t{}\n", s.strands, render_syllables(s)));
                }
            }
        }
    }
    emit(&cli.out, &body).map_err(|e| e.to_string())?;
    Ok(exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
