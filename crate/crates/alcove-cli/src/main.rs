//! `alcove`: orbits, Hasse diagrams, Macdonald polynomials, characters,
//! crystals and Hecke module actions from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use alcove::crystal::{self, finite_quotient, fundamental_crystal, tensor};
use alcove::heckemod::{self, act_word, Basis, ModuleElt};
use alcove::macdonald::{self, MacdonaldConfig, Specialization};
use alcove::par::Exec;
use alcove::rootdata::{build_affine_data, AffineType, Weight};
use alcove::walks::DEFAULT_WALK_BOUND;
use alcove::weyl::{AffineWeyl, OrderTag, Orientation};
use alcove::xring::ops::y_calibrated;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "alcove", version, about = "Affine Weyl group, Macdonald and crystal computations")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Config {
    /// Affine type (simply laced, untwisted).
    #[arg(short = 't', long = "type", global = true, default_value = "A")]
    type_label: String,
    /// Rank of the finite root system.
    #[arg(short = 'r', long, global = true, default_value_t = 1)]
    rank: usize,
    #[arg(long, global = true, value_enum, default_value_t = OrientationArg::Calibrated)]
    orientation: OrientationArg,
    /// Half-width of the δ window for series output.
    #[arg(long, global = true, default_value_t = 6)]
    delta_window: i64,
    #[arg(long, global = true, default_value_t = DEFAULT_WALK_BOUND)]
    walk_bound: usize,
    #[arg(long, global = true)]
    sequential: bool,
    /// Write to this file instead of stdout.
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrientationArg {
    Calibrated,
    Flipped,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit points reachable by words of bounded length.
    Orbit {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = 6)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        out: Format,
    },
    /// Adjacent covers of a Bruhat order in a ball, as DOT.
    Hasse {
        #[arg(long, default_value = "positive")]
        order: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Normalized nonsymmetric Macdonald polynomial, optionally specialized.
    Macdonald {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        specialize: Option<String>,
        /// Unnormalized `E` instead of `Ẽ`.
        #[arg(long)]
        raw: bool,
        /// Dump the alcove walks as JSON lines.
        #[arg(long)]
        walks: bool,
    },
    /// Character of a Demazure module, `X^δ ↦ q^{-1}`.
    DemazureChar {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "")]
        word: String,
    },
    /// Character of a level-zero extremal weight module.
    ExtremalChar {
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Use `gchar(RG⁺)` (the bounded variant).
        #[arg(long)]
        bounded: bool,
    },
    /// Level-zero fundamental crystals and their tensor products.
    Crystal {
        /// Fundamental node(s); two nodes form a tensor product.
        #[arg(long, value_delimiter = ',', required = true)]
        node: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        window: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
        /// Report the finite quotient of the component of the highest vertex.
        #[arg(long)]
        quotient: bool,
    },
    /// Right action of `T_{s_{i_1}}⋯T_{s_{i_l}}` on a basis vector, with labeled-walk counts.
    Hecke {
        #[arg(long, default_value = "T")]
        basis: String,
        #[arg(long, default_value = "")]
        word: String,
        /// Word for the starting basis element (identity by default).
        #[arg(long, default_value = "")]
        start: String,
    },
    /// Convention self-test.
    Selftest,
}

#[derive(Debug)]
enum Failure {
    Selftest(String),
    Compute(alcove::Error),
    Io(std::io::Error),
}

impl From<alcove::Error> for Failure {
    fn from(e: alcove::Error) -> Self {
        Failure::Compute(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Selftest(msg)) => {
            eprintln!("{}", json!({ "error": "selftest", "message": msg }));
            ExitCode::from(3)
        }
        Err(Failure::Compute(e)) => {
            println!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            println!("{}", json!({ "error": "io", "message": e.to_string() }));
            ExitCode::from(1)
        }
    }
}

fn error_kind(e: &alcove::Error) -> &'static str {
    use alcove::Error::*;
    match e {
        Unsupported(_) => "unsupported",
        RankMismatch { .. } => "rank_mismatch",
        IndexOutOfRange { .. } => "index_out_of_range",
        Parse(_) => "parse",
        NotReduced(_) => "not_reduced",
        WalkTooLong { .. } => "walk_too_long",
        NotMonomial(_) => "not_monomial",
        NoLimit(_) => "no_limit",
        Calibration(_) => "calibration",
        Window(_) => "window",
        Crystal(_) => "crystal",
        RouteMismatch(_) => "route_mismatch",
        Internal(_) => "internal",
    }
}

fn parse_word(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let word: Vec<usize> = s
        .split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse::<usize>().map_err(|_| alcove::Error::Parse(format!("bad letter {t:?}"))))
        .collect::<Result<_, _>>()?;
    if let Some(&i) = word.iter().find(|&&i| i > n) {
        return Err(alcove::Error::IndexOutOfRange { index: i, rank: n }.into());
    }
    Ok(word)
}

fn selftest(g: &AffineWeyl) -> Result<(), Failure> {
    if !y_calibrated(g) {
        return Err(Failure::Selftest("Y^{-α_i∨}·1 = t·1 fails for the configured orientation".into()));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let c = &cli.config;
    let ty: AffineType = c.type_label.parse()?;
    let data = build_affine_data(ty, c.rank)?;
    let orientation = match c.orientation {
        OrientationArg::Calibrated => Orientation::Calibrated,
        OrientationArg::Flipped => Orientation::Flipped,
    };
    let g = AffineWeyl::new(data).with_orientation(orientation);
    let n = g.n();
    let exec = if c.sequential { Exec::Sequential } else { Exec::Parallel };
    let cfg = MacdonaldConfig { walk_bound: c.walk_bound, exec };
    selftest(&g)?;

    let text = match &cli.cmd {
        Command::Selftest => json!({ "selftest": "ok", "type": ty, "rank": n }).to_string(),
        Command::Orbit { weight, radius, out } => {
            let lam = Weight::parse(weight, n)?;
            let pts = g.orbit(&lam, *radius);
            match out {
                Format::Csv => g.orbit_csv(&pts),
                _ => {
                    let rows: Vec<_> =
                        pts.iter().map(|(w, mu)| json!({ "weight": mu, "word": g.word_string(w) })).collect();
                    serde_json::to_string_pretty(&rows).expect("serializable")
                }
            }
        }
        Command::Hasse { order, max_len } => {
            let order: OrderTag = order.parse()?;
            g.hasse_dot(order, *max_len)?
        }
        Command::Macdonald { mu, specialize, raw, walks } => {
            let mu = Weight::parse(mu, n)?;
            if *walks {
                let idx = macdonald::min_coset_rep(&g, &mu)?;
                let ws = alcove::walks::enumerate_walks(&g, idx.omega, &idx.m_word, c.walk_bound, exec)?;
                alcove::walks::walks_jsonl(&g, &ws)
            } else {
                let f = match specialize {
                    Some(s) => {
                        let which: Specialization = s.parse()?;
                        macdonald::specialize(&g, &mu, which, cfg)?
                    }
                    None if *raw => macdonald::e(&g, &mu, cfg)?,
                    None => macdonald::e_tilde(&g, &mu, cfg)?,
                };
                serde_json::to_string_pretty(&f.to_json()).expect("serializable")
            }
        }
        Command::DemazureChar { weight, word } => {
            let lam = Weight::parse(weight, n)?;
            let word = parse_word(word, n)?;
            let s = macdonald::demazure_char(&g, &lam, &word, c.delta_window)?;
            serde_json::to_string_pretty(&s.to_json()).expect("serializable")
        }
        Command::ExtremalChar { weight, bounded } => {
            let lam = Weight::parse(weight, n)?;
            let s = if *bounded {
                macdonald::bounded_char(&g, &lam, c.delta_window, cfg)?
            } else {
                macdonald::extremal_char(&g, &lam, c.delta_window, cfg)?
            };
            serde_json::to_string_pretty(&s.to_json()).expect("serializable")
        }
        Command::Crystal { node, window, out, quotient } => {
            let mut cr = fundamental_crystal(&g.data, node[0], *window)?;
            for &i in &node[1..] {
                cr = tensor(&cr, &fundamental_crystal(&g.data, i, *window)?)?;
            }
            if *quotient {
                // Seed at the tensor of the highest orbit points with no δ shift.
                let names = node
                    .iter()
                    .map(|&i| Ok(crystal::atlas(&g.data, i)?.orbit[0].name.clone()))
                    .collect::<Result<Vec<String>, alcove::Error>>()?;
                let names: Vec<&str> = names.iter().map(String::as_str).collect();
                let seed = cr
                    .find(&names, &vec![0; node.len()])
                    .ok_or_else(|| alcove::Error::Crystal("seed vertex outside the window".into()))?;
                let ids = crystal::component_ids(&cr, seed)?;
                let comp = crystal::component(&cr, seed)?;
                let seed = ids.iter().position(|&v| v == seed).expect("seed lies in its component");
                let fq = finite_quotient(&comp)?;
                let classes: Vec<String> = (0..fq.len()).map(|k| fq.name(k)).collect();
                let v = json!({
                    "classes": classes,
                    "period": crystal::period(&comp),
                    "char": fq.char().to_json(),
                    "gchar": crystal::gchar_fin(&comp, seed)?.to_json(),
                });
                serde_json::to_string_pretty(&v).expect("serializable")
            } else {
                match out {
                    Format::Dot => cr.dot(),
                    _ => serde_json::to_string_pretty(&cr.to_json()).expect("serializable"),
                }
            }
        }
        Command::Hecke { basis, word, start } => {
            let basis: Basis = basis.parse()?;
            let word = parse_word(word, n)?;
            let start = g.from_word(&parse_word(start, n)?);
            let is_unit = start.is_identity();
            let m = act_word(&g, &ModuleElt::basis_elt(basis, start), &word)?;
            let mut v = m.to_json(&g);
            if is_unit && g.is_reduced(&word) {
                let counts = heckemod::enumerate_labeled(&g, basis.color(), &word, c.walk_bound)?;
                let counts: serde_json::Map<_, _> =
                    counts.iter().map(|(w, p)| (g.word_string(w), json!(heckemod::q_string(p)))).collect();
                v["walk_counts"] = serde_json::Value::Object(counts);
                if word.len() <= 8 {
                    v["crosscheck_ok"] = json!(heckemod::crosscheck(&g, basis.color(), &word)?.ok());
                }
            }
            serde_json::to_string_pretty(&v).expect("serializable")
        }
    };
    emit(&c.output, &text)
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match path {
        Some(p) => std::fs::write(p, text).map_err(Failure::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
