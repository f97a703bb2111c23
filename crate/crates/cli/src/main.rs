//! `schubert`: command line access to Schubert polynomials, structure
//! constants, k-Bruhat intervals and the verification checks.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schubert_core::orders::{self, LabeledInterval};
use schubert_core::par::Execution;
use schubert_core::polyring::{Alphabet, IntPolynomial};
use schubert_core::verify::{self, Check};
use schubert_core::{schubert, Error, Partition, Permutation};

#[derive(Parser)]
#[command(name = "schubert", version, about = "Schubert polynomials, Bruhat orders and Littlewood-Richardson coefficients")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of a permutation.
    Schubert { perm: String },
    /// Expand a polynomial in x1, x2, ... in the Schubert basis.
    Expand { polynomial: String },
    /// Print the structure constant c^w_{u,v}.
    Coeff { u: String, v: String, w: String },
    /// Print c^ζ_λ.
    Lrc { zeta: String, lambda: String },
    /// Print an interval of the Bruhat order, or of the k-Bruhat order with --k.
    Interval {
        #[arg(long)]
        k: Option<usize>,
        u: String,
        w: String,
    },
    /// Count maximal chains of [u,w]_k.
    Chains {
        #[arg(long)]
        k: usize,
        /// Also list the chain words.
        #[arg(long)]
        words: bool,
        u: String,
        w: String,
    },
    /// Count coloured chains from u to w with colours I.
    Coloured {
        #[arg(long = "I", value_delimiter = ',', required = true)]
        colours: Vec<usize>,
        u: String,
        w: String,
    },
    /// Expand Ψ_p 𝔖_w.
    #[command(name = "psi-p")]
    PsiP {
        #[arg(long)]
        p: usize,
        perm: String,
    },
    /// Expand Ψ_P 𝔖_w in 𝔖_u(y) 𝔖_v(z).
    #[command(name = "psi-P")]
    PsiSet {
        #[arg(long = "set", value_delimiter = ',', required = true)]
        set: Vec<usize>,
        perm: String,
    },
    /// Count skew partitions, permutations shape equivalent to them, and skew permutations in S_n.
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Run identity checks.
    Verify {
        #[arg(long, default_value = "all")]
        check: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print the maximal simplices of the order complex of the open interval (u,w)_k.
    Complex {
        #[arg(long)]
        k: usize,
        u: String,
        w: String,
    },
}

struct Output {
    text: String,
    json: Value,
    dot: Option<String>,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            dot: None,
            ok: true,
        }
    }
}

fn perm(s: &str) -> Result<Permutation, Error> {
    s.parse()
}

/// One-line notation padded to `S_n`.
fn padded(p: &Permutation, n: usize) -> String {
    let word = p.one_line(n);
    if n <= 9 {
        word.iter().map(|x| x.to_string()).collect()
    } else {
        format!("[{}]", word.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

fn interval_text(interval: &LabeledInterval) -> String {
    let n = interval.top().degree().max(interval.bottom().degree());
    let mut out = String::new();
    for (i, v) in interval.vertices.iter().enumerate() {
        let ups: Vec<String> = interval
            .covers
            .iter()
            .filter(|c| c.from == i)
            .map(|c| format!("{}[{}]", padded(&interval.vertices[c.to], n), c.label))
            .collect();
        out.push_str(&format!("{} {}: {}\n", interval.rank[i], padded(v, n), ups.join(" ")));
    }
    out.push_str(&format!("maximal chains: {}", interval.count_maximal_chains()));
    out
}

fn words_text(words: &[Vec<usize>]) -> Vec<String> {
    words
        .iter()
        .map(|w| {
            if w.iter().all(|&x| x < 10) {
                w.iter().map(|x| x.to_string()).collect()
            } else {
                w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            }
        })
        .collect()
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let mode = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    Ok(match &cli.command {
        Command::Schubert { perm: p } => {
            let w = perm(p)?;
            let f = schubert::schubert_poly(&w);
            Output::new(f.render(), json!({ "perm": w, "polynomial": f.render() }))
        }
        Command::Expand { polynomial } => {
            let f = IntPolynomial::parse(polynomial, Alphabet::X)?;
            let e = schubert::expand(&f)?;
            Output::new(e.to_string(), json!({ "expansion": e }))
        }
        Command::Coeff { u, v, w } => {
            let (u, v, w) = (perm(u)?, perm(v)?, perm(w)?);
            let c = schubert::structure_constant(&u, &v, &w)?;
            Output::new(c.to_string(), json!({ "u": u, "v": v, "w": w, "coeff": c.to_string() }))
        }
        Command::Lrc { zeta, lambda } => {
            let z = perm(zeta)?;
            let l: Partition = lambda.parse()?;
            let c = schubert::lr_coeff_perm(&z, &l)?;
            Output::new(c.to_string(), json!({ "zeta": z, "lambda": l, "coeff": c.to_string() }))
        }
        Command::Interval { k, u, w } => {
            let (u, w) = (perm(u)?, perm(w)?);
            let interval = match k {
                Some(k) => orders::interval_k(&u, &w, *k)?,
                None => orders::interval_bruhat(&u, &w)?,
            };
            let mut out = Output::new(interval_text(&interval), serde_json::to_value(&interval).expect("serializable"));
            out.dot = Some(interval.to_dot());
            out
        }
        Command::Chains { k, words, u, w } => {
            let (u, w) = (perm(u)?, perm(w)?);
            let interval = orders::interval_k(&u, &w, *k)?;
            let count = interval.count_maximal_chains();
            let list = if *words { words_text(&interval.chain_words()) } else { Vec::new() };
            let mut text = count.to_string();
            if *words {
                for word in &list {
                    text.push('\n');
                    text.push_str(word);
                }
            }
            let json = if *words {
                json!({ "u": u, "w": w, "k": k, "chains": count.to_string(), "words": list })
            } else {
                json!({ "u": u, "w": w, "k": k, "chains": count.to_string() })
            };
            Output::new(text, json)
        }
        Command::Coloured { colours, u, w } => {
            let (u, w) = (perm(u)?, perm(w)?);
            let f = orders::coloured_chain_count(&u, &w, colours)?;
            Output::new(f.to_string(), json!({ "u": u, "w": w, "colours": colours, "count": f.to_string() }))
        }
        Command::PsiP { p, perm: s } => {
            let w = perm(s)?;
            let e = schubert::psi_p(&w, *p)?;
            Output::new(e.to_string(), json!({ "perm": w, "p": p, "expansion": e }))
        }
        Command::PsiSet { set, perm: s } => {
            let w = perm(s)?;
            let e = schubert::psi_p_set_expand(&w, set)?;
            Output::new(e.to_string(), json!({ "perm": w, "set": set, "expansion": e }))
        }
        Command::Census { n } => {
            if *n > 7 {
                return Err(Error::InvalidArgument(format!("census is limited to n ≤ 7, got {n}")));
            }
            let c = verify::skew_census(*n, mode);
            Output::new(
                format!("{} {} {}", c.skew_partitions, c.shape_equivalent, c.skew_permutations),
                serde_json::to_value(&c).expect("serializable"),
            )
        }
        Command::Verify { check, n, seed } => {
            let check: Check = check.parse()?;
            let reports = verify::run(check, *n, *seed, mode);
            let ok = reports.iter().all(|r| r.passed());
            let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let mut out = Output::new(text, json!({ "passed": ok, "reports": reports }));
            out.ok = ok;
            out
        }
        Command::Complex { k, u, w } => {
            let (u, w) = (perm(u)?, perm(w)?);
            let interval = orders::interval_k(&u, &w, *k)?;
            let complex = orders::proper_part_complex(&interval);
            let n = u.degree().max(w.degree());
            let facets: Vec<Vec<String>> = complex
                .facets
                .iter()
                .map(|f| f.iter().map(|&i| padded(&complex.vertices[i], n)).collect())
                .collect();
            let mut text: Vec<String> = facets.iter().map(|f| format!("{{{}}}", f.join(", "))).collect();
            for codim in 1..=complex.dimension().unwrap_or(0) {
                text.push(format!("facet pairs meeting in codimension {codim}: {}", complex.gluings(codim)));
            }
            Output::new(
                text.join("\n"),
                json!({ "facets": facets, "intersections": complex.facet_intersections() }),
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = match cli.format {
                Format::Text => writeln!(stdout, "{}", out.text),
                Format::Json => {
                    let mut v = json!({ "schema": "1" });
                    if let (Value::Object(m), Value::Object(extra)) = (&mut v, out.json.clone()) {
                        m.extend(extra);
                    } else {
                        v["result"] = out.json.clone();
                    }
                    writeln!(stdout, "{}", serde_json::to_string_pretty(&v).expect("serializable"))
                }
                Format::Dot => match &out.dot {
                    Some(d) => write!(stdout, "{d}"),
                    None => {
                        eprintln!("error: --format dot is only available for `interval`");
                        return ExitCode::from(2);
                    }
                },
            };
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
