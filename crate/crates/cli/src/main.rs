//! Command-line surface: graph input as graph6, clique-join specs, or named
//! families; certified spectra and classification; exhaustive verification;
//! table and anchor reproduction; exact family-polynomial evaluation.
//!
//! Exit codes: 0 success, 1 usage or format errors, 2 verification
//! disagreement.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use distspectra::census::{anchor_eigenvalues, reproduce_tables, verify_theorem};
use distspectra::classifier::{classify, classify_spec, Verdict};
use distspectra::family::{self, CliqueJoinSpec, FamilyPolynomial};
use distspectra::graph6::parse_graph6;
use distspectra::rational::{decimal_string, parse_rational, rational_string, Rounding};
use distspectra::spectra::{float_spectrum, EigenContext, RationalInterval};
use distspectra::{BigRational, Error, Graph, Result};

#[derive(Parser)]
#[command(
    name = "distspectra",
    version,
    about = "Certified distance spectra of connected graphs and the lambda_2 < -0.5858 classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certified enclosures for the whole distance spectrum of a graph
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// Enclosure width as an exact rational (e.g. 1e-10 or 1/1000000)
        #[arg(long, default_value = "1e-10")]
        width: String,
    },
    /// Certified enclosure of the k-th largest distance eigenvalue
    Lambda {
        /// Eigenvalue index, 1-based from the largest
        k: usize,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "1e-10")]
        width: String,
    },
    /// Structural and certified spectral classification against -2929/5000
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Exhaustively verify the classification on all small connected graphs
    Verify {
        /// Largest order to enumerate (2..=8)
        #[arg(long = "max-n", default_value_t = 7)]
        max_n: usize,
        /// Rayon worker count; defaults to the global pool
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Reproduce the four printed lambda_2 tables
    Tables {
        /// Emit CSV instead of JSON
        #[arg(long)]
        csv: bool,
    },
    /// Recompute the scattered proof anchor eigenvalues
    Anchors,
    /// Build a closed-form family polynomial and optionally evaluate it
    Poly {
        /// One of f, g, h, r, s
        #[arg(long)]
        family: String,
        /// Comma-separated positive sizes (f: n1,n2; g: n1,n2,n3; h: n1..n4; r: n3,n4; s: n4)
        #[arg(long, value_delimiter = ',')]
        params: Vec<u64>,
        /// Exact rational evaluation point (p/q or decimal literal)
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// graph6 string (short form, order <= 62)
    #[arg(long)]
    g6: Option<String>,
    /// Clique sizes a,b[,c[,d]] of K1 v (Ka u Kb u ...)
    #[arg(long, value_delimiter = ',')]
    clique_join: Option<Vec<u64>>,
    /// Named family: K<n>, P<n>, C<n> or S<n>
    #[arg(long)]
    named: Option<String>,
}

enum Input {
    Graph(Graph),
    Spec(CliqueJoinSpec),
}

fn resolve_input(args: &InputArgs) -> Result<Input> {
    if let Some(s) = &args.g6 {
        return Ok(Input::Graph(parse_graph6(s)?));
    }
    if let Some(sizes) = &args.clique_join {
        return Ok(Input::Spec(CliqueJoinSpec::new(sizes)?));
    }
    let named = args.named.as_deref().expect("clap enforces the input group");
    let mut chars = named.chars();
    let kind = chars
        .next()
        .ok_or_else(|| Error::InvalidParameter("empty graph name".into()))?;
    let n: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad family parameter in {named:?}")))?;
    let g = match kind {
        'K' | 'k' => Graph::complete(n)?,
        'P' | 'p' => Graph::path(n)?,
        'C' | 'c' => Graph::cycle(n)?,
        'S' | 's' => Graph::star(n)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown family {other:?}; expected K, P, C or S"
            )))
        }
    };
    Ok(Input::Graph(g))
}

fn input_graph(input: Input) -> Result<Graph> {
    match input {
        Input::Graph(g) => Ok(g),
        Input::Spec(spec) => family::build_graph(&spec),
    }
}

#[derive(Serialize)]
struct EigenOut {
    k: usize,
    /// Midpoint at 10 decimals with the certified width alongside
    value: String,
    width: String,
    enclosure: RationalInterval,
}

fn eigen_out(k: usize, enclosure: RationalInterval) -> EigenOut {
    EigenOut {
        k,
        value: enclosure.decimal(10),
        width: decimal_string(&enclosure.width(), 12, Rounding::Ceil),
        enclosure,
    }
}

#[derive(Serialize)]
struct SpectrumOut {
    order: usize,
    /// Ascending integer coefficients of det(lambda I - D)
    char_poly: Vec<String>,
    eigenvalues: Vec<EigenOut>,
    float_spectrum: Vec<f64>,
}

#[derive(Serialize)]
struct ClassifyOut {
    structural: bool,
    spectral: String,
    agree: bool,
    condition: Option<String>,
    lambda2_enclosure: RationalInterval,
}

impl From<Verdict> for ClassifyOut {
    fn from(v: Verdict) -> ClassifyOut {
        ClassifyOut {
            structural: v.structural,
            spectral: v.spectral.to_string(),
            agree: v.agree,
            condition: v.condition.map(|c| c.label().to_string()),
            lambda2_enclosure: v.lambda2_enclosure,
        }
    }
}

#[derive(Serialize)]
struct PolyOut {
    family: String,
    params: Vec<u64>,
    coefficients: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    eval_at: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<i8>,
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output types serialize")
    );
}

fn parse_width(s: &str) -> Result<BigRational> {
    let w = parse_rational(s)?;
    if w <= BigRational::from_integer(0.into()) {
        return Err(Error::InvalidParameter("width must be positive".into()));
    }
    Ok(w)
}

fn family_poly(family: &str, params: &[u64]) -> Result<FamilyPolynomial> {
    let expect = |n: usize| -> Result<()> {
        if params.len() != n {
            return Err(Error::InvalidParameter(format!(
                "family {family} takes {n} parameter(s), got {}",
                params.len()
            )));
        }
        if params.contains(&0) {
            return Err(Error::InvalidParameter("sizes must be positive".into()));
        }
        Ok(())
    };
    match family {
        "f" => {
            expect(2)?;
            Ok(family::poly_f(params[0], params[1]))
        }
        "g" => {
            expect(3)?;
            Ok(family::poly_g(params[0], params[1], params[2]))
        }
        "h" => {
            expect(4)?;
            Ok(family::poly_h(params[0], params[1], params[2], params[3]))
        }
        "r" => {
            expect(2)?;
            Ok(family::poly_r(params[0], params[1]))
        }
        "s" => {
            expect(1)?;
            Ok(family::poly_s(params[0]))
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown family {other:?}; expected one of f, g, h, r, s"
        ))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Spectrum { input, width } => {
            let width = parse_width(&width)?;
            let g = input_graph(resolve_input(&input)?)?;
            let d = g.distance_matrix()?;
            let ctx = EigenContext::for_matrix(&d);
            let eigenvalues = (1..=g.order())
                .map(|k| Ok(eigen_out(k, ctx.lambda_k(k, &width)?)))
                .collect::<Result<Vec<_>>>()?;
            print_json(&SpectrumOut {
                order: g.order(),
                char_poly: ctx.poly().coeffs().iter().map(|c| c.to_string()).collect(),
                eigenvalues,
                float_spectrum: float_spectrum(&d)?,
            });
        }
        Command::Lambda { k, input, width } => {
            let width = parse_width(&width)?;
            let g = input_graph(resolve_input(&input)?)?;
            let ctx = EigenContext::for_matrix(&g.distance_matrix()?);
            print_json(&eigen_out(k, ctx.lambda_k(k, &width)?));
        }
        Command::Classify { input } => {
            let verdict = match resolve_input(&input)? {
                Input::Graph(g) => classify(&g)?,
                Input::Spec(spec) => classify_spec(&spec)?,
            };
            print_json(&ClassifyOut::from(verdict));
        }
        Command::Verify { max_n, workers } => {
            let report = verify_theorem(max_n, workers)?;
            let failures = report.total_failures();
            eprintln!(
                "verified {} connected graphs of order <= {} in {:.2?} ({} disagreements)",
                report.total_connected(),
                report.max_order,
                report.elapsed,
                failures
            );
            print_json(&report);
            if failures > 0 {
                return Ok(ExitCode::from(2));
            }
        }
        Command::Tables { csv } => {
            let rows = reproduce_tables()?;
            if csv {
                println!("table,n4,sizes,printed,computed,rendered,matches,near_rounding_boundary");
                for r in rows {
                    println!(
                        "{},{},{},{},{},{},{},{}",
                        r.table,
                        r.n4,
                        r.sizes
                            .iter()
                            .map(u64::to_string)
                            .collect::<Vec<_>>()
                            .join("+"),
                        r.printed,
                        r.computed,
                        r.rendered,
                        r.matches_printed,
                        r.near_rounding_boundary
                    );
                }
            } else {
                print_json(&rows);
            }
        }
        Command::Anchors => {
            print_json(&anchor_eigenvalues()?);
        }
        Command::Poly {
            family,
            params,
            eval,
        } => {
            let fam = family_poly(&family, &params)?;
            let (eval_at, value, sign) = match eval {
                None => (None, None, None),
                Some(point) => {
                    let t = parse_rational(&point)?;
                    let v = family::eval_at(&fam, &t);
                    let sign = match v.cmp(&BigRational::from_integer(0.into())) {
                        std::cmp::Ordering::Less => -1,
                        std::cmp::Ordering::Equal => 0,
                        std::cmp::Ordering::Greater => 1,
                    };
                    (
                        Some(rational_string(&t)),
                        Some(rational_string(&v)),
                        Some(sign),
                    )
                }
            };
            print_json(&PolyOut {
                family,
                params,
                coefficients: fam.poly.coeffs().iter().map(|c| c.to_string()).collect(),
                eval_at,
                value,
                sign,
            });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
