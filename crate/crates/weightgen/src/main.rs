use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weightgen::error::Error;
use weightgen::exact::RationalGF;
use weightgen::genfunc::{a2, c2};
use weightgen::lie::{Algebra, Method, RepLabel, RootSystem, Weight};
use weightgen::table::build_table;
use weightgen::verify::{run_all, VerifyBounds};

#[derive(Parser)]
#[command(name = "weightgen", version, about = "Exact weight multiplicities for the rank-2 Lie algebras C2 and A2")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    C2,
    A2,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Algebra {
        match a {
            AlgebraArg::C2 => Algebra::C2,
            AlgebraArg::A2 => Algebra::A2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum MethodArg {
    Freudenthal,
    Character,
    Genfunc,
    Counting,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum OverlayArg {
    Epsilon,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiplicity of the weight m*lambda1 + n*lambda2 in R_{p,q}
    Mult {
        algebra: AlgebraArg,
        p: u32,
        q: u32,
        m: u32,
        n: u32,
        /// Computation route; `all` runs the four routes and fails on any disagreement
        #[arg(long, value_enum, default_value_t = MethodArg::Freudenthal)]
        method: MethodArg,
    },
    /// Dominant-weight multiplicity table of R_{p,q}
    Table {
        algebra: AlgebraArg,
        p: u32,
        q: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
        /// Add the +1/0/-1 second-recurrence domain of each weight (C2 only)
        #[arg(long, value_enum)]
        overlay: Option<OverlayArg>,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Generating function A_{m,n}(t1,t2) and its series coefficients
    Gf {
        m: u32,
        n: u32,
        #[arg(long, value_enum, default_value_t = AlgebraArg::C2)]
        algebra: AlgebraArg,
        /// Truncation order (default 12, or WEIGHTGEN_DEFAULT_ORDER)
        #[arg(long)]
        order: Option<u32>,
    },
    /// Cross-validate every implemented identity over a box of labels
    Verify {
        #[arg(long, default_value_t = 10)]
        max_p: u32,
        #[arg(long, default_value_t = 10)]
        max_q: u32,
        #[arg(long, default_value_t = 10)]
        max_m: u32,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
}

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::MethodUnsupported(_) | Error::Usage(_) => ExitCode::from(EXIT_USAGE),
                _ => ExitCode::from(EXIT_VERIFY_FAILED),
            }
        }
    }
}

fn run(cmd: Cmd) -> weightgen::Result<ExitCode> {
    match cmd {
        Cmd::Mult {
            algebra,
            p,
            q,
            m,
            n,
            method,
        } => {
            let rs = RootSystem::new(algebra.into());
            let r = RepLabel::new(p.into(), q.into());
            let w = Weight::new(m.into(), n.into());
            let methods: Vec<Method> = match method {
                MethodArg::Freudenthal => vec![Method::Freudenthal],
                MethodArg::Character => vec![Method::Character],
                MethodArg::Genfunc => vec![Method::GenFunc],
                MethodArg::Counting => vec![Method::Counting],
                MethodArg::All => Method::ALL.to_vec(),
            };
            let mut values = Vec::new();
            for meth in &methods {
                let table = weightgen::lie::mult_table(&rs, r, *meth)?;
                values.push(table.mult(rs.dominant_representative(w)));
            }
            if methods.len() == 1 {
                println!("{}", values[0]);
            } else {
                for (meth, v) in methods.iter().zip(&values) {
                    println!("{} {}", meth.name(), v);
                }
                if values.windows(2).any(|w| w[0] != w[1]) {
                    eprintln!("error: methods disagree");
                    return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Table {
            algebra,
            p,
            q,
            format,
            overlay,
            output,
        } => {
            let alg: Algebra = algebra.into();
            if overlay.is_some() && alg != Algebra::C2 {
                return Err(Error::MethodUnsupported("overlay=epsilon"));
            }
            let rs = RootSystem::new(alg);
            let doc = build_table(
                &rs,
                RepLabel::new(p.into(), q.into()),
                Method::Freudenthal,
                overlay.is_some(),
            )?;
            let body = match format {
                FormatArg::Csv => doc.to_csv(),
                FormatArg::Json => doc.to_json(),
            };
            match output {
                Some(path) => std::fs::write(path, body)?,
                None => print!("{body}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gf {
            m,
            n,
            algebra,
            order,
        } => {
            let order = match order {
                Some(o) => o,
                None => default_order()?,
            };
            let gf: RationalGF = match algebra.into() {
                Algebra::C2 => c2::mult_gf(m.into(), n.into()),
                Algebra::A2 => {
                    if (m, n) != (0, 0) {
                        return Err(Error::Usage(
                            "only the zero-weight generating function is available for A2".into(),
                        ));
                    }
                    a2::zero_weight_gf()
                }
            };
            println!("numerator:   {}", gf.numerator);
            println!("denominator: {}", gf.denominator);
            println!("series coefficients to total order {order}:");
            let series = gf.series(order)?;
            let mut coeffs: Vec<((u32, u32), String)> = series
                .iter()
                .map(|(&(p, q), c)| ((p, q), c.to_string()))
                .collect();
            coeffs.sort_by_key(|&((p, q), _)| (p + q, std::cmp::Reverse(p)));
            for ((p, q), c) in coeffs {
                println!("[p={p} q={q}] {c}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            max_p,
            max_q,
            max_m,
            max_n,
        } => {
            let report = run_all(VerifyBounds {
                max_p: max_p.into(),
                max_q: max_q.into(),
                max_m: max_m.into(),
                max_n: max_n.into(),
            })?;
            print!("{}", report.render());
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFY_FAILED))
            }
        }
    }
}

fn default_order() -> weightgen::Result<u32> {
    match std::env::var("WEIGHTGEN_DEFAULT_ORDER") {
        Ok(s) => s.trim().parse().map_err(|_| {
            Error::Usage("WEIGHTGEN_DEFAULT_ORDER must be a nonnegative integer".into())
        }),
        Err(_) => Ok(12),
    }
}
