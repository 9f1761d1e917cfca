//! `quadfrob` — Frobenius numbers of square and prime sequences.
//!
//! Exit codes: 0 on success, 1 on domain/validity errors, 2 on usage errors.

mod output;

use clap::{Parser, Subcommand, ValueEnum};

use output::{
    CoefficientsDoc, ConjectureDoc, Document, Format, FrobeniusDoc, InfiniteDoc, IotaDoc,
    IotaKDoc, LowerBoundDoc, PrimesRangeDoc, StabilityDoc, TableDoc, TableRow, TauDoc,
};
use quadfrob::{arithmetic, finite, infinite, minplus, Error};

#[derive(Parser)]
#[command(
    name = "quadfrob",
    version,
    about = "Frobenius numbers of square and prime sequences",
    long_about = "Computes Frobenius numbers for the finite square sequence \
                  (a, a+1, a+4, ..., a+k^2), the infinite square sequence, and the \
                  infinite prime sequence, together with the underlying minimum \
                  square-count tables, residue-class formula coefficients, and \
                  range verifications. All output is exact integer arithmetic."
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Method {
    Direct,
    Formula,
    #[default]
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum number of positive squares summing to N (1..4)
    Iota { n: u64 },
    /// Minimum number of parts from the primes plus one summing to N (1..3)
    Tau { n: u64 },
    /// Minimum number of squares from {1, 4, ..., k^2} summing to N
    IotaK {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n: u64,
        /// Also emit an optimal representation
        #[arg(long)]
        witness: bool,
    },
    /// Frobenius number of (a, a+1, a+4, ..., a+k^2)
    Frobenius {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        k: u32,
        /// direct residue maximum, closed-form formula, or auto-select
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Frobenius number of (a, a+1, a+4, a+9, ...)
    FrobeniusInfSquares {
        #[arg(long)]
        a: u64,
    },
    /// Frobenius number of (a, a+1, a+2, a+3, a+5, a+7, ...)
    FrobeniusInfPrimes {
        #[arg(long)]
        a: u64,
    },
    /// Residue-class formula coefficients t_k, r_k
    Coefficients {
        #[arg(long)]
        k: u32,
    },
    /// Smallest a from which the formula agrees with direct computation
    LowerBound {
        #[arg(long)]
        k: u32,
    },
    /// Verified stability threshold of iota_k and the proven bound
    Stability {
        #[arg(long)]
        k: u32,
    },
    /// Per-a results for the infinite square sequence, a = 2..max-a
    TableB {
        #[arg(long)]
        max_a: u64,
    },
    /// Per-a results for the infinite prime sequence, a = 2..max-a
    TableD {
        #[arg(long)]
        max_a: u64,
    },
    /// Scan (30, max-a] for moduli where the 3a form fails to apply
    VerifyConjecture {
        #[arg(long)]
        max_a: u64,
    },
    /// Check the 2a prime form for every even a strictly between 44 and 2467
    VerifyPrimesRange,
}

fn check_modulus(a: u64) -> Result<(), Error> {
    if a < 2 {
        return Err(Error::Domain(format!(
            "modulus {a} is too small; need a >= 2"
        )));
    }
    if a > infinite::MAX_MODULUS {
        return Err(Error::Range(format!(
            "modulus {a} exceeds the supported range"
        )));
    }
    Ok(())
}

fn check_k(k: u32) -> Result<(), Error> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    Ok(())
}

fn run(command: Command, format: Format) -> Result<String, Error> {
    Ok(match command {
        Command::Iota { n } => IotaDoc {
            n,
            iota: arithmetic::iota(n)?,
        }
        .render(format),
        Command::Tau { n } => TauDoc {
            n,
            tau: arithmetic::tau(n)?,
        }
        .render(format),
        Command::IotaK { k, n, witness } => {
            check_k(k)?;
            let table = finite::table_for(k)?;
            IotaKDoc {
                k,
                n,
                iota_k: table.iota_k(n),
                witness: witness.then(|| table.optimal_representation(n)),
            }
            .render(format)
        }
        Command::Frobenius { a, k, method } => {
            check_k(k)?;
            let (g, method) = match method {
                Method::Direct => (finite::frobenius_direct(a, k)?, "direct"),
                Method::Formula => {
                    let coefficients = finite::coefficient_sequences(k)?;
                    (finite::g_formula(a, &coefficients)?, "formula")
                }
                Method::Auto => {
                    let coefficients = finite::coefficient_sequences(k)?;
                    if a >= coefficients.u_hat {
                        (finite::g_formula(a, &coefficients)?, "formula")
                    } else {
                        (finite::frobenius_direct(a, k)?, "direct")
                    }
                }
            };
            FrobeniusDoc { a, k, g, method }.render(format)
        }
        Command::FrobeniusInfSquares { a } => {
            check_modulus(a)?;
            let result = infinite::g_infinite_squares(a);
            InfiniteDoc {
                a,
                g: result.g,
                r: result.argmax_r,
                case: result.case.label(),
            }
            .render(format)
        }
        Command::FrobeniusInfPrimes { a } => {
            check_modulus(a)?;
            let result = infinite::g_infinite_primes(a);
            InfiniteDoc {
                a,
                g: result.g,
                r: result.argmax_r,
                case: result.case.label(),
            }
            .render(format)
        }
        Command::Coefficients { k } => {
            check_k(k)?;
            let c = finite::coefficient_sequences(k)?;
            CoefficientsDoc {
                k: c.k,
                u: c.u,
                u_hat: c.u_hat,
                t: c.t,
                r: c.r,
            }
            .render(format)
        }
        Command::LowerBound { k } => {
            check_k(k)?;
            LowerBoundDoc {
                k,
                u_hat: finite::exact_lower_bound(k)?,
            }
            .render(format)
        }
        Command::Stability { k } => {
            check_k(k)?;
            let table = minplus::MinRepTable::with_default_truncation(k)?;
            StabilityDoc {
                k,
                stable_from: table.stability_threshold() as u64,
                proven_bound: minplus::proven_stability_bound(k),
            }
            .render(format)
        }
        Command::TableB { max_a } => {
            check_modulus(max_a)?;
            let rows = (2..=max_a)
                .map(|a| {
                    let result = infinite::g_infinite_squares(a);
                    TableRow {
                        a,
                        r: result.argmax_r,
                        g: result.g,
                        case: result.case.label(),
                    }
                })
                .collect();
            TableDoc { max_a, rows }.render(format)
        }
        Command::TableD { max_a } => {
            check_modulus(max_a)?;
            let rows = (2..=max_a)
                .map(|a| {
                    let result = infinite::g_infinite_primes(a);
                    TableRow {
                        a,
                        r: result.argmax_r,
                        g: result.g,
                        case: result.case.label(),
                    }
                })
                .collect();
            TableDoc { max_a, rows }.render(format)
        }
        Command::VerifyConjecture { max_a } => {
            if max_a > infinite::MAX_MODULUS / 4 {
                return Err(Error::Range(format!(
                    "max-a {max_a} exceeds the supported range"
                )));
            }
            ConjectureDoc {
                max_a,
                counterexamples: infinite::verify_conjecture_squares(max_a),
            }
            .render(format)
        }
        Command::VerifyPrimesRange => PrimesRangeDoc {
            verified: infinite::verify_theorem_primes_range()?,
            a_low: infinite::PRIME_RANGE_LOW,
            a_high: infinite::PRIME_RANGE_HIGH,
        }
        .render(format),
    })
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(document) => println!("{document}"),
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(1);
        }
    }
}
