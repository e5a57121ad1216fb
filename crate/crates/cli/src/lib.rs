//! Command-line front end: square files, construction commands, property
//! reports and spectral audits.

pub mod error;
pub mod report;
pub mod square_file;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use magic_compound::{
    apply_shuffle, charpoly_exact, check_commute, check_magic, check_orthogonal_pair,
    euler_compose, jacobi_singular_values, parse_claim, shuffle_permutation, spectrum_claim_check,
    CompoundPair, IntSquare, Phase, PropertyReport,
};
use serde::Serialize;

pub use error::{CliError, CliResult};
use report::{
    CharpolySection, CheckReport, ClaimSection, CompoundReport, Plain, SpectraReport, WrittenSquare,
};
use square_file::{render, resolve};

#[derive(Debug, Parser)]
#[command(
    name = "magicsq",
    version,
    about = "Commuting magic squares by Kronecker compounding"
)]
pub struct Cli {
    /// Print a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pub plain: bool,

    /// Add 1 to every entry of written squares.
    #[arg(long, global = true)]
    pub one_based: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compound two seeds and write A, B, MA, MB.
    ///
    /// SEED_M (order m) drives B = SEED_M ⊗ E_n; SEED_N (order n) drives
    /// A = E_m ⊗ SEED_N. Seeds are files or builtin fixture names.
    Compound {
        seed_m: String,
        seed_n: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Output file prefix; defaults to order<mn>.
        #[arg(long)]
        stem: Option<String>,
    },
    /// Report the structural properties of a square.
    Check {
        square: String,
        /// Second square for commutation and orthogonality.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Exact characteristic polynomial, optional claim check and singular values.
    Spectra {
        square: String,
        /// Claimed factorization, e.g. "L^4(L-360)(L^2+216)(L^2+17496)".
        #[arg(long)]
        claim: Option<String>,
        #[arg(long)]
        svd: bool,
    },
    /// Print the shuffle permutation of order n², or apply it by conjugation.
    Shuffle {
        n: usize,
        #[arg(long)]
        apply: Option<String>,
    },
    /// Write the eight dihedral images of a square.
    Phases {
        square: String,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

fn emit<T: Serialize + Plain>(out: &mut dyn Write, plain: bool, doc: &T) -> CliResult<()> {
    let text = if plain {
        doc.plain()
    } else {
        let mut s = serde_json::to_string_pretty(doc).expect("report serializes");
        s.push('\n');
        s
    };
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}

fn offset(m: &IntSquare, one_based: bool) -> CliResult<IntSquare> {
    if !one_based {
        return Ok(m.clone());
    }
    let ones = IntSquare::ones(m.order());
    Ok(m.add(&ones)?)
}

fn ensure_dir(dir: &Path) -> CliResult<()> {
    std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Compound {
            seed_m,
            seed_n,
            out_dir,
            stem,
        } => {
            let (sm, sn) = (resolve(seed_m)?, resolve(seed_n)?);
            let pair = CompoundPair::from_seeds(&sm.square, &sn.square)?;
            let (ma, mb) = euler_compose(&pair)?;
            let stem = stem
                .clone()
                .unwrap_or_else(|| format!("order{}", pair.order()));
            ensure_dir(out_dir)?;
            let mut outputs = Vec::new();
            for (role, m) in [("A", pair.a()), ("B", pair.b()), ("MA", &ma), ("MB", &mb)] {
                let path = out_dir.join(format!("{stem}_{role}.txt"));
                let shown = offset(m, cli.one_based)?;
                square_file::write(&path, &shown)?;
                outputs.push(WrittenSquare {
                    role: role.into(),
                    path: path.display().to_string(),
                    order: m.order(),
                    summation_index: check_magic(&shown).summation_index,
                });
            }
            emit(
                out,
                cli.plain,
                &CompoundReport {
                    m: pair.m(),
                    n: pair.n(),
                    outputs,
                },
            )
        }
        Command::Check { square, pair } => {
            let m = resolve(square)?.square;
            let mut doc = CheckReport::new(&PropertyReport::of(&m));
            if let Some(other) = pair {
                let b = resolve(other)?.square;
                doc = doc.with_pair(check_commute(&m, &b)?, check_orthogonal_pair(&m, &b)?);
            }
            emit(out, cli.plain, &doc)
        }
        Command::Spectra { square, claim, svd } => {
            let m = resolve(square)?.square;
            let poly = charpoly_exact(&m);
            let claim = match claim {
                Some(text) => {
                    let factors = parse_claim(text)?;
                    Some(ClaimSection {
                        text: text.clone(),
                        holds: spectrum_claim_check(&m, &factors),
                    })
                }
                None => None,
            };
            let singular_values = if *svd {
                Some(jacobi_singular_values(&m)?)
            } else {
                None
            };
            let doc = SpectraReport {
                order: m.order(),
                charpoly: CharpolySection {
                    text: poly.to_string(),
                    coefficients: poly,
                },
                claim,
                singular_values,
            };
            emit(out, cli.plain, &doc)
        }
        Command::Shuffle { n, apply } => {
            if *n == 0 {
                return Err(CliError::Precondition(
                    "shuffle order must be at least 1".into(),
                ));
            }
            let p = shuffle_permutation(*n);
            let result = match apply {
                None => p,
                Some(arg) => {
                    let m = resolve(arg)?.square;
                    if m.order() != n * n {
                        return Err(CliError::Precondition(format!(
                            "shuffle of order {} cannot apply to a square of order {}",
                            n * n,
                            m.order()
                        )));
                    }
                    apply_shuffle(&p, &m)?
                }
            };
            write_square(out, &offset(&result, cli.one_based)?)
        }
        Command::Phases { square, out_dir } => {
            let src = resolve(square)?;
            ensure_dir(out_dir)?;
            for phase in Phase::ALL {
                let path = out_dir.join(format!("{}_{}.txt", src.stem, phase.name()));
                square_file::write(&path, &offset(&phase.apply(&src.square), cli.one_based)?)?;
                writeln!(out, "{}", path.display()).map_err(|source| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source,
                })?;
            }
            Ok(())
        }
    }
}

fn write_square(out: &mut dyn Write, m: &IntSquare) -> CliResult<()> {
    out.write_all(render(m).as_bytes())
        .map_err(|source| CliError::Io {
            path: PathBuf::from("<stdout>"),
            source,
        })
}
