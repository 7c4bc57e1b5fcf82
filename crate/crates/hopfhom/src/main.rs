use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use hopfhom::commands::{self, CliError, Input, Suite};
use hopfhom::formats::{to_canonical_json, HopfFileV1, ReportV1, SurjectionFileV1};
use hopfhom::{with_field, FieldChoice};
use hopfhom_core::functors::FgOptions;

/// Covariant bimodules over quantum homogeneous spaces of finite-dimensional
/// Hopf algebras.
///
/// Exit codes: 0 when every check passes, 1 when a check fails, 2 on bad
/// input.
#[derive(Parser)]
#[command(name = "hopfhom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Built-in example: sweedler, kz2, fz2, fs3, fs3_k12.
    #[arg(long, conflicts_with = "files")]
    example: Option<String>,
    /// Hopf algebra file, then surjection file.
    #[arg(num_args = 0..=2)]
    files: Vec<PathBuf>,
    /// Q or GF(p) with p in {2, 3, 5, 7, 11, 13}.
    #[arg(long, default_value = "Q")]
    field: FieldChoice,
    /// Also write the report to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms (and the surjection, if given).
    Verify(Common),
    /// Compute B = P^H.
    Coinvariants(Common),
    /// Decide whether B ⊂ P is Hopf-Galois.
    Galois(Common),
    /// Classify left-covariant calculi on B.
    Classify {
        #[command(flatten)]
        common: Common,
        /// Maximal number of crossed submodules to enumerate.
        #[arg(long, default_value_t = 256)]
        cap: usize,
        /// Compare with the brute-force enumeration.
        #[arg(long)]
        brute: bool,
    },
    /// Induce a calculus on B from a bicovariant calculus on P.
    Induce {
        #[command(flatten)]
        common: Common,
        /// Subspace file with the ideal of P⁺.
        #[arg(long, conflicts_with = "universal")]
        ideal: Option<PathBuf>,
        /// Use the zero ideal (the default).
        #[arg(long)]
        universal: bool,
    },
    /// Run the round-trip suites of the structure theorems.
    Roundtrip {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 256)]
        cap: usize,
        /// Treat the instance as not Hopf-Galois.
        #[arg(long)]
        disable_galois: bool,
        /// Treat the antipode of H as not invertible.
        #[arg(long)]
        disable_antipode_inverse: bool,
    },
    /// Write a built-in example as a Hopf algebra file and a surjection
    /// file.
    Export {
        #[arg(long)]
        example: String,
        #[arg(long, default_value = "Q")]
        field: FieldChoice,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn input(c: &Common) -> Result<Input, CliError> {
    match (&c.example, c.files.as_slice()) {
        (Some(name), []) => Ok(Input::Example(name.clone())),
        (None, [p]) => Ok(Input::Files { p: p.clone(), pi: None }),
        (None, [p, pi]) => Ok(Input::Files { p: p.clone(), pi: Some(pi.clone()) }),
        _ => Err(CliError::Input("give --example NAME or input files".into())),
    }
}

fn run(cli: Cli) -> Result<(ReportV1, Option<PathBuf>), CliError> {
    let (common, report) = match cli.command {
        Command::Verify(c) => {
            let r = with_field!(c.field, F => commands::verify::<F>(&input(&c)?));
            (c, r)
        }
        Command::Coinvariants(c) => {
            let r = with_field!(c.field, F => commands::coinvariants::<F>(&input(&c)?));
            (c, r)
        }
        Command::Galois(c) => {
            let r = with_field!(c.field, F => commands::galois::<F>(&input(&c)?));
            (c, r)
        }
        Command::Classify { common: c, cap, brute } => {
            let r = with_field!(c.field, F => commands::classify::<F>(&input(&c)?, cap, brute));
            (c, r)
        }
        Command::Induce { common: c, ideal, universal: _ } => {
            let r = with_field!(c.field, F => {
                let ideal = ideal.as_deref().map(commands::load_subspace::<F>).transpose()?;
                commands::induce::<F>(&input(&c)?, ideal)
            });
            (c, r)
        }
        Command::Roundtrip { common: c, suite, cap, disable_galois, disable_antipode_inverse } => {
            let gate = FgOptions { disable_galois, disable_antipode_inverse };
            let r = with_field!(c.field, F => commands::roundtrip::<F>(&input(&c)?, suite, cap, gate));
            (c, r)
        }
        Command::Export { .. } => unreachable!("handled before"),
    };
    let report = match report {
        Ok(r) => r,
        Err(CliError::Check(msg)) => {
            let mut r = ReportV1::new("error", common.field.to_string());
            r.passed = false;
            r.checks.push(hopfhom::formats::CheckV1 { name: "computation".into(), passed: false, witness: None, detail: Some(msg) });
            r
        }
        Err(e) => return Err(e),
    };
    Ok((report, common.json))
}

fn export(name: &str, field: FieldChoice, dir: &std::path::Path) -> anyhow::Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let (p, pi) = with_field!(field, F => {
        let s = hopfhom_core::examples::example::<F>(name)?;
        (to_canonical_json(&HopfFileV1::from_hopf(s.source())), to_canonical_json(&SurjectionFileV1::from_surjection(&s)))
    });
    std::fs::write(dir.join(format!("{name}.hopf.json")), p)?;
    std::fs::write(dir.join(format!("{name}.surjection.json")), pi)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Export { example, field, out_dir } = &cli.command {
        return match export(example, *field, out_dir) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(2)
            }
        };
    }
    match run(cli) {
        Ok((report, path)) => {
            let text = to_canonical_json(&report);
            if let Some(path) = path {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            print!("{text}");
            for c in report.checks.iter().filter(|c| !c.passed) {
                let at = c.witness.as_ref().map(|w| format!(" at basis {w:?}")).unwrap_or_default();
                eprintln!("FAIL {}{at}", c.name);
            }
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
