use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gortrim::check::all_pass;
use gortrim::trim::{classify, TrimError};
use gortrim::{example, lemmas};
use gortrim_cli::document::{parse_field, MatrixDocument};
use gortrim_cli::report::{checks_to_json, render_checks, render_text, ReportDoc};
use gortrim_cli::search::{
    run as run_search, trim_sets_of_sizes, witness_documents, witness_file_name, SearchConfig,
};

/// Exact computer algebra for pfaffian presentations of grade-3
/// Gorenstein ideals and the Tor classes of their trimmings.
#[derive(Parser)]
#[command(name = "gortrim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pfaffian generators of an input presenter.
    Pfaffians {
        /// Matrix document (JSON: field, variables, matrix).
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Classify the ideal obtained by trimming the listed generators.
    Classify {
        #[arg(long)]
        input: PathBuf,
        /// 1-based generator indices, comma separated (e.g. 1,2,3).
        #[arg(long, value_delimiter = ',', required = true)]
        trim: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Classify every nonempty trim set of the input presenter.
    Report {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify the generic-ring determinant identities symbolically.
    VerifyLemmas {
        #[arg(long)]
        json: bool,
    },
    /// Verify the embedded worked example end to end.
    VerifyExample {
        #[arg(long)]
        json: bool,
    },
    /// Randomized realizability search over seeded random presenters.
    Search {
        /// Coefficient field: Q or F<prime>.
        #[arg(long, default_value = "F2")]
        field: String,
        /// Maximum entry degree (at least 1).
        #[arg(long, default_value_t = 2)]
        degree: u32,
        /// Number of random trials.
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// RNG seed; equal seeds give byte-identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trim-set sizes to classify, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1usize, 2, 3])]
        trim_sizes: Vec<usize>,
        /// Inject the embedded worked example as trial 0.
        #[arg(long)]
        include_example: bool,
        /// Write one witness document per census row into this directory.
        #[arg(long)]
        emit_witnesses: Option<PathBuf>,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_TABLE_MISS: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {:#}", err);
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn load_presenter(path: &PathBuf) -> anyhow::Result<gortrim::SkewMatrix> {
    let text = fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {}", path.display(), e))?;
    let doc = MatrixDocument::from_json(&text)?;
    Ok(doc.to_presenter()?)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Pfaffians { input, json } => {
            let t = load_presenter(&input)?;
            let gens = t.generators();
            if json {
                let strings: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({ "generators": strings }))?
                );
            } else {
                for (i, g) in gens.iter().enumerate() {
                    println!("y{} = {}", i + 1, g);
                }
            }
            if gens.iter().any(|g| g.is_zero()) {
                eprintln!(
                    "warning: some sub-maximal pfaffian vanishes; the presenter may not \
                     satisfy the grade-3 Gorenstein hypotheses"
                );
            }
            Ok(EXIT_OK)
        }

        Command::Classify { input, trim, json } => {
            let t = load_presenter(&input)?;
            match classify(&t, &trim) {
                Ok(report) => {
                    if json {
                        print!("{}", ReportDoc::from(&report).to_json());
                    } else {
                        print!("{}", render_text(&report));
                    }
                    if report.zero_pfaffian {
                        eprintln!("warning: vanishing sub-maximal pfaffian");
                    }
                    Ok(EXIT_OK)
                }
                Err(e @ TrimError::TableMiss { .. }) => {
                    eprintln!("error: {}", e);
                    Ok(EXIT_TABLE_MISS)
                }
                Err(e) => Err(e.into()),
            }
        }

        Command::Report { input, json } => {
            let t = load_presenter(&input)?;
            let mut misses = 0;
            let mut docs = Vec::new();
            for set in trim_sets_of_sizes(&[1, 2, 3, 4, 5]) {
                match classify(&t, &set) {
                    Ok(report) => {
                        if json {
                            docs.push(ReportDoc::from(&report));
                        } else {
                            println!(
                                "trim {:?}: t={} class={} format=({},{},{},{}) mu={} rank={} p={} g={}",
                                report.trim_set,
                                report.t,
                                report.class,
                                report.format[0],
                                report.format[1],
                                report.format[2],
                                report.format[3],
                                report.mu,
                                report.rank,
                                report.p_invariant,
                                report.g_condition
                            );
                        }
                    }
                    Err(e @ TrimError::TableMiss { .. }) => {
                        misses += 1;
                        if !json {
                            println!("trim {:?}: {}", set, e);
                        }
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&docs)?);
            }
            Ok(if misses > 0 { EXIT_TABLE_MISS } else { EXIT_OK })
        }

        Command::VerifyLemmas { json } => {
            let checks = lemmas::verify_all();
            if json {
                print!("{}", checks_to_json(&checks));
            } else {
                print!("{}", render_checks("generic-ring determinant identities", &checks));
            }
            Ok(if all_pass(&checks) { EXIT_OK } else { EXIT_INPUT })
        }

        Command::VerifyExample { json } => {
            let checks = example::verify();
            if json {
                print!("{}", checks_to_json(&checks));
            } else {
                print!("{}", render_checks("embedded worked example", &checks));
            }
            Ok(if all_pass(&checks) { EXIT_OK } else { EXIT_INPUT })
        }

        Command::Search {
            field,
            degree,
            trials,
            seed,
            trim_sizes,
            include_example,
            emit_witnesses,
        } => {
            let domain = parse_field(&field)?;
            let cfg = SearchConfig {
                domain,
                degree,
                trials,
                seed,
                trim_sizes,
                include_example,
            };
            let outcome = run_search(&cfg).map_err(|e| anyhow::anyhow!(e))?;
            print!("{}", outcome.to_json());
            if let Some(dir) = emit_witnesses {
                fs::create_dir_all(&dir)?;
                let mut written = 0;
                for (row, doc) in witness_documents(&cfg, &outcome) {
                    let path = dir.join(witness_file_name(&row));
                    fs::write(&path, doc.to_json())?;
                    written += 1;
                }
                eprintln!("wrote {} witness documents to {}", written, dir.display());
            }
            Ok(EXIT_OK)
        }
    }
}
