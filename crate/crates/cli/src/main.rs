use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nilaut_core::autgroup::{is_attached_symmetry, Automorphism};
use nilaut_core::iastruct::{decode_triplet, ia_tau_split};
use nilaut_core::involutions::{hua_reiner_canonicalize, BasisRole};
use nilaut_core::verify::{self, Mutant, VerifyConfig};
use nilaut_core::wordlang::{automorphism_to_json, format_element, parse_automorphism, parse_element};
use nilaut_core::{Element, Error, IntMatrix};

#[derive(Parser)]
#[command(name = "nilaut", version, about = "Calculator for free two-step nilpotent groups and their automorphisms")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Rank {
    /// Rank of the free nilpotent group.
    #[arg(long)]
    rank: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an element.
    Eval {
        #[command(flatten)]
        rank: Rank,
        element: String,
    },
    /// Multiply two elements.
    Mul {
        #[command(flatten)]
        rank: Rank,
        left: String,
        right: String,
    },
    /// Invert an element.
    Inv {
        #[command(flatten)]
        rank: Rank,
        element: String,
    },
    /// Commutator [a,b] = a^-1 b^-1 a b.
    Comm {
        #[command(flatten)]
        rank: Rank,
        left: String,
        right: String,
    },
    /// Apply an automorphism (JSON document or file) to an element.
    Apply { automorphism: String, element: String },
    /// Compose two automorphisms; the right one is applied first.
    Compose { left: String, right: String },
    /// Invert an automorphism.
    Invert { automorphism: String },
    /// Classify an automorphism as an involution.
    Classify { automorphism: String },
    /// Canonical basis of an integer involution matrix such as [[2,1],[-3,-2]].
    Canon { matrix: String },
    /// Decide whether an IA automorphism is a conjugation.
    IsInner { automorphism: String },
    /// Split an IA automorphism fixing x_i into its plus and minus parts.
    SplitIa {
        automorphism: String,
        /// Generator index (1-based).
        #[arg(long)]
        index: usize,
    },
    /// Decode the primitive element coded by (conjugation, basis set, symmetry).
    Decode {
        /// Attached symmetry (JSON document or file).
        #[arg(long)]
        theta: String,
        /// Elements whose conjugations form the basis set, in order.
        #[arg(long = "basis", required = true, num_args = 1..)]
        basis: Vec<String>,
        /// Position (1-based) of the conjugation to decode within the basis set.
        #[arg(long)]
        index: usize,
    },
    /// Rerun every structural check on random inputs.
    Verify {
        #[arg(long, default_value_t = 2)]
        rank_min: usize,
        #[arg(long, default_value_t = 5)]
        rank_max: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_mutant: Option<String>,
    },
}

enum Outcome {
    Ok,
    ChecksFailed,
}

fn read_doc(arg: &str) -> Result<String, Error> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('{') && path.is_file() {
        return fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())));
    }
    Ok(arg.to_string())
}

fn automorphism(arg: &str) -> Result<Automorphism, Error> {
    parse_automorphism(&read_doc(arg)?)
}

fn print_element(g: &Element, as_json: bool) {
    if as_json {
        println!("{}", json!({ "element": format_element(g) }));
    } else {
        println!("{}", format_element(g));
    }
}

fn print_automorphism(sigma: &Automorphism, as_json: bool) {
    if as_json {
        println!("{}", automorphism_to_json(sigma));
    } else {
        for (i, g) in sigma.images().iter().enumerate() {
            println!("x{} -> {}", i + 1, format_element(g));
        }
    }
}

fn to_index(index: usize, rank: usize) -> Result<usize, Error> {
    if index == 0 || index > rank {
        return Err(Error::IndexOutOfRank { index, rank });
    }
    Ok(index - 1)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let js = cli.json;
    match cli.command {
        Command::Eval { rank, element } => {
            print_element(&parse_element(&element, rank.rank)?, js);
        }
        Command::Mul { rank, left, right } => {
            let a = parse_element(&left, rank.rank)?;
            let b = parse_element(&right, rank.rank)?;
            print_element(&a.mul(&b)?, js);
        }
        Command::Inv { rank, element } => {
            print_element(&parse_element(&element, rank.rank)?.inv(), js);
        }
        Command::Comm { rank, left, right } => {
            let a = parse_element(&left, rank.rank)?;
            let b = parse_element(&right, rank.rank)?;
            print_element(&a.commutator(&b)?, js);
        }
        Command::Apply {
            automorphism: doc,
            element,
        } => {
            let sigma = automorphism(&doc)?;
            let g = parse_element(&element, sigma.rank())?;
            print_element(&sigma.apply(&g)?, js);
        }
        Command::Compose { left, right } => {
            let sigma = automorphism(&left)?.compose(&automorphism(&right)?)?;
            print_automorphism(&sigma, js);
        }
        Command::Invert { automorphism: doc } => {
            print_automorphism(&automorphism(&doc)?.invert(), js);
        }
        Command::Classify { automorphism: doc } => {
            let kind = automorphism(&doc)?.classify_involution();
            if js {
                println!("{}", json!({ "kind": kind }));
            } else {
                println!("{kind}");
            }
        }
        Command::Canon { matrix } => {
            let f = IntMatrix::parse_json(&read_doc(&matrix)?)?;
            let form = hua_reiner_canonicalize(&f)?;
            let (p, m, s) = form.block_type();
            let columns: Vec<Value> = form
                .basis()
                .columns()
                .iter()
                .map(|c| IntMatrix::from_rows(vec![c.clone()]).map(|row| row.to_json()[0].clone()))
                .collect::<Result<_, _>>()?;
            let roles: Vec<String> = form
                .roles()
                .iter()
                .map(|r| match r {
                    BasisRole::Fixed => "fixed".to_string(),
                    BasisRole::Negated => "negated".to_string(),
                    BasisRole::Swapped { partner } => format!("swapped with {}", partner + 1),
                })
                .collect();
            if js {
                println!(
                    "{}",
                    json!({ "type": [p, m, s], "basis": columns, "roles": roles })
                );
            } else {
                println!("type ({p},{m},{s})");
                for (c, r) in columns.iter().zip(&roles) {
                    println!("{c} {r}");
                }
            }
        }
        Command::IsInner { automorphism: doc } => {
            let witness = automorphism(&doc)?.inner_witness()?;
            match (js, &witness) {
                (true, w) => println!(
                    "{}",
                    json!({ "inner": w.is_some(), "witness": w.as_ref().map(format_element) })
                ),
                (false, Some(w)) => println!("inner: conjugation by {}", format_element(w)),
                (false, None) => println!("not inner"),
            }
        }
        Command::SplitIa {
            automorphism: doc,
            index,
        } => {
            let sigma = automorphism(&doc)?;
            let split = ia_tau_split(&sigma, to_index(index, sigma.rank())?)?;
            if js {
                println!(
                    "{}",
                    json!({
                        "plus": automorphism_to_json(&split.plus),
                        "minus": automorphism_to_json(&split.minus),
                    })
                );
            } else {
                println!("plus:");
                print_automorphism(&split.plus, false);
                println!("minus:");
                print_automorphism(&split.minus, false);
            }
        }
        Command::Decode {
            theta,
            basis,
            index,
        } => {
            let theta = automorphism(&theta)?;
            let n = theta.rank();
            let taus = basis
                .iter()
                .map(|b| parse_element(b, n).map(|g| Automorphism::conjugation(&g)))
                .collect::<Result<Vec<_>, _>>()?;
            let tau = &taus[to_index(index, taus.len())?];
            let r = decode_triplet(tau, &theta, &taus)?;
            if js {
                println!(
                    "{}",
                    json!({
                        "element": format_element(&r),
                        "attached": is_attached_symmetry(&theta, &taus)?,
                    })
                );
            } else {
                println!("{}", format_element(&r));
            }
        }
        Command::Verify {
            rank_min,
            rank_max,
            trials,
            seed,
            inject_mutant,
        } => {
            let mutant = inject_mutant
                .as_deref()
                .map(str::parse::<Mutant>)
                .transpose()?;
            let config = VerifyConfig {
                rank_min,
                rank_max,
                trials,
                seed,
                mutant,
            };
            let report = verify::run(&config)?;
            if js {
                println!("{}", report.to_json_pretty());
            } else {
                print!("{}", report.render_table());
            }
            if !report.passed {
                return Ok(Outcome::ChecksFailed);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
