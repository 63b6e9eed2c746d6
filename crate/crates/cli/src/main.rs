use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ncbruhat::bijections::nc_to_dyck;
use ncbruhat::bijections::{diagonal_map, dyck_map, vertical_map};
use ncbruhat::general::{
    coxeter_elements, enumerate_nc_general, induced_order, parse_coxeter_word, phi, CoxeterElement,
};
use ncbruhat::lattice::{bruhat_poset_on, ideal_poset, restricted_bruhat_poset};
use ncbruhat::noncrossing::enumerate_nc;
use ncbruhat::nonnesting::{dyck_to_ideal, enumerate_ideals};
use ncbruhat::records::JsonRecord;
use ncbruhat::type_b::{d_b, enumerate_ideals_b, enumerate_pc_b};
use ncbruhat::vectors::{
    diagonal_vector, enumerate_vertical_vectors, vertical_vector, vertical_vector_of_nc,
};
use ncbruhat::verify::{default_rank, Check};

#[derive(Parser)]
#[command(
    name = "ncbruhat",
    version,
    about = "Noncrossing partitions, root-poset ideals and Bruhat order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of a kind, one JSON record per line, then a count.
    Enumerate {
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Coxeter element as simple indices, e.g. `2,1,3` for s2 s1 s3, or
        /// as a cycle from 1, e.g. `(1,3,4,2)`.
        #[arg(long)]
        coxeter: Option<String>,
    },
    /// Apply a bijection to one JSON record (from --input or stdin).
    Map {
        #[arg(long)]
        from: Side,
        #[arg(long)]
        to: Side,
        #[arg(long, default_value = "dyck")]
        via: Via,
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        coxeter: Option<String>,
    },
    /// Run a verification suite and print its verdict.
    Verify {
        check: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print a Hasse diagram in DOT.
    Hasse {
        poset: PosetKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        coxeter: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Nc,
    Nn,
    Vectors,
    CoxeterElements,
    NcB,
    NnB,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Nn,
    Nc,
    Vector,
    NnB,
    NcB,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Dyck,
    Vertical,
    Diagonal,
    Phi,
    /// Dyck, vertical and diagonal together; fails unless they agree.
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKind {
    BruhatNc,
    Ideals,
    Induced,
}

/// A failure, with the exit code it maps to.
enum Failure {
    Usage(String),
    Verification,
}

impl From<ncbruhat::Error> for Failure {
    fn from(e: ncbruhat::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn check_rank(n: usize, max: usize) -> CmdResult {
    if n == 0 || n > max {
        return Err(Failure::Usage(format!("n must lie in 1..={max}, got {n}")));
    }
    Ok(())
}

fn coxeter_for(n: usize, word: Option<&str>) -> Result<CoxeterElement, Failure> {
    match word {
        Some(w) if w.trim_start().starts_with('(') => {
            let cycle = w
                .trim()
                .trim_matches(|ch| ch == '(' || ch == ')')
                .split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::Usage(format!("bad cycle {w:?}")))?;
            Ok(CoxeterElement::from_cycle(n, &cycle)?)
        }
        Some(w) => Ok(parse_coxeter_word(n, w)?),
        None => Ok(CoxeterElement::linear(n)),
    }
}

fn emit(out: &mut impl Write, records: impl IntoIterator<Item = JsonRecord>) -> CmdResult {
    let mut count = 0;
    for r in records {
        writeln!(out, "{}", r.to_line()).map_err(|e| Failure::Usage(e.to_string()))?;
        count += 1;
    }
    writeln!(out, "{{\"count\":{count}}}").map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(())
}

fn enumerate(out: &mut impl Write, kind: Kind, n: usize, coxeter: Option<&str>) -> CmdResult {
    match kind {
        Kind::Nc => {
            check_rank(n, 8)?;
            match coxeter {
                None => emit(out, enumerate_nc(n).iter().map(JsonRecord::nc)),
                Some(_) => {
                    let c = coxeter_for(n, coxeter)?;
                    emit(
                        out,
                        enumerate_nc_general(&c).iter().map(JsonRecord::cycles_of),
                    )
                }
            }
        }
        Kind::Nn => {
            check_rank(n, 8)?;
            emit(out, enumerate_ideals(n).iter().map(JsonRecord::ideal))
        }
        Kind::Vectors => {
            check_rank(n, 10)?;
            emit(
                out,
                enumerate_vertical_vectors(n)
                    .iter()
                    .map(|v| JsonRecord::vector(v.entries())),
            )
        }
        Kind::CoxeterElements => {
            check_rank(n, 10)?;
            emit(out, coxeter_elements(n).iter().map(JsonRecord::coxeter))
        }
        Kind::NcB => {
            check_rank(n, 4)?;
            emit(out, enumerate_pc_b(n).iter().map(JsonRecord::signed))
        }
        Kind::NnB => {
            check_rank(n, 5)?;
            emit(out, enumerate_ideals_b(n).iter().map(JsonRecord::ideal_b))
        }
    }
}

fn map(
    from: Side,
    to: Side,
    via: Via,
    input: &JsonRecord,
    coxeter: Option<&str>,
) -> Result<JsonRecord, Failure> {
    let unsupported = || Failure::Usage("unsupported combination of --from, --to and --via".into());
    match (from, to, via) {
        (Side::Nn, Side::Nc, _) => {
            let p = input.to_ideal()?;
            let x = match via {
                Via::Dyck => dyck_map(&p),
                Via::Vertical => vertical_map(&p)?,
                Via::Diagonal => diagonal_map(&p)?,
                Via::All => {
                    let x = dyck_map(&p);
                    if vertical_map(&p)? != x || diagonal_map(&p)? != x {
                        eprintln!("the three maps disagree on {p}");
                        return Err(Failure::Verification);
                    }
                    x
                }
                Via::Phi => return Err(unsupported()),
            };
            Ok(JsonRecord::nc(&x))
        }
        (Side::Nc, Side::Nn, Via::Dyck | Via::All) => {
            let x = input.to_nc()?;
            Ok(JsonRecord::ideal(&dyck_to_ideal(&nc_to_dyck(&x))))
        }
        (Side::Nc, Side::Nc, Via::Phi) => {
            let n = match &input.payload {
                ncbruhat::records::Payload::NcPartition { n, .. } => *n,
                _ => return Err(unsupported()),
            };
            let c = coxeter_for(n, coxeter)?;
            Ok(JsonRecord::nc(&phi(&input.to_permutation()?, &c)?))
        }
        (Side::Nc, Side::Vector, Via::Vertical | Via::Dyck | Via::All) => Ok(JsonRecord::vector(
            vertical_vector_of_nc(&input.to_nc()?).entries(),
        )),
        (Side::Nn, Side::Vector, Via::Vertical) => Ok(JsonRecord::vector(
            vertical_vector(&input.to_ideal()?).entries(),
        )),
        (Side::Nn, Side::Vector, Via::Diagonal) => Ok(JsonRecord::vector(
            diagonal_vector(&input.to_ideal()?).entries(),
        )),
        (Side::NnB, Side::NcB, Via::Diagonal) => Ok(JsonRecord::signed(&d_b(&input.to_ideal_b()?))),
        _ => Err(unsupported()),
    }
}

fn hasse(out: &mut impl Write, poset: PosetKind, n: usize, coxeter: Option<&str>) -> CmdResult {
    check_rank(n, 6)?;
    let dot = match poset {
        PosetKind::BruhatNc => match coxeter {
            None => {
                let (elements, p) = restricted_bruhat_poset(n);
                let labels: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
                p.to_dot("bruhat-nc", &labels)
            }
            Some(_) => {
                let c = coxeter_for(n, coxeter)?;
                let elements = enumerate_nc_general(&c);
                let labels: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
                bruhat_poset_on(&elements).to_dot("bruhat-nc", &labels)
            }
        },
        PosetKind::Ideals => {
            let (ideals, p) = ideal_poset(n);
            let labels: Vec<String> = ideals.iter().map(|q| q.to_string()).collect();
            p.to_dot("ideals", &labels)
        }
        PosetKind::Induced => {
            let c = coxeter_for(n, coxeter)?;
            let (elements, p) = induced_order(&c)?;
            let labels: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
            p.to_dot("induced", &labels)
        }
    };
    out.write_all(dot.as_bytes())
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn read_input(input: Option<String>) -> Result<JsonRecord, Failure> {
    let text = match input {
        Some(s) => s,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(e.to_string()))?;
            s
        }
    };
    Ok(JsonRecord::parse(text.trim())?)
}

fn run(cli: Cli) -> CmdResult {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Enumerate { kind, n, coxeter } => enumerate(&mut out, kind, n, coxeter.as_deref()),
        Command::Map {
            from,
            to,
            via,
            input,
            coxeter,
        } => {
            let record = read_input(input)?;
            let mapped = map(from, to, via, &record, coxeter.as_deref())?;
            writeln!(out, "{}", mapped.to_line()).map_err(|e| Failure::Usage(e.to_string()))
        }
        Command::Verify { check, n } => {
            let check: Check = check.parse()?;
            let n = n.unwrap_or_else(|| default_rank(check));
            let verdict = check.run(n)?;
            let passed = verdict.passed;
            writeln!(out, "{}", JsonRecord::verdict(verdict).to_line())
                .map_err(|e| Failure::Usage(e.to_string()))?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Hasse { poset, n, coxeter } => hasse(&mut out, poset, n, coxeter.as_deref()),
    };
    out.flush().map_err(|e| Failure::Usage(e.to_string()))?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
