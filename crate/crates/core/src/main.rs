use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use series_roots::bfile::{parse_bfile, BFile};
use series_roots::codes::{
    bch_conjecture_check, bch_extended, fixture_enumerator, parse_generator, rm_code,
    rm_congruence_check, weight_enumerator, WeightEnumerator,
};
use series_roots::hanna::{
    hanna_digits, hanna_root_mod, hanna_sequence, permutation_sequence, postscript_series,
    verify_h2_equations, verify_h3_equations,
};
use series_roots::lattices::{
    builtin_lattice, builtin_theta, bw_congruence_check, bw_theta_is_one_mod, extremal_form,
    kissing_2adic_rows, theta_from_gram, GramMatrix,
};
use series_roots::scan::{parse_root_orders, scan_dir, FileOutcome, DEFAULT_MAX_ORDER};
use series_roots::{is_nth_power, max_power_order, nth_root, Error, IntSeries, RootCertificate};

#[derive(Parser)]
#[command(
    name = "series-roots",
    version,
    about = "Exact n-th roots of integer power series"
)]
struct Cli {
    /// Print series as b-files (`index value` per line).
    #[arg(long, global = true)]
    bfile: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Extract the integer n-th root of a b-file series.
    Root {
        #[arg(short)]
        n: u64,
        #[arg(long)]
        order: Option<usize>,
        file: PathBuf,
    },
    /// Decide n-th power membership by residues modulo mu(n).
    Test {
        #[arg(short)]
        n: u64,
        #[arg(long)]
        order: Option<usize>,
        file: PathBuf,
    },
    /// List every n <= B for which the series passes the n-th root test.
    Maxpow {
        #[arg(long)]
        bound: u64,
        file: PathBuf,
    },
    /// Theta series of a builtin lattice or a Gram matrix file.
    Theta {
        lattice: String,
        #[arg(long)]
        max_norm: u64,
    },
    /// Theta series of an extremal even unimodular lattice.
    ThetaExtremal {
        #[arg(short)]
        d: u64,
        #[arg(long, default_value_t = 100)]
        order: usize,
    },
    /// Weight enumerators.
    Wenum {
        #[command(subcommand)]
        code: WenumCommand,
    },
    /// Check one family of congruences.
    Congruence {
        #[command(subcommand)]
        family: CongruenceCommand,
    },
    /// Hanna sequence H_k, its root, or its root mod mu(k)/k.
    Hanna {
        #[arg(short)]
        k: u64,
        #[arg(short = 'N')]
        count: usize,
        #[arg(long, conflicts_with = "modulo")]
        root: bool,
        #[arg(long = "mod")]
        modulo: bool,
    },
    /// Greedy permutation with an integral cube root.
    Perm {
        #[arg(short = 'N')]
        count: usize,
    },
    /// Test every b-file in a directory.
    Scan {
        /// Root orders, e.g. `4`, `2,3` or `2..24`.
        #[arg(short)]
        n: String,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        order: usize,
        dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum WenumCommand {
    /// Reed-Muller code RM(r, m).
    Rm { r: u32, m: u32 },
    /// Extended primitive BCH code of length 2^m, designed distance 2t - 1.
    Bch { m: u32, t: u32 },
    /// golay, hamming, rao-reddy, ternary-golay, s18, or a generator matrix file.
    Fixture { name: String },
}

#[derive(Subcommand)]
enum CongruenceCommand {
    /// Reed-Muller product and doubling congruences.
    Rm {
        #[arg(long, default_value_t = 5)]
        m_max: u32,
    },
    /// Barnes-Wall congruences and kissing numbers.
    Bw {
        #[arg(long, default_value_t = 21)]
        order: usize,
    },
    /// Root orders of extended BCH enumerators.
    Bch {
        #[arg(long, default_value_t = 5)]
        m_max: u32,
    },
    /// Functional equations of H_2 modulo 4.
    Hanna2 {
        #[arg(long, default_value_t = 512)]
        order: usize,
    },
    /// Functional equations of H_3 modulo 9.
    Hanna3 {
        #[arg(long, default_value_t = 243)]
        order: usize,
    },
    /// The series sum (2n+1) 8^n x^{n(n+1)/2}.
    Postscript {
        #[arg(long, default_value_t = 200)]
        order: usize,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::UnknownLattice(_)
            | Error::OutOfRange(_)
            | Error::ZeroIndex => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read_series(path: &Path, order: Option<usize>) -> Result<IntSeries, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let s = parse_bfile(&text)?.to_series()?;
    let cap = order.unwrap_or(DEFAULT_MAX_ORDER).min(s.order());
    Ok(s.truncate(cap))
}

fn print_values(values: &[BigInt], as_bfile: bool) {
    if as_bfile {
        print!("{}", BFile::new(0, values.to_vec()));
    } else {
        let v: Vec<String> = values.iter().map(|c| c.to_string()).collect();
        println!("{}", v.join(", "));
    }
}

fn print_series(s: &IntSeries, as_bfile: bool) {
    print_values(s.coeffs(), as_bfile);
}

fn print_u64(values: &[u64], as_bfile: bool) {
    print_values(
        &values.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>(),
        as_bfile,
    );
}

fn status(name: &str, ok: bool) -> bool {
    println!("{name}: {}", if ok { "holds" } else { "FAILS" });
    ok
}

fn print_enumerator(w: &WeightEnumerator, as_bfile: bool) {
    if !as_bfile {
        println!("# [{}, {}] code over GF({})", w.n, w.k, w.q);
    }
    print_series(w.series(), as_bfile);
}

fn run(cli: Cli) -> Outcome {
    let bf = cli.bfile;
    match cli.command {
        Command::Root { n, order, file } => {
            let f = read_series(&file, order)?;
            let v = nth_root(&f, n)?;
            match v.root_prefix() {
                Some(g) => {
                    if !bf {
                        println!("# root of order {n} through x^{}", v.order_tested - 1);
                    }
                    print_series(g, bf);
                }
                None => println!(
                    "not in P_{n}: obstruction at x^{}",
                    v.fail_index().unwrap_or(0)
                ),
            }
            Ok(v.is_member())
        }
        Command::Test { n, order, file } => {
            let f = read_series(&file, order)?;
            let v = is_nth_power(&f, n)?;
            match v.certificate() {
                Some(RootCertificate::Residues(r)) => {
                    if !bf {
                        println!(
                            "# member of P_{n} to order {}; root modulo {}",
                            v.order_tested,
                            r.modulus()
                        );
                    }
                    print_u64(r.coeffs(), bf);
                }
                Some(RootCertificate::Integer(g)) => {
                    if !bf {
                        println!("# member of P_{n} to order {}", v.order_tested);
                    }
                    print_series(g, bf);
                }
                None => println!(
                    "not in P_{n}: obstruction at x^{}",
                    v.fail_index().unwrap_or(0)
                ),
            }
            Ok(v.is_member())
        }
        Command::Maxpow { bound, file } => {
            let f = read_series(&file, None)?;
            let set = max_power_order(&f, bound)?;
            let v: Vec<String> = set.iter().map(|n| n.to_string()).collect();
            println!("{}", v.join(" "));
            Ok(set.iter().any(|&n| n > 1))
        }
        Command::Theta { lattice, max_norm } => {
            let path = Path::new(&lattice);
            let th = if path.is_file() {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                theta_from_gram(&GramMatrix::parse(&text)?, max_norm)
            } else {
                builtin_lattice(&lattice)?;
                builtin_theta(&lattice, max_norm)?
            };
            print_series(&th, bf);
            Ok(true)
        }
        Command::ThetaExtremal { d, order } => {
            let form = extremal_form(d, order)?;
            if !bf {
                let c: Vec<String> = form.coefficients.iter().map(|c| c.to_string()).collect();
                println!("# d = {d}, c = [{}]", c.join(", "));
            }
            print_series(&form.theta, bf);
            Ok(true)
        }
        Command::Wenum { code } => {
            let w = match code {
                WenumCommand::Rm { r, m } => weight_enumerator(&rm_code(r, m)?)?,
                WenumCommand::Bch { m, t } => weight_enumerator(&bch_extended(m, t)?)?,
                WenumCommand::Fixture { name } => {
                    let path = Path::new(&name);
                    if path.is_file() {
                        let text = std::fs::read_to_string(path)
                            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                        let code = parse_generator(&text)
                            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                        weight_enumerator(&code)?
                    } else {
                        fixture_enumerator(&name).map_err(|e| Failure::Usage(e.to_string()))?
                    }
                }
            };
            print_enumerator(&w, bf);
            Ok(true)
        }
        Command::Congruence { family } => congruence(family),
        Command::Hanna {
            k,
            count,
            root,
            modulo,
        } => {
            if root {
                print_series(&hanna_sequence(k, count)?.root, bf);
            } else if modulo {
                print_u64(hanna_root_mod(k, count)?.coeffs(), bf);
            } else {
                print_u64(&hanna_digits(k, count)?, bf);
            }
            Ok(true)
        }
        Command::Perm { count } => {
            print_u64(&permutation_sequence(count), bf);
            Ok(true)
        }
        Command::Scan { n, order, dir } => {
            let ns = parse_root_orders(&n)?;
            let reports = scan_dir(&dir, &ns, order)
                .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
            let mut any = false;
            for r in reports {
                let name = r.path.display();
                match r.outcome {
                    FileOutcome::Unreadable(e) => println!("{name}\tunreadable: {e}"),
                    FileOutcome::Skipped(why) => println!("{name}\tskipped: {why}"),
                    FileOutcome::Tested {
                        order,
                        one_mod_4,
                        verdicts,
                    } => {
                        let flag = if one_mod_4 { " (= 1 mod 4)" } else { "" };
                        for v in verdicts {
                            any |= v.member;
                            match v.fail_index {
                                None if bf => {
                                    println!("# {name} n={} root to order {order}", v.n);
                                    if let Some(b) = v.certificate {
                                        print!("{b}");
                                    }
                                }
                                None => {
                                    let cert = v.certificate.map(|b| {
                                        b.values
                                            .iter()
                                            .take(8)
                                            .map(|c| c.to_string())
                                            .collect::<Vec<_>>()
                                            .join(",")
                                    });
                                    println!(
                                        "{name}\tn={}\tmember to order {order}{flag}\troot {} ...",
                                        v.n,
                                        cert.unwrap_or_default()
                                    );
                                }
                                Some(i) => println!(
                                    "{name}\tn={}\tnot a member: obstruction at x^{i}",
                                    v.n
                                ),
                            }
                        }
                    }
                }
            }
            Ok(any)
        }
    }
}

fn congruence(family: CongruenceCommand) -> Outcome {
    match family {
        CongruenceCommand::Rm { m_max } => {
            let rep = rm_congruence_check(m_max)?;
            for r in &rep.rows {
                println!(
                    "RM({}, {})\tk={}\tproduct mod 2^{}: {}\troot of order 2^{}: {}",
                    r.r,
                    r.m,
                    r.k,
                    r.r + 1,
                    r.product_congruence,
                    r.r,
                    r.member
                );
            }
            for d in &rep.doubling {
                println!(
                    "W({0},{1}) - W({0},{2})(x^2) = 0 mod 2^{1}: {3}",
                    d.r,
                    d.m + 1,
                    d.m,
                    d.holds
                );
            }
            Ok(status("reed-muller", rep.all_hold()))
        }
        CongruenceCommand::Bw { order } => {
            let mut ok = true;
            for m in 1..=4 {
                ok &= status(
                    &format!("BW_{} = 1 mod 2^{}", 1 << m, m + 1),
                    bw_theta_is_one_mod(m, order)?,
                );
            }
            for m in 2..=4 {
                ok &= status(
                    &format!("BW_{} doubling congruence", 1 << m),
                    bw_congruence_check(m, order)?,
                );
            }
            for r in kissing_2adic_rows(4)? {
                println!(
                    "m={}\tkissing {}\t/2^{} = {}\tproduct mod 2^{} = {}",
                    r.m,
                    r.kissing,
                    r.m + 1,
                    r.normalized,
                    r.m,
                    r.product_residue
                );
                ok &= r.agrees;
            }
            Ok(status("barnes-wall", ok))
        }
        CongruenceCommand::Bch { m_max } => {
            let rows = bch_conjecture_check(m_max)?;
            for r in &rows {
                println!(
                    "m={}\tt={}\tk={}\td'={}\tP_{}: {}",
                    r.m, r.t, r.k, r.d_prime, r.target, r.member
                );
            }
            Ok(status("bch", rows.iter().all(|r| r.member)))
        }
        CongruenceCommand::Hanna2 { order } => {
            Ok(status("H_2 equations mod 4", verify_h2_equations(order)?))
        }
        CongruenceCommand::Hanna3 { order } => {
            Ok(status("H_3 equations mod 9", verify_h3_equations(order)?))
        }
        CongruenceCommand::Postscript { order } => {
            let rep = postscript_series(order)?;
            status("f = 1 mod 8", rep.one_mod_8);
            status("f = prod (1 - x^m)^3 mod 9", rep.product_mod_9);
            status("f in P_12", rep.twelfth_root.is_member());
            Ok(rep.all_hold())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
