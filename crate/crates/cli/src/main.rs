//! `lfspp` — exact solving, classification, checking, generation, and
//! fuzzing for set packing with a linear fractional objective.
//!
//! Output is line-oriented and deterministic: identical invocations produce
//! byte-identical output. Columns are 1-based everywhere in the output.
//! Diagnostics go to standard error.
//!
//! Exit codes: 0 success, 2 parse/validation/usage error, 3 inadmissible
//! instance (a feasible pack with non-positive denominator), 4 instance too
//! large for classification, 5 genuine violation of a checked result,
//! 6 generation condition unmet within the retry budget.

use clap::{Parser, Subcommand, ValueEnum};
use lfspp_core::error::Error;
use lfspp_core::format::{parse_instance, write_instance};
use lfspp_core::generate::{generate, GenCondition, GenConfig};
use lfspp_core::pack::{classify, enumerate_packs};
use lfspp_core::solvers::{solve_bnb, solve_dinkelbach, solve_oracle, SolveReport};
use lfspp_core::theory::fuzz::{fuzz_properties, FuzzCondition, FuzzConfig, FuzzProperty};
use lfspp_core::theory::{
    check_thm2a_condition, check_thm2b_condition, lemma1_grid_sweep, paper_counterexample,
    verify_thm2_conclusion, verify_thm3, CoeffKind, ConditionWitness, Thm2Part,
};
use lfspp_core::{Instance, PackKind};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lfspp", version, about = "Exact linear fractional set packing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly
    Solve {
        /// Instance file, or `-` for standard input
        input: String,
        #[arg(long, value_enum, default_value_t = Algo::Oracle)]
        algo: Algo,
        /// Print every optimal pack (oracle only)
        #[arg(long)]
        all_optima: bool,
    },
    /// List every feasible pack with its value and classification
    Classify {
        /// Instance file, or `-` for standard input
        input: String,
        /// Refuse instances with more columns than this
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Check a structural result against an instance
    Check {
        /// Instance file, or `-` for standard input
        input: String,
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
    /// Generate a random instance on standard output
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Probability that a matrix entry is 1
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        cmin: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        cmax: i64,
        #[arg(long, default_value_t = -5, allow_negative_numbers = true)]
        dmin: i64,
        #[arg(long, default_value_t = 5, allow_negative_numbers = true)]
        dmax: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, default_value_t = 1)]
        beta: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = CondArg::None)]
        condition: CondArg,
    },
    /// Verify the built-in counterexample table
    PaperVerify,
    /// Fuzz a structural property over seeded random instances
    Fuzz {
        #[arg(long, value_enum, default_value_t = PropArg::P1)]
        property: PropArg,
        #[arg(long, default_value_t = 1000)]
        seeds: u64,
        /// Base seed; instance i draws from stream seed + i
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the largest generated column count
        #[arg(long)]
        n_max: Option<usize>,
        /// Override the largest generated row count
        #[arg(long)]
        m_max: Option<usize>,
        /// Report violations without shrinking them
        #[arg(long)]
        no_minimize: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Oracle,
    Bnb,
    Dinkelbach,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    #[value(name = "2a")]
    TwoA,
    #[value(name = "2b")]
    TwoB,
    #[value(name = "3")]
    Three,
    #[value(name = "lemma1-grid")]
    Lemma1Grid,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CondArg {
    None,
    #[value(name = "2a")]
    TwoA,
    Uniform,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropArg {
    /// Every optimal pack is prime, over c, d >= 0 (expected to fail)
    P1,
    /// Every optimal pack is prime, under c > 0 and d < 0
    P2,
    /// Some optimal pack is prime, under the extension-ratio condition
    P3,
    /// Oracle, branch-and-bound, and parametric solver agree
    P4,
}

fn main() -> ExitCode {
    ExitCode::from(run())
}

fn run() -> u8 {
    match Cli::parse().command {
        Command::Solve {
            input,
            algo,
            all_optima,
        } => cmd_solve(&input, algo, all_optima),
        Command::Classify { input, max_n } => cmd_classify(&input, max_n),
        Command::Check { input, theorem } => cmd_check(&input, theorem),
        Command::Gen {
            n,
            m,
            density,
            cmin,
            cmax,
            dmin,
            dmax,
            alpha,
            beta,
            seed,
            condition,
        } => cmd_gen(GenConfig {
            n,
            m,
            density,
            c_range: (cmin, cmax),
            d_range: (dmin, dmax),
            alpha,
            beta,
            condition: match condition {
                CondArg::None => GenCondition::None,
                CondArg::TwoA => GenCondition::Thm2a,
                CondArg::Uniform => GenCondition::Uniform,
            },
            // admissibility is the solvers' contract to report, not gen's
            require_admissible: false,
            max_retries: 1000,
        }, seed),
        Command::PaperVerify => cmd_paper_verify(),
        Command::Fuzz {
            property,
            seeds,
            seed,
            n_max,
            m_max,
            no_minimize,
        } => cmd_fuzz(property, seeds, seed, n_max, m_max, no_minimize),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NonPositiveDenominator { .. } => 3,
        Error::ConditionUnmet { .. } => 6,
        _ => 2,
    }
}

fn fail(err: &Error) -> u8 {
    eprintln!("error: {err}");
    exit_code_for(err)
}

fn read_instance(input: &str) -> Result<Instance, Error> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse {
                line: 0,
                message: format!("cannot read standard input: {e}"),
            })?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read {input}: {e}"),
        })?
    };
    parse_instance(&text)
}

fn columns_1based(columns: &[usize]) -> String {
    let inner: Vec<String> = columns.iter().map(|j| (j + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn print_report(algo: Algo, report: &SolveReport) {
    let name = match algo {
        Algo::Oracle => "oracle",
        Algo::Bnb => "bnb",
        Algo::Dinkelbach => "dinkelbach",
    };
    println!("algo = {name}");
    println!("value = {}", report.optimal_value);
    println!("pack = {}", report.witness);
    println!("x = {}", report.witness.bitstring());
    println!("nodes = {}", report.nodes_explored);
    if matches!(algo, Algo::Dinkelbach) {
        println!("iterations = {}", report.iterations);
    }
    if let Some(optima) = &report.all_optima {
        println!("optima = {}", optima.len());
        for pack in optima {
            println!("optimum: pack={} x={}", pack, pack.bitstring());
        }
    }
}

fn cmd_solve(input: &str, algo: Algo, all_optima: bool) -> u8 {
    if all_optima && algo != Algo::Oracle {
        eprintln!("error: --all-optima requires --algo oracle");
        return 2;
    }
    let inst = match read_instance(input) {
        Ok(inst) => inst,
        Err(e) => return fail(&e),
    };
    let result = match algo {
        Algo::Oracle => solve_oracle(&inst, all_optima),
        Algo::Bnb => solve_bnb(&inst),
        Algo::Dinkelbach => solve_dinkelbach(&inst),
    };
    match result {
        Ok(report) => {
            print_report(algo, &report);
            0
        }
        Err(e) => fail(&e),
    }
}

fn cmd_classify(input: &str, max_n: usize) -> u8 {
    let inst = match read_instance(input) {
        Ok(inst) => inst,
        Err(e) => return fail(&e),
    };
    if inst.n() > max_n {
        eprintln!("error: instance has {} columns, --max-n is {max_n}", inst.n());
        return 4;
    }
    let packs = match enumerate_packs(&inst) {
        Ok(iter) => iter,
        Err(e) => return fail(&e),
    };
    for pack in packs {
        let value = match inst.objective(&pack) {
            Ok(v) => v,
            Err(e) => return fail(&e),
        };
        let class = classify(&inst, &pack).expect("enumerated packs are feasible");
        println!(
            "x={} value={} class={} witnesses={}",
            pack.bitstring(),
            value,
            class.kind,
            columns_1based(&class.redundant_columns)
        );
    }
    0
}

fn hypothesis_failure(witness: &ConditionWitness) -> String {
    match witness {
        ConditionWitness::Coefficient {
            kind: CoeffKind::Weight,
            column,
            value,
        } => {
            let relation = if *value > 0 { "> 0" } else { "= 0" };
            format!("d_{} = {} {}", column + 1, value, relation)
        }
        ConditionWitness::Coefficient {
            kind: CoeffKind::Cost,
            column,
            value,
        } => {
            let relation = if *value < 0 { "< 0" } else { "= 0" };
            format!("c_{} = {} {}", column + 1, value, relation)
        }
        other => other.to_string(),
    }
}

fn yes_no(flag: bool) -> &'static str {
    if flag {
        "YES"
    } else {
        "NO"
    }
}

fn cmd_check(input: &str, theorem: Theorem) -> u8 {
    let inst = match read_instance(input) {
        Ok(inst) => inst,
        Err(e) => return fail(&e),
    };
    match theorem {
        Theorem::Lemma1Grid => {
            println!("theorem = lemma1-grid");
            let sweep = lemma1_grid_sweep(10, 10, 8);
            println!(
                "checked {} tuples, violations: {}",
                sweep.checked,
                sweep.violations.len()
            );
            if sweep.violations.is_empty() {
                0
            } else {
                for witness in &sweep.violations {
                    println!("violation: {witness}");
                }
                5
            }
        }
        Theorem::TwoA | Theorem::TwoB => {
            let (label, part) = match theorem {
                Theorem::TwoA => ("2a", Thm2Part::A),
                _ => ("2b", Thm2Part::B),
            };
            println!("theorem = {label}");
            let hypothesis = match part {
                Thm2Part::A => check_thm2a_condition(&inst),
                Thm2Part::B => match check_thm2b_condition(&inst) {
                    Ok(report) => report,
                    Err(e) => return fail(&e),
                },
            };
            if !hypothesis.holds {
                let reason = hypothesis
                    .witness
                    .as_ref()
                    .map(hypothesis_failure)
                    .unwrap_or_default();
                println!("hypothesis: FAILS ({reason})");
                println!("conclusion not evaluated");
                return 0;
            }
            if part == Thm2Part::A && inst.alpha() < 0 {
                println!("hypothesis: FAILS (alpha = {} < 0)", inst.alpha());
                println!("conclusion not evaluated");
                return 0;
            }
            println!("hypothesis: HOLDS");
            let report = match verify_thm2_conclusion(&inst, part) {
                Ok(report) => report,
                Err(e) => return fail(&e),
            };
            let all_prime = report.all_optima_prime.unwrap_or(false);
            println!("exists prime optimum: {}", yes_no(report.holds));
            println!("all optima prime: {}", yes_no(all_prime));
            if report.holds && all_prime {
                println!("verdict: CONSISTENT");
                0
            } else {
                if let Some(witness) = &report.witness {
                    println!("violation witness: {witness}");
                }
                println!("verdict: VIOLATION");
                5
            }
        }
        Theorem::Three => {
            println!("theorem = 3");
            let report = match verify_thm3(&inst) {
                Ok(report) => report,
                Err(Error::NotUniform(reason)) => {
                    println!("hypothesis: FAILS ({reason})");
                    println!("conclusion not evaluated");
                    return 0;
                }
                Err(e) => return fail(&e),
            };
            let c = inst.c()[0];
            println!("hypothesis: HOLDS (uniform c={}, d={})", c, inst.d()[0]);
            if report.degenerate {
                println!("conclusion: degenerate (c = 0), every pack is optimal");
                return 0;
            }
            let conclusion = if c > 0 {
                "optima are exactly the maximum-cardinality packs"
            } else {
                "empty pack is the unique optimum"
            };
            println!("{}: {}", conclusion, yes_no(report.holds));
            if report.holds {
                println!("verdict: CONSISTENT");
                0
            } else {
                if let Some(witness) = &report.witness {
                    println!("violation witness: {witness}");
                }
                println!("verdict: VIOLATION");
                5
            }
        }
    }
}

fn cmd_gen(config: GenConfig, seed: u64) -> u8 {
    match generate(&config, seed) {
        Ok(inst) => {
            print!("{}", write_instance(&inst));
            0
        }
        Err(e) => fail(&e),
    }
}

fn cmd_paper_verify() -> u8 {
    let fixture = paper_counterexample();
    println!("optimal value = {}", fixture.optimal_value);
    println!("optimal pack = {}", fixture.optimal_pack);
    println!("x = {}", fixture.optimal_pack.bitstring());
    for row in &fixture.rows {
        println!(
            "x={} value={} class={}",
            row.pack.bitstring(),
            row.value,
            row.kind
        );
    }
    let confirmed = !fixture.prime_optimum_exists;
    println!(
        "no prime pack attains the optimum: {}",
        if confirmed { "CONFIRMED" } else { "REFUTED" }
    );
    // every prime pack must sit strictly below the optimum
    let consistent = confirmed
        && fixture.rows.iter().all(|row| {
            row.kind != PackKind::Prime || row.value < fixture.optimal_value
        });
    println!("{}", if consistent { "PASS" } else { "FAIL" });
    if consistent {
        0
    } else {
        5
    }
}

fn fuzz_profile(property: PropArg) -> FuzzConfig {
    match property {
        PropArg::P1 => FuzzConfig {
            property: FuzzProperty::AllOptimaPrime,
            condition: FuzzCondition::None,
            c_range: (0, 6),
            d_range: (0, 6),
            beta_range: (1, 6),
            n_range: (2, 8),
            m_range: (1, 5),
            density: 0.5,
            ..FuzzConfig::default()
        },
        PropArg::P2 => FuzzConfig {
            property: FuzzProperty::AllOptimaPrime,
            condition: FuzzCondition::Thm2a,
            c_range: (1, 9),
            d_range: (-5, -1),
            beta_range: (20, 60),
            n_range: (1, 8),
            m_range: (1, 5),
            density: 0.5,
            ..FuzzConfig::default()
        },
        PropArg::P3 => FuzzConfig {
            property: FuzzProperty::ExistsPrimeOptimum,
            condition: FuzzCondition::Thm2b,
            c_range: (90, 99),
            d_range: (1, 1),
            beta_range: (1, 9),
            n_range: (1, 4),
            m_range: (1, 3),
            density: 0.5,
            ..FuzzConfig::default()
        },
        PropArg::P4 => FuzzConfig {
            property: FuzzProperty::SolverAgreement,
            condition: FuzzCondition::None,
            c_range: (-20, 20),
            d_range: (-20, 20),
            alpha_range: (-20, 20),
            beta_range: (1, 20),
            n_range: (1, 12),
            m_range: (1, 8),
            density: 0.4,
            ..FuzzConfig::default()
        },
    }
}

fn cmd_fuzz(
    property: PropArg,
    seeds: u64,
    seed: u64,
    n_max: Option<usize>,
    m_max: Option<usize>,
    no_minimize: bool,
) -> u8 {
    let mut config = fuzz_profile(property);
    config.seeds = seeds;
    config.base_seed = seed;
    if let Some(n) = n_max {
        config.n_range = (config.n_range.0.min(n), n);
    }
    if let Some(m) = m_max {
        config.m_range = (config.m_range.0.min(m), m);
    }
    config.minimize = !no_minimize;
    let label = match property {
        PropArg::P1 => "p1",
        PropArg::P2 => "p2",
        PropArg::P3 => "p3",
        PropArg::P4 => "p4",
    };
    println!("selected = {label}");
    let report = fuzz_properties(&config);
    print!("{}", report.render_log());
    println!(
        "summary: {label} violations={}/{}",
        report.violations.len(),
        report.evaluated
    );
    0
}
