//! Command-line surface for the logic-program toolkit.
//!
//! Exit codes: 0 for a positive verdict (equivalent, provable, model
//! found, suite passed), 1 for a negative one, 2 when a resource guard
//! fired or a bounded search came back empty-handed, 3 and up for errors
//! such as unreadable input or syntax problems.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use selp::classical::cpl_equivalent;
use selp::equivalence::{classify, strong_equiv_oracle, strongly_equivalent};
use selp::ht::{g3_countermodel, g3_entails, g3_equivalent, ht_models_of};
use selp::kripke::{countermodel_search, SearchOutcome};
use selp::prover::{ipl_decide, kc_decide, Verdict};
use selp::stable::{answer_sets_ht, answer_sets_reduct, reduct};
use selp::suite::{run_suite, DEFAULT_SEED};
use selp::syntax::{parse_formula, parse_program, AtomSet};
use selp::{Atom, Formula, FragmentDescriptor, KripkeModel, Limits, Program};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "selp",
    version,
    about = "Answer sets, here-and-there models, and strong equivalence for propositional logic programs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Reduct,
    Equilibrium,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicArg {
    Cpl,
    Ipl,
    Kc,
    G3,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Lift the enumeration guards.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Answer sets of a program.
    Answersets {
        file: String,
        /// Computation route.
        #[arg(long, value_enum, default_value = "reduct")]
        method: MethodArg,
        /// Extra atoms for the universe, comma separated.
        #[arg(long)]
        universe: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// The reduct of a program relative to a set of atoms.
    Reduct {
        file: String,
        /// The candidate set, comma separated (empty for the empty set).
        #[arg(long, default_value = "")]
        witness: String,
        #[command(flatten)]
        common: Common,
    },
    /// All here-and-there models of a program.
    #[command(name = "ht-models")]
    HtModels {
        file: String,
        #[arg(long)]
        universe: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Program equivalence in a chosen logic; --json emits the full report.
    Equiv {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "g3")]
        logic: LogicArg,
        /// World bound for the kc route.
        #[arg(long, default_value_t = 5)]
        bound: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Strong equivalence on the rule fragment, with witnesses.
    #[command(name = "strong-equiv")]
    StrongEquiv {
        first: String,
        second: String,
        /// Also run the exhaustive unary-extension oracle.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a program in a restricted fragment with the same
    /// here-and-there models as the target.
    Expressibility {
        file: String,
        /// Connectives, comma separated from and,or,imp,not,top,bot.
        #[arg(long)]
        fragment: String,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a Kripke model forcing the premises but not the goal.
    Countermodel {
        goal: String,
        /// File with premise statements.
        #[arg(long)]
        premises: Option<String>,
        /// Restrict to models with a single terminal world.
        #[arg(long)]
        single_top: bool,
        #[arg(long, default_value_t = 5)]
        max_worlds: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decide derivability of a goal from optional premises.
    Prove {
        goal: String,
        #[arg(long)]
        premises: Option<String>,
        #[arg(long, value_enum)]
        logic: LogicArg,
        /// World bound for countermodel search in the kc route.
        #[arg(long, default_value_t = 5)]
        bound: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in verification suite of worked examples and
    /// property checks.
    #[command(name = "check-paper")]
    CheckPaper {
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Guard(String),
    Error(String),
}

impl From<selp::Error> for Failure {
    fn from(e: selp::Error) -> Failure {
        match e {
            selp::Error::Guard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Error(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Guard(msg)) => {
            eprintln!("guard: {msg}");
            ExitCode::from(EXIT_UNKNOWN)
        }
        Err(Failure::Error(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn limits_for(common: &Common) -> Limits {
    if common.force {
        Limits::relaxed()
    } else {
        Limits::default()
    }
}

fn load_program(path: &str) -> Result<Program, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Error(format!("{path}: {e}")))?;
    parse_program(&text).map_err(|e| Failure::Error(format!("{path}: {e}")))
}

fn load_premises(path: &Option<String>) -> Result<Vec<Formula>, Failure> {
    match path {
        None => Ok(vec![]),
        Some(p) => Ok(load_program(p)?.rules().map(|r| r.formula()).collect()),
    }
}

fn parse_atom_list(text: &str) -> Result<AtomSet, Failure> {
    let mut out = AtomSet::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        out.insert(Atom::new(part).map_err(|e| Failure::Error(e.to_string()))?);
    }
    Ok(out)
}

fn parse_goal(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| Failure::Error(format!("goal: {e}")))
}

fn parse_fragment(text: &str) -> Result<FragmentDescriptor, Failure> {
    let mut frag = FragmentDescriptor {
        rule_form: true,
        ..FragmentDescriptor::empty()
    };
    for part in text.split(',') {
        match part.trim() {
            "" => {}
            "and" => frag.and = true,
            "or" => frag.or = true,
            "imp" => frag.imp = true,
            "not" => frag.not = true,
            "top" => frag.top = true,
            "bot" => frag.bot = true,
            other => {
                return Err(Failure::Error(format!(
                    "unknown connective '{other}' (use and,or,imp,not,top,bot)"
                )))
            }
        }
    }
    Ok(frag)
}

fn fmt_atom_set(s: &AtomSet) -> String {
    let items: Vec<String> = s.iter().map(|a| a.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

#[derive(Serialize)]
struct FlatCountermodel<'a> {
    #[serde(flatten)]
    model: &'a KripkeModel,
    witness: usize,
}

fn dispatch(cmd: Command) -> Result<u8, Failure> {
    match cmd {
        Command::Answersets {
            file,
            method,
            universe,
            common,
        } => {
            let limits = limits_for(&common);
            let program = load_program(&file)?;
            let mut u = program.universe().clone();
            if let Some(extra) = universe {
                u.extend(parse_atom_list(&extra)?);
            }
            let report = match method {
                MethodArg::Reduct => answer_sets_reduct(&program, &u, &limits)?,
                MethodArg::Equilibrium => answer_sets_ht(&program, &u, &limits)?,
            };
            if common.json {
                print_json(&report);
            } else if report.answer_sets().is_empty() {
                println!("no answer sets");
            } else {
                for x in report.answer_sets() {
                    println!("{}", fmt_atom_set(x));
                }
            }
            Ok(EXIT_YES)
        }

        Command::Reduct {
            file,
            witness,
            common,
        } => {
            let program = load_program(&file)?;
            let x = parse_atom_list(&witness)?;
            let r = reduct(&program, &x);
            if common.json {
                #[derive(Serialize)]
                struct ReductJson<'a> {
                    witness: &'a AtomSet,
                    rules: &'a Program,
                }
                print_json(&ReductJson {
                    witness: r.witness(),
                    rules: r.rules(),
                });
            } else {
                print!("{}", r.rules());
            }
            Ok(EXIT_YES)
        }

        Command::HtModels {
            file,
            universe,
            common,
        } => {
            let limits = limits_for(&common);
            let program = load_program(&file)?;
            let mut u = program.universe().clone();
            if let Some(extra) = universe {
                u.extend(parse_atom_list(&extra)?);
            }
            let models = ht_models_of(&program, &u, &limits)?;
            if common.json {
                print_json(&models);
            } else {
                for m in &models {
                    println!("{m}");
                }
            }
            Ok(EXIT_YES)
        }

        Command::Equiv {
            first,
            second,
            logic,
            bound,
            common,
        } => {
            let limits = limits_for(&common);
            let p1 = load_program(&first)?;
            let p2 = load_program(&second)?;
            let verdict: Option<bool> = match logic {
                LogicArg::Cpl => Some(cpl_equivalent(&p1, &p2, &limits)?),
                LogicArg::G3 => Some(g3_equivalent(&p1, &p2, &limits)?),
                LogicArg::Ipl => Some(interderivable(&p1, &p2, &limits, |ps, g, l| {
                    Ok(match ipl_decide(ps, g, l)? {
                        Verdict::Provable(_) => Some(true),
                        _ => Some(false),
                    })
                })?),
                LogicArg::Kc => interderivable(&p1, &p2, &limits, |ps, g, l| {
                    Ok(match kc_decide(ps, g, bound, l)? {
                        Verdict::Provable(_) => Some(true),
                        Verdict::Refuted(_) => Some(false),
                        Verdict::Unknown { .. } => None,
                    })
                })?,
            };
            if common.json {
                let report = classify(&p1, &p2, &limits)?;
                print_json(&report);
            } else {
                match verdict {
                    Some(true) => println!("equivalent"),
                    Some(false) => println!("not equivalent"),
                    None => println!("unknown"),
                }
            }
            Ok(match verdict {
                Some(true) => EXIT_YES,
                Some(false) => EXIT_NO,
                None => EXIT_UNKNOWN,
            })
        }

        Command::StrongEquiv {
            first,
            second,
            oracle,
            common,
        } => {
            let limits = limits_for(&common);
            let p1 = load_program(&first)?;
            let p2 = load_program(&second)?;
            let (equivalent, model) = strongly_equivalent(&p1, &p2, &limits)?;
            let extension = if oracle {
                let u: AtomSet = p1.universe().union(p2.universe()).cloned().collect();
                let (oracle_eq, ext) = strong_equiv_oracle(&p1, &p2, &u, &limits)?;
                if oracle_eq != equivalent {
                    return Err(Failure::Error(
                        "internal disagreement between the two decision routes".into(),
                    ));
                }
                ext
            } else {
                None
            };
            if common.json {
                #[derive(Serialize)]
                struct StrongEquivJson<'a> {
                    strongly_equivalent: bool,
                    separating_ht_model: &'a Option<selp::HTModel>,
                    separating_extension: &'a Option<Program>,
                }
                print_json(&StrongEquivJson {
                    strongly_equivalent: equivalent,
                    separating_ht_model: &model,
                    separating_extension: &extension,
                });
            } else if equivalent {
                println!("strongly equivalent");
            } else {
                println!("not strongly equivalent");
                if let Some(m) = &model {
                    println!("separating model: {m}");
                }
                if let Some(ext) = &extension {
                    println!("separating extension:");
                    print!("{ext}");
                }
            }
            Ok(if equivalent { EXIT_YES } else { EXIT_NO })
        }

        Command::Expressibility {
            file,
            fragment,
            depth,
            common,
        } => {
            let limits = limits_for(&common);
            let target = load_program(&file)?;
            let frag = parse_fragment(&fragment)?;
            let found = selp::equivalence::expressibility_search(&target, &frag, depth, &limits)?;
            if common.json {
                print_json(&found);
            } else {
                match &found {
                    Some(p) => print!("{p}"),
                    None => println!("none-found"),
                }
            }
            Ok(if found.is_some() { EXIT_YES } else { EXIT_NO })
        }

        Command::Countermodel {
            goal,
            premises,
            single_top,
            max_worlds,
            common,
        } => {
            let limits = limits_for(&common);
            let goal = parse_goal(&goal)?;
            let premises = load_premises(&premises)?;
            match countermodel_search(&premises, &goal, single_top, max_worlds, &limits)? {
                SearchOutcome::Found { model, witness } => {
                    if common.json {
                        print_json(&FlatCountermodel {
                            model: &model,
                            witness,
                        });
                    } else {
                        println!("{model}");
                        println!("witness: world {witness}");
                    }
                    Ok(EXIT_YES)
                }
                SearchOutcome::NotFound { searched_worlds } => {
                    if common.json {
                        print_json(&serde_json::json!({
                            "not_found_within": searched_worlds
                        }));
                    } else {
                        println!("no countermodel with at most {searched_worlds} worlds");
                    }
                    Ok(EXIT_UNKNOWN)
                }
            }
        }

        Command::Prove {
            goal,
            premises,
            logic,
            bound,
            common,
        } => {
            let limits = limits_for(&common);
            let goal = parse_goal(&goal)?;
            let premises = load_premises(&premises)?;
            let verdict = match logic {
                LogicArg::Ipl => ipl_decide(&premises, &goal, &limits)?,
                LogicArg::Kc => kc_decide(&premises, &goal, bound, &limits)?,
                LogicArg::G3 => g3_verdict(&premises, &goal, &limits)?,
                LogicArg::Cpl => {
                    return Err(Failure::Error(
                        "prove supports --logic ipl, kc, or g3".into(),
                    ))
                }
            };
            if common.json {
                print_json(&verdict);
            } else {
                match &verdict {
                    Verdict::Provable(d) => {
                        println!("provable");
                        match d {
                            selp::prover::Derivation::Proof(tree) => print!("{tree}"),
                            selp::prover::Derivation::HtValidity { models_checked } => {
                                println!("(valid in all {models_checked} here-and-there models)")
                            }
                        }
                    }
                    Verdict::Refuted(cm) => {
                        println!("refuted");
                        println!("{}", cm.model);
                        println!("witness: world {}", cm.witness);
                    }
                    Verdict::Unknown { bound } => {
                        println!("unknown (no countermodel with at most {bound} worlds)");
                    }
                }
            }
            Ok(match verdict {
                Verdict::Provable(_) => EXIT_YES,
                Verdict::Refuted(_) => EXIT_NO,
                Verdict::Unknown { .. } => EXIT_UNKNOWN,
            })
        }

        Command::CheckPaper { seed, json } => {
            let report = run_suite(seed);
            if json {
                print_json(&report);
            } else {
                for check in &report.checks {
                    let status = if check.passed { "PASS" } else { "FAIL" };
                    println!(
                        "[{status}] {} ({}) — {} ({} ms)",
                        check.name, check.anchor, check.detail, check.millis
                    );
                }
                let total = report.total_time();
                println!(
                    "{} checks, {} failed, {:.1}s",
                    report.checks.len(),
                    report.checks.iter().filter(|c| !c.passed).count(),
                    total.as_secs_f64()
                );
            }
            Ok(if report.all_passed() { EXIT_YES } else { EXIT_NO })
        }
    }
}

/// Equivalence as mutual derivability of every rule, for the proof-based
/// logics. `None` bubbles up when any single derivability query is
/// unknown.
fn interderivable(
    p1: &Program,
    p2: &Program,
    limits: &Limits,
    decide: impl Fn(&[Formula], &Formula, &Limits) -> Result<Option<bool>, selp::Error>,
) -> Result<Option<bool>, Failure> {
    for (from, to) in [(p1, p2), (p2, p1)] {
        let premises: Vec<Formula> = from.rules().map(|r| r.formula()).collect();
        for rule in to.rules() {
            match decide(&premises, &rule.formula(), limits)? {
                Some(true) => {}
                other => return Ok(other),
            }
        }
    }
    Ok(Some(true))
}

/// Entailment in the three-valued logic, with a two-world countermodel on
/// failure.
fn g3_verdict(premises: &[Formula], goal: &Formula, limits: &Limits) -> Result<Verdict, Failure> {
    if g3_entails(premises, goal, limits)? {
        let mut atoms = goal.atom_set();
        for p in premises {
            p.atoms_into(&mut atoms);
        }
        Ok(Verdict::Provable(selp::prover::Derivation::HtValidity {
            models_checked: 3usize.pow(atoms.len() as u32),
        }))
    } else {
        let m = g3_countermodel(premises, goal, limits)?
            .expect("a countermodel exists when entailment fails");
        Ok(Verdict::Refuted(selp::prover::Countermodel {
            model: m.to_kripke(),
            witness: 0,
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fragment_parsing() {
        let frag = parse_fragment("and,not").unwrap();
        assert!(frag.and && frag.not && frag.rule_form);
        assert!(!frag.or && !frag.imp);
        assert!(parse_fragment("nope").is_err());
    }

    #[test]
    fn atom_list_parsing() {
        let set = parse_atom_list("p, q").unwrap();
        assert_eq!(set.len(), 2);
        assert!(parse_atom_list("").unwrap().is_empty());
        assert!(parse_atom_list("Q").is_err());
    }
}
