use std::time::Instant;

fn main() {
    let checks: Vec<(&str, Box<dyn Fn() -> Result<String, String>>)> = vec![
        (
            "answer_set_examples",
            Box::new(selp::suite::check_answer_set_examples),
        ),
        (
            "method_agreement(100)",
            Box::new(|| selp::suite::check_method_agreement(0x0e15, 100)),
        ),
        (
            "oracle_agreement(50)",
            Box::new(|| selp::suite::check_oracle_agreement(0x0e15, 50)),
        ),
        (
            "equivalence_pairs",
            Box::new(selp::suite::check_equivalence_pairs),
        ),
        ("separations", Box::new(selp::suite::check_separations)),
        (
            "disjunction_inexpressible",
            Box::new(selp::suite::check_disjunction_inexpressible),
        ),
        (
            "diamond_property",
            Box::new(selp::suite::check_diamond_property),
        ),
        (
            "negfree_forcing",
            Box::new(selp::suite::check_negfree_forcing_matches_classical),
        ),
        (
            "rule_forcing",
            Box::new(selp::suite::check_rule_forcing_pairwise_classical),
        ),
        (
            "reduct_invariance",
            Box::new(selp::suite::check_reduct_forcing_invariance),
        ),
        ("persistence", Box::new(selp::suite::check_persistence)),
        ("prover_results", Box::new(selp::suite::check_prover_results)),
        (
            "matrix_kripke",
            Box::new(selp::suite::check_matrix_kripke_agreement),
        ),
        ("axioms", Box::new(selp::suite::check_axioms_matrix_valid)),
        (
            "horn(100)",
            Box::new(|| selp::suite::check_horn_intersection(0x0e15, 100)),
        ),
        (
            "kc_matches_g3(20)",
            Box::new(|| selp::suite::check_kc_matches_g3(0x0e15, 20)),
        ),
        (
            "soundness_chain(10)",
            Box::new(|| selp::suite::check_soundness_chain(0x0e15, 10)),
        ),
    ];
    for (name, run) in checks {
        let t = Instant::now();
        let r = run();
        let status = match &r {
            Ok(d) => format!("OK {d}"),
            Err(e) => format!("FAIL {e}"),
        };
        eprintln!("{name}: {:?} -> {status}", t.elapsed());
    }
}
