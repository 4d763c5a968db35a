//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Two criteria fail as stated, for mathematical reasons, and are pinned to
//! their exact failure signatures:
//!
//! * criterion 1: N_k(2k+1) = K_k ∨ K̄_{k+1} has the Hamiltonian path
//!   x y x y … x, so "N_k(n) has no Hamiltonian path" needs n ≥ 2k + 2;
//! * criterion 6: the single Z–Z deletion of M_2(8) has certified spectral
//!   radius above 5 = n − k − 1, so the theorem regime for (M, 2) starts at
//!   n = 9, not 8 (the gap to the theorem bound 10 is 1).
//!
//! The run exits nonzero if any other criterion fails, or if a pinned
//! criterion passes or fails differently.

use std::process::ExitCode;

use spectral_ham::suite::{Suite, DEFAULT_SEED};

const EXPECTED_FAILURES: [(u8, &str); 2] = [
    (
        1,
        r#"72 graphs, 3 failures ["N_1(3) has a Hamiltonian path", "N_2(5) has a Hamiltonian path", "N_3(7) has a Hamiltonian path"]"#,
    ),
    (6, "M n=8 is Proposition, expected Theorem"),
];

fn main() -> ExitCode {
    let seed = std::env::var("SPECTRAL_HAM_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    let outcomes = Suite::new(seed).run_all();
    let mut unexpected = 0;
    for o in &outcomes {
        println!("{}", o.line());
        let pinned = EXPECTED_FAILURES.iter().find(|(id, _)| *id == o.id);
        match pinned {
            Some((_, signature)) if o.passed || !o.detail.contains(signature) => {
                println!("criterion {}: outcome changed from the recorded failure", o.id);
                unexpected += 1;
            }
            Some(_) => println!("criterion {}: recorded failure, see module docs", o.id),
            None if !o.passed => unexpected += 1,
            None => {}
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("acceptance: {passed}/{} criteria pass (seed {seed}); unexpected outcomes: {unexpected}", outcomes.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
