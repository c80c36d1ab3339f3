//! Acceptance run: one PASS/FAIL line per criterion, executed sequentially so
//! the timing budgets are not skewed by concurrent tests.
//!
//! Criterion 11 is known red. The transformation-graph edges from VI'' under
//! the A2 and A3 sets do not hold on the census: every VI'' square stays
//! magic only under A1 and A4. The run fails if any other
//! criterion fails or if the red one fails in any other shape.

use std::process::ExitCode;

use magiclab::classify;
use magiclab::verify::{self, VerifyContext};

const KNOWN_RED: u8 = 11;
const KNOWN_RED_EDGES: [(&str, usize); 2] = [("VI'' -A2->", 6656), ("VI'' -A3->", 6656)];

fn main() -> ExitCode {
    let ctx = VerifyContext::default();
    let mut unexpected = Vec::new();
    for check in verify::CHECKS {
        let r = check.run(&ctx);
        println!("{} criterion {:>2} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.criterion, r.name, r.detail);
        if !r.passed && r.criterion != KNOWN_RED {
            unexpected.push(r.name);
        }
        if r.passed && r.criterion == KNOWN_RED {
            unexpected.push("transformation_graph passed; update the known-red expectation");
        }
    }

    let census = ctx.census4().expect("order-4 census");
    let report = classify::fig2_graph_check(&census.squares).expect("graph check runs");
    let shape: Vec<(&str, usize)> = report.failed_edges.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    if shape != KNOWN_RED_EDGES {
        unexpected.push("transformation_graph failure shape changed");
    }
    println!(
        "note criterion 11: red on {} checks, all from VI'' through A2/A3; every other stated edge holds",
        report.failures.len()
    );
    if let Some(first) = report.failures.first() {
        println!("note criterion 11: first failure {first}");
    }

    if unexpected.is_empty() {
        println!("acceptance: 13 PASS, 1 known FAIL (criterion 11)");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results {unexpected:?}");
        ExitCode::FAILURE
    }
}
