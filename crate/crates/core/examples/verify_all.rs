//! Runs the reference check catalog and prints one line per check.

use magiclab::verify::{self, VerifyContext};

fn main() {
    let ctx = VerifyContext::default();
    let mut failed = 0;
    for c in verify::CHECKS {
        let r = c.run(&ctx);
        failed += usize::from(!r.passed);
        println!("{} {:>2} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.criterion, r.name, r.detail);
    }
    println!("{failed} failing");
}
