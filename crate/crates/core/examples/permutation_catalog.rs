//! Bisymmetric, 90°-symmetric and magic classifying permutations by order.

use magiclab::perms;
use magiclab::transforms;

fn main() {
    println!("{:>2} {:>6} {:>6} {:>6} {:>6}", "n", "B(n)", "R(n)", "rho", "C(n)");
    for n in 2..=10 {
        let c = if n % 2 == 0 { perms::count_mcpm(n).to_string() } else { "-".into() };
        println!(
            "{n:>2} {:>6} {:>6} {:>6} {c:>6}",
            perms::count_bisymmetric(n),
            perms::count_rot90(n),
            transforms::rho(n)
        );
    }
    println!();
    for p in perms::gen_mcpm(4) {
        println!("{p} rank {} [{}]", p.rank(), perms::classify_symmetry(&p));
    }
}
