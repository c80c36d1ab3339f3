//! Pairing diagram of a type A square as DOT, ready for `dot -Tsvg`.

use magiclab::classify;
use magiclab::fixtures;
use magiclab::Square;

fn main() -> magiclab::Result<()> {
    let s = match std::env::args().nth(1).as_deref() {
        Some("order8") => Square::magic(fixtures::type_a_order8())?,
        _ => Square::magic(fixtures::durer())?,
    };
    let d = classify::dudeney_diagram(&s)?;
    eprintln!("{} pairs summing to {}", d.pairs.len(), d.pair_sum);
    print!("{}", d.to_dot(&s));
    Ok(())
}
