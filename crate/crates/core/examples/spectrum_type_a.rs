//! Spectrum of the order-8 type A square and eigenvector transport under
//! its witness.

use magiclab::fixtures;
use magiclab::Square;
use magiclab::spectral::{self, format_complex, EigenSide};

fn main() -> magiclab::Result<()> {
    let a = Square::magic(fixtures::type_a_order8())?;
    let p = fixtures::mcpm_order8();
    let report = spectral::eigen_spectrum(&a, spectral::DEFAULT_TOL)?;
    println!("mu {} det {} rank {}", report.mu, report.det, report.rank);
    for e in &report.eigenvalues {
        println!("  {}", format_complex(e.0, 4));
    }
    println!("char poly {}", report.char_poly);

    // largest real eigenvalue below the magic constant
    let lambda = report
        .eigenvalues
        .iter()
        .filter(|e| e.0.im.abs() < 1e-9 && e.0.re < 259.0)
        .map(|e| e.0.re)
        .fold(f64::MIN, f64::max);
    for side in [EigenSide::Right, EigenSide::Left] {
        let t = spectral::eigenvector_transport(&a, &p, lambda, side)?;
        println!("{side:?} eigenvector for {}, partner {}, residual {:.1e}", format_complex(t.lambda.0, 4), format_complex(t.partner.0, 4), t.residual);
        println!("  x  = {:?}", t.x.iter().map(|v| format!("{v:.3}")).collect::<Vec<_>>());
        println!("  Px = {:?}", t.partner_x.iter().map(|v| format!("{v:.3}")).collect::<Vec<_>>());
    }
    Ok(())
}
