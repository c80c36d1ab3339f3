//! Reference squares and permutations shipped with the crate.
//!
//! Every fixture is a text file under `fixtures/` and is compiled in. A
//! [`FixtureSet`] can point at a directory instead, in which case files found
//! there override the embedded copies (handy for fault injection).

use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::io;
use crate::linalg::{IntMatrix, RatMatrix};
use crate::perms::PermMatrix;

macro_rules! embedded {
    ($($name:literal),* $(,)?) => {
        /// Names of every embedded fixture.
        pub const NAMES: &[&str] = &[$($name),*];

        fn embedded_text(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../fixtures/", $name, ".txt"))),)*
                _ => None,
            }
        }
    };
}

embedded!(
    "bisymmetric_order4",
    "conversion_image_order6",
    "conversion_pair_order6",
    "conversion_source_order6",
    "conversion_swap_order6",
    "durer",
    "durer_family_displays",
    "durer_images",
    "eigenvector_pair_order8",
    "gardner_factors",
    "gardner_product",
    "half_shift_order6",
    "mcpm_order6",
    "mcpm_order8",
    "pandiagonal_order4",
    "rot90_order4",
    "rot90_order8",
    "semipandiagonal_order6",
    "shifts_order4",
    "spectrum_type_a_order8",
    "spectrum_type_b_order8",
    "type_a_order6",
    "type_a_order8",
    "type_b_order6",
    "type_b_order8",
    "type_i_order4",
    "z_type_a_order8",
);

/// Fixture source: embedded data, optionally overridden from a directory.
#[derive(Clone, Debug, Default)]
pub struct FixtureSet {
    dir: Option<PathBuf>,
}

impl FixtureSet {
    pub fn embedded() -> Self {
        Self { dir: None }
    }

    pub fn with_dir(dir: impl AsRef<Path>) -> Self {
        Self { dir: Some(dir.as_ref().to_path_buf()) }
    }

    pub fn text(&self, name: &str) -> Result<String> {
        if let Some(dir) = &self.dir {
            let path = dir.join(format!("{name}.txt"));
            if path.exists() {
                return Ok(std::fs::read_to_string(path)?);
            }
        }
        embedded_text(name).map(str::to_owned).ok_or_else(|| Error::MissingFixture(name.into()))
    }

    pub fn matrices(&self, name: &str) -> Result<Vec<IntMatrix>> {
        io::parse_int_matrices(&self.text(name)?)
    }

    pub fn matrix(&self, name: &str) -> Result<IntMatrix> {
        io::parse_int_matrix(&self.text(name)?)
    }

    pub fn rat_matrix(&self, name: &str) -> Result<RatMatrix> {
        let mut all = io::parse_rat_matrices(&self.text(name)?)?;
        all.pop().ok_or_else(|| Error::MissingFixture(name.into()))
    }

    /// Permutation fixtures are stored as 0/1 matrices.
    pub fn perms(&self, name: &str) -> Result<Vec<PermMatrix>> {
        self.matrices(name)?.iter().map(PermMatrix::from_matrix).collect()
    }

    pub fn perm(&self, name: &str) -> Result<PermMatrix> {
        PermMatrix::from_matrix(&self.matrix(name)?)
    }

    /// A list of complex numbers stored as `re im` rows.
    pub fn spectrum(&self, name: &str) -> Result<Vec<Complex64>> {
        io::parse_float_rows(&self.text(name)?)?
            .into_iter()
            .map(|row| match row.as_slice() {
                [re, im] => Ok(Complex64::new(*re, *im)),
                _ => Err(Error::Parse { line: 0, msg: format!("{name}: expected `re im` rows") }),
            })
            .collect()
    }

    /// `(λ, x)` pairs stored as alternating eigenvalue and vector rows.
    pub fn eigenpairs(&self, name: &str) -> Result<Vec<(f64, Vec<f64>)>> {
        let rows = io::parse_float_rows(&self.text(name)?)?;
        rows.chunks(2)
            .map(|c| match c {
                [l, x] if l.len() == 1 => Ok((l[0], x.clone())),
                _ => Err(Error::Parse { line: 0, msg: format!("{name}: malformed eigenpair") }),
            })
            .collect()
    }
}

fn load(name: &str) -> IntMatrix {
    FixtureSet::embedded().matrix(name).expect("embedded fixture parses")
}

fn load_perm(name: &str) -> PermMatrix {
    FixtureSet::embedded().perm(name).expect("embedded fixture parses")
}

/// Dürer's order-4 square.
pub fn durer() -> IntMatrix {
    load("durer")
}

/// Natural order-4 square that is both pandiagonal and type I.
pub fn type_i_order4() -> IntMatrix {
    load("type_i_order4")
}

pub fn pandiagonal_order4() -> IntMatrix {
    load("pandiagonal_order4")
}

/// Order 6, `μ = 120`, type A for [`mcpm_order6`].
pub fn type_a_order6() -> IntMatrix {
    load("type_a_order6")
}

/// Order 6, `μ = 120`, type B (right) for [`mcpm_order6`].
pub fn type_b_order6() -> IntMatrix {
    load("type_b_order6")
}

pub fn semipandiagonal_order6() -> IntMatrix {
    load("semipandiagonal_order6")
}

/// Order 8, `μ = 260`, type A for [`mcpm_order8`].
pub fn type_a_order8() -> IntMatrix {
    load("type_a_order8")
}

/// Order 8, `μ = 260`, type B (left) for `J`.
pub fn type_b_order8() -> IntMatrix {
    load("type_b_order8")
}

/// Type A square for the first permutation of [`conversion_pair_order6`].
pub fn conversion_source_order6() -> IntMatrix {
    load("conversion_source_order6")
}

/// The source square conjugated by [`conversion_swap_order6`].
pub fn conversion_image_order6() -> IntMatrix {
    load("conversion_image_order6")
}

pub fn z_type_a_order8() -> RatMatrix {
    FixtureSet::embedded().rat_matrix("z_type_a_order8").expect("embedded fixture parses")
}

pub fn mcpm_order6() -> PermMatrix {
    load_perm("mcpm_order6")
}

pub fn mcpm_order8() -> PermMatrix {
    load_perm("mcpm_order8")
}

pub fn rot90_order4() -> PermMatrix {
    load_perm("rot90_order4")
}

pub fn rot90_order8() -> PermMatrix {
    load_perm("rot90_order8")
}

pub fn half_shift_order6() -> PermMatrix {
    load_perm("half_shift_order6")
}

/// `(P, P')`, two order-6 magic classifying permutations.
pub fn conversion_pair_order6() -> (PermMatrix, PermMatrix) {
    let mut v = FixtureSet::embedded().perms("conversion_pair_order6").expect("embedded fixture parses");
    let second = v.pop().expect("two blocks");
    (v.pop().expect("two blocks"), second)
}

/// The single swap relabeling one matching of the pair onto the other.
pub fn conversion_swap_order6() -> PermMatrix {
    load_perm("conversion_swap_order6")
}

/// `K = (3 4 1 2)`.
pub fn k_order4() -> PermMatrix {
    "(3 4 1 2)".parse().expect("valid")
}

/// `L = (2 1 4 3)`.
pub fn l_order4() -> PermMatrix {
    "(2 1 4 3)".parse().expect("valid")
}

/// `(1 3 2 4)`, the bisymmetric partner in the type XI relation.
pub fn p3_order4() -> PermMatrix {
    "(1 3 2 4)".parse().expect("valid")
}

/// `(1 2 4 3)`, symmetric but not bisymmetric, used in the type XII relation.
pub fn p2_order4() -> PermMatrix {
    "(1 2 4 3)".parse().expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        let set = FixtureSet::embedded();
        for name in NAMES {
            let text = set.text(name).unwrap();
            if name.starts_with("spectrum") {
                assert_eq!(set.spectrum(name).unwrap().len(), 8);
            } else if name.starts_with("eigenvector") {
                assert_eq!(set.eigenpairs(name).unwrap().len(), 2);
            } else {
                assert!(!io::parse_rat_matrices(&text).unwrap().is_empty(), "{name}");
            }
        }
    }

    #[test]
    fn permutation_fixtures() {
        assert_eq!(rot90_order4().to_string(), "(2 4 1 3)");
        assert_eq!(mcpm_order6().to_string(), "(4 3 2 1 6 5)");
        assert_eq!(mcpm_order8().to_string(), "(2 1 8 6 7 4 5 3)");
        assert_eq!(rot90_order8().to_string(), "(3 4 8 7 2 1 5 6)");
        assert_eq!(half_shift_order6().to_string(), "(4 5 6 1 2 3)");
        let (p, p2) = conversion_pair_order6();
        assert_eq!(p.to_string(), "(2 1 5 6 3 4)");
        assert_eq!(p2.to_string(), "(4 6 5 1 3 2)");
        assert_eq!(conversion_swap_order6().to_string(), "(1 4 3 2 5 6)");
    }

    #[test]
    fn missing_fixture() {
        assert!(matches!(FixtureSet::embedded().text("nope"), Err(Error::MissingFixture(_))));
    }

    #[test]
    fn directory_override() {
        let dir = std::env::temp_dir().join(format!("magiclab-fixture-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("durer.txt"), "2\n1 2\n3 4\n").unwrap();
        let set = FixtureSet::with_dir(&dir);
        assert_eq!(set.matrix("durer").unwrap().order(), 2);
        assert_eq!(set.matrix("type_a_order6").unwrap().order(), 6);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
