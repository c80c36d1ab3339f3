//! Thin command-line front end over the library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use magiclab::classify;
use magiclab::construct;
use magiclab::enumerate::{self, EnumOptions};
use magiclab::io;
use magiclab::linalg::det_exact;
use magiclab::perms::{self, PermMatrix};
use magiclab::spectral::{self, format_complex};
use magiclab::transforms;
use magiclab::verify::{self, VerifyContext};
use magiclab::{Error, IntMatrix, Square};

#[derive(Parser)]
#[command(name = "magiclab", version, about = "Exact magic-square enumeration, classification and spectra")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Catalog {
    All,
    Bisymmetric,
    Rot90,
    Mcpm,
    Involutions,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand)]
enum Verb {
    /// Magic constant, flags, Trigg group, Dudeney label and witnesses.
    Classify {
        /// Matrix file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Natural magic squares of order 3 or 4 as CSV (order 5 counts only).
    Enumerate {
        #[arg(long)]
        order: usize,
        /// CSV destination; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// One representative per rotation/reflection class.
        #[arg(long)]
        orbits: bool,
        /// Allows the order-5 streaming count.
        #[arg(long)]
        i_know_this_is_huge: bool,
    },
    /// Members of the permutation family of a magic square.
    Family {
        input: PathBuf,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Permutation catalogs with rank, one-line form and symmetry flags.
    Perms {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "all")]
        kind: Catalog,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Eigenvalues, determinant, rank and negation pairing.
    Spectrum {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = spectral::DEFAULT_TOL)]
        tol: f64,
    },
    /// Random square satisfying a type A or type B relation.
    Make {
        #[arg(long = "type", value_enum)]
        kind: Kind,
        #[arg(long)]
        order: usize,
        /// Standard rank or one-line form such as `(4 3 2 1)`.
        #[arg(long)]
        mcpm: String,
        #[arg(long)]
        mu: BigInt,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Side of the type B relation.
        #[arg(long, value_enum, default_value = "left")]
        side: SideArg,
    },
    /// Pairing diagram as a DOT graph.
    Diagram { input: PathBuf },
    /// Reference checks over the shipped fixtures.
    Verify {
        /// Print check names without running them.
        #[arg(long)]
        list: bool,
        /// Directory whose `<name>.txt` files override the embedded fixtures.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Run only the named checks.
        #[arg(long = "check")]
        checks: Vec<String>,
        /// Cases per randomised property suite.
        #[arg(long, default_value_t = 10_000)]
        cases: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("MAGICLAB_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match run(cli.verb) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
    }
}

fn read_squares(path: &Path) -> Result<Vec<IntMatrix>, Failure> {
    let text = io::read_input(path)?;
    let ms = io::parse_int_matrices(&text)?;
    if ms.is_empty() {
        return Err(Failure::Usage("no matrix in input".into()));
    }
    Ok(ms)
}

fn read_magic(path: &Path) -> Result<Square, Failure> {
    let m = read_squares(path)?.remove(0);
    Ok(Square::magic(m)?)
}

fn only(format: Format, allowed: &[Format], verb: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{verb} does not support this format")))
    }
}

fn json_one_or_many<T: Serialize>(items: &[T]) -> String {
    let mut s = if items.len() == 1 { io::to_json(&items[0]) } else { io::to_json(&items) };
    s.push('\n');
    s
}

fn run(verb: Verb) -> Outcome {
    match verb {
        Verb::Classify { input, format } => classify_cmd(&input, format),
        Verb::Enumerate { order, out, orbits, i_know_this_is_huge } => enumerate_cmd(order, out, orbits, i_know_this_is_huge),
        Verb::Family { input, count_only, format } => family_cmd(&input, count_only, format),
        Verb::Perms { order, kind, format } => perms_cmd(order, kind, format),
        Verb::Spectrum { input, json, tol } => spectrum_cmd(&input, json, tol),
        Verb::Make { kind, order, mcpm, mu, seed, side } => make_cmd(kind, order, &mcpm, &mu, seed, side),
        Verb::Diagram { input } => {
            let s = read_magic(&input)?;
            let d = classify::dudeney_diagram(&s)?;
            Ok((d.to_dot(&s), true))
        }
        Verb::Verify { list, fixtures, checks, cases, seed, json } => verify_cmd(list, fixtures, checks, cases, seed, json),
    }
}

fn classify_cmd(input: &Path, format: Format) -> Outcome {
    only(format, &[Format::Text, Format::Json], "classify")?;
    let mut reports = Vec::new();
    for m in read_squares(input)? {
        reports.push(classify::classify(&Square::magic(m)?)?);
    }
    if format == Format::Json {
        return Ok((json_one_or_many(&reports), true));
    }
    let mut out = String::new();
    for r in &reports {
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        writeln!(out, "order {}", r.order).unwrap();
        writeln!(out, "mu {}", r.mu).unwrap();
        writeln!(out, "natural {}", r.natural).unwrap();
        writeln!(out, "pandiagonal {}", r.pandiagonal).unwrap();
        writeln!(out, "semipandiagonal {:?}", r.semipandiagonal).unwrap();
        writeln!(out, "trigg {}", opt(r.trigg_group.map(|g| g.to_string()))).unwrap();
        writeln!(out, "dudeney {}", opt(r.dudeney_label.map(|l| l.to_string()))).unwrap();
        for w in &r.witnesses {
            let partner = w.partner.as_ref().map(|q| format!(" with {q}")).unwrap_or_default();
            writeln!(out, "witness {:?} {}{partner} on {}", w.relation, w.perm, w.image).unwrap();
        }
        out.push('\n');
    }
    Ok((out, true))
}

fn enumerate_cmd(order: usize, out: Option<PathBuf>, orbits: bool, huge: bool) -> Outcome {
    let opts = EnumOptions::default();
    if order == 5 {
        if !huge {
            return Err(Failure::Usage("order 5 needs --i-know-this-is-huge".into()));
        }
        return Ok((format!("{}\n", enumerate::count_natural(5, opts)?), true));
    }
    if !(3..=4).contains(&order) {
        return Err(Failure::Usage("enumerate supports orders 3 and 4".into()));
    }
    let census = enumerate::enumerate_natural_with(order, opts)?;
    let squares: Vec<Square> = if orbits {
        enumerate::orbit_reduce(&census.squares).into_iter().map(Square::new).collect()
    } else {
        census.squares
    };
    let rows: Vec<Vec<String>> = squares
        .par_iter()
        .map(|s| {
            let c = classify::classify(s).ok();
            let label = c.as_ref().and_then(|c| c.dudeney_label).map(|l| l.to_string()).unwrap_or_default();
            let group = c.as_ref().and_then(|c| c.trigg_group).map(|g| g.to_string()).unwrap_or_default();
            let mu = s.mu().map(ToString::to_string).unwrap_or_default();
            vec![io::entry_string(s.matrix()), mu, label, group, det_exact(s.matrix()).to_string()]
        })
        .collect();
    let header = ["entries", "mu", "dudeney", "trigg", "det"];
    match out {
        Some(path) => {
            let f = std::fs::File::create(path).map_err(Error::from)?;
            io::write_csv(f, &header, &rows)?;
            Ok((String::new(), true))
        }
        None => {
            let mut buf = Vec::new();
            io::write_csv(&mut buf, &header, &rows)?;
            Ok((String::from_utf8(buf).expect("csv is utf-8"), true))
        }
    }
}

fn family_cmd(input: &Path, count_only: bool, format: Format) -> Outcome {
    only(format, &[Format::Text, Format::Json], "family")?;
    let fam = transforms::family(&read_magic(input)?)?;
    if count_only {
        return Ok((format!("{}\n", fam.len()), true));
    }
    let ms: Vec<IntMatrix> = fam.members.iter().map(|s| s.matrix().clone()).collect();
    if format == Format::Json {
        let rows: Vec<Vec<Vec<String>>> = ms.iter().map(matrix_cells).collect();
        return Ok((io::to_json(&rows) + "\n", true));
    }
    Ok((io::format_blocks(&ms), true))
}

fn matrix_cells(m: &IntMatrix) -> Vec<Vec<String>> {
    m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

#[derive(Serialize)]
struct PermRow {
    rank: String,
    one_line: String,
    flags: String,
}

fn perms_cmd(order: usize, kind: Catalog, format: Format) -> Outcome {
    only(format, &[Format::Text, Format::Json, Format::Csv], "perms")?;
    if order == 0 {
        return Err(Failure::Usage("order must be positive".into()));
    }
    let list = match kind {
        Catalog::All if order > 9 => return Err(Failure::Usage("the full catalog is limited to order 9".into())),
        Catalog::All => perms::all_permutations(order),
        Catalog::Bisymmetric => perms::gen_bisymmetric(order),
        Catalog::Rot90 => perms::gen_rot90(order),
        Catalog::Mcpm => perms::gen_mcpm(order),
        Catalog::Involutions => perms::gen_involutions(order),
    };
    let rows: Vec<PermRow> = list
        .iter()
        .map(|p| PermRow {
            rank: p.rank().to_string(),
            one_line: p.to_string(),
            flags: perms::classify_symmetry(p).to_string(),
        })
        .collect();
    let out = match format {
        Format::Json => io::to_json(&rows) + "\n",
        Format::Text => rows.iter().map(|r| format!("{} {} {}\n", r.rank, r.one_line, r.flags)).collect(),
        _ => {
            let cells: Vec<Vec<String>> =
                rows.into_iter().map(|r| vec![r.rank, r.one_line, r.flags]).collect();
            let mut buf = Vec::new();
            io::write_csv(&mut buf, &["rank", "one-line", "flags"], &cells)?;
            String::from_utf8(buf).expect("csv is utf-8")
        }
    };
    Ok((out, true))
}

fn spectrum_cmd(input: &Path, json: bool, tol: f64) -> Outcome {
    let s = read_magic(input)?;
    let r = spectral::eigen_spectrum(&s, tol)?;
    if json {
        return Ok((io::to_json(&r) + "\n", true));
    }
    let mut out = String::new();
    writeln!(out, "mu {}", r.mu).unwrap();
    writeln!(out, "det {}", r.det).unwrap();
    writeln!(out, "rank {}", r.rank).unwrap();
    writeln!(out, "eigenvalues").unwrap();
    for e in &r.eigenvalues {
        writeln!(out, "  {}", format_complex(e.0, 4)).unwrap();
    }
    if let Some(p) = &r.pairing {
        writeln!(out, "pairing under {} (structural {}, char poly symmetric {})", p.witness, p.structural, p.char_poly_symmetric)
            .unwrap();
        for pair in &p.pairs {
            let res = pair.transport_residual.map(|x| format!("{x:.1e}")).unwrap_or_else(|| "-".into());
            writeln!(out, "  {:>22}  {:>22}  {res}", format_complex(pair.lambda.0, 4), format_complex(pair.partner.0, 4))
                .unwrap();
        }
        for u in &p.unmatched {
            writeln!(out, "  unmatched {}", format_complex(u.0, 4)).unwrap();
        }
    }
    Ok((out, true))
}

fn make_cmd(kind: Kind, order: usize, mcpm: &str, mu: &BigInt, seed: u64, side: SideArg) -> Outcome {
    let p: PermMatrix = match mcpm.trim().parse::<u128>() {
        Ok(rank) => PermMatrix::from_rank(order, rank)?,
        Err(_) => mcpm.parse()?,
    };
    if p.order() != order {
        return Err(Failure::Usage(format!("--mcpm has order {}, expected {order}", p.order())));
    }
    let s = match (kind, side) {
        (Kind::A, _) => construct::random_type_a(order, &p, mu, seed)?,
        (Kind::B, SideArg::Left) => construct::random_type_b(order, &p, construct::Side::Left, mu, seed)?,
        (Kind::B, SideArg::Right) => construct::random_type_b(order, &p, construct::Side::Right, mu, seed)?,
    };
    Ok((s.matrix().to_string(), true))
}

fn verify_cmd(list: bool, fixtures: Option<PathBuf>, checks: Vec<String>, cases: usize, seed: Option<u64>, json: bool) -> Outcome {
    if list {
        let out = verify::list().into_iter().map(|(c, name, desc)| format!("{c:>2} {name:<22} {desc}\n")).collect();
        return Ok((out, true));
    }
    let mut selected = Vec::new();
    for name in &checks {
        selected.push(verify::find(name).ok_or_else(|| Failure::Usage(format!("unknown check `{name}`")))?);
    }
    if selected.is_empty() {
        selected = verify::CHECKS.iter().collect();
    }
    let mut ctx = VerifyContext::new(fixtures.map(magiclab::fixtures::FixtureSet::with_dir).unwrap_or_default());
    ctx.cases = cases;
    if let Some(s) = seed {
        ctx.seed = s;
    }
    let results: Vec<_> = selected.iter().map(|c| c.run(&ctx)).collect();
    let ok = results.iter().all(|r| r.passed);
    if json {
        return Ok((io::to_json(&results) + "\n", ok));
    }
    let out = results
        .iter()
        .map(|r| format!("{} {:>2} {}: {}\n", if r.passed { "PASS" } else { "FAIL" }, r.criterion, r.name, r.detail))
        .collect();
    Ok((out, ok))
}
