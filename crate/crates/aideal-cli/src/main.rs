//! Command-line front end: Gröbner bases of left ideals in the quantum
//! plane, A-bases of knots from peripheral generators, the t = -1 classical
//! bridge, orthogonality checks against colored bracket sequences, and the
//! bounded annihilator search.
//!
//! Data goes to stdout in the structured file formats; human-readable
//! summaries go to stderr. Exit codes: 0 success/PASS, 1 FAIL, 2 input
//! error.

use aideal::action::{annihilator_search, ZSeq};
use aideal::coeff::{rat_int, Rat, TRat};
use aideal::format;
use aideal::pipeline::{
    a_polynomial, b_polynomial, character_cover_check, peripheral_to_abasis,
    specialize_and_swap_polys, verify_orthogonality, KnotData,
};
use aideal::plane::{buchberger, GroebnerBasis, PlanePoly};
use aideal::skein::{bp_relators, SkeinElement};
use clap::{Parser, Subcommand};
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "aideal",
    version,
    about = "Noncommutative A-ideals and A-bases of knots"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Minimal reduced Gröbner basis of a left ideal in the quantum plane
    Gb {
        /// Ideal file (JSON) with the generators
        #[arg(long)]
        ideal: PathBuf,
        /// Specialize coefficients at t = -1 and run the commutative degeneration
        #[arg(long)]
        t_minus_one: bool,
    },
    /// A-basis of a knot from its peripheral-ideal generators
    Abasis {
        /// Knot file (JSON) with generator expressions
        #[arg(long)]
        knot: PathBuf,
    },
    /// Specialize a basis at t = -1 and swap l with -m, m with -l
    Specialize {
        /// Basis file in the ideal format
        #[arg(long)]
        basis: PathBuf,
    },
    /// B- and A-polynomials from a basis (principal closure, not radical)
    Apoly {
        /// Basis file in the ideal format
        #[arg(long)]
        basis: PathBuf,
    },
    /// Check that every peripheral generator annihilates the knot's colored
    /// bracket sequence through the given depth
    Verify {
        #[arg(long)]
        knot: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Search for annihilators of a bracket sequence among bounded curves
    Annihilate {
        /// Kappa file path, or "builtin:unknot"
        #[arg(long)]
        kappa: String,
        #[arg(long)]
        pmax: i64,
        #[arg(long)]
        qmax: i64,
        #[arg(long)]
        depth: usize,
    },
    /// Evaluate the four skein-algebra presentation relators (all print 0)
    Relators,
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli) {
        Ok(failed) => {
            if failed {
                1
            } else {
                0
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    });
}

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn annotate<T>(res: aideal::Result<T>, path: &Path) -> Result<T, String> {
    res.map_err(|e| format!("{}:{e}", path.display()))
}

fn load_ideal(path: &Path) -> Result<Vec<PlanePoly<TRat>>, String> {
    let ideal = annotate(format::parse_ideal(&read_file(path)?), path)?;
    if ideal.is_empty() || ideal.iter().all(|f| f.is_zero()) {
        return Err(format!("{}: no nonzero generators", path.display()));
    }
    Ok(ideal)
}

fn load_knot(path: &Path) -> Result<KnotData, String> {
    let file = annotate(format::parse_knot(&read_file(path)?), path)?;
    let kappa = match &file.kappa {
        Some(spec) if !spec.starts_with("builtin:") => {
            let kpath = path.parent().unwrap_or(Path::new(".")).join(spec);
            let parsed = annotate(format::parse_kappa(&read_file(&kpath)?), &kpath)?;
            Some(annotate(
                parsed.into_zseq(&kpath.display().to_string()),
                &kpath,
            )?)
        }
        _ => None,
    };
    annotate(file.into_knot_data(kappa), path)
}

fn print_basis(basis: &GroebnerBasis<TRat>) {
    for (i, f) in basis.polys().iter().enumerate() {
        eprintln!("basis[{i}] = {f}");
    }
    print!("{}", format::write_ideal(basis.polys()));
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Gb { ideal, t_minus_one } => {
            let gens = load_ideal(&ideal)?;
            if t_minus_one {
                let specialized: aideal::Result<Vec<PlanePoly<Rat>>> =
                    gens.iter().map(|f| f.specialize(&rat_int(-1))).collect();
                let gens = annotate(specialized, &ideal)?;
                let gb = annotate(buchberger(&gens), &ideal)?;
                // re-embed the rational constants for the shared output format
                let embedded: Vec<PlanePoly<TRat>> = gb
                    .into_polys()
                    .into_iter()
                    .map(|f| {
                        PlanePoly::from_terms(
                            f.terms()
                                .map(|((p, q), c)| (p, q, TRat::from_rat(c.clone()))),
                        )
                    })
                    .collect();
                for (i, f) in embedded.iter().enumerate() {
                    eprintln!("basis[{i}] = {f}");
                }
                print!("{}", format::write_ideal(&embedded));
            } else {
                let gb = annotate(buchberger(&gens), &ideal)?;
                print_basis(&gb);
            }
            Ok(false)
        }
        Cmd::Abasis { knot } => {
            let k = load_knot(&knot)?;
            let res = annotate(peripheral_to_abasis(&k), &knot)?;
            eprintln!("knot: {}", k.name);
            for (i, s) in res.shifts.iter().enumerate() {
                eprintln!("cleared generator {i} by l^{} m^{}", s.a, s.b);
            }
            eprintln!(
                "bounding curve convention: ({},{})",
                res.convention.p(),
                res.convention.q()
            );
            print_basis(&res.basis);
            Ok(false)
        }
        Cmd::Specialize { basis } => {
            let polys = load_ideal(&basis)?;
            let classical = annotate(specialize_and_swap_polys(&polys), &basis)?;
            for f in &classical {
                println!("{f}");
            }
            Ok(false)
        }
        Cmd::Apoly { basis } => {
            let polys = load_ideal(&basis)?;
            let classical = annotate(specialize_and_swap_polys(&polys), &basis)?;
            let b = annotate(b_polynomial(&classical), &basis)?;
            let a = annotate(a_polynomial(&b), &basis)?;
            eprintln!("principal closure, not radical");
            println!("B = {b}");
            println!("A = {a}");
            if !character_cover_check() {
                return Err("internal: character cover relation violated".into());
            }
            Ok(false)
        }
        Cmd::Verify { knot, depth } => {
            let k = load_knot(&knot)?;
            let report = annotate(verify_orthogonality(&k, depth), &knot)?;
            print!("{report}");
            Ok(!report.all_passed())
        }
        Cmd::Annihilate {
            kappa,
            pmax,
            qmax,
            depth,
        } => {
            let z: ZSeq = if let Some(name) = kappa.strip_prefix("builtin:") {
                match name {
                    "unknot" => {
                        aideal::z_unknot(depth + 2 * (pmax + qmax).unsigned_abs() as usize + 4)
                    }
                    other => return Err(format!("unknown builtin kappa sequence '{other}'")),
                }
            } else {
                let path = PathBuf::from(&kappa);
                let parsed = annotate(format::parse_kappa(&read_file(&path)?), &path)?;
                annotate(parsed.into_zseq(&kappa), &path)?
            };
            let found = annihilator_search(&z, pmax, qmax, depth)
                .map_err(|e| format!("annihilator search: {e}"))?;
            eprintln!(
                "{} candidate annihilator(s), verified to depth {depth} only",
                found.len()
            );
            for s in &found {
                println!("{s}");
            }
            Ok(false)
        }
        Cmd::Relators => {
            let mut failed = false;
            for r in bp_relators() {
                println!("{r}");
                if !SkeinElement::is_zero(&r) {
                    failed = true;
                }
            }
            Ok(failed)
        }
    }
}
