//! The `drinfeld` command line: torsion polynomials, factorizations modulo a
//! prime, split-type comparison of a pair file, Gassmann certificates and
//! prime listings.
//!
//! Exit codes: 0 success or consistent, 1 refuted or trivial triple,
//! 2 usage or input error. Data goes to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::expr_parser::{parse_ext_poly, parse_t_poly, parse_twisted, parse_y_poly};
use crate::finite_field::{FieldDesc, FieldElement};
use crate::gassmann::{
    example1_subgroups, stabilizer_pair, verify_gassmann, MatGroup, ScalarSubgroup,
};
use crate::poly_arith::monic_irreducibles;
use crate::splitting::{
    compare_split_types, reduce_mod_prime, Overall, PrimeSelection, ResidueField,
};
use crate::twisted::{DrinfeldModule, YPoly};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "drinfeld",
    version,
    about = "Drinfeld module torsion and arithmetic equivalence checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the torsion polynomial of rho_a.
    Torsion {
        #[arg(long)]
        p: u64,
        /// rho_T as a twisted polynomial, e.g. "tau^2 + T*tau + T".
        #[arg(long)]
        rho: String,
        #[arg(long)]
        a: String,
        /// Divide out the trivial root y = 0.
        #[arg(long)]
        strip: bool,
    },
    /// Factor a polynomial in y modulo a prime of F_p[T].
    Factor {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        prime: String,
        /// Expression in T and y, or @path to read it from a file.
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare split types of the two polynomials of a pair file.
    SplitCheck(SplitCheckArgs),
    /// Check a Gassmann triple in GL_n(F_q)/S.
    Gassmann {
        #[arg(long)]
        p: u64,
        /// Irreducible modulus in x defining F_q = F_p[x]/(m).
        #[arg(long)]
        ext_modulus: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum)]
        construction: Construction,
        /// Generator of S (an element of F_q written in x), or 1.
        #[arg(long, default_value = "1")]
        scalar_subgroup: String,
    },
    /// List the monic irreducibles of F_q[T] of one degree.
    Primes {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        ext_modulus: Option<String>,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Args, Debug)]
struct SplitCheckArgs {
    #[arg(long)]
    pair: PathBuf,
    /// Test every prime of degree up to D.
    #[arg(
        long,
        value_name = "D",
        conflicts_with = "samples",
        required_unless_present = "samples"
    )]
    max_degree: Option<usize>,
    /// Test N random primes of degree --degree.
    #[arg(long, value_name = "N", requires = "degree")]
    samples: Option<usize>,
    #[arg(long, requires = "samples")]
    degree: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; the report does not depend on this.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Construction {
    Example1,
    Stabilizers,
}

/// Contents of a `.pair` file: `key = value` lines, `#` comments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFile {
    pub p: u64,
    pub f: String,
    pub g: String,
    pub description: String,
}

impl PairFile {
    pub fn parse(text: &str) -> Result<Self> {
        let (mut p, mut f, mut g, mut description) = (None, None, None, None);
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad =
                |msg: &str| Error::InvalidInput(format!("pair file line {}: {msg}", lineno + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value"))?;
            let slot = match key.trim() {
                "p" => &mut p,
                "f" => &mut f,
                "g" => &mut g,
                "description" => &mut description,
                other => return Err(bad(&format!("unknown key {other:?}"))),
            };
            if slot.replace(value.trim().to_string()).is_some() {
                return Err(bad(&format!("duplicate key {:?}", key.trim())));
            }
        }
        let missing = |k: &str| Error::InvalidInput(format!("pair file is missing {k}"));
        let p = p.ok_or_else(|| missing("p"))?;
        Ok(PairFile {
            p: p.parse()
                .map_err(|_| Error::InvalidInput(format!("p = {p:?} is not an integer")))?,
            f: f.ok_or_else(|| missing("f"))?,
            g: g.ok_or_else(|| missing("g"))?,
            description: description.unwrap_or_default(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        PairFile::parse(&read_file(path)?)
    }

    pub fn polynomials(&self) -> Result<(YPoly, YPoly)> {
        let field = FieldDesc::prime(self.p)?;
        Ok((
            parse_y_poly(&self.f, &field)?,
            parse_y_poly(&self.g, &field)?,
        ))
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::InvalidInput(format!("write failed: {e}"))
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Torsion { p, rho, a, strip } => {
            let field = FieldDesc::prime(p)?;
            let module = DrinfeldModule::new(parse_twisted(&rho, &field)?)?;
            let a = parse_t_poly(&a, &field)?;
            let poly = module.torsion_polynomial(&a, strip)?;
            writeln!(out, "{poly}").map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::Factor {
            p,
            prime,
            poly,
            seed,
        } => {
            let field = FieldDesc::prime(p)?;
            let prime = parse_t_poly(&prime, &field)?;
            let text = match poly.strip_prefix('@') {
                Some(path) => read_file(Path::new(path))?,
                None => poly,
            };
            let f = parse_y_poly(text.trim(), &field)?;
            // validates the prime before reducing
            ResidueField::new(&prime)?;
            let reduced = reduce_mod_prime(&f, &prime)?;
            writeln!(out, "# reduction = {}", reduced.render("y")).map_err(io_err)?;
            if reduced.degree().unwrap_or(0) == 0 {
                writeln!(err, "reduction is constant").map_err(io_err)?;
                return Ok(EXIT_OK);
            }
            let fact = reduced.factor(seed)?;
            for (factor, mult) in &fact.factors {
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    factor.degree().unwrap_or(0),
                    mult,
                    factor.render("y")
                )
                .map_err(io_err)?;
            }
            let degrees: Vec<String> = fact.degrees().iter().map(|d| d.to_string()).collect();
            writeln!(out, "unit={} degrees=[{}]", fact.unit, degrees.join(",")).map_err(io_err)?;
            Ok(EXIT_OK)
        }
        Command::SplitCheck(args) => split_check(args, out, err),
        Command::Gassmann {
            p,
            ext_modulus,
            n,
            construction,
            scalar_subgroup,
        } => {
            let field = field_from_flags(p, ext_modulus.as_deref())?;
            let (g, h, h2) = match construction {
                Construction::Example1 => {
                    if n != 2 {
                        return Err(Error::InvalidInput(
                            "example1 lives in GL_2; use --n 2".into(),
                        ));
                    }
                    if scalar_subgroup.trim() != "1" {
                        return Err(Error::InvalidInput(
                            "example1 uses the trivial scalar subgroup".into(),
                        ));
                    }
                    let (h, h2) = example1_subgroups(&field)?;
                    (h.parent().clone(), h, h2)
                }
                Construction::Stabilizers => {
                    let s = scalar_from_flag(&scalar_subgroup, &field)?;
                    let g = MatGroup::build_gl(n, &field, &s)?;
                    let (h, h2) = stabilizer_pair(&g)?;
                    (g, h, h2)
                }
            };
            writeln!(err, "{g:?}, |H| = {}, |H'| = {}", h.order(), h2.order()).map_err(io_err)?;
            let cert = verify_gassmann(&g, &h, &h2)?;
            out.write_all(cert.render().as_bytes()).map_err(io_err)?;
            Ok(if cert.is_nontrivial {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Primes {
            p,
            ext_modulus,
            degree,
        } => {
            if degree == 0 {
                return Err(Error::InvalidInput("degree must be at least 1".into()));
            }
            let field = field_from_flags(p, ext_modulus.as_deref())?;
            let primes = monic_irreducibles(&field, degree);
            for prime in &primes {
                writeln!(out, "{}", prime.render("T")).map_err(io_err)?;
            }
            writeln!(out, "count={}", primes.len()).map_err(io_err)?;
            Ok(EXIT_OK)
        }
    }
}

fn split_check(args: SplitCheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let pair = PairFile::load(&args.pair)?;
    let (f, g) = pair.polynomials()?;
    let pair_id = args
        .pair
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let selection = match (args.max_degree, args.samples, args.degree) {
        (Some(max_degree), None, None) => PrimeSelection::Exhaustive { max_degree },
        (None, Some(count), Some(degree)) => PrimeSelection::Sampled {
            count,
            degree,
            seed: args.seed,
        },
        _ => {
            return Err(Error::InvalidInput(
                "give either --max-degree or --samples with --degree".into(),
            ))
        }
    };
    let run = || compare_split_types(&pair_id, &f, &g, &selection, args.seed);
    let report = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    if !pair.description.is_empty() {
        writeln!(err, "{}", pair.description).map_err(io_err)?;
    }
    out.write_all(report.render_tsv().as_bytes())
        .map_err(io_err)?;
    Ok(match report.overall {
        Overall::Consistent => EXIT_OK,
        Overall::Refuted => EXIT_NEGATIVE,
    })
}

fn field_from_flags(p: u64, ext_modulus: Option<&str>) -> Result<FieldDesc> {
    let base = FieldDesc::prime(p)?;
    match ext_modulus {
        None => Ok(base),
        Some(text) => FieldDesc::extension(&parse_ext_poly(text, &base)?, "x"),
    }
}

/// Reads an element of `F_q` written as a polynomial in `x`.
fn scalar_from_flag(text: &str, field: &FieldDesc) -> Result<ScalarSubgroup> {
    let prime_field = FieldDesc::prime(field.characteristic())?;
    let poly = parse_ext_poly(text, &prime_field)?;
    if field.is_prime_field() && poly.degree().unwrap_or(0) > 0 {
        return Err(Error::InvalidInput(format!(
            "{text:?} is not an element of F_{}",
            field.order()
        )));
    }
    let x = field.generator().unwrap_or_else(|| field.zero());
    let mut value: FieldElement = field.zero();
    for c in poly.coeffs().iter().rev() {
        value = &(&value * &x) + &field.from_int(c.index() as i64);
    }
    if value.is_one() {
        Ok(ScalarSubgroup::Trivial)
    } else {
        Ok(ScalarSubgroup::Generated(value))
    }
}
