//! Kummer–Dedekind split types: reduce a polynomial in `y` over `F_q[T]`
//! modulo a prime `P` of `F_q[T]`, factor it over `F_q[T]/(P)` and record
//! the residue degrees. Two polynomials are compared prime by prime.

use std::fmt;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::finite_field::{FieldDesc, FieldElement};
use crate::poly_arith::{monic_irreducibles, random_irreducible, Factorization, Poly, TPoly};
use crate::twisted::YPoly;

/// Sorted residue degrees, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitType(pub Vec<usize>);

impl SplitType {
    pub fn total_degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// The residue field `F_q[T]/(P)` together with the reduction map.
#[derive(Clone, Debug)]
pub struct ResidueField {
    prime: TPoly,
    field: FieldDesc,
}

impl ResidueField {
    /// Fails unless `prime` is monic and irreducible. Degree-one primes map
    /// into `F_q` itself; higher degrees adjoin the class of `T`.
    pub fn new(prime: &TPoly) -> Result<Self> {
        let d = prime.degree().unwrap_or(0);
        if d == 0 || !prime.is_monic() {
            return Err(Error::InvalidInput(format!(
                "prime {} must be monic of positive degree",
                prime.render("T")
            )));
        }
        if !prime.is_irreducible()? {
            return Err(Error::InvalidInput(format!(
                "{} is reducible",
                prime.render("T")
            )));
        }
        let field = if d == 1 {
            prime.field().clone()
        } else {
            FieldDesc::extension(prime, "T")?
        };
        Ok(ResidueField {
            prime: prime.clone(),
            field,
        })
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn prime(&self) -> &TPoly {
        &self.prime
    }

    /// The class of `a` modulo `P`.
    pub fn reduce(&self, a: &TPoly) -> FieldElement {
        let r = a.rem(&self.prime).expect("prime is nonzero");
        if self.prime.degree() == Some(1) {
            return r.coeff(0);
        }
        let d = self.prime.degree().unwrap();
        let coords: Vec<u64> = (0..d)
            .flat_map(|i| r.coeff(i).coords().to_vec())
            .map(u64::from)
            .collect();
        FieldElement::from_rep(&self.field, &coords).expect("coordinate count matches")
    }

    /// Coefficient-wise reduction of `f`; the degree drops if the leading
    /// coefficient vanishes.
    pub fn reduce_poly(&self, f: &YPoly) -> Result<Poly> {
        if f.field() != self.prime.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(Poly::from_coeffs(
            &self.field,
            f.coeffs().iter().map(|c| self.reduce(c)).collect(),
        ))
    }
}

/// `f mod P` as a polynomial over the residue field `F_q[T]/(P)`.
pub fn reduce_mod_prime(f: &YPoly, prime: &TPoly) -> Result<Poly> {
    ResidueField::new(prime)?.reduce_poly(f)
}

/// Outcome for one polynomial at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Good {
        split: SplitType,
        factorization: Factorization,
    },
    LeadingCoeffVanishes,
    RepeatedFactor {
        factorization: Factorization,
    },
}

impl SplitOutcome {
    pub fn split(&self) -> Option<&SplitType> {
        match self {
            SplitOutcome::Good { split, .. } => Some(split),
            _ => None,
        }
    }
}

fn split_in(residue: &ResidueField, f: &YPoly, seed: u64) -> Result<SplitOutcome> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::InvalidInput(
                "split type needs a polynomial of positive y-degree".into(),
            ))
        }
    };
    let reduced = residue.reduce_poly(f)?;
    if reduced.degree() != Some(n) {
        return Ok(SplitOutcome::LeadingCoeffVanishes);
    }
    let factorization = reduced.factor(seed)?;
    if !factorization.is_squarefree() {
        return Ok(SplitOutcome::RepeatedFactor { factorization });
    }
    Ok(SplitOutcome::Good {
        split: SplitType(factorization.degrees()),
        factorization,
    })
}

/// Split type of `f` at the prime `P`, or the reason `P` is excluded.
pub fn split_type(f: &YPoly, prime: &TPoly, seed: u64) -> Result<SplitOutcome> {
    split_in(&ResidueField::new(prime)?, f, seed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BadReason {
    LeadingCoeffVanishesF,
    RepeatedFactorF,
    LeadingCoeffVanishesG,
    RepeatedFactorG,
}

impl BadReason {
    fn mirrored(self) -> Self {
        match self {
            BadReason::LeadingCoeffVanishesF => BadReason::LeadingCoeffVanishesG,
            BadReason::RepeatedFactorF => BadReason::RepeatedFactorG,
            BadReason::LeadingCoeffVanishesG => BadReason::LeadingCoeffVanishesF,
            BadReason::RepeatedFactorG => BadReason::RepeatedFactorF,
        }
    }
}

impl fmt::Display for BadReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BadReason::LeadingCoeffVanishesF => "leading_coeff_vanishes_f",
            BadReason::RepeatedFactorF => "repeated_factor_f",
            BadReason::LeadingCoeffVanishesG => "leading_coeff_vanishes_g",
            BadReason::RepeatedFactorG => "repeated_factor_g",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    Good {
        type_f: SplitType,
        type_g: SplitType,
        equal: bool,
    },
    /// Excluded from comparison. Types are kept for the sides that were fine.
    Bad {
        reasons: Vec<BadReason>,
        type_f: Option<SplitType>,
        type_g: Option<SplitType>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeVerdict {
    pub prime: TPoly,
    pub status: VerdictStatus,
}

impl PrimeVerdict {
    /// The verdict with the roles of `f` and `g` exchanged.
    pub fn mirrored(&self) -> PrimeVerdict {
        let status = match &self.status {
            VerdictStatus::Good {
                type_f,
                type_g,
                equal,
            } => VerdictStatus::Good {
                type_f: type_g.clone(),
                type_g: type_f.clone(),
                equal: *equal,
            },
            VerdictStatus::Bad {
                reasons,
                type_f,
                type_g,
            } => {
                let mut reasons: Vec<_> = reasons.iter().map(|r| r.mirrored()).collect();
                reasons.sort();
                VerdictStatus::Bad {
                    reasons,
                    type_f: type_g.clone(),
                    type_g: type_f.clone(),
                }
            }
        };
        PrimeVerdict {
            prime: self.prime.clone(),
            status,
        }
    }

    fn tsv_row(&self) -> String {
        let show = |t: Option<&SplitType>| t.map_or("-".to_string(), |t| t.to_string());
        let (tf, tg, status) = match &self.status {
            VerdictStatus::Good {
                type_f,
                type_g,
                equal,
            } => (
                type_f.to_string(),
                type_g.to_string(),
                if *equal {
                    "equal".to_string()
                } else {
                    "UNEQUAL".to_string()
                },
            ),
            VerdictStatus::Bad {
                reasons,
                type_f,
                type_g,
            } => {
                let r: Vec<String> = reasons.iter().map(|r| r.to_string()).collect();
                (
                    show(type_f.as_ref()),
                    show(type_g.as_ref()),
                    format!("bad:{}", r.join(",")),
                )
            }
        };
        format!(
            "{}\t{}\t{}\t{}\t{}",
            self.prime.render("T"),
            self.prime.degree().unwrap(),
            tf,
            tg,
            status
        )
    }
}

/// Which primes of `F_q[T]` to test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    /// Every monic irreducible of degree `1..=max_degree`.
    Exhaustive { max_degree: usize },
    /// `count` seeded draws of monic irreducibles of one degree, deduplicated.
    Sampled {
        count: usize,
        degree: usize,
        seed: u64,
    },
}

impl PrimeSelection {
    pub fn primes(&self, field: &FieldDesc) -> Result<Vec<TPoly>> {
        let mut primes = match *self {
            PrimeSelection::Exhaustive { max_degree } => {
                if max_degree == 0 {
                    return Err(Error::InvalidInput("empty prime selection".into()));
                }
                (1..=max_degree)
                    .flat_map(|d| monic_irreducibles(field, d))
                    .collect::<Vec<_>>()
            }
            PrimeSelection::Sampled {
                count,
                degree,
                seed,
            } => {
                if count == 0 || degree == 0 {
                    return Err(Error::InvalidInput("empty prime selection".into()));
                }
                (0..count as u64)
                    .map(|i| random_irreducible(field, degree, derive_seed(seed, &i.to_string())))
                    .collect::<Result<Vec<_>>>()?
            }
        };
        primes.sort_by(|a, b| a.cmp_canonical(b));
        primes.dedup();
        Ok(primes)
    }
}

impl fmt::Display for PrimeSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSelection::Exhaustive { max_degree } => {
                write!(f, "exhaustive(max_degree={max_degree})")
            }
            PrimeSelection::Sampled {
                count,
                degree,
                seed,
            } => write!(f, "sampled(count={count},degree={degree},seed={seed})"),
        }
    }
}

/// First eight bytes of `SHA-256(seed || label)`, little-endian.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(label.as_bytes());
    let digest = h.finalize();
    u64::from_le_bytes(digest[..8].try_into().unwrap())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub good: usize,
    pub equal: usize,
    pub unequal: usize,
    pub bad: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overall {
    Consistent,
    Refuted,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::Consistent => "consistent",
            Overall::Refuted => "refuted",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub pair_id: String,
    pub selection: String,
    pub seed: u64,
    pub verdicts: Vec<PrimeVerdict>,
    pub summary: Summary,
    pub overall: Overall,
}

impl EquivalenceReport {
    fn from_verdicts(
        pair_id: &str,
        selection: String,
        seed: u64,
        verdicts: Vec<PrimeVerdict>,
    ) -> Self {
        let mut summary = Summary::default();
        for v in &verdicts {
            match &v.status {
                VerdictStatus::Good { equal, .. } => {
                    summary.good += 1;
                    if *equal {
                        summary.equal += 1;
                    } else {
                        summary.unequal += 1;
                    }
                }
                VerdictStatus::Bad { .. } => summary.bad += 1,
            }
        }
        let overall = if summary.unequal > 0 {
            Overall::Refuted
        } else {
            Overall::Consistent
        };
        EquivalenceReport {
            pair_id: pair_id.to_string(),
            selection,
            seed,
            verdicts,
            summary,
            overall,
        }
    }

    /// The same report with `f` and `g` exchanged.
    pub fn mirrored(&self) -> Self {
        EquivalenceReport::from_verdicts(
            &self.pair_id,
            self.selection.clone(),
            self.seed,
            self.verdicts.iter().map(|v| v.mirrored()).collect(),
        )
    }

    /// Tab-separated rows `prime deg type_f type_g status`, then the summary.
    pub fn render_tsv(&self) -> String {
        let mut out = format!(
            "# pair={} primes={} seed={}\n",
            self.pair_id, self.selection, self.seed
        );
        for v in &self.verdicts {
            out.push_str(&v.tsv_row());
            out.push('\n');
        }
        let s = &self.summary;
        out.push_str(&format!(
            "good={} equal={} unequal={} bad={} overall={}\n",
            s.good, s.equal, s.unequal, s.bad, self.overall
        ));
        out
    }
}

fn verdict_at(f: &YPoly, g: &YPoly, prime: &TPoly, seed: u64) -> Result<PrimeVerdict> {
    let residue = ResidueField::new(prime)?;
    let prime_seed = derive_seed(seed, &prime.render("T"));
    let of = split_in(&residue, f, prime_seed)?;
    let og = split_in(&residue, g, prime_seed)?;
    let mut reasons = Vec::new();
    match of {
        SplitOutcome::LeadingCoeffVanishes => reasons.push(BadReason::LeadingCoeffVanishesF),
        SplitOutcome::RepeatedFactor { .. } => reasons.push(BadReason::RepeatedFactorF),
        SplitOutcome::Good { .. } => {}
    }
    match og {
        SplitOutcome::LeadingCoeffVanishes => reasons.push(BadReason::LeadingCoeffVanishesG),
        SplitOutcome::RepeatedFactor { .. } => reasons.push(BadReason::RepeatedFactorG),
        SplitOutcome::Good { .. } => {}
    }
    let (type_f, type_g) = (of.split().cloned(), og.split().cloned());
    let status = if reasons.is_empty() {
        let (type_f, type_g) = (type_f.unwrap(), type_g.unwrap());
        let equal = type_f == type_g;
        VerdictStatus::Good {
            type_f,
            type_g,
            equal,
        }
    } else {
        VerdictStatus::Bad {
            reasons,
            type_f,
            type_g,
        }
    };
    Ok(PrimeVerdict {
        prime: prime.clone(),
        status,
    })
}

/// Compares the split types of `f` and `g` at every selected prime.
///
/// Per-prime work runs on the current rayon pool; each prime's factoring
/// seed is derived from `seed` and the prime itself, so the report does not
/// depend on scheduling.
pub fn compare_split_types(
    pair_id: &str,
    f: &YPoly,
    g: &YPoly,
    selection: &PrimeSelection,
    seed: u64,
) -> Result<EquivalenceReport> {
    if f.field() != g.field() {
        return Err(Error::FieldMismatch);
    }
    let primes = selection.primes(f.field())?;
    let verdicts = primes
        .par_iter()
        .map(|p| verdict_at(f, g, p, seed))
        .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport::from_verdicts(
        pair_id,
        selection.to_string(),
        seed,
        verdicts,
    ))
}
