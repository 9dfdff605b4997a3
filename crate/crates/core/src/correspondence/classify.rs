use super::{factorize, Correspondence, CorrespondenceError, Factorization};
use crate::algebra::{perfect_power_extract, GaussianRational};

/// Whether, and how, a correspondence is a map of `d`-tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Classification {
    /// Rank-2 coefficient matrix; `compose(factorization) = scalar · f`.
    Rank2 {
        factorization: Factorization,
        scalar: GaussianRational,
    },
    /// `f = c · base^m` with `base` itself a map of `(d/m)`-tuples.
    PerfectPower {
        m: usize,
        base: Correspondence,
        base_class: Box<Classification>,
        c: GaussianRational,
    },
    NotMapOfTuples {
        rank: usize,
    },
}

impl Classification {
    pub fn is_map_of_tuples(&self) -> bool {
        !matches!(self, Classification::NotMapOfTuples { .. })
    }

    /// Short tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Classification::Rank2 { .. } => "rank2",
            Classification::PerfectPower { .. } => "perfect_power",
            Classification::NotMapOfTuples { .. } => "not_map_of_tuples",
        }
    }
}

/// Rank 2 first; otherwise try `f = c·g^m` for divisors `m ≥ 2` of `d`,
/// largest first, accepting the first base that is itself a map of tuples.
pub fn classify(f: &Correspondence) -> Result<Classification, CorrespondenceError> {
    let rank = f.rank();
    if rank == 2 {
        let factorization = factorize(f)?;
        let scalar = factorization.round_trip_scalar(f).expect("factorization reproduces its source up to a scalar");
        return Ok(Classification::Rank2 { factorization, scalar });
    }
    let d = f.degree();
    let poly = f.to_bipoly();
    for m in (2..=d).rev().filter(|&m| d.is_multiple_of(m)) {
        let Some((c, g)) = perfect_power_extract(&poly, m)? else {
            continue;
        };
        let base = Correspondence::from_bipoly(&g)?;
        let base_class = classify(&base)?;
        if base_class.is_map_of_tuples() {
            return Ok(Classification::PerfectPower { m, base, base_class: Box::new(base_class), c });
        }
    }
    Ok(Classification::NotMapOfTuples { rank })
}
