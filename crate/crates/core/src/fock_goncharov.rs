//! Framed representations of punctured surface groups into `G` with
//! framings in `X`, and the groupoid volumes of their quotients.

use num_bigint::{BigInt, BigUint};

use crate::chartable::{CharacterTable, Cyclo};
use crate::config::Config;
use crate::enumerate::{enumerate_sum, repeat, Level};
use crate::error::{Error, Result};
use crate::frobenius::{signed_pow, to_natural};
use crate::gelfand::is_multiplicity_free;
use crate::group::{FiniteGroup, GSet};
use crate::numeric::Rational;

/// A genus-`k` surface with `m ≥ 1` punctures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    genus: u32,
    punctures: u32,
    euler_char: i64,
}

impl SurfaceType {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        if punctures < 1 {
            return Err(Error::InvalidInput("a surface of finite type needs at least one puncture".into()));
        }
        Ok(SurfaceType { genus, punctures, euler_char: 2 - 2 * genus as i64 - punctures as i64 })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn punctures(&self) -> u32 {
        self.punctures
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }

    /// Every `(k, m)` with `m ≥ 1` and `2 − 2k − m = chi`, by increasing genus.
    pub fn realizing(chi: i64) -> Vec<SurfaceType> {
        let mut out = Vec::new();
        let mut k = 0i64;
        while 2 - 2 * k - chi >= 1 {
            out.push(SurfaceType::new(k as u32, (2 - 2 * k - chi) as u32).unwrap());
            k += 1;
        }
        out
    }
}

/// `|G|^{1−χ} Σ_π mult^m / dim^{−χ}`.
pub fn framed_count(table: &CharacterTable, g: &FiniteGroup, x: &GSet, s: &SurfaceType) -> Result<BigUint> {
    let mults = table.multiplicities(g, x)?;
    let chi = s.euler_char();
    let n = g.order() as u64;
    let mut total = Rational::from_integer(0.into());
    for (i, &mu) in mults.iter().enumerate() {
        total += signed_pow(n, 1 - chi) * signed_pow(mu, s.punctures() as i64) / signed_pow(table.dim(i), -chi);
    }
    to_natural(&Cyclo::from_scalar(total), "framed count")
}

/// Enumerates `(a_1, b_1, …, a_k, b_k, τ_1, …, τ_{m−1})` freely, solves the
/// surface relation for `τ_m`, and weights each by `Π_j #X^{τ_j}`.
pub fn framed_count_brute(g: &FiniteGroup, x: &GSet, s: &SurfaceType, config: &Config) -> Result<u128> {
    let fix = x.fixed_point_counts();
    let levels: Vec<Level> = repeat(Level::Commutator, s.genus())
        .chain(repeat(Level::Free(Some(&fix)), s.punctures() - 1))
        .collect();
    enumerate_sum(g, 0, &levels, |p| fix[g.inv(p)], config)
}

/// Framed count divided by `|G|`.
pub fn groupoid_volume(table: &CharacterTable, g: &FiniteGroup, x: &GSet, s: &SurfaceType) -> Result<Rational> {
    let count = framed_count(table, g, x, s)?;
    Ok(Rational::new(BigInt::from(count), BigInt::from(g.order())))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    pub chi: i64,
    pub volumes: Vec<(SurfaceType, Rational)>,
    pub all_equal: bool,
    pub multiplicity_free: bool,
    /// `all_equal == multiplicity_free`.
    pub consistent: bool,
}

/// Volumes of every surface with Euler characteristic `chi ≤ −1`.
pub fn topology_invariance_check(table: &CharacterTable, g: &FiniteGroup, x: &GSet, chi: i64) -> Result<TopologyReport> {
    if chi > -1 {
        return Err(Error::InvalidInput(format!("need χ ≤ −1, got {}", chi)));
    }
    let volumes = SurfaceType::realizing(chi)
        .into_iter()
        .map(|s| Ok((s, groupoid_volume(table, g, x, &s)?)))
        .collect::<Result<Vec<_>>>()?;
    let all_equal = volumes.windows(2).all(|w| w[0].1 == w[1].1);
    let (multiplicity_free, _) = is_multiplicity_free(table, g, x)?;
    Ok(TopologyReport { chi, volumes, all_equal, multiplicity_free, consistent: all_equal == multiplicity_free })
}
