//! Nested enumeration of group words, the common core of every brute-force
//! oracle.
//!
//! A word is built left to right from a starting element: each level
//! multiplies on the right by either a free element `h` (optionally weighted
//! by `w[h]`) or a commutator `[a, b]`. The leaf receives the finished product
//! and returns a weight; the result is the sum over all words of the product
//! of all weights.

use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

#[derive(Debug, Clone, Copy)]
pub enum Level<'a> {
    /// `h` ranges over `G`, contributing `weights[h]` (or 1).
    Free(Option<&'a [u64]>),
    /// `a, b` range over `G`, contributing `[a, b]`.
    Commutator,
}

/// Number of innermost iterations `levels` would take over `g`.
pub fn work(g: &FiniteGroup, levels: &[Level]) -> u128 {
    let n = g.order() as u128;
    levels.iter().fold(1u128, |acc, l| {
        let f = match l {
            Level::Free(_) => n,
            Level::Commutator => n.saturating_mul(n),
        };
        acc.saturating_mul(f)
    })
}

/// Checks `work` against the configured bound.
pub fn check_work(needed: u128, config: &Config) -> Result<()> {
    if needed > config.work_bound {
        return Err(Error::WorkBoundExceeded { needed, bound: config.work_bound });
    }
    Ok(())
}

/// Sums `Π weights · leaf(product)` over all words.
///
/// The outermost level is split across rayon workers; partial sums are exact
/// integers, so the result does not depend on the partitioning.
pub fn enumerate_sum<F>(g: &FiniteGroup, start: Element, levels: &[Level], leaf: F, config: &Config) -> Result<u128>
where
    F: Fn(Element) -> u64 + Sync,
{
    check_work(work(g, levels), config)?;
    let Some((first, rest)) = levels.split_first() else {
        return Ok(leaf(start) as u128);
    };
    let n = g.order();
    let total = match first {
        Level::Free(weights) => (0..n)
            .into_par_iter()
            .map(|h| {
                let w = weights.map_or(1, |w| w[h]);
                if w == 0 {
                    return 0;
                }
                w as u128 * recurse(g, g.mul(start, h), rest, &leaf)
            })
            .sum(),
        Level::Commutator => (0..n)
            .into_par_iter()
            .map(|a| {
                (0..n)
                    .map(|b| recurse(g, g.mul(start, g.commutator(a, b)), rest, &leaf))
                    .sum::<u128>()
            })
            .sum(),
    };
    Ok(total)
}

fn recurse<F>(g: &FiniteGroup, acc: Element, levels: &[Level], leaf: &F) -> u128
where
    F: Fn(Element) -> u64,
{
    let Some((first, rest)) = levels.split_first() else {
        return leaf(acc) as u128;
    };
    let n = g.order();
    let mut total = 0u128;
    match first {
        Level::Free(weights) => {
            for h in 0..n {
                let w = weights.map_or(1, |w| w[h]);
                if w != 0 {
                    total += w as u128 * recurse(g, g.mul(acc, h), rest, leaf);
                }
            }
        }
        Level::Commutator => {
            for a in 0..n {
                for b in 0..n {
                    total += recurse(g, g.mul(acc, g.commutator(a, b)), rest, leaf);
                }
            }
        }
    }
    total
}

/// `levels` repeated: `count` copies of `level`.
pub fn repeat<'a>(level: Level<'a>, count: u32) -> impl Iterator<Item = Level<'a>> {
    std::iter::repeat(level).take(count as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric;

    #[test]
    fn counts_commuting_pairs() {
        let g = symmetric(3).group;
        let n = enumerate_sum(&g, 0, &[Level::Commutator], |p| u64::from(p == 0), &Config::default()).unwrap();
        assert_eq!(n, 18);
    }

    #[test]
    fn weighted_free_levels() {
        let g = symmetric(3).group;
        let w: Vec<u64> = (0..6).map(|h| h as u64 + 1).collect();
        let total = enumerate_sum(&g, 0, &[Level::Free(Some(&w)), Level::Free(None)], |_| 1, &Config::default()).unwrap();
        assert_eq!(total, 21 * 6);
    }

    #[test]
    fn work_bound_is_enforced() {
        let g = symmetric(4).group;
        let cfg = Config::default().with_work_bound(1000);
        let r = enumerate_sum(&g, 0, &[Level::Commutator, Level::Free(None)], |_| 1, &cfg);
        assert_eq!(r, Err(Error::WorkBoundExceeded { needed: 24 * 24 * 24, bound: 1000 }));
    }

    #[test]
    fn result_is_independent_of_thread_count() {
        let g = symmetric(4).group;
        let levels = [Level::Commutator, Level::Free(None)];
        let leaf = |p: Element| g.element_order(p) as u64;
        let base = enumerate_sum(&g, 0, &levels, leaf, &Config::default()).unwrap();
        for threads in [1, 3] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let r = pool.install(|| enumerate_sum(&g, 0, &levels, leaf, &Config::default()).unwrap());
            assert_eq!(r, base);
        }
    }
}
