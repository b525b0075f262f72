use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Hook length of every box `(i, j)` with `j ≤ λ_i` (1-based), row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                // λ_i - j + λ*_j - i + 1 with 1-based i, j
                out.push(row - (j + 1) + conj.parts[j] - (i + 1) + 1);
            }
        }
        out
    }

    /// `Σ_k (k-1) λ_k`.
    pub fn n_statistic(&self) -> usize {
        self.parts.iter().enumerate().map(|(k, &p)| k * p).sum()
    }

    /// Degree of the Specht module: `n! / Π hooks`.
    pub fn specht_dim(&self) -> Result<u64> {
        let n = self.size();
        let fact: BigUint = (1..=n as u64).fold(BigUint::one(), |acc, k| acc * k);
        let hooks: BigUint = self.hook_lengths().iter().fold(BigUint::one(), |acc, &h| acc * h as u64);
        if &fact % &hooks != BigUint::from(0u32) {
            return Err(Error::InternalInconsistency(format!("hook product does not divide {}!", n)));
        }
        (fact / hooks)
            .to_u64()
            .ok_or_else(|| Error::TooLarge { what: "Specht dimension".into(), size: u128::MAX, bound: u64::MAX as u128 })
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=remaining.min(max)).rev() {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
