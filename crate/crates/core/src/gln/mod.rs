//! `GL_n(F_q)` acting on complete flags: partitions and hook lengths, the
//! unipotent dimension polynomials, closed-form volumes and E-polynomials,
//! and an explicit flag G-set to check them against.

mod closed_form;
mod field;
mod flags;
mod partition;

pub use closed_form::{
    fg_epoly, fg_vol_closed, fg_vol_closed_at, gl_order_poly, unipotent_dim, ClosedFormConvention,
};
pub use field::SmallField;
pub use flags::{build_gl_flag, gl_order, GlGroup};
pub use partition::{partitions, Partition};

use crate::chartable::CharacterTable;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::numeric::int;

/// One partition's predicted contribution to `C[Fl]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentLine {
    pub partition: Partition,
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnipotentReport {
    pub n: usize,
    pub q: usize,
    pub flag_count: usize,
    pub predicted: Vec<UnipotentLine>,
    /// `(dimension, multiplicity)` of each constituent of `C[Fl]`, in table order.
    pub computed: Vec<(u64, u64)>,
    /// `Σ_λ specht_dim(λ) · dim R_λ(q)`.
    pub predicted_total: u64,
    pub matches: bool,
}

/// Decomposes `C[Fl]` with an actual character table and compares it with
/// the hook-length predictions.
pub fn unipotent_multiplicity_check(n: usize, q: usize, config: &Config) -> Result<UnipotentReport> {
    let gl = build_gl_flag(n, q, config.group_cap)?;
    let table = CharacterTable::compute_with(&gl.group, config)?;
    unipotent_multiplicity_check_with(&gl, &table)
}

pub fn unipotent_multiplicity_check_with(gl: &GlGroup, table: &CharacterTable) -> Result<UnipotentReport> {
    let q = gl.q();
    let mut predicted = Vec::new();
    for lambda in partitions(gl.n) {
        let d = unipotent_dim(&lambda, ClosedFormConvention::Corrected)?.eval(&int(q as i64))?;
        let dim = crate::numeric::as_nonnegative_integer(&d)
            .and_then(|d| u64::try_from(d).ok())
            .ok_or_else(|| Error::InternalInconsistency(format!("dimension {} is not a natural number", d)))?;
        let multiplicity = lambda.specht_dim()?;
        predicted.push(UnipotentLine { partition: lambda, dim, multiplicity });
    }
    let mults = table.multiplicities(&gl.group, &gl.flags)?;
    let computed: Vec<(u64, u64)> = mults
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(i, &m)| (table.dim(i), m))
        .collect();
    let mut a: Vec<(u64, u64)> = predicted.iter().map(|l| (l.dim, l.multiplicity)).collect();
    let mut b = computed.clone();
    a.sort_unstable();
    b.sort_unstable();
    let predicted_total = predicted.iter().map(|l| l.dim * l.multiplicity).sum();
    let flag_count = gl.flags.size();
    Ok(UnipotentReport {
        n: gl.n,
        q,
        flag_count,
        predicted,
        computed,
        predicted_total,
        matches: a == b && predicted_total == flag_count as u64,
    })
}
