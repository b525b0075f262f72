/// Resource bounds shared by every computation.
///
/// Exceeding a bound is always reported as an error; nothing is truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Maximum number of innermost iterations for brute-force enumerations.
    pub work_bound: u128,
    /// Bound on `|G|^(m+2k) * |X|^m` for the tuple-level enumerator.
    pub tuple_bound: u128,
    /// Maximum group order accepted by closures and builders.
    pub group_cap: usize,
    /// Route-(a) cross-checks inside aggregate reports run only below this size.
    pub oracle_bound: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            work_bound: 1_000_000_000,
            tuple_bound: 10_000_000,
            group_cap: 20_000,
            oracle_bound: 10_000_000,
        }
    }
}

impl Config {
    pub fn with_work_bound(mut self, work_bound: u128) -> Self {
        self.work_bound = work_bound;
        self
    }
}
