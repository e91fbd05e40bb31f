//! Runtime limits and knobs.
//!
//! All heavy computations run against explicit budgets so that resource
//! exhaustion surfaces as an error rather than a silent wrong answer or a
//! hung process. The CLI layers flag and `CCL_*` environment overrides on
//! top of these defaults; the library itself only reads the global value.

use std::sync::{OnceLock, RwLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest admissible coefficient prime.
    pub prime_cap: u64,
    /// Default Frobenius iteration bound for bounded closure checks.
    pub e_max: u32,
    /// Largest admissible Frobenius power q = p^e.
    pub q_cap: u64,
    /// Largest admissible level in the direct-limit model of local cohomology.
    pub level_cap: u64,
    /// Groebner: maximum number of basis elements kept during Buchberger.
    pub gb_max_basis: usize,
    /// Groebner: maximum number of single-term reduction steps per run.
    pub gb_max_reductions: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            prime_cap: 343,
            e_max: 3,
            q_cap: 343,
            level_cap: 343,
            gb_max_basis: 4096,
            gb_max_reductions: 5_000_000,
        }
    }
}

fn cell() -> &'static RwLock<Config> {
    static CONFIG: OnceLock<RwLock<Config>> = OnceLock::new();
    CONFIG.get_or_init(|| RwLock::new(Config::default()))
}

impl Config {
    pub fn global() -> Config {
        *cell().read().expect("config lock poisoned")
    }

    pub fn set_global(cfg: Config) {
        *cell().write().expect("config lock poisoned") = cfg;
    }

    /// Apply `CCL_*` environment overrides on top of `self`.
    pub fn with_env(mut self) -> Config {
        fn get<T: std::str::FromStr>(name: &str) -> Option<T> {
            std::env::var(name).ok().and_then(|v| v.trim().parse().ok())
        }
        if let Some(v) = get("CCL_PRIME_CAP") {
            self.prime_cap = v;
        }
        if let Some(v) = get("CCL_EMAX") {
            self.e_max = v;
        }
        if let Some(v) = get("CCL_QCAP") {
            self.q_cap = v;
        }
        if let Some(v) = get("CCL_LEVEL_CAP") {
            self.level_cap = v;
        }
        if let Some(v) = get("CCL_GB_MAX_BASIS") {
            self.gb_max_basis = v;
        }
        if let Some(v) = get("CCL_GB_BUDGET") {
            self.gb_max_reductions = v;
        }
        self
    }
}
