//! Order caps for the exhaustive algorithms.

use std::env;

/// Environment variable that raises the order caps.
pub const ORDER_CAP_ENV: &str = "SKB_ORDER_CAP";

/// Caps on carrier order for the different families of exhaustive checks.
///
/// Every check in this crate is brute force over the carrier, so each family
/// refuses inputs past its cap instead of silently running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Limits {
    /// Group validation (O(n^3) associativity).
    pub group_order: usize,
    /// Brace validation and triple-quantified brace checks.
    pub brace_order: usize,
    /// Ideal-lattice enumeration and the lattice-based oracles.
    pub lattice_order: usize,
    /// Exhaustive enumeration of braces of a given order.
    pub enumerate_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            group_order: 64,
            brace_order: 16,
            lattice_order: 24,
            enumerate_order: 6,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `SKB_ORDER_CAP` when it is set to an integer.
    ///
    /// The variable sets the enumeration cap exactly and raises (never lowers)
    /// the other caps.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = env::var(ORDER_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits = limits.with_override(cap);
        }
        limits
    }

    pub fn with_override(self, cap: usize) -> Self {
        Limits {
            group_order: self.group_order.max(cap),
            brace_order: self.brace_order.max(cap),
            lattice_order: self.lattice_order.max(cap),
            enumerate_order: cap,
        }
    }

    pub fn unbounded() -> Self {
        Limits {
            group_order: usize::MAX,
            brace_order: usize::MAX,
            lattice_order: usize::MAX,
            enumerate_order: usize::MAX,
        }
    }
}
