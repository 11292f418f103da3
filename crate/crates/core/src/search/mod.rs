//! Desk-scale exhaustive oracles: extremal numbers, maximum minimum degree
//! among non-3-partite family-free 3-graphs, isomorph-free enumeration and
//! a single-instance checker for the stability theorem.

mod bnb;
mod enumerate;
mod space;
mod theorem;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use bnb::{max_min_degree, naive_optimum, run_search, extremal_number};
pub use enumerate::{burnside_class_count, canonical_mask, enumerate, enumerate_family_free, CANONICAL_CAP, LABELED_CAP};
pub use space::{EdgeSpace, MASK_CAP};
pub use theorem::{
    check_main_theorem, fuzz_instance, fuzz_main_theorem, random_instance, FuzzSummary, TheoremCheck, VacuousReason, Verdict,
    ORDER_HYPOTHESIS,
};

use crate::detect::{find_f5, find_k4_minus, find_k4_shadow};
use crate::graph::{three_partition, ThreeGraph};
use crate::par::Execution;

/// Largest order accepted by the exhaustive searches.
pub const SEARCH_CAP: usize = 7;

/// Forbidden configurations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub f5: bool,
    pub k4_minus: bool,
    /// `K4` in the shadow.
    pub k4_shadow: bool,
}

impl Family {
    pub fn none() -> Self {
        Self::default()
    }

    /// `{K4^-, F5}`.
    pub fn cancellative() -> Self {
        Family { f5: true, k4_minus: true, k4_shadow: false }
    }

    pub fn f5_only() -> Self {
        Family { f5: true, ..Self::default() }
    }

    pub fn is_empty(&self) -> bool {
        !(self.f5 || self.k4_minus || self.k4_shadow)
    }

    /// Checks an instance with the detectors (independently of the pattern
    /// tables used by the searches).
    pub fn is_free(&self, h: &ThreeGraph) -> bool {
        !(self.f5 && find_f5(h).is_some()
            || self.k4_minus && find_k4_minus(h).is_some()
            || self.k4_shadow && find_k4_shadow(h).is_some())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        if self.k4_minus {
            names.push("k4minus");
        }
        if self.f5 {
            names.push("f5");
        }
        if self.k4_shadow {
            names.push("k4shadow");
        }
        f.write_str(&names.join(","))
    }
}

impl FromStr for Family {
    type Err = String;

    /// Comma-separated list of `f5`, `k4minus`, `k4shadow`, or `cancellative`.
    fn from_str(s: &str) -> Result<Self, String> {
        let mut fam = Family::none();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.to_ascii_lowercase().as_str() {
                "f5" => fam.f5 = true,
                "k4minus" | "k4-" | "k4-minus" => fam.k4_minus = true,
                "k4shadow" | "k4-shadow" => fam.k4_shadow = true,
                "cancellative" => {
                    fam.f5 = true;
                    fam.k4_minus = true;
                }
                other => return Err(format!("unknown forbidden configuration `{other}`")),
            }
        }
        Ok(fam)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    MaxEdges,
    MaxMinDegree,
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub n: usize,
    pub family: Family,
    pub mode: Mode,
    pub require_non_3partite: bool,
    /// Search isomorphism classes (orderly generation) instead of labeled
    /// graphs.
    pub iso_reduction: bool,
    /// Node limit; `None` means unlimited.
    pub budget: Option<u64>,
    pub execution: Execution,
}

impl SearchSpec {
    pub fn new(n: usize, family: Family, mode: Mode) -> Self {
        SearchSpec {
            n,
            family,
            mode,
            require_non_3partite: false,
            iso_reduction: false,
            budget: None,
            execution: Execution::default(),
        }
    }

    pub fn non_3partite(mut self) -> Self {
        self.require_non_3partite = true;
        self
    }

    pub fn reduced(mut self, on: bool) -> Self {
        self.iso_reduction = on;
        self
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    /// The objective of a candidate.
    pub fn value(&self, h: &ThreeGraph) -> usize {
        match self.mode {
            Mode::MaxEdges => h.edge_count(),
            Mode::MaxMinDegree => h.min_degree(),
        }
    }

    /// Whether `h` meets every constraint of the search spec (re-derived with the
    /// detectors and the 3-coloring routine).
    pub fn admits(&self, h: &ThreeGraph) -> bool {
        h.n() == self.n
            && self.family.is_free(h)
            && (!self.require_non_3partite || three_partition(h).map(|p| p.is_none()).unwrap_or(false))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    /// Best objective value; `None` when no graph meets the constraints.
    pub optimum: Option<usize>,
    pub witness: Option<ThreeGraph>,
    pub nodes: u64,
    /// True when the whole space was traversed, so the optimum is certified.
    pub exhaustive: bool,
}

impl SearchResult {
    /// Re-validates the witness against the search spec.
    pub fn validate(&self, spec: &SearchSpec) -> bool {
        match (&self.optimum, &self.witness) {
            (Some(v), Some(h)) => spec.admits(h) && spec.value(h) == *v,
            (None, None) => true,
            _ => false,
        }
    }
}
