//! (σ,ρ) vertex-subset problems on linear decompositions.
//!
//! A set `X` is a (σ,ρ)-set when every vertex in `X` has a number of
//! neighbours in `X` from σ and every other vertex one from ρ.

mod classes;
mod membership;
mod solve;

pub use classes::{bounds, enumerate_classes, nec_of_decomposition, nec_profile, Bounds, ClassFamily, CutNec, DNeighborhood};
pub use membership::MembershipSet;
pub use solve::{brute_force_sigma_rho, is_sigma_rho_set, solve_sigma_rho, SigmaRhoSolution, BRUTE_FORCE_LIMIT};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Objective {
    Maximize,
    Minimize,
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" | "maximize" => Ok(Objective::Maximize),
            "min" | "minimize" => Ok(Objective::Minimize),
            _ => Err(Error::contract(format!("unknown objective {s:?}, expected max or min"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SigmaRhoSpec {
    sigma: MembershipSet,
    rho: MembershipSet,
    objective: Objective,
    d: usize,
}

impl SigmaRhoSpec {
    /// Rejects an empty σ or ρ.
    pub fn new(sigma: MembershipSet, rho: MembershipSet, objective: Objective) -> Result<Self> {
        for (name, mu) in [("sigma", sigma), ("rho", rho)] {
            if mu.is_empty() {
                return Err(Error::Membership {
                    input: mu.to_string(),
                    reason: format!("{name} must not be empty"),
                });
            }
        }
        Ok(SigmaRhoSpec {
            sigma,
            rho,
            objective,
            d: sigma.d().max(rho.d()),
        })
    }

    /// Maximum induced matching: `σ = {1}`, `ρ = ℕ`, maximised.
    pub fn mim() -> Self {
        Self::new(MembershipSet::finite([1]), MembershipSet::NATURALS, Objective::Maximize).expect("non-empty")
    }

    /// Maximum independent set: `σ = {0}`, `ρ = ℕ`, maximised.
    pub fn independent_set() -> Self {
        Self::new(MembershipSet::finite([0]), MembershipSet::NATURALS, Objective::Maximize).expect("non-empty")
    }

    /// Minimum dominating set: `σ = ℕ`, `ρ = ℕ ∖ {0}`, minimised.
    pub fn dominating_set() -> Self {
        Self::new(MembershipSet::NATURALS, MembershipSet::cofinite([0]), Objective::Minimize).expect("non-empty")
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "mim" => Some(Self::mim()),
            "independent-set" => Some(Self::independent_set()),
            "dominating-set" => Some(Self::dominating_set()),
            _ => None,
        }
    }

    pub fn sigma(&self) -> MembershipSet {
        self.sigma
    }

    pub fn rho(&self) -> MembershipSet {
        self.rho
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    /// `max(d(σ), d(ρ))`.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Whether a vertex with `count` neighbours in `X` satisfies its constraint.
    pub fn accepts(&self, in_x: bool, count: usize) -> bool {
        if in_x {
            self.sigma.contains(count)
        } else {
            self.rho.contains(count)
        }
    }
}

impl fmt::Display for SigmaRhoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let objective = match self.objective {
            Objective::Maximize => "max",
            Objective::Minimize => "min",
        };
        write!(f, "({}, {}) {objective}", self.sigma, self.rho)
    }
}
