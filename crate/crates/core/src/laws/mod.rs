//! Brute-force checking of the algebraic laws over generated instances.
//!
//! Instances come either from exhaustive enumeration of every set over a
//! small space or from a seeded random stream. A failing law carries the
//! first counterexample found, with its operands serialized so the violation
//! can be replayed.

pub mod catalogue;
pub mod generate;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::document::Document;
use crate::error::{Error, Result};
use crate::set::BipolarSoftSet;

pub use catalogue::{Expectation, Law};
pub use generate::{enumerate_bss, gen_bss, Bounds, SplitMix64};

/// Upper limit on `3^(m*n)` raised to the law's arity in exhaustive mode.
pub const MAX_EXHAUSTIVE_TUPLES: u64 = 100_000_000;

/// Where a law disagrees on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Divergence {
    pub param: Option<String>,
    pub object: Option<String>,
    pub detail: String,
}

pub type Outcome = std::result::Result<(), Divergence>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum InstanceSource {
    /// Every operand tuple over the `objects × params` standard space.
    Exhaustive { objects: usize, params: usize },
    /// `instances` tuples, the `i`-th drawn from `SplitMix64::for_instance(seed, i)`.
    Random { seed: u64, instances: u64, bounds: Bounds },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Position of the failing tuple in the source's iteration order.
    pub instance: u64,
    pub operands: Vec<Document>,
    #[serde(flatten)]
    pub divergence: Divergence,
}

impl Counterexample {
    /// Re-evaluates `law` on the stored operands.
    pub fn replay(&self, law: &Law) -> Result<Outcome> {
        let sets = self
            .operands
            .iter()
            .cloned()
            .map(Document::into_set)
            .collect::<Result<Vec<_>>>()?;
        if sets.windows(2).any(|w| w[0].space() != w[1].space()) {
            return Err(Error::SpaceMismatch);
        }
        let refs: Vec<&BipolarSoftSet> = sets.iter().collect();
        Ok((law.check)(&refs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law_id: String,
    pub statement: String,
    pub expectation: Expectation,
    pub source: InstanceSource,
    pub instances_checked: u64,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    /// Whether the outcome is the expected one: must-hold laws hold, must-fail laws fail.
    pub fn as_expected(&self) -> bool {
        match self.expectation {
            Expectation::MustHold => self.holds,
            Expectation::MustFail => !self.holds,
        }
    }

    /// A must-hold law that failed.
    pub fn is_violation(&self) -> bool {
        self.expectation == Expectation::MustHold && !self.holds
    }
}

pub fn check_law(law_id: &str, source: InstanceSource) -> Result<LawReport> {
    let law = catalogue::find(law_id).ok_or_else(|| Error::UnknownLaw(law_id.to_string()))?;
    check(&law, source)
}

/// Checks several laws in parallel; reports come back in the order of `law_ids`.
pub fn check_laws(law_ids: &[&str], source: InstanceSource) -> Result<Vec<LawReport>> {
    let laws = law_ids
        .iter()
        .map(|id| catalogue::find(id).ok_or_else(|| Error::UnknownLaw(id.to_string())))
        .collect::<Result<Vec<_>>>()?;
    laws.par_iter().map(|law| check(law, source)).collect()
}

pub fn check(law: &Law, source: InstanceSource) -> Result<LawReport> {
    let (instances_checked, failure) = match source {
        InstanceSource::Exhaustive { objects, params } => exhaustive(law, objects, params)?,
        InstanceSource::Random {
            seed,
            instances,
            bounds,
        } => random(law, seed, instances, bounds)?,
    };
    let counterexample = failure.map(|(instance, operands, divergence)| Counterexample {
        instance,
        operands: operands.iter().map(Document::of).collect(),
        divergence,
    });
    Ok(LawReport {
        law_id: law.id.to_string(),
        statement: law.statement.to_string(),
        expectation: law.expectation,
        source,
        instances_checked,
        holds: counterexample.is_none(),
        counterexample,
    })
}

type Failure = (u64, Vec<BipolarSoftSet>, Divergence);

fn exhaustive(law: &Law, objects: usize, params: usize) -> Result<(u64, Option<Failure>)> {
    let all: Vec<BipolarSoftSet> = enumerate_bss(objects, params)?.collect();
    let tuples = (all.len() as u64).checked_pow(law.arity as u32);
    if tuples.is_none_or(|t| t > MAX_EXHAUSTIVE_TUPLES) {
        return Err(Error::BoundsTooLarge(format!(
            "{} sets to the power {} exceeds {MAX_EXHAUSTIVE_TUPLES} tuples for `{}`",
            all.len(),
            law.arity,
            law.id
        )));
    }

    let mut search = Exhaustive {
        law,
        all: &all,
        prefix: Vec::with_capacity(law.arity),
        position: 0,
        checked: 0,
    };
    let failure = search.descend();
    Ok((search.checked, failure))
}

struct Exhaustive<'a> {
    law: &'a Law,
    all: &'a [BipolarSoftSet],
    prefix: Vec<&'a BipolarSoftSet>,
    /// Lexicographic index of the current tuple among all `len^arity` tuples.
    position: u64,
    checked: u64,
}

impl<'a> Exhaustive<'a> {
    fn descend(&mut self) -> Option<Failure> {
        if self.prefix.len() == self.law.arity {
            self.checked += 1;
            return (self.law.check)(&self.prefix).err().map(|d| {
                let operands = self.prefix.iter().map(|s| (*s).clone()).collect();
                (self.position, operands, d)
            });
        }
        let remaining = (self.law.arity - self.prefix.len() - 1) as u32;
        let stride = (self.all.len() as u64).pow(remaining);
        let base = self.position;
        for (idx, set) in self.all.iter().enumerate() {
            self.position = base + idx as u64 * stride;
            self.prefix.push(set);
            let found = if self.law.admits(&self.prefix) {
                self.descend()
            } else {
                None
            };
            self.prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        self.position = base;
        None
    }
}

fn random(law: &Law, seed: u64, instances: u64, bounds: Bounds) -> Result<(u64, Option<Failure>)> {
    let bounds = Bounds::new(bounds.max_objects, bounds.max_params)?;
    let mut checked = 0;
    for index in 0..instances {
        let mut rng = SplitMix64::for_instance(seed, index);
        let space = generate::gen_space(&mut rng, bounds);
        let operands = law.sample(&mut rng, &space);
        let refs: Vec<&BipolarSoftSet> = operands.iter().collect();
        if !(1..=refs.len()).all(|len| law.admits(&refs[..len])) {
            continue;
        }
        checked += 1;
        if let Err(divergence) = (law.check)(&refs) {
            return Ok((checked, Some((index, operands, divergence))));
        }
    }
    Ok((checked, None))
}
