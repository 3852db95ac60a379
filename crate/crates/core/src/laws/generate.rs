//! Seeded random and exhaustive instance generation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::objects::ObjectSet;
use crate::set::BipolarSoftSet;
use crate::space::ParameterSpace;
use crate::table::CellValue;

/// Largest `m * n` accepted by [`enumerate_bss`] (3^9 = 19683 sets).
pub const MAX_ENUMERABLE_CELLS: usize = 9;

/// SplitMix64, so that any generated instance is replayable from one integer.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The generator for the `index`-th instance of a stream seeded with `seed`.
    pub fn for_instance(seed: u64, index: u64) -> Self {
        let mut outer = SplitMix64::new(seed ^ index.wrapping_mul(Self::GAMMA).rotate_left(17));
        SplitMix64::new(outer.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(Self::GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound`; `bound` is tiny here, so plain widening multiply is unbiased enough.
    pub fn below(&mut self, bound: usize) -> usize {
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }
}

/// Upper limits for randomly generated spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Bounds {
    pub max_objects: usize,
    pub max_params: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_objects: 6,
            max_params: 4,
        }
    }
}

impl Bounds {
    pub fn new(max_objects: usize, max_params: usize) -> Result<Self> {
        if max_objects == 0 || max_params == 0 {
            return Err(Error::InvalidBounds(format!(
                "bounds must be positive, got {max_objects}x{max_params}"
            )));
        }
        Ok(Bounds {
            max_objects,
            max_params,
        })
    }
}

/// Universe `u1..um` with pairs `(e_k, e_{n+k})`.
pub fn standard_space(m: usize, n: usize) -> Result<Arc<ParameterSpace>> {
    let universe = (1..=m).map(|i| format!("u{i}"));
    let pairs = (1..=n).map(|k| (format!("e{k}"), format!("e{}", n + k)));
    Ok(Arc::new(ParameterSpace::new(universe, pairs)?))
}

/// A space of random size within `bounds`.
pub fn gen_space(rng: &mut SplitMix64, bounds: Bounds) -> Arc<ParameterSpace> {
    let m = 1 + rng.below(bounds.max_objects);
    let n = 1 + rng.below(bounds.max_params);
    standard_space(m, n).expect("generated sizes are positive")
}

/// Every cell independently uniform over the three states.
pub fn gen_bss_over(rng: &mut SplitMix64, space: &Arc<ParameterSpace>) -> BipolarSoftSet {
    build(space, |_, _| CellValue::ALL[rng.below(3)])
}

/// Every cell independently positive or negative, so the result is complete.
pub fn gen_complete_over(rng: &mut SplitMix64, space: &Arc<ParameterSpace>) -> BipolarSoftSet {
    build(space, |_, _| {
        if rng.below(2) == 0 {
            CellValue::Positive
        } else {
            CellValue::Negative
        }
    })
}

/// A random superset of `set` in the bipolar subset order: each cell stays or
/// moves up the chain negative < neutral < positive.
pub fn gen_superset(rng: &mut SplitMix64, set: &BipolarSoftSet) -> BipolarSoftSet {
    build(set.space(), |i, k| {
        let current = set.cell(i, k);
        let above: Vec<CellValue> = CellValue::ALL.into_iter().filter(|c| *c >= current).collect();
        above[rng.below(above.len())]
    })
}

/// A random set whose space is drawn from `bounds`, deterministic in `seed`.
pub fn gen_bss(seed: u64, bounds: Bounds) -> Result<BipolarSoftSet> {
    let bounds = Bounds::new(bounds.max_objects, bounds.max_params)?;
    let mut rng = SplitMix64::new(seed);
    let space = gen_space(&mut rng, bounds);
    Ok(gen_bss_over(&mut rng, &space))
}

/// All `3^(m*n)` sets over [`standard_space`]`(m, n)`, each exactly once.
pub fn enumerate_bss(m: usize, n: usize) -> Result<Enumeration> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidBounds(format!("bounds must be positive, got {m}x{n}")));
    }
    let cells = m.saturating_mul(n);
    if cells > MAX_ENUMERABLE_CELLS {
        return Err(Error::BoundsTooLarge(format!(
            "{m}x{n} has {cells} cells; at most {MAX_ENUMERABLE_CELLS} can be enumerated"
        )));
    }
    Ok(Enumeration {
        space: standard_space(m, n)?,
        next: 0,
        total: 3u64.pow(cells as u32),
    })
}

pub struct Enumeration {
    space: Arc<ParameterSpace>,
    next: u64,
    total: u64,
}

impl Enumeration {
    pub fn space(&self) -> &Arc<ParameterSpace> {
        &self.space
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for Enumeration {
    type Item = BipolarSoftSet;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.total {
            return None;
        }
        let mut code = self.next;
        self.next += 1;
        Some(build(&self.space, |_, _| {
            let cell = CellValue::ALL[(code % 3) as usize];
            code /= 3;
            cell
        }))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Enumeration {}

fn build(
    space: &Arc<ParameterSpace>,
    mut cell: impl FnMut(usize, usize) -> CellValue,
) -> BipolarSoftSet {
    let (m, n) = (space.num_objects(), space.num_params());
    let mut pos = vec![ObjectSet::empty(m); n];
    let mut neg = vec![ObjectSet::empty(m); n];
    for i in 0..m {
        for k in 0..n {
            match cell(i, k) {
                CellValue::Positive => pos[k].insert(i),
                CellValue::Negative => neg[k].insert(i),
                CellValue::Neutral => {}
            }
        }
    }
    BipolarSoftSet::from_parts_unchecked(Arc::clone(space), pos, neg)
}
