//! The bipolar soft set value type and its lattice operations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::ObjectSet;
use crate::space::ParameterSpace;
use crate::table::CellValue;

/// The input record for one positive parameter: its positive set `F(e)` and
/// the negative set `G(f(e))` of its negation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Assignment {
    pub param: String,
    #[serde(default)]
    pub positive: Vec<String>,
    #[serde(default)]
    pub negative: Vec<String>,
}

impl Assignment {
    pub fn new<P, I, J>(param: P, positive: I, negative: J) -> Self
    where
        P: Into<String>,
        I: IntoIterator,
        I::Item: Into<String>,
        J: IntoIterator,
        J::Item: Into<String>,
    {
        Assignment {
            param: param.into(),
            positive: positive.into_iter().map(Into::into).collect(),
            negative: negative.into_iter().map(Into::into).collect(),
        }
    }
}

/// A bipolar soft set `(F, G, E)`.
///
/// For each positive parameter `e` (by position in the space) the set stores
/// `F(e)` and `G(f(e))`. The two are disjoint at every parameter. Parameters
/// whose pair is `(∅, ∅)` are kept like any other; only display layers omit them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BipolarSoftSet {
    space: Arc<ParameterSpace>,
    pos: Vec<ObjectSet>,
    neg: Vec<ObjectSet>,
}

impl BipolarSoftSet {
    /// Validates and builds a set from per-parameter assignments. Parameters
    /// that are not mentioned get `(∅, ∅)`.
    pub fn new(
        space: Arc<ParameterSpace>,
        assignments: impl IntoIterator<Item = Assignment>,
    ) -> Result<Self> {
        let m = space.num_objects();
        let n = space.num_params();
        let mut pos = vec![ObjectSet::empty(m); n];
        let mut neg = vec![ObjectSet::empty(m); n];
        let mut seen = vec![false; n];

        for assignment in assignments {
            let k = space.param_index(&assignment.param)?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::DuplicateAssignment(assignment.param));
            }
            for id in &assignment.positive {
                pos[k].insert(space.object_index(id)?);
            }
            for id in &assignment.negative {
                neg[k].insert(space.object_index(id)?);
            }
        }
        Self::from_parts(space, pos, neg)
    }

    /// Builds a set from raw per-parameter bitsets, checking shape and disjointness.
    pub fn from_parts(
        space: Arc<ParameterSpace>,
        pos: Vec<ObjectSet>,
        neg: Vec<ObjectSet>,
    ) -> Result<Self> {
        let n = space.num_params();
        let m = space.num_objects();
        if pos.len() != n || neg.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n} parameters, got {} positive / {} negative",
                pos.len(),
                neg.len()
            )));
        }
        if let Some(bad) = pos.iter().chain(&neg).find(|s| s.universe_len() != m) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {m}-object universe, got {}",
                bad.universe_len()
            )));
        }
        let set = BipolarSoftSet { space, pos, neg };
        set.validate()?;
        Ok(set)
    }

    /// Trusted constructor for operation results whose invariant follows from the operands.
    pub(crate) fn from_parts_unchecked(
        space: Arc<ParameterSpace>,
        pos: Vec<ObjectSet>,
        neg: Vec<ObjectSet>,
    ) -> Self {
        let set = BipolarSoftSet { space, pos, neg };
        debug_assert!(set.validate().is_ok());
        set
    }

    /// Re-checks the defining constraint `F(e) ∩ G(f(e)) = ∅` at every parameter.
    pub fn validate(&self) -> Result<()> {
        for (k, (p, q)) in self.pos.iter().zip(&self.neg).enumerate() {
            if !p.is_disjoint(q) {
                let witnesses = p
                    .intersection(q)
                    .iter()
                    .map(|i| self.space.object(i).to_string())
                    .collect();
                return Err(Error::DisjointnessViolation {
                    param: self.space.positive(k).to_string(),
                    witnesses,
                });
            }
        }
        Ok(())
    }

    /// `(Φ, Ũ, E)`: every object is negative at every parameter.
    pub fn null(space: Arc<ParameterSpace>) -> Self {
        let (m, n) = (space.num_objects(), space.num_params());
        BipolarSoftSet {
            pos: vec![ObjectSet::empty(m); n],
            neg: vec![ObjectSet::full(m); n],
            space,
        }
    }

    /// `(Ũ, Φ, E)`: every object is positive at every parameter.
    pub fn absolute(space: Arc<ParameterSpace>) -> Self {
        let (m, n) = (space.num_objects(), space.num_params());
        BipolarSoftSet {
            pos: vec![ObjectSet::full(m); n],
            neg: vec![ObjectSet::empty(m); n],
            space,
        }
    }

    pub fn space(&self) -> &Arc<ParameterSpace> {
        &self.space
    }

    /// `F(e)` for the `k`-th positive parameter.
    pub fn pos(&self, k: usize) -> &ObjectSet {
        &self.pos[k]
    }

    /// `G(f(e))` for the `k`-th positive parameter.
    pub fn neg(&self, k: usize) -> &ObjectSet {
        &self.neg[k]
    }

    /// Object identifiers of `F(e)` in universe order.
    pub fn positive_of(&self, param: &str) -> Result<Vec<&str>> {
        let k = self.space.param_index(param)?;
        Ok(self.names(&self.pos[k]))
    }

    /// Object identifiers of `G(f(e))` in universe order.
    pub fn negative_of(&self, param: &str) -> Result<Vec<&str>> {
        let k = self.space.param_index(param)?;
        Ok(self.names(&self.neg[k]))
    }

    pub(crate) fn names(&self, set: &ObjectSet) -> Vec<&str> {
        set.iter().map(|i| self.space.object(i)).collect()
    }

    /// The tabular cell of object `i` under parameter `k`.
    pub fn cell(&self, i: usize, k: usize) -> CellValue {
        if self.pos[k].contains(i) {
            CellValue::Positive
        } else if self.neg[k].contains(i) {
            CellValue::Negative
        } else {
            CellValue::Neutral
        }
    }

    /// True iff no cell is neutral, i.e. `F(e) ∪ G(f(e)) = U` for every `e`.
    pub fn is_complete(&self) -> bool {
        self.pos
            .iter()
            .zip(&self.neg)
            .all(|(p, q)| p.union(q).is_full())
    }

    /// Per-parameter assignments in parameter order, including `(∅, ∅)` ones.
    pub fn assignments(&self) -> Vec<Assignment> {
        (0..self.space.num_params())
            .map(|k| {
                Assignment::new(
                    self.space.positive(k),
                    self.names(&self.pos[k]),
                    self.names(&self.neg[k]),
                )
            })
            .collect()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    /// `A ⊑ B`: `F_A(e) ⊆ F_B(e)` and `G_B(f(e)) ⊆ G_A(f(e))` for all `e`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        Ok(self
            .pos
            .iter()
            .zip(&other.pos)
            .all(|(a, b)| a.is_subset(b))
            && self
                .neg
                .iter()
                .zip(&other.neg)
                .all(|(a, b)| b.is_subset(a)))
    }

    /// Mutual inclusion, which coincides with pointwise equality.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.pos == other.pos && self.neg == other.neg)
    }

    /// `A ⊔ B`: positive parts are united, negative parts intersected.
    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(self.zip_with(other, ObjectSet::union, ObjectSet::intersection))
    }

    /// `A ⊓ B`: positive parts are intersected, negative parts united.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(self.zip_with(other, ObjectSet::intersection, ObjectSet::union))
    }

    /// Swaps the positive and negative part at every parameter.
    pub fn complement(&self) -> Self {
        BipolarSoftSet {
            space: Arc::clone(&self.space),
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        on_pos: fn(&ObjectSet, &ObjectSet) -> ObjectSet,
        on_neg: fn(&ObjectSet, &ObjectSet) -> ObjectSet,
    ) -> Self {
        let pos = self.pos.iter().zip(&other.pos).map(|(a, b)| on_pos(a, b)).collect();
        let neg = self.neg.iter().zip(&other.neg).map(|(a, b)| on_neg(a, b)).collect();
        Self::from_parts_unchecked(Arc::clone(&self.space), pos, neg)
    }
}

impl fmt::Debug for BipolarSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for k in 0..self.space.num_params() {
            map.entry(
                &self.space.positive(k),
                &(self.names(&self.pos[k]), self.names(&self.neg[k])),
            );
        }
        map.finish()
    }
}

/// Set-of-ordered-pairs notation, e.g. `{<(e1,{u1,u3}),(e2,{u2})>}`, with
/// `(∅, ∅)` pairs left out.
impl fmt::Display for BipolarSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let braces = |set: &ObjectSet| format!("{{{}}}", self.names(set).join(","));
        let entries: Vec<String> = (0..self.space.num_params())
            .filter(|&k| !(self.pos[k].is_empty() && self.neg[k].is_empty()))
            .map(|k| {
                format!(
                    "<({},{}),({},{})>",
                    self.space.positive(k),
                    braces(&self.pos[k]),
                    self.space.negative(k),
                    braces(&self.neg[k])
                )
            })
            .collect();
        write!(f, "{{{}}}", entries.join(", "))
    }
}
