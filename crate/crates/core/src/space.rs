use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// The universe `U` together with the positive parameters `E1`, the negative
/// parameters `E2` and the negation bijection between them.
///
/// The bijection is positional: `positive(k)` is negated by `negative(k)`.
#[derive(Clone)]
pub struct ParameterSpace {
    universe: Vec<String>,
    positive: Vec<String>,
    negative: Vec<String>,
    object_index: HashMap<String, usize>,
    positive_index: HashMap<String, usize>,
}

impl ParameterSpace {
    /// Builds a space from the universe and the list of `(e, f(e))` pairs.
    pub fn new<U, P, N>(universe: U, pairs: impl IntoIterator<Item = (P, N)>) -> Result<Self>
    where
        U: IntoIterator,
        U::Item: Into<String>,
        P: Into<String>,
        N: Into<String>,
    {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let (positive, negative): (Vec<String>, Vec<String>) = pairs
            .into_iter()
            .map(|(p, n)| (p.into(), n.into()))
            .unzip();

        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if positive.is_empty() {
            return Err(Error::EmptyParameters);
        }

        let mut object_index = HashMap::with_capacity(universe.len());
        for (idx, id) in universe.iter().enumerate() {
            if object_index.insert(id.clone(), idx).is_some() {
                return Err(Error::DuplicateObject(id.clone()));
            }
        }

        // E1 and E2 must be disjoint, so both sides share one duplicate check.
        let mut seen = HashSet::with_capacity(2 * positive.len());
        for id in positive.iter().chain(&negative) {
            if !seen.insert(id.as_str()) {
                return Err(Error::DuplicateParameter(id.clone()));
            }
        }
        let positive_index = positive
            .iter()
            .enumerate()
            .map(|(idx, id)| (id.clone(), idx))
            .collect();

        Ok(ParameterSpace {
            universe,
            positive,
            negative,
            object_index,
            positive_index,
        })
    }

    /// Number of objects, `m`.
    pub fn num_objects(&self) -> usize {
        self.universe.len()
    }

    /// Number of positive parameters, `n`.
    pub fn num_params(&self) -> usize {
        self.positive.len()
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn positive_params(&self) -> &[String] {
        &self.positive
    }

    pub fn negative_params(&self) -> &[String] {
        &self.negative
    }

    pub fn object(&self, idx: usize) -> &str {
        &self.universe[idx]
    }

    pub fn positive(&self, idx: usize) -> &str {
        &self.positive[idx]
    }

    /// The negation `f(e)` of the `idx`-th positive parameter.
    pub fn negative(&self, idx: usize) -> &str {
        &self.negative[idx]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.positive
            .iter()
            .zip(&self.negative)
            .map(|(p, n)| (p.as_str(), n.as_str()))
    }

    pub fn object_index(&self, id: &str) -> Result<usize> {
        self.object_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownObject(id.to_string()))
    }

    pub fn param_index(&self, id: &str) -> Result<usize> {
        self.positive_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownParameter(id.to_string()))
    }

    /// Applies the negation bijection to a positive parameter.
    pub fn negate(&self, id: &str) -> Result<&str> {
        Ok(self.negative(self.param_index(id)?))
    }
}

impl PartialEq for ParameterSpace {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe
            && self.positive == other.positive
            && self.negative == other.negative
    }
}

impl Eq for ParameterSpace {}

impl std::hash::Hash for ParameterSpace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.positive.hash(state);
        self.negative.hash(state);
    }
}

impl fmt::Debug for ParameterSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParameterSpace")
            .field("universe", &self.universe)
            .field("pairs", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn houses() -> ParameterSpace {
        ParameterSpace::new(
            ["u1", "u2", "u3"],
            [("e1", "e2"), ("e3", "e4")],
        )
        .unwrap()
    }

    #[test]
    fn lookups() {
        let space = houses();
        assert_eq!(space.num_objects(), 3);
        assert_eq!(space.num_params(), 2);
        assert_eq!(space.object_index("u3").unwrap(), 2);
        assert_eq!(space.param_index("e3").unwrap(), 1);
        assert_eq!(space.negate("e3").unwrap(), "e4");
        assert_eq!(
            space.param_index("e4"),
            Err(Error::UnknownParameter("e4".into()))
        );
        assert_eq!(space.object_index("u9"), Err(Error::UnknownObject("u9".into())));
    }

    #[test]
    fn rejects_degenerate_inputs() {
        let none: [(&str, &str); 0] = [];
        assert_eq!(
            ParameterSpace::new(Vec::<String>::new(), [("e1", "e2")]).unwrap_err(),
            Error::EmptyUniverse
        );
        assert_eq!(
            ParameterSpace::new(["u1"], none).unwrap_err(),
            Error::EmptyParameters
        );
        assert_eq!(
            ParameterSpace::new(["u1", "u1"], [("e1", "e2")]).unwrap_err(),
            Error::DuplicateObject("u1".into())
        );
        assert_eq!(
            ParameterSpace::new(["u1"], [("e1", "e2"), ("e1", "e3")]).unwrap_err(),
            Error::DuplicateParameter("e1".into())
        );
        // E1 and E2 must be disjoint.
        assert_eq!(
            ParameterSpace::new(["u1"], [("e1", "e2"), ("e2", "e3")]).unwrap_err(),
            Error::DuplicateParameter("e2".into())
        );
        assert_eq!(
            ParameterSpace::new(["u1"], [("e1", "e1")]).unwrap_err(),
            Error::DuplicateParameter("e1".into())
        );
    }

    #[test]
    fn equality_is_structural_and_ordered() {
        let a = houses();
        let b = ParameterSpace::new(["u1", "u2", "u3"], [("e1", "e2"), ("e3", "e4")]).unwrap();
        let c = ParameterSpace::new(["u2", "u1", "u3"], [("e1", "e2"), ("e3", "e4")]).unwrap();
        let d = ParameterSpace::new(["u1", "u2", "u3"], [("e1", "e4"), ("e3", "e2")]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }
}
