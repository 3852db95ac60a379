//! And/or-products over the product parameter space `E1 × E1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::objects::ObjectSet;
use crate::set::BipolarSoftSet;
use crate::space::ParameterSpace;

/// `E1 × E1` in lexicographic base order, negated componentwise:
/// `(e, e') ↦ (f(e), f(e'))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductParameterSpace {
    base: Arc<ParameterSpace>,
    space: Arc<ParameterSpace>,
}

impl ProductParameterSpace {
    pub fn new(base: Arc<ParameterSpace>) -> Result<Self> {
        let n = base.num_params();
        let mut pairs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                pairs.push((
                    composite(base.positive(i), base.positive(j)),
                    composite(base.negative(i), base.negative(j)),
                ));
            }
        }
        let space = Arc::new(ParameterSpace::new(base.universe().iter().cloned(), pairs)?);
        Ok(ProductParameterSpace { base, space })
    }

    pub fn base(&self) -> &Arc<ParameterSpace> {
        &self.base
    }

    /// The product as an ordinary parameter space; products of products work on it unchanged.
    pub fn space(&self) -> &Arc<ParameterSpace> {
        &self.space
    }

    /// Base parameter positions `(i, j)` of product parameter `k`.
    pub fn components(&self, k: usize) -> (usize, usize) {
        let n = self.base.num_params();
        (k / n, k % n)
    }

    /// Position of `(e_i, e_j)` in the product.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.base.num_params() + j
    }
}

/// Identifier of a product parameter, e.g. `(e1,e3)`.
pub fn composite(left: &str, right: &str) -> String {
    format!("({left},{right})")
}

/// `A ∧ B`: `pos(e,e') = A.pos(e) ∩ B.pos(e')`, `neg(e,e') = A.neg(e) ∪ B.neg(e')`.
pub fn and_product(a: &BipolarSoftSet, b: &BipolarSoftSet) -> Result<BipolarSoftSet> {
    combine(a, b, ObjectSet::intersection, ObjectSet::union)
}

/// `A ∨ B`: `pos(e,e') = A.pos(e) ∪ B.pos(e')`, `neg(e,e') = A.neg(e) ∩ B.neg(e')`.
pub fn or_product(a: &BipolarSoftSet, b: &BipolarSoftSet) -> Result<BipolarSoftSet> {
    combine(a, b, ObjectSet::union, ObjectSet::intersection)
}

fn combine(
    a: &BipolarSoftSet,
    b: &BipolarSoftSet,
    on_pos: fn(&ObjectSet, &ObjectSet) -> ObjectSet,
    on_neg: fn(&ObjectSet, &ObjectSet) -> ObjectSet,
) -> Result<BipolarSoftSet> {
    if a.space() != b.space() {
        return Err(Error::SpaceMismatch);
    }
    let product = ProductParameterSpace::new(Arc::clone(a.space()))?;
    let n = a.space().num_params();
    let mut pos = Vec::with_capacity(n * n);
    let mut neg = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            pos.push(on_pos(a.pos(i), b.pos(j)));
            neg.push(on_neg(a.neg(i), b.neg(j)));
        }
    }
    Ok(BipolarSoftSet::from_parts_unchecked(
        Arc::clone(product.space()),
        pos,
        neg,
    ))
}
