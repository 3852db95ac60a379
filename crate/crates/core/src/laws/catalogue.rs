//! The registered algebraic laws.
//!
//! Each law is a predicate over a tuple of operands sharing one space. Laws
//! with a hypothesis (transitivity, monotonicity) carry a guard that prunes
//! tuples whose prefix already falsifies it; only tuples passing every guard
//! count as checked instances.

use crate::laws::generate::{gen_bss_over, gen_complete_over, gen_superset, SplitMix64};
use crate::laws::{Divergence, Outcome};
use crate::product::{and_product, or_product, ProductParameterSpace};
use crate::set::BipolarSoftSet;
use std::sync::Arc;

use crate::space::ParameterSpace;

type Bss = BipolarSoftSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    MustHold,
    /// A statement printed without a needed hypothesis; the oracle must find a witness.
    MustFail,
}

/// How random operand tuples are drawn for a law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sampler {
    /// Independent operands, a quarter of them complete.
    Independent,
    /// `(A, B, C)` with `A ⊑ B ⊑ C`.
    Chain,
    /// `(A, B, C, D)` with `A ⊑ B` and `C ⊑ D`.
    TwoChains,
}

#[derive(Clone)]
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub arity: usize,
    pub expectation: Expectation,
    pub sampler: Sampler,
    /// Called on every prefix of a candidate tuple; `false` skips the tuple.
    pub guard: Option<fn(&[&Bss]) -> bool>,
    pub check: fn(&[&Bss]) -> Outcome,
}

impl std::fmt::Debug for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("expectation", &self.expectation)
            .finish()
    }
}

impl Law {
    pub fn admits(&self, prefix: &[&Bss]) -> bool {
        self.guard.is_none_or(|g| g(prefix))
    }

    pub fn sample(&self, rng: &mut SplitMix64, space: &Arc<ParameterSpace>) -> Vec<Bss> {
        let draw = |rng: &mut SplitMix64| {
            if rng.below(4) == 0 {
                gen_complete_over(rng, space)
            } else {
                gen_bss_over(rng, space)
            }
        };
        match self.sampler {
            Sampler::Independent => (0..self.arity).map(|_| draw(rng)).collect(),
            Sampler::Chain => {
                let a = draw(rng);
                let b = gen_superset(rng, &a);
                let c = gen_superset(rng, &b);
                vec![a, b, c]
            }
            Sampler::TwoChains => {
                let a = draw(rng);
                let b = gen_superset(rng, &a);
                let c = draw(rng);
                let d = gen_superset(rng, &c);
                vec![a, b, c, d]
            }
        }
    }
}

pub fn find(id: &str) -> Option<Law> {
    catalogue().into_iter().find(|law| law.id == id)
}

fn law(id: &'static str, statement: &'static str, arity: usize, check: fn(&[&Bss]) -> Outcome) -> Law {
    Law {
        id,
        statement,
        arity,
        expectation: Expectation::MustHold,
        sampler: Sampler::Independent,
        guard: None,
        check,
    }
}

fn must_fail(mut l: Law) -> Law {
    l.expectation = Expectation::MustFail;
    l
}

fn chain(mut l: Law) -> Law {
    l.sampler = Sampler::Chain;
    l.guard = Some(|p| match p.len() {
        2 => sub(p[0], p[1]),
        3 => sub(p[1], p[2]),
        _ => true,
    });
    l
}

fn two_chains(mut l: Law) -> Law {
    l.sampler = Sampler::TwoChains;
    l.guard = Some(|p| match p.len() {
        2 => sub(p[0], p[1]),
        4 => sub(p[2], p[3]),
        _ => true,
    });
    l
}

/// Every registered law, in publication order.
pub fn catalogue() -> Vec<Law> {
    vec![
        // Subset order.
        law("subset-reflexive", "A ⊑ A", 1, |x| {
            holds(sub(x[0], x[0]), || "A ⋢ A".into())
        }),
        chain(law("subset-transitive", "A ⊑ B and B ⊑ C imply A ⊑ C", 3, |x| {
            holds(sub(x[0], x[2]), || "A ⋢ C".into())
        })),
        law("subset-null-bottom", "(Φ,Ũ,E) ⊑ A", 1, |x| {
            holds(sub(&null(x[0]), x[0]), || "null ⋢ A".into())
        }),
        law("subset-absolute-top", "A ⊑ (Ũ,Φ,E)", 1, |x| {
            holds(sub(x[0], &absolute(x[0])), || "A ⋢ absolute".into())
        }),
        law(
            "equality-mutual-subset",
            "A = B iff A ⊑ B and B ⊑ A",
            2,
            |x| {
                let mutual = sub(x[0], x[1]) && sub(x[1], x[0]);
                let equal = x[0].equals(x[1]).expect("same space");
                holds(mutual == equal, || format!("mutual inclusion {mutual}, equality {equal}"))
            },
        ),
        // Union.
        law("union-idempotent", "A ⊔ A = A", 1, |x| {
            same("A ⊔ A", &union(x[0], x[0]), "A", x[0])
        }),
        law("union-null-identity", "A ⊔ (Φ,Ũ,E) = A", 1, |x| {
            same("A ⊔ null", &union(x[0], &null(x[0])), "A", x[0])
        }),
        law("union-absolute-absorbing", "A ⊔ (Ũ,Φ,E) = (Ũ,Φ,E)", 1, |x| {
            let top = absolute(x[0]);
            same("A ⊔ absolute", &union(x[0], &top), "absolute", &top)
        }),
        law("union-commutative", "A ⊔ B = B ⊔ A", 2, |x| {
            same("A ⊔ B", &union(x[0], x[1]), "B ⊔ A", &union(x[1], x[0]))
        }),
        law("union-associative", "A ⊔ (B ⊔ C) = (A ⊔ B) ⊔ C", 3, |x| {
            same(
                "A ⊔ (B ⊔ C)",
                &union(x[0], &union(x[1], x[2])),
                "(A ⊔ B) ⊔ C",
                &union(&union(x[0], x[1]), x[2]),
            )
        }),
        law("union-absorption", "A ⊔ (A ⊓ B) = A", 2, |x| {
            same("A ⊔ (A ⊓ B)", &union(x[0], &inter(x[0], x[1])), "A", x[0])
        }),
        // Intersection.
        law("intersection-idempotent", "A ⊓ A = A", 1, |x| {
            same("A ⊓ A", &inter(x[0], x[0]), "A", x[0])
        }),
        law("intersection-null-absorbing", "A ⊓ (Φ,Ũ,E) = (Φ,Ũ,E)", 1, |x| {
            let bottom = null(x[0]);
            same("A ⊓ null", &inter(x[0], &bottom), "null", &bottom)
        }),
        law("intersection-absolute-identity", "A ⊓ (Ũ,Φ,E) = A", 1, |x| {
            same("A ⊓ absolute", &inter(x[0], &absolute(x[0])), "A", x[0])
        }),
        law("intersection-commutative", "A ⊓ B = B ⊓ A", 2, |x| {
            same("A ⊓ B", &inter(x[0], x[1]), "B ⊓ A", &inter(x[1], x[0]))
        }),
        law("intersection-associative", "A ⊓ (B ⊓ C) = (A ⊓ B) ⊓ C", 3, |x| {
            same(
                "A ⊓ (B ⊓ C)",
                &inter(x[0], &inter(x[1], x[2])),
                "(A ⊓ B) ⊓ C",
                &inter(&inter(x[0], x[1]), x[2]),
            )
        }),
        law("intersection-absorption", "A ⊓ (A ⊔ B) = A", 2, |x| {
            same("A ⊓ (A ⊔ B)", &inter(x[0], &union(x[0], x[1])), "A", x[0])
        }),
        // Distributivity.
        law(
            "distributive-intersection-over-union",
            "A ⊓ (B ⊔ C) = (A ⊓ B) ⊔ (A ⊓ C)",
            3,
            |x| {
                same(
                    "A ⊓ (B ⊔ C)",
                    &inter(x[0], &union(x[1], x[2])),
                    "(A ⊓ B) ⊔ (A ⊓ C)",
                    &union(&inter(x[0], x[1]), &inter(x[0], x[2])),
                )
            },
        ),
        law(
            "distributive-union-over-intersection",
            "A ⊔ (B ⊓ C) = (A ⊔ B) ⊓ (A ⊔ C)",
            3,
            |x| {
                same(
                    "A ⊔ (B ⊓ C)",
                    &union(x[0], &inter(x[1], x[2])),
                    "(A ⊔ B) ⊓ (A ⊔ C)",
                    &inter(&union(x[0], x[1]), &union(x[0], x[2])),
                )
            },
        ),
        // Complement.
        law("complement-involution", "(Aᶜ)ᶜ = A", 1, |x| {
            same("(Aᶜ)ᶜ", &x[0].complement().complement(), "A", x[0])
        }),
        law("complement-null", "(Φ,Ũ,E)ᶜ = (Ũ,Φ,E)", 1, |x| {
            same("nullᶜ", &null(x[0]).complement(), "absolute", &absolute(x[0]))
        }),
        law("complement-absolute", "(Ũ,Φ,E)ᶜ = (Φ,Ũ,E)", 1, |x| {
            same("absoluteᶜ", &absolute(x[0]).complement(), "null", &null(x[0]))
        }),
        // De Morgan.
        law("demorgan-union", "(A ⊔ B)ᶜ = Aᶜ ⊓ Bᶜ", 2, |x| {
            same(
                "(A ⊔ B)ᶜ",
                &union(x[0], x[1]).complement(),
                "Aᶜ ⊓ Bᶜ",
                &inter(&x[0].complement(), &x[1].complement()),
            )
        }),
        law("demorgan-intersection", "(A ⊓ B)ᶜ = Aᶜ ⊔ Bᶜ", 2, |x| {
            same(
                "(A ⊓ B)ᶜ",
                &inter(x[0], x[1]).complement(),
                "Aᶜ ⊔ Bᶜ",
                &union(&x[0].complement(), &x[1].complement()),
            )
        }),
        law("demorgan-or-product", "(A ∨ B)ᶜ = Aᶜ ∧ Bᶜ", 2, |x| {
            same(
                "(A ∨ B)ᶜ",
                &or(x[0], x[1]).complement(),
                "Aᶜ ∧ Bᶜ",
                &and(&x[0].complement(), &x[1].complement()),
            )
        }),
        law("demorgan-and-product", "(A ∧ B)ᶜ = Aᶜ ∨ Bᶜ", 2, |x| {
            same(
                "(A ∧ B)ᶜ",
                &and(x[0], x[1]).complement(),
                "Aᶜ ∨ Bᶜ",
                &or(&x[0].complement(), &x[1].complement()),
            )
        }),
        law(
            "product-diagonal",
            "(A ∧ A)(e,e) = (A ∨ A)(e,e) = A(e)",
            1,
            |x| {
                let a = x[0];
                let product = ProductParameterSpace::new(Arc::clone(a.space())).expect("product space");
                let (conj, disj) = (and(a, a), or(a, a));
                for k in 0..a.space().num_params() {
                    let d = product.index(k, k);
                    for (name, p) in [("A ∧ A", &conj), ("A ∨ A", &disj)] {
                        if p.pos(d) != a.pos(k) || p.neg(d) != a.neg(k) {
                            return Err(Divergence {
                                param: Some(a.space().positive(k).to_string()),
                                object: None,
                                detail: format!("{name} differs from A on the diagonal"),
                            });
                        }
                    }
                }
                Ok(())
            },
        ),
        // Excluded middle, corrected and as printed.
        law(
            "excluded-middle-union",
            "A ⊔ Aᶜ has G = ∅ and F(e) = F_A(e) ∪ G_A(f(e))",
            1,
            |x| {
                let a = x[0];
                let joined = union(a, &a.complement());
                for k in 0..a.space().num_params() {
                    let param = || Some(a.space().positive(k).to_string());
                    if !joined.neg(k).is_empty() {
                        return Err(Divergence { param: param(), object: None, detail: "negative part is not empty".into() });
                    }
                    if *joined.pos(k) != a.pos(k).union(a.neg(k)) {
                        return Err(Divergence { param: param(), object: None, detail: "positive part is not F ∪ G".into() });
                    }
                }
                Ok(())
            },
        ),
        law(
            "excluded-middle-union-iff-complete",
            "A ⊔ Aᶜ = (Ũ,Φ,E) iff A is complete",
            1,
            |x| {
                let a = x[0];
                let is_top = union(a, &a.complement()) == absolute(a);
                let complete = a.is_complete();
                holds(is_top == complete, || format!("A ⊔ Aᶜ = absolute is {is_top}, completeness is {complete}"))
            },
        ),
        must_fail(law(
            "excluded-middle-unconditional",
            "A ⊔ Aᶜ = (Ũ,Φ,E)",
            1,
            |x| same("A ⊔ Aᶜ", &union(x[0], &x[0].complement()), "absolute", &absolute(x[0])),
        )),
        law(
            "excluded-middle-intersection",
            "A ⊓ Aᶜ has F = ∅ and G(f(e)) = F_A(e) ∪ G_A(f(e))",
            1,
            |x| {
                let a = x[0];
                let met = inter(a, &a.complement());
                for k in 0..a.space().num_params() {
                    let param = || Some(a.space().positive(k).to_string());
                    if !met.pos(k).is_empty() {
                        return Err(Divergence { param: param(), object: None, detail: "positive part is not empty".into() });
                    }
                    if *met.neg(k) != a.pos(k).union(a.neg(k)) {
                        return Err(Divergence { param: param(), object: None, detail: "negative part is not F ∪ G".into() });
                    }
                }
                Ok(())
            },
        ),
        law(
            "excluded-middle-intersection-iff-complete",
            "A ⊓ Aᶜ = (Φ,Ũ,E) iff A is complete",
            1,
            |x| {
                let a = x[0];
                let is_bottom = inter(a, &a.complement()) == null(a);
                let complete = a.is_complete();
                holds(is_bottom == complete, || format!("A ⊓ Aᶜ = null is {is_bottom}, completeness is {complete}"))
            },
        ),
        must_fail(law(
            "excluded-middle-intersection-unconditional",
            "A ⊓ Aᶜ = (Φ,Ũ,E)",
            1,
            |x| same("A ⊓ Aᶜ", &inter(x[0], &x[0].complement()), "null", &null(x[0])),
        )),
        // Closure: every result satisfies F(e) ∩ G(f(e)) = ∅.
        law("closure-union", "A ⊔ B is a bipolar soft set", 2, |x| valid("A ⊔ B", &union(x[0], x[1]))),
        law("closure-intersection", "A ⊓ B is a bipolar soft set", 2, |x| valid("A ⊓ B", &inter(x[0], x[1]))),
        law("closure-complement", "Aᶜ is a bipolar soft set", 1, |x| valid("Aᶜ", &x[0].complement())),
        law("closure-and-product", "A ∧ B is a bipolar soft set", 2, |x| valid("A ∧ B", &and(x[0], x[1]))),
        law("closure-or-product", "A ∨ B is a bipolar soft set", 2, |x| valid("A ∨ B", &or(x[0], x[1]))),
        // Monotonicity.
        two_chains(law(
            "monotone-union",
            "A ⊑ B and C ⊑ D imply A ⊔ C ⊑ B ⊔ D",
            4,
            |x| holds(sub(&union(x[0], x[2]), &union(x[1], x[3])), || "A ⊔ C ⋢ B ⊔ D".into()),
        )),
        two_chains(law(
            "monotone-intersection",
            "A ⊑ B and C ⊑ D imply A ⊓ C ⊑ B ⊓ D",
            4,
            |x| holds(sub(&inter(x[0], x[2]), &inter(x[1], x[3])), || "A ⊓ C ⋢ B ⊓ D".into()),
        )),
    ]
}

fn sub(a: &Bss, b: &Bss) -> bool {
    a.is_subset(b).expect("operands share a space")
}

fn union(a: &Bss, b: &Bss) -> Bss {
    a.union(b).expect("operands share a space")
}

fn inter(a: &Bss, b: &Bss) -> Bss {
    a.intersection(b).expect("operands share a space")
}

fn and(a: &Bss, b: &Bss) -> Bss {
    and_product(a, b).expect("operands share a space")
}

fn or(a: &Bss, b: &Bss) -> Bss {
    or_product(a, b).expect("operands share a space")
}

fn null(like: &Bss) -> Bss {
    Bss::null(Arc::clone(like.space()))
}

fn absolute(like: &Bss) -> Bss {
    Bss::absolute(Arc::clone(like.space()))
}

fn holds(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Divergence {
            param: None,
            object: None,
            detail: detail(),
        })
    }
}

/// Structural equality, pointing at the first differing cell otherwise.
fn same(lhs_name: &str, lhs: &Bss, rhs_name: &str, rhs: &Bss) -> Outcome {
    if lhs == rhs {
        return Ok(());
    }
    let space = lhs.space();
    for k in 0..space.num_params() {
        for i in 0..space.num_objects() {
            let (l, r) = (lhs.cell(i, k), rhs.cell(i, k));
            if l != r {
                return Err(Divergence {
                    param: Some(space.positive(k).to_string()),
                    object: Some(space.object(i).to_string()),
                    detail: format!("{lhs_name} gives {l}, {rhs_name} gives {r}"),
                });
            }
        }
    }
    Err(Divergence {
        param: None,
        object: None,
        detail: format!("{lhs_name} and {rhs_name} live over different spaces"),
    })
}

fn valid(name: &str, set: &Bss) -> Outcome {
    set.validate().map_err(|err| match err {
        crate::error::Error::DisjointnessViolation { param, witnesses } => Divergence {
            object: witnesses.first().cloned(),
            param: Some(param),
            detail: format!("{name} is not disjoint"),
        },
        other => Divergence {
            param: None,
            object: None,
            detail: format!("{name}: {other}"),
        },
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn ids_are_unique() {
        let laws = catalogue();
        let ids: HashSet<_> = laws.iter().map(|l| l.id).collect();
        assert_eq!(ids.len(), laws.len());
        assert!(find("demorgan-union").is_some());
        assert!(find("no-such-law").is_none());
    }

    #[test]
    fn unconditional_forms_must_fail() {
        let failing: Vec<_> = catalogue()
            .into_iter()
            .filter(|l| l.expectation == Expectation::MustFail)
            .map(|l| l.id)
            .collect();
        assert_eq!(
            failing,
            vec!["excluded-middle-unconditional", "excluded-middle-intersection-unconditional"]
        );
    }

    #[test]
    fn samplers_satisfy_guards() {
        let space = crate::laws::generate::standard_space(4, 3).unwrap();
        let mut rng = SplitMix64::new(3);
        for law in catalogue() {
            for _ in 0..20 {
                let ops = law.sample(&mut rng, &space);
                assert_eq!(ops.len(), law.arity, "{}", law.id);
                let refs: Vec<&Bss> = ops.iter().collect();
                for len in 1..=refs.len() {
                    assert!(law.admits(&refs[..len]), "{}", law.id);
                }
            }
        }
    }
}
