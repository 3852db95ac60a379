//! Bipolar soft sets over finite universes.
//!
//! A bipolar soft set assigns every positive parameter `e` a set of objects
//! that satisfy it and a disjoint set of objects satisfying its negation
//! `f(e)`. This crate provides the value type and its algebra
//! ([`BipolarSoftSet`]), and/or-products ([`product`]), the tabular encoding
//! ([`table`]), a canonical JSON document format ([`document`]), score-based
//! selection ([`decision`]) and a brute-force law checker ([`laws`]).

pub mod cli;
pub mod decision;
pub mod document;
pub mod error;
pub mod laws;
pub mod objects;
pub mod product;
pub mod set;
pub mod space;
pub mod table;

pub use decision::{decide, scores, DecisionResult, ScoreRow};
pub use document::{parse, serialize};
pub use error::{Error, Result};
pub use objects::ObjectSet;
pub use product::{and_product, or_product, ProductParameterSpace};
pub use set::{Assignment, BipolarSoftSet};
pub use space::ParameterSpace;
pub use table::{from_table, to_table, CellValue, TabularForm};
