//! Score-based selection of the best objects of a bipolar soft set.
//!
//! Object `u_i` scores `c+ - c-`, where `c+` counts the parameters it is
//! positive for and `c-` those it is negative for. The optimal objects are
//! all the maximizers; ties are reported in universe order rather than broken.

use serde::Serialize;

use crate::set::BipolarSoftSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScoreRow {
    pub object: String,
    pub c_plus: usize,
    pub c_minus: usize,
    pub score: i64,
}

impl ScoreRow {
    fn new(object: &str, c_plus: usize, c_minus: usize) -> Self {
        ScoreRow {
            object: object.to_string(),
            c_plus,
            c_minus,
            score: c_plus as i64 - c_minus as i64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecisionResult {
    pub rows: Vec<ScoreRow>,
    pub max_score: i64,
    pub optimal: Vec<String>,
}

/// One row per object, in universe order.
pub fn scores(set: &BipolarSoftSet) -> Vec<ScoreRow> {
    let space = set.space();
    let n = space.num_params();
    (0..space.num_objects())
        .map(|i| {
            let c_plus = (0..n).filter(|&k| set.pos(k).contains(i)).count();
            let c_minus = (0..n).filter(|&k| set.neg(k).contains(i)).count();
            ScoreRow::new(space.object(i), c_plus, c_minus)
        })
        .collect()
}

pub fn decide(set: &BipolarSoftSet) -> DecisionResult {
    let rows = scores(set);
    // The universe is never empty, so a maximum always exists.
    let max_score = rows.iter().map(|r| r.score).max().expect("nonempty universe");
    let optimal = rows
        .iter()
        .filter(|r| r.score == max_score)
        .map(|r| r.object.clone())
        .collect();
    DecisionResult {
        rows,
        max_score,
        optimal,
    }
}

impl DecisionResult {
    /// The score table followed by the maximum and the optimal objects.
    pub fn render_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.object.len())
            .max()
            .unwrap_or(0)
            .max("object".len());
        let mut out = format!("{:<width$}  {:>4}  {:>4}  {:>4}\n", "object", "c+", "c-", "s");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<width$}  {:>4}  {:>4}  {:>4}\n",
                r.object, r.c_plus, r.c_minus, r.score
            ));
        }
        out.push_str(&format!("max score: {}\n", self.max_score));
        out.push_str(&format!("optimal: {}\n", self.optimal.join(" ")));
        out
    }

    /// One CSV record per object, with an `optimal` flag column.
    pub fn render_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["object", "c_plus", "c_minus", "score", "optimal"])
            .expect("in-memory csv");
        for r in &self.rows {
            let optimal = r.score == self.max_score;
            writer
                .write_record([
                    r.object.clone(),
                    r.c_plus.to_string(),
                    r.c_minus.to_string(),
                    r.score.to_string(),
                    optimal.to_string(),
                ])
                .expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }
}
