use std::fmt::{self, Write};
use std::time::Duration;

use crate::error::{Error, Result};

/// How a measurement is compared with its prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Lt,
    Le,
    Ge,
}

impl Relation {
    fn holds(self, measured: u64, predicted: u64) -> bool {
        match self {
            Relation::Eq => measured == predicted,
            Relation::Lt => measured < predicted,
            Relation::Le => measured <= predicted,
            Relation::Ge => measured >= predicted,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ExactMatch,
    BoundSatisfied,
    Mismatch,
    BudgetExceeded,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::ExactMatch | Verdict::BoundSatisfied)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ExactMatch => "exact-match",
            Verdict::BoundSatisfied => "bound-satisfied",
            Verdict::Mismatch => "mismatch",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub n: usize,
    pub quantity: String,
    /// `None` when the measurement could not be completed.
    pub measured: Option<u64>,
    pub relation: Relation,
    pub predicted: u64,
    pub verdict: Verdict,
    pub note: String,
}

impl Row {
    pub fn new(
        n: usize,
        quantity: impl Into<String>,
        measured: Result<u64>,
        relation: Relation,
        predicted: u64,
    ) -> Self {
        let (measured, verdict, note) = match measured {
            Ok(m) if !relation.holds(m, predicted) => (Some(m), Verdict::Mismatch, String::new()),
            Ok(m) if relation == Relation::Eq => (Some(m), Verdict::ExactMatch, String::new()),
            Ok(m) => (Some(m), Verdict::BoundSatisfied, String::new()),
            Err(e @ Error::Resource { .. }) => (None, Verdict::BudgetExceeded, e.to_string()),
            Err(e) => (None, Verdict::Mismatch, e.to_string()),
        };
        Self {
            n,
            quantity: quantity.into(),
            measured,
            relation,
            predicted,
            verdict,
            note,
        }
    }

    fn measured_text(&self) -> String {
        self.measured
            .map_or_else(|| "-".to_string(), |m| m.to_string())
    }

    fn predicted_text(&self) -> String {
        format!("{} {}", self.relation.symbol(), self.predicted)
    }
}

/// Rows of one experiment, in a fixed order.
#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub id: String,
    pub seed: u64,
    pub rows: Vec<Row>,
    pub runtime: Duration,
}

impl ExperimentReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.verdict.passed())
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("experiment,n,quantity,measured,relation,predicted,verdict,note\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                self.id,
                r.n,
                csv_field(&r.quantity),
                r.measured_text(),
                r.relation.symbol(),
                r.predicted,
                r.verdict,
                csv_field(&r.note)
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let header = ["n", "quantity", "measured", "predicted", "verdict"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.n.to_string(),
                    r.quantity.clone(),
                    r.measured_text(),
                    r.predicted_text(),
                    r.verdict.to_string(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |fields: &[String]| -> String {
            let padded: Vec<String> = fields
                .iter()
                .zip(widths)
                .map(|(f, w)| format!("{f}{}", " ".repeat(w - f.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = format!("experiment {} (seed {})\n", self.id, self.seed);
        out.push_str(&line(&header.map(String::from)));
        out.push('\n');
        for (row, r) in cells.iter().zip(&self.rows) {
            out.push_str(&line(row));
            if !r.note.is_empty() {
                let _ = write!(out, "  ({})", r.note);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} in {:.2}s",
            if self.passed() { "PASS" } else { "FAIL" },
            self.runtime.as_secs_f64()
        );
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
