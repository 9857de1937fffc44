//! Exhaustive check of `D = 2c` over all fractions up to a denominator bound.
//!
//! Fractions are independent, so with the `parallel` feature the rows are
//! computed on a rayon pool; output order is always `(q, p)` ascending.

use serde::{Deserialize, Serialize};

use crate::cf::canonicalize;
use crate::error::Result;
use crate::rational::Rational;
use crate::slopes::{build_report, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_q: i64,
    /// Skip even denominators (two-component links).
    pub knots_only: bool,
    /// Keep only `p` equal to its canonical representative.
    pub canonical_classes: bool,
    /// Worker threads; 0 lets rayon decide, 1 forces the sequential path.
    pub jobs: usize,
}

impl SweepConfig {
    pub fn new(max_q: i64) -> Self {
        SweepConfig {
            max_q,
            knots_only: false,
            canonical_classes: false,
            jobs: 0,
        }
    }
}

/// One CSV line. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub p: i64,
    pub q: i64,
    pub n: usize,
    pub crossing: i64,
    pub diameter: i64,
    pub num_slopes: usize,
    pub fib_bound: u64,
    pub theorem1: Verdict,
    pub engines_agree: bool,
    pub is_knot: bool,
}

pub const CSV_HEADER: [&str; 10] = [
    "p",
    "q",
    "n",
    "crossing",
    "diameter",
    "num_slopes",
    "fib_bound",
    "theorem1",
    "engines_agree",
    "is_knot",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub engines_disagree: usize,
    pub max_num_slopes: usize,
}

impl SweepSummary {
    pub fn from_rows(rows: &[SweepRow]) -> Self {
        let mut s = SweepSummary {
            rows: rows.len(),
            ..Default::default()
        };
        for row in rows {
            match row.theorem1 {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
            }
            if !row.engines_agree {
                s.engines_disagree += 1;
            }
            s.max_num_slopes = s.max_num_slopes.max(row.num_slopes);
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.fail == 0 && self.engines_disagree == 0
    }
}

/// Reduced `p/q` with `0 < p < q <= max_q`, ordered by `(q, p)`.
pub fn fractions(config: &SweepConfig) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 2..=config.max_q {
        if config.knots_only && q % 2 == 0 {
            continue;
        }
        for p in 1..q {
            let Ok(r) = Rational::new(p, q) else { continue };
            if r.denom() != q {
                continue;
            }
            if config.canonical_classes && canonicalize(r).map(|c| c != r).unwrap_or(true) {
                continue;
            }
            out.push(r);
        }
    }
    out
}

pub fn row_for(r: Rational) -> Result<SweepRow> {
    let rep = build_report(r)?;
    Ok(SweepRow {
        p: r.numer(),
        q: r.denom(),
        n: rep.n,
        crossing: rep.crossing,
        diameter: rep.diameter,
        num_slopes: rep.slopes.len(),
        fib_bound: rep.fib_bound,
        theorem1: rep.theorem1,
        engines_agree: rep.engines_agree,
        is_knot: rep.is_knot,
    })
}

pub fn sweep_rows_sequential(fractions: &[Rational]) -> Result<Vec<SweepRow>> {
    fractions.iter().map(|&r| row_for(r)).collect()
}

#[cfg(feature = "parallel")]
pub fn sweep_rows_parallel(fractions: &[Rational]) -> Result<Vec<SweepRow>> {
    use rayon::prelude::*;
    fractions.par_iter().map(|&r| row_for(r)).collect()
}

/// Rows for every fraction selected by `config`.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    let fractions = fractions(config);
    #[cfg(feature = "parallel")]
    {
        if config.jobs != 1 {
            return match rayon::ThreadPoolBuilder::new()
                .num_threads(config.jobs)
                .build()
            {
                Ok(pool) => pool.install(|| sweep_rows_parallel(&fractions)),
                Err(_) => sweep_rows_parallel(&fractions),
            };
        }
    }
    sweep_rows_sequential(&fractions)
}
