//! Slopes from boundary slope continued fractions.
//!
//! Terms are matched against the alternating pattern `+ - + - ...` starting
//! at the first partial quotient. With `(b+, b-)` the matching and
//! non-matching counts of an expansion and `(b0+, b0-)` those of the unique
//! all-even expansion, the slope is `2((b+ - b-) - (b0+ - b0-))`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::btree::{build_tree, leaves};
use crate::cf::{canonicalize, conway_from_cf, crossing_number, simple_cf, ContinuedFraction, SimpleCF};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::subst::{candidate_cfs, SubstitutionMask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct SignCounts {
    pub b_plus: u32,
    pub b_minus: u32,
}

impl SignCounts {
    pub fn difference(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }
}

pub fn sign_counts(cf: &ContinuedFraction) -> SignCounts {
    let b_plus = cf
        .terms()
        .iter()
        .enumerate()
        .filter(|(i, &t)| (t > 0) == (i % 2 == 0))
        .count() as u32;
    SignCounts {
        b_plus,
        b_minus: cf.len() as u32 - b_plus,
    }
}

/// The all-even member of a boundary slope set.
pub fn seifert_cf<'a, I>(candidates: I) -> Result<ContinuedFraction>
where
    I: IntoIterator<Item = &'a ContinuedFraction>,
{
    let even: Vec<_> = candidates
        .into_iter()
        .filter(|cf| cf.all_terms_even())
        .collect();
    match even.as_slice() {
        [] => Err(Error::SeifertNotFound),
        [one] => Ok((*one).clone()),
        many => Err(Error::SeifertNotUnique(many.len())),
    }
}

pub fn slope(cf: &ContinuedFraction, seifert: SignCounts) -> i64 {
    2 * (sign_counts(cf).difference() - seifert.difference())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremes {
    pub min: i64,
    pub max: i64,
}

/// Minimum and maximum slope without enumeration.
///
/// Substituting at every even position gives `b+ = 0` and `b-` equal to the
/// sum of the even-position terms, less one when `n` is even; substituting at
/// every odd position gives `b- = 0` and `b+` equal to the sum of the
/// odd-position terms, plus one when `n` is even.
pub fn extremes_closed_form(s: &SimpleCF, seifert: SignCounts) -> Extremes {
    let n_even = s.n().is_multiple_of(2);
    let even_sum: i64 = s.terms().iter().step_by(2).sum();
    let odd_sum: i64 = s.terms().iter().skip(1).step_by(2).sum();
    let b1_minus = even_sum - n_even as i64;
    let b2_plus = odd_sum + n_even as i64;
    let shift = 2 * seifert.difference();
    Extremes {
        min: -2 * b1_minus - shift,
        max: 2 * b2_plus - shift,
    }
}

/// `F(n+2)` with `F(1) = F(2) - 1 = 1`, i.e. 2, 3, 5, 8, ... for
/// `n = 0, 1, 2, 3, ...`. Saturates at `u64::MAX`.
pub fn fib_bound(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..=n {
        (a, b) = (b, a.saturating_add(b));
    }
    b
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// Two-component links fall outside the diameter theorem.
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSlope {
    pub cf: ContinuedFraction,
    pub mask: SubstitutionMask,
    pub counts: SignCounts,
    pub slope: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeReport {
    pub fraction: Rational,
    /// Smallest numerator in `{p, p^-1 mod q}`.
    pub canonical: Rational,
    /// `q` odd; even `q` gives a two-component link.
    pub is_knot: bool,
    pub simple: SimpleCF,
    pub conway: Vec<i64>,
    pub n: usize,
    pub crossing: i64,
    pub seifert: ContinuedFraction,
    /// False only for links, where the first all-even expansion in mask
    /// order is used as the reference.
    pub seifert_unique: bool,
    pub seifert_counts: SignCounts,
    /// Boundary slope expansions in mask order with their slopes.
    pub candidates: Vec<CandidateSlope>,
    /// Mask candidates rejected for containing a `+-1` term.
    pub non_boundary_candidates: usize,
    pub slopes: Vec<i64>,
    pub diameter: i64,
    pub extremes_closed_form: Extremes,
    pub extremes_agree: bool,
    pub fib_bound: u64,
    pub engines_agree: bool,
    pub theorem1: Verdict,
}

impl SlopeReport {
    pub fn min_slope(&self) -> i64 {
        *self.slopes.first().expect("slope set contains 0")
    }

    pub fn max_slope(&self) -> i64 {
        *self.slopes.last().expect("slope set contains 0")
    }

    pub fn max_abs_slope(&self) -> i64 {
        self.min_slope().abs().max(self.max_slope().abs())
    }

    pub fn diameter_matches_crossing(&self) -> Option<bool> {
        match self.theorem1 {
            Verdict::Pass => Some(true),
            Verdict::Fail => Some(false),
            Verdict::NotApplicable => None,
        }
    }
}

/// Full report for `0 < r < 1`, failing if the two enumeration engines
/// disagree or if a knot lacks a unique all-even expansion.
pub fn analyze(r: Rational) -> Result<SlopeReport> {
    let report = build_report(r)?;
    if !report.engines_agree {
        return Err(Error::EnginesDisagree(r));
    }
    Ok(report)
}

/// Like [`analyze`] but records engine disagreement in the report instead of
/// failing, so a sweep can tabulate it.
pub fn build_report(r: Rational) -> Result<SlopeReport> {
    let simple = simple_cf(r)?;
    let is_knot = r.denom() % 2 == 1;

    let mut non_boundary = 0;
    let mut boundary = Vec::new();
    for c in candidate_cfs(&simple) {
        if c.is_boundary {
            boundary.push(c);
        } else {
            non_boundary += 1;
        }
    }
    let mask_set: BTreeSet<_> = boundary.iter().map(|c| c.cf.clone()).collect();
    let tree_set = leaves(&build_tree(r)?);
    let engines_agree = mask_set == tree_set;

    let (seifert, seifert_unique) = match seifert_cf(boundary.iter().map(|c| &c.cf)) {
        Ok(s) => (s, true),
        Err(Error::SeifertNotUnique(_)) if !is_knot => {
            let first = boundary
                .iter()
                .find(|c| c.cf.all_terms_even())
                .expect("non-unique implies present");
            (first.cf.clone(), false)
        }
        Err(e) => return Err(e),
    };
    let seifert_counts = sign_counts(&seifert);

    let candidates: Vec<_> = boundary
        .into_iter()
        .map(|c| {
            let counts = sign_counts(&c.cf);
            CandidateSlope {
                slope: 2 * (counts.difference() - seifert_counts.difference()),
                cf: c.cf,
                mask: c.mask,
                counts,
            }
        })
        .collect();
    let slopes: Vec<i64> = candidates
        .iter()
        .map(|c| c.slope)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let min = *slopes.first().ok_or(Error::SeifertNotFound)?;
    let max = *slopes.last().ok_or(Error::SeifertNotFound)?;
    let diameter = max - min;

    let crossing = crossing_number(&simple);
    let extremes = extremes_closed_form(&simple, seifert_counts);
    let theorem1 = if !is_knot {
        Verdict::NotApplicable
    } else if diameter == 2 * crossing {
        Verdict::Pass
    } else {
        Verdict::Fail
    };

    Ok(SlopeReport {
        fraction: r,
        canonical: canonicalize(r)?,
        is_knot,
        conway: conway_from_cf(&simple),
        n: simple.n(),
        crossing,
        seifert,
        seifert_unique,
        seifert_counts,
        candidates,
        non_boundary_candidates: non_boundary,
        extremes_agree: extremes == Extremes { min, max },
        extremes_closed_form: extremes,
        slopes,
        diameter,
        fib_bound: fib_bound(simple.n()),
        engines_agree,
        theorem1,
        simple,
    })
}
