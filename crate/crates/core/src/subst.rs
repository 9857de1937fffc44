//! Substitution rewriting of continued fractions and the enumeration of
//! candidate boundary slope expansions from non-adjacent substitution masks.
//!
//! A substitution at term position `i` replaces the term `t` by a block of
//! `|t| - 1` alternating `+-2` entries and compensates on both neighbours:
//!
//! | term `t`          | predecessor | block                    | successor      | later terms |
//! |-------------------|-------------|--------------------------|----------------|-------------|
//! | `2a`, `a >= 1`    | `+1`        | `(-2, 2)^(a-1), -2`      | `s + 1`        | unchanged   |
//! | `-2a`             | `-1`        | `(2, -2)^(a-1), 2`       | `s - 1`        | unchanged   |
//! | `2a+1`, `a >= 0`  | `+1`        | `(-2, 2)^a`              | `-s - 1`       | negated     |
//! | `-2a-1`           | `-1`        | `(2, -2)^a`              | `-s + 1`       | negated     |
//!
//! The predecessor of position 0 is the integral component.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cf::{ContinuedFraction, SimpleCF};
use crate::error::{Error, Result};

/// Longest mask representable; `F(65)` masks would never be enumerated anyway.
pub const MAX_MASK_LEN: usize = 64;

/// Set of substitution positions, one bit per simple continued fraction
/// term, with no two adjacent positions selected.
///
/// Serialized as a string such as `"101"`, position 0 first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SubstitutionMask {
    // bit i <=> position i
    bits: u64,
    len: usize,
}

impl SubstitutionMask {
    pub fn empty(len: usize) -> Result<Self> {
        Self::from_bits(0, len)
    }

    pub fn from_positions(len: usize, positions: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in positions {
            if p >= len {
                return Err(Error::PositionOutOfRange { pos: p, len });
            }
            bits |= 1 << p;
        }
        Self::from_bits(bits, len)
    }

    fn from_bits(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_MASK_LEN {
            return Err(Error::InvalidMask(format!("length {len}"), "too long"));
        }
        if bits & (bits >> 1) != 0 {
            return Err(Error::InvalidMask(
                format!("{:b}", bits),
                "adjacent positions selected",
            ));
        }
        Ok(SubstitutionMask { bits, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_set(&self, pos: usize) -> bool {
        pos < self.len && self.bits >> pos & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Selected positions in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&p| self.is_set(p))
    }
}

impl fmt::Display for SubstitutionMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in 0..self.len {
            f.write_str(if self.is_set(p) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SubstitutionMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubstitutionMask({self})")
    }
}

impl FromStr for SubstitutionMask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        for (p, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' if p < MAX_MASK_LEN => bits |= 1 << p,
                '1' => return Err(Error::InvalidMask(s.into(), "too long")),
                _ => return Err(Error::InvalidMask(s.into(), "expected only 0 and 1")),
            }
        }
        Self::from_bits(bits, s.chars().count())
    }
}

impl TryFrom<String> for SubstitutionMask {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SubstitutionMask> for String {
    fn from(m: SubstitutionMask) -> String {
        m.to_string()
    }
}

/// Lexicographic iterator over all masks of a fixed length.
///
/// Reading a mask as a binary number with position 0 as the most significant
/// digit turns lexicographic order into numeric order, so the iterator walks
/// the integers without adjacent one bits.
#[derive(Debug, Clone)]
pub struct MaskIter {
    next: Option<u64>,
    len: usize,
}

impl MaskIter {
    pub fn new(len: usize) -> Result<Self> {
        if len > MAX_MASK_LEN - 1 {
            return Err(Error::InvalidMask(format!("length {len}"), "too long"));
        }
        Ok(MaskIter { next: Some(0), len })
    }
}

impl Iterator for MaskIter {
    type Item = SubstitutionMask;

    fn next(&mut self) -> Option<SubstitutionMask> {
        let code = self.next?;
        if code >> self.len != 0 {
            self.next = None;
            return None;
        }
        self.next = Some(next_without_adjacent_ones(code));
        let bits = if self.len == 0 {
            0
        } else {
            code.reverse_bits() >> (64 - self.len)
        };
        Some(SubstitutionMask {
            bits,
            len: self.len,
        })
    }
}

// Smallest integer > x whose binary digits contain no "11".
fn next_without_adjacent_ones(x: u64) -> u64 {
    let mut y = x + 1;
    loop {
        let pairs = y & (y >> 1);
        if pairs == 0 {
            return y;
        }
        // Highest offending pair sits at bits k+1, k; no value sharing the
        // digits above k+1 can avoid it, so carry into bit k+2.
        let k = 63 - pairs.leading_zeros() as u64;
        y = ((y >> (k + 2)) + 1) << (k + 2);
    }
}

/// Every mask of length `n + 1` in lexicographic order. There are `F(n+2)`.
pub fn enumerate_masks(n: usize) -> Result<Vec<SubstitutionMask>> {
    Ok(MaskIter::new(n + 1)?.collect())
}

/// One substitution at term position `pos` of `cf`.
///
/// The rule is chosen from the sign and parity of the current term. Fails
/// if the rewritten predecessor or successor would be a zero partial
/// quotient.
pub fn apply_substitution(cf: &ContinuedFraction, pos: usize) -> Result<ContinuedFraction> {
    let terms = cf.terms();
    let t = *terms.get(pos).ok_or(Error::PositionOutOfRange {
        pos,
        len: terms.len(),
    })?;
    let sign = t.signum();
    let odd = t % 2 != 0;

    let mut integral = cf.integral();
    let mut out = Vec::with_capacity(terms.len() + t.unsigned_abs() as usize);
    out.extend_from_slice(&terms[..pos]);
    {
        let pred = if pos == 0 {
            &mut integral
        } else {
            out.last_mut().unwrap()
        };
        *pred = pred.checked_add(sign).ok_or(Error::Overflow)?;
        if pos > 0 && *pred == 0 {
            return Err(Error::SideConditionViolated {
                pos,
                reason: "predecessor term becomes 0",
            });
        }
    }

    let width = t.unsigned_abs() as usize - 1;
    out.extend((0..width).map(|j| if j % 2 == 0 { -2 * sign } else { 2 * sign }));

    if let Some(&succ) = terms.get(pos + 1) {
        let adjusted = if odd {
            succ.checked_neg().and_then(|s| s.checked_sub(sign))
        } else {
            succ.checked_add(sign)
        }
        .ok_or(Error::Overflow)?;
        if adjusted == 0 {
            return Err(Error::SideConditionViolated {
                pos,
                reason: "successor term becomes 0",
            });
        }
        out.push(adjusted);
        let rest = &terms[pos + 2..];
        if odd {
            for &r in rest {
                out.push(r.checked_neg().ok_or(Error::Overflow)?);
            }
        } else {
            out.extend_from_slice(rest);
        }
    }

    Ok(ContinuedFraction::from_parts_unchecked(integral, out))
}

/// A continued fraction produced from a simple continued fraction by one
/// substitution mask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCF {
    pub cf: ContinuedFraction,
    pub mask: SubstitutionMask,
    /// All partial quotients have absolute value at least two.
    pub is_boundary: bool,
}

/// Applies substitutions at the masked positions of `s`, left to right.
///
/// Positions refer to the terms of `s`. A substitution at a term of
/// magnitude `a` turns one term into `a - 1`, so later positions shift by
/// `a - 2`; the offset is tracked as the rewrite proceeds. Non-adjacency
/// guarantees that no masked term was touched by an earlier substitution
/// except for a possible sign flip.
pub fn apply_mask(s: &SimpleCF, mask: SubstitutionMask) -> Result<CandidateCF> {
    if mask.len() != s.terms().len() {
        return Err(Error::MaskLength {
            mask: mask.len(),
            terms: s.terms().len(),
        });
    }
    let mut cf = s.to_cf();
    let mut offset: isize = 0;
    for original in mask.positions() {
        let current = (original as isize + offset) as usize;
        let width = cf.terms()[current].unsigned_abs() as isize - 1;
        cf = apply_substitution(&cf, current)?;
        offset += width - 1;
    }
    let is_boundary = cf.is_boundary();
    Ok(CandidateCF {
        cf,
        mask,
        is_boundary,
    })
}

/// One candidate per mask of length `n + 1`, in mask order. Masks whose
/// rewrite violates a side condition contribute nothing.
pub fn candidate_cfs(s: &SimpleCF) -> Vec<CandidateCF> {
    MaskIter::new(s.terms().len())
        .expect("simple continued fraction too long to enumerate")
        .filter_map(|mask| apply_mask(s, mask).ok())
        .collect()
}

/// The boundary slope continued fractions among the candidates.
pub fn boundary_cfs(s: &SimpleCF) -> BTreeSet<ContinuedFraction> {
    candidate_cfs(s)
        .into_iter()
        .filter(|c| c.is_boundary)
        .map(|c| c.cf)
        .collect()
}
