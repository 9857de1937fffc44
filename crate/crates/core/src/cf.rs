//! Continued fractions `[c, b0, ..., bm]`, simple continued fractions,
//! Conway notation and the equivalence `K(p/q) = K(p'/q)` for
//! `p' = p^(+-1) mod q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{mod_inverse, Rational};

/// `c + 1/(b0 + 1/(b1 + ... + 1/bm))` with every partial quotient nonzero.
///
/// Serialized as the flat list `[c, b0, ..., bm]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct ContinuedFraction {
    integral: i64,
    terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(integral: i64, terms: Vec<i64>) -> Result<Self> {
        if let Some(index) = terms.iter().position(|&t| t == 0) {
            return Err(Error::ZeroTerm { index });
        }
        Ok(ContinuedFraction { integral, terms })
    }

    /// Builds from the flat notation `[c, b0, ..., bm]`.
    pub fn from_flat(flat: &[i64]) -> Result<Self> {
        match flat.split_first() {
            Some((&c, rest)) => Self::new(c, rest.to_vec()),
            None => Err(Error::EmptyCf),
        }
    }

    pub(crate) fn from_parts_unchecked(integral: i64, terms: Vec<i64>) -> Self {
        debug_assert!(terms.iter().all(|&t| t != 0));
        ContinuedFraction { integral, terms }
    }

    pub fn integral(&self) -> i64 {
        self.integral
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_flat(&self) -> Vec<i64> {
        let mut flat = Vec::with_capacity(self.terms.len() + 1);
        flat.push(self.integral);
        flat.extend_from_slice(&self.terms);
        flat
    }

    /// Every partial quotient has absolute value at least two.
    pub fn is_boundary(&self) -> bool {
        self.terms.iter().all(|t| t.abs() >= 2)
    }

    pub fn all_terms_even(&self) -> bool {
        self.terms.iter().all(|t| t % 2 == 0)
    }

    /// Exact value, evaluated from the innermost term outwards.
    ///
    /// Fails with [`Error::UndefinedCf`] as soon as some tail `[bi, ..., bm]`
    /// evaluates to zero, since the enclosing level would divide by it.
    pub fn eval(&self) -> Result<Rational> {
        let mut tail: Option<Rational> = None;
        for &b in self.terms.iter().rev() {
            tail = Some(match tail {
                None => Rational::from_integer(b),
                Some(t) => self.reciprocal_of_tail(t)?.add_int(b)?,
            });
        }
        match tail {
            None => Ok(Rational::from_integer(self.integral)),
            Some(t) => self.reciprocal_of_tail(t)?.add_int(self.integral),
        }
    }

    fn reciprocal_of_tail(&self, t: Rational) -> Result<Rational> {
        if t.is_zero() {
            return Err(Error::UndefinedCf(self.to_string()));
        }
        t.recip()
    }

    /// Appends the terms of `tail` after the last partial quotient, so that
    /// the result is `[c, b0, ..., bm, tail]`.
    pub fn with_tail(&self, tail: &[i64]) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(tail);
        Self::new(self.integral, terms)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.integral)?;
        for t in &self.terms {
            write!(f, ",{t}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<i64>> for ContinuedFraction {
    type Error = Error;

    fn try_from(flat: Vec<i64>) -> Result<Self> {
        Self::from_flat(&flat)
    }
}

impl From<ContinuedFraction> for Vec<i64> {
    fn from(cf: ContinuedFraction) -> Vec<i64> {
        cf.to_flat()
    }
}

pub fn eval_cf(cf: &ContinuedFraction) -> Result<Rational> {
    cf.eval()
}

/// `prefix ++ pattern^count ++ suffix`, read as a flat `[c, b0, ...]` list.
pub fn expand_repeat(
    prefix: &[i64],
    pattern: &[i64],
    count: usize,
    suffix: &[i64],
) -> Result<ContinuedFraction> {
    let mut flat = Vec::with_capacity(prefix.len() + pattern.len() * count + suffix.len());
    flat.extend_from_slice(prefix);
    for _ in 0..count {
        flat.extend_from_slice(pattern);
    }
    flat.extend_from_slice(suffix);
    ContinuedFraction::from_flat(&flat)
}

/// Term list whose value, read as `[a0, a1, ..., an]`, is `value`, with no
/// zero entries anywhere (including `a0`). Used to splice a rational tail
/// onto a continued fraction.
pub fn nonzero_expansion(value: Rational) -> Result<Vec<i64>> {
    if value.is_zero() {
        return Err(Error::ZeroTerm { index: 0 });
    }
    let mut terms = Vec::new();
    let mut x = value;
    loop {
        let mut a = x.floor();
        if a == 0 {
            a = 1;
        }
        terms.push(a);
        let rem = x.add_int(-a)?;
        if rem.is_zero() {
            return Ok(terms);
        }
        x = rem.recip()?;
    }
}

/// The unique expansion `[0, a0, ..., an]` of a rational in `(0, 1)` with all
/// `ai >= 1` and `an >= 2`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SimpleCF {
    terms: Vec<i64>,
}

impl SimpleCF {
    pub fn new(terms: Vec<i64>) -> Result<Self> {
        let valid = !terms.is_empty()
            && terms.iter().all(|&a| a >= 1)
            && terms.last().is_some_and(|&a| a >= 2);
        if !valid {
            return Err(Error::NotSimple(format!("{terms:?}")));
        }
        Ok(SimpleCF { terms })
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    /// Index of the last term.
    pub fn n(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn to_cf(&self) -> ContinuedFraction {
        ContinuedFraction::from_parts_unchecked(0, self.terms.clone())
    }

    pub fn value(&self) -> Result<Rational> {
        self.to_cf().eval()
    }
}

impl fmt::Display for SimpleCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_cf(), f)
    }
}

impl fmt::Debug for SimpleCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<i64>> for SimpleCF {
    type Error = Error;

    fn try_from(flat: Vec<i64>) -> Result<Self> {
        match flat.split_first() {
            Some((0, rest)) => SimpleCF::new(rest.to_vec()),
            _ => Err(Error::NotSimple(format!("{flat:?}"))),
        }
    }
}

impl From<SimpleCF> for Vec<i64> {
    fn from(s: SimpleCF) -> Vec<i64> {
        s.to_cf().to_flat()
    }
}

/// Euclidean expansion of `r`, `0 < r < 1`.
pub fn simple_cf(r: Rational) -> Result<SimpleCF> {
    if !r.in_unit_interval() {
        return Err(Error::OutOfRange(r));
    }
    let mut terms = Vec::new();
    let mut x = r.recip()?;
    loop {
        let a = x.floor();
        terms.push(a);
        let rem = x.add_int(-a)?;
        if rem.is_zero() {
            break;
        }
        x = rem.recip()?;
    }
    fold_trailing_one(&mut terms);
    SimpleCF::new(terms)
}

// [..., a, 1] -> [..., a + 1]
fn fold_trailing_one(terms: &mut Vec<i64>) {
    if terms.len() >= 2 && terms.last() == Some(&1) {
        terms.pop();
        *terms.last_mut().unwrap() += 1;
    }
}

/// Sum of the simple continued fraction terms.
pub fn crossing_number(s: &SimpleCF) -> i64 {
    s.terms.iter().sum()
}

/// Conway notation `a0 a1 ... an` is the continued fraction `[0, an, ..., a0]`.
pub fn cf_from_conway(conway: &[i64]) -> Result<SimpleCF> {
    if conway.is_empty() {
        return Err(Error::InvalidConway("empty notation".into()));
    }
    if let Some(bad) = conway.iter().find(|&&a| a < 1) {
        return Err(Error::InvalidConway(format!("entry {bad} is not positive")));
    }
    let mut terms: Vec<i64> = conway.iter().rev().copied().collect();
    fold_trailing_one(&mut terms);
    SimpleCF::new(terms).map_err(|_| {
        Error::InvalidConway(format!("{conway:?} describes the unknot, not a 2-bridge knot"))
    })
}

pub fn conway_from_cf(s: &SimpleCF) -> Vec<i64> {
    s.terms.iter().rev().copied().collect()
}

/// Representative `min(p, p^-1 mod q)/q` of the class of `p/q` under the
/// knot equivalence. Mirror images `p/q` and `-p/q` are kept apart.
pub fn canonicalize(r: Rational) -> Result<Rational> {
    if !r.in_unit_interval() {
        return Err(Error::OutOfRange(r));
    }
    let (p, q) = (r.numer(), r.denom());
    let inv = mod_inverse(p, q)?;
    Rational::new(p.min(inv), q)
}
