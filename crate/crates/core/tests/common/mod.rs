//! Oracles that share no code path with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// Reduced `(num, den)` pair with `den > 0`; `None` for an infinite value.
pub type Frac = (i128, i128);

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn reduce(num: i128, den: i128) -> Option<Frac> {
    if den == 0 {
        return None;
    }
    let g = gcd(num, den);
    let s = if den < 0 { -1 } else { 1 };
    Some((s * num / g, s * den / g))
}

/// Value of the flat list `[c, b0, ..., bm]` through the convergent
/// recurrence `h_k = b_k h_{k-1} + h_{k-2}`. Works outside-in, so it never
/// looks at tail values and only sees the final ratio `h/k`.
pub fn convergent_value(flat: &[i64]) -> Option<Frac> {
    let (mut h_prev, mut h) = (1i128, flat[0] as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    for &b in &flat[1..] {
        let b = b as i128;
        (h_prev, h) = (h, b * h + h_prev);
        (k_prev, k) = (k, b * k + k_prev);
    }
    reduce(h, k)
}

/// True when some tail `[bi, ..., bm]` (i >= 1 in the flat list) evaluates
/// to zero, which makes the nested fraction undefined. Tails are computed
/// as ratios of the backward recurrence.
pub fn has_zero_tail(flat: &[i64]) -> bool {
    // tail value t_i = n_i / d_i with t_m = b_m, t_i = b_i + 1/t_{i+1}
    let terms = &flat[1..];
    if terms.is_empty() {
        return false;
    }
    let (mut n, mut d) = (*terms.last().unwrap() as i128, 1i128);
    if n == 0 {
        return true;
    }
    for &b in terms[..terms.len() - 1].iter().rev() {
        (n, d) = (b as i128 * n + d, n);
        if n == 0 {
            return true;
        }
        let g = gcd(n, d);
        (n, d) = (n / g, d / g);
    }
    false
}

/// All expansions `[c, b0, ..., bm]` of `p/q` with every `|bi| >= 2`, found
/// by depth-first search over all term values `2 <= |b| <= q + 2`.
///
/// After a prefix with convergents `(h, h')`, `(k, k')`, the remaining tail
/// `t` must solve `p/q = (h t + h')/(k t + k')`. Any tail made of terms of
/// absolute value at least two has `|t| >= 1`, so prefixes that force
/// `|t| < 1` are dead; a forced `t` that is itself an admissible single
/// term closes an expansion.
pub fn brute_force_expansions(p: i64, q: i64) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    let limit = q + 2;
    for c in -3..=3 {
        let mut prefix = vec![c];
        search(p as i128, q as i128, limit, &mut prefix, &mut out);
    }
    out
}

fn search(p: i128, q: i128, limit: i64, prefix: &mut Vec<i64>, out: &mut BTreeSet<Vec<i64>>) {
    let (mut h_prev, mut h) = (1i128, prefix[0] as i128);
    let (mut k_prev, mut k) = (0i128, 1i128);
    for &b in &prefix[1..] {
        let b = b as i128;
        (h_prev, h) = (h, b * h + h_prev);
        (k_prev, k) = (k, b * k + k_prev);
    }
    // p/q = (h t + h_prev)/(k t + k_prev)  =>  t = (h_prev q - p k_prev)/(p k - h q)
    let t_num = h_prev * q - p * k_prev;
    let t_den = p * k - h * q;
    if prefix.len() > 1 && t_den == 0 && t_num != 0 {
        // the prefix alone already equals p/q
        out.insert(prefix.clone());
        return;
    }
    if t_den == 0 {
        return;
    }
    let (tn, td) = reduce(t_num, t_den).unwrap();
    if tn.abs() < td {
        return;
    }
    if prefix.len() > 40 {
        return;
    }
    for mag in 2..=limit {
        for b in [mag, -mag] {
            prefix.push(b);
            search(p, q, limit, prefix, out);
            prefix.pop();
        }
    }
}

/// Minimal checker for the DOT subset we emit:
/// `digraph ID { stmt* }` with statements `ID = ID ;`, `node [attrs] ;`,
/// `ID [attrs] ;` and `ID -> ID [attrs] ;`. Returns node labels keyed by id
/// and edges as `(from, to, label)`.
pub struct DotGraph {
    pub nodes: BTreeMap<String, BTreeMap<String, String>>,
    pub edges: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Str(String),
    Arrow,
    Sym(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, String> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '"' {
            let mut s = String::new();
            i += 1;
            while i < chars.len() && chars[i] != '"' {
                if chars[i] == '\\' {
                    i += 1;
                }
                s.push(chars[i]);
                i += 1;
            }
            if i == chars.len() {
                return Err("unterminated string".into());
            }
            i += 1;
            toks.push(Tok::Str(s));
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            toks.push(Tok::Arrow);
            i += 2;
        } else if "{}[]=,;".contains(c) {
            toks.push(Tok::Sym(c));
            i += 1;
        } else if c.is_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push(Tok::Id(chars[start..i].iter().collect()));
        } else {
            return Err(format!("unexpected character {c:?}"));
        }
    }
    Ok(toks)
}

pub fn parse_dot(src: &str) -> Result<DotGraph, String> {
    let toks = tokenize(src)?;
    let mut pos = 0;
    let mut next = || -> Result<Tok, String> {
        let t = toks.get(pos).cloned().ok_or("unexpected end of input")?;
        pos += 1;
        Ok(t)
    };
    if next()? != Tok::Id("digraph".into()) {
        return Err("expected digraph".into());
    }
    let Tok::Id(_) = next()? else {
        return Err("expected graph id".into());
    };
    if next()? != Tok::Sym('{') {
        return Err("expected {".into());
    }
    let mut graph = DotGraph {
        nodes: BTreeMap::new(),
        edges: Vec::new(),
    };
    fn value(t: Tok) -> Result<String, String> {
        match t {
            Tok::Id(s) | Tok::Str(s) => Ok(s),
            other => Err(format!("expected id or string, got {other:?}")),
        }
    }
    loop {
        let t = next()?;
        let id = match t {
            Tok::Sym('}') => break,
            Tok::Id(id) => id,
            other => return Err(format!("unexpected {other:?}")),
        };
        let mut t = next()?;
        let mut edge_to = None;
        if t == Tok::Sym('=') {
            value(next()?)?;
            if next()? != Tok::Sym(';') {
                return Err("expected ; after graph attribute".into());
            }
            continue;
        }
        if t == Tok::Arrow {
            edge_to = Some(value(next()?)?);
            t = next()?;
        }
        let mut attrs = BTreeMap::new();
        if t == Tok::Sym('[') {
            loop {
                let key = value(next()?)?;
                if next()? != Tok::Sym('=') {
                    return Err("expected = in attribute".into());
                }
                attrs.insert(key, value(next()?)?);
                match next()? {
                    Tok::Sym(',') => continue,
                    Tok::Sym(']') => break,
                    other => return Err(format!("unexpected {other:?} in attributes")),
                }
            }
            t = next()?;
        }
        if t != Tok::Sym(';') {
            return Err(format!("expected ; got {t:?}"));
        }
        match edge_to {
            Some(to) => graph.edges.push((
                id,
                to,
                attrs.get("label").cloned().unwrap_or_default(),
            )),
            None if id == "node" || id == "edge" || id == "graph" => {}
            None => {
                graph.nodes.insert(id, attrs);
            }
        }
    }
    if pos != toks.len() {
        return Err("trailing input after graph".into());
    }
    for (a, b, _) in &graph.edges {
        if !graph.nodes.contains_key(a) || !graph.nodes.contains_key(b) {
            return Err(format!("edge {a} -> {b} references an undeclared node"));
        }
    }
    Ok(graph)
}

/// Reduced `p/q` with `0 < p < q <= max_q`.
pub fn reduced_fractions(max_q: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max_q).flat_map(|q| (1..q).filter(move |&p| gcd(p as i128, q as i128) == 1).map(move |p| (p, q)))
}
