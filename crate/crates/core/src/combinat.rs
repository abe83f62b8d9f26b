//! Partitions, bipartitions and dipartitions with the dominance, bidominance and
//! didominance orders, and Hasse diagrams.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        let trimmed: Vec<usize> = parts.iter().copied().take_while(|&p| p > 0).collect();
        if trimmed.len() != parts.iter().filter(|&&p| p > 0).count() {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part before a positive one")));
        }
        if trimmed.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts: trimmed })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition {
            parts: (1..=first).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect(),
        }
    }

    /// `Σ_j C(λ'_j, 2)`, the degree of the Vandermonde product over the columns.
    pub fn column_pairs(&self) -> usize {
        self.conjugate().parts.iter().map(|c| c * (c - 1) / 2).sum()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidShape(format!("bad part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("zero part in {s:?}")));
        }
        Partition::new(&parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Position in the enumeration order of [`partitions`]: larger in reverse-lex comes first.
fn enumeration_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts))
}

/// All partitions of `n` in reverse-lexicographic order, starting with `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    gen_partitions(n, n, &mut cur, &mut out);
    out
}

fn gen_partitions(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rem == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rem.min(max)).rev() {
        cur.push(p);
        gen_partitions(rem - p, p, cur, out);
        cur.pop();
    }
}

/// Sorted concatenation `λ ⊎ μ`.
pub fn fusion(a: &Partition, b: &Partition) -> Partition {
    let mut parts = a.parts.clone();
    parts.extend_from_slice(&b.parts);
    Partition::from_unsorted(parts)
}

/// Row-wise sum `(λ_1+μ_1, λ_2+μ_2, ...)`; its prefix sums are the ones in the first
/// bidominance inequality family.
pub fn row_sum(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    Partition {
        parts: (1..=len).map(|i| a.part(i) + b.part(i)).collect(),
    }
}

pub fn dominance_leq(mu: &Partition, lam: &Partition) -> Result<bool> {
    if mu.size() != lam.size() {
        return Err(Error::SizeMismatch(mu.size(), lam.size()));
    }
    let (mut sm, mut sl) = (0, 0);
    for i in 1..=mu.len().max(lam.len()) {
        sm += mu.part(i);
        sl += lam.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bipartition {
    pub first: Partition,
    pub second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn n(&self) -> usize {
        self.first.size() + self.second.size()
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.second.clone(), self.first.clone())
    }

    /// `"(3,2)|(1)"`, with optional surrounding parentheses.
    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = split_bar(strip_outer(s))?;
        Ok(Bipartition::new(Partition::parse(a)?, Partition::parse(b)?))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

fn split_bar(s: &str) -> Result<(&str, &str)> {
    let t = s.trim();
    if let Some((a, b)) = t.split_once('|') {
        return Ok((a, b));
    }
    Err(Error::InvalidShape(format!("expected two parts separated by '|' in {s:?}")))
}

/// Removes one pair of outer parentheses or braces that wraps the whole text, if present.
fn strip_outer(s: &str) -> &str {
    let t = s.trim();
    if let Some(inner) = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        return inner;
    }
    if !(t.starts_with('(') && t.ends_with(')')) {
        return t;
    }
    let mut depth = 0i32;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return if i + 1 == t.len() { &t[1..i] } else { t };
                }
            }
            _ => {}
        }
    }
    t
}

pub fn bidominance_leq(p: &Bipartition, q: &Bipartition) -> Result<bool> {
    if p.n() != q.n() {
        return Err(Error::SizeMismatch(p.n(), q.n()));
    }
    let (lam, mu) = (&p.first, &p.second);
    let (om, th) = (&q.first, &q.second);
    let len = lam.len().max(mu.len()).max(om.len()).max(th.len()) + 1;
    let (mut sp, mut sq) = (0, 0);
    for j in 1..=len {
        if lam.part(j) + sp > om.part(j) + sq {
            return Ok(false);
        }
        sp += lam.part(j) + mu.part(j);
        sq += om.part(j) + th.part(j);
        if sp > sq {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Dipartition {
    /// Two distinct partitions, smaller size first; equal sizes in enumeration order.
    Pair(Partition, Partition),
    Signed(Partition, Sign),
}

impl Dipartition {
    pub fn pair(a: Partition, b: Partition) -> Result<Self> {
        match enumeration_cmp(&a, &b) {
            Ordering::Equal => Err(Error::InvalidShape(format!(
                "pair {{{a},{b}}} needs distinct partitions; use a signed form"
            ))),
            Ordering::Less => Ok(Dipartition::Pair(a, b)),
            Ordering::Greater => Ok(Dipartition::Pair(b, a)),
        }
    }

    pub fn signed(lam: Partition, sign: Sign) -> Self {
        Dipartition::Signed(lam, sign)
    }

    pub fn n(&self) -> usize {
        match self {
            Dipartition::Pair(a, b) => a.size() + b.size(),
            Dipartition::Signed(l, _) => 2 * l.size(),
        }
    }

    /// The underlying multiset `{λ, μ}` (with `{λ, λ}` for signed forms).
    pub fn multiset(&self) -> (&Partition, &Partition) {
        match self {
            Dipartition::Pair(a, b) => (a, b),
            Dipartition::Signed(l, _) => (l, l),
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, Dipartition::Signed(..))
    }

    /// `"(3,2)|(1)"`, `"(3,2)|+"`, `"()|(4)"`; outer parentheses or braces are accepted.
    pub fn parse(s: &str) -> Result<Self> {
        let (a, b) = split_bar(strip_outer(s))?;
        let lam = Partition::parse(a)?;
        match b.trim() {
            "+" => Ok(Dipartition::Signed(lam, Sign::Plus)),
            "-" | "−" => Ok(Dipartition::Signed(lam, Sign::Minus)),
            other => Dipartition::pair(lam, Partition::parse(other)?),
        }
    }
}

impl fmt::Display for Dipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dipartition::Pair(a, b) => write!(f, "{a}|{b}"),
            Dipartition::Signed(l, s) => write!(f, "{l}|{}", s.symbol()),
        }
    }
}

impl fmt::Debug for Dipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// All dipartitions of `n`: for `k = 0..=n/2`, `p ⊢ k`, `q ⊢ n-k`, the pair `{p, q}` when new,
/// or `{p,+}, {p,-}` when `p = q`.
pub fn dipartitions(n: usize) -> Result<Vec<Dipartition>> {
    if n == 0 {
        return Err(Error::InvalidShape("dipartitions of 0 are not defined".into()));
    }
    let mut out: Vec<Dipartition> = Vec::new();
    for k in 0..=n / 2 {
        for p in partitions(k) {
            for q in partitions(n - k) {
                if p == q {
                    out.push(Dipartition::Signed(p.clone(), Sign::Plus));
                    out.push(Dipartition::Signed(p.clone(), Sign::Minus));
                } else {
                    let d = Dipartition::pair(p.clone(), q)?;
                    if !out.contains(&d) {
                        out.push(d);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// All bipartitions `(λ, μ)` of `n`, by `|λ|` descending then enumeration order.
pub fn bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push(Bipartition::new(a.clone(), b));
            }
        }
    }
    out
}

/// The auxiliary relation `≼_D` on multisets `{λ, μ} ≼ {θ, ω}`.
pub fn multiset_leq(lam: &Partition, mu: &Partition, th: &Partition, om: &Partition) -> Result<bool> {
    let lm = Bipartition::new(lam.clone(), mu.clone());
    let ml = lm.swapped();
    let to = Bipartition::new(th.clone(), om.clone());
    let ot = to.swapped();
    Ok((bidominance_leq(&lm, &to)? || bidominance_leq(&lm, &ot)?)
        && (bidominance_leq(&ml, &to)? || bidominance_leq(&ml, &ot)?))
}

pub fn didominance_leq(a: &Dipartition, b: &Dipartition) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    if let (Dipartition::Signed(l, s), Dipartition::Signed(m, t)) = (a, b) {
        if l == m {
            return Ok(s == t);
        }
    }
    let (x1, x2) = a.multiset();
    let (y1, y2) = b.multiset();
    multiset_leq(x1, x2, y1, y2)
}

/// Cover edges `(i, j)` with `elements[i] ⋖ elements[j]`, by direct transitive reduction.
pub fn hasse<T, F>(elements: &[T], leq: F) -> Vec<(usize, usize)>
where
    F: Fn(&T, &T) -> bool,
{
    let m = elements.len();
    let mut lt = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            lt[i][j] = i != j && leq(&elements[i], &elements[j]);
        }
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if lt[i][j] && !(0..m).any(|k| lt[i][k] && lt[k][j]) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// A finite poset with its cover relation.
#[derive(Clone, Debug)]
pub struct Poset<T> {
    pub nodes: Vec<T>,
    pub edges: Vec<(usize, usize)>,
}

impl<T: fmt::Display> Poset<T> {
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph {name} {{\n  rankdir=BT;\n");
        for (i, node) in self.nodes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{node}\"];\n"));
        }
        for (a, b) in &self.edges {
            s.push_str(&format!("  n{a} -> n{b};\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().map(|n| n.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}

pub fn partition_poset(n: usize) -> Poset<Partition> {
    let nodes = partitions(n);
    let edges = hasse(&nodes, |a, b| dominance_leq(a, b).unwrap_or(false));
    Poset { nodes, edges }
}

pub fn bipartition_poset(n: usize) -> Poset<Bipartition> {
    let nodes = bipartitions(n);
    let edges = hasse(&nodes, |a, b| bidominance_leq(a, b).unwrap_or(false));
    Poset { nodes, edges }
}

pub fn dipartition_poset(n: usize) -> Result<Poset<Dipartition>> {
    let nodes = dipartitions(n)?;
    let edges = hasse(&nodes, |a, b| didominance_leq(a, b).unwrap_or(false));
    Ok(Poset { nodes, edges })
}

/// Lower covers of `{λ,±}`: `{λ - e_p, λ + e_{p+1}}` for each row `p` with `λ_p > λ_{p+1}`.
pub fn signed_covers(lam: &Partition) -> Vec<Dipartition> {
    let mut out = Vec::new();
    for p in 1..=lam.len() {
        if lam.part(p) > lam.part(p + 1) {
            let mut theta: Vec<usize> = (1..=lam.len() + 1).map(|i| lam.part(i)).collect();
            let mut omega = theta.clone();
            theta[p - 1] -= 1;
            omega[p] += 1;
            let d = Dipartition::pair(Partition::from_unsorted(theta), Partition::from_unsorted(omega))
                .expect("sizes differ by two");
            out.push(d);
        }
    }
    out
}

/// Lower covers of `mu` in the dominance order on partitions of `|mu|`, by brute force.
pub fn dominance_lower_covers(mu: &Partition) -> Vec<Partition> {
    let below: Vec<Partition> = partitions(mu.size())
        .into_iter()
        .filter(|p| p != mu && dominance_leq(p, mu).unwrap())
        .collect();
    below
        .iter()
        .filter(|p| !below.iter().any(|q| q != *p && dominance_leq(p, q).unwrap()))
        .cloned()
        .collect()
}

/// Checks that the dominance lower covers of `λ+λ` (row-wise doubling) are exactly the row-wise
/// sums `θ+ω` over the signed covers `{θ, ω}` of `{λ,±}`.
pub fn fusion_cover_check(lam: &Partition) -> bool {
    let doubled = row_sum(lam, lam);
    let mut covers = dominance_lower_covers(&doubled);
    let mut from_signed: Vec<Partition> = signed_covers(lam)
        .iter()
        .map(|d| {
            let (t, o) = d.multiset();
            row_sum(t, o)
        })
        .collect();
    covers.sort_by(enumeration_cmp);
    from_signed.sort_by(enumeration_cmp);
    covers == from_signed
}
