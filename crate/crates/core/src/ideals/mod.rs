//! Graded membership and inclusion for homogeneous ideals given by generators.
//!
//! A homogeneous ideal is decided one degree at a time: `f` of degree `d` lies in `I` iff it
//! lies in the span of `{m·g : deg m = d - deg g}`. The slice is split further by a `GF(2)`
//! grading: every monomial of a generator `g` has exponent parity in `p(g) + H`, where `H`
//! is spanned by the parity differences inside all generators. Products `m·g` therefore
//! stay inside one coset of `H`, and the slice is a direct sum over cosets.

pub mod linalg;

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{monomials_of_degree, Monomial, Polynomial, Rational};
use crate::specht::Shape;
use linalg::{row_from_rationals, Echelon, SparseRow, TrackedEchelon};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Homogeneous generators of an ideal in `n` variables.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    id: u64,
    n: usize,
    label: String,
    shape: Option<Shape>,
    generators: Vec<Polynomial>,
    grading: Grading,
}

impl GeneratorSet {
    pub fn new(n: usize, label: impl Into<String>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        for g in &generators {
            if g.nvars() != n {
                return Err(Error::VarCountMismatch {
                    left: n,
                    right: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::InvalidGenerators("zero generator".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::InvalidGenerators(format!("{g} is not homogeneous")));
            }
        }
        let grading = Grading::from_generators(n, &generators);
        Ok(GeneratorSet {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            n,
            label: label.into(),
            shape: None,
            generators,
            grading,
        })
    }

    pub fn with_shape(mut self, shape: Shape) -> Self {
        self.shape = Some(shape);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn shape(&self) -> Option<&Shape> {
        self.shape.as_ref()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.generators.iter().map(|g| g.degree() as usize).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn min_degree(&self) -> usize {
        self.degrees()[0]
    }

    /// Number of parity blocks per degree.
    pub fn block_count(&self) -> usize {
        self.grading.block_count()
    }
}

/// Cosets of a `GF(2)` subspace of exponent parities.
#[derive(Clone, Debug)]
struct Grading {
    /// Echelon basis, leading bit descending, or `None` when parities are not tracked.
    basis: Option<Vec<u64>>,
    n: usize,
}

impl Grading {
    fn from_generators(n: usize, gens: &[Polynomial]) -> Self {
        if n > 64 {
            return Grading { basis: None, n };
        }
        let mut basis: Vec<u64> = Vec::new();
        for g in gens {
            let p0 = g.terms().next().map(|(m, _)| m.parity_bits()).unwrap_or(0);
            for (m, _) in g.terms() {
                let mut x = m.parity_bits() ^ p0;
                for b in &basis {
                    if x & top_bit(*b) != 0 {
                        x ^= b;
                    }
                }
                if x != 0 {
                    basis.push(x);
                    basis.sort_unstable_by_key(|b| std::cmp::Reverse(top_bit(*b)));
                }
            }
        }
        Grading { basis: Some(basis), n }
    }

    fn key(&self, parity: u64) -> u64 {
        match &self.basis {
            None => 0,
            Some(basis) => {
                let mut x = parity;
                for b in basis {
                    if x & top_bit(*b) != 0 {
                        x ^= b;
                    }
                }
                x
            }
        }
    }

    fn block_count(&self) -> usize {
        match &self.basis {
            None => 1,
            Some(b) => 1usize << (self.n - b.len()),
        }
    }
}

fn top_bit(x: u64) -> u64 {
    if x == 0 {
        0
    } else {
        1u64 << (63 - x.leading_zeros())
    }
}

/// Monomials of one degree, grouped by exponent parity.
struct MonomialTable {
    monomials: Vec<Monomial>,
    by_parity: BTreeMap<u64, Vec<usize>>,
}

fn monomial_table(n: usize, d: usize) -> Arc<MonomialTable> {
    static TABLES: OnceLock<DashMap<(usize, usize), Arc<MonomialTable>>> = OnceLock::new();
    let tables = TABLES.get_or_init(DashMap::new);
    if let Some(t) = tables.get(&(n, d)) {
        return t.clone();
    }
    let monomials = monomials_of_degree(n, d as u32);
    let mut by_parity: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    if n <= 64 {
        for (i, m) in monomials.iter().enumerate() {
            by_parity.entry(m.parity_bits()).or_default().push(i);
        }
    } else {
        by_parity.insert(0, (0..monomials.len()).collect());
    }
    let t = Arc::new(MonomialTable { monomials, by_parity });
    tables.insert((n, d), t.clone());
    t
}

/// One parity block of a degree slice: its monomials (descending graded-lex) and the echelon
/// form of all products `m·g` landing in it.
pub struct Block {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
    echelon: Echelon,
    columns: usize,
}

impl Block {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    /// Number of candidate products `m·g` falling in this block.
    pub fn candidates(&self) -> usize {
        self.columns
    }

    fn row_of(&self, f: &Polynomial) -> Option<SparseRow> {
        let mut entries = Vec::with_capacity(f.len());
        for (m, c) in f.terms() {
            entries.push((*self.index.get(m)?, c.clone()));
        }
        Some(row_from_rationals(entries))
    }
}

/// Candidate columns `(generator index, multiplier)` of degree `d` in the block `key`.
fn block_columns(set: &GeneratorSet, d: usize, key: u64) -> Vec<(usize, Monomial)> {
    let mut cols = Vec::new();
    for (gi, g) in set.generators.iter().enumerate() {
        let gd = g.degree() as usize;
        if gd > d {
            continue;
        }
        let p0 = g.terms().next().map(|(m, _)| m.parity_bits()).unwrap_or(0);
        let table = monomial_table(set.n, d - gd);
        for (parity, idxs) in &table.by_parity {
            if set.grading.key(parity ^ p0) == key {
                cols.extend(idxs.iter().map(|&i| (gi, table.monomials[i].clone())));
            }
        }
    }
    cols
}

fn block_monomials(set: &GeneratorSet, d: usize, key: u64) -> Vec<Monomial> {
    let table = monomial_table(set.n, d);
    let mut idx: Vec<usize> = table
        .by_parity
        .iter()
        .filter(|(p, _)| set.grading.key(**p) == key)
        .flat_map(|(_, v)| v.iter().copied())
        .collect();
    idx.sort_unstable();
    idx.into_iter().map(|i| table.monomials[i].clone()).collect()
}

fn build_block(set: &GeneratorSet, d: usize, key: u64) -> Block {
    let monomials = block_monomials(set, d, key);
    let index: HashMap<Monomial, u32> = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
    let mut echelon = Echelon::new(monomials.len());
    let mut seen = std::collections::HashSet::new();
    let cols = block_columns(set, d, key);
    let ncols = cols.len();
    for (gi, m) in cols {
        if echelon.is_full() {
            break;
        }
        let g = &set.generators[gi];
        let entries: Vec<(u32, Rational)> = g.terms().map(|(t, c)| (index[&t.mul(&m)], c.clone())).collect();
        let row = row_from_rationals(entries);
        if seen.insert(row.clone()) {
            echelon.insert(row);
        }
    }
    Block {
        monomials,
        index,
        echelon,
        columns: ncols,
    }
}

type BlockKey = (u64, usize, u64);

fn block_cache() -> &'static DashMap<BlockKey, Arc<Block>> {
    static CACHE: OnceLock<DashMap<BlockKey, Arc<Block>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// Drops all cached slice data.
pub fn clear_cache() {
    block_cache().clear();
}

fn block(set: &GeneratorSet, d: usize, key: u64) -> Arc<Block> {
    let k = (set.id, d, key);
    if let Some(b) = block_cache().get(&k) {
        return b.clone();
    }
    let b = Arc::new(build_block(set, d, key));
    block_cache().insert(k, b.clone());
    b
}

fn check_ambient(set: &GeneratorSet, f: &Polynomial) -> Result<()> {
    if f.nvars() != set.n {
        return Err(Error::VarCountMismatch {
            left: set.n,
            right: f.nvars(),
        });
    }
    Ok(())
}

/// Splits a homogeneous polynomial of degree `d` by parity block.
fn split_blocks(set: &GeneratorSet, f: &Polynomial) -> BTreeMap<u64, Polynomial> {
    let mut out: BTreeMap<u64, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        out.entry(set.grading.key(m.parity_bits()))
            .or_default()
            .push((m.clone(), c.clone()));
    }
    out.into_iter()
        .map(|(k, terms)| (k, Polynomial::from_terms(set.n, terms).expect("same ambient")))
        .collect()
}

/// True iff `f` lies in the ideal; inhomogeneous input is tested componentwise.
pub fn contains(set: &GeneratorSet, f: &Polynomial) -> Result<bool> {
    check_ambient(set, f)?;
    let min = set.min_degree();
    for (d, fd) in f.homogeneous_components() {
        let d = d as usize;
        if d < min {
            return Ok(false);
        }
        for (key, part) in split_blocks(set, &fd) {
            let b = block(set, d, key);
            let member = b.row_of(&part).is_some_and(|row| b.echelon.contains(row));
            if !member {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every generator of `i` lies in `j`.
pub fn ideal_leq(i: &GeneratorSet, j: &GeneratorSet) -> Result<bool> {
    if i.n != j.n {
        return Err(Error::SizeMismatch(i.n, j.n));
    }
    for g in &i.generators {
        if !contains(j, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-`d` part of an ideal.
#[derive(Clone, Debug)]
pub struct GradedSlice {
    pub degree: usize,
    pub n: usize,
    /// Spanning products `(generator index, multiplier)`.
    pub columns: Vec<(usize, Monomial)>,
    pub rank: usize,
    pub monomial_count: usize,
}

impl GradedSlice {
    pub fn column_polynomials(&self, set: &GeneratorSet) -> Vec<Polynomial> {
        self.columns
            .iter()
            .map(|(gi, m)| set.generators[*gi].mul_monomial(m, &Rational::from_integer(1.into())))
            .collect()
    }
}

fn block_keys(set: &GeneratorSet, d: usize) -> Vec<u64> {
    let table = monomial_table(set.n, d);
    let mut keys: Vec<u64> = table.by_parity.keys().map(|p| set.grading.key(*p)).collect();
    keys.sort_unstable();
    keys.dedup();
    keys
}

pub fn slice(set: &GeneratorSet, d: usize) -> GradedSlice {
    let mut columns = Vec::new();
    let mut rank = 0;
    for key in block_keys(set, d) {
        columns.extend(block_columns(set, d, key));
        rank += block(set, d, key).rank();
    }
    GradedSlice {
        degree: d,
        n: set.n,
        columns,
        rank,
        monomial_count: monomial_table(set.n, d).monomials.len(),
    }
}

/// The parity blocks of the degree-`d` slice, built on demand.
pub fn slice_blocks(set: &GeneratorSet, d: usize) -> Vec<Arc<Block>> {
    block_keys(set, d).into_iter().map(|k| block(set, d, k)).collect()
}

/// Rank of the degree-`d` slice.
pub fn slice_rank(set: &GeneratorSet, d: usize) -> usize {
    block_keys(set, d).into_iter().map(|k| block(set, d, k).rank()).sum()
}

/// A subspace of the degree-`d` forms, in coordinates of [`monomials_of_degree`].
#[derive(Clone, Debug)]
pub struct SliceSpace {
    pub n: usize,
    pub degree: usize,
    echelon: Echelon,
}

impl SliceSpace {
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn intersect(&self, other: &SliceSpace) -> SliceSpace {
        SliceSpace {
            n: self.n,
            degree: self.degree,
            echelon: linalg::intersect(&self.echelon, &other.echelon),
        }
    }

    pub fn same_as(&self, other: &SliceSpace) -> bool {
        linalg::same_space(&self.echelon, &other.echelon)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let table = monomial_table(self.n, self.degree);
        let index: HashMap<&Monomial, u32> = table.monomials.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
        let mut entries = Vec::new();
        for (m, c) in f.terms() {
            match index.get(m) {
                Some(&i) => entries.push((i, c.clone())),
                None => return false,
            }
        }
        self.echelon.contains(row_from_rationals(entries))
    }
}

/// The full degree-`d` slice as a subspace of all degree-`d` forms.
pub fn slice_space(set: &GeneratorSet, d: usize) -> SliceSpace {
    let table = monomial_table(set.n, d);
    let index: HashMap<&Monomial, u32> = table.monomials.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
    let mut echelon = Echelon::new(table.monomials.len());
    for key in block_keys(set, d) {
        let b = block(set, d, key);
        for row in b.echelon.rows() {
            echelon.insert(row.iter().map(|(c, v)| (index[&b.monomials[*c as usize]], v.clone())).collect());
        }
    }
    SliceSpace { n: set.n, degree: d, echelon }
}

/// Whether `a` and `b` have equal slices in every degree up to `d_max`.
pub fn slice_equal(a: &GeneratorSet, b: &GeneratorSet, d_max: usize) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    for d in 0..=d_max {
        if !slice_space(a, d).same_as(&slice_space(b, d)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree-by-degree comparison of `I1 ∩ I2` with `J1 ∩ J2` up to `d_max`.
pub fn intersection_slices_equal(
    i: (&GeneratorSet, &GeneratorSet),
    j: (&GeneratorSet, &GeneratorSet),
    d_max: usize,
) -> Result<Vec<(usize, usize, usize, bool)>> {
    let n = i.0.n;
    if [i.1.n, j.0.n, j.1.n].iter().any(|&m| m != n) {
        return Err(Error::SizeMismatch(n, i.1.n.max(j.0.n).max(j.1.n)));
    }
    let mut out = Vec::new();
    for d in 0..=d_max {
        let left = slice_space(i.0, d).intersect(&slice_space(i.1, d));
        let right = slice_space(j.0, d).intersect(&slice_space(j.1, d));
        out.push((d, left.rank(), right.rank(), left.same_as(&right)));
    }
    Ok(out)
}

/// An explicit combination `f = Σ c · m · g_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateTerm {
    pub generator: usize,
    pub monomial: String,
    pub coeff: String,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub terms: Vec<(usize, Monomial, Rational)>,
}

impl Certificate {
    /// Recomputes `Σ c · m · g_i`.
    pub fn evaluate(&self, set: &GeneratorSet) -> Polynomial {
        let mut acc = Polynomial::zero(set.n);
        for (gi, m, c) in &self.terms {
            acc = &acc + &set.generators[*gi].mul_monomial(m, c);
        }
        acc
    }

    pub fn verify(&self, set: &GeneratorSet, f: &Polynomial) -> bool {
        self.evaluate(set) == *f
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<CertificateTerm> = self
            .terms
            .iter()
            .map(|(g, m, c)| CertificateTerm {
                generator: *g,
                monomial: m.to_string(),
                coeff: if c.is_integer() {
                    c.numer().to_string()
                } else {
                    format!("{}/{}", c.numer(), c.denom())
                },
            })
            .collect();
        serde_json::json!({ "member": true, "combination": terms })
    }
}

/// Membership with an explicit combination of generators, computed by a separate tracked
/// rational elimination. `None` when `f` is not in the ideal.
pub fn membership_certificate(set: &GeneratorSet, f: &Polynomial) -> Result<Option<Certificate>> {
    check_ambient(set, f)?;
    let mut terms = Vec::new();
    for (d, fd) in f.homogeneous_components() {
        let d = d as usize;
        for (key, part) in split_blocks(set, &fd) {
            let monomials = block_monomials(set, d, key);
            let index: HashMap<&Monomial, u32> = monomials.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
            let cols = block_columns(set, d, key);
            let mut tracked = TrackedEchelon::new();
            for (ci, (gi, m)) in cols.iter().enumerate() {
                if tracked.rank() == monomials.len() {
                    break;
                }
                let v = set.generators[*gi]
                    .terms()
                    .map(|(t, c)| (index[&t.mul(m)], c.clone()))
                    .collect();
                tracked.insert(ci, v);
            }
            let target = part.terms().map(|(m, c)| (index[m], c.clone())).collect();
            match tracked.solve(target) {
                None => return Ok(None),
                Some(sol) => {
                    for (ci, c) in sol {
                        let (gi, m) = &cols[ci];
                        terms.push((*gi, m.clone(), c));
                    }
                }
            }
        }
    }
    Ok(Some(Certificate { terms }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;

    fn set(n: usize, gens: &[&str]) -> GeneratorSet {
        GeneratorSet::new(n, "test", gens.iter().map(|g| parse(g, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(GeneratorSet::new(2, "e", vec![]).is_err());
        assert!(GeneratorSet::new(2, "z", vec![Polynomial::zero(2)]).is_err());
        assert!(GeneratorSet::new(2, "h", vec![parse("x1 + 1", 2).unwrap()]).is_err());
    }

    #[test]
    fn simple_slices() {
        let i = set(2, &["x1 - x2"]);
        assert_eq!(slice_rank(&i, 0), 0);
        assert_eq!(slice_rank(&i, 1), 1);
        assert_eq!(slice_rank(&i, 3), 3);
        let s = slice(&i, 2);
        assert_eq!(s.columns.len(), 2);
        assert_eq!(s.monomial_count, 3);
    }

    #[test]
    fn membership() {
        let i = set(3, &["x1^2 - x2^2", "x2*x3"]);
        assert!(contains(&i, &parse("x1^3 - x1*x2^2 + 5*x2*x3^2", 3).unwrap()).unwrap());
        assert!(!contains(&i, &parse("x1^2", 3).unwrap()).unwrap());
        assert!(!contains(&i, &parse("x1", 3).unwrap()).unwrap());
        assert!(contains(&i, &Polynomial::zero(3)).unwrap());
        assert!(contains(&i, &parse("x2*x3 + x1^2*x2*x3", 3).unwrap()).unwrap());
        assert!(contains(&i, &parse("x1", 2).unwrap()).is_err());
    }

    #[test]
    fn certificates_reproduce_target() {
        let i = set(3, &["x1^2 - x2^2", "x2*x3"]);
        let f = parse("x1^3 - x1*x2^2 + 5*x2*x3^2 - 1/3*x2^2*x3", 3).unwrap();
        let cert = membership_certificate(&i, &f).unwrap().unwrap();
        assert!(cert.verify(&i, &f));
        assert!(membership_certificate(&i, &parse("x3^2", 3).unwrap()).unwrap().is_none());
        let json = cert.to_json();
        assert_eq!(json["member"], true);
    }

    #[test]
    fn inclusion_and_slices() {
        let plus = set(2, &["x1 + x2"]);
        let minus = set(2, &["x1 - x2"]);
        assert!(!ideal_leq(&plus, &minus).unwrap());
        assert!(!ideal_leq(&minus, &plus).unwrap());
        assert!(ideal_leq(&plus, &plus).unwrap());
        assert!(!slice_equal(&plus, &minus, 1).unwrap());
        assert!(slice_equal(&plus, &plus.clone(), 4).unwrap());
        let full = set(2, &["x1", "x2"]);
        assert!(ideal_leq(&plus, &full).unwrap());
        let meet = slice_space(&plus, 2).intersect(&slice_space(&minus, 2));
        assert_eq!(meet.rank(), 1);
        assert!(meet.contains(&parse("x1^2 - x2^2", 2).unwrap()));
    }

    #[test]
    fn grading_blocks() {
        let i = set(3, &["x1*x2*x3"]);
        assert_eq!(i.block_count(), 8);
        let j = set(3, &["x1 - x2"]);
        assert_eq!(j.block_count(), 4);
    }
}
