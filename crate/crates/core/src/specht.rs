//! Tableaux, Vandermonde products and Specht polynomials of types S, B and D.

use std::collections::HashSet;
use std::fmt;

use crate::combinat::{Bipartition, Dipartition, Partition, Sign};
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Polynomial, Rational};
use crate::groups::{GroupKind, Permutation};
use crate::ideals::GeneratorSet;

/// A filling of a Young diagram with distinct positive labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Rows must have weakly decreasing lengths and distinct positive entries.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(&lens).map_err(|_| Error::InvalidTableau(format!("row lengths {lens:?} increase")))?;
        let mut seen = HashSet::new();
        for &v in rows.iter().flatten() {
            if v == 0 {
                return Err(Error::InvalidTableau("entries are 1-based".into()));
            }
            if !seen.insert(v) {
                return Err(Error::InvalidTableau(format!("entry {v} repeated")));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Fills the columns top to bottom with `start, start+1, ...`.
    pub fn column_filling(shape: &Partition, start: usize) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut next = start;
        for col in shape.conjugate().parts() {
            for row in rows.iter_mut().take(*col) {
                row.push(next);
                next += 1;
            }
        }
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.part(1))
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    pub fn relabel(&self, sigma: &Permutation) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&v| sigma.apply_label(v)).collect())
                .collect(),
        }
    }

    fn check_complete(&self) -> Result<()> {
        let n = self.size();
        if let Some(v) = self.entries().find(|&v| v > n) {
            return Err(Error::InvalidTableau(format!("entry {v} exceeds {n}")));
        }
        Ok(())
    }
}

/// A pair of fillings that together use each of `1..=n` once.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Bitableau {
    pub left: Tableau,
    pub right: Tableau,
}

impl Bitableau {
    pub fn new(left: Tableau, right: Tableau) -> Result<Self> {
        let n = left.size() + right.size();
        let mut seen = vec![false; n];
        for v in left.entries().chain(right.entries()) {
            if v > n {
                return Err(Error::InvalidTableau(format!("entry {v} exceeds {n}")));
            }
            if seen[v - 1] {
                return Err(Error::InvalidTableau(format!("entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Bitableau { left, right })
    }

    /// Column filling of the left diagram, then the right one.
    pub fn column_filling(shape: &Bipartition) -> Self {
        let left = Tableau::column_filling(&shape.first, 1);
        let right = Tableau::column_filling(&shape.second, shape.first.size() + 1);
        Bitableau { left, right }
    }

    pub fn n(&self) -> usize {
        self.left.size() + self.right.size()
    }

    pub fn shape(&self) -> Bipartition {
        Bipartition::new(self.left.shape.clone(), self.right.shape.clone())
    }

    pub fn swapped(&self) -> Bitableau {
        Bitableau {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }

    pub fn relabel(&self, sigma: &Permutation) -> Bitableau {
        Bitableau {
            left: self.left.relabel(sigma),
            right: self.right.relabel(sigma),
        }
    }

    /// `{"left": [[..],..], "right": [[..],..]}`.
    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let rows = |key: &str| -> Result<Vec<Vec<usize>>> {
            match v.get(key) {
                None | Some(serde_json::Value::Null) => Ok(Vec::new()),
                Some(x) => serde_json::from_value(x.clone())
                    .map_err(|e| Error::InvalidTableau(format!("{key}: {e}"))),
            }
        };
        Bitableau::new(Tableau::new(rows("left")?)?, Tableau::new(rows("right")?)?)
    }
}

/// `∏_{i<j} (X_{k_i} - X_{k_j})` over the 1-based labels `indices`.
pub fn vandermonde(n: usize, indices: &[usize]) -> Result<Polynomial> {
    vandermonde_pow(n, indices, 1)
}

fn vandermonde_pow(n: usize, indices: &[usize], e: u32) -> Result<Polynomial> {
    let mut seen = HashSet::new();
    for &k in indices {
        if k == 0 || k > n {
            return Err(Error::InvalidIndex(k));
        }
        if !seen.insert(k) {
            return Err(Error::RepeatedIndex(k));
        }
    }
    let mut acc = Polynomial::one(n);
    for (a, &i) in indices.iter().enumerate() {
        for &j in &indices[a + 1..] {
            let f = power_var(n, i, e) - power_var(n, j, e);
            acc = &acc * &f;
        }
    }
    Ok(acc)
}

fn power_var(n: usize, label: usize, e: u32) -> Polynomial {
    let mut exps = vec![0u32; n];
    exps[label - 1] = e;
    Polynomial::monomial(Monomial::new(&exps))
}

fn product_of_vars(n: usize, labels: impl Iterator<Item = usize>) -> Polynomial {
    let mut exps = vec![0u32; n];
    for l in labels {
        exps[l - 1] += 1;
    }
    Polynomial::monomial(Monomial::new(&exps))
}

fn column_product(n: usize, t: &Tableau, e: u32) -> Polynomial {
    let mut acc = Polynomial::one(n);
    for c in t.columns() {
        acc = &acc * &vandermonde_pow(n, &c, e).expect("validated tableau");
    }
    acc
}

/// Product of the column Vandermonde determinants of `t`.
pub fn specht_s(t: &Tableau) -> Result<Polynomial> {
    t.check_complete()?;
    Ok(column_product(t.size(), t, 1))
}

/// `spe_T(X²) spe_S(X²) ∏_{j∈S} X_j`.
pub fn specht_b(bt: &Bitableau) -> Polynomial {
    let n = bt.n();
    let sq = &column_product(n, &bt.left, 2) * &column_product(n, &bt.right, 2);
    &sq * &product_of_vars(n, bt.right.entries())
}

/// `spe_T(X²) spe_S(X²) (∏_{i∈T} X_i ± ∏_{j∈S} X_j)` for a bitableau of shape `(λ, λ)`.
pub fn specht_d(bt: &Bitableau, sign: Sign) -> Result<Polynomial> {
    if bt.left.shape != bt.right.shape {
        return Err(Error::InvalidShape(format!(
            "signed form needs equal shapes, got {} and {}",
            bt.left.shape, bt.right.shape
        )));
    }
    let n = bt.n();
    let sq = &column_product(n, &bt.left, 2) * &column_product(n, &bt.right, 2);
    let t = product_of_vars(n, bt.left.entries());
    let s = product_of_vars(n, bt.right.entries());
    let tail = match sign {
        Sign::Plus => t + s,
        Sign::Minus => t - s,
    };
    Ok(&sq * &tail)
}

/// Degree of the S-Specht polynomials of shape `λ`.
pub fn s_specht_degree(lam: &Partition) -> usize {
    lam.column_pairs()
}

/// Degree of the B-Specht polynomials of shape `(λ, μ)`.
pub fn b_specht_degree(shape: &Bipartition) -> usize {
    2 * (shape.first.column_pairs() + shape.second.column_pairs()) + shape.second.size()
}

/// Shape descriptor of a Specht ideal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Shape {
    S(Partition),
    B(Bipartition),
    D(Dipartition),
}

impl Shape {
    pub fn kind(&self) -> GroupKind {
        match self {
            Shape::S(_) => GroupKind::S,
            Shape::B(_) => GroupKind::B,
            Shape::D(_) => GroupKind::D,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Shape::S(p) => p.size(),
            Shape::B(b) => b.n(),
            Shape::D(d) => d.n(),
        }
    }

    pub fn parse(kind: GroupKind, text: &str) -> Result<Self> {
        Ok(match kind {
            GroupKind::S => Shape::S(Partition::parse(text)?),
            GroupKind::B => Shape::B(Bipartition::parse(text)?),
            GroupKind::D => Shape::D(Dipartition::parse(text)?),
        })
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::S(p) => write!(f, "{p}"),
            Shape::B(b) => write!(f, "{b}"),
            Shape::D(d) => write!(f, "{d}"),
        }
    }
}

/// A Specht polynomial kept in factored, tableau-indexed form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SpechtIndex {
    S(Tableau),
    B(Bitableau),
    D(Bitableau, Sign),
}

impl SpechtIndex {
    pub fn n(&self) -> usize {
        match self {
            SpechtIndex::S(t) => t.size(),
            SpechtIndex::B(bt) | SpechtIndex::D(bt, _) => bt.n(),
        }
    }

    /// Base index for a shape, by column filling.
    pub fn base(shape: &Shape) -> Vec<SpechtIndex> {
        match shape {
            Shape::S(p) => vec![SpechtIndex::S(Tableau::column_filling(p, 1))],
            Shape::B(b) => vec![SpechtIndex::B(Bitableau::column_filling(b))],
            Shape::D(Dipartition::Pair(a, b)) => vec![
                SpechtIndex::B(Bitableau::column_filling(&Bipartition::new(a.clone(), b.clone()))),
                SpechtIndex::B(Bitableau::column_filling(&Bipartition::new(b.clone(), a.clone()))),
            ],
            Shape::D(Dipartition::Signed(l, s)) => vec![SpechtIndex::D(
                Bitableau::column_filling(&Bipartition::new(l.clone(), l.clone())),
                *s,
            )],
        }
    }

    pub fn relabel(&self, sigma: &Permutation) -> SpechtIndex {
        match self {
            SpechtIndex::S(t) => SpechtIndex::S(t.relabel(sigma)),
            SpechtIndex::B(bt) => SpechtIndex::B(bt.relabel(sigma)),
            SpechtIndex::D(bt, s) => SpechtIndex::D(bt.relabel(sigma), *s),
        }
    }

    pub fn expand(&self) -> Polynomial {
        match self {
            SpechtIndex::S(t) => column_product(t.size(), t, 1),
            SpechtIndex::B(bt) => specht_b(bt),
            SpechtIndex::D(bt, s) => specht_d(bt, *s).expect("equal shapes by construction"),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            SpechtIndex::S(t) => s_specht_degree(&t.shape),
            SpechtIndex::B(bt) => b_specht_degree(&bt.shape()),
            SpechtIndex::D(bt, _) => b_specht_degree(&bt.shape()),
        }
    }

    /// Evaluates without expanding, stopping at the first vanishing factor.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: point.len(),
            });
        }
        let x = |l: usize| &point[l - 1];
        let cols = |t: &Tableau, squared: bool, acc: &mut Rational| {
            for c in t.columns() {
                for (a, &i) in c.iter().enumerate() {
                    for &j in &c[a + 1..] {
                        let d = if squared {
                            x(i) * x(i) - x(j) * x(j)
                        } else {
                            x(i) - x(j)
                        };
                        *acc *= d;
                        if num_traits::Zero::is_zero(acc) {
                            return;
                        }
                    }
                }
            }
        };
        let prod = |t: &Tableau| t.entries().fold(Rational::from_integer(1.into()), |a, l| a * x(l));
        let mut acc = Rational::from_integer(1.into());
        match self {
            SpechtIndex::S(t) => cols(t, false, &mut acc),
            SpechtIndex::B(bt) => {
                cols(&bt.left, true, &mut acc);
                cols(&bt.right, true, &mut acc);
                acc *= prod(&bt.right);
            }
            SpechtIndex::D(bt, s) => {
                cols(&bt.left, true, &mut acc);
                cols(&bt.right, true, &mut acc);
                let tail = match s {
                    Sign::Plus => prod(&bt.left) + prod(&bt.right),
                    Sign::Minus => prod(&bt.left) - prod(&bt.right),
                };
                acc *= tail;
            }
        }
        Ok(acc)
    }

    /// Identifies the polynomial up to sign: column sets, and the set(s) feeding the monomial tail.
    fn key(&self) -> (u8, Vec<Vec<usize>>, Vec<Vec<usize>>) {
        fn sorted_cols(ts: &[&Tableau]) -> Vec<Vec<usize>> {
            let mut cols: Vec<Vec<usize>> = ts
                .iter()
                .flat_map(|t| t.columns())
                .filter(|c| c.len() > 1)
                .map(|mut c| {
                    c.sort_unstable();
                    c
                })
                .collect();
            cols.sort();
            cols
        }
        fn sorted_set(t: &Tableau) -> Vec<usize> {
            let mut v: Vec<usize> = t.entries().collect();
            v.sort_unstable();
            v
        }
        match self {
            SpechtIndex::S(t) => (0, sorted_cols(&[t]), Vec::new()),
            SpechtIndex::B(bt) => (1, sorted_cols(&[&bt.left, &bt.right]), vec![sorted_set(&bt.right)]),
            SpechtIndex::D(bt, s) => {
                let mut pair = vec![sorted_set(&bt.left), sorted_set(&bt.right)];
                pair.sort();
                (2 + (*s == Sign::Minus) as u8, sorted_cols(&[&bt.left, &bt.right]), pair)
            }
        }
    }
}

/// The `S_n`-orbit of the base Specht polynomial(s) of `shape`, deduplicated up to sign,
/// in order of first appearance along the lexicographic enumeration of `S_n`.
pub fn orbit(shape: &Shape) -> Result<Vec<SpechtIndex>> {
    let n = shape.n();
    if n == 0 {
        return Err(Error::InvalidShape("shape of size 0".into()));
    }
    let bases = SpechtIndex::base(shape);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in &bases {
        for sigma in Permutation::all(n) {
            let idx = base.relabel(&sigma);
            if seen.insert(idx.key()) {
                out.push(idx);
            }
        }
    }
    Ok(out)
}

/// Generating family of the Specht ideal of `shape`.
pub fn generator_set(shape: &Shape) -> Result<GeneratorSet> {
    let gens = orbit(shape)?.iter().map(SpechtIndex::expand).collect();
    Ok(GeneratorSet::new(shape.n(), shape.to_string(), gens)?.with_shape(shape.clone()))
}
