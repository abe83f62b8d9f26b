//! Exact sparse row reduction.
//!
//! Rows are kept fraction-free: integer entries with content 1 and a positive leading entry.
//! The pivot of a row is its first (smallest) column index, so reducing a vector by the
//! stored rows in increasing pivot order never creates entries to the left of the cursor.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::Rational;

pub type SparseRow = Vec<(u32, BigInt)>;

fn make_primitive(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let neg = row[0].1.is_negative();
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if neg {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// `a*v - b*r`, where `r` starts at column `p` and `v[p] = b`; the result has no entry at `p`.
fn combine(v: &SparseRow, a: &BigInt, r: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(v.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < r.len() {
        let ci = v.get(i).map_or(u32::MAX, |e| e.0);
        let cj = r.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a * &v[i].1));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(b * &r[j].1)));
            j += 1;
        } else {
            let x = a * &v[i].1 - b * &r[j].1;
            if !x.is_zero() {
                out.push((ci, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Converts rational coefficients at the given columns into a primitive integer row.
pub fn row_from_rationals(mut entries: Vec<(u32, Rational)>) -> SparseRow {
    entries.retain(|e| !e.1.is_zero());
    entries.sort_by_key(|e| e.0);
    let mut lcm = BigInt::one();
    for (_, c) in &entries {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: SparseRow = entries
        .into_iter()
        .map(|(k, c)| (k, c.numer() * (&lcm / c.denom())))
        .collect();
    make_primitive(&mut row);
    row
}

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: HashMap<u32, usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Remainder of `v` modulo the row space, up to a nonzero scalar.
    pub fn reduce(&self, mut v: SparseRow) -> SparseRow {
        let mut cursor = 0;
        while cursor < v.len() {
            let col = v[cursor].0;
            match self.pivot_row.get(&col) {
                None => cursor += 1,
                Some(&ri) => {
                    let r = &self.rows[ri];
                    let a = &r[0].1;
                    let b = &v[cursor].1;
                    let g = a.gcd(b);
                    let (a, b) = (a / &g, b / &g);
                    v = combine(&v, &a, r, &b);
                    make_primitive(&mut v);
                }
            }
        }
        make_primitive(&mut v);
        v
    }

    pub fn contains(&self, v: SparseRow) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the row space; returns true if the rank grew.
    pub fn insert(&mut self, v: SparseRow) -> bool {
        let r = self.reduce(v);
        if r.is_empty() {
            return false;
        }
        self.pivot_row.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }
}

/// Basis of the intersection of two row spaces over the same columns (Zassenhaus).
pub fn intersect(u: &Echelon, w: &Echelon) -> Echelon {
    let n = u.ncols.max(w.ncols) as u32;
    let mut big = Echelon::new(2 * n as usize);
    for r in u.rows() {
        let mut doubled = r.clone();
        doubled.extend(r.iter().map(|(c, v)| (c + n, v.clone())));
        big.insert(doubled);
    }
    for r in w.rows() {
        big.insert(r.clone());
    }
    let mut out = Echelon::new(n as usize);
    for r in big.rows() {
        if r[0].0 >= n {
            out.insert(r.iter().map(|(c, v)| (c - n, v.clone())).collect());
        }
    }
    out
}

/// True iff the two row spaces coincide.
pub fn same_space(u: &Echelon, w: &Echelon) -> bool {
    u.rank() == w.rank() && u.rows().iter().all(|r| w.contains(r.clone()))
}

/// Row reduction over the rationals that remembers how each stored row was built from the
/// inserted vectors. Used to produce explicit membership certificates.
#[derive(Clone, Debug, Default)]
pub struct TrackedEchelon {
    rows: Vec<(BTreeMap<u32, Rational>, BTreeMap<usize, Rational>)>,
    pivot_row: HashMap<u32, usize>,
}

impl TrackedEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_tracked(
        &self,
        mut v: BTreeMap<u32, Rational>,
        mut combo: BTreeMap<usize, Rational>,
    ) -> (BTreeMap<u32, Rational>, BTreeMap<usize, Rational>) {
        let mut from = 0u32;
        loop {
            let next = v
                .range(from..)
                .find(|(c, _)| self.pivot_row.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, factor)) = next else {
                break;
            };
            let (row, rcombo) = &self.rows[self.pivot_row[&col]];
            for (c, x) in row {
                let e = v.entry(*c).or_insert_with(Rational::zero);
                *e -= &factor * x;
                if e.is_zero() {
                    v.remove(c);
                }
            }
            for (k, x) in rcombo {
                let e = combo.entry(*k).or_insert_with(Rational::zero);
                *e -= &factor * x;
                if e.is_zero() {
                    combo.remove(k);
                }
            }
            from = col + 1;
        }
        (v, combo)
    }

    /// Inserts the vector labelled `label`; returns true if the rank grew.
    pub fn insert(&mut self, label: usize, v: BTreeMap<u32, Rational>) -> bool {
        let combo = BTreeMap::from([(label, Rational::one())]);
        let (r, c) = self.reduce_tracked(v, combo);
        let Some((&p, lead)) = r.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let r: BTreeMap<u32, Rational> = r.iter().map(|(k, x)| (*k, x * &inv)).collect();
        let c = c.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push((r, c));
        true
    }

    /// Coefficients expressing `v` through the inserted vectors, if `v` lies in their span.
    pub fn solve(&self, v: BTreeMap<u32, Rational>) -> Option<BTreeMap<usize, Rational>> {
        let (r, c) = self.reduce_tracked(v, BTreeMap::new());
        if r.is_empty() {
            Some(c.into_iter().map(|(k, x)| (k, -x)).collect())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn row(v: &[(u32, i64)]) -> SparseRow {
        v.iter().map(|&(c, x)| (c, BigInt::from(x))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[(0, 2), (1, 4)])));
        assert!(e.insert(row(&[(1, 3), (2, -6)])));
        assert!(!e.insert(row(&[(0, 1), (1, 5), (2, -6)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(0, 1), (2, 4)])));
        assert!(!e.contains(row(&[(2, 1)])));
    }

    #[test]
    fn zassenhaus() {
        let mut u = Echelon::new(3);
        u.insert(row(&[(0, 1)]));
        u.insert(row(&[(1, 1)]));
        let mut w = Echelon::new(3);
        w.insert(row(&[(1, 1), (2, 1)]));
        w.insert(row(&[(0, 1), (1, 1)]));
        let i = intersect(&u, &w);
        assert_eq!(i.rank(), 1);
        assert!(i.contains(row(&[(0, 1), (1, 1)])));
        assert!(same_space(&u, &u.clone()));
        assert!(!same_space(&u, &w));
    }

    #[test]
    fn tracked_solution() {
        let mut t = TrackedEchelon::new();
        t.insert(7, BTreeMap::from([(0, rat(1)), (1, rat(1))]));
        t.insert(9, BTreeMap::from([(1, rat(2)), (2, rat(1))]));
        let sol = t.solve(BTreeMap::from([(0, rat(1)), (1, rat(-1)), (2, rat(-1))])).unwrap();
        assert_eq!(sol, BTreeMap::from([(7, rat(1)), (9, rat(-1))]));
        assert!(t.solve(BTreeMap::from([(2, rat(1))])).is_none());
    }
}
