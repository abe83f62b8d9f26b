//! Orbit types of points and two independent membership tests for Specht varieties:
//! direct evaluation of every generator, and a prediction from orbit data alone.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::combinat::{bidominance_leq, row_sum, Bipartition, Dipartition, Partition, Sign};
use crate::error::{Error, Result};
use crate::exactalg::{rat, Rational};
use crate::specht::{orbit, Shape, SpechtIndex};

/// B-orbit type of a point, refined by the formal sign where that is defined.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrbitDatum {
    pub btype: Bipartition,
    pub dsign: Option<Sign>,
}

impl OrbitDatum {
    pub fn new(btype: Bipartition, dsign: Option<Sign>) -> Result<Self> {
        if !nonempty_orbit(&btype) {
            return Err(Error::InvalidDatum(format!("orbit set of {btype} is empty")));
        }
        if dsign.is_some() && doubled_half(&btype).is_none() {
            return Err(Error::InvalidDatum(format!("{btype} carries no formal sign")));
        }
        Ok(OrbitDatum { btype, dsign })
    }

    pub fn to_json(&self, point: &[Rational]) -> serde_json::Value {
        json!({
            "btype": self.btype.to_string(),
            "sign": self.dsign.map(|s| s.symbol().to_string()),
            "point": point.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for OrbitDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.dsign {
            Some(s) => write!(f, "{} [{}]", self.btype, s.symbol()),
            None => write!(f, "{}", self.btype),
        }
    }
}

/// `λ_{i+1} = λ_1` whenever `μ_i > 0`.
pub fn nonempty_orbit(b: &Bipartition) -> bool {
    (1..=b.second.len()).all(|i| b.second.part(i) == 0 || b.first.part(i + 1) == b.first.part(1))
}

/// For `(∅, 2λ)` returns `λ`.
fn doubled_half(b: &Bipartition) -> Option<Partition> {
    if !b.first.is_empty() || b.second.parts().iter().any(|p| p % 2 == 1) {
        return None;
    }
    Some(Partition::from_unsorted(b.second.parts().iter().map(|p| p / 2).collect()))
}

/// Descending multiplicities of the distinct coordinate values.
pub fn s_orbit_type(p: &[Rational]) -> Partition {
    let mut counts: BTreeMap<&Rational, usize> = BTreeMap::new();
    for c in p {
        *counts.entry(c).or_default() += 1;
    }
    Partition::from_unsorted(counts.into_values().collect())
}

pub fn b_orbit_type(p: &[Rational]) -> Bipartition {
    let squares: Vec<Rational> = p.iter().map(|c| c * c).collect();
    let kappa = s_orbit_type(&squares);
    let t = p.iter().filter(|c| c.is_zero()).count();
    let s = if t == 0 {
        kappa.len()
    } else {
        (1..=kappa.len()).filter(|&i| kappa.part(i) >= t).max().unwrap_or(0)
    };
    let mut first = vec![t; s];
    first.extend(&kappa.parts()[s..]);
    let second = (1..=s).map(|i| kappa.part(i) - t).collect();
    Bipartition::new(Partition::from_unsorted(first), Partition::from_unsorted(second))
}

/// Sign of the coordinate product, for an all-nonzero point whose squared type is doubled.
pub fn formal_sign(p: &[Rational]) -> Result<Sign> {
    if p.iter().any(|c| c.is_zero()) {
        return Err(Error::FormalSignUndefined("zero coordinate".into()));
    }
    let squares: Vec<Rational> = p.iter().map(|c| c * c).collect();
    let kappa = s_orbit_type(&squares);
    if kappa.parts().iter().any(|k| k % 2 == 1) {
        return Err(Error::FormalSignUndefined(format!("squared type {kappa} is not doubled")));
    }
    let negatives = p.iter().filter(|c| c.is_negative()).count();
    Ok(if negatives % 2 == 0 { Sign::Plus } else { Sign::Minus })
}

/// Full orbit datum of a point.
pub fn orbit_datum(p: &[Rational]) -> OrbitDatum {
    let btype = b_orbit_type(p);
    let dsign = if doubled_half(&btype).is_some() {
        formal_sign(p).ok()
    } else {
        None
    };
    OrbitDatum { btype, dsign }
}

/// Canonical point of a B-orbit set: `λ_1` zeros, then a block of value `i` and size
/// `μ_i + λ_{i+1}` for `i = 1, 2, ...`.
pub fn canonical_point(b: &Bipartition) -> Result<Vec<Rational>> {
    if !nonempty_orbit(b) {
        return Err(Error::InvalidDatum(format!("orbit set of {b} is empty")));
    }
    let mut point = vec![Rational::zero(); b.first.part(1)];
    let blocks = b.second.len().max(b.first.len().saturating_sub(1));
    for i in 1..=blocks {
        let size = b.second.part(i) + b.first.part(i + 1);
        point.extend(std::iter::repeat_n(rat(i as i64), size));
    }
    Ok(point)
}

/// One point per nonempty B-orbit set of size `n`, split into the two sign classes where the
/// formal sign is defined (the minus class negates the last coordinate).
pub fn representatives(n: usize) -> Vec<(OrbitDatum, Vec<Rational>)> {
    let mut out = Vec::new();
    for b in crate::combinat::bipartitions(n) {
        let Ok(point) = canonical_point(&b) else {
            continue;
        };
        if doubled_half(&b).is_some() {
            let mut minus = point.clone();
            let last = minus.len() - 1;
            minus[last] = -&minus[last];
            out.push((OrbitDatum { btype: b.clone(), dsign: Some(Sign::Plus) }, point));
            out.push((OrbitDatum { btype: b, dsign: Some(Sign::Minus) }, minus));
        } else {
            out.push((OrbitDatum { btype: b, dsign: None }, point));
        }
    }
    out
}

fn cached_orbit(shape: &Shape) -> Result<Arc<Vec<SpechtIndex>>> {
    static CACHE: OnceLock<DashMap<Shape, Arc<Vec<SpechtIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(o) = cache.get(shape) {
        return Ok(o.clone());
    }
    let o = Arc::new(orbit(shape)?);
    cache.insert(shape.clone(), o.clone());
    Ok(o)
}

/// Whether every generator of the Specht ideal of `shape` vanishes at `p`.
pub fn in_variety_bruteforce(shape: &Shape, p: &[Rational]) -> Result<bool> {
    if p.len() != shape.n() {
        return Err(Error::LengthMismatch {
            expected: shape.n(),
            got: p.len(),
        });
    }
    for g in cached_orbit(shape)?.iter() {
        if !g.eval(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_datum(datum: &OrbitDatum, n: usize) -> Result<()> {
    if datum.btype.n() != n {
        return Err(Error::SizeMismatch(n, datum.btype.n()));
    }
    if !nonempty_orbit(&datum.btype) {
        return Err(Error::InvalidDatum(format!("orbit set of {} is empty", datum.btype)));
    }
    Ok(())
}

/// Membership in the B-variety of `shape` from the orbit type alone.
pub fn in_b_variety_predicted(shape: &Bipartition, datum: &OrbitDatum) -> Result<bool> {
    check_datum(datum, shape.n())?;
    Ok(!bidominance_leq(&datum.btype, shape)?)
}

/// Membership in the D-variety of `shape` from the orbit datum alone.
pub fn in_variety_predicted(shape: &Dipartition, datum: &OrbitDatum) -> Result<bool> {
    check_datum(datum, shape.n())?;
    match shape {
        Dipartition::Pair(a, b) => Ok(in_b_variety_predicted(&Bipartition::new(a.clone(), b.clone()), datum)?
            && in_b_variety_predicted(&Bipartition::new(b.clone(), a.clone()), datum)?),
        Dipartition::Signed(lam, sign) => {
            if in_b_variety_predicted(&Bipartition::new(lam.clone(), lam.clone()), datum)? {
                return Ok(true);
            }
            let doubled = Bipartition::new(Partition::empty(), row_sum(lam, lam));
            Ok(datum.btype == doubled && datum.dsign == Some(sign.flip()))
        }
    }
}

/// `V_A ⊆ V_B`, decided on the representative points only.
pub fn variety_leq(a: &Dipartition, b: &Dipartition) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let (sa, sb) = (Shape::D(a.clone()), Shape::D(b.clone()));
    for (_, p) in representatives(a.n()) {
        if in_variety_bruteforce(&sa, &p)? && !in_variety_bruteforce(&sb, &p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Looks for an all-nonzero representative in `V_(λ,μ) \ V_(μ,λ)`; checks at most `budget`
/// points when given.
pub fn zero_coordinate_scan(lam: &Partition, mu: &Partition, budget: Option<usize>) -> Result<Option<Vec<Rational>>> {
    if lam == mu {
        return Err(Error::InvalidShape("needs two distinct partitions".into()));
    }
    let n = lam.size() + mu.size();
    let here = Shape::B(Bipartition::new(lam.clone(), mu.clone()));
    let there = Shape::B(Bipartition::new(mu.clone(), lam.clone()));
    let candidates = representatives(n)
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| p.iter().all(|c| !c.is_zero()))
        .take(budget.unwrap_or(usize::MAX));
    for p in candidates {
        if in_variety_bruteforce(&here, &p)? && !in_variety_bruteforce(&there, &p)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
