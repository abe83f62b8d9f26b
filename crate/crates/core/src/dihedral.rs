//! The dihedral groups `I_2(n)` acting on the plane: real and imaginary parts of `(x+iy)^k`,
//! the Specht ideal chain, radicality and the reflection-line varieties.
//!
//! The rotation by `2π/n` is never represented exactly. Statements that need it are either
//! exact polynomial identities (recurrence, doubling, modulus) or floating-point samples.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{bivariate_squarefree, parse, Monomial, Polynomial, Rational};
use crate::ideals::linalg::{row_from_rationals, Echelon};
use crate::ideals::{contains, membership_certificate, GeneratorSet};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Below this magnitude an off-line sample counts as vanishing.
const OFF_LINE_FLOOR: f64 = 1e-6;

fn xy_term(a: u32, b: u32, c: BigInt) -> Polynomial {
    Polynomial::term(Monomial::new(&[a, b]), Rational::from_integer(c))
}

/// `Re((x+iy)^k)`.
pub fn re_power(k: u32) -> Polynomial {
    let mut p = Polynomial::zero(2);
    for j in 0..=k / 2 {
        let c = num_integer::binomial(BigInt::from(k), BigInt::from(2 * j));
        let c = if j % 2 == 0 { c } else { -c };
        p = &p + &xy_term(k - 2 * j, 2 * j, c);
    }
    p
}

/// `Im((x+iy)^k)`.
pub fn im_power(k: u32) -> Polynomial {
    let mut p = Polynomial::zero(2);
    for j in 0..k.div_ceil(2) {
        let c = num_integer::binomial(BigInt::from(k), BigInt::from(2 * j + 1));
        let c = if j % 2 == 0 { c } else { -c };
        p = &p + &xy_term(k - 2 * j - 1, 2 * j + 1, c);
    }
    p
}

/// `re_k·x − im_k·y = re_{k+1}` and `re_k·y + im_k·x = im_{k+1}`.
pub fn recurrence_check(k: u32) -> bool {
    let x = Polynomial::var(2, 0).expect("two variables");
    let y = Polynomial::var(2, 1).expect("two variables");
    let (re, im) = (re_power(k), im_power(k));
    &(&re * &x) - &(&im * &y) == re_power(k + 1) && &(&re * &y) + &(&im * &x) == im_power(k + 1)
}

/// `im_{2k} = 2·re_k·im_k`.
pub fn doubling_check(k: u32) -> bool {
    im_power(2 * k) == (&re_power(k) * &im_power(k)).scale(&Rational::from_integer(2.into()))
}

/// `re_k² + im_k² = (x²+y²)^k`.
pub fn modulus_check(k: u32) -> bool {
    let r = re_power(k);
    let i = im_power(k);
    &(&r * &r) + &(&i * &i) == psi1().pow(k)
}

fn psi1() -> Polynomial {
    parse("x1^2 + x2^2", 2).expect("literal")
}

/// Rank of the span of the given polynomials over the rationals.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let mut columns: BTreeMap<Monomial, u32> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = columns.len() as u32;
            columns.entry(m.clone()).or_insert(next);
        }
    }
    let mut e = Echelon::new(columns.len());
    for p in polys {
        e.insert(row_from_rationals(p.terms().map(|(m, c)| (columns[m], c.clone())).collect()));
    }
    e.rank()
}

/// A named ideal of the dihedral chain.
#[derive(Clone, Debug)]
pub struct DihedralIdeal {
    pub label: String,
    pub set: GeneratorSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChainLink {
    pub larger: String,
    pub smaller: String,
    /// Every generator of the smaller ideal has a verified membership certificate.
    pub contained: bool,
    /// The larger ideal has a generator outside the smaller one.
    pub strict: bool,
    /// `"degree"` when a generator degree falls below the smaller ideal's minimum, else `"slice"`.
    pub strictness_reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RadicalEntry {
    pub ideal: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DihedralReport {
    pub n: u32,
    pub chain: Vec<ChainLink>,
    pub incomparable_pair: Option<bool>,
    pub radical: Vec<RadicalEntry>,
    pub nonradical: Vec<RadicalEntry>,
    pub harmonics_rank: usize,
    pub doubling: Option<bool>,
    pub hyperplane_check: bool,
    pub rotation_check: bool,
    pub identities: bool,
}

impl DihedralReport {
    pub fn passed(&self) -> bool {
        let top = (self.n as usize - 1) / 2;
        let radical_ok = self.radical.len() == if self.n.is_multiple_of(2) { 5 } else { 3 }
            && self.nonradical.len() == top.saturating_sub(1);
        self.chain.iter().all(|l| l.contained && l.strict)
            && self.incomparable_pair.unwrap_or(true)
            && radical_ok
            && self.harmonics_rank == 2 * self.n as usize
            && self.doubling.unwrap_or(true)
            && self.hyperplane_check
            && self.rotation_check
            && self.identities
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("plain data");
        v["hyperplane_check"] = (if self.hyperplane_check { "pass" } else { "fail" }).into();
        v["passed"] = self.passed().into();
        v
    }
}

/// `I_2(n)` with `n ≥ 3`.
#[derive(Clone, Copy, Debug)]
pub struct DihedralContext {
    n: u32,
}

impl DihedralContext {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegenerateDihedral(n as usize));
        }
        Ok(DihedralContext { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `ψ₁ = x²+y²`, `ψ₂ = 2·re_n`.
    pub fn fundamental_invariants(&self) -> (Polynomial, Polynomial) {
        (psi1(), re_power(self.n).scale(&Rational::from_integer(2.into())))
    }

    /// `Δ = im_n`, the product of the reflection lines.
    pub fn delta(&self) -> Polynomial {
        im_power(self.n)
    }

    /// Largest `k` with an `I_k` generated by both `re_k` and `im_k`.
    pub fn top(&self) -> u32 {
        (self.n - 1) / 2
    }

    fn ideal(label: String, gens: Vec<Polynomial>) -> DihedralIdeal {
        let set = GeneratorSet::new(2, label.clone(), gens).expect("nonzero homogeneous forms");
        DihedralIdeal { label, set }
    }

    pub fn i_k(&self, k: u32) -> DihedralIdeal {
        if k == 0 {
            Self::ideal("I_0".into(), vec![Polynomial::one(2)])
        } else {
            Self::ideal(format!("I_{k}"), vec![re_power(k), im_power(k)])
        }
    }

    pub fn i_re(&self) -> Option<DihedralIdeal> {
        self.n.is_multiple_of(2).then(|| Self::ideal(format!("I_{}^Re", self.n / 2), vec![re_power(self.n / 2)]))
    }

    pub fn i_im(&self) -> Option<DihedralIdeal> {
        self.n.is_multiple_of(2).then(|| Self::ideal(format!("I_{}^Im", self.n / 2), vec![im_power(self.n / 2)]))
    }

    pub fn i_n(&self) -> DihedralIdeal {
        Self::ideal(format!("I_{}", self.n), vec![self.delta()])
    }

    fn link(big: &DihedralIdeal, small: &DihedralIdeal) -> Result<ChainLink> {
        let mut contained = true;
        for g in small.set.generators() {
            match membership_certificate(&big.set, g)? {
                Some(c) if c.verify(&big.set, g) => {}
                _ => contained = false,
            }
        }
        let mut witness = None;
        for g in big.set.generators() {
            if !contains(&small.set, g)? {
                witness = Some(g.degree() as usize);
                break;
            }
        }
        let reason = match witness {
            Some(d) if d < small.set.min_degree() => "degree",
            Some(_) => "slice",
            None => "none",
        };
        Ok(ChainLink {
            larger: big.label.clone(),
            smaller: small.label.clone(),
            contained,
            strict: witness.is_some(),
            strictness_reason: reason.into(),
        })
    }

    /// Consecutive containments of the chain, each with certificates and a strictness witness.
    pub fn chain(&self) -> Result<Vec<ChainLink>> {
        let mut out = Vec::new();
        let top = self.top();
        for k in 0..top {
            out.push(Self::link(&self.i_k(k), &self.i_k(k + 1))?);
        }
        let last = self.i_k(top);
        let i_n = self.i_n();
        match (self.i_re(), self.i_im()) {
            (Some(re), Some(im)) => {
                for mid in [&re, &im] {
                    out.push(Self::link(&last, mid)?);
                    out.push(Self::link(mid, &i_n)?);
                }
            }
            _ => out.push(Self::link(&last, &i_n)?),
        }
        Ok(out)
    }

    /// Neither of `I^Re`, `I^Im` contains the other (even `n` only).
    pub fn incomparable_pair(&self) -> Result<Option<bool>> {
        let (Some(re), Some(im)) = (self.i_re(), self.i_im()) else {
            return Ok(None);
        };
        let a = contains(&im.set, &re.set.generators()[0])?;
        let b = contains(&re.set, &im.set.generators()[0])?;
        Ok(Some(!a && !b))
    }

    /// Radical and non-radical members of the chain, with the reason for each label.
    pub fn radical_classification(&self) -> Result<(Vec<RadicalEntry>, Vec<RadicalEntry>)> {
        let entry = |ideal: &str, reason: &str| RadicalEntry {
            ideal: ideal.into(),
            reason: reason.into(),
        };
        let mut radical = vec![entry("I_0", "unit ideal"), entry("I_1", "maximal ideal (x, y)")];
        let mut nonradical = Vec::new();
        let x = Polynomial::var(2, 0)?;
        for k in 2..=self.top() {
            let ideal = self.i_k(k);
            if modulus_check(k) && !contains(&ideal.set, &x)? {
                nonradical.push(entry(
                    &ideal.label,
                    "real zero set is the origin (re^2 + im^2 = (x^2+y^2)^k) but x is not a member",
                ));
            }
        }
        let principal = [self.i_re(), self.i_im(), Some(self.i_n())];
        for ideal in principal.into_iter().flatten() {
            if bivariate_squarefree(&ideal.set.generators()[0])? {
                radical.push(entry(&ideal.label, "principal, squarefree generator"));
            } else {
                nonradical.push(entry(&ideal.label, "principal, repeated factor"));
            }
        }
        Ok((radical, nonradical))
    }

    /// `dim span{1, Δ, re_k, im_k : 1 ≤ k < n}`.
    pub fn harmonics_rank(&self) -> usize {
        let mut polys = vec![Polynomial::one(2), self.delta()];
        for k in 1..self.n {
            polys.push(re_power(k));
            polys.push(im_power(k));
        }
        span_rank(&polys)
    }

    /// Samples each reflection line `θ = jπ/n` at radii 0.5 and 1, and the bisectors between them.
    /// `I_n` vanishes on every line; for even `n`, `I^Im` on even `j` and `I^Re` on odd `j`.
    pub fn hyperplane_sample_check(&self, tolerance: f64) -> bool {
        let n = self.n;
        let delta = self.delta();
        let half = n.is_multiple_of(2).then(|| (re_power(n / 2), im_power(n / 2)));
        let eval = |f: &Polynomial, p: [f64; 2]| f.eval_f64(&p).expect("two coordinates").abs();
        let vanishes = |v: f64| v < tolerance;
        let clear = |v: f64| v > OFF_LINE_FLOOR;
        for j in 0..2 * n {
            let theta = j as f64 * PI / (2 * n) as f64;
            let on_line = j % 2 == 0;
            let line = j / 2;
            for t in [0.5, 1.0] {
                let p = [t * theta.cos(), t * theta.sin()];
                let d = eval(&delta, p);
                if on_line != vanishes(d) || (!on_line && !clear(d)) {
                    return false;
                }
                if let Some((re, im)) = &half {
                    let (r, i) = (eval(re, p), eval(im, p));
                    if on_line {
                        let (zero, other) = if line % 2 == 0 { (i, r) } else { (r, i) };
                        if !vanishes(zero) || !clear(other) {
                            return false;
                        }
                    } else if !clear(r) || !clear(i) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `ψ₁`, `ψ₂` and `Δ` are fixed by the rotation through `2π/n` at ten seeded points;
    /// `s: y ↦ −y` fixes `ψ₁`, `ψ₂` and negates `Δ` exactly.
    pub fn invariance_check(&self, seed: u64, tolerance: f64) -> bool {
        let (p1, p2) = self.fundamental_invariants();
        let delta = self.delta();
        let reflect = |f: &Polynomial| {
            f.map_monomials(|m| {
                let odd = m.exps()[1] % 2 == 1;
                (m.clone(), odd)
            })
        };
        if reflect(&p1) != p1 || reflect(&p2) != p2 || reflect(&delta) != -&delta {
            return false;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (c, s) = ((2.0 * PI / self.n as f64).cos(), (2.0 * PI / self.n as f64).sin());
        (0..10).all(|_| {
            let p = [rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)];
            let q = [c * p[0] - s * p[1], s * p[0] + c * p[1]];
            [&p1, &p2, &delta].iter().all(|f| {
                (f.eval_f64(&p).expect("two coordinates") - f.eval_f64(&q).expect("two coordinates")).abs() < tolerance
            })
        })
    }

    pub fn report(&self, tolerance: f64, seed: u64) -> Result<DihedralReport> {
        let (radical, nonradical) = self.radical_classification()?;
        let identities = (1..=self.n).all(recurrence_check) && (1..=self.n).all(modulus_check);
        Ok(DihedralReport {
            n: self.n,
            chain: self.chain()?,
            incomparable_pair: self.incomparable_pair()?,
            radical,
            nonradical,
            harmonics_rank: self.harmonics_rank(),
            doubling: self.n.is_multiple_of(2).then(|| doubling_check(self.n / 2)),
            hyperplane_check: self.hyperplane_sample_check(tolerance),
            rotation_check: self.invariance_check(seed, tolerance),
            identities,
        })
    }
}
