//! Antisymmetrization identities behind the signed cover inclusions, and the shape of
//! polynomials equivariant to a signed D-Specht polynomial.
//!
//! With `n = 2b`, `A = {1}`, `B1 = {2..b+1}`, `B2 = {b+2..2b}`:
//!
//! ```text
//! P  = Δ_{A∪B1}(X²) Δ_{B2}(X²) ∏_{B2} X
//! Q1 = Δ_{B1}(X²) Δ_{A∪B2}(X²) ∏_{B1} X
//! Q2 = Δ_{B1}(X²) Δ_{A∪B2}(X²) ∏_{A∪B2} X
//! ```
//!
//! Signed combinations are taken as `Q± = Q2 ± Q1`, which makes the coset sum equal `P` for
//! both signs (with `Q1 ± Q2` the minus case gives `−P`).

use serde::Serialize;

use crate::combinat::Sign;
use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Polynomial, Rational};
use crate::groups::{antisymmetrize, coset_antisymmetrize, Permutation};
use crate::specht::{vandermonde, Bitableau};

#[derive(Clone, Debug)]
pub struct Constituents {
    pub b: usize,
    pub a: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub p: Polynomial,
    pub q1: Polynomial,
    pub q2: Polynomial,
}

fn delta_sq(n: usize, idx: &[usize]) -> Polynomial {
    vandermonde(n, idx).expect("valid labels").substitute_squares()
}

fn prod(n: usize, idx: &[usize]) -> Polynomial {
    let mut exps = vec![0u32; n];
    for &i in idx {
        exps[i - 1] += 1;
    }
    Polynomial::monomial(Monomial::new(&exps))
}

impl Constituents {
    pub fn new(b: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidShape("b must be positive".into()));
        }
        let n = 2 * b;
        let a = vec![1];
        let b1: Vec<usize> = (2..=b + 1).collect();
        let b2: Vec<usize> = (b + 2..=n).collect();
        let ab1: Vec<usize> = a.iter().chain(&b1).copied().collect();
        let ab2: Vec<usize> = a.iter().chain(&b2).copied().collect();
        let p = &(&delta_sq(n, &ab1) * &delta_sq(n, &b2)) * &prod(n, &b2);
        let common = &delta_sq(n, &b1) * &delta_sq(n, &ab2);
        let q1 = &common * &prod(n, &b1);
        let q2 = &common * &prod(n, &ab2);
        Ok(Constituents { b, a, b1, b2, p, q1, q2 })
    }

    pub fn n(&self) -> usize {
        2 * self.b
    }

    pub fn q_signed(&self, sign: Sign) -> Polynomial {
        match sign {
            Sign::Plus => &self.q2 + &self.q1,
            Sign::Minus => &self.q2 - &self.q1,
        }
    }

    fn x1(&self) -> Polynomial {
        Polynomial::var(self.n(), 0).expect("n >= 2")
    }

    fn a_b1(&self) -> Vec<usize> {
        self.a.iter().chain(&self.b1).copied().collect()
    }

    /// `Σ_{S_{A∪B1}} sgn(σ) σ(Q2·X1)`.
    pub fn antisym_q2(&self) -> Result<Polynomial> {
        antisymmetrize(&(&self.q2 * &self.x1()), &self.a_b1())
    }

    /// `Σ_{S_{A∪B1}} sgn(σ) σ(Q1·X1)`.
    pub fn antisym_q1(&self) -> Result<Polynomial> {
        antisymmetrize(&(&self.q1 * &self.x1()), &self.a_b1())
    }

    /// The same sum restricted to one representative per left coset of `S_{B1}`.
    pub fn coset_sum(&self, sign: Sign) -> Result<Polynomial> {
        coset_antisymmetrize(&(&self.q_signed(sign) * &self.x1()), &self.a_b1(), &self.b1)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub b: usize,
    pub q2_gives_factorial_p: bool,
    pub q1_vanishes: bool,
    /// `None` when the coset sum was not requested for this `b`.
    pub coset_plus: Option<bool>,
    pub coset_minus: Option<bool>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.q2_gives_factorial_p && self.q1_vanishes && self.coset_plus != Some(false) && self.coset_minus != Some(false)
    }
}

pub fn check_identities(b: usize, with_coset: bool) -> Result<IdentityReport> {
    let c = Constituents::new(b)?;
    let factorial: u64 = (1..=b as u64).product();
    let expected = c.p.scale(&Rational::from_integer(factorial.into()));
    let coset = |s| -> Result<Option<bool>> {
        Ok(if with_coset { Some(c.coset_sum(s)? == c.p) } else { None })
    };
    Ok(IdentityReport {
        b,
        q2_gives_factorial_p: c.antisym_q2()? == expected,
        q1_vanishes: c.antisym_q1()?.is_zero(),
        coset_plus: coset(Sign::Plus)?,
        coset_minus: coset(Sign::Minus)?,
    })
}

/// Writes `f = spe_T(X²) spe_S(X²) (R(X²) ∏_T X + τR(X²) ∏_S X)` where `τ` swaps the entries of
/// `T` and `S` box by box, and returns `R`. `None` when `f` has no such form.
pub fn equivariant_form(f: &Polynomial, bt: &Bitableau) -> Result<Option<Polynomial>> {
    let n = bt.n();
    if f.nvars() != n {
        return Err(Error::VarCountMismatch {
            left: f.nvars(),
            right: n,
        });
    }
    if bt.left.shape() != bt.right.shape() {
        return Err(Error::InvalidShape("equal shapes required".into()));
    }
    let mut sq = Polynomial::one(n);
    for t in [&bt.left, &bt.right] {
        for col in t.columns() {
            sq = &sq * &delta_sq(n, &col);
        }
    }
    let (ok, quotient) = crate::exactalg::divides(&sq, f)?;
    let Some(q) = quotient.filter(|_| ok) else {
        return Ok(None);
    };
    let t: Vec<usize> = bt.left.entries().collect();
    let s: Vec<usize> = bt.right.entries().collect();
    let (mut on_t, mut on_s) = (Vec::new(), Vec::new());
    for (m, c) in q.terms() {
        let e = m.exps();
        let odd = |set: &[usize]| set.iter().all(|&i| e[i - 1] % 2 == 1);
        let even = |set: &[usize]| set.iter().all(|&i| e[i - 1] % 2 == 0);
        let rest_even = (1..=n).filter(|i| !t.contains(i) && !s.contains(i)).all(|i| e[i - 1] % 2 == 0);
        if !rest_even {
            return Ok(None);
        }
        if odd(&t) && even(&s) {
            on_t.push((m.clone(), c.clone()));
        } else if odd(&s) && even(&t) {
            on_s.push((m.clone(), c.clone()));
        } else {
            return Ok(None);
        }
    }
    let halve = |terms: Vec<(Monomial, Rational)>, strip: &[usize]| -> Result<Polynomial> {
        let terms = terms.into_iter().map(|(m, c)| {
            let mut e = m.exps().to_vec();
            for &i in strip {
                e[i - 1] -= 1;
            }
            (Monomial::new(&e.iter().map(|x| x / 2).collect::<Vec<_>>()), c)
        });
        Polynomial::from_terms(n, terms)
    };
    let r = halve(on_t, &t)?;
    let r_tau = halve(on_s, &s)?;
    let mut images: Vec<usize> = (1..=n).collect();
    for (a, b) in t.iter().zip(&s) {
        images[a - 1] = *b;
        images[b - 1] = *a;
    }
    let tau = Permutation::from_one_line(&images)?;
    Ok((tau.act(&r)? == r_tau).then_some(r))
}
