use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial over the rationals in a fixed number of variables.
///
/// Terms live in a `BTreeMap` keyed by graded-lex order, so iteration is ascending
/// and the leading term is the last entry. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    /// The variable `x_{index+1}` (0-based index).
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::InvalidIndex(index + 1));
        }
        Ok(Self::monomial(Monomial::var(nvars, index)))
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VarCountMismatch {
                    left: nvars,
                    right: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; the zero polynomial reports -1.
    pub fn degree(&self) -> i64 {
        self.leading_term().map_or(-1, |(m, _)| m.degree() as i64)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => it.all(|m| m.degree() == first.degree()),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.degree() <= 0
    }

    /// Components by total degree, ascending.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.nvars))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Floating-point evaluation, used only for numeric sampling.
    pub fn eval_f64(&self, point: &[f64]) -> Result<f64> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = 0.0;
        for (m, c) in &self.terms {
            let mut v = rational_to_f64(c);
            for (x, &e) in point.iter().zip(m.exps()) {
                v *= x.powi(e as i32);
            }
            total += v;
        }
        Ok(total)
    }

    /// `f(X1^2, ..., Xn^2)`.
    pub fn substitute_squares(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.doubled(), c.clone())).collect(),
        }
    }

    /// Applies a map on monomials that may also produce a sign; used for group actions.
    pub fn map_monomials<F>(&self, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> (Monomial, bool),
    {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let (m2, negate) = f(m);
            out.add_term(m2, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Rescales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Long division by a single divisor; returns `(quotient, remainder)`.
    ///
    /// The remainder is zero iff `g` divides `self`: the leading term of any multiple of `g`
    /// is divisible by the leading term of `g`, so a nonzero remainder certifies non-divisibility.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(g)?;
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.recip();
        let mut q = Polynomial::zero(self.nvars);
        let mut r = Polynomial::zero(self.nvars);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            if lm.divides(&m) {
                let qm = lm.quotient_of(&m);
                let qc = c * &lc_inv;
                p = &p - &g.mul_monomial(&qm, &qc);
                q.add_term(qm, qc);
            } else {
                p.terms.remove(&m);
                r.add_term(m, c);
            }
        }
        Ok((q, r))
    }

    /// `Some(q)` with `self = q * g` when `g` divides `self`.
    pub fn divide_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        let (q, r) = self.div_rem(g)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Exponent of the largest power of `x_{index+1}` dividing every term.
    pub fn variable_multiplicity(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exps()[index]).min().unwrap_or(0)
    }

    /// Content-free scaling: integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = num_bigint::BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = num_bigint::BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        let mut factor = Rational::new(lcm, g);
        if self.leading_term().unwrap().1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

pub(crate) fn rational_to_f64(c: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(f64::NAN)
}

/// True iff `g` divides `f`, with the quotient.
pub fn divides(g: &Polynomial, f: &Polynomial) -> Result<(bool, Option<Polynomial>)> {
    let q = f.divide_exact(g)?;
    Ok((q.is_some(), q))
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial variable counts differ")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}
