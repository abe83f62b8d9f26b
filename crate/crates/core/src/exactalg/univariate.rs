use num_traits::Zero;

use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

/// Dense univariate polynomial, `coeffs[i]` multiplies `t^i`. No trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense(pub Vec<Rational>);

impl Dense {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn derivative(&self) -> Dense {
        Dense(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
        .trim()
    }

    pub fn rem(&self, g: &Dense) -> Dense {
        let mut r = self.0.clone();
        let lead = g.0.last().expect("nonzero divisor").clone();
        let dg = g.0.len();
        while r.len() >= dg {
            let c = r.last().unwrap() / &lead;
            let shift = r.len() - dg;
            for (i, gc) in g.0.iter().enumerate() {
                r[shift + i] -= &c * gc;
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Dense(r).trim()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Dense) -> Dense {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if let Some(l) = a.0.last().cloned() {
            for c in a.0.iter_mut() {
                *c /= &l;
            }
        }
        a
    }
}

/// Reads a polynomial that involves at most one variable as a dense coefficient vector.
pub fn to_dense(f: &Polynomial) -> Result<Dense> {
    let mut var = None;
    for (m, _) in f.terms() {
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                match var {
                    None => var = Some(i),
                    Some(v) if v != i => return Err(Error::NotUnivariate),
                    _ => {}
                }
            }
        }
    }
    let mut coeffs = vec![Rational::zero(); (f.degree().max(0) + 1) as usize];
    for (m, c) in f.terms() {
        coeffs[m.degree() as usize] = c.clone();
    }
    Ok(Dense(coeffs).trim())
}

/// True iff `gcd(f, f')` is constant.
pub fn univariate_squarefree(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let d = to_dense(f)?;
    let g = d.gcd(&d.derivative());
    Ok(g.degree() <= 0)
}

/// Squarefreeness of a homogeneous form in `(x, y)`: strip `y^a`, require `a <= 1`,
/// then test the dehomogenization at `y = 1`.
pub fn bivariate_squarefree(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.nvars() != 2 {
        return Err(Error::VarCountMismatch {
            left: 2,
            right: f.nvars(),
        });
    }
    let a = f.variable_multiplicity(1);
    if a > 1 {
        return Ok(false);
    }
    let mut coeffs = vec![Rational::zero(); (f.degree().max(0) + 1) as usize];
    for (m, c) in f.terms() {
        coeffs[m.exps()[0] as usize] += c;
    }
    let d = Dense(coeffs).trim();
    if d.degree() <= 0 {
        return Ok(true);
    }
    Ok(d.gcd(&d.derivative()).degree() <= 0)
}
