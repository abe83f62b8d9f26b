//! Exact rational arithmetic and sparse multivariate polynomials.

mod monomial;
mod polynomial;
mod text;
mod univariate;

pub use monomial::{monomials_of_degree, Monomial};
pub use polynomial::{divides, Polynomial};
pub use text::{parse, parse_infer};
pub use univariate::{bivariate_squarefree, to_dense, univariate_squarefree, Dense};

pub type Rational = num_rational::BigRational;

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let d: num_bigint::BigInt = b.trim().parse().ok()?;
            if d == 0.into() {
                return None;
            }
            Some(Rational::new(a.trim().parse().ok()?, d))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}
