//! Permutations, signed permutations and their actions.
//!
//! Variable labels and tableau entries are 1-based in the public API; images are stored 0-based.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, Polynomial, Rational};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-line notation with 1-based values, e.g. `[2, 1, 3]`.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        let n = line.len();
        let mut seen = vec![false; n];
        for &v in line {
            if v == 0 || v > n {
                return Err(Error::InvalidIndex(v));
            }
            if seen[v - 1] {
                return Err(Error::RepeatedIndex(v));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: line.iter().map(|v| v - 1).collect(),
        })
    }

    /// Transposition of the 1-based labels `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for v in [a, b] {
            if v == 0 || v > n {
                return Err(Error::InvalidIndex(v));
            }
        }
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn sign(&self) -> i32 {
        let mut inv = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// All permutations of `{1..n}` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }

    /// Relabels entries of a tableau-like structure.
    pub fn apply_label(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    pub fn act(&self, f: &Polynomial) -> Result<Polynomial> {
        SignedPermutation::unsigned(self.clone()).act(f)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_line().iter().join(" "))
    }
}

/// Element `((s_1..s_n), σ)` of the hyperoctahedral group acting by `X_i ↦ s_i X_{σ(i)}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Permutation,
    negated: Vec<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum GroupKind {
    S,
    B,
    D,
}

impl GroupKind {
    pub fn parse(s: &str) -> Option<GroupKind> {
        match s.trim() {
            "S" | "s" | "A" | "a" => Some(GroupKind::S),
            "B" | "b" => Some(GroupKind::B),
            "D" | "d" => Some(GroupKind::D),
            _ => None,
        }
    }

    pub fn order(self, n: usize) -> u128 {
        let fact: u128 = (1..=n as u128).product();
        match self {
            GroupKind::S => fact,
            GroupKind::B => fact << n,
            GroupKind::D => (fact << n) / 2,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupKind::S => "S",
            GroupKind::B => "B",
            GroupKind::D => "D",
        };
        write!(f, "{s}")
    }
}

impl SignedPermutation {
    pub fn new(perm: Permutation, signs: &[i8]) -> Result<Self> {
        if perm.n() != signs.len() {
            return Err(Error::SizeMismatch(perm.n(), signs.len()));
        }
        if signs.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::InvalidGenerators("signs must be +1 or -1".into()));
        }
        Ok(SignedPermutation {
            perm,
            negated: signs.iter().map(|s| *s < 0).collect(),
        })
    }

    pub fn unsigned(perm: Permutation) -> Self {
        let n = perm.n();
        SignedPermutation {
            perm,
            negated: vec![false; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::unsigned(Permutation::identity(n))
    }

    /// Sign change on the 1-based variable `i`.
    pub fn flip(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return Err(Error::InvalidIndex(i));
        }
        let mut g = Self::identity(n);
        g.negated[i - 1] = true;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn signs(&self) -> Vec<i8> {
        self.negated.iter().map(|&b| if b { -1 } else { 1 }).collect()
    }

    pub fn is_even_signed(&self) -> bool {
        self.negated.iter().filter(|b| **b).count() % 2 == 0
    }

    /// Sign of the underlying permutation.
    pub fn sign(&self) -> i32 {
        self.perm.sign()
    }

    /// Product with `act(g.compose(h), f) = act(g, act(h, f))`.
    pub fn compose(&self, h: &SignedPermutation) -> SignedPermutation {
        let n = self.n();
        let negated = (0..n)
            .map(|i| h.negated[i] ^ self.negated[h.perm.image(i)])
            .collect();
        SignedPermutation {
            perm: self.perm.compose(&h.perm),
            negated,
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let inv = self.perm.inverse();
        let negated = (0..self.n()).map(|j| self.negated[inv.image(j)]).collect();
        SignedPermutation { perm: inv, negated }
    }

    pub fn act_monomial(&self, m: &Monomial) -> (Monomial, bool) {
        let mut exps = vec![0u32; self.n()];
        let mut neg = false;
        for (i, &e) in m.exps().iter().enumerate() {
            exps[self.perm.image(i)] = e;
            if self.negated[i] && e % 2 == 1 {
                neg = !neg;
            }
        }
        (Monomial::new(&exps), neg)
    }

    pub fn act(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.n() {
            return Err(Error::SizeMismatch(self.n(), f.nvars()));
        }
        Ok(f.map_monomials(|m| self.act_monomial(m)))
    }

    /// Point action compatible with the polynomial action: `(g·f)(g·p) = f(p)`.
    pub fn act_point(&self, p: &[Rational]) -> Result<Vec<Rational>> {
        if p.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                got: p.len(),
            });
        }
        let mut out = vec![Rational::default(); p.len()];
        for (i, v) in p.iter().enumerate() {
            out[self.perm.image(i)] = if self.negated[i] { -v.clone() } else { v.clone() };
        }
        Ok(out)
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = self.negated.iter().map(|&b| if b { '-' } else { '+' }).collect();
        write!(f, "({} | {})", self.perm.one_line().iter().join(" "), signs)
    }
}

/// Elements of `S_n`, `B_n` or `D_n`, ordered lexicographically by (sign vector, one-line form)
/// with `+` before `-`.
pub fn enumerate_group(kind: GroupKind, n: usize) -> Result<impl Iterator<Item = SignedPermutation>> {
    if n == 0 {
        return Err(Error::EmptyGroup);
    }
    let sign_vectors: Vec<Vec<bool>> = match kind {
        GroupKind::S => vec![vec![false; n]],
        _ => (0..1u64 << n)
            .map(|mask| (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect::<Vec<bool>>())
            .filter(|v| kind == GroupKind::B || v.iter().filter(|b| **b).count() % 2 == 0)
            .collect(),
    };
    Ok(sign_vectors.into_iter().flat_map(move |negated| {
        Permutation::all(n).map(move |perm| SignedPermutation {
            perm,
            negated: negated.clone(),
        })
    }))
}

fn check_support(n: usize, support: &[usize]) -> Result<Vec<usize>> {
    let mut seen = BTreeSet::new();
    for &v in support {
        if v == 0 || v > n {
            return Err(Error::InvalidIndex(v));
        }
        if !seen.insert(v) {
            return Err(Error::RepeatedIndex(v));
        }
    }
    Ok(support.to_vec())
}

/// Permutations of `{1..n}` moving only the labels in `support`, lexicographic in one-line form.
fn support_permutations(n: usize, support: &[usize]) -> impl Iterator<Item = Permutation> + '_ {
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    let k = sorted.len();
    (0..k).permutations(k).map(move |arr| {
        let mut images: Vec<usize> = (0..n).collect();
        for (slot, &a) in arr.iter().enumerate() {
            images[sorted[slot] - 1] = sorted[a] - 1;
        }
        Permutation { images }
    })
}

/// `Σ_{σ ∈ S_support} sgn(σ) σf`.
pub fn antisymmetrize(f: &Polynomial, support: &[usize]) -> Result<Polynomial> {
    let n = f.nvars();
    let support = check_support(n, support)?;
    let mut acc = Polynomial::zero(n);
    for sigma in support_permutations(n, &support) {
        let g = sigma.act(f)?;
        acc = if sigma.sign() == 1 { &acc + &g } else { &acc - &g };
    }
    Ok(acc)
}

/// Minimal representatives of the left cosets `σ S_small` in `S_big`.
pub fn left_coset_representatives(n: usize, big: &[usize], small: &[usize]) -> Result<Vec<Permutation>> {
    let big = check_support(n, big)?;
    let small = check_support(n, small)?;
    if let Some(bad) = small.iter().find(|v| !big.contains(v)) {
        return Err(Error::InvalidNesting(format!("{bad} lies in the small set but not the big set")));
    }
    let mut rest: Vec<usize> = big.iter().copied().filter(|v| !small.contains(v)).collect();
    rest.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for sigma in support_permutations(n, &big) {
        // σ S_small is determined by σ on the points of big outside small.
        let key: Vec<usize> = rest.iter().map(|&v| sigma.apply_label(v)).collect();
        if seen.insert(key) {
            reps.push(sigma);
        }
    }
    Ok(reps)
}

/// `Σ sgn(σ) σf` over one minimal representative per left coset of `S_small` in `S_big`.
pub fn coset_antisymmetrize(f: &Polynomial, big: &[usize], small: &[usize]) -> Result<Polynomial> {
    let n = f.nvars();
    let mut acc = Polynomial::zero(n);
    for sigma in left_coset_representatives(n, big, small)? {
        let g = sigma.act(f)?;
        acc = if sigma.sign() == 1 { &acc + &g } else { &acc - &g };
    }
    Ok(acc)
}
