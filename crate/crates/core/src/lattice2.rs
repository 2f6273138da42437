//! Finite-index sublattices of Z^2 in canonical Hermite normal form.
//!
//! A `Sublattice2` (a, b, c) is the lattice spanned by (a, 0) and (b, c)
//! with a >= 1, c >= 1 and 0 <= b < a. The triple is unique per lattice,
//! so equality of values is equality of lattices, and the index is a*c.

use crate::hnf::row_hnf;
use crate::{Error, Result};
use num::{BigInt, One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sublattice2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Sublattice2 {
    /// The full lattice Z^2, i.e. (1, 0, 1).
    pub fn full() -> Self {
        Sublattice2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::one(),
        }
    }

    /// Builds a value from an HNF triple, validating the canonical-form
    /// constraints a >= 1, c >= 1, 0 <= b < a.
    pub fn from_triple(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if a < BigInt::one() || c < BigInt::one() || b < BigInt::zero() || b >= a {
            return Err(Error::OutOfRange(format!(
                "({}, {}, {}) is not a canonical HNF triple",
                a, b, c
            )));
        }
        Ok(Sublattice2 { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_triple(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    /// The scaled lattice n*Z^2, i.e. (n, 0, n).
    pub fn scaled(n: &BigInt) -> Result<Self> {
        Self::from_triple(n.clone(), BigInt::zero(), n.clone())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Generators (a, 0) and (b, c) as row vectors.
    pub fn generators(&self) -> [Vec<BigInt>; 2] {
        [
            vec![self.a.clone(), BigInt::zero()],
            vec![self.b.clone(), self.c.clone()],
        ]
    }

    /// Index [Z^2 : L] = a*c.
    pub fn index(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn is_full(&self) -> bool {
        self.a.is_one() && self.c.is_one()
    }

    /// True iff `other` is a sublattice of `self`.
    pub fn contains(&self, other: &Sublattice2) -> bool {
        // (a', 0) in L iff a | a'; (b', c') in L iff c | c' and
        // b' - (c'/c) b is a multiple of a.
        if !(&other.a % &self.a).is_zero() {
            return false;
        }
        if !(&other.c % &self.c).is_zero() {
            return false;
        }
        let q = &other.c / &self.c;
        ((&other.b - q * &self.b) % &self.a).is_zero()
    }
}

impl fmt::Display for Sublattice2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Canonical HNF of the lattice spanned by `gens`.
pub fn hnf_from_generators(gens: &[(BigInt, BigInt)]) -> Result<Sublattice2> {
    if gens.is_empty() {
        return Err(Error::RankDeficient);
    }
    let rows: Vec<Vec<BigInt>> = gens.iter().map(|(x, y)| vec![x.clone(), y.clone()]).collect();
    let h = row_hnf(&rows, 2).ok_or(Error::RankDeficient)?;
    Sublattice2::from_triple(h[0][0].clone(), h[1][0].clone(), h[1][1].clone())
}

pub fn hnf_from_int_generators(gens: &[(i64, i64)]) -> Result<Sublattice2> {
    let gens: Vec<(BigInt, BigInt)> = gens
        .iter()
        .map(|&(x, y)| (BigInt::from(x), BigInt::from(y)))
        .collect();
    hnf_from_generators(&gens)
}

/// Smallest lattice containing both arguments (sum of lattices).
pub fn join(l1: &Sublattice2, l2: &Sublattice2) -> Sublattice2 {
    let mut gens = Vec::with_capacity(4);
    for g in l1.generators().into_iter().chain(l2.generators()) {
        gens.push((g[0].clone(), g[1].clone()));
    }
    hnf_from_generators(&gens).expect("sum of full-rank lattices has full rank")
}

/// All sublattices of index n, in lexicographic (a, b, c) order.
/// The count is sigma(n), the sum of divisors of n.
pub fn enumerate_by_index(n: u64) -> Vec<Sublattice2> {
    let mut out = Vec::new();
    for a in 1..=n {
        if n % a != 0 {
            continue;
        }
        let c = n / a;
        for b in 0..a {
            out.push(
                Sublattice2::from_triple(BigInt::from(a), BigInt::from(b), BigInt::from(c))
                    .unwrap(),
            );
        }
    }
    out
}

/// All sublattices whose index divides d and does not exceed `bound`,
/// ordered by index then lexicographically.
pub fn enumerate_index_dividing(d: u64, bound: u64) -> Vec<Sublattice2> {
    let mut out = Vec::new();
    for e in 1..=d.min(bound) {
        if d % e == 0 {
            out.extend(enumerate_by_index(e));
        }
    }
    out
}

/// Number of irreducible components for parameters (d, g): the double
/// divisor sum over h | e | d with e <= d/(g-1).
pub fn count_components_formula(d: u64, g: u64) -> Result<BigInt> {
    if g < 3 || g > d + 1 {
        return Err(Error::OutOfRange(format!(
            "g = {} outside the range 3 <= g <= d+1 = {}",
            g,
            d + 1
        )));
    }
    let bound = d / (g - 1);
    let mut total = BigInt::zero();
    for e in 1..=bound {
        if d % e == 0 {
            total += sigma(e);
        }
    }
    Ok(total)
}

fn sigma(n: u64) -> BigInt {
    let mut s = BigInt::zero();
    for h in 1..=n {
        if n % h == 0 {
            s += BigInt::from(h);
        }
    }
    s
}
