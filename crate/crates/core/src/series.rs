//! Exact rational power series in t, truncated with explicit precision.
//!
//! A series is either exact (a polynomial, known to all orders) or known
//! only for exponents below a finite precision horizon. Arithmetic
//! propagates the minimum compatible precision, and any query that would
//! depend on unknown coefficients reports PrecisionExhausted instead of
//! guessing.

use crate::{Error, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Precision horizon: coefficients are known for exponents < the bound,
/// or for all exponents when `Exact`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Precision {
    Bounded(usize),
    Exact,
}

impl Precision {
    pub fn min(self, other: Precision) -> Precision {
        match (self, other) {
            (Precision::Exact, p) | (p, Precision::Exact) => p,
            (Precision::Bounded(a), Precision::Bounded(b)) => Precision::Bounded(a.min(b)),
        }
    }

    pub fn knows(self, exp: usize) -> bool {
        match self {
            Precision::Exact => true,
            Precision::Bounded(p) => exp < p,
        }
    }
}

/// Valuation of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(usize),
    /// All known coefficients are zero; the true valuation is >= the bound.
    AtLeast(usize),
    /// Exactly the zero series.
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    /// coeffs[i] is the coefficient of t^i; trailing zeros trimmed.
    coeffs: Vec<BigRational>,
    prec: Precision,
}

impl TruncSeries {
    pub fn zero() -> Self {
        TruncSeries {
            coeffs: Vec::new(),
            prec: Precision::Exact,
        }
    }

    /// Exact polynomial with the given coefficients (index = exponent).
    pub fn poly(coeffs: Vec<BigRational>) -> Self {
        let mut s = TruncSeries {
            coeffs,
            prec: Precision::Exact,
        };
        s.trim();
        s
    }

    pub fn poly_i64(coeffs: &[i64]) -> Self {
        Self::poly(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn constant(c: BigRational) -> Self {
        Self::poly(vec![c])
    }

    /// Monomial c * t^e.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        Self::poly(coeffs)
    }

    pub fn with_precision(coeffs: Vec<BigRational>, prec: usize) -> Self {
        let mut s = TruncSeries {
            coeffs,
            prec: Precision::Bounded(prec),
        };
        s.coeffs.truncate(prec);
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    /// Restrict the precision horizon (no-op if already tighter).
    pub fn truncated(&self, prec: usize) -> Self {
        let mut s = self.clone();
        s.prec = s.prec.min(Precision::Bounded(prec));
        s.coeffs.truncate(prec);
        s.trim();
        s
    }

    /// Coefficient of t^e if known, None past the precision horizon.
    pub fn coeff(&self, e: usize) -> Option<BigRational> {
        if !self.prec.knows(e) {
            return None;
        }
        Some(self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero))
    }

    /// Constant term, or PrecisionExhausted when precision is 0.
    pub fn at_zero(&self) -> Result<BigRational> {
        self.coeff(0)
            .ok_or_else(|| Error::PrecisionExhausted("constant term unknown".into()))
    }

    pub fn is_known_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.coeffs.is_empty() && self.prec == Precision::Exact
    }

    pub fn valuation(&self) -> Valuation {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => Valuation::Finite(i),
            None => match self.prec {
                Precision::Exact => Valuation::Infinite,
                Precision::Bounded(p) => Valuation::AtLeast(p),
            },
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.min(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
            coeffs.push(a + b);
        }
        let mut s = TruncSeries { coeffs, prec };
        if let Precision::Bounded(p) = prec {
            s.coeffs.truncate(p);
        }
        s.trim();
        s
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_exactly_zero() || other.is_exactly_zero() {
            return TruncSeries::zero();
        }
        let prec = self.prec.min(other.prec);
        let n = self.coeffs.len() + other.coeffs.len();
        let mut coeffs = vec![BigRational::zero(); n.max(1) - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut s = TruncSeries { coeffs, prec };
        if let Precision::Bounded(p) = prec {
            s.coeffs.truncate(p);
        }
        s.trim();
        s
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            // Scaling by an exact zero constant kills the series exactly.
            return TruncSeries {
                coeffs: Vec::new(),
                prec: self.prec,
            };
        }
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            prec: self.prec,
        }
    }

    /// Substitute t -> t^mu; exponents and precision multiply by mu.
    pub fn substitute_pow(&self, mu: usize) -> Self {
        assert!(mu >= 1);
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() * mu];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * mu] = c.clone();
            }
        }
        let prec = match self.prec {
            Precision::Exact => Precision::Exact,
            Precision::Bounded(p) => Precision::Bounded(p * mu),
        };
        let mut s = TruncSeries { coeffs, prec };
        s.trim();
        s
    }

    /// Divide by t^j. Errors:
    /// - InvalidMove-style failure is not used here; returns None when a
    ///   known coefficient below exponent j is nonzero (not divisible);
    /// - PrecisionExhausted when divisibility cannot be decided within
    ///   the precision horizon.
    pub fn shift_down(&self, j: usize) -> Result<Option<TruncSeries>> {
        for e in 0..j {
            match self.coeff(e) {
                Some(c) => {
                    if !c.is_zero() {
                        return Ok(None);
                    }
                }
                None => {
                    return Err(Error::PrecisionExhausted(format!(
                        "cannot decide divisibility by t^{} at precision horizon",
                        j
                    )))
                }
            }
        }
        let coeffs = self.coeffs.iter().skip(j).cloned().collect();
        let prec = match self.prec {
            Precision::Exact => Precision::Exact,
            Precision::Bounded(p) => Precision::Bounded(p.saturating_sub(j)),
        };
        let mut s = TruncSeries { coeffs, prec };
        s.trim();
        Ok(Some(s))
    }

    /// Multiply by t^j.
    pub fn shift_up(&self, j: usize) -> TruncSeries {
        if self.coeffs.is_empty() {
            let prec = match self.prec {
                Precision::Exact => Precision::Exact,
                Precision::Bounded(p) => Precision::Bounded(p + j),
            };
            return TruncSeries {
                coeffs: Vec::new(),
                prec,
            };
        }
        let mut coeffs = vec![BigRational::zero(); j];
        coeffs.extend(self.coeffs.iter().cloned());
        let prec = match self.prec {
            Precision::Exact => Precision::Exact,
            Precision::Bounded(p) => Precision::Bounded(p + j),
        };
        TruncSeries { coeffs, prec }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = TruncSeries::constant(BigRational::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// True iff the two series agree on every exponent known to both.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let horizon = self.prec.min(other.prec);
        let n = self.coeffs.len().max(other.coeffs.len());
        for e in 0..n {
            if !horizon.knows(e) {
                break;
            }
            let a = self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero);
            let b = other.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero);
            if a != b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if e == 0 {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", monomial_str(e))?;
            } else {
                write!(f, "{}*{}", a, monomial_str(e))?;
            }
        }
        Ok(())
    }
}

fn monomial_str(e: usize) -> String {
    if e == 1 {
        "t".to_string()
    } else {
        format!("t^{}", e)
    }
}
