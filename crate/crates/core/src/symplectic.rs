//! Brute-force verification of the factorization criterion for the
//! type-(1,d) alternating form on Z^4: exhaustive equivalence of the
//! divisibility condition alpha(L' x L') in kZ and the kernel condition
//! (k | d and the d-kernel is contained in L'), plus the unconditional
//! divisibility inclusion [L:L'] alpha(L x L) in alpha(L' x L').

use crate::hnf::{row_hnf, solve_in_basis};
use crate::{Error, Result};
use num::{BigInt, Integer, One, Zero};
use std::fmt;

/// Feasible bound for exhaustive index-k sublattice enumeration of Z^4.
pub const ENUM4_MAX_INDEX: u64 = 64;

/// The type-(1,d) alternating form on Z^4 with Gram matrix
/// [[0, D], [-D, 0]], D = diag(1, d), in the basis b1..b4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm1d {
    d: BigInt,
}

impl SymplecticForm1d {
    pub fn new(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("polarization parameter d must be >= 1".into()));
        }
        Ok(SymplecticForm1d { d: BigInt::from(d) })
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// Gram matrix entries.
    pub fn gram(&self) -> [[BigInt; 4]; 4] {
        let z = BigInt::zero;
        let mut g = [
            [z(), z(), z(), z()],
            [z(), z(), z(), z()],
            [z(), z(), z(), z()],
            [z(), z(), z(), z()],
        ];
        g[0][2] = BigInt::one();
        g[1][3] = self.d.clone();
        g[2][0] = -BigInt::one();
        g[3][1] = -self.d.clone();
        g
    }

    /// alpha(x, y) = x^T Gram y.
    pub fn eval(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        // expanded form of x^T [[0,D],[-D,0]] y with D = diag(1, d)
        &x[0] * &y[2] - &x[2] * &y[0] + &self.d * (&x[1] * &y[3] - &x[3] * &y[1])
    }

    /// The lattice {x in Z^4 : alpha(x, y) in dZ for all y in Z^4},
    /// computed by solving the congruence system Gram^T x = 0 (mod d).
    pub fn d_kernel(&self) -> Sublattice4 {
        // Solutions form the lattice d * (Gram^T)^{-1} Z^4, which is
        // integral here; adjoin d*Z^4 (always a subset) and take HNF.
        let g = self.gram();
        let mut gt = [
            [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            [BigInt::zero(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
        ];
        for i in 0..4 {
            for j in 0..4 {
                gt[i][j] = g[j][i].clone();
            }
        }
        let det = det4(&gt);
        assert!(!det.is_zero());
        let adj = adjugate4(&gt);
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        // columns of d * adj / det generate (Gram^T)^{-1}(d Z^4)
        for col in 0..4 {
            let mut v = Vec::with_capacity(4);
            for row in 0..4 {
                let num = &self.d * &adj[row][col];
                let (q, r) = num.div_rem(&det);
                assert!(r.is_zero(), "d-kernel generator is not integral");
                v.push(q);
            }
            gens.push(v);
        }
        for i in 0..4 {
            let mut v = vec![BigInt::zero(); 4];
            v[i] = self.d.clone();
            gens.push(v);
        }
        Sublattice4::from_generators(&gens).expect("d-kernel has full rank")
    }
}

fn det4(m: &[[BigInt; 4]; 4]) -> BigInt {
    let mut det = BigInt::zero();
    for perm in permutations4() {
        let mut term = BigInt::from(perm.1);
        for (i, &j) in perm.0.iter().enumerate() {
            term *= &m[i][j];
        }
        det += term;
    }
    det
}

fn adjugate4(m: &[[BigInt; 4]; 4]) -> [[BigInt; 4]; 4] {
    let z = BigInt::zero;
    let mut adj = [
        [z(), z(), z(), z()],
        [z(), z(), z(), z()],
        [z(), z(), z(), z()],
        [z(), z(), z(), z()],
    ];
    for i in 0..4 {
        for j in 0..4 {
            let minor = minor3(m, i, j);
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            // adjugate is the transposed cofactor matrix
            adj[j][i] = BigInt::from(sign) * minor;
        }
    }
    adj
}

fn minor3(m: &[[BigInt; 4]; 4], skip_row: usize, skip_col: usize) -> BigInt {
    let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
    let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
    let a = |i: usize, j: usize| &m[rows[i]][cols[j]];
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
        - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

fn permutations4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::with_capacity(24);
    let mut perm = [0usize; 4];
    let mut used = [false; 4];
    fn rec(
        pos: usize,
        perm: &mut [usize; 4],
        used: &mut [bool; 4],
        out: &mut Vec<([usize; 4], i64)>,
    ) {
        if pos == 4 {
            let mut sign = 1i64;
            for i in 0..4 {
                for j in (i + 1)..4 {
                    if perm[i] > perm[j] {
                        sign = -sign;
                    }
                }
            }
            out.push((*perm, sign));
            return;
        }
        for v in 0..4 {
            if !used[v] {
                used[v] = true;
                perm[pos] = v;
                rec(pos + 1, perm, used, out);
                used[v] = false;
            }
        }
    }
    rec(0, &mut perm, &mut used, &mut out);
    out
}

/// A finite-index sublattice of Z^4 as a canonical lower-triangular HNF
/// basis matrix (rows are basis vectors).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sublattice4 {
    rows: Vec<Vec<BigInt>>,
}

impl Sublattice4 {
    pub fn full() -> Self {
        let mut rows = vec![vec![BigInt::zero(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = BigInt::one();
        }
        Sublattice4 { rows }
    }

    pub fn from_generators(gens: &[Vec<BigInt>]) -> Result<Self> {
        let rows = row_hnf(gens, 4).ok_or(Error::RankDeficient)?;
        Ok(Sublattice4 { rows })
    }

    pub fn from_int_rows(rows: [[i64; 4]; 4]) -> Result<Self> {
        let gens: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_generators(&gens)
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn index(&self) -> BigInt {
        (0..4).map(|i| self.rows[i][i].clone()).product()
    }

    pub fn contains(&self, other: &Sublattice4) -> bool {
        other
            .rows
            .iter()
            .all(|v| solve_in_basis(&self.rows, v).is_some())
    }
}

impl fmt::Display for Sublattice4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(","))?;
        }
        write!(f, "]")
    }
}

/// Condition (1'): alpha(L x L) contained in kZ, checked on basis pairs
/// (sufficient by bilinearity).
pub fn condition_divisibility(form: &SymplecticForm1d, l: &Sublattice4, k: u64) -> bool {
    let k = BigInt::from(k);
    let b = l.basis();
    for i in 0..4 {
        for j in (i + 1)..4 {
            if !(form.eval(&b[i], &b[j]) % &k).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Condition (2'): k | d and the d-kernel is contained in L.
pub fn condition_kernel(form: &SymplecticForm1d, l: &Sublattice4, k: u64) -> bool {
    if !(form.d() % BigInt::from(k)).is_zero() {
        return false;
    }
    l.contains(&form.d_kernel())
}

/// All index-k sublattices of Z^4, enumerated as lower-triangular HNF
/// matrices with diagonal product k, in a fixed deterministic order.
/// Errors with BudgetExceeded for k > ENUM4_MAX_INDEX.
pub fn enumerate_sublattices4(k: u64) -> Result<Vec<Sublattice4>> {
    if k == 0 {
        return Err(Error::OutOfRange("index must be >= 1".into()));
    }
    if k > ENUM4_MAX_INDEX {
        return Err(Error::BudgetExceeded(format!(
            "index {} exceeds enumeration bound {}",
            k, ENUM4_MAX_INDEX
        )));
    }
    let mut out = Vec::new();
    for d0 in divisors(k) {
        for d1 in divisors(k / d0) {
            for d2 in divisors(k / d0 / d1) {
                let d3 = k / d0 / d1 / d2;
                let diag = [d0, d1, d2, d3];
                // free entries: (i, j) with i > j, ranging over [0, diag[j])
                let slots: Vec<(usize, usize)> =
                    (0..4).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
                let ranges: Vec<u64> = slots.iter().map(|&(_, j)| diag[j]).collect();
                let mut values = vec![0u64; slots.len()];
                'emit: loop {
                    let mut rows = vec![vec![BigInt::zero(); 4]; 4];
                    for i in 0..4 {
                        rows[i][i] = BigInt::from(diag[i]);
                    }
                    for (s, &(i, j)) in slots.iter().enumerate() {
                        rows[i][j] = BigInt::from(values[s]);
                    }
                    out.push(Sublattice4 { rows });
                    // odometer over the slot ranges
                    let mut pos = slots.len();
                    while pos > 0 {
                        pos -= 1;
                        values[pos] += 1;
                        if values[pos] < ranges[pos] {
                            continue 'emit;
                        }
                        values[pos] = 0;
                    }
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|e| n % e == 0).collect()
}

/// Exhaustive report for the equivalence of conditions (1') and (2')
/// over all index-k sublattices of Z^4.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub d: u64,
    pub k: u64,
    pub total: usize,
    pub count_cond1: usize,
    pub count_cond2: usize,
    pub equivalent: bool,
    /// Lexicographically first sublattice where the conditions disagree.
    pub counterexample: Option<Sublattice4>,
}

pub fn verify_lemma_equivalence(d: u64, k: u64) -> Result<LemmaReport> {
    let form = SymplecticForm1d::new(d)?;
    let lattices = enumerate_sublattices4(k)?;
    let mut sorted = lattices;
    sorted.sort();
    let mut count1 = 0;
    let mut count2 = 0;
    let mut counterexample = None;
    for l in &sorted {
        let c1 = condition_divisibility(&form, l, k);
        let c2 = condition_kernel(&form, l, k);
        if c1 {
            count1 += 1;
        }
        if c2 {
            count2 += 1;
        }
        if c1 != c2 && counterexample.is_none() {
            counterexample = Some(l.clone());
        }
    }
    Ok(LemmaReport {
        d,
        k,
        total: sorted.len(),
        count_cond1: count1,
        count_cond2: count2,
        equivalent: counterexample.is_none(),
        counterexample,
    })
}

/// The inclusion [Z^4:L] alpha(Z^4 x Z^4) in alpha(L x L), stated via
/// generators of the two ideals: gcd over basis pairs.
pub fn divisibility_inclusion_check(form: &SymplecticForm1d, l: &Sublattice4) -> bool {
    let g_out = pair_gcd(form, &Sublattice4::full());
    let g_in = pair_gcd(form, l);
    let k = l.index();
    let scaled = k * g_out;
    // the ideal (g_in) must contain (k * g_out), i.e. g_in | k * g_out
    if g_in.is_zero() {
        return scaled.is_zero();
    }
    (scaled % g_in).is_zero()
}

fn pair_gcd(form: &SymplecticForm1d, l: &Sublattice4) -> BigInt {
    let b = l.basis();
    let mut g = BigInt::zero();
    for i in 0..4 {
        for j in (i + 1)..4 {
            g = g.gcd(&form.eval(&b[i], &b[j]));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); 4];
        v[i] = BigInt::one();
        v
    }

    #[test]
    fn form_eval_examples() {
        let f = SymplecticForm1d::new(2).unwrap();
        assert_eq!(f.eval(&e(0), &e(2)), BigInt::from(1));
        assert_eq!(f.eval(&e(1), &e(3)), BigInt::from(2));
        let x: Vec<BigInt> = vec![3, -1, 4, 7].into_iter().map(BigInt::from).collect();
        assert_eq!(f.eval(&x, &x), BigInt::zero());
    }

    #[test]
    fn form_is_antisymmetric_bilinear() {
        let f = SymplecticForm1d::new(5).unwrap();
        let vs: Vec<Vec<BigInt>> = [[1i64, 2, 3, 4], [0, -1, 5, 2], [7, 0, 0, -3]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        for x in &vs {
            for y in &vs {
                assert_eq!(f.eval(x, y), -f.eval(y, x));
                let sum: Vec<BigInt> = (0..4).map(|i| &x[i] + &y[i]).collect();
                for z in &vs {
                    assert_eq!(f.eval(&sum, z), f.eval(x, z) + f.eval(y, z));
                }
            }
        }
    }

    #[test]
    fn d_kernel_examples() {
        let f1 = SymplecticForm1d::new(1).unwrap();
        assert_eq!(f1.d_kernel(), Sublattice4::full());
        for d in [2u64, 6, 50] {
            let f = SymplecticForm1d::new(d).unwrap();
            let di = d as i64;
            let expected = Sublattice4::from_int_rows([
                [di, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, di, 0],
                [0, 0, 0, 1],
            ])
            .unwrap();
            assert_eq!(f.d_kernel(), expected);
        }
    }

    #[test]
    fn d_kernel_matches_spanned_form_all_small_d() {
        for d in 1..=50u64 {
            let f = SymplecticForm1d::new(d).unwrap();
            let di = d as i64;
            let gens: Vec<Vec<BigInt>> = [[di, 0, 0, 0], [0, 1, 0, 0], [0, 0, di, 0], [0, 0, 0, 1]]
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            assert_eq!(f.d_kernel(), Sublattice4::from_generators(&gens).unwrap());
        }
    }

    #[test]
    fn condition_examples() {
        let f = SymplecticForm1d::new(2).unwrap();
        let full = Sublattice4::full();
        assert!(condition_divisibility(&f, &full, 1));
        assert!(condition_divisibility(&f, &f.d_kernel(), 2));
        assert!(!condition_divisibility(&f, &full, 2));
        assert!(condition_kernel(&f, &full, 1));
        assert!(condition_kernel(&f, &f.d_kernel(), 2));
        assert!(!condition_kernel(&f, &full, 4));
        assert!(!condition_kernel(&f, &f.d_kernel(), 4));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_sublattices4(1).unwrap(), vec![Sublattice4::full()]);
        assert_eq!(enumerate_sublattices4(2).unwrap().len(), 15);
        assert_eq!(enumerate_sublattices4(3).unwrap().len(), 40);
        assert!(matches!(
            enumerate_sublattices4(ENUM4_MAX_INDEX + 1),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn enumeration_is_canonical_and_has_right_index() {
        for k in 1..=6u64 {
            let ls = enumerate_sublattices4(k).unwrap();
            let mut seen = std::collections::HashSet::new();
            for l in &ls {
                assert_eq!(l.index(), BigInt::from(k));
                let re = Sublattice4::from_generators(l.basis()).unwrap();
                assert_eq!(&re, l);
                assert!(seen.insert(l.clone()), "duplicate {}", l);
            }
        }
    }

    #[test]
    fn lemma_equivalence_examples() {
        let r = verify_lemma_equivalence(2, 2).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.total, 15);
        let r = verify_lemma_equivalence(6, 3).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.total, 40);
        let r = verify_lemma_equivalence(2, 4).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.count_cond1, 0);
        assert_eq!(r.count_cond2, 0);
    }

    #[test]
    fn divisibility_inclusion_special_cases() {
        let f = SymplecticForm1d::new(2).unwrap();
        assert!(divisibility_inclusion_check(&f, &Sublattice4::full()));
        assert!(divisibility_inclusion_check(&f, &f.d_kernel()));
        let k3 = Sublattice4::from_int_rows([
            [3, 0, 0, 0],
            [0, 3, 0, 0],
            [0, 0, 3, 0],
            [0, 0, 0, 3],
        ])
        .unwrap();
        assert!(divisibility_inclusion_check(&f, &k3));
    }
}
