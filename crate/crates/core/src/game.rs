//! Weierstrass polynomials over exact truncated power series, the
//! nu/tau reduction game, the win-step prediction from root data, and
//! Newton polygon analysis.

use crate::series::{Precision, TruncSeries, Valuation};
use crate::{Error, Result};
use num::{BigInt, BigRational, One, Zero};
use std::fmt;

/// A monic degree-m polynomial in x over truncated series in t:
/// x^m + c_1 x^{m-1} + ... + c_m. Coefficients are stored for j = 1..m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicPoly {
    m: usize,
    coeffs: Vec<TruncSeries>,
}

impl MonicPoly {
    pub fn new(m: usize, coeffs: Vec<TruncSeries>) -> Result<Self> {
        if m == 0 || coeffs.len() != m {
            return Err(Error::ShapeMismatch(format!(
                "need {} coefficients for degree {}",
                m,
                coeffs.len()
            )));
        }
        Ok(MonicPoly { m, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    /// Coefficient of x^{m-j}, 1-based.
    pub fn coeff(&self, j: usize) -> &TruncSeries {
        &self.coeffs[j - 1]
    }

    pub fn coeffs(&self) -> &[TruncSeries] {
        &self.coeffs
    }

    /// Substitute x -> x + alpha for a constant alpha.
    pub fn shift_x(&self, alpha: &BigRational) -> MonicPoly {
        let m = self.m;
        let mut new_coeffs = Vec::with_capacity(m);
        for j in 1..=m {
            // new c_j = sum_{i=0..j} C(m-i, j-i) alpha^{j-i} c_i, c_0 = 1
            let mut acc = TruncSeries::constant(binom(m, j) * alpha_pow(alpha, j));
            for i in 1..=j {
                let factor = binom(m - i, j - i) * alpha_pow(alpha, j - i);
                acc = acc.add(&self.coeffs[i - 1].scale(&factor));
            }
            new_coeffs.push(acc);
        }
        MonicPoly {
            m,
            coeffs: new_coeffs,
        }
    }

    /// p(t, t*x) scaled by t^{-m}: the j-th coefficient is divided by t^j.
    fn rescale_x_by_t(&self) -> Result<Option<MonicPoly>> {
        let mut new_coeffs = Vec::with_capacity(self.m);
        for j in 1..=self.m {
            match self.coeffs[j - 1].shift_down(j)? {
                Some(s) => new_coeffs.push(s),
                None => return Ok(None),
            }
        }
        Ok(Some(MonicPoly {
            m: self.m,
            coeffs: new_coeffs,
        }))
    }
}

impl fmt::Display for MonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.m)?;
        for j in 1..=self.m {
            let c = &self.coeffs[j - 1];
            if c.is_known_zero() {
                continue;
            }
            let e = self.m - j;
            let xs = match e {
                0 => String::new(),
                1 => "*x".to_string(),
                _ => format!("*x^{}", e),
            };
            write!(f, " + ({}){}", c, xs)?;
        }
        Ok(())
    }
}

fn binom(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    BigRational::new(num, den)
}

fn alpha_pow(alpha: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..k {
        acc *= alpha;
    }
    acc
}

/// A member of W_m: monic of degree m with every non-leading coefficient
/// vanishing at t = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassPoly {
    poly: MonicPoly,
}

impl WeierstrassPoly {
    pub fn new(m: usize, alphas: Vec<TruncSeries>) -> Result<Self> {
        let poly = MonicPoly::new(m, alphas)?;
        Self::from_monic(poly)
    }

    pub fn from_monic(poly: MonicPoly) -> Result<Self> {
        for j in 1..=poly.m {
            let c0 = poly.coeffs[j - 1].at_zero()?;
            if !c0.is_zero() {
                return Err(Error::NotInWm(j));
            }
        }
        Ok(WeierstrassPoly { poly })
    }

    pub fn degree(&self) -> usize {
        self.poly.m
    }

    pub fn alphas(&self) -> &[TruncSeries] {
        self.poly.coeffs()
    }

    pub fn monic(&self) -> &MonicPoly {
        &self.poly
    }

    /// Pure power x^m.
    pub fn x_power(m: usize) -> Self {
        WeierstrassPoly {
            poly: MonicPoly {
                m,
                coeffs: vec![TruncSeries::zero(); m],
            },
        }
    }
}

impl fmt::Display for WeierstrassPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Expand the product (x - r_1) ... (x - r_m). Every root must have
/// valuation >= 1 so the result lies in W_m.
pub fn from_roots(roots: &[TruncSeries]) -> Result<WeierstrassPoly> {
    if roots.is_empty() {
        return Err(Error::ShapeMismatch("need at least one root".into()));
    }
    for r in roots {
        match r.valuation() {
            Valuation::Finite(0) => {
                return Err(Error::OutOfRange(
                    "root has valuation 0, product leaves W_m".into(),
                ))
            }
            Valuation::AtLeast(0) => {
                return Err(Error::PrecisionExhausted(
                    "root valuation indeterminate at precision 0".into(),
                ))
            }
            _ => {}
        }
    }
    let m = roots.len();
    // coeffs[j] accumulates the coefficient of x^{m-j}
    let mut coeffs: Vec<TruncSeries> = vec![TruncSeries::zero(); m + 1];
    coeffs[0] = TruncSeries::constant(BigRational::one());
    for r in roots {
        let neg_r = r.neg();
        for j in (1..=m).rev() {
            let carry = coeffs[j - 1].mul(&neg_r);
            coeffs[j] = coeffs[j].add(&carry);
        }
    }
    WeierstrassPoly::new(m, coeffs.split_off(1))
}

/// Outcome of the nu move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NuOutcome {
    Poly(MonicPoly),
    Lose,
}

/// nu(p) = t^{-m} p(t, t x) when integral, [lose] otherwise.
pub fn nu(p: &MonicPoly) -> Result<NuOutcome> {
    match p.rescale_x_by_t()? {
        Some(q) => Ok(NuOutcome::Poly(q)),
        None => Ok(NuOutcome::Lose),
    }
}

/// Outcome of the tau move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TauOutcome {
    Poly {
        shift: BigRational,
        result: WeierstrassPoly,
    },
    Win,
}

/// tau(q) = q(t, x + alpha) when some constant alpha brings q back into
/// W_m, [win] otherwise. The only candidate is alpha = -c_{m-1}(0)/m.
pub fn tau(q: &MonicPoly) -> Result<TauOutcome> {
    let m = q.degree();
    let c1_0 = q.coeff(1).at_zero()?;
    let alpha = -c1_0 / BigRational::from_integer(BigInt::from(m as i64));
    let shifted = q.shift_x(&alpha);
    match WeierstrassPoly::from_monic(shifted) {
        Ok(w) => Ok(TauOutcome::Poly {
            shift: alpha,
            result: w,
        }),
        Err(Error::NotInWm(_)) => Ok(TauOutcome::Win),
        Err(e) => Err(e),
    }
}

/// Substitute t -> t^mu in every coefficient.
pub fn base_change(p: &WeierstrassPoly, mu: usize) -> WeierstrassPoly {
    assert!(mu >= 1);
    let coeffs = p
        .alphas()
        .iter()
        .map(|a| a.substitute_pow(mu))
        .collect();
    WeierstrassPoly {
        poly: MonicPoly {
            m: p.degree(),
            coeffs,
        },
    }
}

/// True iff p = (x + alpha_1/m)^m within the tracked precision.
pub fn is_perfect_power(p: &WeierstrassPoly) -> Result<bool> {
    let m = p.degree();
    let inv_m = BigRational::new(BigInt::one(), BigInt::from(m as i64));
    let phi = p.alphas()[0].scale(&inv_m);
    for j in 2..=m {
        let expect = phi.pow(j).scale(&binom(m, j));
        if !p.alphas()[j - 1].agrees_with(&expect) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameStep {
    Nu,
    Tau { alpha: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameStatus {
    Running,
    Win,
    Lose,
    BudgetExhausted,
    PrecisionExhausted,
}

impl fmt::Display for GameStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GameStatus::Running => "Running",
            GameStatus::Win => "Win",
            GameStatus::Lose => "Lose",
            GameStatus::BudgetExhausted => "BudgetExhausted",
            GameStatus::PrecisionExhausted => "PrecisionExhausted",
        };
        write!(f, "{}", s)
    }
}

/// Full record of one play of the reduction game.
#[derive(Debug, Clone)]
pub struct GameState {
    pub current: MonicPoly,
    pub trace: Vec<GameStep>,
    pub status: GameStatus,
    /// Completed (nu, tau) rounds that returned to W_m.
    pub steps_taken: usize,
}

impl GameState {
    /// The 1-based round whose tau ended in [win], when the game was won.
    pub fn win_round(&self) -> Option<usize> {
        if self.status == GameStatus::Win {
            Some(self.steps_taken + 1)
        } else {
            None
        }
    }
}

/// Play the game on r = p(t^mu, x): alternate nu and tau, recording the
/// trace, until Win, Lose, the round budget, or a precision failure.
pub fn play_game(p: &WeierstrassPoly, mu: usize, max_rounds: usize) -> GameState {
    let r = base_change(p, mu);
    let mut state = GameState {
        current: r.monic().clone(),
        trace: Vec::new(),
        status: GameStatus::Running,
        steps_taken: 0,
    };
    for _ in 0..max_rounds {
        match nu(&state.current) {
            Ok(NuOutcome::Lose) => {
                state.trace.push(GameStep::Nu);
                state.status = GameStatus::Lose;
                return state;
            }
            Ok(NuOutcome::Poly(q)) => {
                state.trace.push(GameStep::Nu);
                state.current = q;
            }
            Err(_) => {
                state.status = GameStatus::PrecisionExhausted;
                return state;
            }
        }
        match tau(&state.current) {
            Ok(TauOutcome::Win) => {
                state.status = GameStatus::Win;
                return state;
            }
            Ok(TauOutcome::Poly { shift, result }) => {
                state.trace.push(GameStep::Tau { alpha: shift.clone() });
                state.current = result.monic().clone();
                state.steps_taken += 1;
            }
            Err(_) => {
                state.status = GameStatus::PrecisionExhausted;
                return state;
            }
        }
    }
    state.status = GameStatus::BudgetExhausted;
    state
}

/// Minimal N at which the roots do not all share the same degree-N
/// coefficient. This is the predicted winning round of the game played
/// on the product of (x - root).
pub fn predicted_win_step(roots: &[TruncSeries]) -> Result<usize> {
    if roots.len() < 2 {
        return Err(Error::OutOfRange(
            "need at least two roots to disagree".into(),
        ));
    }
    let all_exact = roots.iter().all(|r| r.precision() == Precision::Exact);
    if all_exact && roots.iter().all(|r| r == &roots[0]) {
        return Err(Error::OutOfRange(
            "roots are all identical; no winning step exists".into(),
        ));
    }
    let mut n = 1;
    loop {
        let mut first: Option<BigRational> = None;
        for r in roots {
            let c = match r.coeff(n) {
                Some(c) => c,
                None => {
                    return Err(Error::PrecisionExhausted(format!(
                        "roots agree through the precision horizon (checked to degree {})",
                        n
                    )))
                }
            };
            match &first {
                None => first = Some(c),
                Some(f) => {
                    if f != &c {
                        return Ok(n);
                    }
                }
            }
        }
        n += 1;
    }
}

/// One segment of the Newton polygon: a slope (as an exact rational) and
/// its horizontal length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonSegment {
    pub slope: BigRational,
    pub length: usize,
}

/// Lower convex hull of {(j, val alpha_j) : alpha_j != 0} together with
/// the origin, reported as segments left to right. Empty for x^m.
pub fn newton_polygon(p: &WeierstrassPoly) -> Result<Vec<PolygonSegment>> {
    let m = p.degree();
    let mut points: Vec<(usize, usize)> = vec![(0, 0)];
    let mut indeterminate: Vec<(usize, usize)> = Vec::new();
    for j in 1..=m {
        match p.alphas()[j - 1].valuation() {
            Valuation::Finite(v) => points.push((j, v)),
            Valuation::Infinite => {}
            Valuation::AtLeast(h) => indeterminate.push((j, h)),
        }
    }
    let hull = lower_hull(&points);
    // an unknown coefficient only matters if its best-case point could
    // touch or dip below the hull of the certain points
    for &(j, h) in &indeterminate {
        if below_or_on_hull(&hull, j, h) {
            return Err(Error::PrecisionExhausted(format!(
                "valuation of alpha_{} is indeterminate (>= {}) near the polygon",
                j, h
            )));
        }
    }
    let mut segments = Vec::new();
    for w in hull.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        let dx = x1 - x0;
        let dy = BigInt::from(y1 as i64) - BigInt::from(y0 as i64);
        segments.push(PolygonSegment {
            slope: BigRational::new(dy, BigInt::from(dx as i64)),
            length: dx,
        });
    }
    Ok(segments)
}

fn lower_hull(points: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut pts = points.to_vec();
    pts.sort();
    // for equal x keep the lowest y
    pts.dedup_by(|b, a| {
        if a.0 == b.0 {
            if b.1 < a.1 {
                a.1 = b.1;
            }
            true
        } else {
            false
        }
    });
    let mut hull: Vec<(usize, usize)> = Vec::new();
    for p in pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // keep b only if it turns strictly upward at b: cross > 0
            let cross = (b.0 as i64 - a.0 as i64) * (p.1 as i64 - a.1 as i64)
                - (b.1 as i64 - a.1 as i64) * (p.0 as i64 - a.0 as i64);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

fn below_or_on_hull(hull: &[(usize, usize)], x: usize, y: usize) -> bool {
    if hull.len() < 2 {
        // hull is just the origin: any point to the right would start a
        // segment, so it always matters
        return true;
    }
    let last = hull[hull.len() - 1];
    if x > last.0 {
        // beyond the right end the polygon would gain a new segment
        return true;
    }
    for w in hull.windows(2) {
        let (x0, y0) = w[0];
        let (x1, y1) = w[1];
        if x >= x0 && x <= x1 {
            // y <= line through (x0,y0)-(x1,y1) at x, cross-multiplied
            let lhs = (y as i64 - y0 as i64) * (x1 as i64 - x0 as i64);
            let rhs = (y1 as i64 - y0 as i64) * (x as i64 - x0 as i64);
            return lhs <= rhs;
        }
    }
    false
}

/// Smallest mu <= mu_max for which the game reaches Win within the round
/// budget; None when the search is exhausted.
pub fn find_mu_search(
    p: &WeierstrassPoly,
    mu_max: usize,
    max_rounds: usize,
) -> Result<Option<usize>> {
    if is_perfect_power(p)? {
        return Err(Error::OutOfRange(
            "input is a perfect m-th power; the game can never win".into(),
        ));
    }
    for mu in 1..=mu_max {
        let state = play_game(p, mu, max_rounds);
        match state.status {
            GameStatus::Win => return Ok(Some(mu)),
            GameStatus::PrecisionExhausted => {
                return Err(Error::PrecisionExhausted(format!(
                    "game at mu = {} ran out of precision",
                    mu
                )))
            }
            _ => {}
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> TruncSeries {
        TruncSeries::poly_i64(&[0, 1])
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x2_minus_t() -> WeierstrassPoly {
        WeierstrassPoly::new(2, vec![TruncSeries::zero(), TruncSeries::poly_i64(&[0, -1])])
            .unwrap()
    }

    fn sample_poly() -> WeierstrassPoly {
        // x^2 - (t + t^2) x + t^3
        WeierstrassPoly::new(
            2,
            vec![
                TruncSeries::poly_i64(&[0, -1, -1]),
                TruncSeries::poly_i64(&[0, 0, 0, 1]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn from_roots_examples() {
        let p = from_roots(&[t()]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(p.alphas()[0], TruncSeries::poly_i64(&[0, -1]));

        let p = from_roots(&[t(), t().mul(&t())]).unwrap();
        assert_eq!(p, sample_poly());

        let p = from_roots(&[t(), t().scale(&rat(2, 1))]).unwrap();
        assert_eq!(p.alphas()[0], TruncSeries::poly_i64(&[0, -3]));
        assert_eq!(p.alphas()[1], TruncSeries::poly_i64(&[0, 0, 2]));
    }

    #[test]
    fn from_roots_rejects_valuation_zero() {
        let one_plus_t = TruncSeries::poly_i64(&[1, 1]);
        assert!(from_roots(&[one_plus_t]).is_err());
    }

    #[test]
    fn nu_examples() {
        // x^2 - (t+t^2) x + t^3 -> x^2 - (1+t) x + t
        let q = match nu(sample_poly().monic()).unwrap() {
            NuOutcome::Poly(q) => q,
            NuOutcome::Lose => panic!("unexpected lose"),
        };
        assert_eq!(q.coeff(1), &TruncSeries::poly_i64(&[-1, -1]));
        assert_eq!(q.coeff(2), &TruncSeries::poly_i64(&[0, 1]));

        assert_eq!(nu(x2_minus_t().monic()).unwrap(), NuOutcome::Lose);

        let xm = WeierstrassPoly::x_power(3);
        match nu(xm.monic()).unwrap() {
            NuOutcome::Poly(q) => assert_eq!(&q, xm.monic()),
            NuOutcome::Lose => panic!("x^m never loses"),
        }
    }

    #[test]
    fn nu_exactness_identity() {
        // p(t, t x) = t^m nu(p)(t, x) coefficientwise
        let p = sample_poly();
        let q = match nu(p.monic()).unwrap() {
            NuOutcome::Poly(q) => q,
            _ => unreachable!(),
        };
        for j in 1..=p.degree() {
            assert_eq!(&q.coeff(j).shift_up(j), p.monic().coeff(j));
        }
    }

    #[test]
    fn tau_examples() {
        // (x-1)^2 = x^2 - 2x + 1, shift alpha = 1 gives x^2
        let q = MonicPoly::new(
            2,
            vec![TruncSeries::poly_i64(&[-2]), TruncSeries::poly_i64(&[1])],
        )
        .unwrap();
        match tau(&q).unwrap() {
            TauOutcome::Poly { shift, result } => {
                assert_eq!(shift, rat(1, 1));
                assert_eq!(result, WeierstrassPoly::x_power(2));
            }
            TauOutcome::Win => panic!("perfect square does not win"),
        }

        // x^2 - (1+t) x + t factors as x(x-1) at t=0: win
        let q = MonicPoly::new(
            2,
            vec![TruncSeries::poly_i64(&[-1, -1]), TruncSeries::poly_i64(&[0, 1])],
        )
        .unwrap();
        assert_eq!(tau(&q).unwrap(), TauOutcome::Win);

        // already in W_m: alpha = 0, unchanged
        let p = sample_poly();
        match tau(p.monic()).unwrap() {
            TauOutcome::Poly { shift, result } => {
                assert_eq!(shift, rat(0, 1));
                assert_eq!(result, p);
            }
            TauOutcome::Win => panic!(),
        }
    }

    #[test]
    fn tau_shift_identity() {
        // tau result equals q(t, x + alpha)
        let q = MonicPoly::new(
            2,
            vec![TruncSeries::poly_i64(&[-2, 1]), TruncSeries::poly_i64(&[1, -1])],
        )
        .unwrap();
        if let TauOutcome::Poly { shift, result } = tau(&q).unwrap() {
            assert_eq!(result.monic(), &q.shift_x(&shift));
        } else {
            panic!("expected a shift");
        }
    }

    #[test]
    fn base_change_examples() {
        let p = base_change(&x2_minus_t(), 2);
        assert_eq!(p.alphas()[1], TruncSeries::poly_i64(&[0, 0, -1]));
        assert_eq!(base_change(&sample_poly(), 1), sample_poly());
        let p = base_change(&sample_poly(), 2);
        assert_eq!(p.alphas()[0], TruncSeries::poly_i64(&[0, 0, -1, 0, -1]));
        assert_eq!(
            p.alphas()[1],
            TruncSeries::poly_i64(&[0, 0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn base_change_composes() {
        let p = sample_poly();
        for m1 in 1..=4usize {
            for m2 in 1..=4usize {
                assert_eq!(base_change(&p, m1 * m2), base_change(&base_change(&p, m1), m2));
            }
        }
    }

    #[test]
    fn perfect_power_examples() {
        let sq = from_roots(&[t(), t()]).unwrap();
        assert!(is_perfect_power(&sq).unwrap());
        assert!(!is_perfect_power(&x2_minus_t()).unwrap());
        assert!(is_perfect_power(&WeierstrassPoly::x_power(5)).unwrap());
    }

    #[test]
    fn game_micro_cases() {
        let g = play_game(&x2_minus_t(), 1, 16);
        assert_eq!(g.status, GameStatus::Lose);

        let g = play_game(&x2_minus_t(), 2, 16);
        assert_eq!(g.status, GameStatus::Win);
        assert_eq!(g.win_round(), Some(1));

        let sq = from_roots(&[t(), t()]).unwrap();
        let g = play_game(&sq, 1, 10);
        assert_eq!(g.status, GameStatus::BudgetExhausted);
    }

    #[test]
    fn predicted_win_examples() {
        assert_eq!(predicted_win_step(&[t(), t().mul(&t())]).unwrap(), 1);
        assert_eq!(predicted_win_step(&[t(), t().scale(&rat(2, 1))]).unwrap(), 1);
        let t_plus_t3 = TruncSeries::poly_i64(&[0, 1, 0, 1]);
        assert_eq!(predicted_win_step(&[t(), t_plus_t3]).unwrap(), 3);
    }

    #[test]
    fn predicted_win_matches_game() {
        let cases: Vec<Vec<TruncSeries>> = vec![
            vec![t(), t().mul(&t())],
            vec![t(), t().scale(&rat(2, 1))],
            vec![t(), TruncSeries::poly_i64(&[0, 1, 0, 1])],
            vec![t(), t(), TruncSeries::poly_i64(&[0, 1, 2])],
            vec![
                TruncSeries::poly_i64(&[0, 1, 1]),
                TruncSeries::poly_i64(&[0, 1, 1, 5]),
                TruncSeries::poly_i64(&[0, 1, 1, 5, -2]),
            ],
        ];
        for roots in cases {
            let n = predicted_win_step(&roots).unwrap();
            let p = from_roots(&roots).unwrap();
            let g = play_game(&p, 1, 64);
            assert_eq!(g.status, GameStatus::Win, "roots case");
            assert_eq!(g.win_round(), Some(n));
        }
    }

    #[test]
    fn polygon_examples() {
        let segs = newton_polygon(&x2_minus_t()).unwrap();
        assert_eq!(segs.len(), 1);
        assert_eq!(segs[0].slope, rat(1, 2));
        assert_eq!(segs[0].length, 2);

        let segs = newton_polygon(&sample_poly()).unwrap();
        assert_eq!(segs.len(), 2);
        assert_eq!(segs[0], PolygonSegment { slope: rat(1, 1), length: 1 });
        assert_eq!(segs[1], PolygonSegment { slope: rat(2, 1), length: 1 });

        assert!(newton_polygon(&WeierstrassPoly::x_power(4)).unwrap().is_empty());
    }

    #[test]
    fn polygon_slopes_match_root_valuations() {
        let roots = vec![t(), t(), t().mul(&t()).mul(&t())];
        let p = from_roots(&roots).unwrap();
        let segs = newton_polygon(&p).unwrap();
        let mut slopes: Vec<(BigRational, usize)> = segs
            .into_iter()
            .map(|s| (s.slope, s.length))
            .collect();
        slopes.sort();
        assert_eq!(slopes, vec![(rat(1, 1), 2), (rat(3, 1), 1)]);
    }

    #[test]
    fn find_mu_examples() {
        assert_eq!(find_mu_search(&x2_minus_t(), 4, 32).unwrap(), Some(2));
        assert_eq!(find_mu_search(&sample_poly(), 4, 32).unwrap(), Some(1));
        let sq = from_roots(&[t(), t()]).unwrap();
        assert!(find_mu_search(&sq, 4, 32).is_err());
    }
}
