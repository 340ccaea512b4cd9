//! Verifiable structure of the waves: divisibility indicator, zero sets,
//! parity reflection, tuple scaling, duplicate-exponent reduction, and the
//! coefficient difference relation used as a post-build self check.

use num::integer::Integer;
use num::traits::{One, Zero};

use crate::error::Error;
use crate::exponents::{ExponentTuple, HalfInteger};
use crate::rational::{binomial, Rational};

use super::interp::build_by_interpolation;
use super::table::PeriodicTable;
use super::{QuasiPolynomial, Space};

/// `Psi_p(s)`: 1 exactly when `s` is an integer divisible by `p`.
pub fn psi(p: u64, s: HalfInteger) -> bool {
    debug_assert!(p >= 1);
    match s.as_integer() {
        Some(n) => n.rem_euclid(p as i64) == 0,
        None => false,
    }
}

/// The predicted zero set of the wave continuation.
///
/// With `g = gcd(d_1..d_m)` and `S = sum d_r`: the finite zeros are
/// `-g, -2g, ..., -(S - g)`; `-xi = -S/2` joins them when `m` is even; and
/// for `g > 1` every integer not divisible by `g` is a zero as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSet {
    pub finite: Vec<i64>,
    pub minus_xi: Option<HalfInteger>,
    /// When `Some(g)`, all integers not divisible by `g` are zeros.
    pub non_multiples_of: Option<u64>,
}

impl ZeroSet {
    /// Whether integer `s` belongs to the predicted set.
    pub fn contains(&self, s: i64) -> bool {
        if let Some(g) = self.non_multiples_of {
            if s.rem_euclid(g as i64) != 0 {
                return true;
            }
        }
        if self
            .minus_xi
            .and_then(|x| x.as_integer())
            .is_some_and(|x| x == s)
        {
            return true;
        }
        self.finite.contains(&s)
    }
}

pub fn predicted_zeroes(tuple: &ExponentTuple) -> ZeroSet {
    let g = tuple.gcd() as i64;
    let sum = tuple.degree_sum() as i64;
    let finite = (1..)
        .map(|k| -k * g)
        .take_while(|z| *z >= -(sum - g))
        .collect();
    ZeroSet {
        finite,
        minus_xi: (tuple.len() % 2 == 0).then(|| -tuple.xi_shift()),
        non_multiples_of: (g > 1).then_some(g as u64),
    }
}

/// Outcome of checking the continuation against the predicted zero set.
#[derive(Clone, Debug)]
pub struct ZeroVerification {
    /// Zeros match the prediction exactly on the window `[-sum(d), 0]`.
    pub window_exact: bool,
    pub first_window_mismatch: Option<i64>,
    /// For `g > 1`: every non-multiple of `g` in `[-3 tau, 3 tau]` vanishes.
    pub residue_classes_hold: bool,
    /// Whether `-xi` lies on the integer grid; off-grid the zero is the
    /// doubled-grid statement `V(0) = 0`, vacuous in the table convention.
    pub minus_xi_on_grid: bool,
    pub points_checked: u64,
}

impl ZeroVerification {
    pub fn passed(&self) -> bool {
        self.window_exact && self.residue_classes_hold
    }
}

/// Check `eval` against [`predicted_zeroes`] on the standard windows.
pub fn verify_zeroes(wave: &QuasiPolynomial) -> ZeroVerification {
    let tuple = wave.tuple();
    let set = predicted_zeroes(tuple);
    let sum = tuple.degree_sum() as i64;
    let tau = tuple.period() as i64;

    let mut window_exact = true;
    let mut first_window_mismatch = None;
    let mut points = 0u64;
    for s in -sum..=0 {
        let is_zero = wave.eval(s).is_zero();
        let predicted = set.contains(s);
        points += 1;
        if is_zero != predicted {
            window_exact = false;
            first_window_mismatch = Some(s);
            break;
        }
    }

    let mut residue_classes_hold = true;
    if let Some(g) = set.non_multiples_of {
        for s in -3 * tau..=3 * tau {
            if s.rem_euclid(g as i64) != 0 {
                points += 1;
                if !wave.eval(s).is_zero() {
                    residue_classes_hold = false;
                    break;
                }
            }
        }
    }

    ZeroVerification {
        window_exact,
        first_window_mismatch,
        residue_classes_hold,
        minus_xi_on_grid: tuple.degree_sum() % 2 == 0,
        points_checked: points,
    }
}

/// Check the reflection `W(s1) = (-1)^{m+1} W(s2)` whenever
/// `s1 + s2 + 2 xi = 0`, over one full period of sample points.
pub fn verify_parity(wave: &QuasiPolynomial) -> bool {
    let tuple = wave.tuple();
    let sum = tuple.degree_sum() as i64;
    let tau = tuple.period() as i64;
    let odd_m = tuple.len() % 2 == 1;
    for s1 in -(sum + tau)..=tau {
        let s2 = -sum - s1;
        let lhs = wave.eval(s1);
        let rhs = wave.eval(s2);
        let rhs = if odd_m { rhs } else { -rhs };
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// The wave of the scaled tuple `p * d^m`: `W(s, p t) = Psi_p(s) W(s/p, t)`.
///
/// Coefficient tables stretch by `p` with zeros off the multiples of `p`,
/// and the `s^{m-j}` coefficient picks up `p^{j-m}`.
pub fn scale_tuple(wave: &QuasiPolynomial, p: u64) -> Result<QuasiPolynomial, Error> {
    if p < 1 {
        return Err(Error::InvalidScale("factor must be >= 1".into()));
    }
    if wave.space() != Space::W {
        return Err(Error::WrongSpace {
            expected: "W",
            found: "V",
        });
    }
    if p == 1 {
        return Ok(wave.clone());
    }
    let tuple = wave.tuple().scaled(p)?;
    let m = wave.coefficients().len();
    let mut tables = Vec::with_capacity(m);
    for (index, table) in wave.coefficients().iter().enumerate() {
        let j = index + 1;
        let scale = Rational::from_integer(p.into()).pow(j as i32 - m as i32);
        let period = table.period() * p;
        let mut stretched = PeriodicTable::zero(period, 0);
        for s in 0..period as i64 {
            if s % p as i64 == 0 {
                let value = table.at_doubled(2 * (s / p as i64));
                if !value.is_zero() {
                    stretched.set_doubled(2 * s, value * &scale);
                }
            }
        }
        tables.push(stretched);
    }
    Ok(QuasiPolynomial::from_parts(tuple, Space::W, tables))
}

/// Result of verifying the duplicate-exponent reduction
/// `W(s, t) = W(s - d, t') + W(s, t')`, where `t` contains `d` twice and
/// `t'` replaces one copy of `d` by `2d`.
#[derive(Clone, Debug)]
pub struct DuplicateReductionReport {
    pub duplicated: u64,
    pub replacement: ExponentTuple,
    pub points_checked: u64,
    pub first_mismatch: Option<i64>,
}

impl DuplicateReductionReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Verify the duplicate-exponent reduction over at least one full common
/// period, including negative (continuation) arguments.
pub fn reduce_duplicate(tuple: &ExponentTuple) -> Result<DuplicateReductionReport, Error> {
    let d = tuple.first_duplicate().ok_or(Error::NoDuplicateExponent)?;
    let index = tuple
        .degrees()
        .iter()
        .position(|&x| x == d)
        .expect("duplicate exists");
    let mut degrees: Vec<u64> = tuple.degrees().to_vec();
    degrees.remove(index);
    degrees.push(2 * d);
    let replacement = ExponentTuple::new(degrees)?;

    let original_wave = build_by_interpolation(tuple)?;
    let replacement_wave = build_by_interpolation(&replacement)?;
    let span = tuple.period().lcm(&replacement.period()) as i64;

    let mut first_mismatch = None;
    let mut points = 0u64;
    for s in -span..=2 * span {
        let lhs = original_wave.eval(s);
        let rhs = replacement_wave.eval(s - d as i64) + replacement_wave.eval(s);
        points += 1;
        if lhs != rhs {
            first_mismatch = Some(s);
            break;
        }
    }
    Ok(DuplicateReductionReport {
        duplicated: d,
        replacement,
        points_checked: points,
        first_mismatch,
    })
}

/// Check the difference relation tying level-`m` centered coefficients to
/// the level-`m-1` ones: for every `k = 0..m-1` and every grid point `s`,
///
/// ```text
/// R^m_{m-k}(s) - R^m_{m-k}(s - d) =
///   sum_{j=k+1}^{m-1} (-d)^{j-k} C(j, k) R^m_{m-j}(s - d)
///                   + (-d/2)^{j-1-k} C(j-1, k) R^{m-1}_{m-j}(s - d/2)
/// ```
///
/// with `d` the largest exponent. Holds identically for correctly built
/// tables, so it doubles as a builder self check.
pub fn verify_difference_relation(tuple: &ExponentTuple) -> Result<bool, Error> {
    if tuple.len() < 2 {
        return Ok(true);
    }
    let full = build_by_interpolation(tuple)?.to_v_space();
    let prefix_tuple = tuple.without_index(tuple.len() - 1)?;
    let prev = build_by_interpolation(&prefix_tuple)?.to_v_space();
    let d = *tuple.degrees().last().unwrap();
    Ok(difference_relation_holds(
        full.coefficients(),
        prev.coefficients(),
        d,
        tuple.period(),
        (tuple.degree_sum() % 2) as u8,
    ))
}

/// Table-level form of [`verify_difference_relation`] for prebuilt centered
/// coefficients (e.g. straight out of the recursion builder).
pub fn difference_relation_holds(
    v_full: &[PeriodicTable],
    v_prev: &[PeriodicTable],
    d: u64,
    period: u64,
    grid_parity: u8,
) -> bool {
    let m = v_full.len();
    debug_assert_eq!(v_prev.len(), m - 1);
    let d_i = d as i64;
    let minus_d = Rational::from_integer((-(d_i)).into());
    let minus_half_d = Rational::new((-(d_i)).into(), 2.into());

    for k in 0..m {
        let lhs_table = &v_full[m - k - 1];
        for i in 0..period as i64 {
            let h = grid_parity as i64 + 2 * i;
            let lhs = lhs_table.at_doubled(h) - lhs_table.at_doubled(h - 2 * d_i);
            let mut rhs = Rational::zero();
            for j in (k + 1)..m {
                let full_part = minus_d.pow((j - k) as i32)
                    * Rational::from_integer(binomial(j as u64, k as u64))
                    * v_full[m - j - 1].at_doubled(h - 2 * d_i);
                let prev_part = minus_half_d.pow((j - 1 - k) as i32)
                    * Rational::from_integer(binomial(j as u64 - 1, k as u64))
                    * v_prev[m - j - 1].at_doubled(h - d_i);
                rhs += full_part + prev_part;
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}
