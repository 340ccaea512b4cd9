//! Quasi-polynomial construction by the coefficient recursion in the
//! centered (`V`-space) form.
//!
//! Exponents are absorbed one at a time. Writing `V(s) = sum_j R_j(s)
//! s^{n-j}` for the prefix tuple `d^n`, the coefficient step from level
//! `n-1` to `n` with new exponent `d`, period `tau = lcm` over the prefix
//! and `delta = tau / d` is
//!
//! ```text
//! R^n_j(s)  = 1/(n-j) * sum_{l=0}^{j-1} tau^{l-1} C(n-1-j+l, l)
//!             * sum_{p=0}^{delta-1} B_l(1 - lambda_p/delta) R^{n-1}_{j-l}(s - lambda_p d)
//! ```
//!
//! with `lambda_p = p + 1/2` and Bernoulli polynomials `B_l`. The same sum
//! restricted to `l >= 1` gives the recursion-determined part of the final
//! coefficient `R^n_n`; what it cannot see is a `d`-periodic remainder.
//! That remainder is read off exactly from the run of `2 xi - 1`
//! consecutive interior zeros of `V` strictly between `-xi` and `xi`
//! (equivalently `W(s) = 0` for `1 - sum(d) <= s <= -1`): the run always
//! covers every residue of the `d`-grid, each residue possibly several
//! times, and repeated sightings plus `V(xi) = 1` are verified rather than
//! fitted.

use num::integer::Integer;
use num::traits::{One, Zero};

use crate::error::Error;
use crate::exponents::ExponentTuple;
use crate::rational::Rational;

use super::bernoulli::bernoulli_poly;
use super::table::PeriodicTable;
use super::{QuasiPolynomial, Space};

/// The full output of the recursion builder: the wave itself plus the
/// centered coefficient tables, with the final coefficient split into its
/// recursion-determined part and the periodic remainder fixed by the zero
/// closure.
#[derive(Clone, Debug)]
pub struct RecursionTables {
    /// Final result converted to `W`-space.
    pub wave: QuasiPolynomial,
    /// Centered coefficients `R_1..R_m` (`R_j` multiplies `s^{m-j}`).
    pub v_coefficients: Vec<PeriodicTable>,
    /// Bernoulli-sum part of `R_m` (period dividing `lcm(d_1..d_{m-1})`).
    pub tail_bernoulli: PeriodicTable,
    /// The `d_m`-periodic remainder `R_m - tail_bernoulli`.
    pub tail_remainder: PeriodicTable,
}

/// Build the `W`-space quasi-polynomial through the coefficient recursion.
pub fn build_by_recursion(tuple: &ExponentTuple) -> Result<QuasiPolynomial, Error> {
    Ok(build_by_recursion_detailed(tuple)?.wave)
}

/// As [`build_by_recursion`], also exposing the centered tables.
pub fn build_by_recursion_detailed(tuple: &ExponentTuple) -> Result<RecursionTables, Error> {
    let degrees = tuple.degrees();
    let m = degrees.len();
    let prefix = tuple.prefix_periods();

    let d1 = degrees[0];
    let mut degree_sum = d1;
    let mut tables = vec![base_indicator(d1)];
    let mut tail_bernoulli = PeriodicTable::zero(1, (d1 % 2) as u8);
    let mut tail_remainder = tables[0].clone();

    for n in 2..=m {
        let d = degrees[n - 1];
        let tau_old = prefix[n - 2];
        let tau_new = prefix[n - 1];
        let delta = tau_new / d;
        let parity_new = ((degree_sum + d) % 2) as u8;
        let sum_new = degree_sum + d;

        // B_l(1 - lambda_p / delta) for l = 0..n-2, p = 0..delta-1.
        let two_delta = Rational::from_integer((2 * delta).into());
        let bernoulli: Vec<Vec<Rational>> = (0..=(n as u32 - 2))
            .map(|l| {
                (0..delta)
                    .map(|p| {
                        let x = Rational::from_integer((2 * delta - 2 * p - 1).into())
                            / two_delta.clone();
                        bernoulli_poly(l, &x)
                    })
                    .collect()
            })
            .collect();

        let tau_rat = Rational::from_integer(tau_new.into());
        let mut new_tables = Vec::with_capacity(n);
        for j in 1..n {
            let mut table = PeriodicTable::zero(prefix[j - 1], parity_new);
            for l in 0..j {
                let coeff = tau_rat.pow(l as i32 - 1)
                    * Rational::from_integer(crate::rational::binomial(
                        (n - 1 - j + l) as u64,
                        l as u64,
                    ))
                    / Rational::from_integer(((n - j) as u64).into());
                accumulate_shift_sum(&mut table, &tables[j - l - 1], &bernoulli[l], d, &coeff);
            }
            new_tables.push(table);
        }

        // Recursion-determined part of the final coefficient.
        let mut tail = PeriodicTable::zero(tau_old, parity_new);
        for l in 1..n {
            let coeff = tau_rat.pow(l as i32 - 1) / Rational::from_integer((l as u64).into());
            accumulate_shift_sum(&mut tail, &tables[n - l - 1], &bernoulli[l], d, &coeff);
        }

        // Closure: the interior zeros V(h/2) = 0 for doubled arguments
        // h = 2 - sum(d), ..., sum(d) - 2 pin every residue of the
        // d-periodic remainder; repeats must agree.
        let remainder = close_remainder(&new_tables, &tail, d, sum_new, parity_new)?;

        let mut last = PeriodicTable::zero(tau_new, parity_new);
        last.add_scaled_shifted(&tail, &Rational::one(), 0);
        last.add_scaled_shifted(&remainder, &Rational::one(), 0);
        new_tables.push(last);

        tables = new_tables;
        tail_bernoulli = tail;
        tail_remainder = remainder;
        degree_sum = sum_new;
    }

    // V(xi) = W(0) = 1 and V(-xi) = W(-2 xi) = (-1)^{m+1}: free sanity
    // checks on the assembled tables.
    let v_poly = QuasiPolynomial::from_parts(tuple.clone(), Space::V, tables.clone());
    let xi = tuple.xi_shift();
    let at_xi = v_poly.eval_v(xi)?;
    if at_xi != Rational::one() {
        return Err(Error::ClosureInconsistent(format!(
            "V(xi) = {at_xi}, expected 1 for {tuple}"
        )));
    }
    let at_neg_xi = v_poly.eval_v(-xi)?;
    let expected = if m % 2 == 0 {
        -Rational::one()
    } else {
        Rational::one()
    };
    if at_neg_xi != expected {
        return Err(Error::ClosureInconsistent(format!(
            "V(-xi) = {at_neg_xi}, expected {expected} for {tuple}"
        )));
    }

    Ok(RecursionTables {
        wave: v_poly.to_w_space(),
        v_coefficients: tables,
        tail_bernoulli,
        tail_remainder,
    })
}

/// `V(s, (d)) = Psi_d(s - d/2)`: value 1 exactly at doubled arguments
/// `h = d (mod 2d)`.
fn base_indicator(d: u64) -> PeriodicTable {
    let parity = (d % 2) as u8;
    let mut table = PeriodicTable::zero(d, parity);
    table.set_doubled(d as i64, Rational::one());
    table
}

/// `target += coeff * sum_{p=0}^{delta-1} weights[p] * source(h - (2p+1) d)`
/// for every on-grid `h` of `target`.
///
/// Shifts repeat modulo the source period: `p` and `p + c` produce the same
/// lookup when `c = P / gcd(d, P)`, so the `delta` weights collapse onto
/// `c` aggregated ones. `c` always divides `delta` here because the source
/// period divides the pre-step period `tau_old`.
fn accumulate_shift_sum(
    target: &mut PeriodicTable,
    source: &PeriodicTable,
    weights: &[Rational],
    d: u64,
    coeff: &Rational,
) {
    let delta = weights.len() as u64;
    let period = source.period();
    let classes = period / d.gcd(&period);
    debug_assert_eq!(delta % classes, 0);

    let mut aggregated = vec![Rational::zero(); classes as usize];
    for (p, w) in weights.iter().enumerate() {
        aggregated[p % classes as usize] += w;
    }
    for a in aggregated.iter_mut() {
        *a *= coeff;
    }

    let parity = target.grid_parity() as i64;
    let period_target = target.period() as i64;
    for i in 0..period_target {
        let h = parity + 2 * i;
        let mut acc = Rational::zero();
        for (q, w) in aggregated.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let shift = (2 * q as i64 + 1) * d as i64;
            if let Some(v) = source.get_doubled(h - shift) {
                acc += w * v;
            }
        }
        if !acc.is_zero() {
            let current = target.at_doubled(h);
            target.set_doubled(h, current + acc);
        }
    }
}

/// Solve for the `d`-periodic remainder from the interior zero run, checking
/// every repeated sighting for consistency.
fn close_remainder(
    polynomial_tables: &[PeriodicTable],
    tail: &PeriodicTable,
    d: u64,
    degree_sum: u64,
    parity: u8,
) -> Result<PeriodicTable, Error> {
    let n = polynomial_tables.len() + 1;
    let sum = degree_sum as i64;
    if degree_sum - 1 < d {
        // Needs sum(d_i, i<n) >= 1, which always holds for n >= 2.
        return Err(Error::ClosureInconsistent(format!(
            "zero run of length {} cannot cover {} residues",
            degree_sum - 1,
            d
        )));
    }

    let mut remainder = PeriodicTable::zero(d, parity);
    let mut filled = vec![false; (2 * d) as usize];
    let mut h = 2 - sum;
    while h <= sum - 2 {
        // V(h/2) = 0  =>  remainder(h) = -tail(h) - sum_j R_j(h) (h/2)^{n-j}
        let s = Rational::new(h.into(), 2.into());
        let mut poly = Rational::zero();
        for table in polynomial_tables {
            poly = poly * &s + table.at_doubled(h);
        }
        poly = poly * &s + tail.at_doubled(h);
        let required = -poly;

        let slot = h.rem_euclid(2 * d as i64) as usize;
        if filled[slot] {
            if remainder.at_doubled(h) != required {
                return Err(Error::ClosureInconsistent(format!(
                    "zero at doubled argument {h} demands {required}, \
                     conflicting with an earlier residue"
                )));
            }
        } else {
            remainder.set_doubled(h, required);
            filled[slot] = true;
        }
        h += 2;
    }
    Ok(remainder)
}
