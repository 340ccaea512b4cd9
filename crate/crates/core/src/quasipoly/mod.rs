//! Construction, evaluation, and verification of the quasi-polynomial
//! (Sylvester wave) representation of `W(s, d^m)`.
//!
//! The wave splits as `W(s) = Q_m(s) + sum_{j<m} Q_j(s) s^{m-j}` where each
//! coefficient `Q_j` is periodic with period `lcm(d_1..d_j)`. Two
//! independent constructions are provided:
//!
//! * [`build_by_interpolation`] fits, per residue class mod the full period,
//!   the exact polynomial through DP oracle values;
//! * [`build_by_recursion`] lifts one exponent at a time through
//!   Bernoulli-polynomial shift sums, closing the final periodic remainder
//!   from the run of consecutive zeros of the centered wave.
//!
//! Coefficients are exact rational tables over one period; the trigonometric
//! closed forms only ever appear as floating-point test fixtures.

mod bernoulli;
mod document;
mod interp;
mod lemmas;
mod recursion;
mod table;

pub use bernoulli::{bernoulli_number, bernoulli_poly};
pub use document::{dump, load};
pub use interp::build_by_interpolation;
pub use lemmas::{
    predicted_zeroes, psi, reduce_duplicate, scale_tuple, verify_difference_relation,
    verify_parity, verify_zeroes, DuplicateReductionReport, ZeroSet, ZeroVerification,
};
pub use recursion::{build_by_recursion, build_by_recursion_detailed, RecursionTables};
pub use table::PeriodicTable;

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::Error;
use crate::exponents::{ExponentTuple, HalfInteger};
use crate::rational::{binomial, is_integer, mean, Rational};

/// Which argument convention a quasi-polynomial uses.
///
/// `W`-space evaluates at plain integers; `V`-space is the centered form
/// `V(s) = W(s - xi)` living on the grid `xi + Z` (half-odd when the degree
/// sum is odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    W,
    V,
}

impl Space {
    fn name(&self) -> &'static str {
        match self {
            Space::W => "W",
            Space::V => "V",
        }
    }
}

/// A quasi-polynomial `sum_j Q_j(s) s^{m-j}` with periodic exact-rational
/// coefficient tables.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolynomial {
    tuple: ExponentTuple,
    space: Space,
    xi: HalfInteger,
    /// `coefficients[j-1]` multiplies `s^{m-j}`; table `j` has period
    /// `lcm(d_1..d_j)`.
    coefficients: Vec<PeriodicTable>,
}

impl QuasiPolynomial {
    pub(crate) fn from_parts(
        tuple: ExponentTuple,
        space: Space,
        coefficients: Vec<PeriodicTable>,
    ) -> Self {
        let xi = tuple.xi_shift();
        debug_assert_eq!(coefficients.len(), tuple.len());
        QuasiPolynomial {
            tuple,
            space,
            xi,
            coefficients,
        }
    }

    pub fn tuple(&self) -> &ExponentTuple {
        &self.tuple
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// The centering shift `xi = (sum of exponents) / 2`.
    pub fn xi(&self) -> HalfInteger {
        self.xi
    }

    pub fn coefficients(&self) -> &[PeriodicTable] {
        &self.coefficients
    }

    fn grid_parity(&self) -> u8 {
        match self.space {
            Space::W => 0,
            Space::V => (self.tuple.degree_sum() % 2) as u8,
        }
    }

    /// Exact value of the quasi-polynomial continuation at integer `s`.
    ///
    /// Requires `W`-space. For `s >= 0` this equals the partition count;
    /// for `s < 0` it is the continuation, which vanishes precisely on the
    /// predicted zero set.
    pub fn eval(&self, s: i64) -> Rational {
        assert!(
            self.space == Space::W,
            "eval takes W-space quasi-polynomials; convert with to_w_space first"
        );
        self.horner(HalfInteger::from_integer(s))
    }

    /// Exact value of the centered wave at an on-grid half-integer.
    pub fn eval_v(&self, s: HalfInteger) -> Result<Rational, Error> {
        if self.space != Space::V {
            return Err(Error::WrongSpace {
                expected: "V",
                found: self.space.name(),
            });
        }
        let parity = self.grid_parity();
        if s.doubled().rem_euclid(2) as u8 != parity {
            return Err(Error::OffGrid {
                argument: s.to_string(),
                expected_parity: parity,
            });
        }
        Ok(self.horner(s))
    }

    /// Horner accumulation `(((Q_1 s) + Q_2) s + ...) + Q_m` with
    /// on-the-fly table lookups at the doubled argument.
    fn horner(&self, s: HalfInteger) -> Rational {
        let h = s.doubled();
        let sr = s.to_rational();
        let mut acc = Rational::zero();
        for table in &self.coefficients {
            acc = acc * &sr + table.at_doubled(h);
        }
        acc
    }

    /// `eval` with the result checked to be an exact integer.
    pub fn eval_integer(&self, s: i64) -> Result<BigInt, Error> {
        let v = self.eval(s);
        if !is_integer(&v) {
            return Err(Error::Verification(format!(
                "W({s}, {}) evaluated to non-integer {v}",
                self.tuple
            )));
        }
        Ok(v.to_integer())
    }

    /// The leading coefficient `Q_1` as a single rational: its value when
    /// constant, otherwise its mean over one period. Equals
    /// `1 / ((m-1)! d_1 d_2 ... d_m)` for every tuple (for tuples with
    /// overall gcd `p > 1` the table oscillates between `0` and `p` times
    /// this value, and the mean recovers it).
    pub fn leading_coefficient(&self) -> Rational {
        mean(self.coefficients[0].values())
    }

    /// Convert to the centered `V`-space form, `V(s) = W(s - xi)`, with
    /// coefficient tables on the `xi + Z` grid.
    ///
    /// New tables: `R_j(s) = sum_{i<=j} C(m-i, j-i) (-xi)^{j-i} Q_i(s - xi)`.
    pub fn to_v_space(&self) -> QuasiPolynomial {
        match self.space {
            Space::V => self.clone(),
            Space::W => self.change_space(Space::V),
        }
    }

    /// Convert to `W`-space, `W(s) = V(s + xi)`, inverse of [`Self::to_v_space`].
    pub fn to_w_space(&self) -> QuasiPolynomial {
        match self.space {
            Space::W => self.clone(),
            Space::V => self.change_space(Space::W),
        }
    }

    fn change_space(&self, target: Space) -> QuasiPolynomial {
        let m = self.tuple.len();
        let prefix = self.tuple.prefix_periods();
        let degree_sum = self.tuple.degree_sum() as i64;
        // Moving W -> V substitutes s -> s - xi (tables shift by +xi on the
        // doubled grid and the shift constant is -xi); V -> W is the mirror.
        let (shift_doubled, shift_constant) = match target {
            Space::V => (degree_sum, -self.xi.to_rational()),
            Space::W => (-degree_sum, self.xi.to_rational()),
        };
        let parity = match target {
            Space::W => 0,
            Space::V => (self.tuple.degree_sum() % 2) as u8,
        };
        let mut new_tables = Vec::with_capacity(m);
        for j in 1..=m {
            let mut table = PeriodicTable::zero(prefix[j - 1], parity);
            for i in 1..=j {
                let coeff = Rational::from_integer(binomial((m - i) as u64, (j - i) as u64))
                    * shift_constant.pow((j - i) as i32);
                table.add_scaled_shifted(&self.coefficients[i - 1], &coeff, shift_doubled);
            }
            new_tables.push(table);
        }
        QuasiPolynomial {
            tuple: self.tuple.clone(),
            space: target,
            xi: self.xi,
            coefficients: new_tables,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp;

    fn tuple(degrees: &[u64]) -> ExponentTuple {
        ExponentTuple::new(degrees.to_vec()).unwrap()
    }

    #[test]
    fn space_round_trip_preserves_tables() {
        let q = build_by_interpolation(&tuple(&[1, 2, 3])).unwrap();
        let back = q.to_v_space().to_w_space();
        assert_eq!(q, back);
    }

    #[test]
    fn v_space_evaluation_matches_shifted_w() {
        let q = build_by_interpolation(&tuple(&[1, 2, 3, 4])).unwrap();
        let v = q.to_v_space();
        let xi = q.xi(); // 5
        for s in -20i64..=20 {
            let w_val = q.eval(s);
            let v_val = v
                .eval_v(HalfInteger::from_integer(s) + xi)
                .expect("on-grid");
            assert_eq!(w_val, v_val, "s = {s}");
        }
    }

    #[test]
    fn v_space_rejects_off_grid_arguments() {
        let q = build_by_interpolation(&tuple(&[1, 2])).unwrap().to_v_space();
        // degree sum 3 is odd: the grid is half-odd, integers are off-grid.
        assert!(q.eval_v(HalfInteger::from_integer(1)).is_err());
        assert!(q.eval_v(HalfInteger::new(3)).is_ok());
    }

    #[test]
    fn evaluation_is_integer_valued_on_integers() {
        for degs in [&[1, 2, 3][..], &[2, 4][..], &[2, 3, 5][..]] {
            let q = build_by_interpolation(&tuple(degs)).unwrap();
            let tau = q.tuple().period() as i64;
            for s in -3 * tau..=3 * tau {
                let v = q.eval(s);
                assert!(is_integer(&v), "non-integer at {degs:?}, s={s}: {v}");
            }
        }
    }

    #[test]
    fn continuation_matches_counts_on_nonnegatives() {
        for degs in [&[1, 2, 3][..], &[2, 2][..], &[3, 4, 6][..]] {
            let t = tuple(degs);
            let q = build_by_interpolation(&t).unwrap();
            let tau = t.period();
            let counts = dp::count_range(&t, 3 * tau);
            for s in 0..=3 * tau {
                assert_eq!(
                    q.eval(s as i64),
                    Rational::from_integer(counts[s as usize].clone().into()),
                    "{degs:?} at s={s}"
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_formula() {
        // 1 / ((m-1)! * product of degrees), also for gcd > 1 tuples.
        use crate::rational::factorial;
        for degs in [&[1][..], &[1, 2, 3, 4][..], &[2, 4][..], &[2, 3, 5][..]] {
            let t = tuple(degs);
            let q = build_by_interpolation(&t).unwrap();
            let m = t.len() as u64;
            let denom = factorial(m - 1) * BigInt::from(t.degrees().iter().product::<u64>());
            assert_eq!(q.leading_coefficient(), Rational::new(1.into(), denom), "{degs:?}");
        }
    }
}
