//! Exact-rational periodic functions on the doubled half-integer grid.
//!
//! Wave coefficients live on an arithmetic grid of spacing 1 whose points
//! are either all integers or all half-odd integers. Indexing by the
//! doubled argument `h = 2s` makes both cases uniform: a table with grid
//! parity `p` is defined at `h = p (mod 2)` and zero by convention at the
//! other parity. The function has integer period `P`, i.e. doubled period
//! `2P`, and stores exactly the `P` on-grid values.

use num::traits::Zero;

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicTable {
    /// Residue class mod 2 of doubled arguments the function lives on.
    grid_parity: u8,
    /// On-grid values; entry `i` is the value at doubled argument
    /// `grid_parity + 2 i`. The integer period is `values.len()`.
    values: Vec<Rational>,
}

impl PeriodicTable {
    /// All-zero table with the given integer period and grid parity.
    pub fn zero(period: u64, grid_parity: u8) -> Self {
        assert!(period >= 1);
        assert!(grid_parity <= 1);
        PeriodicTable {
            grid_parity,
            values: vec![Rational::zero(); period as usize],
        }
    }

    /// Table from explicit on-grid values (entry `i` at `h = parity + 2i`).
    pub fn from_values(values: Vec<Rational>, grid_parity: u8) -> Self {
        assert!(!values.is_empty());
        assert!(grid_parity <= 1);
        PeriodicTable { grid_parity, values }
    }

    /// Constant table on the integer grid.
    pub fn constant(value: Rational) -> Self {
        PeriodicTable {
            grid_parity: 0,
            values: vec![value],
        }
    }

    /// Integer period of the stored representation.
    pub fn period(&self) -> u64 {
        self.values.len() as u64
    }

    /// Period measured on the doubled grid.
    pub fn period_doubled(&self) -> u64 {
        2 * self.period()
    }

    pub fn grid_parity(&self) -> u8 {
        self.grid_parity
    }

    /// On-grid values in order of doubled argument `parity, parity+2, ...`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    fn slot(&self, doubled: i64) -> Option<usize> {
        if doubled.rem_euclid(2) as u8 != self.grid_parity {
            return None;
        }
        let step = (doubled - self.grid_parity as i64).div_euclid(2);
        Some(step.rem_euclid(self.values.len() as i64) as usize)
    }

    /// Value at doubled argument `h`; exactly zero off the grid parity.
    pub fn at_doubled(&self, doubled: i64) -> Rational {
        match self.slot(doubled) {
            Some(i) => self.values[i].clone(),
            None => Rational::zero(),
        }
    }

    /// Borrowed value at doubled argument `h`, `None` off-parity.
    pub fn get_doubled(&self, doubled: i64) -> Option<&Rational> {
        self.slot(doubled).map(|i| &self.values[i])
    }

    /// Overwrite the value at doubled argument `h` (must be on-parity).
    pub fn set_doubled(&mut self, doubled: i64, value: Rational) {
        let i = self
            .slot(doubled)
            .expect("set_doubled requires an on-parity argument");
        self.values[i] = value;
    }

    /// `self += scale * other(h - shift_doubled)` pointwise on this table's
    /// grid. The other table's period must divide this one's and the shift
    /// must map this grid onto the other's.
    pub fn add_scaled_shifted(&mut self, other: &PeriodicTable, scale: &Rational, shift_doubled: i64) {
        debug_assert_eq!(self.period() % other.period(), 0);
        let parity = self.grid_parity as i64;
        for i in 0..self.values.len() {
            let h = parity + 2 * i as i64;
            if let Some(v) = other.get_doubled(h - shift_doubled) {
                self.values[i] += scale * v;
            }
        }
    }

    /// True if every stored value is zero.
    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Whether the function is also periodic with the (smaller) period `p`.
    pub fn has_period(&self, p: u64) -> bool {
        if p == 0 || self.period() % p != 0 {
            return false;
        }
        let p = p as usize;
        self.values
            .iter()
            .enumerate()
            .all(|(i, v)| *v == self.values[i % p])
    }

    /// Restrict to the given divisor period, checking consistency.
    pub fn with_period(&self, p: u64) -> Option<PeriodicTable> {
        self.has_period(p).then(|| PeriodicTable {
            grid_parity: self.grid_parity,
            values: self.values[..p as usize].to_vec(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_i64, ratio};

    #[test]
    fn parity_convention_returns_zero_off_grid() {
        let t = PeriodicTable::from_values(vec![from_i64(7), from_i64(9)], 1);
        assert_eq!(t.at_doubled(1), from_i64(7));
        assert_eq!(t.at_doubled(3), from_i64(9));
        assert_eq!(t.at_doubled(5), from_i64(7));
        assert_eq!(t.at_doubled(-1), from_i64(9));
        assert!(t.at_doubled(0).is_zero());
        assert!(t.at_doubled(2).is_zero());
    }

    #[test]
    fn negative_arguments_wrap() {
        let t = PeriodicTable::from_values(vec![from_i64(1), from_i64(2), from_i64(3)], 0);
        assert_eq!(t.at_doubled(-2), t.at_doubled(4));
        assert_eq!(t.at_doubled(-6), t.at_doubled(0));
    }

    #[test]
    fn shifted_accumulation() {
        let mut acc = PeriodicTable::zero(4, 0);
        let src = PeriodicTable::from_values(vec![from_i64(1), from_i64(2)], 0);
        acc.add_scaled_shifted(&src, &ratio(1, 2), 2);
        // acc(h) = src(h - 2) / 2
        assert_eq!(acc.at_doubled(2), ratio(1, 2));
        assert_eq!(acc.at_doubled(4), from_i64(1));
    }

    #[test]
    fn sub_period_detection() {
        let t = PeriodicTable::from_values(
            vec![from_i64(5), from_i64(6), from_i64(5), from_i64(6)],
            0,
        );
        assert!(t.has_period(2));
        assert!(!t.has_period(3));
        assert_eq!(t.with_period(2).unwrap().period(), 2);
    }
}
