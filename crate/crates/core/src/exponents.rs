//! Exponent tuples, their derived quantities, and the Coxeter group catalog.
//!
//! An [`ExponentTuple`] is a sorted multiset of positive integers
//! `d_1 <= ... <= d_m`. Two derived quantities drive everything else:
//!
//! * the period `tau = lcm(d_1, ..., d_m)` of the associated wave, and
//! * the shift `xi = (d_1 + ... + d_m) / 2`, a half-integer, which centers
//!   the wave (`V(s) = W(s - xi)` is even or odd in `s` according to the
//!   parity of `m`).
//!
//! [`CoxeterGroup`] carries the degree tuples of the basic polynomial
//! invariants of the irreducible finite reflection groups, plus the
//! symmetric-group family `S_m` with degrees `1..m`.

use std::fmt;
use std::str::FromStr;

use num::integer::Integer;

use crate::error::Error;
use crate::rational::Rational;
use num::bigint::BigInt;

/// Default cap on the rank of the infinite families (`A`, `B`, `D`, `S`).
/// Periods grow like `lcm(1..rank)`, so this keeps table sizes at desk scale.
pub const DEFAULT_MAX_RANK: u32 = 10;

/// An exact half-integer, stored as its doubled value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    doubled: i64,
}

impl HalfInteger {
    /// From the doubled value: `new(3)` is `3/2`.
    pub fn new(doubled: i64) -> Self {
        HalfInteger { doubled }
    }

    pub fn from_integer(n: i64) -> Self {
        HalfInteger { doubled: 2 * n }
    }

    pub fn doubled(&self) -> i64 {
        self.doubled
    }

    pub fn is_integer(&self) -> bool {
        self.doubled % 2 == 0
    }

    /// The integer value, if integral.
    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.doubled / 2)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.doubled), BigInt::from(2))
    }

    /// Halve the value; exact only when the doubled value is even.
    pub fn half(&self) -> Option<HalfInteger> {
        (self.doubled % 2 == 0).then(|| HalfInteger::new(self.doubled / 2))
    }
}

impl std::ops::Add for HalfInteger {
    type Output = HalfInteger;
    fn add(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::new(self.doubled + rhs.doubled)
    }
}

impl std::ops::Sub for HalfInteger {
    type Output = HalfInteger;
    fn sub(self, rhs: HalfInteger) -> HalfInteger {
        HalfInteger::new(self.doubled - rhs.doubled)
    }
}

impl std::ops::Neg for HalfInteger {
    type Output = HalfInteger;
    fn neg(self) -> HalfInteger {
        HalfInteger::new(-self.doubled)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// A sorted multiset of positive integer exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentTuple {
    degrees: Vec<u64>,
}

impl ExponentTuple {
    /// Canonicalizes to ascending order. Input order is not retained.
    pub fn new(mut degrees: Vec<u64>) -> Result<Self, Error> {
        if degrees.is_empty() {
            return Err(Error::InvalidTuple("tuple must be non-empty".into()));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::InvalidTuple("every exponent must be >= 1".into()));
        }
        degrees.sort_unstable();
        Ok(ExponentTuple { degrees })
    }

    /// Consecutive integers `1..=m` (the symmetric group `S_m`).
    pub fn consecutive(m: u32) -> Self {
        ExponentTuple {
            degrees: (1..=m as u64).collect(),
        }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Number of exponents.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one exponent
    }

    /// `lcm(d_1, ..., d_m)`: the common period of all wave coefficients.
    pub fn period(&self) -> u64 {
        self.degrees.iter().fold(1u64, |acc, &d| acc.lcm(&d))
    }

    /// Prefix periods `lcm(d_1..d_j)` for `j = 1..=m`.
    pub fn prefix_periods(&self) -> Vec<u64> {
        let mut acc = 1u64;
        self.degrees
            .iter()
            .map(|&d| {
                acc = acc.lcm(&d);
                acc
            })
            .collect()
    }

    /// `gcd(d_1, ..., d_m)`.
    pub fn gcd(&self) -> u64 {
        self.degrees.iter().fold(0u64, |acc, &d| acc.gcd(&d))
    }

    /// Sum of all exponents, `2 * xi`.
    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().sum()
    }

    /// The shift `xi = (sum of exponents) / 2`.
    pub fn xi_shift(&self) -> HalfInteger {
        HalfInteger::new(self.degree_sum() as i64)
    }

    /// Tuple with every exponent multiplied by `p`.
    pub fn scaled(&self, p: u64) -> Result<Self, Error> {
        if p == 0 {
            return Err(Error::InvalidScale("factor must be >= 1".into()));
        }
        Ok(ExponentTuple {
            degrees: self.degrees.iter().map(|&d| d * p).collect(),
        })
    }

    /// Tuple with the exponent at `index` removed.
    pub fn without_index(&self, index: usize) -> Result<Self, Error> {
        if self.degrees.len() == 1 {
            return Err(Error::InvalidTuple(
                "cannot remove the only exponent".into(),
            ));
        }
        let mut degrees = self.degrees.clone();
        degrees.remove(index);
        Ok(ExponentTuple { degrees })
    }

    /// Smallest exponent value that occurs at least twice, if any.
    pub fn first_duplicate(&self) -> Option<u64> {
        self.degrees.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
    }
}

impl fmt::Display for ExponentTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// An irreducible Coxeter group (or the symmetric pseudo-family `S_m`),
/// identified by family tag and rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterGroup {
    A(u32),
    B(u32),
    D(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
    H3,
    H4,
    /// Dihedral `I_2(m)`, `m >= 2`, with degrees `(2, m)`.
    I2(u32),
    /// Symmetric group `S_m` with degrees `1..=m`.
    S(u32),
}

impl CoxeterGroup {
    /// Validates the family/rank combination against the supported ranges.
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |msg: String| Err(Error::UnknownGroup(msg));
        match *self {
            CoxeterGroup::A(m) => {
                if m < 1 || m > DEFAULT_MAX_RANK {
                    return bad(format!("A{m}: rank must be in 1..={DEFAULT_MAX_RANK}"));
                }
            }
            CoxeterGroup::B(m) => {
                if m < 1 || m > DEFAULT_MAX_RANK {
                    return bad(format!("B{m}: rank must be in 1..={DEFAULT_MAX_RANK}"));
                }
            }
            CoxeterGroup::D(m) => {
                if m < 3 || m > DEFAULT_MAX_RANK {
                    return bad(format!("D{m}: rank must be in 3..={DEFAULT_MAX_RANK}"));
                }
            }
            CoxeterGroup::I2(m) => {
                if m < 2 || m > 1000 {
                    return bad(format!("I2({m}): parameter must be in 2..=1000"));
                }
            }
            CoxeterGroup::S(m) => {
                if m < 1 || m > DEFAULT_MAX_RANK {
                    return bad(format!("S{m}: rank must be in 1..={DEFAULT_MAX_RANK}"));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// The degrees of the basic polynomial invariants, sorted ascending.
    ///
    /// For `D_m` the degree list is `2, 4, ..., 2(m-1)` together with `m`
    /// itself, so the degree `m` occurs twice when `m` is even.
    pub fn degrees(&self) -> Result<ExponentTuple, Error> {
        self.validate()?;
        let degrees: Vec<u64> = match *self {
            CoxeterGroup::A(m) => (2..=m as u64 + 1).collect(),
            CoxeterGroup::B(m) => (1..=m as u64).map(|k| 2 * k).collect(),
            CoxeterGroup::D(m) => {
                let mut v: Vec<u64> = (1..m as u64).map(|k| 2 * k).collect();
                v.push(m as u64);
                v
            }
            CoxeterGroup::G2 => vec![2, 6],
            CoxeterGroup::F4 => vec![2, 6, 8, 12],
            CoxeterGroup::E6 => vec![2, 5, 6, 8, 9, 12],
            CoxeterGroup::E7 => vec![2, 6, 8, 10, 12, 14, 18],
            CoxeterGroup::E8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            CoxeterGroup::H3 => vec![2, 6, 10],
            CoxeterGroup::H4 => vec![2, 12, 20, 30],
            CoxeterGroup::I2(m) => vec![2, m as u64],
            CoxeterGroup::S(m) => (1..=m as u64).collect(),
        };
        ExponentTuple::new(degrees)
    }

    /// The cataloged period `tau(G)`, equal to the lcm of the degrees.
    ///
    /// For the infinite families the catalog stores the closed forms
    /// `tau(A_m) = L(m+1)`, `tau(B_m) = 2 L(m)`,
    /// `tau(D_m) = lcm(2 L(m-1), m)` and `tau(I_2(m)) = lcm(2, m)`, with
    /// `L(n) = lcm(1..n)`. Note `tau(D_m)` is smaller than `2 L(m)` when
    /// `m` is a power of two (e.g. `tau(D_4) = 12`, `tau(D_8) = 840`).
    pub fn catalog_period(&self) -> Result<u64, Error> {
        self.validate()?;
        let l = |n: u64| (1..=n).fold(1u64, |acc, k| acc.lcm(&k));
        Ok(match *self {
            CoxeterGroup::A(m) => l(m as u64 + 1),
            CoxeterGroup::B(m) => 2 * l(m as u64),
            CoxeterGroup::D(m) => (2 * l(m as u64 - 1)).lcm(&(m as u64)),
            CoxeterGroup::G2 => 6,
            CoxeterGroup::F4 => 24,
            CoxeterGroup::E6 => 360,
            CoxeterGroup::E7 => 2520,
            CoxeterGroup::E8 => 2520,
            CoxeterGroup::H3 => 30,
            CoxeterGroup::H4 => 60,
            CoxeterGroup::I2(m) => 2u64.lcm(&(m as u64)),
            CoxeterGroup::S(m) => l(m as u64),
        })
    }

    /// The shift `xi(G)`, half the sum of the degrees.
    pub fn xi_shift(&self) -> Result<HalfInteger, Error> {
        Ok(self.degrees()?.xi_shift())
    }

    /// All groups of the given families within the default rank bounds,
    /// in a fixed deterministic order.
    pub fn standard_catalog() -> Vec<CoxeterGroup> {
        let mut all = Vec::new();
        for m in 1..=10 {
            all.push(CoxeterGroup::A(m));
        }
        for m in 1..=10 {
            all.push(CoxeterGroup::B(m));
        }
        for m in 3..=10 {
            all.push(CoxeterGroup::D(m));
        }
        all.extend([
            CoxeterGroup::G2,
            CoxeterGroup::F4,
            CoxeterGroup::E6,
            CoxeterGroup::E7,
            CoxeterGroup::E8,
            CoxeterGroup::H3,
            CoxeterGroup::H4,
        ]);
        for m in 2..=12 {
            all.push(CoxeterGroup::I2(m));
        }
        for m in 1..=10 {
            all.push(CoxeterGroup::S(m));
        }
        all
    }
}

impl fmt::Display for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterGroup::A(m) => write!(f, "A{m}"),
            CoxeterGroup::B(m) => write!(f, "B{m}"),
            CoxeterGroup::D(m) => write!(f, "D{m}"),
            CoxeterGroup::G2 => write!(f, "G2"),
            CoxeterGroup::F4 => write!(f, "F4"),
            CoxeterGroup::E6 => write!(f, "E6"),
            CoxeterGroup::E7 => write!(f, "E7"),
            CoxeterGroup::E8 => write!(f, "E8"),
            CoxeterGroup::H3 => write!(f, "H3"),
            CoxeterGroup::H4 => write!(f, "H4"),
            CoxeterGroup::I2(m) => write!(f, "I2({m})"),
            CoxeterGroup::S(m) => write!(f, "S{m}"),
        }
    }
}

impl FromStr for CoxeterGroup {
    type Err = Error;

    /// Parses `A3`, `B5`, `D4`, `G2`, `F4`, `E6`, `E7`, `E8`, `H3`, `H4`,
    /// `I2(7)`, `S6` (case-insensitive).
    fn from_str(text: &str) -> Result<Self, Error> {
        let t = text.trim().to_ascii_uppercase();
        let err = || Error::UnknownGroup(text.to_string());
        let group = if let Some(rest) = t.strip_prefix("I2(") {
            let inner = rest.strip_suffix(')').ok_or_else(err)?;
            CoxeterGroup::I2(inner.parse().map_err(|_| err())?)
        } else {
            let mut chars = t.chars();
            let family = chars.next().ok_or_else(err)?;
            let rank: u32 = chars.as_str().parse().map_err(|_| err())?;
            match family {
                'A' => CoxeterGroup::A(rank),
                'B' => CoxeterGroup::B(rank),
                'D' => CoxeterGroup::D(rank),
                'S' => CoxeterGroup::S(rank),
                'G' if rank == 2 => CoxeterGroup::G2,
                'F' if rank == 4 => CoxeterGroup::F4,
                'E' if rank == 6 => CoxeterGroup::E6,
                'E' if rank == 7 => CoxeterGroup::E7,
                'E' if rank == 8 => CoxeterGroup::E8,
                'H' if rank == 3 => CoxeterGroup::H3,
                'H' if rank == 4 => CoxeterGroup::H4,
                _ => return Err(err()),
            }
        };
        group.validate()?;
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_canonicalizes_and_validates() {
        let t = ExponentTuple::new(vec![4, 2, 6, 4]).unwrap();
        assert_eq!(t.degrees(), &[2, 4, 4, 6]);
        assert!(ExponentTuple::new(vec![]).is_err());
        assert!(ExponentTuple::new(vec![0, 1]).is_err());
    }

    #[test]
    fn period_is_lcm_of_exponents() {
        assert_eq!(ExponentTuple::consecutive(10).period(), 2520);
        assert_eq!(ExponentTuple::new(vec![7]).unwrap().period(), 7);
        let e8 = CoxeterGroup::E8.degrees().unwrap();
        assert_eq!(e8.period(), 2520);
    }

    #[test]
    fn xi_shift_examples() {
        assert_eq!(
            ExponentTuple::new(vec![1, 2, 3, 4]).unwrap().xi_shift(),
            HalfInteger::from_integer(5)
        );
        assert_eq!(
            ExponentTuple::consecutive(5).xi_shift(),
            HalfInteger::new(15)
        );
        assert_eq!(
            ExponentTuple::new(vec![2]).unwrap().xi_shift(),
            HalfInteger::from_integer(1)
        );
    }

    #[test]
    fn degree_lists_match_catalog() {
        assert_eq!(
            CoxeterGroup::A(3).degrees().unwrap().degrees(),
            &[2, 3, 4]
        );
        let h3 = CoxeterGroup::H3.degrees().unwrap();
        assert_eq!(h3.degrees(), &[2, 6, 10]);
        assert_eq!(h3.xi_shift(), HalfInteger::from_integer(9));
        assert_eq!(
            CoxeterGroup::D(4).degrees().unwrap().degrees(),
            &[2, 4, 4, 6]
        );
    }

    #[test]
    fn invalid_groups_rejected() {
        assert!(CoxeterGroup::D(2).degrees().is_err());
        assert!(CoxeterGroup::I2(1).degrees().is_err());
        assert!("Q5".parse::<CoxeterGroup>().is_err());
        assert!("E9".parse::<CoxeterGroup>().is_err());
    }

    #[test]
    fn parse_round_trips() {
        for text in [
            "A3", "B5", "D4", "G2", "F4", "E6", "E7", "E8", "H3", "H4", "I2(7)", "S6",
        ] {
            let g: CoxeterGroup = text.parse().unwrap();
            assert_eq!(g.to_string(), text);
            let lower: CoxeterGroup = text.to_ascii_lowercase().parse().unwrap();
            assert_eq!(lower, g);
        }
    }

    #[test]
    fn catalog_period_equals_degree_lcm_everywhere() {
        for g in CoxeterGroup::standard_catalog() {
            assert_eq!(
                g.catalog_period().unwrap(),
                g.degrees().unwrap().period(),
                "period mismatch for {g}"
            );
        }
    }

    #[test]
    fn printed_xi_formulas_hold() {
        for m in 1..=10u32 {
            // xi(A_m) = m(m+3)/4, doubled = m(m+3)/2
            assert_eq!(
                CoxeterGroup::A(m).xi_shift().unwrap().doubled() as u32 * 2,
                m * (m + 3)
            );
            // xi(B_m) = m(m+1)/2
            assert_eq!(
                CoxeterGroup::B(m).xi_shift().unwrap(),
                HalfInteger::new((m * (m + 1)) as i64)
            );
            // xi(S_m) = m(m+1)/4
            assert_eq!(
                CoxeterGroup::S(m).xi_shift().unwrap(),
                HalfInteger::new((m * (m + 1) / 2) as i64)
            );
            if m >= 3 {
                // xi(D_m) = m^2 / 2
                assert_eq!(
                    CoxeterGroup::D(m).xi_shift().unwrap(),
                    HalfInteger::new((m * m) as i64)
                );
            }
        }
        let fixed = [
            (CoxeterGroup::G2, 4),
            (CoxeterGroup::F4, 14),
            (CoxeterGroup::E6, 21),
            (CoxeterGroup::E7, 35),
            (CoxeterGroup::E8, 64),
            (CoxeterGroup::H3, 9),
            (CoxeterGroup::H4, 32),
        ];
        for (g, xi) in fixed {
            assert_eq!(g.xi_shift().unwrap(), HalfInteger::from_integer(xi), "{g}");
        }
        for m in 2..=12u32 {
            // xi(I_2(m)) = 1 + m/2
            assert_eq!(
                CoxeterGroup::I2(m).xi_shift().unwrap(),
                HalfInteger::new((2 + m) as i64)
            );
        }
    }

    #[test]
    fn period_permutation_invariant_and_xi_additive() {
        let a = ExponentTuple::new(vec![6, 10, 15]).unwrap();
        let b = ExponentTuple::new(vec![15, 6, 10]).unwrap();
        assert_eq!(a.period(), b.period());
        let c = ExponentTuple::new(vec![6, 10, 15, 4, 9]).unwrap();
        let d = ExponentTuple::new(vec![4, 9]).unwrap();
        assert_eq!(
            c.xi_shift(),
            a.xi_shift() + d.xi_shift(),
            "xi additive under concatenation"
        );
    }

    #[test]
    fn half_integer_arithmetic() {
        let x = HalfInteger::new(3); // 3/2
        assert!(!x.is_integer());
        assert_eq!(x.to_string(), "3/2");
        assert_eq!((x + x).as_integer(), Some(3));
        assert_eq!((-x).doubled(), -3);
        assert_eq!(HalfInteger::from_integer(4).half(), Some(HalfInteger::from_integer(2)));
        assert_eq!(HalfInteger::new(3).half(), None);
    }
}
