//! Bernoulli numbers and Bernoulli polynomials over exact rationals.
//!
//! The polynomials use the convention `B_1(x) = x - 1/2`, so
//! `B_l(1 + x) - B_l(x) = l x^{l-1}` and
//! `B_l(x + y) - B_l(x) = sum_{j=1}^{l} C(l, j) y^j B_{l-j}(x)`.

use std::sync::Mutex;
use std::sync::OnceLock;

use num::bigint::BigInt;
use num::traits::{One, Zero};

use crate::rational::{binomial, Rational};

static BERNOULLI_NUMBERS: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();

/// The Bernoulli number `B_l` (with `B_1 = -1/2`).
pub fn bernoulli_number(l: u32) -> Rational {
    let cache = BERNOULLI_NUMBERS.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut numbers = cache.lock().expect("bernoulli cache poisoned");
    while numbers.len() <= l as usize {
        // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  solve for B_k.
        let k = numbers.len() as u64;
        let mut acc = Rational::zero();
        for (j, b) in numbers.iter().enumerate() {
            acc += Rational::from_integer(binomial(k + 1, j as u64)) * b;
        }
        let next = -acc / Rational::from_integer(BigInt::from(k + 1));
        numbers.push(next);
    }
    numbers[l as usize].clone()
}

/// The Bernoulli polynomial `B_l(x)` evaluated exactly.
pub fn bernoulli_poly(l: u32, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut x_pow = Rational::one();
    // Accumulate from the constant term upward: term k contributes
    // C(l, k) B_{l-k}(0) x^k ... equivalently iterate k = l..0 with powers.
    for k in 0..=l {
        let coeff = Rational::from_integer(binomial(l as u64, k as u64)) * bernoulli_number(l - k);
        acc += coeff * &x_pow;
        x_pow *= x;
    }
    acc
}
