//! Shared helpers for the property suites: a small deterministic RNG and
//! random generators for rationals, polynomials and operators.

#![allow(dead_code)]

use polyred::operator::RecOperator;
use polyred::poly::{rat, Rational, UniPoly};

/// SplitMix64: deterministic, seedable, no dependencies.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi`.
    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational(&mut self, max_abs: i64) -> Rational {
        let num = self.int(-max_abs, max_abs);
        let den = self.int(1, max_abs);
        rat(num, den)
    }

    pub fn nonzero_rational(&mut self, max_abs: i64) -> Rational {
        loop {
            let r = self.rational(max_abs);
            if !num_traits::Zero::is_zero(&r) {
                return r;
            }
        }
    }

    /// Random polynomial of degree exactly `deg` (unless `deg` is negative,
    /// which yields zero).
    pub fn poly_exact_degree(&mut self, deg: i64, max_abs: i64) -> UniPoly {
        if deg < 0 {
            return UniPoly::zero();
        }
        let mut coeffs: Vec<Rational> = (0..deg).map(|_| self.rational(max_abs)).collect();
        coeffs.push(self.nonzero_rational(max_abs));
        UniPoly::new(coeffs)
    }

    /// Random polynomial of degree at most `deg` (may be zero).
    pub fn poly_up_to(&mut self, deg: i64, max_abs: i64) -> UniPoly {
        let d = self.int(-1, deg);
        self.poly_exact_degree(d, max_abs)
    }

    /// Random integer-coefficient polynomial of degree at most `deg`.
    pub fn int_poly_up_to(&mut self, deg: i64, max_abs: i64) -> UniPoly {
        let d = self.int(0, deg);
        let coeffs: Vec<Rational> = (0..=d)
            .map(|_| rat(self.int(-max_abs, max_abs), 1))
            .collect();
        UniPoly::new(coeffs)
    }

    /// Random integer-coefficient polynomial of degree exactly `deg`.
    pub fn int_poly_exact_degree(&mut self, deg: i64, max_abs: i64) -> UniPoly {
        let mut coeffs: Vec<Rational> = (0..deg)
            .map(|_| rat(self.int(-max_abs, max_abs), 1))
            .collect();
        let mut lead = 0;
        while lead == 0 {
            lead = self.int(-max_abs, max_abs);
        }
        coeffs.push(rat(lead, 1));
        UniPoly::new(coeffs)
    }

    /// Random operator of order 1..=max_order with coefficient degree at
    /// most `deg`; `a_J` nonzero by construction.
    pub fn operator(&mut self, max_order: usize, deg: i64, max_abs: i64) -> RecOperator {
        loop {
            let order = self.int(1, max_order as i64) as usize;
            let mut coeffs: Vec<UniPoly> =
                (0..order).map(|_| self.poly_up_to(deg, max_abs)).collect();
            let lead_deg = self.int(0, deg);
            coeffs.push(self.poly_exact_degree(lead_deg, max_abs));
            if let Ok(op) = RecOperator::new("n", coeffs) {
                if op.order() >= 1 {
                    return op;
                }
            }
        }
    }

    /// Product of `count` integer-rooted linear factors, for dispersion
    /// brute-force tests.
    pub fn linear_factor_product(&mut self, count: usize, root_range: i64) -> UniPoly {
        let mut p = UniPoly::constant(self.nonzero_rational(4));
        for _ in 0..count {
            let root = self.int(-root_range, root_range);
            p = p.mul(&UniPoly::new(vec![rat(-root, 1), rat(1, 1)]));
        }
        p
    }
}
