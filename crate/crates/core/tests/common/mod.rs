#![allow(dead_code)]

use std::f64::consts::PI;

use fano_core::{Resonance, ScatteringModel};

/// 64-bit linear congruential generator (Knuth MMIX constants):
/// `state <- state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`;
/// a uniform draw in [0, 1) takes the top 53 bits of the new state.
pub struct Lcg(u64);

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        self.0
    }

    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn int(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        lo + (self.next_u64() >> 33) as usize % (hi_inclusive - lo + 1)
    }
}

pub fn random_model(rng: &mut Lcg, n: usize, delta: f64) -> ScatteringModel {
    let rs = (0..n)
        .map(|_| Resonance::new(rng.range(-10.0, 10.0), rng.range(0.05, 5.0)).unwrap())
        .collect();
    ScatteringModel::new(rs, delta).unwrap()
}

/// Two resonances, zero background, pole separation above 1e-6 x max width and
/// widths differing by at least 1% (so the static parameters exist and stay O(1e2)).
pub fn admissible_pair(rng: &mut Lcg) -> ScatteringModel {
    loop {
        let m = random_model(rng, 2, 0.0);
        let (a, b) = (m.resonances()[0], m.resonances()[1]);
        let scale = a.width().max(b.width());
        let sep = (a.complex_energy() - b.complex_energy()).norm();
        if sep > 1e-6 * scale && (a.width() - b.width()).abs() >= 1e-2 * scale {
            return m;
        }
    }
}

/// Narrow state inside a broad one (`Gamma_2 >> Gamma_1`, `|E_1 - E_2| < Gamma_2 / 2`).
pub fn overlapping_pair(rng: &mut Lcg) -> ScatteringModel {
    let g2 = rng.range(0.5, 5.0);
    let g1 = g2 * rng.range(0.01, 0.2);
    let e2 = rng.range(-5.0, 5.0);
    let e1 = e2 + rng.range(-0.45, 0.45) * g2;
    ScatteringModel::pair((e1, g1), (e2, g2), 0.0).unwrap()
}

pub fn random_delta(rng: &mut Lcg) -> f64 {
    rng.range(0.0, PI)
}
