//! Deterministic PRNG: splitmix64 for seeding and substreams, xorshift64*
//! for the stream itself, Box–Muller for normals.

use crate::math;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// The splitmix64 output function applied to `z + γ`.
pub fn splitmix64(z: u64) -> u64 {
    let mut z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seeded xorshift64* generator. Single owner; derive one per task with
/// [`rng_substream`] for parallel work.
#[derive(Clone, Debug, PartialEq)]
pub struct SeededRng {
    state: u64,
    spare: Option<f64>,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self::from_state(splitmix64(seed))
    }

    fn from_state(state: u64) -> Self {
        // xorshift has the all-zero fixed point.
        let state = if state == 0 { GOLDEN_GAMMA } else { state };
        SeededRng { state, spare: None }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in the open interval `(0, 1)`, from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `0..n`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// Standard normal draw (Box–Muller, second variate cached).
    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        let r = math::sqrt(-2.0 * math::ln(u1));
        let t = core::f64::consts::TAU * u2;
        self.spare = Some(r * math::sin(t));
        r * math::cos(t)
    }
}

/// Free-function form of [`SeededRng::gaussian`].
pub fn rng_gaussian(rng: &mut SeededRng) -> f64 {
    rng.gaussian()
}

/// Independent stream `index` of the family identified by `seed`. Pure in
/// `(seed, index)`.
pub fn rng_substream(seed: u64, index: u64) -> SeededRng {
    SeededRng::from_state(splitmix64(splitmix64(seed) ^ index.wrapping_mul(GOLDEN_GAMMA)))
}

impl SeededRng {
    pub fn substream(seed: u64, index: u64) -> Self {
        rng_substream(seed, index)
    }
}
