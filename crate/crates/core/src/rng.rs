//! Counter-based SplitMix64 streams.
//!
//! Output `k` (1-based) of the stream keyed by `seed` is
//! `mix64(seed + k * 0x9e3779b97f4a7c15)` (wrapping), where `mix64` is the
//! SplitMix64 finalizer with multipliers `0xbf58476d1ce4e5b9` and
//! `0x94d049bb133111eb` and shifts 30, 27, 31. This is exactly the
//! sequential SplitMix64 sequence, but any position can be computed directly,
//! so streams are reproducible in any language.
//!
//! Doubles take the top 53 bits: `(x >> 11) * 2^-53`. Gaussian pairs use
//! Box-Muller on two consecutive doubles `(u1, u2)` with `u1` mapped to
//! `(0, 1]`: `r = sqrt(-2 ln u1)`, pair `(r cos 2πu2, r sin 2πu2)`.

pub const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    key: u64,
    counter: u64,
}

pub fn rng_stream(seed: u64) -> RngStream {
    RngStream::new(seed)
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        RngStream {
            key: seed,
            counter: 0,
        }
    }

    /// Number of 64-bit outputs drawn so far.
    pub fn position(&self) -> u64 {
        self.counter
    }

    /// An independent child stream; the parent is left untouched.
    pub fn split(&self, stream_id: u64) -> RngStream {
        RngStream::new(mix64(
            self.key ^ mix64(stream_id.wrapping_add(GOLDEN_GAMMA)),
        ))
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(
            self.key
                .wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)),
        )
    }

    /// Uniform in `[0, 1)`.
    #[inline]
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `(0, 1]`.
    #[inline]
    pub fn next_f64_open_low(&mut self) -> f64 {
        1.0 - self.next_f64()
    }

    /// Two independent standard normals.
    pub fn next_gaussian_pair(&mut self) -> (f64, f64) {
        let u1 = self.next_f64_open_low();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (std::f64::consts::TAU * u2).sin_cos();
        (r * c, r * s)
    }

    /// Uniform integer in `[lo, hi]` by 128-bit multiply-shift.
    pub fn next_int_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty integer range");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        let x = self.next_u64() as u128;
        (lo as i128 + ((x * span) >> 64) as i128) as i64
    }
}
