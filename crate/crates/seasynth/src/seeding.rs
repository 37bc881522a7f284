//! Counter-based deterministic randomness.
//!
//! Every stochastic choice in the pipeline is a pure function of a seed and
//! a stable label (sample index, field id, pixel index), never of call
//! order. That makes samples order-independent, parallelizable, and
//! bit-reproducible across platforms: the only arithmetic involved is
//! integer multiply/xor/shift.
//!
//! The mixer is the splitmix64 finalizer (Steele, Lea & Flood's constants),
//! a 64-bit permutation with good avalanche behavior.

/// splitmix64 finalizer step: bijective 64-bit mixing.
#[inline]
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Absorbs one word into a hash state.
#[inline]
pub fn mix(state: u64, word: u64) -> u64 {
    splitmix64(state ^ word.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Absorbs a signed word (lattice cell coordinates).
#[inline]
pub fn mix_i64(state: u64, word: i64) -> u64 {
    mix(state, word as u64)
}

/// Absorbs a label such as a configuration field id.
pub fn mix_str(state: u64, label: &str) -> u64 {
    let mut h = state;
    for &b in label.as_bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01B3); // FNV-1a prime
    }
    splitmix64(h)
}

/// Maps a hash to a uniform double in `[0, 1)` using the top 53 bits.
#[inline]
pub fn unit_f64(h: u64) -> f64 {
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform draw in `[lo, hi]` from a hash.
#[inline]
pub fn uniform_f64(h: u64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * unit_f64(h)
}

/// Uniform integer draw in `[lo, hi]` (inclusive) from a hash.
#[inline]
pub fn uniform_u32(h: u64, lo: u32, hi: u32) -> u32 {
    debug_assert!(lo <= hi);
    let span = u64::from(hi - lo) + 1;
    lo + (h % span) as u32
}

/// One standard-normal draw via Box-Muller from two independent hashes.
pub fn standard_normal(h1: u64, h2: u64) -> f64 {
    // 1 - unit keeps u1 in (0, 1] so the log is finite.
    let u1 = 1.0 - unit_f64(h1);
    let u2 = unit_f64(h2);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mix_is_order_sensitive() {
        assert_ne!(mix(mix(1, 2), 3), mix(mix(1, 3), 2));
    }

    #[test]
    fn unit_stays_in_half_open_interval() {
        for i in 0..10_000u64 {
            let u = unit_f64(splitmix64(i));
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn labels_decorrelate() {
        let a = mix_str(42, "camera.altitude");
        let b = mix_str(42, "camera.altitudf");
        assert_ne!(a, b);
    }

    #[test]
    fn normal_draws_have_sane_moments() {
        let n = 20_000;
        let mut sum = 0.0;
        let mut sq = 0.0;
        for i in 0..n {
            let z = standard_normal(mix(7, i), mix(13, i));
            sum += z;
            sq += z * z;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.03, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }
}
