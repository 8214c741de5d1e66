#![allow(clippy::excessive_precision)]

//! Test-side oracles, independent of the crate's own special functions.

#![allow(dead_code)]

use std::f64::consts::PI;

use num_complex::Complex64;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Lanczos approximation of `Γ` with reflection for `Re z < 1/2`.
pub fn lanczos_gamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Complex64::new(PI, 0.0) / (s * lanczos_gamma(Complex64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// Critical points `(x_k, Γ(x_k))` for `k = 0..=5`, from a 30-digit evaluation.
pub const CRITICAL: [(f64, f64); 6] = [
    (1.461_632_144_968_362_3, 0.885_603_194_410_888_7),
    (-0.504_083_008_264_455_4, -3.544_643_611_155_005),
    (-1.573_498_473_162_390_5, 2.302_407_258_339_680_1),
    (-2.610_720_868_444_144_7, -0.888_136_358_401_241_9),
    (-3.635_293_366_436_901, 0.245_127_539_834_366_25),
    (-4.653_237_761_743_142, -0.052_779_639_587_319_4),
];

/// Minimum points of Barnes `G` and `1/Γ₂` with their values, from a 30-digit evaluation.
pub const BETA_G: (f64, f64) = (2.557_663_932_789_019_4, 0.946_845_605_269_706_1);
pub const BETA_2: (f64, f64) = (3.748_064_524_147_672_6, 0.048_998_984_062_747_03);

/// Points `r e^{iθ}` with `log10 r ∈ [−2, 2]`, `θ ∈ [0.01, π − 0.01]`.
pub fn upper_half_plane_points(seed: u64, n: usize) -> Vec<Complex64> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = 10f64.powf(rng.gen_range(-2.0..2.0));
            let th = rng.gen_range(0.01..PI - 0.01);
            Complex64::from_polar(r, th)
        })
        .collect()
}
