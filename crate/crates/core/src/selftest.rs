//! Seeded randomized property suites behind `hyperbridge selftest`, plus the
//! random-instance generators they (and the integration tests) share.
//!
//! Four suites: SL(2)⁴ / permutation invariance of S, T, Δ, J; the
//! discriminant ⟺ repeated-root equivalence; the bridge round-trip identity
//! against the expanded factored curve; and the group-law axioms on
//! y² = x³ − 25x. Every trial is exact; a single mismatch fails the suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bridge::{cubic_to_uv, params_to_uv, uv_to_cubic, BridgeParams};
use crate::elliptic::{CurvePoint, WeierstrassCurve};
use crate::hypermatrix::{Hypermatrix222, Hypermatrix2222, Matrix2, Vector2};
use crate::invariants::{
    cayley_det, has_repeated_root, quartic_from_hypermatrix, quartic_invariants, BinaryQuartic,
};
use crate::rational::{rat_int, Rational};

/// Uniform random 2×2×2 hypermatrix with integer entries in [lo, hi].
pub fn random_h222(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Hypermatrix222 {
    Hypermatrix222::new(std::array::from_fn(|_| rat_int(rng.gen_range(lo..=hi))))
}

/// Uniform random 2×2×2×2 hypermatrix with integer entries in [lo, hi].
pub fn random_h2222(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Hypermatrix2222 {
    Hypermatrix2222::new(std::array::from_fn(|_| rat_int(rng.gen_range(lo..=hi))))
}

/// Random unimodular integer matrix: a short product of elementary shears
/// [[1,n],[0,1]] and [[1,0],[m,1]], so det = 1 exactly.
pub fn random_sl2(rng: &mut ChaCha8Rng) -> Matrix2 {
    let mut g = Matrix2::identity();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(-3i64..=3);
        let upper = rng.gen_bool(0.5);
        let shear = if upper {
            Matrix2::from_ints(1, n, 0, 1)
        } else {
            Matrix2::from_ints(1, 0, n, 1)
        };
        g = g.mul(&shear);
    }
    g
}

/// Random nonzero integer vector with entries in [−bound, bound].
pub fn random_nonzero_vector(rng: &mut ChaCha8Rng, bound: i64) -> Vector2 {
    loop {
        let v = Vector2::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random integer quartic with coefficients in [lo, hi].
pub fn random_quartic(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> BinaryQuartic {
    BinaryQuartic::from_ints(
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
        rng.gen_range(lo..=hi),
    )
}

/// Random nondegenerate bridge parameters with entries in [−range, range].
pub fn random_bridge_params(rng: &mut ChaCha8Rng, range: i64) -> BridgeParams {
    loop {
        let pick = |rng: &mut ChaCha8Rng| rng.gen_range(-range..=range);
        if let Ok(bp) = BridgeParams::from_ints(
            pick(rng),
            pick(rng),
            pick(rng),
            pick(rng),
            pick(rng),
            pick(rng),
        ) {
            return bp;
        }
    }
}

/// A random axis permutation of {0..n}.
fn random_perm<const N: usize>(rng: &mut ChaCha8Rng) -> [usize; N] {
    let mut perm: [usize; N] = std::array::from_fn(|i| i);
    for i in (1..N).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub iterations: u32,
    pub seed: u64,
    /// Negative-control hook: deliberately corrupt one value per suite so the
    /// failure path is exercised end to end.
    pub corrupt: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            iterations: 25,
            seed: 0,
            corrupt: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u32,
    pub failed: u32,
}

#[derive(Clone, Debug)]
pub struct SelftestSummary {
    pub seed: u64,
    pub iterations: u32,
    pub suites: Vec<SuiteResult>,
    pub ok: bool,
}

pub fn run(cfg: &SelftestConfig) -> SelftestSummary {
    let suites = vec![
        sl2_invariance_suite(cfg),
        discriminant_repeated_root_suite(cfg),
        bridge_roundtrip_suite(cfg),
        group_law_suite(cfg),
    ];
    let ok = suites.iter().all(|s| s.failed == 0);
    SelftestSummary {
        seed: cfg.seed,
        iterations: cfg.iterations,
        suites,
        ok,
    }
}

fn sl2_invariance_suite(cfg: &SelftestConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(1));
    let mut passed = 0;
    let mut failed = 0;
    for trial in 0..cfg.iterations {
        let a4 = random_h2222(&mut rng, -5, 5);
        let mut transformed = a4.clone();
        for slot in 0..4 {
            transformed = transformed
                .apply_sl2(slot, &random_sl2(&mut rng))
                .expect("generated matrices are unimodular");
        }
        transformed = transformed.permute_axes(random_perm::<4>(&mut rng));

        let before = quartic_ctx(&a4);
        let mut after = quartic_ctx(&transformed);
        if cfg.corrupt && trial == 0 {
            after.0 += rat_int(1);
        }

        let mut ok = before == after;

        // Cayley invariance under SL(2)³ on the 2×2×2 shape
        let h = random_h222(&mut rng, -5, 5);
        let mut th = h.clone();
        for slot in 0..3 {
            th = th.apply_sl2(slot, &random_sl2(&mut rng)).unwrap();
        }
        th = th.permute_axes(random_perm::<3>(&mut rng));
        ok &= cayley_det(&h) == cayley_det(&th);

        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    SuiteResult {
        name: "sl2_invariance",
        passed,
        failed,
    }
}

/// (S, T, Δ) of the contracted quartic; J = S³/Δ is determined by these, so
/// equality of the triple certifies J too.
fn quartic_ctx(a4: &Hypermatrix2222) -> (Rational, Rational, Rational) {
    let inv = quartic_invariants(&quartic_from_hypermatrix(a4));
    (inv.s, inv.t, inv.delta)
}

fn discriminant_repeated_root_suite(cfg: &SelftestConfig) -> SuiteResult {
    use num_traits::Zero;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(2));
    let mut passed = 0;
    let mut failed = 0;
    for trial in 0..cfg.iterations {
        let q = loop {
            let q = random_quartic(&mut rng, -9, 9);
            if !q.is_zero() {
                break q;
            }
        };
        let delta = crate::invariants::quartic_invariants(&q).delta;
        let mut repeated = has_repeated_root(&q).expect("nonzero quartic");
        if cfg.corrupt && trial == 0 {
            repeated = !repeated;
        }
        if delta.is_zero() == repeated {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    SuiteResult {
        name: "discriminant_repeated_root",
        passed,
        failed,
    }
}

fn bridge_roundtrip_suite(cfg: &SelftestConfig) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(3));
    let mut passed = 0;
    let mut failed = 0;
    for trial in 0..cfg.iterations {
        let bp = random_bridge_params(&mut rng, 5);
        let uv = params_to_uv(&bp);
        let mut cubic = uv_to_cubic(&uv).expect("f = 2kmp is nonzero");
        if cfg.corrupt && trial == 0 {
            cubic.b += rat_int(1);
        }
        let expanded = bp.factored_curve().expand();
        let mut ok = cubic == expanded;
        ok &= uv.h == &expanded.b - &uv.e * &uv.e;
        // recover the uv-model from the cubic and return to the same cubic
        match cubic_to_uv(&expanded) {
            Ok(recovered) => {
                ok &= uv_to_cubic(&recovered).expect("f unchanged") == expanded;
            }
            Err(_) => ok = false,
        }
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    SuiteResult {
        name: "bridge_roundtrip",
        passed,
        failed,
    }
}

fn group_law_suite(cfg: &SelftestConfig) -> SuiteResult {
    let curve = WeierstrassCurve::new(rat_int(-25), rat_int(0)).expect("nonsingular");
    let gen = curve.point(rat_int(-4), rat_int(6)).expect("on curve");
    let torsion = [
        CurvePoint::Infinity,
        curve.point(rat_int(0), rat_int(0)).unwrap(),
        curve.point(rat_int(5), rat_int(0)).unwrap(),
        curve.point(rat_int(-5), rat_int(0)).unwrap(),
    ];
    // sample set {i·P + T}
    let mut sample = Vec::new();
    for i in 0..=2u32 {
        let ip = curve.multiply(i, &gen);
        for t in &torsion {
            sample.push(curve.add(&ip, t));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(4));
    let mut passed = 0;
    let mut failed = 0;
    for trial in 0..cfg.iterations {
        let pick = |rng: &mut ChaCha8Rng| sample[rng.gen_range(0..sample.len())].clone();
        let (p, q, r) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let mut left = curve.add(&curve.add(&p, &q), &r);
        if cfg.corrupt && trial == 0 {
            // adding the infinite-order generator always moves the point
            left = curve.add(&left, &gen);
        }
        let right = curve.add(&p, &curve.add(&q, &r));
        let mut ok = left == right;
        ok &= curve.add(&p, &q) == curve.add(&q, &p);
        ok &= curve.add(&p, &CurvePoint::Infinity) == p;
        ok &= curve.add(&p, &p.negate()).is_infinity();
        ok &= curve.contains(&curve.add(&p, &q));
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    SuiteResult {
        name: "group_law",
        passed,
        failed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let summary = run(&SelftestConfig::default());
        assert!(summary.ok);
        for suite in &summary.suites {
            assert_eq!(suite.failed, 0, "suite {} failed", suite.name);
            assert!(suite.passed > 0);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let cfg = SelftestConfig {
            iterations: 10,
            seed: 99,
            corrupt: false,
        };
        let a = run(&cfg);
        let b = run(&cfg);
        for (x, y) in a.suites.iter().zip(&b.suites) {
            assert_eq!((x.name, x.passed, x.failed), (y.name, y.passed, y.failed));
        }
    }

    #[test]
    fn corruption_hook_fails_every_suite() {
        let cfg = SelftestConfig {
            iterations: 5,
            seed: 0,
            corrupt: true,
        };
        let summary = run(&cfg);
        assert!(!summary.ok);
        for suite in &summary.suites {
            assert!(suite.failed > 0, "suite {} missed the corruption", suite.name);
        }
    }
}
