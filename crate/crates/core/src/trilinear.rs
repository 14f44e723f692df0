//! Reduction of the pair of trilinear equations a[i,j,k,l]·z_j·y_k·x_l = 0
//! (i = 0, 1) on an integer 2×2×2×2 hypermatrix to a quartic elliptic
//! condition, plus a bounded exact search for projective rational solutions.
//!
//! Eliminating z first: M(y,x)·z = 0 is solvable iff det M = 0; det M is a
//! homogeneous quadratic in y whose discriminant equals Cayley's
//! hyperdeterminant of b = contract_last(a, x). A rational y therefore exists
//! iff the quartic Q(x₀,x₁) is a perfect square, which is the elliptic
//! condition. The search enumerates projective x of bounded height, applies
//! the exact square test, and reconstructs y and z by exact elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elliptic::{CubicCurve, CurvePoint};
use crate::hypermatrix::{Hypermatrix2222, Matrix2, Vector2};
use crate::invariants::{
    cayley_det, quartic_from_hypermatrix, quartic_invariants, BinaryQuartic, QuarticInvariants,
};
use crate::rational::{rat_int, rational_sqrt, Rational};
use crate::Error;

/// Exact square test on a rational; `Some(root)` with root ≥ 0 iff numerator
/// and denominator are both perfect integer squares.
pub fn is_rational_square(r: &Rational) -> Option<Rational> {
    rational_sqrt(r)
}

/// A pair of trilinear equations given by an integer 2×2×2×2 hypermatrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearSystem {
    a4: Hypermatrix2222,
}

impl TrilinearSystem {
    /// Rejects hypermatrices with non-integer entries.
    pub fn new(a4: Hypermatrix2222) -> Result<Self, Error> {
        if a4.entries().iter().any(|e| !e.is_integer()) {
            return Err(Error::NonIntegerEntries);
        }
        Ok(TrilinearSystem { a4 })
    }

    pub fn from_ints(entries: [i64; 16]) -> Self {
        TrilinearSystem {
            a4: Hypermatrix2222::from_ints(entries),
        }
    }

    pub fn hypermatrix(&self) -> &Hypermatrix2222 {
        &self.a4
    }
}

/// A projective solution (x, y, z), each vector held with coprime integer
/// entries and first nonzero entry positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearSolution {
    pub x: Vector2,
    pub y: Vector2,
    pub z: Vector2,
}

impl TrilinearSolution {
    /// Canonicalize the three projective representatives. Panics on a zero
    /// vector; solutions are nonzero by definition.
    pub fn new(x: &Vector2, y: &Vector2, z: &Vector2) -> Self {
        TrilinearSolution {
            x: canonical_projective(x),
            y: canonical_projective(y),
            z: canonical_projective(z),
        }
    }
}

/// Scale a nonzero rational 2-vector to coprime integers with the first
/// nonzero entry positive: the canonical projective representative.
pub fn canonical_projective(v: &Vector2) -> Vector2 {
    assert!(!v.is_zero(), "projective vectors must be nonzero");
    let lcm = v.c0.denom().lcm(v.c1.denom());
    let mut n0 = v.c0.numer() * (&lcm / v.c0.denom());
    let mut n1 = v.c1.numer() * (&lcm / v.c1.denom());
    let g = n0.gcd(&n1);
    n0 /= &g;
    n1 /= &g;
    let flip = if !n0.is_zero() {
        n0.is_negative()
    } else {
        n1.is_negative()
    };
    if flip {
        n0 = -n0;
        n1 = -n1;
    }
    Vector2::new(Rational::from_integer(n0), Rational::from_integer(n1))
}

/// A solution found by the search, with a flag for the degenerate regimes
/// (det M ≡ 0 in y, or M = 0) where the representative vectors are chosen by
/// convention rather than determined by the elliptic correspondence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundSolution {
    pub solution: TrilinearSolution,
    pub degenerate: bool,
}

/// Outcome of [`solve_given_x`] for one y-root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolvedPair {
    pub y: Vector2,
    pub z: Vector2,
    pub degenerate: bool,
}

/// Search summary: every listed solution re-verifies exactly.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub bound: u32,
    pub candidates_tested: u64,
    pub solutions: Vec<FoundSolution>,
    pub quartic: BinaryQuartic,
    pub invariants: QuarticInvariants,
    /// Q is the zero polynomial: every x passes the square test and the
    /// elliptic correspondence degenerates globally.
    pub quartic_is_zero: bool,
}

/// The quartic Q(x₀,x₁) of the system, computed along both routes and
/// asserted equal: the y-discriminant of det M(y,x) expanded symbolically,
/// and the interpolation of cayley_det(contract_last(a, x)).
pub fn reduce_to_quartic(sys: &TrilinearSystem) -> BinaryQuartic {
    let a4 = &sys.a4;
    // M_ij = P_ij(x)·y₀ + Q_ij(x)·y₁ with linear forms in (x₀,x₁)
    let lin = |i: usize, j: usize, k: usize| -> Vec<Rational> {
        vec![a4.get(i, j, k, 0).clone(), a4.get(i, j, k, 1).clone()]
    };
    let p00 = lin(0, 0, 0);
    let q00 = lin(0, 0, 1);
    let p01 = lin(0, 1, 0);
    let q01 = lin(0, 1, 1);
    let p10 = lin(1, 0, 0);
    let q10 = lin(1, 0, 1);
    let p11 = lin(1, 1, 0);
    let q11 = lin(1, 1, 1);

    // det M = α(x)·y₀² + β(x)·y₀y₁ + γ(x)·y₁²
    let alpha = form_sub(&form_mul(&p00, &p11), &form_mul(&p01, &p10));
    let beta = form_sub(
        &form_add(&form_mul(&p00, &q11), &form_mul(&q00, &p11)),
        &form_add(&form_mul(&p01, &q10), &form_mul(&q01, &p10)),
    );
    let gamma = form_sub(&form_mul(&q00, &q11), &form_mul(&q01, &q10));

    let disc = form_sub(
        &form_mul(&beta, &beta),
        &form_scale(&form_mul(&alpha, &gamma), &rat_int(4)),
    );
    assert_eq!(disc.len(), 5);
    let from_disc = BinaryQuartic::new(
        disc[0].clone(),
        disc[1].clone(),
        disc[2].clone(),
        disc[3].clone(),
        disc[4].clone(),
    );

    let from_contraction = quartic_from_hypermatrix(a4);
    assert_eq!(
        from_disc, from_contraction,
        "discriminant route and contraction route disagree"
    );
    from_disc
}

// homogeneous binary forms as coefficient vectors, degree = len − 1,
// coefficient i multiplying x₀^(deg−i)·x₁^i
fn form_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

fn form_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn form_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn form_scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * s).collect()
}

/// Solve the system for a fixed nonzero x: roots y of the quadratic
/// det M(y,x) = 0 (when the discriminant is a rational square), and for each
/// y a kernel vector z of M(y,x).
///
/// The discriminant is asserted against cayley_det(contract_last(a, x)) —
/// the central identity of the reduction. Degenerate regimes (det M ≡ 0, or
/// M = 0) return conventional representatives flagged `degenerate`.
pub fn solve_given_x(sys: &TrilinearSystem, x: &Vector2) -> Vec<SolvedPair> {
    assert!(!x.is_zero(), "x must be nonzero");
    let b = sys.a4.contract_last(x);
    // det M(y,x) = α·y₀² + β·y₀y₁ + γ·y₁² in the corner letters of b
    let (ba, bb, bc, bd) = (b.get(0, 0, 0), b.get(0, 0, 1), b.get(0, 1, 0), b.get(0, 1, 1));
    let (be, bf, bg, bh) = (b.get(1, 0, 0), b.get(1, 0, 1), b.get(1, 1, 0), b.get(1, 1, 1));
    let alpha = ba * bg - bc * be;
    let beta = ba * bh + bb * bg - bc * bf - bd * be;
    let gamma = bb * bh - bd * bf;

    let disc = &beta * &beta - rat_int(4) * &alpha * &gamma;
    assert_eq!(
        disc,
        cayley_det(&b),
        "y-discriminant of det M must equal Cayley's hyperdeterminant"
    );

    let (roots, pencil_degenerate) = match projective_quadratic_roots(&alpha, &beta, &gamma) {
        None => (
            vec![Vector2::from_ints(1, 0), Vector2::from_ints(0, 1)],
            true,
        ),
        Some(roots) => (roots, false),
    };

    let mut out = Vec::new();
    for y in roots {
        let m = sys.a4.contract_to_matrix(&y, x);
        let (z, zero_matrix) = kernel_vector(&m);
        out.push(SolvedPair {
            y: canonical_projective(&y),
            z: canonical_projective(&z),
            degenerate: pencil_degenerate || zero_matrix,
        });
    }
    out
}

/// Projective roots of α·y₀² + β·y₀y₁ + γ·y₁². `None` when the form vanishes
/// identically; `Some(vec![])` when there is no rational root.
fn projective_quadratic_roots(
    alpha: &Rational,
    beta: &Rational,
    gamma: &Rational,
) -> Option<Vec<Vector2>> {
    if alpha.is_zero() && beta.is_zero() && gamma.is_zero() {
        return None;
    }
    if alpha.is_zero() {
        // y₁·(β·y₀ + γ·y₁)
        if beta.is_zero() {
            return Some(vec![Vector2::from_ints(1, 0)]); // γ·y₁², double root
        }
        return Some(vec![
            Vector2::from_ints(1, 0),
            Vector2::new(-gamma.clone(), beta.clone()),
        ]);
    }
    let disc = beta * beta - rat_int(4) * alpha * gamma;
    let Some(s) = rational_sqrt(&disc) else {
        return Some(vec![]);
    };
    let two_alpha = rat_int(2) * alpha;
    if s.is_zero() {
        return Some(vec![Vector2::new(-beta.clone(), two_alpha)]);
    }
    Some(vec![
        Vector2::new(-beta + &s, two_alpha.clone()),
        Vector2::new(-beta - &s, two_alpha),
    ])
}

/// A nonzero kernel vector of a singular 2×2 matrix, plus a flag for M = 0
/// (where any z works and (1,0) is returned by convention).
fn kernel_vector(m: &Matrix2) -> (Vector2, bool) {
    debug_assert!(m.det().is_zero());
    if m.is_zero() {
        return (Vector2::from_ints(1, 0), true);
    }
    // rows are proportional (det = 0); any nonzero row (r0, r1) gives z = (r1, −r0)
    let (r0, r1) = if !m.m00.is_zero() || !m.m01.is_zero() {
        (&m.m00, &m.m01)
    } else {
        (&m.m10, &m.m11)
    };
    (Vector2::new(r1.clone(), -r0.clone()), false)
}

/// Both trilinear equations evaluated exactly:
/// Σ a[i,j,k,l]·z_j·y_k·x_l = 0 for i = 0 and i = 1.
pub fn verify_solution(sys: &TrilinearSystem, sol: &TrilinearSolution) -> bool {
    (0..2).all(|i| {
        let mut acc = Rational::zero();
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    acc += sys.a4.get(i, j, k, l)
                        * sol.z.component(j)
                        * sol.y.component(k)
                        * sol.x.component(l);
                }
            }
        }
        acc.is_zero()
    })
}

/// Canonical projective x candidates of height ≤ bound: coprime integer
/// pairs (x₀, x₁) with |x₀| ≤ bound, 0 ≤ x₁ ≤ bound, and x = (1, 0) as the
/// sole representative on the line x₁ = 0.
fn canonical_candidates(bound: u32) -> Vec<(i64, i64)> {
    let b = bound as i64;
    let mut out = vec![(1, 0)];
    for x1 in 1..=b {
        for x0 in -b..=b {
            if x0.unsigned_abs().gcd(&x1.unsigned_abs()) == 1 {
                out.push((x0, x1));
            }
        }
    }
    out
}

/// Bounded exact search: enumerate canonical x, keep those where Q(x₀,x₁) is
/// a perfect square, solve for (y, z), verify, and deduplicate up to
/// projective equivalence. Deterministic output order.
pub fn search_solutions(sys: &TrilinearSystem, bound: u32) -> SearchReport {
    assert!(bound >= 1, "bound must be at least 1");
    let quartic = reduce_to_quartic(sys);
    let invariants = quartic_invariants(&quartic);
    let quartic_is_zero = quartic.is_zero();

    let mut solutions: Vec<FoundSolution> = Vec::new();
    let mut tested = 0u64;
    for (x0, x1) in canonical_candidates(bound) {
        tested += 1;
        let value = quartic.evaluate(&rat_int(x0), &rat_int(x1));
        if is_rational_square(&value).is_none() {
            continue;
        }
        let x = Vector2::from_ints(x0, x1);
        for pair in solve_given_x(sys, &x) {
            let solution = TrilinearSolution::new(&x, &pair.y, &pair.z);
            if !verify_solution(sys, &solution) {
                continue;
            }
            if !solutions.iter().any(|f| f.solution == solution) {
                solutions.push(FoundSolution {
                    solution,
                    degenerate: pair.degenerate,
                });
            }
        }
    }

    SearchReport {
        bound,
        candidates_tested: tested,
        solutions,
        quartic,
        invariants,
        quartic_is_zero,
    }
}

/// Random integer system with (x, y, z) planted as an exact solution.
///
/// The inputs are canonicalized projectively (this does not change the
/// constraint). For each equation i the entry at the pivot index — the first
/// (j,k,l) in lexicographic order with z_j·y_k·x_l ≠ 0 — is solved exactly
/// from the other 14 entries, which are drawn uniformly from [−9, 9]; the
/// draw is repeated until the pivot value is an integer. Deterministic for a
/// fixed seed.
pub fn plant_solution(x: &Vector2, y: &Vector2, z: &Vector2, seed: u64) -> TrilinearSystem {
    let x = canonical_projective(x);
    let y = canonical_projective(y);
    let z = canonical_projective(z);
    let coeff = |j: usize, k: usize, l: usize| -> BigInt {
        (z.component(j) * y.component(k) * x.component(l)).to_integer()
    };
    let pivot = {
        let j = (0..2).find(|&j| !z.component(j).is_zero()).unwrap();
        let k = (0..2).find(|&k| !y.component(k).is_zero()).unwrap();
        let l = (0..2).find(|&l| !x.component(l).is_zero()).unwrap();
        (j, k, l)
    };
    let pivot_coeff = coeff(pivot.0, pivot.1, pivot.2);
    debug_assert!(!pivot_coeff.is_zero());

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries = Hypermatrix2222::zero();
    for i in 0..2 {
        loop {
            let mut acc = BigInt::from(0);
            let mut drawn: Vec<((usize, usize, usize), i64)> = Vec::with_capacity(7);
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if (j, k, l) == pivot {
                            continue;
                        }
                        let value = rng.gen_range(-9i64..=9);
                        drawn.push(((j, k, l), value));
                        acc += coeff(j, k, l) * BigInt::from(value);
                    }
                }
            }
            if !acc.is_multiple_of(&pivot_coeff) {
                continue;
            }
            let pivot_value = -acc / &pivot_coeff;
            for ((j, k, l), value) in drawn {
                *entries.get_mut(i, j, k, l) = rat_int(value);
            }
            *entries.get_mut(i, pivot.0, pivot.1, pivot.2) = Rational::from_integer(pivot_value);
            break;
        }
    }
    TrilinearSystem::new(entries).expect("planted entries are integers")
}

/// Birational point correspondence attached to a [`quartic_to_cubic`]
/// reduction. `forward` sends affine points v² = Q(x,1) to points of the
/// cubic; `backward` inverts it, returning `None` when the image is not an
/// affine point of the quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuarticCubicMap {
    /// A = 0, B ≠ 0 with the base point at infinity: the quartic already is
    /// the cubic y² = Bx³ + Cx² + Dx + E.
    AlreadyCubic,
    /// Base point (x₀, 0): translate and invert, y² = d̃X³ + c̃X² + b̃X + ã.
    RootAtZero { x0: Rational },
    /// Square leading coefficient q² after the optional translate-and-invert
    /// step (x₀ = None means the base point is at infinity and q² = A).
    /// g(X) = qX² + pX + r completes the square, Q − g² = λX + μ, and the
    /// cubic is W² = 8qT³ + (4p² − 16qr)T² + (4pλ − 8qμ)T + λ² with
    /// T = V + g(X), W = 4qTX + 2pT + λ.
    SquareLeading {
        x0: Option<Rational>,
        q: Rational,
        p: Rational,
        r: Rational,
        lambda: Rational,
        mu: Rational,
    },
}

impl QuarticCubicMap {
    /// Map an affine quartic point (x, v), v² = Q(x, 1), to the cubic.
    pub fn forward(&self, x: &Rational, v: &Rational) -> CurvePoint {
        match self {
            QuarticCubicMap::AlreadyCubic => CurvePoint::affine(x.clone(), v.clone()),
            QuarticCubicMap::RootAtZero { x0 } => {
                let xt = x - x0;
                if xt.is_zero() {
                    return CurvePoint::Infinity;
                }
                CurvePoint::affine(rat_int(1) / &xt, v / (&xt * &xt))
            }
            QuarticCubicMap::SquareLeading {
                x0,
                q,
                p,
                r,
                lambda,
                ..
            } => {
                let (cap_x, cap_v) = match x0 {
                    None => (x.clone(), v.clone()),
                    Some(x0) => {
                        let xt = x - x0;
                        if xt.is_zero() {
                            // the two base points live over X = ∞
                            return if v == q {
                                CurvePoint::Infinity
                            } else {
                                CurvePoint::affine(Rational::zero(), -lambda.clone())
                            };
                        }
                        (rat_int(1) / &xt, v / (&xt * &xt))
                    }
                };
                let g = q * &cap_x * &cap_x + p * &cap_x + r;
                let t = &cap_v + &g;
                let w = rat_int(4) * q * &t * &cap_x + rat_int(2) * p * &t + lambda;
                CurvePoint::affine(t, w)
            }
        }
    }

    /// Map a cubic point back to affine quartic coordinates.
    pub fn backward(&self, point: &CurvePoint) -> Option<(Rational, Rational)> {
        match self {
            QuarticCubicMap::AlreadyCubic => point
                .coordinates()
                .ok()
                .map(|(x, y)| (x.clone(), y.clone())),
            QuarticCubicMap::RootAtZero { x0 } => match point {
                CurvePoint::Infinity => Some((x0.clone(), Rational::zero())),
                CurvePoint::Affine { x: cap_x, y: cap_y } => {
                    if cap_x.is_zero() {
                        return None; // quartic point at infinity
                    }
                    Some((x0 + rat_int(1) / cap_x, cap_y / (cap_x * cap_x)))
                }
            },
            QuarticCubicMap::SquareLeading {
                x0,
                q,
                p,
                r,
                lambda,
                mu,
            } => {
                let g_at = |cap_x: &Rational| q * cap_x * cap_x + p * cap_x + r;
                let (cap_x, cap_v) = match point {
                    CurvePoint::Infinity => {
                        // positive branch over X = ∞: the base point itself
                        return x0.as_ref().map(|x0| (x0.clone(), q.clone()));
                    }
                    CurvePoint::Affine { x: t, y: w } => {
                        if t.is_zero() {
                            if *w == -lambda.clone() {
                                // negative branch over X = ∞
                                return x0.as_ref().map(|x0| (x0.clone(), -q.clone()));
                            }
                            // here W = λ ≠ −λ, and T = 0 forces λX + μ = 0
                            let cap_x = -(mu / lambda);
                            let cap_v = -g_at(&cap_x);
                            (cap_x, cap_v)
                        } else {
                            let cap_x =
                                (w - rat_int(2) * p * t - lambda) / (rat_int(4) * q * t);
                            let cap_v = t - g_at(&cap_x);
                            (cap_x, cap_v)
                        }
                    }
                };
                match x0 {
                    None => Some((cap_x, cap_v)),
                    Some(x0) => {
                        if cap_x.is_zero() {
                            return None; // quartic point at infinity
                        }
                        Some((x0 + rat_int(1) / &cap_x, cap_v / (&cap_x * &cap_x)))
                    }
                }
            }
        }
    }
}

/// Reduce y² = Q(x, 1) to a birationally equivalent cubic, given a rational
/// base point: either affine (x₀, w) with w² = Q(x₀, 1), or the point at
/// infinity when the leading coefficient is a perfect square.
///
/// The translated point sits at x = 0 with square constant term; w ≠ 0 is
/// handled by inversion plus square completion, w = 0 by dividing out the
/// simple root. Requires Δ ≠ 0 (`SingularQuartic`).
pub fn quartic_to_cubic(
    quartic: &BinaryQuartic,
    base: &CurvePoint,
) -> Result<(CubicCurve, QuarticCubicMap), Error> {
    match base {
        CurvePoint::Infinity => {
            if quartic.a.is_zero() {
                if quartic.b.is_zero() {
                    // y² | Q: the point at infinity is singular
                    return Err(Error::SingularQuartic);
                }
                require_nonsingular(quartic)?;
                let cubic = CubicCurve::new(
                    quartic.b.clone(),
                    quartic.c.clone(),
                    quartic.d.clone(),
                    quartic.e.clone(),
                )?;
                return Ok((cubic, QuarticCubicMap::AlreadyCubic));
            }
            let q = rational_sqrt(&quartic.a).ok_or(Error::PointNotOnQuartic)?;
            require_nonsingular(quartic)?;
            let (cubic, map) = square_leading_reduction(
                None,
                q,
                &quartic.b,
                &quartic.c,
                &quartic.d,
                &quartic.e,
            );
            Ok((cubic, map))
        }
        CurvePoint::Affine { x: x0, y: w } => {
            if &(w * w) != &quartic.evaluate(x0, &rat_int(1)) {
                return Err(Error::PointNotOnQuartic);
            }
            require_nonsingular(quartic)?;
            // Taylor shift: coefficients of Q(x + x₀, 1)
            let (a, b, c, d) = (&quartic.a, &quartic.b, &quartic.c, &quartic.d);
            let bt = b + rat_int(4) * a * x0;
            let ct = c + rat_int(3) * b * x0 + rat_int(6) * a * x0 * x0;
            let dt = d + rat_int(2) * c * x0 + rat_int(3) * b * x0 * x0
                + rat_int(4) * a * x0 * x0 * x0;

            if w.is_zero() {
                // simple root at the origin (d̃ ≠ 0 since Δ ≠ 0): divide out x
                // and invert, giving y² = d̃X³ + c̃X² + b̃X + ã
                let cubic = CubicCurve::new(dt, ct, bt, a.clone())?;
                return Ok((cubic, QuarticCubicMap::RootAtZero { x0: x0.clone() }));
            }
            // invert: V² = w²X⁴ + d̃X³ + c̃X² + b̃X + ã, then complete the square
            let (cubic, map) =
                square_leading_reduction(Some(x0.clone()), w.clone(), &dt, &ct, &bt, a);
            Ok((cubic, map))
        }
    }
}

fn require_nonsingular(q: &BinaryQuartic) -> Result<(), Error> {
    if quartic_invariants(q).delta.is_zero() {
        return Err(Error::SingularQuartic);
    }
    Ok(())
}

/// Square completion of q²X⁴ + c3·X³ + c2·X² + c1·X + c0 and the resulting
/// cubic; see [`QuarticCubicMap::SquareLeading`] for the correspondence.
fn square_leading_reduction(
    x0: Option<Rational>,
    q: Rational,
    c3: &Rational,
    c2: &Rational,
    c1: &Rational,
    c0: &Rational,
) -> (CubicCurve, QuarticCubicMap) {
    let p = c3 / (rat_int(2) * &q);
    let r = (c2 - &p * &p) / (rat_int(2) * &q);
    let lambda = c1 - rat_int(2) * &p * &r;
    let mu = c0 - &r * &r;
    let cubic = CubicCurve::new(
        rat_int(8) * &q,
        rat_int(4) * &p * &p - rat_int(16) * &q * &r,
        rat_int(4) * &p * &lambda - rat_int(8) * &q * &mu,
        &lambda * &lambda,
    )
    .expect("leading coefficient 8q is nonzero");
    let map = QuarticCubicMap::SquareLeading {
        x0,
        q,
        p,
        r,
        lambda,
        mu,
    };
    (cubic, map)
}
