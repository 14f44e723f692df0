//! Cayley's 2×2×2 hyperdeterminant, the binary quartic obtained by
//! contracting a 2×2×2×2 hypermatrix, its classical invariants S (degree 8),
//! T (degree 12), Δ = S³ − 27T² (degree 24), and the J-invariant S³/Δ.
//!
//! The quartic invariants are computed from the binomially normalized
//! coefficients a₀ = A, a₁ = B/4, a₂ = C/6, a₃ = D/4, a₄ = E. This is the
//! reading under which S and T are genuine SL(2) invariants and Δ vanishes
//! exactly on quartics with a repeated root; the plain-coefficient reading
//! fails both properties (e.g. (x²−y²)² would get S³ − 27T² = 1225). The
//! integer-friendly companions I = 12S and Jcov = 432T are exposed alongside,
//! with 6912·Δ = 4I³ − Jcov².

use num_traits::Zero;

use crate::hypermatrix::{Hypermatrix222, Hypermatrix2222, Vector2};
use crate::rational::{rat_int, Rational};
use crate::Error;

/// Cayley's hyperdeterminant of a 2×2×2 hypermatrix:
/// (ah + de − cf − bg)² − 4(ad − bc)(eh − fg)
/// in the corner convention of [`crate::hypermatrix`]. Vanishes exactly when
/// the trilinear form has a nontrivial singular point.
pub fn cayley_det(m: &Hypermatrix222) -> Rational {
    let a = m.get(0, 0, 0);
    let b = m.get(0, 0, 1);
    let c = m.get(0, 1, 0);
    let d = m.get(0, 1, 1);
    let e = m.get(1, 0, 0);
    let f = m.get(1, 0, 1);
    let g = m.get(1, 1, 0);
    let h = m.get(1, 1, 1);
    let mixed = a * h + d * e - c * f - b * g;
    &mixed * &mixed - rat_int(4) * (a * d - b * c) * (e * h - f * g)
}

/// Homogeneous binary quartic Q(x,y) = Ax⁴ + Bx³y + Cx²y² + Dxy³ + Ey⁴.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryQuartic {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
}

impl BinaryQuartic {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational) -> Self {
        BinaryQuartic { a, b, c, d, e }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64, e: i64) -> Self {
        BinaryQuartic::new(rat_int(a), rat_int(b), rat_int(c), rat_int(d), rat_int(e))
    }

    pub fn zero() -> Self {
        BinaryQuartic::from_ints(0, 0, 0, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.b.is_zero()
            && self.c.is_zero()
            && self.d.is_zero()
            && self.e.is_zero()
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let x2 = x * x;
        let y2 = y * y;
        &self.a * &x2 * &x2
            + &self.b * &x2 * x * y
            + &self.c * &x2 * &y2
            + &self.d * x * &y2 * y
            + &self.e * &y2 * &y2
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        BinaryQuartic::new(
            &self.a * lambda,
            &self.b * lambda,
            &self.c * lambda,
            &self.d * lambda,
            &self.e * lambda,
        )
    }

    /// Coefficients in A..E order.
    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }
}

/// The invariants of a binary quartic, all exact.
///
/// `delta = s³ − 27t²` holds by construction; `i = 12s` and `jcov = 432t` are
/// the integer-scaled companions (integral on integer quartics).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub s: Rational,
    pub t: Rational,
    pub delta: Rational,
    pub i: Rational,
    pub jcov: Rational,
}

/// The unique quartic with Q(x,y) = cayley_det(contract_last(a4, (x,y))),
/// recovered by exact interpolation at (1,0), (0,1), (1,1), (1,−1), (2,1).
pub fn quartic_from_hypermatrix(a4: &Hypermatrix2222) -> BinaryQuartic {
    let at = |x: i64, y: i64| cayley_det(&a4.contract_last(&Vector2::from_ints(x, y)));
    let q10 = at(1, 0);
    let q01 = at(0, 1);
    let q11 = at(1, 1);
    let q1m1 = at(1, -1);
    let q21 = at(2, 1);

    let a = q10;
    let e = q01;
    let sum_bcd = &q11 - &a - &e; // B + C + D
    let alt_bcd = &q1m1 - &a - &e; // -B + C - D
    let c = (&sum_bcd + &alt_bcd) / rat_int(2);
    let b_plus_d = (&sum_bcd - &alt_bcd) / rat_int(2);
    // Q(2,1) = 16A + 8B + 4C + 2D + E  =>  6B = Q(2,1) - 16A - 4C - E - 2(B+D)
    let b = (&q21 - rat_int(16) * &a - rat_int(4) * &c - &e - rat_int(2) * &b_plus_d)
        / rat_int(6);
    let d = &b_plus_d - &b;
    BinaryQuartic::new(a, b, c, d, e)
}

/// S, T, Δ (and the scaled I, Jcov) of a binary quartic.
pub fn quartic_invariants(q: &BinaryQuartic) -> QuarticInvariants {
    let a0 = q.a.clone();
    let a1 = &q.b / rat_int(4);
    let a2 = &q.c / rat_int(6);
    let a3 = &q.d / rat_int(4);
    let a4 = q.e.clone();

    let s = &a0 * &a4 - rat_int(4) * &a1 * &a3 + rat_int(3) * &a2 * &a2;
    let t = &a0 * &a2 * &a4 + rat_int(2) * &a1 * &a2 * &a3
        - &a0 * &a3 * &a3
        - &a2 * &a2 * &a2
        - &a4 * &a1 * &a1;
    let delta = &s * &s * &s - rat_int(27) * &t * &t;

    let i = rat_int(12) * &q.a * &q.e - rat_int(3) * &q.b * &q.d + &q.c * &q.c;
    let jcov = rat_int(72) * &q.a * &q.c * &q.e + rat_int(9) * &q.b * &q.c * &q.d
        - rat_int(27) * &q.a * &q.d * &q.d
        - rat_int(27) * &q.b * &q.b * &q.e
        - rat_int(2) * &q.c * &q.c * &q.c;

    QuarticInvariants { s, t, delta, i, jcov }
}

/// Δ of the contracted quartic of a 2×2×2×2 hypermatrix. Degree 24 in the
/// entries; equals the classical Schläfli hyperdeterminant up to the fixed
/// rational constant introduced by the binomial normalization
/// (6912·Δ = 4I³ − Jcov² with integer I, Jcov on integer input).
pub fn schlafli_delta(a4: &Hypermatrix2222) -> Rational {
    quartic_invariants(&quartic_from_hypermatrix(a4)).delta
}

/// J = S³/Δ, the paper-normalized J-invariant of the quartic.
pub fn j_invariant(q: &BinaryQuartic) -> Result<Rational, Error> {
    let inv = quartic_invariants(q);
    if inv.delta.is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(&inv.s * &inv.s * &inv.s / &inv.delta)
}

/// True iff Q has a repeated projective root: Q(x,1) shares a nonconstant gcd
/// with its derivative, or y² | Q (repeated root at infinity, A = B = 0).
///
/// This is the independent gcd-based oracle for the discriminant property
/// Δ = 0 ⟺ repeated root; it never looks at S or T.
pub fn has_repeated_root(q: &BinaryQuartic) -> Result<bool, Error> {
    if q.is_zero() {
        return Err(Error::ZeroQuartic);
    }
    if q.a.is_zero() && q.b.is_zero() {
        return Ok(true);
    }
    // Q(x,1) ascending: E + Dx + Cx² + Bx³ + Ax⁴
    let f = poly::trim(vec![
        q.e.clone(),
        q.d.clone(),
        q.c.clone(),
        q.b.clone(),
        q.a.clone(),
    ]);
    let fp = poly::derivative(&f);
    let g = poly::gcd(f, fp);
    Ok(poly::degree(&g) >= 1)
}

/// Dense univariate polynomials over the rationals, ascending coefficients.
/// Just enough for the repeated-root gcd; degrees here never exceed 4.
mod poly {
    use super::Rational;
    use num_traits::Zero;

    pub fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    /// Degree of a trimmed polynomial; -1 for the zero polynomial.
    pub fn degree(p: &[Rational]) -> isize {
        p.len() as isize - 1
    }

    pub fn derivative(p: &[Rational]) -> Vec<Rational> {
        trim(
            p.iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| super::rat_int(n as i64) * c)
                .collect(),
        )
    }

    /// Remainder of trimmed `a` by trimmed nonzero `b`.
    pub fn rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
        assert!(!b.is_empty());
        let lead = b.last().unwrap();
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = a.last().unwrap() / lead;
            for (i, bc) in b.iter().enumerate() {
                let delta = &factor * bc;
                a[shift + i] -= delta;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        a
    }

    pub fn gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
        while !b.is_empty() {
            let r = rem(a, &b);
            a = b;
            b = r;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypermatrix::Matrix2;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cayley_det_spec_values() {
        // only a and h set: the ah term survives
        let m = Hypermatrix222::from_ints([1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(cayley_det(&m), rat_int(1));
        // a=d=e=h=1: (1+1)² − 4·1·1 = 0
        let m = Hypermatrix222::from_ints([1, 0, 0, 1, 1, 0, 0, 1]);
        assert_eq!(cayley_det(&m), rat_int(0));
    }

    #[test]
    fn cayley_det_vanishes_on_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let mut v = || {
                loop {
                    let a = rng.gen_range(-5i64..=5);
                    let b = rng.gen_range(-5i64..=5);
                    if a != 0 || b != 0 {
                        return Vector2::from_ints(a, b);
                    }
                }
            };
            let m = Hypermatrix222::rank_one(&v(), &v(), &v());
            assert_eq!(cayley_det(&m), rat_int(0));
        }
    }

    #[test]
    fn cayley_det_matches_quadratic_discriminant_route() {
        // determinant of (t0·slice0 + t1·slice1) is a quadratic in t whose
        // discriminant must equal the Cayley formula
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let m = Hypermatrix222::new(std::array::from_fn(|_| rat_int(rng.gen_range(-9..=9))));
            let slice = |i: usize| {
                Matrix2::new(
                    m.get(i, 0, 0).clone(),
                    m.get(i, 0, 1).clone(),
                    m.get(i, 1, 0).clone(),
                    m.get(i, 1, 1).clone(),
                )
            };
            let s0 = slice(0);
            let s1 = slice(1);
            let sum = Matrix2::new(
                &s0.m00 + &s1.m00,
                &s0.m01 + &s1.m01,
                &s0.m10 + &s1.m10,
                &s0.m11 + &s1.m11,
            );
            let c20 = s0.det();
            let c02 = s1.det();
            let c11 = sum.det() - &c20 - &c02;
            let disc = &c11 * &c11 - rat_int(4) * &c20 * &c02;
            assert_eq!(disc, cayley_det(&m));
        }
    }

    #[test]
    fn quartic_interpolation_matches_direct_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let a4 = Hypermatrix2222::new(std::array::from_fn(|_| rat_int(rng.gen_range(-9..=9))));
        let q = quartic_from_hypermatrix(&a4);
        for _ in 0..20 {
            let x = rat_int(rng.gen_range(-12..=12));
            let y = rat_int(rng.gen_range(-12..=12));
            let direct = cayley_det(&a4.contract_last(&Vector2::new(x.clone(), y.clone())));
            assert_eq!(q.evaluate(&x, &y), direct);
        }
    }

    #[test]
    fn quartic_from_hypermatrix_degenerate_slices() {
        assert!(quartic_from_hypermatrix(&Hypermatrix2222::zero()).is_zero());
        // kill all l = 1 entries: Q = cayley_det(slice at l=0) · x⁴
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        let mut a4 = Hypermatrix2222::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    *a4.get_mut(i, j, k, 0) = rat_int(rng.gen_range(-9..=9));
                }
            }
        }
        let q = quartic_from_hypermatrix(&a4);
        assert!(q.b.is_zero() && q.c.is_zero() && q.d.is_zero() && q.e.is_zero());
        assert_eq!(q.a, cayley_det(&a4.contract_last(&Vector2::from_ints(1, 0))));
    }

    #[test]
    fn invariants_frozen_values() {
        // x⁴ + y⁴
        let inv = quartic_invariants(&BinaryQuartic::from_ints(1, 0, 0, 0, 1));
        assert_eq!(inv.s, rat_int(1));
        assert_eq!(inv.t, rat_int(0));
        assert_eq!(inv.delta, rat_int(1));
        // (x² − y²)²
        let inv = quartic_invariants(&BinaryQuartic::from_ints(1, 0, -2, 0, 1));
        assert_eq!(inv.s, rat(4, 3));
        assert_eq!(inv.t, rat(-8, 27));
        assert_eq!(inv.delta, rat_int(0));
        // x²y²
        let inv = quartic_invariants(&BinaryQuartic::from_ints(0, 0, 1, 0, 0));
        assert_eq!(inv.s, rat(1, 12));
        assert_eq!(inv.t, rat(-1, 216));
        assert_eq!(inv.delta, rat_int(0));
    }

    #[test]
    fn scaled_companions_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let q = BinaryQuartic::from_ints(
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
                rng.gen_range(-9..=9),
            );
            let inv = quartic_invariants(&q);
            assert_eq!(inv.i, rat_int(12) * &inv.s);
            assert_eq!(inv.jcov, rat_int(432) * &inv.t);
            assert_eq!(
                rat_int(6912) * &inv.delta,
                rat_int(4) * &inv.i * &inv.i * &inv.i - &inv.jcov * &inv.jcov
            );
            assert_eq!(
                inv.delta,
                &inv.s * &inv.s * &inv.s - rat_int(27) * &inv.t * &inv.t
            );
        }
    }

    #[test]
    fn j_invariant_examples() {
        assert_eq!(
            j_invariant(&BinaryQuartic::from_ints(1, 0, 0, 0, 1)).unwrap(),
            rat_int(1)
        );
        // scale invariance
        let q = BinaryQuartic::from_ints(2, -3, 1, 5, -4);
        let j = j_invariant(&q).unwrap();
        assert_eq!(j_invariant(&q.scale(&rat(-7, 3))).unwrap(), j);
        assert_eq!(
            j_invariant(&BinaryQuartic::from_ints(1, 0, -2, 0, 1)),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn repeated_root_examples() {
        let check = |q: BinaryQuartic, expect: bool| {
            assert_eq!(has_repeated_root(&q).unwrap(), expect);
        };
        check(BinaryQuartic::from_ints(1, 0, 0, 0, 1), false); // x⁴ + y⁴
        check(BinaryQuartic::from_ints(1, 0, -2, 0, 1), true); // (x²−y²)²
        check(BinaryQuartic::from_ints(0, 1, 0, 0, 0), true); // x³y
        check(BinaryQuartic::from_ints(1, 0, 0, 0, 0), true); // x⁴
        check(BinaryQuartic::from_ints(0, 0, 0, 0, 3), true); // 3y⁴
        // (x−y)(x−2y)(x−3y)(x−4y): distinct roots
        check(BinaryQuartic::from_ints(1, -10, 35, -50, 24), false);
        assert_eq!(
            has_repeated_root(&BinaryQuartic::zero()),
            Err(Error::ZeroQuartic)
        );
    }

    #[test]
    fn schlafli_delta_homogeneity_and_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let a4 = Hypermatrix2222::new(std::array::from_fn(|_| rat_int(rng.gen_range(-4..=4))));
        let delta = schlafli_delta(&a4);
        let lambda = rat_int(-3);
        let scaled = schlafli_delta(&a4.scale(&lambda));
        let mut pow = rat_int(1);
        for _ in 0..24 {
            pow *= &lambda;
        }
        assert_eq!(scaled, delta * pow);
        assert_eq!(schlafli_delta(&Hypermatrix2222::zero()), rat_int(0));

        let v = |a, b| Vector2::from_ints(a, b);
        let rank_one = Hypermatrix2222::rank_one(&v(1, 2), &v(3, -1), &v(2, 5), &v(-1, 4));
        assert_eq!(schlafli_delta(&rank_one), rat_int(0));
    }
}
