//! Elliptic curve models over Q and the Mordell–Weil chord-tangent group law.
//!
//! Four models appear in the transformation chain: the short Weierstrass form
//! y² = x³ + αx + β, the general cubic y² = ax³ + bx² + cx + d, the fully
//! factored form y² = 4(l − kx)(n − mx)(q − px), and (in [`crate::bridge`])
//! the symmetric uv-form. Points are validated against their curve at
//! construction, and the arithmetic operations assert membership, so points
//! cannot silently migrate between curves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_int, rational_sqrt, Rational};
use crate::Error;

/// A rational point of a curve: affine (x, y) or the group identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    /// (x, y) → (x, −y); the identity maps to itself.
    pub fn negate(&self) -> CurvePoint {
        match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: -y.clone(),
            },
        }
    }

    /// Affine coordinates, or `NotAffine` for the identity.
    pub fn coordinates(&self) -> Result<(&Rational, &Rational), Error> {
        match self {
            CurvePoint::Infinity => Err(Error::NotAffine),
            CurvePoint::Affine { x, y } => Ok((x, y)),
        }
    }
}

/// Short Weierstrass curve y² = x³ + αx + β.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub alpha: Rational,
    pub beta: Rational,
}

impl WeierstrassCurve {
    /// Nonsingular curve; rejects 4α³ + 27β² = 0.
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self, Error> {
        let curve = WeierstrassCurve { alpha, beta };
        if curve.discriminant_factor().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    /// Constructor without the nonsingularity check, for negative tests and
    /// for carrying transformation results that may be singular.
    pub fn new_unchecked(alpha: Rational, beta: Rational) -> Self {
        WeierstrassCurve { alpha, beta }
    }

    /// 4α³ + 27β²; zero exactly on singular curves.
    pub fn discriminant_factor(&self) -> Rational {
        rat_int(4) * &self.alpha * &self.alpha * &self.alpha
            + rat_int(27) * &self.beta * &self.beta
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + &self.alpha * x + &self.beta
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    /// Validated affine point.
    pub fn point(&self, x: Rational, y: Rational) -> Result<CurvePoint, Error> {
        let p = CurvePoint::affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// Mordell–Weil sum of two points on this curve.
    ///
    /// Chord through distinct points, tangent when doubling; the third
    /// intersection is reflected in y. Vertical chords give the identity.
    /// Panics if either point is off the curve (they are constructed
    /// validated, so this only fires on cross-curve misuse).
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        assert!(
            self.contains(p) && self.contains(q),
            "add_points requires points on the curve"
        );
        let ((x1, y1), (x2, y2)) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                ((x1, y1), (x2, y2))
            }
        };
        if x1 == x2 && *y1 == -y2.clone() {
            return CurvePoint::Infinity;
        }
        let lambda = if x1 == x2 {
            // tangent slope (y1 ≠ 0 here, the vertical case returned above)
            (rat_int(3) * x1 * x1 + &self.alpha) / (rat_int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = &lambda * (x1 - &x3) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn double(&self, p: &CurvePoint) -> CurvePoint {
        self.add(p, p)
    }

    /// n·P by repeated addition (n small in all uses here).
    pub fn multiply(&self, n: u32, p: &CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        for _ in 0..n {
            acc = self.add(&acc, p);
        }
        acc
    }

    /// True iff n·P is the identity for some 1 ≤ n ≤ 12. By Mazur's theorem
    /// the torsion order of a rational point divides into this range, so this
    /// test is exact; `false` certifies infinite order.
    pub fn is_torsion(&self, p: &CurvePoint) -> bool {
        let mut acc = CurvePoint::Infinity;
        for _ in 1..=12 {
            acc = self.add(&acc, p);
            if acc.is_infinity() {
                return true;
            }
        }
        false
    }

    /// The standard j-invariant 1728·4α³/(4α³ + 27β²).
    ///
    /// Used for exact internal consistency checks of the transformations; it
    /// is a different normalization from the quartic J = S³/Δ and the two are
    /// never equated directly.
    pub fn j(&self) -> Result<Rational, Error> {
        let den = self.discriminant_factor();
        if den.is_zero() {
            return Err(Error::SingularCurve);
        }
        let four_a3 = rat_int(4) * &self.alpha * &self.alpha * &self.alpha;
        Ok(rat_int(1728) * four_a3 / den)
    }
}

/// Affine change of variables X = s·x + r, Y = s·y between a cubic curve and
/// its Weierstrass form. Invertible since s ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveMap {
    pub x_scale: Rational,
    pub x_shift: Rational,
    pub y_scale: Rational,
}

impl CurveMap {
    pub fn forward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: &self.x_scale * x + &self.x_shift,
                y: &self.y_scale * y,
            },
        }
    }

    pub fn backward(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: (x - &self.x_shift) / &self.x_scale,
                y: y / &self.y_scale,
            },
        }
    }
}

/// General cubic model y² = ax³ + bx² + cx + d with a ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCurve {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl CubicCurve {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, Error> {
        if a.is_zero() {
            return Err(Error::DegenerateCubic);
        }
        Ok(CubicCurve { a, b, c, d })
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self, Error> {
        CubicCurve::new(rat_int(a), rat_int(b), rat_int(c), rat_int(d))
    }

    pub fn rhs(&self, x: &Rational) -> Rational {
        ((&self.a * x + &self.b) * x + &self.c) * x + &self.d
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    pub fn point(&self, x: Rational, y: Rational) -> Result<CurvePoint, Error> {
        let p = CurvePoint::affine(x, y);
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// Standard-form reduction: X = a·x + b/3, Y = a·y turns the curve into
    /// Y² = X³ + αX + β with α = ac − b²/3, β = 2b³/27 − abc/3 + a²d.
    ///
    /// The returned curve is singular exactly when this cubic is; follow with
    /// [`WeierstrassCurve::j`] which reports that case.
    pub fn to_weierstrass(&self) -> (WeierstrassCurve, CurveMap) {
        let (a, b) = (&self.a, &self.b);
        let alpha = a * &self.c - b * b / rat_int(3);
        let beta = rat_int(2) * b * b * b / rat_int(27) - a * b * &self.c / rat_int(3)
            + a * a * &self.d;
        let map = CurveMap {
            x_scale: a.clone(),
            x_shift: b / rat_int(3),
            y_scale: a.clone(),
        };
        (WeierstrassCurve::new_unchecked(alpha, beta), map)
    }

    /// All rational points with y = 0, i.e. the rational roots of the cubic,
    /// in increasing x order. Length is 0, 1 or 3 for nonsingular curves.
    pub fn two_torsion(&self) -> Vec<CurvePoint> {
        let mut roots = rational_roots_cubic(&self.a, &self.b, &self.c, &self.d);
        roots.sort();
        roots.dedup();
        roots
            .into_iter()
            .map(|x| CurvePoint::affine(x, Rational::zero()))
            .collect()
    }

    /// True iff the cubic splits over Q, i.e. all three 2-torsion points are
    /// rational.
    pub fn has_full_two_torsion(&self) -> bool {
        self.two_torsion().len() == 3
    }

    /// Translate x so the given affine point sits at x = 0; the constant term
    /// of the result is P.y², a rational square.
    pub fn shift_to_origin(&self, p: &CurvePoint) -> Result<CubicCurve, Error> {
        let (x0, _) = p.coordinates()?;
        if !self.contains(p) {
            return Err(Error::PointNotOnCurve);
        }
        let a = self.a.clone();
        let b = rat_int(3) * &self.a * x0 + &self.b;
        let c = rat_int(3) * &self.a * x0 * x0 + rat_int(2) * &self.b * x0 + &self.c;
        let d = self.rhs(x0);
        Ok(CubicCurve { a, b, c, d })
    }
}

/// Fully factored model y² = 4(l − kx)(n − mx)(q − px) with k·m·p ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredCurve {
    pub k: Rational,
    pub m: Rational,
    pub p: Rational,
    pub l: Rational,
    pub n: Rational,
    pub q: Rational,
}

impl FactoredCurve {
    pub fn new(
        k: Rational,
        m: Rational,
        p: Rational,
        l: Rational,
        n: Rational,
        q: Rational,
    ) -> Result<Self, Error> {
        if (&k * &m * &p).is_zero() {
            return Err(Error::DegenerateCubic);
        }
        Ok(FactoredCurve { k, m, p, l, n, q })
    }

    /// Expand the product into the cubic model.
    pub fn expand(&self) -> CubicCurve {
        let FactoredCurve { k, m, p, l, n, q } = self;
        let four = rat_int(4);
        CubicCurve {
            a: -(&four * k * m * p),
            b: &four * (k * m * q + l * m * p + k * n * p),
            c: -(&four * (l * m * q + k * n * q + l * n * p)),
            d: &four * l * n * q,
        }
    }
}

/// Distinct rational roots of ax³ + bx² + cx + d (a ≠ 0), by clearing
/// denominators and enumerating divisor pairs of the constant and leading
/// integer coefficients, then deflating to an exactly-solved quadratic.
fn rational_roots_cubic(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> Vec<Rational> {
    // common denominator
    let lcm = [a, b, c, d]
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let scale = Rational::from_integer(lcm);
    let g3 = (a * &scale).to_integer();
    let g2 = (b * &scale).to_integer();
    let g1 = (c * &scale).to_integer();
    let g0 = (d * &scale).to_integer();

    if g0.is_zero() {
        let mut roots = vec![Rational::zero()];
        roots.extend(rational_roots_quadratic(
            &Rational::from_integer(g3),
            &Rational::from_integer(g2),
            &Rational::from_integer(g1),
        ));
        return roots;
    }

    let eval = |x: &Rational| ((Rational::from_integer(g3.clone()) * x
        + Rational::from_integer(g2.clone()))
        * x
        + Rational::from_integer(g1.clone()))
        * x
        + Rational::from_integer(g0.clone());

    for p in positive_divisors(&g0.abs()) {
        for q in positive_divisors(&g3.abs()) {
            if p.gcd(&q) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rational::new(rat_int(sign).to_integer() * &p, q.clone());
                if eval(&cand).is_zero() {
                    // deflate: g3x³+g2x²+g1x+g0 = (x − r)(q2x² + q1x + q0)
                    let q2 = Rational::from_integer(g3);
                    let q1 = Rational::from_integer(g2) + &cand * &q2;
                    let q0 = Rational::from_integer(g1) + &cand * &q1;
                    let mut roots = vec![cand];
                    roots.extend(rational_roots_quadratic(&q2, &q1, &q0));
                    return roots;
                }
            }
        }
    }
    Vec::new()
}

/// Rational roots of ax² + bx + c (a ≠ 0) via the exact square-root test on
/// the discriminant.
fn rational_roots_quadratic(a: &Rational, b: &Rational, c: &Rational) -> Vec<Rational> {
    if a.is_zero() {
        if b.is_zero() {
            return Vec::new();
        }
        return vec![-(c / b)];
    }
    let disc = b * b - rat_int(4) * a * c;
    match rational_sqrt(&disc) {
        None => Vec::new(),
        Some(s) if s.is_zero() => vec![-(b / (rat_int(2) * a))],
        Some(s) => vec![
            (-b + &s) / (rat_int(2) * a),
            (-b - &s) / (rat_int(2) * a),
        ],
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if n.is_multiple_of(&i) {
            small.push(i.clone());
            let j = n / &i;
            if j != i {
                large.push(j);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn curve_25() -> WeierstrassCurve {
        WeierstrassCurve::new(rat_int(-25), rat_int(0)).unwrap()
    }

    #[test]
    fn construction_rejects_singular() {
        assert_eq!(
            WeierstrassCurve::new(rat_int(0), rat_int(0)),
            Err(Error::SingularCurve)
        );
        assert_eq!(
            WeierstrassCurve::new(rat_int(-3), rat_int(2)),
            Err(Error::SingularCurve)
        );
        assert!(WeierstrassCurve::new(rat_int(-25), rat_int(0)).is_ok());
        assert_eq!(
            CubicCurve::from_ints(0, 1, 1, 1),
            Err(Error::DegenerateCubic)
        );
    }

    #[test]
    fn doubling_frozen_value() {
        let e = curve_25();
        let p = e.point(rat_int(-4), rat_int(6)).unwrap();
        let two_p = e.double(&p);
        assert_eq!(
            two_p,
            CurvePoint::affine(rat(1681, 144), rat(-62279, 1728))
        );
        // independent slope route: λ = (3x² − 25)/(2y)
        let lambda = rat(23, 12);
        let x3 = &lambda * &lambda - rat_int(-4) - rat_int(-4);
        assert_eq!(x3, rat(1681, 144));
        assert!(e.contains(&two_p));
    }

    #[test]
    fn identity_and_inverse_laws() {
        let e = curve_25();
        let p = e.point(rat_int(-4), rat_int(6)).unwrap();
        assert_eq!(e.add(&p, &CurvePoint::Infinity), p);
        assert_eq!(e.add(&CurvePoint::Infinity, &p), p);
        assert!(e.add(&p, &p.negate()).is_infinity());
        assert_eq!(p.negate().negate(), p);
        let t = e.point(rat_int(0), rat_int(0)).unwrap();
        assert_eq!(t.negate(), t);
        assert!(e.add(&t, &t).is_infinity());
    }

    #[test]
    fn two_torsion_points_multiply_to_the_third() {
        let c = CubicCurve::from_ints(1, 0, -25, 0).unwrap();
        let tor = c.two_torsion();
        assert_eq!(tor.len(), 3);
        let xs: Vec<_> = tor.iter().map(|p| p.coordinates().unwrap().0.clone()).collect();
        assert_eq!(xs, vec![rat_int(-5), rat_int(0), rat_int(5)]);
        assert!(c.has_full_two_torsion());

        // adding two distinct 2-torsion points on the Weierstrass model gives the third
        let e = curve_25();
        let t1 = e.point(rat_int(0), rat_int(0)).unwrap();
        let t2 = e.point(rat_int(5), rat_int(0)).unwrap();
        let t3 = e.point(rat_int(-5), rat_int(0)).unwrap();
        assert_eq!(e.add(&t1, &t2), t3);
    }

    #[test]
    fn two_torsion_partial_and_empty() {
        let c = CubicCurve::from_ints(1, 0, 0, 1).unwrap(); // x³ + 1
        let tor = c.two_torsion();
        assert_eq!(tor.len(), 1);
        assert_eq!(tor[0], CurvePoint::affine(rat_int(-1), rat_int(0)));
        assert!(!c.has_full_two_torsion());

        let c = CubicCurve::from_ints(1, 0, 0, -2).unwrap(); // x³ − 2
        assert!(c.two_torsion().is_empty());

        // factored form: roots 1, 1/2, 1/3
        let f = FactoredCurve::new(
            rat_int(1),
            rat_int(2),
            rat_int(3),
            rat_int(1),
            rat_int(1),
            rat_int(1),
        )
        .unwrap();
        assert!(f.expand().has_full_two_torsion());
    }

    #[test]
    fn cubic_to_weierstrass_examples() {
        // already in standard form: identity map
        let c = CubicCurve::from_ints(1, 0, -25, 0).unwrap();
        let (w, map) = c.to_weierstrass();
        assert_eq!(w.alpha, rat_int(-25));
        assert_eq!(w.beta, rat_int(0));
        assert_eq!(map.x_scale, rat_int(1));
        assert_eq!(map.x_shift, rat_int(0));

        // y² = 4x³ − 4x → Y² = X³ − 16X with X = 4x, Y = 4y
        let c = CubicCurve::from_ints(4, 0, -4, 0).unwrap();
        let (w, map) = c.to_weierstrass();
        assert_eq!(w.alpha, rat_int(-16));
        assert_eq!(w.beta, rat_int(0));
        let p = c.point(rat_int(1), rat_int(0)).unwrap();
        let fp = map.forward(&p);
        assert!(w.contains(&fp));
        assert_eq!(fp, CurvePoint::affine(rat_int(4), rat_int(0)));
        assert_eq!(map.backward(&fp), p);

        // generic point transport
        let c = CubicCurve::from_ints(2, -3, 1, 4).unwrap();
        let (w, map) = c.to_weierstrass();
        let p = c.point(rat_int(0), rat_int(2)).unwrap();
        assert!(w.contains(&map.forward(&p)));
    }

    #[test]
    fn shift_to_origin_examples() {
        let c = CubicCurve::from_ints(1, 0, -25, 0).unwrap();
        let p = c.point(rat_int(5), rat_int(0)).unwrap();
        let shifted = c.shift_to_origin(&p).unwrap();
        assert_eq!(shifted.a, rat_int(1));
        assert_eq!(shifted.b, rat_int(15));
        assert_eq!(shifted.c, rat_int(50));
        assert_eq!(shifted.d, rat_int(0));

        // shifting by a point at x = 0 is the identity
        let c = CubicCurve::from_ints(1, 2, 3, 4).unwrap();
        let p = c.point(rat_int(0), rat_int(2)).unwrap();
        assert_eq!(c.shift_to_origin(&p).unwrap(), c);

        // constant term after shifting is y₀²
        let c = CubicCurve::from_ints(1, 0, -25, 0).unwrap();
        let p = c.point(rat_int(-4), rat_int(6)).unwrap();
        let shifted = c.shift_to_origin(&p).unwrap();
        assert_eq!(shifted.d, rat_int(36));
        assert_eq!(
            c.shift_to_origin(&CurvePoint::Infinity),
            Err(Error::NotAffine)
        );
        assert_eq!(
            c.shift_to_origin(&CurvePoint::affine(rat_int(1), rat_int(1))),
            Err(Error::PointNotOnCurve)
        );
    }

    #[test]
    fn shift_preserves_j() {
        let c = CubicCurve::from_ints(1, 0, -25, 0).unwrap();
        let p = c.point(rat_int(-4), rat_int(6)).unwrap();
        let shifted = c.shift_to_origin(&p).unwrap();
        let j0 = c.to_weierstrass().0.j().unwrap();
        let j1 = shifted.to_weierstrass().0.j().unwrap();
        assert_eq!(j0, j1);
    }

    #[test]
    fn torsion_certification() {
        let e = curve_25();
        assert!(e.is_torsion(&CurvePoint::Infinity));
        assert!(e.is_torsion(&e.point(rat_int(0), rat_int(0)).unwrap()));
        assert!(!e.is_torsion(&e.point(rat_int(-4), rat_int(6)).unwrap()));
    }

    #[test]
    fn weierstrass_j_special_values() {
        let e = curve_25(); // β = 0
        assert_eq!(e.j().unwrap(), rat_int(1728));
        let e = WeierstrassCurve::new(rat_int(0), rat_int(5)).unwrap(); // α = 0
        assert_eq!(e.j().unwrap(), rat_int(0));
        // (x,y) → (s²x, s³y) rescale: α → s⁴α, β → s⁶β leaves j fixed
        let e = WeierstrassCurve::new(rat_int(-7), rat_int(3)).unwrap();
        let s4 = rat(16, 81); // s = 2/3
        let s6 = rat(64, 729);
        let scaled = WeierstrassCurve::new(&e.alpha * s4, &e.beta * s6).unwrap();
        assert_eq!(e.j().unwrap(), scaled.j().unwrap());
        assert_eq!(
            WeierstrassCurve::new_unchecked(rat_int(0), rat_int(0)).j(),
            Err(Error::SingularCurve)
        );
    }

    #[test]
    fn closure_of_addition() {
        let e = curve_25();
        let p = e.point(rat_int(-4), rat_int(6)).unwrap();
        let mut acc = CurvePoint::Infinity;
        for _ in 0..6 {
            acc = e.add(&acc, &p);
            assert!(e.contains(&acc));
        }
    }
}
