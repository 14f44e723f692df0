//! Transformations between the factored cubic y² = 4(l−kx)(n−mx)(q−px), the
//! symmetric uv-model u²v² = 2euv − 2fv − 2gu + h, and the placement of the
//! eight quantities {u, v, k, m, p, r, s, t} on the corners of a cube under
//! which the curve equation literally becomes Cayley's hyperdeterminant.
//!
//! With the substitution l = rs, n = ts, q = rt the uv-coefficients are
//!
//! ```text
//! e = kt + mr + ps        f = 2kmp        g = 2rst
//! h = 2kmrt + 2kpts + 2mprs − k²t² − m²r² − p²s²
//! ```
//!
//! (h is pinned by the identity h = b − e² against the expanded cubic).
//! Moving everything in the uv-equation to one side gives an eight-variable
//! polynomial; [`derive_cube_assignment`] finds, by exhaustive search over
//! all 8! corner placements and both overall signs, an assignment under which
//! `cayley_det` reproduces it identically, and the result is confirmed by
//! full monomial expansion rather than sampling.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::elliptic::{CubicCurve, CurvePoint, FactoredCurve};
use crate::hypermatrix::Hypermatrix222;
use crate::invariants::cayley_det;
use crate::rational::{rat_int, rational_sqrt, Rational};
use crate::Error;

/// The six parameters (k, m, p, r, s, t) of the fully-2-torsioned curve
/// family, nondegenerate when k·m·p ≠ 0 and r·s·t ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeParams {
    pub k: Rational,
    pub m: Rational,
    pub p: Rational,
    pub r: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl BridgeParams {
    pub fn new(
        k: Rational,
        m: Rational,
        p: Rational,
        r: Rational,
        s: Rational,
        t: Rational,
    ) -> Result<Self, Error> {
        if (&k * &m * &p).is_zero() || (&r * &s * &t).is_zero() {
            return Err(Error::DegenerateParams);
        }
        Ok(BridgeParams { k, m, p, r, s, t })
    }

    pub fn from_ints(k: i64, m: i64, p: i64, r: i64, s: i64, t: i64) -> Result<Self, Error> {
        BridgeParams::new(
            rat_int(k),
            rat_int(m),
            rat_int(p),
            rat_int(r),
            rat_int(s),
            rat_int(t),
        )
    }

    /// The factored curve y² = 4(rs − kx)(ts − mx)(rt − px).
    pub fn factored_curve(&self) -> FactoredCurve {
        FactoredCurve::new(
            self.k.clone(),
            self.m.clone(),
            self.p.clone(),
            &self.r * &self.s,
            &self.t * &self.s,
            &self.r * &self.t,
        )
        .expect("bridge params are nondegenerate")
    }
}

/// The symmetric curve model u²v² = 2euv − 2fv − 2gu + h.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UVCurve {
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
}

impl UVCurve {
    /// u²v² − 2euv + 2fv + 2gu − h; zero exactly on the curve.
    pub fn equation_value(&self, u: &Rational, v: &Rational) -> Rational {
        u * u * v * v - rat_int(2) * &self.e * u * v
            + rat_int(2) * &self.f * v
            + rat_int(2) * &self.g * u
            - &self.h
    }

    pub fn contains(&self, u: &Rational, v: &Rational) -> bool {
        self.equation_value(u, v).is_zero()
    }
}

/// uv-coefficients of the parameter family.
pub fn params_to_uv(bp: &BridgeParams) -> UVCurve {
    let BridgeParams { k, m, p, r, s, t } = bp;
    let two = rat_int(2);
    let e = k * t + m * r + p * s;
    let f = &two * k * m * p;
    let g = &two * r * s * t;
    let h = &two * k * m * r * t + &two * k * p * t * s + &two * m * p * r * s
        - k * t * k * t
        - m * r * m * r
        - p * s * p * s;
    UVCurve { e, f, g, h }
}

/// Complete the square in u: y² = −2f·x³ + (h+e²)·x² − 2eg·x + g², with the
/// point correspondence y = uv² − ev + g, x = v. Requires f ≠ 0.
pub fn uv_to_cubic(uv: &UVCurve) -> Result<CubicCurve, Error> {
    if uv.f.is_zero() {
        return Err(Error::NotCubic);
    }
    let two = rat_int(2);
    CubicCurve::new(
        -(&two * &uv.f),
        &uv.h + &uv.e * &uv.e,
        -(&two * &uv.e * &uv.g),
        &uv.g * &uv.g,
    )
}

/// Invert [`uv_to_cubic`]: g = +√d, e = −c/(2g), f = −a/2, h = b − e².
///
/// Fails with `NotASquare` when d is not a rational square and with `ZeroG`
/// when d = 0 (the inversion divides by g; d = 0 means the designated
/// rational point is 2-torsion, outside the intended generator role).
pub fn cubic_to_uv(c: &CubicCurve) -> Result<UVCurve, Error> {
    let g = rational_sqrt(&c.d).ok_or(Error::NotASquare)?;
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    let e = -(&c.c / (rat_int(2) * &g));
    let f = -(&c.a / rat_int(2));
    let h = &c.b - &e * &e;
    Ok(UVCurve { e, f, g, h })
}

/// Map an affine point of `uv_to_cubic(uv)` back to the uv-model:
/// v = x, u = (y + ev − g)/v². Singular at x = 0 (`VZero`).
pub fn point_map_uv(uv: &UVCurve, p: &CurvePoint) -> Result<(Rational, Rational), Error> {
    let cubic = uv_to_cubic(uv)?;
    let (x, y) = p.coordinates()?;
    if !cubic.contains(p) {
        return Err(Error::PointNotOnCurve);
    }
    if x.is_zero() {
        return Err(Error::VZero);
    }
    let v = x.clone();
    let u = (y + &uv.e * &v - &uv.g) / (&v * &v);
    Ok((u, v))
}

/// Solve l = rs, n = ts, q = rt for (r, s, t): r = +√(lq/n), s = l/r, t = q/r.
pub fn factored_to_params(fc: &FactoredCurve) -> Result<BridgeParams, Error> {
    if fc.n.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let ratio = &fc.l * &fc.q / &fc.n;
    let r = rational_sqrt(&ratio).ok_or(Error::NotASquare)?;
    if r.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let s = &fc.l / &r;
    let t = &fc.q / &r;
    BridgeParams::new(fc.k.clone(), fc.m.clone(), fc.p.clone(), r, s, t)
}

/// The eight quantities placed on the cube corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CornerSymbol {
    U,
    V,
    K,
    M,
    P,
    R,
    S,
    T,
}

impl CornerSymbol {
    pub const ALL: [CornerSymbol; 8] = [
        CornerSymbol::U,
        CornerSymbol::V,
        CornerSymbol::K,
        CornerSymbol::M,
        CornerSymbol::P,
        CornerSymbol::R,
        CornerSymbol::S,
        CornerSymbol::T,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CornerSymbol::U => "u",
            CornerSymbol::V => "v",
            CornerSymbol::K => "k",
            CornerSymbol::M => "m",
            CornerSymbol::P => "p",
            CornerSymbol::R => "r",
            CornerSymbol::S => "s",
            CornerSymbol::T => "t",
        }
    }
}

/// A bijection from the eight symbols to the corners a..h (flat corner order
/// of [`Hypermatrix222`]) together with an overall sign, such that
/// `sign · cayley_det(corners)` equals the eight-variable curve equation as a
/// polynomial identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeAssignment {
    corners: [CornerSymbol; 8],
    sign: i8,
}

impl CubeAssignment {
    /// Symbol at each corner, in flat corner order a..h.
    pub fn corners(&self) -> &[CornerSymbol; 8] {
        &self.corners
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Substitute numeric values for the symbols, producing the 2×2×2
    /// hypermatrix whose Cayley determinant evaluates the curve equation.
    pub fn substitute(&self, u: &Rational, v: &Rational, bp: &BridgeParams) -> Hypermatrix222 {
        let value = |sym: CornerSymbol| match sym {
            CornerSymbol::U => u.clone(),
            CornerSymbol::V => v.clone(),
            CornerSymbol::K => bp.k.clone(),
            CornerSymbol::M => bp.m.clone(),
            CornerSymbol::P => bp.p.clone(),
            CornerSymbol::R => bp.r.clone(),
            CornerSymbol::S => bp.s.clone(),
            CornerSymbol::T => bp.t.clone(),
        };
        Hypermatrix222::new(std::array::from_fn(|c| value(self.corners[c])))
    }

    /// Full symbolic verification: expand `cayley_det` on the corner symbols
    /// and compare monomial-by-monomial against the target equation.
    pub fn verify_symbolic(&self) -> bool {
        let det = symbolic_cayley_det(&self.corners);
        let target = target_polynomial();
        if self.sign >= 0 {
            det == *target
        } else {
            det.neg() == *target
        }
    }

    /// Relabel corners by a corner permutation (`rot[c]` is the image of
    /// corner `c`), e.g. one of [`cube_rotations`].
    pub fn rotated(&self, rot: &[usize; 8]) -> CubeAssignment {
        let mut corners = self.corners;
        for c in 0..8 {
            corners[rot[c]] = self.corners[c];
        }
        CubeAssignment {
            corners,
            sign: self.sign,
        }
    }
}

/// The twelve orientation-preserving cube symmetries that act evenly on the
/// four body diagonals (the A₄ rotation group), as permutations of the flat
/// corner indices: even permutations of the three axes combined with an even
/// number of per-axis index flips.
pub fn cube_rotations() -> Vec<[usize; 8]> {
    let axis_perms: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let flips: [[usize; 3]; 4] = [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0]];
    let mut rotations = Vec::with_capacity(12);
    for ap in axis_perms {
        for fl in flips {
            let mut rot = [0usize; 8];
            for (corner, slot) in rot.iter_mut().enumerate() {
                let idx = [(corner >> 2) & 1, (corner >> 1) & 1, corner & 1];
                let mut out = [0usize; 3];
                for ax in 0..3 {
                    out[ax] = idx[ap[ax]] ^ fl[ax];
                }
                *slot = (out[0] << 2) | (out[1] << 1) | out[2];
            }
            rotations.push(rot);
        }
    }
    rotations
}

/// Derive the cube-corner assignment by exhaustive search: all 8! placements
/// of the symbols on the corners, both signs, in lexicographic placement
/// order with the first match returned (so the result is reproducible).
/// Candidates are pre-filtered by exact evaluation at fixed integer points
/// modulo a 61-bit prime, then confirmed symbolically.
///
/// The derivation runs once per process and is cached.
pub fn derive_cube_assignment() -> Result<CubeAssignment, Error> {
    static CACHE: OnceLock<Result<CubeAssignment, Error>> = OnceLock::new();
    CACHE.get_or_init(search_assignment).clone()
}

fn search_assignment() -> Result<CubeAssignment, Error> {
    // two fixed evaluation points in F_p, enough to separate candidates
    // cheaply before the symbolic confirmation
    const P: u64 = (1 << 61) - 1;
    let eval_points: [[u64; 8]; 2] = [
        [1025, 3301, 772, 5113, 2406, 911, 4177, 660],
        [77, 230, 4905, 1312, 5556, 2025, 340, 4471],
    ];
    let target = target_polynomial();
    let target_vals: Vec<u64> = eval_points.iter().map(|pt| target.eval_mod(pt, P)).collect();

    let mut perm: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
    loop {
        for sign in [1i8, -1] {
            let candidate_ok = eval_points.iter().zip(&target_vals).all(|(pt, &tv)| {
                let vals: [u64; 8] = std::array::from_fn(|c| pt[perm[c]]);
                let det = cayley_det_mod(&vals, P);
                let det = if sign >= 0 { det } else { (P - det) % P };
                det == tv
            });
            if candidate_ok {
                let assignment = CubeAssignment {
                    corners: std::array::from_fn(|c| CornerSymbol::ALL[perm[c]]),
                    sign,
                };
                if assignment.verify_symbolic() {
                    return Ok(assignment);
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Err(Error::NoAssignmentFound)
}

/// Lexicographic next permutation; false once the last one is reached.
fn next_permutation(perm: &mut [usize; 8]) -> bool {
    let Some(i) = (0..7).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..8).rev().find(|&j| perm[j] > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

fn cayley_det_mod(v: &[u64; 8], p: u64) -> u64 {
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let sub = |a: u64, b: u64| (a + p - b % p) % p;
    let add = |a: u64, b: u64| (a + b) % p;
    let (a, b, c, d, e, f, g, h) = (v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]);
    let mixed = sub(add(mul(a, h), mul(d, e)), add(mul(c, f), mul(b, g)));
    let left = sub(mul(a, d), mul(b, c));
    let right = sub(mul(e, h), mul(f, g));
    sub(mul(mixed, mixed), mul(4, mul(left, right)))
}

/// u²v² + k²t² + m²r² + p²s² − 2ktuv − 2mruv − 2psuv − 2kmrt − 2kpts − 2mprs
/// + 4kmpv + 4rstu, i.e. the uv-equation of the parameter family with
/// everything moved to one side.
fn target_polynomial() -> &'static Poly8 {
    static TARGET: OnceLock<Poly8> = OnceLock::new();
    TARGET.get_or_init(|| {
        // variable order: u v k m p r s t
        let mono = Poly8::monomial;
        let mut p = Poly8::zero();
        p = p.add(&mono(1, [2, 2, 0, 0, 0, 0, 0, 0])); // u²v²
        p = p.add(&mono(1, [0, 0, 2, 0, 0, 0, 0, 2])); // k²t²
        p = p.add(&mono(1, [0, 0, 0, 2, 0, 2, 0, 0])); // m²r²
        p = p.add(&mono(1, [0, 0, 0, 0, 2, 0, 2, 0])); // p²s²
        p = p.add(&mono(-2, [1, 1, 1, 0, 0, 0, 0, 1])); // ktuv
        p = p.add(&mono(-2, [1, 1, 0, 1, 0, 1, 0, 0])); // mruv
        p = p.add(&mono(-2, [1, 1, 0, 0, 1, 0, 1, 0])); // psuv
        p = p.add(&mono(-2, [0, 0, 1, 1, 0, 1, 0, 1])); // kmrt
        p = p.add(&mono(-2, [0, 0, 1, 0, 1, 0, 1, 1])); // kpts
        p = p.add(&mono(-2, [0, 0, 0, 1, 1, 1, 1, 0])); // mprs
        p = p.add(&mono(4, [0, 1, 1, 1, 1, 0, 0, 0])); // kmpv
        p = p.add(&mono(4, [1, 0, 0, 0, 0, 1, 1, 1])); // rstu
        p
    })
}

/// Evaluate the eight-variable curve equation for given (u, v) and parameters.
pub fn target_equation_value(u: &Rational, v: &Rational, bp: &BridgeParams) -> Rational {
    params_to_uv(bp).equation_value(u, v)
}

/// Check that the assignment reproduces the uv-equation for these parameter
/// values: both sides are degree ≤ 2 in u and in v, so agreement on the 3×3
/// integer grid {0,1,2}² pins them down exactly.
pub fn assignment_matches_params(assignment: &CubeAssignment, bp: &BridgeParams) -> bool {
    let uv = params_to_uv(bp);
    for ui in 0..3i64 {
        for vi in 0..3i64 {
            let u = rat_int(ui);
            let v = rat_int(vi);
            let det = cayley_det(&assignment.substitute(&u, &v, bp));
            let det = if assignment.sign() >= 0 { det } else { -det };
            if det != uv.equation_value(&u, &v) {
                return false;
            }
        }
    }
    true
}

fn symbolic_cayley_det(corners: &[CornerSymbol; 8]) -> Poly8 {
    let var = |c: usize| {
        let mut exps = [0u8; 8];
        exps[corners[c] as usize] = 1;
        Poly8::monomial(1, exps)
    };
    let (a, b, c, d) = (var(0), var(1), var(2), var(3));
    let (e, f, g, h) = (var(4), var(5), var(6), var(7));
    let mixed = a.mul(&h).add(&d.mul(&e)).sub(&c.mul(&f)).sub(&b.mul(&g));
    let left = a.mul(&d).sub(&b.mul(&c));
    let right = e.mul(&h).sub(&f.mul(&g));
    mixed.mul(&mixed).sub(&left.mul(&right).scale(4))
}

/// Sparse integer polynomial in the eight symbols, keyed by exponent vector.
/// Only what the assignment derivation needs.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Poly8 {
    terms: BTreeMap<[u8; 8], i64>,
}

impl Poly8 {
    fn zero() -> Self {
        Poly8 {
            terms: BTreeMap::new(),
        }
    }

    fn monomial(coeff: i64, exps: [u8; 8]) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        Poly8 { terms }
    }

    fn add(&self, other: &Poly8) -> Poly8 {
        let mut terms = self.terms.clone();
        for (exps, coeff) in &other.terms {
            let entry = terms.entry(*exps).or_insert(0);
            *entry += coeff;
            if *entry == 0 {
                terms.remove(exps);
            }
        }
        Poly8 { terms }
    }

    fn sub(&self, other: &Poly8) -> Poly8 {
        self.add(&other.neg())
    }

    fn neg(&self) -> Poly8 {
        Poly8 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    fn scale(&self, factor: i64) -> Poly8 {
        if factor == 0 {
            return Poly8::zero();
        }
        Poly8 {
            terms: self.terms.iter().map(|(e, c)| (*e, c * factor)).collect(),
        }
    }

    fn mul(&self, other: &Poly8) -> Poly8 {
        let mut terms: BTreeMap<[u8; 8], i64> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: [u8; 8] = std::array::from_fn(|i| ea[i] + eb[i]);
                let entry = terms.entry(exps).or_insert(0);
                *entry += ca * cb;
                if *entry == 0 {
                    terms.remove(&exps);
                }
            }
        }
        Poly8 { terms }
    }

    fn eval_mod(&self, vals: &[u64; 8], p: u64) -> u64 {
        let mut acc: u64 = 0;
        for (exps, coeff) in &self.terms {
            let mut term: u128 = 1;
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term * vals[i] as u128 % p as u128;
                }
            }
            let coeff_mod = coeff.rem_euclid(p as i64) as u128;
            acc = ((acc as u128 + term * coeff_mod % p as u128) % p as u128) as u64;
        }
        acc
    }
}
