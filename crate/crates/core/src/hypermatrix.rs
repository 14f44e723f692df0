//! Small exact-rational tensors: 2-vectors, 2×2 matrices, and the 2×2×2 and
//! 2×2×2×2 hypermatrices, with contractions, axis permutations, and SL(2)
//! slot actions.
//!
//! Storage is a flat array in lexicographic index order with the last index
//! fastest: entry (i,j,k) of a 2×2×2 sits at `4i + 2j + k`, entry (i,j,k,l)
//! of a 2×2×2×2 at `8i + 4j + 2k + l`. For the 2×2×2 shape the corner letters
//! used throughout the crate are
//!
//! ```text
//! a=(0,0,0)  b=(0,0,1)  c=(0,1,0)  d=(0,1,1)
//! e=(1,0,0)  f=(1,0,1)  g=(1,1,0)  h=(1,1,1)
//! ```
//!
//! i.e. the two 2×2 slices (a b; c d) and (e f; g h) are the i = 0 and i = 1
//! layers, j indexes rows and k columns. Under this convention the Cayley
//! formula in [`crate::invariants`] agrees with the singularity
//! characterisation of the trilinear form; see the tests there.

use num_traits::{One, Zero};

use crate::rational::{rat_int, Rational};
use crate::Error;

/// Exact rational 2-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector2 {
    pub c0: Rational,
    pub c1: Rational,
}

impl Vector2 {
    pub fn new(c0: Rational, c1: Rational) -> Self {
        Vector2 { c0, c1 }
    }

    pub fn from_ints(c0: i64, c1: i64) -> Self {
        Vector2::new(rat_int(c0), rat_int(c1))
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn component(&self, i: usize) -> &Rational {
        match i {
            0 => &self.c0,
            1 => &self.c1,
            _ => panic!("vector component index out of range"),
        }
    }
}

/// Exact rational 2×2 matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub m00: Rational,
    pub m01: Rational,
    pub m10: Rational,
    pub m11: Rational,
}

impl Matrix2 {
    pub fn new(m00: Rational, m01: Rational, m10: Rational, m11: Rational) -> Self {
        Matrix2 { m00, m01, m10, m11 }
    }

    pub fn from_ints(m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        Matrix2::new(rat_int(m00), rat_int(m01), rat_int(m10), rat_int(m11))
    }

    pub fn identity() -> Self {
        Matrix2::from_ints(1, 0, 0, 1)
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        match (row, col) {
            (0, 0) => &self.m00,
            (0, 1) => &self.m01,
            (1, 0) => &self.m10,
            (1, 1) => &self.m11,
            _ => panic!("matrix index out of range"),
        }
    }

    pub fn det(&self) -> Rational {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }

    pub fn is_zero(&self) -> bool {
        self.m00.is_zero() && self.m01.is_zero() && self.m10.is_zero() && self.m11.is_zero()
    }

    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        Matrix2::new(
            &self.m00 * &other.m00 + &self.m01 * &other.m10,
            &self.m00 * &other.m01 + &self.m01 * &other.m11,
            &self.m10 * &other.m00 + &self.m11 * &other.m10,
            &self.m10 * &other.m01 + &self.m11 * &other.m11,
        )
    }

    /// Inverse, when `det ≠ 0`.
    pub fn inverse(&self) -> Option<Matrix2> {
        let det = self.det();
        if det.is_zero() {
            return None;
        }
        Some(Matrix2::new(
            &self.m11 / &det,
            -(&self.m01 / &det),
            -(&self.m10 / &det),
            &self.m00 / &det,
        ))
    }

    /// Matrix–vector product.
    pub fn apply(&self, v: &Vector2) -> Vector2 {
        Vector2::new(
            &self.m00 * &v.c0 + &self.m01 * &v.c1,
            &self.m10 * &v.c0 + &self.m11 * &v.c1,
        )
    }
}

fn check_unimodular(g: &Matrix2) -> Result<(), Error> {
    if g.det() != Rational::one() {
        return Err(Error::NonUnimodular);
    }
    Ok(())
}

fn check_permutation<const N: usize>(perm: [usize; N]) {
    let mut seen = [false; N];
    for p in perm {
        assert!(p < N && !seen[p], "not a permutation of the tensor axes");
        seen[p] = true;
    }
}

/// 2×2×2 hypermatrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermatrix222 {
    entries: [Rational; 8],
}

impl Hypermatrix222 {
    pub fn new(entries: [Rational; 8]) -> Self {
        Hypermatrix222 { entries }
    }

    pub fn from_ints(entries: [i64; 8]) -> Self {
        Hypermatrix222::new(entries.map(rat_int))
    }

    pub fn zero() -> Self {
        Hypermatrix222::new(std::array::from_fn(|_| Rational::zero()))
    }

    /// Rank-one hypermatrix t ⊗ u ⊗ v.
    pub fn rank_one(t: &Vector2, u: &Vector2, v: &Vector2) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    *out.get_mut(i, j, k) = t.component(i) * u.component(j) * v.component(k);
                }
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.entries[4 * i + 2 * j + k]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Rational {
        &mut self.entries[4 * i + 2 * j + k]
    }

    /// Flat entries in lexicographic order (last index fastest).
    pub fn entries(&self) -> &[Rational; 8] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        Hypermatrix222::new(std::array::from_fn(|n| &self.entries[n] * lambda))
    }

    /// Act with a unimodular `g` on one slot: a'[.., i', ..] = Σᵢ g[i',i]·a[.., i, ..].
    pub fn apply_sl2(&self, slot: usize, g: &Matrix2) -> Result<Self, Error> {
        assert!(slot < 3, "slot out of range for a 2×2×2 hypermatrix");
        check_unimodular(g)?;
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let idx = [i, j, k];
                    let mut acc = Rational::zero();
                    for m in 0..2 {
                        let mut src = idx;
                        src[slot] = m;
                        acc += g.get(idx[slot], m) * self.get(src[0], src[1], src[2]);
                    }
                    *out.get_mut(i, j, k) = acc;
                }
            }
        }
        Ok(out)
    }

    /// Relabel axes: source axis `ax` becomes destination axis `perm[ax]`,
    /// so a'[σ(idx)] = a[idx]. Panics on an invalid permutation.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Self {
        check_permutation(perm);
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let idx = [i, j, k];
                    let mut dst = [0usize; 3];
                    for ax in 0..3 {
                        dst[perm[ax]] = idx[ax];
                    }
                    *out.get_mut(dst[0], dst[1], dst[2]) = self.get(i, j, k).clone();
                }
            }
        }
        out
    }
}

/// 2×2×2×2 hypermatrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypermatrix2222 {
    entries: [Rational; 16],
}

impl Hypermatrix2222 {
    pub fn new(entries: [Rational; 16]) -> Self {
        Hypermatrix2222 { entries }
    }

    pub fn from_ints(entries: [i64; 16]) -> Self {
        Hypermatrix2222::new(entries.map(rat_int))
    }

    pub fn zero() -> Self {
        Hypermatrix2222::new(std::array::from_fn(|_| Rational::zero()))
    }

    /// Rank-one hypermatrix w ⊗ t ⊗ u ⊗ v.
    pub fn rank_one(w: &Vector2, t: &Vector2, u: &Vector2, v: &Vector2) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        *out.get_mut(i, j, k, l) = w.component(i)
                            * t.component(j)
                            * u.component(k)
                            * v.component(l);
                    }
                }
            }
        }
        out
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Rational {
        &self.entries[8 * i + 4 * j + 2 * k + l]
    }

    pub fn get_mut(&mut self, i: usize, j: usize, k: usize, l: usize) -> &mut Rational {
        &mut self.entries[8 * i + 4 * j + 2 * k + l]
    }

    /// Flat entries in lexicographic order (last index fastest).
    pub fn entries(&self) -> &[Rational; 16] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        Hypermatrix2222::new(std::array::from_fn(|n| &self.entries[n] * lambda))
    }

    /// Contract the last slot with `x`: b[i,j,k] = a[i,j,k,0]·x₀ + a[i,j,k,1]·x₁.
    pub fn contract_last(&self, x: &Vector2) -> Hypermatrix222 {
        let mut out = Hypermatrix222::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    *out.get_mut(i, j, k) =
                        self.get(i, j, k, 0) * &x.c0 + self.get(i, j, k, 1) * &x.c1;
                }
            }
        }
        out
    }

    /// Contract the last two slots: M[i,j] = Σ_{k,l} a[i,j,k,l]·y_k·x_l.
    pub fn contract_to_matrix(&self, y: &Vector2, x: &Vector2) -> Matrix2 {
        let mut m = [[Rational::zero(), Rational::zero()], [
            Rational::zero(),
            Rational::zero(),
        ]];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = Rational::zero();
                for k in 0..2 {
                    for l in 0..2 {
                        acc += self.get(i, j, k, l) * y.component(k) * x.component(l);
                    }
                }
                *cell = acc;
            }
        }
        let [[m00, m01], [m10, m11]] = m;
        Matrix2::new(m00, m01, m10, m11)
    }

    /// Act with a unimodular `g` on one slot; see [`Hypermatrix222::apply_sl2`].
    pub fn apply_sl2(&self, slot: usize, g: &Matrix2) -> Result<Self, Error> {
        assert!(slot < 4, "slot out of range for a 2×2×2×2 hypermatrix");
        check_unimodular(g)?;
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let idx = [i, j, k, l];
                        let mut acc = Rational::zero();
                        for m in 0..2 {
                            let mut src = idx;
                            src[slot] = m;
                            acc += g.get(idx[slot], m) * self.get(src[0], src[1], src[2], src[3]);
                        }
                        *out.get_mut(i, j, k, l) = acc;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Relabel axes: source axis `ax` becomes destination axis `perm[ax]`.
    pub fn permute_axes(&self, perm: [usize; 4]) -> Self {
        check_permutation(perm);
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        let idx = [i, j, k, l];
                        let mut dst = [0usize; 4];
                        for ax in 0..4 {
                            dst[perm[ax]] = idx[ax];
                        }
                        *out.get_mut(dst[0], dst[1], dst[2], dst[3]) =
                            self.get(i, j, k, l).clone();
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn all_ones() -> Hypermatrix2222 {
        Hypermatrix2222::from_ints([1; 16])
    }

    #[test]
    fn contract_last_basis_vector_selects_slice() {
        let a4 = Hypermatrix2222::from_ints([
            3, -1, 4, 1, -5, 9, 2, -6, 5, 3, -5, 8, 9, -7, 9, 3,
        ]);
        let b = a4.contract_last(&Vector2::from_ints(1, 0));
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert_eq!(b.get(i, j, k), a4.get(i, j, k, 0));
                }
            }
        }
        assert!(a4.contract_last(&Vector2::from_ints(0, 0)).is_zero());
    }

    #[test]
    fn contract_last_all_ones() {
        let b = all_ones().contract_last(&Vector2::from_ints(2, 3));
        assert!(b.entries().iter().all(|e| *e == rat_int(5)));
    }

    #[test]
    fn contract_to_matrix_examples() {
        let a4 = Hypermatrix2222::from_ints([
            2, 7, 1, 8, 2, 8, 1, 8, 2, 8, 4, 5, 9, 0, 4, 5,
        ]);
        let m = a4.contract_to_matrix(&Vector2::from_ints(1, 0), &Vector2::from_ints(1, 0));
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), a4.get(i, j, 0, 0));
            }
        }
        let ones = all_ones().contract_to_matrix(&Vector2::from_ints(1, 1), &Vector2::from_ints(1, 1));
        assert_eq!(ones, Matrix2::from_ints(4, 4, 4, 4));
    }

    #[test]
    fn contract_to_matrix_matches_two_stage_contraction() {
        let a4 = Hypermatrix2222::from_ints([
            1, -2, 3, 0, 4, 5, -6, 7, -8, 9, 1, -1, 2, -3, 4, 6,
        ]);
        let y = Vector2::from_ints(3, -2);
        let x = Vector2::from_ints(-1, 5);
        let m = a4.contract_to_matrix(&y, &x);
        let b = a4.contract_last(&x);
        for i in 0..2 {
            for j in 0..2 {
                let two_stage = b.get(i, j, 0) * &y.c0 + b.get(i, j, 1) * &y.c1;
                assert_eq!(*m.get(i, j), two_stage);
            }
        }
    }

    #[test]
    fn sl2_identity_and_inverse() {
        let a = Hypermatrix222::from_ints([3, 1, -4, 1, 5, -9, 2, 6]);
        assert_eq!(a.apply_sl2(1, &Matrix2::identity()).unwrap(), a);

        let g = Matrix2::from_ints(2, 3, 1, 2); // det 1
        let ginv = g.inverse().unwrap();
        for slot in 0..3 {
            let back = a.apply_sl2(slot, &g).unwrap().apply_sl2(slot, &ginv).unwrap();
            assert_eq!(back, a);
        }
    }

    #[test]
    fn sl2_rejects_non_unimodular() {
        let a = Hypermatrix222::from_ints([1; 8]);
        let g = Matrix2::from_ints(2, 0, 0, 1); // det 2
        assert_eq!(a.apply_sl2(0, &g), Err(Error::NonUnimodular));
        let flip = Matrix2::from_ints(0, 1, 1, 0); // det -1
        assert_eq!(a.apply_sl2(0, &flip), Err(Error::NonUnimodular));
    }

    #[test]
    fn sl2_composition_is_matrix_product() {
        let a = Hypermatrix2222::from_ints([
            2, -3, 5, -7, 11, -13, 17, -19, 23, -29, 31, -37, 41, -43, 47, -53,
        ]);
        let g1 = Matrix2::from_ints(1, 2, 0, 1);
        let g2 = Matrix2::from_ints(1, 0, 3, 1);
        let seq = a.apply_sl2(2, &g2).unwrap().apply_sl2(2, &g1).unwrap();
        let prod = a.apply_sl2(2, &g1.mul(&g2)).unwrap();
        assert_eq!(seq, prod);
        // distinct slots commute
        let ab = a.apply_sl2(0, &g1).unwrap().apply_sl2(3, &g2).unwrap();
        let ba = a.apply_sl2(3, &g2).unwrap().apply_sl2(0, &g1).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn permutation_round_trips() {
        let a = Hypermatrix222::from_ints([3, 1, -4, 1, 5, -9, 2, 6]);
        assert_eq!(a.permute_axes([0, 1, 2]), a);
        let swapped = a.permute_axes([1, 0, 2]);
        assert_eq!(swapped.permute_axes([1, 0, 2]), a);
        assert_eq!(*swapped.get(0, 1, 1), rat_int(-9)); // (1,0,1) of the original

        let a4 = Hypermatrix2222::from_ints([
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
        ]);
        let cycled = a4.permute_axes([1, 2, 3, 0]);
        let back = cycled
            .permute_axes([1, 2, 3, 0])
            .permute_axes([1, 2, 3, 0])
            .permute_axes([1, 2, 3, 0]);
        assert_eq!(back, a4);
    }

    proptest! {
        #[test]
        fn contract_last_is_linear(
            entries in proptest::array::uniform16(-20i64..=20),
            x0 in -10i64..=10, x1 in -10i64..=10,
            xp0 in -10i64..=10, xp1 in -10i64..=10,
            alpha in -5i64..=5, beta in -5i64..=5,
        ) {
            let a4 = Hypermatrix2222::from_ints(entries);
            let x = Vector2::from_ints(x0, x1);
            let xp = Vector2::from_ints(xp0, xp1);
            let combo = Vector2::new(
                rat_int(alpha) * &x.c0 + rat_int(beta) * &xp.c0,
                rat_int(alpha) * &x.c1 + rat_int(beta) * &xp.c1,
            );
            let lhs = a4.contract_last(&combo);
            let bx = a4.contract_last(&x).scale(&rat(alpha, 1));
            let bxp = a4.contract_last(&xp).scale(&rat(beta, 1));
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        prop_assert_eq!(lhs.get(i, j, k).clone(), bx.get(i, j, k) + bxp.get(i, j, k));
                    }
                }
            }
        }
    }
}
