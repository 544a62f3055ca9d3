//! Pointwise exterior algebra on a four-dimensional real vector space.
//!
//! A [`KForm`] of degree k holds the C(4,k) independent components of a
//! totally antisymmetric covariant tensor, listed in lexicographic order of
//! strictly increasing index tuples:
//!
//! ```text
//! k = 0   ()
//! k = 1   (0) (1) (2) (3)
//! k = 2   (01) (02) (03) (12) (13) (23)
//! k = 3   (012) (013) (023) (123)
//! k = 4   (0123)
//! ```
//!
//! The wedge product follows the determinant convention: for 1-forms,
//! `(a ^ b)_{ij} = a_i b_j - a_j b_i`, and a basis product `dx^I ^ dx^J` is
//! the signed basis form on the merged index set.

use crate::error::{Error, Result};

pub const DIM: usize = 4;

/// Number of stored components per degree.
pub const COMPONENT_COUNT: [usize; 5] = [1, 4, 6, 4, 1];

/// Increasing index tuples per degree, lexicographic order.
pub const INDEX_SETS: [&[&[usize]]; 5] = [
    &[&[]],
    &[&[0], &[1], &[2], &[3]],
    &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]],
    &[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]],
    &[&[0, 1, 2, 3]],
];

/// Slot of a strictly increasing index tuple within its degree's listing.
pub(crate) fn slot_of(degree: usize, indices: &[usize]) -> usize {
    INDEX_SETS[degree]
        .iter()
        .position(|set| *set == indices)
        .expect("indices must be strictly increasing and in range")
}

/// Sorts `indices` in place, returning the permutation sign, or `None` when
/// an index repeats (the component is then zero by antisymmetry).
pub(crate) fn sort_with_sign(indices: &mut [usize]) -> Option<f64> {
    let mut sign = 1.0;
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if indices.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// Sign of the permutation taking `perm` (distinct entries assumed) to
/// increasing order.
pub(crate) fn permutation_sign(perm: &[usize]) -> f64 {
    let mut sign = 1.0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// A contravariant vector at a point.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vector4(pub [f64; 4]);

impl Vector4 {
    pub fn zero() -> Self {
        Vector4([0.0; 4])
    }

    pub fn basis(a: usize) -> Self {
        let mut v = [0.0; 4];
        v[a] = 1.0;
        Vector4(v)
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut v = self.0;
        for x in &mut v {
            *x *= s;
        }
        Vector4(v)
    }

    pub fn add(&self, other: &Vector4) -> Self {
        let mut v = self.0;
        for (x, y) in v.iter_mut().zip(other.0) {
            *x += y;
        }
        Vector4(v)
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

/// Degree-k antisymmetric covariant tensor, stored compressed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KForm {
    degree: usize,
    comps: [f64; 6],
}

impl KForm {
    /// The zero form of the given degree. Panics on degree > 4; degrees are
    /// structural, not data.
    pub fn zero(degree: usize) -> Self {
        assert!(degree <= 4, "no {degree}-forms in four dimensions");
        KForm {
            degree,
            comps: [0.0; 6],
        }
    }

    pub fn scalar(value: f64) -> Self {
        let mut f = KForm::zero(0);
        f.comps[0] = value;
        f
    }

    pub fn one_form(components: [f64; 4]) -> Self {
        let mut f = KForm::zero(1);
        f.comps[..4].copy_from_slice(&components);
        f
    }

    pub fn two_form(components: [f64; 6]) -> Self {
        KForm {
            degree: 2,
            comps: components,
        }
    }

    pub fn three_form(components: [f64; 4]) -> Self {
        let mut f = KForm::zero(3);
        f.comps[..4].copy_from_slice(&components);
        f
    }

    pub fn four_form(value: f64) -> Self {
        let mut f = KForm::zero(4);
        f.comps[0] = value;
        f
    }

    pub fn from_components(degree: usize, components: &[f64]) -> Result<Self> {
        if degree > 4 || components.len() != COMPONENT_COUNT[degree] {
            return Err(Error::DegreeMismatch {
                expected: degree.min(4),
                found: components.len(),
            });
        }
        let mut f = KForm::zero(degree);
        f.comps[..components.len()].copy_from_slice(components);
        Ok(f)
    }

    /// Basis form for the given stored slot, e.g. `basis(2, 0) = dx0 ^ dx1`.
    pub fn basis(degree: usize, slot: usize) -> Self {
        let mut f = KForm::zero(degree);
        assert!(slot < COMPONENT_COUNT[degree]);
        f.comps[slot] = 1.0;
        f
    }

    /// Coordinate 1-form `dx^a`.
    pub fn dx(a: usize) -> Self {
        KForm::basis(1, a)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        COMPONENT_COUNT[self.degree]
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Stored components in lexicographic order.
    pub fn components(&self) -> &[f64] {
        &self.comps[..COMPONENT_COUNT[self.degree]]
    }

    pub fn components_mut(&mut self) -> &mut [f64] {
        &mut self.comps[..COMPONENT_COUNT[self.degree]]
    }

    /// Full-array component for arbitrary index order: zero on repeated
    /// indices, otherwise the stored value times the sorting sign, so the
    /// expanded array is exactly antisymmetric by construction.
    pub fn component(&self, indices: &[usize]) -> f64 {
        assert_eq!(indices.len(), self.degree, "index count must match degree");
        let mut sorted = [0usize; 4];
        let sorted = &mut sorted[..indices.len()];
        sorted.copy_from_slice(indices);
        match sort_with_sign(sorted) {
            None => 0.0,
            Some(sign) => sign * self.comps[slot_of(self.degree, sorted)],
        }
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = *self;
        for x in out.components_mut() {
            *x *= s;
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.components().iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Graded-antisymmetric product. Rejects degree overflow.
    pub fn wedge(&self, other: &KForm) -> Result<KForm> {
        let (p, q) = (self.degree, other.degree);
        if p + q > 4 {
            return Err(Error::DegreeOverflow { p, q });
        }
        let mut out = KForm::zero(p + q);
        for (i, left) in INDEX_SETS[p].iter().enumerate() {
            let a = self.comps[i];
            if a == 0.0 {
                continue;
            }
            'rhs: for (j, right) in INDEX_SETS[q].iter().enumerate() {
                let b = other.comps[j];
                if b == 0.0 {
                    continue;
                }
                for idx in right.iter() {
                    if left.contains(idx) {
                        continue 'rhs;
                    }
                }
                let mut merged = [0usize; 4];
                let merged = &mut merged[..p + q];
                merged[..p].copy_from_slice(left);
                merged[p..].copy_from_slice(right);
                let sign = permutation_sign(merged);
                let mut sorted = [0usize; 4];
                let sorted = &mut sorted[..p + q];
                sorted.copy_from_slice(merged);
                sorted.sort_unstable();
                out.comps[slot_of(p + q, sorted)] += sign * a * b;
            }
        }
        Ok(out)
    }

    /// Contraction of the first slot with `x`: `(i_X w)_{a2..ak} = X^a w_{a a2..ak}`.
    pub fn interior(&self, x: &Vector4) -> Result<KForm> {
        let k = self.degree;
        if k == 0 {
            return Err(Error::InteriorOfScalar);
        }
        let mut out = KForm::zero(k - 1);
        for (slot, set) in INDEX_SETS[k].iter().enumerate() {
            let w = self.comps[slot];
            if w == 0.0 {
                continue;
            }
            // Removing the index at position p from an increasing tuple
            // costs the sign (-1)^p to bring it to the front.
            for (p, &a) in set.iter().enumerate() {
                let mut rest = [0usize; 4];
                let rest = &mut rest[..k - 1];
                let mut r = 0;
                for (q, &b) in set.iter().enumerate() {
                    if q != p {
                        rest[r] = b;
                        r += 1;
                    }
                }
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                out.comps[slot_of(k - 1, rest)] += sign * x.0[a] * w;
            }
        }
        Ok(out)
    }
}

impl std::ops::Add for KForm {
    type Output = KForm;
    fn add(self, rhs: KForm) -> KForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in form addition");
        let mut out = self;
        for (x, y) in out.comps.iter_mut().zip(rhs.comps) {
            *x += y;
        }
        out
    }
}

impl std::ops::Sub for KForm {
    type Output = KForm;
    fn sub(self, rhs: KForm) -> KForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in form subtraction");
        let mut out = self;
        for (x, y) in out.comps.iter_mut().zip(rhs.comps) {
            *x -= y;
        }
        out
    }
}

impl std::ops::Neg for KForm {
    type Output = KForm;
    fn neg(self) -> KForm {
        self.scaled(-1.0)
    }
}

/// A rank-2 covariant tensor, not necessarily symmetric. Carrier for
/// stress-energy components, outer products and metric perturbations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Rank2Tensor(pub [[f64; 4]; 4]);

impl Rank2Tensor {
    pub fn zero() -> Self {
        Rank2Tensor([[0.0; 4]; 4])
    }

    /// Outer product of two 1-forms: `(a (x) b)_{cd} = a_c b_d`.
    pub fn outer(a: &KForm, b: &KForm) -> Self {
        assert_eq!(a.degree(), 1);
        assert_eq!(b.degree(), 1);
        let mut t = [[0.0; 4]; 4];
        for (c, row) in t.iter_mut().enumerate() {
            for (d, x) in row.iter_mut().enumerate() {
                *x = a.components()[c] * b.components()[d];
            }
        }
        Rank2Tensor(t)
    }

    /// `a (x) b + b (x) a`.
    pub fn symmetric_outer(a: &KForm, b: &KForm) -> Self {
        Rank2Tensor::outer(a, b).add(&Rank2Tensor::outer(b, a))
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut t = self.0;
        for row in &mut t {
            for x in row {
                *x *= s;
            }
        }
        Rank2Tensor(t)
    }

    pub fn add(&self, other: &Rank2Tensor) -> Self {
        let mut t = self.0;
        for (row, orow) in t.iter_mut().zip(other.0) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x += y;
            }
        }
        Rank2Tensor(t)
    }

    pub fn sub(&self, other: &Rank2Tensor) -> Self {
        self.add(&other.scaled(-1.0))
    }

    /// Bilinear evaluation `T(u, v)`.
    pub fn apply(&self, u: &Vector4, v: &Vector4) -> f64 {
        let mut s = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                s += self.0[a][b] * u.0[a] * v.0[b];
            }
        }
        s
    }

    /// The 1-form `T(u, -)`.
    pub fn contract_left(&self, u: &Vector4) -> KForm {
        let mut w = [0.0; 4];
        for (b, x) in w.iter_mut().enumerate() {
            for a in 0..4 {
                *x += self.0[a][b] * u.0[a];
            }
        }
        KForm::one_form(w)
    }

    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .fold(0.0, |m: f64, x| m.max(x.abs()))
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                worst = worst.max((self.0[a][b] - self.0[b][a]).abs());
            }
        }
        worst
    }
}
