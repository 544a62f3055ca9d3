//! Lorentzian metrics: index gymnastics and the Hodge map.

use nalgebra::Matrix4;

use crate::error::{Error, Result};
use crate::forms::{permutation_sign, Vector4, INDEX_SETS, KForm};

/// Relative symmetry tolerance accepted at construction.
const SYMMETRY_TOL: f64 = 1e-12;
/// Metrics with |det g| below this are rejected at construction.
const DET_FLOOR: f64 = 1e-10;
/// Residual allowed on g g^{-1} = 1.
const INVERSE_TOL: f64 = 1e-12;

/// A symmetric invertible metric of signature `(-,+,+,+)` with its inverse
/// and volume density cached. Construction validates everything once so use
/// sites never have to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metric {
    g: [[f64; 4]; 4],
    inv: [[f64; 4]; 4],
    sqrt_abs_det: f64,
}

impl Metric {
    pub fn new(components: [[f64; 4]; 4]) -> Result<Self> {
        let mut asym = 0.0f64;
        let mut scale = 0.0f64;
        for a in 0..4 {
            for b in 0..4 {
                asym = asym.max((components[a][b] - components[b][a]).abs());
                scale = scale.max(components[a][b].abs());
            }
        }
        if asym > SYMMETRY_TOL * scale.max(1.0) {
            return Err(Error::AsymmetricMetric(asym));
        }
        let m = Matrix4::from_fn(|r, c| components[r][c]);
        let det = m.determinant();
        if det.abs() < DET_FLOOR {
            return Err(Error::DegenerateMetric(det.abs()));
        }
        // Sylvester inertia from the eigenvalues of the symmetric matrix:
        // exactly one negative, three positive.
        let eigen = m.symmetric_eigenvalues();
        let negatives = eigen.iter().filter(|&&x| x < 0.0).count();
        if negatives != 1 || eigen.iter().any(|&x| x == 0.0) {
            return Err(Error::NotLorentzian);
        }
        let inv_m = m.try_inverse().ok_or(Error::DegenerateMetric(det.abs()))?;
        let residual = (m * inv_m - Matrix4::identity()).abs().max();
        if residual > INVERSE_TOL * scale.max(1.0) {
            return Err(Error::InverseResidual(residual));
        }
        let mut inv = [[0.0; 4]; 4];
        for (r, row) in inv.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x = inv_m[(r, c)];
            }
        }
        Ok(Metric {
            g: components,
            inv,
            sqrt_abs_det: det.abs().sqrt(),
        })
    }

    pub fn minkowski() -> Self {
        Metric::from_diagonal([-1.0, 1.0, 1.0, 1.0]).expect("Minkowski metric is valid")
    }

    pub fn from_diagonal(diag: [f64; 4]) -> Result<Self> {
        let mut g = [[0.0; 4]; 4];
        for (a, row) in g.iter_mut().enumerate() {
            row[a] = diag[a];
        }
        Metric::new(g)
    }

    pub fn components(&self) -> &[[f64; 4]; 4] {
        &self.g
    }

    pub fn inverse_components(&self) -> &[[f64; 4]; 4] {
        &self.inv
    }

    pub fn sqrt_abs_det(&self) -> f64 {
        self.sqrt_abs_det
    }

    /// `g(u, v)`.
    pub fn dot(&self, u: &Vector4, v: &Vector4) -> f64 {
        let mut s = 0.0;
        for a in 0..4 {
            for b in 0..4 {
                s += self.g[a][b] * u.0[a] * v.0[b];
            }
        }
        s
    }

    /// Index lowering: `flat(X) = g(X, -)`.
    pub fn flat(&self, x: &Vector4) -> KForm {
        let mut w = [0.0; 4];
        for (a, out) in w.iter_mut().enumerate() {
            for b in 0..4 {
                *out += self.g[a][b] * x.0[b];
            }
        }
        KForm::one_form(w)
    }

    /// Index raising on a 1-form; inverse of [`Metric::flat`].
    pub fn sharp(&self, w: &KForm) -> Result<Vector4> {
        if w.degree() != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: w.degree(),
            });
        }
        let mut v = [0.0; 4];
        for (a, out) in v.iter_mut().enumerate() {
            for b in 0..4 {
                *out += self.inv[a][b] * w.components()[b];
            }
        }
        Ok(Vector4(v))
    }

    /// Inverse-metric pairing of two 1-forms.
    pub fn form_dot(&self, a: &KForm, b: &KForm) -> f64 {
        debug_assert_eq!(a.degree(), 1);
        debug_assert_eq!(b.degree(), 1);
        let mut s = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                s += self.inv[i][j] * a.components()[i] * b.components()[j];
            }
        }
        s
    }

    /// All-indices-raised components of a k-form, in the same lexicographic
    /// slot order as the covariant storage.
    pub(crate) fn raised_components(&self, w: &KForm) -> [f64; 6] {
        let k = w.degree();
        let sets = INDEX_SETS[k];
        let mut out = [0.0; 6];
        // contract each covariant slot with k copies of the inverse metric
        for (slot, set) in sets.iter().enumerate() {
            let mut acc = 0.0;
            let mut b = [0usize; 4];
            loop {
                let mut coeff = 1.0;
                for (t, &i) in set.iter().enumerate() {
                    coeff *= self.inv[i][b[t]];
                }
                if coeff != 0.0 {
                    acc += coeff * w.component(&b[..k]);
                }
                // odometer over the k summation indices
                let mut t = 0;
                loop {
                    if t == k {
                        break;
                    }
                    b[t] += 1;
                    if b[t] < 4 {
                        break;
                    }
                    b[t] = 0;
                    t += 1;
                }
                if t == k {
                    break;
                }
                if k == 0 {
                    break;
                }
            }
            out[slot] = if k == 0 { w.components()[0] } else { acc };
        }
        out
    }

    /// Metric pairing `<a, b>` of two equal-degree forms (the sum over
    /// increasing index tuples, i.e. the 1/k!-normalized full contraction).
    pub fn pairing(&self, a: &KForm, b: &KForm) -> Result<f64> {
        if a.degree() != b.degree() {
            return Err(Error::DegreeMismatch {
                expected: a.degree(),
                found: b.degree(),
            });
        }
        let raised = self.raised_components(b);
        Ok(a.components()
            .iter()
            .zip(raised.iter())
            .map(|(x, y)| x * y)
            .sum())
    }

    /// The volume 4-form `sqrt|g| dx0^dx1^dx2^dx3`.
    pub fn volume_form(&self) -> KForm {
        KForm::four_form(self.sqrt_abs_det)
    }

    /// Hodge map with orientation `eps_{0123} = +1`:
    /// `(star w)_J = sqrt|g| w^I eps_{I J}` where `I` is the increasing
    /// complement of `J`. Satisfies `a ^ star b = <a, b> vol` and
    /// `star star = -(-1)^{k(4-k)}` in this signature.
    pub fn hodge(&self, w: &KForm) -> KForm {
        let k = w.degree();
        let raised = self.raised_components(w);
        let sets_in = INDEX_SETS[k];
        let sets_out = INDEX_SETS[4 - k];
        let mut out = KForm::zero(4 - k);
        for (out_slot, j_set) in sets_out.iter().enumerate() {
            // increasing complement of j_set
            let mut comp = [0usize; 4];
            let mut n = 0;
            for i in 0..4 {
                if !j_set.contains(&i) {
                    comp[n] = i;
                    n += 1;
                }
            }
            let i_set = &comp[..n];
            let in_slot = sets_in
                .iter()
                .position(|s| *s == i_set)
                .expect("complement is an increasing tuple");
            let mut concat = [0usize; 4];
            concat[..n].copy_from_slice(i_set);
            concat[n..].copy_from_slice(j_set);
            let sign = permutation_sign(&concat);
            out.components_mut()[out_slot] = self.sqrt_abs_det * sign * raised[in_slot];
        }
        out
    }
}
