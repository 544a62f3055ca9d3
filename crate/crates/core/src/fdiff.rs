//! Form-valued fields over a coordinate chart and their finite-difference
//! exterior derivative.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::forms::{slot_of, INDEX_SETS, KForm};

/// A k-form field: a callable from chart coordinates to a [`KForm`] of fixed
/// degree. Cloneable so derived fields (e.g. a Hodge-dualized field) can wrap
/// their parent.
#[derive(Clone)]
pub struct FormField {
    degree: usize,
    chart: &'static str,
    f: Arc<dyn Fn(&[f64; 4]) -> KForm + Send + Sync>,
}

impl std::fmt::Debug for FormField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FormField")
            .field("degree", &self.degree)
            .field("chart", &self.chart)
            .finish()
    }
}

impl FormField {
    pub fn new(
        degree: usize,
        chart: &'static str,
        f: impl Fn(&[f64; 4]) -> KForm + Send + Sync + 'static,
    ) -> Self {
        assert!(degree <= 4);
        FormField {
            degree,
            chart,
            f: Arc::new(f),
        }
    }

    pub fn constant(value: KForm) -> Self {
        FormField::new(value.degree(), "cartesian", move |_| value)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn chart(&self) -> &'static str {
        self.chart
    }

    pub fn evaluate(&self, x: &[f64; 4]) -> KForm {
        let w = (self.f)(x);
        assert_eq!(
            w.degree(),
            self.degree,
            "field degree must be constant over the chart"
        );
        w
    }

    /// The field `x -> pointwise(f(x))`, degree mapped accordingly.
    pub fn map(&self, degree: usize, pointwise: impl Fn(KForm) -> KForm + Send + Sync + 'static) -> Self {
        let inner = self.clone();
        FormField::new(degree, self.chart, move |x| pointwise(inner.evaluate(x)))
    }
}

/// Central-difference exterior derivative `d = dx^i ^ d/dx^i`, second-order
/// accurate. A 4-form input is rejected: there are no 5-forms in four
/// dimensions and a silent zero would mask degree bugs upstream.
pub fn ext_deriv_fd(field: &FormField, x: &[f64; 4], h: f64) -> Result<KForm> {
    let k = field.degree();
    if k == 4 {
        return Err(Error::DerivativeOfTopForm);
    }
    if h <= 0.0 {
        return Err(Error::NonPositiveStep(h));
    }
    let mut out = KForm::zero(k + 1);
    for dir in 0..4 {
        let mut xp = *x;
        let mut xm = *x;
        xp[dir] += h;
        xm[dir] -= h;
        let diff = (field.evaluate(&xp) - field.evaluate(&xm)).scaled(1.0 / (2.0 * h));
        // accumulate dx^dir ^ (d_dir w)
        for (slot, set) in INDEX_SETS[k].iter().enumerate() {
            let v = diff.components()[slot];
            if v == 0.0 || set.contains(&dir) {
                continue;
            }
            let below = set.iter().filter(|&&j| j < dir).count();
            let sign = if below % 2 == 0 { 1.0 } else { -1.0 };
            let mut merged = [0usize; 4];
            let merged = &mut merged[..k + 1];
            merged[..k].copy_from_slice(set);
            merged[k] = dir;
            merged.sort_unstable();
            out.components_mut()[slot_of(k + 1, merged)] += sign * v;
        }
    }
    Ok(out)
}

/// One step of Richardson extrapolation over [`ext_deriv_fd`]:
/// `(4 d_{h/2} - d_h) / 3`, fourth-order accurate. Fallback for fields whose
/// curvature makes the plain h = 1e-4 stencil too coarse.
pub fn ext_deriv_fd_extrapolated(field: &FormField, x: &[f64; 4], h: f64) -> Result<KForm> {
    let coarse = ext_deriv_fd(field, x, h)?;
    let fine = ext_deriv_fd(field, x, h / 2.0)?;
    Ok(fine.scaled(4.0 / 3.0) - coarse.scaled(1.0 / 3.0))
}
