//! Residual checks of the field equations `dF = 0`, `d(star G) = j` on
//! analytic field configurations, plus the built-in plane-wave scenarios the
//! residual tests run on. No PDE is solved here; the exterior derivative is
//! evaluated by central differences at a point.

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::fdiff::{ext_deriv_fd, FormField};
use crate::forms::KForm;
use crate::metric::Metric;

/// Steps below this lose too many digits to cancellation to be meaningful.
const STEP_GUARD: f64 = 1e-10;

/// Finite-difference residuals of the two field equations at a point:
/// `r1 = d F`, `r2 = d(star G) - j`. Both vanish at second order in the step
/// for exact solutions.
pub fn maxwell_residuals(
    f_field: &FormField,
    g_field: &FormField,
    j_field: &FormField,
    x: &[f64; 4],
    h: f64,
    g: &Metric,
) -> Result<(KForm, KForm)> {
    if h <= 0.0 {
        return Err(Error::NonPositiveStep(h));
    }
    if h < STEP_GUARD {
        return Err(Error::StepTooSmall(h));
    }
    for (field, degree) in [(f_field, 2), (g_field, 2), (j_field, 3)] {
        if field.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: field.degree(),
            });
        }
    }
    let r1 = ext_deriv_fd(f_field, x, h)?;
    let metric = *g;
    let star_g = g_field.map(2, move |w| metric.hodge(&w));
    let r2 = ext_deriv_fd(&star_g, x, h)? - j_field.evaluate(x);
    Ok((r1, r2))
}

/// The identically-zero current 3-form.
pub fn zero_current() -> FormField {
    FormField::constant(KForm::zero(3))
}

/// Monochromatic vacuum plane wave on the flat chart.
///
/// Propagates along a spatial coordinate axis with the electric 1-form along
/// a second axis. `magnetic_ratio` scales the magnetic amplitude relative to
/// the exact-solution value: 1 gives the solution of both field equations,
/// anything else is a deliberately broken wave whose residual stays bounded
/// away from zero as the step shrinks (the negative control for the residual
/// checks).
#[derive(Debug, Clone, Copy)]
pub struct PlaneWave {
    pub amplitude: f64,
    pub angular_frequency: f64,
    pub propagation_axis: usize,
    pub polarization_axis: usize,
    pub magnetic_ratio: f64,
}

impl PlaneWave {
    pub fn new(amplitude: f64, angular_frequency: f64) -> Self {
        PlaneWave {
            amplitude,
            angular_frequency,
            propagation_axis: 1,
            polarization_axis: 2,
            magnetic_ratio: 1.0,
        }
    }

    pub fn broken(mut self, magnetic_ratio: f64) -> Self {
        self.magnetic_ratio = magnetic_ratio;
        self
    }

    /// The field 2-form `F = A cos(phi) (dx0 - r dx^p) ^ dx^q` with the null
    /// phase `phi = (omega/c)(x0 - x^p)`, written so that for r = 1 both
    /// `dF = 0` and `d star F = 0` hold exactly. The rest-frame fields are
    /// `e = A cos(phi) dx^q` and `c b = -r A cos(phi) dx^(pxq)`, so
    /// `|e| = c |b|` exactly at r = 1.
    pub fn field(&self, k: &Constants) -> Result<FormField> {
        let p = self.propagation_axis;
        let q = self.polarization_axis;
        if !(1..=3).contains(&p) || !(1..=3).contains(&q) || p == q {
            return Err(Error::BadWaveAxes {
                propagation: p,
                polarization: q,
            });
        }
        let amp = self.amplitude;
        let ratio = self.magnetic_ratio;
        let k_over_c = self.angular_frequency / k.c;
        Ok(FormField::new(2, "cartesian", move |x| {
            let phase = k_over_c * (x[0] - x[p]);
            let osc = amp * phase.cos();
            let electric = KForm::dx(0).wedge(&KForm::dx(q)).unwrap().scaled(osc);
            let magnetic = KForm::dx(p)
                .wedge(&KForm::dx(q))
                .unwrap()
                .scaled(ratio * osc);
            electric - magnetic
        }))
    }

    /// The vacuum excitation `G = eps0 F`.
    pub fn excitation(&self, k: &Constants) -> Result<FormField> {
        let eps0 = k.eps0;
        Ok(self.field(k)?.map(2, move |w| w.scaled(eps0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observer::{decompose_maxwell, Observer};
    use crate::forms::Vector4;

    const X0: [f64; 4] = [0.31, 0.7, -0.23, 0.05];

    #[test]
    fn constant_fields_have_zero_residuals() {
        let g = Metric::minkowski();
        let f = FormField::constant(KForm::two_form([1.0, 0.2, -0.4, 0.9, 2.0, -1.3]));
        let gexc = FormField::constant(KForm::two_form([0.3, -0.1, 0.8, 1.1, -0.6, 0.5]));
        let (r1, r2) = maxwell_residuals(&f, &gexc, &zero_current(), &X0, 1e-4, &g).unwrap();
        assert!(r1.max_abs() < 1e-12);
        assert!(r2.max_abs() < 1e-12);
    }

    #[test]
    fn step_guard_rejects_tiny_steps() {
        let g = Metric::minkowski();
        let f = FormField::constant(KForm::zero(2));
        let gexc = FormField::constant(KForm::zero(2));
        assert_eq!(
            maxwell_residuals(&f, &gexc, &zero_current(), &X0, 1e-11, &g).unwrap_err(),
            Error::StepTooSmall(1e-11)
        );
    }

    #[test]
    fn plane_wave_solves_both_equations_at_second_order() {
        let g = Metric::minkowski();
        let k = Constants::natural();
        for (p, q) in [(1, 2), (2, 3), (3, 1), (2, 1)] {
            let mut wave = PlaneWave::new(1.0, 1.0);
            wave.propagation_axis = p;
            wave.polarization_axis = q;
            let f = wave.field(&k).unwrap();
            let gexc = wave.excitation(&k).unwrap();
            let norm = |h: f64| {
                let (r1, r2) =
                    maxwell_residuals(&f, &gexc, &zero_current(), &X0, h, &g).unwrap();
                r1.max_abs().max(r2.max_abs())
            };
            let (c1, c2) = (norm(2e-3), norm(1e-3));
            let order = (c1 / c2).log2();
            assert!(
                (order - 2.0).abs() < 0.2,
                "axes ({p},{q}): order {order}, residuals {c1:e} {c2:e}"
            );
        }
    }

    #[test]
    fn plane_wave_satisfies_light_speed_ratio() {
        for k in [Constants::natural(), Constants::si()] {
            let g = Metric::minkowski();
            let wave = PlaneWave::new(2.0, 1.0);
            let f = wave.field(&k).unwrap().evaluate(&[0.2, 0.1, 0.0, 0.0]);
            let obs = Observer::new(Vector4([1.0, 0.0, 0.0, 0.0]), &g).unwrap();
            let (e, b) = decompose_maxwell(&f, &obs, &g, &k).unwrap();
            let e_norm = g.form_dot(&e, &e).sqrt();
            let b_norm = g.form_dot(&b, &b).sqrt();
            assert!(
                (e_norm - k.c * b_norm).abs() <= 1e-12 * e_norm,
                "|e| = {e_norm}, c|b| = {}",
                k.c * b_norm
            );
        }
    }

    #[test]
    fn broken_wave_residual_does_not_converge() {
        let g = Metric::minkowski();
        let k = Constants::natural();
        let wave = PlaneWave::new(1.0, 1.0).broken(0.7);
        let f = wave.field(&k).unwrap();
        let gexc = wave.excitation(&k).unwrap();
        let norm = |h: f64| {
            let (r1, r2) = maxwell_residuals(&f, &gexc, &zero_current(), &X0, h, &g).unwrap();
            r1.max_abs().max(r2.max_abs())
        };
        let fine = norm(1e-4);
        let finer = norm(5e-5);
        assert!(fine > 0.05, "broken wave residual must stay large");
        assert!((fine / finer - 1.0).abs() < 1e-3, "residual has converged to a nonzero value");
    }

    #[test]
    fn bad_axes_rejected() {
        let k = Constants::natural();
        let mut wave = PlaneWave::new(1.0, 1.0);
        wave.polarization_axis = 1;
        assert!(matches!(
            wave.field(&k),
            Err(Error::BadWaveAxes { .. })
        ));
    }
}
