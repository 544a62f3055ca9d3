//! Observer-relative decomposition and reconstruction of the field and
//! excitation 2-forms.
//!
//! An observer is a unit future-pointing timelike 4-velocity U. Relative to
//! U, a field 2-form F splits into the electric 1-form and magnetic-induction
//! 1-form
//!
//! ```text
//! e = i_U F,       c b = i_U (star F),
//! F = e ^ u - star(c b ^ u),        u = g(U, -)
//! ```
//!
//! and the excitation 2-form G splits the same way into the displacement d
//! and magnetic field h with the placement `h/c = i_U (star G)`. All four
//! 1-forms annihilate U ("spatial").

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::forms::{KForm, Vector4};
use crate::metric::Metric;

/// Unit-norm tolerance accepted when validating a 4-velocity.
const UNIT_TOL: f64 = 1e-12;
/// Relative spatiality tolerance on reconstruct inputs. Beyond this the input
/// is rejected rather than silently projected; projection would mask caller
/// bugs.
const SPATIAL_TOL: f64 = 1e-9;

/// A unit future-pointing timelike 4-velocity, validated at construction
/// against the metric it will be used with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observer {
    velocity: Vector4,
}

impl Observer {
    pub fn new(velocity: Vector4, g: &Metric) -> Result<Self> {
        let norm = g.dot(&velocity, &velocity);
        if (norm + 1.0).abs() > UNIT_TOL * norm.abs().max(1.0) {
            return Err(Error::NotUnitTimelike(norm));
        }
        if velocity.0[0] <= 0.0 {
            return Err(Error::NotFuturePointing(velocity.0[0]));
        }
        Ok(Observer { velocity })
    }

    /// Normalizes a timelike direction to a unit future-pointing velocity.
    pub fn from_direction(direction: Vector4, g: &Metric) -> Result<Self> {
        let norm = g.dot(&direction, &direction);
        if norm >= 0.0 {
            return Err(Error::NotTimelike(norm));
        }
        let mut u = direction.scaled(1.0 / (-norm).sqrt());
        if u.0[0] < 0.0 {
            u = u.scaled(-1.0);
        }
        Observer::new(u, g)
    }

    /// Standard relativistic normalization of a coordinate 3-velocity,
    /// rejected at or above light speed. The candidate `(1, v/c)` is
    /// normalized against the metric, so on the flat chart this is the usual
    /// `gamma (1, v/c)`.
    pub fn from_three_velocity(v: &[f64; 3], g: &Metric, k: &Constants) -> Result<Self> {
        let speed = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if speed >= k.c {
            return Err(Error::Superluminal(speed / k.c));
        }
        let candidate = Vector4([1.0, v[0] / k.c, v[1] / k.c, v[2] / k.c]);
        Observer::from_direction(candidate, g)
    }

    pub fn velocity(&self) -> &Vector4 {
        &self.velocity
    }

    /// The metric dual `g(U, -)`.
    pub fn covelocity(&self, g: &Metric) -> KForm {
        g.flat(&self.velocity)
    }
}

/// `|i_U w|` measured against `|w|`; zero for spatial forms.
pub fn spatiality_violation(w: &KForm, u: &Vector4) -> Result<f64> {
    Ok(w.interior(u)?.max_abs())
}

/// Removes the covelocity component: `w + w(U) g(U,-)`. Exact for unit
/// timelike U.
pub fn spatial_project(w: &KForm, u: &Vector4, g: &Metric) -> KForm {
    debug_assert_eq!(w.degree(), 1);
    let wu: f64 = w
        .components()
        .iter()
        .zip(u.0.iter())
        .map(|(a, b)| a * b)
        .sum();
    *w + g.flat(u).scaled(wu)
}

pub(crate) fn ensure_spatial(w: &KForm, u: &Vector4) -> Result<()> {
    let violation = spatiality_violation(w, u)?;
    let scale = w.max_abs();
    if violation > SPATIAL_TOL * scale.max(1.0) {
        return Err(Error::NotSpatial { violation, scale });
    }
    Ok(())
}

/// Splits the field 2-form: `e = i_U F`, `b = i_U (star F) / c`.
pub fn decompose_maxwell(
    f: &KForm,
    obs: &Observer,
    g: &Metric,
    k: &Constants,
) -> Result<(KForm, KForm)> {
    if f.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: f.degree(),
        });
    }
    let u = obs.velocity();
    let e = f.interior(u)?;
    let b = g.hodge(f).interior(u)?.scaled(1.0 / k.c);
    Ok((e, b))
}

/// Rebuilds `F = e ^ u - star(c b ^ u)`. Inputs must be spatial for the
/// observer.
pub fn reconstruct_maxwell(
    e: &KForm,
    b: &KForm,
    obs: &Observer,
    g: &Metric,
    k: &Constants,
) -> Result<KForm> {
    let u = obs.velocity();
    ensure_spatial(e, u)?;
    ensure_spatial(b, u)?;
    let ut = obs.covelocity(g);
    let electric = e.wedge(&ut)?;
    let magnetic = g.hodge(&b.scaled(k.c).wedge(&ut)?);
    Ok(electric - magnetic)
}

/// Splits the excitation 2-form: `d = i_U G`, `h = c i_U (star G)`.
pub fn decompose_excitation(
    gexc: &KForm,
    obs: &Observer,
    g: &Metric,
    k: &Constants,
) -> Result<(KForm, KForm)> {
    if gexc.degree() != 2 {
        return Err(Error::DegreeMismatch {
            expected: 2,
            found: gexc.degree(),
        });
    }
    let u = obs.velocity();
    let d = gexc.interior(u)?;
    let h = g.hodge(gexc).interior(u)?.scaled(k.c);
    Ok((d, h))
}

/// Rebuilds `G = d ^ u - star((h/c) ^ u)`.
pub fn reconstruct_excitation(
    d: &KForm,
    h: &KForm,
    obs: &Observer,
    g: &Metric,
    k: &Constants,
) -> Result<KForm> {
    let u = obs.velocity();
    ensure_spatial(d, u)?;
    ensure_spatial(h, u)?;
    let ut = obs.covelocity(g);
    let displacement = d.wedge(&ut)?;
    let magnetic = g.hodge(&h.scaled(1.0 / k.c).wedge(&ut)?);
    Ok(displacement - magnetic)
}

/// The four observer-relative 1-forms of a field/excitation pair, validated
/// spatial on construction.
#[derive(Debug, Clone, Copy)]
pub struct FrameFields {
    pub e: KForm,
    pub b: KForm,
    pub d: KForm,
    pub h: KForm,
    pub observer: Observer,
    pub constants: Constants,
}

impl FrameFields {
    pub fn new(
        e: KForm,
        b: KForm,
        d: KForm,
        h: KForm,
        observer: Observer,
        constants: Constants,
    ) -> Result<Self> {
        for w in [&e, &b, &d, &h] {
            ensure_spatial(w, observer.velocity())?;
        }
        Ok(FrameFields {
            e,
            b,
            d,
            h,
            observer,
            constants,
        })
    }

    /// Decomposes a field/excitation pair relative to one observer.
    pub fn from_state(
        f: &KForm,
        gexc: &KForm,
        observer: Observer,
        g: &Metric,
        k: &Constants,
    ) -> Result<Self> {
        let (e, b) = decompose_maxwell(f, &observer, g, k)?;
        let (d, h) = decompose_excitation(gexc, &observer, g, k)?;
        FrameFields::new(e, b, d, h, observer, *k)
    }
}

/// Lorentz boost matrix along a spatial coordinate axis of the flat chart,
/// `x'^a = B^a_b x^b`. Used by the boost sweeps and the frame-covariance
/// oracles; only meaningful on the Minkowski metric.
pub fn lorentz_boost(axis: usize, beta: f64) -> [[f64; 4]; 4] {
    assert!((1..=3).contains(&axis), "boost axis must be 1, 2 or 3");
    assert!(beta.abs() < 1.0, "boost speed must be below light speed");
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    let mut b = [[0.0; 4]; 4];
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    b[0][0] = gamma;
    b[axis][axis] = gamma;
    b[0][axis] = -gamma * beta;
    b[axis][0] = -gamma * beta;
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn natural() -> Constants {
        Constants::natural()
    }

    fn rest(g: &Metric) -> Observer {
        Observer::new(Vector4([1.0, 0.0, 0.0, 0.0]), g).unwrap()
    }

    #[test]
    fn rejects_non_unit_and_past_pointing() {
        let g = Metric::minkowski();
        assert!(matches!(
            Observer::new(Vector4([2.0, 0.0, 0.0, 0.0]), &g),
            Err(Error::NotUnitTimelike(_))
        ));
        assert!(matches!(
            Observer::new(Vector4([-1.0, 0.0, 0.0, 0.0]), &g),
            Err(Error::NotFuturePointing(_))
        ));
        assert!(matches!(
            Observer::from_direction(Vector4([0.1, 1.0, 0.0, 0.0]), &g),
            Err(Error::NotTimelike(_))
        ));
    }

    #[test]
    fn three_velocity_normalization() {
        let g = Metric::minkowski();
        let k = natural();
        let obs = Observer::from_three_velocity(&[0.6, 0.0, 0.0], &g, &k).unwrap();
        let gamma = 1.25; // 1/sqrt(1 - 0.36)
        assert!((obs.velocity().0[0] - gamma).abs() < 1e-12);
        assert!((obs.velocity().0[1] - gamma * 0.6).abs() < 1e-12);
        assert!(matches!(
            Observer::from_three_velocity(&[1.0, 0.0, 0.0], &g, &k),
            Err(Error::Superluminal(_))
        ));
        // SI path: 3-velocity in m/s
        let si = Constants::si();
        let obs = Observer::from_three_velocity(&[0.6 * si.c, 0.0, 0.0], &g, &si).unwrap();
        assert!((obs.velocity().0[0] - gamma).abs() < 1e-12);
    }

    #[test]
    fn pure_electric_field_decomposes_cleanly() {
        let g = Metric::minkowski();
        let k = natural();
        let obs = rest(&g);
        // F = E dx0 ^ dx1 carries only electric content for the rest observer
        let f = KForm::dx(0).wedge(&KForm::dx(1)).unwrap().scaled(2.5);
        let (e, b) = decompose_maxwell(&f, &obs, &g, &k).unwrap();
        assert_eq!(e.components(), &[0.0, 2.5, 0.0, 0.0]);
        assert!(b.max_abs() < 1e-15);
    }

    #[test]
    fn zero_field_round_trip() {
        let g = Metric::minkowski();
        let k = natural();
        let obs = rest(&g);
        let (e, b) = decompose_maxwell(&KForm::zero(2), &obs, &g, &k).unwrap();
        assert_eq!(e.max_abs(), 0.0);
        assert_eq!(b.max_abs(), 0.0);
        let f = reconstruct_maxwell(&e, &b, &obs, &g, &k).unwrap();
        assert_eq!(f.max_abs(), 0.0);
    }

    #[test]
    fn pure_magnetic_reconstruction_has_no_electric_part() {
        let g = Metric::minkowski();
        let k = natural();
        let obs = rest(&g);
        let b = KForm::one_form([0.0, 0.4, -1.1, 0.9]);
        let f = reconstruct_maxwell(&KForm::zero(1), &b, &obs, &g, &k).unwrap();
        let e_back = f.interior(obs.velocity()).unwrap();
        assert!(e_back.max_abs() < 1e-14);
        let (_, b_back) = decompose_maxwell(&f, &obs, &g, &k).unwrap();
        assert!((b_back - b).max_abs() < 1e-14);
    }

    #[test]
    fn non_spatial_reconstruct_input_rejected() {
        let g = Metric::minkowski();
        let k = natural();
        let obs = rest(&g);
        let e = KForm::one_form([0.5, 1.0, 0.0, 0.0]); // e(U) != 0
        assert!(matches!(
            reconstruct_maxwell(&e, &KForm::zero(1), &obs, &g, &k),
            Err(Error::NotSpatial { .. })
        ));
    }

    #[test]
    fn si_factors_cancel_in_round_trip() {
        let g = Metric::minkowski();
        let k = Constants::si();
        let obs = rest(&g);
        let f = KForm::two_form([1.0, -0.5, 2.0, 3.0e8, -1.0e8, 0.5e8]);
        let (e, b) = decompose_maxwell(&f, &obs, &g, &k).unwrap();
        let back = reconstruct_maxwell(&e, &b, &obs, &g, &k).unwrap();
        assert!((back - f).max_abs() <= 1e-12 * f.max_abs());
        let (d, h) = decompose_excitation(&f, &obs, &g, &k).unwrap();
        let back = reconstruct_excitation(&d, &h, &obs, &g, &k).unwrap();
        assert!((back - f).max_abs() <= 1e-12 * f.max_abs());
    }

    #[test]
    fn boosted_observer_sees_magnetic_part_of_pure_e_state() {
        // textbook E/B mixing, checked against brute-force component
        // transformation of F into the boosted frame
        let g = Metric::minkowski();
        let k = natural();
        let beta = 0.45;
        let boost = lorentz_boost(1, beta);
        // boosted observer in original coordinates: U' = B^{-1} (1,0,0,0)
        let inv = lorentz_boost(1, -beta);
        let u = Vector4([inv[0][0], inv[1][0], inv[2][0], inv[3][0]]);
        let obs_boosted = Observer::new(u, &g).unwrap();
        let f = KForm::dx(0).wedge(&KForm::dx(2)).unwrap().scaled(1.8);

        let (e1, b1) = decompose_maxwell(&f, &obs_boosted, &g, &k).unwrap();
        assert!(b1.max_abs() > 0.1, "boost must generate magnetic content");

        // oracle: transform F componentwise, decompose with the rest observer
        let mut f_prime = KForm::zero(2);
        for (slot, set) in crate::forms::INDEX_SETS[2].iter().enumerate() {
            let mut acc = 0.0;
            for c in 0..4 {
                for d in 0..4 {
                    acc += f.component(&[c, d]) * inv[c][set[0]] * inv[d][set[1]];
                }
            }
            f_prime.components_mut()[slot] = acc;
        }
        let obs_rest = rest(&g);
        let (e2, b2) = decompose_maxwell(&f_prime, &obs_rest, &g, &k).unwrap();
        // push the boosted-frame components back: w'_a = w_b (B^{-1})^b_a
        let push = |w: &KForm| {
            let mut out = [0.0; 4];
            for (a, o) in out.iter_mut().enumerate() {
                for b in 0..4 {
                    *o += w.components()[b] * inv[b][a];
                }
            }
            KForm::one_form(out)
        };
        assert!((push(&e2) - e1).max_abs() < 1e-12);
        assert!((push(&b2) - b1).max_abs() < 1e-12);
    }
}
