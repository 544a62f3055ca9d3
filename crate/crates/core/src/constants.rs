//! Physical constants threaded explicitly through every operation.

/// Speed of light and vacuum permittivity. The vacuum permeability is always
/// derived as `1/(eps0 c^2)` so the relation `mu0 eps0 c^2 = 1` holds exactly
/// and cannot drift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub c: f64,
    pub eps0: f64,
}

impl Constants {
    /// SI values: c in m/s, eps0 in F/m.
    pub const fn si() -> Self {
        Constants {
            c: 299_792_458.0,
            eps0: 8.854_187_812_8e-12,
        }
    }

    /// Natural units, `c = eps0 = 1`. Used by the test suites.
    pub const fn natural() -> Self {
        Constants { c: 1.0, eps0: 1.0 }
    }

    /// Derived vacuum permeability.
    pub fn mu0(&self) -> f64 {
        1.0 / (self.eps0 * self.c * self.c)
    }
}

impl Default for Constants {
    fn default() -> Self {
        Constants::natural()
    }
}
