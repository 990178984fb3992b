use std::fmt;

use serde::Serialize;

/// Which description produced a moment set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Realm {
    Classical,
    Quantum,
}

impl Realm {
    pub fn name(self) -> &'static str {
        match self {
            Realm::Classical => "classical",
            Realm::Quantum => "quantum",
        }
    }
}

impl fmt::Display for Realm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How a moment set was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentMethod {
    ClosedForm,
    Quadrature,
    Trajectory,
}

impl MomentMethod {
    pub fn name(self) -> &'static str {
        match self {
            MomentMethod::ClosedForm => "closed-form",
            MomentMethod::Quadrature => "quadrature",
            MomentMethod::Trajectory => "trajectory",
        }
    }
}

impl fmt::Display for MomentMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First and second moments of the scaled position `X = x/A` and momentum
/// `P = p/sqrt(2mE)`, with the derived variances and their product.
///
/// For the bouncer the scaled height `Z = z/A` occupies the `x` slots.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScaledMoments {
    pub mean_x: f64,
    pub mean_x2: f64,
    pub mean_p: f64,
    pub mean_p2: f64,
    pub var_x: f64,
    pub var_p: f64,
    pub product: f64,
    pub realm: Realm,
    pub method: MomentMethod,
}

impl ScaledMoments {
    /// Builds the set from the four raw moments.
    ///
    /// Variances are clamped at zero so that rounding in `⟨X²⟩ - ⟨X⟩²`
    /// cannot produce a negative value.
    pub fn from_raw(mean_x: f64, mean_x2: f64, mean_p: f64, mean_p2: f64, realm: Realm, method: MomentMethod) -> Self {
        let var_x = (mean_x2 - mean_x * mean_x).max(0.0);
        let var_p = (mean_p2 - mean_p * mean_p).max(0.0);
        ScaledMoments {
            mean_x,
            mean_x2,
            mean_p,
            mean_p2,
            var_x,
            var_p,
            product: var_x * var_p,
            realm,
            method,
        }
    }

    /// The six compared fields, in the order
    /// `mean_x, mean_x2, mean_p, mean_p2, var_x, var_p`.
    pub fn fields(&self) -> [f64; 6] {
        [
            self.mean_x,
            self.mean_x2,
            self.mean_p,
            self.mean_p2,
            self.var_x,
            self.var_p,
        ]
    }

    pub const FIELD_NAMES: [&'static str; 6] = ["mean_x", "mean_x2", "mean_p", "mean_p2", "var_x", "var_p"];

    /// Largest absolute difference over [`fields`](Self::fields).
    pub fn max_abs_deviation(&self, other: &ScaledMoments) -> f64 {
        self.fields()
            .iter()
            .zip(other.fields())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variances_and_product() {
        let m = ScaledMoments::from_raw(2.0 / 3.0, 8.0 / 15.0, 0.0, 1.0 / 3.0, Realm::Classical, MomentMethod::ClosedForm);
        assert!((m.var_x - 4.0 / 45.0).abs() < 1e-15);
        assert!((m.product - 4.0 / 135.0).abs() < 1e-15);
    }

    #[test]
    fn rounding_never_makes_a_negative_variance() {
        let m = ScaledMoments::from_raw(0.1, 0.01 - 1e-18, 0.0, 0.0, Realm::Quantum, MomentMethod::Quadrature);
        assert_eq!(m.var_x, 0.0);
        assert_eq!(m.product, 0.0);
    }

    #[test]
    fn deviation_covers_all_six_fields() {
        let a = ScaledMoments::from_raw(0.0, 0.5, 0.0, 0.5, Realm::Classical, MomentMethod::ClosedForm);
        let b = ScaledMoments::from_raw(0.0, 0.5, 0.0, 0.75, Realm::Quantum, MomentMethod::Quadrature);
        assert_eq!(a.max_abs_deviation(&b), 0.25);
    }
}
