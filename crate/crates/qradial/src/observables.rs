//! The observable bundle shared by all three systems.

use serde::Serialize;

/// Radial means, uncertainties, relative dispersion, and the uncertainty
/// product for one bound state, expressed in the owning system's natural
/// units (lengths in a0/Z, R, or sqrt(hbar/m omega); momenta in the
/// reciprocal scales; the product in hbar).
///
/// `mean_inv_r` and `mean_inv_r2` are `None` where the system has no
/// closed form for them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialObservables {
    pub mean_r: f64,
    pub mean_r2: f64,
    pub mean_inv_r: Option<f64>,
    pub mean_inv_r2: Option<f64>,
    pub delta_r: f64,
    pub mean_pr: f64,
    pub mean_pr2: f64,
    pub delta_pr: f64,
    pub sigma_r: f64,
    pub product: f64,
}

impl RadialObservables {
    /// Field names in declaration order; also the CSV/JSON column order.
    pub const FIELDS: [&'static str; 10] = [
        "mean_r",
        "mean_r2",
        "mean_inv_r",
        "mean_inv_r2",
        "delta_r",
        "mean_pr",
        "mean_pr2",
        "delta_pr",
        "sigma_r",
        "product",
    ];

    /// Looks a field up by name; `None` for absent optional fields.
    pub fn field(&self, name: &str) -> Option<f64> {
        match name {
            "mean_r" => Some(self.mean_r),
            "mean_r2" => Some(self.mean_r2),
            "mean_inv_r" => self.mean_inv_r,
            "mean_inv_r2" => self.mean_inv_r2,
            "delta_r" => Some(self.delta_r),
            "mean_pr" => Some(self.mean_pr),
            "mean_pr2" => Some(self.mean_pr2),
            "delta_pr" => Some(self.delta_pr),
            "sigma_r" => Some(self.sigma_r),
            "product" => Some(self.product),
            _ => None,
        }
    }
}
