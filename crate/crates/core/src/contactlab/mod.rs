//! Named verification scenarios: the ambient contact forms on spheres, the
//! stereographic disk, and the Weinstein surgery model.

mod disk;
mod result;
mod sphere;
mod weinstein;

pub use disk::{build_stereographic, stereographic_chart, verify_disk_pullback, verify_disk_pullback_control,
    verify_stereographic_image, verify_stereographic_image_control};
pub(crate) use result::{check_range, Checks};
pub use result::{Limits, ScenarioError, Status, VerificationResult};
pub use sphere::{
    sphere_points, verify_embedding_chain, verify_embedding_chain_control, verify_lagrange_certificate,
    verify_lagrange_certificate_control, verify_liouville_pairing, verify_liouville_pairing_control,
    verify_top_power, verify_top_power_control, SphereContext,
};
pub use weinstein::{
    verify_model_curve_isotropic, verify_model_curve_isotropic_control, verify_weinstein, verify_weinstein_control,
    WeinsteinContext,
};
