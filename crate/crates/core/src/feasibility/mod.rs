//! Feasibility certificates for the two quadratic constraint systems, the
//! vertex-extendability parameter check and the scalar inequality audit.

mod poly;
mod scan;
mod system;

pub use poly::{quadratic_roots, rational_sqrt, Negativity, Poly};
pub use scan::{scan_orthant, scan_simplex, ScanConfig, SlackScan, NEAR_ZERO, REFINE_BITS};
pub use system::{Constraint, ConstraintSystem, Domain, FloatSystem, Monomial, QuadPoly};

mod quadratic;

pub use quadratic::{
    degree_threshold, gamma_coefficient, gamma_scan, gamma_system, gamma_total_cap, opt1_certificate,
    opt2_certificate, weakened_threshold, wheel_scan, wheel_system,
};

mod audit;
mod params;

pub use audit::{
    clique_excess, neighbourhood_ratio_margin, numeric_claim_audit, positive_from, seven_clique_margin, RangeClaim,
    LARGE_N,
};
pub use params::{aes_parameter_check, half_max_terms, ExtendabilityParams};
