//! Invariant potential theory on the unit ball of C^n, at desk scale.
//!
//! The crate provides the Moebius geometry of the ball, the radial and
//! two-point Green kernels of the invariant Laplacian, nonnegative Borel
//! measures with their boundary-weighted companions, Monte Carlo integration
//! on the unit sphere, Carleson-region smoothness functionals, growth
//! exponent fits, and a scenario engine that verifies the expected
//! equivalences between mean growth of Green potentials and measure
//! smoothness on finite grids.

pub mod caps;
pub mod error;
pub mod fit;
pub mod geometry;
pub mod kernel;
pub mod measure;
pub mod quad;
pub mod scenario;
pub mod smoothness;
pub mod sphere;
pub mod stream;

pub use error::{Error, Result};
pub use fit::{fit_exponent, GrowthFit};
pub use geometry::{aniso_dist, in_region, inner, mobius, mobius_norm, Point, Region};
pub use kernel::{green_g, lemma_bounds, little_g, EvalPolicy, GreenKernelParams};
pub use measure::{Measure, RadialDensity, WeightedMeasure};
pub use smoothness::{gauge_compare, lemma1_check, smoothness_lp, GaugeFunction, SphereMeasure};
pub use sphere::{mp, potential_at, sample_sphere, MeanEstimate, SphereSampler};
