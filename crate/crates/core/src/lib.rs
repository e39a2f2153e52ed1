//! Exact finite-geometry toolkit for point multisets of AG(2,q).
//!
//! Given a multiset of affine points, the crate finds the (q-λ)-uniform
//! directions and their renitent lines, builds dual algebraic envelopes of
//! small class containing those lines, and checks the related counting
//! bounds by brute force.

pub mod envelope;
pub mod generators;
pub mod gf;
pub mod pipeline;
pub mod plane;
pub mod poly;
pub mod report;
pub mod szw;
pub mod uniformity;

pub use gf::{Elem, Field, FieldError};
pub use plane::{Collineation, Direction, PlaneError, ProjLine, ProjPoint};
pub use poly::{BiPoly, PolyError, PolyMatrix, TriHomPoly, UniPoly};
pub use uniformity::{Classification, DirectionReport, PointMultiset, RenitentLine, UniformityError};
pub use envelope::{EnvelopeCurve, EnvelopeError, MultiplicityMap, Provenance, VerificationReport, WeightProfile};
pub use generators::{GenError, GenSpec, NormConic, PlantedInstance};
pub use szw::{DichotomyReport, GcdProfile, IndexReport, SzwError};
