//! Exact construction and certification of totally ramified covers of the
//! Legendre elliptic curves `y^2 = x(x+1)(x+t)`, together with the
//! combinatorial (origami) and degeneration models of the same covers.

pub mod conformance;
pub mod curves;
pub mod degeneration;
pub mod document;
pub mod error;
pub mod exact;
pub mod family;
pub mod origami;

pub use curves::{Cover, CoverMap, HyperellipticCurve, IdentityCertificate, RamificationReport};
pub use degeneration::{deform, degenerate_cover, Deformation, DeformationAnsatz, DeformationReport};
pub use document::{CertificateBlock, CoverDocument};
pub use error::{Error, Result};
pub use exact::{LinearSystem, Poly, QPoly, RatFunc, Rational, TxPoly, Var};
pub use family::{build_family, j_poly, k_poly, FamilyCertificate, FamilyInstance};
pub use origami::{staircase, OrigamiDiagram, Permutation};
