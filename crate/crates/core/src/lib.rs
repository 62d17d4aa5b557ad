//! Gain graphs over finite groups, their covering graphs, and certificates
//! for two-eigenvalue covers and the regularity properties they force.

pub mod error;
pub mod families;
pub mod gain;
pub mod graph;
pub mod group;
pub mod hermitian;
pub mod poly;
pub mod regularity;
pub mod report;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use gain::{CoverGraph, GainGraph, SpanningTree};
pub use graph::{DistanceTable, Graph};
pub use group::{GroupElement, GroupSpec};
pub use hermitian::{hermitian_spectrum, CMatrix, Spectrum, DEFAULT_CLUSTER_TOL};
pub use poly::IntPolynomial;
pub use spectral::{
    char_poly, classify_two_ev, minpoly_certificate, rep_matrix, MinPolyCertificate,
    MinPolyFailure, NewEigenvalues, RepMatrix, TwoEvCertificate,
};
pub use regularity::{
    distance_partition, drackn_of_graph, drackn_parameters, is_antipodal, is_distance_regular, is_equitable,
    is_walk_regular, lemma_column_counts, srg_parameters, BaseParams, ColumnCountCertificate,
    DracknParams, IntersectionArray, RegularityCertificate, SrgParams,
};
