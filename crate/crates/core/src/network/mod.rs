//! Perfect planar and cylindrical networks: model, validation, gluing,
//! elementary decomposition and boundary measurement.

mod build;
mod decompose;
mod glue;
mod measure;
mod model;

pub use build::{
    fig1, named_fixtures, gamma_black, gamma_black_cut, gamma_black_on, gamma_white, gamma_white_on, identity_wires,
    random_cylindrical, random_planar, torus_fixture, LayeredBuilder,
};
pub use decompose::{decompose, reglue, Decomposition, ElementaryPiece};
pub use glue::{glue, glue_to_torus, TorusContext};
pub use measure::{boundary_matrix, boundary_paths, MeasurementMatrix, PathsBySink};
pub use model::{
    BoundaryVertex, Color, Edge, InternalVertex, NetIndex, Network, Role, Surface, VertexRef, Violation,
};
