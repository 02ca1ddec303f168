//! Text and JSON formats.

mod expr;
mod network_file;

pub use expr::{
    parse_element, parse_tensor, projected, serialize_cyclic, serialize_element, serialize_matrix_compact, serialize_tensor, serialize_triple, Labels,
    NameTable,
};
pub use network_file::{parse_network, read_network, to_canonical_json};
