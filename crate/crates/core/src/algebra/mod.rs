//! Free path algebra over a small linear category, its tensor square and cyclic space.

mod cyclic;
mod element;
mod matrix;

pub use cyclic::{cyclic_reduce, least_rotation, CyclicElement, CyclicWord};
pub use element::{concat_words, word, Element, Gen, ObjectId, TensorElement, TripleTensor, Word};
pub use matrix::Matrix;
