//! Double brackets on path algebras: local rules, the Leibniz engine, the
//! merge/split formula, matrix brackets and the induced loop brackets.

mod direct;
mod generators;
mod h0;
mod leibniz;
mod params;
mod table;

pub use direct::{db_direct, db_direct_words};
pub use generators::{generator_bracket, neg_tau, GeneratorTable, WordTensor};
pub use h0::{h0_bracket, h0_bracket_cyclic, h0_bracket_truncated, lie_bracket};
pub use leibniz::{db, db_truncated, db_words, db_words_into};
pub use params::BracketParams;
pub use table::{matrix_db, matrix_db_spectral, matrix_power_db, BracketTable, CellIndex};

