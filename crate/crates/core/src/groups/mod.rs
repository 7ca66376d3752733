//! Finite groups by conjugacy-class data: structures, character tables,
//! subgroup embeddings, matrix representations, builders, validation and the
//! table document format.

pub mod builders;
pub mod io;
pub mod matrixrep;
pub mod structure;
pub mod validate;

pub use builders::{
    identity_embedding,
    build_cyclic, build_d4, build_direct_product, build_heisenberg, build_q8, build_s3,
    HeisenbergGroup,
};
pub use io::{load_character_table, load_character_table_unvalidated, save_character_table, TableIoError};
pub use matrixrep::{char_of_matrix_rep, word, CycMatrix, MatrixRep, MatrixRepError, Word};
pub use structure::{
    induce_char, inner_product, restrict_char, CharacterTable, ClassFunction, ClassStructure,
    GroupError, SubgroupEmbedding,
};
pub use validate::{validate_character_table, CheckResult, ValidationReport};
