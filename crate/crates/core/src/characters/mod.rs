//! Characters of `𝔖_n`, its cyclic subgroups `𝔖_g × ⟨w⟩`, and binary
//! dihedral subgroups realized as permutation groups.

mod cyclic;
mod dihedral;
mod perm;
mod table;

pub use cyclic::{
    cyclic_induced_powersum, cyclic_induced_schur, induce_from_cyclic, induce_product_with_cyclic,
    restriction_coeffs, CyclicSubgroupSpec, RestrictionCoeffs,
};
pub use dihedral::{
    build_dihedral_embedding, chi_i, dihedral_induced_powersum, dihedral_induced_schur,
    induce_from_dihedral, BdChar, BdClass, BinaryDihedralTable, DihedralEmbedding,
};
pub use perm::Permutation;
pub use table::{character_table, character_value, CharacterTable, ClassFunction, MAX_CACHED_N};
