//! Character tables of `I2(n)` and `Z_n` over cyclotomic fields.

pub mod characters;
pub mod cyclotomic;
pub mod group;

pub use characters::{
    class_function, cyclic_char_value, dihedral_char_value, dihedral_irreducibles, inner_product, regular_character,
    CharLabel,
};
pub use cyclotomic::{cyclotomic_polynomial, Cyclotomic, CyclotomicField};
pub use group::{cyclic_elements, dihedral_classes, dihedral_elements, GroupElement};
