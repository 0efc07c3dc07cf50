//! The elementary-symmetric side: cyclic classes of primitive words,
//! Amitsur's formula, Newton relations, and a uniform relation family for
//! the multisymmetric functions over any base ring.

pub mod amitsur;
pub mod esym;
pub mod family;
pub mod necklace;
pub mod newton;

pub use amitsur::{amitsur_coefficient, amitsur_component, amitsur_relation, characteristic_component_direct};
pub use esym::{ESymbol, ESymbolPoly};
pub use family::{
    bounded_generators, generator_degree, generators_span, kernel_generation_check, relation_family, FamilyKind, FamilyMember,
    KernelGenerationReport,
};
pub use necklace::{cyclic_classes, CyclicClass};
pub use newton::{newton_polynomial, newton_relation};
