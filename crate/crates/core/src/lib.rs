//! Finite semigroups, their complexes, relational morphisms and pointlike
//! sets.

pub mod complex;
pub mod congruence;
pub mod enumerate;
pub mod error;
pub mod laws;
pub mod moduli;
pub mod morphism;
pub mod pointlikes;
pub mod pseudovariety;
pub mod relmorph;
pub mod semigroup;
pub mod subset;

pub use complex::{FaceSet, SComplex};
pub use error::{Error, Result};
pub use moduli::{BuiltinContext, BuiltinModulus, Context, Modulus};
pub use morphism::Morphism;
pub use pseudovariety::Pseudovariety;
pub use relmorph::RelationalMorphism;
pub use semigroup::Semigroup;
pub use subset::Subset;
