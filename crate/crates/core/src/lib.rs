pub mod bijections;
pub mod error;
pub mod general;
pub mod lattice;
pub mod noncrossing;
pub mod nonnesting;
pub mod perm;
pub mod records;
pub mod type_b;
pub mod vectors;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/noncrossing.md")]
    mod noncrossing {}
    #[doc = include_str!("../../../book/src/nonnesting.md")]
    mod nonnesting {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/vectors.md")]
    mod vectors {}
    #[doc = include_str!("../../../book/src/coxeter-elements.md")]
    mod coxeter_elements {}
    #[doc = include_str!("../../../book/src/type-b.md")]
    mod type_b {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
