pub mod builders;
pub mod error;
pub mod essential;
pub mod exact;
pub mod fixtures;
pub mod kostant;
pub mod lie;
pub mod parabolic;
pub mod roots;
pub mod seed;

pub use error::{Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/overview.md")]
    struct Overview;
    #[doc = include_str!("../../../book/src/exact.md")]
    struct Exact;
    #[doc = include_str!("../../../book/src/roots.md")]
    struct Roots;
    #[doc = include_str!("../../../book/src/gradings.md")]
    struct Gradings;
    #[doc = include_str!("../../../book/src/complex.md")]
    struct Complex;
    #[doc = include_str!("../../../book/src/seeds.md")]
    struct Seeds;
    #[doc = include_str!("../../../book/src/essential.md")]
    struct Essential;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
