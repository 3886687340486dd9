//! Compiles and runs the Rust listings of the guide in `book/` as doctests.
//! One module per chapter, so a failure names its chapter.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/series.md")]
mod series {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/partitions.md")]
mod partitions {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/inversion.md")]
mod inversion {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/chern.md")]
mod chern {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cobordism.md")]
mod cobordism {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/polytopes.md")]
mod polytopes {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/divisibility.md")]
mod divisibility {}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
