//! Doc-test shim for the guide in `book/`.
//!
//! mdbook renders the chapters but cannot execute their Rust blocks
//! against workspace dependencies, so each chapter is also mounted here
//! as module documentation: `cargo test --doc` then compiles and runs
//! every fenced snippet, keeping the guide and the library in lockstep.
//! One module per chapter makes a failing snippet point at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/states.md")]
pub mod states {}

#[doc = include_str!("../../../book/src/horizon.md")]
pub mod horizon {}

#[doc = include_str!("../../../book/src/damped-cavity.md")]
pub mod damped_cavity {}

#[doc = include_str!("../../../book/src/dephasing.md")]
pub mod dephasing {}

#[doc = include_str!("../../../book/src/bounds.md")]
pub mod bounds {}

#[doc = include_str!("../../../book/src/numerics.md")]
pub mod numerics {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
