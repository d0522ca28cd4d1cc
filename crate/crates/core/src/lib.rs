//! Exact symbolic verification of contact-geometric identities: exterior
//! calculus over rational functions with an adjoined radical, Smith normal
//! form homology with exact-sequence bookkeeping, and finitely presented
//! group simplification.

pub mod coeffring;
pub mod extalg;
pub mod contactlab;
pub mod abelian;
pub mod grouppres;
pub mod cli;
