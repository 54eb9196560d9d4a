//! Exact algebra for permutation binomials `f = a·x + x^(r(q-1)+1)` over GF(q²).
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure computation:
//!
//! - [`gf`]: prime-power fields GF(p^d) built from a deterministic irreducible
//!   modulus, with table-driven arithmetic and a schoolbook reference path.
//! - [`binomial`]: the binomial family, its brute-force permutation oracle and
//!   the reduction of `a` to the class value `b = a^((q+1)/r)`.
//! - [`hermite`]: index windows, the field-valued Λ sums, their closed forms and
//!   the Hermite-criterion test built on them.
//! - [`symbolic`]: exact integer/rational polynomials, the `g_α` polynomials,
//!   Sylvester resultants, gcds modulo small primes and the reference fixtures.
//! - [`search`]: prime-power enumeration, theorem predicates encoded as data,
//!   per-`q` classification and the conjecture scanner.
//!
//! IO, parallel drivers, report serialization and the command line live in the
//! `ppbinom` companion crate.

#![no_std]
#![deny(unsafe_code)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod binomial;
mod error;
pub mod gf;
pub mod hermite;
pub mod search;
pub mod symbolic;

pub use error::{Error, Result};
pub use gf::{FieldCtx, FieldElem, FpPoly, PrimePower};
