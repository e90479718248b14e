//! Exact root data, Verma module reducibility and parabolic multiplets for
//! the exceptional Lie algebra F4.
//!
//! The crate builds the F4 root system from its Cartan matrix, tracks
//! highest weights through their Harish-Chandra parameters as linear forms
//! in the Dynkin labels `m1..m4`, and generates the multiplet of generalized
//! Verma modules induced from the maximal parabolic with
//! `𝔪 = sl(3,ℝ) ⊕ sl(2,ℝ)`, together with JSON and DOT exports.

pub mod cli;
pub mod exact;
pub mod export;
pub mod multiplet;
pub mod parabolic;
pub mod rootsys;
pub mod verify;
pub mod verma;

pub use exact::{LinForm, Rational, SignClass};
pub use multiplet::{generate, MultipletGraph, Params};
pub use parabolic::{ParabolicSpec, Side, Signature};
pub use rootsys::{CartanData, RootSystem, RootVector};
pub use verma::Weight;
