//! Spectra and heat/wave dynamics of weighted Laplacians on metric graphs.
//!
//! The operator under study acts edgewise as `c_j d²/dx²` on functions living
//! on the edges of a finite network, coupled through continuity and a
//! weighted Kirchhoff condition at the vertices. This crate computes its
//! spectrum through the characteristic (secular) equation of a generalized
//! weighted Laplacian matrix, evolves the associated heat and wave equations
//! by eigenfunction expansion, and cross-checks everything against an
//! independent finite-element discretization.
//!
//! Modules:
//!
//! * [`graph`] — validated metric graphs and their combinatorial matrices.
//! * [`fileio`] — the TOML graph-file format.
//! * [`spectral`] — generalized weighted Laplacian `L_C(λ)`, secular scan,
//!   resonant eigenvalues, and the unit-speed closed form.
//! * [`oracle`] — P1 finite-element stiffness/mass matrices, a generalized
//!   eigensolver, and a Crank–Nicolson stepper, used as an independent
//!   reference.
//! * [`evolve`] — heat/wave propagators on a truncated eigenbasis, the
//!   equilibrium projection, and semigroup diagnostics.
//! * [`stability`] — decay-rate formulas and algebraic-connectivity bounds
//!   for regular unit-speed graphs.
//! * [`enumerate`] — exhaustive small-graph enumeration for verification.

pub mod enumerate;
pub mod evolve;
pub mod fileio;
pub mod graph;
pub mod oracle;
pub mod quad;
pub mod spectral;
pub mod stability;
