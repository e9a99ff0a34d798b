//! Exact invariant theory of the three simple primitive subgroups of
//! PGL(3, C), the Valentiner (A₆), icosahedral (A₅) and Klein
//! (PSL(2, F₇)) groups, and the degree theory of the plane curves they
//! fix.
//!
//! * [`arith`]: rationals and the fixed number fields Q(ζ₁₅), Q(ζ₇),
//!   Q\[e\]/(4e²+3e+9) housing every constant in the generator matrices.
//! * [`matrix`]: exact 3×3 matrices over those fields.
//! * [`mpoly`]: sparse polynomials in x, y, z with the Hessian,
//!   bordered-Hessian and Jacobian determinant constructions.
//! * [`groups`]: generator sets, closure enumeration, projective
//!   counting, Molien series and Poincaré expansions.
//! * [`invariants`]: the fundamental invariants F, Φ, Ψ, X per frame,
//!   invariance checking, and expression in the basic invariants.
//! * [`ideals`]: a budgeted Buchberger engine for the zero-locus,
//!   nonsingularity and transversality checks.
//! * [`decisions`]: the arithmetic degree conditions and the congruence
//!   theorems for nonsingular invariant curves.
//! * [`singularity`]: index sets, singularity classification, and the
//!   irreducibility certificates for integral invariant curves.
//! * [`cli`]: the `invcurve` command-line interface.

pub mod arith;
pub mod cli;
pub mod decisions;
pub mod groups;
pub mod ideals;
pub mod invariants;
pub mod matrix;
pub mod mpoly;
pub mod singularity;
