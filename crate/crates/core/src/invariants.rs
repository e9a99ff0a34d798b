//! The fundamental invariants of each group, in standard and Wiman
//! coordinates: the conic-orbit sextic and its Hessian tower for the
//! Valentiner family, the quartic tower for the Klein group, invariance
//! checking, and exact expression of an invariant in the basic ones.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::arith::{ratio, rho, Frame, FieldElement, FieldId};
use crate::decisions::{basis, DegreeProfile};
use crate::groups::{self, GroupId};
use crate::matrix::Matrix3;
use crate::mpoly::{bordered_hessian, hessian, jacobian_det, MPoly, Monomial};

/// The four fundamental invariants of a frame, with their degrees
/// (deg F, deg Φ, deg Ψ, deg X).
#[derive(Debug, Clone)]
pub struct InvariantTriple {
    pub frame: Frame,
    pub f: MPoly,
    pub phi: MPoly,
    pub psi: MPoly,
    pub x: MPoly,
    pub degrees: (u32, u32, u32, u32),
}

impl InvariantTriple {
    pub fn group_id(&self) -> GroupId {
        match self.frame {
            Frame::Valentiner | Frame::ValentinerWiman => GroupId::Valentiner,
            Frame::Icosahedral | Frame::IcosahedralWiman => GroupId::Icosahedral,
            Frame::Klein => GroupId::Klein,
        }
    }

    pub fn field(&self) -> FieldId {
        self.f.field()
    }

    fn assemble(frame: Frame, f: MPoly, phi: MPoly, psi: MPoly, x: MPoly) -> InvariantTriple {
        let profile = DegreeProfile::of(match frame {
            Frame::Valentiner | Frame::ValentinerWiman => GroupId::Valentiner,
            Frame::Icosahedral | Frame::IcosahedralWiman => GroupId::Icosahedral,
            Frame::Klein => GroupId::Klein,
        });
        let degrees = (
            f.homogeneous_degree().expect("F homogeneous"),
            phi.homogeneous_degree().expect("Phi homogeneous"),
            psi.homogeneous_degree().expect("Psi homogeneous"),
            x.homogeneous_degree().expect("X homogeneous"),
        );
        assert_eq!(
            degrees,
            (profile.a, profile.b, profile.c, profile.x_deg),
            "invariant degrees for {} off the expected row",
            frame
        );
        InvariantTriple {
            frame,
            f,
            phi,
            psi,
            x,
            degrees,
        }
    }
}

/// The six quadratic forms whose cubes sum to the Valentiner sextic:
/// C₁ = x²+y²+z², C₂ = C₁(Q⁻¹x), C₃..C₆ = C₂(P⁻ᵏx) for k = 4..1.
pub fn conics() -> [MPoly; 6] {
    let field = FieldId::Zeta15;
    let c1 = MPoly::from_int_terms(field, &[(1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2)]);
    let q_inv = groups::matrix_q().inverse().expect("Q invertible");
    let c2 = c1.substitute_linear(&q_inv).expect("same field");
    let p_inv = groups::matrix_p().inverse().expect("P invertible");
    let mut out = vec![c1, c2.clone()];
    for k in [4, 3, 2, 1] {
        let m = p_inv.pow(k).expect("power of P");
        out.push(c2.substitute_linear(&m).expect("same field"));
    }
    out.try_into().expect("six conics")
}

/// F_V = Σ Cₙ³, the degree-6 Valentiner invariant, plus its Hessian
/// tower Φ_V = det H(F), Ψ_V = det BH(F, Φ), X_V = det J(F, Φ, Ψ).
pub fn build_valentiner() -> &'static InvariantTriple {
    static CACHE: OnceLock<InvariantTriple> = OnceLock::new();
    CACHE.get_or_init(|| {
        let field = FieldId::Zeta15;
        let mut f = MPoly::zero(field);
        for c in conics() {
            f = f.add(&c.pow(3)).expect("same field");
        }
        let phi = hessian(&f).det();
        let psi = bordered_hessian(&f, &phi).det();
        let x = jacobian_det(&f, &phi, &psi);
        InvariantTriple::assemble(Frame::Valentiner, f, phi, psi, x)
    })
}

/// The Wiman sextic W = 10x³y³ + 9x⁵z + 9y⁵z − 45x²y²z² − 135xyz⁴ + 27z⁶.
pub fn wiman_sextic(field: FieldId) -> MPoly {
    MPoly::from_int_terms(
        field,
        &[
            (10, 3, 3, 0),
            (9, 5, 0, 1),
            (9, 0, 5, 1),
            (-45, 2, 2, 2),
            (-135, 1, 1, 4),
            (27, 0, 0, 6),
        ],
    )
}

/// The Valentiner tower over Q, seeded by the integer Wiman sextic.
pub fn build_wiman_valentiner() -> &'static InvariantTriple {
    static CACHE: OnceLock<InvariantTriple> = OnceLock::new();
    CACHE.get_or_init(|| {
        let f = wiman_sextic(FieldId::Q);
        let phi = hessian(&f).det();
        let psi = bordered_hessian(&f, &phi).det();
        let x = jacobian_det(&f, &phi, &psi);
        InvariantTriple::assemble(Frame::ValentinerWiman, f, phi, psi, x)
    })
}

/// Coordinate choice for the icosahedral invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coords {
    Standard,
    Wiman,
}

impl Coords {
    pub fn parse(s: &str) -> Option<Coords> {
        match s {
            "standard" => Some(Coords::Standard),
            "wiman" => Some(Coords::Wiman),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coords::Standard => "standard",
            Coords::Wiman => "wiman",
        }
    }
}

/// Icosahedral invariants: F_I = x²+y²+z², Φ_I = F_V in standard
/// coordinates; F = xy + ηz², Φ = W over Q\[e\]/(4e²+3e+9) in Wiman
/// coordinates. Ψ and X are the usual bordered Hessian and Jacobian.
pub fn build_icosahedral(coords: Coords) -> &'static InvariantTriple {
    static STANDARD: OnceLock<InvariantTriple> = OnceLock::new();
    static WIMAN: OnceLock<InvariantTriple> = OnceLock::new();
    match coords {
        Coords::Standard => STANDARD.get_or_init(|| {
            let field = FieldId::Zeta15;
            let f = MPoly::from_int_terms(field, &[(1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2)]);
            let phi = build_valentiner().f.clone();
            let psi = bordered_hessian(&f, &phi).det();
            let x = jacobian_det(&f, &phi, &psi);
            InvariantTriple::assemble(Frame::Icosahedral, f, phi, psi, x)
        }),
        Coords::Wiman => WIMAN.get_or_init(|| {
            let field = FieldId::Eta;
            let mut f = MPoly::from_int_terms(field, &[(1, 1, 1, 0)]);
            f.add_term(Monomial::new(0, 0, 2), crate::arith::eta());
            let phi = wiman_sextic(field);
            let psi = bordered_hessian(&f, &phi).det();
            let x = jacobian_det(&f, &phi, &psi);
            InvariantTriple::assemble(Frame::IcosahedralWiman, f, phi, psi, x)
        }),
    }
}

/// Klein invariants over Q(ζ₇): F_K = x³y + y³z + z³x,
/// Φ_K = −(1/54)·det H(F_K), Ψ_K = −(1/9)·det BH(F_K, Φ_K),
/// X_K = det J(F_K, Φ_K, Ψ_K). The polynomials themselves have rational
/// coefficients.
pub fn build_klein() -> &'static InvariantTriple {
    static CACHE: OnceLock<InvariantTriple> = OnceLock::new();
    CACHE.get_or_init(|| {
        let field = FieldId::Zeta7;
        let f = MPoly::from_int_terms(field, &[(1, 3, 1, 0), (1, 0, 3, 1), (1, 1, 0, 3)]);
        let phi = hessian(&f).det().mul_rational(&ratio(-1, 54));
        let psi = bordered_hessian(&f, &phi).det().mul_rational(&ratio(-1, 9));
        let x = jacobian_det(&f, &phi, &psi);
        InvariantTriple::assemble(Frame::Klein, f, phi, psi, x)
    })
}

/// The cached invariant tower of a frame.
pub fn triple_for(frame: Frame) -> &'static InvariantTriple {
    match frame {
        Frame::Valentiner => build_valentiner(),
        Frame::Icosahedral => build_icosahedral(Coords::Standard),
        Frame::Klein => build_klein(),
        Frame::IcosahedralWiman => build_icosahedral(Coords::Wiman),
        Frame::ValentinerWiman => build_wiman_valentiner(),
    }
}

/// True when f is fixed by every matrix in the slice. Checking the
/// generators suffices for a group they generate, since substitution is a
/// right action.
pub fn is_invariant(f: &MPoly, matrices: &[Matrix3]) -> bool {
    matrices
        .iter()
        .all(|a| f.substitute_linear(a).expect("matching field") == *f)
}

/// Semi-invariance of a conic under A: find (k, j) with C^A = ρᵏ·C_j.
pub fn conic_image(c: &MPoly, a: &Matrix3, conic_list: &[MPoly; 6]) -> Option<(u32, usize)> {
    let image = c.substitute_linear(a).expect("matching field");
    for k in 0..3u32 {
        let scaled = image
            .mul_scalar(&rho().pow(k).inv().expect("root of unity"))
            .expect("same field");
        if let Some(j) = conic_list.iter().position(|cj| *cj == scaled) {
            return Some((k, j));
        }
    }
    None
}

/// Outcome of expressing a homogeneous invariant in the basic invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpressOutcome {
    /// Coefficients of F^i Φ^j Ψ^k, keyed by (i, j, k).
    Expressed(BTreeMap<(u32, u32, u32), FieldElement>),
    /// The degree is not representable as ai + bj + ck.
    EmptyBasis,
    /// The linear system has no solution.
    NotExpressible,
}

/// Solve for f = Σ c_{ijk} F^i Φ^j Ψ^k exactly, by Gaussian elimination
/// on the monomial-coefficient matrix.
pub fn express_in_basic(f: &MPoly, triple: &InvariantTriple) -> ExpressOutcome {
    let d = f
        .homogeneous_degree()
        .expect("express_in_basic requires a homogeneous polynomial");
    let b = basis(triple.group_id(), d);
    if b.is_empty() {
        return ExpressOutcome::EmptyBasis;
    }
    let field = f.field();
    assert_eq!(field, triple.field(), "field mismatch with the triple");

    // Power caches up to the maximal exponents that occur.
    let max_i = b.triples.iter().map(|t| t.0).max().unwrap_or(0);
    let max_j = b.triples.iter().map(|t| t.1).max().unwrap_or(0);
    let max_k = b.triples.iter().map(|t| t.2).max().unwrap_or(0);
    let powers = |p: &MPoly, max: u32| -> Vec<MPoly> {
        let mut v = vec![MPoly::one(field)];
        for e in 1..=max {
            let next = v[(e - 1) as usize].mul(p).expect("same field");
            v.push(next);
        }
        v
    };
    let fp = powers(&triple.f, max_i);
    let pp = powers(&triple.phi, max_j);
    let sp = powers(&triple.psi, max_k);

    let products: Vec<MPoly> = b
        .triples
        .iter()
        .map(|&(i, j, k)| {
            fp[i as usize]
                .mul(&pp[j as usize])
                .and_then(|m| m.mul(&sp[k as usize]))
                .expect("same field")
        })
        .collect();

    match solve_exact(&products, f) {
        Some(coeffs) => {
            let map = b
                .triples
                .iter()
                .cloned()
                .zip(coeffs)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            ExpressOutcome::Expressed(map)
        }
        None => ExpressOutcome::NotExpressible,
    }
}

/// Recombine an expression back into a polynomial (for verifying that a
/// found coefficient vector reproduces the original identically).
pub fn recombine(
    coeffs: &BTreeMap<(u32, u32, u32), FieldElement>,
    triple: &InvariantTriple,
) -> MPoly {
    let field = triple.field();
    let mut acc = MPoly::zero(field);
    for (&(i, j, k), c) in coeffs {
        let prod = triple
            .f
            .pow(i)
            .mul(&triple.phi.pow(j))
            .and_then(|m| m.mul(&triple.psi.pow(k)))
            .and_then(|m| m.mul_scalar(c))
            .expect("same field");
        acc = acc.add(&prod).expect("same field");
    }
    acc
}

/// Exact linear solve: find c with Σ cᵢ·colᵢ = target, treating each
/// monomial as one equation. Returns None when inconsistent.
fn solve_exact(cols: &[MPoly], target: &MPoly) -> Option<Vec<FieldElement>> {
    let field = target.field();
    let mut monomials: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for c in cols {
        monomials.extend(c.terms().map(|(m, _)| *m));
    }
    monomials.extend(target.terms().map(|(m, _)| *m));
    let index: BTreeMap<Monomial, usize> = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (*m, i))
        .collect();

    let ncols = cols.len();
    let nrows = index.len();
    // augmented rows: coefficients then rhs
    let mut rows: Vec<Vec<FieldElement>> =
        vec![vec![FieldElement::zero(field); ncols + 1]; nrows];
    for (ci, col) in cols.iter().enumerate() {
        for (m, v) in col.terms() {
            rows[index[m]][ci] = v.clone();
        }
    }
    for (m, v) in target.terms() {
        rows[index[m]][ncols] = v.clone();
    }

    let mut pivot_row_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut next_row = 0usize;
    for col in 0..ncols {
        let Some(p) = (next_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, p);
        let inv = rows[next_row][col].inv().expect("nonzero pivot");
        for e in rows[next_row].iter_mut() {
            if !e.is_zero() {
                *e = e.mul(&inv).expect("same field");
            }
        }
        for r in 0..nrows {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                let (head, tail) = rows.split_at_mut(r.max(next_row));
                let (pivot_row, target_row) = if r > next_row {
                    (&head[next_row], &mut tail[0])
                } else {
                    (&tail[0], &mut head[r])
                };
                for (t, s) in target_row.iter_mut().zip(pivot_row.iter()) {
                    if !s.is_zero() {
                        let sub = s.mul(&factor).expect("same field");
                        *t = t.sub(&sub).expect("same field");
                    }
                }
            }
        }
        pivot_row_of_col[col] = Some(next_row);
        next_row += 1;
    }
    // consistency: rows with zero coefficients must have zero rhs
    for row in rows.iter().skip(next_row) {
        if !row[ncols].is_zero() {
            return None;
        }
    }
    for row in rows.iter().take(next_row) {
        if row[..ncols].iter().all(FieldElement::is_zero) && !row[ncols].is_zero() {
            return None;
        }
    }
    let mut out = vec![FieldElement::zero(field); ncols];
    for (col, pr) in pivot_row_of_col.iter().enumerate() {
        if let Some(r) = pr {
            out[col] = rows[*r][ncols].clone();
        }
    }
    Some(out)
}
