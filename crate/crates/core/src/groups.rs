//! The three finite matrix groups, built from their explicit generators:
//! breadth-first closure under multiplication, projective (up-to-scalar)
//! counting, and exact Molien series against the closed-form Poincaré
//! expansions.

use std::collections::{HashSet, VecDeque};

use num_traits::Signed;
use thiserror::Error;

use crate::arith::{rho, sqrt_minus7, tau, zeta7, FieldElement, FieldId, Rational};
use crate::matrix::Matrix3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure exceeded cap of {0} elements; wrong generators?")]
    CapExceeded(usize),
    #[error("Molien average is not rational")]
    IrrationalAverage,
    #[error("Molien coefficient is not a nonnegative integer")]
    NonIntegralCoefficient,
}

/// Which of the three groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupId {
    Valentiner,
    Icosahedral,
    Klein,
}

impl GroupId {
    pub const ALL: [GroupId; 3] = [GroupId::Valentiner, GroupId::Icosahedral, GroupId::Klein];

    pub fn name(self) -> &'static str {
        match self {
            GroupId::Valentiner => "V",
            GroupId::Icosahedral => "I",
            GroupId::Klein => "K",
        }
    }

    pub fn parse(s: &str) -> Option<GroupId> {
        match s {
            "V" | "v" | "valentiner" => Some(GroupId::Valentiner),
            "I" | "i" | "icosahedral" => Some(GroupId::Icosahedral),
            "K" | "k" | "klein" => Some(GroupId::Klein),
            _ => None,
        }
    }

    pub fn field(self) -> FieldId {
        match self {
            GroupId::Valentiner | GroupId::Icosahedral => FieldId::Zeta15,
            GroupId::Klein => FieldId::Zeta7,
        }
    }

    /// Expected order of the lift generated by the explicit matrices.
    pub fn expected_lift_order(self) -> usize {
        match self {
            GroupId::Valentiner => 1080,
            GroupId::Icosahedral => 60,
            GroupId::Klein => 168,
        }
    }

    /// Expected projective order (the order of the group in PGL(3, C)).
    pub fn expected_projective_order(self) -> usize {
        match self {
            GroupId::Valentiner => 360,
            GroupId::Icosahedral => 60,
            GroupId::Klein => 168,
        }
    }

    /// Closed-form Poincaré data of the invariant ring of the lift:
    /// numerator exponent m and denominator degrees, for
    /// (1 − t^m) / Π (1 − t^{dᵢ}).
    pub fn poincare_shape(self) -> (u32, [u32; 4]) {
        match self {
            GroupId::Valentiner => (90, [6, 12, 30, 45]),
            GroupId::Icosahedral => (30, [2, 6, 10, 15]),
            GroupId::Klein => (42, [4, 6, 14, 21]),
        }
    }
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Explicit generator matrices for a group's lift.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub group_id: GroupId,
    pub matrices: Vec<Matrix3>,
}

fn fe_int(field: FieldId, n: i64) -> FieldElement {
    FieldElement::from_int(field, n)
}

/// Z = diag(−1, 1, −1).
pub fn matrix_z() -> Matrix3 {
    let f = FieldId::Zeta15;
    let e = |n: i64| fe_int(f, n);
    Matrix3::new(f, [e(-1), e(0), e(0), e(0), e(1), e(0), e(0), e(0), e(-1)])
}

/// T, the cyclic coordinate shift, over the given field.
pub fn matrix_t(field: FieldId) -> Matrix3 {
    let e = |n: i64| fe_int(field, n);
    Matrix3::new(
        field,
        [e(0), e(0), e(1), e(1), e(0), e(0), e(0), e(1), e(0)],
    )
}

/// Q, the order-3 monomial generator with ρ-entries.
pub fn matrix_q() -> Matrix3 {
    let f = FieldId::Zeta15;
    let z = FieldElement::zero(f);
    let r = rho();
    let r2 = r.mul(&r).expect("same field");
    Matrix3::new(
        f,
        [
            FieldElement::one(f),
            z.clone(),
            z.clone(),
            z.clone(),
            z.clone(),
            r2,
            z.clone(),
            r.neg(),
            z,
        ],
    )
}

/// P = ½ [[1, τ⁻¹, −τ], [τ⁻¹, τ, 1], [τ, −1, τ⁻¹]], an order-5 rotation.
pub fn matrix_p() -> Matrix3 {
    let f = FieldId::Zeta15;
    let one = FieldElement::one(f);
    let t = tau();
    // τ⁻¹ = τ − 1
    let ti = t.sub(&one).expect("same field");
    let m = Matrix3::new(
        f,
        [
            one.clone(),
            ti.clone(),
            t.neg(),
            ti.clone(),
            t.clone(),
            one.clone(),
            t.clone(),
            one.neg(),
            ti,
        ],
    );
    m.scale_rational(&crate::arith::ratio(1, 2))
}

/// S = diag(ζ⁴, ζ², ζ) over Q(ζ₇).
pub fn matrix_s() -> Matrix3 {
    let f = FieldId::Zeta7;
    let z = zeta7();
    let zero = FieldElement::zero(f);
    Matrix3::new(
        f,
        [
            z.pow(4),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            z.pow(2),
            zero.clone(),
            zero.clone(),
            zero,
            z,
        ],
    )
}

/// R = −(1/√−7) · [[ζ−ζ⁶, ζ²−ζ⁵, ζ⁴−ζ³], …], the symmetric involution.
pub fn matrix_r() -> Matrix3 {
    let z = zeta7();
    let d = |a: u32, b: u32| z.pow(a).sub(&z.pow(b)).expect("same field");
    let a = d(1, 6);
    let b = d(2, 5);
    let c = d(4, 3);
    let m = Matrix3::new(
        FieldId::Zeta7,
        [
            a.clone(),
            b.clone(),
            c.clone(),
            b.clone(),
            c.clone(),
            a.clone(),
            c,
            a,
            b,
        ],
    );
    let scale = sqrt_minus7().inv().expect("nonzero").neg();
    m.scale(&scale).expect("same field")
}

/// Generators of the linear Valentiner lift: Z, T, Q, P.
pub fn valentiner_generators() -> GeneratorSet {
    GeneratorSet {
        group_id: GroupId::Valentiner,
        matrices: vec![matrix_z(), matrix_t(FieldId::Zeta15), matrix_q(), matrix_p()],
    }
}

/// Generators of the icosahedral lift: Z, T, P.
pub fn icosahedral_generators() -> GeneratorSet {
    GeneratorSet {
        group_id: GroupId::Icosahedral,
        matrices: vec![matrix_z(), matrix_t(FieldId::Zeta15), matrix_p()],
    }
}

/// Generators of the Klein lift: S, T, R.
pub fn klein_generators() -> GeneratorSet {
    GeneratorSet {
        group_id: GroupId::Klein,
        matrices: vec![matrix_s(), matrix_t(FieldId::Zeta7), matrix_r()],
    }
}

pub fn generators(group: GroupId) -> GeneratorSet {
    match group {
        GroupId::Valentiner => valentiner_generators(),
        GroupId::Icosahedral => icosahedral_generators(),
        GroupId::Klein => klein_generators(),
    }
}

/// A finite matrix group, closed under multiplication.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub group_id: GroupId,
    pub elements: Vec<Matrix3>,
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

pub const DEFAULT_CLOSURE_CAP: usize = 4000;

/// Breadth-first closure of the generator set under multiplication.
/// Errors when more than `cap` distinct elements appear, which signals a
/// wrong generator transcription rather than a genuine group.
pub fn closure(gens: &GeneratorSet, cap: usize) -> Result<MatrixGroup, GroupError> {
    let field = gens.matrices[0].field();
    let identity = Matrix3::identity(field);
    let mut seen: HashSet<Matrix3> = HashSet::new();
    let mut elements = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.clone());
    elements.push(identity.clone());
    queue.push_back(identity);
    while let Some(m) = queue.pop_front() {
        for g in &gens.matrices {
            let next = m.mul(g).expect("same field");
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(GroupError::CapExceeded(cap));
                }
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(MatrixGroup {
        group_id: gens.group_id,
        elements,
    })
}

/// One canonical representative per scalar class of a matrix group:
/// the projective (up-to-scalar) view of the group.
#[derive(Debug, Clone)]
pub struct ProjectiveView {
    pub representatives: Vec<Matrix3>,
}

impl ProjectiveView {
    pub fn order(&self) -> usize {
        self.representatives.len()
    }
}

/// Collapse the scalar classes: A ~ B when A = λB for some scalar λ.
/// Representatives are normalized by the first nonzero entry and listed
/// in the group's enumeration order.
pub fn projective_view(group: &MatrixGroup) -> ProjectiveView {
    let mut seen: HashSet<Matrix3> = HashSet::new();
    let mut representatives = Vec::new();
    for m in &group.elements {
        let canon = m.projective_normalize();
        if seen.insert(canon.clone()) {
            representatives.push(canon);
        }
    }
    ProjectiveView { representatives }
}

/// Number of scalar classes.
pub fn projective_order(group: &MatrixGroup) -> usize {
    projective_view(group).order()
}

/// Exact Molien series of the invariant ring of the (finite) group:
/// coefficients of t⁰..t^max of the average of 1/det(I − tA).
///
/// Each reciprocal is expanded by the linear recurrence of the reversed
/// characteristic polynomial 1 − c₁t + c₂t² − c₃t³ (c₁ = tr A,
/// c₂ = the second invariant, c₃ = det A), so no eigenvalues are needed
/// and everything stays in the field. The averaged coefficients are
/// asserted to be nonnegative rational integers.
pub fn molien_series(group: &MatrixGroup, max: u32) -> Result<Vec<i64>, GroupError> {
    molien_series_threaded(group, max, 1)
}

/// Molien series with an opt-in deterministic parallel split of the
/// element sum. Results are combined in chunk order, so the output is
/// identical for every thread count.
pub fn molien_series_threaded(
    group: &MatrixGroup,
    max: u32,
    threads: usize,
) -> Result<Vec<i64>, GroupError> {
    let field = group.elements[0].field();
    let n = max as usize + 1;
    let threads = threads.max(1).min(group.elements.len());
    let chunk_size = group.elements.len().div_ceil(threads);

    let chunk_sums: Vec<Vec<FieldElement>> = if threads == 1 {
        vec![molien_chunk(&group.elements, field, n)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = group
                .elements
                .chunks(chunk_size)
                .map(|chunk| scope.spawn(move || molien_chunk(chunk, field, n)))
                .collect();
            handles.into_iter().map(|h| h.join().expect("no panic")).collect()
        })
    };

    let mut total = vec![FieldElement::zero(field); n];
    for chunk in chunk_sums {
        for (t, c) in total.iter_mut().zip(chunk) {
            *t = t.add(&c).expect("same field");
        }
    }

    let order = Rational::from_integer(num_bigint::BigInt::from(group.elements.len()));
    let mut out = Vec::with_capacity(n);
    for c in total {
        let avg = c.mul_rational(&order.recip());
        let r = avg
            .to_rational()
            .map_err(|_| GroupError::IrrationalAverage)?;
        if !r.is_integer() || r.is_negative() {
            return Err(GroupError::NonIntegralCoefficient);
        }
        let v: i64 = r
            .to_integer()
            .try_into()
            .map_err(|_| GroupError::NonIntegralCoefficient)?;
        out.push(v);
    }
    Ok(out)
}

fn molien_chunk(elements: &[Matrix3], field: FieldId, n: usize) -> Vec<FieldElement> {
    let mut sum = vec![FieldElement::zero(field); n];
    for a in elements {
        let c1 = a.trace();
        let c2 = a.second_invariant();
        let c3 = a.det();
        // s_k = c1·s_{k−1} − c2·s_{k−2} + c3·s_{k−3}
        let mut s = Vec::with_capacity(n);
        s.push(FieldElement::one(field));
        for k in 1..n {
            let mut v = c1.mul(&s[k - 1]).expect("same field");
            if k >= 2 {
                v = v.sub(&c2.mul(&s[k - 2]).expect("same field")).expect("same field");
            }
            if k >= 3 {
                v = v.add(&c3.mul(&s[k - 3]).expect("same field")).expect("same field");
            }
            s.push(v);
        }
        for (t, v) in sum.iter_mut().zip(s) {
            *t = t.add(&v).expect("same field");
        }
    }
    sum
}

/// Exact expansion of the closed-form Poincaré series
/// (1 − t^m) / Π (1 − t^{dᵢ}) up to degree `max`.
pub fn expand_poincare(group: GroupId, max: u32) -> Vec<i64> {
    let (m, dens) = group.poincare_shape();
    expand_rational_series(m, &dens, max)
}

/// Expand (1 − t^m) / Π (1 − t^{dᵢ}) as a power series.
pub fn expand_rational_series(m: u32, dens: &[u32], max: u32) -> Vec<i64> {
    let n = max as usize + 1;
    let mut series = vec![0i64; n];
    series[0] = 1;
    for &d in dens {
        // multiply by 1/(1 − t^d): prefix-sum with stride d
        for k in d as usize..n {
            series[k] += series[k - d as usize];
        }
    }
    // multiply by (1 − t^m)
    if (m as usize) < n {
        for k in (m as usize..n).rev() {
            series[k] -= series[k - m as usize];
        }
    }
    series
}
