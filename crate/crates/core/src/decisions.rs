//! Degree-decision procedures for nonsingular invariant curves: the
//! exponent bases of the linear systems, two-generator semigroup
//! membership, the six arithmetic conditions, and the closed-form
//! congruence answers they collapse to.
//!
//! Everything here is pure integer arithmetic. The linear system of
//! invariant degree-d curves is spanned by F^i Φ^j Ψ^k with
//! ai + bj + ck = d, so questions about its members reduce to inspecting
//! the exponent triples.

use serde::Serialize;

use crate::groups::GroupId;

/// The invariant degrees (a, b, c) = (deg F, deg Φ, deg Ψ) and deg X of a
/// group. Always a < b < c.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub group_id: GroupId,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub x_deg: u32,
}

impl DegreeProfile {
    pub fn of(group_id: GroupId) -> DegreeProfile {
        let (a, b, c, x_deg) = match group_id {
            GroupId::Valentiner => (6, 12, 30, 45),
            GroupId::Icosahedral => (2, 6, 10, 15),
            GroupId::Klein => (4, 6, 14, 21),
        };
        DegreeProfile {
            group_id,
            a,
            b,
            c,
            x_deg,
        }
    }
}

/// All exponent triples (i, j, k) with ai + bj + ck = d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearSystemBasis {
    pub d: u32,
    pub triples: Vec<(u32, u32, u32)>,
}

impl LinearSystemBasis {
    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }
}

/// Enumerate the basis exponents of the degree-d linear system.
pub fn basis(group_id: GroupId, d: u32) -> LinearSystemBasis {
    let p = DegreeProfile::of(group_id);
    let mut triples = Vec::new();
    for i in 0..=d / p.a {
        let rem_i = d - p.a * i;
        for j in 0..=rem_i / p.b {
            let rem = rem_i - p.b * j;
            if rem.is_multiple_of(p.c) {
                triples.push((i, j, rem / p.c));
            }
        }
    }
    LinearSystemBasis { d, triples }
}

/// Two-generator numerical-semigroup membership: is there a pair of
/// nonnegative integers (s, t) with d = p·s + q·t?
pub fn representable(d: u32, p: u32, q: u32) -> bool {
    assert!(p >= 1 && q >= 1);
    (0..=d / p).any(|s| (d - p * s).is_multiple_of(q))
}

/// Why a degree has no nonsingular member, when the reason is one of the
/// low-degree mechanisms rather than a plain congruence failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowDegreeCase {
    /// The linear system is empty.
    EmptyBasis,
    /// A single perfect power spans the system; every member is nonreduced.
    NonreducedPower,
    /// Every member is divisible by F (resp. Φ, Ψ) with a positive-degree
    /// cofactor, hence reducible or nonreduced.
    DivisibleByF,
    DivisibleByPhi,
    DivisibleByPsi,
    /// The exponents form a binary form of degree ≥ 2 in two invariant
    /// powers; every member splits into proper factors.
    BinaryFormFactors,
    /// Every member and its derivatives vanish on a pairwise intersection
    /// of the fundamental curves.
    SingularAtBaseLocus,
}

/// Outcome of the nonsingular-member decision at a given degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonsingularDecision {
    pub group: String,
    pub d: u32,
    pub exists: bool,
    /// Which of the six arithmetic conditions fail (empty when all hold).
    pub failed_conditions: Vec<u8>,
    pub low_degree_case: Option<LowDegreeCase>,
}

/// The six conditions, evaluated on the exponent basis:
/// (1) some triple avoids F, (2) some avoids Φ, (3) some avoids Ψ,
/// (4) some triple has i+j ≤ 1, (5) some has i+k ≤ 1, (6) some has j+k ≤ 1.
/// For d ≥ c these are exactly the representability and three-residue
/// congruence conditions of the degree theorems.
fn six_conditions(b: &LinearSystemBasis) -> [bool; 6] {
    let any = |f: &dyn Fn(&(u32, u32, u32)) -> bool| b.triples.iter().any(f);
    [
        any(&|&(i, _, _)| i == 0),
        any(&|&(_, j, _)| j == 0),
        any(&|&(_, _, k)| k == 0),
        any(&|&(i, j, _)| i + j <= 1),
        any(&|&(i, _, k)| i + k <= 1),
        any(&|&(_, j, k)| j + k <= 1),
    ]
}

/// Congruence form of conditions (4)-(6): d ≡ 0, a_m or a_n (mod a_l).
/// Valid as stated for d at or above the larger of a_m, a_n; below that
/// the basis form above is the honest test.
pub fn congruence_condition(d: u32, modulus: u32, r1: u32, r2: u32) -> bool {
    let r = d % modulus;
    r == 0 || r == r1 % modulus || r == r2 % modulus
}

/// Decide whether the degree-d linear system has a nonsingular member.
///
/// Degrees a, b, c themselves are nonsingular (the fundamental curves).
/// Otherwise a member can be nonsingular only when all six conditions
/// hold; each failure is reported, and for low degrees the operative
/// mechanism is tagged.
pub fn decide_nonsingular(group_id: GroupId, d: u32) -> NonsingularDecision {
    let p = DegreeProfile::of(group_id);
    let b = basis(group_id, d);
    let mut decision = NonsingularDecision {
        group: group_id.name().into(),
        d,
        exists: false,
        failed_conditions: Vec::new(),
        low_degree_case: None,
    };

    if b.is_empty() {
        decision.failed_conditions = vec![1, 2, 3];
        decision.low_degree_case = Some(LowDegreeCase::EmptyBasis);
        return decision;
    }

    if d == p.a || d == p.b || d == p.c {
        // V(F), V(Φ), V(Ψ) are nonsingular curves of these degrees.
        decision.exists = true;
        return decision;
    }

    let conds = six_conditions(&b);
    decision.failed_conditions = conds
        .iter()
        .enumerate()
        .filter(|(_, ok)| !**ok)
        .map(|(i, _)| i as u8 + 1)
        .collect();

    if decision.failed_conditions.is_empty() {
        decision.exists = true;
        return decision;
    }

    decision.low_degree_case = Some(classify_failure(&b, &conds));
    decision
}

fn classify_failure(b: &LinearSystemBasis, conds: &[bool; 6]) -> LowDegreeCase {
    if b.len() == 1 {
        let (i, j, k) = b.triples[0];
        let powers = [i, j, k];
        if powers.iter().filter(|&&e| e > 0).count() == 1 && powers.iter().any(|&e| e >= 2) {
            return LowDegreeCase::NonreducedPower;
        }
    }
    if !conds[0] {
        return LowDegreeCase::DivisibleByF;
    }
    if !conds[1] {
        return LowDegreeCase::DivisibleByPhi;
    }
    if !conds[2] {
        return LowDegreeCase::DivisibleByPsi;
    }
    // A congruence condition failed. When every triple lies in the
    // Ψ-free plane and there are at least three of them, the members are
    // binary forms of degree ≥ 2 in two invariant powers and factor.
    if b.triples.iter().all(|&(_, _, k)| k == 0) && b.len() >= 3 {
        LowDegreeCase::BinaryFormFactors
    } else {
        LowDegreeCase::SingularAtBaseLocus
    }
}

/// Closed-form degree theorem for nonsingular invariant curves:
/// V: d ≡ 0, 6, 12 (mod 30); I: d ≡ 0, 2, 6 (mod 10);
/// K: d ≡ 0, 4, 6 (mod 14).
pub fn closed_form_nonsingular(group_id: GroupId, d: u32) -> bool {
    let p = DegreeProfile::of(group_id);
    congruence_condition(d, p.c, p.a, p.b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_examples() {
        assert_eq!(
            basis(GroupId::Valentiner, 18).triples,
            vec![(1, 1, 0), (3, 0, 0)]
        );
        assert_eq!(
            basis(GroupId::Klein, 12).triples,
            vec![(0, 2, 0), (3, 0, 0)]
        );
        assert!(basis(GroupId::Klein, 2).is_empty());
    }

    #[test]
    fn representability_examples() {
        assert!(!representable(10, 6, 14));
        assert!(representable(48, 12, 30));
        assert!(representable(0, 6, 14));
    }

    #[test]
    fn conditions_one_to_three_match_representability() {
        for group in GroupId::ALL {
            let p = DegreeProfile::of(group);
            for d in 0..=420 {
                let b = basis(group, d);
                let conds = six_conditions(&b);
                assert_eq!(conds[0], representable(d, p.b, p.c), "{} d={}", group, d);
                assert_eq!(conds[1], representable(d, p.a, p.c), "{} d={}", group, d);
                assert_eq!(conds[2], representable(d, p.a, p.b), "{} d={}", group, d);
            }
        }
    }

    #[test]
    fn conditions_four_to_six_match_congruences_at_high_degree() {
        // The basis forms of (4)-(6) coincide with the three-residue
        // congruence tests from max{a_m, a_n} upward; in particular the
        // boundary d = c satisfies (1)-(3) for each group.
        for group in GroupId::ALL {
            let p = DegreeProfile::of(group);
            for d in 1..=420 {
                let b = basis(group, d);
                if b.is_empty() {
                    continue;
                }
                let conds = six_conditions(&b);
                if d >= p.b {
                    assert_eq!(
                        conds[3],
                        congruence_condition(d, p.c, p.a, p.b),
                        "(4) {} d={}",
                        group,
                        d
                    );
                }
                if d >= p.c {
                    assert_eq!(conds[4], congruence_condition(d, p.b, p.a, p.c));
                    assert_eq!(conds[5], congruence_condition(d, p.a, p.b, p.c));
                }
            }
            let boundary = six_conditions(&basis(group, p.c));
            assert!(boundary[0] && boundary[1] && boundary[2], "(1)-(3) at d = c");
        }
    }

    #[test]
    fn decide_examples() {
        let v24 = decide_nonsingular(GroupId::Valentiner, 24);
        assert!(!v24.exists);
        assert_eq!(v24.failed_conditions, vec![4]);
        assert_eq!(v24.low_degree_case, Some(LowDegreeCase::BinaryFormFactors));

        assert!(decide_nonsingular(GroupId::Klein, 18).exists);

        let i14 = decide_nonsingular(GroupId::Icosahedral, 14);
        assert!(!i14.exists);
        assert_eq!(i14.low_degree_case, Some(LowDegreeCase::DivisibleByF));

        let v48 = decide_nonsingular(GroupId::Valentiner, 48);
        assert!(!v48.exists);
        assert_eq!(v48.failed_conditions, vec![4]);

        let k12 = decide_nonsingular(GroupId::Klein, 12);
        assert!(!k12.exists);
        assert_eq!(k12.low_degree_case, Some(LowDegreeCase::SingularAtBaseLocus));

        let i4 = decide_nonsingular(GroupId::Icosahedral, 4);
        assert!(!i4.exists);
        assert_eq!(i4.low_degree_case, Some(LowDegreeCase::NonreducedPower));

        let k8 = decide_nonsingular(GroupId::Klein, 8);
        assert_eq!(k8.low_degree_case, Some(LowDegreeCase::NonreducedPower));
    }

    #[test]
    fn closed_form_examples() {
        assert!(closed_form_nonsingular(GroupId::Valentiner, 36));
        assert!(closed_form_nonsingular(GroupId::Icosahedral, 26));
        assert!(!closed_form_nonsingular(GroupId::Klein, 8));
        assert!(closed_form_nonsingular(GroupId::Valentiner, 30));
        assert!(!closed_form_nonsingular(GroupId::Valentiner, 48));
    }

    #[test]
    fn decision_sweep_matches_closed_form() {
        for group in GroupId::ALL {
            for d in 1..=420 {
                assert_eq!(
                    decide_nonsingular(group, d).exists,
                    closed_form_nonsingular(group, d),
                    "{} at degree {}",
                    group,
                    d
                );
            }
        }
    }

    #[test]
    fn basis_nonempty_iff_three_generator_semigroup_membership() {
        for group in GroupId::ALL {
            let p = DegreeProfile::of(group);
            for d in 0..=420 {
                let member = (0..=d / p.c)
                    .any(|k| representable(d - p.c * k, p.a, p.b));
                assert_eq!(basis(group, d).is_empty(), !member);
            }
        }
    }
}
