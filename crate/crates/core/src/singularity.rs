//! Singularity classification of a general invariant curve at degrees
//! where no nonsingular member exists, and the Bézout-inequality
//! certificates proving such curves are integral.
//!
//! The classification never builds local power series: transversality of
//! V(F) and V(Φ) reduces the analytic type at a base point to finite
//! membership and lower-bound conditions on the exponent index set I_d,
//! and those conditions are decided here directly.

use serde::Serialize;

use crate::decisions::{basis, closed_form_nonsingular, DegreeProfile};
use crate::groups::GroupId;

/// Index set I_d: pairs (i, j) with i, j ≥ 0 such that (d − (ai+bj))/c is
/// a nonnegative integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexSet {
    pub d: u32,
    pub pairs: Vec<(u32, u32)>,
}

impl IndexSet {
    pub fn contains(&self, pair: (u32, u32)) -> bool {
        self.pairs.contains(&pair)
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Enumerate I_d for a group.
pub fn index_set(group_id: GroupId, d: u32) -> IndexSet {
    let pairs = basis(group_id, d)
        .triples
        .into_iter()
        .map(|(i, j, _)| (i, j))
        .collect();
    IndexSet { d, pairs }
}

/// Analytic type of the singularities of a general member, or the
/// nonsingular/undefined verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SingularityType {
    #[serde(rename = "A1_node")]
    Node,
    #[serde(rename = "A2_cusp")]
    Cusp,
    #[serde(rename = "A3_tacnode")]
    Tacnode,
    #[serde(rename = "A5")]
    TypeA5,
    #[serde(rename = "D5_family")]
    TypeD5,
    #[serde(rename = "nonsingular")]
    Nonsingular,
    #[serde(rename = "undefined")]
    Undefined,
}

impl SingularityType {
    /// Intersection multiplicity of two local branches at the singular
    /// point: 1 for a node, 2 for a tacnode or D₅, 3 for A₅. Cusps are
    /// unibranch (no multiplicity; they force irreducibility directly).
    pub fn branch_multiplicity(self) -> Option<u32> {
        match self {
            SingularityType::Node => Some(1),
            SingularityType::Tacnode | SingularityType::TypeD5 => Some(2),
            SingularityType::TypeA5 => Some(3),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SingularityType::Node => "A1_node",
            SingularityType::Cusp => "A2_cusp",
            SingularityType::Tacnode => "A3_tacnode",
            SingularityType::TypeA5 => "A5",
            SingularityType::TypeD5 => "D5_family",
            SingularityType::Nonsingular => "nonsingular",
            SingularityType::Undefined => "undefined",
        }
    }
}

/// The finite membership/lower-bound pattern certifying one singularity
/// type: required pairs in I_d and a linear form p·i + q·j bounded below.
struct TypeRule {
    required: &'static [(u32, u32)],
    bound: (u32, u32, u32), // (p, q, min): all (i,j) ∈ I_d satisfy p·i+q·j ≥ min
    sing_type: SingularityType,
}

/// One row of the classification table: residue of d mod c, the degree
/// floor, and the membership rule that certifies the type.
struct TableRow {
    group: GroupId,
    residue: u32,
    floor: u32,
    rule: TypeRule,
}

fn table() -> &'static [TableRow] {
    const NODE: &[(u32, u32)] = &[(1, 1)];
    static ROWS: &[TableRow] = &[
        TableRow {
            group: GroupId::Valentiner,
            residue: 18,
            floor: 48,
            rule: TypeRule {
                required: NODE,
                bound: (1, 1, 2),
                sing_type: SingularityType::Node,
            },
        },
        TableRow {
            group: GroupId::Valentiner,
            residue: 24,
            floor: 54,
            rule: TypeRule {
                required: &[(4, 0), (0, 2)],
                bound: (1, 2, 4),
                sing_type: SingularityType::Tacnode,
            },
        },
        TableRow {
            group: GroupId::Icosahedral,
            residue: 4,
            floor: 24,
            rule: TypeRule {
                required: &[(2, 0), (0, 4)],
                bound: (2, 1, 4),
                sing_type: SingularityType::Tacnode,
            },
        },
        TableRow {
            group: GroupId::Icosahedral,
            residue: 8,
            floor: 18,
            rule: TypeRule {
                required: NODE,
                bound: (1, 1, 2),
                sing_type: SingularityType::Node,
            },
        },
        TableRow {
            group: GroupId::Klein,
            residue: 2,
            floor: 30,
            rule: TypeRule {
                required: &[(4, 0), (1, 2)],
                bound: (2, 3, 8),
                sing_type: SingularityType::TypeD5,
            },
        },
        TableRow {
            group: GroupId::Klein,
            residue: 8,
            floor: 36,
            rule: TypeRule {
                required: &[(2, 0), (0, 6)],
                bound: (3, 1, 6),
                sing_type: SingularityType::TypeA5,
            },
        },
        TableRow {
            group: GroupId::Klein,
            residue: 10,
            floor: 24,
            rule: TypeRule {
                required: NODE,
                bound: (1, 1, 2),
                sing_type: SingularityType::Node,
            },
        },
        TableRow {
            group: GroupId::Klein,
            residue: 12,
            floor: 12,
            rule: TypeRule {
                required: &[(3, 0), (0, 2)],
                bound: (2, 3, 6),
                sing_type: SingularityType::Cusp,
            },
        },
    ];
    ROWS
}

/// Check a row's membership/lower-bound conditions against I_d.
fn rule_holds(group: GroupId, d: u32, row: &TableRow) -> bool {
    let idx = index_set(group, d);
    row.rule.required.iter().all(|p| idx.contains(*p))
        && idx
            .pairs
            .iter()
            .all(|&(i, j)| row.rule.bound.0 * i + row.rule.bound.1 * j >= row.rule.bound.2)
}

/// The singularity type of a general invariant curve of degree d:
/// `Nonsingular` when the congruence theorem admits a nonsingular member,
/// a concrete type when (d mod c, d ≥ floor) matches the table and the
/// exponent conditions confirm it, `Undefined` below the floors.
pub fn classify(group_id: GroupId, d: u32) -> SingularityType {
    if closed_form_nonsingular(group_id, d) {
        return SingularityType::Nonsingular;
    }
    let p = DegreeProfile::of(group_id);
    for row in table() {
        if row.group == group_id && d % p.c == row.residue && d >= row.floor {
            assert!(
                rule_holds(group_id, d, row),
                "exponent conditions must confirm the table row at {} d={}",
                group_id,
                d
            );
            return row.rule.sing_type;
        }
    }
    SingularityType::Undefined
}

/// How one candidate first-component degree d₁ is ruled out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Refutation {
    /// d₁(d−d₁) exceeds m·deg F·deg Φ, violating the component bound for
    /// any number of components.
    StarInequality { product: u64, bound: u64 },
    /// The split survives the bound but both component counts fail:
    /// exactly two components would force d₁(d−d₁) = m·deg F·deg Φ
    /// (the mismatch pair records product ≠ bound), and more than two are
    /// ruled out through the second-component degree.
    ComponentCounts {
        two_component_mismatch: (u64, u64),
        rest: RestRefutation,
    },
}

/// How the n > 2 case dies for a fixed d₁.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RestRefutation {
    /// The window lower ≤ d₂((d−d₁)−d₂) ≤ upper is empty outright.
    Window { lower: u64, upper: u64 },
    /// Every candidate d₂ is ruled out individually.
    Search { candidates: Vec<SecondRefutation> },
}

/// Rule-out for a specific second-component degree d₂ in the n > 2 case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SecondRefutation {
    /// d₂((d−d₁)−d₂) exceeds the remaining bound.
    Bound { d2: u32, value: u64, upper: u64 },
    /// d₁ = d₂ = 1: two lines meet once transversally, but every
    /// singular point carries branch multiplicity m > 1.
    LinePairMultiplicity { d2: u32, m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitRefutation {
    pub d1: u32,
    pub refutation: Refutation,
}

/// A complete refutation of every nontrivial splitting H = H₁⋯Hₙ, or the
/// trivial unibranch certificate when every singularity is a cusp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrreducibilityCertificate {
    pub group: String,
    pub d: u32,
    pub sing_type: SingularityType,
    pub m: Option<u32>,
    pub cusp_unibranch: bool,
    pub refutations: Vec<SplitRefutation>,
}

/// Result of the irreducibility search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Certificate(IrreducibilityCertificate),
    /// Some splitting survived every test; reducibility is possible
    /// (and at the low exceptional degrees, actual).
    ReduciblePossible { d: u32, surviving_d1: Vec<u32> },
    /// The degree is not in a classified singular class.
    NotApplicable { d: u32 },
}

impl IrreducibilityCertificate {
    /// The (lower, upper) pairs of every empty second-component window,
    /// in d₁ order; these are the numeric contradictions of the argument.
    pub fn window_contradictions(&self) -> Vec<(u64, u64)> {
        self.refutations
            .iter()
            .filter_map(|r| match &r.refutation {
                Refutation::ComponentCounts {
                    rest: RestRefutation::Window { lower, upper },
                    ..
                } => Some((*lower, *upper)),
                _ => None,
            })
            .collect()
    }
}

/// Certify that a general member of the degree-d system is irreducible,
/// by refuting every candidate splitting with the Bézout identities
/// Σ_{i<j} dᵢdⱼ = m·deg F·deg Φ and the derived (∗)/(∗∗) inequalities.
pub fn certify_irreducible(group_id: GroupId, d: u32) -> CertifyOutcome {
    let sing = classify(group_id, d);
    if sing == SingularityType::Cusp {
        // cusps are unibranch: a curve whose singularities are all cusps
        // cannot split into components meeting at them
        return CertifyOutcome::Certificate(IrreducibilityCertificate {
            group: group_id.name().into(),
            d,
            sing_type: sing,
            m: None,
            cusp_unibranch: true,
            refutations: Vec::new(),
        });
    }
    let Some(m) = sing.branch_multiplicity() else {
        return CertifyOutcome::NotApplicable { d };
    };
    let p = DegreeProfile::of(group_id);
    let bound = (m * p.a * p.b) as u64;
    let d = d as u64;
    let m64 = m as u64;

    let mut refutations = Vec::new();
    let mut surviving: Vec<u32> = Vec::new();

    for d1 in 1..=d / 2 {
        let product = d1 * (d - d1);
        if product > bound {
            refutations.push(SplitRefutation {
                d1: d1 as u32,
                refutation: Refutation::StarInequality { product, bound },
            });
            continue;
        }
        if product == bound {
            // exactly two components would satisfy Bézout; nothing rules
            // this split out arithmetically
            surviving.push(d1 as u32);
            continue;
        }
        // n = 2 needs equality, refuted by product ≠ bound; only n > 2
        // remains for this d₁.
        let mismatch = (product, bound);
        let rest = d - d1;
        let upper = bound - product;
        let lower = rest - 1; // d₂((d−d₁)−d₂) at the endpoints d₂ ∈ {1, rest−1}
        if lower > upper {
            refutations.push(SplitRefutation {
                d1: d1 as u32,
                refutation: Refutation::ComponentCounts {
                    two_component_mismatch: mismatch,
                    rest: RestRefutation::Window { lower, upper },
                },
            });
            continue;
        }
        // enumerate the d₂ window
        let mut candidates = Vec::new();
        let mut all_refuted = true;
        for d2 in 1..=rest / 2 {
            let value = d2 * (rest - d2);
            if value > upper {
                candidates.push(SecondRefutation::Bound {
                    d2: d2 as u32,
                    value,
                    upper,
                });
            } else if d1 == 1 && d2 == 1 && m64 > 1 {
                candidates.push(SecondRefutation::LinePairMultiplicity {
                    d2: d2 as u32,
                    m,
                });
            } else {
                all_refuted = false;
            }
        }
        if all_refuted {
            refutations.push(SplitRefutation {
                d1: d1 as u32,
                refutation: Refutation::ComponentCounts {
                    two_component_mismatch: mismatch,
                    rest: RestRefutation::Search { candidates },
                },
            });
        } else {
            surviving.push(d1 as u32);
        }
    }

    if surviving.is_empty() {
        CertifyOutcome::Certificate(IrreducibilityCertificate {
            group: group_id.name().into(),
            d: d as u32,
            sing_type: sing,
            m: Some(m),
            cusp_unibranch: false,
            refutations,
        })
    } else {
        CertifyOutcome::ReduciblePossible {
            d: d as u32,
            surviving_d1: surviving,
        }
    }
}

/// Does an integral (irreducible and reduced) invariant curve of degree d
/// exist? True when a nonsingular member exists, or when the general
/// singular member carries a cusp-only or certificate-backed singular
/// configuration. Degrees below the table floors have no integral member.
pub fn decide_integral(group_id: GroupId, d: u32) -> bool {
    if closed_form_nonsingular(group_id, d) {
        return true;
    }
    match classify(group_id, d) {
        SingularityType::Nonsingular => true,
        SingularityType::Undefined => false,
        _ => matches!(
            certify_irreducible(group_id, d),
            CertifyOutcome::Certificate(_)
        ),
    }
}

/// Everything known about the general member at one degree: its
/// singularity type, the branch multiplicity and singular locus, the
/// integrality verdict, and the certificate when one exists.
#[derive(Debug, Clone, Serialize)]
pub struct SingularityReport {
    pub group: String,
    pub d: u32,
    #[serde(rename = "type")]
    pub sing_type: SingularityType,
    pub m: Option<u32>,
    pub locus: Option<String>,
    /// Number of singular points of a singular general member,
    /// deg F · deg Φ.
    pub count: Option<u32>,
    pub integral: bool,
    pub certificate: Option<IrreducibilityCertificate>,
}

pub fn report(group_id: GroupId, d: u32) -> SingularityReport {
    let sing_type = classify(group_id, d);
    let singular = !matches!(
        sing_type,
        SingularityType::Nonsingular | SingularityType::Undefined
    );
    let p = DegreeProfile::of(group_id);
    let certificate = match certify_irreducible(group_id, d) {
        CertifyOutcome::Certificate(c) => Some(c),
        _ => None,
    };
    SingularityReport {
        group: group_id.name().into(),
        d,
        sing_type,
        m: sing_type.branch_multiplicity(),
        locus: singular.then(|| "V(F)∩V(Phi)".to_string()),
        count: singular.then_some(p.a * p.b),
        integral: decide_integral(group_id, d),
        certificate,
    }
}

/// Genus of a nonsingular plane curve of degree d: (d−1)(d−2)/2.
/// For the fundamental curves V(F) this gives 10 (V, degree 6),
/// 0 (I, degree 2) and 3 (K, degree 4), documentation values used in
/// the orbit argument, not consumed by any decision procedure.
pub fn plane_curve_genus(d: u32) -> u32 {
    if d == 0 {
        return 0;
    }
    (d - 1) * (d - 2) / 2
}

/// The closed-form answer of the degree theorems for integral curves.
pub fn closed_form_integral(group_id: GroupId, d: u32) -> bool {
    match group_id {
        GroupId::Valentiner => d.is_multiple_of(6) && d != 18 && d != 24 && d > 0,
        GroupId::Icosahedral => d.is_multiple_of(2) && ![4, 8, 14].contains(&d) && d > 0,
        GroupId::Klein => d.is_multiple_of(2) && ![2, 8, 10, 16, 22].contains(&d) && d > 0,
    }
}
