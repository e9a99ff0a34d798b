//! A small exact Gröbner-basis engine, sufficient to decide the three
//! zero-locus style checks on the invariant towers: only-trivial common
//! zero, nonsingularity of a curve, and transversality of two curves.
//!
//! Buchberger with grevlex, normal (lowest lcm degree first) selection,
//! the product and chain criteria, and full normal-form reduction. All
//! coefficient arithmetic is exact; over Q every stored polynomial is
//! kept integer-primitive, over a number field monic. A reduction budget
//! turns runaway computations into an honest "inconclusive" outcome,
//! never a wrong answer.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{FieldId, Rational};
use crate::mpoly::{MPoly, Monomial, Var};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("budget of {0} pair reductions exhausted; result inconclusive")]
    Inconclusive(u64),
    #[error("generators must be nonzero")]
    ZeroGenerator,
}

/// Default cap on S-pair reductions.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// An ideal presented by generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub generators: Vec<MPoly>,
}

impl Ideal {
    pub fn new(generators: Vec<MPoly>) -> Result<Ideal, IdealError> {
        if generators.iter().any(MPoly::is_zero) {
            return Err(IdealError::ZeroGenerator);
        }
        Ok(Ideal { generators })
    }
}

/// Monomial order a basis was computed under. Only grevlex is
/// implemented; the tag keeps the provenance explicit on the result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
}

/// A Gröbner basis, reduced and canonically normalized.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub basis: Vec<MPoly>,
    pub order: MonomialOrder,
}

impl GroebnerBasis {
    /// Full normal form of a polynomial against the basis.
    pub fn reduce(&self, p: &MPoly) -> MPoly {
        let mut unlimited = u64::MAX;
        normal_form(p, &self.basis, &mut unlimited).expect("unbounded budget")
    }

    pub fn contains(&self, p: &MPoly) -> bool {
        self.reduce(p).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| *g.leading().expect("basis elements nonzero").0)
            .collect()
    }
}

/// Canonical scaling: integer-primitive with positive leading coefficient
/// over Q, monic over an extension field.
fn normalize(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    if p.field() == FieldId::Q {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            let r = c.to_rational().expect("rational field");
            den = den.lcm(r.denom());
        }
        let mut content = BigInt::zero();
        for (_, c) in p.terms() {
            let r = c.to_rational().expect("rational field");
            content = content.gcd(&(r.numer() * (&den / r.denom())));
        }
        let lead_sign = p
            .leading()
            .map(|(_, c)| c.to_rational().expect("rational field").is_negative())
            .unwrap_or(false);
        if lead_sign {
            content = -content;
        }
        let scale = Rational::new(den, content);
        p.mul_rational(&scale)
    } else {
        let (_, lc) = p.leading().expect("nonzero");
        let inv = lc.inv().expect("nonzero leading coefficient");
        p.mul_scalar(&inv).expect("same field")
    }
}

/// Positive rational content of a polynomial: the gcd of all coordinate
/// numerators over the lcm of all denominators. Dividing by it makes the
/// coefficient data integral and primitive.
fn rational_content(p: &MPoly) -> Rational {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        for r in c.coords() {
            if !r.is_zero() {
                den = den.lcm(r.denom());
            }
        }
    }
    let mut num = BigInt::zero();
    'outer: for (_, c) in p.terms() {
        for r in c.coords() {
            if !r.is_zero() {
                num = num.gcd(&(r.numer() * (&den / r.denom())));
                if num.is_one() {
                    break 'outer;
                }
            }
        }
    }
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num, den)
    }
}

/// Full normal form of `p` modulo `basis`, spending one budget unit per
/// elementary cancellation. Returns Err when the budget runs dry.
///
/// The working polynomial is stripped to primitive coefficient data after
/// every cancellation, against intermediate coefficient swell; the exact
/// scale is carried so the returned remainder is the true normal form.
fn normal_form(p: &MPoly, basis: &[MPoly], budget: &mut u64) -> Result<MPoly, IdealError> {
    let field = p.field();
    let mut work = p.clone();
    let mut rest = MPoly::zero(field);
    let mut scale = Rational::one();
    'outer: while let Some((lm, lc)) = work.leading().map(|(m, c)| (*m, c.clone())) {
        for g in basis {
            let (gm, gc) = g.leading().expect("basis nonzero");
            if gm.divides(&lm) {
                if *budget == 0 {
                    return Err(IdealError::Inconclusive(0));
                }
                *budget -= 1;
                let factor = lc.div(gc).expect("nonzero leading coefficient");
                let shift = lm.div(gm).expect("divides");
                let sub = g.mul_monomial(&shift).mul_scalar(&factor).expect("same field");
                work = work.sub(&sub).expect("same field");
                let content = rational_content(&work);
                if !content.is_one() {
                    work = work.mul_rational(&content.recip());
                    scale *= content;
                }
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the remainder
        rest.add_term(lm, lc.mul_rational(&scale));
        let mut single = MPoly::zero(field);
        single.add_term(lm, lc);
        work = work.sub(&single).expect("same field");
    }
    Ok(rest)
}

/// Buchberger's algorithm with the product and chain criteria, normal
/// selection strategy, and a pair-reduction budget.
pub fn buchberger(ideal: &Ideal, budget: u64) -> Result<GroebnerBasis, IdealError> {
    let mut basis: Vec<MPoly> = Vec::new();
    for g in &ideal.generators {
        if !g.is_zero() {
            basis.push(normalize(g));
        }
    }
    if basis.is_empty() {
        return Err(IdealError::ZeroGenerator);
    }

    // (lcm degree, i, j) ordered ascending: normal strategy.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let lead = |p: &MPoly| -> Monomial { *p.leading().expect("nonzero").0 };
    let add_pairs = |pairs: &mut BTreeSet<(u32, usize, usize)>, basis: &[MPoly], new: usize| {
        let lm_new = lead(&basis[new]);
        for (i, g) in basis.iter().enumerate().take(new) {
            let lcm = lead(g).lcm(&lm_new);
            pairs.insert((lcm.degree(), i, new));
        }
    };
    for i in 0..basis.len() {
        add_pairs(&mut pairs, &basis, i);
    }

    // One unit per S-pair processed and one per elementary cancellation,
    // so a runaway reduction on huge polynomials exhausts the budget too.
    let mut remaining = budget;

    while let Some(&(deg, i, j)) = pairs.iter().next() {
        pairs.remove(&(deg, i, j));
        done.insert((i, j));
        if remaining == 0 {
            return Err(IdealError::Inconclusive(budget));
        }
        remaining -= 1;

        let (gi, gj) = (&basis[i], &basis[j]);
        let (mi, mj) = (lead(gi), lead(gj));
        let lcm = mi.lcm(&mj);
        // product criterion: coprime leading monomials reduce to zero
        if lcm.degree() == mi.degree() + mj.degree() {
            continue;
        }
        // chain criterion: an already-linked third element divides the lcm
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            let pair_ik = (i.min(k), i.max(k));
            let pair_jk = (j.min(k), j.max(k));
            lead(&basis[k]).divides(&lcm) && done.contains(&pair_ik) && done.contains(&pair_jk)
        });
        if chained {
            continue;
        }

        // S-polynomial
        let (ci, cj) = (
            gi.leading().expect("nonzero").1.clone(),
            gj.leading().expect("nonzero").1.clone(),
        );
        let ui = lcm.div(&mi).expect("divides");
        let uj = lcm.div(&mj).expect("divides");
        let si = gi.mul_monomial(&ui).mul_scalar(&ci.inv().expect("nonzero")).expect("field");
        let sj = gj.mul_monomial(&uj).mul_scalar(&cj.inv().expect("nonzero")).expect("field");
        let s = si.sub(&sj).expect("same field");
        let reduced = match normal_form(&s, &basis, &mut remaining) {
            Ok(r) => r,
            Err(_) => return Err(IdealError::Inconclusive(budget)),
        };
        if !reduced.is_zero() {
            let reduced = normalize(&reduced);
            basis.push(reduced);
            add_pairs(&mut pairs, &basis, basis.len() - 1);
        }
    }

    Ok(interreduce(basis))
}

/// Minimize and fully interreduce; the result is the unique reduced basis
/// (up to the canonical scaling), sorted by leading monomial.
fn interreduce(mut basis: Vec<MPoly>) -> GroebnerBasis {
    // drop elements whose leading monomial another one divides
    let mut keep: Vec<MPoly> = Vec::new();
    basis.sort_by_key(|p| *p.leading().expect("nonzero").0);
    for (idx, p) in basis.iter().enumerate() {
        let lm = p.leading().expect("nonzero").0;
        let redundant = basis.iter().enumerate().any(|(k, q)| {
            k != idx && {
                let qm = q.leading().expect("nonzero").0;
                qm.divides(lm) && (qm != lm || k < idx)
            }
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    // reduce each element by the others
    let mut reduced: Vec<MPoly> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<MPoly> = keep
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, q)| q.clone())
            .collect();
        let mut unlimited = u64::MAX;
        let r = normal_form(&keep[i], &others, &mut unlimited).expect("unbounded");
        if !r.is_zero() {
            reduced.push(normalize(&r));
        }
    }
    reduced.sort_by_key(|p| *p.leading().expect("nonzero").0);
    GroebnerBasis {
        basis: reduced,
        order: MonomialOrder::Grevlex,
    }
}

/// Projective emptiness test for a homogeneous ideal in x, y, z: the zero
/// set in P² is empty exactly when, for each variable, some pure power of
/// it leads a basis element (equivalently the quotient by the ideal is
/// finite-dimensional, so the affine zero set is at most the origin).
pub fn only_trivial_zero(ideal: &Ideal, budget: u64) -> Result<bool, IdealError> {
    for g in &ideal.generators {
        assert!(
            g.is_homogeneous(),
            "only_trivial_zero expects homogeneous generators"
        );
    }
    let gb = buchberger(ideal, budget)?;
    let leads = gb.leading_monomials();
    if leads.iter().any(|m| m.degree() == 0) {
        // unit ideal: empty even in A³
        return Ok(true);
    }
    Ok(Var::ALL
        .iter()
        .all(|v| leads.iter().any(|m| m.degree() > 0 && m.is_pure_power_of(*v))))
}

/// Nonsingularity of V(f): the partial derivatives have no common
/// projective zero.
pub fn nonsingular_check(f: &MPoly, budget: u64) -> Result<bool, IdealError> {
    assert!(f.is_homogeneous(), "nonsingular_check expects homogeneous input");
    let gens: Vec<MPoly> = f.gradient().into_iter().filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        // constant polynomial: no curve, nothing singular
        return Ok(true);
    }
    only_trivial_zero(&Ideal::new(gens).expect("nonzero"), budget)
}

/// Transversality of V(f) and V(g): no common zero at which the gradients
/// are dependent. Decided by adjoining all 2×2 minors of the Jacobian of
/// (f, g) to ⟨f, g⟩ and testing projective emptiness; for two curves
/// meeting in finitely many points this is the tangency detector.
pub fn transversal_check(f: &MPoly, g: &MPoly, budget: u64) -> Result<bool, IdealError> {
    assert!(f.is_homogeneous() && g.is_homogeneous());
    let gf = f.gradient();
    let gg = g.gradient();
    let mut gens = vec![f.clone(), g.clone()];
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let minor = gf[a]
            .mul(&gg[b])
            .and_then(|p| gf[b].mul(&gg[a]).and_then(|q| p.sub(&q)))
            .expect("same field");
        if !minor.is_zero() {
            gens.push(minor);
        }
    }
    let ideal = Ideal::new(gens).map_err(|_| IdealError::ZeroGenerator)?;
    only_trivial_zero(&ideal, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::build_klein;

    fn qp(terms: &[(i64, u16, u16, u16)]) -> MPoly {
        MPoly::from_int_terms(FieldId::Q, terms)
    }

    fn x() -> MPoly {
        qp(&[(1, 1, 0, 0)])
    }
    fn y() -> MPoly {
        qp(&[(1, 0, 1, 0)])
    }
    fn z() -> MPoly {
        qp(&[(1, 0, 0, 1)])
    }

    #[test]
    fn coordinate_ideal_is_its_own_basis() {
        let gb = buchberger(&Ideal::new(vec![x(), y(), z()]).unwrap(), 1000).unwrap();
        assert_eq!(gb.basis, vec![z(), y(), x()]);
    }

    #[test]
    fn textbook_pair() {
        // ⟨x² − y², x + y⟩ = ⟨x + y, ... ⟩; x − y is NOT in the ideal,
        // x² − y² = (x+y)(x−y) is.
        let i = Ideal::new(vec![qp(&[(1, 2, 0, 0), (-1, 0, 2, 0)]), x().add(&y()).unwrap()])
            .unwrap();
        let gb = buchberger(&i, 1000).unwrap();
        assert!(gb.contains(&qp(&[(1, 2, 0, 0), (-1, 0, 2, 0)])));
        assert!(!gb.contains(&x().sub(&y()).unwrap()));
        // every S-polynomial of the final basis reduces to zero
        for a in 0..gb.basis.len() {
            for b in a + 1..gb.basis.len() {
                let (ga, gbp) = (&gb.basis[a], &gb.basis[b]);
                let (ma, ca) = ga.leading().unwrap();
                let (mb, cb) = gbp.leading().unwrap();
                let lcm = ma.lcm(mb);
                let sa = ga
                    .mul_monomial(&lcm.div(ma).unwrap())
                    .mul_scalar(&ca.inv().unwrap())
                    .unwrap();
                let sb = gbp
                    .mul_monomial(&lcm.div(mb).unwrap())
                    .mul_scalar(&cb.inv().unwrap())
                    .unwrap();
                let s = sa.sub(&sb).unwrap();
                assert!(gb.reduce(&s).is_zero());
            }
        }
    }

    #[test]
    fn normal_form_remainder_is_exact() {
        // the content stripping inside reduction must not change the
        // value of the remainder: x² + 3 mod (2x − y) is y²/4 + 3
        let gb = buchberger(
            &Ideal::new(vec![qp(&[(2, 1, 0, 0), (-1, 0, 1, 0)])]).unwrap(),
            100,
        )
        .unwrap();
        let p = qp(&[(1, 2, 0, 0), (3, 0, 0, 0)]);
        let expect = qp(&[(3, 0, 0, 0)])
            .add(&qp(&[(1, 0, 2, 0)]).mul_rational(&crate::arith::ratio(1, 4)))
            .unwrap();
        assert_eq!(gb.reduce(&p), expect);
    }

    #[test]
    fn reduced_basis_is_order_stable() {
        let f1 = qp(&[(1, 2, 0, 0), (1, 0, 1, 1)]);
        let f2 = qp(&[(1, 1, 1, 0), (-1, 0, 0, 2)]);
        let f3 = qp(&[(2, 0, 2, 0), (3, 1, 0, 1)]);
        let a = buchberger(&Ideal::new(vec![f1.clone(), f2.clone(), f3.clone()]).unwrap(), 10_000)
            .unwrap();
        let b = buchberger(&Ideal::new(vec![f3, f1, f2]).unwrap(), 10_000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trivial_zero_examples() {
        assert!(only_trivial_zero(&Ideal::new(vec![x(), y(), z()]).unwrap(), 1000).unwrap());
        // two curves always intersect in P²
        let k = klein_rational();
        let fk = k.0;
        let phik = k.1;
        assert!(!only_trivial_zero(&Ideal::new(vec![fk, phik]).unwrap(), 100_000).unwrap());
    }

    fn klein_rational() -> (MPoly, MPoly, MPoly) {
        let k = build_klein();
        (
            k.f.transfer(FieldId::Q).unwrap(),
            k.phi.transfer(FieldId::Q).unwrap(),
            k.psi.transfer(FieldId::Q).unwrap(),
        )
    }

    #[test]
    fn klein_triple_has_only_trivial_zero() {
        let (f, phi, psi) = klein_rational();
        let i = Ideal::new(vec![f, phi, psi]).unwrap();
        assert!(only_trivial_zero(&i, 200_000).unwrap());
    }

    #[test]
    fn nonsingular_examples() {
        assert!(nonsingular_check(&qp(&[(1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2)]), 1000).unwrap());
        // x²y is singular along a line
        assert!(!nonsingular_check(&qp(&[(1, 2, 1, 0)]), 1000).unwrap());
        let (f, _, _) = klein_rational();
        assert!(nonsingular_check(&f, 100_000).unwrap());
    }

    #[test]
    fn transversal_examples() {
        assert!(transversal_check(&x(), &y(), 1000).unwrap());
        // yz and yz − x² touch at (0:1:0) and (0:0:1) with parallel
        // gradients: the tangency detector must fire.
        let yz = qp(&[(1, 0, 1, 1)]);
        let tangent = qp(&[(1, 0, 1, 1), (-1, 2, 0, 0)]);
        assert!(!transversal_check(&yz, &tangent, 10_000).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let (f, phi, psi) = klein_rational();
        let i = Ideal::new(vec![f, phi, psi]).unwrap();
        match only_trivial_zero(&i, 1) {
            Err(IdealError::Inconclusive(_)) => {}
            other => panic!("expected inconclusive, got {:?}", other),
        }
    }

    /// Advisory finite-field oracle: when the ideal provably has only the
    /// trivial zero over C, its reduction at a prime of good reduction
    /// has no rational projective point either.
    #[test]
    fn finite_field_reduction_agrees_on_empty_loci() {
        let p: i64 = 101;
        let (f, phi, psi) = klein_rational();
        let gens = [f, phi, psi];
        let eval = |g: &MPoly, pt: [i64; 3]| -> i64 {
            let mut acc: i64 = 0;
            for (m, c) in g.terms() {
                let r = c.to_rational().unwrap();
                assert!(r.is_integer(), "integer model expected");
                let cv: i64 = (r.to_integer() % BigInt::from(p)).try_into().unwrap();
                let mut term = cv.rem_euclid(p);
                for (vi, &e) in m.exps.iter().enumerate() {
                    for _ in 0..e {
                        term = (term * pt[vi].rem_euclid(p)) % p;
                    }
                }
                acc = (acc + term) % p;
            }
            acc
        };
        let mut found = false;
        let mut points: Vec<[i64; 3]> = Vec::new();
        for y in 0..p {
            for z in 0..p {
                points.push([1, y, z]);
            }
        }
        for z in 0..p {
            points.push([0, 1, z]);
        }
        points.push([0, 0, 1]);
        for pt in points {
            if gens.iter().all(|g| eval(g, pt) == 0) {
                found = true;
                break;
            }
        }
        assert!(!found, "empty complex locus should stay empty mod {}", p);
    }
}
