//! Sparse multivariate polynomials in x, y, z over a fixed coefficient
//! field, with the determinant constructions (Hessian, bordered Hessian,
//! Jacobian) used to build the invariants.
//!
//! Terms are kept in a map ordered by graded reverse lexicographic
//! comparison, so iteration and the leading term are canonical.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::arith::{ArithError, FieldElement, FieldId, Rational};
use crate::matrix::Matrix3;

/// One of the three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// Exponent triple (e_x, e_y, e_z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: [u16; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(x: u16, y: u16, z: u16) -> Self {
        Monomial { exps: [x, y, z] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0u16; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial {
                exps: [
                    self.exps[0] - other.exps[0],
                    self.exps[1] - other.exps[1],
                    self.exps[2] - other.exps[2],
                ],
            })
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0].max(other.exps[0]),
                self.exps[1].max(other.exps[1]),
                self.exps[2].max(other.exps[2]),
            ],
        }
    }

    pub fn is_pure_power_of(&self, v: Var) -> bool {
        self.exps
            .iter()
            .enumerate()
            .all(|(i, &e)| i == v.index() || e == 0)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order: compare total degree first;
    /// on ties the monomial with the smaller exponent in the last
    /// differing variable (scanning z, y, x) is larger.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for i in (0..3).rev() {
                if self.exps[i] != other.exps[i] {
                    return other.exps[i].cmp(&self.exps[i]);
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in Var::ALL.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial: map from monomial to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    field: FieldId,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl MPoly {
    pub fn zero(field: FieldId) -> Self {
        MPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldId, c: FieldElement) -> Self {
        let mut p = MPoly::zero(field);
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn one(field: FieldId) -> Self {
        Self::constant(field, FieldElement::one(field))
    }

    pub fn variable(field: FieldId, v: Var) -> Self {
        let mut p = MPoly::zero(field);
        p.add_term(Monomial::var(v), FieldElement::one(field));
        p
    }

    /// Build from integer-coefficient terms `(coeff, e_x, e_y, e_z)`.
    pub fn from_int_terms(field: FieldId, terms: &[(i64, u16, u16, u16)]) -> Self {
        let mut p = MPoly::zero(field);
        for &(c, x, y, z) in terms {
            p.add_term(Monomial::new(x, y, z), FieldElement::from_int(field, c));
        }
        p
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.field))
    }

    /// Leading term in grevlex order.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().next_back()
    }

    /// Total degree (of any term with the highest degree), None when zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The common degree of all terms, or None when inhomogeneous/zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        if it.all(|m| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Add `c · m` to the polynomial, dropping the entry when it cancels.
    pub fn add_term(&mut self, m: Monomial, c: FieldElement) {
        assert_eq!(c.field(), self.field, "coefficient field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c).expect("same field");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly, ArithError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly, ArithError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MPoly {
        MPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly, ArithError> {
        self.check_same(other)?;
        let mut out = MPoly::zero(self.field);
        // iterate the smaller factor outside
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                out.add_term(m1.mul(m2), c1.mul(c2)?);
            }
        }
        Ok(out)
    }

    pub fn mul_scalar(&self, c: &FieldElement) -> Result<MPoly, ArithError> {
        if c.field() != self.field {
            return Err(ArithError::FieldMismatch(c.field(), self.field));
        }
        if c.is_zero() {
            return Ok(MPoly::zero(self.field));
        }
        let mut out = MPoly::zero(self.field);
        for (m, v) in &self.terms {
            out.add_term(*m, v.mul(c)?);
        }
        Ok(out)
    }

    pub fn mul_rational(&self, r: &Rational) -> MPoly {
        use num_traits::Zero;
        if r.is_zero() {
            return MPoly::zero(self.field);
        }
        MPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.mul_rational(r)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            field: self.field,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.field);
        for _ in 0..e {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Formal partial derivative.
    pub fn partial(&self, v: Var) -> MPoly {
        let i = v.index();
        let mut out = MPoly::zero(self.field);
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.exps;
            exps[i] -= 1;
            out.add_term(Monomial { exps }, c.mul_rational(&crate::arith::rat(e as i64)));
        }
        out
    }

    pub fn gradient(&self) -> [MPoly; 3] {
        [self.partial(Var::X), self.partial(Var::Y), self.partial(Var::Z)]
    }

    /// Evaluate at a point with coordinates in the same field.
    pub fn evaluate(&self, point: &[FieldElement; 3]) -> FieldElement {
        let mut powers: [Vec<FieldElement>; 3] =
            [vec![FieldElement::one(self.field)], vec![FieldElement::one(self.field)], vec![
                FieldElement::one(self.field),
            ]];
        for (i, p) in point.iter().enumerate() {
            let max = self.terms.keys().map(|m| m.exps[i]).max().unwrap_or(0);
            for k in 1..=max as usize {
                let next = powers[i][k - 1].mul(p).expect("same field");
                powers[i].push(next);
            }
        }
        let mut acc = FieldElement::zero(self.field);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..3 {
                term = term.mul(&powers[i][m.exps[i] as usize]).expect("same field");
            }
            acc = acc.add(&term).expect("same field");
        }
        acc
    }

    /// Re-express the polynomial over another field; all coefficients must
    /// be rational-valued.
    pub fn transfer(&self, field: FieldId) -> Result<MPoly, ArithError> {
        let mut out = MPoly::zero(field);
        for (m, c) in &self.terms {
            out.add_term(*m, c.transfer(field)?);
        }
        Ok(out)
    }

    fn check_same(&self, other: &MPoly) -> Result<(), ArithError> {
        if self.field != other.field {
            return Err(ArithError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    /// Linear substitution `f ↦ f(A·x)`: each variable is replaced by the
    /// corresponding row of `A` applied to (x, y, z). This is a right
    /// action: `substitute_linear(substitute_linear(f, A), B) = f((AB)·x)`.
    pub fn substitute_linear(&self, a: &Matrix3) -> Result<MPoly, ArithError> {
        if a.field() != self.field {
            return Err(ArithError::FieldMismatch(a.field(), self.field));
        }
        if self.is_zero() {
            return Ok(MPoly::zero(self.field));
        }
        if let Some(mapping) = monomial_action(a) {
            return Ok(self.substitute_monomial_action(&mapping));
        }
        self.substitute_dense(a)
    }

    /// Fast path when every row of the matrix has a single nonzero entry:
    /// the substitution permutes monomials up to scalars.
    fn substitute_monomial_action(&self, map: &[(usize, FieldElement); 3]) -> MPoly {
        let mut out = MPoly::zero(self.field);
        for (m, c) in &self.terms {
            let mut exps = [0u16; 3];
            let mut coeff = c.clone();
            for (vi, &(target, ref scalar)) in map.iter().enumerate() {
                let e = m.exps[vi];
                if e > 0 {
                    exps[target] += e;
                    coeff = coeff.mul(&scalar.pow(e as u32)).expect("same field");
                }
            }
            out.add_term(Monomial { exps }, coeff);
        }
        out
    }

    /// General substitution by nested Horner evaluation in the three
    /// linear forms, keeping every intermediate sparse.
    fn substitute_dense(&self, a: &Matrix3) -> Result<MPoly, ArithError> {
        let lin = |r: usize| {
            let mut p = MPoly::zero(self.field);
            for (ci, v) in Var::ALL.iter().enumerate() {
                let coeff = a.entry(r, ci).clone();
                if !coeff.is_zero() {
                    p.add_term(Monomial::var(*v), coeff);
                }
            }
            p
        };
        let lx = lin(0);
        let ly = lin(1);
        let lz = lin(2);

        // Regroup terms as z-degree → y-degree → x-coefficients.
        let mut by_k: BTreeMap<u16, BTreeMap<u16, Vec<(u16, FieldElement)>>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_k
                .entry(m.exps[2])
                .or_default()
                .entry(m.exps[1])
                .or_default()
                .push((m.exps[0], c.clone()));
        }

        let horner_x = |coeffs: &[(u16, FieldElement)]| -> Result<MPoly, ArithError> {
            let max_i = coeffs.iter().map(|&(i, _)| i).max().unwrap_or(0);
            let mut table: Vec<Option<FieldElement>> = vec![None; max_i as usize + 1];
            for (i, c) in coeffs {
                table[*i as usize] = Some(c.clone());
            }
            let mut acc = MPoly::zero(self.field);
            for i in (0..table.len()).rev() {
                if !acc.is_zero() {
                    acc = acc.mul(&lx)?;
                }
                if let Some(c) = table[i].take() {
                    acc.add_term(Monomial::ONE, c);
                }
            }
            Ok(acc)
        };

        let mut acc_k = MPoly::zero(self.field);
        let max_k = *by_k.keys().next_back().expect("nonzero poly");
        for k in (0..=max_k).rev() {
            if !acc_k.is_zero() {
                acc_k = acc_k.mul(&lz)?;
            }
            if let Some(by_j) = by_k.get(&k) {
                let mut acc_j = MPoly::zero(self.field);
                let max_j = *by_j.keys().next_back().expect("nonempty layer");
                for j in (0..=max_j).rev() {
                    if !acc_j.is_zero() {
                        acc_j = acc_j.mul(&ly)?;
                    }
                    if let Some(coeffs) = by_j.get(&j) {
                        acc_j = acc_j.add(&horner_x(coeffs)?)?;
                    }
                }
                acc_k = acc_k.add(&acc_j)?;
            }
        }
        Ok(acc_k)
    }

    /// Exact division: panics if `other` does not divide `self`.
    /// Used by the fraction-free elimination route.
    pub fn div_exact(&self, other: &MPoly) -> MPoly {
        let (lt_m, lt_c) = other.leading().expect("division by zero polynomial");
        let lt_c_inv = lt_c.inv().expect("nonzero leading coefficient");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.field);
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm
                .div(lt_m)
                .expect("exact division: leading term must divide");
            let qc = rc.mul(&lt_c_inv).expect("same field");
            let piece = other.mul_monomial(&qm).mul_scalar(&qc).expect("same field");
            rem = rem.sub(&piece).expect("same field");
            quot.add_term(qm, qc);
        }
        quot
    }

    /// Render as a sum of `coeff*x^a*y^b*z^c`, highest terms first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.len());
        for (m, c) in self.terms.iter().rev() {
            let coeff = format!("{}", c);
            let coeff = if coeff.contains(' ') {
                format!("({})", coeff)
            } else {
                coeff
            };
            if m.degree() == 0 {
                parts.push(coeff);
            } else {
                parts.push(format!("{}*{}", coeff, m));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for MPoly {
    /// JSON form: coefficient coordinate arrays keyed by `"a,b,c"`
    /// exponent strings, in grevlex order (ascending); the field is
    /// recorded once by the enclosing payload.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let key = format!("{},{},{}", m.exps[0], m.exps[1], m.exps[2]);
            map.serialize_entry(&key, &crate::arith::CoordsOnly(c))?;
        }
        map.end()
    }
}

/// A rectangular matrix of polynomials (Hessians, Jacobians, borders).
#[derive(Debug, Clone)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<MPoly>) -> Self {
        assert_eq!(entries.len(), rows * cols, "rectangular shape");
        PolyMatrix { rows, cols, entries }
    }

    pub fn entry(&self, r: usize, c: usize) -> &MPoly {
        &self.entries[r * self.cols + c]
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for r in 0..self.rows {
            if r == skip_row {
                continue;
            }
            for c in 0..self.cols {
                if c == skip_col {
                    continue;
                }
                entries.push(self.entry(r, c).clone());
            }
        }
        PolyMatrix::new(self.rows - 1, self.cols - 1, entries)
    }

    /// Determinant by cofactor expansion along the first row. Nothing
    /// built here exceeds 4×4.
    pub fn det(&self) -> MPoly {
        assert_eq!(self.rows, self.cols, "determinant of a square matrix");
        let field = self.entries[0].field();
        if self.rows == 1 {
            return self.entries[0].clone();
        }
        let mut acc = MPoly::zero(field);
        for c in 0..self.cols {
            let e = self.entry(0, c);
            if e.is_zero() {
                continue;
            }
            let sub = self.minor(0, c).det();
            let term = e.mul(&sub).expect("same field");
            acc = if c % 2 == 0 {
                acc.add(&term).expect("same field")
            } else {
                acc.sub(&term).expect("same field")
            };
        }
        acc
    }

    /// Determinant by fraction-free Bareiss elimination; an independent
    /// route used to cross-check the cofactor expansion.
    pub fn det_bareiss(&self) -> MPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let field = self.entries[0].field();
        let mut m: Vec<Vec<MPoly>> = (0..n)
            .map(|r| (0..n).map(|c| self.entry(r, c).clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev = MPoly::one(field);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return MPoly::zero(field),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let a = m[i][j].mul(&m[k][k]).expect("same field");
                    let b = m[i][k].mul(&m[k][j]).expect("same field");
                    let num = a.sub(&b).expect("same field");
                    m[i][j] = if prev.is_zero() {
                        MPoly::zero(field)
                    } else {
                        num.div_exact(&prev)
                    };
                }
            }
            for row in m.iter_mut().skip(k + 1) {
                row[k] = MPoly::zero(field);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign_flip {
            det.neg()
        } else {
            det
        }
    }
}

/// Detect a generalized permutation matrix (one nonzero entry per row);
/// returns, per variable, the target variable index and the scalar.
fn monomial_action(a: &Matrix3) -> Option<[(usize, FieldElement); 3]> {
    let mut map: Vec<(usize, FieldElement)> = Vec::with_capacity(3);
    for r in 0..3 {
        let mut found = None;
        for c in 0..3 {
            if !a.entry(r, c).is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((c, a.entry(r, c).clone()));
            }
        }
        map.push(found?);
    }
    map.try_into().ok()
}

/// The symmetric matrix of second partials.
pub fn hessian(f: &MPoly) -> PolyMatrix {
    let grads = f.gradient();
    let mut entries = Vec::with_capacity(9);
    for g in &grads {
        for v in Var::ALL {
            entries.push(g.partial(v));
        }
    }
    PolyMatrix::new(3, 3, entries)
}

/// The 4×4 matrix bordering `hessian(f)` with the gradient of `g` and a
/// zero corner.
pub fn bordered_hessian(f: &MPoly, g: &MPoly) -> PolyMatrix {
    let h = hessian(f);
    let grad = g.gradient();
    let field = f.field();
    let mut entries = Vec::with_capacity(16);
    for (r, border) in grad.iter().enumerate() {
        for c in 0..3 {
            entries.push(h.entry(r, c).clone());
        }
        entries.push(border.clone());
    }
    for gc in &grad {
        entries.push(gc.clone());
    }
    entries.push(MPoly::zero(field));
    PolyMatrix::new(4, 4, entries)
}

/// Determinant of the Jacobian matrix of three polynomials.
pub fn jacobian_det(f: &MPoly, g: &MPoly, h: &MPoly) -> MPoly {
    let mut entries = Vec::with_capacity(9);
    for p in [f, g, h] {
        for v in Var::ALL {
            entries.push(p.partial(v));
        }
    }
    PolyMatrix::new(3, 3, entries).det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn x() -> MPoly {
        MPoly::variable(FieldId::Q, Var::X)
    }
    fn y() -> MPoly {
        MPoly::variable(FieldId::Q, Var::Y)
    }
    fn z() -> MPoly {
        MPoly::variable(FieldId::Q, Var::Z)
    }

    #[test]
    fn grevlex_order_on_quadratics() {
        // descending: x² > xy > y² > xz > yz > z²
        let expect = [
            Monomial::new(2, 0, 0),
            Monomial::new(1, 1, 0),
            Monomial::new(0, 2, 0),
            Monomial::new(1, 0, 1),
            Monomial::new(0, 1, 1),
            Monomial::new(0, 0, 2),
        ];
        for w in expect.windows(2) {
            assert!(w[0] > w[1], "{} should exceed {}", w[0], w[1]);
        }
    }

    #[test]
    fn partial_derivative() {
        // ∂/∂x (x³y) = 3x²y
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 3, 1, 0)]);
        let expect = MPoly::from_int_terms(FieldId::Q, &[(3, 2, 1, 0)]);
        assert_eq!(f.partial(Var::X), expect);
    }

    #[test]
    fn euler_identity_on_klein_quartic() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 3, 1, 0), (1, 0, 3, 1), (1, 1, 0, 3)]);
        let sum = x()
            .mul(&f.partial(Var::X))
            .unwrap()
            .add(&y().mul(&f.partial(Var::Y)).unwrap())
            .unwrap()
            .add(&z().mul(&f.partial(Var::Z)).unwrap())
            .unwrap();
        assert_eq!(sum, f.mul_rational(&rat(4)));
    }

    #[test]
    fn hessian_det_of_round_conic() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 0, 0), (1, 0, 2, 0), (1, 0, 0, 2)]);
        let det = hessian(&f).det();
        assert_eq!(det, MPoly::from_int_terms(FieldId::Q, &[(8, 0, 0, 0)]));
    }

    #[test]
    fn klein_hessian_closed_form() {
        // −(1/54)·det H(x³y+y³z+z³x) = xy⁵+yz⁵+zx⁵−5x²y²z²
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 3, 1, 0), (1, 0, 3, 1), (1, 1, 0, 3)]);
        let phi = hessian(&f).det().mul_rational(&ratio(-1, 54));
        let expect = MPoly::from_int_terms(
            FieldId::Q,
            &[(1, 1, 5, 0), (1, 0, 1, 5), (1, 5, 0, 1), (-5, 2, 2, 2)],
        );
        assert_eq!(phi, expect);
    }

    #[test]
    fn hessian_is_symmetric() {
        let f = MPoly::from_int_terms(
            FieldId::Q,
            &[(2, 3, 1, 0), (1, 1, 1, 2), (-3, 0, 2, 2), (5, 4, 0, 0)],
        );
        let h = hessian(&f);
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(h.entry(r, c), h.entry(c, r));
            }
        }
    }

    #[test]
    fn substitution_by_identity_and_cyclic_shift() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 1, 0), (3, 0, 0, 4)]);
        let id = Matrix3::identity(FieldId::Q);
        assert_eq!(f.substitute_linear(&id).unwrap(), f);

        // T = [[0,0,1],[1,0,0],[0,1,0]] sends f(x,y,z) to f(z,x,y):
        // x ↦ z, y ↦ x, z ↦ y on the variables of each monomial.
        let t = cyclic_t();
        let xt = x().substitute_linear(&t).unwrap();
        assert_eq!(xt, z());
        let yt = y().substitute_linear(&t).unwrap();
        assert_eq!(yt, x());
    }

    fn cyclic_t() -> Matrix3 {
        let fe = |n: i64| FieldElement::from_int(FieldId::Q, n);
        Matrix3::new(
            FieldId::Q,
            [fe(0), fe(0), fe(1), fe(1), fe(0), fe(0), fe(0), fe(1), fe(0)],
        )
    }

    #[test]
    fn substitution_right_action_law() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 0, 1), (2, 0, 3, 0), (-1, 1, 1, 1)]);
        let fe = |n: i64| FieldElement::from_int(FieldId::Q, n);
        let a = Matrix3::new(
            FieldId::Q,
            [fe(1), fe(2), fe(0), fe(0), fe(1), fe(1), fe(1), fe(0), fe(1)],
        );
        let b = Matrix3::new(
            FieldId::Q,
            [fe(2), fe(0), fe(1), fe(1), fe(1), fe(0), fe(0), fe(3), fe(1)],
        );
        let lhs = f
            .substitute_linear(&a)
            .unwrap()
            .substitute_linear(&b)
            .unwrap();
        let rhs = f.substitute_linear(&a.mul(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dense_substitution_matches_monomial_path() {
        // A diagonal matrix takes both paths to the same answer when
        // fed through the generic dense routine.
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 1, 0), (3, 0, 0, 4), (-2, 1, 1, 1)]);
        let fe = |n: i64| FieldElement::from_int(FieldId::Q, n);
        let d = Matrix3::new(
            FieldId::Q,
            [fe(2), fe(0), fe(0), fe(0), fe(-1), fe(0), fe(0), fe(0), fe(3)],
        );
        let fast = f.substitute_linear(&d).unwrap();
        let slow = f.substitute_dense(&d).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn div_exact_recovers_factor() {
        let f = x().add(&y()).unwrap();
        let g = x().sub(&z()).unwrap().add(&MPoly::one(FieldId::Q)).unwrap();
        let prod = f.mul(&g).unwrap();
        assert_eq!(prod.div_exact(&f), g);
    }

    #[test]
    fn bareiss_matches_cofactor_on_4x4() {
        let e = |t: &[(i64, u16, u16, u16)]| MPoly::from_int_terms(FieldId::Q, t);
        let entries = vec![
            e(&[(1, 1, 0, 0)]),
            e(&[(2, 0, 1, 0)]),
            e(&[(1, 0, 0, 0)]),
            e(&[(0, 0, 0, 0)]),
            e(&[(1, 0, 0, 1)]),
            e(&[(1, 1, 0, 0), (1, 0, 0, 0)]),
            e(&[(3, 0, 0, 0)]),
            e(&[(1, 0, 1, 0)]),
            e(&[(2, 0, 0, 0)]),
            e(&[(1, 0, 0, 1)]),
            e(&[(1, 1, 1, 0)]),
            e(&[(1, 0, 0, 0)]),
            e(&[(1, 0, 1, 0)]),
            e(&[(0, 0, 0, 0)]),
            e(&[(1, 0, 0, 0)]),
            e(&[(1, 2, 0, 0)]),
        ];
        let m = PolyMatrix::new(4, 4, entries);
        assert_eq!(m.det(), m.det_bareiss());
    }

    #[test]
    fn text_and_json_forms() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(3, 2, 0, 0), (-1, 0, 1, 1)]);
        assert_eq!(f.to_text(), "3*x^2 + -1*y*z");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"0,1,1":[["-1","1"]],"2,0,0":[["3","1"]]}"#);
    }

    #[test]
    fn homogeneous_degree_detection() {
        let f = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 0, 0), (1, 0, 1, 1)]);
        assert_eq!(f.homogeneous_degree(), Some(2));
        let g = MPoly::from_int_terms(FieldId::Q, &[(1, 2, 0, 0), (1, 0, 1, 0)]);
        assert_eq!(g.homogeneous_degree(), None);
        assert!(!g.is_homogeneous());
    }
}

#[cfg(test)]
mod property_tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = MPoly> {
        proptest::collection::vec(((-5i64..=5), 0u16..3, 0u16..3, 0u16..3), 1..6).prop_map(|v| {
            MPoly::from_int_terms(FieldId::Q, &v)
        })
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix3> {
        proptest::collection::vec(-3i64..=3, 9).prop_map(|v| {
            let entries: Vec<FieldElement> = v
                .into_iter()
                .map(|n| FieldElement::from_int(FieldId::Q, n))
                .collect();
            Matrix3::new(FieldId::Q, entries.try_into().unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn substitution_is_ring_homomorphism(f in arb_poly(), g in arb_poly(), a in arb_matrix()) {
            let sum = f.add(&g).unwrap().substitute_linear(&a).unwrap();
            let sum2 = f.substitute_linear(&a).unwrap().add(&g.substitute_linear(&a).unwrap()).unwrap();
            prop_assert_eq!(sum, sum2);
            let prod = f.mul(&g).unwrap().substitute_linear(&a).unwrap();
            let prod2 = f.substitute_linear(&a).unwrap().mul(&g.substitute_linear(&a).unwrap()).unwrap();
            prop_assert_eq!(prod, prod2);
        }

        #[test]
        fn cofactor_det_matches_bareiss(entries in proptest::collection::vec(
            proptest::collection::vec(((-3i64..=3), 0u16..2, 0u16..2, 0u16..2), 0..3), 9)) {
            let polys: Vec<MPoly> = entries.iter().map(|t| MPoly::from_int_terms(FieldId::Q, t)).collect();
            let m = PolyMatrix::new(3, 3, polys);
            prop_assert_eq!(m.det(), m.det_bareiss());
        }

        #[test]
        fn euler_identity_for_homogeneous(exps in proptest::collection::vec((0u16..4, 0u16..4), 1..5)) {
            // build a homogeneous degree-6 polynomial
            let mut f = MPoly::zero(FieldId::Q);
            for (i, &(a, b)) in exps.iter().enumerate() {
                let (a, b) = (a.min(6), b.min(6 - a.min(6)));
                let c = 6 - a - b;
                f.add_term(Monomial::new(a, b, c), FieldElement::from_int(FieldId::Q, i as i64 + 1));
            }
            let lhs = MPoly::variable(FieldId::Q, Var::X).mul(&f.partial(Var::X)).unwrap()
                .add(&MPoly::variable(FieldId::Q, Var::Y).mul(&f.partial(Var::Y)).unwrap()).unwrap()
                .add(&MPoly::variable(FieldId::Q, Var::Z).mul(&f.partial(Var::Z)).unwrap()).unwrap();
            prop_assert_eq!(lhs, f.mul_rational(&rat(6)));
        }
    }
}
