//! Exact 3×3 matrices over a fixed coefficient field. These carry the
//! group generators and drive linear substitution into polynomials.

use crate::arith::{ArithError, FieldElement, FieldId, Rational};

/// A 3×3 matrix of field elements, row major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix3 {
    field: FieldId,
    entries: [FieldElement; 9],
}

impl Matrix3 {
    pub fn new(field: FieldId, entries: [FieldElement; 9]) -> Self {
        assert!(entries.iter().all(|e| e.field() == field), "entry field mismatch");
        Matrix3 { field, entries }
    }

    pub fn from_rows(field: FieldId, rows: [[FieldElement; 3]; 3]) -> Self {
        let [r0, r1, r2] = rows;
        let [a, b, c] = r0;
        let [d, e, f] = r1;
        let [g, h, i] = r2;
        Matrix3::new(field, [a, b, c, d, e, f, g, h, i])
    }

    pub fn identity(field: FieldId) -> Self {
        let z = || FieldElement::zero(field);
        let o = || FieldElement::one(field);
        Matrix3 {
            field,
            entries: [o(), z(), z(), z(), o(), z(), z(), z(), o()],
        }
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn entry(&self, row: usize, col: usize) -> &FieldElement {
        &self.entries[3 * row + col]
    }

    pub fn row(&self, r: usize) -> [&FieldElement; 3] {
        [self.entry(r, 0), self.entry(r, 1), self.entry(r, 2)]
    }

    pub fn mul(&self, other: &Matrix3) -> Result<Matrix3, ArithError> {
        if self.field != other.field {
            return Err(ArithError::FieldMismatch(self.field, other.field));
        }
        let mut out = Vec::with_capacity(9);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = FieldElement::zero(self.field);
                for k in 0..3 {
                    let p = self.entry(i, k).mul(other.entry(k, j))?;
                    acc = acc.add(&p)?;
                }
                out.push(acc);
            }
        }
        Ok(Matrix3 {
            field: self.field,
            entries: out.try_into().expect("nine entries"),
        })
    }

    pub fn scale(&self, s: &FieldElement) -> Result<Matrix3, ArithError> {
        let mut entries = Vec::with_capacity(9);
        for e in &self.entries {
            entries.push(e.mul(s)?);
        }
        Ok(Matrix3 {
            field: self.field,
            entries: entries.try_into().expect("nine entries"),
        })
    }

    pub fn scale_rational(&self, s: &Rational) -> Matrix3 {
        let entries: Vec<FieldElement> = self.entries.iter().map(|e| e.mul_rational(s)).collect();
        Matrix3 {
            field: self.field,
            entries: entries.try_into().expect("nine entries"),
        }
    }

    pub fn transpose(&self) -> Matrix3 {
        let e = |r: usize, c: usize| self.entry(r, c).clone();
        Matrix3 {
            field: self.field,
            entries: [
                e(0, 0),
                e(1, 0),
                e(2, 0),
                e(0, 1),
                e(1, 1),
                e(2, 1),
                e(0, 2),
                e(1, 2),
                e(2, 2),
            ],
        }
    }

    pub fn det(&self) -> FieldElement {
        let e = |r: usize, c: usize| self.entry(r, c);
        let minor = |r1: usize, c1: usize, r2: usize, c2: usize| {
            e(r1, c1)
                .mul(e(r2, c2))
                .and_then(|a| e(r1, c2).mul(e(r2, c1)).and_then(|b| a.sub(&b)))
                .expect("same field")
        };
        let m0 = e(0, 0).mul(&minor(1, 1, 2, 2)).expect("same field");
        let m1 = e(0, 1).mul(&minor(1, 0, 2, 2)).expect("same field");
        let m2 = e(0, 2).mul(&minor(1, 0, 2, 1)).expect("same field");
        m0.sub(&m1).and_then(|a| a.add(&m2)).expect("same field")
    }

    pub fn trace(&self) -> FieldElement {
        self.entry(0, 0)
            .add(self.entry(1, 1))
            .and_then(|a| a.add(self.entry(2, 2)))
            .expect("same field")
    }

    /// Sum of the principal 2×2 minors (the degree-2 elementary symmetric
    /// function of the eigenvalues).
    pub fn second_invariant(&self) -> FieldElement {
        let e = |r: usize, c: usize| self.entry(r, c);
        let minor = |a: usize, b: usize| {
            e(a, a)
                .mul(e(b, b))
                .and_then(|p| e(a, b).mul(e(b, a)).and_then(|q| p.sub(&q)))
                .expect("same field")
        };
        minor(0, 1)
            .add(&minor(0, 2))
            .and_then(|s| s.add(&minor(1, 2)))
            .expect("same field")
    }

    /// Inverse via the adjugate. Errors with `DivisionByZero` on singular
    /// input.
    pub fn inverse(&self) -> Result<Matrix3, ArithError> {
        let det = self.det();
        let det_inv = det.inv()?;
        let e = |r: usize, c: usize| self.entry(r, c);
        let cof = |r1: usize, c1: usize, r2: usize, c2: usize| {
            e(r1, c1)
                .mul(e(r2, c2))
                .and_then(|a| e(r1, c2).mul(e(r2, c1)).and_then(|b| a.sub(&b)))
                .expect("same field")
        };
        // adjugate entries (transposed cofactors)
        let adj = [
            cof(1, 1, 2, 2),
            cof(0, 2, 2, 1),
            cof(0, 1, 1, 2),
            cof(1, 2, 2, 0),
            cof(0, 0, 2, 2),
            cof(0, 2, 1, 0),
            cof(1, 0, 2, 1),
            cof(0, 1, 2, 0),
            cof(0, 0, 1, 1),
        ];
        let mut entries = Vec::with_capacity(9);
        for a in adj {
            entries.push(a.mul(&det_inv)?);
        }
        Ok(Matrix3 {
            field: self.field,
            entries: entries.try_into().expect("nine entries"),
        })
    }

    pub fn pow(&self, e: i32) -> Result<Matrix3, ArithError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix3::identity(self.field);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix3::identity(self.field)
    }

    /// True when `self = λ · other` for some scalar λ.
    pub fn is_scalar_multiple_of(&self, other: &Matrix3) -> bool {
        if self.field != other.field {
            return false;
        }
        self.projective_normalize() == other.projective_normalize()
    }

    /// Canonical representative of the scalar class: divide through by the
    /// first nonzero entry. Exact field arithmetic makes this canonical.
    pub fn projective_normalize(&self) -> Matrix3 {
        let lead = self
            .entries
            .iter()
            .find(|e| !e.is_zero())
            .expect("zero matrix has no scalar class");
        let inv = lead.inv().expect("nonzero entry inverts");
        self.scale(&inv).expect("same field")
    }
}
