//! Exact scalar arithmetic: arbitrary-precision rationals and the fixed
//! algebraic number fields that house every constant appearing in the
//! generator matrices and invariant polynomials.
//!
//! There is no generic field-tower machinery. Exactly four coefficient
//! fields exist, one per coordinate frame:
//!
//! * `Q`: the rationals,
//! * `Zeta15`: Q(ζ₁₅), which contains ρ = e^{2πi/3} (= ζ⁵), √5 (as a
//!   quadratic Gauss sum over ζ₅ = ζ³) and hence τ = (1+√5)/2,
//! * `Zeta7`: Q(ζ₇), which contains √−7 as the Gauss sum
//!   ζ+ζ²+ζ⁴−ζ³−ζ⁵−ζ⁶,
//! * `Eta`: Q\[e\]/(4e²+3e+9), the quadratic field of the constant
//!   η = (−3+3√−15)/8.
//!
//! Elements are dense coordinate vectors over the power basis of the
//! field generator, always reduced modulo the (monic) minimal polynomial.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Exact rational scalar. Always stored reduced with positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ArithError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldId, FieldId),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element of {0} is not rational")]
    NotRational(FieldId),
}

/// Identifier of one of the four fixed coefficient fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldId {
    /// The rational numbers.
    Q,
    /// Q(ζ₁₅), degree 8 over Q.
    Zeta15,
    /// Q(ζ₇), degree 6 over Q.
    Zeta7,
    /// Q\[e\]/(4e²+3e+9), degree 2 over Q.
    Eta,
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Description of a number field: degree and monic minimal polynomial of
/// the generator. The three extension fields used here are irreducible
/// over Q by construction (cyclotomic polynomials; a quadratic with
/// negative discriminant); this is asserted in tests, not checked
/// generically.
#[derive(Debug, Clone)]
pub struct NumberField {
    pub id: FieldId,
    pub degree: usize,
    /// Coefficients c₀..c_{n} of the monic minimal polynomial, c_n = 1.
    pub minimal_polynomial: Vec<Rational>,
}

impl FieldId {
    pub fn degree(self) -> usize {
        match self {
            FieldId::Q => 1,
            FieldId::Zeta15 => 8,
            FieldId::Zeta7 => 6,
            FieldId::Eta => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldId::Q => "Q",
            FieldId::Zeta15 => "zeta15",
            FieldId::Zeta7 => "zeta7",
            FieldId::Eta => "eta",
        }
    }

    pub fn parse(s: &str) -> Option<FieldId> {
        match s {
            "Q" | "q" => Some(FieldId::Q),
            "zeta15" => Some(FieldId::Zeta15),
            "zeta7" => Some(FieldId::Zeta7),
            "eta" => Some(FieldId::Eta),
            _ => None,
        }
    }

    /// Full field descriptor, with the monic minimal polynomial.
    pub fn describe(self) -> NumberField {
        let minimal_polynomial = match self {
            // x - 1 is a placeholder of degree 1; Q needs no reduction.
            FieldId::Q => vec![rat(0), rat(1)],
            // Φ₁₅(x) = x⁸ − x⁷ + x⁵ − x⁴ + x³ − x + 1
            FieldId::Zeta15 => vec![
                rat(1),
                rat(-1),
                rat(0),
                rat(1),
                rat(-1),
                rat(1),
                rat(0),
                rat(-1),
                rat(1),
            ],
            // Φ₇(x) = x⁶ + x⁵ + x⁴ + x³ + x² + x + 1
            FieldId::Zeta7 => vec![
                rat(1),
                rat(1),
                rat(1),
                rat(1),
                rat(1),
                rat(1),
                rat(1),
            ],
            // 4e² + 3e + 9, made monic: e² + (3/4)e + 9/4
            FieldId::Eta => vec![ratio(9, 4), ratio(3, 4), rat(1)],
        };
        NumberField {
            id: self,
            degree: self.degree(),
            minimal_polynomial,
        }
    }

    /// The tail of the monic minimal polynomial rewritten as
    /// `g^deg = Σ tail[i] g^i`.
    fn reduction_tail(self) -> &'static [Rational] {
        static TAILS: OnceLock<[Vec<Rational>; 4]> = OnceLock::new();
        let tails = TAILS.get_or_init(|| {
            let make = |id: FieldId| {
                let mp = id.describe().minimal_polynomial;
                mp[..id.degree()].iter().map(|c| -c).collect::<Vec<_>>()
            };
            [
                make(FieldId::Q),
                make(FieldId::Zeta15),
                make(FieldId::Zeta7),
                make(FieldId::Eta),
            ]
        });
        match self {
            FieldId::Q => &tails[0],
            FieldId::Zeta15 => &tails[1],
            FieldId::Zeta7 => &tails[2],
            FieldId::Eta => &tails[3],
        }
    }
}

/// An exact element of one of the fixed fields: the unique reduced
/// residue, stored densely over the power basis of the generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldId,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn zero(field: FieldId) -> Self {
        FieldElement {
            field,
            coords: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: FieldId) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: FieldId, r: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = r;
        FieldElement { field, coords }
    }

    pub fn from_int(field: FieldId, n: i64) -> Self {
        Self::from_rational(field, rat(n))
    }

    /// Element from raw coordinates; reduces modulo the minimal polynomial
    /// if more than `degree` coordinates are supplied.
    pub fn from_coords(field: FieldId, mut coords: Vec<Rational>) -> Self {
        reduce_in_place(field, &mut coords);
        coords.resize(field.degree(), Rational::zero());
        FieldElement { field, coords }
    }

    /// The generator of the field (ζ₁₅, ζ₇ or η; 1 for Q).
    pub fn generator(field: FieldId) -> Self {
        if field == FieldId::Q {
            return Self::one(field);
        }
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[1] = Rational::one();
        FieldElement { field, coords }
    }

    /// `generator^k`, reduced.
    pub fn generator_power(field: FieldId, k: usize) -> Self {
        let mut coords = vec![Rational::zero(); k + 1];
        coords[k] = Rational::one();
        Self::from_coords(field, coords)
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, if the element lies in Q ⊂ field.
    pub fn to_rational(&self) -> Result<Rational, ArithError> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Ok(self.coords[0].clone())
        } else {
            Err(ArithError::NotRational(self.field))
        }
    }

    /// Re-express a rational-valued element in another field.
    pub fn transfer(&self, field: FieldId) -> Result<FieldElement, ArithError> {
        Ok(FieldElement::from_rational(field, self.to_rational()?))
    }

    fn check_same(&self, other: &FieldElement) -> Result<(), ArithError> {
        if self.field != other.field {
            return Err(ArithError::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement, ArithError> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement {
            field: self.field,
            coords,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement, ArithError> {
        self.check_same(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement {
            field: self.field,
            coords,
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement, ArithError> {
        self.check_same(other)?;
        let n = self.field.degree();
        if n == 1 {
            return Ok(FieldElement {
                field: self.field,
                coords: vec![&self.coords[0] * &other.coords[0]],
            });
        }
        if let FieldId::Zeta15 | FieldId::Zeta7 = self.field {
            return Ok(self.mul_integer_path(other));
        }
        let mut conv = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        reduce_in_place(self.field, &mut conv);
        conv.truncate(n);
        Ok(FieldElement {
            field: self.field,
            coords: conv,
        })
    }

    /// Multiplication over the cyclotomic fields via one integer
    /// convolution over a common denominator; the reduction tails are
    /// integral, so only the final coordinates pay a gcd.
    fn mul_integer_path(&self, other: &FieldElement) -> FieldElement {
        use num_integer::Integer;
        let n = self.field.degree();
        let scale = |coords: &[Rational]| -> (Vec<BigInt>, BigInt) {
            let mut den = BigInt::one();
            for c in coords {
                den = den.lcm(c.denom());
            }
            let nums = coords
                .iter()
                .map(|c| c.numer() * (&den / c.denom()))
                .collect();
            (nums, den)
        };
        let (na, da) = scale(&self.coords);
        let (nb, db) = scale(&other.coords);
        let zero = BigInt::zero();
        let mut conv = vec![BigInt::zero(); 2 * n - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        let tail: &[i64] = match self.field {
            // ζ₁₅⁸ = ζ⁷ − ζ⁵ + ζ⁴ − ζ³ + ζ − 1
            FieldId::Zeta15 => &[-1, 1, 0, -1, 1, -1, 0, 1],
            // ζ₇⁶ = −(1 + ζ + ζ² + ζ³ + ζ⁴ + ζ⁵)
            FieldId::Zeta7 => &[-1, -1, -1, -1, -1, -1],
            _ => unreachable!(),
        };
        for k in (n..2 * n - 1).rev() {
            let c = std::mem::replace(&mut conv[k], zero.clone());
            if c.is_zero() {
                continue;
            }
            for (i, &t) in tail.iter().enumerate() {
                match t {
                    0 => {}
                    1 => conv[k - n + i] += &c,
                    -1 => conv[k - n + i] -= &c,
                    _ => conv[k - n + i] += &c * t,
                }
            }
        }
        conv.truncate(n);
        let den = da * db;
        let coords = conv
            .into_iter()
            .map(|num| {
                if num.is_zero() {
                    Rational::zero()
                } else {
                    Rational::new(num, den.clone())
                }
            })
            .collect();
        FieldElement {
            field: self.field,
            coords,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> FieldElement {
        FieldElement {
            field: self.field,
            coords: self.coords.iter().map(|a| a * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// coordinate polynomial and the minimal polynomial.
    pub fn inv(&self) -> Result<FieldElement, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(FieldElement {
                field: self.field,
                coords: vec![self.coords[0].recip()],
            });
        }
        let modulus = self.field.describe().minimal_polynomial;
        let inv_poly = poly_mod_inverse(&self.coords, &modulus)
            .expect("minimal polynomial is irreducible, nonzero elements invert");
        let mut coords = inv_poly;
        coords.resize(self.field.degree(), Rational::zero());
        Ok(FieldElement {
            field: self.field,
            coords,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, ArithError> {
        self.mul(&other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(r) = self.to_rational() {
            return write!(f, "{}", r);
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            if k == 0 {
                write!(f, "{}", a)?;
            } else {
                if !a.is_one() {
                    write!(f, "{}*", a)?;
                }
                if k == 1 {
                    write!(f, "g")?;
                } else {
                    write!(f, "g^{}", k)?;
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for FieldElement {
    /// JSON object `{"field": id, "coords": [["num","den"], ...]}` with
    /// decimal strings for the big integers.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FieldElement", 2)?;
        st.serialize_field("field", self.field.name())?;
        st.serialize_field("coords", &CoordsOnly(self))?;
        st.end()
    }
}

/// Serialization of just the coordinate vector, used standalone inside
/// polynomial payloads where the field is recorded once at the top.
pub struct CoordsOnly<'a>(pub &'a FieldElement);

impl Serialize for CoordsOnly<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.coords.len()))?;
        for c in &self.0.coords {
            seq.serialize_element(&[c.numer().to_string(), c.denom().to_string()])?;
        }
        seq.end()
    }
}

/// Parse a `[["num","den"],...]` coordinate array back into an element.
pub fn element_from_coord_strings(
    field: FieldId,
    coords: &[[String; 2]],
) -> Result<FieldElement, String> {
    let mut v = Vec::with_capacity(coords.len());
    for [n, d] in coords {
        let n = BigInt::from_str(n).map_err(|e| e.to_string())?;
        let d = BigInt::from_str(d).map_err(|e| e.to_string())?;
        if d.is_zero() {
            return Err("zero denominator".into());
        }
        v.push(Rational::new(n, d));
    }
    Ok(FieldElement::from_coords(field, v))
}

/// Reduce a coordinate vector modulo the monic minimal polynomial of the
/// field generator (in place; leaves length unchanged below `degree`).
fn reduce_in_place(field: FieldId, coords: &mut Vec<Rational>) {
    let n = field.degree();
    if coords.len() <= n {
        return;
    }
    let tail = field.reduction_tail();
    for k in (n..coords.len()).rev() {
        let c = std::mem::replace(&mut coords[k], Rational::zero());
        if c.is_zero() {
            continue;
        }
        for (i, t) in tail.iter().enumerate() {
            if !t.is_zero() {
                let add = &c * t;
                coords[k - n + i] += add;
            }
        }
    }
    coords.truncate(n);
}

// Univariate polynomial helpers over Q, used only for field inversion.

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().map(Rational::is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    assert!(!bb.is_empty(), "division by zero polynomial");
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db || (rem.len() == db + 1 && db == 0 && !rem.is_empty()) {
        if rem.len() < db + 1 {
            break;
        }
        let dr = rem.len() - 1;
        let factor = &rem[dr] / &lead;
        quot[dr - db] = factor.clone();
        for i in 0..=db {
            let sub = &factor * &bb[i];
            rem[dr - db + i] -= sub;
        }
        poly_trim(&mut rem);
        if dr == db {
            break;
        }
    }
    poly_trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` in Q[x], when gcd(a, m) is a nonzero constant.
fn poly_mod_inverse(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    // Extended Euclid: r0 = m, r1 = a; keep s only for the a-side.
    let mut r0 = m.to_vec();
    poly_trim(&mut r0);
    let mut r1 = a.to_vec();
    poly_trim(&mut r1);
    let mut s0: Vec<Rational> = vec![];
    let mut s1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() && r1.len() > 1 {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if r1.is_empty() {
        return None;
    }
    // r1 is a nonzero constant c; inverse is s1 / c, reduced mod m.
    let c = r1[0].clone();
    let mut inv: Vec<Rational> = s1.iter().map(|x| x / &c).collect();
    let (_, rem) = poly_divmod(&inv, m);
    inv = rem;
    Some(inv)
}

/// Coordinate frame: a group together with the coordinates its invariants
/// are expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Frame {
    Valentiner,
    Icosahedral,
    Klein,
    IcosahedralWiman,
    ValentinerWiman,
}

impl Frame {
    pub fn field(self) -> FieldId {
        match self {
            Frame::Valentiner | Frame::Icosahedral => FieldId::Zeta15,
            Frame::Klein => FieldId::Zeta7,
            Frame::IcosahedralWiman => FieldId::Eta,
            Frame::ValentinerWiman => FieldId::Q,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Frame::Valentiner => "V",
            Frame::Icosahedral => "I",
            Frame::Klein => "K",
            Frame::IcosahedralWiman => "I-wiman",
            Frame::ValentinerWiman => "V-wiman",
        }
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The named constants of a frame, each satisfying its defining relation:
/// ρ²+ρ+1 = 0, τ² = τ+1, Φ₇(ζ) = 0, 4η²+3η+9 = 0, √5² = 5, √−7² = −7.
#[derive(Debug, Clone)]
pub struct Constants {
    pub field: FieldId,
    pub rho: Option<FieldElement>,
    pub tau: Option<FieldElement>,
    pub sqrt5: Option<FieldElement>,
    pub zeta: Option<FieldElement>,
    pub sqrt_minus7: Option<FieldElement>,
    pub eta: Option<FieldElement>,
}

/// ρ = e^{2πi/3} = ζ₁₅⁵ in Q(ζ₁₅).
pub fn rho() -> FieldElement {
    FieldElement::generator_power(FieldId::Zeta15, 5)
}

/// √5 as the Gauss sum over ζ₅ = ζ₁₅³: ζ₅+ζ₅⁴−ζ₅²−ζ₅³, the positive root.
pub fn sqrt5() -> FieldElement {
    let z = |k: usize| FieldElement::generator_power(FieldId::Zeta15, k);
    z(3).sub(&z(6))
        .and_then(|a| a.sub(&z(9)))
        .and_then(|a| a.add(&z(12)))
        .expect("same field")
}

/// τ = (1+√5)/2, the golden ratio, in Q(ζ₁₅).
pub fn tau() -> FieldElement {
    FieldElement::one(FieldId::Zeta15)
        .add(&sqrt5())
        .expect("same field")
        .mul_rational(&ratio(1, 2))
}

/// ζ = e^{2πi/7}, the generator of Q(ζ₇).
pub fn zeta7() -> FieldElement {
    FieldElement::generator(FieldId::Zeta7)
}

/// √−7 as the Gauss sum ζ+ζ²+ζ⁴−ζ³−ζ⁵−ζ⁶ (the root with positive
/// imaginary part; this is the branch that puts the reflection generator
/// of the Klein lift in SL(3, C)).
pub fn sqrt_minus7() -> FieldElement {
    let z = |k: usize| FieldElement::generator_power(FieldId::Zeta7, k);
    let mut acc = z(1);
    for (k, sign) in [(2usize, 1i64), (4, 1), (3, -1), (5, -1), (6, -1)] {
        let term = z(k).mul_rational(&rat(sign));
        acc = acc.add(&term).expect("same field");
    }
    acc
}

/// η, the generator of Q\[e\]/(4e²+3e+9); equals (−3+3√−15)/8.
pub fn eta() -> FieldElement {
    FieldElement::generator(FieldId::Eta)
}

/// The named constants available in the canonical field of a frame.
pub fn embed_constants(frame: Frame) -> Constants {
    let field = frame.field();
    let mut c = Constants {
        field,
        rho: None,
        tau: None,
        sqrt5: None,
        zeta: None,
        sqrt_minus7: None,
        eta: None,
    };
    match frame {
        Frame::Valentiner | Frame::Icosahedral => {
            c.rho = Some(rho());
            c.tau = Some(tau());
            c.sqrt5 = Some(sqrt5());
        }
        Frame::Klein => {
            c.zeta = Some(zeta7());
            c.sqrt_minus7 = Some(sqrt_minus7());
        }
        Frame::IcosahedralWiman => {
            c.eta = Some(eta());
        }
        Frame::ValentinerWiman => {}
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(field: FieldId, n: i64) -> FieldElement {
        FieldElement::from_int(field, n)
    }

    #[test]
    fn rational_inverse() {
        let two = fe(FieldId::Q, 2);
        assert_eq!(two.inv().unwrap(), FieldElement::from_rational(FieldId::Q, ratio(1, 2)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let z = FieldElement::zero(FieldId::Zeta15);
        assert_eq!(z.inv().unwrap_err(), ArithError::DivisionByZero);
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let a = fe(FieldId::Q, 1);
        let b = fe(FieldId::Zeta7, 1);
        assert!(matches!(a.add(&b), Err(ArithError::FieldMismatch(_, _))));
    }

    #[test]
    fn rho_satisfies_defining_relation() {
        let r = rho();
        let sum = r
            .mul(&r)
            .unwrap()
            .add(&r)
            .unwrap()
            .add(&FieldElement::one(FieldId::Zeta15))
            .unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn tau_is_golden() {
        let t = tau();
        let t2 = t.mul(&t).unwrap();
        let t_plus_1 = t.add(&FieldElement::one(FieldId::Zeta15)).unwrap();
        assert_eq!(t2, t_plus_1);
    }

    #[test]
    fn eta_satisfies_quadratic() {
        let e = eta();
        let v = e
            .mul(&e)
            .unwrap()
            .mul_rational(&rat(4))
            .add(&e.mul_rational(&rat(3)))
            .unwrap()
            .add(&fe(FieldId::Eta, 9))
            .unwrap();
        assert!(v.is_zero());
    }

    /// Independent oracle: expand a Gauss-sum square as an integer
    /// convolution and long-divide by the cyclotomic polynomial, without
    /// going through FieldElement multiplication.
    fn gauss_square_reduced(signs: &[i64], modulus: &[i64]) -> Vec<Rational> {
        let n = signs.len();
        let mut conv = vec![0i64; 2 * n - 1];
        for i in 0..n {
            for j in 0..n {
                conv[i + j] += signs[i] * signs[j];
            }
        }
        let mut rem: Vec<Rational> = conv.into_iter().map(rat).collect();
        let m: Vec<Rational> = modulus.iter().map(|&c| rat(c)).collect();
        let (_, r) = super::poly_divmod(&rem, &m);
        rem = r;
        rem.resize(m.len() - 1, Rational::zero());
        rem
    }

    #[test]
    fn sqrt_minus7_squares_to_minus7() {
        let s = sqrt_minus7();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, fe(FieldId::Zeta7, -7));
        // Oracle route, straight from the Gauss-sum coefficients.
        let oracle = gauss_square_reduced(&[0, 1, 1, -1, 1, -1, -1], &[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(sq.coords(), &oracle[..]);
    }

    #[test]
    fn sqrt5_squares_to_5() {
        let s = sqrt5();
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, fe(FieldId::Zeta15, 5));
        // Oracle route: √5 = ζ³ − ζ⁶ − ζ⁹ + ζ¹² as an unreduced vector.
        let oracle = gauss_square_reduced(
            &[0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 1],
            &[1, -1, 0, 1, -1, 1, 0, -1, 1],
        );
        assert_eq!(sq.coords(), &oracle[..]);
    }

    #[test]
    fn zeta7_has_order_seven() {
        let z = zeta7();
        assert!(z.pow(7).is_one());
        assert!(!z.pow(1).is_one());
    }

    #[test]
    fn inverse_round_trips() {
        let z = zeta7();
        let a = z
            .pow(3)
            .mul_rational(&ratio(7, 3))
            .add(&fe(FieldId::Zeta7, 2))
            .unwrap();
        let inv = a.inv().unwrap();
        assert!(a.mul(&inv).unwrap().is_one());

        let e = eta().add(&fe(FieldId::Eta, 5)).unwrap();
        assert!(e.mul(&e.inv().unwrap()).unwrap().is_one());
    }

    #[test]
    fn embed_constants_per_frame() {
        let v = embed_constants(Frame::Valentiner);
        assert_eq!(v.field, FieldId::Zeta15);
        assert!(v.rho.is_some() && v.tau.is_some() && v.sqrt5.is_some());
        assert!(v.zeta.is_none());

        let k = embed_constants(Frame::Klein);
        assert!(k.zeta.is_some() && k.sqrt_minus7.is_some());
        assert!(k.rho.is_none());

        let iw = embed_constants(Frame::IcosahedralWiman);
        assert!(iw.eta.is_some());

        let vw = embed_constants(Frame::ValentinerWiman);
        assert_eq!(vw.field, FieldId::Q);
        assert!(vw.eta.is_none() && vw.rho.is_none());
    }

    #[test]
    fn serialization_shape() {
        let t = tau();
        let json = serde_json::to_string(&t).unwrap();
        // τ = (1+√5)/2 = 1 − ζ² + ζ³ − ζ⁷ over the power basis
        assert_eq!(
            json,
            r#"{"field":"zeta15","coords":[["1","1"],["0","1"],["-1","1"],["1","1"],["0","1"],["0","1"],["0","1"],["-1","1"]]}"#
        );
        // round trip
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let field = FieldId::parse(v["field"].as_str().unwrap()).unwrap();
        let coords: Vec<[String; 2]> = serde_json::from_value(v["coords"].clone()).unwrap();
        let back = element_from_coord_strings(field, &coords).unwrap();
        assert_eq!(back, t);
    }
}

#[cfg(test)]
mod axiom_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_element(field: FieldId) -> impl Strategy<Value = FieldElement> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), field.degree()).prop_map(move |v| {
            FieldElement::from_coords(field, v.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms_zeta15(a in arb_element(FieldId::Zeta15),
                               b in arb_element(FieldId::Zeta15),
                               c in arb_element(FieldId::Zeta15)) {
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&ab_c, &a_bc);
            let distl = a.mul(&b.add(&c).unwrap()).unwrap();
            let distr = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(&distl, &distr);
            if !a.is_zero() {
                prop_assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
            }
        }

        #[test]
        fn integer_mul_path_matches_generic(a in arb_element(FieldId::Zeta15),
                                            b in arb_element(FieldId::Zeta15)) {
            // the two multiplication routes agree coordinate for coordinate
            let fast = a.mul(&b).unwrap();
            let mut conv = vec![Rational::zero(); 15];
            for (i, x) in a.coords().iter().enumerate() {
                for (j, y) in b.coords().iter().enumerate() {
                    conv[i + j] += x * y;
                }
            }
            let slow = FieldElement::from_coords(FieldId::Zeta15, conv);
            prop_assert_eq!(fast, slow);
        }

        #[test]
        fn field_axioms_eta(a in arb_element(FieldId::Eta), b in arb_element(FieldId::Eta)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            if !b.is_zero() {
                let q = a.div(&b).unwrap();
                prop_assert_eq!(q.mul(&b).unwrap(), a);
            }
        }
    }
}
