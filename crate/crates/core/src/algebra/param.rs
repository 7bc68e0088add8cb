//! Deformation parameters and exact polynomials in them, truncated at a total degree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

pub const PARAM_COUNT: usize = 14;

/// The parameter alphabet. `H` is the bookkeeping deformation parameter used
/// when concrete rational values are quantized (each value `v` enters as `v*h`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    C1,
    C2,
    C3,
    Xi,
    BetaPlus,
    BetaMinus,
    Lambda,
    H,
}

impl Param {
    pub const ALL: [Param; PARAM_COUNT] = [
        Param::A1,
        Param::A2,
        Param::A3,
        Param::B1,
        Param::B2,
        Param::B3,
        Param::C1,
        Param::C2,
        Param::C3,
        Param::Xi,
        Param::BetaPlus,
        Param::BetaMinus,
        Param::Lambda,
        Param::H,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Param::A1 => "a1",
            Param::A2 => "a2",
            Param::A3 => "a3",
            Param::B1 => "b1",
            Param::B2 => "b2",
            Param::B3 => "b3",
            Param::C1 => "c1",
            Param::C2 => "c2",
            Param::C3 => "c3",
            Param::Xi => "xi",
            Param::BetaPlus => "beta_plus",
            Param::BetaMinus => "beta_minus",
            Param::Lambda => "lambda",
            Param::H => "h",
        }
    }

    pub fn from_name(name: &str) -> Option<Param> {
        Param::ALL.into_iter().find(|p| p.name() == name)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over the parameter alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u8; PARAM_COUNT]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; PARAM_COUNT])
    }

    pub fn var(p: Param) -> Self {
        let mut e = [0; PARAM_COUNT];
        e[p.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, p: Param) -> u32 {
        self.0[p.index()] as u32
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        Monomial(e)
    }

    /// `(param, exponent)` pairs with nonzero exponent, in alphabet order.
    pub fn factors(&self) -> impl Iterator<Item = (Param, u32)> + '_ {
        Param::ALL
            .into_iter()
            .filter(move |p| self.0[p.index()] > 0)
            .map(move |p| (p, self.0[p.index()] as u32))
    }
}

/// Graded lexicographic: lower total degree first, then earlier parameters first
/// (`a1 < a2`, `a1^2 < a1*a2 < a2^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact-rational polynomial in the parameters, with every term of total degree
/// above `order` discarded.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
    order: u32,
}

impl ParamPoly {
    pub fn zero(order: u32) -> Self {
        ParamPoly {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: u32) -> Self {
        Self::monomial(Monomial::one(), c, order)
    }

    pub fn int(n: i64, order: u32) -> Self {
        Self::constant(rational::int(n), order)
    }

    pub fn var(p: Param, order: u32) -> Self {
        Self::monomial(Monomial::var(p), Rational::one(), order)
    }

    pub fn monomial(m: Monomial, c: Rational, order: u32) -> Self {
        let mut out = Self::zero(order);
        if !c.is_zero() && m.degree() <= order {
            out.terms.insert(m, c);
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one())
    }

    /// The value if the polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Lowest total degree among the terms; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    pub fn homogeneous_part(&self, degree: u32) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
            order: self.order,
        }
    }

    /// Re-truncates at a lower (or equal) order.
    pub fn truncate(&self, order: u32) -> ParamPoly {
        ParamPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
            order,
        }
    }

    /// Same terms, tagged with a different order (terms above it are dropped).
    pub fn with_order(&self, order: u32) -> ParamPoly {
        self.truncate(order)
    }

    pub fn depends_on(&self, p: Param) -> bool {
        self.terms.keys().any(|m| m.exponent(p) > 0)
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
            order: self.order,
        }
    }

    pub fn try_mul(&self, other: &ParamPoly) -> Result<ParamPoly> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = BTreeMap::new();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if da + mb.degree() > self.order {
                    // terms are sorted by degree
                    break;
                }
                add_term(&mut out, ma.mul(mb), ca * cb);
            }
        }
        Ok(ParamPoly {
            terms: out,
            order: self.order,
        })
    }

    pub fn try_add(&self, other: &ParamPoly) -> Result<ParamPoly> {
        if self.order != other.order {
            return Err(Error::TruncationMismatch {
                left: self.order,
                right: other.order,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> ParamPoly {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Ring homomorphism sending each listed parameter to a polynomial; unlisted
    /// parameters are kept.
    pub fn substitute(&self, map: &BTreeMap<Param, ParamPoly>) -> ParamPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            let mut term = ParamPoly::one(self.order);
            let mut kept = Monomial::one();
            for (p, e) in m.factors() {
                match map.get(&p) {
                    Some(v) => {
                        let v = v.with_order(self.order);
                        term = &term * &v.pow(e);
                    }
                    None => {
                        for _ in 0..e {
                            kept = kept.mul(&Monomial::var(p));
                        }
                    }
                }
            }
            let term = &term * &ParamPoly::monomial(kept, c.clone(), self.order);
            out += &term;
        }
        out
    }

    /// Evaluates at a full rational point (unlisted parameters are treated as zero).
    pub fn evaluate(&self, point: &BTreeMap<Param, Rational>) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (p, e) in m.factors() {
                let x = point.get(&p).cloned().unwrap_or_else(Rational::zero);
                for _ in 0..e {
                    v *= &x;
                }
            }
            total += v;
        }
        total
    }

    /// Divides by the coefficient of the lowest term so that term becomes `1`.
    /// Two polynomials differing by a nonzero scalar normalize identically.
    pub fn normalized(&self) -> ParamPoly {
        match self.terms.values().next() {
            Some(c) => self.scale(&(Rational::one() / c)),
            None => self.clone(),
        }
    }
}

fn add_term(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly[K={}]({})", self.order, self)
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_poly(self))
    }
}

// Operator impls panic on mismatched orders; use the `try_` forms at API
// boundaries where orders come from user input.

impl Add<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        self.try_add(rhs)
            .expect("ParamPoly truncation orders must match")
    }
}

impl Sub<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self + &(-rhs)
    }
}

impl Mul<&ParamPoly> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        self.try_mul(rhs)
            .expect("ParamPoly truncation orders must match")
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            order: self.order,
        }
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: ParamPoly) -> ParamPoly {
        &self + &rhs
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        &self - &rhs
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        assert_eq!(
            self.order, rhs.order,
            "ParamPoly truncation orders must match"
        );
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, *m, c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        assert_eq!(
            self.order, rhs.order,
            "ParamPoly truncation orders must match"
        );
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, *m, -c.clone());
        }
    }
}

/// `poly_mul`: exact product truncated at the shared order.
pub fn poly_mul(p: &ParamPoly, q: &ParamPoly) -> Result<ParamPoly> {
    p.try_mul(q)
}
