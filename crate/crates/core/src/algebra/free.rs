//! Finite linear combinations of words in `{M, A+, A-}` over [`ParamPoly`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use super::param::{Param, ParamPoly};
use super::rational::Rational;
use super::word::{Gen, Word};

#[derive(Clone, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Word, ParamPoly>,
    order: u32,
}

impl FreeElement {
    pub fn zero(order: u32) -> Self {
        FreeElement {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn one(order: u32) -> Self {
        Self::scalar(ParamPoly::one(order))
    }

    pub fn scalar(c: ParamPoly) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn gen(g: Gen, order: u32) -> Self {
        Self::term(Word::letter(g), ParamPoly::one(order))
    }

    pub fn word(w: Word, order: u32) -> Self {
        Self::term(w, ParamPoly::one(order))
    }

    pub fn term(w: Word, c: ParamPoly) -> Self {
        let mut out = Self::zero(c.order());
        if !c.is_zero() {
            out.terms.insert(w, c);
        }
        out
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> ParamPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| ParamPoly::zero(self.order))
    }

    pub fn add_term(&mut self, w: Word, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &FreeElement, c: &ParamPoly) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> FreeElement {
        let mut out = Self::zero(self.order);
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> FreeElement {
        self.map_coefficients(|p| p.scale(c))
    }

    /// `nc_mul`: concatenation of words, bilinear, without reordering.
    pub fn nc_mul(&self, other: &FreeElement) -> FreeElement {
        let mut out = Self::zero(self.order);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), &(ca * cb));
            }
        }
        out
    }

    pub fn nc_pow(&self, n: u32) -> FreeElement {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = acc.nc_mul(self);
        }
        acc
    }

    /// Lowest parameter degree over all coefficients; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(ParamPoly::min_degree).min()
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_normal)
    }

    /// `true` if every word is a power of `g` (including the empty word).
    pub fn is_in_span_of_powers(&self, g: Gen) -> bool {
        self.terms
            .keys()
            .all(|w| w.letters().iter().all(|&h| h == g))
    }

    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> FreeElement {
        let mut out = Self::zero(self.order);
        for (w, c) in &self.terms {
            let v = f(c);
            out.order = v.order();
            out.add_term(w.clone(), &v);
        }
        out
    }

    pub fn homogeneous_part(&self, degree: u32) -> FreeElement {
        self.map_coefficients(|c| c.homogeneous_part(degree))
    }

    pub fn truncate(&self, order: u32) -> FreeElement {
        let mut out = self.map_coefficients(|c| c.truncate(order));
        out.order = order;
        out
    }

    pub fn substitute(&self, map: &BTreeMap<Param, ParamPoly>) -> FreeElement {
        self.map_coefficients(|c| c.substitute(map))
    }

    /// Linear extension of a letter-to-letter map with signs.
    pub fn map_words(&self, f: impl Fn(&Word) -> (Word, Rational)) -> FreeElement {
        let mut out = Self::zero(self.order);
        for (w, c) in &self.terms {
            let (w2, s) = f(w);
            out.add_term(w2, &c.scale(&s));
        }
        out
    }
}

impl fmt::Debug for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeElement[K={}]({})", self.order, self)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_free(self))
    }
}

impl AddAssign<&FreeElement> for FreeElement {
    fn add_assign(&mut self, rhs: &FreeElement) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl SubAssign<&FreeElement> for FreeElement {
    fn sub_assign(&mut self, rhs: &FreeElement) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), &-c);
        }
    }
}

impl Add<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&FreeElement> for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &FreeElement {
    type Output = FreeElement;
    fn neg(self) -> FreeElement {
        self.map_coefficients(|c| -c)
    }
}

impl Add for FreeElement {
    type Output = FreeElement;
    fn add(mut self, rhs: FreeElement) -> FreeElement {
        self += &rhs;
        self
    }
}

impl Sub for FreeElement {
    type Output = FreeElement;
    fn sub(mut self, rhs: FreeElement) -> FreeElement {
        self -= &rhs;
        self
    }
}

/// `nc_mul` as a free function.
pub fn nc_mul(x: &FreeElement, y: &FreeElement) -> FreeElement {
    x.nc_mul(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    const K: u32 = 6;

    fn g(x: Gen) -> FreeElement {
        FreeElement::gen(x, K)
    }

    #[test]
    fn concatenation_is_not_reordered() {
        let p = nc_mul(&g(Gen::AMinus), &g(Gen::APlus));
        assert_eq!(p, FreeElement::word(Word(vec![Gen::AMinus, Gen::APlus]), K));
        assert!(!p.is_normal());
    }

    #[test]
    fn unit_is_neutral() {
        let x = &g(Gen::M) + &g(Gen::APlus);
        assert_eq!(nc_mul(&x, &FreeElement::one(K)), x);
        assert_eq!(nc_mul(&FreeElement::one(K), &x), x);
    }

    #[test]
    fn scalar_bilinearity() {
        let a1 = ParamPoly::var(Param::A1, K);
        let a3 = ParamPoly::var(Param::A3, K);
        let p = nc_mul(&g(Gen::APlus).scale(&a1), &g(Gen::M).scale(&a3));
        assert_eq!(p.to_string(), "a1*a3*A+*M");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = &g(Gen::M) - &g(Gen::M);
        assert!(x.is_zero());
    }
}
