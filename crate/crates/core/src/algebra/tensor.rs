//! Rank-2 and rank-3 tensors of words with [`ParamPoly`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use super::free::FreeElement;
use super::param::{Param, ParamPoly};
use super::rewrite::RewriteSystem;
use super::word::{Gen, Word};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    rank: usize,
    terms: BTreeMap<Vec<Word>, ParamPoly>,
    order: u32,
}

impl TensorElement {
    pub fn zero(rank: usize, order: u32) -> Self {
        TensorElement {
            rank,
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn pure(words: Vec<Word>, c: ParamPoly) -> Self {
        let mut out = Self::zero(words.len(), c.order());
        out.add_term(words, &c);
        out
    }

    /// `x_1 (x) x_2 (x) ...`
    pub fn product(factors: &[FreeElement]) -> Self {
        let order = factors[0].order();
        let mut acc: Vec<(Vec<Word>, ParamPoly)> = vec![(Vec::new(), ParamPoly::one(order))];
        for f in factors {
            let mut next = Vec::new();
            for (ws, c) in &acc {
                for (w, d) in f.terms() {
                    let coeff = c * d;
                    if coeff.is_zero() {
                        continue;
                    }
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, coeff));
                }
            }
            acc = next;
        }
        let mut out = Self::zero(factors.len(), order);
        for (ws, c) in acc {
            out.add_term(ws, &c);
        }
        out
    }

    /// `x (x) 1 (x) ... ` with `x` placed in `slot`.
    pub fn embed(x: &FreeElement, slot: usize, rank: usize) -> Self {
        let one = FreeElement::one(x.order());
        let factors: Vec<FreeElement> = (0..rank)
            .map(|i| if i == slot { x.clone() } else { one.clone() })
            .collect();
        Self::product(&factors)
    }

    /// `X (x) 1 + 1 (x) X` (rank 2) or the rank-3 analogue.
    pub fn primitive(x: &FreeElement, rank: usize) -> Self {
        let mut out = Self::zero(rank, x.order());
        for slot in 0..rank {
            out += &Self::embed(x, slot, rank);
        }
        out
    }

    /// `X ^ Y = Y (x) X - X (x) Y`. With this sign the degree-1 part of
    /// `sigma Delta - Delta` is `delta` for the coproducts built here.
    pub fn wedge(x: Gen, y: Gen, c: ParamPoly) -> Self {
        let mut out = Self::pure(vec![Word::letter(y), Word::letter(x)], c.clone());
        out -= &Self::pure(vec![Word::letter(x), Word::letter(y)], c);
        out
    }

    /// Coefficient of `X ^ Y` in a skew rank-2 tensor.
    pub fn wedge_coefficient(&self, x: Gen, y: Gen) -> ParamPoly {
        self.coefficient(&[Word::letter(y), Word::letter(x)])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, words: &[Word]) -> ParamPoly {
        self.terms
            .get(words)
            .cloned()
            .unwrap_or_else(|| ParamPoly::zero(self.order))
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: &ParamPoly) {
        assert_eq!(words.len(), self.rank, "tensor term has wrong rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
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

    pub fn add_scaled(&mut self, other: &TensorElement, c: &ParamPoly) {
        for (ws, v) in &other.terms {
            self.add_term(ws.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        out.add_scaled(self, c);
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        for (ws, c) in &self.terms {
            let v = f(c);
            out.order = v.order();
            out.add_term(ws.clone(), &v);
        }
        out
    }

    pub fn homogeneous_part(&self, degree: u32) -> TensorElement {
        self.map_coefficients(|c| c.homogeneous_part(degree))
    }

    pub fn truncate(&self, order: u32) -> TensorElement {
        let mut out = self.map_coefficients(|c| c.truncate(order));
        out.order = order;
        out
    }

    pub fn substitute(&self, map: &BTreeMap<Param, ParamPoly>) -> TensorElement {
        self.map_coefficients(|c| c.substitute(map))
    }

    /// Permutes slots: slot `i` of the result holds slot `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        for (ws, c) in &self.terms {
            out.add_term(perm.iter().map(|&p| ws[p].clone()).collect(), c);
        }
        out
    }

    pub fn normal_form(&self, rs: &RewriteSystem) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        for (ws, c) in &self.terms {
            let slots: Vec<FreeElement> = ws.iter().map(|w| rs.normal_form_word(w)).collect();
            out.add_scaled(&Self::product(&slots), c);
        }
        out
    }

    /// Applies a linear map (given on words) to one slot, producing a tensor whose
    /// rank grows by `image_rank - 1`.
    pub fn expand_slot(
        &self,
        slot: usize,
        image_rank: usize,
        mut f: impl FnMut(&Word) -> TensorElement,
    ) -> TensorElement {
        let mut out = Self::zero(self.rank + image_rank - 1, self.order);
        for (ws, c) in &self.terms {
            let img = f(&ws[slot]);
            for (iws, ic) in img.terms() {
                let coeff = c * ic;
                if coeff.is_zero() {
                    continue;
                }
                let mut nws = Vec::with_capacity(out.rank);
                nws.extend_from_slice(&ws[..slot]);
                nws.extend(iws.iter().cloned());
                nws.extend_from_slice(&ws[slot + 1..]);
                out.add_term(nws, &coeff);
            }
        }
        out
    }

    /// Multiplies the two slots of a rank-2 tensor together: `m(u (x) v) = nf(uv)`.
    pub fn multiply_slots(&self, rs: &RewriteSystem) -> Result<FreeElement> {
        if self.rank != 2 {
            return Err(Error::WrongRank {
                expected: 2,
                found: self.rank,
            });
        }
        let mut out = FreeElement::zero(self.order);
        for (ws, c) in &self.terms {
            out.add_scaled(&rs.normal_form_word(&ws[0].concat(&ws[1])), c);
        }
        Ok(out)
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(ParamPoly::min_degree).min()
    }

    /// Relabels words slot-wise; `f` returns the new word and a sign/scalar.
    pub fn map_words(
        &self,
        f: impl Fn(&Word) -> (Word, super::rational::Rational),
    ) -> TensorElement {
        let mut out = Self::zero(self.rank, self.order);
        for (ws, c) in &self.terms {
            let mut coeff = c.clone();
            let mut nws = Vec::with_capacity(self.rank);
            for w in ws {
                let (w2, s) = f(w);
                coeff = coeff.scale(&s);
                nws.push(w2);
            }
            out.add_term(nws, &coeff);
        }
        out
    }
}

/// Slotwise product `(a (x) b)(c (x) d) = ac (x) bd`, each slot normal-ordered.
pub fn tensor_mul(
    u: &TensorElement,
    v: &TensorElement,
    rs: &RewriteSystem,
) -> Result<TensorElement> {
    if u.rank != v.rank {
        return Err(Error::RankMismatch {
            left: u.rank,
            right: v.rank,
        });
    }
    let mut out = TensorElement::zero(u.rank, u.order);
    for (wa, ca) in &u.terms {
        for (wb, cb) in &v.terms {
            let c = ca * cb;
            if c.is_zero() {
                continue;
            }
            let slots: Vec<FreeElement> = wa
                .iter()
                .zip(wb.iter())
                .map(|(x, y)| rs.normal_form_word(&x.concat(y)))
                .collect();
            out.add_scaled(&TensorElement::product(&slots), &c);
        }
    }
    Ok(out)
}

/// `[u, v]` in the tensor power of the algebra.
pub fn tensor_commutator(
    u: &TensorElement,
    v: &TensorElement,
    rs: &RewriteSystem,
) -> Result<TensorElement> {
    Ok(&tensor_mul(u, v, rs)? - &tensor_mul(v, u, rs)?)
}

/// Swaps the two slots of a rank-2 tensor.
pub fn flip(u: &TensorElement) -> Result<TensorElement> {
    if u.rank != 2 {
        return Err(Error::WrongRank {
            expected: 2,
            found: u.rank,
        });
    }
    Ok(u.permute(&[1, 0]))
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TensorElement[r={},K={}]({})",
            self.rank, self.order, self
        )
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_tensor(self))
    }
}

impl AddAssign<&TensorElement> for TensorElement {
    fn add_assign(&mut self, rhs: &TensorElement) {
        assert_eq!(self.rank, rhs.rank, "tensor ranks must match");
        for (ws, c) in &rhs.terms {
            self.add_term(ws.clone(), c);
        }
    }
}

impl SubAssign<&TensorElement> for TensorElement {
    fn sub_assign(&mut self, rhs: &TensorElement) {
        assert_eq!(self.rank, rhs.rank, "tensor ranks must match");
        for (ws, c) in &rhs.terms {
            self.add_term(ws.clone(), &-c);
        }
    }
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.map_coefficients(|c| -c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const K: u32 = 4;

    fn g(x: Gen) -> FreeElement {
        FreeElement::gen(x, K)
    }

    fn one() -> FreeElement {
        FreeElement::one(K)
    }

    #[test]
    fn slotwise_products() {
        let rs = RewriteSystem::undeformed(K);
        let p = tensor_mul(
            &TensorElement::product(&[g(Gen::APlus), one()]),
            &TensorElement::product(&[one(), g(Gen::APlus)]),
            &rs,
        )
        .unwrap();
        assert_eq!(p, TensorElement::product(&[g(Gen::APlus), g(Gen::APlus)]));

        let p = tensor_mul(
            &TensorElement::product(&[g(Gen::AMinus), one()]),
            &TensorElement::product(&[g(Gen::APlus), one()]),
            &rs,
        )
        .unwrap();
        let expected = &rs.mul(&g(Gen::APlus), &g(Gen::AMinus)) + &g(Gen::M);
        assert_eq!(p, TensorElement::product(&[expected, one()]));

        let p = tensor_mul(
            &TensorElement::product(&[one(), g(Gen::M)]),
            &TensorElement::product(&[g(Gen::M), one()]),
            &rs,
        )
        .unwrap();
        assert_eq!(p, TensorElement::product(&[g(Gen::M), g(Gen::M)]));
    }

    #[test]
    fn rank_mismatch() {
        let rs = RewriteSystem::undeformed(K);
        let a = TensorElement::product(&[one(), one()]);
        let b = TensorElement::product(&[one(), one(), one()]);
        assert_eq!(
            tensor_mul(&a, &b, &rs).unwrap_err(),
            Error::RankMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn flip_examples() {
        let t = TensorElement::product(&[g(Gen::APlus), g(Gen::M)]);
        assert_eq!(
            flip(&t).unwrap(),
            TensorElement::product(&[g(Gen::M), g(Gen::APlus)])
        );
        let t =
            &TensorElement::embed(&g(Gen::APlus), 0, 2) + &TensorElement::embed(&g(Gen::M), 1, 2);
        let f =
            &TensorElement::embed(&g(Gen::APlus), 1, 2) + &TensorElement::embed(&g(Gen::M), 0, 2);
        assert_eq!(flip(&t).unwrap(), f);
        let r3 = TensorElement::product(&[one(), one(), one()]);
        assert!(flip(&r3).is_err());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0usize..3, 0..3)
            .prop_map(|v| Word(v.into_iter().map(|i| Gen::ALL[i]).collect()))
    }

    proptest! {
        #[test]
        fn flip_is_involution(terms in proptest::collection::vec((arb_word(), arb_word(), -3i64..4), 0..6)) {
            let mut t = TensorElement::zero(2, K);
            for (a, b, c) in terms {
                t.add_term(vec![a, b], &ParamPoly::int(c, K));
            }
            prop_assert_eq!(flip(&flip(&t).unwrap()).unwrap(), t);
        }
    }
}
