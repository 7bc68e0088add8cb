//! Antipode from the coproduct by fixed-point iteration on
//! `m(S (x) id) Delta(X) = e(X) 1`.

use std::collections::BTreeMap;

use crate::algebra::{FreeElement, Gen, ParamPoly, RewriteSystem, TensorElement, Word};
use crate::error::{Error, Result};

/// `S(w)` for an anti-homomorphism given on generators.
pub fn antipode_word(s: &BTreeMap<Gen, FreeElement>, w: &Word, rs: &RewriteSystem) -> FreeElement {
    let mut acc = FreeElement::one(rs.order());
    for g in w.letters().iter().rev() {
        acc = rs.mul(&acc, &s[g]);
    }
    acc
}

pub fn antipode_element(
    s: &BTreeMap<Gen, FreeElement>,
    x: &FreeElement,
    rs: &RewriteSystem,
) -> FreeElement {
    let mut out = FreeElement::zero(rs.order());
    for (w, c) in x.terms() {
        out.add_scaled(&antipode_word(s, w, rs), c);
    }
    out
}

/// Solves `sum c S(u) v = e(X)` for every generator `X`, where
/// `Delta(X) = sum c u (x) v`. The `X (x) 1` term must have coefficient 1 and
/// every other term except `1 (x) X` must carry a parameter, so each pass fixes
/// one more parameter degree.
pub fn solve_antipode(
    coproduct: &BTreeMap<Gen, TensorElement>,
    counit: &BTreeMap<Gen, ParamPoly>,
    rs: &RewriteSystem,
) -> Result<BTreeMap<Gen, FreeElement>> {
    let order = rs.order();
    for (&x, d) in coproduct {
        let lead = d.coefficient(&[Word::letter(x), Word::empty()]);
        if !lead.is_one() {
            return Err(Error::AntipodeInconsistent(x));
        }
    }
    let mut s: BTreeMap<Gen, FreeElement> = coproduct
        .keys()
        .map(|&g| (g, FreeElement::zero(order)))
        .collect();
    for _ in 0..order + 3 {
        let mut next = BTreeMap::new();
        for (&x, d) in coproduct {
            let eps = counit
                .get(&x)
                .cloned()
                .unwrap_or_else(|| ParamPoly::zero(order));
            let mut sx = FreeElement::scalar(eps);
            for (ws, c) in d.terms() {
                if ws[0] == Word::letter(x) && ws[1].is_empty() {
                    continue;
                }
                let su = antipode_word(&s, &ws[0], rs);
                let term = rs.mul(&su, &FreeElement::word(ws[1].clone(), order));
                sx.add_scaled(&term, &-c);
            }
            next.insert(x, sx);
        }
        if next == s {
            return Ok(s);
        }
        s = next;
    }
    let unstable = coproduct.keys().next().copied().unwrap_or(Gen::M);
    Err(Error::AntipodeInconsistent(unstable))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undeformed_antipode_is_minus_identity() {
        let k = 3;
        let rs = RewriteSystem::undeformed(k);
        let cop: BTreeMap<Gen, TensorElement> = Gen::ALL
            .iter()
            .map(|&g| (g, TensorElement::primitive(&FreeElement::gen(g, k), 2)))
            .collect();
        let counit = BTreeMap::new();
        let s = solve_antipode(&cop, &counit, &rs).unwrap();
        for g in Gen::ALL {
            assert_eq!(s[&g], -&FreeElement::gen(g, k));
        }
        let w = Word(vec![Gen::AMinus, Gen::APlus]);
        // S(A- A+) = A+ A- = A+A-
        assert_eq!(antipode_word(&s, &w, &rs).to_string(), "A+*A-");
    }

    #[test]
    fn missing_leading_term_rejected() {
        let k = 2;
        let rs = RewriteSystem::undeformed(k);
        let cop = BTreeMap::from([(
            Gen::M,
            TensorElement::embed(&FreeElement::gen(Gen::M, k), 1, 2),
        )]);
        assert_eq!(
            solve_antipode(&cop, &BTreeMap::new(), &rs),
            Err(Error::AntipodeInconsistent(Gen::M))
        );
    }
}
