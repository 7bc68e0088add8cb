//! Carrying algebra data along a basis change that permutes the generators up
//! to sign, such as the swap `A+ <-> A-`, `M -> -M`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::rational::{int, Rational};
use crate::algebra::{FreeElement, Gen, RewriteSystem, TensorElement, Word};
use crate::bialgebra::BasisChange;
use crate::error::{Error, Result};

/// Each old generator written as `sign * new generator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedRelabel {
    old_to_new: BTreeMap<Gen, (Gen, Rational)>,
}

impl SignedRelabel {
    pub fn from_basis_change(bc: &BasisChange) -> Result<Self> {
        // old e_j = sum_k Q_jk e'_k with Q the inverse matrix
        let q = bc.inverse()?;
        let mut old_to_new = BTreeMap::new();
        for (j, row) in q.rows().iter().enumerate() {
            let nz: Vec<(usize, &Rational)> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            match nz.as_slice() {
                [(k, c)] if **c == int(1) || **c == int(-1) => {
                    old_to_new.insert(
                        Gen::from_basis_index(j),
                        (Gen::from_basis_index(*k), (*c).clone()),
                    );
                }
                _ => {
                    return Err(Error::UnsupportedMatrix(format!(
                        "basis change `{bc}` is not a signed permutation"
                    )))
                }
            }
        }
        Ok(SignedRelabel { old_to_new })
    }

    pub fn word(&self, w: &Word) -> (Word, Rational) {
        let mut sign = int(1);
        let letters = w
            .letters()
            .iter()
            .map(|g| {
                let (n, s) = &self.old_to_new[g];
                sign *= s;
                *n
            })
            .collect();
        (Word(letters), sign)
    }

    /// Rewrites an element of the old generators in the new ones (not normal-ordered).
    pub fn element(&self, x: &FreeElement) -> FreeElement {
        x.map_words(|w| self.word(w))
    }

    pub fn tensor(&self, t: &TensorElement) -> TensorElement {
        t.map_words(|w| self.word(w))
    }

    /// The new generator `g'` in terms of the old ones: `sign * old`.
    pub fn preimage(&self, g: Gen) -> (Gen, Rational) {
        let (old, (_, s)) = self
            .old_to_new
            .iter()
            .find(|(_, (n, _))| *n == g)
            .expect("relabel is a bijection");
        (*old, s.clone())
    }
}

/// `[g, h]` for any pair of generators.
pub fn bracket(rs: &RewriteSystem, g: Gen, h: Gen) -> FreeElement {
    if g == h {
        FreeElement::zero(rs.order())
    } else if g > h {
        rs.commutator_of(g, h)
    } else {
        -&rs.commutator_of(h, g)
    }
}

/// The relations of `rs` restated for the new generators.
pub fn transport_rewrite(rs: &RewriteSystem, relabel: &SignedRelabel) -> Result<RewriteSystem> {
    let mut comms = BTreeMap::new();
    for (&(g, h), _) in rs.rules() {
        // [g', h'] = s_g s_h [g_old, h_old], then written in the new letters
        let (go, sg) = relabel.preimage(g);
        let (ho, sh) = relabel.preimage(h);
        let c = relabel
            .element(&bracket(rs, go, ho))
            .scale_rational(&(sg * sh));
        comms.insert((g, h), c);
    }
    let out = RewriteSystem::from_commutators(rs.name().to_string(), rs.order(), &comms)?;
    // commutator tails may come out of order; normalise them under the new rules
    let mut normal = BTreeMap::new();
    for (&(g, h), c) in &comms {
        normal.insert((g, h), out.normal_form(c));
    }
    RewriteSystem::from_commutators(rs.name().to_string(), rs.order(), &normal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ParamPoly;

    #[test]
    fn swap_relabel() {
        let r = SignedRelabel::from_basis_change(&BasisChange::swap()).unwrap();
        let (w, s) = r.word(&Word(vec![Gen::M, Gen::APlus, Gen::AMinus]));
        assert_eq!(w, Word(vec![Gen::M, Gen::AMinus, Gen::APlus]));
        assert_eq!(s, int(-1));
        assert_eq!(r.preimage(Gen::M), (Gen::M, int(-1)));
    }

    #[test]
    fn non_permutation_rejected() {
        let bc = BasisChange::type_i_minus(&int(1), &int(1));
        assert!(SignedRelabel::from_basis_change(&bc).is_err());
    }

    #[test]
    fn undeformed_is_swap_invariant() {
        let r = SignedRelabel::from_basis_change(&BasisChange::swap()).unwrap();
        let rs = RewriteSystem::undeformed(3);
        assert_eq!(transport_rewrite(&rs, &r).unwrap(), rs);
        let x = FreeElement::gen(Gen::AMinus, 3).scale(&ParamPoly::one(3));
        assert_eq!(r.element(&x), FreeElement::gen(Gen::APlus, 3));
    }
}
