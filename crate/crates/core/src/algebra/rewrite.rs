//! PBW rewriting: every out-of-order adjacent pair `g h` (with `g > h`) is
//! replaced by its rule, until all words are sorted `M..A+..A-`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use super::free::FreeElement;
use super::param::ParamPoly;
use super::word::{Gen, Word};
use crate::bialgebra::LieStructure;
use crate::error::{Error, Result};

/// Which out-of-order pair is rewritten first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// The three descending pairs, in the order rules are listed.
pub const DESCENTS: [(Gen, Gen); 3] = [
    (Gen::APlus, Gen::M),
    (Gen::AMinus, Gen::M),
    (Gen::AMinus, Gen::APlus),
];

pub struct RewriteSystem {
    name: String,
    order: u32,
    rules: BTreeMap<(Gen, Gen), FreeElement>,
    cache: Mutex<HashMap<Word, FreeElement>>,
}

impl Clone for RewriteSystem {
    fn clone(&self) -> Self {
        RewriteSystem {
            name: self.name.clone(),
            order: self.order,
            rules: self.rules.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("rules", &self.rules)
            .finish()
    }
}

impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.rules == other.rules
    }
}

impl RewriteSystem {
    /// `rules[(g, h)]` is the expansion of the product `g*h` for each pair in
    /// [`DESCENTS`]. Fails if a rule could rewrite forever.
    pub fn new(
        name: impl Into<String>,
        order: u32,
        rules: BTreeMap<(Gen, Gen), FreeElement>,
    ) -> Result<Self> {
        for &(g, h) in &DESCENTS {
            let rule = rules.get(&(g, h)).ok_or(Error::MissingRule(g, h))?;
            if rule.order() != order {
                return Err(Error::TruncationMismatch {
                    left: order,
                    right: rule.order(),
                });
            }
            let tail = rule - &FreeElement::word(Word(vec![h, g]), order);
            // Every remaining term must be shorter or carry a parameter.
            let ok = tail
                .terms()
                .all(|(w, c)| w.len() < 2 || c.min_degree().is_some_and(|d| d >= 1));
            if !ok {
                return Err(Error::NonTerminating(g, h));
            }
        }
        Ok(RewriteSystem {
            name: name.into(),
            order,
            rules,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Builds rules `g*h -> h*g + [g, h]` from the three commutators.
    pub fn from_commutators(
        name: impl Into<String>,
        order: u32,
        commutators: &BTreeMap<(Gen, Gen), FreeElement>,
    ) -> Result<Self> {
        let mut rules = BTreeMap::new();
        for &(g, h) in &DESCENTS {
            let c = commutators.get(&(g, h)).ok_or(Error::MissingRule(g, h))?;
            rules.insert((g, h), &FreeElement::word(Word(vec![h, g]), order) + c);
        }
        Self::new(name, order, rules)
    }

    /// The enveloping algebra of a 3-dimensional Lie algebra on `(A-, A+, M)`.
    pub fn from_lie(lie: &LieStructure, order: u32) -> Result<Self> {
        let mut comms = BTreeMap::new();
        for &(g, h) in &DESCENTS {
            let coeffs = lie.bracket(g.basis_index(), h.basis_index());
            let mut c = FreeElement::zero(order);
            for (k, v) in coeffs.iter().enumerate() {
                c.add_term(
                    Word::letter(Gen::from_basis_index(k)),
                    &ParamPoly::constant(v.clone(), order),
                );
            }
            comms.insert((g, h), c);
        }
        Self::from_commutators("lie", order, &comms)
    }

    /// `[A-, A+] = M`, `M` central.
    pub fn undeformed(order: u32) -> Self {
        Self::from_lie(&LieStructure::heisenberg_weyl(), order)
            .expect("undeformed relations terminate")
            .renamed("undeformed")
    }

    /// The same rules with parameters substituted in every coefficient.
    pub fn substituted(&self, map: &BTreeMap<crate::algebra::Param, ParamPoly>) -> Result<Self> {
        if map.is_empty() {
            return Ok(self.clone());
        }
        let rules = self
            .rules
            .iter()
            .map(|(k, v)| (*k, v.substitute(map)))
            .collect();
        Self::new(self.name.clone(), self.order, rules)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rule(&self, g: Gen, h: Gen) -> &FreeElement {
        &self.rules[&(g, h)]
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Gen, Gen), &FreeElement)> {
        self.rules.iter()
    }

    /// `[g, h]` for a descending pair, i.e. the rule minus the swapped word.
    pub fn commutator_of(&self, g: Gen, h: Gen) -> FreeElement {
        self.rule(g, h) - &FreeElement::word(Word(vec![h, g]), self.order)
    }

    pub fn normal_form(&self, x: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero(x.order());
        for (w, c) in x.terms() {
            if w.is_normal() {
                out.add_term(w.clone(), c);
            } else {
                out.add_scaled(&self.normal_form_word(w), c);
            }
        }
        out
    }

    /// Normal form of a single word, memoised.
    pub fn normal_form_word(&self, w: &Word) -> FreeElement {
        if w.is_normal() {
            return FreeElement::word(w.clone(), self.order);
        }
        if let Some(hit) = self.cache.lock().expect("cache poisoned").get(w) {
            return hit.clone();
        }
        let nf = self.reduce(
            &FreeElement::word(w.clone(), self.order),
            Strategy::Leftmost,
        );
        self.cache
            .lock()
            .expect("cache poisoned")
            .insert(w.clone(), nf.clone());
        nf
    }

    /// Rewriting with an explicit strategy and no memoisation.
    pub fn normal_form_with(&self, x: &FreeElement, strategy: Strategy) -> FreeElement {
        self.reduce(x, strategy)
    }

    fn reduce(&self, x: &FreeElement, strategy: Strategy) -> FreeElement {
        let mut pending: BTreeMap<Word, ParamPoly> =
            x.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = FreeElement::zero(x.order());
        // Longest words first so that rewrites of equal words merge before expanding.
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            let descents = w
                .letters()
                .windows(2)
                .enumerate()
                .filter(|(_, p)| p[0] > p[1]);
            let pos = match strategy {
                Strategy::Leftmost => descents.map(|(i, _)| i).next(),
                Strategy::Rightmost => descents.map(|(i, _)| i).next_back(),
            };
            let Some(i) = pos else {
                out.add_term(w, &c);
                continue;
            };
            let letters = w.letters();
            let rule = self.rule(letters[i], letters[i + 1]);
            for (rw, rc) in rule.terms() {
                let coeff = &c * rc;
                if coeff.is_zero() {
                    continue;
                }
                let mut nw = Vec::with_capacity(letters.len() + rw.len());
                nw.extend_from_slice(&letters[..i]);
                nw.extend_from_slice(rw.letters());
                nw.extend_from_slice(&letters[i + 2..]);
                let entry = pending
                    .entry(Word(nw))
                    .or_insert_with(|| ParamPoly::zero(self.order));
                *entry += &coeff;
            }
        }
        out
    }

    /// Product followed by normal form.
    pub fn mul(&self, x: &FreeElement, y: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero(self.order);
        for (wa, ca) in x.terms() {
            for (wb, cb) in y.terms() {
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                out.add_scaled(&self.normal_form_word(&wa.concat(wb)), &c);
            }
        }
        out
    }

    pub fn pow(&self, x: &FreeElement, n: u32) -> FreeElement {
        let mut acc = FreeElement::one(self.order);
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Words of length 3 whose leftmost and rightmost reductions disagree.
    /// Empty means the rules are confluent at this order.
    pub fn confluence_failures(&self) -> Vec<Word> {
        let mut bad = Vec::new();
        for a in Gen::ALL {
            for b in Gen::ALL {
                for c in Gen::ALL {
                    let w = Word(vec![a, b, c]);
                    let x = FreeElement::word(w.clone(), self.order);
                    let l = self.normal_form_with(&x, Strategy::Leftmost);
                    let r = self.normal_form_with(&x, Strategy::Rightmost);
                    if l != r {
                        bad.push(w);
                    }
                }
            }
        }
        bad
    }
}

/// `normal_form(xy - yx)`.
pub fn commutator(x: &FreeElement, y: &FreeElement, rs: &RewriteSystem) -> FreeElement {
    &rs.mul(x, y) - &rs.mul(y, x)
}

pub fn normal_form(x: &FreeElement, rs: &RewriteSystem) -> FreeElement {
    rs.normal_form(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::Param;
    use crate::algebra::rational::frac;

    const K: u32 = 4;

    fn g(x: Gen) -> FreeElement {
        FreeElement::gen(x, K)
    }

    fn w(gs: &[Gen]) -> FreeElement {
        FreeElement::word(Word(gs.to_vec()), K)
    }

    fn type_i_plus() -> RewriteSystem {
        let a1 = ParamPoly::var(Param::A1, K);
        let mut comms = BTreeMap::new();
        comms.insert((Gen::APlus, Gen::M), FreeElement::zero(K));
        comms.insert(
            (Gen::AMinus, Gen::M),
            w(&[Gen::M, Gen::M]).scale(&a1.scale(&frac(1, 2))),
        );
        comms.insert((Gen::AMinus, Gen::APlus), g(Gen::M));
        RewriteSystem::from_commutators("I+", K, &comms).unwrap()
    }

    #[test]
    fn undeformed_swap() {
        let rs = RewriteSystem::undeformed(K);
        let nf = rs.normal_form(&w(&[Gen::AMinus, Gen::APlus]));
        assert_eq!(nf, &w(&[Gen::APlus, Gen::AMinus]) + &g(Gen::M));
    }

    #[test]
    fn deformed_m_rule() {
        let rs = type_i_plus();
        let nf = rs.normal_form(&w(&[Gen::AMinus, Gen::M]));
        assert_eq!(nf.to_string(), "M*A- + (1/2)*a1*M^2");
    }

    #[test]
    fn commutators_undeformed() {
        let rs = RewriteSystem::undeformed(K);
        assert_eq!(commutator(&g(Gen::AMinus), &g(Gen::APlus), &rs), g(Gen::M));
        assert!(commutator(&g(Gen::M), &g(Gen::APlus), &rs).is_zero());
        let rs = type_i_plus();
        assert_eq!(
            commutator(&g(Gen::AMinus), &g(Gen::M), &rs).to_string(),
            "(1/2)*a1*M^2"
        );
    }

    #[test]
    fn non_terminating_rule_rejected() {
        let mut rules = BTreeMap::new();
        rules.insert((Gen::APlus, Gen::M), w(&[Gen::M, Gen::APlus]));
        rules.insert((Gen::AMinus, Gen::M), w(&[Gen::M, Gen::AMinus]));
        // A-A+ -> A+A- + A-A+ loops without gaining a parameter
        rules.insert(
            (Gen::AMinus, Gen::APlus),
            &w(&[Gen::APlus, Gen::AMinus]) + &w(&[Gen::AMinus, Gen::APlus]),
        );
        assert_eq!(
            RewriteSystem::new("bad", K, rules).unwrap_err(),
            Error::NonTerminating(Gen::AMinus, Gen::APlus)
        );
    }

    #[test]
    fn confluent_systems() {
        assert!(RewriteSystem::undeformed(K)
            .confluence_failures()
            .is_empty());
        assert!(type_i_plus().confluence_failures().is_empty());
    }

    #[test]
    fn inconsistent_relations_are_not_confluent() {
        // [A+, M] = a1 A+ breaks the Jacobi identity with [A-, A+] = M.
        let mut comms = BTreeMap::new();
        comms.insert(
            (Gen::APlus, Gen::M),
            g(Gen::APlus).scale(&ParamPoly::var(Param::A1, K)),
        );
        comms.insert((Gen::AMinus, Gen::M), FreeElement::zero(K));
        comms.insert((Gen::AMinus, Gen::APlus), g(Gen::M));
        let rs = RewriteSystem::from_commutators("broken", K, &comms).unwrap();
        assert!(!rs.confluence_failures().is_empty());
    }

    #[test]
    fn associativity_up_to_length_four() {
        let rs = type_i_plus();
        let words: Vec<Word> = (1..=2)
            .flat_map(|n| {
                let mut ws = vec![Vec::new()];
                for _ in 0..n {
                    ws = ws
                        .into_iter()
                        .flat_map(|p: Vec<Gen>| {
                            Gen::ALL.into_iter().map(move |x| {
                                let mut q = p.clone();
                                q.push(x);
                                q
                            })
                        })
                        .collect();
                }
                ws
            })
            .map(Word)
            .collect();
        for x in &words {
            for y in &words {
                for z in words.iter().filter(|z| x.len() + y.len() + z.len() <= 4) {
                    let (x, y, z) = (
                        FreeElement::word(x.clone(), K),
                        FreeElement::word(y.clone(), K),
                        FreeElement::word(z.clone(), K),
                    );
                    assert_eq!(rs.mul(&rs.mul(&x, &y), &z), rs.mul(&x, &rs.mul(&y, &z)));
                }
            }
        }
    }
}
