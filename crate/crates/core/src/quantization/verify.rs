//! Residuals of the Hopf algebra axioms at the truncation order.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::antipode::{antipode_element, antipode_word};
use super::closed::dehomogenize;
use super::presentation::HopfPresentation;
use crate::algebra::render::{render_free, render_tensor};
use crate::algebra::{tensor_mul, FreeElement, Gen, ParamPoly, RewriteSystem, TensorElement, Word};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidualValue {
    Element(FreeElement),
    Tensor(TensorElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub label: String,
    pub value: ResidualValue,
}

impl Residual {
    pub fn element(label: impl Into<String>, x: FreeElement) -> Self {
        Residual {
            label: label.into(),
            value: ResidualValue::Element(x),
        }
    }

    pub fn tensor(label: impl Into<String>, t: TensorElement) -> Self {
        Residual {
            label: label.into(),
            value: ResidualValue::Tensor(t),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            ResidualValue::Element(x) => x.is_zero(),
            ResidualValue::Tensor(t) => t.is_zero(),
        }
    }

    /// Lowest parameter degree present, `None` for a zero residual.
    pub fn min_degree(&self) -> Option<u32> {
        match &self.value {
            ResidualValue::Element(x) => x.min_degree(),
            ResidualValue::Tensor(t) => t.min_degree(),
        }
    }

    /// Canonical text with concrete parameters shown as plain numbers.
    pub fn render(&self) -> String {
        match &self.value {
            ResidualValue::Element(x) => render_free(&x.map_coefficients(dehomogenize)),
            ResidualValue::Tensor(t) => render_tensor(&t.map_coefficients(dehomogenize)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Homomorphism,
    Coassociativity,
    Counit,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [
        Axiom::Homomorphism,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Homomorphism => "homomorphism",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Antipode => "antipode",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub residuals: Vec<Residual>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(Residual::is_zero)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Residual> {
        self.residuals.iter().filter(|r| !r.is_zero())
    }
}

/// The coproduct extended multiplicatively to words, memoised.
pub struct WordCoproduct<'a> {
    rs: &'a RewriteSystem,
    gens: &'a BTreeMap<Gen, TensorElement>,
    cache: RefCell<HashMap<Word, TensorElement>>,
}

impl<'a> WordCoproduct<'a> {
    pub fn new(rs: &'a RewriteSystem, gens: &'a BTreeMap<Gen, TensorElement>) -> Self {
        WordCoproduct {
            rs,
            gens,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn word(&self, w: &Word) -> Result<TensorElement> {
        if let Some(hit) = self.cache.borrow().get(w) {
            return Ok(hit.clone());
        }
        let out = match w.letters() {
            [] => TensorElement::pure(
                vec![Word::empty(), Word::empty()],
                ParamPoly::one(self.rs.order()),
            ),
            [g] => self.gens[g].normal_form(self.rs),
            [init @ .., last] => {
                let head = self.word(&Word(init.to_vec()))?;
                tensor_mul(&head, &self.gens[last], self.rs)?
            }
        };
        self.cache.borrow_mut().insert(w.clone(), out.clone());
        Ok(out)
    }

    pub fn element(&self, x: &FreeElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(2, self.rs.order());
        for (w, c) in x.terms() {
            out.add_scaled(&self.word(w)?, c);
        }
        Ok(out)
    }
}

fn rule_label(g: Gen, h: Gen) -> String {
    format!("[{g},{h}]")
}

/// `Delta(g) Delta(h) - Delta(rule(g h))` for each defining relation.
pub fn verify_homomorphism(hp: &HopfPresentation) -> Result<AxiomReport> {
    let rs = hp.rewrite();
    let dw = WordCoproduct::new(rs, hp.coproduct());
    let mut residuals = Vec::new();
    for (&(g, h), rule) in rs.rules() {
        let lhs = tensor_mul(&dw.word(&Word::letter(g))?, &dw.word(&Word::letter(h))?, rs)?;
        let rhs = dw.element(rule)?;
        residuals.push(Residual::tensor(rule_label(g, h), &lhs - &rhs));
    }
    Ok(AxiomReport {
        axiom: Axiom::Homomorphism,
        residuals,
    })
}

/// `(Delta (x) id) Delta(X) - (id (x) Delta) Delta(X)` per generator.
pub fn verify_coassoc(hp: &HopfPresentation) -> Result<AxiomReport> {
    let rs = hp.rewrite();
    let dw = WordCoproduct::new(rs, hp.coproduct());
    let mut residuals = Vec::new();
    for (g, d) in hp.coproduct() {
        let d = d.normal_form(rs);
        let mut err = None;
        let left = d.expand_slot(0, 2, |w| {
            dw.word(w).unwrap_or_else(|e| {
                err = Some(e);
                TensorElement::zero(2, rs.order())
            })
        });
        let right = d.expand_slot(1, 2, |w| {
            dw.word(w).unwrap_or_else(|e| {
                err = Some(e);
                TensorElement::zero(2, rs.order())
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
        residuals.push(Residual::tensor(
            g.name(),
            &left.normal_form(rs) - &right.normal_form(rs),
        ));
    }
    Ok(AxiomReport {
        axiom: Axiom::Coassociativity,
        residuals,
    })
}

fn counit_word(counit: &BTreeMap<Gen, ParamPoly>, w: &Word, order: u32) -> ParamPoly {
    let mut acc = ParamPoly::one(order);
    for g in w.letters() {
        acc = &acc
            * &counit
                .get(g)
                .cloned()
                .unwrap_or_else(|| ParamPoly::zero(order));
    }
    acc
}

fn counit_element(counit: &BTreeMap<Gen, ParamPoly>, x: &FreeElement) -> ParamPoly {
    let mut acc = ParamPoly::zero(x.order());
    for (w, c) in x.terms() {
        acc += &(c * &counit_word(counit, w, x.order()));
    }
    acc
}

/// `(e (x) id) Delta(X) - X`, `(id (x) e) Delta(X) - X`, and `e` on each relation.
pub fn verify_counit(hp: &HopfPresentation) -> Result<AxiomReport> {
    let rs = hp.rewrite();
    let order = rs.order();
    let counit = hp.counit();
    let mut residuals = Vec::new();
    for (&g, d) in hp.coproduct() {
        let x = FreeElement::gen(g, order);
        let mut left = FreeElement::zero(order);
        let mut right = FreeElement::zero(order);
        for (ws, c) in d.terms() {
            left.add_scaled(
                &FreeElement::word(ws[1].clone(), order),
                &(c * &counit_word(counit, &ws[0], order)),
            );
            right.add_scaled(
                &FreeElement::word(ws[0].clone(), order),
                &(c * &counit_word(counit, &ws[1], order)),
            );
        }
        residuals.push(Residual::element(
            format!("(e(x)id)D({g})"),
            rs.normal_form(&(&left - &x)),
        ));
        residuals.push(Residual::element(
            format!("(id(x)e)D({g})"),
            rs.normal_form(&(&right - &x)),
        ));
    }
    for (&(g, h), rule) in rs.rules() {
        let lhs = counit_word(counit, &Word(vec![g, h]), order);
        let diff = &lhs - &counit_element(counit, rule);
        residuals.push(Residual::element(
            format!("e{}", rule_label(g, h)),
            FreeElement::scalar(diff),
        ));
    }
    Ok(AxiomReport {
        axiom: Axiom::Counit,
        residuals,
    })
}

/// `m(S (x) id) Delta(X) - e(X)`, `m(id (x) S) Delta(X) - e(X)`, and
/// `S(h) S(g) - S(rule(g h))` for each relation.
pub fn verify_antipode(hp: &HopfPresentation) -> Result<AxiomReport> {
    let rs = hp.rewrite();
    let order = rs.order();
    let s = hp.antipode();
    let counit = hp.counit();
    let mut residuals = Vec::new();
    for (&g, d) in hp.coproduct() {
        let eps = FreeElement::scalar(
            counit
                .get(&g)
                .cloned()
                .unwrap_or_else(|| ParamPoly::zero(order)),
        );
        let mut left = FreeElement::zero(order);
        let mut right = FreeElement::zero(order);
        for (ws, c) in d.terms() {
            let u = FreeElement::word(ws[0].clone(), order);
            let v = FreeElement::word(ws[1].clone(), order);
            left.add_scaled(&rs.mul(&antipode_word(s, &ws[0], rs), &v), c);
            right.add_scaled(&rs.mul(&u, &antipode_word(s, &ws[1], rs)), c);
        }
        residuals.push(Residual::element(format!("m(S(x)id)D({g})"), &left - &eps));
        residuals.push(Residual::element(format!("m(id(x)S)D({g})"), &right - &eps));
    }
    for (&(g, h), rule) in rs.rules() {
        let lhs = antipode_word(s, &Word(vec![g, h]), rs);
        let rhs = antipode_element(s, rule, rs);
        residuals.push(Residual::element(
            format!("S{}", rule_label(g, h)),
            &lhs - &rhs,
        ));
    }
    Ok(AxiomReport {
        axiom: Axiom::Antipode,
        residuals,
    })
}

pub fn verify_axiom(hp: &HopfPresentation, axiom: Axiom) -> Result<AxiomReport> {
    match axiom {
        Axiom::Homomorphism => verify_homomorphism(hp),
        Axiom::Coassociativity => verify_coassoc(hp),
        Axiom::Counit => verify_counit(hp),
        Axiom::Antipode => verify_antipode(hp),
    }
}

/// All four axioms, in [`Axiom::ALL`] order.
pub fn verify_hopf(hp: &HopfPresentation) -> Result<Vec<AxiomReport>> {
    Axiom::ALL.iter().map(|&a| verify_axiom(hp, a)).collect()
}
