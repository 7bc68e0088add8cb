//! Closed-form expressions built from generators, exponentials `exp(c*X)` and
//! entries `Eij(M)` of the coproduct matrix. They render compactly and expand
//! into truncated series for comparison with the computed structure maps.

use std::collections::BTreeMap;

use crate::algebra::render::render_terms;
use crate::algebra::{exp_element, FreeElement, Gen, Matrix2, Param, ParamPoly, TensorElement};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Gen(Gen),
    /// `exp(coeff * gen)`.
    Exp {
        coeff: ParamPoly,
        gen: Gen,
    },
    /// Entry of the exponentiated coproduct matrix, a series in `M`.
    Entry {
        row: usize,
        col: usize,
    },
}

/// Substitutes `h = 1` so concrete parameters render as plain numbers.
pub fn dehomogenize(c: &ParamPoly) -> ParamPoly {
    if c.depends_on(Param::H) {
        c.substitute(&BTreeMap::from([(Param::H, ParamPoly::one(c.order()))]))
    } else {
        c.clone()
    }
}

impl Factor {
    fn is_unit(&self) -> bool {
        matches!(self, Factor::Exp { coeff, .. } if coeff.is_zero())
    }

    fn expand(&self, order: u32, entries: Option<&Matrix2>) -> Result<FreeElement> {
        match self {
            Factor::Gen(g) => Ok(FreeElement::gen(*g, order)),
            Factor::Exp { coeff, gen } => exp_element(&FreeElement::gen(*gen, order).scale(coeff)),
            Factor::Entry { row, col } => {
                entries.map(|m| m.get(*row, *col).clone()).ok_or_else(|| {
                    Error::UnsupportedMatrix("no coproduct matrix to take entries from".into())
                })
            }
        }
    }

    fn render(&self) -> String {
        match self {
            Factor::Gen(g) => g.name().to_string(),
            Factor::Exp { coeff, gen } => {
                let arg = FreeElement::gen(*gen, coeff.order()).scale(&dehomogenize(coeff));
                format!("exp({arg})")
            }
            Factor::Entry { row, col } => format!("E{}{}(M)", row + 1, col + 1),
        }
    }
}

fn render_factors(fs: &[Factor]) -> Option<String> {
    let parts: Vec<String> = fs
        .iter()
        .filter(|f| !f.is_unit())
        .map(Factor::render)
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

fn expand_product(fs: &[Factor], order: u32, entries: Option<&Matrix2>) -> Result<FreeElement> {
    let mut acc = FreeElement::one(order);
    for f in fs {
        acc = acc.nc_mul(&f.expand(order, entries)?);
    }
    Ok(acc)
}

/// Flattens `coefficient * tail` into renderable terms, skipping zero coefficients.
fn flat_terms<'a>(
    terms: impl IntoIterator<Item = (&'a ParamPoly, Option<String>)>,
) -> Vec<(
    crate::algebra::Rational,
    crate::algebra::Monomial,
    Option<String>,
)> {
    let mut out = Vec::new();
    for (c, tail) in terms {
        for (m, r) in dehomogenize(c).terms() {
            out.push((r.clone(), *m, tail.clone()));
        }
    }
    out
}

/// A sum of products, in the order written.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedExpr {
    terms: Vec<(ParamPoly, Vec<Factor>)>,
}

impl ClosedExpr {
    pub fn new(terms: Vec<(ParamPoly, Vec<Factor>)>) -> Self {
        ClosedExpr { terms }
    }

    pub fn terms(&self) -> &[(ParamPoly, Vec<Factor>)] {
        &self.terms
    }

    /// The series in the free algebra (not normal-ordered).
    pub fn expand(&self, order: u32, entries: Option<&Matrix2>) -> Result<FreeElement> {
        let mut out = FreeElement::zero(order);
        for (c, fs) in &self.terms {
            if !c.is_zero() {
                out.add_scaled(&expand_product(fs, order, entries)?, c);
            }
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        render_terms(flat_terms(
            self.terms.iter().map(|(c, fs)| (c, render_factors(fs))),
        ))
    }
}

/// A sum of pure tensors whose slots are products of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTensor {
    terms: Vec<(ParamPoly, Vec<Vec<Factor>>)>,
}

impl ClosedTensor {
    pub fn new(terms: Vec<(ParamPoly, Vec<Vec<Factor>>)>) -> Self {
        ClosedTensor { terms }
    }

    pub fn terms(&self) -> &[(ParamPoly, Vec<Vec<Factor>>)] {
        &self.terms
    }

    pub fn expand(&self, order: u32, entries: Option<&Matrix2>) -> Result<TensorElement> {
        let rank = self.terms.first().map_or(2, |(_, s)| s.len());
        let mut out = TensorElement::zero(rank, order);
        for (c, slots) in &self.terms {
            if c.is_zero() {
                continue;
            }
            let factors: Vec<FreeElement> = slots
                .iter()
                .map(|fs| expand_product(fs, order, entries))
                .collect::<Result<_>>()?;
            out.add_scaled(&TensorElement::product(&factors), c);
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        let tails: Vec<String> = self
            .terms
            .iter()
            .map(|(_, slots)| {
                slots
                    .iter()
                    .map(|fs| render_factors(fs).unwrap_or_else(|| "1".into()))
                    .collect::<Vec<_>>()
                    .join(" (x) ")
            })
            .collect();
        render_terms(flat_terms(
            self.terms.iter().zip(tails).map(|((c, _), t)| (c, Some(t))),
        ))
    }
}

/// Closed forms of a family's coproduct and (where known) antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub coproduct: BTreeMap<Gen, ClosedTensor>,
    pub antipode: BTreeMap<Gen, ClosedExpr>,
}

impl ClosedForms {
    pub fn new(
        coproduct: BTreeMap<Gen, ClosedTensor>,
        antipode: BTreeMap<Gen, ClosedExpr>,
    ) -> Self {
        ClosedForms {
            coproduct,
            antipode,
        }
    }
}
