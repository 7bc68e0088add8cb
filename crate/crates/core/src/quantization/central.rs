//! The Type I+ Casimir `C = M exp(-a1 A+ / 2)` and the differential
//! realization `A+ = x`, `M = lambda e^{a1 x/2}`, `A- = lambda e^{a1 x/2} d/dx`.

use std::collections::BTreeMap;
use std::fmt;

use super::presentation::HopfPresentation;
use super::transport::bracket;
use super::verify::Residual;
use crate::algebra::rational::{frac, int, Rational};
use crate::algebra::render::render_terms;
use crate::algebra::rewrite::DESCENTS;
use crate::algebra::{exp_element, FreeElement, Gen, Monomial, Param, ParamPoly, Word};
use crate::bialgebra::ClassTag;
use crate::error::{Error, Result};

fn require_type_i_plus(hp: &HopfPresentation) -> Result<()> {
    if hp.tag() == ClassTag::TypeIPlus {
        Ok(())
    } else {
        Err(Error::NotQuantizable(format!(
            "the central element is defined for TYPE_I_PLUS, not {}",
            hp.tag()
        )))
    }
}

/// `exp(c * A+)` with `c = factor * a1`.
fn exp_a_plus(a1: &ParamPoly, factor: Rational) -> Result<FreeElement> {
    exp_element(&FreeElement::gen(Gen::APlus, a1.order()).scale(&a1.scale(&factor)))
}

/// `C = M exp(-a1 A+ / 2)`, normal-ordered.
pub fn central_element(hp: &HopfPresentation) -> Result<FreeElement> {
    require_type_i_plus(hp)?;
    let a1 = hp.params().get(Param::A1);
    let m = FreeElement::gen(Gen::M, hp.order());
    Ok(hp.rewrite().mul(&m, &exp_a_plus(&a1, frac(-1, 2))?))
}

/// `[C, X]` for each generator, `C exp(a1 A+ / 2) - M`, and the relations
/// restated with `C`: `[A-, A+] - C exp(a1 A+/2)`.
pub fn check_centrality(hp: &HopfPresentation) -> Result<Vec<Residual>> {
    let c = central_element(hp)?;
    let rs = hp.rewrite();
    let k = hp.order();
    let a1 = hp.params().get(Param::A1);
    let mut out = Vec::new();
    for g in [Gen::AMinus, Gen::APlus, Gen::M] {
        let x = FreeElement::gen(g, k);
        let comm = &rs.mul(&c, &x) - &rs.mul(&x, &c);
        out.push(Residual::element(format!("[C,{g}]"), comm));
    }
    let back = rs.mul(&c, &exp_a_plus(&a1, frac(1, 2))?);
    out.push(Residual::element(
        "C*exp(a1*A+/2) - M",
        &back - &FreeElement::gen(Gen::M, k),
    ));
    let comm = bracket(rs, Gen::AMinus, Gen::APlus);
    out.push(Residual::element("[A-,A+] - C*exp(a1*A+/2)", &comm - &back));
    Ok(out)
}

/// A polynomial in `x` with parameter coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPoly {
    terms: BTreeMap<u32, ParamPoly>,
    order: u32,
}

impl XPoly {
    pub fn zero(order: u32) -> Self {
        XPoly {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn monomial(n: u32, c: ParamPoly) -> Self {
        let mut p = Self::zero(c.order());
        p.add_term(n, &c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, n: u32) -> ParamPoly {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ParamPoly::zero(self.order))
    }

    fn add_term(&mut self, n: u32, c: &ParamPoly) {
        let e = self
            .terms
            .entry(n)
            .or_insert_with(|| ParamPoly::zero(c.order()));
        *e += c;
        if e.is_zero() {
            self.terms.remove(&n);
        }
    }

    pub fn add(&self, other: &XPoly) -> XPoly {
        let mut out = self.clone();
        for (n, c) in &other.terms {
            out.add_term(*n, c);
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> XPoly {
        let mut out = Self::zero(self.order);
        for (n, d) in &self.terms {
            out.add_term(*n, &(d * c));
        }
        out
    }

    pub fn mul(&self, other: &XPoly) -> XPoly {
        let mut out = Self::zero(self.order);
        for (n, c) in &self.terms {
            for (m, d) in &other.terms {
                out.add_term(n + m, &(c * d));
            }
        }
        out
    }

    pub fn derivative(&self) -> XPoly {
        let mut out = Self::zero(self.order);
        for (n, c) in &self.terms {
            if *n > 0 {
                out.add_term(n - 1, &c.scale(&int(*n as i64)));
            }
        }
        out
    }

    /// `exp(c x)` truncated by the parameter order of `c`.
    pub fn exp(c: &ParamPoly) -> XPoly {
        let order = c.order();
        let mut out = Self::monomial(0, ParamPoly::one(order));
        let mut power = ParamPoly::one(order);
        let mut fact = int(1);
        for n in 1..=order {
            power = &power * c;
            if power.is_zero() {
                break;
            }
            fact *= int(n as i64);
            out.add_term(n, &power.scale(&(int(1) / &fact)));
        }
        out
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat: Vec<(Monomial, u32, Rational)> = Vec::new();
        for (n, c) in &self.terms {
            for (m, r) in c.terms() {
                flat.push((*m, *n, r.clone()));
            }
        }
        flat.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        let s = render_terms(flat.into_iter().map(|(m, n, r)| {
            let tail = match n {
                0 => None,
                1 => Some("x".to_string()),
                _ => Some(format!("x^{n}")),
            };
            (r, m, tail)
        }));
        f.write_str(&s)
    }
}

/// Generators acting on polynomials in `x`.
struct Realization {
    e: XPoly,
    lambda: ParamPoly,
}

impl Realization {
    fn new(a1: &ParamPoly) -> Self {
        let order = a1.order();
        Realization {
            e: XPoly::exp(&a1.scale(&frac(1, 2))),
            lambda: ParamPoly::var(Param::Lambda, order),
        }
    }

    fn apply_gen(&self, g: Gen, f: &XPoly) -> XPoly {
        match g {
            Gen::APlus => f.mul(&XPoly::monomial(1, ParamPoly::one(self.lambda.order()))),
            Gen::M => self.e.mul(f).scale(&self.lambda),
            Gen::AMinus => self.e.mul(&f.derivative()).scale(&self.lambda),
        }
    }

    fn apply_word(&self, w: &Word, f: &XPoly) -> XPoly {
        w.letters()
            .iter()
            .rev()
            .fold(f.clone(), |acc, &g| self.apply_gen(g, &acc))
    }

    fn apply(&self, x: &FreeElement, f: &XPoly) -> XPoly {
        let mut out = XPoly::zero(f.order);
        for (w, c) in x.terms() {
            out = out.add(&self.apply_word(w, f).scale(c));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationReport {
    /// `(label, residual)`; all residuals zero means the check passed.
    pub residuals: Vec<(String, XPoly)>,
}

impl RealizationReport {
    pub fn passed(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }
}

/// Applies every defining relation `g h - rule(g h)` and `C - lambda` to `x^n`
/// for `n <= max_degree`.
pub fn check_realization(hp: &HopfPresentation, max_degree: u32) -> Result<RealizationReport> {
    let c = central_element(hp)?;
    let k = hp.order();
    let real = Realization::new(&hp.params().get(Param::A1));
    let mut residuals = Vec::new();
    for n in 0..=max_degree {
        let xn = XPoly::monomial(n, ParamPoly::one(k));
        for &(g, h) in &DESCENTS {
            let lhs = FreeElement::word(Word(vec![g, h]), k);
            let rel = &lhs - hp.rewrite().rule(g, h);
            residuals.push((format!("({g}{h} - rule) x^{n}"), real.apply(&rel, &xn)));
        }
        let cx = real.apply(&c, &xn).add(&xn.scale(&-&real.lambda));
        residuals.push((format!("(C - lambda) x^{n}"), cx));
    }
    Ok(RealizationReport { residuals })
}

/// The operator image of `x` applied to `f`, for inspection.
pub fn realize(hp: &HopfPresentation, x: &FreeElement, f: &XPoly) -> Result<XPoly> {
    require_type_i_plus(hp)?;
    Ok(Realization::new(&hp.params().get(Param::A1)).apply(x, f))
}
