//! A quantized family as a Hopf algebra presentation, its JSON document, and
//! transport along the swap automorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::antipode::solve_antipode;
use super::closed::{dehomogenize, ClosedExpr, ClosedForms, ClosedTensor, Factor};
use super::coproduct::{build_coproduct, coproduct_matrix, family_matrix_delta};
use super::family::{FamilyParams, QuantizationFamily, TypeIMinus};
use super::transport::{transport_rewrite, SignedRelabel};
use super::verify::{verify_hopf, AxiomReport};
use crate::algebra::rational;
use crate::algebra::render::{render_free, render_tensor};
use crate::algebra::{FreeElement, Gen, Matrix2, Param, ParamPoly, RewriteSystem, TensorElement};
use crate::bialgebra::{BasisChange, ClassTag, Cocommutator};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct HopfPresentation {
    family: String,
    tag: ClassTag,
    params: FamilyParams,
    primitive: Gen,
    rewrite: RewriteSystem,
    coproduct: BTreeMap<Gen, TensorElement>,
    counit: BTreeMap<Gen, ParamPoly>,
    antipode: BTreeMap<Gen, FreeElement>,
    closed: ClosedForms,
    cocommutator: Cocommutator,
    coproduct_matrix: Matrix2,
}

impl HopfPresentation {
    /// Builds every structure map without checking the axioms.
    pub fn build(family: &dyn QuantizationFamily, params: &FamilyParams) -> Result<Self> {
        let rewrite = family.relations(params)?;
        let md = family_matrix_delta(family, params)?;
        let coproduct: BTreeMap<Gen, TensorElement> = build_coproduct(&md)?
            .into_iter()
            .map(|(g, t)| (g, t.normal_form(&rewrite)))
            .collect();
        let counit: BTreeMap<Gen, ParamPoly> = Gen::ALL
            .iter()
            .map(|&g| (g, ParamPoly::zero(params.order())))
            .collect();
        let antipode = solve_antipode(&coproduct, &counit, &rewrite)?;
        Ok(HopfPresentation {
            family: family.name().to_string(),
            tag: family.tag(),
            params: params.clone(),
            primitive: family.primitive(),
            rewrite,
            coproduct,
            counit,
            antipode,
            closed: family.closed_forms(params),
            cocommutator: family.cocommutator(params),
            coproduct_matrix: coproduct_matrix(&md)?,
        })
    }

    /// Replaces the relations, keeping the coproduct and antipode as they are.
    /// Used to probe mismatched pairs.
    pub fn with_rewrite(mut self, rewrite: RewriteSystem) -> Self {
        self.rewrite = rewrite;
        self
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn tag(&self) -> ClassTag {
        self.tag
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn order(&self) -> u32 {
        self.rewrite.order()
    }

    pub fn primitive(&self) -> Gen {
        self.primitive
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.rewrite
    }

    pub fn coproduct(&self) -> &BTreeMap<Gen, TensorElement> {
        &self.coproduct
    }

    pub fn counit(&self) -> &BTreeMap<Gen, ParamPoly> {
        &self.counit
    }

    pub fn antipode(&self) -> &BTreeMap<Gen, FreeElement> {
        &self.antipode
    }

    pub fn closed_forms(&self) -> &ClosedForms {
        &self.closed
    }

    /// The classical cocommutator this presentation quantizes.
    pub fn cocommutator(&self) -> &Cocommutator {
        &self.cocommutator
    }

    /// `exp(-D)`, the matrix whose entries `Eij(M)` enter the coproduct.
    pub fn coproduct_matrix(&self) -> &Matrix2 {
        &self.coproduct_matrix
    }

    /// Closed-form coproduct of `g` expanded and normal-ordered.
    pub fn closed_coproduct_series(&self, g: Gen) -> Result<TensorElement> {
        let t = self.closed.coproduct[&g].expand(self.order(), Some(&self.coproduct_matrix))?;
        Ok(t.normal_form(&self.rewrite))
    }

    /// Closed-form antipode of `g` expanded and normal-ordered, if one is known.
    pub fn closed_antipode_series(&self, g: Gen) -> Result<Option<FreeElement>> {
        let Some(c) = self.closed.antipode.get(&g) else {
            return Ok(None);
        };
        let x = c.expand(self.order(), Some(&self.coproduct_matrix))?;
        Ok(Some(self.rewrite.normal_form(&x)))
    }

    /// Relations as `[g,h] = rhs`, in rule order.
    pub fn relation_strings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for &(g, h) in &crate::algebra::rewrite::DESCENTS {
            let c = self
                .rewrite
                .commutator_of(g, h)
                .map_coefficients(dehomogenize);
            out.push(format!("[{g},{h}] = {}", render_free(&c)));
        }
        out
    }

    pub fn to_document(&self) -> HopfDocument {
        let k = self.order();
        let series_t = |g: Gen| render_tensor(&self.coproduct[&g].map_coefficients(dehomogenize));
        let series_x = |g: Gen| render_free(&self.antipode[&g].map_coefficients(dehomogenize));
        let closed_t = |g: Gen| {
            self.closed
                .coproduct
                .get(&g)
                .map(ClosedTensor::render)
                .unwrap_or_else(|| series_t(g))
        };
        let closed_x = |g: Gen| {
            self.closed
                .antipode
                .get(&g)
                .map(ClosedExpr::render)
                .unwrap_or_else(|| series_x(g))
        };
        let counit = |g: Gen| render_free(&FreeElement::scalar(dehomogenize(&self.counit[&g])));
        let parameters = self
            .params
            .values()
            .map(|(p, v)| {
                let shown = if self.params.is_symbol(p) {
                    p.name().to_string()
                } else {
                    match self.params.concrete_value(p) {
                        Some(r) => rational::to_string(&r),
                        None => render_free(&FreeElement::scalar(dehomogenize(v))),
                    }
                };
                (p.name().to_string(), shown)
            })
            .collect();
        HopfDocument {
            family: self.tag.name().to_string(),
            parameters,
            order: k,
            primitive: self.primitive.name().to_string(),
            relations: self.relation_strings(),
            coproduct: GeneratorMap::from_fn(closed_t),
            coproduct_series: GeneratorMap::from_fn(series_t),
            counit: GeneratorMap::from_fn(counit),
            antipode: GeneratorMap::from_fn(closed_x),
            antipode_series: GeneratorMap::from_fn(series_x),
        }
    }

    /// Carries this presentation along a signed-permutation automorphism onto
    /// `target`, renaming parameters by `subst`.
    pub fn transport(
        &self,
        bc: &BasisChange,
        target: &dyn QuantizationFamily,
        target_params: &FamilyParams,
        subst: &BTreeMap<Param, ParamPoly>,
    ) -> Result<HopfPresentation> {
        let relabel = SignedRelabel::from_basis_change(bc)?;
        let rewrite = transport_rewrite(&self.rewrite, &relabel)?
            .renamed(target.name())
            .substituted(subst)?;
        let mut coproduct = BTreeMap::new();
        let mut counit = BTreeMap::new();
        let mut antipode = BTreeMap::new();
        let mut closed_cop = BTreeMap::new();
        let mut closed_ant = BTreeMap::new();
        for g in Gen::ALL {
            // g' = s * old
            let (old, s) = relabel.preimage(g);
            let sp = ParamPoly::constant(s.clone(), self.order());
            let t = relabel
                .tensor(&self.coproduct[&old])
                .scale(&sp)
                .substitute(subst);
            coproduct.insert(g, t.normal_form(&rewrite));
            counit.insert(g, self.counit[&old].scale(&s).substitute(subst));
            let x = relabel
                .element(&self.antipode[&old])
                .scale(&sp)
                .substitute(subst);
            antipode.insert(g, rewrite.normal_form(&x));
            if let Some(c) = self.closed.coproduct.get(&old) {
                closed_cop.insert(g, transport_closed_tensor(c, &relabel, &s, subst));
            }
            if let Some(c) = self.closed.antipode.get(&old) {
                closed_ant.insert(g, transport_closed_expr(c, &relabel, &s, subst));
            }
        }
        let cocommutator = bc
            .transport(&self.cocommutator)?
            .map(|c| c.substitute(subst));
        let md = family_matrix_delta(target, target_params)?;
        Ok(HopfPresentation {
            family: target.name().to_string(),
            tag: target.tag(),
            params: target_params.clone(),
            primitive: relabel
                .word(&crate::algebra::Word::letter(self.primitive))
                .0
                .letters()[0],
            rewrite,
            coproduct,
            counit,
            antipode,
            closed: ClosedForms::new(closed_cop, closed_ant),
            cocommutator,
            coproduct_matrix: coproduct_matrix(&md)?,
        })
    }
}

fn transport_factors(
    fs: &[Factor],
    relabel: &SignedRelabel,
    subst: &BTreeMap<Param, ParamPoly>,
) -> (Vec<Factor>, rational::Rational) {
    let mut sign = rational::int(1);
    let out = fs
        .iter()
        .map(|f| match f {
            Factor::Gen(g) => {
                let (w, s) = relabel.word(&crate::algebra::Word::letter(*g));
                sign *= s;
                Factor::Gen(w.letters()[0])
            }
            Factor::Exp { coeff, gen } => {
                let (w, s) = relabel.word(&crate::algebra::Word::letter(*gen));
                Factor::Exp {
                    coeff: coeff.scale(&s).substitute(subst),
                    gen: w.letters()[0],
                }
            }
            Factor::Entry { row, col } => Factor::Entry {
                row: *row,
                col: *col,
            },
        })
        .collect();
    (out, sign)
}

fn transport_closed_expr(
    c: &ClosedExpr,
    relabel: &SignedRelabel,
    s: &rational::Rational,
    subst: &BTreeMap<Param, ParamPoly>,
) -> ClosedExpr {
    ClosedExpr::new(
        c.terms()
            .iter()
            .map(|(coeff, fs)| {
                let (nfs, sign) = transport_factors(fs, relabel, subst);
                (coeff.scale(&(s * sign)).substitute(subst), nfs)
            })
            .collect(),
    )
}

fn transport_closed_tensor(
    c: &ClosedTensor,
    relabel: &SignedRelabel,
    s: &rational::Rational,
    subst: &BTreeMap<Param, ParamPoly>,
) -> ClosedTensor {
    ClosedTensor::new(
        c.terms()
            .iter()
            .map(|(coeff, slots)| {
                let mut sign = s.clone();
                let nslots = slots
                    .iter()
                    .map(|fs| {
                        let (nfs, sg) = transport_factors(fs, relabel, subst);
                        sign *= sg;
                        nfs
                    })
                    .collect();
                (coeff.scale(&sign).substitute(subst), nslots)
            })
            .collect(),
    )
}

/// Builds the presentation and refuses to return it unless every axiom holds.
pub fn quantize(
    family: &dyn QuantizationFamily,
    params: &FamilyParams,
) -> Result<(HopfPresentation, Vec<AxiomReport>)> {
    let hp = HopfPresentation::build(family, params)?;
    let reports = verify_hopf(&hp)?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.axiom.name())
        .collect();
    if !failed.is_empty() {
        return Err(Error::Verification(format!(
            "{} axiom(s) fail: {}",
            failed.len(),
            failed.join(", ")
        )));
    }
    Ok((hp, reports))
}

/// Type I+ carried along the swap `A+ <-> A-`, `M -> -M`, with `a1 = -b1`, `a3 = -b2`.
pub fn swap_type_i_plus(hp: &HopfPresentation) -> Result<HopfPresentation> {
    if hp.tag() != ClassTag::TypeIPlus {
        return Err(Error::NotQuantizable(format!(
            "expected a TYPE_I_PLUS presentation, got {}",
            hp.tag()
        )));
    }
    let k = hp.order();
    let subst = BTreeMap::from([
        (Param::A1, -&ParamPoly::var(Param::B1, k)),
        (Param::A3, -&ParamPoly::var(Param::B2, k)),
    ]);
    let p = hp.params();
    let target = FamilyParams::from_values(
        BTreeMap::from([
            (Param::B1, (-&p.get(Param::A1)).substitute(&subst)),
            (Param::B2, (-&p.get(Param::A3)).substitute(&subst)),
        ]),
        k,
    );
    hp.transport(&BasisChange::swap(), &TypeIMinus, &target, &subst)
}

/// Generator-keyed strings in the fixed order `M`, `A+`, `A-`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorMap {
    #[serde(rename = "M")]
    pub m: String,
    #[serde(rename = "A+")]
    pub a_plus: String,
    #[serde(rename = "A-")]
    pub a_minus: String,
}

impl GeneratorMap {
    pub fn from_fn(f: impl Fn(Gen) -> String) -> Self {
        GeneratorMap {
            m: f(Gen::M),
            a_plus: f(Gen::APlus),
            a_minus: f(Gen::AMinus),
        }
    }

    pub fn get(&self, g: Gen) -> &str {
        match g {
            Gen::M => &self.m,
            Gen::APlus => &self.a_plus,
            Gen::AMinus => &self.a_minus,
        }
    }
}

/// Serialized form of a [`HopfPresentation`]; all algebra in the canonical text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfDocument {
    pub family: String,
    pub parameters: BTreeMap<String, String>,
    pub order: u32,
    pub primitive: String,
    pub relations: Vec<String>,
    pub coproduct: GeneratorMap,
    pub coproduct_series: GeneratorMap,
    pub counit: GeneratorMap,
    pub antipode: GeneratorMap,
    pub antipode_series: GeneratorMap,
}

impl HopfDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
