//! The three quantizable families, each behind [`QuantizationFamily`] and
//! looked up by name in a [`FamilyRegistry`].

use std::collections::BTreeMap;
use std::fmt;

use super::closed::{ClosedExpr, ClosedForms, ClosedTensor, Factor};
use super::transport::{transport_rewrite, SignedRelabel};
use crate::algebra::rational::{frac, Rational};
use crate::algebra::{
    exp_difference_quotient, FreeElement, Gen, Param, ParamPoly, RewriteSystem, Word,
};
use crate::bialgebra::{BasisChange, BialgebraClass, ClassTag, Cocommutator};
use crate::error::{Error, Result};

/// Values of a family's parameters. Symbolic parameters are the bare symbol;
/// a concrete value `v` is stored as `v*h` so the series still truncate, and
/// `h` is set to 1 when rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    values: BTreeMap<Param, ParamPoly>,
    order: u32,
}

impl FamilyParams {
    pub fn symbolic(params: &[Param], order: u32) -> Self {
        FamilyParams {
            values: params
                .iter()
                .map(|&p| (p, ParamPoly::var(p, order)))
                .collect(),
            order,
        }
    }

    pub fn concrete(values: &[(Param, Rational)], order: u32) -> Self {
        let h = ParamPoly::var(Param::H, order);
        FamilyParams {
            values: values.iter().map(|(p, v)| (*p, h.scale(v))).collect(),
            order,
        }
    }

    pub fn from_values(values: BTreeMap<Param, ParamPoly>, order: u32) -> Self {
        FamilyParams { values, order }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, p: Param) -> ParamPoly {
        self.values
            .get(&p)
            .cloned()
            .unwrap_or_else(|| ParamPoly::zero(self.order))
    }

    pub fn values(&self) -> impl Iterator<Item = (Param, &ParamPoly)> {
        self.values.iter().map(|(p, v)| (*p, v))
    }

    pub fn is_symbol(&self, p: Param) -> bool {
        self.get(p) == ParamPoly::var(p, self.order)
    }

    /// The concrete value of `p`, if it is not a symbol.
    pub fn concrete_value(&self, p: Param) -> Option<Rational> {
        let v = self.get(p);
        if v.is_zero() {
            return Some(Rational::default());
        }
        let one = BTreeMap::from([(Param::H, ParamPoly::one(self.order))]);
        if v.depends_on(Param::H) {
            v.substitute(&one).as_constant()
        } else {
            v.as_constant()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(ParamPoly::is_zero)
    }
}

pub trait QuantizationFamily: Send + Sync + fmt::Debug {
    /// Registry key, e.g. `type1plus`.
    fn name(&self) -> &'static str;

    fn tag(&self) -> ClassTag;

    fn parameters(&self) -> &'static [Param];

    fn primitive(&self) -> Gen;

    fn non_primitive(&self) -> [Gen; 2];

    /// The normalized cocommutator of the family.
    fn cocommutator(&self, p: &FamilyParams) -> Cocommutator;

    /// The deformed commutation rules.
    fn relations(&self, p: &FamilyParams) -> Result<RewriteSystem>;

    /// Closed-form coproduct and, where known, antipode.
    fn closed_forms(&self, p: &FamilyParams) -> ClosedForms;
}

/// `[A+, M]`, `[A-, M]`, `[A-, A+]` keyed by their descending pair.
fn commutators(rules: [FreeElement; 3]) -> BTreeMap<(Gen, Gen), FreeElement> {
    let [ap_m, am_m, am_ap] = rules;
    BTreeMap::from([
        ((Gen::APlus, Gen::M), ap_m),
        ((Gen::AMinus, Gen::M), am_m),
        ((Gen::AMinus, Gen::APlus), am_ap),
    ])
}

fn g(x: Gen) -> Factor {
    Factor::Gen(x)
}

fn exp(c: ParamPoly, x: Gen) -> Factor {
    Factor::Exp { coeff: c, gen: x }
}

fn primitive_tensor(x: Gen, order: u32) -> ClosedTensor {
    let one = ParamPoly::one(order);
    ClosedTensor::new(vec![
        (one.clone(), vec![vec![], vec![g(x)]]),
        (one, vec![vec![g(x)], vec![]]),
    ])
}

/// Primitive `A+`; `[A-, M] = (a1/2) M^2`.
#[derive(Debug)]
pub struct TypeIPlus;

impl QuantizationFamily for TypeIPlus {
    fn name(&self) -> &'static str {
        "type1plus"
    }

    fn tag(&self) -> ClassTag {
        ClassTag::TypeIPlus
    }

    fn parameters(&self) -> &'static [Param] {
        &[Param::A1, Param::A3]
    }

    fn primitive(&self) -> Gen {
        Gen::APlus
    }

    fn non_primitive(&self) -> [Gen; 2] {
        [Gen::AMinus, Gen::M]
    }

    fn cocommutator(&self, p: &FamilyParams) -> Cocommutator {
        let z = || ParamPoly::zero(p.order());
        Cocommutator::with_forced_c([p.get(Param::A1), z(), p.get(Param::A3)], [z(), z(), z()])
    }

    fn relations(&self, p: &FamilyParams) -> Result<RewriteSystem> {
        let k = p.order();
        let m = FreeElement::gen(Gen::M, k);
        let half_a1 = p.get(Param::A1).scale(&frac(1, 2));
        let comms = commutators([
            FreeElement::zero(k),
            FreeElement::word(Word::power(Gen::M, 2), k).scale(&half_a1),
            m,
        ]);
        RewriteSystem::from_commutators(self.name(), k, &comms)
    }

    fn closed_forms(&self, p: &FamilyParams) -> ClosedForms {
        let k = p.order();
        let one = ParamPoly::one(k);
        let a1 = p.get(Param::A1);
        let a3 = p.get(Param::A3);
        let e = || exp(a1.clone(), Gen::APlus);
        let e_inv = || exp(-&a1, Gen::APlus);
        let coproduct = BTreeMap::from([
            (Gen::APlus, primitive_tensor(Gen::APlus, k)),
            (
                Gen::M,
                ClosedTensor::new(vec![
                    (one.clone(), vec![vec![], vec![g(Gen::M)]]),
                    (one.clone(), vec![vec![g(Gen::M)], vec![e()]]),
                ]),
            ),
            (
                Gen::AMinus,
                ClosedTensor::new(vec![
                    (one.clone(), vec![vec![], vec![g(Gen::AMinus)]]),
                    (one.clone(), vec![vec![g(Gen::AMinus)], vec![e()]]),
                    (-&a3, vec![vec![g(Gen::M)], vec![g(Gen::APlus), e()]]),
                ]),
            ),
        ]);
        let antipode = BTreeMap::from([
            (
                Gen::APlus,
                ClosedExpr::new(vec![(-&one, vec![g(Gen::APlus)])]),
            ),
            (
                Gen::M,
                ClosedExpr::new(vec![(-&one, vec![g(Gen::M), e_inv()])]),
            ),
            (
                Gen::AMinus,
                ClosedExpr::new(vec![
                    (-&one, vec![g(Gen::AMinus), e_inv()]),
                    (-&a3, vec![g(Gen::M), g(Gen::APlus), e_inv()]),
                ]),
            ),
        ]);
        ClosedForms::new(coproduct, antipode)
    }
}

/// Primitive `A-`; the relations are those of [`TypeIPlus`] carried along the
/// swap `A+ <-> A-`, `M -> -M` with `a1 = -b1`, `a3 = -b2`.
#[derive(Debug)]
pub struct TypeIMinus;

impl TypeIMinus {
    /// The `TypeIPlus` parameters whose swap image has these `(b1, b2)`.
    pub fn mirrored_params(p: &FamilyParams) -> FamilyParams {
        FamilyParams::from_values(
            BTreeMap::from([
                (Param::A1, -&p.get(Param::B1)),
                (Param::A3, -&p.get(Param::B2)),
            ]),
            p.order(),
        )
    }
}

impl QuantizationFamily for TypeIMinus {
    fn name(&self) -> &'static str {
        "type1minus"
    }

    fn tag(&self) -> ClassTag {
        ClassTag::TypeIMinus
    }

    fn parameters(&self) -> &'static [Param] {
        &[Param::B1, Param::B2]
    }

    fn primitive(&self) -> Gen {
        Gen::AMinus
    }

    fn non_primitive(&self) -> [Gen; 2] {
        [Gen::APlus, Gen::M]
    }

    fn cocommutator(&self, p: &FamilyParams) -> Cocommutator {
        let z = || ParamPoly::zero(p.order());
        Cocommutator::with_forced_c([z(), z(), z()], [p.get(Param::B1), p.get(Param::B2), z()])
    }

    fn relations(&self, p: &FamilyParams) -> Result<RewriteSystem> {
        let plus = TypeIPlus.relations(&Self::mirrored_params(p))?;
        let relabel = SignedRelabel::from_basis_change(&BasisChange::swap())?;
        Ok(transport_rewrite(&plus, &relabel)?.renamed(self.name()))
    }

    fn closed_forms(&self, p: &FamilyParams) -> ClosedForms {
        let k = p.order();
        let one = ParamPoly::one(k);
        let b1 = p.get(Param::B1);
        let b2 = p.get(Param::B2);
        let e = || exp(-&b1, Gen::AMinus);
        let e_inv = || exp(b1.clone(), Gen::AMinus);
        let coproduct = BTreeMap::from([
            (Gen::AMinus, primitive_tensor(Gen::AMinus, k)),
            (
                Gen::M,
                ClosedTensor::new(vec![
                    (one.clone(), vec![vec![], vec![g(Gen::M)]]),
                    (one.clone(), vec![vec![g(Gen::M)], vec![e()]]),
                ]),
            ),
            (
                Gen::APlus,
                ClosedTensor::new(vec![
                    (one.clone(), vec![vec![], vec![g(Gen::APlus)]]),
                    (one.clone(), vec![vec![g(Gen::APlus)], vec![e()]]),
                    (-&b2, vec![vec![g(Gen::M)], vec![g(Gen::AMinus), e()]]),
                ]),
            ),
        ]);
        let antipode = BTreeMap::from([
            (
                Gen::AMinus,
                ClosedExpr::new(vec![(-&one, vec![g(Gen::AMinus)])]),
            ),
            (
                Gen::M,
                ClosedExpr::new(vec![(-&one, vec![g(Gen::M), e_inv()])]),
            ),
            (
                Gen::APlus,
                ClosedExpr::new(vec![
                    (-&one, vec![g(Gen::APlus), e_inv()]),
                    (-&b2, vec![g(Gen::M), g(Gen::AMinus), e_inv()]),
                ]),
            ),
        ]);
        ClosedForms::new(coproduct, antipode)
    }
}

/// Primitive and central `M`; `[A-, A+] = (exp((a2+b3) M) - 1)/(a2+b3)`.
#[derive(Debug)]
pub struct TypeII;

impl QuantizationFamily for TypeII {
    fn name(&self) -> &'static str {
        "type2"
    }

    fn tag(&self) -> ClassTag {
        ClassTag::TypeII
    }

    fn parameters(&self) -> &'static [Param] {
        &[Param::A2, Param::A3, Param::B2, Param::B3]
    }

    fn primitive(&self) -> Gen {
        Gen::M
    }

    fn non_primitive(&self) -> [Gen; 2] {
        [Gen::AMinus, Gen::APlus]
    }

    fn cocommutator(&self, p: &FamilyParams) -> Cocommutator {
        let z = || ParamPoly::zero(p.order());
        Cocommutator::with_forced_c(
            [z(), p.get(Param::A2), p.get(Param::A3)],
            [z(), p.get(Param::B2), p.get(Param::B3)],
        )
    }

    fn relations(&self, p: &FamilyParams) -> Result<RewriteSystem> {
        let k = p.order();
        let s = &p.get(Param::A2) + &p.get(Param::B3);
        let comms = commutators([
            FreeElement::zero(k),
            FreeElement::zero(k),
            exp_difference_quotient(&s, &FreeElement::gen(Gen::M, k)),
        ]);
        RewriteSystem::from_commutators(self.name(), k, &comms)
    }

    fn closed_forms(&self, p: &FamilyParams) -> ClosedForms {
        let k = p.order();
        let one = ParamPoly::one(k);
        let diagonal = p.get(Param::A3).is_zero() && p.get(Param::B2).is_zero();
        let entry = |i: usize, j: usize| -> Vec<Factor> {
            if diagonal {
                let c = if i == 0 {
                    p.get(Param::A2)
                } else {
                    p.get(Param::B3)
                };
                vec![exp(c, Gen::M)]
            } else {
                vec![Factor::Entry { row: i, col: j }]
            }
        };
        let row = |x: Gen, i: usize| {
            let mut terms = vec![(one.clone(), vec![vec![], vec![g(x)]])];
            for (j, y) in [Gen::AMinus, Gen::APlus].into_iter().enumerate() {
                if diagonal && i != j {
                    continue;
                }
                terms.push((one.clone(), vec![vec![g(y)], entry(i, j)]));
            }
            ClosedTensor::new(terms)
        };
        let coproduct = BTreeMap::from([
            (Gen::M, primitive_tensor(Gen::M, k)),
            (Gen::AMinus, row(Gen::AMinus, 0)),
            (Gen::APlus, row(Gen::APlus, 1)),
        ]);
        let mut antipode =
            BTreeMap::from([(Gen::M, ClosedExpr::new(vec![(-&one, vec![g(Gen::M)])]))]);
        if diagonal {
            antipode.insert(
                Gen::AMinus,
                ClosedExpr::new(vec![(
                    -&one,
                    vec![g(Gen::AMinus), exp(-&p.get(Param::A2), Gen::M)],
                )]),
            );
            antipode.insert(
                Gen::APlus,
                ClosedExpr::new(vec![(
                    -&one,
                    vec![g(Gen::APlus), exp(-&p.get(Param::B3), Gen::M)],
                )]),
            );
        }
        ClosedForms::new(coproduct, antipode)
    }
}

/// Families by name.
#[derive(Debug)]
pub struct FamilyRegistry {
    families: Vec<Box<dyn QuantizationFamily>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        FamilyRegistry {
            families: vec![Box::new(TypeIPlus), Box::new(TypeIMinus), Box::new(TypeII)],
        }
    }
}

impl FamilyRegistry {
    pub fn new() -> Self {
        FamilyRegistry {
            families: Vec::new(),
        }
    }

    pub fn register(&mut self, family: Box<dyn QuantizationFamily>) {
        self.families.retain(|f| f.name() != family.name());
        self.families.push(family);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.families.iter().map(|f| f.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn QuantizationFamily> {
        self.families
            .iter()
            .find(|f| f.name() == name)
            .map(|f| f.as_ref())
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn by_tag(&self, tag: ClassTag) -> Option<&dyn QuantizationFamily> {
        self.families
            .iter()
            .find(|f| f.tag() == tag)
            .map(|f| f.as_ref())
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn QuantizationFamily> {
        self.families.iter().map(|f| f.as_ref())
    }

    /// The family and concrete parameters of a classified bialgebra. The
    /// trivial structure is quantized as Type II with all parameters zero.
    pub fn for_class(
        &self,
        cls: &BialgebraClass,
        order: u32,
    ) -> Result<(&dyn QuantizationFamily, FamilyParams)> {
        let tag = match cls.tag {
            ClassTag::Invalid => {
                return Err(Error::NotQuantizable(
                    "the cocommutator is not a Lie bialgebra".into(),
                ));
            }
            ClassTag::Trivial => ClassTag::TypeII,
            t => t,
        };
        let family = self
            .by_tag(tag)
            .ok_or_else(|| Error::UnknownFamily(tag.name().to_string()))?;
        let values: Vec<(Param, Rational)> = family
            .parameters()
            .iter()
            .map(|&p| (p, cls.normalized.get(p).as_constant().unwrap_or_default()))
            .collect();
        Ok((family, FamilyParams::concrete(&values, order)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn registry_lookup() {
        let reg = FamilyRegistry::default();
        assert_eq!(reg.names(), vec!["type1plus", "type1minus", "type2"]);
        assert_eq!(reg.get("type2").unwrap().primitive(), Gen::M);
        assert_eq!(
            reg.get("type3").unwrap_err(),
            Error::UnknownFamily("type3".into())
        );
        assert_eq!(
            reg.by_tag(ClassTag::TypeIMinus).unwrap().name(),
            "type1minus"
        );
    }

    #[test]
    fn type_i_plus_rules() {
        let p = FamilyParams::symbolic(TypeIPlus.parameters(), 4);
        let rs = TypeIPlus.relations(&p).unwrap();
        assert_eq!(
            rs.commutator_of(Gen::AMinus, Gen::M).to_string(),
            "(1/2)*a1*M^2"
        );
        assert_eq!(rs.commutator_of(Gen::AMinus, Gen::APlus).to_string(), "M");
        assert!(rs.commutator_of(Gen::APlus, Gen::M).is_zero());
        assert!(rs.confluence_failures().is_empty());
    }

    #[test]
    fn type_ii_rules_at_order_two() {
        let p = FamilyParams::symbolic(TypeII.parameters(), 2);
        let rs = TypeII.relations(&p).unwrap();
        assert_eq!(
            rs.commutator_of(Gen::AMinus, Gen::APlus).to_string(),
            "M + (1/2)*a2*M^2 + (1/2)*b3*M^2 + (1/6)*a2^2*M^3 + (1/3)*a2*b3*M^3 + (1/6)*b3^2*M^3"
        );
    }

    #[test]
    fn type_i_minus_rules_from_swap() {
        let p = FamilyParams::symbolic(TypeIMinus.parameters(), 4);
        let rs = TypeIMinus.relations(&p).unwrap();
        assert_eq!(
            rs.commutator_of(Gen::APlus, Gen::M).to_string(),
            "(1/2)*b1*M^2"
        );
        assert!(rs.commutator_of(Gen::AMinus, Gen::M).is_zero());
        assert_eq!(rs.commutator_of(Gen::AMinus, Gen::APlus).to_string(), "M");
    }

    #[test]
    fn zero_parameters_are_undeformed() {
        for f in FamilyRegistry::default().iter() {
            let values: Vec<_> = f.parameters().iter().map(|&p| (p, int(0))).collect();
            let p = FamilyParams::concrete(&values, 3);
            assert_eq!(
                f.relations(&p).unwrap().renamed("undeformed"),
                RewriteSystem::undeformed(3)
            );
        }
    }

    #[test]
    fn concrete_values() {
        let p = FamilyParams::concrete(&[(Param::A1, int(2)), (Param::A3, int(0))], 4);
        assert_eq!(p.concrete_value(Param::A1), Some(int(2)));
        assert_eq!(p.concrete_value(Param::A3), Some(int(0)));
        assert!(!p.is_symbol(Param::A1));
        let s = FamilyParams::symbolic(&[Param::A1], 4);
        assert!(s.is_symbol(Param::A1));
        assert_eq!(s.concrete_value(Param::A1), None);
    }
}
