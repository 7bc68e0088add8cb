//! Sorting solutions of the bialgebra constraints into the three families.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::automorphism::{apply_automorphism, BasisChange};
use super::cocommutator::{cocycle_residuals, cojacobi_residuals, Cocommutator};
use super::lie::LieStructure;
use super::rmatrix::{find_rmatrix, CoboundarySolution};
use crate::algebra::rational::{self, Rational};
use crate::algebra::Param;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    #[serde(rename = "TRIVIAL")]
    Trivial,
    #[serde(rename = "TYPE_I_PLUS")]
    TypeIPlus,
    #[serde(rename = "TYPE_I_MINUS")]
    TypeIMinus,
    #[serde(rename = "TYPE_II")]
    TypeII,
    #[serde(rename = "INVALID")]
    Invalid,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Trivial => "TRIVIAL",
            ClassTag::TypeIPlus => "TYPE_I_PLUS",
            ClassTag::TypeIMinus => "TYPE_I_MINUS",
            ClassTag::TypeII => "TYPE_II",
            ClassTag::Invalid => "INVALID",
        }
    }

    /// Coefficients that survive normalization.
    pub fn free_parameters(self) -> &'static [Param] {
        match self {
            ClassTag::TypeIPlus => &[Param::A1, Param::A3],
            ClassTag::TypeIMinus => &[Param::B1, Param::B2],
            ClassTag::TypeII => &[Param::A2, Param::A3, Param::B2, Param::B3],
            ClassTag::Trivial | ClassTag::Invalid => &[],
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraClass {
    pub tag: ClassTag,
    pub original: Cocommutator,
    pub normalized: Cocommutator,
    pub automorphism: BasisChange,
    pub coboundary: Option<CoboundarySolution>,
    /// Human-readable nonzero residuals; empty unless `tag` is `Invalid`.
    pub violations: Vec<String>,
}

impl BialgebraClass {
    pub fn is_valid(&self) -> bool {
        self.tag != ClassTag::Invalid
    }

    pub fn is_coboundary(&self) -> bool {
        self.coboundary.is_some()
    }

    /// Surviving coefficients of the normalized form, in the family's order.
    pub fn parameters(&self) -> Vec<(Param, Rational)> {
        self.tag
            .free_parameters()
            .iter()
            .map(|&p| (p, self.normalized.get(p).as_constant().unwrap_or_default()))
            .collect()
    }

    /// One-line verdict, e.g. `TYPE_II, coboundary, xi=1` or `TYPE_I_PLUS, a1=1, a3=0`.
    pub fn summary(&self) -> String {
        let mut parts = vec![self.tag.name().to_string()];
        match (&self.coboundary, self.tag) {
            (_, ClassTag::Trivial | ClassTag::Invalid) => {}
            (Some(s), _) => {
                parts.push("coboundary".into());
                let xi = s.r.xi.as_constant().unwrap_or_default();
                parts.push(format!("xi={}", rational::to_string(&xi)));
            }
            (None, _) => {
                for (p, v) in self.parameters() {
                    parts.push(format!("{p}={}", rational::to_string(&v)));
                }
            }
        }
        parts.join(", ")
    }
}

/// Classifies a concrete cocommutator on the Heisenberg-Weyl algebra.
pub fn classify(delta: &Cocommutator) -> Result<BialgebraClass> {
    let g = LieStructure::heisenberg_weyl();
    let v = delta
        .as_rationals()
        .ok_or_else(|| Error::NotConcrete("classification needs rational coefficients".into()))?;

    let mut violations = Vec::new();
    for (pair, t) in cocycle_residuals(delta, &g)? {
        if !t.is_zero() {
            violations.push(format!("cocycle residual on {pair}: {t}"));
        }
    }
    for (i, r) in cojacobi_residuals(delta).iter().enumerate() {
        if !r.is_zero() {
            violations.push(format!("co-Jacobi residual {}: {r}", i + 1));
        }
    }
    if !violations.is_empty() {
        return Ok(BialgebraClass {
            tag: ClassTag::Invalid,
            original: delta.clone(),
            normalized: delta.clone(),
            automorphism: BasisChange::identity(),
            coboundary: None,
            violations,
        });
    }

    let [a1, a2, a3, b1, _b2, b3, ..] = &v;
    let (tag, automorphism) = if delta.is_zero() {
        (ClassTag::Trivial, BasisChange::identity())
    } else if !a1.is_zero() {
        (
            ClassTag::TypeIPlus,
            BasisChange::type_i_plus(a1, a2, a3, b1),
        )
    } else if !b1.is_zero() {
        (ClassTag::TypeIMinus, BasisChange::type_i_minus(b1, b3))
    } else {
        (ClassTag::TypeII, BasisChange::identity())
    };
    let normalized = apply_automorphism(delta, &automorphism, &g)?;
    let coboundary = find_rmatrix(&normalized)?;
    Ok(BialgebraClass {
        tag,
        original: delta.clone(),
        normalized,
        automorphism,
        coboundary,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::bialgebra::cocommutator::CocommutatorJson;

    fn parse(s: &str) -> Cocommutator {
        CocommutatorJson::parse(s)
            .unwrap()
            .to_cocommutator()
            .unwrap()
    }

    #[test]
    fn coboundary_point() {
        let c = classify(&parse(r#"{"a2":"-1","b3":"-1"}"#)).unwrap();
        assert_eq!(c.tag, ClassTag::TypeII);
        assert_eq!(c.summary(), "TYPE_II, coboundary, xi=1");
    }

    #[test]
    fn trivial() {
        let c = classify(&parse("{}")).unwrap();
        assert_eq!(c.summary(), "TRIVIAL");
        assert!(c.is_coboundary());
    }

    #[test]
    fn type_i_plus_normalization() {
        let c = classify(&parse(r#"{"a1":"1","b1":"1"}"#)).unwrap();
        assert_eq!(c.tag, ClassTag::TypeIPlus);
        assert_eq!(c.automorphism.to_string(), "A+' = A+ - A-");
        assert_eq!(
            c.parameters(),
            vec![(Param::A1, int(1)), (Param::A3, int(0))]
        );
        assert_eq!(c.summary(), "TYPE_I_PLUS, a1=1, a3=0");
        assert!(!c.is_coboundary());
    }

    #[test]
    fn type_i_minus_normalization() {
        // a1 = 0 forces a3 = 0 and a2 = b3
        let c = classify(&parse(r#"{"a2":"3","b1":"2","b2":"5","b3":"3"}"#)).unwrap();
        assert_eq!(c.tag, ClassTag::TypeIMinus);
        for p in [Param::A1, Param::A2, Param::A3, Param::B3] {
            assert!(c.normalized.get(p).is_zero(), "{p}");
        }
        assert_eq!(c.summary(), "TYPE_I_MINUS, b1=2, b2=5");
    }

    #[test]
    fn invalid_reports_residual() {
        let c = classify(&parse(r#"{"a1":"1","a3":"1","b1":"1","b3":"2"}"#)).unwrap();
        assert_eq!(c.tag, ClassTag::Invalid);
        assert_eq!(c.violations, vec!["co-Jacobi residual 2: -2".to_string()]);
    }

    #[test]
    fn broken_cocycle_is_invalid() {
        let c = classify(&parse(r#"{"c1":"1"}"#)).unwrap();
        assert_eq!(c.tag, ClassTag::Invalid);
        assert!(c.violations[0].starts_with("cocycle residual on (A-,A+)"));
    }

    #[test]
    fn symbolic_rejected() {
        let d = Cocommutator::symbolic(4);
        assert!(matches!(classify(&d), Err(Error::NotConcrete(_))));
    }
}
