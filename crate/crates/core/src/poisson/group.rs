//! The Heisenberg group in coordinates `(m, a-, a+)`, through its upper
//! triangular 3x3 representation
//! `D(T) = exp(m D(M)) exp(a- D(A-)) exp(a+ D(A+))`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::{Coord, CoordPoly};
use crate::algebra::rational::{self, Rational};
use crate::algebra::ParamPoly;
use crate::error::{Error, Result};

pub type Matrix3 = [[CoordPoly; 3]; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCoords {
    pub m: CoordPoly,
    pub a_minus: CoordPoly,
    pub a_plus: CoordPoly,
}

impl GroupCoords {
    pub fn new(m: CoordPoly, a_minus: CoordPoly, a_plus: CoordPoly) -> Self {
        GroupCoords { m, a_minus, a_plus }
    }

    pub fn identity(order: u32) -> Self {
        GroupCoords::new(
            CoordPoly::zero(order),
            CoordPoly::zero(order),
            CoordPoly::zero(order),
        )
    }

    pub fn from_rationals(m: Rational, a_minus: Rational, a_plus: Rational, order: u32) -> Self {
        GroupCoords::new(
            CoordPoly::rational(m, order),
            CoordPoly::rational(a_minus, order),
            CoordPoly::rational(a_plus, order),
        )
    }

    /// `(m, a-, a+)` as coordinate variables.
    pub fn symbolic(order: u32) -> Self {
        GroupCoords::new(
            CoordPoly::var(Coord::M, order),
            CoordPoly::var(Coord::AMinus, order),
            CoordPoly::var(Coord::APlus, order),
        )
    }

    /// `(m', a-', a+')`.
    pub fn symbolic_primed(order: u32) -> Self {
        GroupCoords::new(
            CoordPoly::var(Coord::MP, order),
            CoordPoly::var(Coord::AMinusP, order),
            CoordPoly::var(Coord::APlusP, order),
        )
    }

    pub fn order(&self) -> u32 {
        self.m.order()
    }

    /// The coordinate dual to each basis element `A-, A+, M`.
    pub fn get(&self, c: Coord) -> &CoordPoly {
        match c {
            Coord::AMinus | Coord::AMinusP | Coord::X1 => &self.a_minus,
            Coord::APlus | Coord::APlusP | Coord::X2 => &self.a_plus,
            Coord::M | Coord::MP | Coord::X3 => &self.m,
        }
    }

    /// `[[1, a-, m + a- a+], [0, 1, a+], [0, 0, 1]]`.
    pub fn matrix(&self) -> Matrix3 {
        let k = self.order();
        let zero = CoordPoly::zero(k);
        let one = CoordPoly::constant(ParamPoly::one(k));
        [
            [
                one.clone(),
                self.a_minus.clone(),
                &self.m + &(&self.a_minus * &self.a_plus),
            ],
            [zero.clone(), one.clone(), self.a_plus.clone()],
            [zero.clone(), zero, one],
        ]
    }

    /// Reads coordinates back from an upper unitriangular matrix.
    pub fn from_matrix(d: &Matrix3) -> Result<Self> {
        let k = d[0][0].order();
        let one = CoordPoly::constant(ParamPoly::one(k));
        let unitriangular =
            (0..3).all(|i| d[i][i] == one) && (0..3).all(|i| (0..i).all(|j| d[i][j].is_zero()));
        if !unitriangular {
            return Err(Error::UnsupportedMatrix("not upper unitriangular".into()));
        }
        let a_minus = d[0][1].clone();
        let a_plus = d[1][2].clone();
        let m = &d[0][2] - &(&a_minus * &a_plus);
        Ok(GroupCoords::new(m, a_minus, a_plus))
    }

    /// Replaces coordinate variables inside each component.
    pub fn compose(&self, map: &BTreeMap<Coord, CoordPoly>) -> GroupCoords {
        GroupCoords::new(
            self.m.compose(map),
            self.a_minus.compose(map),
            self.a_plus.compose(map),
        )
    }

    pub fn to_json(&self) -> Option<GroupJson> {
        let r = |p: &CoordPoly| {
            p.as_constant()
                .and_then(|c| c.as_constant())
                .map(|v| rational::to_string(&v))
        };
        Some(GroupJson(r(&self.m)?, r(&self.a_minus)?, r(&self.a_plus)?))
    }
}

impl fmt::Display for GroupCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, a-={}, a+={})", self.m, self.a_minus, self.a_plus)
    }
}

/// Wire form: `["m", "a-", "a+"]` as rational strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson(pub String, pub String, pub String);

impl GroupJson {
    pub fn to_coords(&self, order: u32) -> Result<GroupCoords> {
        Ok(GroupCoords::from_rationals(
            rational::parse(&self.0)?,
            rational::parse(&self.1)?,
            rational::parse(&self.2)?,
            order,
        ))
    }
}

pub fn matrix_mul(x: &Matrix3, y: &Matrix3) -> Matrix3 {
    let k = x[0][0].order();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let mut acc = CoordPoly::zero(k);
            for (l, row) in y.iter().enumerate() {
                acc = &acc + &(&x[i][l] * &row[j]);
            }
            acc
        })
    })
}

/// `g1 . g2` with `D(g1 . g2) = D(g2) D(g1)`:
/// `m'' = m + m' - a- a+'`, `a+'' = a+ + a+'`, `a-'' = a- + a-'`.
pub fn group_compose(g1: &GroupCoords, g2: &GroupCoords) -> GroupCoords {
    GroupCoords::new(
        &(&g1.m + &g2.m) - &(&g1.a_minus * &g2.a_plus),
        &g1.a_minus + &g2.a_minus,
        &g1.a_plus + &g2.a_plus,
    )
}

pub fn group_inverse(g: &GroupCoords) -> GroupCoords {
    GroupCoords::new(&-&g.m - &(&g.a_minus * &g.a_plus), -&g.a_minus, -&g.a_plus)
}

/// The group law read as a coproduct on coordinate functions: `u -> u''` in
/// terms of the unprimed and primed copies.
pub fn group_pullback(u: &CoordPoly) -> CoordPoly {
    let k = u.order();
    let law = group_compose(&GroupCoords::symbolic(k), &GroupCoords::symbolic_primed(k));
    let map: BTreeMap<Coord, CoordPoly> = Coord::GROUP
        .iter()
        .map(|&c| (c, law.get(c).clone()))
        .collect();
    u.compose(&map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::bialgebra::CLASSICAL_ORDER as K;

    fn pt(m: i64, am: i64, ap: i64) -> GroupCoords {
        GroupCoords::from_rationals(int(m), int(am), int(ap), K)
    }

    #[test]
    fn composition_example() {
        let g = group_compose(&pt(0, 1, 0), &pt(0, 0, 1));
        assert_eq!(g, pt(-1, 1, 1));
        assert_eq!(
            g.to_json().unwrap(),
            GroupJson("-1".into(), "1".into(), "1".into())
        );
    }

    #[test]
    fn matrix_round_trip() {
        let g = GroupCoords::symbolic(K);
        assert_eq!(GroupCoords::from_matrix(&g.matrix()).unwrap(), g);
        assert_eq!(g.matrix()[0][2].to_string(), "m + a-*a+");
    }

    #[test]
    fn identity_and_inverse() {
        let g = GroupCoords::symbolic(K);
        let e = GroupCoords::identity(K);
        assert_eq!(group_compose(&e, &g), g);
        assert_eq!(group_compose(&g, &e), g);
        assert_eq!(group_compose(&g, &group_inverse(&g)), e);
        assert_eq!(group_compose(&group_inverse(&g), &g), e);
    }

    #[test]
    fn symbolic_matrix_product() {
        let g1 = GroupCoords::symbolic(K);
        let g2 = GroupCoords::symbolic_primed(K);
        let prod = matrix_mul(&g2.matrix(), &g1.matrix());
        assert_eq!(
            GroupCoords::from_matrix(&prod).unwrap(),
            group_compose(&g1, &g2)
        );
        assert_eq!(
            group_pullback(&CoordPoly::var(Coord::M, K)).to_string(),
            "m + m' - a-*a+'"
        );
    }
}
