//! Commutative polynomials in the group coordinates with parameter-polynomial
//! coefficients. Coordinate degree is unbounded; only the coefficients truncate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::rational::int;
use crate::algebra::render::render_terms;
use crate::algebra::{Monomial, ParamPoly, Rational};

const COORD_COUNT: usize = 9;

/// Group coordinates, a primed copy for the second factor of the group law,
/// and the chart `x1, x2, x3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    AMinus,
    APlus,
    M,
    AMinusP,
    APlusP,
    MP,
    X1,
    X2,
    X3,
}

impl Coord {
    pub const ALL: [Coord; COORD_COUNT] = [
        Coord::AMinus,
        Coord::APlus,
        Coord::M,
        Coord::AMinusP,
        Coord::APlusP,
        Coord::MP,
        Coord::X1,
        Coord::X2,
        Coord::X3,
    ];

    /// `a-, a+, m` in the order of the basis `A-, A+, M` they are dual to.
    pub const GROUP: [Coord; 3] = [Coord::AMinus, Coord::APlus, Coord::M];
    pub const PRIMED: [Coord; 3] = [Coord::AMinusP, Coord::APlusP, Coord::MP];
    pub const CHART: [Coord; 3] = [Coord::X1, Coord::X2, Coord::X3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Coord::AMinus => "a-",
            Coord::APlus => "a+",
            Coord::M => "m",
            Coord::AMinusP => "a-'",
            Coord::APlusP => "a+'",
            Coord::MP => "m'",
            Coord::X1 => "x1",
            Coord::X2 => "x2",
            Coord::X3 => "x3",
        }
    }

    pub fn from_name(s: &str) -> Option<Coord> {
        Coord::ALL.into_iter().find(|c| c.name() == s)
    }

    /// The other copy of a group coordinate; chart coordinates map to themselves.
    pub fn toggled(self) -> Coord {
        match self {
            Coord::AMinus => Coord::AMinusP,
            Coord::APlus => Coord::APlusP,
            Coord::M => Coord::MP,
            Coord::AMinusP => Coord::AMinus,
            Coord::APlusP => Coord::APlus,
            Coord::MP => Coord::M,
            c => c,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(self, Coord::AMinusP | Coord::APlusP | Coord::MP)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector over [`Coord::ALL`]. Ordered by total degree, then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoordMonomial([u16; COORD_COUNT]);

impl CoordMonomial {
    pub fn one() -> Self {
        CoordMonomial::default()
    }

    pub fn var(c: Coord) -> Self {
        let mut e = [0; COORD_COUNT];
        e[c.index()] = 1;
        CoordMonomial(e)
    }

    pub fn exponent(&self, c: Coord) -> u32 {
        self.0[c.index()] as u32
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &CoordMonomial) -> CoordMonomial {
        CoordMonomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }

    fn render(&self) -> Option<String> {
        let parts: Vec<String> = Coord::ALL
            .iter()
            .filter(|c| self.exponent(**c) > 0)
            .map(|c| match self.exponent(*c) {
                1 => c.name().to_string(),
                e => format!("{}^{e}", c.name()),
            })
            .collect();
        if parts.is_empty() {
            None
        } else {
            Some(parts.join("*"))
        }
    }
}

impl Ord for CoordMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for CoordMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct CoordPoly {
    terms: BTreeMap<CoordMonomial, ParamPoly>,
    order: u32,
}

impl CoordPoly {
    pub fn zero(order: u32) -> Self {
        CoordPoly {
            terms: BTreeMap::new(),
            order,
        }
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::term(CoordMonomial::one(), c)
    }

    pub fn rational(r: Rational, order: u32) -> Self {
        Self::constant(ParamPoly::constant(r, order))
    }

    pub fn var(c: Coord, order: u32) -> Self {
        Self::term(CoordMonomial::var(c), ParamPoly::one(order))
    }

    pub fn term(m: CoordMonomial, c: ParamPoly) -> Self {
        let mut p = Self::zero(c.order());
        p.add_term(m, &c);
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordMonomial, &ParamPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &CoordMonomial) -> ParamPoly {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| ParamPoly::zero(self.order))
    }

    /// The value of a coordinate-free polynomial.
    pub fn as_constant(&self) -> Option<ParamPoly> {
        match self.terms.len() {
            0 => Some(ParamPoly::zero(self.order)),
            1 => self.terms.get(&CoordMonomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: CoordMonomial, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(m)
            .or_insert_with(|| ParamPoly::zero(c.order()));
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &ParamPoly) -> CoordPoly {
        let mut out = Self::zero(self.order);
        for (m, d) in &self.terms {
            out.add_term(*m, &(d * c));
        }
        out
    }

    /// Parts of coordinate degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> CoordPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            if m.degree() == d {
                out.add_term(*m, c);
            }
        }
        out
    }

    pub fn derivative(&self, v: Coord) -> CoordPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e > 0 {
                let mut n = *m;
                n.0[v.index()] -= 1;
                out.add_term(n, &c.scale(&int(e as i64)));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> CoordPoly {
        let mut acc = Self::constant(ParamPoly::one(self.order));
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces each coordinate in `map` by a polynomial, simultaneously.
    pub fn compose(&self, map: &BTreeMap<Coord, CoordPoly>) -> CoordPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for v in Coord::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let base = map
                    .get(&v)
                    .cloned()
                    .unwrap_or_else(|| Self::var(v, self.order));
                acc = &acc * &base.pow(e);
            }
            out = &out + &acc;
        }
        out
    }

    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        Coord::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|m| m.exponent(*v) > 0))
    }

    /// Evaluates the parameters in the coefficients.
    pub fn map_coefficients(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> CoordPoly {
        let mut out = Self::zero(self.order);
        for (m, c) in &self.terms {
            out.add_term(*m, &f(c));
        }
        out
    }
}

impl Add<&CoordPoly> for &CoordPoly {
    type Output = CoordPoly;
    fn add(self, rhs: &CoordPoly) -> CoordPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&CoordPoly> for &CoordPoly {
    type Output = CoordPoly;
    fn sub(self, rhs: &CoordPoly) -> CoordPoly {
        self + &-rhs
    }
}

impl Neg for &CoordPoly {
    type Output = CoordPoly;
    fn neg(self) -> CoordPoly {
        self.map_coefficients(|c| -c)
    }
}

impl Mul<&CoordPoly> for &CoordPoly {
    type Output = CoordPoly;
    fn mul(self, rhs: &CoordPoly) -> CoordPoly {
        let mut out = CoordPoly::zero(self.order.max(rhs.order));
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), &(c * d));
            }
        }
        out
    }
}

impl fmt::Display for CoordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut flat: Vec<(Monomial, CoordMonomial, Rational)> = Vec::new();
        for (cm, c) in &self.terms {
            for (pm, r) in c.terms() {
                flat.push((*pm, *cm, r.clone()));
            }
        }
        flat.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
        f.write_str(&render_terms(
            flat.into_iter().map(|(pm, cm, r)| (r, pm, cm.render())),
        ))
    }
}

impl fmt::Debug for CoordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoordPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::algebra::Param;

    const K: u32 = 4;

    fn v(c: Coord) -> CoordPoly {
        CoordPoly::var(c, K)
    }

    #[test]
    fn arithmetic_and_rendering() {
        let a1 = ParamPoly::var(Param::A1, K);
        let p = &v(Coord::AMinus).scale(&a1)
            + &(&v(Coord::AMinus) * &v(Coord::AMinus)).scale(&ParamPoly::constant(frac(-1, 2), K));
        assert_eq!(p.to_string(), "-(1/2)*a-^2 + a1*a-");
        assert!((&p - &p).is_zero());
        assert_eq!(CoordPoly::zero(K).to_string(), "0");
    }

    #[test]
    fn derivative_and_compose() {
        let p = &(&v(Coord::M) * &v(Coord::M)) * &v(Coord::APlus);
        assert_eq!(
            p.derivative(Coord::M),
            (&v(Coord::M) * &v(Coord::APlus)).scale(&ParamPoly::int(2, K))
        );
        let map = BTreeMap::from([(Coord::M, &v(Coord::X3) - &(&v(Coord::X1) * &v(Coord::X2)))]);
        let q = v(Coord::M).compose(&map);
        assert_eq!(q.to_string(), "x3 - x1*x2");
    }

    #[test]
    fn toggling() {
        for c in Coord::GROUP {
            assert!(c.toggled().is_primed());
            assert_eq!(c.toggled().toggled(), c);
            assert_eq!(Coord::from_name(c.name()), Some(c));
        }
        assert_eq!(Coord::X2.toggled(), Coord::X2);
    }
}
