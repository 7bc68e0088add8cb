//! The Poisson–Lie bracket on the group coordinates whose linearization is the
//! dual of a cocommutator:
//!
//! ```text
//! {a-, a+} = a1 a- + b1 a+
//! {a-, m}  = a2 a- + b2 a+ + b1 m - (a1/2) a-^2
//! {a+, m}  = a3 a- + b3 a+ - a1 m + (b1/2) a+^2
//! ```
//!
//! The primed copy carries the same bracket and commutes with the unprimed one.

use std::collections::BTreeMap;

use super::group::group_pullback;
use super::poly::{Coord, CoordPoly};
use crate::algebra::rational::frac;
use crate::algebra::{Param, ParamPoly};
use crate::bialgebra::{dual_bracket, Cocommutator, CLASSICAL_ORDER};
use crate::error::{Error, Result};

/// Generator brackets `{u, v}` for `u < v` in `a-, a+, m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    brackets: BTreeMap<(Coord, Coord), CoordPoly>,
    order: u32,
}

fn pair_index(u: Coord, v: Coord) -> Option<((Coord, Coord), bool)> {
    let base = |c: Coord| if c.is_primed() { c.toggled() } else { c };
    if u.is_primed() != v.is_primed() || matches!(u, Coord::X1 | Coord::X2 | Coord::X3) {
        return None;
    }
    let (a, b) = (base(u), base(v));
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Some(((a, b), false)),
        std::cmp::Ordering::Greater => Some(((b, a), true)),
        std::cmp::Ordering::Equal => None,
    }
}

impl PoissonStructure {
    /// The bracket for coefficients `a1..b3`; no constraint is checked.
    pub fn new(a: [ParamPoly; 3], b: [ParamPoly; 3]) -> Self {
        let order = a[0].order();
        let v = |c| CoordPoly::var(c, order);
        let lin = |x: &ParamPoly, c| v(c).scale(x);
        let sq = |x: &ParamPoly, s: i64, c| (&v(c) * &v(c)).scale(&x.scale(&frac(s, 2)));
        let [a1, a2, a3] = &a;
        let [b1, b2, b3] = &b;
        let (am, ap, m) = (Coord::AMinus, Coord::APlus, Coord::M);
        let brackets = BTreeMap::from([
            ((am, ap), &lin(a1, am) + &lin(b1, ap)),
            (
                (am, m),
                &(&(&lin(a2, am) + &lin(b2, ap)) + &lin(b1, m)) + &sq(a1, -1, am),
            ),
            (
                (ap, m),
                &(&(&lin(a3, am) + &lin(b3, ap)) - &lin(a1, m)) + &sq(b1, 1, ap),
            ),
        ]);
        PoissonStructure { brackets, order }
    }

    /// Reads `a1..b3` off a cocommutator whose `c` row takes the cocycle-forced values.
    pub fn from_cocommutator(delta: &Cocommutator) -> Result<Self> {
        let g = |p| delta.get(p).clone();
        let forced = Cocommutator::with_forced_c(
            [g(Param::A1), g(Param::A2), g(Param::A3)],
            [g(Param::B1), g(Param::B2), g(Param::B3)],
        );
        if &forced != delta {
            return Err(Error::NotQuantizable(
                "the M row of the cocommutator is not (0, b1, -a1)".into(),
            ));
        }
        Ok(Self::new(
            [g(Param::A1), g(Param::A2), g(Param::A3)],
            [g(Param::B1), g(Param::B2), g(Param::B3)],
        ))
    }

    /// Symbolic `a1..b3` restricted to the given free parameters; others are zero.
    pub fn symbolic(free: &[Param]) -> Self {
        let k = CLASSICAL_ORDER;
        let p = |x: Param| {
            if free.contains(&x) {
                ParamPoly::var(x, k)
            } else {
                ParamPoly::zero(k)
            }
        };
        Self::new(
            [p(Param::A1), p(Param::A2), p(Param::A3)],
            [p(Param::B1), p(Param::B2), p(Param::B3)],
        )
    }

    pub fn zero() -> Self {
        Self::symbolic(&[])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Replaces a generator bracket, e.g. to perturb it in tests.
    pub fn with_bracket(mut self, u: Coord, v: Coord, value: CoordPoly) -> Self {
        if let Some((key, flipped)) = pair_index(u, v) {
            self.brackets
                .insert(key, if flipped { -&value } else { value });
        }
        self
    }

    /// `{u, v}` on coordinate variables, including the primed copy.
    pub fn generator_bracket(&self, u: Coord, v: Coord) -> CoordPoly {
        let Some((key, flipped)) = pair_index(u, v) else {
            return CoordPoly::zero(self.order);
        };
        let mut out = self.brackets[&key].clone();
        if u.is_primed() {
            let map: BTreeMap<Coord, CoordPoly> = Coord::GROUP
                .iter()
                .map(|&c| (c, CoordPoly::var(c.toggled(), self.order)))
                .collect();
            out = out.compose(&map);
        }
        if flipped {
            -&out
        } else {
            out
        }
    }

    /// `{f, g} = sum_{u,v} df/du dg/dv {u, v}`.
    pub fn bracket(&self, f: &CoordPoly, g: &CoordPoly) -> CoordPoly {
        let mut out = CoordPoly::zero(self.order);
        let fv: Vec<Coord> = f.coords().collect();
        let gv: Vec<Coord> = g.coords().collect();
        for &u in &fv {
            let du = f.derivative(u);
            for &v in &gv {
                let uv = self.generator_bracket(u, v);
                if uv.is_zero() {
                    continue;
                }
                out = &out + &(&(&du * &g.derivative(v)) * &uv);
            }
        }
        out
    }

    /// Coefficient matrix of the degree-1 part: `lin[i][j][k]` is the coefficient
    /// of coordinate `i` in `{x_j, x_k}`.
    pub fn linear_part(&self) -> [[[ParamPoly; 3]; 3]; 3] {
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                std::array::from_fn(|k| {
                    let b = self
                        .generator_bracket(Coord::GROUP[j], Coord::GROUP[k])
                        .homogeneous_part(1);
                    b.coefficient(&super::poly::CoordMonomial::var(Coord::GROUP[i]))
                })
            })
        })
    }
}

/// A labelled polynomial that must vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonResidual {
    pub label: String,
    pub value: CoordPoly,
}

impl PoissonResidual {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

pub fn all_zero(rs: &[PoissonResidual]) -> bool {
    rs.iter().all(PoissonResidual::is_zero)
}

/// `{a-, {a+, m}} + {a+, {m, a-}} + {m, {a-, a+}}`.
pub fn jacobi_check(ps: &PoissonStructure) -> Vec<PoissonResidual> {
    let k = ps.order();
    let [f, g, h] = Coord::GROUP.map(|c| CoordPoly::var(c, k));
    let cyc = &(&ps.bracket(&f, &ps.bracket(&g, &h)) + &ps.bracket(&g, &ps.bracket(&h, &f)))
        + &ps.bracket(&h, &ps.bracket(&f, &g));
    vec![PoissonResidual {
        label: "{a-,{a+,m}} + cyclic".into(),
        value: cyc,
    }]
}

/// `D{u, v} - {Du, Dv}` for each coordinate pair, with `D` the group-law pullback.
pub fn poisson_homomorphism_check(ps: &PoissonStructure) -> Vec<PoissonResidual> {
    let k = ps.order();
    let mut out = Vec::new();
    for (j, &u) in Coord::GROUP.iter().enumerate() {
        for &v in &Coord::GROUP[j + 1..] {
            let (fu, fv) = (CoordPoly::var(u, k), CoordPoly::var(v, k));
            let lhs = group_pullback(&ps.bracket(&fu, &fv));
            let rhs = ps.bracket(&group_pullback(&fu), &group_pullback(&fv));
            out.push(PoissonResidual {
                label: format!("D{{{u},{v}}} - {{D{u},D{v}}}"),
                value: &lhs - &rhs,
            });
        }
    }
    out
}

/// Differences between the linear part of the bracket and the dual bracket of `delta`,
/// as `(label, difference)` for each nonzero entry.
pub fn linear_part_check(ps: &PoissonStructure, delta: &Cocommutator) -> Vec<(String, ParamPoly)> {
    let lin = ps.linear_part();
    let mut out = Vec::new();
    for j in 0..3 {
        for k in 0..3 {
            let dual = dual_bracket(delta, j, k);
            for i in 0..3 {
                let diff = &lin[i][j][k] - &dual[i].with_order(ps.order());
                if !diff.is_zero() {
                    let (u, v, w) = (Coord::GROUP[j], Coord::GROUP[k], Coord::GROUP[i]);
                    out.push((format!("{w} in {{{u},{v}}}"), diff));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::cojacobi_residuals;

    const K: u32 = CLASSICAL_ORDER;

    fn v(c: Coord) -> CoordPoly {
        CoordPoly::var(c, K)
    }

    fn concrete(a: [i64; 3], b: [i64; 3]) -> PoissonStructure {
        PoissonStructure::new(
            a.map(|x| ParamPoly::int(x, K)),
            b.map(|x| ParamPoly::int(x, K)),
        )
    }

    #[test]
    fn generator_brackets() {
        let ps = PoissonStructure::symbolic(&[
            Param::A1,
            Param::A2,
            Param::A3,
            Param::B1,
            Param::B2,
            Param::B3,
        ]);
        assert_eq!(
            ps.bracket(&v(Coord::AMinus), &v(Coord::APlus)).to_string(),
            "a1*a- + b1*a+"
        );
        assert_eq!(
            ps.bracket(&v(Coord::APlus), &v(Coord::AMinus)).to_string(),
            "-a1*a- - b1*a+"
        );
        let ip = concrete([1, 0, 1], [0, 0, 0]);
        assert_eq!(
            ip.bracket(&v(Coord::APlus), &v(Coord::M)).to_string(),
            "a- - m"
        );
        assert!(ps.bracket(&v(Coord::M), &v(Coord::AMinusP)).is_zero());
    }

    #[test]
    fn antisymmetry_and_leibniz() {
        let ps = PoissonStructure::symbolic(&[Param::A1, Param::A3, Param::B3]);
        let f = &(&v(Coord::AMinus) * &v(Coord::M)) + &v(Coord::APlus);
        let g = &v(Coord::M) * &v(Coord::APlus);
        let h = &v(Coord::AMinus) * &v(Coord::AMinus);
        assert!(ps.bracket(&f, &f).is_zero());
        assert_eq!(ps.bracket(&f, &g), -&ps.bracket(&g, &f));
        let leibniz = &ps.bracket(&f, &(&g * &h))
            - &(&(&ps.bracket(&f, &g) * &h) + &(&g * &ps.bracket(&f, &h)));
        assert!(leibniz.is_zero());
    }

    #[test]
    fn jacobi_tracks_cojacobi() {
        assert!(all_zero(&jacobi_check(&PoissonStructure::symbolic(&[
            Param::A2,
            Param::A3,
            Param::B2,
            Param::B3
        ]))));
        assert!(all_zero(&jacobi_check(&PoissonStructure::zero())));
        let bad = concrete([1, 0, 1], [1, 0, 2]);
        assert!(!all_zero(&jacobi_check(&bad)));
        let delta = Cocommutator::with_forced_c(
            [1, 0, 1].map(|x| ParamPoly::int(x, K)),
            [1, 0, 2].map(|x| ParamPoly::int(x, K)),
        );
        assert!(cojacobi_residuals(&delta).iter().any(|r| !r.is_zero()));
    }

    #[test]
    fn homomorphism_and_perturbation() {
        let ip = PoissonStructure::symbolic(&[Param::A1, Param::A3]);
        assert!(all_zero(&poisson_homomorphism_check(&ip)));
        assert!(all_zero(&poisson_homomorphism_check(
            &PoissonStructure::zero()
        )));
        let perturbed = concrete([1, 0, 1], [0, 0, 0]).with_bracket(
            Coord::AMinus,
            Coord::APlus,
            &v(Coord::AMinus) + &(&v(Coord::APlus) * &v(Coord::APlus)),
        );
        let res = poisson_homomorphism_check(&perturbed);
        assert!(!all_zero(&res));
        assert_eq!(res[0].value.to_string(), "2*a+*a+'");
    }

    #[test]
    fn linear_part_is_dual_bracket() {
        let all = [
            Param::A1,
            Param::A2,
            Param::A3,
            Param::B1,
            Param::B2,
            Param::B3,
        ];
        let ps = PoissonStructure::symbolic(&all);
        let delta = Cocommutator::symbolic_constrained(K);
        assert!(linear_part_check(&ps, &delta).is_empty());
        assert_eq!(PoissonStructure::from_cocommutator(&delta).unwrap(), ps);
        let off = Cocommutator::symbolic(K);
        assert!(!linear_part_check(&ps, &off).is_empty());
        assert!(PoissonStructure::from_cocommutator(&off).is_err());
    }
}
