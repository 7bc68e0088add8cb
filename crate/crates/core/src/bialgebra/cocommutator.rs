//! The skew cocommutator `delta: g -> g ^ g` and the two identities that make
//! it a Lie bialgebra: the 1-cocycle condition and Jacobi for the dual bracket.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::lie::LieStructure;
use crate::algebra::rational::{self, Rational};
use crate::algebra::{
    tensor_commutator, FreeElement, Gen, Param, ParamPoly, RewriteSystem, TensorElement,
};
use crate::error::{Error, Result};

/// Truncation order for the classical (bialgebra and Poisson) computations.
/// Their identities are at most quadratic in the coefficients.
pub const CLASSICAL_ORDER: u32 = 4;

/// Coefficient symbols in storage order: row `A-` (a), row `A+` (b), row `M` (c).
pub const COEFFICIENTS: [Param; 9] = [
    Param::A1,
    Param::A2,
    Param::A3,
    Param::B1,
    Param::B2,
    Param::B3,
    Param::C1,
    Param::C2,
    Param::C3,
];

/// Wedge basis `A- ^ A+`, `A- ^ M`, `A+ ^ M` as pairs of basis indices.
pub const WEDGE_BASIS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// `delta(A-) = a1 A-^A+ + a2 A-^M + a3 A+^M`, likewise `b` for `A+` and `c` for `M`,
/// with `X ^ Y = Y (x) X - X (x) Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocommutator {
    coeffs: [ParamPoly; 9],
}

impl Cocommutator {
    pub fn new(coeffs: [ParamPoly; 9]) -> Self {
        let order = coeffs[0].order();
        assert!(
            coeffs.iter().all(|c| c.order() == order),
            "coefficient orders differ"
        );
        Cocommutator { coeffs }
    }

    pub fn zero(order: u32) -> Self {
        Cocommutator::new(std::array::from_fn(|_| ParamPoly::zero(order)))
    }

    /// All nine coefficients as independent symbols.
    pub fn symbolic(order: u32) -> Self {
        Cocommutator::new(COEFFICIENTS.map(|p| ParamPoly::var(p, order)))
    }

    pub fn from_rationals(values: [Rational; 9]) -> Self {
        Cocommutator::new(values.map(|v| ParamPoly::constant(v, CLASSICAL_ORDER)))
    }

    /// Six free coefficients with the cocycle-forced `c1 = 0, c2 = b1, c3 = -a1`.
    pub fn with_forced_c(a: [ParamPoly; 3], b: [ParamPoly; 3]) -> Self {
        let order = a[0].order();
        let c = [ParamPoly::zero(order), b[0].clone(), -&a[0]];
        let [a1, a2, a3] = a;
        let [b1, b2, b3] = b;
        let [c1, c2, c3] = c;
        Cocommutator::new([a1, a2, a3, b1, b2, b3, c1, c2, c3])
    }

    /// `a1..b3` symbolic with the cocycle constraints imposed.
    pub fn symbolic_constrained(order: u32) -> Self {
        let v = |p| ParamPoly::var(p, order);
        Self::with_forced_c(
            [v(Param::A1), v(Param::A2), v(Param::A3)],
            [v(Param::B1), v(Param::B2), v(Param::B3)],
        )
    }

    pub fn order(&self) -> u32 {
        self.coeffs[0].order()
    }

    pub fn coefficients(&self) -> &[ParamPoly; 9] {
        &self.coeffs
    }

    pub fn get(&self, p: Param) -> &ParamPoly {
        let i = COEFFICIENTS
            .iter()
            .position(|&q| q == p)
            .unwrap_or_else(|| panic!("{p} is not a cocommutator coefficient"));
        &self.coeffs[i]
    }

    /// Coefficient of row `row` (basis index) on wedge `WEDGE_BASIS[w]`.
    pub fn entry(&self, row: usize, w: usize) -> &ParamPoly {
        &self.coeffs[3 * row + w]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ParamPoly::is_zero)
    }

    pub fn as_rationals(&self) -> Option<[Rational; 9]> {
        let v: Vec<Rational> = self
            .coeffs
            .iter()
            .map(|c| c.as_constant())
            .collect::<Option<_>>()?;
        v.try_into().ok()
    }

    pub fn substitute(&self, map: &BTreeMap<Param, ParamPoly>) -> Self {
        Cocommutator::new(self.coeffs.clone().map(|c| c.substitute(map)))
    }

    pub fn map(&self, f: impl Fn(&ParamPoly) -> ParamPoly) -> Self {
        Cocommutator::new(std::array::from_fn(|i| f(&self.coeffs[i])))
    }

    /// Skew matrix `D[j][k]` of `delta(e_row) = sum_{j<k} D[j][k] e_j ^ e_k`.
    pub fn components(&self, row: usize) -> [[ParamPoly; 3]; 3] {
        let order = self.order();
        let mut d: [[ParamPoly; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| ParamPoly::zero(order)));
        for (w, &(j, k)) in WEDGE_BASIS.iter().enumerate() {
            let c = self.entry(row, w);
            d[j][k] += c;
            d[k][j] -= c;
        }
        d
    }

    pub fn from_components(components: &[[[ParamPoly; 3]; 3]; 3]) -> Result<Self> {
        for d in components {
            for j in 0..3 {
                for k in 0..3 {
                    if d[j][k] != -&d[k][j] {
                        return Err(Error::NotSkew);
                    }
                }
            }
        }
        Ok(Cocommutator::new(std::array::from_fn(|i| {
            let (row, w) = (i / 3, i % 3);
            let (j, k) = WEDGE_BASIS[w];
            components[row][j][k].clone()
        })))
    }

    /// `delta(g)` as a rank-2 tensor of single letters.
    pub fn delta_tensor(&self, g: Gen) -> TensorElement {
        let row = g.basis_index();
        let mut t = TensorElement::zero(2, self.order());
        for (w, &(j, k)) in WEDGE_BASIS.iter().enumerate() {
            let c = self.entry(row, w);
            if !c.is_zero() {
                t += &TensorElement::wedge(
                    Gen::from_basis_index(j),
                    Gen::from_basis_index(k),
                    c.clone(),
                );
            }
        }
        t
    }

    /// Reads back a cocommutator from `delta(A-)`, `delta(A+)`, `delta(M)` tensors.
    pub fn from_tensors(images: &BTreeMap<Gen, TensorElement>) -> Result<Self> {
        let order = images
            .values()
            .next()
            .map(TensorElement::order)
            .unwrap_or(CLASSICAL_ORDER);
        let mut comps: [[[ParamPoly; 3]; 3]; 3] = std::array::from_fn(|_| {
            std::array::from_fn(|_| std::array::from_fn(|_| ParamPoly::zero(order)))
        });
        for (g, t) in images {
            if t.rank() != 2 {
                return Err(Error::WrongRank {
                    expected: 2,
                    found: t.rank(),
                });
            }
            for (ws, c) in t.terms() {
                if ws.iter().any(|w| w.len() != 1) {
                    return Err(Error::NotSkew);
                }
                let j = ws[0].letters()[0].basis_index();
                let k = ws[1].letters()[0].basis_index();
                // the term e_j (x) e_k carries +c in e_k ^ e_j
                comps[g.basis_index()][k][j] += c;
            }
        }
        Self::from_components(&comps)
    }

    /// `delta(g)` as a combination of wedges, e.g. `-xi*(A- ^ M)`.
    pub fn render_image(&self, g: Gen) -> String {
        let names = ["A- ^ A+", "A- ^ M", "A+ ^ M"];
        let row = g.basis_index();
        let terms: Vec<(&ParamPoly, &str)> =
            (0..3).map(|w| (self.entry(row, w), names[w])).collect();
        super::rmatrix::render_combination(&terms)
    }

    pub fn to_json(&self) -> Option<CocommutatorJson> {
        let v = self.as_rationals()?.map(|r| Some(rational::to_string(&r)));
        let [a1, a2, a3, b1, b2, b3, c1, c2, c3] = v;
        Some(CocommutatorJson {
            a1,
            a2,
            a3,
            b1,
            b2,
            b3,
            c1,
            c2,
            c3,
        })
    }
}

impl std::fmt::Display for Cocommutator {
    /// Nonzero coefficients, e.g. `a2 = -1, b3 = -1`; `0` if all vanish.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = COEFFICIENTS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(p, c)| format!("{p} = {c}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(", "))
        }
    }
}

/// Wire form: rationals as strings; omitted `a`/`b` entries are zero and
/// omitted `c` entries take their cocycle-forced values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocommutatorJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a3: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b3: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c3: Option<String>,
}

impl CocommutatorJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_cocommutator(&self) -> Result<Cocommutator> {
        let get = |v: &Option<String>| -> Result<Option<Rational>> {
            v.as_deref().map(rational::parse).transpose()
        };
        let zero = || rational::int(0);
        let a1 = get(&self.a1)?.unwrap_or_else(zero);
        let a2 = get(&self.a2)?.unwrap_or_else(zero);
        let a3 = get(&self.a3)?.unwrap_or_else(zero);
        let b1 = get(&self.b1)?.unwrap_or_else(zero);
        let b2 = get(&self.b2)?.unwrap_or_else(zero);
        let b3 = get(&self.b3)?.unwrap_or_else(zero);
        let c1 = get(&self.c1)?.unwrap_or_else(zero);
        let c2 = get(&self.c2)?.unwrap_or_else(|| b1.clone());
        let c3 = get(&self.c3)?.unwrap_or_else(|| -a1.clone());
        Ok(Cocommutator::from_rationals([
            a1, a2, a3, b1, b2, b3, c1, c2, c3,
        ]))
    }
}

/// For each basis pair `(X, Y)`, the tensor
/// `delta([X,Y]) - [delta(X), 1(x)Y + Y(x)1] - [1(x)X + X(x)1, delta(Y)]`,
/// computed in the enveloping algebra of `g`.
///
/// The residual is linear in the nine coefficients, so it is assembled from the
/// residuals of the unit cocommutators, which are cached for the
/// Heisenberg-Weyl algebra.
pub fn cocycle_residuals(
    delta: &Cocommutator,
    g: &LieStructure,
) -> Result<Vec<(String, TensorElement)>> {
    static HEISENBERG_WEYL: OnceLock<Vec<(String, Vec<TensorElement>)>> = OnceLock::new();
    let computed;
    let units = if *g == LieStructure::heisenberg_weyl() {
        match HEISENBERG_WEYL.get() {
            Some(u) => u,
            None => {
                let u = unit_cocycle_residuals(g)?;
                HEISENBERG_WEYL.get_or_init(|| u)
            }
        }
    } else {
        computed = unit_cocycle_residuals(g)?;
        &computed
    };
    let order = delta.order();
    Ok(units
        .iter()
        .map(|(label, per_unit)| {
            let mut residual = TensorElement::zero(2, order);
            for (unit, c) in per_unit.iter().zip(delta.coefficients()) {
                if !c.is_zero() && !unit.is_zero() {
                    residual.add_scaled(&unit.truncate(order), c);
                }
            }
            (label.clone(), residual)
        })
        .collect())
}

/// Residuals of the nine unit cocommutators, at order 0, grouped by basis pair.
fn unit_cocycle_residuals(g: &LieStructure) -> Result<Vec<(String, Vec<TensorElement>)>> {
    let mut out: Vec<(String, Vec<TensorElement>)> = Vec::new();
    for i in 0..9 {
        let mut coeffs: [ParamPoly; 9] = std::array::from_fn(|_| ParamPoly::zero(0));
        coeffs[i] = ParamPoly::one(0);
        for (n, (label, t)) in direct_cocycle_residuals(&Cocommutator::new(coeffs), g)?
            .into_iter()
            .enumerate()
        {
            if i == 0 {
                out.push((label, Vec::new()));
            }
            out[n].1.push(t);
        }
    }
    Ok(out)
}

fn direct_cocycle_residuals(
    delta: &Cocommutator,
    g: &LieStructure,
) -> Result<Vec<(String, TensorElement)>> {
    let order = delta.order();
    let rs = RewriteSystem::from_lie(g, order)?;
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i + 1..3 {
            let (x, y) = (Gen::from_basis_index(i), Gen::from_basis_index(j));
            let mut lhs = TensorElement::zero(2, order);
            for (k, c) in g.bracket(i, j).iter().enumerate() {
                lhs.add_scaled(
                    &delta.delta_tensor(Gen::from_basis_index(k)),
                    &ParamPoly::constant(c.clone(), order),
                );
            }
            let px = TensorElement::primitive(&FreeElement::gen(x, order), 2);
            let py = TensorElement::primitive(&FreeElement::gen(y, order), 2);
            let r1 = tensor_commutator(&delta.delta_tensor(x), &py, &rs)?;
            let r2 = tensor_commutator(&px, &delta.delta_tensor(y), &rs)?;
            let residual = &(&lhs - &r1) - &r2;
            out.push((format!("({x},{y})"), residual));
        }
    }
    Ok(out)
}

/// Distinct scalar conditions (normalized, in order of appearance) that make
/// every cocycle residual vanish.
pub fn residual_conditions<'a>(
    tensors: impl IntoIterator<Item = &'a TensorElement>,
) -> Vec<ParamPoly> {
    let mut out: Vec<ParamPoly> = Vec::new();
    for t in tensors {
        for (_, c) in t.terms() {
            let n = c.normalized();
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    out
}

/// Dual bracket `[x^j, x^k]* = sum_i D_i^{jk} x^i` on `g*`, as coordinates on
/// the dual basis `(a-, a+, m)`.
pub fn dual_bracket(delta: &Cocommutator, j: usize, k: usize) -> [ParamPoly; 3] {
    std::array::from_fn(|i| delta.components(i)[j][k].clone())
}

fn dual_bracket_vectors(
    delta: &Cocommutator,
    x: &[ParamPoly; 3],
    y: &[ParamPoly; 3],
) -> [ParamPoly; 3] {
    let order = delta.order();
    let comps: [[[ParamPoly; 3]; 3]; 3] = std::array::from_fn(|i| delta.components(i));
    std::array::from_fn(|i| {
        let mut acc = ParamPoly::zero(order);
        for j in 0..3 {
            for k in 0..3 {
                let c = &comps[i][j][k];
                if c.is_zero() {
                    continue;
                }
                acc += &(&(&x[j] * &y[k]) * c);
            }
        }
        acc
    })
}

/// Jacobiator of the dual bracket on `(a+, a-, m)`, as coordinates on
/// `(a-, a+, m)`. With the cocycle constraints imposed the first two entries are
/// `a1(b3 - a2) - 2 b1 a3` and `b1(a2 - b3) - 2 a1 b2`; the third vanishes.
pub fn cojacobi_residuals(delta: &Cocommutator) -> [ParamPoly; 3] {
    let order = delta.order();
    let e = |i: usize| -> [ParamPoly; 3] {
        std::array::from_fn(|k| {
            if k == i {
                ParamPoly::one(order)
            } else {
                ParamPoly::zero(order)
            }
        })
    };
    let br = |x: &[ParamPoly; 3], y: &[ParamPoly; 3]| dual_bracket_vectors(delta, x, y);
    let (u, v, w) = (e(1), e(0), e(2));
    let t1 = br(&br(&u, &v), &w);
    let t2 = br(&br(&v, &w), &u);
    let t3 = br(&br(&w, &u), &v);
    std::array::from_fn(|i| &(&t1[i] + &t2[i]) + &t3[i])
}

/// `true` when every cocycle residual and every co-Jacobi residual is zero.
pub fn is_bialgebra(delta: &Cocommutator, g: &LieStructure) -> Result<bool> {
    let cocycle_ok = cocycle_residuals(delta, g)?
        .iter()
        .all(|(_, t)| t.is_zero());
    Ok(cocycle_ok && cojacobi_residuals(delta).iter().all(ParamPoly::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::algebra::Word;

    fn concrete(v: [i64; 9]) -> Cocommutator {
        Cocommutator::from_rationals(v.map(int))
    }

    /// Independent oracle: expand the cocycle identity with structure constants.
    fn oracle_cocycle(delta: &Cocommutator, g: &LieStructure) -> Vec<[[ParamPoly; 3]; 3]> {
        let order = delta.order();
        let zero = || ParamPoly::zero(order);
        let c = |i, j, k| ParamPoly::constant(g.constant(i, j, k).clone(), order);
        // tensor components are the transposed wedge matrices
        let comps: Vec<[[ParamPoly; 3]; 3]> = (0..3)
            .map(|i| {
                let w = delta.components(i);
                std::array::from_fn(|a| std::array::from_fn(|b| w[b][a].clone()))
            })
            .collect();
        // (ad_Y (x) 1 + 1 (x) ad_Y) T
        let ad = |y: usize, t: &[[ParamPoly; 3]; 3]| -> [[ParamPoly; 3]; 3] {
            let mut out: [[ParamPoly; 3]; 3] =
                std::array::from_fn(|_| std::array::from_fn(|_| zero()));
            for a in 0..3 {
                for b in 0..3 {
                    for k in 0..3 {
                        out[k][b] += &(&c(y, a, k) * &t[a][b]);
                        out[a][k] += &(&c(y, b, k) * &t[a][b]);
                    }
                }
            }
            out
        };
        let mut res = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                let mut r: [[ParamPoly; 3]; 3] =
                    std::array::from_fn(|_| std::array::from_fn(|_| zero()));
                for k in 0..3 {
                    for a in 0..3 {
                        for b in 0..3 {
                            r[a][b] += &(&c(i, j, k) * &comps[k][a][b]);
                        }
                    }
                }
                // [delta(X), Y(x)1 + 1(x)Y] = -ad_Y delta(X); [X(x)1 + 1(x)X, delta(Y)] = ad_X delta(Y)
                let t1 = ad(j, &comps[i]);
                let t2 = ad(i, &comps[j]);
                for a in 0..3 {
                    for b in 0..3 {
                        r[a][b] += &t1[a][b];
                        r[a][b] -= &t2[a][b];
                    }
                }
                res.push(r);
            }
        }
        res
    }

    #[test]
    fn symbolic_cocycle_constraints() {
        let g = LieStructure::heisenberg_weyl();
        let res = cocycle_residuals(&Cocommutator::symbolic(CLASSICAL_ORDER), &g).unwrap();
        let conds = residual_conditions(res.iter().map(|(_, t)| t));
        let k = CLASSICAL_ORDER;
        let v = |p| ParamPoly::var(p, k);
        let expected = [
            v(Param::C1),
            &v(Param::C2) - &v(Param::B1),
            &v(Param::C3) + &v(Param::A1),
        ];
        assert_eq!(conds.len(), 3);
        for e in expected {
            assert!(conds.contains(&e.normalized()), "missing {e}");
        }
    }

    #[test]
    fn zero_delta_has_zero_residuals() {
        let g = LieStructure::heisenberg_weyl();
        let res = cocycle_residuals(&Cocommutator::zero(CLASSICAL_ORDER), &g).unwrap();
        assert!(res.iter().all(|(_, t)| t.is_zero()));
    }

    #[test]
    fn c1_breaks_cocycle_on_the_bracket_pair() {
        let g = LieStructure::heisenberg_weyl();
        let delta = concrete([0, 0, 0, 0, 0, 0, 1, 0, 0]);
        let res = cocycle_residuals(&delta, &g).unwrap();
        let (label, t) = &res[0];
        assert_eq!(label, "(A-,A+)");
        assert!(!t.is_zero());
    }

    #[test]
    fn cocycle_matches_structure_constant_oracle() {
        let g = LieStructure::heisenberg_weyl();
        let delta = Cocommutator::symbolic(CLASSICAL_ORDER);
        let res = cocycle_residuals(&delta, &g).unwrap();
        let oracle = oracle_cocycle(&delta, &g);
        for ((_, t), o) in res.iter().zip(oracle.iter()) {
            for a in 0..3 {
                for b in 0..3 {
                    let ws = vec![
                        Word::letter(Gen::from_basis_index(a)),
                        Word::letter(Gen::from_basis_index(b)),
                    ];
                    assert_eq!(t.coefficient(&ws), o[a][b]);
                }
            }
        }
    }

    #[test]
    fn cached_residuals_match_direct_expansion() {
        let g = LieStructure::heisenberg_weyl();
        for coeffs in [
            [1, 2, 3, 4, 5, 6, 7, 8, 9],
            [2, 0, 1, 2, -1, 2, 0, 2, -2],
            [0, -1, 0, 0, 0, -1, 0, 0, 0],
        ] {
            let d = concrete(coeffs);
            assert_eq!(
                cocycle_residuals(&d, &g).unwrap(),
                direct_cocycle_residuals(&d, &g).unwrap()
            );
        }
        let d = Cocommutator::symbolic(CLASSICAL_ORDER);
        assert_eq!(
            cocycle_residuals(&d, &g).unwrap(),
            direct_cocycle_residuals(&d, &g).unwrap()
        );
    }

    #[test]
    fn cojacobi_examples() {
        let r = cojacobi_residuals(&Cocommutator::with_forced_c(
            [int(1), int(0), int(0)].map(|v| ParamPoly::constant(v, 4)),
            [int(0), int(0), int(0)].map(|v| ParamPoly::constant(v, 4)),
        ));
        assert!(r.iter().all(ParamPoly::is_zero));

        let delta = CocommutatorJson::parse(r#"{"a1":"1","a3":"1","b1":"1","b3":"2"}"#)
            .unwrap()
            .to_cocommutator()
            .unwrap();
        let r = cojacobi_residuals(&delta);
        assert_eq!(r[0].as_constant().unwrap(), int(0));
        assert_eq!(r[1].as_constant().unwrap(), int(-2));

        let r = cojacobi_residuals(&Cocommutator::zero(4));
        assert!(r.iter().all(ParamPoly::is_zero));
    }

    #[test]
    fn cojacobi_symbolic_polynomials() {
        let k = CLASSICAL_ORDER;
        let v = |p| ParamPoly::var(p, k);
        let r = cojacobi_residuals(&Cocommutator::symbolic_constrained(k));
        let two = ParamPoly::int(2, k);
        let p1 = &(&v(Param::A1) * &(&v(Param::B3) - &v(Param::A2)))
            - &(&(&two * &v(Param::B1)) * &v(Param::A3));
        let p2 = &(&v(Param::B1) * &(&v(Param::A2) - &v(Param::B3)))
            - &(&(&two * &v(Param::A1)) * &v(Param::B2));
        assert_eq!(r[0], p1);
        assert_eq!(r[1], p2);
        assert!(r[2].is_zero());
    }

    #[test]
    fn json_defaults_and_strictness() {
        let d = CocommutatorJson::parse(r#"{"a1":"1/2","b1":"3"}"#)
            .unwrap()
            .to_cocommutator()
            .unwrap();
        assert_eq!(d.get(Param::C2).as_constant().unwrap(), int(3));
        assert_eq!(
            d.get(Param::C3).as_constant().unwrap(),
            rational::frac(-1, 2)
        );
        assert!(CocommutatorJson::parse(r#"{"a4":"1"}"#).is_err());
        assert!(CocommutatorJson::parse(r#"{"a1":"x"}"#)
            .unwrap()
            .to_cocommutator()
            .is_err());
        let back = d.to_json().unwrap();
        assert_eq!(back.to_cocommutator().unwrap(), d);
    }

    #[test]
    fn tensor_round_trip() {
        let d = Cocommutator::symbolic(CLASSICAL_ORDER);
        let images: BTreeMap<Gen, TensorElement> =
            Gen::ALL.iter().map(|&g| (g, d.delta_tensor(g))).collect();
        assert_eq!(Cocommutator::from_tensors(&images).unwrap(), d);
    }
}
