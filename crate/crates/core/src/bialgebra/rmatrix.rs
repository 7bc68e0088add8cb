//! Classical r-matrices `r = xi A+^A- + beta+ A+^M + beta- A-^M`, their Schouten
//! bracket, the modified classical Yang-Baxter check, and the induced coboundary.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::cocommutator::{Cocommutator, CLASSICAL_ORDER};
use super::lie::LieStructure;
use crate::algebra::rational::{self, int, Rational};
use crate::algebra::{
    tensor_commutator, FreeElement, Gen, Param, ParamPoly, RewriteSystem, TensorElement, Word,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    pub xi: ParamPoly,
    pub beta_plus: ParamPoly,
    pub beta_minus: ParamPoly,
}

impl RMatrix {
    pub fn new(xi: ParamPoly, beta_plus: ParamPoly, beta_minus: ParamPoly) -> Self {
        RMatrix {
            xi,
            beta_plus,
            beta_minus,
        }
    }

    pub fn from_rationals(xi: Rational, beta_plus: Rational, beta_minus: Rational) -> Self {
        let c = |v| ParamPoly::constant(v, CLASSICAL_ORDER);
        RMatrix::new(c(xi), c(beta_plus), c(beta_minus))
    }

    /// `xi`, `beta+`, `beta-` as independent symbols.
    pub fn symbolic(order: u32) -> Self {
        RMatrix::new(
            ParamPoly::var(Param::Xi, order),
            ParamPoly::var(Param::BetaPlus, order),
            ParamPoly::var(Param::BetaMinus, order),
        )
    }

    pub fn zero(order: u32) -> Self {
        RMatrix::new(
            ParamPoly::zero(order),
            ParamPoly::zero(order),
            ParamPoly::zero(order),
        )
    }

    pub fn order(&self) -> u32 {
        self.xi.order()
    }

    pub fn as_rationals(&self) -> Option<[Rational; 3]> {
        Some([
            self.xi.as_constant()?,
            self.beta_plus.as_constant()?,
            self.beta_minus.as_constant()?,
        ])
    }

    pub fn tensor(&self) -> TensorElement {
        let mut t = TensorElement::wedge(Gen::APlus, Gen::AMinus, self.xi.clone());
        t += &TensorElement::wedge(Gen::APlus, Gen::M, self.beta_plus.clone());
        t += &TensorElement::wedge(Gen::AMinus, Gen::M, self.beta_minus.clone());
        t
    }
}

impl std::fmt::Display for RMatrix {
    /// `xi*(A+ ^ A-) + beta_plus*(A+ ^ M) + beta_minus*(A- ^ M)` with zero terms dropped.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_combination(&[
            (&self.xi, "A+ ^ A-"),
            (&self.beta_plus, "A+ ^ M"),
            (&self.beta_minus, "A- ^ M"),
        ]))
    }
}

/// `c1*(body1) + c2*(body2) ...` with zero terms dropped; `0` if none remain.
pub(crate) fn render_combination(terms: &[(&ParamPoly, &str)]) -> String {
    let parts: Vec<String> = terms
        .iter()
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, w)| scaled(c, w))
        .collect();
    let Some(first) = parts.first() else {
        return "0".into();
    };
    let mut out = first.clone();
    for p in &parts[1..] {
        match p.strip_prefix('-') {
            Some(rest) => out.push_str(&format!(" - {rest}")),
            None => out.push_str(&format!(" + {p}")),
        }
    }
    out
}

/// `c*(body)`, with unit coefficients written as `(body)` or `-(body)`.
fn scaled(c: &ParamPoly, body: &str) -> String {
    let one = ParamPoly::one(c.order());
    if *c == one {
        format!("({body})")
    } else if *c == -&one {
        format!("-({body})")
    } else if c.len() == 1 {
        format!("{c}*({body})")
    } else {
        format!("({c})*({body})")
    }
}

/// An alternating rank-3 tensor as a multiple of `M ^ A+ ^ A-`, e.g. `-(M ^ A+ ^ A-)`.
pub fn render_trivector(omega: &TensorElement) -> Result<String> {
    let c = alternating_coefficient(omega)?;
    if c.is_zero() {
        return Ok("0".into());
    }
    Ok(scaled(&c, "M ^ A+ ^ A-"))
}

/// Wire form of an r-matrix; omitted entries are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_plus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_minus: Option<String>,
}

impl RMatrixJson {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_rmatrix(&self) -> Result<RMatrix> {
        let get = |v: &Option<String>| -> Result<Rational> {
            Ok(v.as_deref()
                .map(rational::parse)
                .transpose()?
                .unwrap_or_else(|| int(0)))
        };
        Ok(RMatrix::from_rationals(
            get(&self.xi)?,
            get(&self.beta_plus)?,
            get(&self.beta_minus)?,
        ))
    }

    pub fn from_rmatrix(r: &RMatrix) -> Option<Self> {
        let [xi, bp, bm] = r.as_rationals()?.map(|v| Some(rational::to_string(&v)));
        Some(RMatrixJson {
            xi,
            beta_plus: bp,
            beta_minus: bm,
        })
    }
}

/// The rank-2 tensor `r` placed in slots `(i, j)` of a rank-3 tensor.
fn leg(r: &TensorElement, i: usize, j: usize) -> TensorElement {
    let mut out = TensorElement::zero(3, r.order());
    for (ws, c) in r.terms() {
        let mut slots = vec![Word::empty(); 3];
        slots[i] = ws[0].clone();
        slots[j] = ws[1].clone();
        out.add_term(slots, c);
    }
    out
}

/// `X ^ Y ^ Z` as the signed sum over all six orderings.
pub fn wedge3(x: Gen, y: Gen, z: Gen, c: &ParamPoly) -> TensorElement {
    let g = [x, y, z];
    let mut t = TensorElement::zero(3, c.order());
    for (perm, sign) in [
        ([0, 1, 2], 1),
        ([1, 2, 0], 1),
        ([2, 0, 1], 1),
        ([1, 0, 2], -1),
        ([0, 2, 1], -1),
        ([2, 1, 0], -1),
    ] {
        let words = perm.iter().map(|&i| Word::letter(g[i])).collect();
        let coeff = if sign > 0 { c.clone() } else { -c };
        t.add_term(words, &coeff);
    }
    t
}

/// Coefficient of `M ^ A+ ^ A-` in an alternating rank-3 tensor.
pub fn alternating_coefficient(omega: &TensorElement) -> Result<ParamPoly> {
    if !is_alternating(omega) {
        return Err(Error::NotAlternating);
    }
    Ok(omega.coefficient(&[
        Word::letter(Gen::M),
        Word::letter(Gen::APlus),
        Word::letter(Gen::AMinus),
    ]))
}

pub fn is_alternating(omega: &TensorElement) -> bool {
    if omega.rank() != 3 || omega.terms().any(|(ws, _)| ws.iter().any(|w| w.len() != 1)) {
        return false;
    }
    [[1, 0, 2], [0, 2, 1]]
        .iter()
        .all(|p| omega.permute(p) == -omega)
}

/// `[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]`, computed in the
/// enveloping algebra of `g`.
pub fn schouten_in(r: &RMatrix, g: &LieStructure) -> Result<TensorElement> {
    let rs = RewriteSystem::from_lie(g, r.order())?;
    let t = r.tensor();
    let (r12, r13, r23) = (leg(&t, 0, 1), leg(&t, 0, 2), leg(&t, 1, 2));
    let mut out = tensor_commutator(&r12, &r13, &rs)?;
    out += &tensor_commutator(&r12, &r23, &rs)?;
    out += &tensor_commutator(&r13, &r23, &rs)?;
    Ok(out)
}

pub fn schouten(r: &RMatrix) -> TensorElement {
    schouten_in(r, &LieStructure::heisenberg_weyl()).expect("Lie relations terminate")
}

/// `true` iff `[X(x)1(x)1 + 1(x)X(x)1 + 1(x)1(x)X, omega] = 0` for every basis `X`.
pub fn mcybe_check(omega: &TensorElement, g: &LieStructure) -> Result<bool> {
    if !is_alternating(omega) {
        return Err(Error::NotAlternating);
    }
    let rs = RewriteSystem::from_lie(g, omega.order())?;
    for x in Gen::ALL {
        let p = TensorElement::primitive(&FreeElement::gen(x, omega.order()), 3);
        if !tensor_commutator(&p, omega, &rs)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `delta(X) = [1(x)X + X(x)1, r]`.
pub fn coboundary_delta(r: &RMatrix, g: &LieStructure) -> Result<Cocommutator> {
    let order = r.order();
    let rs = RewriteSystem::from_lie(g, order)?;
    let t = r.tensor();
    let mut images = BTreeMap::new();
    for x in Gen::ALL {
        let p = TensorElement::primitive(&FreeElement::gen(x, order), 2);
        images.insert(x, tensor_commutator(&p, &t, &rs)?);
    }
    Cocommutator::from_tensors(&images)
}

/// An r-matrix for a coboundary together with the directions `(xi, beta+, beta-)`
/// along which it can be moved without changing the cocommutator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundarySolution {
    pub r: RMatrix,
    pub gauge: Vec<[Rational; 3]>,
}

/// Solves `coboundary_delta(r) = delta` for `r`, with the free directions set to
/// zero. `None` if `delta` is not a coboundary.
pub fn find_rmatrix(delta: &Cocommutator) -> Result<Option<CoboundarySolution>> {
    let target = delta
        .as_rationals()
        .ok_or_else(|| Error::NotConcrete("cocommutator coefficients".into()))?;
    let columns = unit_coboundaries()?;
    let a: Vec<Vec<Rational>> = (0..9)
        .map(|i| (0..3).map(|k| columns[k][i].clone()).collect())
        .collect();
    let Some((x, null)) = solve(a, target.to_vec()) else {
        return Ok(None);
    };
    let [xi, bp, bm]: [Rational; 3] = x.try_into().expect("three unknowns");
    let gauge = null
        .into_iter()
        .map(|v| v.try_into().expect("three unknowns"))
        .collect();
    Ok(Some(CoboundarySolution {
        r: RMatrix::from_rationals(xi, bp, bm),
        gauge,
    }))
}

/// Column `k` is the cocommutator of the `k`-th unit r-matrix.
fn unit_coboundaries() -> Result<&'static [[Rational; 9]; 3]> {
    static COLUMNS: OnceLock<[[Rational; 9]; 3]> = OnceLock::new();
    if let Some(c) = COLUMNS.get() {
        return Ok(c);
    }
    let g = LieStructure::heisenberg_weyl();
    let mut columns: [[Rational; 9]; 3] = Default::default();
    for (k, col) in columns.iter_mut().enumerate() {
        let mut v = [int(0), int(0), int(0)];
        v[k] = int(1);
        let [a, b, c] = v;
        let d = coboundary_delta(&RMatrix::from_rationals(a, b, c), &g)?;
        *col = d.as_rationals().expect("rational r gives rational delta");
    }
    Ok(COLUMNS.get_or_init(|| columns))
}

/// Exact Gaussian elimination for `A x = b`. Returns the solution with free
/// variables at zero and a basis of the nullspace, or `None` if inconsistent.
fn solve(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::from_integer(1.into()) / &a[r][c];
        for j in 0..cols {
            a[r][j] = &a[r][j] * &inv;
        }
        b[r] = &b[r] * &inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
                let d = &f * &b[r];
                b[i] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![int(0); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = b[i].clone();
    }
    let null = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![int(0); cols];
            v[f] = int(1);
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -a[i][f].clone();
            }
            v
        })
        .collect();
    Some((x, null))
}
