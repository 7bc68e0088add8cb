//! Linear changes of basis on `(A-, A+, M)` and transport of cocommutators.

use std::fmt;

use num_traits::{One, Zero};

use super::cocommutator::Cocommutator;
use super::lie::LieStructure;
use crate::algebra::rational::{int, Rational};
use crate::algebra::{FreeElement, Gen, ParamPoly, Word};
use crate::error::{Error, Result};

/// `rows[i][j]` is the coefficient of old basis vector `j` in new basis vector
/// `i`: `e'_i = sum_j rows[i][j] e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisChange {
    rows: [[Rational; 3]; 3],
}

impl BasisChange {
    pub fn new(rows: [[Rational; 3]; 3]) -> Self {
        BasisChange { rows }
    }

    pub fn identity() -> Self {
        BasisChange::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { int(1) } else { int(0) })
        }))
    }

    /// `A-' = A+`, `A+' = A-`, `M' = -M`.
    pub fn swap() -> Self {
        let z = || int(0);
        BasisChange::new([[z(), int(1), z()], [int(1), z(), z()], [z(), z(), int(-1)]])
    }

    /// `A+' = A+ - (b1/a1) A- + (b1 a3 / a1^2 + a2 / a1) M`; needs `a1 != 0`.
    pub fn type_i_plus(a1: &Rational, a2: &Rational, a3: &Rational, b1: &Rational) -> Self {
        let mut bc = Self::identity();
        bc.rows[1][0] = -(b1 / a1);
        bc.rows[1][2] = b1 * a3 / (a1 * a1) + a2 / a1;
        bc
    }

    /// `A-' = A- - (b3/b1) M`; needs `b1 != 0`.
    pub fn type_i_minus(b1: &Rational, b3: &Rational) -> Self {
        let mut bc = Self::identity();
        bc.rows[0][2] = -(b3 / b1);
        bc
    }

    pub fn rows(&self) -> &[[Rational; 3]; 3] {
        &self.rows
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn determinant(&self) -> Rational {
        let r = &self.rows;
        &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1])
            - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0])
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.determinant();
        if det.is_zero() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        let r = &self.rows;
        let cof = |i: usize, j: usize| {
            let (i1, i2) = ((i + 1) % 3, (i + 2) % 3);
            let (j1, j2) = ((j + 1) % 3, (j + 2) % 3);
            &r[i1][j1] * &r[i2][j2] - &r[i1][j2] * &r[i2][j1]
        };
        // inverse[i][j] = cofactor[j][i] / det
        Ok(BasisChange::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| cof(j, i) / &det)
        })))
    }

    pub fn compose(&self, then: &BasisChange) -> BasisChange {
        // e''_i = sum_j then[i][j] e'_j = sum_j then[i][j] sum_k self[j][k] e_k
        BasisChange::new(std::array::from_fn(|i| {
            std::array::from_fn(|k| {
                (0..3).fold(int(0), |acc, j| acc + &then.rows[i][j] * &self.rows[j][k])
            })
        }))
    }

    /// Checks `[e'_i, e'_j] = sum_k c^k_ij e'_k` for every pair; the error names
    /// the first violated bracket.
    pub fn check(&self, g: &LieStructure) -> Result<()> {
        if self.determinant().is_zero() {
            return Err(Error::NotAutomorphism("matrix is singular".into()));
        }
        for i in 0..3 {
            for j in i + 1..3 {
                let lhs = g.bracket_vectors(&self.rows[i], &self.rows[j]);
                let mut rhs: [Rational; 3] = Default::default();
                for (k, c) in g.bracket(i, j).iter().enumerate() {
                    for (m, r) in rhs.iter_mut().enumerate() {
                        *r += c * &self.rows[k][m];
                    }
                }
                if lhs != rhs {
                    let (x, y) = (Gen::from_basis_index(i), Gen::from_basis_index(j));
                    return Err(Error::NotAutomorphism(format!(
                        "[{x}', {y}'] is not preserved"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The new generator `g'` written in the old basis.
    pub fn image(&self, g: Gen, order: u32) -> FreeElement {
        linear_element(&self.rows[g.basis_index()], order)
    }

    /// Transports `delta` to the new basis without checking the brackets.
    pub fn transport(&self, delta: &Cocommutator) -> Result<Cocommutator> {
        let q = self.inverse()?.rows;
        let order = delta.order();
        let comps: Vec<[[ParamPoly; 3]; 3]> = (0..3).map(|i| delta.components(i)).collect();
        let zero = || -> [[ParamPoly; 3]; 3] {
            std::array::from_fn(|_| std::array::from_fn(|_| ParamPoly::zero(order)))
        };
        // T_j^{kl} = sum_ab D_j^{ab} Q_ak Q_bl, then D'_i = sum_j P_ij T_j
        let moved: Vec<[[ParamPoly; 3]; 3]> = comps
            .iter()
            .map(|d| {
                let mut t = zero();
                for (a, qa) in q.iter().enumerate() {
                    for (b, qb) in q.iter().enumerate() {
                        if d[a][b].is_zero() {
                            continue;
                        }
                        for (k, qak) in qa.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                            for (l, qbl) in qb.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                                t[k][l] += &d[a][b].scale(&(qak * qbl));
                            }
                        }
                    }
                }
                t
            })
            .collect();
        let out: [[[ParamPoly; 3]; 3]; 3] = std::array::from_fn(|i| {
            let mut acc = zero();
            for (p, t) in self.rows[i].iter().zip(&moved) {
                if p.is_zero() {
                    continue;
                }
                for k in 0..3 {
                    for l in 0..3 {
                        if !t[k][l].is_zero() {
                            acc[k][l] += &t[k][l].scale(p);
                        }
                    }
                }
            }
            acc
        });
        Cocommutator::from_components(&out)
    }
}

fn linear_element(coords: &[Rational; 3], order: u32) -> FreeElement {
    let mut x = FreeElement::zero(order);
    for (k, c) in coords.iter().enumerate() {
        x.add_term(
            Word::letter(Gen::from_basis_index(k)),
            &ParamPoly::constant(c.clone(), order),
        );
    }
    x
}

impl fmt::Display for BasisChange {
    /// Lists the generators that change, e.g. `A+' = A+ - A-`; `id` if none do.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for g in [Gen::AMinus, Gen::APlus, Gen::M] {
            let i = g.basis_index();
            let unchanged = (0..3).all(|j| {
                if i == j {
                    self.rows[i][j].is_one()
                } else {
                    self.rows[i][j].is_zero()
                }
            });
            if !unchanged {
                parts.push(format!("{g}' = {}", linear_element(&self.rows[i], 0)));
            }
        }
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Transports `delta` along `bc` after checking that `bc` preserves `g`.
pub fn apply_automorphism(
    delta: &Cocommutator,
    bc: &BasisChange,
    g: &LieStructure,
) -> Result<Cocommutator> {
    bc.check(g)?;
    bc.transport(delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::algebra::Param;
    use crate::bialgebra::cocommutator::{cojacobi_residuals, CLASSICAL_ORDER};

    fn hw() -> LieStructure {
        LieStructure::heisenberg_weyl()
    }

    fn rat(v: [i64; 9]) -> Cocommutator {
        Cocommutator::from_rationals(v.map(int))
    }

    #[test]
    fn identity_and_swap_are_automorphisms() {
        assert!(BasisChange::identity().check(&hw()).is_ok());
        assert!(BasisChange::swap().check(&hw()).is_ok());
        let d = Cocommutator::symbolic(CLASSICAL_ORDER);
        assert_eq!(
            apply_automorphism(&d, &BasisChange::identity(), &hw()).unwrap(),
            d
        );
    }

    #[test]
    fn non_automorphism_named() {
        let mut rows = BasisChange::identity().rows().clone();
        rows[2][2] = int(2);
        let err = BasisChange::new(rows).check(&hw()).unwrap_err();
        assert_eq!(
            err.to_string(),
            "basis change is not a Lie algebra automorphism: [A-', A+'] is not preserved"
        );
    }

    #[test]
    fn inverse_round_trip() {
        let bc = BasisChange::type_i_plus(&int(2), &frac(1, 3), &int(-1), &int(5));
        let inv = bc.inverse().unwrap();
        assert!(bc.compose(&inv).is_identity());
        assert!(inv.compose(&bc).is_identity());
    }

    #[test]
    fn spec_style_display() {
        let bc = BasisChange::type_i_plus(&int(1), &int(0), &int(0), &int(1));
        assert_eq!(bc.to_string(), "A+' = A+ - A-");
        assert_eq!(BasisChange::identity().to_string(), "id");
    }

    #[test]
    fn swap_sends_type_i_plus_to_type_i_minus() {
        // normalized I+: delta(A-) = a1 A-^A+ + a3 A+^M, delta(M) = -a1 A+^M
        let (a1, a3) = (int(3), int(-2));
        let mut v: [Rational; 9] = Default::default();
        v[0] = a1.clone();
        v[2] = a3.clone();
        v[8] = -a1.clone();
        let d = Cocommutator::from_rationals(v);
        let t = apply_automorphism(&d, &BasisChange::swap(), &hw()).unwrap();
        let got = t.as_rationals().unwrap();
        let mut want: [Rational; 9] = Default::default();
        want[3] = -a1.clone(); // b1
        want[4] = -a3; // b2
        want[7] = -a1; // c2 = b1
        assert_eq!(got, want);
    }

    #[test]
    fn transport_matches_component_oracle() {
        // Oracle: expand delta(e'_i) in the old basis and re-express with Q.
        let bc = BasisChange::type_i_plus(&int(2), &int(1), &int(3), &int(-1));
        let d = rat([2, 1, 3, -1, 4, 0, 0, -1, -2]);
        let t = bc.transport(&d).unwrap();
        let q = bc.inverse().unwrap();
        for i in 0..3 {
            let mut old = [
                [int(0), int(0), int(0)],
                [int(0), int(0), int(0)],
                [int(0), int(0), int(0)],
            ];
            for j in 0..3 {
                let c = d.components(j);
                for a in 0..3 {
                    for b in 0..3 {
                        old[a][b] += &bc.rows()[i][j] * c[a][b].as_constant().unwrap();
                    }
                }
            }
            // t components re-expanded in the old basis must equal `old`
            let tc = t.components(i);
            for a in 0..3 {
                for b in 0..3 {
                    let mut back = int(0);
                    for k in 0..3 {
                        for l in 0..3 {
                            back += tc[k][l].as_constant().unwrap()
                                * &bc.rows()[k][a]
                                * &bc.rows()[l][b];
                        }
                    }
                    assert_eq!(back, old[a][b]);
                }
            }
        }
        let _ = q;
    }

    #[test]
    fn type_i_plus_normalization_kills_superfluous_parameters() {
        // a1=1, a2=0, a3=1, b1=1: co-Jacobi forces b3 = 2, b2 = -1
        let d = rat([1, 0, 1, 1, -1, 2, 0, 1, -1]);
        assert!(cojacobi_residuals(&d).iter().all(ParamPoly::is_zero));
        let bc = BasisChange::type_i_plus(&int(1), &int(0), &int(1), &int(1));
        let n = apply_automorphism(&d, &bc, &hw()).unwrap();
        for p in [Param::A2, Param::B1, Param::B2, Param::B3] {
            assert!(n.get(p).is_zero(), "{p} survived: {}", n.get(p));
        }
        assert_eq!(n.get(Param::A1).as_constant().unwrap(), int(1));
    }

    #[test]
    fn automorphism_preserves_residual_verdicts() {
        let bad = rat([1, 0, 1, 1, 0, 2, 0, 1, -1]);
        let t = apply_automorphism(&bad, &BasisChange::swap(), &hw()).unwrap();
        assert!(!cojacobi_residuals(&t).iter().all(ParamPoly::is_zero));
    }
}
