use num_traits::Zero;

use crate::algebra::rational::{int, Rational};
use crate::algebra::Gen;

/// A 3-dimensional Lie algebra on the basis `(A-, A+, M)`, given by structure
/// constants `constants[i][j][k] = c^k_{ij}` with `[e_i, e_j] = sum_k c^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieStructure {
    constants: [[[Rational; 3]; 3]; 3],
}

impl LieStructure {
    pub fn from_constants(constants: [[[Rational; 3]; 3]; 3]) -> Self {
        LieStructure { constants }
    }

    /// `[A-, A+] = M`, everything else zero.
    pub fn heisenberg_weyl() -> Self {
        let mut c: [[[Rational; 3]; 3]; 3] = Default::default();
        let (am, ap, m) = (
            Gen::AMinus.basis_index(),
            Gen::APlus.basis_index(),
            Gen::M.basis_index(),
        );
        c[am][ap][m] = int(1);
        c[ap][am][m] = int(-1);
        LieStructure { constants: c }
    }

    pub fn dim(&self) -> usize {
        3
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[i][j][k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> [Rational; 3] {
        self.constants[i][j].clone()
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rational; 3], y: &[Rational; 3]) -> [Rational; 3] {
        let mut out: [Rational; 3] = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                let xy = &x[i] * &y[j];
                if xy.is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &xy * &self.constants[i][j][k];
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..3).all(|i| {
            (0..3).all(|j| (0..3).all(|k| self.constants[i][j][k] == -&self.constants[j][i][k]))
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        let basis = |i: usize| {
            let mut v: [Rational; 3] = Default::default();
            v[i] = int(1);
            v
        };
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (x, y, z) = (basis(i), basis(j), basis(k));
                    let a = self.bracket_vectors(&self.bracket_vectors(&x, &y), &z);
                    let b = self.bracket_vectors(&self.bracket_vectors(&y, &z), &x);
                    let c = self.bracket_vectors(&self.bracket_vectors(&z, &x), &y);
                    if (0..3).any(|n| !(&(&a[n] + &b[n]) + &c[n]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
