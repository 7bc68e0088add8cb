//! The deformed coproduct: the cocommutator written as a 2x2 matrix acting on
//! the non-primitive generators, exponentiated.

use std::collections::BTreeMap;

use super::family::{FamilyParams, QuantizationFamily};
use crate::algebra::{exp_matrix2, flip, FreeElement, Gen, Matrix2, TensorElement};
use crate::bialgebra::Cocommutator;
use crate::error::{Error, Result};

/// `delta(v_i) = sum_j D_ij ^ v_j` for the non-primitive `v = (X1, X2)`, with
/// every `D_ij` a multiple of the primitive generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDelta {
    pub primitive: Gen,
    pub generators: [Gen; 2],
    pub matrix: Matrix2,
}

/// Reads the matrix form off a cocommutator. Fails unless `delta(H) = 0` and
/// each `delta(v_i)` only pairs `v_j` with `H`.
pub fn matrix_delta(
    delta: &Cocommutator,
    primitive: Gen,
    generators: [Gen; 2],
) -> Result<MatrixDelta> {
    let order = delta.order();
    if !delta.delta_tensor(primitive).is_zero() {
        return Err(Error::NotQuantizable(format!(
            "delta({primitive}) is not zero"
        )));
    }
    let mut entries: [[FreeElement; 2]; 2] =
        std::array::from_fn(|_| std::array::from_fn(|_| FreeElement::zero(order)));
    for (i, &vi) in generators.iter().enumerate() {
        let d = delta.delta_tensor(vi);
        let mut rebuilt = TensorElement::zero(2, order);
        for (j, &vj) in generators.iter().enumerate() {
            let c = d.wedge_coefficient(primitive, vj);
            entries[i][j] = FreeElement::gen(primitive, order).scale(&c);
            rebuilt += &TensorElement::wedge(primitive, vj, c);
        }
        if rebuilt != d {
            return Err(Error::NotQuantizable(format!(
                "delta({vi}) has terms not involving {primitive}"
            )));
        }
    }
    Ok(MatrixDelta {
        primitive,
        generators,
        matrix: Matrix2::new(entries),
    })
}

/// The matrix form of a family's cocommutator.
pub fn family_matrix_delta(
    family: &dyn QuantizationFamily,
    p: &FamilyParams,
) -> Result<MatrixDelta> {
    matrix_delta(
        &family.cocommutator(p),
        family.primitive(),
        family.non_primitive(),
    )
}

/// `exp(-D)`, whose entries appear in the coproduct.
pub fn coproduct_matrix(md: &MatrixDelta) -> Result<Matrix2> {
    exp_matrix2(&md.matrix.neg())
}

/// `Delta(H) = 1(x)H + H(x)1`; `Delta(v_i) = 1(x)v_i + sum_j v_j (x) exp(-D)_ij`.
pub fn build_coproduct(md: &MatrixDelta) -> Result<BTreeMap<Gen, TensorElement>> {
    let order = md.matrix.order();
    let e = coproduct_matrix(md)?;
    let mut out = BTreeMap::new();
    out.insert(
        md.primitive,
        TensorElement::primitive(&FreeElement::gen(md.primitive, order), 2),
    );
    for (i, &vi) in md.generators.iter().enumerate() {
        let mut t = TensorElement::embed(&FreeElement::gen(vi, order), 1, 2);
        for (j, &vj) in md.generators.iter().enumerate() {
            t += &TensorElement::product(&[FreeElement::gen(vj, order), e.get(i, j).clone()]);
        }
        out.insert(vi, t);
    }
    Ok(out)
}

/// Parameter-degree-1 part of `sigma Delta - Delta` on each generator, read back
/// as a cocommutator.
pub fn first_order_defect(coproduct: &BTreeMap<Gen, TensorElement>) -> Result<Cocommutator> {
    let mut images = BTreeMap::new();
    for (g, d) in coproduct {
        images.insert(*g, (&flip(d)? - d).homogeneous_part(1));
    }
    Cocommutator::from_tensors(&images)
}
