//! Truncated exponentials of elements and of 2x2 matrices of elements.

use super::free::FreeElement;
use super::param::ParamPoly;
use super::rational::factorial_inverse;
use super::word::Gen;
use crate::error::{Error, Result};

/// `sum_{n=0..K} x^n / n!`, computed in the free algebra.
///
/// Every term of `x` must carry at least one parameter so the series stops at
/// the truncation order.
pub fn exp_element(x: &FreeElement) -> Result<FreeElement> {
    let order = x.order();
    if x.is_zero() {
        return Ok(FreeElement::one(order));
    }
    if x.terms().any(|(_, c)| c.min_degree() == Some(0)) {
        return Err(Error::NonNilpotent(x.to_string()));
    }
    let mut total = FreeElement::one(order);
    let mut power = FreeElement::one(order);
    for n in 1..=order {
        power = power.nc_mul(x);
        if power.is_zero() {
            break;
        }
        total.add_scaled(&power, &ParamPoly::constant(factorial_inverse(n), order));
    }
    Ok(total)
}

/// `sum_{n>=1} s^(n-1) x^n / n!`, i.e. `(exp(s x) - 1) / s` without the division.
/// `x` must be a plain (parameter-free) element; the series stops because of `s`.
pub fn exp_difference_quotient(s: &ParamPoly, x: &FreeElement) -> FreeElement {
    let order = x.order();
    let mut total = FreeElement::zero(order);
    let mut power = FreeElement::one(order);
    let mut s_pow = ParamPoly::one(order);
    for n in 1..=order + 1 {
        power = power.nc_mul(x);
        if n > 1 {
            s_pow = &s_pow * s;
        }
        if s_pow.is_zero() {
            break;
        }
        let c = s_pow.scale(&factorial_inverse(n));
        total.add_scaled(&power, &c);
    }
    total
}

/// A 2x2 matrix of algebra elements, `entries[row][col]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix2 {
    pub entries: [[FreeElement; 2]; 2],
}

impl Matrix2 {
    pub fn new(entries: [[FreeElement; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    pub fn identity(order: u32) -> Self {
        let one = FreeElement::one(order);
        let zero = FreeElement::zero(order);
        Matrix2::new([[one.clone(), zero.clone()], [zero, one]])
    }

    pub fn order(&self) -> u32 {
        self.entries[0][0].order()
    }

    pub fn get(&self, i: usize, j: usize) -> &FreeElement {
        &self.entries[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(FreeElement::is_zero)
    }

    /// Matrix product with entries multiplied by concatenation.
    pub fn mul(&self, other: &Matrix2) -> Matrix2 {
        let e = |i: usize, j: usize| {
            &self.entries[i][0].nc_mul(&other.entries[0][j])
                + &self.entries[i][1].nc_mul(&other.entries[1][j])
        };
        Matrix2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub fn scale(&self, c: &ParamPoly) -> Matrix2 {
        Matrix2::new(self.entries.clone().map(|row| row.map(|x| x.scale(c))))
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2::new(self.entries.clone().map(|row| row.map(|x| -&x)))
    }

    pub fn add(&self, other: &Matrix2) -> Matrix2 {
        let e = |i: usize, j: usize| &self.entries[i][j] + &other.entries[i][j];
        Matrix2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    /// `E11 E22 - E12 E21`; meaningful when the entries commute.
    pub fn det(&self) -> FreeElement {
        &self.entries[0][0].nc_mul(&self.entries[1][1])
            - &self.entries[0][1].nc_mul(&self.entries[1][0])
    }

    /// The single generator all entries are polynomials in, if there is one.
    fn common_generator(&self) -> Option<Option<Gen>> {
        let mut found: Option<Gen> = None;
        for x in self.entries.iter().flatten() {
            for (w, _) in x.terms() {
                for &g in w.letters() {
                    match found {
                        None => found = Some(g),
                        Some(h) if h != g => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(found)
    }
}

/// Matrix exponential by the terminating series `sum M^n / n!`.
pub fn exp_matrix2(m: &Matrix2) -> Result<Matrix2> {
    let order = m.order();
    if m.common_generator().is_none() {
        return Err(Error::UnsupportedMatrix(
            "entries are not polynomials in a single generator, so they need not commute".into(),
        ));
    }
    for x in m.entries.iter().flatten() {
        if x.terms().any(|(_, c)| c.min_degree() == Some(0)) {
            return Err(Error::NonNilpotent(x.to_string()));
        }
    }
    let mut total = Matrix2::identity(order);
    let mut power = Matrix2::identity(order);
    for n in 1..=order {
        power = power.mul(m);
        if power.is_zero() {
            break;
        }
        total = total.add(&power.scale(&ParamPoly::constant(factorial_inverse(n), order)));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::Param;

    fn p(x: Param, k: u32) -> ParamPoly {
        ParamPoly::var(x, k)
    }

    #[test]
    fn exp_of_zero() {
        assert_eq!(
            exp_element(&FreeElement::zero(5)).unwrap(),
            FreeElement::one(5)
        );
    }

    #[test]
    fn exp_series_low_order() {
        let x = FreeElement::gen(Gen::APlus, 2).scale(&p(Param::A1, 2));
        assert_eq!(
            exp_element(&x).unwrap().to_string(),
            "1 + a1*A+ + (1/2)*a1^2*A+^2"
        );
        let s = &p(Param::A2, 2) + &p(Param::B3, 2);
        let x = FreeElement::gen(Gen::M, 2).scale(&s);
        assert_eq!(
            exp_element(&x).unwrap().to_string(),
            "1 + a2*M + b3*M + (1/2)*a2^2*M^2 + a2*b3*M^2 + (1/2)*b3^2*M^2"
        );
    }

    #[test]
    fn exp_requires_parameter() {
        let x = FreeElement::gen(Gen::APlus, 3);
        assert!(matches!(exp_element(&x), Err(Error::NonNilpotent(_))));
    }

    #[test]
    fn exp_times_exp_neg_is_one() {
        let k = 6;
        let x = FreeElement::gen(Gen::APlus, k).scale(&(&p(Param::A1, k) + &p(Param::A3, k)));
        let prod = exp_element(&x).unwrap().nc_mul(&exp_element(&-&x).unwrap());
        assert_eq!(prod, FreeElement::one(k));
    }

    #[test]
    fn diagonal_matrix_exponential() {
        let k = 4;
        let m = FreeElement::gen(Gen::M, k);
        let zero = FreeElement::zero(k);
        let mat = Matrix2::new([
            [m.scale(&p(Param::A2, k)), zero.clone()],
            [zero.clone(), m.scale(&p(Param::B3, k))],
        ]);
        let e = exp_matrix2(&mat).unwrap();
        assert_eq!(
            e.get(0, 0),
            &exp_element(&m.scale(&p(Param::A2, k))).unwrap()
        );
        assert_eq!(
            e.get(1, 1),
            &exp_element(&m.scale(&p(Param::B3, k))).unwrap()
        );
        assert!(e.get(0, 1).is_zero() && e.get(1, 0).is_zero());
    }

    #[test]
    fn upper_triangular_exponential() {
        // exp [[a1 A+, -a3 A+], [0, a1 A+]] = [[e, -a3 A+ e], [0, e]] with e = exp(a1 A+)
        let k = 5;
        let ap = FreeElement::gen(Gen::APlus, k);
        let a1 = p(Param::A1, k);
        let a3 = p(Param::A3, k);
        let mat = Matrix2::new([
            [ap.scale(&a1), ap.scale(&-&a3)],
            [FreeElement::zero(k), ap.scale(&a1)],
        ]);
        let e = exp_matrix2(&mat).unwrap();
        let ex = exp_element(&ap.scale(&a1)).unwrap();
        assert_eq!(e.get(0, 0), &ex);
        assert_eq!(e.get(1, 1), &ex);
        assert_eq!(e.get(0, 1), &ap.nc_mul(&ex).scale(&-&a3));
        assert!(e.get(1, 0).is_zero());
    }

    #[test]
    fn type_ii_determinant_identity() {
        let k = 5;
        let m = FreeElement::gen(Gen::M, k);
        let mat = Matrix2::new([
            [m.scale(&p(Param::A2, k)), m.scale(&p(Param::A3, k))],
            [m.scale(&p(Param::B2, k)), m.scale(&p(Param::B3, k))],
        ]);
        let e = exp_matrix2(&mat).unwrap();
        let trace = &p(Param::A2, k) + &p(Param::B3, k);
        assert_eq!(e.det(), exp_element(&m.scale(&trace)).unwrap());
    }

    #[test]
    fn mixed_generators_rejected() {
        let k = 3;
        let z = FreeElement::zero(k);
        let mat = Matrix2::new([
            [
                FreeElement::gen(Gen::M, k).scale(&p(Param::A2, k)),
                z.clone(),
            ],
            [z, FreeElement::gen(Gen::APlus, k).scale(&p(Param::A1, k))],
        ]);
        assert!(matches!(
            exp_matrix2(&mat),
            Err(Error::UnsupportedMatrix(_))
        ));
    }

    #[test]
    fn difference_quotient_degenerate_trace() {
        let k = 3;
        let m = FreeElement::gen(Gen::M, k);
        let q = exp_difference_quotient(&ParamPoly::zero(k), &m);
        assert_eq!(q, m);
        let s = p(Param::A2, k);
        let q = exp_difference_quotient(&s, &m);
        assert_eq!(
            q.to_string(),
            "M + (1/2)*a2*M^2 + (1/6)*a2^2*M^3 + (1/24)*a2^3*M^4"
        );
    }
}
