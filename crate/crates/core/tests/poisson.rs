use qhw_core::algebra::rational::int;
use qhw_core::algebra::ParamPoly;
use qhw_core::bialgebra::{cojacobi_residuals, Cocommutator, CLASSICAL_ORDER};
use qhw_core::poisson::{all_zero, jacobi_check, poisson_homomorphism_check, PoissonStructure};

fn p(x: i64) -> ParamPoly {
    ParamPoly::constant(int(x), CLASSICAL_ORDER)
}

#[test]
fn jacobi_agrees_with_cojacobi_on_a_grid() {
    let mut valid = 0;
    for t in 0..3i64.pow(6) {
        let v: Vec<i64> = (0..6).map(|i| (t / 3i64.pow(i)) % 3 - 1).collect();
        let (a, b) = ([v[0], v[1], v[2]], [v[3], v[4], v[5]]);
        let delta = Cocommutator::with_forced_c(a.map(p), b.map(p));
        let co = cojacobi_residuals(&delta).iter().all(ParamPoly::is_zero);
        let ps = PoissonStructure::new(a.map(p), b.map(p));
        assert_eq!(all_zero(&jacobi_check(&ps)), co, "a={a:?} b={b:?}");
        if co {
            valid += 1;
            assert!(
                all_zero(&poisson_homomorphism_check(&ps)),
                "a={a:?} b={b:?}"
            );
        }
    }
    assert!(valid > 1);
}
