//! The chart `x1 = a-`, `x2 = a+`, `x3 = m + a- a+` and its inverse.

use std::collections::BTreeMap;

use super::poly::{Coord, CoordPoly};

/// Rewrites a polynomial in `(a-, a+, m)` in the `(x1, x2, x3)` chart.
pub fn chart_change(p: &CoordPoly) -> CoordPoly {
    let k = p.order();
    let x = |c| CoordPoly::var(c, k);
    let map = BTreeMap::from([
        (Coord::AMinus, x(Coord::X1)),
        (Coord::APlus, x(Coord::X2)),
        (Coord::M, &x(Coord::X3) - &(&x(Coord::X1) * &x(Coord::X2))),
    ]);
    p.compose(&map)
}

/// Rewrites a polynomial in `(x1, x2, x3)` back in `(a-, a+, m)`.
pub fn chart_inverse(p: &CoordPoly) -> CoordPoly {
    let k = p.order();
    let a = |c| CoordPoly::var(c, k);
    let map = BTreeMap::from([
        (Coord::X1, a(Coord::AMinus)),
        (Coord::X2, a(Coord::APlus)),
        (
            Coord::X3,
            &a(Coord::M) + &(&a(Coord::AMinus) * &a(Coord::APlus)),
        ),
    ]);
    p.compose(&map)
}
