//! Canonical text rendering shared by `Display` impls and the CLI.
//!
//! A term is `coefficient*parameters*word`, e.g. `(1/2)*a1*M^2*A-`; unit
//! coefficients are omitted and the empty word is `1`. Terms are ordered by
//! parameter monomial (graded lexicographic), then by word, and joined with
//! ` + ` / ` - `. Tensor slots are joined by ` (x) `.

use num_traits::{One, Signed};

use super::free::FreeElement;
use super::param::{Monomial, ParamPoly};
use super::rational::{magnitude_prefix, Rational};
use super::tensor::TensorElement;
use super::word::Word;

pub fn render_word(w: &Word) -> String {
    if w.is_empty() {
        return "1".to_string();
    }
    w.runs()
        .into_iter()
        .map(|(g, n)| {
            if n == 1 {
                g.name().to_string()
            } else {
                format!("{}^{}", g.name(), n)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

pub fn render_monomial(m: &Monomial) -> String {
    m.factors()
        .map(|(p, e)| {
            if e == 1 {
                p.name().to_string()
            } else {
                format!("{}^{}", p.name(), e)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Joins signed terms, each already rendered without its sign.
fn join(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Magnitude and parameter part of one term, with `tail` (word or slots) appended.
fn term_body(c: &Rational, m: &Monomial, tail: Option<String>) -> String {
    let mut parts = Vec::new();
    let unit = c.abs().is_one();
    if !unit || (m.is_one() && tail.is_none()) {
        parts.push(magnitude_prefix(c));
    }
    if !m.is_one() {
        parts.push(render_monomial(m));
    }
    if let Some(t) = tail {
        parts.push(t);
    }
    parts.join("*")
}

/// Renders `(coefficient, parameters, tail)` terms in the given order.
pub(crate) fn render_terms(
    terms: impl IntoIterator<Item = (Rational, Monomial, Option<String>)>,
) -> String {
    join(
        terms
            .into_iter()
            .map(|(c, m, tail)| (c.is_negative(), term_body(&c, &m, tail))),
    )
}

pub fn render_poly(p: &ParamPoly) -> String {
    join(
        p.terms()
            .map(|(m, c)| (c.is_negative(), term_body(c, m, None))),
    )
}

pub fn render_free(x: &FreeElement) -> String {
    let mut flat: Vec<(Monomial, &Word, &Rational)> = Vec::new();
    for (w, p) in x.terms() {
        for (m, c) in p.terms() {
            flat.push((*m, w, c));
        }
    }
    flat.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    join(flat.into_iter().map(|(m, w, c)| {
        let tail = if w.is_empty() {
            None
        } else {
            Some(render_word(w))
        };
        (c.is_negative(), term_body(c, &m, tail))
    }))
}

pub fn render_tensor(t: &TensorElement) -> String {
    let mut flat: Vec<(Monomial, &Vec<Word>, &Rational)> = Vec::new();
    for (ws, p) in t.terms() {
        for (m, c) in p.terms() {
            flat.push((*m, ws, c));
        }
    }
    flat.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    join(flat.into_iter().map(|(m, ws, c)| {
        let slots = ws.iter().map(render_word).collect::<Vec<_>>().join(" (x) ");
        (c.is_negative(), term_body(c, &m, Some(slots)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::Param;
    use crate::algebra::rational::frac;
    use crate::algebra::word::Gen;

    const K: u32 = 4;

    #[test]
    fn canonical_term() {
        let c = ParamPoly::var(Param::A1, K).scale(&frac(1, 2));
        let x = FreeElement::term(Word(vec![Gen::M, Gen::M, Gen::AMinus]), c);
        assert_eq!(render_free(&x), "(1/2)*a1*M^2*A-");
    }

    #[test]
    fn signs_and_units() {
        let mut x = FreeElement::gen(Gen::M, K);
        x.add_term(Word::power(Gen::M, 2), &ParamPoly::int(-1, K));
        x.add_term(Word::power(Gen::M, 3), &ParamPoly::constant(frac(2, 3), K));
        assert_eq!(render_free(&x), "M - M^2 + (2/3)*M^3");
        assert_eq!(render_free(&FreeElement::zero(K)), "0");
        assert_eq!(render_free(&FreeElement::one(K)), "1");
        assert_eq!(render_free(&-&FreeElement::one(K)), "-1");
    }

    #[test]
    fn tensor_rendering() {
        let mut t = TensorElement::pure(
            vec![Word::empty(), Word::letter(Gen::AMinus)],
            ParamPoly::one(K),
        );
        t.add_term(
            vec![Word::letter(Gen::M), Word::letter(Gen::APlus)],
            &-&ParamPoly::var(Param::A3, K),
        );
        assert_eq!(render_tensor(&t), "1 (x) A- - a3*M (x) A+");
    }
}
