use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use qhw_core::algebra::rational::{self, frac};
use qhw_core::algebra::{Gen, Param, ParamPoly};
use qhw_core::bialgebra::{
    classify, coboundary_delta, cocycle_residuals, cojacobi_residuals, mcybe_check,
    render_trivector, schouten, BialgebraClass, ClassTag, Cocommutator, CocommutatorJson,
    LieStructure, RMatrix, RMatrixJson, CLASSICAL_ORDER,
};
use qhw_core::poisson::{
    group_compose, jacobi_check, linear_part_check, matrix_mul, poisson_homomorphism_check,
    GroupCoords, GroupJson, PoissonResidual, PoissonStructure,
};
use qhw_core::quantization::{
    check_centrality, check_realization, dehomogenize, first_order_defect, verify_hopf, ClosedExpr,
    Factor, FamilyParams, FamilyRegistry, HopfPresentation, QuantizationFamily,
};
use qhw_core::Error;

use crate::report::{residual, Check, Report};

/// Truncation order for symbolic parameters when `--order` is not given.
pub const SYMBOLIC_ORDER: u32 = 4;
/// Truncation order for concrete parameters when `--order` is not given.
pub const CONCRETE_ORDER: u32 = 6;

pub const EXIT_PARSE: u8 = 1;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownFamily(_) | Error::NotConcrete(_) => EXIT_PARSE,
            Error::NotQuantizable(_) => EXIT_INVALID,
            _ => EXIT_VERIFY,
        };
        Failure::new(code, e.to_string())
    }
}

/// What a command printed and the exit code it asks for.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn report(r: &Report, json: bool) -> Self {
        let text = if json { to_json(r) } else { r.text() };
        Output {
            text,
            code: if r.passed { 0 } else { EXIT_VERIFY },
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output serializes");
    s.push('\n');
    s
}

pub struct Options {
    pub input: Option<String>,
    pub order: Option<u32>,
    pub json: bool,
    pub family: Option<String>,
}

fn parse_cocommutator(text: &str) -> Result<Cocommutator, Failure> {
    Ok(CocommutatorJson::parse(text)?.to_cocommutator()?)
}

fn family_by_name<'r>(
    reg: &'r FamilyRegistry,
    name: &str,
) -> Result<&'r dyn QuantizationFamily, Failure> {
    if let Ok(f) = reg.get(name) {
        return Ok(f);
    }
    [ClassTag::TypeIPlus, ClassTag::TypeIMinus, ClassTag::TypeII]
        .into_iter()
        .find(|t| t.name() == name)
        .and_then(|t| reg.by_tag(t))
        .ok_or_else(|| {
            Failure::new(
                EXIT_PARSE,
                format!(
                    "unknown family `{name}` (expected one of {})",
                    reg.names().join(", ")
                ),
            )
        })
}

fn invalid(cls: &BialgebraClass) -> Failure {
    let mut msg = String::from("not a Lie bialgebra");
    for v in &cls.violations {
        write!(msg, "\n  {v}").unwrap();
    }
    Failure::new(EXIT_INVALID, msg)
}

/// A classified input, or a family with symbolic parameters.
struct Resolved<'r> {
    family: &'r dyn QuantizationFamily,
    params: FamilyParams,
    class: Option<BialgebraClass>,
}

fn resolve<'r>(
    reg: &'r FamilyRegistry,
    opts: &Options,
    default_family: Option<&str>,
) -> Result<Resolved<'r>, Failure> {
    if let Some(text) = &opts.input {
        let cls = classify(&parse_cocommutator(text)?)?;
        if !cls.is_valid() {
            return Err(invalid(&cls));
        }
        let (family, params) = reg.for_class(&cls, opts.order.unwrap_or(CONCRETE_ORDER))?;
        if let Some(name) = opts.family.as_deref() {
            let wanted = family_by_name(reg, name)?;
            if wanted.name() != family.name() {
                return Err(Failure::new(
                    EXIT_INVALID,
                    format!("input classifies as {}, not {}", cls.tag, wanted.tag()),
                ));
            }
        }
        return Ok(Resolved {
            family,
            params,
            class: Some(cls),
        });
    }
    let name = opts.family.as_deref().or(default_family).ok_or_else(|| {
        Failure::new(
            EXIT_PARSE,
            "give a cocommutator as input or choose a family with --family",
        )
    })?;
    let family = family_by_name(reg, name)?;
    let params = FamilyParams::symbolic(family.parameters(), opts.order.unwrap_or(SYMBOLIC_ORDER));
    Ok(Resolved {
        family,
        params,
        class: None,
    })
}

#[derive(Serialize)]
struct ClassifyJson {
    summary: String,
    #[serde(rename = "type")]
    tag: ClassTag,
    valid: bool,
    automorphism: String,
    automorphism_matrix: Vec<Vec<String>>,
    normalized: Option<CocommutatorJson>,
    parameters: BTreeMap<String, String>,
    coboundary: bool,
    r_matrix: Option<RMatrixJson>,
    gauge: Vec<Vec<String>>,
    violations: Vec<String>,
}

pub fn run_classify(opts: &Options) -> Result<Output, Failure> {
    let text = opts
        .input
        .as_deref()
        .ok_or_else(|| Failure::new(EXIT_PARSE, "classify needs a cocommutator"))?;
    let cls = classify(&parse_cocommutator(text)?)?;
    let code = if cls.is_valid() { 0 } else { EXIT_INVALID };
    let out = if opts.json {
        let strings = |v: &[qhw_core::algebra::Rational]| {
            v.iter().map(rational::to_string).collect::<Vec<_>>()
        };
        to_json(&ClassifyJson {
            summary: cls.summary(),
            tag: cls.tag,
            valid: cls.is_valid(),
            automorphism: cls.automorphism.to_string(),
            automorphism_matrix: cls.automorphism.rows().iter().map(|r| strings(r)).collect(),
            normalized: cls.normalized.to_json(),
            parameters: cls
                .parameters()
                .iter()
                .map(|(p, v)| (p.name().to_string(), rational::to_string(v)))
                .collect(),
            coboundary: cls.is_coboundary(),
            r_matrix: cls
                .coboundary
                .as_ref()
                .and_then(|s| RMatrixJson::from_rmatrix(&s.r)),
            gauge: cls
                .coboundary
                .as_ref()
                .map_or_else(Vec::new, |s| s.gauge.iter().map(|g| strings(g)).collect()),
            violations: cls.violations.clone(),
        })
    } else {
        let mut s = String::new();
        writeln!(s, "{}", cls.summary()).unwrap();
        if cls.is_valid() {
            writeln!(s, "automorphism: {}", cls.automorphism).unwrap();
            writeln!(s, "normalized: {}", cls.normalized).unwrap();
            match &cls.coboundary {
                Some(sol) => writeln!(s, "r = {}", sol.r).unwrap(),
                None => writeln!(s, "not a coboundary").unwrap(),
            }
        } else {
            for v in &cls.violations {
                writeln!(s, "{v}").unwrap();
            }
        }
        s
    };
    Ok(Output { text: out, code })
}

fn quantize_text(hp: &HopfPresentation, cls: Option<&BialgebraClass>) -> String {
    let doc = hp.to_document();
    let mut s = String::new();
    writeln!(s, "family: {}", doc.family).unwrap();
    if let Some(c) = cls {
        writeln!(s, "automorphism: {}", c.automorphism).unwrap();
    }
    let params: Vec<String> = doc
        .parameters
        .iter()
        .map(|(k, v)| {
            if k == v {
                k.clone()
            } else {
                format!("{k} = {v}")
            }
        })
        .collect();
    writeln!(
        s,
        "parameters: {}",
        if params.is_empty() {
            "none".into()
        } else {
            params.join(", ")
        }
    )
    .unwrap();
    writeln!(s, "order: {}", doc.order).unwrap();
    writeln!(s, "primitive: {}", doc.primitive).unwrap();
    writeln!(s, "relations:").unwrap();
    for r in &doc.relations {
        writeln!(s, "  {r}").unwrap();
    }
    writeln!(s, "coproduct:").unwrap();
    for g in Gen::ALL {
        writeln!(s, "  D({g}) = {}", doc.coproduct.get(g)).unwrap();
    }
    writeln!(s, "counit:").unwrap();
    for g in Gen::ALL {
        writeln!(s, "  e({g}) = {}", doc.counit.get(g)).unwrap();
    }
    writeln!(s, "antipode:").unwrap();
    for g in Gen::ALL {
        writeln!(s, "  S({g}) = {}", doc.antipode.get(g)).unwrap();
    }
    s
}

fn axiom_checks(hp: &HopfPresentation) -> Result<Vec<Check>, Failure> {
    let mut out = Vec::new();
    for rep in verify_hopf(hp)? {
        let res = rep
            .failures()
            .map(|r| residual(&r.label, r.render()))
            .collect();
        out.push(Check::new(rep.axiom.name(), res));
    }
    let defect = first_order_defect(hp.coproduct())?;
    let want = hp.cocommutator();
    let res = if &defect == want {
        Vec::new()
    } else {
        vec![
            residual("deg-1 of D - sD", defect.map(dehomogenize).to_string()),
            residual("delta", want.map(dehomogenize).to_string()),
        ]
    };
    out.push(Check::new("first-order", res));
    Ok(out)
}

pub fn run_quantize(opts: &Options) -> Result<Output, Failure> {
    let reg = FamilyRegistry::default();
    let r = resolve(&reg, opts, None)?;
    let hp = HopfPresentation::build(r.family, &r.params)?;
    let failed: Vec<Check> = axiom_checks(&hp)?
        .into_iter()
        .filter(|c| !c.passed)
        .collect();
    if !failed.is_empty() {
        let mut msg = String::from("refusing to emit an unverified presentation");
        for c in &failed {
            write!(msg, "\n  {}: FAIL", c.name).unwrap();
            for l in &c.residuals {
                write!(msg, "\n    {}: {}", l.label, l.value).unwrap();
            }
        }
        return Err(Failure::new(EXIT_VERIFY, msg));
    }
    let text = if opts.json {
        hp.to_document().to_json() + "\n"
    } else {
        quantize_text(&hp, r.class.as_ref())
    };
    Ok(Output::ok(text))
}

pub fn run_verify(opts: &Options) -> Result<Output, Failure> {
    let reg = FamilyRegistry::default();
    let r = resolve(&reg, opts, None)?;
    let hp = HopfPresentation::build(r.family, &r.params)?;
    let mut rep = Report::new("verify");
    rep.family = Some(r.family.name().to_string());
    rep.order = Some(hp.order());
    if let Some(c) = &r.class {
        rep.note("automorphism", c.automorphism.to_string());
        let params: Vec<String> = c
            .parameters()
            .iter()
            .map(|(p, v)| format!("{p}={}", rational::to_string(v)))
            .collect();
        rep.note("parameters", params.join(", "));
    }
    for c in axiom_checks(&hp)? {
        rep.check(c);
    }
    Ok(Output::report(&rep, opts.json))
}

pub fn run_coboundary(opts: &Options) -> Result<Output, Failure> {
    let r = match &opts.input {
        Some(text) => RMatrixJson::parse(text)?.to_rmatrix()?,
        None => RMatrix::symbolic(CLASSICAL_ORDER),
    };
    let g = LieStructure::heisenberg_weyl();
    let omega = schouten(&r);
    let delta = coboundary_delta(&r, &g)?;
    let mut rep = Report::new("coboundary");
    rep.value("r", r.to_string());
    rep.value("Schouten", render_trivector(&omega)?);
    for g in [Gen::AMinus, Gen::APlus, Gen::M] {
        rep.value(format!("delta({g})"), delta.render_image(g));
    }
    rep.check(Check::pass_if("mCYBE", mcybe_check(&omega, &g)?));
    let mut res = Vec::new();
    for (pair, t) in cocycle_residuals(&delta, &g)? {
        if !t.is_zero() {
            res.push(residual(format!("cocycle {pair}"), t.to_string()));
        }
    }
    for (i, c) in cojacobi_residuals(&delta).iter().enumerate() {
        if !c.is_zero() {
            res.push(residual(format!("co-Jacobi {}", i + 1), c.to_string()));
        }
    }
    rep.check(Check::new("bialgebra", res));
    Ok(Output::report(&rep, opts.json))
}

fn poisson_lines(rs: Vec<PoissonResidual>) -> Vec<crate::report::ResidualLine> {
    rs.into_iter()
        .filter(|r| !r.is_zero())
        .map(|r| residual(r.label, r.value.to_string()))
        .collect()
}

/// Symbolic Poisson structure and cocommutator of a family's normal form.
fn family_structure(family: &dyn QuantizationFamily) -> (PoissonStructure, Cocommutator) {
    let k = CLASSICAL_ORDER;
    let p = |x: Param| {
        if family.parameters().contains(&x) {
            ParamPoly::var(x, k)
        } else {
            ParamPoly::zero(k)
        }
    };
    let delta = Cocommutator::with_forced_c(
        [p(Param::A1), p(Param::A2), p(Param::A3)],
        [p(Param::B1), p(Param::B2), p(Param::B3)],
    );
    (PoissonStructure::symbolic(family.parameters()), delta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PoissonCheck {
    Jacobi,
    Homomorphism,
    Linear,
    Compose,
    All,
}

fn compose_report(text: &str, json: bool) -> Result<Output, Failure> {
    let pair: [GroupJson; 2] = serde_json::from_str(text)
        .map_err(|e| Failure::new(EXIT_PARSE, format!("parse error: {e}")))?;
    let k = CLASSICAL_ORDER;
    let g1 = pair[0].to_coords(k)?;
    let g2 = pair[1].to_coords(k)?;
    let prod = group_compose(&g1, &g2);
    let via_matrix = GroupCoords::from_matrix(&matrix_mul(&g2.matrix(), &g1.matrix()))?;
    let mut rep = Report::new("poisson");
    let shown = prod
        .to_json()
        .expect("rational points compose to rational points");
    rep.value(
        "product",
        serde_json::to_string(&shown).expect("triple serializes"),
    );
    rep.check(Check::pass_if("matrix product", via_matrix == prod));
    Ok(Output::report(&rep, json))
}

pub fn run_poisson(opts: &Options, which: PoissonCheck) -> Result<Output, Failure> {
    if which == PoissonCheck::Compose {
        let text = opts.input.as_deref().ok_or_else(|| {
            Failure::new(
                EXIT_PARSE,
                "compose needs two group elements, e.g. [[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]",
            )
        })?;
        return compose_report(text, opts.json);
    }
    let reg = FamilyRegistry::default();
    let mut targets: Vec<(String, PoissonStructure, Cocommutator)> = Vec::new();
    if let Some(text) = &opts.input {
        let delta = parse_cocommutator(text)?;
        let ps = PoissonStructure::from_cocommutator(&delta)?;
        targets.push((String::new(), ps, delta));
    } else if let Some(name) = opts.family.as_deref() {
        let fam = family_by_name(&reg, name)?;
        let (ps, delta) = family_structure(fam);
        targets.push((String::new(), ps, delta));
    } else {
        for fam in reg.iter() {
            let (ps, delta) = family_structure(fam);
            targets.push((format!("{} ", fam.name()), ps, delta));
        }
    }
    let mut rep = Report::new("poisson");
    if let Some(name) = opts.family.as_deref() {
        rep.family = Some(family_by_name(&reg, name)?.name().to_string());
    }
    let wants = |c: PoissonCheck| which == PoissonCheck::All || which == c;
    for (prefix, ps, delta) in &targets {
        if wants(PoissonCheck::Jacobi) {
            rep.check(Check::new(
                format!("{prefix}jacobi"),
                poisson_lines(jacobi_check(ps)),
            ));
        }
        if wants(PoissonCheck::Homomorphism) {
            rep.check(Check::new(
                format!("{prefix}homomorphism"),
                poisson_lines(poisson_homomorphism_check(ps)),
            ));
        }
        if wants(PoissonCheck::Linear) {
            let res = linear_part_check(ps, delta)
                .into_iter()
                .map(|(l, d)| residual(l, d.to_string()))
                .collect();
            rep.check(Check::new(format!("{prefix}linear part"), res));
        }
    }
    Ok(Output::report(&rep, opts.json))
}

pub fn run_realize(opts: &Options, degree: u32) -> Result<Output, Failure> {
    let reg = FamilyRegistry::default();
    let r = resolve(&reg, opts, Some("type1plus"))?;
    if r.family.tag() != ClassTag::TypeIPlus {
        return Err(Failure::new(
            EXIT_INVALID,
            format!(
                "realize needs a TYPE_I_PLUS structure, got {}",
                r.family.tag()
            ),
        ));
    }
    let hp = HopfPresentation::build(r.family, &r.params)?;
    let k = hp.order();
    let a1 = hp.params().get(Param::A1);
    let half = dehomogenize(&a1.scale(&frac(1, 2)));
    let half = if half.len() == 1 {
        half.to_string()
    } else {
        format!("({half})")
    };
    let c = ClosedExpr::new(vec![(
        ParamPoly::one(k),
        vec![
            Factor::Gen(Gen::M),
            Factor::Exp {
                coeff: a1.scale(&frac(-1, 2)),
                gen: Gen::APlus,
            },
        ],
    )]);
    let mut rep = Report::new("realize");
    rep.family = Some(r.family.name().to_string());
    rep.order = Some(k);
    rep.value("C", c.render());
    rep.value("A+", "x");
    rep.value("M", format!("lambda*exp({half}*x)"));
    rep.value("A-", format!("lambda*exp({half}*x)*d/dx"));
    let cent = check_centrality(&hp)?;
    rep.check(Check::new(
        "centrality",
        cent.iter()
            .filter(|x| !x.is_zero())
            .map(|x| residual(&x.label, x.render()))
            .collect(),
    ));
    let real = check_realization(&hp, degree)?;
    let (acts, rels): (Vec<_>, Vec<_>) = real
        .residuals
        .iter()
        .partition(|(l, _)| l.starts_with("(C"));
    let lines = |v: Vec<&(String, qhw_core::quantization::XPoly)>| {
        v.into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(l, p)| residual(l, p.to_string()))
            .collect()
    };
    rep.check(Check::new(
        format!("realization (x^0..x^{degree})"),
        lines(rels),
    ));
    rep.check(Check::new("C acts as lambda", lines(acts)));
    Ok(Output::report(&rep, opts.json))
}
