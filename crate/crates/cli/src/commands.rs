use std::collections::HashMap;
use std::fs;
use std::path::Path;

use serde_json::json;

use screwinv::group::{self, check_invariant_sampled, check_invariant_symbolic, ActionKind};
use screwinv::poly::{format, identifiers, parse, TermOrder, VariableSet};
use screwinv::sagbi::{format_basis_file, parse_basis_file, sagbi_construct, subduct};
use screwinv::scalar::parse_scalar;
use screwinv::screw::{self, dh_invariants, sig15, Catalog, Completeness, MultiScrew};
use screwinv::{verify, Rational};

use crate::report::{CliError, Report};
use crate::{InvarianceArgs, Mode, PolyArgs, Which};

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError {
        message: format!("{}: {e}", path.display()),
    })
}

fn in_file(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError {
        message: format!("{}: {e}", path.display()),
    }
}

pub fn poly(a: PolyArgs) -> Result<Report, CliError> {
    let text = a.format.as_deref().or(a.eval.as_deref()).unwrap_or_default();
    let vars = match (&a.vars, a.screws) {
        (Some(v), _) => VariableSet::new(v.split_whitespace())?,
        (None, Some(m)) => VariableSet::screws(m),
        (None, None) => {
            let names = identifiers(text)?;
            VariableSet::new(if names.is_empty() { vec!["x".to_string()] } else { names })?
        }
    };
    let f = parse::<Rational>(text, &vars)?;
    let order = TermOrder::lex(&vars);
    let mut r = Report::new("poly");
    if a.eval.is_some() {
        let point = assignments(a.at.as_deref().unwrap_or_default())?;
        let value = f.evaluate_named(&point)?;
        r.line(value.to_string());
        r.item(json!({ "polynomial": format(&f, &order), "value": value.to_string() }));
    } else {
        let shown = format(&f, &order);
        r.line(shown.clone());
        r.item(json!({ "polynomial": shown, "terms": f.num_terms() }));
    }
    Ok(r)
}

fn assignments(text: &str) -> Result<HashMap<String, Rational>, CliError> {
    let mut out = HashMap::new();
    for part in text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
    {
        let (name, value) = part.split_once('=').ok_or_else(|| CliError {
            message: format!("expected name=value, found `{part}`"),
        })?;
        let v = parse_scalar::<Rational>(value.trim()).ok_or_else(|| CliError {
            message: format!("`{value}` is not a rational"),
        })?;
        out.insert(name.trim().to_string(), v);
    }
    Ok(out)
}

pub fn subduct_cmd(basis_path: &Path, text: &str) -> Result<Report, CliError> {
    let file = parse_basis_file::<Rational>(&read(basis_path)?).map_err(|e| in_file(basis_path, e))?;
    let basis = file.generator_set()?;
    let f = parse::<Rational>(text, file.vars())?;
    let res = subduct(&f, &basis);
    let order = basis.order();
    let mut r = Report::new("subduct");
    for (i, g) in basis.generators().iter().enumerate() {
        r.line(format!("g{} = {}", i + 1, format(g, order)));
    }
    let remainder = format(&res.remainder, order);
    r.line(format!("remainder: {remainder}"));
    r.line(format!("certificate: {}", res.certificate.describe()));
    r.item(json!({
        "remainder": remainder,
        "certificate": res.certificate.describe(),
        "member": res.remainder.is_zero(),
    }));
    Ok(r)
}

pub fn sagbi(path: &Path, degree_bound: u32, max_iter: usize) -> Result<Report, CliError> {
    let file = parse_basis_file::<Rational>(&read(path)?).map_err(|e| in_file(path, e))?;
    let result = sagbi_construct(file.generator_set()?, degree_bound, max_iter)?;
    let mut basis = result.basis.clone();
    let full_len = basis.len();
    if !file.eliminate.is_empty() {
        let keep: Vec<&str> = file
            .order
            .priority()
            .iter()
            .map(|&i| file.vars().name(i))
            .filter(|n| !file.eliminate.iter().any(|e| e == n))
            .collect();
        let target = VariableSet::new(keep)?;
        basis = basis.restrict_to(&target)?;
    }
    let order = basis.order();
    let names: Vec<&str> = order.priority().iter().map(|&i| order.vars().name(i)).collect();
    let mut r = Report::new("sagbi");
    r.line(format!("order: lex {}", names.join(" ")));
    r.line(format!("complete: {}", result.complete));
    r.line(format!("degree_bound: {}", result.degree_bound));
    r.line(format!("iterations: {}", result.iterations));
    if !file.eliminate.is_empty() {
        r.line(format!(
            "# {} of {full_len} generators are free of {}",
            basis.len(),
            file.eliminate.join(" ")
        ));
    }
    for g in basis.generators() {
        let shown = format(g, order);
        r.line(shown.clone());
        r.item(json!({ "polynomial": shown }));
    }
    if !result.complete {
        r.fail(2);
    }
    Ok(r)
}

pub fn invariance(a: InvarianceArgs) -> Result<Report, CliError> {
    let kind: ActionKind = a.group.parse()?;
    let vars = if a.vectors {
        VariableSet::vectors(a.screws)
    } else {
        VariableSet::screws(a.screws)
    };
    let f = parse::<Rational>(&a.poly, &vars)?;
    let mut r = Report::new("invariance");
    let shown = format(&f, &TermOrder::lex(&vars));
    match a.mode {
        Mode::Symbolic => {
            let pass = check_invariant_symbolic(&f, kind)?;
            r.line(format!("{}: {shown} under {kind} (symbolic)", verdict(pass)));
            r.item(json!({ "polynomial": shown, "group": kind.to_string(), "mode": "symbolic", "pass": pass }));
            if !pass {
                r.fail(3);
            }
        }
        Mode::Sample => {
            let report = check_invariant_sampled(&f, kind, a.samples, a.seed)?;
            let pass = report.passed();
            r.line(format!(
                "{}: {shown} under {kind} ({} samples, seed {})",
                verdict(pass),
                a.samples,
                a.seed
            ));
            let mut item = json!({
                "polynomial": shown, "group": kind.to_string(), "mode": "sample",
                "samples": a.samples, "seed": a.seed, "pass": pass,
            });
            if let Some(cx) = &report.counterexample {
                let point: Vec<String> = vars
                    .names()
                    .iter()
                    .zip(&cx.point)
                    .map(|(n, v)| format!("{n}={v}"))
                    .collect();
                r.line(format!("sample: {}", cx.sample));
                r.line(format!("element: {}", cx.element));
                r.line(format!("point: {}", point.join(", ")));
                r.line(format!("f(x) = {}", cx.before));
                r.line(format!("f(g.x) = {}", cx.after));
                item["counterexample"] = json!({
                    "sample": cx.sample,
                    "element": cx.element.to_string(),
                    "point": point,
                    "before": cx.before.to_string(),
                    "after": cx.after.to_string(),
                });
                r.fail(3);
            }
            r.item(item);
        }
    }
    Ok(r)
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn catalog(m: usize, which: Which) -> Result<Report, CliError> {
    let mut r = Report::new("catalog");
    let cat: Catalog<Rational> = match which {
        Which::Se3 => screw::se3_generator_catalog(m)?,
        Which::T3 => screw::translation_sagbi_catalog(m)?,
        Which::So3 => screw::so3_sagbi_catalog(m)?,
        Which::Pullback => {
            if m == 0 {
                return Err(CliError {
                    message: "need at least one screw".into(),
                });
            }
            let p = group::pullback::<Rational>(ActionKind::TranslationSub, m)?;
            let names: Vec<String> = p.space_vars.names().iter().map(|n| format!("image of {n}")).collect();
            let text = format_basis_file(&p.order, &p.images, Some(&names), &p.group_vars);
            r.line(format!("# translation pullback, {}", screw::count(m, "screw")));
            r.lines.extend(text.lines().map(String::from));
            for (n, f) in names.iter().zip(&p.images) {
                r.item(json!({ "name": n, "polynomial": format(f, &p.order) }));
            }
            return Ok(r);
        }
    };
    r.lines.extend(cat.dump().lines().map(String::from));
    for (n, f) in &cat.entries {
        r.item(json!({
            "name": n,
            "polynomial": format(f, &cat.order),
            "conjectural": cat.conjectural,
            "complete": match cat.completeness {
                Completeness::NotClaimed => json!(null),
                Completeness::Complete => json!(true),
                Completeness::Unknown => json!("unknown"),
            },
        }));
    }
    Ok(r)
}

pub fn dh(path: &Path) -> Result<Report, CliError> {
    let pair = MultiScrew::<Rational>::parse(&read(path)?).map_err(|e| in_file(path, e))?;
    let report = dh_invariants(&pair)?;
    let mut r = Report::new("dh");
    r.lines.extend(report.to_string().lines().map(String::from));
    r.item(json!({
        "klein_cross": report.klein_cross.to_string(),
        "dot_11": report.dots[0].to_string(),
        "dot_12": report.dots[1].to_string(),
        "dot_22": report.dots[2].to_string(),
        "cos_alpha": {
            "numerator": report.cos_alpha.numerator.to_string(),
            "radicand": report.cos_alpha.radicand.to_string(),
            "exact": report.cos_alpha.exact().map(|v| v.to_string()),
        },
        "d_sin_alpha": {
            "numerator": report.d_sin_alpha.numerator.to_string(),
            "radicand": report.d_sin_alpha.radicand.to_string(),
            "exact": report.d_sin_alpha.exact().map(|v| v.to_string()),
        },
        "alpha": sig15(report.alpha),
        "d": report.d.map(sig15),
    }));
    Ok(r)
}

pub fn verify(suite: &str) -> Result<Report, CliError> {
    if suite != "paper" {
        return Err(CliError {
            message: format!("unknown suite `{suite}` (available: paper)"),
        });
    }
    let items = verify::reproduction_suite();
    let mut r = Report::new("verify");
    for it in &items {
        r.line(format!("{:>2}  {}  {}", it.number, verdict(it.pass), it.title));
        r.line(format!("    {}", it.detail));
        r.item(json!({
            "number": it.number, "title": it.title, "pass": it.pass, "detail": it.detail,
        }));
    }
    let passed = items.iter().filter(|i| i.pass).count();
    r.line(format!("{passed}/{} passed", items.len()));
    if passed != items.len() {
        r.fail(3);
    }
    Ok(r)
}
