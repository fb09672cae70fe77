use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::{json, Value};

use super::{Cli, Command, Failure, Output, TreeArgs, WeightArgs};
use crate::divcalc::{
    ample_form_check, ample_template, canonical_class, discrepancy, hurwitz_correction, k_m0a, log_mmp_model,
    transport, verify_identities, Direction, DivClass, HDivisor,
};
use crate::error::Error;
use crate::singularity::{
    a_to_d_transform, classify_branch_profile, lct, lct_window_check, normal_form, thresholds_to_types, tjurina_basis,
    versal, versal_with_section, wps_equal, wps_weights, SingKind, SingType,
};
use crate::stablered::{
    attaching_points, base_change, central_fiber, chart, charts, d_stable_reduction, leading_form_check, tail_family,
    verify_tail_membership,
};
use crate::symkernel::{MPoly, Rational};
use crate::trees::{
    arithmetic_genus, contract, enumerate_strata, is_stable, odd_points, parity_certificate, stratum_label, MarkedTree,
    WeightVector,
};

type Res = Result<Output, Failure>;

fn ok(payload: Value) -> Res {
    Ok(Output::Json {
        payload,
        diagnostics: vec![],
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("values serialize")
}

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(Error::InvalidInput(msg.into()))
}

/// Inline JSON wins over `--json-in`.
fn load_json(cli: &Cli, inline: Option<&str>, what: &str) -> Result<Value, Failure> {
    if let Some(s) = inline {
        return Ok(serde_json::from_str(s)?);
    }
    match &cli.json_in {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Malformed(format!("cannot read {}: {e}", path.display())))?;
            Ok(serde_json::from_str(&text)?)
        }
        None => Err(Failure::Malformed(format!(
            "missing {what}: pass it inline or with --json-in"
        ))),
    }
}

#[derive(Deserialize)]
struct TreeDoc {
    tree: MarkedTree,
    #[serde(default)]
    alpha: Option<Rational>,
    #[serde(default)]
    beta: Option<Rational>,
}

/// A bare tree, or `{"tree": …, "alpha": …, "beta": …}`.
fn load_tree(cli: &Cli, args: &TreeArgs) -> Result<TreeDoc, Failure> {
    let v = load_json(cli, args.tree.as_deref(), "tree")?;
    if v.get("tree").is_some() {
        Ok(serde_json::from_value(v)?)
    } else {
        Ok(TreeDoc {
            tree: serde_json::from_value(v)?,
            alpha: None,
            beta: None,
        })
    }
}

/// n from the branch degree: degree n with χ, n+1 without.
fn tree_n(t: &MarkedTree) -> Result<u32, Failure> {
    let d = t.degree();
    if t.has_chi() {
        Ok(d)
    } else {
        d.checked_sub(1).ok_or_else(|| domain("empty branch divisor"))
    }
}

fn tree_weights(doc: &TreeDoc, w: &WeightArgs) -> Result<WeightVector, Failure> {
    let alpha = w
        .alpha
        .clone()
        .or_else(|| doc.alpha.clone())
        .ok_or_else(|| domain("alpha is required"))?;
    let beta = w.beta.clone().or_else(|| doc.beta.clone());
    let n = tree_n(&doc.tree)?;
    Ok(match (doc.tree.has_chi(), beta) {
        (true, Some(b)) => WeightVector::pointed(n, alpha, b)?,
        (false, None) => WeightVector::unpointed(n, alpha)?,
        (true, None) => return Err(domain("a tree with χ needs beta")),
        (false, Some(_)) => return Err(domain("beta given for a tree without χ")),
    })
}

fn parse_spec(s: &str) -> Result<BTreeMap<String, Rational>, Failure> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::Malformed(format!("spec entry {item:?} is not name=value")))?;
        out.insert(k.trim().to_string(), v.trim().parse::<Rational>()?);
    }
    Ok(out)
}

pub(super) fn dispatch(cli: &Cli) -> Res {
    match &cli.command {
        Command::Classify { poly, marked } => {
            let f: MPoly = poly.parse()?;
            ok(json!({ "singularities": to_value(&classify_branch_profile(&f, marked.as_ref())?) }))
        }
        Command::Versal { t, with_section } => {
            let fam = if *with_section {
                versal_with_section(t.index)?
            } else {
                versal(SingType::new(t.kind, t.index)?)?
            };
            let degree = fam.weighted_degree()?;
            let mut v = to_value(&fam);
            v["weighted_degree"] = to_value(&degree);
            ok(v)
        }
        Command::Tjurina { t } => {
            let basis = tjurina_basis(SingType::new(t.kind, t.index)?)?;
            ok(json!({ "dimension": basis.len(), "basis": to_value(&basis) }))
        }
        Command::Lct { t, window } => {
            let st = SingType::new(t.kind, t.index)?;
            let value = lct(st)?;
            if *window {
                if st.kind != SingKind::A {
                    return Err(domain("the window comparison is for A_k"));
                }
                ok(json!({ "value": value, "window": to_value(&lct_window_check(t.index)?) }))
            } else {
                ok(json!({ "value": value }))
            }
        }
        Command::Thresholds { alpha, beta, n } => ok(to_value(&thresholds_to_types(alpha, beta.as_ref(), *n)?)),
        Command::A2d { n } => {
            let fam = versal_with_section(*n)?;
            let d = a_to_d_transform(&fam)?;
            let renamed = d.equation.subs(&[("u", MPoly::var("y"))])?;
            let matches = renamed == versal(SingType::d(*n))?.equation;
            ok(json!({ "section_family": to_value(&fam), "d_family": to_value(&d), "matches_versal_d": matches }))
        }
        Command::NormalForm { poly } => {
            let f: MPoly = poly.parse()?;
            ok(to_value(&normal_form(&f)?))
        }
        Command::Wps { n, pointed, p, q } => {
            let w = wps_weights(*n, *pointed)?;
            match (p, q) {
                (Some(p), Some(q)) => ok(json!({ "weights": w, "equal": wps_equal(p, q, &w)? })),
                (None, None) => ok(json!({ "weights": w })),
                _ => Err(Failure::Malformed("--p and --q go together".into())),
            }
        }
        Command::Stability { tree, w } => {
            let doc = load_tree(cli, tree)?;
            let wv = tree_weights(&doc, w)?;
            let report = is_stable(&doc.tree, &wv)?;
            let mut v = to_value(&report);
            if report.stable {
                v["label"] = to_value(&stratum_label(&doc.tree, &wv)?);
            }
            ok(v)
        }
        Command::Parity { tree } => {
            let doc = load_tree(cli, tree)?;
            let odd = odd_points(&doc.tree)?;
            let cert = parity_certificate(&doc.tree)?;
            ok(json!({ "odd_points": to_value(&odd), "certificate": cert }))
        }
        Command::Genus { tree } => {
            let doc = load_tree(cli, tree)?;
            ok(to_value(&arithmetic_genus(&doc.tree)?))
        }
        Command::Strata {
            n,
            k,
            l,
            max_codim,
            dot,
        } => {
            let w = WeightVector::for_window(*n, *k, *l)?;
            let strata = enumerate_strata(*n, &w, *max_codim)?;
            if *dot {
                let mut s = String::new();
                for t in &strata {
                    s.push_str(&t.to_dot());
                    s.push('\n');
                }
                return Ok(Output::Text(s));
            }
            let list: Vec<Value> = strata
                .iter()
                .map(|t| {
                    Ok(json!({
                        "certificate": t.certificate(),
                        "codim": t.components.len() - 1,
                        "label": to_value(&stratum_label(t, &w)?),
                        "tree": to_value(t),
                    }))
                })
                .collect::<Result<_, Error>>()?;
            ok(json!({ "weights": to_value(&w), "count": list.len(), "strata": list }))
        }
        Command::Contract { tree, k, l, to_k, to_l } => {
            let doc = load_tree(cli, tree)?;
            let n = tree_n(&doc.tree)?;
            let w = WeightVector::for_window(n, *k, *l)?;
            let w2 = WeightVector::for_window(n, *to_k, *to_l)?;
            let out = contract(&doc.tree, &w, &w2)?;
            ok(json!({
                "tree": to_value(&out),
                "certificate": out.certificate(),
                "label": to_value(&stratum_label(&out, &w2)?),
            }))
        }
        Command::Divclass { op, pointed, class, w } => divclass(cli, op, *pointed, class.as_deref(), w),
        Command::VerifyIdentities => {
            let checks = verify_identities();
            let all = checks.iter().all(|c| c.holds);
            let diagnostics = checks
                .iter()
                .filter(|c| !c.holds)
                .map(|c| format!("{} fails", c.name))
                .collect();
            Ok(Output::Json {
                payload: json!({ "all_hold": all, "checks": to_value(&checks) }),
                diagnostics,
            })
        }
        Command::Discrepancy {
            direction,
            k,
            l,
            alpha,
            beta,
        } => {
            let dir: Direction = direction.parse()?;
            let b = match (dir, beta) {
                (_, Some(b)) => b.clone(),
                (Direction::GrowK, None) => Rational::zero(),
                (Direction::GrowL, None) => return Err(domain("grow_l needs beta")),
            };
            ok(to_value(&discrepancy(dir, *k, *l, alpha, &b)?))
        }
        Command::LogMmp { n, alpha, beta } => ok(to_value(&log_mmp_model(*n, alpha, beta.as_ref())?)),
        Command::StableReduce {
            kind,
            k,
            chart: j,
            spec,
            n,
            l,
            ..
        } => match kind {
            SingKind::A => stable_reduce_a(*k, *j, spec.as_deref()),
            SingKind::D => {
                let n = n.ok_or_else(|| domain("type D needs --n"))?;
                let l = l.ok_or_else(|| domain("type D needs --l"))?;
                ok(to_value(&d_stable_reduction(n, *k, l)?))
            }
        },
    }
}

fn divclass(cli: &Cli, op: &str, pointed: bool, class: Option<&str>, w: &WeightArgs) -> Res {
    match op {
        "canonical" => {
            ok(json!({ "class": canonical_class(pointed).to_string(), "data": to_value(&canonical_class(pointed)) }))
        }
        "k-m0a" => ok(json!({ "class": k_m0a(pointed).to_string(), "data": to_value(&k_m0a(pointed)) })),
        "hurwitz" => {
            let h = hurwitz_correction(pointed);
            ok(json!({ "class": h.to_string(), "data": to_value(&h) }))
        }
        "template" => {
            let t = ample_template(pointed);
            ok(json!({ "class": t.to_string(), "data": to_value(&t) }))
        }
        "transport" => {
            let h: HDivisor = serde_json::from_value(load_json(cli, class, "divisor")?)?;
            h.check()?;
            let d = transport(&h)?;
            ok(json!({ "input": h.to_string(), "class": d.to_string(), "data": to_value(&d) }))
        }
        "ample-check" => {
            let c: DivClass = serde_json::from_value(load_json(cli, class, "class")?)?;
            c.check()?;
            let a = w.alpha.as_ref().ok_or_else(|| domain("alpha is required"))?;
            let holds = ample_form_check(&c, a, w.beta.as_ref());
            ok(json!({ "class": c.to_string(), "matches_template": holds }))
        }
        other => Err(Failure::Malformed(format!("unknown divclass op {other:?}"))),
    }
}

fn stable_reduce_a(k: u32, j: Option<u32>, spec: Option<&str>) -> Res {
    let bc = base_change(k)?;
    let mut diagnostics = Vec::new();
    let selected = match j {
        Some(j) => vec![chart(k, j)?],
        None => charts(k)?,
    };
    let mut out = Vec::new();
    for c in &selected {
        let tail = tail_family(c)?;
        let fiber = central_fiber(c)?;
        let lead = leading_form_check(&tail)?;
        let mut entry = json!({
            "j": c.j,
            "chart": to_value(c),
            "tail": to_value(&tail),
            "branch_polynomial": tail.branch_polynomial()?,
            "central_fiber": to_value(&fiber),
            "leading_form": to_value(&lead),
            "excludes_total_collision": lead.excludes_total_collision(),
        });
        if let Some(s) = spec {
            let values = parse_spec(s)?;
            entry["membership"] = to_value(&verify_tail_membership(&tail, &values)?);
        }
        if fiber.genus_contribution != SingType::a(k).delta() {
            diagnostics.push(format!(
                "chart {}: genus contribution {} differs from delta",
                c.j, fiber.genus_contribution
            ));
        }
        out.push(entry);
    }
    Ok(Output::Json {
        payload: json!({
            "k": k,
            "base_change": to_value(&bc),
            "attaching_points": attaching_points(k),
            "charts": out,
        }),
        diagnostics,
    })
}
