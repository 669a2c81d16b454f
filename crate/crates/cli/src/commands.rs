use num_rational::BigRational;
use qsl2::clebsch::cg_table;
use qsl2::rep::{rep_of_element, Matrix};
use qsl2::scalars::{evaluate_at, HalfInt, RadicalScalar};
use qsl2::tensorops::{
    adjoint_orbit, adjoint_orbit_closed_form, central_element, central_report, compare_orbit_constructions,
    reduced_matrix_element, reduced_me_closed_form, reduced_me_corrected, tensor_operator_from_rep,
    verify_orbit_relations,
};
use qsl2::uqsl2::{parse_element, AlgebraElement};
use serde_json::{json, Map, Value};

use crate::output::{CliError, Report, Status};

pub struct Context {
    pub numeric: Option<BigRational>,
    pub max_spin: HalfInt,
}

impl Context {
    fn spin(&self, s: &str) -> Result<HalfInt, CliError> {
        let j: HalfInt = s.parse()?;
        if j < HalfInt::ZERO {
            return Err(CliError::Range(format!("spin {j} is negative")));
        }
        if j > self.max_spin {
            return Err(CliError::Range(format!(
                "spin {j} exceeds the cap {} (set QSL2_MAX_SPIN to raise it)",
                self.max_spin
            )));
        }
        Ok(j)
    }

    fn integer_spin(&self, s: &str, min: i64) -> Result<i64, CliError> {
        let j = self.spin(s)?;
        match j.as_int() {
            Some(v) if v >= min => Ok(v),
            _ => Err(CliError::Range(format!("spin {j} must be an integer ≥ {min}"))),
        }
    }

    fn scalar(&self, x: &RadicalScalar) -> Result<(Value, String), CliError> {
        match &self.numeric {
            None => Ok((
                json!({ "display": x.to_string(), "exact": x }),
                x.to_string(),
            )),
            Some(t0) => {
                let v = evaluate_at(x, t0)?;
                Ok((json!(v), v.to_string()))
            }
        }
    }

    fn element(&self, x: &AlgebraElement) -> Result<(Value, String), CliError> {
        let Some(t0) = &self.numeric else {
            return Ok((json!({ "display": x.to_string(), "terms": x }), x.to_string()));
        };
        let mut terms = Vec::new();
        let mut text = String::new();
        for (m, c) in x.terms().rev() {
            let v = evaluate_at(c, t0)?;
            terms.push(json!({ "monomial": m, "value": v }));
            let mag = if text.is_empty() {
                if v < 0.0 {
                    text.push('-');
                }
                v.abs()
            } else {
                text.push_str(if v < 0.0 { " - " } else { " + " });
                v.abs()
            };
            if m.is_unit() {
                text.push_str(&mag.to_string());
            } else {
                text.push_str(&format!("{mag} * {m}"));
            }
        }
        if text.is_empty() {
            text.push('0');
        }
        Ok((json!({ "terms": terms }), text))
    }

    fn matrix(&self, x: &Matrix) -> Result<(Value, String), CliError> {
        let mut rows = Vec::new();
        let mut lines = Vec::new();
        for r in 0..x.rows() {
            let mut row = Vec::new();
            let mut cells = Vec::new();
            for c in 0..x.cols() {
                let (v, s) = match &self.numeric {
                    None => (json!(x.get(r, c).to_string()), x.get(r, c).to_string()),
                    Some(_) => self.scalar(x.get(r, c))?,
                };
                row.push(v);
                cells.push(s);
            }
            rows.push(Value::Array(row));
            lines.push(format!("[{}]", cells.join(", ")));
        }
        Ok((Value::Array(rows), lines.join("\n")))
    }

    fn point(&self) -> Value {
        match &self.numeric {
            None => Value::Null,
            Some(t0) => json!(t0.to_string()),
        }
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn normal_form(ctx: &Context, expr: &str) -> Result<Report, CliError> {
    let x = parse_element(expr)?;
    let (element, text) = ctx.element(&x)?;
    Ok(Report {
        json: json!({ "input": expr, "t0": ctx.point(), "element": element }),
        text,
        csv: None,
        status: Status::Verified,
    })
}

pub fn rep(ctx: &Context, l: &str, expr: &str) -> Result<Report, CliError> {
    let l = ctx.spin(l)?;
    let x = parse_element(expr)?;
    let m = rep_of_element(l, &x)?;
    let (rows, text) = ctx.matrix(&m.matrix)?;
    Ok(Report {
        json: json!({ "l": l, "input": expr, "t0": ctx.point(), "rows": rows }),
        text,
        csv: None,
        status: Status::Verified,
    })
}

pub fn cg(ctx: &Context, k: &str, l: &str) -> Result<Report, CliError> {
    let (k, l) = (ctx.spin(k)?, ctx.spin(l)?);
    let table = cg_table(k, l)?;
    let mut blocks = Vec::new();
    let mut text = format!("CG coefficients (k p, l n | j m) for k = {k}, l = {l}\n");
    let mut csv = String::from("j,m,p,n,value\n");
    for j in table.js().into_iter().rev() {
        text.push_str(&format!("j = {j}\n"));
        let mut columns = Vec::new();
        for m in j.weights() {
            text.push_str(&format!("  m = {m}\n"));
            let mut entries = Vec::new();
            for (p, n, c) in table.column(j, m) {
                let (v, s) = ctx.scalar(&c)?;
                text.push_str(&format!("    p = {p}, n = {n}: {s}\n"));
                csv.push_str(&format!("{j},{m},{p},{n},{s}\n"));
                entries.push(json!({ "p": p, "n": n, "value": v }));
            }
            columns.push(json!({ "m": m, "entries": entries }));
        }
        blocks.push(json!({ "j": j, "columns": columns }));
    }
    Ok(Report {
        json: json!({ "k": k, "l": l, "t0": ctx.point(), "blocks": blocks }),
        text,
        csv: Some(csv),
        status: Status::Verified,
    })
}

/// Exit status is success only when the quotient test is consistent and the
/// extracted value equals the quoted closed form.
pub fn wigner_eckart(ctx: &Context, l: &str, j: &str) -> Result<Report, CliError> {
    let li = ctx.integer_spin(l, 1)?;
    let j = ctx.spin(j)?;
    let hl = HalfInt::int(li);
    let closed = reduced_me_closed_form(hl, j)?;
    let corrected = reduced_me_corrected(hl, j)?;
    let t = tensor_operator_from_rep(li, j)?;
    let me = reduced_matrix_element(&t, &cg_table(hl, j)?)?;
    let equal = me.alpha == closed;
    let (alpha_v, alpha_s) = ctx.scalar(&me.alpha)?;
    let (closed_v, closed_s) = ctx.scalar(&closed)?;
    let (corr_v, corr_s) = ctx.scalar(&corrected)?;
    let text = format!(
        "l = {hl}, j = {j}\n\
         alpha (extracted):   {alpha_s}\n\
         alpha (closed form): {closed_s}\n\
         alpha ([2j+1] in place of [2j+1]!): {corr_s}\n\
         consistent: {}\n\
         witnesses: {}\n\
         extracted equals closed form: {}\n\
         extracted equals corrected form: {}",
        verdict(me.consistent),
        me.witnesses.len(),
        verdict(equal),
        verdict(me.alpha == corrected),
    );
    Ok(Report {
        json: json!({
            "l": hl,
            "j": j,
            "t0": ctx.point(),
            "alpha": alpha_v,
            "alpha_closed_form": closed_v,
            "alpha_corrected": corr_v,
            "consistent": me.consistent,
            "witnesses": me.witnesses,
            "equals_closed_form": equal,
            "equals_corrected": me.alpha == corrected,
        }),
        text,
        csv: None,
        status: Status::from_bool(me.consistent && equal),
    })
}

pub fn center(ctx: &Context, j: &str) -> Result<Report, CliError> {
    let j = ctx.integer_spin(j, 1)?;
    let c = central_element(j)?;
    let report = central_report(&c);
    let (element, element_text) = ctx.element(&c)?;
    let mut text = format!("C = {element_text}\n");
    let mut commutes = Map::new();
    for (g, ok) in &report.commutes {
        text.push_str(&format!("[C, {g}] = 0: {}\n", verdict(*ok)));
        commutes.insert(g.clone(), json!(ok));
    }
    let mut ad = Map::new();
    for (g, ok) in &report.ad_invariant {
        text.push_str(&format!("ad_{g}(C) = ε({g}) C: {}\n", verdict(*ok)));
        ad.insert(g.clone(), json!(ok));
    }
    text.push_str(&format!(
        "characterizations agree: {}\ncentral: {}",
        verdict(report.agree),
        verdict(report.central)
    ));
    Ok(Report {
        json: json!({
            "j": HalfInt::int(j),
            "t0": ctx.point(),
            "element": element,
            "commutes": commutes,
            "ad_invariant": ad,
            "agree": report.agree,
            "central": report.central,
        }),
        text,
        csv: None,
        status: Status::from_bool(report.central),
    })
}

/// Exit status follows the relation checks on the printed basis; a
/// disagreement between the two constructions is reported but not fatal.
pub fn adjoint_basis(ctx: &Context, l: &str, closed_form: bool) -> Result<Report, CliError> {
    let l = ctx.integer_spin(l, 1)?;
    let basis = if closed_form {
        adjoint_orbit_closed_form(l)?
    } else {
        adjoint_orbit(l)?
    };
    let relations = verify_orbit_relations(&basis);
    let cmp = compare_orbit_constructions(l)?;
    let mut vectors = Vec::new();
    let mut text = String::new();
    for m in basis.weights() {
        let (v, s) = ctx.element(basis.lambda(m))?;
        text.push_str(&format!("lambda[{l}][{m}] = {s}\n"));
        vectors.push(json!({ "m": HalfInt::int(m), "element": v }));
    }
    text.push_str(&format!(
        "relations hold: {}\nrecursion equals closed form: {}",
        verdict(relations.holds()),
        verdict(cmp.equal)
    ));
    for (m, d) in cmp.mismatched_weights.iter().zip(&cmp.differences) {
        text.push_str(&format!("\n  mismatch at m = {m}: closed form - recursion = {d}"));
    }
    Ok(Report {
        json: json!({
            "l": HalfInt::int(l),
            "construction": basis.construction,
            "t0": ctx.point(),
            "vectors": vectors,
            "relations": relations,
            "relations_hold": relations.holds(),
            "constructions_equal": cmp.equal,
            "mismatched_weights": cmp.mismatched_weights,
            "differences": cmp.differences,
        }),
        text,
        csv: None,
        status: Status::from_bool(relations.holds()),
    })
}
