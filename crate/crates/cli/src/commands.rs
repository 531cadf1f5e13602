//! One function per verb. Each returns a [`Report`] and an exit status.

use serde_json::{json, Value};
use tabinv_core::dyck::{
    catalan_triangle, enumerate_paths, full_return_table, path_to_syt, return_table, syt_to_path, xi_via_returns,
    DyckPath,
};
use tabinv_core::enumerate::{histogram, Limit};
use tabinv_core::genfun::{chi, depth_sequences, tableau_from_depths, two_col_rect_xi, two_row_xi, xi_by_sum};
use tabinv_core::{Content, Filling, QPolynomial, Shape};

use crate::input::{parse_tableau, parse_tableau_file};
use crate::report::*;
use crate::{Command, Common, Method, ShapeContent};

pub type Outcome = Result<(Report, u8), String>;

pub fn dispatch(cmd: Command) -> (Common, Outcome) {
    match cmd {
        Command::Chi { input, tableau, common } => {
            let out = chi_cmd(input, tableau);
            (common, out)
        }
        Command::Xi { sc, method, common } => {
            let out = xi_cmd(&sc, method, common.limit());
            (common, out)
        }
        Command::Hist { sc, common } => {
            let out = hist_cmd(&sc, common.limit());
            (common, out)
        }
        Command::Tables { shape, rows, common } => {
            let out = tables_cmd(shape.as_ref(), rows, common.limit());
            (common, out)
        }
        Command::Dyck { shape, path, tableau, common } => {
            let out = dyck_cmd(shape.as_ref(), path.as_deref(), tableau.as_deref(), common.limit());
            (common, out)
        }
        Command::Verify { sc, oracle, common } => {
            let out = verify_cmd(&sc, oracle, common.limit());
            (common, out)
        }
        Command::Depths { shape, common } => {
            let out = depths_cmd(&shape);
            (common, out)
        }
    }
}

fn err(e: impl ToString) -> String {
    let msg = e.to_string();
    if msg.contains("enumeration cap") {
        format!("{msg} (pass --force or raise --cap)")
    } else {
        msg
    }
}

fn resolve(sc: &ShapeContent) -> Result<(Shape, Content), String> {
    Ok((sc.shape.clone(), sc.content.resolve(&sc.shape)?))
}

fn chi_cmd(input: Option<std::path::PathBuf>, tableau: Option<String>) -> Outcome {
    let t = match (input, tableau) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_tableau_file(&text)?
        }
        (None, Some(s)) => parse_tableau(&s)?,
        (None, None) => return Err("give --input or --tableau".into()),
    };
    let c = chi(&t).map_err(err)?;
    let text = format!("chi(q) = {}\ncoefficients: {}\n", c.to_human(), coeff_list(&c));
    let json = json!({
        "tableau": rows_json(t.rows()),
        "lambda": shape_json(t.shape()),
        "mu": content_json(t.content()),
        "chi": poly_json(&c),
    });
    Ok((Report { text, json, csv: poly_csv(&c, "coeff") }, 0))
}

/// ξ by one method, with the method's reported name.
fn xi_by(shape: &Shape, mu: &Content, method: Method, limit: Limit) -> Result<(QPolynomial, &'static str), String> {
    match method {
        Method::Sum => {
            limit.check(shape.size()).map_err(err)?;
            Ok((xi_by_sum(shape, mu).map_err(err)?, "sum"))
        }
        Method::Dyck => {
            if !mu.is_standard() {
                return Err("--method dyck needs standard content".into());
            }
            Ok((xi_via_returns(shape, limit).map_err(err)?, "dyck"))
        }
        Method::Closed => {
            if shape.num_rows() <= 2 {
                Ok((two_row_xi(shape, mu).map_err(err)?, "two_row"))
            } else if is_two_col_rect(shape, mu) {
                Ok((two_col_rect_xi(shape.num_rows()), "two_col_rect"))
            } else {
                Err(format!("no closed form for shape {shape} with content {mu}"))
            }
        }
    }
}

fn is_two_col_rect(shape: &Shape, mu: &Content) -> bool {
    mu.is_standard() && shape.parts().iter().all(|&p| p == 2)
}

fn xi_report(shape: &Shape, mu: &Content, xi: &QPolynomial, method: &str) -> Report {
    let text = format!("xi(q) = {}\ncoefficients: {}\nmethod: {method}\n", xi.to_human(), coeff_list(xi));
    let json = json!({
        "lambda": shape_json(shape),
        "mu": content_json(mu),
        "xi": poly_json(xi),
        "method": method,
    });
    Report { text, json, csv: poly_csv(xi, "coeff") }
}

fn xi_cmd(sc: &ShapeContent, method: Method, limit: Limit) -> Outcome {
    let (shape, mu) = resolve(sc)?;
    let (xi, name) = xi_by(&shape, &mu, method, limit)?;
    Ok((xi_report(&shape, &mu, &xi, name), 0))
}

fn hist_cmd(sc: &ShapeContent, limit: Limit) -> Outcome {
    let (shape, mu) = resolve(sc)?;
    let h = histogram(&shape, &mu, limit).map_err(err)?;
    let mut text = format!("total: {}\n", h.total());
    let mut counts = serde_json::Map::new();
    let mut csv = vec![vec!["k".to_string(), "count".to_string()]];
    for (k, n) in h.counts() {
        text.push_str(&format!("{k}: {n}\n"));
        counts.insert(k.to_string(), num(n));
        csv.push(vec![k.to_string(), n.to_string()]);
    }
    let json = json!({ "lambda": shape_json(&shape), "mu": content_json(&mu), "counts": counts });
    Ok((Report { text, json, csv }, 0))
}

fn tables_cmd(shape: Option<&Shape>, rows: usize, limit: Limit) -> Outcome {
    let Some(shape) = shape else {
        let tri = catalan_triangle(rows);
        let text = tri
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ") + "\n")
            .collect();
        let json = json!({
            "catalan_triangle": tri.iter().map(|r| r.iter().map(num).collect::<Vec<_>>()).collect::<Vec<_>>(),
        });
        let mut csv = vec![vec!["alpha".to_string(), "beta".to_string(), "ballot".to_string()]];
        for (a, r) in tri.iter().enumerate() {
            for (b, x) in r.iter().enumerate() {
                csv.push(vec![a.to_string(), b.to_string(), x.to_string()]);
            }
        }
        return Ok((Report { text, json, csv }, 0));
    };
    let profiles = return_table(shape, limit).map_err(err)?;
    let full = full_return_table(shape, limit).map_err(err)?;
    let mut text = format!("returns by profile for {shape}:\n");
    let mut csv = vec![vec!["k".to_string(), "count".to_string()]];
    let mut plist = Vec::new();
    for (p, n) in &profiles {
        text.push_str(&format!("{p}: {n}\n"));
        let ks: Vec<String> = p.counts().iter().map(|k| k.to_string()).collect();
        csv.push(vec![ks.join(";"), n.to_string()]);
        plist.push(json!({ "k": p.counts().iter().map(num).collect::<Vec<_>>(), "count": num(n) }));
    }
    text.push_str("full returns:\n");
    let mut fmap = serde_json::Map::new();
    for (k, n) in &full {
        text.push_str(&format!("{k}: {n}\n"));
        fmap.insert(k.to_string(), num(n));
    }
    let json = json!({ "lambda": shape_json(shape), "profiles": plist, "full_returns": fmap });
    Ok((Report { text, json, csv }, 0))
}

fn path_json(p: &DyckPath) -> Value {
    json!({
        "steps": p.to_string(),
        "profile": p.return_profile().counts().iter().map(num).collect::<Vec<_>>(),
        "full_returns": num(p.full_returns()),
    })
}

fn path_csv_row(p: &DyckPath) -> Vec<String> {
    let prof: Vec<String> = p.return_profile().counts().iter().map(|k| k.to_string()).collect();
    vec![p.to_string(), prof.join(";"), p.full_returns().to_string()]
}

fn single_path(p: &DyckPath, t: &Filling) -> Report {
    let degrees = p.return_degrees();
    let mut text = format!("path: {p}\ntableau: {}\n", rows_inline(t.rows()));
    for (i, (v, d)) in p.points().iter().skip(1).zip(&degrees).enumerate() {
        let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("v_{} = ({}) degree {d}\n", i + 1, coords.join(",")));
    }
    text.push_str(&format!("profile: {}\nfull returns: {}\n", p.return_profile(), p.full_returns()));
    let mut json = path_json(p);
    json["tableau"] = rows_json(t.rows());
    json["degrees"] = Value::Array(degrees.iter().map(num).collect());
    let csv = vec![
        vec!["steps".into(), "profile".into(), "full_returns".into()],
        path_csv_row(p),
    ];
    Report { text, json, csv }
}

fn dyck_cmd(shape: Option<&Shape>, path: Option<&str>, tableau: Option<&str>, limit: Limit) -> Outcome {
    if let Some(s) = path {
        let p: DyckPath = s.parse().map_err(err)?;
        let t = path_to_syt(&p);
        return Ok((single_path(&p, &t), 0));
    }
    if let Some(s) = tableau {
        let t = parse_tableau(s)?;
        let p = syt_to_path(&t).map_err(err)?;
        return Ok((single_path(&p, &t), 0));
    }
    let shape = shape.ok_or("give --shape, --path or --tableau")?;
    limit.check(shape.size()).map_err(err)?;
    let mut text = String::new();
    let mut list = Vec::new();
    let mut csv = vec![vec!["steps".into(), "profile".into(), "full_returns".into()]];
    for p in enumerate_paths(shape) {
        text.push_str(&format!("{p}  profile {}  full {}\n", p.return_profile(), p.full_returns()));
        list.push(path_json(&p));
        csv.push(path_csv_row(&p));
    }
    text.push_str(&format!("{} paths\n", list.len()));
    let json = json!({ "lambda": shape_json(shape), "paths": list });
    Ok((Report { text, json, csv }, 0))
}

fn verify_cmd(sc: &ShapeContent, oracle: bool, limit: Limit) -> Outcome {
    let (shape, mu) = resolve(sc)?;
    let mut results: Vec<(QPolynomial, &str)> = Vec::new();
    results.push(xi_by(&shape, &mu, Method::Sum, limit)?);
    if mu.is_standard() {
        results.push(xi_by(&shape, &mu, Method::Dyck, limit)?);
    }
    if shape.num_rows() <= 2 || is_two_col_rect(&shape, &mu) {
        results.push(xi_by(&shape, &mu, Method::Closed, limit)?);
    }
    if oracle {
        let h = histogram(&shape, &mu, limit).map_err(err)?;
        let p = QPolynomial::from_coeffs(h.to_coefficients().into_iter().map(num_bigint::BigInt::from));
        results.push((p, "hist"));
    }
    let results: Vec<(&str, QPolynomial)> = results.into_iter().map(|(p, n)| (n, p)).collect();
    let names: Vec<&str> = results.iter().map(|(n, _)| *n).collect();
    let (base_name, base) = &results[0];
    let mismatch = results[1..].iter().find(|(_, p)| p != base).map(|(name, p)| {
        let len = base.coeffs().len().max(p.coeffs().len());
        let k = (0..len).find(|&k| base.coeff(k) != p.coeff(k)).unwrap_or(0);
        (*name, k, base.coeff(k), p.coeff(k))
    });
    let mut json = json!({
        "lambda": shape_json(&shape),
        "mu": content_json(&mu),
        "methods": names,
        "agree": mismatch.is_none(),
        "xi": poly_json(base),
    });
    let mut csv = vec![vec!["method".to_string(), "coefficients".to_string()]];
    csv.extend(results.iter().map(|(n, p)| vec![n.to_string(), coeff_list(p)]));
    match mismatch {
        None => {
            let text = format!("{}: OK\nxi(q) = {}\n", names.join(" == "), base.to_human());
            Ok((Report { text, json, csv }, 0))
        }
        Some((name, k, a, b)) => {
            let text = format!("MISMATCH: {base_name} and {name} differ at q^{k}: {a} vs {b}\n");
            json["mismatch"] = json!({ "method": name, "k": num(k), "expected": num(&a), "got": num(&b) });
            Ok((Report { text, json, csv }, 1))
        }
    }
}

fn depths_cmd(shape: &Shape) -> Outcome {
    if shape.num_cols() > 2 {
        return Err(format!("shape {shape} has more than two columns"));
    }
    let (n, m) = (shape.num_rows(), shape.col_height(1));
    let mut text = String::new();
    let mut list = Vec::new();
    let mut csv = vec![vec!["c".to_string(), "tableau".to_string()]];
    for c in depth_sequences(n, m).map_err(err)? {
        let t = tableau_from_depths(&c, shape).map_err(err)?;
        text.push_str(&format!("{c}  {}\n", rows_inline(t.rows())));
        let cs: Vec<String> = c.values().iter().map(|x| x.to_string()).collect();
        csv.push(vec![cs.join(";"), rows_inline(t.rows())]);
        list.push(json!({ "c": c.values().iter().map(num).collect::<Vec<_>>(), "tableau": rows_json(t.rows()) }));
    }
    text.push_str(&format!("{} sequences\n", list.len()));
    let json = json!({ "lambda": shape_json(shape), "sequences": list });
    Ok((Report { text, json, csv }, 0))
}
