//! Text, JSON and LaTeX renderings. Listings follow `Weight::display_cmp`.

use std::fmt::Write;

use anyhow::Result;
use clap::ValueEnum;
use ospchar::{
    Algebra, Character, Cutoff, HalfInt, TensorDecomposition, VerificationReport, VermaExpansion,
    Weight,
};
use serde_json::json;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn json_line(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn tex_coord(x: HalfInt) -> String {
    match x.to_int() {
        Some(n) => n.to_string(),
        None if x.twice() < 0 => format!("-\\tfrac{{{}}}{{2}}", -x.twice()),
        None => format!("\\tfrac{{{}}}{{2}}", x.twice()),
    }
}

pub fn tex_weight(w: &Weight) -> String {
    let eps: Vec<String> = w.coords().skip(1).map(tex_coord).collect();
    format!("({};{})", tex_coord(w.delta_coord()), eps.join(","))
}

fn sorted(mut v: Vec<Weight>) -> Vec<Weight> {
    v.sort_by(|a, b| a.display_cmp(b));
    v
}

pub fn roots(alg: Algebra, format: Format) -> Result<String> {
    let r = alg.positive_roots();
    let (even, odd) = (sorted(r.even), sorted(r.odd));
    let rho = alg.rho();
    Ok(match format {
        Format::Json => json_line(&json!({
            "algebra": alg,
            "rho": rho.to_string(),
            "even": even.iter().map(Weight::to_string).collect::<Vec<_>>(),
            "odd": odd.iter().map(Weight::to_string).collect::<Vec<_>>(),
        }))?,
        Format::Text => {
            let list = |v: &[Weight]| {
                v.iter()
                    .map(|w| format!("({w})"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!(
                "{alg}\nrho = ({rho})\neven positive roots: {}\nodd positive roots:  {}\n",
                list(&even),
                list(&odd)
            )
        }
        Format::Latex => {
            let list = |v: &[Weight]| v.iter().map(tex_weight).collect::<Vec<_>>().join(",\\ ");
            format!(
                "\\rho = {}\\\\\n\\Delta_0^+ = \\{{{}\\}}\\\\\n\\Delta_1^+ = \\{{{}\\}}\n",
                tex_weight(&rho),
                list(&even),
                list(&odd)
            )
        }
    })
}

fn signed(out: &mut String, first: &mut bool, negative: bool, magnitude: i64, tex: bool) {
    out.push_str(match (*first, negative) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    });
    *first = false;
    if magnitude != 1 {
        let _ = write!(out, "{magnitude}{}", if tex { " " } else { "·" });
    }
}

fn tex_expansion(e: &VermaExpansion) -> String {
    let mut s = format!("L_{{{}}} = ", tex_weight(&e.lambda));
    let mut first = true;
    for (w, k) in e.sorted_finite_terms() {
        signed(&mut s, &mut first, k < 0, k.abs(), true);
        let _ = write!(s, "M_{{{}}}", tex_weight(&w));
    }
    for t in &e.tails {
        signed(&mut s, &mut first, t.sign_at_start < 0, t.magnitude, true);
        let upper = t.end_q.map_or("\\infty".to_string(), |q| q.to_string());
        let _ = write!(
            s,
            "\\sum_{{q={0}}}^{{{upper}}} (-1)^{{q-{0}}} M_{{{1} - (q-{0}){2}}}",
            t.start_q,
            tex_weight(&t.base),
            tex_weight(&t.step)
        );
    }
    if first {
        s.push('0');
    }
    s + "\n"
}

/// The first few terms of every tail written out, then an ellipsis.
fn text_preview(e: &VermaExpansion) -> Option<String> {
    let cut = e
        .tails
        .iter()
        .map(|t| t.term(t.start_q + 2).delta_coord())
        .min()?;
    let mut terms: Vec<(Weight, i64)> = e.terms_down_to(cut).into_iter().collect();
    terms.sort_by(|a, b| a.0.display_cmp(&b.0));
    let mut s = format!("L_({}) = ", e.lambda);
    let mut first = true;
    for (w, k) in terms {
        signed(&mut s, &mut first, k < 0, k.abs(), false);
        let _ = write!(s, "M_({w})");
    }
    Some(s + " …")
}

pub fn expansion(e: &VermaExpansion, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => match text_preview(e) {
            Some(p) => format!("{e}\n{p}\n"),
            None => format!("{e}\n"),
        },
        Format::Json => json_line(&e.to_json())?,
        Format::Latex => tex_expansion(e),
    })
}

pub fn character(lambda: &Weight, c: &Character, format: Format) -> Result<String> {
    let scope = match c.min_delta() {
        Cutoff::Exact => "exact, full support".to_string(),
        Cutoff::Delta(d) => format!("exact for δ-coordinate >= {d}, lower terms omitted"),
    };
    let terms = c.sorted_terms();
    Ok(match format {
        Format::Json => json_line(&c.to_json())?,
        Format::Text => {
            let mut s = format!(
                "ch L_({lambda}) in {} ({scope}), {} terms\n",
                c.algebra(),
                terms.len()
            );
            let width = terms
                .iter()
                .map(|(_, k)| k.to_string().len())
                .max()
                .unwrap_or(1);
            for (w, k) in terms {
                let _ = writeln!(s, "  {k:>width$} e^({w})");
            }
            s
        }
        Format::Latex => {
            let mut s = format!(
                "% {scope}\n\\mathrm{{ch}}\\, L_{{{}}} = ",
                tex_weight(lambda)
            );
            let mut first = true;
            for (w, k) in terms {
                signed(&mut s, &mut first, k < 0, k.abs(), true);
                let _ = write!(s, "e^{{{}}}", tex_weight(&w));
            }
            if first {
                s.push('0');
            }
            if c.min_delta() != Cutoff::Exact {
                s.push_str(" + \\cdots");
            }
            s + "\n"
        }
    })
}

pub fn dimension(alg: Algebra, lambda: &Weight, dim: i128, format: Format) -> Result<String> {
    Ok(match format {
        Format::Text => format!("{dim}\n"),
        Format::Json => json_line(&json!({
            "algebra": alg,
            "weight": lambda.to_string(),
            "dimension": dim.to_string(),
        }))?,
        Format::Latex => format!("\\dim L_{{{}}} = {dim}\n", tex_weight(lambda)),
    })
}

pub fn tensor(t: &TensorDecomposition, format: Format) -> Result<String> {
    let parts = t.sorted_constituents();
    Ok(match format {
        Format::Json => json_line(&t.to_json())?,
        Format::Text => {
            let how = if t.completely_reducible {
                "completely reducible"
            } else {
                "composition factors, not completely reducible"
            };
            let mut s = format!("L_({}) ⊗ L_δ in {}: {how}\n", t.lambda, t.alg);
            for (w, k) in parts {
                let mult = if k == 1 {
                    String::new()
                } else {
                    format!("{k}·")
                };
                let _ = writeln!(s, "  {mult}L_({w})");
            }
            for (a, b) in &t.height_ties {
                let _ = writeln!(s, "  note: ({a}) and ({b}) share a block and a height");
            }
            s
        }
        Format::Latex => {
            let (op, bracket) = if t.completely_reducible {
                ("\\oplus", false)
            } else {
                ("+", true)
            };
            let wrap = |x: String| if bracket { format!("[{x}]") } else { x };
            let items: Vec<String> = parts
                .into_iter()
                .map(|(w, k)| {
                    let mult = if k == 1 {
                        String::new()
                    } else {
                        format!("{k}")
                    };
                    format!("{mult}{}", wrap(format!("L_{{{}}}", tex_weight(&w))))
                })
                .collect();
            format!(
                "{} = {}\n",
                wrap(format!(
                    "L_{{{}}} \\otimes L_\\delta",
                    tex_weight(&t.lambda)
                )),
                items.join(&format!(" {op} "))
            )
        }
    })
}

pub fn block(
    alg: Algebra,
    lambda: &Weight,
    other: Option<&Weight>,
    format: Format,
) -> Result<String> {
    let key = alg.block_key(lambda)?;
    let other_key = other.map(|o| alg.block_key(o)).transpose()?;
    let same = other_key.as_ref().map(|k| *k == key);
    Ok(match format {
        Format::Json => json_line(&json!({
            "algebra": alg,
            "weight": lambda.to_string(),
            "key": key,
            "other": other.map(Weight::to_string),
            "other_key": other_key,
            "same_block": same,
        }))?,
        Format::Text | Format::Latex => {
            let mut s = format!("({lambda}): {key}\n");
            if let (Some(o), Some(k), Some(same)) = (other, &other_key, same) {
                let _ = writeln!(s, "({o}): {k}");
                let _ = writeln!(s, "same block: {}", if same { "yes" } else { "no" });
            }
            s
        }
    })
}

pub fn reports(reports: &[VerificationReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => json_line(&reports)?,
        Format::Text | Format::Latex => reports.iter().map(|r| format!("{r}\n")).collect(),
    })
}
