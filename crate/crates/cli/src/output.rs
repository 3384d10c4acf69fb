use std::io::{self, Write};

use clap::ValueEnum;
use monadj::{
    BrianconSkodaReport, EquivalenceResult, Exponent, MonomialIdeal, NecessityWitness,
    NewtonPolyhedron, Rational, ReesValuation, SubadditivityReport,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::Value;

use crate::document::{format_monomial, IdealDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub(crate) struct Membership {
    pub member: bool,
    pub integral_closure_member: bool,
    pub adjoint_member: bool,
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::other)?;
    writeln!(out)
}

fn big(value: &BigInt) -> Value {
    match value.to_u64() {
        Some(v) => Value::from(v),
        None => Value::String(value.to_string()),
    }
}

fn vectors(exps: &[Exponent]) -> Vec<Vec<u64>> {
    exps.iter().map(|e| e.entries().to_vec()).collect()
}

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

fn monomials(exps: &[Exponent], variables: &[String]) -> String {
    let parts: Vec<String> = exps.iter().map(|e| format_monomial(e, variables)).collect();
    parts.join(", ")
}

/// Left-aligned columns separated by two spaces.
fn table(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> io::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for row in rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub(crate) fn ideal(out: &mut dyn Write, fmt: Format, variables: &[String], ideal: &MonomialIdeal) -> io::Result<()> {
    match fmt {
        Format::Json => write_json(out, &IdealDocument::from_ideal(variables, ideal)),
        Format::Text => {
            writeln!(out, "generators ({}): {}", ideal.len(), monomials(ideal.generators(), variables))
        }
    }
}

pub(crate) fn facets(out: &mut dyn Write, fmt: Format, variables: &[String], p: &NewtonPolyhedron) -> io::Result<()> {
    match fmt {
        Format::Json => {
            let facets: Vec<Value> = p
                .facets()
                .iter()
                .map(|f| {
                    serde_json::json!({
                        "normal": f.normal().iter().map(big).collect::<Vec<_>>(),
                        "offset": big(f.offset()),
                    })
                })
                .collect();
            write_json(out, &serde_json::json!({ "variables": variables, "facets": facets }))
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = p
                .facets()
                .iter()
                .map(|f| {
                    let terms: Vec<String> = f
                        .normal()
                        .iter()
                        .zip(variables)
                        .filter(|(h, _)| h.to_u64() != Some(0))
                        .map(|(h, v)| if h.to_u64() == Some(1) { v.clone() } else { format!("{h}{v}") })
                        .collect();
                    vec![terms.join(" + "), ">=".into(), f.offset().to_string()]
                })
                .collect();
            table(out, &["inequality", "", "offset"], &rows)
        }
    }
}

pub(crate) fn rees(out: &mut dyn Write, fmt: Format, variables: &[String], rees: &[ReesValuation]) -> io::Result<()> {
    match fmt {
        Format::Json => {
            let vals: Vec<Value> = rees
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "weights": r.valuation.weights(),
                        "value": r.value,
                        "jacobian_value": r.valuation.jacobian_value(),
                    })
                })
                .collect();
            write_json(out, &serde_json::json!({ "variables": variables, "valuations": vals }))
        }
        Format::Text => {
            let rows: Vec<Vec<String>> = rees
                .iter()
                .map(|r| {
                    vec![
                        format!("{:?}", r.valuation.weights()),
                        r.value.to_string(),
                        r.valuation.jacobian_value().to_string(),
                    ]
                })
                .collect();
            table(out, &["weights", "value", "jacobian"], &rows)
        }
    }
}

pub(crate) fn member(
    out: &mut dyn Write,
    fmt: Format,
    variables: &[String],
    e: &Exponent,
    m: &Membership,
) -> io::Result<()> {
    match fmt {
        Format::Json => write_json(
            out,
            &serde_json::json!({
                "exponent": e.entries(),
                "monomial": format_monomial(e, variables),
                "member": m.member,
                "integral_closure_member": m.integral_closure_member,
                "adjoint_member": m.adjoint_member,
            }),
        ),
        Format::Text => {
            let rows = vec![
                vec!["ideal".into(), m.member.to_string()],
                vec!["integral closure".into(), m.integral_closure_member.to_string()],
                vec!["adjoint".into(), m.adjoint_member.to_string()],
            ];
            writeln!(out, "monomial: {}", format_monomial(e, variables))?;
            table(out, &["in", "member"], &rows)
        }
    }
}

pub(crate) fn subadditivity(
    out: &mut dyn Write,
    fmt: Format,
    variables: &[String],
    r: &SubadditivityReport,
) -> io::Result<()> {
    match fmt {
        Format::Json => {
            let witnesses: Vec<Value> = r
                .witnesses
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "generator": w.generator.entries(),
                        "factor_i": w.factor_i.entries(),
                        "factor_j": w.factor_j.entries(),
                        "interior_point_b": rationals(&w.interior_point_b),
                        "interior_point_c": rationals(&w.interior_point_c),
                    })
                })
                .collect();
            write_json(
                out,
                &serde_json::json!({
                    "property": "subadditivity",
                    "holds": r.holds,
                    "variables": variables,
                    "adjoint_of_product": vectors(r.adjoint_of_product.generators()),
                    "product_of_adjoints": vectors(r.product_of_adjoints.generators()),
                    "uncovered": vectors(&r.uncovered),
                    "witnesses": witnesses,
                }),
            )
        }
        Format::Text => {
            writeln!(out, "subadditivity: {}", if r.holds { "holds" } else { "FAILS" })?;
            writeln!(out, "adj(IJ):        {}", monomials(r.adjoint_of_product.generators(), variables))?;
            writeln!(out, "adj(I)·adj(J):  {}", monomials(r.product_of_adjoints.generators(), variables))?;
            if !r.uncovered.is_empty() {
                writeln!(out, "uncovered:      {}", monomials(&r.uncovered, variables))?;
            }
            let rows: Vec<Vec<String>> = r
                .witnesses
                .iter()
                .map(|w| {
                    vec![
                        format_monomial(&w.generator, variables),
                        format_monomial(&w.factor_i, variables),
                        format_monomial(&w.factor_j, variables),
                        format!("({})", rationals(&w.interior_point_b).join(", ")),
                        format!("({})", rationals(&w.interior_point_c).join(", ")),
                    ]
                })
                .collect();
            table(out, &["generator", "in adj(I)", "in adj(J)", "b", "c"], &rows)
        }
    }
}

pub(crate) fn necessity(
    out: &mut dyn Write,
    fmt: Format,
    variables: &[String],
    witnesses: &[NecessityWitness],
) -> io::Result<()> {
    match fmt {
        Format::Json => {
            let list: Vec<Value> = witnesses
                .iter()
                .map(|w| {
                    serde_json::json!({
                        "dropped_valuation": w.dropped_valuation.weights(),
                        "n": w.n,
                        "e": w.e.entries(),
                    })
                })
                .collect();
            write_json(
                out,
                &serde_json::json!({
                    "property": "rees-necessity",
                    "holds": true,
                    "variables": variables,
                    "witnesses": list,
                }),
            )
        }
        Format::Text => {
            writeln!(out, "rees-necessity: holds")?;
            let rows: Vec<Vec<String>> = witnesses
                .iter()
                .map(|w| {
                    vec![
                        format!("{:?}", w.dropped_valuation.weights()),
                        w.n.to_string(),
                        format_monomial(&w.e, variables),
                    ]
                })
                .collect();
            table(out, &["dropped", "n", "monomial"], &rows)
        }
    }
}

pub(crate) fn briancon_skoda(
    out: &mut dyn Write,
    fmt: Format,
    variables: &[String],
    generator_count: usize,
    r: &BrianconSkodaReport,
) -> io::Result<()> {
    match fmt {
        Format::Json => write_json(
            out,
            &serde_json::json!({
                "property": "briancon-skoda",
                "holds": r.holds,
                "variables": variables,
                "power": r.power,
                "generator_count": generator_count,
                "closure_power": r.closure_power,
                "adjoint": vectors(r.adjoint.generators()),
                "closure": vectors(r.closure.generators()),
                "uncovered": vectors(&r.uncovered),
            }),
        ),
        Format::Text => {
            writeln!(out, "briancon-skoda: {}", if r.holds { "holds" } else { "FAILS" })?;
            writeln!(out, "adj(I^{}):  {}", r.power, monomials(r.adjoint.generators(), variables))?;
            writeln!(out, "ic(I^{}):   {}", r.closure_power, monomials(r.closure.generators(), variables))?;
            if !r.uncovered.is_empty() {
                writeln!(out, "uncovered: {}", monomials(&r.uncovered, variables))?;
            }
            Ok(())
        }
    }
}

pub(crate) fn equivalence(out: &mut dyn Write, fmt: Format, r: &EquivalenceResult) -> io::Result<()> {
    match fmt {
        Format::Json => {
            let mut v = serde_json::json!({ "equivalent": r.equivalent });
            if let Some((i, j)) = r.powers {
                v["i"] = Value::from(i);
                v["j"] = Value::from(j);
            }
            write_json(out, &v)
        }
        Format::Text => match r.powers {
            Some((i, j)) => writeln!(out, "equivalent: ic(I^{i}) = ic(J^{j})"),
            None => writeln!(out, "not equivalent"),
        },
    }
}
