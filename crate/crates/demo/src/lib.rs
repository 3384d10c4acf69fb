//! Browser front end: three operations exported through wasm-bindgen, each
//! taking plain text (variable names and comma-separated monomials) and
//! returning a JSON string for `www/main.js`.

use monadj::{
    adjoint, integral_closure, projective_equivalence, rees_valuations, subadditivity_report,
    AdjointMethod, Exponent, MonomialIdeal, NewtonPolyhedron,
};
use monadj_cli::document::{check_variables, parse_monomial};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest power accepted from the page; beyond it enumeration gets slow.
pub const MAX_POWER: u32 = 12;

fn variables(text: &str) -> Result<Vec<String>, String> {
    let vars: Vec<String> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    check_variables(&vars).map_err(|e| e.to_string())?;
    Ok(vars)
}

fn ideal(text: &str, vars: &[String]) -> Result<MonomialIdeal, String> {
    let gens = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|m| parse_monomial(m, vars).map_err(|e| e.to_string()))
        .collect::<Result<Vec<Exponent>, _>>()?;
    if gens.is_empty() {
        return Err("enter at least one generator".into());
    }
    MonomialIdeal::minimalize(gens).map_err(|e| e.to_string())
}

fn vectors(i: &MonomialIdeal) -> Vec<Vec<u64>> {
    i.generators().iter().map(|e| e.entries().to_vec()).collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct FacetOut {
    // Strings so that large coefficients survive the trip into JS.
    normal: Vec<String>,
    offset: String,
}

#[derive(Serialize)]
struct ReesOut {
    weights: Vec<u64>,
    value: u128,
    jacobian_value: u128,
}

#[derive(Serialize)]
struct Analysis {
    variables: Vec<String>,
    power: u32,
    generators: Vec<Vec<u64>>,
    facets: Vec<FacetOut>,
    rees: Vec<ReesOut>,
    closure: Vec<Vec<u64>>,
    adjoint: Vec<Vec<u64>>,
}

/// Newton polyhedron, Rees valuations, and the generators of `ic(I^n)` and
/// `adj(I^n)`.
#[wasm_bindgen]
pub fn analyze(vars: &str, generators: &str, power: u32) -> Result<String, String> {
    if power == 0 || power > MAX_POWER {
        return Err(format!("power must be between 1 and {MAX_POWER}"));
    }
    let vars = variables(vars)?;
    let i = ideal(generators, &vars)?;
    let np = NewtonPolyhedron::of(&i).map_err(|e| e.to_string())?;
    let rees = rees_valuations(&i).map_err(|e| e.to_string())?;
    let closure = integral_closure(&i, power).map_err(|e| e.to_string())?;
    let adj = adjoint(&i, power, AdjointMethod::Facets).map_err(|e| e.to_string())?;
    to_json(&Analysis {
        variables: vars,
        power,
        generators: vectors(&i),
        facets: np
            .facets()
            .iter()
            .map(|f| FacetOut {
                normal: f.normal().iter().map(ToString::to_string).collect(),
                offset: f.offset().to_string(),
            })
            .collect(),
        rees: rees
            .iter()
            .map(|r| ReesOut {
                weights: r.valuation.weights().to_vec(),
                value: r.value,
                jacobian_value: r.valuation.jacobian_value(),
            })
            .collect(),
        closure: vectors(&closure),
        adjoint: vectors(&adj),
    })
}

#[derive(Serialize)]
struct WitnessOut {
    generator: Vec<u64>,
    factor_i: Vec<u64>,
    factor_j: Vec<u64>,
    b: Vec<String>,
    c: Vec<String>,
}

#[derive(Serialize)]
struct Subadditivity {
    holds: bool,
    adjoint_i: Vec<Vec<u64>>,
    adjoint_j: Vec<Vec<u64>>,
    adjoint_of_product: Vec<Vec<u64>>,
    product_of_adjoints: Vec<Vec<u64>>,
    witnesses: Vec<WitnessOut>,
}

/// `adj(IJ)` against `adj(I)·adj(J)`, with one factorization per generator.
#[wasm_bindgen]
pub fn subadditivity(vars: &str, a: &str, b: &str) -> Result<String, String> {
    let vars = variables(vars)?;
    let i = ideal(a, &vars)?;
    let j = ideal(b, &vars)?;
    let report = subadditivity_report(&i, &j).map_err(|e| e.to_string())?;
    let adj_i = adjoint(&i, 1, AdjointMethod::Facets).map_err(|e| e.to_string())?;
    let adj_j = adjoint(&j, 1, AdjointMethod::Facets).map_err(|e| e.to_string())?;
    let strings = |v: &[monadj::Rational]| v.iter().map(ToString::to_string).collect();
    to_json(&Subadditivity {
        holds: report.holds,
        adjoint_i: vectors(&adj_i),
        adjoint_j: vectors(&adj_j),
        adjoint_of_product: vectors(&report.adjoint_of_product),
        product_of_adjoints: vectors(&report.product_of_adjoints),
        witnesses: report
            .witnesses
            .iter()
            .map(|w| WitnessOut {
                generator: w.generator.entries().to_vec(),
                factor_i: w.factor_i.entries().to_vec(),
                factor_j: w.factor_j.entries().to_vec(),
                b: strings(&w.interior_point_b),
                c: strings(&w.interior_point_c),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct Equivalence {
    equivalent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<u64>,
}

/// Whether `ic(I^i) = ic(J^j)` for some `i, j ≥ 1`, with the least such pair.
#[wasm_bindgen]
pub fn equivalence(vars: &str, a: &str, b: &str) -> Result<String, String> {
    let vars = variables(vars)?;
    let i = ideal(a, &vars)?;
    let j = ideal(b, &vars)?;
    let r = projective_equivalence(&i, &j).map_err(|e| e.to_string())?;
    to_json(&Equivalence {
        equivalent: r.equivalent,
        i: r.powers.map(|p| p.0),
        j: r.powers.map(|p| p.1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Value};

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn analyze_x5_y7() {
        let v = parse(analyze("x, y", "x^5, y^7", 1));
        assert_eq!(v["facets"], json!([{"normal": ["7", "5"], "offset": "35"}]));
        assert_eq!(v["closure"], json!([[0, 7], [1, 6], [2, 5], [3, 3], [4, 2], [5, 0]]));
        assert_eq!(v["adjoint"], json!([[0, 5], [1, 4], [2, 2], [3, 1], [4, 0]]));
        assert_eq!(v["rees"], json!([{"weights": [7, 5], "value": 35, "jacobian_value": 11}]));
    }

    #[test]
    fn analyze_rejects_bad_input() {
        assert!(analyze("x y", "x^5, z", 1).unwrap_err().contains("unknown variable"));
        assert!(analyze("x y", " , ", 1).is_err());
        assert!(analyze("", "x", 1).is_err());
        assert!(analyze("x y", "x", 0).is_err());
        assert!(analyze("x y", "x", MAX_POWER + 1).is_err());
    }

    #[test]
    fn subadditivity_witnesses_multiply_back() {
        let v = parse(subadditivity("x y", "x^2, y^3", "x^3, y"));
        assert_eq!(v["holds"], true);
        for w in v["witnesses"].as_array().unwrap() {
            let g: Vec<u64> = serde_json::from_value(w["generator"].clone()).unwrap();
            let f: Vec<u64> = serde_json::from_value(w["factor_i"].clone()).unwrap();
            let h: Vec<u64> = serde_json::from_value(w["factor_j"].clone()).unwrap();
            assert_eq!(g, vec![f[0] + h[0], f[1] + h[1]]);
        }
    }

    #[test]
    fn equivalence_pairs() {
        assert_eq!(parse(equivalence("x y", "x^2, y^3", "x^4, y^6")), json!({"equivalent": true, "i": 2, "j": 1}));
        assert_eq!(parse(equivalence("x y", "x^2, y^3", "x^3, y^2")), json!({"equivalent": false}));
    }
}
