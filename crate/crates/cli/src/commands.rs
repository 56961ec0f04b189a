use std::collections::BTreeMap;
use std::path::Path;

use pants_core::ainfty::{
    check_stasheff, cyclic_block_dimensions, exterior_normalize, hkr_pairs, opposite, smash, supercommutativity_check,
    AlgebraFile, FiniteAInftyAlgebra, FiniteAbelianGroupData, GroupRingElement, RationalAlgebraFile,
};
use pants_core::lattice::SubsetK;
use pants_core::minimal::{exterior_key, DbarChoice, MfEngine, MinimalModel};
use pants_core::pants::{
    coamoeba_classify, expected_cell_count, fcells_margin, largest_gap, morse_data, pearl_degree,
    validate_pearl_labels, zonotope_complex, GParams, PearlTreeLabeling,
};
use pants_core::rnc::{crossing_positivity, curve_eval, projectively_equal, solve_nodes, vertex_point};
use pants_core::weyl::{delta, differential, differential_monomial, MFConfig, OperatorElement, MAX_VARS};
use pants_core::Rational;
use serde_json::{json, Value};

use crate::report::{count, float, int, model_integers, rat, subset, Report, UsageError};

fn check_n(n: usize) -> Result<(), UsageError> {
    if n == 0 || n + 2 > MAX_VARS {
        return Err(UsageError(format!("n must lie in 1..={}", MAX_VARS - 2)));
    }
    Ok(())
}

fn parse_rationals(items: &[String]) -> Result<Vec<Rational>, UsageError> {
    items.iter().map(|s| s.trim().parse::<Rational>().map_err(UsageError::from)).collect()
}

/// A subset written as comma-separated 1-based indices; the empty string is `∅`.
fn parse_subset(s: &str, n: usize) -> Result<SubsetK, UsageError> {
    let idx: Vec<usize> = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(UsageError::from))
        .collect::<Result<_, _>>()?;
    Ok(SubsetK::from_indices(&idx, n)?)
}

/// Nonzero structure constants as `(output, inputs, numerator, denominator)`, grouped by arity.
fn structure_tables(alg: &FiniteAInftyAlgebra<Rational>) -> Value {
    let mut by_arity: BTreeMap<usize, Vec<Value>> = BTreeMap::new();
    for (inputs, o, c) in alg.entries() {
        let ins: Vec<&str> = inputs.iter().map(|&i| alg.basis[i].label.as_str()).collect();
        let row = json!([alg.basis[o].label, ins, c.numer().to_string(), c.denom().to_string()]);
        by_arity.entry(inputs.len()).or_default().push(row);
    }
    Value::Object(by_arity.into_iter().map(|(k, v)| (k.to_string(), Value::Array(v))).collect())
}

pub fn mf_check(n: usize) -> Result<Report, UsageError> {
    check_n(n)?;
    let mut rep = Report::new("mf-check");
    rep.param("n", count(n));
    let cfg = MFConfig::symmetric(n)?;
    let d = delta(&cfg);
    rep.check("delta_squared_is_W", d.multiply(&d, n) == OperatorElement::superpotential(n), None);

    let eng = MfEngine::symmetric(n)?;
    let mut pieces = Vec::new();
    let mut by_size = vec![0usize; n + 3];
    let mut all_one = true;
    let mut d_squared = true;
    let mut checked = 0usize;
    for k in SubsetK::all(n) {
        let key = exterior_key(k, n);
        let prev = (key.0.clone(), key.1 - (n as i64 + 2));
        for piece in [eng.piece(&key), eng.piece(&prev)] {
            for m in &piece.basis {
                checked += 1;
                let dm = differential_monomial(m, &cfg);
                if !differential(&dm, &cfg)?.is_zero() {
                    d_squared = false;
                }
            }
        }
        let dim = eng.cohomology_dim(&key)?;
        all_one &= dim == 1;
        by_size[k.len()] += dim;
        pieces.push(json!({
            "label": k.to_string(),
            "weight": key.0.representative().0.iter().map(|&x| int(x)).collect::<Vec<_>>(),
            "degree": rat(&Rational::new(key.1, n as i64 + 2)),
            "dimension": count(dim),
        }));
    }
    rep.check("d_squared_zero", d_squared, Some(format!("{checked} basis monomials")));
    rep.check("exterior_cohomology", all_one, None);
    rep.result("pieces", pieces);
    rep.result("dimensions_by_size", by_size.into_iter().map(count).collect::<Vec<_>>());
    Ok(rep)
}

pub struct MinimalModelArgs {
    pub n: usize,
    pub max_arity: Option<usize>,
    pub a_weights: Option<Vec<String>>,
    pub dbar_aux: Option<Vec<usize>>,
}

pub fn minimal_model(args: MinimalModelArgs) -> Result<Report, UsageError> {
    let n = args.n;
    check_n(n)?;
    let max_arity = args.max_arity.unwrap_or(2 * n + 1);
    if max_arity == 0 {
        return Err(UsageError("max-arity must be at least 1".into()));
    }
    let cfg = match &args.a_weights {
        Some(a) => MFConfig::new(n, parse_rationals(a)?)?,
        None => MFConfig::symmetric(n)?,
    };
    let choice = match &args.dbar_aux {
        Some(aux) => {
            if aux.contains(&0) {
                return Err(UsageError("dbar-aux indices are 1-based".into()));
            }
            DbarChoice::new(aux.iter().map(|j| j - 1).collect(), n)?
        }
        None => DbarChoice::smallest(n),
    };
    let mut rep = Report::new("minimal-model");
    rep.param("n", count(n));
    rep.param("max_arity", count(max_arity));
    rep.param("a_weights", cfg.a().iter().map(rat).collect::<Vec<_>>());
    rep.param("dbar_aux", choice.aux().iter().map(|j| count(j + 1)).collect::<Vec<_>>());

    let eng = MfEngine::new(cfg, choice)?;
    let model = MinimalModel::compute(&eng, max_arity)?;
    let alg = model.to_algebra();

    rep.check("mu1_zero", alg.mu1_is_zero(), None);
    let violations = check_stasheff(&alg, max_arity + 1);
    rep.check(
        "stasheff",
        violations.is_empty(),
        Some(format!("relations up to arity {}, {} violations", max_arity + 1, violations.len())),
    );
    let grading = model.grading_violations();
    rep.check("equivariance_and_grading", grading.is_empty(), Some(format!("{} offending entries", grading.len())));
    let supercomm = supercommutativity_check(&alg)?;
    rep.check("supercommutativity", supercomm, None);
    match exterior_normalize(&alg, n) {
        Ok(sigma) => {
            rep.check("exterior_normalization", true, None);
            let signs: serde_json::Map<String, Value> = sigma.iter().map(|(k, s)| (k.to_string(), int(*s))).collect();
            rep.result("normalization_signs", Value::Object(signs));
        }
        Err(e) => rep.check("exterior_normalization", false, Some(e.to_string())),
    }
    if max_arity >= n + 2 {
        match model.obstruction_class() {
            Ok(c) => {
                rep.check("obstruction_class_is_unit", c.abs().is_one(), None);
                rep.result("obstruction_class", rat(&c));
            }
            Err(e) => rep.check("obstruction_class_is_unit", false, Some(e.to_string())),
        }
        let table: Vec<Value> = model
            .permutation_table()
            .into_iter()
            .map(|(p, c)| json!([p.iter().map(|j| count(j + 1)).collect::<Vec<_>>(), rat(&c)]))
            .collect();
        rep.result("permutation_table", table);
    }
    let sizes: serde_json::Map<String, Value> =
        model.tables.iter().map(|(k, t)| (k.to_string(), count(t.len()))).collect();
    rep.result("nonzero_input_tuples", Value::Object(sizes));
    rep.result("tables", structure_tables(&alg));
    rep.result("model", serde_json::to_value(AlgebraFile::from_algebra(&alg, Some(n)))?);
    Ok(rep)
}

pub fn hkr(n: usize, r: i64, t: i64) -> Result<Report, UsageError> {
    check_n(n)?;
    let mut rep = Report::new("hkr");
    rep.param("n", count(n));
    rep.param("r", int(r));
    rep.param("t", int(t));
    let pairs = hkr_pairs(n, r, t);
    rep.result("dimension", count(pairs.len()));
    rep.result("generators", pairs.iter().map(|(q, k)| json!({ "q": int(*q), "K": subset(*k) })).collect::<Vec<_>>());
    Ok(rep)
}

pub fn zonotope(n: usize) -> Result<Report, UsageError> {
    check_n(n)?;
    let mut rep = Report::new("zonotope");
    rep.param("n", count(n));
    let z = zonotope_complex(n);
    let counts = z.counts();
    let formula = counts.iter().enumerate().all(|(l, &c)| c == expected_cell_count(n, l));
    rep.check("cell_counts", formula, None);
    let chi = z.euler_characteristic();
    rep.check("euler_characteristic", chi == 1 + if n.is_multiple_of(2) { 1 } else { -1 }, None);
    rep.check("boundary_squared_zero", z.boundary_squares_to_zero(), None);
    let h = z.homology_ranks()?;
    let sphere = h.iter().enumerate().all(|(d, &b)| b == usize::from(d == 0) + usize::from(d == n));
    rep.check("sphere_homology", sphere, None);
    rep.result("cells_by_dimension", counts.iter().map(|&c| count(c)).collect::<Vec<_>>());
    rep.result("total_cells", count(counts.iter().sum()));
    rep.result("euler_characteristic", int(chi));
    rep.result("homology_ranks", h.iter().map(|&b| count(b)).collect::<Vec<_>>());
    Ok(rep)
}

pub fn coamoeba(theta: &[f64], tol: f64) -> Result<Report, UsageError> {
    if theta.len() < 3 {
        return Err(UsageError("need at least three angles (n ≥ 1)".into()));
    }
    let mut rep = Report::new("coamoeba");
    rep.param("theta", theta.to_vec());
    rep.param("tolerance", tol);
    rep.result("region", serde_json::to_value(coamoeba_classify(theta, tol))?);
    rep.result("largest_gap", float(largest_gap(theta), tol));
    Ok(rep)
}

pub fn morse(n: usize, tol: f64) -> Result<Report, UsageError> {
    check_n(n)?;
    let mut rep = Report::new("morse");
    rep.param("n", count(n));
    rep.param("tolerance", tol);
    let g = GParams::default();
    let pts = morse_data(n);
    rep.check("point_count", pts.len() == (1 << (n + 2)) - 2, None);
    let mut histogram = vec![0usize; n + 1];
    let mut worst: f64 = 0.0;
    let mut points = Vec::new();
    for p in &pts {
        histogram[p.index] += 1;
        let grad = g.gradient_f(&p.normalized(), tol)?;
        let norm = grad.iter().map(|x| x * x).sum::<f64>().sqrt();
        worst = worst.max(norm);
        points.push(json!({
            "K": subset(p.k),
            "coordinates": p.coordinates.iter().map(rat).collect::<Vec<_>>(),
            "index": count(p.index),
        }));
    }
    let binom = |a: usize, b: usize| (0..b).fold(1usize, |acc, i| acc * (a - i) / (i + 1));
    let hist_ok = histogram.iter().enumerate().all(|(m, &c)| c == binom(n + 2, n + 1 - m));
    rep.check("index_histogram", hist_ok, None);
    rep.check("gradient_vanishes", worst < tol, None);
    let (samples, violations, margin) = fcells_scan(&g, n, tol);
    let detail = margin.map(|(m, x)| format!("{violations} of {samples} points violate it; worst {m:.3e} at {x:.3?}"));
    rep.check("fcells_inequality", violations == 0, detail);
    rep.result("fcells_samples", count(samples));
    rep.result("fcells_violations", count(violations));
    rep.result("critical_points", points);
    rep.result("index_histogram", histogram.into_iter().map(count).collect::<Vec<_>>());
    rep.result("max_gradient_norm", float(worst, tol));
    Ok(rep)
}

/// `f_k x_j − f_j x_k > −tol` for `x_j > x_k ≥ 0` over the normalized nonzero integer
/// points of `Σx = 0` with coordinates in `[−r, r]`, `r` shrinking with `n`.
/// Returns the sample count, the violation count and the worst negative margin.
fn fcells_scan(g: &GParams, n: usize, tol: f64) -> (usize, usize, Option<(f64, Vec<f64>)>) {
    let m = n + 2;
    let r: i64 = match n {
        1..=3 => 4,
        4 | 5 => 2,
        _ => 1,
    };
    let side = (2 * r + 1) as usize;
    let (mut samples, mut violations, mut worst) = (0, 0, None::<(f64, Vec<f64>)>);
    for code in 0..side.pow(m as u32 - 1) {
        let mut c = code;
        let mut v: Vec<f64> = (0..m - 1)
            .map(|_| {
                let d = (c % side) as i64 - r;
                c /= side;
                d as f64
            })
            .collect();
        v.push(-v.iter().sum::<f64>());
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let x: Vec<f64> = v.iter().map(|a| a / norm).collect();
        samples += 1;
        if let Some(margin) = fcells_margin(g, &x) {
            if margin < -tol {
                violations += 1;
                if worst.as_ref().is_none_or(|(w, _)| margin < *w) {
                    worst = Some((margin, x));
                }
            }
        }
    }
    (samples, violations, worst)
}

pub fn pearl(n: usize, k0: &str, inputs: &[String]) -> Result<Report, UsageError> {
    check_n(n)?;
    let k0 = parse_subset(k0, n)?;
    let ins: Vec<SubsetK> = inputs.iter().map(|s| parse_subset(s, n)).collect::<Result<_, _>>()?;
    let mut rep = Report::new("pearl-degree");
    rep.param("n", count(n));
    rep.param("k0", subset(k0));
    rep.param("inputs", ins.iter().map(|k| subset(*k)).collect::<Vec<_>>());
    let d = pearl_degree(k0, &ins, n);
    rep.result("degree", rat(&d));
    rep.result("integral", d.is_integer());
    rep.result("nonnegative", d.signum() >= 0);
    Ok(rep)
}

pub fn validate_labels(path: &Path) -> Result<Report, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let lab: PearlTreeLabeling = serde_json::from_str(&text)?;
    check_n(lab.n)?;
    let mut rep = Report::new("validate-labels");
    rep.param("file", path.display().to_string());
    rep.param("n", count(lab.n));
    let reports = validate_pearl_labels(&lab);
    for r in &reports {
        let detail = (!r.problems.is_empty()).then(|| r.problems.join("; "));
        rep.check(&format!("pearl_{}", r.pearl), r.valid, detail);
    }
    rep.result("pearls", count(reports.len()));
    Ok(rep)
}

pub fn rnc(n: usize, pphi: &[String], tol: f64) -> Result<Report, UsageError> {
    check_n(n)?;
    let target = parse_rationals(pphi)?;
    let c = solve_nodes(n, &target)?;
    let mut rep = Report::new("rnc");
    rep.param("n", count(n));
    rep.param("pphi", target.iter().map(rat).collect::<Vec<_>>());
    rep.param("tolerance", tol);
    rep.check("back_substitution", c.back_substitution_holds(), None);
    let through = (0..n + 2).all(|j| projectively_equal(&curve_eval(&c, &c.nodes[j]), &vertex_point(j, n)));
    rep.check("passes_through_vertices", through, None);
    rep.check("base_point", projectively_equal(&curve_eval(&c, &Rational::ZERO), &target), None);
    let degree = c.cleared_degree();
    rep.check("degree_n", degree == Some(n), None);
    let crossings = crossing_positivity(&c)?;
    rep.check("crossing_positivity", crossings.all_positive(tol), None);
    rep.result("nodes", c.nodes.iter().map(rat).collect::<Vec<_>>());
    rep.result(
        "cleared_components",
        c.cleared_polynomials().iter().map(|p| p.0.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
    );
    rep.result("cleared_degree", degree.map_or(Value::Null, count));
    let comps: Vec<Value> = crossings
        .components
        .iter()
        .map(|k| {
            json!({
                "component": count(k.component + 1),
                "roots": k.roots,
                "derivatives": k.derivatives,
                "relative_margins": k.relative,
                "tolerance": tol,
            })
        })
        .collect();
    rep.result("crossings", comps);
    rep.result(
        "components_with_root_count_not_n",
        crossings.unexpected_root_counts.iter().map(|&k| count(k + 1)).collect::<Vec<_>>(),
    );
    Ok(rep)
}

/// Reads either a bare model or a `minimal-model` / `opposite` report carrying `results.model`.
fn read_model(path: &Path) -> Result<RationalAlgebraFile, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)?;
    let model = v.pointer("/results/model").cloned().unwrap_or(v);
    Ok(serde_json::from_value(model_integers(model))?)
}

pub fn opposite_cmd(path: &Path) -> Result<Report, UsageError> {
    let file = read_model(path)?;
    let alg = file.to_algebra()?;
    let mut rep = Report::new("opposite");
    rep.param("model", path.display().to_string());
    let op = opposite(&alg);
    rep.check("involution", opposite(&op) == alg, None);
    let arity = alg.max_arity() + 1;
    let input_ok = check_stasheff(&alg, arity).is_empty();
    let v = check_stasheff(&op, arity);
    rep.check(
        "stasheff_preserved",
        !input_ok || v.is_empty(),
        Some(format!("input consistent: {input_ok}; opposite violations up to arity {arity}: {}", v.len())),
    );
    rep.result("tables", structure_tables(&op));
    rep.result("model", serde_json::to_value(AlgebraFile::from_algebra(&op, file.n))?);
    Ok(rep)
}

const SMASH_ENTRY_LIMIT: u128 = 20_000_000;

pub fn smash_cmd(path: &Path, group: &str) -> Result<Report, UsageError> {
    let file = read_model(path)?;
    let alg = file.to_algebra()?;
    let need_n = || file.n.ok_or_else(|| UsageError("model file does not record n".into()));
    let grp = match group {
        "trivial" => FiniteAbelianGroupData::trivial(),
        "sum" => FiniteAbelianGroupData::cyclic_sum(need_n()?),
        "full" => FiniteAbelianGroupData::full(need_n()?),
        other => return Err(UsageError(format!("unknown group {other:?}; use trivial, sum or full"))),
    };
    let order = grp.order() as u128;
    let estimate: u128 = alg.entries().map(|(ins, _, _)| order.saturating_pow(ins.len() as u32)).sum();
    if estimate > SMASH_ENTRY_LIMIT {
        return Err(UsageError(format!("smash product would have about {estimate} entries")));
    }
    let mut rep = Report::new("smash");
    rep.param("model", path.display().to_string());
    rep.param("group", group);
    let s = smash(&alg, &grp)?;
    rep.check("dimension", s.dim() == grp.order() * alg.dim(), None);
    let arity = alg.max_arity() + 1;
    let input_ok = check_stasheff(&alg, arity).is_empty();
    let v = check_stasheff(&s, arity);
    rep.check(
        "stasheff",
        !input_ok || v.is_empty(),
        Some(format!("input consistent: {input_ok}; smash violations up to arity {arity}: {}", v.len())),
    );
    rep.result("group_order", count(grp.order()));
    rep.result("dimension", count(s.dim()));
    rep.result("entries", count(s.entry_count()));
    if grp.factors.len() == 1 {
        let blocks = cyclic_block_dimensions(&alg, &grp)?;
        rep.result(
            "block_dimensions",
            blocks.iter().map(|row| row.iter().map(|&b| count(b)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        );
    }
    rep.result("model", serde_json::to_value(AlgebraFile::<GroupRingElement>::from_algebra(&s, file.n))?);
    Ok(rep)
}
