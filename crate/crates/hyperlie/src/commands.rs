//! One function per subcommand. Each returns both renderings so that the
//! binary only chooses which to print.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use hyperlie_core::analysis::{
    is_sn_part, is_transitive_sn, relation_s_with, search_non_transitive, smallest_solvable_oracle, SnView,
};
use hyperlie_core::quotient::{quotient_lie_algebra, FiniteField, LieConstants, LinearModel, Vector, DEFAULT_SERIES_DEPTH};
use hyperlie_core::relation::{Engine, ExpressionBounds, Partition, RelationKind};
use hyperlie_core::structure::generate::*;
use hyperlie_core::structure::{check_hyperfield, check_hypergroup, check_lie_hyperalgebra, AxiomReport, Carrier, FiniteLieHyperalgebra};
use hyperlie_core::Subset;
use serde::Serialize;

use crate::compute::{self, bounds_str, class_label, compute, Computed};
use crate::format::{self, Structure};
use crate::{CliError, Output};

/// Settings shared by the relation-driven commands.
#[derive(Clone, Debug)]
pub struct Settings {
    pub engine: Engine,
    pub bounds: ExpressionBounds,
    pub oracle: bool,
}

impl Default for Settings {
    fn default() -> Self {
        Self { engine: Engine::default(), bounds: ExpressionBounds::DEFAULT, oracle: true }
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn class_names(carrier: &Carrier, p: &Partition) -> Vec<Vec<String>> {
    p.classes().iter().map(|c| c.iter().map(|&x| carrier.name(x).to_string()).collect()).collect()
}

fn subset_names(carrier: &Carrier, s: &Subset) -> Vec<String> {
    s.iter().map(|x| carrier.name(x).to_string()).collect()
}

fn braces(names: &[String]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn relation_name(kind: RelationKind) -> String {
    match kind {
        RelationKind::Alpha => "α*".into(),
        k => format!("{k}*"),
    }
}

fn first_violation(r: &AxiomReport) -> String {
    match r.violations.first() {
        Some(v) => format!("{} fails at ({})", v.axiom, v.witness.join(", ")),
        None => "no violations".into(),
    }
}

#[derive(Serialize)]
struct ViolationJson<'a> {
    axiom: &'a str,
    witness: &'a [String],
}

#[derive(Serialize)]
struct CheckJson<'a> {
    kind: &'a str,
    elements: usize,
    passed: bool,
    violations: Vec<ViolationJson<'a>>,
}

pub fn check(path: &Path) -> Result<Output> {
    let s = format::load(path)?;
    let (report, size) = match &s {
        Structure::Hypergroup { carrier, add, .. } => (check_hypergroup(add, carrier)?, carrier.len()),
        Structure::Hyperfield(f) => (check_hyperfield(f)?, f.len()),
        Structure::Lie(l) => (check_lie_hyperalgebra(l)?, l.len()),
    };
    let mut text = format!("{}: {} with {size} elements: ", path.display(), s.kind());
    if report.passed() {
        text.push_str("all axioms hold\n");
    } else {
        let _ = writeln!(text, "{} violation(s)", report.violations.len());
        for v in &report.violations {
            let _ = writeln!(text, "  {} at ({})", v.axiom, v.witness.join(", "));
        }
    }
    let json = CheckJson {
        kind: s.kind(),
        elements: size,
        passed: report.passed(),
        violations: report.violations.iter().map(|v| ViolationJson { axiom: &v.axiom, witness: &v.witness }).collect(),
    };
    Ok(Output { text, json: pretty(&json), ok: report.passed() })
}

/// Load a file that must hold a valid Lie hyperalgebra.
pub fn load_lie(path: &Path) -> Result<FiniteLieHyperalgebra> {
    let s = format::load(path).with_context(|| format!("loading {}", path.display()))?;
    let Structure::Lie(l) = s else {
        return Err(CliError::Input(format!("{} holds a {}, not a lie_hyperalgebra", path.display(), s.kind())).into());
    };
    let report = check_lie_hyperalgebra(&l)?;
    if !report.passed() {
        return Err(CliError::Input(format!("{} is not a Lie hyperalgebra: {}", path.display(), first_violation(&report))).into());
    }
    Ok(l)
}

#[derive(Serialize)]
struct RelationJson {
    classes: Vec<Vec<String>>,
    mode: &'static str,
    bounds: [u8; 4],
}

fn status_lines(c: &Computed, text: &mut String) {
    let _ = writeln!(text, "mode {} at bounds {}", c.status.mode.as_str(), bounds_str(&c.status.bounds_used));
    if let Some(caveat) = c.caveat() {
        let _ = writeln!(text, "{caveat}");
    }
}

pub fn relation(l: &FiniteLieHyperalgebra, kind: RelationKind, s: &Settings) -> Result<Output> {
    let c = compute(&s.engine, l, kind, &s.bounds, s.oracle)?;
    let carrier = if kind == RelationKind::Alpha { l.field().carrier() } else { l.carrier() };
    let classes = class_names(carrier, &c.partition);
    let mut text = format!("{} on {} elements: {} classes\n", relation_name(kind), carrier.len(), classes.len());
    status_lines(&c, &mut text);
    for class in &classes {
        let _ = writeln!(text, "  {} = {}", class_label(kind, &class[0]), braces(class));
    }
    let json = RelationJson { classes, mode: c.status.mode.as_str(), bounds: c.status.bounds_used.as_array() };
    Ok(Output { text, json: pretty(&json), ok: true })
}

#[derive(Serialize)]
struct QuotientJson {
    classes: usize,
    field_order: usize,
    dim: usize,
    solvable_length: Option<usize>,
    derived_dims: Vec<usize>,
    mode: &'static str,
    bounds: [u8; 4],
}

pub fn quotient(l: &FiniteLieHyperalgebra, kind: RelationKind, s: &Settings) -> Result<Output> {
    if kind == RelationKind::Alpha {
        return Err(CliError::Input("quotient needs L, A or Sn; α acts on the scalars".into()).into());
    }
    let rho = compute(&s.engine, l, kind, &s.bounds, s.oracle)?;
    let delta = compute(&s.engine, l, RelationKind::Alpha, &s.bounds, s.oracle)?;
    let q = quotient_lie_algebra(l, &rho.partition, &delta.partition)?;
    q.field().require_char_not_2()?;
    let dim = q.dimension()?;
    let series = q.derived_series(DEFAULT_SERIES_DEPTH);
    // the weaker of the two statuses labels the report
    let worst = if rho.is_exact() { &delta } else { &rho };
    let mut text = format!(
        "L/{} over F/α*: {} classes, field of order {}\n",
        relation_name(kind),
        q.len(),
        q.field().order()
    );
    status_lines(worst, &mut text);
    let shape = match series.solvable_length {
        Some(0) => "zero".to_string(),
        Some(1) => "abelian".to_string(),
        Some(n) => format!("solvable of length {n}"),
        None if q.is_perfect() => "perfect".to_string(),
        None => "not solvable".to_string(),
    };
    let _ = writeln!(text, "dimension {dim}, {shape}");
    let _ = writeln!(text, "derived dimensions {:?}", series.dims);
    let json = QuotientJson {
        classes: q.len(),
        field_order: q.field().order(),
        dim,
        solvable_length: series.solvable_length,
        derived_dims: series.dims,
        mode: worst.status.mode.as_str(),
        bounds: worst.status.bounds_used.as_array(),
    };
    Ok(Output { text, json: pretty(&json), ok: true })
}

fn view_mode(l: &FiniteLieHyperalgebra, view: &SnView) -> (&'static str, Option<String>) {
    match compute::oracle(l, RelationKind::Sn(view.n)) {
        Some(o) if o == view.closure => ("exact-oracle-match", None),
        _ => ("bound-limited", Some(compute::caveat(&view.bounds))),
    }
}

#[derive(Serialize)]
struct WitnessJson {
    left_expr: String,
    right_expr: String,
    left: Vec<String>,
    right: Vec<String>,
}

#[derive(Serialize)]
struct SnPartJson {
    set: Vec<String>,
    n: usize,
    is_part: bool,
    witness: Option<WitnessJson>,
    mode: &'static str,
    bounds: [u8; 4],
}

pub fn parse_set(l: &FiniteLieHyperalgebra, names: &[String]) -> Result<Subset> {
    let mut k = Subset::empty(l.len());
    for n in names {
        let x = l.carrier().index_of(n).ok_or_else(|| CliError::Input(format!("unknown element `{n}` in --set")))?;
        k.insert(x);
    }
    Ok(k)
}

pub fn snpart(l: &FiniteLieHyperalgebra, n: usize, set: &[String], s: &Settings) -> Result<Output> {
    let k = parse_set(l, set)?;
    let view = SnView::with_engine(&s.engine, l, n, &s.bounds)?;
    let verdict = is_sn_part(l, &view, &k)?;
    let (mode, caveat) = view_mode(l, &view);
    let c = l.carrier();
    let names = subset_names(c, &k);
    let mut text = String::new();
    let witness = verdict.witness.map(|w| WitnessJson {
        left: subset_names(c, &w.left),
        right: subset_names(c, &w.right),
        left_expr: w.left_expr,
        right_expr: w.right_expr,
    });
    match &witness {
        None => {
            let _ = writeln!(text, "{} is an S{n}-part", braces(&names));
        }
        Some(w) => {
            let _ = writeln!(text, "{} is not an S{n}-part", braces(&names));
            let _ = writeln!(text, "  {} = {} meets the set", w.left_expr, braces(&w.left));
            let _ = writeln!(text, "  {} = {} is not inside it", w.right_expr, braces(&w.right));
        }
    }
    let _ = writeln!(text, "mode {mode} at bounds {}", bounds_str(&view.bounds));
    if let Some(caveat) = caveat {
        let _ = writeln!(text, "{caveat}");
    }
    let json = SnPartJson { set: names, n, is_part: verdict.is_part, witness, mode, bounds: view.bounds.as_array() };
    Ok(Output { text, json: pretty(&json), ok: verdict.is_part })
}

#[derive(Serialize)]
struct TransitivityJson {
    n: usize,
    transitive: bool,
    neighborhoods_are_classes: bool,
    neighborhoods_are_parts: bool,
    first_gap: Option<String>,
    mode: &'static str,
    bounds: [u8; 4],
}

pub fn transitivity(l: &FiniteLieHyperalgebra, n: usize, s: &Settings) -> Result<Output> {
    let view = SnView::with_engine(&s.engine, l, n, &s.bounds)?;
    let r = is_transitive_sn(&view);
    if !r.agree() {
        return Err(hyperlie_core::Error::Invariant(format!("transitivity criteria disagree: {r:?}")).into());
    }
    let (mode, caveat) = view_mode(l, &view);
    let yes = |b: bool| if b { "yes" } else { "no" };
    let gap = r.first_gap.map(|x| l.carrier().name(x).to_string());
    let mut text = format!("S{n} is {}transitive\n", if r.transitive { "" } else { "not " });
    let _ = writeln!(text, "  S{n} = S{n}*: {}", yes(r.transitive));
    let _ = writeln!(text, "  P(x) is the class of x for every x: {}", yes(r.neighborhoods_are_classes));
    let _ = writeln!(text, "  every P(x) is an S{n}-part: {}", yes(r.neighborhoods_are_parts));
    if let Some(g) = &gap {
        let _ = writeln!(text, "  first gap at x = {g}");
    }
    let _ = writeln!(text, "mode {mode} at bounds {}", bounds_str(&view.bounds));
    if let Some(caveat) = caveat {
        let _ = writeln!(text, "{caveat}");
    }
    let json = TransitivityJson {
        n,
        transitive: r.transitive,
        neighborhoods_are_classes: r.neighborhoods_are_classes,
        neighborhoods_are_parts: r.neighborhoods_are_parts,
        first_gap: gap,
        mode,
        bounds: view.bounds.as_array(),
    };
    Ok(Output { text, json: pretty(&json), ok: r.transitive })
}

/// `𝒮ₙ*` chain status: exact when every member matches its oracle.
fn chain_mode(l: &FiniteLieHyperalgebra, chain: &[Partition], bounds: &ExpressionBounds) -> (&'static str, Option<String>) {
    let exact = LinearModel::recover(l)
        .map(|m| chain.iter().enumerate().all(|(i, p)| m.oracle_sn(i + 1).is_ok_and(|o| o == *p)))
        .unwrap_or(false);
    if exact {
        ("exact-oracle-match", None)
    } else {
        ("bound-limited", Some(compute::caveat(bounds)))
    }
}

#[derive(Serialize)]
struct StabilizeJson {
    m: usize,
    chain: Vec<usize>,
    classes: Vec<Vec<String>>,
    meet_agrees: bool,
    mode: &'static str,
    bounds: [u8; 4],
}

pub fn s_stabilize(l: &FiniteLieHyperalgebra, n_cap: usize, s: &Settings) -> Result<Output> {
    let st = relation_s_with(&s.engine, l, &s.bounds, n_cap)?;
    let (mode, caveat) = chain_mode(l, &st.chain, &s.bounds);
    let counts: Vec<usize> = st.chain.iter().map(Partition::num_classes).collect();
    let classes = class_names(l.carrier(), &st.relation);
    let mut text = format!("S = S{}* with m = {}\n", st.m, st.m);
    let _ = writeln!(text, "  class counts of S1*, S2*, …: {counts:?}");
    let _ = writeln!(text, "  intersection of the chain equals S{}*: {}", st.m, if st.meet_agrees { "yes" } else { "no" });
    let _ = writeln!(text, "mode {mode} at bounds {}", bounds_str(&s.bounds));
    if let Some(caveat) = caveat {
        let _ = writeln!(text, "{caveat}");
    }
    for class in &classes {
        let _ = writeln!(text, "  {} = {}", class_label(RelationKind::Sn(st.m), &class[0]), braces(class));
    }
    let json = StabilizeJson { m: st.m, chain: counts, classes, meet_agrees: st.meet_agrees, mode, bounds: s.bounds.as_array() };
    Ok(Output { text, json: pretty(&json), ok: st.meet_agrees })
}

#[derive(Serialize)]
struct CertificateJson {
    minimal_classes: Option<Vec<Vec<String>>>,
    qualifying_partitions: usize,
    checked_partitions: u64,
    agrees_with_engine: bool,
    engine_classes: Vec<Vec<String>>,
    minimality_violations: usize,
}

pub fn smallest(l: &FiniteLieHyperalgebra, n_cap: usize, s: &Settings) -> Result<Output> {
    let delta = compute(&s.engine, l, RelationKind::Alpha, &s.bounds, s.oracle)?;
    let st = relation_s_with(&s.engine, l, &s.bounds, n_cap)?;
    let cert = smallest_solvable_oracle(l, &delta.partition, &st.relation)?;
    let c = l.carrier();
    let minimal = cert.minimal.as_ref().map(|p| class_names(c, p));
    let engine_classes = class_names(c, &st.relation);
    let ok = cert.agrees_with_engine && cert.minimality_violations == 0;
    let mut text = format!(
        "{} partitions checked, {} strongly regular with a solvable quotient\n",
        cert.checked,
        cert.qualifying.len()
    );
    match &minimal {
        Some(m) => {
            let shown: Vec<String> = m.iter().map(|cl| braces(cl)).collect();
            let _ = writeln!(text, "  least qualifying partition: {}", shown.join(" "));
        }
        None => text.push_str("  the qualifying partitions have no least element\n"),
    }
    let shown: Vec<String> = engine_classes.iter().map(|cl| braces(cl)).collect();
    let _ = writeln!(text, "  computed S (m = {}): {}", st.m, shown.join(" "));
    let _ = writeln!(text, "  agrees with engine: {}", if cert.agrees_with_engine { "yes" } else { "no" });
    let _ = writeln!(text, "  minimality violations: {}", cert.minimality_violations);
    let (_, caveat) = chain_mode(l, &st.chain, &s.bounds);
    if let Some(caveat) = caveat {
        let _ = writeln!(text, "{caveat}");
    }
    let json = CertificateJson {
        minimal_classes: minimal,
        qualifying_partitions: cert.qualifying.len(),
        checked_partitions: cert.checked,
        agrees_with_engine: cert.agrees_with_engine,
        engine_classes,
        minimality_violations: cert.minimality_violations,
    };
    Ok(Output { text, json: pretty(&json), ok })
}

/// Candidates for the non-transitivity search: the orbit structures first,
/// then random trivial algebras drawn from `seed`.
pub fn search_candidates(seed: u64) -> Result<Vec<(String, FiniteLieHyperalgebra)>> {
    let f3 = FiniteField::galois(3)?;
    let f5 = FiniteField::galois(5)?;
    let f7 = FiniteField::galois(7)?;
    let affine = LieConstants::new(f3.clone(), 2, &[(0, 1, vec![1, 0])])?;
    let mut out = Vec::new();
    for (name, c, g) in [
        ("F3/{1,2} abelian dim 1", LieConstants::abelian(f3.clone(), 1), vec![1, 2]),
        ("F5/{1,4} abelian dim 1", LieConstants::abelian(f5, 1), vec![1, 4]),
        ("F7/{1,2,4} abelian dim 1", LieConstants::abelian(f7, 1), vec![1, 2, 4]),
        ("F3/{1,2} [a,b]=a", affine, vec![1, 2]),
    ] {
        out.push((name.to_string(), gen_coset_lie_hyperalgebra(&c, &g)?));
    }
    for (name, c) in [
        (format!("perfect F5 seed {seed}"), random_perfect_constants(5, seed)?),
        (format!("perfect F3 seed {seed}"), random_perfect_constants(3, seed)?),
        (format!("solvable F3 dim 3 seed {seed}"), random_solvable_constants(3, 3, seed)?),
        (format!("solvable F5 dim 2 seed {seed}"), random_solvable_constants(5, 2, seed)?),
    ] {
        out.push((name, gen_trivial_from_lie(&c, None)?.algebra));
    }
    Ok(out)
}

pub fn search_bounds() -> Vec<ExpressionBounds> {
    [(1, 2, 1, 1), (1, 3, 1, 1), (2, 2, 1, 1)]
        .into_iter()
        .map(|(t, m, p, q)| ExpressionBounds::new(t, m, p, q).expect("within the cap"))
        .collect()
}

#[derive(Serialize)]
struct SearchEntryJson {
    name: String,
    n: usize,
    bounds: [u8; 4],
    transitive: Option<bool>,
}

#[derive(Serialize)]
struct SearchHitJson {
    name: String,
    n: usize,
    bounds: [u8; 4],
    first_gap: Option<String>,
}

#[derive(Serialize)]
struct SearchJson {
    seed: u64,
    entries: Vec<SearchEntryJson>,
    hit: Option<SearchHitJson>,
}

pub fn search(seed: u64, s: &Settings) -> Result<Output> {
    let cands = search_candidates(seed)?;
    let log = search_non_transitive(&s.engine, &cands, &[1, 2], &search_bounds())?;
    let mut text = String::new();
    let entries: Vec<SearchEntryJson> = log
        .entries
        .iter()
        .map(|e| SearchEntryJson {
            name: e.name.clone(),
            n: e.n,
            bounds: e.bounds.as_array(),
            transitive: e.report.as_ref().map(|r| r.transitive),
        })
        .collect();
    for e in &entries {
        let verdict = match e.transitive {
            Some(true) => "transitive",
            Some(false) => "NOT transitive",
            None => "skipped (work limit)",
        };
        let [t, m, p, q] = e.bounds;
        let _ = writeln!(text, "{:<28} S{} at {t},{m},{p},{q}: {verdict}", e.name, e.n);
    }
    let hit = log.hit.map(|i| {
        let e = &log.entries[i];
        let algebra = &cands.iter().find(|(n, _)| *n == e.name).expect("logged candidate").1;
        SearchHitJson {
            name: e.name.clone(),
            n: e.n,
            bounds: e.bounds.as_array(),
            first_gap: e.report.as_ref().and_then(|r| r.first_gap).map(|x| algebra.carrier().name(x).to_string()),
        }
    });
    match &hit {
        Some(h) => {
            let _ = writeln!(text, "non-transitive S{} found on {}", h.n, h.name);
        }
        None => text.push_str("no non-transitive instance among the candidates\n"),
    }
    let json = SearchJson { seed, entries, hit };
    Ok(Output { text, json: pretty(&json), ok: true })
}

/// Parse `2a+c` style vectors over the basis names `a, b, …`. Coefficients
/// are field element indices.
pub fn parse_vector(field: &FiniteField, dim: usize, s: &str) -> Result<Vector> {
    let names = basis_names(dim);
    let mut v = vec![field.zero(); dim];
    let s = s.trim();
    if s == "0" {
        return Ok(v);
    }
    for term in s.split('+') {
        let term = term.trim();
        let split = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
        let (coef, name) = term.split_at(split);
        let coef = if coef.is_empty() { field.one() } else { coef.parse::<usize>()? };
        let i = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| CliError::Input(format!("unknown basis element `{name}` in `{s}`")))?;
        if coef >= field.order() {
            return Err(CliError::Input(format!("coefficient {coef} is not an element of F{}", field.order())).into());
        }
        v[i] = field.add(v[i], coef);
    }
    Ok(v)
}

/// How to choose structure constants for the generators.
#[derive(Clone, Debug, Default)]
pub struct ConstantsSpec {
    pub q: usize,
    pub preset: Option<String>,
    pub dim: Option<usize>,
    pub brackets: Vec<String>,
    pub seed: u64,
}

pub fn constants(spec: &ConstantsSpec) -> Result<LieConstants> {
    let q = spec.q;
    let need_dim = || spec.dim.ok_or_else(|| CliError::Input("--dim is required".into()));
    match spec.preset.as_deref() {
        Some("ex1") => Ok(example_solvable_constants(q)?),
        Some("ex2") => Ok(example_perfect_constants(q)?),
        Some("sl2") => Ok(sl2_constants(q)?),
        Some("abelian") => Ok(LieConstants::abelian(FiniteField::galois(q)?, need_dim()?)),
        Some("random-perfect") => Ok(random_perfect_constants(q, spec.seed)?),
        Some("random-solvable") => Ok(random_solvable_constants(q, need_dim()?, spec.seed)?),
        Some(other) => Err(CliError::Input(format!(
            "unknown preset `{other}`, expected ex1, ex2, sl2, abelian, random-perfect or random-solvable"
        ))
        .into()),
        None => {
            let f = FiniteField::galois(q)?;
            let dim = need_dim()?;
            let names = basis_names(dim);
            let mut brackets = Vec::new();
            for b in &spec.brackets {
                let bad = || CliError::Input(format!("bracket `{b}` is not of the form x,y=v"));
                let (lhs, rhs) = b.split_once('=').ok_or_else(bad)?;
                let (x, y) = lhs.split_once(',').ok_or_else(bad)?;
                let pos = |n: &str| names.iter().position(|m| m == n.trim()).ok_or_else(bad);
                brackets.push((pos(x)?, pos(y)?, parse_vector(&f, dim, rhs)?));
            }
            Ok(LieConstants::new(f, dim, &brackets)?)
        }
    }
}

fn structure_output(s: &Structure) -> Output {
    let text = format::to_string(s);
    Output { json: text.clone(), text, ok: true }
}

pub fn gen_trivial(spec: &ConstantsSpec) -> Result<Output> {
    let c = constants(spec)?;
    Ok(structure_output(&Structure::Lie(gen_trivial_from_lie(&c, None)?.algebra)))
}

pub fn gen_coset_lie(spec: &ConstantsSpec, subgroup: &[usize]) -> Result<Output> {
    let c = constants(spec)?;
    Ok(structure_output(&Structure::Lie(gen_coset_lie_hyperalgebra(&c, subgroup)?)))
}

pub fn gen_qhyperfield(q: usize, subgroup: &[usize]) -> Result<Output> {
    Ok(structure_output(&Structure::Hyperfield(gen_quotient_hyperfield(q, subgroup)?)))
}

/// `Z<n>` or `S3`.
pub fn gen_coset(group: &str, subgroup: &[usize]) -> Result<Output> {
    let table = match group {
        "S3" => symmetric_group_s3(),
        g => match g.strip_prefix('Z').and_then(|n| n.parse::<usize>().ok()) {
            Some(n) if n >= 1 => cyclic_group(n),
            _ => return Err(CliError::Input(format!("unknown group `{group}`, expected Z<n> or S3")).into()),
        },
    };
    let (carrier, add) = gen_coset_hypergroup(&table, subgroup)?;
    let zero = carrier.index_of("0H");
    Ok(structure_output(&Structure::Hypergroup { carrier, add, zero }))
}
