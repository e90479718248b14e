//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Runs without the libtest harness so the lines are always
//! printed.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use f4_multiplet::exact::{LinForm, Rational, SignClass};
use f4_multiplet::export::{multiplet_to_dot, multiplet_to_json, roots_to_json};
use f4_multiplet::multiplet::fixtures::{match_fixtures, FixtureTable, NodeName};
use f4_multiplet::multiplet::{
    arrow_labels, generate, ks_pairing, orbit_quotient_oracle, MultipletGraph, MultipletNode,
    Params,
};
use f4_multiplet::parabolic::{classify_roots, ParabolicSpec};
use f4_multiplet::rootsys::{epsilon_coords, EpsilonVector, LengthClass, RootSystem, RootVector};
use f4_multiplet::verma::{rho_in_root_basis, Weight};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const ROOTS_LIMIT: Duration = Duration::from_secs(1);
const WEYL_LIMIT: Duration = Duration::from_secs(5);
const MULTIPLET_LIMIT: Duration = Duration::from_secs(10);

const LONG: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [1, 1, 0, 0],
    [0, 1, 2, 0],
    [1, 1, 2, 0],
    [1, 2, 2, 0],
    [0, 1, 2, 2],
    [1, 1, 2, 2],
    [1, 2, 2, 2],
    [1, 2, 4, 2],
    [1, 3, 4, 2],
    [2, 3, 4, 2],
];

const SHORT: [[i64; 4]; 12] = [
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 1, 1, 0],
    [0, 0, 1, 1],
    [1, 1, 1, 0],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
    [0, 1, 2, 1],
    [1, 2, 2, 1],
    [1, 1, 2, 1],
    [1, 2, 3, 1],
    [1, 2, 3, 2],
];

const HISTOGRAM: [usize; 21] = [
    1, 1, 2, 3, 4, 5, 6, 7, 7, 8, 8, 8, 7, 7, 6, 5, 4, 3, 2, 1, 1,
];

fn roots_of(list: &[[i64; 4]]) -> BTreeSet<RootVector> {
    list.iter().map(|c| RootVector::new(*c)).collect()
}

fn e(s: &str) -> Rational {
    s.parse().unwrap()
}

/// ε_i, ε_j ± ε_k (j < k) and (ε1 ± ε2 ± ε3 ± ε4)/2.
fn epsilon_positive_set() -> BTreeSet<Vec<Rational>> {
    let mut out = BTreeSet::new();
    for i in 0..4 {
        let mut v = vec![e("0"); 4];
        v[i] = e("1");
        out.insert(v);
    }
    for j in 0..4 {
        for k in j + 1..4 {
            for sign in ["1", "-1"] {
                let mut v = vec![e("0"); 4];
                v[j] = e("1");
                v[k] = e(sign);
                out.insert(v);
            }
        }
    }
    for mask in 0..8 {
        let mut v = vec![e("1/2")];
        for bit in 0..3 {
            v.push(if mask & (1 << bit) == 0 {
                e("1/2")
            } else {
                e("-1/2")
            });
        }
        out.insert(v);
    }
    out
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed())
}

fn within(label: &str, took: Duration, limit: Duration) -> Result<(), String> {
    if took < limit {
        Ok(())
    } else {
        Err(format!("{label} took {took:?}, limit {limit:?}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn named_graph(params: Params) -> Result<MultipletGraph, String> {
    let rs = RootSystem::f4();
    let mut g = generate(&rs, &ParabolicSpec::f4_sl3_sl2(), params).map_err(|e| e.to_string())?;
    let report = match_fixtures(&g, &FixtureTable::builtin());
    g.assign_names(&report);
    Ok(g)
}

fn node<'a>(g: &'a MultipletGraph, name: &str) -> Result<&'a MultipletNode, String> {
    let n: NodeName = name.parse().map_err(|e| format!("{e:?}"))?;
    g.node_by_name(&n)
        .ok_or_else(|| format!("no node named {name}"))
}

fn criterion_1() -> Outcome {
    let (rs, took) = timed(RootSystem::f4);
    within("root generation", took, ROOTS_LIMIT)?;
    let long: BTreeSet<RootVector> = rs.long_roots().cloned().collect();
    let short: BTreeSet<RootVector> = rs.short_roots().cloned().collect();
    ensure(rs.len() == 24, || format!("{} positive roots", rs.len()))?;
    ensure(long == roots_of(&LONG), || format!("long roots {long:?}"))?;
    ensure(short == roots_of(&SHORT), || {
        format!("short roots {short:?}")
    })?;
    let eps: BTreeSet<Vec<Rational>> = rs
        .positive()
        .iter()
        .map(|r| epsilon_coords(r).map(|EpsilonVector(v)| v.to_vec()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(eps == epsilon_positive_set(), || {
        "ε-images differ from the ε-basis set".into()
    })?;
    for r in rs.positive() {
        let class = rs.length_class(r).map_err(|e| e.to_string())?;
        let odd = r.coords()[2] % 2 != 0 || r.coords()[3] % 2 != 0;
        ensure((class == LengthClass::Short) == odd, || {
            format!("parity rule fails at {r}")
        })?;
    }
    Ok(format!(
        "24 roots, 12 long / 12 short, ε-set equal ({took:?})"
    ))
}

fn criterion_2() -> Outcome {
    let rs = RootSystem::f4();
    let rho = rho_in_root_basis(rs.data()).map_err(|e| e.to_string())?;
    let expected: Vec<Rational> = [8, 15, 21, 11].map(Rational::integer).to_vec();
    ensure(rho == expected, || format!("ρ = {rho:?}"))?;
    let via_weight = Weight::concrete([2; 4])
        .root_basis(rs.data())
        .map_err(|e| e.to_string())?;
    ensure(via_weight == Some(expected), || {
        format!("Λ+ρ at labels 2 gives {via_weight:?}")
    })?;
    Ok("ρ = (8, 15, 21, 11)".into())
}

fn criterion_3() -> Outcome {
    let rs = RootSystem::f4();
    let (w, took) = timed(|| rs.weyl_order());
    let w = w.map_err(|e| e.to_string())?;
    within("Weyl orbit enumeration", took, WEYL_LIMIT)?;
    let a2 = rs
        .subsystem(&[0, 1])
        .and_then(|s| s.weyl_order())
        .map_err(|e| e.to_string())?;
    let a1 = rs
        .subsystem(&[3])
        .and_then(|s| s.weyl_order())
        .map_err(|e| e.to_string())?;
    ensure(w == 1152 && a2 == 6 && a1 == 2, || {
        format!("|W|={w}, A2 {a2}, A1 {a1}")
    })?;
    Ok(format!("|W|=1152, |W(A2)|=6, |W(A1)|=2 ({took:?})"))
}

fn criterion_4() -> Outcome {
    let part = classify_roots(&RootSystem::f4(), &ParabolicSpec::f4_sl3_sl2());
    let compact: BTreeSet<RootVector> = part.compact.iter().cloned().collect();
    let expected = roots_of(&[[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1]]);
    ensure(compact == expected, || format!("compact {compact:?}"))?;
    ensure(part.noncompact.len() == 20, || {
        format!("{} noncompact", part.noncompact.len())
    })?;
    Ok("compact {α1, α2, α1+α2, α4}, 20 noncompact".into())
}

fn criterion_5() -> Outcome {
    let rs = RootSystem::f4();
    let (g, took) = timed(|| generate(&rs, &ParabolicSpec::f4_sl3_sl2(), Params::Symbolic));
    let g = g.map_err(|e| e.to_string())?;
    within("symbolic generation", took, MULTIPLET_LIMIT)?;
    ensure(g.len() == 96, || format!("{} nodes", g.len()))?;
    let hist = g.level_histogram();
    ensure(hist == HISTOGRAM, || format!("histogram {hist:?}"))?;
    Ok(format!("96 nodes, histogram matches ({took:?})"))
}

fn criterion_6() -> Outcome {
    let rs = RootSystem::f4();
    let p = ParabolicSpec::f4_sl3_sl2();
    let g = generate(&rs, &p, Params::Symbolic).map_err(|e| e.to_string())?;
    let oracle = orbit_quotient_oracle(&rs, &p).map_err(|e| e.to_string())?;
    ensure(
        oracle.orbit_size == 1152 && oracle.m_weyl_order == 12,
        || format!("orbit {} / {}", oracle.orbit_size, oracle.m_weyl_order),
    )?;
    ensure(oracle.dominant.len() == 96, || {
        format!("{} dominant", oracle.dominant.len())
    })?;
    ensure(oracle.dominant == g.weights(), || {
        "node set differs from the oracle".into()
    })?;
    Ok("orbit 1152 / 12 = 96, sets equal".into())
}

fn criterion_7() -> Outcome {
    let g = generate(
        &RootSystem::f4(),
        &ParabolicSpec::f4_sl3_sl2(),
        Params::Symbolic,
    )
    .map_err(|e| e.to_string())?;
    let report = match_fixtures(&g, &FixtureTable::builtin());
    ensure(report.is_bijection(), || report.failures().join("; "))?;
    ensure(report.matched_signatures() == 96, || {
        format!("{} matched", report.matched_signatures())
    })?;
    ensure(report.entries.iter().all(|e| e.level_consistent), || {
        "a fixture pair sits at inconsistent levels".into()
    })?;
    let corrections: Vec<_> = report.corrections().collect();
    for c in &corrections {
        let logged = c
            .chosen_outcome()
            .and_then(|o| o.note.as_ref())
            .is_some_and(|n| n.contains("was:"));
        ensure(logged, || {
            format!("correction {} has no logged original", c.name)
        })?;
    }
    Ok(format!(
        "96/96 matched, {} logged corrections",
        corrections.len()
    ))
}

fn criterion_8() -> Outcome {
    let g = generate(
        &RootSystem::f4(),
        &ParabolicSpec::f4_sl3_sl2(),
        Params::Symbolic,
    )
    .map_err(|e| e.to_string())?;
    let pairs = ks_pairing(&g).map_err(|e| e.to_string())?;
    ensure(pairs.len() == 48, || format!("{} pairs", pairs.len()))?;
    let covered: BTreeSet<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    ensure(covered.len() == 96, || {
        "pairing does not cover every node".into()
    })?;
    for &(a, b) in &pairs {
        let (x, y) = (&g.nodes[a].signature, &g.nodes[b].signature);
        ensure(
            x.n1 == y.n2 && x.n2 == y.n1 && x.c == -&y.c && x.n4 == y.n4,
            || format!("{x} and {y} are not KS partners"),
        )?;
        ensure(g.nodes[a].level + g.nodes[b].level == 20, || {
            format!("levels of {a}, {b}")
        })?;
    }
    Ok("48 pairs, fixed-point-free, levels sum to 20".into())
}

fn criterion_9() -> Outcome {
    let g = named_graph(Params::Concrete([1, 1, 1, 1]))?;
    let minus0 = node(&g, "χ^-_0")?;
    let plus0 = node(&g, "χ^+_0")?;
    let seven = LinForm::constant(Rational::integer(7));
    ensure(minus0.signature.d().is_zero(), || {
        format!("d(χ^-_0) = {}", minus0.signature.d())
    })?;
    ensure(plus0.signature.d() == &seven, || {
        format!("d(χ^+_0) = {}", plus0.signature.d())
    })?;
    let rs = RootSystem::f4();
    let part = classify_roots(&rs, &ParabolicSpec::f4_sl3_sl2());
    for beta in &part.noncompact {
        let m = plus0
            .symbolic_weight
            .hc_param(&rs, beta)
            .map_err(|e| e.to_string())?;
        ensure(m.sign_over_positive() == SignClass::GenericNegative, || {
            format!("χ^+_0 parameter {m} at {beta} is not negative")
        })?;
    }
    Ok("d(χ^-_0)=0, d(χ^+_0)=7, 20 noncompact forms negative".into())
}

fn criterion_10() -> Outcome {
    let g = generate(
        &RootSystem::f4(),
        &ParabolicSpec::f4_sl3_sl2(),
        Params::Symbolic,
    )
    .map_err(|e| e.to_string())?;
    let report = arrow_labels(&g);
    ensure(report.violations.is_empty(), || {
        report.violations.join("; ")
    })?;
    ensure(report.arrows.len() == g.diagram_edges.len(), || {
        "unlabelled diagram edge".into()
    })?;
    for a in &report.arrows {
        ensure((1..=4).contains(&a.n), || format!("arrow label {}", a.n))?;
        let e = &g.edges[a.edge];
        ensure(e.degree == LinForm::basis(usize::from(a.n) - 1), || {
            format!("degree {}", e.degree)
        })?;
        ensure(g.nodes[a.dst].level == g.nodes[a.src].level + 1, || {
            format!("level jump at edge {}", a.edge)
        })?;
    }
    ensure(g.diagram_is_connected(), || {
        "diagram not weakly connected".into()
    })?;
    let bottom: Vec<usize> = g
        .nodes
        .iter()
        .filter(|n| n.level == 20)
        .map(|n| n.id)
        .collect();
    ensure(report.sinks == bottom, || {
        format!("sinks {:?}", report.sinks)
    })?;
    Ok(format!(
        "{} diagram edges step one level, labels m1..m4, connected",
        report.arrows.len()
    ))
}

fn run_binary(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_f4"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("f4 {args:?} exited with {}", out.status)
    })?;
    Ok(out.stdout)
}

fn criterion_11() -> Outcome {
    let rs = RootSystem::f4();
    let g =
        generate(&rs, &ParabolicSpec::f4_sl3_sl2(), Params::Symbolic).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for n in &g.nodes {
        for beta in rs.positive() {
            let w = &n.symbolic_weight;
            let m = w.hc_param(&rs, beta).map_err(|e| e.to_string())?;
            ensure(
                matches!(
                    m.sign_over_positive(),
                    SignClass::GenericPositive | SignClass::GenericNegative
                ),
                || format!("{m} at node {} root {beta} is not sign-definite", n.id),
            )?;
            let back = w
                .shifted_reflect(&rs, beta)
                .and_then(|r| r.shifted_reflect(&rs, beta))
                .map_err(|e| e.to_string())?;
            ensure(&back == w, || {
                format!("reflection along {beta} is not an involution")
            })?;
            checked += 1;
        }
    }
    let theta = RootVector::new([2, 3, 4, 2]);
    let h = Weight::rho()
        .hc_param(&rs, &theta)
        .map_err(|e| e.to_string())?;
    ensure(h == LinForm::constant(Rational::integer(8)), || {
        format!("hc_param(ρ, θ) = {h}")
    })?;

    let named = named_graph(Params::Symbolic)?;
    let j1 = multiplet_to_json(&named).map_err(|e| e.to_string())?;
    let j2 = multiplet_to_json(&named_graph(Params::Symbolic)?).map_err(|e| e.to_string())?;
    ensure(j1 == j2, || "multiplet JSON differs between runs".into())?;
    ensure(
        multiplet_to_dot(&named) == multiplet_to_dot(&named_graph(Params::Symbolic)?),
        || "DOT differs between runs".into(),
    )?;
    ensure(
        roots_to_json(&rs).ok() == roots_to_json(&RootSystem::f4()).ok(),
        || "roots JSON differs".into(),
    )?;
    for args in [
        &["export", "--format", "json"][..],
        &["multiplet", "--symbolic", "--format", "dot"][..],
        &["roots", "--format", "json"][..],
    ] {
        ensure(run_binary(args)? == run_binary(args)?, || {
            format!("f4 {args:?} is not deterministic")
        })?;
    }
    Ok(format!(
        "{checked} parameters sign-definite and involutive, (ρ,θ∨)=8, exports byte-identical"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("root system", criterion_1),
        ("rho", criterion_2),
        ("Weyl order", criterion_3),
        ("parabolic roots", criterion_4),
        ("multiplet size", criterion_5),
        ("oracle equivalence", criterion_6),
        ("fixture bijection", criterion_7),
        ("KS duality", criterion_8),
        ("conformal weights", criterion_9),
        ("arrow structure", criterion_10),
        ("property suite", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
