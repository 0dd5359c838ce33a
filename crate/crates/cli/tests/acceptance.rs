//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::Instant;

use silt_core::algebra::build::build;
use silt_core::algebra::catalog::catalog;
use silt_core::algebra::constructions::trivial_extension;
use silt_core::algebra::fdalg::FiniteDimAlgebra;
use silt_core::enumerate::{
    adachi_subset, check_properties, count, enumerate, strata_by_quotients, strata_counts, support_rank_counts, Count,
    ExchangeGraph, Parallelism,
};
use silt_core::reductions::reduce;
use silt_core::Q;

const LIMIT: usize = 100_000;
const PAR: Parallelism = Parallelism::Parallel;

type Outcome = Result<String, String>;
type Check = fn(&mut Runs) -> Outcome;

fn alg(name: &str) -> FiniteDimAlgebra<Q> {
    build(&catalog(name, None).expect("catalog entry")).expect("algebra builds")
}

/// Graphs are cached so the property suite can revisit every completed run.
#[derive(Default)]
struct Runs {
    graphs: BTreeMap<String, (FiniteDimAlgebra<Q>, ExchangeGraph<Q>)>,
}

impl Runs {
    fn run(&mut self, name: &str) -> Result<Count, String> {
        if !self.graphs.contains_key(name) {
            let a = alg(name);
            let g = enumerate(&a, LIMIT, PAR).map_err(|e| format!("{name}: {e}"))?;
            self.graphs.insert(name.to_string(), (a, g));
        }
        Ok(self.graphs[name].1.count())
    }
}

fn table(runs: &mut Runs, names: &[String], expected: &[usize]) -> Outcome {
    let mut bad = Vec::new();
    for (n, &e) in names.iter().zip(expected) {
        let t = Instant::now();
        let c = runs.run(n)?;
        let secs = t.elapsed().as_secs();
        if c != Count::Finite(e) || secs > 600 {
            bad.push(format!("{n}={c} in {secs}s (want {e})"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} algebras match", names.len()))
    } else {
        Err(bad.join(", "))
    }
}

fn criterion_1(runs: &mut Runs) -> Outcome {
    let names: Vec<String> = (1..=16).map(|i| format!("A{i}")).collect();
    table(runs, &names, &[24, 6, 192, 132, 8, 8, 108, 100, 108, 116, 100, 32, 28, 32, 30, 30])
}

fn criterion_2(runs: &mut Runs) -> Outcome {
    let names: Vec<String> = (1..=9).map(|i| format!("L{i}")).collect();
    let head = table(runs, &names, &[8, 8, 6, 32, 28, 32, 30, 30, 192])?;
    let l10 = alg("L10");
    let bounded = count(&l10, 500, PAR).map_err(|e| e.to_string())?;
    if bounded.value() < 500 {
        return Err(format!("L10 at limit 500 gave {bounded}"));
    }
    let exact = runs.run("L10")?;
    let strata = strata_by_quotients(&l10, LIMIT, PAR).map_err(|e| e.to_string())?;
    if exact != Count::Finite(strata.total) {
        return Err(format!("L10 {exact} but strata sum {}", strata.total));
    }
    Ok(format!("{head}; L10 at 500 gives {bounded}; L10 = {exact} = strata sum"))
}

fn check_strata(name: &str, want: &[(&[i64], usize)], total: usize) -> Result<(), String> {
    let s = strata_counts(&alg(name), LIMIT, PAR).map_err(|e| e.to_string())?;
    if s.total != total {
        return Err(format!("{name} total {}", s.total));
    }
    for (set, v) in want {
        if s.get(set) != Some(*v) {
            return Err(format!("{name} t_{set:?} = {:?}, want {v}", s.get(set)));
        }
    }
    Ok(())
}

fn criterion_3(_: &mut Runs) -> Outcome {
    let mut a4: Vec<(&[i64], usize)> = vec![
        (&[], 79),
        (&[1], 9),
        (&[3], 13),
        (&[4], 13),
        (&[1, 3], 3),
        (&[1, 4], 3),
        (&[3, 4], 3),
        (&[1, 3, 4], 1),
    ];
    let with_two: [&[i64]; 8] = [&[2], &[1, 2], &[2, 3], &[2, 4], &[1, 2, 3], &[1, 2, 4], &[2, 3, 4], &[1, 2, 3, 4]];
    a4.extend(with_two.iter().map(|s| (*s, 1)));
    check_strata("A4", &a4, 132)?;
    let a10: Vec<(&[i64], usize)> = vec![
        (&[1, 2, 3, 4], 1),
        (&[1, 2, 3], 1),
        (&[1, 2, 4], 1),
        (&[1, 3, 4], 1),
        (&[2, 3, 4], 1),
        (&[1, 2], 2),
        (&[1, 3], 2),
        (&[1, 4], 2),
        (&[2], 2),
        (&[2, 3], 1),
        (&[2, 4], 1),
        (&[3, 4], 3),
        (&[1], 10),
        (&[3], 8),
        (&[4], 8),
        (&[], 72),
    ];
    check_strata("A10", &a10, 116)?;
    Ok("A4 and A10 tables match in all 16 subsets".into())
}

fn criterion_4(runs: &mut Runs) -> Outcome {
    let gamma = reduce(&alg("preproj-A4")).map_err(|e| e.to_string())?;
    let n = gamma.num_vertices();
    let first = adachi_subset(&gamma, 0, LIMIT, PAR).map_err(|e| e.to_string())?.len();
    let last = adachi_subset(&gamma, n - 1, LIMIT, PAR).map_err(|e| e.to_string())?.len();
    let pre = runs.run("preproj-A4")?;
    let a7 = runs.run("A7")?;
    if first == 6 && last == 6 && pre == Count::Finite(120) && a7.value() + first + last == pre.value() {
        Ok(format!("|N| = {first} at vertex 1 and {last} at vertex 4; A7 = {a7} = 120 - 12"))
    } else {
        Err(format!("|N| = {first}/{last}, preproj-A4 = {pre}, A7 = {a7}"))
    }
}

fn criterion_5(_: &mut Runs) -> Outcome {
    let mut names: Vec<String> = ["A1", "A2", "A5", "A6"].map(String::from).to_vec();
    names.extend((12..=16).map(|i| format!("A{i}")));
    names.extend((1..=9).map(|i| format!("L{i}")));
    let mut bad = Vec::new();
    for n in &names {
        let a = alg(n);
        let r = reduce(&a).map_err(|e| e.to_string())?;
        let g = enumerate(&a, LIMIT, PAR).map_err(|e| e.to_string())?;
        let h = enumerate(&r, LIMIT, PAR).map_err(|e| e.to_string())?;
        if g.count() != h.count() || h.expansions > g.expansions {
            bad.push(format!("{n}: {} -> {}, expansions {} -> {}", g.count(), h.count(), g.expansions, h.expansions));
        }
    }
    if bad.is_empty() {
        Ok(format!("{} algebras keep their count with no extra expansions", names.len()))
    } else {
        Err(bad.join(", "))
    }
}

fn criterion_6(runs: &mut Runs) -> Outcome {
    let names = ["preproj-A3", "preproj-A4", "preproj-D4"].map(String::from);
    table(runs, &names, &[24, 120, 192])
}

fn criterion_7(runs: &mut Runs) -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, (a, g)) in &runs.graphs {
        if !g.complete {
            continue;
        }
        match check_properties(a, g, 100) {
            Ok(r) if r.all_ok() => {}
            Ok(r) => bad.push(format!("{name}: {r:?}")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
        let s = strata_counts(a, LIMIT, PAR).map_err(|e| e.to_string())?;
        if s.total != g.nodes.len() {
            bad.push(format!("{name}: strata sum {} vs {}", s.total, g.nodes.len()));
        }
        checked += 1;
    }
    for name in ["A15", "L7"] {
        let op: FiniteDimAlgebra<Q> = build(&catalog(name, None).unwrap().opposite()).unwrap();
        let (c, d) = (runs.run(name)?, count(&op, LIMIT, PAR).map_err(|e| e.to_string())?);
        if c != d {
            bad.push(format!("{name}: {c} vs opposite {d}"));
        }
    }
    if bad.is_empty() {
        Ok(format!("{checked} completed enumerations pass; A15 and L7 match their opposites"))
    } else {
        Err(bad.join(", "))
    }
}

fn criterion_8(_: &mut Runs) -> Outcome {
    let ladder = count(&alg("ladder-5"), 10_000, PAR).map_err(|e| e.to_string())?;
    let ex1 = count(&alg("exrs0-1"), LIMIT, PAR).map_err(|e| e.to_string())?;
    let te = trivial_extension(&alg("exrs0-2")).map_err(|e| e.to_string())?;
    let ex2 = count(&te, LIMIT, PAR).map_err(|e| e.to_string())?;
    let detail = format!("ladder-5 {ladder}, exrs0-1 {ex1}, T(exrs0-2) {ex2}");
    if ladder == Count::AtLeast(10_000) && ex1.is_finite() && ex2.is_finite() {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_9(_: &mut Runs) -> Outcome {
    let s = support_rank_counts(&alg("L10"), 3, LIMIT, PAR).map_err(|e| e.to_string())?;
    if s == [1, 5, 18, 60] {
        Ok(format!("{s:?}"))
    } else {
        Err(format!("{s:?}, want [1, 5, 18, 60]"))
    }
}

fn criterion_10(_: &mut Runs) -> Outcome {
    let dot = |threads: &str| -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_silt"))
            .args(["hasse", "A12", "--format", "dot", "--threads", threads])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(String::from_utf8_lossy(&out.stderr).into_owned());
        }
        Ok(out.stdout)
    };
    let (one, two) = (dot("1")?, dot("2")?);
    if one == two && !one.is_empty() {
        Ok(format!("{} bytes identical for 1 and 2 threads", one.len()))
    } else {
        Err("outputs differ".into())
    }
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("count table A", criterion_1),
        ("count table Λ", criterion_2),
        ("strata", criterion_3),
        ("Adachi gluing", criterion_4),
        ("reduction invariance", criterion_5),
        ("preprojective counts", criterion_6),
        ("property suite", criterion_7),
        ("degenerate cases", criterion_8),
        ("Λ10 support-rank slices", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut runs = Runs::default();
    let mut passed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (tag, detail) = match f(&mut runs) {
            Ok(d) => {
                passed += 1;
                ("PASS", d)
            }
            Err(d) => ("FAIL", d),
        };
        println!("{tag} {:>2} {title}: {detail} [{:.1?}]", i + 1, t.elapsed());
    }
    println!("{passed}/{} criteria pass", criteria.len());
}
