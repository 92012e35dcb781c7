//! The ten acceptance checks. Each prints one PASS or FAIL line; the binary
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zxnf::audit::audit_rules;
use zxnf::check_matrix::{is_valid, lc_orbit_equal, to_graph_form, AdjMatrix, CheckMatrix};
use zxnf::clifford_t::{ct_equal, is_identity_witness, normalize_ct, proportional2, CtGen, CtNormalForm, CtWord};
use zxnf::corpus::{bell_overlap, bell_probability, cz_with_hadamards, cz_with_phase_gates, single_toy_bit_states, toy_zero_operator, zx_corpus};
use zxnf::diagram::{check_stabilizer, non_scalar_node_count, pair, scalar_spider, Colour, Diagram, Phase8};
use zxnf::gslc::diagram_to_gslc;
use zxnf::random::{random_diagram, RandomSpec};
use zxnf::rewrite::{apply, find_redexes, RuleId};
use zxnf::scalar_nf::{nf_to_diagram, nf_to_ring, ring_to_nf, zero_nf_diagram, ScalarNF};
use zxnf::stabilizer_nf::{all_layers, clifford_mod_pauli, equal_stabilizer, graphs_reached, normalize_stabilizer, StabilizerForm, Verdict};
use zxnf::toy::audit::audit_toy_rules;
use zxnf::toy::diagram::{is_toy_zero_nf, random_toy_diagram, ToyDiagram};
use zxnf::toy::gslo::{equal_toy, normalize_toy, ToyForm, ToyVerdict};
use zxnf::toy::rules::{apply_toy, find_toy_redexes, ToyRuleId};
use zxnf::toy::semantics::interpret_toy;
use zxnf::{interpret, structurally_equal, ExactMatrix, RingScalar};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("took {:.1?}, limit {limit:?}", t.elapsed()))
}

/// The verdict the exact matrices call for.
fn oracle_verdict(a: &ExactMatrix, b: &ExactMatrix) -> Verdict {
    if a == b {
        return Verdict::Equal;
    }
    match a.proportional(b) {
        Some(r) => Verdict::ProportionalOnly(r),
        None => Verdict::Unequal,
    }
}

fn random_stabilizer(rng: &mut ChaCha8Rng, n_in: usize, n_out: usize, max_nodes: usize) -> Diagram {
    loop {
        let spiders = rng.gen_range(1..=max_nodes.min(16));
        let d = random_diagram(rng, &RandomSpec::stabilizer(n_in, n_out, spiders));
        if d.node_count() <= max_nodes {
            return d;
        }
    }
}

fn rule_soundness() -> Outcome {
    let t = Instant::now();
    let r = audit_rules(3);
    if let Some(l) = r.failures().next() {
        return Err(format!("{} failing lines, first: {l}", r.failures().count()));
    }
    within(t, Duration::from_secs(120))?;
    let checked: usize = r.lines.iter().map(|l| l.checked).sum();
    Ok(format!("{} rule lines, {checked} instance checks at j=1,3,5,7 in {:.1?}", r.lines.len(), t.elapsed()))
}

fn normalization_preserves_semantics() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut nonzero = 0;
    for t in 0..500 {
        let wires = rng.gen_range(0..=4);
        let n_in = rng.gen_range(0..=wires);
        let d = random_stabilizer(&mut rng, n_in, wires - n_in, 25);
        let m = interpret(&d);
        let g = diagram_to_gslc(&d).map_err(|e| format!("case {t}: {e}"))?;
        for form in [StabilizerForm::GsLc, StabilizerForm::RGsLc] {
            let nf = normalize_stabilizer(&d, form).map_err(|e| format!("case {t}: {e}"))?;
            ensure(interpret(&nf) == m, || format!("case {t}: {form:?} changed the matrix"))?;
            if wires > 0 && !g.is_zero() {
                let n = wires;
                let size = non_scalar_node_count(&nf);
                ensure(size <= (n * n + 7 * n) / 2, || format!("case {t}: {form:?} has {size} nodes on {n} wires"))?;
            }
        }
        nonzero += !g.is_zero() as usize;
    }
    Ok(format!("500 diagrams, {nonzero} nonzero, size bound held"))
}

/// A chain of `len` sound rewrites that stays in the stabilizer fragment.
fn rewrite_chain(rng: &mut ChaCha8Rng, d: &Diagram, len: usize) -> Diagram {
    let mut cur = d.clone();
    for _ in 0..len {
        let mut redexes = Vec::new();
        for rule in RuleId::ALL {
            redexes.extend(find_redexes(&cur, rule));
        }
        redexes.shuffle(rng);
        let next = redexes.iter().filter_map(|r| apply(&cur, r).ok()).find(|n| check_stabilizer(n).is_ok() && n.node_count() < 60);
        match next {
            Some(n) => cur = n,
            None => break,
        }
    }
    cur
}

fn stabilizer_equality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for t in 0..200 {
        let wires = rng.gen_range(1..=3);
        let n_in = rng.gen_range(0..=wires);
        let mut a = random_stabilizer(&mut rng, n_in, wires - n_in, 10);
        let b = match t % 4 {
            0 => random_stabilizer(&mut rng, n_in, wires - n_in, 10),
            1 => {
                let len = rng.gen_range(1..=15);
                rewrite_chain(&mut rng, &a, len)
            }
            2 => {
                let s = ScalarNF::new(2 * rng.gen_range(0..4), rng.gen_range(-4..=4));
                rewrite_chain(&mut rng, &a, 2).tensor(&nf_to_diagram(&s))
            }
            _ => {
                // a zero diagram against a zero or a nonzero one
                let other = if rng.gen_bool(0.5) { a.clone() } else { random_stabilizer(&mut rng, n_in, wires - n_in, 10) };
                let b = other.tensor(&scalar_spider(Colour::Red, Phase8::PI));
                if rng.gen_bool(0.5) {
                    a = a.tensor(&pair(Phase8::HALF_PI, Phase8::MINUS_HALF_PI));
                }
                b
            }
        };
        let (ma, mb) = (interpret(&a), interpret(&b));
        let want = oracle_verdict(&ma, &mb);
        let got = equal_stabilizer(&a, &b).map_err(|e| format!("case {t}: {e}"))?;
        ensure(got == want, || format!("case {t}: verdict {got:?}, oracle {want:?}"))?;
        *seen.entry(match got {
            Verdict::Equal => "equal",
            Verdict::ProportionalOnly(_) => "proportional",
            Verdict::Unequal => "unequal",
        })
        .or_default() += 1;
    }
    ensure(seen.len() == 3, || format!("not every verdict occurred: {seen:?}"))?;
    Ok(format!("200 pairs agree with the oracle {seen:?}"))
}

fn cz_example() -> Outcome {
    let (a, b) = (cz_with_phase_gates(), cz_with_hadamards());
    let v = equal_stabilizer(&a, &b).map_err(|e| e.to_string())?;
    let oracle = interpret(&a).proportional(&interpret(&b)).ok_or("the oracle finds no ratio")?;
    let ratio = match v {
        Verdict::Equal => RingScalar::one(),
        Verdict::ProportionalOnly(r) => r,
        Verdict::Unequal => return Err("declared unequal".into()),
    };
    ensure(ratio == oracle, || format!("ratio {ratio} but oracle {oracle}"))?;
    Ok(format!("equal up to scalar, ratio {ratio}"))
}

fn qkd_example() -> Outcome {
    let z0 = (false, false);
    let z1 = (false, true);
    let plus = (true, false);
    let value = |d: Diagram| interpret(&d).data[0].clone();
    let checks = [
        ("<00| amplitude", value(bell_overlap(z0, z0)), RingScalar::inv_sqrt2()),
        ("<00| probability", value(bell_probability(z0, z0)), RingScalar::half()),
        ("<01| amplitude", value(bell_overlap(z0, z1)), RingScalar::zero()),
        ("<0+| probability", value(bell_probability(z0, plus)), RingScalar::half().mul_pow2(-1)),
    ];
    for (name, got, want) in &checks {
        ensure(got == want, || format!("{name} is {got}, expected {want}"))?;
    }
    Ok("1/sqrt2, 1/2, 0 and 1/4 exactly".into())
}

fn scalar_group() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let random = |rng: &mut ChaCha8Rng| ScalarNF::new(rng.gen_range(0..8), rng.gen_range(-10..=10));
    let one = ScalarNF::one();
    for t in 0..1000 {
        let (a, b, c) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let ctx = || format!("case {t}: {a} {b} {c}");
        ensure(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || format!("{}: associativity", ctx()))?;
        ensure(a.mul(&one) == a && one.mul(&a) == a, || format!("{}: identity", ctx()))?;
        let inv = a.inverse().map_err(|e| format!("{}: {e}", ctx()))?;
        ensure(a.mul(&inv) == one && inv.mul(&a) == one, || format!("{}: inverse", ctx()))?;
        ensure(a.mul(&b) == b.mul(&a), || format!("{}: commutativity", ctx()))?;
        let prod = &nf_to_ring(&a) * &nf_to_ring(&b);
        ensure(ring_to_nf(&prod).ok() == Some(a.mul(&b)), || format!("{}: homomorphism", ctx()))?;
        ensure(nf_to_ring(&a.mul(&b)) == prod, || format!("{}: ring image", ctx()))?;
        let v = interpret(&nf_to_diagram(&a)).data[0].clone();
        ensure(v == nf_to_ring(&a) && ring_to_nf(&v).ok() == Some(a), || format!("{}: diagram round trip", ctx()))?;
    }
    Ok("1000 triples: group axioms, homomorphism and diagram round trip".into())
}

fn zero_normal_form() -> Outcome {
    let mut diagrams: Vec<(String, Diagram)> = zx_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in 0..300 {
        let wires = rng.gen_range(0..=4);
        let n_in = rng.gen_range(0..=wires);
        let mut d = random_stabilizer(&mut rng, n_in, wires - n_in, 12);
        if t % 3 == 0 {
            d = d.tensor(&scalar_spider(Colour::Green, Phase8::PI));
        }
        diagrams.push((format!("random {t}"), d));
    }
    let (mut zeros, mut nonzeros) = (0, 0);
    for (name, d) in &diagrams {
        let is_zero = interpret(d).is_zero();
        let g = diagram_to_gslc(d).map_err(|e| format!("{name}: {e}"))?;
        ensure(g.is_zero() == is_zero, || format!("{name}: recognized zero {} but oracle {is_zero}", g.is_zero()))?;
        if is_zero {
            zeros += 1;
            let want = zero_nf_diagram(d.n_inputs(), d.n_outputs());
            for form in [StabilizerForm::GsLc, StabilizerForm::RGsLc] {
                let nf = normalize_stabilizer(d, form).map_err(|e| format!("{name}: {e}"))?;
                ensure(structurally_equal(&nf, &want), || format!("{name}: {form:?} is not the zero normal form"))?;
            }
        } else {
            nonzeros += 1;
        }
    }
    ensure(zeros >= 50 && nonzeros >= 50, || format!("too few cases: {zeros} zero, {nonzeros} nonzero"))?;
    Ok(format!("{zeros} zero and {nonzeros} nonzero diagrams, detection exact"))
}

fn ht_words(max_len: usize) -> Vec<CtWord> {
    let mut out = vec![CtWord(Vec::new())];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .into_iter()
            .flat_map(|w: Vec<CtGen>| [CtGen::H, CtGen::Z(Phase8::new(1))].map(|g| [w.clone(), vec![g]].concat()))
            .collect();
        out.extend(layer.iter().cloned().map(CtWord));
    }
    out
}

fn clifford_t_uniqueness() -> Outcome {
    let t = Instant::now();
    let identity = normalize_ct(&CtWord(Vec::new()));
    ensure(is_identity_witness(&identity), || "the identity fails its own certificate".into())?;
    let check_not_identity = |nf: &CtNormalForm| -> Result<(), String> {
        if *nf == identity {
            return Ok(());
        }
        let proportional_to_one = proportional2(&nf.to_word().matrix(), &identity.to_word().matrix());
        ensure(!proportional_to_one && !is_identity_witness(nf), || format!("{nf} looks like the identity"))
    };
    // exhaustive words: classes by normal form must be exactly the classes
    // of proportional matrices
    let words = ht_words(10);
    let mut classes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    let mats: Vec<_> = words.iter().map(|w| w.matrix()).collect();
    for (i, w) in words.iter().enumerate() {
        let nf = normalize_ct(w);
        check_not_identity(&nf)?;
        classes.entry(nf.to_string()).or_default().push(i);
    }
    for (nf, members) in &classes {
        let r = members[0];
        for &i in members {
            ensure(proportional2(&mats[i], &mats[r]), || format!("{} and {} share {nf} but differ", words[i], words[r]))?;
        }
    }
    let reps: Vec<usize> = classes.values().map(|m| m[0]).collect();
    for (x, &i) in reps.iter().enumerate() {
        for &j in &reps[x + 1..] {
            ensure(!proportional2(&mats[i], &mats[j]), || format!("{} and {} are proportional", words[i], words[j]))?;
        }
    }
    // random words, all pairs
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let gens = [CtGen::Z(Phase8::HALF_PI), CtGen::H, CtGen::Z(Phase8::new(1))];
    let random: Vec<CtWord> = (0..500).map(|_| CtWord((0..rng.gen_range(0..=14)).map(|_| *gens.choose(&mut rng).unwrap()).collect())).collect();
    let rmats: Vec<_> = random.iter().map(|w| w.matrix()).collect();
    let mut equal_pairs = 0;
    for i in 0..random.len() {
        check_not_identity(&normalize_ct(&random[i]))?;
        for j in i + 1..random.len() {
            let want = proportional2(&rmats[i], &rmats[j]);
            ensure(ct_equal(&random[i], &random[j]) == want, || format!("{} vs {}", random[i], random[j]))?;
            equal_pairs += want as usize;
        }
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{} words in {} classes, 500 random words with {equal_pairs} equal pairs, {:.1?}", words.len(), classes.len(), t.elapsed()))
}

fn check_matrix_cross_oracle() -> Outcome {
    for rows in ["10\n10\n01\n01", "11\n11\n01\n01"] {
        let s = CheckMatrix::new(rows.parse().map_err(|e| format!("{e}"))?).map_err(|e| e.to_string())?;
        ensure(is_valid(&s), || format!("{rows:?} is not valid"))?;
        let (adj, _) = to_graph_form(&s).map_err(|e| e.to_string())?;
        ensure(adj == AdjMatrix::from_edges(2, &[(0, 1)]), || format!("{rows:?} reduces to {:?}", adj.0))?;
    }
    let reps = clifford_mod_pauli();
    let mut pairs = 0;
    for n in 1..=4 {
        let graphs = AdjMatrix::all(n);
        for a in &graphs {
            let reached = graphs_reached(&a.0, all_layers(&reps, n), true);
            for b in &graphs {
                let want = reached.contains(&b.0);
                let got = lc_orbit_equal(a, b).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{:?} vs {:?}: lc {got}, diagrams {want}", a.0, b.0))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("Bell matrices give K2; {pairs} graph pairs agree"))
}

fn toy_relation_pair(rng: &mut ChaCha8Rng, t: usize) -> (ToyDiagram, ToyDiagram) {
    let bits = rng.gen_range(1..=3);
    let n_in = rng.gen_range(0..=bits);
    let size = rng.gen_range(1..=6);
    let a = random_toy_diagram(rng, n_in, bits - n_in, size);
    let b = match t % 3 {
        0 => {
            let size = rng.gen_range(1..=6);
            random_toy_diagram(rng, n_in, bits - n_in, size)
        }
        1 => normalize_toy(&a, ToyForm::RGsLo).expect("toy diagrams normalize"),
        _ => {
            let mut cur = a.clone();
            for _ in 0..rng.gen_range(1..=10) {
                let mut rs = Vec::new();
                for rule in ToyRuleId::ALL {
                    rs.extend(find_toy_redexes(&cur, rule));
                }
                let Some(r) = rs.choose(rng) else { break };
                cur = apply_toy(&cur, r).expect("found redexes apply");
            }
            cur
        }
    };
    (a, b)
}

fn toy_theory() -> Outcome {
    let r = audit_toy_rules(3);
    if let Some(l) = r.failures().next() {
        return Err(format!("toy audit: {l}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut equal = 0;
    for t in 0..200 {
        let (a, b) = toy_relation_pair(&mut rng, t);
        let want = interpret_toy(&a) == interpret_toy(&b);
        let got = equal_toy(&a, &b).map_err(|e| format!("pair {t}: {e}"))? == ToyVerdict::Equal;
        ensure(got == want, || format!("pair {t}: equal_toy {got}, relations {want}"))?;
        equal += want as usize;
    }
    let states = single_toy_bit_states();
    for (i, (na, a)) in states.iter().enumerate() {
        for (j, (nb, b)) in states.iter().enumerate() {
            let v = equal_toy(a, b).map_err(|e| e.to_string())?;
            ensure((v == ToyVerdict::Equal) == (i == j), || format!("{na} vs {nb}: {v:?}"))?;
        }
    }
    let z = normalize_toy(&toy_zero_operator(), ToyForm::GsLo).map_err(|e| e.to_string())?;
    ensure(is_toy_zero_nf(&z), || "the zero operator does not reach the zero form".into())?;
    for n in 0..3 {
        let padded = toy_zero_operator().tensor(&random_toy_diagram(&mut rng, 0, n, 2));
        let z = normalize_toy(&padded, ToyForm::RGsLo).map_err(|e| e.to_string())?;
        ensure(is_toy_zero_nf(&z), || format!("the zero operator with {n} extra outputs does not reach the zero form"))?;
    }
    Ok(format!("{} audit lines, 200 pairs ({equal} equal), six states distinct, zero form reached", r.lines.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("rule soundness sweep", rule_soundness),
        ("normalization preserves semantics", normalization_preserves_semantics),
        ("stabilizer equality", stabilizer_equality),
        ("controlled-Z decompositions", cz_example),
        ("key distribution probabilities", qkd_example),
        ("scalar group", scalar_group),
        ("zero normal form", zero_normal_form),
        ("Clifford+T uniqueness", clifford_t_uniqueness),
        ("check matrix cross-oracle", check_matrix_cross_oracle),
        ("toy theory", toy_theory),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match out {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1)
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
