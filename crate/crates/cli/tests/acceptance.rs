//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

use std::collections::BTreeMap;
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use groupoid_core::{
    action_groupoid, are_isomorphic, base, build_abelian_extension, check_hom, cobase, disjoint_union,
    dualize_groupoid, enumerate_groupoids, enumerate_labeled, from_classical, group_groupoid, hopf_check,
    is_group_object, pair_groupoid, partial_bijection_groupoid, product_groupoid, self_action,
    structure_theorem_check, to_classical, validate_action, validate_algebra_groupoid, validate_cogroupoid,
    validate_groupoid, AxiomId, CayleyTable, Field, FiniteGroupoid, GroupoidHom,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const MUTATIONS: usize = 1000;
const MUTATION_SEED: u64 = 0x5eed_0001;
const EXTENSIONS: usize = 100;
const EXTENSION_SEED: u64 = 0x5eed_0006;

const BOUND_1: Duration = Duration::from_secs(10);
const BOUND_3: Duration = Duration::from_secs(60);
const BOUND_6: Duration = Duration::from_secs(30);
const BOUND_7: Duration = Duration::from_secs(120);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, bound: Duration) -> Result<Duration, String> {
    let e = t.elapsed();
    ensure(e < bound, || format!("took {:.2?}, bound {bound:?}", e))?;
    Ok(e)
}

fn groups_up_to_8() -> Vec<(String, CayleyTable)> {
    let mut v: Vec<(String, CayleyTable)> = (1..=8).map(|k| (format!("Z{k}"), CayleyTable::cyclic(k))).collect();
    v.push(("V4".into(), CayleyTable::klein_four()));
    v.push(("D3".into(), CayleyTable::dihedral(3)));
    v.push(("Z2xZ4".into(), CayleyTable::direct_product(&CayleyTable::cyclic(2), &CayleyTable::cyclic(4))));
    v.push(("Z2^3".into(), CayleyTable::direct_product(&CayleyTable::klein_four(), &CayleyTable::cyclic(2))));
    v.push(("D4".into(), CayleyTable::dihedral(4)));
    v.push(("Q8".into(), CayleyTable::quaternion()));
    v
}

fn fixtures() -> Vec<(String, FiniteGroupoid)> {
    let mut v: Vec<(String, FiniteGroupoid)> =
        (1..=4).map(|k| (format!("pair({k})"), pair_groupoid(k).unwrap())).collect();
    for (name, t) in groups_up_to_8() {
        v.push((name, group_groupoid(&t).unwrap()));
    }
    for k in 1..=3 {
        v.push((format!("partial-bij({k})"), partial_bijection_groupoid(k, 100).unwrap()));
    }
    let g = |name: &str| v.iter().find(|(n, _)| n == name).unwrap().1.clone();
    let extra = vec![
        ("pair(2)+Z3".to_string(), disjoint_union(&g("pair(2)"), &g("Z3")).unwrap()),
        ("partial-bij(2)+V4".to_string(), disjoint_union(&g("partial-bij(2)"), &g("V4")).unwrap()),
        ("pair(2)xZ2".to_string(), product_groupoid(&g("pair(2)"), &g("Z2")).unwrap()),
        ("pair(3)xD3".to_string(), product_groupoid(&g("pair(3)"), &g("D3")).unwrap()),
        ("partial-bij(2)xpair(2)".to_string(), product_groupoid(&g("partial-bij(2)"), &g("pair(2)")).unwrap()),
    ];
    v.extend(extra);
    v
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let fx = fixtures();
    // The group catalogue really has the 14 groups of order at most 8.
    let groups = groups_up_to_8();
    for (i, (a, ta)) in groups.iter().enumerate() {
        for (b, tb) in &groups[i + 1..] {
            let (ga, gb) = (group_groupoid(ta).unwrap(), group_groupoid(tb).unwrap());
            ensure(are_isomorphic(&ga, &gb).is_none(), || format!("{a} ≅ {b}"))?;
        }
    }
    for (name, g) in &fx {
        let r = validate_groupoid(g).unwrap();
        ensure(r.is_valid(), || format!("{name}: {:?}", r.violations))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(MUTATION_SEED);
    let mut revalidated = Vec::new();
    for i in 0..MUTATIONS {
        // Redraw until the entry really changes; one-element carriers
        // only admit the mu mutation.
        let (name, what, p) = loop {
            let (name, g) = &fx[rng.gen_range(0..fx.len())];
            let n = g.n();
            let mut p = g.to_parts();
            let what = match rng.gen_range(0..4) {
                0 => {
                    let x = rng.gen_range(0..n);
                    p.sigma[x] = rng.gen_range(0..n);
                    format!("sigma[{x}]")
                }
                1 => {
                    let x = rng.gen_range(0..n);
                    p.tau[x] = rng.gen_range(0..n);
                    format!("tau[{x}]")
                }
                2 => {
                    let x = rng.gen_range(0..n);
                    p.upsilon.as_mut().unwrap()[x] = rng.gen_range(0..n);
                    format!("upsilon[{x}]")
                }
                _ => {
                    let x = rng.gen_range(0..n * n);
                    // Any value in {undefined} ∪ carrier.
                    let new = rng.gen_range(0..=n);
                    p.mu[x] = (new < n).then_some(new);
                    format!("mu[{}][{}]", x / n, x % n)
                }
            };
            if p != g.to_parts() {
                break (name, what, p);
            }
        };
        let lawful = oracle::lawful(&p);
        let h = FiniteGroupoid::from_parts(p).unwrap();
        let r = validate_groupoid(&h).unwrap();
        ensure(!r.has_soundness_bug(), || format!("mutation {i} of {name} ({what}): derived-only failure"))?;
        if r.is_valid() {
            ensure(lawful, || format!("mutation {i} of {name} ({what}) passed but is not a groupoid"))?;
            revalidated.push(format!("{name} {what}"));
        } else {
            ensure(!lawful, || format!("mutation {i} of {name} ({what}) rejected but is a groupoid"))?;
        }
    }
    let e = within(t, BOUND_1)?;
    Ok(format!(
        "{} fixtures valid; {MUTATIONS} mutations, {} re-validated {:?}; {e:.2?}",
        fx.len(),
        revalidated.len(),
        revalidated
    ))
}

fn criterion_2() -> Outcome {
    let mut structures = 0;
    for n in 0..=4 {
        for g in enumerate_labeled(n, 6).unwrap() {
            structures += 1;
            for x in 0..n {
                ensure(g.sigma(g.sigma(x)) == g.sigma(x), || format!("ΣΣ≠Σ in {:?}", g.encode()))?;
                ensure(g.tau(g.tau(x)) == g.tau(x), || format!("TT≠T in {:?}", g.encode()))?;
                ensure(g.sigma(g.upsilon(x)) == g.tau(x), || format!("ΣΥ≠T in {:?}", g.encode()))?;
            }
        }
    }
    let reps: Vec<FiniteGroupoid> =
        (1..=4).flat_map(|n| enumerate_groupoids(n, 6).unwrap().representatives).collect();
    let mut homs = 0usize;
    for g in &reps {
        for k in &reps {
            let total = k.n().pow(g.n() as u32);
            for code in 0..total {
                let map: Vec<usize> = (0..g.n()).map(|x| code / k.n().pow(x as u32) % k.n()).collect();
                let r = check_hom(&GroupoidHom::new(g, k, map.clone())).unwrap();
                if [AxiomId::H1, AxiomId::H2, AxiomId::H3].iter().any(|&a| r.has(a)) {
                    continue;
                }
                homs += 1;
                let square = (0..g.n()).all(|x| map[g.upsilon(x)] == k.upsilon(map[x]));
                ensure(square && r.is_valid(), || format!("Υ square fails for {map:?}: {:?}", r.violations))?;
            }
        }
    }
    Ok(format!("{structures} labeled structures, {homs} homomorphisms between {} representatives", reps.len()))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let expected = [(1, 1), (2, 2), (3, 3), (4, 7)];
    let mut got = Vec::new();
    for (n, want) in expected {
        let s = enumerate_groupoids(n, 6).unwrap();
        ensure(s.count_up_to_iso == want, || format!("n={n}: {} classes, expected {want}", s.count_up_to_iso))?;
        if n <= 3 {
            let naive = oracle::naive_labeled(n);
            ensure(naive.len() == s.count_labeled, || format!("n={n}: labeled {} vs naive {}", s.count_labeled, naive.len()))?;
            let classes = oracle::brute_class_count(&naive);
            ensure(classes == want, || format!("n={n}: naive oracle finds {classes} classes"))?;
        } else {
            let c = oracle::structural_class_count(n);
            ensure(c == want, || format!("n={n}: classification gives {c}"))?;
        }
        got.push(s.count_up_to_iso);
    }
    let e = within(t, BOUND_3)?;
    Ok(format!("classes {got:?}; {e:.2?}"))
}

fn representatives_up_to_5() -> Vec<FiniteGroupoid> {
    (1..=5).flat_map(|n| enumerate_groupoids(n, 6).unwrap().representatives).collect()
}

fn criterion_4() -> Outcome {
    let reps = representatives_up_to_5();
    for g in &reps {
        let c = to_classical(g).unwrap();
        let r = c.validate().unwrap();
        ensure(r.is_valid(), || format!("{:?}: {:?}", g.encode(), r.violations))?;
        ensure(from_classical(&c).unwrap() == *g, || format!("round trip fails on {:?}", g.encode()))?;
    }
    Ok(format!("{} representatives", reps.len()))
}

fn criterion_5() -> Outcome {
    let reps = representatives_up_to_5();
    let mut groups = 0;
    for g in &reps {
        let group = is_group_object(g).unwrap();
        let one_object = base(g).unwrap().len() == 1;
        let total = g.mu_table().iter().all(Option::is_some);
        ensure(group == one_object && one_object == total, || {
            format!("{:?}: group {group}, one object {one_object}, total {total}", g.encode())
        })?;
        groups += group as usize;
    }
    Ok(format!("{} representatives, {groups} group objects", reps.len()))
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(EXTENSION_SEED);
    let mut per_field = BTreeMap::new();
    for i in 0..EXTENSIONS {
        let f = if i % 2 == 0 { Field::Rational } else { Field::prime(5).unwrap() };
        let input = oracle::extensions::random_extension(f, &mut rng);
        let ensure_dims = input.h.dim() <= 3 && input.n.dim <= 3;
        ensure(ensure_dims, || format!("extension {i}: dimensions out of range"))?;
        let a = build_abelian_extension(&input.h, &input.n).map_err(|e| format!("extension {i} ({}): {e}", input.label))?;
        let r = validate_algebra_groupoid(&a).unwrap();
        ensure(r.is_valid(), || format!("extension {i} ({}): {:?}", input.label, r.violations))?;
        let s = structure_theorem_check(&a).unwrap();
        ensure(s.sigma_equals_tau && s.upsilon_splits && s.kernel_square_zero && s.mu_is_sum, || {
            format!("extension {i} ({}): {:?}", input.label, s)
        })?;
        ensure(s.dim_kernel == input.n.dim && s.dim_image == input.h.dim(), || {
            format!("extension {i}: kernel {} image {}", s.dim_kernel, s.dim_image)
        })?;
        *per_field.entry(f.descriptor()).or_insert(0) += 1;
    }
    let e = within(t, BOUND_6)?;
    Ok(format!("{EXTENSIONS} extensions {per_field:?}; {e:.2?}"))
}

fn criterion_7() -> Outcome {
    let t = Instant::now();
    let f = Field::prime(7).unwrap();
    let all: Vec<FiniteGroupoid> = (1..=5).flat_map(|n| enumerate_labeled(n, 6).unwrap()).collect();
    let failures: Vec<String> = all
        .par_iter()
        .filter_map(|g| {
            let check = || -> Result<(), String> {
                let c = dualize_groupoid(g, f).map_err(|e| e.to_string())?;
                let r = validate_cogroupoid(&c).map_err(|e| e.to_string())?;
                ensure(r.is_valid(), || format!("{:?}", r.violations))?;
                let pairs = g.composable_pairs().len();
                ensure(c.csq.dim() == pairs, || format!("dim C² = {}, |G₂| = {pairs}", c.csq.dim()))?;
                let fixed = cobase(&c).map_err(|e| e.to_string())?.len();
                let objects = base(g).unwrap().len();
                ensure(fixed == objects, || format!("cobase {fixed}, base {objects}"))?;
                let hopf = hopf_check(&c).map_err(|e| e.to_string())?.is_some();
                let group = is_group_object(g).unwrap();
                ensure(hopf == group, || format!("hopf {hopf}, group {group}"))
            };
            check().err().map(|e| format!("{:?}: {e}", g.encode()))
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    let e = within(t, BOUND_7)?;
    Ok(format!("{} labeled groupoids over GF(7); {e:.2?}", all.len()))
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 0..=5 {
        for g in enumerate_labeled(n, 6).unwrap() {
            let r = validate_action(&self_action(&g).unwrap()).unwrap();
            ensure(r.is_valid(), || format!("{:?}: {:?}", g.encode(), r.violations))?;
            count += 1;
        }
    }
    for k in 1..=3 {
        let z = group_groupoid(&CayleyTable::cyclic(k)).unwrap();
        let ag = action_groupoid(&self_action(&z).unwrap()).unwrap();
        let iso = are_isomorphic(&ag, &pair_groupoid(k).unwrap());
        ensure(iso.is_some(), || format!("action groupoid of Z/{k} is not pair({k})"))?;
        let p = ag.to_parts();
        ensure(oracle::lawful(&p), || format!("action groupoid of Z/{k} fails the reference check"))?;
    }
    Ok(format!("{count} self-actions valid; Z/1..Z/3 action groupoids ≅ pair(k)"))
}

fn artifact_set(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap())
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let runs = [("1", "run a"), ("1", "run b"), ("4", "run a"), ("0", "run a"), ("4", "run b")];
    let mut sets = Vec::new();
    for (threads, _) in runs {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_groupoid"))
            .args(["enumerate", "4", "--emit-dir", d, "--threads", threads])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
        let report = String::from_utf8(out.stdout).unwrap().replace(d, "DIR");
        sets.push((report, artifact_set(dir.path())));
    }
    let (report, files) = &sets[0];
    ensure(files.len() == 7, || format!("{} files", files.len()))?;
    ensure(sets.iter().all(|s| s == &sets[0]), || "artifacts differ between runs".to_string())?;
    let bytes: usize = files.values().map(Vec::len).sum();
    Ok(format!("{} runs identical: {} files, {bytes} bytes, report {:?}", runs.len(), files.len(), report.trim()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("axiom-checker soundness", criterion_1),
        ("derived identities", criterion_2),
        ("enumeration counts", criterion_3),
        ("classical equivalence", criterion_4),
        ("group-object correspondence", criterion_5),
        ("algebra structure theorem", criterion_6),
        ("duality", criterion_7),
        ("actions", criterion_8),
        ("CLI determinism", criterion_9),
    ];
    // Keep panics from other criteria out of the summary lines.
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} [{name}]: PASS ({secs:.2} s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} [{name}]: FAIL ({secs:.2} s) {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
