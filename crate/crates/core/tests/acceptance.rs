//! Acceptance criteria, one PASS/FAIL line each.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use birack::biracks::{derived_rack, inverse_solution, is_involutive, nondegeneracy, ops_from_solution, Solution};
use birack::biracks::{braid_check, is_bijective};
use birack::coloring::{closure_colorings, framed_invariance_suite, BraidWord};
use birack::enveloping::{abelianization, envelope_proposition_check, enveloping_presentation, AbelianInvariants};
use birack::group::Group;
use birack::io::TableFile;
use birack::racks::{conj_rack, is_rack, rack_solution, skew_from_rack, RackTable};
use birack::search::{enumerate_racks, enumerate_solutions, sweep_theorems, Kind, Method, SearchSpec};
use birack::skew_braces::{brace_derived_rack, brace_dot, brace_solution, SkewBrace};
use birack::tables::{OpTable, Permutation};
use birack::twisting::{is_automorphism, twist_first};

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn biracks(n: usize) -> Result<Vec<Solution>, String> {
    e2s(enumerate_solutions(&SearchSpec::new(n, Kind::Birack), Method::BruteForce))
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let bijective_braid = birack::search::bijective_maps(2).filter(braid_check).count();
    let found = biracks(2)?;
    ensure(found.len() == 4, || format!("{} non-degenerate bijective solutions, expected 4", found.len()))?;
    for a in 0..2 {
        for b in 0..2 {
            let s = Solution::permutation(2, a, b);
            ensure(found.contains(&s), || format!("missing (y+{a}, x+{b})"))?;
        }
    }
    let involutive = found.iter().filter(|s| is_involutive(s)).count();
    ensure(involutive == 2, || format!("{involutive} involutive, expected 2"))?;
    for s in &found {
        ensure(derived_rack(s).is_ok_and(|t| is_rack(&t)), || format!("derived table of {s:?} is not a rack"))?;
    }
    let report = e2s(sweep_theorems(2))?;
    ensure(report.passed(), || format!("sweep violations: {:?}", report.violations))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("4 biracks, 2 involutive, {bijective_braid} bijective braid maps, sweep clean, {elapsed:.2?}"))
}

fn criterion2() -> Outcome {
    let start = Instant::now();
    let report = e2s(sweep_theorems(3))?;
    let elapsed = start.elapsed();
    ensure(report.passed(), || format!("{} violations, first {:?}", report.violations.len(), report.violations.first()))?;
    let counts = (report.maps, report.solutions, report.bijective, report.biracks, report.biquandles, report.involutive);
    ensure(counts == (4_251_528, 354, 73, 66, 36, 12), || format!("counts changed: {counts:?}"))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} maps, {} solutions, {} of 9! bijections braid, {} biracks, 0 violations, {elapsed:.2?}",
        report.maps, report.solutions, report.bijective, report.biracks
    ))
}

fn criterion3() -> Outcome {
    let mut summary = Vec::new();
    for (n, kind, expected) in [(1, Kind::Rack, 1), (2, Kind::Rack, 2), (3, Kind::Rack, 6), (3, Kind::Quandle, 3)] {
        let spec = SearchSpec::new(n, kind).up_to_iso();
        let brute = e2s(enumerate_racks(&spec, Method::BruteForce))?;
        let structured = e2s(enumerate_racks(&spec, Method::Structured))?;
        ensure(brute == structured, || format!("{kind} n={n}: methods disagree"))?;
        let raw = SearchSpec::new(n, kind);
        ensure(
            e2s(enumerate_racks(&raw, Method::BruteForce))? == e2s(enumerate_racks(&raw, Method::Structured))?,
            || format!("{kind} n={n}: labelled lists disagree"),
        )?;
        ensure(brute.len() == expected, || format!("{kind} n={n}: {} classes, expected {expected}", brute.len()))?;
        summary.push(format!("{kind}s({n})={}", brute.len()));
    }
    for n in 1..=3 {
        let spec = SearchSpec::new(n, Kind::Birack);
        ensure(
            e2s(enumerate_solutions(&spec, Method::BruteForce))? == e2s(enumerate_solutions(&spec, Method::Structured))?,
            || format!("biracks n={n}: generator and pair-map filter disagree"),
        )?;
    }
    Ok(format!("{} up to isomorphism; both methods agree", summary.join(" ")))
}

fn criterion4() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for s in biracks(n)? {
            let inv = e2s(inverse_solution(&s))?;
            for x in 0..n {
                for y in 0..n {
                    let (a, b) = s.apply(x, y);
                    ensure(inv.apply(a, b) == (x, y), || format!("σ⁻¹σ({x},{y}) ≠ ({x},{y}) for {s:?}"))?;
                    let (c, d) = inv.apply(x, y);
                    ensure(s.apply(c, d) == (x, y), || format!("σσ⁻¹({x},{y}) ≠ ({x},{y}) for {s:?}"))?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} biracks with n ≤ 3"))
}

fn criterion5() -> Outcome {
    let mut twists = 0;
    let mut rejected = 0;
    for n in 1..=3 {
        for s in biracks(n)? {
            let before = e2s(ops_from_solution(&s))?;
            for k in Permutation::all(n) {
                if !is_automorphism(&k, &s) {
                    ensure(twist_first(&s, &k).is_err(), || format!("non-automorphism {k:?} accepted"))?;
                    rejected += 1;
                    continue;
                }
                let twisted = e2s(twist_first(&s, &k))?.twisted;
                // (k⁻¹ × id) σ (k × id), computed directly
                let k_inv = k.inverse();
                let direct = Solution::from_fn(n, |x, y| {
                    let (a, b) = s.apply(k.apply(x), y);
                    (k_inv.apply(a), b)
                });
                ensure(twisted == direct, || format!("σ_k differs from its definition for {s:?}, {k:?}"))?;
                ensure(braid_check(&twisted), || format!("σ_k not a braid solution: {s:?}, {k:?}"))?;
                let after = e2s(ops_from_solution(&twisted))?;
                ensure(after.tri() == before.tri(), || format!("derived rack changed: {s:?}, {k:?}"))?;
                let expected = OpTable::from_fn(n, |x, y| k.apply(before.dot().get(x, y)));
                ensure(after.dot() == &expected, || format!("dot is not k(x·y): {s:?}, {k:?}"))?;
                twists += 1;
            }
        }
    }
    for rack in [RackTable::dihedral(3), RackTable::constant(&Permutation::shift(2, 1))] {
        for k in Permutation::all(rack.n()).filter(|k| rack.is_automorphism(k)) {
            let skew = e2s(skew_from_rack(&rack, &k))?.solution();
            let twisted = e2s(twist_first(&rack_solution(&rack), &k.inverse()))?.twisted;
            ensure(skew == twisted, || format!("skew solution ≠ twist by k⁻¹ for {k:?}"))?;
        }
    }
    Ok(format!("{twists} twists verified, {rejected} non-automorphisms rejected, skew coherence holds"))
}

fn criterion6() -> Outcome {
    let s3 = Group::symmetric3();
    let trivial = SkewBrace::trivial(&s3);
    let r = e2s(brace_solution(&trivial))?;
    let expected = Solution::from_fn(6, |x, y| (y, s3.mul(s3.mul(s3.inv(y), x), y)));
    ensure(r == expected, || "trivial S3 brace solution is not (y, y⁻¹xy)".into())?;
    let derived = e2s(derived_rack(&r))?;
    ensure(&derived == conj_rack(&s3).table(), || "derived rack ≠ Conj(S3)".into())?;
    ensure(e2s(brace_derived_rack(&trivial))? == conj_rack(&s3), || "brace_derived_rack ≠ Conj(S3)".into())?;

    for b in [SkewBrace::z4(), trivial] {
        let r = e2s(brace_solution(&b))?;
        let dot = e2s(brace_dot(&b))?;
        let extracted = e2s(ops_from_solution(&r))?;
        for x in 0..b.n() {
            for y in 0..b.n() {
                ensure(dot.get(x, y) == extracted.dot().get(x, y), || format!("dot differs at ({x},{y})"))?;
            }
        }
    }
    let z4 = e2s(brace_solution(&SkewBrace::z4()))?;
    ensure(is_involutive(&z4), || "Z/4 brace solution is not involutive".into())?;
    ensure(nondegeneracy(&z4) == (true, true) && is_bijective(&z4), || "Z/4 brace solution degenerate".into())?;
    ensure(RackTable::new(e2s(derived_rack(&z4))?).is_ok_and(|t| t.is_trivial()), || "Z/4 derived rack not trivial".into())?;
    Ok("S3 gives (y, y⁻¹xy) with Conj(S3); Z/4 involutive with trivial rack; dots agree".into())
}

fn criterion7() -> Outcome {
    let d3 = rack_solution(&RackTable::dihedral(3));
    let mut counts = Vec::new();
    for (strands, letters, expected) in [(2, vec![1, 1, 1], 9), (2, vec![1], 3), (3, vec![1, -2, 1, -2], 3)] {
        let w = e2s(BraidWord::new(strands, letters.clone()))?;
        let r = e2s(closure_colorings(&d3, &w))?;
        ensure(r.count == expected, || format!("{letters:?}: {} colorings, expected {expected}", r.count))?;
        counts.push(r.count.to_string());
    }
    let mut rewrites = 0;
    for (seed, (strands, letters)) in [(2, vec![1, 1, 1]), (3, vec![1, -2, 1, -2]), (4, vec![1, 2, 3, -1])].into_iter().enumerate() {
        let w = e2s(BraidWord::new(strands, letters))?;
        let r = e2s(framed_invariance_suite(&d3, &w, 150, seed as u64))?;
        ensure(r.passed(), || format!("invariance failures: {:?}", r.failures))?;
        rewrites += r.rewrites;
    }
    ensure(rewrites >= 100, || format!("only {rewrites} rewrites"))?;
    Ok(format!("trefoil/unknot/figure-eight = {}; {rewrites} rewrites with no count change", counts.join("/")))
}

fn criterion8() -> Outcome {
    let free2 = AbelianInvariants { rank: 2, torsion: vec![] };
    let flip = abelianization(&e2s(enveloping_presentation(&Solution::flip(2)))?);
    ensure(flip == free2, || format!("flip: {flip}"))?;
    let d3 = abelianization(&e2s(enveloping_presentation(&rack_solution(&RackTable::dihedral(3))))?);
    ensure(d3 == AbelianInvariants { rank: 1, torsion: vec![] }, || format!("dihedral 3: {d3}"))?;
    let mut checked = 0;
    for n in 1..=3 {
        for s in biracks(n)? {
            ensure(e2s(envelope_proposition_check(&s))?, || format!("proposition check fails for {s:?}"))?;
            checked += 1;
        }
    }
    Ok(format!("flip {flip}; dihedral {d3}; proposition check on {checked} biracks"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn result_line(args: &[&str]) -> Result<String, String> {
    let out = e2s(Command::new(env!("CARGO_BIN_EXE_birack")).args(args).output())?;
    let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
    stdout
        .lines()
        .find(|l| l.starts_with("RESULT:"))
        .map(str::to_owned)
        .ok_or_else(|| format!("no RESULT line from {args:?}: {stdout}"))
}

fn criterion9() -> Outcome {
    let flip = fixture("flip.tbl");
    let d3 = fixture("dihedral3.tbl");
    let golden = [
        (
            vec!["verify", flip.to_str().unwrap()],
            "RESULT: braid=true left=true right=true bijective=true involutive=true biquandle=true",
        ),
        (vec!["color", d3.to_str().unwrap(), "--strands", "2", "--word", "1 1 1"], "RESULT: colorings=9 writhe=3"),
        (vec!["enumerate", "--n", "3", "--kind", "quandle"], "RESULT: count=3"),
    ];
    for (args, expected) in golden {
        let line = result_line(&args)?;
        ensure(line == expected, || format!("{args:?}: got {line:?}"))?;
    }
    let mut files = 0;
    for entry in e2s(std::fs::read_dir(fixture("")))? {
        let path = e2s(entry)?.path();
        let text = e2s(std::fs::read_to_string(&path))?;
        let parsed = e2s(TableFile::parse(&text))?;
        ensure(parsed.emit() == text, || format!("{}: emit(parse(text)) ≠ text", path.display()))?;
        ensure(e2s(TableFile::parse(&parsed.emit()))? == parsed, || format!("{}: round trip", path.display()))?;
        files += 1;
    }
    Ok(format!("3 golden RESULT lines match; {files} fixtures round-trip"))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("n=2 exhaustive", criterion1),
        ("n=3 sweep", criterion2),
        ("structure counts", criterion3),
        ("inverse formula", criterion4),
        ("twisting", criterion5),
        ("skew braces", criterion6),
        ("coloring", criterion7),
        ("enveloping", criterion8),
        ("CLI golden and round trip", criterion9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: panicked", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
