//! Acceptance checks, one line per criterion.
//!
//! Runs without the test harness so the summary is always printed; the process
//! fails if any criterion fails. Expected values come from independent
//! oracles defined here: permutation enumeration, residuation, sector tests
//! written out coordinate by coordinate, and closed-form vertex lists.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropconv::membership::{certificate, combine};
use tropconv::{
    hull_chan, hull_jarvis, hull_triple_sort, hull_triple_sort_bucketed, hypersimplex, is_singular,
    minimal_halfspaces2d, rat, ratio, sector_indicator_points, tau, tdet, trop_dist, tsgn, AffinePoint2, Halfspace,
    Polytope, Rat, Sign, TropMatrix, TropPoint,
};

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_rat(rng: &mut impl Rng, range: i64, den: i64) -> Rat {
    ratio(rng.gen_range(-range * den..=range * den), den)
}

fn random_point(rng: &mut impl Rng, d: usize, range: i64, den: i64) -> TropPoint {
    TropPoint::canonicalize((0..=d).map(|_| random_rat(rng, range, den)).collect()).unwrap()
}

fn random_chart_point(rng: &mut impl Rng, range: i64, den: i64) -> AffinePoint2 {
    AffinePoint2::new(random_rat(rng, range, den), random_rat(rng, range, den))
}

fn int_rows(rng: &mut impl Rng, n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect()
}

fn int_matrix(rng: &mut impl Rng, n: usize) -> TropMatrix {
    TropMatrix::from_ints(&int_rows(rng, n)).unwrap()
}

fn rows(m: &TropMatrix) -> Vec<Vec<Rat>> {
    m.rows().map(<[Rat]>::to_vec).collect()
}

fn parity(p: &[usize]) -> i8 {
    let inversions = (0..p.len()).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exhaustive enumeration over machine integers: (value, singular, sign).
fn enumerate(m: &[Vec<i64>]) -> (i64, bool, i8) {
    let n = m.len();
    let mut best: Option<(i64, usize, i8)> = None;
    for p in (0..n).permutations(n) {
        let v: i64 = p.iter().enumerate().map(|(i, &j)| m[i][j]).sum();
        best = match best {
            Some((b, count, s)) if v == b => Some((b, count + 1, s)),
            Some((b, count, s)) if v > b => Some((b, count, s)),
            _ => Some((v, 1, parity(&p))),
        };
    }
    let (value, count, sign) = best.unwrap();
    (value, count > 1, if count > 1 { 0 } else { sign })
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn determinant_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    let mut mismatches = 0;
    for n in 2..=7 {
        for _ in 0..500 {
            let raw = int_rows(&mut rng, n);
            let m = TropMatrix::from_ints(&raw).unwrap();
            let (value, singular, sign) = enumerate(&raw);
            if tdet(&m) != rat(value) || is_singular(&m) != singular || tsgn(&m).to_i8() != sign {
                mismatches += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    check(mismatches == 0 && secs < 10.0, || format!("{mismatches} mismatches in {secs:.2} s"))?;
    Ok(format!("3000 matrices, 0 mismatches, {secs:.2} s (limit 10 s)"))
}

fn sign_algebra() -> Outcome {
    let mut rng = rng(2);
    let mut failures = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=7);
        let m = int_matrix(&mut rng, n);
        let s = tsgn(&m);
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n - 1));
        let b = if b >= a { b + 1 } else { b };

        let mut dup = rows(&m);
        dup[b] = dup[a].clone();
        failures += usize::from(tsgn(&TropMatrix::new(dup).unwrap()) != Sign::Zero);

        let mut swapped = rows(&m);
        swapped.swap(a, b);
        failures += usize::from(tsgn(&TropMatrix::new(swapped).unwrap()) != s.flip());

        let cols: Vec<Vec<Rat>> = rows(&m)
            .into_iter()
            .map(|mut r| {
                r.swap(a, b);
                r
            })
            .collect();
        failures += usize::from(tsgn(&TropMatrix::new(cols).unwrap()) != s.flip());

        let transposed: Vec<Vec<Rat>> = (0..n).map(|j| (0..n).map(|i| m.get(i, j).clone()).collect()).collect();
        failures += usize::from(tsgn(&TropMatrix::new(transposed).unwrap()) != s);

        let shifted: Vec<Vec<Rat>> = rows(&m)
            .into_iter()
            .map(|r| {
                let c = random_rat(&mut rng, 20, 7);
                r.into_iter().map(|x| x + &c).collect()
            })
            .collect();
        failures += usize::from(tsgn(&TropMatrix::new(shifted).unwrap()) != s);
    }
    check(failures == 0, || format!("{failures} failures"))?;
    Ok("1000 matrices x 5 identities, 0 failures".to_string())
}

fn negative_unit_vectors() -> Outcome {
    for d in 1..=10usize {
        let points: Vec<TropPoint> = (0..=d)
            .map(|i| TropPoint::canonicalize((0..=d).map(|j| rat(if i == j { -1 } else { 0 })).collect()).unwrap())
            .collect();
        let m = TropMatrix::from_chart_points(&points).unwrap();
        check(tdet(&m) == rat(-(d as i64)), || format!("d={d}: tdet {}", tdet(&m)))?;
        check(tsgn(&m) == Sign::Positive, || format!("d={d}: tsgn {:?}", tsgn(&m)))?;
    }
    Ok("tdet = -d and tsgn = +1 for d = 1..10 (chart representatives)".to_string())
}

/// A point of the open sector `S_k` at the origin: coordinate `k` is the strict minimum.
fn open_sector_sample(rng: &mut impl Rng, d: usize, k: usize) -> TropPoint {
    let raw = (0..=d)
        .map(|i| if i == k { rat(0) } else { ratio(rng.gen_range(1..=1000), rng.gen_range(1..=50)) })
        .collect();
    TropPoint::canonicalize(raw).unwrap()
}

fn indicator_points() -> Outcome {
    let mut rng = rng(4);
    let (mut sets, mut wrong) = (0, 0);
    for d in 2..=5usize {
        for k in (0..=d).powerset().filter(|k| !k.is_empty() && k.len() <= d) {
            sets += 1;
            let k: BTreeSet<usize> = k.into_iter().collect();
            let pts = sector_indicator_points(d, &k).map_err(|e| format!("d={d} K={k:?}: {e}"))?;
            for s in 0..=d {
                let want = if k.contains(&s) { Sign::Positive } else { Sign::Negative };
                for _ in 0..10 {
                    let x = open_sector_sample(&mut rng, d, s);
                    wrong += usize::from(tau(&pts, &x).unwrap() != want);
                }
            }
        }
    }
    check(wrong == 0, || format!("{wrong} misclassifications"))?;
    Ok(format!("{sets} index sets over d = 2..5, 10 samples per sector, 0 misclassifications"))
}

/// Random planar sets; every fourth one uses a coarse grid and repeats points.
fn hull_sets() -> Vec<Vec<AffinePoint2>> {
    let mut rng = rng(5);
    (0..200)
        .map(|trial| {
            let n = rng.gen_range(1..=500);
            let tied = trial % 4 == 0;
            let mut pts: Vec<AffinePoint2> = if tied {
                (0..n)
                    .map(|_| AffinePoint2::from_ints(rng.gen_range(-6..=6), rng.gen_range(-6..=6)))
                    .collect()
            } else {
                (0..n).map(|_| random_chart_point(&mut rng, 50, 97)).collect()
            };
            if tied && n > 1 {
                for _ in 0..n / 5 {
                    let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                    pts[i] = pts[j].clone();
                }
            }
            pts
        })
        .collect()
}

fn hull_equivalence(sets: &[Vec<AffinePoint2>]) -> Outcome {
    for (i, pts) in sets.iter().enumerate() {
        let t = hull_triple_sort(pts).unwrap();
        let j = hull_jarvis(pts).unwrap();
        let c = hull_chan(pts).unwrap();
        check(t.vertices == j.vertices && t.vertices == c.vertices, || format!("set {i}: cycles differ"))?;
        check(t.vertex_indices == j.vertex_indices && t.vertex_indices == c.vertex_indices, || {
            format!("set {i}: indices differ")
        })?;
    }
    Ok("200 sets (50 with ties and duplicates), identical cycles".to_string())
}

/// Membership by residuation: the largest combination below `x` equals `x`.
fn residuation_member(generators: &[TropPoint], x: &TropPoint) -> bool {
    let coeffs: Vec<Rat> = generators
        .iter()
        .map(|g| g.coords().iter().zip(x.coords()).map(|(gi, xi)| xi - gi).max().unwrap())
        .collect();
    combine(generators, &coeffs).as_ref() == Some(x)
}

fn hull_soundness(sets: &[Vec<AffinePoint2>]) -> Outcome {
    let mut checks = 0;
    for (i, pts) in sets.iter().enumerate() {
        let verts: Vec<TropPoint> = hull_triple_sort(pts).unwrap().vertices.iter().map(AffinePoint2::to_trop).collect();
        for (k, v) in verts.iter().enumerate() {
            let rest: Vec<TropPoint> = verts.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, w)| w.clone()).collect();
            if rest.is_empty() {
                continue;
            }
            let cert = certificate(&rest, v).unwrap();
            check(!cert.is_member() && !residuation_member(&rest, v), || format!("set {i}: vertex {v} is redundant"))?;
            checks += 1;
        }
        for p in pts {
            let x = p.to_trop();
            let cert = certificate(&verts, &x).unwrap();
            let reconstructed = match &cert {
                tropconv::MembershipCertificate::Member { coefficients, .. } => {
                    combine(&verts, coefficients).as_ref() == Some(&x)
                }
                _ => false,
            };
            check(reconstructed && residuation_member(&verts, &x), || format!("set {i}: input {x} escapes"))?;
            checks += 1;
        }
    }
    Ok(format!("{checks} certificates, all confirmed by residuation"))
}

fn halfspace_key(h: &Halfspace) -> (Vec<Rat>, Vec<usize>) {
    (h.apex.coords().to_vec(), h.indices().iter().copied().collect())
}

fn exterior_examples() -> Outcome {
    let chart = |c: &[i64]| AffinePoint2::from_trop(&TropPoint::from_ints(c).unwrap()).unwrap();
    let key = |apex: &[i64], k: &[usize]| (TropPoint::from_ints(apex).unwrap().coords().to_vec(), k.to_vec());
    let cases = [
        (
            "simplex",
            vec![chart(&[0, 1, 1]), chart(&[1, 0, 1]), chart(&[1, 1, 0])],
            vec![key(&[1, 0, 0], &[0]), key(&[0, 1, 0], &[1]), key(&[0, 0, 1], &[2])],
        ),
        (
            "second hypersimplex",
            vec![chart(&[1, 0, 0]), chart(&[0, 1, 0]), chart(&[0, 0, 1])],
            vec![
                key(&[0, 0, 0], &[0, 1]),
                key(&[0, 0, 0], &[1, 2]),
                key(&[0, 0, 0], &[0, 2]),
                key(&[1, 0, 0], &[0]),
                key(&[0, 1, 0], &[1]),
                key(&[0, 0, 1], &[2]),
            ],
        ),
    ];
    for (name, pts, want) in cases {
        let got = minimal_halfspaces2d(&pts).unwrap();
        let got_keys: Vec<_> = got.halfspaces.iter().map(halfspace_key).collect();
        let got_set: BTreeSet<_> = got_keys.iter().cloned().collect();
        let want_set: BTreeSet<_> = want.iter().cloned().collect();
        check(got_keys.len() == want.len() && got_set == want_set && got.warning.is_none(), || {
            format!("{name}: got {got_keys:?}")
        })?;
    }
    Ok("3 halfspaces for the simplex, 6 for the second hypersimplex, exact".to_string())
}

fn exterior_round_trip() -> Outcome {
    let mut rng = rng(8);
    let mut polytopes = 0;
    let mut separations = 0;
    while polytopes < 50 {
        let n = rng.gen_range(3..=8);
        let pts: Vec<AffinePoint2> = (0..n).map(|_| random_chart_point(&mut rng, 6, 2)).collect();
        let verts = hull_triple_sort(&pts).unwrap().vertices;
        if verts.len() < 3 {
            continue;
        }
        let set = minimal_halfspaces2d(&verts).unwrap();
        if set.warning.is_some() {
            continue;
        }
        polytopes += 1;
        let vt: Vec<TropPoint> = verts.iter().map(AffinePoint2::to_trop).collect();
        let poly = Polytope::new(vt.clone()).unwrap();
        let (xs, ys): (Vec<Rat>, Vec<Rat>) = verts.iter().map(|v| (v.x.clone(), v.y.clone())).unzip();
        let (x0, x1) = (xs.iter().min().unwrap() - rat(2), xs.iter().max().unwrap() + rat(2));
        let (y0, y1) = (ys.iter().min().unwrap() - rat(2), ys.iter().max().unwrap() + rat(2));
        let (mut inside, mut outside) = (0, 0);
        while inside < 1000 || outside < 1000 {
            let den = 16;
            let pick = |rng: &mut ChaCha8Rng, lo: &Rat, hi: &Rat| -> Rat {
                let span = ((hi - lo) * rat(den)).to_integer();
                let span: i64 = span.try_into().unwrap();
                lo + ratio(rng.gen_range(0..=span), den)
            };
            let p = AffinePoint2::new(pick(&mut rng, &x0, &x1), pick(&mut rng, &y0, &y1));
            let x = p.to_trop();
            if residuation_member(&vt, &x) {
                if inside >= 1000 {
                    continue;
                }
                inside += 1;
                check(set.halfspaces.iter().all(|h| h.contains(&x).unwrap()), || format!("member {x} cut off"))?;
            } else {
                if outside >= 1000 {
                    continue;
                }
                outside += 1;
                check(set.halfspaces.iter().any(|h| !h.contains(&x).unwrap()), || format!("non-member {x} kept"))?;
                let h = poly.separate(&x).unwrap();
                check(!h.contains(&x).unwrap() && vt.iter().all(|g| h.contains(g).unwrap()), || {
                    format!("separate({x}) gave {h}")
                })?;
                separations += 1;
            }
        }
    }
    Ok(format!(
        "50 polytopes x (1000 members + 1000 non-members), {separations} separations checked"
    ))
}

fn metric_and_hypersimplex() -> Outcome {
    let mut rng = rng(9);
    for _ in 0..1000 {
        let d = rng.gen_range(1..=5);
        let x = random_point(&mut rng, d, 40, 5);
        let y = random_point(&mut rng, d, 40, 5);
        let z = random_point(&mut rng, d, 40, 5);
        let xy = trop_dist(&x, &y).unwrap();
        let ok = xy == trop_dist(&y, &x).unwrap()
            && (xy == rat(0)) == (x == y)
            && xy >= rat(0)
            && trop_dist(&x, &z).unwrap() <= &xy + trop_dist(&y, &z).unwrap();
        check(ok, || format!("metric axioms fail at {x}, {y}, {z}"))?;
    }
    for d in 2..=3 {
        let gens = hypersimplex(d, 2).unwrap();
        let (mut inside, mut outside) = (0, 0);
        while inside < 500 || outside < 500 {
            let mut raw: Vec<Rat> = (0..=d).map(|_| ratio(rng.gen_range(0..=12), 8)).collect();
            if rng.gen_bool(0.5) {
                let i = rng.gen_range(0..=d);
                let j = (i + rng.gen_range(1..=d)) % (d + 1);
                raw[i] = rat(0);
                raw[j] = rat(0);
            }
            let x = TropPoint::canonicalize(raw).unwrap();
            // at least two zero coordinates and every coordinate at most 1
            let zeros = x.coords().iter().filter(|c| **c == rat(0)).count();
            let expected = zeros >= 2 && x.coords().iter().all(|c| *c <= rat(1));
            check(certificate(&gens, &x).unwrap().is_member() == expected, || format!("d={d}: {x}"))?;
            if expected {
                inside += 1;
            } else {
                outside += 1;
            }
        }
    }
    for d in 1..=5 {
        for k in 1..d {
            let outer = hypersimplex(d, k).unwrap();
            let inner = hypersimplex(d, k + 1).unwrap();
            let contained = inner.iter().all(|v| certificate(&outer, v).unwrap().is_member());
            let strict = outer.iter().any(|v| !certificate(&inner, v).unwrap().is_member());
            check(contained && strict, || format!("nesting fails at d={d}, k={k}"))?;
        }
    }
    Ok("1000 triples; 500 + 500 samples for d = 2, 3; strict nesting for d <= 5".to_string())
}

fn performance() -> Outcome {
    let pts = tropconv_bench::uniform_square(1_000_000, 10);
    let start = Instant::now();
    let big = hull_triple_sort(&pts).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let bucketed = hull_triple_sort_bucketed(&pts).unwrap();
    let bucket_secs = start.elapsed().as_secs_f64();
    check(big.vertices == bucketed.vertices, || "bucketed hull differs".to_string())?;
    check(secs < 5.0, || format!("1e6 points took {secs:.2} s"))?;

    let counts: Vec<f64> = [100_000, 200_000, 400_000]
        .iter()
        .map(|&n| hull_triple_sort(&tropconv_bench::uniform_square(n, 11)).unwrap().stats.comparisons as f64)
        .collect();
    let ratios = [counts[1] / counts[0], counts[2] / counts[1]];
    check(ratios.iter().all(|r| *r <= 2.5), || format!("comparison ratios {ratios:?}"))?;

    let cloud = tropconv_bench::hull_with_cloud(100_000, 20, 12);
    let jarvis = hull_jarvis(&cloud).unwrap();
    let chan = hull_chan(&cloud).unwrap();
    check(jarvis.vertices == chan.vertices, || "Chan and Jarvis differ".to_string())?;
    let share = chan.stats.tau_evals as f64 / jarvis.stats.tau_evals as f64;
    check(share < 0.10, || format!("Chan uses {:.1}% of Jarvis's predicate calls", share * 100.0))?;
    Ok(format!(
        "1e6 points in {secs:.2} s ({bucket_secs:.2} s bucketed); ratios {:.2}, {:.2}; h = {}, Chan/Jarvis tau evals {}/{} = {:.1}%",
        ratios[0],
        ratios[1],
        chan.vertices.len(),
        chan.stats.tau_evals,
        jarvis.stats.tau_evals,
        share * 100.0
    ))
}

fn cli_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let input = dir.path().join("points.txt");
    let mut rng = rng(11);
    let mut text = String::from("dim 2\n");
    for _ in 0..60 {
        text.push_str(&format!("0 {} {}\n", random_rat(&mut rng, 9, 4), random_rat(&mut rng, 9, 4)));
    }
    std::fs::write(&input, text).map_err(|e| e.to_string())?;
    let input = input.to_str().unwrap().to_string();
    let svg = dir.path().join("hull.svg");
    let svg = svg.to_str().unwrap().to_string();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["hull", "--json", &input],
        vec!["hull", "--algo", "chan", &input],
        vec!["vertices", "--json", &input],
        vec!["halfspaces", "--json", &input],
        vec!["facets", "--json", &input],
        vec!["pseudovertices", &input],
        vec!["contains", "0,1,1", "--json", &input],
        vec!["render", "--out", &svg, "--arrangement", "--pseudovertices", "--halfspace", "0,0,0:1,2", &input],
    ];
    for args in &invocations {
        let mut seen: Option<(Vec<u8>, Vec<u8>)> = None;
        for _ in 0..5 {
            let out = Command::new(env!("CARGO_BIN_EXE_tropconv"))
                .args(args)
                .output()
                .map_err(|e| e.to_string())?;
            check(out.status.code().is_some_and(|c| c == 0 || c == 5), || {
                format!("{args:?} failed: {}", String::from_utf8_lossy(&out.stderr))
            })?;
            let file = if args[0] == "render" { std::fs::read(&svg).map_err(|e| e.to_string())? } else { Vec::new() };
            let now = (out.stdout, file);
            if let Some(prev) = &seen {
                check(*prev == now, || format!("{args:?} output changed between runs"))?;
            }
            seen = Some(now);
        }
    }
    Ok(format!("{} invocations x 5 runs, byte-identical stdout and SVG", invocations.len()))
}

fn main() {
    // `cargo test -- --list` and similar harness flags expect a listing
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let sets = hull_sets();
    let criteria: Vec<Criterion> = vec![
        ("determinant oracle", Box::new(determinant_oracle)),
        ("sign algebra", Box::new(sign_algebra)),
        ("negative unit vectors", Box::new(negative_unit_vectors)),
        ("sector indicator points", Box::new(indicator_points)),
        ("hull equivalence", Box::new(|| hull_equivalence(&sets))),
        ("hull soundness", Box::new(|| hull_soundness(&sets))),
        ("exterior description examples", Box::new(exterior_examples)),
        ("exterior description round trip", Box::new(exterior_round_trip)),
        ("metric and hypersimplices", Box::new(metric_and_hypersimplex)),
        ("performance", Box::new(performance)),
        ("cli determinism", Box::new(cli_determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1} s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1} s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
