//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every comparison is exact; there is no floating-point tolerance.

use std::process::{Command, Output};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polymetric::exterior::{parity_basis, rank_basis};
use polymetric::random::{random_diagonal_metric, random_metric, random_multivector, random_multivector_with, random_sparse, random_vector, small_gaussian, small_rational};
use polymetric::{
    alternation_wedge, clifford_product, conversion_matrix, convert_basis, even_part, exterior_product,
    grassmann_blade_to_clifford, oracle_clifford_product, pseudo_hermitian_conj, BasisTag, Direction, FieldMode,
    IndexSet, Metric, Multivector, Scalar,
};
use polymetric_cli::{parse_config, OutputRecord};

const G: BasisTag = BasisTag::Grassmann;
const C: BasisTag = BasisTag::Clifford;

/// Coefficients are exact rationals, so agreement means equality.
const TOLERANCE: &str = "exact";

type Check = Result<(), String>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn same(got: &Multivector, want: &Multivector, ctx: impl FnOnce() -> String) -> Check {
    ensure(got == want, || format!("{}: got {got:?}, want {want:?}", ctx()))
}

fn mv(n: usize, tag: BasisTag, terms: Vec<(Scalar, &[usize])>) -> Multivector {
    Multivector::from_terms(n, tag, terms.into_iter().map(|(c, ix)| (IndexSet::from_indices(ix).unwrap(), c))).unwrap()
}

fn add(a: &Multivector, b: &Multivector) -> Multivector {
    a.checked_add(b).unwrap()
}

fn metric_text(g: &Metric) -> String {
    g.to_string().replace('\n', " ")
}

fn worked_example_a() -> Check {
    let mut r = rng(1);
    for _ in 0..50 {
        let g = random_metric(&mut r, 4);
        let u = Multivector::basis(4, C, &[1, 3]).unwrap();
        let v = Multivector::basis(4, C, &[2, 3, 4]).unwrap();
        let want = mv(4, C, vec![(-g.get(3, 3), &[1, 2, 4]), (g.get(2, 3).scale_i64(2), &[1, 3, 4])]);
        let fast = convert_basis(&clifford_product(&u, &v, &g).unwrap(), &g, C).unwrap();
        same(&fast, &want, || format!("clifford_product, g = {}", metric_text(&g)))?;
        let slow = oracle_clifford_product(&u, &v, &g).unwrap();
        same(&slow, &want, || format!("oracle, g = {}", metric_text(&g)))?;
    }
    Ok(())
}

fn worked_example_b() -> Check {
    let mut r = rng(2);
    for _ in 0..50 {
        let g = random_metric(&mut r, 3);
        let u = convert_basis(&Multivector::basis(3, C, &[1, 3]).unwrap(), &g, G).unwrap();
        let v = convert_basis(&Multivector::basis(3, C, &[2, 3]).unwrap(), &g, G).unwrap();
        let got = convert_basis(&exterior_product(&u, &v).unwrap(), &g, C).unwrap();
        let (g13, g23) = (g.get(1, 3), g.get(2, 3));
        let want = mv(3, C, vec![(g23.clone(), &[1, 3]), (g13.clone(), &[2, 3]), (-(g13 * g23), &[])]);
        same(&got, &want, || format!("g = {}", metric_text(&g)))?;
    }
    Ok(())
}

fn worked_example_c() -> Check {
    let mut r = rng(3);
    for _ in 0..50 {
        let g = random_metric(&mut r, 3);
        let u = Multivector::basis(3, G, &[1, 3]).unwrap();
        let v = Multivector::basis(3, G, &[2, 3]).unwrap();
        let e = |i, j| g.get(i, j).clone();
        let want = mv(
            3,
            G,
            vec![
                (-e(3, 3), &[1, 2]),
                (e(2, 3), &[1, 3]),
                (-e(1, 3), &[2, 3]),
                (e(1, 3) * e(2, 3) - e(1, 2) * e(3, 3), &[]),
            ],
        );
        same(&clifford_product(&u, &v, &g).unwrap(), &want, || format!("g = {}", metric_text(&g)))?;
        let uc = convert_basis(&u, &g, C).unwrap();
        let vc = convert_basis(&v, &g, C).unwrap();
        let via_oracle = convert_basis(&oracle_clifford_product(&uc, &vc, &g).unwrap(), &g, G).unwrap();
        same(&via_oracle, &want, || format!("oracle, g = {}", metric_text(&g)))?;
    }
    Ok(())
}

fn anticommutator() -> Check {
    let mut r = rng(4);
    for n in 2..=8 {
        for _ in 0..10 {
            let g = random_metric(&mut r, n);
            for i in 1..=n {
                for j in 1..=n {
                    let ei = Multivector::basis(n, G, &[i]).unwrap();
                    let ej = Multivector::basis(n, G, &[j]).unwrap();
                    let s = add(&clifford_product(&ei, &ej, &g).unwrap(), &clifford_product(&ej, &ei, &g).unwrap());
                    let want = Multivector::scalar(n, G, g.get(i, j).scale_i64(2));
                    same(&s, &want, || format!("n={n} i={i} j={j}"))?;
                }
            }
        }
    }
    Ok(())
}

fn vector_square() -> Check {
    let mut r = rng(5);
    for t in 0..100 {
        let n = 1 + t % 8;
        let g = random_metric(&mut r, n);
        let (u, v) = random_vector(&mut r, n, G);
        let mut q = Scalar::zero();
        for i in 1..=n {
            for j in 1..=n {
                q += &(g.get(i, j) * &u[i - 1] * &u[j - 1]);
            }
        }
        same(&clifford_product(&v, &v, &g).unwrap(), &Multivector::scalar(n, G, q), || format!("n={n} u={u:?}"))?;
    }
    Ok(())
}

fn conversion_inverse() -> Check {
    let mut r = rng(6);
    for n in 1..=8 {
        for _ in 0..5 {
            let g = random_metric(&mut r, n);
            let gc = conversion_matrix(&g, Direction::GrassmannToClifford).unwrap();
            let cg = conversion_matrix(&g, Direction::CliffordToGrassmann).unwrap();
            ensure(gc.mul(&cg).unwrap().is_identity(), || format!("GC·CG ≠ I at n={n}"))?;
            ensure(cg.mul(&gc).unwrap().is_identity(), || format!("CG·GC ≠ I at n={n}"))?;
            let d = random_diagonal_metric(&mut r, n);
            for dir in [Direction::GrassmannToClifford, Direction::CliffordToGrassmann] {
                let m = conversion_matrix(&d, dir).unwrap();
                ensure(m.is_identity(), || format!("diagonal metric gives non-identity {dir:?} at n={n}"))?;
            }
        }
    }
    Ok(())
}

fn alternation_equivalence() -> Check {
    let mut r = rng(7);
    for n in 1..=6 {
        for _ in 0..5 {
            let g = random_metric(&mut r, n);
            for b in IndexSet::all(n).filter(|b| b.grade() <= 6) {
                let alt = alternation_wedge(&b.to_vec(), &g).unwrap();
                let series = grassmann_blade_to_clifford(b, &g).unwrap();
                same(&alt, &series, || format!("n={n} blade {b}"))?;
            }
        }
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut r = rng(8);
    for t in 0..200 {
        let n = 1 + t % 6;
        let g = random_metric(&mut r, n);
        let u = random_sparse(&mut r, n, C, 3);
        let v = random_sparse(&mut r, n, C, 3);
        let fast = convert_basis(&clifford_product(&u, &v, &g).unwrap(), &g, C).unwrap();
        same(&fast, &oracle_clifford_product(&u, &v, &g).unwrap(), || format!("pair {t}, n={n}"))?;
    }
    Ok(())
}

fn associativity() -> Check {
    let mut r = rng(9);
    for t in 0..100 {
        let n = 1 + t % 5;
        let g = random_metric(&mut r, n);
        let [u, v, w] = [0; 3].map(|_| random_multivector(&mut r, n, G, 0.4));
        let cl = |a: &Multivector, b: &Multivector| clifford_product(a, b, &g).unwrap();
        same(&cl(&cl(&u, &v), &w), &cl(&u, &cl(&v, &w)), || format!("∨, triple {t}"))?;
        let ex = |a: &Multivector, b: &Multivector| exterior_product(a, b).unwrap();
        same(&ex(&ex(&u, &v), &w), &ex(&u, &ex(&v, &w)), || format!("∧, triple {t}"))?;
    }
    Ok(())
}

fn grading_and_parity() -> Check {
    // Pascal's rule as the independent count
    let mut binom = vec![vec![1u64]];
    for n in 1..=10 {
        let prev: &Vec<u64> = &binom[n - 1];
        let row = (0..=n)
            .map(|k| if k == 0 || k == n { 1 } else { prev[k - 1] + prev[k] })
            .collect();
        binom.push(row);
    }
    for n in 1..=10 {
        for k in 0..=n {
            let count = rank_basis(n, k).count() as u64;
            ensure(count == binom[n][k], || format!("rank {k} of n={n}: {count} blades"))?;
            ensure(rank_basis(n, k).all(|b| b.grade() == k), || format!("rank {k} of n={n}: wrong grade"))?;
        }
        for odd in [false, true] {
            let count = parity_basis(n, odd).count() as u64;
            ensure(count == 1 << (n - 1), || format!("parity {odd} of n={n}: {count} blades"))?;
        }
    }

    let cfg = parse_config(r#"{"n":4,"field":"rational","metrics":[[[1,1,0,0],[1,2,0,"1/2"],[0,0,-1,3],[0,"1/2",3,1]],[[2,0,1,0],[0,-1,0,0],[1,0,1,"-2/3"],[0,0,"-2/3",5]]]}"#)
        .map_err(|e| e.to_string())?;
    let alg = cfg.algebra();
    let mut r = rng(10);
    for k in 1..=2 {
        for t in 0..100 {
            let u = even_part(&random_multivector(&mut r, 4, G, 0.5)).unwrap();
            let v = even_part(&random_multivector(&mut r, 4, G, 0.5)).unwrap();
            let p = alg.product(&u, &v, k).unwrap();
            same(&even_part(&p).unwrap(), &p, || format!("metric {k}, pair {t}"))?;
        }
    }
    Ok(())
}

fn conjugation() -> Check {
    let mut r = rng(11);
    for mode in [FieldMode::Rational, FieldMode::Gaussian] {
        let coeff = |r: &mut ChaCha8Rng| match mode {
            FieldMode::Rational => small_rational(r),
            FieldMode::Gaussian => small_gaussian(r),
        };
        for t in 0..100 {
            let n = 1 + t % 5;
            let u = random_multivector_with(&mut r, n, G, 0.5, coeff);
            let v = random_multivector_with(&mut r, n, G, 0.5, coeff);
            let lambda = coeff(&mut r);
            let conj = |m: &Multivector| pseudo_hermitian_conj(m).unwrap();
            let ctx = |law: &str| format!("{law}, {mode} pair {t}");
            same(&conj(&conj(&u)), &u, || ctx("involution"))?;
            same(
                &conj(&add(&u.scale(&lambda), &v)),
                &add(&conj(&u).scale(&lambda.conj()), &conj(&v)),
                || ctx("antilinearity"),
            )?;
            same(
                &conj(&exterior_product(&u, &v).unwrap()),
                &exterior_product(&conj(&v), &conj(&u)).unwrap(),
                || ctx("reversal"),
            )?;
        }
    }
    Ok(())
}

fn polymetric_independence() -> Check {
    let cfg = parse_config(r#"{"n":3,"field":"rational","metrics":[[[1,"1/2",0],["1/2",-1,2],[0,2,3]],[[2,-1,0],[-1,1,0],[0,0,"1/3"]]]}"#)
        .map_err(|e| e.to_string())?;
    let alg = cfg.algebra();
    for k in 1..=2 {
        let g = alg.metric(k).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let ei = Multivector::basis(3, G, &[i]).unwrap();
                let ej = Multivector::basis(3, G, &[j]).unwrap();
                let s = add(&alg.product(&ei, &ej, k).unwrap(), &alg.product(&ej, &ei, k).unwrap());
                same(&s, &Multivector::scalar(3, G, g.get(i, j).scale_i64(2)), || format!("∨{k}, i={i} j={j}"))?;
            }
        }
    }
    let e1 = Multivector::basis(3, G, &[1]).unwrap();
    let e2 = Multivector::basis(3, G, &[2]).unwrap();
    let p1 = alg.product(&e1, &e2, 1).unwrap();
    let p2 = alg.product(&e1, &e2, 2).unwrap();
    ensure(p1 != p2, || format!("∨1 and ∨2 agree on e1, e2: {p1:?}"))
}

const CONTRACT_CONFIG: &str = r#"{"n":4,"field":"rational","metrics":[[[1,0,"1/2",0],[0,2,"1/3",0],["1/2","1/3",5,1],[0,0,1,-1]]]}"#;

fn run_cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymetric"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn exit_code(args: &[&str]) -> Option<i32> {
    run_cli(args).status.code()
}

fn cli_contract() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let good = write("good.json", CONTRACT_CONFIG);
    let asym = write("asym.json", r#"{"n":2,"metrics":[[[1,2],[3,1]]]}"#);
    let degen = write("degen.json", r#"{"n":2,"metrics":[[[1,1],[1,1]]]}"#);
    let wide = write("wide.json", r#"{"n":17,"metrics":[]}"#);
    let broken = write("broken.json", "{\"n\": 2,");
    let script = write("script.txt", "let a = e(1) + E(1,3)\na ^ e(2)\na *1 a'\n");
    let missing = dir.path().join("missing.json");
    let missing = missing.to_str().unwrap();

    let cases: &[(&[&str], i32)] = &[
        (&["eval", "--config", &good, "--eval", "e"], 0),
        (&["eval", "--config", &good, "--script", &script], 0),
        (&["eval", "--config", &good, "--eval", "e(5)"], 1),
        (&["eval", "--config", &good, "--eval", "e(1) +"], 1),
        (&["eval", "--config", &good, "--eval", "x"], 1),
        (&["eval", "--config", &good, "--eval", "E(3,1)"], 1),
        (&["eval", "--config", &good, "--eval", "e *2 e"], 1),
        (&["eval", "--config", &good], 2),
        (&["eval", "--config", &good, "--eval", "e", "--script", &script], 2),
        (&["eval", "--config", &good, "--eval", "e", "--format", "xml"], 2),
        (&["eval", "--config", &good, "--eval", "e", "--output-basis", "clifford", "--metric-for-basis", "2"], 2),
        (&["eval", "--config", missing, "--eval", "e"], 2),
        (&["eval", "--config", &asym, "--eval", "e"], 2),
        (&["eval", "--config", &degen, "--eval", "e"], 2),
        (&["eval", "--config", &wide, "--eval", "e"], 2),
        (&["eval", "--config", &broken, "--eval", "e"], 2),
        (&["bench", "--n", "3", "--density", "0", "--iters", "1"], 2),
        (&["bench", "--n", "13", "--density", "0.5", "--iters", "1"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, want) in cases {
        let got = exit_code(args);
        ensure(got == Some(*want), || format!("{args:?}: exit {got:?}, want {want}"))?;
    }
    let out = run_cli(&["eval", "--config", &good, "--eval", "e(5)"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(stderr.contains("index 5 out of range 1..4"), || format!("diagnostic {stderr:?}"))?;

    // byte-identical output for identical inputs
    let exprs = ["E(1,3) *1 E(2,3,4)", "(e(1) + 1/2*e(2,3))' *1 (e(4) - e)", "toC(e(1,2,3), 1) ^ e(4)"];
    for expr in exprs {
        for format in ["text", "json"] {
            for basis in ["grassmann", "clifford"] {
                let args = ["eval", "--config", &good, "--eval", expr, "--format", format, "--output-basis", basis];
                let a = run_cli(&args);
                let b = run_cli(&args);
                ensure(a.status.success(), || format!("{expr}: {}", String::from_utf8_lossy(&a.stderr)))?;
                ensure(a.stdout == b.stdout, || format!("{expr} ({format}, {basis}) differs between runs"))?;
            }
        }
    }

    // JSON round trip against the library
    let cfg = parse_config(CONTRACT_CONFIG).unwrap();
    let g = &cfg.metrics[0];
    let out = run_cli(&["eval", "--config", &good, "--eval", "E(1,3) *1 E(2,3,4)", "--output-basis", "clifford", "--format", "json"]);
    let line = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let back = OutputRecord::from_json(line.trim()).and_then(|r| r.to_multivector()).map_err(|e| e.to_string())?;
    let want = mv(4, C, vec![(-g.get(3, 3), &[1, 2, 4]), (g.get(2, 3).scale_i64(2), &[1, 3, 4])]);
    same(&back, &want, || "worked example through the CLI".into())?;

    let mut r = rng(13);
    for t in 0..20 {
        let u = random_sparse(&mut r, 4, G, 4);
        let v = random_sparse(&mut r, 4, G, 4);
        let src = |m: &Multivector| format!("({})", polymetric::expr::format_text(m));
        let expr = format!("{} *1 {}", src(&u), src(&v));
        let out = run_cli(&["eval", "--config", &good, "--eval", &expr, "--format", "json"]);
        ensure(out.status.success(), || format!("{expr}: {}", String::from_utf8_lossy(&out.stderr)))?;
        let line = String::from_utf8(out.stdout).unwrap();
        let back = OutputRecord::from_json(line.trim()).and_then(|r| r.to_multivector()).map_err(|e| e.to_string())?;
        same(&back, &clifford_product(&u, &v, g).unwrap(), || format!("round trip {t}: {expr}"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 13] = [
        ("worked example A: e13 e234 over 50 metrics, product and oracle", worked_example_a),
        ("worked example B: e13 ∧ e23 in the Clifford basis, 50 metrics", worked_example_b),
        ("worked example C: (e1∧e3)(e2∧e3), 50 metrics", worked_example_c),
        ("anticommutator e^i e^j + e^j e^i = 2 g^ij, n = 2..8", anticommutator),
        ("vector square equals quadratic form, 100 vectors", vector_square),
        ("conversion matrices are inverse, n = 1..8; diagonal gives identity", conversion_inverse),
        ("alternation equals series for every ascending word, n <= 6", alternation_equivalence),
        ("clifford_product equals rewrite oracle, 200 pairs", oracle_equivalence),
        ("associativity of ∨ and ∧, 100 triples", associativity),
        ("blade counts C(n,k), 2^(n-1); even closure with two metrics", grading_and_parity),
        ("‡ involution, antilinearity, reversal in both field modes", conjugation),
        ("per-metric anticommutators and a distinguishing pair", polymetric_independence),
        ("CLI exit codes, determinism, JSON round trip", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS {:>2}  {name}  [{TOLERANCE}, {secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}  [{TOLERANCE}, {secs:.2}s]\n        {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
