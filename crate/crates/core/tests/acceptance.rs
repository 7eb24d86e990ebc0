//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bktab::algebra::{basis_expand, is_symmetric, Family, LaurentPolynomial, Monomial};
use bktab::benderknuth::{bk_a_pattern, bk_a_tableau, bk_c_pattern, bk_c_pattern_traced, bk_c_tableau};
use bktab::bijections::{sot_to_pattern, tableau_to_pattern};
use bktab::combinat::{king_support, weight_tableau};
use bktab::enumeration::{schur, symplectic};
use bktab::json::{gt_to_value, king_to_value, orthogonal_to_value, tableau_to_value, to_canonical_string, Document};
use bktab::oracles::{character_b, character_c, detrop_bk_c, RationalPattern};
use bktab::verify::{self, Check, Config};
use bktab::{AlphabetKind, GTPattern, KingPattern, Partition, Tableau};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn canon(v: serde_json::Value) -> String {
    to_canonical_string(&v)
}

fn king_tab(n: usize, rows: &[&[&str]]) -> Tableau {
    Tableau::signed(AlphabetKind::Signed(n), rows).unwrap()
}

fn mono(e: &[i32]) -> Monomial {
    Monomial(e.to_vec())
}

fn sweep(check: Check, n: usize, max_size: u32) -> Outcome {
    let r = verify::run(check, &Config { n, max_size, seed: 0, samples: 0 });
    ensure(r.passed && r.corpus_size > 0, || {
        format!("{check}: corpus {} counterexample {:?}", r.corpus_size, r.counterexample)
    })
}

fn golden_examples() -> Outcome {
    // weights of the three shape (3,3,2) tableaux
    let ssyt = Tableau::type_a(4, &[&[1, 1, 3], &[2, 3, 4], &[3, 4]]).unwrap();
    let sot =
        Tableau::signed(AlphabetKind::SignedInf(3), &[&["1", "2", "inf"], &["3", "3", "inf"], &["3b", "3b"]]).unwrap();
    let king = king_tab(3, &[&["1", "2", "2b"], &["3", "3", "3b"], &["3b", "3b"]]);
    ensure(weight_tableau(&ssyt) == mono(&[2, 1, 3, 2]), || "ssyt weight".into())?;
    ensure(weight_tableau(&sot) == mono(&[1, 1, 0]), || "orthogonal weight".into())?;
    ensure(weight_tableau(&king) == mono(&[1, 0, -1]), || "symplectic weight".into())?;

    // the three tableau/pattern pairs of shape (3,2)
    let pairs = [
        (
            r#"{"kind":"ssyt","n":3,"rows":[["1","1","3"],["2","3"]],"shape":[3,2]}"#,
            r#"{"kind":"gt","rows":[[3,2,0],[2,1],[2]]}"#,
        ),
        (
            r#"{"kind":"orthogonal","n":2,"rows":[["1","1b","inf"],["2","2b"]],"shape":[3,2]}"#,
            r#"{"circled":[1],"kind":"orthogonal","rows":[[2,2,0,0],[2,1,0],[2,0],[1]]}"#,
        ),
        (
            r#"{"kind":"king","n":2,"rows":[["1","1b","2"],["2","2b"]],"shape":[3,2]}"#,
            r#"{"kind":"king","rows":[[3,2,0,0],[3,1,0],[2,0],[1]]}"#,
        ),
    ];
    for (tab, pat) in pairs {
        let Document::Tableau(t) = Document::parse(tab).map_err(|e| e.to_string())? else {
            return Err("expected a tableau".into());
        };
        let got = match t.kind() {
            AlphabetKind::TypeA(_) => canon(gt_to_value(&tableau_to_pattern(&t).unwrap())),
            AlphabetKind::Signed(_) => {
                canon(king_to_value(&KingPattern::new(tableau_to_pattern(&t).unwrap()).unwrap()))
            }
            AlphabetKind::SignedInf(_) => canon(orthogonal_to_value(&sot_to_pattern(&t).unwrap())),
        };
        ensure(got == pat, || format!("{tab} gave {got}"))?;
        let back = Document::parse(pat).map_err(|e| e.to_string())?;
        let back = match back {
            Document::Gt(p) => bktab::bijections::pattern_to_tableau(&p),
            Document::King(p) => Ok(bktab::bijections::king_pattern_to_tableau(&p)),
            Document::Orthogonal(p) => bktab::bijections::pattern_to_sot(&p),
            Document::Tableau(_) => return Err("expected a pattern".into()),
        }
        .map_err(|e| e.to_string())?;
        ensure(canon(tableau_to_value(&back)) == tab, || format!("{pat} gave back {back}"))?;
    }

    // type A on patterns, j = 3
    let p = GTPattern::new(vec![vec![13, 9, 4, 0], vec![10, 5, 3], vec![7, 3], vec![4]]).unwrap();
    let got = canon(gt_to_value(&bk_a_pattern(&p, 3).map_err(|e| e.to_string())?));
    ensure(got == r#"{"kind":"gt","rows":[[13,9,4,0],[12,6,0],[7,3],[4]]}"#, || got.clone())?;

    // type C on patterns, j = 2, with its four intermediate steps
    let k =
        KingPattern::from_rows(vec![vec![3, 3, 2], vec![3, 2, 0], vec![3, 0], vec![2, 0], vec![1], vec![1]]).unwrap();
    let trace = bk_c_pattern_traced(&k, 2).map_err(|e| e.to_string())?;
    let steps = [
        r#"{"kind":"gt","rows":[[3,3,2,0,0,0],[3,2,0,0,0],[2,2,0,0],[2,0,0],[1,0],[1]]}"#,
        r#"{"kind":"gt","rows":[[3,3,2,0,0,0],[3,2,0,0,0],[2,2,0,0],[2,1,0],[1,0],[1]]}"#,
        r#"{"kind":"gt","rows":[[3,3,2,0,0,0],[3,2,2,0,0],[2,2,0,0],[2,1,0],[1,0],[1]]}"#,
        r#"{"kind":"gt","rows":[[3,3,2,0,0,0],[3,2,2,0,0],[3,2,1,0],[2,1,0],[1,0],[1]]}"#,
    ];
    for (i, (step, want)) in trace.steps.iter().zip(steps).enumerate() {
        let got = canon(gt_to_value(step));
        ensure(got == want, || format!("step {}: {got}", i + 1))?;
    }
    ensure(trace.steps[3].get(3, 4) == Some(1), || "rect should subtract 1".into())?;
    let got = canon(king_to_value(&trace.result));
    ensure(got == r#"{"kind":"king","rows":[[3,3,2,0,0,0],[3,2,1,0,0],[3,1,0,0],[2,0,0],[1,0],[1]]}"#, || got.clone())?;

    // type A on tableaux, j = 3
    let t =
        Tableau::type_a(4, &[&[1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4], &[2, 2, 2, 3, 3, 4, 4, 4, 4], &[3, 3, 3, 4]])
            .unwrap();
    let got = bk_a_tableau(&t, 3).map_err(|e| e.to_string())?;
    let want =
        Tableau::type_a(4, &[&[1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 3, 4], &[2, 2, 2, 3, 3, 3, 4, 4, 4], &[4, 4, 4, 4]])
            .unwrap();
    ensure(got == want, || format!("type A tableau gave\n{got}"))?;

    // type C on tableaux, j = 2
    let got = bk_c_tableau(&king, 2).map_err(|e| e.to_string())?;
    let want = king_tab(3, &[&["1", "2", "2b"], &["2b", "3", "3b"], &["3", "3b"]]);
    ensure(canon(tableau_to_value(&got)) == canon(tableau_to_value(&want)), || format!("type C tableau gave\n{got}"))
}

fn symmetry() -> Outcome {
    sweep(Check::Symmetry, 3, 5)?;
    for n in 1..=4 {
        for lam in Partition::all_up_to(n, 6) {
            let s = schur(n, &lam).map_err(|e| e.to_string())?;
            ensure(is_symmetric(&s), || format!("schur({n}, {lam}) is not symmetric"))?;
        }
    }
    Ok(())
}

fn characters() -> Outcome {
    sweep(Check::Character, 3, 5)?;
    let vector = Partition::new(vec![1]).unwrap();
    for n in 1..=3 {
        let c = character_c(n, &vector).map_err(|e| e.to_string())?;
        ensure(c.coefficient_sum() == BigInt::from(2 * n), || format!("type C mass at n = {n}"))?;
        let b = character_b(n, &vector).map_err(|e| e.to_string())?;
        ensure(b.coefficient_sum() == BigInt::from(2 * n + 1), || format!("type B mass at n = {n}"))?;
    }
    Ok(())
}

fn basis_expansion() -> Outcome {
    let part = |p: &[u32]| Partition::new(p.to_vec()).unwrap();
    let sp1 = symplectic(2, &part(&[1])).unwrap();
    let got = basis_expand(&(&sp1 * &sp1), Family::Symplectic, 2).map_err(|e| e.to_string())?;
    let want =
        BTreeMap::from([(part(&[2]), BigInt::from(1)), (part(&[1, 1]), 1.into()), (Partition::empty(), 1.into())]);
    ensure(got == want, || format!("sp_(1)^2 expanded to {got:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..60 {
        let n = rng.gen_range(1..=3);
        let family = if trial % 2 == 0 { Family::Symplectic } else { Family::Orthogonal };
        let shapes = Partition::all_up_to(n, 4);
        let mut coefs: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for _ in 0..rng.gen_range(1..=4) {
            let lam = shapes[rng.gen_range(0..shapes.len())].clone();
            let c: i64 = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
            *coefs.entry(lam).or_default() += c;
        }
        coefs.retain(|_, c| *c != BigInt::from(0));
        let mut f = LaurentPolynomial::zero(n);
        for (lam, c) in &coefs {
            f = f + family.element(n, lam).unwrap().scale(c);
        }
        let got = basis_expand(&f, family, n).map_err(|e| e.to_string())?;
        ensure(got == coefs, || format!("trial {trial}: {coefs:?} came back as {got:?}"))?;
    }
    Ok(())
}

fn detropicalization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for s in 0..120 {
        let x = RationalPattern::random_king(3, 50, &mut rng);
        let y = detrop_bk_c(&x, 2).map_err(|e| e.to_string())?;
        let back = detrop_bk_c(&y, 2).map_err(|e| e.to_string())?;
        ensure(back == x, || format!("sample {s}:\n{x}\nreturned\n{back}"))?;
    }
    // integer point of the worked type C example, shifted by one
    let k =
        KingPattern::from_rows(vec![vec![3, 3, 2], vec![3, 2, 0], vec![3, 0], vec![2, 0], vec![1], vec![1]]).unwrap();
    let rows: Vec<Vec<Option<BigRational>>> = (1..=6)
        .rev()
        .map(|r| {
            (1..=r)
                .map(|i| king_support(i, r).then(|| BigRational::from_integer((k.get(i, r).unwrap() + 1).into())))
                .collect()
        })
        .collect();
    let x = RationalPattern::new(rows).map_err(|e| e.to_string())?;
    let back = detrop_bk_c(&detrop_bk_c(&x, 2).map_err(|e| e.to_string())?, 2).map_err(|e| e.to_string())?;
    ensure(back == x, || "shifted worked example did not return".into())
}

fn braid_witness() -> Outcome {
    // column tableau 3 over 3̄
    let p = KingPattern::from_rows(vec![vec![1, 1], vec![1], vec![], vec![], vec![], vec![]]).unwrap();
    let mut q = p.clone();
    for _ in 0..3 {
        q = bk_c_pattern(&bk_c_pattern(&q, 2).map_err(|e| e.to_string())?, 1).map_err(|e| e.to_string())?;
    }
    ensure(q != p, || "(BK_1 BK_2)^3 fixed the recorded witness".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("golden examples", golden_examples),
        ("involutions", || sweep(Check::Involution, 3, 5)),
        ("weight equivariance", || sweep(Check::WeightAction, 3, 5)),
        ("forced zeros and locality", || sweep(Check::ForcedZeros, 3, 5).and_then(|()| sweep(Check::Locality, 3, 5))),
        ("symmetry", symmetry),
        ("orthogonal as a sum of symplectic", || sweep(Check::SumIdentity, 3, 5)),
        ("character oracles", characters),
        ("basis expansion", basis_expansion),
        ("detropicalized type C involution", detropicalization),
        ("no braid relation", braid_witness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({ms} ms)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({ms} ms): {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
