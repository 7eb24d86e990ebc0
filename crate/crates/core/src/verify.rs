//! Bounded verification sweeps over every shape with at most `n` parts and
//! size at most `max_size`, for each rank `1..=n`.
//!
//! A sweep stops at the first counterexample and reports it as JSON.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{is_symmetric, is_w_invariant, LaurentPolynomial, Monomial, SignedPermutation};
use crate::benderknuth::{
    bk_a_pattern, bk_a_tableau, bk_b, bk_b_tableau, bk_c_generator, bk_c_generator_tableau, four_fold_composite,
};
use crate::bijections::{king_pattern_to_tableau, pattern_to_sot, pattern_to_tableau};
use crate::combinat::pattern::forced_zeros_vanish;
use crate::combinat::{validate_gt, weight_pattern_a, weight_tableau, Partition};
use crate::enumeration::{enum_gt, enum_king, enum_orthogonal, orthogonal, schur, symplectic};
use crate::error::{Error, Result};
use crate::json::{gt_to_value, king_to_value, orthogonal_to_value, poly_to_value, tableau_to_value};
use crate::oracles::{character_b, character_c, detrop_bk_a, detrop_bk_c, tropical_limit_agrees, RationalPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Involution,
    WeightAction,
    Symmetry,
    SumIdentity,
    Character,
    Detrop,
    ForcedZeros,
    Locality,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Involution,
        Check::WeightAction,
        Check::Symmetry,
        Check::SumIdentity,
        Check::Character,
        Check::Detrop,
        Check::ForcedZeros,
        Check::Locality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Involution => "involution",
            Check::WeightAction => "weight-action",
            Check::Symmetry => "symmetry",
            Check::SumIdentity => "sum-identity",
            Check::Character => "character",
            Check::Detrop => "detrop",
            Check::ForcedZeros => "lemma44",
            Check::Locality => "locality",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::Parse(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub n: usize,
    pub max_size: u32,
    pub seed: u64,
    /// Random points for the detropicalization check.
    pub samples: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { n: 2, max_size: 4, seed: 0, samples: 100 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub max_size: u32,
    pub seed: u64,
    pub corpus_size: usize,
    pub elapsed_ms: u128,
    pub passed: bool,
    pub counterexample: Option<Value>,
}

pub fn run(check: Check, cfg: &Config) -> Report {
    let start = Instant::now();
    let mut sweep = Sweep::default();
    let found = match check {
        Check::Involution => involution(cfg, &mut sweep),
        Check::WeightAction => weight_action(cfg, &mut sweep),
        Check::Symmetry => symmetry(cfg, &mut sweep),
        Check::SumIdentity => sum_identity(cfg, &mut sweep),
        Check::Character => character(cfg, &mut sweep),
        Check::Detrop => detrop(cfg, &mut sweep),
        Check::ForcedZeros => forced_zeros(cfg, &mut sweep),
        Check::Locality => locality(cfg, &mut sweep),
    }
    .err();
    Report {
        check: check.name().to_string(),
        n: cfg.n,
        max_size: cfg.max_size,
        seed: cfg.seed,
        corpus_size: sweep.corpus,
        elapsed_ms: start.elapsed().as_millis(),
        passed: found.is_none(),
        counterexample: found,
    }
}

#[derive(Default)]
struct Sweep {
    corpus: usize,
}

/// Early exit carrying the counterexample document.
type Outcome = std::result::Result<(), Value>;

fn failure(map: &str, j: usize, input: Value, reason: impl fmt::Display) -> Value {
    json!({ "map": map, "j": j, "input": input, "reason": reason.to_string() })
}

fn shapes(cfg: &Config) -> impl Iterator<Item = (usize, Partition)> {
    let max = cfg.max_size;
    (1..=cfg.n).flat_map(move |n| Partition::all_up_to(n, max).into_iter().map(move |lam| (n, lam)))
}

/// `f(f(x)) == x`, with errors from either application reported.
fn involutive<T: PartialEq + fmt::Debug>(x: &T, f: impl Fn(&T) -> Result<T>) -> std::result::Result<(), String> {
    let once = f(x).map_err(|e| e.to_string())?;
    let twice = f(&once).map_err(|e| e.to_string())?;
    if &twice == x {
        Ok(())
    } else {
        Err(format!("second application gave {twice:?}"))
    }
}

fn involution(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        for p in enum_gt(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = pattern_to_tableau(&p).expect("valid pattern");
            for j in 1..n {
                involutive(&p, |q| bk_a_pattern(q, j)).map_err(|r| failure("bk_a_pattern", j, gt_to_value(&p), r))?;
                involutive(&t, |u| bk_a_tableau(u, j))
                    .map_err(|r| failure("bk_a_tableau", j, tableau_to_value(&t), r))?;
            }
        }
        for k in enum_king(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = king_pattern_to_tableau(&k);
            for j in 0..n {
                involutive(&k, |q| bk_c_generator(q, j))
                    .map_err(|r| failure("bk_c_pattern", j, king_to_value(&k), r))?;
                involutive(&t, |u| bk_c_generator_tableau(u, j))
                    .map_err(|r| failure("bk_c_tableau", j, tableau_to_value(&t), r))?;
            }
        }
        for o in enum_orthogonal(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = pattern_to_sot(&o).expect("valid pattern");
            for j in 0..n {
                involutive(&o, |q| bk_b(q, j)).map_err(|r| failure("bk_b", j, orthogonal_to_value(&o), r))?;
                involutive(&t, |u| bk_b_tableau(u, j))
                    .map_err(|r| failure("bk_b_tableau", j, tableau_to_value(&t), r))?;
            }
        }
    }
    Ok(())
}

fn equivariant(
    before: &Monomial,
    after: std::result::Result<Monomial, Error>,
    g: &SignedPermutation,
) -> std::result::Result<(), String> {
    let after = after.map_err(|e| e.to_string())?;
    let want = g.act_monomial(before);
    if after == want {
        Ok(())
    } else {
        Err(format!("weight {after} but the generator sends {before} to {want}"))
    }
}

fn weight_action(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        for p in enum_gt(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = pattern_to_tableau(&p).expect("valid pattern");
            for j in 1..n {
                let g = SignedPermutation::adjacent_swap(n, j);
                let w = weight_pattern_a(&p);
                equivariant(&w, bk_a_pattern(&p, j).map(|q| weight_pattern_a(&q)), &g)
                    .map_err(|r| failure("bk_a_pattern", j, gt_to_value(&p), r))?;
                equivariant(&weight_tableau(&t), bk_a_tableau(&t, j).map(|u| weight_tableau(&u)), &g)
                    .map_err(|r| failure("bk_a_tableau", j, tableau_to_value(&t), r))?;
            }
        }
        for k in enum_king(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = king_pattern_to_tableau(&k);
            for j in 0..n {
                let g = SignedPermutation::generator(n, j);
                equivariant(&k.weight(), bk_c_generator(&k, j).map(|q| q.weight()), &g)
                    .map_err(|r| failure("bk_c_pattern", j, king_to_value(&k), r))?;
                equivariant(&weight_tableau(&t), bk_c_generator_tableau(&t, j).map(|u| weight_tableau(&u)), &g)
                    .map_err(|r| failure("bk_c_tableau", j, tableau_to_value(&t), r))?;
            }
        }
        for o in enum_orthogonal(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            let t = pattern_to_sot(&o).expect("valid pattern");
            for j in 0..n {
                let g = SignedPermutation::generator(n, j);
                equivariant(&o.weight(), bk_b(&o, j).map(|q| q.weight()), &g)
                    .map_err(|r| failure("bk_b", j, orthogonal_to_value(&o), r))?;
                equivariant(&weight_tableau(&t), bk_b_tableau(&t, j).map(|u| weight_tableau(&u)), &g)
                    .map_err(|r| failure("bk_b_tableau", j, tableau_to_value(&t), r))?;
            }
        }
    }
    Ok(())
}

fn poly_failure(what: &str, n: usize, lam: &Partition, f: &LaurentPolynomial) -> Value {
    json!({ "property": what, "n": n, "shape": lam.parts(), "polynomial": poly_to_value(f) })
}

fn symmetry(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        sweep.corpus += 3;
        let sp = symplectic(n, &lam).expect("shape fits");
        if !is_w_invariant(&sp) {
            return Err(poly_failure("symplectic is W-invariant", n, &lam, &sp));
        }
        let o = orthogonal(n, &lam).expect("shape fits");
        if !is_w_invariant(&o) {
            return Err(poly_failure("orthogonal is W-invariant", n, &lam, &o));
        }
        let s = schur(n, &lam).expect("shape fits");
        if !is_symmetric(&s) {
            return Err(poly_failure("schur is symmetric", n, &lam, &s));
        }
    }
    Ok(())
}

fn sum_identity(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        sweep.corpus += 1;
        let o = orthogonal(n, &lam).expect("shape fits");
        let mut sum = LaurentPolynomial::zero(n);
        for mu in lam.remove_at_most_one_per_row(n) {
            sum = sum + symplectic(n, &mu).expect("shape fits");
        }
        if sum != o {
            return Err(poly_failure("orthogonal equals the sum of symplectic", n, &lam, &(&o - &sum)));
        }
    }
    Ok(())
}

fn character(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        sweep.corpus += 2;
        let sp = symplectic(n, &lam).expect("shape fits");
        match character_c(n, &lam) {
            Ok(c) if c == sp => {}
            Ok(c) => return Err(poly_failure("type C character equals symplectic", n, &lam, &(&c - &sp))),
            Err(e) => {
                return Err(json!({ "property": "type C character", "shape": lam.parts(), "error": e.to_string() }))
            }
        }
        let o = orthogonal(n, &lam).expect("shape fits");
        match character_b(n, &lam) {
            Ok(c) if c == o => {}
            Ok(c) => return Err(poly_failure("type B character equals orthogonal", n, &lam, &(&c - &o))),
            Err(e) => {
                return Err(json!({ "property": "type B character", "shape": lam.parts(), "error": e.to_string() }))
            }
        }
    }
    Ok(())
}

fn rational_value(x: &RationalPattern) -> Value {
    let rows: Vec<Vec<Value>> = x
        .rows()
        .iter()
        .map(|r| r.iter().map(|v| v.as_ref().map_or(Value::Null, |v| Value::String(v.to_string()))).collect())
        .collect();
    json!(rows)
}

/// Random exact points for both detropicalized maps, then the valuation
/// probe on up to ten GT patterns drawn from the corpus.
fn detrop(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.n;
    for _ in 0..cfg.samples {
        sweep.corpus += 1;
        let king = RationalPattern::random_king(n, 50, &mut rng);
        for j in 1..n {
            involutive(&king, |x| detrop_bk_c(x, j))
                .map_err(|r| failure("detrop_bk_c", j, rational_value(&king), r))?;
        }
        let full = RationalPattern::random_full(2 * n, 50, &mut rng);
        for j in 1..2 * n {
            involutive(&full, |x| detrop_bk_a(x, j))
                .map_err(|r| failure("detrop_bk_a", j, rational_value(&full), r))?;
        }
    }
    let corpus: Vec<_> = shapes(cfg).flat_map(|(n, lam)| enum_gt(n, &lam).expect("shape fits")).collect();
    for p in corpus.choose_multiple(&mut rng, 10) {
        sweep.corpus += 1;
        for j in 1..p.n_rows() {
            match tropical_limit_agrees(p, j, 8) {
                Ok(true) => {}
                Ok(false) => return Err(failure("tropical limit", j, gt_to_value(p), "valuation disagrees")),
                Err(e) => return Err(failure("tropical limit", j, gt_to_value(p), e)),
            }
        }
    }
    Ok(())
}

fn forced_zeros(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        for k in enum_king(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            for j in 1..n {
                let steps = four_fold_composite(k.as_gt(), j);
                if let Some(bad) = steps.iter().position(|s| !validate_gt(s)) {
                    return Err(failure(
                        "four_fold_composite",
                        j,
                        king_to_value(&k),
                        format!("step {} is not GT", bad + 1),
                    ));
                }
                if !forced_zeros_vanish(&steps[3], Some((j + 1, 2 * j))) {
                    return Err(failure(
                        "four_fold_composite",
                        j,
                        king_to_value(&k),
                        format!("a forced zero other than ({}, {}) is nonzero: {:?}", j + 1, 2 * j, steps[3].rows()),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn locality(cfg: &Config, sweep: &mut Sweep) -> Outcome {
    for (n, lam) in shapes(cfg) {
        for k in enum_king(n, &lam).expect("shape fits") {
            sweep.corpus += 1;
            for j in 0..n {
                let rows = if j == 0 { 1..=1 } else { 2 * j - 1..=2 * j + 1 };
                let image = bk_c_generator(&k, j).map_err(|e| failure("bk_c_pattern", j, king_to_value(&k), e))?;
                let touched = image.as_gt().diff_positions(k.as_gt());
                if let Some(&(i, row)) = touched.iter().find(|(_, row)| !rows.contains(row)) {
                    return Err(failure("bk_c_pattern", j, king_to_value(&k), format!("entry ({i}, {row}) changed")));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("bogus".parse::<Check>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = Config { n: 2, max_size: 3, seed: 1, samples: 5 };
        for c in Check::ALL {
            let r = run(c, &cfg);
            assert!(r.passed, "{c}: {:?}", r.counterexample);
            assert!(r.corpus_size > 0, "{c}");
        }
    }
}
