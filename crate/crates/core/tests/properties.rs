use num_bigint::BigInt;
use proptest::collection::vec;
use proptest::prelude::*;
use proptest::sample::select;

use bktab::algebra::{basis_expand, is_w_invariant, weyl_act, Family, LaurentPolynomial, SignedPermutation};
use bktab::benderknuth::{bk_a_pattern, bk_b, bk_c_generator};
use bktab::enumeration::{enum_gt, enum_king, enum_orthogonal};
use bktab::json::{parse_value, poly_from_value, poly_to_value, to_canonical_string, Document};
use bktab::{Partition, Tableau};

const NVARS: usize = 3;

/// Up to five terms with small exponents and coefficients.
fn poly() -> impl Strategy<Value = LaurentPolynomial> {
    vec((vec(-3i32..=3, NVARS), -9i64..=9), 0..=5)
        .prop_map(|terms| LaurentPolynomial::from_terms(NVARS, terms).unwrap())
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPolynomial> {
    poly().prop_filter("nonzero divisor", |p| !p.is_zero())
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), vec(any::<bool>(), n))
        .prop_map(|(perm, signs)| SignedPermutation::new(perm, signs).unwrap())
}

proptest! {
    #[test]
    fn ring_axioms(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &LaurentPolynomial::one(NVARS), f.clone());
    }

    #[test]
    fn exact_division_roundtrip(f in poly(), g in nonzero_poly()) {
        let product = &f * &g;
        prop_assert_eq!(product.div_exact(&g).unwrap(), f);
    }

    #[test]
    fn group_action(w1 in signed_perm(NVARS), w2 in signed_perm(NVARS), f in poly()) {
        let step = weyl_act(&w1, &weyl_act(&w2, &f).unwrap()).unwrap();
        prop_assert_eq!(step, weyl_act(&w1.compose(&w2), &f).unwrap());
        for g in SignedPermutation::generators(NVARS) {
            prop_assert_eq!(weyl_act(&g, &weyl_act(&g, &f).unwrap()).unwrap(), f.clone());
        }
    }

    #[test]
    fn orbit_sums_are_invariant(f in poly()) {
        // summing over the group generated by the generators symmetrizes
        let mut orbit = LaurentPolynomial::zero(NVARS);
        for perm in itertools::Itertools::permutations(0..NVARS, NVARS) {
            for mask in 0u32..(1 << NVARS) {
                let signs = (0..NVARS).map(|i| mask >> i & 1 == 1).collect();
                let w = SignedPermutation::new(perm.clone(), signs).unwrap();
                orbit = orbit + weyl_act(&w, &f).unwrap();
            }
        }
        prop_assert!(is_w_invariant(&orbit));
    }

    #[test]
    fn polynomial_json_is_canonical(f in poly(), big in any::<i128>()) {
        let f = f.scale(&BigInt::from(big).max(BigInt::from(1)));
        let s = to_canonical_string(&poly_to_value(&f));
        let back = poly_from_value(&parse_value(&s).unwrap()).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(to_canonical_string(&poly_to_value(&back)), s);
    }

    #[test]
    fn basis_roundtrip(
        n in 1usize..=3,
        picks in vec((0usize..20, -6i64..=6), 1..=4),
        orthogonal in any::<bool>(),
    ) {
        let family = if orthogonal { Family::Orthogonal } else { Family::Symplectic };
        let shapes = Partition::all_up_to(n, 4);
        let mut want = std::collections::BTreeMap::new();
        for (i, c) in picks {
            *want.entry(shapes[i % shapes.len()].clone()).or_insert(BigInt::from(0)) += c;
        }
        want.retain(|_, c: &mut BigInt| *c != BigInt::from(0));
        let mut f = LaurentPolynomial::zero(n);
        for (lam, c) in &want {
            f = f + family.element(n, lam).unwrap().scale(c);
        }
        prop_assert_eq!(basis_expand(&f, family, n).unwrap(), want);
    }
}

fn corpus_docs() -> Vec<Document> {
    let mut docs = Vec::new();
    for lam in Partition::all_up_to(3, 3) {
        docs.extend(enum_gt(3, &lam).unwrap().map(Document::Gt));
        docs.extend(enum_king(3, &lam).unwrap().map(Document::King));
        docs.extend(enum_orthogonal(3, &lam).unwrap().map(Document::Orthogonal));
    }
    docs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn document_json_is_canonical(doc in select(corpus_docs())) {
        let s = to_canonical_string(&doc.to_value());
        let back = Document::parse(&s).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(to_canonical_string(&back.to_value()), s);
        let tableau = match &doc {
            Document::Gt(p) => bktab::bijections::pattern_to_tableau(p).unwrap(),
            Document::King(p) => bktab::bijections::king_pattern_to_tableau(p),
            Document::Orthogonal(p) => bktab::bijections::pattern_to_sot(p).unwrap(),
            Document::Tableau(t) => t.clone(),
        };
        let s = to_canonical_string(&Document::Tableau(tableau.clone()).to_value());
        prop_assert_eq!(Document::parse(&s).unwrap(), Document::Tableau(tableau));
    }

    #[test]
    fn involutions_on_sampled_patterns(doc in select(corpus_docs()), j in 0usize..3) {
        match doc {
            Document::Gt(p) if j >= 1 => {
                prop_assert_eq!(bk_a_pattern(&bk_a_pattern(&p, j).unwrap(), j).unwrap(), p);
            }
            Document::King(p) => {
                prop_assert_eq!(bk_c_generator(&bk_c_generator(&p, j).unwrap(), j).unwrap(), p);
            }
            Document::Orthogonal(p) => {
                prop_assert_eq!(bk_b(&bk_b(&p, j).unwrap(), j).unwrap(), p);
            }
            _ => {}
        }
    }
}

#[test]
fn shape_strings() {
    assert_eq!("3,2,1".parse::<Partition>().unwrap().parts(), &[3, 2, 1]);
    assert!("".parse::<Partition>().unwrap().is_empty());
    assert!("1,2".parse::<Partition>().is_err());
    assert!(Tableau::type_a(2, &[&[1], &[3]]).is_err());
}
