mod common;

use std::cmp::Ordering;

use bicomm_core::groebner::{divides, reduce, truncated_basis, weight_preceq, Membership, MonomialOrder, OrderKind};
use bicomm_core::monomial::{enumerate_degree, mul_monomials};
use bicomm_core::text::parse_polynomial;
use bicomm_core::{BasisMonomial, Signature, SuperPolynomial};
use common::{coords, ideal_slices, sig, small_tensors, weight_brute};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ideals() -> Vec<(Signature, Vec<&'static str>)> {
    vec![
        (sig(1, 0), vec!["y1 | y1"]),
        (sig(0, 2), vec!["z1 | z1"]),
        (sig(1, 1), vec![]),
        (sig(1, 1), vec!["y1 | z1 - z1 | y1"]),
        (sig(2, 0), vec!["y1 | y2 + y2 | y1", "y1 y2 | y1"]),
    ]
}

fn random_combination(rng: &mut ChaCha8Rng, s: &Signature, elems: &[SuperPolynomial]) -> SuperPolynomial {
    let mut f = SuperPolynomial::zero(*s);
    for e in elems {
        f = &f + &e.scale(&s.field.from_i64(rng.gen_range(-3..=3)));
    }
    f
}

#[test]
fn quotient_dims_and_membership_match_rank_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (s, gens) in ideals() {
        let gens: Vec<SuperPolynomial> = gens.iter().map(|g| parse_polynomial(g, &s).unwrap()).collect();
        let d = if s.p + s.q > 1 && !gens.is_empty() { 6 } else { 8 };
        for kind in [OrderKind::Deglex, OrderKind::Weight] {
            let b = truncated_basis(&gens, &MonomialOrder::new(kind, &s), d).unwrap();
            let slices = ideal_slices(&gens, &s, d);
            let oracle: Vec<usize> = slices.iter().map(|sl| sl.basis.len() - sl.span.rank()).collect();
            assert_eq!(b.quotient_dims(), oracle, "{gens:?} {kind:?}");

            for (i, sl) in slices.iter().enumerate() {
                if i + 1 > b.stable_through() {
                    break;
                }
                if sl.basis.is_empty() {
                    continue;
                }
                for _ in 0..10 {
                    let inside = random_combination(&mut rng, &s, &sl.elements);
                    assert_eq!(b.member(&inside).unwrap(), Membership::Yes);
                    let m = sl.basis.choose(&mut rng).unwrap().clone();
                    let f = &inside + &SuperPolynomial::monomial(s, m, s.field.one());
                    let expected = if sl.span.contains(&coords(&f, &sl.basis)) { Membership::Yes } else { Membership::No };
                    assert_eq!(b.member(&f).unwrap(), expected, "{f}");
                }
            }
        }
    }
}

#[test]
fn normal_forms_are_idempotent_and_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (s, gens) in ideals() {
        let gens: Vec<SuperPolynomial> = gens.iter().map(|g| parse_polynomial(g, &s).unwrap()).collect();
        let ord = MonomialOrder::deglex(&s);
        let b = truncated_basis(&gens, &ord, 6).unwrap();
        let mut shuffled = b.generators().to_vec();
        for d in 1..=b.stable_through() {
            let monos = enumerate_degree(&s, d);
            if monos.is_empty() {
                continue;
            }
            for _ in 0..20 {
                let picks: Vec<SuperPolynomial> = (0..3)
                    .map(|_| SuperPolynomial::monomial(s, monos.choose(&mut rng).unwrap().clone(), s.field.one()))
                    .collect();
                let f = random_combination(&mut rng, &s, &picks);
                let r = b.reduce(&f).unwrap();
                assert_eq!(b.reduce(&r).unwrap(), r);
                shuffled.shuffle(&mut rng);
                assert_eq!(reduce(&f, &shuffled, &ord).unwrap(), r, "{f}");
            }
        }
    }
}

/// Monomial-level product as an optional monomial (sign dropped).
fn times(a: &BasisMonomial, b: &BasisMonomial, s: &Signature) -> Option<BasisMonomial> {
    mul_monomials(a, b, s).unwrap().1
}

#[test]
fn orders_are_compatible_with_generator_multiplication() {
    for (p, q) in [(1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (2, 2)] {
        let s = sig(p, q);
        let gens: Vec<BasisMonomial> = s.generators().into_iter().map(BasisMonomial::Gen).collect();
        let all: Vec<BasisMonomial> = (1..=3).flat_map(|n| enumerate_degree(&s, n)).collect();
        let mut orders = vec![MonomialOrder::deglex(&s), MonomialOrder::weight(&s)];
        let mut rev = s.generators();
        rev.reverse();
        orders.push(MonomialOrder::deglex_with_precedence(&s, rev).unwrap());
        for ord in &orders {
            for a in &all {
                for b in &all {
                    // The weight order only ranks tensors among themselves.
                    let tensors = a.as_tensor().is_some() && b.as_tensor().is_some();
                    if ord.compare(a, b) != Ordering::Less || (ord.kind() == OrderKind::Weight && !tensors) {
                        continue;
                    }
                    for x in &gens {
                        if let (Some(xa), Some(xb)) = (times(x, a, &s), times(x, b, &s)) {
                            assert_eq!(ord.compare(&xa, &xb), Ordering::Less, "{x} * ({a} < {b}) {:?}", ord.kind());
                        }
                        if let (Some(ax), Some(bx)) = (times(a, x, &s), times(b, x, &s)) {
                            assert_eq!(ord.compare(&ax, &bx), Ordering::Less, "({a} < {b}) * {x} {:?}", ord.kind());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn orders_are_total() {
    let s = sig(2, 1);
    let all: Vec<BasisMonomial> = (1..=3).flat_map(|n| enumerate_degree(&s, n)).collect();
    for ord in [MonomialOrder::deglex(&s), MonomialOrder::weight(&s)] {
        let mut sorted = all.clone();
        sorted.sort_by(|a, b| ord.compare(a, b));
        for w in sorted.windows(2) {
            assert_eq!(ord.compare(&w[0], &w[1]), Ordering::Less);
            assert_eq!(ord.compare(&w[1], &w[0]), Ordering::Greater);
        }
    }
}

#[test]
fn divisibility_matches_product_closure() {
    // n is divisible by m iff n is reachable from m by generator products.
    let s = sig(1, 2);
    let gens: Vec<BasisMonomial> = s.generators().into_iter().map(BasisMonomial::Gen).collect();
    let mut reach: std::collections::BTreeMap<BasisMonomial, std::collections::BTreeSet<BasisMonomial>> = Default::default();
    let all: Vec<BasisMonomial> = (1..=4).flat_map(|n| enumerate_degree(&s, n)).collect();
    for m in all.iter().rev() {
        let mut set: std::collections::BTreeSet<BasisMonomial> = [m.clone()].into();
        for x in &gens {
            for next in [times(x, m, &s), times(m, x, &s)].into_iter().flatten() {
                if next.degree() <= 4 {
                    set.extend(reach[&next].iter().cloned());
                }
            }
        }
        reach.insert(m.clone(), set);
    }
    for m in &all {
        for n in &all {
            assert_eq!(divides(m, n), reach[m].contains(n), "{m} | {n}");
        }
    }
}

#[test]
fn weight_preceq_matches_exhaustive_search_on_two_indices() {
    let ts = small_tensors(2);
    let mut agree = 0usize;
    for m in ts.iter().step_by(7) {
        for n in &ts {
            let fast = weight_preceq(&BasisMonomial::Tensor(m.clone()), &BasisMonomial::Tensor(n.clone())).unwrap();
            assert_eq!(fast, weight_brute(m, n, 2), "{m} vs {n}");
            agree += 1;
        }
    }
    assert!(agree > 10_000);
}

#[test]
fn weight_preceq_matches_exhaustive_search_on_three_indices() {
    let ts = small_tensors(3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..20_000 {
        let m = ts.choose(&mut rng).unwrap();
        let n = ts.choose(&mut rng).unwrap();
        let fast = weight_preceq(&BasisMonomial::Tensor(m.clone()), &BasisMonomial::Tensor(n.clone())).unwrap();
        assert_eq!(fast, weight_brute(m, n, 3), "{m} vs {n}");
    }
}
