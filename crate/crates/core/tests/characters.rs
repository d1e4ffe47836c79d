mod common;

use std::collections::BTreeSet;

use bicomm_core::characters::{
    cocharacter_from_hilbert, double_multiplicity_key, double_multiplicity_series, multiplicity, schur, schur_expand,
    young_column_product, young_row_product, Partition,
};
use bicomm_core::intpoly::IntPoly;
use bicomm_core::series::{codimension, Codimension};
use bicomm_core::{Field, Signature};
use common::{count_syt, partitions_up_to, sig};
use num_bigint::BigInt;
use num_traits::Zero;

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sum_of_schurs(shapes: &[Partition], d: usize) -> IntPoly {
    shapes.iter().fold(IntPoly::zero(d), |acc, nu| acc.add(&schur(nu, d)))
}

fn column(n: usize) -> Partition {
    Partition::new(vec![1; n]).unwrap()
}

#[test]
fn pieri_rules_are_polynomial_identities() {
    for lambda in partitions_up_to(4) {
        for n in 0..=3 {
            for d in 1..=3 {
                if lambda.rows() > d {
                    assert!(young_row_product(&lambda, n, d).is_err());
                    continue;
                }
                let row = young_row_product(&lambda, n, d).unwrap();
                let h = schur(&Partition::new(if n == 0 { vec![] } else { vec![n] }).unwrap(), d);
                assert_eq!(schur(&lambda, d).mul(&h), sum_of_schurs(&row, d), "{lambda} * h{n} in {d} variables");

                let col = young_column_product(&lambda, n, d);
                let e = schur(&column(n), d);
                assert_eq!(schur(&lambda, d).mul(&e), sum_of_schurs(&col.shapes, d), "{lambda} * e{n} in {d} variables");
                assert_eq!(col.vanished, n > d);
            }
        }
    }
}

#[test]
fn conjugation_swaps_row_and_column_rules() {
    for lambda in partitions_up_to(4) {
        for n in 1..=3 {
            let big = lambda.size() + n;
            let row: BTreeSet<Partition> = young_row_product(&lambda, n, big).unwrap().iter().map(Partition::conjugate).collect();
            let col: BTreeSet<Partition> = young_column_product(&lambda.conjugate(), n, big).shapes.into_iter().collect();
            assert_eq!(row, col, "{lambda} n={n}");
        }
    }
}

#[test]
fn hook_lengths_count_standard_tableaux() {
    for lambda in partitions_up_to(8) {
        assert_eq!(lambda.standard_tableaux(), count_syt(lambda.parts()), "{lambda}");
    }
}

#[test]
fn schur_expansion_examples() {
    let f = schur(&part("2"), 2).add(&schur(&part("1,1"), 2).scale(&BigInt::from(2)));
    let expanded = schur_expand(&f).unwrap();
    assert_eq!(expanded.len(), 2);
    assert_eq!(expanded[&part("2")], BigInt::from(1));
    assert_eq!(expanded[&part("1,1")], BigInt::from(2));
    let u1u2 = IntPoly::monomial(2, vec![1, 1], 1);
    assert_eq!(schur_expand(&u1u2).unwrap().into_iter().collect::<Vec<_>>(), vec![(part("1,1"), BigInt::from(1))]);
    assert!(schur_expand(&IntPoly::var(2, 0)).is_err());
}

#[test]
fn multiplicities_vanish_outside_two_rows_and_columns() {
    for lambda in partitions_up_to(6) {
        for mu in partitions_up_to(6 - lambda.size()) {
            if lambda.part(2) > 0 || mu.conjugate().part(2) > 0 {
                assert_eq!(multiplicity(&lambda, &mu), 0, "{lambda} {mu}");
            }
        }
    }
}

#[test]
fn hilbert_slices_expand_into_multiplicities() {
    let s = sig(2, 2);
    for n in 1..=6 {
        for k in 0..=n {
            let l = n - k;
            let got = cocharacter_from_hilbert(&s, k, l).unwrap();
            for lambda in Partition::all_of(k).into_iter().filter(|p| p.rows() <= 2) {
                for mu in Partition::all_of(l).into_iter().filter(|p| p.rows() <= 2) {
                    let expected = BigInt::from(multiplicity(&lambda, &mu));
                    let actual = got.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_else(BigInt::zero);
                    assert_eq!(actual, expected, "({k},{l}) {lambda} {mu}");
                }
            }
            assert!(got.keys().all(|(a, b)| a.rows() <= 2 && b.rows() <= 2));
        }
    }
}

#[test]
fn three_variables_confirm_the_vanishing() {
    let s = sig(3, 3);
    for n in 1..=4 {
        for k in 0..=n {
            let got = cocharacter_from_hilbert(&s, k, n - k).unwrap();
            for ((lambda, mu), c) in &got {
                assert_eq!(c, &BigInt::from(multiplicity(lambda, mu)), "{lambda} {mu}");
            }
            for lambda in Partition::all_of(k) {
                for mu in Partition::all_of(n - k) {
                    if lambda.rows() <= 3 && mu.rows() <= 3 {
                        let c = got.get(&(lambda.clone(), mu.clone())).cloned().unwrap_or_else(BigInt::zero);
                        assert_eq!(c, BigInt::from(multiplicity(&lambda, &mu)), "{lambda} {mu}");
                    }
                }
            }
        }
    }
}

#[test]
fn characteristic_zero_is_required() {
    let s = Signature::with_field(2, 2, Field::prime(5).unwrap()).unwrap();
    assert!(cocharacter_from_hilbert(&s, 1, 1).is_err());
}

#[test]
fn degrees_weighted_by_multiplicity_give_codimensions() {
    for p in 0..=6 {
        for q in 0..=6 - p {
            if p + q == 0 {
                continue;
            }
            let mut total = BigInt::zero();
            for lambda in Partition::all_of(p) {
                for mu in Partition::all_of(q) {
                    total += BigInt::from(multiplicity(&lambda, &mu)) * count_syt(lambda.parts()) * count_syt(mu.parts());
                }
            }
            assert_eq!(total, codimension(Codimension::Super { p, q }).unwrap(), "({p},{q})");
        }
    }
}

#[test]
fn double_series_reads_off_multiplicities() {
    let table = double_multiplicity_series(6, 6);
    let mut seen = 0;
    for lambda in partitions_up_to(6) {
        for mu in partitions_up_to(6 - lambda.size()) {
            let Some(key) = double_multiplicity_key(&lambda, &mu) else { continue };
            let c = table.get(&key).cloned().unwrap_or_else(BigInt::zero);
            assert_eq!(c, BigInt::from(multiplicity(&lambda, &mu)), "{lambda} {mu}");
            seen += 1;
        }
    }
    assert!(seen > 50);
    // Every nonzero coefficient of total degree <= 6 comes from a pair of shapes.
    for (e, c) in &table {
        if (e[0] + e[1] + e[2] + e[3]) as usize > 6 || c.is_zero() {
            continue;
        }
        assert!(e[0] >= e[1] && e[2] >= e[3], "{e:?} has coefficient {c}");
    }
    assert_eq!(table[&[1, 0, 0, 0]], BigInt::from(1));
    assert_eq!(table[&[1, 0, 1, 0]], BigInt::from(2));
    assert_eq!(table[&[2, 1, 0, 0]], BigInt::from(2));
}
