//! Library results against independent arithmetic: hand-multiplied structure
//! constants, genuine matrix multiplication, and values worked out by hand on E4.

mod common;

use common::{el, matrix_commutator_counts, reduce, RawTable};
use ringcomm::catalog::{cyclic_ring, e4, full_matrix, triangular, zero_ring};
use ringcomm::commutators::{
    center, centralizer, commutator_image, commutator_subgroup, pr_bruteforce, pr_formula,
    pr_spectrum, solution_set,
};
use ringcomm::{AdditiveGroupShape, Error, ExactProbability, FiniteRing};

fn members(coords: &[&[u32]]) -> Vec<ringcomm::RingElement> {
    let mut v: Vec<_> = coords.iter().map(|c| el(c)).collect();
    v.sort();
    v
}

#[test]
fn e4_products_and_commutators() {
    let r = e4();
    let (a, b) = (el(&[1, 0]), el(&[0, 1]));
    assert_eq!(r.multiply(&a, &b).unwrap(), a);
    assert_eq!(r.multiply(&b, &a).unwrap(), b);
    assert_eq!(r.commutator(&a, &b).unwrap(), el(&[1, 1]));
    for x in r.elements() {
        assert!(r.multiply(&r.zero(), x).unwrap().is_zero());
        assert!(r.multiply(x, &r.zero()).unwrap().is_zero());
        assert!(r.commutator(x, x).unwrap().is_zero());
    }
}

#[test]
fn e4_subgroups() {
    let r = e4();
    let a = el(&[1, 0]);
    assert_eq!(centralizer(&r, &a).unwrap().members(), members(&[&[0, 0], &[1, 0]]));
    assert_eq!(centralizer(&r, &r.zero()).unwrap().len(), 4);
    assert_eq!(center(&r).members(), members(&[&[0, 0]]));
    assert_eq!(commutator_image(&r, &a).unwrap().members(), members(&[&[0, 0], &[1, 1]]));
    assert_eq!(commutator_image(&r, &r.zero()).unwrap().len(), 1);
    assert_eq!(commutator_subgroup(&r).members(), members(&[&[0, 0], &[1, 1]]));
}

#[test]
fn e4_solution_sets() {
    let r = e4();
    let a = el(&[1, 0]);
    let t = solution_set(&r, &a, &el(&[1, 1])).unwrap().unwrap();
    assert_eq!(t.members(), members(&[&[0, 1], &[1, 1]]));
    assert!(solution_set(&r, &a, &a).unwrap().is_none());
    for x in r.elements() {
        let t0 = solution_set(&r, x, &r.zero()).unwrap().unwrap();
        assert_eq!(t0.members(), centralizer(&r, x).unwrap().members());
    }
}

#[test]
fn e4_probabilities_by_hand() {
    // commuting pairs: all 7 involving 0, the 3 diagonal pairs (x, x) with x != 0
    let r = e4();
    let expect = [
        ([0, 0], (10, 16)),
        ([0, 1], (0, 1)),
        ([1, 0], (0, 1)),
        ([1, 1], (6, 16)),
    ];
    for (coords, (num, den)) in expect {
        let p = ExactProbability::new(num, den);
        assert_eq!(pr_bruteforce(&r, &el(&coords)).unwrap(), p);
        assert_eq!(pr_formula(&r, &el(&coords)).unwrap(), p);
    }
}

#[test]
fn small_catalog_facts() {
    assert_eq!(center(&triangular(2, 2).unwrap()).len(), 2);
    assert_eq!(commutator_subgroup(&triangular(3, 2).unwrap()).len(), 3);
    for n in [2, 5, 6] {
        let z = zero_ring(n).unwrap();
        assert_eq!(center(&z).len(), n as usize);
        for x in z.elements() {
            assert_eq!(centralizer(&z, x).unwrap().len(), n as usize);
        }
        let spec = pr_spectrum(&z).unwrap();
        assert_eq!(spec.get(&z.zero()), Some(ExactProbability::one()));
        assert!(spec.entries()[1..].iter().all(|(_, p)| p.is_zero()));
    }
    assert_eq!(pr_bruteforce(&cyclic_ring(6).unwrap(), &el(&[0])).unwrap(), ExactProbability::one());
}

#[test]
fn products_on_raw_tables_agree() {
    let rings = [
        e4(),
        triangular(2, 2).unwrap(),
        triangular(3, 2).unwrap(),
        full_matrix(2, 2).unwrap(),
        e4().direct_product(&triangular(2, 2).unwrap()).unwrap(),
    ];
    for ring in &rings {
        let raw = RawTable::of(ring);
        for x in ring.elements() {
            for y in ring.elements() {
                assert_eq!(ring.multiply(x, y).unwrap().coords(), raw.mul(x.coords(), y.coords()));
            }
        }
    }
}

fn assert_matches_matrix_oracle(ring: &FiniteRing, n: u32, s: usize, upper_only: bool) {
    let counts = matrix_commutator_counts(n, s, upper_only);
    let total = (ring.order() * ring.order()) as u64;
    let spectrum = pr_spectrum(ring).unwrap();
    for (r, p) in spectrum.entries() {
        let hits = counts.get(r.coords()).copied().unwrap_or(0);
        let (num, den) = reduce(hits, total);
        assert_eq!((p.numerator(), p.denominator()), (num, den), "r = {r}");
    }
    assert_eq!(counts.values().sum::<u64>(), total);
}

#[test]
fn matrix_rings_against_matrix_multiplication() {
    assert_matches_matrix_oracle(&triangular(2, 2).unwrap(), 2, 2, true);
    assert_matches_matrix_oracle(&triangular(3, 2).unwrap(), 3, 2, true);
    assert_matches_matrix_oracle(&full_matrix(2, 2).unwrap(), 2, 2, false);
    assert_matches_matrix_oracle(&triangular(2, 3).unwrap(), 2, 3, true);
}

#[test]
fn full_matrix_3_2_against_matrix_multiplication() {
    let ring = full_matrix(3, 2).unwrap();
    assert_eq!(ring.order(), 81);
    assert_matches_matrix_oracle(&ring, 3, 2, false);
}

#[test]
fn raw_table_counts_match_both_routes() {
    let rings = [
        e4(),
        triangular(2, 2).unwrap(),
        triangular(3, 2).unwrap(),
        e4().direct_product(&zero_ring(2).unwrap()).unwrap(),
    ];
    for ring in &rings {
        let raw = RawTable::of(ring);
        for r in ring.elements() {
            let (hits, total) = raw.count(r.coords());
            let expected = ExactProbability::new(hits, total);
            assert_eq!(pr_bruteforce(ring, r).unwrap(), expected);
            assert_eq!(pr_formula(ring, r).unwrap(), expected);
        }
    }
}

/// `x*y = (x1 + x2) y` on `Z2 x Z2` with one constant replaced.
fn perturbed(i: usize, j: usize, value: [u32; 2]) -> (AdditiveGroupShape, Vec<Vec<ringcomm::RingElement>>) {
    let mut constants = vec![vec![el(&[1, 0]), el(&[0, 1])], vec![el(&[1, 0]), el(&[0, 1])]];
    constants[i][j] = el(&value);
    (AdditiveGroupShape::new(vec![2, 2]).unwrap(), constants)
}

#[test]
fn generator_triples_decide_associativity() {
    // validate checks k^3 generator triples; the oracle checks all |R|^3 element triples
    for i in 0..2 {
        for j in 0..2 {
            for value in [[0, 0], [0, 1], [1, 0], [1, 1]] {
                let (shape, constants) = perturbed(i, j, value);
                let raw = RawTable {
                    moduli: vec![2, 2],
                    constants: constants
                        .iter()
                        .map(|row| row.iter().map(|c| c.coords().to_vec()).collect())
                        .collect(),
                };
                let verdict = FiniteRing::validate(shape, constants);
                assert_eq!(verdict.is_ok(), raw.is_associative(), "c{}{} = {value:?}", i + 1, j + 1);
                if let Err(e) = verdict {
                    assert!(matches!(e, Error::AssociativityViolation { .. }), "{e}");
                }
            }
        }
    }
}

#[test]
fn perturbed_e4_names_a_failing_triple() {
    let (shape, constants) = perturbed(0, 0, [0, 0]);
    match FiniteRing::validate(shape, constants) {
        Err(Error::AssociativityViolation { i, j, l, left, right }) => {
            assert_eq!((i, j, l), (0, 0, 1));
            assert_ne!(left, right);
        }
        other => panic!("expected an associativity violation, got {other:?}"),
    }
}

#[test]
fn direct_product_examples() {
    let e = e4();
    let p = e.direct_product(&zero_ring(2).unwrap()).unwrap();
    assert_eq!(p.order(), 8);
    assert_eq!(center(&p).len(), 2 * center(&e).len());

    let ee = e.direct_product(&e).unwrap();
    assert_eq!(pr_bruteforce(&ee, &ee.zero()).unwrap(), ExactProbability::new(25, 64));

    let cc = cyclic_ring(3).unwrap().direct_product(&zero_ring(4).unwrap()).unwrap();
    assert!(cc.is_commutative());

    let t = triangular(2, 2).unwrap();
    let et = e.direct_product(&t).unwrap();
    for x in et.elements() {
        for y in et.elements() {
            let (x1, x2) = FiniteRing::split_at(x, 2);
            let (y1, y2) = FiniteRing::split_at(y, 2);
            let expected = FiniteRing::pair(
                &e.commutator(&x1, &y1).unwrap(),
                &t.commutator(&x2, &y2).unwrap(),
            );
            assert_eq!(et.commutator(x, y).unwrap(), expected);
        }
    }
}

#[test]
fn out_of_range_elements_are_rejected() {
    let r = e4();
    let bad = el(&[2, 0]);
    assert!(matches!(r.multiply(&bad, &r.zero()), Err(Error::ShapeMismatch { .. })));
    assert!(matches!(r.commutator(&el(&[1]), &r.zero()), Err(Error::ShapeMismatch { .. })));
    assert!(centralizer(&r, &bad).is_err());
    assert!(pr_bruteforce(&r, &bad).is_err());
}

#[test]
fn threaded_enumeration_matches_sequential_oracle() {
    // order 128, above the threshold where enumeration is split across threads
    let ring = e4()
        .direct_product(&triangular(2, 2).unwrap())
        .unwrap()
        .direct_product(&common::e4_opposite())
        .unwrap();
    assert_eq!(ring.order(), 128);
    let histogram = RawTable::of(&ring).histogram();
    let total = (ring.order() * ring.order()) as u64;
    let brute = ringcomm::commutators::pr_spectrum_bruteforce(&ring).unwrap();
    let formula = pr_spectrum(&ring).unwrap();
    assert_eq!(brute, formula);
    for (r, p) in brute.entries() {
        let hits = histogram.get(r.coords()).copied().unwrap_or(0);
        assert_eq!(*p, ExactProbability::new(hits, total), "r = {r}");
    }
    for r in [ring.zero(), el(&[1, 1, 0, 1, 0, 0, 0])] {
        assert_eq!(pr_bruteforce(&ring, &r).unwrap(), brute.get(&r).unwrap());
    }
    let g = ringcomm::graph::build_graph(&ring, &ring.zero()).unwrap();
    let counts = ringcomm::graph::edge_counts(&ring).unwrap();
    assert_eq!(g.edge_count() as u64, counts[0]);
}
