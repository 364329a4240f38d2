use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use ringgraph_core::aut::isomorphism;
use ringgraph_core::{decompose_local, euler_phi, make_ring, FiniteRing, RingError, RingExpr};

fn ring(expr: RingExpr) -> Arc<FiniteRing> {
    make_ring(&expr).unwrap()
}

fn z5x2() -> Arc<FiniteRing> {
    ring(RingExpr::poly_quot(5, vec![0, 0, 1]))
}

fn names(r: &FiniteRing, xs: &[usize]) -> BTreeSet<String> {
    xs.iter().map(|&x| r.name(x).to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

/// Independent model of Z_5[X]/(X^2): pairs (a, b) = a + bX.
fn z5x2_oracle() -> (usize, BTreeSet<String>) {
    let mut units = 0;
    let mut nilpotent = BTreeSet::new();
    for a in 0..5u32 {
        for b in 0..5u32 {
            let has_inverse =
                (0..5u32).any(|c| (0..5u32).any(|d| (a * c) % 5 == 1 && (a * d + b * c) % 5 == 0));
            if has_inverse {
                units += 1;
            }
            // (a + bX)^k = a^k + k a^(k-1) b X; nilpotent iff a = 0
            let mut pa = (a, b);
            let mut nil = false;
            for _ in 0..25 {
                if pa == (0, 0) {
                    nil = true;
                    break;
                }
                pa = ((pa.0 * a) % 5, (pa.0 * b + pa.1 * a) % 5);
            }
            if nil {
                nilpotent.insert(match (a, b) {
                    (0, 0) => "0".to_string(),
                    (0, 1) => "x".to_string(),
                    (0, b) => format!("{b}x"),
                    _ => unreachable!(),
                });
            }
        }
    }
    (units, nilpotent)
}

#[test]
fn make_ring_examples() {
    let z6 = ring(RingExpr::zn(6));
    assert_eq!(z6.order(), 6);
    assert_eq!(z6.characteristic(), 6);
    assert_eq!(z6.units(), &[1, 5]);

    let f4 = ring(RingExpr::gf(4).unwrap());
    assert_eq!(
        (f4.order(), f4.characteristic(), f4.units().len()),
        (4, 2, 3)
    );
    assert!(f4.is_field());

    let r = z5x2();
    let (units, nil) = z5x2_oracle();
    assert_eq!(r.order(), 25);
    assert_eq!(r.units().len(), units);
    assert_eq!(units, 20);
    assert_eq!(names(&r, r.nilpotents()), nil);
    assert_eq!(nil, set(&["0", "x", "2x", "3x", "4x"]));
}

#[test]
fn make_ring_errors() {
    let reducible = RingExpr::Gf {
        p: 2,
        e: 2,
        modulus: vec![1, 0, 1],
    };
    assert!(matches!(
        make_ring(&reducible),
        Err(RingError::InvalidModulus(_))
    ));
    assert!(matches!(
        make_ring(&RingExpr::zn(5000)),
        Err(RingError::OrderLimitExceeded { .. })
    ));
    assert!(matches!(
        make_ring(&RingExpr::prod(vec![RingExpr::zn(64), RingExpr::zn(65)])),
        Err(RingError::OrderLimitExceeded { .. })
    ));
}

#[test]
fn arithmetic() {
    let z7 = ring(RingExpr::zn(7));
    assert_eq!(z7.add(3, 5), 1);
    assert_eq!(z7.pow(3, 0), 1);
    assert_eq!(z7.pow(3, 6), 1);
    assert_eq!(z7.neg(3), 4);
    assert!(matches!(
        z7.try_add(3, 7),
        Err(RingError::IndexOutOfRange { index: 7, order: 7 })
    ));
    assert!(z7.try_pow(9, 1).is_err());

    let r = z5x2();
    let x = r.index_of("x").unwrap();
    assert_eq!(r.mul(x, x), r.zero());
    assert_eq!(r.name(r.add(x, r.one())), "1+x");
}

#[test]
fn element_names_are_canonical() {
    let f8 = ring(RingExpr::gf(8).unwrap());
    assert_eq!(f8.element_names()[..4], ["0", "1", "x", "1+x"]);
    assert_eq!(f8.name(7), "1+x+x^2");
    let sz = ring(RingExpr::square_zero(RingExpr::zn(3), 2));
    assert_eq!(sz.order(), 27);
    assert!(sz.index_of("1+2x1+x2").is_some());
    let prod = ring(RingExpr::prod(vec![RingExpr::zn(2), RingExpr::zn(3)]));
    assert_eq!(
        prod.element_names(),
        &["(0,0)", "(0,1)", "(0,2)", "(1,0)", "(1,1)", "(1,2)"]
    );
    assert_eq!(prod.one(), prod.index_of("(1,1)").unwrap());
}

#[test]
fn local_structure_examples() {
    let z4 = ring(RingExpr::zn(4));
    let ls = z4.local_structure();
    assert!(ls.is_local);
    assert_eq!(ls.maximal_ideal, Some(vec![0, 2]));
    assert_eq!(ls.residue_field_order, Some(2));

    assert!(!ring(RingExpr::zn(6)).local_structure().is_local);

    let r = z5x2();
    let ls = r.local_structure();
    let non_units = r.elements().filter(|&x| !r.is_unit(x)).count();
    assert!(ls.is_local);
    assert_eq!(ls.maximal_ideal.unwrap().len(), non_units);
    assert_eq!(non_units, 5);
    assert_eq!(ls.residue_field_order, Some(5));

    // every element of M is nilpotent
    for expr in [
        RingExpr::zn(8),
        RingExpr::poly_quot(2, vec![0, 0, 0, 1]),
        RingExpr::zn(27),
    ] {
        let r = ring(expr);
        let m = r.maximal_ideal().unwrap();
        assert!(m.iter().all(|x| r.nilpotents().contains(x)));
    }
}

#[test]
fn idempotents_annihilators_socle() {
    assert_eq!(ring(RingExpr::zn(4)).idempotents(), vec![0, 1]);
    assert_eq!(ring(RingExpr::zn(6)).idempotents(), vec![0, 1, 3, 4]);
    assert_eq!(ring(RingExpr::gf(9).unwrap()).idempotents(), vec![0, 1]);

    let z8 = ring(RingExpr::zn(8));
    assert_eq!(z8.annihilator(2), vec![0, 4]);
    assert_eq!(z8.annihilator(0).len(), 8);
    let r = z5x2();
    let x = r.index_of("x").unwrap();
    assert_eq!(
        names(&r, &r.annihilator(x)),
        set(&["0", "x", "2x", "3x", "4x"])
    );

    assert_eq!(z8.socle().unwrap(), vec![0, 4]);
    let f8 = ring(RingExpr::gf(8).unwrap());
    assert_eq!(f8.socle().unwrap().len(), 8);
    let sz = ring(RingExpr::square_zero(RingExpr::zn(2), 2));
    assert_eq!(
        names(&sz, &sz.socle().unwrap()),
        set(&["0", "x1", "x2", "x1+x2"])
    );
    assert_eq!(ring(RingExpr::zn(6)).socle(), Err(RingError::NotLocal));
}

#[test]
fn decompose_examples() {
    let z12 = ring(RingExpr::zn(12));
    let (factors, map) = decompose_local(&z12);
    assert_eq!(
        factors.iter().map(|f| f.order()).collect::<Vec<_>>(),
        vec![3, 4]
    );
    assert!(isomorphism(&factors[0], &ring(RingExpr::zn(3)))
        .unwrap()
        .is_some());
    assert!(isomorphism(&factors[1], &ring(RingExpr::zn(4)))
        .unwrap()
        .is_some());
    assert!(map.is_isomorphism());

    let z8 = ring(RingExpr::zn(8));
    let (factors, map) = decompose_local(&z8);
    assert_eq!(factors.len(), 1);
    assert_eq!(factors[0].order(), 8);
    assert!(map.is_isomorphism());

    let p = ring(RingExpr::prod(vec![
        RingExpr::gf(4).unwrap(),
        RingExpr::zn(9),
    ]));
    assert_eq!(p.primitive_idempotents().len(), 2);
    let (factors, map) = decompose_local(&p);
    assert_eq!(
        factors.iter().map(|f| f.order()).collect::<Vec<_>>(),
        vec![4, 9]
    );
    assert!(factors.iter().all(|f| f.is_local()));
    assert!(map.is_isomorphism());
}

#[test]
fn euler_phi_examples_and_units_of_zn() {
    assert_eq!(euler_phi(9), 6);
    assert_eq!(euler_phi(1), 1);
    assert_eq!(euler_phi(15), 8);
    for n in 1..=200u64 {
        let r = ring(RingExpr::zn(n));
        assert_eq!(r.units().len() as u64, euler_phi(n), "Z{n}");
    }
}

#[test]
fn units_of_prime_power_cyclic_rings() {
    for p in [2u64, 3, 5, 7] {
        for n in 1..=3u32 {
            let r = ring(RingExpr::zn(p.pow(n)));
            assert_eq!(r.units().len() as u64, p.pow(n - 1) * (p - 1));
        }
    }
}

#[test]
fn fingerprint_examples() {
    let z4 = ring(RingExpr::zn(4));
    assert_eq!(z4.element_fingerprint(0), z4.element_fingerprint(0));
    assert_eq!(z4.element_fingerprint(1).multiplicative_order, 1);
    assert_eq!(z4.element_fingerprint(3).multiplicative_order, 2);
    assert_ne!(z4.element_fingerprint(1), z4.element_fingerprint(3));

    let r = z5x2();
    let fps: BTreeSet<_> = ["x", "2x", "3x", "4x"]
        .iter()
        .map(|n| r.element_fingerprint(r.index_of(n).unwrap()))
        .collect();
    assert_eq!(fps.len(), 1);
}

#[test]
fn generating_set_examples() {
    assert!(ring(RingExpr::zn(12)).generating_set().is_empty());
    let r = z5x2();
    assert_eq!(r.generating_set(), vec![r.index_of("x").unwrap()]);
    assert_eq!(ring(RingExpr::gf(4).unwrap()).generating_set().len(), 1);
    let sz = ring(RingExpr::square_zero(RingExpr::zn(2), 3));
    let gens = sz.generating_set();
    assert_eq!(gens.len(), 3);
    assert!(sz.subring_generated_by(&gens).iter().all(|&b| b));
}

#[test]
fn crt_isomorphisms() {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    for m in 2..=30u64 {
        for n in m + 1..=30u64 {
            if gcd(m, n) != 1 {
                continue;
            }
            let a = ring(RingExpr::zn(m * n));
            let b = ring(RingExpr::prod(vec![RingExpr::zn(m), RingExpr::zn(n)]));
            assert!(
                isomorphism(&a, &b).unwrap().is_some(),
                "Z{} vs Z{m} x Z{n}",
                m * n
            );
        }
    }
}

#[test]
fn ring_axioms_hold_for_constructed_rings() {
    let exprs = vec![
        RingExpr::zn(1),
        RingExpr::zn(12),
        RingExpr::gf(8).unwrap(),
        RingExpr::gf(9).unwrap(),
        RingExpr::poly_quot(4, vec![1, 1, 1]),
        RingExpr::poly_quot(6, vec![2, 0, 3, 1]),
        RingExpr::poly_quot(2, vec![0, 0, 0, 0, 1]),
        RingExpr::square_zero(RingExpr::gf(4).unwrap(), 2),
        RingExpr::square_zero(RingExpr::zn(6), 1),
        RingExpr::prod(vec![
            RingExpr::zn(4),
            RingExpr::gf(4).unwrap(),
            RingExpr::zn(3),
        ]),
    ];
    for e in exprs {
        let r = ring(e.clone());
        assert!(r.order() <= 256);
        r.check_axioms().unwrap_or_else(|err| panic!("{e}: {err}"));
        assert!(r.units().contains(&r.one()));
        assert!(r.nilpotents().contains(&r.zero()));
        assert_eq!(r.prime_subring().len(), r.characteristic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn poly_quotients_satisfy_ring_axioms(
        n in 2u64..7,
        tail in proptest::collection::vec(0u64..7, 1..3),
    ) {
        let mut modulus: Vec<u64> = tail.iter().map(|c| c % n).collect();
        modulus.push(1);
        let r = ring(RingExpr::poly_quot(n, modulus));
        prop_assert!(r.check_axioms().is_ok());
        prop_assert_eq!(r.prime_subring().len(), r.characteristic());
    }

    #[test]
    fn pow_is_a_monoid_homomorphism(x in 0usize..49, a in 0u64..20, b in 0u64..20) {
        let r = ring(RingExpr::poly_quot(7, vec![3, 0, 1]));
        prop_assert_eq!(r.pow(x, a + b), r.mul(r.pow(x, a), r.pow(x, b)));
    }
}
