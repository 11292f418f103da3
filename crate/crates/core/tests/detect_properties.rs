use f5_core::detect::{
    audit_link_facts, find_f5, find_k4_minus, is_cancellative, link_restriction_bound, EDGE_LINKS_DISJOINT,
    LINK_TRIANGLE_FREE,
};
use f5_core::{ThreeGraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::{
    bernoulli, cancellative_by_definition, f5_free_by_definition, grow, k4_minus_free_by_definition,
};

/// A mixed corpus on at most eight vertices: unconstrained samples next to
/// greedily grown cancellative and F5-free instances.
fn corpus(count: usize, seed: u64) -> Vec<ThreeGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(4..=8);
            match i % 3 {
                0 => {
                    let p = rng.gen_range(0.0..0.5);
                    bernoulli(n, p, &mut rng)
                }
                1 => grow(n, &mut rng, cancellative_by_definition),
                _ => grow(n, &mut rng, f5_free_by_definition),
            }
        })
        .collect()
}

#[test]
fn cancellative_iff_both_patterns_absent() {
    for (i, h) in corpus(1000, 1).iter().enumerate() {
        let f5 = find_f5(h);
        let k4 = find_k4_minus(h);
        assert_eq!(is_cancellative(h), f5.is_none() && k4.is_none(), "instance {i}");
        assert_eq!(is_cancellative(h), cancellative_by_definition(h.edges()), "instance {i}");
        assert_eq!(f5.is_none(), f5_free_by_definition(h.edges()), "instance {i}");
        assert_eq!(k4.is_none(), k4_minus_free_by_definition(h), "instance {i}");
        if let Some(w) = f5 {
            assert!(w.validate_three(h), "instance {i}");
        }
        if let Some(w) = k4 {
            assert!(w.validate_three(h), "instance {i}");
        }
    }
}

#[test]
fn link_facts_hold_exactly_where_presupposed() {
    for (i, h) in corpus(600, 2).iter().enumerate() {
        let audit = audit_link_facts(h);
        for fact in &audit.facts {
            assert_eq!(fact.holds, fact.violations.is_empty());
            assert!(fact.violations.iter().all(|w| w.validate_three(h)), "instance {i}");
        }
        let f5_free = f5_free_by_definition(h.edges());
        let k4_free = k4_minus_free_by_definition(h);
        if f5_free && k4_free {
            assert!(audit.holds, "instance {i}: {audit:?}");
        }
        if f5_free {
            assert!(audit.facts.iter().filter(|f| f.fact.starts_with("edge-")).all(|f| f.holds));
        } else {
            assert!(!audit.fact(EDGE_LINKS_DISJOINT).unwrap().holds, "instance {i}");
        }
        if !k4_free {
            assert!(!audit.fact(LINK_TRIANGLE_FREE).unwrap().holds, "instance {i}");
        }
    }
}

#[test]
fn restricted_link_bound_on_cancellative_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let hosts: Vec<ThreeGraph> = corpus(120, 4)
        .into_iter()
        .filter(|h| cancellative_by_definition(h.edges()))
        .collect();
    assert!(hosts.len() >= 40);
    for h in &hosts {
        for v in 0..h.n() {
            for _ in 0..200 {
                let members: Vec<usize> = (0..h.n()).filter(|_| rng.gen_bool(0.5)).collect();
                let s = VertexSet::from_vertices(h.n(), &members).unwrap();
                let b = link_restriction_bound(h, v, &s).unwrap();
                assert!(b.holds(), "{h:?} v={v} S={members:?}: {b:?}");
            }
        }
    }
}
