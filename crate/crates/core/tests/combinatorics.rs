mod common;

use common::{naive_beta, naive_mu, permutations, random_supertree};
use hyperspec::{
    are_isomorphic, beta_range, bfs_supertree, check_bfs_ordering, degree_sequence,
    enumerate_supertrees, find_bfs_ordering, independence_number, matching_number, mu_range,
    pendant_friendly_mis, EnumerationQuery, Supertree,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all(m: usize, k: usize) -> Vec<Supertree> {
    enumerate_supertrees(&EnumerationQuery::new(m, k)).unwrap()
}

#[test]
fn exact_solvers_match_subset_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..150 {
        let k = rng.gen_range(2..=4);
        let m = rng.gen_range(1..=11 / (k - 1));
        let t = random_supertree(m, k, &mut rng);
        assert!(t.n() <= 12);
        let b = independence_number(&t).unwrap();
        let u = matching_number(&t).unwrap();
        assert_eq!(b.beta, naive_beta(&t), "{t:?}");
        assert_eq!(u.mu, naive_mu(&t), "{t:?}");

        assert_eq!(b.witness.len(), b.beta);
        for e in t.edges() {
            assert!(e.iter().filter(|v| b.witness.contains(v)).count() <= 1);
        }
        assert_eq!(u.witness.len(), u.mu);
        let mut covered = vec![false; t.n()];
        for &i in &u.witness {
            for &v in &t.edges()[i] {
                assert!(!std::mem::replace(&mut covered[v], true));
            }
        }
    }
}

#[test]
fn bounds_and_pendent_witnesses_on_all_small_supertrees() {
    for k in 2..=4 {
        for m in 1..=5 {
            let (beta_lo, _) = beta_range(m, k);
            let (_, mu_hi) = mu_range(m, k);
            for t in all(m, k) {
                let beta = independence_number(&t).unwrap().beta;
                assert!(beta >= beta_lo);
                assert!(matching_number(&t).unwrap().mu <= mu_hi);

                let friendly = pendant_friendly_mis(&t).unwrap();
                assert_eq!(friendly.beta, beta, "{t:?}");
                for e in t.pendent_edges() {
                    let pendent = t.pendent_vertices_of(e);
                    assert!(friendly.witness.iter().any(|v| pendent.contains(v)));
                }
            }
        }
    }
}

/// Whether any vertex permutation is a BFS-ordering, by exhaustion.
fn has_bfs_ordering_brute(t: &Supertree) -> bool {
    let vertices: Vec<usize> = (0..t.n()).collect();
    permutations(&vertices)
        .iter()
        .any(|order| check_bfs_ordering(t, order).unwrap().is_bfs())
}

#[test]
fn bfs_search_matches_exhaustion() {
    let mut seen_none = false;
    for (m, k) in [(1, 3), (2, 3), (3, 3), (3, 2), (4, 2), (5, 2), (6, 2)] {
        for t in all(m, k) {
            let found = find_bfs_ordering(&t).unwrap();
            assert_eq!(found.is_some(), has_bfs_ordering_brute(&t), "{t:?}");
            seen_none |= found.is_none();
        }
    }
    assert!(seen_none);
}

#[test]
fn bfs_supertrees_are_exactly_g_pi() {
    for (m_max, k) in [(7, 2), (5, 3), (4, 4)] {
        for m in 1..=m_max {
            for t in all(m, k) {
                let g_pi = bfs_supertree(&degree_sequence(&t)).unwrap();
                let has = find_bfs_ordering(&t).unwrap().is_some();
                assert_eq!(has, are_isomorphic(&t, &g_pi), "{t:?}");
            }
        }
    }
}
