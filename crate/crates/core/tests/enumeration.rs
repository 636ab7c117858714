mod common;

use std::collections::BTreeSet;

use common::{brute_classes, brute_isomorphic, labeled_trees, unlabeled_tree_counts};
use hyperspec::{
    count_supertrees, degree_sequence, enumerate_classes, enumerate_supertrees,
    independence_number, matching_number, validate_supertree, CanonicalForm, EnumerationQuery,
    Error, Filter, Hypergraph,
};

fn forms(query: &EnumerationQuery) -> BTreeSet<CanonicalForm> {
    enumerate_classes(query)
        .unwrap()
        .into_iter()
        .map(|(f, _)| f)
        .collect()
}

#[test]
fn graph_tree_counts_match_recurrence() {
    let expected = unlabeled_tree_counts(9);
    for m in 1..=8 {
        assert_eq!(
            count_supertrees(m, 2).unwrap() as u64,
            expected[m],
            "m = {m}"
        );
    }
}

#[test]
fn graph_tree_classes_match_labeled_trees() {
    for n in 2..=7 {
        let reps = brute_classes(&labeled_trees(n));
        let ours = enumerate_supertrees(&EnumerationQuery::new(n - 1, 2)).unwrap();
        assert_eq!(reps.len(), ours.len(), "n = {n}");
        for r in &reps {
            assert_eq!(ours.iter().filter(|t| brute_isomorphic(r, t)).count(), 1);
        }
    }
}

/// All k-subset families of size m on m(k−1)+1 labeled vertices that form
/// a supertree.
fn labeled_supertrees(m: usize, k: usize) -> Vec<Hypergraph> {
    let n = m * (k - 1) + 1;
    let subsets: Vec<Vec<usize>> = (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|v| s >> v & 1 == 1).collect())
        .collect();
    let mut out = Vec::new();
    let mut pick = Vec::new();
    choose(&subsets, 0, m, &mut pick, &mut |edges| {
        if let Ok(g) = Hypergraph::new(k, n, edges.to_vec()) {
            if validate_supertree(&g).is_ok() {
                out.push(g);
            }
        }
    });
    out
}

fn choose(
    items: &[Vec<usize>],
    from: usize,
    left: usize,
    pick: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    if left == 0 {
        visit(pick);
        return;
    }
    for i in from..items.len() {
        pick.push(items[i].clone());
        choose(items, i + 1, left - 1, pick, visit);
        pick.pop();
    }
}

#[test]
fn three_uniform_classes_match_labeled_search() {
    for m in 1..=3 {
        let reps = brute_classes(&labeled_supertrees(m, 3));
        let ours = enumerate_supertrees(&EnumerationQuery::new(m, 3)).unwrap();
        assert_eq!(reps.len(), ours.len(), "m = {m}");
        for r in &reps {
            assert_eq!(ours.iter().filter(|t| brute_isomorphic(r, t)).count(), 1);
        }
    }
}

#[test]
fn goldens() {
    assert_eq!(count_supertrees(1, 3).unwrap(), 1);
    assert_eq!(count_supertrees(3, 3).unwrap(), 2);
    assert_eq!(count_supertrees(4, 3).unwrap(), 4);
    assert_eq!(count_supertrees(5, 3).unwrap(), 8);
    assert_eq!(count_supertrees(6, 3).unwrap(), 19);
    assert_eq!(count_supertrees(5, 4).unwrap(), 9);
}

#[test]
fn generation_order_does_not_matter() {
    for k in 2..=4 {
        for m in 1..=5 {
            let q = EnumerationQuery::new(m, k);
            assert_eq!(forms(&q), forms(&q.clone().reversed()), "m={m} k={k}");
        }
    }
}

#[test]
fn output_is_pairwise_distinct_and_sorted() {
    let classes = enumerate_classes(&EnumerationQuery::new(6, 3)).unwrap();
    assert!(classes.windows(2).all(|w| w[0].0 < w[1].0));
    for t in classes.iter().map(|(_, t)| t) {
        assert_eq!(t.n(), 13);
    }
}

#[test]
fn counts_grow_with_m() {
    for k in 2..=4 {
        let counts: Vec<usize> = (1..=5).map(|m| count_supertrees(m, k).unwrap()).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{counts:?}");
    }
}

#[test]
fn filters_are_sound_and_complete() {
    for (m, k) in [(5, 3), (4, 4), (6, 2)] {
        let everything = enumerate_classes(&EnumerationQuery::new(m, k)).unwrap();
        let betas: BTreeSet<usize> = everything
            .iter()
            .map(|(_, t)| independence_number(t).unwrap().beta)
            .collect();
        for b in betas {
            let got = forms(&EnumerationQuery::new(m, k).with_filter(Filter::Beta(b)));
            let want: BTreeSet<CanonicalForm> = everything
                .iter()
                .filter(|(_, t)| independence_number(t).unwrap().beta == b)
                .map(|(f, _)| f.clone())
                .collect();
            assert_eq!(got, want);
        }
        for u in 1..=m {
            let got = forms(&EnumerationQuery::new(m, k).with_filter(Filter::Mu(u)));
            let want: BTreeSet<CanonicalForm> = everything
                .iter()
                .filter(|(_, t)| matching_number(t).unwrap().mu == u)
                .map(|(f, _)| f.clone())
                .collect();
            assert_eq!(got, want);
        }
        for (_, t) in &everything {
            let pi = degree_sequence(t);
            let q = EnumerationQuery::new(m, k)
                .with_filter(Filter::DegreeSequence(pi.entries().to_vec()));
            for s in enumerate_supertrees(&q).unwrap() {
                assert_eq!(degree_sequence(&s), pi);
            }
        }
    }
}

#[test]
fn degree_filter_accepts_unsorted_entries() {
    let sorted = EnumerationQuery::new(4, 3)
        .with_filter(Filter::DegreeSequence(vec![2, 2, 2, 1, 1, 1, 1, 1, 1]));
    let shuffled = EnumerationQuery::new(4, 3)
        .with_filter(Filter::DegreeSequence(vec![1, 2, 1, 1, 2, 1, 1, 2, 1]));
    assert_eq!(forms(&sorted), forms(&shuffled));
    assert!(!forms(&sorted).is_empty());
}

#[test]
fn rejects_bad_queries() {
    assert!(matches!(
        enumerate_supertrees(&EnumerationQuery::new(0, 3)),
        Err(Error::BadParams(_))
    ));
    assert!(matches!(
        enumerate_supertrees(&EnumerationQuery::new(13, 3)),
        Err(Error::InstanceTooLarge(_))
    ));
    assert!(enumerate_supertrees(&EnumerationQuery::new(13, 3).with_guard(27)).is_ok());
}
