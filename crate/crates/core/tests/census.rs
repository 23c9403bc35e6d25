use std::collections::HashSet;

use hvg::enumerate::{
    catalan, degree_census, enumerate_all_bijective, enumerate_all_bruteforce,
    enumerate_all_bruteforce_with, enumerate_distinct_bijective, enumerate_distinct_bruteforce,
    enumerate_distinct_bruteforce_with, schroder_large, schroder_little, Census,
};
use hvg::{
    build_naive, from_degree_sequence, is_distinct_realizable, psi, psi_inv, standard_sequence,
    toggle_top_edge, xi, xi_inv, Bracketing, Graph, ParenString,
};

fn all(n: usize) -> Census {
    enumerate_all_bruteforce(n).unwrap()
}

fn distinct(n: usize) -> Census {
    enumerate_distinct_bruteforce(n).unwrap()
}

fn check_structure(g: &Graph) {
    let n = g.n();
    assert!(g.is_non_crossing(), "{g}");
    let nn = g.non_nested();
    assert_eq!(nn[0], 1);
    assert_eq!(*nn.last().unwrap(), n);
    let nn_set: HashSet<usize> = nn.iter().copied().collect();
    for &l in &nn[..nn.len() - 1] {
        if let Ok(m) = g.max_neighbor(l) {
            assert!(nn_set.contains(&m), "max neighbor of {l} nested in {g}");
        }
    }
    // consecutive non-nested vertices are adjacent, others are not
    for (a, &x) in nn.iter().enumerate() {
        for (b, &y) in nn.iter().enumerate().skip(a + 1) {
            assert_eq!(g.has_edge(x, y), b == a + 1, "{x}-{y} in {g}");
        }
    }
    let mut acc = Graph::path(1).unwrap();
    for w in nn.windows(2) {
        let part = g.induced_interval(w[0], w[1]).unwrap();
        assert!(part.is_hvg());
        acc = acc.one_sum(&part);
    }
    assert_eq!(&acc, g);
    if n >= 2 {
        assert!(g.edge_count() <= 2 * n - 3);
    }
}

#[test]
fn census_sizes_match_sequences() {
    for n in 1..=8 {
        assert_eq!(
            distinct(n).len().to_string(),
            catalan(n - 1).to_string(),
            "n={n}"
        );
    }
    for n in 2..=8 {
        assert_eq!(
            all(n).len().to_string(),
            schroder_large(n - 2).to_string(),
            "n={n}"
        );
    }
    assert_eq!(all(4).len(), 6);
    assert_eq!(all(7).len(), 394);
    assert_eq!(enumerate_distinct_bijective(10).unwrap().len(), 4862);
}

#[test]
fn strategies_agree() {
    for n in 1..=8 {
        assert!(distinct(n).same_graphs(&enumerate_distinct_bijective(n).unwrap()));
    }
    for n in 2..=8 {
        assert!(all(n).same_graphs(&enumerate_all_bijective(n).unwrap()));
    }
    assert!(distinct(9).same_graphs(&enumerate_distinct_bijective(9).unwrap()));
}

#[test]
fn worker_count_does_not_change_output() {
    let base = all(6);
    for w in [1, 2, 3, 7] {
        assert_eq!(
            enumerate_all_bruteforce_with(6, Some(w)).unwrap().graphs,
            base.graphs
        );
    }
    let base = distinct(7);
    for w in [1, 4] {
        assert_eq!(
            enumerate_distinct_bruteforce_with(7, Some(w))
                .unwrap()
                .graphs,
            base.graphs
        );
    }
}

#[test]
fn structure_holds_over_censuses() {
    for n in 1..=7 {
        for g in &all(n) {
            check_structure(g);
        }
        for g in &distinct(n) {
            check_structure(g);
        }
    }
}

#[test]
fn is_hvg_accepts_exactly_the_census() {
    // every graph on 5 vertices containing the path
    let n = 5;
    let extra: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 2..=n).map(move |j| (i, j)))
        .collect();
    let census: HashSet<Graph> = all(n).graphs.into_iter().collect();
    let mut accepted = 0;
    for mask in 0u32..(1 << extra.len()) {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.extend(
            (0..extra.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| extra[k]),
        );
        let g = Graph::new(n, edges).unwrap();
        assert_eq!(g.is_hvg(), census.contains(&g), "{g}");
        accepted += usize::from(g.is_hvg());
    }
    assert_eq!(accepted, census.len());
}

#[test]
fn edge_operations_stay_in_class() {
    for n in 2..=7 {
        for g in &all(n) {
            for &(i, j) in g.edges() {
                if j > i + 1 {
                    assert!(g.remove_edge((i, j)).unwrap().is_hvg());
                }
            }
            let nn = g.non_nested();
            for (a, &x) in nn.iter().enumerate() {
                for &y in &nn[a + 1..] {
                    if !g.has_edge(x, y) {
                        assert!(g.add_edge_non_nested(x, y).unwrap().is_hvg());
                    }
                }
            }
        }
    }
}

#[test]
fn realizations_over_censuses() {
    for n in 1..=8 {
        for g in &all(n) {
            assert_eq!(&build_naive(&hvg::nesting_realization(g)).unwrap(), g);
        }
        let d = distinct(n);
        for g in &d {
            let s = standard_sequence(g).unwrap();
            assert_eq!(&build_naive(&s).unwrap(), g);
            assert_eq!(s[n - 1], n - g.non_nested().len() + 1);
        }
        let realizable = all(n)
            .iter()
            .filter(|g| is_distinct_realizable(g).unwrap())
            .count();
        assert_eq!(realizable, d.len(), "n={n}");
    }
    let g4 = all(4);
    assert_eq!(
        g4.iter()
            .filter(|g| is_distinct_realizable(g).unwrap())
            .count(),
        5
    );
}

#[test]
fn degree_sequences_over_censuses() {
    for n in 1..=8 {
        let d = distinct(n);
        let mut seen = HashSet::new();
        for g in &d {
            let ds = g.degree_sequence();
            assert_eq!(&from_degree_sequence(&ds).unwrap(), g);
            assert!(seen.insert(ds), "degree sequence repeated at n={n}");
        }
    }
    for n in 1..=6 {
        let dc = degree_census(n).unwrap();
        assert_eq!(dc.graphs, dc.degree_sequences, "n={n}");
    }
    let dc = degree_census(7).unwrap();
    assert_eq!((dc.graphs, dc.degree_sequences), (394, 391));
}

#[test]
fn inner_two_and_removal() {
    for n in 3..=8 {
        let census: HashSet<Graph> = distinct(n - 1).graphs.into_iter().collect();
        for g in &distinct(n) {
            let deg = g.degree_sequence().into_inner();
            let removable: Vec<usize> = (2..n)
                .filter(|&i| deg[i - 1] == 2 && g.has_edge(i - 1, i + 1))
                .collect();
            if *g != Graph::path(n).unwrap() {
                assert!(!removable.is_empty(), "no removable inner 2 in {g}");
            }
            for i in removable {
                let h = g.delete_vertex(i).unwrap();
                assert!(census.contains(&h), "deleting {i} from {g} gives {h}");
            }
        }
    }
}

fn max_neighbor_of_one(g: &Graph) -> usize {
    g.max_neighbor(1).unwrap()
}

#[test]
fn splitting_counts() {
    for n in 2..=8 {
        let d = distinct(n);
        let top = d.iter().filter(|g| max_neighbor_of_one(g) == n).count();
        assert_eq!(top.to_string(), catalan(n - 2).to_string(), "n={n}");
        for s in 2..=n {
            let lhs = d.iter().filter(|g| max_neighbor_of_one(g) == s).count();
            let tops = distinct(s)
                .iter()
                .filter(|g| max_neighbor_of_one(g) == s)
                .count();
            let rest: usize = catalan(n - s).to_string().parse().unwrap();
            assert_eq!(lhs, tops * rest, "n={n} s={s}");
        }
    }
}

#[test]
fn neighbors_of_top_vertex() {
    for s in 3..=8 {
        for g in distinct(s).iter().filter(|g| max_neighbor_of_one(g) == s) {
            let left = g.induced_interval(1, s - 1).unwrap();
            assert_eq!(g.neighbors(s), left.non_nested(), "{g}");
        }
    }
    let c4 = build_naive(&[3, 1, 1, 4]).unwrap();
    assert_eq!(c4.neighbors(4), vec![1, 3]);
    assert_eq!(
        c4.induced_interval(1, 3).unwrap().non_nested(),
        vec![1, 2, 3]
    );
}

#[test]
fn psi_is_a_bijection() {
    for n in 1..=8 {
        let words: HashSet<ParenString> = distinct(n).iter().map(|g| psi(g).unwrap()).collect();
        assert_eq!(words.len(), distinct(n).len());
        let all_words: HashSet<ParenString> = ParenString::all(n - 1).into_iter().collect();
        assert_eq!(words, all_words);
        for w in &all_words {
            assert_eq!(&psi(&psi_inv(w)).unwrap(), w);
        }
    }
}

#[test]
fn xi_is_a_bijection() {
    for len in 1..=7 {
        let n = len + 1;
        let targets: Vec<Graph> = all(n)
            .graphs
            .into_iter()
            .filter(|g| n == 2 || !g.has_edge(1, n))
            .collect();
        let bs = Bracketing::all(len);
        assert_eq!(bs.len().to_string(), schroder_little(len - 1).to_string());
        let images: HashSet<Graph> = bs.iter().map(xi).collect();
        assert_eq!(images.len(), bs.len());
        assert_eq!(images, targets.iter().cloned().collect());
        for b in &bs {
            assert_eq!(&xi_inv(&xi(b)).unwrap(), b);
            assert_eq!(&Bracketing::parse(&b.to_string()).unwrap(), b);
        }
        for g in &targets {
            assert_eq!(&xi(&xi_inv(g).unwrap()), g);
        }
    }
}

#[test]
fn toggle_is_an_involution() {
    for n in 3..=7 {
        let census: HashSet<Graph> = all(n).graphs.into_iter().collect();
        let with_top = census.iter().filter(|g| g.has_edge(1, n)).count();
        assert_eq!(with_top.to_string(), schroder_little(n - 2).to_string());
        assert_eq!(with_top * 2, census.len());
        for g in &census {
            let t = toggle_top_edge(g).unwrap();
            assert!(census.contains(&t));
            assert_ne!(t.has_edge(1, n), g.has_edge(1, n));
            assert_eq!(&toggle_top_edge(&t).unwrap(), g);
        }
        if n == 7 {
            assert_eq!(with_top, 197);
        }
    }
    assert!(toggle_top_edge(&Graph::path(2).unwrap()).is_err());
}
