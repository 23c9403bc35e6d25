//! One line per acceptance criterion. Run with
//! `cargo test --test acceptance -- --nocapture` to see the report.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hvg::cli::{random_walk, vg_census};
use hvg::enumerate::{
    catalan, catalan_identity_check, degree_census, enumerate_all_bijective,
    enumerate_all_bruteforce, enumerate_distinct_bijective, enumerate_distinct_bruteforce,
    schroder_large, Census,
};
use hvg::{
    build_fast, build_naive, from_degree_sequence, nesting_realization, psi, standard_sequence, xi,
    Bracketing, Graph,
};

struct Report {
    failures: Vec<usize>,
}

impl Report {
    fn record(&mut self, id: usize, soft: bool, pass: bool, detail: String) {
        let status = if pass { "PASS" } else { "FAIL" };
        let kind = if soft { " (soft)" } else { "" };
        println!("criterion {id:>2}{kind}: {status} - {detail}");
        if !pass && !soft {
            self.failures.push(id);
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn edge_set(g: &Graph) -> HashSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

fn structural(g: &Graph) -> bool {
    let n = g.n();
    let nn = g.non_nested();
    let nn_set: HashSet<usize> = nn.iter().copied().collect();
    let ends = nn.first() == Some(&1) && nn.last() == Some(&n);
    let max_nb = nn[..nn.len() - 1]
        .iter()
        .all(|&l| g.max_neighbor(l).map_or(true, |m| nn_set.contains(&m)));
    let path_prop = nn.iter().enumerate().all(|(a, &x)| {
        nn.iter()
            .enumerate()
            .skip(a + 1)
            .all(|(b, &y)| g.has_edge(x, y) == (b == a + 1))
    });
    let mut acc = Graph::path(1).unwrap();
    for w in nn.windows(2) {
        acc = acc.one_sum(&g.induced_interval(w[0], w[1]).unwrap());
    }
    g.is_non_crossing() && ends && max_nb && path_prop && acc == *g
}

#[test]
fn acceptance() {
    let mut r = Report {
        failures: Vec::new(),
    };

    // 1
    let (distinct, t1): (Vec<Census>, _) = timed(|| {
        (1..=8)
            .map(|n| enumerate_distinct_bruteforce(n).unwrap())
            .collect()
    });
    let counts: Vec<usize> = distinct.iter().map(Census::len).collect();
    r.record(
        1,
        false,
        counts == [1, 1, 2, 5, 14, 42, 132, 429] && t1 < Duration::from_secs(60),
        format!("distinct counts {counts:?} in {:.2?}", t1),
    );

    // 2
    let (all, t2): (Vec<Census>, _) = timed(|| {
        (2..=8)
            .map(|n| enumerate_all_bruteforce(n).unwrap())
            .collect()
    });
    let counts: Vec<usize> = all.iter().map(Census::len).collect();
    let expected: Vec<usize> = (0..=6)
        .map(|m| schroder_large(m).to_string().parse().unwrap())
        .collect();
    r.record(
        2,
        false,
        counts == expected
            && counts == [1, 2, 6, 22, 90, 394, 1806]
            && t2 < Duration::from_secs(300),
        format!("all counts {counts:?} for N=2..8 in {:.2?}", t2),
    );
    let all_of = |n: usize| &all[n - 2];
    let distinct_of = |n: usize| &distinct[n - 1];

    // 3
    let same_distinct = (1..=8).all(|n| {
        enumerate_distinct_bijective(n)
            .unwrap()
            .same_graphs(distinct_of(n))
    });
    let same_all = (2..=8).all(|n| enumerate_all_bijective(n).unwrap().same_graphs(all_of(n)));
    r.record(
        3,
        false,
        same_distinct && same_all,
        format!("bijective = brute force: distinct {same_distinct}, all {same_all} (N <= 8)"),
    );

    // 4
    let round_trip = (1..=8).all(|n| {
        distinct_of(n)
            .iter()
            .all(|g| from_degree_sequence(&g.degree_sequence()).as_ref() == Ok(g))
    });
    let g232522 =
        from_degree_sequence(&hvg::DegreeSequence::new(vec![2, 3, 2, 5, 2, 2]).unwrap()).unwrap();
    let reconstructed_ok = edge_set(&g232522)
        == [
            (1, 2),
            (2, 3),
            (3, 4),
            (2, 4),
            (4, 5),
            (5, 6),
            (1, 4),
            (4, 6),
        ]
        .into_iter()
        .collect();
    r.record(
        4,
        false,
        round_trip && reconstructed_ok,
        format!(
            "degree round trip N <= 8: {round_trip}; (2,3,2,5,2,2) edge set: {reconstructed_ok}"
        ),
    );

    // 5
    let dc7 = degree_census(7).unwrap();
    let small_equal = (1..=6).all(|n| {
        let dc = degree_census(n).unwrap();
        dc.graphs == dc.degree_sequences
    });
    r.record(
        5,
        false,
        (dc7.graphs, dc7.degree_sequences) == (394, 391) && small_equal,
        format!(
            "N=7: {} graphs, {} degree sequences; equal for N <= 6: {small_equal}",
            dc7.graphs, dc7.degree_sequences
        ),
    );

    // 6
    let standard_ok = (1..=8).all(|n| {
        distinct_of(n)
            .iter()
            .all(|g| build_fast(&standard_sequence(g).unwrap()).as_ref() == Ok(g))
    });
    let nesting_ok = (2..=8).all(|n| {
        all_of(n)
            .iter()
            .all(|g| build_fast(&nesting_realization(g)).as_ref() == Ok(g))
    });
    let g4312756 = build_naive(&[4, 3, 1, 2, 7, 5, 6]).unwrap();
    let seven_std = standard_sequence(&g4312756).unwrap();
    let listed = [7, 4, 2, 3, 6, 1, 5];
    let listed_realizes = build_naive(&listed).unwrap() == g4312756;
    let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
    let c4_nest = nesting_realization(&c4);
    r.record(
        6,
        false,
        standard_ok
            && nesting_ok
            && seven_std == [7, 4, 1, 2, 6, 3, 5]
            && listed_realizes
            && c4_nest == [4, 3, 3, 4],
        format!(
            "standard realizes G_N,distinct: {standard_ok}; nesting realizes G_N: {nesting_ok}; \
             4-cycle nesting {c4_nest:?}; HVG(4,3,1,2,7,5,6) standard {seven_std:?} \
             (ordering rule; the listed {listed:?} also realizes it: {listed_realizes})"
        ),
    );

    // 7
    let ten = build_naive(&[10, 6, 2, 4, 5, 8, 9, 1, 3, 7]).unwrap();
    let word = psi(&ten).unwrap();
    let bracketed = xi(&Bracketing::parse("(xx)((xxx)x(xx))").unwrap());
    let extra: HashSet<(usize, usize)> = bracketed
        .edges()
        .iter()
        .copied()
        .filter(|&(i, j)| j > i + 1)
        .collect();
    let want: HashSet<(usize, usize)> = [(1, 3), (3, 9), (3, 6), (7, 9)].into_iter().collect();
    r.record(
        7,
        false,
        word.as_str() == "[[[][][]][]][[][]]" && extra == want,
        format!(
            "psi(HVG(10,6,2,4,5,8,9,1,3,7)) = {word}; xi extra edges {:?}",
            {
                let mut e: Vec<_> = extra.iter().copied().collect();
                e.sort();
                e
            }
        ),
    );

    // 8
    let mut exhaustive = true;
    let mut checked = 0usize;
    for n in 1..=6usize {
        let mut d = vec![1usize; n];
        loop {
            checked += 1;
            exhaustive &= build_fast(&d).unwrap() == build_naive(&d).unwrap();
            let Some(k) = (0..n).rev().find(|&k| d[k] < n) else {
                break;
            };
            d[k] += 1;
            d[k + 1..].iter_mut().for_each(|x| *x = 1);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut random = true;
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=512);
        let hi = rng.gen_range(1..=len.max(2) / 2 + 1) as u32;
        let d: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=hi)).collect();
        random &= build_fast(&d).unwrap() == build_naive(&d).unwrap();
    }
    r.record(
        8,
        false,
        exhaustive && random,
        format!("exhaustive [N]^N, N <= 6 ({checked} inputs): {exhaustive}; 10^4 random up to length 512: {random}"),
    );

    // 9
    let identity = (0..=20).all(|m| catalan_identity_check(m).unwrap());
    r.record(
        9,
        false,
        identity && catalan(20).to_string() == "6564120420",
        format!("identity holds for N = 0..20: {identity}"),
    );

    // 10
    let structure = (1..=7).all(|n| {
        distinct_of(n).iter().all(structural) && (n < 2 || all_of(n).iter().all(structural))
    });
    r.record(
        10,
        false,
        structure,
        "non-crossing, endpoint and max-neighbor non-nestedness, non-nested path, \
         one-sum decomposition over both censuses, N <= 7"
            .to_string(),
    );

    // 11
    let (vg, t11) = timed(|| {
        (1..=5)
            .map(|n| vg_census(n, 1_000_000, 0, 1_000).unwrap())
            .collect::<Vec<_>>()
    });
    let found: Vec<usize> = vg.iter().map(|c| c.distinct).collect();
    let last: Vec<u64> = vg.iter().map(|c| c.last_new).collect();
    r.record(
        11,
        true,
        found == [1, 1, 2, 6, 25],
        format!(
            "randomized VG census N=1..5: {found:?} (last new at trials {last:?}; {:.2?}); not exhaustive",
            t11
        ),
    );

    // 12
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let best = |n: usize, rng: &mut ChaCha8Rng| {
        (0..5)
            .map(|_| {
                let d = random_walk(n, rng);
                timed(|| build_fast(&d).unwrap()).1
            })
            .min()
            .unwrap()
    };
    let t_1 = best(100_000, &mut rng);
    let t_2 = best(200_000, &mut rng);
    let ratio = t_2.as_secs_f64() / t_1.as_secs_f64();
    r.record(
        12,
        true,
        t_1 < Duration::from_millis(100) && ratio < 3.0,
        format!(
            "random walk 1e5: {:.2?}, 2e5: {:.2?}, ratio {ratio:.2}",
            t_1, t_2
        ),
    );

    assert!(r.failures.is_empty(), "failed criteria: {:?}", r.failures);
}
