//! Cross-module properties on random planar graphs: solver against
//! enumeration, the repeat bound against every walk we can produce, and the
//! reduction identities.

mod common;

use hamnum::bounds::{bounds_report, BoundsOptions};
use hamnum::grinberg::{self, attainable_repeat_counts, feasible_repeat_counts, FaceLengthVector};
use hamnum::reduction::reduction_report;
use hamnum::walks::{hamiltonian_number_exact, hamiltonian_spectrum, spanning_tree_walk, validate_walk};
use hamnum::PlanarEmbedding;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Grinberg set of the graph, doubling every edge first when it has bridges.
fn grinberg_host(g: &PlanarEmbedding) -> PlanarEmbedding {
    if g.bridges().is_empty() {
        g.clone()
    } else {
        g.double_all_edges()
    }
}

#[test]
fn solver_matches_spectrum_and_elementary_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..150 {
        let n = 2 + trial % 8;
        let g = common::random_planar(&mut rng, n, 0.4);
        let solution = hamiltonian_number_exact(&g, 20).unwrap();
        let spectrum = hamiltonian_spectrum(&g, 9).unwrap();
        assert_eq!(spectrum[0], solution.h);
        let n = n as u64;
        assert!(n <= solution.h && solution.h <= 2 * (n - 1));
        if common::is_tree(&g) {
            assert_eq!(solution.h, 2 * (n - 1));
        } else {
            assert!(solution.h < 2 * (n - 1));
        }
        let stats = validate_walk(&g, &solution.walk).unwrap();
        assert_eq!(stats.length as u64, solution.h);
        let g_number = grinberg::analyze(&grinberg_host(&g)).unwrap().number();
        if solution.h == n {
            assert_eq!(g_number, 0);
        }
        assert!(solution.h >= n + g_number / 2);
    }
}

#[test]
fn every_walk_respects_the_repeat_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    let mut constant = 0;
    for trial in 0..120 {
        let n = 3 + trial % 7;
        let g = common::random_planar(&mut rng, n, 0.5);
        let host = grinberg_host(&g);
        let faces = FaceLengthVector::of(&host).unwrap();
        let set = grinberg::grinberg_set(&faces).unwrap();
        let mut walks = vec![hamiltonian_number_exact(&g, 20).unwrap().walk, spanning_tree_walk(&g)];
        for i in 0..6 {
            let base = walks[i % 2].clone();
            walks.push(common::splice_detour(&mut rng, &g, &base));
        }
        let last = walks.last().unwrap().clone();
        walks.push(common::splice_detour(&mut rng, &g, &last));
        for walk in &walks {
            let stats = validate_walk(&g, walk).unwrap();
            assert_eq!(stats.repeats as usize, stats.length - n);
            assert!(2 * stats.repeats >= set.min());
            assert!(attainable_repeat_counts(&faces, &set, stats.repeats).contains(&stats.repeats));
            if g.trace_faces().len() >= 2 {
                let report = reduction_report(&g, walk).unwrap();
                assert!(report.checks.all(), "{report:?}\n{}", g.to_graph_file());
                assert_eq!(report.sum_m, stats.repeats);
                // The published accounting covers every walk whose host faces
                // do not all share one sign.
                if !report.constant_signs {
                    assert!(report.checks.f_in_grinberg_set);
                    assert!(feasible_repeat_counts(&set, stats.repeats).contains(&stats.repeats));
                } else {
                    constant += 1;
                }
            }
            checked += 1;
        }
    }
    assert!(checked >= 1000, "{checked}");
    assert!(constant > 0, "spanning-tree walks always produce the constant vector");
}

#[test]
fn bounds_bracket_the_exact_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for trial in 0..150 {
        let n = 3 + trial % 7;
        let g = common::random_planar(&mut rng, n, 0.6);
        let options = BoundsOptions {
            solve: true,
            limit: 20,
            witness: None,
        };
        let report = bounds_report(&g, &options).unwrap();
        let h = report.exact.unwrap();
        let lower = report.lower_grinberg.unwrap();
        assert!(report.n <= lower && lower <= h);
        let gh = report.upper_gh.unwrap();
        let bermond = report.upper_bermond.unwrap();
        assert!(h <= gh && h <= bermond && h <= report.upper_elementary);
        assert!(gh <= report.upper_elementary);
        let complete = g.vertices().all(|v| g.neighbors(v).len() == g.num_vertices() - 1);
        if complete {
            assert_eq!(bermond, report.n);
        }
    }
}

#[test]
fn embedding_derived_sets_are_even_and_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for trial in 0..200 {
        let g = common::random_planar(&mut rng, 2 + trial % 9, 0.7);
        let host = grinberg_host(&g);
        let lengths = host.trace_faces().lengths();
        let set = grinberg::grinberg_set(&FaceLengthVector::new(lengths.clone()).unwrap()).unwrap();
        assert!(set.values().iter().all(|v| v % 2 == 0));
        if lengths.len() <= 16 {
            assert_eq!(set.values(), common::grinberg_by_enumeration(&lengths).as_slice());
        }
    }
}
