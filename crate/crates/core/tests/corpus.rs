//! Every stored fixture expectation recomputed through the other modules.

use hamnum::corpus::{self, FIXTURE_NAMES};
use hamnum::grinberg::{grinberg_set, repeat_lower_bound, FaceLengthVector};
use hamnum::reduction::reduction_report;
use hamnum::walks::{hamiltonian_number_exact, validate_walk};

#[test]
fn stored_expectations_match_recomputation() {
    for &name in FIXTURE_NAMES {
        let fixture = corpus::fixture(name, &[]).unwrap();
        if let Some(g) = &fixture.embedding {
            let mut traced = g.trace_faces().lengths();
            let mut stored = fixture.face_lengths.clone();
            traced.sort_unstable();
            stored.sort_unstable();
            assert_eq!(traced, stored, "{name}");
            for walk in &fixture.walks {
                validate_walk(g, walk).unwrap();
            }
        }
        let faces = FaceLengthVector::new(fixture.face_lengths.clone()).unwrap();
        let expected = &fixture.expected;
        if faces.len() >= 2 {
            let set = grinberg_set(&faces).unwrap();
            if let Some(e) = &expected.grinberg_set {
                assert_eq!(set.values(), e.value.as_slice(), "{name}");
            }
            if let Some(e) = &expected.grinberg_number {
                assert_eq!(set.min(), e.value, "{name}");
            }
            if let Some(e) = &expected.repeat_lower_bound {
                assert_eq!(repeat_lower_bound(set.min()).unwrap(), e.value, "{name}");
            }
        }
        if let (Some(e), Some(g)) = (&expected.hamiltonian_number, &fixture.embedding) {
            if g.num_vertices() <= 20 {
                assert_eq!(hamiltonian_number_exact(g, 20).unwrap().h, e.value, "{name}");
            }
            if let Some(walk) = fixture.walks.first() {
                assert!(walk.len() as u64 >= e.value, "{name}");
            }
        }
    }
}

#[test]
fn fig5_witness_passes_every_check() {
    let fixture = corpus::fig5().unwrap();
    let g = fixture.embedding.unwrap();
    assert_eq!(g.num_vertices(), 32);
    let walk = &fixture.walks[0];
    let stats = validate_walk(&g, walk).unwrap();
    assert_eq!((stats.length, stats.repeats), (38, 6));
    let report = reduction_report(&g, walk).unwrap();
    assert!(report.checks.all());
    assert!(report.checks.f_in_grinberg_set);
    assert_eq!(report.f, 12);
    assert!(report.is_tight());
}

#[test]
fn hexcluster_walk_is_optimal() {
    let fixture = corpus::hexcluster5().unwrap();
    let g = fixture.embedding.unwrap();
    assert_eq!((g.num_vertices(), g.num_edges()), (20, 24));
    let stats = validate_walk(&g, &fixture.walks[0]).unwrap();
    assert_eq!(stats.repeats, 2);
    assert_eq!(hamiltonian_number_exact(&g, 20).unwrap().h, 22);
}

#[test]
fn parameterised_fixtures() {
    assert_eq!(corpus::fixture("cycle", &["9"]).unwrap().face_lengths, vec![9, 9]);
    let star = corpus::fixture("star", &["6"]).unwrap().embedding.unwrap();
    assert_eq!(star.num_vertices(), 7);
    let grid = corpus::fixture("grid", &["2", "4"]).unwrap();
    let mut lengths = grid.face_lengths.clone();
    lengths.sort_unstable();
    assert_eq!(lengths, vec![4, 4, 4, 8]);
    assert!(corpus::fixture("cycle", &["2"]).is_err());
    assert!(corpus::fixture("grid", &["x"]).is_err());
    assert!(corpus::fixture("nope", &[]).is_err());
}
