mod common;

use hamnum::corpus;
use hamnum::{Error, PlanarEmbedding};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn k5_rotations() -> impl Iterator<Item = Vec<Vec<usize>>> {
    // Edge ids of K5 in lexicographic pair order.
    let pairs: Vec<(usize, usize)> = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect();
    let incident: Vec<Vec<usize>> = (1..=5)
        .map(|v| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .map(|(i, _)| i + 1)
                .collect()
        })
        .collect();
    // Cyclic orders of four darts: fix the first, permute the other three.
    let perms3 = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    (0..6usize.pow(5)).map(move |code| {
        let mut c = code;
        incident
            .iter()
            .map(|ring| {
                let p = perms3[c % 6];
                c /= 6;
                vec![ring[0], ring[1 + p[0]], ring[1 + p[1]], ring[1 + p[2]]]
            })
            .collect()
    })
}

#[test]
fn no_rotation_system_embeds_k5_on_the_sphere() {
    let edges: Vec<(usize, usize)> = (1..=5).flat_map(|u| (u + 1..=5).map(move |v| (u, v))).collect();
    let mut count = 0;
    for rotations in k5_rotations() {
        let err = PlanarEmbedding::new(5, edges.clone(), rotations).unwrap_err();
        assert!(
            matches!(
                err,
                Error::NonPlanarEmbedding {
                    n: 5,
                    m: 10,
                    expected: 7,
                    ..
                }
            ),
            "{err:?}"
        );
        count += 1;
    }
    assert_eq!(count, 7776);
}

#[test]
fn grid_file_has_five_faces() {
    let g = corpus::grid(3, 3).unwrap().embedding.unwrap();
    let parsed = PlanarEmbedding::parse(&g.to_graph_file()).unwrap();
    let faces = parsed.trace_faces();
    assert_eq!(faces.len(), 5);
    assert_eq!(faces.sorted_lengths(), vec![4, 4, 4, 4, 8]);
    assert_eq!(parsed.diameter(), 4);
    assert_eq!(parsed.vertex_connectivity(), 2);
}

#[test]
fn altered_path_tree_faces() {
    let tree = corpus::path_tree(10).unwrap().embedding.unwrap();
    assert_eq!(tree.trace_faces().lengths(), vec![20]);
    let doubled = tree.double_all_edges();
    let mut expected = vec![2; 10];
    expected.push(20);
    assert_eq!(doubled.trace_faces().sorted_lengths(), expected);
}

#[test]
fn k4_connectivity() {
    let g = corpus::k4().unwrap().embedding.unwrap();
    assert_eq!(g.vertex_connectivity(), 3);
    assert_eq!(g.diameter(), 1);
}

#[test]
fn bridge_between_triangles() {
    let coords = [(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (3.0, 0.0), (4.0, 1.0), (4.0, -1.0)];
    let edges = vec![(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)];
    let g = PlanarEmbedding::from_straight_line(&coords, edges).unwrap();
    assert_eq!(g.bridges(), vec![4]);
    let tree = corpus::star(4).unwrap().embedding.unwrap();
    assert_eq!(tree.bridges(), vec![1, 2, 3, 4]);
}

#[test]
fn random_graph_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..300 {
        let n = 1 + trial % 9;
        let g = common::random_planar(&mut rng, n, 0.5);
        let (n, m) = (g.num_vertices(), g.num_edges());
        let faces = g.trace_faces();
        if m > 0 {
            assert_eq!(n as i64 - m as i64 + faces.len() as i64, 2);
            assert_eq!(faces.lengths().iter().sum::<u32>() as usize, 2 * m);
        }

        let again = PlanarEmbedding::parse(&g.to_graph_file()).unwrap();
        assert_eq!(again, g);

        let doubled = g.double_all_edges();
        assert_eq!(doubled.num_edges(), 2 * m);
        assert_eq!(doubled.num_vertices(), n);
        if m > 0 {
            assert_eq!(doubled.trace_faces().len(), faces.len() + m);
        }

        let dist = g.shortest_path_matrix();
        let oracle = common::floyd_warshall(&g);
        for u in 1..=n {
            assert_eq!(dist.get(u, u), 0);
            for v in 1..=n {
                assert_eq!(dist.get(u, v), oracle[u - 1][v - 1]);
                assert_eq!(dist.get(u, v), dist.get(v, u));
                for w in 1..=n {
                    assert!(dist.get(u, w) <= dist.get(u, v) + dist.get(v, w));
                }
            }
        }

        if n >= 2 {
            assert_eq!(
                g.vertex_connectivity(),
                common::connectivity_by_enumeration(&g),
                "{}",
                g.to_graph_file()
            );
        }

        // An edge is a bridge exactly when the graph without it is disconnected.
        let bridges = g.bridges();
        for (id, _, _) in g.edges() {
            let rest: Vec<(usize, usize)> = g.edges().filter(|&(e, _, _)| e != id).map(|(_, u, v)| (u, v)).collect();
            let mut reach = vec![false; n + 1];
            reach[1] = true;
            let mut changed = true;
            while changed {
                changed = false;
                for &(u, v) in &rest {
                    if reach[u] != reach[v] {
                        reach[u] = true;
                        reach[v] = true;
                        changed = true;
                    }
                }
            }
            let disconnects = reach[1..].iter().any(|&r| !r);
            assert_eq!(bridges.contains(&id), disconnects);
        }
    }
}
