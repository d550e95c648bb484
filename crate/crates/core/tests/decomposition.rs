use plyforge_core::{HeavyPathDecomposition, TreeFamily};

#[test]
fn height_is_logarithmic_and_paths_partition() {
    for seed in 0..100 {
        let n = 100 + (seed as usize * 997) % 9_900;
        let max_degree = 2 + seed as usize % 7;
        let t = TreeFamily::Random {
            n,
            max_degree,
            seed,
        }
        .generate()
        .unwrap();
        let hpd = HeavyPathDecomposition::new(&t);
        assert!(
            hpd.total_height() as f64 <= (n as f64).log2() + 1.0,
            "seed {seed}"
        );

        let mut seen = vec![false; n];
        for (id, path) in hpd.paths().iter().enumerate() {
            assert!(
                t.children(*path.last().unwrap()).is_empty(),
                "path {id} must end at a leaf"
            );
            for &v in path {
                assert!(!seen[v], "vertex {v} on two paths");
                seen[v] = true;
                assert_eq!(hpd.path_of(v), id);
            }
        }
        assert!(seen.iter().all(|&s| s));

        for v in 0..n {
            let light: usize = hpd
                .anchored_paths(v)
                .iter()
                .map(|&p| t.subtree_size(hpd.path(p)[0]))
                .sum();
            assert_eq!(hpd.anchored_size(v), light);
        }
    }
}
