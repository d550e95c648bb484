//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plyforge::parallel::ply_number_exact_parallel;
use plyforge_core::geometry::Point;
use plyforge_core::logply::{
    area_stats, assemble_heavy_path_drawing, draw_path, layered_star_layout,
};
use plyforge_core::lowerbound::{
    build_instance, certify_lower_bound, radial_instance_layout, random_instance_layout,
};
use plyforge_core::oneply::{compute_alpha_max, layout_one_ply, OnePlyParams};
use plyforge_core::ply::{ply_disks, sample_disks, DiskArrangement, PlyDisk, DEFAULT_CELL_BUDGET};
use plyforge_core::two_tree::validate_two_tree;
use plyforge_core::{Drawing, HeavyPathDecomposition, TreeFamily};

type Outcome = Result<String, String>;
type Check = (&'static str, &'static str, fn() -> Outcome);

fn exact_ply(d: &Drawing) -> usize {
    ply_number_exact_parallel(d).expect("drawing has disks").ply
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn one_ply_random_trees() -> Outcome {
    let mut slowest = 0.0f64;
    for delta in 3..=12 {
        let alpha = compute_alpha_max(delta, false).unwrap() * (1.0 - 1e-6);
        let params = OnePlyParams::new(delta).unwrap().with_alpha(alpha).unwrap();
        for seed in 0..20 {
            let tree = TreeFamily::Random {
                n: 500,
                max_degree: delta,
                seed,
            }
            .generate()
            .unwrap();
            let start = Instant::now();
            let d = layout_one_ply(&tree, &params, 1.0).map_err(|e| e.to_string())?;
            let ply = exact_ply(&d);
            slowest = slowest.max(start.elapsed().as_secs_f64());
            ensure(ply == 1, || {
                format!("delta {delta}, seed {seed}: ply {ply}")
            })?;
        }
    }
    ensure(slowest < 60.0, || {
        format!("slowest tree took {slowest:.1} s")
    })?;
    Ok(format!("200 trees at ply 1, slowest {slowest:.3} s"))
}

fn manhattan_tightness() -> Outcome {
    let tree = TreeFamily::CompleteKary { k: 3, height: 5 }
        .generate()
        .unwrap();
    let params = OnePlyParams::manhattan();
    let safe = params.with_alpha(params.alpha * (1.0 - 1e-6)).unwrap();
    let at_safe = exact_ply(&layout_one_ply(&tree, &safe, 1.0).unwrap());
    let over = exact_ply(&layout_one_ply(&tree, &params.with_alpha_unchecked(0.34), 1.0).unwrap());
    ensure(at_safe == 1, || {
        format!("ply {at_safe} at alpha just below 1/3")
    })?;
    ensure(over >= 2, || format!("ply {over} at alpha 0.34"))?;
    Ok(format!("ply {at_safe} at 1/3(1-1e-6), ply {over} at 0.34"))
}

fn logarithmic_ply() -> Outcome {
    let mut rows = Vec::new();
    for k in 6..=12 {
        let tree = TreeFamily::CompleteKary {
            k: 2,
            height: k - 1,
        }
        .generate()
        .unwrap();
        let n = tree.len();
        let h = HeavyPathDecomposition::new(&tree).total_height();
        let ply = exact_ply(&assemble_heavy_path_drawing(&tree).map_err(|e| e.to_string())?);
        ensure(ply <= 3 * (h + 1), || {
            format!("n {n}: ply {ply} > 3(H+1) with H {h}")
        })?;
        let log_bound = 3.0 * ((n as f64).log2() + 1.0);
        ensure(ply as f64 <= log_bound, || {
            format!("n {n}: ply {ply} > 3(log2 n + 1)")
        })?;
        rows.push(format!("n={n} H={h} ply={ply}"));
    }
    Ok(rows.join(", "))
}

fn draw_path_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst_ply = 0;
    for case in 0..100 {
        let k = rng.gen_range(1..=50);
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=100)).collect();
        let p = draw_path(&sizes).map_err(|e| e.to_string())?;
        let n = sizes.iter().sum::<usize>() + k;
        ensure(p.is_two_drawing(), || {
            format!("case {case}: not a 2-drawing: {:?}", p.lengths)
        })?;
        ensure(p.lengths[0] >= sizes[0] as f64, || {
            format!("case {case}: l(v, v1) < n1")
        })?;
        for i in 1..k {
            ensure(p.lengths[i] >= (sizes[i - 1] + sizes[i]) as f64, || {
                format!("case {case}: edge {i} shorter than n_i + n_(i+1)")
            })?;
        }
        ensure(p.total_length() <= 6.0 * n as f64, || {
            format!("case {case}: total {} > 6n = {}", p.total_length(), 6 * n)
        })?;
        let ply = exact_ply(&p.drawing().unwrap());
        ensure(ply <= 2, || format!("case {case}: standalone ply {ply}"))?;
        worst_ply = worst_ply.max(ply);
    }
    Ok(format!("100 sequences, max standalone ply {worst_ply}"))
}

/// Random disks whose pairwise boundaries stay clear of tangency and whose
/// deepest region survives shrinking every radius by `step`, so a grid of
/// that step must hit it.
fn robust_disk_set(rng: &mut ChaCha8Rng) -> (Vec<PlyDisk>, f64) {
    loop {
        let count = rng.gen_range(1..=20);
        let disks: Vec<PlyDisk> = (0..count)
            .map(|i| {
                let c = Point::new(rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
                PlyDisk::new(i, c, rng.gen_range(1.0..4.0))
            })
            .collect();
        let step = disks.iter().map(|d| d.radius).fold(f64::INFINITY, f64::min) / 50.0;
        let clear = disks.iter().enumerate().all(|(i, a)| {
            disks[i + 1..].iter().all(|b| {
                let d = a.center.dist(b.center);
                let s = a.radius + b.radius;
                (d - s).abs() >= 1e-3 * s && (d - (a.radius - b.radius).abs()).abs() >= 1e-3 * s
            })
        });
        if !clear {
            continue;
        }
        let full = DiskArrangement::new(disks.clone()).ply_exact().unwrap().ply;
        let shrunk: Vec<PlyDisk> = disks
            .iter()
            .map(|d| PlyDisk::new(d.vertex, d.center, d.radius - step))
            .collect();
        if DiskArrangement::new(shrunk).ply_exact().unwrap().ply == full {
            return (disks, step);
        }
    }
}

/// Disks touching each other: external and internal tangencies and
/// duplicates.
fn tangent_disk_set(rng: &mut ChaCha8Rng) -> Vec<PlyDisk> {
    let count = rng.gen_range(2..=20);
    let mut disks = vec![PlyDisk::new(
        0,
        Point::new(0.0, 0.0),
        rng.gen_range(1.0..3.0),
    )];
    while disks.len() < count {
        let base = disks[rng.gen_range(0..disks.len())];
        let r = rng.gen_range(0.5..3.0);
        let dir = Point::polar(rng.gen_range(0.0..2.0 * PI));
        let center = match rng.gen_range(0..3) {
            0 => base.center + dir * (base.radius + r),
            1 => base.center + dir * (base.radius - r).abs(),
            _ => base.center,
        };
        let r = if center == base.center {
            base.radius
        } else {
            r
        };
        disks.push(PlyDisk::new(disks.len(), center, r));
    }
    disks
}

fn engine_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for case in 0..200 {
        let (disks, step) = robust_disk_set(&mut rng);
        let exact = DiskArrangement::new(disks.clone()).ply_exact().unwrap().ply;
        let sampled = sample_disks(&disks, step, DEFAULT_CELL_BUDGET).unwrap().ply;
        ensure(exact == sampled, || {
            format!("clear set {case}: exact {exact}, sampled {sampled}")
        })?;
    }
    let mut strictly_more = 0;
    for case in 0..200 {
        let disks = tangent_disk_set(&mut rng);
        let step = disks.iter().map(|d| d.radius).fold(f64::INFINITY, f64::min) / 50.0;
        let exact = DiskArrangement::new(disks.clone()).ply_exact().unwrap().ply;
        let sampled = sample_disks(&disks, step, DEFAULT_CELL_BUDGET).unwrap().ply;
        ensure(exact >= sampled, || {
            format!("tangent set {case}: exact {exact} < sampled {sampled}")
        })?;
        strictly_more += usize::from(exact > sampled);
    }
    Ok(format!(
        "200 clear sets equal; 200 tangent sets exact >= sampled ({strictly_more} strictly)"
    ))
}

fn layer_separation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut pairs = 0usize;
    for case in 0..100 {
        let count = rng.gen_range(1..=60);
        let base = rng.gen_range(0.01..100.0);
        let start = rng.gen_range(0.0..2.0 * PI);
        let center = Point::new(rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
        let placed = layered_star_layout(center, base, count, start).unwrap();
        let mut pos = vec![center];
        pos.extend(placed.iter().map(|&(p, _)| p));
        let d = Drawing::new(0.5, pos, (1..=count).map(|c| (0, c)).collect()).unwrap();
        let disks = ply_disks(&d).disks;
        for i in 1..=count {
            for j in i + 1..=count {
                if placed[i - 1].1 == placed[j - 1].1 {
                    continue;
                }
                let (a, b) = (disks[i], disks[j]);
                let gap = a.center.dist(b.center);
                let sum = a.radius + b.radius;
                ensure(gap >= sum * (1.0 - 1e-9), || {
                    format!("star {case}: children {i}, {j} overlap ({gap} < {sum})")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("100 stars, {pairs} cross-layer pairs disjoint"))
}

fn lower_bound_instance() -> Outcome {
    let inst = build_instance(1024).unwrap();
    ensure(
        (inst.h, inst.m, inst.vertex_count()) == (7, 11, 2806),
        || {
            format!(
                "h {}, m {}, {} vertices",
                inst.h,
                inst.m,
                inst.vertex_count()
            )
        },
    )?;
    ensure(validate_two_tree(&inst.graph), || "not a 2-tree".into())?;

    let small = build_instance(64).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut apex_cases, mut annulus_cases) = (0, 0);
    for k in 0..50 {
        let alpha = rng.gen_range(0.1..=0.5);
        let d = if k % 2 == 0 {
            random_instance_layout(&small, alpha, k).unwrap()
        } else {
            radial_instance_layout(&small, alpha).unwrap()
        };
        let cert = certify_lower_bound(&d, &small).unwrap();
        let ply = exact_ply(&d);
        ensure(cert.bound <= ply as f64, || {
            format!("drawing {k}: bound {} > ply {ply}", cert.bound)
        })?;
        if cert.covered_trees.len() == small.m {
            apex_cases += 1;
        }
        if !cert.annuli.is_empty() {
            annulus_cases += 1;
        }
    }

    let mut growth = Vec::new();
    for n in [64, 256, 1024, 4096] {
        let inst = build_instance(n).unwrap();
        let best = (0..3)
            .map(|seed| {
                let d = random_instance_layout(&inst, 0.5, seed).unwrap();
                certify_lower_bound(&d, &inst).unwrap().bound
            })
            .fold(0.0, f64::max);
        growth.push(best);
    }
    ensure(growth.windows(2).all(|w| w[1] > w[0]), || {
        format!("best bounds not increasing: {growth:?}")
    })?;
    Ok(format!(
        "h=7 m=11 2806 vertices; 50 drawings sound ({apex_cases} apex-cover, {annulus_cases} with annuli); best bounds {growth:?}"
    ))
}

fn area_growth() -> Outcome {
    const C: f64 = 3.0;
    let delta = 3.0;
    let mut points = Vec::new();
    for k in 6..=12 {
        let tree = TreeFamily::CompleteKary {
            k: 2,
            height: k - 1,
        }
        .generate()
        .unwrap();
        let d = assemble_heavy_path_drawing(&tree).unwrap();
        let s = area_stats(&d).unwrap();
        points.push(((tree.len() as f64).ln(), s.area.ln()));
    }
    let slope = fit_slope(&points);
    let first = fit_slope(&points[..4]);
    let second = fit_slope(&points[3..]);
    ensure(slope <= C * delta, || {
        format!("slope {slope:.3} > {C} * {delta}")
    })?;
    ensure(second <= 2.0 * first, || {
        format!("slope doubles: {first:.3} then {second:.3}")
    })?;
    Ok(format!(
        "log-log slope {slope:.3} (halves {first:.3}, {second:.3}), limit {}",
        C * delta
    ))
}

fn fit_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn main() {
    let checks: [Check; 8] = [
        ("AC1", "1-ply layouts of random trees", one_ply_random_trees),
        (
            "AC2",
            "axis-parallel layout is tight at 1/3",
            manhattan_tightness,
        ),
        ("AC3", "heavy-path ply is logarithmic", logarithmic_ply),
        ("AC4", "path 2-drawings", draw_path_contract),
        ("AC5", "exact ply agrees with grid sampling", engine_oracle),
        ("AC6", "layers of a star are disjoint", layer_separation),
        (
            "AC7",
            "lower-bound instance and sound certificates",
            lower_bound_instance,
        ),
        ("AC8", "polynomial area", area_growth),
    ];
    let mut failed = 0;
    for (id, name, check) in checks {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("{id} PASS {name}: {detail} [{secs:.2} s]"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {name}: {detail} [{secs:.2} s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
