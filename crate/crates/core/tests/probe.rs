//! Exploratory probes used to pin expected values for the bigger searches.
//! Ignored by default; run explicitly with `--ignored -- --nocapture`.

use diogon::search::{
    enumerate_ngon_pointsets, enumerate_quads, RoleFilter, SearchConfig, ShapeFilter,
};

#[test]
#[ignore]
fn probe_side2_census() {
    for dmax in [10, 15, 20, 25] {
        let cfg = SearchConfig::quad(2, RoleFilter::Side, dmax, ShapeFilter::Any).with_threads(8);
        let res = enumerate_quads(&cfg).unwrap();
        println!("side-2 dmax={dmax}: visited={} elapsed={:?}", res.visited, res.elapsed);
        for e in &res.entries {
            println!("  {} {} cyclic={} trap={}", e.canonical, e.class, e.cyclic, e.trapezoid);
        }
    }
}

#[test]
#[ignore]
fn probe_diag2() {
    let cfg = SearchConfig::quad(2, RoleFilter::Diagonal, 20, ShapeFilter::Any).with_threads(8);
    let res = enumerate_quads(&cfg).unwrap();
    println!("diag-2 dmax=20: visited={} elapsed={:?}", res.visited, res.elapsed);
    for e in &res.entries {
        println!("  {} {} cyclic={}", e.canonical, e.class, e.cyclic);
    }
}

#[test]
#[ignore]
fn probe_k1_dmax15() {
    let cfg = SearchConfig::quad(1, RoleFilter::Any, 15, ShapeFilter::Any).with_threads(8);
    let res = enumerate_quads(&cfg).unwrap();
    println!(
        "k=1 dmax=15: entries={} visited={} elapsed={:?}",
        res.entries.len(),
        res.visited,
        res.elapsed
    );
}

#[test]
#[ignore]
fn probe_k3_dmax20() {
    let cfg = SearchConfig::quad(3, RoleFilter::Any, 20, ShapeFilter::Any).with_threads(8);
    let res = enumerate_quads(&cfg).unwrap();
    println!(
        "k=3 dmax=20: entries={} visited={} elapsed={:?}",
        res.entries.len(),
        res.visited,
        res.elapsed
    );
    for e in res.entries.iter().take(12) {
        println!("  {} {}", e.canonical, e.class);
    }
}

#[test]
#[ignore]
fn probe_pentagons() {
    for (k, dmax) in [(1u32, 10u32), (2, 10), (3, 8), (3, 10)] {
        let r = enumerate_ngon_pointsets(5, k, dmax, 8, None).unwrap();
        println!(
            "pentagon k={k} dmax={dmax}: sets={} visited={} complete={} elapsed={:?}",
            r.sets.len(),
            r.visited,
            r.complete,
            r.elapsed
        );
        for s in r.sets.iter().take(5) {
            println!("  dists={:?} radicand={}", s.dists, s.points.radicand());
        }
    }
}

#[test]
#[ignore]
fn probe_concave_side2() {
    let cfg = SearchConfig::quad(2, RoleFilter::Any, 25, ShapeFilter::Concave).with_threads(8);
    let res = enumerate_quads(&cfg).unwrap();
    println!("concave with distance 2, dmax=25: {} entries", res.entries.len());
    for e in &res.entries {
        println!("  {} {}", e.canonical, e.class);
    }
}
