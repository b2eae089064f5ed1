//! Bounded exhaustive enumeration of integer-distance quadrilaterals with a
//! prescribed distance k, plus claim verifiers and small n-gon extensions.
//!
//! The enumeration fixes the k slot first (a side at AB, or a diagonal at
//! AC; the dihedral relabeling group makes either placement exhaustive),
//! derives the remaining distance windows from triangle inequalities, prunes
//! the convex branch with the diagonal-sum and Ptolemy inequalities, and
//! only then pays for the exact planarity gate. Entries are deduplicated by
//! canonical form, so the output order is deterministic regardless of the
//! thread count.

mod claims;
mod pointsets;

pub use claims::{claim_ids, collinear_k3_pairs, side2_pell_relation, verify_claim, ClaimReport, Verdict};
pub use pointsets::{
    enumerate_ngon_pointsets, enumerate_ngon_pointsets_with_progress, NgonProgress, NgonResult,
    PointSetRecord,
};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::exact::cm4_int;
use crate::model::{
    diagonal_sums_exceed_sides, ptolemy_inequality_holds, CatalogEntry, ConfigClass,
    QuadDistances, TrapezoidKind,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

/// Where the prescribed distance k must occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RoleFilter {
    Side,
    Diagonal,
    Any,
}

impl RoleFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            RoleFilter::Side => "side",
            RoleFilter::Diagonal => "diagonal",
            RoleFilter::Any => "any",
        }
    }
}

impl fmt::Display for RoleFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RoleFilter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "side" => Ok(RoleFilter::Side),
            "diagonal" => Ok(RoleFilter::Diagonal),
            "any" => Ok(RoleFilter::Any),
            other => Err(format!("unknown role: {other}")),
        }
    }
}

/// Which shape classes to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeFilter {
    Convex,
    Concave,
    Any,
}

impl ShapeFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            ShapeFilter::Convex => "convex",
            ShapeFilter::Concave => "concave",
            ShapeFilter::Any => "any",
        }
    }

    fn admits(self, class: &ConfigClass) -> bool {
        match class {
            ConfigClass::Convex => self != ShapeFilter::Concave,
            ConfigClass::Concave { .. } => self != ShapeFilter::Convex,
            _ => false,
        }
    }
}

impl fmt::Display for ShapeFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ShapeFilter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "convex" => Ok(ShapeFilter::Convex),
            "concave" => Ok(ShapeFilter::Concave),
            "any" => Ok(ShapeFilter::Any),
            other => Err(format!("unknown shape: {other}")),
        }
    }
}

/// Full search parameters. `dmax` bounds every pairwise distance including
/// the diagonals; all claim verdicts are therefore "up to bound".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: u8,
    pub k: u32,
    pub k_role: RoleFilter,
    pub dmax: u32,
    pub shape: ShapeFilter,
    pub require_cyclic: bool,
    pub require_tangential: bool,
    pub require_trapezoid: bool,
    pub include_degenerate: bool,
    pub threads: usize,
}

impl SearchConfig {
    pub fn quad(k: u32, k_role: RoleFilter, dmax: u32, shape: ShapeFilter) -> Self {
        SearchConfig {
            n: 4,
            k,
            k_role,
            dmax,
            shape,
            require_cyclic: false,
            require_tangential: false,
            require_trapezoid: false,
            include_degenerate: false,
            threads: 1,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.k < 1 {
            return Err(SearchError::InvalidConfig("k must be at least 1".into()));
        }
        if self.dmax < self.k {
            return Err(SearchError::InvalidConfig(format!(
                "dmax ({}) must be at least k ({})",
                self.dmax, self.k
            )));
        }
        if !(3..=7).contains(&self.n) {
            return Err(SearchError::InvalidConfig(format!(
                "n must be 3..=7, got {}",
                self.n
            )));
        }
        if self.threads < 1 {
            return Err(SearchError::InvalidConfig("threads must be at least 1".into()));
        }
        if self.n >= 5
            && (self.shape != ShapeFilter::Any
                || self.require_cyclic
                || self.require_tangential
                || self.require_trapezoid
                || self.include_degenerate)
        {
            return Err(SearchError::InvalidConfig(
                "point-set searches (n >= 5) support shape=any and no flags".into(),
            ));
        }
        Ok(())
    }
}

/// Result of a quadrilateral enumeration: canonical, duplicate-free entries
/// in lexicographic order.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub entries: Vec<CatalogEntry>,
    pub visited: u64,
    pub elapsed: Duration,
}

/// One deterministic slice of the enumeration; the slices are identical for
/// every thread count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chunk {
    branch: Branch,
    outer: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    /// k placed at the side slot AB; outer loop over bc.
    SideSlot,
    /// k placed at the diagonal slot AC; outer loop over ab.
    DiagonalSlot,
}

#[derive(Debug, Default)]
pub struct ChunkResult {
    pub entries: BTreeMap<QuadDistances, CatalogEntry>,
    pub visited: u64,
}

/// Inclusive third-side window for a triangle with sides `u`, `v`:
/// strict inequalities normally, non-strict when flat triples are wanted.
fn window(u: u32, v: u32, dmax: u32, allow_flat: bool) -> (u32, u32) {
    let (lo, hi) = if allow_flat {
        (u.abs_diff(v), u + v)
    } else {
        (u.abs_diff(v) + 1, (u + v).saturating_sub(1))
    };
    (lo.max(1), hi.min(dmax))
}

fn intersect(a: (u32, u32), b: (u32, u32)) -> (u32, u32) {
    (a.0.max(b.0), a.1.min(b.1))
}

/// The deterministic chunk list for a quadrilateral search.
pub fn partition(cfg: &SearchConfig) -> Vec<Chunk> {
    let mut chunks = Vec::new();
    if matches!(cfg.k_role, RoleFilter::Side | RoleFilter::Any) {
        for outer in 1..=cfg.dmax {
            chunks.push(Chunk {
                branch: Branch::SideSlot,
                outer,
            });
        }
    }
    if matches!(cfg.k_role, RoleFilter::Diagonal | RoleFilter::Any) {
        for outer in 1..=cfg.dmax {
            chunks.push(Chunk {
                branch: Branch::DiagonalSlot,
                outer,
            });
        }
    }
    chunks
}

fn consider(cfg: &SearchConfig, q: QuadDistances, out: &mut ChunkResult) {
    out.visited += 1;
    let convex_only = cfg.shape == ShapeFilter::Convex && !cfg.include_degenerate;
    if convex_only && !(diagonal_sums_exceed_sides(&q) && ptolemy_inequality_holds(&q)) {
        return;
    }
    if cm4_int(&q) != 0 {
        return;
    }
    let Some(entry) = CatalogEntry::build(&q, cfg.k) else {
        return;
    };
    let keep = match entry.class {
        ConfigClass::DegenerateCollinear { .. } => cfg.include_degenerate,
        ref class => cfg.shape.admits(class),
    };
    if !keep {
        return;
    }
    if cfg.require_cyclic && !entry.cyclic {
        return;
    }
    if cfg.require_tangential && !entry.tangential {
        return;
    }
    if cfg.require_trapezoid && entry.trapezoid == TrapezoidKind::None {
        return;
    }
    if let Some(prev) = out.entries.get(&entry.canonical) {
        debug_assert_eq!(prev, &entry);
    } else {
        out.entries.insert(entry.canonical, entry);
    }
}

/// Runs one chunk to completion. Pure; chunks may run in any order and on
/// any thread.
pub fn run_chunk(cfg: &SearchConfig, chunk: &Chunk) -> ChunkResult {
    let mut out = ChunkResult::default();
    let dmax = cfg.dmax;
    let flat = cfg.include_degenerate;
    match chunk.branch {
        Branch::SideSlot => {
            let ab = cfg.k;
            let bc = chunk.outer;
            for cd in 1..=dmax {
                for da in 1..=dmax {
                    let ac_win = intersect(window(ab, bc, dmax, flat), window(cd, da, dmax, flat));
                    if ac_win.0 > ac_win.1 {
                        continue;
                    }
                    let bd_win = intersect(window(ab, da, dmax, flat), window(bc, cd, dmax, flat));
                    if bd_win.0 > bd_win.1 {
                        continue;
                    }
                    for ac in ac_win.0..=ac_win.1 {
                        for bd in bd_win.0..=bd_win.1 {
                            consider(
                                cfg,
                                QuadDistances {
                                    ab,
                                    bc,
                                    cd,
                                    da,
                                    ac,
                                    bd,
                                },
                                &mut out,
                            );
                        }
                    }
                }
            }
        }
        Branch::DiagonalSlot => {
            let ac = cfg.k;
            let ab = chunk.outer;
            let bc_win = window(ab, ac, dmax, flat);
            for bc in bc_win.0..=bc_win.1 {
                for da in 1..=dmax {
                    let cd_win = window(da, ac, dmax, flat);
                    for cd in cd_win.0..=cd_win.1 {
                        let bd_win =
                            intersect(window(ab, da, dmax, flat), window(bc, cd, dmax, flat));
                        for bd in bd_win.0..=bd_win.1 {
                            consider(
                                cfg,
                                QuadDistances {
                                    ab,
                                    bc,
                                    cd,
                                    da,
                                    ac,
                                    bd,
                                },
                                &mut out,
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn merge_chunk_results(results: Vec<ChunkResult>) -> (Vec<CatalogEntry>, u64) {
    let mut merged: BTreeMap<QuadDistances, CatalogEntry> = BTreeMap::new();
    let mut visited = 0u64;
    for r in results {
        visited += r.visited;
        for (key, entry) in r.entries {
            if let Some(prev) = merged.get(&key) {
                debug_assert_eq!(prev, &entry);
            } else {
                merged.insert(key, entry);
            }
        }
    }
    (merged.into_values().collect(), visited)
}

/// Runs every chunk across `cfg.threads` workers. Workers share nothing;
/// results are merged in canonical order afterwards, so the output is
/// byte-for-byte identical for any thread count.
pub fn run_chunks_threaded(cfg: &SearchConfig, chunks: &[Chunk]) -> Vec<ChunkResult> {
    let threads = cfg.threads.max(1).min(chunks.len().max(1));
    if threads <= 1 {
        return chunks.iter().map(|c| run_chunk(cfg, c)).collect();
    }
    let mut slots: Vec<Option<ChunkResult>> = Vec::new();
    slots.resize_with(chunks.len(), || None);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|w| {
                scope.spawn(move || {
                    let mut partial = Vec::new();
                    let mut i = w;
                    while i < chunks.len() {
                        partial.push((i, run_chunk(cfg, &chunks[i])));
                        i += threads;
                    }
                    partial
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("search worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|s| s.expect("all chunks ran")).collect()
}

/// The complete, duplicate-free list of realizable labeled quadrilaterals
/// with all six distances at most `dmax` and the distance k in the requested
/// role, classified and flagged, in canonical lexicographic order.
pub fn enumerate_quads(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate()?;
    if cfg.n != 4 {
        return Err(SearchError::InvalidConfig(format!(
            "quadrilateral enumeration requires n = 4, got {}",
            cfg.n
        )));
    }
    let start = Instant::now();
    let chunks = partition(cfg);
    let results = run_chunks_threaded(cfg, &chunks);
    let (entries, visited) = merge_chunk_results(results);
    Ok(SearchResult {
        entries,
        visited,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Role;

    #[test]
    fn windows_match_third_side_options() {
        for u in 1..=12 {
            for v in 1..=12 {
                let (lo, hi) = window(u, v, 30, false);
                let opts = crate::triangles::third_side_options(u, v).options;
                let win: Vec<u32> = (lo..=hi).collect();
                let expect: Vec<u32> = opts.into_iter().filter(|&b| b <= 30).collect();
                assert_eq!(win, expect, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn flat_windows_add_exactly_the_degenerate_values() {
        for u in 1..=10 {
            for v in 1..=10 {
                let t = crate::triangles::third_side_options(u, v);
                let (lo, hi) = window(u, v, 40, true);
                let win: std::collections::BTreeSet<u32> = (lo..=hi).collect();
                let mut expect = t.options.clone();
                expect.extend(t.degenerate.iter().copied());
                assert_eq!(win, expect, "u={u} v={v}");
            }
        }
    }

    #[test]
    fn side2_search_finds_the_trapezoid() {
        let cfg = SearchConfig::quad(2, RoleFilter::Side, 8, ShapeFilter::Convex);
        let res = enumerate_quads(&cfg).unwrap();
        let fig = QuadDistances::from_array([2, 3, 2, 4, 4, 4]);
        let entry = res
            .entries
            .iter()
            .find(|e| e.canonical == fig)
            .expect("trapezoid present");
        assert_eq!(entry.class, ConfigClass::Convex);
        assert!(entry.cyclic);
        assert_eq!(entry.trapezoid, TrapezoidKind::PairBcAd);
        assert_eq!(entry.radicand, 15);
        assert_eq!(entry.k_roles.len(), 1);
        assert_eq!(entry.k_roles[0].role, Role::Side);
    }

    #[test]
    fn distance_one_has_no_quadrilaterals() {
        let cfg = SearchConfig::quad(1, RoleFilter::Any, 12, ShapeFilter::Any);
        let res = enumerate_quads(&cfg).unwrap();
        assert!(res.entries.is_empty(), "found {:?}", res.entries);
    }

    #[test]
    fn k3_rectangle_is_found() {
        let cfg = SearchConfig::quad(3, RoleFilter::Side, 6, ShapeFilter::Convex);
        let res = enumerate_quads(&cfg).unwrap();
        let rect = QuadDistances::from_array([3, 4, 3, 4, 5, 5]);
        assert!(res.entries.iter().any(|e| e.canonical == rect));
    }

    #[test]
    fn entries_revalidate() {
        let cfg = SearchConfig::quad(3, RoleFilter::Any, 10, ShapeFilter::Any);
        let res = enumerate_quads(&cfg).unwrap();
        assert!(!res.entries.is_empty());
        for e in &res.entries {
            assert_eq!(crate::model::classify(&e.canonical), e.class);
            let rebuilt = CatalogEntry::build(&e.canonical, cfg.k).unwrap();
            assert_eq!(&rebuilt, e);
            if e.class == ConfigClass::Convex {
                assert!(diagonal_sums_exceed_sides(&e.canonical));
                assert!(ptolemy_inequality_holds(&e.canonical));
            }
        }
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let base = SearchConfig::quad(2, RoleFilter::Any, 9, ShapeFilter::Any);
        let one = enumerate_quads(&base.clone().with_threads(1)).unwrap();
        let four = enumerate_quads(&base.clone().with_threads(4)).unwrap();
        let eight = enumerate_quads(&base.with_threads(8)).unwrap();
        assert_eq!(one.entries, four.entries);
        assert_eq!(one.entries, eight.entries);
        assert_eq!(one.visited, four.visited);
        assert_eq!(one.visited, eight.visited);
    }

    #[test]
    fn monotone_in_dmax() {
        let small = enumerate_quads(&SearchConfig::quad(2, RoleFilter::Any, 7, ShapeFilter::Any))
            .unwrap()
            .entries;
        let large = enumerate_quads(&SearchConfig::quad(2, RoleFilter::Any, 8, ShapeFilter::Any))
            .unwrap()
            .entries;
        for e in &small {
            assert!(large.iter().any(|f| f.canonical == e.canonical));
        }
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = SearchConfig::quad(0, RoleFilter::Any, 5, ShapeFilter::Any);
        assert!(cfg.validate().is_err());
        cfg.k = 9;
        cfg.dmax = 5;
        assert!(cfg.validate().is_err());
    }
}
