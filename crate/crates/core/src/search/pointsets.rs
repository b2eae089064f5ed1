//! Incremental point-set search for n in {5, 6, 7}: planar n-point
//! integer-distance sets with no three points collinear and some distance
//! equal to k, grown from cataloged quadrilaterals one point at a time.
//!
//! Completeness argument: in any valid n-point set the pair realizing the
//! distance k lies in some 4-point subset, that subset is a realizable
//! quadrilateral containing k, and every superset chain from it stays valid.
//! So extending every cataloged k-quadrilateral by all admissible points,
//! repeatedly, visits every n-point set at least once; congruence-canonical
//! deduplication then makes the output unique and deterministic.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::exact::{cm3_int, sqrt_decompose, PlanarPoints, Rat};

use super::{enumerate_quads, RoleFilter, SearchConfig, SearchError, ShapeFilter};

/// One planar integer-distance point set.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSetRecord {
    pub points: PlanarPoints,
    /// Symmetric integer distance matrix, zero on the diagonal.
    pub dists: Vec<Vec<u32>>,
}

impl PointSetRecord {
    /// Congruence-canonical key: two records describe congruent point sets
    /// (up to reflection) exactly when their keys match.
    pub fn congruence_key(&self) -> Vec<u32> {
        canonical_key(&self.dists)
    }
}

#[derive(Debug, Clone)]
pub struct NgonResult {
    pub sets: Vec<PointSetRecord>,
    pub visited: u64,
    /// False when the visit budget was exhausted; the result is then an
    /// explicitly partial prefix, never a silent truncation.
    pub complete: bool,
    pub elapsed: Duration,
}

#[allow(clippy::needless_range_loop)]
fn distance_matrix(points: &PlanarPoints) -> Option<Vec<Vec<u32>>> {
    let n = points.len();
    let mut m = vec![vec![0u32; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let dsq = points.squared_distance(i, j);
            let v = dsq.to_bigint()?;
            let v: u64 = v.try_into().ok()?;
            let r = v.isqrt();
            if r * r != v {
                return None;
            }
            m[i][j] = r as u32;
            m[j][i] = r as u32;
        }
    }
    Some(m)
}

/// Lexicographically least flattened distance matrix over all point
/// relabelings; congruent point sets (including mirror images) share it.
fn canonical_key(dists: &[Vec<u32>]) -> Vec<u32> {
    let n = dists.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut flat = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                flat.push(dists[p[i]][p[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| &flat < b) {
            best = Some(flat);
        }
    });
    best.unwrap()
}

fn permute(items: &mut Vec<usize>, start: usize, visit: &mut impl FnMut(&[usize])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

struct Extender {
    dmax: u32,
    visited: u64,
    budget: Option<u64>,
    exhausted: bool,
}

impl Extender {
    /// All valid one-point extensions of `points`. The new point is placed
    /// from its distances r1, r2 to the baseline points 0 and 1; its height
    /// must live in the same quadratic extension, every distance to the
    /// existing points must be an integer within the bound, and no three
    /// points may become collinear.
    fn extend(&mut self, points: &PlanarPoints, base_ab: u32) -> Vec<PlanarPoints> {
        let mut out = Vec::new();
        let absq = (base_ab as i128) * (base_ab as i128);
        let two_ab = Rat::from_int(2 * base_ab as i64);
        for r1 in 1..=self.dmax {
            for r2 in 1..=self.dmax {
                let t = cm3_int(absq, (r1 as i128) * (r1 as i128), (r2 as i128) * (r2 as i128));
                if t <= 0 {
                    // t = 0 would put the point on the baseline, collinear
                    // with points 0 and 1.
                    continue;
                }
                let (m, s) = sqrt_decompose(t as u64);
                if s != points.radicand() {
                    continue;
                }
                let x = Rat::from_bigint((absq + (r1 as i128) * (r1 as i128) - (r2 as i128) * (r2 as i128)).into())
                    / &two_ab;
                let yc_mag = Rat::from_int(m as i64) / &two_ab;
                for sign in [1i8, -1] {
                    if let Some(b) = self.budget {
                        if self.visited >= b {
                            self.exhausted = true;
                            return out;
                        }
                    }
                    self.visited += 1;
                    let yc = if sign > 0 { yc_mag.clone() } else { -yc_mag.clone() };
                    let cand = points.with_point(x.clone(), yc);
                    let new = cand.len() - 1;
                    if !self.distances_ok(&cand, new) {
                        continue;
                    }
                    if !self.no_collinear_triples(&cand, new) {
                        continue;
                    }
                    out.push(cand);
                }
            }
        }
        out
    }

    fn distances_ok(&self, cand: &PlanarPoints, new: usize) -> bool {
        for j in 2..new {
            let dsq = cand.squared_distance(new, j);
            let Some(v) = dsq.to_bigint() else {
                return false;
            };
            let Ok(v) = u64::try_from(v) else {
                return false;
            };
            let r = v.isqrt();
            if r * r != v || r < 1 || r > self.dmax as u64 {
                return false;
            }
        }
        true
    }

    fn no_collinear_triples(&self, cand: &PlanarPoints, new: usize) -> bool {
        for i in 0..new {
            for j in i + 1..new {
                if cand.orient(i, j, new) == 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Progress marker for the exploratory searches: the current target size,
/// how many base sets of the previous level have been processed, and the
/// level total.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NgonProgress {
    pub growing_to: u8,
    pub processed: usize,
    pub total: usize,
}

/// All planar n-point integer-distance sets (n in {5, 6, 7}) with no three
/// points collinear, every pairwise distance at most `dmax`, and some
/// distance equal to k. Deduplicated up to congruence; deterministic order.
pub fn enumerate_ngon_pointsets(
    n: u8,
    k: u32,
    dmax: u32,
    threads: usize,
    budget: Option<u64>,
) -> Result<NgonResult, SearchError> {
    enumerate_ngon_pointsets_with_progress(n, k, dmax, threads, budget, |_| {})
}

/// [`enumerate_ngon_pointsets`] with a progress callback, invoked once per
/// processed base set at every extension level. Callers decide how often to
/// surface the events.
pub fn enumerate_ngon_pointsets_with_progress(
    n: u8,
    k: u32,
    dmax: u32,
    threads: usize,
    budget: Option<u64>,
    mut progress: impl FnMut(NgonProgress),
) -> Result<NgonResult, SearchError> {
    if !(5..=7).contains(&n) {
        return Err(SearchError::InvalidConfig(format!(
            "point-set mode requires n in 5..=7, got {n}"
        )));
    }
    let start = Instant::now();
    let base_cfg = SearchConfig {
        n: 4,
        k,
        k_role: RoleFilter::Any,
        dmax,
        shape: ShapeFilter::Any,
        require_cyclic: false,
        require_tangential: false,
        require_trapezoid: false,
        include_degenerate: false,
        threads,
    };
    let base = enumerate_quads(&base_cfg)?;
    let mut visited = base.visited;

    // Deduplicate the base quadrilaterals as point sets: concave point sets
    // appear under up to three essentially different labelings.
    let mut level: BTreeMap<Vec<u32>, (PlanarPoints, u32)> = BTreeMap::new();
    for e in &base.entries {
        let dists =
            distance_matrix(&e.embedding).expect("catalog embeddings have integer distances");
        level
            .entry(canonical_key(&dists))
            .or_insert_with(|| (e.embedding.clone(), e.canonical.ab));
    }

    let mut ext = Extender {
        dmax,
        visited: 0,
        budget,
        exhausted: false,
    };
    let mut size = 4u8;
    while size < n && !ext.exhausted {
        let total = level.len();
        let mut next: BTreeMap<Vec<u32>, (PlanarPoints, u32)> = BTreeMap::new();
        for (processed, (_, (points, base_ab))) in level.iter().enumerate() {
            for cand in ext.extend(points, *base_ab) {
                let dists = distance_matrix(&cand).expect("extension checked integrality");
                next.entry(canonical_key(&dists))
                    .or_insert_with(|| (cand, *base_ab));
            }
            progress(NgonProgress {
                growing_to: size + 1,
                processed: processed + 1,
                total,
            });
            if ext.exhausted {
                break;
            }
        }
        level = next;
        size += 1;
    }
    visited += ext.visited;

    let complete = !ext.exhausted;
    let mut sets = Vec::new();
    if size == n {
        for (_, (points, _)) in level {
            let dists = distance_matrix(&points).expect("checked");
            debug_assert!(dists
                .iter()
                .any(|row| row.contains(&k)));
            sets.push(PointSetRecord { points, dists });
        }
    }
    Ok(NgonResult {
        sets,
        visited,
        complete,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_n() {
        assert!(enumerate_ngon_pointsets(4, 1, 5, 1, None).is_err());
        assert!(enumerate_ngon_pointsets(8, 1, 5, 1, None).is_err());
    }

    #[test]
    fn no_pentagon_with_distance_one() {
        let r = enumerate_ngon_pointsets(5, 1, 8, 2, None).unwrap();
        assert!(r.complete);
        assert!(r.sets.is_empty());
    }

    #[test]
    fn budget_marks_partial_results() {
        let r = enumerate_ngon_pointsets(5, 3, 8, 1, Some(1)).unwrap();
        assert!(!r.complete);
    }
}
