//! Integer triangles with one side pinned to k: third-side windows and
//! bounded enumeration. These windows drive the search pruning.

use std::collections::BTreeSet;

/// Valid and degenerate third sides for a triangle with sides `k` and `a`.
///
/// Every `b` in `options` satisfies the strict triangle inequality with
/// `(k, a)`; `degenerate` holds the values that flatten the triangle
/// (equality in one inequality). The two sets are always disjoint, and
/// `options` is contained in `{a-(k-1), ..., a+(k-1)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThirdSideSet {
    pub k: u32,
    pub a: u32,
    pub options: BTreeSet<u32>,
    pub degenerate: BTreeSet<u32>,
}

/// An integer triangle with a unit side has its two remaining sides equal.
/// Checks that rule for a concrete side pair; the triple `(1, b, b)` always
/// satisfies the strict triangle inequality. Panics unless `k = 1`.
pub fn unit_side_is_isosceles(k: u32, sides: (u32, u32)) -> bool {
    assert_eq!(k, 1, "the forced-isosceles rule applies to a unit side only");
    sides.0 >= 1 && sides.0 == sides.1
}

/// True when `(x, y, z)` satisfies all three strict triangle inequalities.
fn strict_triangle(x: u64, y: u64, z: u64) -> bool {
    x + y > z && y + z > x && z + x > y
}

/// True when `(x, y, z)` is a degenerate (flat) triple.
fn flat_triangle(x: u64, y: u64, z: u64) -> bool {
    x + y == z || y + z == x || z + x == y
}

/// All positive third sides `b` such that `(k, a, b)` is a strict integer
/// triangle, plus the flat values reported separately.
pub fn third_side_options(k: u32, a: u32) -> ThirdSideSet {
    assert!(k >= 1 && a >= 1);
    let (k64, a64) = (k as u64, a as u64);
    let mut options = BTreeSet::new();
    let mut degenerate = BTreeSet::new();
    // Scan the closed hull [max(1, |a-k|), a+k]; everything outside is
    // neither valid nor flat.
    let lo = a64.abs_diff(k64).max(1);
    let hi = a64 + k64;
    for b in lo..=hi {
        if strict_triangle(k64, a64, b) {
            options.insert(b as u32);
        } else if flat_triangle(k64, a64, b) {
            degenerate.insert(b as u32);
        }
    }
    ThirdSideSet {
        k,
        a,
        options,
        degenerate,
    }
}

/// All integer triangles `(k, a, b)` with one side exactly k, the other two
/// at most `amax` and `a <= b`, strict triangle inequality only. Sorted
/// lexicographically.
pub fn enumerate_triangles(k: u32, amax: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 1..=amax {
        for b in third_side_options(k, a).options {
            if a <= b && b <= amax {
                out.push((k, a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u32]) -> BTreeSet<u32> {
        v.iter().copied().collect()
    }

    #[test]
    fn unit_side_rule() {
        assert!(unit_side_is_isosceles(1, (5, 5)));
        assert!(!unit_side_is_isosceles(1, (5, 6)));
        assert!(unit_side_is_isosceles(1, (1, 1)));
    }

    #[test]
    fn windows_for_small_k() {
        assert_eq!(third_side_options(2, 5).options, set(&[4, 5, 6]));
        assert_eq!(third_side_options(1, 7).options, set(&[7]));
        assert_eq!(third_side_options(3, 1).options, set(&[3]));
        assert_eq!(third_side_options(3, 1).degenerate, set(&[2, 4]));
        assert_eq!(third_side_options(2, 1).options, set(&[2]));
    }

    #[test]
    fn degenerate_values_are_flat_and_disjoint() {
        for k in 1..=6 {
            for a in 1..=40 {
                let t = third_side_options(k, a);
                for &b in &t.degenerate {
                    assert!(flat_triangle(k as u64, a as u64, b as u64));
                    assert!(!t.options.contains(&b));
                }
            }
        }
    }

    #[test]
    fn enumerate_frozen_cases() {
        assert_eq!(
            enumerate_triangles(1, 3),
            vec![(1, 1, 1), (1, 2, 2), (1, 3, 3)]
        );
        assert_eq!(enumerate_triangles(2, 2), vec![(2, 1, 2), (2, 2, 2)]);
        assert_eq!(enumerate_triangles(2, 0), vec![]);
    }

    #[test]
    fn unit_side_enumeration_is_isosceles_only() {
        for (k, a, b) in enumerate_triangles(1, 500) {
            assert_eq!(k, 1);
            assert_eq!(a, b);
        }
        assert_eq!(enumerate_triangles(1, 500).len(), 500);
    }
}
