//! Domain model: labeled six-distance records, canonical forms, shape
//! classification and shape-flag predicates.

use std::fmt;

use thiserror::Error;

use crate::exact::{cm3_int, cm4_int, embed, PlanarEmbedding, Rat, TriangleId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("all six distances must be >= 1")]
    NonPositiveDistance,
    #[error("{op} requires a {required} configuration, got {got}")]
    Precondition {
        op: &'static str,
        required: &'static str,
        got: String,
    },
}

/// Labeled quadrilateral ABCD by its four sides and two diagonals.
///
/// Role labels are fixed by position: `ab`, `bc`, `cd`, `da` are the sides of
/// the closed polyline A-B-C-D and `ac`, `bd` are the diagonals. Relabeling
/// is always an explicit operation ([`QuadDistances::relabel`],
/// [`QuadDistances::canonical_form`]), never implicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadDistances {
    pub ab: u32,
    pub bc: u32,
    pub cd: u32,
    pub da: u32,
    pub ac: u32,
    pub bd: u32,
}

impl QuadDistances {
    pub fn new(ab: u32, bc: u32, cd: u32, da: u32, ac: u32, bd: u32) -> Result<Self, ModelError> {
        let q = QuadDistances {
            ab,
            bc,
            cd,
            da,
            ac,
            bd,
        };
        if q.as_array().contains(&0) {
            return Err(ModelError::NonPositiveDistance);
        }
        Ok(q)
    }

    /// Order: `[ab, bc, cd, da, ac, bd]`. Panics on a zero distance.
    pub fn from_array(a: [u32; 6]) -> Self {
        Self::new(a[0], a[1], a[2], a[3], a[4], a[5]).expect("distances must be positive")
    }

    pub fn as_array(&self) -> [u32; 6] {
        [self.ab, self.bc, self.cd, self.da, self.ac, self.bd]
    }

    /// Distance between points i and j (0 = A .. 3 = D).
    pub fn dist(&self, i: usize, j: usize) -> u32 {
        match (i.min(j), i.max(j)) {
            (0, 1) => self.ab,
            (1, 2) => self.bc,
            (2, 3) => self.cd,
            (0, 3) => self.da,
            (0, 2) => self.ac,
            (1, 3) => self.bd,
            _ => panic!("not a point pair: ({i}, {j})"),
        }
    }

    /// Arbitrary point relabeling: new point i is old point `perm[i]`.
    pub fn relabel(&self, perm: &[usize; 4]) -> Self {
        QuadDistances {
            ab: self.dist(perm[0], perm[1]),
            bc: self.dist(perm[1], perm[2]),
            cd: self.dist(perm[2], perm[3]),
            da: self.dist(perm[3], perm[0]),
            ac: self.dist(perm[0], perm[2]),
            bd: self.dist(perm[1], perm[3]),
        }
    }

    /// Cyclic rotation A-B-C-D -> B-C-D-A. Note the diagonal swap.
    pub fn rotated(&self) -> Self {
        QuadDistances {
            ab: self.bc,
            bc: self.cd,
            cd: self.da,
            da: self.ab,
            ac: self.bd,
            bd: self.ac,
        }
    }

    /// Reflection A-B-C-D -> A-D-C-B.
    pub fn reflected(&self) -> Self {
        QuadDistances {
            ab: self.da,
            bc: self.cd,
            cd: self.bc,
            da: self.ab,
            ac: self.ac,
            bd: self.bd,
        }
    }

    /// The 8 dihedral relabelings of the cyclic side order.
    pub fn orbit(&self) -> [Self; 8] {
        let mut out = [*self; 8];
        let mut r = *self;
        for i in 0..4 {
            out[i] = r;
            out[i + 4] = r.reflected();
            r = r.rotated();
        }
        out
    }

    /// Lexicographically least member of [`QuadDistances::orbit`], comparing
    /// the tuple `(ab, bc, cd, da, ac, bd)`. Idempotent and orbit-constant.
    pub fn canonical_form(&self) -> Self {
        *self.orbit().iter().min().unwrap()
    }

    /// True when `k` occurs among the four sides.
    pub fn has_side(&self, k: u32) -> bool {
        [self.ab, self.bc, self.cd, self.da].contains(&k)
    }

    /// True when `k` occurs among the two diagonals.
    pub fn has_diagonal(&self, k: u32) -> bool {
        self.ac == k || self.bd == k
    }

    pub fn max_distance(&self) -> u32 {
        self.as_array().into_iter().max().unwrap()
    }

    /// The four triangle qualities (16 * area^2), in a fixed order.
    pub fn triangle_qualities(&self) -> [(TriangleId, i128); 4] {
        let sq = |d: u32| (d as i128) * (d as i128);
        let (ab, bc, cd, da, ac, bd) = (
            sq(self.ab),
            sq(self.bc),
            sq(self.cd),
            sq(self.da),
            sq(self.ac),
            sq(self.bd),
        );
        [
            (TriangleId::Abc, cm3_int(ab, ac, bc)),
            (TriangleId::Abd, cm3_int(ab, da, bd)),
            (TriangleId::Acd, cm3_int(ac, da, cd)),
            (TriangleId::Bcd, cm3_int(bc, bd, cd)),
        ]
    }
}

impl fmt::Display for QuadDistances {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{};{},{})",
            self.ab, self.bc, self.cd, self.da, self.ac, self.bd
        )
    }
}

/// One of the four labeled points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointId {
    A,
    B,
    C,
    D,
}

impl PointId {
    pub fn index(self) -> usize {
        match self {
            PointId::A => 0,
            PointId::B => 1,
            PointId::C => 2,
            PointId::D => 3,
        }
    }

    fn from_index(i: usize) -> Self {
        [PointId::A, PointId::B, PointId::C, PointId::D][i]
    }
}

impl fmt::Display for PointId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointId::A => "A",
            PointId::B => "B",
            PointId::C => "C",
            PointId::D => "D",
        })
    }
}

/// Realizability and shape of a labeled six-distance record.
///
/// `Convex` means the four points are in convex position and the labeling
/// A-B-C-D walks the hull in order (the diagonals AC and BD cross).
/// `Concave` means one point lies strictly inside the triangle of the other
/// three; every labeling of such a point set is a simple polygon.
/// `Crossed` covers the remaining realizable case: convex-position points
/// whose labeled polyline self-intersects. Crossed labelings are relabelings
/// of some convex entry and are never cataloged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConfigClass {
    NonMetric { triangle: TriangleId },
    NonPlanar,
    DegenerateCollinear { triple: TriangleId },
    Convex,
    Concave { interior: PointId },
    Crossed,
}

impl ConfigClass {
    /// True for the classes that enter polygon catalogs.
    pub fn is_polygon(&self) -> bool {
        matches!(self, ConfigClass::Convex | ConfigClass::Concave { .. })
    }

    pub fn kind_str(&self) -> &'static str {
        match self {
            ConfigClass::NonMetric { .. } => "non-metric",
            ConfigClass::NonPlanar => "non-planar",
            ConfigClass::DegenerateCollinear { .. } => "degenerate",
            ConfigClass::Convex => "convex",
            ConfigClass::Concave { .. } => "concave",
            ConfigClass::Crossed => "crossed",
        }
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigClass::NonMetric { triangle } => write!(f, "non-metric (triangle {triangle})"),
            ConfigClass::DegenerateCollinear { triple } => {
                write!(f, "degenerate (collinear {triple})")
            }
            ConfigClass::Concave { interior } => write!(f, "concave (interior {interior})"),
            other => f.write_str(other.kind_str()),
        }
    }
}

/// Exact shape classification of a labeled record.
pub fn classify(q: &QuadDistances) -> ConfigClass {
    let qualities = q.triangle_qualities();
    for (id, v) in qualities {
        if v < 0 {
            return ConfigClass::NonMetric { triangle: id };
        }
    }
    if cm4_int(q) != 0 {
        return ConfigClass::NonPlanar;
    }
    for (id, v) in qualities {
        if v == 0 {
            return ConfigClass::DegenerateCollinear { triple: id };
        }
    }
    let e = embed(q).expect("metric and planar records embed");
    // One point strictly inside the triangle of the other three?
    for l in 0..4 {
        let [p, r, s] = match l {
            0 => [1, 2, 3],
            1 => [0, 2, 3],
            2 => [0, 1, 3],
            _ => [0, 1, 2],
        };
        let s0 = e.orient(p, r, s);
        debug_assert_ne!(s0, 0, "no three points are collinear here");
        if e.orient(p, r, l) == s0 && e.orient(r, s, l) == s0 && e.orient(s, p, l) == s0 {
            return ConfigClass::Concave {
                interior: PointId::from_index(l),
            };
        }
    }
    // Convex position: the labeling is hull order exactly when the diagonals
    // properly cross.
    let ac_separates = e.orient(0, 2, 1) * e.orient(0, 2, 3) < 0;
    let bd_separates = e.orient(1, 3, 0) * e.orient(1, 3, 2) < 0;
    if ac_separates && bd_separates {
        ConfigClass::Convex
    } else {
        ConfigClass::Crossed
    }
}

fn require_convex(q: &QuadDistances, op: &'static str) -> Result<(), ModelError> {
    match classify(q) {
        ConfigClass::Convex => Ok(()),
        other => Err(ModelError::Precondition {
            op,
            required: "convex",
            got: other.to_string(),
        }),
    }
}

/// Ptolemy equality test: a convex labeled quadrilateral is cyclic (all four
/// vertices on one circle) exactly when `ac * bd = ab * cd + bc * da`.
pub fn is_cyclic(q: &QuadDistances) -> Result<bool, ModelError> {
    require_convex(q, "is_cyclic")?;
    Ok(ptolemy_lhs(q) == ptolemy_rhs(q))
}

/// Pitot test: a convex quadrilateral has an inscribed circle exactly when
/// `ab + cd = bc + da`. Concave records never get the tangential flag.
pub fn is_tangential(q: &QuadDistances) -> Result<bool, ModelError> {
    require_convex(q, "is_tangential")?;
    Ok(q.ab as u64 + q.cd as u64 == q.bc as u64 + q.da as u64)
}

fn ptolemy_lhs(q: &QuadDistances) -> u64 {
    q.ac as u64 * q.bd as u64
}

fn ptolemy_rhs(q: &QuadDistances) -> u64 {
    q.ab as u64 * q.cd as u64 + q.bc as u64 * q.da as u64
}

/// Diagonal-sum inequality for convex quadrilaterals: the diagonals together
/// are longer than either pair of opposite sides.
pub fn diagonal_sums_exceed_sides(q: &QuadDistances) -> bool {
    let diag = q.ac as u64 + q.bd as u64;
    diag > q.ab as u64 + q.cd as u64 && diag > q.bc as u64 + q.da as u64
}

/// Ptolemy inequality `ac * bd <= ab * cd + bc * da`; equality is the cyclic
/// case.
pub fn ptolemy_inequality_holds(q: &QuadDistances) -> bool {
    ptolemy_lhs(q) <= ptolemy_rhs(q)
}

/// Which opposite-side pair of the labeled quadrilateral is parallel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrapezoidKind {
    None,
    PairBcAd,
    PairAbCd,
    Parallelogram,
}

impl TrapezoidKind {
    pub fn is_trapezoid(self) -> bool {
        self != TrapezoidKind::None
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TrapezoidKind::None => "none",
            TrapezoidKind::PairBcAd => "pair_BC_AD",
            TrapezoidKind::PairAbCd => "pair_AB_CD",
            TrapezoidKind::Parallelogram => "parallelogram",
        }
    }
}

impl fmt::Display for TrapezoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn trapezoid_kind_of(e: &PlanarEmbedding) -> TrapezoidKind {
    let bc_ad = e.cross_of_directions(1, 2, 0, 3) == 0;
    let ab_cd = e.cross_of_directions(0, 1, 3, 2) == 0;
    match (bc_ad, ab_cd) {
        (true, true) => TrapezoidKind::Parallelogram,
        (true, false) => TrapezoidKind::PairBcAd,
        (false, true) => TrapezoidKind::PairAbCd,
        (false, false) => TrapezoidKind::None,
    }
}

/// Exact parallel-pair detection from the embedding. Requires a realizable
/// simple polygon (convex or concave).
pub fn is_trapezoid(q: &QuadDistances) -> Result<TrapezoidKind, ModelError> {
    match classify(q) {
        ConfigClass::Convex | ConfigClass::Concave { .. } => {}
        other => {
            return Err(ModelError::Precondition {
                op: "is_trapezoid",
                required: "convex or concave",
                got: other.to_string(),
            })
        }
    }
    let e = embed(q).expect("realizable");
    Ok(trapezoid_kind_of(&e))
}

/// Residual of the trapezoid diagonal identity on squared distances:
/// `ac^2 + bd^2 - ab^2 - cd^2 - 2 * bc * da`.
/// Zero for every quadrilateral with BC parallel to AD.
pub fn diagonal_identity_residual(
    absq: &Rat,
    cdsq: &Rat,
    acsq: &Rat,
    bdsq: &Rat,
    bc: &Rat,
    da: &Rat,
) -> Rat {
    &(&(acsq + bdsq) - &(absq + cdsq)) - &(&(&Rat::from_int(2) * bc) * da)
}

/// Residual of the trapezoid product identity:
/// `(da + bc) * (ab^2 - cd^2) - (da - bc) * (ac^2 - bd^2)`,
/// the squared-difference form of
/// `(d + c)(a - b)(a + b) - (d - c)(d1 - d2)(d1 + d2)`.
/// Zero for every quadrilateral with BC parallel to AD.
pub fn product_identity_residual(
    absq: &Rat,
    cdsq: &Rat,
    acsq: &Rat,
    bdsq: &Rat,
    bc: &Rat,
    da: &Rat,
) -> Rat {
    &(&(da + bc) * &(absq - cdsq)) - &(&(da - bc) * &(acsq - bdsq))
}

fn squares_of(q: &QuadDistances) -> (Rat, Rat, Rat, Rat) {
    let sq = |d: u32| Rat::from_int(d as i64).square();
    (sq(q.ab), sq(q.cd), sq(q.ac), sq(q.bd))
}

/// Trapezoid diagonal identity `d1^2 + d2^2 = a^2 + b^2 + 2cd` as a residual,
/// with roles a = |AB|, b = |CD|, c = |BC|, d = |AD|, d1 = |AC|, d2 = |BD|.
/// Requires BC parallel to AD; returns exactly zero on every such input.
pub fn trapezoid_diagonal_identity(q: &QuadDistances) -> Result<Rat, ModelError> {
    match is_trapezoid(q)? {
        TrapezoidKind::PairBcAd | TrapezoidKind::Parallelogram => {}
        other => {
            return Err(ModelError::Precondition {
                op: "trapezoid_diagonal_identity",
                required: "trapezoid with BC parallel to AD",
                got: other.to_string(),
            })
        }
    }
    let (absq, cdsq, acsq, bdsq) = squares_of(q);
    Ok(diagonal_identity_residual(
        &absq,
        &cdsq,
        &acsq,
        &bdsq,
        &Rat::from_int(q.bc as i64),
        &Rat::from_int(q.da as i64),
    ))
}

/// Trapezoid product identity `(d+c)(a-b)(a+b) = (d-c)(d1-d2)(d1+d2)` as a
/// residual, same role mapping as [`trapezoid_diagonal_identity`]. Accepts
/// any trapezoid or parallelogram; when the parallel pair is AB/CD the
/// identity is evaluated on the rotated labeling so that the parallel pair
/// plays the BC/AD roles.
pub fn trapezoid_product_identity(q: &QuadDistances) -> Result<Rat, ModelError> {
    let kind = is_trapezoid(q)?;
    let q = match kind {
        TrapezoidKind::PairBcAd | TrapezoidKind::Parallelogram => *q,
        TrapezoidKind::PairAbCd => q.rotated(),
        TrapezoidKind::None => {
            return Err(ModelError::Precondition {
                op: "trapezoid_product_identity",
                required: "trapezoid or parallelogram",
                got: kind.to_string(),
            })
        }
    };
    let (absq, cdsq, acsq, bdsq) = squares_of(&q);
    Ok(product_identity_residual(
        &absq,
        &cdsq,
        &acsq,
        &bdsq,
        &Rat::from_int(q.bc as i64),
        &Rat::from_int(q.da as i64),
    ))
}

/// Role in which a distance value occurs in a labeled quadrilateral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    Side,
    Diagonal,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Side => "side",
            Role::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KRole {
    pub k: u32,
    pub role: Role,
}

/// One catalog row: a canonical labeled record with its classification,
/// shape flags, k-occurrence roles and exact embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    pub canonical: QuadDistances,
    pub class: ConfigClass,
    pub cyclic: bool,
    pub tangential: bool,
    pub trapezoid: TrapezoidKind,
    pub k_roles: Vec<KRole>,
    pub radicand: u64,
    pub embedding: PlanarEmbedding,
}

impl CatalogEntry {
    /// Builds the catalog row for the canonical form of `q`, recording in
    /// which roles `k` occurs. Returns `None` for records that never enter
    /// catalogs (non-metric, non-planar, crossed labelings). Degenerate
    /// collinear records are built; callers decide whether to keep them.
    pub fn build(q: &QuadDistances, k: u32) -> Option<CatalogEntry> {
        let canonical = q.canonical_form();
        let class = classify(&canonical);
        let degenerate = matches!(class, ConfigClass::DegenerateCollinear { .. });
        if !class.is_polygon() && !degenerate {
            return None;
        }
        let embedding = embed(&canonical).expect("classified records embed");
        let convex = class == ConfigClass::Convex;
        let cyclic = convex && ptolemy_lhs(&canonical) == ptolemy_rhs(&canonical);
        let tangential =
            convex && canonical.ab as u64 + canonical.cd as u64 == canonical.bc as u64 + canonical.da as u64;
        let trapezoid = if degenerate {
            TrapezoidKind::None
        } else {
            trapezoid_kind_of(&embedding)
        };
        let mut k_roles = Vec::new();
        if canonical.has_side(k) {
            k_roles.push(KRole { k, role: Role::Side });
        }
        if canonical.has_diagonal(k) {
            k_roles.push(KRole {
                k,
                role: Role::Diagonal,
            });
        }
        if convex {
            debug_assert!(diagonal_sums_exceed_sides(&canonical));
            debug_assert!(ptolemy_inequality_holds(&canonical));
        }
        Some(CatalogEntry {
            canonical,
            class,
            cyclic,
            tangential,
            trapezoid,
            k_roles,
            radicand: embedding.radicand(),
            embedding,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(a: [u32; 6]) -> QuadDistances {
        QuadDistances::from_array(a)
    }

    const FIG_TRAPEZOID: [u32; 6] = [2, 3, 2, 4, 4, 4];
    const RHOMBUS: [u32; 6] = [5, 5, 5, 5, 6, 8];
    const BRAHMAGUPTA: [u32; 6] = [15, 20, 24, 7, 25, 20];
    const DART: [u32; 6] = [10, 10, 17, 17, 16, 9];

    #[test]
    fn classify_frozen_cases() {
        assert_eq!(classify(&quad(FIG_TRAPEZOID)), ConfigClass::Convex);
        assert_eq!(
            classify(&quad([1, 1, 1, 3, 2, 2])),
            ConfigClass::DegenerateCollinear {
                triple: TriangleId::Abc
            }
        );
        assert_eq!(classify(&quad([1, 1, 1, 1, 1, 1])), ConfigClass::NonPlanar);
        assert_eq!(
            classify(&quad([1, 1, 1, 1, 3, 1])),
            ConfigClass::NonMetric {
                triangle: TriangleId::Abc
            }
        );
        assert_eq!(classify(&quad(RHOMBUS)), ConfigClass::Convex);
        assert_eq!(classify(&quad(BRAHMAGUPTA)), ConfigClass::Convex);
    }

    #[test]
    fn classify_concave_dart() {
        // A=(0,0), B=(8,6), C=(16,0), D=(8,15): B sits inside triangle ACD.
        assert_eq!(
            classify(&quad(DART)),
            ConfigClass::Concave {
                interior: PointId::B
            }
        );
    }

    #[test]
    fn classify_crossed_labeling() {
        // The same point set as the (2,3,2,4;4,4) trapezoid, relabeled so the
        // polyline self-intersects.
        assert_eq!(classify(&quad([4, 3, 4, 4, 2, 2])), ConfigClass::Crossed);
    }

    #[test]
    fn classify_is_orbit_invariant() {
        for start in [FIG_TRAPEZOID, RHOMBUS, BRAHMAGUPTA, DART, [4, 3, 4, 4, 2, 2]] {
            let q = quad(start);
            let class0 = classify(&q);
            for img in q.orbit() {
                assert_eq!(classify(&img).kind_str(), class0.kind_str(), "{img}");
            }
        }
    }

    #[test]
    fn canonical_form_frozen_cases() {
        assert_eq!(
            quad(FIG_TRAPEZOID).canonical_form(),
            quad(FIG_TRAPEZOID),
            "already canonical"
        );
        assert_eq!(quad([3, 2, 4, 2, 4, 4]).canonical_form(), quad(FIG_TRAPEZOID));
        assert_eq!(
            quad([5, 5, 5, 5, 5, 5]).canonical_form(),
            quad([5, 5, 5, 5, 5, 5])
        );
    }

    #[test]
    fn canonical_form_is_idempotent_and_orbit_constant() {
        for start in [FIG_TRAPEZOID, RHOMBUS, BRAHMAGUPTA, DART] {
            let q = quad(start);
            let c = q.canonical_form();
            assert_eq!(c.canonical_form(), c);
            for img in q.orbit() {
                assert_eq!(img.canonical_form(), c);
            }
        }
    }

    #[test]
    fn cyclic_flags() {
        assert_eq!(is_cyclic(&quad(FIG_TRAPEZOID)), Ok(true)); // 4*4 = 2*2 + 3*4
        assert_eq!(is_cyclic(&quad(BRAHMAGUPTA)), Ok(true)); // 25*20 = 15*24 + 20*7
        assert_eq!(is_cyclic(&quad(RHOMBUS)), Ok(false));
        assert!(matches!(
            is_cyclic(&quad([3, 3, 3, 3, 3, 3])),
            Err(ModelError::Precondition { .. })
        ));
    }

    #[test]
    fn tangential_flags() {
        assert_eq!(is_tangential(&quad(FIG_TRAPEZOID)), Ok(false)); // 2+2 vs 3+4
        assert_eq!(is_tangential(&quad(RHOMBUS)), Ok(true));
        assert_eq!(is_tangential(&quad(BRAHMAGUPTA)), Ok(false)); // 39 vs 27
    }

    #[test]
    fn no_realizable_5_5_3_3_kite_at_small_bounds() {
        // Pitot would hold by symmetry, but no diagonal pair makes the kite
        // realizable, so the tangential example stays vacuous.
        for m in 1..=20 {
            for n in 1..=20 {
                let q = quad([5, 5, 3, 3, m, n]);
                assert_ne!(classify(&q), ConfigClass::Convex, "{q}");
            }
        }
    }

    #[test]
    fn trapezoid_kinds() {
        assert_eq!(is_trapezoid(&quad(FIG_TRAPEZOID)), Ok(TrapezoidKind::PairBcAd));
        // Rotating the labeling moves the parallel pair.
        assert_eq!(
            is_trapezoid(&quad([3, 2, 4, 2, 4, 4])),
            Ok(TrapezoidKind::PairAbCd)
        );
        assert_eq!(is_trapezoid(&quad(RHOMBUS)), Ok(TrapezoidKind::Parallelogram));
        assert_eq!(
            is_trapezoid(&quad([3, 4, 3, 4, 5, 5])),
            Ok(TrapezoidKind::Parallelogram)
        );
        assert_eq!(is_trapezoid(&quad(BRAHMAGUPTA)), Ok(TrapezoidKind::None));
        assert!(is_trapezoid(&quad([1, 1, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn diagonal_identity_on_integer_witnesses() {
        assert_eq!(
            trapezoid_diagonal_identity(&quad(FIG_TRAPEZOID)),
            Ok(Rat::zero())
        );
        assert_eq!(trapezoid_diagonal_identity(&quad(RHOMBUS)), Ok(Rat::zero()));
        assert!(matches!(
            trapezoid_diagonal_identity(&quad(BRAHMAGUPTA)),
            Err(ModelError::Precondition { .. })
        ));
    }

    #[test]
    fn product_identity_on_integer_witnesses() {
        assert_eq!(
            trapezoid_product_identity(&quad(FIG_TRAPEZOID)),
            Ok(Rat::zero())
        );
        assert_eq!(trapezoid_product_identity(&quad(RHOMBUS)), Ok(Rat::zero()));
        // Rotated labeling is accepted and still evaluates to zero.
        assert_eq!(
            trapezoid_product_identity(&quad([3, 2, 4, 2, 4, 4])),
            Ok(Rat::zero())
        );
        assert!(matches!(
            trapezoid_product_identity(&quad(BRAHMAGUPTA)),
            Err(ModelError::Precondition { .. })
        ));
    }

    #[test]
    fn convex_inequalities_hold_on_witnesses() {
        for a in [FIG_TRAPEZOID, RHOMBUS, BRAHMAGUPTA] {
            let q = quad(a);
            assert!(diagonal_sums_exceed_sides(&q), "{q}");
            assert!(ptolemy_inequality_holds(&q), "{q}");
        }
    }

    #[test]
    fn entry_build_flags() {
        let e = CatalogEntry::build(&quad([3, 2, 4, 2, 4, 4]), 2).unwrap();
        assert_eq!(e.canonical, quad(FIG_TRAPEZOID));
        assert_eq!(e.class, ConfigClass::Convex);
        assert!(e.cyclic);
        assert!(!e.tangential);
        assert_eq!(e.trapezoid, TrapezoidKind::PairBcAd);
        assert_eq!(e.radicand, 15);
        assert_eq!(
            e.k_roles,
            vec![KRole {
                k: 2,
                role: Role::Side
            }]
        );

        assert!(CatalogEntry::build(&quad([1, 1, 1, 1, 1, 1]), 1).is_none());
        assert!(CatalogEntry::build(&quad([4, 3, 4, 4, 2, 2]), 2).is_none());
    }
}
