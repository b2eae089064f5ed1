use std::fmt;

use super::cm::{cm3_int, cm4_int};
use super::rat::Rat;
use super::surd::{sqrt_decompose, Surd};
use crate::model::QuadDistances;

/// Names a triangle of the labeled quadrilateral ABCD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleId {
    Abc,
    Abd,
    Acd,
    Bcd,
}

impl fmt::Display for TriangleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleId::Abc => "ABC",
            TriangleId::Abd => "ABD",
            TriangleId::Acd => "ACD",
            TriangleId::Bcd => "BCD",
        };
        f.write_str(s)
    }
}

/// Reason a six-distance record admits no planar embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotRealizable {
    /// The named triangle violates the (non-strict) triangle inequality.
    NonMetric(TriangleId),
    /// All triangles are metric but the four points are not coplanar.
    NonPlanar,
}

impl fmt::Display for NotRealizable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRealizable::NonMetric(t) => write!(f, "triangle {t} violates the triangle inequality"),
            NotRealizable::NonPlanar => write!(f, "not realizable by coplanar points"),
        }
    }
}

/// An exact list of plane points whose coordinates live in one quadratic
/// extension: point i is `(x_i, yc_i * sqrt(radicand))` with `x_i`, `yc_i`
/// rational. A radicand of 1 means every coordinate is rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarPoints {
    xs: Vec<Rat>,
    ycs: Vec<Rat>,
    radicand: u64,
}

/// Embedding of a labeled quadrilateral: exactly four points, A at the
/// origin, B on the positive x-axis, C in the closed upper half-plane.
pub type PlanarEmbedding = PlanarPoints;

impl PlanarPoints {
    pub fn from_parts(xs: Vec<Rat>, ycs: Vec<Rat>, radicand: u64) -> Self {
        assert_eq!(xs.len(), ycs.len());
        assert!(radicand >= 1);
        debug_assert_eq!(sqrt_decompose(radicand).0, 1, "radicand must be squarefree");
        PlanarPoints { xs, ycs, radicand }
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// The shared squarefree radicand (1 for a fully rational configuration).
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn x(&self, i: usize) -> &Rat {
        &self.xs[i]
    }

    pub fn y_coeff(&self, i: usize) -> &Rat {
        &self.ycs[i]
    }

    /// Point i as a pair of surds over the shared radicand.
    pub fn point(&self, i: usize) -> (Surd, Surd) {
        (
            Surd::from_rat(self.xs[i].clone()),
            Surd::new(Rat::zero(), self.ycs[i].clone(), self.radicand),
        )
    }

    /// Exact squared distance between points i and j; always rational.
    pub fn squared_distance(&self, i: usize, j: usize) -> Rat {
        let dx = &self.xs[i] - &self.xs[j];
        let dyc = &self.ycs[i] - &self.ycs[j];
        &dx.square() + &(&dyc.square() * &Rat::from_int(self.radicand as i64))
    }

    /// Exact orientation of the ordered triple (i, j, k): the sign of the
    /// cross product (j - i) x (k - i).
    pub fn orient(&self, i: usize, j: usize, k: usize) -> i8 {
        // Both y terms carry the same sqrt(radicand) factor, so the sign is
        // decided by the rational part alone.
        let lhs = &(&self.xs[j] - &self.xs[i]) * &(&self.ycs[k] - &self.ycs[i]);
        let rhs = &(&self.ycs[j] - &self.ycs[i]) * &(&self.xs[k] - &self.xs[i]);
        (&lhs - &rhs).signum()
    }

    /// Sign of the cross product of the directions i->j and k->l.
    /// Zero means the two segments are parallel (or degenerate).
    pub fn cross_of_directions(&self, i: usize, j: usize, k: usize, l: usize) -> i8 {
        let lhs = &(&self.xs[j] - &self.xs[i]) * &(&self.ycs[l] - &self.ycs[k]);
        let rhs = &(&self.ycs[j] - &self.ycs[i]) * &(&self.xs[l] - &self.xs[k]);
        (&lhs - &rhs).signum()
    }

    /// Extends the configuration with one more point.
    pub fn with_point(&self, x: Rat, yc: Rat) -> PlanarPoints {
        let mut xs = self.xs.clone();
        let mut ycs = self.ycs.clone();
        xs.push(x);
        ycs.push(yc);
        PlanarPoints {
            xs,
            ycs,
            radicand: self.radicand,
        }
    }
}

/// Constructs an exact planar embedding of the labeled quadrilateral, or
/// reports why none exists. `NotRealizable` is a normal outcome here, not a
/// failure of the routine.
///
/// Placement: A = (0,0), B = (|AB|, 0), C in the closed upper half-plane.
/// The reflection ambiguity for D is resolved by whichever sign reproduces
/// |CD|; when both do, the non-negative branch is kept.
pub fn embed(q: &QuadDistances) -> Result<PlanarEmbedding, NotRealizable> {
    let absq = (q.ab as i128) * (q.ab as i128);
    let bcsq = (q.bc as i128) * (q.bc as i128);
    let cdsq = (q.cd as i128) * (q.cd as i128);
    let dasq = (q.da as i128) * (q.da as i128);
    let acsq = (q.ac as i128) * (q.ac as i128);
    let bdsq = (q.bd as i128) * (q.bd as i128);

    let checks = [
        (TriangleId::Abc, cm3_int(absq, acsq, bcsq)),
        (TriangleId::Abd, cm3_int(absq, dasq, bdsq)),
        (TriangleId::Acd, cm3_int(acsq, dasq, cdsq)),
        (TriangleId::Bcd, cm3_int(bcsq, bdsq, cdsq)),
    ];
    for (id, t) in checks {
        if t < 0 {
            return Err(NotRealizable::NonMetric(id));
        }
    }
    if cm4_int(q) != 0 {
        return Err(NotRealizable::NonPlanar);
    }

    let t_abc = checks[0].1;
    let t_abd = checks[1].1;

    let two_ab = Rat::from_int(2 * q.ab as i64);
    let x_c = Rat::from_bigint((absq + acsq - bcsq).into()) / &two_ab;
    let x_d = Rat::from_bigint((absq + dasq - bdsq).into()) / &two_ab;

    let (m_c, s_c) = sqrt_decompose(t_abc as u64);
    let (m_d, s_d) = sqrt_decompose(t_abd as u64);
    let radicand = if s_c >= 2 {
        s_c
    } else if s_d >= 2 {
        s_d
    } else {
        1
    };
    // Planarity forces both heights into the same quadratic extension.
    if (s_c >= 2 && s_d >= 2 && s_c != s_d)
        || (s_c == 1 && m_c > 0 && s_d >= 2)
        || (s_d == 1 && m_d > 0 && s_c >= 2)
    {
        debug_assert!(false, "cm4 = 0 should force a common radicand");
        return Err(NotRealizable::NonPlanar);
    }

    let yc_c = Rat::from_int(m_c as i64) / &two_ab;
    let yc_d_mag = Rat::from_int(m_d as i64) / &two_ab;

    // Squared heights as rationals.
    let y_c_sq = Rat::from_bigint(t_abc.into()) / two_ab.square();
    let y_d_sq = Rat::from_bigint(t_abd.into()) / two_ab.square();

    // |CD|^2 with the positive D branch is base - 2*yC*yD, with the negative
    // branch base + 2*yC*yD. Planarity makes one of them match exactly.
    let base = &(&x_c - &x_d).square() + &(&y_c_sq + &y_d_sq);
    let residual = &base - &Rat::from_bigint(cdsq.into());
    let cross_sq = &(&Rat::from_int(4) * &y_c_sq) * &y_d_sq;
    if residual.square() != cross_sq {
        debug_assert!(false, "cm4 = 0 should force |CD| to match one branch");
        return Err(NotRealizable::NonPlanar);
    }
    let yc_d = if residual.signum() >= 0 {
        yc_d_mag
    } else {
        -yc_d_mag
    };

    let pts = PlanarPoints::from_parts(
        vec![Rat::zero(), Rat::from_int(q.ab as i64), x_c, x_d],
        vec![Rat::zero(), Rat::zero(), yc_c, yc_d],
        radicand,
    );
    debug_assert!({
        let want = [absq, bcsq, cdsq, dasq, acsq, bdsq];
        let got = [
            pts.squared_distance(0, 1),
            pts.squared_distance(1, 2),
            pts.squared_distance(2, 3),
            pts.squared_distance(3, 0),
            pts.squared_distance(0, 2),
            pts.squared_distance(1, 3),
        ];
        want.iter()
            .zip(got.iter())
            .all(|(w, g)| &Rat::from_bigint((*w).into()) == g)
    });
    Ok(pts)
}
