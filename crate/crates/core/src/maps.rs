//! Point maps (rotations, circle inversions, piecewise compositions, finite
//! tables), their action on sets, and strongly proximal continuity checks.

use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::proximity::{all_subsets, Nearness};
use crate::set::PointSet;
use crate::spaces::{FiniteSpace, Grid, GridRegion, Shape, Space};
use serde::{Deserialize, Serialize};

/// One branch of a piecewise map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapPiece {
    pub domain: Shape,
    pub map: PointMap,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum PointMap {
    Identity,
    /// Counter-clockwise rotation about `center`.
    Rotation {
        center: Point2,
        degrees: f64,
    },
    /// Inversion in the circle of the given center and radius, applied on
    /// `domain` (everywhere when absent) and the identity elsewhere.
    Inversion {
        center: Point2,
        radius: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        domain: Option<Shape>,
    },
    /// Applies `maps` in order: the first entry acts first.
    Composition {
        maps: Vec<PointMap>,
    },
    /// The first piece whose domain contains the point acts; identity
    /// outside every domain.
    Piecewise {
        pieces: Vec<MapPiece>,
    },
    /// Point `i` of a finite space goes to point `images[i]`.
    Table {
        images: Vec<usize>,
    },
    /// Whole-pixel shift on a grid.
    PixelTranslation {
        dx: i64,
        dy: i64,
    },
}

/// Raw inversion formula, no domain handling.
pub fn invert_point(center: Point2, radius: f64, p: Point2) -> Result<Point2> {
    let dx = p.x - center.x;
    let dy = p.y - center.y;
    let d2 = dx * dx + dy * dy;
    if d2 == 0.0 {
        return Err(Error::Pole { x: p.x, y: p.y });
    }
    let k2 = radius * radius;
    Ok(Point2::new(center.x + k2 * dx / d2, center.y + k2 * dy / d2))
}

pub fn rotate_point(center: Point2, degrees: f64, p: Point2) -> Point2 {
    let (s, c) = degrees.to_radians().sin_cos();
    let dx = p.x - center.x;
    let dy = p.y - center.y;
    Point2::new(center.x + c * dx - s * dy, center.y + s * dx + c * dy)
}

impl PointMap {
    pub fn rotation(center: Point2, degrees: f64) -> Self {
        PointMap::Rotation { center, degrees }
    }

    pub fn inversion(center: Point2, radius: f64) -> Self {
        PointMap::Inversion {
            center,
            radius,
            domain: None,
        }
    }

    pub fn masked_inversion(center: Point2, radius: f64, domain: Shape) -> Self {
        PointMap::Inversion {
            center,
            radius,
            domain: Some(domain),
        }
    }

    pub fn compose(maps: Vec<PointMap>) -> Self {
        PointMap::Composition { maps }
    }

    /// Evaluate on a plane point.
    pub fn apply_point(&self, p: Point2) -> Result<Point2> {
        match self {
            PointMap::Identity => Ok(p),
            PointMap::Rotation { center, degrees } => Ok(rotate_point(*center, *degrees, p)),
            PointMap::Inversion { center, radius, domain } => match domain {
                Some(d) if !d.contains(p) => Ok(p),
                _ => invert_point(*center, *radius, p),
            },
            PointMap::Composition { maps } => maps.iter().try_fold(p, |q, m| m.apply_point(q)),
            PointMap::Piecewise { pieces } => match pieces.iter().find(|pc| pc.domain.contains(p)) {
                Some(pc) => pc.map.apply_point(p),
                None => Ok(p),
            },
            PointMap::Table { .. } | PointMap::PixelTranslation { .. } => {
                Err(Error::Invalid("table and pixel maps do not act on plane points".into()))
            }
        }
    }

    /// Global inverse, when the map is a bijection of the plane (minus
    /// inversion poles).
    pub fn inverse(&self) -> Option<PointMap> {
        match self {
            PointMap::Identity => Some(PointMap::Identity),
            PointMap::Rotation { center, degrees } => Some(PointMap::rotation(*center, -degrees)),
            PointMap::Inversion {
                center,
                radius,
                domain: None,
            } => Some(PointMap::inversion(*center, *radius)),
            PointMap::Composition { maps } => maps
                .iter()
                .rev()
                .map(PointMap::inverse)
                .collect::<Option<Vec<_>>>()
                .map(PointMap::compose),
            PointMap::PixelTranslation { dx, dy } => Some(PointMap::PixelTranslation { dx: -dx, dy: -dy }),
            PointMap::Table { images } => {
                let mut inv = vec![usize::MAX; images.len()];
                for (i, &j) in images.iter().enumerate() {
                    if j >= inv.len() || inv[j] != usize::MAX {
                        return None;
                    }
                    inv[j] = i;
                }
                Some(PointMap::Table { images: inv })
            }
            PointMap::Inversion { domain: Some(_), .. } | PointMap::Piecewise { .. } => None,
        }
    }

    /// Image of a grid region, computed by inverse mapping of pixel
    /// centers from `src` into `dst`.
    pub fn apply_region(&self, src: &Grid, r: &GridRegion, dst: &Grid) -> Result<GridRegion> {
        match self {
            PointMap::Identity if src == dst => Ok(r.clone()),
            PointMap::PixelTranslation { dx, dy } => {
                if (src.width(), src.height()) != (dst.width(), dst.height()) {
                    return Err(Error::Invalid("pixel translation needs equal grid sizes".into()));
                }
                Ok(r.translated(*dx, *dy))
            }
            PointMap::Table { .. } => Err(Error::Invalid("table maps act on finite spaces".into())),
            PointMap::Inversion {
                center,
                radius,
                domain: Some(domain),
            } => piecewise_region(
                &[MapPiece {
                    domain: domain.clone(),
                    map: PointMap::inversion(*center, *radius),
                }],
                src,
                r,
                dst,
            ),
            PointMap::Piecewise { pieces } => piecewise_region(pieces, src, r, dst),
            PointMap::Composition { maps } if self.inverse().is_none() => {
                let mut cur = maps.first().map_or(Ok(r.clone()), |m| m.apply_region(src, r, dst))?;
                for m in maps.iter().skip(1) {
                    cur = m.apply_region(dst, &cur, dst)?;
                }
                Ok(cur)
            }
            _ => {
                let inv = self
                    .inverse()
                    .ok_or_else(|| Error::NonInvertible(format!("{self:?}")))?;
                Ok(pull_back(src, r, dst, |q| inv.apply_point(q).ok(), |_| true))
            }
        }
    }
}

/// Output pixel `p` is set iff `preimage(center p)` exists, passes `keep`
/// and falls in a source pixel of `r`.
fn pull_back(
    src: &Grid,
    r: &GridRegion,
    dst: &Grid,
    preimage: impl Fn(Point2) -> Option<Point2>,
    keep: impl Fn(Point2) -> bool,
) -> GridRegion {
    GridRegion::from_fn(dst.width(), dst.height(), |x, y| {
        let c = dst.pixel_center(dst.index(x, y));
        match preimage(c) {
            Some(q) if keep(q) => src.pixel_at(q).is_some_and(|i| r.get(i)),
            _ => false,
        }
    })
}

fn piecewise_region(pieces: &[MapPiece], src: &Grid, r: &GridRegion, dst: &Grid) -> Result<GridRegion> {
    let mut out = dst.empty_region();
    for (k, piece) in pieces.iter().enumerate() {
        let inv = piece
            .map
            .inverse()
            .ok_or_else(|| Error::NonInvertible(format!("piece {k} is not invertible")))?;
        let earlier = &pieces[..k];
        let img = pull_back(
            src,
            r,
            dst,
            |q| inv.apply_point(q).ok(),
            |q| piece.domain.contains(q) && !earlier.iter().any(|e| e.domain.contains(q)),
        );
        out = out.or(&img);
    }
    let rest = pull_back(src, r, dst, Some, |q| !pieces.iter().any(|e| e.domain.contains(q)));
    Ok(out.or(&rest))
}

/// A map acting on the sets of one space with values in another.
pub trait SetMap<X: Space, Y: Space> {
    fn image(&self, x: &X, y: &Y, s: &X::Set) -> Result<Y::Set>;
    fn is_homeomorphism(&self, x: &X, y: &Y) -> Result<bool>;
}

pub(crate) fn table_of(map: &PointMap, x: &FiniteSpace, y: &FiniteSpace) -> Result<Vec<usize>> {
    let images = match map {
        PointMap::Identity => (0..x.len()).collect(),
        PointMap::Table { images } => images.clone(),
        other => return Err(Error::Invalid(format!("{other:?} does not act on finite spaces"))),
    };
    if images.len() != x.len() {
        return Err(Error::Invalid(format!(
            "table has {} entries for a {}-point space",
            images.len(),
            x.len()
        )));
    }
    if let Some(&bad) = images.iter().find(|&&j| j >= y.len()) {
        return Err(Error::Invalid(format!("table image {bad} outside the target space")));
    }
    Ok(images)
}

pub(crate) fn table_image(table: &[usize], s: PointSet) -> PointSet {
    PointSet::from_indices(s.iter().map(|i| table[i]))
}

impl SetMap<FiniteSpace, FiniteSpace> for PointMap {
    fn image(&self, x: &FiniteSpace, y: &FiniteSpace, s: &PointSet) -> Result<PointSet> {
        Ok(table_image(&table_of(self, x, y)?, *s))
    }

    fn is_homeomorphism(&self, x: &FiniteSpace, y: &FiniteSpace) -> Result<bool> {
        is_homeomorphism_witness(self, x, y)
    }
}

impl SetMap<Grid, Grid> for PointMap {
    fn image(&self, x: &Grid, y: &Grid, s: &GridRegion) -> Result<GridRegion> {
        self.apply_region(x, s, y)
    }

    /// Only lattice symmetries count: the identity and whole-pixel shifts.
    fn is_homeomorphism(&self, x: &Grid, y: &Grid) -> Result<bool> {
        let same_lattice = (x.width(), x.height()) == (y.width(), y.height());
        Ok(same_lattice && matches!(self, PointMap::Identity | PointMap::PixelTranslation { .. }))
    }
}

/// Exhaustive homeomorphism test for a finite table map.
pub fn is_homeomorphism_witness(f: &PointMap, x: &FiniteSpace, y: &FiniteSpace) -> Result<bool> {
    let table = table_of(f, x, y)?;
    if x.len() != y.len() || table_image(&table, x.full()) != y.full() {
        return Ok(false);
    }
    let forward = x.opens().iter().all(|o| y.is_open(&table_image(&table, *o)));
    let backward = y.opens().iter().all(|o| {
        let pre = PointSet::from_indices((0..x.len()).filter(|&i| o.contains(table[i])));
        x.is_open(&pre)
    });
    Ok(forward && backward)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SpcWitness {
    /// Family members `a`, `b`.
    Pair { a: usize, b: usize },
    /// Point `point` against family member `set`.
    PointSet { point: usize, set: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpcReport {
    pub pairs: usize,
    pub near_pairs: usize,
    pub spc: bool,
    pub spc_witness: Option<SpcWitness>,
    /// Strong proximal equivalence: nearness is preserved and reflected.
    pub spe: bool,
    pub spe_witness: Option<SpcWitness>,
}

/// Check `A δ̂_X B ⇒ f(A) δ̂_Y f(B)` (and the converse for s.p.e.) over all
/// ordered pairs of `family`.
pub fn spc_check<X, Y, RX, RY, F>(
    f: &F,
    rel_x: &RX,
    space_x: &X,
    rel_y: &RY,
    space_y: &Y,
    family: &[X::Set],
) -> Result<SpcReport>
where
    X: Space,
    Y: Space,
    RX: Nearness<X> + ?Sized,
    RY: Nearness<Y> + ?Sized,
    F: SetMap<X, Y> + ?Sized,
{
    let images = family
        .iter()
        .map(|s| f.image(space_x, space_y, s))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SpcReport {
        pairs: 0,
        near_pairs: 0,
        spc: true,
        spc_witness: None,
        spe: true,
        spe_witness: None,
    };
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            report.pairs += 1;
            let before = rel_x.near(space_x, a, b);
            let after = rel_y.near(space_y, &images[i], &images[j]);
            record(&mut report, before, after, SpcWitness::Pair { a: i, b: j });
        }
    }
    Ok(report)
}

fn record(report: &mut SpcReport, before: bool, after: bool, w: SpcWitness) {
    if before {
        report.near_pairs += 1;
        if !after && report.spc {
            report.spc = false;
            report.spc_witness = Some(w);
        }
    }
    if before != after && report.spe {
        report.spe = false;
        report.spe_witness = Some(w);
    }
}

/// Exhaustive check on a finite space: every pair of subsets, plus every
/// point-to-subset pair under point nearness. Witness indices refer to the
/// subset bitmask.
pub fn spc_exhaustive<RX, RY>(
    f: &PointMap,
    rel_x: &RX,
    space_x: &FiniteSpace,
    rel_y: &RY,
    space_y: &FiniteSpace,
) -> Result<SpcReport>
where
    RX: Nearness<FiniteSpace> + ?Sized,
    RY: Nearness<FiniteSpace> + ?Sized,
{
    let subsets = all_subsets(space_x)?;
    let mut report = spc_check(f, rel_x, space_x, rel_y, space_y, &subsets)?;
    let table = table_of(f, space_x, space_y)?;
    for a in &subsets {
        let fa = table_image(&table, *a);
        for (x, &fx) in table.iter().enumerate() {
            let before = rel_x.near_point(space_x, x, a);
            let after = rel_y.near_point(space_y, fx, &fa);
            record(
                &mut report,
                before,
                after,
                SpcWitness::PointSet {
                    point: x,
                    set: a.0 as usize,
                },
            );
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenMapReport {
    pub verdicts: Vec<bool>,
    pub all_passed: bool,
}

/// Whether `f` carries the given open sets of a finite space to open sets.
pub fn open_map_check_finite(
    f: &PointMap,
    x: &FiniteSpace,
    y: &FiniteSpace,
    samples: &[PointSet],
) -> Result<OpenMapReport> {
    if let Some(i) = samples.iter().position(|s| !x.is_open(s)) {
        return Err(Error::NotOpen(i));
    }
    let table = table_of(f, x, y)?;
    let verdicts: Vec<bool> = samples.iter().map(|s| y.is_open(&table_image(&table, *s))).collect();
    Ok(OpenMapReport {
        all_passed: verdicts.iter().all(|&v| v),
        verdicts,
    })
}

/// Approximate openness of region images on grids: an image passes when it
/// is nonempty with nonempty interior wherever the sample has them, and
/// differs from the interior of its closure only inside its one-pixel
/// boundary band.
pub fn open_map_check_grid(f: &PointMap, x: &Grid, y: &Grid, samples: &[GridRegion]) -> Result<OpenMapReport> {
    if let Some(i) = samples.iter().position(|s| !x.is_open(s)) {
        return Err(Error::NotOpen(i));
    }
    let verdicts = samples
        .iter()
        .map(|s| {
            let img = f.apply_region(x, s, y)?;
            if s.is_empty() {
                return Ok(img.is_empty());
            }
            let int_img = y.interior(&img);
            if img.is_empty() || (!x.interior(s).is_empty() && int_img.is_empty()) {
                return Ok(false);
            }
            let regular = y.interior(&y.closure(&img));
            let band = y.closure(&img).and_not(&int_img);
            let diff = regular.and_not(&img).or(&img.and_not(&regular));
            Ok(diff.is_subset(&band))
        })
        .collect::<Result<Vec<bool>>>()?;
    Ok(OpenMapReport {
        all_passed: verdicts.iter().all(|&v| v),
        verdicts,
    })
}
