//! Rasterized versions of the planar figures used throughout the examples
//! and tests: triangle rotations, the inversion family, tangent and
//! overlapping disks, the tessellation with color descriptors.

use crate::descriptive::{Cell, DescriptorSpace, Tessellation, TimedFamily, TimedRegion};
use crate::error::{Error, Result};
use crate::geom::{Point2, Window};
use crate::maps::{spc_check, MapPiece, PointMap, SpcReport};
use crate::proximity::StrongProximityKind;
use crate::spaces::{rasterize, Grid, GridRegion, Shape};

fn p(x: f64, y: f64) -> Point2 {
    Point2::new(x, y)
}

/// A grid together with named shapes drawn on it.
#[derive(Clone, Debug, PartialEq)]
pub struct PlanarScene {
    pub grid: Grid,
    pub shapes: Vec<(String, Shape)>,
}

impl PlanarScene {
    fn new(window: Window, width: usize, height: usize, shapes: Vec<(&str, Shape)>) -> Self {
        PlanarScene {
            grid: Grid::new(window, width, height).expect("fixture grid is valid"),
            shapes: shapes.into_iter().map(|(n, s)| (n.to_string(), s)).collect(),
        }
    }

    pub fn shape(&self, name: &str) -> Result<&Shape> {
        self.shapes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::Invalid(format!("no shape named {name}")))
    }

    pub fn region(&self, name: &str) -> Result<GridRegion> {
        let g = &self.grid;
        rasterize(self.shape(name)?, g.window(), g.width(), g.height())
    }

    pub fn regions(&self) -> Result<Vec<GridRegion>> {
        self.shapes
            .iter()
            .map(|(_, s)| rasterize(s, self.grid.window(), self.grid.width(), self.grid.height()))
            .collect()
    }
}

/// Triangle with base `[x0, x0 + 3]` on the axis and apex height 2.4.
pub fn base_triangle(x0: f64) -> Shape {
    Shape::triangle(p(x0, 0.0), p(x0 + 3.0, 0.0), p(x0 + 1.5, 2.4))
}

/// Two adjacent triangles; `A2` turned by 80° about the shared vertex.
pub fn fig1_1() -> PlanarScene {
    PlanarScene::new(
        Window::new(-1.0, -1.0, 7.0, 4.0),
        160,
        100,
        vec![("A1", base_triangle(0.0)), ("A2", base_triangle(3.0))],
    )
}

pub fn fig1_1_rotation() -> PointMap {
    PointMap::rotation(p(3.0, 0.0), 80.0)
}

/// Three adjacent triangles.
pub fn fig2() -> PlanarScene {
    PlanarScene::new(
        Window::new(-1.0, -1.0, 10.0, 5.0),
        220,
        120,
        vec![
            ("A1", base_triangle(0.0)),
            ("A2", base_triangle(3.0)),
            ("A3", base_triangle(6.0)),
        ],
    )
}

/// The piecewise rotation map on the triangle strip: points with
/// `3k ≤ x ≤ 3k + 3` undergo `R(x_k)` first, then `R(x_{k-1})`, down to
/// `R(x_1)`, where `x_i = (3i, 0)`. The triangles then fan around `x_1`.
pub fn fig2_map(triangles: usize) -> PointMap {
    let pieces = (1..triangles)
        .map(|k| {
            let x = 3.0 * k as f64;
            MapPiece {
                domain: Shape::rect(p(x, -1.0e3), p(x + 3.0, 1.0e3)),
                map: PointMap::compose(
                    (1..=k)
                        .rev()
                        .map(|i| PointMap::rotation(p(3.0 * i as f64, 0.0), 80.0))
                        .collect(),
                ),
            }
        })
        .collect();
    PointMap::Piecewise { pieces }
}

/// Open and closed disks along the axis, before inversion.
pub fn fig3() -> PlanarScene {
    PlanarScene::new(
        Window::new(-2.5, -2.5, 10.5, 2.5),
        520,
        200,
        vec![
            ("A1", Shape::closed_disk(p(0.0, 0.0), 1.5)),
            ("A2", Shape::open_disk(p(2.5, 0.0), 1.5)),
            ("A3", Shape::closed_disk(p(5.0, 0.0), 1.5)),
            ("A4", Shape::open_disk(p(7.5, 0.0), 1.5)),
        ],
    )
}

pub fn fig3_output_grid() -> Grid {
    Grid::new(Window::new(-2.5, -2.5, 2.5, 2.5), 800, 800).expect("fixture grid is valid")
}

/// `i3 ∘ i2 ∘ i1`, each inversion acting only on its annular domain.
pub fn inversion_map() -> PointMap {
    let i1 = PointMap::masked_inversion(
        p(0.0, 0.0),
        2.0,
        Shape::complement(Shape::closed_disk(p(0.0, 0.0), 2.0)),
    );
    let i2 = PointMap::masked_inversion(
        p(1.5, 0.0),
        0.8,
        Shape::difference(
            Shape::closed_disk(p(0.0, 0.0), 2.3),
            Shape::closed_disk(p(1.5, 0.0), 0.8),
        ),
    );
    let i3 = PointMap::masked_inversion(
        p(0.535, 0.0),
        0.18,
        Shape::difference(
            Shape::closed_disk(p(1.5, 0.0), 0.8),
            Shape::closed_disk(p(0.635, 0.0), 0.3),
        ),
    );
    PointMap::compose(vec![i1, i2, i3])
}

/// s.p.c. of [`inversion_map`] on the disk family, from mixed overlap to
/// interior overlap.
pub fn inversion_example() -> Result<SpcReport> {
    let scene = fig3();
    let family = scene.regions()?;
    spc_check(
        &inversion_map(),
        &StrongProximityKind::mixed_overlap(),
        &scene.grid,
        &StrongProximityKind::interior_overlap(),
        &fig3_output_grid(),
        &family,
    )
}

/// Two overlapping closed disks.
pub fn fig4() -> PlanarScene {
    PlanarScene::new(
        Window::new(-3.5, -1.0, 1.0, 2.0),
        180,
        120,
        vec![
            ("X1", Shape::closed_disk(p(-2.46, 0.5), 0.8)),
            ("X2", Shape::closed_disk(p(-0.8, 0.5), 1.3)),
        ],
    )
}

/// Two closed disks touching in the single pixel centered at
/// `(72.5, 100.5)`; `E` is their union.
pub fn fig5() -> PlanarScene {
    let d1 = Shape::closed_disk(p(40.5, 100.5), 32.0);
    let d2 = Shape::closed_disk(p(120.5, 100.5), 48.0);
    PlanarScene::new(
        Window::new(0.0, 0.0, 200.0, 200.0),
        200,
        200,
        vec![
            ("D1", d1.clone()),
            ("D2", d2.clone()),
            ("E", Shape::union(vec![d1, d2])),
        ],
    )
}

/// Two disjoint closed disks.
pub fn fig7() -> PlanarScene {
    let a = Shape::closed_disk(p(-2.46, 1.0), 0.8);
    let b = Shape::closed_disk(p(1.5, 0.5), 1.2);
    PlanarScene::new(
        Window::new(-3.8, -1.0, 3.0, 2.0),
        272,
        120,
        vec![("A", a.clone()), ("B", b.clone()), ("AB", Shape::union(vec![a, b]))],
    )
}

/// `C` is two overlapping bars, `D` a U shape below them; `C ∩ D` is the
/// two tips of the U.
pub fn fig8() -> PlanarScene {
    let c1 = Shape::rect(p(-3.5, 0.5), p(-1.0, 2.0));
    let c2 = Shape::rect(p(-1.8, 0.5), p(1.0, 2.0));
    let d1 = Shape::rect(p(-3.0, -1.0), p(-2.0, 1.0));
    let d2 = Shape::rect(p(-3.0, -1.0), p(0.3, -0.2));
    let d3 = Shape::rect(p(-0.7, -1.0), p(0.3, 1.0));
    let c = Shape::union(vec![c1.clone(), c2.clone()]);
    let d = Shape::union(vec![d1.clone(), d2.clone(), d3.clone()]);
    PlanarScene::new(
        Window::new(-3.8, -1.2, 1.5, 2.2),
        212,
        136,
        vec![
            ("C1", c1),
            ("C2", c2),
            ("D1", d1),
            ("D2", d2),
            ("D3", d3),
            ("CD", Shape::intersection(vec![c.clone(), d.clone()])),
            ("C", c),
            ("D", d),
        ],
    )
}

/// Closed disks whose boundaries reach into each other's interior while
/// the interiors stay disjoint.
pub fn remark1() -> PlanarScene {
    PlanarScene::new(
        Window::new(0.0, 0.0, 100.0, 60.0),
        100,
        60,
        vec![
            ("A", Shape::closed_disk(p(30.5, 30.5), 15.0)),
            ("B", Shape::closed_disk(p(58.5, 30.5), 15.0)),
        ],
    )
}

/// Probe point with its expected color set.
#[derive(Clone, Debug, PartialEq)]
pub struct Probe {
    pub name: &'static str,
    pub at: Point2,
    pub colors: Vec<&'static str>,
}

pub struct DescriptiveScene {
    pub space: DescriptorSpace,
    pub tessellation: Tessellation,
    pub family: TimedFamily,
    pub probes: Vec<Probe>,
}

/// Cells of the colored tessellation, in first-match order.
pub fn fig6_cells() -> Vec<Cell> {
    let cell = |name: &str, color: &str, shape: Shape| Cell {
        name: name.into(),
        color: color.into(),
        shape,
    };
    vec![
        cell(
            "red_tri_right",
            "r",
            Shape::triangle(p(5.5, 2.5), p(2.5, 2.5), p(2.5, 1.0)),
        ),
        cell(
            "red_tri_left",
            "r",
            Shape::triangle(p(-0.5, 2.5), p(2.5, 2.5), p(2.5, 1.0)),
        ),
        cell(
            "green_tri",
            "g",
            Shape::triangle(p(-0.5, 2.5), p(2.5, 4.0), p(2.5, 2.5)),
        ),
        cell("blue_band", "b", Shape::rect(p(2.5, 2.5), p(5.5, 4.0))),
        cell("green_bottom_right", "g", Shape::rect(p(2.5, 1.0), p(5.5, 4.0))),
        cell("red_top_right", "r", Shape::rect(p(2.5, 4.0), p(5.5, 7.0))),
        cell("blue_bottom_left", "b", Shape::rect(p(-0.5, 1.0), p(2.5, 4.0))),
        cell("green_top_left", "g", Shape::rect(p(-0.5, 4.0), p(2.5, 7.0))),
    ]
}

pub fn fig6_grid() -> Grid {
    Grid::new(Window::new(-0.5, 1.0, 5.5, 7.0), 120, 120).expect("fixture grid is valid")
}

/// Shapes of the timed family: `(instant, cell, shape)`.
pub fn fig6_family_shapes() -> Vec<(&'static str, &'static str, Shape)> {
    vec![
        ("t*", "green_top_left", Shape::closed_disk(p(1.25, 5.5), 1.3)),
        ("t*", "red_top_right", Shape::closed_disk(p(3.85, 5.5), 1.4)),
        ("t*", "green_tri", Shape::rect(p(1.0, 2.5), p(4.0, 3.5))),
        ("t1", "blue_bottom_left", Shape::closed_disk(p(2.5, 4.0), 0.5)),
    ]
}

pub fn fig6() -> DescriptiveScene {
    let space = DescriptorSpace::standard();
    let grid = fig6_grid();
    let tessellation = Tessellation::new(grid.clone(), fig6_cells(), &space).expect("fixture tessellation is valid");
    let family = TimedFamily {
        regions: fig6_family_shapes()
            .into_iter()
            .map(|(instant, cell, shape)| TimedRegion {
                instant: instant.into(),
                cell: cell.into(),
                region: rasterize(&shape, grid.window(), grid.width(), grid.height()).expect("fixture shape is valid"),
            })
            .collect(),
    };
    let probes = vec![
        Probe {
            name: "a",
            at: p(0.0, 6.5),
            colors: vec!["g"],
        },
        Probe {
            name: "b",
            at: p(2.5, 5.5),
            colors: vec!["g", "r"],
        },
        Probe {
            name: "c",
            at: p(2.5, 4.0),
            colors: vec!["g", "r", "b"],
        },
    ];
    DescriptiveScene {
        space,
        tessellation,
        family,
        probes,
    }
}
