//! Descriptive nearness: pixels are described by the set of colors around
//! them, and sets of pixels map to sets of descriptions in a finite space
//! over the power set of the palette.

use crate::error::{check_capacity, Error, Result};
use crate::geom::Point2;
use crate::set::PointSet;
use crate::spaces::{FiniteSpace, Grid, GridRegion, Shape, Space};
use serde::{Deserialize, Serialize};

/// Largest palette: the carrier has `2^colors` points.
pub const MAX_COLORS: usize = 4;

/// The power set of a palette as a finite space. Point `i` is the color set
/// whose bitmask is `i` (bit `k` is `colors[k]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescriptorSpace {
    colors: Vec<String>,
    base: Vec<PointSet>,
    space: FiniteSpace,
}

fn point_label(colors: &[String], mask: usize) -> String {
    if mask == 0 {
        return "∅".to_string();
    }
    colors
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, c)| c.as_str())
        .collect()
}

impl DescriptorSpace {
    /// `base` lists collections of color sets, each color set given by its
    /// color names.
    pub fn new(colors: &[&str], base: &[Vec<Vec<&str>>]) -> Result<Self> {
        check_capacity("palette colors", colors.len(), MAX_COLORS)?;
        let colors: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
        let base = base
            .iter()
            .map(|coll| {
                coll.iter()
                    .map(|names| Self::mask_in(&colors, names))
                    .collect::<Result<Vec<usize>>>()
                    .map(PointSet::from_indices)
            })
            .collect::<Result<Vec<_>>>()?;
        let labels: Vec<String> = (0..1usize << colors.len()).map(|m| point_label(&colors, m)).collect();
        let space = FiniteSpace::generate(labels, base.clone())?;
        Ok(DescriptorSpace { colors, base, space })
    }

    /// Palette `{g, r, b}` with four singleton collections and three
    /// three-element collections as base.
    pub fn standard() -> Self {
        let base = vec![
            vec![vec!["g", "r"]],
            vec![vec!["b", "r"]],
            vec![vec!["g", "b"]],
            vec![vec!["r", "g", "b"]],
            vec![vec!["r", "g", "b"], vec!["r", "g"], vec!["r"]],
            vec![vec!["r", "g", "b"], vec!["r", "g"], vec!["g"]],
            vec![vec!["r", "g", "b"], vec!["r", "g"], vec!["b"]],
        ];
        Self::new(&["g", "r", "b"], &base).expect("standard descriptor space is valid")
    }

    fn mask_in(colors: &[String], names: &[&str]) -> Result<usize> {
        names.iter().try_fold(0usize, |m, n| {
            colors
                .iter()
                .position(|c| c == n)
                .map(|k| m | 1 << k)
                .ok_or_else(|| Error::Invalid(format!("unknown color {n}")))
        })
    }

    /// Carrier point of a set of color names.
    pub fn point_of(&self, names: &[&str]) -> Result<usize> {
        Self::mask_in(&self.colors, names)
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn base(&self) -> &[PointSet] {
        &self.base
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn color_index(&self, name: &str) -> Option<usize> {
        self.colors.iter().position(|c| c == name)
    }
}

/// A named, colored piece of a tessellation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cell {
    pub name: String,
    pub color: String,
    pub shape: Shape,
}

/// A window partitioned into colored cells. A pixel belongs to the first
/// cell containing its center.
#[derive(Clone, Debug, PartialEq)]
pub struct Tessellation {
    grid: Grid,
    cells: Vec<Cell>,
    cell_of: Vec<u16>,
    color_mask: Vec<u32>,
}

impl Tessellation {
    pub fn new(grid: Grid, cells: Vec<Cell>, palette: &DescriptorSpace) -> Result<Self> {
        let color_mask = cells
            .iter()
            .map(|c| {
                palette
                    .color_index(&c.color)
                    .map(|k| 1u32 << k)
                    .ok_or_else(|| Error::Invalid(format!("cell {} has unknown color {}", c.name, c.color)))
            })
            .collect::<Result<Vec<_>>>()?;
        for c in &cells {
            c.shape.validate()?;
        }
        let n = grid.width() * grid.height();
        let cell_of = (0..n)
            .map(|i| {
                let p = grid.pixel_center(i);
                cells
                    .iter()
                    .position(|c| c.shape.contains(p))
                    .map(|k| k as u16)
                    .ok_or_else(|| Error::Invalid(format!("pixel {i} lies in no cell")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tessellation {
            grid,
            cells,
            cell_of,
            color_mask,
        })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell_at(&self, pixel: usize) -> usize {
        self.cell_of[pixel] as usize
    }

    /// Pixels assigned to cell `k`.
    pub fn cell_region(&self, k: usize) -> GridRegion {
        GridRegion::from_indices(
            self.grid.width(),
            self.grid.height(),
            (0..self.cell_of.len()).filter(|&i| self.cell_of[i] as usize == k),
        )
    }

    /// Colors of the cells met by the 3×3 block around `pixel`, as a
    /// carrier point of the descriptor space.
    pub fn descriptor_of(&self, pixel: usize) -> usize {
        let (w, h) = (self.grid.width() as i64, self.grid.height() as i64);
        let (x, y) = (pixel as i64 % w, pixel as i64 / w);
        let mut mask = 0u32;
        for dy in -1..=1 {
            for dx in -1..=1 {
                let (nx, ny) = (x + dx, y + dy);
                if (0..w).contains(&nx) && (0..h).contains(&ny) {
                    mask |= self.color_mask[self.cell_of[(ny * w + nx) as usize] as usize];
                }
            }
        }
        mask as usize
    }

    pub fn descriptor_at(&self, p: Point2) -> Result<usize> {
        self.grid
            .pixel_at(p)
            .map(|i| self.descriptor_of(i))
            .ok_or_else(|| Error::Invalid(format!("({}, {}) outside the window", p.x, p.y)))
    }

    /// `f(A)`: the descriptions of the pixels of `a`.
    pub fn descriptor_image(&self, a: &GridRegion) -> PointSet {
        PointSet::from_indices(a.iter().map(|i| self.descriptor_of(i)))
    }
}

/// A region alive at `instant`, attached to one cell.
#[derive(Clone, Debug, PartialEq)]
pub struct TimedRegion {
    pub instant: String,
    pub cell: String,
    pub region: GridRegion,
}

/// Regions tagged by instant. Within an instant each cell holds at most one
/// region.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TimedFamily {
    pub regions: Vec<TimedRegion>,
}

impl TimedFamily {
    pub fn validate(&self, t: &Tessellation) -> Result<()> {
        for (i, r) in self.regions.iter().enumerate() {
            if !t.cells.iter().any(|c| c.name == r.cell) {
                return Err(Error::Invalid(format!("region {i} names unknown cell {}", r.cell)));
            }
            if (r.region.width(), r.region.height()) != (t.grid.width(), t.grid.height()) {
                return Err(Error::Invalid(format!("region {i} does not match the grid size")));
            }
            if self.regions[..i]
                .iter()
                .any(|o| o.instant == r.instant && o.cell == r.cell)
            {
                return Err(Error::Invalid(format!(
                    "cell {} holds two regions at instant {}",
                    r.cell, r.instant
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptivePair {
    pub a: usize,
    pub b: usize,
    pub images: [Vec<String>; 2],
    pub interiors: [Vec<String>; 2],
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptiveSpcReport {
    /// Unordered pairs sharing an instant.
    pub pairs: usize,
    /// Unordered pairs skipped because their instants differ.
    pub excluded_cross_instant: usize,
    /// Checked pairs whose regions intersect.
    pub checked: Vec<DescriptivePair>,
    pub passed: bool,
}

/// For co-temporal regions `A_i ∩ A_j ≠ ∅ ⇒ int f(A_i) ∩ int f(A_j) ≠ ∅`.
pub fn descriptive_spc_check(d: &DescriptorSpace, t: &Tessellation, fam: &TimedFamily) -> Result<DescriptiveSpcReport> {
    fam.validate(t)?;
    let names = |s: PointSet| s.iter().map(|i| d.space.labels()[i].clone()).collect::<Vec<_>>();
    let images: Vec<PointSet> = fam.regions.iter().map(|r| t.descriptor_image(&r.region)).collect();
    let interiors: Vec<PointSet> = images.iter().map(|s| d.space.interior(s)).collect();
    let mut report = DescriptiveSpcReport {
        pairs: 0,
        excluded_cross_instant: 0,
        checked: Vec::new(),
        passed: true,
    };
    for (i, ri) in fam.regions.iter().enumerate() {
        for (j, rj) in fam.regions.iter().enumerate().skip(i + 1) {
            if ri.instant != rj.instant {
                report.excluded_cross_instant += 1;
                continue;
            }
            report.pairs += 1;
            if !ri.region.intersects(&rj.region) {
                continue;
            }
            let passed = interiors[i].intersects(interiors[j]);
            report.passed &= passed;
            report.checked.push(DescriptivePair {
                a: i,
                b: j,
                images: [names(images[i]), names(images[j])],
                interiors: [names(interiors[i]), names(interiors[j])],
                passed,
            });
        }
    }
    Ok(report)
}
