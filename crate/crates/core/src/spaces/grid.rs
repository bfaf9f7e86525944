use super::Space;
use crate::error::{Error, Result};
use crate::geom::{Point2, Window};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Pixel connectivity used for region components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Adjacency {
    Four,
    #[default]
    Eight,
}

impl TryFrom<u8> for Adjacency {
    type Error = String;
    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            4 => Ok(Adjacency::Four),
            8 => Ok(Adjacency::Eight),
            other => Err(format!("adjacency must be 4 or 8, got {other}")),
        }
    }
}

impl From<Adjacency> for u8 {
    fn from(a: Adjacency) -> u8 {
        match a {
            Adjacency::Four => 4,
            Adjacency::Eight => 8,
        }
    }
}

const N4: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const N8: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

impl Adjacency {
    fn offsets(self) -> &'static [(i64, i64)] {
        match self {
            Adjacency::Four => &N4,
            Adjacency::Eight => &N8,
        }
    }
}

/// Membership bitset over a `width x height` pixel lattice. Pixel `(x, y)`
/// has index `y * width + x`; row 0 is the bottom of the world window.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GridRegion {
    width: usize,
    height: usize,
    bits: Vec<u64>,
}

impl GridRegion {
    pub fn empty(width: usize, height: usize) -> Self {
        GridRegion {
            width,
            height,
            bits: vec![0; (width * height).div_ceil(64)],
        }
    }

    pub fn full(width: usize, height: usize) -> Self {
        let mut r = Self::empty(width, height);
        r.bits.iter_mut().for_each(|w| *w = u64::MAX);
        r.trim();
        r
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(width, height);
        for y in 0..height {
            for x in 0..width {
                if f(x, y) {
                    r.insert(y * width + x);
                }
            }
        }
        r
    }

    pub fn from_indices(width: usize, height: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Self::empty(width, height);
        for i in idx {
            r.insert(i);
        }
        r
    }

    fn trim(&mut self) {
        let n = self.width * self.height;
        let rem = n % 64;
        if rem != 0 {
            if let Some(last) = self.bits.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Number of pixels in the lattice (not the popcount).
    pub fn len(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len() && self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn get_xy(&self, x: usize, y: usize) -> bool {
        x < self.width && y < self.height && self.get(y * self.width + x)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len(), "pixel {i} out of range");
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len() {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    fn zip(&self, other: &GridRegion, f: impl Fn(u64, u64) -> u64) -> GridRegion {
        assert_eq!(
            (self.width, self.height),
            (other.width, other.height),
            "grid regions of different sizes"
        );
        let mut r = GridRegion {
            width: self.width,
            height: self.height,
            bits: self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect(),
        };
        r.trim();
        r
    }

    pub fn or(&self, other: &GridRegion) -> GridRegion {
        self.zip(other, |a, b| a | b)
    }

    pub fn and(&self, other: &GridRegion) -> GridRegion {
        self.zip(other, |a, b| a & b)
    }

    pub fn and_not(&self, other: &GridRegion) -> GridRegion {
        self.zip(other, |a, b| a & !b)
    }

    pub fn not(&self) -> GridRegion {
        let mut r = GridRegion {
            width: self.width,
            height: self.height,
            bits: self.bits.iter().map(|w| !w).collect(),
        };
        r.trim();
        r
    }

    pub fn is_subset(&self, other: &GridRegion) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &GridRegion) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    /// Shift by whole pixels; pixels leaving the lattice are dropped.
    pub fn translated(&self, dx: i64, dy: i64) -> GridRegion {
        let mut out = GridRegion::empty(self.width, self.height);
        for i in self.iter() {
            let x = (i % self.width) as i64 + dx;
            let y = (i / self.width) as i64 + dy;
            if x >= 0 && y >= 0 && (x as usize) < self.width && (y as usize) < self.height {
                out.insert(y as usize * self.width + x as usize);
            }
        }
        out
    }

    /// Bounding box `(x_min, y_min, x_max, y_max)` in pixel coordinates.
    pub fn bounding_box(&self) -> Option<(usize, usize, usize, usize)> {
        self.iter().fold(None, |acc, i| {
            let (x, y) = (i % self.width, i / self.width);
            Some(match acc {
                None => (x, y, x, y),
                Some((a, b, c, d)) => (a.min(x), b.min(y), c.max(x), d.max(y)),
            })
        })
    }
}

impl fmt::Debug for GridRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GridRegion({}x{}, {} px)", self.width, self.height, self.count())
    }
}

/// A pixel lattice over a world window, viewed as a space.
///
/// Interior is erosion by the 3x3 stencil and closure is the dual dilation.
/// When `window_as_space` is set the window is the whole space, so border
/// pixels only consult their in-bounds neighbours; otherwise border pixels
/// are never interior. An optional `domain` restricts the carrier to a
/// subset of the lattice; neighbours outside the domain are ignored just
/// like out-of-window neighbours of a window-as-space grid.
///
/// 3x3 erosion is not idempotent, so a grid has no non-trivial sets fixed
/// by its interior. Sets fixed by interior-of-closure (regular opens) play
/// the role of open sets here.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    width: usize,
    height: usize,
    window: Window,
    adjacency: Adjacency,
    window_as_space: bool,
    domain: Option<GridRegion>,
}

impl Grid {
    pub fn new(window: Window, width: usize, height: usize) -> Result<Self> {
        if !window.has_positive_area() {
            return Err(Error::Invalid("grid window must have positive area".into()));
        }
        if width == 0 || height == 0 {
            return Err(Error::Invalid("grid must have at least one pixel".into()));
        }
        Ok(Grid {
            width,
            height,
            window,
            adjacency: Adjacency::Eight,
            window_as_space: true,
            domain: None,
        })
    }

    pub fn with_adjacency(mut self, adjacency: Adjacency) -> Self {
        self.adjacency = adjacency;
        self
    }

    pub fn with_window_as_space(mut self, flag: bool) -> Self {
        self.window_as_space = flag;
        self
    }

    /// Restrict the carrier to `domain`.
    pub fn with_domain(mut self, domain: GridRegion) -> Result<Self> {
        if (domain.width(), domain.height()) != (self.width, self.height) {
            return Err(Error::Invalid("domain size does not match grid".into()));
        }
        self.domain = Some(domain);
        Ok(self)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn adjacency(&self) -> Adjacency {
        self.adjacency
    }

    pub fn window_as_space(&self) -> bool {
        self.window_as_space
    }

    pub fn domain(&self) -> Option<&GridRegion> {
        self.domain.as_ref()
    }

    pub fn pixel_size(&self) -> (f64, f64) {
        (
            self.window.width() / self.width as f64,
            self.window.height() / self.height as f64,
        )
    }

    pub fn pixel_center(&self, i: usize) -> Point2 {
        let (px, py) = self.pixel_size();
        let x = (i % self.width) as f64;
        let y = (i / self.width) as f64;
        Point2::new(self.window.x_min + (x + 0.5) * px, self.window.y_min + (y + 0.5) * py)
    }

    /// Pixel whose cell contains `p`, if inside the window.
    pub fn pixel_at(&self, p: Point2) -> Option<usize> {
        let (px, py) = self.pixel_size();
        let fx = ((p.x - self.window.x_min) / px).floor();
        let fy = ((p.y - self.window.y_min) / py).floor();
        if !(fx.is_finite() && fy.is_finite()) || fx < 0.0 || fy < 0.0 {
            return None;
        }
        let (x, y) = (fx as usize, fy as usize);
        (x < self.width && y < self.height).then_some(y * self.width + x)
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        y * self.width + x
    }

    pub fn empty_region(&self) -> GridRegion {
        GridRegion::empty(self.width, self.height)
    }

    fn in_domain(&self, i: usize) -> bool {
        self.domain.as_ref().is_none_or(|d| d.get(i))
    }

    fn erode(&self, s: &GridRegion) -> GridRegion {
        let mut out = self.empty_region();
        let (w, h) = (self.width as i64, self.height as i64);
        'pixels: for i in s.iter() {
            if !self.in_domain(i) {
                continue;
            }
            let x = (i % self.width) as i64;
            let y = (i / self.width) as i64;
            for &(dx, dy) in &N8 {
                let (nx, ny) = (x + dx, y + dy);
                if nx < 0 || ny < 0 || nx >= w || ny >= h {
                    if self.window_as_space {
                        continue;
                    }
                    continue 'pixels;
                }
                let j = (ny * w + nx) as usize;
                if self.in_domain(j) && !s.get(j) {
                    continue 'pixels;
                }
            }
            out.insert(i);
        }
        out
    }

    /// Connected components of `s` under the grid's adjacency, in order of
    /// their lowest pixel index.
    pub fn components(&self, s: &GridRegion) -> Vec<GridRegion> {
        let mut seen = self.empty_region();
        let mut out = Vec::new();
        let (w, h) = (self.width as i64, self.height as i64);
        for start in s.iter() {
            if seen.get(start) {
                continue;
            }
            let mut comp = self.empty_region();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(i) = stack.pop() {
                comp.insert(i);
                let x = (i % self.width) as i64;
                let y = (i / self.width) as i64;
                for &(dx, dy) in self.adjacency.offsets() {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx < 0 || ny < 0 || nx >= w || ny >= h {
                        continue;
                    }
                    let j = (ny * w + nx) as usize;
                    if s.get(j) && !seen.get(j) {
                        seen.insert(j);
                        stack.push(j);
                    }
                }
            }
            out.push(comp);
        }
        out
    }
}

impl Space for Grid {
    type Set = GridRegion;

    fn full(&self) -> GridRegion {
        match &self.domain {
            Some(d) => d.clone(),
            None => GridRegion::full(self.width, self.height),
        }
    }

    fn empty(&self) -> GridRegion {
        self.empty_region()
    }

    fn singleton(&self, p: usize) -> GridRegion {
        GridRegion::from_indices(self.width, self.height, [p])
    }

    fn contains(&self, s: &GridRegion, p: usize) -> bool {
        s.get(p)
    }

    fn points(&self, s: &GridRegion) -> Vec<usize> {
        s.iter().collect()
    }

    fn count(&self, s: &GridRegion) -> usize {
        s.count()
    }

    fn is_empty(&self, s: &GridRegion) -> bool {
        s.is_empty()
    }

    fn is_subset(&self, a: &GridRegion, b: &GridRegion) -> bool {
        a.is_subset(b)
    }

    fn intersects(&self, a: &GridRegion, b: &GridRegion) -> bool {
        a.intersects(b)
    }

    fn union(&self, a: &GridRegion, b: &GridRegion) -> GridRegion {
        a.or(b)
    }

    fn intersection(&self, a: &GridRegion, b: &GridRegion) -> GridRegion {
        a.and(b)
    }

    fn complement(&self, s: &GridRegion) -> GridRegion {
        self.full().and_not(s)
    }

    fn interior(&self, s: &GridRegion) -> GridRegion {
        self.erode(s)
    }

    fn is_connected(&self, s: &GridRegion) -> bool {
        match s.iter().next() {
            None => true,
            Some(_) => {
                let comps = self.components(s);
                comps.len() == 1
            }
        }
    }

    fn is_open(&self, s: &GridRegion) -> bool {
        s.is_empty() || self.interior(&self.closure(s)) == *s
    }

    fn describe(&self, s: &GridRegion) -> String {
        match s.bounding_box() {
            None => "{}".into(),
            Some((x0, y0, x1, y1)) => {
                format!("<{} px in [{x0}..={x1}]x[{y0}..={y1}]>", s.count())
            }
        }
    }
}
