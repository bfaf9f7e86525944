use super::grid::GridRegion;
use crate::error::{Error, Result};
use crate::geom::{Point2, Window};
use serde::{Deserialize, Serialize};

/// Planar shapes in world coordinates. Triangles and rectangles are closed;
/// disks carry an explicit boundary flag.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Shape {
    Disk {
        center: Point2,
        radius: f64,
        #[serde(default = "default_closed")]
        closed: bool,
    },
    Triangle {
        vertices: [Point2; 3],
    },
    Rectangle {
        corners: [Point2; 2],
    },
    Union {
        parts: Vec<Shape>,
    },
    Intersection {
        parts: Vec<Shape>,
    },
    /// Everything in the window not covered by `inner`.
    Complement {
        inner: Box<Shape>,
    },
}

fn default_closed() -> bool {
    true
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

impl Shape {
    pub fn closed_disk(center: Point2, radius: f64) -> Shape {
        Shape::Disk {
            center,
            radius,
            closed: true,
        }
    }

    pub fn open_disk(center: Point2, radius: f64) -> Shape {
        Shape::Disk {
            center,
            radius,
            closed: false,
        }
    }

    pub fn rect(a: Point2, b: Point2) -> Shape {
        Shape::Rectangle { corners: [a, b] }
    }

    pub fn triangle(a: Point2, b: Point2, c: Point2) -> Shape {
        Shape::Triangle { vertices: [a, b, c] }
    }

    pub fn union(parts: Vec<Shape>) -> Shape {
        Shape::Union { parts }
    }

    pub fn intersection(parts: Vec<Shape>) -> Shape {
        Shape::Intersection { parts }
    }

    pub fn complement(inner: Shape) -> Shape {
        Shape::Complement { inner: Box::new(inner) }
    }

    /// `outer` minus `inner`.
    pub fn difference(outer: Shape, inner: Shape) -> Shape {
        Shape::intersection(vec![outer, Shape::complement(inner)])
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Shape::Disk { center, radius, .. } => {
                if !(*radius > 0.0 && radius.is_finite() && center.x.is_finite() && center.y.is_finite()) {
                    return Err(Error::DegenerateShape(format!("disk radius {radius} must be positive")));
                }
            }
            Shape::Triangle { vertices: [a, b, c] } => {
                let area2 = cross(*a, *b, *c);
                if !area2.is_finite() || area2.abs() <= f64::EPSILON * 16.0 {
                    return Err(Error::DegenerateShape("triangle vertices are collinear".into()));
                }
            }
            Shape::Rectangle { corners: [a, b] } => {
                if !((a.x - b.x).abs() > 0.0 && (a.y - b.y).abs() > 0.0) {
                    return Err(Error::DegenerateShape("rectangle has zero area".into()));
                }
            }
            Shape::Union { parts } | Shape::Intersection { parts } => {
                if parts.is_empty() {
                    return Err(Error::DegenerateShape("empty shape list".into()));
                }
                parts.iter().try_for_each(Shape::validate)?;
            }
            Shape::Complement { inner } => inner.validate()?,
        }
        Ok(())
    }

    /// Point membership. Closed shapes include their boundary.
    pub fn contains(&self, p: Point2) -> bool {
        match self {
            Shape::Disk { center, radius, closed } => {
                let d2 = p.dist2(*center);
                let r2 = radius * radius;
                if *closed {
                    d2 <= r2
                } else {
                    d2 < r2
                }
            }
            Shape::Triangle { vertices: [a, b, c] } => {
                let d1 = cross(*a, *b, p);
                let d2 = cross(*b, *c, p);
                let d3 = cross(*c, *a, p);
                let has_neg = d1 < 0.0 || d2 < 0.0 || d3 < 0.0;
                let has_pos = d1 > 0.0 || d2 > 0.0 || d3 > 0.0;
                !(has_neg && has_pos)
            }
            Shape::Rectangle { corners: [a, b] } => {
                p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
            }
            Shape::Union { parts } => parts.iter().any(|s| s.contains(p)),
            Shape::Intersection { parts } => parts.iter().all(|s| s.contains(p)),
            Shape::Complement { inner } => !inner.contains(p),
        }
    }
}

/// Rasterize by pixel centers: a pixel is set iff its center lies in `shape`.
pub fn rasterize(shape: &Shape, window: Window, width: usize, height: usize) -> Result<GridRegion> {
    if !window.has_positive_area() {
        return Err(Error::Invalid("raster window must have positive area".into()));
    }
    shape.validate()?;
    let px = window.width() / width as f64;
    let py = window.height() / height as f64;
    Ok(GridRegion::from_fn(width, height, |x, y| {
        let c = Point2::new(
            window.x_min + (x as f64 + 0.5) * px,
            window.y_min + (y as f64 + 0.5) * py,
        );
        shape.contains(c)
    }))
}
