//! Executable strong proximity theory on finite models.
//!
//! Two carrier backends ([`FiniteSpace`] and pixel [`Grid`]s) share the
//! [`Space`] trait. On top of them sit strong nearness relations and their
//! axiom harness ([`proximity`]), strong connectedness and strong chains
//! ([`connect`]), point maps and strongly proximal continuity ([`maps`]),
//! strongly hit-and-miss hyperspaces ([`hyper`]) and a color-descriptor
//! nearness model ([`descriptive`]).

pub mod connect;
pub mod descriptive;
pub mod error;
pub mod fixtures;
pub mod geom;
pub mod hyper;
pub mod maps;
pub mod proximity;
pub mod set;
pub mod spaces;

pub use connect::Decomposition;
pub use descriptive::{DescriptorSpace, Tessellation};
pub use error::{Error, Result};
pub use geom::{Point2, Window};
pub use hyper::{HyperSpace, MissVariant};
pub use maps::{PointMap, SetMap};
pub use proximity::{strongly_near, Nearness, OverlapVariant, PlainProximity, StrongProximityKind};
pub use set::PointSet;
pub use spaces::{rasterize, Adjacency, FiniteSpace, Grid, GridRegion, Shape, Space};
