//! Scene files: one carrier (finite space or pixel grid), named sets,
//! relations and maps, and a list of checks. Schema version 1.

use serde::{Deserialize, Serialize};
use strongnear::hyper::MissVariant;
use strongnear::{Adjacency, PlainProximity, Point2, PointMap, Shape, StrongProximityKind, Window};

pub const SCENE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub backend: BackendKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite: Option<FiniteSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    #[serde(default)]
    pub shapes: Vec<NamedShape>,
    #[serde(default)]
    pub sets: Vec<NamedPoints>,
    #[serde(default)]
    pub derived: Vec<DerivedSet>,
    #[serde(default)]
    pub relations: Vec<NamedRelation>,
    #[serde(default)]
    pub maps: Vec<NamedMap>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tessellation: Option<TessellationSpec>,
    #[serde(default)]
    pub checks: Vec<CheckSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BackendKind {
    Finite,
    Grid,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiniteSpec {
    pub points: Vec<String>,
    pub basis: Vec<Vec<String>>,
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    /// `[x_min, y_min, x_max, y_max]`.
    pub window: [f64; 4],
    pub width: usize,
    pub height: usize,
    #[serde(default)]
    pub adjacency: Adjacency,
    #[serde(default = "default_true")]
    pub window_as_space: bool,
    /// Name of a shape restricting the carrier.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
}

impl GridSpec {
    pub fn window(&self) -> Window {
        let [a, b, c, d] = self.window;
        Window::new(a, b, c, d)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedShape {
    pub name: String,
    pub shape: Shape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedPoints {
    pub name: String,
    pub points: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SetOp {
    Union,
    Intersection,
    /// First operand minus the others.
    Difference,
    Complement,
    Interior,
    Closure,
    /// Interior of the closure.
    Regularize,
    /// Image under `map`.
    Image,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivedSet {
    pub name: String,
    pub op: SetOp,
    pub of: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    InteriorOverlap,
    MixedOverlap,
    Overlap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationSpec {
    Preset(Preset),
    Custom(StrongProximityKind),
}

impl RelationSpec {
    pub fn kind(self) -> StrongProximityKind {
        match self {
            RelationSpec::Preset(Preset::InteriorOverlap) => StrongProximityKind::interior_overlap(),
            RelationSpec::Preset(Preset::MixedOverlap) => StrongProximityKind::mixed_overlap(),
            RelationSpec::Preset(Preset::Overlap) => StrongProximityKind::overlap(),
            RelationSpec::Custom(k) => k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedRelation {
    pub name: String,
    pub kind: RelationSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedMap {
    pub name: String,
    pub map: PointMap,
    /// Target grid of a planar map; the scene grid when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_grid: Option<GridSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellSpec {
    pub name: String,
    pub color: String,
    pub shape: Shape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimedShape {
    pub instant: String,
    pub cell: String,
    pub shape: Shape,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbeSpec {
    pub name: String,
    pub at: Point2,
    pub colors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TessellationSpec {
    pub colors: Vec<String>,
    /// Collections of color sets; the standard base when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Vec<Vec<Vec<String>>>>,
    pub cells: Vec<CellSpec>,
    #[serde(default)]
    pub family: Vec<TimedShape>,
    #[serde(default)]
    pub probes: Vec<ProbeSpec>,
}

/// A point: a label on a finite carrier, plane coordinates on a grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointRef {
    Label(String),
    At(Point2),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkSpec {
    pub from: String,
    pub to: String,
    pub piece: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NoneFound,
    Error,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NoneFound => "none_found",
            Verdict::Error => "error",
        }
    }
}

fn default_max_cover() -> usize {
    8
}

fn default_pairs() -> usize {
    20
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Verdict the check is meant to reach.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect: Option<Verdict>,
    #[serde(flatten)]
    pub kind: CheckKind,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum CheckKind {
    IsConnected {
        set: String,
    },
    Intersects {
        a: String,
        b: String,
    },
    Near {
        relation: String,
        a: String,
        b: String,
    },
    Axioms {
        relation: String,
        /// Declared sets when absent (every subset on a finite carrier).
        #[serde(default)]
        family: Option<Vec<String>>,
    },
    Compatibility {
        relation: String,
    },
    VerifyDecomposition {
        relation: String,
        target: String,
        pieces: Vec<String>,
    },
    FindDecomposition {
        relation: String,
        target: String,
        candidates: Vec<String>,
        #[serde(default)]
        max_pieces: Option<usize>,
    },
    DeltaImpliesConnected {
        relation: String,
        target: String,
        candidates: Vec<String>,
    },
    ClosureTheorem {
        relation: String,
        pieces: Vec<String>,
    },
    BetweenTheorem {
        relation: String,
        pieces: Vec<String>,
        between: String,
    },
    CountableCriterion {
        relation: String,
        points: Vec<PointRef>,
        links: Vec<LinkSpec>,
    },
    FindChain {
        relation: String,
        cover: Vec<String>,
        a: PointRef,
        b: PointRef,
    },
    /// Seeded open covers of `target` (as its own carrier) with up to
    /// `max_cover` members; each must link `pairs` seeded endpoint pairs.
    ChainTheorem {
        relation: String,
        target: String,
        #[serde(default = "default_max_cover")]
        max_cover: usize,
        #[serde(default = "default_pairs")]
        pairs: usize,
    },
    Spc {
        map: String,
        relation_x: String,
        relation_y: String,
        /// Every subset, plus point nearness, when absent on a finite
        /// carrier.
        #[serde(default)]
        family: Option<Vec<String>>,
    },
    OpenMap {
        map: String,
        samples: Vec<String>,
    },
    ImagePreservation {
        map: String,
        relation_x: String,
        relation_y: String,
        target: String,
        pieces: Vec<String>,
    },
    Hyper {
        relation: String,
        #[serde(default)]
        plain: PlainProximity,
        #[serde(default)]
        miss: MissVariant,
    },
    HyperTheorem {
        relation: String,
        map: String,
    },
    Descriptive {},
}

impl CheckKind {
    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::IsConnected { .. } => "is_connected",
            CheckKind::Intersects { .. } => "intersects",
            CheckKind::Near { .. } => "near",
            CheckKind::Axioms { .. } => "axioms",
            CheckKind::Compatibility { .. } => "compatibility",
            CheckKind::VerifyDecomposition { .. } => "verify_decomposition",
            CheckKind::FindDecomposition { .. } => "find_decomposition",
            CheckKind::DeltaImpliesConnected { .. } => "delta_implies_connected",
            CheckKind::ClosureTheorem { .. } => "closure_theorem",
            CheckKind::BetweenTheorem { .. } => "between_theorem",
            CheckKind::CountableCriterion { .. } => "countable_criterion",
            CheckKind::FindChain { .. } => "find_chain",
            CheckKind::ChainTheorem { .. } => "chain_theorem",
            CheckKind::Spc { .. } => "spc",
            CheckKind::OpenMap { .. } => "open_map",
            CheckKind::ImagePreservation { .. } => "image_preservation",
            CheckKind::Hyper { .. } => "hyper",
            CheckKind::HyperTheorem { .. } => "hyper_theorem",
            CheckKind::Descriptive {} => "descriptive",
        }
    }

    /// Subcommand group the check belongs to.
    pub fn group(&self) -> Group {
        match self {
            CheckKind::Axioms { .. } | CheckKind::Compatibility { .. } => Group::Axioms,
            CheckKind::Near { .. } | CheckKind::Intersects { .. } => Group::Near,
            CheckKind::IsConnected { .. }
            | CheckKind::VerifyDecomposition { .. }
            | CheckKind::FindDecomposition { .. }
            | CheckKind::DeltaImpliesConnected { .. }
            | CheckKind::ClosureTheorem { .. }
            | CheckKind::BetweenTheorem { .. }
            | CheckKind::CountableCriterion { .. }
            | CheckKind::ImagePreservation { .. } => Group::Connect,
            CheckKind::FindChain { .. } | CheckKind::ChainTheorem { .. } => Group::Chain,
            CheckKind::Spc { .. } | CheckKind::OpenMap { .. } => Group::Spc,
            CheckKind::Hyper { .. } | CheckKind::HyperTheorem { .. } => Group::Hyper,
            CheckKind::Descriptive {} => Group::Descriptive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Axioms,
    Near,
    Connect,
    Chain,
    Spc,
    Hyper,
    Descriptive,
}
