//! Turning a parsed [`Scene`] into concrete spaces and sets.

use crate::scene::{BackendKind, CheckKind, GridSpec, PointRef, Scene, SetOp, SCENE_VERSION};
use std::collections::HashSet;
use strongnear::descriptive::{Cell, DescriptorSpace, Tessellation, TimedFamily, TimedRegion};
use strongnear::{rasterize, Adjacency, FiniteSpace, Grid, PointMap, PointSet, Space, StrongProximityKind};
use thiserror::Error;

/// Problems with the scene itself (exit code 2).
#[derive(Debug, Error, PartialEq)]
#[error("{0}")]
pub struct InputError(pub String);

fn bad(msg: impl Into<String>) -> InputError {
    InputError(msg.into())
}

pub struct LoadedMap {
    pub name: String,
    pub map: PointMap,
    /// Target grid; `None` means the scene carrier.
    pub output: Option<Grid>,
}

pub struct Ctx<S: Space> {
    pub space: S,
    pub sets: Vec<(String, S::Set)>,
    pub relations: Vec<(String, StrongProximityKind)>,
    pub maps: Vec<LoadedMap>,
}

impl<S: Space> Ctx<S> {
    pub fn set(&self, name: &str) -> Result<&S::Set, InputError> {
        self.sets
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, s)| s)
            .ok_or_else(|| bad(format!("unknown set {name:?}")))
    }

    pub fn sets_named(&self, names: &[String]) -> Result<Vec<S::Set>, InputError> {
        names.iter().map(|n| self.set(n).cloned()).collect()
    }

    pub fn relation(&self, name: &str) -> Result<StrongProximityKind, InputError> {
        self.relations
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, k)| *k)
            .ok_or_else(|| bad(format!("unknown relation {name:?}")))
    }

    pub fn map(&self, name: &str) -> Result<&LoadedMap, InputError> {
        self.maps
            .iter()
            .find(|m| m.name == name)
            .ok_or_else(|| bad(format!("unknown map {name:?}")))
    }

    /// Name of a set equal to `s`, for witnesses.
    pub fn name_of(&self, s: &S::Set) -> Option<&str> {
        self.sets.iter().find(|(_, t)| t == s).map(|(n, _)| n.as_str())
    }
}

pub struct DescriptiveCtx {
    pub space: DescriptorSpace,
    pub tessellation: Tessellation,
    pub family: TimedFamily,
    pub probes: Vec<(String, strongnear::Point2, usize)>,
}

pub enum Carrier {
    Finite(Ctx<FiniteSpace>),
    Grid(Ctx<Grid>),
}

pub struct Loaded {
    pub scene: Scene,
    pub carrier: Carrier,
    pub descriptive: Option<DescriptiveCtx>,
}

pub fn parse_scene(text: &str) -> Result<Scene, InputError> {
    let scene: Scene = serde_json::from_str(text).map_err(|e| bad(format!("scene: {e}")))?;
    if scene.version != SCENE_VERSION {
        return Err(bad(format!(
            "version: expected {SCENE_VERSION}, found {}",
            scene.version
        )));
    }
    Ok(scene)
}

pub fn build_grid(spec: &GridSpec, adjacency: Option<Adjacency>) -> Result<Grid, InputError> {
    let g = Grid::new(spec.window(), spec.width, spec.height).map_err(|e| bad(format!("grid: {e}")))?;
    Ok(g.with_adjacency(adjacency.unwrap_or(spec.adjacency))
        .with_window_as_space(spec.window_as_space))
}

fn check_unique<'a>(names: impl Iterator<Item = &'a str>, what: &str) -> Result<(), InputError> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(bad(format!("{what}: duplicate name {n:?}")));
        }
    }
    Ok(())
}

pub fn load(scene: Scene, adjacency: Option<Adjacency>) -> Result<Loaded, InputError> {
    check_unique(
        scene
            .shapes
            .iter()
            .map(|s| s.name.as_str())
            .chain(scene.sets.iter().map(|s| s.name.as_str()))
            .chain(scene.derived.iter().map(|s| s.name.as_str())),
        "sets",
    )?;
    check_unique(scene.relations.iter().map(|r| r.name.as_str()), "relations")?;
    check_unique(scene.maps.iter().map(|m| m.name.as_str()), "maps")?;
    let relations: Vec<(String, StrongProximityKind)> = scene
        .relations
        .iter()
        .map(|r| (r.name.clone(), r.kind.kind()))
        .collect();
    let maps = scene
        .maps
        .iter()
        .map(|m| {
            let output = match &m.output_grid {
                Some(spec) if spec.domain.is_some() => {
                    return Err(bad(format!("maps.{}.output_grid: domain is not supported", m.name)))
                }
                Some(spec) => Some(build_grid(spec, adjacency)?),
                None => None,
            };
            Ok(LoadedMap {
                name: m.name.clone(),
                map: m.map.clone(),
                output,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;

    let carrier = match scene.backend {
        BackendKind::Finite => {
            if scene.grid.is_some() || !scene.shapes.is_empty() {
                return Err(bad("finite backend: grid and shapes are not allowed"));
            }
            let spec = scene.finite.as_ref().ok_or_else(|| bad("finite: missing section"))?;
            let labels: Vec<&str> = spec.points.iter().map(String::as_str).collect();
            let basis: Vec<Vec<&str>> = spec
                .basis
                .iter()
                .map(|b| b.iter().map(String::as_str).collect())
                .collect();
            let basis_refs: Vec<&[&str]> = basis.iter().map(Vec::as_slice).collect();
            let space = FiniteSpace::from_labels(&labels, &basis_refs).map_err(|e| bad(format!("finite: {e}")))?;
            let mut sets = Vec::new();
            for s in &scene.sets {
                let names: Vec<&str> = s.points.iter().map(String::as_str).collect();
                let set = space.set_of(&names).map_err(|e| bad(format!("sets.{}: {e}", s.name)))?;
                sets.push((s.name.clone(), set));
            }
            let mut ctx = Ctx {
                space,
                sets,
                relations,
                maps,
            };
            derive_sets(&mut ctx, &scene, |map, space, s, _| {
                map.map
                    .image_finite(space, s)
                    .map_err(|e| bad(format!("map {}: {e}", map.name)))
            })?;
            Carrier::Finite(ctx)
        }
        BackendKind::Grid => {
            if scene.finite.is_some() || !scene.sets.is_empty() {
                return Err(bad("grid backend: finite and sets are not allowed"));
            }
            let spec = scene.grid.as_ref().ok_or_else(|| bad("grid: missing section"))?;
            let mut grid = build_grid(spec, adjacency)?;
            let mut sets = Vec::new();
            for s in &scene.shapes {
                let r = rasterize(&s.shape, grid.window(), grid.width(), grid.height())
                    .map_err(|e| bad(format!("shapes.{}: {e}", s.name)))?;
                sets.push((s.name.clone(), r));
            }
            if let Some(d) = &spec.domain {
                let region = sets
                    .iter()
                    .find(|(n, _)| n == d)
                    .map(|(_, r)| r.clone())
                    .ok_or_else(|| bad(format!("grid.domain: unknown shape {d:?}")))?;
                grid = grid.with_domain(region).map_err(|e| bad(format!("grid.domain: {e}")))?;
                let full = grid.full();
                for (_, r) in sets.iter_mut() {
                    *r = r.and(&full);
                }
            }
            let mut ctx = Ctx {
                space: grid,
                sets,
                relations,
                maps,
            };
            derive_sets(&mut ctx, &scene, |map, space, s, name| {
                if map.output.as_ref().is_some_and(|o| o != space) {
                    return Err(bad(format!("derived.{name}: image maps must stay on the scene grid")));
                }
                map.map
                    .apply_region(space, s, space)
                    .map_err(|e| bad(format!("derived.{name}: {e}")))
            })?;
            Carrier::Grid(ctx)
        }
    };

    let descriptive = match &scene.tessellation {
        None => None,
        Some(t) => {
            let Carrier::Grid(ctx) = &carrier else {
                return Err(bad("tessellation: needs the grid backend"));
            };
            Some(load_tessellation(t, &ctx.space)?)
        }
    };
    let loaded = Loaded {
        scene,
        carrier,
        descriptive,
    };
    validate_checks(&loaded)?;
    Ok(loaded)
}

trait ImageFinite {
    fn image_finite(&self, space: &FiniteSpace, s: &PointSet) -> strongnear::Result<PointSet>;
}

impl ImageFinite for PointMap {
    fn image_finite(&self, space: &FiniteSpace, s: &PointSet) -> strongnear::Result<PointSet> {
        use strongnear::SetMap;
        self.image(space, space, s)
    }
}

fn derive_sets<S: Space>(
    ctx: &mut Ctx<S>,
    scene: &Scene,
    image: impl Fn(&LoadedMap, &S, &S::Set, &str) -> Result<S::Set, InputError>,
) -> Result<(), InputError> {
    for d in &scene.derived {
        let field = format!("derived.{}", d.name);
        let args = ctx.sets_named(&d.of).map_err(|e| bad(format!("{field}: {e}")))?;
        let sp = &ctx.space;
        let unary = |what: &str| -> Result<&S::Set, InputError> {
            match args.as_slice() {
                [one] => Ok(one),
                _ => Err(bad(format!("{field}: {what} takes exactly one operand"))),
            }
        };
        let first = || args.first().ok_or_else(|| bad(format!("{field}: needs an operand")));
        let set = match d.op {
            SetOp::Union => sp.union_all(args.iter()),
            SetOp::Intersection => {
                let mut acc = first()?.clone();
                for a in &args[1..] {
                    acc = sp.intersection(&acc, a);
                }
                acc
            }
            SetOp::Difference => {
                let mut acc = first()?.clone();
                for a in &args[1..] {
                    acc = sp.intersection(&acc, &sp.complement(a));
                }
                acc
            }
            SetOp::Complement => sp.complement(unary("complement")?),
            SetOp::Interior => sp.interior(unary("interior")?),
            SetOp::Closure => sp.closure(unary("closure")?),
            SetOp::Regularize => sp.interior(&sp.closure(unary("regularize")?)),
            SetOp::Image => {
                let name = d
                    .map
                    .as_ref()
                    .ok_or_else(|| bad(format!("{field}: image needs a map")))?;
                let map = ctx.map(name)?;
                image(map, sp, unary("image")?, &d.name)?
            }
        };
        ctx.sets.push((d.name.clone(), set));
    }
    Ok(())
}

fn load_tessellation(t: &crate::scene::TessellationSpec, grid: &Grid) -> Result<DescriptiveCtx, InputError> {
    let colors: Vec<&str> = t.colors.iter().map(String::as_str).collect();
    let space = match &t.base {
        None if colors == ["g", "r", "b"] => DescriptorSpace::standard(),
        None => return Err(bad("tessellation.base: required for a non-standard palette")),
        Some(base) => {
            let base: Vec<Vec<Vec<&str>>> = base
                .iter()
                .map(|c| c.iter().map(|s| s.iter().map(String::as_str).collect()).collect())
                .collect();
            DescriptorSpace::new(&colors, &base).map_err(|e| bad(format!("tessellation.base: {e}")))?
        }
    };
    let cells = t
        .cells
        .iter()
        .map(|c| Cell {
            name: c.name.clone(),
            color: c.color.clone(),
            shape: c.shape.clone(),
        })
        .collect();
    let tessellation =
        Tessellation::new(grid.clone(), cells, &space).map_err(|e| bad(format!("tessellation.cells: {e}")))?;
    let regions = t
        .family
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let region = rasterize(&f.shape, grid.window(), grid.width(), grid.height())
                .map_err(|e| bad(format!("tessellation.family[{i}]: {e}")))?;
            Ok(TimedRegion {
                instant: f.instant.clone(),
                cell: f.cell.clone(),
                region,
            })
        })
        .collect::<Result<Vec<_>, InputError>>()?;
    let family = TimedFamily { regions };
    family
        .validate(&tessellation)
        .map_err(|e| bad(format!("tessellation.family: {e}")))?;
    let probes = t
        .probes
        .iter()
        .map(|p| {
            let names: Vec<&str> = p.colors.iter().map(String::as_str).collect();
            let want = space
                .point_of(&names)
                .map_err(|e| bad(format!("tessellation.probes.{}: {e}", p.name)))?;
            Ok((p.name.clone(), p.at, want))
        })
        .collect::<Result<Vec<_>, InputError>>()?;
    Ok(DescriptiveCtx {
        space,
        tessellation,
        family,
        probes,
    })
}

/// Resolve a point reference on the carrier.
pub fn point_finite(space: &FiniteSpace, p: &PointRef) -> Result<usize, InputError> {
    match p {
        PointRef::Label(l) => space
            .labels()
            .iter()
            .position(|x| x == l)
            .ok_or_else(|| bad(format!("unknown point {l:?}"))),
        PointRef::At(_) => Err(bad("coordinates need the grid backend")),
    }
}

pub fn point_grid(grid: &Grid, p: &PointRef) -> Result<usize, InputError> {
    match p {
        PointRef::At(q) => grid
            .pixel_at(*q)
            .ok_or_else(|| bad(format!("point ({}, {}) is outside the window", q.x, q.y))),
        PointRef::Label(_) => Err(bad("labels need the finite backend")),
    }
}

struct Refs<'a> {
    sets: Vec<&'a String>,
    relations: Vec<&'a String>,
    maps: Vec<&'a String>,
}

fn references(k: &CheckKind) -> Refs<'_> {
    let mut r = Refs {
        sets: vec![],
        relations: vec![],
        maps: vec![],
    };
    match k {
        CheckKind::IsConnected { set } => r.sets.push(set),
        CheckKind::Intersects { a, b } => r.sets.extend([a, b]),
        CheckKind::Near { relation, a, b } => {
            r.relations.push(relation);
            r.sets.extend([a, b]);
        }
        CheckKind::Axioms { relation, family } => {
            r.relations.push(relation);
            r.sets.extend(family.iter().flatten());
        }
        CheckKind::Compatibility { relation } => r.relations.push(relation),
        CheckKind::VerifyDecomposition {
            relation,
            target,
            pieces,
        } => {
            r.relations.push(relation);
            r.sets.push(target);
            r.sets.extend(pieces);
        }
        CheckKind::FindDecomposition {
            relation,
            target,
            candidates,
            ..
        }
        | CheckKind::DeltaImpliesConnected {
            relation,
            target,
            candidates,
        } => {
            r.relations.push(relation);
            r.sets.push(target);
            r.sets.extend(candidates);
        }
        CheckKind::ClosureTheorem { relation, pieces } => {
            r.relations.push(relation);
            r.sets.extend(pieces);
        }
        CheckKind::BetweenTheorem {
            relation,
            pieces,
            between,
        } => {
            r.relations.push(relation);
            r.sets.extend(pieces);
            r.sets.push(between);
        }
        CheckKind::CountableCriterion { relation, links, .. } => {
            r.relations.push(relation);
            for l in links {
                r.sets.extend([&l.from, &l.to, &l.piece]);
            }
        }
        CheckKind::FindChain { relation, cover, .. } => {
            r.relations.push(relation);
            r.sets.extend(cover);
        }
        CheckKind::ChainTheorem { relation, target, .. } => {
            r.relations.push(relation);
            r.sets.push(target);
        }
        CheckKind::Spc {
            map,
            relation_x,
            relation_y,
            family,
        } => {
            r.maps.push(map);
            r.relations.extend([relation_x, relation_y]);
            r.sets.extend(family.iter().flatten());
        }
        CheckKind::OpenMap { map, samples } => {
            r.maps.push(map);
            r.sets.extend(samples);
        }
        CheckKind::ImagePreservation {
            map,
            relation_x,
            relation_y,
            target,
            pieces,
        } => {
            r.maps.push(map);
            r.relations.extend([relation_x, relation_y]);
            r.sets.push(target);
            r.sets.extend(pieces);
        }
        CheckKind::Hyper { relation, .. } => r.relations.push(relation),
        CheckKind::HyperTheorem { relation, map } => {
            r.relations.push(relation);
            r.maps.push(map);
        }
        CheckKind::Descriptive {} => {}
    }
    r
}

fn validate_checks(l: &Loaded) -> Result<(), InputError> {
    let (sets, relations, maps): (HashSet<&str>, HashSet<&str>, HashSet<&str>) = match &l.carrier {
        Carrier::Finite(c) => (
            c.sets.iter().map(|(n, _)| n.as_str()).collect(),
            c.relations.iter().map(|(n, _)| n.as_str()).collect(),
            c.maps.iter().map(|m| m.name.as_str()).collect(),
        ),
        Carrier::Grid(c) => (
            c.sets.iter().map(|(n, _)| n.as_str()).collect(),
            c.relations.iter().map(|(n, _)| n.as_str()).collect(),
            c.maps.iter().map(|m| m.name.as_str()).collect(),
        ),
    };
    for (i, c) in l.scene.checks.iter().enumerate() {
        let r = references(&c.kind);
        let field = format!("checks[{i}] ({})", c.kind.name());
        for s in r.sets {
            if !sets.contains(s.as_str()) {
                return Err(bad(format!("{field}: unknown set {s:?}")));
            }
        }
        for s in r.relations {
            if !relations.contains(s.as_str()) {
                return Err(bad(format!("{field}: unknown relation {s:?}")));
            }
        }
        for s in r.maps {
            if !maps.contains(s.as_str()) {
                return Err(bad(format!("{field}: unknown map {s:?}")));
            }
        }
        if matches!(c.kind, CheckKind::Descriptive {}) && l.descriptive.is_none() {
            return Err(bad(format!("{field}: scene has no tessellation")));
        }
    }
    Ok(())
}
