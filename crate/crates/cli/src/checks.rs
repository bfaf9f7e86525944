//! Executing the checks of a loaded scene.

use crate::load::{point_finite, point_grid, Carrier, Ctx, DescriptiveCtx, InputError, Loaded, LoadedMap};
use crate::report::{Record, Report};
use crate::scene::{CheckKind, CheckSpec, Group, LinkSpec, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;
use strongnear::connect::{self, CriterionLink, Decomposition};
use strongnear::descriptive::descriptive_spc_check;
use strongnear::hyper::{build_hyper, homeomorphism_theorem_check};
use strongnear::maps::{open_map_check_finite, open_map_check_grid, spc_check, spc_exhaustive, SpcWitness};
use strongnear::proximity::{all_subsets, check_axioms, compatibility, AxiomOptions, Compatibility};
use strongnear::{FiniteSpace, Grid, GridRegion, Nearness, PointMap, SetMap, Space, StrongProximityKind};

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Overrides every search bound on decomposition pieces.
    pub max_pieces: Option<usize>,
    pub timing: bool,
    /// Evaluate checks on the rayon pool; records keep scene order.
    pub parallel: bool,
    /// Only checks in these groups; all when `None`.
    pub groups: Option<Vec<Group>>,
}

type Outcome = Result<(Verdict, Value), String>;

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn pass_if(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

pub fn run(loaded: &Loaded, opts: &RunOptions) -> Report {
    let selected: Vec<&CheckSpec> = loaded
        .scene
        .checks
        .iter()
        .filter(|c| opts.groups.as_ref().is_none_or(|g| g.contains(&c.kind.group())))
        .collect();
    let records = if opts.parallel {
        selected.par_iter().map(|c| run_check(loaded, c, opts)).collect()
    } else {
        selected.iter().map(|c| run_check(loaded, c, opts)).collect()
    };
    Report::new(loaded.scene.name.clone(), opts.seed, records)
}

pub fn run_check(loaded: &Loaded, spec: &CheckSpec, opts: &RunOptions) -> Record {
    let start = Instant::now();
    let outcome = match &loaded.carrier {
        Carrier::Finite(ctx) => finite_check(ctx, &spec.kind, opts),
        Carrier::Grid(ctx) => grid_check(ctx, loaded.descriptive.as_ref(), &spec.kind, opts),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let (verdict, details) = outcome.unwrap_or_else(|e| (Verdict::Error, json!({ "error": e })));
    Record {
        check: spec.kind.name().to_string(),
        label: spec.label.clone().unwrap_or_else(|| spec.kind.name().to_string()),
        verdict,
        expected: spec.expect,
        ok: Record::judge(verdict, spec.expect),
        details,
        timing_ms: opts.timing.then_some(elapsed),
    }
}

fn name_or_describe<S: Space>(ctx: &Ctx<S>, s: &S::Set) -> String {
    ctx.name_of(s)
        .map(str::to_string)
        .unwrap_or_else(|| ctx.space.describe(s))
}

fn is_common(kind: &CheckKind) -> bool {
    matches!(
        kind,
        CheckKind::IsConnected { .. }
            | CheckKind::Intersects { .. }
            | CheckKind::Near { .. }
            | CheckKind::VerifyDecomposition { .. }
            | CheckKind::FindDecomposition { .. }
            | CheckKind::DeltaImpliesConnected { .. }
            | CheckKind::ClosureTheorem { .. }
            | CheckKind::BetweenTheorem { .. }
            | CheckKind::Axioms { family: Some(_), .. }
    )
}

/// Checks that read the same on every carrier; `None` for the rest.
fn common_check<S: Space>(ctx: &Ctx<S>, kind: &CheckKind, opts: &RunOptions) -> Option<Outcome> {
    is_common(kind).then(|| common_inner(ctx, kind, opts))
}

fn common_inner<S: Space>(ctx: &Ctx<S>, kind: &CheckKind, opts: &RunOptions) -> Outcome {
    let sp = &ctx.space;
    match kind {
        CheckKind::IsConnected { set } => {
            let c = sp.is_connected(ctx.set(set).map_err(err)?);
            Ok((pass_if(c), json!({ "set": set, "connected": c })))
        }
        CheckKind::Intersects { a, b } => {
            let m = sp.intersects(ctx.set(a).map_err(err)?, ctx.set(b).map_err(err)?);
            Ok((pass_if(m), json!({ "a": a, "b": b, "intersects": m })))
        }
        CheckKind::Near { relation, a, b } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let n = rel.near(sp, ctx.set(a).map_err(err)?, ctx.set(b).map_err(err)?);
            Ok((pass_if(n), json!({ "relation": relation, "a": a, "b": b, "near": n })))
        }
        CheckKind::VerifyDecomposition {
            relation,
            target,
            pieces,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let d = Decomposition::new(ctx.sets_named(pieces).map_err(err)?);
            let v = connect::verify_decomposition(&rel, sp, ctx.set(target).map_err(err)?, &d);
            Ok((
                pass_if(v.is_ok()),
                json!({ "target": target, "pieces": pieces, "union_matches": v.union_matches, "failure": v.failure }),
            ))
        }
        CheckKind::FindDecomposition {
            relation,
            target,
            candidates,
            max_pieces,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let cands = ctx.sets_named(candidates).map_err(err)?;
            let max = opts.max_pieces.or(*max_pieces).unwrap_or(cands.len());
            let found = connect::find_decomposition_indices(&rel, sp, ctx.set(target).map_err(err)?, &cands, max)
                .map_err(err)?;
            Ok(match found {
                Some(idx) => (
                    Verdict::Pass,
                    json!({ "target": target, "max_pieces": max, "pieces": idx.iter().map(|&i| &candidates[i]).collect::<Vec<_>>() }),
                ),
                None => (
                    Verdict::NoneFound,
                    json!({ "target": target, "max_pieces": max, "pieces": null }),
                ),
            })
        }
        CheckKind::DeltaImpliesConnected {
            relation,
            target,
            candidates,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let cands = ctx.sets_named(candidates).map_err(err)?;
            let t = ctx.set(target).map_err(err)?;
            let max = opts.max_pieces.unwrap_or(cands.len());
            let Some(idx) = connect::find_decomposition_indices(&rel, sp, t, &cands, max).map_err(err)? else {
                return Ok((Verdict::NoneFound, json!({ "target": target, "pieces": null })));
            };
            let d = Decomposition::new(idx.iter().map(|&i| cands[i].clone()).collect());
            let connected = connect::delta_implies_connected(&rel, sp, t, &d).map_err(err)?;
            Ok((
                pass_if(connected),
                json!({ "target": target, "pieces": idx.iter().map(|&i| &candidates[i]).collect::<Vec<_>>(), "connected": connected }),
            ))
        }
        CheckKind::ClosureTheorem { relation, pieces } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let d = Decomposition::new(ctx.sets_named(pieces).map_err(err)?);
            let ok = connect::closure_theorem_check(&rel, sp, &d).map_err(err)?;
            Ok((pass_if(ok), json!({ "pieces": pieces, "closures_decompose": ok })))
        }
        CheckKind::BetweenTheorem {
            relation,
            pieces,
            between,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let d = Decomposition::new(ctx.sets_named(pieces).map_err(err)?);
            let ok = connect::between_theorem_check(&rel, sp, &d, ctx.set(between).map_err(err)?).map_err(err)?;
            Ok((
                pass_if(ok),
                json!({ "pieces": pieces, "between": between, "decomposes": ok }),
            ))
        }
        CheckKind::Axioms { relation, family } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let names = family.as_deref().unwrap_or_default();
            let fam = ctx.sets_named(names).map_err(err)?;
            Ok(axioms(&rel, sp, &fam, opts.seed))
        }
        _ => unreachable!("not a common check"),
    }
}

fn axioms<S: Space>(rel: &StrongProximityKind, sp: &S, fam: &[S::Set], seed: u64) -> (Verdict, Value) {
    let report = check_axioms(
        rel,
        sp,
        fam,
        AxiomOptions {
            seed,
            ..AxiomOptions::default()
        },
    );
    (
        pass_if(report.all_passed()),
        json!({ "family_size": fam.len(), "results": report.results }),
    )
}

fn links_of<S: Space>(ctx: &Ctx<S>, links: &[LinkSpec]) -> Result<Vec<CriterionLink<S::Set>>, InputError> {
    links
        .iter()
        .map(|l| {
            Ok(CriterionLink {
                from_nbhd: ctx.set(&l.from)?.clone(),
                to_nbhd: ctx.set(&l.to)?.clone(),
                piece: ctx.set(&l.piece)?.clone(),
            })
        })
        .collect()
}

fn chain_details(cover: &[String], chain: &Option<connect::StrongChain>) -> (Verdict, Value) {
    match chain {
        Some(c) => (
            Verdict::Pass,
            json!({ "links": c.links.iter().map(|&i| &cover[i]).collect::<Vec<_>>() }),
        ),
        None => (Verdict::NoneFound, json!({ "links": null })),
    }
}

fn spc_witness_json<S: Space>(
    ctx: &Ctx<S>,
    w: Option<SpcWitness>,
    family: &[S::Set],
    point: impl Fn(usize) -> String,
) -> Value {
    match w {
        None => Value::Null,
        Some(SpcWitness::Pair { a, b }) => json!({
            "a": name_or_describe(ctx, &family[a]),
            "b": name_or_describe(ctx, &family[b]),
        }),
        Some(SpcWitness::PointSet { point: p, set }) => json!({
            "point": point(p),
            "set": name_or_describe(ctx, &family[set]),
        }),
    }
}

fn spc_json<S: Space>(
    ctx: &Ctx<S>,
    r: &strongnear::maps::SpcReport,
    family: &[S::Set],
    point: impl Fn(usize) -> String + Copy,
) -> (Verdict, Value) {
    (
        pass_if(r.spc),
        json!({
            "pairs": r.pairs,
            "near_pairs": r.near_pairs,
            "spc": r.spc,
            "spc_witness": spc_witness_json(ctx, r.spc_witness, family, point),
            "spe": r.spe,
            "spe_witness": spc_witness_json(ctx, r.spe_witness, family, point),
        }),
    )
}

fn open_map_json(samples: &[String], verdicts: &[bool], all: bool) -> (Verdict, Value) {
    let per: Vec<Value> = samples
        .iter()
        .zip(verdicts)
        .map(|(s, v)| json!({ "sample": s, "open": v }))
        .collect();
    (pass_if(all), json!({ "samples": per }))
}

fn finite_check(ctx: &Ctx<FiniteSpace>, kind: &CheckKind, opts: &RunOptions) -> Outcome {
    if let Some(out) = common_check(ctx, kind, opts) {
        return out;
    }
    let sp = &ctx.space;
    let label = |p: usize| sp.labels()[p].clone();
    match kind {
        CheckKind::Axioms { relation, .. } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let fam = all_subsets(sp).map_err(err)?;
            Ok(axioms(&rel, sp, &fam, opts.seed))
        }
        CheckKind::Compatibility { relation } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let c = compatibility(&rel, sp).map_err(err)?;
            let details = match &c {
                Compatibility::Compatible => json!({ "status": "compatible" }),
                Compatibility::Incompatible { generated } => json!({
                    "status": "incompatible",
                    "generated": generated.iter().map(|s| sp.describe(s)).collect::<Vec<_>>(),
                }),
                Compatibility::NotATopology { witness } => json!({
                    "status": "not_a_topology",
                    "point": label(witness.point),
                    "a": sp.describe(&witness.a),
                    "b": sp.describe(&witness.b),
                }),
            };
            Ok((pass_if(c.is_compatible()), details))
        }
        CheckKind::CountableCriterion {
            relation,
            points,
            links,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let pts = points
                .iter()
                .map(|p| point_finite(sp, p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let ok =
                connect::countable_criterion_check(&rel, sp, &pts, &links_of(ctx, links).map_err(err)?).map_err(err)?;
            Ok((pass_if(ok), json!({ "decomposes": ok })))
        }
        CheckKind::FindChain { relation, cover, a, b } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let sets = ctx.sets_named(cover).map_err(err)?;
            let (a, b) = (point_finite(sp, a).map_err(err)?, point_finite(sp, b).map_err(err)?);
            let chain = connect::find_strong_chain(&rel, sp, &sets, a, b).map_err(err)?;
            Ok(chain_details(cover, &chain))
        }
        CheckKind::ChainTheorem { .. } => Err("chain_theorem needs the grid backend".into()),
        CheckKind::Spc {
            map,
            relation_x,
            relation_y,
            family,
        } => {
            let f = &ctx.map(map).map_err(err)?.map;
            let (rx, ry) = (
                ctx.relation(relation_x).map_err(err)?,
                ctx.relation(relation_y).map_err(err)?,
            );
            match family {
                Some(names) => {
                    let fam = ctx.sets_named(names).map_err(err)?;
                    let r = spc_check(f, &rx, sp, &ry, sp, &fam).map_err(err)?;
                    Ok(spc_json(ctx, &r, &fam, label))
                }
                None => {
                    let fam = all_subsets(sp).map_err(err)?;
                    let r = spc_exhaustive(f, &rx, sp, &ry, sp).map_err(err)?;
                    Ok(spc_json(ctx, &r, &fam, label))
                }
            }
        }
        CheckKind::OpenMap { map, samples } => {
            let f = &ctx.map(map).map_err(err)?.map;
            let sets = ctx.sets_named(samples).map_err(err)?;
            let r = open_map_check_finite(f, sp, sp, &sets).map_err(|e| not_open(e, samples))?;
            Ok(open_map_json(samples, &r.verdicts, r.all_passed))
        }
        CheckKind::ImagePreservation {
            map,
            relation_x,
            relation_y,
            target,
            pieces,
        } => {
            let f = &ctx.map(map).map_err(err)?.map;
            image_preservation(ctx, f, sp, relation_x, relation_y, target, pieces)
        }
        CheckKind::Hyper { relation, plain, miss } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let h = build_hyper(sp, rel, *plain, *miss).map_err(err)?;
            let connected = h.is_connected(h.all_members());
            let mut dump = serde_json::to_value(h.dump()).map_err(err)?;
            dump["connected"] = json!(connected);
            Ok((Verdict::Pass, dump))
        }
        CheckKind::HyperTheorem { relation, map } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let f = &ctx.map(map).map_err(err)?.map;
            let ok = homeomorphism_theorem_check(sp, sp, rel, rel, f).map_err(err)?;
            Ok((pass_if(ok), json!({ "hyper_homeomorphism": ok })))
        }
        CheckKind::Descriptive {} => Err("descriptive checks need a tessellation".into()),
        _ => unreachable!("handled by common_check"),
    }
}

fn not_open(e: strongnear::Error, names: &[String]) -> String {
    match e {
        strongnear::Error::NotOpen(i) => format!("sample {} is not open", names[i]),
        other => other.to_string(),
    }
}

fn image_preservation<S: Space>(
    ctx: &Ctx<S>,
    f: &PointMap,
    target_space: &S,
    relation_x: &str,
    relation_y: &str,
    target: &str,
    pieces: &[String],
) -> Outcome
where
    PointMap: SetMap<S, S>,
{
    let (rx, ry) = (
        ctx.relation(relation_x).map_err(err)?,
        ctx.relation(relation_y).map_err(err)?,
    );
    let d = Decomposition::new(ctx.sets_named(pieces).map_err(err)?);
    let ok =
        connect::image_preservation_check(f, &rx, &ctx.space, &ry, target_space, ctx.set(target).map_err(err)?, &d)
            .map_err(err)?;
    Ok((
        pass_if(ok),
        json!({ "target": target, "pieces": pieces, "image_decomposes": ok }),
    ))
}

fn output_grid<'a>(ctx: &'a Ctx<Grid>, m: &'a LoadedMap) -> &'a Grid {
    m.output.as_ref().unwrap_or(&ctx.space)
}

fn describe_point(g: &Grid, p: usize) -> String {
    let c = g.pixel_center(p);
    format!("({}, {})", c.x, c.y)
}

fn grid_check(ctx: &Ctx<Grid>, desc: Option<&DescriptiveCtx>, kind: &CheckKind, opts: &RunOptions) -> Outcome {
    if let Some(out) = common_check(ctx, kind, opts) {
        return out;
    }
    let sp = &ctx.space;
    let label = |p: usize| describe_point(sp, p);
    match kind {
        CheckKind::Axioms { relation, .. } => {
            let rel = ctx.relation(relation).map_err(err)?;
            Ok(axioms(&rel, sp, &default_grid_family(ctx), opts.seed))
        }
        CheckKind::Compatibility { .. } => Err("compatibility needs the finite backend".into()),
        CheckKind::CountableCriterion {
            relation,
            points,
            links,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let pts = points
                .iter()
                .map(|p| point_grid(sp, p))
                .collect::<Result<Vec<_>, _>>()
                .map_err(err)?;
            let ok =
                connect::countable_criterion_check(&rel, sp, &pts, &links_of(ctx, links).map_err(err)?).map_err(err)?;
            Ok((pass_if(ok), json!({ "decomposes": ok })))
        }
        CheckKind::FindChain { relation, cover, a, b } => {
            let rel = ctx.relation(relation).map_err(err)?;
            let sets = ctx.sets_named(cover).map_err(err)?;
            let (a, b) = (point_grid(sp, a).map_err(err)?, point_grid(sp, b).map_err(err)?);
            let chain = connect::find_strong_chain(&rel, sp, &sets, a, b).map_err(|e| not_open(e, cover))?;
            Ok(chain_details(cover, &chain))
        }
        CheckKind::ChainTheorem {
            relation,
            target,
            max_cover,
            pairs,
        } => {
            let rel = ctx.relation(relation).map_err(err)?;
            chain_theorem(sp, &rel, ctx.set(target).map_err(err)?, *max_cover, *pairs, opts)
        }
        CheckKind::Spc {
            map,
            relation_x,
            relation_y,
            family,
        } => {
            let m = ctx.map(map).map_err(err)?;
            let (rx, ry) = (
                ctx.relation(relation_x).map_err(err)?,
                ctx.relation(relation_y).map_err(err)?,
            );
            let fam = match family {
                Some(names) => ctx.sets_named(names).map_err(err)?,
                None => ctx.sets.iter().map(|(_, s)| s.clone()).collect(),
            };
            let r = spc_check(&m.map, &rx, sp, &ry, output_grid(ctx, m), &fam).map_err(err)?;
            Ok(spc_json(ctx, &r, &fam, label))
        }
        CheckKind::OpenMap { map, samples } => {
            let m = ctx.map(map).map_err(err)?;
            let sets = ctx.sets_named(samples).map_err(err)?;
            let r = open_map_check_grid(&m.map, sp, output_grid(ctx, m), &sets).map_err(|e| not_open(e, samples))?;
            Ok(open_map_json(samples, &r.verdicts, r.all_passed))
        }
        CheckKind::ImagePreservation {
            map,
            relation_x,
            relation_y,
            target,
            pieces,
        } => {
            let m = ctx.map(map).map_err(err)?;
            image_preservation(ctx, &m.map, output_grid(ctx, m), relation_x, relation_y, target, pieces)
        }
        CheckKind::Hyper { .. } | CheckKind::HyperTheorem { .. } => Err("hyperspaces need the finite backend".into()),
        CheckKind::Descriptive {} => {
            let d = desc.ok_or("scene has no tessellation")?;
            descriptive(d)
        }
        _ => unreachable!("handled by common_check"),
    }
}

/// Declared sets with their interiors, closures, complements and pairwise
/// unions.
fn default_grid_family(ctx: &Ctx<Grid>) -> Vec<GridRegion> {
    let sp = &ctx.space;
    let mut fam: Vec<GridRegion> = Vec::new();
    let mut push = |s: GridRegion| {
        if !fam.contains(&s) {
            fam.push(s);
        }
    };
    for (_, s) in &ctx.sets {
        push(s.clone());
        push(sp.interior(s));
        push(sp.closure(s));
        push(sp.complement(s));
    }
    for (i, (_, a)) in ctx.sets.iter().enumerate() {
        for (_, b) in &ctx.sets[i + 1..] {
            push(sp.union(a, b));
        }
    }
    fam
}

/// Overlapping vertical slabs cutting `target`'s bounding box into `k`
/// seeded pieces, each intersected with `target` and regularised in
/// `space`. Empty pieces are dropped.
pub fn slab_cover(space: &Grid, target: &GridRegion, k: usize, rng: &mut ChaCha8Rng) -> Vec<GridRegion> {
    let Some((x0, _, x1, _)) = target.bounding_box() else {
        return Vec::new();
    };
    let span = x1 - x0 + 1;
    let k = k.clamp(1, span.max(1));
    let mut cuts: Vec<usize> = (1..k).map(|_| rng.gen_range(x0..=x1)).collect();
    cuts.sort_unstable();
    let mut bounds = vec![x0];
    bounds.extend(cuts);
    bounds.push(x1 + 1);
    const OVERLAP: usize = 3;
    let (w, h) = (space.width(), space.height());
    bounds
        .windows(2)
        .filter_map(|b| {
            let lo = b[0].saturating_sub(OVERLAP);
            let hi = (b[1] + OVERLAP).min(w);
            let slab = GridRegion::from_fn(w, h, |x, _| (lo..hi).contains(&x)).and(target);
            let r = space.interior(&space.closure(&slab));
            (!r.is_empty()).then_some(r)
        })
        .collect()
}

fn chain_theorem(
    grid: &Grid,
    rel: &StrongProximityKind,
    target: &GridRegion,
    max_cover: usize,
    pairs: usize,
    opts: &RunOptions,
) -> Outcome {
    if target.is_empty() {
        return Err("target is empty".into());
    }
    let space = grid.clone().with_domain(target.clone()).map_err(err)?;
    let pts: Vec<usize> = target.iter().collect();
    let sizes: Vec<usize> = (2..=max_cover.max(2)).collect();
    let one = |k: usize| -> Result<Value, String> {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let cover = slab_cover(&space, target, k, &mut rng);
        let mut failures = Vec::new();
        for _ in 0..pairs {
            let a = pts[rng.gen_range(0..pts.len())];
            let b = pts[rng.gen_range(0..pts.len())];
            if connect::find_strong_chain(rel, &space, &cover, a, b)
                .map_err(err)?
                .is_none()
            {
                failures.push(json!({ "a": describe_point(&space, a), "b": describe_point(&space, b) }));
            }
        }
        Ok(json!({ "requested": k, "members": cover.len(), "pairs": pairs, "failures": failures }))
    };
    let covers: Vec<Value> = if opts.parallel {
        sizes.par_iter().map(|&k| one(k)).collect::<Result<_, _>>()?
    } else {
        sizes.iter().map(|&k| one(k)).collect::<Result<_, _>>()?
    };
    let ok = covers
        .iter()
        .all(|c| c["failures"].as_array().is_some_and(|f| f.is_empty()));
    Ok((
        pass_if(ok),
        json!({ "target_pixels": pts.len(), "target_connected": space.is_connected(&space.full()), "covers": covers }),
    ))
}

fn descriptive(d: &DescriptiveCtx) -> Outcome {
    let names = |m: usize| {
        let labels = d.space.space().labels();
        labels[m].clone()
    };
    let mut probes_ok = true;
    let probes: Vec<Value> = d
        .probes
        .iter()
        .map(|(name, at, want)| {
            let got = d.tessellation.descriptor_at(*at).map_err(err)?;
            probes_ok &= got == *want;
            Ok(json!({ "probe": name, "expected": names(*want), "got": names(got), "ok": got == *want }))
        })
        .collect::<Result<_, String>>()?;
    let r = descriptive_spc_check(&d.space, &d.tessellation, &d.family).map_err(err)?;
    Ok((pass_if(probes_ok && r.passed), json!({ "probes": probes, "spc": r })))
}
