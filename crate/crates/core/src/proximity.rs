//! Strong proximity relations, the axiom harness, and the topology a strong
//! proximity generates on a finite space.

use crate::error::{check_capacity, Result};
use crate::set::PointSet;
use crate::spaces::{FiniteSpace, Space};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest carrier for exhaustive subset sweeps.
pub const MAX_EXHAUSTIVE_POINTS: usize = 8;

/// The set predicate underlying a strong proximity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapVariant {
    /// `A ∩ B ≠ ∅`
    Overlap,
    /// `A ∩ int B ≠ ∅` or `int A ∩ B ≠ ∅`
    MixedOverlap,
    /// `int A ∩ int B ≠ ∅`
    InteriorOverlap,
}

/// A concrete strong proximity: an overlap predicate plus the optional
/// whole-space and singleton clauses.
///
/// Clauses are evaluated in a fixed order: an empty argument is never near;
/// with the whole-space clause, `X` is near every nonempty set; with the
/// singleton clauses two singletons are near iff equal and `{x}` is near `B`
/// iff `x ∈ int B`; otherwise the variant decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrongProximityKind {
    pub variant: OverlapVariant,
    #[serde(default)]
    pub whole_space_clause: bool,
    #[serde(default)]
    pub singleton_clauses: bool,
}

impl StrongProximityKind {
    pub const fn new(variant: OverlapVariant, whole_space_clause: bool, singleton_clauses: bool) -> Self {
        StrongProximityKind {
            variant,
            whole_space_clause,
            singleton_clauses,
        }
    }

    /// Interior overlap with both clauses.
    pub const fn interior_overlap() -> Self {
        Self::new(OverlapVariant::InteriorOverlap, true, true)
    }

    /// Mixed overlap with both clauses.
    pub const fn mixed_overlap() -> Self {
        Self::new(OverlapVariant::MixedOverlap, true, true)
    }

    /// Plain intersection, no clauses.
    pub const fn overlap() -> Self {
        Self::new(OverlapVariant::Overlap, false, false)
    }
}

impl fmt::Display for StrongProximityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            OverlapVariant::Overlap => "overlap",
            OverlapVariant::MixedOverlap => "mixed_overlap",
            OverlapVariant::InteriorOverlap => "interior_overlap",
        };
        write!(f, "{name}")?;
        if self.whole_space_clause {
            write!(f, "+whole")?;
        }
        if self.singleton_clauses {
            write!(f, "+singletons")?;
        }
        Ok(())
    }
}

/// A nearness relation between subsets of a space.
pub trait Nearness<S: Space> {
    fn near(&self, space: &S, a: &S::Set, b: &S::Set) -> bool;

    /// Point-to-set nearness `x δ A`, used when generating a topology from
    /// the relation. Defaults to `{x} δ A`.
    fn near_point(&self, space: &S, x: usize, a: &S::Set) -> bool {
        self.near(space, &space.singleton(x), a)
    }
}

/// Evaluate `A δ̂ B` for `kind`.
pub fn strongly_near<S: Space>(kind: StrongProximityKind, space: &S, a: &S::Set, b: &S::Set) -> bool {
    if space.is_empty(a) || space.is_empty(b) {
        return false;
    }
    if kind.whole_space_clause {
        let full = space.full();
        if *a == full || *b == full {
            return true;
        }
    }
    if kind.singleton_clauses {
        match (space.single_point(a), space.single_point(b)) {
            (Some(x), Some(y)) => return x == y,
            (Some(x), None) => return space.contains(&space.interior(b), x),
            (None, Some(y)) => return space.contains(&space.interior(a), y),
            (None, None) => {}
        }
    }
    match kind.variant {
        OverlapVariant::Overlap => space.intersects(a, b),
        OverlapVariant::MixedOverlap => {
            space.intersects(a, &space.interior(b)) || space.intersects(&space.interior(a), b)
        }
        OverlapVariant::InteriorOverlap => space.intersects(&space.interior(a), &space.interior(b)),
    }
}

impl<S: Space> Nearness<S> for StrongProximityKind {
    fn near(&self, space: &S, a: &S::Set, b: &S::Set) -> bool {
        strongly_near(*self, space, a, b)
    }

    /// With the singleton clauses, `x δ̂ A` is `x ∈ int A` even when `A` is
    /// itself a singleton; otherwise every singleton would be generated-open.
    fn near_point(&self, space: &S, x: usize, a: &S::Set) -> bool {
        if space.is_empty(a) {
            return false;
        }
        if self.whole_space_clause && *a == space.full() {
            return true;
        }
        if self.singleton_clauses {
            space.contains(&space.interior(a), x)
        } else {
            strongly_near(*self, space, &space.singleton(x), a)
        }
    }
}

/// Adapter turning a closure into a [`Nearness`].
pub struct FnRelation<F>(pub F);

impl<S: Space, F: Fn(&S, &S::Set, &S::Set) -> bool> Nearness<S> for FnRelation<F> {
    fn near(&self, space: &S, a: &S::Set, b: &S::Set) -> bool {
        (self.0)(space, a, b)
    }
}

/// Ordinary (non-strong) proximities used by the far-miss hyperspace
/// subbase.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlainProximity {
    #[default]
    ClosureOverlap,
    Overlap,
}

impl PlainProximity {
    pub fn near<S: Space>(self, space: &S, a: &S::Set, b: &S::Set) -> bool {
        match self {
            PlainProximity::ClosureOverlap => space.intersects(&space.closure(a), &space.closure(b)),
            PlainProximity::Overlap => space.intersects(a, b),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    N0,
    N1,
    N2,
    N3,
    N4,
    N5,
    N6,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::N0,
        Axiom::N1,
        Axiom::N2,
        Axiom::N3,
        Axiom::N4,
        Axiom::N5,
        Axiom::N6,
    ];
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn get(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("every axiom is reported")
    }

    pub fn passed(&self, axiom: Axiom) -> bool {
        self.get(axiom).passed
    }
}

/// Sampling bounds for [`check_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomOptions {
    pub seed: u64,
    /// Random sub-families (size 2..=4) tried per near pair for N3.
    pub n3_families: usize,
    /// Cap on points examined per set for N5 and overall for N6.
    pub point_samples: usize,
}

impl Default for AxiomOptions {
    fn default() -> Self {
        AxiomOptions {
            seed: 0,
            n3_families: 8,
            point_samples: 32,
        }
    }
}

struct Tally {
    axiom: Axiom,
    cases: usize,
    witness: Option<Vec<String>>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally {
            axiom,
            cases: 0,
            witness: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Vec<String>) {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn finish(self) -> AxiomResult {
        AxiomResult {
            axiom: self.axiom,
            passed: self.witness.is_none(),
            cases: self.cases,
            witness: self.witness,
        }
    }
}

fn sample_points(points: Vec<usize>, cap: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    if points.len() <= cap {
        points
    } else {
        let mut v: Vec<usize> = points.choose_multiple(rng, cap).copied().collect();
        v.sort_unstable();
        v
    }
}

/// Check N0–N6 for `rel` over `family` (plus `∅` and `X`).
///
/// Failures are reported with the first witness found. N3 is tested on all
/// pairs `{B*, C}` and on seeded random sub-families of up to four members.
pub fn check_axioms<S, R>(rel: &R, space: &S, family: &[S::Set], opts: AxiomOptions) -> AxiomReport
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let empty = space.empty();
    let full = space.full();
    let mut fam: Vec<S::Set> = family.to_vec();
    for extra in [&empty, &full] {
        if !fam.contains(extra) {
            fam.push(extra.clone());
        }
    }
    let d = |s: &S::Set| space.describe(s);
    let interiors: Vec<S::Set> = fam.iter().map(|s| space.interior(s)).collect();
    let near: Vec<Vec<bool>> = fam
        .iter()
        .map(|a| fam.iter().map(|b| rel.near(space, a, b)).collect())
        .collect();

    let mut n0 = Tally::new(Axiom::N0);
    for a in &fam {
        n0.check(!rel.near(space, &empty, a) && !rel.near(space, a, &empty), || {
            vec!["∅".into(), d(a)]
        });
        if !space.is_empty(a) {
            n0.check(rel.near(space, &full, a), || vec![d(&full), d(a)]);
        }
    }

    let mut n1 = Tally::new(Axiom::N1);
    let mut n2 = Tally::new(Axiom::N2);
    let mut n4 = Tally::new(Axiom::N4);
    for (i, a) in fam.iter().enumerate() {
        for (j, b) in fam.iter().enumerate() {
            n1.check(near[i][j] == near[j][i], || vec![d(a), d(b)]);
            n2.check(!near[i][j] || space.intersects(a, b), || vec![d(a), d(b)]);
            n4.check(!space.intersects(&interiors[i], &interiors[j]) || near[i][j], || {
                vec![d(a), d(b)]
            });
        }
    }

    let mut n3 = Tally::new(Axiom::N3);
    for (k, b_star) in fam.iter().enumerate() {
        if space.is_empty(&interiors[k]) {
            continue;
        }
        for (i, a) in fam.iter().enumerate() {
            if !near[i][k] {
                continue;
            }
            for c in &fam {
                let u = space.union(b_star, c);
                n3.check(rel.near(space, a, &u), || vec![d(a), d(b_star), d(c)]);
            }
            if fam.len() > 2 {
                for _ in 0..opts.n3_families {
                    let size = rng.gen_range(2..=4usize.min(fam.len()));
                    let members: Vec<&S::Set> = fam.choose_multiple(&mut rng, size - 1).collect();
                    let u = members.iter().fold(b_star.clone(), |acc, m| space.union(&acc, m));
                    n3.check(rel.near(space, a, &u), || {
                        let mut w = vec![d(a), d(b_star)];
                        w.extend(members.iter().map(|m| d(m)));
                        w
                    });
                }
            }
        }
    }

    let mut n5 = Tally::new(Axiom::N5);
    for (i, a) in fam.iter().enumerate() {
        let pts = sample_points(space.points(&interiors[i]), opts.point_samples, &mut rng);
        for x in pts {
            n5.check(rel.near(space, &space.singleton(x), a), || {
                vec![d(&space.singleton(x)), d(a)]
            });
        }
    }

    let mut n6 = Tally::new(Axiom::N6);
    let support = space.union_all(fam.iter());
    let pts = sample_points(space.points(&support), opts.point_samples, &mut rng);
    for &x in &pts {
        for &y in &pts {
            let (sx, sy) = (space.singleton(x), space.singleton(y));
            n6.check(rel.near(space, &sx, &sy) == (x == y), || vec![d(&sx), d(&sy)]);
        }
    }

    AxiomReport {
        results: [n0, n1, n2, n3, n4, n5, n6].into_iter().map(Tally::finish).collect(),
    }
}

/// Every subset of a small finite carrier.
pub fn all_subsets(space: &FiniteSpace) -> Result<Vec<PointSet>> {
    check_capacity("exhaustive subset sweep", space.len(), MAX_EXHAUSTIVE_POINTS)?;
    Ok(space.subsets().collect())
}

/// `{A ⊆ X : x δ̂ A for every x ∈ A}`, sorted.
pub fn generated_opens<R: Nearness<FiniteSpace> + ?Sized>(rel: &R, space: &FiniteSpace) -> Result<Vec<PointSet>> {
    Ok(all_subsets(space)?
        .into_iter()
        .filter(|a| a.iter().all(|x| rel.near_point(space, x, a)))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionWitness {
    pub point: usize,
    pub a: PointSet,
    pub b: PointSet,
}

/// Exhaustively test `x δ̂ A, x δ̂ B ⇒ x δ̂ (A ∩ B)`; returns the first
/// counterexample.
pub fn intersection_condition<R: Nearness<FiniteSpace> + ?Sized>(
    rel: &R,
    space: &FiniteSpace,
) -> Result<Option<IntersectionWitness>> {
    let subsets = all_subsets(space)?;
    let n = space.len();
    // near_point table: row per subset, bit per point
    let table: Vec<PointSet> = subsets
        .iter()
        .map(|a| PointSet::from_indices((0..n).filter(|&x| rel.near_point(space, x, a))))
        .collect();
    for (ia, a) in subsets.iter().enumerate() {
        for (ib, b) in subsets.iter().enumerate() {
            let both = table[ia] & table[ib];
            let meet = table[(*a & *b).0 as usize];
            if let Some(x) = (both - meet).iter().next() {
                return Ok(Some(IntersectionWitness { point: x, a: *a, b: *b }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Compatibility {
    Compatible,
    Incompatible { generated: Vec<PointSet> },
    NotATopology { witness: IntersectionWitness },
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        matches!(self, Compatibility::Compatible)
    }
}

/// Whether the topology generated by `rel` equals the space's own.
pub fn compatibility<R: Nearness<FiniteSpace> + ?Sized>(rel: &R, space: &FiniteSpace) -> Result<Compatibility> {
    if let Some(witness) = intersection_condition(rel, space)? {
        return Ok(Compatibility::NotATopology { witness });
    }
    let generated = generated_opens(rel, space)?;
    let closed = FiniteSpace::generate(space.labels().to_vec(), generated.clone())?;
    Ok(if closed.opens() == space.opens() {
        Compatibility::Compatible
    } else {
        Compatibility::Incompatible { generated }
    })
}

pub fn is_compatible<R: Nearness<FiniteSpace> + ?Sized>(rel: &R, space: &FiniteSpace) -> Result<bool> {
    Ok(compatibility(rel, space)?.is_compatible())
}
