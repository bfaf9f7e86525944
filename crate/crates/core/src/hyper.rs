//! Hyperspaces of nonempty closed sets with strongly-hit-and-miss
//! topologies.
//!
//! Members of `CL(X)` are indexed, and sets of members are [`PointSet`]s
//! over those indices. The topology is held through the smallest open
//! neighbourhood of each member, like [`FiniteSpace`].

use crate::error::{check_capacity, Error, Result};
use crate::maps::{spc_exhaustive, table_image, table_of, PointMap};
use crate::proximity::{is_compatible, Nearness, PlainProximity, StrongProximityKind};
use crate::set::PointSet;
use crate::spaces::{connected_by_min_neighborhoods, min_neighborhoods, FiniteSpace, Space};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Largest base space accepted by [`build_hyper`].
pub const MAX_HYPER_POINTS: usize = 5;
/// Largest member count for which [`HyperSpace::opens`] enumerates.
pub const MAX_OPEN_ENUMERATION_MEMBERS: usize = 16;

/// Which miss sets complete the subbase.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MissVariant {
    /// `A⁺ = {E : E ∩ (X∖A) = ∅}`.
    #[default]
    Plus,
    /// `A⁺⁺ = {E : not E δ (X∖A)}` for the plain proximity δ.
    PlusPlus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SubbaseSource {
    /// `V^⩕` for the open set `V`.
    Hit { open: PointSet },
    /// `A⁺` or `A⁺⁺` for the open set `A`.
    Miss { open: PointSet },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubbaseElement {
    pub source: SubbaseSource,
    pub members: PointSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperSpace {
    base: FiniteSpace,
    members: Vec<PointSet>,
    subbase: Vec<SubbaseElement>,
    min_nbhd: Vec<PointSet>,
}

/// The nonempty closed sets of `space`, sorted by bitmask.
pub fn closed_members(space: &FiniteSpace) -> Vec<PointSet> {
    space.closed_sets().into_iter().filter(|c| !c.is_empty()).collect()
}

pub fn hit_set(kind: StrongProximityKind, space: &FiniteSpace, members: &[PointSet], v: PointSet) -> PointSet {
    PointSet::from_indices((0..members.len()).filter(|&i| kind.near(space, &members[i], &v)))
}

pub fn miss_set(
    variant: MissVariant,
    plain: PlainProximity,
    space: &FiniteSpace,
    members: &[PointSet],
    a: PointSet,
) -> PointSet {
    let outside = a.complement_in(space.len());
    PointSet::from_indices((0..members.len()).filter(|&i| match variant {
        MissVariant::Plus => !members[i].intersects(outside),
        MissVariant::PlusPlus => !plain.near(space, &members[i], &outside),
    }))
}

/// Build `CL(X)` with the subbase `{V^⩕} ∪ {A⁺ or A⁺⁺}` over the opens of
/// `space`.
pub fn build_hyper(
    space: &FiniteSpace,
    kind: StrongProximityKind,
    plain: PlainProximity,
    variant: MissVariant,
) -> Result<HyperSpace> {
    check_capacity("hyperspace base points", space.len(), MAX_HYPER_POINTS)?;
    let members = closed_members(space);
    let mut subbase = Vec::with_capacity(2 * space.opens().len());
    for &o in space.opens() {
        subbase.push(SubbaseElement {
            source: SubbaseSource::Hit { open: o },
            members: hit_set(kind, space, &members, o),
        });
    }
    for &o in space.opens() {
        subbase.push(SubbaseElement {
            source: SubbaseSource::Miss { open: o },
            members: miss_set(variant, plain, space, &members, o),
        });
    }
    let generators: Vec<PointSet> = subbase.iter().map(|s| s.members).collect();
    let min_nbhd = min_neighborhoods(members.len(), &generators);
    Ok(HyperSpace {
        base: space.clone(),
        members,
        subbase,
        min_nbhd,
    })
}

impl HyperSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn members(&self) -> &[PointSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn subbase(&self) -> &[SubbaseElement] {
        &self.subbase
    }

    pub fn all_members(&self) -> PointSet {
        PointSet::full(self.members.len())
    }

    pub fn member_index(&self, e: PointSet) -> Option<usize> {
        self.members.binary_search(&e).ok()
    }

    /// Smallest hyper-open set containing member `i`.
    pub fn minimal_neighborhood(&self, i: usize) -> PointSet {
        self.min_nbhd[i]
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        s.iter().all(|i| self.min_nbhd[i].is_subset(s))
    }

    pub fn is_connected(&self, s: PointSet) -> bool {
        connected_by_min_neighborhoods(&self.min_nbhd, s)
    }

    /// Every hyper-open set, sorted. Refuses large hyperspaces.
    pub fn opens(&self) -> Result<Vec<PointSet>> {
        check_capacity(
            "hyperspace members for open enumeration",
            self.len(),
            MAX_OPEN_ENUMERATION_MEMBERS,
        )?;
        let mut opens: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
        for &g in &self.min_nbhd {
            let extra: Vec<PointSet> = opens.iter().map(|&o| o | g).collect();
            opens.extend(extra);
        }
        let mut v: Vec<PointSet> = opens.into_iter().collect();
        v.sort();
        Ok(v)
    }

    pub fn describe_member(&self, i: usize) -> String {
        self.base.describe(&self.members[i])
    }

    pub fn dump(&self) -> HyperDump {
        let names = |s: PointSet| s.iter().map(|i| self.describe_member(i)).collect::<Vec<_>>();
        let source = |s: &SubbaseSource| match s {
            SubbaseSource::Hit { open } => format!("hit {}", self.base.describe(open)),
            SubbaseSource::Miss { open } => format!("miss {}", self.base.describe(open)),
        };
        HyperDump {
            members: (0..self.len()).map(|i| self.describe_member(i)).collect(),
            subbase: self
                .subbase
                .iter()
                .map(|s| DumpedSubbase {
                    source: source(&s.source),
                    members: names(s.members),
                })
                .collect(),
            opens: self.opens().ok().map(|os| os.into_iter().map(names).collect()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpedSubbase {
    pub source: String,
    pub members: Vec<String>,
}

/// Readable form of a hyperspace. `opens` is absent when too many.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperDump {
    pub members: Vec<String>,
    pub subbase: Vec<DumpedSubbase>,
    pub opens: Option<Vec<Vec<String>>>,
}

/// `f^⩕`: member `i` of `hx` goes to member `result[i]` of `hy`.
pub fn hyper_map(f: &PointMap, hx: &HyperSpace, hy: &HyperSpace) -> Result<Vec<usize>> {
    let table = table_of(f, &hx.base, &hy.base)?;
    (0..hx.len())
        .map(|i| {
            let img = table_image(&table, hx.members[i]);
            hy.member_index(img)
                .ok_or_else(|| Error::NotClosedPreserving(hx.describe_member(i)))
        })
        .collect()
}

/// Whether a member map is a bijection carrying minimal neighbourhoods onto
/// minimal neighbourhoods, which on these spaces is being a homeomorphism.
pub fn is_hyper_homeomorphism(g: &[usize], hx: &HyperSpace, hy: &HyperSpace) -> bool {
    if g.len() != hy.len() {
        return false;
    }
    let image = |s: PointSet| PointSet::from_indices(s.iter().map(|i| g[i]));
    if image(hx.all_members()) != hy.all_members() {
        return false;
    }
    (0..hx.len()).all(|i| image(hx.min_nbhd[i]) == hy.min_nbhd[g[i]])
}

fn is_bijective(table: &[usize], n_target: usize) -> bool {
    table.len() == n_target && table_image(table, PointSet::full(table.len())) == PointSet::full(n_target)
}

/// Bijective strongly proximal equivalences induce homeomorphisms of the
/// `A⁺` hyperspaces. Errors when the hypotheses fail.
pub fn homeomorphism_theorem_check(
    x: &FiniteSpace,
    y: &FiniteSpace,
    kind_x: StrongProximityKind,
    kind_y: StrongProximityKind,
    f: &PointMap,
) -> Result<bool> {
    check_capacity("hyperspace base points", x.len().max(y.len()), MAX_HYPER_POINTS)?;
    if !is_compatible(&kind_x, x)? || !is_compatible(&kind_y, y)? {
        return Err(Error::Precondition("proximity not compatible with the topology".into()));
    }
    let table = table_of(f, x, y)?;
    if !is_bijective(&table, y.len()) {
        return Err(Error::Precondition("map is not a bijection".into()));
    }
    if !spc_exhaustive(f, &kind_x, x, &kind_y, y)?.spe {
        return Err(Error::Precondition("map is not strongly proximally equivalent".into()));
    }
    let plain = PlainProximity::default();
    let hx = build_hyper(x, kind_x, plain, MissVariant::Plus)?;
    let hy = build_hyper(y, kind_y, plain, MissVariant::Plus)?;
    let g = hyper_map(f, &hx, &hy)?;
    Ok(is_hyper_homeomorphism(&g, &hx, &hy))
}
