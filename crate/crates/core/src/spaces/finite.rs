use super::Space;
use crate::error::{check_capacity, Error, Result};
use crate::set::PointSet;
use std::collections::HashSet;

/// Largest carrier accepted by [`FiniteSpace`].
pub const MAX_POINTS: usize = 16;
/// Largest carrier for [`enumerate_topologies`].
pub const MAX_ENUMERATED_POINTS: usize = 5;

/// An explicit finite topological space.
///
/// The topology is the one generated by `basis`: all unions of finite
/// intersections of basis elements, plus the empty set and the whole
/// carrier. On a finite carrier every point has a smallest open
/// neighbourhood, which is what interior and connectedness use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    labels: Vec<String>,
    basis: Vec<PointSet>,
    min_nbhd: Vec<PointSet>,
    opens: Vec<PointSet>,
}

/// Smallest open neighbourhood of each point for the topology generated by
/// `generators` on `{0, .., n-1}`.
pub(crate) fn min_neighborhoods(n: usize, generators: &[PointSet]) -> Vec<PointSet> {
    (0..n)
        .map(|x| {
            generators
                .iter()
                .filter(|g| g.contains(x))
                .fold(PointSet::full(n), |acc, g| acc & *g)
        })
        .collect()
}

/// All unions of the given generators (including the empty union), sorted.
fn union_closure(generators: &[PointSet]) -> Vec<PointSet> {
    let mut opens: HashSet<PointSet> = HashSet::from([PointSet::EMPTY]);
    for &g in generators {
        let extra: Vec<PointSet> = opens.iter().map(|&o| o | g).collect();
        opens.extend(extra);
    }
    let mut v: Vec<PointSet> = opens.into_iter().collect();
    v.sort();
    v
}

/// Connectedness of the subspace `s` of an Alexandrov space given by its
/// minimal neighbourhoods: components follow the specialization relation.
pub(crate) fn connected_by_min_neighborhoods(min_nbhd: &[PointSet], s: PointSet) -> bool {
    let Some(start) = s.iter().next() else {
        return true;
    };
    let mut seen = PointSet::singleton(start);
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for y in (s - seen).iter() {
            if min_nbhd[x].contains(y) || min_nbhd[y].contains(x) {
                seen = seen | PointSet::singleton(y);
                stack.push(y);
            }
        }
    }
    seen == s
}

impl FiniteSpace {
    /// Generate the topology on `points` from `basis`.
    pub fn generate<S: Into<String>>(points: Vec<S>, basis: Vec<PointSet>) -> Result<Self> {
        let labels: Vec<String> = points.into_iter().map(Into::into).collect();
        check_capacity("finite space", labels.len(), MAX_POINTS)?;
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Invalid("duplicate point label".into()));
        }
        let n = labels.len();
        let carrier = PointSet::full(n);
        if let Some(bad) = basis.iter().find(|b| !b.is_subset(carrier)) {
            return Err(Error::Invalid(format!(
                "basis element {bad:?} is not within the carrier"
            )));
        }
        let min_nbhd = min_neighborhoods(n, &basis);
        let opens = union_closure(&min_nbhd);
        Ok(FiniteSpace {
            labels,
            basis,
            min_nbhd,
            opens,
        })
    }

    /// Generate from basis elements written as label lists.
    pub fn from_labels(points: &[&str], basis: &[&[&str]]) -> Result<Self> {
        let labels: Vec<String> = points.iter().map(|s| s.to_string()).collect();
        let basis = basis
            .iter()
            .map(|b| Self::lookup(&labels, b))
            .collect::<Result<Vec<_>>>()?;
        Self::generate(labels, basis)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::generate(default_labels(n), (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        Self::generate(default_labels(n), Vec::new())
    }

    fn lookup(labels: &[String], names: &[&str]) -> Result<PointSet> {
        names.iter().try_fold(PointSet::EMPTY, |acc, name| {
            labels
                .iter()
                .position(|l| l == name)
                .map(|i| acc | PointSet::singleton(i))
                .ok_or_else(|| Error::Invalid(format!("unknown point '{name}'")))
        })
    }

    /// Resolve a list of point labels to a subset.
    pub fn set_of(&self, names: &[&str]) -> Result<PointSet> {
        Self::lookup(&self.labels, names)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_empty_space(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn basis(&self) -> &[PointSet] {
        &self.basis
    }

    /// Every open set, sorted by bitmask.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn minimal_neighborhood(&self, x: usize) -> PointSet {
        self.min_nbhd[x]
    }

    pub fn minimal_neighborhoods(&self) -> &[PointSet] {
        &self.min_nbhd
    }

    /// Closed sets: complements of opens.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let mut v: Vec<PointSet> = self.opens.iter().map(|o| o.complement_in(self.len())).collect();
        v.sort();
        v
    }

    pub fn subsets(&self) -> impl Iterator<Item = PointSet> {
        PointSet::all_subsets(self.len())
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("p{i}")
            }
        })
        .collect()
}

impl Space for FiniteSpace {
    type Set = PointSet;

    fn full(&self) -> PointSet {
        PointSet::full(self.len())
    }

    fn empty(&self) -> PointSet {
        PointSet::EMPTY
    }

    fn singleton(&self, p: usize) -> PointSet {
        PointSet::singleton(p)
    }

    fn contains(&self, s: &PointSet, p: usize) -> bool {
        s.contains(p)
    }

    fn points(&self, s: &PointSet) -> Vec<usize> {
        s.iter().collect()
    }

    fn count(&self, s: &PointSet) -> usize {
        s.len()
    }

    fn union(&self, a: &PointSet, b: &PointSet) -> PointSet {
        *a | *b
    }

    fn intersection(&self, a: &PointSet, b: &PointSet) -> PointSet {
        *a & *b
    }

    fn complement(&self, s: &PointSet) -> PointSet {
        s.complement_in(self.len())
    }

    fn interior(&self, s: &PointSet) -> PointSet {
        PointSet::from_indices(s.iter().filter(|&x| self.min_nbhd[x].is_subset(*s)))
    }

    fn is_connected(&self, s: &PointSet) -> bool {
        connected_by_min_neighborhoods(&self.min_nbhd, *s)
    }

    fn is_open(&self, s: &PointSet) -> bool {
        self.opens.binary_search(s).is_ok()
    }

    fn describe(&self, s: &PointSet) -> String {
        let names: Vec<&str> = s.iter().map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// All topologies on `n` labelled points (`a`, `b`, ...), one per preorder.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>> {
    check_capacity("topology enumeration", n, MAX_ENUMERATED_POINTS)?;
    let mut out = Vec::new();
    // U_x always contains x; choose the rest of U_x freely, keep transitive choices.
    let others: Vec<PointSet> = (0..n).map(|x| PointSet::full(n) - PointSet::singleton(x)).collect();
    let mut current = vec![PointSet::EMPTY; n];
    fn rec(x: usize, n: usize, others: &[PointSet], current: &mut Vec<PointSet>, out: &mut Vec<Vec<PointSet>>) {
        if x == n {
            let transitive = (0..n).all(|a| current[a].iter().all(|b| current[b].is_subset(current[a])));
            if transitive {
                out.push(current.clone());
            }
            return;
        }
        let pool = others[x];
        let mut sub = pool.0;
        loop {
            current[x] = PointSet(sub) | PointSet::singleton(x);
            rec(x + 1, n, others, current, out);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool.0;
        }
    }
    let mut nbhds = Vec::new();
    rec(0, n, &others, &mut current, &mut nbhds);
    nbhds.sort();
    for basis in nbhds {
        out.push(FiniteSpace::generate(default_labels(n), basis)?);
    }
    Ok(out)
}
