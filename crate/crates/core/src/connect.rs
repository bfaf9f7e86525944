//! Strong connectedness: decompositions into chain-ordered connected pieces,
//! their search, strong chains over open covers, and executable checks of
//! the theorems relating them to ordinary connectedness.

use crate::error::{check_capacity, Error, Result};
use crate::maps::SetMap;
use crate::proximity::Nearness;
use crate::spaces::Space;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

/// Upper bound on candidate pieces and cover sizes for exhaustive search.
pub const MAX_SEARCH_SETS: usize = 12;

/// Ordered pieces `X_1, .., X_n` whose union is the target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<T> {
    pub pieces: Vec<T>,
}

impl<T> Decomposition<T> {
    pub fn new(pieces: Vec<T>) -> Self {
        Decomposition { pieces }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }
}

/// First condition that fails when verifying a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DecompositionFailure {
    NoPieces,
    EmptyPiece {
        index: usize,
    },
    UnionMismatch,
    PieceDisconnected {
        index: usize,
    },
    InteriorDisconnected {
        index: usize,
    },
    /// Piece `index - 1` is not strongly near piece `index`.
    NotNear {
        index: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieceDiagnostics {
    pub nonempty: bool,
    pub connected: bool,
    pub interior_connected: bool,
    /// `None` for the first piece.
    pub near_previous: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionVerdict {
    pub union_matches: bool,
    pub pieces: Vec<PieceDiagnostics>,
    pub failure: Option<DecompositionFailure>,
}

impl DecompositionVerdict {
    pub fn is_ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check that `d` witnesses strong connectedness of `target`: the pieces
/// cover `target` exactly, each piece and its interior are connected, and
/// consecutive pieces are strongly near.
pub fn verify_decomposition<S, R>(
    rel: &R,
    space: &S,
    target: &S::Set,
    d: &Decomposition<S::Set>,
) -> DecompositionVerdict
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    let union = space.union_all(d.pieces.iter());
    let union_matches = union == *target;
    let pieces: Vec<PieceDiagnostics> = d
        .pieces
        .iter()
        .enumerate()
        .map(|(i, p)| PieceDiagnostics {
            nonempty: !space.is_empty(p),
            connected: space.is_connected(p),
            interior_connected: space.is_connected(&space.interior(p)),
            near_previous: (i > 0).then(|| rel.near(space, &d.pieces[i - 1], p)),
        })
        .collect();
    let failure = if d.pieces.is_empty() {
        Some(DecompositionFailure::NoPieces)
    } else if let Some(index) = pieces.iter().position(|p| !p.nonempty) {
        Some(DecompositionFailure::EmptyPiece { index })
    } else if !union_matches {
        Some(DecompositionFailure::UnionMismatch)
    } else {
        pieces.iter().enumerate().find_map(|(index, p)| {
            if !p.connected {
                Some(DecompositionFailure::PieceDisconnected { index })
            } else if !p.interior_connected {
                Some(DecompositionFailure::InteriorDisconnected { index })
            } else if p.near_previous == Some(false) {
                Some(DecompositionFailure::NotNear { index })
            } else {
                None
            }
        })
    };
    DecompositionVerdict {
        union_matches,
        pieces,
        failure,
    }
}

/// Search orderings of distinct candidates for a decomposition of `target`
/// with at most `max_pieces` pieces.
///
/// Candidates are tried in input order and shorter prefixes are accepted
/// before their extensions, so the result is the lexicographically first
/// witness by candidate index.
pub fn find_decomposition<S, R>(
    rel: &R,
    space: &S,
    target: &S::Set,
    candidates: &[S::Set],
    max_pieces: usize,
) -> Result<Option<Decomposition<S::Set>>>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    Ok(find_decomposition_indices(rel, space, target, candidates, max_pieces)?
        .map(|idx| Decomposition::new(idx.into_iter().map(|i| candidates[i].clone()).collect())))
}

/// As [`find_decomposition`], returning candidate indices.
pub fn find_decomposition_indices<S, R>(
    rel: &R,
    space: &S,
    target: &S::Set,
    candidates: &[S::Set],
    max_pieces: usize,
) -> Result<Option<Vec<usize>>>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    check_capacity("decomposition candidates", candidates.len(), MAX_SEARCH_SETS)?;
    let n = candidates.len();
    let usable: Vec<bool> = candidates
        .iter()
        .map(|c| {
            !space.is_empty(c)
                && space.is_subset(c, target)
                && space.is_connected(c)
                && space.is_connected(&space.interior(c))
        })
        .collect();
    let near: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| usable[i] && usable[j] && i != j && rel.near(space, &candidates[i], &candidates[j]))
                .collect()
        })
        .collect();

    struct Search<'a, S: Space> {
        space: &'a S,
        target: &'a S::Set,
        candidates: &'a [S::Set],
        near: Vec<Vec<bool>>,
        max_pieces: usize,
        dead: HashSet<(usize, u16)>,
    }

    impl<S: Space> Search<'_, S> {
        fn go(&mut self, path: &mut Vec<usize>, used: u16, union: &S::Set) -> bool {
            if union == self.target {
                return true;
            }
            if path.len() >= self.max_pieces {
                return false;
            }
            let last = *path.last().expect("search starts from a piece");
            if self.dead.contains(&(last, used)) {
                return false;
            }
            for next in 0..self.candidates.len() {
                if used & (1 << next) != 0 || !self.near[last][next] {
                    continue;
                }
                path.push(next);
                let u = self.space.union(union, &self.candidates[next]);
                if self.go(path, used | (1 << next), &u) {
                    return true;
                }
                path.pop();
            }
            self.dead.insert((last, used));
            false
        }
    }

    let mut search = Search {
        space,
        target,
        candidates,
        near,
        max_pieces,
        dead: HashSet::new(),
    };
    if max_pieces == 0 {
        return Ok(None);
    }
    for start in (0..n).filter(|&i| usable[i]) {
        let mut path = vec![start];
        if search.go(&mut path, 1 << start, &candidates[start]) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

fn require_verified<S, R>(rel: &R, space: &S, target: &S::Set, d: &Decomposition<S::Set>) -> Result<()>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    let v = verify_decomposition(rel, space, target, d);
    match v.failure {
        None => Ok(()),
        Some(f) => Err(Error::Precondition(format!("decomposition does not verify: {f:?}"))),
    }
}

/// A verified decomposition forces the target to be connected.
pub fn delta_implies_connected<S, R>(rel: &R, space: &S, target: &S::Set, d: &Decomposition<S::Set>) -> Result<bool>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    require_verified(rel, space, target, d)?;
    Ok(space.is_connected(target))
}

fn require_regular_open<S: Space>(space: &S, d: &Decomposition<S::Set>) -> Result<()> {
    match d.pieces.iter().position(|p| !space.is_regular_open(p)) {
        None => Ok(()),
        Some(i) => Err(Error::Precondition(format!("piece {i} is not regular open"))),
    }
}

/// Closure of a decomposition into regular-open pieces: returns whether
/// `cl(A_1), .., cl(A_n)` verifies as a decomposition of `cl(A)`.
pub fn closure_theorem_check<S, R>(rel: &R, space: &S, d: &Decomposition<S::Set>) -> Result<bool>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    require_regular_open(space, d)?;
    let a = space.union_all(d.pieces.iter());
    require_verified(rel, space, &a, d)?;
    let closed = Decomposition::new(d.pieces.iter().map(|p| space.closure(p)).collect());
    Ok(verify_decomposition(rel, space, &space.closure(&a), &closed).is_ok())
}

/// For `A ⊆ G ⊆ cl(A)`, looks for a decomposition of `G` built from the
/// relative closures `cl(A_i) ∩ G`: first in the given order, then by
/// search.
pub fn between_theorem_check<S, R>(rel: &R, space: &S, d: &Decomposition<S::Set>, g: &S::Set) -> Result<bool>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    require_regular_open(space, d)?;
    let a = space.union_all(d.pieces.iter());
    require_verified(rel, space, &a, d)?;
    if !space.is_subset(&a, g) || !space.is_subset(g, &space.closure(&a)) {
        return Err(Error::Precondition("G must lie between A and cl(A)".into()));
    }
    let pieces: Vec<S::Set> = d
        .pieces
        .iter()
        .map(|p| space.intersection(&space.closure(p), g))
        .collect();
    let direct = Decomposition::new(pieces.clone());
    if verify_decomposition(rel, space, g, &direct).is_ok() {
        return Ok(true);
    }
    Ok(find_decomposition(rel, space, g, &pieces, pieces.len())?.is_some())
}

/// One step of the countable-space criterion: neighbourhoods of two
/// consecutive points lying in a connected piece with connected interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionLink<T> {
    pub from_nbhd: T,
    pub to_nbhd: T,
    pub piece: T,
}

/// Countable-space criterion. `links[i]` covers `points[i]` and
/// `points[i + 1]` (a single point uses one link for itself). Returns
/// whether the pieces, in order, verify as a decomposition of the carrier.
pub fn countable_criterion_check<S, R>(
    rel: &R,
    space: &S,
    points: &[usize],
    links: &[CriterionLink<S::Set>],
) -> Result<bool>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    if points.is_empty() {
        return Err(Error::Precondition("at least one point is required".into()));
    }
    let expected = points.len().saturating_sub(1).max(1);
    if links.len() != expected {
        return Err(Error::Precondition(format!(
            "{} points need {expected} links, got {}",
            points.len(),
            links.len()
        )));
    }
    for (i, link) in links.iter().enumerate() {
        let x = points[i];
        let y = points[(i + 1).min(points.len() - 1)];
        for (u, p) in [(&link.from_nbhd, x), (&link.to_nbhd, y)] {
            if space.is_empty(u) || !space.is_open(u) || !space.contains(u, p) {
                return Err(Error::Precondition(format!(
                    "link {i}: neighbourhood is not an open set around its point"
                )));
            }
            if !space.is_subset(u, &link.piece) {
                return Err(Error::Precondition(format!(
                    "link {i}: neighbourhood is not inside its piece"
                )));
            }
        }
        if !space.is_connected(&link.piece) || !space.is_connected(&space.interior(&link.piece)) {
            return Err(Error::Precondition(format!(
                "link {i}: piece or its interior is disconnected"
            )));
        }
    }
    let pieces: Vec<S::Set> = links.iter().map(|l| l.piece.clone()).collect();
    if space.union_all(pieces.iter()) != space.full() {
        return Err(Error::Precondition("pieces do not cover the space".into()));
    }
    let d = Decomposition::new(pieces);
    Ok(verify_decomposition(rel, space, &space.full(), &d).is_ok())
}

/// Open sets `U_1, .., U_n` (cover indices) linking `a` to `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongChain {
    pub links: Vec<usize>,
    pub a: usize,
    pub b: usize,
}

/// Check the chain conditions: `a` lies in the first link and in no other,
/// `b` lies in the last link and in no other, and links at distance at most
/// one are strongly near (including each link with itself).
pub fn verify_strong_chain<S, R>(rel: &R, space: &S, cover: &[S::Set], chain: &StrongChain) -> bool
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    let n = chain.links.len();
    if n == 0 || chain.links.iter().any(|&i| i >= cover.len()) {
        return false;
    }
    let link = |k: usize| &cover[chain.links[k]];
    (0..n).all(|k| {
        let u = link(k);
        space.is_open(u)
            && space.contains(u, chain.a) == (k == 0)
            && space.contains(u, chain.b) == (k == n - 1)
            && rel.near(space, u, u)
            && (k == 0 || rel.near(space, link(k - 1), u))
    })
}

fn check_cover<S: Space>(space: &S, cover: &[S::Set]) -> Result<()> {
    check_capacity("open cover", cover.len(), MAX_SEARCH_SETS)?;
    if let Some(i) = cover.iter().position(|u| !space.is_open(u)) {
        return Err(Error::NotOpen(i));
    }
    if space.union_all(cover.iter()) != space.full() {
        return Err(Error::Precondition("cover does not cover the space".into()));
    }
    Ok(())
}

/// Depth-first search for the lexicographically first strong chain from `a`
/// to `b` through distinct cover elements.
pub fn find_strong_chain<S, R>(rel: &R, space: &S, cover: &[S::Set], a: usize, b: usize) -> Result<Option<StrongChain>>
where
    S: Space,
    R: Nearness<S> + ?Sized,
{
    check_cover(space, cover)?;
    let n = cover.len();
    let self_near: Vec<bool> = cover.iter().map(|u| rel.near(space, u, u)).collect();
    let has_a: Vec<bool> = cover.iter().map(|u| space.contains(u, a)).collect();
    let has_b: Vec<bool> = cover.iter().map(|u| space.contains(u, b)).collect();
    let near: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && rel.near(space, &cover[i], &cover[j]))
                .collect()
        })
        .collect();

    fn extend(
        path: &mut Vec<usize>,
        used: u16,
        near: &[Vec<bool>],
        ok: &[bool],
        has_b: &[bool],
        dead: &mut HashSet<(usize, u16)>,
    ) -> bool {
        let last = *path.last().expect("nonempty chain");
        if dead.contains(&(last, used)) {
            return false;
        }
        for next in 0..near.len() {
            if used & (1 << next) != 0 || !ok[next] || !near[last][next] {
                continue;
            }
            path.push(next);
            if has_b[next] || extend(path, used | (1 << next), near, ok, has_b, dead) {
                return true;
            }
            path.pop();
        }
        dead.insert((last, used));
        false
    }

    // links after the first must avoid a
    let ok: Vec<bool> = (0..n).map(|i| self_near[i] && !has_a[i]).collect();
    let mut dead = HashSet::new();
    for start in 0..n {
        if !has_a[start] || !self_near[start] {
            continue;
        }
        let mut path = vec![start];
        if has_b[start] || extend(&mut path, 1 << start, &near, &ok, &has_b, &mut dead) {
            return Ok(Some(StrongChain { links: path, a, b }));
        }
    }
    Ok(None)
}

/// Image of a verified decomposition under a homeomorphism that is strongly
/// proximally continuous on the pieces: returns whether the image pieces
/// verify as a decomposition of the image target.
pub fn image_preservation_check<X, Y, RX, RY, F>(
    f: &F,
    rel_x: &RX,
    space_x: &X,
    rel_y: &RY,
    space_y: &Y,
    target: &X::Set,
    d: &Decomposition<X::Set>,
) -> Result<bool>
where
    X: Space,
    Y: Space,
    RX: Nearness<X> + ?Sized,
    RY: Nearness<Y> + ?Sized,
    F: SetMap<X, Y> + ?Sized,
{
    if !f.is_homeomorphism(space_x, space_y)? {
        return Err(Error::Precondition("map is not a homeomorphism".into()));
    }
    require_verified(rel_x, space_x, target, d)?;
    let images = d
        .pieces
        .iter()
        .map(|p| f.image(space_x, space_y, p))
        .collect::<Result<Vec<_>>>()?;
    for (i, p) in d.pieces.iter().enumerate() {
        for (j, q) in d.pieces.iter().enumerate() {
            if rel_x.near(space_x, p, q) && !rel_y.near(space_y, &images[i], &images[j]) {
                return Err(Error::Precondition(format!("map is not s.p.c. on pieces {i}, {j}")));
            }
        }
    }
    let image_target = f.image(space_x, space_y, target)?;
    Ok(verify_decomposition(rel_y, space_y, &image_target, &Decomposition::new(images)).is_ok())
}
