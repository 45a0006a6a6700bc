//! Finite geodesic trees and the three gluing transforms that upgrade an
//! arbitrary tree toward uniform branch growth, uniform valence, and dense
//! branching, plus the property verifiers the results must satisfy.
//!
//! A [`FiniteGeodesicTree`] is a combinatorial tree with exact rational edge
//! lengths; its path metric is the geodesic metric of the realization where
//! every edge is an isometric segment. All transforms are pure: the input
//! tree is never modified and a new tree is returned.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::words::{parse_ratio, ratio_string, PointCode, Weight};
use crate::{Error, Result};

/// Guard for skeleton truncation sizes.
const SKELETON_GUARD: u128 = 1_000_000;

/// Role of a vertex, determined by its valence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    /// Valence at most 1.
    Leaf,
    /// Valence exactly 2.
    Double,
    /// Valence at least 3.
    Branch,
}

/// A finite combinatorial tree with positive rational edge lengths, carrying
/// the path metric of its geodesic realization.
///
/// Invariants, enforced at construction: connected, `|E| = |V| - 1`, all
/// edge lengths positive. Vertex names are arbitrary nonempty strings; the
/// name order (`String` comparison) is the deterministic tie-break used by
/// the transforms.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGeodesicTree {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize, BigRational)>,
    adjacency: Vec<Vec<(usize, BigRational)>>,
}

#[derive(Serialize, Deserialize)]
struct TreeJson {
    vertices: Vec<String>,
    edges: Vec<(String, String, String)>,
}

impl FiniteGeodesicTree {
    /// Builds a tree from an explicit vertex list and edge triples.
    pub fn from_parts(
        vertices: Vec<String>,
        edges: Vec<(String, String, BigRational)>,
    ) -> Result<Self> {
        let mut tree = FiniteGeodesicTree {
            names: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
            adjacency: Vec::new(),
        };
        for name in vertices {
            tree.push_vertex(name)?;
        }
        for (a, b, len) in edges {
            let ia = tree.idx(&a)?;
            let ib = tree.idx(&b)?;
            tree.push_edge(ia, ib, len)?;
        }
        tree.assert_valid()?;
        Ok(tree)
    }

    /// Builds a tree from edge triples alone; vertices are collected in
    /// order of first appearance.
    pub fn from_edges(edges: Vec<(String, String, BigRational)>) -> Result<Self> {
        let mut vertices = Vec::new();
        let mut seen = HashSet::new();
        for (a, b, _) in &edges {
            for v in [a, b] {
                if seen.insert(v.clone()) {
                    vertices.push(v.clone());
                }
            }
        }
        Self::from_parts(vertices, edges)
    }

    /// Parses the JSON form `{"vertices": [...], "edges": [["a","b","1/2"], ...]}`.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: TreeJson = serde_json::from_str(s)?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (a, b, len) in raw.edges {
            edges.push((a, b, parse_ratio(&len)?));
        }
        Self::from_parts(raw.vertices, edges)
    }

    /// Serializes to the JSON form accepted by [`Self::from_json_str`].
    pub fn to_json_string(&self) -> String {
        let raw = TreeJson {
            vertices: self.names.clone(),
            edges: self
                .edges
                .iter()
                .map(|(a, b, len)| {
                    (
                        self.names[*a].clone(),
                        self.names[*b].clone(),
                        ratio_string(len),
                    )
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("tree JSON serialization cannot fail")
    }

    fn push_vertex(&mut self, name: String) -> Result<usize> {
        if name.is_empty() {
            return Err(Error::InvalidTree("empty vertex name".into()));
        }
        if self.index.contains_key(&name) {
            return Err(Error::InvalidTree(format!("duplicate vertex {name:?}")));
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.adjacency.push(Vec::new());
        Ok(id)
    }

    fn push_edge(&mut self, a: usize, b: usize, len: BigRational) -> Result<()> {
        if !len.is_positive() {
            return Err(Error::InvalidTree(format!(
                "edge {}-{} has nonpositive length {}",
                self.names[a],
                self.names[b],
                ratio_string(&len)
            )));
        }
        if a == b {
            return Err(Error::InvalidTree(format!("loop at {}", self.names[a])));
        }
        self.adjacency[a].push((b, len.clone()));
        self.adjacency[b].push((a, len.clone()));
        self.edges.push((a, b, len));
        Ok(())
    }

    fn assert_valid(&self) -> Result<()> {
        if self.names.is_empty() {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if self.edges.len() + 1 != self.names.len() {
            return Err(Error::InvalidTree(format!(
                "{} edges for {} vertices",
                self.edges.len(),
                self.names.len()
            )));
        }
        let mut seen = vec![false; self.names.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (u, _) in &self.adjacency[v] {
                if !seen[*u] {
                    seen[*u] = true;
                    stack.push(*u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidTree("not connected".into()));
        }
        Ok(())
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// A vertex name not yet in use, of the form `prefix{counter}`; the
    /// counter advances past collisions so repeated calls stay distinct.
    fn fresh_numbered(&self, prefix: &str, counter: &mut usize) -> String {
        loop {
            let name = format!("{prefix}{counter}");
            *counter += 1;
            if !self.index.contains_key(&name) {
                return name;
            }
        }
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    /// Edge triples in insertion order.
    pub fn edge_list(&self) -> Vec<(String, String, BigRational)> {
        self.edges
            .iter()
            .map(|(a, b, len)| (self.names[*a].clone(), self.names[*b].clone(), len.clone()))
            .collect()
    }

    pub fn valence(&self, name: &str) -> Result<usize> {
        Ok(self.adjacency[self.idx(name)?].len())
    }

    pub fn role(&self, name: &str) -> Result<VertexRole> {
        Ok(match self.valence(name)? {
            0 | 1 => VertexRole::Leaf,
            2 => VertexRole::Double,
            _ => VertexRole::Branch,
        })
    }

    /// Branch point names (valence at least 3) in name order.
    pub fn branch_point_names(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .names
            .iter()
            .enumerate()
            .filter(|(i, _)| self.adjacency[*i].len() >= 3)
            .map(|(_, n)| n.clone())
            .collect();
        out.sort();
        out
    }

    fn distances_from(&self, s: usize) -> Vec<BigRational> {
        let mut dist: Vec<Option<BigRational>> = vec![None; self.names.len()];
        dist[s] = Some(BigRational::zero());
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let dv = dist[v].clone().expect("visited vertices carry a distance");
            for (u, len) in &self.adjacency[v] {
                if dist[*u].is_none() {
                    dist[*u] = Some(&dv + len);
                    stack.push(*u);
                }
            }
        }
        dist.into_iter()
            .map(|d| d.expect("tree is connected"))
            .collect()
    }

    /// Exact length of the unique path between two vertices.
    pub fn distance(&self, x: &str, y: &str) -> Result<BigRational> {
        let xi = self.idx(x)?;
        let yi = self.idx(y)?;
        Ok(self.distances_from(xi)[yi].clone())
    }

    /// Vertex indices on the unique path between two vertices, inclusive.
    fn path_vertices(&self, xi: usize, yi: usize) -> Vec<usize> {
        let mut parent: Vec<Option<usize>> = vec![None; self.names.len()];
        parent[xi] = Some(xi);
        let mut stack = vec![xi];
        while let Some(v) = stack.pop() {
            if v == yi {
                break;
            }
            for (u, _) in &self.adjacency[v] {
                if parent[*u].is_none() {
                    parent[*u] = Some(v);
                    stack.push(*u);
                }
            }
        }
        let mut path = vec![yi];
        let mut at = yi;
        while at != xi {
            at = parent[at].expect("tree is connected");
            path.push(at);
        }
        path.reverse();
        path
    }

    /// Per-branch summaries at a branch point, sorted by height descending
    /// (ties by the name of the neighbor rooting the branch).
    pub fn branch_data(&self, p: &str) -> Result<Vec<BranchData>> {
        let pi = self.idx(p)?;
        if self.adjacency[pi].len() < 3 {
            return Err(Error::NotBranchPoint(p.to_string()));
        }
        let dist = self.distances_from(pi);
        let mut out = Vec::new();
        for (root, _) in &self.adjacency[pi] {
            let mut members = Vec::new();
            let mut seen = vec![false; self.names.len()];
            seen[pi] = true;
            seen[*root] = true;
            let mut stack = vec![*root];
            members.push(*root);
            while let Some(v) = stack.pop() {
                for (u, _) in &self.adjacency[v] {
                    if !seen[*u] {
                        seen[*u] = true;
                        members.push(*u);
                        stack.push(*u);
                    }
                }
            }
            let height = members
                .iter()
                .map(|v| dist[*v].clone())
                .max()
                .expect("branch has a member");
            let realizing_leaf = members
                .iter()
                .filter(|v| dist[**v] == height)
                .map(|v| self.names[*v].clone())
                .min()
                .expect("height is attained");
            // Diameter of the branch as a subspace of the geodesic
            // realization: the open end at p contributes points at distance
            // up to the height, so the diameter is at least the height even
            // when the branch holds a single vertex.
            let far = members
                .iter()
                .max_by(|u, v| dist[**u].cmp(&dist[**v]))
                .copied()
                .expect("branch has a member");
            let from_far = self.distances_from(far);
            let vertex_diameter = members
                .iter()
                .map(|v| from_far[*v].clone())
                .max()
                .expect("branch has a member");
            let diameter = vertex_diameter.max(height.clone());
            out.push(BranchData {
                root: self.names[*root].clone(),
                height,
                realizing_leaf,
                diameter,
                vertices: members.len(),
            });
        }
        out.sort_by(|x, y| y.height.cmp(&x.height).then(x.root.cmp(&y.root)));
        Ok(out)
    }

    /// Branch heights at `p`: for each component of the tree minus `p`, the
    /// maximal distance from `p` into it, in nonincreasing order.
    pub fn branch_heights(&self, p: &str) -> Result<Vec<BigRational>> {
        Ok(self.branch_data(p)?.into_iter().map(|b| b.height).collect())
    }

    /// Branch diameters at `p` in nonincreasing order, each branch taken as
    /// a subspace of the geodesic realization (edge interiors included).
    pub fn branch_diameters(&self, p: &str) -> Result<Vec<BigRational>> {
        let mut out: Vec<BigRational> = self
            .branch_data(p)?
            .into_iter()
            .map(|b| b.diameter)
            .collect();
        out.sort_by(|x, y| y.cmp(x));
        Ok(out)
    }

    /// Height of a branch point as the third largest branch height.
    pub fn reach_height(&self, p: &str) -> Result<BigRational> {
        Ok(self.branch_heights(p)?.swap_remove(2))
    }

    /// Height of a branch point as the third largest branch diameter.
    pub fn diameter_height(&self, p: &str) -> Result<BigRational> {
        Ok(self.branch_diameters(p)?.swap_remove(2))
    }
}

/// Per-branch summary at a branch point.
#[derive(Clone, Debug)]
pub struct BranchData {
    /// Neighbor of the branch point rooting this branch.
    pub root: String,
    /// Maximal distance from the branch point into the branch.
    pub height: BigRational,
    /// Name-smallest vertex realizing the height.
    pub realizing_leaf: String,
    /// Diameter of the branch in the geodesic realization.
    pub diameter: BigRational,
    /// Number of vertices in the branch.
    pub vertices: usize,
}

/// One tree to glue: its `tree_vertex` is identified with `base_vertex` of
/// the base tree.
#[derive(Clone, Debug)]
pub struct Attachment {
    pub base_vertex: String,
    pub tree: FiniteGeodesicTree,
    pub tree_vertex: String,
}

/// A batch of attachments for [`geodesic_glue`].
#[derive(Clone, Debug, Default)]
pub struct GluingSpec {
    pub attachments: Vec<Attachment>,
}

/// Result of [`geodesic_glue`]: the glued tree plus, per attachment, the
/// map from original attached-tree vertex names to names in the result.
#[derive(Clone, Debug)]
pub struct Glued {
    pub tree: FiniteGeodesicTree,
    pub copy_names: Vec<HashMap<String, String>>,
}

/// Glues each attached tree onto the base by identifying its chosen vertex
/// with the chosen base vertex. Distances in the result follow the induced
/// path metric: within the base or within one copy they are unchanged, and
/// across parts they sum through the identified points.
pub fn geodesic_glue(base: &FiniteGeodesicTree, spec: &GluingSpec) -> Result<Glued> {
    let mut out = base.clone();
    let mut copy_names = Vec::with_capacity(spec.attachments.len());
    for att in &spec.attachments {
        out.idx(&att.base_vertex)?;
        att.tree.idx(&att.tree_vertex)?;
        let mut rename: HashMap<String, String> = HashMap::new();
        rename.insert(att.tree_vertex.clone(), att.base_vertex.clone());
        for name in att.tree.vertex_names() {
            if *name == att.tree_vertex {
                continue;
            }
            let fresh = if out.contains(name) {
                let mut k = 2usize;
                loop {
                    let candidate = format!("{name}#{k}");
                    if !out.contains(&candidate) {
                        break candidate;
                    }
                    k += 1;
                }
            } else {
                name.clone()
            };
            rename.insert(name.clone(), fresh.clone());
            out.push_vertex(fresh)?;
        }
        for (a, b, len) in att.tree.edge_list() {
            let ia = out.idx(&rename[&a])?;
            let ib = out.idx(&rename[&b])?;
            out.push_edge(ia, ib, len)?;
        }
        copy_names.push(rename);
    }
    out.assert_valid()?;
    Ok(Glued {
        tree: out,
        copy_names,
    })
}

/// Equalizes branch heights beyond the top two at every branch point of
/// valence at least 4.
///
/// All heights are measured on the input first. At each such point `p`
/// with sorted branch heights `h_1 >= h_2 >= h_3 >= ...`, every branch
/// whose height falls strictly below `h_3` gets a fresh segment of length
/// `h_3 - h_j` glued at the name-smallest leaf realizing `h_j`. Afterwards
/// every branch of `p` beyond the top two has height exactly `h_3`, and the
/// third-largest height at every pre-existing branch point is unchanged.
pub fn step1_uniform_growth(t: &FiniteGeodesicTree) -> Result<FiniteGeodesicTree> {
    let mut plan: Vec<(String, BigRational)> = Vec::new();
    for p in t.branch_point_names() {
        let data = t.branch_data(&p)?;
        if data.len() < 4 {
            continue;
        }
        let h = data[2].height.clone();
        for branch in data.iter().skip(3) {
            if branch.height < h {
                plan.push((branch.realizing_leaf.clone(), &h - &branch.height));
            }
        }
    }
    let mut chosen = HashSet::new();
    for (leaf, _) in &plan {
        assert!(
            chosen.insert(leaf.clone()),
            "realizing leaves are distinct across branch points"
        );
    }
    let mut out = t.clone();
    let mut counter = 1usize;
    for (leaf, extension) in plan {
        let tip = out.fresh_numbered("g", &mut counter);
        let li = out.idx(&leaf)?;
        let ti = out.push_vertex(tip)?;
        out.push_edge(li, ti, extension)?;
    }
    out.assert_valid()?;
    Ok(out)
}

/// Raises every branch point to valence exactly `m` by gluing fresh
/// segments at the point itself, each of length equal to its smallest
/// branch height. Heights at all pre-existing branch points are unchanged.
/// Fails if some branch point already exceeds valence `m`.
pub fn step2_uniform_valence(t: &FiniteGeodesicTree, m: usize) -> Result<FiniteGeodesicTree> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "target valence must be at least 3, got {m}"
        )));
    }
    let mut plan: Vec<(String, BigRational, usize)> = Vec::new();
    for p in t.branch_point_names() {
        let n = t.valence(&p)?;
        if n > m {
            return Err(Error::ValenceExceeded(n, m));
        }
        if n < m {
            let data = t.branch_data(&p)?;
            let shortest = data.last().expect("branch point has branches").height.clone();
            plan.push((p, shortest, m - n));
        }
    }
    let mut out = t.clone();
    let mut counter = 1usize;
    for (p, len, count) in plan {
        let pi = out.idx(&p)?;
        for _ in 0..count {
            let tip = out.fresh_numbered("v", &mut counter);
            let ti = out.push_vertex(tip)?;
            out.push_edge(pi, ti, len.clone())?;
        }
    }
    out.assert_valid()?;
    Ok(out)
}

/// The depth-truncated skeleton of the self-similar tree on `m` letters
/// with weight `a`: the convex hull of all branch points with stem length
/// at most `depth` together with the two endpoints of the main arc.
///
/// Vertices are named by their canonical codes (for example `"(1)"`,
/// `"1,(2)"`, `"2,1,(2)"`); edge lengths are exact distances. The anchor
/// `"(1)"` has maximal distance exactly 1, realized at `"(2)"`, so gluing a
/// scaled copy attaches a branch of exactly the scaled height.
pub fn truncated_tree_skeleton(a: &Weight, m: u32, depth: usize) -> Result<FiniteGeodesicTree> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!(
            "skeleton needs m >= 3, got {m}"
        )));
    }
    if depth < 1 {
        return Err(Error::InvalidParameter("skeleton needs depth >= 1".into()));
    }
    if a.alphabet().bound() < m {
        return Err(Error::LetterOutOfRange(m, a.alphabet().bound()));
    }
    let count = (m as u128)
        .checked_pow(depth as u32)
        .ok_or(Error::SizeGuard(u128::MAX, SKELETON_GUARD))?;
    if count > SKELETON_GUARD {
        return Err(Error::SizeGuard(count, SKELETON_GUARD));
    }
    let mut edge_set: BTreeMap<(String, String), BigRational> = BTreeMap::new();
    let mut add = |x: &PointCode, y: &PointCode, len: BigRational| {
        let (xs, ys) = (x.to_string(), y.to_string());
        let key = if xs <= ys { (xs, ys) } else { (ys, xs) };
        edge_set.entry(key).or_insert(len);
    };
    for w in crate::graphs::level_words(depth, m)? {
        let low = PointCode::from_stem(&w, 1).canonical();
        let gate = PointCode::from_stem(&w.push(1), 2);
        let high = PointCode::from_stem(&w, 2).canonical();
        add(&low, &gate, crate::metric::distance_exact(&low, &gate, a)?);
        add(&gate, &high, crate::metric::distance_exact(&gate, &high, a)?);
    }
    let mut keep: BTreeSet<String> = BTreeSet::new();
    keep.insert(PointCode::constant(1).to_string());
    keep.insert(PointCode::constant(2).to_string());
    for k in 0..=depth {
        for u in crate::graphs::level_words(k, m)? {
            keep.insert(PointCode::from_stem(&u.push(1), 2).to_string());
        }
    }
    let mut edges: Vec<(String, String, BigRational)> = edge_set
        .into_iter()
        .map(|((x, y), len)| (x, y, len))
        .collect();
    loop {
        let mut valence: HashMap<&str, usize> = HashMap::new();
        for (x, y, _) in &edges {
            *valence.entry(x).or_default() += 1;
            *valence.entry(y).or_default() += 1;
        }
        let prune: HashSet<String> = valence
            .iter()
            .filter(|(name, v)| **v == 1 && !keep.contains(**name))
            .map(|(name, _)| name.to_string())
            .collect();
        if prune.is_empty() {
            break;
        }
        edges.retain(|(x, y, _)| !prune.contains(x) && !prune.contains(y));
    }
    FiniteGeodesicTree::from_edges(edges)
}

/// Attaches, at each listed double point with level `n`, `m - 2` copies of
/// the depth-truncated skeleton scaled by `c * delta^n`, glued at the
/// skeleton anchor `"(1)"`. Each listed point becomes a branch point whose
/// attached branches all have height exactly `c * delta^n`.
pub fn step3_attach(
    t: &FiniteGeodesicTree,
    vertex_levels: &[(String, u32)],
    m: u32,
    a: &Weight,
    delta: &BigRational,
    c: &BigRational,
    depth: usize,
) -> Result<FiniteGeodesicTree> {
    let third = BigRational::new(1.into(), 3.into());
    if !delta.is_positive() || *delta >= third {
        return Err(Error::InvalidParameter(format!(
            "delta must lie in (0, 1/3), got {}",
            ratio_string(delta)
        )));
    }
    if !c.is_positive() {
        return Err(Error::InvalidParameter(format!(
            "scale c must be positive, got {}",
            ratio_string(c)
        )));
    }
    for (v, _) in vertex_levels {
        if t.valence(v)? != 2 {
            return Err(Error::NotDoublePoint(v.clone()));
        }
    }
    let skeleton = truncated_tree_skeleton(a, m, depth)?;
    let anchor = PointCode::constant(1).to_string();
    let mut out = t.clone();
    for (v, n) in vertex_levels {
        let mut scale = c.clone();
        for _ in 0..*n {
            scale *= delta;
        }
        for copy in 0..m.saturating_sub(2) {
            let mut rename: HashMap<&str, String> = HashMap::new();
            rename.insert(anchor.as_str(), v.clone());
            for name in skeleton.vertex_names() {
                if *name == anchor {
                    continue;
                }
                let mut candidate = format!("{v}.{copy}.{name}");
                let mut k = 2usize;
                while out.contains(&candidate) {
                    candidate = format!("{v}.{copy}.{name}#{k}");
                    k += 1;
                }
                out.push_vertex(candidate.clone())?;
                rename.insert(name, candidate);
            }
            for (x, y, len) in skeleton.edge_list() {
                let ix = out.idx(&rename[x.as_str()])?;
                let iy = out.idx(&rename[y.as_str()])?;
                out.push_edge(ix, iy, len * &scale)?;
            }
        }
    }
    out.assert_valid()?;
    Ok(out)
}

/// Convenience generator of double points: subdivides every edge at spacing
/// `delta^n`, returning the new tree and the inserted vertices tagged with
/// level `n`. This is a stand-in for an externally supplied vertex
/// decomposition; any caller with its own double points can skip it.
pub fn subdivision_points(
    t: &FiniteGeodesicTree,
    delta: &BigRational,
    n: u32,
) -> Result<(FiniteGeodesicTree, Vec<(String, u32)>)> {
    if !delta.is_positive() || *delta >= BigRational::one() {
        return Err(Error::InvalidParameter(format!(
            "spacing base must lie in (0, 1), got {}",
            ratio_string(delta)
        )));
    }
    let mut spacing = BigRational::one();
    for _ in 0..n {
        spacing *= delta;
    }
    let mut vertices = t.vertex_names().to_vec();
    let mut edges: Vec<(String, String, BigRational)> = Vec::new();
    let mut inserted = Vec::new();
    let mut counter = 1usize;
    let mut used: HashSet<String> = vertices.iter().cloned().collect();
    let mut fresh = |used: &mut HashSet<String>| loop {
        let name = format!("d{counter}");
        counter += 1;
        if used.insert(name.clone()) {
            return name;
        }
    };
    for (a, b, len) in t.edge_list() {
        let quotient = &len / &spacing;
        let mut pieces = quotient.floor().to_integer();
        if quotient.is_integer() {
            pieces -= 1;
        }
        let pieces = if pieces.is_positive() {
            u64::try_from(&pieces).map_err(|_| {
                Error::SizeGuard(u128::MAX, SKELETON_GUARD)
            })?
        } else {
            0
        };
        if pieces == 0 {
            edges.push((a, b, len));
            continue;
        }
        let mut prev = a;
        let mut walked = BigRational::zero();
        for _ in 0..pieces {
            let name = fresh(&mut used);
            vertices.push(name.clone());
            inserted.push((name.clone(), n));
            edges.push((prev, name.clone(), spacing.clone()));
            walked += &spacing;
            prev = name;
        }
        edges.push((prev, b, &len - &walked));
    }
    Ok((FiniteGeodesicTree::from_parts(vertices, edges)?, inserted))
}

/// Which branch value the verifier measures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeightMode {
    /// Branch diameters in the geodesic realization.
    Diameter,
    /// Branch heights (maximal reach from the branch point).
    Reach,
}

/// A best constant together with the witness attaining it.
#[derive(Clone, Debug)]
pub struct ConstantWitness {
    pub constant: BigRational,
    pub witness: String,
}

/// Outcome of [`verify_tree_properties`]: smallest admissible constants for
/// the separation, growth, and density conditions, with witnesses.
#[derive(Clone, Debug)]
pub struct TreePropertyReport {
    pub mode: HeightMode,
    pub branch_points: usize,
    /// Smallest C with d(p,q) >= min(H(p), H(q)) / C over branch pairs.
    pub separation: Option<ConstantWitness>,
    /// Smallest C with (third branch value) <= C * (every branch value).
    pub growth: Option<ConstantWitness>,
    /// Smallest C with d(x,y) <= C * max H over branch points on the path,
    /// over vertex pairs whose path meets a branch point.
    pub density: Option<ConstantWitness>,
    /// Number of vertex pairs whose path meets no branch point; such pairs
    /// are inevitable on finite trees (branch points are not dense) and are
    /// counted rather than failed.
    pub density_uncovered: usize,
    /// Whether all computed constants stay within the supplied bound.
    pub pass: bool,
}

/// Exhaustive separation, growth, and density checks over a finite tree.
///
/// Separation and growth range over all branch points; density ranges over
/// all vertex pairs (on a finite geodesic tree the worst case over an edge
/// interior is attained at its endpoints, so vertex pairs suffice). A tree
/// without branch points passes vacuously. When `bound` is given, `pass`
/// reports whether every computed constant is at most the bound.
pub fn verify_tree_properties(
    t: &FiniteGeodesicTree,
    mode: HeightMode,
    bound: Option<&BigRational>,
) -> Result<TreePropertyReport> {
    let branch_names = t.branch_point_names();
    let mut values: HashMap<String, (Vec<BigRational>, BigRational)> = HashMap::new();
    for p in &branch_names {
        let vals = match mode {
            HeightMode::Diameter => t.branch_diameters(p)?,
            HeightMode::Reach => t.branch_heights(p)?,
        };
        let third = vals[2].clone();
        values.insert(p.clone(), (vals, third));
    }
    let mut separation: Option<ConstantWitness> = None;
    for i in 0..branch_names.len() {
        for j in i + 1..branch_names.len() {
            let (p, q) = (&branch_names[i], &branch_names[j]);
            let d = t.distance(p, q)?;
            let ratio = values[p].1.clone().min(values[q].1.clone()) / d;
            if separation.as_ref().map_or(true, |s| ratio > s.constant) {
                separation = Some(ConstantWitness {
                    constant: ratio,
                    witness: format!("{p} and {q}"),
                });
            }
        }
    }
    let mut growth: Option<ConstantWitness> = None;
    for p in &branch_names {
        let (vals, third) = &values[p];
        for (k, v) in vals.iter().enumerate() {
            let ratio = third / v;
            if growth.as_ref().map_or(true, |g| ratio > g.constant) {
                growth = Some(ConstantWitness {
                    constant: ratio,
                    witness: format!("{p} branch {}", k + 1),
                });
            }
        }
    }
    let mut density: Option<ConstantWitness> = None;
    let mut density_uncovered = 0usize;
    if !branch_names.is_empty() {
        let branch_ids: HashSet<usize> = branch_names
            .iter()
            .map(|p| t.idx(p).expect("branch point exists"))
            .collect();
        for xi in 0..t.vertex_count() {
            let dist = t.distances_from(xi);
            for yi in xi + 1..t.vertex_count() {
                let on_path: Vec<usize> = t
                    .path_vertices(xi, yi)
                    .into_iter()
                    .filter(|v| branch_ids.contains(v))
                    .collect();
                if on_path.is_empty() {
                    density_uncovered += 1;
                    continue;
                }
                let best = on_path
                    .iter()
                    .map(|v| values[&t.names[*v]].1.clone())
                    .max()
                    .expect("path meets a branch point");
                let ratio = &dist[yi] / best;
                if density.as_ref().map_or(true, |d| ratio > d.constant) {
                    density = Some(ConstantWitness {
                        constant: ratio,
                        witness: format!("{} and {}", t.names[xi], t.names[yi]),
                    });
                }
            }
        }
    }
    let pass = match bound {
        None => true,
        Some(b) => [&separation, &growth, &density]
            .into_iter()
            .flatten()
            .all(|cw| cw.constant <= *b),
    };
    Ok(TreePropertyReport {
        mode,
        branch_points: branch_names.len(),
        separation,
        growth,
        density,
        density_uncovered,
        pass,
    })
}

/// Doubling constant bound `3 (N - 2) (6 C + 1) + 7` for an N-valent tree
/// with comparability constant C.
pub fn doubling_bound(n: u64, c: u64) -> Result<u64> {
    if n < 2 || c < 1 {
        return Err(Error::InvalidParameter(format!(
            "bound needs N >= 2 and C >= 1, got N={n}, C={c}"
        )));
    }
    Ok(3 * (n - 2) * (6 * c + 1) + 7)
}
