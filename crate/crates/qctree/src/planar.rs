//! Planar realizations: a one-parameter family of self-similar trees and the
//! Vicsek cross, with skeleton generation and sampled geometric checks.
//!
//! Both families are attractors of contracting similarity systems. Finite
//! depth skeletons are unions of segment images of the generator segments;
//! they nest, carry the geodesics of the limit set, and can be exported as
//! SVG or CSV. All planar computation is f64 with explicit tolerances.

use std::collections::HashMap;

use num::complex::Complex64;
use rayon::prelude::*;

use crate::words::{Letter, Word};
use crate::{Error, Result};

/// Guard for skeleton enumerations.
const ENUMERATION_GUARD: u128 = 10_000_000;

/// Orientation-aware planar similarity `z -> scale * e^(i rotation) * z~ + translation`,
/// where `z~` is `conj(z)` when `conjugate` is set.
#[derive(Clone, Copy, Debug)]
pub struct PlanarSimilarity {
    pub scale: f64,
    pub rotation: f64,
    pub translation: Complex64,
    pub conjugate: bool,
}

impl PlanarSimilarity {
    pub fn apply(&self, z: Complex64) -> Complex64 {
        let w = if self.conjugate { z.conj() } else { z };
        Complex64::from_polar(self.scale, self.rotation) * w + self.translation
    }

    /// The composition `self . inner` (apply `inner` first).
    pub fn compose(&self, inner: &PlanarSimilarity) -> PlanarSimilarity {
        let outer_rot = Complex64::from_polar(self.scale, self.rotation);
        if self.conjugate {
            PlanarSimilarity {
                scale: self.scale * inner.scale,
                rotation: self.rotation - inner.rotation,
                translation: outer_rot * inner.translation.conj() + self.translation,
                conjugate: !inner.conjugate,
            }
        } else {
            PlanarSimilarity {
                scale: self.scale * inner.scale,
                rotation: self.rotation + inner.rotation,
                translation: outer_rot * inner.translation + self.translation,
                conjugate: inner.conjugate,
            }
        }
    }

    pub fn identity() -> PlanarSimilarity {
        PlanarSimilarity {
            scale: 1.0,
            rotation: 0.0,
            translation: Complex64::new(0.0, 0.0),
            conjugate: false,
        }
    }
}

/// Closed planar segment.
#[derive(Clone, Copy, Debug)]
pub struct Segment {
    pub a: Complex64,
    pub b: Complex64,
}

impl Segment {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Segment { a, b }
    }

    pub fn len(&self) -> f64 {
        (self.b - self.a).norm()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0.0
    }
}

/// Spur angle step `pi / (3m - 3)` of the planar tree family.
pub fn family_theta(m: Letter) -> f64 {
    std::f64::consts::PI / (3.0 * m as f64 - 3.0)
}

/// Contraction scales of [`family_ifs`]: `1/2, 1/2, sin(theta)/2, ...`.
pub fn family_scales(m: Letter) -> Result<Vec<f64>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("family needs m >= 3, got {m}")));
    }
    let spur = 0.5 * family_theta(m).sin();
    Ok((1..=m).map(|i| if i <= 2 { 0.5 } else { spur }).collect())
}

/// The planar tree family on the segment `[-1/2, 1/2]`.
///
/// Map 1 is the conjugating half `z -> (conj(z) - 1/2)/2`, map 2 the plain
/// half `z -> (z + 1/2)/2`, and each spur map `j >= 3` contracts by
/// `sin(theta)/2` and rotates by `(3j - 6) theta`. All maps send one of
/// `1/2`, `-1/2` to the branch point at the origin.
pub fn family_ifs(m: Letter) -> Result<Vec<PlanarSimilarity>> {
    if m < 3 {
        return Err(Error::InvalidParameter(format!("family needs m >= 3, got {m}")));
    }
    let theta = family_theta(m);
    let mut maps = vec![
        PlanarSimilarity {
            scale: 0.5,
            rotation: 0.0,
            translation: Complex64::new(-0.25, 0.0),
            conjugate: true,
        },
        PlanarSimilarity {
            scale: 0.5,
            rotation: 0.0,
            translation: Complex64::new(0.25, 0.0),
            conjugate: false,
        },
    ];
    for j in 3..=m {
        let scale = 0.5 * theta.sin();
        let rotation = (3.0 * j as f64 - 6.0) * theta;
        maps.push(PlanarSimilarity {
            scale,
            rotation,
            translation: Complex64::from_polar(scale, rotation) * 0.5,
            conjugate: false,
        });
    }
    Ok(maps)
}

/// The generator of the planar tree family: the segment `[-1/2, 1/2]`.
pub fn family_generator() -> Vec<Segment> {
    vec![Segment::new(Complex64::new(-0.5, 0.0), Complex64::new(0.5, 0.0))]
}

/// The Vicsek cross system: four corner maps `z -> (z -+ 2 -+ 2i)/3` and the
/// central `z -> z/3`, acting on the diagonals of the square `[-1, 1]^2`.
pub fn vicsek_ifs() -> Vec<PlanarSimilarity> {
    let third = 1.0 / 3.0;
    [
        Complex64::new(-2.0, -2.0),
        Complex64::new(-2.0, 2.0),
        Complex64::new(2.0, 2.0),
        Complex64::new(2.0, -2.0),
        Complex64::new(0.0, 0.0),
    ]
    .into_iter()
    .map(|t| PlanarSimilarity {
        scale: third,
        rotation: 0.0,
        translation: t * third,
        conjugate: false,
    })
    .collect()
}

/// Corner fixed points of the four outer Vicsek maps, indexed 1 to 4.
pub fn vicsek_corners() -> [Complex64; 4] {
    [
        Complex64::new(-1.0, -1.0),
        Complex64::new(-1.0, 1.0),
        Complex64::new(1.0, 1.0),
        Complex64::new(1.0, -1.0),
    ]
}

/// Generators of the Vicsek skeleton: the four half-diagonals from the
/// origin to the square corners, each of length `sqrt(2)`.
pub fn vicsek_generators() -> Vec<Segment> {
    vicsek_corners()
        .into_iter()
        .map(|c| Segment::new(Complex64::new(0.0, 0.0), c))
        .collect()
}

/// Height of the Vicsek branch point `[u 5^inf]`: `3^(-|u|) / sqrt(2)`, the
/// diameter of its smallest branch.
pub fn vicsek_branch_height(u: &Word) -> Result<f64> {
    for &l in u.letters() {
        if l > 5 {
            return Err(Error::LetterOutOfRange(l, 5));
        }
    }
    Ok(3f64.powi(-(u.len() as i32)) / 2f64.sqrt())
}

/// Depth-`depth` skeleton: the images of every generator segment under all
/// length-`depth` compositions, in word-lexicographic order (generator order
/// within a word). Depth 0 returns the generators themselves.
pub fn skeleton(
    ifs: &[PlanarSimilarity],
    generators: &[Segment],
    depth: usize,
) -> Result<Vec<Segment>> {
    if ifs.is_empty() || generators.is_empty() {
        return Err(Error::InvalidParameter("need maps and generators".into()));
    }
    let count = (ifs.len() as u128)
        .checked_pow(depth as u32)
        .and_then(|c| c.checked_mul(generators.len() as u128))
        .ok_or(Error::SizeGuard(u128::MAX, ENUMERATION_GUARD))?;
    if count > ENUMERATION_GUARD {
        return Err(Error::SizeGuard(count, ENUMERATION_GUARD));
    }
    fn expand(
        sim: &PlanarSimilarity,
        ifs: &[PlanarSimilarity],
        generators: &[Segment],
        depth: usize,
        out: &mut Vec<Segment>,
    ) {
        if depth == 0 {
            for g in generators {
                out.push(Segment::new(sim.apply(g.a), sim.apply(g.b)));
            }
            return;
        }
        for map in ifs {
            expand(&sim.compose(map), ifs, generators, depth - 1, out);
        }
    }
    if depth == 0 {
        return Ok(generators.to_vec());
    }
    let chunks: Vec<Vec<Segment>> = crate::threads::pool().install(|| {
        ifs.par_iter()
            .map(|first| {
                let mut out = Vec::new();
                expand(first, ifs, generators, depth - 1, &mut out);
                out
            })
            .collect()
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// Points sampled along each segment with spacing `len/parts` (so
/// `parts + 1` points per segment, endpoints included).
pub fn sample_points(segments: &[Segment], parts: usize) -> Vec<Complex64> {
    assert!(parts >= 1, "need at least one part");
    let mut out = Vec::with_capacity(segments.len() * (parts + 1));
    for s in segments {
        for k in 0..=parts {
            let t = k as f64 / parts as f64;
            out.push(s.a + (s.b - s.a) * t);
        }
    }
    out
}

/// `max` over `from` of the distance to the nearest point of `to`.
pub fn directed_hausdorff(from: &[Complex64], to: &[Complex64]) -> f64 {
    assert!(!from.is_empty() && !to.is_empty(), "need nonempty samples");
    crate::threads::pool().install(|| {
        from.par_iter()
            .map(|p| {
                to.iter()
                    .map(|q| (p - q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .reduce(|| 0.0, f64::max)
    })
}

/// Symmetric Hausdorff distance between two sampled point sets.
pub fn hausdorff_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

/// Spatial registry merging nearly coincident planar points into node ids.
struct PointRegistry {
    cell: f64,
    tol: f64,
    points: Vec<Complex64>,
    grid: HashMap<(i64, i64), Vec<usize>>,
}

impl PointRegistry {
    fn new(tol: f64) -> Self {
        PointRegistry {
            cell: (tol * 1e3).max(1e-7),
            tol,
            points: Vec::new(),
            grid: HashMap::new(),
        }
    }

    fn key(&self, p: Complex64) -> (i64, i64) {
        ((p.re / self.cell).floor() as i64, (p.im / self.cell).floor() as i64)
    }

    fn find(&self, p: Complex64) -> Option<usize> {
        let (kx, ky) = self.key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.grid.get(&(kx + dx, ky + dy)) {
                    for &id in ids {
                        if (self.points[id] - p).norm() <= self.tol {
                            return Some(id);
                        }
                    }
                }
            }
        }
        None
    }

    fn intern(&mut self, p: Complex64) -> usize {
        if let Some(id) = self.find(p) {
            return id;
        }
        let id = self.points.len();
        self.points.push(p);
        self.grid.entry(self.key(p)).or_default().push(id);
        id
    }
}

/// Length of the shortest path between two skeleton points, following the
/// segments as graph edges; endpoints closer than `tol` are merged into one
/// graph node.
pub fn path_length(
    segments: &[Segment],
    from: Complex64,
    to: Complex64,
    tol: f64,
) -> Result<f64> {
    let mut reg = PointRegistry::new(tol);
    let mut adj: Vec<Vec<(usize, f64)>> = Vec::new();
    for s in segments {
        let ia = reg.intern(s.a);
        let ib = reg.intern(s.b);
        adj.resize(reg.points.len(), Vec::new());
        let w = s.len();
        adj[ia].push((ib, w));
        adj[ib].push((ia, w));
    }
    let start = reg
        .find(from)
        .ok_or_else(|| Error::InvalidParameter(format!("start {from} not on the skeleton")))?;
    let goal = reg
        .find(to)
        .ok_or_else(|| Error::InvalidParameter(format!("goal {to} not on the skeleton")))?;
    let mut dist = vec![f64::INFINITY; reg.points.len()];
    let mut heap = std::collections::BinaryHeap::new();
    dist[start] = 0.0;
    heap.push((std::cmp::Reverse(OrderedF64(0.0)), start));
    while let Some((std::cmp::Reverse(OrderedF64(d)), v)) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        if v == goal {
            return Ok(d);
        }
        for &(u, w) in &adj[v] {
            let nd = d + w;
            if nd < dist[u] {
                dist[u] = nd;
                heap.push((std::cmp::Reverse(OrderedF64(nd)), u));
            }
        }
    }
    Err(Error::InvalidParameter(
        "skeleton does not connect the endpoints".into(),
    ))
}

#[derive(PartialEq)]
struct OrderedF64(f64);

impl Eq for OrderedF64 {}

impl PartialOrd for OrderedF64 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrderedF64 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Checks that every coarse segment is exactly covered by a chain of
/// collinear fine segments, endpoint to endpoint within `tol`.
pub fn nesting_check(coarse: &[Segment], fine: &[Segment], tol: f64) -> bool {
    let mut reg = PointRegistry::new(tol);
    let mut incident: Vec<Vec<(usize, Complex64)>> = Vec::new();
    for s in fine {
        let ia = reg.intern(s.a);
        let ib = reg.intern(s.b);
        incident.resize(reg.points.len(), Vec::new());
        incident[ia].push((ib, s.b));
        incident[ib].push((ia, s.a));
    }
    'outer: for c in coarse {
        let total = c.len();
        if total <= tol {
            continue;
        }
        let dir = (c.b - c.a) / total;
        let Some(mut at) = reg.find(c.a) else {
            return false;
        };
        let mut covered = 0.0;
        for _ in 0..fine.len() + 1 {
            if (reg.points[at] - c.b).norm() <= tol && (covered - total).abs() <= tol * 16.0 {
                continue 'outer;
            }
            let here = reg.points[at];
            let mut advanced = false;
            for &(next, next_pt) in &incident[at] {
                let step = next_pt - here;
                let along = step.re * dir.re + step.im * dir.im;
                let off = (step.re * dir.im - step.im * dir.re).abs();
                if along > tol && off <= tol * 16.0 + along * 1e-9 {
                    at = next;
                    covered += along;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                return false;
            }
        }
        return false;
    }
    true
}

/// Smallest sampled distance between points of two first-letter tiles at the
/// given depth, the tiles being `map_i(skeleton(depth - 1))`.
pub fn tile_pair_distance(
    ifs: &[PlanarSimilarity],
    generators: &[Segment],
    depth: usize,
    i: usize,
    j: usize,
) -> Result<f64> {
    if depth == 0 || i == j || i >= ifs.len() || j >= ifs.len() {
        return Err(Error::InvalidParameter(
            "need depth >= 1 and two distinct map indices".into(),
        ));
    }
    let inner = skeleton(ifs, generators, depth - 1)?;
    let tile = |k: usize| -> Vec<Segment> {
        inner
            .iter()
            .map(|s| Segment::new(ifs[k].apply(s.a), ifs[k].apply(s.b)))
            .collect()
    };
    let pa = sample_points(&tile(i), 16);
    let pb = sample_points(&tile(j), 16);
    let mut min = f64::INFINITY;
    for p in &pa {
        for q in &pb {
            min = min.min((p - q).norm());
        }
    }
    Ok(min)
}

/// Sampled inter-tile separation away from the shared branch point.
#[derive(Clone, Copy, Debug)]
pub struct SeparationOutcome {
    /// Smallest sampled distance between distinct tiles, both points taken
    /// outside the exclusion ball around the gate.
    pub min_distance: f64,
    /// Exclusion ball radius around the origin.
    pub exclusion: f64,
    /// Conservative admissible floor `sin(theta/2) * exclusion`.
    pub threshold: f64,
    pub pass: bool,
}

/// Separation check for the planar tree family: distinct first-letter tiles
/// meet only at the origin, so away from a small ball around it their
/// sampled distance must stay above an angle-controlled floor.
pub fn family_separation_check(m: Letter, depth: usize) -> Result<SeparationOutcome> {
    if depth == 0 {
        return Err(Error::InvalidParameter("need depth >= 1".into()));
    }
    let ifs = family_ifs(m)?;
    let inner = skeleton(&ifs, &family_generator(), depth - 1)?;
    let exclusion = 1e-6;
    let threshold = (family_theta(m) / 2.0).sin() * exclusion;
    let tile_samples: Vec<Vec<Complex64>> = ifs
        .iter()
        .map(|f| {
            let moved: Vec<Segment> = inner
                .iter()
                .map(|s| Segment::new(f.apply(s.a), f.apply(s.b)))
                .collect();
            sample_points(&moved, 8)
                .into_iter()
                .filter(|p| p.norm() > exclusion)
                .collect()
        })
        .collect();
    let mut min = f64::INFINITY;
    for i in 0..tile_samples.len() {
        for j in i + 1..tile_samples.len() {
            for p in &tile_samples[i] {
                for q in &tile_samples[j] {
                    min = min.min((p - q).norm());
                }
            }
        }
    }
    Ok(SeparationOutcome {
        min_distance: min,
        exclusion,
        threshold,
        pass: min >= threshold,
    })
}

/// SVG document with one line element per segment, fitted to the bounding
/// box with a 5% margin; the y axis points up.
pub fn svg_string(segments: &[Segment]) -> String {
    if segments.is_empty() {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n".into();
    }
    let mut min_x = f64::INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for s in segments {
        for p in [s.a, s.b] {
            min_x = min_x.min(p.re);
            max_x = max_x.max(p.re);
            min_y = min_y.min(-p.im);
            max_y = max_y.max(-p.im);
        }
    }
    let w = (max_x - min_x).max(1e-9);
    let h = (max_y - min_y).max(1e-9);
    let margin = 0.05 * w.max(h);
    let stroke = 0.003 * w.max(h);
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.9} {:.9} {:.9} {:.9}\">\n",
        min_x - margin,
        min_y - margin,
        w + 2.0 * margin,
        h + 2.0 * margin
    ));
    out.push_str(&format!(
        "<g stroke=\"black\" stroke-width=\"{stroke:.9}\" stroke-linecap=\"round\">\n"
    ));
    for s in segments {
        out.push_str(&format!(
            "<line x1=\"{:.9}\" y1=\"{:.9}\" x2=\"{:.9}\" y2=\"{:.9}\"/>\n",
            s.a.re, -s.a.im, s.b.re, -s.b.im
        ));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Writes [`svg_string`] to a file.
pub fn render_svg(segments: &[Segment], path: &std::path::Path) -> Result<()> {
    std::fs::write(path, svg_string(segments))?;
    Ok(())
}

/// Headerless CSV rows `x1,y1,x2,y2`, one per segment, 12 significant digits.
pub fn csv_string(segments: &[Segment]) -> String {
    let mut out = String::new();
    for s in segments {
        out.push_str(&format!(
            "{:.11e},{:.11e},{:.11e},{:.11e}\n",
            s.a.re, s.a.im, s.b.re, s.b.im
        ));
    }
    out
}

/// Writes [`csv_string`] to a file.
pub fn export_csv(segments: &[Segment], path: &std::path::Path) -> Result<()> {
    std::fs::write(path, csv_string(segments))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn family_maps_meet_at_origin() {
        for m in [3u32, 4, 5] {
            let ifs = family_ifs(m).unwrap();
            assert!(close(ifs[0].apply(c(0.5, 0.0)), c(0.0, 0.0)));
            for f in &ifs[1..] {
                assert!(close(f.apply(c(-0.5, 0.0)), c(0.0, 0.0)));
            }
            // The halves fix the outer endpoints.
            assert!(close(ifs[0].apply(c(-0.5, 0.0)), c(-0.5, 0.0)));
            assert!(close(ifs[1].apply(c(0.5, 0.0)), c(0.5, 0.0)));
        }
    }

    #[test]
    fn family_first_spur_for_three_letters() {
        // theta = pi/6, so the spur tip is psi_3(1/2) = i/4.
        let ifs = family_ifs(3).unwrap();
        assert!((family_theta(3) - std::f64::consts::PI / 6.0).abs() < 1e-15);
        assert!(close(ifs[2].apply(c(0.5, 0.0)), c(0.0, 0.25)));
    }

    #[test]
    fn compose_matches_pointwise_application() {
        let ifs = family_ifs(4).unwrap();
        let probes = [c(0.3, -0.2), c(-0.5, 0.0), c(0.1, 0.45)];
        for f in &ifs {
            for g in &ifs {
                let fg = f.compose(g);
                for &z in &probes {
                    assert!(close(fg.apply(z), f.apply(g.apply(z))));
                }
            }
        }
    }

    #[test]
    fn skeleton_counts_and_halving() {
        let ifs = family_ifs(3).unwrap();
        let gens = family_generator();
        assert_eq!(skeleton(&ifs, &gens, 0).unwrap().len(), 1);
        let j1 = skeleton(&ifs, &gens, 1).unwrap();
        assert_eq!(j1.len(), 3);
        // The two halves cover [-1/2, 1/2] exactly; the spur leaves it.
        assert!(close(j1[0].a, c(-0.5, 0.0)));
        assert!(close(j1[0].b, c(0.0, 0.0)));
        assert!(close(j1[1].a, c(0.0, 0.0)));
        assert!(close(j1[1].b, c(0.5, 0.0)));
        assert_eq!(skeleton(&ifs, &gens, 4).unwrap().len(), 81);
    }

    #[test]
    fn vicsek_level_one_identifications() {
        let phi = vicsek_ifs();
        let corner = vicsek_corners();
        // [i (opp i)^inf] = [5 i^inf] for the four corner maps.
        let opp = [2usize, 3, 0, 1];
        for i in 0..4 {
            let left = phi[i].apply(corner[opp[i]]);
            let right = phi[4].apply(corner[i]);
            assert!(close(left, right), "corner {i} identification");
        }
    }

    #[test]
    fn vicsek_segment_lengths() {
        let segs = skeleton(&vicsek_ifs(), &vicsek_generators(), 2).unwrap();
        assert_eq!(segs.len(), 100);
        let expect = 2f64.sqrt() / 9.0;
        for s in &segs {
            assert!((s.len() - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn vicsek_heights_follow_scale() {
        let u: Word = "1,5,2".parse().unwrap();
        let h = vicsek_branch_height(&u).unwrap();
        assert!((h - 1.0 / (27.0 * 2f64.sqrt())).abs() < 1e-15);
        assert!(vicsek_branch_height(&"6".parse().unwrap()).is_err());
    }

    #[test]
    fn geodesic_across_depths_has_unit_length() {
        let ifs = family_ifs(3).unwrap();
        for depth in 0..=3 {
            let segs = skeleton(&ifs, &family_generator(), depth).unwrap();
            let len = path_length(&segs, c(-0.5, 0.0), c(0.5, 0.0), 1e-9).unwrap();
            assert!((len - 1.0).abs() < 1e-9, "depth {depth}: {len}");
        }
    }

    #[test]
    fn skeletons_nest() {
        let ifs = family_ifs(4).unwrap();
        let gens = family_generator();
        for depth in 0..=2 {
            let coarse = skeleton(&ifs, &gens, depth).unwrap();
            let fine = skeleton(&ifs, &gens, depth + 1).unwrap();
            assert!(nesting_check(&coarse, &fine, 1e-12), "depth {depth}");
        }
        let v = vicsek_ifs();
        let vg = vicsek_generators();
        for depth in 0..=2 {
            let coarse = skeleton(&v, &vg, depth).unwrap();
            let fine = skeleton(&v, &vg, depth + 1).unwrap();
            assert!(nesting_check(&coarse, &fine, 1e-12), "vicsek depth {depth}");
        }
    }

    #[test]
    fn spur_tip_hausdorff_quarter() {
        let ifs = family_ifs(3).unwrap();
        let gens = family_generator();
        let a = sample_points(&skeleton(&ifs, &gens, 0).unwrap(), 16);
        let b = sample_points(&skeleton(&ifs, &gens, 1).unwrap(), 16);
        let d = hausdorff_distance(&a, &b);
        assert!((d - 0.25).abs() < 0.02, "got {d}");
    }

    #[test]
    fn vicsek_opposite_tiles_stay_apart() {
        let d = tile_pair_distance(&vicsek_ifs(), &vicsek_generators(), 3, 0, 2).unwrap();
        assert!(d >= 2.0 / 3.0 - 1e-9, "got {d}");
    }

    #[test]
    fn family_tiles_separate_away_from_gate() {
        let out = family_separation_check(3, 3).unwrap();
        assert!(out.pass, "min {} threshold {}", out.min_distance, out.threshold);
    }

    #[test]
    fn svg_and_csv_shapes() {
        let segs = skeleton(&family_ifs(3).unwrap(), &family_generator(), 1).unwrap();
        let svg = svg_string(&segs);
        assert_eq!(svg.matches("<line").count(), 3);
        assert!(svg.contains("viewBox"));
        let csv = csv_string(&segs);
        assert_eq!(csv.lines().count(), 3);
        assert_eq!(csv.lines().next().unwrap().split(',').count(), 4);
        assert!(svg_string(&[]).contains("viewBox=\"0 0 1 1\""));
    }
}
