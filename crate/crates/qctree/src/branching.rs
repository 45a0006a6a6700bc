//! Branch points, tile boundaries, and the uniform branching constants.
//!
//! The branch points are exactly the gate classes `[u·1·2^inf]`, one per
//! finite stem `u`; each has valence `m` and both height notions (third
//! largest branch diameter, third largest branch reach) equal `a(3)delta(u)`.
//! Tiles meet only in such gates, which makes boundaries, neighbor tiles, and
//! the separation/growth/density constants exactly computable.

use std::collections::BTreeSet;

use num::{BigRational, One};
use rayon::prelude::*;
use serde::Serialize;

use crate::metric::distance_exact;
use crate::words::{delta, ratio_string, Letter, PointCode, Weight, Word};
use crate::{Error, Result};

/// Guard for branch-point enumerations.
const ENUMERATION_GUARD: u128 = 10_000_000;

fn require_branching_alphabet(a: &Weight) -> Result<()> {
    if a.alphabet().bound() < 3 {
        return Err(Error::InvalidParameter(
            "branch points need an alphabet with at least three letters".into(),
        ));
    }
    Ok(())
}

/// The gate point `[u·1·2^inf]` of the tile of `u`, in canonical form.
pub fn gate_code(u: &Word) -> PointCode {
    PointCode::from_stem(&u.push(1), 2)
}

/// Height of the branch point with stem `u`: `a(3) * delta(u)`.
///
/// Both height notions coincide here, because every branch beyond the top
/// two is a tile `delta`-similar to the whole tree.
pub fn branch_height(u: &Word, a: &Weight) -> Result<BigRational> {
    Ok(a.value(3)? * delta(u, a)?)
}

/// A branch point, its canonical code, and its height under both notions.
#[derive(Clone, Debug)]
pub struct BranchPoint {
    pub stem: Word,
    pub code: PointCode,
    /// Third largest branch diameter.
    pub height_diam: BigRational,
    /// Third largest branch reach (maximal distance within the branch).
    pub height_reach: BigRational,
}

/// All branch points with stems up to `max_level`, ordered by level then
/// lexicographically. The codes are pairwise distinct; their number is
/// `1 + m + ... + m^max_level`.
pub fn branch_points(max_level: usize, a: &Weight) -> Result<Vec<BranchPoint>> {
    require_branching_alphabet(a)?;
    let m = a.alphabet().bound();
    let mut total: u128 = 0;
    for k in 0..=max_level {
        total += (m as u128).pow(k as u32);
        if total > ENUMERATION_GUARD {
            return Err(Error::SizeGuard(total, ENUMERATION_GUARD));
        }
    }
    let mut out = Vec::with_capacity(total as usize);
    for k in 0..=max_level {
        for stem in crate::graphs::level_words(k, m)? {
            let h = branch_height(&stem, a)?;
            out.push(BranchPoint {
                code: gate_code(&stem),
                height_diam: h.clone(),
                height_reach: h,
                stem,
            });
        }
    }
    let distinct: BTreeSet<&PointCode> = out.iter().map(|b| &b.code).collect();
    debug_assert_eq!(distinct.len(), out.len(), "gate codes are pairwise distinct");
    Ok(out)
}

/// Boundary of the tile of `w`: the subset of its two corner points that
/// other same-level tiles share, in canonical form.
///
/// A corner is shared exactly when its canonical code is a gate `v·1·2^inf`;
/// the corner `w·1^inf` fails only for `w = 1^k`, the corner `w·2^inf` only
/// when `w` is `2^k` or ends its 2-run after a letter above 2.
pub fn tile_boundary(w: &Word) -> Vec<PointCode> {
    let mut out = Vec::new();
    for corner in [1, 2] {
        let code = PointCode::from_stem(w, corner).canonical();
        let p = code.prefix().letters();
        if code.period().letters() == [2] && p.last() == Some(&1) {
            debug_assert!(p.len() <= w.len(), "gate stem is strictly shorter");
            out.push(code);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A same-level tile sharing a boundary gate with the reference tile, with
/// the diameter ratio `delta(w)/delta(u)`.
#[derive(Clone, Debug)]
pub struct NeighborTile {
    pub word: Word,
    pub ratio: BigRational,
}

/// Neighbor tiles of `w` and the two-sided bound their ratios satisfy.
#[derive(Clone, Debug)]
pub struct NeighborReport {
    pub neighbors: Vec<NeighborTile>,
    /// `2 * min a(i)`, for finite alphabets.
    pub low: Option<BigRational>,
    /// `1 / (2 * min a(i))`, for finite alphabets.
    pub high: Option<BigRational>,
    pub all_within_bounds: bool,
}

/// All same-level tiles sharing a boundary point with the tile of `w`.
///
/// Each boundary gate `[v·1·2^inf]` is contained in exactly the level-`k`
/// words `v·1·2^(k-|v|-1)` and `v·j·1^(k-|v|-1)` for `j >= 2`; for infinite
/// alphabets the star is enumerated up to the alphabet bound and the ratio
/// bound fields stay empty.
pub fn neighbor_tiles(w: &Word, a: &Weight) -> Result<NeighborReport> {
    if w.is_empty() {
        return Err(Error::LengthMismatch);
    }
    let k = w.len();
    let dw = delta(w, a)?;
    let mut words = BTreeSet::new();
    for gate in tile_boundary(w) {
        let v = &gate.prefix().letters()[..gate.prefix().len() - 1];
        let run = k - v.len() - 1;
        let mut low = v.to_vec();
        low.push(1);
        low.extend(std::iter::repeat(2).take(run));
        words.insert(Word::new(low).expect("letters validated"));
        for j in 2..=a.alphabet().bound() {
            let mut high = v.to_vec();
            high.push(j);
            high.extend(std::iter::repeat(1).take(run));
            words.insert(Word::new(high).expect("letters validated"));
        }
    }
    words.remove(w);
    let neighbors: Vec<NeighborTile> = words
        .into_iter()
        .map(|u| {
            let ratio = &dw / delta(&u, a)?;
            Ok(NeighborTile { word: u, ratio })
        })
        .collect::<Result<_>>()?;
    let (low, high) = if a.is_infinite() {
        (None, None)
    } else {
        let min_a = a.values().iter().min().expect("nonempty weight").clone();
        let two_min = BigRational::from_integer(2.into()) * min_a;
        (Some(two_min.clone()), Some(two_min.recip()))
    };
    let all_within_bounds = match (&low, &high) {
        (Some(lo), Some(hi)) => neighbors.iter().all(|n| &n.ratio >= lo && &n.ratio <= hi),
        _ => true,
    };
    Ok(NeighborReport {
        neighbors,
        low,
        high,
        all_within_bounds,
    })
}

/// Outcome of one verification sweep: the inequality checked, the
/// multiplicative constant it uses, the tightest witness, and the verdict.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub constant: String,
    pub witness: String,
    pub pass: bool,
}

fn pair_indices(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            v.push((i, j));
        }
    }
    v
}

/// Checks `d(p, q) >= (1/2) min(delta(v), delta(w))` for all branch-point
/// pairs with stems up to `max_level`.
pub fn verify_separation(max_level: usize, a: &Weight) -> Result<CheckReport> {
    let points = branch_points(max_level, a)?;
    let deltas: Vec<BigRational> = points
        .iter()
        .map(|b| delta(&b.stem, a))
        .collect::<Result<_>>()?;
    let half = BigRational::new(1.into(), 2.into());
    let results: Vec<(BigRational, usize, usize)> = crate::threads::pool().install(|| {
        pair_indices(points.len())
            .par_iter()
            .map(|&(i, j)| {
                let d = distance_exact(&points[i].code, &points[j].code, a)
                    .expect("branch codes are valid");
                let floor = deltas[i].clone().min(deltas[j].clone());
                (d / floor, i, j)
            })
            .collect()
    });
    let (tightest, i, j) = results
        .into_iter()
        .min_by(|x, y| x.0.cmp(&y.0))
        .expect("at least one pair");
    let pass = tightest >= half;
    Ok(CheckReport {
        check: "branch-separation".into(),
        constant: ratio_string(&half),
        witness: format!(
            "min d/min(delta) = {} at [{}] vs [{}]",
            ratio_string(&tightest),
            points[i].code,
            points[j].code
        ),
        pass,
    })
}

/// Exhaustively verifies the three uniform branching inequalities at finite
/// level and returns one report per check:
///
/// - separation: `d(p, q) >= a(3) min(H(p), H(q))` over branch-point pairs;
/// - growth: `diam B_i >= (a(m)/a(3)) diam B_3` at every branch point;
/// - density: for sampled point pairs, the gate of their longest common
///   prefix `u` satisfies `H(gate) >= a(3) d(x, y)`.
pub fn verify_uniform_branching(max_level: usize, a: &Weight) -> Result<Vec<CheckReport>> {
    require_branching_alphabet(a)?;
    if a.is_infinite() {
        return Err(Error::InvalidParameter(
            "uniform branching constants need a finite alphabet".into(),
        ));
    }
    let m = a.m();
    let a3 = a.value(3)?;
    let points = branch_points(max_level, a)?;

    let sep_results: Vec<(BigRational, usize, usize)> = crate::threads::pool().install(|| {
        pair_indices(points.len())
            .par_iter()
            .map(|&(i, j)| {
                let d = distance_exact(&points[i].code, &points[j].code, a)
                    .expect("branch codes are valid");
                let floor = points[i].height_diam.clone().min(points[j].height_diam.clone());
                (d / floor, i, j)
            })
            .collect()
    });
    let (sep_tight, si, sj) = sep_results
        .into_iter()
        .min_by(|x, y| x.0.cmp(&y.0))
        .expect("at least one pair");
    let separation = CheckReport {
        check: "separation".into(),
        constant: ratio_string(&a3),
        witness: format!(
            "min d/min(H) = {} at [{}] vs [{}]",
            ratio_string(&sep_tight),
            points[si].code,
            points[sj].code
        ),
        pass: sep_tight >= a3,
    };

    // Branch diameters at any gate scale with the weight alone, so the
    // tightest growth ratio is a(m)/a(3) at every branch point.
    let growth_floor = a.value(m)? / &a3;
    let mut growth_tight = BigRational::one() / &a3 * a.value(3)?;
    let mut growth_witness = (Word::empty(), 3 as Letter);
    for p in &points {
        for i in 3..=m {
            let ratio = a.value(i)? / &a3;
            if ratio < growth_tight {
                growth_tight = ratio;
                growth_witness = (p.stem.clone(), i);
            }
        }
    }
    let growth = CheckReport {
        check: "growth".into(),
        constant: ratio_string(&growth_floor),
        witness: format!(
            "min diam(B_i)/diam(B_3) = {} at stem \"{}\", branch {}",
            ratio_string(&growth_tight),
            growth_witness.0,
            growth_witness.1
        ),
        pass: growth_tight >= growth_floor,
    };

    let sample = density_sample(max_level, a)?;
    let dens_results: Vec<(BigRational, usize, usize)> = crate::threads::pool().install(|| {
        pair_indices(sample.len())
            .par_iter()
            .filter_map(|&(i, j)| {
                let d = distance_exact(&sample[i], &sample[j], a).expect("sample codes valid");
                if d == BigRational::from_integer(0.into()) {
                    return None;
                }
                let u = common_stem(&sample[i], &sample[j]);
                let du = delta(&u, a).expect("stem letters valid");
                Some((du / d, i, j))
            })
            .collect()
    });
    let (dens_tight, di, dj) = dens_results
        .into_iter()
        .min_by(|x, y| x.0.cmp(&y.0))
        .expect("at least one distinct pair");
    // H(gate(u)) >= a(3) d(x, y) reduces to delta(u) >= d(x, y).
    let density = CheckReport {
        check: "density".into(),
        constant: ratio_string(&a3),
        witness: format!(
            "min delta(u)/d = {} at [{}] vs [{}]",
            ratio_string(&dens_tight),
            sample[di],
            sample[dj]
        ),
        pass: dens_tight >= BigRational::one(),
    };

    Ok(vec![separation, growth, density])
}

/// Deterministic point family for the density sweep: all gates and tile
/// corners with stems up to `max_level`, canonicalized and deduplicated.
fn density_sample(max_level: usize, a: &Weight) -> Result<Vec<PointCode>> {
    let m = a.alphabet().bound();
    let mut set = BTreeSet::new();
    for k in 0..=max_level {
        for stem in crate::graphs::level_words(k, m)? {
            set.insert(gate_code(&stem));
            set.insert(PointCode::from_stem(&stem, 1).canonical());
            set.insert(PointCode::from_stem(&stem, 2).canonical());
        }
    }
    Ok(set.into_iter().collect())
}

/// Longest common prefix of two canonical codes, as a finite stem.
fn common_stem(x: &PointCode, y: &PointCode) -> Word {
    let cap = x.prefix().len().max(y.prefix().len())
        + x.period().len()
        + y.period().len()
        + 1;
    let mut letters = Vec::new();
    for idx in 0..cap {
        let (lx, ly) = (x.letter_at(idx), y.letter_at(idx));
        if lx != ly {
            break;
        }
        letters.push(lx);
    }
    Word::new(letters).expect("letters validated")
}

/// Directed excesses between the level-`level` branch-point sets of the
/// subalphabet `{1..m_small}` and of the full alphabet of `a`, measured in
/// the metric of `a`.
#[derive(Clone, Debug)]
pub struct NestingReport {
    pub level: usize,
    pub small_count: usize,
    pub big_count: usize,
    /// `max` over big-set points of the distance to the small set.
    pub excess: BigRational,
    /// `max` over small-set points of the distance to the big set (zero,
    /// since the small set is contained in the big one).
    pub reverse_excess: BigRational,
}

/// Compares branch-point sets across alphabets: every branch point of the
/// subalphabet tree is one of the full tree, and the full tree's extra
/// branch points stay within a weight-controlled Hausdorff excess.
pub fn branch_point_nesting(m_small: Letter, level: usize, a: &Weight) -> Result<NestingReport> {
    if m_small < 3 || m_small >= a.alphabet().bound() {
        return Err(Error::InvalidParameter(format!(
            "need 3 <= m_small < alphabet bound, got {m_small}"
        )));
    }
    let small: Vec<PointCode> = stems_to_gates(m_small, level)?;
    let big: Vec<PointCode> = stems_to_gates(a.alphabet().bound(), level)?;
    let directed = |from: &[PointCode], to: &[PointCode]| -> BigRational {
        crate::threads::pool().install(|| {
            from.par_iter()
                .map(|q| {
                    to.iter()
                        .map(|p| distance_exact(q, p, a).expect("gate codes valid"))
                        .min()
                        .expect("nonempty target set")
                })
                .max()
                .expect("nonempty source set")
        })
    };
    Ok(NestingReport {
        level,
        small_count: small.len(),
        big_count: big.len(),
        excess: directed(&big, &small),
        reverse_excess: directed(&small, &big),
    })
}

fn stems_to_gates(m: Letter, level: usize) -> Result<Vec<PointCode>> {
    let mut out = Vec::new();
    for k in 0..=level {
        for stem in crate::graphs::level_words(k, m)? {
            out.push(gate_code(&stem));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_ratio;

    fn w(s: &str) -> Word {
        s.parse().expect("valid word")
    }

    fn r(s: &str) -> BigRational {
        parse_ratio(s).expect("valid rational")
    }

    #[test]
    fn gate_codes_are_canonical_and_distinct_per_stem() {
        let g = gate_code(&w("2,3"));
        assert_eq!(g.to_string(), "2,3,1,(2)");
        assert!(g.is_canonical());
        assert_ne!(gate_code(&w("1")), gate_code(&w("2")));
    }

    #[test]
    fn branch_point_count_is_geometric_sum() {
        let a = Weight::uniform(3);
        let pts = branch_points(3, &a).unwrap();
        assert_eq!(pts.len(), 1 + 3 + 9 + 27);
        let a4 = Weight::uniform(4);
        assert_eq!(branch_points(2, &a4).unwrap().len(), 1 + 4 + 16);
    }

    #[test]
    fn branch_heights_scale_with_delta() {
        let a = Weight::new(vec![r("1/2"), r("1/2"), r("1/4")]).unwrap();
        let pts = branch_points(2, &a).unwrap();
        for p in &pts {
            let expect = r("1/4") * delta(&p.stem, &a).unwrap();
            assert_eq!(p.height_diam, expect);
            assert_eq!(p.height_reach, expect);
        }
    }

    #[test]
    fn tile_boundary_examples() {
        assert_eq!(
            tile_boundary(&w("1,1")),
            vec!["1,1,(2)".parse::<PointCode>().unwrap()]
        );
        let b12 = tile_boundary(&w("1,2"));
        assert_eq!(b12.len(), 2);
        assert!(b12.contains(&"1,(2)".parse().unwrap()));
        assert!(b12.contains(&"1,1,(2)".parse().unwrap()));
        assert_eq!(tile_boundary(&Word::empty()), vec![]);
        assert_eq!(tile_boundary(&w("2")), vec!["1,(2)".parse().unwrap()]);
        // A 2-run preceded by a letter above 2 is not shared.
        assert_eq!(tile_boundary(&w("3,2")).len(), 1);
    }

    #[test]
    fn tile_boundary_nonempty_beyond_root() {
        for m in [3u32, 4] {
            for k in 1..=3 {
                for stem in crate::graphs::level_words(k, m).unwrap() {
                    assert!(!tile_boundary(&stem).is_empty(), "tile {stem} has boundary");
                }
            }
        }
    }

    #[test]
    fn neighbor_tiles_star_of_gates() {
        let a = Weight::uniform(3);
        let rep = neighbor_tiles(&w("1,2"), &a).unwrap();
        let words: Vec<String> = rep.neighbors.iter().map(|n| n.word.to_string()).collect();
        assert_eq!(words, vec!["1,1", "1,3", "2,1", "3,1"]);
        assert!(rep.all_within_bounds);
    }

    #[test]
    fn neighbor_ratio_gate_case() {
        // Tile 1·2 against tile j·1 has ratio delta(12)/delta(j1) = 1/(2a(j)).
        let a = Weight::new(vec![r("1/2"), r("1/2"), r("1/8")]).unwrap();
        let rep = neighbor_tiles(&w("1,2"), &a).unwrap();
        let r31 = rep
            .neighbors
            .iter()
            .find(|n| n.word == w("3,1"))
            .expect("tile 31 neighbors 12");
        assert_eq!(r31.ratio, r("4/1"));
        assert!(rep.all_within_bounds);
    }

    #[test]
    fn separation_holds_at_small_levels() {
        let a = Weight::new(vec![r("1/2"), r("1/2"), r("1/4")]).unwrap();
        let rep = verify_separation(2, &a).unwrap();
        assert!(rep.pass, "witness: {}", rep.witness);
    }

    #[test]
    fn uniform_branching_constants_for_uniform_weight() {
        let a = Weight::uniform(3);
        let checks = verify_uniform_branching(2, &a).unwrap();
        assert_eq!(checks.len(), 3);
        assert!(checks.iter().all(|c| c.pass));
        assert_eq!(checks[0].constant, "1/2");
        assert_eq!(checks[1].constant, "1/1");
        assert_eq!(checks[2].constant, "1/2");
    }

    #[test]
    fn uniform_branching_rejects_infinite_weight() {
        let a = Weight::with_geometric_tail(vec![r("1/2"), r("1/2"), r("1/4")], r("1/2")).unwrap();
        assert!(verify_uniform_branching(1, &a).is_err());
    }

    #[test]
    fn nesting_small_set_is_contained() {
        let a = Weight::uniform(4);
        let rep = branch_point_nesting(3, 2, &a).unwrap();
        assert_eq!(rep.reverse_excess, r("0"));
        assert_eq!(rep.small_count, 1 + 3 + 9);
        assert_eq!(rep.big_count, 1 + 4 + 16);
        assert!(rep.excess > r("0"));
    }
}
