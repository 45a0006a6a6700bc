//! Exact distances between eventually periodic points, and the finite chain
//! sums that converge to them from above.
//!
//! The distance is the limit of the lengths of shortest chains of level-`n`
//! cylinders. [`chain_length`] evaluates one such finite sum exactly;
//! [`distance_exact`] evaluates the limit in closed form by splitting both
//! points at their first differing letter and solving the resulting
//! boundary-distance recurrences, whose eventually periodic orbits reduce to
//! one linear equation.

use std::collections::HashMap;

use num::{BigInt, BigRational, One, Zero};

use crate::words::{delta, Letter, PointCode, Weight, Word};
use crate::{Error, Result};

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

fn pow2_inv(s: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2).pow(s as u32))
}

/// Distance from a canonical point to a boundary anchor `1^inf` or `2^inf`.
///
/// Walks the code one letter at a time, tracking the affine form
/// `acc + coeff * d(rest, anchor)`: low letters contract toward the anchor,
/// high letters pay the exit cost `1/2` and, when aiming for `2^inf`, reroute
/// the remainder toward `1^inf`. The walk revisits a state after at most one
/// period, and the revisit solves the distance as a linear fixed point.
pub fn boundary_distance(x: &PointCode, anchor: Letter, a: &Weight) -> Result<BigRational> {
    if anchor != 1 && anchor != 2 {
        return Err(Error::InvalidParameter(format!(
            "anchor must be 1 or 2, got {anchor}"
        )));
    }
    if !x.is_canonical() {
        return Err(Error::NotCanonical(x.to_string()));
    }
    let one = PointCode::constant(1);
    let two = PointCode::constant(2);
    let mut cur = x.clone();
    let mut target = anchor;
    let mut coeff = BigRational::one();
    let mut acc = BigRational::zero();
    let mut seen: HashMap<(PointCode, Letter), (BigRational, BigRational)> = HashMap::new();
    loop {
        if cur == one || cur == two {
            let (head, _) = cur.shift();
            let v = if head == target {
                BigRational::zero()
            } else {
                BigRational::one()
            };
            return Ok(acc + coeff * v);
        }
        if let Some((c0, a0)) = seen.get(&(cur.clone(), target)) {
            // acc + coeff*X = a0 + c0*X with c0 > coeff, so X is determined.
            let x = (&acc - a0) / (c0 - &coeff);
            return Ok(a0 + c0 * x);
        }
        seen.insert((cur.clone(), target), (coeff.clone(), acc.clone()));
        let (head, rest) = cur.shift();
        let ah = a.value(head)?;
        match (target, head) {
            (1, 1) | (2, 2) => coeff *= ah,
            (1, _) | (2, 1) => {
                acc += &coeff * half();
                coeff *= ah;
            }
            (2, _) => {
                acc += &coeff * half();
                coeff *= ah;
                target = 1;
            }
            _ => unreachable!("anchor validated"),
        }
        cur = rest;
    }
}

/// Exact distance between the points denoted by two codes.
///
/// Canonicalizes both codes, strips the common head while accumulating the
/// cylinder factor, and at the first differing letter sums the two legs to
/// the shared gate, which the low tile reaches as its `2^inf` corner and a
/// high tile as its `1^inf` corner.
pub fn distance_exact(x: &PointCode, y: &PointCode, a: &Weight) -> Result<BigRational> {
    let mut cx = x.canonical();
    let mut cy = y.canonical();
    if cx == cy {
        return Ok(BigRational::zero());
    }
    // Distinct normalized sequences must differ within one preperiod plus one
    // period of each other.
    let cap = cx.prefix().len().max(cy.prefix().len())
        + cx.period().len()
        + cy.period().len()
        + 1;
    let mut factor = BigRational::one();
    for _ in 0..cap {
        let (i, rx) = cx.shift();
        let (j, ry) = cy.shift();
        if i != j {
            let gate_leg = |head: Letter, rest: &PointCode| -> Result<BigRational> {
                if head == 1 {
                    Ok(a.value(1)? * boundary_distance(rest, 2, a)?)
                } else {
                    Ok(a.value(head)? * boundary_distance(rest, 1, a)?)
                }
            };
            return Ok(factor * (gate_leg(i, &rx)? + gate_leg(j, &ry)?));
        }
        factor *= a.value(i)?;
        cx = rx;
        cy = ry;
        if cx == cy {
            return Ok(BigRational::zero());
        }
    }
    unreachable!("distinct normal forms differ within the cap");
}

/// One finite chain sum together with its level and a same-tile upper bound.
#[derive(Clone, Debug)]
pub struct ChainApproximation {
    /// Sum of cylinder diameters over the unique level-`n` arc.
    pub value: BigRational,
    pub level: usize,
    /// `delta(w) * (1 + 2^(|w|-n))` for the longest common prefix `w` of the
    /// two truncations; the value never exceeds it.
    pub same_tile_bound: BigRational,
}

/// Sum of cylinder diameters over the arc joining the level-`n` truncations.
///
/// Evaluated by the factored recursion below rather than by materializing the
/// arc, whose vertex count grows like `2^n`. Writing `T1(z)`/`T2(z)` for the
/// arc sums from `z` to the all-ones/all-twos word of the same length:
/// `T1(1z) = a(1)T1(z)`, `T1(iz) = a(i)T1(z) + 1/2`,
/// `T2(2z) = a(2)T2(z)`, `T2(1z) = a(1)T2(z) + 1/2`, and
/// `T2(iz) = a(i)T1(z) + 2^(-|iz|) + 1/2` for `i >= 3`, the middle term being
/// the hub word crossed between two high tiles. [`chain_length_from_arc`]
/// computes the same sum literally and serves as the reference.
pub fn chain_length(
    x: &PointCode,
    y: &PointCode,
    n: usize,
    a: &Weight,
) -> Result<ChainApproximation> {
    if n == 0 {
        return Err(Error::InvalidParameter("chain level must be >= 1".into()));
    }
    let wx = x.truncate(n);
    let wy = y.truncate(n);
    let c = wx.common_prefix_len(&wy);
    let head = Word::new(wx.letters()[..c].to_vec()).expect("letters validated");
    let factor = delta(&head, a)?;
    let value = if c == n {
        factor.clone()
    } else {
        let i = wx.letters()[c];
        let j = wy.letters()[c];
        let (t1x, t2x) = corner_sums(&wx.letters()[c + 1..], a)?;
        let (t1y, t2y) = corner_sums(&wy.letters()[c + 1..], a)?;
        let k = n - c;
        let cross = match (i == 1, j == 1) {
            (true, false) => a.value(1)? * t2x + a.value(j)? * t1y,
            (false, true) => a.value(i)? * t1x + a.value(1)? * t2y,
            (false, false) => a.value(i)? * t1x + pow2_inv(k) + a.value(j)? * t1y,
            (true, true) => unreachable!("first letters differ"),
        };
        &factor * cross
    };
    let same_tile_bound = factor * (BigRational::one() + pow2_inv(n - c));
    Ok(ChainApproximation {
        value,
        level: n,
        same_tile_bound,
    })
}

/// `(T1(z), T2(z))`: arc sums from `z` to `1^|z|` and to `2^|z|`.
fn corner_sums(z: &[Letter], a: &Weight) -> Result<(BigRational, BigRational)> {
    let mut t1 = BigRational::one();
    let mut t2 = BigRational::one();
    for (idx, &l) in z.iter().enumerate().rev() {
        let al = a.value(l)?;
        let suffix_len = z.len() - idx;
        let new_t1 = if l == 1 {
            &al * &t1
        } else {
            &al * &t1 + half()
        };
        let new_t2 = match l {
            2 => &al * &t2,
            1 => &al * &t2 + half(),
            _ => &al * &t1 + pow2_inv(suffix_len) + half(),
        };
        t1 = new_t1;
        t2 = new_t2;
    }
    Ok((t1, t2))
}

/// The same chain sum computed by materializing the arc and adding the
/// cylinder diameters one vertex at a time. Guarded, since the arc can hold
/// `2^n + 1` vertices.
pub fn chain_length_from_arc(
    x: &PointCode,
    y: &PointCode,
    n: usize,
    a: &Weight,
) -> Result<BigRational> {
    const MAX_LEVEL: usize = 22;
    if n == 0 || n > MAX_LEVEL {
        return Err(Error::SizeGuard(1u128 << n.min(127), 1u128 << MAX_LEVEL));
    }
    let path = crate::graphs::arc(&x.truncate(n), &y.truncate(n))?;
    let mut sum = BigRational::zero();
    for w in &path {
        sum += delta(w, a)?;
    }
    Ok(sum)
}
