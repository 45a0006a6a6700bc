//! Combinatorial level graphs on the words of length `k`.
//!
//! Level 1 is a star with center `1`; level `k+1` copies level `k` into each
//! letter subtree and joins the copies by the gate edges
//! `{1·2^(k), i·1^(k)}` for `i >= 2`. Equivalently, two distinct words are
//! adjacent exactly when they are `{v·i·1^(l), v·1·2^(l)}` for some common
//! prefix `v`, letter `i >= 2`, and `l >= 0`. Every level graph is a tree, so
//! arcs (simple paths) are unique.

use std::collections::HashMap;

use crate::words::{Alphabet, Letter, Word};
use crate::{Error, Result};

/// Guard for brute-force enumerations of all `m^k` words.
const ENUMERATION_GUARD: u128 = 10_000_000;

fn check_same_level(w: &Word, u: &Word) -> Result<()> {
    if w.len() != u.len() || w.is_empty() {
        return Err(Error::LengthMismatch);
    }
    Ok(())
}

/// Closed-form adjacency test in the level graph of `|w|`.
///
/// Strips the longest common prefix and matches the remainders against the
/// pattern `{i·1^(l), 1·2^(l)}` with `i >= 2`.
pub fn adjacent(w: &Word, u: &Word) -> Result<bool> {
    check_same_level(w, u)?;
    let c = w.common_prefix_len(u);
    if c == w.len() {
        return Ok(false);
    }
    let a = &w.letters()[c..];
    let b = &u.letters()[c..];
    let gate_low = |s: &[Letter]| s[0] == 1 && s[1..].iter().all(|&l| l == 2);
    let gate_high = |s: &[Letter]| s[0] >= 2 && s[1..].iter().all(|&l| l == 1);
    Ok((gate_low(a) && gate_high(b)) || (gate_high(a) && gate_low(b)))
}

/// All neighbors of `w` in its level graph, in lexicographic order.
///
/// For infinite alphabets the letters are capped at the alphabet bound.
pub fn neighbors(w: &Word, alphabet: Alphabet) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::LengthMismatch);
    }
    let letters = w.letters();
    let k = letters.len();
    let mut out = Vec::new();
    for l in 0..k {
        let head = &letters[..k - l - 1];
        let pivot = letters[k - l - 1];
        let tail = &letters[k - l..];
        if pivot >= 2 && tail.iter().all(|&x| x == 1) {
            // w = v·i·1^(l) with i >= 2 touches v·1·2^(l).
            let mut v = head.to_vec();
            v.push(1);
            v.extend(std::iter::repeat(2).take(l));
            out.push(Word::new(v).expect("letters validated"));
        }
        if pivot == 1 && tail.iter().all(|&x| x == 2) {
            // w = v·1·2^(l) touches v·i·1^(l) for every i >= 2.
            for i in 2..=alphabet.bound() {
                let mut v = head.to_vec();
                v.push(i);
                v.extend(std::iter::repeat(1).take(l));
                out.push(Word::new(v).expect("letters validated"));
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The unique arc from `w` to `u` in their level graph, inclusive of both.
pub fn arc(w: &Word, u: &Word) -> Result<Vec<Word>> {
    check_same_level(w, u)?;
    Ok(arc_inner(w.letters(), u.letters()))
}

fn prepend_all(i: Letter, path: Vec<Vec<Letter>>) -> Vec<Vec<Letter>> {
    path.into_iter()
        .map(|mut v| {
            v.insert(0, i);
            v
        })
        .collect()
}

fn arc_inner(w: &[Letter], u: &[Letter]) -> Vec<Word> {
    fn go(w: &[Letter], u: &[Letter]) -> Vec<Vec<Letter>> {
        if w == u {
            return vec![w.to_vec()];
        }
        let k = w.len();
        let (i, j) = (w[0], u[0]);
        if i == j {
            return prepend_all(i, go(&w[1..], &u[1..]));
        }
        let ones = vec![1 as Letter; k - 1];
        let twos = vec![2 as Letter; k - 1];
        match (i, j) {
            // Inside tile 1 head for its deep corner 2^(k-1), cross the gate
            // edge, then run from j's corner 1^(k-1) to the target.
            (1, _) => {
                let mut path = prepend_all(1, go(&w[1..], &twos));
                path.extend(prepend_all(j, go(&ones, &u[1..])));
                path
            }
            (_, 1) => {
                let mut path = prepend_all(i, go(&w[1..], &ones));
                path.extend(prepend_all(1, go(&twos, &u[1..])));
                path
            }
            // Two high tiles meet only through the hub word 1·2^(k-1).
            _ => {
                let mut path = prepend_all(i, go(&w[1..], &ones));
                let mut hub = vec![1 as Letter];
                hub.extend(std::iter::repeat(2).take(k - 1));
                path.push(hub);
                path.extend(prepend_all(j, go(&ones, &u[1..])));
                path
            }
        }
    }
    go(w, u)
        .into_iter()
        .map(|v| Word::new(v).expect("letters validated"))
        .collect()
}

/// Edge list of the level-`k` graph built by the inductive definition
/// (copy level `k-1` into every subtree, add the gate edges). This is the
/// reference construction the closed form is tested against.
pub fn brute_force_edges(k: usize, m: Letter) -> Result<Vec<(Word, Word)>> {
    if k == 0 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "need level >= 1 and m >= 2, got level {k}, m {m}"
        )));
    }
    let size = (m as u128).pow(k as u32);
    if size > ENUMERATION_GUARD {
        return Err(Error::SizeGuard(size, ENUMERATION_GUARD));
    }
    let mut edges: Vec<(Vec<Letter>, Vec<Letter>)> = (2..=m)
        .map(|i| (vec![1], vec![i]))
        .collect();
    for level in 1..k {
        let mut next = Vec::with_capacity(edges.len() * m as usize + (m as usize - 1));
        for i in 1..=m {
            for (a, b) in &edges {
                let mut x = Vec::with_capacity(level + 1);
                x.push(i);
                x.extend_from_slice(a);
                let mut y = Vec::with_capacity(level + 1);
                y.push(i);
                y.extend_from_slice(b);
                next.push((x, y));
            }
        }
        for i in 2..=m {
            let mut low = vec![1];
            low.extend(std::iter::repeat(2).take(level));
            let mut high = vec![i];
            high.extend(std::iter::repeat(1).take(level));
            next.push((low, high));
        }
        edges = next;
    }
    Ok(edges
        .into_iter()
        .map(|(a, b)| {
            (
                Word::new(a).expect("letters validated"),
                Word::new(b).expect("letters validated"),
            )
        })
        .collect())
}

/// All words of length `k` over `{1..=m}`, lexicographically.
pub fn level_words(k: usize, m: Letter) -> Result<Vec<Word>> {
    let size = (m as u128).pow(k as u32);
    if size > ENUMERATION_GUARD {
        return Err(Error::SizeGuard(size, ENUMERATION_GUARD));
    }
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * m as usize);
        for v in &out {
            for i in 1..=m {
                let mut x = v.clone();
                x.push(i);
                next.push(x);
            }
        }
        out = next;
    }
    Ok(out
        .into_iter()
        .map(|v| Word::new(v).expect("letters validated"))
        .collect())
}

/// Structural summary of the brute-force level graph.
#[derive(Clone, Debug)]
pub struct TreeStructureReport {
    pub level: usize,
    pub m: Letter,
    pub vertices: u64,
    pub edges: u64,
    pub connected: bool,
    /// True when the edge count is `vertices - 1` and the graph is connected.
    pub passed: bool,
}

/// Builds the level graph by the inductive definition and checks that it is
/// a tree: `m^k` vertices, `m^k - 1` edges, connected.
pub fn verify_tree_structure(k: usize, m: Letter) -> Result<TreeStructureReport> {
    let words = level_words(k, m)?;
    let edges = brute_force_edges(k, m)?;
    let index: HashMap<&Word, usize> = words.iter().zip(0..).collect();
    let mut dsu: Vec<usize> = (0..words.len()).collect();
    fn find(dsu: &mut Vec<usize>, mut x: usize) -> usize {
        while dsu[x] != x {
            dsu[x] = dsu[dsu[x]];
            x = dsu[x];
        }
        x
    }
    for (a, b) in &edges {
        let (ia, ib) = (index[a], index[b]);
        let (ra, rb) = (find(&mut dsu, ia), find(&mut dsu, ib));
        dsu[ra] = rb;
    }
    let root = find(&mut dsu, 0);
    let connected = (0..words.len()).all(|i| find(&mut dsu, i) == root);
    let passed = connected && edges.len() == words.len() - 1;
    Ok(TreeStructureReport {
        level: k,
        m,
        vertices: words.len() as u64,
        edges: edges.len() as u64,
        connected,
        passed,
    })
}
