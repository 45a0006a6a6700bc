//! Symbolic layer: letters, finite words, eventually periodic point codes,
//! and weight vectors with their cylinder diameters.
//!
//! Points of the tree are classes of infinite letter sequences. An eventually
//! periodic sequence is stored as a [`PointCode`] in a normal form that makes
//! structural equality coincide with sequence equality; [`PointCode::canonical`]
//! additionally picks one representative per metric identification class.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// 1-based letter of the alphabet.
pub type Letter = u32;

/// Alphabet over which words are formed: either `{1, ..., m}` or all of
/// `{1, 2, 3, ...}` with a cap used by enumerations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    /// Letters `1..=m` with `m >= 2`.
    Finite(Letter),
    /// Every letter `>= 1` is valid; enumerations stop at the cap.
    InfiniteCapped(Letter),
}

impl Alphabet {
    /// Largest letter produced by enumerations.
    pub fn bound(&self) -> Letter {
        match *self {
            Alphabet::Finite(m) | Alphabet::InfiniteCapped(m) => m,
        }
    }

    /// Whether `i` is a valid letter of this alphabet.
    pub fn contains(&self, i: Letter) -> bool {
        match *self {
            Alphabet::Finite(m) => 1 <= i && i <= m,
            Alphabet::InfiniteCapped(_) => i >= 1,
        }
    }
}

/// Finite word over 1-based letters; the empty word is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// Builds a word, rejecting the invalid letter `0`.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidWord("letter 0 is not allowed".into()));
        }
        Ok(Word(letters))
    }

    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Word consisting of `n` copies of `i`.
    pub fn repeated(i: Letter, n: usize) -> Self {
        assert!(i >= 1, "letters are 1-based");
        Word(vec![i; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self` extended by one letter.
    pub fn push(&self, i: Letter) -> Word {
        assert!(i >= 1, "letters are 1-based");
        let mut v = self.0.clone();
        v.push(i);
        Word(v)
    }

    /// Whether `prefix` is a prefix of `self`.
    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    /// Length of the longest common prefix of two words.
    pub fn common_prefix_len(&self, other: &Word) -> usize {
        self.0
            .iter()
            .zip(other.0.iter())
            .take_while(|(a, b)| a == b)
            .count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.0 {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `"1,2,3"`; the empty string parses to the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for part in s.split(',') {
            let l: Letter = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidWord(format!("bad letter {part:?} in {s:?}")))?;
            letters.push(l);
        }
        Word::new(letters)
    }
}

/// Parses a rational from `"p/q"` or `"p"`.
pub fn parse_ratio(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidWeight(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

/// Renders a rational as `"p/q"` (always with an explicit denominator).
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Renders a rational as a decimal with the given number of places, rounded
/// to nearest (ties away from zero).
///
/// ```
/// use qctree::{decimal_string, parse_ratio};
///
/// let third = parse_ratio("1/3").unwrap();
/// assert_eq!(decimal_string(&third, 6), "0.333333");
/// assert_eq!(decimal_string(&-third, 3), "-0.333");
/// ```
pub fn decimal_string(r: &BigRational, places: u32) -> String {
    let scale = num::pow(BigInt::from(10u32), places as usize);
    let scaled = (r * BigRational::from_integer(scale.clone())).round();
    let units = scaled.to_integer();
    let sign = if units.is_negative() { "-" } else { "" };
    let magnitude = units.abs();
    let whole = &magnitude / &scale;
    let frac = &magnitude % &scale;
    if places == 0 {
        return format!("{sign}{whole}");
    }
    format!("{sign}{whole}.{frac:0>width$}", width = places as usize)
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    m: Letter,
    a: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail: Option<TailJson>,
}

#[derive(Serialize, Deserialize)]
struct TailJson {
    ratio: String,
}

/// Weight vector `a(1), ..., a(m)`, optionally extended to an infinite
/// alphabet by a geometric tail `a(j) = a(m) * ratio^(j-m)` for `j > m`.
///
/// Invariants enforced on construction: `a(1) = a(2) = 1/2`, the values are
/// nonincreasing, each lies in `(0, 1/2]`, and a tail ratio lies in `(0, 1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight {
    values: Vec<BigRational>,
    tail_ratio: Option<BigRational>,
}

impl Weight {
    /// Builds a finite weight vector after validating the invariants.
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        Self::build(values, None)
    }

    /// Builds a weight whose values beyond the explicit list continue
    /// geometrically: `a(j) = a(m) * ratio^(j-m)`.
    pub fn with_geometric_tail(values: Vec<BigRational>, ratio: BigRational) -> Result<Self> {
        Self::build(values, Some(ratio))
    }

    fn build(values: Vec<BigRational>, tail_ratio: Option<BigRational>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::InvalidWeight("need at least two values".into()));
        }
        if values[0] != half() || values[1] != half() {
            return Err(Error::InvalidWeight("a(1) and a(2) must equal 1/2".into()));
        }
        for v in &values {
            if !v.is_positive() || *v > half() {
                return Err(Error::InvalidWeight(format!(
                    "value {} outside (0, 1/2]",
                    ratio_string(v)
                )));
            }
        }
        for pair in values.windows(2) {
            if pair[1] > pair[0] {
                return Err(Error::InvalidWeight("values must be nonincreasing".into()));
            }
        }
        if let Some(r) = &tail_ratio {
            if !r.is_positive() || *r >= BigRational::one() {
                return Err(Error::InvalidWeight("tail ratio outside (0, 1)".into()));
            }
        }
        Ok(Weight { values, tail_ratio })
    }

    /// Uniform weight: `m` copies of `1/2`.
    pub fn uniform(m: Letter) -> Self {
        assert!(m >= 2, "need m >= 2");
        Weight {
            values: vec![half(); m as usize],
            tail_ratio: None,
        }
    }

    /// Number of explicitly stored values (the alphabet size, or the
    /// enumeration cap when a tail is present).
    pub fn m(&self) -> Letter {
        self.values.len() as Letter
    }

    pub fn alphabet(&self) -> Alphabet {
        if self.tail_ratio.is_some() {
            Alphabet::InfiniteCapped(self.m())
        } else {
            Alphabet::Finite(self.m())
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.tail_ratio.is_some()
    }

    pub fn tail_ratio(&self) -> Option<&BigRational> {
        self.tail_ratio.as_ref()
    }

    /// `a(i)`, following the geometric tail beyond the explicit values.
    pub fn value(&self, i: Letter) -> Result<BigRational> {
        if i == 0 {
            return Err(Error::LetterOutOfRange(i, self.m()));
        }
        let m = self.values.len() as Letter;
        if i <= m {
            return Ok(self.values[(i - 1) as usize].clone());
        }
        match &self.tail_ratio {
            Some(r) => {
                let mut v = self.values[self.values.len() - 1].clone();
                for _ in m..i {
                    v *= r;
                }
                Ok(v)
            }
            None => Err(Error::LetterOutOfRange(i, m)),
        }
    }

    /// Explicit values `a(1..=m)`.
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: WeightJson = serde_json::from_str(s)?;
        if j.a.len() != j.m as usize {
            return Err(Error::InvalidWeight(format!(
                "m = {} but {} values given",
                j.m,
                j.a.len()
            )));
        }
        let values = j.a.iter().map(|s| parse_ratio(s)).collect::<Result<_>>()?;
        match j.tail {
            Some(t) => Self::with_geometric_tail(values, parse_ratio(&t.ratio)?),
            None => Self::new(values),
        }
    }

    pub fn to_json_string(&self) -> String {
        let j = WeightJson {
            m: self.m(),
            a: self.values.iter().map(ratio_string).collect(),
            tail: self.tail_ratio.as_ref().map(|r| TailJson {
                ratio: ratio_string(r),
            }),
        };
        serde_json::to_string(&j).expect("weight serializes")
    }
}

/// Cylinder diameter `delta(w) = a(w_1) * ... * a(w_k)`; `delta(empty) = 1`.
pub fn delta(w: &Word, a: &Weight) -> Result<BigRational> {
    let mut d = BigRational::one();
    for &l in w.letters() {
        d *= a.value(l)?;
    }
    Ok(d)
}

/// Eventually periodic infinite sequence `prefix · period^inf` in normal form.
///
/// Normal form: the period is primitive (not a power of a shorter word) and
/// maximally rolled into the prefix (the prefix never ends with the last
/// letter of the period). Two codes denote the same sequence exactly when
/// they are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PointCode {
    prefix: Word,
    period: Word,
}

fn primitive_root(period: &[Letter]) -> Vec<Letter> {
    let n = period.len();
    for d in 1..n {
        if n % d == 0 && period.chunks(d).all(|c| c == &period[..d]) {
            return period[..d].to_vec();
        }
    }
    period.to_vec()
}

impl PointCode {
    /// Builds a code from any prefix and nonempty period, normalizing it.
    pub fn new(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::InvalidPointCode("period must be nonempty".into()));
        }
        let mut prefix = prefix.0;
        let mut period = primitive_root(&period.0);
        while let Some(&last) = prefix.last() {
            if last != *period.last().expect("period nonempty") {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        Ok(PointCode {
            prefix: Word(prefix),
            period: Word(period),
        })
    }

    /// The constant sequence `i^inf`.
    pub fn constant(i: Letter) -> Self {
        assert!(i >= 1, "letters are 1-based");
        PointCode {
            prefix: Word::empty(),
            period: Word(vec![i]),
        }
    }

    /// `w · period^inf` for a finite stem `w`, e.g. the tile corner `w · 1^inf`.
    pub fn from_stem(stem: &Word, tail_letter: Letter) -> Self {
        PointCode::new(stem.clone(), Word(vec![tail_letter])).expect("nonempty period")
    }

    pub fn prefix(&self) -> &Word {
        &self.prefix
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    /// Letter at 0-based position `idx` of the infinite sequence.
    pub fn letter_at(&self, idx: usize) -> Letter {
        if idx < self.prefix.len() {
            self.prefix.0[idx]
        } else {
            let j = (idx - self.prefix.len()) % self.period.len();
            self.period.0[j]
        }
    }

    /// First `n` letters of the sequence.
    pub fn truncate(&self, n: usize) -> Word {
        Word((0..n).map(|i| self.letter_at(i)).collect())
    }

    /// Splits off the first letter; the remainder stays in normal form.
    pub fn shift(&self) -> (Letter, PointCode) {
        if self.prefix.is_empty() {
            let mut p = self.period.0.clone();
            let head = p[0];
            p.rotate_left(1);
            (
                head,
                PointCode {
                    prefix: Word::empty(),
                    period: Word(p),
                },
            )
        } else {
            let head = self.prefix.0[0];
            (
                head,
                PointCode {
                    prefix: Word(self.prefix.0[1..].to_vec()),
                    period: self.period.clone(),
                },
            )
        }
    }

    /// The sequence `i · self`.
    pub fn prepend(&self, i: Letter) -> PointCode {
        let mut p = Vec::with_capacity(self.prefix.len() + 1);
        p.push(i);
        p.extend_from_slice(&self.prefix.0);
        PointCode::new(Word(p), self.period.clone()).expect("nonempty period")
    }

    /// The sequence `w · self`.
    pub fn prepend_word(&self, w: &Word) -> PointCode {
        PointCode::new(w.concat(&self.prefix), self.period.clone()).expect("nonempty period")
    }

    /// Whether this code is the chosen representative of its metric class.
    ///
    /// The only nontrivial classes are the gate classes
    /// `{u·1·2^inf} ∪ {u·j·1^inf : j >= 2}`; the representative is `u·1·2^inf`.
    pub fn is_canonical(&self) -> bool {
        !(self.period.0 == [1] && !self.prefix.is_empty())
    }

    /// The canonical representative of this code's metric class.
    ///
    /// Rewrites `u·j·1^inf` (j >= 2) to `u·1·2^inf`; all other codes are
    /// already canonical. Idempotent.
    pub fn canonical(&self) -> PointCode {
        if self.is_canonical() {
            return self.clone();
        }
        let mut p = self.prefix.0.clone();
        let j = p.pop().expect("prefix nonempty");
        debug_assert!(j >= 2, "normal form cannot end a prefix with the period letter");
        p.push(1);
        PointCode::new(Word(p), Word(vec![2])).expect("nonempty period")
    }
}

/// Whether two codes denote the same point of the tree.
pub fn point_equals(x: &PointCode, y: &PointCode) -> bool {
    x.canonical() == y.canonical()
}

impl fmt::Display for PointCode {
    /// `"1,1,2,(3)"` for `112·3^inf`; `"(1)"` for `1^inf`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prefix.is_empty() {
            write!(f, "({})", self.period)
        } else {
            write!(f, "{},({})", self.prefix, self.period)
        }
    }
}

impl FromStr for PointCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPointCode(format!("expected \"1,2,(3)\" form, got {s:?}"));
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let period: Word = s[open + 1..s.len() - 1].parse()?;
        if period.is_empty() {
            return Err(bad());
        }
        let head = s[..open].trim().trim_end_matches(',');
        let prefix: Word = head.parse()?;
        PointCode::new(prefix, period)
    }
}
