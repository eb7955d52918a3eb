//! Rank words and their correspondence with Dyck paths.
//!
//! The `(m,n)`-word lists every positive value `mn - km - ℓn` (`k, ℓ >= 1`) in
//! increasing order, each decorated with its color `ℓ`. The color of a letter is
//! the column of the diagram cell holding that rank, and `k = n+1-v` recovers
//! its row. A rank word highlights a subset of letters closed upward under
//! congruence mod `m` and mod `n`; highlighted letters are exactly the cells
//! above the corresponding Dyck path.
//!
//! Skips on a word are counted as equivalence classes of [`SkipPair`]s. Two
//! pairs whose left letter has the smaller color are related when their left
//! letters share a color and their right letters share a row. Two pairs whose
//! left letter has the larger color are related when their right letters share
//! a color and their left letters share a row. Pairs of opposite orientation
//! are never related. Each clause is applied only to its own orientation:
//! applying both clauses to every pair would merge classes that belong to
//! different skip cells.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{enumerate_paths, Cell, CoprimePair, DyckPath};
use crate::statistics::StatTriple;
use crate::unionfind::DisjointSets;

/// A rank decorated with its color (diagram column).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Letter {
    pub rank: i64,
    pub color: u32,
}

impl Letter {
    /// The diagram cell holding this letter's rank.
    pub fn cell(&self, pair: CoprimePair) -> Cell {
        let (m, n) = (pair.m() as i64, pair.n() as i64);
        let k = (m * n - self.color as i64 * n - self.rank) / m;
        Cell::new(self.color, (n + 1 - k) as u32)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.rank, self.color)
    }
}

/// An ordered pair of letters: a highlighted letter left of an unhighlighted one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkipPair {
    pub left: Letter,
    pub right: Letter,
}

impl SkipPair {
    /// `Less` when the left color is smaller, `Greater` when larger.
    pub fn orientation(&self) -> Ordering {
        self.left.color.cmp(&self.right.color)
    }
}

impl fmt::Display for SkipPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// An `(m,n)`-word together with a valid highlighting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankWord {
    pair: CoprimePair,
    letters: Vec<Letter>,
    highlighted: Vec<bool>,
}

/// The sorted letters of the `(m,n)`-word.
pub fn word_letters(pair: CoprimePair) -> Vec<Letter> {
    let (m, n) = (pair.m() as i64, pair.n() as i64);
    let mut letters: Vec<Letter> = (1..m)
        .flat_map(|l| {
            (1..)
                .map(move |k| Letter {
                    rank: m * n - k * m - l * n,
                    color: l as u32,
                })
                .take_while(|x| x.rank > 0)
        })
        .collect();
    letters.sort_unstable();
    letters
}

/// The `(m,n)`-word with nothing highlighted.
pub fn build_word(pair: CoprimePair) -> RankWord {
    let letters = word_letters(pair);
    let highlighted = vec![false; letters.len()];
    RankWord {
        pair,
        letters,
        highlighted,
    }
}

/// Checks the highlighting rule on a mask aligned with [`word_letters`]: if a
/// rank is highlighted then every larger rank congruent to it mod `n` or mod
/// `m` is highlighted too.
pub fn validate_highlight(pair: CoprimePair, highlighted: &[bool]) -> bool {
    let letters = word_letters(pair);
    if letters.len() != highlighted.len() {
        return false;
    }
    let (m, n) = (pair.m() as i64, pair.n() as i64);
    letters
        .iter()
        .enumerate()
        .filter(|&(i, _)| highlighted[i])
        .all(|(i, a)| {
            letters[i + 1..]
                .iter()
                .zip(&highlighted[i + 1..])
                .filter(|(b, _)| (b.rank - a.rank) % n == 0 || (b.rank - a.rank) % m == 0)
                .all(|(_, &h)| h)
        })
}

impl RankWord {
    /// Builds a rank word from a highlight mask aligned with the sorted letters.
    pub fn new(pair: CoprimePair, highlighted: Vec<bool>) -> Result<Self> {
        let letters = word_letters(pair);
        if highlighted.len() != letters.len() {
            return Err(Error::InvalidHighlight(format!(
                "expected {} flags, got {}",
                letters.len(),
                highlighted.len()
            )));
        }
        if !validate_highlight(pair, &highlighted) {
            return Err(Error::InvalidHighlight(
                "highlighting is not closed under larger congruent ranks".into(),
            ));
        }
        Ok(RankWord {
            pair,
            letters,
            highlighted,
        })
    }

    /// Builds a rank word highlighting exactly the given ranks.
    pub fn from_ranks(pair: CoprimePair, ranks: &[i64]) -> Result<Self> {
        let letters = word_letters(pair);
        let wanted: BTreeSet<i64> = ranks.iter().copied().collect();
        for r in &wanted {
            if letters.binary_search_by_key(r, |l| l.rank).is_err() {
                return Err(Error::InvalidHighlight(format!(
                    "{r} is not a rank of the word"
                )));
            }
        }
        let mask = letters.iter().map(|l| wanted.contains(&l.rank)).collect();
        RankWord::new(pair, mask)
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn highlight_mask(&self) -> &[bool] {
        &self.highlighted
    }

    pub fn is_highlighted(&self, idx: usize) -> bool {
        self.highlighted[idx]
    }

    /// Index of the letter with the given rank.
    pub fn position(&self, rank: i64) -> Option<usize> {
        self.letters.binary_search_by_key(&rank, |l| l.rank).ok()
    }

    pub fn highlighted_ranks(&self) -> BTreeSet<i64> {
        self.iter()
            .filter(|&(_, h)| h)
            .map(|(l, _)| l.rank)
            .collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, bool)> + '_ {
        self.letters
            .iter()
            .copied()
            .zip(self.highlighted.iter().copied())
    }

    /// The Dyck path with exactly the highlighted cells above it.
    pub fn to_path(&self) -> DyckPath {
        let n = self.pair.n();
        let mut shape = vec![0u32; n as usize];
        for (letter, _) in self.iter().filter(|&(_, h)| h) {
            let cell = letter.cell(self.pair);
            let row = &mut shape[(n - cell.v) as usize];
            *row = (*row).max(cell.u);
        }
        DyckPath::from_shape_unchecked(self.pair, shape)
    }

    /// The rank word whose highlighted letters are the cells above `path`.
    pub fn from_path(path: &DyckPath) -> Self {
        let pair = path.pair();
        let letters = word_letters(pair);
        let highlighted = letters
            .iter()
            .map(|l| path.is_above(l.cell(pair)))
            .collect();
        RankWord {
            pair,
            letters,
            highlighted,
        }
    }

    /// Number of unhighlighted letters.
    pub fn area(&self) -> u32 {
        self.highlighted.iter().filter(|&&h| !h).count() as u32
    }

    /// All (highlighted, unhighlighted) letter pairs with the highlighted letter on the left.
    pub fn skip_pairs(&self) -> Vec<SkipPair> {
        let mut pairs = Vec::new();
        for (i, (left, lh)) in self.iter().enumerate() {
            if !lh {
                continue;
            }
            for (right, rh) in self.iter().skip(i + 1) {
                if !rh {
                    assert_ne!(
                        left.color, right.color,
                        "same-color skip pair in a rank word"
                    );
                    pairs.push(SkipPair { left, right });
                }
            }
        }
        pairs
    }

    /// Whether two skip pairs are directly related.
    fn related(&self, x: &SkipPair, y: &SkipPair) -> bool {
        let n = self.pair.n() as i64;
        let same_row = |a: i64, b: i64| (a - b) % n == 0;
        match (x.orientation(), y.orientation()) {
            (Ordering::Less, Ordering::Less) => {
                x.left.color == y.left.color && same_row(x.right.rank, y.right.rank)
            }
            (Ordering::Greater, Ordering::Greater) => {
                x.right.color == y.right.color && same_row(x.left.rank, y.left.rank)
            }
            _ => false,
        }
    }

    /// Equivalence classes of skip pairs, each in word order, ordered by first member.
    pub fn skip_classes(&self) -> Vec<Vec<SkipPair>> {
        let pairs = self.skip_pairs();
        let mut sets = DisjointSets::new(pairs.len());
        for i in 0..pairs.len() {
            for j in i + 1..pairs.len() {
                if self.related(&pairs[i], &pairs[j]) {
                    sets.union(i, j);
                }
            }
        }
        sets.groups()
            .into_iter()
            .map(|g| g.into_iter().map(|i| pairs[i]).collect())
            .collect()
    }

    pub fn skips(&self) -> u32 {
        self.skip_classes().len() as u32
    }

    /// The letter representing the skip cell of a pair's class: for a pair
    /// with smaller left color, the letter in the left letter's column and the
    /// right letter's row; otherwise the letter in the right letter's column
    /// and the left letter's row.
    pub fn psi(&self, pair: &SkipPair) -> Result<Letter> {
        let (li, ri) = match (
            self.position(pair.left.rank),
            self.position(pair.right.rank),
        ) {
            (Some(l), Some(r)) => (l, r),
            _ => {
                return Err(Error::Domain(format!(
                    "{pair} is not made of letters of the word"
                )))
            }
        };
        if self.letters[li] != pair.left
            || self.letters[ri] != pair.right
            || li >= ri
            || !self.highlighted[li]
            || self.highlighted[ri]
        {
            return Err(Error::Domain(format!(
                "{pair} is not a skip pair of the word"
            )));
        }
        let (l, r) = (pair.left.cell(self.pair), pair.right.cell(self.pair));
        let cell = match pair.orientation() {
            Ordering::Less => Cell::new(l.u, r.v),
            Ordering::Greater => Cell::new(r.u, l.v),
            Ordering::Equal => return Err(Error::Domain(format!("{pair} has equal colors"))),
        };
        let rank = self.pair.rank_of(cell.u, cell.v);
        assert!(rank > 0, "image of a skip pair must be a positive rank");
        Ok(Letter {
            rank,
            color: cell.u,
        })
    }

    pub fn stats(&self) -> StatTriple {
        let area = self.area();
        let skips = self.skips();
        let dinv = self.pair.positive_count() as u32 - area - skips;
        StatTriple { area, dinv, skips }
    }

    /// Parses the bracketed text form, e.g. `1_1 2_2 4_1 [5_2] 7_1 [10_1] [13_1]`.
    pub fn parse(pair: CoprimePair, s: &str) -> Result<Self> {
        let mut parsed = Vec::new();
        for tok in s.split_whitespace() {
            let (body, hl) = match tok.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
                Some(inner) => (inner, true),
                None => (tok, false),
            };
            let (rank, color) = body
                .split_once('_')
                .ok_or_else(|| Error::Parse(format!("expected rank_color, got {tok:?}")))?;
            let rank = rank
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            let color = color
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            parsed.push((Letter { rank, color }, hl));
        }
        let letters = word_letters(pair);
        if parsed.len() != letters.len() || parsed.iter().zip(&letters).any(|((p, _), l)| p != l) {
            return Err(Error::Parse(format!(
                "letters do not match the {pair}-word"
            )));
        }
        RankWord::new(pair, parsed.into_iter().map(|(_, h)| h).collect())
    }
}

impl fmt::Display for RankWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, hl)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if hl {
                write!(f, "[{letter}]")?;
            } else {
                write!(f, "{letter}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WordLetterJson {
    rank: i64,
    color: u32,
    highlighted: bool,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    m: u32,
    n: u32,
    letters: Vec<WordLetterJson>,
}

impl Serialize for RankWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WordJson {
            m: self.pair.m(),
            n: self.pair.n(),
            letters: self
                .iter()
                .map(|(l, h)| WordLetterJson {
                    rank: l.rank,
                    color: l.color,
                    highlighted: h,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RankWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = WordJson::deserialize(d)?;
        let pair = CoprimePair::new(raw.m, raw.n).map_err(D::Error::custom)?;
        let letters = word_letters(pair);
        let matches = raw.letters.len() == letters.len()
            && raw
                .letters
                .iter()
                .zip(&letters)
                .all(|(r, l)| r.rank == l.rank && r.color == l.color);
        if !matches {
            return Err(D::Error::custom(format!(
                "letters do not match the {pair}-word"
            )));
        }
        RankWord::new(pair, raw.letters.iter().map(|l| l.highlighted).collect())
            .map_err(D::Error::custom)
    }
}

/// All rank words of the pair, in the order of [`enumerate_paths`].
pub fn enumerate_rank_words(pair: CoprimePair) -> impl Iterator<Item = RankWord> {
    enumerate_paths(pair).map(|p| RankWord::from_path(&p))
}
