//! The `(m,n)` diagram, its ranks, and Dyck paths stored as Ferrers shapes.
//!
//! Cells are addressed by the coordinates `(u,v)` of their northeast corner:
//! column `u` in `1..=m`, row `v` in `1..=n`. The cell `(u,v)` carries the rank
//! `mn - un - (n+1-v)m`. A Dyck path is stored as the number of cells above it
//! in each row, listed from the top row down.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A pair of positive coprime integers: `m` columns and `n` rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct CoprimePair {
    m: u32,
    n: u32,
}

#[derive(Deserialize)]
struct RawPair {
    m: u32,
    n: u32,
}

impl TryFrom<RawPair> for CoprimePair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        CoprimePair::new(raw.m, raw.n)
    }
}

impl CoprimePair {
    pub fn new(m: u32, n: u32) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::NonPositive { m, n });
        }
        if m.gcd(&n) != 1 {
            return Err(Error::NotCoprime { m, n });
        }
        // |rank| <= mn, so mn has to fit in the signed rank type.
        match (m as i64).checked_mul(n as i64) {
            Some(_) => Ok(CoprimePair { m, n }),
            None => Err(Error::TooLarge { m, n }),
        }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of positive ranks, `(m-1)(n-1)/2`.
    pub fn positive_count(&self) -> usize {
        (self.m as usize - 1) * (self.n as usize - 1) / 2
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (1..=self.m).contains(&cell.u) && (1..=self.n).contains(&cell.v)
    }

    pub fn check(&self, cell: Cell) -> Result<()> {
        if self.contains(cell) {
            Ok(())
        } else {
            Err(Error::CellOutOfRange {
                u: cell.u,
                v: cell.v,
                m: self.m,
                n: self.n,
            })
        }
    }

    /// Rank of `(u,v)` without a range check.
    pub(crate) fn rank_of(&self, u: u32, v: u32) -> i64 {
        let (m, n) = (self.m as i64, self.n as i64);
        let (u, v) = (u as i64, v as i64);
        m * n - u * n - (n + 1 - v) * m
    }

    /// Number of positive-rank cells in row `v`; these are the leftmost cells of the row.
    pub fn row_capacity(&self, v: u32) -> u32 {
        (1..self.m).take_while(|&u| self.rank_of(u, v) > 0).count() as u32
    }

    /// Row capacities from the top row down.
    pub fn capacities(&self) -> Vec<u32> {
        (1..=self.n).rev().map(|v| self.row_capacity(v)).collect()
    }
}

impl fmt::Display for CoprimePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A cell of the diagram: column `u`, row `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32)", into = "(u32, u32)")]
pub struct Cell {
    pub u: u32,
    pub v: u32,
}

impl Cell {
    pub const fn new(u: u32, v: u32) -> Self {
        Cell { u, v }
    }
}

impl From<(u32, u32)> for Cell {
    fn from((u, v): (u32, u32)) -> Self {
        Cell { u, v }
    }
}

impl From<Cell> for (u32, u32) {
    fn from(c: Cell) -> Self {
        (c.u, c.v)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

/// The rank `mn - un - (n+1-v)m` of a cell.
pub fn gamma(pair: CoprimePair, cell: Cell) -> Result<i64> {
    pair.check(cell)?;
    Ok(pair.rank_of(cell.u, cell.v))
}

/// Whether the cell lies strictly above the diagonal, tested geometrically
/// on its southeast corner: `(v-1)m - un > 0`.
pub fn is_above_diagonal(pair: CoprimePair, cell: Cell) -> Result<bool> {
    pair.check(cell)?;
    let lhs = (cell.v as i64 - 1) * pair.m as i64 - cell.u as i64 * pair.n as i64;
    Ok(lhs > 0)
}

/// The full grid of ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDiagram {
    pair: CoprimePair,
    // row-major, bottom row first
    ranks: Vec<i64>,
}

impl RankDiagram {
    pub fn new(pair: CoprimePair) -> Self {
        let ranks = (1..=pair.n)
            .flat_map(|v| (1..=pair.m).map(move |u| pair.rank_of(u, v)))
            .collect();
        RankDiagram { pair, ranks }
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    pub fn rank(&self, cell: Cell) -> Result<i64> {
        self.pair.check(cell)?;
        let idx = (cell.v - 1) as usize * self.pair.m as usize + (cell.u - 1) as usize;
        Ok(self.ranks[idx])
    }

    /// All cells with their ranks, bottom row first, west to east.
    pub fn iter(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        let m = self.pair.m;
        self.ranks.iter().enumerate().map(move |(i, &r)| {
            let i = i as u32;
            (Cell::new(i % m + 1, i / m + 1), r)
        })
    }

    pub fn positive_cells(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        self.iter().filter(|&(_, r)| r > 0)
    }
}

/// Which side of a path a cell lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathSide {
    Above,
    Below,
}

/// An `(m,n)`-Dyck path, stored as the Ferrers shape of cells above it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPath")]
pub struct DyckPath {
    #[serde(flatten)]
    pair: CoprimePair,
    shape: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPath {
    m: u32,
    n: u32,
    shape: Vec<u32>,
}

impl TryFrom<RawPath> for DyckPath {
    type Error = Error;

    fn try_from(raw: RawPath) -> Result<Self> {
        DyckPath::new(CoprimePair::new(raw.m, raw.n)?, raw.shape)
    }
}

impl DyckPath {
    /// Builds a path from its row lengths, top row first.
    pub fn new(pair: CoprimePair, shape: Vec<u32>) -> Result<Self> {
        if shape.len() != pair.n as usize {
            return Err(Error::InvalidShape(format!(
                "expected {} rows, got {}",
                pair.n,
                shape.len()
            )));
        }
        for (i, (&len, cap)) in shape.iter().zip(pair.capacities()).enumerate() {
            let v = pair.n - i as u32;
            if len > cap {
                return Err(Error::InvalidShape(format!(
                    "row {v} has {len} cells above the path but only {cap} positive ranks"
                )));
            }
            if i > 0 && len > shape[i - 1] {
                return Err(Error::InvalidShape(format!(
                    "row {v} is longer than the row above it"
                )));
            }
        }
        Ok(DyckPath { pair, shape })
    }

    pub(crate) fn from_shape_unchecked(pair: CoprimePair, shape: Vec<u32>) -> Self {
        debug_assert!(DyckPath::new(pair, shape.clone()).is_ok());
        DyckPath { pair, shape }
    }

    /// The path hugging the bottom-right corner: no cells above it.
    pub fn empty(pair: CoprimePair) -> Self {
        DyckPath {
            pair,
            shape: vec![0; pair.n as usize],
        }
    }

    /// The path hugging the diagonal: every positive-rank cell is above it.
    pub fn full(pair: CoprimePair) -> Self {
        DyckPath {
            pair,
            shape: pair.capacities(),
        }
    }

    pub fn pair(&self) -> CoprimePair {
        self.pair
    }

    /// Row lengths, top row first.
    pub fn shape(&self) -> &[u32] {
        &self.shape
    }

    /// Number of cells above the path in row `v`.
    pub fn row_len(&self, v: u32) -> u32 {
        self.shape[(self.pair.n - v) as usize]
    }

    /// Number of cells above the path in column `u`.
    pub fn col_len(&self, u: u32) -> u32 {
        self.shape.iter().take_while(|&&len| len >= u).count() as u32
    }

    pub fn side(&self, cell: Cell) -> Result<PathSide> {
        self.pair.check(cell)?;
        Ok(self.side_of(cell))
    }

    pub(crate) fn side_of(&self, cell: Cell) -> PathSide {
        if cell.u <= self.row_len(cell.v) {
            PathSide::Above
        } else {
            PathSide::Below
        }
    }

    pub fn is_above(&self, cell: Cell) -> bool {
        self.pair.contains(cell) && self.side_of(cell) == PathSide::Above
    }

    /// Cells above the path, top row first, west to east.
    pub fn above_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let n = self.pair.n;
        self.shape
            .iter()
            .enumerate()
            .flat_map(move |(i, &len)| (1..=len).map(move |u| Cell::new(u, n - i as u32)))
    }

    pub fn above_count(&self) -> usize {
        self.shape.iter().map(|&l| l as usize).sum()
    }

    /// Cells above the path strictly east of `cell`.
    pub fn arm(&self, cell: Cell) -> Result<u32> {
        self.require_above(cell)?;
        Ok(self.row_len(cell.v) - cell.u)
    }

    /// Cells above the path strictly south of `cell`.
    pub fn leg(&self, cell: Cell) -> Result<u32> {
        self.require_above(cell)?;
        Ok((1..cell.v).filter(|&v| self.row_len(v) >= cell.u).count() as u32)
    }

    fn require_above(&self, cell: Cell) -> Result<()> {
        self.pair.check(cell)?;
        if self.side_of(cell) == PathSide::Above {
            Ok(())
        } else {
            Err(Error::Domain(format!("cell {cell} is below the path")))
        }
    }

    /// Parses a comma-separated shape such as `2,2,0,0,0,0,0` for the given pair.
    pub fn parse_shape(pair: CoprimePair, s: &str) -> Result<Self> {
        let shape = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad row length {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(pair, shape)
    }

    /// The shape alone, comma separated.
    pub fn shape_string(&self) -> String {
        join_u32(&self.shape)
    }
}

fn join_u32(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// `m,n:λ_n,...,λ_1`
impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}:{}",
            self.pair.m,
            self.pair.n,
            join_u32(&self.shape)
        )
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, shape) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `m,n:shape`, got {s:?}")))?;
        let (m, n) = head
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("expected `m,n` before ':', got {head:?}")))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("bad integer {x:?}: {e}")))
        };
        let pair = CoprimePair::new(parse(m)?, parse(n)?)?;
        DyckPath::parse_shape(pair, shape)
    }
}

/// The rational Catalan number `binom(m+n, m) / (m+n)`, or `None` on overflow.
pub fn rational_catalan(pair: CoprimePair) -> Option<u128> {
    let (m, n) = (pair.m as u128, pair.n as u128);
    let mut binom: u128 = 1;
    // binom(n+i, i) = binom(n+i-1, i-1) * (n+i) / i, exact at every step
    for i in 1..=m {
        binom = binom.checked_mul(n + i)? / i;
    }
    Some(binom / (m + n))
}

/// All Dyck paths of the pair, in lexicographically increasing shape order.
pub fn enumerate_paths(pair: CoprimePair) -> Paths {
    Paths {
        pair,
        caps: pair.capacities(),
        next: Some(vec![0; pair.n as usize]),
    }
}

/// Iterator returned by [`enumerate_paths`].
#[derive(Clone, Debug)]
pub struct Paths {
    pair: CoprimePair,
    caps: Vec<u32>,
    next: Option<Vec<u32>>,
}

impl Iterator for Paths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // bump the last row that still has room, zero everything after it
        let bumpable = (0..succ.len()).rev().find(|&i| {
            let ceiling = if i == 0 {
                self.caps[0]
            } else {
                self.caps[i].min(succ[i - 1])
            };
            succ[i] < ceiling
        });
        if let Some(i) = bumpable {
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|x| *x = 0);
            self.next = Some(succ);
        }
        Some(DyckPath::from_shape_unchecked(self.pair, current))
    }
}
