//! Area, dinv and skips of a Dyck path.
//!
//! The positive-rank cells of the diagram split into three sets: the area
//! cells below the path, and the dinv and skips cells above it. Dinv is
//! computed two ways. [`dinv_naive`] evaluates the arm/leg inequality
//! `arm/(leg+1) < m/n < (arm+1)/leg` by cross-multiplication, and
//! [`dinv_fast`] compares four ranks at the ends of the cell's row and column.
//! Both are kept; the naive one is the oracle for the fast one.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::lattice::{Cell, DyckPath};

/// The `(area, dinv, skips)` statistics of a path or rank word.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct StatTriple {
    pub area: u32,
    pub dinv: u32,
    pub skips: u32,
}

impl StatTriple {
    pub fn total(&self) -> u32 {
        self.area + self.dinv + self.skips
    }
}

/// Disjoint split of the positive-rank cells of a diagram.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPartition {
    pub area_cells: BTreeSet<Cell>,
    pub dinv_cells: BTreeSet<Cell>,
    pub skips_cells: BTreeSet<Cell>,
}

impl CellPartition {
    pub fn of(path: &DyckPath) -> Self {
        let dinv_cells = dinv_fast(path);
        let skips_cells = path
            .above_cells()
            .filter(|c| !dinv_cells.contains(c))
            .collect();
        CellPartition {
            area_cells: area_cells(path),
            dinv_cells,
            skips_cells,
        }
    }

    pub fn stats(&self) -> StatTriple {
        StatTriple {
            area: self.area_cells.len() as u32,
            dinv: self.dinv_cells.len() as u32,
            skips: self.skips_cells.len() as u32,
        }
    }
}

/// Positive-rank cells below the path.
pub fn area_cells(path: &DyckPath) -> BTreeSet<Cell> {
    let pair = path.pair();
    (1..=pair.n())
        .flat_map(|v| {
            let first = path.row_len(v) + 1;
            (first..pair.m())
                .take_while(move |&u| pair.rank_of(u, v) > 0)
                .map(move |u| Cell::new(u, v))
        })
        .collect()
}

/// Whether an above-path cell with the given arm and leg satisfies
/// `arm/(leg+1) < m/n < (arm+1)/leg`, division by zero read as infinity.
fn arm_leg_criterion(m: i64, n: i64, arm: i64, leg: i64) -> bool {
    // For coprime m,n and 0 <= arm <= m-2 neither side can be an equality.
    assert_ne!(arm * n, m * (leg + 1), "arm/leg equality with coprime m,n");
    assert_ne!(leg * m, n * (arm + 1), "arm/leg equality with coprime m,n");
    arm * n < m * (leg + 1) && leg * m < n * (arm + 1)
}

/// Dinv cells from the arm/leg definition.
pub fn dinv_naive(path: &DyckPath) -> BTreeSet<Cell> {
    let (m, n) = (path.pair().m() as i64, path.pair().n() as i64);
    path.above_cells()
        .filter(|&cell| {
            let arm = path.arm(cell).expect("above-path cell") as i64;
            let leg = path.leg(cell).expect("above-path cell") as i64;
            arm_leg_criterion(m, n, arm, leg)
        })
        .collect()
}

/// The four cells the fast criterion compares for an above-path cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Neighbors {
    /// Easternmost above-path cell of the row.
    pub east: Cell,
    /// The cell just east of `east`, below the path.
    pub east_out: Cell,
    /// Southernmost above-path cell of the column.
    pub south: Cell,
    /// The cell just south of `south`, below the path.
    pub south_out: Cell,
}

impl Neighbors {
    pub fn of(path: &DyckPath, cell: Cell) -> Option<Self> {
        if !path.is_above(cell) {
            return None;
        }
        let pair = path.pair();
        let east = Cell::new(path.row_len(cell.v), cell.v);
        let east_out = Cell::new(east.u + 1, cell.v);
        let lowest = (1..=cell.v)
            .find(|&v| path.row_len(v) >= cell.u)
            .expect("cell is above");
        let south = Cell::new(cell.u, lowest);
        let south_out = Cell::new(cell.u, lowest - 1);
        // row_len <= m-1 and the bottom row holds no positive ranks, so both
        // outer neighbours stay inside the diagram
        assert!(pair.contains(east_out) && pair.contains(south_out));
        Some(Neighbors {
            east,
            east_out,
            south,
            south_out,
        })
    }
}

/// Whether an above-path cell is a dinv cell by the rank comparison
/// `γ(east) > γ(south_out)` and `γ(south) > γ(east_out)`.
pub fn is_dinv_fast(path: &DyckPath, cell: Cell) -> bool {
    let pair = path.pair();
    let nb = Neighbors::of(path, cell).expect("cell above the path");
    let rank = |c: Cell| pair.rank_of(c.u, c.v);
    rank(nb.east) > rank(nb.south_out) && rank(nb.south) > rank(nb.east_out)
}

/// Dinv cells from the rank comparison criterion.
pub fn dinv_fast(path: &DyckPath) -> BTreeSet<Cell> {
    path.above_cells()
        .filter(|&c| is_dinv_fast(path, c))
        .collect()
}

/// Above-path cells that are not dinv cells.
pub fn skips_cells(path: &DyckPath) -> BTreeSet<Cell> {
    path.above_cells()
        .filter(|&c| !is_dinv_fast(path, c))
        .collect()
}

pub fn stat_triple(path: &DyckPath) -> StatTriple {
    let above = path.above_count() as u32;
    let dinv = path
        .above_cells()
        .filter(|&c| is_dinv_fast(path, c))
        .count() as u32;
    StatTriple {
        area: area_cells(path).len() as u32,
        dinv,
        skips: above - dinv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_paths, gamma, CoprimePair, RankDiagram};

    fn path(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn cells(xs: &[(u32, u32)]) -> BTreeSet<Cell> {
        xs.iter().map(|&c| Cell::from(c)).collect()
    }

    #[test]
    fn first_example_path() {
        let p = path("4,7:2,2,0,0,0,0,0");
        let area = area_cells(&p);
        assert_eq!(area.len(), 5);
        let ranks: BTreeSet<i64> = area.iter().map(|&c| gamma(p.pair(), c).unwrap()).collect();
        assert_eq!(ranks, [1, 2, 3, 5, 9].into_iter().collect());
        assert_eq!(dinv_naive(&p), cells(&[(1, 7), (2, 7), (2, 6)]));
        assert_eq!(dinv_fast(&p), cells(&[(1, 7), (2, 7), (2, 6)]));
        assert_eq!(skips_cells(&p), cells(&[(1, 6)]));
        assert_eq!(
            stat_triple(&p),
            StatTriple {
                area: 5,
                dinv: 3,
                skips: 1
            }
        );
    }

    #[test]
    fn skip_cell_ranks_in_first_example() {
        let p = path("4,7:2,2,0,0,0,0,0");
        let nb = Neighbors::of(&p, Cell::new(1, 6)).unwrap();
        assert_eq!(nb.east, Cell::new(2, 6));
        assert_eq!(nb.south_out, Cell::new(1, 5));
        assert_eq!(gamma(p.pair(), nb.east), Ok(6));
        assert_eq!(gamma(p.pair(), nb.south_out), Ok(9));
        assert!(!is_dinv_fast(&p, Cell::new(1, 6)));
    }

    #[test]
    fn five_seven_worked_example() {
        let p = path("5,7:2,1,1,1,1,0,0");
        let pair = p.pair();
        let nb = Neighbors::of(&p, Cell::new(1, 7)).unwrap();
        assert_eq!(gamma(pair, nb.east), Ok(16));
        assert_eq!(gamma(pair, nb.south_out), Ok(-2));
        assert_eq!(gamma(pair, nb.south), Ok(3));
        assert_eq!(gamma(pair, nb.east_out), Ok(9));
        assert!(!dinv_fast(&p).contains(&Cell::new(1, 7)));
        assert!(!dinv_naive(&p).contains(&Cell::new(1, 7)));
        assert!(skips_cells(&p).contains(&Cell::new(1, 7)));
    }

    #[test]
    fn skips_of_rank_word_example_path() {
        // highlights {3,8,9,13,16,18,23} of the (5,7)-word
        let p = path("5,7:3,1,1,1,1,0,0");
        assert_eq!(skips_cells(&p), cells(&[(2, 7), (1, 6), (1, 5)]));
        assert_eq!(
            stat_triple(&p),
            StatTriple {
                area: 5,
                dinv: 4,
                skips: 3
            }
        );
    }

    #[test]
    fn extreme_paths() {
        let pair = CoprimePair::new(3, 5).unwrap();
        let empty = DyckPath::empty(pair);
        assert!(dinv_naive(&empty).is_empty());
        assert!(skips_cells(&empty).is_empty());
        assert_eq!(area_cells(&empty).len(), 4);
        assert_eq!(
            stat_triple(&empty),
            StatTriple {
                area: 4,
                dinv: 0,
                skips: 0
            }
        );
        let full = DyckPath::full(pair);
        assert!(area_cells(&full).is_empty());
        let st = stat_triple(&full);
        assert_eq!((st.area, st.dinv + st.skips), (0, 4));
    }

    #[test]
    fn engines_agree_and_partition_is_exact() {
        for (m, n) in [(2, 5), (3, 7), (4, 9), (5, 6), (7, 5), (6, 7)] {
            let pair = CoprimePair::new(m, n).unwrap();
            let positive: BTreeSet<Cell> = RankDiagram::new(pair)
                .positive_cells()
                .map(|(c, _)| c)
                .collect();
            for p in enumerate_paths(pair) {
                assert_eq!(dinv_fast(&p), dinv_naive(&p), "{p}");
                let part = CellPartition::of(&p);
                assert!(part.area_cells.is_disjoint(&part.dinv_cells));
                assert!(part.area_cells.is_disjoint(&part.skips_cells));
                assert!(part.dinv_cells.is_disjoint(&part.skips_cells));
                let union: BTreeSet<Cell> = part
                    .area_cells
                    .iter()
                    .chain(&part.dinv_cells)
                    .chain(&part.skips_cells)
                    .copied()
                    .collect();
                assert_eq!(union, positive);
                assert!(part.area_cells.iter().all(|&c| !p.is_above(c)));
                assert_eq!(part.stats(), stat_triple(&p));
                assert_eq!(stat_triple(&p).total() as usize, pair.positive_count());
            }
        }
    }

    #[test]
    fn right_column_cells_are_dinv() {
        for (m, n) in [(3, 8), (4, 7), (5, 9)] {
            let pair = CoprimePair::new(m, n).unwrap();
            for p in enumerate_paths(pair) {
                let dinv = dinv_fast(&p);
                for c in p.above_cells().filter(|c| c.u == m - 1) {
                    assert!(dinv.contains(&c), "{p} {c}");
                }
            }
        }
    }

    #[test]
    fn rank_comparison_one_way_exclusion() {
        // A below-path rank in the row above an above-path rank in the column,
        // or the mirrored situation, rules the cell out of dinv.
        let pair = CoprimePair::new(5, 8).unwrap();
        for p in enumerate_paths(pair) {
            let dinv = dinv_fast(&p);
            for cell in p.above_cells() {
                let row: Vec<(i64, bool)> = (1..=pair.m())
                    .map(|u| (pair.rank_of(u, cell.v), p.is_above(Cell::new(u, cell.v))))
                    .collect();
                let col: Vec<(i64, bool)> = (1..=pair.n())
                    .map(|v| (pair.rank_of(cell.u, v), p.is_above(Cell::new(cell.u, v))))
                    .collect();
                let excluded = row.iter().any(|&(a, a_above)| {
                    col.iter().any(|&(b, b_above)| {
                        (!a_above && b_above && b < a) || (a_above && !b_above && a < b)
                    })
                });
                if excluded {
                    assert!(!dinv.contains(&cell));
                }
            }
        }
    }
}
