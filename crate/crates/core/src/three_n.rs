//! The `m = 3` case: Dyck triples, the rank word construction algorithm, the
//! Schur expansion of `W_{3,n}` and the bijection exchanging area and dinv.
//!
//! For `m = 3` a rank word has two colors. The largest `⌈n/3⌉` letters have
//! color 1 and below them the colors alternate. A `(3,n)`-path is determined by
//! its `(area, dinv, skips)` triple, and every triple `(a,d,s)` with
//! `s <= min(a,d)` and `3 ∤ a+d+s+1` occurs for `n = a+d+s+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Cell, CoprimePair, DyckPath};
use crate::polynomial::{schur_two_var, BqtPolynomial, Exponents};
use crate::rankword::{word_letters, RankWord};
use crate::statistics::{is_dinv_fast, stat_triple};

/// Non-negative `(a, d, s)` with `s <= min(a, d)` and `3 ∤ a+d+s+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct DyckTriple {
    a: u32,
    d: u32,
    s: u32,
}

#[derive(Deserialize)]
struct RawTriple {
    a: u32,
    d: u32,
    s: u32,
}

impl TryFrom<RawTriple> for DyckTriple {
    type Error = Error;

    fn try_from(r: RawTriple) -> Result<Self> {
        DyckTriple::new(r.a, r.d, r.s)
    }
}

impl DyckTriple {
    pub fn new(a: u32, d: u32, s: u32) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidTriple { a, d, s, reason });
        if s > a.min(d) {
            return invalid("s exceeds min(a, d)");
        }
        let n = a
            .checked_add(d)
            .and_then(|x| x.checked_add(s))
            .and_then(|x| x.checked_add(1));
        match n {
            None => invalid("a+d+s+1 overflows"),
            Some(n) if n % 3 == 0 => invalid("a+d+s+1 is divisible by 3"),
            Some(_) => Ok(DyckTriple { a, d, s }),
        }
    }

    pub fn area(&self) -> u32 {
        self.a
    }

    pub fn dinv(&self) -> u32 {
        self.d
    }

    pub fn skips(&self) -> u32 {
        self.s
    }

    /// `n = a + d + s + 1`.
    pub fn n(&self) -> u32 {
        self.a + self.d + self.s + 1
    }

    /// The triple with area and dinv exchanged.
    pub fn swapped(&self) -> Self {
        DyckTriple {
            a: self.d,
            d: self.a,
            s: self.s,
        }
    }

    /// Every Dyck triple with the given `n`, ordered by `(s, d)`.
    pub fn all_for(n: u32) -> Vec<DyckTriple> {
        if n == 0 || n.is_multiple_of(3) {
            return Vec::new();
        }
        let total = n - 1;
        let mut out = Vec::new();
        for s in 0..=total / 3 {
            for d in s..=total - 2 * s {
                let a = total - s - d;
                if let Ok(t) = DyckTriple::new(a, d, s) {
                    out.push(t);
                }
            }
        }
        out
    }
}

impl fmt::Display for DyckTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.d, self.s)
    }
}

/// `a,d,s`
impl FromStr for DyckTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match parts[..] {
            [a, d, s] => DyckTriple::new(a, d, s),
            _ => Err(Error::Parse(format!("expected a,d,s, got {s:?}"))),
        }
    }
}

fn require_three(pair: CoprimePair) -> Result<()> {
    if pair.m() == 3 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "requires m = 3, got m = {}",
            pair.m()
        )))
    }
}

/// Skips of a `(3,n)`-word: unhighlighted letters whose left neighbour is highlighted.
pub fn skips_adjacent(word: &RankWord) -> Result<u32> {
    require_three(word.pair())?;
    let mask = word.highlight_mask();
    Ok(mask.windows(2).filter(|w| w[0] && !w[1]).count() as u32)
}

/// Which of the two possible shapes a first-column skip cell of a `(3,n)`-path has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FirstColumnSkip {
    /// `arm = 1` and `3(leg+1) < n`.
    Arm1ShortLeg,
    /// `arm = 0` and `n < 3 leg`.
    Arm0LongLeg,
}

pub fn classify_first_column(path: &DyckPath, cell: Cell) -> Result<FirstColumnSkip> {
    let pair = path.pair();
    require_three(pair)?;
    pair.check(cell)?;
    if cell.u != 1 || !path.is_above(cell) || is_dinv_fast(path, cell) {
        return Err(Error::Domain(format!(
            "{cell} is not a first-column skip cell of {path}"
        )));
    }
    let (arm, leg, n) = (path.arm(cell)?, path.leg(cell)?, pair.n());
    let short = 3 * (leg + 1) < n;
    let long = n < 3 * leg;
    match (arm, short, long) {
        (1, true, _) => Ok(FirstColumnSkip::Arm1ShortLeg),
        (0, _, true) => Ok(FirstColumnSkip::Arm0LongLeg),
        _ => Err(Error::Invariant(format!(
            "skip cell {cell} of {path} has arm {arm}, leg {leg} and fits neither class"
        ))),
    }
}

/// Builds the `(3,n)`-rank word of a Dyck triple, `n = a+d+s+1`.
///
/// Highlights the largest `d` letters, then `s` times: take the smallest
/// unhighlighted letter `r_c` whose right neighbour is highlighted and
/// highlight the largest letter below `r` whose color differs from `c`.
pub fn construct_word(triple: DyckTriple) -> Result<RankWord> {
    let n = triple.n();
    let pair = CoprimePair::new(3, n)?;
    let letters = word_letters(pair);
    let len = letters.len();
    let (a, d, s) = (triple.a as usize, triple.d as usize, triple.s as usize);
    debug_assert_eq!(len, a + d + s);

    let top = n.div_ceil(3) as usize;
    if s > 0 && d < top && s - 1 + top > a + d {
        return Err(Error::Invariant(format!(
            "triple {triple} has too few letters to skip"
        )));
    }

    let mut hl = vec![false; len];
    hl[len - d..].iter_mut().for_each(|h| *h = true);
    for _ in 0..s {
        let i = (0..len.saturating_sub(1))
            .find(|&i| !hl[i] && hl[i + 1])
            .ok_or_else(|| Error::Invariant(format!("no letter to skip from for {triple}")))?;
        let c = letters[i].color;
        let j = (0..i)
            .rev()
            .find(|&j| letters[j].color != c)
            .ok_or_else(|| Error::Invariant(format!("no letter to highlight for {triple}")))?;
        if hl[j] {
            return Err(Error::Invariant(format!(
                "letter {} highlighted twice",
                letters[j]
            )));
        }
        hl[j] = true;
    }
    RankWord::new(pair, hl).map_err(|e| Error::Invariant(format!("{triple}: {e}")))
}

/// The `(area, dinv, skips)` of a `(3,n)`-path as a Dyck triple.
pub fn triple_of_path(path: &DyckPath) -> Result<DyckTriple> {
    require_three(path.pair())?;
    let st = stat_triple(path);
    DyckTriple::new(st.area, st.dinv, st.skips)
        .map_err(|e| Error::Invariant(format!("statistics of {path}: {e}")))
}

/// `Σ_{i=0}^{⌊n/3⌋} b^i s_{n-1-2i, i}(q,t)`.
pub fn schur_expansion(n: u32) -> Result<BqtPolynomial> {
    if n == 0 || n.is_multiple_of(3) {
        return Err(Error::Domain(format!(
            "n must be positive and not divisible by 3, got {n}"
        )));
    }
    let mut out = BqtPolynomial::zero();
    for i in 0..=n / 3 {
        let b_power = BqtPolynomial::monomial(Exponents::new(i, 0, 0), 1);
        out = out.checked_add(&b_power.checked_mul(&schur_two_var(n - 1 - 2 * i, i)?)?)?;
    }
    Ok(out)
}

/// The `(3,n)`-path whose triple is that of `path` with area and dinv exchanged.
pub fn swap_bijection(path: &DyckPath) -> Result<DyckPath> {
    let triple = triple_of_path(path)?;
    Ok(construct_word(triple.swapped())?.to_path())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_paths;
    use crate::rankword::build_word;
    use crate::statistics::{skips_cells, StatTriple};

    fn pair(n: u32) -> CoprimePair {
        CoprimePair::new(3, n).unwrap()
    }

    fn t(a: u32, d: u32, s: u32) -> DyckTriple {
        DyckTriple::new(a, d, s).unwrap()
    }

    #[test]
    fn triple_validation() {
        assert!(DyckTriple::new(3, 2, 2).is_ok());
        assert!(matches!(
            DyckTriple::new(1, 1, 2),
            Err(Error::InvalidTriple { .. })
        ));
        // n = 3
        assert!(matches!(
            DyckTriple::new(1, 1, 0),
            Err(Error::InvalidTriple { .. })
        ));
        assert_eq!("3,2,2".parse::<DyckTriple>(), Ok(t(3, 2, 2)));
        assert!("3,2".parse::<DyckTriple>().is_err());
        assert_eq!(DyckTriple::all_for(3), vec![]);
        assert_eq!(DyckTriple::all_for(1), vec![t(0, 0, 0)]);
    }

    #[test]
    fn worked_constructions() {
        let w = construct_word(t(3, 2, 2)).unwrap();
        assert_eq!(w.pair(), pair(8));
        assert_eq!(w.highlighted_ranks(), [2, 5, 10, 13].into_iter().collect());
        assert_eq!(w.to_string(), "1_1 [2_2] 4_1 [5_2] 7_1 [10_1] [13_1]");
        let w = construct_word(t(5, 1, 1)).unwrap();
        assert_eq!(w.highlighted_ranks(), [5, 13].into_iter().collect());
        let w = construct_word(t(0, 0, 0)).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn construction_statistics() {
        let w = construct_word(t(3, 2, 2)).unwrap();
        assert_eq!(
            w.stats(),
            StatTriple {
                area: 3,
                dinv: 2,
                skips: 2
            }
        );
        assert_eq!(triple_of_path(&w.to_path()), Ok(t(3, 2, 2)));
    }

    #[test]
    fn adjacent_skips() {
        let w = RankWord::from_ranks(pair(8), &[2, 5, 10, 13]).unwrap();
        assert_eq!(skips_adjacent(&w), Ok(2));
        assert_eq!(skips_adjacent(&build_word(pair(8))), Ok(0));
        let w = RankWord::from_ranks(pair(5), &[7, 4]).unwrap();
        assert_eq!(skips_adjacent(&w), Ok(0));
        let four_seven = build_word(CoprimePair::new(4, 7).unwrap());
        assert!(matches!(skips_adjacent(&four_seven), Err(Error::Domain(_))));
    }

    #[test]
    fn three_five_paths() {
        let empty = DyckPath::empty(pair(5));
        assert_eq!(triple_of_path(&empty), Ok(t(4, 0, 0)));
        for p in enumerate_paths(pair(5)) {
            for cell in skips_cells(&p) {
                assert_eq!(cell.u, 1);
                classify_first_column(&p, cell).unwrap();
            }
        }
    }

    #[test]
    fn classification_cases() {
        // (3,7): first column holds 4 positive ranks, second column 2
        let deep = "3,7:1,1,1,1,0,0,0".parse::<DyckPath>().unwrap();
        let skips = skips_cells(&deep);
        assert!(!skips.is_empty());
        for &c in &skips {
            assert_eq!(
                classify_first_column(&deep, c),
                Ok(FirstColumnSkip::Arm0LongLeg)
            );
        }
        let shallow = "3,7:2,2,0,0,0,0,0".parse::<DyckPath>().unwrap();
        let skips = skips_cells(&shallow);
        assert!(!skips.is_empty());
        for &c in &skips {
            assert_eq!(
                classify_first_column(&shallow, c),
                Ok(FirstColumnSkip::Arm1ShortLeg)
            );
        }
        // dinv cell and below-path cell are rejected
        assert!(matches!(
            classify_first_column(&deep, Cell::new(1, 4)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            classify_first_column(&deep, Cell::new(1, 2)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_expansion(5).unwrap().to_string(),
            "b*q^2*t + b*q*t^2 + q^4 + q^3*t + q^2*t^2 + q*t^3 + t^4"
        );
        assert_eq!(schur_expansion(2).unwrap().to_string(), "q + t");
        assert_eq!(schur_expansion(1).unwrap(), BqtPolynomial::one());
        assert!(matches!(schur_expansion(6), Err(Error::Domain(_))));
        assert!(schur_expansion(0).is_err());
    }

    #[test]
    fn swap_examples() {
        let p = construct_word(t(3, 2, 2)).unwrap().to_path();
        let image = swap_bijection(&p).unwrap();
        assert_eq!(triple_of_path(&image), Ok(t(2, 3, 2)));
        assert_eq!(swap_bijection(&image), Ok(p));
        let p47 = "4,7:2,2,0,0,0,0,0".parse::<DyckPath>().unwrap();
        assert!(matches!(swap_bijection(&p47), Err(Error::Domain(_))));
    }

    #[test]
    fn construction_inverts_statistics() {
        for n in (1..=16).filter(|n| n % 3 != 0) {
            for p in enumerate_paths(pair(n)) {
                let tr = triple_of_path(&p).unwrap();
                assert_eq!(construct_word(tr).unwrap(), RankWord::from_path(&p), "{p}");
            }
            assert_eq!(
                DyckTriple::all_for(n).len() as u128,
                crate::lattice::rational_catalan(pair(n)).unwrap()
            );
        }
    }
}
