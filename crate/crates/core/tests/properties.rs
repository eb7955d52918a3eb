use proptest::prelude::*;
use ratcat::statistics::{dinv_fast, dinv_naive, skips_cells};
use ratcat::three_n::{construct_word, swap_bijection, triple_of_path};
use ratcat::{
    gamma, stat_triple, BqtPolynomial, CellPartition, CoprimePair, DyckPath, DyckTriple, RankWord,
};

fn coprime() -> impl Strategy<Value = CoprimePair> {
    (1u32..=14, 1u32..=14).prop_filter_map("coprime", |(m, n)| CoprimePair::new(m, n).ok())
}

/// A random path built row by row from the top, each row between the row
/// below's length and its capacity.
fn path_in(pair: CoprimePair) -> impl Strategy<Value = DyckPath> {
    let caps = pair.capacities();
    prop::collection::vec(0.0f64..1.0, caps.len()).prop_map(move |fracs| {
        let mut shape = vec![0u32; caps.len()];
        let mut floor = 0u32;
        for i in (0..caps.len()).rev() {
            let cap = caps[i].max(floor);
            shape[i] = floor + ((cap - floor + 1) as f64 * fracs[i]) as u32 % (cap - floor + 1);
            floor = shape[i];
        }
        DyckPath::new(pair, shape).expect("generated shape is valid")
    })
}

fn any_path() -> impl Strategy<Value = DyckPath> {
    coprime().prop_flat_map(path_in)
}

fn three_n_path() -> impl Strategy<Value = DyckPath> {
    (1u32..=40)
        .prop_filter("3 does not divide n", |n| n % 3 != 0)
        .prop_flat_map(|n| path_in(CoprimePair::new(3, n).unwrap()))
}

fn triple() -> impl Strategy<Value = DyckTriple> {
    (0u32..25, 0u32..25, 0u32..10)
        .prop_filter_map("valid triple", |(a, d, s)| DyckTriple::new(a, d, s).ok())
}

proptest! {
    #[test]
    fn ranks_are_nonzero_and_centrally_symmetric(pair in coprime()) {
        for u in 1..=pair.m() {
            for v in 1..=pair.n() {
                let g = gamma(pair, (u, v).into()).unwrap();
                prop_assert_ne!(g, 0);
                let mirrored = gamma(pair, (pair.m() + 1 - u, pair.n() + 1 - v).into()).unwrap();
                prop_assert_eq!(g + mirrored, -((pair.m() + pair.n()) as i64));
            }
        }
    }

    #[test]
    fn statistics_agree_across_representations(p in any_path()) {
        prop_assert_eq!(dinv_fast(&p), dinv_naive(&p));
        let w = RankWord::from_path(&p);
        prop_assert_eq!(w.to_path(), p.clone());
        prop_assert_eq!(w.stats(), stat_triple(&p));
        prop_assert_eq!(w.skip_classes().len(), skips_cells(&p).len());
        let pair = p.pair();
        prop_assert_eq!(CellPartition::of(&p).stats().total() as usize, pair.positive_count());
    }

    #[test]
    fn psi_maps_classes_onto_skip_cells(p in any_path()) {
        let w = RankWord::from_path(&p);
        let pair = p.pair();
        let images: Vec<Vec<_>> = w
            .skip_classes()
            .iter()
            .map(|class| class.iter().map(|sp| w.psi(sp).unwrap().cell(pair)).collect())
            .collect();
        for cells in &images {
            prop_assert!(cells.windows(2).all(|x| x[0] == x[1]));
        }
        let mut firsts: Vec<_> = images.iter().map(|c| c[0]).collect();
        firsts.sort();
        let skips: Vec<_> = skips_cells(&p).into_iter().collect();
        prop_assert_eq!(firsts, skips);
    }

    #[test]
    fn text_and_json_round_trip(p in any_path()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<DyckPath>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<DyckPath>(&json).unwrap(), p.clone());

        let w = RankWord::from_path(&p);
        prop_assert_eq!(RankWord::parse(p.pair(), &w.to_string()).unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<RankWord>(&json).unwrap(), w);
    }

    #[test]
    fn swap_exchanges_area_and_dinv(p in three_n_path()) {
        let img = swap_bijection(&p).unwrap();
        let (a, b) = (stat_triple(&p), stat_triple(&img));
        prop_assert_eq!((a.area, a.dinv, a.skips), (b.dinv, b.area, b.skips));
        prop_assert_eq!(swap_bijection(&img).unwrap(), p.clone());
        prop_assert!(a.skips <= a.area.min(a.dinv));
        prop_assert!(a.skips <= p.pair().n() / 3);
    }

    #[test]
    fn construction_inverts_triple_of_path(t in triple()) {
        let w = construct_word(t).unwrap();
        prop_assert_eq!(w.pair().n(), t.n());
        prop_assert_eq!(triple_of_path(&w.to_path()).unwrap(), t);
        let text = t.to_string();
        prop_assert_eq!(text.parse::<DyckTriple>().unwrap(), t);
        let json = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(serde_json::from_str::<DyckTriple>(&json).unwrap(), t);
    }

    #[test]
    fn catalan_polynomials_round_trip(pair in coprime().prop_filter("small", |p| p.m() * p.n() <= 60)) {
        let w = ratcat::genfun_w(pair).unwrap();
        prop_assert_eq!(w.to_string().parse::<BqtPolynomial>().unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<BqtPolynomial>(&json).unwrap(), w.clone());
        prop_assert_eq!(w.coefficient_sum().unwrap() as u128, ratcat::rational_catalan(pair).unwrap());
    }
}

#[test]
fn invalid_triple_json_is_rejected() {
    assert!(serde_json::from_str::<DyckTriple>(r#"{"a":1,"d":1,"s":2}"#).is_err());
    assert!(serde_json::from_str::<DyckPath>(r#"{"m":4,"n":6,"shape":[0,0,0,0,0,0]}"#).is_err());
}
