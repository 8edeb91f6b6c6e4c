use std::sync::OnceLock;

use birack::biracks::{braid_check, classify, inverse_solution, Solution};
use birack::coloring::{closure_colorings, BraidWord};
use birack::enveloping::{abelianization, enveloping_presentation};
use birack::io::TableFile;
use birack::search::{enumerate_solutions, relabel_solution, Kind, Method, SearchSpec};
use birack::tables::Permutation;
use birack::twisting::{is_automorphism, twist_first};
use proptest::prelude::*;

fn biracks3() -> &'static [Solution] {
    static CELL: OnceLock<Vec<Solution>> = OnceLock::new();
    CELL.get_or_init(|| enumerate_solutions(&SearchSpec::new(3, Kind::Birack), Method::Structured).unwrap())
}

fn birack() -> impl Strategy<Value = Solution> {
    (0..66usize).prop_map(|i| biracks3()[i].clone())
}

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn word(strands: usize) -> impl Strategy<Value = BraidWord> {
    let letter = (1..strands as i32, any::<bool>()).prop_map(|(i, neg)| if neg { -i } else { i });
    prop::collection::vec(letter, 0..8).prop_map(move |ls| BraidWord::new(strands, ls).unwrap())
}

fn count(s: &Solution, w: &BraidWord) -> u64 {
    closure_colorings(s, w).unwrap().count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabeling_preserves_classification(s in birack(), p in perm(3)) {
        let r = relabel_solution(&s, &p);
        prop_assert!(braid_check(&r));
        let (a, b) = (classify(&s), classify(&r));
        prop_assert_eq!((a.left, a.right, a.bijective, a.involutive, a.biquandle), (b.left, b.right, b.bijective, b.involutive, b.biquandle));
    }

    #[test]
    fn relabeling_preserves_abelianization(s in birack(), p in perm(3)) {
        let before = abelianization(&enveloping_presentation(&s).unwrap());
        let after = abelianization(&enveloping_presentation(&relabel_solution(&s, &p)).unwrap());
        prop_assert_eq!(before, after);
    }

    #[test]
    fn inverse_composes_to_identity(n in 1usize..7, a in 0usize..7, b in 0usize..7) {
        let s = Solution::permutation(n, a % n, b % n);
        let inv = inverse_solution(&s).unwrap();
        prop_assert!(s.pair_map().compose(&inv.pair_map()).is_identity());
        prop_assert!(inv.pair_map().compose(&s.pair_map()).is_identity());
    }

    #[test]
    fn first_twists_stay_solutions(s in birack(), k in perm(3)) {
        match twist_first(&s, &k) {
            Ok(c) => prop_assert!(braid_check(&c.twisted)),
            Err(_) => prop_assert!(!is_automorphism(&k, &s)),
        }
    }

    #[test]
    fn conjugation_preserves_colorings(s in birack(), w in word(3), c in word(3)) {
        let conj = c.concat(&w).unwrap().concat(&c.inverse()).unwrap();
        prop_assert_eq!(count(&s, &w), count(&s, &conj));
    }

    #[test]
    fn cancelling_pairs_preserve_colorings(s in birack(), w in word(3), c in word(3)) {
        let padded = w.concat(&c).unwrap().concat(&c.inverse()).unwrap();
        prop_assert_eq!(count(&s, &w), count(&s, &padded));
    }

    #[test]
    fn parse_inverts_emit(s in birack(), p in perm(3)) {
        for file in [TableFile::Solution(s), TableFile::Permutation(p)] {
            prop_assert_eq!(TableFile::parse(&file.emit()).unwrap(), file);
        }
    }
}
