use std::collections::BTreeSet;

use proptest::prelude::*;

use gallai::format::{decode_str, encode_to_string};
use gallai::subset::{binomial, Subsets};
use gallai::verify::{
    colour_set_family, is_connected, is_connected_colouring, multicoloured_family, tricoloured_count,
    ConnectivityNotion, ScanMode,
};
use gallai::{Colour, EdgeColouring, Hypergraph};

fn colouring(n: std::ops::RangeInclusive<usize>, r: usize, k: usize) -> impl Strategy<Value = EdgeColouring> {
    n.prop_flat_map(move |n| {
        prop::collection::vec(1..=k as Colour, binomial(n, r) as usize)
            .prop_filter_map("palette not used", move |cs| EdgeColouring::from_ranked(n, r, k, cs).ok())
    })
}

fn with_perms(c: EdgeColouring) -> impl Strategy<Value = (EdgeColouring, Vec<Colour>, Vec<usize>)> {
    let colours: Vec<Colour> = (1..=c.k() as Colour).collect();
    let vertices: Vec<usize> = (0..c.n()).collect();
    (Just(c), Just(colours).prop_shuffle(), Just(vertices).prop_shuffle())
}

fn triangles(c: &EdgeColouring) -> BTreeSet<Vec<Colour>> {
    Subsets::new(c.n(), 3)
        .filter_map(|t| {
            let mut cols = vec![
                c.colour_sorted(&[t[0], t[1]]),
                c.colour_sorted(&[t[0], t[2]]),
                c.colour_sorted(&[t[1], t[2]]),
            ];
            cols.sort_unstable();
            cols.dedup();
            (cols.len() == 3).then_some(cols)
        })
        .collect()
}

fn covers(h: &Hypergraph, s: usize) -> bool {
    Subsets::new(h.n(), s).all(|t| h.edges().any(|e| t.iter().all(|v| e.contains(&(*v as u32)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn family_is_colour_equivariant((c, perm, _) in colouring(5..=8, 2, 4).prop_flat_map(with_perms)) {
        let f = colour_set_family(&c).unwrap();
        let g = colour_set_family(&c.permute_colours(&perm).unwrap()).unwrap();
        prop_assert_eq!(g, f.mapped(&perm));
    }

    #[test]
    fn family_and_connectivity_ignore_vertex_labels((c, _, sigma) in colouring(5..=8, 2, 3).prop_flat_map(with_perms)) {
        let moved = c.permute_vertices(&sigma).unwrap();
        prop_assert_eq!(colour_set_family(&c).unwrap(), colour_set_family(&moved).unwrap());
        prop_assert_eq!(
            is_connected_colouring(&c, ConnectivityNotion::Graph).unwrap(),
            is_connected_colouring(&moved, ConnectivityNotion::Graph).unwrap()
        );
    }

    #[test]
    fn family_matches_triple_loop(c in colouring(4..=9, 2, 5)) {
        let lib: BTreeSet<Vec<Colour>> = colour_set_family(&c).unwrap().to_vecs().into_iter().collect();
        prop_assert_eq!(lib, triangles(&c));
    }

    #[test]
    fn connected_three_colourings_have_a_rainbow_triangle(c in colouring(4..=7, 2, 3)) {
        if is_connected_colouring(&c, ConnectivityNotion::Graph).unwrap() {
            prop_assert!(!triangles(&c).is_empty());
        }
    }

    #[test]
    fn strong_implies_covering_and_pointwise(c in colouring(5..=8, 3, 2)) {
        for colour in 1..=c.k() as Colour {
            let h = c.colour_class(colour).unwrap();
            let strong = is_connected(&h, ConnectivityNotion::Strong).unwrap().ok();
            let covering = is_connected(&h, ConnectivityNotion::Covering).unwrap().ok();
            let pointwise = is_connected(&h, ConnectivityNotion::Pointwise).unwrap().ok();
            prop_assert_eq!(covering, covers(&h, 2));
            prop_assert!(!strong || covering);
            prop_assert!(!strong || pointwise);
        }
    }

    #[test]
    fn hypergraph_counts_ignore_vertex_labels((c, _, sigma) in colouring(5..=7, 3, 3).prop_flat_map(with_perms)) {
        let moved = c.permute_vertices(&sigma).unwrap();
        let a = multicoloured_family(&c, 4, ScanMode::Full).unwrap();
        let b = multicoloured_family(&moved, 4, ScanMode::Full).unwrap();
        prop_assert_eq!(a.count, b.count);
        prop_assert_eq!(a.family, b.family);
        prop_assert_eq!(
            tricoloured_count(&c, 3, ScanMode::Full).unwrap().at_least,
            tricoloured_count(&moved, 3, ScanMode::Full).unwrap().at_least
        );
    }

    #[test]
    fn text_format_round_trips(c in colouring(5..=7, 3, 3)) {
        prop_assert_eq!(decode_str(&encode_to_string(&c)).unwrap(), c);
    }
}
