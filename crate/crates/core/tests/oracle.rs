use obelisk::graph::{canonical_form, enumerate_connected, is_isomorphic, Arc, OrientedGraph};
use obelisk::layout::verify;
use obelisk::oracle::{mine_critical, obt, OracleError};

fn g(arcs: &[(u32, u32)]) -> OrientedGraph {
    OrientedGraph::from_arcs(arcs.iter().copied()).unwrap()
}

fn dicycle(n: u32) -> OrientedGraph {
    g(&(1..=n).map(|i| (i, i % n + 1)).collect::<Vec<_>>())
}

fn same_classes(found: &[OrientedGraph], expected: &[OrientedGraph]) -> bool {
    found.len() == expected.len() && expected.iter().all(|e| found.iter().any(|f| is_isomorphic(e, f)))
}

#[test]
fn one_page_critical_up_to_five() {
    let s_plus = g(&[(2, 1), (2, 3)]);
    let s_minus = g(&[(1, 2), (3, 2)]);
    let five = mine_critical(5, 1).unwrap();
    assert!(same_classes(&five, &[s_plus.clone(), s_minus.clone(), dicycle(3), dicycle(4), dicycle(5)]));
    let four = mine_critical(4, 1).unwrap();
    assert!(same_classes(&four, &[s_plus, s_minus, dicycle(3), dicycle(4)]));
}

#[test]
fn two_page_critical_up_to_three() {
    // no connected graph on three vertices needs two pages
    assert!(mine_critical(3, 2).unwrap().is_empty());
}

#[test]
fn mining_guards() {
    assert!(matches!(mine_critical(7, 2), Err(OracleError::SizeGuard { .. })));
    assert!(matches!(mine_critical(8, 1), Err(OracleError::SizeGuard { .. })));
}

#[test]
fn global_properties_up_to_five() {
    for n in 1..=5 {
        for h in enumerate_connected(n).unwrap() {
            let r = obt(&h).unwrap();
            assert!(verify(&h, &r.witness).is_valid());
            assert_eq!(r.witness.pages, r.thickness);
            assert_eq!(obt(&h.converse()).unwrap().thickness, r.thickness);
            if !h.is_forest() {
                assert!(r.thickness >= 1);
            }
            for &a in h.arcs() {
                let less = obt(&h.delete_arc(a).unwrap()).unwrap().thickness;
                assert!(less <= r.thickness && less + 1 >= r.thickness, "{a}");
            }
        }
    }
}

#[test]
fn disconnected_graph_is_searched_whole() {
    // a 3-dicycle beside an S+ still fits one page
    let h = g(&[(1, 2), (2, 3), (3, 1), (5, 4), (5, 6)]);
    let r = obt(&h).unwrap();
    assert_eq!(r.thickness, 1);
    assert!(verify(&h, &r.witness).is_valid());
    assert!(canonical_form(&h).labeling.len() == 6);
    assert!(r.witness.placement.contains_key(&Arc::new(5, 4)));
}
