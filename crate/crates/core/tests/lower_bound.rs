use blowup_core::constructions::edge_blowup;
use blowup_core::decomposition::blowup_construction;
use blowup_core::formulas::{ex_blowup_formula, BlowupKind};
use blowup_core::oracle::{exact_ex, verify_free};
use blowup_core::GraphFamily;

fn catalogue() -> Vec<(BlowupKind, usize)> {
    use BlowupKind::*;
    vec![
        (Matching { t: 2 }, 2),
        (Matching { t: 3 }, 3),
        (Star { t: 2 }, 2),
        (Star { t: 3 }, 3),
        (Star { t: 4 }, 2),
        (Path { t: 3 }, 3),
        (Path { t: 4 }, 3),
        (Path { t: 5 }, 4),
        (Path { t: 6 }, 3),
        (Cycle { t: 4 }, 3),
        (Cycle { t: 6 }, 3),
        (Cycle { t: 5 }, 4),
        (Cycle { t: 7 }, 4),
        (Clique { t: 3 }, 4),
        (Clique { t: 4 }, 5),
    ]
}

#[test]
fn size_matches_the_formula() {
    for (kind, p) in catalogue() {
        let base = kind.base_graph().unwrap();
        let lo = edge_blowup(&base, p).unwrap().order();
        // Small n can leave the largest class too narrow for the witness.
        assert!(blowup_construction(&base, p, lo + 20).is_ok(), "{kind} p={p}");
        for n in lo..=lo + 20 {
            let Ok(g) = blowup_construction(&base, p, n) else { continue };
            assert_eq!(g.order(), n);
            assert_eq!(g.size() as u64, ex_blowup_formula(kind, n, p).unwrap().value, "{kind} p={p} n={n}");
        }
    }
}

#[test]
fn small_constructions_are_free() {
    use BlowupKind::*;
    for (kind, p, extra) in [
        (Matching { t: 2 }, 2, 4),
        (Star { t: 2 }, 2, 4),
        (Star { t: 3 }, 2, 5),
        (Path { t: 3 }, 3, 4),
        (Path { t: 4 }, 3, 2),
        (Cycle { t: 4 }, 3, 2),
        (Clique { t: 3 }, 4, 2),
    ] {
        let base = kind.base_graph().unwrap();
        let pattern = edge_blowup(&base, p).unwrap();
        let family: GraphFamily = [pattern.clone()].into_iter().collect();
        let mut checked = 0;
        for n in pattern.order()..=pattern.order() + extra {
            let Ok(g) = blowup_construction(&base, p, n) else { continue };
            checked += 1;
            assert!(verify_free(&g, &family).free, "{kind} p={p} n={n}");
        }
        assert!(checked > 0, "{kind} p={p}");
    }
}

#[test]
fn construction_is_extremal_where_the_oracle_reaches() {
    // 2K3 at n = 9 and the bowtie at n = 9: construction size equals exact ex.
    for (kind, n) in [(BlowupKind::Matching { t: 2 }, 9), (BlowupKind::Star { t: 2 }, 9)] {
        let base = kind.base_graph().unwrap();
        let pattern = edge_blowup(&base, 2).unwrap();
        let ex = exact_ex(n, &[pattern].into_iter().collect()).unwrap();
        assert_eq!(blowup_construction(&base, 2, n).unwrap().size() as u64, ex.value);
    }
}
