use proptest::prelude::*;

use toricgraph::algebra::{Binomial, Monomial, MonomialOrder};
use toricgraph::catalog;
use toricgraph::chromatic::{chromatic_certificate, cover_monotonicity_check, min_vertex_cover, support_hypergraph};
use toricgraph::coloring::chromatic_number;
use toricgraph::enumerate::connected_graphs_up_to;
use toricgraph::gb::{buchberger, ideal_equal, is_groebner, monomial_ideal_height, normal_form, saturate_variable, BinomialIdeal};
use toricgraph::kmy::{deletion_identity_check, is_degenerate_toric, kmy_decompose_toric};
use toricgraph::lattice::incidence_matrix;
use toricgraph::toric::{graver_basis, height_toric, initial_ideal_via_groebner, toric_ideal};
use toricgraph::verify::random_lex_orders;
use toricgraph::Graph;

/// A graph on `2..=max_p` vertices; connected graphs get a random spanning
/// tree before the extra edges.
fn graph(max_p: usize, connected: bool) -> impl Strategy<Value = Graph> {
    (2..=max_p).prop_flat_map(move |p| {
        let pairs = p * (p - 1) / 2;
        (Just(p), proptest::collection::vec(any::<bool>(), pairs), proptest::collection::vec(any::<usize>(), p))
            .prop_map(move |(p, keep, parents)| {
                let mut chosen = std::collections::BTreeSet::new();
                if connected {
                    for v in 2..=p {
                        let u = 1 + parents[v - 1] % (v - 1);
                        chosen.insert((u, v));
                    }
                }
                let mut k = 0;
                for u in 1..=p {
                    for v in u + 1..=p {
                        if keep[k] {
                            chosen.insert((u, v));
                        }
                        k += 1;
                    }
                }
                let pairs: Vec<_> = chosen.into_iter().collect();
                Graph::new(p, &pairs).unwrap()
            })
    })
}

fn small_binomial(vars: usize) -> impl Strategy<Value = Option<Binomial>> {
    let mono = proptest::collection::vec(0u32..3, vars).prop_map(Monomial::from_exponents);
    (mono.clone(), mono, any::<bool>()).prop_map(|(a, b, pure)| {
        if pure {
            Binomial::new(a, b)
        } else {
            Some(Binomial::monomial(a))
        }
    })
}

fn binomial_ideal(vars: usize) -> impl Strategy<Value = BinomialIdeal> {
    proptest::collection::vec(small_binomial(vars), 1..5)
        .prop_map(move |gens| BinomialIdeal::new(vars, gens.into_iter().flatten().collect()).unwrap())
}

fn order(vars: usize) -> impl Strategy<Value = MonomialOrder> {
    (Just((0..vars).collect::<Vec<_>>()).prop_shuffle(), 0..3u8).prop_map(move |(perm, kind)| match kind {
        0 => MonomialOrder::Lex(perm),
        1 => MonomialOrder::Grevlex(perm),
        _ => MonomialOrder::y_top(perm[0], MonomialOrder::Grevlex(perm)).unwrap(),
    })
}

fn brute_chi_leq_two(g: &Graph) -> bool {
    let p = g.vertex_count();
    (0u32..1 << p).any(|mask| g.edges().iter().all(|e| (mask >> (e.u - 1) & 1) != (mask >> (e.v - 1) & 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bipartite_iff_two_colourable(g in graph(8, false)) {
        prop_assert_eq!(g.is_bipartite(), brute_chi_leq_two(&g));
        if g.edge_count() > 0 {
            prop_assert_eq!(g.is_bipartite(), chromatic_number(&g) <= 2);
        }
    }

    #[test]
    fn chromatic_number_drops_by_at_most_one(g in graph(8, false)) {
        for e in g.labels() {
            prop_assert!(g.chromatic_drop_check(e).unwrap());
            let smaller = g.delete_edge(e).unwrap();
            prop_assert_eq!(smaller.vertex_count(), g.vertex_count());
            prop_assert_eq!(smaller.edge_count() + 1, g.edge_count());
        }
    }

    #[test]
    fn reduced_bases_are_groebner_and_stable(i in binomial_ideal(4), o in order(4)) {
        let gb = buchberger(&i, &o).unwrap();
        prop_assert!(is_groebner(gb.generators(), &o));
        let leads = gb.leading_terms().unwrap();
        for (k, g) in gb.generators().iter().enumerate() {
            for (j, l) in leads.iter().enumerate() {
                prop_assert!(j == k || g.terms().all(|t| !l.divides(t)), "not autoreduced");
            }
        }
        let again = buchberger(&gb, &o).unwrap();
        prop_assert_eq!(again.generators(), gb.generators());
        for g in i.generators() {
            prop_assert!(normal_form(g, gb.generators(), &o).is_none());
        }
    }

    #[test]
    fn ideal_equality_is_an_equivalence(i in binomial_ideal(4), o in order(4), extra in proptest::collection::vec(0u32..2, 4)) {
        let a = i.clone();
        let b = buchberger(&i, &o).unwrap();
        let mut gens = i.generators().to_vec();
        if let Some(first) = gens.first().cloned() {
            gens.push(first.scaled(&Monomial::from_exponents(extra)));
        }
        gens.reverse();
        let c = BinomialIdeal::new(4, gens).unwrap();
        for (x, y) in [(&a, &a), (&a, &b), (&b, &a), (&b, &c), (&a, &c)] {
            prop_assert!(ideal_equal(x, y).unwrap());
        }
    }

    #[test]
    fn saturation_is_idempotent_and_monotone(i in binomial_ideal(3), x in 0usize..3) {
        let once = saturate_variable(&i, x).unwrap();
        let twice = saturate_variable(&once, x).unwrap();
        prop_assert!(ideal_equal(&once, &twice).unwrap());
        for g in i.generators() {
            prop_assert!(once.contains(g).unwrap());
        }
    }

    #[test]
    fn toric_heights_do_not_depend_on_the_order(g in graph(7, true), seed in any::<u64>()) {
        let i = toric_ideal(&g).unwrap();
        let q = g.edge_count();
        let expected = height_toric(&g).unwrap().formula;
        for o in random_lex_orders(q, 10, seed) {
            let init = initial_ideal_via_groebner(&i, &o).unwrap();
            prop_assert_eq!(monomial_ideal_height(&init), Some(expected));
        }
    }

    #[test]
    fn graver_elements_are_closed_walks(g in graph(6, true)) {
        let m = incidence_matrix(&g);
        for w in graver_basis(&g).unwrap() {
            prop_assert!(m.apply(&w.exponent_vector()).iter().all(|&x| x == 0));
            let minus = w.binomial.minus().unwrap();
            prop_assert!(w.binomial.plus().degree() >= 2 && minus.degree() >= 2);
            prop_assert!(w.binomial.plus().is_coprime(minus));
            prop_assert!(w.multiplicities.iter().all(|&k| k <= 2));
        }
    }

    #[test]
    fn heights_add_over_components(a in graph(5, true), b in graph(5, true)) {
        let sum = height_toric(&a).unwrap().formula + height_toric(&b).unwrap().formula;
        let h = height_toric(&a.disjoint_union(&b)).unwrap();
        prop_assert_eq!((h.formula, h.degeneration), (sum, sum));
    }

    #[test]
    fn kmy_properties(g in graph(6, true)) {
        prop_assume!(g.edge_count() <= 10);
        for e in g.labels() {
            let dec = kmy_decompose_toric(&g, e, None).unwrap();
            prop_assert_eq!(is_degenerate_toric(&g, e).unwrap(), ideal_equal(&dec.c, &dec.n).unwrap());
            prop_assert!(!dec.c_is_unit());
            prop_assert!(deletion_identity_check(&g, e, None).unwrap());
        }
    }

    #[test]
    fn certificates_are_sound(g in graph(7, true), o in (0u64..1000)) {
        let q = g.edge_count();
        let order = random_lex_orders(q, 2, o).pop().unwrap();
        let cert = chromatic_certificate(&g, &order).unwrap();
        prop_assert!(cert.verify());
        prop_assert_eq!(cert.cover.is_empty(), toric_ideal(&g).unwrap().is_zero());
        if cert.cover.is_empty() {
            prop_assert_eq!(cert.bound, 3);
        }
        prop_assert!(cover_monotonicity_check(&g, &cert).unwrap());
    }

    #[test]
    fn minimum_covers_match_brute_force(
        q in 1usize..=16,
        edges in proptest::collection::vec(proptest::collection::vec(0usize..16, 1..4), 0..8),
    ) {
        let gens: Vec<Monomial> = edges
            .iter()
            .map(|e| {
                let powers: Vec<(usize, u32)> = e.iter().map(|&v| (v % q, 1)).collect();
                let mut m = Monomial::one(q);
                for (v, k) in powers {
                    m = m.mul(&Monomial::from_powers(q, &[(v, k)]));
                }
                m
            })
            .collect();
        let h = support_hypergraph(q, &gens);
        let cover = min_vertex_cover(&h).unwrap();
        prop_assert!(h.is_cover(&cover));
        let masks: Vec<u32> = gens.iter().map(|m| m.support_mask() as u32).collect();
        let best = (0u32..1 << q)
            .filter(|s| masks.iter().all(|m| m & s != 0))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap();
        prop_assert_eq!(cover.len(), best);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn heights_agree_on_larger_graphs(g in graph(9, true)) {
        let h = height_toric(&g).unwrap();
        prop_assert_eq!(h.formula, h.degeneration);
    }
}

#[test]
fn bridges_are_the_edges_on_no_cycle() {
    for g in connected_graphs_up_to(6) {
        let cycles = g.simple_cycles().unwrap();
        let bridges = g.bridges();
        for e in g.labels() {
            assert_eq!(bridges.contains(&e), !cycles.iter().any(|c| c.contains(&e)), "{g} e{e}");
        }
    }
}

#[test]
fn certificates_round_trip_through_json() {
    let cert = chromatic_certificate(&catalog::glued_four_cycles(), &MonomialOrder::lex_identity(7)).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    let back: toricgraph::ChromaticCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
}
