use proptest::prelude::*;

use khrank::alexander::{axis_form_decompose, lower_bound_stat, morton_axis_polynomial, torres_check};
use khrank::braid::{burau_generator, BraidWord};
use khrank::classify::{class_for, classify_by_rank, threshold, CorollaryClass};
use khrank::gf2::BitMatrix;
use khrank::khovanov::{kh_ranks, Basepoint, KhOptions};
use khrank::laurent::{Laurent2, PolyMatrix, Var};
use khrank::linkdiag::{axis_link_diagram, braid_closure_diagram, LinkDiagram};

fn poly() -> impl Strategy<Value = Laurent2> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -4i64..=4), 0..5).prop_map(Laurent2::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = Laurent2> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn word(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |l| {
        let g = (l as i32 - 1).max(1);
        let len = if l == 1 { 0..=0 } else { 0..=max_len };
        prop::collection::vec((1..=g, any::<bool>()), len)
            .prop_map(move |v| BraidWord::new(l, v.into_iter().map(|(i, neg)| if neg { -i } else { i }).collect()).unwrap())
    })
}

fn connected_word() -> impl Strategy<Value = BraidWord> {
    word(2..=4, 8).prop_filter("connected closure", |w| w.closure_component_count() == 1)
}

fn total(d: &LinkDiagram) -> u64 {
    kh_ranks(d, false, None, KhOptions::default()).unwrap().total()
}

fn naive_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                for k in 0..cols {
                    m[r][k] ^= m[rank][k];
                }
            }
        }
        rank += 1;
    }
    rank
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn laurent_units_and_division(a in nonzero_poly(), b in nonzero_poly(), ex in -4i32..4, ey in -4i32..4, neg: bool) {
        let unit = Laurent2::monomial(if neg { -1 } else { 1 }, ex, ey);
        prop_assert!((&a * &unit).doteq(&a));
        let n = a.normalize_unit().unwrap();
        prop_assert_eq!(n.normalize_unit().unwrap(), n.clone());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        prop_assert_eq!(Laurent2::parse(&a.to_string()).unwrap(), a.clone());
        let ab = &a * &b;
        prop_assert_eq!(ab.substitute_unit(Var::Y), &a.substitute_unit(Var::Y) * &b.substitute_unit(Var::Y));
    }

    #[test]
    fn determinant_methods_agree(entries in prop::collection::vec(poly(), 25)) {
        let rows: Vec<Vec<Laurent2>> = entries.chunks(5).map(|r| r.to_vec()).collect();
        let m = PolyMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(m.cofactor_determinant(), m.bareiss_det());
    }

    #[test]
    fn determinant_is_multiplicative(x in prop::collection::vec(poly(), 9), y in prop::collection::vec(poly(), 9)) {
        let a = PolyMatrix::from_rows(x.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        let b = PolyMatrix::from_rows(y.chunks(3).map(|r| r.to_vec()).collect()).unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().determinant(), &a.determinant() * &b.determinant());
    }

    #[test]
    fn burau_is_a_homomorphism(u in word(2..=6, 6), tail in prop::collection::vec((1i32..=5, any::<bool>()), 0..6)) {
        let l = u.strands();
        let letters: Vec<i32> = tail.into_iter().map(|(i, n)| {
            let i = 1 + (i - 1) % (l as i32 - 1);
            if n { -i } else { i }
        }).collect();
        let v = BraidWord::new(l, letters).unwrap();
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(uv.burau().unwrap(), u.burau().unwrap().mul(&v.burau().unwrap()).unwrap());
        prop_assert!(u.concat(&u.inverse()).unwrap().burau().unwrap().is_identity());
    }

    #[test]
    fn burau_braid_relations(u in word(3..=6, 4), i in 1usize..5, j in 1usize..5) {
        let l = u.strands();
        let i = 1 + (i - 1) % (l - 2);
        let gi = i as i32;
        let lhs = BraidWord::new(l, vec![gi, gi + 1, gi]).unwrap();
        let rhs = BraidWord::new(l, vec![gi + 1, gi, gi + 1]).unwrap();
        let ctx = |w: &BraidWord| u.concat(w).unwrap().concat(&u.inverse()).unwrap().burau().unwrap();
        prop_assert_eq!(ctx(&lhs), ctx(&rhs));
        let j = 1 + (j - 1) % (l - 1);
        if i.abs_diff(j) >= 2 {
            let a = BraidWord::new(l, vec![gi, j as i32]).unwrap();
            let b = BraidWord::new(l, vec![j as i32, gi]).unwrap();
            prop_assert_eq!(ctx(&a), ctx(&b));
        }
    }

    #[test]
    fn gf2_rank_matches_naive(rows in 1usize..20, cols in 1usize..90, bits in prop::collection::vec(any::<bool>(), 20 * 90)) {
        let data: Vec<Vec<u8>> = (0..rows).map(|r| (0..cols).map(|c| bits[r * 90 + c] as u8).collect()).collect();
        let m = BitMatrix::from_rows(&data).unwrap();
        let r = m.rank();
        prop_assert_eq!(r, naive_rank(&data));
        prop_assert_eq!(m.transpose().rank(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closure_rank_invariants(w in word(2..=4, 7)) {
        let d = braid_closure_diagram(&w);
        let n = d.component_count();
        prop_assert_eq!(n, w.closure_component_count());
        let h = kh_ranks(&d, false, None, KhOptions::default()).unwrap();
        let t = h.total();
        if n == 1 { prop_assert_eq!(t % 4, 2) } else { prop_assert_eq!(t % 4, 0) }
        prop_assert!(t >= 1 << n);
        for bp in Basepoint::all_for(&d) {
            prop_assert_eq!(2 * kh_ranks(&d, true, Some(bp), KhOptions::default()).unwrap().total(), t);
        }
        let m = kh_ranks(&d.mirror(), false, None, KhOptions::default()).unwrap();
        prop_assert_eq!(m, h.reflected());
    }

    #[test]
    fn closure_rank_is_a_markov_invariant(w in word(2..=4, 6), g in word(2..=4, 3), neg: bool) {
        let l = w.strands();
        let g = BraidWord::new(l, g.letters().iter().map(|&x| {
            let i = 1 + (x.abs() - 1) % (l as i32 - 1);
            i * x.signum()
        }).collect()).unwrap();
        let base = total(&braid_closure_diagram(&w));
        let conj = g.concat(&w).unwrap().concat(&g.inverse()).unwrap();
        prop_assert_eq!(total(&braid_closure_diagram(&conj)), base);
        let mut letters = w.letters().to_vec();
        letters.push(if neg { -(l as i32) } else { l as i32 });
        let stab = BraidWord::new(l + 1, letters).unwrap();
        prop_assert_eq!(total(&braid_closure_diagram(&stab)), base);
    }

    #[test]
    fn disjoint_union_multiplies(u in word(2..=3, 4), v in word(2..=3, 4)) {
        let a = braid_closure_diagram(&u);
        let b = braid_closure_diagram(&v);
        prop_assert_eq!(total(&a.disjoint_union(&b)), total(&a) * total(&b));
    }

    #[test]
    fn diagram_round_trips(w in word(1..=4, 7)) {
        let d = braid_closure_diagram(&w);
        let text = d.to_pd_string();
        prop_assert_eq!(text.parse::<LinkDiagram>().unwrap(), d.clone());
        prop_assert_eq!(LinkDiagram::from_json(&d.to_json(None)).unwrap(), d.clone());
        prop_assert_eq!(d.mirror().mirror(), d.clone());
        let all: Vec<usize> = (0..d.component_count()).collect();
        prop_assert_eq!(d.sublink(&all).unwrap(), d.clone());
    }

    #[test]
    fn classifier_is_internally_consistent(w in word(2..=4, 6)) {
        let d = braid_closure_diagram(&w);
        let r = classify_by_rank(&d, None, KhOptions::default()).unwrap();
        let n = r.components;
        let class = class_for(n, r.total, r.homological_support.len());
        prop_assert_eq!(class.to_string(), r.class.clone());
        prop_assert_eq!(class == CorollaryClass::AboveThreshold, r.total > threshold(n));
        let defining = match class {
            CorollaryClass::Unlink(k) => Some((k, 1u64 << k)),
            CorollaryClass::Trefoil => Some((1, 6)),
            CorollaryClass::Hopf => Some((2, 4)),
            CorollaryClass::L4a1 => Some((2, 8)),
            CorollaryClass::HopfSumHopf | CorollaryClass::HopfUnionUnknot => Some((3, 8)),
            CorollaryClass::L6n1 => Some((3, 12)),
            CorollaryClass::Forest(k) => Some((k, 1u64 << k)),
            _ => None,
        };
        if let Some(pair) = defining {
            prop_assert_eq!(pair, (n, r.total));
        }
        if let Some(bs) = &r.batson_seed {
            prop_assert!(bs.ok);
        }
        let m = classify_by_rank(&d.mirror(), None, KhOptions::default()).unwrap();
        prop_assert_eq!((m.total, m.components, m.class), (r.total, n, r.class));
    }

    #[test]
    fn axis_polynomial_shape(w in connected_word()) {
        let l = w.strands();
        let p = morton_axis_polynomial(&w).unwrap();
        prop_assert!(torres_check(&p, l));
        let form = axis_form_decompose(&p, l).unwrap();
        prop_assert!(form.f_at_one_is_one());
        prop_assert!(form.reconstruct().doteq(&p));
        prop_assert!(p.invert_vars().doteq(&p));
        prop_assert_eq!(lower_bound_stat(&p) % 2, 0);
    }

    #[test]
    fn axis_polynomial_is_a_conjugacy_invariant(w in word(3..=3, 6), g in word(3..=3, 4)) {
        prop_assume!(w.closure_component_count() == 1);
        let conj = g.concat(&w).unwrap().concat(&g.inverse()).unwrap();
        prop_assert!(morton_axis_polynomial(&conj).unwrap().doteq(&morton_axis_polynomial(&w).unwrap()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn axis_link_has_linking_number_strands(w in word(2..=3, 4)) {
        let d = axis_link_diagram(&w);
        let n = d.component_count();
        prop_assert_eq!(n, w.closure_component_count() + 1);
        let t = total(&d);
        prop_assert!(t >= 1 << n);
        prop_assert_eq!(t % 4, 0);
    }
}

#[test]
fn generator_determinant_is_minus_t() {
    for l in 2..=6 {
        for i in 1..l {
            let g = burau_generator(l, i, false).unwrap();
            assert_eq!(g.determinant(), Laurent2::parse("-t").unwrap(), "l={l} i={i}");
        }
    }
}

#[test]
fn presentation_invariance_at_fixed_links() {
    let trefoil: LinkDiagram = "X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)".parse().unwrap();
    let closure = braid_closure_diagram(&"2:1 1 1".parse().unwrap());
    assert_eq!(total(&closure), total(&trefoil));
    let l4a1: LinkDiagram = "X(6,1,7,2);X(8,3,5,4);X(2,5,3,6);X(4,7,1,8)".parse().unwrap();
    let axis = axis_link_diagram(&"2:1".parse().unwrap());
    assert_eq!(total(&axis), 8);
    assert_eq!(total(&l4a1), 8);
}
