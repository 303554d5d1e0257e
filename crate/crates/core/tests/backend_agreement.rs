//! The algebra and KL backends on the A1 and A2 blocks.

use std::collections::BTreeSet;

use bggkit::bgg::{
    bgg_spectral_sequence, classify, classify_algebra, delorme_check, ext_table, heart_test,
    kl_delorme_check, kl_e1, kl_ext_table, kl_heart_test, kl_spectral_sequence,
};
use bggkit::coxeter::{Elem, WeylGroup};
use bggkit::homology::ChainComplex;
use bggkit::klpoly::KLTable;
use bggkit::linalg::Rational;
use bggkit::qha::{load_algebra, QuiverAlgebra};

struct Pair {
    alg: QuiverAlgebra<Rational>,
    group: WeylGroup,
    /// Group element of each algebra vertex.
    elem: Vec<Elem>,
}

fn pair(json: &str, ty: &str) -> Pair {
    let alg: QuiverAlgebra<Rational> = load_algebra(json).unwrap();
    let group = WeylGroup::from_type(ty).unwrap();
    let elem = alg
        .poset()
        .names()
        .iter()
        .map(|n| group.parse(n).unwrap())
        .collect();
    Pair { alg, group, elem }
}

fn pairs() -> Vec<Pair> {
    vec![
        pair(include_str!("../../../algebras/a1_block.json"), "A1"),
        pair(include_str!("../../../algebras/a2_block.json"), "A2"),
    ]
}

fn simple(p: &Pair, w: usize) -> ChainComplex<Rational> {
    ChainComplex::stalk(p.alg.zero_module(), p.alg.simple(w), 0)
}

#[test]
fn weights_match_group_elements() {
    for p in pairs() {
        assert_eq!(
            p.elem.iter().collect::<BTreeSet<_>>().len(),
            p.group.order()
        );
        for (v, &x) in p.elem.iter().enumerate() {
            assert_eq!(p.alg.poset().length(v), p.group.length(x) as i64);
            for (u, &y) in p.elem.iter().enumerate() {
                assert_eq!(p.alg.poset().leq(u, v), p.group.bruhat_leq(y, x));
            }
        }
    }
}

#[test]
fn ext_of_simples_into_costandards() {
    for p in pairs() {
        let t = KLTable::new(&p.group);
        for w in 0..p.alg.n_vertices() {
            let alg_ext = ext_table(&p.alg, &simple(&p, w)).unwrap();
            let kl_ext = kl_ext_table(&t, p.elem[w]);
            for y in 0..p.alg.n_vertices() {
                assert_eq!(alg_ext[y], kl_ext[p.elem[y]], "L_{w} vs A_{y}");
            }
            assert_eq!(
                heart_test(&p.alg, &simple(&p, w)).unwrap(),
                kl_heart_test(&t, p.elem[w])
            );
        }
    }
}

#[test]
fn first_pages_agree() {
    for p in pairs() {
        let t = KLTable::new(&p.group);
        let top = p.group.max_length() as i64;
        for w in 0..p.alg.n_vertices() {
            let ss = bgg_spectral_sequence(&p.alg, &simple(&p, w)).unwrap();
            let alg_e1: Vec<((i64, i64), BTreeSet<(Elem, usize)>)> = ss
                .e1_standards(&p.alg)
                .into_iter()
                .map(|(pq, ws)| (pq, ws.into_iter().map(|(v, m)| (p.elem[v], m)).collect()))
                .collect();
            let kl: Vec<((i64, i64), BTreeSet<(Elem, usize)>)> = kl_e1(&t, p.elem[w], top)
                .into_iter()
                .map(|(pq, ys)| (pq, ys.into_iter().collect()))
                .collect();
            assert_eq!(alg_e1, kl, "L_{w}");

            let report = ss.report(&p.alg, "L");
            let kl_report = kl_spectral_sequence(&t, p.elem[w], Some(top)).report;
            let last = |r: &bggkit::bgg::SsReport| r.pages.last().unwrap().positions();
            assert_eq!(last(&report), last(&kl_report));
            let pages = |r: &bggkit::bgg::SsReport| {
                r.pages.iter().map(|g| g.page.clone()).collect::<Vec<_>>()
            };
            assert_eq!(pages(&report), pages(&kl_report), "L_{w}");
        }
    }
}

#[test]
fn delorme_coefficients_agree() {
    for p in pairs() {
        let t = KLTable::new(&p.group);
        for w in 0..p.alg.n_vertices() {
            let a = delorme_check(&p.alg, &simple(&p, w)).unwrap();
            let k = kl_delorme_check(&t, p.elem[w]);
            assert!(a.pass && k.pass);
            for y in 0..p.alg.n_vertices() {
                assert_eq!(a.chi[y], k.chi[p.elem[y]]);
                assert_eq!(a.class[y], k.class[p.elem[y]]);
            }
        }
    }
}

#[test]
fn classification_verdicts_agree() {
    for p in pairs() {
        let t = KLTable::new(&p.group);
        for w in 0..p.alg.n_vertices() {
            let a = classify_algebra(&p.alg, w).unwrap();
            let k = classify(&t, p.elem[w]);
            let key = |names: &[String]| -> BTreeSet<Elem> {
                names.iter().map(|n| p.group.parse(n).unwrap()).collect()
            };
            assert_eq!(key(&a.divisors), key(&k.divisors));
            assert_eq!(a.rationally_smooth, k.rationally_smooth);
            for sa in &a.subsets {
                let sk = k
                    .subsets
                    .iter()
                    .find(|s| key(&s.divisors) == key(&sa.divisors))
                    .unwrap();
                assert_eq!(
                    sa.verdict, sk.verdict,
                    "w = {}, I = {:?}",
                    a.weight, sa.divisors
                );
            }
        }
    }
}
