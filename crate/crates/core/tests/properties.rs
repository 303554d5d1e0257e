mod common;

use bggkit::bgg::{
    bgg_spectral_sequence, delorme_check, derived_resolution, ext_table, heart_test,
    ordinary_resolution, uniqueness_functoriality_check, verify_multiplicities,
};
use bggkit::homology::ChainComplex;
use common::{algebras, basic, heart_basic, model, random_extension, random_map, ObjectSpec};
use proptest::prelude::*;

fn object_spec() -> impl Strategy<Value = ObjectSpec> {
    (
        0usize..2,
        prop::collection::vec((0usize..3, 0usize..6, -2i64..3), 1..3),
        any::<bool>(),
        prop::collection::vec(-2i64..3, 1..4),
    )
        .prop_map(|(alg, parts, extension, coeffs)| ObjectSpec {
            alg,
            parts,
            extension,
            coeffs,
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn tower_and_spectral_sequence(spec in object_spec()) {
        let algs = algebras();
        let alg = &algs[spec.alg];
        let n = spec.build(&algs);
        let tower = derived_resolution(alg, &n).unwrap();
        prop_assert!(verify_multiplicities(alg, &tower, &n).unwrap().is_empty());
        prop_assert!(tower.layers_are_standard(alg));
        prop_assert!(delorme_check(alg, &n).unwrap().pass);
        let ss = bgg_spectral_sequence(alg, &n).unwrap();
        prop_assert!(ss.e1_matches_ext(alg, &ext_table(alg, &n).unwrap()));
        prop_assert_eq!(ss.e_infinity_class(), n.class());
    }

    #[test]
    fn heart_iff_resolution(spec in object_spec()) {
        let algs = algebras();
        let alg = &algs[spec.alg];
        let n = spec.build(&algs);
        let heart = heart_test(alg, &n).unwrap();
        match ordinary_resolution(alg, &n) {
            Ok(b) => {
                prop_assert_eq!(Some(b.shift), heart);
                for k in -6..8 {
                    prop_assert_eq!(b.complex.cohomology_dims(k), n.shift(b.shift).cohomology_dims(k));
                }
            }
            Err(_) => prop_assert_eq!(heart, None),
        }
    }

    #[test]
    fn summand_closure(
        a in 0usize..2,
        x in (0usize..3, 0usize..6, -2i64..3),
        y in (0usize..3, 0usize..6, -2i64..3),
    ) {
        let algs = algebras();
        let alg = &algs[a];
        let nx = basic(alg, x.0, x.1).shift(x.2);
        let ny = basic(alg, y.0, y.1).shift(y.2);
        if let Some(m) = heart_test(alg, &nx.direct_sum(&ny)).unwrap() {
            prop_assert_eq!(heart_test(alg, &nx).unwrap(), Some(m));
            prop_assert_eq!(heart_test(alg, &ny).unwrap(), Some(m));
        }
        // Sums of heart objects stay in the heart.
        let hx = heart_basic(alg, x.0, x.1);
        let hy = heart_basic(alg, y.0, y.1);
        prop_assert_eq!(heart_test(alg, &hx.direct_sum(&hy)).unwrap(), Some(0));
    }

    #[test]
    fn two_out_of_three(
        a in 0usize..2,
        x in (0usize..3, 0usize..6),
        y in (0usize..3, 0usize..6),
        coeffs in prop::collection::vec(-2i64..3, 1..4),
    ) {
        let algs = algebras();
        let alg = &algs[a];
        let hx = heart_basic(alg, x.0, x.1);
        let hy = heart_basic(alg, y.0, y.1);
        let e = random_extension(alg, &hx, &hy, &coeffs);
        prop_assert_eq!(heart_test(alg, &e).unwrap(), Some(0));
    }

    #[test]
    fn functoriality_on_random_maps(
        a in 0usize..2,
        x in (0usize..3, 0usize..6),
        y in (0usize..3, 0usize..6),
        coeffs in prop::collection::vec(-2i64..3, 1..4),
    ) {
        let algs = algebras();
        let alg = &algs[a];
        let hx = heart_basic(alg, x.0, x.1);
        let hy = heart_basic(alg, y.0, y.1);
        let (qx, qy) = (model(alg, &hx), model(alg, &hy));
        let f = random_map(alg, &qx, &qy, &coeffs);
        let r = uniqueness_functoriality_check(alg, &f, &qx, &qy).unwrap();
        prop_assert!(r.agree);
        prop_assert_eq!(r.faithful, Some(true));
    }
}

#[test]
fn zero_object_is_in_the_heart() {
    let algs = algebras();
    let z = ChainComplex::zero(algs[0].zero_module());
    assert_eq!(heart_test(&algs[0], &z).unwrap(), Some(0));
}
