//! Random objects in the bundled A1 and A2 blocks.

#![allow(dead_code)]

use bggkit::bgg::{chain_map_space, heart_test};
use bggkit::homology::{projective_model, ChainComplex, ChainMap, DEFAULT_DEPTH_BOUND};
use bggkit::linalg::{Field, Rational};
use bggkit::qha::{load_algebra, ModuleMap, QuiverAlgebra};

pub type Alg = QuiverAlgebra<Rational>;
pub type Cx = ChainComplex<Rational>;

pub fn algebras() -> Vec<Alg> {
    vec![
        load_algebra(include_str!("../../../../algebras/a1_block.json")).unwrap(),
        load_algebra(include_str!("../../../../algebras/a2_block.json")).unwrap(),
    ]
}

/// `kind` 0, 1, 2: simple, standard, costandard of weight `w`, in degree 0.
pub fn basic(alg: &Alg, kind: usize, w: usize) -> Cx {
    let w = w % alg.n_vertices();
    let m = match kind % 3 {
        0 => alg.simple(w),
        1 => alg.standard(w),
        _ => alg.costandard(w),
    };
    ChainComplex::stalk(alg.zero_module(), m, 0)
}

/// A simple or standard object shifted into the heart.
pub fn heart_basic(alg: &Alg, kind: usize, w: usize) -> Cx {
    into_heart(alg, &basic(alg, kind % 2, w))
}

/// The shift of `n` lying in the heart; `n` must have one.
pub fn into_heart(alg: &Alg, n: &Cx) -> Cx {
    let m = heart_test(alg, n)
        .unwrap()
        .expect("object has a heart shift");
    n.shift(m)
}

pub fn model(alg: &Alg, n: &Cx) -> Cx {
    projective_model(alg, n, DEFAULT_DEPTH_BOUND)
        .unwrap()
        .minimize(alg)
        .complex
        .to_chain_complex(alg)
}

/// A random chain map `x -> y` with coefficients cycling through `coeffs`.
pub fn random_map(alg: &Alg, x: &Cx, y: &Cx, coeffs: &[i64]) -> ChainMap<Rational> {
    let basis = chain_map_space(alg, x, y);
    let lo = x.lo().min(y.lo());
    let hi = x.end().max(y.end());
    let maps = (lo..hi)
        .map(|k| {
            let mut f = ModuleMap::zero(x.term(k), y.term(k));
            for (i, g) in basis.iter().enumerate() {
                let c = Rational::from_i64(coeffs[i % coeffs.len().max(1)]);
                f = f.add(&g.at(k, x.term(k), y.term(k)).scale(&c));
            }
            f
        })
        .collect();
    ChainMap { lo, maps }
}

/// `cone(f)` for a random `f: Y[-1] -> X`, an extension of `Y` by `X`,
/// built on projective models.
pub fn random_extension(alg: &Alg, x: &Cx, y: &Cx, coeffs: &[i64]) -> Cx {
    let qx = model(alg, x);
    let qy = model(alg, y).shift(-1);
    let f = random_map(alg, &qy, &qx, coeffs);
    assert!(f.is_chain_map(&qy, &qx));
    ChainComplex::cone(&f, &qy, &qx)
}

/// Description of a random object: a sum of shifted basic objects, or an
/// extension between two heart objects.
#[derive(Clone, Debug)]
pub struct ObjectSpec {
    pub alg: usize,
    pub parts: Vec<(usize, usize, i64)>,
    pub extension: bool,
    pub coeffs: Vec<i64>,
}

impl ObjectSpec {
    pub fn build(&self, algs: &[Alg]) -> Cx {
        let alg = &algs[self.alg % algs.len()];
        if self.extension && self.parts.len() >= 2 {
            let (k0, w0, _) = self.parts[0];
            let (k1, w1, _) = self.parts[1];
            let x = heart_basic(alg, k0, w0);
            let y = heart_basic(alg, k1, w1);
            return random_extension(alg, &x, &y, &self.coeffs);
        }
        self.parts
            .iter()
            .map(|&(k, w, s)| basic(alg, k, w).shift(s))
            .reduce(|a, b| a.direct_sum(&b))
            .unwrap_or_else(|| ChainComplex::zero(alg.zero_module()))
    }
}
