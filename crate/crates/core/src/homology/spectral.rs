use std::collections::BTreeMap;

use serde::Serialize;

use super::{subquotient, ChainComplex};
use crate::linalg::{Field, Quotient, Subspace};
use crate::qha::{Module, ModuleMap, SubspaceFamily};

/// A complex of modules with a finite decreasing filtration by
/// subcomplexes, `F^p = everything` for `p <= p_min` and `F^p = 0` for
/// `p > p_max`.
#[derive(Clone, Debug)]
pub struct FilteredComplex<F> {
    pub complex: ChainComplex<F>,
    pub p_min: i64,
    pub p_max: i64,
    filt: Vec<Vec<SubspaceFamily<F>>>,
}

/// Dimension vectors of the nonzero cells `E_r^{p,q}` of one page.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SSPage {
    pub r: usize,
    pub cells: BTreeMap<(i64, i64), Vec<usize>>,
}

impl SSPage {
    pub fn total(&self, p: i64, q: i64) -> usize {
        self.cells.get(&(p, q)).map_or(0, |d| d.iter().sum())
    }
}

impl<F: Field> FilteredComplex<F> {
    /// `filtration(p, k)` gives `F^p C^k` per vertex for `p_min < p <= p_max`.
    pub fn new(
        complex: ChainComplex<F>,
        p_min: i64,
        p_max: i64,
        filtration: impl Fn(i64, i64) -> SubspaceFamily<F>,
    ) -> Self {
        let filt = (p_min..=p_max + 1)
            .map(|p| {
                complex
                    .degrees()
                    .map(|k| {
                        if p <= p_min {
                            complex.term(k).full_family()
                        } else if p > p_max {
                            complex.term(k).zero_family()
                        } else {
                            filtration(p, k)
                        }
                    })
                    .collect()
            })
            .collect();
        FilteredComplex {
            complex,
            p_min,
            p_max,
            filt,
        }
    }

    /// `F^p C^k`.
    pub fn fil(&self, p: i64, k: i64) -> SubspaceFamily<F> {
        let term = self.complex.term(k);
        if k < self.complex.lo() || k >= self.complex.end() || p > self.p_max {
            return term.zero_family();
        }
        let p = p.max(self.p_min);
        self.filt[(p - self.p_min) as usize][(k - self.complex.lo()) as usize].clone()
    }

    /// Whether each `F^p` is a subcomplex and the sequence decreases.
    pub fn is_valid(&self, ends: &[(usize, usize)]) -> bool {
        let nv = self.complex.zero_module().n_vertices();
        (self.p_min..=self.p_max + 1).all(|p| {
            self.complex.degrees().all(|k| {
                let f = self.fil(p, k);
                let next = self.fil(p, k + 1);
                let finer = self.fil(p + 1, k);
                let d = self.complex.diff(k);
                self.complex.term(k).is_submodule(ends, &f)
                    && (0..nv).all(|v| {
                        next[v].contains_space(&f[v].image(d.at(v)))
                            && f[v].contains_space(&finer[v])
                    })
            })
        })
    }

    /// `Z_r^{p,k} = {x in F^p C^k : dx in F^{p+r}}`.
    fn z(&self, r: i64, p: i64, k: i64) -> SubspaceFamily<F> {
        let d = self.complex.diff(k);
        self.fil(p, k)
            .iter()
            .zip(self.fil(p + r, k + 1))
            .enumerate()
            .map(|(v, (f, t))| f.preimage_within(d.at(v), &t))
            .collect()
    }

    /// Numerator and denominator of `E_r^{p, k-p}` inside `C^k`.
    fn cell(&self, r: i64, p: i64, k: i64) -> (SubspaceFamily<F>, SubspaceFamily<F>) {
        let upper = self.z(r, p, k);
        let a = self.z(r - 1, p + 1, k);
        let b = self.z(r - 1, p - r + 1, k - 1);
        let d = self.complex.diff(k - 1);
        let lower = a
            .iter()
            .zip(&b)
            .enumerate()
            .map(|(v, (x, y))| x.sum(&y.image(d.at(v))))
            .collect();
        (upper, lower)
    }

    /// `E_r^{p,q}` as a module with its per-vertex quotient data.
    pub fn cell_module(
        &self,
        ends: &[(usize, usize)],
        r: usize,
        p: i64,
        q: i64,
    ) -> (Module<F>, Vec<Quotient<F>>) {
        let k = p + q;
        let (u, l) = self.cell(r as i64, p, k);
        subquotient(ends, self.complex.term(k), &u, &l)
    }

    pub fn cell_dims(&self, r: usize, p: i64, q: i64) -> Vec<usize> {
        let (u, l) = self.cell(r as i64, p, p + q);
        u.iter().zip(&l).map(|(a, b)| a.dim() - b.dim()).collect()
    }

    /// `d_r: E_r^{p,q} -> E_r^{p+r, q-r+1}`.
    pub fn differential(&self, ends: &[(usize, usize)], r: usize, p: i64, q: i64) -> ModuleMap<F> {
        let k = p + q;
        let (_, src) = self.cell_module(ends, r, p, q);
        let (_, tgt) = self.cell_module(ends, r, p + r as i64, q - r as i64 + 1);
        let d = self.complex.diff(k);
        ModuleMap::from_matrices(
            src.iter()
                .zip(&tgt)
                .enumerate()
                .map(|(v, (s, t))| s.induced(d.at(v), t))
                .collect(),
        )
    }

    pub fn page(&self, r: usize) -> SSPage {
        let mut cells = BTreeMap::new();
        for p in self.p_min..=self.p_max {
            for k in self.complex.degrees() {
                let dims = self.cell_dims(r, p, k - p);
                if dims.iter().any(|&d| d > 0) {
                    cells.insert((p, k - p), dims);
                }
            }
        }
        SSPage { r, cells }
    }

    /// The first page index from which all differentials vanish.
    pub fn degeneration_page(&self) -> usize {
        (self.p_max - self.p_min + 1).max(1) as usize
    }

    /// Pages `E_start, ..., E_end`.
    pub fn pages(&self, start: usize, end: usize) -> Vec<SSPage> {
        (start..=end).map(|r| self.page(r)).collect()
    }

    pub fn e_infinity(&self) -> SSPage {
        let mut pg = self.page(self.degeneration_page());
        pg.r = usize::MAX;
        pg
    }

    /// Dimension vectors of `F^p H^k / F^{p+1} H^k`.
    pub fn graded_cohomology(&self, p: i64, k: i64) -> Vec<usize> {
        let d = self.complex.diff(k);
        let dp = self.complex.diff(k - 1);
        let f0 = self.fil(p, k);
        let f1 = self.fil(p + 1, k);
        (0..f0.len())
            .map(|v| {
                let z = Subspace::kernel(d.at(v));
                let b = Subspace::column_space(dp.at(v));
                let a = z.intersection(&f0[v]).sum(&b).dim();
                let c = z.intersection(&f1[v]).sum(&b).dim();
                a - c
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::proj_resolution;
    use crate::linalg::Rational;
    use crate::qha::{load_algebra, QuiverAlgebra};

    fn a2() -> QuiverAlgebra<Rational> {
        load_algebra(include_str!("../../../../algebras/a2_block.json")).unwrap()
    }

    /// Filtration of a complex of projectives by the vertices of length
    /// at least `p`.
    fn length_filtration(
        alg: &QuiverAlgebra<Rational>,
        c: ChainComplex<Rational>,
    ) -> FilteredComplex<Rational> {
        let poset = alg.poset();
        let ends = alg.ends().to_vec();
        let lmax = poset.max_length() as i64;
        let cc = c.clone();
        FilteredComplex::new(c, 0, lmax, move |p, k| {
            let verts: Vec<usize> = (0..poset.len())
                .filter(|&x| poset.length(x) as i64 >= p)
                .collect();
            cc.term(k).generated_by_vertices(&ends, &verts)
        })
    }

    #[test]
    fn converges_to_graded_cohomology() {
        let alg = a2();
        let r = proj_resolution(&alg, &alg.simple(2)).unwrap();
        let c = r.complex.to_chain_complex(&alg);
        let fc = length_filtration(&alg, c.clone());
        assert!(fc.is_valid(alg.ends()));
        let inf = fc.e_infinity();
        for k in c.degrees() {
            for p in fc.p_min..=fc.p_max {
                let got = inf
                    .cells
                    .get(&(p, k - p))
                    .cloned()
                    .unwrap_or(vec![0; alg.n_vertices()]);
                assert_eq!(got, fc.graded_cohomology(p, k));
            }
        }
    }

    #[test]
    fn page_differentials_square_to_zero() {
        let alg = a2();
        let r = proj_resolution(&alg, &alg.simple(5)).unwrap();
        let fc = length_filtration(&alg, r.complex.to_chain_complex(&alg));
        for rr in 0..3 {
            let page = fc.page(rr);
            for &(p, q) in page.cells.keys() {
                let d1 = fc.differential(alg.ends(), rr, p, q);
                let d2 = fc.differential(alg.ends(), rr, p + rr as i64, q - rr as i64 + 1);
                assert!(d2.compose(&d1).is_zero());
            }
        }
    }
}
