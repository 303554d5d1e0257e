use std::collections::BTreeMap;

use super::{subquotient, ChainComplex, ChainMap, HomologyError, VecComplex};
use crate::linalg::{Field, Matrix, Subspace};
use crate::qha::{Module, ModuleMap, QuiverAlgebra, SubspaceFamily};

/// Maximum number of degrees a projective model may grow below the input.
pub const DEFAULT_DEPTH_BOUND: usize = 64;

/// A bounded complex of projectives in compact form. Degree `lo + i` is
/// `P_{gens[i][0]} + P_{gens[i][1]} + ...`; `images[i][j]` is the image of
/// generator `j` under the differential, a vector of the next term at
/// vertex `gens[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex<F> {
    pub lo: i64,
    pub gens: Vec<Vec<usize>>,
    pub images: Vec<Vec<Vec<F>>>,
}

/// A projective complex with a quasi-isomorphism onto a target complex.
/// `eps[i][j]` is the image of generator `j` of degree `lo + i` in the
/// target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjModel<F> {
    pub complex: ProjComplex<F>,
    pub eps: Vec<Vec<Vec<F>>>,
    pub target: ChainComplex<F>,
}

fn path_matrix<F: Field>(
    m: &Module<F>,
    path: &[usize],
    source_dim: usize,
    target_dim: usize,
) -> Matrix<F> {
    let cols = (0..source_dim)
        .map(|i| {
            let mut e = vec![F::zero(); source_dim];
            e[i] = F::one();
            m.act(path, &e)
        })
        .collect();
    Matrix::from_cols(cols, target_dim)
}

impl<F: Field> ProjComplex<F> {
    pub fn zero() -> Self {
        ProjComplex {
            lo: 0,
            gens: Vec::new(),
            images: Vec::new(),
        }
    }

    pub fn end(&self) -> i64 {
        self.lo + self.gens.len() as i64
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.lo..self.end()
    }

    pub fn gens_at(&self, k: i64) -> &[usize] {
        if k < self.lo || k >= self.end() {
            &[]
        } else {
            &self.gens[(k - self.lo) as usize]
        }
    }

    pub fn term(&self, alg: &QuiverAlgebra<F>, k: i64) -> Module<F> {
        alg.projective_sum(self.gens_at(k))
    }

    /// Number of summands `P_x` in degree `k`, per vertex.
    pub fn multiplicities(&self, n_vertices: usize, k: i64) -> Vec<usize> {
        let mut out = vec![0; n_vertices];
        for &x in self.gens_at(k) {
            out[x] += 1;
        }
        out
    }

    pub fn total_rank(&self) -> usize {
        self.gens.iter().map(|g| g.len()).sum()
    }

    pub fn diff(&self, alg: &QuiverAlgebra<F>, k: i64) -> ModuleMap<F> {
        let src = self.term(alg, k);
        let tgt = self.term(alg, k + 1);
        if k < self.lo || k + 1 >= self.end() {
            return ModuleMap::zero(&src, &tgt);
        }
        alg.map_from_generators(self.gens_at(k), &tgt, &self.images[(k - self.lo) as usize])
    }

    pub fn to_chain_complex(&self, alg: &QuiverAlgebra<F>) -> ChainComplex<F> {
        let terms = self.degrees().map(|k| self.term(alg, k)).collect();
        let diffs = self
            .degrees()
            .take(self.gens.len().saturating_sub(1))
            .map(|k| self.diff(alg, k))
            .collect();
        ChainComplex::new(alg.zero_module(), self.lo, terms, diffs)
            .expect("projective complex is a complex")
    }

    /// Compact form of a complex whose degree `lo + i` term is the
    /// projective sum on `gens[i]`.
    pub fn from_maps(
        alg: &QuiverAlgebra<F>,
        lo: i64,
        gens: Vec<Vec<usize>>,
        diffs: &[ModuleMap<F>],
    ) -> Self {
        let images = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if i < diffs.len() {
                    alg.generator_images(g, &diffs[i])
                } else {
                    g.iter().map(|_| Vec::new()).collect()
                }
            })
            .collect();
        ProjComplex { lo, gens, images }
    }

    /// A generator pair `(g, j)` between degrees `k` and `k + 1` whose
    /// differential component is invertible.
    fn unit_component(&self, alg: &QuiverAlgebra<F>, k: i64) -> Option<(usize, usize)> {
        if k < self.lo || k + 1 >= self.end() {
            return None;
        }
        let i = (k - self.lo) as usize;
        let next = &self.gens[i + 1];
        for (g, &x) in self.gens[i].iter().enumerate() {
            let labels = alg.projective_sum_labels(next, x);
            for (pos, (j, path)) in labels.iter().enumerate() {
                if path.is_empty() && !self.images[i][g][pos].is_zero() {
                    return Some((g, *j));
                }
            }
        }
        None
    }

    /// Whether every differential lies in the radical.
    pub fn is_minimal(&self, alg: &QuiverAlgebra<F>) -> bool {
        self.degrees()
            .all(|k| self.unit_component(alg, k).is_none())
    }

    /// Split off contractible summands until the complex is minimal.
    pub fn minimize(&self, alg: &QuiverAlgebra<F>) -> Self {
        let n = self.to_chain_complex(alg);
        let eps = ChainMap::identity(&n);
        let model = ProjModel {
            complex: self.clone(),
            eps: self
                .degrees()
                .map(|k| alg.generator_images(self.gens_at(k), &eps.at(k, n.term(k), n.term(k))))
                .collect(),
            target: n,
        };
        model.minimize(alg).complex
    }

    /// Add the contractible summand `P_x -> P_x` in degrees `k`, `k + 1`.
    pub fn pad(&self, alg: &QuiverAlgebra<F>, k: i64, x: usize) -> Self {
        let c = self.to_chain_complex(alg);
        let p = alg.projective(x);
        let extra = ChainComplex::new(
            alg.zero_module(),
            k,
            vec![p.clone(), p.clone()],
            vec![ModuleMap::identity(&p)],
        )
        .expect("identity cone is a complex");
        let sum = c.direct_sum(&extra);
        let gens = sum
            .degrees()
            .map(|d| {
                let mut g = self.gens_at(d).to_vec();
                if d == k || d == k + 1 {
                    g.push(x);
                }
                g
            })
            .collect();
        let diffs: Vec<ModuleMap<F>> = sum.degrees().map(|d| sum.diff(d)).collect();
        Self::from_maps(alg, sum.lo(), gens, &diffs)
    }

    /// `Hom(Q, A)` as a complex of vector spaces, `Hom^n = Hom(Q^{-n}, A)`.
    pub fn rhom(&self, alg: &QuiverAlgebra<F>, a: &Module<F>) -> VecComplex<F> {
        if self.gens.is_empty() {
            return VecComplex {
                lo: 0,
                dims: Vec::new(),
                diffs: Vec::new(),
            };
        }
        let hom_dim = |k: i64| -> usize { self.gens_at(k).iter().map(|&x| a.dim_at(x)).sum() };
        let top = self.end() - 1;
        let lo = -top;
        let dims: Vec<usize> = (lo..=-self.lo).map(|n| hom_dim(-n)).collect();
        let diffs = (lo..-self.lo)
            .map(|n| {
                // Hom(Q^{-n}, A) -> Hom(Q^{-n-1}, A), precompose with d.
                let k = -n - 1;
                let imgs = &self.images[(k - self.lo) as usize];
                precompose_matrix(alg, a, self.gens_at(k), imgs, self.gens_at(k + 1))
            })
            .collect();
        VecComplex { lo, dims, diffs }
    }

    /// Nonzero `dim H^n Hom(Q, A)`.
    pub fn ext_dims(&self, alg: &QuiverAlgebra<F>, a: &Module<F>) -> BTreeMap<i64, usize> {
        let h = self.rhom(alg, a);
        h.degrees()
            .map(|n| (n, h.cohomology_dim(n)))
            .filter(|&(_, d)| d > 0)
            .collect()
    }
}

/// Matrix of `phi -> phi . g` from `Hom(target sum, A)` to
/// `Hom(source sum, A)`, where `g` sends generator `i` of the source (at
/// vertex `src[i]`) to `images[i]` in the target sum on `tgt`.
pub fn precompose_matrix<F: Field>(
    alg: &QuiverAlgebra<F>,
    a: &Module<F>,
    src: &[usize],
    images: &[Vec<F>],
    tgt: &[usize],
) -> Matrix<F> {
    let rows: usize = src.iter().map(|&x| a.dim_at(x)).sum();
    let cols: usize = tgt.iter().map(|&x| a.dim_at(x)).sum();
    let mut m = Matrix::zeros(rows, cols);
    let col_off = offsets(tgt.iter().map(|&x| a.dim_at(x)));
    let mut row = 0;
    for (&x, img) in src.iter().zip(images) {
        for (pos, (j, path)) in alg.projective_sum_labels(tgt, x).iter().enumerate() {
            let c = &img[pos];
            if c.is_zero() {
                continue;
            }
            let (h, w) = (a.dim_at(x), a.dim_at(tgt[*j]));
            let pm = path_matrix(a, path, w, h).scale(c);
            let cur = m.block(row, col_off[*j], h, w);
            m.set_block(row, col_off[*j], &cur.add(&pm));
        }
        row += a.dim_at(x);
    }
    m
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    sizes
        .map(|s| {
            let o = acc;
            acc += s;
            o
        })
        .collect()
}

/// Index ranges of each generator's summand inside a projective sum at `v`.
fn summand_ranges<F: Field>(
    alg: &QuiverAlgebra<F>,
    gens: &[usize],
    v: usize,
) -> Vec<std::ops::Range<usize>> {
    let sizes: Vec<usize> = gens.iter().map(|&x| alg.projective(x).dim_at(v)).collect();
    offsets(sizes.iter().copied())
        .into_iter()
        .zip(&sizes)
        .map(|(o, &s)| o..o + s)
        .collect()
}

fn complement(n: usize, r: &std::ops::Range<usize>) -> Vec<usize> {
    (0..n).filter(|i| !r.contains(i)).collect()
}

impl<F: Field> ProjModel<F> {
    pub fn eps_map(&self, alg: &QuiverAlgebra<F>) -> ChainMap<F> {
        ChainMap {
            lo: self.complex.lo,
            maps: self
                .complex
                .degrees()
                .enumerate()
                .map(|(i, k)| {
                    alg.map_from_generators(
                        self.complex.gens_at(k),
                        self.target.term(k),
                        &self.eps[i],
                    )
                })
                .collect(),
        }
    }

    /// Gaussian elimination of invertible components; the result is a
    /// minimal complex with the induced quasi-isomorphism.
    pub fn minimize(&self, alg: &QuiverAlgebra<F>) -> Self {
        let nv = alg.n_vertices();
        let pc = &self.complex;
        let mut lo = pc.lo;
        let mut gens = pc.gens.clone();
        let mut diffs: Vec<ModuleMap<F>> = pc.degrees().map(|k| pc.diff(alg, k)).collect();
        let mut eps: Vec<ModuleMap<F>> = self.eps_map(alg).maps;
        loop {
            let cur = ProjComplex::from_maps(alg, lo, gens.clone(), &diffs);
            let found = cur
                .degrees()
                .find_map(|k| cur.unit_component(alg, k).map(|p| (k, p)));
            let Some((k, (g, j))) = found else { break };
            let i = (k - lo) as usize;
            let (mut new_prev, mut new_d, mut new_next, mut new_e0, mut new_e1) =
                (Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new());
            for v in 0..nv {
                let rg = &summand_ranges(alg, &gens[i], v)[g];
                let rj = &summand_ranges(alg, &gens[i + 1], v)[j];
                let d = diffs[i].at(v);
                let keep_c = complement(d.cols(), rg);
                let keep_r = complement(d.rows(), rj);
                let gi: Vec<usize> = rg.clone().collect();
                let ji: Vec<usize> = rj.clone().collect();
                let phi = d.select_rows(&ji).select_cols(&gi);
                let beta = d.select_rows(&ji).select_cols(&keep_c);
                let gamma = d.select_rows(&keep_r).select_cols(&gi);
                let eps_rest = d.select_rows(&keep_r).select_cols(&keep_c);
                let x = phi
                    .solve_matrix(&beta)
                    .expect("unit component is invertible");
                new_d.push(eps_rest.add(&gamma.mul(&x).neg()));
                if i > 0 {
                    new_prev.push(diffs[i - 1].at(v).select_rows(&keep_c));
                }
                if i + 1 < diffs.len() {
                    new_next.push(diffs[i + 1].at(v).select_cols(&keep_r));
                }
                let e = eps[i].at(v);
                new_e0.push(
                    e.select_cols(&keep_c)
                        .add(&e.select_cols(&gi).mul(&x).neg()),
                );
                new_e1.push(eps[i + 1].at(v).select_cols(&keep_r));
            }
            diffs[i] = ModuleMap::from_matrices(new_d);
            if i > 0 {
                diffs[i - 1] = ModuleMap::from_matrices(new_prev);
            }
            if i + 1 < diffs.len() {
                diffs[i + 1] = ModuleMap::from_matrices(new_next);
            }
            eps[i] = ModuleMap::from_matrices(new_e0);
            eps[i + 1] = ModuleMap::from_matrices(new_e1);
            gens[i].remove(g);
            gens[i + 1].remove(j);
            // Trim empty degrees at the ends.
            while gens.first().is_some_and(|g| g.is_empty()) {
                gens.remove(0);
                diffs.remove(0);
                eps.remove(0);
                lo += 1;
            }
            while gens.last().is_some_and(|g| g.is_empty()) {
                gens.pop();
                diffs.pop();
                eps.pop();
            }
        }
        let complex = ProjComplex::from_maps(alg, lo, gens, &diffs);
        let eps = complex
            .degrees()
            .enumerate()
            .map(|(i, k)| alg.generator_images(complex.gens_at(k), &eps[i]))
            .collect();
        ProjModel {
            complex,
            eps,
            target: self.target.clone(),
        }
    }
}

/// A projective model of `n`: degree by degree from the top, cover the
/// cycles of the mapping cone modulo what is already hit.
pub fn projective_model<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
    depth_bound: usize,
) -> Result<ProjModel<F>, HomologyError> {
    let n = n.trimmed();
    let ends = alg.ends();
    let nv = alg.n_vertices();
    if n.is_zero() {
        return Ok(ProjModel {
            complex: ProjComplex::zero(),
            eps: Vec::new(),
            target: n,
        });
    }
    let top = n.end() - 1;
    // Per degree: generators, differential images, augmentation images.
    let mut gens: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    let mut dimg: BTreeMap<i64, Vec<Vec<F>>> = BTreeMap::new();
    let mut eimg: BTreeMap<i64, Vec<Vec<F>>> = BTreeMap::new();
    let empty: Vec<usize> = Vec::new();
    let mut k = top;
    loop {
        if top - k > depth_bound as i64 + (n.end() - n.lo()) {
            return Err(HomologyError::Unbounded(depth_bound));
        }
        let g1 = gens.get(&(k + 1)).unwrap_or(&empty).clone();
        let g2 = gens.get(&(k + 2)).unwrap_or(&empty).clone();
        let q1 = alg.projective_sum(&g1);
        let q2 = alg.projective_sum(&g2);
        let dq = if g1.is_empty() {
            ModuleMap::zero(&q1, &q2)
        } else {
            alg.map_from_generators(&g1, &q2, &dimg[&(k + 1)])
        };
        let eq = if g1.is_empty() {
            ModuleMap::zero(&q1, n.term(k + 1))
        } else {
            alg.map_from_generators(&g1, n.term(k + 1), &eimg[&(k + 1)])
        };
        let c = q1.direct_sum(n.term(k));
        let dn = n.diff(k);
        let dn_prev = n.diff(k - 1);
        let mut z: SubspaceFamily<F> = Vec::new();
        let mut b: SubspaceFamily<F> = Vec::new();
        for v in 0..nv {
            let (a1, n0) = (q1.dim_at(v), n.term(k).dim_at(v));
            let (a2, n1) = (q2.dim_at(v), n.term(k + 1).dim_at(v));
            let mut m = Matrix::zeros(a2 + n1, a1 + n0);
            m.set_block(0, 0, &dq.at(v).neg());
            m.set_block(a2, 0, eq.at(v));
            m.set_block(a2, a1, dn.at(v));
            z.push(Subspace::kernel(&m));
            let mut bm = Matrix::zeros(a1 + n0, n.term(k - 1).dim_at(v));
            bm.set_block(a1, 0, dn_prev.at(v));
            b.push(Subspace::column_space(&bm));
        }
        let (h, quots) = subquotient(ends, &c, &z, &b);
        if h.is_zero() && k < n.lo() {
            break;
        }
        let (cg, cover) = alg.projective_cover(&h);
        let images = alg.generator_images(&cg, &cover);
        let mut di = Vec::new();
        let mut ei = Vec::new();
        for (&x, coords) in cg.iter().zip(&images) {
            let reps = quots[x].representatives();
            let mut lift = vec![F::zero(); c.dim_at(x)];
            for (cf, r) in coords.iter().zip(&reps) {
                for (l, e) in lift.iter_mut().zip(r) {
                    *l = l.clone() + cf.clone() * e.clone();
                }
            }
            let a1 = q1.dim_at(x);
            di.push(lift[..a1].iter().map(|e| -e.clone()).collect());
            ei.push(lift[a1..].to_vec());
        }
        gens.insert(k, cg);
        dimg.insert(k, di);
        eimg.insert(k, ei);
        k -= 1;
    }
    let nonempty: Vec<i64> = gens
        .iter()
        .filter(|(_, g)| !g.is_empty())
        .map(|(&d, _)| d)
        .collect();
    let (Some(&lo), Some(&hi)) = (nonempty.first(), nonempty.last()) else {
        return Ok(ProjModel {
            complex: ProjComplex::zero(),
            eps: Vec::new(),
            target: n,
        });
    };
    let take = |m: &BTreeMap<i64, Vec<Vec<F>>>, d: i64| m.get(&d).cloned().unwrap_or_default();
    let complex = ProjComplex {
        lo,
        gens: (lo..=hi)
            .map(|d| gens.get(&d).cloned().unwrap_or_default())
            .collect(),
        images: (lo..=hi)
            .map(|d| {
                if d == hi {
                    gens[&d].iter().map(|_| Vec::new()).collect()
                } else {
                    take(&dimg, d)
                }
            })
            .collect(),
    };
    let eps = (lo..=hi).map(|d| take(&eimg, d)).collect();
    Ok(ProjModel {
        complex,
        eps,
        target: n,
    })
}

/// Minimal projective resolution of a module, as a model of its stalk
/// complex in degree 0.
pub fn proj_resolution<F: Field>(
    alg: &QuiverAlgebra<F>,
    m: &Module<F>,
) -> Result<ProjModel<F>, HomologyError> {
    let stalk = ChainComplex::stalk(alg.zero_module(), m.clone(), 0);
    Ok(projective_model(alg, &stalk, DEFAULT_DEPTH_BOUND)?.minimize(alg))
}

/// `RHom(N, A)` as a complex of vector spaces.
pub fn rhom_graded<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
    a: &Module<F>,
) -> Result<VecComplex<F>, HomologyError> {
    Ok(projective_model(alg, n, DEFAULT_DEPTH_BOUND)?
        .minimize(alg)
        .complex
        .rhom(alg, a))
}

/// Nonzero `dim Ext^n(N, A)`.
pub fn ext_dims<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
    a: &Module<F>,
) -> Result<BTreeMap<i64, usize>, HomologyError> {
    Ok(projective_model(alg, n, DEFAULT_DEPTH_BOUND)?
        .minimize(alg)
        .complex
        .ext_dims(alg, a))
}

/// Lift `f: N -> N'` to a chain map between projective models, so that
/// `eps' . lift` is homotopic to `f . eps`.
pub fn lift_chain_map<F: Field>(
    alg: &QuiverAlgebra<F>,
    f: &ChainMap<F>,
    source: &ProjModel<F>,
    target: &ProjModel<F>,
) -> Result<ChainMap<F>, HomologyError> {
    let q = source.complex.to_chain_complex(alg);
    let q2 = target.complex.to_chain_complex(alg);
    let n = &source.target;
    let n2 = &target.target;
    let eps = source.eps_map(alg);
    let eps2 = target.eps_map(alg);
    let cone = ChainComplex::cone(&eps2, &q2, n2);
    let mut psi: BTreeMap<i64, Vec<Vec<F>>> = BTreeMap::new();
    let gens = |k: i64| source.complex.gens_at(k).to_vec();
    for k in source.complex.degrees().rev() {
        let g = gens(k);
        if g.is_empty() {
            continue;
        }
        // R = -psi^{k+1} d + (0, -f eps).
        let psi_next = match psi.get(&(k + 1)) {
            Some(imgs) => alg.map_from_generators(&gens(k + 1), cone.term(k), imgs),
            None => ModuleMap::zero(q.term(k + 1), cone.term(k)),
        };
        let r1 = psi_next.compose(&q.diff(k)).neg();
        let fe = f
            .at(k, n.term(k), n2.term(k))
            .compose(&eps.at(k, q.term(k), n.term(k)));
        let r1_imgs = alg.generator_images(&g, &r1);
        let fe_imgs = alg.generator_images(&g, &fe);
        let mut out = Vec::new();
        for ((&x, a), b) in g.iter().zip(&r1_imgs).zip(&fe_imgs) {
            let split = q2.term(k + 1).dim_at(x);
            let mut r = a.clone();
            for (ri, bi) in r[split..].iter_mut().zip(b) {
                *ri = ri.clone() - bi.clone();
            }
            let d = cone.diff(k - 1);
            let s = d
                .at(x)
                .solve(&r)
                .map_err(|_| HomologyError::NoLift(format!("degree {k}")))?;
            out.push(s);
        }
        psi.insert(k, out);
    }
    let maps = source
        .complex
        .degrees()
        .map(|k| {
            let g = gens(k);
            let imgs: Vec<Vec<F>> = match psi.get(&k) {
                Some(p) => p
                    .iter()
                    .zip(&g)
                    .map(|(s, &x)| {
                        s[..q2.term(k).dim_at(x)]
                            .iter()
                            .map(|e| -e.clone())
                            .collect()
                    })
                    .collect(),
                None => Vec::new(),
            };
            alg.map_from_generators(&g, q2.term(k), &imgs)
        })
        .collect();
    Ok(ChainMap {
        lo: source.complex.lo,
        maps,
    })
}
