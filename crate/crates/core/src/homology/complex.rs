use serde::{Deserialize, Serialize};

use super::HomologyError;
use crate::linalg::{Field, Matrix, Quotient, Subspace};
use crate::qha::{Module, ModuleMap, SubspaceFamily};

/// A bounded cochain complex of modules, `d^k: C^k -> C^{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex<F> {
    zero: Module<F>,
    lo: i64,
    terms: Vec<Module<F>>,
    diffs: Vec<ModuleMap<F>>,
}

/// A family of module maps, one per degree, commuting with differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F> {
    pub lo: i64,
    pub maps: Vec<ModuleMap<F>>,
}

impl<F: Field> ChainComplex<F> {
    /// `terms[i]` sits in degree `lo + i`; `diffs[i]` goes from `terms[i]`
    /// to `terms[i + 1]`. Fails unless consecutive differentials compose to
    /// zero.
    pub fn new(
        zero: Module<F>,
        lo: i64,
        terms: Vec<Module<F>>,
        diffs: Vec<ModuleMap<F>>,
    ) -> Result<Self, HomologyError> {
        if terms.len() != diffs.len() + 1 && !(terms.is_empty() && diffs.is_empty()) {
            return Err(HomologyError::Shape(
                "need one differential between consecutive terms".into(),
            ));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source_dims() != terms[i].dims() || d.target_dims() != terms[i + 1].dims() {
                return Err(HomologyError::Shape(format!(
                    "differential in degree {} has the wrong shape",
                    lo + i as i64
                )));
            }
        }
        for (i, w) in diffs.windows(2).enumerate() {
            if !w[1].compose(&w[0]).is_zero() {
                return Err(HomologyError::NotAComplex(lo + i as i64));
            }
        }
        Ok(ChainComplex {
            zero,
            lo,
            terms,
            diffs,
        })
    }

    pub fn zero(zero: Module<F>) -> Self {
        ChainComplex {
            zero,
            lo: 0,
            terms: Vec::new(),
            diffs: Vec::new(),
        }
    }

    /// `m` concentrated in `degree`.
    pub fn stalk(zero: Module<F>, m: Module<F>, degree: i64) -> Self {
        ChainComplex {
            zero,
            lo: degree,
            terms: vec![m],
            diffs: Vec::new(),
        }
    }

    pub fn zero_module(&self) -> &Module<F> {
        &self.zero
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// One past the top degree.
    pub fn end(&self) -> i64 {
        self.lo + self.terms.len() as i64
    }

    pub fn degrees(&self) -> std::ops::Range<i64> {
        self.lo..self.end()
    }

    pub fn term(&self, k: i64) -> &Module<F> {
        if k < self.lo || k >= self.end() {
            &self.zero
        } else {
            &self.terms[(k - self.lo) as usize]
        }
    }

    /// `d^k: C^k -> C^{k+1}`.
    pub fn diff(&self, k: i64) -> ModuleMap<F> {
        if k >= self.lo && k + 1 < self.end() {
            self.diffs[(k - self.lo) as usize].clone()
        } else {
            ModuleMap::zero(self.term(k), self.term(k + 1))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.is_zero())
    }

    /// Drop zero terms at both ends.
    pub fn trimmed(&self) -> Self {
        let nz: Vec<i64> = self
            .degrees()
            .filter(|&k| !self.term(k).is_zero())
            .collect();
        match (nz.first(), nz.last()) {
            (Some(&a), Some(&b)) => self.restrict(a, b + 1),
            _ => Self::zero(self.zero.clone()),
        }
    }

    /// The terms in degrees `[a, b)`, which must contain the support.
    fn restrict(&self, a: i64, b: i64) -> Self {
        ChainComplex {
            zero: self.zero.clone(),
            lo: a,
            terms: (a..b).map(|k| self.term(k).clone()).collect(),
            diffs: (a..b - 1).map(|k| self.diff(k)).collect(),
        }
    }

    /// `(C[m])^k = C^{m+k}` with differential `(-1)^m d`.
    pub fn shift(&self, m: i64) -> Self {
        let sign = if m.rem_euclid(2) == 0 {
            F::one()
        } else {
            -F::one()
        };
        ChainComplex {
            zero: self.zero.clone(),
            lo: self.lo - m,
            terms: self.terms.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.terms.is_empty() {
            return other.clone();
        }
        if other.terms.is_empty() {
            return self.clone();
        }
        let a = self.lo.min(other.lo);
        let b = self.end().max(other.end());
        ChainComplex {
            zero: self.zero.clone(),
            lo: a,
            terms: (a..b)
                .map(|k| self.term(k).direct_sum(other.term(k)))
                .collect(),
            diffs: (a..b - 1)
                .map(|k| self.diff(k).direct_sum(&other.diff(k)))
                .collect(),
        }
    }

    /// `cone(f)^k = X^{k+1} + Y^k`, `d(x, y) = (-d x, f x + d y)`.
    pub fn cone(f: &ChainMap<F>, x: &Self, y: &Self) -> Self {
        let a = (x.lo - 1).min(y.lo);
        let b = (x.end() - 1).max(y.end());
        if a >= b {
            return Self::zero(x.zero.clone());
        }
        let term = |k: i64| x.term(k + 1).direct_sum(y.term(k));
        let diffs = (a..b - 1)
            .map(|k| {
                let src = term(k);
                let tgt = term(k + 1);
                let dx = x.diff(k + 1).neg();
                let fk = f.at(k + 1, x.term(k + 1), y.term(k + 1));
                let dy = y.diff(k);
                ModuleMap::from_matrices(
                    (0..src.n_vertices())
                        .map(|v| {
                            let (x1, y0) = (x.term(k + 1).dim_at(v), y.term(k).dim_at(v));
                            let (x2, y1) = (x.term(k + 2).dim_at(v), y.term(k + 1).dim_at(v));
                            let mut m = Matrix::zeros(x2 + y1, x1 + y0);
                            m.set_block(0, 0, dx.at(v));
                            m.set_block(x2, 0, fk.at(v));
                            m.set_block(x2, x1, dy.at(v));
                            debug_assert_eq!(m.cols(), src.dim_at(v));
                            debug_assert_eq!(m.rows(), tgt.dim_at(v));
                            m
                        })
                        .collect(),
                )
            })
            .collect();
        ChainComplex {
            zero: x.zero.clone(),
            lo: a,
            terms: (a..b).map(term).collect(),
            diffs,
        }
    }

    /// Cycles and boundaries at vertex `v` in degree `k`.
    fn cycles_boundaries(&self, k: i64, v: usize) -> (Subspace<F>, Subspace<F>) {
        let z = Subspace::kernel(self.diff(k).at(v));
        let b = Subspace::column_space(self.diff(k - 1).at(v));
        (z, b)
    }

    /// Dimension vector of `H^k`.
    pub fn cohomology_dims(&self, k: i64) -> Vec<usize> {
        (0..self.zero.n_vertices())
            .map(|v| {
                let (z, b) = self.cycles_boundaries(k, v);
                z.dim() - b.dim()
            })
            .collect()
    }

    /// `H^k` as a module.
    pub fn cohomology_module(&self, ends: &[(usize, usize)], k: i64) -> Module<F> {
        let nv = self.zero.n_vertices();
        let (zs, bs): (SubspaceFamily<F>, SubspaceFamily<F>) =
            (0..nv).map(|v| self.cycles_boundaries(k, v)).unzip();
        subquotient(ends, self.term(k), &zs, &bs).0
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees()
            .all(|k| self.cohomology_dims(k).iter().all(|&d| d == 0))
    }

    /// `sum_k (-1)^k dimvec(C^k)`.
    pub fn class(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.zero.n_vertices()];
        for k in self.degrees() {
            let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
            for (o, &d) in out.iter_mut().zip(self.term(k).dims()) {
                *o += sign * d as i64;
            }
        }
        out
    }

    /// Whether every differential intertwines the arrows.
    pub fn is_module_complex(&self, ends: &[(usize, usize)]) -> bool {
        self.degrees().all(|k| {
            self.diff(k)
                .is_homomorphism(ends, self.term(k), self.term(k + 1))
        })
    }

    /// The subcomplex on a family of subspaces per degree (must be stable
    /// under the arrows and the differential).
    pub fn subcomplex(
        &self,
        ends: &[(usize, usize)],
        subs: &dyn Fn(i64) -> SubspaceFamily<F>,
    ) -> (Self, ChainMap<F>) {
        let parts: Vec<(Module<F>, ModuleMap<F>)> = self
            .degrees()
            .map(|k| self.term(k).submodule(ends, &subs(k)))
            .collect();
        let diffs = self
            .degrees()
            .take(parts.len().saturating_sub(1))
            .map(|k| {
                let i = (k - self.lo) as usize;
                let (ref src, ref inc_s) = parts[i];
                let (ref tgt, ref inc_t) = parts[i + 1];
                let d = self.diff(k);
                ModuleMap::from_matrices(
                    (0..src.n_vertices())
                        .map(|v| {
                            let basis = Subspace::from_rows(inc_t.at(v).transpose());
                            let cols: Vec<Vec<F>> = inc_s
                                .at(v)
                                .col_vecs()
                                .iter()
                                .map(|c| basis.coordinates(&d.at(v).apply(c)))
                                .collect();
                            Matrix::from_cols(cols, tgt.dim_at(v))
                        })
                        .collect(),
                )
            })
            .collect();
        let (terms, incs): (Vec<_>, Vec<_>) = parts.into_iter().unzip();
        (
            ChainComplex {
                zero: self.zero.clone(),
                lo: self.lo,
                terms,
                diffs,
            },
            ChainMap {
                lo: self.lo,
                maps: incs,
            },
        )
    }

    /// The quotient by a subcomplex given as subspace families.
    pub fn quotient_complex(
        &self,
        ends: &[(usize, usize)],
        subs: &dyn Fn(i64) -> SubspaceFamily<F>,
    ) -> (Self, ChainMap<F>) {
        let nv = self.zero.n_vertices();
        let quots: Vec<Vec<Quotient<F>>> = self
            .degrees()
            .map(|k| {
                let s = subs(k);
                (0..nv)
                    .map(|v| Quotient::new(&Subspace::full(self.term(k).dim_at(v)), &s[v]))
                    .collect()
            })
            .collect();
        let terms: Vec<Module<F>> = self
            .degrees()
            .map(|k| self.term(k).quotient(ends, &subs(k)).0)
            .collect();
        let projs: Vec<ModuleMap<F>> = self
            .degrees()
            .map(|k| self.term(k).quotient(ends, &subs(k)).1)
            .collect();
        let diffs = self
            .degrees()
            .take(terms.len().saturating_sub(1))
            .map(|k| {
                let i = (k - self.lo) as usize;
                let d = self.diff(k);
                ModuleMap::from_matrices(
                    (0..nv)
                        .map(|v| quots[i][v].induced(d.at(v), &quots[i + 1][v]))
                        .collect(),
                )
            })
            .collect();
        (
            ChainComplex {
                zero: self.zero.clone(),
                lo: self.lo,
                terms,
                diffs,
            },
            ChainMap {
                lo: self.lo,
                maps: projs,
            },
        )
    }

    pub fn to_data(&self) -> ComplexData {
        ComplexData {
            lo: self.lo,
            dims: self.terms.iter().map(|t| t.dims().to_vec()).collect(),
            actions: self
                .terms
                .iter()
                .map(|t| t.actions().iter().map(matrix_data).collect())
                .collect(),
            differentials: self
                .diffs
                .iter()
                .map(|d| d.matrices().iter().map(matrix_data).collect())
                .collect(),
        }
    }

    pub fn from_data(
        zero: Module<F>,
        ends: &[(usize, usize)],
        data: &ComplexData,
    ) -> Result<Self, HomologyError> {
        let nv = zero.n_vertices();
        if ends.len() != zero.actions().len() {
            return Err(HomologyError::Shape("arrow count does not match".into()));
        }
        if data.dims.len() != data.actions.len()
            || data.differentials.len() + 1 != data.dims.len().max(1)
        {
            return Err(HomologyError::Shape("inconsistent complex data".into()));
        }
        let mut terms = Vec::new();
        for (dims, acts) in data.dims.iter().zip(&data.actions) {
            if dims.len() != nv || acts.len() != ends.len() {
                return Err(HomologyError::Shape(
                    "term has the wrong number of vertices or arrows".into(),
                ));
            }
            let actions = ends
                .iter()
                .zip(acts)
                .map(|(&(s, t), m)| parse_matrix(m, dims[t], dims[s]))
                .collect::<Result<Vec<_>, _>>()?;
            terms.push(Module::new(dims.clone(), ends, actions));
        }
        let mut diffs = Vec::new();
        for (i, ds) in data.differentials.iter().enumerate() {
            if ds.len() != nv {
                return Err(HomologyError::Shape(
                    "differential has the wrong vertex count".into(),
                ));
            }
            let maps = (0..nv)
                .map(|v| parse_matrix(&ds[v], terms[i + 1].dim_at(v), terms[i].dim_at(v)))
                .collect::<Result<Vec<_>, _>>()?;
            let d = ModuleMap::from_matrices(maps);
            if !d.is_homomorphism(ends, &terms[i], &terms[i + 1]) {
                return Err(HomologyError::Shape(format!(
                    "differential in degree {} is not a module map",
                    data.lo + i as i64
                )));
            }
            diffs.push(d);
        }
        Self::new(zero, data.lo, terms, diffs)
    }
}

fn parse_matrix<F: Field>(
    m: &[Vec<String>],
    rows: usize,
    cols: usize,
) -> Result<Matrix<F>, HomologyError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(HomologyError::Shape("matrix has the wrong shape".into()));
    }
    let entries = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| F::parse(x).ok_or_else(|| HomologyError::Parse(x.clone())))
                .collect::<Result<Vec<F>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(entries, cols))
}

/// Matrix entries as strings, row by row.
fn matrix_data<F: Field>(m: &Matrix<F>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
        .collect()
}

/// Serializable form of a complex: per degree, a dimension vector, arrow
/// matrices and the outgoing differential per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexData {
    pub lo: i64,
    pub dims: Vec<Vec<usize>>,
    pub actions: Vec<Vec<Vec<Vec<String>>>>,
    pub differentials: Vec<Vec<Vec<Vec<String>>>>,
}

/// The subquotient `upper / lower` of `m` with the per-vertex quotients.
pub fn subquotient<F: Field>(
    ends: &[(usize, usize)],
    m: &Module<F>,
    upper: &SubspaceFamily<F>,
    lower: &SubspaceFamily<F>,
) -> (Module<F>, Vec<Quotient<F>>) {
    let quots: Vec<Quotient<F>> = upper
        .iter()
        .zip(lower)
        .map(|(u, l)| Quotient::new(u, l))
        .collect();
    let dims = quots.iter().map(|q| q.dim()).collect();
    let actions = ends
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| quots[s].induced(m.action(a), &quots[t]))
        .collect();
    (Module::new(dims, ends, actions), quots)
}

impl<F: Field> ChainMap<F> {
    pub fn at(&self, k: i64, source: &Module<F>, target: &Module<F>) -> ModuleMap<F> {
        if k >= self.lo && k < self.lo + self.maps.len() as i64 {
            self.maps[(k - self.lo) as usize].clone()
        } else {
            ModuleMap::zero(source, target)
        }
    }

    pub fn identity(c: &ChainComplex<F>) -> Self {
        ChainMap {
            lo: c.lo(),
            maps: c
                .degrees()
                .map(|k| ModuleMap::identity(c.term(k)))
                .collect(),
        }
    }

    pub fn zero(source: &ChainComplex<F>, target: &ChainComplex<F>) -> Self {
        ChainMap {
            lo: source.lo(),
            maps: source
                .degrees()
                .map(|k| ModuleMap::zero(source.term(k), target.term(k)))
                .collect(),
        }
    }

    /// Whether this commutes with the differentials.
    pub fn is_chain_map(&self, source: &ChainComplex<F>, target: &ChainComplex<F>) -> bool {
        let a = source.lo().min(target.lo()) - 1;
        let b = source.end().max(target.end());
        (a..b).all(|k| {
            let f0 = self.at(k, source.term(k), target.term(k));
            let f1 = self.at(k + 1, source.term(k + 1), target.term(k + 1));
            target.diff(k).compose(&f0) == f1.compose(&source.diff(k))
        })
    }

    pub fn compose(
        &self,
        first: &Self,
        a: &ChainComplex<F>,
        b: &ChainComplex<F>,
        c: &ChainComplex<F>,
    ) -> Self {
        ChainMap {
            lo: a.lo(),
            maps: a
                .degrees()
                .map(|k| {
                    self.at(k, b.term(k), c.term(k))
                        .compose(&first.at(k, a.term(k), b.term(k)))
                })
                .collect(),
        }
    }
}
