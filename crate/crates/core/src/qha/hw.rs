//! Standard and costandard modules, Hom spaces, standard filtrations and the
//! highest weight axioms.

use std::fmt;

use serde::Serialize;

use super::module::{family_dims, family_sum, Module, ModuleMap, SubspaceFamily};
use super::{QhaError, QuiverAlgebra};
use crate::linalg::{Field, Matrix};

/// One step of a standard filtration: the submodule generated by the weight
/// space at `weight` is `multiplicity` copies of the standard module there.
#[derive(Clone, Debug)]
pub struct FilterLayer<F> {
    pub weight: usize,
    pub multiplicity: usize,
    /// Map from `P_weight^multiplicity` onto the layer inside the current
    /// subquotient; it factors through the standard module.
    pub witness: ModuleMap<F>,
}

/// Layers from the bottom of the filtration up: larger lengths come first.
#[derive(Clone, Debug)]
pub struct StandardFiltration<F> {
    pub layers: Vec<FilterLayer<F>>,
}

impl<F> StandardFiltration<F> {
    /// `(weight, multiplicity)` for every layer.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.layers
            .iter()
            .map(|l| (l.weight, l.multiplicity))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HwAxiom {
    LengthCompatible,
    EndomorphismsScalar,
    HomsRespectOrder,
    KernelStandardFiltered,
}

impl fmt::Display for HwAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            HwAxiom::LengthCompatible => "length-compatible",
            HwAxiom::EndomorphismsScalar => "End(M_w) = k",
            HwAxiom::HomsRespectOrder => "Hom(M_y, M_w) != 0 => y <= w",
            HwAxiom::KernelStandardFiltered => "ker(P_w -> M_w) filtered by M_x, x > w",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub weight: String,
    pub axiom: HwAxiom,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl<F: Field> QuiverAlgebra<F> {
    /// `P_w` modulo the trace of the projectives `P_x` with `x` not below `w`.
    pub fn standard(&self, w: usize) -> Module<F> {
        self.standards.get_or_init(|| {
            (0..self.n_vertices())
                .map(|x| self.build_standard(x))
                .collect()
        })[w]
            .clone()
    }

    fn build_standard(&self, w: usize) -> Module<F> {
        let p = self.projective(w);
        self.quotient(&p, &self.standard_kernel(w)).0
    }

    /// The kernel of `P_w -> M_w` as a family of subspaces of `P_w`.
    pub fn standard_kernel(&self, w: usize) -> SubspaceFamily<F> {
        let outside: Vec<usize> = (0..self.n_vertices())
            .filter(|&x| !self.poset().leq(x, w))
            .collect();
        self.projective(w)
            .generated_by_vertices(self.ends(), &outside)
    }

    /// The dual of the standard module of the opposite algebra.
    pub fn costandard(&self, w: usize) -> Module<F> {
        self.costandards.get_or_init(|| {
            let op = self.opposite();
            (0..self.n_vertices())
                .map(|x| op.standard(x).dual())
                .collect()
        })[w]
            .clone()
    }

    pub fn submodule(&self, m: &Module<F>, sub: &SubspaceFamily<F>) -> (Module<F>, ModuleMap<F>) {
        m.submodule(self.ends(), sub)
    }

    pub fn quotient(&self, m: &Module<F>, sub: &SubspaceFamily<F>) -> (Module<F>, ModuleMap<F>) {
        m.quotient(self.ends(), sub)
    }

    /// A basis of `Hom(m, n)`, from the kernel of the intertwining equations.
    pub fn hom_space(&self, m: &Module<F>, n: &Module<F>) -> Vec<ModuleMap<F>> {
        let nv = self.n_vertices();
        let mut offsets = Vec::with_capacity(nv);
        let mut total = 0;
        for v in 0..nv {
            offsets.push(total);
            total += n.dim_at(v) * m.dim_at(v);
        }
        // unknown (v, i, j) is entry (i, j) of the component at v
        let var = |v: usize, i: usize, j: usize| offsets[v] + i * m.dim_at(v) + j;
        let mut rows: Vec<Vec<F>> = Vec::new();
        for (a, &(s, t)) in self.ends().iter().enumerate() {
            let (na, ma) = (n.action(a), m.action(a));
            for i in 0..n.dim_at(t) {
                for j in 0..m.dim_at(s) {
                    // (N_a F_s - F_t M_a)[i, j] = 0
                    let mut row = vec![F::zero(); total];
                    for k in 0..n.dim_at(s) {
                        let c = &na[(i, k)];
                        if !c.is_zero() {
                            let x = var(s, k, j);
                            row[x] = row[x].clone() + c.clone();
                        }
                    }
                    for k in 0..m.dim_at(t) {
                        let c = &ma[(k, j)];
                        if !c.is_zero() {
                            let x = var(t, i, k);
                            row[x] = row[x].clone() - c.clone();
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let ker = if rows.is_empty() {
            Matrix::identity(total)
        } else {
            Matrix::from_rows(rows, total).kernel_basis()
        };
        ker.col_vecs()
            .into_iter()
            .map(|x| {
                let maps = (0..nv)
                    .map(|v| {
                        let (r, c) = (n.dim_at(v), m.dim_at(v));
                        let mut mat = Matrix::zeros(r, c);
                        for i in 0..r {
                            for j in 0..c {
                                mat[(i, j)] = x[var(v, i, j)].clone();
                            }
                        }
                        mat
                    })
                    .collect();
                ModuleMap::from_matrices(maps)
            })
            .collect()
    }

    /// Sum of the images of all maps from the modules `sources` into `target`.
    pub fn trace(&self, sources: &[Module<F>], target: &Module<F>) -> SubspaceFamily<F> {
        sources.iter().fold(target.zero_family(), |acc, src| {
            self.hom_space(src, target)
                .iter()
                .fold(acc, |acc, f| family_sum(&acc, &f.image()))
        })
    }

    /// Peel off standard layers from the largest length down.
    pub fn standard_filtration(&self, m: &Module<F>) -> Result<StandardFiltration<F>, QhaError> {
        let poset = self.poset();
        let mut cur = m.clone();
        let mut layers = Vec::new();
        while !cur.is_zero() {
            let x = (0..self.n_vertices())
                .filter(|&v| cur.dim_at(v) > 0)
                .max_by_key(|&v| (poset.length(v), std::cmp::Reverse(v)))
                .expect("nonzero module has support");
            let mult = cur.dim_at(x);
            let stuck = || QhaError::NoFiltration {
                weight: poset.name(x).to_string(),
                dims: cur.dims().to_vec(),
            };
            let kernel = self.standard_kernel(x);
            let units: Vec<Vec<F>> = (0..mult)
                .map(|i| {
                    let mut e = vec![F::zero(); mult];
                    e[i] = F::one();
                    e
                })
                .collect();
            for e in &units {
                let psi = self.map_from_generators(&[x], &cur, std::slice::from_ref(e));
                if family_dims(&psi.image_of(&kernel)).iter().any(|&d| d > 0) {
                    return Err(stuck());
                }
            }
            let gens = vec![x; mult];
            let witness = self.map_from_generators(&gens, &cur, &units);
            let image = witness.image();
            let std_dims = self.standard(x).dims().to_vec();
            if family_dims(&image)
                .iter()
                .zip(&std_dims)
                .any(|(&a, &b)| a != mult * b)
            {
                return Err(stuck());
            }
            cur = self.quotient(&cur, &image).0;
            layers.push(FilterLayer {
                weight: x,
                multiplicity: mult,
                witness,
            });
        }
        Ok(StandardFiltration { layers })
    }

    /// `M_w` modulo the images of all maps `M_y -> M_w`, `y` in `divisors`.
    /// Every divisor must be a cover of `w`.
    pub fn m_i(&self, w: usize, divisors: &[usize]) -> Result<Module<F>, QhaError> {
        let poset = self.poset();
        let covers = poset.covers(w);
        for &y in divisors {
            if !covers.contains(&y) {
                return Err(QhaError::InvalidDivisor {
                    weight: poset.name(w).to_string(),
                    divisor: poset.name(y).to_string(),
                });
            }
        }
        let mw = self.standard(w);
        let sources: Vec<Module<F>> = divisors.iter().map(|&y| self.standard(y)).collect();
        let tr = self.trace(&sources, &mw);
        Ok(self.quotient(&mw, &tr).0)
    }

    /// Whether the kernel of `M_w -> L_w` is generated by the images of
    /// standard modules.
    pub fn kernel_hw_generated(&self, w: usize) -> bool {
        let mw = self.standard(w);
        let rad = mw.radical(self.ends());
        let sources: Vec<Module<F>> = (0..self.n_vertices())
            .filter(|&y| y != w)
            .map(|y| self.standard(y))
            .collect();
        family_dims(&self.trace(&sources, &mw)) == family_dims(&rad)
    }

    pub fn verify_hw_axioms(&self) -> AxiomReport {
        let poset = self.poset();
        let n = self.n_vertices();
        let mut checks = Vec::new();
        for w in 0..n {
            let name = poset.name(w).to_string();
            let mut push = |axiom, pass, detail: String| {
                checks.push(AxiomCheck {
                    weight: name.clone(),
                    axiom,
                    pass,
                    detail,
                })
            };
            let bad_len: Vec<&str> = (0..n)
                .filter(|&y| poset.lt(y, w) && poset.length(y) >= poset.length(w))
                .map(|y| poset.name(y))
                .collect();
            push(
                HwAxiom::LengthCompatible,
                bad_len.is_empty(),
                format!("violations: {bad_len:?}"),
            );

            let mw = self.standard(w);
            let end = self.hom_space(&mw, &mw).len();
            push(
                HwAxiom::EndomorphismsScalar,
                end == 1,
                format!("dim End = {end}"),
            );

            let bad_hom: Vec<&str> = (0..n)
                .filter(|&y| !poset.leq(y, w) && !self.hom_space(&self.standard(y), &mw).is_empty())
                .map(|y| poset.name(y))
                .collect();
            push(
                HwAxiom::HomsRespectOrder,
                bad_hom.is_empty(),
                format!("nonzero Hom from weights not below: {bad_hom:?}"),
            );

            let (k, _) = self.submodule(&self.projective(w), &self.standard_kernel(w));
            let (pass, detail) = match self.standard_filtration(&k) {
                Ok(f) => {
                    let bad: Vec<&str> = f
                        .layers
                        .iter()
                        .filter(|l| !poset.lt(w, l.weight))
                        .map(|l| poset.name(l.weight))
                        .collect();
                    let layers: Vec<String> = f
                        .layers
                        .iter()
                        .map(|l| format!("{}^{}", poset.name(l.weight), l.multiplicity))
                        .collect();
                    (bad.is_empty(), format!("layers [{}]", layers.join(", ")))
                }
                Err(e) => (false, e.to_string()),
            };
            push(HwAxiom::KernelStandardFiltered, pass, detail);
        }
        AxiomReport { checks }
    }
}


#[cfg(test)]
mod a2_tests {
    use super::super::load_algebra;
    use super::*;
    use crate::linalg::Rational;

    fn a2() -> QuiverAlgebra<Rational> {
        load_algebra(include_str!("../../../../algebras/a2_block.json")).unwrap()
    }

    #[test]
    fn a2_block_is_highest_weight() {
        let alg = a2();
        assert_eq!(alg.dimension(), 77);
        let report = alg.verify_hw_axioms();
        assert!(report.all_pass(), "{:?}", report.failures());
        for y in 0..6 {
            for w in 0..6 {
                let d = alg.hom_space(&alg.standard(y), &alg.costandard(w)).len();
                assert_eq!(d, usize::from(y == w));
            }
        }
        for name in ["st", "ts"] {
            assert!(alg.kernel_hw_generated(alg.weight(name).unwrap()));
        }
    }
}
