use crate::linalg::{Field, Matrix, Quotient, Subspace};

/// A finite-dimensional representation of a quiver: a vector space per vertex
/// and a matrix per arrow, of shape `dim(target) x dim(source)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module<F> {
    pub(crate) dims: Vec<usize>,
    pub(crate) actions: Vec<Matrix<F>>,
}

/// A family of linear maps, one per vertex, commuting with the arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap<F> {
    pub(crate) maps: Vec<Matrix<F>>,
}

/// Per-vertex subspaces of a module.
pub type SubspaceFamily<F> = Vec<Subspace<F>>;

impl<F: Field> Module<F> {
    /// Build from dimensions and arrow matrices. `arrows` gives
    /// `(source, target)` per arrow.
    pub fn new(dims: Vec<usize>, arrows: &[(usize, usize)], actions: Vec<Matrix<F>>) -> Self {
        assert_eq!(arrows.len(), actions.len());
        for (&(s, t), a) in arrows.iter().zip(&actions) {
            assert_eq!(
                (a.rows(), a.cols()),
                (dims[t], dims[s]),
                "arrow matrix shape"
            );
        }
        Module { dims, actions }
    }

    pub fn zero(n_vertices: usize, arrows: &[(usize, usize)]) -> Self {
        Module {
            dims: vec![0; n_vertices],
            actions: arrows.iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// One-dimensional at `w`, all arrows zero.
    pub fn simple(n_vertices: usize, arrows: &[(usize, usize)], w: usize) -> Self {
        let mut dims = vec![0; n_vertices];
        dims[w] = 1;
        let actions = arrows
            .iter()
            .map(|&(s, t)| Matrix::zeros(dims[t], dims[s]))
            .collect();
        Module { dims, actions }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn n_vertices(&self) -> usize {
        self.dims.len()
    }

    pub fn action(&self, arrow: usize) -> &Matrix<F> {
        &self.actions[arrow]
    }

    pub fn actions(&self) -> &[Matrix<F>] {
        &self.actions
    }

    /// Act on `v` at the source of `path` by each arrow in turn.
    pub fn act(&self, path: &[usize], v: &[F]) -> Vec<F> {
        path.iter()
            .fold(v.to_vec(), |acc, &a| self.actions[a].apply(&acc))
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        assert_eq!(self.n_vertices(), other.n_vertices());
        Module {
            dims: self
                .dims
                .iter()
                .zip(&other.dims)
                .map(|(a, b)| a + b)
                .collect(),
            actions: self
                .actions
                .iter()
                .zip(&other.actions)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    pub fn power(&self, m: usize, n_vertices: usize, arrows: &[(usize, usize)]) -> Self {
        (0..m).fold(Self::zero(n_vertices, arrows), |acc, _| {
            acc.direct_sum(self)
        })
    }

    /// Vector-space dual; a module over the opposite quiver.
    pub fn dual(&self) -> Self {
        Module {
            dims: self.dims.clone(),
            actions: self.actions.iter().map(|a| a.transpose()).collect(),
        }
    }

    /// Smallest submodule containing the given per-vertex subspaces.
    pub fn generated(
        &self,
        arrows: &[(usize, usize)],
        gens: &SubspaceFamily<F>,
    ) -> SubspaceFamily<F> {
        let mut spaces = gens.clone();
        loop {
            let mut changed = false;
            for (a, &(s, t)) in arrows.iter().enumerate() {
                if spaces[s].is_zero() {
                    continue;
                }
                let img = spaces[s].image(&self.actions[a]);
                if !spaces[t].contains_space(&img) {
                    spaces[t] = spaces[t].sum(&img);
                    changed = true;
                }
            }
            if !changed {
                return spaces;
            }
        }
    }

    /// The submodule generated by all vectors at the given vertices.
    pub fn generated_by_vertices(
        &self,
        arrows: &[(usize, usize)],
        vertices: &[usize],
    ) -> SubspaceFamily<F> {
        let gens = (0..self.n_vertices())
            .map(|v| {
                if vertices.contains(&v) {
                    Subspace::full(self.dims[v])
                } else {
                    Subspace::zero(self.dims[v])
                }
            })
            .collect();
        self.generated(arrows, &gens)
    }

    /// Sum of the images of radical arrows.
    pub fn radical(&self, arrows: &[(usize, usize)]) -> SubspaceFamily<F> {
        let mut spaces: SubspaceFamily<F> = self.dims.iter().map(|&d| Subspace::zero(d)).collect();
        for (a, &(_, t)) in arrows.iter().enumerate() {
            let img = Subspace::column_space(&self.actions[a]);
            spaces[t] = spaces[t].sum(&img);
        }
        spaces
    }

    pub fn is_submodule(&self, arrows: &[(usize, usize)], sub: &SubspaceFamily<F>) -> bool {
        arrows
            .iter()
            .enumerate()
            .all(|(a, &(s, t))| sub[t].contains_space(&sub[s].image(&self.actions[a])))
    }

    /// The submodule on `sub` together with its inclusion.
    pub fn submodule(
        &self,
        arrows: &[(usize, usize)],
        sub: &SubspaceFamily<F>,
    ) -> (Module<F>, ModuleMap<F>) {
        debug_assert!(self.is_submodule(arrows, sub));
        let dims: Vec<usize> = sub.iter().map(|s| s.dim()).collect();
        let actions = arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let cols: Vec<Vec<F>> = sub[s]
                    .vectors()
                    .iter()
                    .map(|v| sub[t].coordinates(&self.actions[a].apply(v)))
                    .collect();
                Matrix::from_cols(cols, dims[t])
            })
            .collect();
        let maps = sub
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| Matrix::from_cols(s.vectors(), d))
            .collect();
        (Module { dims, actions }, ModuleMap { maps })
    }

    /// The quotient by `sub` together with the projection.
    pub fn quotient(
        &self,
        arrows: &[(usize, usize)],
        sub: &SubspaceFamily<F>,
    ) -> (Module<F>, ModuleMap<F>) {
        debug_assert!(self.is_submodule(arrows, sub));
        let quots: Vec<Quotient<F>> = sub
            .iter()
            .zip(&self.dims)
            .map(|(s, &d)| Quotient::new(&Subspace::full(d), s))
            .collect();
        let dims: Vec<usize> = quots.iter().map(|q| q.dim()).collect();
        let actions = arrows
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| quots[s].induced(&self.actions[a], &quots[t]))
            .collect();
        let maps = quots
            .iter()
            .zip(&self.dims)
            .map(|(q, &d)| Self::projection(q, d))
            .collect();
        (Module { dims, actions }, ModuleMap { maps })
    }

    /// Matrix sending a vector to the coordinates of its class.
    fn projection(q: &Quotient<F>, d: usize) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..d)
            .map(|i| {
                let mut e = vec![F::zero(); d];
                e[i] = F::one();
                q.coordinates(&e)
            })
            .collect();
        Matrix::from_cols(cols, q.dim())
    }

    pub fn full_family(&self) -> SubspaceFamily<F> {
        self.dims.iter().map(|&d| Subspace::full(d)).collect()
    }

    pub fn zero_family(&self) -> SubspaceFamily<F> {
        self.dims.iter().map(|&d| Subspace::zero(d)).collect()
    }
}

/// Dimension vector of a family of subspaces.
pub fn family_dims<F: Field>(f: &SubspaceFamily<F>) -> Vec<usize> {
    f.iter().map(|s| s.dim()).collect()
}

pub fn family_sum<F: Field>(a: &SubspaceFamily<F>, b: &SubspaceFamily<F>) -> SubspaceFamily<F> {
    a.iter().zip(b).map(|(x, y)| x.sum(y)).collect()
}

impl<F: Field> ModuleMap<F> {
    pub fn from_matrices(maps: Vec<Matrix<F>>) -> Self {
        ModuleMap { maps }
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        ModuleMap {
            maps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(m: &Module<F>) -> Self {
        ModuleMap {
            maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn at(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn source_dims(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.cols()).collect()
    }

    pub fn target_dims(&self) -> Vec<usize> {
        self.maps.iter().map(|m| m.rows()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(|m| m.rank()).sum()
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Self) -> Self {
        ModuleMap {
            maps: self
                .maps
                .iter()
                .zip(&first.maps)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ModuleMap {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        ModuleMap {
            maps: self.maps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        ModuleMap {
            maps: self
                .maps
                .iter()
                .zip(&other.maps)
                .map(|(a, b)| a.direct_sum(b))
                .collect(),
        }
    }

    /// Dual map, between dual modules in the opposite direction.
    pub fn dual(&self) -> Self {
        ModuleMap {
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn kernel(&self) -> SubspaceFamily<F> {
        self.maps.iter().map(Subspace::kernel).collect()
    }

    pub fn image(&self) -> SubspaceFamily<F> {
        self.maps.iter().map(Subspace::column_space).collect()
    }

    /// Image of a family of subspaces of the source.
    pub fn image_of(&self, sub: &SubspaceFamily<F>) -> SubspaceFamily<F> {
        self.maps.iter().zip(sub).map(|(m, s)| s.image(m)).collect()
    }

    /// Checks that the map intertwines the arrow actions.
    pub fn is_homomorphism(
        &self,
        arrows: &[(usize, usize)],
        source: &Module<F>,
        target: &Module<F>,
    ) -> bool {
        arrows.iter().enumerate().all(|(a, &(s, t))| {
            target.actions[a].mul(&self.maps[s]) == self.maps[t].mul(&source.actions[a])
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    fn a2_line() -> (Vec<(usize, usize)>, Module<Rational>) {
        // 0 -> 1 with identity
        let arrows = vec![(0, 1)];
        let m = Module::new(vec![1, 1], &arrows, vec![Matrix::identity(1)]);
        (arrows, m)
    }

    #[test]
    fn generated_and_quotient() {
        let (arrows, m) = a2_line();
        let sub = m.generated_by_vertices(&arrows, &[0]);
        assert_eq!(family_dims(&sub), vec![1, 1]);
        let sub = m.generated_by_vertices(&arrows, &[1]);
        assert_eq!(family_dims(&sub), vec![0, 1]);
        let (q, p) = m.quotient(&arrows, &sub);
        assert_eq!(q.dims(), &[1, 0]);
        assert!(p.is_homomorphism(&arrows, &m, &q));
        let (s, i) = m.submodule(&arrows, &sub);
        assert_eq!(s.dims(), &[0, 1]);
        assert!(i.is_homomorphism(&arrows, &s, &m));
        assert!(p.compose(&i).is_zero());
    }

    #[test]
    fn radical_of_line() {
        let (arrows, m) = a2_line();
        assert_eq!(family_dims(&m.radical(&arrows)), vec![0, 1]);
        assert_eq!(
            m.act(&[0], &[Rational::from_i64(3)]),
            vec![Rational::from_i64(3)]
        );
    }
}
