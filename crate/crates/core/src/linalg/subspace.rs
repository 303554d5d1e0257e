use super::field::Field;
use super::matrix::Matrix;

/// A linear subspace of `F^n`, stored as the nonzero rows of a reduced row
/// echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient);
        }
        Self::from_rows(Matrix::from_rows(vectors.to_vec(), ambient))
    }

    /// Row space of `m`.
    pub fn from_rows(m: Matrix<F>) -> Self {
        let ambient = m.cols();
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix<F>) -> Self {
        Self::from_rows(m.transpose())
    }

    /// Null space of `m`.
    pub fn kernel(m: &Matrix<F>) -> Self {
        Self::from_rows(m.kernel_basis().transpose())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors as rows.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    /// Subtract basis rows to clear every pivot coordinate of `v`.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] = v[j].clone() - c.clone() * b.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in this basis. `v` must lie in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Vec<F> {
        debug_assert!(self.contains(v));
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Self::from_rows(self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ambient);
        }
        // a*B1 = b*B2  <=>  [B1; -B2]^T (a, b) = 0
        let stacked = self.basis.vstack(&other.basis.neg());
        let ker = stacked.transpose().kernel_basis();
        let k1 = self.dim();
        let vecs: Vec<Vec<F>> = ker
            .col_vecs()
            .into_iter()
            .map(|c| {
                let a = &c[..k1];
                combine(self.basis.row_vecs().iter(), a, self.ambient)
            })
            .collect();
        Self::span(self.ambient, &vecs)
    }

    /// `{x in self : map(x) in target}` where `map` acts on column vectors.
    pub fn preimage_within(&self, map: &Matrix<F>, target: &Self) -> Self {
        assert_eq!(map.cols(), self.ambient);
        assert_eq!(map.rows(), target.ambient);
        if self.is_zero() {
            return self.clone();
        }
        let images: Vec<Vec<F>> = self
            .vectors()
            .iter()
            .map(|v| target.reduce(&map.apply(v)))
            .collect();
        let m = Matrix::from_cols(images, target.ambient);
        let ker = m.kernel_basis();
        let vecs: Vec<Vec<F>> = ker
            .col_vecs()
            .iter()
            .map(|c| combine(self.basis.row_vecs().iter(), c, self.ambient))
            .collect();
        Self::span(self.ambient, &vecs)
    }

    /// Image of this subspace under `map`.
    pub fn image(&self, map: &Matrix<F>) -> Self {
        let vecs: Vec<Vec<F>> = self.vectors().iter().map(|v| map.apply(v)).collect();
        Self::span(map.rows(), &vecs)
    }
}

fn combine<'a, F: Field>(rows: impl Iterator<Item = &'a Vec<F>>, coeffs: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (row, c) in rows.zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

/// The quotient `upper / lower` of nested subspaces, with a fixed basis of
/// representatives.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    lower: Subspace<F>,
    reps: Subspace<F>,
}

impl<F: Field> Quotient<F> {
    pub fn new(upper: &Subspace<F>, lower: &Subspace<F>) -> Self {
        debug_assert!(upper.contains_space(lower));
        let reduced: Vec<Vec<F>> = upper.vectors().iter().map(|v| lower.reduce(v)).collect();
        Quotient {
            lower: lower.clone(),
            reps: Subspace::span(upper.ambient(), &reduced),
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn ambient(&self) -> usize {
        self.reps.ambient()
    }

    pub fn lower(&self) -> &Subspace<F> {
        &self.lower
    }

    /// Representative vectors for the quotient basis.
    pub fn representatives(&self) -> Vec<Vec<F>> {
        self.reps.vectors()
    }

    /// Coordinates of the class of `v` (which must lie in the upper space).
    pub fn coordinates(&self, v: &[F]) -> Vec<F> {
        let r = self.lower.reduce(v);
        self.reps.coordinates(&r)
    }

    /// Matrix of the map induced by `map` from `self` to `target`.
    pub fn induced(&self, map: &Matrix<F>, target: &Quotient<F>) -> Matrix<F> {
        let cols: Vec<Vec<F>> = self
            .representatives()
            .iter()
            .map(|v| target.coordinates(&map.apply(v)))
            .collect();
        Matrix::from_cols(cols, target.dim())
    }
}
