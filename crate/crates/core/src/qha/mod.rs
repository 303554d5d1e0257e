//! Finite-dimensional quiver algebras with a weight poset on the vertices.
//!
//! Conventions: paths compose left to right, modules are representations
//! (a matrix per arrow acting on column vectors), and the projective `P_x`
//! is spanned by the paths starting at `x`. An arrow `a: y -> z` acts on
//! `P_x` by appending `a`, so `Hom(P_x, M) = M_x`.

mod hw;
mod module;

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use serde_json::Value;
use thiserror::Error;

use crate::coxeter::{CoxeterError, WeightPoset};
use crate::linalg::{Field, Matrix, Subspace};

pub use hw::{AxiomCheck, AxiomReport, FilterLayer, HwAxiom, StandardFiltration};
pub use module::{family_dims, family_sum, Module, ModuleMap, SubspaceFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QhaError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("path basis does not stabilize at bound {bound} (vertex {vertex})")]
    BasisUnstable { vertex: String, bound: usize },
    #[error("non-admissible relation: {0}")]
    NonAdmissible(String),
    #[error("field mismatch: file declares {declared}, requested {requested}")]
    FieldMismatch { declared: String, requested: String },
    #[error("unknown weight `{0}`")]
    UnknownWeight(String),
    #[error("{divisor} is not a cover of {weight}")]
    InvalidDivisor { weight: String, divisor: String },
    #[error("no standard filtration: stuck at weight {weight} with dimension vector {dims:?}")]
    NoFiltration { weight: String, dims: Vec<usize> },
    #[error(transparent)]
    Poset(#[from] CoxeterError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

/// A linear combination of parallel paths, each of length at least 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F> {
    pub terms: Vec<(F, Vec<usize>)>,
}

/// The field declared by an algebra file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::Prime(p) => p.to_string(),
        }
    }
}

/// Basis of a projective `P_x`: basis paths grouped by their end vertex.
#[derive(Clone, Debug)]
pub struct Projective<F> {
    pub vertex: usize,
    pub paths: Vec<Vec<Vec<usize>>>,
    pub module: Module<F>,
}

#[derive(Clone, Debug)]
pub struct QuiverAlgebra<F> {
    poset: WeightPoset,
    arrows: Vec<Arrow>,
    ends: Vec<(usize, usize)>,
    relations: Vec<Relation<F>>,
    path_bound: usize,
    projectives: Vec<Projective<F>>,
    opposite: OnceLock<Box<QuiverAlgebra<F>>>,
    standards: OnceLock<Vec<Module<F>>>,
    costandards: OnceLock<Vec<Module<F>>>,
}

/// Read the `field` key of an algebra file.
pub fn field_spec(text: &str) -> Result<FieldSpec, QhaError> {
    let v: Value = serde_json::from_str(text).map_err(|e| QhaError::Parse(e.to_string()))?;
    parse_field(v.get("field"))
}

fn parse_field(v: Option<&Value>) -> Result<FieldSpec, QhaError> {
    match v {
        None => Ok(FieldSpec::Rational),
        Some(Value::String(s)) if s == "Q" => Ok(FieldSpec::Rational),
        Some(Value::String(s)) => s
            .parse::<u64>()
            .map(FieldSpec::Prime)
            .map_err(|_| QhaError::Parse(format!("unknown field `{s}`"))),
        Some(Value::Number(n)) => n
            .as_u64()
            .map(FieldSpec::Prime)
            .ok_or_else(|| QhaError::Parse(format!("unknown field `{n}`"))),
        Some(other) => Err(QhaError::Parse(format!("unknown field `{other}`"))),
    }
}

fn parse_coeff<F: Field>(v: &Value) -> Result<F, QhaError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(QhaError::Parse(format!("bad coefficient {v}"))),
    };
    F::parse(&text).ok_or_else(|| QhaError::Parse(format!("bad coefficient `{text}`")))
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value, QhaError> {
    v.get(key)
        .ok_or_else(|| QhaError::Parse(format!("missing key `{key}`")))
}

fn get_str<'a>(v: &'a Value, key: &str) -> Result<&'a str, QhaError> {
    get(v, key)?
        .as_str()
        .ok_or_else(|| QhaError::Parse(format!("`{key}` must be a string")))
}

fn get_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, QhaError> {
    get(v, key)?
        .as_array()
        .ok_or_else(|| QhaError::Parse(format!("`{key}` must be a list")))
}

/// Parse an algebra file. `F` must match the declared field.
pub fn load_algebra<F: Field>(text: &str) -> Result<QuiverAlgebra<F>, QhaError> {
    let v: Value = serde_json::from_str(text).map_err(|e| QhaError::Parse(e.to_string()))?;
    let declared = parse_field(v.get("field"))?;
    if declared.label() != F::label() {
        return Err(QhaError::FieldMismatch {
            declared: declared.label(),
            requested: F::label(),
        });
    }

    let mut names = Vec::new();
    let mut lengths = Vec::new();
    for vert in get_array(&v, "vertices")? {
        names.push(get_str(vert, "name")?.to_string());
        lengths.push(
            get(vert, "length")?
                .as_i64()
                .ok_or_else(|| QhaError::Parse("vertex length must be an integer".into()))?,
        );
    }
    let index: HashMap<String, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect();
    let vertex = |n: &Value| -> Result<usize, QhaError> {
        let s = n
            .as_str()
            .ok_or_else(|| QhaError::Parse(format!("vertex name expected, got {n}")))?;
        index
            .get(s)
            .copied()
            .ok_or_else(|| QhaError::Parse(format!("unknown vertex `{s}`")))
    };

    let mut covers = Vec::new();
    for pair in get_array(&v, "order")? {
        let pair = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| QhaError::Parse("order entries must be pairs".into()))?;
        covers.push((vertex(&pair[0])?, vertex(&pair[1])?));
    }
    let poset = WeightPoset::from_covers(names, lengths, &covers)?;

    let mut arrows = Vec::new();
    for a in get_array(&v, "arrows")? {
        arrows.push(Arrow {
            source: vertex(get(a, "from")?)?,
            target: vertex(get(a, "to")?)?,
            name: get_str(a, "name")?.to_string(),
        });
    }
    let arrow_index: HashMap<&str, usize> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.name.as_str(), i))
        .collect();
    if arrow_index.len() != arrows.len() {
        return Err(QhaError::Parse("duplicate arrow names".into()));
    }

    let mut relations = Vec::new();
    for r in get_array(&v, "relations")? {
        let terms = r
            .as_array()
            .ok_or_else(|| QhaError::Parse("a relation must be a list of terms".into()))?;
        let mut parsed = Vec::new();
        for t in terms {
            let coeff: F = parse_coeff(get(t, "coeff")?)?;
            let mut path = Vec::new();
            for a in get_array(t, "path")? {
                let name = a
                    .as_str()
                    .ok_or_else(|| QhaError::Parse("path entries must be arrow names".into()))?;
                path.push(
                    *arrow_index
                        .get(name)
                        .ok_or_else(|| QhaError::Parse(format!("unknown arrow `{name}`")))?,
                );
            }
            parsed.push((coeff, path));
        }
        relations.push(Relation { terms: parsed });
    }
    let path_bound = get(&v, "path_bound")?
        .as_u64()
        .ok_or_else(|| QhaError::Parse("`path_bound` must be a non-negative integer".into()))?
        as usize;
    QuiverAlgebra::new(poset, arrows, relations, path_bound)
}

/// Column order on paths: longer first, then lexicographic.
fn path_key(p: &[usize]) -> (std::cmp::Reverse<usize>, Vec<usize>) {
    (std::cmp::Reverse(p.len()), p.to_vec())
}

type Sparse<F> = BTreeMap<usize, F>;

/// Echelon basis of sparse vectors keyed by their leading column.
struct Echelon<F> {
    rows: HashMap<usize, Sparse<F>>,
}

impl<F: Field> Echelon<F> {
    fn reduce(&self, mut v: Sparse<F>) -> Sparse<F> {
        let mut cursor = 0;
        while let Some((&c, coef)) = v.range(cursor..).next() {
            let coef = coef.clone();
            if let Some(row) = self.rows.get(&c) {
                for (&k, x) in row {
                    let val = v.remove(&k).unwrap_or_else(F::zero) - coef.clone() * x.clone();
                    if !val.is_zero() {
                        v.insert(k, val);
                    }
                }
            }
            cursor = c + 1;
        }
        v
    }

    /// Insert `v`; returns the stored row if it was new.
    fn insert(&mut self, v: Sparse<F>) -> Option<Sparse<F>> {
        let v = self.reduce(v);
        let (&lead, c) = v.iter().next()?;
        let inv = c.inv();
        let row: Sparse<F> = v
            .iter()
            .map(|(&k, x)| (k, x.clone() * inv.clone()))
            .collect();
        self.rows.insert(lead, row.clone());
        Some(row)
    }
}

impl<F: Field> QuiverAlgebra<F> {
    pub fn new(
        poset: WeightPoset,
        arrows: Vec<Arrow>,
        relations: Vec<Relation<F>>,
        path_bound: usize,
    ) -> Result<Self, QhaError> {
        let n = poset.len();
        for a in &arrows {
            if a.source >= n || a.target >= n {
                return Err(QhaError::Parse(format!("arrow `{}` out of range", a.name)));
            }
        }
        let ends: Vec<(usize, usize)> = arrows.iter().map(|a| (a.source, a.target)).collect();
        for (k, r) in relations.iter().enumerate() {
            if r.terms.is_empty() {
                return Err(QhaError::NonAdmissible(format!("relation {k} is empty")));
            }
            let mut endpoints = None;
            for (_, p) in &r.terms {
                if p.len() < 2 {
                    return Err(QhaError::NonAdmissible(format!(
                        "relation {k} has a term of length {}",
                        p.len()
                    )));
                }
                if p.windows(2).any(|w| ends[w[0]].1 != ends[w[1]].0) {
                    return Err(QhaError::NonAdmissible(format!(
                        "relation {k} contains a non-composable path"
                    )));
                }
                let e = (ends[p[0]].0, ends[*p.last().unwrap()].1);
                if *endpoints.get_or_insert(e) != e {
                    return Err(QhaError::NonAdmissible(format!(
                        "relation {k} mixes paths with different endpoints"
                    )));
                }
            }
        }
        let mut alg = QuiverAlgebra {
            poset,
            arrows,
            ends,
            relations,
            path_bound,
            projectives: Vec::new(),
            opposite: OnceLock::new(),
            standards: OnceLock::new(),
            costandards: OnceLock::new(),
        };
        alg.projectives = (0..n)
            .map(|x| alg.compute_projective(x))
            .collect::<Result<_, _>>()?;
        Ok(alg)
    }

    /// All paths from `x` of length at most `max_len`.
    fn paths_from(&self, x: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                let end = self.path_end(x, p);
                for (a, &(s, _)) in self.ends.iter().enumerate() {
                    if s == end {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    fn path_end(&self, x: usize, p: &[usize]) -> usize {
        p.last().map_or(x, |&a| self.ends[a].1)
    }

    fn compute_projective(&self, x: usize) -> Result<Projective<F>, QhaError> {
        let top = self.path_bound + 1;
        let mut paths = self.paths_from(x, top);
        paths.sort_by_key(|p| path_key(p));
        let index: HashMap<Vec<usize>, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let to_sparse = |terms: Vec<(F, Vec<usize>)>| -> Sparse<F> {
            let mut v = Sparse::new();
            for (c, p) in terms {
                if p.len() > top {
                    continue;
                }
                let i = index[&p];
                let val = v.remove(&i).unwrap_or_else(F::zero) + c;
                if !val.is_zero() {
                    v.insert(i, val);
                }
            }
            v
        };

        let mut ech = Echelon {
            rows: HashMap::new(),
        };
        let mut queue: Vec<Sparse<F>> = Vec::new();
        for r in &self.relations {
            let (src, _) = self.ends[r.terms[0].1[0]];
            for p in paths.iter().filter(|p| self.path_end(x, p) == src) {
                let terms = r
                    .terms
                    .iter()
                    .map(|(c, q)| {
                        let mut full = p.clone();
                        full.extend(q);
                        (c.clone(), full)
                    })
                    .collect();
                queue.push(to_sparse(terms));
            }
        }
        // close under right multiplication by arrows
        while let Some(v) = queue.pop() {
            let Some(row) = ech.insert(v) else { continue };
            let end = self.path_end(x, &paths[*row.keys().next().unwrap()]);
            for (a, &(s, _)) in self.ends.iter().enumerate() {
                if s != end {
                    continue;
                }
                let terms = row
                    .iter()
                    .map(|(&k, c)| {
                        let mut q = paths[k].clone();
                        q.push(a);
                        (c.clone(), q)
                    })
                    .collect();
                let w = to_sparse(terms);
                if !w.is_empty() {
                    queue.push(w);
                }
            }
        }
        if let Some(p) = paths
            .iter()
            .find(|p| p.len() == top && !ech.rows.contains_key(&index[*p]))
        {
            return Err(QhaError::BasisUnstable {
                vertex: self.poset.name(self.path_end(x, p)).to_string(),
                bound: self.path_bound,
            });
        }

        let n = self.poset.len();
        let mut basis: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        for p in paths.iter().rev() {
            if !ech.rows.contains_key(&index[p]) {
                basis[self.path_end(x, p)].push(p.clone());
            }
        }
        for b in &mut basis {
            b.sort_by_key(|p| (p.len(), p.clone()));
        }
        let position: HashMap<&Vec<usize>, usize> = basis
            .iter()
            .flat_map(|b| b.iter().enumerate().map(|(k, p)| (p, k)))
            .collect();
        let dims: Vec<usize> = basis.iter().map(|b| b.len()).collect();
        let actions = self
            .ends
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let cols = basis[s]
                    .iter()
                    .map(|p| {
                        let mut q = p.clone();
                        q.push(a);
                        let mut col = vec![F::zero(); dims[t]];
                        let mut unit = Sparse::new();
                        unit.insert(index[&q], F::one());
                        for (k, c) in ech.reduce(unit) {
                            col[position[&paths[k]]] = c;
                        }
                        col
                    })
                    .collect();
                Matrix::from_cols(cols, dims[t])
            })
            .collect();
        Ok(Projective {
            vertex: x,
            paths: basis,
            module: Module { dims, actions },
        })
    }

    /// The algebra with every arrow and relation path reversed.
    pub fn opposite(&self) -> &Self {
        self.opposite
            .get_or_init(|| Box::new(self.build_opposite()))
    }

    fn build_opposite(&self) -> Self {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                source: a.target,
                target: a.source,
                name: a.name.clone(),
            })
            .collect();
        let relations = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r
                    .terms
                    .iter()
                    .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                    .collect(),
            })
            .collect();
        QuiverAlgebra::new(self.poset.clone(), arrows, relations, self.path_bound)
            .expect("the opposite of a finite-dimensional algebra is finite-dimensional")
    }

    pub fn poset(&self) -> &WeightPoset {
        &self.poset
    }

    pub fn n_vertices(&self) -> usize {
        self.poset.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// `(source, target)` per arrow.
    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn path_bound(&self) -> usize {
        self.path_bound
    }

    pub fn dimension(&self) -> usize {
        self.projectives.iter().map(|p| p.module.total_dim()).sum()
    }

    pub fn weight(&self, name: &str) -> Result<usize, QhaError> {
        self.poset
            .index(name)
            .ok_or_else(|| QhaError::UnknownWeight(name.to_string()))
    }

    pub fn projective_data(&self, x: usize) -> &Projective<F> {
        &self.projectives[x]
    }

    pub fn projective(&self, x: usize) -> Module<F> {
        self.projectives[x].module.clone()
    }

    pub fn simple(&self, x: usize) -> Module<F> {
        Module::simple(self.n_vertices(), &self.ends, x)
    }

    pub fn zero_module(&self) -> Module<F> {
        Module::zero(self.n_vertices(), &self.ends)
    }

    /// Whether every relation acts by zero on `m`.
    pub fn satisfies_relations(&self, m: &Module<F>) -> bool {
        self.relations.iter().all(|r| {
            let (s, _) = self.ends[r.terms[0].1[0]];
            (0..m.dim_at(s)).all(|i| {
                let mut e = vec![F::zero(); m.dim_at(s)];
                e[i] = F::one();
                let mut acc: Option<Vec<F>> = None;
                for (c, p) in &r.terms {
                    let v: Vec<F> = m.act(p, &e).into_iter().map(|x| x * c.clone()).collect();
                    acc = Some(match acc {
                        None => v,
                        Some(a) => a.into_iter().zip(v).map(|(x, y)| x + y).collect(),
                    });
                }
                acc.unwrap().iter().all(|x| x.is_zero())
            })
        })
    }

    /// Direct sum of projectives `P_{gens[0]} + P_{gens[1]} + ...`.
    pub fn projective_sum(&self, gens: &[usize]) -> Module<F> {
        gens.iter().fold(self.zero_module(), |acc, &x| {
            acc.direct_sum(&self.projectives[x].module)
        })
    }

    /// Basis labels `(generator, path)` of a projective sum at vertex `v`.
    pub fn projective_sum_labels(&self, gens: &[usize], v: usize) -> Vec<(usize, Vec<usize>)> {
        gens.iter()
            .enumerate()
            .flat_map(|(i, &x)| {
                self.projectives[x].paths[v]
                    .iter()
                    .map(move |p| (i, p.clone()))
            })
            .collect()
    }

    /// The map from a projective sum sending generator `i` to `images[i]`,
    /// a vector of `target` at vertex `gens[i]`.
    pub fn map_from_generators(
        &self,
        gens: &[usize],
        target: &Module<F>,
        images: &[Vec<F>],
    ) -> ModuleMap<F> {
        assert_eq!(gens.len(), images.len());
        let maps = (0..self.n_vertices())
            .map(|v| {
                let cols = self
                    .projective_sum_labels(gens, v)
                    .iter()
                    .map(|(i, p)| target.act(p, &images[*i]))
                    .collect();
                Matrix::from_cols(cols, target.dim_at(v))
            })
            .collect();
        ModuleMap { maps }
    }

    /// Generator images of a map out of a projective sum.
    pub fn generator_images(&self, gens: &[usize], f: &ModuleMap<F>) -> Vec<Vec<F>> {
        gens.iter()
            .enumerate()
            .map(|(i, &x)| {
                let offset: usize = gens[..i]
                    .iter()
                    .map(|&y| self.projectives[y].module.dim_at(x))
                    .sum();
                f.at(x).col(offset)
            })
            .collect()
    }

    /// A projective cover: generators at each vertex are a basis of a
    /// complement of the radical.
    pub fn projective_cover(&self, m: &Module<F>) -> (Vec<usize>, ModuleMap<F>) {
        let rad = m.radical(&self.ends);
        let mut gens = Vec::new();
        let mut images = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            let d = m.dim_at(v);
            let mut span = r.clone();
            for i in 0..d {
                let mut e = vec![F::zero(); d];
                e[i] = F::one();
                if !span.contains(&e) {
                    span = span.sum(&Subspace::span(d, &[e.clone()]));
                    gens.push(v);
                    images.push(e);
                }
            }
        }
        let f = self.map_from_generators(&gens, m, &images);
        (gens, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Fp, Rational};

    pub(crate) fn a1_text() -> &'static str {
        include_str!("../../../../algebras/a1_block.json")
    }

    #[test]
    fn a1_dimensions() {
        let alg: QuiverAlgebra<Rational> = load_algebra(a1_text()).unwrap();
        assert_eq!(alg.dimension(), 5);
        let (e, s) = (alg.weight("e").unwrap(), alg.weight("s").unwrap());
        assert_eq!(alg.projective(e).dims(), &[2, 1]);
        assert_eq!(alg.projective(s).dims(), &[1, 1]);
        for x in [e, s] {
            assert!(alg.satisfies_relations(&alg.projective(x)));
        }
    }

    #[test]
    fn semisimple_point() {
        let text = r#"{"field":"Q","vertices":[{"name":"e","length":0}],
            "order":[],"arrows":[],"relations":[],"path_bound":0}"#;
        let alg: QuiverAlgebra<Rational> = load_algebra(text).unwrap();
        assert_eq!(alg.dimension(), 1);
        assert_eq!(alg.projective(0), alg.simple(0));
    }

    #[test]
    fn rejects_short_relation() {
        let text = r#"{"field":"Q","vertices":[{"name":"e","length":0},{"name":"s","length":1}],
            "order":[["e","s"]],"arrows":[{"from":"e","to":"s","name":"a"}],
            "relations":[[{"coeff":1,"path":["a"]}]],"path_bound":1}"#;
        assert!(matches!(
            load_algebra::<Rational>(text),
            Err(QhaError::NonAdmissible(_))
        ));
    }

    #[test]
    fn rejects_unstable_basis() {
        let text = r#"{"field":"Q","vertices":[{"name":"e","length":0},{"name":"s","length":1}],
            "order":[["e","s"]],"arrows":[{"from":"e","to":"s","name":"a"},{"from":"s","to":"e","name":"b"}],
            "relations":[],"path_bound":4}"#;
        assert!(matches!(
            load_algebra::<Rational>(text),
            Err(QhaError::BasisUnstable { .. })
        ));
        assert!(matches!(
            load_algebra::<Rational>("{"),
            Err(QhaError::Parse(_))
        ));
    }

    #[test]
    fn prime_field_and_mismatch() {
        let text = a1_text().replace("\"Q\"", "7");
        let alg: QuiverAlgebra<Fp<7>> = load_algebra(&text).unwrap();
        assert_eq!(alg.dimension(), 5);
        assert!(matches!(
            load_algebra::<Rational>(&text),
            Err(QhaError::FieldMismatch { .. })
        ));
        assert_eq!(field_spec(&text).unwrap(), FieldSpec::Prime(7));
    }

    #[test]
    fn opposite_round_trip() {
        let alg: QuiverAlgebra<Rational> = load_algebra(a1_text()).unwrap();
        let op = alg.opposite();
        assert_eq!(op.dimension(), alg.dimension());
        let back = op.opposite();
        for x in 0..2 {
            assert_eq!(back.projective(x), alg.projective(x));
        }
    }

    #[test]
    fn projective_cover_of_projective() {
        let alg: QuiverAlgebra<Rational> = load_algebra(a1_text()).unwrap();
        let p = alg.projective(0);
        let (gens, f) = alg.projective_cover(&p);
        assert_eq!(gens, vec![0]);
        assert!(f.is_homomorphism(alg.ends(), &p, &p));
        assert_eq!(f.rank(), p.total_dim());
    }
}
