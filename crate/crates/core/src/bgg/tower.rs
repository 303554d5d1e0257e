use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::render::{render_bgg_terms, sum_label, Grid, GridArrow, GridCell, SsReport};
use super::{
    euler_characteristic, expand_in_standards, heart_shift, heart_witness, is_coconnective,
    is_connective, BggError, DelormeReport, ExtTable,
};
use crate::homology::{
    lift_chain_map, precompose_matrix, projective_model, ChainComplex, ChainMap, FilteredComplex,
    ProjModel, SSPage, DEFAULT_DEPTH_BOUND,
};
use crate::klpoly::GradedMultiplicity;
use crate::linalg::{Field, Matrix, Quotient, Subspace};
use crate::qha::{ModuleMap, QuiverAlgebra, SubspaceFamily};

fn lengths<F: Field>(alg: &QuiverAlgebra<F>) -> Vec<i64> {
    alg.poset().lengths().to_vec()
}

fn minimal_model<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<ProjModel<F>, BggError> {
    Ok(projective_model(alg, n, DEFAULT_DEPTH_BOUND)?.minimize(alg))
}

fn table_from_model<F: Field>(alg: &QuiverAlgebra<F>, m: &ProjModel<F>) -> ExtTable {
    (0..alg.n_vertices())
        .map(|w| m.complex.ext_dims(alg, &alg.costandard(w)))
        .collect()
}

/// `dim Ext^n(N, A_w)` for every weight.
pub fn ext_table<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<ExtTable, BggError> {
    Ok(table_from_model(alg, &minimal_model(alg, n)?))
}

/// The shift `m` putting `N[m]` in the heart, if any.
pub fn heart_test<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<Option<i64>, BggError> {
    Ok(heart_shift(&lengths(alg), &ext_table(alg, n)?))
}

pub fn coconnective_test<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<bool, BggError> {
    Ok(is_coconnective(&lengths(alg), &ext_table(alg, n)?))
}

pub fn connective_test<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<bool, BggError> {
    Ok(is_connective(&lengths(alg), &ext_table(alg, n)?))
}

/// Filtration by the submodules generated at weights of length at least
/// `l_top + p`, for `p` from `l_bottom - l_top` to `0`.
fn length_filtration<F: Field>(alg: &QuiverAlgebra<F>, c: ChainComplex<F>) -> FilteredComplex<F> {
    let poset = alg.poset();
    let top = poset.max_length();
    let bot = poset.min_length();
    let ends = alg.ends();
    let terms = c.clone();
    FilteredComplex::new(c, bot - top, 0, |p, k| {
        let verts: Vec<usize> = (0..poset.len())
            .filter(|&x| poset.length(x) >= top + p)
            .collect();
        terms.term(k).generated_by_vertices(ends, &verts)
    })
}

/// `F^p / F^{p+1}` as a complex of modules.
fn graded_piece<F: Field>(
    alg: &QuiverAlgebra<F>,
    fc: &FilteredComplex<F>,
    p: i64,
) -> ChainComplex<F> {
    let ends = alg.ends();
    let (sub, _) = fc.complex.subcomplex(ends, &|k| fc.fil(p, k));
    let lower = |k: i64| -> SubspaceFamily<F> {
        fc.fil(p, k)
            .iter()
            .zip(fc.fil(p + 1, k))
            .map(|(u, l)| {
                let coords: Vec<Vec<F>> = l.vectors().iter().map(|x| u.coordinates(x)).collect();
                Subspace::span(u.dim(), &coords)
            })
            .collect()
    };
    sub.quotient_complex(ends, &lower).0
}

/// One level of the derived resolution: the layer of standards of length
/// `level` and the multiplicity complexes read off from it.
#[derive(Clone, Debug)]
pub struct TowerLevel<F> {
    pub level: i64,
    pub p: i64,
    /// `F^p / F^{p+1}`, a complex of sums of standards of length `level`.
    pub layer: ChainComplex<F>,
    /// `V_w` for each weight of this length, graded by row `q`.
    pub multiplicities: Vec<(usize, GradedMultiplicity)>,
}

/// A derived BGG resolution: the stages `F^p` of the length filtration on
/// a minimal projective model, with layers from the top length down.
#[derive(Clone, Debug)]
pub struct ResolutionTower<F> {
    pub l_top: i64,
    pub l_bottom: i64,
    pub levels: Vec<TowerLevel<F>>,
    /// `V_w` per weight, graded by row `q`.
    pub multiplicities: Vec<GradedMultiplicity>,
    lengths: Vec<i64>,
    filtered: FilteredComplex<F>,
}

impl<F: Field> ResolutionTower<F> {
    pub fn v(&self, w: usize) -> &GradedMultiplicity {
        &self.multiplicities[w]
    }

    /// `V_w` regraded by Ext degree: row `q` holds `Ext^{l_top - l_w - q}`.
    pub fn v_ext_degrees(&self, w: usize) -> GradedMultiplicity {
        self.multiplicities[w]
            .iter()
            .map(|(&q, &d)| (self.l_top - self.lengths[w] - q, d))
            .collect()
    }

    pub fn filtered(&self) -> &FilteredComplex<F> {
        &self.filtered
    }

    /// The stage `F^p` as a subcomplex of the projective model.
    pub fn stage(&self, alg: &QuiverAlgebra<F>, p: i64) -> ChainComplex<F> {
        self.filtered
            .complex
            .subcomplex(alg.ends(), &|k| self.filtered.fil(p, k))
            .0
    }

    /// Whether each layer has terms and cohomology that are sums of
    /// standards of its length, with the recorded multiplicities.
    pub fn layers_are_standard(&self, alg: &QuiverAlgebra<F>) -> bool {
        let std_dims: Vec<Vec<usize>> = (0..alg.n_vertices())
            .map(|w| alg.standard(w).dims().to_vec())
            .collect();
        let combo = |mults: &[(usize, usize)]| -> Vec<usize> {
            let mut out = vec![0; alg.n_vertices()];
            for &(w, m) in mults {
                for (o, &d) in out.iter_mut().zip(&std_dims[w]) {
                    *o += m * d;
                }
            }
            out
        };
        self.levels.iter().all(|lv| {
            let ws = alg.poset().level(lv.level);
            lv.layer.degrees().all(|k| {
                let term = lv.layer.term(k).dims().to_vec();
                let tm: Vec<(usize, usize)> = ws.iter().map(|&w| (w, term[w])).collect();
                let h = lv.layer.cohomology_dims(k);
                let hm: Vec<(usize, usize)> = lv
                    .multiplicities
                    .iter()
                    .map(|(w, gm)| (*w, gm.get(&(k - lv.p)).copied().unwrap_or(0)))
                    .collect();
                combo(&tm) == term && combo(&hm) == h
            })
        })
    }
}

pub fn derived_resolution<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<ResolutionTower<F>, BggError> {
    let model = minimal_model(alg, n)?;
    let fc = length_filtration(alg, model.complex.to_chain_complex(alg));
    let poset = alg.poset();
    let (top, bot) = (poset.max_length(), poset.min_length());
    let mut multiplicities = vec![GradedMultiplicity::new(); alg.n_vertices()];
    let mut levels = Vec::new();
    for level in (bot..=top).rev() {
        let p = level - top;
        let layer = graded_piece(alg, &fc, p);
        let ws = poset.level(level);
        let mut entries: Vec<(usize, GradedMultiplicity)> =
            ws.iter().map(|&w| (w, GradedMultiplicity::new())).collect();
        for k in layer.degrees() {
            let h = layer.cohomology_dims(k);
            for (w, gm) in entries.iter_mut() {
                if h[*w] > 0 {
                    gm.insert(k - p, h[*w]);
                }
            }
        }
        for (w, gm) in &entries {
            multiplicities[*w] = gm.clone();
        }
        levels.push(TowerLevel {
            level,
            p,
            layer,
            multiplicities: entries,
        });
    }
    Ok(ResolutionTower {
        l_top: top,
        l_bottom: bot,
        levels,
        multiplicities,
        lengths: lengths(alg),
        filtered: fc,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityMismatch {
    pub weight: usize,
    pub tower: GradedMultiplicity,
    pub expected: GradedMultiplicity,
}

/// Compare the tower with `RHom(N, A_w)` computed on an unminimized
/// projective model, dualized and shifted.
pub fn verify_multiplicities<F: Field>(
    alg: &QuiverAlgebra<F>,
    tower: &ResolutionTower<F>,
    n: &ChainComplex<F>,
) -> Result<Vec<MultiplicityMismatch>, BggError> {
    let raw = projective_model(alg, n, DEFAULT_DEPTH_BOUND)?;
    let lens = lengths(alg);
    let mut out = Vec::new();
    for w in 0..alg.n_vertices() {
        let ext = raw.complex.ext_dims(alg, &alg.costandard(w));
        let expected: GradedMultiplicity = ext
            .iter()
            .map(|(&e, &d)| (tower.l_top - lens[w] - e, d))
            .collect();
        if expected != tower.multiplicities[w] {
            out.push(MultiplicityMismatch {
                weight: w,
                tower: tower.multiplicities[w].clone(),
                expected,
            });
        }
    }
    Ok(out)
}

/// The spectral sequence of the length filtration on a minimal projective
/// model.
#[derive(Clone, Debug)]
pub struct AlgebraSpectralSequence<F> {
    pub l_top: i64,
    pub filtered: FilteredComplex<F>,
}

pub fn bgg_spectral_sequence<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<AlgebraSpectralSequence<F>, BggError> {
    let model = minimal_model(alg, n)?;
    Ok(AlgebraSpectralSequence {
        l_top: alg.poset().max_length(),
        filtered: length_filtration(alg, model.complex.to_chain_complex(alg)),
    })
}

impl<F: Field> AlgebraSpectralSequence<F> {
    pub fn page(&self, r: usize) -> SSPage {
        self.filtered.page(r)
    }

    pub fn e_infinity(&self) -> SSPage {
        self.filtered.e_infinity()
    }

    /// `E_1` as standard multiplicities: cell `(p, q)` maps weights of length
    /// `l_top + p` to their multiplicity.
    pub fn e1_standards(
        &self,
        alg: &QuiverAlgebra<F>,
    ) -> BTreeMap<(i64, i64), Vec<(usize, usize)>> {
        let poset = alg.poset();
        self.page(1)
            .cells
            .iter()
            .map(|(&(p, q), dims)| {
                let ws = poset
                    .level(self.l_top + p)
                    .into_iter()
                    .filter(|&w| dims[w] > 0)
                    .map(|w| (w, dims[w]))
                    .collect();
                ((p, q), ws)
            })
            .collect()
    }

    /// Whether `E_1` agrees cell by cell with
    /// `sum_{l_w = l_top + p} M_w (x) Ext^{-p-q}(N, A_w)^*`.
    pub fn e1_matches_ext(&self, alg: &QuiverAlgebra<F>, ext: &ExtTable) -> bool {
        let poset = alg.poset();
        let nv = alg.n_vertices();
        let mut expected: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (w, e) in ext.iter().enumerate() {
            let p = poset.length(w) - self.l_top;
            let dims = alg.standard(w).dims().to_vec();
            for (&n, &m) in e {
                let cell = expected.entry((p, -p - n)).or_insert_with(|| vec![0; nv]);
                for (c, &d) in cell.iter_mut().zip(&dims) {
                    *c += m * d;
                }
            }
        }
        expected.retain(|_, v| v.iter().any(|&d| d > 0));
        expected == self.page(1).cells
    }

    /// `sum (-1)^{p+q} dimvec E_inf^{p,q}`, to compare with the class of the
    /// cohomology.
    pub fn e_infinity_class(&self) -> Vec<i64> {
        let nv = self.filtered.complex.zero_module().n_vertices();
        let mut out = vec![0i64; nv];
        for (&(p, q), dims) in &self.e_infinity().cells {
            let s = if (p + q).rem_euclid(2) == 0 { 1 } else { -1 };
            for (o, &d) in out.iter_mut().zip(dims) {
                *o += s * d as i64;
            }
        }
        out
    }

    pub fn differential_rank(&self, alg: &QuiverAlgebra<F>, r: usize, p: i64, q: i64) -> usize {
        self.filtered.differential(alg.ends(), r, p, q).rank()
    }

    fn arrows(&self, alg: &QuiverAlgebra<F>, page: &SSPage) -> Vec<GridArrow> {
        let r = page.r;
        let mut out = Vec::new();
        for &(p, q) in page.cells.keys() {
            let to = (p + r as i64, q - r as i64 + 1);
            if page.cells.contains_key(&to) && self.differential_rank(alg, r, p, q) > 0 {
                out.push(GridArrow {
                    r,
                    from: (p, q),
                    to,
                });
            }
        }
        out
    }

    /// Pages `E_1`, the intermediate pages that change or carry a nonzero
    /// differential, and `E_inf`.
    pub fn report(&self, alg: &QuiverAlgebra<F>, object: &str) -> SsReport {
        let names = alg.poset().names();
        let simple_grid = |page: &SSPage, label: String, arrows: Vec<GridArrow>| Grid {
            page: label,
            cells: page
                .cells
                .iter()
                .map(|(&(p, q), dims)| GridCell {
                    p,
                    q,
                    label: sum_label(
                        "L",
                        &dims
                            .iter()
                            .enumerate()
                            .map(|(w, &d)| (names[w].clone(), d))
                            .collect::<Vec<_>>(),
                    ),
                })
                .collect(),
            differentials: arrows,
        };
        let e1 = Grid {
            page: "1".into(),
            cells: self
                .e1_standards(alg)
                .into_iter()
                .map(|((p, q), ws)| GridCell {
                    p,
                    q,
                    label: sum_label(
                        "M",
                        &ws.iter()
                            .map(|&(w, m)| (names[w].clone(), m))
                            .collect::<Vec<_>>(),
                    ),
                })
                .collect(),
            differentials: Vec::new(),
        };
        let mut pages = vec![e1];
        let last = self.filtered.degeneration_page().max(2);
        let einf = self.page(last);
        let mut prev = self.page(1);
        for r in 2..=last {
            let page = self.page(r);
            let arrows = self.arrows(alg, &page);
            let changed = page.cells != prev.cells;
            let is_final = page.cells == einf.cells && arrows.is_empty();
            if (changed || !arrows.is_empty()) && !is_final {
                pages.push(simple_grid(&page, r.to_string(), arrows));
            }
            prev = page;
        }
        pages.push(simple_grid(&einf, "inf".into(), Vec::new()));
        SsReport {
            object: object.to_string(),
            backend: "algebra".into(),
            l_top: self.l_top,
            p_min: self.filtered.p_min,
            pages,
            notes: Vec::new(),
        }
    }
}

/// A complex whose degree `n` term is a sum of standards of length `n`.
#[derive(Clone, Debug)]
pub struct BggComplex<F> {
    /// The complex is quasi-isomorphic to `N[shift]`.
    pub shift: i64,
    /// Degree -> `(weight, multiplicity)`.
    pub terms: BTreeMap<i64, Vec<(usize, usize)>>,
    pub complex: ChainComplex<F>,
}

impl<F: Field> BggComplex<F> {
    /// Total number of standards per degree, lowest degree first.
    pub fn sizes(&self) -> Vec<usize> {
        self.terms
            .values()
            .map(|ws| ws.iter().map(|(_, m)| m).sum())
            .collect()
    }

    pub fn render(&self, names: &[String]) -> String {
        render_bgg_terms(&self.named_terms(names), self.shift)
    }

    pub fn named_terms(&self, names: &[String]) -> BTreeMap<i64, Vec<(String, usize)>> {
        self.terms
            .iter()
            .map(|(&n, ws)| (n, ws.iter().map(|&(w, m)| (names[w].clone(), m)).collect()))
            .collect()
    }
}

/// Row `q` of `E_1` with `d_1`, placed in degrees `l_top + p`.
fn row_complex<F: Field>(
    alg: &QuiverAlgebra<F>,
    fc: &FilteredComplex<F>,
    q: i64,
    top: i64,
    shift: i64,
) -> Result<BggComplex<F>, BggError> {
    let ends = alg.ends();
    let poset = alg.poset();
    let ps: Vec<i64> = (fc.p_min..=fc.p_max).collect();
    let mut terms_map = BTreeMap::new();
    let mut modules = Vec::new();
    for &p in &ps {
        let (m, _) = fc.cell_module(ends, 1, p, q);
        let ws: Vec<(usize, usize)> = poset
            .level(top + p)
            .into_iter()
            .filter(|&w| m.dim_at(w) > 0)
            .map(|w| (w, m.dim_at(w)))
            .collect();
        if !ws.is_empty() {
            terms_map.insert(top + p, ws);
        }
        modules.push(m);
    }
    let diffs = ps[..ps.len() - 1]
        .iter()
        .map(|&p| fc.differential(ends, 1, p, q))
        .collect();
    let complex = ChainComplex::new(alg.zero_module(), top + fc.p_min, modules, diffs)?.trimmed();
    Ok(BggComplex {
        shift,
        terms: terms_map,
        complex,
    })
}

/// An ordinary BGG resolution of `N[m]` when some shift lies in the heart.
pub fn ordinary_resolution<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<BggComplex<F>, BggError> {
    let model = minimal_model(alg, n)?;
    let lens = lengths(alg);
    let ext = table_from_model(alg, &model);
    let shift = heart_shift(&lens, &ext).ok_or_else(|| {
        BggError::NotInHeart(heart_witness(alg.poset().names(), &lens, &ext).unwrap_or_default())
    })?;
    let top = alg.poset().max_length();
    let fc = length_filtration(alg, model.complex.to_chain_complex(alg));
    row_complex(alg, &fc, top + shift, top, shift)
}

/// One row of `E_1`: an ordinary resolution of the constructible
/// cohomology object in degree `degree = q - l_top`.
#[derive(Clone, Debug)]
pub struct ConRow<F> {
    pub q: i64,
    pub degree: i64,
    pub resolution: BggComplex<F>,
}

pub fn con_cohomology_rows<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<Vec<ConRow<F>>, BggError> {
    let model = minimal_model(alg, n)?;
    let top = alg.poset().max_length();
    let fc = length_filtration(alg, model.complex.to_chain_complex(alg));
    let rows: BTreeSet<i64> = fc.page(1).cells.keys().map(|&(_, q)| q).collect();
    rows.into_iter()
        .map(|q| {
            Ok(ConRow {
                q,
                degree: q - top,
                resolution: row_complex(alg, &fc, q, top, q - top)?,
            })
        })
        .collect()
}

/// A triangle `below -> N -> atop` with `below` connective and `atop`
/// coconnective.
#[derive(Clone, Debug)]
pub struct Truncation<F> {
    pub below: ChainComplex<F>,
    pub atop: ChainComplex<F>,
}

/// Truncation through the shifted filtration
/// `T^k = {x in F^{k-c} : dx in F^{k-c+1}}`, which keeps the rows `q <= c`
/// of the spectral sequence; here `c = l_top - 1`.
pub fn con_truncate<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<Truncation<F>, BggError> {
    let model = minimal_model(alg, n)?;
    let qc = model.complex.to_chain_complex(alg);
    let fc = length_filtration(alg, qc.clone());
    let c = alg.poset().max_length() - 1;
    let t = |k: i64| -> SubspaceFamily<F> {
        let d = qc.diff(k);
        fc.fil(k - c, k)
            .iter()
            .zip(fc.fil(k - c + 1, k + 1))
            .enumerate()
            .map(|(v, (a, b))| a.preimage_within(d.at(v), &b))
            .collect()
    };
    let below = qc.subcomplex(alg.ends(), &t).0;
    let atop = qc.quotient_complex(alg.ends(), &t).0;
    Ok(Truncation { below, atop })
}

pub fn delorme_check<F: Field>(
    alg: &QuiverAlgebra<F>,
    n: &ChainComplex<F>,
) -> Result<DelormeReport, BggError> {
    let ext = ext_table(alg, n)?;
    let chi: Vec<i64> = ext.iter().map(euler_characteristic).collect();
    let standard: Vec<Vec<i64>> = (0..alg.n_vertices())
        .map(|w| alg.standard(w).dims().iter().map(|&d| d as i64).collect())
        .collect();
    let class = expand_in_standards(&n.class(), &standard, &alg.poset().by_length());
    let pass = class == chi;
    Ok(DelormeReport { class, chi, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FunctorialityReport {
    /// `(weight, row q, rank on V_w, rank on RHom(-, A_w))`.
    pub components: Vec<(usize, i64, usize, usize)>,
    pub agree: bool,
    /// Dimension of the space of chain maps between the ordinary
    /// resolutions, when both objects lie in the same shift of the heart.
    pub chain_maps: Option<usize>,
    /// Whether those chain maps are determined by their `V_w` components.
    pub faithful: Option<bool>,
}

fn flatten<F: Field>(f: &ModuleMap<F>) -> Vec<F> {
    f.matrices()
        .iter()
        .flat_map(|m| (0..m.rows()).flat_map(move |r| m.row(r).to_vec()))
        .collect()
}

/// A basis of the chain maps `c1 -> c2`.
pub fn chain_map_space<F: Field>(
    alg: &QuiverAlgebra<F>,
    c1: &ChainComplex<F>,
    c2: &ChainComplex<F>,
) -> Vec<ChainMap<F>> {
    let lo = c1.lo().min(c2.lo());
    let hi = c1.end().max(c2.end());
    let bases: Vec<Vec<ModuleMap<F>>> = (lo..hi)
        .map(|k| alg.hom_space(c1.term(k), c2.term(k)))
        .collect();
    let cons_len: Vec<usize> = (lo - 1..hi)
        .map(|k| {
            (0..alg.n_vertices())
                .map(|v| c2.term(k + 1).dim_at(v) * c1.term(k).dim_at(v))
                .sum()
        })
        .collect();
    let cons_off: Vec<usize> = cons_len
        .iter()
        .scan(0, |acc, &l| {
            let o = *acc;
            *acc += l;
            Some(o)
        })
        .collect();
    let total_rows: usize = cons_len.iter().sum();
    let mut cols = Vec::new();
    for (i, k) in (lo..hi).enumerate() {
        for h in &bases[i] {
            let mut col = vec![F::zero(); total_rows];
            // Constraint in degree k: d2 h.
            let a = flatten(&c2.diff(k).compose(h));
            let off = cons_off[(k - lo + 1) as usize];
            for (j, x) in a.into_iter().enumerate() {
                col[off + j] = col[off + j].clone() + x;
            }
            // Constraint in degree k - 1: -h d1.
            let b = flatten(&h.compose(&c1.diff(k - 1)));
            let off = cons_off[(k - lo) as usize];
            for (j, x) in b.into_iter().enumerate() {
                col[off + j] = col[off + j].clone() - x;
            }
            cols.push(col);
        }
    }
    if cols.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_cols(cols, total_rows);
    let ker = m.kernel_basis();
    (0..ker.cols())
        .map(|c| {
            let coeffs = ker.col(c);
            let mut idx = 0;
            let maps = (lo..hi)
                .enumerate()
                .map(|(i, k)| {
                    let mut f = ModuleMap::zero(c1.term(k), c2.term(k));
                    for h in &bases[i] {
                        f = f.add(&h.scale(&coeffs[idx]));
                        idx += 1;
                    }
                    f
                })
                .collect();
            ChainMap { lo, maps }
        })
        .collect()
}

/// Compare the maps induced by `f: N -> N'` on the multiplicity spaces of
/// the derived resolutions with those induced on `RHom(-, A_w)`; for heart
/// objects also check that chain maps of ordinary resolutions are
/// determined by their multiplicity components.
pub fn uniqueness_functoriality_check<F: Field>(
    alg: &QuiverAlgebra<F>,
    f: &ChainMap<F>,
    n: &ChainComplex<F>,
    n2: &ChainComplex<F>,
) -> Result<FunctorialityReport, BggError> {
    let ends = alg.ends();
    let m1 = minimal_model(alg, n)?;
    let m2 = minimal_model(alg, n2)?;
    let lift = lift_chain_map(alg, f, &m1, &m2)?;
    let q1 = m1.complex.to_chain_complex(alg);
    let q2 = m2.complex.to_chain_complex(alg);
    let fc1 = length_filtration(alg, q1.clone());
    let fc2 = length_filtration(alg, q2.clone());
    let lens = lengths(alg);
    let top = alg.poset().max_length();
    let lo = q1.lo().min(q2.lo());
    let hi = q1.end().max(q2.end());
    let mut components = Vec::new();
    for w in 0..alg.n_vertices() {
        let p = lens[w] - top;
        let a = alg.costandard(w);
        let h1 = m1.complex.rhom(alg, &a);
        let h2 = m2.complex.rhom(alg, &a);
        for k in lo..hi {
            let q = k - p;
            let (_, s) = fc1.cell_module(ends, 1, p, q);
            let (_, t) = fc2.cell_module(ends, 1, p, q);
            if s[w].dim() == 0 && t[w].dim() == 0 {
                continue;
            }
            let fk = lift.at(k, q1.term(k), q2.term(k));
            let tower_rank = s[w].induced(fk.at(w), &t[w]).rank();
            let g1 = m1.complex.gens_at(k);
            let pre = precompose_matrix(
                alg,
                &a,
                g1,
                &alg.generator_images(g1, &fk),
                m2.complex.gens_at(k),
            );
            let e = -k;
            let c1 = Quotient::new(&h1.cycles(e), &h1.boundaries(e));
            let c2 = Quotient::new(&h2.cycles(e), &h2.boundaries(e));
            let rhom_rank = c2.induced(&pre, &c1).rank();
            components.push((w, q, tower_rank, rhom_rank));
        }
    }
    let agree = components.iter().all(|&(_, _, a, b)| a == b);
    let (mut chain_maps, mut faithful) = (None, None);
    let s1 = heart_shift(&lens, &table_from_model(alg, &m1));
    let s2 = heart_shift(&lens, &table_from_model(alg, &m2));
    if let (Some(a), Some(b)) = (s1, s2) {
        if a == b {
            let b1 = ordinary_resolution(alg, n)?;
            let b2 = ordinary_resolution(alg, n2)?;
            let maps = chain_map_space(alg, &b1.complex, &b2.complex);
            let rows: Vec<Vec<F>> = maps
                .iter()
                .map(|g| {
                    let mut v = Vec::new();
                    for w in 0..alg.n_vertices() {
                        let k = lens[w];
                        let gk = g.at(k, b1.complex.term(k), b2.complex.term(k));
                        let m = gk.at(w);
                        for r in 0..m.rows() {
                            v.extend(m.row(r).iter().cloned());
                        }
                    }
                    v
                })
                .collect();
            let width = rows.first().map_or(0, |r| r.len());
            let rank = if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(rows, width).rank()
            };
            chain_maps = Some(maps.len());
            faithful = Some(rank == maps.len());
        }
    }
    Ok(FunctorialityReport {
        components,
        agree,
        chain_maps,
        faithful,
    })
}
