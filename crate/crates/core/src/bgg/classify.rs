use std::fmt;

use serde::{Deserialize, Serialize};

use super::kl::kl_spectral_sequence;
use super::tower::heart_test;
use super::BggError;
use crate::coxeter::{Elem, WeylGroup};
use crate::homology::ChainComplex;
use crate::klpoly::KLTable;
use crate::linalg::Field;
use crate::qha::QuiverAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Admits,
    Fails,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Justification {
    /// `w` is rationally smooth, so `M_{D_w} = L_w` has a resolution.
    RationallySmooth,
    /// Inherited from a larger divisor set.
    SubsetMonotone,
    /// The spectral sequence of `L_w` leaves only `M_{D_w}` in the bottom
    /// row.
    SsCertificate,
    /// Heart test on an explicit algebra.
    AlgebraVerified,
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Justification::RationallySmooth => "rationally-smooth",
            Justification::SubsetMonotone => "subset-monotone",
            Justification::SsCertificate => "ss-certificate",
            Justification::AlgebraVerified => "algebra-verified",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Admits => "admits",
            Verdict::Fails => "fails",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// The verdict for `M_I = M_w / sum_{y in I} M_y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetVerdict {
    pub divisors: Vec<String>,
    pub verdict: Verdict,
    pub justification: Option<Justification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub weight: String,
    /// `D_w`: the covers of `w`.
    pub divisors: Vec<String>,
    /// Covers of the form `sw` with `s` a left descent.
    pub descent_divisors: Vec<String>,
    pub rationally_smooth: bool,
    pub subsets: Vec<SubsetVerdict>,
}

impl ClassificationRecord {
    pub fn admitting(&self) -> usize {
        self.subsets
            .iter()
            .filter(|s| s.verdict == Verdict::Admits)
            .count()
    }

    /// Whenever `M_{I'}` admits a resolution, so does `M_I` for `I` inside `I'`.
    pub fn is_monotone(&self) -> bool {
        self.subsets.iter().all(|big| {
            big.verdict != Verdict::Admits
                || self.subsets.iter().all(|small| {
                    !small.divisors.iter().all(|d| big.divisors.contains(d))
                        || small.verdict == Verdict::Admits
                })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSummary {
    pub group: String,
    /// Pairs `(w, I)` with a resolution.
    pub total: usize,
    /// `sum_w 2^{|D_w|}`, counted directly.
    pub modules: usize,
    pub undetermined: usize,
    pub parabolic: usize,
    pub rationally_smooth_simples: usize,
    /// Rationally smooth `w` all of whose covers come from left descents.
    pub overlap: usize,
    /// `parabolic + rationally_smooth_simples - overlap`.
    pub prior_known: usize,
    pub records: Vec<ClassificationRecord>,
}

fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0..1usize << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

fn descent_covers(g: &WeylGroup, w: Elem) -> Vec<Elem> {
    g.left_descents(w)
        .into_iter()
        .map(|s| g.left_mul(s, w))
        .collect()
}

/// Verdicts for every `M_I` of highest weight `w` on the KL backend.
pub fn classify(table: &KLTable, w: Elem) -> ClassificationRecord {
    let g = table.group();
    let divisors = g.covers(w);
    let smooth = table.rationally_smooth(w);
    let top = if smooth {
        Some(Justification::RationallySmooth)
    } else if kl_spectral_sequence(table, w, None).certified {
        Some(Justification::SsCertificate)
    } else {
        None
    };
    let subsets = subsets(&divisors)
        .into_iter()
        .map(|i| {
            let (verdict, justification) = match top {
                Some(j) if i.len() == divisors.len() => (Verdict::Admits, Some(j)),
                Some(_) => (Verdict::Admits, Some(Justification::SubsetMonotone)),
                None => (Verdict::Undetermined, None),
            };
            SubsetVerdict {
                divisors: i.iter().map(|&y| g.name(y)).collect(),
                verdict,
                justification,
            }
        })
        .collect();
    ClassificationRecord {
        weight: g.name(w),
        divisors: divisors.iter().map(|&y| g.name(y)).collect(),
        descent_divisors: descent_covers(g, w).iter().map(|&y| g.name(y)).collect(),
        rationally_smooth: smooth,
        subsets,
    }
}

/// `sum_w 2^{|LD(w)|}`: quotients of `M_w` by images of `M_{sw}` over
/// subsets of left descents.
pub fn parabolic_verma_count(group: &WeylGroup) -> usize {
    group
        .elements()
        .map(|w| 1usize << group.left_descents(w).len())
        .sum()
}

pub fn classify_all(table: &KLTable, group_name: &str) -> ClassificationSummary {
    let g = table.group();
    let records: Vec<ClassificationRecord> = g.elements().map(|w| classify(table, w)).collect();
    let total = records.iter().map(|r| r.admitting()).sum();
    let undetermined = records
        .iter()
        .flat_map(|r| &r.subsets)
        .filter(|s| s.verdict == Verdict::Undetermined)
        .count();
    let modules = g.elements().map(|w| 1usize << g.covers(w).len()).sum();
    let parabolic = parabolic_verma_count(g);
    let rationally_smooth_simples = g.elements().filter(|&w| table.rationally_smooth(w)).count();
    let overlap = g
        .elements()
        .filter(|&w| table.rationally_smooth(w) && g.covers(w).len() == g.left_descents(w).len())
        .count();
    ClassificationSummary {
        group: group_name.to_string(),
        total,
        modules,
        undetermined,
        parabolic,
        rationally_smooth_simples,
        overlap,
        prior_known: parabolic + rationally_smooth_simples - overlap,
        records,
    }
}

/// Verdicts for every `M_I` of highest weight `w` by running the heart test
/// on an explicit algebra.
pub fn classify_algebra<F: Field>(
    alg: &QuiverAlgebra<F>,
    w: usize,
) -> Result<ClassificationRecord, BggError> {
    let poset = alg.poset();
    let divisors = poset.covers(w);
    let stalk = |m| ChainComplex::stalk(alg.zero_module(), m, 0);
    let smooth = heart_test(alg, &stalk(alg.simple(w)))?.is_some();
    let mut out = Vec::new();
    for i in subsets(&divisors) {
        let m = alg.m_i(w, &i)?;
        let verdict = if heart_test(alg, &stalk(m))?.is_some() {
            Verdict::Admits
        } else {
            Verdict::Fails
        };
        out.push(SubsetVerdict {
            divisors: i.iter().map(|&y| poset.name(y).to_string()).collect(),
            verdict,
            justification: Some(Justification::AlgebraVerified),
        });
    }
    Ok(ClassificationRecord {
        weight: poset.name(w).to_string(),
        divisors: divisors
            .iter()
            .map(|&y| poset.name(y).to_string())
            .collect(),
        descent_divisors: Vec::new(),
        rationally_smooth: smooth,
        subsets: out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_counts() {
        let g = WeylGroup::from_type("A3").unwrap();
        let t = KLTable::new(&g);
        let s = classify_all(&t, "A3");
        assert_eq!(s.total, 155);
        assert_eq!(s.modules, 155);
        assert_eq!(s.undetermined, 0);
        assert_eq!(s.parabolic, 75);
        assert_eq!(s.rationally_smooth_simples, 22);
        assert_eq!(s.overlap, 8);
        assert_eq!(s.prior_known, 89);
        assert!(s.records.iter().all(|r| r.is_monotone()));
    }

    #[test]
    fn a1_parabolic_count() {
        let g = WeylGroup::from_type("A1").unwrap();
        assert_eq!(parabolic_verma_count(&g), 3);
    }

    #[test]
    fn singular_weights_are_certified() {
        let g = WeylGroup::from_type("A3").unwrap();
        let t = KLTable::new(&g);
        for word in ["tsut", "stuts"] {
            let r = classify(&t, g.parse(word).unwrap());
            assert!(!r.rationally_smooth);
            let full = r.subsets.last().unwrap();
            assert_eq!(full.justification, Some(Justification::SsCertificate));
            assert_eq!(r.admitting(), r.subsets.len());
        }
    }

    #[test]
    fn monotonicity_detects_violations() {
        let mut r = ClassificationRecord {
            weight: "w".into(),
            divisors: vec!["a".into()],
            descent_divisors: vec![],
            rationally_smooth: false,
            subsets: vec![
                SubsetVerdict {
                    divisors: vec![],
                    verdict: Verdict::Fails,
                    justification: None,
                },
                SubsetVerdict {
                    divisors: vec!["a".into()],
                    verdict: Verdict::Admits,
                    justification: None,
                },
            ],
        };
        assert!(!r.is_monotone());
        r.subsets[0].verdict = Verdict::Admits;
        assert!(r.is_monotone());
    }
}
