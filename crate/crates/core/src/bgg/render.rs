use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub p: i64,
    pub q: i64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridArrow {
    pub r: usize,
    pub from: (i64, i64),
    pub to: (i64, i64),
}

/// One page of a spectral sequence: `page` is the page index or `inf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub page: String,
    pub cells: Vec<GridCell>,
    pub differentials: Vec<GridArrow>,
}

impl Grid {
    pub fn label(&self, p: i64, q: i64) -> Option<&str> {
        self.cells
            .iter()
            .find(|c| c.p == p && c.q == q)
            .map(|c| c.label.as_str())
    }

    pub fn positions(&self) -> Vec<(i64, i64)> {
        self.cells.iter().map(|c| (c.p, c.q)).collect()
    }
}

/// Rendered pages for one object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsReport {
    pub object: String,
    pub backend: String,
    pub l_top: i64,
    pub p_min: i64,
    pub pages: Vec<Grid>,
    pub notes: Vec<String>,
}

/// `M_e+2M_t` style label from `(name, multiplicity)` pairs.
pub fn sum_label(prefix: &str, terms: &[(String, usize)]) -> String {
    terms
        .iter()
        .filter(|(_, m)| *m > 0)
        .map(|(n, m)| {
            if *m == 1 {
                format!("{prefix}_{n}")
            } else {
                format!("{m}{prefix}_{n}")
            }
        })
        .collect::<Vec<_>>()
        .join("+")
}

/// `deg 0: M_e → deg 1: M_s (shift m = -1)` from named terms by degree.
pub fn render_bgg_terms(terms: &BTreeMap<i64, Vec<(String, usize)>>, shift: i64) -> String {
    let parts: Vec<String> = terms
        .iter()
        .map(|(n, ws)| {
            let t: Vec<String> = ws
                .iter()
                .map(|(w, m)| {
                    if *m == 1 {
                        format!("M_{w}")
                    } else {
                        format!("M_{w}^{m}")
                    }
                })
                .collect();
            format!("deg {n}: {}", t.join(" ⊕ "))
        })
        .collect();
    let body = if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" → ")
    };
    format!("{body} (shift m = {shift})")
}

pub fn render_grids(report: &SsReport) -> String {
    let mut out = format!(
        "spectral sequence of {} ({} backend, l_top = {})\n",
        report.object, report.backend, report.l_top
    );
    let ps: Vec<i64> = (report.p_min..=0).collect();
    for grid in &report.pages {
        out.push('\n');
        out.push_str(&format!("E_{}\n", grid.page));
        let mut qs: Vec<i64> = grid.cells.iter().map(|c| c.q).collect();
        qs.sort_unstable();
        qs.dedup();
        qs.reverse();
        if qs.is_empty() {
            out.push_str("  (zero)\n");
            continue;
        }
        let head: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        let widths: Vec<usize> = ps
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                qs.iter()
                    .map(|&q| grid.label(p, q).map_or(0, |l| l.len()))
                    .max()
                    .unwrap_or(0)
                    .max(head[i].len())
            })
            .collect();
        let row = |first: String, cols: Vec<String>| -> String {
            let mut line = format!("  {first:>4} |");
            for (c, w) in cols.iter().zip(&widths) {
                line.push_str(&format!(" {c:<w$} |"));
            }
            line.trim_end().to_string() + "\n"
        };
        out.push_str(&row("q\\p".into(), head.clone()));
        for &q in &qs {
            let cols = ps
                .iter()
                .map(|&p| grid.label(p, q).unwrap_or("").to_string())
                .collect();
            out.push_str(&row(q.to_string(), cols));
        }
        for d in &grid.differentials {
            out.push_str(&format!(
                "  d_{}: ({},{}) -> ({},{})\n",
                d.r, d.from.0, d.from.1, d.to.0, d.to.1
            ));
        }
    }
    for n in &report.notes {
        out.push_str(&format!("\nnote: {n}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_layout() {
        let terms = vec![("e".to_string(), 1), ("t".to_string(), 2)];
        assert_eq!(sum_label("M", &terms), "M_e+2M_t");
        let report = SsReport {
            object: "L_s".into(),
            backend: "kl".into(),
            l_top: 1,
            p_min: -1,
            pages: vec![Grid {
                page: "1".into(),
                cells: vec![
                    GridCell {
                        p: -1,
                        q: 0,
                        label: "M_e".into(),
                    },
                    GridCell {
                        p: 0,
                        q: 0,
                        label: "M_s".into(),
                    },
                ],
                differentials: vec![],
            }],
            notes: vec![],
        };
        let text = render_grids(&report);
        assert!(text.contains("   0 | M_e | M_s |"), "{text}");
        let json = serde_json::to_string(&report).unwrap();
        let back: SsReport = serde_json::from_str(&json).unwrap();
        assert_eq!(render_grids(&back), text);
    }
}
