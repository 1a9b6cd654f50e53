//! Rendering of classification reports and check lists, as text for
//! humans and as JSON documents that re-parse to equal values.

use gortrim::check::Check;
use gortrim::trim::{TorClass, TrimReport};
use serde::{Deserialize, Serialize};

/// The machine-readable form of a [`TrimReport`].
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub trim: Vec<usize>,
    pub t: usize,
    pub permutation: Vec<usize>,
    pub q_matrix: Vec<Vec<String>>,
    pub g_condition: bool,
    pub p_invariant: usize,
    pub rank: usize,
    pub class: String,
    pub format: [usize; 4],
    pub mu: usize,
    pub format_pattern_extended: bool,
    pub pf_signs: Vec<i64>,
    pub zero_pfaffian: bool,
}

impl From<&TrimReport> for ReportDoc {
    fn from(r: &TrimReport) -> Self {
        let q = &r.q_matrix;
        ReportDoc {
            trim: r.trim_set.clone(),
            t: r.t,
            permutation: r.permutation.images().to_vec(),
            q_matrix: (1..=q.rows())
                .map(|i| (1..=q.cols()).map(|j| q.entry(i, j).to_string()).collect())
                .collect(),
            g_condition: r.g_condition,
            p_invariant: r.p_invariant,
            rank: r.rank,
            class: r.class.to_string(),
            format: r.format,
            mu: r.mu,
            format_pattern_extended: r.format_pattern_extended,
            pf_signs: r.pf_signs.clone(),
            zero_pfaffian: r.zero_pfaffian,
        }
    }
}

impl ReportDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn class(&self) -> Result<TorClass, String> {
        self.class.parse()
    }
}

pub fn render_text(r: &TrimReport) -> String {
    let mut out = String::new();
    let fmt = r.format;
    out.push_str(&format!(
        "trim {:?} (t = {}), conjugating permutation {}\n",
        r.trim_set, r.t, r.permutation
    ));
    out.push_str(&format!("stacked matrix ({}x5):\n{}\n", 3 * r.t, r.q_matrix));
    out.push_str(&format!(
        "G-trimming condition: {}\n",
        if r.g_condition { "satisfied" } else { "not satisfied" }
    ));
    out.push_str(&format!("p-invariant: {}\nrank: {}\n", r.p_invariant, r.rank));
    out.push_str(&format!(
        "class: {}\nformat: ({},{},{},{}){}\nmu: {}\n",
        r.class,
        fmt[0],
        fmt[1],
        fmt[2],
        fmt[3],
        if r.format_pattern_extended { " [pattern-extended]" } else { "" },
        r.mu
    ));
    if r.zero_pfaffian {
        out.push_str(
            "warning: some sub-maximal pfaffian vanishes; the presenter may not \
             satisfy the grade-3 Gorenstein hypotheses\n",
        );
    }
    out
}

/// One PASS/FAIL line per check, plus a summary line.
pub fn render_checks(title: &str, checks: &[Check]) -> String {
    let mut out = String::new();
    out.push_str(&format!("== {} ==\n", title));
    for c in checks {
        out.push_str(&format!("{}\n", c));
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    out.push_str(&format!("{}/{} checks passed\n", passed, checks.len()));
    out
}

/// Machine-readable form of a check list.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckDoc {
    pub label: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn checks_to_json(checks: &[Check]) -> String {
    let docs: Vec<CheckDoc> = checks
        .iter()
        .map(|c| CheckDoc { label: c.label.clone(), pass: c.pass, detail: c.detail.clone() })
        .collect();
    serde_json::to_string_pretty(&docs).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use gortrim::example;
    use gortrim::trim::classify;

    #[test]
    fn report_doc_roundtrip() {
        let t = example::presenter();
        for set in [vec![1usize, 2, 3], vec![3, 5], vec![5]] {
            let report = classify(&t, &set).unwrap();
            let doc = ReportDoc::from(&report);
            let back = ReportDoc::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.class().unwrap(), report.class);
        }
    }

    #[test]
    fn text_rendering_mentions_the_class() {
        let t = example::presenter();
        let report = classify(&t, &[3, 5]).unwrap();
        let text = render_text(&report);
        assert!(text.contains("class: T"));
        assert!(text.contains("format: (1,4,6,3)"));
    }
}
