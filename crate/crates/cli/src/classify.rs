use std::io::Write;

use maxmult::classifier::{classify, Certificate, ClassifyError, ComponentVerdict, Ge3Reason, Verdict};
use maxmult::Graph;
use serde::Serialize;

use crate::input::{parse_graphs, Format};

/// The per-graph output of `classify`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub graph6: String,
    pub n: usize,
    pub verdict: Verdict,
    /// Short name of the certificate kind.
    pub certificate: &'static str,
    /// Why the verdict holds, as short tags.
    pub reasons: Vec<String>,
    /// Whether the certificate passed its independent re-check.
    pub verified: bool,
    pub detail: Certificate,
}

pub fn certificate_name(c: &Certificate) -> &'static str {
    match c {
        Certificate::Path { .. } => "path",
        Certificate::Tpp { .. } => "two-parallel-paths",
        Certificate::Exceptional { .. } => "exceptional",
        Certificate::Disconnected { .. } => "disconnected",
        Certificate::Ge3 { .. } => "ge3",
    }
}

/// Tags explaining the verdict; a disconnected graph lists its components
/// as `verdict:tag`.
fn reasons(c: &Certificate) -> Vec<String> {
    let component_tags = |components: &[ComponentVerdict]| {
        components
            .iter()
            .map(|cv| {
                let inner = reasons(&cv.classification.certificate);
                let tag = inner.first().map_or(certificate_name(&cv.classification.certificate), |s| s.as_str());
                format!("{:?}:{tag}", cv.classification.verdict)
            })
            .collect::<Vec<_>>()
    };
    match c {
        Certificate::Ge3 { reason: Ge3Reason::ComponentSum { components } } => {
            let mut tags = vec!["ComponentSum".to_string()];
            tags.extend(component_tags(components));
            tags
        }
        Certificate::Ge3 { reason } => vec![reason.kind().to_string()],
        Certificate::Disconnected { components } => component_tags(components),
        _ => Vec::new(),
    }
}

pub fn report(g: &Graph) -> Result<ClassifyReport, ClassifyError> {
    let c = classify(g)?;
    Ok(ClassifyReport {
        graph6: g.to_graph6(),
        n: g.n(),
        verdict: c.verdict,
        certificate: certificate_name(&c.certificate),
        reasons: reasons(&c.certificate),
        verified: c.verify(g),
        detail: c.certificate,
    })
}

/// Writes one JSON line per graph to `out` and one diagnostic per failed
/// graph to `err`. Returns the number of failures.
pub fn run(text: &str, format: Format, out: &mut impl Write, err: &mut impl Write) -> std::io::Result<usize> {
    let mut failures = 0;
    for (line, parsed) in parse_graphs(text, format) {
        let result = parsed.map_err(|e| e.to_string()).and_then(|g| report(&g).map_err(|e| e.to_string()));
        match result {
            Ok(r) => writeln!(out, "{}", serde_json::to_string(&r).expect("serializable"))?,
            Err(e) => {
                failures += 1;
                writeln!(err, "line {line}: {e}")?;
            }
        }
    }
    Ok(failures)
}
