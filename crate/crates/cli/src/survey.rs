//! Corpus surveys: classify, cross-check with the oracle, and re-verify the
//! certificate for every graph, persisting one JSON record per line so an
//! interrupted survey resumes where it stopped.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::sync::mpsc;
use std::time::Instant;

use maxmult::classifier::{classify, Certificate, ClassifyError, Verdict};
use maxmult::oracle::estimate_m;
use maxmult::witness::{lower_bound_certificate, verify_certificate};
use maxmult::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{CliError, Config};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    Verified,
    Failed,
    /// No certificate: the graph could not be classified.
    #[serde(rename = "n.a.")]
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub graph6: String,
    pub n: usize,
    pub verdict: Option<Verdict>,
    /// Capped at three; absent when the graph exceeds the oracle size cap.
    pub oracle_m_attained: Option<usize>,
    pub certificate: CertificateStatus,
    pub mismatch: bool,
    pub error: Option<String>,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SurveySummary {
    pub total: usize,
    pub verdicts: BTreeMap<String, usize>,
    pub errors: usize,
    pub oracle_checked: usize,
    pub certificates_verified: usize,
    /// graph6 strings of records flagged as mismatches, sorted.
    pub mismatches: Vec<String>,
}

impl SurveySummary {
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a SurveyRecord>) -> Self {
        let mut s = SurveySummary::default();
        for r in records {
            s.total += 1;
            match r.verdict {
                Some(v) => *s.verdicts.entry(format!("{v:?}")).or_default() += 1,
                None => s.errors += 1,
            }
            s.oracle_checked += r.oracle_m_attained.is_some() as usize;
            s.certificates_verified += (r.certificate == CertificateStatus::Verified) as usize;
            if r.mismatch {
                s.mismatches.push(r.graph6.clone());
            }
        }
        s.mismatches.sort();
        s
    }
}

/// Outcome of a survey run.
#[derive(Debug, Clone)]
pub struct SurveyRun {
    pub summary: SurveySummary,
    /// Records computed in this run (the rest came from the results file).
    pub computed: usize,
    /// Corpus lines that did not parse, with their line numbers.
    pub parse_errors: Vec<(usize, String)>,
}

/// Classifies one graph and cross-checks it.
pub fn survey_one(g: &Graph, cfg: &Config) -> SurveyRecord {
    let start = Instant::now();
    let mut record = SurveyRecord {
        graph6: g.to_graph6(),
        n: g.n(),
        verdict: None,
        oracle_m_attained: None,
        certificate: CertificateStatus::NotApplicable,
        mismatch: false,
        error: None,
        millis: 0,
    };
    match classify(g) {
        Ok(c) => {
            record.verdict = Some(c.verdict);
            let mut ok = c.verify(g);
            if let Certificate::Tpp { cover } = &c.certificate {
                ok &= lower_bound_certificate(g, cover).is_ok_and(|t| verify_certificate(g, &t) == Ok(true));
            }
            record.certificate = if ok { CertificateStatus::Verified } else { CertificateStatus::Failed };
            record.mismatch = !ok;
            if g.n() <= cfg.max_exhaustive_n {
                let m = estimate_m(g, &cfg.oracle, Some(3)).m_attained;
                record.oracle_m_attained = Some(m);
                record.mismatch |= Verdict::from_capped(m as u8) != Some(c.verdict);
            }
        }
        Err(e) => {
            // an inconsistency between independent checks is a mismatch;
            // anything else is a limitation of the input
            record.mismatch = matches!(e, ClassifyError::Inconsistent(_));
            record.error = Some(e.to_string());
        }
    }
    record.millis = start.elapsed().as_millis() as u64;
    record
}

/// Reads the records already in `path`. Lines that do not parse (say, cut
/// short by an interruption) are ignored and recomputed.
pub fn load_records(path: &Path) -> std::io::Result<HashMap<String, SurveyRecord>> {
    let mut out = HashMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e),
    };
    for line in BufReader::new(file).lines() {
        if let Ok(r) = serde_json::from_str::<SurveyRecord>(&line?) {
            out.insert(r.graph6.clone(), r);
        }
    }
    Ok(out)
}

/// Surveys a corpus of graph6 lines. Graphs already recorded in
/// `cfg.out` are not recomputed; new records are appended by a single
/// writer as workers finish them.
pub fn run(corpus: &str, cfg: &Config) -> Result<SurveyRun, CliError> {
    cfg.validate()?;
    let mut parse_errors = Vec::new();
    let mut keys = Vec::new();
    let mut graphs = HashMap::new();
    for (i, line) in corpus.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match Graph::parse_graph6(line) {
            Ok(g) => {
                let key = g.to_graph6();
                if graphs.insert(key.clone(), g).is_none() {
                    keys.push(key);
                }
            }
            Err(e) => parse_errors.push((i + 1, e.to_string())),
        }
    }

    let mut records = load_records(&cfg.out)?;
    let todo: Vec<&Graph> = keys.iter().filter(|k| !records.contains_key(*k)).map(|k| &graphs[k]).collect();
    let computed = todo.len();
    if !todo.is_empty() {
        let mut file = OpenOptions::new().create(true).append(true).open(&cfg.out)?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| CliError::Config(e.to_string()))?;
        let (tx, rx) = mpsc::channel::<SurveyRecord>();
        let writer = std::thread::spawn(move || -> std::io::Result<Vec<SurveyRecord>> {
            let mut done = Vec::new();
            for r in rx {
                writeln!(file, "{}", serde_json::to_string(&r).expect("serializable"))?;
                file.flush()?;
                done.push(r);
            }
            Ok(done)
        });
        pool.install(|| {
            todo.par_iter().for_each_with(tx, |tx, g| {
                // the writer only stops early on an I/O error, reported below
                let _ = tx.send(survey_one(g, cfg));
            })
        });
        let done = writer.join().expect("writer thread panicked")?;
        for r in done {
            records.insert(r.graph6.clone(), r);
        }
    }
    let seen: HashSet<&String> = keys.iter().collect();
    let summary = SurveySummary::from_records(records.values().filter(|r| seen.contains(&r.graph6)));
    Ok(SurveyRun { summary, computed, parse_errors })
}
