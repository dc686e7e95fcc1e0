use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use supermod::algebra::CyclotomicElement;
use supermod::catalog;
use supermod::classify::{self, alpha_feasibility, ClassificationRecord, ClassificationRun, ClassifyError};
use supermod::premodular::{muger_center, split_detect, verify_premodular, PremodularData, Verdict};
use supermod::quotient::{fermionic_quotient, fs_indicator, naive_rules, partition_ring, verify_quotient};
use supermod::report::ValidationReport;
use supermod::schema::{CategoryFile, ExactMatrix, ReportFile, SchemaError};
use supermod::spin::{classify_spin, rank_profiles, SpinError};

#[derive(thiserror::Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Schema { path: String, source: SchemaError },
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Spin(#[from] SpinError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        2
    }
}

pub struct Outcome {
    pub report: ReportFile,
    /// Human-readable text for stderr.
    pub summary: String,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn load(path: &Path) -> Result<(CategoryFile, PremodularData), CliError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let schema = |source| CliError::Schema { path: path.display().to_string(), source };
    let file = CategoryFile::from_json(&text).map_err(schema)?;
    let data = file.to_data().map_err(schema)?;
    Ok((file, data))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(io_err(path))
}

/// File-name stem: ASCII alphanumerics kept, other runs collapsed to '_'.
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    for c in name.chars() {
        if c.is_ascii_alphanumeric() {
            out.push(c);
        } else if !out.ends_with('_') {
            out.push('_');
        }
    }
    out.trim_matches('_').to_string()
}

fn finish(mut report: ReportFile, start: Instant, summary: String) -> Outcome {
    report.timing_ms = start.elapsed().as_millis() as u64;
    Outcome { report, summary }
}

fn failed(subject: &str, check: &str, detail: String) -> ValidationReport {
    let mut v = ValidationReport::new(subject);
    v.fail(check, detail, None);
    v
}

fn summary_of(report: &ReportFile) -> String {
    let mut s = String::new();
    for v in &report.verdicts {
        let _ = write!(s, "{v}");
    }
    let _ = writeln!(s, "{}: {}", report.subject, if report.passed { "PASS" } else { "FAIL" });
    s
}

pub fn verify(path: &Path) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (_, data) = load(path)?;
    let mut report = ReportFile::new("verify", path.display().to_string());
    let mut certs = serde_json::Map::new();
    match verify_premodular(&data) {
        Ok(v) => report.push(v),
        Err(e) => report.push(failed(&data.name, "shape", e.to_string())),
    }
    let premodular_ok = report.passed;
    let mut q = ValidationReport::new(format!("fermionic quotient of '{}'", data.name));
    if data.stilde.is_none() || data.twists.is_none() {
        q.skip("quotient", "missing data: S̃ and twists");
    } else if !premodular_ok {
        q.skip("quotient", "premodular checks failed");
    } else {
        let c = muger_center(&data).expect("shape already checked");
        certs.insert(
            "muger_center".into(),
            json!({ "transparent": c.transparent, "verdict": c.verdict, "fermion": c.fermion, "notes": c.notes }),
        );
        match c.fermion.filter(|_| c.is_super_modular() && c.verdict == Verdict::SuperModular) {
            None => q.skip("quotient", format!("center verdict {:?}; no quotient", c.verdict)),
            Some(f) => match fermionic_quotient(&data, f) {
                Err(e) => q.fail("quotient", e.to_string(), None),
                Ok(fq) => {
                    q.extend(verify_quotient(&fq));
                    let mut ind = BTreeMap::new();
                    for &j in fq.partition.pi0.iter().filter(|&&j| data.ring.dual(j) == j) {
                        match fs_indicator(&data, &fq.partition, j) {
                            Ok(v) => {
                                let pm = v == CyclotomicElement::from_int(1) || v == CyclotomicElement::from_int(-1);
                                if pm {
                                    ind.insert(j.to_string(), v.to_string());
                                }
                                q.record("fs_indicator", (!pm).then(|| (format!("ν₂ = {v}"), vec![j])));
                            }
                            Err(e) => q.fail("fs_indicator", e.to_string(), Some(vec![j])),
                        }
                    }
                    certs.insert("fs_indicators".into(), json!(ind));
                    if let Ok(w) = split_detect(&data, f) {
                        certs.insert(
                            "split".into(),
                            json!({ "split": w.is_some(), "factor_labels": w.as_ref().map(|w| w.factor_labels.clone()) }),
                        );
                    }
                }
            },
        }
    }
    report.push(q);
    report.certificates = Value::Object(certs);
    let summary = summary_of(&report);
    Ok(finish(report, start, summary))
}

pub fn quotient(path: &Path) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let (_, data) = load(path)?;
    let mut report = ReportFile::new("quotient", path.display().to_string());
    let center = muger_center(&data);
    let fermion = match &center {
        Ok(c) if c.is_super_modular() => c.fermion,
        _ => None,
    };
    let Some(f) = fermion else {
        let detail = match center {
            Ok(c) => format!("center {:?} with transparent labels {:?}", c.verdict, c.transparent),
            Err(e) => e.to_string(),
        };
        report.push(failed(&data.name, "super_modular", detail));
        let summary = summary_of(&report);
        return Ok(finish(report, start, summary));
    };
    match fermionic_quotient(&data, f) {
        Err(e) => report.push(failed(&data.name, "quotient", e.to_string())),
        Ok(fq) => {
            report.push(verify_quotient(&fq));
            let ind: BTreeMap<String, String> = fq
                .partition
                .pi0
                .iter()
                .filter(|&&j| data.ring.dual(j) == j)
                .filter_map(|&j| fs_indicator(&data, &fq.partition, j).ok().map(|v| (j.to_string(), v.to_string())))
                .collect();
            report.certificates = json!({
                "fermion": f,
                "pi0": fq.partition.pi0,
                "nhat": fq.nhat.to_nested(),
                "nhat_dual": fq.nhat.duals(),
                "shat": ExactMatrix::from_matrix(&fq.shat),
                "dsq": fq.dsq.to_string(),
                "fs_indicators": ind,
            });
        }
    }
    let summary = summary_of(&report);
    Ok(finish(report, start, summary))
}

fn record_labels(q: usize) -> Vec<String> {
    let x = |i: usize| if i == 0 { "1".to_string() } else { format!("X{i}") };
    (0..q).map(x).chain((0..q).map(|i| if i == 0 { "f".to_string() } else { format!("fX{i}") })).collect()
}

fn record_file(r: &ClassificationRecord) -> CategoryFile {
    let q = r.representative.rank() / 2;
    let data = PremodularData::new(r.name.clone(), r.representative.clone()).with_labels(record_labels(q));
    CategoryFile::from_data(&data)
        .with_metadata("split", json!(r.split))
        .with_metadata("fermion", json!(r.fermion))
        .with_metadata("provenance", json!(r.provenance))
        .with_metadata("dependencies", json!(r.dependencies))
        .with_metadata("quotient", json!({ "shape": r.quotient.shape, "params": r.quotient.params }))
        .with_metadata("lift_splits", json!(r.lift.splits))
        .with_metadata("split_factor_labels", json!(r.witness.as_ref().map(|w| w.factor_labels.clone())))
        .with_metadata("notes", json!(r.notes))
}

fn record_checks(r: &ClassificationRecord) -> ValidationReport {
    let mut v = ValidationReport::new(format!("rank {} record '{}'", r.rank, r.name));
    if let Some(c) = r.representative.validate().first_failure() {
        v.fail("fusion_ring", format!("{} failed", c.name), c.witness.clone());
    } else {
        v.pass("fusion_ring");
    }
    let again = supermod::premodular::fusion_split_witness(&r.representative, r.fermion).ok().flatten();
    v.record("split_status", (again.is_some() != r.split).then(|| ("split witness disagrees".into(), vec![r.fermion])));
    let round = partition_ring(&r.representative, r.fermion).map(|p| naive_rules(&r.representative, &p));
    v.record(
        "quotient_round_trip",
        (round.as_ref().ok() != Some(&r.quotient.nhat))
            .then(|| ("naive rules differ from the candidate".into(), vec![])),
    );
    v
}

fn run_certificates(run: &ClassificationRun) -> Value {
    let enumerations: Vec<Value> = run
        .enumerations
        .iter()
        .map(|e| {
            json!({
                "shape": e.shape,
                "bound": e.bound,
                "stats": e.stats,
                "families": e.families.iter().map(|c| json!({
                    "params": c.params, "alpha": c.alpha, "equivalent": c.equivalent,
                })).collect::<Vec<_>>(),
                "indicator_rejections": e.indicator_rejections.iter().map(|(p, why)| json!({ "params": p, "reason": why })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let lifts: Vec<Value> = run
        .lifts
        .iter()
        .map(|(cand, lo)| {
            json!({
                "candidate": cand,
                "associative": lo.associative.len(),
                "accepted": lo.accepted.iter().map(|l| l.coefficients()).collect::<Vec<_>>(),
                "rejected": lo.rejected.iter().map(|r| json!({
                    "coefficients": r.lift.coefficients(), "reason": r.reason, "dependency": r.dependency,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "rank": run.rank, "enumerations": enumerations, "lifts": lifts })
}

pub fn classify(rank: usize, bound: u32, out: Option<&Path>) -> Result<Outcome, CliError> {
    let start = Instant::now();
    if ![2, 4, 6].contains(&rank) {
        return Err(ClassifyError::UnsupportedRank(rank).into());
    }
    let mut report =
        ReportFile::new("classify", format!("super-modular fusion classes of rank <= {rank}, bound {bound}"));
    let mut runs = vec![];
    for r in (2..=rank).step_by(2) {
        runs.push(classify::classify_run(r, bound)?);
    }
    let mut text = String::new();
    let mut tally = serde_json::Map::new();
    let mut deps: Vec<String> = vec![];
    let mut files = vec![];
    for run in &runs {
        let _ = writeln!(text, "rank {}: {} split, {} non-split", run.rank, run.split_count(), run.non_split_count());
        tally.insert(
            run.rank.to_string(),
            json!({
                "split": run.split_count(),
                "non_split": run.non_split_count(),
                "classes": run.records.iter().map(|r| json!({ "name": r.name, "split": r.split })).collect::<Vec<_>>(),
            }),
        );
        for (i, r) in run.records.iter().enumerate() {
            let _ = writeln!(text, "  {} [{}]", r.name, if r.split { "split" } else { "non-split" });
            report.push(record_checks(r));
            deps.extend(r.dependencies.iter().cloned());
            files.push((format!("rank{}_{}_{}.json", run.rank, i, slug(&r.name)), record_file(r)));
        }
    }
    deps.sort();
    deps.dedup();
    let last = runs.last().expect("at least rank 2");
    report.summary.insert("tally".into(), Value::Object(tally));
    report.summary.insert("split".into(), json!(last.split_count()));
    report.summary.insert("non_split".into(), json!(last.non_split_count()));
    report.dependencies = deps;
    let mut certs = serde_json::Map::new();
    certs.insert("runs".into(), Value::Array(runs.iter().map(run_certificates).collect()));
    if rank >= 6 {
        let alpha: Vec<_> = (0..=10).map(alpha_feasibility).collect();
        certs.insert("alpha_feasibility".into(), json!(alpha));
        let mut records: Vec<ClassificationRecord> = vec![];
        for run in &runs {
            records.extend(run.records.iter().cloned());
        }
        let scan = classify::conjecture_scan(&records, &catalog::rank_le3_modular_entries());
        let _ = writeln!(
            text,
            "Ŝ-match scan: {} non-split record(s) matching a modular S-matrix",
            scan.counterexamples.len()
        );
        certs.insert("conjecture_scan".into(), json!(scan));
    }
    report.certificates = Value::Object(certs);
    let outcome = finish(report, start, text);
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
        for (name, f) in &files {
            write(&dir.join(name), &f.to_json())?;
        }
        write(&dir.join("report.json"), &outcome.report.to_json())?;
    }
    Ok(outcome)
}

pub fn spin_profiles(max_rank: usize) -> Result<Outcome, CliError> {
    let start = Instant::now();
    if max_rank < 2 {
        return Err(CliError::Usage(format!("--max-rank {max_rank}: totals start at 2")));
    }
    if max_rank > 11 {
        return Err(rank_profiles(max_rank).expect_err("out of range").into());
    }
    let mut report = ReportFile::new("spin-profiles", format!("spin modular profiles for totals 2..={max_rank}"));
    let mut table = vec![];
    let mut descriptors = vec![];
    let mut excluded = vec![];
    let mut deps = vec![];
    let mut text = String::from("total  c0  cv  csigma\n");
    for t in 2..=max_rank {
        let rp = rank_profiles(t)?;
        for p in &rp.profiles {
            let _ = writeln!(text, "{:>5} {:>3} {:>3} {:>7}", t, p.c0, p.cv, p.csigma);
            report.push(p.check());
        }
        if rp.excluded {
            let _ = writeln!(text, "{t:>5}   excluded");
            excluded.push(t);
        }
        let c = classify_spin(t)?;
        deps.extend(c.dependencies.iter().cloned());
        table.push(rp);
        descriptors.push(c);
    }
    deps.sort();
    deps.dedup();
    report.dependencies = deps;
    report.summary.insert("excluded_totals".into(), json!(excluded));
    report.certificates = json!({ "table": table, "descriptors": descriptors });
    Ok(finish(report, start, text))
}

pub fn catalog_emit(dir: &Path) -> Result<Outcome, CliError> {
    let start = Instant::now();
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut report = ReportFile::new("catalog emit", dir.display().to_string());
    let mut written = vec![];
    let mut text = String::new();
    for e in catalog::all_entries() {
        let v = verify_premodular(&e.data).unwrap_or_else(|err| failed(&e.name, "shape", err.to_string()));
        let ok = v.passed();
        report.push(v);
        if !ok {
            let _ = writeln!(text, "{}: verification failed, not written", e.name);
            continue;
        }
        let name = format!("{}.json", slug(&e.name));
        let f = CategoryFile::from_data(&e.data).with_metadata("provenance", json!(e.provenance));
        write(&dir.join(&name), &f.to_json())?;
        let _ = writeln!(text, "{} -> {name}", e.name);
        written.push(name);
    }
    report.summary.insert("files".into(), json!(written));
    Ok(finish(report, start, text))
}
