//! Report envelope shared by every CLI command:
//! {"command", "n", "seed", "records": [...], "summary": {...}}.

use serde::Serialize;

use crate::lemmas::LemmaCheck;
use crate::sweep::SweepRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    SkippedResource,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Record {
    Sweep(SweepRecord),
    Lemma(LemmaCheck),
    Inspect(InspectRecord),
}

#[derive(Clone, Debug, Serialize)]
pub struct InspectRecord {
    pub expression: String,
    pub value: serde_json::Value,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub n: Vec<usize>,
    pub seed: u64,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(command: impl Into<String>, n: Vec<usize>, seed: u64, records: Vec<Record>) -> Report {
        let mut summary = Summary::default();
        for r in &records {
            match record_verdict(r) {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::SkippedResource => summary.skipped += 1,
            }
        }
        Report {
            command: command.into(),
            n,
            seed,
            records,
            summary,
        }
    }

    /// 0 = all pass, 1 = any fail, 2 = resource skips present.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.skipped > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# {} (n = {:?}, seed = {})\n\n",
            self.command, self.n, self.seed
        ));
        out.push_str("| record | verdict | detail |\n|---|---|---|\n");
        for r in &self.records {
            let (name, verdict, detail) = match r {
                Record::Sweep(s) => (
                    format!("{} (x) {}", s.lambda, s.mu),
                    record_verdict(r),
                    format!(
                        "dim {} irreducible={} iso={:?}",
                        s.tensor_dim, s.irreducible, s.iso_label
                    ),
                ),
                Record::Lemma(l) => (
                    format!("{} [{}]", l.lemma_id, l.instance),
                    record_verdict(r),
                    l.witness.clone(),
                ),
                Record::Inspect(i) => (
                    i.expression.clone(),
                    record_verdict(r),
                    i.value.to_string(),
                ),
            };
            out.push_str(&format!("| {} | {:?} | {} |\n", name, verdict, detail));
        }
        out.push_str(&format!(
            "\npass {} / fail {} / skipped {}\n",
            self.summary.pass, self.summary.fail, self.summary.skipped
        ));
        out
    }
}

fn record_verdict(r: &Record) -> Verdict {
    match r {
        Record::Sweep(s) => s.verdict,
        Record::Lemma(l) => l.verdict,
        Record::Inspect(i) => i.verdict,
    }
}
