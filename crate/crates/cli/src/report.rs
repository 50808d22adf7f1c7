//! Report assembly and emission: a verdict tree with witnesses, dimension
//! tables and echoed flags, printed as aligned text or stable JSON.

use aqf_core::verdict::{Verdict, Witness};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
    InputError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::Undecided => 3,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessOut {
    pub axiom: String,
    pub elements: Vec<String>,
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        WitnessOut {
            axiom: w.axiom.clone(),
            elements: w.elements.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictEntry {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ok: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub dims: BTreeMap<String, Vec<usize>>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub flags: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &[String]) -> Self {
        Report {
            command: command.to_vec(),
            status: Status::Pass,
            verdicts: Vec::new(),
            dims: BTreeMap::new(),
            counts: BTreeMap::new(),
            flags: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn input_error(command: &[String], message: impl Into<String>) -> Self {
        let mut r = Report::new(command);
        r.status = Status::InputError;
        r.notes.push(message.into());
        r
    }

    pub fn push_verdict(&mut self, name: impl Into<String>, v: &Verdict) {
        self.verdicts.push(VerdictEntry {
            name: name.into(),
            ok: Some(v.ok),
            witness: v.witness.as_ref().map(WitnessOut::from),
            note: None,
        });
    }

    pub fn push_bool(&mut self, name: impl Into<String>, ok: bool) {
        self.verdicts.push(VerdictEntry {
            name: name.into(),
            ok: Some(ok),
            witness: None,
            note: None,
        });
    }

    pub fn push_skipped(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.verdicts.push(VerdictEntry {
            name: name.into(),
            ok: None,
            witness: None,
            note: Some(reason.into()),
        });
    }

    pub fn undecided(&mut self, note: impl Into<String>) {
        self.status = Status::Undecided;
        self.notes.push(note.into());
    }

    /// Settles the status from the verdict list: fail iff some verdict is
    /// false, unless a bounded query already marked the run undecided.
    pub fn finalize(mut self) -> Self {
        if self.status == Status::Pass
            && self.verdicts.iter().any(|v| v.ok == Some(false))
        {
            self.status = Status::Fail;
        }
        self
    }

    pub fn emit(&self, json: bool) -> String {
        if json {
            serde_json::to_string(self).expect("report serializes")
        } else {
            self.human()
        }
    }

    fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command.join(" "));
        let _ = writeln!(out, "status:  {:?}", self.status);
        if !self.verdicts.is_empty() {
            let width = self
                .verdicts
                .iter()
                .map(|v| v.name.len())
                .max()
                .unwrap_or(0);
            for v in &self.verdicts {
                let mark = match v.ok {
                    Some(true) => "ok",
                    Some(false) => "FAIL",
                    None => "skipped",
                };
                let _ = write!(out, "  {:width$}  {mark}", v.name);
                if let Some(w) = &v.witness {
                    let _ = write!(out, "  [{} at ({})]", w.axiom, w.elements.join(", "));
                }
                if let Some(n) = &v.note {
                    let _ = write!(out, "  ({n})");
                }
                out.push('\n');
            }
        }
        for (name, dims) in &self.dims {
            let cells: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(out, "  {name}: {}", cells.join(" "));
        }
        for (name, value) in &self.counts {
            let _ = writeln!(out, "  {name}: {value}");
        }
        for (name, value) in &self.flags {
            let _ = writeln!(out, "  flag {name} = {value}");
        }
        for note in &self.notes {
            let _ = writeln!(out, "  note: {note}");
        }
        out
    }
}
