//! Structured reports with two renderings: an aligned human-readable text
//! form (insertion order) and a byte-stable machine form (sorted keys,
//! UTF-8, LF line endings).
//!
//! Claim mismatches are report content, never process failures.

use std::fmt::Write as _;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Pass,
    Fail,
    Match,
    Mismatch,
    Note,
}

impl Verdict {
    pub fn from_bool_check(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn from_bool_claim(ok: bool) -> Verdict {
        if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Note => "note",
        }
    }

    fn tag(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Note => "NOTE",
        }
    }
}

/// One audited check: a stable id, the quoted reference text under audit,
/// the verdict, the computed value or residual, and convention tags.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub verdict: Verdict,
    pub value: String,
    pub conventions: Vec<String>,
}

#[derive(Clone, Debug)]
pub enum Line {
    Info { key: String, value: String },
    Check(Check),
}

#[derive(Clone, Debug, Default)]
pub struct Section {
    pub id: String,
    pub title: String,
    pub lines: Vec<Line>,
}

impl Section {
    pub fn new(id: impl Into<String>, title: impl Into<String>) -> Self {
        Section { id: id.into(), title: title.into(), lines: Vec::new() }
    }

    pub fn info(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.lines.push(Line::Info { key: key.into(), value: value.into() });
    }

    pub fn check(
        &mut self,
        id: impl Into<String>,
        verdict: Verdict,
        value: impl Into<String>,
    ) -> &mut Check {
        self.lines.push(Line::Check(Check {
            id: id.into(),
            anchor: String::new(),
            verdict,
            value: value.into(),
            conventions: Vec::new(),
        }));
        match self.lines.last_mut() {
            Some(Line::Check(c)) => c,
            _ => unreachable!(),
        }
    }

    pub fn has_mismatch(&self) -> bool {
        self.lines.iter().any(|l| {
            matches!(
                l,
                Line::Check(Check { verdict: Verdict::Fail | Verdict::Mismatch, .. })
            )
        })
    }
}

impl Check {
    pub fn anchored(&mut self, anchor: impl Into<String>) -> &mut Check {
        self.anchor = anchor.into();
        self
    }

    pub fn tagged(&mut self, tag: impl Into<String>) -> &mut Check {
        self.conventions.push(tag.into());
        self
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub title: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), sections: Vec::new() }
    }

    pub fn section(&mut self, id: impl Into<String>, title: impl Into<String>) -> &mut Section {
        self.sections.push(Section::new(id, title));
        self.sections.last_mut().expect("just pushed")
    }

    pub fn push_section(&mut self, s: Section) {
        self.sections.push(s);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Machine,
}

impl Format {
    pub fn parse(s: &str) -> crate::error::Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "machine" => Ok(Format::Machine),
            _ => Err(crate::error::Error::Cli(format!("unknown format `{s}`"))),
        }
    }
}

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Text => emit_text(report),
        Format::Machine => emit_machine(report),
    }
}

fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", report.title);
    let _ = writeln!(out, "{}", "=".repeat(report.title.chars().count()));
    for s in &report.sections {
        let _ = writeln!(out);
        let _ = writeln!(out, "[{}] {}", s.id, s.title);
        let width = s
            .lines
            .iter()
            .map(|l| match l {
                Line::Info { key, .. } => key.chars().count(),
                Line::Check(c) => c.id.chars().count(),
            })
            .max()
            .unwrap_or(0);
        for l in &s.lines {
            match l {
                Line::Info { key, value } => {
                    let _ = writeln!(out, "  {key:width$}  {value}");
                }
                Line::Check(c) => {
                    let mut tail = String::new();
                    if !c.conventions.is_empty() {
                        let _ = write!(tail, "  [{}]", c.conventions.join(", "));
                    }
                    if !c.anchor.is_empty() {
                        let _ = write!(tail, "  re: \"{}\"", c.anchor);
                    }
                    let _ = writeln!(
                        out,
                        "  {:width$}  {:8}  {}{}",
                        c.id,
                        c.verdict.tag(),
                        c.value,
                        tail
                    );
                }
            }
        }
    }
    out
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out
}

/// Machine form: a hierarchical key-value tree with keys sorted at every
/// level, two-space indentation, quoted scalar values.
fn emit_machine(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "report:");
    let _ = writeln!(out, "  sections:");
    let mut ids: Vec<&Section> = report.sections.iter().collect();
    ids.sort_by(|a, b| a.id.cmp(&b.id));
    for s in ids {
        let _ = writeln!(out, "    {}:", s.id);
        let _ = writeln!(out, "      lines:");
        // stable keys: line id (info key or check id), deduplicated by a
        // numeric suffix in insertion order, then sorted
        let mut keyed: Vec<(String, &Line)> = Vec::new();
        for l in &s.lines {
            let base = match l {
                Line::Info { key, .. } => key.clone(),
                Line::Check(c) => c.id.clone(),
            };
            let mut key = base.clone();
            let mut k = 1;
            while keyed.iter().any(|(existing, _)| existing == &key) {
                k += 1;
                key = format!("{base}#{k}");
            }
            keyed.push((key, l));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        for (key, l) in keyed {
            let _ = writeln!(out, "        {key}:");
            match l {
                Line::Info { value, .. } => {
                    let _ = writeln!(out, "          kind: \"info\"");
                    let _ = writeln!(out, "          value: \"{}\"", escape(value));
                }
                Line::Check(c) => {
                    let _ = writeln!(out, "          anchor: \"{}\"", escape(&c.anchor));
                    let _ = writeln!(
                        out,
                        "          conventions: \"{}\"",
                        escape(&c.conventions.join(","))
                    );
                    let _ = writeln!(out, "          kind: \"check\"");
                    let _ = writeln!(out, "          value: \"{}\"", escape(&c.value));
                    let _ = writeln!(out, "          verdict: \"{}\"", c.verdict.as_str());
                }
            }
        }
        let _ = writeln!(out, "      title: \"{}\"", escape(&s.title));
    }
    let _ = writeln!(out, "  title: \"{}\"", escape(&report.title));
    out
}
