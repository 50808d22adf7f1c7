//! The line-oriented structure-definition format.
//!
//! A file holds one named section: `[hyperfield NAME]`, `[specialgroup
//! NAME]` or `[igr NAME]`. Tables are given entry-wise; set-valued sums use
//! brace lists. Multiplication and sum entries may be given in either
//! argument order and are mirrored when only one order is present, so a
//! file can state a non-commutative table explicitly when it wants to.

use aqf_core::gf2::{BilinearTable, BitMatrix, BitVector};
use aqf_core::hyperfield::Multiring;
use aqf_core::igr::TruncatedIgr;
use aqf_core::sgroup::PreSpecialGroup;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

type ParseResult<T> = Result<T, ParseError>;

fn err<T>(line: usize, message: impl Into<String>) -> ParseResult<T> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Characters with grammar meaning; labels may not contain them.
const RESERVED: &[char] = &[
    '*', '=', '+', '{', '}', ',', '(', ')', '~', '>', '[', ']', ':',
];

fn check_label(line: usize, label: &str) -> ParseResult<()> {
    if label.is_empty() || label.chars().any(|c| RESERVED.contains(&c) || c.is_whitespace()) {
        return err(line, format!("invalid element label {label:?}"));
    }
    Ok(())
}

/// Replaces grammar characters so generated structures stay serializable.
pub fn sanitize_label(label: &str) -> String {
    label
        .chars()
        .map(|c| {
            if RESERVED.contains(&c) || c.is_whitespace() {
                '_'
            } else {
                c
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub enum StructureData {
    Hyperfield(Multiring),
    SpecialGroup(PreSpecialGroup),
    Igr(TruncatedIgr),
}

#[derive(Debug, Clone)]
pub struct StructureFile {
    pub name: String,
    pub data: StructureData,
}

impl StructureFile {
    pub fn kind(&self) -> &'static str {
        match self.data {
            StructureData::Hyperfield(_) => "hyperfield",
            StructureData::SpecialGroup(_) => "specialgroup",
            StructureData::Igr(_) => "igr",
        }
    }
}

struct Lines<'a> {
    items: Vec<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { items }
    }
}

pub fn parse_structure_file(text: &str) -> ParseResult<StructureFile> {
    let lines = Lines::new(text);
    let Some(&(first_no, header)) = lines.items.first() else {
        return err(0, "empty file");
    };
    if !header.starts_with('[') || !header.ends_with(']') {
        return err(first_no, "expected a [kind NAME] header");
    }
    let inner = &header[1..header.len() - 1];
    let mut parts = inner.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let name = parts.next().unwrap_or("").to_string();
    if name.is_empty() || parts.next().is_some() {
        return err(first_no, "header must be [kind NAME]");
    }
    let body = &lines.items[1..];
    for &(no, l) in body {
        if l.starts_with('[') {
            return err(no, "duplicate section header");
        }
    }
    let data = match kind {
        "hyperfield" => StructureData::Hyperfield(parse_hyperfield(&name, body)?),
        "specialgroup" => StructureData::SpecialGroup(parse_specialgroup(&name, body)?),
        "igr" => StructureData::Igr(parse_igr(&name, body)?),
        _ => return err(first_no, format!("unknown section kind {kind:?}")),
    };
    Ok(StructureFile { name, data })
}

fn split_key(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    Some((key.trim(), rest.trim()))
}

fn parse_hyperfield(name: &str, body: &[(usize, &str)]) -> ParseResult<Multiring> {
    let mut elements: Vec<String> = Vec::new();
    let mut zero: Option<String> = None;
    let mut one: Option<String> = None;
    let mut neg_entries: Vec<(usize, String, String)> = Vec::new();
    let mut mul_entries: Vec<(usize, String, String, String)> = Vec::new();
    let mut sum_entries: Vec<(usize, String, String, Vec<String>)> = Vec::new();
    for &(no, line) in body {
        let Some((key, rest)) = split_key(line) else {
            return err(no, "expected `key: entries`");
        };
        match key {
            "elements" => {
                for tok in rest.split_whitespace() {
                    check_label(no, tok)?;
                    elements.push(tok.to_string());
                }
            }
            "zero" => zero = Some(rest.to_string()),
            "one" => one = Some(rest.to_string()),
            "neg" => {
                for tok in rest.split_whitespace() {
                    let Some((a, b)) = tok.split_once("->") else {
                        return err(no, format!("neg entry {tok:?} must be a->b"));
                    };
                    neg_entries.push((no, a.to_string(), b.to_string()));
                }
            }
            "mul" => {
                for tok in rest.split_whitespace() {
                    let Some((lhs, c)) = tok.split_once('=') else {
                        return err(no, format!("mul entry {tok:?} must be a*b=c"));
                    };
                    let Some((a, b)) = lhs.split_once('*') else {
                        return err(no, format!("mul entry {tok:?} must be a*b=c"));
                    };
                    mul_entries.push((no, a.to_string(), b.to_string(), c.to_string()));
                }
            }
            "sum" => {
                for tok in rest.split_whitespace() {
                    let Some((lhs, set)) = tok.split_once('=') else {
                        return err(no, format!("sum entry {tok:?} must be a+b={{x,y}}"));
                    };
                    let Some((a, b)) = lhs.split_once('+') else {
                        return err(no, format!("sum entry {tok:?} must be a+b={{x,y}}"));
                    };
                    let set = set
                        .strip_prefix('{')
                        .and_then(|s| s.strip_suffix('}'))
                        .ok_or_else(|| ParseError {
                            line: no,
                            message: format!("sum value in {tok:?} must be {{x,y}}"),
                        })?;
                    let members: Vec<String> = set
                        .split(',')
                        .filter(|s| !s.is_empty())
                        .map(|s| s.to_string())
                        .collect();
                    if members.is_empty() {
                        return err(no, format!("sum {a}+{b} is empty"));
                    }
                    sum_entries.push((no, a.to_string(), b.to_string(), members));
                }
            }
            _ => return err(no, format!("unknown key {key:?}")),
        }
    }
    if elements.is_empty() {
        return err(0, "missing elements line");
    }
    let index = |no: usize, label: &str| -> ParseResult<usize> {
        elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| ParseError {
                line: no,
                message: format!("unknown element {label:?}"),
            })
    };
    let n = elements.len();
    let zero = index(0, &zero.ok_or_else(|| ParseError { line: 0, message: "missing zero line".into() })?)?;
    let one = index(0, &one.ok_or_else(|| ParseError { line: 0, message: "missing one line".into() })?)?;
    let mut neg = vec![usize::MAX; n];
    for (no, a, b) in neg_entries {
        neg[index(no, &a)?] = index(no, &b)?;
    }
    if let Some(a) = (0..n).find(|&a| neg[a] == usize::MAX) {
        return err(0, format!("missing neg entry for {}", elements[a]));
    }
    let mut mul = vec![usize::MAX; n * n];
    for (no, a, b, c) in mul_entries {
        let (a, b, c) = (index(no, &a)?, index(no, &b)?, index(no, &c)?);
        mul[a * n + b] = c;
        if mul[b * n + a] == usize::MAX {
            mul[b * n + a] = c;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if mul[a * n + b] == usize::MAX {
                return err(
                    0,
                    format!("missing mul entry for {}*{}", elements[a], elements[b]),
                );
            }
        }
    }
    let mut sum = vec![0u64; n * n];
    for (no, a, b, members) in sum_entries {
        let (a, b) = (index(no, &a)?, index(no, &b)?);
        let mut mask = 0u64;
        for m in members {
            mask |= 1 << index(no, &m)?;
        }
        sum[a * n + b] = mask;
        if sum[b * n + a] == 0 {
            sum[b * n + a] = mask;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if sum[a * n + b] == 0 {
                return err(
                    0,
                    format!("missing sum entry for {}+{}", elements[a], elements[b]),
                );
            }
        }
    }
    Multiring::new(name, elements, zero, one, neg, mul, sum).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

fn parse_specialgroup(name: &str, body: &[(usize, &str)]) -> ParseResult<PreSpecialGroup> {
    let mut elements: Vec<String> = Vec::new();
    let mut minus_one: Option<String> = None;
    let mut rows: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut iso: Vec<(usize, String)> = Vec::new();
    for &(no, line) in body {
        let Some((key, rest)) = split_key(line) else {
            return err(no, "expected `key: entries`");
        };
        if key == "elements" {
            for tok in rest.split_whitespace() {
                check_label(no, tok)?;
                elements.push(tok.to_string());
            }
        } else if key == "minusone" {
            minus_one = Some(rest.to_string());
        } else if let Some(label) = key.strip_prefix("mulrow ") {
            rows.push((
                no,
                label.trim().to_string(),
                rest.split_whitespace().map(|s| s.to_string()).collect(),
            ));
        } else if key == "iso" {
            for tok in rest.split_whitespace() {
                iso.push((no, tok.to_string()));
            }
        } else {
            return err(no, format!("unknown key {key:?}"));
        }
    }
    if elements.is_empty() {
        return err(0, "missing elements line");
    }
    let index = |no: usize, label: &str| -> ParseResult<usize> {
        elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| ParseError {
                line: no,
                message: format!("unknown element {label:?}"),
            })
    };
    let n = elements.len();
    let mut mul = vec![usize::MAX; n * n];
    for (no, label, entries) in rows {
        let a = index(no, &label)?;
        if entries.len() != n {
            return err(no, format!("mulrow {label} must list {n} products"));
        }
        for (b, entry) in entries.iter().enumerate() {
            mul[a * n + b] = index(no, entry)?;
        }
    }
    if mul.iter().any(|&x| x == usize::MAX) {
        return err(0, "missing mulrow lines");
    }
    let minus_one = index(
        0,
        &minus_one.ok_or_else(|| ParseError {
            line: 0,
            message: "missing minusone line".into(),
        })?,
    )?;
    let mut pairs = Vec::new();
    for (no, tok) in iso {
        let Some((lhs, rhs)) = tok.split_once('~') else {
            return err(no, format!("iso entry {tok:?} must be (a,b)~(c,d)"));
        };
        let parse_pair = |s: &str| -> ParseResult<(usize, usize)> {
            let inner = s
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| ParseError {
                    line: no,
                    message: format!("pair {s:?} must be (a,b)"),
                })?;
            let Some((a, b)) = inner.split_once(',') else {
                return err(no, format!("pair {s:?} must be (a,b)"));
            };
            Ok((index(no, a)?, index(no, b)?))
        };
        let (a, b) = parse_pair(lhs)?;
        let (c, d) = parse_pair(rhs)?;
        pairs.push((a, b, c, d));
    }
    PreSpecialGroup::new(name, elements, mul, minus_one, &pairs).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

fn parse_bits(no: usize, tok: &str, len: usize) -> ParseResult<BitVector> {
    if tok == "-" {
        if len != 0 {
            return err(no, format!("expected {len} bits, got the empty marker"));
        }
        return Ok(BitVector::zeros(0));
    }
    if tok.len() != len {
        return err(no, format!("expected {len} bits, got {tok:?}"));
    }
    BitVector::parse(tok).map_err(|e| ParseError {
        line: no,
        message: e.to_string(),
    })
}

fn parse_igr(name: &str, body: &[(usize, &str)]) -> ParseResult<TruncatedIgr> {
    let mut truncation: Option<usize> = None;
    let mut level_lines: Vec<(usize, usize, usize, String)> = Vec::new();
    let mut h_lines: Vec<(usize, usize, Vec<String>)> = Vec::new();
    let mut star_lines: Vec<(usize, usize, usize, Vec<String>)> = Vec::new();
    for &(no, line) in body {
        let Some((key, rest)) = split_key(line) else {
            return err(no, "expected `key: entries`");
        };
        if key == "truncation" {
            truncation = rest.parse().ok();
            if truncation.is_none() {
                return err(no, "truncation must be a number");
            }
        } else if let Some(lvl) = key.strip_prefix("level ") {
            let lvl: usize = lvl
                .trim()
                .parse()
                .map_err(|_| ParseError {
                    line: no,
                    message: "level index must be a number".into(),
                })?;
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "dim" || toks[2] != "top" {
                return err(no, "level line must be `level N: dim D top BITS`");
            }
            let dim: usize = toks[1].parse().map_err(|_| ParseError {
                line: no,
                message: "dim must be a number".into(),
            })?;
            level_lines.push((no, lvl, dim, toks[3].to_string()));
        } else if let Some(lvl) = key.strip_prefix("h ") {
            let lvl: usize = lvl.trim().parse().map_err(|_| ParseError {
                line: no,
                message: "transition index must be a number".into(),
            })?;
            h_lines.push((
                no,
                lvl,
                rest.split_whitespace().map(|s| s.to_string()).collect(),
            ));
        } else if let Some(nm) = key.strip_prefix("star ") {
            let parts: Vec<&str> = nm.split_whitespace().collect();
            if parts.len() != 2 {
                return err(no, "star line must be `star N M: i*j=BITS ...`");
            }
            let a: usize = parts[0].parse().map_err(|_| ParseError {
                line: no,
                message: "star degree must be a number".into(),
            })?;
            let b: usize = parts[1].parse().map_err(|_| ParseError {
                line: no,
                message: "star degree must be a number".into(),
            })?;
            star_lines.push((
                no,
                a,
                b,
                rest.split_whitespace().map(|s| s.to_string()).collect(),
            ));
        } else {
            return err(no, format!("unknown key {key:?}"));
        }
    }
    let n = truncation.ok_or_else(|| ParseError {
        line: 0,
        message: "missing truncation line".into(),
    })?;
    let mut dims = vec![usize::MAX; n + 1];
    let mut top_toks = vec![(0usize, String::new()); n + 1];
    for (no, lvl, dim, top) in level_lines {
        if lvl > n {
            return err(no, format!("level {lvl} exceeds truncation {n}"));
        }
        dims[lvl] = dim;
        top_toks[lvl] = (no, top);
    }
    if let Some(lvl) = dims.iter().position(|&d| d == usize::MAX) {
        return err(0, format!("missing level {lvl} line"));
    }
    let mut tops = Vec::with_capacity(n + 1);
    for (lvl, (no, tok)) in top_toks.iter().enumerate() {
        tops.push(parse_bits(*no, tok, dims[lvl])?);
    }
    let mut h = vec![None; n];
    for (no, lvl, rows) in h_lines {
        if lvl >= n {
            return err(no, format!("transition {lvl} exceeds truncation"));
        }
        if rows.len() != dims[lvl + 1] {
            return err(
                no,
                format!("transition {lvl} needs {} rows", dims[lvl + 1]),
            );
        }
        let mut parsed = Vec::with_capacity(rows.len());
        for r in rows {
            parsed.push(parse_bits(no, &r, dims[lvl])?);
        }
        h[lvl] = Some(BitMatrix::from_rows(dims[lvl], parsed));
    }
    let h: Vec<BitMatrix> = h
        .into_iter()
        .enumerate()
        .map(|(lvl, m)| {
            m.ok_or_else(|| ParseError {
                line: 0,
                message: format!("missing h {lvl} line"),
            })
        })
        .collect::<ParseResult<_>>()?;
    let mut star = BTreeMap::new();
    for (no, a, b, entries) in star_lines {
        if a == 0 || b == 0 || a + b > n {
            return err(no, format!("star {a} {b} is out of the truncation"));
        }
        let mut table = vec![None; dims[a] * dims[b]];
        for tok in entries {
            let Some((lhs, bits)) = tok.split_once('=') else {
                return err(no, format!("star entry {tok:?} must be i*j=BITS"));
            };
            let Some((i, j)) = lhs.split_once('*') else {
                return err(no, format!("star entry {tok:?} must be i*j=BITS"));
            };
            let i: usize = i.parse().map_err(|_| ParseError {
                line: no,
                message: "basis index must be a number".into(),
            })?;
            let j: usize = j.parse().map_err(|_| ParseError {
                line: no,
                message: "basis index must be a number".into(),
            })?;
            if i >= dims[a] || j >= dims[b] {
                return err(no, format!("basis pair {i}*{j} out of range"));
            }
            table[i * dims[b] + j] = Some(parse_bits(no, bits, dims[a + b])?);
        }
        let entries: Vec<BitVector> = table
            .into_iter()
            .enumerate()
            .map(|(k, e)| {
                e.ok_or_else(|| ParseError {
                    line: no,
                    message: format!(
                        "missing star {a} {b} entry {}*{}",
                        k / dims[b],
                        k % dims[b]
                    ),
                })
            })
            .collect::<ParseResult<_>>()?;
        star.insert(
            (a, b),
            BilinearTable::new(dims[a], dims[b], dims[a + b], entries).map_err(|e| ParseError {
                line: no,
                message: e.to_string(),
            })?,
        );
    }
    TruncatedIgr::new(name, dims, tops, h, star).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

/// Serializes a structure back into the file grammar; labels are sanitized
/// so machine-built structures stay printable.
pub fn serialize_structure(file: &StructureFile) -> String {
    match &file.data {
        StructureData::Hyperfield(m) => serialize_hyperfield(&file.name, m),
        StructureData::SpecialGroup(g) => serialize_specialgroup(&file.name, g),
        StructureData::Igr(r) => serialize_igr(&file.name, r),
    }
}

fn serialize_hyperfield(name: &str, m: &Multiring) -> String {
    let lab: Vec<String> = m.labels().iter().map(|l| sanitize_label(l)).collect();
    let mut out = format!("[hyperfield {}]\n", sanitize_label(name));
    out += &format!("elements: {}\n", lab.join(" "));
    out += &format!("zero: {}\n", lab[m.zero()]);
    out += &format!("one: {}\n", lab[m.one()]);
    let negs: Vec<String> = (0..m.size())
        .map(|a| format!("{}->{}", lab[a], lab[m.neg(a)]))
        .collect();
    out += &format!("neg: {}\n", negs.join(" "));
    for a in 0..m.size() {
        let row: Vec<String> = (a..m.size())
            .map(|b| format!("{}*{}={}", lab[a], lab[b], lab[m.mul(a, b)]))
            .collect();
        out += &format!("mul: {}\n", row.join(" "));
    }
    for a in 0..m.size() {
        let row: Vec<String> = (a..m.size())
            .map(|b| {
                let members: Vec<&str> = m
                    .sum_set(a, b)
                    .into_iter()
                    .map(|c| lab[c].as_str())
                    .collect();
                format!("{}+{}={{{}}}", lab[a], lab[b], members.join(","))
            })
            .collect();
        out += &format!("sum: {}\n", row.join(" "));
    }
    out
}

fn serialize_specialgroup(name: &str, g: &PreSpecialGroup) -> String {
    let lab: Vec<String> = g.labels().iter().map(|l| sanitize_label(l)).collect();
    let mut out = format!("[specialgroup {}]\n", sanitize_label(name));
    out += &format!("elements: {}\n", lab.join(" "));
    out += &format!("minusone: {}\n", lab[g.minus_one()]);
    for a in 0..g.size() {
        let row: Vec<&str> = (0..g.size()).map(|b| lab[g.mul(a, b)].as_str()).collect();
        out += &format!("mulrow {}: {}\n", lab[a], row.join(" "));
    }
    let entries: Vec<String> = g
        .iso2_entries()
        .into_iter()
        .map(|(a, b, c, d)| format!("({},{})~({},{})", lab[a], lab[b], lab[c], lab[d]))
        .collect();
    for chunk in entries.chunks(8) {
        out += &format!("iso: {}\n", chunk.join(" "));
    }
    out
}

fn serialize_igr(name: &str, r: &TruncatedIgr) -> String {
    let n = r.truncation();
    let mut out = format!("[igr {}]\n", sanitize_label(name));
    out += &format!("truncation: {n}\n");
    for lvl in 0..=n {
        out += &format!("level {lvl}: dim {} top {}\n", r.dim(lvl), r.top(lvl));
    }
    for lvl in 0..n {
        let rows: Vec<String> = (0..r.dim(lvl + 1))
            .map(|i| r.h(lvl).row(i).to_string())
            .collect();
        if rows.is_empty() {
            out += &format!("h {lvl}:\n");
        } else {
            out += &format!("h {lvl}: {}\n", rows.join(" "));
        }
    }
    for a in 1..n {
        for b in 1..n {
            if a + b > n {
                continue;
            }
            let mut entries = Vec::new();
            for i in 0..r.dim(a) {
                for j in 0..r.dim(b) {
                    entries.push(format!("{i}*{j}={}", r.star_table(a, b).entry(i, j)));
                }
            }
            if entries.is_empty() {
                out += &format!("star {a} {b}:\n");
            } else {
                out += &format!("star {a} {b}: {}\n", entries.join(" "));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q2_FILE: &str = "\
[hyperfield q2]
elements: -1 0 1
zero: 0
one: 1
neg: -1->1 0->0 1->-1
mul: -1*-1=1 -1*0=0 -1*1=-1 0*0=0 0*1=0 1*1=1
sum: -1+-1={-1} -1+0={-1} -1+1={-1,0,1} 0+0={0} 0+1={1} 1+1={1}
";

    #[test]
    fn q2_file_matches_the_builtin_table() {
        let parsed = parse_structure_file(Q2_FILE).unwrap();
        let StructureData::Hyperfield(m) = &parsed.data else {
            panic!("wrong kind")
        };
        let builtin = aqf_core::pool::q2().with_name("q2");
        assert_eq!(*m, builtin);
    }

    #[test]
    fn missing_sum_cell_is_an_error_naming_the_cell() {
        let broken = Q2_FILE.replace(" 1+1={1}", "");
        let e = parse_structure_file(&broken).unwrap_err();
        assert!(e.message.contains("1+1"), "{}", e.message);
    }

    #[test]
    fn unknown_label_is_an_error() {
        let broken = Q2_FILE.replace("sum: -1+-1={-1}", "sum: -1+-1={bogus}");
        let e = parse_structure_file(&broken).unwrap_err();
        assert!(e.message.contains("bogus"));
    }

    #[test]
    fn round_trip_all_kinds() {
        let q2 = StructureFile {
            name: "q2".into(),
            data: StructureData::Hyperfield(aqf_core::pool::q2()),
        };
        let text = serialize_structure(&q2);
        let back = parse_structure_file(&text).unwrap();
        let StructureData::Hyperfield(m) = &back.data else {
            panic!()
        };
        assert_eq!(m.labels(), aqf_core::pool::q2().labels());
        assert_eq!(serialize_structure(&back), text);

        let z2 = StructureFile {
            name: "z2".into(),
            data: StructureData::SpecialGroup(aqf_core::pool::z2_sg()),
        };
        let text = serialize_structure(&z2);
        let back = parse_structure_file(&text).unwrap();
        assert_eq!(serialize_structure(&back), text);

        let kq2 = StructureFile {
            name: "kq2".into(),
            data: StructureData::Igr(
                aqf_core::ktheory::compute_k(&aqf_core::pool::q2(), 3, None)
                    .unwrap()
                    .igr()
                    .clone(),
            ),
        };
        let text = serialize_structure(&kq2);
        let back = parse_structure_file(&text).unwrap();
        let StructureData::Igr(r) = &back.data else { panic!() };
        assert!(r.check_igr().ok);
        assert_eq!(serialize_structure(&back), text);
    }
}
