//! Line-oriented text formats.
//!
//! Structure files:
//!
//! ```text
//! elements: a b          # once, first declaration
//! op: a b -> a b         # once per ordered pair, right side nonempty
//! le: a b                # any number; a ≤ b
//! ```
//!
//! Subset files hold one `subset: <label> ...` line and fuzzy files one
//! `fuzzy: <label>=<rational> ...` line. `#` starts a comment everywhere.
//!
//! Reports are one record per line (`PROPERTY`, `THEOREM`, `COUNT`,
//! `SEARCH`), with `WITNESS` records followed by an indented block that
//! [`parse_witness`] reads back.

use std::collections::HashMap;
use std::fmt;

use crate::fuzzy::{FuzzySubset, Grade, GradeParseError};
use crate::structures::{BinaryRelation, Carrier, CrispSubset, ElementId, FiniteHypergroupoid};
use crate::theorem::{Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagnosticKind {
    SyntaxError(String),
    MissingCell { x: String, y: String },
    DuplicateCell { x: String, y: String },
    EmptyImage { x: String, y: String },
    UnknownElement(String),
    InvalidElement(String),
    MissingGrade(String),
    GradeOutOfRange(String),
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagnosticKind::SyntaxError(m) => write!(f, "syntax error: {m}"),
            DiagnosticKind::MissingCell { x, y } => write!(f, "missing `op` line for {x} {y}"),
            DiagnosticKind::DuplicateCell { x, y } => write!(f, "duplicate `op` line for {x} {y}"),
            DiagnosticKind::EmptyImage { x, y } => write!(f, "{x} ∘ {y} must be nonempty"),
            DiagnosticKind::UnknownElement(t) => write!(f, "unknown element `{t}`"),
            DiagnosticKind::InvalidElement(t) => write!(f, "invalid element label `{t}`"),
            DiagnosticKind::MissingGrade(x) => write!(f, "no grade given for `{x}`"),
            DiagnosticKind::GradeOutOfRange(x) => write!(f, "grade of `{x}` lies outside [0, 1]"),
        }
    }
}

/// A positioned rejection. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseDiagnostic {
    pub line: usize,
    pub column: usize,
    pub kind: DiagnosticKind,
    pub token: String,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.kind)?;
        if !self.token.is_empty() {
            write!(f, " (at `{}`)", self.token)?;
        }
        Ok(())
    }
}

/// Every diagnostic raised by one parse, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseErrors(pub Vec<ParseDiagnostic>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

#[derive(Debug)]
struct SourceLine<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

/// Comment-stripped, tokenised, nonblank lines with positions.
struct SourceDocument<'a> {
    lines: Vec<SourceLine<'a>>,
}

impl<'a> SourceDocument<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let body = raw.split('#').next().unwrap_or("");
                SourceLine {
                    number: i + 1,
                    tokens: tokenize(body),
                }
            })
            .filter(|l| !l.tokens.is_empty())
            .collect();
        SourceDocument { lines }
    }
}

fn tokenize(body: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    for (byte, ch) in body.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                out.push(Token {
                    column: c,
                    text: &body[b..byte],
                });
            }
        } else if start.is_none() {
            start = Some((byte, column));
        }
    }
    if let Some((b, c)) = start {
        out.push(Token {
            column: c,
            text: &body[b..],
        });
    }
    out
}

struct Diagnostics(Vec<ParseDiagnostic>);

impl Diagnostics {
    fn push(&mut self, line: usize, tok: Option<Token<'_>>, kind: DiagnosticKind) {
        let (column, token) = tok.map_or((1, String::new()), |t| (t.column, t.text.to_owned()));
        self.0.push(ParseDiagnostic {
            line,
            column,
            kind,
            token,
        });
    }

    fn syntax(&mut self, line: usize, tok: Option<Token<'_>>, msg: impl Into<String>) {
        self.push(line, tok, DiagnosticKind::SyntaxError(msg.into()));
    }

    fn into_errors(mut self) -> ParseErrors {
        self.0.sort_by_key(|d| (d.line, d.column));
        ParseErrors(self.0)
    }

    fn finish<T>(self, value: impl FnOnce() -> T) -> Result<T, ParseErrors> {
        if self.0.is_empty() {
            Ok(value())
        } else {
            Err(self.into_errors())
        }
    }
}

fn resolve(
    carrier: &Carrier,
    line: usize,
    tok: Token<'_>,
    diags: &mut Diagnostics,
) -> Option<ElementId> {
    let id = carrier.index_of(tok.text);
    if id.is_none() {
        diags.push(
            line,
            Some(tok),
            DiagnosticKind::UnknownElement(tok.text.to_owned()),
        );
    }
    id
}

/// Parses a structure file into a ≤-hypergroupoid.
pub fn parse_structure(text: &str) -> Result<(FiniteHypergroupoid, BinaryRelation), ParseErrors> {
    let doc = SourceDocument::new(text);
    let mut diags = Diagnostics(Vec::new());

    let Some(first) = doc.lines.first() else {
        diags.syntax(1, None, "expected `elements:` declaration");
        return Err(diags.into_errors());
    };
    if first.tokens[0].text != "elements:" {
        diags.syntax(
            first.number,
            Some(first.tokens[0]),
            "first declaration must be `elements:`",
        );
        return Err(diags.into_errors());
    }
    let labels = &first.tokens[1..];
    if labels.is_empty() {
        diags.syntax(first.number, Some(first.tokens[0]), "no elements declared");
        return Err(diags.into_errors());
    }
    let mut seen: Vec<&str> = Vec::new();
    for &t in labels {
        if !crate::structures::is_valid_label(t.text) {
            diags.push(
                first.number,
                Some(t),
                DiagnosticKind::InvalidElement(t.text.to_owned()),
            );
        } else if seen.contains(&t.text) {
            diags.syntax(first.number, Some(t), "duplicate element");
        }
        seen.push(t.text);
    }
    if labels.len() > crate::structures::MAX_CARRIER {
        diags.syntax(first.number, Some(labels[0]), "more than 64 elements");
    }
    if !diags.0.is_empty() {
        return Err(diags.into_errors());
    }
    let carrier = Carrier::with_labels(labels.iter().map(|t| t.text)).expect("labels validated");
    let n = carrier.len();

    let mut cells: Vec<Option<CrispSubset>> = vec![None; n * n];
    let mut le_pairs = Vec::new();

    for line in &doc.lines[1..] {
        let head = line.tokens[0];
        let args = &line.tokens[1..];
        match head.text {
            "elements:" => diags.syntax(line.number, Some(head), "`elements:` declared twice"),
            "op:" => {
                let arrow = args.iter().position(|t| t.text == "->");
                let Some(arrow) = arrow else {
                    diags.syntax(line.number, Some(head), "expected `op: <x> <y> -> <z> ...`");
                    continue;
                };
                if arrow != 2 {
                    diags.syntax(
                        line.number,
                        Some(args[arrow]),
                        "`op:` takes exactly two operands before `->`",
                    );
                    continue;
                }
                let x = resolve(&carrier, line.number, args[0], &mut diags);
                let y = resolve(&carrier, line.number, args[1], &mut diags);
                let mut image = CrispSubset::EMPTY;
                let mut image_ok = true;
                for &z in &args[3..] {
                    match resolve(&carrier, line.number, z, &mut diags) {
                        Some(id) => image.insert(id),
                        None => image_ok = false,
                    }
                }
                let (Some(x), Some(y)) = (x, y) else { continue };
                let slot = &mut cells[x.index() * n + y.index()];
                let names = || (carrier.label(x).to_owned(), carrier.label(y).to_owned());
                if slot.is_some() {
                    let (x, y) = names();
                    diags.push(
                        line.number,
                        Some(head),
                        DiagnosticKind::DuplicateCell { x, y },
                    );
                } else if args.len() == 3 {
                    let (x, y) = names();
                    diags.push(
                        line.number,
                        Some(args[2]),
                        DiagnosticKind::EmptyImage { x, y },
                    );
                    *slot = Some(CrispSubset::EMPTY);
                } else if image_ok {
                    *slot = Some(image);
                } else {
                    *slot = Some(CrispSubset::EMPTY);
                }
            }
            "le:" => {
                if args.len() != 2 {
                    diags.syntax(line.number, Some(head), "expected `le: <x> <y>`");
                    continue;
                }
                let x = resolve(&carrier, line.number, args[0], &mut diags);
                let y = resolve(&carrier, line.number, args[1], &mut diags);
                if let (Some(x), Some(y)) = (x, y) {
                    le_pairs.push((x, y));
                }
            }
            _ => diags.syntax(line.number, Some(head), "unknown declaration"),
        }
    }

    for x in carrier.elements() {
        for y in carrier.elements() {
            if cells[x.index() * n + y.index()].is_none() {
                diags.push(
                    first.number,
                    Some(first.tokens[0]),
                    DiagnosticKind::MissingCell {
                        x: carrier.label(x).to_owned(),
                        y: carrier.label(y).to_owned(),
                    },
                );
            }
        }
    }

    if !diags.0.is_empty() {
        return Err(diags.into_errors());
    }
    let table = cells.into_iter().map(|c| c.expect("checked")).collect();
    let relation = BinaryRelation::from_pairs(n, le_pairs).expect("resolved elements");
    let s = FiniteHypergroupoid::new(carrier, table).expect("cells validated");
    Ok((s, relation))
}

/// Returns the single declaration line with head `directive`.
fn single_line<'d, 'a>(
    doc: &'d SourceDocument<'a>,
    directive: &str,
    diags: &mut Diagnostics,
) -> Option<&'d SourceLine<'a>> {
    let Some(line) = doc.lines.first() else {
        diags.syntax(1, None, format!("expected `{directive}` line"));
        return None;
    };
    if line.tokens[0].text != directive {
        diags.syntax(
            line.number,
            Some(line.tokens[0]),
            format!("expected `{directive}` line"),
        );
        return None;
    }
    for extra in &doc.lines[1..] {
        diags.syntax(
            extra.number,
            Some(extra.tokens[0]),
            format!("only one `{directive}` line is allowed"),
        );
    }
    Some(line)
}

/// Parses `subset: <label> ...` over `carrier`. An empty list yields `∅`.
pub fn parse_subset(text: &str, carrier: &Carrier) -> Result<CrispSubset, ParseErrors> {
    let doc = SourceDocument::new(text);
    let mut diags = Diagnostics(Vec::new());
    let Some(line) = single_line(&doc, "subset:", &mut diags) else {
        return Err(diags.into_errors());
    };
    let mut set = CrispSubset::EMPTY;
    for &t in &line.tokens[1..] {
        if let Some(id) = resolve(carrier, line.number, t, &mut diags) {
            set.insert(id);
        }
    }
    diags.finish(|| set)
}

/// Parses `fuzzy: <label>=<rational> ...`, total over `carrier`.
pub fn parse_fuzzy(text: &str, carrier: &Carrier) -> Result<FuzzySubset, ParseErrors> {
    let doc = SourceDocument::new(text);
    let mut diags = Diagnostics(Vec::new());
    let Some(line) = single_line(&doc, "fuzzy:", &mut diags) else {
        return Err(diags.into_errors());
    };
    let mut grades: HashMap<ElementId, Grade> = HashMap::new();
    for &t in &line.tokens[1..] {
        let Some((label, value)) = t.text.split_once('=') else {
            diags.syntax(line.number, Some(t), "expected `<label>=<rational>`");
            continue;
        };
        let label_tok = Token {
            column: t.column,
            text: label,
        };
        let Some(id) = resolve(carrier, line.number, label_tok, &mut diags) else {
            continue;
        };
        match value.parse::<Grade>() {
            Ok(g) => {
                if grades.insert(id, g).is_some() {
                    diags.syntax(line.number, Some(t), "grade given twice");
                }
            }
            Err(GradeParseError::OutOfRange) => diags.push(
                line.number,
                Some(t),
                DiagnosticKind::GradeOutOfRange(label.to_owned()),
            ),
            Err(GradeParseError::Syntax) => {
                diags.syntax(line.number, Some(t), "grade must be `p/q` or an integer")
            }
        }
    }
    for e in carrier.elements() {
        if !grades.contains_key(&e) && diags.0.is_empty() {
            diags.push(
                line.number,
                Some(line.tokens[0]),
                DiagnosticKind::MissingGrade(carrier.label(e).to_owned()),
            );
        }
    }
    diags.finish(|| {
        let v = carrier.elements().map(|e| grades[&e]).collect();
        FuzzySubset::new(carrier.clone(), v).expect("total over carrier")
    })
}

pub fn render_structure(s: &FiniteHypergroupoid, r: &BinaryRelation) -> String {
    let c = s.carrier();
    let mut out = format!("elements: {}\n", c.labels().join(" "));
    for (x, y, cell) in s.products() {
        out += &format!(
            "op: {} {} -> {}\n",
            c.label(x),
            c.label(y),
            c.labels_of(cell).join(" ")
        );
    }
    for (x, y) in r.pairs() {
        out += &format!("le: {} {}\n", c.label(x), c.label(y));
    }
    out
}

pub fn render_subset(carrier: &Carrier, a: CrispSubset) -> String {
    let labels = carrier.labels_of(a);
    if labels.is_empty() {
        "subset:\n".to_owned()
    } else {
        format!("subset: {}\n", labels.join(" "))
    }
}

pub fn render_fuzzy(f: &FuzzySubset) -> String {
    let c = f.carrier();
    let entries: Vec<String> = c
        .elements()
        .map(|e| format!("{}={}", c.label(e), f.grade(e)))
        .collect();
    format!("fuzzy: {}\n", entries.join(" "))
}

/// One record of a line-oriented report.
#[derive(Debug, Clone)]
pub enum ReportRecord {
    Property {
        name: String,
        value: bool,
    },
    Count {
        name: String,
        value: u64,
    },
    Theorem(Verdict),
    Search {
        relaxation: String,
        examined: u64,
        witness: Option<Witness>,
    },
    Witness(Witness),
}

impl ReportRecord {
    pub fn property(name: impl Into<String>, value: bool) -> Self {
        ReportRecord::Property {
            name: name.into(),
            value,
        }
    }

    pub fn count(name: impl Into<String>, value: u64) -> Self {
        ReportRecord::Count {
            name: name.into(),
            value,
        }
    }
}

/// `WITNESS` header and its indented, re-parseable body.
pub fn render_witness(w: &Witness) -> String {
    let mut body = render_structure(&w.structure, &w.relation);
    if let Some(a) = w.subset {
        body += &render_subset(w.structure.carrier(), a);
    }
    if let Some(f) = &w.fuzzy {
        body += &render_fuzzy(f);
    }
    let mut out = format!(
        "WITNESS {} clause=\"{}\"\n",
        w.origin,
        w.failed_clause.replace('"', "'")
    );
    for line in body.lines() {
        out += "  ";
        out += line;
        out += "\n";
    }
    out
}

pub fn render_report(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    for r in records {
        match r {
            ReportRecord::Property { name, value } => {
                out += &format!("PROPERTY {name} = {value}\n");
            }
            ReportRecord::Count { name, value } => {
                out += &format!("COUNT {name} = {value}\n");
            }
            ReportRecord::Theorem(v) => {
                let status = if v.holds() { "HOLDS" } else { "FAILS" };
                out += &format!(
                    "THEOREM {} {status} checked={}\n",
                    v.theorem, v.checks_performed
                );
                if let Some(w) = &v.witness {
                    out += &render_witness(w);
                }
            }
            ReportRecord::Search {
                relaxation,
                examined,
                witness,
            } => match witness {
                Some(w) => {
                    out += &format!("SEARCH {relaxation} FOUND checked={examined}\n");
                    out += &render_witness(w);
                }
                None => out += &format!("SEARCH {relaxation} NONE_FOUND checked={examined}\n"),
            },
            ReportRecord::Witness(w) => out += &render_witness(w),
        }
    }
    out
}

/// Inputs recovered from a `WITNESS` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedWitness {
    pub structure: FiniteHypergroupoid,
    pub relation: BinaryRelation,
    pub subset: Option<CrispSubset>,
    pub fuzzy: Option<FuzzySubset>,
}

/// Reads back a witness block. The optional `WITNESS` header line is skipped
/// and indentation is ignored; line numbers in diagnostics refer to `text`.
pub fn parse_witness(text: &str) -> Result<ParsedWitness, ParseErrors> {
    let mut structure = String::new();
    let mut subset = String::new();
    let mut fuzzy = String::new();
    let (mut has_subset, mut has_fuzzy) = (false, false);
    let header = text
        .lines()
        .position(|l| !l.trim().is_empty())
        .filter(|&i| {
            text.lines()
                .nth(i)
                .is_some_and(|l| l.trim_start().starts_with("WITNESS"))
        });
    for (i, line) in text.lines().enumerate() {
        let t = line.trim_start();
        let (s, a, f) = if Some(i) == header {
            ("", "", "")
        } else if t.starts_with("subset:") {
            has_subset = true;
            ("", t, "")
        } else if t.starts_with("fuzzy:") {
            has_fuzzy = true;
            ("", "", t)
        } else {
            (t, "", "")
        };
        for (buf, content) in [(&mut structure, s), (&mut subset, a), (&mut fuzzy, f)] {
            buf.push_str(content);
            buf.push('\n');
        }
    }
    let (s, r) = parse_structure(&structure)?;
    let subset = if has_subset {
        Some(parse_subset(&subset, s.carrier())?)
    } else {
        None
    };
    let fuzzy = if has_fuzzy {
        Some(parse_fuzzy(&fuzzy, s.carrier())?)
    } else {
        None
    };
    Ok(ParsedWitness {
        structure: s,
        relation: r,
        subset,
        fuzzy,
    })
}
