use std::fs;
use std::ops::Range;

use hyperfuzz_core::crisp::{self, IdealSide};
use hyperfuzz_core::enumeration::{
    Domain, GridFuzzySpace, HyperoperationSpace, RelationSpace, SubsetSpace, MAX_ENUM_ORDER,
};
use hyperfuzz_core::fuzzy;
use hyperfuzz_core::textio::{self, ParseErrors, ReportRecord};
use hyperfuzz_core::theorem::{self, Relaxation, TheoremId, VerifyDomain};
use hyperfuzz_core::{relation_diagnostics, BinaryRelation, Carrier, PredicateError};

use crate::{Command, Kind, Mode};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSIFIED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_EXHAUSTED: u8 = 3;

/// Largest domain `enumerate --list` will print.
const LIST_LIMIT: u64 = 100_000;

pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: Vec<String>,
}

impl Outcome {
    fn report(code: u8, records: &[ReportRecord]) -> Self {
        Outcome {
            code,
            stdout: textio::render_report(records),
            stderr: Vec::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: vec![format!("error: {}", msg.into())],
        }
    }

    fn parse_failure(path: &str, errors: &ParseErrors) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: errors.0.iter().map(|d| format!("{path}:{d}")).collect(),
        }
    }
}

pub fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Check {
            structure,
            subset,
            fuzzy,
        } => check(&structure, subset.as_deref(), fuzzy.as_deref()),
        Command::Verify {
            theorem,
            order,
            grid,
            mode,
            seed,
            budget,
            relation,
            range,
        } => verify(
            &theorem,
            order,
            grid,
            mode,
            seed,
            budget,
            relation,
            range.as_deref(),
        ),
        Command::Enumerate {
            kind,
            order,
            grid,
            list,
        } => enumerate(kind, order, grid, list),
        Command::Search {
            relaxation,
            max_order,
            budget,
            seed,
        } => search(&relaxation, max_order, budget, seed),
    }
}

fn read(path: &str) -> Result<String, Outcome> {
    fs::read_to_string(path).map_err(|e| Outcome::usage(format!("cannot read {path}: {e}")))
}

fn predicate_error(e: PredicateError) -> Outcome {
    Outcome::usage(e.to_string())
}

fn check(structure_path: &str, subset_path: Option<&str>, fuzzy_path: Option<&str>) -> Outcome {
    match check_inner(structure_path, subset_path, fuzzy_path) {
        Ok(records) => Outcome::report(EXIT_OK, &records),
        Err(o) => o,
    }
}

fn check_inner(
    structure_path: &str,
    subset_path: Option<&str>,
    fuzzy_path: Option<&str>,
) -> Result<Vec<ReportRecord>, Outcome> {
    let text = read(structure_path)?;
    let (s, r) =
        textio::parse_structure(&text).map_err(|e| Outcome::parse_failure(structure_path, &e))?;
    let carrier = s.carrier().clone();

    let subset = match subset_path {
        Some(p) => Some(
            textio::parse_subset(&read(p)?, &carrier).map_err(|e| Outcome::parse_failure(p, &e))?,
        ),
        None => None,
    };
    let fuzzy_subset = match fuzzy_path {
        Some(p) => Some(
            textio::parse_fuzzy(&read(p)?, &carrier).map_err(|e| Outcome::parse_failure(p, &e))?,
        ),
        None => None,
    };

    let mut out = Vec::new();
    let d = relation_diagnostics(&s, &r).map_err(predicate_error)?;
    out.push(ReportRecord::property("relation_reflexive", d.reflexive));
    out.push(ReportRecord::property("relation_transitive", d.transitive));
    out.push(ReportRecord::property(
        "relation_antisymmetric",
        d.antisymmetric,
    ));

    if let Some(a) = subset {
        let p = |r: Result<bool, PredicateError>| r.map_err(predicate_error);
        out.push(ReportRecord::property(
            "subgroupoid",
            p(crisp::is_subgroupoid(&s, a))?,
        ));
        for (name, side) in [
            ("left_ideal", IdealSide::Left),
            ("right_ideal", IdealSide::Right),
            ("ideal", IdealSide::TwoSided),
        ] {
            out.push(ReportRecord::property(
                name,
                p(crisp::is_ideal(&s, &r, a, side))?,
            ));
        }
        let profile = crisp::filter_condition_profile(&s, &r, a).map_err(predicate_error)?;
        out.push(ReportRecord::property("filter", profile.all()));
        for (i, c) in profile.as_array().into_iter().enumerate() {
            out.push(ReportRecord::property(format!("filter_c{}", i + 1), c));
        }
    }

    if let Some(f) = fuzzy_subset {
        let p = |r: Result<bool, PredicateError>| r.map_err(predicate_error);
        for (name, side) in [
            ("fuzzy_left_ideal", IdealSide::Left),
            ("fuzzy_right_ideal", IdealSide::Right),
            ("fuzzy_ideal", IdealSide::TwoSided),
        ] {
            out.push(ReportRecord::property(
                name,
                p(fuzzy::is_fuzzy_ideal(&s, &r, &f, side))?,
            ));
        }
        out.push(ReportRecord::property(
            "fuzzy_filter",
            p(fuzzy::is_fuzzy_filter(&s, &r, &f))?,
        ));
        out.push(ReportRecord::property(
            "fuzzy_prime_subset",
            p(fuzzy::is_fuzzy_prime_subset(&s, &f))?,
        ));
        out.push(ReportRecord::property(
            "fuzzy_prime_ideal",
            p(fuzzy::is_fuzzy_prime_ideal(&s, &r, &f))?,
        ));
        out.push(ReportRecord::property(
            "complement_fuzzy_prime_ideal",
            p(fuzzy::is_fuzzy_prime_ideal(&s, &r, &f.complement()))?,
        ));
    }
    Ok(out)
}

fn parse_range(text: &str) -> Option<Range<u64>> {
    let (a, b) = text.split_once("..")?;
    Some(a.trim().parse().ok()?..b.trim().parse().ok()?)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    selector: &str,
    order: usize,
    grid: u64,
    mode: Mode,
    seed: u64,
    budget: u64,
    relation: Option<u64>,
    range: Option<&str>,
) -> Outcome {
    let theorems: Vec<TheoremId> = if selector == "all" {
        TheoremId::PRIMARY.to_vec()
    } else {
        match selector.parse() {
            Ok(t) => vec![t],
            Err(e) => return Outcome::usage(e),
        }
    };
    if order == 0 || order > MAX_ENUM_ORDER {
        return Outcome::usage(format!("--order must lie in 1..={MAX_ENUM_ORDER}"));
    }
    if grid == 0 {
        return Outcome::usage("--grid must be at least 1");
    }
    let range = match range.map(|r| parse_range(r).ok_or(r)) {
        None => None,
        Some(Ok(r)) => Some(r),
        Some(Err(r)) => {
            return Outcome::usage(format!("invalid --range `{r}`; expected start..end"))
        }
    };
    let domain = match (mode, relation) {
        (Mode::Sample, Some(_)) => {
            return Outcome::usage("--relation applies to exhaustive mode only")
        }
        (Mode::Sample, None) => VerifyDomain::Sampled {
            order,
            seed,
            samples: budget,
        },
        (Mode::Exhaustive, Some(bits)) => {
            if bits >> (order * order) != 0 {
                return Outcome::usage(format!("--relation {bits} does not fit order {order}"));
            }
            if order == 4 && range.is_none() {
                return Outcome::usage("order 4 needs an explicit --range");
            }
            VerifyDomain::FixedRelation {
                relation: BinaryRelation::from_bits(order, bits),
                range,
            }
        }
        (Mode::Exhaustive, None) => {
            if order > 2 {
                return Outcome::usage(
                    "exhaustive runs above order 2 need --relation (and --range at order 4), or --mode sample",
                );
            }
            if range.is_some() {
                return Outcome::usage("--range requires --relation");
            }
            VerifyDomain::Exhaustive { order }
        }
    };

    let mut records = Vec::new();
    let mut code = EXIT_OK;
    for t in theorems {
        match theorem::verify(t, &domain, grid) {
            Ok(v) => {
                if !v.holds() {
                    code = EXIT_FALSIFIED;
                }
                records.push(ReportRecord::Theorem(v));
            }
            Err(e) => return Outcome::usage(e.to_string()),
        }
    }
    Outcome::report(code, &records)
}

fn enumerate(kind: Kind, order: usize, grid: u64, list: bool) -> Outcome {
    if order == 0 || order > MAX_ENUM_ORDER {
        return Outcome::usage(format!("order {order} outside 1..={MAX_ENUM_ORDER}"));
    }
    let too_long = |total: u64| list && total > LIST_LIMIT;
    let mut out = String::new();
    match kind {
        Kind::Structures => {
            let space = HyperoperationSpace::new(order).expect("order checked");
            if too_long(space.total()) {
                return Outcome::usage("domain too large to list");
            }
            out += &textio::render_report(&[ReportRecord::count("structures", space.total())]);
            if list {
                let empty = BinaryRelation::empty(order);
                for (i, s) in space.iter().enumerate() {
                    out += &format!("STRUCTURE {i}\n");
                    out += &indent(&textio::render_structure(&s, &empty));
                }
            }
        }
        Kind::Relations => {
            let space = RelationSpace::new(order).expect("order checked");
            if too_long(space.total()) {
                return Outcome::usage("domain too large to list");
            }
            out += &textio::render_report(&[ReportRecord::count("relations", space.total())]);
            if list {
                let carrier = Carrier::standard(order).expect("order checked");
                for (i, r) in space.iter().enumerate() {
                    out += &format!("RELATION {i}\n");
                    for (x, y) in r.pairs() {
                        out += &format!("  le: {} {}\n", carrier.label(x), carrier.label(y));
                    }
                }
            }
        }
        Kind::Subsets => {
            let space = SubsetSpace::new(order).expect("order checked");
            out += &textio::render_report(&[ReportRecord::count("subsets", space.total())]);
            if list {
                let carrier = Carrier::standard(order).expect("order checked");
                for a in space.iter() {
                    out += &textio::render_subset(&carrier, a);
                }
            }
        }
        Kind::Fuzzy => {
            let carrier = Carrier::standard(order).expect("order checked");
            let space = match GridFuzzySpace::new(carrier, grid) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(e.to_string()),
            };
            if too_long(space.total()) {
                return Outcome::usage("domain too large to list");
            }
            out += &textio::render_report(&[ReportRecord::count("fuzzy", space.total())]);
            if list {
                for f in space.iter() {
                    out += &textio::render_fuzzy(&f);
                }
            }
        }
        Kind::Ideals | Kind::Filters => {
            let c = match theorem::census(order) {
                Ok(c) => c,
                Err(e) => return Outcome::usage(format!("{e}; census kinds need order ≤ 2")),
            };
            let records = if kind == Kind::Ideals {
                vec![
                    ReportRecord::count("left_ideals", c.left_ideals),
                    ReportRecord::count("right_ideals", c.right_ideals),
                    ReportRecord::count("ideals", c.ideals),
                ]
            } else {
                vec![ReportRecord::count("filters", c.filters)]
            };
            out += &textio::render_report(&records);
        }
    }
    Outcome {
        code: EXIT_OK,
        stdout: out,
        stderr: Vec::new(),
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn search(name: &str, max_order: usize, budget: u64, seed: u64) -> Outcome {
    let relaxation: Relaxation = match name.parse() {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("{e}")),
    };
    match theorem::search_counterexample(relaxation, max_order, budget, seed) {
        Ok(out) => {
            let code = if out.witness.is_some() {
                EXIT_OK
            } else {
                EXIT_EXHAUSTED
            };
            Outcome::report(
                code,
                &[ReportRecord::Search {
                    relaxation: relaxation.name().to_owned(),
                    examined: out.examined,
                    witness: out.witness,
                }],
            )
        }
        Err(e) => Outcome::usage(e.to_string()),
    }
}
