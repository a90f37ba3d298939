//! Embedded presentations with their published invariants.
//!
//! Torsion goldens are compared with [`equal_up_to_unit`]; Magnus goldens and
//! Alexander polynomials are compared exactly.

use rayon::prelude::*;

use crate::algebra::{parse_expr, RationalFunction};
use crate::error::Result;
use crate::format::parse_presentation;
use crate::fox::AdmissiblePresentation;
use crate::invariants::{
    compute_report, equal_up_to_unit, AlexanderPolynomial, InvariantReport, Verdict,
};

#[derive(Debug, Clone, Copy)]
pub enum MagnusGolden {
    None,
    /// 1-based `(row, col, expression)` entries.
    Entries(&'static [(usize, usize, &'static str)]),
}

#[derive(Debug, Clone, Copy)]
pub struct Golden {
    pub torsion: &'static str,
    pub alexander: &'static [i64],
    pub magnus: MagnusGolden,
    pub magnus_integral: Option<bool>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub golden: Golden,
    /// A knot exterior (as opposed to a cylinder used only for checks).
    pub is_knot: bool,
}

impl CorpusEntry {
    pub fn presentation(&self) -> AdmissiblePresentation {
        parse_presentation(self.source).expect("embedded presentation is valid")
    }
}

const TREFOIL_MAGNUS: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (1, 2, "g2^-1"),
    (2, 1, "-g1^-1*g2"),
    (2, 2, "1 - g1^-1"),
];

const IDENTITY4: &[(usize, usize, &str)] = &[
    (1, 1, "1"),
    (1, 2, "0"),
    (1, 3, "0"),
    (1, 4, "0"),
    (2, 1, "0"),
    (2, 2, "1"),
    (2, 3, "0"),
    (2, 4, "0"),
    (3, 1, "0"),
    (3, 2, "0"),
    (3, 3, "1"),
    (3, 4, "0"),
    (4, 1, "0"),
    (4, 2, "0"),
    (4, 3, "0"),
    (4, 4, "1"),
];

const fn knot(
    name: &'static str,
    source: &'static str,
    torsion: &'static str,
    alexander: &'static [i64],
) -> CorpusEntry {
    CorpusEntry {
        name,
        source,
        golden: Golden {
            torsion,
            alexander,
            magnus: MagnusGolden::None,
            magnus_integral: None,
            verdict: Verdict::NotFibered,
        },
        is_knot: true,
    }
}

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "0057",
        source: include_str!("../corpus/0057.json"),
        golden: Golden {
            torsion: "g3/(g1^2*g2^5*g4)*(1 + g2 - g2*g4)",
            alexander: &[1, -2, 3, -2, 1],
            magnus: MagnusGolden::Entries(&[(1, 3, "g4/(1 + g2 - g2*g4)")]),
            magnus_integral: Some(false),
            verdict: Verdict::NotFibered,
        },
        is_knot: true,
    },
    knot(
        "0210",
        include_str!("../corpus/0210.json"),
        "-g1^5*g3^3*g5^4*g6^7/(g2^6*g4^6) + g1^6*g3^4*g5^4*g6^7/(g2^7*g4^6) - g1^6*g3^4*g5^4*g6^8/(g2^7*g4^6)",
        &[1, -1, -1, 3, -1, -1, 1],
    ),
    knot(
        "0214",
        include_str!("../corpus/0214.json"),
        "1/(g2*g4^2*g6) - g1/(g2*g4^2*g6) + g1/(g2*g4*g5*g6)",
        &[1, -1, -1, 3, -1, -1, 1],
    ),
    knot(
        "0258",
        include_str!("../corpus/0258.json"),
        "-g2^5*g4^7/(g1^6*g3^12) + g2^6*g4^8/(g1^7*g3^13) - g2^6*g4^9/(g1^7*g3^14)",
        &[1, -4, 5, -4, 1],
    ),
    knot(
        "0279",
        include_str!("../corpus/0279.json"),
        "-g3^2*g4^5/g2^5 + g3^2*g4^5/(g1*g2^5) + g3^2*g4^6/g2^5",
        &[1, -6, 11, -6, 1],
    ),
    knot(
        "0382",
        include_str!("../corpus/0382.json"),
        "1/(g1*g2*g4) + 1/(g1*g3^2*g4) - 1/(g1*g3*g4)",
        &[1, -5, 7, -5, 1],
    ),
    knot(
        "0394",
        include_str!("../corpus/0394.json"),
        "1/(g1*g2*g3^2*g4) + 1/(g1^2*g2*g3*g4) - 1/(g1*g2*g3*g4)",
        &[1, -6, 11, -6, 1],
    ),
    knot(
        "0464",
        include_str!("../corpus/0464.json"),
        "-g1^3*g4^3/g3 - g1^2*g4^4 + g1^3*g4^4",
        &[1, -4, 5, -4, 1],
    ),
    knot(
        "0483",
        include_str!("../corpus/0483.json"),
        "1/(g1*g3*g4^2) - g2/(g1^2*g3*g4^2) - 1/(g1*g3*g4)",
        &[1, -4, 5, -4, 1],
    ),
    knot(
        "0535",
        include_str!("../corpus/0535.json"),
        "-1/(g1^11*g2^6*g3^6*g4^15) + 1/(g1^10*g2^5*g3^6*g4^15) - 1/(g1^10*g2^5*g3^6*g4^14)",
        &[1, -7, 11, -7, 1],
    ),
    knot(
        "0650",
        include_str!("../corpus/0650.json"),
        "1/(g1*g2^3*g3^2*g4^2) - 1/(g1*g2^3*g3*g4) + 1/(g1*g2^2*g3*g4)",
        &[1, -4, 7, -4, 1],
    ),
    knot(
        "0801",
        include_str!("../corpus/0801.json"),
        "-g1^2*g3^2*g4 + g1^2*g2*g3^2*g4 - g1^2*g2*g3^3*g4^2",
        &[1, -5, 7, -5, 1],
    ),
    knot(
        "0815",
        include_str!("../corpus/0815.json"),
        "-g1^3*g2^5/g4^6 + g1^2*g2^4/g4^5 + g1^3*g2^5/g4^5",
        &[1, -2, 1, -2, 1],
    ),
    CorpusEntry {
        name: "K",
        source: include_str!("../corpus/K.json"),
        golden: Golden {
            torsion: "3 - 1/g1 - g1 - g1/g2 + g1^2/g2 + g2/g1^2 - g2/g1",
            alexander: &[1, -1, 1],
            magnus: MagnusGolden::Entries(TREFOIL_MAGNUS),
            magnus_integral: Some(true),
            verdict: Verdict::NotFibered,
        },
        is_knot: false,
    },
    CorpusEntry {
        name: "trefoil",
        source: include_str!("../corpus/trefoil.json"),
        golden: Golden {
            torsion: "1/g2",
            alexander: &[1, -1, 1],
            magnus: MagnusGolden::Entries(TREFOIL_MAGNUS),
            magnus_integral: Some(true),
            verdict: Verdict::ConsistentWithFibered,
        },
        is_knot: false,
    },
    CorpusEntry {
        name: "identity2",
        source: include_str!("../corpus/identity2.json"),
        golden: Golden {
            torsion: "1",
            alexander: &[1, -4, 6, -4, 1],
            magnus: MagnusGolden::Entries(IDENTITY4),
            magnus_integral: Some(true),
            verdict: Verdict::ConsistentWithFibered,
        },
        is_knot: false,
    },
];

pub fn entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

/// Result of checking one entry against its goldens.
#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub name: &'static str,
    pub report: Result<InvariantReport>,
    pub mismatches: Vec<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.report.is_ok() && self.mismatches.is_empty()
    }
}

pub fn check_entry(e: &'static CorpusEntry) -> EntryOutcome {
    let p = e.presentation();
    let n = p.rank();
    let report = compute_report(&p);
    let mut mismatches = Vec::new();
    if let Ok(r) = &report {
        let want = parse_expr(e.golden.torsion, n).expect("golden expression parses");
        let got = RationalFunction::from_poly(r.torsion.raw());
        if !equal_up_to_unit(&got, &want) {
            mismatches.push(format!("torsion {got} is not a unit multiple of {want}"));
        }
        let alex = AlexanderPolynomial::from_i64(e.golden.alexander);
        if r.alexander != alex {
            mismatches.push(format!("alexander {} != {}", r.alexander, alex));
        }
        if let MagnusGolden::Entries(entries) = e.golden.magnus {
            for &(i, j, text) in entries {
                let want = parse_expr(text, n).expect("golden expression parses");
                let got = &r.magnus[(i - 1, j - 1)];
                if *got != want {
                    mismatches.push(format!("magnus ({i},{j}) {got} != {want}"));
                }
            }
        }
        if let Some(m) = e.golden.magnus_integral {
            if r.fiberedness.magnus_integral != m {
                mismatches.push(format!(
                    "magnus_integral {} != {m}",
                    r.fiberedness.magnus_integral
                ));
            }
        }
        if r.fiberedness.verdict != e.golden.verdict {
            mismatches.push(format!(
                "verdict {} != {}",
                r.fiberedness.verdict, e.golden.verdict
            ));
        }
    }
    EntryOutcome {
        name: e.name,
        report,
        mismatches,
    }
}

/// Thread cap from `TORSION_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("TORSION_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&n| n > 0)
}

/// Check `entries` in parallel; outcomes come back in input order.
pub fn check_entries(entries: &[&'static CorpusEntry]) -> Vec<EntryOutcome> {
    let run = || entries.par_iter().map(|e| check_entry(e)).collect();
    match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    }
}

pub fn check_all() -> Vec<EntryOutcome> {
    let all: Vec<&'static CorpusEntry> = CORPUS.iter().collect();
    check_entries(&all)
}
