//! Text, JSON and CSV renderings. Everything here is a pure function of its
//! inputs so repeated runs print identical bytes.

use std::fmt::Write;

use serde::Serialize;

use nearring_core::classify::{Analysis, ElementProfile, MorphicStatus, StructureProfile};
use nearring_core::theorems::{Status, SuiteReport};
use nearring_core::{Flag, Flags, NearRing};

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_yes_no(b: Option<bool>) -> &'static str {
    b.map_or("n/a", yes_no)
}

fn labels(n: &NearRing, xs: impl IntoIterator<Item = usize>) -> String {
    let ls: Vec<&str> = xs.into_iter().map(|x| n.label(x)).collect();
    format!("{{{}}}", ls.join(", "))
}

fn flag_text(n: &NearRing, f: &Flag) -> String {
    if f.holds || f.witness.is_empty() {
        yes_no(f.holds).to_string()
    } else {
        let ls: Vec<&str> = f.witness.iter().map(|&x| n.label(x)).collect();
        format!("no [{}]", ls.join(", "))
    }
}

/// `name=yes|no` pairs for the table-level flags, ending with `ring`.
pub fn flags_line(n: &NearRing) -> String {
    let f: &Flags = n.flags();
    let parts = [
        ("right_distributive", yes_no(f.right_distributive).to_string()),
        ("left_distributive", flag_text(n, &f.left_distributive)),
        ("abelian_add", flag_text(n, &f.abelian_add)),
        ("zero_symmetric", flag_text(n, &f.zero_symmetric)),
        ("unital", yes_no(f.unital).to_string()),
        ("commutative_mul", flag_text(n, &f.commutative_mul)),
        ("ring", yes_no(n.is_ring()).to_string()),
    ];
    parts
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// One-phrase placement in the chain
/// left strongly regular ⊆ left morphic regular ⊆ unit-regular ⊆ regular.
pub fn chain_verdict(p: &StructureProfile) -> &'static str {
    let unit_regular = p.unit_regular.as_ref().map(|f| f.holds);
    if p.left_strongly_regular.holds {
        "left strongly regular"
    } else if p.left_morphic_regular() == Some(true) {
        "left morphic regular but not left strongly regular"
    } else if unit_regular == Some(true) {
        "unit-regular but not left morphic"
    } else if p.regular.holds {
        "regular but not unit-regular"
    } else {
        "not regular"
    }
}

fn structure_rows(n: &NearRing, p: &StructureProfile) -> Vec<(&'static str, String)> {
    let opt = |f: &Option<Flag>| f.as_ref().map_or("n/a".to_string(), |f| flag_text(n, f));
    vec![
        ("zero_symmetric", flag_text(n, &p.zero_symmetric)),
        ("abelian_add", flag_text(n, &p.abelian_add)),
        ("ring", flag_text(n, &p.is_ring)),
        ("near_field", flag_text(n, &p.is_near_field)),
        ("reduced", flag_text(n, &p.reduced)),
        ("ifp", flag_text(n, &p.has_ifp)),
        ("subcommutative", flag_text(n, &p.subcommutative)),
        ("boolean", flag_text(n, &p.boolean)),
        ("weakly_divisible", flag_text(n, &p.weakly_divisible)),
        ("left_duo", opt(&p.left_duo)),
        ("idempotents_central", flag_text(n, &p.idempotents_central)),
        ("regular", flag_text(n, &p.regular)),
        ("unit_regular", opt(&p.unit_regular)),
        ("left_strongly_regular", flag_text(n, &p.left_strongly_regular)),
        ("right_strongly_regular", flag_text(n, &p.right_strongly_regular)),
        ("left_morphic", opt(&p.left_morphic)),
        ("generalised_near_field", flag_text(n, &p.generalised_near_field)),
    ]
}

fn morphic_cells(n: &NearRing, e: &ElementProfile) -> (&'static str, String) {
    match &e.morphic {
        None => ("n/a", String::new()),
        Some(v) => match v.status {
            MorphicStatus::Morphic { witness } => ("yes", n.label(witness).to_string()),
            MorphicStatus::NaNotIdeal { .. } => ("no", "Na not an ideal".to_string()),
            MorphicStatus::NoWitness => ("no", String::new()),
        },
    }
}

pub const CSV_HEADER: [&str; 14] = [
    "index",
    "label",
    "unit",
    "idempotent",
    "central",
    "nilpotency",
    "regular",
    "unit_regular",
    "lsr",
    "rsr",
    "morphic",
    "witness",
    "|Na|",
    "|annL|",
];

fn csv_cells(n: &NearRing, e: &ElementProfile) -> [String; 14] {
    let unital = n.one().is_some();
    let (morphic, witness) = morphic_cells(n, e);
    let witness = match &e.morphic {
        Some(v) => v.witness().map(|w| n.label(w).to_string()).unwrap_or_default(),
        None => witness,
    };
    [
        e.index.to_string(),
        e.label.clone(),
        opt_yes_no(e.unit).to_string(),
        yes_no(e.idempotent).to_string(),
        yes_no(e.central).to_string(),
        e.nilpotency_index.to_string(),
        yes_no(e.regular.is_some()).to_string(),
        if unital {
            yes_no(e.unit_regular.is_some()).to_string()
        } else {
            "n/a".to_string()
        },
        yes_no(e.left_strongly_regular.is_some()).to_string(),
        yes_no(e.right_strongly_regular.is_some()).to_string(),
        morphic.to_string(),
        witness,
        e.sizes.left_orbit.to_string(),
        e.sizes.left_annihilator.to_string(),
    ]
}

pub fn classify_csv(n: &NearRing, rows: &[ElementProfile]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for e in rows {
        w.write_record(csv_cells(n, e))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
    }
    out
}

pub fn classify_text(an: &Analysis<'_>, rows: &[ElementProfile]) -> String {
    let n = an.nearring();
    let p = an.structure();
    let mut out = String::new();
    let one = n.one().map_or("none".to_string(), |o| n.label(o).to_string());
    let _ = writeln!(out, "{}: order {}, one = {one}", n.name(), n.order());
    let _ = writeln!(out, "verdict: {}", chain_verdict(p));
    for (k, v) in structure_rows(n, p) {
        let _ = writeln!(out, "  {k:<24}{v}");
    }
    out.push('\n');
    let mut grid = vec![CSV_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    grid.extend(rows.iter().map(|e| csv_cells(n, e).to_vec()));
    out.push_str(&table(&grid));
    out
}

/// An element profile with the left orbit and annihilator spelled out.
#[derive(Serialize)]
pub struct ElementDetail {
    #[serde(flatten)]
    pub profile: ElementProfile,
    pub left_orbit: Vec<usize>,
    pub left_annihilator: Vec<usize>,
}

impl ElementDetail {
    pub fn new(an: &Analysis<'_>, profile: ElementProfile) -> Self {
        let a = profile.index;
        ElementDetail {
            left_orbit: an.left_orbit(a).iter().collect(),
            left_annihilator: an.left_annihilator(a).iter().collect(),
            profile,
        }
    }
}

pub fn element_text(n: &NearRing, d: &ElementDetail) -> String {
    let e = &d.profile;
    let w = |x: Option<usize>| x.map_or("no".to_string(), |x| format!("yes ({})", n.label(x)));
    let (morphic, witness) = morphic_cells(n, e);
    let morphic = if witness.is_empty() {
        morphic.to_string()
    } else if morphic == "yes" {
        format!("yes, witness {witness}")
    } else {
        format!("no, {witness}")
    };
    let rows = [
        ("element", format!("{} (index {})", e.label, e.index)),
        ("unit", opt_yes_no(e.unit).to_string()),
        ("idempotent", yes_no(e.idempotent).to_string()),
        ("central", yes_no(e.central).to_string()),
        ("nilpotency", e.nilpotency_index.to_string()),
        ("regular", w(e.regular)),
        (
            "unit_regular",
            if n.one().is_some() {
                w(e.unit_regular)
            } else {
                "n/a".to_string()
            },
        ),
        ("lsr", w(e.left_strongly_regular)),
        ("rsr", w(e.right_strongly_regular)),
        ("morphic", morphic),
        ("Na", labels(n, d.left_orbit.iter().copied())),
        ("annL", labels(n, d.left_annihilator.iter().copied())),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<14}{v}");
    }
    out
}

/// One row of a corpus digest. A row for an unreadable or invalid file
/// carries only `file` and `error`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DigestRow {
    pub file: String,
    pub error: Option<String>,
    pub name: Option<String>,
    pub order: Option<usize>,
    pub ring: Option<bool>,
    pub zero_symmetric: Option<bool>,
    pub unital: Option<bool>,
    pub units: Option<usize>,
    pub idempotents: Option<usize>,
    pub nilpotent: Option<usize>,
    pub regular: Option<usize>,
    pub unit_regular: Option<usize>,
    pub left_strongly_regular: Option<usize>,
    pub morphic: Option<usize>,
    pub verdict: Option<String>,
}

impl DigestRow {
    pub fn failed(file: String, error: String) -> Self {
        DigestRow {
            file,
            error: Some(error),
            ..Default::default()
        }
    }

    pub fn new(file: String, an: &Analysis<'_>, rows: &[ElementProfile]) -> Self {
        let n = an.nearring();
        let unital = n.one().is_some();
        let count = |f: &dyn Fn(&ElementProfile) -> bool| rows.iter().filter(|e| f(e)).count();
        DigestRow {
            file,
            error: None,
            name: Some(n.name().to_string()),
            order: Some(n.order()),
            ring: Some(n.is_ring()),
            zero_symmetric: Some(n.flags().zero_symmetric.holds),
            unital: Some(unital),
            units: unital.then(|| count(&|e| e.unit == Some(true))),
            idempotents: Some(count(&|e| e.idempotent)),
            nilpotent: Some(count(&|e| e.nilpotency_index > 0)),
            regular: Some(count(&|e| e.regular.is_some())),
            unit_regular: unital.then(|| count(&|e| e.unit_regular.is_some())),
            left_strongly_regular: Some(count(&|e| e.left_strongly_regular.is_some())),
            morphic: unital.then(|| count(&|e| e.morphic.as_ref().is_some_and(|v| v.is_morphic()))),
            verdict: Some(chain_verdict(an.structure()).to_string()),
        }
    }
}

const DIGEST_HEADER: [&str; 15] = [
    "file",
    "error",
    "name",
    "order",
    "ring",
    "zero_symmetric",
    "unital",
    "units",
    "idempotents",
    "nilpotent",
    "regular",
    "unit_regular",
    "lsr",
    "morphic",
    "verdict",
];

fn digest_cells(r: &DigestRow) -> Vec<String> {
    let num = |x: Option<usize>| x.map_or(String::new(), |x| x.to_string());
    let flag = |x: Option<bool>| x.map_or(String::new(), |b| yes_no(b).to_string());
    vec![
        r.file.clone(),
        r.error.clone().unwrap_or_default(),
        r.name.clone().unwrap_or_default(),
        num(r.order),
        flag(r.ring),
        flag(r.zero_symmetric),
        flag(r.unital),
        num(r.units),
        num(r.idempotents),
        num(r.nilpotent),
        num(r.regular),
        num(r.unit_regular),
        num(r.left_strongly_regular),
        num(r.morphic),
        r.verdict.clone().unwrap_or_default(),
    ]
}

pub fn digest_csv(rows: &[DigestRow]) -> csv::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(DIGEST_HEADER)?;
    for r in rows {
        w.write_record(digest_cells(r))?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn digest_text(rows: &[DigestRow]) -> String {
    let mut grid = vec![DIGEST_HEADER.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    grid.extend(rows.iter().map(digest_cells));
    table(&grid)
}

pub fn suite_text(corpus: &[NearRing], s: &SuiteReport) -> String {
    let find = |name: &str| corpus.iter().find(|n| n.name() == name);
    let show = |name: &str, xs: &[usize]| match find(name) {
        Some(n) => {
            let ls: Vec<&str> = xs.iter().map(|&x| n.label(x)).collect();
            format!("[{}]", ls.join(", "))
        }
        None => format!("{xs:?}"),
    };
    let mut grid = vec![["nearring", "theorem", "status", "checked", "detail"]
        .map(String::from)
        .to_vec()];
    for r in &s.reports {
        let detail = match (&r.counterexample, &r.hypothesis) {
            (Some(c), _) => format!("{} at {}", c.clause, show(&r.nearring, &c.elements)),
            (None, Some(h)) => h.clause.clone(),
            (None, None) => String::new(),
        };
        let status = match r.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "not_applicable",
        };
        grid.push(vec![
            r.nearring.clone(),
            r.theorem.to_string(),
            status.to_string(),
            r.instantiations.to_string(),
            detail,
        ]);
    }
    let mut out = table(&grid);
    for e in &s.errors {
        let _ = writeln!(out, "error: {} {}: {}", e.nearring, e.theorem, e.message);
    }
    let a = &s.aggregate;
    let _ = writeln!(
        out,
        "\n{} passed, {} failed, {} not applicable, {} errors",
        a.passed, a.failed, a.not_applicable, a.errors
    );
    out
}

pub fn chain_text(s: &SuiteReport) -> String {
    let c = &s.chain;
    let mut out = String::from("\nleft strongly regular ⊆ left morphic regular ⊆ unit-regular\n");
    let mut grid = vec![["nearring", "lsr", "lmr", "unit_regular"].map(String::from).to_vec()];
    for m in &c.members {
        grid.push(vec![
            m.nearring.clone(),
            yes_no(m.left_strongly_regular).to_string(),
            yes_no(m.left_morphic_regular).to_string(),
            yes_no(m.unit_regular).to_string(),
        ]);
    }
    out.push_str(&table(&grid));
    let name = |w: &Option<String>| w.clone().unwrap_or_else(|| "none in this corpus".to_string());
    let _ = writeln!(
        out,
        "left morphic regular, not left strongly regular: {}",
        name(&c.first_strict_witness)
    );
    let _ = writeln!(
        out,
        "unit-regular, not left morphic regular: {}",
        name(&c.second_strict_witness)
    );
    out
}
