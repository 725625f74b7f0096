//! Known results about near-rings as exhaustive checks on a concrete
//! instance, plus a runner over a corpus.
//!
//! Every check quantifies over all elements (or tuples) in ascending index
//! order and stops at the first counterexample. An implication whose
//! hypothesis is false for the instance is reported as `not_applicable`
//! together with the element that breaks the hypothesis.
//!
//! Unless a check says otherwise its hypothesis includes a unity and
//! zero-symmetry (`x ⋆ 0 = 0`), the setting in which these results are
//! stated. Several of them are false without zero-symmetry; see
//! [`CheckOptions`].

mod checks;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::Analysis;
use crate::error::{Error, Result};
use crate::nearring::NearRing;

macro_rules! theorem_ids {
    ($($variant:ident => $id:literal, $desc:literal;)*) => {
        /// Identifier of a catalog entry.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum TheoremId {
            $($variant,)*
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $id,)*
                }
            }

            pub fn description(self) -> &'static str {
                match self {
                    $(TheoremId::$variant => $desc,)*
                }
            }
        }
    };
}

theorem_ids! {
    Lemma1Equiv => "lemma1_equiv",
        "an element is left morphic by witness search iff N/Na is isomorphic to (0:_l a)";
    Lemma10 => "lemma10",
        "for a unit u: Nu = N, (0:_l a) = (0:_l au⁻¹), (0:_l a)u⁻¹ = (0:_l ua), and x ↦ xu is an N-isomorphism from (0:_l a) onto (0:_l a)u";
    Prop2 => "prop2",
        "if a is left morphic and u is a unit then au and ua are left morphic";
    Prop64 => "prop64",
        "for left morphic a: (0:_l a) = {0} iff Na = N iff a is a unit";
    ProductMorphic => "product_morphic",
        "a direct product is left morphic iff every factor is, with (0:_l a) the product of the factor annihilators";
    CccDecomposition => "ccc_decomposition",
        "in a regular subcommutative near-ring N = (0:_l a) ⊕ Na with Na an N-ideal, and a is left morphic";
    WswMorphic => "wsw_morphic",
        "a weakly divisible near-ring is left morphic";
    Lemma213 => "lemma213",
        "a nonzero regular near-ring is reduced iff its idempotents are central";
    LemmaHdt => "lemma_hdt",
        "left strongly regular iff regular and reduced iff regular with central idempotents";
    Lemma13 => "lemma13",
        "in a left strongly regular near-ring a = xa² implies a = axa and ax = xa";
    LemmaFfff => "lemma_ffff",
        "a left strongly regular near-ring is unit-regular";
    PropFfSquare => "prop_ff_square",
        "in a left strongly regular near-ring every square is regular";
    PropFfMorphic => "prop_ff_morphic",
        "a left strongly regular near-ring is left morphic";
    LemmaThisThm217 => "lemma_this_thm217",
        "seven characterisations of a left morphic idempotent agree, and then 1-(1-e) = e and N(1-e) = (0:_l e)";
    PropCccxi => "prop_cccxi",
        "a Boolean near-ring is a commutative left morphic ring";
    Prop226 => "prop226",
        "reduced and left morphic iff left strongly regular iff regular and left duo";
    Thm62 => "thm62",
        "a left morphic regular near-ring is unit-regular, with unit u = xax + b for a = axa and Na = (0:_l b)";
    PropTttt => "prop_tttt",
        "with the IFP: left strongly regular iff left morphic and regular iff unit-regular";
    EhrlichT => "ehrlich_T",
        "a ring is unit-regular iff it is regular and left morphic";
    Ex20Claim => "ex20_claim",
        "M0(Z3) is unit-regular but not left morphic";
    Ex20cClaim => "ex20c_claim",
        "R × M is unit-regular through <u,-um>, and <a,m> with m ≠ 0 is never left morphic";
    ExGgggClaim => "ex_gggg_claim",
        "the 2×2 matrices over F2 form a regular left morphic ring that is neither left duo nor left strongly regular";
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// `(id, description)` for every catalog entry, in catalog order.
pub fn theorem_catalog() -> Vec<(TheoremId, &'static str)> {
    TheoremId::ALL.iter().map(|&t| (t, t.description())).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Elements together with the statement they break.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub elements: Vec<usize>,
    pub clause: String,
}

impl Counterexample {
    pub fn new(elements: Vec<usize>, clause: impl Into<String>) -> Self {
        Counterexample {
            elements,
            clause: clause.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub nearring: String,
    pub theorem: TheoremId,
    pub status: Status,
    pub instantiations: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// For `not_applicable`: why the hypothesis fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<Counterexample>,
}

/// Knobs for [`check_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckOptions {
    /// Drop zero-symmetry from the hypotheses that include it. Useful for
    /// exhibiting where those results stop holding.
    pub relax_zero_symmetry: bool,
}

/// Checks one catalog entry on `n`.
pub fn check(n: &NearRing, id: TheoremId) -> Result<TheoremReport> {
    let an = Analysis::new(n, true)?;
    check_with(&an, id, CheckOptions::default())
}

/// Checks one catalog entry against a prepared analysis.
pub fn check_with(an: &Analysis<'_>, id: TheoremId, opts: CheckOptions) -> Result<TheoremReport> {
    let outcome = checks::run(an, id, opts)?;
    let (status, instantiations, counterexample, hypothesis) = match outcome {
        checks::Outcome::Pass(k) => (Status::Pass, k, None, None),
        checks::Outcome::Fail(k, c) => (Status::Fail, k, Some(c), None),
        checks::Outcome::NotApplicable(h) => (Status::NotApplicable, 0, None, Some(h)),
    };
    Ok(TheoremReport {
        nearring: an.nearring().name().to_string(),
        theorem: id,
        status,
        instantiations,
        counterexample,
        hypothesis,
    })
}

/// A cell that could not be evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellError {
    pub nearring: String,
    pub theorem: TheoremId,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    /// No cell failed and no cell errored.
    pub pass: bool,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub errors: usize,
}

/// Membership of one near-ring in the three regularity classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainMember {
    pub nearring: String,
    pub left_strongly_regular: bool,
    pub left_morphic_regular: bool,
    pub unit_regular: bool,
}

/// Left strongly regular ⊆ left morphic regular ⊆ unit-regular, with the
/// first corpus member separating each pair of classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainSummary {
    pub members: Vec<ChainMember>,
    /// Left morphic regular but not left strongly regular.
    pub first_strict_witness: Option<String>,
    /// Unit-regular but not left morphic regular.
    pub second_strict_witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<TheoremReport>,
    pub errors: Vec<CellError>,
    pub aggregate: Aggregate,
    pub chain: ChainSummary,
}

fn chain_member(an: &Analysis<'_>) -> ChainMember {
    let p = an.structure_profile();
    ChainMember {
        nearring: an.nearring().name().to_string(),
        left_strongly_regular: p.left_strongly_regular.holds,
        left_morphic_regular: p.left_morphic_regular().unwrap_or(false),
        unit_regular: p.unit_regular.map(|f| f.holds).unwrap_or(false),
    }
}

/// Runs every id on every corpus member. Near-rings are processed in
/// parallel; the report lists them in corpus order and the ids in the
/// order given. A cell error is recorded and the run continues.
pub fn run_suite(corpus: &[NearRing], ids: &[TheoremId]) -> SuiteReport {
    type Row = (Vec<std::result::Result<TheoremReport, CellError>>, Option<ChainMember>);
    let rows: Vec<Row> = corpus
        .par_iter()
        .map(|n| {
            let cell_error = |id: TheoremId, e: &Error| CellError {
                nearring: n.name().to_string(),
                theorem: id,
                message: e.to_string(),
            };
            match Analysis::new(n, true) {
                Ok(an) => {
                    let cells = ids
                        .iter()
                        .map(|&id| check_with(&an, id, CheckOptions::default()).map_err(|e| cell_error(id, &e)))
                        .collect();
                    (cells, Some(chain_member(&an)))
                }
                Err(e) => (ids.iter().map(|&id| Err(cell_error(id, &e))).collect(), None),
            }
        })
        .collect();

    let mut suite = SuiteReport::default();
    for (cells, member) in rows {
        for cell in cells {
            match cell {
                Ok(r) => {
                    match r.status {
                        Status::Pass => suite.aggregate.passed += 1,
                        Status::Fail => suite.aggregate.failed += 1,
                        Status::NotApplicable => suite.aggregate.not_applicable += 1,
                    }
                    suite.reports.push(r);
                }
                Err(e) => {
                    suite.aggregate.errors += 1;
                    suite.errors.push(e);
                }
            }
        }
        suite.chain.members.extend(member);
    }
    suite.aggregate.pass = suite.aggregate.failed == 0 && suite.aggregate.errors == 0;
    let members = &suite.chain.members;
    suite.chain.first_strict_witness = members
        .iter()
        .find(|m| m.left_morphic_regular && !m.left_strongly_regular)
        .map(|m| m.nearring.clone());
    suite.chain.second_strict_witness = members
        .iter()
        .find(|m| m.unit_regular && !m.left_morphic_regular)
        .map(|m| m.nearring.clone());
    suite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{builtin, default_corpus};

    #[test]
    fn ids_round_trip() {
        assert_eq!(TheoremId::ALL.len(), 22);
        for &t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
        assert_eq!(serde_json::to_string(&TheoremId::EhrlichT).unwrap(), "\"ehrlich_T\"");
        assert!(matches!("nope".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn empty_corpus() {
        let s = run_suite(&[], TheoremId::ALL);
        assert!(s.reports.is_empty());
        assert!(s.aggregate.pass);
    }

    #[test]
    fn boolean_klein_ring() {
        let s = run_suite(&[builtin("klein4_ring").unwrap()], &[TheoremId::PropCccxi]);
        assert_eq!(s.reports.len(), 1);
        assert_eq!(s.reports[0].status, Status::Pass);
    }

    #[test]
    fn default_corpus_passes_with_strict_chain() {
        let s = run_suite(&default_corpus(), TheoremId::ALL);
        let fails: Vec<_> = s.reports.iter().filter(|r| r.status == Status::Fail).collect();
        assert!(fails.is_empty(), "{fails:#?}");
        assert!(s.errors.is_empty(), "{:#?}", s.errors);
        assert!(s.aggregate.pass);
        assert_eq!(s.chain.first_strict_witness.as_deref(), Some("mat2_f2"));
        assert_eq!(s.chain.second_strict_witness.as_deref(), Some("m0_z3"));
        let klein = &s.chain.members[0];
        assert!(klein.left_strongly_regular && klein.left_morphic_regular && klein.unit_regular);
    }
}
