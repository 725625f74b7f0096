//! A small catalog of named near-rings.
//!
//! | name | order | element order |
//! |------|-------|---------------|
//! | `klein4_ring` | 4 | `0, a, b, c` as in the tables below; unity `b` |
//! | `m0_z3` | 9 | maps `ℤ₃ → ℤ₃` fixing 0, lexicographic on `(f(1), f(2))`, labelled `f1`…`f9` |
//! | `zn_ring(n)` | n | residues `0..n`, `2 ≤ n ≤ 64` |
//! | `mat2_f2` | 16 | `[pq;rs]` at index `8p + 4q + 2r + s`; unity `[10;01]` = 9 |
//! | `ext_f2_f2` | 4 | `⟨a,m⟩` over `R = M = F₂` at index `2a + m` |
//! | `ext_mat2f2_f2sq` | 64 | `⟨A,v⟩` over `R = mat2_f2`, `M = F₂²` at index `4A + 2x + y` |
//! | `klein4_x_f2` | 8 | product, first factor most significant |
//! | `m0_z3_x_f2` | 18 | product, first factor most significant |
//!
//! The Klein-four ring:
//!
//! ```text
//!  + | 0 a b c        ⋆ | 0 a b c
//!  --+--------        --+--------
//!  0 | 0 a b c        0 | 0 0 0 0
//!  a | a 0 c b        a | 0 a a 0
//!  b | b c 0 a        b | 0 a b c
//!  c | c b a 0        c | 0 0 c c
//! ```

use crate::construct::{build_extension, build_m0, build_product, DEFAULT_CONSTRUCT_CAP};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::modules::NModule;
use crate::nearring::{validate_nearring, NearRing};
use crate::table::Table;

const KLEIN_ADD: [[usize; 4]; 4] = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
const KLEIN_MUL: [[usize; 4]; 4] = [[0, 0, 0, 0], [0, 1, 1, 0], [0, 1, 2, 3], [0, 0, 3, 3]];

const NAMES: [&str; 8] = [
    "ext_f2_f2",
    "ext_mat2f2_f2sq",
    "klein4_ring",
    "klein4_x_f2",
    "m0_z3",
    "m0_z3_x_f2",
    "mat2_f2",
    "zn_ring(n)",
];

/// Catalog names in sorted order. The parametrised entry is listed as
/// `zn_ring(n)`.
pub fn catalog() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// The corpus used when no inputs are given: every fixed entry plus
/// `zn_ring(2)` … `zn_ring(12)`.
pub fn default_corpus() -> Vec<NearRing> {
    let mut names: Vec<String> = [
        "klein4_ring",
        "m0_z3",
        "mat2_f2",
        "ext_f2_f2",
        "ext_mat2f2_f2sq",
        "klein4_x_f2",
        "m0_z3_x_f2",
    ]
    .map(String::from)
    .to_vec();
    names.extend((2..=12).map(|n| format!("zn_ring({n})")));
    names
        .iter()
        .map(|name| builtin(name).expect("catalog entries always build"))
        .collect()
}

/// Looks up a catalog entry by name.
pub fn builtin(name: &str) -> Result<NearRing> {
    let n = match name {
        "klein4_ring" => klein4_ring(),
        "m0_z3" => m0_z3()?,
        "mat2_f2" => mat2_f2(),
        "ext_f2_f2" => {
            let f2 = zn_ring(2)?;
            let m = NModule::regular(&f2);
            build_extension(&f2, &m, DEFAULT_CONSTRUCT_CAP)?
        }
        "ext_mat2f2_f2sq" => {
            let r = mat2_f2();
            let m = column_vectors(&r)?;
            build_extension(&r, &m, DEFAULT_CONSTRUCT_CAP)?
        }
        "klein4_x_f2" => build_product(&[klein4_ring(), zn_ring(2)?], DEFAULT_CONSTRUCT_CAP)?,
        "m0_z3_x_f2" => build_product(&[m0_z3()?, zn_ring(2)?], DEFAULT_CONSTRUCT_CAP)?,
        other => match other.strip_prefix("zn_ring(").and_then(|s| s.strip_suffix(')')) {
            Some(arg) => {
                let k: usize = arg
                    .trim()
                    .parse()
                    .map_err(|_| Error::BadParameter(format!("zn_ring expects an integer, got `{arg}`")))?;
                zn_ring(k)?
            }
            None => return Err(Error::UnknownBuiltin(other.to_string())),
        },
    };
    Ok(n.with_name(name))
}

fn klein4_ring() -> NearRing {
    let rows = |t: [[usize; 4]; 4]| t.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    validate_nearring(&rows(KLEIN_ADD), &rows(KLEIN_MUL), Some(2))
        .expect("Klein-four ring tables are valid")
        .with_labels(["0", "a", "b", "c"].map(String::from).to_vec())
}

fn m0_z3() -> Result<NearRing> {
    let n = build_m0(&FiniteGroup::cyclic(3), DEFAULT_CONSTRUCT_CAP)?;
    Ok(n.with_labels((1..=9).map(|i| format!("f{i}")).collect()))
}

/// `ℤₙ` with the usual residue arithmetic.
fn zn_ring(k: usize) -> Result<NearRing> {
    if !(2..=64).contains(&k) {
        return Err(Error::BadParameter(format!("zn_ring(n) needs 2 <= n <= 64, got {k}")));
    }
    let mul = Table::from_fn(k, k, |i, j| (i * j) % k);
    NearRing::from_parts(FiniteGroup::cyclic(k), mul, Some(1))
}

fn mat2_f2() -> NearRing {
    let entries = |i: usize| [(i >> 3) & 1, (i >> 2) & 1, (i >> 1) & 1, i & 1];
    let encode = |m: [usize; 4]| (m[0] << 3) | (m[1] << 2) | (m[2] << 1) | m[3];
    let add = Table::from_fn(16, 16, |i, j| i ^ j);
    let mul = Table::from_fn(16, 16, |i, j| {
        let ([p, q, r, s], [p2, q2, r2, s2]) = (entries(i), entries(j));
        encode([
            (p * p2 + q * r2) & 1,
            (p * q2 + q * s2) & 1,
            (r * p2 + s * r2) & 1,
            (r * q2 + s * s2) & 1,
        ])
    });
    let labels = (0..16)
        .map(|i| {
            let [p, q, r, s] = entries(i);
            format!("[{p}{q};{r}{s}]")
        })
        .collect();
    let group = FiniteGroup::from_table(add, labels).expect("F₂⁴ is a group");
    NearRing::from_parts(group, mul, Some(9)).expect("2×2 matrices over F₂ form a ring")
}

/// `F₂²` as column vectors (index `2x + y`) under matrix multiplication.
fn column_vectors(r: &NearRing) -> Result<NModule> {
    let add = Table::from_fn(4, 4, |i, j| i ^ j);
    let labels = (0..4).map(|v| format!("{}{}", v >> 1, v & 1)).collect();
    let carrier = FiniteGroup::from_table(add, labels)?;
    let action = Table::from_fn(r.order(), 4, |m, v| {
        let (p, q, rr, s) = ((m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1);
        let (x, y) = (v >> 1, v & 1);
        (((p * x + q * y) & 1) << 1) | ((rr * x + s * y) & 1)
    });
    NModule::new(r, carrier, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_entry_builds_and_revalidates() {
        for n in default_corpus() {
            let again = validate_nearring(&n.add_table().to_rows(), &n.mul_table().to_rows(), n.one()).unwrap();
            assert!(again.same_tables(&n), "{}", n.name());
            assert_eq!(again.flags(), n.flags(), "{}", n.name());
        }
    }

    #[test]
    fn klein_tables_match() {
        let n = builtin("klein4_ring").unwrap();
        assert_eq!(n.add_table().to_rows(), KLEIN_ADD.map(|r| r.to_vec()).to_vec());
        assert_eq!(n.mul_table().to_rows(), KLEIN_MUL.map(|r| r.to_vec()).to_vec());
        assert_eq!(n.one(), n.element("b"));
    }

    #[test]
    fn zn_ring_parameters() {
        let z4 = builtin("zn_ring(4)").unwrap();
        assert_eq!(z4.mul(2, 3), 2);
        assert_eq!(z4.add(3, 3), 2);
        assert_eq!(z4.name(), "zn_ring(4)");
        assert!(matches!(builtin("zn_ring(1)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("zn_ring(65)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("zn_ring(x)"), Err(Error::BadParameter(_))));
        assert!(matches!(builtin("nope"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn mat2_f2_has_a_square_zero_element() {
        let n = builtin("mat2_f2").unwrap();
        assert_eq!(n.order(), 16);
        assert!(n.is_ring());
        let e12 = n.element("[01;00]").unwrap();
        assert_eq!(e12, 4);
        assert_eq!(n.mul(e12, e12), 0);
        assert_eq!(n.one(), Some(9));
    }

    #[test]
    fn extensions_are_not_zero_symmetric() {
        for name in ["ext_f2_f2", "ext_mat2f2_f2sq"] {
            let n = builtin(name).unwrap();
            assert!(n.flags().unital);
            assert!(!n.flags().zero_symmetric.holds);
        }
        assert_eq!(builtin("ext_mat2f2_f2sq").unwrap().order(), 64);
    }

    #[test]
    fn catalog_is_sorted() {
        let c = catalog();
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(c, sorted);
    }
}
