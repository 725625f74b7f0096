use super::{is_n_ideal, NModule};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::nearring::NearRing;
use crate::subset::Subset;
use crate::table::Table;

/// `M/L` together with the canonical projection.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub module: NModule,
    /// Coset index of every element of `M`.
    pub projection: Vec<usize>,
    /// Least element of each coset, ascending.
    pub representatives: Vec<usize>,
}

/// Builds `M/L` for an N-ideal `L`. Cosets are numbered by their least
/// member, and the action `r·(m + L) = r·m + L` is checked to be
/// independent of the representative.
pub fn quotient_module(n: &NearRing, m: &NModule, l: &Subset) -> Result<QuotientModule> {
    let verdict = is_n_ideal(n, m, l);
    if !verdict.is_n_ideal() {
        return Err(Error::NotNIdeal(verdict));
    }
    let mut projection = vec![usize::MAX; m.order()];
    let mut representatives = Vec::new();
    for x in m.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let k = representatives.len();
        representatives.push(x);
        for y in l.iter() {
            projection[m.add(x, y)] = k;
        }
    }
    let q = representatives.len();
    let add = Table::from_fn(q, q, |i, j| projection[m.add(representatives[i], representatives[j])]);
    let action = Table::from_fn(n.order(), q, |r, i| projection[m.act(r, representatives[i])]);
    for r in n.elements() {
        for x in m.elements() {
            if projection[m.act(r, x)] != action.get(r, projection[x]) {
                return Err(Error::Internal(format!(
                    "quotient action depends on the representative at r={r}, m={x}"
                )));
            }
        }
    }
    let labels = representatives
        .iter()
        .map(|&x| format!("{}+L", m.carrier().label(x)))
        .collect();
    Ok(QuotientModule {
        module: NModule::trusted(FiniteGroup::trusted(add, labels), action),
        projection,
        representatives,
    })
}
