//! The JSON table document, version 1.
//!
//! ```json
//! {"format": "nearring-table/1", "name": "…", "order": n,
//!  "labels": ["…", …], "add": [[…], …], "mul": [[…], …], "one": k}
//! ```
//!
//! `labels` and `one` are optional and unknown top-level keys are ignored.
//! Entries are element indices; `add[i][j]` is `i + j` and `mul[i][j]` is
//! `i ⋆ j`.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::nearring::{validate_nearring, NearRing};

pub const FORMAT_TAG: &str = "nearring-table/1";

/// A parsed document. Only the shape has been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDoc {
    pub name: String,
    pub order: usize,
    pub labels: Option<Vec<String>>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub one: Option<usize>,
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::Format(format!("missing field `{key}`")))
}

fn index(v: &Value, n: usize, what: &str) -> Result<usize> {
    let i = v
        .as_i64()
        .ok_or_else(|| Error::Format(format!("{what} is not an integer")))?;
    if i < 0 || i as u64 >= n as u64 {
        return Err(Error::Format(format!("{what} = {i} is out of range 0..{n}")));
    }
    Ok(i as usize)
}

fn square(obj: &Map<String, Value>, key: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let rows = field(obj, key)?
        .as_array()
        .ok_or_else(|| Error::Format(format!("`{key}` is not an array")))?;
    if rows.len() != n {
        return Err(Error::Format(format!(
            "`{key}` has {} rows but order is {n}",
            rows.len()
        )));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Format(format!("`{key}` row {i} is not an array")))?;
            if row.len() != n {
                return Err(Error::Format(format!(
                    "`{key}` row {i} has {} entries but order is {n}",
                    row.len()
                )));
            }
            row.iter()
                .enumerate()
                .map(|(j, v)| index(v, n, &format!("`{key}`[{i}][{j}]")))
                .collect()
        })
        .collect()
}

impl TableDoc {
    pub fn parse(bytes: &[u8]) -> Result<Self> {
        let value: Value = serde_json::from_slice(bytes).map_err(|e| Error::Format(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("document is not a JSON object".into()))?;
        match field(obj, "format")?.as_str() {
            Some(FORMAT_TAG) => {}
            _ => return Err(Error::Format(format!("`format` must be \"{FORMAT_TAG}\""))),
        }
        let name = field(obj, "name")?
            .as_str()
            .ok_or_else(|| Error::Format("`name` is not a string".into()))?
            .to_string();
        let order = field(obj, "order")?
            .as_u64()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Format("`order` must be a positive integer".into()))? as usize;
        let labels = match obj.get("labels") {
            None | Some(Value::Null) => None,
            Some(v) => {
                let arr = v
                    .as_array()
                    .ok_or_else(|| Error::Format("`labels` is not an array".into()))?;
                if arr.len() != order {
                    return Err(Error::Format(format!(
                        "`labels` has {} entries but order is {order}",
                        arr.len()
                    )));
                }
                let labels = arr
                    .iter()
                    .map(|l| {
                        l.as_str()
                            .map(String::from)
                            .ok_or_else(|| Error::Format("`labels` entries must be strings".into()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let mut seen = HashSet::new();
                if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
                    return Err(Error::Format(format!("duplicate label `{dup}`")));
                }
                Some(labels)
            }
        };
        let add = square(obj, "add", order)?;
        let mul = square(obj, "mul", order)?;
        let one = match obj.get("one") {
            None | Some(Value::Null) => None,
            Some(v) => Some(index(v, order, "`one`")?),
        };
        Ok(TableDoc {
            name,
            order,
            labels,
            add,
            mul,
            one,
        })
    }

    pub fn from_nearring(n: &NearRing) -> Self {
        TableDoc {
            name: n.name().to_string(),
            order: n.order(),
            labels: Some(n.labels().to_vec()),
            add: n.add_table().to_rows(),
            mul: n.mul_table().to_rows(),
            one: n.one(),
        }
    }

    /// Validates the document. If the additive identity is not at index 0
    /// it is swapped there first, together with its label.
    pub fn into_nearring(self) -> Result<NearRing> {
        let n = self.order;
        let mut labels = self.labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let (mut add, mut mul, mut one) = (self.add, self.mul, self.one);
        let identity = (0..n).find(|&e| (0..n).all(|x| add[e][x] == x && add[x][e] == x));
        if let Some(e) = identity.filter(|&e| e != 0) {
            let p = |i: usize| match i {
                0 => e,
                i if i == e => 0,
                i => i,
            };
            let relabel = |t: &[Vec<usize>]| -> Vec<Vec<usize>> {
                (0..n).map(|i| (0..n).map(|j| p(t[p(i)][p(j)])).collect()).collect()
            };
            add = relabel(&add);
            mul = relabel(&mul);
            one = one.map(p);
            labels.swap(0, e);
        }
        Ok(validate_nearring(&add, &mul, one)?
            .with_labels(labels)
            .with_name(self.name))
    }

    /// Deterministic rendering: fixed key order, one table row per line.
    pub fn emit(&self) -> String {
        let q = |s: &str| Value::String(s.to_string()).to_string();
        let table = |t: &[Vec<usize>]| {
            let rows: Vec<String> = t
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                    format!("    [{}]", cells.join(", "))
                })
                .collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"format\": {},", q(FORMAT_TAG));
        let _ = writeln!(out, "  \"name\": {},", q(&self.name));
        let _ = writeln!(out, "  \"order\": {},", self.order);
        if let Some(labels) = &self.labels {
            let ls: Vec<String> = labels.iter().map(|l| q(l)).collect();
            let _ = writeln!(out, "  \"labels\": [{}],", ls.join(", "));
        }
        let _ = write!(out, "  \"add\": {},\n  \"mul\": {}", table(&self.add), table(&self.mul));
        if let Some(one) = self.one {
            let _ = write!(out, ",\n  \"one\": {one}");
        }
        out.push_str("\n}\n");
        out
    }
}

/// Parses and validates a document in one step.
pub fn load_nearring(bytes: &[u8]) -> Result<NearRing> {
    TableDoc::parse(bytes)?.into_nearring()
}
