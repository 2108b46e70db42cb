use std::collections::BTreeMap;
use std::str::FromStr;

use super::families::{caterpillar, triangulation, LegRule, Row, Tree3Oracle};
use super::tree_t::{t_double_prime, t_prime, tree_t, Window};
use super::{ball, OracleError};
use crate::graph::Graph;

/// `key=value` parameters for [`generate`].
#[derive(Debug, Clone, Default)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn set(mut self, key: &str, value: impl ToString) -> Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    /// Parses `key=value` items.
    pub fn parse<'a>(items: impl IntoIterator<Item = &'a str>) -> Result<Self, OracleError> {
        let mut p = Params::new();
        for item in items {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                OracleError::InvalidParameter(format!("expected key=value, got `{item}`"))
            })?;
            p.0.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(p)
    }

    fn get<T: FromStr>(&self, key: &str, default: T) -> Result<T, OracleError> {
        match self.0.get(key) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| OracleError::InvalidParameter(format!("cannot parse {key}=`{s}`"))),
        }
    }

    fn only(&self, allowed: &[&str]) -> Result<(), OracleError> {
        match self.0.keys().find(|k| !allowed.contains(&k.as_str())) {
            Some(k) => Err(OracleError::InvalidParameter(format!(
                "unknown parameter `{k}` (expected one of {})",
                allowed.join(", ")
            ))),
            None => Ok(()),
        }
    }
}

pub const FAMILIES: &[&str] = &[
    "tree_T",
    "t_prime",
    "t_double_prime",
    "caterpillar",
    "triangulation",
    "path",
    "tree3",
];

fn window(p: &Params) -> Result<Window, OracleError> {
    p.only(&["L", "b"])?;
    let label: i64 = p.get("L", 3)?;
    if label < 1 {
        return Err(OracleError::InvalidParameter("L must be at least 1".into()));
    }
    Ok(Window {
        label,
        depth: p.get("b", 1)?,
    })
}

fn row(s: &str) -> Result<Row, OracleError> {
    match s {
        "t" => Ok(Row::Top),
        "b" => Ok(Row::Bottom),
        _ => Err(OracleError::InvalidParameter(format!(
            "row must be `t` or `b`, got `{s}`"
        ))),
    }
}

/// Legs written as `t0:2,b3:1`.
fn explicit_legs(text: &str) -> Result<LegRule, OracleError> {
    let mut m = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || OracleError::InvalidParameter(format!("bad leg `{item}`, expected like t0:2"));
        let (at, len) = item.split_once(':').ok_or_else(bad)?;
        let r = row(at.get(..1).ok_or_else(bad)?)?;
        let i: i64 = at[1..].parse().map_err(|_| bad())?;
        let len: u32 = len.parse().map_err(|_| bad())?;
        m.insert((r, i), len);
    }
    Ok(LegRule::Explicit(m))
}

/// Builds a finite member of a named family.
///
/// | family | parameters |
/// |---|---|
/// | `tree_T`, `t_prime`, `t_double_prime` | `L` (labels, default 3), `b` (line depth, default 1) |
/// | `caterpillar` | `n` (half width, default 5), `legs` (like `t0:2,b3:1`) or `ramp` (row `t`/`b`) with `offset` |
/// | `triangulation` | `d` (degree, default 7), `r` (radius, default 3) |
/// | `path` | `n` (vertices, default 5) |
/// | `tree3` | `r` (radius, default 3) |
pub fn generate(family: &str, p: &Params) -> Result<Graph, OracleError> {
    match family {
        "tree_T" => Ok(tree_t(window(p)?)?.graph),
        "t_prime" => Ok(t_prime(window(p)?)?.graph),
        "t_double_prime" => Ok(t_double_prime(window(p)?)?.graph),
        "caterpillar" => {
            p.only(&["n", "legs", "ramp", "offset"])?;
            let legs = match (p.0.get("legs"), p.0.get("ramp")) {
                (Some(_), Some(_)) => {
                    return Err(OracleError::InvalidParameter(
                        "give either legs or ramp, not both".into(),
                    ))
                }
                (Some(s), None) => explicit_legs(s)?,
                (None, Some(r)) => LegRule::Ramp {
                    row: row(r)?,
                    offset: p.get("offset", 0)?,
                },
                (None, None) => LegRule::Explicit(BTreeMap::new()),
            };
            caterpillar(p.get("n", 5)?, legs)
        }
        "triangulation" => {
            p.only(&["d", "r"])?;
            Ok(triangulation(p.get("d", 7)?, p.get("r", 3)?)?.graph)
        }
        "path" => {
            p.only(&["n"])?;
            let n: usize = p.get("n", 5)?;
            if n == 0 {
                return Err(OracleError::InvalidParameter("n must be at least 1".into()));
            }
            Ok(crate::graph::named::path(n))
        }
        "tree3" => {
            p.only(&["r"])?;
            let r: usize = p.get("r", 3)?;
            Ok(ball(
                &Tree3Oracle,
                &super::GraphOracle::basepoint(&Tree3Oracle),
                r,
            )?
            .graph)
        }
        _ => Err(OracleError::InvalidParameter(format!(
            "unknown family `{family}` (known: {})",
            FAMILIES.join(", ")
        ))),
    }
}
