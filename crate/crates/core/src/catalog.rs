//! Built-in groups with their expected invariants.
//!
//! Entries live in a versioned text asset (`data/catalog.txt`). Each block
//! looks like
//!
//! ```text
//! # comment describing the entry
//! group S4
//! prime 2
//! tier fast
//! order 24
//! degree 4
//! expect classes=4 atoms=4 factorial=true half=true
//! gen (1,2,3,4)
//! gen (1,2)
//! end
//! ```
//!
//! An optional `partition transitive` line marks entries whose group is
//! already the `p`-group and whose fusion pattern is given rather than
//! computed.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

const CATALOG_TEXT: &str = include_str!("../data/catalog.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Table,
}

impl FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Tier::Fast),
            "table" => Ok(Tier::Table),
            _ => Err(Error::Parse(format!("unknown tier `{s}`"))),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Tier::Fast => "fast",
            Tier::Table => "table",
        })
    }
}

/// Expected values; absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub classes: Option<usize>,
    pub atoms: Option<usize>,
    pub factorial: Option<bool>,
    pub half_factorial: Option<bool>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CatalogPartition {
    /// The identity against every other class.
    Transitive,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub prime: u64,
    pub tier: Tier,
    pub order: BigUint,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub partition: Option<CatalogPartition>,
    pub expected: Expectation,
}

impl CatalogEntry {
    /// The group, with its order checked against the catalog.
    pub fn group(&self) -> Result<PermGroup> {
        let g = PermGroup::from_generators(self.degree, &self.generators)?;
        if g.order() != self.order {
            return Err(Error::Internal(format!(
                "catalog entry {} generates a group of order {}, expected {}",
                self.name,
                g.order(),
                self.order
            )));
        }
        Ok(g)
    }
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    v.parse().map_err(|_| Error::Parse(format!("bad boolean for `{key}`: `{v}`")))
}

fn parse_expect(line: &str) -> Result<Expectation> {
    let mut e = Expectation::default();
    for kv in line.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("bad expectation `{kv}`")))?;
        let count = || v.parse::<usize>().map_err(|_| Error::Parse(format!("bad count `{kv}`")));
        match k {
            "classes" => e.classes = Some(count()?),
            "atoms" => e.atoms = Some(count()?),
            "factorial" => e.factorial = Some(parse_bool(k, v)?),
            "half" => e.half_factorial = Some(parse_bool(k, v)?),
            _ => return Err(Error::Parse(format!("unknown expectation `{k}`"))),
        }
    }
    Ok(e)
}

/// Parses catalog text in the format described at the top of this module.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    struct Partial {
        name: String,
        description: String,
        prime: Option<u64>,
        tier: Option<Tier>,
        order: Option<BigUint>,
        degree: Option<usize>,
        gens: Vec<String>,
        partition: Option<CatalogPartition>,
        expected: Expectation,
    }
    let mut out = Vec::new();
    let mut comment: Vec<String> = Vec::new();
    let mut cur: Option<Partial> = None;
    for (no, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let err = |m: &str| Error::Parse(format!("catalog line {}: {m}", no + 1));
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            if cur.is_none() {
                comment.push(c.trim().to_string());
            }
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if key == "group" {
            if cur.is_some() {
                return Err(err("missing `end`"));
            }
            cur = Some(Partial {
                name: rest.to_string(),
                description: comment.last().cloned().unwrap_or_default(),
                prime: None,
                tier: None,
                order: None,
                degree: None,
                gens: Vec::new(),
                partition: None,
                expected: Expectation::default(),
            });
            comment.clear();
            continue;
        }
        let p = cur.as_mut().ok_or_else(|| err("field outside an entry"))?;
        match key {
            "prime" => p.prime = Some(rest.parse().map_err(|_| err("bad prime"))?),
            "tier" => p.tier = Some(rest.parse()?),
            "order" => p.order = Some(rest.parse().map_err(|_| err("bad order"))?),
            "degree" => p.degree = Some(rest.parse().map_err(|_| err("bad degree"))?),
            "partition" if rest == "transitive" => p.partition = Some(CatalogPartition::Transitive),
            "expect" => p.expected = parse_expect(rest)?,
            "gen" => p.gens.push(rest.to_string()),
            "end" => {
                let p = cur.take().expect("inside an entry");
                let degree = p.degree.ok_or_else(|| err("missing degree"))?;
                let generators = p
                    .gens
                    .iter()
                    .map(|g| Permutation::parse(g, Some(degree)))
                    .collect::<Result<Vec<_>>>()?;
                out.push(CatalogEntry {
                    prime: p.prime.ok_or_else(|| err("missing prime"))?,
                    tier: p.tier.ok_or_else(|| err("missing tier"))?,
                    order: p.order.ok_or_else(|| err("missing order"))?,
                    name: p.name,
                    description: p.description,
                    degree,
                    generators,
                    partition: p.partition,
                    expected: p.expected,
                });
            }
            _ => return Err(err(&format!("unknown field `{key}`"))),
        }
    }
    if cur.is_some() {
        return Err(Error::Parse("catalog ends inside an entry".into()));
    }
    Ok(out)
}

/// Parses catalog text and checks every group order.
pub fn load_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let entries = parse_catalog(text)?;
    for e in &entries {
        e.group()?;
    }
    Ok(entries)
}

/// The built-in catalog, loaded and order-checked on first use.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| load_catalog(CATALOG_TEXT).expect("built-in catalog is consistent"))
}

/// Looks an entry up by name, ignoring ASCII case.
pub fn find(name: &str) -> Result<&'static CatalogEntry> {
    catalog()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn built_in_catalog_parses() {
        let names: Vec<&str> = catalog().iter().map(|e| e.name.as_str()).collect();
        for n in ["S3", "S4", "S6", "S8", "S9", "A6", "A8", "A9", "M10", "PSL2_17", "GL3_3", "PSU3_5"] {
            assert!(names.contains(&n), "{n} missing");
        }
        assert_eq!(find("s4").unwrap().expected.atoms, Some(4));
        assert!(matches!(find("nope"), Err(Error::UnknownGroup(_))));
    }

    #[test]
    fn every_order_verifies() {
        assert_eq!(load_catalog(CATALOG_TEXT).unwrap().len(), catalog().len());
        assert_eq!(find("PSU3_5").unwrap().group().unwrap().order(), BigUint::from(126_000u32));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_catalog("group X\nprime 2\n").is_err());
        assert!(parse_catalog("prime 2\n").is_err());
        assert!(parse_catalog("group X\ncolour red\nend\n").is_err());
        let one = parse_catalog("# tiny\ngroup C2\nprime 2\ntier fast\norder 2\ndegree 2\ngen (1,2)\nend\n").unwrap();
        assert_eq!(one[0].description, "tiny");
        assert_eq!(one[0].group().unwrap().order(), BigUint::from(2u32));
        let wrong = parse_catalog("group C2\nprime 2\ntier fast\norder 3\ndegree 2\ngen (1,2)\nend\n").unwrap();
        assert!(wrong[0].group().is_err());
        assert!(load_catalog("group C2\nprime 2\ntier fast\norder 3\ndegree 2\ngen (1,2)\nend\n").is_err());
    }
}
