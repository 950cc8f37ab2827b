//! Fusion of `S`-classes in an ambient group, and invariance of
//! representations under it.

use serde::{Deserialize, Serialize};

use crate::chartab::{character_of, CharacterTable, Multiplicities};
use crate::error::{Error, Result};
use crate::perm::{is_conjugate, PermGroup};

/// Partition of the `S`-classes: `labels[i] == labels[j]` iff classes
/// `i` and `j` fuse. Labels are 1-based and numbered by first occurrence,
/// so the identity class always has label 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FusionPattern {
    labels: Vec<usize>,
    class_count: usize,
}

impl FusionPattern {
    /// Canonical pattern from arbitrary labels (relabelled by first
    /// occurrence).
    fn from_raw(raw: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = raw
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(p) => p + 1,
                None => {
                    seen.push(*l);
                    seen.len()
                }
            })
            .collect();
        FusionPattern { labels, class_count: seen.len() }
    }

    /// Every class in its own label.
    pub fn discrete(classes: usize) -> Self {
        FusionPattern { labels: (1..=classes).collect(), class_count: classes }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Class indices grouped by label, in label order.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (i, &l) in self.labels.iter().enumerate() {
            out[l - 1].push(i);
        }
        out
    }

    /// The label list followed by the class count.
    pub fn summary(&self) -> Vec<usize> {
        let mut v = self.labels.clone();
        v.push(self.class_count);
        v
    }
}

/// Fusion of the `S`-classes in `g`, tested on class representatives.
pub fn fusion_pattern(g: &PermGroup, s: &PermGroup, t: &CharacterTable, cap: u64) -> Result<FusionPattern> {
    if !s.is_subgroup_of(g) {
        return Err(Error::InvalidInput("S is not a subgroup of G".into()));
    }
    let classes = t.classes();
    let mut labels = vec![0usize; classes.len()];
    let mut heads: Vec<usize> = Vec::new();
    for (i, c) in classes.iter().enumerate() {
        let key = (c.element_order, c.representative.cycle_type());
        let mut label = None;
        for (h, &head) in heads.iter().enumerate() {
            let hc = &classes[head];
            if (hc.element_order, hc.representative.cycle_type()) != key {
                continue;
            }
            if is_conjugate(g, &hc.representative, &c.representative, cap)? {
                label = Some(h + 1);
                break;
            }
        }
        labels[i] = match label {
            Some(l) => l,
            None => {
                heads.push(i);
                heads.len()
            }
        };
    }
    Ok(FusionPattern { labels, class_count: heads.len() })
}

/// Pattern from an explicit grouping of 0-based class indices.
pub fn fusion_from_partition(partition: &[Vec<usize>], t: &CharacterTable) -> Result<FusionPattern> {
    let r = t.class_count();
    let mut raw = vec![usize::MAX; r];
    for (l, block) in partition.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for &i in block {
            if i >= r {
                return Err(Error::InvalidPartition(format!("class {} out of range 1..={r}", i + 1)));
            }
            if raw[i] != usize::MAX {
                return Err(Error::InvalidPartition(format!("class {} listed twice", i + 1)));
            }
            raw[i] = l;
        }
    }
    if let Some(i) = raw.iter().position(|&l| l == usize::MAX) {
        return Err(Error::InvalidPartition(format!("class {} not covered", i + 1)));
    }
    let classes = t.classes();
    for block in partition {
        let order = classes[block[0]].element_order;
        if let Some(&bad) = block.iter().find(|&&i| classes[i].element_order != order) {
            return Err(Error::InvalidPartition(format!(
                "classes {} and {} have different element orders",
                block[0] + 1,
                bad + 1
            )));
        }
        if block.len() > 1 && block.contains(&0) {
            return Err(Error::InvalidPartition("identity fused with a nontrivial class".into()));
        }
    }
    Ok(FusionPattern::from_raw(&raw))
}

/// Parses a partition such as `[[1],[2,3]]` (1-based) into 0-based blocks.
pub fn parse_partition(text: &str) -> Result<Vec<Vec<usize>>> {
    let blocks: Vec<Vec<usize>> =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("partition: {e}")))?;
    blocks
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|i| i.checked_sub(1).ok_or_else(|| Error::InvalidPartition("class indices are 1-based".into())))
                .collect()
        })
        .collect()
}

/// Whether the character of `rep` is constant on every fused label.
pub fn is_invariant(rep: &impl Multiplicities, f: &FusionPattern, t: &CharacterTable) -> Result<bool> {
    if f.len() != t.class_count() {
        return Err(Error::LengthMismatch { expected: t.class_count(), found: f.len() });
    }
    let chi = character_of(rep, t)?;
    for group in f.groups() {
        let first = &chi[group[0]];
        if group[1..].iter().any(|&i| &chi[i] != first) {
            return Ok(false);
        }
    }
    Ok(true)
}
