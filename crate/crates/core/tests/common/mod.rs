//! Shared setup for the integration tests.
#![allow(dead_code)]

use fmrep::catalog::{catalog, find, CatalogEntry, CatalogPartition};
use fmrep::chartab::{character_table, CharacterTable};
use fmrep::fusion::{fusion_from_partition, fusion_pattern, FusionPattern};
use fmrep::perm::{sylow_subgroup, PermGroup, Permutation, DEFAULT_CONJUGACY_CAP};
use fmrep::repring::{rep_lattice, RepLattice};

pub struct Case {
    pub name: String,
    pub g: PermGroup,
    pub s: PermGroup,
    pub table: CharacterTable,
    pub fusion: FusionPattern,
    pub lattice: RepLattice,
}

pub fn case_of(entry: &CatalogEntry) -> Case {
    let g = entry.group().unwrap();
    let (s, table, fusion) = match entry.partition {
        Some(CatalogPartition::Transitive) => {
            let t = character_table(&g).unwrap();
            let blocks = vec![vec![0], (1..t.class_count()).collect()];
            let f = fusion_from_partition(&blocks, &t).unwrap();
            (g.clone(), t, f)
        }
        None => {
            let s = sylow_subgroup(&g, entry.prime).unwrap();
            let t = character_table(&s).unwrap();
            let f = fusion_pattern(&g, &s, &t, DEFAULT_CONJUGACY_CAP).unwrap();
            (s, t, f)
        }
    };
    let lattice = rep_lattice(&fusion, &table).unwrap();
    Case { name: entry.name.clone(), g, s, table, fusion, lattice }
}

pub fn case(name: &str) -> Case {
    case_of(find(name).unwrap())
}

pub fn all_cases() -> Vec<Case> {
    catalog().iter().map(case_of).collect()
}

pub fn group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::parse(g, Some(degree)).unwrap()).collect();
    PermGroup::from_generators(degree, &gens).unwrap()
}
