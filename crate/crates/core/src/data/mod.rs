//! Datasets of measured items, the embedded reference corpus, CSV input and
//! JSON reports.

mod csv_io;
mod embedded;
mod report;

pub use csv_io::{parse_dataset, write_csv, DataError, CSV_HEADER};
pub use embedded::{embedded_samples, PrintedModel, Reference};
pub use report::{
    analyze, write_report, ItemReport, ModelKind, ModelReport, PairReport, Report, ReportConfig,
};

use crate::membership::{Connective, MembershipTriple};
use crate::realspace::PairAngles;

#[derive(Clone, Debug, PartialEq)]
pub struct Item {
    pub name: String,
    pub triple: MembershipTriple<f64>,
    /// Values printed alongside the item in the reference corpus.
    pub reference: Option<Reference>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConceptPair {
    pub pair_id: String,
    pub concept_a: Option<String>,
    pub concept_b: Option<String>,
    pub connective: Connective,
    /// Reference angles of the pair for the eight-dimensional model.
    pub angles: Option<PairAngles<f64>>,
    pub items: Vec<Item>,
}

impl ConceptPair {
    pub fn item(&self, name: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn triples(&self) -> Vec<MembershipTriple<f64>> {
        self.items.iter().map(|i| i.triple).collect()
    }
}

/// Concept pairs in order of first appearance. A pair is identified by its
/// id together with its connective.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Dataset {
    pub pairs: Vec<ConceptPair>,
}

impl Dataset {
    pub fn pair(&self, pair_id: &str, connective: Connective) -> Option<&ConceptPair> {
        self.pairs.iter().find(|p| p.pair_id == pair_id && p.connective == connective)
    }

    /// First item called `item` in a pair called `pair_id`, under either
    /// connective.
    pub fn lookup(&self, pair_id: &str, item: &str) -> Option<&Item> {
        self.pairs.iter().filter(|p| p.pair_id == pair_id).find_map(|p| p.item(item))
    }

    /// First item called `item` anywhere in the dataset.
    pub fn find(&self, item: &str) -> Option<(&ConceptPair, &Item)> {
        self.pairs.iter().find_map(|p| p.item(item).map(|i| (p, i)))
    }

    pub fn len(&self) -> usize {
        self.pairs.iter().map(|p| p.items.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub(crate) fn pair_mut_or_insert(&mut self, pair_id: &str, connective: Connective) -> &mut ConceptPair {
        let pos = self.pairs.iter().position(|p| p.pair_id == pair_id && p.connective == connective);
        let idx = match pos {
            Some(i) => i,
            None => {
                self.pairs.push(ConceptPair {
                    pair_id: pair_id.to_string(),
                    concept_a: None,
                    concept_b: None,
                    connective,
                    angles: None,
                    items: Vec::new(),
                });
                self.pairs.len() - 1
            }
        };
        &mut self.pairs[idx]
    }
}
