use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Integer-encoded observations of one discrete variable.
///
/// Every value lies in `[0, domain_size)`; the sample is never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteSample {
    values: Vec<usize>,
    domain_size: usize,
}

impl DiscreteSample {
    pub fn new(values: Vec<usize>, domain_size: usize) -> Result<Self> {
        if domain_size == 0 {
            return Err(Error::ZeroDomain);
        }
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, &v)| v >= domain_size) {
            return Err(Error::SymbolOutOfRange {
                index,
                value,
                domain: domain_size,
            });
        }
        Ok(DiscreteSample {
            values,
            domain_size,
        })
    }

    /// Builds a sample whose domain is the observed support `max + 1`.
    pub fn from_indices(values: Vec<usize>) -> Result<Self> {
        let domain = values.iter().max().map_or(0, |&m| m + 1);
        Self::new(values, domain)
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn histogram(&self) -> Histogram {
        let mut counts = vec![0u64; self.domain_size];
        for &v in &self.values {
            counts[v] += 1;
        }
        Histogram {
            counts,
            total: self.values.len() as u64,
        }
    }
}

/// Symbol counts `h_j` of a sample, with their total `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn new(counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::ZeroDomain);
        }
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::EmptySample);
        }
        Ok(Histogram { counts, total })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Number of observations `n`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of cells `m`.
    pub fn domain_size(&self) -> usize {
        self.counts.len()
    }
}

/// A sample together with the labels its symbol indices stand for.
#[derive(Debug, Clone, PartialEq)]
pub struct Encoded<T> {
    pub sample: DiscreteSample,
    /// `labels[i]` is the original value encoded as symbol `i`.
    pub labels: Vec<T>,
}

impl<T: Clone> Encoded<T> {
    pub fn decode(&self) -> Vec<T> {
        self.sample
            .values()
            .iter()
            .map(|&v| self.labels[v].clone())
            .collect()
    }
}

/// Encodes labels to contiguous indices in order of first appearance.
pub fn encode<T: Hash + Eq + Clone>(labels: &[T]) -> Result<Encoded<T>> {
    let mut index: HashMap<&T, usize> = HashMap::new();
    let mut table = Vec::new();
    let values = labels
        .iter()
        .map(|label| {
            *index.entry(label).or_insert_with(|| {
                table.push(label.clone());
                table.len() - 1
            })
        })
        .collect();
    Ok(Encoded {
        sample: DiscreteSample::new(values, table.len().max(1))?,
        labels: table,
    })
}

/// Encodes labels to contiguous indices in ascending label order.
pub fn encode_sorted<T: Ord + Clone>(labels: &[T]) -> Result<Encoded<T>> {
    let mut table = labels.to_vec();
    table.sort();
    table.dedup();
    let values = labels
        .iter()
        .map(|label| {
            table
                .binary_search(label)
                .expect("label present in its own table")
        })
        .collect();
    Ok(Encoded {
        sample: DiscreteSample::new(values, table.len().max(1))?,
        labels: table,
    })
}
