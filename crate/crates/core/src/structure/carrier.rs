use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};

/// Default upper bound on carrier sizes.
pub const DEFAULT_MAX_CARRIER: usize = 256;

/// An ordered list of element identifiers. Indices `0..len` are the
/// element handles used by every table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Carrier {
    pub fn new(names: Vec<String>) -> Result<Self> {
        Self::with_limit(names, DEFAULT_MAX_CARRIER)
    }

    pub fn with_limit(names: Vec<String>, limit: usize) -> Result<Self> {
        if names.len() > limit {
            return Err(Error::CarrierTooLarge { size: names.len(), limit });
        }
        if names.is_empty() {
            return Err(Error::InvalidParameter("carrier must be non-empty".into()));
        }
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::EmptyIdentifier(i));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateIdentifier(name.clone()));
            }
        }
        Ok(Self { names, lookup })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }
}
