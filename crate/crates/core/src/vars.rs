//! Variable tables: named variables with contiguous symmetrization blocks.

use std::fmt;
use std::sync::Arc;

/// A contiguous range of variable indices forming a symmetrization block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub start: usize,
    pub len: usize,
}

impl Block {
    pub fn new(start: usize, len: usize) -> Self {
        Block { start, len }
    }

    pub fn indices(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

/// An ordered list of variable identifiers together with the block structure
/// used by symmetrization.
///
/// Every polynomial and rational expression holds an `Arc<VariableTable>`;
/// arithmetic between values over different tables is a hard error.
#[derive(Debug, PartialEq, Eq)]
pub struct VariableTable {
    names: Vec<String>,
    blocks: Vec<Block>,
}

impl VariableTable {
    /// Build a table from unique names and disjoint contiguous blocks.
    ///
    /// # Panics
    /// Panics on duplicate names or out-of-range / overlapping blocks.
    pub fn new<S: Into<String>>(names: Vec<S>, blocks: Vec<Block>) -> Arc<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable name `{n}` in table"
            );
        }
        let mut covered = vec![false; names.len()];
        for b in &blocks {
            for i in b.indices() {
                assert!(i < names.len(), "block range out of bounds");
                assert!(!covered[i], "overlapping symmetrization blocks");
                covered[i] = true;
            }
        }
        Arc::new(VariableTable { names, blocks })
    }

    /// A table with no block structure.
    pub fn flat<S: Into<String>>(names: Vec<S>) -> Arc<Self> {
        Self::new(names, Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Index of a variable by name.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(", "))
    }
}

/// Panic unless two values share the same variable table.
pub(crate) fn check_same_table(a: &Arc<VariableTable>, b: &Arc<VariableTable>) {
    assert!(
        Arc::ptr_eq(a, b) || a == b,
        "mismatched variable tables: {a} vs {b}"
    );
}
