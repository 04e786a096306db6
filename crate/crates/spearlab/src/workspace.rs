//! A labeled registry of spaces and operators for the CLI: built-in
//! fixtures plus documents loaded from JSON files.

use crate::error::{Error, Result};
use crate::operators::{fixture_operator, LinOp};
use crate::spaces::{fixture, SpaceRef};
use crate::wire;
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

#[derive(Default)]
pub struct Workspace {
    spaces: BTreeMap<String, SpaceRef>,
    operators: BTreeMap<String, LinOp>,
}

impl Workspace {
    pub fn new() -> Self {
        Workspace::default()
    }

    /// Resolves a space by registered label first, then by fixture name.
    pub fn space(&self, name: &str) -> Result<SpaceRef> {
        if let Some(s) = self.spaces.get(name) {
            return Ok(s.clone());
        }
        Ok(Arc::new(fixture(name)?))
    }

    /// Resolves an operator by registered label first, then by fixture name.
    pub fn operator(&self, name: &str) -> Result<LinOp> {
        if let Some(op) = self.operators.get(name) {
            return Ok(op.clone());
        }
        fixture_operator(name)
    }

    pub fn insert_space(&mut self, space: SpaceRef) -> Result<()> {
        let label = space.label().to_string();
        if self.spaces.contains_key(&label) {
            return Err(Error::InvalidInput(format!("duplicate space label `{label}`")));
        }
        self.spaces.insert(label, space);
        Ok(())
    }

    pub fn insert_operator(&mut self, op: LinOp) -> Result<()> {
        let label = op.label().to_string();
        if self.operators.contains_key(&label) {
            return Err(Error::InvalidInput(format!("duplicate operator label `{label}`")));
        }
        self.operators.insert(label, op);
        Ok(())
    }

    /// Loads a JSON space document from disk and registers it.
    pub fn load_space_file(&mut self, path: &Path) -> Result<SpaceRef> {
        let doc = read_json(path)?;
        let space = Arc::new(wire::space_from_value(&doc)?);
        self.insert_space(space.clone())?;
        Ok(space)
    }

    /// Loads a JSON operator document from disk and registers it; space
    /// references inside the document resolve against this workspace.
    pub fn load_operator_file(&mut self, path: &Path) -> Result<LinOp> {
        let doc = read_json(path)?;
        let op = wire::operator_from_value(&doc, &|name| self.space(name))?;
        self.insert_operator(op.clone())?;
        Ok(op)
    }
}

fn read_json(path: &Path) -> Result<serde_json::Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("malformed JSON in {}: {e}", path.display())))
}
