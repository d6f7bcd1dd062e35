use std::collections::HashSet;
use std::sync::Arc;

use super::field::Field;
use super::monomial::MonomialOrder;
use super::PolyError;

/// Variable names, coefficient field and monomial order of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    field: Field,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(names: Vec<String>, field: Field, order: MonomialOrder) -> Result<RingRef, PolyError> {
        let mut seen = HashSet::new();
        for n in &names {
            if n.is_empty() || !seen.insert(n.as_str()) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Ring { names, field, order }))
    }

    /// Ring with variables `prefix1 .. prefixN`.
    pub fn indexed(prefix: &str, n: usize, field: Field, order: MonomialOrder) -> RingRef {
        let names = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Ring::new(names, field, order).expect("indexed names are distinct")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            names: self.names.clone(),
            field: self.field,
            order,
        })
    }

    pub fn with_field(&self, field: Field) -> RingRef {
        Arc::new(Ring {
            names: self.names.clone(),
            field,
            order: self.order,
        })
    }

    /// Appends fresh variables after the existing ones.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<RingRef, PolyError> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(names, self.field, self.order)
    }

    /// A variable name starting with `base` that is not yet used.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (0..)
            .map(|i| format!("{base}_{i}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}
