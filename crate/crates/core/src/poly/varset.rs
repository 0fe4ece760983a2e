use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// An ordered list of distinct variable names.
///
/// The position of a name is the index of its exponent in every
/// [`Monomial`](super::Monomial) over this set.
#[derive(Clone)]
pub struct VariableSet {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VariableSet {
    pub fn new<I, T>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VariableSet { names, index }))
    }

    /// Coordinates of `m` screws: `w11 w12 w13 ... wm3 v11 ... vm3`.
    ///
    /// All rotational coordinates precede all translational ones, which is
    /// the lexicographic priority used for the multi-screw computations.
    pub fn screws(m: usize) -> Arc<Self> {
        Self::new(screw_names(m)).expect("canonical names are valid")
    }

    /// Translation group coordinates `t1 t2 t3` followed by [`Self::screws`].
    pub fn translation_pullback(m: usize) -> Arc<Self> {
        let names = ["t1", "t2", "t3"].into_iter().map(String::from).chain(screw_names(m));
        Self::new(names).expect("canonical names are valid")
    }

    /// Coordinates of `m` plain 3-vectors: `x11 x12 x13 ... xm3`.
    pub fn vectors(m: usize) -> Arc<Self> {
        let names = (1..=m).flat_map(|i| (1..=3).map(move |n| format!("x{i}{n}")));
        Self::new(names).expect("canonical names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }
}

fn screw_names(m: usize) -> impl Iterator<Item = String> {
    let w = (1..=m).flat_map(|i| (1..=3).map(move |n| format!("w{i}{n}")));
    let v = (1..=m).flat_map(|i| (1..=3).map(move |n| format!("v{i}{n}")));
    w.chain(v)
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VariableSet {}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

/// Same variable set, by pointer or by contents.
pub(crate) fn same_vars(a: &Arc<VariableSet>, b: &Arc<VariableSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
