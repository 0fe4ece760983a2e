use std::collections::BTreeMap;

use super::GroupError;
use crate::poly::VariableSet;

/// How the variables of a set group into 3-vectors the group acts on.
///
/// `w{i}{n}`/`v{i}{n}` are the rotational and translational parts of screw
/// `i`; `x{i}{n}` is a plain vector, which only rotates. A `v` block needs its
/// `w` block, since translations mix `ω` into `v`.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub screws: Vec<ScrewBlock>,
    pub vectors: Vec<[usize; 3]>,
}

#[derive(Clone, Debug)]
pub(crate) struct ScrewBlock {
    pub omega: [usize; 3],
    pub vee: Option<[usize; 3]>,
}

type Partial = [Option<usize>; 3];

impl Layout {
    pub fn of(vars: &VariableSet) -> Result<Self, GroupError> {
        let mut blocks: BTreeMap<(String, char), Partial> = BTreeMap::new();
        for (idx, name) in vars.names().iter().enumerate() {
            let (kind, screw, n) = split(name).ok_or_else(|| GroupError::UnknownCoordinate(name.clone()))?;
            blocks.entry((screw.to_string(), kind)).or_default()[n] = Some(idx);
        }
        let complete = |key: &(String, char), p: &Partial| -> Result<[usize; 3], GroupError> {
            match p {
                [Some(a), Some(b), Some(c)] => Ok([*a, *b, *c]),
                _ => Err(GroupError::IncompleteBlock(format!("{}{}", key.1, key.0))),
            }
        };
        let mut layout = Layout {
            screws: Vec::new(),
            vectors: Vec::new(),
        };
        for (key, p) in &blocks {
            match key.1 {
                'x' => layout.vectors.push(complete(key, p)?),
                'w' => {
                    let vee = match blocks.get(&(key.0.clone(), 'v')) {
                        Some(vp) => Some(complete(&(key.0.clone(), 'v'), vp)?),
                        None => None,
                    };
                    layout.screws.push(ScrewBlock {
                        omega: complete(key, p)?,
                        vee,
                    });
                }
                _ => {
                    if !blocks.contains_key(&(key.0.clone(), 'w')) {
                        return Err(GroupError::IncompleteBlock(format!("w{}", key.0)));
                    }
                }
            }
        }
        Ok(layout)
    }
}

/// `w12` → (`w`, `1`, 1); the last digit is the component.
fn split(name: &str) -> Option<(char, &str, usize)> {
    let kind = name.chars().next()?;
    if !matches!(kind, 'w' | 'v' | 'x') || name.len() < 3 {
        return None;
    }
    let (screw, comp) = name[1..].split_at(name.len() - 2);
    if !screw.bytes().all(|b| b.is_ascii_digit()) || screw.starts_with('0') {
        return None;
    }
    match comp {
        "1" => Some((kind, screw, 0)),
        "2" => Some((kind, screw, 1)),
        "3" => Some((kind, screw, 2)),
        _ => None,
    }
}
