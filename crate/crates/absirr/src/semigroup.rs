//! Membership in numerical semigroups: which targets are sums of a fixed
//! set of positive generators with nonnegative integer multiplicities.

use crate::{Error, Result};

/// Hard cap on membership targets; the table is one bit per value.
const MAX_TARGET: u64 = 1 << 28;

/// Positive generators, sorted and deduplicated; may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = u64>>(gens: I) -> Result<GeneratorSet> {
        let mut gens: Vec<u64> = gens.into_iter().collect();
        if gens.iter().any(|&g| g == 0) {
            return Err(Error::DegenerateInput("semigroup generators must be positive"));
        }
        gens.sort_unstable();
        gens.dedup();
        Ok(GeneratorSet { gens })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// Reachability table for 0..=bound; table[t] iff t is in the semigroup.
fn reachable_table(bound: u64, gens: &GeneratorSet) -> Result<Vec<bool>> {
    if bound > MAX_TARGET {
        return Err(Error::ScopeExceeded {
            what: "semigroup membership target",
            needed: bound as u128,
            budget: MAX_TARGET as u128,
        });
    }
    let n = bound as usize + 1;
    let mut table = vec![false; n];
    table[0] = true;
    for t in 1..n {
        for &g in &gens.gens {
            let g = g as usize;
            if g > t {
                break; // generators are sorted
            }
            if table[t - g] {
                table[t] = true;
                break;
            }
        }
    }
    Ok(table)
}

/// Whether `target` is a nonnegative integer combination of the generators.
/// The empty set spans exactly {0}.
pub fn span_membership(target: u64, gens: &GeneratorSet) -> Result<bool> {
    if target == 0 {
        return Ok(true);
    }
    Ok(*reachable_table(target, gens)?.last().unwrap())
}

/// All non-members strictly below `bound`, ascending.
pub fn gaps_below(bound: u64, gens: &GeneratorSet) -> Result<Vec<u64>> {
    if bound == 0 {
        return Ok(Vec::new());
    }
    let table = reachable_table(bound - 1, gens)?;
    Ok((1..bound).filter(|&t| !table[t as usize]).collect())
}
