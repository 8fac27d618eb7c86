//! Family rules registered by name.

use crate::classify::{E6Rule, E7Rule, SoRule, UnitarityRule};
use crate::error::{Error, Result};
use crate::root_system::Family;

pub struct Entry {
    pub name: &'static str,
    pub needs_rank: bool,
    pub summary: &'static str,
    make: fn(Option<usize>) -> Result<Family>,
}

impl Entry {
    pub fn family(&self, n: Option<usize>) -> Result<Family> {
        (self.make)(n)?.validate()
    }
}

fn rank(name: &'static str, n: Option<usize>) -> Result<usize> {
    n.ok_or(Error::MissingRank(name))
}

pub static ENTRIES: [Entry; 4] = [
    Entry {
        name: "so-even",
        needs_rank: true,
        summary: "so(2, 2n-2), n >= 3",
        make: |n| rank("so-even", n).map(Family::SoEven),
    },
    Entry {
        name: "so-odd",
        needs_rank: true,
        summary: "so(2, 2n-1), n >= 2",
        make: |n| rank("so-odd", n).map(Family::SoOdd),
    },
    Entry {
        name: "e6",
        needs_rank: false,
        summary: "e6(-14)",
        make: |_| Ok(Family::E6),
    },
    Entry {
        name: "e7",
        needs_rank: false,
        summary: "e7(-25)",
        make: |_| Ok(Family::E7),
    },
];

pub fn lookup(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

/// The unitarity rule of a family.
pub fn rule_for(family: Family) -> Result<Box<dyn UnitarityRule>> {
    Ok(match family.validate()? {
        Family::SoEven(_) | Family::SoOdd(_) => Box::new(SoRule::new(family)?),
        Family::E6 => Box::new(E6Rule::new()),
        Family::E7 => Box::new(E7Rule::new()),
    })
}

/// Looks up `name` and builds its rule; `n` is required for the so families.
pub fn rule(name: &str, n: Option<usize>) -> Result<Box<dyn UnitarityRule>> {
    let entry = lookup(name).ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    rule_for(entry.family(n)?)
}
