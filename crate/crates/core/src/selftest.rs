//! Consistency suites run by `tsg selftest`: catalog regression plus the
//! structural properties every enumeration must satisfy.

use crate::catalog::{self, NameStyle, TableFormat};
use crate::classify::enumerate;
use crate::error::Result;
use crate::group::{parse_group, GroupDescriptor, GroupList};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    /// First counterexample found, if any.
    pub failure: Option<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn suite(name: &'static str, body: impl FnOnce() -> Result<Option<String>>) -> SuiteOutcome {
    let failure = match body() {
        Ok(f) => f,
        Err(e) => Some(format!("error: {e}")),
    };
    SuiteOutcome { name, failure }
}

fn first_failure<I, F>(items: I, mut check: F) -> Result<Option<String>>
where
    I: IntoIterator<Item = u64>,
    F: FnMut(u64, &GroupList) -> Option<String>,
{
    for n in items {
        let list = enumerate(n, false)?;
        if let Some(msg) = check(n, &list) {
            return Ok(Some(format!("K{n}: {msg}")));
        }
    }
    Ok(None)
}

/// Catalog rows with `n > 6` must match the classifier exactly.
pub fn catalog_regression() -> Result<Option<String>> {
    for n in catalog::catalog_ns().into_iter().filter(|n| *n > 6) {
        let diff = catalog::verify_against_catalog(n)?;
        if !diff.is_empty() {
            return Ok(Some(format!(
                "K{n}: missing {:?}, extra {:?}",
                diff.missing, diff.extra
            )));
        }
    }
    Ok(None)
}

/// Everything enumerated is polyhedral, cyclic, dihedral, or one of the
/// product families, and anything outside the `D_m x D_m` subgroup list is
/// polyhedral or a cyclic/dihedral group with `4 | m`.
pub fn universe(max_n: u64) -> Result<Option<String>> {
    first_failure(7..=max_n, |_, list| {
        list.iter()
            .find(|g| match **g {
                GroupDescriptor::Trivial => true,
                GroupDescriptor::Polyhedral(_) => false,
                GroupDescriptor::Cyclic(m) | GroupDescriptor::Dihedral(m) => {
                    !g.in_dmdm_universe() && m % 4 != 0
                }
                _ => !g.in_dmdm_universe(),
            })
            .map(|g| format!("{g} outside the universe"))
    })
}

pub fn no_d2(max_n: u64) -> Result<Option<String>> {
    first_failure((7..=max_n).filter(|n| n % 4 == 3), |_, list| {
        list.contains(&GroupDescriptor::Dihedral(2)).then(|| "D2 listed".to_string())
    })
}

pub fn ubiquity(max_n: u64) -> Result<Option<String>> {
    use GroupDescriptor::*;
    first_failure(7..=max_n, |_, list| {
        [Cyclic(2), Cyclic(3), Dihedral(3)]
            .into_iter()
            .find(|g| !list.contains(g))
            .map(|g| format!("{g} missing"))
    })
}

/// `D_m` listed implies `Z_m` and every `D_d` with `d | m`, `d >= 3`.
pub fn divisor_closure(max_n: u64) -> Result<Option<String>> {
    use GroupDescriptor::*;
    first_failure(7..=max_n, |_, list| {
        for g in list {
            let Dihedral(m) = *g else { continue };
            if !list.contains(&Cyclic(m)) {
                return Some(format!("D{m} without Z{m}"));
            }
            if let Some(d) = (3..=m).find(|d| m % d == 0 && !list.contains(&Dihedral(*d))) {
                return Some(format!("D{m} without D{d}"));
            }
        }
        None
    })
}

/// Subgroup consequences among the product families.
pub fn product_closure(max_n: u64) -> Result<Option<String>> {
    use GroupDescriptor::*;
    first_failure(7..=max_n, |_, list| {
        for g in list {
            let needed = match *g {
                DxD(r, s) => vec![ZxD(r, s), ZxD(s, r)],
                ZxZSemiZ2(r, s) => vec![ZxZ(r, s)],
                ZxD(r, s) => match ZxZ(r, s).canonicalize() {
                    Ok(c) => vec![c],
                    Err(e) => return Some(e.to_string()),
                },
                _ => continue,
            };
            if let Some(h) = needed.into_iter().find(|h| !list.contains(h)) {
                return Some(format!("{g} without {h}"));
            }
        }
        None
    })
}

/// The two parity lemmas at their first three witnesses each.
pub fn parity_lemmas() -> Result<Option<String>> {
    use GroupDescriptor::*;
    for n in [15, 33, 51] {
        let list = enumerate(n, false)?;
        if !list.contains(&ZxZ(3, 3)) || list.contains(&ZxZSemiZ2(3, 3)) {
            return Ok(Some(format!("K{n}: Z3xZ3 / (Z3xZ3):Z2 pattern broken")));
        }
    }
    for n in [24, 60, 96] {
        let list = enumerate(n, false)?;
        if !list.contains(&ZxD(3, 3)) || list.contains(&DxD(3, 3)) {
            return Ok(Some(format!("K{n}: Z3xD3 / D3xD3 pattern broken")));
        }
    }
    Ok(None)
}

pub fn determinism(max_n: u64) -> Result<Option<String>> {
    for n in 2..=max_n {
        if enumerate(n, false)? != enumerate(n, false)? {
            return Ok(Some(format!("K{n}: enumerations differ")));
        }
    }
    for format in [TableFormat::Markdown, TableFormat::Csv, TableFormat::Json] {
        let a = catalog::emit_table(2, 40, format, NameStyle::Ascii)?;
        let b = catalog::emit_table(2, 40, format, NameStyle::Ascii)?;
        if a != b {
            return Ok(Some(format!("{format:?} table output differs between runs")));
        }
    }
    Ok(None)
}

pub fn round_trip(max_n: u64) -> Result<Option<String>> {
    first_failure(2..=max_n, |_, list| {
        list.iter().find_map(|g| match parse_group(&g.to_string()) {
            Ok(back) if back == *g => None,
            Ok(back) => Some(format!("{g} reparsed as {back}")),
            Err(e) => Some(format!("{g} failed to reparse: {e}")),
        })
    })
}

/// Runs every suite over `7 <= n <= max_n` (No-D2 up to `max(max_n, 1000)`).
pub fn run_all(max_n: u64) -> Vec<SuiteOutcome> {
    vec![
        suite("catalog regression", catalog_regression),
        suite("universe membership", || universe(max_n)),
        suite("no D2 for n = 3 mod 4", || no_d2(max_n.max(1000))),
        suite("Z2/Z3/D3 ubiquity", || ubiquity(max_n)),
        suite("divisor closure", || divisor_closure(max_n)),
        suite("product closure", || product_closure(max_n)),
        suite("parity lemmas", parity_lemmas),
        suite("determinism", || determinism(max_n)),
        suite("parse/display round trip", || round_trip(max_n)),
    ]
}
