//! Which automorphisms of `K_n` (`n > 6`) can be induced by a finite-order
//! orientation-preserving homeomorphism of `S^3` for some embedding.
//!
//! Realizability depends only on the conjugacy class of the automorphism,
//! i.e. its cycle type, together with the order `m` of the homeomorphism.

use std::fmt;
use std::str::FromStr;

use crate::arith::checked_lcm;
use crate::error::{Error, Result};

/// Non-trivial cycle lengths (descending) plus the number of fixed vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    cycles: Vec<u64>,
    fixed: u64,
}

impl CycleType {
    pub fn new(mut cycles: Vec<u64>, fixed: u64) -> Result<Self> {
        if let Some(bad) = cycles.iter().find(|c| **c < 2) {
            return Err(Error::Domain(format!("cycle length {bad} is below 2")));
        }
        cycles.iter().try_fold(fixed, |acc, c| acc.checked_add(*c)).ok_or_else(|| {
            Error::Overflow("vertex count does not fit in 64 bits".into())
        })?;
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { cycles, fixed })
    }

    pub fn identity(n: u64) -> Self {
        CycleType { cycles: Vec::new(), fixed: n }
    }

    /// Vertex count.
    pub fn n(&self) -> u64 {
        self.cycles.iter().sum::<u64>() + self.fixed
    }

    pub fn cycles(&self) -> &[u64] {
        &self.cycles
    }

    pub fn fixed(&self) -> u64 {
        self.fixed
    }

    /// Order of any permutation with this cycle type: lcm of the cycle
    /// lengths, 1 for the identity.
    pub fn order(&self) -> Result<u64> {
        self.cycles.iter().try_fold(1u64, |acc, c| {
            checked_lcm(acc, *c).ok_or_else(|| Error::Overflow("permutation order".into()))
        })
    }
}

/// `[9,3]+f0`: cycles 9 and 3, no fixed vertices.
impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.cycles.iter().map(u64::to_string).collect();
        write!(f, "[{}]+f{}", list.join(","), self.fixed)
    }
}

impl FromStr for CycleType {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let syntax = |pos: usize, msg: &str| Error::Syntax { pos, msg: msg.to_string() };
        let t = text.trim();
        let offset = text.len() - text.trim_start().len();
        let body = t.strip_prefix('[').ok_or_else(|| syntax(offset, "expected '['"))?;
        let close = body.find(']').ok_or_else(|| syntax(t.len() + offset, "expected ']'"))?;
        let (list, rest) = (&body[..close], &body[close + 1..]);
        let fixed_at = offset + close + 2;
        let fixed = rest
            .strip_prefix("+f")
            .ok_or_else(|| syntax(fixed_at, "expected '+f<count>'"))?
            .parse::<u64>()
            .map_err(|_| syntax(fixed_at + 2, "expected a fixed-vertex count"))?;
        let mut cycles = Vec::new();
        if !list.trim().is_empty() {
            let mut at = offset + 1;
            for item in list.split(',') {
                cycles.push(item.trim().parse::<u64>().map_err(|_| syntax(at, "expected a cycle length"))?);
                at += item.len() + 1;
            }
        }
        CycleType::new(cycles, fixed)
    }
}

/// Cycle type of a permutation of `{0, .., n-1}` given as its image list.
pub fn cycle_type_of(perm: &[usize]) -> Result<CycleType> {
    let n = perm.len();
    let mut hit = vec![false; n];
    for &image in perm {
        if image >= n {
            return Err(Error::NotBijective { image, reason: "is out of range" });
        }
        if std::mem::replace(&mut hit[image], true) {
            return Err(Error::NotBijective { image, reason: "appears more than once" });
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    let mut fixed = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = perm[v];
            len += 1;
        }
        if len == 1 {
            fixed += 1;
        } else {
            cycles.push(len);
        }
    }
    CycleType::new(cycles, fixed)
}

/// Parses a comma-separated image list such as `1,2,0,4,3,5`.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>> {
    let mut at = 0;
    text.split(',')
        .map(|item| {
            let pos = at;
            at += item.len() + 1;
            item.trim().parse::<usize>().map_err(|_| Error::Syntax {
                pos,
                msg: format!("expected a vertex index, got {:?}", item.trim()),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutoVerdict {
    pub realizable: bool,
    /// Matched case (1-4). `None` for the identity and for failures.
    pub part: Option<u8>,
}

impl fmt::Display for AutoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.realizable, self.part) {
            (true, Some(p)) => write!(f, "realizable, part ({p})"),
            (true, None) => write!(f, "realizable, identity"),
            (false, _) => write!(f, "not realizable"),
        }
    }
}

/// Decides whether an automorphism with cycle type `ct` can be induced by an
/// order-`m` orientation-preserving homeomorphism for some embedding of
/// `K_n`, `n > 6`. `m` must equal the order of the cycle type.
pub fn is_realizable(ct: &CycleType, m: u64) -> Result<AutoVerdict> {
    let n = ct.n();
    if n <= 6 {
        return Err(Error::Domain(format!("automorphism criteria need n > 6 (got {n})")));
    }
    let actual = ct.order()?;
    if actual != m {
        return Err(Error::OrderMismatch { claimed: m, actual });
    }
    if m == 1 {
        return Ok(AutoVerdict { realizable: true, part: None });
    }
    let part = if ct.cycles.iter().all(|c| *c == m) {
        match m {
            2 => (ct.fixed <= 2).then_some(2),
            _ if m % 2 == 0 => (ct.fixed == 0).then_some(1),
            _ => (ct.fixed <= 3).then_some(3),
        }
    } else {
        let threes = ct.cycles.iter().filter(|c| **c == 3).count();
        let rest_m = ct.cycles.iter().all(|c| *c == m || *c == 3);
        (m % 2 == 1 && m % 3 == 0 && m > 3 && threes == 1 && rest_m && ct.fixed == 0).then_some(4)
    };
    Ok(AutoVerdict { realizable: part.is_some(), part })
}

/// Every realizable cycle type of order `m` on `n > 6` vertices, sorted by
/// fixed-vertex count.
pub fn realizable_cycle_types(n: u64, m: u64) -> Result<Vec<CycleType>> {
    if n <= 6 {
        return Err(Error::Domain(format!("automorphism criteria need n > 6 (got {n})")));
    }
    if m < 2 {
        return Err(Error::Domain(format!("m must be at least 2 (got {m})")));
    }
    let repeat = |k: u64| vec![m; k as usize];
    let mut out = Vec::new();
    let max_fixed = match m {
        2 => 2,
        _ if m % 2 == 0 => 0,
        _ => 3,
    };
    for fixed in 0..=max_fixed.min(n) {
        let rest = n - fixed;
        if rest % m == 0 {
            out.push(CycleType::new(repeat(rest / m), fixed)?);
        }
    }
    if m % 2 == 1 && m % 3 == 0 && m > 3 && (n - 3) % m == 0 {
        let mut cycles = repeat((n - 3) / m);
        cycles.push(3);
        out.push(CycleType::new(cycles, 0)?);
    }
    out.sort_by(|a, b| a.fixed.cmp(&b.fixed).then_with(|| a.cycles.cmp(&b.cycles)));
    Ok(out)
}
