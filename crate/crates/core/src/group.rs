//! Symbolic finite groups: cyclic, dihedral, the three polyhedral rotation
//! groups, and the product families that occur as subgroups of `D_m x D_m`
//! for odd `m`.
//!
//! Every descriptor has a canonical form, the unique representative of its
//! isomorphism class inside this universe. All public classification entry
//! points canonicalize their input first.

use std::fmt;

use serde::Serialize;

use crate::arith::{checked_lcm, gcd};
use crate::error::{Error, Result};

/// Largest parameter a canonical descriptor may carry. Keeps every group
/// order representable in a `u128`.
pub const MAX_PARAM: u64 = i64::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Polyhedral {
    A4,
    S4,
    A5,
}

impl Polyhedral {
    pub const ALL: [Polyhedral; 3] = [Polyhedral::A4, Polyhedral::S4, Polyhedral::A5];

    pub fn pretty(self) -> &'static str {
        match self {
            Polyhedral::A4 => "A₄",
            Polyhedral::S4 => "S₄",
            Polyhedral::A5 => "A₅",
        }
    }

    pub fn order(self) -> u128 {
        match self {
            Polyhedral::A4 => 12,
            Polyhedral::S4 => 24,
            Polyhedral::A5 => 60,
        }
    }
}

/// A finite group named by family and parameters.
///
/// The variant order is the listing order used for enumeration output:
/// polyhedral groups first, then cyclic and dihedral groups by `m`, then the
/// four product families by `(r, s)`. `Trivial` sorts before everything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupDescriptor {
    Trivial,
    Polyhedral(Polyhedral),
    Cyclic(u64),
    Dihedral(u64),
    /// `Z_r x Z_s`.
    ZxZ(u64, u64),
    /// `(Z_r x Z_s) : Z_2`, the involution inverting both cyclic factors.
    ZxZSemiZ2(u64, u64),
    /// `Z_r x D_s`.
    ZxD(u64, u64),
    /// `D_r x D_s`.
    DxD(u64, u64),
}

/// Coarse family tag, used for table columns and JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Trivial,
    Polyhedral,
    Cyclic,
    Dihedral,
    Zxz,
    ZxzSemiZ2,
    Zxd,
    Dxd,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Trivial => "trivial",
            Family::Polyhedral => "polyhedral",
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Zxz => "zxz",
            Family::ZxzSemiZ2 => "zxz_semi_z2",
            Family::Zxd => "zxd",
            Family::Dxd => "dxd",
        }
    }
}

fn check_param(value: u64, what: &str) -> Result<u64> {
    if value > MAX_PARAM {
        Err(Error::Overflow(format!("{what} = {value} exceeds {MAX_PARAM}")))
    } else {
        Ok(value)
    }
}

fn require_odd(g: &GroupDescriptor, r: u64, s: u64) -> Result<()> {
    if r == 0 || s == 0 {
        return Err(Error::ZeroParameter);
    }
    if r % 2 == 0 || s % 2 == 0 {
        return Err(Error::OutOfUniverse(format!(
            "{} needs odd parameters, got ({r}, {s})",
            g.family().as_str()
        )));
    }
    Ok(())
}

fn product(r: u64, s: u64) -> Result<u64> {
    r.checked_mul(s)
        .filter(|v| *v <= MAX_PARAM)
        .ok_or_else(|| Error::Overflow(format!("{r} * {s}")))
}

impl GroupDescriptor {
    pub fn family(&self) -> Family {
        match self {
            GroupDescriptor::Trivial => Family::Trivial,
            GroupDescriptor::Polyhedral(_) => Family::Polyhedral,
            GroupDescriptor::Cyclic(_) => Family::Cyclic,
            GroupDescriptor::Dihedral(_) => Family::Dihedral,
            GroupDescriptor::ZxZ(..) => Family::Zxz,
            GroupDescriptor::ZxZSemiZ2(..) => Family::ZxzSemiZ2,
            GroupDescriptor::ZxD(..) => Family::Zxd,
            GroupDescriptor::DxD(..) => Family::Dxd,
        }
    }

    /// True for the four product families.
    pub fn is_product(&self) -> bool {
        matches!(
            self,
            GroupDescriptor::ZxZ(..)
                | GroupDescriptor::ZxZSemiZ2(..)
                | GroupDescriptor::ZxD(..)
                | GroupDescriptor::DxD(..)
        )
    }

    /// Returns the canonical representative of this descriptor's isomorphism
    /// class. Idempotent.
    ///
    /// Rewrites applied:
    /// - `Z_1` is trivial and `D_1` is `Z_2`;
    /// - `Z_r x Z_s` becomes `Z_gcd x Z_lcm`, or `Z_rs` when `gcd(r, s) = 1`;
    /// - `(Z_r x Z_s) : Z_2` likewise, collapsing to `D_rs` when coprime;
    /// - a factor `Z_1` or `D_1` in `Z_r x D_s` / `D_r x D_s` is absorbed
    ///   (`D_1 x D_s = Z_2 x D_s = D_2s` for odd `s`);
    /// - `D_r x D_s` is ordered so that `r <= s`.
    pub fn canonicalize(&self) -> Result<GroupDescriptor> {
        use GroupDescriptor::*;
        let g = *self;
        let out = match g {
            Trivial | Polyhedral(_) => g,
            Cyclic(0) | Dihedral(0) => return Err(Error::ZeroParameter),
            Cyclic(1) => Trivial,
            Cyclic(m) => Cyclic(check_param(m, "m")?),
            Dihedral(1) => Cyclic(2),
            Dihedral(m) => Dihedral(check_param(m, "m")?),
            ZxZ(r, s) | ZxZSemiZ2(r, s) => {
                require_odd(&g, r, s)?;
                let d = gcd(r, s);
                let l = checked_lcm(r, s)
                    .filter(|v| *v <= MAX_PARAM)
                    .ok_or_else(|| Error::Overflow(format!("lcm({r}, {s})")))?;
                match (g, d) {
                    (ZxZ(..), 1) => Cyclic(l).canonicalize()?,
                    (_, 1) => Dihedral(l).canonicalize()?,
                    (ZxZ(..), _) => ZxZ(d, l),
                    _ => ZxZSemiZ2(d, l),
                }
            }
            ZxD(r, s) => {
                require_odd(&g, r, s)?;
                match (r, s) {
                    (1, _) => Dihedral(s).canonicalize()?,
                    (_, 1) => Cyclic(product(2, r)?).canonicalize()?,
                    _ => ZxD(check_param(r, "r")?, check_param(s, "s")?),
                }
            }
            DxD(r, s) => {
                require_odd(&g, r, s)?;
                let (r, s) = (r.min(s), r.max(s));
                match r {
                    1 => Dihedral(product(2, s)?).canonicalize()?,
                    _ => DxD(r, check_param(s, "s")?),
                }
            }
        };
        Ok(out)
    }

    /// True when `canonicalize` would return `self` unchanged.
    pub fn is_canonical(&self) -> bool {
        self.canonicalize().map(|c| c == *self).unwrap_or(false)
    }

    /// Group cardinality.
    pub fn order(&self) -> u128 {
        use GroupDescriptor::*;
        let w = u128::from;
        match *self {
            Trivial => 1,
            Polyhedral(p) => p.order(),
            Cyclic(m) => w(m),
            Dihedral(m) => 2 * w(m),
            ZxZ(r, s) => w(r) * w(s),
            ZxZSemiZ2(r, s) | ZxD(r, s) => 2 * w(r) * w(s),
            DxD(r, s) => 4 * w(r) * w(s),
        }
    }

    /// Membership in the list of isomorphism types of subgroups of
    /// `D_m x D_m` for some odd `m`: `Z_2, Z_r, Z_2r, D_2, D_r, D_2r` and the
    /// four product families with `r, s` odd and at least 3. Cyclic and
    /// dihedral orders divisible by 4 (other than `D_2`) fall outside.
    pub fn in_dmdm_universe(&self) -> bool {
        use GroupDescriptor::*;
        match *self {
            Trivial => true,
            Polyhedral(_) => false,
            Cyclic(m) => m % 4 != 0,
            Dihedral(m) => m == 2 || m % 4 != 0,
            ZxZ(..) | ZxZSemiZ2(..) | ZxD(..) | DxD(..) => true,
        }
    }

    /// Table-style Unicode rendering, e.g. `(ℤ₃ × ℤ₃) ⋊ ℤ₂`.
    pub fn pretty(&self) -> String {
        use GroupDescriptor::*;
        let z = |m: u64| format!("ℤ{}", subscript(m));
        let d = |m: u64| format!("D{}", subscript(m));
        match *self {
            Trivial => z(1),
            Polyhedral(p) => p.pretty().to_string(),
            Cyclic(m) => z(m),
            Dihedral(m) => d(m),
            ZxZ(r, s) => format!("{} × {}", z(r), z(s)),
            ZxZSemiZ2(r, s) => format!("({} × {}) ⋊ {}", z(r), z(s), z(2)),
            ZxD(r, s) => format!("{} × {}", z(r), d(s)),
            DxD(r, s) => format!("{} × {}", d(r), d(s)),
        }
    }
}

fn subscript(m: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    m.to_string()
        .bytes()
        .map(|b| DIGITS[usize::from(b - b'0')])
        .collect()
}

/// ASCII name in the group grammar; the inverse of [`parse_group`] on
/// canonical descriptors. The trivial group prints as `Z1`.
impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupDescriptor::*;
        match *self {
            Trivial => write!(f, "Z1"),
            Polyhedral(p) => write!(f, "{p:?}"),
            Cyclic(m) => write!(f, "Z{m}"),
            Dihedral(m) => write!(f, "D{m}"),
            ZxZ(r, s) => write!(f, "Z{r}xZ{s}"),
            ZxZSemiZ2(r, s) => write!(f, "(Z{r}xZ{s}):Z2"),
            ZxD(r, s) => write!(f, "Z{r}xD{s}"),
            DxD(r, s) => write!(f, "D{r}xD{s}"),
        }
    }
}

impl std::str::FromStr for GroupDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group(s)
    }
}

pub fn canonicalize(g: &GroupDescriptor) -> Result<GroupDescriptor> {
    g.canonicalize()
}

pub fn group_order(g: &GroupDescriptor) -> u128 {
    g.order()
}

pub fn display_name(g: &GroupDescriptor) -> String {
    g.to_string()
}

pub fn in_dmdm_universe(g: &GroupDescriptor) -> bool {
    g.in_dmdm_universe()
}

/// Parses a group name and returns its canonical descriptor.
///
/// Accepted forms (family letters case-insensitive, blanks between tokens
/// ignored): `Z<int>`, `D<int>`, `A4`, `S4`, `A5`, `Z<int>xZ<int>`,
/// `(Z<int>xZ<int>):Z2`, `Z<int>xD<int>`, `D<int>xD<int>`. `D<int>xZ<int>`
/// is read as the commuted `Z x D` product.
pub fn parse_group(text: &str) -> Result<GroupDescriptor> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let g = p.group()?;
    p.skip_blanks();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    g.canonicalize()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Factor {
    Z(u64),
    D(u64),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_blanks(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_blanks();
        self.src.get(self.pos).map(u8::to_ascii_uppercase)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c.to_ascii_uppercase()) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_blanks();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("integer {digits} is too large"),
        })
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                Ok(Factor::Z(self.int()?))
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(Factor::D(self.int()?))
            }
            _ => Err(self.error("expected 'Z' or 'D'")),
        }
    }

    fn group(&mut self) -> Result<GroupDescriptor> {
        use GroupDescriptor as G;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let left = self.factor()?;
                self.expect(b'x')?;
                let right = self.factor()?;
                self.expect(b')')?;
                self.expect(b':')?;
                let at = self.pos;
                let tail = self.factor()?;
                match (left, right, tail) {
                    (Factor::Z(r), Factor::Z(s), Factor::Z(2)) => Ok(G::ZxZSemiZ2(r, s)),
                    (_, _, Factor::Z(2)) => Err(Error::Syntax {
                        pos: 1,
                        msg: "semidirect product needs Z<int>xZ<int> inside the parentheses"
                            .into(),
                    }),
                    _ => Err(Error::Syntax { pos: at, msg: "expected Z2 after ':'".into() }),
                }
            }
            Some(letter @ (b'A' | b'S')) => {
                let at = self.pos;
                self.pos += 1;
                let k = self.int()?;
                match (letter, k) {
                    (b'A', 4) => Ok(G::Polyhedral(Polyhedral::A4)),
                    (b'S', 4) => Ok(G::Polyhedral(Polyhedral::S4)),
                    (b'A', 5) => Ok(G::Polyhedral(Polyhedral::A5)),
                    _ => Err(Error::OutOfUniverse(format!(
                        "{}{k} at position {at} is not a polyhedral rotation group",
                        letter as char
                    ))),
                }
            }
            _ => {
                let first = self.factor()?;
                if self.peek() != Some(b'X') {
                    return Ok(match first {
                        Factor::Z(m) => G::Cyclic(m),
                        Factor::D(m) => G::Dihedral(m),
                    });
                }
                self.pos += 1;
                let second = self.factor()?;
                Ok(match (first, second) {
                    (Factor::Z(r), Factor::Z(s)) => G::ZxZ(r, s),
                    (Factor::Z(r), Factor::D(s)) | (Factor::D(s), Factor::Z(r)) => G::ZxD(r, s),
                    (Factor::D(r), Factor::D(s)) => G::DxD(r, s),
                })
            }
        }
    }
}

/// A sorted, duplicate-free list of canonical groups for one `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupList {
    pub n: u64,
    groups: Vec<GroupDescriptor>,
}

impl GroupList {
    /// Canonicalizes, sorts and deduplicates.
    pub fn new(n: u64, groups: impl IntoIterator<Item = GroupDescriptor>) -> Result<Self> {
        let mut groups = groups
            .into_iter()
            .map(|g| g.canonicalize())
            .collect::<Result<Vec<_>>>()?;
        groups.sort_unstable();
        groups.dedup();
        Ok(GroupList { n, groups })
    }

    pub fn groups(&self) -> &[GroupDescriptor] {
        &self.groups
    }

    pub fn contains(&self, g: &GroupDescriptor) -> bool {
        self.groups.binary_search(g).is_ok()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupDescriptor> {
        self.groups.iter()
    }
}

impl<'a> IntoIterator for &'a GroupList {
    type Item = &'a GroupDescriptor;
    type IntoIter = std::slice::Iter<'a, GroupDescriptor>;

    fn into_iter(self) -> Self::IntoIter {
        self.groups.iter()
    }
}
