//! Realizability of a group as the orientation-preserving topological
//! symmetry group of some embedding of `K_n` in `S^3`.
//!
//! For `n > 6` every question reduces to a congruence or divisibility test on
//! `n`. Smaller complete graphs are answered from the embedded catalog.
//!
//! Enumeration bound: a cyclic or dihedral group of order parameter `m > n`
//! can never qualify, because the residue clauses need `n mod m <= 3` while
//! `n mod m = n > 6`. The candidate generator goes further and only proposes
//! `m` dividing one of `n, n-1, n-2, n-3`, and product parameters with `rs`
//! dividing `n`, `n - 3` or `n / 2`, plus the fixed `(3, 3)` special cases.

use std::collections::BTreeSet;
use std::fmt;

use crate::arith::{divides, divisors, odd_divisors_from_3};
use crate::catalog;
use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupList, Polyhedral};

/// The result that decided a classification question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Cyclic and dihedral groups, parts 1-4.
    CyclicDihedral,
    /// `Z_r x Z_s` and `(Z_r x Z_s) : Z_2`, parts 1-4.
    ZxZ,
    /// `Z_r x D_s` and `D_r x D_s`, parts 1-3.
    ProductDihedral,
    A4Thm,
    S4Thm,
    A5Thm,
    /// `D_2` is never realized for `n = 4k + 3`.
    NoD2Lemma,
    /// `9 | (n - 6)` forces `18 | (n - 6)` for `(Z_3 x Z_3) : Z_2`.
    Lemma4_1,
    /// `18 | (n - 6)` forces `36 | (n - 6)` for `D_3 x D_3`.
    Lemma5_5,
    /// Every subgroup of a realized group is realized, including the trivial one.
    SubgroupLemma,
    Catalog,
}

impl Theorem {
    fn max_part(self) -> u8 {
        match self {
            Theorem::CyclicDihedral | Theorem::ZxZ => 4,
            Theorem::ProductDihedral => 3,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ClauseRef {
    pub theorem: Theorem,
    pub part: Option<u8>,
}

impl ClauseRef {
    pub fn new(theorem: Theorem, part: Option<u8>) -> Self {
        if let Some(p) = part {
            debug_assert!((1..=theorem.max_part()).contains(&p), "{theorem:?} has no part {p}");
        }
        ClauseRef { theorem, part }
    }

    pub fn whole(theorem: Theorem) -> Self {
        ClauseRef::new(theorem, None)
    }

    pub fn part(theorem: Theorem, part: u8) -> Self {
        ClauseRef::new(theorem, Some(part))
    }

    /// Longer label for human-readable output, e.g. `Lemma 4.1`.
    pub fn describe(&self) -> String {
        let base = match self.theorem {
            Theorem::CyclicDihedral => "Theorem 1",
            Theorem::ZxZ => "Theorem 2",
            Theorem::ProductDihedral => "Theorem 3",
            Theorem::A4Thm => "A4 Theorem",
            Theorem::S4Thm => "S4 Theorem",
            Theorem::A5Thm => "A5 Theorem",
            Theorem::NoD2Lemma => "No-D2 Lemma",
            Theorem::Lemma4_1 => "Lemma 4.1",
            Theorem::Lemma5_5 => "Lemma 5.5",
            Theorem::SubgroupLemma => "Subgroup Lemma",
            Theorem::Catalog => "catalog",
        };
        match self.part {
            Some(p) => format!("{base} part ({p})"),
            None => base.to_string(),
        }
    }
}

/// Compact tag used in JSON output: `Thm1(2)`, `NoD2`, `Catalog`, ...
impl fmt::Display for ClauseRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.theorem {
            Theorem::CyclicDihedral => "Thm1",
            Theorem::ZxZ => "Thm2",
            Theorem::ProductDihedral => "Thm3",
            Theorem::A4Thm => "A4Thm",
            Theorem::S4Thm => "S4Thm",
            Theorem::A5Thm => "A5Thm",
            Theorem::NoD2Lemma => "NoD2",
            Theorem::Lemma4_1 => "Lemma4.1",
            Theorem::Lemma5_5 => "Lemma5.5",
            Theorem::SubgroupLemma => "SubgroupLemma",
            Theorem::Catalog => "Catalog",
        };
        match self.part {
            Some(p) => write!(f, "{base}({p})"),
            None => f.write_str(base),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub n: u64,
    pub group: GroupDescriptor,
    pub realizable: bool,
    pub clause: ClauseRef,
    pub note: String,
}

impl ClassificationResult {
    fn new(n: u64, group: GroupDescriptor, realizable: bool, clause: ClauseRef, note: String) -> Self {
        ClassificationResult { n, group, realizable, clause, note }
    }

    /// One-line verdict, e.g. `not realizable (Lemma 4.1: 9 | 9 but 18 ∤ 9)`.
    pub fn verdict(&self) -> String {
        let word = if self.realizable { "realizable" } else { "not realizable" };
        if self.note.is_empty() {
            format!("{word} ({})", self.clause.describe())
        } else {
            format!("{word} ({}: {})", self.clause.describe(), self.note)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Cyclic,
    Dihedral,
}

fn divides_note(d: u128, n: u64) -> String {
    if divides(d, n) {
        format!("{d} | {n}")
    } else {
        format!("{d} ∤ {n}")
    }
}

fn require_large(n: u64) -> Result<()> {
    if n <= 6 {
        Err(Error::Domain(format!(
            "the realizability clauses need n > 6 (got {n}); use the catalog for small n"
        )))
    } else {
        Ok(())
    }
}

/// Polyhedral rotation groups, by residue of `n`.
pub fn check_polyhedral(n: u64, kind: Polyhedral) -> Result<ClassificationResult> {
    if n < 4 {
        return Err(Error::Domain(format!("polyhedral clauses need n >= 4 (got {n})")));
    }
    let (modulus, residues, theorem): (u64, &[u64], _) = match kind {
        Polyhedral::A4 => (12, &[0, 1, 4, 5, 8], Theorem::A4Thm),
        Polyhedral::S4 => (24, &[0, 4, 8, 12, 20], Theorem::S4Thm),
        Polyhedral::A5 => (60, &[0, 1, 5, 20], Theorem::A5Thm),
    };
    let res = n % modulus;
    Ok(ClassificationResult::new(
        n,
        GroupDescriptor::Polyhedral(kind),
        residues.contains(&res),
        ClauseRef::whole(theorem),
        format!("n ≡ {res} (mod {modulus})"),
    ))
}

/// `Z_m` or `D_m` on `K_n`, `n > 6`.
pub fn check_cyclic_dihedral(n: u64, m: u64, kind: Kind) -> Result<ClassificationResult> {
    require_large(n)?;
    if m < 2 {
        return Err(Error::Domain(format!("m must be at least 2 (got {m})")));
    }
    let group = match kind {
        Kind::Cyclic => GroupDescriptor::Cyclic(m),
        Kind::Dihedral => GroupDescriptor::Dihedral(m),
    }
    .canonicalize()?;
    let fail = |note| {
        Ok(ClassificationResult::new(n, group, false, ClauseRef::whole(Theorem::CyclicDihedral), note))
    };
    let hit = |part, note| {
        Ok(ClassificationResult::new(n, group, true, ClauseRef::part(Theorem::CyclicDihedral, part), note))
    };

    if m == 2 {
        return match kind {
            Kind::Cyclic => hit(4, "Z2 is realized for every n > 6".into()),
            Kind::Dihedral if n % 4 == 3 => Ok(ClassificationResult::new(
                n,
                group,
                false,
                ClauseRef::whole(Theorem::NoD2Lemma),
                "n ≡ 3 (mod 4)".into(),
            )),
            Kind::Dihedral => hit(3, format!("n ≡ {} (mod 4)", n % 4)),
        };
    }
    if m % 2 == 0 {
        let note = divides_note(u128::from(m), n);
        if n % m == 0 { hit(1, note) } else { fail(note) }
    } else {
        let res = n % m;
        let note = format!("n ≡ {res} (mod {m})");
        if res <= 3 { hit(2, note) } else { fail(note) }
    }
}

fn require_canonical(g: &GroupDescriptor) -> Result<()> {
    if g.is_canonical() {
        Ok(())
    } else {
        Err(Error::Contract(format!("{g:?} is not in canonical form")))
    }
}

/// `Z_r x Z_s` and `(Z_r x Z_s) : Z_2` with `gcd(r, s) > 1`, on `K_n`, `n > 6`.
pub fn check_zxz(n: u64, g: &GroupDescriptor) -> Result<ClassificationResult> {
    require_large(n)?;
    let (r, s, semi) = match *g {
        GroupDescriptor::ZxZ(r, s) => (r, s, false),
        GroupDescriptor::ZxZSemiZ2(r, s) => (r, s, true),
        _ => return Err(Error::Contract(format!("{g} is not a Z_r x Z_s family group"))),
    };
    require_canonical(g)?;
    // canonical: r = gcd(r, s) >= 3
    let rs = u128::from(r) * u128::from(s);
    let is_33 = r == 3 && s == 3;
    let hit = |part, note| Ok(ClassificationResult::new(n, *g, true, ClauseRef::part(Theorem::ZxZ, part), note));

    if divides(rs, n) {
        return hit(1, divides_note(rs, n));
    }
    if r == 3 && divides(rs, n - 3) {
        return hit(2, format!("gcd(r,s) = 3 and {}", divides_note(rs, n - 3)));
    }
    if is_33 && !semi && divides(9, n - 6) {
        return hit(3, divides_note(9, n - 6));
    }
    if is_33 && semi && divides(18, n - 6) {
        return hit(4, divides_note(18, n - 6));
    }
    if is_33 && semi && divides(9, n - 6) {
        return Ok(ClassificationResult::new(
            n,
            *g,
            false,
            ClauseRef::whole(Theorem::Lemma4_1),
            format!("9 | {k} but 18 ∤ {k}", k = n - 6),
        ));
    }
    let mut reasons = vec![divides_note(rs, n)];
    if r == 3 {
        reasons.push(divides_note(rs, n - 3));
    } else {
        reasons.push(format!("gcd(r,s) = {r} ≠ 3"));
    }
    if is_33 {
        reasons.push(divides_note(if semi { 18 } else { 9 }, n - 6));
    }
    Ok(ClassificationResult::new(n, *g, false, ClauseRef::whole(Theorem::ZxZ), reasons.join(", ")))
}

/// `Z_r x D_s` and `D_r x D_s`, on `K_n`, `n > 6`.
pub fn check_product_dihedral(n: u64, g: &GroupDescriptor) -> Result<ClassificationResult> {
    require_large(n)?;
    let (r, s, dd) = match *g {
        GroupDescriptor::ZxD(r, s) => (r, s, false),
        GroupDescriptor::DxD(r, s) => (r, s, true),
        _ => return Err(Error::Contract(format!("{g} is not a Z_r x D_s or D_r x D_s group"))),
    };
    require_canonical(g)?;
    let twice_rs = 2 * u128::from(r) * u128::from(s);
    let is_33 = r == 3 && s == 3;
    let hit = |part, note| {
        Ok(ClassificationResult::new(n, *g, true, ClauseRef::part(Theorem::ProductDihedral, part), note))
    };

    if divides(twice_rs, n) {
        return hit(1, divides_note(twice_rs, n));
    }
    if is_33 && !dd && divides(18, n - 6) {
        return hit(2, divides_note(18, n - 6));
    }
    if is_33 && dd && divides(36, n - 6) {
        return hit(3, divides_note(36, n - 6));
    }
    if is_33 && dd && divides(18, n - 6) {
        return Ok(ClassificationResult::new(
            n,
            *g,
            false,
            ClauseRef::whole(Theorem::Lemma5_5),
            format!("18 | {k} but 36 ∤ {k}", k = n - 6),
        ));
    }
    let mut reasons = vec![divides_note(twice_rs, n)];
    if is_33 {
        reasons.push(divides_note(if dd { 36 } else { 18 }, n - 6));
    }
    Ok(ClassificationResult::new(
        n,
        *g,
        false,
        ClauseRef::whole(Theorem::ProductDihedral),
        reasons.join(", "),
    ))
}

/// Decides whether `g` (any well-formed descriptor) is realizable on `K_n`.
///
/// Product descriptors with coprime parameters are collapsed to their cyclic
/// or dihedral canonical form first; the note records the collapse.
pub fn check(n: u64, g: &GroupDescriptor) -> Result<ClassificationResult> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2 (got {n})")));
    }
    let canon = g.canonicalize()?;
    let collapse = (g.is_product() && canon.family() != g.family())
        .then(|| format!("{g} ≅ {canon}"));

    let mut result = if n <= 6 {
        let entry = catalog::known_groups(n)?;
        let listed = entry.groups.contains(&canon);
        ClassificationResult::new(
            n,
            canon,
            listed,
            ClauseRef::whole(Theorem::Catalog),
            format!("K{n} row {} {canon}", if listed { "lists" } else { "omits" }),
        )
    } else {
        match canon {
            GroupDescriptor::Trivial => ClassificationResult::new(
                n,
                canon,
                true,
                ClauseRef::whole(Theorem::SubgroupLemma),
                "trivial subgroup of any realized group".into(),
            ),
            GroupDescriptor::Polyhedral(kind) => check_polyhedral(n, kind)?,
            GroupDescriptor::Cyclic(m) => check_cyclic_dihedral(n, m, Kind::Cyclic)?,
            GroupDescriptor::Dihedral(m) => check_cyclic_dihedral(n, m, Kind::Dihedral)?,
            GroupDescriptor::ZxZ(..) | GroupDescriptor::ZxZSemiZ2(..) => check_zxz(n, &canon)?,
            GroupDescriptor::ZxD(..) | GroupDescriptor::DxD(..) => {
                check_product_dihedral(n, &canon)?
            }
        }
    };
    if let Some(c) = collapse {
        result.note = format!("{c}; {}", result.note);
    }
    Ok(result)
}

fn candidates(n: u64) -> BTreeSet<GroupDescriptor> {
    use GroupDescriptor::*;
    let mut out = BTreeSet::new();
    out.extend(crate::group::Polyhedral::ALL.map(GroupDescriptor::Polyhedral));

    // Z_m, D_m: m | n, or m odd with m | n - k for k = 1, 2, 3.
    let mut orders: BTreeSet<u64> = divisors(n).into_iter().filter(|m| *m >= 2).collect();
    for k in 1..=3 {
        orders.extend(odd_divisors_from_3(n - k));
    }
    orders.insert(2);
    for m in orders {
        out.insert(Cyclic(m));
        out.insert(Dihedral(m));
    }

    // Z_r x Z_s family with r | s: rs divides n, or n - 3 when r = 3.
    let mut zxz = |total: u64, only_r3: bool| {
        for rs in odd_divisors_from_3(total) {
            for r in odd_divisors_from_3(rs) {
                let s = rs / r;
                if r > s || only_r3 && r != 3 {
                    break;
                }
                if s % r == 0 {
                    out.insert(ZxZ(r, s));
                    out.insert(ZxZSemiZ2(r, s));
                }
            }
        }
    };
    zxz(n, false);
    zxz(n - 3, true);

    // Z_r x D_s, D_r x D_s: 2rs | n.
    if n % 2 == 0 {
        for rs in odd_divisors_from_3(n / 2) {
            for r in odd_divisors_from_3(rs) {
                let s = rs / r;
                if s >= 3 {
                    out.insert(ZxD(r, s));
                    out.insert(DxD(r.min(s), r.max(s)));
                }
            }
        }
    }

    out.extend([ZxZ(3, 3), ZxZSemiZ2(3, 3), ZxD(3, 3), DxD(3, 3)]);
    out
}

/// Every realizable group on `K_n`, sorted in listing order.
///
/// The trivial group is included only when `include_trivial` is set, and only
/// for `n > 6`; the catalog rows for `n <= 6` are returned verbatim.
pub fn enumerate(n: u64, include_trivial: bool) -> Result<GroupList> {
    if n < 2 {
        return Err(Error::Domain(format!("n must be at least 2 (got {n})")));
    }
    if n <= 6 {
        return Ok(catalog::known_groups(n)?.groups);
    }
    let mut found = Vec::new();
    for g in candidates(n) {
        if check(n, &g)?.realizable {
            found.push(g);
        }
    }
    if include_trivial {
        found.push(GroupDescriptor::Trivial);
    }
    GroupList::new(n, found)
}

/// Like [`enumerate`], paired with the clause that admitted each group.
pub fn enumerate_with_clauses(n: u64, include_trivial: bool) -> Result<Vec<ClassificationResult>> {
    enumerate(n, include_trivial)?
        .iter()
        .map(|g| check(n, g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::parse_group;
    use GroupDescriptor::*;
    use crate::group::Polyhedral as Poly;

    fn g(name: &str) -> GroupDescriptor {
        parse_group(name).unwrap()
    }

    #[test]
    fn polyhedral_examples() {
        assert!(check_polyhedral(20, Poly::A5).unwrap().realizable);
        assert!(check_polyhedral(13, Poly::A4).unwrap().realizable);
        let s4 = check_polyhedral(18, Poly::S4).unwrap();
        assert!(!s4.realizable);
        assert_eq!(s4.clause, ClauseRef::whole(Theorem::S4Thm));
        assert!(check_polyhedral(4, Poly::S4).unwrap().realizable);
        assert!(matches!(check_polyhedral(3, Poly::A4), Err(Error::Domain(_))));
    }

    #[test]
    fn cyclic_dihedral_examples() {
        let r = check_cyclic_dihedral(12, 4, Kind::Dihedral).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm1(1)");

        let r = check_cyclic_dihedral(7, 2, Kind::Dihedral).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.clause.to_string(), "NoD2");

        let r = check_cyclic_dihedral(10, 3, Kind::Cyclic).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm1(2)");

        let r = check_cyclic_dihedral(11, 9, Kind::Dihedral).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm1(2)");

        let r = check_cyclic_dihedral(19, 5, Kind::Cyclic).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.clause.to_string(), "Thm1");
        assert_eq!(r.note, "n ≡ 4 (mod 5)");

        assert_eq!(check_cyclic_dihedral(8, 2, Kind::Dihedral).unwrap().clause.to_string(), "Thm1(3)");
        assert_eq!(check_cyclic_dihedral(7, 2, Kind::Cyclic).unwrap().clause.to_string(), "Thm1(4)");
        assert!(!check_cyclic_dihedral(9, 6, Kind::Cyclic).unwrap().realizable);
    }

    #[test]
    fn cyclic_dihedral_domain_errors() {
        assert!(matches!(check_cyclic_dihedral(6, 3, Kind::Cyclic), Err(Error::Domain(_))));
        assert!(matches!(check_cyclic_dihedral(9, 1, Kind::Cyclic), Err(Error::Domain(_))));
    }

    #[test]
    fn zxz_examples() {
        let r = check_zxz(9, &ZxZSemiZ2(3, 3)).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm2(1)");

        let r = check_zxz(15, &ZxZSemiZ2(3, 3)).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.clause.to_string(), "Lemma4.1");
        assert_eq!(r.verdict(), "not realizable (Lemma 4.1: 9 | 9 but 18 ∤ 9)");

        let r = check_zxz(15, &ZxZ(3, 3)).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm2(3)");

        let r = check_zxz(24, &ZxZ(3, 9)).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.clause.to_string(), "Thm2");
        assert_eq!(r.note, "27 ∤ 24, 27 ∤ 21");

        assert_eq!(check_zxz(12, &ZxZ(3, 3)).unwrap().clause.to_string(), "Thm2(2)");
        assert_eq!(check_zxz(30, &ZxZ(3, 9)).unwrap().clause.to_string(), "Thm2(2)");
        // gcd 5: clause (2) does not apply even though 25 | (28 - 3).
        assert!(!check_zxz(28, &ZxZ(5, 5)).unwrap().realizable);
    }

    #[test]
    fn zxz_rejects_non_canonical() {
        assert!(matches!(check_zxz(15, &ZxZ(9, 3)), Err(Error::Contract(_))));
        assert!(matches!(check_zxz(15, &ZxZ(3, 5)), Err(Error::Contract(_))));
        assert!(matches!(check_zxz(15, &Cyclic(9)), Err(Error::Contract(_))));
    }

    #[test]
    fn product_dihedral_examples() {
        let r = check_product_dihedral(140, &ZxD(5, 7)).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause.to_string(), "Thm3(1)");

        let r = check_product_dihedral(18, &ZxD(3, 3)).unwrap();
        assert_eq!((r.realizable, r.clause.to_string()), (true, "Thm3(1)".to_string()));

        let r = check_product_dihedral(24, &DxD(3, 3)).unwrap();
        assert!(!r.realizable);
        assert_eq!(r.clause.to_string(), "Lemma5.5");

        let r = check_product_dihedral(24, &ZxD(3, 3)).unwrap();
        assert_eq!((r.realizable, r.clause.to_string()), (true, "Thm3(2)".to_string()));

        assert_eq!(check_product_dihedral(42, &DxD(3, 3)).unwrap().clause.to_string(), "Thm3(3)");
        assert!(matches!(check_product_dihedral(20, &DxD(5, 3)), Err(Error::Contract(_))));
    }

    #[test]
    fn dispatcher() {
        let r = check(6, &DxD(3, 3)).unwrap();
        assert!(r.realizable);
        assert_eq!(r.clause, ClauseRef::whole(Theorem::Catalog));

        assert!(!check(7, &ZxZ(3, 3)).unwrap().realizable);

        let r = check(140, &ZxZ(5, 7)).unwrap();
        assert_eq!(r.group, Cyclic(35));
        assert!(r.realizable);
        assert!(r.note.starts_with("Z5xZ7 ≅ Z35"));

        let r = check(9, &Trivial).unwrap();
        assert_eq!((r.realizable, r.clause.theorem), (true, Theorem::SubgroupLemma));
        assert!(!check(5, &Trivial).unwrap().realizable);
        assert!(matches!(check(1, &Cyclic(2)), Err(Error::Domain(_))));
        assert!(matches!(check(9, &ZxZ(2, 4)), Err(Error::OutOfUniverse(_))));
    }

    #[test]
    fn enumerate_examples() {
        let names = |n| -> Vec<String> {
            enumerate(n, false).unwrap().iter().map(ToString::to_string).collect()
        };
        assert_eq!(names(7), ["Z2", "Z3", "Z5", "Z7", "D3", "D5", "D7"]);
        assert_eq!(names(19), ["Z2", "Z3", "Z9", "Z17", "Z19", "D3", "D9", "D17", "D19"]);
        assert_eq!(enumerate(140, false).unwrap().len(), 38);
        assert!(enumerate(9, true).unwrap().contains(&Trivial));
        assert!(!enumerate(6, true).unwrap().contains(&Trivial));
        assert!(matches!(enumerate(1, false), Err(Error::Domain(_))));
    }

    #[test]
    fn clause_labels() {
        assert_eq!(ClauseRef::part(Theorem::ZxZ, 3).to_string(), "Thm2(3)");
        assert_eq!(ClauseRef::whole(Theorem::Catalog).to_string(), "Catalog");
        assert_eq!(ClauseRef::part(Theorem::CyclicDihedral, 2).describe(), "Theorem 1 part (2)");
        assert_eq!(check(20, &g("s4")).unwrap().clause.to_string(), "S4Thm");
    }
}
