//! Independent oracles for the integration and acceptance suites. Nothing
//! here calls into the classifier or the automorphism solver.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tsg_core::GroupDescriptor;

// ---------------------------------------------------------------------------
// Cayley tables
// ---------------------------------------------------------------------------

/// A finite group as a full multiplication table on `0..len`.
pub struct Cayley {
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl Cayley {
    fn from_elements<T: Copy + PartialEq>(elems: &[T], identity: T, op: impl Fn(T, T) -> T) -> Self {
        let index = |x: T| elems.iter().position(|e| *e == x).expect("closed under product");
        let mul = elems
            .iter()
            .map(|a| elems.iter().map(|b| index(op(*a, *b))).collect())
            .collect();
        Cayley { mul, identity: index(identity) }
    }

    pub fn len(&self) -> usize {
        self.mul.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.op(acc, a))
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.len()).find(|b| self.op(a, *b) == self.identity).expect("inverse exists")
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Identity, inverses and associativity.
    pub fn is_group(&self) -> bool {
        let n = self.len();
        let ident = (0..n).all(|a| self.op(a, self.identity) == a && self.op(self.identity, a) == a);
        let inv = (0..n).all(|a| (0..n).any(|b| self.op(a, b) == self.identity));
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.op(self.op(a, b), c) == self.op(a, self.op(b, c))))
        });
        ident && inv && assoc
    }

    /// Checks that `f` (image of each element of `self`) is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &Cayley, f: &[usize]) -> bool {
        let n = self.len();
        if other.len() != n || f.iter().copied().collect::<BTreeSet<_>>().len() != n {
            return false;
        }
        (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == other.op(f[a], f[b])))
    }
}

/// `Z_k` as `i + j mod k`.
pub fn cyclic(k: usize) -> Cayley {
    let elems: Vec<usize> = (0..k).collect();
    Cayley::from_elements(&elems, 0, |a, b| (a + b) % k)
}

/// `D_k` in normal form `x^i y^j` with `y x = x^-1 y`.
pub fn dihedral(k: usize) -> Cayley {
    let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..k).map(move |i| (i, j))).collect();
    Cayley::from_elements(&elems, (0, 0), |(i1, j1), (i2, j2)| {
        let i = if j1 == 0 { i1 + i2 } else { i1 + k - i2 };
        (i % k, (j1 + j2) % 2)
    })
}

/// `<rho, sigma, phi>` with `rho^r = sigma^s = phi^2 = 1`, `rho sigma = sigma rho`,
/// `phi rho = rho^-1 phi`, `phi sigma = sigma^-1 phi`, in normal form
/// `rho^a sigma^b phi^e`. With `semi = false` the `phi` factor is dropped.
pub fn zxz_presentation(r: usize, s: usize, semi: bool) -> Cayley {
    let flips = if semi { 2 } else { 1 };
    let elems: Vec<(usize, usize, usize)> = (0..flips)
        .flat_map(|e| (0..s).flat_map(move |b| (0..r).map(move |a| (a, b, e))))
        .collect();
    Cayley::from_elements(&elems, (0, 0, 0), |(a1, b1, e1), (a2, b2, e2)| {
        // phi^e1 rho^a2 = rho^(+-a2) phi^e1, likewise for sigma.
        let (a2, b2) = if e1 == 1 { ((r - a2) % r, (s - b2) % s) } else { (a2, b2) };
        ((a1 + a2) % r, (b1 + b2) % s, (e1 + e2) % 2)
    })
}

/// Searches for generators `x` of order `k` and an involution `y` outside
/// `<x>` with `y x y = x^-1`, then verifies the induced map `D_k -> g` is an
/// isomorphism. Every isomorphism from `D_k` sends its standard generators
/// to such a pair, so a failed search proves non-isomorphism.
pub fn isomorphic_to_dihedral(g: &Cayley, k: usize) -> bool {
    if g.len() != 2 * k {
        return false;
    }
    let d = dihedral(k);
    for x in (0..g.len()).filter(|x| g.element_order(*x) == k) {
        let powers: Vec<usize> = (0..k).map(|i| g.pow(x, i)).collect();
        let x_inv = g.inverse(x);
        for y in 0..g.len() {
            if powers.contains(&y) || g.op(y, y) != g.identity || g.op(g.op(y, x), y) != x_inv {
                continue;
            }
            // D_k element (i, j) has index j * k + i in `dihedral`.
            let f: Vec<usize> = (0..2 * k)
                .map(|idx| {
                    let (i, j) = (idx % k, idx / k);
                    g.op(powers[i], if j == 1 { y } else { g.identity })
                })
                .collect();
            if d.is_isomorphism(g, &f) {
                return true;
            }
        }
    }
    false
}

/// Abelian of order `k` with an element of order `k`.
pub fn isomorphic_to_cyclic(g: &Cayley, k: usize) -> bool {
    g.len() == k && (0..g.len()).any(|x| g.element_order(x) == k)
}

// ---------------------------------------------------------------------------
// Integer partitions and the automorphism criteria
// ---------------------------------------------------------------------------

/// All partitions of `n`, parts in non-increasing order.
pub fn partitions(n: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn lcm_all(parts: &[u64]) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    parts.iter().fold(1, |acc, p| acc / gcd(acc, *p) * p)
}

/// Non-trivial cycles (descending) and fixed-point count of a partition.
pub fn split_partition(parts: &[u64]) -> (Vec<u64>, u64) {
    let cycles: Vec<u64> = parts.iter().copied().filter(|p| *p > 1).collect();
    let fixed = parts.iter().filter(|p| **p == 1).count() as u64;
    (cycles, fixed)
}

/// The four automorphism cases read directly off their wording, for `m >= 2`.
pub fn automorphism_case(cycles: &[u64], fixed: u64, m: u64) -> Option<u8> {
    let all_m = cycles.iter().all(|c| *c == m);
    let mut cases = Vec::new();
    if m > 2 && m % 2 == 0 && all_m && fixed == 0 {
        cases.push(1);
    }
    if m == 2 && all_m && fixed <= 2 {
        cases.push(2);
    }
    if m % 2 == 1 && all_m && fixed <= 3 {
        cases.push(3);
    }
    let threes = cycles.iter().filter(|c| **c == 3).count();
    let others_m = cycles.iter().filter(|c| **c != 3).all(|c| *c == m);
    if m % 2 == 1 && m % 3 == 0 && m > 3 && threes == 1 && others_m && fixed == 0 {
        cases.push(4);
    }
    assert!(cases.len() <= 1, "cases overlap for {cycles:?}+f{fixed}, m={m}");
    cases.first().copied()
}

// ---------------------------------------------------------------------------
// Realizability clauses and brute-force search space
// ---------------------------------------------------------------------------

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Realizability for `n > 6`, evaluated on raw (possibly non-canonical)
/// parameters straight from the clause wording.
pub fn clauses_hold(n: u64, g: &GroupDescriptor) -> bool {
    use tsg_core::Polyhedral as P;
    use GroupDescriptor::*;
    assert!(n > 6);
    let div = |d: u64, x: u64| x % d == 0;
    match *g {
        Trivial => true,
        Polyhedral(P::A4) => [0, 1, 4, 5, 8].contains(&(n % 12)),
        Polyhedral(P::S4) => [0, 4, 8, 12, 20].contains(&(n % 24)),
        Polyhedral(P::A5) => [0, 1, 5, 20].contains(&(n % 60)),
        Cyclic(m) | Dihedral(m) => {
            let is_d = matches!(g, Dihedral(_));
            (m >= 4 && m % 2 == 0 && div(m, n))
                || (m >= 3 && m % 2 == 1 && n % m <= 3)
                || (is_d && m == 2 && [0, 1, 2].contains(&(n % 4)))
                || (!is_d && m == 2)
        }
        ZxZ(r, s) | ZxZSemiZ2(r, s) => {
            let semi = matches!(g, ZxZSemiZ2(..));
            div(r * s, n)
                || (gcd(r, s) == 3 && div(r * s, n - 3))
                || (!semi && (r, s) == (3, 3) && div(9, n - 6))
                || (semi && (r, s) == (3, 3) && div(18, n - 6))
        }
        ZxD(r, s) | DxD(r, s) => {
            let dd = matches!(g, DxD(..));
            div(2 * r * s, n)
                || (!dd && (r, s) == (3, 3) && div(18, n - 6))
                || (dd && (r, s) == (3, 3) && div(36, n - 6))
        }
    }
}

/// Every candidate in the plain search space (`2 <= m <= n`; all odd
/// `r, s >= 3` with `rs <= n` or `2rs <= n`), filtered by [`clauses_hold`]
/// on raw parameters, then canonicalized.
pub fn brute_force_enumerate(n: u64) -> BTreeSet<GroupDescriptor> {
    use tsg_core::Polyhedral as P;
    use GroupDescriptor::*;
    let mut raw = vec![Polyhedral(P::A4), Polyhedral(P::S4), Polyhedral(P::A5)];
    for m in 2..=n {
        raw.push(Cyclic(m));
        raw.push(Dihedral(m));
    }
    let odd = |lo: u64| (lo..=n).filter(|x| x % 2 == 1);
    for r in odd(3) {
        for s in odd(3).take_while(|s| r * s <= n) {
            if gcd(r, s) > 1 {
                raw.push(ZxZ(r, s));
                raw.push(ZxZSemiZ2(r, s));
            }
        }
        for s in odd(3).take_while(|s| 2 * r * s <= n) {
            raw.push(ZxD(r, s));
            raw.push(DxD(r, s));
        }
    }
    raw.extend([ZxZ(3, 3), ZxZSemiZ2(3, 3), ZxD(3, 3), DxD(3, 3)]);
    raw.into_iter()
        .filter(|g| clauses_hold(n, g))
        .map(|g| g.canonicalize().expect("well-formed"))
        .collect()
}
