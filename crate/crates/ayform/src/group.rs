//! Signed permutation groups of types B and D.
//!
//! Elements are kept in window notation `(π(1),…,π(n))`; the other half of
//! the domain is implicit through `π(-i) = -π(i)`. Type D is the subgroup
//! with an even number of negative window entries.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AyError;

/// Which signed permutation group a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    B,
    D,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::B => write!(f, "B"),
            GroupKind::D => write!(f, "D"),
        }
    }
}

/// A concrete Weyl group `B_n` or `D_n` with its Coxeter presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFamily {
    pub kind: GroupKind,
    pub rank: usize,
}

/// The two parabolic copies of `S_n` used for induction.
///
/// `S1 = ⟨s_1,…,s_{n-1}⟩` exists in both families; `S0 = ⟨s_0,s_2,…,s_{n-1}⟩`
/// only makes sense for type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parabolic {
    S1,
    S0,
}

impl GroupFamily {
    pub fn new(kind: GroupKind, rank: usize) -> Result<Self, AyError> {
        let min = match kind {
            GroupKind::B => 1,
            GroupKind::D => 2,
        };
        if rank < min {
            return Err(AyError::InvalidGroup(format!(
                "{kind}_{rank}: rank must be at least {min}"
            )));
        }
        Ok(GroupFamily { kind, rank })
    }

    pub fn b(rank: usize) -> Self {
        Self::new(GroupKind::B, rank).expect("valid B rank")
    }

    pub fn d(rank: usize) -> Self {
        Self::new(GroupKind::D, rank).expect("valid D rank")
    }

    /// Number of elements, if it fits the enumeration guard.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.rank as u128).product();
        match self.kind {
            GroupKind::B => (1u128 << self.rank) * fact,
            GroupKind::D => (1u128 << (self.rank - 1)) * fact,
        }
    }

    /// Coxeter matrix entry m(s_i, s_j).
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.rank && j < self.rank);
        if i == j {
            return 1;
        }
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        match self.kind {
            GroupKind::B => match (a, b) {
                (0, 1) => 4,
                _ if b == a + 1 => 3,
                _ => 2,
            },
            GroupKind::D => match (a, b) {
                (0, 1) => 2,
                (0, 2) => 3,
                (0, _) => 2,
                _ if b == a + 1 => 3,
                _ => 2,
            },
        }
    }

    /// The Coxeter generator s_i in window notation.
    pub fn generator(&self, i: usize) -> SignedPermutation {
        assert!(i < self.rank, "generator index {i} out of range for rank {}", self.rank);
        let mut window: Vec<i32> = (1..=self.rank as i32).collect();
        if i == 0 {
            match self.kind {
                GroupKind::B => window[0] = -1,
                GroupKind::D => {
                    window[0] = -2;
                    window[1] = -1;
                }
            }
        } else {
            window.swap(i - 1, i);
        }
        SignedPermutation { window }
    }

    pub fn generators(&self) -> Vec<SignedPermutation> {
        (0..self.rank).map(|i| self.generator(i)).collect()
    }

    pub fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.rank)
    }

    /// Whether a window belongs to this family (even sign changes for D).
    pub fn contains(&self, w: &SignedPermutation) -> bool {
        w.rank() == self.rank
            && match self.kind {
                GroupKind::B => true,
                GroupKind::D => w.negatives() % 2 == 0,
            }
    }

    /// All elements in lexicographic window order.
    ///
    /// Guarded so a typo in the rank cannot try to materialize more than 10^7
    /// windows.
    pub fn enumerate(&self) -> Result<Vec<SignedPermutation>, AyError> {
        if self.order() > 10_000_000 {
            return Err(AyError::GuardExceeded(format!(
                "{}_{} has {} elements",
                self.kind,
                self.rank,
                self.order()
            )));
        }
        let n = self.rank;
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut perm: Vec<i32> = (1..=n as i32).collect();
        permute_rec(&mut perm, 0, &mut |p| {
            for mask in 0u32..(1 << n) {
                if self.kind == GroupKind::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let window: Vec<i32> = (0..n)
                    .map(|k| if mask & (1 << k) != 0 { -p[k] } else { p[k] })
                    .collect();
                out.push(SignedPermutation { window });
            }
        });
        out.sort();
        Ok(out)
    }

    /// All reflections with their roots, sorted canonically.
    pub fn reflections(&self) -> Vec<Reflection> {
        let n = self.rank as i32;
        let mut out = Vec::new();
        for b in 1..=n {
            for a in 1..b {
                out.push(Reflection { i: a, j: b });
                out.push(Reflection { i: -a, j: b });
            }
            if self.kind == GroupKind::B {
                out.push(Reflection { i: -b, j: b });
            }
        }
        out.sort();
        out
    }

    /// Minimal-length representatives of the left cosets w·P, sorted by
    /// length (ties by window order). `P` is `S1` or, for D only, `S0`.
    pub fn min_coset_reps(&self, parabolic: Parabolic) -> Result<Vec<SignedPermutation>, AyError> {
        if parabolic == Parabolic::S0 && self.kind != GroupKind::D {
            return Err(AyError::InvalidGroup(
                "coset representatives for S0 are only defined in type D".into(),
            ));
        }
        let elements = self.enumerate()?;
        // The left coset w·S1 consists of all windows with the same value
        // set as w; for S0, conjugating by the sign change at position 1
        // reduces to the same signature.
        let mut best: BTreeMap<Vec<i32>, (usize, SignedPermutation)> = BTreeMap::new();
        for w in elements {
            let mut sig = w.window.clone();
            if parabolic == Parabolic::S0 {
                sig[0] = -sig[0];
            }
            sig.sort_unstable();
            let len = w.length(self.kind);
            match best.get(&sig) {
                Some((l, v)) if (*l, v) <= (len, &w) => {}
                _ => {
                    best.insert(sig, (len, w));
                }
            }
        }
        let mut reps: Vec<(usize, SignedPermutation)> = best.into_values().collect();
        reps.sort();
        Ok(reps.into_iter().map(|(_, w)| w).collect())
    }
}

fn permute_rec(perm: &mut Vec<i32>, k: usize, f: &mut impl FnMut(&[i32])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_rec(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// An element of `B_n` (or `D_n`) in window notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// Validates that the absolute values form a permutation of 1..n.
    pub fn from_window(window: Vec<i32>) -> Result<Self, AyError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(AyError::InvalidWindow(format!("{window:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    /// Parses comma-separated window notation, e.g. `-2,-1,3`.
    pub fn parse(s: &str) -> Result<Self, AyError> {
        let window: Result<Vec<i32>, _> = s.split(',').map(|t| t.trim().parse::<i32>()).collect();
        let window = window.map_err(|_| AyError::InvalidWindow(s.to_string()))?;
        Self::from_window(window)
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// Number of negative window entries.
    pub fn negatives(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// π(k) for signed k.
    pub fn apply(&self, k: i32) -> i32 {
        debug_assert!(k != 0 && k.unsigned_abs() as usize <= self.rank());
        if k > 0 {
            self.window[(k - 1) as usize]
        } else {
            -self.window[(-k - 1) as usize]
        }
    }

    /// Composition (a·b)(k) = a(b(k)).
    pub fn multiply(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in multiplication");
        SignedPermutation {
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut window = vec![0; n];
        for (i, &v) in self.window.iter().enumerate() {
            let a = v.unsigned_abs() as usize;
            window[a - 1] = if v > 0 { i as i32 + 1 } else { -(i as i32 + 1) };
        }
        SignedPermutation { window }
    }

    /// w·s_i, computed by editing the window in place.
    pub fn right_mul_gen(&self, i: usize, kind: GroupKind) -> SignedPermutation {
        let mut window = self.window.clone();
        if i == 0 {
            match kind {
                GroupKind::B => window[0] = -window[0],
                GroupKind::D => {
                    let (a, b) = (window[0], window[1]);
                    window[0] = -b;
                    window[1] = -a;
                }
            }
        } else {
            window.swap(i - 1, i);
        }
        SignedPermutation { window }
    }

    /// Coxeter length, by the inversion statistic of the family.
    ///
    /// `ℓ_B(w) = inv(w) + Σ_{w(j)<0} |w(j)|` and
    /// `ℓ_D(w) = inv(w) + Σ_{w(j)<0} (|w(j)| − 1)`; both are cross-checked
    /// against Cayley-graph BFS in the tests.
    pub fn length(&self, kind: GroupKind) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut inv = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = w
            .iter()
            .filter(|&&v| v < 0)
            .map(|&v| match kind {
                GroupKind::B => v.unsigned_abs() as usize,
                GroupKind::D => v.unsigned_abs() as usize - 1,
            })
            .sum();
        inv + neg
    }

    /// True when ℓ(w·s_i) < ℓ(w).
    pub fn is_right_descent(&self, i: usize, kind: GroupKind) -> bool {
        let w = &self.window;
        if i == 0 {
            match kind {
                GroupKind::B => w[0] < 0,
                GroupKind::D => w[0] + w[1] < 0,
            }
        } else {
            w[i - 1] > w[i]
        }
    }

    /// One reduced word for w: indices `[i_1,…,i_k]` with w = s_{i_1}⋯s_{i_k}.
    pub fn reduced_word(&self, kind: GroupKind) -> Vec<usize> {
        let n = self.rank();
        let mut rest = self.clone();
        let mut word = Vec::with_capacity(self.length(kind));
        while !rest.is_identity() {
            let i = (0..n)
                .find(|&i| rest.is_right_descent(i, kind))
                .expect("non-identity element has a descent");
            rest = rest.right_mul_gen(i, kind);
            word.push(i);
        }
        word.reverse();
        word
    }
}

/// A reflection of `B_n`/`D_n` in canonical pair form.
///
/// `(i, j)` with `0 < j`, `|i| < j` encodes the double transposition
/// `(i,j)(-i,-j)`; `(-j, j)` encodes the type-B sign change at j. The
/// canonicalization collapses `(i,j) = (-j,-i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Reflection {
    i: i32,
    j: i32,
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl Reflection {
    pub fn new(i: i32, j: i32) -> Result<Self, AyError> {
        if i == 0 || j == 0 || i == j {
            return Err(AyError::InvalidWindow(format!("reflection ({i},{j})")));
        }
        // Normalize (i,j) ~ (-j,-i) to the representative with j > 0, |i| < j.
        let (mut a, mut b) = (i, j);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        if b < 0 || (b > 0 && a.abs() > b) {
            let (x, y) = (-b, -a);
            let (mut x, mut y) = (x, y);
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            a = x;
            b = y;
        }
        Ok(Reflection { i: a, j: b })
    }

    pub fn pair(&self) -> (i32, i32) {
        (self.i, self.j)
    }

    pub fn is_sign_change(&self) -> bool {
        self.i == -self.j
    }

    /// The reflection as a group element.
    pub fn to_element(&self, n: usize) -> SignedPermutation {
        let mut w = SignedPermutation::identity(n);
        let (i, j) = (self.i, self.j);
        if self.is_sign_change() {
            w.window[(j - 1) as usize] = -j;
        } else {
            let (ai, aj) = (i.unsigned_abs() as usize, j.unsigned_abs() as usize);
            // t(|i|) = ±j, t(j) = ±|i| with matching signs.
            w.window[ai - 1] = if i > 0 { j } else { -j };
            w.window[aj - 1] = if i > 0 { ai as i32 } else { -(ai as i32) };
        }
        w
    }

    /// Recognizes a reflection from its window form.
    pub fn from_element(w: &SignedPermutation) -> Option<Reflection> {
        let n = w.rank();
        let moved: Vec<usize> = (1..=n).filter(|&k| w.apply(k as i32) != k as i32).collect();
        match moved.len() {
            1 => {
                let a = moved[0] as i32;
                if w.apply(a) == -a {
                    Some(Reflection { i: -a, j: a })
                } else {
                    None
                }
            }
            2 => {
                let (a, b) = (moved[0] as i32, moved[1] as i32);
                if w.apply(a) == b && w.apply(b) == a {
                    Some(Reflection { i: a, j: b })
                } else if w.apply(a) == -b && w.apply(b) == -a {
                    Some(Reflection { i: -a, j: b })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// The root α_t as an integer vector, following α_{ij} = e_i − e_j with
    /// e_{-k} = -e_k; sign changes get the short root e_j.
    pub fn root(&self, n: usize) -> Vec<i64> {
        let mut r = vec![0i64; n];
        if self.is_sign_change() {
            r[(self.j - 1) as usize] = 1;
            return r;
        }
        let (i, j) = (self.i, self.j);
        r[(i.abs() - 1) as usize] += i.signum() as i64;
        r[(j - 1) as usize] -= 1;
        r
    }

    /// Twice the pairing ⟨c, α_t⟩ against a doubled content vector.
    ///
    /// Doubling keeps type-B half-integer contents exact. For sign changes
    /// the pairing used by the cell machinery is ⟨c, 2e_j⟩ = 2c_j, matching
    /// the derived-vector entry f_0 = 2c_1 of type B.
    pub fn ay_pairing2(&self, c2: &[i64]) -> i64 {
        if self.is_sign_change() {
            return 2 * c2[(self.j - 1) as usize];
        }
        let (i, j) = (self.i, self.j);
        let ci = i.signum() as i64 * c2[(i.abs() - 1) as usize];
        ci - c2[(j - 1) as usize]
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use proptest::prelude::*;

    use super::*;

    fn bfs_distances(family: GroupFamily) -> HashMap<SignedPermutation, usize> {
        let mut dist = HashMap::new();
        let mut frontier = vec![family.identity()];
        dist.insert(family.identity(), 0usize);
        let mut d = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in frontier {
                for i in 0..family.rank {
                    let ws = w.right_mul_gen(i, family.kind);
                    if !dist.contains_key(&ws) {
                        dist.insert(ws.clone(), d + 1);
                        next.push(ws);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        dist
    }

    #[test]
    fn generator_windows_match_both_families() {
        assert_eq!(GroupFamily::d(3).generator(0).window(), &[-2, -1, 3]);
        assert_eq!(GroupFamily::b(3).generator(0).window(), &[-1, 2, 3]);
        assert_eq!(GroupFamily::d(3).generator(1).window(), &[2, 1, 3]);
    }

    #[test]
    fn multiply_composes_windows() {
        let d3 = GroupFamily::d(3);
        let id = d3.identity();
        let (s0, s1, s2) = (d3.generator(0), d3.generator(1), d3.generator(2));
        assert_eq!(id.multiply(&s1), s1);
        assert_eq!(s0.multiply(&s0), id);
        // σ_4 = s_1 s_2 s_0 in window notation.
        let sigma4 = s1.multiply(&s2.multiply(&s0));
        assert_eq!(sigma4.window(), &[-3, -2, 1]);
        assert_eq!(sigma4.length(GroupKind::D), 3);
    }

    #[test]
    fn length_formula_matches_bfs() {
        for family in [
            GroupFamily::d(2),
            GroupFamily::d(3),
            GroupFamily::d(4),
            GroupFamily::b(2),
            GroupFamily::b(3),
            GroupFamily::b(4),
        ] {
            let dist = bfs_distances(family);
            assert_eq!(dist.len() as u128, family.order());
            for (w, d) in dist {
                assert_eq!(w.length(family.kind), d, "length of {w} in {family:?}");
            }
        }
    }

    #[test]
    fn group_orders() {
        assert_eq!(GroupFamily::d(3).enumerate().unwrap().len(), 24);
        assert_eq!(GroupFamily::b(3).enumerate().unwrap().len(), 48);
        assert_eq!(GroupFamily::d(4).enumerate().unwrap().len(), 192);
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let all = GroupFamily::d(3).enumerate().unwrap();
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn defining_relations_hold_for_generators() {
        for n in 2..=5 {
            for family in [GroupFamily::b(n), GroupFamily::d(n)] {
                for i in 0..n {
                    for j in 0..n {
                        let m = family.coxeter_m(i, j);
                        let mut w = family.identity();
                        for _ in 0..m {
                            w = w.multiply(&family.generator(i)).multiply(&family.generator(j));
                        }
                        assert!(w.is_identity(), "(s_{i} s_{j})^{m} ≠ e in {family:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn reflections_are_exactly_conjugates_of_generators() {
        for family in [
            GroupFamily::d(2),
            GroupFamily::d(3),
            GroupFamily::d(4),
            GroupFamily::b(2),
            GroupFamily::b(3),
            GroupFamily::b(4),
        ] {
            let mut conjugates: Vec<SignedPermutation> = Vec::new();
            for w in family.enumerate().unwrap() {
                for i in 0..family.rank {
                    let t = w.multiply(&family.generator(i)).multiply(&w.inverse());
                    conjugates.push(t);
                }
            }
            conjugates.sort();
            conjugates.dedup();
            let listed: Vec<SignedPermutation> = family
                .reflections()
                .iter()
                .map(|t| t.to_element(family.rank))
                .collect();
            let mut listed_sorted = listed.clone();
            listed_sorted.sort();
            assert_eq!(conjugates, listed_sorted, "{family:?}");
            // And every one round-trips through the canonical form.
            for t in family.reflections() {
                assert_eq!(Reflection::from_element(&t.to_element(family.rank)), Some(t));
            }
        }
        assert_eq!(GroupFamily::d(2).reflections().len(), 2);
        assert_eq!(GroupFamily::d(3).reflections().len(), 6);
        assert_eq!(GroupFamily::b(2).reflections().len(), 4);
    }

    #[test]
    fn coset_reps_d3_s1_match_sigma_list() {
        let d3 = GroupFamily::d(3);
        let reps = d3.min_coset_reps(Parabolic::S1).unwrap();
        let windows: Vec<&[i32]> = reps.iter().map(|w| w.window()).collect();
        assert_eq!(
            windows,
            vec![&[1, 2, 3][..], &[-2, -1, 3], &[-3, -1, 2], &[-3, -2, 1]]
        );
    }

    #[test]
    fn coset_reps_d4_s1_longest_reverses() {
        let d4 = GroupFamily::d(4);
        let reps = d4.min_coset_reps(Parabolic::S1).unwrap();
        assert_eq!(reps.len(), 8);
        assert_eq!(reps.last().unwrap().window(), &[-4, -3, -2, -1]);
    }

    #[test]
    fn coset_reps_d3_s0_second_is_s1() {
        let d3 = GroupFamily::d(3);
        let reps = d3.min_coset_reps(Parabolic::S0).unwrap();
        assert_eq!(reps.len(), 4);
        assert_eq!(reps[1], d3.generator(1));
    }

    #[test]
    fn s0_cosets_unsupported_for_b() {
        assert!(GroupFamily::b(3).min_coset_reps(Parabolic::S0).is_err());
    }

    #[test]
    fn cosets_partition_with_strictly_minimal_reps() {
        for family in [GroupFamily::d(3), GroupFamily::d(4), GroupFamily::b(3)] {
            for parabolic in [Parabolic::S1, Parabolic::S0] {
                if parabolic == Parabolic::S0 && family.kind == GroupKind::B {
                    continue;
                }
                let reps = family.min_coset_reps(parabolic).unwrap();
                let subgroup_gens: Vec<usize> = match parabolic {
                    Parabolic::S1 => (1..family.rank).collect(),
                    Parabolic::S0 => std::iter::once(0).chain(2..family.rank).collect(),
                };
                // Generate the subgroup by closure.
                let mut subgroup = vec![family.identity()];
                loop {
                    let mut add = Vec::new();
                    for h in &subgroup {
                        for &i in &subgroup_gens {
                            let hg = h.right_mul_gen(i, family.kind);
                            if !subgroup.contains(&hg) && !add.contains(&hg) {
                                add.push(hg);
                            }
                        }
                    }
                    if add.is_empty() {
                        break;
                    }
                    subgroup.extend(add);
                }
                let mut covered: Vec<SignedPermutation> = Vec::new();
                for rep in &reps {
                    let rep_len = rep.length(family.kind);
                    for h in &subgroup {
                        let w = rep.multiply(h);
                        if !w.is_identity() || rep.is_identity() {
                            assert!(
                                w == *rep || w.length(family.kind) > rep_len,
                                "{rep} is not strictly minimal in its coset"
                            );
                        }
                        covered.push(w);
                    }
                }
                covered.sort();
                covered.dedup();
                assert_eq!(covered.len() as u128, family.order(), "{family:?} {parabolic:?}");
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for family in [GroupFamily::d(3), GroupFamily::b(3)] {
            for w in family.enumerate().unwrap() {
                let word = w.reduced_word(family.kind);
                assert_eq!(word.len(), w.length(family.kind));
                let mut prod = family.identity();
                for &i in &word {
                    prod = prod.multiply(&family.generator(i));
                }
                assert_eq!(prod, w);
            }
        }
    }

    fn arb_element(family: GroupFamily) -> impl Strategy<Value = SignedPermutation> {
        let n = family.rank;
        (
            Just(family),
            proptest::collection::vec(0..n, 0..12),
        )
            .prop_map(|(family, word)| {
                let mut w = family.identity();
                for i in word {
                    w = w.right_mul_gen(i, family.kind);
                }
                w
            })
    }

    proptest! {
        #[test]
        fn multiplication_is_associative(
            a in arb_element(GroupFamily::d(4)),
            b in arb_element(GroupFamily::d(4)),
            c in arb_element(GroupFamily::d(4)),
        ) {
            prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
        }

        #[test]
        fn inverse_is_two_sided(w in arb_element(GroupFamily::b(4))) {
            prop_assert!(w.multiply(&w.inverse()).is_identity());
            prop_assert!(w.inverse().multiply(&w).is_identity());
        }

        #[test]
        fn length_changes_by_one_under_generators(w in arb_element(GroupFamily::d(4))) {
            let l = w.length(GroupKind::D);
            for i in 0..4 {
                let ls = w.right_mul_gen(i, GroupKind::D).length(GroupKind::D);
                prop_assert!(ls == l + 1 || l == ls + 1);
            }
        }
    }
}
