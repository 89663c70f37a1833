//! D-Young and B-Young tableaux and their standard families.
//!
//! A tableau is stored as its half of nonnegative contents: a filling of a
//! skew shape λ by n signed entries (one of ±k for each k, both at a shared
//! zero box), together with the placement that pins the contents. The
//! mirrored half of nonpositive contents is reconstructed on demand, which
//! is all that standardness across the zero diagonal needs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AyError;
use crate::group::{GroupKind, SignedPermutation};
use crate::shapes::SkewShape;

/// Parity of the negative entries in the stored half.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// How the half of nonnegative contents is placed against its mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Placement {
    /// Lower-left box at content m (type D) or m + 1/2 (type B); the mirror
    /// is strictly southwest and the halves do not touch.
    M(u32),
    /// Two boxes on the zero diagonal, halves split by a vertical line.
    ZVBar,
    /// Two boxes on the zero diagonal, halves split by a horizontal line.
    ZHBar,
    /// One shared zero box holding ±i (type D only).
    ZBox,
}

/// A filling of a skew shape by signed entries, before placement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfTableau {
    shape: SkewShape,
    entries: Vec<i32>,
}

/// Which zero-diagonal family a half lifts into, decided by the corner
/// comparison of its lower-left box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroClass {
    VBar,
    HBar,
    Boxed,
}

impl HalfTableau {
    /// Validates the label set (one of ±k for each k = 1..n); standardness
    /// is checked separately so non-standard fillings can be talked about.
    pub fn new(shape: SkewShape, entries: Vec<i32>) -> Result<Self, AyError> {
        let n = shape.size();
        if entries.len() != n {
            return Err(AyError::InvalidTableau(format!(
                "{} entries for a shape of {} boxes",
                entries.len(),
                n
            )));
        }
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            let a = e.unsigned_abs() as usize;
            if e == 0 || a > n || seen[a] {
                return Err(AyError::InvalidTableau(format!(
                    "entries must use each of ±1..±{n} once, got {entries:?}"
                )));
            }
            seen[a] = true;
        }
        Ok(HalfTableau { shape, entries })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Entries in row-major reading order.
    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn entry_at(&self, r: usize, c: usize) -> Option<i32> {
        self.shape
            .boxes()
            .iter()
            .position(|&b| b == (r, c))
            .map(|i| self.entries[i])
    }

    pub fn sign(&self) -> Sign {
        if self.entries.iter().filter(|&&e| e < 0).count() % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Strictly increasing along rows and columns of the shape.
    pub fn is_standard(&self) -> bool {
        let boxes = self.shape.boxes();
        for (i, &(r, c)) in boxes.iter().enumerate() {
            if self.shape.contains_box(r, c + 1) {
                let right = boxes.iter().position(|&b| b == (r, c + 1)).unwrap();
                if self.entries[i] >= self.entries[right] {
                    return false;
                }
            }
            if self.shape.contains_box(r + 1, c) {
                let below = boxes.iter().position(|&b| b == (r + 1, c)).unwrap();
                if self.entries[i] >= self.entries[below] {
                    return false;
                }
            }
        }
        true
    }

    /// Entry-wise action: each entry e becomes π(e).
    pub fn act(&self, pi: &SignedPermutation) -> HalfTableau {
        assert_eq!(pi.rank(), self.shape.size(), "rank mismatch in tableau action");
        HalfTableau {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&e| pi.apply(e)).collect(),
        }
    }

    /// Corner comparison of Lemma-T0 type: decides which zero family the
    /// half lifts into. `|a|<|b|<|c|` → vertical split, `|a|>|b|>|c|` →
    /// horizontal split, `|a|>|b|<|c|` → shared box, with absent corner
    /// boxes dropping their comparison.
    pub fn zero_class(&self) -> ZeroClass {
        let (h, cl) = self.shape.lower_left();
        let b = self.entry_at(h, cl).unwrap().unsigned_abs();
        let a = if self.shape.has_box_above_lower_left() {
            self.entry_at(h - 1, cl).map(|e| e.unsigned_abs())
        } else {
            None
        };
        let c = if self.shape.has_box_right_of_lower_left() {
            self.entry_at(h, cl + 1).map(|e| e.unsigned_abs())
        } else {
            None
        };
        match (a, c) {
            (None, None) => ZeroClass::Boxed,
            (Some(a), None) => {
                if a < b {
                    ZeroClass::VBar
                } else {
                    ZeroClass::Boxed
                }
            }
            (None, Some(c)) => {
                if b < c {
                    ZeroClass::Boxed
                } else {
                    ZeroClass::HBar
                }
            }
            (Some(a), Some(c)) => {
                if a < b && b < c {
                    ZeroClass::VBar
                } else if a > b && b > c {
                    ZeroClass::HBar
                } else {
                    debug_assert!(a > b && b < c);
                    ZeroClass::Boxed
                }
            }
        }
    }
}

/// A D-Young or B-Young tableau: a placed half plus family metadata.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedTableau {
    kind: GroupKind,
    shape: SkewShape,
    placement: Placement,
    /// Half entries in reading order; the shared zero box of a ZBox
    /// placement stores the positive representative.
    entries: Vec<i32>,
}

/// One cell of the materialized full diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxEntry {
    One(i32),
    /// The shared zero box holding {−v, +v}, read as −v then +v.
    Pair(i32),
}

impl SignedTableau {
    fn new_unchecked(kind: GroupKind, half: &HalfTableau, placement: Placement) -> Self {
        let mut entries = half.entries.clone();
        if placement == Placement::ZBox {
            let ll = half
                .shape
                .boxes()
                .iter()
                .position(|&b| b == half.shape.lower_left())
                .unwrap();
            entries[ll] = entries[ll].abs();
        }
        SignedTableau {
            kind,
            shape: half.shape.clone(),
            placement,
            entries,
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn placement(&self) -> Placement {
        self.placement
    }

    pub fn rank(&self) -> usize {
        self.shape.size()
    }

    /// The stored half as a filling.
    pub fn half(&self) -> HalfTableau {
        HalfTableau {
            shape: self.shape.clone(),
            entries: self.entries.clone(),
        }
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// Twice the content of the lower-left box.
    fn base2(&self) -> i64 {
        match (self.kind, self.placement) {
            (GroupKind::D, Placement::M(m)) => 2 * m as i64,
            (GroupKind::D, _) => 0,
            (GroupKind::B, Placement::M(m)) => 2 * m as i64 + 1,
            (GroupKind::B, _) => 1,
        }
    }

    /// Twice the content of a half box, in shape coordinates.
    pub fn content2_of_box(&self, r: usize, c: usize) -> i64 {
        let (h, cl) = self.shape.lower_left();
        2 * ((c as i64 - cl as i64) - (r as i64 - h as i64)) + self.base2()
    }

    /// Twice the content vector (2c_1, …, 2c_n); doubling keeps type-B
    /// half-integer contents exact.
    pub fn content2_vector(&self) -> Vec<i64> {
        let n = self.rank();
        let mut c2 = vec![0i64; n];
        for (i, &(r, c)) in self.shape.boxes().iter().enumerate() {
            let e = self.entries[i];
            let v = self.content2_of_box(r, c);
            c2[(e.unsigned_abs() - 1) as usize] = e.signum() as i64 * v;
        }
        c2
    }

    /// The derived vector Δc: (c_1+c_2, c_2−c_1, …) for D and
    /// (2c_1, c_2−c_1, …) for B. Entries are always integers.
    pub fn derived_vector(&self) -> Vec<i64> {
        let c2 = self.content2_vector();
        let n = c2.len();
        let mut f = Vec::with_capacity(n);
        match self.kind {
            GroupKind::D => {
                debug_assert!(n >= 2);
                debug_assert!((c2[0] + c2[1]) % 2 == 0);
                f.push((c2[0] + c2[1]) / 2);
            }
            GroupKind::B => f.push(c2[0]),
        }
        for i in 1..n {
            debug_assert!((c2[i] - c2[i - 1]) % 2 == 0);
            f.push((c2[i] - c2[i - 1]) / 2);
        }
        f
    }

    /// Entry-wise action of a signed permutation; shape and placement stay
    /// fixed, so the result may be non-standard.
    pub fn act(&self, pi: &SignedPermutation) -> SignedTableau {
        assert_eq!(pi.rank(), self.rank(), "rank mismatch in tableau action");
        let mut entries: Vec<i32> = self.entries.iter().map(|&e| pi.apply(e)).collect();
        if self.placement == Placement::ZBox {
            let ll = self
                .shape
                .boxes()
                .iter()
                .position(|&b| b == self.shape.lower_left())
                .unwrap();
            entries[ll] = entries[ll].abs();
        }
        SignedTableau {
            kind: self.kind,
            shape: self.shape.clone(),
            placement: self.placement,
            entries,
        }
    }

    /// Shorthand for acting by the generator s_i.
    pub fn act_gen(&self, i: usize) -> SignedTableau {
        let fam = crate::group::GroupFamily {
            kind: self.kind,
            rank: self.rank(),
        };
        self.act(&fam.generator(i))
    }

    /// The ambient offsets of the mirror map: a half box at ambient (r, c)
    /// mirrors to (R − r, C − c). The constants satisfy C − R = −base2, so
    /// contents negate.
    fn mirror_point(&self) -> (i32, i32) {
        match (self.kind, self.placement) {
            (GroupKind::D, Placement::M(m)) => (1, 1 - 2 * m as i32),
            (GroupKind::D, Placement::ZVBar) => (-1, -1),
            (GroupKind::D, Placement::ZHBar) => (1, 1),
            (GroupKind::D, Placement::ZBox) => (0, 0),
            (GroupKind::B, Placement::M(m)) => (1, -2 * m as i32),
            (GroupKind::B, Placement::ZVBar) => (0, -1),
            (GroupKind::B, Placement::ZHBar) => (1, 0),
            (GroupKind::B, Placement::ZBox) => unreachable!("no shared box in type B"),
        }
    }

    /// The full 2n-entry diagram in ambient coordinates (lower-left half box
    /// at (0,0)).
    pub fn materialize(&self) -> BTreeMap<(i32, i32), BoxEntry> {
        let (h, cl) = self.shape.lower_left();
        let ambient =
            |(r, c): (usize, usize)| (r as i32 - h as i32, c as i32 - cl as i32);
        let (mr, mc) = self.mirror_point();
        let mut grid = BTreeMap::new();
        for (i, &bx) in self.shape.boxes().iter().enumerate() {
            let pos = ambient(bx);
            let e = self.entries[i];
            if self.placement == Placement::ZBox && pos == (0, 0) {
                grid.insert(pos, BoxEntry::Pair(e.abs()));
            } else {
                let prev = grid.insert(pos, BoxEntry::One(e));
                debug_assert!(prev.is_none(), "half boxes collide");
            }
        }
        for (i, &bx) in self.shape.boxes().iter().enumerate() {
            let pos = ambient(bx);
            if self.placement == Placement::ZBox && pos == (0, 0) {
                continue;
            }
            let mpos = (mr - pos.0, mc - pos.1);
            let prev = grid.insert(mpos, BoxEntry::One(-self.entries[i]));
            debug_assert!(prev.is_none(), "mirror collides at {mpos:?}");
        }
        grid
    }

    /// Strict increase along every row and column of the full diagram; a
    /// shared zero box reads as (−i, +i).
    pub fn is_standard(&self) -> bool {
        let grid = self.materialize();
        let mut rows: BTreeMap<i32, Vec<(i32, BoxEntry)>> = BTreeMap::new();
        let mut cols: BTreeMap<i32, Vec<(i32, BoxEntry)>> = BTreeMap::new();
        for (&(r, c), &e) in &grid {
            rows.entry(r).or_default().push((c, e));
            cols.entry(c).or_default().push((r, e));
        }
        let increasing = |line: &[(i32, BoxEntry)]| {
            let mut last: Option<i32> = None;
            for &(_, e) in line {
                let (lo, hi) = match e {
                    BoxEntry::One(v) => (v, v),
                    BoxEntry::Pair(v) => (-v, v),
                };
                if let Some(prev) = last {
                    if prev >= lo {
                        return false;
                    }
                }
                if lo != hi && lo >= hi {
                    return false;
                }
                last = Some(hi);
            }
            true
        };
        rows.values().all(|line| increasing(line)) && cols.values().all(|line| increasing(line))
    }

    /// Whether the materialized diagram is a valid skew diagram (rows and
    /// columns are contiguous, boundaries weakly decrease downward).
    pub fn diagram_is_skew(&self) -> bool {
        let grid = self.materialize();
        let mut rows: BTreeMap<i32, Vec<i32>> = BTreeMap::new();
        for &(r, c) in grid.keys() {
            rows.entry(r).or_default().push(c);
        }
        let mut prev: Option<(i32, i32, i32)> = None; // (row, left, right)
        for (&r, cs) in &rows {
            let (left, right) = (cs[0], *cs.last().unwrap());
            if (right - left + 1) as usize != cs.len() {
                return false;
            }
            if let Some((pr, pl, prr)) = prev {
                if r != pr + 1 || pl < left || prr < right {
                    return false;
                }
            }
            prev = Some((r, left, right));
        }
        true
    }

    /// Paper-style row layout of the full diagram.
    pub fn render(&self) -> String {
        let grid = self.materialize();
        let min_c = grid.keys().map(|&(_, c)| c).min().unwrap_or(0);
        let max_c = grid.keys().map(|&(_, c)| c).max().unwrap_or(0);
        let cell = |e: Option<&BoxEntry>| match e {
            Some(BoxEntry::One(v)) => format!("{v:>4}"),
            Some(BoxEntry::Pair(v)) => format!("{:>4}", format!("±{v}")),
            None => "    ".to_string(),
        };
        let mut rows: BTreeMap<i32, BTreeMap<i32, BoxEntry>> = BTreeMap::new();
        for (&(r, c), &e) in &grid {
            rows.entry(r).or_default().insert(c, e);
        }
        let mut out = String::new();
        for (_, line) in rows {
            for c in min_c..=max_c {
                out.push_str(&cell(line.get(&c)));
            }
            while out.ends_with(' ') {
                out.pop();
            }
            out.push('\n');
        }
        out
    }

    /// JSON form of the half: shape, content offset of `col − row`, and the
    /// half entries with the shared zero box as a value pair.
    pub fn to_json(&self) -> serde_json::Value {
        let (h, cl) = self.shape.lower_left();
        // content(r, c) = (c − r) + offset on the half.
        let offset = self.base2() as f64 / 2.0 - (cl as f64 - h as f64);
        let entries: Vec<serde_json::Value> = self
            .shape
            .boxes()
            .iter()
            .zip(&self.entries)
            .map(|(&(r, c), &e)| {
                let value = if self.placement == Placement::ZBox && (r, c) == self.shape.lower_left()
                {
                    serde_json::json!([-e, e])
                } else {
                    serde_json::json!(e)
                };
                serde_json::json!({ "box": [r, c], "value": value })
            })
            .collect();
        serde_json::json!({
            "shape": { "outer": self.shape.outer(), "inner": self.shape.inner() },
            "offset": offset,
            "entries": entries,
        })
    }
}

impl fmt::Display for SignedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// Lifts a standard half with nonnegative contents to the unique standard
/// tableau of the zero-diagonal families (type D).
pub fn lift_zero(half: &HalfTableau) -> Result<SignedTableau, AyError> {
    if !half.is_standard() {
        return Err(AyError::InvalidTableau("half filling is not standard".into()));
    }
    let placement = match half.zero_class() {
        ZeroClass::VBar => Placement::ZVBar,
        ZeroClass::HBar => Placement::ZHBar,
        ZeroClass::Boxed => Placement::ZBox,
    };
    Ok(SignedTableau::new_unchecked(GroupKind::D, half, placement))
}

/// Lifts a standard half with positive contents to the unique standard
/// tableau with lower-left content m (type D).
pub fn lift_m(half: &HalfTableau, m: u32) -> Result<SignedTableau, AyError> {
    if m == 0 {
        return Err(AyError::InvalidSpec("m must be at least 1".into()));
    }
    if !half.is_standard() {
        return Err(AyError::InvalidTableau("half filling is not standard".into()));
    }
    Ok(SignedTableau::new_unchecked(GroupKind::D, half, Placement::M(m)))
}

/// Type-B lift with lower-left content m + 1/2.
pub fn lift_b_m(half: &HalfTableau, m: u32) -> Result<SignedTableau, AyError> {
    if m == 0 {
        return Err(AyError::InvalidSpec("m must be at least 1".into()));
    }
    if !half.is_standard() {
        return Err(AyError::InvalidTableau("half filling is not standard".into()));
    }
    Ok(SignedTableau::new_unchecked(GroupKind::B, half, Placement::M(m)))
}

/// Type-B zero lift: a positive lower-left entry sticks the halves along a
/// vertical edge, a negative one along a horizontal edge.
pub fn lift_b_zero(half: &HalfTableau) -> Result<SignedTableau, AyError> {
    if !half.is_standard() {
        return Err(AyError::InvalidTableau("half filling is not standard".into()));
    }
    let (h, cl) = half.shape.lower_left();
    let placement = if half.entry_at(h, cl).unwrap() > 0 {
        Placement::ZVBar
    } else {
        Placement::ZHBar
    };
    Ok(SignedTableau::new_unchecked(GroupKind::B, half, placement))
}

/// Family selector, mirroring the sets T[λ,…] of both types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variant {
    /// T[λ,m,±] (D) or T[λ,m] (B), m ≥ 1.
    M(u32),
    /// T[λ,·|·,±] (D) or T[λ,·|·] (B).
    VBar,
    /// T[λ,÷,±] (D) or T[λ,÷] (B).
    HBar,
    /// T[λ,⊠] (D only).
    Boxed,
    /// T[λ,0,±] = ⊠ ∪ ·|· ∪ ÷ (D) or T[λ,0] = ·|· ∪ ÷ (B).
    Zero,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::M(m) => write!(f, "m={m}"),
            Variant::VBar => write!(f, "vbar"),
            Variant::HBar => write!(f, "hbar"),
            Variant::Boxed => write!(f, "box"),
            Variant::Zero => write!(f, "zero"),
        }
    }
}

/// A fully specified tableau family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: GroupKind,
    pub shape: SkewShape,
    pub variant: Variant,
    pub sign: Option<Sign>,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: T[{},{}", self.kind, self.shape, self.variant)?;
        if let Some(s) = self.sign {
            write!(f, ",{s}")?;
        }
        write!(f, "]")
    }
}

impl FamilySpec {
    pub fn new(
        kind: GroupKind,
        shape: SkewShape,
        variant: Variant,
        sign: Option<Sign>,
    ) -> Result<Self, AyError> {
        if let Variant::M(m) = variant {
            if m == 0 {
                return Err(AyError::InvalidSpec("m must be at least 1".into()));
            }
        }
        match kind {
            GroupKind::B => {
                if sign.is_some() {
                    return Err(AyError::InvalidSpec(
                        "type-B families carry no sign".into(),
                    ));
                }
                if variant == Variant::Boxed {
                    return Err(AyError::InvalidSpec(
                        "type B has no shared-box family".into(),
                    ));
                }
            }
            GroupKind::D => {
                if shape.size() < 2 {
                    return Err(AyError::InvalidSpec(
                        "type-D families need at least 2 boxes".into(),
                    ));
                }
                match variant {
                    Variant::Boxed => {
                        if sign.is_some() {
                            return Err(AyError::InvalidSpec(
                                "T[λ,⊠] carries no sign".into(),
                            ));
                        }
                    }
                    _ => {
                        if sign.is_none() {
                            return Err(AyError::InvalidSpec(format!(
                                "variant {variant} needs a sign in type D"
                            )));
                        }
                    }
                }
            }
        }
        Ok(FamilySpec {
            kind,
            shape,
            variant,
            sign,
        })
    }

    pub fn rank(&self) -> usize {
        self.shape.size()
    }
}

/// All standard halves of a shape, optionally restricted to one parity,
/// sorted lexicographically by reading word.
pub fn enumerate_halves(shape: &SkewShape, sign: Option<Sign>) -> Vec<HalfTableau> {
    let n = shape.size();
    assert!(n <= 20, "half enumeration guard");
    let orders = shape.standard_orders();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let parity = if mask.count_ones() % 2 == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        };
        if sign.is_some_and(|s| s != parity) {
            continue;
        }
        let mut values: Vec<i32> = (1..=n as i32)
            .map(|k| {
                if mask & (1 << (k - 1)) != 0 {
                    -k
                } else {
                    k
                }
            })
            .collect();
        values.sort_unstable();
        for order in &orders {
            let mut entries = vec![0i32; n];
            for (k, &box_idx) in order.iter().enumerate() {
                entries[box_idx] = values[k];
            }
            out.push(HalfTableau {
                shape: shape.clone(),
                entries,
            });
        }
    }
    out.sort();
    out
}

/// All standard tableaux of the family, deterministically ordered.
///
/// Unavailable zero variants give the empty family; the Zero variant is the
/// concatenation ⊠, ·|·, ÷ (D) or ·|·, ÷ (B), each block sorted.
pub fn enumerate_family(spec: &FamilySpec) -> Result<Vec<SignedTableau>, AyError> {
    let shape = &spec.shape;
    let out = match (spec.kind, spec.variant) {
        (GroupKind::D, Variant::M(m)) => enumerate_halves(shape, spec.sign)
            .iter()
            .map(|h| lift_m(h, m))
            .collect::<Result<Vec<_>, _>>()?,
        (GroupKind::D, Variant::Boxed) => zero_block(shape, Sign::Plus, ZeroClass::Boxed)?,
        (GroupKind::D, Variant::VBar) => zero_block(shape, spec.sign.unwrap(), ZeroClass::VBar)?,
        (GroupKind::D, Variant::HBar) => zero_block(shape, spec.sign.unwrap(), ZeroClass::HBar)?,
        (GroupKind::D, Variant::Zero) => {
            let sign = spec.sign.unwrap();
            let mut all = zero_block(shape, Sign::Plus, ZeroClass::Boxed)?;
            all.extend(zero_block(shape, sign, ZeroClass::VBar)?);
            all.extend(zero_block(shape, sign, ZeroClass::HBar)?);
            all
        }
        (GroupKind::B, Variant::M(m)) => enumerate_halves(shape, None)
            .iter()
            .map(|h| lift_b_m(h, m))
            .collect::<Result<Vec<_>, _>>()?,
        (GroupKind::B, Variant::VBar | Variant::HBar) => {
            let want = if spec.variant == Variant::VBar {
                Placement::ZVBar
            } else {
                Placement::ZHBar
            };
            enumerate_halves(shape, None)
                .iter()
                .map(|h| lift_b_zero(h))
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .filter(|t| t.placement() == want)
                .collect()
        }
        (GroupKind::B, Variant::Zero) => {
            let all: Vec<SignedTableau> = enumerate_halves(shape, None)
                .iter()
                .map(|h| lift_b_zero(h))
                .collect::<Result<Vec<_>, _>>()?;
            let mut vbar: Vec<_> = all
                .iter()
                .filter(|t| t.placement() == Placement::ZVBar)
                .cloned()
                .collect();
            vbar.extend(
                all.into_iter()
                    .filter(|t| t.placement() == Placement::ZHBar),
            );
            vbar
        }
        (GroupKind::B, Variant::Boxed) => unreachable!("rejected by FamilySpec::new"),
    };
    Ok(out)
}

/// The zero-diagonal tableaux of one class, from halves of the given parity.
///
/// The shared-box family is parity-free: flipping the sign of the shared box
/// entry bijects even and odd halves onto the same tableaux, so it is
/// enumerated from the even side.
fn zero_block(
    shape: &SkewShape,
    sign: Sign,
    class: ZeroClass,
) -> Result<Vec<SignedTableau>, AyError> {
    let available = match class {
        ZeroClass::VBar => shape.has_box_above_lower_left(),
        ZeroClass::HBar => shape.has_box_right_of_lower_left(),
        ZeroClass::Boxed => true,
    };
    if !available {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    for h in enumerate_halves(shape, Some(sign)) {
        if h.zero_class() == class {
            out.push(lift_zero(&h)?);
        }
    }
    out.sort();
    Ok(out)
}
