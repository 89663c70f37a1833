//! Representation matrices from tableau families, Specht modules, and
//! classically induced representations, plus characters.
//!
//! All constructions share one basis rule: the generator s_i sends a basis
//! tableau T to `(1/f_i(T))·T + b·T^{s_i}`, where f is the derived content
//! vector and b depends on the normalization. Orthogonal takes
//! `b = √(1 − 1/f²)` (symmetric, float); row-stochastic takes `b = 1 − 1/f`
//! (exact rational). When `T^{s_i}` is not standard the off-diagonal
//! coefficient is zero and `f = ±1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AyError;
use crate::group::{GroupFamily, Parabolic, SignedPermutation};
use crate::matrix::{BlockGen, CoupledGen, GenMatrix, Matrix};
use crate::scalar::Scalar;
use crate::shapes::SkewShape;
use crate::tableaux::{enumerate_family, FamilySpec, HalfTableau, SignedTableau};

/// Off-diagonal coefficient convention; both give isomorphic representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    Orthogonal,
    Stochastic,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::Orthogonal => write!(f, "orthogonal"),
            Normalization::Stochastic => write!(f, "stochastic"),
        }
    }
}

fn off_coefficient<S: Scalar>(norm: Normalization, f: i64) -> Result<S, AyError> {
    match norm {
        Normalization::Stochastic => Ok(S::from_ratio(f - 1, f)),
        Normalization::Orthogonal => S::sqrt_ratio(f * f - 1, f * f).ok_or_else(|| {
            AyError::BackendMismatch(format!(
                "orthogonal coefficient √(1−1/{f}²) needs the float backend"
            ))
        }),
    }
}

/// What the rows/columns of a representation are indexed by.
#[derive(Debug, Clone, PartialEq)]
pub enum RepBasis {
    Tableaux(Vec<SignedTableau>),
    Cosets {
        reps: Vec<SignedPermutation>,
        inner_dim: usize,
    },
    Anonymous(usize),
}

impl RepBasis {
    pub fn dim(&self) -> usize {
        match self {
            RepBasis::Tableaux(v) => v.len(),
            RepBasis::Cosets { reps, inner_dim } => reps.len() * inner_dim,
            RepBasis::Anonymous(d) => *d,
        }
    }
}

/// A representation of `B_n` or `D_n` given by its generator matrices.
#[derive(Debug, Clone)]
pub struct Representation<S> {
    pub family: GroupFamily,
    pub norm: Normalization,
    pub gens: Vec<GenMatrix<S>>,
    pub basis: RepBasis,
}

impl<S: Scalar> Representation<S> {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn tableaux(&self) -> Option<&[SignedTableau]> {
        match &self.basis {
            RepBasis::Tableaux(v) => Some(v),
            _ => None,
        }
    }

    /// The matrix of the word s_{i_1}⋯s_{i_k} (empty word → identity).
    pub fn element_matrix(&self, word: &[usize]) -> Matrix<S> {
        let mut m = Matrix::identity(self.dim());
        for &i in word {
            assert!(i < self.gens.len(), "generator index {i} out of range");
            m = self.gens[i].right_mul(&m);
        }
        m
    }

    /// Trace of every group element, evaluated along the weak order so each
    /// element costs one sparse product.
    pub fn character(&self) -> Result<Character<S>, AyError> {
        let kind = self.family.kind;
        let mut values: BTreeMap<SignedPermutation, S> = BTreeMap::new();
        let expected = self.family.order() as usize;
        if self.family.order() > 200_000 {
            return Err(AyError::GuardExceeded(format!(
                "character over {expected} elements"
            )));
        }
        let id = self.family.identity();
        let mut frontier: Vec<(SignedPermutation, Matrix<S>)> =
            vec![(id.clone(), Matrix::identity(self.dim()))];
        values.insert(id, Matrix::<S>::identity(self.dim()).trace());
        let mut len = 0usize;
        while !frontier.is_empty() {
            let mut next: Vec<(SignedPermutation, Matrix<S>)> = Vec::new();
            for (w, m) in &frontier {
                for i in 0..self.family.rank {
                    let ws = w.right_mul_gen(i, kind);
                    if ws.length(kind) != len + 1 || values.contains_key(&ws) {
                        continue;
                    }
                    let mw = self.gens[i].right_mul(m);
                    values.insert(ws.clone(), mw.trace());
                    next.push((ws, mw));
                }
            }
            frontier = next;
            len += 1;
        }
        debug_assert_eq!(values.len(), expected);
        Ok(Character { values })
    }

    /// Checks `(M_i·M_j)^{m(i,j)} = I` for every generator pair.
    pub fn verify_coxeter_relations(&self) -> RelationReport {
        let dense: Vec<Matrix<S>> = self.gens.iter().map(|g| g.dense()).collect();
        let mut worst = 0.0f64;
        let mut ok = true;
        for i in 0..dense.len() {
            for j in i..dense.len() {
                let m = self.family.coxeter_m(i, j);
                let mut p = Matrix::identity(self.dim());
                for _ in 0..m {
                    p = p.mul(&dense[i]).mul(&dense[j]);
                }
                let residual = p.residual_from_identity();
                worst = worst.max(residual);
                if S::EXACT {
                    ok &= p.is_identity();
                } else {
                    ok &= residual <= 1e-9;
                }
            }
        }
        RelationReport {
            ok,
            worst_residual: worst,
        }
    }
}

/// Outcome of a relation check; failures are reported, not thrown.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub ok: bool,
    pub worst_residual: f64,
}

/// The character: one trace per group element, keyed canonically.
#[derive(Debug, Clone, PartialEq)]
pub struct Character<S> {
    pub values: BTreeMap<SignedPermutation, S>,
}

impl<S: Scalar> Character<S> {
    pub fn value(&self, w: &SignedPermutation) -> Option<&S> {
        self.values.get(w)
    }

    pub fn dim_f64(&self) -> f64 {
        self.values
            .iter()
            .find(|(w, _)| w.is_identity())
            .map(|(_, v)| v.to_f64())
            .unwrap_or(0.0)
    }

    /// Exact equality when the backend is exact, else within `tol`.
    pub fn equals(&self, other: &Character<S>, tol: f64) -> bool {
        if self.values.len() != other.values.len() {
            return false;
        }
        self.values.iter().zip(&other.values).all(|((w, a), (v, b))| {
            w == v
                && if S::EXACT {
                    a == b
                } else {
                    (a.to_f64() - b.to_f64()).abs() <= tol
                }
        })
    }

    /// Values as floats, for cross-backend comparisons.
    pub fn to_f64_map(&self) -> BTreeMap<SignedPermutation, f64> {
        self.values
            .iter()
            .map(|(w, v)| (w.clone(), v.to_f64()))
            .collect()
    }
}

/// Builds the representation spanned by a tableau family via (1/f, b).
pub fn build_representation<S: Scalar>(
    spec: &FamilySpec,
    norm: Normalization,
) -> Result<Representation<S>, AyError> {
    let family = GroupFamily::new(spec.kind, spec.rank())?;
    let tableaux = enumerate_family(spec)?;
    let index: BTreeMap<&SignedTableau, usize> =
        tableaux.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut gens = Vec::with_capacity(family.rank);
    for i in 0..family.rank {
        let mut diag = Vec::with_capacity(tableaux.len());
        let mut partner = Vec::with_capacity(tableaux.len());
        for t in &tableaux {
            let f = t.derived_vector()[i];
            debug_assert!(f != 0, "derived vector entry must be nonzero");
            diag.push(S::from_ratio(1, f));
            let u = t.act_gen(i);
            if u.is_standard() {
                let j = *index.get(&u).ok_or_else(|| {
                    AyError::FamilyNotClosed(format!(
                        "{spec}: s_{i} moves a basis tableau to a standard tableau outside the family"
                    ))
                })?;
                partner.push(Some((j, off_coefficient::<S>(norm, f)?)));
            } else {
                debug_assert!(f.abs() == 1, "non-standard swap must have f = ±1, got {f}");
                partner.push(None);
            }
        }
        gens.push(GenMatrix::Coupled(CoupledGen { diag, partner }));
    }
    Ok(Representation {
        family,
        norm,
        gens,
        basis: RepBasis::Tableaux(tableaux),
    })
}

/// Block-diagonal sum; parts must share family, normalization and backend.
pub fn direct_sum<S: Scalar>(parts: &[Representation<S>]) -> Result<Representation<S>, AyError> {
    let first = parts
        .first()
        .ok_or_else(|| AyError::InvalidSpec("direct sum of no parts".into()))?;
    let family = first.family;
    let norm = first.norm;
    if parts.iter().any(|p| p.family != family || p.norm != norm) {
        return Err(AyError::InvalidSpec(
            "direct sum parts must share family and normalization".into(),
        ));
    }
    let mut gens: Vec<CoupledGen<S>> = (0..family.rank)
        .map(|_| CoupledGen {
            diag: Vec::new(),
            partner: Vec::new(),
        })
        .collect();
    let mut all_tableaux = Some(Vec::new());
    let mut offset = 0usize;
    for part in parts {
        for (i, gen) in part.gens.iter().enumerate() {
            let GenMatrix::Coupled(c) = gen else {
                return Err(AyError::InvalidSpec(
                    "direct sum needs coupled (family) generators".into(),
                ));
            };
            gens[i].diag.extend(c.diag.iter().cloned());
            gens[i].partner.extend(
                c.partner
                    .iter()
                    .map(|p| p.as_ref().map(|(j, b)| (j + offset, b.clone()))),
            );
        }
        match (&mut all_tableaux, part.tableaux()) {
            (Some(acc), Some(t)) => acc.extend(t.iter().cloned()),
            (acc, _) => *acc = None,
        }
        offset += part.dim();
    }
    let basis = match all_tableaux {
        Some(t) => RepBasis::Tableaux(t),
        None => RepBasis::Anonymous(offset),
    };
    Ok(Representation {
        family,
        norm,
        gens: gens.into_iter().map(GenMatrix::Coupled).collect(),
        basis,
    })
}

/// Pointwise character equality; exact on the exact backend, within 1e-8
/// otherwise.
pub fn characters_equal<S: Scalar>(
    a: &Representation<S>,
    b: &Representation<S>,
) -> Result<bool, AyError> {
    if a.family != b.family {
        return Err(AyError::InvalidSpec(
            "character comparison across different groups".into(),
        ));
    }
    Ok(a.character()?.equals(&b.character()?, 1e-8))
}

/// A representation of S_n by generator matrices for t_1..t_{n-1}.
#[derive(Debug, Clone)]
pub struct SymRep<S> {
    pub n: usize,
    pub norm: Normalization,
    pub basis: Vec<HalfTableau>,
    pub gens: Vec<GenMatrix<S>>,
}

impl<S: Scalar> SymRep<S> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of a permutation of 1..n (one-line notation).
    pub fn matrix_of(&self, perm: &[usize]) -> Matrix<S> {
        let mut m = Matrix::identity(self.dim());
        for j in sym_reduced_word(perm) {
            m = self.gens[j - 1].right_mul(&m);
        }
        m
    }

    /// All S_n Coxeter relations, including m(t_i, t_{i+1}) = 3.
    pub fn verify_relations(&self) -> RelationReport {
        let dense: Vec<Matrix<S>> = self.gens.iter().map(|g| g.dense()).collect();
        let mut worst = 0.0f64;
        let mut ok = true;
        for i in 0..dense.len() {
            for j in i..dense.len() {
                let m = if i == j {
                    1
                } else if j == i + 1 {
                    3
                } else {
                    2
                };
                let mut p = Matrix::identity(self.dim());
                for _ in 0..m {
                    p = p.mul(&dense[i]).mul(&dense[j]);
                }
                let residual = p.residual_from_identity();
                worst = worst.max(residual);
                ok &= if S::EXACT {
                    p.is_identity()
                } else {
                    residual <= 1e-9
                };
            }
        }
        RelationReport {
            ok,
            worst_residual: worst,
        }
    }
}

/// One reduced word for a permutation in adjacent transpositions; labels are
/// 1-based, `p = t_{j_1}⋯t_{j_k}`.
fn sym_reduced_word(perm: &[usize]) -> Vec<usize> {
    let mut p = perm.to_vec();
    let n = p.len();
    let mut word = Vec::new();
    loop {
        let Some(j) = (1..n).find(|&j| p[j - 1] > p[j]) else {
            break;
        };
        p.swap(j - 1, j);
        word.push(j);
    }
    word.reverse();
    word
}

/// The (skew) Specht module of shape λ in Young orthogonal form: the basis
/// is the standard fillings by 1..n, and t_i acts with diagonal 1/h(i),
/// h(i) = c_{i+1} − c_i.
pub fn specht_yof<S: Scalar>(
    shape: &SkewShape,
    norm: Normalization,
) -> Result<SymRep<S>, AyError> {
    let n = shape.size();
    let boxes = shape.boxes();
    let mut basis: Vec<HalfTableau> = shape
        .standard_orders()
        .into_iter()
        .map(|order| {
            let mut entries = vec![0i32; n];
            for (k, &b) in order.iter().enumerate() {
                entries[b] = k as i32 + 1;
            }
            HalfTableau::new(shape.clone(), entries).expect("valid filling")
        })
        .collect();
    basis.sort();
    let index: BTreeMap<&HalfTableau, usize> =
        basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let content = |entries: &[i32], k: i32| -> i64 {
        let pos = entries.iter().position(|&e| e == k).unwrap();
        let (r, c) = boxes[pos];
        c as i64 - r as i64
    };
    let mut gens = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let mut diag = Vec::with_capacity(basis.len());
        let mut partner = Vec::with_capacity(basis.len());
        for t in &basis {
            let h = content(t.entries(), i as i32 + 1) - content(t.entries(), i as i32);
            diag.push(S::from_ratio(1, h));
            let swapped: Vec<i32> = t
                .entries()
                .iter()
                .map(|&e| {
                    if e == i as i32 {
                        i as i32 + 1
                    } else if e == i as i32 + 1 {
                        i as i32
                    } else {
                        e
                    }
                })
                .collect();
            let u = HalfTableau::new(shape.clone(), swapped).expect("valid filling");
            if u.is_standard() {
                let j = index[&u];
                partner.push(Some((j, off_coefficient::<S>(norm, h)?)));
            } else {
                debug_assert!(h.abs() == 1);
                partner.push(None);
            }
        }
        gens.push(GenMatrix::Coupled(CoupledGen { diag, partner }));
    }
    Ok(SymRep {
        n,
        norm,
        basis,
        gens,
    })
}

/// Classical block form of the representation induced from a parabolic copy
/// of S_n, over the minimal-length coset representatives.
///
/// For a generator s and coset σ_a there is a unique σ_b with
/// h = σ_b⁻¹·s·σ_a in the subgroup; block (b, a) is θ(h).
pub fn induce_classical<S: Scalar>(
    inner: &SymRep<S>,
    parabolic: Parabolic,
    family: GroupFamily,
) -> Result<Representation<S>, AyError> {
    if inner.n != family.rank {
        return Err(AyError::InvalidSpec(format!(
            "inner representation of S_{} cannot induce to rank {}",
            inner.n, family.rank
        )));
    }
    let cosets = family.min_coset_reps(parabolic)?;
    let inv: Vec<SignedPermutation> = cosets.iter().map(|s| s.inverse()).collect();
    let mut gens = Vec::with_capacity(family.rank);
    for i in 0..family.rank {
        let s = family.generator(i);
        let mut target = Vec::with_capacity(cosets.len());
        let mut mats = Vec::with_capacity(cosets.len());
        for sigma in &cosets {
            let u = s.multiply(sigma);
            let (b, h) = inv
                .iter()
                .enumerate()
                .find_map(|(b, si)| {
                    let h = si.multiply(&u);
                    subgroup_one_line(&h, parabolic).map(|p| (b, p))
                })
                .expect("cosets cover the group");
            target.push(b);
            mats.push(inner.matrix_of(&h));
        }
        gens.push(GenMatrix::Blocks(BlockGen {
            inner_dim: inner.dim(),
            target,
            mats,
        }));
    }
    Ok(Representation {
        family,
        norm: inner.norm,
        gens,
        basis: RepBasis::Cosets {
            reps: cosets,
            inner_dim: inner.dim(),
        },
    })
}

/// If w lies in the parabolic copy of S_n, its one-line notation as an
/// abstract S_n element (identifying the subgroup generators with
/// t_1..t_{n-1}).
///
/// S1 membership is an all-positive window; S0 is conjugate to S1 by the
/// sign change in position 1.
fn subgroup_one_line(w: &SignedPermutation, parabolic: Parabolic) -> Option<Vec<usize>> {
    let n = w.rank();
    let window: Vec<i32> = match parabolic {
        Parabolic::S1 => w.window().to_vec(),
        Parabolic::S0 => (1..=n as i32)
            .map(|k| {
                let v = w.apply(if k == 1 { -1 } else { k });
                if v.abs() == 1 {
                    -v
                } else {
                    v
                }
            })
            .collect(),
    };
    window
        .iter()
        .all(|&v| v > 0)
        .then(|| window.iter().map(|&v| v as usize).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;
    use crate::scalar::Rat;
    use crate::shapes::partitions;
    use crate::tableaux::{Sign, Variant};

    fn shape(outer: &[usize]) -> SkewShape {
        SkewShape::straight(outer.to_vec()).unwrap()
    }

    fn spec(
        kind: GroupKind,
        sh: &SkewShape,
        variant: Variant,
        sign: Option<Sign>,
    ) -> FamilySpec {
        FamilySpec::new(kind, sh.clone(), variant, sign).unwrap()
    }

    fn d_spec(sh: &SkewShape, variant: Variant, sign: Option<Sign>) -> FamilySpec {
        spec(GroupKind::D, sh, variant, sign)
    }

    /// ours[i][j] == paper[p(i)][p(j)] within tol.
    fn matches_permuted(ours: &Matrix<f64>, paper: &[[f64; 4]; 4], p: &[usize; 4], tol: f64) {
        for i in 0..4 {
            for j in 0..4 {
                let got = *ours.get(i, j);
                let want = paper[p[i]][p[j]];
                assert!(
                    (got - want).abs() <= tol,
                    "entry ({i},{j}): got {got}, want {want}"
                );
            }
        }
    }

    #[test]
    fn zero_plus_row_shape_matches_displayed_matrices() {
        let rep: Representation<f64> =
            build_representation(&d_spec(&shape(&[3]), Variant::Zero, Some(Sign::Plus)), Normalization::Orthogonal)
                .unwrap();
        assert_eq!(rep.dim(), 4);
        let s8 = 8f64.sqrt() / 3.0;
        let s3 = 3f64.sqrt() / 2.0;
        let paper_s0 = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, -1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        let paper_s1 = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0 / 3.0, s8],
            [0.0, 0.0, s8, -1.0 / 3.0],
        ];
        let paper_s2 = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.5, s3, 0.0],
            [0.0, s3, -0.5, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        // Our basis is (⊠; ÷ sorted by half): T_1, T_4, T_3, T_2 in the
        // paper's numbering.
        let p = [0usize, 3, 2, 1];
        matches_permuted(&rep.gens[0].dense(), &paper_s0, &p, 1e-12);
        matches_permuted(&rep.gens[1].dense(), &paper_s1, &p, 1e-12);
        matches_permuted(&rep.gens[2].dense(), &paper_s2, &p, 1e-12);
    }

    #[test]
    fn m1_plus_row_shape_matches_displayed_matrices() {
        let rep: Representation<f64> =
            build_representation(&d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)), Normalization::Orthogonal)
                .unwrap();
        let s8 = 8f64.sqrt() / 3.0;
        let s24 = 24f64.sqrt() / 5.0;
        let s15 = 15f64.sqrt() / 4.0;
        let paper_s0 = [
            [1.0 / 3.0, s8, 0.0, 0.0],
            [s8, -1.0 / 3.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        let paper_s1 = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 0.2, s24],
            [0.0, 0.0, s24, -0.2],
        ];
        let paper_s2 = [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 0.25, s15, 0.0],
            [0.0, s15, -0.25, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ];
        // Half-lex order is T_4, T_3, T_2, T_1.
        let p = [3usize, 2, 1, 0];
        matches_permuted(&rep.gens[0].dense(), &paper_s0, &p, 1e-12);
        matches_permuted(&rep.gens[1].dense(), &paper_s1, &p, 1e-12);
        matches_permuted(&rep.gens[2].dense(), &paper_s2, &p, 1e-12);
    }

    #[test]
    fn stochastic_columns_pair_one_minus_and_one_plus() {
        let rep: Representation<Rat> =
            build_representation(&d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        // Basis index 1 is the half (-3,-1,2) with f_1 = 5: expansion
        // coefficients (1/5, 4/5); its partner at index 0 gets (-1/5, 6/5).
        let g1 = rep.gens[1].dense();
        assert_eq!(*g1.get(1, 1), Rat::from_ratio(1, 5));
        assert_eq!(*g1.get(0, 1), Rat::from_ratio(4, 5));
        assert_eq!(*g1.get(0, 0), Rat::from_ratio(-1, 5));
        assert_eq!(*g1.get(1, 0), Rat::from_ratio(6, 5));
        // Each coupled block squares to the identity exactly.
        assert!(g1.mul(&g1).is_identity());
    }

    #[test]
    fn box_family_of_a_row_is_the_trivial_representation() {
        for n in 3..=5 {
            let rep: Representation<Rat> =
                build_representation(&d_spec(&shape(&[n]), Variant::Boxed, None), Normalization::Stochastic)
                    .unwrap();
            assert_eq!(rep.dim(), 1);
            for g in &rep.gens {
                assert!(g.dense().is_identity());
            }
        }
    }

    #[test]
    fn orthogonal_generators_are_symmetric_orthogonal_involutions() {
        let cases = [
            d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)),
            d_spec(&shape(&[2, 1]), Variant::Zero, Some(Sign::Minus)),
            spec(GroupKind::B, &shape(&[2, 1]), Variant::VBar, None),
        ];
        for fam in &cases {
            let rep: Representation<f64> =
                build_representation(fam, Normalization::Orthogonal).unwrap();
            for g in &rep.gens {
                let d = g.dense();
                assert!(d.max_abs_diff(&d.transpose()) <= 1e-12, "{fam}: not symmetric");
                assert!(d.mul(&d).residual_from_identity() <= 1e-12, "{fam}: not an involution");
            }
        }
    }

    #[test]
    fn stochastic_generators_are_exact_involutions() {
        for fam in [
            d_spec(&shape(&[2, 2]), Variant::M(2), Some(Sign::Minus)),
            spec(GroupKind::B, &shape(&[2, 1]), Variant::HBar, None),
        ] {
            let rep: Representation<Rat> =
                build_representation(&fam, Normalization::Stochastic).unwrap();
            for g in &rep.gens {
                let d = g.dense();
                assert!(d.mul(&d).is_identity(), "{fam}");
            }
        }
    }

    #[test]
    fn orthogonal_on_rational_backend_is_rejected() {
        let err = build_representation::<Rat>(
            &d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)),
            Normalization::Orthogonal,
        );
        assert!(err.is_err());
    }

    #[test]
    fn relations_hold_for_all_small_families() {
        for n in 2..=4 {
            for p in partitions(n) {
                let sh = shape(&p);
                let mut specs = vec![d_spec(&sh, Variant::Boxed, None)];
                for sign in [Sign::Plus, Sign::Minus] {
                    specs.push(d_spec(&sh, Variant::M(1), Some(sign)));
                    specs.push(d_spec(&sh, Variant::Zero, Some(sign)));
                }
                specs.push(spec(GroupKind::B, &sh, Variant::M(1), None));
                specs.push(spec(GroupKind::B, &sh, Variant::Zero, None));
                for fam in &specs {
                    let stoch: Representation<Rat> =
                        build_representation(fam, Normalization::Stochastic).unwrap();
                    let report = stoch.verify_coxeter_relations();
                    assert!(report.ok, "{fam} stochastic: residual {}", report.worst_residual);
                    let orth: Representation<f64> =
                        build_representation(fam, Normalization::Orthogonal).unwrap();
                    let report = orth.verify_coxeter_relations();
                    assert!(report.ok, "{fam} orthogonal: residual {}", report.worst_residual);
                }
            }
        }
    }

    #[test]
    fn characters_of_the_row_shape() {
        let zero: Representation<Rat> =
            build_representation(&d_spec(&shape(&[3]), Variant::Zero, Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        let m1: Representation<Rat> =
            build_representation(&d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        let d3 = GroupFamily::d(3);
        let chi_zero = zero.character().unwrap();
        let chi_m1 = m1.character().unwrap();
        assert_eq!(chi_zero.value(&d3.identity()), Some(&Rat::from_ratio(4, 1)));
        assert_eq!(chi_zero.value(&d3.generator(0)), Some(&Rat::from_ratio(2, 1)));
        assert_eq!(chi_m1.value(&d3.generator(0)), Some(&Rat::from_ratio(2, 1)));
        assert!(chi_zero.equals(&chi_m1, 0.0));
        assert!(characters_equal(&zero, &m1).unwrap());
    }

    #[test]
    fn stochastic_and_orthogonal_characters_agree() {
        for fam in [
            d_spec(&shape(&[2, 1]), Variant::M(1), Some(Sign::Plus)),
            spec(GroupKind::B, &shape(&[2]), Variant::Zero, None),
        ] {
            let stoch: Representation<Rat> =
                build_representation(&fam, Normalization::Stochastic).unwrap();
            let orth: Representation<f64> =
                build_representation(&fam, Normalization::Orthogonal).unwrap();
            let a = stoch.character().unwrap().to_f64_map();
            let b = orth.character().unwrap().to_f64_map();
            assert_eq!(a.len(), b.len());
            for (w, va) in &a {
                assert!((va - b[w]).abs() <= 1e-8, "{fam} at {w}");
            }
        }
    }

    #[test]
    fn characters_are_class_functions() {
        let fam = d_spec(&shape(&[2, 1]), Variant::M(1), Some(Sign::Minus));
        let rep: Representation<Rat> =
            build_representation(&fam, Normalization::Stochastic).unwrap();
        let chi = rep.character().unwrap();
        let d3 = GroupFamily::d(3);
        for w in d3.enumerate().unwrap() {
            for i in 0..3 {
                let s = d3.generator(i);
                let conj = s.multiply(&w).multiply(&s);
                assert_eq!(chi.value(&w), chi.value(&conj));
            }
        }
    }

    #[test]
    fn plus_and_minus_differ_in_even_rank() {
        let plus: Representation<Rat> =
            build_representation(&d_spec(&shape(&[4]), Variant::M(1), Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        let minus: Representation<Rat> =
            build_representation(&d_spec(&shape(&[4]), Variant::M(1), Some(Sign::Minus)), Normalization::Stochastic)
                .unwrap();
        assert!(!characters_equal(&plus, &minus).unwrap());
        assert!(characters_equal(&plus, &plus).unwrap());
    }

    #[test]
    fn direct_sum_reassembles_the_zero_family() {
        let sh = shape(&[3]);
        let boxed: Representation<Rat> =
            build_representation(&d_spec(&sh, Variant::Boxed, None), Normalization::Stochastic).unwrap();
        let vbar: Representation<Rat> =
            build_representation(&d_spec(&sh, Variant::VBar, Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        assert_eq!(vbar.dim(), 0);
        let hbar: Representation<Rat> =
            build_representation(&d_spec(&sh, Variant::HBar, Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        let sum = direct_sum(&[boxed, vbar, hbar]).unwrap();
        let zero: Representation<Rat> =
            build_representation(&d_spec(&sh, Variant::Zero, Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        assert_eq!(sum.dim(), 4);
        for (a, b) in sum.gens.iter().zip(&zero.gens) {
            assert_eq!(a.dense(), b.dense());
        }
        let single = direct_sum(std::slice::from_ref(&zero)).unwrap();
        assert_eq!(single.dim(), zero.dim());
    }

    #[test]
    fn specht_fixtures_for_the_hook_shape() {
        let rep: SymRep<f64> = specht_yof(&shape(&[2, 1]), Normalization::Orthogonal).unwrap();
        assert_eq!(rep.dim(), 2);
        // Basis order: (1,2,3) then (1,3,2). t_1 fixes the first vector.
        let g1 = rep.gens[0].dense();
        assert_eq!(*g1.get(0, 0), 1.0);
        let g2 = rep.gens[1].dense();
        let s3 = 3f64.sqrt() / 2.0;
        assert!((g2.get(0, 0) + 0.5).abs() < 1e-12);
        assert!((g2.get(1, 0) - s3).abs() < 1e-12);
        assert!((g2.get(1, 1) - 0.5).abs() < 1e-12);
        assert!(rep.verify_relations().ok);
    }

    #[test]
    fn specht_of_a_row_is_trivial() {
        let rep: SymRep<Rat> = specht_yof(&shape(&[4]), Normalization::Stochastic).unwrap();
        assert_eq!(rep.dim(), 1);
        for g in &rep.gens {
            assert!(g.dense().is_identity());
        }
    }

    #[test]
    fn specht_relations_hold_up_to_n5() {
        for n in 2..=5 {
            for p in partitions(n) {
                let rep: SymRep<Rat> =
                    specht_yof(&shape(&p), Normalization::Stochastic).unwrap();
                assert!(rep.verify_relations().ok, "{p:?}");
            }
        }
    }

    #[test]
    fn induced_trivial_rep_is_the_displayed_permutation_representation() {
        let inner: SymRep<f64> = specht_yof(&shape(&[3]), Normalization::Orthogonal).unwrap();
        let rep = induce_classical(&inner, Parabolic::S1, GroupFamily::d(3)).unwrap();
        assert_eq!(rep.dim(), 4);
        let expect = |pairs: &[(usize, usize)]| {
            let mut m = Matrix::<f64>::zero(4, 4);
            for k in 0..4 {
                m.set(k, k, 1.0);
            }
            for &(a, b) in pairs {
                m.set(a, a, 0.0);
                m.set(b, b, 0.0);
                m.set(a, b, 1.0);
                m.set(b, a, 1.0);
            }
            m
        };
        assert_eq!(rep.gens[0].dense(), expect(&[(0, 1)]));
        assert_eq!(rep.gens[1].dense(), expect(&[(2, 3)]));
        assert_eq!(rep.gens[2].dense(), expect(&[(1, 2)]));
        let chi = rep.character().unwrap();
        assert_eq!(chi.dim_f64(), 4.0);
    }

    #[test]
    fn induction_theorem_for_the_row_shape() {
        let inner: SymRep<Rat> = specht_yof(&shape(&[3]), Normalization::Stochastic).unwrap();
        let induced = induce_classical(&inner, Parabolic::S1, GroupFamily::d(3)).unwrap();
        let family: Representation<Rat> =
            build_representation(&d_spec(&shape(&[3]), Variant::M(1), Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        assert!(characters_equal(&induced, &family).unwrap());
    }

    #[test]
    fn induction_theorem_minus_side_via_s0() {
        let inner: SymRep<Rat> = specht_yof(&shape(&[2, 1]), Normalization::Stochastic).unwrap();
        let induced = induce_classical(&inner, Parabolic::S0, GroupFamily::d(3)).unwrap();
        let family: Representation<Rat> =
            build_representation(&d_spec(&shape(&[2, 1]), Variant::M(1), Some(Sign::Minus)), Normalization::Stochastic)
                .unwrap();
        assert!(characters_equal(&induced, &family).unwrap());
        // And it is NOT the plus side in even rank; in rank 3 they agree.
        let plus: Representation<Rat> =
            build_representation(&d_spec(&shape(&[2, 1]), Variant::M(1), Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        assert!(characters_equal(&induced, &plus).unwrap());
    }

    #[test]
    fn element_matrix_expansion_magnitudes() {
        // ρ_{σ3}(T_1) for λ=(2,1), m=1: |coefficient of T_1| = 1/10 and
        // |coefficient of T_1^{s_2}| = √3/10.
        let rep: Representation<f64> =
            build_representation(&d_spec(&shape(&[2, 1]), Variant::M(1), Some(Sign::Plus)), Normalization::Orthogonal)
                .unwrap();
        let basis = rep.tableaux().unwrap();
        let t1 = basis.iter().position(|t| t.entries() == [1, 2, 3]).unwrap();
        let t1s2 = basis.iter().position(|t| t.entries() == [1, 3, 2]).unwrap();
        let m = rep.element_matrix(&[2, 0]);
        assert!((m.get(t1, t1).abs() - 0.1).abs() < 1e-12);
        assert!((m.get(t1s2, t1).abs() - 3f64.sqrt() / 10.0).abs() < 1e-12);
        assert!(rep.element_matrix(&[]).is_identity());
        for i in 0..3 {
            assert!(rep.element_matrix(&[i, i]).residual_from_identity() < 1e-12);
        }
    }

    #[test]
    fn empty_family_builds_a_zero_module() {
        let rep: Representation<Rat> =
            build_representation(&d_spec(&shape(&[3]), Variant::VBar, Some(Sign::Plus)), Normalization::Stochastic)
                .unwrap();
        assert_eq!(rep.dim(), 0);
        assert!(rep.verify_coxeter_relations().ok);
        let chi = rep.character().unwrap();
        assert!(chi.values.values().all(|v| v.is_zero()));
    }
}
