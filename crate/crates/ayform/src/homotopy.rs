//! The continuous family g_i(x) interpolating the discrete representations.
//!
//! The basis is the set R of standard half fillings of λ of one parity. Box
//! contents of the zero placement are shifted by x+1, an entry ±k in a box
//! of content c contributes ±(c + x + 1) to the running content vector, and
//! the generator action keeps the (1/f, √(1−1/f²)) shape. Integer x = m−1
//! recovers the tableau representation for lower-left content m (x = −1 is
//! the zero-diagonal one), and x → ∞ gives the classical induced form.

use serde::{Deserialize, Serialize};

use crate::error::AyError;
use crate::group::{GroupFamily, GroupKind, SignedPermutation};
use crate::matrix::{CoupledGen, GenMatrix, Matrix};
use crate::rep::{build_representation, characters_equal, direct_sum, Normalization, RepBasis, Representation};
use crate::scalar::Rat;
use crate::shapes::SkewShape;
use crate::tableaux::{enumerate_halves, FamilySpec, HalfTableau, Sign, Variant};

/// One derived-vector entry of the parameterized contents: either constant
/// in x, or ±(csum + 2x + 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FDesc {
    Const(i64),
    Linear { csum: i64, sign: i64 },
}

impl FDesc {
    fn at(self, x: f64) -> f64 {
        match self {
            FDesc::Const(v) => v as f64,
            FDesc::Linear { csum, sign } => sign as f64 * (csum as f64 + 2.0 * x + 2.0),
        }
    }
}

/// The matrix family g_i(x) for one shape and parity, x ≥ −1.
#[derive(Debug, Clone)]
pub struct HomotopyFamily {
    pub shape: SkewShape,
    pub sign: Sign,
    basis: Vec<HalfTableau>,
    fdesc: Vec<Vec<FDesc>>,
    partner: Vec<Vec<Option<usize>>>,
}

impl HomotopyFamily {
    pub fn new(shape: SkewShape, sign: Sign) -> Result<Self, AyError> {
        let n = shape.size();
        if n < 2 {
            return Err(AyError::InvalidSpec(
                "the type-D homotopy needs at least 2 boxes".into(),
            ));
        }
        let family = GroupFamily::d(n);
        let basis = enumerate_halves(&shape, Some(sign));
        let (h, cl) = shape.lower_left();
        let cont0 = |r: usize, c: usize| (c as i64 - cl as i64) - (r as i64 - h as i64);
        // Per basis element: (content of the box of ±k, sign of the entry).
        let label_data: Vec<Vec<(i64, i64)>> = basis
            .iter()
            .map(|half| {
                let mut data = vec![(0i64, 0i64); n];
                for (&(r, c), &e) in shape.boxes().iter().zip(half.entries()) {
                    data[(e.unsigned_abs() - 1) as usize] = (cont0(r, c), e.signum() as i64);
                }
                data
            })
            .collect();
        let mut fdesc = vec![Vec::with_capacity(basis.len()); n];
        let mut partner = vec![Vec::with_capacity(basis.len()); n];
        for (k, half) in basis.iter().enumerate() {
            let data = &label_data[k];
            for i in 0..n {
                let desc = if i == 0 {
                    let ((c1, s1), (c2, s2)) = (data[0], data[1]);
                    if s1 != s2 {
                        FDesc::Const(s1 * c1 + s2 * c2)
                    } else {
                        FDesc::Linear {
                            csum: c1 + c2,
                            sign: s1,
                        }
                    }
                } else {
                    let ((ca, sa), (cb, sb)) = (data[i - 1], data[i]);
                    if sa == sb {
                        FDesc::Const(sa * (cb - ca))
                    } else {
                        FDesc::Linear {
                            csum: ca + cb,
                            sign: sb,
                        }
                    }
                };
                let moved = half.act(&family.generator(i));
                let p = if moved.is_standard() {
                    Some(
                        basis
                            .binary_search(&moved)
                            .expect("parity is preserved, so the swap stays in the basis"),
                    )
                } else {
                    debug_assert!(matches!(desc, FDesc::Const(v) if v.abs() == 1));
                    None
                };
                fdesc[i].push(desc);
                partner[i].push(p);
            }
        }
        Ok(HomotopyFamily {
            shape,
            sign,
            basis,
            fdesc,
            partner,
        })
    }

    pub fn group(&self) -> GroupFamily {
        GroupFamily::d(self.shape.size())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[HalfTableau] {
        &self.basis
    }

    fn gen_at(&self, i: usize, x: f64) -> CoupledGen<f64> {
        let mut diag = Vec::with_capacity(self.dim());
        let mut partner = Vec::with_capacity(self.dim());
        for k in 0..self.dim() {
            let f = self.fdesc[i][k].at(x);
            debug_assert!(f.abs() >= 1.0 - 1e-12, "|f| < 1 at x = {x}");
            diag.push(1.0 / f);
            partner.push(
                self.partner[i][k].map(|j| (j, (1.0 - 1.0 / (f * f)).max(0.0).sqrt())),
            );
        }
        CoupledGen { diag, partner }
    }

    /// The matrices g_i(x+1) for all generators. `x = m−1` matches the
    /// discrete family with lower-left content m.
    pub fn family_matrices(&self, x: f64) -> Result<Vec<Matrix<f64>>, AyError> {
        Ok(self.representation_at(x)?.gens.iter().map(|g| g.dense()).collect())
    }

    /// Same matrices packaged as a representation, so characters and
    /// relation checks can be reused.
    pub fn representation_at(&self, x: f64) -> Result<Representation<f64>, AyError> {
        if !(x >= -1.0) {
            return Err(AyError::InvalidSpec(format!(
                "homotopy parameter x = {x} must be ≥ −1"
            )));
        }
        let gens = (0..self.shape.size())
            .map(|i| GenMatrix::Coupled(self.gen_at(i, x)))
            .collect();
        Ok(Representation {
            family: self.group(),
            norm: Normalization::Orthogonal,
            gens,
            basis: RepBasis::Anonymous(self.dim()),
        })
    }

    /// The x → ∞ limit: x-dependent coefficient pairs become (0, 1),
    /// constant ones stay. This is the classical induced form.
    pub fn limit_representation(&self) -> Representation<f64> {
        let n = self.shape.size();
        let gens = (0..n)
            .map(|i| {
                let mut diag = Vec::with_capacity(self.dim());
                let mut partner = Vec::with_capacity(self.dim());
                for k in 0..self.dim() {
                    match self.fdesc[i][k] {
                        FDesc::Const(f) => {
                            diag.push(1.0 / f as f64);
                            partner.push(self.partner[i][k].map(|j| {
                                (j, (1.0 - 1.0 / (f * f) as f64).max(0.0).sqrt())
                            }));
                        }
                        FDesc::Linear { .. } => {
                            diag.push(0.0);
                            partner.push(Some((
                                self.partner[i][k].expect("x-dependent entries always couple"),
                                1.0,
                            )));
                        }
                    }
                }
                GenMatrix::Coupled(CoupledGen { diag, partner })
            })
            .collect();
        Representation {
            family: self.group(),
            norm: Normalization::Orthogonal,
            gens,
            basis: RepBasis::Anonymous(self.dim()),
        }
    }

    pub fn limit_matrices(&self) -> Vec<Matrix<f64>> {
        self.limit_representation()
            .gens
            .iter()
            .map(|g| g.dense())
            .collect()
    }

    /// Max-norm residual of (g_i g_j)^{m(i,j)} − I over all pairs and
    /// sample points.
    pub fn verify_relations_on_grid(&self, xs: &[f64]) -> Result<GridReport, AyError> {
        let mut worst = 0.0f64;
        for &x in xs {
            let rep = self.representation_at(x)?;
            let report = rep.verify_coxeter_relations();
            worst = worst.max(report.worst_residual);
        }
        Ok(GridReport {
            ok: worst <= 1e-8,
            worst_residual: worst,
        })
    }

    /// Trace of g along one stored reduced word of w, per sample point.
    pub fn character_curve(
        &self,
        w: &SignedPermutation,
        xs: &[f64],
    ) -> Result<Vec<f64>, AyError> {
        let word = w.reduced_word(GroupKind::D);
        let mut out = Vec::with_capacity(xs.len());
        for &x in xs {
            let rep = self.representation_at(x)?;
            out.push(rep.element_matrix(&word).trace());
        }
        Ok(out)
    }

    /// Index of each basis half inside the discrete family enumeration with
    /// lower-left content m (m = 0 means the zero-diagonal union).
    pub fn alignment(&self, m: u32) -> Result<Vec<usize>, AyError> {
        let spec = self.family_spec(m)?;
        let tableaux = crate::tableaux::enumerate_family(&spec)?;
        self.basis
            .iter()
            .map(|half| {
                let lifted = if m == 0 {
                    crate::tableaux::lift_zero(half)?
                } else {
                    crate::tableaux::lift_m(half, m)?
                };
                tableaux
                    .iter()
                    .position(|t| *t == lifted)
                    .ok_or_else(|| AyError::FamilyNotClosed(format!("{spec}")))
            })
            .collect()
    }

    pub fn family_spec(&self, m: u32) -> Result<FamilySpec, AyError> {
        let variant = if m == 0 { Variant::Zero } else { Variant::M(m) };
        FamilySpec::new(GroupKind::D, self.shape.clone(), variant, Some(self.sign))
    }
}

/// Outcome of a sampled relation check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridReport {
    pub ok: bool,
    pub worst_residual: f64,
}

/// Exact check of the decomposition ρ^{λ,⊠} ⊕ ρ^{λ,·|·,±} ⊕ ρ^{λ,÷,±} ≅
/// ρ^{λ,m,±}: dimensions and characters over the stochastic backend.
pub fn verify_decomposition(shape: &SkewShape, sign: Sign, m: u32) -> Result<bool, AyError> {
    let spec = |variant: Variant, s: Option<Sign>| {
        FamilySpec::new(GroupKind::D, shape.clone(), variant, s)
    };
    let boxed = build_representation::<Rat>(&spec(Variant::Boxed, None)?, Normalization::Stochastic)?;
    let vbar = build_representation::<Rat>(&spec(Variant::VBar, Some(sign))?, Normalization::Stochastic)?;
    let hbar = build_representation::<Rat>(&spec(Variant::HBar, Some(sign))?, Normalization::Stochastic)?;
    let sum = direct_sum(&[boxed, vbar, hbar])?;
    let m_rep = build_representation::<Rat>(&spec(Variant::M(m), Some(sign))?, Normalization::Stochastic)?;
    let expected_dim = (1usize << (shape.size() - 1)) * shape.count_standard() as usize;
    Ok(sum.dim() == expected_dim
        && m_rep.dim() == expected_dim
        && characters_equal(&sum, &m_rep)?)
}

/// Type-B analogue: ρ^{λ,·|·} ⊕ ρ^{λ,÷} ≅ ρ^{λ,m}.
pub fn verify_decomposition_b(shape: &SkewShape, m: u32) -> Result<bool, AyError> {
    let spec =
        |variant: Variant| FamilySpec::new(GroupKind::B, shape.clone(), variant, None);
    let vbar = build_representation::<Rat>(&spec(Variant::VBar)?, Normalization::Stochastic)?;
    let hbar = build_representation::<Rat>(&spec(Variant::HBar)?, Normalization::Stochastic)?;
    let sum = direct_sum(&[vbar, hbar])?;
    let m_rep = build_representation::<Rat>(&spec(Variant::M(m))?, Normalization::Stochastic)?;
    let expected_dim = (1usize << shape.size()) * shape.count_standard() as usize;
    Ok(sum.dim() == expected_dim
        && m_rep.dim() == expected_dim
        && characters_equal(&sum, &m_rep)?)
}
