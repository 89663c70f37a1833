//! Minimal abstract-Young cells from content vectors.
//!
//! K^c = {w : ℓ(tw) > ℓ(w) for every reflection t with ⟨c,α_t⟩ = ±1},
//! materialized by exhaustive filtering; the tableau characterization
//! π ∈ K^c ⟺ T^{π⁻¹} standard is the independent oracle.

use std::collections::BTreeSet;

use crate::error::AyError;
use crate::group::{GroupFamily, Reflection, SignedPermutation};
use crate::tableaux::SignedTableau;

/// A materialized cell with its defining data.
#[derive(Debug, Clone)]
pub struct Cell {
    pub family: GroupFamily,
    /// Doubled content vector (2c_1, …, 2c_n).
    pub content2: Vec<i64>,
    /// The reflections with ⟨c,α_t⟩ = ±1 cutting the cell out.
    pub a_set: Vec<Reflection>,
    /// Cell elements in canonical window order.
    pub elements: Vec<SignedPermutation>,
}

impl Cell {
    /// Builds K^c from a doubled content vector by exhaustive filtering.
    pub fn from_content2(family: GroupFamily, content2: Vec<i64>) -> Result<Cell, AyError> {
        if content2.len() != family.rank {
            return Err(AyError::InvalidSpec(format!(
                "content vector of length {} for rank {}",
                content2.len(),
                family.rank
            )));
        }
        let a_set: Vec<Reflection> = family
            .reflections()
            .into_iter()
            .filter(|t| t.ay_pairing2(&content2).abs() == 2)
            .collect();
        let cutters: Vec<SignedPermutation> =
            a_set.iter().map(|t| t.to_element(family.rank)).collect();
        let elements = family
            .enumerate()?
            .into_iter()
            .filter(|w| {
                let lw = w.length(family.kind);
                cutters
                    .iter()
                    .all(|t| t.multiply(w).length(family.kind) > lw)
            })
            .collect();
        Ok(Cell {
            family,
            content2,
            a_set,
            elements,
        })
    }

    /// Convenience constructor from integer contents.
    pub fn from_content(family: GroupFamily, content: &[i64]) -> Result<Cell, AyError> {
        Self::from_content2(family, content.iter().map(|c| 2 * c).collect())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, w: &SignedPermutation) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    /// Interior and boundary reflection sets (T_K, T_∂K): conjugates wsw⁻¹
    /// by whether the neighbor ws stays in the cell.
    pub fn boundary_reflections(&self) -> (BTreeSet<Reflection>, BTreeSet<Reflection>) {
        let mut interior = BTreeSet::new();
        let mut boundary = BTreeSet::new();
        for w in &self.elements {
            let winv = w.inverse();
            for i in 0..self.family.rank {
                let ws = w.right_mul_gen(i, self.family.kind);
                let conj = w
                    .multiply(&self.family.generator(i))
                    .multiply(&winv);
                let t = Reflection::from_element(&conj)
                    .expect("a conjugate of a generator is a reflection");
                if self.contains(&ws) {
                    interior.insert(t);
                } else {
                    boundary.insert(t);
                }
            }
        }
        (interior, boundary)
    }

    /// K-genericity of the content vector: pairings off {0,±1} on interior
    /// reflections, exactly ±1 on boundary ones, and the m(s,t)=3 corner
    /// condition.
    pub fn is_generic(&self) -> bool {
        let (interior, boundary) = self.boundary_reflections();
        for t in &interior {
            if matches!(t.ay_pairing2(&self.content2).abs(), 0 | 2) {
                return false;
            }
        }
        for t in &boundary {
            if t.ay_pairing2(&self.content2).abs() != 2 {
                return false;
            }
        }
        // Corner condition: braid pairs leaving the cell together must agree.
        for w in &self.elements {
            let winv = w.inverse();
            for i in 0..self.family.rank {
                for j in i + 1..self.family.rank {
                    if self.family.coxeter_m(i, j) != 3 {
                        continue;
                    }
                    let wi = w.right_mul_gen(i, self.family.kind);
                    let wj = w.right_mul_gen(j, self.family.kind);
                    if self.contains(&wi) || self.contains(&wj) {
                        continue;
                    }
                    let pairing = |g: usize| {
                        let conj = w.multiply(&self.family.generator(g)).multiply(&winv);
                        Reflection::from_element(&conj)
                            .expect("conjugate of a generator")
                            .ay_pairing2(&self.content2)
                    };
                    if pairing(i) != pairing(j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All-geodesic convexity of the cell in the right Cayley graph.
    pub fn is_convex(&self) -> Result<bool, AyError> {
        is_convex_subset(self.family, &self.elements)
    }
}

/// The tableau side of the cell theorem: {π : T^{π⁻¹} is standard}.
pub fn cell_via_tableaux(t: &SignedTableau) -> Result<Vec<SignedPermutation>, AyError> {
    let family = GroupFamily::new(t.kind(), t.rank())?;
    Ok(family
        .enumerate()?
        .into_iter()
        .filter(|w| t.act(&w.inverse()).is_standard())
        .collect())
}

/// Whether every geodesic between members stays inside the subset.
///
/// Distances in the right Cayley graph are d(x,y) = ℓ(x⁻¹y), so v sits on a
/// geodesic from x to y exactly when ℓ(x⁻¹v) + ℓ(v⁻¹y) = ℓ(x⁻¹y).
pub fn is_convex_subset(
    family: GroupFamily,
    subset: &[SignedPermutation],
) -> Result<bool, AyError> {
    if subset.len() > 10_000 {
        return Err(AyError::GuardExceeded(format!(
            "convexity check over {} elements",
            subset.len()
        )));
    }
    let kind = family.kind;
    let members: BTreeSet<&SignedPermutation> = subset.iter().collect();
    let outside: Vec<SignedPermutation> = family
        .enumerate()?
        .into_iter()
        .filter(|w| !members.contains(w))
        .collect();
    let inv: Vec<SignedPermutation> = subset.iter().map(|w| w.inverse()).collect();
    let outside_inv: Vec<SignedPermutation> = outside.iter().map(|w| w.inverse()).collect();
    for xinv in &inv {
        for y in subset {
            let dxy = xinv.multiply(y).length(kind);
            for (v, vinv) in outside.iter().zip(&outside_inv) {
                let dxv = xinv.multiply(v).length(kind);
                if dxv < dxy && dxv + vinv.multiply(y).length(kind) == dxy {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupKind;
    use crate::shapes::{partitions, SkewShape};
    use crate::tableaux::{enumerate_family, FamilySpec, Sign, Variant};

    fn shape(outer: &[usize]) -> SkewShape {
        SkewShape::straight(outer.to_vec()).unwrap()
    }

    fn d_corpus(n: usize) -> Vec<crate::tableaux::SignedTableau> {
        let mut out = Vec::new();
        for p in partitions(n) {
            let sh = shape(&p);
            let mut specs = vec![FamilySpec::new(GroupKind::D, sh.clone(), Variant::Boxed, None).unwrap()];
            for sign in [Sign::Plus, Sign::Minus] {
                for variant in [Variant::M(1), Variant::VBar, Variant::HBar] {
                    specs.push(FamilySpec::new(GroupKind::D, sh.clone(), variant, Some(sign)).unwrap());
                }
            }
            for spec in specs {
                out.extend(enumerate_family(&spec).unwrap());
            }
        }
        out
    }

    #[test]
    fn single_tableau_cells() {
        let d3 = GroupFamily::d(3);
        let cell = Cell::from_content(d3, &[0, 1, 2]).unwrap();
        assert_eq!(cell.len(), 1);
        assert!(cell.elements[0].is_identity());
        let (interior, boundary) = cell.boundary_reflections();
        assert!(interior.is_empty());
        let gens: BTreeSet<Reflection> = (0..3)
            .map(|i| Reflection::from_element(&d3.generator(i)).unwrap())
            .collect();
        assert_eq!(boundary, gens);
    }

    #[test]
    fn cell_sizes_match_family_sizes() {
        let d3 = GroupFamily::d(3);
        let cell = Cell::from_content(d3, &[1, 2, 3]).unwrap();
        assert_eq!(cell.len(), 4);
        let (_, boundary) = cell.boundary_reflections();
        assert!(boundary.contains(&Reflection::new(1, 2).unwrap()));
        assert!(boundary.contains(&Reflection::new(2, 3).unwrap()));

        let boxed = enumerate_family(
            &FamilySpec::new(GroupKind::D, shape(&[2, 1]), Variant::Boxed, None).unwrap(),
        )
        .unwrap();
        let cell = Cell::from_content2(d3, boxed[0].content2_vector()).unwrap();
        assert_eq!(cell.len(), 5);
    }

    #[test]
    fn tableau_characterization_matches_cells() {
        for n in 2..=3 {
            let family = GroupFamily::d(n);
            for t in d_corpus(n) {
                let via_tableaux = cell_via_tableaux(&t).unwrap();
                let cell = Cell::from_content2(family, t.content2_vector()).unwrap();
                assert_eq!(
                    cell.elements, via_tableaux,
                    "{:?} placed {:?}",
                    t.entries(),
                    t.placement()
                );
                assert!(cell.contains(&family.identity()));
                assert!(cell.is_generic(), "{:?}", t.entries());
                assert!(cell.is_convex().unwrap());
                let (interior, boundary) = cell.boundary_reflections();
                assert!(interior.is_disjoint(&boundary));
            }
        }
    }

    #[test]
    fn neighbor_membership_follows_the_derived_vector() {
        let family = GroupFamily::d(3);
        for t in d_corpus(3) {
            let cell = Cell::from_content2(family, t.content2_vector()).unwrap();
            let f = t.derived_vector();
            // At the identity, the s_i-neighbor lies in the cell iff the
            // swap keeps the tableau standard iff f_i ≠ ±1.
            for i in 0..3 {
                let neighbor = family.generator(i);
                assert_eq!(cell.contains(&neighbor), f[i].abs() != 1);
            }
        }
    }

    #[test]
    fn cells_via_tableaux_count_the_family() {
        for spec in [
            FamilySpec::new(GroupKind::D, shape(&[3]), Variant::M(1), Some(Sign::Plus)).unwrap(),
            FamilySpec::new(GroupKind::D, shape(&[2, 1]), Variant::VBar, Some(Sign::Minus)).unwrap(),
        ] {
            let fam = enumerate_family(&spec).unwrap();
            for t in &fam {
                assert_eq!(cell_via_tableaux(t).unwrap().len(), fam.len());
            }
        }
    }

    #[test]
    fn degenerate_and_generic_contents() {
        let d3 = GroupFamily::d(3);
        let zero_pair = Cell::from_content(d3, &[0, 0, 1]).unwrap();
        assert!(!zero_pair.is_generic());
        let wide = Cell::from_content(d3, &[5, 10, 20]).unwrap();
        assert_eq!(wide.len() as u128, d3.order());
        assert!(wide.is_generic());
        assert!(wide.is_convex().unwrap());
    }

    #[test]
    fn two_point_sets_are_not_convex() {
        let d3 = GroupFamily::d(3);
        let far = d3.generator(0).multiply(&d3.generator(2));
        assert_eq!(far.length(GroupKind::D), 2);
        let subset = vec![d3.identity(), far];
        assert!(!is_convex_subset(d3, &subset).unwrap());
        assert!(is_convex_subset(d3, &[d3.identity()]).unwrap());
    }

    #[test]
    fn b_cells_match_tableaux_experimentally() {
        // The B-side of the cell theorem is implicit in the construction;
        // with the sign-change pairing 2c_j it holds on the small corpus.
        let family = GroupFamily::b(3);
        for p in partitions(3) {
            let sh = shape(&p);
            for variant in [Variant::M(1), Variant::VBar, Variant::HBar] {
                let spec = FamilySpec::new(GroupKind::B, sh.clone(), variant, None).unwrap();
                for t in enumerate_family(&spec).unwrap() {
                    let via = cell_via_tableaux(&t).unwrap();
                    let cell = Cell::from_content2(family, t.content2_vector()).unwrap();
                    assert_eq!(cell.elements, via, "{:?} {:?}", t.entries(), t.placement());
                }
            }
        }
    }
}
