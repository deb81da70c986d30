//! Faces, facets, neighborliness and matroid-polytope tests for acyclic
//! uniform chirotopes.
//!
//! Uniform matroid polytopes have simplicial boundaries, so "S is a face" is
//! tested as "S is contained in some facet". The covector closure in
//! [`covectors_brute`] exists as the independent cross-check oracle for that
//! shortcut on small instances.

use std::collections::BTreeSet;

use crate::chirotope::Chirotope;
use crate::error::OmError;
use crate::sign::{Sign, SignVector};
use crate::subsets::SubsetIndex;

/// The facets of a matroid polytope: zero sets of its non-negative
/// cocircuits, as sorted (r-1)-subsets in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetSet {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl FacetSet {
    pub fn new(n: usize, mut sets: Vec<Vec<usize>>) -> FacetSet {
        for s in &mut sets {
            s.sort_unstable();
        }
        sets.sort();
        sets.dedup();
        FacetSet { n, sets }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> {
        self.sets.iter().map(|s| s.as_slice())
    }

    pub fn masks(&self) -> Vec<u32> {
        self.sets
            .iter()
            .map(|s| s.iter().fold(0u32, |m, &x| m | (1 << x)))
            .collect()
    }

    /// JSON form: array of sorted element lists, 1-based.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sets
                .iter()
                .map(|s| {
                    serde_json::Value::Array(
                        s.iter().map(|&x| serde_json::json!(x + 1)).collect(),
                    )
                })
                .collect(),
        )
    }
}

/// One representative per non-negative cocircuit pair: `C^H` if all its
/// nonzero entries are positive, `-C^H` if all are negative.
pub fn nonneg_cocircuits(chi: &Chirotope) -> Vec<SignVector> {
    let ix = SubsetIndex::new(chi.n(), chi.rank() - 1);
    let mut out = Vec::new();
    for h in ix.iter() {
        let c = chi.cocircuit(&h).unwrap();
        if c.is_nonnegative() {
            out.push(c);
        } else if c.is_nonpositive() {
            out.push(c.negate());
        }
    }
    out
}

/// Zero sets of the non-negative cocircuits.
pub fn facets(chi: &Chirotope) -> FacetSet {
    FacetSet::new(
        chi.n(),
        nonneg_cocircuits(chi).iter().map(|c| c.zero_set()).collect(),
    )
}

/// True iff every circuit has at least two positive and two negative
/// entries; for uniform chirotopes this is "acyclic and every element
/// extreme".
pub fn is_matroid_polytope(chi: &Chirotope) -> bool {
    if chi.n() == chi.rank() {
        return true;
    }
    let ix = SubsetIndex::new(chi.n(), chi.rank() + 1);
    for l in ix.iter() {
        let c = chi.circuit(&l).unwrap();
        let pos = c.iter().filter(|&s| s == Sign::Plus).count();
        let neg = c.iter().filter(|&s| s == Sign::Minus).count();
        if pos < 2 || neg < 2 {
            return false;
        }
    }
    true
}

/// k-neighborliness: a matroid polytope in which every k-subset of the
/// ground set lies in some facet.
pub fn is_k_neighborly(chi: &Chirotope, k: usize) -> Result<bool, OmError> {
    let max = (chi.rank() - 1) / 2;
    if k < 1 || k > max.max(1) {
        return Err(OmError::KOutOfRange { k, max });
    }
    Ok(is_matroid_polytope(chi) && subsets_covered(&facets(chi), k))
}

/// `is_k_neighborly` with `k = floor((r-1)/2)`; for ranks 1 and 2 this is
/// just the matroid-polytope test.
pub fn is_neighborly(chi: &Chirotope) -> bool {
    let k = (chi.rank() - 1) / 2;
    if k == 0 {
        return is_matroid_polytope(chi);
    }
    is_matroid_polytope(chi) && subsets_covered(&facets(chi), k)
}

/// Every k-subset of the ground set is contained in some facet mask.
pub(crate) fn subsets_covered(facets: &FacetSet, k: usize) -> bool {
    let masks = facets.masks();
    masks_cover(&masks, facets.ground_size(), k)
}

pub fn masks_cover(masks: &[u32], n: usize, k: usize) -> bool {
    SubsetIndex::new(n, k).iter().all(|s| {
        let sm = s.iter().fold(0u32, |m, &x| m | (1 << x));
        masks.iter().any(|&f| f & sm == sm)
    })
}

const COVECTOR_GUARD: usize = 9;

/// The full covector set, as the closure of the cocircuits under
/// composition plus the zero vector. Oracle use only; guarded by size.
pub fn covectors_brute(chi: &Chirotope) -> Result<BTreeSet<SignVector>, OmError> {
    if chi.n() > COVECTOR_GUARD {
        return Err(OmError::SizeGuard {
            n: chi.n(),
            limit: COVECTOR_GUARD,
        });
    }
    let ix = SubsetIndex::new(chi.n(), chi.rank() - 1);
    let mut cocircuits = Vec::new();
    for h in ix.iter() {
        let c = chi.cocircuit(&h).unwrap();
        cocircuits.push(c.negate());
        cocircuits.push(c);
    }
    let mut out: BTreeSet<SignVector> = BTreeSet::new();
    out.insert(SignVector::zero(chi.n()));
    let mut frontier: Vec<SignVector> = cocircuits.clone();
    for c in &cocircuits {
        out.insert(c.clone());
    }
    while let Some(v) = frontier.pop() {
        for c in &cocircuits {
            let w = v.compose(c);
            if out.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{gale_evenness_facets, moment_curve};

    fn cyclic(n: usize, d: usize) -> Chirotope {
        Chirotope::from_points(&moment_curve(n, d)).unwrap()
    }

    #[test]
    fn simplex_has_all_facets() {
        let chi = Chirotope::simplex(5);
        assert_eq!(nonneg_cocircuits(&chi).len(), 5);
        assert_eq!(facets(&chi).len(), 5);
        assert!(is_matroid_polytope(&chi));
    }

    #[test]
    fn cyclic_facets_match_gale_evenness() {
        let chi = cyclic(8, 4);
        let fs = facets(&chi);
        let expected = gale_evenness_facets(8, 4);
        assert_eq!(fs.iter().map(<[usize]>::to_vec).collect::<Vec<_>>(), expected);
        assert_eq!(fs.len(), 20);
    }

    #[test]
    fn totally_cyclic_configuration_has_no_facets() {
        // Four plane vectors that positively span.
        let chi = Chirotope::from_vectors(&[
            vec![3, 1],
            vec![1, 3],
            vec![-3, 2],
            vec![-2, -3],
        ])
        .unwrap();
        assert!(chi.is_gp_consistent());
        assert_eq!(facets(&chi).len(), 0);
    }

    #[test]
    fn cyclic_neighborliness_boundary() {
        let chi = cyclic(8, 4);
        assert!(is_k_neighborly(&chi, 2).unwrap());
        assert!(is_k_neighborly(&chi, 3).is_err());
        assert!(is_neighborly(&chi));
        // No facet of C(4,8) contains the 0-based triple {0,2,4}.
        let fs = facets(&chi);
        assert!(!fs.iter().any(|f| [0, 2, 4].iter().all(|x| f.contains(x))));
    }

    #[test]
    fn interior_point_is_not_a_polytope() {
        let pts = vec![vec![0, 0], vec![4, 0], vec![0, 4], vec![1, 1]];
        let chi = Chirotope::from_points(&pts).unwrap();
        assert!(!is_matroid_polytope(&chi));
    }

    #[test]
    fn non_neighborly_rank5_instance() {
        // Bipyramid over a 3-simplex direction: 7 generic points where two
        // opposite apexes prevent the edge between them from being a face.
        let pts = vec![
            vec![0, 0, 0, 0],
            vec![12, 0, 0, 0],
            vec![0, 12, 0, 0],
            vec![0, 0, 12, 0],
            vec![3, 3, 3, 11],
            vec![3, 4, 3, -10],
            vec![25, 26, 27, 1],
        ];
        let chi = Chirotope::from_points(&pts).unwrap();
        assert!(!is_neighborly(&chi) || !is_matroid_polytope(&chi));
    }

    #[test]
    fn covector_closure_rank1() {
        let chi = Chirotope::new(1, 2, [Sign::Plus, Sign::Plus]).unwrap();
        let cov = covectors_brute(&chi).unwrap();
        let strings: Vec<String> = cov.iter().map(|v| v.to_string()).collect();
        assert_eq!(strings, vec!["--", "00", "++"]);
    }

    #[test]
    fn hexagon_covectors_match_sphere_face_count() {
        // A rank-3 uniform arrangement of n great circles has 2*C(n,2)
        // vertices, 2n(n-1) edges and n(n-1)+2 cells; covectors add the zero
        // vector. For n=6: 30 + 60 + 32 + 1 = 123.
        let a = covectors_brute(&cyclic(6, 2)).unwrap();
        assert_eq!(a.len(), 123);
        // Axioms on the closure: negation and composition closure.
        for v in &a {
            assert!(a.contains(&v.negate()));
            for w in a.iter().take(40) {
                assert!(a.contains(&v.compose(w)));
            }
        }
    }

    #[test]
    fn face_test_equivalence_small() {
        // "S is a face" == "S is contained in a facet" for uniform matroid
        // polytopes, cross-checked against the covector oracle.
        for (n, d) in [(6, 2), (6, 4), (7, 4)] {
            let chi = cyclic(n, d);
            let cov = covectors_brute(&chi).unwrap();
            let fs = facets(&chi);
            let masks = fs.masks();
            let rank = chi.rank();
            for size in 1..rank {
                for s in SubsetIndex::new(n, size).iter() {
                    let sm = s.iter().fold(0u32, |m, &x| m | (1 << x));
                    let in_facet = masks.iter().any(|&f| f & sm == sm);
                    let zero_of_nonneg = cov.iter().any(|v| {
                        v.is_nonnegative() && !v.is_zero_vector() && v.zero_mask() == sm
                    });
                    assert_eq!(in_facet, zero_of_nonneg, "n={n} d={d} subset {s:?}");
                }
            }
        }
    }
}
