//! Boolean constraints on facet signatures: the three clause families that
//! any k-neighborly uniform single-element extension must satisfy.

use std::collections::BTreeSet;

use super::Extender;
use crate::subsets::SubsetIndex;

/// Which subsets index the neighborliness family: only subsets of the base
/// ground set, or additionally those containing the new element (whose
/// constraints reduce to sign-mixture conditions on the cocircuits around
/// the removed part).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SubsetConvention {
    BaseOnly,
    /// Matches the published per-step solution counts.
    #[default]
    WithNewElement,
}

/// CNF over the facet variables. Family (a) arrives as `A or (B and C)` with
/// A, B, C disjunctions; distribution turns it into the two clauses
/// `(A or B)` and `(A or C)` without auxiliary variables.
#[derive(Clone, Debug, Default)]
pub struct ConstraintSet {
    pub num_vars: usize,
    /// Clauses as sorted lists of DIMACS-style literals (+v-1 / -(v+1)).
    pub clauses: Vec<Vec<i32>>,
    /// Set when some neighborliness constraint had no eligible cocircuits at
    /// all: the set is unsatisfiable by construction.
    pub flagged_unsat: bool,
}

fn lit(var: usize, positive: bool) -> i32 {
    let v = (var + 1) as i32;
    if positive {
        v
    } else {
        -v
    }
}

/// Generates the constraint families for extending the base of `ext` to a
/// k-neighborly uniform oriented matroid.
pub fn facet_constraints(ext: &Extender, k: usize, convention: SubsetConvention) -> ConstraintSet {
    let chi = ext.base();
    let n = chi.n();
    let r = chi.rank();
    let masks = ext.facet_zero_masks();
    let nv = masks.len();
    let mut clauses: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut flagged = false;

    fn push(clauses: &mut BTreeSet<Vec<i32>>, mut cl: Vec<i32>) {
        cl.sort_unstable_by_key(|l| (l.abs(), *l < 0));
        cl.dedup();
        clauses.insert(cl);
    }

    // Neighborliness family: for every subset S of size m <= k, either a
    // facet containing S survives, or the facets meeting S in all but one
    // element carry both signs.
    for m in 1..=k {
        for s in SubsetIndex::new(n, m).iter() {
            let sm = s.iter().fold(0u32, |acc, &x| acc | (1 << x));
            let containing: Vec<usize> = (0..nv).filter(|&v| masks[v] & sm == sm).collect();
            let meeting: Vec<usize> = (0..nv)
                .filter(|&v| (masks[v] & sm).count_ones() as usize == m - 1)
                .collect();
            if containing.is_empty() && meeting.is_empty() {
                flagged = true;
                clauses.insert(Vec::new());
                continue;
            }
            let mut c1: Vec<i32> = containing.iter().map(|&v| lit(v, true)).collect();
            c1.extend(meeting.iter().map(|&v| lit(v, true)));
            push(&mut clauses, c1);
            let mut c2: Vec<i32> = containing.iter().map(|&v| lit(v, true)).collect();
            c2.extend(meeting.iter().map(|&v| lit(v, false)));
            push(&mut clauses, c2);
        }
    }

    // Subsets through the new element: S = S' + new is a face of the
    // extension iff the facets containing S' take both signs.
    if convention == SubsetConvention::WithNewElement {
        for m in 1..=k {
            for s in SubsetIndex::new(n, m - 1).iter() {
                let sm = s.iter().fold(0u32, |acc, &x| acc | (1 << x));
                let around: Vec<usize> = (0..nv).filter(|&v| masks[v] & sm == sm).collect();
                if around.is_empty() {
                    flagged = true;
                    clauses.insert(Vec::new());
                    continue;
                }
                let mut c1: Vec<i32> = around.iter().map(|&v| lit(v, true)).collect();
                push(&mut clauses, c1);
                let mut c2: Vec<i32> = around.iter().map(|&v| lit(v, false)).collect();
                push(&mut clauses, c2);
            }
        }
    }

    // Connectivity family: a surviving facet keeps a surviving ridge
    // neighbor, and symmetrically for removed facets.
    for x in 0..nv {
        let neighbors: Vec<usize> = (0..nv)
            .filter(|&v| (masks[v] & masks[x]).count_ones() as usize == r - 2)
            .collect();
        let mut c1 = vec![lit(x, false)];
        c1.extend(neighbors.iter().map(|&v| lit(v, true)));
        push(&mut clauses, c1);
        let mut c2 = vec![lit(x, true)];
        c2.extend(neighbors.iter().map(|&v| lit(v, false)));
        push(&mut clauses, c2);
    }

    // Star-connectivity family: two surviving facets with a small common
    // zero set force a surviving facet through their intersection next to
    // the first one, and symmetrically.
    for x in 0..nv {
        for y in 0..nv {
            if x == y {
                continue;
            }
            let common = masks[x] & masks[y];
            if common.count_ones() as usize >= r - 2 {
                continue;
            }
            let bridging: Vec<usize> = (0..nv)
                .filter(|&v| {
                    (masks[v] & masks[x]).count_ones() as usize == r - 2
                        && masks[v] & common == common
                })
                .collect();
            let mut c1 = vec![lit(x, false), lit(y, false)];
            c1.extend(bridging.iter().map(|&v| lit(v, true)));
            push(&mut clauses, c1);
            let mut c2 = vec![lit(x, true), lit(y, true)];
            c2.extend(bridging.iter().map(|&v| lit(v, false)));
            push(&mut clauses, c2);
        }
    }

    ConstraintSet {
        num_vars: nv,
        clauses: clauses.into_iter().collect(),
        flagged_unsat: flagged,
    }
}
