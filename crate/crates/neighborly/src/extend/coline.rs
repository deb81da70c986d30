//! Coline sequences: the cyclically ordered, consistently reoriented
//! cocircuits of each rank-2 contraction.

use crate::chirotope::Chirotope;
use crate::error::OmError;
use crate::sign::Sign;

/// For a coline F (an (r-2)-subset), the elements of the complement in the
/// circular order of their signed cocircuits: with `D_i = eps_i * C^{F+e_i}`,
/// the cocircuits appear along the coline as `D_1,..,D_m,-D_1,..,-D_m`, so a
/// cocircuit signature restricts to a localization of the rank-2 contraction
/// exactly when the word `sigma(D_1)..sigma(D_m)` has at most one sign change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColineSequence {
    pub coline: Vec<usize>,
    pub elements: Vec<usize>,
    pub orientations: Vec<Sign>,
}

/// Builds the sequence. `e_1` is the smallest complement element with
/// orientation +; every other element is reoriented by the stored sign
/// `eps_e = chi[sorted(F + e_1 + e)]`, and the tail is sorted by the
/// half-plane comparator `eps_a * eps_b * chi[sorted(F + a + b)] = +`
/// (for a < b).
///
/// Both signs deliberately use plain sorted-subset values rather than the
/// appended-sequence evaluation: reorienting by the stored sign is what makes
/// each `D_i` restrict to the contraction's own normalized cocircuit, which
/// the one-sign-change criterion is about.
pub fn coline_sequence(chi: &Chirotope, f: &[usize]) -> Result<ColineSequence, OmError> {
    if f.len() + 2 != chi.rank() {
        return Err(OmError::SubsetSize {
            expected: chi.rank() - 2,
            got: f.len(),
        });
    }
    let mut coline = f.to_vec();
    coline.sort_unstable();
    let others: Vec<usize> = (0..chi.n()).filter(|x| !coline.contains(x)).collect();
    assert!(others.len() >= 2, "coline needs at least two complement elements");
    let e1 = others[0];
    let mut eps = vec![Sign::Plus; chi.n()];
    for &e in &others[1..] {
        eps[e] = chi.sorted_pair(&coline, e1, e);
    }
    let mut tail: Vec<usize> = others[1..].to_vec();
    tail.sort_by(|&a, &b| {
        if a == b {
            return std::cmp::Ordering::Equal;
        }
        let mut before = eps[a] * eps[b] * chi.sorted_pair(&coline, a, b);
        if a > b {
            before = -before;
        }
        if before == Sign::Plus {
            std::cmp::Ordering::Less
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let mut elements = vec![e1];
    elements.extend(tail);
    let orientations = elements.iter().map(|&e| eps[e]).collect();
    Ok(ColineSequence {
        coline,
        elements,
        orientations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::moment_curve;

    #[test]
    fn hexagon_coline_order_is_convex_position_order() {
        let chi = Chirotope::from_points(&moment_curve(6, 2)).unwrap();
        let seq = coline_sequence(&chi, &[0]).unwrap();
        assert_eq!(seq.elements, vec![1, 2, 3, 4, 5]);
        assert!(seq.orientations.iter().all(|&s| s == Sign::Plus));
    }

    #[test]
    fn two_element_coline() {
        let chi = Chirotope::simplex(4);
        let seq = coline_sequence(&chi, &[0, 2]).unwrap();
        assert_eq!(seq.elements.len(), 2);
        assert_eq!(seq.elements[0], 1);
    }

    #[test]
    fn comparator_is_transitive_on_realizable_instances() {
        for (n, d) in [(7, 3), (8, 4), (10, 3)] {
            let chi = Chirotope::from_points(&moment_curve(n, d)).unwrap();
            let r = chi.rank();
            for f in crate::subsets::SubsetIndex::new(n, r - 2).iter() {
                let seq = coline_sequence(&chi, &f).unwrap();
                let eps = &seq.orientations;
                let el = &seq.elements;
                // Pairwise: earlier element must compare "before" later one.
                for i in 1..el.len() {
                    for j in i + 1..el.len() {
                        let (a, b) = (el[i], el[j]);
                        let mut s = eps[i] * eps[j] * chi.sorted_pair(&seq.coline, a, b);
                        if a > b {
                            s = -s;
                        }
                        assert_eq!(s, Sign::Plus, "order violated at {f:?} ({i},{j})");
                    }
                }
            }
        }
    }
}
