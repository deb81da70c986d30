//! Single-element extensions of uniform k-neighborly matroid polytopes:
//! constraint generation over the non-negative cocircuit signs, all-solutions
//! boolean enumeration, and completion to localizations by coline
//! backtracking.
//!
//! The boolean constraints are necessary conditions only; every produced
//! extension is re-verified directly by the face tests before it counts.

mod coline;
mod constraints;
mod sat;

pub use coline::{coline_sequence, ColineSequence};
pub use constraints::{facet_constraints, ConstraintSet, SubsetConvention};
pub use sat::{enumerate_signatures, import_models, visit_models, write_dimacs, write_var_map};

use crate::chirotope::Chirotope;
use crate::error::OmError;
use crate::faces::{is_k_neighborly, masks_cover};
use crate::sign::{Sign, SignVector};
use crate::subsets::SubsetIndex;

/// A `{true,false}` assignment on the non-negative cocircuits of a base
/// chirotope (`true` means the extension keeps that facet: sigma = +).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureAssignment {
    /// Bit v set = variable v true; variables are the facets in lexicographic
    /// order of their zero sets.
    pub bits: u64,
    pub num_vars: usize,
}

impl SignatureAssignment {
    pub fn get(&self, var: usize) -> bool {
        debug_assert!(var < self.num_vars);
        self.bits >> var & 1 == 1
    }
}

/// A total cocircuit signature: one sign per (r-1)-subset H, interpreted as
/// the sign assigned to the normalized representative `C^H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    sigma: Vec<Sign>,
}

impl Localization {
    /// Builds a localization from one sign per (r-1)-subset, lexicographic.
    pub fn from_signs(sigma: Vec<Sign>) -> Localization {
        assert!(sigma.iter().all(|s| !s.is_zero()), "uniform extensions only");
        Localization { sigma }
    }

    pub fn sign(&self, h_id: usize) -> Sign {
        self.sigma[h_id]
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn negate(&self) -> Localization {
        Localization {
            sigma: self.sigma.iter().map(|&s| -s).collect(),
        }
    }
}

/// Per-base search state: cocircuits, facets, ridge pairing and coline
/// sequences, precomputed once and shared by constraint generation and
/// localization completion.
pub struct Extender {
    chi: Chirotope,
    hix: SubsetIndex,
    /// Normalized representatives `C^H` for every (r-1)-subset.
    cocircuits: Vec<SignVector>,
    /// Facets: (h_id, zero-set mask, delta) with delta*C^H non-negative.
    facets: Vec<(usize, u32, Sign)>,
    /// Ridge masks with the two facet variables flanking each ridge.
    ridges: Vec<(u32, [u32; 2])>,
    /// Per coline: the signed circular sequence (h_id, eps).
    colines: Vec<Vec<(usize, Sign)>>,
}

impl Extender {
    pub fn new(chi: Chirotope) -> Extender {
        let r = chi.rank();
        assert!(r >= 2, "extension search needs rank >= 2");
        let hix = SubsetIndex::new(chi.n(), r - 1);
        let mut cocircuits = Vec::with_capacity(hix.count());
        let mut facets = Vec::new();
        for h in hix.iter() {
            let c = chi.cocircuit(&h).unwrap();
            let delta = if c.is_nonnegative() {
                Some(Sign::Plus)
            } else if c.is_nonpositive() {
                Some(Sign::Minus)
            } else {
                None
            };
            if let Some(delta) = delta {
                let mask = h.iter().fold(0u32, |m, &x| m | (1 << x));
                facets.push((cocircuits.len(), mask, delta));
            }
            cocircuits.push(c);
        }
        assert!(facets.len() <= 64, "facet count exceeds the 64-variable engine limit");

        // Each (r-2)-subset of a facet is a ridge of the boundary sphere and
        // lies in exactly two facets.
        let mut ridge_map: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for (v, &(_, mask, _)) in facets.iter().enumerate() {
            let mut bits = mask;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                ridge_map.entry(mask & !low).or_default().push(v as u32);
                bits &= bits - 1;
            }
        }
        let ridges = ridge_map
            .into_iter()
            .map(|(m, vs)| {
                assert_eq!(vs.len(), 2, "ridge not flanked by exactly two facets");
                (m, [vs[0], vs[1]])
            })
            .collect();

        let colines = SubsetIndex::new(chi.n(), r - 2)
            .iter()
            .map(|f| {
                let seq = coline::coline_sequence(&chi, &f).unwrap();
                seq.elements
                    .iter()
                    .zip(&seq.orientations)
                    .map(|(&e, &eps)| {
                        let mut h = f.clone();
                        h.push(e);
                        h.sort_unstable();
                        (hix.rank(&h), eps)
                    })
                    .collect()
            })
            .collect();

        Extender {
            chi,
            hix,
            cocircuits,
            facets,
            ridges,
            colines,
        }
    }

    pub fn base(&self) -> &Chirotope {
        &self.chi
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facet_zero_masks(&self) -> Vec<u32> {
        self.facets.iter().map(|&(_, m, _)| m).collect()
    }

    /// The non-negative cocircuit for a constraint variable.
    pub fn facet_cocircuit(&self, var: usize) -> SignVector {
        let (h_id, _, delta) = self.facets[var];
        if delta == Sign::Plus {
            self.cocircuits[h_id].clone()
        } else {
            self.cocircuits[h_id].negate()
        }
    }

    pub(crate) fn colines(&self) -> &[Vec<(usize, Sign)>] {
        &self.colines
    }

    /// Facet masks of any extension compatible with `phi`, over the extended
    /// ground set: surviving facets keep their zero set, and each ridge whose
    /// flanking facets got opposite signs gains the new element.
    pub fn implied_facet_masks(&self, phi: u64) -> Vec<u32> {
        let new_bit = 1u32 << self.chi.n();
        let mut masks = Vec::with_capacity(self.facets.len() + self.ridges.len());
        for (v, &(_, mask, _)) in self.facets.iter().enumerate() {
            if phi >> v & 1 == 1 {
                masks.push(mask);
            }
        }
        for &(mask, [a, b]) in &self.ridges {
            if (phi >> a ^ phi >> b) & 1 == 1 {
                masks.push(mask | new_bit);
            }
        }
        masks
    }

    /// All total localizations extending `phi`, found by backtracking over
    /// the colines in lexicographic order with arc placements tried by start
    /// index ascending. With `limit = Some(c)` stops after c completions.
    pub fn complete_localizations_limited(
        &self,
        phi: &SignatureAssignment,
        limit: Option<usize>,
    ) -> Vec<Localization> {
        assert_eq!(phi.num_vars, self.facets.len(), "assignment domain mismatch");
        let mut sigma = vec![Sign::Zero; self.hix.count()];
        for (v, &(h_id, _, delta)) in self.facets.iter().enumerate() {
            let s = if phi.get(v) { Sign::Plus } else { Sign::Minus };
            sigma[h_id] = s * delta;
        }
        let mut out = Vec::new();
        let mut trail: Vec<usize> = Vec::new();
        self.complete_rec(0, &mut sigma, &mut trail, limit, &mut out);
        out
    }

    fn complete_rec(
        &self,
        ci: usize,
        sigma: &mut Vec<Sign>,
        trail: &mut Vec<usize>,
        limit: Option<usize>,
        out: &mut Vec<Localization>,
    ) {
        if limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if ci == self.colines.len() {
            debug_assert!(sigma.iter().all(|s| !s.is_zero()));
            out.push(Localization { sigma: sigma.clone() });
            return;
        }
        let entries = &self.colines[ci];
        let m = entries.len();
        let period = 2 * m;
        for start in 0..period {
            let mark = trail.len();
            let mut ok = true;
            for (i, &(h_id, eps)) in entries.iter().enumerate() {
                // Position i holds D_i; the arc start..start+m-1 gets +.
                let in_arc = (i + period - start) % period < m;
                let want = eps.flip_if(!in_arc);
                match sigma[h_id] {
                    Sign::Zero => {
                        sigma[h_id] = want;
                        trail.push(h_id);
                    }
                    s if s == want => {}
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.complete_rec(ci + 1, sigma, trail, limit, out);
            }
            for &h in &trail[mark..] {
                sigma[h] = Sign::Zero;
            }
            trail.truncate(mark);
        }
    }

    /// Does `phi` admit any localization at all?
    pub fn is_compatible(&self, phi: &SignatureAssignment) -> bool {
        !self.complete_localizations_limited(phi, Some(1)).is_empty()
    }

    /// Independent re-check of the Las Vergnas condition: along every coline
    /// the word `sigma(D_1)..sigma(D_m)` has at most one sign change.
    pub fn coline_condition_holds(&self, sigma: &Localization) -> bool {
        self.colines.iter().all(|entries| {
            let word: Vec<Sign> = entries
                .iter()
                .map(|&(h, eps)| eps * sigma.sign(h))
                .collect();
            let changes = word.windows(2).filter(|w| w[0] != w[1]).count();
            changes <= 1
        })
    }
}

/// All total localizations compatible with `phi` (empty = none).
pub fn complete_localizations(chi: &Chirotope, phi: &SignatureAssignment) -> Vec<Localization> {
    Extender::new(chi.clone()).complete_localizations_limited(phi, None)
}

/// The single-element extension determined by a total localization: the new
/// element gets the largest label, and the sign at `H + new` is `sigma(C^H)`.
pub fn extension_chirotope(chi: &Chirotope, sigma: &Localization) -> Chirotope {
    let n = chi.n();
    let r = chi.rank();
    let hix = SubsetIndex::new(n, r - 1);
    assert_eq!(sigma.len(), hix.count(), "localization is not total");
    let ext_ix = SubsetIndex::new(n + 1, r);
    let signs = ext_ix.iter().map(|sub| {
        if sub[r - 1] == n {
            sigma.sign(hix.rank(&sub[..r - 1]))
        } else {
            chi.eval_sorted(&sub)
        }
    });
    let ext = Chirotope::new(r, n + 1, signs).expect("localization contained zeros");
    debug_assert!(ext.is_gp_consistent(), "extension violates Grassmann-Plücker");
    ext
}

/// Outcome of one base-chirotope extension step.
pub struct ExtendOutcome {
    /// All verified k-neighborly single-element extensions, in search order.
    pub extensions: Vec<Chirotope>,
    /// Number of satisfying boolean assignments seen.
    pub sat_solutions: u64,
    /// How many of them admitted at least one localization.
    pub compatible: u64,
    /// Whether some constraint had an empty clause (flagged unsatisfiable).
    pub flagged_unsat: bool,
}

/// Runs the full step for one base: constraints, model enumeration,
/// localization completion, extension and direct verification.
pub fn extend_step(chi: &Chirotope, k: usize, convention: SubsetConvention) -> ExtendOutcome {
    let ext = Extender::new(chi.clone());
    let cs = facet_constraints(&ext, k, convention);
    let mut outcome = ExtendOutcome {
        extensions: Vec::new(),
        sat_solutions: 0,
        compatible: 0,
        flagged_unsat: cs.flagged_unsat,
    };
    let n1 = chi.n() + 1;
    visit_models(&cs, |bits| {
        outcome.sat_solutions += 1;
        let phi = SignatureAssignment {
            bits,
            num_vars: cs.num_vars,
        };
        let masks = ext.implied_facet_masks(bits);
        // Any extension from phi has exactly these facets, so a failed cover
        // test rules out k-neighborliness before the coline search runs.
        if masks_cover(&masks, n1, k) {
            let completions = ext.complete_localizations_limited(&phi, None);
            if !completions.is_empty() {
                outcome.compatible += 1;
            }
            for sigma in &completions {
                let cand = extension_chirotope(chi, sigma);
                if is_k_neighborly(&cand, k).unwrap_or(false) {
                    outcome.extensions.push(cand);
                }
            }
        } else if ext.is_compatible(&phi) {
            outcome.compatible += 1;
        }
    });
    outcome
}

/// All k-neighborly matroid-polytope single-element extensions of `chi`
/// (labeled; dedupe by canonical key happens downstream).
pub fn extend_all(chi: &Chirotope, k: usize) -> Result<Vec<Chirotope>, OmError> {
    let max = (chi.rank() - 1) / 2;
    if k < 1 || k > max.max(1) {
        return Err(OmError::KOutOfRange { k, max });
    }
    Ok(extend_step(chi, k, SubsetConvention::default()).extensions)
}

#[cfg(test)]
mod tests;
