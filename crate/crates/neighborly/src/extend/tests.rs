use super::*;
use crate::faces::{facets, is_matroid_polytope};
use crate::testutil::moment_curve;

fn cyclic(n: usize, d: usize) -> Chirotope {
    Chirotope::from_points(&moment_curve(n, d)).unwrap()
}

#[test]
fn totally_cyclic_rank2_has_2m_unconstrained_localizations() {
    // No facets means an empty signature; the single coline then admits
    // exactly 2m localizations, and the set is closed under negation.
    let chi = Chirotope::from_vectors(&[vec![3, 1], vec![1, 3], vec![-3, 2], vec![-2, -3]]).unwrap();
    let ext = Extender::new(chi);
    assert_eq!(ext.num_facets(), 0);
    let phi = SignatureAssignment { bits: 0, num_vars: 0 };
    let all = ext.complete_localizations_limited(&phi, None);
    assert_eq!(all.len(), 8);
    for sigma in &all {
        assert!(ext.coline_condition_holds(sigma));
        assert!(all.contains(&sigma.negate()));
    }
}

#[test]
fn delete_then_reextend_recovers_the_original() {
    let chi8 = cyclic(8, 4);
    let chi7 = chi8.delete(7).unwrap();
    let hix = SubsetIndex::new(7, 4);
    // Read the localization straight off the bigger chirotope.
    let sigma = Localization::from_signs(
        hix.iter()
            .map(|h| {
                let mut sub = h.clone();
                sub.push(7);
                chi8.eval_sorted(&sub)
            })
            .collect(),
    );
    assert_eq!(extension_chirotope(&chi7, &sigma), chi8);

    let ext = Extender::new(chi7.clone());
    assert!(ext.coline_condition_holds(&sigma));
    // The induced facet signature must admit sigma among its completions.
    let mut bits = 0u64;
    for (v, &(h_id, _, delta)) in ext.facets.iter().enumerate() {
        if delta * sigma.sign(h_id) == Sign::Plus {
            bits |= 1 << v;
        }
    }
    let phi = SignatureAssignment { bits, num_vars: ext.num_facets() };
    let completions = ext.complete_localizations_limited(&phi, None);
    assert!(completions.contains(&sigma));
    for s in &completions {
        assert_eq!(extension_chirotope(&chi7, s).delete(7).unwrap(), chi7);
    }
}

#[test]
fn simplex_extensions_are_all_polytopal_and_verified() {
    let chi = Chirotope::simplex(5);
    let exts = extend_all(&chi, 2).unwrap();
    assert!(!exts.is_empty());
    for e in &exts {
        assert_eq!((e.rank(), e.n()), (5, 6));
        assert!(is_matroid_polytope(e));
        assert!(crate::faces::is_k_neighborly(e, 2).unwrap());
        assert_eq!(e.delete(5).unwrap(), chi);
    }
}

#[test]
fn table_step_counts_for_rank5_base7() {
    // The unique neighborly base with 7 elements admits 107 signature
    // assignments, of which 105 extend to localizations.
    let chi = cyclic(7, 4);
    let out = extend_step(&chi, 2, SubsetConvention::WithNewElement);
    assert_eq!(out.sat_solutions, 107);
    assert_eq!(out.compatible, 105);
    assert!(!out.flagged_unsat);
}

#[test]
fn base_only_convention_is_a_superset() {
    let chi = cyclic(7, 4);
    let wide = extend_step(&chi, 2, SubsetConvention::BaseOnly);
    let tight = extend_step(&chi, 2, SubsetConvention::WithNewElement);
    assert!(wide.sat_solutions >= tight.sat_solutions);
    // Both conventions end at the same verified extensions.
    let key = |v: &Vec<Chirotope>| {
        let mut s: Vec<String> = v.iter().map(Chirotope::signs_string).collect();
        s.sort();
        s
    };
    assert_eq!(key(&wide.extensions), key(&tight.extensions));
}

#[test]
fn contradictory_constraints_yield_empty_stream() {
    let cs = ConstraintSet {
        num_vars: 2,
        clauses: vec![vec![1], vec![-1]],
        flagged_unsat: false,
    };
    assert!(enumerate_signatures(&cs).is_empty());
}

#[test]
fn produced_localizations_pass_posthoc_coline_check() {
    let chi = cyclic(6, 4);
    let ext = Extender::new(chi.clone());
    let cs = facet_constraints(&ext, 2, SubsetConvention::default());
    for phi in enumerate_signatures(&cs) {
        for sigma in ext.complete_localizations_limited(&phi, None) {
            assert!(ext.coline_condition_holds(&sigma));
            assert!(ext.coline_condition_holds(&sigma.negate()));
        }
    }
}

#[test]
fn dimacs_roundtrip() {
    let chi = Chirotope::simplex(5);
    let ext = Extender::new(chi);
    let cs = facet_constraints(&ext, 2, SubsetConvention::default());
    let mut buf = Vec::new();
    write_dimacs(&cs, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with(&format!("p cnf {} {}", cs.num_vars, cs.clauses.len())));
    let mut map = Vec::new();
    write_var_map(&ext, &mut map).unwrap();
    assert_eq!(String::from_utf8(map).unwrap().lines().count(), cs.num_vars);

    let models_text = "1 -2 3 4 5 0\n# comment\n-1 2 -3 -4 -5\n";
    let models = import_models(models_text.as_bytes(), cs.num_vars).unwrap();
    assert_eq!(models.len(), 2);
    assert!(models[0].get(0) && !models[0].get(1));
    assert!(!models[1].get(0) && models[1].get(1));
}

#[test]
fn extension_covers_every_neighborly_extension_rank3() {
    // Soundness of the constraint families at low rank: every 1-neighborly
    // uniform single-element extension of the pentagon shows up.
    let chi = cyclic(5, 2);
    let found = extend_all(&chi, 1).unwrap();
    // Brute force over all uniform rank-3 chirotopes on 6 elements that
    // restrict to the pentagon.
    let hix = SubsetIndex::new(5, 2);
    let mut expect = 0usize;
    for bits in 0u64..1 << hix.count() {
        let sigma = Localization::from_signs(
            (0..hix.count())
                .map(|i| if bits >> i & 1 == 1 { Sign::Plus } else { Sign::Minus })
                .collect(),
        );
        let cand = {
            let ext_ix = SubsetIndex::new(6, 3);
            let signs = ext_ix.iter().map(|sub| {
                if sub[2] == 5 {
                    sigma.sign(hix.rank(&sub[..2]))
                } else {
                    chi.eval_sorted(&sub)
                }
            });
            Chirotope::new(3, 6, signs).unwrap()
        };
        if cand.is_gp_consistent() && crate::faces::is_k_neighborly(&cand, 1).unwrap() {
            expect += 1;
            assert!(
                found.contains(&cand),
                "missing extension {}",
                cand.signs_string()
            );
        }
    }
    assert_eq!(found.len(), expect);
    assert!(facets(&cyclic(6, 2)).len() == 6);
}
