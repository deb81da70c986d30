use neighborly::chirotope::Chirotope;
use neighborly::extend::{facet_constraints, visit_models, Extender, SignatureAssignment, SubsetConvention};
use neighborly::faces::masks_cover;

fn moment_curve(n: usize, d: usize) -> Vec<Vec<i64>> {
    (1..=n as i64).map(|t| (1..=d as u32).map(|p| t.pow(p)).collect()).collect()
}

#[test]
fn hypothesis() {
    let chi = Chirotope::from_points(&moment_curve(7, 4)).unwrap();
    let ext = Extender::new(chi.clone());
    let nv = ext.num_facets();
    // Count assignments whose implied facet complex is 2-neighborly over [8];
    // brute force over all 2^nv.
    let mut h1 = 0u64;
    let mut h1_compat = 0u64;
    for bits in 0u64..1 << nv {
        let masks = ext.implied_facet_masks(bits);
        if masks_cover(&masks, 8, 2) {
            h1 += 1;
            let phi = SignatureAssignment { bits, num_vars: nv };
            if ext.is_compatible(&phi) { h1_compat += 1; }
        }
    }
    println!("H1 count = {h1}, of which compatible = {h1_compat}");
    // And: is H1 a subset of the lemma families?
    let cs = facet_constraints(&ext, 2, SubsetConvention::WithNewElement);
    let mut in_families = std::collections::HashSet::new();
    visit_models(&cs, |b| { in_families.insert(b); });
    let mut outside = 0;
    for bits in 0u64..1 << nv {
        if masks_cover(&ext.implied_facet_masks(bits), 8, 2) && !in_families.contains(&bits) {
            outside += 1;
        }
    }
    println!("H1 assignments violating lemma families: {outside}");
}
