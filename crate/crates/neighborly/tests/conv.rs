use neighborly::chirotope::Chirotope;
use neighborly::extend::{extend_step, SubsetConvention};

fn moment_curve(n: usize, d: usize) -> Vec<Vec<i64>> {
    (1..=n as i64).map(|t| (1..=d as u32).map(|p| t.pow(p)).collect()).collect()
}

#[test]
fn conventions() {
    let chi = Chirotope::from_points(&moment_curve(7, 4)).unwrap();
    for (name, conv) in [("base-only", SubsetConvention::BaseOnly), ("with-new", SubsetConvention::WithNewElement)] {
        let out = extend_step(&chi, 2, conv);
        println!("{name}: sat={} compatible={} produced={}", out.sat_solutions, out.compatible, out.extensions.len());
    }
}
