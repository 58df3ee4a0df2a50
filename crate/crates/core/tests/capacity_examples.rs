use std::f64::consts::PI;

use wavechan_core::bounds3d::BoundingGeometry3D;
use wavechan_core::geometry::Core;
use wavechan_core::metrics::{capacity_bound, capacity_high_snr, spherical_heuristic};

#[test]
fn high_snr_form_tracks_bound_with_n_sh_channels() {
    let k = 2.0 * PI;
    let snr = 1e4;
    let mut worst: f64 = 0.0;
    for r in [3.0, 5.0, 7.0, 10.0] {
        let g = BoundingGeometry3D::new(k, r, 0.5, 10.0, 1.0, 1.0)
            .unwrap()
            .with_core(Core::Source);
        let n = spherical_heuristic(k, r).round() as usize;
        let exact = capacity_bound(&g, n, snr).unwrap().total_bits;
        let approx = capacity_high_snr(&g, snr);
        worst = worst.max(
            (approx / exact - 1.0)
                .abs()
                .max((exact / approx - 1.0).abs()),
        );
        eprintln!("R = {r}: exact {exact:.1}, 2 log2(SNR) k^2 R^2 = {approx:.1}");
    }
    assert!(worst <= 0.2, "largest relative gap {worst:.3}");
}
