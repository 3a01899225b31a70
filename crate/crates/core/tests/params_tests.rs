//! Parameterization: spec validation, the canonical normalization, and
//! the scale transfer that maps every evaluation back to it.

mod common;

use common::reference::ALPHA_REF;
use common::assert_rel;
use stablesup_core::params::{canonical_density_transfer, make_spec, StableSpec};
use stablesup_core::series::density_series;
use stablesup_core::special::gamma_fn;
use stablesup_core::Error;

#[test]
fn canonical_spec_has_unit_scale() {
    for r in ALPHA_REF {
        let s = StableSpec::canonical(r.alpha).unwrap();
        assert_eq!(s.alpha, r.alpha);
        assert_rel(s.c, r.c_canonical, 1e-13, format!("c at alpha={}", r.alpha));
        assert_rel(s.gamma_scale, 1.0, 1e-13, format!("gamma at alpha={}", r.alpha));
    }
}

#[test]
fn gamma_scale_solves_its_defining_equation() {
    // γ = (c·Γ(-α))^{1/α}  ⇔  γ^α / Γ(-α) = c.
    for &(alpha, c) in &[
        (1.2, 0.05),
        (1.2, 1.0),
        (1.5, 0.01),
        (1.5, 0.42314218766081724),
        (1.5, 7.5),
        (1.8, 0.3),
        (1.95, 2.0),
    ] {
        let s = make_spec(alpha, c).unwrap();
        let back = s.gamma_scale.powf(alpha) / gamma_fn(-alpha).unwrap();
        assert_rel(back, c, 1e-12, format!("round-trip at alpha={alpha}, c={c}"));
    }
}

#[test]
fn doubling_c_scales_gamma_by_two_to_inverse_alpha() {
    for r in ALPHA_REF {
        let base = make_spec(r.alpha, r.c_canonical).unwrap();
        let doubled = make_spec(r.alpha, 2.0 * r.c_canonical).unwrap();
        assert_rel(
            doubled.gamma_scale / base.gamma_scale,
            2f64.powf(1.0 / r.alpha),
            1e-13,
            format!("scale ratio at alpha={}", r.alpha),
        );
    }
}

#[test]
fn density_transfer_matches_manual_change_of_variables() {
    let spec = make_spec(1.5, 1.0).unwrap();
    let g = spec.gamma_scale;
    for x in [0.3, 1.0, 2.5] {
        let via_transfer =
            canonical_density_transfer(&spec, x, &|xc| density_series(1.5, xc, 1e-12).map(|r| r.0))
                .unwrap();
        let manual = density_series(1.5, x / g, 1e-12).unwrap().0 / g;
        assert_rel(via_transfer, manual, 1e-15, format!("transfer at x={x}"));
    }
}

#[test]
fn transferred_density_carries_the_same_mass() {
    // ∫_{γa}^{γb} γ⁻¹·s(x/γ) dx = F(b) − F(a): Simpson on the transferred
    // density must reproduce the canonical CDF increment.  (The window
    // stays away from 0, where s ~ x^{α−2} would defeat plain Simpson.)
    let spec = make_spec(1.4, 0.9).unwrap();
    let g = spec.gamma_scale;
    let f = |x: f64| density_series(1.4, x / g, 1e-12).unwrap().0 / g;
    let (a, b) = (0.25, stablesup_core::oscint::x_trust(1.4).unwrap());
    let mass = common::simpson(&f, g * a, g * b, 4000);
    let fa = stablesup_core::series::cdf_series(1.4, a, 1e-12).unwrap().0;
    let fb = stablesup_core::series::cdf_series(1.4, b, 1e-12).unwrap().0;
    assert_rel(mass, fb - fa, 1e-9, "transferred window mass");
}

#[test]
fn invalid_parameters_are_domain_errors() {
    for alpha in [1.0, 2.0, 0.5, 2.5, f64::NAN] {
        assert!(matches!(make_spec(alpha, 1.0), Err(Error::Domain { .. })));
        assert!(matches!(StableSpec::canonical(alpha), Err(Error::Domain { .. })));
    }
    for c in [0.0, -1.0, f64::NAN] {
        assert!(matches!(make_spec(1.5, c), Err(Error::Domain { .. })));
    }
}
