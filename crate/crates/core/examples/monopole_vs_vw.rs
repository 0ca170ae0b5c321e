//! Monopole series through q^3 against the Vafa-Witten prediction.

use vwcalc::assemble::{compare_vw, monopole_series_q3, surface_preset, Surface, PRESETS};

fn main() {
    let m = monopole_series_q3();
    println!("symbolic monopole series, times {}:", m.normalization);
    for comp in &m.per_component {
        println!("  q^{} {:<8} {}", comp.power, comp.label, comp.value);
    }

    let mut surfaces = vec![Surface::Symbolic];
    surfaces.extend(PRESETS.iter().map(|n| Surface::Concrete(surface_preset(n).unwrap())));
    for s in &surfaces {
        let r = compare_vw(s);
        let coeffs: Vec<String> = r.bracket().iter().map(|c| c.to_string()).collect();
        println!(
            "{:<13} {}  [{}]  {}  sign (-1)^({}) vs vd: {}",
            r.surface,
            r.status,
            coeffs.join(", "),
            r.monopole_normalization,
            r.sign_difference,
            if r.sign_matches_vd { "same" } else { "different" },
        );
    }
}
