// Reduce a coupled pair with unequal masses to its normal form and list
// the lowest levels.

use oscsym::oscillator::{
    normal_form, reconstruct, reduce, spectrum, RawParams, SpectrumSpec, SpectrumVariant,
};

pub fn run_example() -> (f64, f64) {
    let raw = RawParams::new(2.0, 0.5, 3.0, 1.0, 0.8).expect("admissible");
    let p = reduce(&raw).expect("positive masses");
    let nf = normal_form(&p).expect("stable potential");
    println!(
        "m = {:.6}, A = {:.6}, B = {:.6}, C = {:.6}",
        p.m, p.a, p.b, p.c
    );
    println!(
        "K = {:.6}, eta = {:.6}, alpha = {:.6}, omega = {:.6}",
        nf.k, nf.eta, nf.alpha, nf.omega
    );
    let (a, b, c) = reconstruct(&nf);
    println!("reconstructed A, B, C = {a:.12}, {b:.12}, {c:.12}");
    for n1 in 0..3 {
        for n2 in 0..3 {
            let spec = SpectrumSpec {
                n1,
                n2,
                variant: SpectrumVariant::CoupledH,
            };
            println!(
                "E({n1},{n2}) = {:.6}",
                spectrum(Some(&nf), spec).expect("normal form given")
            );
        }
    }
    let worst = [(a, p.a), (b, p.b), (c, p.c)]
        .iter()
        .map(|(x, y)| ((x - y) / y).abs())
        .fold(0.0, f64::max);
    (nf.eta, worst)
}

fn main() {
    run_example();
}
