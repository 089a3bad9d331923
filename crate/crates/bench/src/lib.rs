//! Shared fixtures for the criterion benches: deterministic random
//! tuples of algebra elements, projected to a parity.

use starpi_core::rat::rat_int;
use starpi_core::{Element, Parity, Rat, StarAlgebra};

pub fn algebra(desc: &str) -> StarAlgebra {
    StarAlgebra::from_descriptor(desc).expect("valid descriptor")
}

/// Deterministic tuple of `count` elements with integer entries in
/// `[-3, 3]`, projected to `parity`.
pub fn seeded_tuple(alg: &StarAlgebra, parity: Parity, count: usize, seed: u64) -> Vec<Element> {
    let mut state = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ 0xD1B5_4A32_D192_ED03;
    let mut next = move || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    (0..count)
        .map(|_| {
            let coords: Vec<Rat> = (0..alg.dim())
                .map(|_| rat_int((next() % 7) as i64 - 3))
                .collect();
            let raw = alg.element_from_coords(&coords).expect("full-length coords");
            match parity {
                Parity::X => raw,
                Parity::Y => alg.decompose(&raw).expect("member").0,
                Parity::Z => alg.decompose(&raw).expect("member").1,
            }
        })
        .collect()
}
