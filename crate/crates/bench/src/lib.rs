//! Shared fixtures for the benchmarks.

use kingdon_core::{build_kingdon, FormedSpace, KingdonAlgebra, Signature};

pub fn canonical(sig: Signature) -> KingdonAlgebra {
    build_kingdon(&sig.formed_space().expect("canonical form")).expect("Kingdon algebra")
}

pub fn octonions() -> KingdonAlgebra {
    build_kingdon(&FormedSpace::diagonal_ints(&[-2, -2, -2]).expect("diagonal form")).expect("Kingdon algebra")
}

pub fn epsilon_forms() -> Vec<FormedSpace> {
    let e = [0, 2, -2];
    let mut out = Vec::new();
    for a in e {
        for b in e {
            for c in e {
                out.push(FormedSpace::diagonal_ints(&[a, b, c]).expect("diagonal form"));
            }
        }
    }
    out
}
