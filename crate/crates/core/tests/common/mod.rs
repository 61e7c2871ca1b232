//! Independent oracles for the integration suites. Everything here
//! recomputes its target through a different algorithm than the library
//! path it validates.
#![allow(dead_code)] // each integration target uses its own subset

use std::collections::BTreeMap;

use sl3fusion::charring::{character, ClassicalCharacter};
use sl3fusion::Weight;

/// Kostant partition count by exhaustive enumeration of (k₁, k₂, k₃).
pub fn kostant_enumerate(beta: Weight) -> i64 {
    let bound = beta.c1.abs() + beta.c2.abs() + 2;
    let mut count = 0;
    for k1 in 0..=bound {
        for k2 in 0..=bound {
            for k3 in 0..=bound {
                if Weight::ALPHA1 * k1 + Weight::ALPHA2 * k2 + Weight::THETA * k3 == beta {
                    count += 1;
                }
            }
        }
    }
    count
}

fn convolve(a: &BTreeMap<Weight, i64>, b: &ClassicalCharacter) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for (&wa, &ca) in a {
        for (wb, cb) in b.iter() {
            *out.entry(wa + wb).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn diagram_map(lam: Weight) -> BTreeMap<Weight, i64> {
    character(lam).expect("dominant").iter().collect()
}

/// Brute-force Littlewood–Richardson decomposition: multiply the sparse
/// weight-diagram polynomials and strip repeatedly by the character of
/// the highest remaining weight.
pub fn tensor_brute_force(lam: Weight, mu: Weight) -> BTreeMap<Weight, i64> {
    let mut prod = convolve(&diagram_map(lam), &character(mu).expect("dominant"));
    let mut out = BTreeMap::new();
    while !prod.is_empty() {
        // the maximal-height weights of what remains are highest weights
        let top_height = prod.keys().map(|w| w.height()).max().unwrap();
        let leaders: Vec<Weight> = prod
            .keys()
            .copied()
            .filter(|w| w.height() == top_height)
            .collect();
        for nu in leaders {
            assert!(nu.is_dominant(), "stripping hit a non-dominant leader {nu}");
            let n = prod[&nu];
            assert!(n > 0, "negative multiplicity at {nu}");
            *out.entry(nu).or_insert(0) += n;
            for (w, c) in character(nu).expect("dominant").iter() {
                let entry = prod.entry(w).or_insert(0);
                *entry -= n * c;
                if *entry == 0 {
                    prod.remove(&w);
                }
            }
        }
    }
    out
}
