#![allow(dead_code)]

use minorkit::pencil::KWForm;
use minorkit::polycore::{Field, MonomialOrder};

/// Block specs with at most 12 variables covering the three height cases,
/// several with more than one Jordan block per eigenvalue.
pub const HEIGHT_CORPUS: [&str; 30] = [
    // nilpotent only
    "N(1)",
    "N(3)",
    "N(2) N(2)",
    "N(0) N(4)",
    "N(1) N(1) N(1)",
    // scrolls, no Jordan
    "B(1) B(1)",
    "B(3)",
    "B(5)",
    "B(1) B(1) B(1) B(1)",
    "B(2) B(3)",
    "B(1) B(2) N(2)",
    "B(4) N(3)",
    "B(1) B(1) B(1) B(1) B(1) B(1)",
    "B(2) B(2) B(2)",
    "B(3) N(1) N(1)",
    // with Jordan blocks
    "J(0,1) B(1) B(1) J(1,1)",
    "J(0,1) B(1) B(1) B(1) J(1,1)",
    "J(1,2) B(2) N(1)",
    "J(0,2) J(0,2)",
    "J(0,1) J(0,1) J(0,1)",
    "J(0,1) J(0,1) J(1,1)",
    "J(0,2) J(0,1) J(1,2)",
    "J(0,1) J(0,1) J(1,1) J(1,1) J(2,1)",
    "J(3,4)",
    "J(0,2) B(1) B(2)",
    "J(0,1) J(0,1) B(1) B(1)",
    "J(1,1) J(1,1) J(2,2) N(2)",
    "J(0,1) J(1,1) J(2,1) B(3)",
    "J(-1,2) J(-1,2) J(1,3)",
    "J(0,1) J(0,1) J(0,1) B(1) N(3)",
];

pub const P: u64 = 32003;

pub fn field(ch: u64) -> Field {
    Field::of_characteristic(ch).unwrap()
}

pub fn form(spec: &str, ch: u64) -> KWForm {
    KWForm::parse(spec, field(ch), MonomialOrder::DegRevLex).unwrap()
}

/// `J(0,1) B(1)^(n-2) J(1,1)`.
pub fn corner_spec(n: usize) -> String {
    let mut parts = vec!["J(0,1)".to_string()];
    parts.extend(std::iter::repeat("B(1)".to_string()).take(n - 2));
    parts.push("J(1,1)".into());
    parts.join(" ")
}

/// Jordan concatenations with at most 3 eigenvalues, at most 2 blocks per
/// eigenvalue, block lengths at most 2 and at most 10 variables.
pub fn jordan_suite() -> Vec<String> {
    let classes: [&[usize]; 5] = [&[1], &[2], &[1, 1], &[2, 1], &[2, 2]];
    let mut out = Vec::new();
    for d in 1..=3usize {
        let mut idx = vec![0usize; d];
        loop {
            let vars: usize = idx.iter().map(|&i| classes[i].iter().sum::<usize>()).sum();
            if vars <= 10 {
                let mut parts = Vec::new();
                for (e, &i) in idx.iter().enumerate() {
                    parts.extend(classes[i].iter().map(|m| format!("J({e},{m})")));
                }
                out.push(parts.join(" "));
            }
            if !next_multiset(&mut idx, classes.len()) {
                break;
            }
        }
    }
    out
}

/// Advances a non-decreasing tuple over `0..max`; false after the last one.
fn next_multiset(idx: &mut [usize], max: usize) -> bool {
    for k in (0..idx.len()).rev() {
        if idx[k] + 1 < max {
            idx[k] += 1;
            let v = idx[k];
            idx[k + 1..].iter_mut().for_each(|x| *x = v);
            return true;
        }
    }
    false
}
