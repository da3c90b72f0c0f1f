//! Congruences by exhaustive search over set partitions.

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::semigroup::Semigroup;

/// Default cap on the order for congruence search (Bell(6) = 203 partitions).
pub const DEFAULT_CONGRUENCE_CAP: usize = 6;

/// A congruence together with its quotient and the canonical surjection.
#[derive(Debug, Clone)]
pub struct Congruence {
    /// Class index of each element; classes are numbered by first occurrence.
    pub classes: Vec<usize>,
    pub quotient: Semigroup,
    pub projection: Morphism,
}

pub fn congruences(s: &Semigroup) -> Result<Vec<Congruence>> {
    congruences_capped(s, DEFAULT_CONGRUENCE_CAP)
}

/// All congruences of `s`, in lexicographic order of their restricted
/// growth strings.
pub fn congruences_capped(s: &Semigroup, cap: usize) -> Result<Vec<Congruence>> {
    let n = s.order();
    if n > cap {
        return Err(Error::SizeCap {
            what: "congruence search order",
            got: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        if let Some(c) = quotient_if_compatible(s, &rgs) {
            out.push(c);
        }
        if !next_rgs(&mut rgs) {
            return Ok(out);
        }
    }
}

fn next_rgs(rgs: &mut [usize]) -> bool {
    let n = rgs.len();
    for i in (1..n).rev() {
        let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
        if rgs[i] <= max_prefix {
            rgs[i] += 1;
            for x in rgs[i + 1..].iter_mut() {
                *x = 0;
            }
            return true;
        }
    }
    false
}

fn quotient_if_compatible(s: &Semigroup, classes: &[usize]) -> Option<Congruence> {
    let n = s.order();
    let m = classes.iter().copied().max().map_or(0, |c| c + 1);
    let mut table = vec![usize::MAX; m * m];
    for i in 0..n {
        for j in 0..n {
            let cell = &mut table[classes[i] * m + classes[j]];
            let v = classes[s.mul(i, j)];
            if *cell == usize::MAX {
                *cell = v;
            } else if *cell != v {
                return None;
            }
        }
    }
    let quotient = Semigroup::from_flat_unchecked(m, table);
    let projection = Morphism::new_unchecked(s.clone(), quotient.clone(), classes.to_vec());
    Some(Congruence {
        classes: classes.to_vec(),
        quotient,
        projection,
    })
}
