use std::collections::HashSet;

use crate::complex::{FaceSet, SComplex};
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;
use crate::subset::Subset;

use super::eval::eval_modulus;
use super::Modulus;

/// Bound on the number of face families generated inside `P(Q_n)` at one
/// level of the completion.
pub const COMPLETION_FACE_CAP: usize = 1 << 16;

/// Result of [`monad_completion`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub value: SComplex,
    /// First `n` with level `n` equal to level `n + 1`.
    pub levels: usize,
    /// Face count of every level `0..=levels`.
    pub trace: Vec<usize>,
}

/// Iterates `K ↦ ssc{⋃𝒜 : 𝒜 ∈ 𝒞_Λ(Q)}` from `sing(S)`, where `Q` is the face
/// semigroup of `K`, until nothing changes.
pub fn monad_completion(m: &Modulus, s: &Semigroup) -> Result<Completion> {
    let mut level = SComplex::singletons(s)?;
    let mut trace = vec![level.face_count()];
    loop {
        let next = completion_step(m, &level)?;
        if next == level {
            return Ok(Completion {
                value: level,
                levels: trace.len() - 1,
                trace,
            });
        }
        trace.push(next.face_count());
        level = next;
    }
}

/// One application of the union step to `k`.
pub fn completion_step(m: &Modulus, k: &SComplex) -> Result<SComplex> {
    let (q, faces) = k.face_semigroup()?;
    let family = eval_modulus(m, &q)?;
    let mut out = FaceSet::new(k.base().order());
    for a in generated_sets(&q, &family)? {
        out.insert(a.iter().fold(Subset::EMPTY, |acc, i| acc.union(faces[i])));
    }
    out.downward_close();
    SComplex::from_faces(k.base(), out)
}

/// The subsemigroup of `P(Q)` generated by `family` and the singletons.
fn generated_sets(q: &Semigroup, family: &[Subset]) -> Result<Vec<Subset>> {
    let mut gens: Vec<Subset> = (0..q.order()).map(Subset::singleton).collect();
    gens.extend(family.iter().copied().filter(|x| x.len() > 1));
    let mut seen: HashSet<Subset> = gens.iter().copied().collect();
    let mut queue = gens.clone();
    while let Some(x) = queue.pop() {
        for &g in &gens {
            let p = q.product_set(x, g);
            if seen.insert(p) {
                if seen.len() > COMPLETION_FACE_CAP {
                    return Err(Error::SizeCap {
                        what: "face families in a completion step",
                        got: seen.len(),
                        cap: COMPLETION_FACE_CAP,
                    });
                }
                queue.push(p);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
