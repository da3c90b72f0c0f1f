//! Membership predicates for the pseudovarieties used in point
//! identifications.

use std::fmt;
use std::str::FromStr;

use crate::semigroup::{GreenRelation, Semigroup};

/// A pseudovariety given by a direct structural membership test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pseudovariety {
    Trivial,
    Groups,
    Aperiodic,
    RTrivial,
    LTrivial,
    JTrivial,
    Semilattices,
    Bands,
    Commutative,
    Nilpotent,
    /// All products of length `k` coincide.
    NilpotentK(usize),
    /// `y·(x1⋯xk) = x1⋯xk`.
    DelayK(usize),
    /// `(x1⋯xk)·y = x1⋯xk`.
    ReverseDelayK(usize),
    LeftZero,
    RightZero,
    LocallyTrivial,
    UniqueIdempotent,
}

impl Pseudovariety {
    /// Every parameter-free pseudovariety.
    pub const SIMPLE: [Pseudovariety; 14] = [
        Pseudovariety::Trivial,
        Pseudovariety::Groups,
        Pseudovariety::Aperiodic,
        Pseudovariety::RTrivial,
        Pseudovariety::LTrivial,
        Pseudovariety::JTrivial,
        Pseudovariety::Semilattices,
        Pseudovariety::Bands,
        Pseudovariety::Commutative,
        Pseudovariety::Nilpotent,
        Pseudovariety::LeftZero,
        Pseudovariety::RightZero,
        Pseudovariety::LocallyTrivial,
        Pseudovariety::UniqueIdempotent,
    ];

    /// The pseudovariety of reversed members.
    pub fn reversed(self) -> Pseudovariety {
        use Pseudovariety::*;
        match self {
            RTrivial => LTrivial,
            LTrivial => RTrivial,
            LeftZero => RightZero,
            RightZero => LeftZero,
            DelayK(k) => ReverseDelayK(k),
            ReverseDelayK(k) => DelayK(k),
            other => other,
        }
    }

    pub fn contains(self, s: &Semigroup) -> bool {
        pv_member(self, s)
    }
}

/// Structural membership test. The empty semigroup belongs to every
/// pseudovariety.
pub fn pv_member(id: Pseudovariety, s: &Semigroup) -> bool {
    use Pseudovariety::*;
    let n = s.order();
    if n == 0 {
        return true;
    }
    let all = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let singleton_classes = |rel| s.green_partition(rel).len() == n;
    match id {
        Trivial => n <= 1,
        Groups => match s.identity() {
            Some(e) => (0..n).all(|x| (0..n).any(|y| s.mul(x, y) == e && s.mul(y, x) == e)),
            None => false,
        },
        Aperiodic => (0..n).all(|x| s.power(x, n) == s.power(x, n + 1)),
        RTrivial => singleton_classes(GreenRelation::R),
        LTrivial => singleton_classes(GreenRelation::L),
        JTrivial => singleton_classes(GreenRelation::J),
        Semilattices => pv_member(Commutative, s) && pv_member(Bands, s),
        Bands => (0..n).all(|x| s.mul(x, x) == x),
        Commutative => all().all(|(x, y)| s.mul(x, y) == s.mul(y, x)),
        Nilpotent => {
            let e = s.idempotents();
            e.len() == 1 && {
                let z = e.first().unwrap();
                (0..n).all(|x| s.mul(x, z) == z && s.mul(z, x) == z)
            }
        }
        NilpotentK(k) => s.k_products(k.max(1)).len() == 1,
        DelayK(k) => {
            let p = s.k_products(k.max(1));
            p.iter().all(|w| (0..n).all(|y| s.mul(y, w) == w))
        }
        ReverseDelayK(k) => {
            let p = s.k_products(k.max(1));
            p.iter().all(|w| (0..n).all(|y| s.mul(w, y) == w))
        }
        LeftZero => all().all(|(x, y)| s.mul(x, y) == x),
        RightZero => all().all(|(x, y)| s.mul(x, y) == y),
        LocallyTrivial => s.idempotents().iter().all(|e| s.local_monoid(e).len() == 1),
        UniqueIdempotent => s.idempotents().len() == 1,
    }
}

impl fmt::Display for Pseudovariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Pseudovariety::*;
        match self {
            Trivial => write!(f, "trivial"),
            Groups => write!(f, "groups"),
            Aperiodic => write!(f, "aperiodic"),
            RTrivial => write!(f, "rtrivial"),
            LTrivial => write!(f, "ltrivial"),
            JTrivial => write!(f, "jtrivial"),
            Semilattices => write!(f, "semilattices"),
            Bands => write!(f, "bands"),
            Commutative => write!(f, "commutative"),
            Nilpotent => write!(f, "nilpotent"),
            NilpotentK(k) => write!(f, "nilpotent:{k}"),
            DelayK(k) => write!(f, "delay:{k}"),
            ReverseDelayK(k) => write!(f, "rdelay:{k}"),
            LeftZero => write!(f, "leftzero"),
            RightZero => write!(f, "rightzero"),
            LocallyTrivial => write!(f, "locallytrivial"),
            UniqueIdempotent => write!(f, "uniqueidempotent"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pseudovariety `{0}`")]
pub struct UnknownPseudovariety(pub String);

impl FromStr for Pseudovariety {
    type Err = UnknownPseudovariety;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        use Pseudovariety::*;
        let lower: String = text
            .trim()
            .to_ascii_lowercase()
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .collect();
        let (name, param) = match lower.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (lower.as_str(), None),
        };
        let err = || UnknownPseudovariety(text.to_string());
        let k = || -> Result<usize, UnknownPseudovariety> {
            match param.map(str::parse::<usize>) {
                Some(Ok(k)) if k >= 1 => Ok(k),
                _ => Err(err()),
            }
        };
        let simple = |v| if param.is_none() { Ok(v) } else { Err(err()) };
        match name {
            "trivial" | "triv" => simple(Trivial),
            "groups" | "group" | "g" => simple(Groups),
            "aperiodic" | "a" => simple(Aperiodic),
            "rtrivial" | "r" => simple(RTrivial),
            "ltrivial" | "l" => simple(LTrivial),
            "jtrivial" | "j" => simple(JTrivial),
            "semilattices" | "sl" => simple(Semilattices),
            "bands" | "b" => simple(Bands),
            "commutative" | "com" => simple(Commutative),
            "nilpotent" | "n" if param.is_none() => Ok(Nilpotent),
            "nilpotent" | "n" => Ok(NilpotentK(k()?)),
            "delay" | "d" => Ok(DelayK(k()?)),
            "rdelay" | "k" => Ok(ReverseDelayK(k()?)),
            "leftzero" | "lz" => simple(LeftZero),
            "rightzero" | "rz" => simple(RightZero),
            "locallytrivial" | "lt" => simple(LocallyTrivial),
            "uniqueidempotent" | "ue" => simple(UniqueIdempotent),
            _ => Err(err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Pseudovariety::*;

    #[test]
    fn examples() {
        let z2 = Semigroup::cyclic_group(2);
        let sl2 = Semigroup::chain_semilattice(2);
        let n2 = Semigroup::null(2);
        assert!(!pv_member(Aperiodic, &z2));
        assert!(pv_member(Groups, &z2));
        assert!(pv_member(JTrivial, &sl2));
        assert!(pv_member(NilpotentK(2), &n2));
        assert!(!pv_member(NilpotentK(1), &n2));
        assert!(pv_member(Nilpotent, &n2));
        assert!(!pv_member(Nilpotent, &sl2));
        assert!(pv_member(LeftZero, &Semigroup::left_zero(3)));
        assert!(pv_member(RightZero, &Semigroup::left_zero(3).reverse()));
        assert!(pv_member(DelayK(1), &Semigroup::right_zero(2)));
        assert!(!pv_member(DelayK(1), &Semigroup::left_zero(2)));
        assert!(pv_member(ReverseDelayK(1), &Semigroup::left_zero(2)));
        assert!(pv_member(LocallyTrivial, &Semigroup::left_zero(2)));
        assert!(!pv_member(LocallyTrivial, &sl2));
        assert!(pv_member(UniqueIdempotent, &z2));
        assert!(!pv_member(Groups, &sl2));
    }

    #[test]
    fn parse_round_trip() {
        for pv in Pseudovariety::SIMPLE
            .into_iter()
            .chain([NilpotentK(3), DelayK(2), ReverseDelayK(1)])
        {
            assert_eq!(pv.to_string().parse::<Pseudovariety>().unwrap(), pv);
        }
        assert!("delay".parse::<Pseudovariety>().is_err());
        assert!("delay:0".parse::<Pseudovariety>().is_err());
        assert!("aperiodic:2".parse::<Pseudovariety>().is_err());
    }

    #[test]
    fn reversal_is_an_involution() {
        for pv in Pseudovariety::SIMPLE {
            assert_eq!(pv.reversed().reversed(), pv);
        }
    }
}
