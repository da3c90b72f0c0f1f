//! Moduli and context specifiers as expression trees.
//!
//! Text syntax: `grp`, `cycgrp`, `rcl`, `lcl`, `jcl`, `prinr`, `prinl`,
//! `prinj`, `prod:k`, `suffix:k`, `prefix:k`, `e`, `reg`, `join(a,b)`,
//! `restrict(a,ctx)`, `ctx:grp`, `ctx:cycgrp`, `ctx:loc`, `ctx:egen`,
//! `ctx:reggen`, `ctx:full`, `gen(a)` and `epapprox:PV:k`.

mod completion;
mod eval;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pseudovariety::Pseudovariety;

pub use completion::{completion_step, monad_completion, Completion, COMPLETION_FACE_CAP};
pub use eval::{
    ctx_operator_member, eval_context, eval_modulus, functor_value, points_member,
    restrict_modulus,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinModulus {
    /// Subgroups.
    Grp,
    /// Cyclic subgroups.
    CycGrp,
    RCl,
    LCl,
    JCl,
    /// Principal right ideals `xS^I`.
    PrinR,
    /// Principal left ideals `S^I x`.
    PrinL,
    PrinJ,
    /// The set of all `k`-fold products.
    Prod(usize),
    /// `S^I p` for each `k`-fold product `p`.
    Suffix(usize),
    /// `p S^I` for each `k`-fold product `p`.
    Prefix(usize),
    /// The set of idempotents.
    E,
    /// The set of regular elements.
    Reg,
}

impl BuiltinModulus {
    /// The parameter-free builtins.
    pub const SIMPLE: [BuiltinModulus; 10] = [
        BuiltinModulus::Grp,
        BuiltinModulus::CycGrp,
        BuiltinModulus::RCl,
        BuiltinModulus::LCl,
        BuiltinModulus::JCl,
        BuiltinModulus::PrinR,
        BuiltinModulus::PrinL,
        BuiltinModulus::PrinJ,
        BuiltinModulus::E,
        BuiltinModulus::Reg,
    ];

    /// Every builtin, with the parameterized ones at each `k` in `ks`.
    pub fn all_with(ks: &[usize]) -> Vec<BuiltinModulus> {
        let mut out = Self::SIMPLE.to_vec();
        for &k in ks {
            out.extend([
                BuiltinModulus::Prod(k),
                BuiltinModulus::Suffix(k),
                BuiltinModulus::Prefix(k),
            ]);
        }
        out
    }

    /// The pseudovariety identified with the points of this modulus.
    pub fn points(self) -> Pseudovariety {
        use BuiltinModulus as B;
        use Pseudovariety as P;
        match self {
            B::Grp | B::CycGrp => P::Aperiodic,
            B::RCl => P::RTrivial,
            B::LCl => P::LTrivial,
            B::JCl => P::JTrivial,
            B::PrinR => P::LeftZero,
            B::PrinL => P::RightZero,
            B::PrinJ => P::Trivial,
            B::Prod(k) => P::NilpotentK(k),
            B::Suffix(k) => P::DelayK(k),
            B::Prefix(k) => P::ReverseDelayK(k),
            B::E => P::UniqueIdempotent,
            B::Reg => P::Nilpotent,
        }
    }

    fn param(self) -> Option<usize> {
        match self {
            BuiltinModulus::Prod(k) | BuiltinModulus::Suffix(k) | BuiltinModulus::Prefix(k) => {
                Some(k)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BuiltinContext {
    Grp,
    CycGrp,
    /// Local monoids `eSe`.
    Loc,
    /// The subsemigroup generated by the idempotents.
    EGen,
    /// The subsemigroup generated by the regular elements.
    RegGen,
    /// `{S}`.
    Full,
}

impl BuiltinContext {
    pub const ALL: [BuiltinContext; 6] = [
        BuiltinContext::Grp,
        BuiltinContext::CycGrp,
        BuiltinContext::Loc,
        BuiltinContext::EGen,
        BuiltinContext::RegGen,
        BuiltinContext::Full,
    ];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Modulus {
    Builtin(BuiltinModulus),
    Join(Box<Modulus>, Box<Modulus>),
    FromContext(Box<Context>),
    /// `Λ|_𝒪`: `Λ` evaluated on every member of the context.
    Restrict(Box<Modulus>, Box<Context>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Context {
    Builtin(BuiltinContext),
    /// Subsemigroups generated by the sets of a modulus.
    FromModulus(Box<Modulus>),
    /// Subsemigroups lying in an idempotent fiber of every relational
    /// morphism into members of the pseudovariety of order at most `k`.
    /// Codomains are bounded, so this contains the exact context.
    EPApprox(Pseudovariety, usize),
}

impl Modulus {
    pub fn join(a: Modulus, b: Modulus) -> Modulus {
        Modulus::Join(Box::new(a), Box::new(b))
    }

    pub fn restrict(self, ctx: Context) -> Modulus {
        Modulus::Restrict(Box::new(self), Box::new(ctx))
    }

    /// The pseudovariety wired to the points of this modulus, when there is
    /// one. Joins are wired only when both sides agree.
    pub fn wired_points(&self) -> Option<Pseudovariety> {
        match self {
            Modulus::Builtin(b) => Some(b.points()),
            Modulus::Join(a, b) => match (a.wired_points(), b.wired_points()) {
                (Some(x), Some(y)) if x == y => Some(x),
                _ => None,
            },
            Modulus::FromContext(_) | Modulus::Restrict(..) => None,
        }
    }

    /// Whether evaluation involves the bounded idempotent-pointlike context.
    pub fn is_approximate(&self) -> bool {
        match self {
            Modulus::Builtin(_) => false,
            Modulus::Join(a, b) => a.is_approximate() || b.is_approximate(),
            Modulus::FromContext(c) => c.is_approximate(),
            Modulus::Restrict(m, c) => m.is_approximate() || c.is_approximate(),
        }
    }

    pub(crate) fn check_params(&self) -> Result<()> {
        match self {
            Modulus::Builtin(b) => match b.param() {
                Some(0) => Err(Error::InvalidExpression(format!("{self}: k must be at least 1"))),
                _ => Ok(()),
            },
            Modulus::Join(a, b) => a.check_params().and(b.check_params()),
            Modulus::FromContext(c) => c.check_params(),
            Modulus::Restrict(m, c) => m.check_params().and(c.check_params()),
        }
    }
}

impl Context {
    pub fn is_approximate(&self) -> bool {
        match self {
            Context::Builtin(_) => false,
            Context::FromModulus(m) => m.is_approximate(),
            Context::EPApprox(..) => true,
        }
    }

    pub(crate) fn check_params(&self) -> Result<()> {
        match self {
            Context::Builtin(_) => Ok(()),
            Context::FromModulus(m) => m.check_params(),
            Context::EPApprox(_, 0) => Err(Error::InvalidExpression(format!(
                "{self}: codomain bound must be at least 1"
            ))),
            Context::EPApprox(..) => Ok(()),
        }
    }
}

impl From<BuiltinModulus> for Modulus {
    fn from(b: BuiltinModulus) -> Self {
        Modulus::Builtin(b)
    }
}

impl From<BuiltinContext> for Context {
    fn from(b: BuiltinContext) -> Self {
        Context::Builtin(b)
    }
}

impl fmt::Display for BuiltinModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BuiltinModulus::*;
        match self {
            Grp => write!(f, "grp"),
            CycGrp => write!(f, "cycgrp"),
            RCl => write!(f, "rcl"),
            LCl => write!(f, "lcl"),
            JCl => write!(f, "jcl"),
            PrinR => write!(f, "prinr"),
            PrinL => write!(f, "prinl"),
            PrinJ => write!(f, "prinj"),
            Prod(k) => write!(f, "prod:{k}"),
            Suffix(k) => write!(f, "suffix:{k}"),
            Prefix(k) => write!(f, "prefix:{k}"),
            E => write!(f, "e"),
            Reg => write!(f, "reg"),
        }
    }
}

impl fmt::Display for BuiltinContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BuiltinContext::Grp => "grp",
            BuiltinContext::CycGrp => "cycgrp",
            BuiltinContext::Loc => "loc",
            BuiltinContext::EGen => "egen",
            BuiltinContext::RegGen => "reggen",
            BuiltinContext::Full => "full",
        };
        write!(f, "ctx:{name}")
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Builtin(b) => write!(f, "{b}"),
            Modulus::Join(a, b) => write!(f, "join({a},{b})"),
            Modulus::FromContext(c) => write!(f, "{c}"),
            Modulus::Restrict(m, c) => write!(f, "restrict({m},{c})"),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Builtin(b) => write!(f, "{b}"),
            Context::FromModulus(m) => write!(f, "gen({m})"),
            Context::EPApprox(pv, k) => write!(f, "epapprox:{pv}:{k}"),
        }
    }
}

/// A parsed expression, before it is known which kind is wanted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Modulus(Modulus),
    Context(Context),
}

impl Expr {
    /// Contexts are moduli, so this always succeeds.
    pub fn into_modulus(self) -> Modulus {
        match self {
            Expr::Modulus(m) => m,
            Expr::Context(c) => Modulus::FromContext(Box::new(c)),
        }
    }

    /// A modulus in context position stands for `gen(...)`.
    pub fn into_context(self) -> Context {
        match self {
            Expr::Context(c) => c,
            Expr::Modulus(Modulus::FromContext(c)) => *c,
            Expr::Modulus(m) => Context::FromModulus(Box::new(m)),
        }
    }
}

impl FromStr for Expr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser {
            src: text,
            pos: 0,
        };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != text.len() {
            return Err(p.error("trailing input"));
        }
        match &e {
            Expr::Modulus(m) => m.check_params()?,
            Expr::Context(c) => c.check_params()?,
        }
        Ok(e)
    }
}

impl FromStr for Modulus {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Ok(text.parse::<Expr>()?.into_modulus())
    }
}

impl FromStr for Context {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        Ok(text.parse::<Expr>()?.into_context())
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::InvalidExpression(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == ':' || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn expr(&mut self) -> Result<Expr> {
        let word = self.word().to_ascii_lowercase();
        match word.as_str() {
            "join" => {
                self.expect('(')?;
                let a = self.expr()?.into_modulus();
                self.expect(',')?;
                let b = self.expr()?.into_modulus();
                self.expect(')')?;
                Ok(Expr::Modulus(Modulus::join(a, b)))
            }
            "restrict" => {
                self.expect('(')?;
                let m = self.expr()?.into_modulus();
                self.expect(',')?;
                let c = self.expr()?.into_context();
                self.expect(')')?;
                Ok(Expr::Modulus(m.restrict(c)))
            }
            "gen" => {
                self.expect('(')?;
                let m = self.expr()?.into_modulus();
                self.expect(')')?;
                Ok(Expr::Context(Context::FromModulus(Box::new(m))))
            }
            "" => Err(self.error("expected an expression")),
            w => self.leaf(w),
        }
    }

    fn leaf(&self, w: &str) -> Result<Expr> {
        use BuiltinModulus as B;
        if let Some(rest) = w.strip_prefix("ctx:") {
            let c = match rest {
                "grp" => BuiltinContext::Grp,
                "cycgrp" => BuiltinContext::CycGrp,
                "loc" => BuiltinContext::Loc,
                "egen" => BuiltinContext::EGen,
                "reggen" => BuiltinContext::RegGen,
                "full" => BuiltinContext::Full,
                _ => return Err(self.error(&format!("unknown context `{w}`"))),
            };
            return Ok(Expr::Context(Context::Builtin(c)));
        }
        if let Some(rest) = w.strip_prefix("epapprox:") {
            let (pv, k) = rest
                .rsplit_once(':')
                .ok_or_else(|| self.error("epapprox needs `epapprox:PV:k`"))?;
            let pv = pv
                .parse::<Pseudovariety>()
                .map_err(|e| self.error(&e.to_string()))?;
            let k = k.parse().map_err(|_| self.error("bad codomain bound"))?;
            return Ok(Expr::Context(Context::EPApprox(pv, k)));
        }
        let (name, param) = match w.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (w, None),
        };
        let k = || -> Result<usize> {
            param
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| self.error(&format!("`{name}` needs a parameter `{name}:k`")))
        };
        let simple = |b| match param {
            None => Ok(b),
            Some(_) => Err(self.error(&format!("`{name}` takes no parameter"))),
        };
        let b = match name {
            "grp" => simple(B::Grp)?,
            "cycgrp" => simple(B::CycGrp)?,
            "rcl" => simple(B::RCl)?,
            "lcl" => simple(B::LCl)?,
            "jcl" => simple(B::JCl)?,
            "prinr" => simple(B::PrinR)?,
            "prinl" => simple(B::PrinL)?,
            "prinj" => simple(B::PrinJ)?,
            "e" => simple(B::E)?,
            "reg" => simple(B::Reg)?,
            "prod" => B::Prod(k()?),
            "suffix" => B::Suffix(k()?),
            "prefix" => B::Prefix(k()?),
            _ => return Err(self.error(&format!("unknown modulus `{w}`"))),
        };
        Ok(Expr::Modulus(Modulus::Builtin(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for text in [
            "grp",
            "prod:2",
            "join(rcl,lcl)",
            "restrict(grp,ctx:loc)",
            "restrict(jcl,epapprox:aperiodic:2)",
            "ctx:egen",
            "restrict(e,gen(prinj))",
            "epapprox:nilpotent:2:3",
        ] {
            let e: Expr = text.parse().unwrap();
            let back = match &e {
                Expr::Modulus(m) => m.to_string(),
                Expr::Context(c) => c.to_string(),
            };
            assert_eq!(back, text);
        }
        let m: Modulus = " join ( grp , ctx:full ) ".parse().unwrap();
        assert_eq!(
            m,
            Modulus::join(
                BuiltinModulus::Grp.into(),
                Modulus::FromContext(Box::new(BuiltinContext::Full.into()))
            )
        );
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "prod", "prod:0", "grp:2", "join(grp)", "grp grp", "ctx:zzz", "epapprox:aperiodic:0"] {
            assert!(bad.parse::<Expr>().is_err(), "{bad}");
        }
    }

    #[test]
    fn wiring() {
        assert_eq!(
            Modulus::from(BuiltinModulus::Suffix(2)).wired_points(),
            Some(Pseudovariety::DelayK(2))
        );
        assert_eq!("join(rcl,lcl)".parse::<Modulus>().unwrap().wired_points(), None);
        assert_eq!("join(grp,cycgrp)".parse::<Modulus>().unwrap().wired_points(), Some(Pseudovariety::Aperiodic));
        assert_eq!(BuiltinModulus::all_with(&[1, 2]).len(), 16);
    }
}
