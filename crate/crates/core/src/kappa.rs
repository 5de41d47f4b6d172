//! Scale-coefficient rules for the complementary-series restriction.
//!
//! The coefficient `kappa(t)` multiplying the compensation term has no
//! fixed definition, so it is pluggable: the built-in rules are `one`
//! (`kappa == 1`, the default) and `inverse-gap` (`kappa(t) = 1/(1-t)`),
//! plus arbitrary user-supplied rational expressions in `t` such as
//! `"t/(1-t)"` or `"2/3"`. Expressions evaluate exactly over rationals.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};

use num_traits::{One, Zero};

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KappaError {
    #[error("failed to parse expression at byte {position}: {reason}")]
    Parse { position: usize, reason: String },
    #[error("division by zero while evaluating kappa at t = {t}")]
    DivisionByZero { t: String },
    #[error("unknown kappa rule {name:?}; expected \"one\", \"inverse-gap\", or a rational expression in t")]
    UnknownRule { name: String },
}

/// Expression tree over integer literals and the variable `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(i64),
    Var,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn eval(&self, t: &Rat) -> Result<Rat, KappaError> {
        match self {
            Expr::Const(c) => Ok(crate::rat::rat(*c)),
            Expr::Var => Ok(t.clone()),
            Expr::Neg(e) => Ok(-e.eval(t)?),
            Expr::Add(a, b) => Ok(a.eval(t)? + b.eval(t)?),
            Expr::Sub(a, b) => Ok(a.eval(t)? - b.eval(t)?),
            Expr::Mul(a, b) => Ok(a.eval(t)? * b.eval(t)?),
            Expr::Div(a, b) => {
                let denom = b.eval(t)?;
                if denom.is_zero() {
                    return Err(KappaError::DivisionByZero {
                        t: crate::rat::format_rat(t),
                    });
                }
                Ok(a.eval(t)? / denom)
            }
        }
    }
}

/// A parsed rational expression in the single variable `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalExpr {
    source: String,
    root: Expr,
}

impl RationalExpr {
    pub fn parse(src: &str) -> Result<Self, KappaError> {
        let mut p = Parser {
            bytes: src.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let root = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(KappaError::Parse {
                position: p.pos,
                reason: "unexpected trailing input".to_string(),
            });
        }
        Ok(RationalExpr {
            source: src.to_string(),
            root,
        })
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat, KappaError> {
        self.root.eval(t)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, reason: &str) -> KappaError {
        KappaError::Parse {
            position: self.pos,
            reason: reason.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Expr, KappaError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, KappaError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, KappaError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr, KappaError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Expr::Var)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let text = core::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                let value: i64 = text
                    .parse()
                    .map_err(|_| self.err("integer literal out of range"))?;
                Ok(Expr::Const(value))
            }
            _ => Err(self.err("expected a number, 't', '-', or '('")),
        }
    }
}

/// The configured scale rule. Stored symbolically so downstream consumers
/// can re-evaluate; see [`crate::classify::ScaleRecord`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum KappaRule {
    /// `kappa == 1` (the default).
    #[default]
    One,
    /// `kappa(t) = 1/(1-t)`.
    InverseGap,
    /// A user-supplied rational expression in `t`.
    Custom(RationalExpr),
}

impl KappaRule {
    /// Resolve a rule name: `"one"`, `"inverse-gap"`, or reject.
    pub fn named(name: &str) -> Result<Self, KappaError> {
        match name {
            "one" => Ok(KappaRule::One),
            "inverse-gap" => Ok(KappaRule::InverseGap),
            _ => Err(KappaError::UnknownRule {
                name: name.to_string(),
            }),
        }
    }

    pub fn custom(expr: &str) -> Result<Self, KappaError> {
        Ok(KappaRule::Custom(RationalExpr::parse(expr)?))
    }

    pub fn eval(&self, t: &Rat) -> Result<Rat, KappaError> {
        match self {
            KappaRule::One => Ok(Rat::one()),
            KappaRule::InverseGap => {
                let gap = Rat::one() - t;
                if gap.is_zero() {
                    return Err(KappaError::DivisionByZero {
                        t: crate::rat::format_rat(t),
                    });
                }
                Ok(gap.recip())
            }
            KappaRule::Custom(expr) => expr.eval(t),
        }
    }

    /// Short description for reports.
    pub fn describe(&self) -> String {
        match self {
            KappaRule::One => "one".to_string(),
            KappaRule::InverseGap => "inverse-gap".to_string(),
            KappaRule::Custom(e) => format!("custom({})", e.source()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};

    #[test]
    fn builtin_rules() {
        let half = ratio(1, 2);
        assert_eq!(KappaRule::One.eval(&half).unwrap(), rat(1));
        assert_eq!(KappaRule::InverseGap.eval(&half).unwrap(), rat(2));
        assert_eq!(
            KappaRule::InverseGap.eval(&ratio(3, 4)).unwrap(),
            rat(4)
        );
        assert!(matches!(
            KappaRule::named("nope"),
            Err(KappaError::UnknownRule { .. })
        ));
    }

    #[test]
    fn expression_arithmetic_is_exact() {
        let cases = [
            ("1", ratio(1, 2), rat(1)),
            ("2/3", ratio(1, 2), ratio(2, 3)),
            ("t", ratio(1, 3), ratio(1, 3)),
            ("1/(1-t)", ratio(1, 2), rat(2)),
            ("t/(1-t)", ratio(1, 4), ratio(1, 3)),
            ("-t + 1", ratio(1, 4), ratio(3, 4)),
            ("(1+t)*(1-t)", ratio(1, 2), ratio(3, 4)),
            ("2*t*t - 1/2", ratio(1, 2), rat(0)),
        ];
        for (src, t, expected) in cases {
            let expr = RationalExpr::parse(src).unwrap_or_else(|e| panic!("{src}: {e}"));
            assert_eq!(expr.eval(&t).unwrap(), expected, "{src}");
        }
    }

    #[test]
    fn division_by_zero_is_reported() {
        let expr = RationalExpr::parse("1/(t-t)").unwrap();
        assert!(matches!(
            expr.eval(&ratio(1, 2)),
            Err(KappaError::DivisionByZero { .. })
        ));
    }

    #[test]
    fn parse_errors_carry_position() {
        for bad in ["", "1 +", "(1", "x", "1..2", "t t"] {
            let err = RationalExpr::parse(bad).unwrap_err();
            assert!(matches!(err, KappaError::Parse { .. }), "{bad:?}");
        }
    }
}
