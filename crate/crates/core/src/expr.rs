//! Expression language for ad-hoc inspection:
//!
//!   query  := (chop | socle | head | end | dims) '(' expr ')'
//!   expr   := factor (('⊗' | '*') factor)*
//!   factor := atom | 'res' '[' sub ']' '(' expr ')' | 'ind' '(' expr ')'
//!           | 'e_0'..'f_1' '(' expr ')' | 'dual' '(' expr ')'
//!   atom   := ('D' | 'S' | 'M') '"' parts '"'
//!   sub    := 'n-1' | 'n-2' | 'alt' | composition
//!
//! Parse errors carry the byte position; evaluation enforces a dimension
//! budget and reports the offending dimension on overrun.

use serde_json::json;
use thiserror::Error;

use crate::functors::{e_power, f_power, restrict, restrict_to_symmetric, tensor};
use crate::group::{as_young_factor, induce, perm_module, SubgroupKind};
use crate::meataxe::{chop, head, hom_space, socle, SimpleCatalog};
use crate::module::{Group, Module};
use crate::partition::Partition;
use crate::specht::{irreducible_module, specht_module};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("resource limit: module dimension {dim} exceeds budget {budget}")]
    Resource { dim: usize, budget: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Ast {
    Atom(char, Partition),
    Tensor(Box<Ast>, Box<Ast>),
    Res(String, Box<Ast>),
    Ind(Box<Ast>),
    Branch(char, u8, Box<Ast>),
    Dual(Box<Ast>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Query {
    kind: String,
    ast: Ast,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            text,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<(), ExprError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn eat_keyword(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src[self.pos] as char;
            if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                self.pos += 1;
            } else {
                break;
            }
        }
        self.text[start..self.pos].to_string()
    }

    fn parse_query(&mut self) -> Result<Query, ExprError> {
        let kind = self.eat_keyword();
        match kind.as_str() {
            "chop" | "socle" | "head" | "end" | "dims" => {}
            _ => return self.err(format!("unknown query '{kind}'")),
        }
        self.eat('(')?;
        let ast = self.parse_expr()?;
        self.eat(')')?;
        self.skip_ws();
        if self.pos != self.src.len() {
            return self.err("trailing input");
        }
        Ok(Query { kind, ast })
    }

    fn parse_expr(&mut self) -> Result<Ast, ExprError> {
        let mut lhs = self.parse_factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('⊗') | Some('*') => {
                    let c = self.peek().unwrap();
                    self.pos += c.len_utf8();
                    let rhs = self.parse_factor()?;
                    lhs = Ast::Tensor(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Ast, ExprError> {
        self.skip_ws();
        match self.peek() {
            Some('D') | Some('S') | Some('M') => {
                let tag = self.peek().unwrap();
                self.pos += 1;
                self.eat('"')?;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b'"' {
                    self.pos += 1;
                }
                let parts = &self.text[start..self.pos];
                self.eat('"')?;
                let lam: Partition = parts
                    .parse()
                    .map_err(|e| ExprError::Parse {
                        pos: start,
                        msg: format!("{e}"),
                    })?;
                Ok(Ast::Atom(tag, lam))
            }
            _ => {
                let kw = self.eat_keyword();
                match kw.as_str() {
                    "res" => {
                        self.eat('[')?;
                        self.skip_ws();
                        let start = self.pos;
                        while self.pos < self.src.len() && self.src[self.pos] != b']' {
                            self.pos += 1;
                        }
                        let sub = self.text[start..self.pos].trim().to_string();
                        self.eat(']')?;
                        self.eat('(')?;
                        let inner = self.parse_expr()?;
                        self.eat(')')?;
                        Ok(Ast::Res(sub, Box::new(inner)))
                    }
                    "ind" => {
                        self.eat('(')?;
                        let inner = self.parse_expr()?;
                        self.eat(')')?;
                        Ok(Ast::Ind(Box::new(inner)))
                    }
                    "dual" => {
                        self.eat('(')?;
                        let inner = self.parse_expr()?;
                        self.eat(')')?;
                        Ok(Ast::Dual(Box::new(inner)))
                    }
                    "e_0" | "e_1" | "f_0" | "f_1" => {
                        let op = kw.chars().next().unwrap();
                        let i = kw.bytes().last().unwrap() - b'0';
                        self.eat('(')?;
                        let inner = self.parse_expr()?;
                        self.eat(')')?;
                        Ok(Ast::Branch(op, i, Box::new(inner)))
                    }
                    _ => self.err(format!("unknown operator '{kw}'")),
                }
            }
        }
    }
}

pub fn parse_query(text: &str) -> Result<Query, ExprError> {
    Parser::new(text).parse_query()
}

fn check_budget(dim: usize, budget: usize) -> Result<(), ExprError> {
    if dim > budget {
        Err(ExprError::Resource { dim, budget })
    } else {
        Ok(())
    }
}

fn eval_ast(ast: &Ast, budget: usize) -> Result<Module, ExprError> {
    let m = match ast {
        Ast::Atom(tag, lam) => match tag {
            'D' => irreducible_module(lam).map_err(|e| ExprError::Eval(e.to_string()))?,
            'S' => specht_module(lam),
            'M' => {
                // guard: permutation module dimension is a multinomial
                let mut dim = 1usize;
                let mut rem = lam.n();
                for &p in lam.parts() {
                    for k in 1..=p as usize {
                        dim = dim.saturating_mul(rem) / k;
                        rem -= 1;
                        if dim > budget {
                            return Err(ExprError::Resource { dim, budget });
                        }
                    }
                }
                perm_module(lam.parts())
            }
            _ => unreachable!(),
        },
        Ast::Tensor(a, b) => {
            let ma = eval_ast(a, budget)?;
            let mb = eval_ast(b, budget)?;
            if ma.group != mb.group {
                return Err(ExprError::Eval(format!(
                    "tensor factors act through different groups ({:?} vs {:?})",
                    ma.group, mb.group
                )));
            }
            check_budget(ma.dim.saturating_mul(mb.dim), budget)?;
            tensor(&ma, &mb)
        }
        Ast::Res(sub, inner) => {
            let m = eval_ast(inner, budget)?;
            let Group::Symmetric(n) = m.group else {
                return Err(ExprError::Eval("res expects a symmetric-group module".into()));
            };
            match sub.as_str() {
                "n-1" => restrict_to_symmetric(&m, n - 1),
                "n-2" => restrict_to_symmetric(&m, n - 2),
                "alt" | "a_n" => restrict(&m, &SubgroupKind::Alternating),
                comp => {
                    let alpha: Partition = comp
                        .parse()
                        .map_err(|e| ExprError::Eval(format!("bad subgroup '{comp}': {e}")))?;
                    if alpha.n() != n {
                        return Err(ExprError::Eval(format!(
                            "composition {alpha} does not sum to {n}"
                        )));
                    }
                    restrict(&m, &SubgroupKind::Young(alpha.parts().to_vec()))
                }
            }
        }
        Ast::Ind(inner) => {
            let m = eval_ast(inner, budget)?;
            let Group::Symmetric(n) = m.group else {
                return Err(ExprError::Eval("ind expects a symmetric-group module".into()));
            };
            check_budget(m.dim.saturating_mul(n + 1), budget)?;
            let y = as_young_factor(&m, &[n as u32, 1]);
            induce(&y, format!("ind({})", m.label))
        }
        Ast::Branch(op, i, inner) => {
            let m = eval_ast(inner, budget)?;
            match op {
                'e' => e_power(&m, *i, 1),
                'f' => {
                    check_budget(m.dim.saturating_mul(m.group.degree() + 1), budget)?;
                    f_power(&m, *i, 1)
                }
                _ => unreachable!(),
            }
        }
        Ast::Dual(inner) => eval_ast(inner, budget)?.dual(),
    };
    check_budget(m.dim, budget)?;
    Ok(m)
}

fn catalog_for(m: &Module) -> Result<SimpleCatalog, ExprError> {
    match &m.group {
        Group::Symmetric(n) => Ok(SimpleCatalog::symmetric(*n)),
        Group::Young(alpha) if alpha.len() == 2 && alpha[1] == 2 => {
            Ok(SimpleCatalog::young_two(alpha[0] as usize))
        }
        g => Err(ExprError::Eval(format!(
            "composition factors unsupported over {g:?}"
        ))),
    }
}

/// Evaluate a query; the budget caps every intermediate dimension.
pub fn evaluate(text: &str, budget: usize, seed: u64) -> Result<serde_json::Value, ExprError> {
    let q = parse_query(text)?;
    let m = eval_ast(&q.ast, budget)?;
    let value = match q.kind.as_str() {
        "dims" => json!({ "dim": m.dim }),
        "end" => json!({ "end_dim": hom_space(&m, &m).dim() }),
        "chop" => {
            let catalog = catalog_for(&m)?;
            let factors = chop(&m, &catalog, seed);
            json!({ "factors": factors, "display": factors.to_string() })
        }
        "socle" => {
            let catalog = catalog_for(&m)?;
            let s = socle(&m, &catalog);
            json!({ "socle": s, "display": s.to_string() })
        }
        "head" => {
            let catalog = catalog_for(&m)?;
            let h = head(&m, &catalog);
            json!({ "head": h, "display": h.to_string() })
        }
        _ => unreachable!(),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_errors_carry_positions() {
        let e = parse_query("frobnicate(D\"5,1\")").unwrap_err();
        match e {
            ExprError::Parse { pos, .. } => assert_eq!(pos, 10),
            _ => panic!("expected parse error"),
        }
        assert!(parse_query("chop(D\"5,1\"").is_err());
        assert!(parse_query("chop(Q\"5,1\")").is_err());
    }

    #[test]
    fn chop_m51() {
        let v = evaluate("chop(M\"5,1\")", 10_000, 5).unwrap();
        assert_eq!(v["display"], "{(5,1):1,(6):2}");
    }

    #[test]
    fn end_of_restricted_js_module() {
        let v = evaluate("end(res[n-1](D\"4,2\"))", 10_000, 5).unwrap();
        assert_eq!(v["end_dim"], 1);
    }

    #[test]
    fn dims_consistency_with_family() {
        let d321 = evaluate("dims(D\"3,2,1\")", 10_000, 5).unwrap()["dim"]
            .as_u64()
            .unwrap();
        let d42 = evaluate("dims(D\"4,2\")", 10_000, 5).unwrap()["dim"]
            .as_u64()
            .unwrap();
        let d51 = evaluate("dims(D\"5,1\")", 10_000, 5).unwrap()["dim"]
            .as_u64()
            .unwrap();
        assert_eq!(d321, d42 * d51);
    }

    #[test]
    fn tensor_and_budget() {
        let v = evaluate("dims(D\"4,2\"⊗D\"5,1\")", 10_000, 5).unwrap();
        assert_eq!(v["dim"], 16);
        let e = evaluate("dims(M\"1,1,1,1,1,1,1,1\")", 100, 5).unwrap_err();
        assert!(matches!(e, ExprError::Resource { .. }));
    }
}
