//! Recursive-descent parser producing located statements, plus the canonical
//! polynomial-literal entry point.

use crate::error::{Diagnostic, Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

use super::lexer::{lex, TokKind, Token};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Num(u64),
    Str(String),
    Name(String),
    Call { name: String, args: Vec<Expr> },
    /// Parenthesized comma list with two or more entries.
    List(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
    Neg(Box<Expr>),
    RingLit { prime: u64, vars: Vec<String>, gens: Vec<Expr> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindKind {
    Ring,
    Ideal,
    Poly,
    Class,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StmtKind {
    Bind { kind: BindKind, name: String, expr: Expr },
    Command(Expr),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>, expected: &[&str]) -> Result<T> {
        let t = self.peek();
        Err(Error::Parse(Diagnostic {
            line: t.line,
            col: t.col,
            message: format!("{} but found {}", message.into(), t.kind.describe()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }))
    }

    fn expect(&mut self, kind: TokKind, what: &str) -> Result<Token> {
        if self.peek().kind == kind {
            Ok(self.next())
        } else {
            self.fail(format!("expected {what}"), &[&kind.describe()])
        }
    }

    fn program(&mut self) -> Result<Program> {
        let mut stmts = Vec::new();
        while self.peek().kind != TokKind::Eof {
            stmts.push(self.stmt()?);
        }
        Ok(Program { stmts })
    }

    fn stmt(&mut self) -> Result<Stmt> {
        let t = self.peek().clone();
        let bind = match &t.kind {
            TokKind::Ident(s) => match s.as_str() {
                "ring" => Some(BindKind::Ring),
                "ideal" => Some(BindKind::Ideal),
                "poly" => Some(BindKind::Poly),
                "class" => Some(BindKind::Class),
                _ => None,
            },
            _ => None,
        };
        if let Some(kind) = bind {
            self.next();
            let name = match self.next() {
                Token { kind: TokKind::Ident(n), .. } => n,
                _ => return self.fail("expected a name to bind", &["identifier"]),
            };
            self.expect(TokKind::Eq, "`=`")?;
            let expr = self.expr()?;
            self.expect(TokKind::Semi, "`;` after binding")?;
            return Ok(Stmt { kind: StmtKind::Bind { kind, name, expr }, line: t.line, col: t.col });
        }
        // `print expr;` works without parentheses
        if matches!(&t.kind, TokKind::Ident(s) if s == "print")
            && self.toks[self.pos + 1].kind != TokKind::LParen
        {
            self.next();
            let arg = self.expr()?;
            self.expect(TokKind::Semi, "`;` after command")?;
            let call = Expr {
                kind: ExprKind::Call { name: "print".into(), args: vec![arg] },
                line: t.line,
                col: t.col,
            };
            return Ok(Stmt { kind: StmtKind::Command(call), line: t.line, col: t.col });
        }
        let expr = self.expr()?;
        if !matches!(expr.kind, ExprKind::Call { .. }) {
            return Err(Error::Parse(Diagnostic {
                line: expr.line,
                col: expr.col,
                message: "a statement must be a binding or a command invocation".into(),
                expected: vec!["`ring`".into(), "`ideal`".into(), "`poly`".into(), "`class`".into(), "command".into()],
            }));
        }
        self.expect(TokKind::Semi, "`;` after command")?;
        Ok(Stmt { kind: StmtKind::Command(expr), line: t.line, col: t.col })
    }

    fn expr(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        let mut acc = if t.kind == TokKind::Minus {
            self.next();
            let term = self.term()?;
            Expr { kind: ExprKind::Neg(Box::new(term)), line: t.line, col: t.col }
        } else {
            self.term()?
        };
        loop {
            match self.peek().kind {
                TokKind::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    let (line, col) = (acc.line, acc.col);
                    acc = Expr { kind: ExprKind::Add(Box::new(acc), Box::new(rhs)), line, col };
                }
                TokKind::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    let (line, col) = (acc.line, acc.col);
                    acc = Expr { kind: ExprKind::Sub(Box::new(acc), Box::new(rhs)), line, col };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        while self.peek().kind == TokKind::Star {
            self.next();
            let rhs = self.factor()?;
            let (line, col) = (acc.line, acc.col);
            acc = Expr { kind: ExprKind::Mul(Box::new(acc), Box::new(rhs)), line, col };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek().kind == TokKind::Caret {
            self.next();
            let exp = match self.next() {
                Token { kind: TokKind::Int(n), .. } => n,
                _ => return self.fail("expected an exponent", &["integer"]),
            };
            let (line, col) = (base.line, base.col);
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), exp), line, col });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.kind {
            TokKind::Int(n) => {
                self.next();
                Ok(Expr { kind: ExprKind::Num(n), line: t.line, col: t.col })
            }
            TokKind::Str(s) => {
                self.next();
                Ok(Expr { kind: ExprKind::Str(s), line: t.line, col: t.col })
            }
            TokKind::Ident(name) => {
                self.next();
                if name == "Fp" && self.peek().kind == TokKind::LParen {
                    return self.ring_lit(t.line, t.col);
                }
                if self.peek().kind == TokKind::LParen {
                    self.next();
                    let mut args = Vec::new();
                    if self.peek().kind != TokKind::RParen {
                        loop {
                            args.push(self.expr()?);
                            if self.peek().kind == TokKind::Comma {
                                self.next();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(TokKind::RParen, "`)` closing the argument list")?;
                    return Ok(Expr { kind: ExprKind::Call { name, args }, line: t.line, col: t.col });
                }
                Ok(Expr { kind: ExprKind::Name(name), line: t.line, col: t.col })
            }
            TokKind::LParen => {
                self.next();
                let mut items = vec![self.expr()?];
                while self.peek().kind == TokKind::Comma {
                    self.next();
                    items.push(self.expr()?);
                }
                self.expect(TokKind::RParen, "`)`")?;
                if items.len() == 1 {
                    let inner = items.pop().unwrap();
                    Ok(Expr { kind: inner.kind, line: t.line, col: t.col })
                } else {
                    Ok(Expr { kind: ExprKind::List(items), line: t.line, col: t.col })
                }
            }
            _ => self.fail("expected an expression", &["integer", "name", "`(`", "string"]),
        }
    }

    /// `Fp(p)[v1,...,vn]` optionally followed by `/ (g1,...,gm)`.
    fn ring_lit(&mut self, line: usize, col: usize) -> Result<Expr> {
        self.expect(TokKind::LParen, "`(` after Fp")?;
        let prime = match self.next() {
            Token { kind: TokKind::Int(n), .. } => n,
            _ => return self.fail("expected the characteristic", &["integer"]),
        };
        self.expect(TokKind::RParen, "`)` after the characteristic")?;
        self.expect(TokKind::LBracket, "`[` starting the variable list")?;
        let mut vars = Vec::new();
        loop {
            match self.next() {
                Token { kind: TokKind::Ident(v), .. } => vars.push(v),
                _ => return self.fail("expected a variable name", &["identifier"]),
            }
            match self.peek().kind {
                TokKind::Comma => {
                    self.next();
                }
                TokKind::RBracket => break,
                _ => return self.fail("expected `,` or `]` in the variable list", &["`,`", "`]`"]),
            }
        }
        self.expect(TokKind::RBracket, "`]`")?;
        let mut gens = Vec::new();
        if self.peek().kind == TokKind::Slash {
            self.next();
            self.expect(TokKind::LParen, "`(` starting the defining ideal")?;
            loop {
                gens.push(self.expr()?);
                if self.peek().kind == TokKind::Comma {
                    self.next();
                } else {
                    break;
                }
            }
            self.expect(TokKind::RParen, "`)` closing the defining ideal")?;
        }
        Ok(Expr { kind: ExprKind::RingLit { prime, vars, gens }, line, col })
    }
}

pub fn parse_program(source: &str) -> Result<Program> {
    let toks = lex(source)?;
    Parser { toks, pos: 0 }.program()
}

fn parse_expr(source: &str) -> Result<Expr> {
    let toks = lex(source)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.peek().kind != TokKind::Eof {
        return p.fail("trailing input after expression", &["end of input"]);
    }
    Ok(e)
}

/// Evaluate an expression that must denote a polynomial in `ring`: names are
/// ring variables, integers are constants.
pub(crate) fn eval_polynomial_expr(ring: &PolyRing, expr: &Expr) -> Result<Polynomial> {
    let located = |message: String| {
        Error::Parse(Diagnostic { line: expr.line, col: expr.col, message, expected: vec![] })
    };
    match &expr.kind {
        ExprKind::Num(n) => Ok(Polynomial::constant(ring, *n)),
        ExprKind::Name(name) => match ring.var_index(name) {
            Some(i) => Ok(Polynomial::var(ring, i)),
            None => Err(located(format!("`{name}` is not a variable of {}", ring.describe()))),
        },
        ExprKind::Add(a, b) => eval_polynomial_expr(ring, a)?.add(&eval_polynomial_expr(ring, b)?),
        ExprKind::Sub(a, b) => eval_polynomial_expr(ring, a)?.sub(&eval_polynomial_expr(ring, b)?),
        ExprKind::Mul(a, b) => eval_polynomial_expr(ring, a)?.mul(&eval_polynomial_expr(ring, b)?),
        ExprKind::Pow(a, e) => eval_polynomial_expr(ring, a)?.pow(*e),
        ExprKind::Neg(a) => Ok(eval_polynomial_expr(ring, a)?.neg()),
        _ => Err(located("expected a polynomial expression".into())),
    }
}

/// Parse canonical polynomial text (`±c*x1^e1*...*xn^en` terms joined by
/// `+`/`-`) into `ring`. Case-sensitive; inverse to the canonical printer.
pub fn parse_polynomial(ring: &PolyRing, source: &str) -> Result<Polynomial> {
    let expr = parse_expr(source)?;
    eval_polynomial_expr(ring, &expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(p, vars.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    #[test]
    fn polynomial_literals() {
        let r = ring(5, &["x", "y"]);
        let f = parse_polynomial(&r, "x^2 - y^2").unwrap();
        assert_eq!(f.to_string(), "x^2-y^2");
        assert_eq!(parse_polynomial(&r, "-x").unwrap().to_string(), "-x");
        assert_eq!(parse_polynomial(&r, "2").unwrap().to_string(), "2");
        assert_eq!(parse_polynomial(&r, "7").unwrap().to_string(), "2");
        assert_eq!(parse_polynomial(&r, "(x+y)^2*x").unwrap(), parse_polynomial(&r, "x^3+2*x^2*y+x*y^2").unwrap());
    }

    #[test]
    fn case_sensitive_variables() {
        let r = ring(5, &["x", "X"]);
        let f = parse_polynomial(&r, "x*X").unwrap();
        assert_eq!(f.degree(), Some(2));
        assert!(parse_polynomial(&r, "y").is_err());
    }

    #[test]
    fn syntax_error_is_located() {
        let r = ring(5, &["x", "y"]);
        let err = parse_polynomial(&r, "x +* y").unwrap_err();
        match err {
            Error::Parse(d) => {
                assert_eq!(d.line, 1);
                assert_eq!(d.col, 4);
            }
            other => panic!("expected a parse diagnostic, got {other:?}"),
        }
    }

    #[test]
    fn program_shapes() {
        let prog = parse_program(
            "ring R = Fp(3)[x,y,z,w] / (x*y, y*z, z*w);\n\
             ideal T = testideal(R);\n\
             print(T);\n\
             print T;\n",
        )
        .unwrap();
        assert_eq!(prog.stmts.len(), 4);
        match &prog.stmts[0].kind {
            StmtKind::Bind { kind: BindKind::Ring, name, expr } => {
                assert_eq!(name, "R");
                match &expr.kind {
                    ExprKind::RingLit { prime, vars, gens } => {
                        assert_eq!(*prime, 3);
                        assert_eq!(vars, &["x", "y", "z", "w"]);
                        assert_eq!(gens.len(), 3);
                    }
                    other => panic!("expected ring literal, got {other:?}"),
                }
            }
            other => panic!("expected ring binding, got {other:?}"),
        }
        // `print T;` (no parens) desugars to a print call
        assert!(matches!(
            &prog.stmts[3].kind,
            StmtKind::Command(e) if matches!(&e.kind, ExprKind::Call { name, .. } if name == "print")
        ));
    }

    #[test]
    fn statement_must_be_binding_or_command() {
        let err = parse_program("x + y;").unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }
}
