//! Recursive-descent parser. Precedence `^` over `*` over `+`/`-`, with `*`
//! and the additive operators left-associative; `^` takes a literal integer
//! exponent.

use crate::ast::{Expr, Stmt};
use crate::lexer::{lex, ParseError, Tok, TokKind};

pub fn parse_line(src: &str) -> Result<Stmt, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    if p.peek_kind() == &TokKind::Eof {
        return Ok(Stmt::Empty);
    }
    if p.peek_kind() == &TokKind::Let {
        p.bump();
        let name = match p.peek_kind().clone() {
            TokKind::Ident(n) => {
                p.bump();
                n
            }
            _ => return Err(p.error("expected identifier after 'let'")),
        };
        if p.peek_kind() != &TokKind::Equals {
            return Err(p.error("expected '='"));
        }
        p.bump();
        let e = p.expr()?;
        p.expect_eof()?;
        return Ok(Stmt::Let(name, e));
    }
    let e = p.expr()?;
    p.expect_eof()?;
    Ok(Stmt::Expr(e))
}

/// Convenience wrapper when only a bare expression makes sense.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    match parse_line(src)? {
        Stmt::Expr(e) => Ok(e),
        Stmt::Empty => Err(ParseError::new(1, 1, "expected expression")),
        Stmt::Let(..) => Err(ParseError::new(1, 1, "expected expression, found 'let'")),
    }
}

const MAX_DEPTH: usize = 200;

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            Err(self.error("expression nests too deeply"))
        } else {
            Ok(())
        }
    }

    fn leave(&mut self) {
        self.depth -= 1;
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos]
    }

    fn peek_kind(&self) -> &TokKind {
        &self.toks[self.pos].kind
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: &str) -> ParseError {
        let t = self.peek();
        ParseError::new(t.line, t.col, message)
    }

    fn expect_eof(&mut self) -> Result<(), ParseError> {
        if self.peek_kind() == &TokKind::Eof {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.enter()?;
        let result = self.expr_inner();
        self.leave();
        result
    }

    fn expr_inner(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek_kind() {
                TokKind::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                TokKind::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.peek_kind() == &TokKind::Star {
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek_kind() == &TokKind::Minus {
            self.enter()?;
            self.bump();
            let inner = self.unary();
            self.leave();
            return Ok(Expr::Neg(Box::new(inner?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek_kind() != &TokKind::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if self.peek_kind() == &TokKind::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek_kind().clone() {
            TokKind::Num(x) if x.fract() == 0.0 && x.abs() <= i32::MAX as f64 => {
                self.bump();
                let n = x as i32;
                Ok(Expr::Pow(Box::new(base), if negative { -n } else { n }))
            }
            _ => Err(self.error("expected integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek_kind().clone() {
            TokKind::Num(x) => {
                self.bump();
                Ok(Expr::Real(x))
            }
            TokKind::Imag(x) => {
                self.bump();
                Ok(Expr::Imag(x))
            }
            TokKind::Ident(name) => {
                self.bump();
                if self.peek_kind() == &TokKind::LParen {
                    self.bump();
                    let mut args = Vec::new();
                    if self.peek_kind() != &TokKind::RParen {
                        loop {
                            args.push(self.expr()?);
                            match self.peek_kind() {
                                TokKind::Comma => {
                                    self.bump();
                                }
                                TokKind::RParen => break,
                                _ => return Err(self.error("expected ',' or ')'")),
                            }
                        }
                    }
                    self.bump(); // the ')'
                    Ok(Expr::Call(name, args))
                } else {
                    Ok(Expr::Name(name))
                }
            }
            TokKind::LParen => {
                self.bump();
                let e = self.expr()?;
                if self.peek_kind() != &TokKind::RParen {
                    return Err(self.error("expected ')'"));
                }
                self.bump();
                Ok(e)
            }
            _ => Err(self.error("expected expression")),
        }
    }
}
