//! Expression grammar for order terms and class descriptors.
//!
//! ```text
//! expr  := atom ('+' atom)*
//! atom  := NAT | 'w' ('^' exp)? ('*' NAT)? | 'rev' '(' expr ')'
//!        | 'Q' ('(' expr (',' expr)* ')')? | '(' expr ')'
//! exp   := NAT | 'w' | '(' expr ')'
//! ```

use std::fmt;

use ordsum::sgc::{involution, lattice_op, Involution, LatticeOp};
use ordsum::sift::LevelSum;
use ordsum::{FiltrationScheme, OrderTerm, Ordinal, Sgc, SumTable};
use thiserror::Error;

/// A position in the input, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: number does not fit in 64 bits")]
    Overflow { pos: Pos },
}

fn syntax<T>(pos: Pos, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax {
        pos,
        msg: msg.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let mut pos = Pos { line: 1, col: 1 };
    let advance = |c: char, pos: &mut Pos| {
        if c == '\n' {
            pos.line += 1;
            pos.col = 1;
        } else {
            pos.col += 1;
        }
    };
    while let Some(&c) = chars.peek() {
        let start = pos;
        if c.is_whitespace() {
            chars.next();
            advance(c, &mut pos);
        } else if c.is_ascii_digit() {
            let mut value: Option<u64> = Some(0);
            while let Some(&d) = chars.peek() {
                let Some(digit) = d.to_digit(10) else { break };
                value = value
                    .and_then(|v| v.checked_mul(10))
                    .and_then(|v| v.checked_add(u64::from(digit)));
                chars.next();
                advance(d, &mut pos);
            }
            let value = value.ok_or(ParseError::Overflow { pos: start })?;
            out.push((Tok::Num(value), start));
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_alphanumeric() {
                    break;
                }
                s.push(d);
                chars.next();
                advance(d, &mut pos);
            }
            out.push((Tok::Ident(s), start));
        } else if "+*^(),".contains(c) {
            out.push((Tok::Sym(c), start));
            chars.next();
            advance(c, &mut pos);
        } else {
            return syntax(start, format!("unexpected character '{c}'"));
        }
    }
    out.push((Tok::End, pos));
    Ok(out)
}

/// Syntax tree of an expression, before normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Nat(u64),
    /// `ω^exp · coef`.
    Omega {
        exp: Box<Expr>,
        coef: u64,
    },
    Rev(Box<Expr>),
    /// `Q` when the list is empty.
    Shuffle(Vec<Expr>),
    Sum(Vec<Expr>),
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Parser, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            at: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            syntax(self.pos(), format!("expected '{c}', found {}", self.peek()))
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            t => syntax(self.pos(), format!("unexpected {t}")),
        }
    }

    fn nat(&mut self) -> Result<u64, ParseError> {
        match self.bump() {
            (Tok::Num(n), _) => Ok(n),
            (t, pos) => syntax(pos, format!("expected a number, found {t}")),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut parts = vec![self.atom()?];
        while self.eat('+') {
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Expr::Sum(parts)
        })
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Expr::Nat(n)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(s) if s == "w" => {
                let exp = if self.eat('^') {
                    self.exponent()?
                } else {
                    Expr::Nat(1)
                };
                let coef = if self.eat('*') { self.nat()? } else { 1 };
                Ok(Expr::Omega {
                    exp: Box::new(exp),
                    coef,
                })
            }
            Tok::Ident(s) if s == "rev" => {
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Expr::Rev(Box::new(e)))
            }
            Tok::Ident(s) if s == "Q" => {
                let mut members = Vec::new();
                if self.eat('(') {
                    members.push(self.expr()?);
                    while self.eat(',') {
                        members.push(self.expr()?);
                    }
                    self.expect(')')?;
                }
                Ok(Expr::Shuffle(members))
            }
            t => syntax(pos, format!("unexpected {t}")),
        }
    }

    fn exponent(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(n) => Ok(Expr::Nat(n)),
            Tok::Ident(s) if s == "w" => Ok(Expr::Omega {
                exp: Box::new(Expr::Nat(1)),
                coef: 1,
            }),
            Tok::Sym('(') => {
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            t => syntax(pos, format!("expected an exponent, found {t}")),
        }
    }
}

/// Parses without evaluating; exponents are checked only by [`eval`].
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Errors from evaluation carry no position; exponents are the only check.
pub fn eval(e: &Expr) -> Result<OrderTerm, String> {
    Ok(match e {
        Expr::Nat(n) => OrderTerm::nat(*n),
        Expr::Omega { exp, coef } => {
            let exp = eval(exp)?
                .as_ordinal()
                .ok_or_else(|| "exponents must be ordinals".to_string())?;
            OrderTerm::ordinal(Ordinal::term(exp, *coef))
        }
        Expr::Rev(inner) => eval(inner)?.reverse(),
        Expr::Shuffle(members) if members.is_empty() => OrderTerm::rationals(),
        Expr::Shuffle(members) => {
            OrderTerm::shuffle(members.iter().map(eval).collect::<Result<_, _>>()?)
        }
        Expr::Sum(parts) => parts.iter().try_fold(OrderTerm::empty(), |acc, p| {
            Ok::<_, String>(acc.add(&eval(p)?))
        })?,
    })
}

fn eval_at(e: &Expr, pos: Pos) -> Result<OrderTerm, ParseError> {
    eval(e).map_err(|msg| ParseError::Syntax { pos, msg })
}

/// Parses and normalizes an order term.
pub fn parse_term(src: &str) -> Result<OrderTerm, ParseError> {
    eval_at(&parse_expr(src)?, Pos { line: 1, col: 1 })
}

pub fn parse_ordinal(src: &str) -> Result<Ordinal, ParseError> {
    let t = parse_term(src)?;
    t.as_ordinal().ok_or_else(|| ParseError::Syntax {
        pos: Pos { line: 1, col: 1 },
        msg: format!("{t} is not an ordinal"),
    })
}

impl Parser {
    fn sgc(&mut self) -> Result<Sgc, ParseError> {
        let (tok, pos) = self.bump();
        let Tok::Ident(name) = tok else {
            return syntax(pos, format!("expected a class, found {tok}"));
        };
        let unary = |p: &mut Parser| -> Result<Sgc, ParseError> {
            p.expect('(')?;
            let c = p.sgc()?;
            p.expect(')')?;
            Ok(c)
        };
        let binary = |p: &mut Parser, op: LatticeOp| -> Result<Sgc, ParseError> {
            p.expect('(')?;
            let l = p.sgc()?;
            p.expect(',')?;
            let r = p.sgc()?;
            p.expect(')')?;
            lattice_op(op, &l, &r).map_err(|e| ParseError::Syntax {
                pos,
                msg: e.to_string(),
            })
        };
        Ok(match name.as_str() {
            "zero" => Sgc::Zero,
            "all" => Sgc::All,
            "W" if self.eat('*') => Sgc::WStar,
            "W" => Sgc::W,
            "S" => Sgc::Scattered,
            "genQ" => Sgc::GenQ,
            "genWQ" => Sgc::GenOmegaQ,
            "genQ1" => Sgc::GenQPlus1,
            "P" => {
                self.expect('(')?;
                let arg_pos = self.pos();
                let e = self.expr()?;
                self.expect(')')?;
                let g = eval_at(&e, arg_pos)?
                    .as_ordinal()
                    .and_then(|a| match a.terms() {
                        [(g, 1)] => Some(g.clone()),
                        _ => None,
                    });
                match g {
                    Some(g) => Sgc::PrincipalOmega(g),
                    None => return syntax(arg_pos, "expected a power of w"),
                }
            }
            "perp" => involution(Involution::Perp, &unary(self)?),
            "dual" => involution(Involution::Dual, &unary(self)?),
            "inv" => involution(Involution::Inverse, &unary(self)?),
            "plus" => binary(self, LatticeOp::Plus)?,
            "times" => binary(self, LatticeOp::Times)?,
            _ => return syntax(pos, format!("unknown class '{name}'")),
        })
    }
}

/// Parses a class descriptor such as `perp(P(w^2))`.
pub fn parse_sgc(src: &str) -> Result<Sgc, ParseError> {
    let mut p = Parser::new(src)?;
    let c = p.sgc()?;
    p.finish()?;
    Ok(c)
}

/// Non-comment lines of a config file with their line numbers, untrimmed so
/// columns stay true.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

/// Moves a single-line error onto line `line`, `offset` columns right.
fn relocate(e: ParseError, line: usize, offset: usize) -> ParseError {
    let shift = |p: Pos| Pos {
        line,
        col: p.col + offset,
    };
    match e {
        ParseError::Syntax { pos, msg } => ParseError::Syntax {
            pos: shift(pos),
            msg,
        },
        ParseError::Overflow { pos } => ParseError::Overflow { pos: shift(pos) },
    }
}

/// Splits a line at `|` and parses each field, reporting file positions.
fn fields<T>(
    line: &str,
    line_no: usize,
    count: usize,
    mut parse: impl FnMut(usize, &str) -> Result<T, ParseError>,
) -> Result<Vec<T>, ParseError> {
    let parts: Vec<&str> = line.split('|').collect();
    if parts.len() != count {
        return syntax(
            Pos {
                line: line_no,
                col: 1,
            },
            format!(
                "expected {count} fields separated by '|', found {}",
                parts.len()
            ),
        );
    }
    let mut offset = 0;
    let mut out = Vec::with_capacity(count);
    for (i, part) in parts.iter().enumerate() {
        out.push(parse(i, part).map_err(|e| relocate(e, line_no, offset))?);
        offset += part.chars().count() + 1;
    }
    Ok(out)
}

/// A scheme file lists one level per line as `descriptor | sum`, level 0
/// first. Sums are `usual`, `reversed`, `hess` and `lcm`.
pub fn parse_scheme(src: &str) -> Result<FiltrationScheme, ParseError> {
    let mut levels = Vec::new();
    for (line_no, line) in content_lines(src) {
        let mut class = None;
        let mut sum = None;
        fields(line, line_no, 2, |i, s| {
            if i == 0 {
                class = Some(parse_sgc(s)?);
                return Ok(());
            }
            let lead = s.chars().count() - s.trim_start().chars().count();
            sum = Some(
                LevelSum::from_name(s.trim()).ok_or_else(|| ParseError::Syntax {
                    pos: Pos {
                        line: 1,
                        col: lead + 1,
                    },
                    msg: format!("unknown level sum '{}'", s.trim()),
                })?,
            );
            Ok(())
        })?;
        levels.extend(class.zip(sum));
    }
    FiltrationScheme::new(levels).map_err(|e| ParseError::Syntax {
        pos: Pos { line: 1, col: 1 },
        msg: e.to_string(),
    })
}

/// Rows `lhs | rhs | result` with `#` comments.
pub fn parse_table(src: &str) -> Result<SumTable, ParseError> {
    let mut table = SumTable::new();
    for (line_no, line) in content_lines(src) {
        let terms = fields(line, line_no, 3, |_, s| parse_term(s))?;
        let [lhs, rhs, result]: [OrderTerm; 3] = terms.try_into().expect("three fields");
        table.insert(lhs, rhs, result);
    }
    Ok(table)
}
