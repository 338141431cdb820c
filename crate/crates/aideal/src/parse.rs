//! Parser for skein expressions: sums of scaled products of curve symbols
//! `L(p,q)` and scalar literals in `t`, e.g. `L(1,1) + t^-3 * L(1,0)` or
//! `(t^2 + t^-2) * L(0,1)`. Errors carry 1-based line and column positions.

use crate::coeff::{rat_int, Rat, TPoly};
use crate::skein::{phat_curve, skein_mul, CurveIndex, SkeinElement};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    T,
    L,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Comma,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn err<T>(line: usize, col: usize, msg: impl Into<String>) -> crate::Result<T> {
    Err(crate::Error::Parse {
        line,
        col,
        msg: msg.into(),
    })
}

fn tokenize(input: &str) -> crate::Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if ch.is_whitespace() {
            chars.next();
            bump(ch, &mut line, &mut col);
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    digits.push(c);
                    chars.next();
                    bump(c, &mut line, &mut col);
                } else {
                    break;
                }
            }
            let n: BigInt = digits.parse().expect("digits");
            out.push(Spanned {
                tok: Tok::Int(n),
                line: tline,
                col: tcol,
            });
            continue;
        }
        chars.next();
        bump(ch, &mut line, &mut col);
        let tok = match ch {
            't' => Tok::T,
            'L' => Tok::L,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            ',' => Tok::Comma,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return err(tline, tcol, format!("unexpected character '{other}'")),
        };
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> crate::Result<()> {
        let (line, col) = self.here();
        match self.next() {
            Some(s) if s.tok == tok => Ok(()),
            _ => err(line, col, format!("expected {what}")),
        }
    }

    /// Signed integer literal (for exponents and curve indices).
    fn integer(&mut self) -> crate::Result<i64> {
        let (line, col) = self.here();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.next();
            true
        } else {
            false
        };
        match self.next() {
            Some(Spanned {
                tok: Tok::Int(n), ..
            }) => {
                let v: i64 = n.try_into().map_err(|_| crate::Error::Parse {
                    line,
                    col,
                    msg: "integer too large".into(),
                })?;
                Ok(if negative { -v } else { v })
            }
            _ => err(line, col, "expected an integer"),
        }
    }

    fn expr(&mut self) -> crate::Result<SkeinElement> {
        let mut acc = self.term()?;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> crate::Result<SkeinElement> {
        let mut negate = false;
        while self.peek() == Some(&Tok::Minus) {
            self.next();
            negate = !negate;
        }
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            let rhs = self.factor()?;
            acc = skein_mul(&acc, &rhs);
        }
        Ok(if negate { acc.neg() } else { acc })
    }

    fn factor(&mut self) -> crate::Result<SkeinElement> {
        let (line, col) = self.here();
        match self.peek() {
            Some(Tok::L) => {
                self.next();
                self.expect(Tok::LParen, "'(' after L")?;
                let p = self.integer()?;
                self.expect(Tok::Comma, "',' between curve indices")?;
                let q = self.integer()?;
                self.expect(Tok::RParen, "')' after curve indices")?;
                let c = CurveIndex::new(p, q).map_err(|_| crate::Error::Parse {
                    line,
                    col,
                    msg: "L(0,0) is not a curve".into(),
                })?;
                Ok(phat_curve(c))
            }
            Some(Tok::T) => {
                self.next();
                let k = if self.peek() == Some(&Tok::Caret) {
                    self.next();
                    self.integer()?
                } else {
                    1
                };
                Ok(SkeinElement::scalar(TPoly::t_pow(k)))
            }
            Some(Tok::Int(_)) => {
                let n = self.integer()?;
                let c = if self.peek() == Some(&Tok::Slash) {
                    self.next();
                    let (dline, dcol) = self.here();
                    let d = self.integer()?;
                    if d == 0 {
                        return err(dline, dcol, "zero denominator");
                    }
                    Rat::new(BigInt::from(n), BigInt::from(d))
                } else {
                    rat_int(n)
                };
                Ok(SkeinElement::scalar(TPoly::constant(c)))
            }
            Some(Tok::LParen) => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => err(line, col, "expected a curve L(p,q), a scalar, or '('"),
        }
    }
}

/// Parses a skein expression into its torus realization.
pub fn parse_skein(input: &str) -> crate::Result<SkeinElement> {
    let toks = tokenize(input)?;
    let lines = input.lines().count().max(1);
    let last_len = input.lines().last().map(|l| l.chars().count()).unwrap_or(0);
    let mut p = Parser {
        toks,
        pos: 0,
        end: (lines, last_len + 1),
    };
    if p.peek().is_none() {
        return err(1, 1, "empty expression");
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        let (line, col) = p.here();
        return err(line, col, "unexpected trailing input");
    }
    Ok(e)
}
