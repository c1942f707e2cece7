//! Lexer, AST and recursive-descent parser for gpfkit scripts.
//!
//! ```text
//! ring R = QQ[x,y,z] / (x*y - z^2, x^2 - y*z);
//! prime p = (x, z);
//! ideal a = p^2;
//! module M = free(2) / ((x,0),(0,x));
//! submodule N in M = ((y,0));
//! candidates = { p, (x,y,z) };
//! gpf N in M;
//! check-iff a in R;
//! ```

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError { pos, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const SYMBOLS: &str = ";=()[]{},+-*^/:<⊂";

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |i: &mut usize, line: &mut usize, col: &mut usize, c: char| {
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col, c);
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                let ch = chars[i];
                bump(&mut i, &mut line, &mut col, ch);
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                let ch = chars[i];
                bump(&mut i, &mut line, &mut col, ch);
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                let ch = chars[i];
                bump(&mut i, &mut line, &mut col, ch);
            }
            let mut word: String = chars[start..i].iter().collect();
            if word == "check" && chars[i..].starts_with(&['-', 'i', 'f', 'f']) {
                for _ in 0..4 {
                    let ch = chars[i];
                    bump(&mut i, &mut line, &mut col, ch);
                }
                word.push_str("-iff");
            }
            out.push((Tok::Ident(word), pos));
        } else if SYMBOLS.contains(c) {
            bump(&mut i, &mut line, &mut col, c);
            out.push((Tok::Sym(c), pos));
        } else {
            return err(pos, format!("unexpected character '{c}'"));
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// Polynomial expressions inside generator lists.
#[derive(Debug, Clone, PartialEq)]
pub enum PolyExpr {
    Num(BigInt),
    Var(String, Pos),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, BigInt, Pos),
    Pow(Box<PolyExpr>, u32),
}

/// One entry of a generator list: a polynomial or a vector.
#[derive(Debug, Clone, PartialEq)]
pub enum Gen {
    Poly(PolyExpr),
    Vector(Vec<PolyExpr>, Pos),
}

/// Ideal and module expressions.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Name(String, Pos),
    Free(usize, Pos),
    Gens(Vec<Gen>, Pos),
    Sum(Box<Expr>, Box<Expr>),
    Prod(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32, Pos),
    Quot(Box<Expr>, Box<Expr>, Pos),
}

impl Expr {
    pub fn pos(&self) -> Pos {
        match self {
            Expr::Name(_, p) | Expr::Free(_, p) | Expr::Gens(_, p) | Expr::Pow(_, _, p) | Expr::Quot(_, _, p) => *p,
            Expr::Sum(a, _) | Expr::Prod(a, _) => a.pos(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Gpf {
        n: Expr,
        m: Expr,
    },
    Filtration {
        n: Expr,
        m: Expr,
    },
    Ass {
        n: Option<Expr>,
        m: Expr,
    },
    Colon {
        n: Expr,
        ideal: Expr,
        m: Expr,
    },
    Exists {
        target: Expr,
        m: Expr,
    },
    Construct {
        target: Expr,
        m: Expr,
    },
    CheckIff {
        target: Expr,
        m: Expr,
    },
    /// `M_0 ⊂[p_1] M_1 ... ⊂[p_n] M_n in M`.
    Verify {
        chain: Vec<Expr>,
        primes: Vec<Expr>,
        m: Expr,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gpf { .. } => "gpf",
            Command::Filtration { .. } => "filtration",
            Command::Ass { .. } => "ass",
            Command::Colon { .. } => "colon",
            Command::Exists { .. } => "exists",
            Command::Construct { .. } => "construct",
            Command::CheckIff { .. } => "check-iff",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Ring { name: String, field: FieldSpec, vars: Vec<String>, relations: Vec<PolyExpr> },
    Prime { name: String, expr: Expr },
    Ideal { name: String, expr: Expr },
    Module { name: String, expr: Expr },
    Submodule { name: String, module: String, expr: Expr },
    Candidates(Vec<Expr>),
    Command(Command),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub pos: Pos,
    pub stmt: Stmt,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == w)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<Pos, SyntaxError> {
        let (t, pos) = self.next();
        if t == Tok::Sym(c) {
            Ok(pos)
        } else {
            err(pos, format!("expected '{c}', found {t}"))
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), SyntaxError> {
        let (t, pos) = self.next();
        match t {
            Tok::Ident(s) if s == w => Ok(()),
            t => err(pos, format!("expected '{w}', found {t}")),
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), SyntaxError> {
        match self.next() {
            (Tok::Ident(s), pos) => Ok((s, pos)),
            (t, pos) => err(pos, format!("expected a name, found {t}")),
        }
    }

    fn small_int(&mut self) -> Result<(u32, Pos), SyntaxError> {
        match self.next() {
            (Tok::Int(n), pos) => match u32::try_from(&n) {
                Ok(v) => Ok((v, pos)),
                Err(_) => err(pos, format!("integer {n} is too large")),
            },
            (t, pos) => err(pos, format!("expected an integer, found {t}")),
        }
    }

    fn script(&mut self) -> Result<Script, SyntaxError> {
        let mut statements = Vec::new();
        while *self.peek() != Tok::Eof {
            let pos = self.pos();
            let stmt = self.statement()?;
            self.expect_sym(';')?;
            statements.push(Statement { pos, stmt });
        }
        Ok(Script { statements })
    }

    fn statement(&mut self) -> Result<Stmt, SyntaxError> {
        let (word, pos) = self.ident()?;
        Ok(match word.as_str() {
            "ring" => self.ring()?,
            "prime" | "ideal" | "module" => {
                let (name, _) = self.ident()?;
                self.expect_sym('=')?;
                let expr = self.expr()?;
                match word.as_str() {
                    "prime" => Stmt::Prime { name, expr },
                    "ideal" => Stmt::Ideal { name, expr },
                    _ => Stmt::Module { name, expr },
                }
            }
            "submodule" => {
                let (name, _) = self.ident()?;
                self.expect_word("in")?;
                let (module, _) = self.ident()?;
                self.expect_sym('=')?;
                Stmt::Submodule { name, module, expr: self.expr()? }
            }
            "candidates" => {
                self.expect_sym('=')?;
                self.expect_sym('{')?;
                let mut items = Vec::new();
                if !self.is_sym('}') {
                    items.push(self.expr()?);
                    while self.eat_sym(',') {
                        items.push(self.expr()?);
                    }
                }
                self.expect_sym('}')?;
                Stmt::Candidates(items)
            }
            "gpf" | "filtration" | "exists" | "construct" | "check-iff" => {
                let first = self.expr()?;
                self.expect_word("in")?;
                let m = self.expr()?;
                Stmt::Command(match word.as_str() {
                    "gpf" => Command::Gpf { n: first, m },
                    "filtration" => Command::Filtration { n: first, m },
                    "exists" => Command::Exists { target: first, m },
                    "construct" => Command::Construct { target: first, m },
                    _ => Command::CheckIff { target: first, m },
                })
            }
            "ass" => {
                let first = self.expr()?;
                Stmt::Command(if self.is_word("in") {
                    self.next();
                    Command::Ass { n: Some(first), m: self.expr()? }
                } else {
                    Command::Ass { n: None, m: first }
                })
            }
            "colon" => {
                let n = self.expr()?;
                self.expect_sym(':')?;
                let ideal = self.expr()?;
                self.expect_word("in")?;
                Stmt::Command(Command::Colon { n, ideal, m: self.expr()? })
            }
            "verify" => {
                let mut chain = vec![self.expr()?];
                let mut primes = Vec::new();
                while self.is_sym('⊂') || self.is_sym('<') {
                    self.next();
                    self.expect_sym('[')?;
                    primes.push(self.expr()?);
                    self.expect_sym(']')?;
                    chain.push(self.expr()?);
                }
                if primes.is_empty() {
                    return err(self.pos(), "verify needs at least one step 'A ⊂[p] B'");
                }
                self.expect_word("in")?;
                Stmt::Command(Command::Verify { chain, primes, m: self.expr()? })
            }
            _ => return err(pos, format!("unknown statement '{word}'")),
        })
    }

    fn ring(&mut self) -> Result<Stmt, SyntaxError> {
        let (name, _) = self.ident()?;
        self.expect_sym('=')?;
        let (f, pos) = self.ident()?;
        let field = match f.as_str() {
            "QQ" => FieldSpec::Rational,
            "GF" => {
                self.expect_sym('(')?;
                let (q, _) = self.small_int()?;
                self.expect_sym(')')?;
                FieldSpec::Prime(q)
            }
            _ => return err(pos, format!("unknown field '{f}', expected QQ or GF(q)")),
        };
        self.expect_sym('[')?;
        let mut vars = vec![self.ident()?.0];
        while self.eat_sym(',') {
            vars.push(self.ident()?.0);
        }
        self.expect_sym(']')?;
        let mut relations = Vec::new();
        if self.eat_sym('/') {
            self.expect_sym('(')?;
            relations.push(self.poly()?);
            while self.eat_sym(',') {
                relations.push(self.poly()?);
            }
            self.expect_sym(')')?;
        }
        Ok(Stmt::Ring { name, field, vars, relations })
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let top = self.sum()?;
        if self.is_sym('/') {
            let pos = self.next().1;
            let bottom = self.sum()?;
            return Ok(Expr::Quot(Box::new(top), Box::new(bottom), pos));
        }
        Ok(top)
    }

    fn sum(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.product()?;
        while self.eat_sym('+') {
            acc = Expr::Sum(Box::new(acc), Box::new(self.product()?));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr, SyntaxError> {
        let mut acc = self.power()?;
        while self.eat_sym('*') {
            acc = Expr::Prod(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr, SyntaxError> {
        let base = self.atom()?;
        if self.is_sym('^') {
            let pos = self.next().1;
            let (e, epos) = self.small_int()?;
            if e == 0 {
                return err(epos, "exponent must be ≥ 1");
            }
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Ident(w) if w == "free" && *self.peek_at(1) == Tok::Sym('(') => {
                self.next();
                self.next();
                let (k, kpos) = self.small_int()?;
                if k == 0 {
                    return err(kpos, "rank must be ≥ 1");
                }
                self.expect_sym(')')?;
                Ok(Expr::Free(k as usize, pos))
            }
            Tok::Ident(w) => {
                self.next();
                Ok(Expr::Name(w, pos))
            }
            Tok::Sym('(') => self.gens(),
            t => err(pos, format!("expected an ideal or module, found {t}")),
        }
    }

    /// Whether the parenthesis at the cursor encloses a top-level comma.
    fn paren_has_comma(&self) -> bool {
        let mut depth = 0usize;
        for (t, _) in &self.toks[self.at..] {
            match t {
                Tok::Sym('(') => depth += 1,
                Tok::Sym(')') => {
                    depth -= 1;
                    if depth == 0 {
                        return false;
                    }
                }
                Tok::Sym(',') if depth == 1 => return true,
                Tok::Eof => return false,
                _ => {}
            }
        }
        false
    }

    fn gens(&mut self) -> Result<Expr, SyntaxError> {
        let pos = self.expect_sym('(')?;
        let mut gens = vec![self.gen()?];
        while self.eat_sym(',') {
            gens.push(self.gen()?);
        }
        self.expect_sym(')')?;
        Ok(Expr::Gens(gens, pos))
    }

    fn gen(&mut self) -> Result<Gen, SyntaxError> {
        if self.is_sym('(') && self.paren_has_comma() {
            let pos = self.expect_sym('(')?;
            let mut comps = vec![self.poly()?];
            while self.eat_sym(',') {
                comps.push(self.poly()?);
            }
            self.expect_sym(')')?;
            return Ok(Gen::Vector(comps, pos));
        }
        Ok(Gen::Poly(self.poly()?))
    }

    fn poly(&mut self) -> Result<PolyExpr, SyntaxError> {
        let mut acc = self.poly_term()?;
        loop {
            if self.eat_sym('+') {
                acc = PolyExpr::Add(Box::new(acc), Box::new(self.poly_term()?));
            } else if self.eat_sym('-') {
                acc = PolyExpr::Sub(Box::new(acc), Box::new(self.poly_term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_term(&mut self) -> Result<PolyExpr, SyntaxError> {
        let mut acc = self.poly_factor()?;
        loop {
            if self.eat_sym('*') {
                acc = PolyExpr::Mul(Box::new(acc), Box::new(self.poly_factor()?));
            } else if self.is_sym('/') {
                let pos = self.next().1;
                match self.next() {
                    (Tok::Int(d), _) => acc = PolyExpr::Div(Box::new(acc), d, pos),
                    (t, p) => return err(p, format!("only division by integers is allowed, found {t}")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn poly_factor(&mut self) -> Result<PolyExpr, SyntaxError> {
        if self.eat_sym('-') {
            return Ok(PolyExpr::Neg(Box::new(self.poly_factor()?)));
        }
        let base = match self.next() {
            (Tok::Int(n), _) => PolyExpr::Num(n),
            (Tok::Ident(v), pos) => PolyExpr::Var(v, pos),
            (Tok::Sym('('), _) => {
                let inner = self.poly()?;
                self.expect_sym(')')?;
                inner
            }
            (t, pos) => return err(pos, format!("expected a polynomial, found {t}")),
        };
        if self.eat_sym('^') {
            let (e, _) = self.small_int()?;
            return Ok(PolyExpr::Pow(Box::new(base), e));
        }
        Ok(base)
    }
}

pub fn parse(text: &str) -> Result<Script, SyntaxError> {
    Parser { toks: lex(text)?, at: 0 }.script()
}
