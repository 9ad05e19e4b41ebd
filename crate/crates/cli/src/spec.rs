//! The algebra expression language.
//!
//! ```text
//! expr  := "k" | name "(" arg ("," arg)* ")"
//! arg   := expr | integer | word | arrows | key "=" (word | arrows)
//! ```
//!
//! Constructors: `line(n,l)`, `rect(m,n)`, `path(T[,orientation])`,
//! `tri(expr,n)`, `tensor(expr,expr)`, `aus(expr)`, `saus(expr)`,
//! `replica(expr,n)`. Orientations are `linear`, `bipartite`, `inward`,
//! `symmetric` or a string of `>`/`<`, one character per edge.

use std::fmt;

use tilting::algebra::{
    linear_path_algebra, path_algebra, replicated_algebra, tensor_algebra, triangular_matrix_algebra,
    truncated_line_algebra, Algebra,
};
use tilting::ar::{auslander_algebra, default_max_steps, stable_auslander_algebra};
use tilting::quiver::{dynkin_quiver, DynkinType, Orientation};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Arrows(String),
    Open,
    Close,
    Comma,
    Equals,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Arrows(s) => write!(f, "{}", s),
            Tok::Int(n) => write!(f, "{}", n),
            Tok::Open => write!(f, "("),
            Tok::Close => write!(f, ")"),
            Tok::Comma => write!(f, ","),
            Tok::Equals => write!(f, "="),
        }
    }
}

fn parse_error(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' => i += 1,
            '(' => {
                out.push((start, Tok::Open));
                i += 1;
            }
            ')' => {
                out.push((start, Tok::Close));
                i += 1;
            }
            ',' => {
                out.push((start, Tok::Comma));
                i += 1;
            }
            '=' => {
                out.push((start, Tok::Equals));
                i += 1;
            }
            '<' | '>' => {
                while i < chars.len() && matches!(chars[i], '<' | '>') {
                    i += 1;
                }
                out.push((start, Tok::Arrows(chars[start..i].iter().collect())));
            }
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n = s.parse().map_err(|_| parse_error(format!("integer `{}` out of range", s)))?;
                out.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
            }
            c => return Err(parse_error(format!("unexpected character `{}` at column {}", c, start + 1))),
        }
    }
    Ok(out)
}

/// A parsed algebra expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Field,
    Call(String, Vec<Arg>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    Int(usize),
    Word(String),
    Keyed(String, String),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn describe_here(&self) -> String {
        match self.toks.get(self.pos) {
            Some((col, t)) => format!("`{}` at column {}", t, col + 1),
            None => format!("end of input at column {}", self.len + 1),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), CliError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_error(format!("expected `{}`, found {}", t, self.describe_here())))
        }
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let name = match self.peek() {
            Some(Tok::Ident(s)) => s.clone(),
            _ => return Err(parse_error(format!("expected an algebra, found {}", self.describe_here()))),
        };
        self.pos += 1;
        if self.peek() != Some(&Tok::Open) {
            if name == "k" {
                return Ok(Expr::Field);
            }
            return Err(parse_error(format!("expected `(` after `{}`, found {}", name, self.describe_here())));
        }
        self.pos += 1;
        let mut args = vec![self.arg()?];
        while self.peek() == Some(&Tok::Comma) {
            self.pos += 1;
            args.push(self.arg()?);
        }
        self.expect(Tok::Close)?;
        Ok(Expr::Call(name, args))
    }

    fn arg(&mut self) -> Result<Arg, CliError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Arg::Int(n))
            }
            Some(Tok::Arrows(s)) => {
                self.pos += 1;
                Ok(Arg::Word(s))
            }
            Some(Tok::Ident(s)) => match self.toks.get(self.pos + 1).map(|t| &t.1) {
                Some(Tok::Open) => Ok(Arg::Expr(self.expr()?)),
                Some(Tok::Equals) => {
                    self.pos += 2;
                    match self.peek().cloned() {
                        Some(Tok::Ident(v)) | Some(Tok::Arrows(v)) => {
                            self.pos += 1;
                            Ok(Arg::Keyed(s, v))
                        }
                        _ => Err(parse_error(format!("expected a value for `{}`, found {}", s, self.describe_here()))),
                    }
                }
                _ if s == "k" => {
                    self.pos += 1;
                    Ok(Arg::Expr(Expr::Field))
                }
                _ => {
                    self.pos += 1;
                    Ok(Arg::Word(s))
                }
            },
            _ => Err(parse_error(format!("expected an argument, found {}", self.describe_here()))),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, len: src.chars().count() };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_error(format!("trailing input starting with {}", p.describe_here())));
    }
    Ok(e)
}

fn arity(name: &str, args: &[Arg], lo: usize, hi: usize) -> Result<(), CliError> {
    if args.len() < lo || args.len() > hi {
        let want = if lo == hi { format!("{}", lo) } else { format!("{} to {}", lo, hi) };
        return Err(parse_error(format!("`{}` takes {} arguments, got {}", name, want, args.len())));
    }
    Ok(())
}

fn int(name: &str, a: &Arg) -> Result<usize, CliError> {
    match a {
        Arg::Int(n) => Ok(*n),
        other => Err(parse_error(format!("`{}` expects an integer, got {}", name, show_arg(other)))),
    }
}

fn sub<'a>(name: &str, a: &'a Arg) -> Result<&'a Expr, CliError> {
    match a {
        Arg::Expr(e) => Ok(e),
        other => Err(parse_error(format!("`{}` expects an algebra, got {}", name, show_arg(other)))),
    }
}

fn show_arg(a: &Arg) -> String {
    match a {
        Arg::Expr(e) => format!("`{}`", e),
        Arg::Int(n) => format!("`{}`", n),
        Arg::Word(w) => format!("`{}`", w),
        Arg::Keyed(k, v) => format!("`{}={}`", k, v),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Field => write!(f, "k"),
            Expr::Call(name, args) => {
                let parts: Vec<String> = args
                    .iter()
                    .map(|a| match a {
                        Arg::Expr(e) => e.to_string(),
                        Arg::Int(n) => n.to_string(),
                        Arg::Word(w) => w.clone(),
                        Arg::Keyed(k, v) => format!("{}={}", k, v),
                    })
                    .collect();
                write!(f, "{}({})", name, parts.join(","))
            }
        }
    }
}

pub fn parse_dynkin(s: &str) -> Result<DynkinType, CliError> {
    let bad = || parse_error(format!("unknown Dynkin type `{}`", s));
    let (head, tail) = s.split_at(1.min(s.len()));
    let n: usize = tail.parse().map_err(|_| bad())?;
    let t = match head {
        "A" => DynkinType::new_a(n),
        "D" => DynkinType::new_d(n),
        "E" => DynkinType::new_e(n),
        _ => return Err(bad()),
    };
    t.map_err(|_| bad())
}

pub fn parse_orientation(t: DynkinType, s: &str) -> Result<Orientation, CliError> {
    match s {
        "linear" => Ok(Orientation::linear(t)),
        "bipartite" => Ok(Orientation::bipartite(t)),
        "inward" => Ok(Orientation::inward(t)),
        "symmetric" => Orientation::symmetric(t)
            .ok_or_else(|| parse_error(format!("{} has no symmetric orientation", t.name()))),
        s if s.chars().all(|c| c == '<' || c == '>') => Ok(Orientation::parse_arrows(t, s)?),
        s => Err(parse_error(format!("unknown orientation `{}`", s))),
    }
}

/// Evaluation settings shared by constructors that knit.
#[derive(Clone, Copy, Debug, Default)]
pub struct EvalOptions {
    pub max_steps: Option<usize>,
}

pub fn evaluate(e: &Expr, opts: EvalOptions) -> Result<Algebra, CliError> {
    let (name, args) = match e {
        Expr::Field => return Ok(Algebra::field()),
        Expr::Call(name, args) => (name.as_str(), args.as_slice()),
    };
    let steps = |a: &Algebra| opts.max_steps.unwrap_or_else(|| default_max_steps(a));
    let alg = match name {
        "line" => {
            arity(name, args, 2, 2)?;
            truncated_line_algebra(int(name, &args[0])?, int(name, &args[1])?)?
        }
        "rect" => {
            arity(name, args, 2, 2)?;
            tensor_algebra(&linear_path_algebra(int(name, &args[0])?)?, &linear_path_algebra(int(name, &args[1])?)?)?
        }
        "path" => {
            arity(name, args, 1, 2)?;
            let t = match &args[0] {
                Arg::Word(w) => parse_dynkin(w)?,
                other => return Err(parse_error(format!("`path` expects a Dynkin type, got {}", show_arg(other)))),
            };
            let o = match args.get(1) {
                None => Orientation::linear(t),
                Some(Arg::Word(w)) => parse_orientation(t, w)?,
                Some(Arg::Keyed(k, v)) if k == "orientation" => parse_orientation(t, v)?,
                Some(other) => return Err(parse_error(format!("`path` expects an orientation, got {}", show_arg(other)))),
            };
            path_algebra(&dynkin_quiver(t, &o)?)?
        }
        "tri" => {
            arity(name, args, 2, 2)?;
            triangular_matrix_algebra(&evaluate(sub(name, &args[0])?, opts)?, int(name, &args[1])?)?
        }
        "tensor" => {
            arity(name, args, 2, 2)?;
            tensor_algebra(&evaluate(sub(name, &args[0])?, opts)?, &evaluate(sub(name, &args[1])?, opts)?)?
        }
        "aus" => {
            arity(name, args, 1, 1)?;
            let a = evaluate(sub(name, &args[0])?, opts)?;
            auslander_algebra(&a, steps(&a))?
        }
        "saus" => {
            arity(name, args, 1, 1)?;
            let a = evaluate(sub(name, &args[0])?, opts)?;
            stable_auslander_algebra(&a, steps(&a))?
        }
        "replica" => {
            arity(name, args, 2, 2)?;
            replicated_algebra(&evaluate(sub(name, &args[0])?, opts)?, int(name, &args[1])?)?
        }
        other => return Err(parse_error(format!("unknown constructor `{}`", other))),
    };
    Ok(alg)
}

pub fn algebra_from_spec(src: &str, opts: EvalOptions) -> Result<Algebra, CliError> {
    evaluate(&parse(src)?, opts)
}
