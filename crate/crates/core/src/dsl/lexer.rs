//! Tokenizer for the command language.

use crate::error::{Diagnostic, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokKind {
    Ident(String),
    Int(u64),
    Str(String),
    Semi,
    Eq,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eof,
}

impl TokKind {
    pub fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("identifier `{s}`"),
            TokKind::Int(n) => format!("integer `{n}`"),
            TokKind::Str(_) => "string literal".into(),
            TokKind::Semi => "`;`".into(),
            TokKind::Eq => "`=`".into(),
            TokKind::LParen => "`(`".into(),
            TokKind::RParen => "`)`".into(),
            TokKind::LBracket => "`[`".into(),
            TokKind::RBracket => "`]`".into(),
            TokKind::Comma => "`,`".into(),
            TokKind::Plus => "`+`".into(),
            TokKind::Minus => "`-`".into(),
            TokKind::Star => "`*`".into(),
            TokKind::Caret => "`^`".into(),
            TokKind::Slash => "`/`".into(),
            TokKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Token {
    pub kind: TokKind,
    pub line: usize,
    pub col: usize,
}

pub fn lex(source: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = source.chars().peekable();

    macro_rules! bump {
        () => {{
            let c = chars.next();
            if let Some(ch) = c {
                if ch == '\n' {
                    line += 1;
                    col = 1;
                } else {
                    col += 1;
                }
            }
            c
        }};
    }

    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                bump!();
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    bump!();
                }
            }
            '/' => {
                bump!();
                if chars.peek() == Some(&'/') {
                    while let Some(&c) = chars.peek() {
                        if c == '\n' {
                            break;
                        }
                        bump!();
                    }
                } else {
                    out.push(Token { kind: TokKind::Slash, line: tl, col: tc });
                }
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        n = n
                            .checked_mul(10)
                            .and_then(|n| n.checked_add(v as u64))
                            .ok_or_else(|| {
                                Error::Parse(Diagnostic {
                                    line: tl,
                                    col: tc,
                                    message: "integer literal overflows".into(),
                                    expected: vec![],
                                })
                            })?;
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push(Token { kind: TokKind::Int(n), line: tl, col: tc });
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        bump!();
                    } else {
                        break;
                    }
                }
                out.push(Token { kind: TokKind::Ident(s), line: tl, col: tc });
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        Some('"') => break,
                        Some('\\') => match bump!() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            Some('n') => s.push('\n'),
                            _ => {
                                return Err(Error::Parse(Diagnostic {
                                    line: tl,
                                    col: tc,
                                    message: "invalid escape in string literal".into(),
                                    expected: vec![],
                                }))
                            }
                        },
                        Some(c) => s.push(c),
                        None => {
                            return Err(Error::Parse(Diagnostic {
                                line: tl,
                                col: tc,
                                message: "unterminated string literal".into(),
                                expected: vec!["`\"`".into()],
                            }))
                        }
                    }
                }
                out.push(Token { kind: TokKind::Str(s), line: tl, col: tc });
            }
            _ => {
                let kind = match c {
                    ';' => TokKind::Semi,
                    '=' => TokKind::Eq,
                    '(' => TokKind::LParen,
                    ')' => TokKind::RParen,
                    '[' => TokKind::LBracket,
                    ']' => TokKind::RBracket,
                    ',' => TokKind::Comma,
                    '+' => TokKind::Plus,
                    '-' => TokKind::Minus,
                    '*' => TokKind::Star,
                    '^' => TokKind::Caret,
                    other => {
                        return Err(Error::Parse(Diagnostic {
                            line: tl,
                            col: tc,
                            message: format!("unexpected character `{other}`"),
                            expected: vec![],
                        }))
                    }
                };
                bump!();
                out.push(Token { kind, line: tl, col: tc });
            }
        }
    }
    out.push(Token { kind: TokKind::Eof, line, col });
    Ok(out)
}
