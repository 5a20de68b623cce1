//! Tokenizer for the expression language. Tracks line and column so parse
//! errors point at the offending spot.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum TokKind {
    Num(f64),
    /// Imaginary literal like `3i` or `1.5i`.
    Imag(f64),
    Ident(String),
    Let,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    Equals,
    Eof,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tok {
    pub kind: TokKind,
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.column, self.message)
    }
}

pub fn lex(src: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    let mut line = 1;
    let mut col = 1;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let mut push = |kind: TokKind| toks.push(Tok { kind, line: tline, col: tcol });
        match c {
            '\n' => {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '#' => {
                // comment to end of line
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                    col += 1;
                }
                continue;
            }
            '+' => push(TokKind::Plus),
            '-' => push(TokKind::Minus),
            '*' => push(TokKind::Star),
            '^' => push(TokKind::Caret),
            '(' => push(TokKind::LParen),
            ')' => push(TokKind::RParen),
            ',' => push(TokKind::Comma),
            '=' => push(TokKind::Equals),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                // exponent only when digits actually follow
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let value: f64 = text.parse().map_err(|_| {
                    ParseError::new(tline, tcol, format!("invalid number '{text}'"))
                })?;
                // imaginary suffix, e.g. 3i, unless it starts an identifier
                let imag = i < chars.len()
                    && chars[i] == 'i'
                    && !(i + 1 < chars.len() && is_ident_char(chars[i + 1]));
                if imag {
                    i += 1;
                    toks.push(Tok { kind: TokKind::Imag(value), line: tline, col: tcol });
                } else {
                    toks.push(Tok { kind: TokKind::Num(value), line: tline, col: tcol });
                }
                col += i - start;
                continue;
            }
            c if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let kind = if text == "let" { TokKind::Let } else { TokKind::Ident(text) };
                toks.push(Tok { kind, line: tline, col: tcol });
                col += i - start;
                continue;
            }
            other => {
                return Err(ParseError::new(
                    tline,
                    tcol,
                    format!("unexpected character '{other}'"),
                ));
            }
        }
        i += 1;
        col += 1;
    }
    toks.push(Tok { kind: TokKind::Eof, line, col });
    Ok(toks)
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}
