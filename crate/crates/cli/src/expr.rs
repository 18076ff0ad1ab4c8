//! Parser for graph expressions.
//!
//! ```text
//! FAMILY := name[:param[:param]]          e.g. path:4, petersen, mary_tree:2:3
//! EXPR   := FAMILY | '(' EXPR OP EXPR ')'
//! OP     := box | strong | lex | corona
//! ```
//!
//! Operators have no precedence; nesting requires explicit parentheses. A
//! single top-level operation may omit the outer parentheses, so
//! `path:4 box path:3` and `(path:4 box path:3)` are the same graph.

use std::fmt;

use zforce::{FamilySpec, GraphExpr, ProductOp};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError {
    /// Byte offset into the expression text.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Word(&'a str),
}

fn tokenize(text: &str) -> Vec<(usize, Token<'_>)> {
    let mut tokens = Vec::new();
    let mut word_start = None;
    for (i, c) in text.char_indices() {
        match c {
            '(' | ')' | ' ' | '\t' | '\n' => {
                if let Some(start) = word_start.take() {
                    tokens.push((start, Token::Word(&text[start..i])));
                }
                match c {
                    '(' => tokens.push((i, Token::Open)),
                    ')' => tokens.push((i, Token::Close)),
                    _ => {}
                }
            }
            _ => {
                if word_start.is_none() {
                    word_start = Some(i);
                }
            }
        }
    }
    if let Some(start) = word_start {
        tokens.push((start, Token::Word(&text[start..])));
    }
    tokens
}

fn op_of(word: &str) -> Option<ProductOp> {
    match word {
        "box" => Some(ProductOp::Cartesian),
        "strong" => Some(ProductOp::Strong),
        "lex" => Some(ProductOp::Lexicographic),
        "corona" => Some(ProductOp::Corona),
        _ => None,
    }
}

struct Parser<'a> {
    tokens: Vec<(usize, Token<'a>)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            position,
            message: message.into(),
        })
    }

    fn peek(&self) -> Option<&(usize, Token<'a>)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Token<'a>)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_expr(&mut self) -> Result<GraphExpr, ExprError> {
        match self.next() {
            None => self.err(self.end, "expected a family or '('"),
            Some((at, Token::Close)) => self.err(at, "expected a family or '('"),
            Some((at, Token::Word(w))) => {
                if op_of(w).is_some() {
                    return self.err(
                        at,
                        format!("expected a family or '(', found operator `{w}`"),
                    );
                }
                let spec: FamilySpec = w.parse().map_err(|e| ExprError {
                    position: at,
                    message: format!("{e}"),
                })?;
                Ok(GraphExpr::Family(spec))
            }
            Some((open_at, Token::Open)) => {
                let left = self.parse_expr()?;
                let op = self.expect_op()?;
                let right = self.parse_expr()?;
                match self.next() {
                    Some((_, Token::Close)) => Ok(GraphExpr::product(op, left, right)),
                    Some((at, _)) => self.err(at, "expected ')'"),
                    None => self.err(open_at, "unclosed '('"),
                }
            }
        }
    }

    fn expect_op(&mut self) -> Result<ProductOp, ExprError> {
        match self.next() {
            Some((at, Token::Word(w))) => match op_of(w) {
                Some(op) => Ok(op),
                None => self.err(
                    at,
                    format!("expected an operator (box|strong|lex|corona), found `{w}`"),
                ),
            },
            Some((at, _)) => self.err(at, "expected an operator (box|strong|lex|corona)"),
            None => self.err(self.end, "expected an operator (box|strong|lex|corona)"),
        }
    }
}

/// Parses a whole expression; one unparenthesized top-level operation is
/// allowed.
pub fn parse_expr(text: &str) -> Result<GraphExpr, ExprError> {
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
        end: text.len(),
    };
    if parser.tokens.is_empty() {
        return parser.err(0, "empty expression");
    }
    let first = parser.parse_expr()?;
    if parser.peek().is_none() {
        return Ok(first);
    }
    let op = parser.expect_op()?;
    let right = parser.parse_expr()?;
    match parser.next() {
        None => Ok(GraphExpr::product(op, first, right)),
        Some((at, _)) => parser.err(at, "trailing content; nest products with parentheses"),
    }
}

/// Parses exactly `count` consecutive expressions from one token stream, the
/// form used by construction parameters.
pub fn parse_expr_list(text: &str, count: usize) -> Result<Vec<GraphExpr>, ExprError> {
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
        end: text.len(),
    };
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(parser.parse_expr()?);
    }
    match parser.next() {
        None => Ok(out),
        Some((at, _)) => parser.err(at, "trailing content"),
    }
}
