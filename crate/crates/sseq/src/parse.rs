//! Parser for the ground disjunctive dialect.
//!
//! Statements are '.'-terminated; `%` starts a comment running to end of
//! line. Supported forms:
//!
//! ```text
//! a.                      % fact (also writable as "a :- .")
//! h1 | h2 :- b1, not b2.  % disjunctive rule
//! :- b1, not b2.          % hard constraint
//! :~ b1, not b2. [w@l]    % weak constraint; "[w:l]" and "[w]" also accepted
//! ```
//!
//! Atom names are lowercase-leading identifiers. Input is propositional:
//! variables, function terms, aggregates, choice rules and directives are
//! rejected with a positioned error. Names starting with a generated-atom
//! prefix (`k_`, `lambda_`, `gamma_`, `cstr_`) are rejected unless the
//! lenient entry point is used (needed to re-read our own rewritten output).

use crate::atoms::{has_reserved_prefix, AtomId, Signature};
use crate::program::{Program, Rule, WeakConstraint, WeightedProgram};

/// Syntax or lexical error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Ident(String),
    Number(u64),
    Not,
    Dot,
    Comma,
    Pipe,
    IfArrow,   // :-
    WeakArrow, // :~
    LBrack,
    RBrack,
    At,
    Colon,
}

impl TokKind {
    fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("atom '{s}'"),
            TokKind::Number(n) => format!("number {n}"),
            TokKind::Not => "'not'".into(),
            TokKind::Dot => "'.'".into(),
            TokKind::Comma => "','".into(),
            TokKind::Pipe => "'|'".into(),
            TokKind::IfArrow => "':-'".into(),
            TokKind::WeakArrow => "':~'".into(),
            TokKind::LBrack => "'['".into(),
            TokKind::RBrack => "']'".into(),
            TokKind::At => "'@'".into(),
            TokKind::Colon => "':'".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokKind,
    line: u32,
    col: u32,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut toks = Vec::new();
    let mut line: u32 = 1;
    let mut col: u32 = 1;
    let mut it = src.chars().peekable();
    while let Some(&c) = it.peek() {
        let start_col = col;
        match c {
            '\n' => {
                it.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                it.next();
                col += 1;
            }
            '%' => {
                while let Some(&c) = it.peek() {
                    if c == '\n' {
                        break;
                    }
                    it.next();
                    col += 1;
                }
            }
            'a'..='z' => {
                let mut name = String::new();
                while let Some(&c) = it.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        it.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let kind = if name == "not" { TokKind::Not } else { TokKind::Ident(name) };
                toks.push(Token { kind, line, col: start_col });
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&c) = it.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        it.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let n: u64 = digits.parse().map_err(|_| ParseError {
                    line,
                    col: start_col,
                    msg: format!("number '{digits}' is too large"),
                })?;
                toks.push(Token { kind: TokKind::Number(n), line, col: start_col });
            }
            ':' => {
                it.next();
                col += 1;
                let kind = match it.peek() {
                    Some('-') => {
                        it.next();
                        col += 1;
                        TokKind::IfArrow
                    }
                    Some('~') => {
                        it.next();
                        col += 1;
                        TokKind::WeakArrow
                    }
                    _ => TokKind::Colon,
                };
                toks.push(Token { kind, line, col: start_col });
            }
            '.' | ',' | '|' | ';' | '[' | ']' | '@' => {
                it.next();
                col += 1;
                let kind = match c {
                    '.' => TokKind::Dot,
                    ',' => TokKind::Comma,
                    '|' | ';' => TokKind::Pipe,
                    '[' => TokKind::LBrack,
                    ']' => TokKind::RBrack,
                    _ => TokKind::At,
                };
                toks.push(Token { kind, line, col: start_col });
            }
            'A'..='Z' | '_' => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: format!(
                        "variables are not supported (found '{c}'): programs must be ground"
                    ),
                });
            }
            '{' | '}' => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: "choice rules and aggregates are not supported".into(),
                });
            }
            '#' => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: "directives and aggregates are not supported".into(),
                });
            }
            '(' | ')' => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: "function terms are not supported: atoms are plain identifiers".into(),
                });
            }
            '-' => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: "'-' is not supported: weights and levels are nonnegative integers \
                          and classical negation is not part of the dialect"
                        .into(),
                });
            }
            other => {
                return Err(ParseError {
                    line,
                    col: start_col,
                    msg: format!("unexpected character '{other}'"),
                });
            }
        }
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end_line: u32,
    end_col: u32,
    sig: Signature,
    allow_reserved: bool,
    allow_weak: bool,
    rules: Vec<Rule>,
    weaks: Vec<WeakConstraint>,
}

impl Parser {
    fn new(src: &str, allow_reserved: bool, allow_weak: bool) -> Result<Parser, ParseError> {
        let toks = lex(src)?;
        let (end_line, end_col) = toks
            .last()
            .map(|t| (t.line, t.col + 1))
            .unwrap_or((1, 1));
        Ok(Parser {
            toks,
            pos: 0,
            end_line,
            end_col,
            sig: Signature::new(),
            allow_reserved,
            allow_weak,
            rules: Vec::new(),
            weaks: Vec::new(),
        })
    }

    fn peek(&self) -> Option<&TokKind> {
        self.toks.get(self.pos).map(|t| &t.kind)
    }

    fn here(&self) -> (u32, u32) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn err(&self, expected: &str) -> ParseError {
        let (line, col) = self.here();
        let found = match self.peek() {
            Some(k) => k.describe(),
            None => "end of input".into(),
        };
        ParseError { line, col, msg: format!("expected {expected}, found {found}") }
    }

    fn bump(&mut self) -> Option<TokKind> {
        let k = self.toks.get(self.pos).map(|t| t.kind.clone());
        if k.is_some() {
            self.pos += 1;
        }
        k
    }

    fn expect(&mut self, want: TokKind, expected: &str) -> Result<(), ParseError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn atom(&mut self, expected: &str) -> Result<AtomId, ParseError> {
        match self.peek() {
            Some(TokKind::Ident(_)) => {
                let (line, col) = self.here();
                let Some(TokKind::Ident(name)) = self.bump() else { unreachable!() };
                if !self.allow_reserved && has_reserved_prefix(&name) {
                    return Err(ParseError {
                        line,
                        col,
                        msg: format!(
                            "atom name '{name}' uses a prefix reserved for generated atoms"
                        ),
                    });
                }
                Ok(self.sig.intern_objective(&name))
            }
            _ => Err(self.err(expected)),
        }
    }

    /// Comma-separated literals, possibly empty (peeked terminator left in place).
    fn body(&mut self) -> Result<(Vec<AtomId>, Vec<AtomId>), ParseError> {
        let mut pos_body = Vec::new();
        let mut neg_body = Vec::new();
        if matches!(self.peek(), Some(TokKind::Dot) | None) {
            return Ok((pos_body, neg_body));
        }
        loop {
            if self.peek() == Some(&TokKind::Not) {
                self.bump();
                neg_body.push(self.atom("an atom after 'not'")?);
            } else {
                pos_body.push(self.atom("a body literal")?);
            }
            if self.peek() == Some(&TokKind::Comma) {
                self.bump();
            } else {
                break;
            }
        }
        Ok((pos_body, neg_body))
    }

    fn statement(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            Some(TokKind::WeakArrow) => {
                if !self.allow_weak {
                    let (line, col) = self.here();
                    return Err(ParseError {
                        line,
                        col,
                        msg: "weak constraints are not allowed here (plain program expected)"
                            .into(),
                    });
                }
                self.bump();
                let (pos_body, neg_body) = self.body()?;
                self.expect(TokKind::Dot, "'.' at end of weak constraint")?;
                self.expect(TokKind::LBrack, "'[' starting the weight annotation")?;
                let weight = match self.peek() {
                    Some(&TokKind::Number(n)) => {
                        self.bump();
                        n
                    }
                    _ => return Err(self.err("a nonnegative integer weight")),
                };
                let level = match self.peek() {
                    Some(TokKind::At) | Some(TokKind::Colon) => {
                        self.bump();
                        match self.peek() {
                            Some(&TokKind::Number(n)) => {
                                self.bump();
                                n
                            }
                            _ => return Err(self.err("a nonnegative integer level")),
                        }
                    }
                    _ => 0,
                };
                self.expect(TokKind::RBrack, "']' closing the weight annotation")?;
                self.weaks.push(WeakConstraint {
                    pos_body: pos_body.into_iter().collect(),
                    neg_body: neg_body.into_iter().collect(),
                    weight,
                    level,
                });
                Ok(())
            }
            Some(TokKind::IfArrow) => {
                self.bump();
                let (pos_body, neg_body) = self.body()?;
                self.expect(TokKind::Dot, "'.' at end of constraint")?;
                self.rules.push(Rule::new([], pos_body, neg_body));
                Ok(())
            }
            Some(TokKind::Ident(_)) => {
                let mut head = vec![self.atom("a head atom")?];
                while self.peek() == Some(&TokKind::Pipe) {
                    self.bump();
                    if self.peek() == Some(&TokKind::Not) {
                        let (line, col) = self.here();
                        return Err(ParseError {
                            line,
                            col,
                            msg: "negation is not allowed in rule heads".into(),
                        });
                    }
                    head.push(self.atom("a head atom after '|'")?);
                }
                let (pos_body, neg_body) = if self.peek() == Some(&TokKind::IfArrow) {
                    self.bump();
                    self.body()?
                } else {
                    (Vec::new(), Vec::new())
                };
                self.expect(TokKind::Dot, "'.' at end of rule")?;
                self.rules.push(Rule::new(head, pos_body, neg_body));
                Ok(())
            }
            _ => Err(self.err("a statement (rule, constraint, or weak constraint)")),
        }
    }

    fn run(mut self) -> Result<WeightedProgram, ParseError> {
        while self.pos < self.toks.len() {
            self.statement()?;
        }
        Ok(WeightedProgram {
            program: Program { sig: self.sig, rules: self.rules },
            weak_constraints: self.weaks,
        })
    }
}

/// Parse a plain program. Weak constraints and reserved-prefix atom names
/// are rejected.
pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    Ok(Parser::new(text, false, false)?.run()?.program)
}

/// Parse a program together with weak constraints (reserved names rejected).
pub fn parse_weighted(text: &str) -> Result<WeightedProgram, ParseError> {
    Parser::new(text, false, true)?.run()
}

/// Like [`parse_weighted`] but accepts reserved-prefix atom names, so output
/// of the rewriting can be read back in.
pub fn parse_weighted_lenient(text: &str) -> Result<WeightedProgram, ParseError> {
    Parser::new(text, true, true)?.run()
}
