//! Concrete syntax for constraints.
//!
//! ```text
//! formula := iff
//! iff     := implies { "<->" implies }
//! implies := or [ "->" implies ]
//! or      := and { ("|" | "\/") and }
//! and     := unary { ("&" | "/\") unary }
//! unary   := ("~" | "!") unary | "(" formula ")" | "TRUE" | "FALSE" | identifier
//! ```
//!
//! Whitespace is insignificant and `#` starts a comment running to the end
//! of the line.

use thiserror::Error;

use super::formula::{Expr, Formula};
use super::issues::IssueSet;
use super::LogicError;

/// Deepest nesting of parentheses and negations accepted by the parser.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: unknown identifier `{name}`")]
    UnknownIdentifier { name: String, line: usize, column: usize },
    #[error("line {line}: expected header `{expected}: ...`")]
    MissingHeader { expected: &'static str, line: usize },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: LogicError,
    },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Ident(name) => format!("identifier `{name}`"),
            Token::True => "`TRUE`".into(),
            Token::False => "`FALSE`".into(),
            Token::Not => "`~`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

fn tokenize(text: &str, first_line: usize) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (first_line, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        let push = |out: &mut Vec<Spanned>, token| {
            out.push(Spanned {
                token,
                line: start_line,
                column: start_col,
            })
        };
        let width = match c {
            '\n' => {
                line += 1;
                column = 1;
                i += 1;
                continue;
            }
            c if c.is_whitespace() => 1,
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '~' | '!' => {
                push(&mut out, Token::Not);
                1
            }
            '&' => {
                push(&mut out, Token::And);
                1
            }
            '|' => {
                push(&mut out, Token::Or);
                1
            }
            '(' => {
                push(&mut out, Token::LParen);
                1
            }
            ')' => {
                push(&mut out, Token::RParen);
                1
            }
            '/' if chars.get(i + 1) == Some(&'\\') => {
                push(&mut out, Token::And);
                2
            }
            '\\' if chars.get(i + 1) == Some(&'/') => {
                push(&mut out, Token::Or);
                2
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                push(&mut out, Token::Implies);
                2
            }
            '<' if chars.get(i + 1) == Some(&'-') && chars.get(i + 2) == Some(&'>') => {
                push(&mut out, Token::Iff);
                3
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                column += i - start;
                let token = match word.as_str() {
                    "TRUE" => Token::True,
                    "FALSE" => Token::False,
                    _ => Token::Ident(word),
                };
                push(&mut out, token);
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        i += width;
        column += width;
    }
    out.push(Spanned {
        token: Token::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    issues: &'a IssueSet,
    depth: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].token
    }

    fn advance(&mut self) -> Spanned {
        let tok = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        tok
    }

    fn error_here(&self, message: String) -> ParseError {
        let tok = &self.tokens[self.pos];
        ParseError::Syntax {
            line: tok.line,
            column: tok.column,
            message,
        }
    }

    fn descend(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.error_here(format!("nesting deeper than {MAX_DEPTH}")));
        }
        Ok(())
    }

    fn formula(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.implies()?;
        while *self.peek() == Token::Iff {
            self.advance();
            let rhs = self.implies()?;
            lhs = Expr::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Token::Implies {
            self.advance();
            self.descend()?;
            let rhs = self.implies()?;
            self.depth -= 1;
            return Ok(Expr::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Token::Or {
            self.advance();
            let rhs = self.and()?;
            lhs = Expr::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Token::And {
            self.advance();
            let rhs = self.unary()?;
            lhs = Expr::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Token::Not => {
                self.advance();
                self.descend()?;
                let inner = self.unary()?;
                self.depth -= 1;
                Ok(Expr::not(inner))
            }
            Token::LParen => {
                self.advance();
                self.descend()?;
                let inner = self.formula()?;
                self.depth -= 1;
                if *self.peek() != Token::RParen {
                    return Err(self.error_here(format!("expected `)`, found {}", self.peek().describe())));
                }
                self.advance();
                Ok(inner)
            }
            Token::True => {
                self.advance();
                Ok(Expr::True)
            }
            Token::False => {
                self.advance();
                Ok(Expr::False)
            }
            Token::Ident(name) => {
                let tok = self.advance();
                match self.issues.index_of(&name) {
                    Some(i) => Ok(Expr::Var(i)),
                    None => Err(ParseError::UnknownIdentifier {
                        name,
                        line: tok.line,
                        column: tok.column,
                    }),
                }
            }
            other => Err(self.error_here(format!("expected a formula, found {}", other.describe()))),
        }
    }
}

/// Parses a single formula over `issues`.
pub fn parse(text: &str, issues: &IssueSet) -> Result<Formula, ParseError> {
    parse_at(text, issues, 1)
}

fn parse_at(text: &str, issues: &IssueSet, first_line: usize) -> Result<Formula, ParseError> {
    let tokens = tokenize(text, first_line)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        issues,
        depth: 0,
    };
    let expr = parser.formula()?;
    if *parser.peek() != Token::Eof {
        return Err(parser.error_here(format!("unexpected {} after formula", parser.peek().describe())));
    }
    Formula::new(issues.clone(), expr).map_err(|source| ParseError::Invalid {
        line: first_line,
        source,
    })
}

/// Strips a `#` comment and surrounding whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

/// Finds the first meaningful line, which must be `keyword: names...`.
/// Returns the 1-based line number of the header and the words after the colon.
pub(crate) fn read_header<'t>(
    lines: &mut impl Iterator<Item = (usize, &'t str)>,
    keyword: &'static str,
) -> Result<(usize, Vec<&'t str>), ParseError> {
    for (number, raw) in lines.by_ref() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let rest = line
            .strip_prefix(keyword)
            .and_then(|r| r.trim_start().strip_prefix(':'))
            .ok_or(ParseError::MissingHeader {
                expected: keyword,
                line: number,
            })?;
        return Ok((number, rest.split_whitespace().collect()));
    }
    Err(ParseError::MissingHeader {
        expected: keyword,
        line: 1,
    })
}

pub(crate) fn header_issues(line: usize, names: Vec<&str>) -> Result<IssueSet, ParseError> {
    IssueSet::new(names).map_err(|source| ParseError::Invalid { line, source })
}

/// A parsed formula file: an `issues:` header followed by one formula per
/// line, read as their conjunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaFile {
    pub issues: IssueSet,
    pub formulas: Vec<Formula>,
}

impl FormulaFile {
    /// Conjunction of all formulas (`TRUE` for an empty list).
    pub fn constraint(&self) -> Formula {
        Formula::all(self.issues.clone(), &self.formulas).expect("formulas share the file's issues")
    }

    pub fn from_formula(formula: &Formula) -> Self {
        let issues = formula.issues().clone();
        let formulas = formula
            .expr()
            .conjuncts()
            .into_iter()
            .map(|e| Formula::new(issues.clone(), e.clone()).expect("sub-formula is in range"))
            .collect();
        FormulaFile { issues, formulas }
    }

    /// Serializes in the format accepted by [`parse_formula_file`].
    pub fn render(&self) -> String {
        let mut out = format!("issues: {}\n", self.issues);
        for f in &self.formulas {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }
}

pub fn parse_formula_file(text: &str) -> Result<FormulaFile, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (header_line, names) = read_header(&mut lines, "issues")?;
    let issues = header_issues(header_line, names)?;
    let mut formulas = Vec::new();
    for (number, raw) in lines {
        if strip_comment(raw).is_empty() {
            continue;
        }
        formulas.push(parse_at(raw, &issues, number)?);
    }
    Ok(FormulaFile { issues, formulas })
}
