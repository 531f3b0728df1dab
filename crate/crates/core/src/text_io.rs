//! The frame text format and JSON-lines labelling output.
//!
//! ```text
//! frame hlaf
//! arg a
//! arg b
//! atk r1 = {a} -> b   # comments run to the end of the line
//! ```

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::framework::{is_identifier, Attack, ElementId, Framework, FrameworkKind};
use crate::logic::Truth3;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token<'a> {
    Ident(&'a str),
    Punct(&'static str),
}

fn tokenize(line: &str, line_no: usize) -> std::result::Result<Vec<(Token<'_>, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(start, c)) = chars.peek() {
        let column = line[..start].chars().count() + 1;
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let mut end = start;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            out.push((Token::Ident(&line[start..end]), column));
        } else if line[start..].starts_with("->") {
            chars.next();
            chars.next();
            out.push((Token::Punct("->"), column));
        } else if let Some(p) = ["{", "}", ",", "="].into_iter().find(|p| line[start..].starts_with(p)) {
            chars.next();
            out.push((Token::Punct(p), column));
        } else {
            return Err(syntax(line_no, column, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { kind: ParseErrorKind::Syntax, line, column, message: message.into() }
}

struct Cursor<'t, 'a> {
    tokens: &'t [(Token<'a>, usize)],
    pos: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Cursor<'_, 'a> {
    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |t| t.1)
    }

    fn ident(&mut self, what: &str) -> std::result::Result<(&'a str, usize), ParseError> {
        match self.tokens.get(self.pos) {
            Some(&(Token::Ident(s), col)) => {
                self.pos += 1;
                if is_identifier(s) {
                    Ok((s, col))
                } else {
                    Err(syntax(self.line, col, format!("`{s}` is not a valid identifier")))
                }
            }
            _ => Err(syntax(self.line, self.column(), format!("expected {what}"))),
        }
    }

    fn punct(&mut self, p: &'static str) -> std::result::Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some((Token::Punct(q), _)) if *q == p => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(syntax(self.line, self.column(), format!("expected `{p}`"))),
        }
    }

    fn peek_punct(&self, p: &str) -> bool {
        matches!(self.tokens.get(self.pos), Some((Token::Punct(q), _)) if *q == p)
    }

    fn finish(&self) -> std::result::Result<(), ParseError> {
        if self.pos < self.tokens.len() {
            Err(syntax(self.line, self.column(), "unexpected trailing input"))
        } else {
            Ok(())
        }
    }
}

fn declare(declared: &mut HashSet<String>, name: &str, line: usize, column: usize) -> std::result::Result<ElementId, ParseError> {
    if !declared.insert(name.to_string()) {
        return Err(ParseError {
            kind: ParseErrorKind::Redeclaration,
            line,
            column,
            message: format!("`{name}` is already declared"),
        });
    }
    Ok(ElementId::new(name).expect("tokenizer admits identifiers only"))
}

/// Parses a frame document and validates the result.
pub fn parse_frame(text: &str) -> Result<Framework> {
    let mut kind = None;
    let mut arguments = Vec::new();
    let mut attacks: Vec<Attack> = Vec::new();
    let mut declared: HashSet<String> = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.split('#').next().unwrap_or("");
        let tokens = tokenize(line, line_no)?;
        if tokens.is_empty() {
            continue;
        }
        let mut cur = Cursor { tokens: &tokens, pos: 0, line: line_no, end_column: line.chars().count() + 1 };
        let (keyword, kw_col) = match tokens[0] {
            (Token::Ident(s), col) => (s, col),
            (_, col) => return Err(syntax(line_no, col, "expected `frame`, `arg` or `atk`").into()),
        };
        cur.pos = 1;

        if kind.is_none() {
            if keyword != "frame" {
                return Err(syntax(line_no, kw_col, "the document must start with `frame <kind>`").into());
            }
            let (name, col) = cur.ident("a framework kind")?;
            let parsed: FrameworkKind =
                name.parse().map_err(|e: String| ParseError { kind: ParseErrorKind::Syntax, line: line_no, column: col, message: e })?;
            cur.finish()?;
            kind = Some(parsed);
            continue;
        }

        match keyword {
            "arg" => {
                let (name, col) = cur.ident("an argument identifier")?;
                cur.finish()?;
                arguments.push(declare(&mut declared, name, line_no, col)?);
            }
            "atk" => {
                let (name, name_col) = cur.ident("an attack identifier")?;
                cur.punct("=")?;
                cur.punct("{")?;
                let mut source = vec![cur.ident("a source identifier")?];
                while cur.peek_punct(",") {
                    cur.punct(",")?;
                    source.push(cur.ident("a source identifier")?);
                }
                cur.punct("}")?;
                cur.punct("->")?;
                let target = cur.ident("a target identifier")?;
                cur.finish()?;
                for &(referenced, col) in source.iter().chain(std::iter::once(&target)) {
                    if !declared.contains(referenced) {
                        return Err(ParseError {
                            kind: ParseErrorKind::Reference,
                            line: line_no,
                            column: col,
                            message: format!("unknown id {referenced}"),
                        }
                        .into());
                    }
                }
                let id = declare(&mut declared, name, line_no, name_col)?;
                let member = |s: &str| ElementId::new(s).expect("tokenizer admits identifiers only");
                attacks.push(Attack::new(id, source.iter().map(|(s, _)| member(s)), member(target.0)));
            }
            "frame" => return Err(syntax(line_no, kw_col, "duplicate `frame` header").into()),
            other => return Err(syntax(line_no, kw_col, format!("unknown directive `{other}`")).into()),
        }
    }

    let kind = kind.ok_or_else(|| syntax(1, 1, "missing `frame <kind>` header"))?;
    let framework = Framework::new(kind, arguments, attacks);
    framework.ensure_valid()?;
    Ok(framework)
}

/// The canonical document: sorted `arg` lines, then attacks in declaration order.
pub fn serialize_frame(framework: &Framework) -> String {
    let mut out = format!("frame {}\n", framework.kind());
    for a in framework.arguments() {
        let _ = writeln!(out, "arg {a}");
    }
    for atk in framework.attacks() {
        let source: Vec<&str> = atk.source.iter().map(ElementId::as_str).collect();
        let _ = writeln!(out, "atk {} = {{{}}} -> {}", atk.id, source.join(", "), atk.target);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    ThreeValued,
    Real,
}

/// A value that can be written in either labelling mode.
pub trait LabelValue {
    /// The exact 3-valued reading, if there is one.
    fn as_truth3(&self) -> Option<Truth3>;
    fn as_real(&self) -> f64;
}

impl LabelValue for Truth3 {
    fn as_truth3(&self) -> Option<Truth3> {
        Some(*self)
    }
    fn as_real(&self) -> f64 {
        self.to_f64()
    }
}

impl LabelValue for f64 {
    fn as_truth3(&self) -> Option<Truth3> {
        Truth3::ALL.into_iter().find(|t| t.to_f64() == *self)
    }
    fn as_real(&self) -> f64 {
        *self
    }
}

/// Formats `x` in positional notation with 12 significant digits.
pub fn format_real(x: f64) -> String {
    let sci = format!("{:.11e}", x.abs());
    let (mantissa, exp) = sci.split_once('e').expect("exponent notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let sign = if x.is_sign_negative() && x != 0.0 { "-" } else { "" };
    let body = if exp < 0 {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    } else {
        let split = (exp as usize + 1).min(digits.len());
        let (int, frac) = digits.split_at(split);
        let int = format!("{int}{}", "0".repeat(exp as usize + 1 - split));
        if frac.is_empty() {
            int
        } else {
            format!("{int}.{frac}")
        }
    };
    format!("{sign}{body}")
}

/// One JSON object per labelling, keys sorted, values as strings.
pub fn write_labellings<V: LabelValue>(labellings: &[BTreeMap<ElementId, V>], mode: LabelMode) -> Result<String> {
    let mut out = String::new();
    let domain: Option<Vec<&ElementId>> = labellings.first().map(|l| l.keys().collect());
    for labelling in labellings {
        if Some(labelling.keys().collect::<Vec<_>>()) != domain {
            return Err(Error::MixedDomain);
        }
        let mut object = BTreeMap::new();
        for (k, v) in labelling {
            let text = match mode {
                LabelMode::ThreeValued => v
                    .as_truth3()
                    .ok_or_else(|| Error::OutOfRange { id: k.to_string(), value: v.as_real() })?
                    .as_str()
                    .to_string(),
                LabelMode::Real => format_real(v.as_real()),
            };
            object.insert(k.as_str(), text);
        }
        out.push_str(&serde_json::to_string(&object).expect("string map serializes"));
        out.push('\n');
    }
    Ok(out)
}
