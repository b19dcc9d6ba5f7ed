//! Structural simplex labels.
//!
//! Every simplex carries a label that is unique within its dimension. Labels
//! are totally ordered and the order is what the rest of the crate uses for
//! tie-breaking, so simplex tables are always stored sorted by label.
//!
//! The textual form round-trips through [`Label::from_str`]:
//!
//! | variant   | example            |
//! |-----------|--------------------|
//! | `Int`     | `7`, `-2`          |
//! | `Tuple`   | `(0,1,1,2)`        |
//! | `Bits`    | `b0110`            |
//! | `Pair`    | `<b01,(0,2)>`      |
//! | `Object`  | `@x`               |
//! | `Path`    | `[f,g]`            |
//! | `Tagged`  | `#3:(0,1)`         |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Int(i64),
    /// A monotone vertex sequence, e.g. a simplex of a standard simplex.
    Tuple(Vec<u32>),
    /// A 0/1 sequence, i.e. a simplex of J.
    Bits(Vec<u8>),
    Pair(Box<Label>, Box<Label>),
    /// A vertex of a nerve.
    Object(String),
    /// A string of composable morphisms in a nerve.
    Path(Vec<String>),
    /// A summand tag of a disjoint union.
    Tagged(u32, Box<Label>),
}

impl Label {
    pub fn pair(a: Label, b: Label) -> Label {
        Label::Pair(Box::new(a), Box::new(b))
    }

    pub fn tagged(tag: u32, inner: Label) -> Label {
        Label::Tagged(tag, Box::new(inner))
    }

    /// Bit-vector label from a mask whose most significant of `len` bits is entry 0.
    pub fn bits_from_mask(mask: u64, len: usize) -> Label {
        Label::Bits(
            (0..len)
                .map(|p| ((mask >> (len - 1 - p)) & 1) as u8)
                .collect(),
        )
    }

    pub fn as_pair(&self) -> Option<(&Label, &Label)> {
        match self {
            Label::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_bits(&self) -> Option<&[u8]> {
        match self {
            Label::Bits(b) => Some(b),
            _ => None,
        }
    }
}

/// Characters allowed in object and morphism names.
pub fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '\'' | '.' | '-' | '*')
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (k, item) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{item}")?;
    }
    Ok(())
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(v) => write!(f, "{v}"),
            Label::Tuple(vs) => {
                f.write_str("(")?;
                write_joined(f, vs)?;
                f.write_str(")")
            }
            Label::Bits(bs) => {
                f.write_str("b")?;
                for b in bs {
                    write!(f, "{b}")?;
                }
                Ok(())
            }
            Label::Pair(a, b) => write!(f, "<{a},{b}>"),
            Label::Object(name) => write!(f, "@{name}"),
            Label::Path(names) => {
                f.write_str("[")?;
                write_joined(f, names)?;
                f.write_str("]")
            }
            Label::Tagged(tag, inner) => write!(f, "#{tag}:{inner}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("label `{}`: {what} at offset {}", self.src, self.pos))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            _ => Err(self.err(&format!("expected `{want}`"))),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn number(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        self.take_while(|c| c.is_ascii_digit());
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.err("expected an integer"))
    }

    fn name(&mut self) -> Result<String> {
        let s = self.take_while(is_name_char);
        if s.is_empty() {
            return Err(self.err("expected a name"));
        }
        Ok(s.to_string())
    }

    fn label(&mut self) -> Result<Label> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let mut vs = Vec::new();
                if self.peek() != Some(')') {
                    loop {
                        let v = self.number()?;
                        vs.push(u32::try_from(v).map_err(|_| self.err("negative vertex"))?);
                        if self.peek() == Some(',') {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect(')')?;
                Ok(Label::Tuple(vs))
            }
            Some('b') => {
                self.bump();
                let digits = self.take_while(|c| c == '0' || c == '1');
                if digits.is_empty() {
                    return Err(self.err("expected bits"));
                }
                Ok(Label::Bits(digits.bytes().map(|b| b - b'0').collect()))
            }
            Some('<') => {
                self.bump();
                let a = self.label()?;
                self.expect(',')?;
                let b = self.label()?;
                self.expect('>')?;
                Ok(Label::pair(a, b))
            }
            Some('@') => {
                self.bump();
                Ok(Label::Object(self.name()?))
            }
            Some('[') => {
                self.bump();
                let mut names = vec![self.name()?];
                while self.peek() == Some(',') {
                    self.bump();
                    names.push(self.name()?);
                }
                self.expect(']')?;
                Ok(Label::Path(names))
            }
            Some('#') => {
                self.bump();
                let tag = self.number()?;
                let tag = u32::try_from(tag).map_err(|_| self.err("negative tag"))?;
                self.expect(':')?;
                Ok(Label::tagged(tag, self.label()?))
            }
            Some(c) if c == '-' || c.is_ascii_digit() => Ok(Label::Int(self.number()?)),
            _ => Err(self.err("unexpected character")),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let mut p = Parser { src: s.trim(), pos: 0 };
        let label = p.label()?;
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(label)
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Label, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
