//! Object expressions such as `widen(delta(2), {2})`.

use std::fs;
use std::sync::Arc;

use fibrancy::kernel::standard::{boundary, delta, interval_nerve};
use fibrancy::{
    class_a, full_subcomplex, isohorn, isoplex, product, pushout_product, skeleton, widen, FiniteCategory, Inclusion,
    Label, SSet,
};

use crate::workspace::{Value, Workspace};
use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Name(String),
    Int(usize),
    Set(Vec<Label>),
    Path(String),
    Call(String, Vec<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Usage(format!("expression: {}", msg.into()))
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(format!("expected `{c}` at offset {} in `{}`", self.pos, self.src)))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || "_-.".contains(c))).unwrap_or(self.rest().len());
        let s = self.rest()[..len].to_string();
        self.pos += len;
        s
    }

    /// Text up to the next top-level `,`, `}` or `)`.
    fn balanced(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0i32;
        for (k, c) in self.rest().char_indices() {
            match c {
                '(' | '[' | '<' => depth += 1,
                ')' | ']' | '>' if depth > 0 => depth -= 1,
                ',' | '}' | ')' if depth == 0 => {
                    self.pos = start + k;
                    return self.src[start..self.pos].trim();
                }
                _ => {}
            }
        }
        self.pos = self.src.len();
        self.src[start..].trim()
    }

    fn set(&mut self) -> Result<Expr, CliError> {
        self.expect('{')?;
        let mut out = Vec::new();
        if self.peek() != Some('}') {
            loop {
                let text = self.balanced();
                out.push(text.parse::<Label>().map_err(|e| parse_err(e.to_string()))?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect('}')?;
        Ok(Expr::Set(out))
    }

    fn path(&mut self) -> Result<Expr, CliError> {
        if self.peek() == Some('"') {
            self.pos += 1;
            let end = self.rest().find('"').ok_or_else(|| parse_err("unterminated string"))?;
            let s = self.rest()[..end].to_string();
            self.pos += end + 1;
            return Ok(Expr::Path(s));
        }
        let s = self.balanced();
        if s.is_empty() {
            return Err(parse_err("expected a file name"));
        }
        Ok(Expr::Path(s.to_string()))
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        match self.peek() {
            Some('{') => return self.set(),
            Some(c) if c.is_ascii_digit() => {
                let s = self.ident();
                return s.parse().map(Expr::Int).map_err(|_| parse_err(format!("bad integer `{s}`")));
            }
            None => return Err(parse_err("unexpected end of input")),
            _ => {}
        }
        let name = self.ident();
        if name.is_empty() {
            return Err(parse_err(format!("unexpected input at offset {} in `{}`", self.pos, self.src)));
        }
        if self.peek() != Some('(') {
            return Ok(Expr::Name(name));
        }
        self.pos += 1;
        let mut args = Vec::new();
        if name == "nerve" {
            args.push(self.path()?);
        } else if self.peek() != Some(')') {
            loop {
                args.push(self.expr()?);
                if self.peek() == Some(',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(')')?;
        Ok(Expr::Call(name, args))
    }
}

pub fn parse(src: &str) -> Result<Expr, CliError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(parse_err(format!("trailing input `{}`", p.rest())));
    }
    Ok(e)
}

/// Finds `label` among the vertices of `x`; a bare integer `k` also matches `(k)`.
pub fn resolve_vertex(x: &SSet, label: &Label) -> Result<Label, CliError> {
    if x.find(0, label).is_some() {
        return Ok(label.clone());
    }
    if let Label::Int(k) = label {
        if let Ok(k) = u32::try_from(*k) {
            let t = Label::Tuple(vec![k]);
            if x.find(0, &t).is_some() {
                return Ok(t);
            }
        }
    }
    Err(CliError::Usage(format!("no vertex {label}")))
}

fn resolve_all(x: &SSet, labels: &[Label]) -> Result<Vec<Label>, CliError> {
    labels.iter().map(|l| resolve_vertex(x, l)).collect()
}

pub struct Evaluator<'a> {
    pub ws: &'a Workspace,
    pub dim: usize,
}

impl Evaluator<'_> {
    pub fn eval(&self, e: &Expr) -> Result<Value, CliError> {
        let d = self.dim;
        let obj = |x: SSet| Ok(Value::Object(Arc::new(x)));
        match e {
            Expr::Name(n) if n == "J" => obj(interval_nerve(d)),
            Expr::Name(n) => self.named(n),
            Expr::Call(f, args) => match (f.as_str(), args.as_slice()) {
                ("delta", [Expr::Int(n)]) => obj(delta(*n, d)),
                ("boundary", [Expr::Int(n)]) => obj(boundary(*n, d)?),
                ("nerve", [Expr::Path(p)]) => {
                    let text = fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{p}: {e}")))?;
                    obj(FiniteCategory::from_json(&text)?.nerve(d))
                }
                ("product", [a, b]) => obj(product(self.object(a)?.as_ref(), self.object(b)?.as_ref())?),
                ("fullsub", [a, Expr::Set(vs)]) => {
                    let x = self.object(a)?;
                    Ok(Value::Inclusion(full_subcomplex(&x, &resolve_all(&x, vs)?)?))
                }
                ("skeleton", [a, Expr::Int(k)]) => Ok(Value::Inclusion(skeleton(&self.object(a)?, *k)?)),
                ("widen", [a, Expr::Set(vs)]) => {
                    let x = self.object(a)?;
                    Ok(Value::Object(widen(&x, &resolve_all(&x, vs)?)?.object().clone()))
                }
                ("isoplex", [Expr::Int(n), Expr::Int(i)]) => Ok(Value::Object(isoplex(*n, *i, d)?.body().clone())),
                ("isohorn", [Expr::Int(n), Expr::Int(i)]) => Ok(Value::Inclusion(isohorn(*n, *i, d)?.inclusion().clone())),
                ("pushout_product", [f, g]) => Ok(Value::Inclusion(pushout_product(&self.inclusion(f)?, &self.inclusion(g)?)?)),
                ("class_A", [Expr::Int(n)]) => Ok(Value::Inclusion(class_a(*n, d)?)),
                _ => Err(parse_err(format!("cannot apply `{f}` to {} argument(s) of these kinds", args.len()))),
            },
            Expr::Int(_) | Expr::Set(_) | Expr::Path(_) => Err(parse_err("expected an object")),
        }
    }

    fn named(&self, name: &str) -> Result<Value, CliError> {
        let v = self.ws.load(name)?;
        if v.dim() == self.dim {
            return Ok(v);
        }
        match v {
            Value::Object(x) if x.dim() > self.dim => Ok(Value::Object(Arc::new(x.truncate(self.dim)?))),
            v => Err(CliError::Usage(format!(
                "`{name}` is truncated at {} but the expression is evaluated at {}",
                v.dim(),
                self.dim
            ))),
        }
    }

    fn object(&self, e: &Expr) -> Result<Arc<SSet>, CliError> {
        Ok(self.eval(e)?.object().clone())
    }

    fn inclusion(&self, e: &Expr) -> Result<Inclusion, CliError> {
        match self.eval(e)? {
            Value::Inclusion(i) => Ok(i),
            Value::Object(_) => Err(parse_err("expected an inclusion, got an object")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_calls() {
        let e = parse("widen(delta(2), {2})").unwrap();
        assert_eq!(
            e,
            Expr::Call("widen".into(), vec![Expr::Call("delta".into(), vec![Expr::Int(2)]), Expr::Set(vec![Label::Int(2)])])
        );
        assert_eq!(parse(" J ").unwrap(), Expr::Name("J".into()));
    }

    #[test]
    fn sets_hold_structured_labels() {
        let e = parse("fullsub(x, {<b0,(0)>, (1), 2})").unwrap();
        let Expr::Call(_, args) = e else { panic!() };
        assert_eq!(args[1], Expr::Set(vec!["<b0,(0)>".parse().unwrap(), "(1)".parse().unwrap(), Label::Int(2)]));
    }

    #[test]
    fn nerve_takes_a_path() {
        assert_eq!(parse("nerve(cats/z2.json)").unwrap(), Expr::Call("nerve".into(), vec![Expr::Path("cats/z2.json".into())]));
        assert_eq!(parse("nerve(\"a b.json\")").unwrap(), Expr::Call("nerve".into(), vec![Expr::Path("a b.json".into())]));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["delta(", "delta(2))", "widen(delta(2), {2)", "", "product(J,"] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn bare_integers_fall_back_to_tuples() {
        let x = delta(2, 2);
        assert_eq!(resolve_vertex(&x, &Label::Int(1)).unwrap(), Label::Tuple(vec![1]));
        assert!(resolve_vertex(&x, &Label::Int(5)).is_err());
    }
}
