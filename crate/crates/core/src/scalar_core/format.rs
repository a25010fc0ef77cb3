//! Text and JSON forms of ELT scalars.
//!
//! JSON: `"bottom"` or `{"t": "p/q", "layer": "p/q"}`. Text: `bottom` or `(t,ℓ)`,
//! with an expression syntax for `+`, `*`, `-` (as `⊖`) and postfix `°`.

use serde_json::{json, Map, Value};

use super::{EltScalar, NegationSemiring, Rational};
use crate::error::ParseError;

pub fn scalar_to_json(s: &EltScalar) -> Value {
    match s {
        EltScalar::Bottom => Value::String("bottom".into()),
        EltScalar::Layered { tangible, layer } => {
            json!({"t": tangible.to_string(), "layer": layer.to_string()})
        }
    }
}

fn rational_field(obj: &Map<String, Value>, key: &str) -> Result<Rational, ParseError> {
    match obj.get(key) {
        Some(Value::String(s)) => s
            .parse()
            .map_err(|e: ParseError| ParseError::new(format!("field `{key}`: {}", e.message))),
        Some(Value::Number(n)) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap())),
        Some(other) => Err(ParseError::new(format!(
            "field `{key}` must be a rational string, got {other}"
        ))),
        None => Err(ParseError::new(format!("missing field `{key}`"))),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<EltScalar, ParseError> {
    match v {
        Value::String(s) if s == "bottom" => Ok(EltScalar::Bottom),
        Value::Object(obj) => {
            if let Some(k) = obj.keys().find(|k| *k != "t" && *k != "layer") {
                return Err(ParseError::new(format!("unexpected field `{k}` in scalar")));
            }
            Ok(EltScalar::new(
                rational_field(obj, "t")?,
                rational_field(obj, "layer")?,
            ))
        }
        other => Err(ParseError::new(format!(
            "expected \"bottom\" or {{\"t\",\"layer\"}}, got {other}"
        ))),
    }
}

/// Parses a single scalar literal: `bottom` or `(t,ℓ)`.
pub fn parse_scalar(text: &str) -> Result<EltScalar, ParseError> {
    let mut p = Parser::new(text);
    let s = p.literal()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(s)
}

/// Evaluates an expression such as `(3,2)+(1,5)*-(0,1)°`.
pub fn eval_expression(text: &str) -> Result<EltScalar, ParseError> {
    let mut p = Parser::new(text);
    let v = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, what: &str) -> ParseError {
        ParseError::new(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<EltScalar, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat("+") {
                acc = acc.add(&self.term()?);
            } else if self.eat("-") || self.eat("⊖") {
                acc = acc.minus(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<EltScalar, ParseError> {
        let mut acc = self.unary()?;
        while self.eat("*") || self.eat("·") {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<EltScalar, ParseError> {
        if self.eat("-") || self.eat("⊖") {
            return Ok(self.unary()?.negate());
        }
        let mut v = self.atom()?;
        while self.eat("°") {
            v = v.circ();
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<EltScalar, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if let Ok(lit) = self.literal() {
            return Ok(lit);
        }
        self.pos = start;
        if self.eat("(") {
            let v = self.expr()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(v);
        }
        Err(self.error("expected scalar"))
    }

    fn literal(&mut self) -> Result<EltScalar, ParseError> {
        if self.eat("bottom") {
            return Ok(EltScalar::Bottom);
        }
        if !self.eat("(") {
            return Err(self.error("expected `(`"));
        }
        let t = self.rational()?;
        if !self.eat(",") {
            return Err(self.error("expected `,`"));
        }
        let l = self.rational()?;
        if !self.eat(")") {
            return Err(self.error("expected `)`"));
        }
        Ok(EltScalar::new(t, l))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || c == '/' || (i == 0 && c == '-')))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected rational"));
        }
        let r = rest[..len].parse().map_err(|_| self.error("invalid rational"))?;
        self.pos += len;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for s in [
            EltScalar::Bottom,
            EltScalar::new(3, 2),
            EltScalar::new(Rational::new(-7, 3), Rational::new(5, 11)),
        ] {
            let v = scalar_to_json(&s);
            assert_eq!(scalar_from_json(&v).unwrap(), s);
            let text = serde_json::to_string(&v).unwrap();
            let back: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(scalar_from_json(&back).unwrap(), s);
        }
    }

    #[test]
    fn json_errors() {
        assert!(scalar_from_json(&json!({"t": "1"})).is_err());
        assert!(scalar_from_json(&json!({"t": "1", "layer": "1/0"})).is_err());
        assert!(scalar_from_json(&json!({"t": "1", "layer": "2", "x": 1})).is_err());
        assert!(scalar_from_json(&json!("top")).is_err());
    }

    #[test]
    fn expressions() {
        assert_eq!(eval_expression("(3,2)+(1,5)").unwrap(), EltScalar::new(3, 2));
        assert_eq!(eval_expression("(1,2)*(3,4)").unwrap(), EltScalar::new(4, 8));
        assert_eq!(eval_expression("(2,3) - (2,3)").unwrap(), EltScalar::new(2, 0));
        assert_eq!(eval_expression("-(5,3)").unwrap(), EltScalar::new(5, -3));
        assert_eq!(eval_expression("(5,3)°").unwrap(), EltScalar::new(5, 0));
        assert_eq!(
            eval_expression("((1,1)+(1,1))*(0,-1/2)").unwrap(),
            EltScalar::new(1, -1)
        );
        assert_eq!(eval_expression("bottom + (-1,1)").unwrap(), EltScalar::new(-1, 1));
        assert!(eval_expression("(1,2").is_err());
        assert!(eval_expression("(1,2) (3,4)").is_err());
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(parse_scalar(" (1/2, -3) ").unwrap(), EltScalar::new(Rational::new(1, 2), -3));
        assert!(parse_scalar("(1,2)+(1,2)").is_err());
    }
}
