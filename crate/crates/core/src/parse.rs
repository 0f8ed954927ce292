//! Recursive-descent parser for the polynomial input language.
//!
//! Grammar:
//!
//! ```text
//! poly   := term (("+"|"-") term)* ;
//! term   := coeff ("*" factor)* | factor ("*" factor)* ;
//! coeff  := integer | integer "/" positive-integer ;
//! factor := ident ("^" positive-integer)? ;
//! ident  := [a-zA-Z][a-zA-Z0-9_]* ;
//! ```
//!
//! Whitespace between tokens is ignored. Implicit multiplication is a syntax
//! error. As the only extension beyond the grammar, a single leading `+` or
//! `-` sign is accepted before the first term so that every canonically
//! printed polynomial (whose first coefficient may be negative) parses back.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{ExpVec, Poly};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { pos: usize, name: String },
}

impl ParseError {
    fn syntax(pos: usize, expected: &str, found: impl fmt::Display) -> Self {
        ParseError::Syntax {
            pos,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(BigInt),
    Ident(String),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Int(n) => write!(f, "integer `{}`", n),
            Tok::Ident(s) => write!(f, "identifier `{}`", s),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token and its starting position.
    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Int(text.parse().unwrap())
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Ident(text.to_string())
            }
            other => {
                return Err(ParseError::syntax(
                    start,
                    "a token",
                    format!("`{}`", other as char),
                ))
            }
        };
        Ok((start, tok))
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    /// Known variables and their slots.
    var_index: BTreeMap<String, usize>,
    /// Variable names in order.
    var_names: Vec<String>,
    /// Whether new variables may be added (no explicit list was given).
    open_vars: bool,
    /// Accumulated terms as (slot-indexed sparse exponents, coefficient).
    terms: Vec<(Vec<(usize, u32)>, Rat)>,
}

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.idx]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expect_positive_int(&mut self, what: &str) -> Result<(usize, BigInt), ParseError> {
        match self.bump() {
            (pos, Tok::Int(n)) => {
                if n.is_zero() {
                    Err(ParseError::syntax(pos, what, "integer `0`"))
                } else {
                    Ok((pos, n))
                }
            }
            (pos, Tok::Minus) => Err(ParseError::NegativeExponent { pos }),
            (pos, tok) => Err(ParseError::syntax(pos, what, tok)),
        }
    }

    fn var_slot(&mut self, pos: usize, name: String) -> Result<usize, ParseError> {
        if let Some(&i) = self.var_index.get(&name) {
            return Ok(i);
        }
        if !self.open_vars {
            return Err(ParseError::UnknownVariable { pos, name });
        }
        let i = self.var_names.len();
        self.var_index.insert(name.clone(), i);
        self.var_names.push(name);
        Ok(i)
    }

    /// factor := ident ("^" positive-integer)?
    fn factor(&mut self, exps: &mut Vec<(usize, u32)>) -> Result<(), ParseError> {
        let (pos, tok) = self.bump();
        let name = match tok {
            Tok::Ident(s) => s,
            other => return Err(ParseError::syntax(pos, "a variable", other)),
        };
        let slot = self.var_slot(pos, name)?;
        let mut exp: u32 = 1;
        if self.peek().1 == Tok::Caret {
            self.bump();
            let (epos, n) = self.expect_positive_int("a positive integer exponent")?;
            exp = u32::try_from(&n).map_err(|_| {
                ParseError::syntax(epos, "an exponent that fits in 32 bits", format!("`{}`", n))
            })?;
        }
        exps.push((slot, exp));
        Ok(())
    }

    /// term := coeff ("*" factor)* | factor ("*" factor)*
    fn term(&mut self, sign_negative: bool) -> Result<(), ParseError> {
        let mut coeff = Rat::from_integer(BigInt::from(1));
        let mut exps: Vec<(usize, u32)> = Vec::new();
        match self.peek().1.clone() {
            Tok::Int(n) => {
                self.bump();
                if self.peek().1 == Tok::Slash {
                    self.bump();
                    let (_, d) = self.expect_positive_int("a positive integer denominator")?;
                    coeff = Rat::new(n, d);
                } else {
                    coeff = Rat::from_integer(n);
                }
            }
            Tok::Ident(_) => self.factor(&mut exps)?,
            _ => {
                let (pos, tok) = self.bump();
                return Err(ParseError::syntax(pos, "a coefficient or variable", tok));
            }
        }
        while self.peek().1 == Tok::Star {
            self.bump();
            self.factor(&mut exps)?;
        }
        // Anything other than +, -, or end of input here means two factors
        // were juxtaposed without `*`.
        match &self.peek().1 {
            Tok::Plus | Tok::Minus | Tok::End => {}
            _ => {
                let (pos, tok) = self.bump();
                return Err(ParseError::syntax(pos, "`*`, `+`, `-`, or end of input", tok));
            }
        }
        if sign_negative {
            coeff = -coeff;
        }
        self.terms.push((exps, coeff));
        Ok(())
    }

    fn poly(&mut self) -> Result<(), ParseError> {
        // Optional sign before the first term.
        let mut neg = false;
        match self.peek().1 {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                neg = true;
            }
            _ => {}
        }
        self.term(neg)?;
        loop {
            match self.bump() {
                (_, Tok::Plus) => self.term(false)?,
                (_, Tok::Minus) => self.term(true)?,
                (_, Tok::End) => return Ok(()),
                (pos, tok) => {
                    return Err(ParseError::syntax(pos, "`+`, `-`, or end of input", tok))
                }
            }
        }
    }
}

/// Parse `text` into a canonical [`Poly`].
///
/// With `variables: None` the variable list is inferred in order of first
/// appearance; with an explicit list, identifiers outside it are rejected.
pub fn parse_polynomial(text: &str, variables: Option<&[String]>) -> Result<Poly, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let t = lexer.next()?;
        let end = t.1 == Tok::End;
        toks.push(t);
        if end {
            break;
        }
    }

    let (var_names, open_vars) = match variables {
        Some(vs) => (vs.to_vec(), false),
        None => (Vec::new(), true),
    };
    let var_index = var_names
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();

    let mut parser = Parser {
        toks,
        idx: 0,
        var_index,
        var_names,
        open_vars,
        terms: Vec::new(),
    };
    parser.poly()?;

    let num_vars = parser.var_names.len();
    let terms = parser.terms.into_iter().map(|(sparse, coeff)| {
        let mut e = vec![0u32; num_vars];
        for (slot, exp) in sparse {
            e[slot] += exp;
        }
        (ExpVec(e), coeff)
    });
    Ok(Poly::from_terms(parser.var_names.clone(), terms.collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn reads_plain_sum_of_powers() {
        let p = parse_polynomial("x^3+y^4", None).unwrap();
        assert_eq!(p.variables(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.coeff(&ExpVec(vec![3, 0])), rat_int(1));
        assert_eq!(p.coeff(&ExpVec(vec![0, 4])), rat_int(1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn reads_acampo_polynomial() {
        let p = parse_polynomial("x^2*y^2+x^5+y^5", None).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&ExpVec(vec![2, 2])), rat_int(1));
    }

    #[test]
    fn cancelling_terms_give_zero() {
        let p = parse_polynomial("2*x - 2*x", None).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.variables(), &["x".to_string()]);
    }

    #[test]
    fn rational_coefficients_and_repeated_variables() {
        let p = parse_polynomial("1/4*u^3 + u*u", None).unwrap();
        assert_eq!(p.coeff(&ExpVec(vec![3])), rat(1, 4));
        assert_eq!(p.coeff(&ExpVec(vec![2])), rat_int(1));
    }

    #[test]
    fn leading_sign_is_accepted() {
        let p = parse_polynomial("-x^2+3", None).unwrap();
        assert_eq!(p.coeff(&ExpVec(vec![2])), rat_int(-1));
        assert_eq!(p.constant_term(), rat_int(3));
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(matches!(
            parse_polynomial("2x", None),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_polynomial("x y", None),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn negative_exponent_is_its_own_error() {
        assert!(matches!(
            parse_polynomial("x^-2", None),
            Err(ParseError::NegativeExponent { pos: 2 })
        ));
    }

    #[test]
    fn zero_exponent_is_a_syntax_error() {
        assert!(matches!(
            parse_polynomial("x^0", None),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn unknown_variable_with_explicit_list() {
        let vars: Vec<String> = vec!["x".into(), "y".into()];
        let err = parse_polynomial("x+z", Some(&vars)).unwrap_err();
        assert!(matches!(err, ParseError::UnknownVariable { ref name, .. } if name == "z"));
    }

    #[test]
    fn explicit_list_fixes_variable_order_and_arity() {
        let vars: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        let p = parse_polynomial("y^2", Some(&vars)).unwrap();
        assert_eq!(p.num_vars(), 3);
        assert_eq!(p.coeff(&ExpVec(vec![0, 2, 0])), rat_int(1));
    }

    #[test]
    fn zero_denominator_is_a_syntax_error() {
        assert!(matches!(
            parse_polynomial("1/0", None),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn print_parse_round_trip_on_examples() {
        for s in ["x^3+y^4", "x^2*y^2+x^5+y^5", "-x^2+3", "1/4*u^3+u^2", "0"] {
            let p = parse_polynomial(s, None).unwrap();
            let printed = p.to_string();
            let vars = p.variables().to_vec();
            let q = parse_polynomial(&printed, Some(&vars)).unwrap();
            assert_eq!(p, q, "round trip failed for {s} -> {printed}");
        }
    }
}
