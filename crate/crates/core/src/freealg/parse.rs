//! Text syntax for polynomials.
//!
//! `expr := ['+'|'-'] term (('+'|'-') term)*`, a term is an optional rational
//! coefficient followed by juxtaposed factors (concatenation). Factors are
//! words, parenthesized expressions, or brackets: `[u v]` / `[u,v]` is the Lie
//! bracket of two atoms, and `[w]` for a plain word is its Lyndon bracket.

use super::lyndon::lyndon_bracket;
use super::series::Series;
use super::word::{Alphabet, Word};
use crate::q::Q;

#[derive(Debug, thiserror::Error)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

struct P<'a> {
    s: &'a [u8],
    i: usize,
    alpha: Alphabet,
}

impl<'a> P<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError { pos: self.i, msg: msg.to_string() })
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && (self.s[self.i] as char).is_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s.get(self.i).map(|&c| c as char)
    }

    fn is_letter(&self, c: char) -> bool {
        self.alpha.letter_of(c).is_some()
    }

    fn expr(&mut self) -> Result<Series, ParseError> {
        let mut out = Series::zero(self.alpha);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.i += 1;
                    Q::one()
                }
                Some('-') => {
                    self.i += 1;
                    Q::int(-1)
                }
                _ if first => Q::one(),
                _ => break,
            };
            first = false;
            let t = self.term()?;
            out.add_scaled(&t, &sign);
        }
        Ok(out)
    }

    fn number(&mut self) -> Result<Option<Q>, ParseError> {
        self.ws();
        let start = self.i;
        while self.i < self.s.len() && (self.s[self.i].is_ascii_digit() || self.s[self.i] == b'/') {
            self.i += 1;
        }
        if start == self.i {
            return Ok(None);
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).unwrap();
        match txt.parse::<Q>() {
            Ok(q) => Ok(Some(q)),
            Err(_) => self.err("bad number"),
        }
    }

    fn term(&mut self) -> Result<Series, ParseError> {
        let c = self.number()?;
        if self.peek() == Some('*') {
            self.i += 1;
        }
        let mut acc: Option<Series> = None;
        while let Some(ch) = self.peek() {
            let f = if ch == '[' {
                self.bracket()?
            } else if ch == '(' {
                self.i += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected )");
                }
                self.i += 1;
                e
            } else if self.is_letter(ch) {
                Series::word(self.alpha, self.word()?)
            } else if ch == '1' && acc.is_none() && c.is_none() {
                self.i += 1;
                Series::one(self.alpha)
            } else {
                break;
            };
            acc = Some(match acc {
                None => f,
                Some(a) => &a * &f,
            });
        }
        match (c, acc) {
            (None, None) => self.err("expected a term"),
            (Some(q), None) => Ok(Series::term(self.alpha, Word::EMPTY, q)),
            (None, Some(a)) => Ok(a),
            (Some(q), Some(a)) => Ok(a.scale(&q)),
        }
    }

    fn word(&mut self) -> Result<Word, ParseError> {
        let mut ls = Vec::new();
        while let Some(&c) = self.s.get(self.i) {
            match self.alpha.letter_of(c as char) {
                Some(l) => {
                    ls.push(l);
                    self.i += 1;
                }
                None => break,
            }
        }
        Ok(Word::from_letters(&ls))
    }

    fn bracket(&mut self) -> Result<Series, ParseError> {
        self.i += 1;
        let mut atoms: Vec<Series> = Vec::new();
        let mut letters: Vec<u8> = Vec::new();
        let mut only_letters = true;
        loop {
            match self.peek() {
                Some(']') => {
                    self.i += 1;
                    break;
                }
                Some(',') => {
                    self.i += 1;
                    only_letters = false;
                }
                Some('[') => {
                    atoms.push(self.bracket()?);
                    only_letters = false;
                }
                Some(c) if self.is_letter(c) => {
                    let l = self.alpha.letter_of(c).unwrap();
                    self.i += 1;
                    letters.push(l);
                    atoms.push(Series::letter(self.alpha, l));
                }
                _ => return self.err("unexpected character in bracket"),
            }
        }
        if only_letters && letters.len() != 2 {
            let w = Word::from_letters(&letters);
            return match lyndon_bracket(w) {
                Ok(s) => Ok(s.with_alphabet(self.alpha)),
                Err(_) => self.err("bracketed word is not Lyndon"),
            };
        }
        if atoms.len() != 2 {
            return self.err("a bracket needs exactly two arguments");
        }
        Ok(atoms[0].bracket(&atoms[1]))
    }
}

pub fn parse_series(text: &str, alpha: Alphabet) -> Result<Series, ParseError> {
    let mut p = P { s: text.as_bytes(), i: 0, alpha };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets_and_words() {
        let a = parse_series("[x[xy]]+[[xy]y]", Alphabet::XY).unwrap();
        let b = parse_series("[xxy] + [xyy]", Alphabet::XY).unwrap();
        assert_eq!(a, b);
        let c = parse_series("5/4(xyxy-xyyx) - 2 x", Alphabet::XY).unwrap();
        assert_eq!(c.len(), 3);
        let d = parse_series("[x, y]", Alphabet::XY).unwrap();
        assert_eq!(d, parse_series("xy - yx", Alphabet::XY).unwrap());
        assert!(parse_series("[yx y]", Alphabet::XY).is_err());
    }
}
