//! Parser for polynomials in algebraic normal form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := '0' | '1' | factor ('*' factor)*
//! factor := 'x' positive-integer
//! ```

use crate::error::{Error, Result};

/// A monomial as a bit mask over variables; bit `j` stands for `x_{j+1}`.
/// The empty mask is the constant 1.
type Monomial = u64;

/// Parsed polynomial: the list of monomials, with repeated monomials cancelled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anf {
    arity: usize,
    monomials: Vec<Monomial>,
}

impl Anf {
    pub fn parse(text: &str, arity: usize) -> Result<Self> {
        if arity == 0 || arity > 20 {
            return Err(Error::UnsupportedArity {
                arity,
                reason: "ANF input supports 1..=20 variables",
            });
        }
        let mut p = Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            end: text.len(),
            arity,
        };
        let mut monomials: Vec<Monomial> = Vec::new();
        loop {
            if let Some(m) = p.term()? {
                // x + x = 0 over F_2
                if let Some(i) = monomials.iter().position(|&q| q == m) {
                    monomials.swap_remove(i);
                } else {
                    monomials.push(m);
                }
            }
            match p.peek() {
                None => break,
                Some((_, '+')) => p.bump(),
                Some((i, c)) => {
                    return Err(Error::Parse {
                        position: i,
                        message: format!("expected '+' or end of input, found {c:?}"),
                    })
                }
            }
        }
        monomials.sort_unstable();
        Ok(Anf { arity, monomials })
    }

    /// Evaluates at the input encoded by `index`, where `x_1` is the most
    /// significant of `arity` bits.
    pub fn eval(&self, index: usize) -> u8 {
        let mut mask: Monomial = 0;
        for j in 0..self.arity {
            if (index >> (self.arity - 1 - j)) & 1 == 1 {
                mask |= 1 << j;
            }
        }
        let ones = self.monomials.iter().filter(|&&m| m & mask == m).count();
        (ones & 1) as u8
    }

    pub fn truth_table(&self) -> Vec<u8> {
        (0..1usize << self.arity).map(|i| self.eval(i)).collect()
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
    arity: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn here(&mut self) -> usize {
        self.peek().map(|(i, _)| i).unwrap_or(self.end)
    }

    /// Returns `None` for the constant 0.
    fn term(&mut self) -> Result<Option<Monomial>> {
        match self.peek() {
            Some((_, '0')) => {
                self.bump();
                Ok(None)
            }
            Some((_, '1')) => {
                self.bump();
                Ok(Some(0))
            }
            _ => {
                let mut m = self.factor()?;
                while let Some((_, '*')) = self.peek() {
                    self.bump();
                    m |= self.factor()?;
                }
                Ok(Some(m))
            }
        }
    }

    fn factor(&mut self) -> Result<Monomial> {
        let start = self.here();
        match self.peek() {
            Some((_, 'x')) => self.bump(),
            Some((i, c)) => {
                return Err(Error::Parse {
                    position: i,
                    message: format!("expected a variable 'x<k>', found {c:?}"),
                })
            }
            None => {
                return Err(Error::Parse {
                    position: self.end,
                    message: "unexpected end of input, expected a term".into(),
                })
            }
        }
        // digits must follow 'x' directly
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        let index: usize = digits.parse().map_err(|_| Error::Parse {
            position: start + 1,
            message: "expected a variable index after 'x'".into(),
        })?;
        if index == 0 || index > self.arity {
            return Err(Error::VariableOutOfRange {
                index,
                arity: self.arity,
            });
        }
        Ok(1 << (index - 1))
    }
}
