//! Text grammar for polynomial germs.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := number | 'x' K ('^' E)?        K, E >= 1
//! number := digits ('/' digits)?
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{Monomial, Polynomial};
use super::GermError;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> GermError {
        GermError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self, what: &str) -> Result<&'a str, GermError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small(&mut self, what: &str) -> Result<u32, GermError> {
        let start = self.pos;
        let text = self.digits(what)?;
        let value: u32 = text.parse().map_err(|_| GermError::Syntax {
            offset: start,
            message: format!("{what} out of range"),
        })?;
        if value == 0 {
            return Err(GermError::Syntax {
                offset: start,
                message: format!("{what} must be at least 1"),
            });
        }
        Ok(value)
    }
}

/// One parsed term: coefficient and sparse `(variable index, exponent)` list.
type RawTerm = (BigRational, Vec<(usize, u32)>);

fn parse_term(cur: &mut Cursor<'_>) -> Result<RawTerm, GermError> {
    let mut coeff = BigRational::one();
    let mut powers = Vec::new();
    loop {
        match cur.peek() {
            Some(b'x') => {
                cur.pos += 1;
                let index = cur.small("variable index")? as usize;
                let exp = if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    cur.small("exponent")?
                } else {
                    1
                };
                powers.push((index - 1, exp));
            }
            Some(c) if c.is_ascii_digit() => {
                let numer: BigInt = cur.digits("number")?.parse().expect("digits");
                let denom: BigInt = if cur.peek() == Some(b'/') {
                    cur.pos += 1;
                    cur.skip_ws();
                    let at = cur.pos;
                    let d: BigInt = cur.digits("denominator")?.parse().expect("digits");
                    if d.is_zero() {
                        return Err(GermError::Syntax {
                            offset: at,
                            message: "zero denominator".into(),
                        });
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff *= BigRational::new(numer, denom);
            }
            Some(_) => return Err(cur.error("expected a number or a variable xK")),
            None => return Err(cur.error("unexpected end of input")),
        }
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            return Ok((coeff, powers));
        }
    }
}

/// Parses the grammar into a polynomial. The number of variables is the
/// largest index used, raised to `dim` when given.
pub fn parse_polynomial(text: &str, dim: Option<usize>) -> Result<Polynomial, GermError> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut raw = Vec::new();
    let mut negative = false;
    match cur.peek() {
        Some(b'-') => {
            negative = true;
            cur.pos += 1;
        }
        Some(b'+') => cur.pos += 1,
        _ => {}
    }
    loop {
        let (c, powers) = parse_term(&mut cur)?;
        raw.push((if negative { -c } else { c }, powers));
        match cur.peek() {
            None => break,
            Some(b'+') => negative = false,
            Some(b'-') => negative = true,
            Some(_) => return Err(cur.error("expected '+', '-' or '*'")),
        }
        cur.pos += 1;
    }

    let used = raw
        .iter()
        .flat_map(|(_, p)| p.iter().map(|(i, _)| i + 1))
        .max()
        .unwrap_or(0);
    let nvars = match dim {
        Some(d) if d < used => {
            return Err(GermError::DimensionTooSmall { dim: d, used });
        }
        Some(d) => d,
        None => used,
    }
    .max(1);
    let terms = raw.into_iter().map(|(c, powers)| {
        let mut m: Monomial = vec![0; nvars];
        for (i, e) in powers {
            m[i] += e;
        }
        (m, c)
    });
    Ok(Polynomial::from_terms(nvars, terms))
}
