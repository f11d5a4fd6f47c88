//! Parser and evaluator for symmetric-function expressions.
//!
//! Grammar (whitespace is insignificant; `*` binds tighter than `+`):
//!
//! ```text
//! expr      := term ('+' term)*
//! term      := atom ('*' atom)*
//! atom      := generator | INT | '(' expr ')'
//! generator := ('h' | 'e' | 'p') '[' UINT ']' | 's' '[' partition ']'
//! partition := UINT (',' UINT)* | '0' | ''
//! ```
//!
//! Every expression evaluates to a [`SchurPolynomial`]: `h[k]` is s_(k),
//! `e[k]` is s_(1^k), `p[k]` expands into hook Schur functions with signs,
//! and a bare integer acts as a scalar. `h[0]`, `e[0]`, `s[0]`, and `s[]`
//! all denote the unit; `p[0]` is rejected.

use num_bigint::BigInt;

use odun_core::partition::Partition;
use odun_core::power::{p_single, power_to_schur};
use odun_core::schur::{multiply, SchurPolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Plus,
    Star,
    LParen,
    RParen,
    /// Generator letter plus the raw text between its brackets.
    Gen(char, String),
    Int(BigInt),
}

/// Tokenize, recording the byte position of each token for error messages.
fn tokenize(src: &str) -> Result<Vec<(Token, usize)>, String> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                tokens.push((Token::Plus, i));
                i += 1;
            }
            '*' => {
                tokens.push((Token::Star, i));
                i += 1;
            }
            '(' => {
                tokens.push((Token::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Token::RParen, i));
                i += 1;
            }
            'h' | 'e' | 'p' | 's' => {
                let start = i;
                i += 1;
                if i >= bytes.len() || bytes[i] as char != '[' {
                    return Err(format!("expected '[' after '{c}' at position {start}"));
                }
                i += 1;
                let payload_start = i;
                while i < bytes.len() && bytes[i] as char != ']' {
                    i += 1;
                }
                if i >= bytes.len() {
                    return Err(format!("unclosed '[' in '{c}[...]' at position {start}"));
                }
                let payload = src[payload_start..i].to_string();
                tokens.push((Token::Gen(c, payload), start));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let value: BigInt = src[start..i].parse().expect("digit run");
                tokens.push((Token::Int(value), start));
            }
            _ => return Err(format!("unexpected character {c:?} at position {i}")),
        }
    }
    Ok(tokens)
}

struct ExprParser<'a> {
    tokens: &'a [(Token, usize)],
    pos: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn expr(&mut self) -> Result<SchurPolynomial, String> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            acc = &acc + &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SchurPolynomial, String> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = multiply(&acc, &self.atom()?);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<SchurPolynomial, String> {
        let Some((token, at)) = self.tokens.get(self.pos) else {
            return Err("unexpected end of expression".into());
        };
        let at = *at;
        match token {
            Token::Int(v) => {
                self.pos += 1;
                Ok(SchurPolynomial::one().scale(v))
            }
            Token::Gen(kind, payload) => {
                self.pos += 1;
                generator(*kind, payload).map_err(|e| format!("{e} at position {at}"))
            }
            Token::LParen => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(format!("unclosed '(' at position {at}"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Token::Plus | Token::Star | Token::RParen => Err(format!(
                "expected a generator, integer, or '(' at position {at}"
            )),
        }
    }
}

fn generator(kind: char, payload: &str) -> Result<SchurPolynomial, String> {
    if kind == 's' {
        let lam: Partition = payload
            .parse()
            .map_err(|e| format!("in s[{payload}]: {e}"))?;
        return Ok(SchurPolynomial::single(lam));
    }
    let k: u32 = payload
        .trim()
        .parse()
        .map_err(|_| format!("'{kind}[{payload}]' needs a nonnegative integer index"))?;
    match (kind, k) {
        ('p', 0) => Err("p[0] is not defined".into()),
        (_, 0) => Ok(SchurPolynomial::one()),
        ('h', _) => Ok(SchurPolynomial::single(Partition::new(vec![k]))),
        ('e', _) => Ok(SchurPolynomial::single(Partition::column(k))),
        ('p', _) => Ok(power_to_schur(&p_single(k))),
        _ => unreachable!("tokenizer only emits h, e, p, s"),
    }
}

/// Evaluate an expression to its Schur-basis expansion.
pub fn eval(src: &str) -> Result<SchurPolynomial, String> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err("empty expression".into());
    }
    let mut parser = ExprParser {
        tokens: &tokens,
        pos: 0,
    };
    let result = parser.expr()?;
    if parser.pos < tokens.len() {
        let (_, at) = tokens[parser.pos];
        return Err(format!("unexpected trailing input at position {at}"));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn s(parts: &[u32]) -> SchurPolynomial {
        SchurPolynomial::single(Partition::new(parts.to_vec()))
    }

    #[test]
    fn generators_evaluate() {
        assert_eq!(eval("h[3]").unwrap(), s(&[3]));
        assert_eq!(eval("e[3]").unwrap(), s(&[1, 1, 1]));
        assert_eq!(eval("s[4,2,1]").unwrap(), s(&[4, 2, 1]));
        assert_eq!(eval("h[0]").unwrap(), SchurPolynomial::one());
        assert_eq!(eval("e[0]").unwrap(), SchurPolynomial::one());
        assert_eq!(eval("s[0]").unwrap(), SchurPolynomial::one());
        assert_eq!(eval("s[]").unwrap(), SchurPolynomial::one());
    }

    #[test]
    fn p3_expands_into_signed_hooks() {
        let p3 = eval("p[3]").unwrap();
        assert_eq!(&p3, &(&(&s(&[3]) - &s(&[2, 1])) + &s(&[1, 1, 1])));
    }

    #[test]
    fn star_binds_tighter_than_plus() {
        let direct = eval("s[1]*s[1]+s[2]").unwrap();
        let expected = &multiply(&s(&[1]), &s(&[1])) + &s(&[2]);
        assert_eq!(direct, expected);
        assert!(direct.coeff(&Partition::new(vec![2])).eq(&BigInt::from(2)));
    }

    #[test]
    fn parentheses_group() {
        let grouped = eval("s[1]*(s[1]+s[2])").unwrap();
        let expected = &multiply(&s(&[1]), &s(&[1])) + &multiply(&s(&[1]), &s(&[2]));
        assert_eq!(grouped, expected);
    }

    #[test]
    fn integer_scalars() {
        let f = eval("2*s[2,1]+s[2,1]").unwrap();
        assert_eq!(f.coeff(&Partition::new(vec![2, 1])), BigInt::from(3));
        assert!(eval("1").unwrap().coeff(&Partition::empty()).is_one());
    }

    #[test]
    fn whitespace_is_insignificant() {
        assert_eq!(
            eval(" h[1] * h[2] ").unwrap(),
            eval("h[1]*h[2]").unwrap()
        );
    }

    #[test]
    fn errors_are_reported() {
        assert!(eval("").is_err());
        assert!(eval("h[").is_err());
        assert!(eval("h2]").is_err());
        assert!(eval("q[2]").is_err());
        assert!(eval("p[0]").is_err());
        assert!(eval("s[1,0]").is_err());
        assert!(eval("h[1]+").is_err());
        assert!(eval("h[1] h[2]").is_err());
        assert!(eval("(h[1]").is_err());
        assert!(eval("h[x]").is_err());
    }
}
