//! Group expressions: `C<n>`, `D<n>`, `Q8`, `S<n>`, `A<n>`, `file(<path>)`,
//! joined by the left-associative direct product `x`. Parentheses group.

use crate::error::{Error, Result};
use crate::group::{
    direct_product, load_table, make_alternating, make_cyclic, make_dihedral, make_quaternion8,
    make_symmetric, FiniteGroup,
};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    /// `D<n>`, of order `2n`
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    File(String),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Dihedral(n) => write!(f, "D{n}"),
            GroupExpr::Quaternion8 => write!(f, "Q8"),
            GroupExpr::Symmetric(n) => write!(f, "S{n}"),
            GroupExpr::Alternating(n) => write!(f, "A{n}"),
            GroupExpr::File(p) => write!(f, "file({p})"),
            GroupExpr::Product(l, r) => match **r {
                GroupExpr::Product(..) => write!(f, "{l}x({r})"),
                _ => write!(f, "{l}x{r}"),
            },
        }
    }
}

impl GroupExpr {
    /// Builds the group; products are named after the expression.
    pub fn build(&self) -> Result<FiniteGroup> {
        Ok(match self {
            GroupExpr::Cyclic(n) => make_cyclic(*n)?,
            GroupExpr::Dihedral(n) => make_dihedral(*n)?,
            GroupExpr::Quaternion8 => make_quaternion8()?,
            GroupExpr::Symmetric(n) => make_symmetric(*n)?,
            GroupExpr::Alternating(n) => make_alternating(*n)?,
            GroupExpr::File(p) => load_table(p)?,
            GroupExpr::Product(l, r) => direct_product(&l.build()?, &r.build()?)?.with_name(self.to_string()),
        })
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn product(&mut self) -> Result<GroupExpr> {
        let mut left = self.factor()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.factor()?;
            left = GroupExpr::Product(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, "expected a number");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| err(start, "number out of range"))
    }

    fn factor(&mut self) -> Result<GroupExpr> {
        let at = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.product()?;
                if self.peek() != Some(b')') {
                    return err(self.pos, "expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'C') => {
                self.pos += 1;
                Ok(GroupExpr::Cyclic(self.number()?))
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(GroupExpr::Dihedral(self.number()?))
            }
            Some(b'S') => {
                self.pos += 1;
                Ok(GroupExpr::Symmetric(self.number()?))
            }
            Some(b'A') => {
                self.pos += 1;
                Ok(GroupExpr::Alternating(self.number()?))
            }
            Some(b'Q') => {
                let start = self.pos;
                self.pos += 1;
                match self.number()? {
                    8 => Ok(GroupExpr::Quaternion8),
                    n => err(start, format!("unsupported atom Q{n}: only Q8 is available")),
                }
            }
            Some(b'f') if self.src[self.pos..].starts_with(b"file(") => {
                self.pos += 5;
                let start = self.pos;
                let Some(len) = self.src[start..].iter().position(|&c| c == b')') else {
                    return err(self.src.len(), "expected ')' closing file(");
                };
                self.pos = start + len + 1;
                let path = String::from_utf8_lossy(&self.src[start..start + len]).into_owned();
                if path.is_empty() {
                    return err(start, "empty path in file()");
                }
                Ok(GroupExpr::File(path))
            }
            Some(c) => err(self.pos, format!("unexpected '{}', expected one of C D Q8 S A file( (", c as char)),
            None => err(at.max(self.pos), "unexpected end of input, expected a group atom"),
        }
    }
}

/// Parses a group expression; `C4xC2` is `C_4 × C_2`.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let e = p.product()?;
    if let Some(c) = p.peek() {
        return err(p.pos, format!("unexpected '{}' after expression, expected 'x'", c as char));
    }
    Ok(e)
}

/// Parses and builds in one go.
pub fn group_from_expr(text: &str) -> Result<FiniteGroup> {
    parse_group_expr(text)?.build()
}
