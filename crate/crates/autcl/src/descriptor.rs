//! Group descriptors: `Z:n`, `D:n`, `Q:m`, `EA:p,k` (alias `ZE:p,k`),
//! `heis:p` and `prod(A,B)`.

use std::fmt;

use autcl_core::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the descriptor.
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Parsed form of a descriptor, before any group is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    Cyclic(u64),
    Dihedral(u64),
    Dicyclic(u64),
    ElementaryAbelian(u64, u32),
    Heisenberg(u64),
    Product(Box<Descriptor>, Box<Descriptor>),
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Descriptor::Cyclic(n) => write!(f, "Z:{n}"),
            Descriptor::Dihedral(n) => write!(f, "D:{n}"),
            Descriptor::Dicyclic(m) => write!(f, "Q:{m}"),
            Descriptor::ElementaryAbelian(p, k) => write!(f, "EA:{p},{k}"),
            Descriptor::Heisenberg(p) => write!(f, "heis:{p}"),
            Descriptor::Product(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}

impl Descriptor {
    pub fn build(&self) -> autcl_core::Result<FiniteGroup> {
        match self {
            Descriptor::Cyclic(n) => FiniteGroup::cyclic(*n),
            Descriptor::Dihedral(n) => FiniteGroup::dihedral(*n),
            Descriptor::Dicyclic(m) => FiniteGroup::dicyclic(*m),
            Descriptor::ElementaryAbelian(p, k) => FiniteGroup::elementary_abelian(*p, *k),
            Descriptor::Heisenberg(p) => FiniteGroup::heisenberg(*p),
            Descriptor::Product(a, b) => FiniteGroup::direct_product(&a.build()?, &b.build()?),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{c}'"))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err(start, "expected a number");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse::<u64>() {
            Ok(0) => self.err(start, "must be positive"),
            Ok(v) => Ok(v),
            Err(_) => self.err(start, "number too large"),
        }
    }

    fn word(&mut self) -> (usize, &'a str) {
        self.skip_ws();
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_alphabetic).count();
        self.pos += len;
        (start, &self.src[start..self.pos])
    }

    fn descriptor(&mut self) -> Result<Descriptor, ParseError> {
        let (start, word) = self.word();
        match word {
            "prod" => {
                self.expect('(')?;
                let a = self.descriptor()?;
                self.expect(',')?;
                let b = self.descriptor()?;
                self.expect(')')?;
                Ok(Descriptor::Product(Box::new(a), Box::new(b)))
            }
            "Z" | "D" | "Q" | "heis" => {
                self.expect(':')?;
                let n = self.number()?;
                Ok(match word {
                    "Z" => Descriptor::Cyclic(n),
                    "D" => Descriptor::Dihedral(n),
                    "Q" => Descriptor::Dicyclic(n),
                    _ => Descriptor::Heisenberg(n),
                })
            }
            "EA" | "ZE" => {
                self.expect(':')?;
                let p = self.number()?;
                self.expect(',')?;
                let at = self.pos;
                let k = self.number()?;
                let k = u32::try_from(k).or_else(|_| self.err(at, "exponent too large"))?;
                Ok(Descriptor::ElementaryAbelian(p, k))
            }
            "" => self.err(start, "expected a group family"),
            other => self.err(start, format!("unknown group family '{other}'")),
        }
    }
}

pub fn parse(src: &str) -> Result<Descriptor, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let d = p.descriptor()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err(p.pos, "unexpected trailing input");
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_grammar() {
        assert_eq!(parse("Z:12").unwrap(), Descriptor::Cyclic(12));
        assert_eq!(parse("D:6").unwrap(), Descriptor::Dihedral(6));
        assert_eq!(parse("Q:3").unwrap(), Descriptor::Dicyclic(3));
        assert_eq!(parse("EA:2,3").unwrap(), Descriptor::ElementaryAbelian(2, 3));
        assert_eq!(parse("ZE:2,2").unwrap(), Descriptor::ElementaryAbelian(2, 2));
        assert_eq!(parse("heis:5").unwrap(), Descriptor::Heisenberg(5));
        let d = parse("prod(Z:4, prod(Z:2,D:3))").unwrap();
        assert_eq!(d.to_string(), "prod(Z:4,prod(Z:2,D:3))");
        assert_eq!(parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn reports_positions() {
        assert_eq!(parse("").unwrap_err().position, 0);
        assert_eq!(parse("X:3").unwrap_err().position, 0);
        assert_eq!(parse("Z3").unwrap_err().position, 1);
        assert_eq!(parse("Z:").unwrap_err().position, 2);
        assert_eq!(parse("Z:0").unwrap_err().position, 2);
        assert_eq!(parse("prod(Z:2 Z:3)").unwrap_err().position, 9);
        assert_eq!(parse("EA:2,").unwrap_err().position, 5);
        assert_eq!(parse("Z:4)").unwrap_err().position, 3);
    }

    #[test]
    fn builds_groups() {
        assert_eq!(parse("D:6").unwrap().build().unwrap().order(), 12);
        assert_eq!(parse("prod(Z:4,Z:2)").unwrap().build().unwrap().order(), 8);
        assert!(parse("heis:2").unwrap().build().is_err());
    }
}
