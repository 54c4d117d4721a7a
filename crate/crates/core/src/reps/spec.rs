use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::roots::Weight;

/// A representation described by a constructor tree over highest weights.
///
/// Textual form (what [`FromStr`] accepts and [`Display`](fmt::Display)
/// prints):
///
/// ```text
/// trivial | standard | adjoint | hw(1,0,2)
/// sum(a, b, ...) | tensor(a, b, ...) | dual(a) | sym(k, a) | wedge(k, a)
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RepSpec {
    Trivial,
    Standard,
    Adjoint,
    Irreducible(Weight),
    DirectSum(Vec<RepSpec>),
    Tensor(Box<RepSpec>, Box<RepSpec>),
    Dual(Box<RepSpec>),
    SymmetricPower(u32, Box<RepSpec>),
    ExteriorPower(u32, Box<RepSpec>),
}

impl RepSpec {
    pub fn irreducible(coords: &[i64]) -> Self {
        RepSpec::Irreducible(Weight(coords.to_vec()))
    }

    pub fn tensor(a: RepSpec, b: RepSpec) -> Self {
        RepSpec::Tensor(Box::new(a), Box::new(b))
    }

    pub fn dual(a: RepSpec) -> Self {
        RepSpec::Dual(Box::new(a))
    }

    /// Every highest weight in the tree.
    pub fn highest_weights(&self) -> Vec<&Weight> {
        let mut out = Vec::new();
        self.visit(&mut |s| {
            if let RepSpec::Irreducible(w) = s {
                out.push(w);
            }
        });
        out
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a RepSpec)) {
        f(self);
        match self {
            RepSpec::DirectSum(parts) => parts.iter().for_each(|p| p.visit(f)),
            RepSpec::Tensor(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            RepSpec::Dual(a) | RepSpec::SymmetricPower(_, a) | RepSpec::ExteriorPower(_, a) => a.visit(f),
            _ => {}
        }
    }
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::Trivial => write!(f, "trivial"),
            RepSpec::Standard => write!(f, "standard"),
            RepSpec::Adjoint => write!(f, "adjoint"),
            RepSpec::Irreducible(w) => {
                let c: Vec<String> = w.0.iter().map(|x| x.to_string()).collect();
                write!(f, "hw({})", c.join(","))
            }
            RepSpec::DirectSum(parts) => {
                let p: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "sum({})", p.join(","))
            }
            RepSpec::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            RepSpec::Dual(a) => write!(f, "dual({a})"),
            RepSpec::SymmetricPower(k, a) => write!(f, "sym({k},{a})"),
            RepSpec::ExteriorPower(k, a) => write!(f, "wedge({k},{a})"),
        }
    }
}

impl FromStr for RepSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let spec = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::parse(p.pos, "unexpected trailing input"));
        }
        Ok(spec)
    }
}

impl Serialize for RepSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RepSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(Error::parse(self.pos, format!("expected '{}', found '{}'", c as char, x as char))),
            None => Err(Error::parse(self.pos, format!("expected '{}', found end of input", c as char))),
        }
    }

    fn ident(&mut self) -> Result<(usize, String)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a representation name"));
        }
        Ok((start, String::from_utf8_lossy(&self.src[start..self.pos]).to_ascii_lowercase()))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(start, "expected an integer"))
    }

    fn power(&mut self) -> Result<u32> {
        let at = self.pos;
        let k = self.integer()?;
        u32::try_from(k).map_err(|_| Error::parse(at, "power must be a nonnegative integer"))
    }

    fn args(&mut self) -> Result<Vec<RepSpec>> {
        let mut out = vec![self.expr()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<RepSpec> {
        let (at, name) = self.ident()?;
        let spec = match name.as_str() {
            "trivial" | "triv" => RepSpec::Trivial,
            "standard" | "std" => RepSpec::Standard,
            "adjoint" | "adj" => RepSpec::Adjoint,
            "hw" => {
                self.expect(b'(')?;
                let mut coords = vec![self.integer()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    coords.push(self.integer()?);
                }
                self.expect(b')')?;
                return Ok(RepSpec::Irreducible(Weight(coords)));
            }
            "sum" => {
                self.expect(b'(')?;
                let parts = self.args()?;
                self.expect(b')')?;
                return Ok(RepSpec::DirectSum(parts));
            }
            "tensor" => {
                self.expect(b'(')?;
                let parts = self.args()?;
                self.expect(b')')?;
                let mut iter = parts.into_iter();
                let first = iter.next().expect("at least one argument");
                return Ok(iter.fold(first, RepSpec::tensor));
            }
            "dual" => {
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                return Ok(RepSpec::dual(inner));
            }
            "sym" | "wedge" => {
                self.expect(b'(')?;
                let k = self.power()?;
                self.expect(b',')?;
                let inner = Box::new(self.expr()?);
                self.expect(b')')?;
                return Ok(if name == "sym" {
                    RepSpec::SymmetricPower(k, inner)
                } else {
                    RepSpec::ExteriorPower(k, inner)
                });
            }
            other => return Err(Error::parse(at, format!("unknown representation '{other}'"))),
        };
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_constructors() {
        let s: RepSpec = "tensor(standard, dual(std))".parse().unwrap();
        assert_eq!(s, RepSpec::tensor(RepSpec::Standard, RepSpec::dual(RepSpec::Standard)));
        let s: RepSpec = "sum(hw(1,0), wedge(2, standard), sym(3,trivial))".parse().unwrap();
        assert_eq!(s.to_string(), "sum(hw(1,0),wedge(2,standard),sym(3,trivial))");
        let s: RepSpec = "tensor(adj,adj,adj)".parse().unwrap();
        assert_eq!(s.to_string(), "tensor(tensor(adjoint,adjoint),adjoint)");
    }

    #[test]
    fn errors_carry_positions() {
        let e = "tensor(standard,".parse::<RepSpec>().unwrap_err();
        assert_eq!(e, Error::parse(16, "expected a representation name"));
        let e = "dual(foo)".parse::<RepSpec>().unwrap_err();
        assert_eq!(e, Error::parse(5, "unknown representation 'foo'"));
        let e = "hw(1,x)".parse::<RepSpec>().unwrap_err();
        assert_eq!(e, Error::parse(5, "expected an integer"));
        let e = "standard)".parse::<RepSpec>().unwrap_err();
        assert_eq!(e, Error::parse(8, "unexpected trailing input"));
        let e = "sym(-1, standard)".parse::<RepSpec>().unwrap_err();
        assert!(e.is_parse());
    }

    fn arb_spec() -> impl Strategy<Value = RepSpec> {
        let leaf = prop_oneof![
            Just(RepSpec::Trivial),
            Just(RepSpec::Standard),
            Just(RepSpec::Adjoint),
            proptest::collection::vec(-3i64..4, 1..4).prop_map(|v| RepSpec::Irreducible(Weight(v))),
        ];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                proptest::collection::vec(inner.clone(), 1..4).prop_map(RepSpec::DirectSum),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| RepSpec::tensor(a, b)),
                inner.clone().prop_map(RepSpec::dual),
                (0u32..4, inner.clone()).prop_map(|(k, a)| RepSpec::SymmetricPower(k, Box::new(a))),
                (0u32..4, inner).prop_map(|(k, a)| RepSpec::ExteriorPower(k, Box::new(a))),
            ]
        })
    }

    proptest! {
        #[test]
        fn display_parses_back(spec in arb_spec()) {
            let text = spec.to_string();
            prop_assert_eq!(text.parse::<RepSpec>().unwrap(), spec);
        }
    }
}
