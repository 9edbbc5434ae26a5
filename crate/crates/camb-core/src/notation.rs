//! Text notation for signed permutations, signatures, and partitions.
//!
//! Permutations are space-separated `value sign` tokens, e.g.
//! `2- 7+ 5- 1- 3+ 4- 6+`. Partitions separate parts with `/`; inside a part
//! each digit is a value and a sign character applies to the whole run of
//! digits before it, e.g. `125-7+/34-/6+`. The partition notation therefore
//! covers `n <= 9`, which is all the sizes this workspace enumerates.

use crate::partition::{OrderedPartition, SignedOrderedPartition};
use crate::perm::SignedPermutation;
use crate::sign::{Sign, Signature};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

pub fn parse_signature(s: &str) -> Result<Signature, ParseError> {
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match Sign::from_char(c) {
            Some(sign) => out.push(sign),
            None => return err(i, format!("expected '-' or '+', found {c:?}")),
        }
    }
    Ok(out)
}

pub fn parse_signed_permutation(s: &str) -> Result<SignedPermutation, ParseError> {
    let mut word = Vec::new();
    let mut signs = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let mut value = 0usize;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            value = value * 10 + (bytes[i] - b'0') as usize;
            i += 1;
        }
        if i == start {
            return err(i, format!("expected a digit, found {:?}", bytes[i] as char));
        }
        let Some(sign) = bytes.get(i).and_then(|&b| Sign::from_char(b as char)) else {
            return err(i, "expected '-' or '+' after value");
        };
        i += 1;
        word.push(value);
        signs.push(sign);
    }
    match SignedPermutation::from_position_signs(word, signs) {
        Ok(p) => Ok(p),
        Err(e) => err(0, e.to_string()),
    }
}

pub fn parse_partition(s: &str) -> Result<OrderedPartition, ParseError> {
    let (parts, _) = parse_partition_body(s, false)?;
    match OrderedPartition::from_parts(&parts) {
        Ok(p) => Ok(p),
        Err(e) => err(0, e.to_string()),
    }
}

pub fn parse_signed_partition(s: &str) -> Result<SignedOrderedPartition, ParseError> {
    let (parts, signs) = parse_partition_body(s, true)?;
    let n: usize = parts.iter().map(|p| p.len()).sum();
    let mut vsign = vec![Sign::Neg; n];
    for (v, sign) in signs {
        if v == 0 || v > n {
            return err(0, format!("value {v} out of range"));
        }
        vsign[v - 1] = sign;
    }
    match SignedOrderedPartition::from_parts(&parts, vsign) {
        Ok(p) => Ok(p),
        Err(e) => err(0, e.to_string()),
    }
}

type PartitionBody = (Vec<Vec<usize>>, Vec<(usize, Sign)>);

fn parse_partition_body(s: &str, signed: bool) -> Result<PartitionBody, ParseError> {
    let mut parts = Vec::new();
    let mut signs = Vec::new();
    if s.is_empty() {
        return Ok((parts, signs));
    }
    let mut part = Vec::new();
    let mut run: Vec<usize> = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '0'..='9' => run.push(c as usize - '0' as usize),
            '-' | '+' => {
                if !signed {
                    return err(i, "unexpected sign in unsigned partition");
                }
                if run.is_empty() {
                    return err(i, "sign without preceding values");
                }
                let sign = Sign::from_char(c).expect("matched above");
                for &v in &run {
                    signs.push((v, sign));
                }
                part.append(&mut run);
            }
            '/' => {
                if signed && !run.is_empty() {
                    return err(i, "values without a sign before '/'");
                }
                part.append(&mut run);
                if part.is_empty() {
                    return err(i, "empty part");
                }
                parts.push(std::mem::take(&mut part));
            }
            _ => return err(i, format!("unexpected character {c:?}")),
        }
    }
    if signed && !run.is_empty() {
        return err(s.len(), "values without a sign at end of input");
    }
    part.append(&mut run);
    if part.is_empty() {
        return err(s.len(), "empty part");
    }
    parts.push(part);
    Ok((parts, signs))
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, &v) in self.word().iter().enumerate() {
            if p > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", v, self.sign_of_value(v).as_char())?;
        }
        Ok(())
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts().iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            for v in part {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SignedOrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.partition().parts().iter().enumerate() {
            if k > 0 {
                write!(f, "/")?;
            }
            let mut run_sign: Option<Sign> = None;
            for &v in part {
                let sign = self.sign_of_value(v);
                if run_sign.is_some_and(|s| s != sign) {
                    write!(f, "{}", run_sign.expect("checked").as_char())?;
                }
                write!(f, "{v}")?;
                run_sign = Some(sign);
            }
            if let Some(sign) = run_sign {
                write!(f, "{}", sign.as_char())?;
            }
        }
        Ok(())
    }
}
