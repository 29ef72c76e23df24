//! Set literals: `set := "{" [set ("," set)*] "}"`.
//!
//! The serializer writes no whitespace and emits members in canonical order.
//! The parser skips ASCII whitespace between tokens.

use std::fmt;

use thiserror::Error;

use super::HFSet;

/// Parse failure with a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: expected {expected}")]
pub struct ParseError {
    pub column: usize,
    pub expected: &'static str,
}

pub(super) fn write_set(x: HFSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str("{")?;
    for (i, m) in x.members().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write_set(m, f)?;
    }
    f.write_str("}")
}

pub fn serialize(x: HFSet) -> String {
    x.to_string()
}

/// Parses a set literal. Duplicate members collapse and member order is
/// irrelevant.
pub fn parse_set(text: &str) -> Result<HFSet, ParseError> {
    let (set, end) = parse_set_prefix(text)?;
    let rest = &text.as_bytes()[end..];
    match rest.iter().position(|b| !b.is_ascii_whitespace()) {
        None => Ok(set),
        Some(off) => Err(ParseError {
            column: column_of(text, end + off),
            expected: "end of input",
        }),
    }
}

/// Parses one set literal at the start of `text` (after optional whitespace)
/// and returns it with the byte offset just past the closing brace.
pub fn parse_set_prefix(text: &str) -> Result<(HFSet, usize), ParseError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    // open sets under construction; explicit stack so depth is unbounded
    let mut stack: Vec<Vec<HFSet>> = Vec::new();

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let err = |pos: usize, expected: &'static str| ParseError {
        column: column_of(text, pos),
        expected,
    };

    skip_ws(&mut pos);
    if bytes.get(pos) != Some(&b'{') {
        return Err(err(pos, "`{`"));
    }
    pos += 1;
    stack.push(Vec::new());

    let mut can_close = true;
    loop {
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b'{') => {
                pos += 1;
                stack.push(Vec::new());
                can_close = true;
                continue;
            }
            Some(b'}') if can_close => {}
            _ => return Err(err(pos, if can_close { "`{` or `}`" } else { "`{`" })),
        }
        // close sets until one is followed by `,`
        loop {
            debug_assert_eq!(bytes[pos], b'}');
            pos += 1;
            let done = HFSet::from_elements(stack.pop().unwrap());
            match stack.last_mut() {
                None => return Ok((done, pos)),
                Some(parent) => parent.push(done),
            }
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => {
                    pos += 1;
                    can_close = false;
                    break;
                }
                Some(b'}') => continue,
                _ => return Err(err(pos, "`,` or `}`")),
            }
        }
    }
}

fn column_of(text: &str, byte: usize) -> usize {
    let line_start = text[..byte.min(text.len())]
        .rfind('\n')
        .map_or(0, |i| i + 1);
    text[line_start..byte.min(text.len())].chars().count() + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::HFSet;

    #[test]
    fn bool_carrier_serializes_canonically() {
        let e = HFSet::empty();
        let b = HFSet::from_elements([HFSet::from_elements([e]), e]);
        assert_eq!(serialize(b), "{{},{{}}}");
    }

    #[test]
    fn parse_dedups() {
        let x = parse_set("{{},{}}").unwrap();
        assert_eq!(x, HFSet::from_elements([HFSet::empty()]));
        assert_eq!(parse_set(" { {} , { { } } } ").unwrap(), HFSet::numeral(2));
    }

    #[test]
    fn parse_errors_have_columns() {
        assert_eq!(parse_set("{,}").unwrap_err().column, 2);
        assert_eq!(parse_set("").unwrap_err().column, 1);
        assert_eq!(parse_set("{}}").unwrap_err().column, 3);
        assert_eq!(parse_set("{{}").unwrap_err().column, 4);
        assert_eq!(parse_set("{{},}").unwrap_err().column, 5);
        assert!(parse_set("{}{}").is_err());
        assert!(parse_set("x").is_err());
    }

    #[test]
    fn deep_nesting_does_not_recurse() {
        let depth = 50_000;
        let text = "{".repeat(depth) + &"}".repeat(depth);
        let x = parse_set(&text).unwrap();
        assert_eq!(x.len(), 1);
    }
}
