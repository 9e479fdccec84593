//! Point files: one vector per line, entries separated by whitespace or commas,
//! optionally wrapped in parentheses. `#` starts a comment.

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

fn rows(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("").trim();
            let content = content.trim_start_matches('(').trim_end_matches(')');
            let tokens: Vec<&str> = content
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

fn check_lengths<T>(parsed: &[(usize, Vec<T>)]) -> Result<()> {
    if parsed.is_empty() {
        return Err(Error::parse(1, "no points"));
    }
    let dim = parsed[0].1.len();
    for (line, v) in parsed {
        if v.len() != dim {
            return Err(Error::parse(*line, format!("expected {dim} entries, found {}", v.len())));
        }
    }
    Ok(())
}

/// Rational vectors of equal length.
pub fn parse_points(text: &str) -> Result<Vec<Vec<Rational>>> {
    let parsed = rows(text)
        .into_iter()
        .map(|(line, tokens)| {
            let v = tokens
                .iter()
                .map(|t| parse_rational(t).ok_or_else(|| Error::parse(line, format!("invalid number `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            Ok((line, v))
        })
        .collect::<Result<Vec<_>>>()?;
    check_lengths(&parsed)?;
    Ok(parsed.into_iter().map(|(_, v)| v).collect())
}

/// Nonnegative integer vectors of equal length, e.g. counting vectors.
pub fn parse_count_vectors(text: &str) -> Result<Vec<Vec<u64>>> {
    let parsed = rows(text)
        .into_iter()
        .map(|(line, tokens)| {
            let v = tokens
                .iter()
                .map(|t| {
                    t.parse::<u64>()
                        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, found `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((line, v))
        })
        .collect::<Result<Vec<_>>>()?;
    check_lengths(&parsed)?;
    Ok(parsed.into_iter().map(|(_, v)| v).collect())
}

/// A single comma-separated rational vector such as `1/3,1/3,1/3`.
pub fn parse_vector(text: &str) -> Result<Vec<Rational>> {
    let mut v = parse_points(text)?;
    if v.len() != 1 {
        return Err(Error::parse(1, "expected a single vector"));
    }
    Ok(v.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{from_int, from_ratio};

    #[test]
    fn accepts_several_layouts() {
        let text = "# points\n(4,1)\n5 0\n2, 2 # last\n\n";
        let pts = parse_points(text).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0], vec![from_int(4), from_int(1)]);
        assert_eq!(parse_vector("1/3,0.5").unwrap(), vec![from_ratio(1, 3), from_ratio(1, 2)]);
        assert_eq!(parse_count_vectors("1 0 1\n2 1 0").unwrap(), vec![vec![1, 0, 1], vec![2, 1, 0]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_points("1 2\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_count_vectors("1 -2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_points("# nothing\n").is_err());
        assert!(parse_vector("1 2\n3 4\n").is_err());
    }
}
