//! Parsers for shapes, contents and tableaux given on the command line or in
//! files.

use tabinv_core::{Content, Filling, Shape};

fn number(tok: &str, what: &str) -> Result<usize, String> {
    tok.trim().parse::<usize>().map_err(|_| format!("bad {what} token {:?}", tok.trim()))
}

/// `"4,4,3,2"`, `"2^3"` or a mix such as `"3,2^2,1"`.
pub fn parse_shape(s: &str) -> Result<Shape, String> {
    let mut parts = Vec::new();
    for tok in s.split(',') {
        match tok.split_once('^') {
            Some((part, times)) => {
                let part = number(part, "shape")?;
                let times = number(times, "shape")?;
                parts.extend(std::iter::repeat_n(part, times));
            }
            None => parts.push(number(tok, "shape")?),
        }
    }
    Shape::new(parts).map_err(|e| e.to_string())
}

/// Content as given by the user; `standard` is resolved once the size is known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContentArg {
    Standard,
    Given(Content),
}

impl ContentArg {
    pub fn resolve(&self, shape: &Shape) -> Result<Content, String> {
        let mu = match self {
            ContentArg::Standard => Content::standard(shape.size()),
            ContentArg::Given(mu) => mu.clone(),
        };
        mu.check_against(shape).map_err(|e| e.to_string())?;
        Ok(mu)
    }
}

/// `"standard"` or value^multiplicity tokens such as `"1^2,2^2,3"`. Every
/// value from 1 to the largest must appear exactly once.
pub fn parse_content(s: &str) -> Result<ContentArg, String> {
    if s.trim().eq_ignore_ascii_case("standard") {
        return Ok(ContentArg::Standard);
    }
    let mut counts: Vec<usize> = Vec::new();
    for tok in s.split(',') {
        let (value, mult) = match tok.split_once('^') {
            Some((v, m)) => (number(v, "content")?, number(m, "content")?),
            None => (number(tok, "content")?, 1),
        };
        if value == 0 || mult == 0 {
            return Err(format!("bad content token {:?}", tok.trim()));
        }
        if counts.len() < value {
            counts.resize(value, 0);
        }
        if counts[value - 1] != 0 {
            return Err(format!("value {value} given twice in content"));
        }
        counts[value - 1] = mult;
    }
    if let Some(missing) = counts.iter().position(|&c| c == 0) {
        return Err(format!("content skips value {}", missing + 1));
    }
    Content::new(counts).map(ContentArg::Given).map_err(|e| e.to_string())
}

fn parse_row(line: &str) -> Result<Vec<u32>, String> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| format!("bad tableau entry {t:?}")))
        .collect()
}

fn filling(rows: Vec<Vec<u32>>) -> Result<Filling, String> {
    if rows.is_empty() {
        return Err("empty tableau".into());
    }
    Filling::from_rows(rows).map_err(|e| e.to_string())
}

/// Inline tableau: rows separated by `/`, entries by commas or spaces.
pub fn parse_tableau(s: &str) -> Result<Filling, String> {
    filling(s.split('/').map(parse_row).collect::<Result<_, _>>()?)
}

/// Tableau file: one row per line; blank lines and `#` comments are skipped.
pub fn parse_tableau_file(text: &str) -> Result<Filling, String> {
    let rows = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(parse_row)
        .collect::<Result<_, _>>()?;
    filling(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(parse_shape("4,4,3,2").unwrap().parts(), [4, 4, 3, 2]);
        assert_eq!(parse_shape("2^3").unwrap().parts(), [2, 2, 2]);
        assert_eq!(parse_shape("3,2^2,1").unwrap().parts(), [3, 2, 2, 1]);
        let err = parse_shape("4,x").unwrap_err();
        assert!(err.contains("\"x\""), "{err}");
        assert!(parse_shape("2,3").is_err());
    }

    #[test]
    fn contents() {
        let sh = parse_shape("2,2,1").unwrap();
        let mu = parse_content("1^2,2^2,3").unwrap().resolve(&sh).unwrap();
        assert_eq!(mu.counts(), [2, 2, 1]);
        let mu = parse_content("3,1^2,2^2").unwrap().resolve(&sh).unwrap();
        assert_eq!(mu.counts(), [2, 2, 1]);
        assert_eq!(parse_content("standard").unwrap().resolve(&sh).unwrap().counts(), [1; 5]);
        assert!(parse_content("1,3").unwrap_err().contains("skips value 2"));
        assert!(parse_content("1^0").is_err());
        assert!(parse_content("1,1").is_err());
        assert!(parse_content("1^2").unwrap().resolve(&sh).is_err());
    }

    #[test]
    fn tableaux() {
        let t = parse_tableau("1,2,5,7/3 4 6").unwrap();
        assert_eq!(t.rows(), [vec![1, 2, 5, 7], vec![3, 4, 6]]);
        let f = parse_tableau_file("# comment\n1 2 6 10\n2 5 8 10\n\n3 5 9\n4 7\n").unwrap();
        assert_eq!(f.shape().parts(), [4, 4, 3, 2]);
        assert!(parse_tableau("1,a").unwrap_err().contains("\"a\""));
    }
}
