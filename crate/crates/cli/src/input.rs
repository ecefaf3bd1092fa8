use std::fs;

use gtmod::ratcalc::Rat;
use gtmod::tableau::{BaseVector, Shift};

use crate::CliError;

fn parse_rat(s: &str) -> Result<Rat, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::input(format!("invalid rational `{s}`")))
}

pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',').map(parse_rat).collect()
}

/// `1/2,1/3,1/5|1/7,1/7|3/11`, rows top-first.
pub fn parse_rows(s: &str) -> Result<BaseVector, CliError> {
    let rows = s
        .split('|')
        .map(parse_rat_list)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BaseVector::from_rows(&rows)?)
}

/// Pattern entries are anchor indices with an optional offset: `0,1,2|3,3|3+1`.
pub fn parse_pattern(anchors: &str, pattern: &str) -> Result<BaseVector, CliError> {
    let anchors = parse_rat_list(anchors)?;
    let mut assignment = Vec::new();
    let mut offsets = Vec::new();
    for row in pattern.split('|') {
        let mut a_row = Vec::new();
        let mut o_row = Vec::new();
        for entry in row.split(',') {
            let entry = entry.trim();
            let bad = || CliError::input(format!("invalid pattern entry `{entry}`"));
            let (idx, off) = match entry.find(['+', '-']) {
                Some(pos) => (&entry[..pos], entry[pos..].trim_start_matches('+')),
                None => (entry, "0"),
            };
            a_row.push(idx.parse::<usize>().map_err(|_| bad())?);
            o_row.push(off.parse::<i64>().map_err(|_| bad())?);
        }
        assignment.push(a_row);
        offsets.push(o_row);
    }
    let n = assignment.len();
    Ok(BaseVector::new(n, anchors, &assignment, &offsets)?)
}

/// Inline JSON (starting with `{`) or a path to a JSON file.
pub fn parse_base_json(arg: &str) -> Result<BaseVector, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg)
            .map_err(|e| CliError::input(format!("cannot read base vector file `{arg}`: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("invalid base vector JSON: {e}")))
}

pub fn parse_shift(s: &str) -> Result<Shift, CliError> {
    Ok(s.parse::<Shift>()?)
}

/// Finite base vector from a tableau top row or a highest weight.
pub fn finite_base(top_row: Option<&str>, weight: Option<&str>) -> Result<BaseVector, CliError> {
    match (top_row, weight) {
        (Some(top), None) => Ok(BaseVector::finite(&parse_rat_list(top)?)?),
        (None, Some(w)) => Ok(BaseVector::from_weight(&parse_rat_list(w)?)?),
        (None, None) => Err(CliError::input("one of --top-row or --weight is required")),
        (Some(_), Some(_)) => Err(CliError::input("--top-row and --weight are exclusive")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_and_rows_agree() {
        let a = parse_pattern("1/2,1/3,1/5,1/7", "0,1,2|3,3|3+1").unwrap();
        let b = parse_rows("1/2,1/3,1/5|1/7,1/7|8/7").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn negative_offsets() {
        let a = parse_pattern("1/2,1/3", "0,1|0-2").unwrap();
        assert_eq!(a.entry(1, 1), "-3/2".parse().unwrap());
    }

    #[test]
    fn json_round_trip() {
        let v = parse_rows("1/2,1/3,1/5|1/7,1/7|3/11").unwrap();
        let text = serde_json::to_string(&v).unwrap();
        assert_eq!(parse_base_json(&text).unwrap(), v);
        assert_eq!(serde_json::to_string(&parse_base_json(&text).unwrap()).unwrap(), text);
    }
}
