//! Argument parsing helpers: reals with exact fraction support and the
//! parameter-box grammar of the search subcommand.

use landen_core::verify::{ParamBox, ParamRange};

/// Parses a real from decimal notation or an exact integer fraction such as
/// `1/2` or `-3/4`.
pub fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n: i64 = num
            .trim()
            .parse()
            .map_err(|_| format!("invalid fraction numerator `{num}`"))?;
        let d: i64 = den
            .trim()
            .parse()
            .map_err(|_| format!("invalid fraction denominator `{den}`"))?;
        if d == 0 {
            return Err(String::from("fraction denominator is zero"));
        }
        return Ok(n as f64 / d as f64);
    }
    t.parse::<f64>().map_err(|_| format!("invalid real `{t}`"))
}

/// Parses a parameter box like `a:0.5:2,b:1:1,c:1/2:3/2`. A two-field entry
/// `name:value` pins the parameter to a single value.
pub fn parse_box(s: &str) -> Result<ParamBox, String> {
    let mut ranges = Vec::new();
    for entry in s.split(',') {
        let fields: Vec<&str> = entry.split(':').collect();
        let (name, lo, hi) = match fields.as_slice() {
            [name, value] => {
                let v = parse_real(value)?;
                (*name, v, v)
            }
            [name, lo, hi] => (*name, parse_real(lo)?, parse_real(hi)?),
            _ => return Err(format!("box entry `{entry}` is not name:lo:hi")),
        };
        let name = name.trim();
        if name.is_empty() {
            return Err(format!("box entry `{entry}` has an empty name"));
        }
        if lo > hi {
            return Err(format!("box entry `{entry}` has lo > hi"));
        }
        ranges.push(ParamRange {
            name: String::from(name),
            lo,
            hi,
        });
    }
    if ranges.is_empty() {
        return Err(String::from("empty parameter box"));
    }
    Ok(ParamBox { ranges })
}
