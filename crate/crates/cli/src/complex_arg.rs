//! Parsing of complex literals like `0.3+0i`, `-0.25 - 0.6i`, `1e-3+2e-4i`.
//!
//! Decimal point only, optional spaces, `i` suffix on the imaginary part.

use diskmetrics_core::Point;

pub fn parse_point(input: &str) -> Result<Point, String> {
    let compact: String = input
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if compact.is_empty() {
        return Err("empty complex literal".into());
    }
    let point = if let Some(body) = compact.strip_suffix('i') {
        match split_imaginary(body) {
            Some((re, im)) => Point::new(parse_real(re)?, parse_signed(im)?),
            None => Point::new(0.0, parse_signed(body)?),
        }
    } else {
        Point::new(parse_real(&compact)?, 0.0)
    };
    if !point.is_finite() {
        return Err(format!("non-finite complex literal `{input}`"));
    }
    Ok(point)
}

/// Split `x+y` / `x-y` at the sign that separates the two parts (not a
/// leading sign, not an exponent sign). Returns `None` for a pure
/// imaginary literal.
fn split_imaginary(body: &str) -> Option<(&str, &str)> {
    let bytes = body.as_bytes();
    for pos in (1..bytes.len()).rev() {
        let c = bytes[pos];
        if (c == b'+' || c == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
            return Some((&body[..pos], &body[pos..]));
        }
    }
    None
}

fn parse_real(s: &str) -> Result<f64, String> {
    s.parse::<f64>().map_err(|_| format!("invalid real part `{s}`"))
}

/// Imaginary coefficient with its sign; bare `+`/`-`/empty mean a unit
/// coefficient.
fn parse_signed(s: &str) -> Result<f64, String> {
    match s {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => s.parse::<f64>().map_err(|_| format!("invalid imaginary part `{s}`")),
    }
}
