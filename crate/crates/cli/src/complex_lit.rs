//! Complex literals of the form `<re><sign><im>i`, e.g. `1+0i`,
//! `-2.5+0.5i`, `0+1e-3i`. No whitespace; both parts must be finite.

use tridiag_pow::{c64, ComplexScalar};

pub fn parse_complex(text: &str) -> Result<ComplexScalar, String> {
    let bad = |why: &str| format!("invalid complex literal `{text}`: {why} (expected e.g. 1+0i)");
    if text.chars().any(char::is_whitespace) {
        return Err(bad("whitespace is not allowed"));
    }
    let body = text
        .strip_suffix('i')
        .ok_or_else(|| bad("missing trailing `i`"))?;
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| {
            matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E')
        })
        .ok_or_else(|| bad("missing sign between real and imaginary parts"))?;
    let (re_text, im_text) = body.split_at(split);
    let re: f64 = re_text.parse().map_err(|_| bad("bad real part"))?;
    let im: f64 = im_text.parse().map_err(|_| bad("bad imaginary part"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(bad("components must be finite"));
    }
    Ok(c64(re, im))
}

/// Renders `re+imi` using the shortest round-tripping decimal for each part.
pub fn format_complex(z: ComplexScalar) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

/// Fixed-precision rendering for human-readable output. Parts that round to
/// zero lose their sign, so `-1e-17` shows as `0.000000`.
pub fn format_complex_fixed(z: ComplexScalar, digits: usize) -> String {
    let part = |x: f64| {
        let s = format!("{:.digits$}", x.abs());
        let negative = x.is_sign_negative() && s.bytes().any(|c| matches!(c, b'1'..=b'9'));
        (negative, s)
    };
    let (re_neg, re) = part(z.re);
    let (im_neg, im) = part(z.im);
    format!("{}{re}{}{im}i", if re_neg { "-" } else { "" }, if im_neg { '-' } else { '+' })
}
