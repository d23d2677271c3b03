//! Number formatting and argument parsing shared by the commands.

use chsh_core::Complex;

/// Fixed nine digits after the decimal point. Values that round to zero
/// print unsigned.
pub fn num(x: f64) -> String {
    let s = format!("{x:.9}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_owned(),
        _ => s,
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn exact(x: f64) -> String {
    format!("{}", x + 0.0)
}

pub fn complex(z: Complex) -> String {
    let im = num(z.im);
    match im.strip_prefix('-') {
        Some(mag) => format!("{}-{}i", num(z.re), mag),
        None => format!("{}+{}i", num(z.re), im),
    }
}

pub fn vector(v: [f64; 3]) -> String {
    format!("{} {} {}", num(v[0]), num(v[1]), num(v[2]))
}

/// Parses an angle in radians. Degree-suffixed input is refused.
pub fn parse_radians(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let lower = t.to_ascii_lowercase();
    if t.ends_with('°') || lower.ends_with("deg") || lower.ends_with("degrees") {
        return Err("angles are taken in radians only; degrees are not accepted".into());
    }
    let t = lower.strip_suffix("rad").unwrap_or(&lower).trim_end();
    match t.parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        Ok(_) => Err("angle must be finite".into()),
        Err(e) => Err(format!("not a number in radians: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(num(2.0 * 2f64.sqrt()), "2.828427125");
        assert_eq!(num(-0.0), "0.000000000");
        assert_eq!(num(-1e-12), "0.000000000");
        assert_eq!(num(-0.5), "-0.500000000");
        assert_eq!(complex(Complex::new(0.5, -0.25)), "0.500000000-0.250000000i");
        assert_eq!(exact(0.1), "0.1");
    }

    #[test]
    fn radians_only() {
        assert_eq!(parse_radians("1.5"), Ok(1.5));
        assert_eq!(parse_radians("0.25rad"), Ok(0.25));
        assert!(parse_radians("90deg").is_err());
        assert!(parse_radians("90°").is_err());
        assert!(parse_radians("NaN").is_err());
        assert!(parse_radians("pi").is_err());
    }
}
