use num_complex::Complex64;

/// Fixed-point rendering with `digits` significant digits.
///
/// Output is locale independent and deterministic; infinities render as
/// `inf`/`-inf` and negative zero renders as zero.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let digits = digits.max(1);
    if x == 0.0 {
        return format!("{:.*}", digits - 1, 0.0);
    }
    // Exponent after rounding to the requested precision.
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

pub fn fmt_complex(z: Complex64, digits: usize) -> String {
    let re = fmt_sig(z.re, digits);
    let im = fmt_sig(z.im.abs(), digits);
    let sign = if z.im.is_sign_negative() && z.im != 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(0.5 * 5f64.ln(), 12), "0.804718956217");
        assert_eq!(fmt_sig(0.25, 12), "0.250000000000");
        assert_eq!(fmt_sig(1.0, 12), "1.00000000000");
        assert_eq!(fmt_sig(0.8, 12), "0.800000000000");
        assert_eq!(fmt_sig(-2.5, 12), "-2.50000000000");
        assert_eq!(fmt_sig(123456.0, 12), "123456.000000");
    }

    #[test]
    fn rounding_carries_into_next_decade() {
        assert_eq!(fmt_sig(9.9999999999999, 12), "10.0000000000");
    }

    #[test]
    fn special_values() {
        assert_eq!(fmt_sig(f64::INFINITY, 12), "inf");
        assert_eq!(fmt_sig(0.0, 12), "0.00000000000");
        assert_eq!(fmt_sig(-0.0, 12), "0.00000000000");
    }

    #[test]
    fn complex_rendering() {
        assert_eq!(fmt_complex(Complex64::new(1.0, -1.0), 3), "1.00-1.00i");
        assert_eq!(fmt_complex(Complex64::new(0.0, 0.5), 3), "0.00+0.500i");
    }
}
