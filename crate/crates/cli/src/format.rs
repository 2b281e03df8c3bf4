//! Number rendering and CSV assembly.

/// `%.{digits}g`-style rendering: `digits` significant digits, trailing zeros
/// dropped, exponent form outside `[1e-4, 10^digits)`.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Nine significant digits, the precision of every CSV cell.
pub fn cell(x: f64) -> String {
    format_sig(x, 9)
}

/// Empty field for a missing value.
pub fn gap_cell(x: Option<f64>) -> String {
    x.map(cell).unwrap_or_default()
}

/// CSV document with `#` comment lines before and after the table.
#[derive(Debug, Default)]
pub struct CsvDoc {
    pub leading: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub trailing: Vec<String>,
}

impl CsvDoc {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.leading {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            debug_assert_eq!(row.len(), self.header.len());
            out.push_str(&row.join(","));
            out.push('\n');
        }
        for c in &self.trailing {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out
    }
}
