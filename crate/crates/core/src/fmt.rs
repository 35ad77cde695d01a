/// Render `x` in plain decimal notation with at most `sig` significant
/// digits, trailing zeros trimmed. Scientific notation is never produced, so
/// the output can be re-parsed by the hyperbolic-number grammar where `e` is
/// reserved for the basis markers `e1`/`e2`.
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(sig > 0);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - exponent).clamp(0, 330) as usize;
    let mut s = format!("{:.*}", decimals, x);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}
