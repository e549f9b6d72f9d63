//! Natural ordering of vertex and arrow labels, so that `α2 < α10`.

use std::cmp::Ordering;

/// Compares two labels chunk by chunk, reading maximal digit runs as numbers.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let mut xs = a.chars().peekable();
    let mut ys = b.chars().peekable();
    loop {
        match (xs.peek().copied(), ys.peek().copied()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let nx = take_digits(&mut xs);
                let ny = take_digits(&mut ys);
                let ord = compare_digit_runs(&nx, &ny);
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(&y);
                }
                xs.next();
                ys.next();
            }
        }
    }
}

fn take_digits(it: &mut std::iter::Peekable<std::str::Chars<'_>>) -> String {
    let mut s = String::new();
    while let Some(c) = it.peek().copied() {
        if !c.is_ascii_digit() {
            break;
        }
        s.push(c);
        it.next();
    }
    s
}

fn compare_digit_runs(x: &str, y: &str) -> Ordering {
    let tx = x.trim_start_matches('0');
    let ty = y.trim_start_matches('0');
    tx.len()
        .cmp(&ty.len())
        .then_with(|| tx.cmp(ty))
        .then_with(|| x.len().cmp(&y.len()))
}

/// Splits `label` into a non-numeric stem and a trailing decimal index, if any.
pub(crate) fn split_index(label: &str) -> Option<(&str, u64)> {
    let stem_len = label.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if stem_len == label.len() || stem_len == 0 {
        return None;
    }
    let (stem, digits) = label.split_at(stem_len);
    digits.parse().ok().map(|n| (stem, n))
}
