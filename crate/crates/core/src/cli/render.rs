//! Text and LaTeX rendering.

use num_traits::{One, Signed};

use crate::freealg::{Alphabet, NCPoly, Rational};

/// Collapses runs of equal factors into powers.
fn runs(names: &[String]) -> Vec<(String, usize)> {
    let mut out: Vec<(String, usize)> = Vec::new();
    for n in names {
        match out.last_mut() {
            Some((last, k)) if last == n => *k += 1,
            _ => out.push((n.clone(), 1)),
        }
    }
    out
}

pub fn latex_product(names: &[String]) -> String {
    if names.is_empty() {
        return "1".into();
    }
    runs(names)
        .into_iter()
        .map(|(n, k)| match k {
            1 => n,
            _ if n.chars().count() == 1 => format!("{n}^{{{k}}}"),
            _ => format!("({n})^{{{k}}}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn latex_magnitude(c: &Rational) -> String {
    let c = c.abs();
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

/// Signed sum of `coefficient * body` in LaTeX, `0` when empty.
pub fn latex_sum(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, body)) in terms.iter().enumerate() {
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let unit_body = body == "1";
        if c.abs().is_one() && !unit_body {
            out.push_str(body);
        } else if unit_body {
            out.push_str(&latex_magnitude(c));
        } else {
            out.push_str(&latex_magnitude(c));
            out.push(' ');
            out.push_str(body);
        }
    }
    out
}

/// Plain-text counterpart of [`latex_sum`].
pub fn text_sum(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, body)) in terms.iter().enumerate() {
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        let mag = c.abs();
        if body == "1" {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(body);
        } else {
            out.push_str(&format!("{mag} {body}"));
        }
    }
    out
}

pub fn latex_word_poly(p: &NCPoly, alphabet: Alphabet) -> String {
    let terms: Vec<(Rational, String)> = p
        .terms()
        .map(|(w, c)| {
            let names: Vec<String> = w
                .letters()
                .iter()
                .map(|&g| alphabet.name(g).to_string())
                .collect();
            (c.clone(), latex_product(&names))
        })
        .collect();
    latex_sum(&terms)
}

/// `\mathscr{<letter>}_{n}` for an expansion factor.
pub fn latex_script(letter: char, n: usize) -> String {
    format!("\\mathscr{{{letter}}}_{{{n}}}")
}

/// `\mathscr{B}'_{n}`, with `n = 1` written as the plain generator `B`.
pub fn latex_script_prime(n: usize) -> String {
    if n == 1 {
        "B".into()
    } else {
        format!("\\mathscr{{B}}'_{{{n}}}")
    }
}

/// `B'n` in text, `B` for `n = 1`.
pub fn text_script_prime(n: usize) -> String {
    if n == 1 {
        "B".into()
    } else {
        format!("B'{n}")
    }
}

pub fn text_product(names: &[String]) -> String {
    if names.is_empty() {
        return "1".into();
    }
    runs(names)
        .into_iter()
        .map(|(n, k)| match k {
            1 => n,
            _ if n.chars().count() == 1 => format!("{n}^{k}"),
            _ => format!("({n})^{k}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}
