//! Named example semigroups, addressable from the command line as `@NAME`.

use crate::semigroup::FiniteSemigroup;

/// A registry entry: the table plus human-readable element labels.
#[derive(Debug, Clone)]
pub struct NamedExample {
    pub name: &'static str,
    pub description: &'static str,
    pub semigroup: FiniteSemigroup,
    pub labels: Vec<String>,
}

pub const NAMES: &[&str] = &["B2M", "NULL2", "LZ2", "T3", "B2xB2", "R15", "TRIV", "C3"];

/// Looks up a registry entry by name (case-insensitive, optional leading `@`).
pub fn lookup(name: &str) -> Option<NamedExample> {
    let key = name.strip_prefix('@').unwrap_or(name);
    let canonical = NAMES.iter().find(|n| n.eq_ignore_ascii_case(key))?;
    let (description, semigroup, labels): (&'static str, FiniteSemigroup, Vec<String>) = match *canonical {
        "B2M" => ("{0,1} under multiplication", b2m(), labels(&["0", "1"])),
        "NULL2" => ("null semigroup {0,a}, all products 0", null2(), labels(&["0", "a"])),
        "LZ2" => ("left-zero semigroup on {a,b}", lz2(), labels(&["a", "b"])),
        "T3" => ("commutative monoid {1,a,0} with a*a = 0", t3(), labels(&["1", "a", "0"])),
        "B2xB2" => ("componentwise product of B2M with itself", b2xb2(), labels(&["00", "01", "10", "11"])),
        "R15" => ("free semigroup on {s,x} modulo words of length >= 4", r15(), r15_labels()),
        "TRIV" => ("one-element semigroup {e}", trivial(), labels(&["e"])),
        "C3" => ("cyclic group of order 3", cyclic_group(3), labels(&["1", "g", "g2"])),
        _ => unreachable!(),
    };
    Some(NamedExample { name: canonical, description, semigroup, labels })
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `{0, 1}` under ordinary multiplication; 0 has index 0, 1 has index 1.
pub fn b2m() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2, |a, b| a * b).unwrap()
}

/// `{0, a}` with every product equal to 0.
pub fn null2() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2, |_, _| 0).unwrap()
}

/// Left-zero semigroup on two elements, `x * y = x`.
pub fn lz2() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(2, |a, _| a).unwrap()
}

/// `{1, a, 0}` (indices 0, 1, 2) with `a * a = 0`.
pub fn t3() -> FiniteSemigroup {
    // exponent of `a`, capped at 2 (= zero)
    FiniteSemigroup::from_fn(3, |x, y| (x + y).min(2)).unwrap()
}

/// B2M x B2M with `(x, y)` at index `2x + y`.
pub fn b2xb2() -> FiniteSemigroup {
    b2m().direct_product(&b2m())
}

pub fn trivial() -> FiniteSemigroup {
    FiniteSemigroup::from_fn(1, |_, _| 0).unwrap()
}

pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    FiniteSemigroup::from_fn(n, |a, b| (a + b) % n).unwrap()
}

/// Words over `{s, x}` of length 1..=3 in shortlex order, preceded by the zero.
fn r15_words() -> Vec<String> {
    let mut words = Vec::new();
    for len in 1..=3u32 {
        for code in 0..(1u32 << len) {
            let w: String = (0..len).rev().map(|bit| if code >> bit & 1 == 0 { 's' } else { 'x' }).collect();
            words.push(w);
        }
    }
    words
}

fn r15_labels() -> Vec<String> {
    std::iter::once("0".to_string()).chain(r15_words()).collect()
}

/// Index of a word of length 1..=3 in [`r15`].
pub fn r15_index(word: &str) -> Option<usize> {
    r15_words().iter().position(|w| w == word).map(|i| i + 1)
}

/// Rees quotient of the free semigroup on `{s, x}` by the ideal of words of
/// length at least 4. The zero has index 0; words follow in shortlex order.
pub fn r15() -> FiniteSemigroup {
    let words = r15_words();
    let index = |w: &str| words.iter().position(|v| v == w).map(|i| i + 1);
    FiniteSemigroup::from_fn(words.len() + 1, |a, b| {
        if a == 0 || b == 0 {
            return 0;
        }
        let w = format!("{}{}", words[a - 1], words[b - 1]);
        index(&w).unwrap_or(0)
    })
    .unwrap()
}
