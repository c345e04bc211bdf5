use super::Term;

/// The reductive relation `s <= t` used to decide where a reducer applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reductive {
    /// Exponent-wise division (letter counts for solvable words).
    Divides,
    /// `s` is a literal prefix of `t`.
    Prefix,
    /// `s` occurs as a factor of `t`.
    Subword,
    /// `t = s * w` for some irreducible `w` of length at most `bound`, and
    /// `t` is not smaller than `s`. A partial order only.
    Multiple { bound: usize },
    /// Equality plus the declared pairs `(s, t)`.
    Pairs(Vec<(Term, Term)>),
}

impl Reductive {
    pub fn name(&self) -> String {
        match self {
            Reductive::Divides => "divides".into(),
            Reductive::Prefix => "prefix".into(),
            Reductive::Subword => "subword".into(),
            Reductive::Multiple { bound } => format!("multiple({bound})"),
            Reductive::Pairs(p) => format!("pairs({})", p.len()),
        }
    }
}

pub(crate) fn is_prefix(s: &[u16], t: &[u16]) -> bool {
    s.len() <= t.len() && t[..s.len()] == *s
}

pub(crate) fn occurrences(s: &[u16], t: &[u16]) -> Vec<usize> {
    if s.len() > t.len() {
        return vec![];
    }
    (0..=t.len() - s.len()).filter(|&p| t[p..p + s.len()] == *s).collect()
}

/// Multiset inclusion of sorted words, returning the difference.
pub(crate) fn multiset_diff(s: &[u16], t: &[u16]) -> Option<Vec<u16>> {
    let mut out = Vec::new();
    let mut i = 0;
    for &x in t {
        if i < s.len() && s[i] == x {
            i += 1;
        } else {
            out.push(x);
        }
    }
    (i == s.len()).then_some(out)
}

/// Multiset union (lcm) of sorted words.
pub(crate) fn multiset_lcm(a: &[u16], b: &[u16]) -> Vec<u16> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}
