//! Words over finite alphabets: free-group reduction, enumeration, and the
//! injective recoding of `k`-letter semigroup words into binary ones.

use std::fmt;

/// A letter `a_symbol` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn gen(symbol: usize) -> Self {
        Letter { symbol, inverse: false }
    }

    pub fn inv(symbol: usize) -> Self {
        Letter { symbol, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { symbol: self.symbol, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

/// A reduced word of the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgWord(Vec<Letter>);

/// Free reduction of a raw signed-letter sequence.
pub fn reduce_word(raw: &[Letter]) -> FgWord {
    let mut out: Vec<Letter> = Vec::with_capacity(raw.len());
    for &l in raw {
        if out.last().is_some_and(|&top| top.cancels(l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    FgWord(out)
}

impl FgWord {
    pub fn empty() -> Self {
        FgWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &FgWord) -> FgWord {
        let mut raw = self.0.clone();
        raw.extend_from_slice(&rhs.0);
        reduce_word(&raw)
    }

    pub fn inverse(&self) -> FgWord {
        FgWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverse)
    }

    /// Renders with lowercase generators and uppercase inverses.
    pub fn render(&self, alphabet: &[char]) -> String {
        self.0
            .iter()
            .map(|l| {
                let c = alphabet[l.symbol];
                if l.inverse {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .map(String::from)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl From<&SgWord> for FgWord {
    fn from(w: &SgWord) -> Self {
        FgWord(w.0.iter().map(|&s| Letter::gen(s)).collect())
    }
}

/// A word of the free semigroup (no inverses).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SgWord(pub Vec<usize>);

impl SgWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.0.iter().map(|s| format!("a{}", s + 1)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The letters that may follow `last` in a reduced word over `k` generators,
/// in the order a, a⁻¹, b, b⁻¹, …
pub(crate) fn reduced_successors(k: usize, last: Option<Letter>) -> impl Iterator<Item = Letter> {
    (0..k).flat_map(|s| [Letter::gen(s), Letter::inv(s)]).filter(move |&l| !last.is_some_and(|p| p.cancels(l)))
}

/// All reduced words of length ≤ `max_len`, shortest first.
pub fn enumerate_reduced(k: usize, max_len: usize) -> Vec<FgWord> {
    let mut out = vec![FgWord::empty()];
    let mut level = vec![FgWord::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for l in reduced_successors(k, w.0.last().copied()) {
                let mut v = w.0.clone();
                v.push(l);
                next.push(FgWord(v));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// All semigroup words of length ≤ `max_len` (including the empty word), shortest first.
pub fn enumerate_semigroup(k: usize, max_len: usize) -> Vec<SgWord> {
    let mut out = vec![SgWord::default()];
    let mut level = vec![SgWord::default()];
    for _ in 0..max_len {
        let next: Vec<_> = level
            .iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut v = w.0.clone();
                    v.push(s);
                    SgWord(v)
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Number of reduced words of length ≤ `max_len` over `k` generators.
pub fn reduced_count(k: usize, max_len: usize) -> u128 {
    if k == 0 {
        return 1;
    }
    let (k2, mut layer, mut total) = (2 * k as u128, 0u128, 1u128);
    for n in 1..=max_len {
        layer = if n == 1 { k2 } else { layer.saturating_mul(k2 - 1) };
        total = total.saturating_add(layer);
    }
    total
}

/// Number of semigroup words of length ≤ `max_len` over `k` letters.
pub fn semigroup_count(k: usize, max_len: usize) -> u128 {
    let (mut layer, mut total) = (1u128, 1u128);
    for _ in 0..max_len {
        layer = layer.saturating_mul(k as u128);
        total = total.saturating_add(layer);
    }
    total
}

/// The morphism `sg(Σ_k) → sg({a, b})`, `a_i ↦ a b^i a`.
///
/// Images are delimited by the `a`s, so they factor uniquely and the morphism
/// is injective.
#[derive(Clone, Copy, Debug)]
pub struct AlphabetReduction {
    k: usize,
}

pub fn alphabet_reduction(k: usize) -> AlphabetReduction {
    assert!(k >= 1, "alphabet must be non-empty");
    AlphabetReduction { k }
}

impl AlphabetReduction {
    pub const A: usize = 0;
    pub const B: usize = 1;

    pub fn k(&self) -> usize {
        self.k
    }

    /// Symbol `s` (0-based, i.e. `a_{s+1}`) becomes `a b^(s+1) a`.
    pub fn encode(&self, w: &SgWord) -> SgWord {
        let mut out = Vec::new();
        for &s in &w.0 {
            assert!(s < self.k, "letter outside the alphabet");
            out.push(Self::A);
            out.extend(std::iter::repeat_n(Self::B, s + 1));
            out.push(Self::A);
        }
        SgWord(out)
    }

    /// Inverse of `encode` on its image; `None` for words outside the image.
    pub fn decode(&self, w: &SgWord) -> Option<SgWord> {
        let mut out = Vec::new();
        let mut it = w.0.iter().peekable();
        while let Some(&first) = it.next() {
            if first != Self::A {
                return None;
            }
            let mut bs = 0;
            while it.peek() == Some(&&Self::B) {
                it.next();
                bs += 1;
            }
            if it.next() != Some(&Self::A) || bs == 0 || bs > self.k {
                return None;
            }
            out.push(bs - 1);
        }
        Some(SgWord(out))
    }
}
