//! Explicit embeddings of free (semi)groups and their direct products into
//! matrix semigroups, with exact evaluation and bounded injectivity scans.

mod catalog;
mod matrix;
mod words;

use std::collections::HashMap;
use std::fmt;

pub use catalog::{broken_control, catalog, find, AnyMatrix, CatalogSpec};
pub use matrix::{int_matrix, rat_matrix, GaussRat, Matrix, Scalar, ScalarKind};
pub use words::{
    alphabet_reduction, enumerate_reduced, enumerate_semigroup, reduce_word, reduced_count, semigroup_count,
    AlphabetReduction, FgWord, Letter, SgWord,
};

use crate::error::{Error, Result};

/// Default cap on the number of domain elements an injectivity scan may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    /// Free group: letters may be inverted, words are kept reduced.
    Group,
    /// Free semigroup: positive letters only.
    Semigroup,
}

/// One factor of the domain, e.g. `fg({a, b})` or `sg({c})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub alphabet: Vec<char>,
}

impl Component {
    pub fn group(alphabet: &[char]) -> Self {
        Component { kind: ComponentKind::Group, alphabet: alphabet.to_vec() }
    }

    pub fn semigroup(alphabet: &[char]) -> Self {
        Component { kind: ComponentKind::Semigroup, alphabet: alphabet.to_vec() }
    }

    fn word_count(&self, max_len: usize) -> u128 {
        match self.kind {
            ComponentKind::Group => reduced_count(self.alphabet.len(), max_len),
            ComponentKind::Semigroup => semigroup_count(self.alphabet.len(), max_len),
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ComponentKind::Group => "fg",
            ComponentKind::Semigroup => "sg",
        };
        let letters: Vec<String> = self.alphabet.iter().map(char::to_string).collect();
        write!(f, "{kind}({{{}}})", letters.join(","))
    }
}

/// An element of a product of word structures: one word per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    pub parts: Vec<FgWord>,
}

impl Element {
    /// Componentwise product.
    pub fn mul(&self, rhs: &Element) -> Element {
        assert_eq!(self.parts.len(), rhs.parts.len(), "element shapes differ");
        Element { parts: self.parts.iter().zip(&rhs.parts).map(|(a, b)| a.concat(b)).collect() }
    }

    pub fn render(&self, components: &[Component]) -> String {
        self.parts.iter().zip(components).map(|(w, c)| w.render(&c.alphabet)).collect::<Vec<_>>().join(" | ")
    }
}

/// Parses `a b A c | c C`: one `|`-separated section per component, each
/// letter a single character, uppercase for inverses. Missing trailing
/// sections are empty; surplus sections must be empty.
pub fn parse_element(components: &[Component], text: &str) -> Result<Element> {
    let sections: Vec<&str> = text.split('|').collect();
    for extra in sections.iter().skip(components.len()) {
        if !extra.trim().is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "{} components expected, found {}",
                components.len(),
                sections.len()
            )));
        }
    }
    let mut parts = Vec::with_capacity(components.len());
    for (i, comp) in components.iter().enumerate() {
        let section = sections.get(i).copied().unwrap_or("");
        let mut raw = Vec::new();
        for ch in section.chars().filter(|c| !c.is_whitespace()) {
            let lower = ch.to_ascii_lowercase();
            let symbol = comp
                .alphabet
                .iter()
                .position(|&a| a == lower)
                .ok_or_else(|| Error::ShapeMismatch(format!("letter {ch:?} is not in component {}", comp)))?;
            let inverse = ch.is_ascii_uppercase();
            if inverse && comp.kind == ComponentKind::Semigroup {
                return Err(Error::NotInvertible(lower));
            }
            raw.push(Letter { symbol, inverse });
        }
        parts.push(reduce_word(&raw));
    }
    Ok(Element { parts })
}

#[derive(Clone, Debug)]
pub struct GeneratorImage<S> {
    pub forward: Matrix<S>,
    /// Present exactly for group-component generators.
    pub inverse: Option<Matrix<S>>,
}

/// A morphism from a product of word structures into `n×n` matrices over `S`,
/// given by the images of the generators.
#[derive(Clone, Debug)]
pub struct EmbeddingSpec<S> {
    pub name: String,
    pub description: String,
    pub components: Vec<Component>,
    pub dim: usize,
    /// `images[c][s]` is the image of symbol `s` of component `c`.
    pub images: Vec<Vec<GeneratorImage<S>>>,
}

/// Result of an injectivity scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanOutcome {
    pub enumerated: u64,
    /// First pair of distinct elements with equal images, in enumeration order.
    pub collision: Option<(Element, Element)>,
}

impl<S: Scalar> EmbeddingSpec<S> {
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        parse_element(&self.components, text)
    }

    fn letter_image(&self, component: usize, l: Letter) -> Result<&Matrix<S>> {
        let img = self
            .images
            .get(component)
            .and_then(|c| c.get(l.symbol))
            .ok_or_else(|| Error::ShapeMismatch(format!("symbol {} of component {component}", l.symbol)))?;
        if l.inverse {
            img.inverse.as_ref().ok_or(Error::NotInvertible(self.components[component].alphabet[l.symbol]))
        } else {
            Ok(&img.forward)
        }
    }

    /// Image of a single generator (or its inverse) of one component.
    pub fn generator_image(&self, component: usize, letter: Letter) -> Result<&Matrix<S>> {
        self.letter_image(component, letter)
    }

    pub fn word_image(&self, component: usize, w: &FgWord) -> Result<Matrix<S>> {
        let mut acc = Matrix::identity(self.dim);
        for &l in w.letters() {
            acc = acc.mul(self.letter_image(component, l)?);
        }
        Ok(acc)
    }

    /// Product of the component images, component 0 first.
    pub fn eval(&self, element: &Element) -> Result<Matrix<S>> {
        if element.parts.len() != self.components.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} components expected, found {}",
                self.components.len(),
                element.parts.len()
            )));
        }
        let mut acc = Matrix::identity(self.dim);
        for (c, w) in element.parts.iter().enumerate() {
            acc = acc.mul(&self.word_image(c, w)?);
        }
        Ok(acc)
    }

    /// Number of elements with every component of length ≤ `max_len`.
    pub fn domain_size(&self, max_len: usize) -> u128 {
        self.components.iter().map(|c| c.word_count(max_len)).fold(1u128, u128::saturating_mul)
    }

    /// Words of one component with their images, shortest first.
    fn component_images(&self, c: usize, max_len: usize) -> Result<Vec<(FgWord, Matrix<S>)>> {
        let comp = &self.components[c];
        let k = comp.alphabet.len();
        let mut out = vec![(FgWord::empty(), Matrix::identity(self.dim))];
        let mut level_start = 0;
        for _ in 0..max_len {
            let level_end = out.len();
            for i in level_start..level_end {
                let last = out[i].0.letters().last().copied();
                let successors: Vec<Letter> = match comp.kind {
                    ComponentKind::Group => words::reduced_successors(k, last).collect(),
                    ComponentKind::Semigroup => (0..k).map(Letter::gen).collect(),
                };
                for l in successors {
                    let m = out[i].1.mul(self.letter_image(c, l)?);
                    let mut v = out[i].0.letters().to_vec();
                    v.push(l);
                    out.push((reduce_word(&v), m));
                }
            }
            level_start = level_end;
        }
        Ok(out)
    }

    /// Enumerates all elements whose components have length ≤ `max_len` and
    /// reports the first two with equal images.
    pub fn injectivity_scan(&self, max_len: usize, budget: u64) -> Result<ScanOutcome> {
        let count = self.domain_size(max_len);
        if count > u128::from(budget) {
            return Err(Error::BudgetExceeded { count, budget });
        }
        let lists =
            (0..self.components.len()).map(|c| self.component_images(c, max_len)).collect::<Result<Vec<_>>>()?;
        let mut seen: HashMap<Matrix<S>, Vec<usize>> = HashMap::with_capacity(count as usize);
        let mut enumerated = 0u64;
        let mut idx = vec![0usize; lists.len()];
        loop {
            let mut m = Matrix::identity(self.dim);
            for (c, &i) in idx.iter().enumerate() {
                m = m.mul(&lists[c][i].1);
            }
            enumerated += 1;
            if let Some(prev) = seen.get(&m) {
                let elem = |ix: &[usize]| Element {
                    parts: ix.iter().enumerate().map(|(c, &i)| lists[c][i].0.clone()).collect(),
                };
                return Ok(ScanOutcome { enumerated, collision: Some((elem(prev), elem(&idx))) });
            }
            seen.insert(m, idx.clone());
            // odometer, last component fastest
            let mut pos = lists.len();
            loop {
                if pos == 0 {
                    return Ok(ScanOutcome { enumerated, collision: None });
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// `true` iff every stored inverse image is the exact inverse of its generator.
    pub fn inverses_consistent(&self) -> bool {
        self.images.iter().flatten().all(|img| match &img.inverse {
            Some(inv) => img.forward.mul(inv).is_identity() && inv.mul(&img.forward).is_identity(),
            None => true,
        })
    }
}
