use std::cmp::Ordering;
use std::fmt;

/// A generator of the Heisenberg-Weyl algebra. The derived order `M < A+ < A-`
/// is the PBW order used by normal forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    M,
    APlus,
    AMinus,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::M, Gen::APlus, Gen::AMinus];

    pub fn name(self) -> &'static str {
        match self {
            Gen::M => "M",
            Gen::APlus => "A+",
            Gen::AMinus => "A-",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }

    /// Position in the Lie basis `(A-, A+, M)`.
    pub fn basis_index(self) -> usize {
        match self {
            Gen::AMinus => 0,
            Gen::APlus => 1,
            Gen::M => 2,
        }
    }

    pub fn from_basis_index(i: usize) -> Gen {
        match i {
            0 => Gen::AMinus,
            1 => Gen::APlus,
            2 => Gen::M,
            _ => panic!("basis index {i} out of range"),
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A noncommutative monomial. Ordered by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn power(g: Gen, n: usize) -> Self {
        Word(vec![g; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Sorted in PBW order (all `M`, then `A+`, then `A-`).
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Run-length form, e.g. `[(M, 2), (A-, 1)]`.
    pub fn runs(&self) -> Vec<(Gen, usize)> {
        let mut out: Vec<(Gen, usize)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, n)) if *h == g => *n += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    pub fn count(&self, g: Gen) -> usize {
        self.0.iter().filter(|&&h| h == g).count()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_word(self))
    }
}

impl From<Vec<Gen>> for Word {
    fn from(v: Vec<Gen>) -> Self {
        Word(v)
    }
}
