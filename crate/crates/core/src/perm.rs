use std::fmt;

/// A permutation of `0..n` in image form: `image[i]` is where `i` goes.
///
/// Composition follows `(g∘h)(i) = g(h(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

/// Action of a rotation on vertex labels.
pub type VertexPermutation = Permutation;
/// Action of a rotation on edge indices.
pub type EdgePermutation = Permutation;

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from its image array, or returns `None` if the
    /// array is not a bijection on `0..len`.
    pub fn from_image(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Permutation { image }
    }

    /// Disjoint cycles, fixed points included, each starting at its smallest
    /// element and ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn fixed_points(&self) -> usize {
        self.image
            .iter()
            .enumerate()
            .filter(|&(i, &j)| i == j)
            .count()
    }

    /// Smallest `k ≥ 1` with `self^k = id`.
    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

/// Disjoint-cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, i) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(image: &[usize]) -> Permutation {
        Permutation::from_image(image.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_image(vec![0, 0, 1]).is_none());
        assert!(Permutation::from_image(vec![0, 3, 1]).is_none());
        assert!(Permutation::from_image(vec![]).is_some());
    }

    #[test]
    fn composition_convention() {
        let g = p(&[1, 2, 0]);
        let h = p(&[1, 0, 2]);
        // (g∘h)(0) = g(h(0)) = g(1) = 2
        assert_eq!(g.compose(&h).apply(0), 2);
        assert_eq!(h.compose(&g).apply(0), 0);
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn cycle_notation() {
        let g = p(&[11, 6, 10, 7, 9, 5, 1, 3, 8, 4, 2, 0]);
        assert_eq!(g.to_string(), "(0 11)(1 6)(2 10)(3 7)(4 9)");
        assert_eq!(g.fixed_points(), 2);
        assert_eq!(g.cycle_count(), 7);
        assert_eq!(g.order(), 2);
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p(&[1, 2, 0, 4, 3]).order(), 6);
    }
}
