use std::collections::BTreeMap;
use std::fmt;

/// A finite-dimensional graded vector space, described by the degree of each
/// basis vector.
///
/// Bases of composite spaces follow fixed index formulas so that `⊗` is
/// strictly associative and unital:
/// - `V ⊗ W`: `v ⊗ w` sits at `v·dim W + w`, degree `|v| + |w|`;
/// - `[V, W]`: the elementary map `v ↦ w` sits at `w·dim V + v`, degree
///   `|w| − |v|`, so an element is the row-major vectorisation of its
///   `dim W × dim V` matrix;
/// - `V*` is `[V, k]`: same order, degrees negated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVect {
    degrees: Vec<i32>,
}

impl GradedVect {
    pub fn new(degrees: Vec<i32>) -> Self {
        GradedVect { degrees }
    }

    /// Degree-major basis from a degree → dimension table.
    pub fn from_dims(dims: &BTreeMap<i32, usize>) -> Self {
        let degrees = dims
            .iter()
            .flat_map(|(&d, &n)| std::iter::repeat_n(d, n))
            .collect();
        GradedVect { degrees }
    }

    /// `k^n` in degree 0.
    pub fn ungraded(n: usize) -> Self {
        GradedVect { degrees: vec![0; n] }
    }

    /// The ground field `k` in degree 0, the monoidal unit.
    pub fn unit() -> Self {
        Self::ungraded(1)
    }

    pub fn zero() -> Self {
        Self::ungraded(0)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    /// Whether the basis is listed degree-major (the form `from_dims` gives).
    pub fn is_degree_sorted(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] <= w[1])
    }

    /// Basis indices of the given degree.
    pub fn indices_of_degree(&self, d: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn tensor(&self, other: &GradedVect) -> GradedVect {
        let degrees = self
            .degrees
            .iter()
            .flat_map(|&a| other.degrees.iter().map(move |&b| a + b))
            .collect();
        GradedVect { degrees }
    }

    pub fn internal_hom(&self, target: &GradedVect) -> GradedVect {
        let degrees = target
            .degrees
            .iter()
            .flat_map(|&w| self.degrees.iter().map(move |&v| w - v))
            .collect();
        GradedVect { degrees }
    }

    pub fn dual(&self) -> GradedVect {
        self.internal_hom(&GradedVect::unit())
    }

    pub fn direct_sum(&self, other: &GradedVect) -> GradedVect {
        let mut degrees = self.degrees.clone();
        degrees.extend(&other.degrees);
        GradedVect { degrees }
    }
}

impl fmt::Display for GradedVect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims().iter().map(|(d, n)| format!("{d}:{n}")).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(pairs: &[(i32, usize)]) -> GradedVect {
        GradedVect::from_dims(&pairs.iter().copied().collect())
    }

    #[test]
    fn tensor_dims() {
        let v = dims(&[(0, 2)]);
        assert_eq!(v.tensor(&GradedVect::unit()), v);
        assert_eq!(v.tensor(&dims(&[(0, 3)])).dims(), dims(&[(0, 6)]).dims());
        let w = dims(&[(0, 1), (1, 1)]);
        assert_eq!(w.tensor(&w).dims(), dims(&[(0, 1), (1, 2), (2, 1)]).dims());
    }

    #[test]
    fn hom_and_dual_dims() {
        let w = dims(&[(0, 3)]);
        assert_eq!(GradedVect::unit().internal_hom(&w), w);
        assert_eq!(dims(&[(0, 2)]).internal_hom(&w).dims(), dims(&[(0, 6)]).dims());
        let v = dims(&[(0, 1), (1, 1)]);
        assert_eq!(
            v.internal_hom(&dims(&[(0, 1)])).dims(),
            dims(&[(-1, 1), (0, 1)]).dims()
        );
        assert_eq!(dims(&[(1, 2)]).dual().dims(), dims(&[(-1, 2)]).dims());
        assert_eq!(v.dual().dual(), v);
    }
}
