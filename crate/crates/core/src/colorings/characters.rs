use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::series::RationalSeries;

fn cycle_lengths(x: &GSet, g: usize) -> Vec<usize> {
    let perm = x.action_of(g);
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        out.push(len);
    }
    out
}

fn check_element(x: &GSet, g: usize) -> Result<()> {
    if g >= x.group().order() {
        return Err(Error::InvalidArgument(format!(
            "element {g} is not in the group"
        )));
    }
    Ok(())
}

/// `S_t(χ)(g) = Σ_n χ_{Sⁿ}(g) tⁿ = Π_cycles 1/(1 - t^len)` for the permutation
/// character of `x`.
pub fn symmetric_character_series(x: &GSet, g: usize, truncation: usize) -> Result<RationalSeries> {
    check_element(x, g)?;
    let mut acc = RationalSeries::one(truncation);
    for len in cycle_lengths(x, g) {
        let factor = RationalSeries::one(truncation)
            - RationalSeries::monomial(BigRational::one(), len, truncation);
        acc = acc * factor.reciprocal()?;
    }
    Ok(acc)
}

/// `λ_t(χ)(g) = 1 / S_{-t}(χ)(g)`, a polynomial of degree at most `|X|`.
pub fn exterior_character_series(x: &GSet, g: usize, truncation: usize) -> Result<RationalSeries> {
    symmetric_character_series(x, g, truncation)?
        .negate_variable()
        .reciprocal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, symmetric_group, GroupConfig, Permutation};
    use std::sync::Arc;

    #[test]
    fn two_fixed_points() {
        let x = GSet::natural(Arc::new(
            symmetric_group(2, &GroupConfig::default()).unwrap(),
        ));
        let s = symmetric_character_series(&x, 0, 5).unwrap();
        assert_eq!(s, RationalSeries::from_integers([1, 2, 3, 4, 5, 6], 5));
        let e = exterior_character_series(&x, 0, 5).unwrap();
        assert_eq!(e, RationalSeries::from_integers([1, 2, 1], 5));
        // the swap has eigenvalues 1, -1
        let e = exterior_character_series(&x, 1, 5).unwrap();
        assert_eq!(e, RationalSeries::from_integers([1, 0, -1], 5));
    }

    #[test]
    fn cycle_type_product() {
        let g = Arc::new(symmetric_group(5, &GroupConfig::default()).unwrap());
        let x = GSet::natural(g.clone());
        let sigma = g
            .index_of(&Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap())
            .unwrap();
        let mut expected = RationalSeries::one(8);
        for len in [3usize, 2] {
            let f = RationalSeries::one(8) - RationalSeries::monomial(BigRational::one(), len, 8);
            expected = expected * f.reciprocal().unwrap();
        }
        assert_eq!(symmetric_character_series(&x, sigma, 8).unwrap(), expected);
    }

    #[test]
    fn rejects_foreign_element() {
        let x = GSet::natural(Arc::new(cyclic_group(3).unwrap()));
        assert!(symmetric_character_series(&x, 3, 4).is_err());
    }
}
