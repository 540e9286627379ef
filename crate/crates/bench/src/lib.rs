//! Shared inputs for the benchmarks.

use bicirc_core::{BicirculantSpec, FAMILIES};

/// Reference family `id` at order `n`, rounded up to an admissible order.
pub fn family_spec(id: u8, n: u64) -> BicirculantSpec {
    let fam = FAMILIES.iter().find(|f| f.id == id).expect("known family");
    let n = n.max(fam.min_order);
    let n = if fam.class.needs_even_order() && n % 2 == 1 { n + 1 } else { n };
    fam.spec(n).expect("valid order")
}

/// A denser spec with all four polynomial degrees above one.
pub fn dense_spec(n: u64) -> BicirculantSpec {
    let n = n.max(8) & !1;
    BicirculantSpec::from_parts(n, vec![1, 3], vec![2], vec![0, 1, 5], true, true).expect("valid spec")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_are_valid() {
        assert_eq!(family_spec(2, 5).n(), 6);
        assert_eq!(dense_spec(9).n(), 8);
    }
}
