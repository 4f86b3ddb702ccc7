//! One-pass post-state verifiers used by tests and the benchmark harness's
//! contract checking. These compare elements directly and are never counted.

use crate::select::SelectionResult;

/// Verify the strict selection post-state: `x_i < x_k` left of `k_minus`,
/// equality on `[k_minus, k_plus]`, `x_i > x_k` right of `k_plus`.
pub fn check_equal_range<T: PartialOrd>(
    x: &[T],
    l: usize,
    r: usize,
    k: usize,
    res: &SelectionResult,
) -> Result<(), String> {
    if !(l <= res.k_minus && res.k_minus <= k && k <= res.k_plus && res.k_plus <= r) {
        return Err(format!(
            "equal range [{}, {}] does not bracket k={k} within [{l}, {r}]",
            res.k_minus, res.k_plus
        ));
    }
    let pivot = &x[k - 1];
    for i in l..=r {
        let e = &x[i - 1];
        let ok = if i < res.k_minus {
            e < pivot
        } else if i <= res.k_plus {
            e == pivot
        } else {
            e > pivot
        };
        if !ok {
            return Err(format!("selection post-state violated at position {i}"));
        }
    }
    Ok(())
}

/// Verify the weak post-state: `x_i <= x_k` for `i < k`, `x_i >= x_k` for
/// `i > k`.
pub fn check_weak_order<T: PartialOrd>(
    x: &[T],
    l: usize,
    r: usize,
    k: usize,
) -> Result<(), String> {
    let pivot = &x[k - 1];
    for i in l..=r {
        let e = &x[i - 1];
        let ok = if i < k {
            e <= pivot
        } else if i > k {
            e >= pivot
        } else {
            true
        };
        if !ok {
            return Err(format!("weak post-state violated at position {i}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_range_accepts_and_rejects() {
        let x = [1, 2, 2, 3];
        let good = SelectionResult { k_minus: 2, k_plus: 3 };
        assert!(check_equal_range(&x, 1, 4, 2, &good).is_ok());
        let bad = SelectionResult { k_minus: 2, k_plus: 2 };
        assert!(check_equal_range(&x, 1, 4, 2, &bad).is_err());
    }

    #[test]
    fn weak_order_accepts_and_rejects() {
        assert!(check_weak_order(&[1, 2, 2, 4], 1, 4, 2).is_ok());
        assert!(check_weak_order(&[3, 2, 1], 1, 3, 2).is_err());
    }
}
