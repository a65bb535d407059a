//! Finite Laurent polynomials in `e^w` and exact division by `1 − e^{−α}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::weight::Weight;

pub(crate) type Laurent = HashMap<Weight, i64>;

pub(crate) fn add_into(p: &mut Laurent, w: Weight, k: i64) {
    if k == 0 {
        return;
    }
    let slot = p.entry(w.clone()).or_insert(0);
    *slot += k;
    if *slot == 0 {
        p.remove(&w);
    }
}

pub(crate) fn multiply(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out = Laurent::new();
    for (x, c) in a {
        for (y, d) in b {
            add_into(&mut out, x + y, c * d);
        }
    }
    out
}

/// Solves `q · (1 − e^{−α}) = p` for a finite `q`.
///
/// Along each α-string `q(x) = Σ_{k≥0} p(x + kα)`; the division is exact iff
/// every string sums to zero.
pub(crate) fn divide_one_minus(p: &Laurent, alpha: &Weight) -> Result<Laurent> {
    let a = alpha.twice();
    let pivot = a
        .iter()
        .position(|&c| c != 0)
        .ok_or_else(|| Error::Internal("division by 1 − e^0".into()))?;
    let step = a[pivot];
    if step < 0 {
        return divide_one_minus(p, &(-alpha)).map(|q| {
            // with β = −α: 1 − e^{−α} = −e^{β}(1 − e^{−β})
            q.into_iter().map(|(w, k)| (&w + alpha, -k)).collect()
        });
    }

    let mut strings: HashMap<Weight, Vec<(i64, i64)>> = HashMap::new();
    for (x, &c) in p {
        let t = x.twice()[pivot].div_euclid(step);
        strings.entry(x - &(alpha * t)).or_default().push((t, c));
    }

    let mut q = Laurent::new();
    for (base, mut points) in strings {
        points.sort_unstable_by_key(|p| std::cmp::Reverse(p.0));
        let top = points[0].0;
        let bottom = points[points.len() - 1].0;
        let mut cursor = points.iter().peekable();
        let mut running = 0i64;
        for s in (bottom..=top).rev() {
            while let Some(&&(t, c)) = cursor.peek() {
                if t != s {
                    break;
                }
                running += c;
                cursor.next();
            }
            if running != 0 {
                q.insert(&base + &(alpha * s), running);
            }
        }
        if running != 0 {
            return Err(Error::Internal(format!(
                "inexact division by 1 - e^-({alpha})"
            )));
        }
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn divides_geometric_difference() {
        // (1 − e^{−3α}) / (1 − e^{−α}) = 1 + e^{−α} + e^{−2α}
        let alpha = w(&[0, 1, -1]);
        let mut p = Laurent::new();
        p.insert(w(&[0, 0, 0]), 1);
        p.insert(&w(&[0, 0, 0]) - &(&alpha * 3), -1);
        let q = divide_one_minus(&p, &alpha).unwrap();
        assert_eq!(q.len(), 3);
        for k in 0..3 {
            assert_eq!(q[&(&w(&[0, 0, 0]) - &(&alpha * k))], 1);
        }
        let back = multiply(&q, &HashMap::from([(w(&[0, 0, 0]), 1), (-&alpha, -1)]));
        assert_eq!(back, p);
    }

    #[test]
    fn rejects_inexact() {
        let p = Laurent::from([(w(&[0, 0, 0]), 1)]);
        assert!(divide_one_minus(&p, &w(&[0, 1, 0])).is_err());
    }

    #[test]
    fn negative_root_direction() {
        let alpha = w(&[0, -1, 0]);
        let p = Laurent::from([(w(&[0, 0, 0]), 1), (w(&[0, 1, 0]), -1)]);
        let q = divide_one_minus(&p, &alpha).unwrap();
        let back = multiply(&q, &HashMap::from([(w(&[0, 0, 0]), 1), (-&alpha, -1)]));
        assert_eq!(back, p);
    }
}
