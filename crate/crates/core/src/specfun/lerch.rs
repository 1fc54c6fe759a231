//! Lerch transcendent at nonpositive integer order, `Φ(z, 1−j, 0)`.

use crate::error::{Result, UmbraError};
use crate::umbral_core::Number;

/// Eulerian numbers `E(n, m)`, m = 0..n−1, as exact integers.
fn eulerian_row(n: u32) -> Vec<Number> {
    let mut row = vec![Number::one()];
    for k in 2..=n {
        let mut next = Vec::with_capacity(k as usize);
        for m in 0..k as usize {
            let left = if m < row.len() {
                &Number::int(m as i64 + 1) * &row[m]
            } else {
                Number::zero()
            };
            let right = if m >= 1 {
                &Number::int(k as i64 - m as i64) * &row[m - 1]
            } else {
                Number::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row
}

/// `Φ(z, 1−j, 0) = Σ_{k≥0} z^k k^{j−1}` in closed form:
/// `1/(1−z)` for j = 1 and `z A_{j−1}(z)/(1−z)^j` otherwise, with `A_n` the
/// Eulerian polynomial. Exact for exact z.
pub fn lerch_nonpos(z: &Number, j: u32) -> Result<Number> {
    if j == 0 {
        return Err(UmbraError::Domain("Lerch order index j must be ≥ 1".into()));
    }
    let one_minus = &Number::one() - z;
    if one_minus.is_zero() {
        return Err(UmbraError::pole("Lerch transcendent at z = 1"));
    }
    if j == 1 {
        return Ok(&Number::one() / &one_minus);
    }
    let n = j - 1;
    let mut poly = Number::zero();
    for c in eulerian_row(n).iter().rev() {
        poly = &(&poly * z) + c;
    }
    let denom = one_minus
        .powi(j as i64)
        .ok_or(UmbraError::pole("Lerch transcendent at z = 1"))?;
    Ok(&(z * &poly) / &denom)
}
