//! Clearing constants: the smallest positive rational `ℓ` that turns every
//! eigenstep into a nonnegative integer.
//!
//! Each entry is first snapped to the rational with the smallest denominator
//! inside `[x - tol, x + tol]`, found from the continued fraction expansions
//! of the interval endpoints.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::gt::{GtPattern, GtShape, IntPattern};
use crate::spectral::eigensteps::{EigenstepForm, EigenstepTable};

/// A clearing constant together with the integer pattern `ℓ · table`.
#[derive(Debug, Clone, PartialEq)]
pub struct Clearing {
    pub scale: BigRational,
    pub pattern: IntPattern,
}

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite value")
}

/// The rational with the smallest denominator in `[lo, hi]` (`0 <= lo <= hi`).
fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    let floor = lo.floor();
    if &floor == lo {
        return floor;
    }
    let next = &floor + BigRational::one();
    if &next <= hi {
        return next;
    }
    // lo and hi share the integer part: recurse on the reciprocals of the
    // fractional parts, which swaps their order.
    let tail = simplest_between(&(hi - &floor).recip(), &(lo - &floor).recip());
    floor + tail.recip()
}

/// The simplest rational within `tol` of `x`, clipped to nonnegative values.
/// `None` when `x` is farther than `tol` below zero.
pub fn simplest_rational_within(x: f64, tol: f64) -> Option<BigRational> {
    let hi = exact(x + tol);
    if hi.is_negative() {
        return None;
    }
    let lo = exact(x - tol).max(BigRational::zero());
    Some(simplest_between(&lo, &hi))
}

/// Closest rational to `x` with denominator at most `max_den`.
pub fn best_approximation(x: f64, max_den: u64) -> BigRational {
    let target = exact(x);
    let max_den = BigInt::from(max_den.max(1));
    let (mut p0, mut q0, mut p1, mut q1) =
        (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let (mut num, mut den) = (target.numer().clone(), target.denom().clone());
    loop {
        let (a, rem) = num.div_mod_floor(&den);
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        if rem.is_zero() {
            return BigRational::new(p1, q1);
        }
        num = std::mem::replace(&mut den, rem);
    }
    let k = (&max_den - &q0) / &q1;
    let semi = BigRational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let convergent = BigRational::new(p1, q1);
    if (&semi - &target).abs() < (&convergent - &target).abs() {
        semi
    } else {
        convergent
    }
}

/// Finds the smallest positive `ℓ` making `ℓ · entry` a nonnegative integer
/// for every entry, after snapping each entry to a rational with denominator
/// at most `max_den` within `tol`. Inner tables clear to triangular patterns,
/// outer tables to parallelogram ones. An all-zero table has `ℓ = 1`.
pub fn clear(table: &EigenstepTable, max_den: u64, tol: f64) -> Result<Clearing> {
    let limit = BigInt::from(max_den);
    let mut exact_rows: Vec<Vec<BigRational>> = Vec::with_capacity(table.rows().len());
    let mut worst: Option<Error> = None;
    let mut worst_error = -1.0;

    for (i, row) in table.rows().iter().enumerate() {
        let mut exact_row = Vec::with_capacity(row.len());
        for (j, &x) in row.iter().enumerate() {
            match simplest_rational_within(x, tol).filter(|r| r.denom() <= &limit) {
                Some(r) => exact_row.push(r),
                None => {
                    let best = best_approximation(x, max_den).max(BigRational::zero());
                    let error = (x - best.to_f64().unwrap_or(f64::NAN)).abs();
                    if error > worst_error {
                        worst_error = error;
                        worst = Some(Error::NotClearable {
                            row: i + 1,
                            col: j + 1,
                            value: x,
                            best: best.to_string(),
                            error,
                            max_den,
                        });
                    }
                }
            }
        }
        exact_rows.push(exact_row);
    }
    if let Some(err) = worst {
        return Err(err);
    }

    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    for r in exact_rows.iter().flatten().filter(|r| !r.is_zero()) {
        den_lcm = den_lcm.lcm(r.denom());
        num_gcd = num_gcd.gcd(r.numer());
    }
    let scale = if num_gcd.is_zero() {
        BigRational::one()
    } else {
        BigRational::new(den_lcm, num_gcd)
    };

    let rows = exact_rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|r| {
                    let scaled = r * &scale;
                    debug_assert!(scaled.is_integer());
                    scaled.to_integer().to_i64().ok_or_else(|| {
                        Error::Precondition(format!("cleared entry {scaled} overflows i64"))
                    })
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let shape = match table.form() {
        EigenstepForm::Inner => GtShape::Triangular,
        EigenstepForm::Outer => GtShape::Parallelogram,
    };
    Ok(Clearing { scale, pattern: GtPattern::new(shape, rows) })
}
