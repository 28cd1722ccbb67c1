//! The identity family that the 2-cocycle condition of `F_{L,u}` reduces to,
//! after comparing coefficients of `P^A ⊗ P^B ⊗ P^C`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::{Arith, Point, Symbolic};
use super::IdentityInstance;
use crate::exactalg::Rational;
use crate::Error;

const X: [i64; 3] = [1, 0, 0];
const Y: [i64; 3] = [0, 1, 0];
const Z: [i64; 3] = [0, 0, 1];
const XY: [i64; 3] = [1, 1, 0];
const YZ: [i64; 3] = [0, 1, 1];

/// Random integer points evaluated per instance.
pub const SAMPLE_POINTS: usize = 20;

fn i(n: u32) -> i64 {
    i64::from(n)
}

/// `binom(x, l-C) Σ_{k₁=0}^{A} binom(y,k₁) binom(x+y-k₁+C-l, C) binom(k-k₁, k-A) binom(z, k-k₁)`
pub(crate) fn lhs<R: Arith>(ar: &R, k: u32, l: u32, a: u32, c: u32) -> R::V {
    let mut sum = ar.zero();
    for k1 in 0..=a {
        let term = ar.prod(&[
            ar.b(&Y, 0, k1),
            ar.b(&XY, i(c) - i(l) - i(k1), c),
            ar.int(binom_int(k - k1, k - a)),
            ar.b(&Z, 0, k - k1),
        ]);
        sum = ar.add(&sum, &term);
    }
    ar.mul(&ar.b(&X, 0, l - c), &sum)
}

/// `binom(z, k-A) Σ_{l₁=0}^{C} binom(x, l-l₁) binom(y, l₁) binom(y+z-l₁+A-k, A) binom(l-l₁, l-C)`
pub(crate) fn rhs<R: Arith>(ar: &R, k: u32, l: u32, a: u32, c: u32) -> R::V {
    let mut sum = ar.zero();
    for l1 in 0..=c {
        let term = ar.prod(&[
            ar.b(&X, 0, l - l1),
            ar.b(&Y, 0, l1),
            ar.b(&YZ, i(a) - i(k) - i(l1), a),
            ar.int(binom_int(l - l1, l - c)),
        ]);
        sum = ar.add(&sum, &term);
    }
    ar.mul(&ar.b(&Z, 0, k - a), &sum)
}

/// Left side after `k₁ ↦ k - k₁`; the sum runs over `k-A ≤ k₁ ≤ k`.
pub(crate) fn lhs_shifted<R: Arith>(ar: &R, k: u32, l: u32, a: u32, c: u32) -> R::V {
    let mut sum = ar.zero();
    for k1 in (k - a)..=k {
        let term = ar.prod(&[
            ar.b(&Y, 0, k - k1),
            ar.b(&XY, i(c) - i(l) - (i(k) - i(k1)), c),
            ar.int(binom_int(k1, k - a)),
            ar.b(&Z, 0, k1),
        ]);
        sum = ar.add(&sum, &term);
    }
    ar.mul(&ar.b(&X, 0, l - c), &sum)
}

/// Right side after `l₁ ↦ l - l₁`; the sum runs over `l-C ≤ l₁ ≤ l`.
pub(crate) fn rhs_shifted<R: Arith>(ar: &R, k: u32, l: u32, a: u32, c: u32) -> R::V {
    let mut sum = ar.zero();
    for l1 in (l - c)..=l {
        let term = ar.prod(&[
            ar.b(&X, 0, l1),
            ar.b(&Y, 0, l - l1),
            ar.b(&YZ, i(a) - i(k) - (i(l) - i(l1)), a),
            ar.int(binom_int(l1, l - c)),
        ]);
        sum = ar.add(&sum, &term);
    }
    ar.mul(&ar.b(&Z, 0, k - a), &sum)
}

fn binom_int(n: u32, k: u32) -> i64 {
    Rational::binomial(n, k)
        .to_i64()
        .expect("small binomial fits in i64")
}

fn check_bounds(k: u32, l: u32, a: u32, c: u32) -> Result<(), Error> {
    if a > k || c > l {
        return Err(Error::Bounds("bigident needs 0 <= A <= k and 0 <= C <= l"));
    }
    Ok(())
}

fn params(k: u32, l: u32, a: u32, c: u32) -> Vec<(&'static str, u32)> {
    vec![("k", k), ("l", l), ("A", a), ("C", c)]
}

/// Builds both sides as polynomials in `x, y, z` and compares them exactly,
/// then evaluates the formula directly at [`SAMPLE_POINTS`] random integer
/// points (seeded by the parameters) and checks that both polynomials
/// reproduce those values.
pub fn verify_bigident(k: u32, l: u32, a: u32, c: u32) -> Result<IdentityInstance, Error> {
    check_bounds(k, l, a, c)?;
    let sym = Symbolic { legs: 3 };
    let left = lhs(&sym, k, l, a, c);
    let right = rhs(&sym, k, l, a, c);
    let equal = left == right;

    let seed = u64::from(k) << 48 | u64::from(l) << 32 | u64::from(a) << 16 | u64::from(c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero_u = Rational::zero();
    let mut consistent = true;
    for _ in 0..SAMPLE_POINTS {
        let values: Vec<Rational> = (0..3)
            .map(|_| Rational::from(rng.gen_range(-12i64..=12)))
            .collect();
        let pt = Point { values };
        let lv = lhs(&pt, k, l, a, c);
        let rv = rhs(&pt, k, l, a, c);
        consistent &= left.evaluate(&pt.values, &zero_u)? == lv;
        consistent &= right.evaluate(&pt.values, &zero_u)? == rv;
        if equal {
            consistent &= lv == rv;
        }
    }
    Ok(IdentityInstance {
        id: "bigident",
        params: params(k, l, a, c),
        lhs: left,
        rhs: right,
        equal,
        samples_consistent: consistent,
    })
}

/// Each side against its index-shifted rewrite; the pair passes iff the
/// interchange `k₁ ↦ k-k₁`, `l₁ ↦ l-l₁` leaves both sides unchanged.
pub fn verify_bigident_shift(
    k: u32,
    l: u32,
    a: u32,
    c: u32,
) -> Result<[IdentityInstance; 2], Error> {
    check_bounds(k, l, a, c)?;
    let sym = Symbolic { legs: 3 };
    let make = |id, lhs: crate::exactalg::DPoly, rhs| IdentityInstance {
        id,
        params: params(k, l, a, c),
        equal: lhs == rhs,
        lhs,
        rhs,
        samples_consistent: true,
    };
    Ok([
        make(
            "bigident-shift-left",
            lhs(&sym, k, l, a, c),
            lhs_shifted(&sym, k, l, a, c),
        ),
        make(
            "bigident-shift-right",
            rhs(&sym, k, l, a, c),
            rhs_shifted(&sym, k, l, a, c),
        ),
    ])
}

/// All `(k, l, A, C)` with `k, l ≤ bound`, `A ≤ k`, `C ≤ l`, in lexicographic order.
pub fn bigident_params(bound: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for k in 0..=bound {
        for l in 0..=bound {
            for a in 0..=k {
                for c in 0..=l {
                    out.push([k, l, a, c]);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::DPoly;

    #[test]
    fn trivial_instances() {
        let inst = verify_bigident(0, 0, 0, 0).unwrap();
        assert!(inst.passed());
        assert!(inst.lhs.is_one());
        let inst = verify_bigident(1, 0, 0, 0).unwrap();
        assert!(inst.passed());
        assert_eq!(inst.lhs, DPoly::var(3, 2));
    }

    #[test]
    fn out_of_bounds() {
        assert!(matches!(verify_bigident(1, 1, 2, 0), Err(Error::Bounds(_))));
        assert!(matches!(verify_bigident(1, 1, 0, 2), Err(Error::Bounds(_))));
    }

    #[test]
    fn small_bound_exhaustive() {
        for [k, l, a, c] in bigident_params(2) {
            let inst = verify_bigident(k, l, a, c).unwrap();
            assert!(inst.passed(), "{inst:?}");
            for s in verify_bigident_shift(k, l, a, c).unwrap() {
                assert!(s.equal, "{s:?}");
            }
        }
    }
}
