//! Summation identities behind the closed forms of `F_{L,u}` and `F_{R,u}⁻¹`,
//! in the commuting variables `x = D⊗1`, `y = 1⊗D`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::arith::{Arith, Symbolic};
use super::IdentityInstance;
use crate::exactalg::DPoly;
use crate::Error;

const X: [i64; 2] = [1, 0];
const Y: [i64; 2] = [0, 1];
const MX: [i64; 2] = [-1, 0];
const MY: [i64; 2] = [0, -1];
const XY: [i64; 2] = [1, 1];
const MXY: [i64; 2] = [-1, -1];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chain {
    /// The eight identities used for `F_{L,u}`, each checked separately.
    L,
    /// The `F_{R,u}⁻¹` chain, checked end to end.
    R,
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chain::L => "L-chain",
            Chain::R => "R-chain",
        })
    }
}

impl FromStr for Chain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "L" | "l" | "L-chain" | "lchain" => Ok(Chain::L),
            "R" | "r" | "R-chain" | "rchain" => Ok(Chain::R),
            _ => Err(Error::Parse("chain must be L or R")),
        }
    }
}

fn i(n: u32) -> i64 {
    i64::from(n)
}

struct Builder {
    out: Vec<IdentityInstance>,
}

impl Builder {
    fn push(&mut self, id: &'static str, params: Vec<(&'static str, u32)>, lhs: DPoly, rhs: DPoly) {
        self.out.push(IdentityInstance {
            id,
            params,
            equal: lhs == rhs,
            lhs,
            rhs,
            samples_consistent: true,
        });
    }
}

/// Every instance of the `F_{L,u}` identities with all indices `≤ bound`
/// (`k = k₁+k'+k₂ ≤ bound`, `l = l₁+l₂ ≤ bound`).
pub fn l_chain_instances(bound: u32) -> Vec<IdentityInstance> {
    let mut bld = Builder { out: Vec::new() };
    let ar = Symbolic { legs: 2 };

    // binom(y-1-l₂, l₁) = (-1)^{l₁} binom(-y+l, l₁)
    for l in 0..=bound {
        for l1 in 0..=l {
            let l2 = l - l1;
            let lhs = ar.b(&Y, -1 - i(l2), l1);
            let rhs = ar.mul(&ar.sign(l1), &ar.b(&MY, i(l), l1));
            bld.push("id1", vec![("l1", l1), ("l2", l2)], lhs, rhs);
        }
    }
    // binom(x+y-1, m) = (-1)^m binom(-x-y+m, m), m = k₂+l₂
    for k2 in 0..=bound {
        for l2 in 0..=bound {
            let m = k2 + l2;
            let lhs = ar.b(&XY, -1, m);
            let rhs = ar.mul(&ar.sign(m), &ar.b(&MXY, i(m), m));
            bld.push("id2", vec![("k2", k2), ("l2", l2)], lhs, rhs);
        }
    }
    // binom(-x-y+k₂+l₂, k₂+l₂) binom(k₂+l₂, k₂) = binom(-x-y+k₂+l₂, k₂) binom(-x-y+l₂, l₂)
    for k2 in 0..=bound {
        for l2 in 0..=bound {
            let m = k2 + l2;
            let lhs = ar.mul(&ar.b(&MXY, i(m), m), &ar.b(&[0, 0], i(m), k2));
            let rhs = ar.mul(&ar.b(&MXY, i(m), k2), &ar.b(&MXY, i(l2), l2));
            bld.push("id3", vec![("k2", k2), ("l2", l2)], lhs, rhs);
        }
    }
    // Σ_{k₁+k₂=k-k'} binom(x-1-k+k₁, k₁) binom(-x-y+k₂+l₂, k-k'-k₁)
    //   = binom(-y-k'+l₂, k-k')
    //   = Σ_{k₁+k₂=k-k'} (-1)^{k₁} binom(-x+k, k₁) binom(-x-y+k₂+l₂, k-k'-k₁)
    for k in 0..=bound {
        for kp in 0..=k {
            for l2 in 0..=bound {
                let mut unsigned = ar.zero();
                let mut signed = ar.zero();
                for k1 in 0..=k - kp {
                    let k2 = k - kp - k1;
                    let tail = ar.b(&MXY, i(k2) + i(l2), k2);
                    unsigned = ar.add(&unsigned, &ar.mul(&ar.b(&X, -1 - i(k) + i(k1), k1), &tail));
                    signed = ar.add(&signed, &ar.prod(&[ar.sign(k1), ar.b(&MX, i(k), k1), tail]));
                }
                let closed = ar.b(&MY, i(l2) - i(kp), k - kp);
                let params = vec![("k", k), ("k'", kp), ("l2", l2)];
                bld.push("id4", params.clone(), unsigned, closed.clone());
                bld.push("id4'", params, signed, closed);
            }
        }
    }
    // binom(-y+l, l₁) binom(-y+l₂, k') = binom(-y+l, k') binom(-y+l-k', l₁)
    for l in 0..=bound {
        for l1 in 0..=l {
            let l2 = l - l1;
            for kp in 0..=bound {
                let lhs = ar.mul(&ar.b(&MY, i(l), l1), &ar.b(&MY, i(l2), kp));
                let rhs = ar.mul(&ar.b(&MY, i(l), kp), &ar.b(&MY, i(l) - i(kp), l1));
                bld.push("id5", vec![("l1", l1), ("l2", l2), ("k'", kp)], lhs, rhs);
            }
        }
    }
    // binom(-y-k'+l₂, k-k') binom(-y+l-k', l₁) = binom(-y+l-k', k-k') binom(-y+l-k, l₁)
    for k in 0..=bound {
        for kp in 0..=k {
            for l in 0..=bound {
                for l1 in 0..=l {
                    let l2 = l - l1;
                    let lhs = ar.mul(
                        &ar.b(&MY, i(l2) - i(kp), k - kp),
                        &ar.b(&MY, i(l) - i(kp), l1),
                    );
                    let rhs = ar.mul(
                        &ar.b(&MY, i(l) - i(kp), k - kp),
                        &ar.b(&MY, i(l) - i(k), l1),
                    );
                    let params = vec![("k", k), ("k'", kp), ("l1", l1), ("l2", l2)];
                    bld.push("id6", params, lhs, rhs);
                }
            }
        }
    }
    // Σ_{l₁+l₂=l} (-1)^{l₁} binom(-y+l-k, l₁) binom(-x-y+l₂, l₂) = binom(-x+k, l)
    for k in 0..=bound {
        for l in 0..=bound {
            let mut lhs = ar.zero();
            for l1 in 0..=l {
                let l2 = l - l1;
                lhs = ar.add(
                    &lhs,
                    &ar.prod(&[
                        ar.sign(l1),
                        ar.b(&MY, i(l) - i(k), l1),
                        ar.b(&MXY, i(l2), l2),
                    ]),
                );
            }
            bld.push("id7", vec![("k", k), ("l", l)], lhs, ar.b(&MX, i(k), l));
        }
    }
    // binom(-y+l-k', k-k') binom(-y+l, k') = binom(k, k') binom(-y+l, k)
    for k in 0..=bound {
        for kp in 0..=k {
            for l in 0..=bound {
                let lhs = ar.mul(&ar.b(&MY, i(l) - i(kp), k - kp), &ar.b(&MY, i(l), kp));
                let rhs = ar.mul(&ar.b(&[0, 0], i(k), kp), &ar.b(&MY, i(l), k));
                bld.push("idz", vec![("k", k), ("k'", kp), ("l", l)], lhs, rhs);
            }
        }
    }
    bld.out
}

/// `Σ_{k₁+k₂=k-k', l₁+l₂=l} (-1)^{k₁+l₁} binom(x,k₁) binom(y,l₁) binom(y-l₁,k')
/// binom(x+y-(k'+k₁+l₁), k₂+l₂) binom(k₂+l₂, k₂) = binom(k,k') binom(x,l) binom(y,k)`
/// for `k, l ≤ bound`, `k' ≤ k`.
pub fn r_chain_instances(bound: u32) -> Vec<IdentityInstance> {
    let ar = Symbolic { legs: 2 };
    let mut bld = Builder { out: Vec::new() };
    for k in 0..=bound {
        for kp in 0..=k {
            for l in 0..=bound {
                let mut lhs = ar.zero();
                for k1 in 0..=k - kp {
                    let k2 = k - kp - k1;
                    for l1 in 0..=l {
                        let l2 = l - l1;
                        let term = ar.prod(&[
                            ar.sign(k1 + l1),
                            ar.b(&X, 0, k1),
                            ar.b(&Y, 0, l1),
                            ar.b(&Y, -i(l1), kp),
                            ar.b(&XY, -i(kp + k1 + l1), k2 + l2),
                            ar.b(&[0, 0], i(k2 + l2), k2),
                        ]);
                        lhs = ar.add(&lhs, &term);
                    }
                }
                let rhs = ar.prod(&[ar.b(&[0, 0], i(k), kp), ar.b(&X, 0, l), ar.b(&Y, 0, k)]);
                bld.push("rchain", vec![("k", k), ("k'", kp), ("l", l)], lhs, rhs);
            }
        }
    }
    bld.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Rational;
    use alloc::string::ToString;

    #[test]
    fn idz_sample_value() {
        // y = 0, l = 2, k = 1, k' = 0: binom(2,1) binom(2,0) = binom(1,0) binom(2,1) = 2
        let inst = l_chain_instances(2)
            .into_iter()
            .find(|c| c.id == "idz" && c.params == vec![("k", 1), ("k'", 0), ("l", 2)])
            .unwrap();
        let at = [Rational::zero(), Rational::zero()];
        let two = Rational::from(2);
        assert_eq!(inst.lhs.evaluate(&at, &Rational::zero()).unwrap(), two);
        assert_eq!(inst.rhs.evaluate(&at, &Rational::zero()).unwrap(), two);
    }

    #[test]
    fn id1_trivial_at_l1_zero() {
        for c in l_chain_instances(3)
            .iter()
            .filter(|c| c.id == "id1" && c.params[0].1 == 0)
        {
            assert!(c.lhs.is_one() && c.rhs.is_one());
        }
    }

    #[test]
    fn chain_ids() {
        assert_eq!("lchain".parse::<Chain>().unwrap(), Chain::L);
        assert_eq!(Chain::R.to_string(), "R-chain");
        assert!("M".parse::<Chain>().is_err());
    }
}
