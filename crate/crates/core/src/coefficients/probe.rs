//! Sampled checks of the reduction-ring axioms.
//!
//! * A1: every reduction chain terminates within the domain's step bound.
//! * A2: every step `a ==>_b c` satisfies `a - c = q * b`.
//! * A3: `a ==>_a 0` for `a != 0`.
//! * A4: `a ==>_b` and `b ==>_c d` imply `a ==>_c` or `a ==>_d`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::Domain;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass { checked: usize },
    Fail { counterexample: String },
    NotDeclared,
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, AxiomOutcome::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeReport {
    pub domain: String,
    pub a1: AxiomOutcome,
    pub a2: AxiomOutcome,
    pub a3: AxiomOutcome,
    pub a4: AxiomOutcome,
}

impl ProbeReport {
    pub fn all_passed(&self) -> bool {
        [&self.a1, &self.a2, &self.a3, &self.a4].iter().all(|o| o.passed())
    }
}

fn nonzero<D: Domain>(d: &D, rng: &mut StdRng) -> D::Elem {
    loop {
        let x = d.sample(rng);
        if !d.is_zero(&x) {
            return x;
        }
    }
}

fn reduces<D: Domain>(d: &D, a: &D::Elem, b: &D::Elem) -> Option<D::Elem> {
    if d.is_zero(b) {
        return None;
    }
    d.reduce_step(a, b).ok().flatten().map(|s| s.result)
}

pub fn axiom_probe<D: Domain>(d: &D, samples: usize, seed: u64) -> ProbeReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let show = |x: &D::Elem| d.render(x);

    let mut a1 = AxiomOutcome::Pass { checked: 0 };
    let mut a2 = AxiomOutcome::Pass { checked: 0 };
    let mut a3 = AxiomOutcome::Pass { checked: 0 };
    let mut a4 = if d.declares_a4() { AxiomOutcome::Pass { checked: 0 } } else { AxiomOutcome::NotDeclared };

    let bump = |o: &mut AxiomOutcome| {
        if let AxiomOutcome::Pass { checked } = o {
            *checked += 1;
        }
    };

    for _ in 0..samples {
        let a = d.sample(&mut rng);
        let b = nonzero(d, &mut rng);

        // A2
        if let Ok(Some(s)) = d.reduce_step(&a, &b) {
            if d.sub(&a, &s.result) != d.mul(&s.quotient, &b) {
                if a2.passed() {
                    a2 = AxiomOutcome::Fail {
                        counterexample: format!("{} ==>_{} {} with q = {}", show(&a), show(&b), show(&s.result), show(&s.quotient)),
                    };
                }
            } else {
                bump(&mut a2);
            }
        }

        // A3
        if !d.is_zero(&a) {
            match reduces(d, &a, &a) {
                Some(c) if d.is_zero(&c) => bump(&mut a3),
                _ => {
                    if a3.passed() {
                        a3 = AxiomOutcome::Fail { counterexample: format!("{} does not reduce to 0 by itself", show(&a)) };
                    }
                }
            }
        }

        // A1: a random-choice chain against a small reducer set
        let n = rng.gen_range(1..=3);
        let reducers: Vec<D::Elem> = (0..n).map(|_| nonzero(d, &mut rng)).collect();
        let bound = d.step_bound(&a, &reducers);
        let mut cur = a.clone();
        let mut len = 0usize;
        loop {
            let options: Vec<D::Elem> = reducers.iter().filter_map(|r| reduces(d, &cur, r)).collect();
            if options.is_empty() {
                bump(&mut a1);
                break;
            }
            cur = options[rng.gen_range(0..options.len())].clone();
            len += 1;
            if len > bound {
                if a1.passed() {
                    a1 = AxiomOutcome::Fail {
                        counterexample: format!("chain from {} exceeds {} steps", show(&a), bound),
                    };
                }
                break;
            }
        }

        // A4
        if !matches!(a4, AxiomOutcome::NotDeclared) {
            let c = nonzero(d, &mut rng);
            if reduces(d, &a, &b).is_some() {
                if let Some(dd) = reduces(d, &b, &c) {
                    let ok = reduces(d, &a, &c).is_some() || reduces(d, &a, &dd).is_some();
                    if ok {
                        bump(&mut a4);
                    } else if a4.passed() {
                        a4 = AxiomOutcome::Fail {
                            counterexample: format!(
                                "a = {}, b = {}, c = {}, d = {}: a ==>_b and b ==>_c d but a is irreducible by c and d",
                                show(&a),
                                show(&b),
                                show(&c),
                                show(&dd)
                            ),
                        };
                    }
                }
            }
        }
    }

    ProbeReport { domain: d.descriptor(), a1, a2, a3, a4 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{Integers, IntegersMod, PrimeField, Rationals};

    #[test]
    fn fields_and_quotients_pass() {
        assert!(axiom_probe(&Rationals, 300, 1).all_passed());
        assert!(axiom_probe(&PrimeField::new(5).unwrap(), 300, 1).all_passed());
        assert!(axiom_probe(&IntegersMod::new(6).unwrap(), 300, 1).all_passed());
        assert!(axiom_probe(&Integers::divisor(), 300, 1).all_passed());
    }

    #[test]
    fn div_rem_passes_first_three() {
        let r = axiom_probe(&Integers::div_rem(), 300, 1);
        assert!(r.a1.passed() && r.a2.passed() && r.a3.passed());
    }
}
