use super::Domain;
use crate::error::{Error, Result};

/// Interreduced Groebner basis of a finitely generated coefficient ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffIdealBasis<E> {
    pub generators: Vec<E>,
    pub basis: Vec<E>,
}

pub fn coeff_ideal_gb<D: Domain>(d: &D, gens: &[D::Elem]) -> CoeffIdealBasis<D::Elem> {
    CoeffIdealBasis { generators: gens.to_vec(), basis: d.ideal_basis(gens) }
}

/// Reduces `a` by `reducers` until no step applies. Reducers of smaller
/// magnitude are tried first, ties broken by input order.
pub fn coeff_normal_form<D: Domain>(d: &D, a: &D::Elem, reducers: &[D::Elem]) -> Result<D::Elem> {
    if reducers.iter().any(|b| d.is_zero(b)) {
        return Err(Error::ZeroReducer);
    }
    let mut order: Vec<usize> = (0..reducers.len()).collect();
    order.sort_by_key(|&i| d.magnitude(&reducers[i]));
    let limit = d.step_bound(a, reducers).saturating_add(1);
    let mut cur = a.clone();
    let mut steps = 0usize;
    'outer: loop {
        for &i in &order {
            if let Some(s) = d.reduce_step(&cur, &reducers[i])? {
                cur = s.result;
                steps += 1;
                if steps > limit {
                    return Err(Error::StepLimit(limit));
                }
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}
