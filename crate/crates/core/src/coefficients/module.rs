//! Submodules of `Z^k` with reduction at the pivot (first nonzero)
//! coordinate of the reducer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{ext_gcd_all, Domain, Integers};
use crate::error::{Error, Result};

fn check_lengths(vs: &[Vec<BigInt>]) -> Result<usize> {
    let k = vs.first().map_or(0, |v| v.len());
    for v in vs {
        if v.len() != k {
            return Err(Error::MixedLength(k, v.len()));
        }
    }
    Ok(k)
}

fn pivot(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// One step of `a` by `b` at the pivot coordinate of `b`.
pub fn module_reduce_step(a: &[BigInt], b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if a.len() != b.len() {
        return Err(Error::MixedLength(a.len(), b.len()));
    }
    let Some(s) = pivot(b) else {
        return Err(Error::ZeroReducer);
    };
    let Some(step) = Integers::div_rem().reduce_step(&a[s], &b[s])? else {
        return Ok(None);
    };
    Ok(Some(a.iter().zip(b).map(|(x, y)| x - &step.quotient * y).collect()))
}

pub fn module_normal_form(a: &[BigInt], basis: &[Vec<BigInt>]) -> Result<Vec<BigInt>> {
    let mut cur = a.to_vec();
    'outer: loop {
        for b in basis {
            if let Some(next) = module_reduce_step(&cur, b)? {
                cur = next;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// Groebner basis of the submodule generated by `vs`: the first-coordinate
/// gcd lifted through its cofactors, followed by a basis of the residual
/// submodule with zero first coordinate.
pub fn module_gb(vs: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let k = check_lengths(vs)?;
    if k == 0 {
        return Ok(vec![]);
    }
    let firsts: Vec<BigInt> = vs.iter().map(|v| v[0].clone()).collect();
    let (g, cof) = ext_gcd_all(&firsts);
    let mut out = Vec::new();
    let residuals: Vec<Vec<BigInt>> = if g.is_zero() {
        vs.to_vec()
    } else {
        let mut c = vec![BigInt::zero(); k];
        for (v, f) in vs.iter().zip(&cof) {
            for (ci, vi) in c.iter_mut().zip(v) {
                *ci += f * vi;
            }
        }
        let rs = vs
            .iter()
            .map(|v| {
                let t = v[0].div_floor(&g);
                v.iter().zip(&c).map(|(x, y)| x - &t * y).collect()
            })
            .collect();
        out.push(c);
        rs
    };
    let tails: Vec<Vec<BigInt>> =
        residuals.iter().filter(|r| r.iter().any(|x| !x.is_zero())).map(|r| r[1..].to_vec()).collect();
    if k > 1 && !tails.is_empty() {
        for t in module_gb(&tails)? {
            let mut v = vec![BigInt::zero()];
            v.extend(t);
            out.push(v);
        }
    }
    // reduce entries above later pivots into their canonical residues
    for i in 0..out.len() {
        for j in (i + 1)..out.len() {
            let s = pivot(&out[j]).expect("nonzero");
            let step = Integers::div_rem().reduce_step(&out[i][s], &out[j][s])?;
            if let Some(step) = step {
                let b = out[j].clone();
                for (x, y) in out[i].iter_mut().zip(&b) {
                    *x -= &step.quotient * y;
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn echelon_basis() {
        let g = module_gb(&[v(&[2, 1]), v(&[3, 0])]).unwrap();
        assert_eq!(g, vec![v(&[1, 2]), v(&[0, 3])]);
        assert_eq!(module_normal_form(&v(&[5, 5]), &g).unwrap(), v(&[0, 1]));
    }

    #[test]
    fn errors() {
        assert_eq!(module_gb(&[v(&[1, 2]), v(&[1])]), Err(Error::MixedLength(2, 1)));
        assert_eq!(module_reduce_step(&v(&[1]), &v(&[0])), Err(Error::ZeroReducer));
    }
}
