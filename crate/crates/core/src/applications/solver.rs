//! Solutions of `f_1 * x_1 + ... + f_m * x_m = f_0` with right-hand
//! unknowns, assembled from a right Groebner basis `g` of the `f_i`.
//!
//! With `f P = g` and `g Q = f`, every syzygy `z` of `g` yields the
//! solution `P z`, and the columns of `P Q - I` close the set.

use crate::coefficients::Domain;
use crate::completion::{complete, CompletionOptions, Status, Verdict};
use crate::critical::{s_polynomials, saturator};
use crate::error::{Error, Result};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::{normal_form, ReductionSpec, Side, Step};

type Vector<E> = Vec<Poly<E>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet<E> {
    pub basis: Vec<Poly<E>>,
    /// `m x k`: `f P = g`.
    pub p: Vec<Vec<Poly<E>>>,
    /// `k x m`: `g Q = f`.
    pub q: Vec<Vec<Poly<E>>>,
    pub particular: Option<Vector<E>>,
    /// Generators of the homogeneous solutions as a right module.
    pub generators: Vec<Vector<E>>,
    /// Every critical situation was enumerated and the basis certified.
    pub complete: bool,
}

struct Ctx<'a, D: Domain> {
    ring: &'a FunctionRing<D>,
    k: usize,
}

impl<D: Domain> Ctx<'_, D> {
    fn zeros(&self, n: usize) -> Vector<D::Elem> {
        vec![Poly::zero(); n]
    }

    fn mult(&self, c: &D::Elem, right: Option<&crate::terms::Term>) -> Result<Poly<D::Elem>> {
        let t = match right {
            Some(r) => self.ring.term(r.clone()),
            None => self.ring.one()?,
        };
        Ok(self.ring.scale(&t, c))
    }

    /// The cofactor vector of a right reduction trace.
    fn trace(&self, steps: &[Step<D::Elem>]) -> Result<Vector<D::Elem>> {
        let mut v = self.zeros(self.k);
        for st in steps {
            if st.left.is_some() {
                return Err(Error::Unsupported("left multipliers in a right-sided trace".into()));
            }
            v[st.reducer] = self.ring.add(&v[st.reducer], &self.mult(&st.coeff, st.right.as_ref())?);
        }
        Ok(v)
    }

    fn apply(&self, p: &[Vec<Poly<D::Elem>>], z: &[Poly<D::Elem>]) -> Vector<D::Elem> {
        p.iter()
            .map(|row| row.iter().zip(z).fold(Poly::zero(), |acc, (a, b)| self.ring.add(&acc, &self.ring.mul(a, b))))
            .collect()
    }
}

/// `sum f_i * x_i`.
pub fn evaluate<D: Domain>(ring: &FunctionRing<D>, fs: &[Poly<D::Elem>], x: &[Poly<D::Elem>]) -> Poly<D::Elem> {
    fs.iter().zip(x).fold(Poly::zero(), |acc, (f, y)| ring.add(&acc, &ring.mul(f, y)))
}

pub fn solve_linear<D: Domain>(
    ring: &FunctionRing<D>,
    fs: &[Poly<D::Elem>],
    f0: &Poly<D::Elem>,
    options: CompletionOptions,
) -> Result<SolutionSet<D::Elem>> {
    let opts = CompletionOptions { side: Side::Right, ..options };
    let spec = ReductionSpec::right();
    let c = complete(ring, fs, opts);
    let g = c.basis();
    let (m, k) = (fs.len(), g.len());
    let cx = Ctx { ring, k };
    let mut complete_flag = c.status == Status::Complete && c.certificate.verdict == Verdict::Pass;

    let mut p = vec![cx.zeros(k); m];
    for l in 0..k {
        for t in c.provenance(l).terms {
            if t.left.is_some() {
                return Err(Error::Unsupported("left multipliers in a right-sided trace".into()));
            }
            p[t.index][l] = ring.add(&p[t.index][l], &cx.mult(&t.coeff, t.right.as_ref())?);
        }
    }
    let mut q = vec![cx.zeros(m); k];
    for (j, f) in fs.iter().enumerate() {
        let nf = normal_form(ring, f, &g, spec, opts.step_budget);
        if !nf.poly.is_zero() {
            return Err(Error::Invalid("a generator does not reduce to zero by the basis".into()));
        }
        for (l, y) in cx.trace(&nf.steps)?.into_iter().enumerate() {
            q[l][j] = y;
        }
    }

    let nf0 = normal_form(ring, f0, &g, spec, opts.step_budget);
    let particular = if nf0.poly.is_zero() { Some(cx.apply(&p, &cx.trace(&nf0.steps)?)) } else { None };

    let mut syzygies: Vec<Vector<D::Elem>> = Vec::new();
    for i in 0..k {
        let sat = saturator(ring, &g[i], Side::Right, opts.bound);
        complete_flag &= sat.complete;
        for e in sat.elements.iter().skip(1) {
            let nf = normal_form(ring, &e.poly, &g, spec, opts.step_budget);
            if !nf.poly.is_zero() {
                complete_flag = false;
                continue;
            }
            let mut z = cx.trace(&nf.steps)?.into_iter().map(|y| ring.neg(&y)).collect::<Vec<_>>();
            z[i] = ring.add(&z[i], &cx.mult(&ring.domain.one(), e.right.as_ref())?);
            syzygies.push(z);
        }
        for l in i..k {
            let sp = s_polynomials(ring, &g[i], &g[l], Side::Right);
            complete_flag &= sp.complete;
            for s in sp.items {
                let nf = normal_form(ring, &s.value, &g, spec, opts.step_budget);
                if !nf.poly.is_zero() {
                    complete_flag = false;
                    continue;
                }
                let mut z = cx.trace(&nf.steps)?.into_iter().map(|y| ring.neg(&y)).collect::<Vec<_>>();
                z[i] = ring.add(&z[i], &cx.mult(&s.a1, s.m1.1.as_ref())?);
                z[l] = ring.add(&z[l], &cx.mult(&s.a2, s.m2.1.as_ref())?);
                syzygies.push(z);
            }
        }
    }

    let mut generators: Vec<Vector<D::Elem>> = Vec::new();
    let mut push = |v: Vector<D::Elem>| {
        if v.iter().any(|x| !x.is_zero()) && !generators.contains(&v) {
            generators.push(v);
        }
    };
    for z in &syzygies {
        push(cx.apply(&p, z));
    }
    for j in 0..m {
        let col: Vector<D::Elem> = (0..k).map(|l| q[l][j].clone()).collect();
        let mut v = cx.apply(&p, &col);
        v[j] = ring.sub(&v[j], &ring.one()?);
        push(v);
    }

    for x in &generators {
        if !evaluate(ring, fs, x).is_zero() {
            return Err(Error::Invalid("homogeneous generator does not replay".into()));
        }
    }
    if let Some(x) = &particular {
        if evaluate(ring, fs, x) != *f0 {
            return Err(Error::Invalid("particular solution does not replay".into()));
        }
    }
    Ok(SolutionSet { basis: g, p, q, particular, generators, complete: complete_flag })
}
