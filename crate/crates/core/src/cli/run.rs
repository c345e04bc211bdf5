//! Command execution.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde_json::Value;

use super::output::Record;
use super::session::{AnyRing, Cmd, HandArg, ItemKind, Located, Session, SetKey, SetRef};
use crate::applications::{
    intersect, inverse_element, radical_member, solve_linear, Answer, Hand, Ideal, PolyMap,
};
use crate::coefficients::{axiom_probe, coeff_ideal_gb, coeff_normal_form, module_gb, AxiomOutcome, Domain};
use crate::completion::{fmt_rep, is_groebner, CompletionOptions, Status, Verdict, DEFAULT_BUDGET};
use crate::critical::{s_polynomials, saturation_check, saturator};
use crate::error::{Error, Result};
use crate::polys::{FunctionRing, Poly};
use crate::reduction::{normal_form, ReductionSpec, Side, DEFAULT_STEP_BUDGET};

/// Budgets and seed in effect; `set` lines change them for later commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub budget: usize,
    pub steps: usize,
    pub bound: usize,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { budget: DEFAULT_BUDGET, steps: DEFAULT_STEP_BUDGET, bound: 4, seed: 0 }
    }
}

type Lets = HashMap<String, Vec<Located>>;

fn answer_name(a: Answer) -> &'static str {
    match a {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unknown => "unknown",
    }
}

fn put_answer(rec: &mut Record, a: Answer) {
    rec.put("answer", answer_name(a));
    if a == Answer::Unknown {
        rec.indeterminate();
    }
}

fn items<'a>(s: &'a SetRef, lets: &'a Lets) -> &'a [Located] {
    match s {
        SetRef::Named(n) => &lets[n],
        SetRef::Inline(v) => v,
    }
}

fn gen_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("f{i}")).collect()
}

struct Ctx<'a, D: Domain> {
    ring: &'a FunctionRing<D>,
    lets: &'a Lets,
    opts: CompletionOptions,
}

impl<D: Domain> Ctx<'_, D> {
    fn poly(&self, l: &Located) -> Result<Poly<D::Elem>> {
        self.ring.parse(&l.text)
    }

    fn set(&self, s: &SetRef) -> Result<Vec<Poly<D::Elem>>> {
        items(s, self.lets).iter().map(|l| self.poly(l)).collect()
    }

    fn ideal(&self, s: &SetRef) -> Result<Ideal<D>> {
        Ok(Ideal::with_options(self.ring, self.set(s)?, self.opts))
    }

    fn list(&self, ps: &[Poly<D::Elem>]) -> Value {
        Value::from(ps.iter().map(|p| self.ring.fmt(p)).collect::<Vec<_>>())
    }

    fn vector(&self, v: &[Poly<D::Elem>]) -> String {
        format!("({})", v.iter().map(|p| self.ring.fmt(p)).collect::<Vec<_>>().join(", "))
    }

    fn put_basis(&self, rec: &mut Record, i: &Ideal<D>) {
        let c = i.completion();
        rec.put("basis", self.list(&c.basis()));
        rec.put("certified", i.certified());
        if !i.certified() {
            rec.indeterminate();
        }
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Complete => "complete",
        Status::BudgetExhausted => "budget exhausted",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Indeterminate => "indeterminate",
    }
}

fn poly_cmd<D: Domain>(cx: &Ctx<'_, D>, cmd: &Cmd, seed: u64, rec: &mut Record) -> Result<()> {
    let ring = cx.ring;
    let side = cx.opts.side;
    match cmd {
        Cmd::Gb(f) => {
            let i = cx.ideal(f)?;
            let c = i.completion();
            rec.put("basis", cx.list(&c.basis()));
            rec.put("status", status_name(c.status));
            rec.put("verdict", verdict_name(c.certificate.verdict));
            rec.put("work", c.work_done);
            if !i.certified() {
                rec.indeterminate();
            }
        }
        Cmd::Member(f, p) => {
            let i = cx.ideal(f)?;
            let m = i.member(&cx.poly(p)?);
            put_answer(rec, m.answer);
            rec.put("normal_form", ring.fmt(&m.normal_form));
            if let Some(rep) = &m.rep {
                rec.put("representation", fmt_rep(ring, rep, &gen_names(i.gens.len())));
            }
        }
        Cmd::Represent(f, p) => {
            let i = cx.ideal(f)?;
            let m = i.member(&cx.poly(p)?);
            put_answer(rec, m.answer);
            match (m.answer, &m.rep) {
                (Answer::Yes, Some(rep)) => rec.put("representation", fmt_rep(ring, rep, &gen_names(i.gens.len()))),
                (Answer::Yes, None) => rec.fail("no representation was recorded"),
                _ => rec.put("normal_form", ring.fmt(&m.normal_form)),
            }
        }
        Cmd::Nf(f, p) => {
            let gens = cx.set(f)?;
            let spec = ReductionSpec { side, ..ReductionSpec::right() };
            let nf = normal_form(ring, &cx.poly(p)?, &gens, spec, cx.opts.step_budget);
            rec.put("normal_form", ring.fmt(&nf.poly));
            rec.put("steps", nf.steps.len());
            if nf.exhausted {
                rec.indeterminate();
            }
        }
        Cmd::Spol(p, q) => {
            let sp = s_polynomials(ring, &cx.poly(p)?, &cx.poly(q)?, side);
            rec.put("spolys", Value::from(sp.items.iter().map(|s| ring.fmt(&s.value)).collect::<Vec<_>>()));
            rec.put("at", Value::from(sp.items.iter().map(|s| ring.space.fmt_term(&s.term)).collect::<Vec<_>>()));
            rec.put("complete", sp.complete);
            if !sp.complete {
                rec.indeterminate();
            }
        }
        Cmd::Sat(p) => {
            let sat = saturator(ring, &cx.poly(p)?, side, cx.opts.bound);
            rec.put("elements", Value::from(sat.elements.iter().map(|e| ring.fmt(&e.poly)).collect::<Vec<_>>()));
            rec.put(
                "multipliers",
                Value::from(
                    sat.elements
                        .iter()
                        .map(|e| format!("{} . {}", ring.fmt_mult(e.left.as_ref()), ring.fmt_mult(e.right.as_ref())))
                        .collect::<Vec<_>>(),
                ),
            );
            rec.put("complete", sat.complete);
            if !sat.complete {
                rec.indeterminate();
            }
        }
        Cmd::SatCheck(f) => {
            let gens = cx.set(f)?;
            let w = saturation_check(ring, &gens, side, cx.opts.bound);
            let names = gen_names(gens.len());
            rec.put("bound", cx.opts.bound);
            rec.put("saturated", w.is_empty());
            rec.put(
                "witnesses",
                Value::from(
                    w.iter()
                        .map(|x| {
                            let l = x.left.as_ref().map(|t| format!("{} o ", ring.space.fmt_term(t))).unwrap_or_default();
                            let r = x.right.as_ref().map(|t| format!(" o {}", ring.space.fmt_term(t))).unwrap_or_default();
                            format!("{l}{}{r} = {}", names[x.index], ring.fmt(&x.value))
                        })
                        .collect::<Vec<_>>(),
                ),
            );
        }
        Cmd::IsGb(f) => {
            let c = is_groebner(ring, &cx.set(f)?, cx.opts);
            rec.put("verdict", verdict_name(c.verdict));
            rec.put("spolys_checked", c.spolys_checked);
            rec.put("saturators_checked", c.saturators_checked);
            if let Some(w) = &c.witness {
                rec.put("witness", ring.fmt(w));
            }
            if let Some(r) = &c.reason {
                rec.put("reason", r.clone());
            }
            if c.verdict == Verdict::Indeterminate {
                rec.indeterminate();
            }
        }
        Cmd::Include(f, g) => {
            let (f, g) = (cx.ideal(f)?, cx.ideal(g)?);
            put_answer(rec, g.includes(&f));
        }
        Cmd::Equal(f, g) => put_answer(rec, cx.ideal(f)?.equals(&cx.ideal(g)?)),
        Cmd::Trivial(f) => {
            let m = cx.ideal(f)?.trivial()?;
            put_answer(rec, m.answer);
            rec.put("normal_form", ring.fmt(&m.normal_form));
        }
        Cmd::Sum(f, g) => {
            let s = cx.ideal(f)?.sum(&cx.ideal(g)?);
            cx.put_basis(rec, &s);
        }
        Cmd::Product(f, g) => {
            let p = cx.ideal(f)?.product(&cx.ideal(g)?)?;
            rec.put("generators", cx.list(&p.gens));
            cx.put_basis(rec, &p);
        }
        Cmd::Intersect(f, g) => {
            let (k, certified) = intersect(&cx.ideal(f)?, &cx.ideal(g)?)?;
            rec.put("basis", cx.list(&k.gens));
            rec.put("certified", certified);
            if !certified {
                rec.indeterminate();
            }
        }
        Cmd::Radical(f, p) => {
            let m = radical_member(&cx.poly(p)?, &cx.ideal(f)?)?;
            put_answer(rec, m.answer);
        }
        Cmd::Inverse { poly, hand, modulo } => {
            let hand = match hand {
                HandArg::Right => Hand::Right,
                HandArg::Left => Hand::Left,
            };
            let m = modulo.as_ref().map(|s| cx.ideal(s)).transpose()?;
            let r = inverse_element(ring, &cx.poly(poly)?, m.as_ref(), hand, cx.opts)?;
            put_answer(rec, r.answer);
            if let Some(g) = &r.inverse {
                rec.put("inverse", ring.fmt(g));
            }
        }
        Cmd::Quotient(f, n) => {
            let i = cx.ideal(f)?;
            let t = i.quotient().table(*n);
            let names: Vec<String> = t.terms.iter().map(|x| ring.space.fmt_term(x)).collect();
            let mut rows = Vec::new();
            for (a, row) in names.iter().zip(&t.entries) {
                for (b, e) in names.iter().zip(row) {
                    rows.push(format!("[{a}]*[{b}] = {}", ring.fmt(e)));
                }
            }
            rec.put("residues", Value::from(names));
            rec.put("table", Value::from(rows));
            rec.put("complete", t.complete);
            if !(t.complete && i.certified()) {
                rec.indeterminate();
            }
        }
        Cmd::Congruent(f, p, q) => {
            let i = cx.ideal(f)?;
            put_answer(rec, i.quotient().congruent(&cx.poly(p)?, &cx.poly(q)?));
        }
        Cmd::Kernel(t) | Cmd::Image(t, _) | Cmd::Onto(t) => {
            let map = PolyMap::new(ring, cx.set(t)?, cx.opts)?;
            let tr = &map.tags.ring;
            let tags: Vec<String> = (0..map.targets.len()).map(|i| tr.fmt(&map.tags.tag(i))).collect();
            rec.put("tags", Value::from(tags));
            match cmd {
                Cmd::Kernel(_) => {
                    rec.put("kernel", Value::from(map.kernel().iter().map(|p| tr.fmt(p)).collect::<Vec<_>>()));
                    if !map.certified() {
                        rec.indeterminate();
                    }
                }
                Cmd::Image(_, p) => {
                    let r = map.image(&cx.poly(p)?);
                    put_answer(rec, r.answer);
                    if let Some(h) = &r.preimage {
                        rec.put("preimage", tr.fmt(h));
                    }
                }
                _ => put_answer(rec, map.onto()),
            }
        }
        Cmd::Solve(f, f0) => {
            let fs = cx.set(f)?;
            let s = solve_linear(ring, &fs, &cx.poly(f0)?, cx.opts)?;
            rec.put("basis", cx.list(&s.basis));
            rec.put("particular", s.particular.as_ref().map(|x| Value::from(cx.vector(x))).unwrap_or(Value::Null));
            rec.put("generators", Value::from(s.generators.iter().map(|x| cx.vector(x)).collect::<Vec<_>>()));
            rec.put("complete", s.complete);
            if !s.complete {
                rec.indeterminate();
            }
        }
        _ => return coeff_cmd(&ring.domain, cx.lets, cmd, seed, rec),
    }
    Ok(())
}

fn outcome_text(o: &AxiomOutcome) -> String {
    match o {
        AxiomOutcome::Pass { checked } => format!("pass ({checked} checked)"),
        AxiomOutcome::Fail { counterexample } => format!("fail: {counterexample}"),
        AxiomOutcome::NotDeclared => "not declared".into(),
    }
}

fn vector_text(v: &[BigInt]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn coeff_cmd<D: Domain>(d: &D, lets: &Lets, cmd: &Cmd, seed: u64, rec: &mut Record) -> Result<()> {
    let elem = |l: &Located| d.parse_elem(&l.text);
    let elems = |s: &SetRef| items(s, lets).iter().map(elem).collect::<Result<Vec<_>>>();
    match cmd {
        Cmd::Reduce(a, b) => {
            let step = d.reduce_step(&elem(a)?, &elem(b)?)?;
            rec.put("reducible", step.is_some());
            if let Some(s) = step {
                rec.put("result", d.render(&s.result));
                rec.put("quotient", d.render(&s.quotient));
            }
        }
        Cmd::CoeffNf(a, g) => {
            let nf = coeff_normal_form(d, &elem(a)?, &elems(g)?)?;
            rec.put("normal_form", d.render(&nf));
        }
        Cmd::CoeffGb(g) => {
            let b = coeff_ideal_gb(d, &elems(g)?);
            rec.put("basis", Value::from(b.basis.iter().map(|x| d.render(x)).collect::<Vec<_>>()));
        }
        Cmd::Probe(n) => {
            let r = axiom_probe(d, *n, seed);
            rec.put("domain", r.domain.clone());
            rec.put("seed", seed);
            for (k, o) in [("a1", &r.a1), ("a2", &r.a2), ("a3", &r.a3), ("a4", &r.a4)] {
                rec.put(k, outcome_text(o));
            }
            rec.put("all_passed", r.all_passed());
        }
        Cmd::ModGb(vs) => {
            let b = module_gb(vs)?;
            rec.put("basis", Value::from(b.iter().map(|v| vector_text(v)).collect::<Vec<_>>()));
        }
        _ => return Err(Error::Unsupported("polynomial command over a coefficient-only domain".into())),
    }
    Ok(())
}

fn domain_name(r: &AnyRing) -> String {
    match r {
        AnyRing::Q(x) => x.domain.descriptor(),
        AnyRing::Z(x) => x.domain.descriptor(),
        AnyRing::Gf(x) => x.domain.descriptor(),
        AnyRing::Divisor(d) | AnyRing::ZOnly(d) => d.descriptor(),
        AnyRing::Mod(d) => d.descriptor(),
        AnyRing::Pair(d) => d.descriptor(),
        AnyRing::QOnly(d) => d.descriptor(),
        AnyRing::GfOnly(d) => d.descriptor(),
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Right => "right",
        Side::TwoSided => "two-sided",
    }
}

/// Runs every item in order and returns one record per ring and command.
pub fn run_session(session: &Session, initial: Settings) -> Vec<Record> {
    let mut settings = initial;
    let mut lets: Lets = HashMap::new();
    let mut out = Vec::new();
    for item in &session.items {
        match &item.kind {
            ItemKind::Ring(k) => {
                lets.clear();
                let e = &session.rings[*k];
                let mut rec = Record::new(item.line, "ring");
                rec.put("universe", e.description.clone());
                rec.put("domain", domain_name(&e.ring));
                rec.put("side", side_name(e.side));
                rec.put("warnings", Value::from(e.warnings.clone()));
                out.push(rec);
            }
            ItemKind::Let(name, polys) => {
                lets.insert(name.clone(), polys.clone());
            }
            ItemKind::Set(key, v) => match key {
                SetKey::Budget => settings.budget = *v as usize,
                SetKey::Steps => settings.steps = *v as usize,
                SetKey::Bound => settings.bound = *v as usize,
                SetKey::Seed => settings.seed = *v,
            },
            ItemKind::Cmd { ring, text, cmd } => {
                let e = &session.rings[*ring];
                let mut opts = CompletionOptions::new(e.side).with_budget(settings.budget).with_bound(settings.bound);
                opts.step_budget = settings.steps;
                let mut rec = Record::new(item.line, text.clone());
                let seed = settings.seed;
                let res = match &e.ring {
                    AnyRing::Q(r) => poly_cmd(&Ctx { ring: r, lets: &lets, opts }, cmd, seed, &mut rec),
                    AnyRing::Z(r) => poly_cmd(&Ctx { ring: r, lets: &lets, opts }, cmd, seed, &mut rec),
                    AnyRing::Gf(r) => poly_cmd(&Ctx { ring: r, lets: &lets, opts }, cmd, seed, &mut rec),
                    AnyRing::Divisor(d) | AnyRing::ZOnly(d) => coeff_cmd(d, &lets, cmd, seed, &mut rec),
                    AnyRing::Mod(d) => coeff_cmd(d, &lets, cmd, seed, &mut rec),
                    AnyRing::Pair(d) => coeff_cmd(d, &lets, cmd, seed, &mut rec),
                    AnyRing::QOnly(d) => coeff_cmd(d, &lets, cmd, seed, &mut rec),
                    AnyRing::GfOnly(d) => coeff_cmd(d, &lets, cmd, seed, &mut rec),
                };
                if let Err(err) = res {
                    rec.fail(err.to_string());
                }
                out.push(rec);
            }
        }
    }
    out
}
