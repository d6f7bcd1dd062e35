use crate::polycore::{same_ring, Monomial, MonomialOrder, Polynomial, RingRef};

use super::{GroebnerError, IdealPresentation, Limits};

/// Reduced Groebner basis: monic, auto-reduced, sorted by ascending leading
/// monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
    source: IdealPresentation,
}

struct Entry {
    poly: Polynomial,
    lm: Monomial,
    mask: u64,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Working state of one Buchberger run.
struct State {
    order: MonomialOrder,
    entries: Vec<Entry>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    processed: usize,
    limits: Limits,
}

fn divides_masked(d: &Entry, m: &Monomial, mask: u64) -> bool {
    d.mask & !mask == 0 && d.lm.divides(m)
}

impl State {
    fn new(order: MonomialOrder, limits: Limits) -> Self {
        State {
            order,
            entries: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            processed: 0,
            limits,
        }
    }

    /// Adds polynomials already known to form a Groebner basis, without pairs.
    fn seed(&mut self, gb: &[Polynomial]) {
        for p in gb {
            self.push_entry(p.clone());
        }
    }

    fn push_entry(&mut self, poly: Polynomial) -> usize {
        let lm = poly.leading_monomial().expect("nonzero").clone();
        let mask = lm.support_mask();
        self.entries.push(Entry { poly, lm, mask });
        self.active.push(true);
        self.entries.len() - 1
    }

    fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.entries.len()).filter(|&i| self.active[i])
    }

    /// Full normal form of `f` modulo the active entries.
    fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let mut p = f.clone();
        let mut rem = Vec::new();
        while let Some((m, c)) = p.leading_term().cloned() {
            let mask = m.support_mask();
            let div = self
                .active_indices()
                .find(|&i| divides_masked(&self.entries[i], &m, mask));
            match div {
                Some(i) => {
                    let e = &self.entries[i];
                    let q = e.lm.quotient_of(&m).expect("divisor");
                    let lc = e.poly.leading_coeff().expect("nonzero");
                    let coeff = if lc.is_one() { c } else { &c * &lc.inv().expect("unit") };
                    p.sub_mul_term(&coeff, &q, &e.poly);
                }
                None => {
                    rem.push(p.pop_leading().expect("nonempty"));
                }
            }
        }
        Polynomial::from_sorted_terms(f.ring(), rem)
    }

    /// Gebauer-Moeller update for a new basis element `h`.
    fn update(&mut self, h: Polynomial) {
        let hi = self.push_entry(h.monic());
        let lh = self.entries[hi].lm.clone();

        let mut candidates: Vec<(usize, Monomial, bool)> = self
            .active_indices()
            .filter(|&g| g != hi)
            .map(|g| {
                let lg = &self.entries[g].lm;
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while !candidates.is_empty() {
            let (g, lcm, coprime) = candidates.remove(0);
            let dominated = candidates
                .iter()
                .chain(kept.iter())
                .any(|(_, other, _)| other.divides(&lcm));
            if coprime || !dominated {
                kept.push((g, lcm, coprime));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(_, _, coprime)| !coprime)
            .map(|(g, lcm, _)| Pair { i: g, j: hi, lcm })
            .collect();

        let entries = &self.entries;
        self.pairs.retain(|p| {
            if !lh.divides(&p.lcm) {
                return true;
            }
            let li = lh.lcm(&entries[p.i].lm);
            let lj = lh.lcm(&entries[p.j].lm);
            li == p.lcm || lj == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lh.divides(&self.entries[g].lm) {
                self.active[g] = false;
            }
        }
    }

    /// Index of the pair with least lcm (degree first, then the order).
    fn select(&self) -> Option<usize> {
        let order = self.order;
        (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.lcm
                .degree()
                .cmp(&pb.lcm.degree())
                .then_with(|| pa.lcm.cmp_with(&pb.lcm, order))
                .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })
    }

    fn s_polynomial(&self, p: &Pair) -> Polynomial {
        let (a, b) = (&self.entries[p.i], &self.entries[p.j]);
        let qa = a.lm.quotient_of(&p.lcm).expect("lcm");
        let qb = b.lm.quotient_of(&p.lcm).expect("lcm");
        let one = a.poly.ring().field().one();
        let mut s = a.poly.mul_term(&one, &qa);
        s.sub_mul_term(&one, &qb, &b.poly);
        s
    }

    /// Runs the pair loop. Returns early once a nonzero constant appears.
    fn run(&mut self) -> Result<(), GroebnerError> {
        while let Some(k) = self.select() {
            let pair = self.pairs.swap_remove(k);
            self.processed += 1;
            if self.processed > self.limits.max_pairs {
                return Err(GroebnerError::PairCap(self.limits.max_pairs));
            }
            if pair.lcm.degree() > self.limits.max_degree {
                return Err(GroebnerError::DegreeCap {
                    degree: pair.lcm.degree(),
                    limit: self.limits.max_degree,
                });
            }
            let s = self.s_polynomial(&pair);
            let r = self.normal_form(&s);
            if r.is_zero() {
                continue;
            }
            let unit = r.is_unit();
            self.update(r);
            if unit {
                self.pairs.clear();
                return Ok(());
            }
        }
        Ok(())
    }

    fn add_generators(&mut self, gens: &[Polynomial]) -> Result<(), GroebnerError> {
        for g in gens {
            let r = self.normal_form(g);
            if !r.is_zero() {
                let unit = r.is_unit();
                self.update(r);
                if unit {
                    self.pairs.clear();
                    return Ok(());
                }
            }
        }
        self.run()
    }

    /// Reduced basis from the active entries.
    fn finish(self, ring: &RingRef) -> Vec<Polynomial> {
        let active: Vec<usize> = self.active_indices().collect();
        if let Some(&u) = active.iter().find(|&&i| self.entries[i].poly.is_unit()) {
            return vec![self.entries[u].poly.monic()];
        }
        let mut out: Vec<Polynomial> = active
            .iter()
            .map(|&i| {
                let p = &self.entries[i].poly;
                let lead = p.leading_term().expect("nonzero").clone();
                let mut tail = p.clone();
                tail.pop_leading();
                let mut reduced = Polynomial::monomial(ring, lead.1, lead.0);
                let nf = self.normal_form_excluding(&tail, i);
                reduced = &reduced + &nf;
                reduced.monic()
            })
            .collect();
        let order = self.order;
        out.sort_by(|a, b| {
            a.leading_monomial()
                .unwrap()
                .cmp_with(b.leading_monomial().unwrap(), order)
        });
        out
    }

    fn normal_form_excluding(&self, f: &Polynomial, skip: usize) -> Polynomial {
        let mut p = f.clone();
        let mut rem = Vec::new();
        while let Some((m, c)) = p.leading_term().cloned() {
            let mask = m.support_mask();
            let div = self
                .active_indices()
                .filter(|&i| i != skip)
                .find(|&i| divides_masked(&self.entries[i], &m, mask));
            match div {
                Some(i) => {
                    let e = &self.entries[i];
                    let q = e.lm.quotient_of(&m).expect("divisor");
                    let lc = e.poly.leading_coeff().expect("nonzero");
                    let coeff = &c * &lc.inv().expect("unit");
                    p.sub_mul_term(&coeff, &q, &e.poly);
                }
                None => rem.push(p.pop_leading().expect("nonempty")),
            }
        }
        Polynomial::from_sorted_terms(f.ring(), rem)
    }
}

/// Reduced Groebner basis with the default resource caps.
pub fn buchberger(ideal: &IdealPresentation, order: MonomialOrder) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ideal, order, &Limits::default())
}

pub fn buchberger_with(
    ideal: &IdealPresentation,
    order: MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis, GroebnerError> {
    let ring = ideal.ring().with_order(order);
    let gens: Vec<Polynomial> = ideal.generators().iter().map(|g| g.with_order(order)).collect();
    let mut state = State::new(order, *limits);
    state.add_generators(&gens)?;
    let basis = state.finish(&ring);
    Ok(GroebnerBasis {
        ring,
        basis,
        source: ideal.clone(),
    })
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn source(&self) -> &IdealPresentation {
        &self.source
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.is_unit())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    fn state(&self) -> State {
        let mut st = State::new(self.order(), Limits::default());
        st.seed(&self.basis);
        st
    }

    /// Normal form of `f`, which must live in a ring with the same variables
    /// and field.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        let f = self.localize(f)?;
        Ok(self.state().normal_form(&f))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, GroebnerError> {
        Ok(self.reduce(f)?.is_zero())
    }

    fn localize(&self, f: &Polynomial) -> Result<Polynomial, GroebnerError> {
        let r = f.ring();
        if r.names() != self.ring.names() || r.field() != self.ring.field() {
            return Err(GroebnerError::RingMismatch);
        }
        if same_ring(r, &self.ring) {
            Ok(f.clone())
        } else {
            Ok(Polynomial::from_terms(&self.ring, f.terms().iter().cloned()))
        }
    }

    /// Groebner basis of this ideal plus `extra`, all living in `target`,
    /// whose variables extend this basis's ring. Only the unit test is
    /// meaningful when `stop_on_unit` cuts the run short.
    pub(crate) fn extend_in(
        &self,
        target: &RingRef,
        extra: &[Polynomial],
        limits: &Limits,
    ) -> Result<Vec<Polynomial>, GroebnerError> {
        if target.order() != self.order() {
            return Err(GroebnerError::RingMismatch);
        }
        let seeded = self
            .basis
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>, _>>()?;
        let mut st = State::new(self.order(), *limits);
        st.seed(&seeded);
        st.add_generators(extra)?;
        Ok(st.finish(target))
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
    }
}
