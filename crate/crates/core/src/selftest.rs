//! Oracle-equivalence suites behind `msgeo selftest`.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    borsuk_by_gh, borsuk_partitionable, chromatic_number, clique_cover_number, count_edge_covers,
    cycle_matching_count, BipartiteGraph, DEFAULT_AB,
};
use crate::gh::{gh_exact, gh_three_point, gh_to_simplex, gh_two_point};
use crate::hausdorff::{alternating_polygon, count_s_position_sets, euclidean_configuration, SubsetPair};
use crate::metric::{simplex, DEFAULT_TOLERANCE};
use crate::oracle;
use crate::random::{self, SeededRng};
use crate::trees::{
    mst_length, mst_spectrum, mst_spectrum_by_gh, mst_spectrum_by_partitions, smt_by_networks,
    smt_by_supersets,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Quick,
    Full,
}

impl Scale {
    fn pick(self, quick: usize, full: usize) -> usize {
        match self {
            Scale::Quick => quick,
            Scale::Full => full,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub max_deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub scale: Scale,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

struct Acc {
    cases: usize,
    failures: usize,
    max_dev: f64,
    tol: f64,
}

impl Acc {
    fn new(tol: f64) -> Self {
        Acc {
            cases: 0,
            failures: 0,
            max_dev: 0.0,
            tol,
        }
    }

    fn close(&mut self, a: f64, b: f64) {
        let dev = (a - b).abs();
        self.cases += 1;
        self.max_dev = self.max_dev.max(dev);
        if !(dev <= self.tol) {
            self.failures += 1;
        }
    }

    fn holds(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: self.cases,
            failures: self.failures,
            max_deviation: self.max_dev,
            pass: self.failures == 0,
        }
    }
}

type Suite = fn(&mut SeededRng, Scale) -> SuiteReport;

fn spectrum(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-9);
    for _ in 0..scale.pick(40, 200) {
        let n = rng.gen_range(3..=6);
        let x = random::integer_space(rng, n);
        let (Ok(e), Ok(p), Ok(g)) = (
            mst_spectrum(&x),
            mst_spectrum_by_partitions(&x),
            mst_spectrum_by_gh(&x, 2.0 * x.diameter()),
        ) else {
            acc.holds(false);
            continue;
        };
        for k in 0..n - 1 {
            acc.close(e[k], p[k]);
            acc.close(e[k], g.spectrum[k]);
        }
        acc.close(g.mst_length, mst_length(&x));
    }
    acc.finish("mst-spectrum routes")
}

fn simplex_formulas(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-9);
    let max_n = scale.pick(4, 5);
    for _ in 0..scale.pick(20, 100) {
        let n = rng.gen_range(1..=max_n);
        let x = random::integer_space(rng, n);
        let diam = x.diameter();
        for m in 1..=6 {
            for lambda in [0.5, 1.0, diam, 2.0 * diam] {
                // zero lambda stands for the one-point simplex
                let s = if lambda == 0.0 {
                    simplex(1, 1.0)
                } else {
                    simplex(m, lambda)
                };
                match (s.and_then(|s| gh_exact(&s, &x)), gh_to_simplex(&x, m, lambda)) {
                    (Ok(e), Ok(f)) => acc.close(e.distance, f),
                    _ => acc.holds(false),
                }
            }
        }
    }
    acc.finish("simplex formulas")
}

fn closed_forms(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-12);
    for _ in 0..scale.pick(100, 500) {
        let (x, y) = (random::real_space(rng, 2, 0.5, 3.0), random::real_space(rng, 2, 0.5, 3.0));
        match (gh_two_point(&x, &y), gh_exact(&x, &y)) {
            (Ok(a), Ok(b)) => acc.close(a, b.distance),
            _ => acc.holds(false),
        }
        let (x, y) = (random::integer_space(rng, 3), random::integer_space(rng, 3));
        match (gh_three_point(&x, &y), gh_exact(&x, &y)) {
            (Ok(a), Ok(b)) => acc.close(a, b.distance),
            _ => acc.holds(false),
        }
    }
    acc.finish("two- and three-point formulas")
}

fn gh_vs_relations(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-12);
    for _ in 0..scale.pick(30, 150) {
        let (n, m) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let (x, y) = (random::integer_space(rng, n), random::integer_space(rng, m));
        match (gh_exact(&x, &y), oracle::gh_brute(&x, &y)) {
            (Ok(a), Ok(b)) => acc.close(a.distance, b),
            _ => acc.holds(false),
        }
    }
    acc.finish("gh_exact vs all relations")
}

fn gh_six_point(rng: &mut SeededRng, _scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-9);
    for _ in 0..10 {
        let x = random::integer_space(rng, 6);
        let diam = x.diameter();
        for m in 2..=6 {
            for lambda in [1.0, diam] {
                match (
                    simplex(m, lambda).and_then(|s| gh_exact(&s, &x)),
                    gh_to_simplex(&x, m, lambda),
                ) {
                    (Ok(e), Ok(f)) => acc.close(e.distance, f),
                    _ => acc.holds(false),
                }
            }
        }
    }
    acc.finish("six-point gh sweep")
}

fn borsuk(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(0.0);
    for _ in 0..scale.pick(30, 100) {
        let n = rng.gen_range(2..=6);
        let x = random::integer_space(rng, n);
        for m in 2..=n {
            let a = borsuk_partitionable(&x, m, DEFAULT_TOLERANCE);
            let b = borsuk_by_gh(&x, m, x.diameter() / 2.0, DEFAULT_TOLERANCE);
            acc.holds(matches!((a, b), (Ok(a), Ok(b)) if a == b));
        }
    }
    acc.finish("Borsuk criterion")
}

fn graph_numbers(_rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(0.0);
    let (a, b) = DEFAULT_AB;
    for n in 1..=scale.pick(4, 5) {
        for g in oracle::nonisomorphic_graphs(n) {
            let theta = clique_cover_number(&g, a, b, DEFAULT_TOLERANCE);
            let gamma_dual = chromatic_number(&g.complement(), a, b, DEFAULT_TOLERANCE);
            acc.holds(matches!((theta, gamma_dual), (Ok(t), Ok(c)) if t == c));
        }
    }
    acc.finish("clique cover and chromatic numbers")
}

fn edge_covers(_rng: &mut SeededRng, _scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(0.0);
    for k in 2..=5 {
        let g = BipartiteGraph::cycle(k).expect("k >= 2");
        let c = count_edge_covers(&g).ok();
        acc.holds(c.is_some() && c == cycle_matching_count(2 * k).ok());
        acc.holds(c == Some(oracle::cycle_matchings_brute(2 * k)));
    }
    acc.holds(count_edge_covers(&BipartiteGraph::complete(2, 2)) == Ok(7));
    acc.finish("edge covers vs cycle matchings")
}

fn hexagon(_rng: &mut SeededRng, _scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(0.0);
    let (a, b) = alternating_polygon(3);
    for s in [0.25, 0.5, 0.75] {
        let ok = euclidean_configuration(&a, &b, s, DEFAULT_TOLERANCE).and_then(|e| {
            let pair = SubsetPair::new(&e.space, &e.a, &e.b)?;
            count_s_position_sets(&pair, &(0..e.space.len()).collect::<Vec<_>>(), s, DEFAULT_TOLERANCE)
        });
        acc.holds(ok == Ok(18));
    }
    acc.finish("hexagon s-position count")
}

fn steiner(rng: &mut SeededRng, scale: Scale) -> SuiteReport {
    let mut acc = Acc::new(1e-9);
    for _ in 0..scale.pick(10, 50) {
        let n = rng.gen_range(2..=10);
        let x = random::grid_space(rng, n, 2, 5);
        let k = rng.gen_range(1..=n.min(4));
        let m = random::permutation(rng, n)[..k].to_vec();
        match (
            smt_by_supersets(&x, &m, DEFAULT_TOLERANCE),
            smt_by_networks(&x, &m, DEFAULT_TOLERANCE),
        ) {
            (Ok(a), Ok(b)) => acc.close(a.length, b.length),
            _ => acc.holds(false),
        }
    }
    acc.finish("Steiner routes")
}

fn suites(scale: Scale) -> Vec<Suite> {
    let mut v: Vec<Suite> = vec![
        spectrum,
        simplex_formulas,
        closed_forms,
        gh_vs_relations,
        borsuk,
        graph_numbers,
        edge_covers,
        hexagon,
        steiner,
    ];
    if scale == Scale::Full {
        v.push(gh_six_point);
    }
    v
}

/// Runs every suite for `scale`. Suite `i` draws from seed `seed + i`, so
/// the report does not depend on scheduling.
pub fn run(scale: Scale, seed: u64) -> Report {
    let suites: Vec<SuiteReport> = suites(scale)
        .into_par_iter()
        .enumerate()
        .map(|(i, f)| f(&mut random::seeded(seed.wrapping_add(i as u64)), scale))
        .collect();
    let pass = suites.iter().all(|s| s.pass);
    Report {
        scale,
        seed,
        suites,
        pass,
    }
}
