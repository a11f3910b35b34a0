use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ExperimentParams, Relation, Row};
use crate::automata::random::{random_dfa, random_nfa, NfaShape};
use crate::automata::{
    complement, enumerate_upto, equivalent, intersect, is_unambiguous, minimal_dfa, minimize,
    Automaton, Dfa, Nfa, Word,
};
use crate::bounds::{mx_matrix, rational_rank, ufa_lower_bound, verify_fooling, FoolingSet};
use crate::closures::{closure, closure_dfa, closure_dfa_with_budget, down_closure, Direction};
use crate::decisions::{closure_inclusion, dfa_closed_witness, down_universal, is_closed};
use crate::error::Result;
use crate::interiors::{dedekind_count, interior, Method};
use crate::witnesses::{
    c_word, d_dfa, distinguisher_words, down_interior_witness, down_witness_ell, e_dfa,
    fooling_for, heam_dfa, max_prefix_power, min_cover_power, morphism_value, not_u_nfa,
    two_letter_dfa, u_dfa, u_prime_dfa, up_interior_witness, up_witness_alphabet, up_witness_ell,
    v_dfa, FoolingFamily, MorphismKind, TwoLetterParams,
};

type Experiment = fn(&ExperimentParams) -> Vec<Row>;

pub const EXPERIMENT_IDS: [&str; 12] = [
    "up-closure-exact",
    "down-closure-exact",
    "not-u-remark",
    "alphabet-size-lemma",
    "two-letter-binomial",
    "heam",
    "dedekind-psi-bound",
    "down-interior-witness",
    "up-interior-witness",
    "ufa-rank",
    "decision-procedures",
    "fooling-sets",
];

pub(super) fn lookup(id: &str) -> Option<Experiment> {
    let table: [Experiment; 12] = [
        up_closure_exact,
        down_closure_exact,
        not_u_remark,
        alphabet_size_lemma,
        two_letter_binomial,
        heam,
        dedekind_psi_bound,
        down_interior_witness_rows,
        up_interior_witness_rows,
        ufa_rank,
        decision_procedures,
        fooling_sets,
    ];
    EXPERIMENT_IDS
        .iter()
        .position(|&e| e == id)
        .map(|i| table[i])
}

fn count(x: usize) -> u64 {
    x as u64
}

fn closure_with(a: &impl Automaton, d: Direction, p: &ExperimentParams) -> Result<Dfa> {
    match p.budget {
        Some(b) => closure_dfa_with_budget(a, d, b),
        None => closure_dfa(a, d),
    }
}

fn closure_size(a: &impl Automaton, d: Direction, p: &ExperimentParams) -> Result<u64> {
    Ok(count(closure_with(a, d, p)?.num_states()))
}

fn up_closure_exact(p: &ExperimentParams) -> Vec<Row> {
    p.range_or(3, 8)
        .into_par_iter()
        .map(|n| {
            let m = e_dfa(n - 2).and_then(|e| closure_size(&e, Direction::Up, p));
            Row::new(
                n,
                "n_D(up closure of E_{n-2})",
                m,
                Relation::Eq,
                (1 << (n - 2)) + 1,
            )
        })
        .collect()
}

fn down_closure_exact(p: &ExperimentParams) -> Vec<Row> {
    p.range_or(2, 8)
        .into_par_iter()
        .map(|n| {
            let m = d_dfa(n - 1).and_then(|d| closure_size(&d, Direction::Down, p));
            Row::new(
                n,
                "n_D(down closure of D_{n-1})",
                m,
                Relation::Eq,
                1 << (n - 1),
            )
        })
        .collect()
}

fn not_u_remark(p: &ExperimentParams) -> Vec<Row> {
    p.range_or(1, 6)
        .into_par_iter()
        .flat_map_iter(|n| {
            let a = not_u_nfa(n);
            let states = a
                .as_ref()
                .map(|a| count(a.num_states()))
                .map_err(Clone::clone);
            let closed = a.and_then(|a| closure_size(&a, Direction::Down, p));
            [
                Row::new(n, "NFA states", states, Relation::Eq, count(n)),
                Row::new(n, "n_D(down closure)", closed, Relation::Eq, (1 << n) - 1),
            ]
        })
        .collect()
}

/// Seeded generator for sample `i` of an experiment.
fn rng_for(seed: u64, i: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    rng
}

/// A random NFA with `1..=max_states` states and `1..=max_letters` letters.
pub fn sample_nfa(rng: &mut impl Rng, max_states: usize, max_letters: usize) -> Nfa {
    let shape = NfaShape {
        states: rng.gen_range(1..=max_states),
        letters: rng.gen_range(1..=max_letters),
        density: rng.gen_range(0.1..0.5),
        single_initial: false,
    };
    random_nfa(rng, shape)
}

fn alphabet_size_lemma(p: &ExperimentParams) -> Vec<Row> {
    let samples = p.samples_or(500);
    let sizes: Vec<(usize, Result<u64>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(p.seed, i);
            let n = 4 + i % 3;
            let shape = NfaShape {
                states: n,
                letters: rng.gen_range(1..=n - 2),
                density: rng.gen_range(0.1..0.5),
                single_initial: true,
            };
            let a = random_nfa(&mut rng, shape);
            (n, closure_size(&a, Direction::Down, p))
        })
        .collect();
    [4, 5, 6]
        .into_iter()
        .map(|n| {
            let worst = sizes
                .iter()
                .filter(|(m, _)| *m == n)
                .map(|(_, s)| s.clone())
                .collect::<Result<Vec<u64>>>()
                .map(|v| v.into_iter().max().unwrap_or(0));
            Row::new(
                n,
                "max n_D(down closure)",
                worst,
                Relation::Lt,
                1 << (n - 1),
            )
        })
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<usize>> = subsets_of_size(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets_of_size(&items[1..], k));
    with
}

fn sequences(alphabet: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<usize>| {
                alphabet.iter().map(move |&x| {
                    let mut t = s.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Counts `σ` (with `|σ| ≤ 3`) and `i ∈ H` where the cover oracles
/// disagree with the morphisms.
fn morphism_mismatches(n: usize) -> Result<u64> {
    let params = TwoLetterParams::new(n)?;
    let h: Vec<usize> = params.h().collect();
    let mut bad = 0;
    for sigma in sequences(&h, 3) {
        for &i in &h {
            if min_cover_power(&sigma, i, n)? != morphism_value(MorphismKind::Theta, i, &sigma) {
                bad += 1;
            }
            if max_prefix_power(&sigma, i, n)? != morphism_value(MorphismKind::Eta, i, &sigma) {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

/// Counts pairs `X ≠ Y` for which the distinguishing suffix fails.
fn distinguisher_failures(n: usize, direction: Direction, closed: &Dfa) -> Result<u64> {
    let params = TwoLetterParams::even(n)?;
    let h: Vec<usize> = params.h().collect();
    let family = subsets_of_size(&h, n / 2);
    let mut bad = 0;
    for x in &family {
        let wx = distinguisher_words(x, n, direction)?;
        for y in family.iter().filter(|y| *y != x) {
            let wy = distinguisher_words(y, n, direction)?;
            let i = *x.iter().find(|i| !y.contains(i)).expect("X differs from Y");
            let v = match direction {
                Direction::Down => c_word(i, n)?,
                Direction::Up => c_word(i, n)?.power(n / 2 - 1),
            };
            if !closed.accepts(&wx.concat(&v))? || closed.accepts(&wy.concat(&v))? {
                bad += 1;
            }
        }
    }
    Ok(bad)
}

fn two_letter_binomial(p: &ExperimentParams) -> Vec<Row> {
    let ns = p
        .range_or(2, 4)
        .into_iter()
        .filter(|n| n % 2 == 0)
        .collect::<Vec<_>>();
    ns.into_par_iter()
        .flat_map_iter(|n| {
            let bound = binomial(n as u64 + 1, n as u64 / 2);
            let dfa = two_letter_dfa(n);
            let size = dfa
                .as_ref()
                .map(|d| count(d.num_states()))
                .map_err(Clone::clone);
            let mut rows = vec![Row::new(
                n,
                "n_D(L_n)",
                size,
                Relation::Eq,
                3 * (n as u64).pow(3) + 1,
            )];
            for d in [Direction::Down, Direction::Up] {
                let closed = dfa.clone().and_then(|a| closure_with(&a, d, p));
                let size = closed
                    .as_ref()
                    .map(|c| count(c.num_states()))
                    .map_err(Clone::clone);
                rows.push(Row::new(
                    n,
                    format!("n_D({d} closure)"),
                    size,
                    Relation::Ge,
                    bound,
                ));
                let failures = closed.and_then(|c| distinguisher_failures(n, d, &c));
                rows.push(Row::new(
                    n,
                    format!("{d} distinguisher failures"),
                    failures,
                    Relation::Eq,
                    0,
                ));
            }
            rows.push(Row::new(
                n,
                "cover/morphism mismatches",
                morphism_mismatches(n),
                Relation::Eq,
                0,
            ));
            rows
        })
        .collect()
}

/// `⌈φⁿ / 7⌉`.
pub(crate) fn heam_lower_bound(n: usize) -> u64 {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    (phi.powi(n as i32) / 7.0).ceil() as u64
}

fn heam(p: &ExperimentParams) -> Vec<Row> {
    let (lo, hi) = p.range.unwrap_or((2, 8));
    let mut jobs: Vec<(usize, bool)> = (lo.max(2)..=hi.min(6)).map(|n| (n, false)).collect();
    jobs.extend((lo.max(4)..=hi).map(|n| (n, true)));
    jobs.into_par_iter()
        .map(|(n, up)| {
            let dfa = heam_dfa(n);
            if up {
                let m = dfa.and_then(|d| closure_size(&d, Direction::Up, p));
                Row::new(n, "n_D(up closure)", m, Relation::Ge, heam_lower_bound(n))
            } else {
                let m = dfa.map(|d| count(minimize(&d).complete().num_states()));
                Row::new(
                    n,
                    "n_D(L) complete",
                    m,
                    Relation::Eq,
                    ((n + 1) * (n + 1)) as u64,
                )
            }
        })
        .collect()
}

const DEDEKIND: [u64; 6] = [2, 3, 6, 20, 168, 7581];

fn dedekind_psi_bound(p: &ExperimentParams) -> Vec<Row> {
    let mut rows: Vec<Row> = (0..DEDEKIND.len())
        .map(|n| Row::new(n, "psi(n)", dedekind_count(n), Relation::Eq, DEDEKIND[n]))
        .collect();
    let samples = p.samples_or(200);
    let results: Vec<(usize, Result<(u64, bool)>)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng_for(p.seed, i);
            let a = sample_nfa(&mut rng, 5, 3);
            (a.num_states(), interior_sample(&a))
        })
        .collect();
    for (n, &psi) in DEDEKIND.iter().enumerate().skip(1) {
        let mine: Vec<_> = results
            .iter()
            .filter(|(m, _)| *m == n)
            .map(|(_, r)| r.clone())
            .collect();
        let collected = mine.into_iter().collect::<Result<Vec<_>>>();
        let worst = collected
            .clone()
            .map(|v| v.iter().map(|x| x.0).max().unwrap_or(0));
        let disagree = collected.map(|v| v.iter().filter(|x| !x.1).count() as u64);
        rows.push(Row::new(n, "max n_D(interior)", worst, Relation::Lt, psi));
        rows.push(Row::new(
            n,
            "method disagreements",
            disagree,
            Relation::Eq,
            0,
        ));
    }
    rows
}

// Largest interior size and whether both methods agree in both directions.
fn interior_sample(a: &Nfa) -> Result<(u64, bool)> {
    let mut worst = 0;
    let mut agree = true;
    for d in [Direction::Up, Direction::Down] {
        let x = interior(a, d, Method::Duality)?;
        let y = interior(a, d, Method::Antichain)?;
        agree &= x == y;
        worst = worst.max(count(x.num_states()));
    }
    Ok((worst, agree))
}

fn down_interior_witness_rows(p: &ExperimentParams) -> Vec<Row> {
    let ns: Vec<usize> = p.range.map_or(vec![3, 5], |(lo, hi)| (lo..=hi).collect());
    ns.into_par_iter()
        .flat_map_iter(|n| {
            let a = down_interior_witness(n);
            let states = a
                .as_ref()
                .map(|a| count(a.num_states()))
                .map_err(Clone::clone);
            let ell = down_witness_ell(n).unwrap_or(0);
            let g = 1usize << ell;
            let inner = a.and_then(|a| interior(&a, Direction::Down, Method::Antichain));
            let equal = inner.clone().and_then(|i| {
                let v = v_dfa(g)?
                    .into_nfa()
                    .relabel(i.alphabet(), &(0..g).collect::<Vec<_>>())?;
                Ok(u64::from(equivalent(&i, &v)?))
            });
            let fooled = inner.and_then(|i| {
                let s = fooling_for(FoolingFamily::V(g))?
                    .relabel(i.alphabet(), &(0..g).collect::<Vec<_>>())?;
                Ok(count(verify_fooling(&i, &s)?))
            });
            [
                Row::new(n, "NFA states", states, Relation::Le, count(n)),
                Row::new(n, "down interior = V", equal, Relation::Eq, 1),
                Row::new(n, "fooling bound", fooled, Relation::Eq, 1 << g),
            ]
        })
        .collect()
}

fn up_interior_witness_rows(p: &ExperimentParams) -> Vec<Row> {
    let ns: Vec<usize> = p.range.map_or(vec![7], |(lo, hi)| (lo..=hi).collect());
    ns.into_par_iter()
        .flat_map_iter(|n| {
            let a = up_interior_witness(n);
            let states = a
                .as_ref()
                .map(|a| count(a.num_states()))
                .map_err(Clone::clone);
            let ell = up_witness_ell(n).unwrap_or(1);
            let g = 1usize << ell;
            let inner = a.and_then(|a| interior(&a, Direction::Up, Method::Duality));
            let equal = inner.clone().and_then(|i| {
                let u = up_interior_gamma_part(&i, g)?;
                let expected = u_prime_dfa(g)?
                    .into_nfa()
                    .relabel(i.alphabet(), &(0..g).collect::<Vec<_>>())?;
                Ok(u64::from(equivalent(&u, &expected)?))
            });
            let fooled = inner.and_then(|i| {
                let s = fooling_for(FoolingFamily::Uprime(g))?
                    .relabel(&up_witness_alphabet(ell), &(0..g).collect::<Vec<_>>())?;
                Ok(count(verify_fooling(&i, &s)?))
            });
            [
                Row::new(n, "NFA states", states, Relation::Le, count(n)),
                Row::new(n, "up interior on Gamma* = U'", equal, Relation::Eq, 1),
                Row::new(n, "fooling bound", fooled, Relation::Eq, (1 << g) + 1),
            ]
        })
        .collect()
}

/// `L ∩ Γ*` where `Γ` is the first `g` letters.
pub(crate) fn up_interior_gamma_part(l: &Dfa, g: usize) -> Result<Dfa> {
    let gamma = Dfa::new(l.alphabet().clone(), 1, (0..g).map(|x| (0, x, 0)), 0, [0])?;
    Ok(minimize(&intersect(l, &gamma)?))
}

fn ufa_rank(p: &ExperimentParams) -> Vec<Row> {
    let mut rows: Vec<Row> = (1..=4)
        .map(|n| {
            let r = mx_matrix(n).map(|m| count(rational_rank(&m)));
            Row::new(n, "rank(M_X)", r, Relation::Eq, (1 << n) - 1)
        })
        .collect();
    let (lo, hi) = p.range.unwrap_or((1, 3));
    let cases: Vec<(usize, usize)> = (lo..=hi)
        .flat_map(|n| (0..3).map(move |c| (n, c)))
        .collect();
    let more: Vec<Row> = cases
        .into_par_iter()
        .flat_map_iter(|(n, c)| {
            let (family, predicted, name) = match c {
                0 => (FoolingFamily::NotU(n), (1u64 << n) - 1, "co-U"),
                1 => (FoolingFamily::DownD(n), 1 << n, "down D"),
                _ => (FoolingFamily::UpE(n), (1 << n) + 1, "up E"),
            };
            let rank = ufa_instance(family);
            let (bound, size, unamb) = match rank {
                Ok((b, s, u)) => (Ok(b), Ok(s), Ok(u)),
                Err(e) => (Err(e.clone()), Err(e.clone()), Err(e)),
            };
            [
                Row::new(
                    n,
                    format!("UFA rank bound, {name}"),
                    bound,
                    Relation::Eq,
                    predicted,
                ),
                Row::new(n, format!("n_D, {name}"), size, Relation::Eq, predicted),
                Row::new(
                    n,
                    format!("minimal DFA unambiguous, {name}"),
                    unamb,
                    Relation::Eq,
                    1,
                ),
            ]
        })
        .collect();
    rows.extend(more);
    rows
}

fn ufa_instance(family: FoolingFamily) -> Result<(u64, u64, u64)> {
    let l = family.language()?;
    let s: FoolingSet = fooling_for(family)?;
    let bound = ufa_lower_bound(&l, &s, family.initial_excluded())?;
    let d = minimal_dfa(&l)?;
    Ok((
        count(bound),
        count(d.num_states()),
        u64::from(is_unambiguous(&d.into_nfa())),
    ))
}

/// Bounded closedness oracle: checks single-letter insertions (up) or
/// deletions (down) on all accepted words up to `max_len`.
pub fn closed_upto(a: &Nfa, direction: Direction, max_len: usize) -> Result<bool> {
    let k = a.alphabet().len();
    for w in enumerate_upto(a, max_len)? {
        match direction {
            Direction::Up if w.len() < max_len => {
                for i in 0..=w.len() {
                    for c in 0..k {
                        let mut x = w.0.clone();
                        x.insert(i, c);
                        if !a.accepts(&x)? {
                            return Ok(false);
                        }
                    }
                }
            }
            Direction::Down => {
                for i in 0..w.len() {
                    let mut x = w.0.clone();
                    x.remove(i);
                    if !a.accepts(&x)? {
                        return Ok(false);
                    }
                }
            }
            Direction::Up => {}
        }
    }
    Ok(true)
}

fn is_closed_agrees(a: &Nfa) -> Result<bool> {
    for d in [Direction::Up, Direction::Down] {
        let cert = is_closed(a, d)?;
        if cert.verdict != closed_upto(a, d, 6)? {
            return Ok(false);
        }
        if let Some(w) = cert.word() {
            if a.accepts(w)? || !closure(a, d).accepts(w)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn dfa_triple_ok(d: &Dfa) -> Result<bool> {
    let cert = dfa_closed_witness(d, Direction::Up);
    if cert.verdict != is_closed(&d.into_nfa(), Direction::Up)?.verdict {
        return Ok(false);
    }
    let Some((u, a, v)) = cert.triple() else {
        return Ok(cert.verdict);
    };
    let n = d.num_states();
    Ok(d.accepts(&u.concat(v))?
        && !d.accepts(&u.concat(&Word(vec![a])).concat(v))?
        && u.len() < n
        && v.len() < n * n)
}

// Whether the verdicts match the oracle and the witnesses re-verify, and
// whether every witness is shorter than `n_B` (down) or `n_A` (up).
fn inclusion_ok(a: &Nfa, b: &Nfa) -> Result<(bool, bool)> {
    let mut valid = true;
    let mut short = true;
    for d in [Direction::Up, Direction::Down] {
        let cert = closure_inclusion(a, b, d)?;
        let ca = closure(a, d);
        let cb = closure(b, d);
        let diff = intersect(&minimal_dfa(&ca)?, &complement(&minimal_dfa(&cb)?))?;
        let oracle = minimize(&diff).finals().is_empty();
        valid &= cert.verdict == oracle;
        if let Some(w) = cert.word() {
            let bound = match d {
                Direction::Down => b.num_states(),
                Direction::Up => a.num_states(),
            };
            valid &= ca.accepts(w)? && !cb.accepts(w)?;
            short &= w.len() < bound;
        }
    }
    Ok((valid, short))
}

fn universal_agrees(a: &Nfa) -> Result<bool> {
    let cert = down_universal(a)?;
    let oracle = equivalent(&down_closure(a), &Nfa::universal(a.alphabet().clone()))?;
    if cert.verdict != oracle {
        return Ok(false);
    }
    match cert.word() {
        Some(w) => Ok(!down_closure(a).accepts(w)?),
        None => Ok(true),
    }
}

fn agreement_row(name: &str, samples: usize, results: Vec<Result<bool>>) -> Row {
    let good = results
        .into_iter()
        .collect::<Result<Vec<bool>>>()
        .map(|v| v.into_iter().filter(|&b| b).count() as u64);
    Row::new(samples, name, good, Relation::Eq, samples as u64)
}

fn decision_procedures(p: &ExperimentParams) -> Vec<Row> {
    let samples = p.samples_or(500);
    let seeds = |offset: u64| -> Vec<ChaCha8Rng> {
        (0..samples)
            .map(|i| rng_for(p.seed.wrapping_add(offset), i))
            .collect()
    };
    let closed: Vec<_> = seeds(0)
        .into_par_iter()
        .map(|mut rng| is_closed_agrees(&sample_nfa(&mut rng, 5, 3)))
        .collect();
    let triples: Vec<_> = seeds(1)
        .into_par_iter()
        .map(|mut rng| {
            let n = rng.gen_range(1..=6);
            let k = rng.gen_range(1..=3);
            let density = rng.gen_range(0.5..1.0);
            dfa_triple_ok(&random_dfa(&mut rng, n, k, density))
        })
        .collect();
    let inclusions: Vec<_> = seeds(2)
        .into_par_iter()
        .map(|mut rng| {
            let a = sample_nfa(&mut rng, 5, 3);
            let shape = NfaShape {
                states: rng.gen_range(1..=5),
                letters: a.alphabet().len(),
                density: rng.gen_range(0.1..0.5),
                single_initial: false,
            };
            inclusion_ok(&a, &random_nfa(&mut rng, shape))
        })
        .collect();
    let (inclusions, shortness): (Vec<_>, Vec<_>) = inclusions
        .into_iter()
        .map(|r| (r.clone().map(|x| x.0), r.map(|x| x.1)))
        .unzip();
    let universal: Vec<_> = seeds(3)
        .into_par_iter()
        .map(|mut rng| universal_agrees(&sample_nfa(&mut rng, 5, 3)))
        .collect();
    vec![
        agreement_row("is_closed agrees with bounded oracle", samples, closed),
        agreement_row("DFA insertion triples valid", samples, triples),
        agreement_row("closure inclusion certificates valid", samples, inclusions),
        agreement_row(
            "closure inclusion witnesses below bound",
            samples,
            shortness,
        ),
        agreement_row("down universality agrees", samples, universal),
    ]
}

fn fooling_sets(p: &ExperimentParams) -> Vec<Row> {
    let cases: Vec<(usize, usize)> = p
        .range_or(1, 4)
        .into_iter()
        .flat_map(|k| (0..3).map(move |c| (k, c)))
        .collect();
    cases
        .into_par_iter()
        .flat_map_iter(|(k, c)| {
            let (family, dfa, predicted, name) = match c {
                0 => (FoolingFamily::U(k), u_dfa(k), 1u64 << k, "U"),
                1 => (FoolingFamily::V(k), v_dfa(k), 1 << k, "V"),
                _ => (FoolingFamily::Uprime(k), u_prime_dfa(k), (1 << k) + 1, "U'"),
            };
            let certified = dfa
                .clone()
                .and_then(|d| Ok(count(verify_fooling(&d, &fooling_for(family)?)?)));
            let size = dfa.map(|d| count(minimize(&d).num_states()));
            [
                Row::new(
                    k,
                    format!("fooling bound, {name}"),
                    certified,
                    Relation::Eq,
                    predicted,
                ),
                Row::new(k, format!("n_D, {name}"), size, Relation::Eq, predicted),
            ]
        })
        .collect()
}
