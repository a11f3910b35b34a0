use crate::automata::{minimize, Alphabet, Automaton, Dfa, Nfa, StateId, Symbol, Word};
use crate::error::{input, Result};

pub(crate) const MAX_SUBSET_LETTERS: usize = 16;

fn subset_letters(k: usize) -> Result<()> {
    if k > MAX_SUBSET_LETTERS {
        return input(format!(
            "alphabet of {k} letters exceeds {MAX_SUBSET_LETTERS}"
        ));
    }
    Ok(())
}

/// Words using every letter of `Σ_k`; state = set of letters seen.
pub fn u_dfa(k: usize) -> Result<Dfa> {
    subset_letters(k)?;
    let full = (1usize << k) - 1;
    let t = (0..=full).flat_map(|s| (0..k).map(move |a| (s, a, s | 1 << a)));
    Dfa::new(Alphabet::indexed(k), full + 1, t, 0, [full])
}

/// Words over `Σ_k` with no repeated letter.
pub fn v_dfa(k: usize) -> Result<Dfa> {
    subset_letters(k)?;
    let full = (1usize << k) - 1;
    let t = (0..=full).flat_map(|s| {
        (0..k)
            .filter(move |a| s >> a & 1 == 0)
            .map(move |a| (s, a, s | 1 << a))
    });
    Dfa::new(Alphabet::indexed(k), full + 1, t, 0, 0..=full)
}

/// `Σ_k · U_k`: a fresh initial state reads one letter, then as [`u_dfa`].
pub fn u_prime_dfa(k: usize) -> Result<Dfa> {
    if k == 0 {
        return input("Uprime needs a non-empty alphabet");
    }
    let u = u_dfa(k)?;
    let mut t: Vec<_> = u.transitions().map(|(p, a, q)| (p + 1, a, q + 1)).collect();
    t.extend((0..k).map(|a| (0, a, 1)));
    let finals = u.finals().into_iter().map(|q| q + 1);
    Dfa::new(u.alphabet().clone(), u.num_states() + 1, t, 0, finals)
}

/// `{aa | a ∈ Σ_k}` with states `q₀, q₁…q_k, f`.
pub fn e_dfa(k: usize) -> Result<Dfa> {
    let f = k + 1;
    let t = (0..k).flat_map(|a| [(0, a, a + 1), (a + 1, a, f)]);
    Dfa::new(Alphabet::indexed(k), k + 2, t, 0, [f])
}

/// Non-empty words over `Σ_k` whose first letter does not reappear.
pub fn d_dfa(k: usize) -> Result<Dfa> {
    let t = (0..k).flat_map(|a| {
        std::iter::once((0, a, a + 1)).chain(
            (0..k)
                .filter(move |&b| b != a)
                .map(move |b| (a + 1, b, a + 1)),
        )
    });
    Dfa::new(Alphabet::indexed(k), k + 1, t, 0, 1..=k)
}

/// `Σ_k* ∖ U_k`: state `i` guesses that `aᵢ` never occurs.
pub fn not_u_nfa(k: usize) -> Result<Nfa> {
    let t = (0..k).flat_map(|q| (0..k).filter(move |&a| a != q).map(move |a| (q, a, q)));
    Nfa::new(Alphabet::indexed(k), k, t, 0..k, 0..k)
}

/// Minimal DFA of a finite language, through its trie.
pub fn finite_language_dfa(alphabet: &Alphabet, words: &[Word]) -> Result<Dfa> {
    let k = alphabet.len();
    let mut delta: Vec<Option<StateId>> = vec![None; k];
    let mut fin = vec![false];
    for w in words {
        alphabet.check_word(w)?;
        let mut q = 0;
        for &a in w.iter() {
            q = match delta[q * k + a] {
                Some(r) => r,
                None => {
                    let r = fin.len();
                    fin.push(false);
                    delta.extend(std::iter::repeat_n(None, k));
                    delta[q * k + a] = Some(r);
                    r
                }
            };
        }
        fin[q] = true;
    }
    Ok(minimize(&Dfa::from_parts(alphabet.clone(), delta, 0, fin)))
}

pub(crate) fn ab() -> Alphabet {
    Alphabet::new(["a", "b"]).unwrap()
}

/// `{aⁱ b a^{2j} b aⁱ | i + j + 1 = n}` over `{a, b}`, as a complete
/// minimal DFA.
pub fn heam_dfa(n: usize) -> Result<Dfa> {
    if n == 0 {
        return input("heam needs n >= 1");
    }
    let words: Vec<Word> = (0..n).map(|i| heam_word(n, i)).collect();
    Ok(finite_language_dfa(&ab(), &words)?.complete())
}

pub(crate) fn heam_word(n: usize, i: usize) -> Word {
    let j = n - 1 - i;
    let mut w = vec![0; i];
    w.push(1);
    w.extend(std::iter::repeat_n(0, 2 * j));
    w.push(1);
    w.extend(std::iter::repeat_n(0, i));
    Word(w)
}

fn bit(x: usize, k: usize) -> bool {
    x >> (k - 1) & 1 == 1
}

/// `ℓ = ⌊(n−3)/2⌋` for the downward-interior witness.
pub fn down_witness_ell(n: usize) -> Result<usize> {
    if !(3..=13).contains(&n) {
        return input(format!("downIntWitness needs 3 <= n <= 13, got {n}"));
    }
    Ok((n - 3) / 2)
}

/// `ℓ = ⌊(n−4)/3⌋` for the upward-interior witness.
pub fn up_witness_ell(n: usize) -> Result<usize> {
    if !(7..=13).contains(&n) {
        return input(format!("upIntWitness needs 7 <= n <= 13, got {n}"));
    }
    Ok((n - 4) / 3)
}

/// `Γ* ∖ {xx | x ∈ Γ}` with `|Γ| = 2^ℓ`, letters `g0, g1, …`.
///
/// States: `in`, then `k⁺, k⁻` for `k = 1..ℓ`, then `fi` and `z`. A pair
/// `xy` reaches `fi` through `k^±` exactly when `x` and `y` differ on bit
/// `k`; `fi` and `z` handle the remaining lengths.
pub fn down_interior_witness(n: usize) -> Result<Nfa> {
    let ell = down_witness_ell(n)?;
    let g = 1usize << ell;
    let sigma = Alphabet::with_prefix("g", 0, g);
    let plus = |k: usize| 2 * k - 1;
    let minus = |k: usize| 2 * k;
    let fi = 2 * ell + 1;
    let z = 2 * ell + 2;
    let mut t = Vec::new();
    for x in 0..g {
        t.extend([(0, x, fi), (fi, x, z), (z, x, z), (z, x, fi)]);
        for k in 1..=ell {
            if bit(x, k) {
                t.push((0, x, plus(k)));
                t.push((minus(k), x, fi));
            } else {
                t.push((0, x, minus(k)));
                t.push((plus(k), x, fi));
            }
        }
    }
    Nfa::new(sigma, 2 * ell + 3, t, [0], (0..z).collect::<Vec<_>>())
}

/// Alphabet `g0…g(2^ℓ−1), k1…kℓ` of the upward-interior witness.
pub fn up_witness_alphabet(ell: usize) -> Alphabet {
    let mut names: Vec<String> = (0..1usize << ell).map(|x| format!("g{x}")).collect();
    names.extend((1..=ell).map(|k| format!("k{k}")));
    Alphabet::new(names).unwrap()
}

/// `L′ ∪ (Σ* ∖ Γ(ΓΥ)*)` where `L′` holds the words `x w y k w′` with
/// `x, y ∈ Γ`, `k ∈ Υ` and `x`, `y` agreeing on bit `k`.
///
/// States: `in`, then `r_k⁺, r_k⁻, t_k` for `k = 1..ℓ`, then `fi`, `s1`,
/// `s2`. The last two track the shape `Γ(ΓΥ)*` and share `in` and `fi`.
pub fn up_interior_witness(n: usize) -> Result<Nfa> {
    let ell = up_witness_ell(n)?;
    let g = 1usize << ell;
    let sigma = up_witness_alphabet(ell);
    let upsilon = |k: usize| -> Symbol { g + k - 1 };
    let plus = |k: usize| 3 * k - 2;
    let minus = |k: usize| 3 * k - 1;
    let tk = |k: usize| 3 * k;
    let fi = 3 * ell + 1;
    let s1 = 3 * ell + 2;
    let s2 = 3 * ell + 3;
    let mut t = Vec::new();
    for c in sigma.symbols() {
        t.push((fi, c, fi));
        for k in 1..=ell {
            t.push((plus(k), c, plus(k)));
            t.push((minus(k), c, minus(k)));
        }
    }
    for x in 0..g {
        for k in 1..=ell {
            if bit(x, k) {
                t.push((0, x, plus(k)));
                t.push((plus(k), x, tk(k)));
            } else {
                t.push((0, x, minus(k)));
                t.push((minus(k), x, tk(k)));
            }
        }
        t.extend([(0, x, s1), (s1, x, s2), (s2, x, fi)]);
    }
    for k in 1..=ell {
        let u = upsilon(k);
        t.extend([(tk(k), u, fi), (0, u, fi), (s1, u, fi), (s2, u, s1)]);
    }
    Nfa::new(sigma, 3 * ell + 4, t, [0], [0, fi, s2])
}
