//! Construction and validation of transform plans.
//!
//! A [`TransformPlan`] is only handed out after three facts have been checked
//! directly: the base has multiplicative order exactly `N`, every offset sum
//! `Σ_k s^{(d·k) mod N}` vanishes for `d ≠ 0` (and equals `N` for `d = 0`),
//! and `N` is invertible modulo `M`.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bigring::{geometric_sum, mod_inverse, RingElement, RingModulus};
use crate::error::{Error, Result};

/// Parameter regime. Each one fixes how the modulus is derived from `s` and `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `M = Σ_{m<N} s^m`.
    PrimeN,
    /// `N = p^n`, `M = Σ_{m<p} (s^{p^{n-1}})^m`.
    PrimePower { p: u64, n: u32 },
    /// `N = 2p`, `M = s^p + 1`.
    TwoP { p: u64 },
    /// `N` even, `M = N + 1` prime, base taken modulo `N + 1`.
    PseudoFermat,
    /// [`Regime::PrimeN`] with `s = 2`, i.e. `M = 2^N − 1`.
    Mersenne,
    /// [`Regime::TwoP`] with `s = 2` and `p` a power of two, i.e. `M = 2^p + 1`.
    Fermat,
}

impl Regime {
    pub fn name(&self) -> &'static str {
        match self {
            Regime::PrimeN => "prime",
            Regime::PrimePower { .. } => "prime-power",
            Regime::TwoP { .. } => "two-p",
            Regime::PseudoFermat => "pseudo-fermat",
            Regime::Mersenne => "mersenne",
            Regime::Fermat => "fermat",
        }
    }

    /// Parses a regime name, deriving `p` (and `n`) from the length where the
    /// regime carries them.
    pub fn from_name(name: &str, len: usize) -> Result<Regime> {
        let len = len as u64;
        match name {
            "prime" => Ok(Regime::PrimeN),
            "mersenne" => Ok(Regime::Mersenne),
            "pseudo-fermat" => Ok(Regime::PseudoFermat),
            "fermat" => Ok(Regime::Fermat),
            "two-p" => {
                if !len.is_multiple_of(2) {
                    return Err(Error::RegimeMismatch(format!("two-p needs an even length, got {len}")));
                }
                Ok(Regime::TwoP { p: len / 2 })
            }
            "prime-power" => match prime_power(len) {
                Some((p, n)) if n >= 2 => Ok(Regime::PrimePower { p, n }),
                _ => Err(Error::RegimeMismatch(format!("{len} is not p^n with p prime, n >= 2"))),
            },
            other => Err(Error::Parse(format!("unknown regime '{other}'"))),
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::PrimePower { p, n } => write!(f, "prime-power(p={p}, n={n})"),
            Regime::TwoP { p } => write!(f, "two-p(p={p})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A validated `(s, N, M)` triple with `N⁻¹ mod M` and the power table
/// `s^e mod M` for `e < N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformPlan {
    s: BigUint,
    len: usize,
    modulus: RingModulus,
    regime: Regime,
    inv_n: RingElement,
    powers: Vec<BigUint>,
}

impl TransformPlan {
    /// The effective base (for pseudo-Fermat plans, already reduced mod `N + 1`).
    pub fn s(&self) -> &BigUint {
        &self.s
    }

    /// Transform length `N`.
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always `false`: plans have `N >= 2`.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// `N mod M` as a ring element.
    pub fn n_element(&self) -> RingElement {
        self.modulus.reduce(&BigUint::from(self.len))
    }

    pub fn modulus(&self) -> &RingModulus {
        &self.modulus
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn inv_n(&self) -> &RingElement {
        &self.inv_n
    }

    /// `s^(e mod N) mod M`.
    pub fn power(&self, e: usize) -> &BigUint {
        &self.powers[e % self.len]
    }

    pub fn powers(&self) -> &[BigUint] {
        &self.powers
    }
}

impl fmt::Display for TransformPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={} N={} M={} [{}]", self.s, self.len, self.modulus, self.regime)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `Some((p, n))` when `value = p^n` with `p` prime and `n ≥ 1`.
pub fn prime_power(value: u64) -> Option<(u64, u32)> {
    if value < 2 {
        return None;
    }
    let mut p = 2u64;
    while p.saturating_mul(p) <= value && !value.is_multiple_of(p) {
        p += 1;
    }
    if !value.is_multiple_of(p) {
        // no factor up to sqrt: value itself is prime
        return Some((value, 1));
    }
    let (mut rest, mut n) = (value, 0u32);
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p, n))
}

fn proper_divisors(n: usize) -> Vec<usize> {
    (1..n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn regime_modulus(s: &BigUint, len: usize, regime: Regime) -> Result<(BigUint, BigUint)> {
    let two = BigUint::from(2u32);
    let n64 = len as u64;
    match regime {
        Regime::PrimeN => Ok((s.clone(), geometric_sum(s, n64))),
        Regime::Mersenne => {
            if *s != two {
                return Err(Error::RegimeMismatch(format!("mersenne plans use s = 2, got {s}")));
            }
            Ok((s.clone(), geometric_sum(s, n64)))
        }
        Regime::PrimePower { p, n } => {
            if !is_prime(p) || n < 2 {
                return Err(Error::RegimeMismatch(format!("prime-power needs p prime and n >= 2, got p={p}, n={n}")));
            }
            let expected = p.checked_pow(n).filter(|&v| v == n64);
            if expected.is_none() {
                return Err(Error::RegimeMismatch(format!("N = {len} is not {p}^{n}")));
            }
            let step = num_traits::pow::pow(s.clone(), p.pow(n - 1) as usize);
            let m = geometric_sum(&step, p);
            if m <= BigUint::from(n64) {
                return Err(Error::RegimeMismatch(format!("modulus {m} must exceed N = {len}")));
            }
            Ok((s.clone(), m))
        }
        Regime::TwoP { p } => {
            if p == 0 || p.checked_mul(2) != Some(n64) {
                return Err(Error::RegimeMismatch(format!("N = {len} is not 2·{p}")));
            }
            Ok((s.clone(), num_traits::pow::pow(s.clone(), p as usize) + 1u32))
        }
        Regime::Fermat => {
            if *s != two {
                return Err(Error::RegimeMismatch(format!("fermat plans use s = 2, got {s}")));
            }
            let p = n64 / 2;
            if !n64.is_multiple_of(2) || !p.is_power_of_two() {
                return Err(Error::RegimeMismatch(format!("fermat needs N = 2p with p a power of two, got N = {len}")));
            }
            Ok((s.clone(), num_traits::pow::pow(two, p as usize) + 1u32))
        }
        Regime::PseudoFermat => {
            if !n64.is_multiple_of(2) || !is_prime(n64 + 1) {
                return Err(Error::RegimeMismatch(format!(
                    "pseudo-fermat needs N even and N + 1 prime, got N = {len}"
                )));
            }
            let m = BigUint::from(n64 + 1);
            Ok((s % &m, m))
        }
    }
}

/// Builds and validates a plan.
///
/// Checks run in order: regime preconditions, `ord_M(s) = N`, the offset
/// sums for every `d`, then invertibility of `N`.
pub fn make_plan(s: impl Into<BigUint>, len: usize, regime: Regime) -> Result<TransformPlan> {
    let s = s.into();
    if len < 2 {
        return Err(Error::InvalidArgument(format!("transform length must be at least 2, got {len}")));
    }
    if s < BigUint::from(2u32) {
        return Err(Error::InvalidArgument(format!("base must be at least 2, got {s}")));
    }
    let (s, m) = regime_modulus(&s, len, regime)?;
    let modulus = RingModulus::new(m)?;
    let mv = modulus.value();

    let mut powers = Vec::with_capacity(len);
    let mut acc = BigUint::one() % mv;
    for _ in 0..len {
        powers.push(acc.clone());
        acc = acc * &s % mv;
    }
    // acc is now s^N
    let order_error =
        |found: String| Error::OrderMismatch { s: s.to_string(), modulus: mv.to_string(), expected: len, found };
    if !acc.is_one() {
        return Err(order_error(format!("not a divisor of N (s^{len} = {acc})")));
    }
    if let Some(d) = proper_divisors(len).into_iter().find(|&d| powers[d].is_one()) {
        return Err(order_error(d.to_string()));
    }

    // the offset sum depends on d only through gcd(d, N)
    let mut passed = vec![false; len + 1];
    for d in 0..len {
        let g = d.gcd(&len);
        if passed[g] {
            continue;
        }
        let sum = (0..len).fold(BigUint::zero(), |sum, k| (sum + &powers[d * k % len]) % mv);
        let expected = if d == 0 { BigUint::from(len) % mv } else { BigUint::zero() };
        if sum != expected {
            return Err(Error::ExistenceConditionFailed(d));
        }
        passed[g] = true;
    }

    let n_big = BigUint::from(len);
    let inv_n = match regime {
        Regime::PseudoFermat => {
            if (&n_big * &n_big % mv).is_one() {
                Some(n_big.clone())
            } else {
                None
            }
        }
        _ => mod_inverse(&n_big, mv),
    };
    let inv_n = inv_n.ok_or_else(|| Error::NotInvertible { value: n_big.clone(), modulus: mv.clone() })?;
    let inv_n = modulus.element(inv_n)?;

    Ok(TransformPlan { s, len, modulus, regime, inv_n, powers })
}

/// Bounds for [`plan_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConstraints {
    pub min_n: usize,
    pub min_m: BigUint,
    pub preferred_s: Option<u64>,
    /// Largest transform length tried.
    pub max_n: usize,
    /// Largest base tried when no base is preferred.
    pub max_s: u64,
}

impl SearchConstraints {
    pub fn new(min_n: usize, min_m: impl Into<BigUint>) -> Self {
        SearchConstraints { min_n, min_m: min_m.into(), preferred_s: None, max_n: 64, max_s: 32 }
    }

    pub fn with_preferred_s(mut self, s: u64) -> Self {
        self.preferred_s = Some(s);
        self
    }

    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }
}

struct Candidate {
    s: u64,
    len: usize,
    regime: Regime,
    modulus: BigUint,
}

fn candidates(c: &SearchConstraints) -> Vec<Candidate> {
    let bases: Vec<u64> = match c.preferred_s {
        Some(s) => vec![s],
        None => (2..=c.max_s).collect(),
    };
    let mut out = Vec::new();
    for len in c.min_n.max(2)..=c.max_n {
        let n64 = len as u64;
        let mut regimes = Vec::new();
        if is_prime(n64) {
            regimes.push(Regime::PrimeN);
        }
        if let Some((p, n)) = prime_power(n64).filter(|&(_, n)| n >= 2) {
            regimes.push(Regime::PrimePower { p, n });
        }
        if n64.is_multiple_of(2) {
            regimes.push(Regime::TwoP { p: n64 / 2 });
            if is_prime(n64 + 1) {
                regimes.push(Regime::PseudoFermat);
            }
        }
        for &s in &bases {
            for &regime in &regimes {
                let regime = match regime {
                    Regime::PrimeN if s == 2 => Regime::Mersenne,
                    Regime::TwoP { p } if s == 2 && p.is_power_of_two() => Regime::Fermat,
                    // bases at or above N + 1 repeat smaller residues
                    Regime::PseudoFermat if s > n64 => continue,
                    r => r,
                };
                if let Ok((_, modulus)) = regime_modulus(&BigUint::from(s), len, regime) {
                    if modulus >= c.min_m && modulus >= BigUint::from(2u32) {
                        out.push(Candidate { s, len, regime, modulus });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.modulus, a.len, a.s).cmp(&(&b.modulus, b.len, b.s)));
    out
}

fn check_constraints(c: &SearchConstraints) -> Result<()> {
    if c.min_n < 2 || c.min_m < BigUint::from(2u32) {
        return Err(Error::InvalidArgument("search needs min_n >= 2 and min_m >= 2".into()));
    }
    if c.min_n > c.max_n {
        return Err(Error::NoPlanFound(format!("min_n = {} exceeds the search window max_n = {}", c.min_n, c.max_n)));
    }
    Ok(())
}

/// All valid plans with `N ≥ min_n` and `M ≥ min_m` inside the search
/// window, sorted by modulus.
pub fn plan_search(c: &SearchConstraints) -> Result<Vec<TransformPlan>> {
    check_constraints(c)?;
    let mut plans: Vec<TransformPlan> = Vec::new();
    for cand in candidates(c) {
        if let Ok(plan) = make_plan(cand.s, cand.len, cand.regime) {
            let duplicate = plans.iter().any(|p| p.len == plan.len && p.s == plan.s && p.modulus == plan.modulus);
            if !duplicate {
                plans.push(plan);
            }
        }
    }
    if plans.is_empty() {
        return Err(Error::NoPlanFound(format!("no plan with N in {}..={} and M >= {}", c.min_n, c.max_n, c.min_m)));
    }
    Ok(plans)
}

/// The plan with the smallest modulus satisfying the constraints; stops at
/// the first candidate that validates.
pub fn smallest_plan(c: &SearchConstraints) -> Result<TransformPlan> {
    check_constraints(c)?;
    candidates(c)
        .into_iter()
        .find_map(|cand| make_plan(cand.s, cand.len, cand.regime).ok())
        .ok_or_else(|| Error::NoPlanFound(format!("no plan with N in {}..={} and M >= {}", c.min_n, c.max_n, c.min_m)))
}

/// Order of `s` modulo `m` by brute force, up to `limit`.
pub fn multiplicative_order(s: &BigUint, m: &BigUint, limit: usize) -> Option<usize> {
    let mut acc = s % m;
    for d in 1..=limit {
        if acc.is_one() {
            return Some(d);
        }
        acc = acc * s % m;
    }
    None
}
