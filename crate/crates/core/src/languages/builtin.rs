//! Named predicate languages.

use std::fmt;

use crate::words::BinaryWord;

use super::FrequencySet;

/// A named language given by a membership predicate. Every variant is
/// closed under the complement morphism 0 ↔ 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builtin {
    /// 0 and 1 strictly alternate.
    Wrep,
    /// Nonempty palindromes.
    Palindrome,
    /// Squares `uu`, including λ.
    Copy,
    /// Lyndon words under either letter order.
    Lyndon,
    /// Lyndon words of odd length.
    LyndonOdd,
    /// Balanced words whose prefixes never let one fixed letter lead.
    Dyck,
    /// Equal letter counts.
    Balanced,
    /// `0^n 1^n` or `1^n 0^n`, n ≥ 0.
    ZeroNOneN,
    /// Both letters occur exactly k times.
    Uniform(usize),
    /// At most k occurrences of the factor 00 and at most k of 11.
    K11(usize),
    /// Neither `0^k` nor `1^k` is a factor.
    NoKK(usize),
    /// Both letter counts odd.
    OddCounts,
    /// Both letter counts even.
    EvenCounts,
    /// Words with a letter count outside the given frequency set.
    Trash(FrequencySet),
}

impl Builtin {
    pub fn contains(&self, b: &BinaryWord) -> bool {
        let bits = b.bits();
        match self {
            Builtin::Wrep => bits.windows(2).all(|w| w[0] != w[1]),
            Builtin::Palindrome => !bits.is_empty() && bits.iter().eq(bits.iter().rev()),
            Builtin::Copy => {
                let n = bits.len();
                n % 2 == 0 && bits[..n / 2] == bits[n / 2..]
            }
            Builtin::Lyndon => is_lyndon(bits, false) || is_lyndon(bits, true),
            Builtin::LyndonOdd => bits.len() % 2 == 1 && Builtin::Lyndon.contains(b),
            Builtin::Dyck => {
                b.zeros() == b.ones() && (prefix_dominated(bits, 0) || prefix_dominated(bits, 1))
            }
            Builtin::Balanced => b.zeros() == b.ones(),
            Builtin::ZeroNOneN => {
                let n = bits.len();
                if n % 2 == 1 {
                    return false;
                }
                let (head, tail) = bits.split_at(n / 2);
                match head.first() {
                    None => true,
                    Some(&x) => head.iter().all(|&c| c == x) && tail.iter().all(|&c| c != x),
                }
            }
            Builtin::Uniform(k) => b.zeros() == *k && b.ones() == *k,
            Builtin::K11(k) => {
                let (mut zz, mut oo) = (0, 0);
                for w in bits.windows(2) {
                    match (w[0], w[1]) {
                        (0, 0) => zz += 1,
                        (1, 1) => oo += 1,
                        _ => {}
                    }
                }
                zz <= *k && oo <= *k
            }
            Builtin::NoKK(k) => {
                if *k == 0 {
                    return false;
                }
                let mut run = 0;
                let mut prev = None;
                for &c in bits {
                    run = if prev == Some(c) { run + 1 } else { 1 };
                    prev = Some(c);
                    if run >= *k {
                        return false;
                    }
                }
                true
            }
            Builtin::OddCounts => b.zeros() % 2 == 1 && b.ones() % 2 == 1,
            Builtin::EvenCounts => b.zeros() % 2 == 0 && b.ones() % 2 == 0,
            Builtin::Trash(freq) => !freq.contains(b.zeros()) || !freq.contains(b.ones()),
        }
    }

    /// The set of letter frequencies realized by members, when it has a
    /// closed form.
    pub fn frequency_set(&self) -> Option<FrequencySet> {
        use FrequencySet as F;
        Some(match self {
            Builtin::Wrep | Builtin::Palindrome | Builtin::Copy | Builtin::Lyndon => F::AllPositive,
            Builtin::LyndonOdd | Builtin::Dyck | Builtin::Balanced | Builtin::ZeroNOneN => {
                F::AllPositive
            }
            Builtin::EvenCounts => F::periodic(2, [0]),
            Builtin::OddCounts => F::periodic(2, [1]),
            Builtin::Uniform(k) => F::explicit(if *k == 0 { vec![] } else { vec![*k] }),
            Builtin::K11(_) => F::AllPositive,
            Builtin::NoKK(k) if *k <= 1 => F::explicit(vec![]),
            Builtin::NoKK(_) => F::AllPositive,
            Builtin::Trash(_) => F::AllPositive,
        })
    }

    /// Parses a builtin name, with an optional integer parameter.
    pub fn from_name(name: &str, param: Option<usize>) -> Option<Builtin> {
        Some(match (name, param) {
            ("wrep", None) => Builtin::Wrep,
            ("palindrome", None) => Builtin::Palindrome,
            ("copy", None) => Builtin::Copy,
            ("lyndon", None) => Builtin::Lyndon,
            ("lyndon-odd", None) => Builtin::LyndonOdd,
            ("dyck", None) => Builtin::Dyck,
            ("balanced", None) => Builtin::Balanced,
            ("0n1n", None) => Builtin::ZeroNOneN,
            ("odd-counts", None) => Builtin::OddCounts,
            ("even-counts", None) => Builtin::EvenCounts,
            ("uniform", Some(k)) => Builtin::Uniform(k),
            ("k11", Some(k)) => Builtin::K11(k),
            ("no-kk", Some(k)) => Builtin::NoKK(k),
            _ => return None,
        })
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Wrep => f.write_str("wrep"),
            Builtin::Palindrome => f.write_str("palindrome"),
            Builtin::Copy => f.write_str("copy"),
            Builtin::Lyndon => f.write_str("lyndon"),
            Builtin::LyndonOdd => f.write_str("lyndon-odd"),
            Builtin::Dyck => f.write_str("dyck"),
            Builtin::Balanced => f.write_str("balanced"),
            Builtin::ZeroNOneN => f.write_str("0n1n"),
            Builtin::Uniform(k) => write!(f, "uniform({k})"),
            Builtin::K11(k) => write!(f, "k11({k})"),
            Builtin::NoKK(k) => write!(f, "no-kk({k})"),
            Builtin::OddCounts => f.write_str("odd-counts"),
            Builtin::EvenCounts => f.write_str("even-counts"),
            Builtin::Trash(freq) => write!(f, "trash[{freq}]"),
        }
    }
}

/// Lyndon test via Duval's factorization: a nonempty word is Lyndon iff
/// its first Lyndon factor is the whole word. `flip` swaps the letter order.
fn is_lyndon(bits: &[u8], flip: bool) -> bool {
    let n = bits.len();
    if n == 0 {
        return false;
    }
    let at = |i: usize| bits[i] ^ flip as u8;
    let (mut j, mut k) = (1usize, 0usize);
    while j < n && at(k) <= at(j) {
        if at(k) < at(j) {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    // The first factor has length j - k.
    j - k == n
}

/// Every prefix has at most as many `lead` letters as the other letter.
fn prefix_dominated(bits: &[u8], lead: u8) -> bool {
    let mut balance: isize = 0;
    for &c in bits {
        balance += if c == lead { 1 } else { -1 };
        if balance > 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::bw;

    fn brute_lyndon(bits: &[u8], flip: bool) -> bool {
        let n = bits.len();
        if n == 0 {
            return false;
        }
        let w: Vec<u8> = bits.iter().map(|b| b ^ flip as u8).collect();
        (1..n).all(|r| {
            let rot: Vec<u8> = w[r..].iter().chain(&w[..r]).copied().collect();
            w < rot
        })
    }

    #[test]
    fn lyndon_matches_rotation_oracle() {
        for w in BinaryWord::all_up_to(14) {
            let expected = brute_lyndon(w.bits(), false) || brute_lyndon(w.bits(), true);
            assert_eq!(Builtin::Lyndon.contains(&w), expected, "{w}");
        }
    }

    #[test]
    fn named_examples() {
        assert!(!Builtin::Dyck.contains(&bw("011001")));
        assert!(Builtin::Dyck.contains(&bw("1100")));
        assert!(Builtin::Wrep.contains(&bw("0101")));
        assert!(!Builtin::Wrep.contains(&bw("0110")));
        assert!(Builtin::Copy.contains(&bw("")));
        assert!(!Builtin::Palindrome.contains(&bw("")));
        assert!(Builtin::ZeroNOneN.contains(&bw("")));
        assert!(Builtin::ZeroNOneN.contains(&bw("1100")));
        assert!(!Builtin::ZeroNOneN.contains(&bw("1010")));
        assert!(Builtin::K11(1).contains(&bw("0110")));
        assert!(!Builtin::K11(1).contains(&bw("01110")));
        assert!(Builtin::NoKK(2).contains(&bw("0101")));
        assert!(!Builtin::NoKK(3).contains(&bw("0001")));
        assert!(Builtin::LyndonOdd.contains(&bw("001")));
        assert!(!Builtin::LyndonOdd.contains(&bw("0011")));
    }

    #[test]
    fn k11_zero_is_wrep_and_no_kk_two_is_wrep() {
        for w in BinaryWord::all_up_to(10) {
            let wrep = Builtin::Wrep.contains(&w);
            assert_eq!(Builtin::K11(0).contains(&w), wrep, "{w}");
            assert_eq!(Builtin::NoKK(2).contains(&w), wrep, "{w}");
        }
    }
}
