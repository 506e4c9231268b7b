//! Involutions of `S_n` written as clan-like strings of dots and matched labels,
//! with the two equivalent descriptions of Bruhat order restricted to them.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::clan::{Clan, Symbol};
use crate::error::{Error, Result};
use crate::rank::pair_index;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvolutionSymbol {
    Dot,
    /// 1-based position of the mate.
    Arc(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvolutionString {
    symbols: Vec<InvolutionSymbol>,
}

impl InvolutionString {
    pub fn from_symbols(symbols: Vec<InvolutionSymbol>) -> Result<Self> {
        let n = symbols.len();
        for (idx, s) in symbols.iter().enumerate() {
            if let InvolutionSymbol::Arc(m) = *s {
                if m == idx + 1
                    || !(1..=n).contains(&m)
                    || symbols[m - 1] != InvolutionSymbol::Arc(idx + 1)
                {
                    return Err(Error::UnmatchedArcLabel {
                        label: idx + 1,
                        count: 1,
                    });
                }
            }
        }
        Ok(Self { symbols })
    }

    /// The involution `u` with `u(i)` given 1-based in `images[i - 1]`.
    pub fn from_permutation(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut symbols = Vec::with_capacity(n);
        for (idx, &img) in images.iter().enumerate() {
            if !(1..=n).contains(&img) || images[img - 1] != idx + 1 {
                return Err(Error::InvalidSymbol(img.to_string()));
            }
            symbols.push(if img == idx + 1 {
                InvolutionSymbol::Dot
            } else {
                InvolutionSymbol::Arc(img)
            });
        }
        Ok(Self { symbols })
    }

    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[InvolutionSymbol] {
        &self.symbols
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(idx, s)| match *s {
                InvolutionSymbol::Arc(m) if m > idx + 1 => Some((idx + 1, m)),
                _ => None,
            })
    }

    /// Images `u(1), ..., u(n)`, 1-based.
    pub fn to_permutation(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(idx, s)| match *s {
                InvolutionSymbol::Dot => idx + 1,
                InvolutionSymbol::Arc(m) => m,
            })
            .collect()
    }

    /// `γ(i;·)` for `i = 1..=n`: dots plus twice the complete arcs among the first `i`.
    pub fn dot_ranks(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n());
        let mut acc = 0;
        for (idx, s) in self.symbols.iter().enumerate() {
            match *s {
                InvolutionSymbol::Dot => acc += 1,
                InvolutionSymbol::Arc(m) if m < idx + 1 => acc += 2,
                InvolutionSymbol::Arc(_) => {}
            }
            out.push(acc);
        }
        out
    }

    /// `γ(s;t)` in row-major order: arcs `a <-> b` with `a <= s` and `b > t`.
    pub fn pair_ranks(&self) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![0; n * n.saturating_sub(1) / 2];
        for (a, b) in self.arcs() {
            for s in a..b {
                for t in s + 1..b {
                    out[pair_index(n, s, t)] += 1;
                }
            }
        }
        out
    }
}

impl fmt::Display for InvolutionString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.arcs().count() > 9;
        let mut next = 0;
        let mut labels = vec![0; self.n()];
        for (idx, s) in self.symbols.iter().enumerate() {
            if wide && idx > 0 {
                f.write_str(" ")?;
            }
            match *s {
                InvolutionSymbol::Dot => f.write_str(".")?,
                InvolutionSymbol::Arc(m) => {
                    if m > idx + 1 {
                        next += 1;
                        labels[m - 1] = next;
                        write!(f, "{next}")?;
                    } else {
                        write!(f, "{}", labels[idx])?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Accepts `.` or `·` for fixed points and digits (or whitespace-separated
/// numbers) for matched pairs.
impl FromStr for InvolutionString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let tokens: Vec<&str> = if s.chars().any(char::is_whitespace) {
            s.split_whitespace().collect()
        } else {
            s.char_indices()
                .map(|(i, c)| &s[i..i + c.len_utf8()])
                .collect()
        };
        let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (idx, tok) in tokens.iter().enumerate() {
            match *tok {
                "." | "\u{b7}" => {}
                _ => match tok.parse::<usize>() {
                    Ok(l) if l > 0 => seen.entry(l).or_default().push(idx + 1),
                    _ => return Err(Error::InvalidSymbol(tok.to_string())),
                },
            }
        }
        let mut symbols = vec![InvolutionSymbol::Dot; tokens.len()];
        for (label, pos) in seen {
            if pos.len() != 2 {
                return Err(Error::UnmatchedArcLabel {
                    label,
                    count: pos.len(),
                });
            }
            symbols[pos[0] - 1] = InvolutionSymbol::Arc(pos[1]);
            symbols[pos[1] - 1] = InvolutionSymbol::Arc(pos[0]);
        }
        Ok(Self { symbols })
    }
}

/// Forgets the signs of a clan.
pub fn underlying_involution(clan: &Clan) -> InvolutionString {
    InvolutionString {
        symbols: clan
            .symbols()
            .iter()
            .map(|s| match *s {
                Symbol::Arc(m) => InvolutionSymbol::Arc(m),
                _ => InvolutionSymbol::Dot,
            })
            .collect(),
    }
}

fn check_lengths(a: &InvolutionString, b: &InvolutionString) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch {
            expected: a.n(),
            found: b.n(),
        });
    }
    Ok(())
}

/// Bruhat order on involutions via dot ranks and pair ranks.
pub fn involution_leq_rank(a: &InvolutionString, b: &InvolutionString) -> Result<bool> {
    check_lengths(a, b)?;
    let dots = a
        .dot_ranks()
        .into_iter()
        .zip(b.dot_ranks())
        .all(|(x, y)| x >= y);
    Ok(dots
        && a.pair_ranks()
            .into_iter()
            .zip(b.pair_ranks())
            .all(|(x, y)| x <= y))
}

/// Bruhat order on `S_n` through `r_u(i,j) = #{k <= i : u(k) >= j}`:
/// `u <= v` iff `r_u(i,j) <= r_v(i,j)` for all `i, j`.
pub fn involution_leq_sn(a: &InvolutionString, b: &InvolutionString) -> Result<bool> {
    check_lengths(a, b)?;
    Ok(permutation_leq(&a.to_permutation(), &b.to_permutation()))
}

/// Bruhat comparison of two permutations of equal length given by their
/// 1-based images.
pub fn permutation_leq(u: &[usize], v: &[usize]) -> bool {
    let n = u.len();
    // r[j] = #{k <= i : w(k) >= j}, swept over i.
    let mut ru = vec![0usize; n + 2];
    let mut rv = vec![0usize; n + 2];
    for (&ui, &vi) in u.iter().zip(v) {
        ru[1..=ui].iter_mut().for_each(|r| *r += 1);
        rv[1..=vi].iter_mut().for_each(|r| *r += 1);
        if (1..=n).any(|j| ru[j] > rv[j]) {
            return false;
        }
    }
    true
}

/// Every involution of `S_n`, in lexicographic order of the permutation.
pub fn enumerate_involutions(n: usize) -> Vec<InvolutionString> {
    let mut out = Vec::new();
    let mut images = vec![0usize; n];
    fill(&mut images, 0, &mut out);
    out.sort_by_key(InvolutionString::to_permutation);
    out
}

fn fill(images: &mut [usize], pos: usize, out: &mut Vec<InvolutionString>) {
    if pos == images.len() {
        let symbols = images
            .iter()
            .enumerate()
            .map(|(idx, &m)| {
                if m == idx + 1 {
                    InvolutionSymbol::Dot
                } else {
                    InvolutionSymbol::Arc(m)
                }
            })
            .collect();
        out.push(InvolutionString { symbols });
        return;
    }
    if images[pos] != 0 {
        return fill(images, pos + 1, out);
    }
    images[pos] = pos + 1;
    fill(images, pos + 1, out);
    for m in pos + 1..images.len() {
        if images[m] == 0 {
            images[pos] = m + 1;
            images[m] = pos + 1;
            fill(images, pos + 1, out);
            images[m] = 0;
        }
    }
    images[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv(s: &str) -> InvolutionString {
        s.parse().unwrap()
    }

    #[test]
    fn underlying_forgets_signs() {
        let c: Clan = "1+1-".parse().unwrap();
        assert_eq!(underlying_involution(&c), inv("1.1."));
        assert_eq!(underlying_involution(&"++-".parse().unwrap()), inv("..."));
        assert_eq!(underlying_involution(&"1221".parse().unwrap()), inv("1221"));
        assert_eq!(inv("1·1·"), inv("1.1."));
    }

    #[test]
    fn permutation_roundtrip() {
        let i = inv("12..12");
        assert_eq!(i.to_permutation(), vec![5, 6, 3, 4, 1, 2]);
        assert_eq!(
            InvolutionString::from_permutation(&[5, 6, 3, 4, 1, 2]).unwrap(),
            i
        );
        assert!(InvolutionString::from_permutation(&[2, 3, 1]).is_err());
    }

    #[test]
    fn small_comparisons() {
        assert!(involution_leq_rank(&inv(".."), &inv("11")).unwrap());
        assert!(involution_leq_sn(&inv(".."), &inv("11")).unwrap());
        assert!(!involution_leq_rank(&inv("11"), &inv("..")).unwrap());
        assert!(!involution_leq_rank(&inv("1.1."), &inv("11..")).unwrap());
        assert!(!involution_leq_sn(&inv("1.1."), &inv("11..")).unwrap());
        let id = inv("....");
        assert!(involution_leq_sn(&id, &id).unwrap());
        assert_eq!(
            involution_leq_rank(&inv(".."), &inv("...")),
            Err(Error::LengthMismatch {
                expected: 2,
                found: 3
            })
        );
        assert!(involution_leq_sn(&inv(".."), &inv("...")).is_err());
    }

    #[test]
    fn involution_counts() {
        // telephone numbers
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_involutions(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 10, 26, 76, 232]);
    }

    #[test]
    fn dot_ranks_match_definition() {
        assert_eq!(inv("1.1.").dot_ranks(), vec![0, 1, 3, 4]);
        assert_eq!(inv("11..").dot_ranks(), vec![0, 2, 3, 4]);
    }
}
