//! Clans: involutions of `1..=n` whose fixed points carry a `+` or `-` sign.
//!
//! Positions are 1-based everywhere in the public surface. A clan is stored
//! by its symbols and the mate of every arc end, so two clans compare equal
//! exactly when their canonical strings do.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Block sizes `(p, q)` of `GL_p x GL_q`; clans of this signature have length `p + q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::InvalidSignature { p, q });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// One position of a clan. `Arc` carries the 1-based position of its mate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Plus,
    Minus,
    Arc(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Clan {
    signature: Signature,
    symbols: Vec<Symbol>,
}

impl Clan {
    /// Builds a clan from its symbols, checking the matching and the sign balance.
    pub fn from_symbols(signature: Signature, symbols: Vec<Symbol>) -> Result<Self> {
        let n = signature.n();
        if symbols.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: symbols.len(),
            });
        }
        let (mut plus, mut minus) = (0, 0);
        for (idx, sym) in symbols.iter().enumerate() {
            let pos = idx + 1;
            match *sym {
                Symbol::Plus => plus += 1,
                Symbol::Minus => minus += 1,
                Symbol::Arc(mate) => {
                    let partner_ok = mate != pos
                        && (1..=n).contains(&mate)
                        && symbols[mate - 1] == Symbol::Arc(pos);
                    if !partner_ok {
                        return Err(Error::UnmatchedArcLabel {
                            label: pos,
                            count: 1,
                        });
                    }
                }
            }
        }
        if plus as isize - minus as isize != signature.p as isize - signature.q as isize {
            return Err(Error::SignatureMismatch {
                signature,
                plus,
                minus,
            });
        }
        Ok(Self { signature, symbols })
    }

    /// Parses either the compact form (`1+1-`) or the whitespace-separated
    /// token form (`1 + 1 -`, required once a label reaches 10).
    pub fn parse(text: &str, signature: Signature) -> Result<Self> {
        let tokens = tokenize(text)?;
        if tokens.len() != signature.n() {
            return Err(Error::LengthMismatch {
                expected: signature.n(),
                found: tokens.len(),
            });
        }
        let symbols = resolve_labels(&tokens)?;
        Self::from_symbols(signature, symbols)
    }

    /// Parses a clan and infers its signature: `p - q` is the sign balance
    /// and `p + q` the length, which together fix `(p, q)`.
    pub fn parse_inferred(text: &str) -> Result<Self> {
        let tokens = tokenize(text)?;
        let symbols = resolve_labels(&tokens)?;
        let n = symbols.len();
        let plus = symbols.iter().filter(|s| **s == Symbol::Plus).count();
        let minus = symbols.iter().filter(|s| **s == Symbol::Minus).count();
        let arcs = (n - plus - minus) / 2;
        let signature = Signature::new(plus + arcs, minus + arcs)?;
        Self::from_symbols(signature, symbols)
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn n(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at 1-based position `i`.
    pub fn symbol(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    pub fn mate(&self, i: usize) -> Option<usize> {
        match self.symbol(i) {
            Symbol::Arc(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_first_occurrence(&self, i: usize) -> bool {
        matches!(self.symbol(i), Symbol::Arc(m) if m > i)
    }

    pub fn is_second_occurrence(&self, i: usize) -> bool {
        matches!(self.symbol(i), Symbol::Arc(m) if m < i)
    }

    /// Arcs as `(first, second)` pairs, ordered by first occurrence.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.symbols
            .iter()
            .enumerate()
            .filter_map(|(idx, s)| match *s {
                Symbol::Arc(m) if m > idx + 1 => Some((idx + 1, m)),
                _ => None,
            })
    }

    pub fn plus_count(&self) -> usize {
        self.symbols.iter().filter(|s| **s == Symbol::Plus).count()
    }

    pub fn minus_count(&self) -> usize {
        self.symbols.iter().filter(|s| **s == Symbol::Minus).count()
    }

    pub fn arc_count(&self) -> usize {
        (self.n() - self.plus_count() - self.minus_count()) / 2
    }

    /// Clans made only of signs are the closed orbits.
    pub fn is_sign_only(&self) -> bool {
        self.symbols.iter().all(|s| !matches!(s, Symbol::Arc(_)))
    }

    /// Canonical arc labels: arcs numbered 1, 2, ... by first occurrence.
    /// Entry `i - 1` is `None` for a sign.
    pub fn labels(&self) -> Vec<Option<usize>> {
        let mut labels = vec![None; self.n()];
        let mut next = 0;
        for (idx, sym) in self.symbols.iter().enumerate() {
            if let Symbol::Arc(m) = *sym {
                if m > idx + 1 {
                    next += 1;
                    labels[idx] = Some(next);
                    labels[m - 1] = Some(next);
                }
            }
        }
        labels
    }

    /// Sort key for the enumeration order: `+ < - < first < second`, ties by mate.
    pub(crate) fn order_key(&self) -> Vec<(u8, usize)> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(idx, s)| match *s {
                Symbol::Plus => (0, 0),
                Symbol::Minus => (1, 0),
                Symbol::Arc(m) if m > idx + 1 => (2, m),
                Symbol::Arc(m) => (3, m),
            })
            .collect()
    }
}

/// Canonical rendering; compact when every label is a single digit.
impl fmt::Display for Clan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.labels();
        let compact = self.arc_count() <= 9;
        for (idx, sym) in self.symbols.iter().enumerate() {
            if !compact && idx > 0 {
                f.write_str(" ")?;
            }
            match (sym, labels[idx]) {
                (Symbol::Plus, _) => f.write_str("+")?,
                (Symbol::Minus, _) => f.write_str("-")?,
                (_, Some(l)) => write!(f, "{l}")?,
                (_, None) => unreachable!("arc without label"),
            }
        }
        Ok(())
    }
}

impl FromStr for Clan {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_inferred(s)
    }
}

pub fn parse_clan(text: &str, signature: Signature) -> Result<Clan> {
    Clan::parse(text, signature)
}

pub fn format_clan(clan: &Clan) -> String {
    clan.to_string()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Label(usize),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Empty);
    }
    let parse_one = |tok: &str| -> Result<Token> {
        match tok {
            "+" => Ok(Token::Plus),
            "-" | "\u{2212}" => Ok(Token::Minus),
            _ => match tok.parse::<usize>() {
                Ok(l) if l > 0 && tok.bytes().all(|b| b.is_ascii_digit()) => Ok(Token::Label(l)),
                _ => Err(Error::InvalidSymbol(tok.to_string())),
            },
        }
    };
    if text.chars().any(char::is_whitespace) {
        text.split_whitespace().map(parse_one).collect()
    } else {
        let mut buf = [0u8; 4];
        text.chars()
            .map(|c| parse_one(c.encode_utf8(&mut buf)))
            .collect()
    }
}

fn resolve_labels(tokens: &[Token]) -> Result<Vec<Symbol>> {
    let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (idx, tok) in tokens.iter().enumerate() {
        if let Token::Label(l) = *tok {
            seen.entry(l).or_default().push(idx + 1);
        }
    }
    let mut symbols: Vec<Symbol> = tokens
        .iter()
        .map(|t| match t {
            Token::Minus => Symbol::Minus,
            _ => Symbol::Plus,
        })
        .collect();
    for (label, positions) in &seen {
        if positions.len() != 2 {
            return Err(Error::UnmatchedArcLabel {
                label: *label,
                count: positions.len(),
            });
        }
        let (a, b) = (positions[0], positions[1]);
        symbols[a - 1] = Symbol::Arc(b);
        symbols[b - 1] = Symbol::Arc(a);
    }
    Ok(symbols)
}

/// All clans of the given signature in the canonical enumeration order.
pub fn enumerate_clans(signature: Signature) -> Vec<Clan> {
    let n = signature.n();
    let mut out = Vec::new();
    let mut symbols = vec![Symbol::Plus; n];
    let mut open = Vec::new();
    extend(signature, &mut symbols, 0, &mut open, 0, 0, 0, &mut out);
    out.sort_by_cached_key(Clan::order_key);
    out
}

// Each arc uses one slot of each block, so `plus + arcs <= p` and
// `minus + arcs <= q` throughout.
#[allow(clippy::too_many_arguments)]
fn extend(
    sig: Signature,
    symbols: &mut Vec<Symbol>,
    pos: usize,
    open: &mut Vec<usize>,
    arcs: usize,
    plus: usize,
    minus: usize,
    out: &mut Vec<Clan>,
) {
    let n = sig.n();
    if pos == n {
        if open.is_empty() {
            out.push(Clan {
                signature: sig,
                symbols: symbols.clone(),
            });
        }
        return;
    }
    if open.len() > n - pos {
        return;
    }
    if plus + arcs < sig.p {
        symbols[pos] = Symbol::Plus;
        extend(sig, symbols, pos + 1, open, arcs, plus + 1, minus, out);
    }
    if minus + arcs < sig.q {
        symbols[pos] = Symbol::Minus;
        extend(sig, symbols, pos + 1, open, arcs, plus, minus + 1, out);
    }
    if plus + arcs < sig.p && minus + arcs < sig.q {
        open.push(pos);
        extend(sig, symbols, pos + 1, open, arcs + 1, plus, minus, out);
        open.pop();
    }
    for k in 0..open.len() {
        let first = open.remove(k);
        symbols[first] = Symbol::Arc(pos + 1);
        symbols[pos] = Symbol::Arc(first + 1);
        extend(sig, symbols, pos + 1, open, arcs, plus, minus, out);
        open.insert(k, first);
    }
}
