use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A finite or cofinite set of non-negative integers below 64.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MembershipSet {
    /// Exactly the elements of the mask.
    Finite(u64),
    /// Every integer except the elements of the mask.
    Cofinite(u64),
}

impl MembershipSet {
    pub const NATURALS: MembershipSet = MembershipSet::Cofinite(0);

    pub fn finite<I: IntoIterator<Item = u32>>(items: I) -> Self {
        MembershipSet::Finite(items.into_iter().fold(0, |m, x| m | 1 << x))
    }

    pub fn cofinite<I: IntoIterator<Item = u32>>(excluded: I) -> Self {
        MembershipSet::Cofinite(excluded.into_iter().fold(0, |m, x| m | 1 << x))
    }

    pub fn contains(self, x: usize) -> bool {
        let listed = x < 64 && (self.mask() >> x) & 1 == 1;
        match self {
            MembershipSet::Finite(_) => listed,
            MembershipSet::Cofinite(_) => !listed,
        }
    }

    pub fn is_empty(self) -> bool {
        self == MembershipSet::Finite(0)
    }

    fn mask(self) -> u64 {
        match self {
            MembershipSet::Finite(m) | MembershipSet::Cofinite(m) => m,
        }
    }

    /// The count beyond which membership no longer changes: `0` for ℕ, one
    /// more than the largest listed element otherwise. The empty set gets `0`.
    pub fn d(self) -> usize {
        match self.mask() {
            0 => 0,
            m => 64 - m.leading_zeros() as usize,
        }
    }
}

impl fmt::Display for MembershipSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = (0..64).filter(|x| (self.mask() >> x) & 1 == 1).map(|x| x.to_string()).collect();
        match self {
            MembershipSet::Finite(_) => write!(f, "{{{}}}", items.join(",")),
            MembershipSet::Cofinite(0) => f.write_str("N"),
            MembershipSet::Cofinite(_) => write!(f, "N\\{{{}}}", items.join(",")),
        }
    }
}

fn parse_braced(input: &str, body: &str) -> Result<u64, Error> {
    let err = |reason: String| Error::Membership {
        input: input.to_owned(),
        reason,
    };
    let inner = body
        .trim()
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(|| err("expected a braced list such as {0,1}".into()))?;
    let mut mask = 0u64;
    for item in inner.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let x: u32 = item.parse().map_err(|e| err(format!("{item:?}: {e}")))?;
        if x >= 64 {
            return Err(err(format!("element {x} is not below 64")));
        }
        mask |= 1 << x;
    }
    Ok(mask)
}

impl FromStr for MembershipSet {
    type Err = Error;

    /// Accepts `{1,2}`, `N` and `N\{0,1}`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let rest = t.strip_prefix('N').or_else(|| t.strip_prefix('ℕ'));
        match rest {
            Some("") => Ok(MembershipSet::NATURALS),
            Some(rest) => {
                let body = rest.trim_start().strip_prefix('\\').ok_or_else(|| Error::Membership {
                    input: s.to_owned(),
                    reason: "expected `N` or `N\\{...}`".into(),
                })?;
                Ok(MembershipSet::Cofinite(parse_braced(s, body)?))
            }
            None => Ok(MembershipSet::Finite(parse_braced(s, t)?)),
        }
    }
}
