use std::fmt;

use serde::{Deserialize, Serialize};

use super::HypergraphError;

/// The set `A` of allowed intersection sizes, stored as a bit mask over `0..64`.
///
/// A vertex set `S` is an `A`-transversal of a hypergraph when every edge meets
/// `S` in a number of vertices that belongs to the profile.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Profile {
    allowed: u64,
}

impl Profile {
    pub fn new<I: IntoIterator<Item = usize>>(elements: I) -> Result<Self, HypergraphError> {
        let mut allowed = 0u64;
        for a in elements {
            if a >= 64 {
                return Err(HypergraphError::ProfileElementTooLarge { element: a, r: 63 });
            }
            allowed |= 1u64 << a;
        }
        Self::from_mask(allowed)
    }

    pub fn from_mask(allowed: u64) -> Result<Self, HypergraphError> {
        if allowed == 0 {
            return Err(HypergraphError::EmptyProfile);
        }
        Ok(Profile { allowed })
    }

    /// `{0, 1}`: strongly independent sets.
    pub fn strong() -> Self {
        Profile { allowed: 0b11 }
    }

    /// `{0, ..., r-1}`: independent sets.
    pub fn independent(r: usize) -> Self {
        assert!((1..=63).contains(&r));
        Profile { allowed: (1u64 << r) - 1 }
    }

    /// `{0, ..., a}`.
    pub fn up_to(a: usize) -> Self {
        assert!(a < 64);
        Profile { allowed: u64::MAX >> (63 - a) }
    }

    /// `{0, ..., r}`: every vertex set qualifies.
    pub fn all(r: usize) -> Self {
        Self::up_to(r)
    }

    pub fn singleton(a: usize) -> Self {
        assert!(a < 64);
        Profile { allowed: 1u64 << a }
    }

    /// Even integers in `{0, ..., r}`.
    pub fn even(r: usize) -> Self {
        Profile { allowed: Self::all(r).allowed & 0x5555_5555_5555_5555 }
    }

    /// Odd integers in `{0, ..., r}`. Requires `r >= 1`.
    pub fn odd(r: usize) -> Self {
        assert!(r >= 1);
        Profile { allowed: Self::all(r).allowed & 0xAAAA_AAAA_AAAA_AAAA }
    }

    /// Parses the CLI syntax: a comma-separated list (`0,1`) or one of the
    /// keywords `strong`, `independent`, `even`, `odd`, `all`, which are
    /// resolved against the uniformity `r`.
    pub fn parse(text: &str, r: usize) -> Result<Self, HypergraphError> {
        let text = text.trim();
        let bad = || HypergraphError::BadProfile(text.to_string());
        let profile = match text {
            "strong" => Self::strong(),
            "independent" if r >= 1 => Self::independent(r),
            "even" => Self::even(r),
            "odd" if r >= 1 => Self::odd(r),
            "all" => Self::all(r),
            _ => {
                let mut elems = Vec::new();
                for part in text.split(',') {
                    elems.push(part.trim().parse::<usize>().map_err(|_| bad())?);
                }
                Self::new(elems)?
            }
        };
        profile.validate(r)?;
        Ok(profile)
    }

    /// Checks that every element is at most `r`.
    pub fn validate(self, r: usize) -> Result<(), HypergraphError> {
        match self.max() {
            m if m > r => Err(HypergraphError::ProfileElementTooLarge { element: m, r }),
            _ => Ok(()),
        }
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.allowed
    }

    #[inline]
    pub const fn contains(self, a: usize) -> bool {
        a < 64 && self.allowed >> a & 1 == 1
    }

    /// True iff `[lo, lo + span]` contains an allowed value.
    #[inline]
    pub fn meets_range(self, lo: usize, span: usize) -> bool {
        if lo >= 64 {
            return false;
        }
        let width = span + 1;
        let window = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
        (self.allowed >> lo) & window != 0
    }

    pub fn min(self) -> usize {
        self.allowed.trailing_zeros() as usize
    }

    pub fn max(self) -> usize {
        63 - self.allowed.leading_zeros() as usize
    }

    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mask = self.allowed;
        (0..64).filter(move |&a| mask >> a & 1 == 1)
    }

    /// Always false: a profile has at least one element.
    pub fn is_empty(self) -> bool {
        self.allowed == 0
    }

    pub fn len(self) -> usize {
        self.allowed.count_ones() as usize
    }

    /// `a` in the profile and `b < a` implies `b` in the profile.
    pub fn is_downward_closed(self) -> bool {
        self.allowed & (self.allowed + 1) == 0
    }

    /// `B = {r - a : a in A}`. Requires every element to be at most `r`.
    pub fn complement(self, r: usize) -> Self {
        debug_assert!(self.max() <= r);
        let allowed = self.elements().fold(0u64, |m, a| m | 1u64 << (r - a));
        Profile { allowed }
    }
}

impl TryFrom<Vec<usize>> for Profile {
    type Error = HypergraphError;

    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Profile::new(v)
    }
}

impl From<Profile> for Vec<usize> {
    fn from(p: Profile) -> Self {
        p.elements().collect()
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

/// Comma-separated elements, e.g. `0,1`; the same syntax [`Profile::parse`] accepts.
impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}
