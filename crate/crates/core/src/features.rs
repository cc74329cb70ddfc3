//! Feature-category selection and the assembly of per-seed descriptor rows.
//!
//! The full vector is 64 columns: 32 morphological, then 16 texture, then 16
//! colour. Any subset of the three categories can be selected; column order
//! within a category and category order are fixed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::colorfeat::{ColorFeatures, COLOR_FEATURE_NAMES};
use crate::morphfeat::{MorphFeatures, MORPH_FEATURE_NAMES};
use crate::num::Real;
use crate::texturefeat::{TextureFeatures, TEXTURE_FEATURE_NAMES};

/// Number of columns when all three categories are selected.
pub const ALL_FEATURE_COUNT: usize = 64;

/// Which descriptor categories participate in a feature vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CategorySet {
    pub morph: bool,
    pub texture: bool,
    pub color: bool,
}

/// Unparsable `--features` value.
#[derive(Debug, Error, PartialEq, Eq)]
#[error(
    "unknown feature category `{token}` (expected morph, texture, color or all, joined by `+`)"
)]
pub struct ParseCategoryError {
    pub token: String,
}

impl CategorySet {
    pub const ALL: Self = Self {
        morph: true,
        texture: true,
        color: true,
    };
    pub const MORPH: Self = Self {
        morph: true,
        texture: false,
        color: false,
    };
    pub const TEXTURE: Self = Self {
        morph: false,
        texture: true,
        color: false,
    };
    pub const COLOR: Self = Self {
        morph: false,
        texture: false,
        color: true,
    };

    /// The seven non-empty category combinations, single categories first.
    pub fn all_combinations() -> [Self; 7] {
        let m = Self::MORPH;
        let t = Self::TEXTURE;
        let c = Self::COLOR;
        [m, t, c, m.union(t), m.union(c), t.union(c), Self::ALL]
    }

    pub fn union(self, other: Self) -> Self {
        Self {
            morph: self.morph || other.morph,
            texture: self.texture || other.texture,
            color: self.color || other.color,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.morph || self.texture || self.color)
    }

    /// Number of columns this selection produces.
    pub fn arity(&self) -> usize {
        let mut n = 0;
        if self.morph {
            n += MORPH_FEATURE_NAMES.len();
        }
        if self.texture {
            n += TEXTURE_FEATURE_NAMES.len();
        }
        if self.color {
            n += COLOR_FEATURE_NAMES.len();
        }
        n
    }

    /// Column names this selection produces, in vector order.
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::with_capacity(self.arity());
        if self.morph {
            out.extend_from_slice(&MORPH_FEATURE_NAMES);
        }
        if self.texture {
            out.extend_from_slice(&TEXTURE_FEATURE_NAMES);
        }
        if self.color {
            out.extend_from_slice(&COLOR_FEATURE_NAMES);
        }
        out
    }
}

impl Default for CategorySet {
    fn default() -> Self {
        Self::ALL
    }
}

impl fmt::Display for CategorySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Self::ALL {
            return f.write_str("all");
        }
        let mut parts = Vec::new();
        if self.morph {
            parts.push("morph");
        }
        if self.texture {
            parts.push("texture");
        }
        if self.color {
            parts.push("color");
        }
        if parts.is_empty() {
            parts.push("none");
        }
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for CategorySet {
    type Err = ParseCategoryError;

    /// Accepts `morph`, `texture`, `color`, `all` (or `m`/`t`/`c`), joined
    /// by `+`, case-insensitively.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut set = Self {
            morph: false,
            texture: false,
            color: false,
        };
        for token in s.split('+') {
            match token.trim().to_ascii_lowercase().as_str() {
                "m" | "morph" | "morphological" => set.morph = true,
                "t" | "texture" => set.texture = true,
                "c" | "color" | "colour" => set.color = true,
                "all" => set = set.union(Self::ALL),
                other => {
                    return Err(ParseCategoryError {
                        token: other.to_string(),
                    })
                }
            }
        }
        Ok(set)
    }
}

/// Concatenate the selected categories into one descriptor row.
///
/// Panics if a selected category was not supplied; callers decide upstream
/// how to handle per-seed extraction failures.
pub fn assemble<F: Real>(
    set: CategorySet,
    morph: Option<&MorphFeatures<F>>,
    texture: Option<&TextureFeatures<F>>,
    color: Option<&ColorFeatures<F>>,
) -> Vec<F> {
    let mut out = Vec::with_capacity(set.arity());
    if set.morph {
        out.extend(
            morph
                .expect("morphological features selected but not supplied")
                .to_vec(),
        );
    }
    if set.texture {
        out.extend(
            texture
                .expect("texture features selected but not supplied")
                .to_vec(),
        );
    }
    if set.color {
        out.extend(
            color
                .expect("colour features selected but not supplied")
                .to_vec(),
        );
    }
    out
}
