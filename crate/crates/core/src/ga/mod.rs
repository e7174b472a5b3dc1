//! Fixed-size multivectors for 3D projective (PGA) and 3D conformal (CGA)
//! geometric algebra.
//!
//! Conventions (coefficient index -> blade):
//!
//! | algebra | basis vectors, squares               | order |
//! |---------|--------------------------------------|-------|
//! | PGA     | e0 (0), e1 e2 e3 (+1)                | 1, e0, e1, e2, e3, e01, e02, e03, e12, e13, e23, e012, e013, e023, e123, e0123 |
//! | CGA     | e1 e2 e3 e4 (+1), e5 (-1)            | grade by grade, lexicographic within a grade |
//!
//! Blade names always list vector indices in ascending order and mean the
//! left-to-right geometric product, e.g. `e012 = e0 e1 e2`.

mod blade;
pub mod cga;
pub mod pga;

pub use cga::Cga;
pub use pga::Pga;

macro_rules! multivector {
    (
        $(#[$meta:meta])*
        $name:ident, blades = $n:expr, dim = $dim:expr, metric = $metric:expr, names = $names:expr
    ) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq)]
        pub struct $name(pub [f64; $n]);

        impl $name {
            pub const BLADES: usize = $n;
            pub const NAMES: [&'static str; $n] = $names;
            const TABLE: [[super::blade::BladeProduct; $n]; $n] =
                super::blade::product_table::<$n>($dim, &$metric);
            const GRADES: [u8; $n] = super::blade::grades::<$n>($dim);

            pub const ZERO: Self = Self([0.0; $n]);

            pub const fn scalar(s: f64) -> Self {
                let mut c = [0.0; $n];
                c[0] = s;
                Self(c)
            }

            /// Coefficient index of a blade by name (`"1"`, `"e0"`, `"e013"`, ...).
            pub fn index_of(name: &str) -> Option<usize> {
                Self::NAMES.iter().position(|n| *n == name)
            }

            /// Unit blade by name.
            ///
            /// # Panics
            /// On an unknown blade name.
            pub fn blade(name: &str) -> Self {
                let i = Self::index_of(name)
                    .unwrap_or_else(|| panic!("unknown blade {name}"));
                let mut c = [0.0; $n];
                c[i] = 1.0;
                Self(c)
            }

            pub fn get(&self, name: &str) -> f64 {
                Self::index_of(name).map_or(0.0, |i| self.0[i])
            }

            pub fn grade_of(index: usize) -> usize {
                Self::GRADES[index] as usize
            }

            pub fn scalar_part(&self) -> f64 {
                self.0[0]
            }

            pub fn grade(&self, k: usize) -> Self {
                let mut out = Self::ZERO;
                for i in 0..$n {
                    if Self::GRADES[i] as usize == k {
                        out.0[i] = self.0[i];
                    }
                }
                out
            }

            /// Reverse: grade `k` picks up `(-1)^(k(k-1)/2)`.
            pub fn reverse(&self) -> Self {
                let mut out = *self;
                for i in 0..$n {
                    if matches!(Self::GRADES[i] % 4, 2 | 3) {
                        out.0[i] = -out.0[i];
                    }
                }
                out
            }

            pub fn geometric(&self, o: &Self) -> Self {
                let mut out = [0.0; $n];
                for (i, &a) in self.0.iter().enumerate() {
                    if a == 0.0 {
                        continue;
                    }
                    let row = &Self::TABLE[i];
                    for (j, &b) in o.0.iter().enumerate() {
                        if b == 0.0 {
                            continue;
                        }
                        let p = row[j];
                        if p.sign != 0 {
                            out[p.index as usize] += f64::from(p.sign) * a * b;
                        }
                    }
                }
                Self(out)
            }

            /// Right contraction `self ⌊ o`: grade `r - s` part of each blade
            /// product, zero where `s > r`.
            pub fn right_contract(&self, o: &Self) -> Self {
                let mut out = [0.0; $n];
                for (i, &a) in self.0.iter().enumerate() {
                    if a == 0.0 {
                        continue;
                    }
                    for (j, &b) in o.0.iter().enumerate() {
                        if b == 0.0 || Self::GRADES[j] > Self::GRADES[i] {
                            continue;
                        }
                        let p = Self::TABLE[i][j];
                        let k = p.index as usize;
                        if p.sign != 0 && Self::GRADES[k] == Self::GRADES[i] - Self::GRADES[j] {
                            out[k] += f64::from(p.sign) * a * b;
                        }
                    }
                }
                Self(out)
            }

            pub fn scale(&self, k: f64) -> Self {
                Self(self.0.map(|c| c * k))
            }

            /// Largest magnitude among odd-grade coefficients.
            pub fn odd_magnitude(&self) -> f64 {
                (0..$n)
                    .filter(|&i| Self::GRADES[i] % 2 == 1)
                    .map(|i| self.0[i].abs())
                    .fold(0.0, f64::max)
            }

            pub fn max_abs_diff(&self, o: &Self) -> f64 {
                self.0
                    .iter()
                    .zip(o.0.iter())
                    .map(|(a, b)| (a - b).abs())
                    .fold(0.0, f64::max)
            }

            pub fn max_abs(&self) -> f64 {
                self.0.iter().map(|c| c.abs()).fold(0.0, f64::max)
            }
        }

        impl Default for $name {
            fn default() -> Self {
                Self::ZERO
            }
        }

        impl std::fmt::Debug for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                let mut first = true;
                write!(f, "{}(", stringify!($name))?;
                for (c, n) in self.0.iter().zip(Self::NAMES) {
                    if *c != 0.0 {
                        if !first {
                            write!(f, " + ")?;
                        }
                        write!(f, "{c}·{n}")?;
                        first = false;
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                write!(f, ")")
            }
        }

        impl std::ops::Index<usize> for $name {
            type Output = f64;

            fn index(&self, i: usize) -> &f64 {
                &self.0[i]
            }
        }

        impl std::ops::Add for $name {
            type Output = Self;

            fn add(mut self, o: Self) -> Self {
                for (a, b) in self.0.iter_mut().zip(o.0) {
                    *a += b;
                }
                self
            }
        }

        impl std::ops::Sub for $name {
            type Output = Self;

            fn sub(mut self, o: Self) -> Self {
                for (a, b) in self.0.iter_mut().zip(o.0) {
                    *a -= b;
                }
                self
            }
        }

        impl std::ops::Neg for $name {
            type Output = Self;

            fn neg(self) -> Self {
                self.scale(-1.0)
            }
        }

        impl std::ops::Mul<f64> for $name {
            type Output = Self;

            fn mul(self, k: f64) -> Self {
                self.scale(k)
            }
        }

        impl std::ops::Mul<$name> for f64 {
            type Output = $name;

            fn mul(self, m: $name) -> $name {
                m.scale(self)
            }
        }

        /// Geometric product.
        impl std::ops::Mul for $name {
            type Output = Self;

            fn mul(self, o: Self) -> Self {
                self.geometric(&o)
            }
        }
    };
}

pub(crate) use multivector;
