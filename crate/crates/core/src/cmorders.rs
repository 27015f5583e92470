//! Degree-2 endomorphisms of elliptic curves with complex multiplication.
//!
//! A degree-2 endomorphism is multiplication by a non-real quadratic integer
//! ξ of norm 2. Everything about it is determined by the characteristic
//! polynomial t² - tr(ξ)·t + 2, so ξ is stored exactly as (trace, norm, sign
//! of the imaginary part). There are ten such ξ, two conjugates for each
//! twisting number m = p_ξ(-1) ∈ {1, ..., 5}.

use alloc::vec::Vec;

use crate::Error;

/// A quadratic integer ξ of norm 2 with negative discriminant, i.e. a
/// degree-2 endomorphism. `im_sign` separates ξ from its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadEndo {
    trace: i64,
    norm: i64,
    im_sign: i8,
}

impl QuadEndo {
    pub fn new(trace: i64, norm: i64, im_sign: i8) -> Result<Self, Error> {
        if norm != 2 {
            return Err(Error::InvalidEndo("only norm 2 is supported"));
        }
        if im_sign != 1 && im_sign != -1 {
            return Err(Error::InvalidEndo("imaginary sign must be +1 or -1"));
        }
        if trace * trace >= 4 * norm {
            return Err(Error::InvalidEndo("discriminant must be negative"));
        }
        Ok(QuadEndo {
            trace,
            norm,
            im_sign,
        })
    }

    pub fn degree2(trace: i64, im_sign: i8) -> Result<Self, Error> {
        Self::new(trace, 2, im_sign)
    }

    pub fn trace(&self) -> i64 {
        self.trace
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn im_sign(&self) -> i8 {
        self.im_sign
    }

    /// Discriminant of Z\[ξ\]: trace² - 4·norm.
    pub fn disc(&self) -> i64 {
        self.trace * self.trace - 4 * self.norm
    }

    /// ASCII rendering of ξ as a complex number.
    pub fn description(&self) -> alloc::string::String {
        use alloc::format;
        let sign = if self.im_sign > 0 { "+" } else { "-" };
        match self.disc() {
            -4 => format!("{}{}i", self.trace / 2, sign),
            -8 => {
                if self.im_sign > 0 {
                    "i*sqrt(2)".into()
                } else {
                    "-i*sqrt(2)".into()
                }
            }
            -7 => format!("({}{}i*sqrt(7))/2", self.trace, sign),
            _ => unreachable!("norm-2 discriminants are -4, -7, -8"),
        }
    }
}

/// The maximal imaginary quadratic order containing ξ, identified by its
/// fundamental discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderLabel {
    pub disc: i64,
    pub name: &'static str,
}

impl OrderLabel {
    pub fn for_endo(xi: &QuadEndo) -> OrderLabel {
        match xi.disc() {
            -4 => OrderLabel {
                disc: -4,
                name: "Z[i]",
            },
            -8 => OrderLabel {
                disc: -8,
                name: "Z[i*sqrt(2)]",
            },
            -7 => OrderLabel {
                disc: -7,
                name: "Z[(1+i*sqrt(7))/2]",
            },
            _ => unreachable!("norm-2 discriminants are -4, -7, -8"),
        }
    }
}

/// Coefficients (1, -trace, norm) of the characteristic polynomial
/// t² - trace·t + norm.
pub fn char_poly(xi: &QuadEndo) -> (i64, i64, i64) {
    (1, -xi.trace(), xi.norm())
}

/// The twisting number of the reducible configuration attached to ξ: the
/// number of fixed points of -ξ, which is p_ξ(-1) = 1 + trace + norm.
pub fn twisting_number(xi: &QuadEndo) -> i64 {
    1 + xi.trace() + xi.norm()
}

/// Independent check of the twisting number as a lattice index: build the
/// integer matrix of multiplication by ξ on a basis (1, ω) of the maximal
/// order and return |det(I + M)| = |N(1 + ξ)|.
pub fn index_oracle(xi: &QuadEndo) -> i64 {
    // ω has its own trace t and norm n; multiplication by ω on (1, ω) is the
    // companion matrix [[0, -n], [1, t]]. Writing ξ = x + y·ω with integers
    // x, y gives the matrix of ξ.
    let (t_omega, n_omega, x, y) = match xi.disc() {
        -4 => (0i64, 1i64, xi.trace() / 2, xi.im_sign() as i64),
        -8 => (0, 2, 0, xi.im_sign() as i64),
        -7 => {
            let y = xi.im_sign() as i64;
            (1, 2, (xi.trace() - y) / 2, y)
        }
        _ => unreachable!("norm-2 discriminants are -4, -7, -8"),
    };
    let m = [[x, -y * n_omega], [y, x + y * t_omega]];
    let a = [[1 + m[0][0], m[0][1]], [m[1][0], 1 + m[1][1]]];
    (a[0][0] * a[1][1] - a[0][1] * a[1][0]).abs()
}

/// The ten degree-2 endomorphism classes, ordered by (m, sign): conjugate
/// pairs are adjacent with the positive imaginary part first.
pub fn enumerate_degree2() -> Vec<(QuadEndo, OrderLabel, i64)> {
    let mut out = Vec::with_capacity(10);
    for trace in -2..=2 {
        for im_sign in [1i8, -1] {
            let xi = QuadEndo::degree2(trace, im_sign).unwrap();
            out.push((xi, OrderLabel::for_endo(&xi), twisting_number(&xi)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn constructor_validation() {
        assert!(QuadEndo::degree2(3, 1).is_err()); // 9 >= 8: real
        assert!(QuadEndo::new(0, 3, 1).is_err());
        assert!(QuadEndo::degree2(0, 0).is_err());
        assert!(QuadEndo::degree2(-2, -1).is_ok());
    }

    #[test]
    fn char_poly_examples() {
        // t² - 2t + 2, t² + 2, t² + t + 2
        assert_eq!(char_poly(&QuadEndo::degree2(2, 1).unwrap()), (1, -2, 2));
        assert_eq!(char_poly(&QuadEndo::degree2(0, 1).unwrap()), (1, 0, 2));
        assert_eq!(char_poly(&QuadEndo::degree2(-1, 1).unwrap()), (1, 1, 2));
    }

    #[test]
    fn twisting_number_examples() {
        assert_eq!(twisting_number(&QuadEndo::degree2(-2, 1).unwrap()), 1);
        assert_eq!(twisting_number(&QuadEndo::degree2(0, -1).unwrap()), 3);
        assert_eq!(twisting_number(&QuadEndo::degree2(1, 1).unwrap()), 4);
    }

    #[test]
    fn index_oracle_matches_twisting_number() {
        for (xi, _, m) in enumerate_degree2() {
            assert_eq!(
                index_oracle(&xi),
                m,
                "trace {} sign {}",
                xi.trace(),
                xi.im_sign()
            );
        }
    }

    #[test]
    fn ten_classes_with_expected_multiset() {
        let table = enumerate_degree2();
        assert_eq!(table.len(), 10);
        let mut ms: Vec<i64> = table.iter().map(|(_, _, m)| *m).collect();
        ms.sort_unstable();
        assert_eq!(ms, vec![1, 1, 2, 2, 3, 3, 4, 4, 5, 5]);
        // conjugate pairs share m and order
        for pair in table.chunks(2) {
            assert_eq!(pair[0].1, pair[1].1);
            assert_eq!(pair[0].2, pair[1].2);
            assert_eq!(pair[0].0.trace(), pair[1].0.trace());
            assert_eq!(pair[0].0.im_sign(), -pair[1].0.im_sign());
        }
    }

    #[test]
    fn order_labels_match_traces() {
        let table = enumerate_degree2();
        // m = 5 entries have trace 2 and live in Z[i]
        let m5: Vec<_> = table.iter().filter(|(_, _, m)| *m == 5).collect();
        assert_eq!(m5.len(), 2);
        for (xi, order, _) in &m5 {
            assert_eq!(xi.trace(), 2);
            assert_eq!(order.name, "Z[i]");
        }
        // m = 2 entries have trace -1 in the sqrt(-7) order
        let m2: Vec<_> = table.iter().filter(|(_, _, m)| *m == 2).collect();
        assert_eq!(m2.len(), 2);
        for (xi, order, _) in &m2 {
            assert_eq!(xi.trace(), -1);
            assert_eq!(order.disc, -7);
        }
        // m = 3 entries in Z[i*sqrt(2)]
        for (xi, order, _) in table.iter().filter(|(_, _, m)| *m == 3) {
            assert_eq!(xi.trace(), 0);
            assert_eq!(order.disc, -8);
        }
    }

    #[test]
    fn discriminants_are_fundamental() {
        // each Z[ξ] is itself maximal: trace² - 8 ∈ {-4, -7, -8}
        let mut discs: Vec<i64> = enumerate_degree2()
            .iter()
            .map(|(xi, _, _)| xi.disc())
            .collect();
        discs.sort_unstable();
        assert_eq!(discs, vec![-8, -8, -7, -7, -7, -7, -4, -4, -4, -4]);
        for (xi, order, _) in enumerate_degree2() {
            assert_eq!(xi.disc(), order.disc);
        }
    }

    #[test]
    fn trace_range_characterizes_norm_2() {
        // 3 + trace ∈ [1, 5] exactly for |trace| <= 2
        for trace in -4i64..=4 {
            let ok = QuadEndo::degree2(trace, 1).is_ok();
            assert_eq!(ok, (-2..=2).contains(&trace), "trace {trace}");
            if ok {
                let m = twisting_number(&QuadEndo::degree2(trace, 1).unwrap());
                assert!((1..=5).contains(&m));
            }
        }
    }

    #[test]
    fn descriptions_are_stable() {
        let d: Vec<_> = enumerate_degree2()
            .iter()
            .map(|(xi, _, _)| xi.description())
            .collect();
        assert_eq!(
            d,
            vec![
                "-1+i",
                "-1-i",
                "(-1+i*sqrt(7))/2",
                "(-1-i*sqrt(7))/2",
                "i*sqrt(2)",
                "-i*sqrt(2)",
                "(1+i*sqrt(7))/2",
                "(1-i*sqrt(7))/2",
                "1+i",
                "1-i",
            ]
        );
    }
}
