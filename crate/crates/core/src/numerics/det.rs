//! Exact cofactor determinants for the 2×2 and 3×3 matrices of the
//! round-trip problem. No pivoting is needed at this size.

use num_complex::Complex64;

/// det of a 2×2 complex matrix.
pub fn det2(m: &[[Complex64; 2]; 2]) -> Complex64 {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// det of a 3×3 complex matrix by cofactor expansion along the first row.
pub fn det3(m: &[[Complex64; 3]; 3]) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_has_unit_determinant() {
        let id = [
            [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
            [c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        ];
        assert_eq!(det3(&id), c(1.0, 0.0));
    }

    #[test]
    fn diagonal_2x2() {
        let m = [[c(3.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-2.0, 0.5)]];
        assert_eq!(det2(&m), c(3.0, 1.0) * c(-2.0, 0.5));
    }

    #[test]
    fn random_3x3_against_leibniz_sum() {
        // independent oracle: the six-term permutation sum with explicit signs
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        for _ in 0..50 {
            let mut m = [[c(0.0, 0.0); 3]; 3];
            for row in &mut m {
                for e in row.iter_mut() {
                    *e = c(next(), next());
                }
            }
            let leibniz = m[0][0] * m[1][1] * m[2][2]
                + m[0][1] * m[1][2] * m[2][0]
                + m[0][2] * m[1][0] * m[2][1]
                - m[0][2] * m[1][1] * m[2][0]
                - m[0][1] * m[1][0] * m[2][2]
                - m[0][0] * m[1][2] * m[2][1];
            let d = det3(&m);
            assert!(
                (d - leibniz).norm() <= 1e-14 * leibniz.norm().max(1e-30),
                "{d} vs {leibniz}"
            );
        }
    }
}
