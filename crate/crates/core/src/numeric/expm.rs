//! Matrix exponential by scaling and squaring with diagonal Padé
//! approximants of degree 3, 5, 7, 9 or 13 (Higham 2005).

use nalgebra::DMatrix;

use super::matrix::DenseMatrix;

const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539_398_330_063_23e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068e0;
const THETA_13: f64 = 5.371920351148152e0;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

/// `(V - U)^{-1} (V + U)`.
fn pade_quotient(u: DMatrix<f64>, v: DMatrix<f64>) -> DMatrix<f64> {
    let num = &v + &u;
    let den = v - u;
    den.lu()
        .solve(&num)
        .expect("Padé denominator is nonsingular inside the scaling bound")
}

/// Low-degree approximant built from even powers `I, A^2, A^4, ...`.
fn pade_low(a: &DMatrix<f64>, b: &[f64]) -> DMatrix<f64> {
    let d = a.nrows();
    let a2 = a * a;
    let mut even = DMatrix::identity(d, d);
    let mut u_inner = DMatrix::zeros(d, d);
    let mut v = DMatrix::zeros(d, d);
    for (k, pair) in b.chunks(2).enumerate() {
        if k > 0 {
            even = &even * &a2;
        }
        v += &even * pair[0];
        u_inner += &even * pair[1];
    }
    pade_quotient(a * u_inner, v)
}

fn pade_13(a: &DMatrix<f64>) -> DMatrix<f64> {
    let d = a.nrows();
    let id = DMatrix::<f64>::identity(d, d);
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;
    let b = &B13;
    let u_hi = &a6 * b[13] + &a4 * b[11] + &a2 * b[9];
    let u = a * (&a6 * u_hi + &a6 * b[7] + &a4 * b[5] + &a2 * b[3] + &id * b[1]);
    let v_hi = &a6 * b[12] + &a4 * b[10] + &a2 * b[8];
    let v = &a6 * v_hi + &a6 * b[6] + &a4 * b[4] + &a2 * b[2] + &id * b[0];
    pade_quotient(u, v)
}

/// `e^m`.
pub fn expm(m: &DenseMatrix) -> DenseMatrix {
    let a = m.inner();
    let norm = m.one_norm();
    let low: [(f64, &[f64]); 4] = [
        (THETA_3, &B3),
        (THETA_5, &B5),
        (THETA_7, &B7),
        (THETA_9, &B9),
    ];
    for (theta, b) in low {
        if norm <= theta {
            return DenseMatrix::from_inner(pade_low(a, b));
        }
    }
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a * 2f64.powi(-s);
    let mut r = pade_13(&scaled);
    for _ in 0..s {
        r = &r * &r;
    }
    DenseMatrix::from_inner(r)
}
