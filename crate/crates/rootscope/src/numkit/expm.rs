//! Matrix exponential by scaling and squaring with a degree-13 Padé
//! approximant (the Higham 2005 scheme, using only the top threshold).

use super::mat::{lu_solve, Mat};
use super::NumError;

const THETA_13: f64 = 4.25;

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

/// exp(A) for a square matrix.
pub fn expm(a: &Mat) -> Result<Mat, NumError> {
    assert!(a.is_square(), "expm requires a square matrix");
    let norm = a.norm_one();
    if !norm.is_finite() {
        return Err(NumError::NonFinite);
    }

    // scale A down by 2^s until the Pade approximant is accurate
    let s = if norm > THETA_13 {
        (norm / THETA_13).log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale(0.5f64.powi(s as i32));

    let mut f = pade13(&scaled)?;
    for _ in 0..s {
        f = f.matmul(&f);
    }
    if !f.is_finite() {
        return Err(NumError::NonFinite);
    }
    Ok(f)
}

fn pade13(a: &Mat) -> Result<Mat, NumError> {
    let n = a.rows();
    let id = Mat::identity(n);
    let a2 = a.matmul(a);
    let a4 = a2.matmul(&a2);
    let a6 = a4.matmul(&a2);

    // U = A (A6 (b13 A6 + b11 A4 + b9 A2) + b7 A6 + b5 A4 + b3 A2 + b1 I)
    let u_inner = a6
        .matmul(&a6.scale(B13[13]).add(&a4.scale(B13[11])).add(&a2.scale(B13[9])))
        .add(&a6.scale(B13[7]))
        .add(&a4.scale(B13[5]))
        .add(&a2.scale(B13[3]))
        .add(&id.scale(B13[1]));
    let u = a.matmul(&u_inner);

    // V = A6 (b12 A6 + b10 A4 + b8 A2) + b6 A6 + b4 A4 + b2 A2 + b0 I
    let v = a6
        .matmul(&a6.scale(B13[12]).add(&a4.scale(B13[10])).add(&a2.scale(B13[8])))
        .add(&a6.scale(B13[6]))
        .add(&a4.scale(B13[4]))
        .add(&a2.scale(B13[2]))
        .add(&id.scale(B13[0]));

    // exp(A) ~= (V - U)^{-1} (V + U)
    lu_solve(&v.sub(&u), &v.add(&u))
}
