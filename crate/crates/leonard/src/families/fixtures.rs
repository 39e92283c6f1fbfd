//! The three worked arrays used throughout the tests and examples.

use super::{make_family, FamilyParams, FamilyTag};
use crate::field::{Elem, FieldSpec};
use crate::parray::ParameterArray;

fn rat(n: i64) -> Elem {
    FieldSpec::Rationals.from_i64(n)
}

/// Krawtchouk parameters of KR3: d = 3, s = s* = −2, r = 2, θ_0 = θ*_0 = 3.
pub fn kr3_params() -> FamilyParams {
    FamilyParams::new(FamilyTag::Krawtchouk, 3)
        .with("theta0", rat(3))
        .with("thetastar0", rat(3))
        .with("s", rat(-2))
        .with("sstar", rat(-2))
        .with("r", rat(2))
}

/// q-Racah parameters of QR3: d = 3, q = 2, h = h* = s = s* = 1, r1 = 16, r2 = 1.
pub fn qr3_params() -> FamilyParams {
    FamilyParams::new(FamilyTag::QRacah, 3)
        .with("theta0", rat(0))
        .with("thetastar0", rat(0))
        .with("q", rat(2))
        .with("h", rat(1))
        .with("hstar", rat(1))
        .with("s", rat(1))
        .with("sstar", rat(1))
        .with("r1", rat(16))
        .with("r2", rat(1))
}

/// Orphan parameters of ORPH4 over GF(4): h = h* = 1, s = s* = r = ω.
pub fn orph4_params() -> FamilyParams {
    let f = FieldSpec::gf4();
    let w = f.element(2).expect("GF(4) has an element 2");
    FamilyParams::new(FamilyTag::Orphan, 3)
        .with("theta0", f.zero())
        .with("thetastar0", f.zero())
        .with("h", f.one())
        .with("hstar", f.one())
        .with("s", w.clone())
        .with("sstar", w.clone())
        .with("r", w)
}

/// The Krawtchouk array with θ = θ* = (3, 1, −1, −3), φ = (−6, −8, −6), ϕ = (6, 8, 6).
pub fn kr3() -> ParameterArray {
    make_family(&kr3_params(), FieldSpec::Rationals).expect("KR3 parameters are admissible")
}

/// The q-Racah array of [`qr3_params`].
pub fn qr3() -> ParameterArray {
    make_family(&qr3_params(), FieldSpec::Rationals).expect("QR3 parameters are admissible")
}

/// The orphan array of [`orph4_params`].
pub fn orph4() -> ParameterArray {
    make_family(&orph4_params(), FieldSpec::gf4()).expect("ORPH4 parameters are admissible")
}
