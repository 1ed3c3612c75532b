//! Sign corrections separating the literal tables from the consistent ones.
//!
//! Each entry names a tabulated object whose literal transcription disagrees
//! with the rest of the tables, what the literal form says, the corrected
//! form, and which exact checks pin the correction down. The literal forms
//! stay available through [`crate::catalog::Edition::Literal`] so that the
//! disagreement itself can be reproduced.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Correction {
    pub id: &'static str,
    pub subject: &'static str,
    pub literal: &'static str,
    pub consistent: &'static str,
    pub evidence: &'static str,
}

pub const CORRECTIONS: &[Correction] = &[
    Correction {
        id: "S2-MATRIX",
        subject: "4x4 generator S2 (interleaved frame)",
        literal: "S2 = (i/2)[[0, -s1], [s1, 0]]",
        consistent: "S2 = (i/2)[[0, s1], [-s1, 0]]",
        evidence: "with the literal sign, the 12 brackets [S_i,S_j], [G_i,K_i], [K_i,S2], \
                   [G_i,S2] contradict the fifteen-generator table and the 6x6 O(3,3) \
                   structure constants; flipping the sign makes both agree on all 105 pairs",
    },
    Correction {
        id: "GG-ROW",
        subject: "fifteen-generator bracket table",
        literal: "[K_i,K_j] = [Q_i,Q_j] = [Q_i,Q_j] = -i eps_ijk L_k",
        consistent: "[K_i,K_j] = [Q_i,Q_j] = [G_i,G_j] = -i eps_ijk L_k",
        evidence: "the literal row leaves the three [G_i,G_j] pairs unspecified; the \
                   matrices in both realizations give -i eps_ijk L_k",
    },
    Correction {
        id: "G3-LINE",
        subject: "brackets that generate S1 and S2 from G3",
        literal: "[G3,K3] = iS2, [G3,Q3] = -iS1",
        consistent: "[G3,K3] = -iS2, [G3,Q3] = iS1",
        evidence: "the matrices give [G3,Q3] = +iS1 in either edition; with the \
                   consistent S2 they also give [G3,K3] = -iS2 (the literal line has \
                   the commutator order reversed)",
    },
    Correction {
        id: "S3-HAT",
        subject: "ladder-operator realization of S3",
        literal: "S3^ = (1/2)(a1+ a1 + a2 a2+)",
        consistent: "S3^ = -(1/2)(a1+ a1 + a2 a2+)",
        evidence: "with the literal sign the nine brackets [K_i,S3], [Q_i,S3], [K_i,Q_i] \
                   come out with the opposite sign to the Sp(4) table; every other \
                   bracket matches",
    },
    Correction {
        id: "S2-DIFFOP",
        subject: "phase-space differential operator for S2",
        literal: "S2 = -(i/2){(x1 d/dp2 - p2 d/dx1) + (x2 d/dp1 - p1 d/dx2)}",
        consistent: "S2 = +(i/2){(x1 d/dp2 - p2 d/dx1) - (x2 d/dp1 - p1 d/dx2)}",
        evidence: "the literal operator equals minus the L1 operator; the coefficient \
                   matrix must be -S2^T for the operator map to be a homomorphism",
    },
    Correction {
        id: "G2-DIFFOP",
        subject: "phase-space differential operator for G2",
        literal: "G2 = +(i/2){(x1 d/dp2 + p2 d/dx1) - (x2 d/dp1 + p1 d/dx2)}",
        consistent: "G2 = -(i/2){(x1 d/dp2 + p2 d/dx1) - (x2 d/dp1 + p1 d/dx2)}",
        evidence: "G2 is symmetric, so -G2^T = -G2: the literal operator has the overall \
                   sign flipped",
    },
    Correction {
        id: "G3-DIFFOP",
        subject: "phase-space differential operator for G3",
        literal: "G3 = -(i/2){(x1 d/dx1 + p1 d/dp1) + (x2 d/dp1 + p1 d/dx2)}",
        consistent: "G3 = -(i/2){(x1 d/dx1 + p1 d/dp1) - (x2 d/dx2 + p2 d/dp2)}",
        evidence: "G3 = (i/2)diag(I, -I) forces the coefficient matrix -G3^T, which has \
                   no mixed (x2, p1) terms",
    },
];

/// Look up a correction by id.
pub fn correction(id: &str) -> Option<&'static Correction> {
    CORRECTIONS.iter().find(|c| c.id == id)
}
