//! Closed-form constructors: L-, K- and R-operators, the intertwiner `O`, and the fusion maps.

mod fusion;
mod kops;
mod lops;
mod rops;

pub use fusion::{build_fusion, FusionKind};
pub use kops::{build_k, left_entry, right_entry, Boundary};
pub use lops::{build_l, two_by_two, w_c2, Variant};
pub use rops::{build_o, build_r, OVariant, RPair};

/// One line per constructor: name and the formula it evaluates.
pub const CATALOGUE: &[(&str, &str)] = &[
    ("L rho", "[[q^D, a† q^{-D-1} z], [a q^{D+1} z, q^{-D} - q^{D+2} z^2]] on W ⊗ C^2"),
    ("L rhobar", "[[q^{D+1} - q^{1-D} z^2, ā† q^{-D} z], [a q^D z, q^{-D-1}]]"),
    ("L upsilon", "[[q^D - q^{-D} u^2 z^2, a† q^{-D-2} u^2 z], [a q (q^D u^{-2} - q^{-D} u^2) z, q^{-D-1} u^2 - q^{D+1} z^2]]"),
    ("L phi", "[[q^{D+1}, 0], [a q^{D+1} z, q^{-D} u^{-2}]]"),
    ("L minus", "leg swap of L"),
    ("L tilde", "L(q^2 z)^{-1}, blockwise"),
    ("K Pi", "diag(xi z^2 - 1, xi - z^2)"),
    ("K rho", "(-q^{-D} xi)^D (q^2 xi^{-1} z^2; q^2)_D"),
    ("K rhobar", "(q z^2)^{-D} (q^2 xi^{-1} z^{-2}; q^2)_D^{-1}"),
    ("K upsilon", "z^{-2D} (q^2 u^{-2} xi^{-1} z^2; q^2)_D / (q^2 u^{-2} xi^{-1} z^{-2}; q^2)_D"),
    ("K phi", "(-u^{-2} q^{-D-1} xi)^D"),
    ("K~ Pi", "diag(q^2 xt z^2 - 1, xt - q^2 z^2)"),
    ("K~ rho", "(-q^D xt)^D (q^4 xt z^2; q^2)_D^{-1}"),
    ("K~ rhobar", "(q^3 z^2)^D (xt z^{-2}; q^2)_D"),
    ("K~ upsilon", "(q z)^{2D} (u^{-2} xt z^{-2}; q^2)_D / (q^4 u^{-2} xt z^2; q^2)_D"),
    ("K~ phi", "(-u^2 q^{D+1} xt)^D"),
    ("R rho rhobar", "e_{q^2}(q^3 z a_1 ā†_2) e_{q^2}(q^{-1} z a†_1 a_2) q^{-2 D_1 (D_2+1)}"),
    ("R upsilon phi", "e_{q^2}(z a†_1 a_2) u^{2(D_2-D_1)} q^{(D_1-D_2) - 2 D_1 (D_2+1)}"),
    ("R~", "R(q^2 z)^{-1}, blockwise"),
    ("O", "e_{q^2}(q^2 a_1 ā†_2)^{-1} u^{D_1-D_2}"),
    ("O21", "leg swap of O"),
    ("iota(r)", "(q^{-D} a†, -q^{D+1} r)^T : W -> W ⊗ C^2"),
    ("tau(r)", "(q^D, q^{-D} r^{-1} a†) : W ⊗ C^2 -> W"),
];
