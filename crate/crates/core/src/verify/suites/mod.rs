//! The suite registry and shared helpers for random test data.

pub(crate) mod boundary;
mod bulk;
mod fusion;
mod oracle;
pub(crate) mod oscillator;
mod qseries;
mod reps;
mod window;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactq::Scalar;
use crate::fock::{make_generator, FockOp, FockSpace, Generator};
use crate::verify::{Arena, Ctx, SuiteSpec};

pub use fusion::FUSION_DIM;
pub use oracle::ORACLE_BLOCKS;

/// Independent stream per (run seed, suite) pair.
pub(crate) fn rng_for(ctx: &Ctx, salt: &str) -> ChaCha8Rng {
    let h = salt.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(ctx.seed ^ h)
}

/// Nonzero rational with numerator and denominator below 10.
pub(crate) fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    let num = rng.random_range(1..10i64);
    let den = rng.random_range(1..10i64);
    let s = Scalar::ratio(num, den);
    if rng.random_bool(0.5) {
        -s
    } else {
        s
    }
}

pub(crate) fn random_table(rng: &mut ChaCha8Rng, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| small_rational(rng)).collect()
}

pub(crate) fn gen(kind: Generator, leg: usize, space: &FockSpace, q: &Scalar) -> Result<FockOp> {
    make_generator(&kind, leg, space, q)
}

macro_rules! suite {
    ($id:literal, $anchor:literal, $arena:ident, [$($obj:literal),*], [$($sp:literal),*], $run:path) => {
        SuiteSpec {
            id: $id,
            anchor: $anchor,
            arena: Arena::$arena,
            objects: &[$($obj),*],
            spectral: &[$($sp),*],
            run: $run,
        }
    };
}

static REGISTRY: &[SuiteSpec] = &[
    suite!("qseries-pochhammer", "(x;p)_{-n} = (p^{-n}x;p)_n^{-1} = (x/p;1/p)_n^{-1} = (-x)^{-n} p^{n(n+1)/2} (p/x;p)_n^{-1}",
        Scalars, ["pochhammer"], ["x", "w", "z"], qseries::pochhammer),
    suite!("qseries-exp", "e_p(px) = (1-x) e_p(x), e_p(x) = e_{1/p}(x/p)^{-1} = E_p(-x)^{-1}",
        Scalars, ["e_p", "E_p"], [], qseries::exponential),
    suite!("qseries-product", "YX = pXY implies e_p(X) e_p(Y) = e_p(X+Y) and e_p(Y) e_p(X) = e_p(X(1-Y)) e_p(Y) = e_p(X) e_p(-XY) e_p(Y) = e_p(X) e_p((1-X)Y)",
        Scalars, ["e_p"], [], qseries::product),
    suite!("oscillator-relations", "a a† = 1 - q^{2(D+1)}, a† a = 1 - q^{2D}, a f(D) = f(D+1) a, ā† = -q^{-2D} a†",
        Window, ["a", "a†", "ā†"], [], oscillator::relations),
    suite!("oscillator-ladder", "[a^{k+1}, a†] = (1-p^{k+1}) p^D a^k, [ā†^{k+1}, a]_{p^{k+1}} = (1-p^{k+1}) ā†^k",
        Window, ["a", "a†", "ā†"], [], oscillator::ladder),
    suite!("oscillator-exp-commutators", "[e_p(y a_1 ā†_2), a†_1] = y p^{D_1} ā†_2 e_p(y a_1 ā†_2)",
        Window, ["e_p(y a_1 ā†_2)"], ["x"], oscillator::exp_commutators),
    suite!("oscillator-exp-raising", "[ā†_2, e_p(y a†_1 a_2)] = y e_p(y a†_1 a_2) a†_1 p^{-D_2-1}",
        Window, ["e_p(y a†_1 a_2)", "e_p(y a_1 ā†_2)"], ["w"], oscillator::exp_commutators_raising),
    suite!("oscillator-pochhammer-products", "e_p(p a_1 ā†_2) (y;p)_{D_1} = (y;p)_{D_1} e_p(-a_1 ā†_2 p^{D_1} y) e_p(p a_1 ā†_2)",
        Blocks, ["e_p(p a_1 ā†_2)"], ["x"], oscillator::pochhammer_products),
    suite!("rep-relations", "Serre, q-commutation and weight relations of U_q(affine sl2) and its Borel halves",
        Window, ["upsilon", "phi", "rho", "rhobar", "rho-", "rhobar-", "phi-", "Pi", "rho_r"], [], reps::relations),
    suite!("rep-grading", "grading shift by (s0, s1) conjugates by Z^{s0 D}-type diagonal operators",
        Window, ["upsilon", "phi", "rho", "rhobar", "rho-", "rhobar-", "phi-", "Pi", "rho_r"], ["Z"], reps::grading),
    suite!("rep-psi", "rho- = rho ∘ psi, rhobar- = rhobar ∘ psi, phi- = phi ∘ psi",
        Window, ["rho", "rhobar", "phi", "upsilon", "Pi"], [], reps::psi),
    suite!("O-intertwining", "O (rho_{z/u} ⊗ rhobar_{uz})(Δx) = (ups_z ⊗ phi_z)(Δx) O",
        Window, ["O", "rho", "rhobar", "upsilon", "phi"], ["z"], bulk::o_plus),
    suite!("O-minus", "O_21 (rhobar-_{z/u} ⊗ rho-_{uz})(Δx) = (phi-_z ⊗ ups_z)(Δx) O_21",
        Window, ["O21", "rho-", "rhobar-", "upsilon", "phi-"], ["z"], bulk::o_minus),
    suite!("bulk-factorization", "O_12 L_rho(z/u)_13 L_rhobar(uz)_23 = L_ups(z)_13 L_phi(z)_23 O_12",
        Window, ["O", "L rho", "L rhobar", "L upsilon", "L phi"], ["z"], bulk::factorization),
    suite!("bulk-factorization-minus", "O_32 L-_rho(z/u)_13 L-_rhobar(uz)_12 = L-_ups(z)_13 L-_phi(z)_12 O_32",
        Window, ["O", "L- rho", "L- rhobar", "L- upsilon", "L- phi"], ["z"], bulk::factorization_minus),
    suite!("R-defining-upsilon-phi", "X (ups_z ⊗ phi-)(Δx) = (ups_z ⊗ phi-)(Δop x) X, X = R_{ups phi}(z)",
        Window, ["R upsilon phi"], ["z"], boundary::r_defining_upsilon_phi),
    suite!("R-defining-rho-rhobar", "X_12 L_rho(z z2)_13 L-_rhobar(1/z2)^{-1}_32 = L-_rhobar(1/z2)^{-1}_32 L_rho(z z2)_13 X_12, X = R_{rho rhobar}(z)",
        Window, ["R rho rhobar", "L rho", "L- rhobar"], ["z", "z2", "w"], boundary::r_defining_rho_rhobar),
    suite!("K-intertwining-upsilon", "K_ups(z) ups_z(b) = ups_{1/z}(b) K_ups(z), b in the coideal",
        Window, ["K upsilon"], ["z"], boundary::k_intertwining),
    suite!("RE-right-upsilon", "L(y/z) K(y)_1 L(yz) K_Pi(z)_2 = K_Pi(z)_2 L(yz) K(y)_1 L(y/z), pi = upsilon",
        Window, ["K upsilon", "L upsilon", "K Pi"], ["y", "z"], boundary::re_right_upsilon),
    suite!("RE-right-phi", "L(y/z) K(y)_1 L(yz) K_Pi(z)_2 = K_Pi(z)_2 L(yz) K(y)_1 L(y/z), pi = phi",
        Window, ["K phi", "L phi", "K Pi"], ["y", "z"], boundary::re_right_phi),
    suite!("RE-right-rho", "L(y/z) K(y)_1 L(yz) K_Pi(z)_2 = K_Pi(z)_2 L(yz) K(y)_1 L(y/z), pi = rho",
        Window, ["K rho", "L rho", "K Pi"], ["y", "z"], boundary::re_right_rho),
    suite!("RE-right-rhobar", "L(y/z) K(y)_1 L(yz) K_Pi(z)_2 = K_Pi(z)_2 L(yz) K(y)_1 L(y/z), pi = rhobar",
        Window, ["K rhobar", "L rhobar", "K Pi"], ["y", "z"], boundary::re_right_rhobar),
    suite!("RE-left-upsilon", "K~(y)_1 L~(yz) K~_Pi(z)_2 L(y/z) = L(y/z) K~_Pi(z)_2 L~(yz) K~(y)_1, pi = upsilon",
        Window, ["K~ upsilon", "L upsilon", "L~ upsilon", "K~ Pi"], ["y", "z"], boundary::re_left_upsilon),
    suite!("RE-left-phi", "K~(y)_1 L~(yz) K~_Pi(z)_2 L(y/z) = L(y/z) K~_Pi(z)_2 L~(yz) K~(y)_1, pi = phi",
        Window, ["K~ phi", "L phi", "L~ phi", "K~ Pi"], ["y", "z"], boundary::re_left_phi),
    suite!("RE-left-rho", "K~(y)_1 L~(yz) K~_Pi(z)_2 L(y/z) = L(y/z) K~_Pi(z)_2 L~(yz) K~(y)_1, pi = rho",
        Window, ["K~ rho", "L rho", "L~ rho", "K~ Pi"], ["y", "z"], boundary::re_left_rho),
    suite!("RE-left-rhobar", "K~(y)_1 L~(yz) K~_Pi(z)_2 L(y/z) = L(y/z) K~_Pi(z)_2 L~(yz) K~(y)_1, pi = rhobar",
        Window, ["K~ rhobar", "L rhobar", "L~ rhobar", "K~ Pi"], ["y", "z"], boundary::re_left_rhobar),
    suite!("boundary-factorization-right", "K_ups(z)_1 R_{ups phi}(z^2) K_phi(z)_2 O = O K_rho(z/u)_1 R_{rho rhobar}(z^2) K_rhobar(uz)_2",
        Blocks, ["K upsilon", "K phi", "K rho", "K rhobar", "R upsilon phi", "R rho rhobar", "O"], ["z"], boundary::factorization_right),
    suite!("boundary-factorization-left", "K~_rhobar(uz)_2 R~_{rho rhobar}(z^2) K~_rho(z/u)_1 O^{-1} = O^{-1} K~_phi(z)_2 R~_{ups phi}(z^2) K~_ups(z)_1",
        Blocks, ["K~ upsilon", "K~ phi", "K~ rho", "K~ rhobar", "R~", "O"], ["z"], boundary::factorization_left),
    suite!("boundary-factorization-reduced", "e_p(p a_1 ā†_2) (g z^2;p)_{D_1} (p^{1-D_1} z^2/g;p)_{D_1}^{-1} e_p(p z^2/g ā†_1 a_2) e_p(p a_1 ā†_2)^{-1} = (g z^2;p)_{D_1} e_p(-a_1 ā†_2 p^{D_1} g z^2) e_p(p z^2/g ā†_1 a_2) (p^{1-D_2} z^2/g;p)_{D_2}^{-1}, g = p u^{-2} xi^{-1}",
        Blocks, ["e_p(p a_1 ā†_2)"], ["z"], boundary::factorization_reduced),
    suite!("normalizations", "K fixes w_0; R and O fix w_0 ⊗ w_0 and preserve charge; L_rho on w_0 ⊗ v±",
        Blocks, ["K", "R", "O", "L rho", "L phi"], ["z"], boundary::normalizations),
    suite!("link-identities", "L~(z) = L(q^2 z)^{-1}, K~(z) = K(qz)^{-1}|_{xi -> 1/xi~}, R~(z) = R(q^2 z)^{-1}",
        Window, ["L~", "L-", "K~", "R~", "O"], ["z"], boundary::links),
    suite!("oracle-K", "diagonal solutions of the right reflection equation and of K_ups ups_z(b) = ups_{1/z}(b) K_ups are one-dimensional and equal the closed forms",
        Blocks, ["K rho", "K rhobar", "K upsilon", "K phi"], ["y", "z", "x"], oracle::oracle_k),
    suite!("oracle-R", "charge-preserving solutions of the R-defining relations are one-dimensional and equal the closed forms",
        Blocks, ["R upsilon phi", "R rho rhobar"], ["z", "z2", "w"], oracle::oracle_r),
    suite!("fusion-SES", "0 -> rho_{qr,qz} --iota(r)--> rho_{r,z} ⊗ Pi_z --tau(r)--> rho_{r/q,z/q} -> 0",
        Window, ["iota", "tau", "rho_r", "Pi"], ["z"], fusion::ses),
    suite!("fusion-K", "K(r,z)_1 L(r,z^2) K_Pi(z)_2 iota(r) = c1 iota(r) K(qr,qz), tau(r) K(r,z)_1 L(r,z^2) K_Pi(z)_2 = c2 K(r/q,z/q) tau(r)",
        Window, ["L(r,z)", "K(r,z)", "iota", "tau", "K Pi"], ["z", "x", "w"], fusion::fusion_k_suite),
    suite!("window-soundness", "columns certified at truncation N agree with truncation N+4",
        Window, ["a", "a†", "ā†"], [], window::soundness),
];

pub fn registry() -> &'static [SuiteSpec] {
    REGISTRY
}
