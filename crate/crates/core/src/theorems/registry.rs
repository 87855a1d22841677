use std::fmt;

use serde::Serialize;

/// The kind of instance a case quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputClass {
    Psd,
    /// PSD with exactly two blocks per side, `[[A, B], [B*, C]]`.
    PsdTwoByTwo,
    Ppt,
    Hermitian,
    GramPair,
    RealInt,
    SquareComplex,
    MatrixUnitE,
    /// Only `(m, n)` matters; the checked matrix is fixed.
    DimsOnly,
    OffDiagHermitian,
    OffDiagSkewHermitian,
}

impl InputClass {
    pub fn as_str(self) -> &'static str {
        match self {
            InputClass::Psd => "psd",
            InputClass::PsdTwoByTwo => "psd-2x2-blocks",
            InputClass::Ppt => "ppt",
            InputClass::Hermitian => "hermitian",
            InputClass::GramPair => "gram-pair",
            InputClass::RealInt => "real-int",
            InputClass::SquareComplex => "square-complex",
            InputClass::MatrixUnitE => "matrix-unit-E",
            InputClass::DimsOnly => "dims-only",
            InputClass::OffDiagHermitian => "offdiag-hermitian",
            InputClass::OffDiagSkewHermitian => "offdiag-skew-hermitian",
        }
    }

    /// Classes whose instances always have two blocks per side; the suite
    /// maps a requested `(m, n)` to `(2, n)` for them.
    pub fn forces_two_blocks(self) -> bool {
        matches!(
            self,
            InputClass::PsdTwoByTwo
                | InputClass::MatrixUnitE
                | InputClass::OffDiagHermitian
                | InputClass::OffDiagSkewHermitian
        )
    }
}

impl fmt::Display for InputClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    PsdSlack,
    Majorization,
    ConditionalMajorization,
    SvDominance,
    Scalar,
    PptOfDerived,
    ExpectedFailure,
    Scan,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TheoremCase {
    pub number: u8,
    pub id: &'static str,
    pub input_class: InputClass,
    pub check_kind: CheckKind,
    /// The inequality in compact notation.
    pub statement: &'static str,
    /// Where the statement is credited in the literature.
    pub attribution: &'static str,
}

macro_rules! case {
    ($num:expr, $id:expr, $input:ident, $check:ident, $stmt:expr, $attr:expr) => {
        TheoremCase {
            number: $num,
            id: $id,
            input_class: InputClass::$input,
            check_kind: CheckKind::$check,
            statement: $stmt,
            attribution: $attr,
        }
    };
}

pub static REGISTRY: [TheoremCase; 44] = [
    case!(1, "choi-tr1", Psd, PsdSlack, "I_m ⊗ tr1(A^τ) ≥ A^τ", "Choi"),
    case!(2, "li-tr1-improved", Psd, PsdSlack, "I_m ⊗ tr1(A^τ) ≥ -A^τ + 2D_A", "Li"),
    case!(3, "tr1-hermitian-sandwich", Hermitian, PsdSlack,
        "(m-1)λmax I + 2D_A ≥ I_m ⊗ tr1(A^τ) + A^τ ≥ (m-1)λmin I + 2D_A", "Li"),
    case!(4, "tr1-lambda-min", Psd, PsdSlack, "I_m ⊗ tr1(A^τ) ≥ -A^τ + (m-1)λmin I", "Li"),
    case!(5, "tr2-hadamard", Psd, PsdSlack, "(tr2 A^τ) ⊗ I_n ≥ -A^τ + 2 A^τ∘J", "Li"),
    case!(6, "tr2-hermitian-sandwich", Hermitian, PsdSlack,
        "(n-1)λmax I + 2A^τ∘J ≥ (tr2 A^τ) ⊗ I_n + A^τ ≥ (n-1)λmin I + 2A^τ∘J", "Li"),
    case!(7, "tr2-lambda-min", Psd, PsdSlack, "(tr2 A^τ) ⊗ I_n ≥ -A^τ + (n-1)λmin I", "Li"),
    case!(8, "choi-tr2-pm", Psd, PsdSlack, "(tr2 A^τ) ⊗ I_n ≥ ±A^τ", "Choi"),
    case!(9, "horodecki-reduction", Ppt, PsdSlack,
        "A PPT ⇒ I_m ⊗ tr1 A ≥ A and (tr2 A) ⊗ I_n ≥ A", "Horodecki"),
    case!(10, "phi-completely-ppt", Psd, PptOfDerived, "[Φ(A_ij)] is PPT, Φ(X) = (tr X)I + X", "Lin"),
    case!(11, "psi-completely-copositive", Psd, PsdSlack, "[Ψ(A_ji)] ≥ 0, Ψ(X) = (tr X)I - X", "Lin"),
    case!(12, "psi-not-2-positive", MatrixUnitE, ExpectedFailure, "[Ψ(E_ij)] is not PSD", "Li"),
    case!(13, "trace-2x2-besenyei", PsdTwoByTwo, Scalar,
        "trA trC - |trB|^2 ≥ tr(AC) - tr(B*B)", "Besenyei"),
    case!(14, "trace-2x2-kittaneh-lin", PsdTwoByTwo, Scalar,
        "trA trC - |trB|^2 ≥ tr(B*B) - tr(AC)", "Kittaneh-Lin"),
    case!(15, "trace-2x2-plus", PsdTwoByTwo, Scalar,
        "trA trC + |trB|^2 ≥ tr(AC) + tr(B*B)", "Kittaneh-Lin"),
    case!(16, "ando", Psd, PsdSlack,
        "(trA)I - (tr2 A) ⊗ I_n ≥ I_m ⊗ tr1 A - A", "Ando"),
    case!(17, "li-liu-huang-minus", Psd, PsdSlack,
        "(trA)I - (tr2 A) ⊗ I_n ≥ ±(I_m ⊗ tr1 A - A)", "Li-Liu-Huang"),
    case!(18, "li-liu-huang-pm", Psd, PsdSlack,
        "(trA)I ± (tr2 A) ⊗ I_n ≥ A ± I_m ⊗ tr1 A", "Li-Liu-Huang"),
    case!(19, "thm42-improved", Psd, PsdSlack,
        "(trA)I + (tr2 A) ⊗ I_n ≥ A + I_m ⊗ tr1 A + 2(tr2 D_A) ⊗ I_n - 2D_A", "Li"),
    case!(20, "thm44-improved", Psd, PsdSlack,
        "(trA)I - (tr2 A) ⊗ I_n ≥ A - I_m ⊗ tr1 A + 2(I_m ⊗ tr1 A - A)∘J", "Li"),
    case!(21, "thm4p4-analogue", Psd, PsdSlack,
        "(trA)I + (tr2 A) ⊗ I_n + I_m ⊗ tr1 A + A ≥ 2(tr2 D_A) ⊗ I_n + 2D_A", "Li"),
    case!(22, "choi-hermitian-ando", Hermitian, PsdSlack,
        "A + (trA)I - (m-1)(n-1)λmax I ≤ I_m ⊗ tr1 A + (tr2 A) ⊗ I_n ≤ A + (trA)I - (m-1)(n-1)λmin I",
        "Choi"),
    case!(23, "prop-hermitian-minus", Hermitian, PsdSlack,
        "(trA)I - (tr2 A) ⊗ I_n vs ±(I_m ⊗ tr1 A - A) + (m-1)(n∓1)λ I, both directions", "Li"),
    case!(24, "prop-hermitian-plus", Hermitian, PsdSlack,
        "(trA)I + (tr2 A) ⊗ I_n vs I_m ⊗ tr1 A + A + (m+1)(n-1)λ I, both directions", "Li"),
    case!(25, "ck-classical", RealInt, Scalar,
        "S^2 + mn Σx^2 ≥ m Σ(row sums)^2 + n Σ(col sums)^2", "Cauchy-Khinchin"),
    case!(26, "ck-lih", RealInt, Scalar,
        "mn Σx^2 - n Σcol^2 ≥ |m Σrow^2 - S^2|; mn Σx^2 ± n Σcol^2 ≥ S^2 ± m Σrow^2", "Li-Liu-Huang"),
    case!(27, "ck-improved", RealInt, Scalar,
        "(m-2)n Σx^2 + n Σcol^2 ≥ S^2 + (m-2) Σrow^2 and the transposed form", "Li"),
    case!(28, "eq18-matrix", DimsOnly, PsdSlack,
        "(m-2)n I + n J_m ⊗ I_n ≥ J_m ⊗ J_n + (m-2) I_m ⊗ J_n", "Li"),
    case!(29, "schur-majorization", Hermitian, Majorization, "d(H) ≺ λ(H)", "Schur"),
    case!(30, "eqm1-majorization", Psd, Majorization,
        "λ(D_A) ≺ λ(A) ≺ λ(A_11) + ... + λ(A_mm)", "classical"),
    case!(31, "eqm2-rotfeld-thompson", Psd, Majorization,
        "λ(D_A) ≺ λ(tr1 A) ≺ λ(A_11) + ... + λ(A_mm)", "Rotfel'd-Thompson"),
    case!(32, "hiroshima-conditional", Psd, ConditionalMajorization,
        "I_m ⊗ tr1 A ≥ A ⇒ λ(A) ≺ λ(tr1 A); (tr2 A) ⊗ I_n ≥ A ⇒ λ(A) ≺ λ(tr2 A)", "Hiroshima"),
    case!(33, "ppt-majorization", Ppt, Majorization,
        "λ(A), λ(A^τ) ≺ λ(tr1 A) and ≺ λ(tr2 A)", "Li"),
    case!(34, "hermitian-offdiag-majorization", OffDiagHermitian, Majorization,
        "K Hermitian ⇒ λ([[M, K], [K*, N]]) ≺ λ(M + N)", "Bourin-Lee-Lin"),
    case!(35, "skew-offdiag-majorization", OffDiagSkewHermitian, Majorization,
        "K skew-Hermitian ⇒ λ([[M, K], [K*, N]]) ≺ λ(M + N)", "Tao-Pan-Zhang"),
    case!(36, "lin-2x2-ppt", PsdTwoByTwo, PptOfDerived,
        "[[(trA)I + A, (trB)I + B], [(trB*)I + B*, (trC)I + C]] is PPT", "Lin"),
    case!(37, "choi-block-ppt", PsdTwoByTwo, PptOfDerived,
        "[[(trA)I + C, (trB)I - B], [(trB*)I - B*, (trC)I + A]] is PPT", "Li"),
    case!(38, "coro55-norms", PsdTwoByTwo, Scalar,
        "2||(trB)I ± B|| ≤ ||(tr(A+C))I + A + C|| for every Ky Fan norm", "Li"),
    case!(39, "coro-n-plus-1-half", PsdTwoByTwo, Scalar,
        "||(trB)I + B|| ≤ (n+1)/2 ||[[trA, trB], [trB*, trC]]|| for every Ky Fan norm", "Li"),
    case!(40, "thm37-singular", PsdTwoByTwo, SvDominance,
        "2 s_j((trB)I ± B) ≤ s_j((tr(A+C))I + A + C)", "Lin"),
    case!(41, "lem39-singular", GramPair, SvDominance, "2 s_j(MN*) ≤ s_j(M*M + N*N)", "Bhatia-Kittaneh"),
    case!(42, "lem38-eigen", GramPair, Scalar,
        "λ_j(M*M + N*N) ≤ λ_j(MM* + NN*) + tr(M*M + N*N - M*N - N*M)/2", "Li"),
    case!(43, "abs-block-corollary", SquareComplex, SvDominance,
        "2 s_j((trX)I ± X) ≤ s_j((tr(|X| + |X*|))I + |X| + |X*|)", "Li"),
    case!(44, "open-question-residual", Psd, Scan,
        "(trA)I + A - I_m ⊗ tr1 A - (tr2 A) ⊗ I_n ≥ 0", "Ando"),
];

pub fn registry() -> &'static [TheoremCase] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static TheoremCase> {
    REGISTRY.iter().find(|c| c.id == id)
}
