//! The identity catalog. Every report carries one of these reference strings.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    pub id: &'static str,
    pub reference: &'static str,
}

macro_rules! catalog {
    ($($name:ident = $id:literal => $reference:literal;)*) => {
        $(pub const $name: Identity = Identity { id: $id, reference: $reference };)*
        pub const CATALOG: &[Identity] = &[$($name),*];
    };
}

catalog! {
    REL_ACOMM_LADDER = "rel.acomm_ladder" => "{a,a†} = αN + βI";
    REL_ACOMM_LADDER_Q = "rel.acomm_ladder_q" => "{a,a†} = [αN + βI]_q";
    REL_COMM_LADDER = "rel.comm_ladder" => "[a,a†] = σN + τI";
    REL_COMM_LADDER_Q = "rel.comm_ladder_q" => "[a,a†] = [σN + τI]_q";
    REL_NUMBER_LOWER = "rel.number_lower" => "[N,a] = −a";
    REL_NUMBER_RAISE = "rel.number_raise" => "[N,a†] = a†";
    REL_GRADE_LOWER = "rel.grade_lower" => "{(−1)^Ñ, a} = 0";
    REL_GRADE_RAISE = "rel.grade_raise" => "{(−1)^Ñ, a†} = 0";
    REL_GRADE_NUMBER = "rel.grade_number" => "[(−1)^Ñ, N] = 0";
    REL_GRADE_INVERSE = "rel.grade_inverse" => "(−1)^Ñ (−1)^(−Ñ) = I";
    REL_H_COMM = "rel.h_comm" => "[b,b†] = δI + νK";
    REL_H_REFL_LOWER = "rel.h_refl_lower" => "{K,b} = 0";
    REL_H_REFL_RAISE = "rel.h_refl_raise" => "{K,b†} = 0";
    REL_H_M_LOWER = "rel.h_m_lower" => "[M,b] = −b";
    REL_H_M_RAISE = "rel.h_m_raise" => "[M,b†] = b†";
    REL_H_GRADE_LOWER = "rel.h_grade_lower" => "{(−1)^M̃, b} = 0";
    REL_H_GRADE_RAISE = "rel.h_grade_raise" => "{(−1)^M̃, b†} = 0";
    REL_H_GRADE_REFL = "rel.h_grade_refl" => "[(−1)^M̃, K] = 0";
    REL_H_GRADE_NUMBER = "rel.h_grade_number" => "[(−1)^M̃, M] = 0";
    REL_H_GRADE_INVERSE = "rel.h_grade_inverse" => "(−1)^M̃ (−1)^(−M̃) = I";
    FOCK_REFL_SQUARE = "fock.refl_square" => "K² = ((ν−δ+1)/ν)² I";

    HOPF_COASSOC = "hopf.coassociativity" => "(Δ⊗id)Δ(x) = (id⊗Δ)Δ(x)";
    HOPF_COUNIT_LEFT = "hopf.counit_left" => "(ε⊗id)Δ(x) = x";
    HOPF_COUNIT_RIGHT = "hopf.counit_right" => "(id⊗ε)Δ(x) = x";
    HOPF_ANTIPODE_LEFT = "hopf.antipode_left" => "m(S⊗id)Δ(x) = ε(x)I";
    HOPF_ANTIPODE_RIGHT = "hopf.antipode_right" => "m(id⊗S)Δ(x) = ε(x)I";
    HOPF_ANTIPODE_INVERSE = "hopf.antipode_inverse" => "S⁻¹(S(x)) = x";
    HOPF_DELTA_HOM = "hopf.delta_homomorphism" => "Δ respects the defining relations";
    HOPF_ANTIPODE_ANTIHOM = "hopf.antipode_antihomomorphism" => "S(xy) = S(y)S(x) respects the defining relations";
    HOPF_ADJOINT = "hopf.adjoint" => "ad_x(y) = Σ x₍₁₎ y S(x₍₂₎)";
    HOPF_ADJOINT_PRIME = "hopf.adjoint_prime" => "ad′_x(y) = Σ x₍₂₎ y S⁻¹(x₍₁₎)";

    R_QUASITRIANGULAR = "r.quasitriangular" => "Δᵀ(x) R = R Δ(x)";
    R_FUSION_LEFT = "r.fusion_left" => "(Δ⊗id)R = R₁₃R₂₃";
    R_FUSION_RIGHT = "r.fusion_right" => "(id⊗Δ)R = R₁₃R₁₂";
    R_INVERSE = "r.inverse" => "((S⊗id)R) R = I⊗I";
    R_YBE = "r.ybe" => "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂";
    R_R0_SQUARE = "r.r0_square" => "R₀² = I⊗I";
    R_CLASSICAL_LIMIT = "r.classical_limit" => "R(q) → R₀ as q → 1";
    R_PRINTED_BBARQ = "r.printed_bbarq" => "series with q^(+σl(l+1)/4) and q^(±σlÑ/4) factors";

    L_ACOMM_LOWER = "struct.l_acomm_lower" => "{L,a} = 0";
    L_ACOMM_RAISE = "struct.l_acomm_raise" => "{L,a†} = 0";
    L_FOCK = "struct.l_fock" => "L⁺|n⟩ = (λ₁(α/4 − β/2) + λ₄(−1)^(β/α)) (−1)^n |n⟩";
    L_DELTA = "struct.l_delta" => "Δ(L⁺) = L⊗I + I⊗L − λ₁(α/4)I⊗I + λ₄(−1)^Ñ⊗(−1)^Ñ − λ₁((−1)^Ñ a†⊗a − (−1)^(−Ñ) a⊗a†)";
    L_DELTA_ACOMM = "struct.l_delta_acomm" => "{Δ(L⁺), Δ(a)} = 0";
    L_COUNIT = "struct.l_counit" => "ε(L⁺) = λ₁α/4 + λ₄";
    L_ANTIPODE = "struct.l_antipode" => "S(L⁺) = L⁺";
    CHARACTERISTIC = "struct.characteristic" => "C(C + (α/2 − β)I) + (α/4 − β/2)² I = (η/λ₁²) I";
    BH_FORM = "struct.bh_form" => "[a,a†] = −(2/λ₁)L + (α/2)I";
    M_NUMBER = "struct.m_number" => "M = (1/δ)b†b + (ν/2δ)K + ρI acts as m + (ν−δ+1)/(2δ) + ρ";
    M_LOWER = "struct.m_lower" => "[M,b] = −b";
    M_RAISE = "struct.m_raise" => "[M,b†] = b†";
    COM = "struct.com" => "{b,b†} = 2δM + δ(1 − 2ρ)I";

    REAL_ACOMM_EF = "real.acomm_ef" => "{e,f} = h";
    REAL_COMM_EF = "real.comm_ef" => "[e,f] = h";
    REAL_ACOMM_EF_Q = "real.acomm_ef_q" => "{e,f} = [h]_{q^α}";
    REAL_COMM_EF_Q = "real.comm_ef_q" => "[e,f] = [h]_{q^(σ/2)}";
    REAL_COMM_HE = "real.comm_he" => "[h,e] = κe";
    REAL_COMM_HF = "real.comm_hf" => "[h,f] = −κf";
    CASIMIR_OSP = "cas.osp_i2" => "I₂ = −¼e²f² − ¼ef + h²/16 − h/8 = β²/(4α²) − β/(4α)";
    CASIMIR_SL2 = "cas.sl2_c2" => "C₂ = 2J₋J₊ − J₀² − J₀ = c_n";
    CASIMIR_SL2_SECTORS = "cas.sl2_sectors" => "C₂ is constant on even and odd sectors";

    ISO_PHI = "iso.phi" => "φ: B_{α,β} → H_{δ,ν} is a homomorphism iff α = 2δ";
    ISO_PHI_PRIME = "iso.phi_prime" => "φ′: H_{δ,ν} → B_{α,β} is a homomorphism iff α = 2δ";
    ISO_ROUNDTRIP = "iso.roundtrip" => "φ′∘φ = id and φ∘φ′ = id";
    ISO_PHI_PRIME_M = "iso.phi_prime_m" => "φ′(M) = N + (β−δ)/(2δ) + ρ";
    ISO_PHI_L = "iso.phi_l" => "φ(L) = −(λ₁ν/2)K";
    ISO_WITNESS = "iso.witness" => "homomorphism defect away from α = 2δ";

    EXPR = "expr.identity" => "user or corpus identity expression";
    QCONT = "fock.q_continuity" => "weights of the q-family tend to the undeformed weights as q → 1";
    PROVISO = "proviso" => "parameter point outside the stated provisos";
    RUNNER_ERROR = "runner.error" => "check could not be computed";
}

pub fn lookup(id: &str) -> Option<&'static Identity> {
    CATALOG.iter().find(|i| i.id == id)
}

pub fn contains_reference(reference: &str) -> bool {
    CATALOG.iter().any(|i| i.reference == reference)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn ids_are_unique() {
        let ids: HashSet<_> = CATALOG.iter().map(|i| i.id).collect();
        assert_eq!(ids.len(), CATALOG.len());
        assert_eq!(lookup("r.ybe"), Some(&R_YBE));
    }
}
