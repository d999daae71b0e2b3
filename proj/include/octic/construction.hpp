#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/discriminant.hpp"
#include "octic/kummer.hpp"
#include "octic/lattice.hpp"

namespace octic {

/// Degree of an extra generator: 1 for a line, 2 for a conic.
struct Pattern {
    int eps = 2;
    SubsetMask supp1;
    SubsetMask supp2;

    int p() const { return supp1.size(); }
    int q() const { return supp2.size(); }
    bool is_line() const { return eps == 1; }
    /// "l4-0", "c12-3".
    std::string label() const;
};

/// Parses "l4-0" / "c12-3" into (eps, p, q).
struct PatternShape {
    int eps = 2;
    int p = 0;
    int q = 0;
    std::string label() const;
    bool operator==(const PatternShape&) const = default;
    auto operator<=>(const PatternShape&) const = default;
};
PatternShape parse_pattern(const std::string& s);

/// Number of fixed generators e_0..e_15, h.
inline constexpr std::size_t kBaseGenerators = 17;
inline constexpr std::size_t kH = 16;

/// A lattice N ⊇ Λ̃ presented inside the rational span of the generators
/// e_0..e_15, h, u_1..u_k. The generator Gram matrix is integral; `basis`
/// holds rational rows in generator coordinates.
struct ExtLattice {
    IMat ambient;                  ///< Gram matrix of the generators
    QMat basis;                    ///< rows spanning N (HNF)
    IMat gram;                     ///< basis * ambient * basis^T
    std::vector<Pattern> patterns; ///< patterns of u_1..u_k

    std::size_t rank() const { return basis.rows(); }
    std::size_t extra() const { return ambient.rows() - kBaseGenerators; }
    std::size_t dim() const { return ambient.rows(); }

    /// Generator coordinates of e_i, h, u_j.
    QVec generator(std::size_t j) const;
    /// Ambient vector -> basis coordinates (must lie in N⊗Q).
    QVec coords(const QVec& ambient_vector) const;
    /// Basis coordinates -> ambient vector.
    QVec ambient_of(const IVec& c) const;
    bool contains(const QVec& ambient_vector) const;
    mpq_class dot(const QVec& a, const QVec& b) const { return bilinear(a, ambient, b); }

    IVec h_coords() const;
    std::vector<IVec> delta_coords() const;
    /// EvenLattice view (Gram, h, δ in basis coordinates).
    EvenLattice lattice() const;
};

/// Half vectors and sums over subsets of δ, in generator coordinates of
/// an ambient of dimension `dim`.
QVec sum_vector(SubsetMask s, std::size_t dim = kBaseGenerators);
/// (1/2)(s ∩ r) - (1/2)(s \ r).
QVec half_vector(SubsetMask s, SubsetMask r, std::size_t dim = kBaseGenerators);
QVec h_vector(std::size_t dim = kBaseGenerators);

/// Zδ + Zh with e² = -2, h² = 8, h·e = 2, extended by all (1/2)ω, ω ∈ O_*,
/// and h/2 + (1/2)(κ ∩ ∅) - (1/2)κ, κ ∈ K_*.
ExtLattice build_lambda_tilde(const KummerStructure& ks);

/// θ = δ̄ + h (generator coordinates).
QVec theta_vector(std::size_t dim = kBaseGenerators);

/// The 16 conics h/2 + ⟨κ|ς⟩ for ς ⊂ κ ∈ K_4, |ς| = 1, with their patterns.
struct BBConic {
    QVec vector;
    SubsetMask kappa;
    int point = 0;
    Pattern pattern;
};
std::vector<BBConic> bb_conics(const KummerStructure& ks);

/// Supports and degree of an ambient vector v of N: v·e, v·h.
Pattern pattern_of(const ExtLattice& n, const QVec& v);

/// Squared norm of the projection of a pattern vector to Λ̃⊗Q:
/// -p/2 - 2q + (p + 2q + eps)^2 / (h² + 32), with h² = 8.
mpq_class projected_norm(int p, int q, int eps);

enum class ExtensionStatus { accepted, non_integral, non_hyperbolic, degenerate };
std::string to_string(ExtensionStatus s);

struct ExtensionResult {
    ExtensionStatus status = ExtensionStatus::accepted;
    std::optional<ExtLattice> lattice;
    std::string detail;
};

/// N + Zu where u² = -2, u·h = eps, u·e from the supports, and u·u_j = pairings[j].
ExtensionResult extend(const ExtLattice& base, const Pattern& pattern, const std::vector<i64>& pairings = {});
/// One-vector extension of Λ̃.
ExtensionResult extend_by_pattern(const ExtLattice& lambda, const Pattern& pattern);

/// Sylvester table: for eps = 1, 2 (and 3 for the isotropic version with
/// u² = 0) the pairs (p, q), p even, that survive u_S² > u² (or u_S² >= u²
/// when `inclusive`).
struct SylvesterCell {
    int p = 0;
    int q = 0;
    bool survives = false;
    bool parity_or_orbit_excluded = false;  ///< no member of C_p with the required parity
};
std::vector<SylvesterCell> sylvester_table(int eps, const KummerStructure& ks, int u_norm = -2, bool inclusive = false);

/// Class U ⊂ 2^δ with (1/2)(u + ū) ∈ N and 2|ū| ≡ u² mod 8, for u ∈ N
/// orthogonal to δ. Empty when no subset works. Throws if u·e ≠ 0 for some e.
std::vector<SubsetMask> kernel_class(const ExtLattice& n, const QVec& u);

/// Image of v ∈ N in discr Λ̃, split into its 2- and 5-primary parts.
struct ClusterSignature {
    i64 delta2_order = 1;
    mpq_class delta2_square;  ///< in [0, 2)
    int delta5 = 0;           ///< coefficient against θ/5, in {-2, ..., 2}
    std::string label() const;
    bool operator==(const ClusterSignature&) const = default;
};
/// Λ̃-data needed for signatures: built once per Λ̃.
struct LambdaDiscriminant {
    DiscriminantForm form;       ///< discr Λ̃, lattice coordinates of Λ̃'s basis
    QMat basis;                  ///< Λ̃ basis (generator coordinates)
    IMat gram;
    QMat gram_inverse;
    IVec eta5;                   ///< residues of θ/5
    IVec eta2;                   ///< residues of θ/4
};
LambdaDiscriminant lambda_discriminant(const ExtLattice& lambda);
/// v given in generator coordinates of any ambient extending Λ̃'s.
ClusterSignature cluster_signature(const LambdaDiscriminant& ld, const IMat& ambient, const QVec& v);
/// Residues of δ(v) in discr Λ̃.
IVec delta_image(const LambdaDiscriminant& ld, const IMat& ambient, const QVec& v);

}  // namespace octic
