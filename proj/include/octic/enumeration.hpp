#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "octic/lattice.hpp"

namespace octic {

/// All w in Z^n with v = w + shift satisfying v gram v^T == target_norm
/// (gram negative definite, so target_norm <= 0).
struct CosetQuery {
    IMat gram;           ///< negative definite
    QVec shift;          ///< empty means zero
    mpq_class target_norm;
};

/// Visits every integer w with (w + c) Q (w + c)^T <= bound, Q positive
/// definite. The visitor returns false to stop early; the function then
/// returns false as well. Floating point is used only to bound the search
/// (with a fixed relative margin); callers verify hits exactly.
bool enumerate_ellipsoid(const IMat& q, const QVec& c, const mpq_class& bound,
                         const std::function<bool(const IVec&)>& visit);

/// Exact solutions, sorted lexicographically. Throws std::invalid_argument
/// if the form is not negative definite.
std::vector<IVec> coset_vectors(const CosetQuery& query);
std::vector<IVec> short_vectors(const IMat& negative_definite_gram, i64 norm);

/// Reference implementation: scans the box |w_i| <= radius.
std::vector<IVec> short_vectors_naive(const IMat& negative_definite_gram, i64 norm, i64 radius);

/// Vectors of a polarized lattice with prescribed degree v·h and square v².
/// Built once per lattice: h⊥ is LLL-reduced and each query is a coset query.
class DegreeSlicer {
public:
    explicit DegreeSlicer(const EvenLattice& lattice);

    /// gcd of x·h over the lattice.
    i64 depth() const { return depth_; }
    /// All v with v·h = degree and v² = norm (coordinates in the lattice basis), sorted.
    std::vector<IVec> vectors(i64 degree, i64 norm) const;
    /// First such vector, if any.
    std::optional<IVec> find(i64 degree, i64 norm) const;
    /// Calls visit on every such vector until it returns false.
    bool for_each(i64 degree, i64 norm, const std::function<bool(const IVec&)>& visit) const;

private:
    EvenLattice lat_;
    IVec hg_;        // G h, the functional x -> x·h
    i64 depth_ = 0;
    IVec base_;      // base_·h = depth_
    IMat kernel_;    // rows: basis of h⊥ (LLL-reduced)
    IMat q_;         // -(K G K^T), positive definite
    QMat q_inv_;
};

/// Lines, conics, irreducibility, incidences.
struct FanoVertex {
    IVec coords;
    int degree = 2;
    int kummer_index = -1;  ///< position in the lattice's δ list, or -1
};

struct FanoGraph {
    std::vector<FanoVertex> vertices;  ///< lines first, then irreducible conics; each block sorted by coords
    IMat adjacency;                    ///< u·v off the diagonal, 0 on it
    std::vector<int> kummer;           ///< vertex indices of the Kummer family
    std::size_t reducible_conics = 0;
    std::size_t lines() const;
    std::size_t conics() const;
    /// Multiplicities outside {0, 1, 2}, or l·l' > 1, or l·c > 1.
    std::optional<std::string> bound_violation() const;
};

/// Fn_1 and the irreducible part of Fn_2. Throws std::invalid_argument if
/// the lattice has no polarization or is not hyperbolic.
FanoGraph fano_graph(const EvenLattice& lattice);
FanoGraph fano_graph(const EvenLattice& lattice, const DegreeSlicer& slicer);

/// Count of unordered pairs of lines {l, l'} with l·l' = 1.
std::size_t intersecting_line_pairs(const FanoGraph& g);

enum class Violation { none, h_divisible, exceptional_divisor, isotropic2, missing_conic };
std::string to_string(Violation v);

struct AdmissibilityVerdict {
    Violation violation = Violation::none;
    IVec witness;
    bool admissible() const { return violation == Violation::none; }
};

AdmissibilityVerdict admissible(const EvenLattice& lattice);
AdmissibilityVerdict admissible(const EvenLattice& lattice, const DegreeSlicer& slicer);

/// No u with u² = 0, u·h = 3.
bool is_triquadric(const EvenLattice& lattice, IVec* witness = nullptr);
i64 depth(const EvenLattice& lattice);

}  // namespace octic
