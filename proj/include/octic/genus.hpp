#pragma once

#include <string>
#include <vector>

#include "octic/discriminant.hpp"

namespace octic {

/// One orthogonal summand of a p-primary finite quadratic form.
struct JordanBlock {
    enum class Kind { cyclic, u, v };
    i64 p = 2;
    int k = 1;         ///< the block lives on (Z/p^k)^rank
    Kind kind = Kind::cyclic;
    i64 value = 0;     ///< cyclic: c with q(x) = c / p^k mod 2
    int rank() const { return kind == Kind::cyclic ? 1 : 2; }
};

/// Orthogonal splitting of a p-primary form (as returned by p_part) into
/// cyclic blocks and, for p = 2, the hyperbolic-type planes u_k and v_k.
std::vector<JordanBlock> jordan_decomposition(const DiscriminantForm& dp, i64 p);

/// Existence of an even lattice with signature (t_plus, t_minus) and the
/// given discriminant form (the classical local conditions: Gauss-sum
/// signature, length bound, and determinant conditions in the boundary case).
bool genus_exists(int t_plus, int t_minus, const DiscriminantForm& d, std::string* reason = nullptr);

/// Legendre symbol (a/p) for odd prime p.
int legendre(i64 a, i64 p);

}  // namespace octic
