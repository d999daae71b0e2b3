#pragma once

#include <string>
#include <vector>

#include "octic/discriminant.hpp"
#include "octic/matrix.hpp"

namespace octic {

/// Gram matrix [[a, b], [b, c]].
struct BinaryForm {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 det() const { return a * c - b * b; }
    bool even() const { return a % 2 == 0 && c % 2 == 0; }
    IMat gram() const;
    /// "[a,b,c]"
    std::string str() const;
    bool operator==(const BinaryForm&) const = default;
    auto operator<=>(const BinaryForm&) const = default;
};

/// |2b| <= a <= c, with b >= 0 when |2b| = a or a = c.
bool is_reduced(const BinaryForm& f);
/// Unique reduced form properly equivalent to f (f positive definite).
/// `transform` (optional) receives M in SL2(Z) with M G M^T = reduced Gram.
BinaryForm gauss_reduce(const BinaryForm& f, IMat* transform = nullptr);
/// Representative up to improper equivalence: the reduced form with b >= 0.
BinaryForm table_form(const BinaryForm& f);

/// All reduced even forms of the given determinant, sorted; up to proper
/// equivalence.
std::vector<BinaryForm> enumerate_even_forms(i64 det);

/// Integral automorphisms M (rows: images of the basis) with M G M^T = G.
std::vector<IMat> automorphisms(const BinaryForm& f);
/// The determinant +1 part.
std::vector<IMat> rotations(const BinaryForm& f);
/// Action of M on discr f (images of the generators).
FormMap discriminant_action(const BinaryForm& f, const DiscriminantForm& d, const IMat& m);

/// Genera: classes of enumerate_even_forms(det) with isomorphic
/// discriminant forms.
std::vector<std::vector<BinaryForm>> genera(i64 det);
/// Reduced even forms T (up to improper equivalence) with discr T ≅ d.
std::vector<BinaryForm> forms_with_discriminant(const DiscriminantForm& d);

}  // namespace octic
