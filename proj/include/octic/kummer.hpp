#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octic/subset_mask.hpp"

namespace octic {

/// Extended binary Golay code; a word is a 24-bit mask (bit j = coordinate j).
struct GolayCode {
    std::array<std::uint32_t, 12> generator{};  ///< rows of the generator matrix
    std::vector<std::uint32_t> codewords;       ///< all 4096 words, sorted
};

GolayCode build_golay();
int golay_min_weight(const GolayCode& code);

/// Permutation of the 16 Kummer indices: image[i] = g(i).
using Perm16 = std::array<std::uint8_t, 16>;

Perm16 perm16_identity();
Perm16 perm16_compose(const Perm16& a, const Perm16& b);  ///< (a*b)(i) = a(b(i))
Perm16 perm16_inverse(const Perm16& a);
SubsetMask image(const Perm16& g, SubsetMask s);

struct KummerStructure {
    std::vector<int> delta_coordinates;  ///< Golay coordinates identified with 0..15
    std::vector<SubsetMask> octads;      ///< the 30 members of O_8
    std::vector<SubsetMask> kummer;      ///< O_* (32 sets, sorted)
    std::vector<SubsetMask> even_sets;   ///< C_* (2048 sets, sorted)
    SubsetMask kappa;                    ///< the fixed member of K_4
    std::vector<SubsetMask> kummer8;     ///< K_* = kappa ^ O_* (sorted)

    bool in_C(SubsetMask s) const;
    bool in_O(SubsetMask s) const;
    bool in_K(SubsetMask s) const;
    std::vector<SubsetMask> C(int n) const;  ///< members of C_* of cardinality n
    std::vector<SubsetMask> K(int n) const;

private:
    friend KummerStructure build_kummer_structure(const GolayCode&);
    std::vector<std::uint8_t> c_flag_;  // indexed by mask bits
    std::vector<std::uint8_t> o_flag_;
    std::vector<std::uint8_t> k_flag_;
};

/// Throws std::runtime_error when the code has no weight-16 word.
KummerStructure build_kummer_structure(const GolayCode& code);

enum class Parity { even, odd };
/// |s ∩ kappa| mod 2; throws std::invalid_argument for s outside C_*.
Parity parity(SubsetMask s, const KummerStructure& ks);

struct PermGroup {
    std::vector<Perm16> elements;    ///< sorted; elements[0] is the identity
    std::vector<Perm16> generators;  ///< a small generating set
    std::size_t order() const { return elements.size(); }
};

/// Setwise stabilizer of K_* inside the stabilizer of O_* in Sym(16).
PermGroup stabilizer_gamma(const KummerStructure& ks);

/// Canonical representative (least mask) of the ≈-class s ^ O_*.
SubsetMask class_key(SubsetMask s, const KummerStructure& ks);
/// Canonical representative of the ≋-class s ^ (O_* ∪ K_*).
SubsetMask big_class_key(SubsetMask s, const KummerStructure& ks);

struct EqClasses {
    std::vector<SubsetMask> cl;  ///< ≈-class, sorted by (size, mask)
    std::vector<SubsetMask> Cl;  ///< ≋-class, sorted by (size, mask)
    std::vector<SubsetMask> cl_n(int n) const;
    std::vector<SubsetMask> Cl_n(int n) const;
};
EqClasses eq_classes(SubsetMask s, const KummerStructure& ks);

/// Column of the orbit table a set of C_* belongs to.
enum class SetKind { even, odd, kummer, kummer8 };
SetKind set_kind(SubsetMask s, const KummerStructure& ks);
std::string to_string(SetKind k);

struct OrbitCell {
    int n = 0;
    SetKind kind = SetKind::even;
    int orbits = 0;                ///< number of Γ-orbits on sets in the cell
    int classes = 0;               ///< number of ≈-classes meeting the cell
    std::vector<int> class_parts;  ///< |class_n|, split by "contains a member of K_4"
    std::string label() const;     ///< e.g. "18x4", "1x(6+24)"
};

std::vector<OrbitCell> gamma_orbits(const PermGroup& gamma, const KummerStructure& ks);

/// Γ-orbits on an arbitrary list of sets; returns orbit representatives
/// (least mask in each orbit), in increasing order.
std::vector<SubsetMask> orbit_representatives(const PermGroup& gamma, const std::vector<SubsetMask>& sets);

/// True if some member of K_4 is contained in s.
bool contains_kappa4(SubsetMask s, const KummerStructure& ks);

}  // namespace octic
