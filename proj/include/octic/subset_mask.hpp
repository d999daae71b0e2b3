#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace octic {

/// Subset of the 16-element index set {0,...,15}.
struct SubsetMask {
    std::uint16_t bits = 0;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(std::uint16_t b) : bits(b) {}

    static constexpr SubsetMask full() { return SubsetMask(0xFFFF); }
    static constexpr SubsetMask singleton(int i) { return SubsetMask(static_cast<std::uint16_t>(1u << i)); }
    static SubsetMask from_indices(const std::vector<int>& idx);
    /// Parses a 16-character 0/1 string; character k is index k.
    static SubsetMask from_string(const std::string& s);

    constexpr int size() const { return std::popcount(static_cast<unsigned>(bits)); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr bool subset_of(SubsetMask o) const { return (bits & ~o.bits) == 0; }

    constexpr SubsetMask operator^(SubsetMask o) const { return SubsetMask(bits ^ o.bits); }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits & o.bits); }
    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits | o.bits); }
    constexpr SubsetMask operator~() const { return SubsetMask(static_cast<std::uint16_t>(~bits)); }
    constexpr SubsetMask minus(SubsetMask o) const { return SubsetMask(bits & ~o.bits); }

    constexpr bool operator==(const SubsetMask&) const = default;
    constexpr auto operator<=>(const SubsetMask&) const = default;

    std::vector<int> indices() const;
    /// 16 characters, character k = membership of index k.
    std::string to_string() const;
};

/// Lexicographic order on sorted index lists (the order used to pick
/// distinguished sets deterministically).
bool lex_less(SubsetMask a, SubsetMask b);

}  // namespace octic
