#include "octic/subset_mask.hpp"

#include <algorithm>
#include <stdexcept>

namespace octic {

SubsetMask SubsetMask::from_indices(const std::vector<int>& idx) {
    SubsetMask m;
    for (int i : idx) {
        if (i < 0 || i > 15) throw std::out_of_range("subset index out of range");
        m.bits |= static_cast<std::uint16_t>(1u << i);
    }
    return m;
}

SubsetMask SubsetMask::from_string(const std::string& s) {
    if (s.size() != 16) throw std::invalid_argument("subset string must have 16 characters");
    SubsetMask m;
    for (int i = 0; i < 16; ++i) {
        if (s[i] == '1') m.bits |= static_cast<std::uint16_t>(1u << i);
        else if (s[i] != '0') throw std::invalid_argument("subset string must be 0/1");
    }
    return m;
}

std::vector<int> SubsetMask::indices() const {
    std::vector<int> r;
    for (int i = 0; i < 16; ++i)
        if (contains(i)) r.push_back(i);
    return r;
}

std::string SubsetMask::to_string() const {
    std::string s(16, '0');
    for (int i = 0; i < 16; ++i)
        if (contains(i)) s[i] = '1';
    return s;
}

bool lex_less(SubsetMask a, SubsetMask b) {
    auto ia = a.indices(), ib = b.indices();
    return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

}  // namespace octic
