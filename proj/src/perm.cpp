#include "octic/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace octic {

Perm perm_identity(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_then(const Perm& a, const Perm& b) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
    return c;
}

Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return c;
}

bool perm_is_identity(const Perm& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

SchreierSims::SchreierSims(std::size_t degree) : n_(degree) {}

SchreierSims::SchreierSims(std::size_t degree, const std::vector<Perm>& generators) : n_(degree) {
    for (const auto& g : generators) add(g);
}

void SchreierSims::grow_orbit(Level& lv) const {
    if (lv.transversal.empty()) {
        lv.transversal.assign(n_, Perm{});
        lv.transversal[static_cast<std::size_t>(lv.base)] = perm_identity(n_);
        lv.orbit.assign(1, lv.base);
    }
    // existing transversal entries stay fixed, so checked Schreier pairs stay valid
    for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
        int p = lv.orbit[k];
        for (const auto& s : lv.gens) {
            int q = s[static_cast<std::size_t>(p)];
            if (!lv.transversal[static_cast<std::size_t>(q)].empty()) continue;
            lv.transversal[static_cast<std::size_t>(q)] = perm_then(lv.transversal[static_cast<std::size_t>(p)], s);
            lv.orbit.push_back(q);
        }
    }
}

std::size_t SchreierSims::sift(Perm& g, std::size_t from) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
        const Level& lv = levels_[k];
        int x = g[static_cast<std::size_t>(lv.base)];
        const Perm& t = lv.transversal[static_cast<std::size_t>(x)];
        if (t.empty()) return k;
        g = perm_then(g, perm_inverse(t));
    }
    return levels_.size();
}

void SchreierSims::insert(std::size_t level, const Perm& h) {
    if (level == levels_.size()) {
        Level lv;
        lv.base = -1;
        for (std::size_t i = 0; i < n_; ++i)
            if (h[i] != static_cast<int>(i)) {
                lv.base = static_cast<int>(i);
                break;
            }
        if (lv.base < 0) throw std::logic_error("identity inserted into a stabilizer chain");
        levels_.push_back(std::move(lv));
    }
    // h fixes the first `level` base points, so it lies in every upper stabilizer too
    for (std::size_t k = 0; k <= level; ++k) levels_[k].gens.push_back(h);
}

void SchreierSims::complete() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
        auto li = static_cast<std::size_t>(i);
        grow_orbit(levels_[li]);
        bool restarted = false;
        for (std::size_t pos = 0; pos < levels_[li].orbit.size() && !restarted; ++pos) {
            Level& lv = levels_[li];
            if (lv.checked.size() <= pos) lv.checked.resize(lv.orbit.size());
            lv.checked[pos].resize(lv.gens.size(), 0);
            for (std::size_t si = 0; si < lv.gens.size(); ++si) {
                if (levels_[li].checked[pos][si]) continue;
                const Level& cur = levels_[li];
                int p = cur.orbit[pos];
                const Perm& s = cur.gens[si];
                int q = s[static_cast<std::size_t>(p)];
                Perm h = perm_then(perm_then(cur.transversal[static_cast<std::size_t>(p)], s),
                                   perm_inverse(cur.transversal[static_cast<std::size_t>(q)]));
                std::size_t at = sift(h, li + 1);
                if (at == levels_.size() && perm_is_identity(h)) {
                    levels_[li].checked[pos][si] = 1;
                    continue;
                }
                insert(at, h);
                i = static_cast<std::ptrdiff_t>(at);
                restarted = true;
                break;
            }
        }
        if (!restarted) --i;
    }
}

void SchreierSims::add(const Perm& g) {
    if (g.size() != n_) throw std::invalid_argument("permutation has the wrong degree");
    Perm h = g;
    std::size_t at = sift(h, 0);
    if (at == levels_.size() && perm_is_identity(h)) return;
    gens_.push_back(g);
    insert(at, h);
    complete();
}

bool SchreierSims::contains(const Perm& g) const {
    if (g.size() != n_) return false;
    Perm h = g;
    std::size_t at = sift(h, 0);
    return at == levels_.size() && perm_is_identity(h);
}

unsigned __int128 SchreierSims::order() const {
    unsigned __int128 o = 1;
    for (const auto& lv : levels_) o *= lv.orbit.size();
    return o;
}

std::uint64_t SchreierSims::order64() const {
    unsigned __int128 o = order();
    if (o >> 64) throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(o);
}

std::vector<Perm> SchreierSims::elements(std::size_t limit) const {
    if (order() > limit) throw std::length_error("group too large to list");
    std::vector<Perm> out{perm_identity(n_)};
    // products t_{k} * ... * t_{0} over transversals, deepest level first
    for (std::size_t k = levels_.size(); k-- > 0;) {
        std::vector<Perm> next;
        next.reserve(out.size() * levels_[k].orbit.size());
        for (const auto& x : out)
            for (int p : levels_[k].orbit) next.push_back(perm_then(x, levels_[k].transversal[static_cast<std::size_t>(p)]));
        out.swap(next);
    }
    return out;
}

std::vector<int> orbit_ids(std::size_t n, const std::vector<Perm>& gens) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& g : gens)
        for (std::size_t i = 0; i < n; ++i) {
            int a = find(static_cast<int>(i)), b = find(g[i]);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    std::vector<int> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = find(static_cast<int>(i));
    return id;
}

}  // namespace octic
