#include "octic/graphs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace octic {

namespace {

using u64 = std::uint64_t;

u64 mix(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Search {
public:
    explicit Search(const ColoredGraph& g) : g_(g), n_(g.size()) {
        adj_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (i != j && g.edge(i, j) != 0) adj_[i].push_back({static_cast<int>(j), g.edge(i, j)});
    }

    Canonical run() {
        std::vector<int> distinct = g_.color;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> col(n_);
        for (std::size_t v = 0; v < n_; ++v)
            col[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), g_.color[v]) - distinct.begin());
        std::vector<u64> trace;
        std::vector<int> seq;
        Canonical c;
        if (n_ == 0) {
            c.certificate = "n0;";
            return c;
        }
        visit(col, static_cast<int>(distinct.size()), seq, trace);
        c.certificate = "n" + std::to_string(n_) + ";" + best_cert_;
        c.labeling.assign(n_, 0);
        for (std::size_t pos = 0; pos < n_; ++pos) c.labeling[static_cast<std::size_t>(best_inv_[pos])] = static_cast<int>(pos);
        c.generators = gens_;
        c.order = 1;
        for (auto o : first_orbit_) c.order *= o;
        c.nodes = nodes_;
        return c;
    }

private:
    struct Arc {
        int to;
        i64 value;
    };
    const ColoredGraph& g_;
    std::size_t n_;
    std::vector<std::vector<Arc>> adj_;
    bool have_first_ = false;
    std::vector<u64> first_trace_, best_trace_;
    std::string first_cert_, best_cert_;
    std::vector<int> first_inv_, best_inv_;
    std::vector<int> first_seq_, best_seq_;
    std::vector<Perm> gens_;
    std::vector<unsigned __int128> first_orbit_;
    std::size_t nodes_ = 0;

    u64 refine(std::vector<int>& col, int& ncol) const {
        u64 trace = 0x243f6a8885a308d3ULL;
        std::vector<u64> h(n_);
        std::vector<int> order(n_);
        while (true) {
            for (std::size_t v = 0; v < n_; ++v) {
                u64 s = 0;
                for (const auto& a : adj_[v])
                    s += mix(static_cast<u64>(col[static_cast<std::size_t>(a.to)]) * 64 + static_cast<u64>(a.value + 32));
                h[v] = s;
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
                if (col[ua] != col[ub]) return col[ua] < col[ub];
                return h[ua] < h[ub];
            });
            std::vector<int> next(n_);
            int c = -1;
            u64 round = 0;
            std::size_t run = 0;
            for (std::size_t k = 0; k < n_; ++k) {
                auto v = static_cast<std::size_t>(order[k]);
                bool fresh = k == 0 || col[v] != col[static_cast<std::size_t>(order[k - 1])] ||
                             h[v] != h[static_cast<std::size_t>(order[k - 1])];
                if (fresh) {
                    if (k > 0) round = mix(round ^ mix(run));
                    ++c;
                    run = 0;
                    round = mix(round ^ mix(static_cast<u64>(col[v]) ^ (h[v] << 1)));
                }
                ++run;
                next[v] = c;
            }
            round = mix(round ^ mix(run));
            trace = mix(trace ^ round);
            int nc = c + 1;
            col.swap(next);
            if (nc == ncol) break;
            ncol = nc;
        }
        return trace;
    }

    std::string certificate(const std::vector<int>& inv) const {
        std::string s;
        s.reserve(n_ * 2 + n_ * (n_ - 1));
        for (std::size_t i = 0; i < n_; ++i) {
            int c = g_.color[static_cast<std::size_t>(inv[i])];
            s.push_back(static_cast<char>((c >> 8) & 0xff));
            s.push_back(static_cast<char>(c & 0xff));
        }
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                i64 e = g_.edge(static_cast<std::size_t>(inv[i]), static_cast<std::size_t>(inv[j]));
                auto x = static_cast<std::uint16_t>(static_cast<std::int16_t>(e));
                s.push_back(static_cast<char>(x >> 8));
                s.push_back(static_cast<char>(x & 0xff));
            }
        return s;
    }

    static int compare_prefix(const std::vector<u64>& t, const std::vector<u64>& ref) {
        std::size_t m = std::min(t.size(), ref.size());
        for (std::size_t i = 0; i < m; ++i)
            if (t[i] != ref[i]) return t[i] < ref[i] ? -1 : 1;
        return t.size() > ref.size() ? 1 : 0;
    }

    static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return k;
    }

    void record_automorphism(const std::vector<int>& ref_inv, const std::vector<int>& inv) {
        Perm p(n_);
        for (std::size_t i = 0; i < n_; ++i) p[static_cast<std::size_t>(ref_inv[i])] = inv[i];
        if (!perm_is_identity(p)) gens_.push_back(std::move(p));
    }

    // Returns the depth of the ancestor that should resume.
    int visit(std::vector<int> col, int ncol, std::vector<int>& seq, std::vector<u64>& trace) {
        ++nodes_;
        const int d = static_cast<int>(seq.size());
        trace.push_back(refine(col, ncol));
        struct Pop {
            std::vector<u64>& t;
            ~Pop() { t.pop_back(); }
        } pop{trace};
        bool on_first_trace = have_first_ && compare_prefix(trace, first_trace_) == 0;
        if (have_first_ && !on_first_trace && compare_prefix(trace, best_trace_) < 0) return d - 1;

        if (ncol == static_cast<int>(n_)) {
            std::vector<int> inv(n_);
            for (std::size_t v = 0; v < n_; ++v) inv[static_cast<std::size_t>(col[v])] = static_cast<int>(v);
            std::string cert = certificate(inv);
            if (!have_first_) {
                have_first_ = true;
                first_trace_ = best_trace_ = trace;
                first_cert_ = best_cert_ = cert;
                first_inv_ = best_inv_ = inv;
                first_seq_ = best_seq_ = seq;
                return d - 1;
            }
            if (trace == first_trace_ && cert == first_cert_) {
                record_automorphism(first_inv_, inv);
                return static_cast<int>(common_prefix(seq, first_seq_));
            }
            if (trace == best_trace_ && cert == best_cert_) {
                record_automorphism(best_inv_, inv);
                return static_cast<int>(common_prefix(seq, best_seq_));
            }
            int c = compare_prefix(trace, best_trace_);
            if (c > 0 || (c == 0 && trace.size() == best_trace_.size() && cert > best_cert_)) {
                best_trace_ = trace;
                best_cert_ = cert;
                best_inv_ = inv;
                best_seq_ = seq;
            }
            return d - 1;
        }

        // target cell: the first non-singleton color class
        std::vector<int> size(static_cast<std::size_t>(ncol), 0);
        for (int c : col) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1) ++target;
        std::vector<int> cell;
        for (std::size_t v = 0; v < n_; ++v)
            if (col[v] == target) cell.push_back(static_cast<int>(v));

        std::vector<int> explored;
        std::vector<int> ids;
        std::size_t ids_for = static_cast<std::size_t>(-1);
        auto stabilizer_gens = [&]() {
            std::vector<Perm> s;
            for (const auto& gp : gens_) {
                bool fixes = std::all_of(seq.begin(), seq.end(),
                                         [&](int x) { return gp[static_cast<std::size_t>(x)] == x; });
                if (fixes) s.push_back(gp);
            }
            return s;
        };
        for (int w : cell) {
            if (!explored.empty()) {
                if (ids_for != gens_.size()) {
                    ids = orbit_ids(n_, stabilizer_gens());
                    ids_for = gens_.size();
                }
                bool seen = std::any_of(explored.begin(), explored.end(), [&](int x) {
                    return ids[static_cast<std::size_t>(x)] == ids[static_cast<std::size_t>(w)];
                });
                if (seen) continue;
            }
            explored.push_back(w);
            std::vector<int> child(col);
            for (std::size_t u = 0; u < n_; ++u) {
                if (child[u] > target) ++child[u];
                else if (child[u] == target && static_cast<int>(u) != w) child[u] = target + 1;
            }
            seq.push_back(w);
            int r = visit(std::move(child), ncol + 1, seq, trace);
            seq.pop_back();
            if (r < d) return r;
        }
        bool on_first_path = have_first_ && static_cast<std::size_t>(d) < first_seq_.size() &&
                             common_prefix(seq, first_seq_) == static_cast<std::size_t>(d);
        if (on_first_path) {
            auto o = orbit_ids(n_, stabilizer_gens());
            int root = o[static_cast<std::size_t>(first_seq_[static_cast<std::size_t>(d)])];
            unsigned __int128 len = static_cast<unsigned __int128>(std::count(o.begin(), o.end(), root));
            if (first_orbit_.size() <= static_cast<std::size_t>(d)) first_orbit_.resize(static_cast<std::size_t>(d) + 1, 1);
            first_orbit_[static_cast<std::size_t>(d)] = len;
        }
        return d - 1;
    }
};

}  // namespace

ColoredGraph to_colored(const FanoGraph& g, bool mark_delta) {
    ColoredGraph c;
    c.color.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        c.color[i] = g.vertices[i].degree * 2 + ((mark_delta && g.vertices[i].kummer_index >= 0) ? 1 : 0);
    c.edge = g.adjacency;
    return c;
}

ColoredGraph relabeled(const ColoredGraph& g, const Perm& p) {
    ColoredGraph r;
    const std::size_t n = g.size();
    r.color.resize(n);
    r.edge = IMat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto pi = static_cast<std::size_t>(p[i]);
        r.color[pi] = g.color[i];
        for (std::size_t j = 0; j < n; ++j) r.edge(pi, static_cast<std::size_t>(p[j])) = g.edge(i, j);
    }
    return r;
}

Canonical canonical_form(const ColoredGraph& g) { return Search(g).run(); }

Canonical canonical_form(const FanoGraph& g, bool mark_delta) { return canonical_form(to_colored(g, mark_delta)); }

bool is_automorphism(const ColoredGraph& g, const Perm& p) {
    const std::size_t n = g.size();
    if (p.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        auto pi = static_cast<std::size_t>(p[i]);
        if (g.color[pi] != g.color[i]) return false;
        for (std::size_t j = 0; j < n; ++j)
            if (g.edge(pi, static_cast<std::size_t>(p[j])) != g.edge(i, j)) return false;
    }
    return true;
}

std::optional<Perm> isomorphism(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.size() != b.size()) return std::nullopt;
    Canonical ca = canonical_form(a), cb = canonical_form(b);
    if (ca.certificate != cb.certificate) return std::nullopt;
    std::vector<int> inv_b(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) inv_b[static_cast<std::size_t>(cb.labeling[v])] = static_cast<int>(v);
    Perm iso(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) iso[v] = inv_b[static_cast<std::size_t>(ca.labeling[v])];
    return iso;
}

std::size_t set_orbit_length(const std::vector<int>& set, const std::vector<Perm>& gens, std::size_t limit) {
    std::vector<int> start = set;
    std::sort(start.begin(), start.end());
    std::set<std::vector<int>> seen{start};
    std::vector<std::vector<int>> queue{start};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        for (const auto& g : gens) {
            std::vector<int> img;
            img.reserve(queue[k].size());
            for (int x : queue[k]) img.push_back(g[static_cast<std::size_t>(x)]);
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) {
                if (seen.size() > limit) throw std::length_error("set orbit exceeds the limit");
                queue.push_back(std::move(img));
            }
        }
    }
    return seen.size();
}

std::size_t delta_index(const FanoGraph& g, const Canonical& aut) { return set_orbit_length(g.kummer, aut.generators); }

EvenLattice fano_lattice(const FanoGraph& g) {
    const std::size_t n = g.vertices.size();
    ZMat a(n + 1, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>(i == j ? -2 : g.adjacency(i, j));
        a(i, n) = a(n, i) = g.vertices[i].degree;
    }
    a(n, n) = 8;
    auto [h, u] = hnf_rows_with_transform(a);
    const std::size_t r = h.rows();
    ZMat x(r, n + 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j <= n; ++j) x(i, j) = u(i, j);
    EvenLattice lat;
    lat.gram = to_imat(x * a * x.transposed());
    // coordinates of generator k: c with c * H = row k of A
    QMat hq = convert<mpq_class>(h);
    auto coords_of = [&](std::size_t k) {
        QVec row(n + 1);
        for (std::size_t j = 0; j <= n; ++j) row[j] = mpq_class(a(k, j));
        QVec c = coordinates_in(hq, row);
        IVec out(r);
        for (std::size_t i = 0; i < r; ++i) out[i] = to_i64(c[i]);
        return out;
    };
    lat.h = coords_of(n);
    for (int k : g.kummer) lat.delta.push_back(coords_of(static_cast<std::size_t>(k)));
    return lat;
}

i64 fano_index(const EvenLattice& host, const FanoGraph& g) {
    ZMat rows(0, 0);
    for (const auto& v : g.vertices) {
        ZVec z(v.coords.size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<long>(v.coords[i]);
        rows.append_row(z);
    }
    if (host.h) {
        ZVec z(host.h->size());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = static_cast<long>((*host.h)[i]);
        rows.append_row(z);
    }
    ZMat h = hnf_rows(rows);
    if (h.rows() != host.rank()) return 0;
    mpz_class d = determinant(h);
    return to_i64(mpz_class(abs(d)));
}

GraphAction::GraphAction(const EvenLattice& host, const FanoGraph& g) : host_(host) {
    for (const auto& v : g.vertices) vectors_.push_back(v.coords);
    if (!host.h) throw std::invalid_argument("host lattice has no polarization");
    vectors_.push_back(*host.h);
    const std::size_t r = host.rank();
    // greedy independent subset
    QMat ech(0, 0);
    std::vector<std::size_t> pivot_col;
    for (std::size_t k = 0; k < vectors_.size() && pivots_.size() < r; ++k) {
        QVec v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = mpq_class(static_cast<long>(vectors_[k][i]));
        for (std::size_t e = 0; e < ech.rows(); ++e) {
            std::size_t pc = pivot_col[e];
            if (v[pc] == 0) continue;
            mpq_class f = v[pc] / ech(e, pc);
            for (std::size_t i = 0; i < r; ++i) v[i] -= f * ech(e, i);
        }
        std::size_t pc = 0;
        while (pc < r && v[pc] == 0) ++pc;
        if (pc == r) continue;
        ech.append_row(v);
        pivot_col.push_back(pc);
        pivots_.push_back(k);
    }
    spans_ = pivots_.size() == r;
    if (spans_) {
        QMat b(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) b(i, j) = mpq_class(static_cast<long>(vectors_[pivots_[i]][j]));
        basis_inv_ = inverse(b);
    }
    discr_ = discriminant_form(host.gram);
}

QMat GraphAction::matrix(const Perm& p) const {
    if (!spans_) throw std::logic_error("graph vertices do not span the host lattice");
    const std::size_t r = host_.rank();
    const std::size_t hv = vectors_.size() - 1;
    QMat img(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t k = pivots_[i];
        std::size_t t = (k == hv) ? hv : static_cast<std::size_t>(p[k]);
        for (std::size_t j = 0; j < r; ++j) img(i, j) = mpq_class(static_cast<long>(vectors_[t][j]));
    }
    return basis_inv_ * img;
}

bool GraphAction::preserves_host(const Perm& p) const { return is_integral(matrix(p)); }

FormMap GraphAction::discriminant_action(const Perm& p) const {
    QMat m = matrix(p);
    FormMap f;
    for (std::size_t k = 0; k < discr_.length(); ++k) f.push_back(discr_.from_dual(mul(discr_.lifts.row(k), m), host_.gram));
    return f;
}

namespace {

std::string lattice_key(const QMat& rows) {
    QMat h = hnf_rows(rows);
    std::string s;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        for (std::size_t j = 0; j < h.cols(); ++j) {
            s += h(i, j).get_str();
            s.push_back(',');
        }
        s.push_back(';');
    }
    return s;
}

}  // namespace

PolarizedGroup polarized_group(const EvenLattice& host, const FanoGraph& g, const Canonical& aut) {
    GraphAction act(host, g);
    const std::size_t n = g.vertices.size();
    PolarizedGroup out;
    std::vector<QMat> gen_mats;
    for (const auto& s : aut.generators) gen_mats.push_back(act.matrix(s));
    std::vector<QMat> orbit{QMat::identity(host.rank())};
    std::vector<Perm> transversal{perm_identity(n)};
    std::unordered_map<std::string, std::size_t> where{{lattice_key(orbit[0]), 0}};
    SchreierSims stab(n);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (std::size_t s = 0; s < aut.generators.size(); ++s) {
            QMat img = orbit[i] * gen_mats[s];
            std::string key = lattice_key(img);
            auto it = where.find(key);
            Perm t = perm_then(transversal[i], aut.generators[s]);
            if (it == where.end()) {
                where.emplace(key, orbit.size());
                orbit.push_back(hnf_rows(img));
                transversal.push_back(std::move(t));
            } else {
                stab.add(perm_then(t, perm_inverse(transversal[it->second])));
            }
        }
    }
    out.lattice_orbit = orbit.size();
    out.generators = stab.generators();
    out.order = stab.order64();
    unsigned __int128 expect = aut.order / orbit.size();
    if (expect * orbit.size() != aut.order || expect != stab.order())
        throw std::logic_error("orbit-stabilizer mismatch while computing O_h(N)");
    for (const auto& p : out.generators)
        if (!act.preserves_host(p)) throw std::logic_error("stabilizer element does not preserve the lattice");
    return out;
}

std::uint64_t discriminant_image_order(const GraphAction& action, const std::vector<Perm>& gens) {
    const DiscriminantForm& d = action.discriminant();
    if (d.trivial()) return 1;
    const std::size_t m = d.size();
    SchreierSims img(m);
    for (const auto& p : gens) {
        FormMap f = action.discriminant_action(p);
        Perm q(m);
        for (std::size_t i = 0; i < m; ++i) q[i] = static_cast<int>(d.index(apply_map(d, d, f, d.element(i))));
        img.add(q);
    }
    return img.order64();
}

std::uint64_t discr_kernel_order(const EvenLattice& host, const FanoGraph& g, const PolarizedGroup& oh) {
    GraphAction act(host, g);
    std::uint64_t im = discriminant_image_order(act, oh.generators);
    if (oh.order % im != 0) throw std::logic_error("image order does not divide the group order");
    return oh.order / im;
}

bool extends_to_overlattice(const DiscriminantForm& d, const FormMap& g, const Subgroup& k) {
    for (const auto& x : k.generators) {
        std::size_t idx = d.index(apply_map(d, d, g, x));
        if (!std::binary_search(k.elements.begin(), k.elements.end(), idx)) return false;
    }
    return true;
}

bool glue_extends_to_L(const DiscriminantForm& dn, const DiscriminantForm& dt, const FormMap& g_n, const FormMap& g_t,
                       const FormMap& phi) {
    const std::size_t m = dn.length();
    if (phi.size() != m || g_n.size() != m || g_t.size() != dt.length())
        throw std::invalid_argument("maps have the wrong number of generators");
    for (std::size_t i = 0; i < m; ++i) {
        IVec gi = dn.zero();
        gi[i] = 1;
        mpq_class qn = dn.q_value(gi), qt = dt.q_value(phi[i]);
        mpq_class s = qn + qt;
        if (s != 0 && s != 2) throw std::invalid_argument("glue map is not an anti-isometry");
        for (std::size_t j = 0; j < m; ++j) {
            IVec gj = dn.zero();
            gj[j] = 1;
            mpq_class bs = dn.b_value(gi, gj) + dt.b_value(phi[i], phi[j]);
            if (bs != 0 && bs != 1) throw std::invalid_argument("glue map is not an anti-isometry");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        IVec lhs = apply_map(dn, dt, phi, g_n[i]);
        IVec rhs = apply_map(dt, dt, g_t, phi[i]);
        if (dt.reduce(lhs) != dt.reduce(rhs)) return false;
    }
    return true;
}

std::string to_dot(const FanoGraph& g) {
    std::ostringstream os;
    os << "graph fano {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        os << "  v" << i << " [label=\"" << (v.degree == 1 ? "l" : "c") << i << "\"";
        os << (v.degree == 1 ? ", shape=box" : ", shape=ellipse");
        if (v.kummer_index >= 0) os << ", style=filled";
        os << "];\n";
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            i64 e = g.adjacency(i, j);
            if (e == 0) continue;
            os << "  v" << i << " -- v" << j;
            if (e != 1) os << " [label=\"" << e << "\", penwidth=2]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace octic
