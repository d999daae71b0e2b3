#include "octic/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace octic {

namespace {

const char* const kSkipped = "skipped";

// Reference row builder. `forms` and `rc` use ';' between the entries of
// multi-T rows.
TableRow ref(const char* table, const char* clusters, std::size_t lines, std::size_t reducible,
             std::size_t irreducible, const char* group, std::size_t i_delta, const char* g_omega, i64 det,
             i64 fano_index, const char* forms, const char* rc) {
    TableRow r;
    r.table = table;
    r.clusters = clusters;
    r.lines = lines;
    r.reducible = reducible;
    r.irreducible = irreducible;
    r.group = group;
    r.i_delta = i_delta;
    r.g_omega_id = g_omega;
    r.kernel_order = std::stoull(std::string(g_omega).substr(1));
    r.det = det;
    r.fano_index = fano_index;
    r.rc = rc;
    std::stringstream ss(forms);
    for (std::string f; std::getline(ss, f, ';');)
        if (!f.empty()) r.t_forms.push_back(f);
    if (!r.t_forms.empty()) {
        // [a,b,c] has Gram [[a,b],[b,c]].
        i64 a = 0, b = 0, c = 0;
        if (std::sscanf(r.t_forms.front().c_str(), "[%ld,%ld,%ld]", &a, &b, &c) != 3)
            throw std::logic_error("bad form literal " + r.t_forms.front());
        r.det = a * c - b * b;
    }
    return r;
}

TableRow ref1(const char* clusters, const char* patterns, const char* d2, int d5, std::size_t lines,
              std::size_t reducible, std::size_t irreducible, const char* group, std::size_t i_delta,
              const char* g_omega, i64 det, i64 fano_index) {
    TableRow r = ref("1", clusters, lines, reducible, irreducible, group, i_delta, g_omega, det, fano_index, "",
                     "(1,0)=(1,0)");
    r.patterns = patterns;
    r.delta2 = d2;
    r.delta5 = d5;
    return r;
}

std::vector<TableRow> table1() {
    return {
        ref1("open", "", "", 0, 0, 0, 32, "18432·864", 2, "(16,14)^1", 640, 4),
        ref1("Θ1", "l4-0", "5/8", 0, 4, 0, 32, "1152", 2, "(16,14)^1", 400, 1),
        ref1("Θ2", "c4-0,l12-0,l6-0", "5/8", 1, 20, 16, 20, "576", 1, "(16,14)^1", 144, 1),
        ref1("Θ3", "c12-0,c4-0", "2/4", 3, 0, 0, 40, "1024·16", 2, "(16,14)^1", 576, 2),
        ref1("Θ4", "c10-0,c6-0", "2/2", 4, 0, 0, 64, "3072", 4, "(16,14)^1", 384, 1),
        ref1("Θ5", "c8-0", "2/4", 0, 0, 0, 80, "2048", 2, "(16,14)^2", 320, 1),
    };
}

std::vector<TableRow> table2() {
    const char* eq = "(1,0)=(1,0)";
    return {
        ref("2", "Θ1,Θ1", 8, 0, 32, "384", 2, "(16,14)^1", 240, 1, "", eq),
        ref("2", "Θ1,Θ1,Θ5", 8, 8, 72, "256", 2, "(16,14)^2", 160, 1, "", eq),
        ref("2", "Θ1,Θ2,Θ4", 24, 32, 36, "192", 2, "(16,14)^1", 80, 1, "", eq),
        ref("2", "Θ1,Θ3", 4, 0, 40, "64", 1, "(16,14)^1", 320, 1, "", eq),
        ref("2", "Θ1,Θ3", 4, 0, 40, "64", 1, "(16,14)^1", 320, 1, "", eq),
        ref("2", "Θ1,Θ4", 4, 0, 64, "384", 4, "(16,14)^1", 240, 1, "", eq),
        ref("2", "Θ2,Θ3", 20, 16, 28, "64", 1, "(16,14)^1", 128, 1, "", eq),
        ref("2", "Θ3,Θ3", 0, 0, 48, "256", 2, "(16,14)^1", 416, 1, "", eq),
        ref("2", "Θ3,Θ3", 0, 0, 48, "512·16", 2, "(16,14)^1", 512, 2, "", eq),
        ref("2", "Θ3,Θ3", 0, 0, 48, "512", 2, "(16,14)^1", 512, 1, "", eq),
        ref("2", "Θ3,Θ3,Θ4", 0, 0, 80, "512", 4, "(16,14)^1", 288, 1, "", eq),
        ref("2", "Θ3,Θ4", 0, 0, 72, "512", 4, "(16,14)^1", 320, 1, "", eq),
        ref("2", "Θ3,Θ5", 0, 0, 88, "256", 2, "(16,14)^2", 288, 1, "", eq),
        ref("2", "Θ4,Θ4", 0, 0, 96, "2304", 6, "(48,50)^1", 224, 1, "", eq),
        ref("2", "Θ4,Θ5", 0, 0, 112, "1024", 4, "(16,14)^2", 192, 1, "", eq),
        ref("2", "Θ5,Θ5", 0, 0, 128, "1024", 2, "(32,27)^2", 160, 1, "", eq),
    };
}

std::vector<TableRow> table3() {
    return {
        ref("3", "Θ5,Θ5,Θ5", 0, 0, 176, "15360", 10, "(960,11357)^2", 0, 1, "[8,4,12]", "(1,0)=(1,0)"),
        ref("3", "Θ4,Θ5,Θ5", 0, 0, 160, "3072", 12, "(192,1493)^2", 0, 1, "[4,0,24]", "(1,0)=(1,0)"),
        ref("3", "Θ3,Θ5,Θ5", 0, 0, 136, "512", 2, "(32,27)^2", 0, 1, "[4,0,36]", "(1,0)=(1,0)"),
        ref("3", "Θ1,Θ1,Θ1,Θ1,Θ5,Θ5", 16, 32, 96, "256", 2, "(32,27)^2", 0, 1, "[4,2,16]", "(1,0)=(1,0)"),
        ref("3", "Θ3,Θ3,Θ3,Θ4,Θ4", 0, 0, 120, "384", 6, "(48,50)^1", 0, 1, "[8,4,20]", "(1,0)≠(0,1)"),
        ref("3", "Θ3,Θ4,Θ5", 0, 0, 120, "256", 4, "(16,14)^2", 0, 1, "[8,0,20]", "(1,0)≠(2,0)"),
        ref("3", "Θ1,Θ1,Θ4,Θ5", 8, 8, 104, "256", 4, "(16,14)^2", 0, 1, "[4,0,24]", "(1,0)≠(0,1)"),
        ref("3", "Θ1,Θ1,Θ2,Θ4,Θ4", 28, 48, 52, "288", 3, "(48,50)^1", 0, 1, "[4,2,12]", "(1,0)=(1,0)"),
        ref("3", "Θ1,Θ4,Θ4", 4, 0, 96, "576", 6, "(48,50)^1", 0, 1, "[4,2,36]", "(1,0)≠(2,0)"),
        ref("3", "Θ3,Θ3,Θ5", 0, 0, 96, "256", 2, "(16,14)^2", 0, 1, "[8,4,28]", "(1,0)=(1,0)"),
        ref("3", "Θ3,Θ3,Θ5", 0, 0, 96, "256", 2, "(16,14)^2", 0, 1, "[8,0,32]", "(1,0)=(1,0)"),
        ref("3", "Θ3,Θ3,Θ5", 0, 0, 96, "256", 2, "(16,14)^2", 0, 1, "[8,0,32]", "(1,0)=(1,0)"),
        ref("3", "Θ3,Θ3,Θ3,Θ3,Θ4", 0, 0, 96, "256", 4, "(32,27)^1", 0, 1, "[8,0,24]", "(1,0)≠(0,1)"),
        ref("3", "Θ3,Θ3,Θ3,Θ4", 0, 0, 88, "128", 4, "(16,14)^1", 0, 1, "[8,4,32]", "(1,0)≠(0,2)"),
        ref("3", "Θ1,Θ1,Θ3,Θ5", 8, 8, 80, "32", 2, "(16,14)^2", 0, 1, "[4,2,32];[8,2,16]",
            "(0,1)=(0,1);(0,2)=(0,2)"),
        ref("3", "Θ1,Θ2,Θ3,Θ3,Θ4", 24, 32, 52, "64", 2, "(16,14)^1", 0, 1, "[8,2,8]", "(1,0)≠(2,0)"),

        ref("3.2", "Θ1,Θ3,Θ3,Θ4", 4, 0, 80, "64", 4, "(16,14)^1", 0, 1, "[8,2,20]", "(0,1)≠(0,4)"),
        ref("3.2", "Θ3,Θ3,Θ4", 0, 0, 80, "256", 4, "(32,27)^1", 0, 1, "[12,4,20]", "(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ1,Θ1,Θ1,Θ5", 16, 16, 64, "512", 2, "(32,27)^2", 0, 1, "[8,4,12]", "(1,0)=(1,0)"),
        ref("3.2", "Θ1,Θ2,Θ3,Θ4", 24, 32, 44, "64", 2, "(16,14)^1", 0, 1, "[4,0,16]", "(1,0)≠(0,1)"),
        ref("3.2", "Θ1,Θ3,Θ4", 4, 0, 72, "64", 2, "(16,14)^1", 0, 1, "[4,0,44];[12,4,16]",
            "(1,0)≠(0,1);(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ3,Θ4", 4, 0, 72, "64", 2, "(16,14)^1", 0, 1, "[4,0,44];[12,4,16]",
            "(1,0)≠(0,1);(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ1,Θ4", 8, 0, 64, "256", 4, "(32,27)^1", 0, 1, "[12,0,12]", "(0,1)≠(0,2)"),
        ref("3.2", "Θ3,Θ3,Θ3,Θ3", 0, 0, 64, "256", 2, "(32,27)^1", 0, 1, "[8,0,32]", "(1,0)≠(2,0)"),
        ref("3.2", "Θ3,Θ3,Θ3", 0, 0, 56, "384", 2, "(48,50)^1", 0, 1, "[4,0,68];[8,4,36]",
            "(1,0)≠(2,0);(1,0)≠(0,1)"),
        ref("3.2", "Θ3,Θ3,Θ3", 0, 0, 56, "64", 2, "(16,14)^1", 0, 1, "[8,4,48];[16,4,24]",
            "(1,0)≠(0,1);(0,1)≠(0,2)"),
        ref("3.2", "Θ2,Θ3,Θ3", 20, 16, 36, "64", 1, "(16,14)^1", 0, 1, "[8,4,16]", "(1,0)=(1,0)"),
        ref("3.2", "Θ2,Θ3,Θ3", 20, 16, 36, "64", 1, "(16,14)^1", 0, 1, "[8,4,16]", "(1,0)=(1,0)"),
        ref("3.2", "Θ2,Θ3,Θ3", 20, 16, 36, "32", 1, "(16,14)^1", 0, 1, "[4,2,24];[8,2,12]",
            "(1,0)=(1,0);(0,1)=(0,1)"),
        ref("3.2", "Θ1,Θ1,Θ3,Θ3", 8, 0, 48, "64", 2, "(16,14)^1", 0, 1, "[8,2,20]", "(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 2, "(16,14)^1", 0, 1, "[16,0,16]", "(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 2, "(16,14)^1", 0, 1, "[16,0,16]", "(0,1)≠(0,2)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 1, "(16,14)^1", 0, 1, "[8,4,32]", "(2,0)=(2,0)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 1, "(16,14)^1", 0, 1, "[8,4,32]", "(2,0)=(2,0)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 1, "(16,14)^1", 0, 1, "[8,4,32]", "(2,0)=(2,0)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "64", 1, "(16,14)^1", 0, 1, "[8,4,32]", "(2,0)=(2,0)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "32", 1, "(16,14)^1", 0, 1, "[4,2,56];[16,6,16]",
            "(2,0)=(2,0);(0,1)=(0,1)"),
        ref("3.2", "Θ1,Θ3,Θ3", 4, 0, 48, "32", 1, "(16,14)^1", 0, 1, "[4,2,56];[16,6,16]",
            "(2,0)=(2,0);(0,1)=(0,1)"),
        ref("3.2", "Θ1,Θ1,Θ3", 8, 0, 40, "64", 1, "(16,14)^1", 0, 1, "[4,0,44];[12,4,16]",
            "(1,0)=(1,0);(0,1)=(0,1)"),
        ref("3.2", "Θ1,Θ1,Θ3", 8, 0, 40, "64", 1, "(16,14)^1", 0, 1, "[4,0,44];[12,4,16]",
            "(1,0)=(1,0);(0,1)=(0,1)"),
        ref("3.2", "Θ1,Θ1,Θ1", 12, 0, 32, "576", 2, "(48,50)^1", 0, 1, "[4,2,36]", "(1,0)≠(2,0)"),
    };
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += sep;
        s += x;
    }
    return s;
}

int delta5_class(int d) {
    int r = ((d % 5) + 5) % 5;
    return std::min(r, 5 - r);
}

std::string group_string(const StratumRecord& r) {
    if (r.oh_index > 1) return std::to_string(r.oh_order) + "·" + std::to_string(r.oh_index);
    return u128_string(r.aut_order);
}

}  // namespace

std::string TableRow::conics() const {
    if (reducible == 0) return std::to_string(irreducible);
    return std::to_string(reducible) + "+" + std::to_string(irreducible);
}

std::string TableRow::key() const {
    std::string k = table + "|" + clusters + "|" + patterns + "|" + delta2 + "|" + std::to_string(delta5_class(delta5)) +
                    "|" + std::to_string(lines) + "|" + conics() + "|" + group + "|" + std::to_string(i_delta) + "|" +
                    std::to_string(kernel_order) + "|" + std::to_string(det) + "|" + std::to_string(fano_index) + "|" +
                    join(t_forms, ";");
    return k;
}

std::vector<TableRow> reference_rows(int codim) {
    switch (codim) {
        case 1: return table1();
        case 2: return table2();
        case 3: return table3();
        default: throw std::invalid_argument("no reference table for codimension " + std::to_string(codim));
    }
}

TableRow computed_row(const StratumRecord& rec) {
    TableRow r;
    std::size_t conics = rec.reducible_conics + rec.irreducible_conics;
    switch (rec.codim) {
        case 0:
        case 1: r.table = "1"; break;
        case 2: r.table = "2"; break;
        default: r.table = conics > 80 ? "3" : "3.2"; break;
    }
    r.clusters = rec.codim == 0 ? "open" : rec.cluster_label();
    if (rec.codim == 1) {
        std::vector<std::string> pats = rec.patterns;
        std::sort(pats.begin(), pats.end());
        r.patterns = join(pats, ",");
        if (!rec.clusters.empty()) {
            const ClusterSignature& sig = rec.clusters.front().signature;
            mpq_class num = sig.delta2_square * sig.delta2_order;
            r.delta2 = num.get_str() + "/" + std::to_string(sig.delta2_order);
            r.delta5 = delta5_class(sig.delta5);
        }
    }
    r.lines = rec.lines;
    r.reducible = rec.reducible_conics;
    r.irreducible = rec.irreducible_conics;
    r.group = group_string(rec);
    r.i_delta = rec.i_delta;
    r.kernel_order = rec.discr_kernel_order;
    r.det = rec.det;
    r.fano_index = rec.fano_index;
    for (const auto& t : rec.transcendental) r.t_forms.push_back(t.str());
    r.g_omega_id = kSkipped;
    r.rc = kSkipped;
    return r;
}

TableRow open_stratum_row(const CensusContext& ctx) {
    return computed_row(make_record(ctx, ctx.lambda, 0, {}, true));
}

TableDiff compare_rows(const std::vector<TableRow>& reference, const std::vector<TableRow>& computed) {
    TableDiff d;
    std::multimap<std::string, std::size_t> pool;
    for (std::size_t i = 0; i < computed.size(); ++i) pool.emplace(computed[i].key(), i);
    std::vector<bool> used(computed.size(), false);
    for (const auto& r : reference) {
        auto it = pool.find(r.key());
        if (it == pool.end()) {
            d.missing.push_back(r);
            continue;
        }
        used[it->second] = true;
        d.matched.emplace_back(r, computed[it->second]);
        pool.erase(it);
    }
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (!used[i]) d.extra.push_back(computed[i]);
    return d;
}

std::string csv_header() {
    return "table,clusters,patterns,delta2,delta5,lines,conics,group,i_delta,kernel_order,det,fano_index,T,g_omega_id,rc";
}

std::string to_csv(const TableRow& r) {
    std::vector<std::string> f{r.table,
                               r.clusters,
                               r.patterns,
                               r.delta2,
                               r.table == "1" && r.clusters != "open" ? std::to_string(r.delta5) : "",
                               std::to_string(r.lines),
                               r.conics(),
                               r.group,
                               std::to_string(r.i_delta),
                               std::to_string(r.kernel_order),
                               std::to_string(r.det),
                               std::to_string(r.fano_index),
                               join(r.t_forms, ";"),
                               r.g_omega_id,
                               r.rc};
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += csv_field(f[i]);
    }
    return s;
}

std::string to_csv(const std::vector<TableRow>& rows) {
    std::string s = csv_header() + "\n";
    for (const auto& r : rows) s += to_csv(r) + "\n";
    return s;
}

}  // namespace octic
