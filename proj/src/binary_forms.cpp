#include "octic/binary_forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace octic {

namespace {

i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

IMat mat2(i64 p, i64 q, i64 r, i64 s) {
    IMat m(2, 2);
    m(0, 0) = p;
    m(0, 1) = q;
    m(1, 0) = r;
    m(1, 1) = s;
    return m;
}

}  // namespace

IMat BinaryForm::gram() const { return mat2(a, b, b, c); }

std::string BinaryForm::str() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
}

bool is_reduced(const BinaryForm& f) {
    i64 b2 = std::abs(2 * f.b);
    if (!(b2 <= f.a && f.a <= f.c)) return false;
    if ((b2 == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

BinaryForm gauss_reduce(const BinaryForm& f0, IMat* transform) {
    if (f0.a <= 0 || f0.det() <= 0) throw std::invalid_argument("form is not positive definite");
    BinaryForm f = f0;
    IMat m = IMat::identity(2);
    // basis change rows: new e1, e2 in terms of old
    auto apply = [&](const IMat& t) {
        IMat g = t * f.gram() * t.transposed();
        f = {g(0, 0), g(0, 1), g(1, 1)};
        m = t * m;
    };
    for (int guard = 0; guard < 10000; ++guard) {
        // translate: e2 -> e2 + k e1 puts b into (-a/2, a/2]
        i64 k = floor_div(f.a - 2 * f.b, 2 * f.a);
        if (k != 0) apply(mat2(1, 0, k, 1));
        if (f.c < f.a) {
            apply(mat2(0, 1, -1, 0));
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) apply(mat2(0, 1, -1, 0));
    if (!is_reduced(f)) throw std::logic_error("reduction did not converge");
    if (transform) *transform = m;
    return f;
}

BinaryForm table_form(const BinaryForm& f) {
    BinaryForm r = gauss_reduce(f);
    r.b = std::abs(r.b);
    return r;
}

std::vector<BinaryForm> enumerate_even_forms(i64 det) {
    std::vector<BinaryForm> out;
    if (det <= 0) return out;
    // a <= c and a c - b² = det with |2b| <= a give 3a²/4 <= det
    for (i64 a = 2; 3 * a * a <= 4 * det; a += 2)
        for (i64 b = -a / 2; 2 * b <= a; ++b) {
            i64 num = det + b * b;
            if (num % a != 0) continue;
            i64 c = num / a;
            if (c % 2 != 0 || c < a) continue;
            BinaryForm f{a, b, c};
            if (is_reduced(f)) out.push_back(f);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IMat> automorphisms(const BinaryForm& f) {
    const i64 d = f.det();
    if (f.a <= 0 || d <= 0) throw std::invalid_argument("form is not positive definite");
    auto vectors_of_norm = [&](i64 n) {
        std::vector<std::pair<i64, i64>> v;
        // Q(x, y) <= n forces x² <= n c / d and y² <= n a / d
        i64 bx = static_cast<i64>(std::sqrt(static_cast<double>(n * f.c) / static_cast<double>(d))) + 1;
        i64 by = static_cast<i64>(std::sqrt(static_cast<double>(n * f.a) / static_cast<double>(d))) + 1;
        for (i64 x = -bx; x <= bx; ++x)
            for (i64 y = -by; y <= by; ++y)
                if (f.a * x * x + 2 * f.b * x * y + f.c * y * y == n) v.emplace_back(x, y);
        return v;
    };
    auto first = vectors_of_norm(f.a);
    auto second = vectors_of_norm(f.c);
    std::vector<IMat> out;
    for (auto [x1, y1] : first)
        for (auto [x2, y2] : second) {
            i64 prod = f.a * x1 * x2 + f.b * (x1 * y2 + y1 * x2) + f.c * y1 * y2;
            if (prod != f.b) continue;
            i64 det = x1 * y2 - x2 * y1;
            if (det != 1 && det != -1) continue;
            out.push_back(mat2(x1, y1, x2, y2));
        }
    std::sort(out.begin(), out.end(), [](const IMat& p, const IMat& q) { return p.data() < q.data(); });
    return out;
}

std::vector<IMat> rotations(const BinaryForm& f) {
    std::vector<IMat> r;
    for (auto& m : automorphisms(f))
        if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) == 1) r.push_back(m);
    return r;
}

FormMap discriminant_action(const BinaryForm& f, const DiscriminantForm& d, const IMat& m) {
    FormMap out;
    QMat mq = to_qmat(m);
    for (std::size_t k = 0; k < d.length(); ++k) out.push_back(d.from_dual(mul(d.lifts.row(k), mq), f.gram()));
    return out;
}

std::vector<std::vector<BinaryForm>> genera(i64 det) {
    std::vector<std::vector<BinaryForm>> out;
    std::vector<DiscriminantForm> reps;
    for (const auto& f : enumerate_even_forms(det)) {
        DiscriminantForm df = discriminant_form(f.gram());
        bool placed = false;
        for (std::size_t i = 0; i < reps.size() && !placed; ++i)
            if (is_isomorphic(reps[i], df)) {
                out[i].push_back(f);
                placed = true;
            }
        if (!placed) {
            reps.push_back(df);
            out.push_back({f});
        }
    }
    return out;
}

std::vector<BinaryForm> forms_with_discriminant(const DiscriminantForm& d) {
    std::vector<BinaryForm> out;
    const auto det = static_cast<i64>(d.size());
    if (d.length() > 2) return out;
    for (const auto& f : enumerate_even_forms(det)) {
        if (f.b < 0) continue;
        if (is_isomorphic(discriminant_form(f.gram()), d)) out.push_back(f);
    }
    return out;
}

}  // namespace octic
