#include "octic/matrix.hpp"

#include <sstream>

namespace octic {

i64 to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<i64>(z.get_si());
}

i64 to_i64(const mpq_class& q) {
    if (q.get_den() != 1) throw std::domain_error("expected an integer, got " + q.get_str());
    return to_i64(q.get_num());
}

IMat to_imat(const ZMat& m) {
    IMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_i64(m(i, j));
    return r;
}

IMat to_imat(const QMat& m) {
    IMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = to_i64(m(i, j));
    return r;
}

ZMat to_zmat(const IMat& m) {
    ZMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<long>(m(i, j));
    return r;
}

QMat to_qmat(const IMat& m) {
    QMat r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<long>(m(i, j));
    return r;
}

QVec mul(const QVec& v, const QMat& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("mul: shape mismatch");
    QVec r(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

IVec mul(const IVec& v, const IMat& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("mul: shape mismatch");
    IVec r(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

i64 dot(const IVec& a, const IVec& b) {
    i64 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

i64 bilinear(const IVec& v, const IMat& g, const IVec& w) {
    i64 s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        i64 t = 0;
        for (std::size_t j = 0; j < w.size(); ++j) t += g(i, j) * w[j];
        s += v[i] * t;
    }
    return s;
}

mpq_class bilinear(const QVec& v, const IMat& g, const QVec& w) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        mpq_class t = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (g(i, j) != 0) t += mpq_class(static_cast<long>(g(i, j))) * w[j];
        s += v[i] * t;
    }
    return s;
}

std::string to_string(const IMat& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace octic
