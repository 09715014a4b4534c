#ifndef COEP_MATRIX_HPP
#define COEP_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace coep {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Thrown for dimension mismatches (non-square input, ambient mismatch, ...).
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when an entry is NaN or infinite.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a matrix required to be invertible is numerically singular.
// Carries the smallest singular value as the margin.
class singular_error : public std::runtime_error {
public:
    singular_error(const std::string& what, double margin)
        : std::runtime_error(what), margin_(margin) {}
    double margin() const { return margin_; }
private:
    double margin_;
};

// Thrown when a documented precondition fails (e.g. an invalid MP pair).
// Carries the offending residual.
class contract_error : public std::runtime_error {
public:
    contract_error(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }
private:
    double residual_;
};

inline bool all_finite(const CMat& a) {
    return a.allFinite();
}

inline void require_finite(const CMat& a, const char* who) {
    if (!all_finite(a))
        throw invalid_input_error(std::string(who) + ": non-finite entry");
}

inline void require_square(const CMat& a, const char* who) {
    if (a.rows() != a.cols())
        throw shape_error(std::string(who) + ": matrix must be square");
}

inline CMat identity_like(const CMat& a) {
    return CMat::Identity(a.rows(), a.rows());
}

// Kronecker product, used to build lifted multiplication operators.
inline CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Horizontal concatenation tolerating zero-width blocks.
inline CMat hcat(Eigen::Index rows, std::initializer_list<const CMat*> blocks) {
    Eigen::Index cols = 0;
    for (const CMat* b : blocks) cols += b->cols();
    CMat out(rows, cols);
    Eigen::Index at = 0;
    for (const CMat* b : blocks) {
        if (b->cols() > 0) out.middleCols(at, b->cols()) = *b;
        at += b->cols();
    }
    return out;
}

// Column-major vectorization of a matrix.
inline CVec vec(const CMat& a) {
    return Eigen::Map<const CVec>(a.data(), a.size());
}

inline CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
    return Eigen::Map<const CMat>(v.data(), rows, cols);
}

} // namespace coep

#endif
