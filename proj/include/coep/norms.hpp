#ifndef COEP_NORMS_HPP
#define COEP_NORMS_HPP

#include "coep/matrix.hpp"

namespace coep {

// A vector norm on complex n-space together with its induced operator norm.
// L1, L2 and LInf are evaluated exactly (max column sum, largest singular
// value, max row sum).  General Lp norms are estimated by a dual-norm power
// iteration and reported as a lower bound.
struct NormSpec {
    enum class Kind { L1, L2, LInf, Lp };

    Kind kind = Kind::L2;
    double p = 2.0;          // exponent, only meaningful for Kind::Lp
    int iterations = 200;    // estimation budget for Lp
    double tolerance = 1e-12;

    static NormSpec l1() { return {Kind::L1, 1.0}; }
    static NormSpec l2() { return {Kind::L2, 2.0}; }
    static NormSpec linf() { return {Kind::LInf}; }
    static NormSpec lp(double p) {
        if (!(p > 1.0)) throw std::invalid_argument("NormSpec: Lp requires p > 1");
        return {Kind::Lp, p};
    }

    bool exact() const { return kind != Kind::Lp; }
    const char* name() const {
        switch (kind) {
            case Kind::L1: return "l1";
            case Kind::L2: return "l2";
            case Kind::LInf: return "linf";
            default: return "lp";
        }
    }
};

double vector_norm(const CVec& x, const NormSpec& n);

// Induced operator norm of a (possibly rectangular) matrix.
double operator_norm(const CMat& a, const NormSpec& n);

// Largest/smallest singular values, used for margins and condition numbers.
double spectral_norm(const CMat& a);
double smallest_singular_value(const CMat& a);

} // namespace coep

#endif
