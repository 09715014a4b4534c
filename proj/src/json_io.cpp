#include "coep/json_io.hpp"

#include <fstream>

namespace coep {

ordered_json matrix_to_json(const CMat& a) {
    ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    ordered_json entries = ordered_json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index jx = 0; jx < a.cols(); ++jx)
            entries.push_back({a(i, jx).real(), a(i, jx).imag()});
    j["entries"] = std::move(entries);
    return j;
}

CMat matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("entries"))
        throw std::invalid_argument(
            "matrix json must contain rows, cols and entries");
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix json: dimensions must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || Eigen::Index(entries.size()) != rows * cols)
        throw std::invalid_argument(
            "matrix json: entries length must equal rows*cols");
    CMat a(rows, cols);
    Eigen::Index idx = 0;
    for (const auto& e : entries) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("matrix json: entry must be [re, im]");
        a(idx / cols, idx % cols) =
            Complex(e[0].get<double>(), e[1].get<double>());
        ++idx;
    }
    require_finite(a, "matrix_from_json");
    return a;
}

CMat load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    ordered_json j;
    in >> j;
    return matrix_from_json(j);
}

void save_matrix(const std::string& path, const CMat& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path);
    out << matrix_to_json(a).dump(2) << '\n';
}

ordered_json norm_to_json(const NormSpec& n) {
    ordered_json j;
    j["kind"] = n.name();
    if (n.kind == NormSpec::Kind::Lp) {
        j["p"] = n.p;
        j["mode"] = "estimated";
        j["iterations"] = n.iterations;
        j["tolerance"] = n.tolerance;
    } else {
        j["mode"] = "exact";
    }
    return j;
}

NormSpec norm_from_string(const std::string& s) {
    if (s == "l1") return NormSpec::l1();
    if (s == "l2") return NormSpec::l2();
    if (s == "linf") return NormSpec::linf();
    if (s.rfind("lp:", 0) == 0) return NormSpec::lp(std::stod(s.substr(3)));
    throw std::invalid_argument("unknown norm: " + s +
                                " (expected l1, l2, linf or lp:<p>)");
}

namespace {

ordered_json verdict_to_json(const HermitianVerdict& v) {
    ordered_json j;
    j["hermitian"] = v.hermitian;
    j["defect"] = v.defect;
    j["derivative_defect"] = v.derivative_defect;
    j["method"] =
        v.method == HermitianVerdict::Method::ExactL2 ? "exact-l2" : "sampled";
    if (v.numerical()) j["numerical"] = true;
    return j;
}

} // namespace

ordered_json certificate_to_json(const MPCertificate& cert,
                                 const ToleranceConfig& cfg) {
    ordered_json j;
    j["norm"] = norm_to_json(cert.norm);
    j["residual_axa"] = cert.residual_axa;
    j["residual_xax"] = cert.residual_xax;
    j["ax_hermitian"] = verdict_to_json(cert.ax);
    j["xa_hermitian"] = verdict_to_json(cert.xa);
    j["valid"] = cert.valid(cfg);
    return j;
}

ordered_json classification_to_json(const ClassificationReport& rep) {
    ordered_json j;
    j["mp_invertible"] = rep.mp_invertible;
    j["ep"] = rep.ep;
    j["co_ep"] = rep.co_ep;
    j["bi_ep"] = rep.bi_ep;
    j["hermitian_co_ep"] = rep.hermitian_co_ep;
    if (rep.h) j["h"] = matrix_to_json(*rep.h);
    if (rep.k) j["k"] = matrix_to_json(*rep.k);
    ordered_json margins;
    for (const auto& [key, value] : rep.margins) margins[key] = value;
    j["margins"] = std::move(margins);
    return j;
}

ordered_json audit_to_json(const EquivalenceAudit& audit) {
    ordered_json j;
    ordered_json st = ordered_json::array();
    for (const auto& s : audit.statements) {
        ordered_json e;
        e["label"] = s.label;
        e["value"] = s.value;
        e["margin"] = s.margin;
        st.push_back(std::move(e));
    }
    j["statements"] = std::move(st);
    j["all_agree"] = audit.all_agree();
    return j;
}

} // namespace coep
