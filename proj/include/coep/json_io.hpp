#ifndef COEP_JSON_IO_HPP
#define COEP_JSON_IO_HPP

#include "coep/classification.hpp"
#include "coep/matrix.hpp"
#include "coep/norms.hpp"
#include "coep/pseudoinverse.hpp"

#include <json.hpp>

#include <string>

namespace coep {

using ordered_json = nlohmann::ordered_json;

// Matrix file format: {"rows": n, "cols": m, "entries": [[re, im], ...]}
// row-major.  Doubles round-trip bit-exactly.
ordered_json matrix_to_json(const CMat& a);
CMat matrix_from_json(const ordered_json& j);

CMat load_matrix(const std::string& path);
void save_matrix(const std::string& path, const CMat& a);

ordered_json norm_to_json(const NormSpec& n);
NormSpec norm_from_string(const std::string& s);

ordered_json certificate_to_json(const MPCertificate& cert,
                                 const ToleranceConfig& cfg);
ordered_json classification_to_json(const ClassificationReport& rep);
ordered_json audit_to_json(const EquivalenceAudit& audit);

} // namespace coep

#endif
