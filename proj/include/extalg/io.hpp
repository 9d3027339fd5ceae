#pragma once

#include <string>

#include "extalg/ext.hpp"
#include "extalg/m11.hpp"
#include "json.hpp"

namespace extalg::io {

using json = nlohmann::ordered_json;

// line-oriented text format: `field`, `vertex`, `arrow`, `order`, `relation`
// directives, `#` comments; errors carry 1-based line numbers
std::unique_ptr<Algebra> parse_algebra(const std::string& text, const std::string& name = "",
                                       int degree_bound = -1);
// `builtin:m11` or a path; file algebras are named after the file stem
std::unique_ptr<Algebra> load_algebra(const std::string& spec);
// emits the same format; relation orientation is recomputed from the order
std::string serialize_algebra(const Algebra& alg);

json algebra_summary(const Algebra& alg);
json resolution_json(const Resolution& res);
json checks_json(const std::vector<m11::Check>& checks);
json report_skeleton(const Algebra& alg);
json verification_json(const m11::VerificationReport& rep);

std::string report_text(const json& report);
void write_report(const json& report, const std::string& path);

}  // namespace extalg::io
