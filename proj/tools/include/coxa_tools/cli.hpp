#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <coxa/coxa.hpp>
#include <json.hpp>

namespace coxa::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"pairs": [[j, i], ...], "bricks": [[lo, hi], ...]}
nlohmann::json element_to_json(const Element& e);
/// Inverse of element_to_json. Throws DomainError on malformed or invalid data.
Element element_from_json(const nlohmann::json& j, Rank rank);

/// Word, canonical form, or the JSON object above.
Element parse_argument(const std::string& text, Rank rank);

}  // namespace coxa::cli
