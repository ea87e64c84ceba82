#pragma once

// Text formats.
//
//   Horn CNF:   c comment
//               p hcnf <n> <m>
//               -1 3 0          (one clause per line, 0-terminated, at most
//                                one positive literal)
//
//   Model set:  p models <n> <k>
//               0101            (k rows of length n, leftmost character = x1)

#include <string>
#include <string_view>
#include <vector>

#include "hornstab/core.hpp"

namespace hornstab {

struct Diagnostics {
  std::vector<std::string> warnings;
};

HornTheory parse_horn_cnf(std::string_view text, Diagnostics* diag = nullptr);
ModelSet parse_model_set(std::string_view text, Diagnostics* diag = nullptr);

std::string serialize_horn_cnf(const HornTheory& t);
std::string serialize_model_set(const ModelSet& m);

/// Parses a query clause written as signed literals ("-1 -2 3 4"). A trailing
/// 0 is accepted; an empty string is the empty clause.
Clause parse_clause(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace hornstab
