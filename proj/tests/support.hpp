#pragma once

#include <string>

#include "hornstab/core.hpp"
#include "hornstab/formats.hpp"

namespace hornstab::testing {

inline std::string data_path(const std::string& name) {
  return std::string(HORNSTAB_TEST_DATA) + "/" + name;
}

// x̄1∨x3, x̄2∨x3, x̄2∨x4 over four variables.
inline HornTheory ex2() { return parse_horn_cnf(read_text_file(data_path("ex2.hcnf"))); }

inline ModelSet m1() { return ModelSet::of({"0101", "1001", "1000"}); }
inline ModelSet m2() { return ModelSet::of({"0101", "1001", "1000", "0001", "0000"}); }

inline Clause cl(std::initializer_list<int> lits) { return Clause::from_signed(lits); }
inline Model mv(std::string_view row) { return Model::from_string(row); }

}  // namespace hornstab::testing
