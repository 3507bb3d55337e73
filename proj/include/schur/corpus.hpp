#pragma once

// The verification corpus: every finite abelian group, the dihedral and
// dicyclic groups, and the non-abelian split metacyclic groups up to a
// given order. Shared by the test suites, `selftest` and the Python tests.

#include "schur/groupspec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace schur {

struct CorpusGroup {
  std::string name;    // group spec string, parseable by parse_group_spec
  std::string family;  // abelian, dihedral, dicyclic or metacyclic
  GroupSpec spec;
  TablePtr table;
  std::optional<FinAbDesc> closed_form;  // multiplier from a closed formula, when one applies
};

std::vector<CorpusGroup> corpus_groups(std::size_t max_order = 16);

}  // namespace schur
