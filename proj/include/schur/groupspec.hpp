#pragma once

// Textual group specifications:
//   fab:[n1,n2,...]        finitely generated abelian group (invariant factors)
//   mc:m,n,r               metacyclic G(m,n,r)
//   heis:[d1,...];N[;K]    Heisenberg-type group, central modulus N, b/c modulus K
//   dic:n                  dicyclic group of order 4n
//   table:@file.json       explicit multiplication table
// Table JSON: {"order":k,"identity":0,"mult":[[...]],"labels":[...]}.

#include "schur/groups.hpp"

#include <json.hpp>

#include <string>

namespace schur {

class SpecError : public InvalidInput {
 public:
  SpecError(const std::string& msg, std::size_t offset, std::string rule)
      : InvalidInput(msg), offset_(offset), rule_(std::move(rule)) {}
  std::size_t offset() const { return offset_; }
  const std::string& rule() const { return rule_; }

 private:
  std::size_t offset_;
  std::string rule_;
};

struct GroupSpec {
  enum class Kind { FinAb, Metacyclic, Heisenberg, Dicyclic, Table };
  Kind kind = Kind::FinAb;
  FinAbDesc fab;
  MetacyclicDesc mc;
  HeisenbergDesc heis;
  std::size_t dic_n = 0;
  TablePtr table;
  std::string table_path;

  bool is_finite() const;
  BigInt order() const;  // 0 when infinite
  // Multiplication table, CapExceeded above `cap`.
  TablePtr instantiate(std::size_t cap = kDefaultTableCap) const;
  std::string to_string() const;
};

GroupSpec parse_group_spec(const std::string& text);

FiniteGroupTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const FiniteGroupTable& t);

}  // namespace schur
