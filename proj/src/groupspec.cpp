#include "schur/groupspec.hpp"

#include <cctype>
#include <fstream>

namespace schur {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& s) : s_(s) {}
  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw SpecError("group spec syntax error at byte " + std::to_string(pos_) + ": expected " + what, pos_, "syntax");
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string word() {
    std::size_t start = pos_;
    while (!done() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  BigInt integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    std::size_t digits = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("an integer");
    }
    return parse_bigint(s_.substr(start, pos_ - start));
  }
  std::vector<BigInt> int_list() {
    expect('[');
    std::vector<BigInt> out;
    if (accept(']')) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(']');
    return out;
  }
  std::string rest() {
    std::string r = s_.substr(pos_);
    pos_ = s_.size();
    return r;
  }
  void end() const {
    if (!done()) fail("end of input");
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

// Rule names are embedded in validation messages as "<family> rule <name> violated".
std::string rule_of(const std::string& msg) {
  auto p = msg.find(" rule ");
  if (p == std::string::npos) return "semantic";
  auto q = msg.find(" violated", p);
  return msg.substr(p + 6, q == std::string::npos ? std::string::npos : q - p - 6);
}

template <class F>
auto semantic(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw SpecError(std::string("group spec semantic error: ") + e.what(), offset, rule_of(e.what()));
  }
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + schur::to_string(v[k]);
  return s;
}

TablePtr load_table_file(const std::string& path, std::size_t offset) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open table file '" + path + "'", offset, "file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SpecError("table file '" + path + "' is not valid JSON: " + e.what(), offset, "json");
  }
  return semantic(offset, [&] { return std::make_shared<const FiniteGroupTable>(table_from_json(j)); });
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Cursor c(text);
  GroupSpec g;
  const std::string head = c.word();
  c.expect(':');
  const std::size_t body = c.pos();
  if (head == "fab") {
    g.kind = GroupSpec::Kind::FinAb;
    auto f = c.int_list();
    c.end();
    g.fab = semantic(body, [&] { return FinAbDesc(f); });
  } else if (head == "mc") {
    g.kind = GroupSpec::Kind::Metacyclic;
    BigInt m = c.integer();
    c.expect(',');
    BigInt n = c.integer();
    c.expect(',');
    BigInt r = c.integer();
    c.end();
    g.mc = semantic(body, [&] { return MetacyclicDesc(m, n, r); });
  } else if (head == "heis") {
    g.kind = GroupSpec::Kind::Heisenberg;
    auto d = c.int_list();
    c.expect(';');
    BigInt N = c.integer();
    BigInt K = 0;
    if (c.accept(';')) K = c.integer();
    c.end();
    g.heis = semantic(body, [&] { return HeisenbergDesc(d, N, K); });
  } else if (head == "dic") {
    g.kind = GroupSpec::Kind::Dicyclic;
    BigInt n = c.integer();
    c.end();
    if (n < 1) throw SpecError("group spec semantic error: dicyclic rule n >= 1 violated", body, "n >= 1");
    if (n > 1000000) throw SpecError("group spec semantic error: dicyclic n too large", body, "n <= 10^6");
    g.dic_n = static_cast<std::size_t>(to_u64(n));
  } else if (head == "table") {
    g.kind = GroupSpec::Kind::Table;
    c.expect('@');
    if (c.done()) c.fail("a file path");
    g.table_path = c.rest();
    g.table = load_table_file(g.table_path, body);
  } else {
    throw SpecError("group spec syntax error at byte 0: unknown family '" + head + "' (expected fab, mc, heis, dic, table)",
                    0, "syntax");
  }
  return g;
}

bool GroupSpec::is_finite() const {
  switch (kind) {
    case Kind::FinAb:
      return fab.is_finite();
    case Kind::Metacyclic:
      return mc.is_finite();
    case Kind::Heisenberg:
      return heis.is_finite();
    case Kind::Dicyclic:
    case Kind::Table:
      return true;
  }
  return false;
}

BigInt GroupSpec::order() const {
  if (!is_finite()) return 0;
  switch (kind) {
    case Kind::FinAb:
      return fab.order();
    case Kind::Metacyclic:
      return mc.m * mc.n;
    case Kind::Heisenberg: {
      BigInt o = heis.central_mod;
      for (std::size_t k = 0; k < heis.rank(); ++k) o *= heis.bc_mod * heis.bc_mod;
      return o;
    }
    case Kind::Dicyclic:
      return BigInt(4 * dic_n);
    case Kind::Table:
      return BigInt(table->order());
  }
  return 0;
}

TablePtr GroupSpec::instantiate(std::size_t cap) const {
  if (!is_finite()) throw InvalidInput("group " + to_string() + " is infinite; a finite table is required");
  if (order() > BigInt(cap))
    throw CapExceeded("group order " + schur::to_string(order()) + " exceeds the table cap " + std::to_string(cap) +
                      " (raise --max-order to opt in)");
  switch (kind) {
    case Kind::FinAb:
      return std::make_shared<const FiniteGroupTable>(finite_table_of(fab, cap));
    case Kind::Metacyclic:
      return std::make_shared<const FiniteGroupTable>(finite_table_of(mc, cap));
    case Kind::Heisenberg:
      return std::make_shared<const FiniteGroupTable>(finite_table_of(heis, cap));
    case Kind::Dicyclic:
      return std::make_shared<const FiniteGroupTable>(dicyclic_table(dic_n));
    case Kind::Table:
      return table;
  }
  return nullptr;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::FinAb:
      return "fab:[" + join(fab.factors) + "]";
    case Kind::Metacyclic:
      return "mc:" + schur::to_string(mc.m) + "," + schur::to_string(mc.n) + "," + schur::to_string(mc.r);
    case Kind::Heisenberg: {
      std::string s = "heis:[" + join(heis.d) + "];" + schur::to_string(heis.central_mod);
      if (heis.bc_mod != 0) s += ";" + schur::to_string(heis.bc_mod);
      return s;
    }
    case Kind::Dicyclic:
      return "dic:" + std::to_string(dic_n);
    case Kind::Table:
      return "table:@" + table_path;
  }
  return "";
}

namespace {

FiniteGroupTable table_from_json_checked(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("table JSON must be an object");
  if (!j.contains("mult") || !j["mult"].is_array()) throw InvalidInput("table JSON needs a 'mult' array of rows");
  std::vector<std::vector<Elem>> rows;
  for (const auto& r : j["mult"]) {
    if (!r.is_array()) throw InvalidInput("table JSON: each 'mult' row must be an array");
    std::vector<Elem> row;
    for (const auto& v : r) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InvalidInput("table JSON: entries must be non-negative integers");
      row.push_back(static_cast<Elem>(v.get<long long>()));
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("order") && j["order"].get<std::size_t>() != rows.size())
    throw InvalidInput("table JSON: 'order' does not match the number of rows");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  FiniteGroupTable t = FiniteGroupTable::from_rows(rows, std::move(labels));
  if (j.contains("identity") && j["identity"].get<Elem>() != t.identity())
    throw InvalidInput("table JSON: 'identity' is not the identity of the table");
  return t;
}

}  // namespace

FiniteGroupTable table_from_json(const nlohmann::json& j) {
  try {
    return table_from_json_checked(j);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("table JSON: ") + e.what());
  }
}

nlohmann::json table_to_json(const FiniteGroupTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (Elem a = 0; a < t.order(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (Elem b = 0; b < t.order(); ++b) row.push_back(t.mul(a, b));
    rows.push_back(std::move(row));
  }
  return {{"order", t.order()}, {"identity", t.identity()}, {"mult", rows}, {"labels", t.labels()}};
}

}  // namespace schur
