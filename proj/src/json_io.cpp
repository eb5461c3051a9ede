#include "meetless/json_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "meetless/chain.hpp"
#include "meetless/error.hpp"
#include "meetless/term.hpp"

namespace meetless {
namespace {

[[noreturn]] void malformed(std::string const& what) {
  throw Error(ErrorKind::parse_error, what);
}

Json const& field(Json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) {
    malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

std::string text(Json const& j, char const* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json const& array(Json const& j, char const* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j;
}

std::vector<std::string> names_of(Json const& j) {
  std::vector<std::string> out;
  for (auto const& e : array(field(j, "elements"), "elements")) {
    out.push_back(text(e, "element name"));
  }
  return out;
}

ElementId lookup(std::unordered_map<std::string, ElementId> const& index,
                 std::string const& name) {
  auto it = index.find(name);
  if (it == index.end()) {
    throw Error(ErrorKind::unknown_element, "no element named " + name, {name});
  }
  return it->second;
}

std::unordered_map<std::string, ElementId> index_of(
    std::vector<std::string> const& names) {
  std::unordered_map<std::string, ElementId> idx;
  for (ElementId i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], i).second) {
      malformed("duplicate element name " + names[i]);
    }
  }
  return idx;
}

// Fills a symmetric n*n table from [[x,y,z],...] rows.
std::vector<ElementId> binary_table(
    Json const& rows, std::vector<std::string> const& names,
    std::unordered_map<std::string, ElementId> const& idx, char const* what) {
  std::size_t const n = names.size();
  constexpr ElementId unset = ~ElementId{0};
  std::vector<ElementId> t(n * n, unset);
  for (auto const& r : array(rows, what)) {
    if (!r.is_array() || r.size() != 3) {
      malformed(std::string(what) + " rows must be [x, y, z]");
    }
    ElementId const x = lookup(idx, text(r[0], what));
    ElementId const y = lookup(idx, text(r[1], what));
    ElementId const z = lookup(idx, text(r[2], what));
    for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
      auto& slot = t[p * n + q];
      if (slot != unset && slot != z) {
        malformed(std::string(what) + " table gives two values for (" +
                  names[x] + ", " + names[y] + ")");
      }
      slot = z;
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (t[x * n + y] == unset) {
        malformed(std::string(what) + " table omits the pair (" + names[x] +
                  ", " + names[y] + ")");
      }
    }
  }
  return t;
}

Json table_rows(std::vector<std::string> const& names,
                std::span<ElementId const> t) {
  std::size_t const n = names.size();
  Json rows = Json::array();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x; y < n; ++y) {
      rows.push_back({names[x], names[y], names[t[x * n + y]]});
    }
  }
  return rows;
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

}  // namespace

Json parse_json(std::string const& text) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

Json read_json_file(std::string const& path) {
  std::string content;
  if (path == "-") {
    content.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  return parse_json(content);
}

Json semilattice_to_json(FiniteJoinSemilattice const& s) {
  auto const& names = s.poset().names();
  return Json{{"elements", names},
              {"zero", s.name(s.zero())},
              {"joins", table_rows(names, s.join_table())}};
}

FiniteJoinSemilattice semilattice_from_json(Json const& j) {
  return guarded([&] {
    auto names = names_of(j);
    if (names.empty()) throw Error(ErrorKind::no_zero, "empty carrier");
    auto const idx = index_of(names);
    ElementId const zero = lookup(idx, text(field(j, "zero"), "zero"));
    auto table = binary_table(field(j, "joins"), names, idx, "joins");
    if (!j.contains("order")) {
      return semilattice_from_joins(std::move(names), zero, std::move(table));
    }
    std::vector<std::pair<ElementId, ElementId>> pairs;
    for (auto const& r : array(j.at("order"), "order")) {
      if (!r.is_array() || r.size() != 2) malformed("order rows must be [x, y]");
      pairs.emplace_back(lookup(idx, text(r[0], "order")),
                         lookup(idx, text(r[1], "order")));
    }
    // Joins are checked against the supplied order, so the first pair whose
    // entry is not its least upper bound is the one reported.
    auto given = FinitePoset::from_pairs(std::move(names), pairs);
    auto s = validate_semilattice(std::move(given), zero, std::move(table));
    return s;
  });
}

Json lattice_to_json(FiniteLattice const& l) {
  Json j = semilattice_to_json(l.semilattice());
  j["meets"] = table_rows(l.semilattice().poset().names(), l.meet_table());
  return j;
}

FiniteLattice lattice_from_json(Json const& j) {
  return guarded([&] {
    auto s = semilattice_from_json(j);
    if (!j.contains("meets")) return FiniteLattice::from_semilattice(std::move(s));
    auto const& names = s.poset().names();
    auto table = binary_table(j.at("meets"), names, index_of(names), "meets");
    return FiniteLattice::with_meets(std::move(s), std::move(table));
  });
}

Json poset_to_json(FinitePoset const& p) {
  Json order = Json::array();
  for (auto [x, y] : p.covers()) order.push_back({p.name(x), p.name(y)});
  return Json{{"elements", p.names()}, {"order", order}};
}

FinitePoset poset_from_json(Json const& j) {
  return guarded([&] {
    auto names = names_of(j);
    auto const idx = index_of(names);
    std::vector<std::pair<ElementId, ElementId>> pairs;
    if (j.contains("order")) {
      for (auto const& r : array(j.at("order"), "order")) {
        if (!r.is_array() || r.size() != 2) malformed("order rows must be [x, y]");
        pairs.emplace_back(lookup(idx, text(r[0], "order")),
                           lookup(idx, text(r[1], "order")));
      }
    }
    return FinitePoset::from_pairs(std::move(names), pairs);
  });
}

namespace {

TableBase const* table_base(PosetMeasure const& m) {
  return dynamic_cast<TableBase const*>(&m.ext->base());
}

}  // namespace

std::string value_name(PosetMeasure const& m, FreeElement const& v) {
  if (auto const* tb = table_base(m)) {
    if (!v.is_base()) {
      throw Error(ErrorKind::internal, "table-valued measure with a set value");
    }
    return tb->name(v.code());
  }
  return print_term(v);
}

FreeElement value_from_name(PosetMeasure const& m, std::string const& text) {
  if (auto const* tb = table_base(m)) {
    return FreeElement::base(tb->semilattice().id_of(text));
  }
  return parse_term(text);
}

Json measure_to_json(PosetMeasure const& m) {
  Json j;
  j["poset"] = poset_to_json(m.poset);
  if (auto const* tb = table_base(m)) {
    j["values"] = semilattice_to_json(tb->semilattice());
  } else {
    j["values"] = "terms";
  }
  j["depth"] = m.depth;
  if (!m.default_pairs.empty()) {
    Json pairs = Json::array();
    for (auto const& [a, b] : m.default_pairs) {
      pairs.push_back({value_name(m, a), value_name(m, b)});
    }
    j["pairs"] = pairs;
  }
  Json mu = Json::array();
  std::size_t const n = m.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (m.ext->is_zero(m.at(x, y))) continue;
      mu.push_back({m.poset.name(x), m.poset.name(y), value_name(m, m.at(x, y))});
    }
  }
  j["mu"] = mu;
  return j;
}

PosetMeasure measure_from_json(Json const& j) {
  return guarded([&] {
    PosetMeasure m;
    m.poset = poset_from_json(field(j, "poset"));
    auto const& values = field(j, "values");
    if (values.is_string()) {
      if (values.get<std::string>() != "terms") {
        malformed("\"values\" must be \"terms\" or a semilattice object");
      }
      m.ext = chain_extension_ptr();
    } else {
      m.ext = std::make_shared<FreeExtension const>(
          std::make_shared<TableBase>(semilattice_from_json(values)));
    }
    if (j.contains("depth")) {
      if (!j.at("depth").is_number_unsigned()) malformed("depth must be a natural");
      m.depth = j.at("depth").get<std::uint32_t>();
    }
    std::size_t const n = m.size();
    m.mu.assign(n * n, m.ext->zero());
    std::vector<bool> seen(n * n, false);
    for (auto const& r : array(field(j, "mu"), "mu")) {
      if (!r.is_array() || r.size() != 3) malformed("mu rows must be [x, y, value]");
      ElementId const x = m.poset.id_of(text(r[0], "mu"));
      ElementId const y = m.poset.id_of(text(r[1], "mu"));
      if (seen[x * n + y]) malformed("mu lists a pair twice");
      seen[x * n + y] = true;
      m.mu[x * n + y] = value_from_name(m, text(r[2], "mu value"));
    }
    if (j.contains("pairs")) {
      for (auto const& r : array(j.at("pairs"), "pairs")) {
        if (!r.is_array() || r.size() != 2) malformed("pairs rows must be [a, b]");
        m.default_pairs.emplace_back(value_from_name(m, text(r[0], "pair")),
                                     value_from_name(m, text(r[1], "pair")));
      }
    }
    return m;
  });
}

ProblemFile problem_from_json(Json const& j) {
  return guarded([&] {
    ProblemFile f;
    auto& p = f.problem;
    p.s = semilattice_from_json(field(j, "semilattice"));
    p.a = p.s.id_of(text(field(j, "a"), "a"));
    p.b = p.s.id_of(text(field(j, "b"), "b"));
    for (auto const& c : array(field(j, "chain"), "chain")) {
      p.chain.push_back(p.s.id_of(text(c, "chain entry")));
    }
    if (j.contains("order")) {
      for (auto const& k : array(j.at("order"), "order")) {
        if (!k.is_number_unsigned()) malformed("order entries must be naturals");
        f.order.push_back(k.get<std::size_t>());
      }
    }
    p.validate();
    return f;
  });
}

Json witness_to_json(RefinementProblem const& p, RefinementWitness const& w) {
  Json as = Json::array(), bs = Json::array();
  for (auto x : w.as) as.push_back(p.s.name(x));
  for (auto y : w.bs) bs.push_back(p.s.name(y));
  return Json{{"a_seq", as}, {"b_seq", bs}};
}

}  // namespace meetless
