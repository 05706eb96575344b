#include "ringscope/io.hpp"

#include <sstream>

namespace ringscope {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw InvalidInput("at " + (path.empty() ? std::string("/") : path) + ": " + msg);
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    // drop the library prefix "[json.exception.parse_error.101] parse error at ...: "
    if (auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    throw InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(col) +
                       ": " + what);
  }
}

const Json& field(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, "missing field \"" + key + "\"");
  return *it;
}

Int as_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) schema_error(path, "expected an integer");
  return v.get<Int>();
}

Int int_field(const Json& obj, const std::string& key, const std::string& path, Int lo) {
  Int v = as_int(field(obj, key, path), path + "/" + key);
  if (v < lo) schema_error(path + "/" + key, key + " must be >= " + std::to_string(lo));
  return v;
}

const Json& array_field(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_array()) schema_error(path + "/" + key, "expected an array");
  return v;
}

Coords coords(const Json& v, const std::string& path, const std::vector<Int>& orders) {
  if (!v.is_array()) schema_error(path, "expected a coordinate list");
  if (v.size() != orders.size())
    schema_error(path, "expected " + std::to_string(orders.size()) + " coordinates, got " +
                           std::to_string(v.size()));
  Coords c;
  for (std::size_t k = 0; k < v.size(); ++k) {
    const std::string p = path + "/" + std::to_string(k);
    Int x = as_int(v[k], p);
    if (x < 0 || x >= orders[k])
      schema_error(p, "coordinate " + std::to_string(x) + " out of range [0, " +
                          std::to_string(orders[k]) + ")");
    c.push_back(x);
  }
  return c;
}

RingSpec parse_construct(const Json& c, const std::string& path, const Limits& limits) {
  const Json& type = field(c, "type", path);
  if (!type.is_string()) schema_error(path + "/type", "expected a string");
  const std::string t = type.get<std::string>();
  RingSpec spec;
  if (t == "zmod") {
    spec = zmod_spec(int_field(c, "n", path, 1));
  } else if (t == "table") {
    std::vector<Int> orders;
    const Json& o = array_field(c, "orders", path);
    for (std::size_t k = 0; k < o.size(); ++k) {
      Int x = as_int(o[k], path + "/orders/" + std::to_string(k));
      if (x < 1) schema_error(path + "/orders/" + std::to_string(k), "order must be >= 1");
      orders.push_back(x);
    }
    const Json& m = array_field(c, "mul", path);
    if (m.size() != orders.size())
      schema_error(path + "/mul", "expected " + std::to_string(orders.size()) + " rows");
    std::vector<std::vector<Coords>> mul(orders.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string pi = path + "/mul/" + std::to_string(i);
      if (!m[i].is_array() || m[i].size() != orders.size())
        schema_error(pi, "expected " + std::to_string(orders.size()) + " products");
      for (std::size_t j = 0; j < m[i].size(); ++j)
        mul[i].push_back(coords(m[i][j], pi + "/" + std::to_string(j), orders));
    }
    spec = table_spec(orders, std::move(mul), coords(field(c, "one", path), path + "/one", orders));
  } else if (t == "path_algebra") {
    Int p = int_field(c, "p", path, 2);
    Int v = int_field(c, "vertices", path, 1);
    std::vector<std::pair<Int, Int>> arrows;
    const Json& a = array_field(c, "arrows", path);
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::string pk = path + "/arrows/" + std::to_string(k);
      if (!a[k].is_array() || a[k].size() != 2) schema_error(pk, "expected [source, target]");
      Int s = as_int(a[k][0], pk + "/0"), e = as_int(a[k][1], pk + "/1");
      for (auto [x, q] : {std::pair{s, pk + "/0"}, std::pair{e, pk + "/1"}})
        if (x < 1 || x > v)
          schema_error(q, "vertex " + std::to_string(x) + " out of range [1, " +
                              std::to_string(v) + "]");
      arrows.emplace_back(s, e);
    }
    spec = path_algebra_spec(p, v, std::move(arrows));
  } else if (t == "matrix") {
    spec = matrix_spec(parse_construct(field(c, "base", path), path + "/base", limits),
                       int_field(c, "size", path, 1));
  } else if (t == "product") {
    const Json& f = array_field(c, "factors", path);
    if (f.empty()) schema_error(path + "/factors", "expected at least one factor");
    std::vector<RingSpec> factors;
    for (std::size_t k = 0; k < f.size(); ++k)
      factors.push_back(parse_construct(f[k], path + "/factors/" + std::to_string(k), limits));
    spec = product_spec(std::move(factors));
  } else if (t == "quotient") {
    RingSpec base = parse_construct(field(c, "base", path), path + "/base", limits);
    const auto orders = ring_from_spec(base, limits)->orders();
    const Json& g = array_field(c, "generators", path);
    std::vector<Coords> gens;
    for (std::size_t k = 0; k < g.size(); ++k)
      gens.push_back(coords(g[k], path + "/generators/" + std::to_string(k), orders));
    spec = quotient_spec(std::move(base), std::move(gens));
  } else if (t == "opposite") {
    spec = opposite_spec(parse_construct(field(c, "base", path), path + "/base", limits));
  } else {
    schema_error(path + "/type", "unknown constructor \"" + t + "\"");
  }
  if (auto it = c.find("label"); it != c.end()) {
    if (!it->is_string()) schema_error(path + "/label", "expected a string");
    spec.label = it->get<std::string>();
  }
  return spec;
}

Json coords_json(const Coords& c) {
  Json a = Json::array();
  for (Int x : c) a.push_back(x);
  return a;
}

Json construct_json(const RingSpec& spec) {
  Json c = std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        Json o;
        if constexpr (std::is_same_v<T, ZModSpec>) {
          o["type"] = "zmod";
          o["n"] = x.n;
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          o["type"] = "table";
          o["orders"] = x.orders;
          Json mul = Json::array();
          for (const auto& row : x.mul) {
            Json r = Json::array();
            for (const auto& e : row) r.push_back(coords_json(e));
            mul.push_back(r);
          }
          o["mul"] = mul;
          o["one"] = coords_json(x.one);
        } else if constexpr (std::is_same_v<T, PathAlgebraSpec>) {
          o["type"] = "path_algebra";
          o["p"] = x.p;
          o["vertices"] = x.vertices;
          Json a = Json::array();
          for (auto [s, t] : x.arrows) a.push_back(Json::array({s, t}));
          o["arrows"] = a;
        } else if constexpr (std::is_same_v<T, MatrixSpec>) {
          o["type"] = "matrix";
          o["base"] = construct_json(*x.base);
          o["size"] = x.size;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          o["type"] = "product";
          Json f = Json::array();
          for (const auto& s : x.factors) f.push_back(construct_json(s));
          o["factors"] = f;
        } else if constexpr (std::is_same_v<T, QuotientSpec>) {
          o["type"] = "quotient";
          o["base"] = construct_json(*x.base);
          Json g = Json::array();
          for (const auto& e : x.generators) g.push_back(coords_json(e));
          o["generators"] = g;
        } else {
          o["type"] = "opposite";
          o["base"] = construct_json(*x.base);
        }
        return o;
      },
      spec.node);
  if (!spec.label.empty()) c["label"] = spec.label;
  return c;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

RightModule parse_module(const Json& m, const std::string& path, const RingPtr& r) {
  const Json& type = field(m, "type", path);
  if (!type.is_string()) schema_error(path + "/type", "expected a string");
  const std::string t = type.get<std::string>();
  if (t == "regular") return regular_module(r);
  if (t == "zero") return zero_module(r);
  if (t == "cyclic") {
    const Json& g = array_field(m, "ideal", path);
    std::vector<Coords> gens;
    for (std::size_t k = 0; k < g.size(); ++k)
      gens.push_back(coords(g[k], path + "/ideal/" + std::to_string(k), r->orders()));
    return cyclic_module(r, generated_submodule(regular_module(r), gens));
  }
  if (t == "quotient_of_free") {
    const auto rank = static_cast<std::size_t>(int_field(m, "rank", path, 0));
    std::vector<Coords> rels;
    if (m.contains("relations")) {
      const Json& rs = array_field(m, "relations", path);
      for (std::size_t k = 0; k < rs.size(); ++k) {
        const std::string pk = path + "/relations/" + std::to_string(k);
        if (!rs[k].is_array() || rs[k].size() != rank)
          schema_error(pk, "expected " + std::to_string(rank) + " ring elements");
        Coords flat;
        for (std::size_t i = 0; i < rank; ++i) {
          Coords c = coords(rs[k][i], pk + "/" + std::to_string(i), r->orders());
          flat.insert(flat.end(), c.begin(), c.end());
        }
        rels.push_back(std::move(flat));
      }
    }
    return quotient_of_free(r, rank, rels);
  }
  if (t == "direct_sum") {
    const Json& s = array_field(m, "summands", path);
    std::vector<RightModule> parts;
    for (std::size_t k = 0; k < s.size(); ++k)
      parts.push_back(parse_module(s[k], path + "/summands/" + std::to_string(k), r));
    if (parts.empty()) return zero_module(r);
    return direct_sum(parts);
  }
  schema_error(path + "/type", "unknown module type \"" + t + "\"");
}

}  // namespace

RingSpec parse_ring_file(const std::string& text, const Limits& limits) {
  Json doc = parse_text(text);
  if (!doc.is_object()) schema_error("", "expected an object");
  RingSpec spec = parse_construct(field(doc, "construct", ""), "/construct", limits);
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) schema_error("/label", "expected a string");
    spec.label = it->get<std::string>();
  }
  return spec;
}

Json ring_spec_json(const RingSpec& spec) {
  Json doc;
  RingSpec bare = spec;
  bare.label.clear();
  if (!spec.label.empty()) doc["label"] = spec.label;
  doc["construct"] = construct_json(bare);
  return doc;
}

std::string render_ring_file(const RingSpec& spec) { return ring_spec_json(spec).dump(2) + "\n"; }

RightModule parse_module_file(const std::string& text, const RingPtr& r) {
  return parse_module(parse_text(text), "", r);
}

std::string ring_text(const RingPtr& r, const Limits& limits) {
  std::ostringstream os;
  std::vector<std::string> inv;
  for (Int d : elementary_divisors(r->orders())) inv.push_back("Z/" + std::to_string(d));
  auto j = jacobson_radical(r, limits);
  os << "ring " << r->label() << "\n";
  os << "  order " << r->order() << ", characteristic " << r->characteristic() << "\n";
  os << "  additive group " << (inv.empty() ? "0" : join(inv, " + ")) << "\n";
  os << "  right ideals " << right_ideals(r, limits).size() << ", two-sided ideals "
     << two_sided_ideals(r, limits).size() << "\n";
  os << "  |J(R)| = " << j.order() << ", nilpotency index " << nilpotency_index(*r, j) << "\n";
  os << "  units " << units(*r, limits).size() << ", central idempotents "
     << central_idempotents(*r, limits).size() << "\n";
  return os.str();
}

Classification classify_ring(const RingPtr& r, const Limits& limits) {
  Classification c{};
  c.semisimple = is_semisimple_ring(r, limits);
  c.local = is_local(r, limits);
  c.chain = is_chain_ring(r, limits);
  c.uniform = is_uniform_ring(r, limits);
  c.qf = is_qf(r, limits);
  c.super_qf = is_super_qf(r, limits);
  c.socle_homogeneous_j =
      socle_homogeneous(submodule_module(regular_module(r), jacobson_radical(r, limits)).module, limits);
  c.middle_i = has_middle_class(r, ProfileKind::i, limits);
  c.middle_p = has_middle_class(r, ProfileKind::p, limits);
  c.central_idempotents = central_idempotents(*r, limits).size();
  return c;
}

std::string classification_text(const RingPtr& r, const Classification& c) {
  std::ostringstream os;
  os << "ring " << r->label() << " (order " << r->order() << ")\n";
  os << "  artinian            yes (finite)\n";
  os << "  semisimple          " << yes(c.semisimple) << "\n";
  os << "  local               " << yes(c.local) << "\n";
  os << "  chain ring          " << yes(c.chain) << "\n";
  os << "  uniform             " << yes(c.uniform) << "\n";
  os << "  QF                  " << yes(c.qf) << "\n";
  os << "  super QF            " << yes(c.super_qf.holds);
  if (c.super_qf.ideal) os << " (R/I not QF for I = " << format_ideal(*r, *c.super_qf.ideal) << ")";
  os << "\n";
  os << "  J(R) homogeneous    " << yes(c.socle_homogeneous_j) << "\n";
  os << "  i-middle class      " << yes(c.middle_i) << "\n";
  os << "  p-middle class      " << yes(c.middle_p) << "\n";
  os << "  indecomposable      " << yes(c.central_idempotents == 2) << "\n";
  return os.str();
}

Json classification_json(const RingPtr& r, const Classification& c) {
  Json o;
  o["ring"] = r->label();
  o["order"] = r->order();
  o["semisimple"] = c.semisimple;
  o["local"] = c.local;
  o["chain"] = c.chain;
  o["uniform"] = c.uniform;
  o["qf"] = c.qf;
  o["super_qf"] = c.super_qf.holds;
  o["super_qf_certificate"] =
      c.super_qf.ideal ? Json(format_ideal(*r, *c.super_qf.ideal)) : Json(nullptr);
  o["j_homogeneous"] = c.socle_homogeneous_j;
  o["middle_class_i"] = c.middle_i;
  o["middle_class_p"] = c.middle_p;
  o["central_idempotents"] = c.central_idempotents;
  return o;
}

std::string profile_text(const RingPtr& r, const ProfileReport& p) {
  std::ostringstream os;
  const auto& s = p.structure;
  os << kind_name(p.kind) << "-profile of " << p.ring_label << ": " << p.nodes.size()
     << (p.nodes.size() == 1 ? " node" : " nodes") << "\n";
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    const auto& n = p.nodes[k];
    os << "  [" << k << "] Mod-R/I, I = " << format_ideal(*r, n.ideal) << "  filter size "
       << n.filter.size() << ", cyclics " << n.fingerprint.count() << "/"
       << n.fingerprint.members.size();
    if (!n.witness_note.empty())
      os << ", witness " << (n.witness ? describe_module(*n.witness) : n.witness_note);
    os << "\n";
  }
  std::vector<std::string> edges;
  for (auto [a, b] : p.lattice.covering_pairs())
    edges.push_back(std::to_string(a) + " < " + std::to_string(b));
  os << "  covers: " << (edges.empty() ? "none" : join(edges, ", ")) << "\n";
  os << "  chain " << yes(s.chain) << ", length " << s.length << ", modular " << yes(s.modular)
     << ", distributive " << yes(s.distributive) << ", coatomic " << yes(s.coatomic)
     << ", middle class " << yes(p.has_middle_class) << "\n";
  return os.str();
}

Json profile_json(const RingPtr& r, const ProfileReport& p) {
  Json o;
  o["kind"] = kind_name(p.kind);
  o["ring"] = p.ring_label;
  Json nodes = Json::array();
  for (const auto& n : p.nodes) {
    Json j;
    j["ideal"] = format_ideal(*r, n.ideal);
    j["ideal_order"] = n.ideal.order();
    j["filter_size"] = n.filter.size();
    j["cyclics"] = n.fingerprint.count();
    j["witness"] = n.witness ? Json(describe_module(*n.witness))
                             : (n.witness_note.empty() ? Json(nullptr) : Json(n.witness_note));
    nodes.push_back(j);
  }
  o["nodes"] = nodes;
  Json pairs = Json::array();
  for (std::size_t a = 0; a < p.lattice.size(); ++a)
    for (std::size_t b = 0; b < p.lattice.size(); ++b)
      if (p.lattice.less(a, b)) pairs.push_back(Json::array({a, b}));
  o["order_pairs"] = pairs;
  const auto& s = p.structure;
  o["flags"] = {{"chain", s.chain},
                {"modular", s.modular},
                {"distributive", s.distributive},
                {"atomic", s.atomic},
                {"coatomic", s.coatomic},
                {"length", s.length},
                {"has_middle_class", p.has_middle_class},
                {"atoms", s.atoms},
                {"coatoms", s.coatoms}};
  return o;
}

std::string profile_dot(const ProfileReport& p) {
  return to_dot(p.lattice, p.lattice.labels(), kind_name(p.kind) + "_profile");
}

std::string fingerprint_text(const CyclicCatalog& c, const CyclicFingerprint& f, ProfileKind k) {
  std::ostringstream os;
  os << (k == ProfileKind::i ? "injectivity" : "projectivity") << " domain on cyclic modules: "
     << f.count() << "/" << c.size() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    os << "  " << (f.members[i] ? "[x] " : "[ ] ") << describe_module(c.module(i)) << "\n";
  os << "  poor: " << yes(f == semisimple_cyclics(c)) << "\n";
  return os.str();
}

Json fingerprint_json(const CyclicCatalog& c, const CyclicFingerprint& f, ProfileKind k) {
  Json o;
  o["kind"] = kind_name(k);
  Json members = Json::array();
  for (std::size_t i = 0; i < c.size(); ++i)
    members.push_back({{"module", describe_module(c.module(i))}, {"member", bool(f.members[i])}});
  o["cyclics"] = members;
  o["count"] = f.count();
  o["poor"] = f == semisimple_cyclics(c);
  return o;
}

std::string verify_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify " << rep.ring_label << "\n";
  std::size_t failed = 0;
  for (const auto& c : rep.checks) {
    if (c.status == CheckStatus::fail) ++failed;
    os << "  " << c.id << (c.id.size() < 3 ? "  " : " ") << status_name(c.status) << "  "
       << c.statement;
    if (!c.detail.empty()) os << "  [" << c.detail << "]";
    os << "\n";
  }
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks failed") << "\n";
  return os.str();
}

Json verify_json(const VerifyReport& rep) {
  Json o;
  o["ring"] = rep.ring_label;
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"id", c.id},
                      {"statement", c.statement},
                      {"status", status_name(c.status)},
                      {"detail", c.detail}});
  o["checks"] = checks;
  o["passed"] = rep.passed();
  return o;
}

}  // namespace ringscope
