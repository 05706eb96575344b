#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "ringscope/io.hpp"

using namespace ringscope;

namespace {

std::string corpus_text(const std::string& name) {
  std::ifstream in(std::string(RINGSCOPE_CORPUS_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string error_of(const std::string& text) {
  try {
    parse_ring_file(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

RingSpec unlabelled(RingSpec s) {
  s.label.clear();
  return s;
}

}  // namespace

TEST_CASE("ring file examples") {
  CHECK(parse_ring_file(R"({"construct":{"type":"zmod","n":8}})") == zmod_spec(8));
  CHECK(parse_ring_file(
            R"({"construct":{"type":"path_algebra","p":2,"vertices":3,"arrows":[[1,2],[1,3]]}})") ==
        unlabelled(fixtures::quiver()));
  CHECK_THROWS_AS(parse_ring_file(R"({"construct":{"type":"zmod","n":0}})"), InvalidInput);
}

TEST_CASE("ring file errors carry positions") {
  CHECK(error_of("{\n  \"construct\": {\"type\": \"zmod\", \"n\": 8,}\n}").find("line 2") == 0);
  CHECK(error_of(R"({"construct":{"type":"zmod","n":0}})") == "at /construct/n: n must be >= 1");
  CHECK(error_of(R"({"construct":{"type":"ring"}})").find("/construct/type") != std::string::npos);
  CHECK(error_of(R"({"construct":{"type":"ring"}})").find("unknown constructor") != std::string::npos);
  CHECK(error_of(R"({"construct":{"type":"zmod"}})").find("missing field \"n\"") != std::string::npos);
  CHECK(error_of(R"({"construct":{"type":"zmod","n":"8"}})").find("expected an integer") !=
        std::string::npos);
  CHECK(error_of(R"({"construct":{"type":"quotient","base":{"type":"zmod","n":8},"generators":[[9]]}})") ==
        "at /construct/generators/0/0: coordinate 9 out of range [0, 8)");
  CHECK(error_of(R"({"construct":{"type":"path_algebra","p":2,"vertices":2,"arrows":[[1,3]]}})") ==
        "at /construct/arrows/0/1: vertex 3 out of range [1, 2]");
  CHECK(error_of(R"({"construct":{"type":"table","orders":[2],"mul":[[[2]]],"one":[1]}})")
            .find("/construct/mul/0/0/0") != std::string::npos);
  CHECK(error_of("[1, 2]") == "at /: expected an object");
}

TEST_CASE("corpus files match the fixtures and round-trip") {
  const std::vector<std::pair<std::string, RingSpec>> files = {
      {"z8.ring", fixtures::z(8)},         {"quiver.ring", fixtures::quiver()},
      {"t2f2.ring", fixtures::t2f2()},     {"f2xy_sq.ring", fixtures::f2xy_sq()},
      {"f2_x2y2.ring", fixtures::f2_x2y2()}, {"m2f2.ring", fixtures::m2f2()},
      {"z4xf2.ring", fixtures::z4xf2()},   {"m2z4.ring", matrix_spec(fixtures::z(4), 2)},
      {"z4.ring", fixtures::z(4)},         {"f2.ring", fixtures::z(2)}};
  for (const auto& [name, spec] : files) {
    CAPTURE(name);
    RingSpec parsed = parse_ring_file(corpus_text(name));
    CHECK(unlabelled(parsed) == unlabelled(spec));
    CHECK(parse_ring_file(render_ring_file(parsed)) == parsed);
    CHECK(render_ring_file(parse_ring_file(render_ring_file(parsed))) == render_ring_file(parsed));
  }
  // nested labels and every constructor
  RingSpec nested = opposite_spec(quotient_spec(product_spec({fixtures::t2f2(), zmod_spec(9)}),
                                                {Coords{0, 1, 0, 3}}));
  nested.label = "outer";
  CHECK(parse_ring_file(render_ring_file(nested)) == nested);
}

TEST_CASE("module files") {
  auto z8 = ring_from_spec(fixtures::z(8));
  auto m = parse_module_file(R"({"type":"cyclic","ideal":[[2]]})", z8);
  CHECK(m.order() == 2);
  auto s = parse_module_file(
      R"({"type":"direct_sum","summands":[{"type":"regular"},{"type":"cyclic","ideal":[[4]]}]})", z8);
  CHECK(s.order() == 32);
  auto q = parse_module_file(R"({"type":"quotient_of_free","rank":2,"relations":[[[2],[0]],[[0],[4]]]})", z8);
  CHECK(q.order() == 8);
  CHECK(parse_module_file(R"({"type":"zero"})", z8).order() == 1);
  CHECK_THROWS_AS(parse_module_file(R"({"type":"cyclic","ideal":[[8]]})", z8), InvalidInput);
  CHECK_THROWS_AS(parse_module_file(R"({"type":"free"})", z8), InvalidInput);
  CHECK_THROWS_AS(parse_module_file(R"({"type":"quotient_of_free","rank":2,"relations":[[[1]]]})", z8),
                  InvalidInput);
}

TEST_CASE("profile json reconstructs the lattice") {
  for (const auto& spec : fixtures::small_rings()) {
    auto r = ring_from_spec(spec);
    for (ProfileKind k : {ProfileKind::i, ProfileKind::p}) {
      auto p = profile(r, k);
      Json j = Json::parse(profile_json(r, p).dump());
      CHECK(j["kind"] == kind_name(k));
      std::vector<std::string> labels;
      for (const auto& n : j["nodes"]) labels.push_back(n["ideal"].get<std::string>());
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (const auto& e : j["order_pairs"]) pairs.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
      auto rebuilt = build_lattice(labels, pairs);
      CHECK(are_isomorphic(rebuilt, p.lattice, false));
      CHECK(j["flags"]["chain"].get<bool>() == p.structure.chain);
      CHECK(j["flags"]["has_middle_class"].get<bool>() == p.has_middle_class);
    }
  }
}

TEST_CASE("reports are deterministic") {
  auto r = ring_from_spec(fixtures::quiver());
  CHECK(profile_text(r, i_profile(r)) == profile_text(r, i_profile(r)));
  CHECK(profile_dot(p_profile(r)) == profile_dot(p_profile(r)));
  auto c = classify_ring(r);
  CHECK_FALSE(c.local);
  CHECK_FALSE(c.qf);
  CHECK(c.middle_i);
  CHECK(c.middle_p);
  CHECK(classification_text(r, c).find("indecomposable      yes") != std::string::npos);
}
