#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ringscope/io.hpp"

#ifndef RINGSCOPE_CORPUS_DIR
#define RINGSCOPE_CORPUS_DIR "corpus"
#endif

using namespace ringscope;
namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

// A path, or the name of a bundled corpus ring.
std::string resolve_ring(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  for (const std::string& name : {arg, arg + ".ring"}) {
    fs::path p = fs::path(RINGSCOPE_CORPUS_DIR) / name;
    if (fs::exists(p)) return p.string();
  }
  throw InvalidInput("no ring file " + arg);
}

struct Loaded {
  RingSpec spec;
  RingPtr ring;
};

Loaded load_ring(const std::string& arg, const Limits& limits) {
  const std::string path = resolve_ring(arg);
  try {
    RingSpec spec = parse_ring_file(read_file(path), limits);
    return {spec, ring_from_spec(spec, limits)};
  } catch (const InvalidInput& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

ProfileKind parse_kind(const std::string& s) {
  if (s == "i") return ProfileKind::i;
  if (s == "p") return ProfileKind::p;
  throw InvalidInput("--kind must be i or p");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringscope: injectivity and projectivity profiles of finite rings"};
  app.require_subcommand(1);

  Limits limits;
  if (const char* env = std::getenv("RINGSCOPE_MAX_ORDER")) {
    try {
      limits.max_ring_order = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: RINGSCOPE_MAX_ORDER is not a number\n";
      return 2;
    }
  }

  std::string ring_arg, module_arg, kind_arg = "i", dot_path;
  bool json = false, above = false, witnesses = false;
  EnumerationBounds bounds;
  std::vector<std::string> partners;

  auto add_ring = [&](CLI::App* c) {
    c->add_option("ring,--ring", ring_arg, "ring file or corpus name")->required();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--max-rank", bounds.max_free_rank, "largest free rank searched");
    c->add_option("--max-order,--max-module-order", bounds.max_order, "largest module order searched");
  };

  auto* ring_cmd = app.add_subcommand("ring", "ring files");
  ring_cmd->require_subcommand(1);
  auto* show = ring_cmd->add_subcommand("show", "print ring data and the normalized ring file");
  add_ring(show);
  show->add_flag("--json", json, "print the normalized ring file only");

  auto* classify = app.add_subcommand("classify", "ring-level predicates");
  add_ring(classify);
  classify->add_flag("--json", json);

  auto* prof = app.add_subcommand("profile", "injective or projective profile lattice");
  add_ring(prof);
  prof->add_option("--kind", kind_arg, "i or p")->check(CLI::IsMember({"i", "p"}));
  prof->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  prof->add_flag("--json", json);
  prof->add_flag("--witnesses", witnesses, "search modules realising each i-node");
  add_bounds(prof);

  auto* domains = app.add_subcommand("domains", "cyclic fingerprint of a module");
  add_ring(domains);
  domains->add_option("--module", module_arg, "module file")->required();
  domains->add_option("--kind", kind_arg, "i or p")->check(CLI::IsMember({"i", "p"}));
  domains->add_flag("--json", json);

  auto* filters = app.add_subcommand("filters", "enumerate linear filters");
  add_ring(filters);
  filters->add_flag("--above-maximal", above, "only filters containing every maximal right ideal");
  filters->add_flag("--json", json);

  auto* modules = app.add_subcommand("modules", "enumerate modules up to isomorphism");
  add_ring(modules);
  add_bounds(modules);
  modules->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  add_ring(verify);
  add_bounds(verify);
  verify->add_option("--partner", partners, "ring S for the product law (repeatable)");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Loaded l = load_ring(ring_arg, limits);
    const RingPtr& r = l.ring;

    if (show->parsed()) {
      if (!json) std::cout << ring_text(r, limits);
      std::cout << render_ring_file(l.spec);
      return 0;
    }
    if (classify->parsed()) {
      auto c = classify_ring(r, limits);
      if (json)
        emit(classification_json(r, c));
      else
        std::cout << classification_text(r, c);
      return 0;
    }
    if (prof->parsed()) {
      ProfileOptions opts;
      opts.search_witnesses = witnesses;
      opts.bounds = bounds;
      auto p = profile(r, parse_kind(kind_arg), opts, limits);
      if (json)
        emit(profile_json(r, p));
      else
        std::cout << profile_text(r, p);
      if (!dot_path.empty()) write_file(dot_path, profile_dot(p));
      return 0;
    }
    if (domains->parsed()) {
      RightModule m = parse_module_file(read_file(module_arg), r);
      CyclicCatalog cat(r, limits);
      const ProfileKind k = parse_kind(kind_arg);
      auto f = fingerprint(cat, m, k);
      if (json)
        emit(fingerprint_json(cat, f, k));
      else
        std::cout << "module " << describe_module(m) << "\n" << fingerprint_text(cat, f, k);
      return 0;
    }
    if (filters->parsed()) {
      auto fs = all_linear_filters(r, above, limits);
      Json out = Json::array();
      if (!json) std::cout << fs.size() << " linear filters" << (above ? " above the maximal right ideals" : "") << "\n";
      for (const auto& f : fs) {
        auto base = filter_base(r, f, limits);
        const std::string b = base ? format_ideal(*r, *base) : "none";
        if (json)
          out.push_back({{"size", f.size()}, {"eta_of", b}});
        else
          std::cout << "  size " << f.size() << "  = eta(" << b << ")\n";
      }
      if (json) emit(out);
      return 0;
    }
    if (modules->parsed()) {
      auto ms = enumerate_modules(r, bounds, limits);
      Json out = Json::array();
      if (!json)
        std::cout << ms.size() << " modules (rank <= " << bounds.max_free_rank << ", order <= "
                  << bounds.max_order << ")\n";
      for (const auto& m : ms) {
        const bool inj = is_injective(m, limits), proj = is_projective(m, limits);
        const bool ss = is_semisimple_module(m, limits);
        if (json)
          out.push_back({{"module", describe_module(m)},
                         {"order", m.order()},
                         {"injective", inj},
                         {"projective", proj},
                         {"semisimple", ss}});
        else
          std::cout << "  " << describe_module(m) << (inj ? "  injective" : "")
                    << (proj ? "  projective" : "") << (ss ? "  semisimple" : "") << "\n";
      }
      if (json) emit(out);
      return 0;
    }
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.bounds = bounds;
      opts.spec = l.spec;
      for (const auto& p : partners) opts.product_partners.push_back(load_ring(p, limits).spec);
      auto rep = verify_suite(r, opts, limits);
      if (json)
        emit(verify_json(rep));
      else
        std::cout << verify_text(rep);
      return rep.passed() ? 0 : 1;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "property violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
