#include "ringscope/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ringscope {

bool is_semisimple_ring(const RingPtr& r, const Limits& limits) {
  return jacobson_radical(r, limits).order() == 1;
}

bool is_local(const RingPtr& r, const Limits& limits) {
  std::set<Coords> u;
  for (auto& x : units(*r, limits)) u.insert(std::move(x));
  ModMatrix span(r->characteristic(), r->orders());
  std::uint64_t nonunits = 0;
  for (std::uint64_t k = 0; k < r->order(); ++k) {
    Coords x = r->element(k);
    if (u.count(x)) continue;
    ++nonunits;
    span.append_row(x);
  }
  // the non-units always include 0, so they are closed under addition exactly
  // when they fill their own span
  return span_order(howell_form(span)) == nonunits;
}

bool is_chain_ring(const RingPtr& r, const Limits& limits) {
  auto ideals = right_ideals(r, limits);
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      if (!a.contains(b) && !b.contains(a)) return false;
  return true;
}

bool is_uniform_ring(const RingPtr& r, const Limits& limits) {
  auto ideals = right_ideals(r, limits);
  for (const auto& a : ideals)
    for (const auto& b : ideals)
      if (a.order() > 1 && b.order() > 1 && intersection(a, b).order() == 1) return false;
  return true;
}

bool is_qf(const RingPtr& r, const Limits& limits) {
  return is_injective(regular_module(r), limits);
}

RingPtr factor_ring(const RingPtr& r, const RightIdeal& i) {
  return quotient_ring(*r, i.gens, r->label() + "/" + format_ideal(*r, i)).ring;
}

SuperQfResult is_super_qf(const RingPtr& r, const Limits& limits) {
  for (const auto& i : two_sided_ideals(r, limits)) {
    if (i.order() == r->order()) continue;
    if (!is_qf(factor_ring(r, i), limits)) return SuperQfResult{false, i};
  }
  return {};
}

bool socle_homogeneous(const RightModule& m, const Limits& limits) {
  if (!(socle(m, limits) == whole_submodule(m))) return false;
  std::optional<RightModule> first;
  for (const auto& s : cyclic_submodules(m, limits)) {
    RightModule sm = submodule_module(m, s).module;
    if (!is_simple_module(sm, limits)) continue;
    if (!first)
      first = sm;
    else if (!is_isomorphic_modules(*first, sm, limits).isomorphic)
      return false;
  }
  return true;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {CheckStatus::pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::fail, std::move(d)}; }
Outcome skip(std::string d) { return {CheckStatus::skipped, std::move(d)}; }
Outcome expect(bool ok, std::string failure, std::string success = {}) {
  return ok ? pass(std::move(success)) : fail(std::move(failure));
}

// Ring-level data shared by the checks, computed on first use.
struct Context {
  RingPtr r;
  VerifyOptions opts;
  Limits limits;
  std::optional<CyclicCatalog> catalog_;
  std::optional<ProfileReport> ip_, pp_;
  std::optional<std::vector<RightModule>> modules_;
  std::optional<bool> qf_;

  const CyclicCatalog& catalog() {
    if (!catalog_) catalog_.emplace(r, limits);
    return *catalog_;
  }
  const ProfileReport& ip() {
    if (!ip_) ip_ = i_profile(r, {}, limits);
    return *ip_;
  }
  const ProfileReport& pp() {
    if (!pp_) pp_ = p_profile(r, {}, limits);
    return *pp_;
  }
  const std::vector<RightModule>& modules() {
    if (!modules_) modules_ = enumerate_modules(r, opts.bounds, limits);
    return *modules_;
  }
  bool qf() {
    if (!qf_) qf_ = is_qf(r, limits);
    return *qf_;
  }
  bool semisimple() { return is_semisimple_ring(r, limits); }
  RightIdeal j() { return jacobson_radical(r, limits); }
  // two-sided I with 0 < I < J(R)
  std::optional<RightIdeal> proper_ideal_in_j() {
    auto jr = j();
    for (const auto& i : two_sided_ideals(r, limits))
      if (jr.contains(i) && i.order() > 1 && i.order() < jr.order()) return i;
    return std::nullopt;
  }
  std::string bounds_text() const {
    return "rank <= " + std::to_string(opts.bounds.max_free_rank) +
           ", order <= " + std::to_string(opts.bounds.max_order);
  }
};

std::string lattice_text(const FiniteLattice& l) {
  return std::to_string(l.size()) + " nodes";
}

Outcome v1(Context& c) {
  const auto& ip = c.ip();
  const auto& pp = c.pp();
  if (!are_isomorphic(ip.lattice, pp.lattice, false, c.limits))
    return fail("i-profile (" + lattice_text(ip.lattice) + ") and p-profile (" +
                lattice_text(pp.lattice) + ") are not isomorphic");
  std::set<RightIdeal> a, b;
  for (const auto& n : ip.nodes) a.insert(n.ideal);
  for (const auto& n : pp.nodes) b.insert(n.ideal);
  if (a != b) return fail("profiles are labelled by different ideals");
  return pass(lattice_text(ip.lattice) + "; central idempotents: " +
              std::to_string(central_idempotents(*c.r, c.limits).size()));
}

Outcome v2(Context& c) {
  const auto& cat = c.catalog();
  std::vector<CyclicFingerprint> f;
  for (std::size_t k = 0; k < cat.size(); ++k) f.push_back(inj_fingerprint(cat, cat.module(k)));
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < cat.size(); ++a)
    for (std::size_t b = a; b < cat.size(); ++b) {
      if (cat.module(a).order() * cat.module(b).order() > c.opts.bounds.max_order) continue;
      ++pairs;
      RightModule s = direct_sum({cat.module(a), cat.module(b)});
      if (!(inj_fingerprint(cat, s) == intersect(f[a], f[b])))
        return fail("fingerprint of " + describe_module(s) + " is not the intersection");
    }
  return pass(std::to_string(pairs) + " pairs of cyclic modules");
}

Outcome v3(Context& c) {
  if (c.opts.product_partners.empty()) return skip("no product partners supplied");
  if (!c.opts.spec) return skip("ring spec unavailable");
  std::size_t checked = 0;
  std::string skipped;
  for (const auto& s : c.opts.product_partners) {
    RingPtr sr = ring_from_spec(s, c.limits);
    RingPtr rs = ring_from_spec(product_spec({*c.opts.spec, s}), c.limits);
    for (ProfileKind k : {ProfileKind::i, ProfileKind::p}) {
      const FiniteLattice& mine = k == ProfileKind::i ? c.ip().lattice : c.pp().lattice;
      try {
        auto prod = lattice_product(mine, profile(sr, k, {}, c.limits).lattice, c.limits);
        if (!are_isomorphic(profile(rs, k, {}, c.limits).lattice, prod, false, c.limits))
          return fail(kind_name(k) + "-profile of " + rs->label() + " is not the product");
        ++checked;
      } catch (const BoundExceeded& e) {
        skipped += "; " + kind_name(k) + " x " + sr->label() + " skipped: " + e.what();
      }
    }
  }
  if (checked == 0) return skip(skipped.substr(2));
  return pass(std::to_string(checked) + " products checked" + skipped);
}

Outcome v4(Context& c) {
  for (const ProfileReport* p : {&c.ip(), &c.pp()}) {
    if (!p->structure.modular) return fail(kind_name(p->kind) + "-profile contains a pentagon");
    if (!p->structure.coatomic) return fail(kind_name(p->kind) + "-profile is not coatomic");
  }
  return pass();
}

Outcome v5(Context& c) {
  if (!is_chain_ring(c.r, c.limits)) return skip("not a chain ring");
  const std::size_t ell = right_ideals(c.r, c.limits).size() - 1;
  const auto& s = c.ip().structure;
  if (!s.chain || s.length + 1 != ell)
    return fail("expected a chain of length " + std::to_string(ell - 1) + ", got length " +
                std::to_string(s.length));
  if (s.coatoms.size() == 1) {
    // the coatom is the class of singular modules
    const auto& cat = c.catalog();
    const auto& coatom = c.ip().nodes[s.coatoms[0]].fingerprint;
    for (std::size_t k = 0; k < cat.size(); ++k) {
      const RightModule& m = cat.module(k);
      const bool singular = singular_submodule(m, c.limits) == whole_submodule(m);
      if (singular != coatom.members[k])
        return fail(describe_module(m) + (singular ? " is singular but outside the coatom"
                                                   : " is in the coatom but not singular"));
    }
  }
  return pass("length " + std::to_string(s.length) + " = l(R) - 1");
}

Outcome v6(Context& c) {
  if (!c.qf()) return skip("not QF");
  RingPtr q = factor_ring(c.r, right_socle(c.r, c.limits));
  auto lat = ideal_lattice(q, c.limits).lattice;
  return expect(are_isomorphic(c.ip().lattice, lat, false, c.limits).has_value(),
                "i-profile differs from the ideal lattice of R/Soc(R) (" + lattice_text(lat) +
                    ")",
                "ideals of R/Soc(R): " + lattice_text(lat));
}

Outcome v7(Context& c) {
  const bool criterion = c.proper_ideal_in_j().has_value();
  for (const ProfileReport* p : {&c.ip(), &c.pp()})
    if (p->has_middle_class != criterion)
      return fail(kind_name(p->kind) + "-middle class " +
                  (p->has_middle_class ? "present" : "absent") + " but J(R) " +
                  (criterion ? "contains" : "has no") + " proper nonzero ideal");
  return pass(criterion ? "middle class present" : "no middle class");
}

Outcome v8(Context& c) {
  const auto& cat = c.catalog();
  auto jr = c.j();
  std::size_t n = 0;
  for (const auto& i : two_sided_ideals(c.r, c.limits)) {
    if (!jr.contains(i)) continue;
    ++n;
    if (!(proj_fingerprint(cat, cyclic_module(c.r, i)) == killed_by(cat, i)))
      return fail("projectivity domain of R/I differs from Mod-R/I at I = " +
                  format_ideal(*c.r, i));
  }
  return pass(std::to_string(n) + " ideals");
}

Outcome v9(Context& c) {
  const auto& cat = c.catalog();
  if (!is_poor(cat, top_module(c.r, c.limits), ProfileKind::i)) return fail("R/J(R) is not i-poor");
  if (!is_poor(cat, sum_of_simples(cat), ProfileKind::p))
    return fail("the sum of the simple modules is not p-poor");
  return pass();
}

Outcome v10(Context& c) {
  if (c.semisimple()) return skip("semisimple ring");
  if (!c.ip().structure.chain) return skip("i-profile is not a chain");
  const auto& cat = c.catalog();
  bool found = false;
  for (std::size_t k = 0; k < cat.size() && !found; ++k)
    found = is_simple_module(cat.module(k), c.limits) && is_poor(cat, cat.module(k), ProfileKind::i);
  if (!found) return fail("no simple module is i-poor");
  auto jr = c.j();
  std::vector<RightModule> tops;
  for (const auto& n : c.ip().nodes) tops.push_back(cyclic_module(c.r, n.ideal));
  for (const auto& a : tops)
    for (const auto& b : tops)
      if (!sigma_contains(a, b, c.limits) && !sigma_contains(b, a, c.limits))
        return fail(describe_module(a) + " and " + describe_module(b) +
                    " are sigma-incomparable");
  return pass("simple i-poor module found; R/I pairwise sigma-comparable");
}

Outcome v11(Context& c) {
  if (c.semisimple()) return skip("semisimple ring");
  if (c.ip().has_middle_class) return skip("i-middle class present");
  auto jr = c.j();
  return expect(ideal_product(*c.r, jr, jr).order() == 1, "J(R)^2 != 0");
}

Outcome v12(Context& c) {
  auto sq = is_super_qf(c.r, c.limits);
  if (!c.qf()) return expect(!sq.holds, "super QF but not QF", "not QF, hence not super QF");
  const auto& cat = c.catalog();
  std::optional<RightModule> discrepancy;
  std::size_t n = 0;
  for (const auto& m : c.modules()) {
    ++n;
    if (!(inj_fingerprint(cat, m) == proj_fingerprint(cat, m))) {
      discrepancy = m;
      break;
    }
  }
  if (sq.holds)
    return expect(!discrepancy,
                  "super QF but fingerprints of " + (discrepancy ? describe_module(*discrepancy) : "") +
                      " differ",
                  "super QF; fingerprints agree on " + std::to_string(n) + " modules");
  return expect(discrepancy.has_value(),
                "not super QF (R/I not QF for I = " + format_ideal(*c.r, *sq.ideal) +
                    ") but no discrepancy module within " + c.bounds_text(),
                "not super QF, certificate I = " + format_ideal(*c.r, *sq.ideal) +
                    "; discrepancy at " + describe_module(*discrepancy));
}

Outcome v13(Context& c) {
  std::vector<LinearFilter> all, above;
  try {
    all = all_linear_filters(c.r, false, c.limits);
    above = all_linear_filters(c.r, true, c.limits);
  } catch (const BoundExceeded& e) {
    return skip(e.what());
  }
  std::set<LinearFilter> eta_all, eta_j;
  auto jr = c.j();
  for (const auto& i : two_sided_ideals(c.r, c.limits)) {
    auto f = eta_filter(c.r, i, c.limits);
    if (jr.contains(i)) eta_j.insert(f);
    eta_all.insert(std::move(f));
  }
  if (std::set<LinearFilter>(all.begin(), all.end()) != eta_all)
    return fail(std::to_string(all.size()) + " linear filters but " +
                std::to_string(eta_all.size()) + " two-sided ideals");
  if (std::set<LinearFilter>(above.begin(), above.end()) != eta_j)
    return fail("filters above the maximal right ideals differ from eta(I), I <= J(R)");
  return pass(std::to_string(all.size()) + " filters");
}

Outcome v14(Context& c) {
  if (c.semisimple()) return skip("semisimple ring");
  if (c.ip().has_middle_class) return skip("i-middle class present");
  std::size_t n = 0;
  for (const auto& m : c.modules()) {
    if (is_semisimple_module(m, c.limits) || !is_quasi(m, Kind::injective, c.limits)) continue;
    ++n;
    if (!is_injective(m, c.limits))
      return fail(describe_module(m) + " is quasi-injective but not injective");
  }
  return pass(std::to_string(n) + " non-semisimple quasi-injective modules within " +
              c.bounds_text());
}

Outcome v15(Context& c) {
  if (!is_local(c.r, c.limits)) return skip("not local");
  const bool ideals_chain = structure_report(ideal_lattice(c.r, c.limits).lattice, c.limits).chain;
  return expect(c.ip().structure.chain == ideals_chain,
                std::string("i-profile ") + (c.ip().structure.chain ? "is" : "is not") +
                    " a chain but the ideal lattice " + (ideals_chain ? "is" : "is not"),
                ideals_chain ? "both chains" : "neither is a chain");
}

Outcome v16(Context& c) {
  if (!c.qf()) return skip("not QF");
  if (c.semisimple()) return skip("semisimple ring");
  RingPtr q = factor_ring(c.r, right_socle(c.r, c.limits));
  const bool one = is_semisimple_ring(q, c.limits) && q->order() > 1 &&
                   two_sided_ideals(q, c.limits).size() == 2;
  const bool two = !c.proper_ideal_in_j().has_value();
  const bool three =
      socle_homogeneous(submodule_module(regular_module(c.r), c.j()).module, c.limits);
  auto b = [](bool x) { return x ? "true" : "false"; };
  std::string d = std::string("(1) ") + b(one) + ", (2) " + b(two) + ", (3) " + b(three);
  return expect(one == two && two == three, d, d);
}

Outcome v17(Context& c) {
  if (!is_super_qf(c.r, c.limits).holds) return skip("not super QF");
  std::size_t n = 0;
  for (const auto& i : two_sided_ideals(c.r, c.limits)) {
    if (i.order() == c.r->order() || i.order() == 1) continue;
    ++n;
    RingPtr q = factor_ring(c.r, i);
    if (!is_super_qf(q, c.limits).holds) return fail(q->label() + " is not super QF");
  }
  return pass(std::to_string(n) + " proper factor rings");
}

}  // namespace

VerifyReport verify_suite(const RingPtr& r, const VerifyOptions& opts, const Limits& limits) {
  Context c{r, opts, limits, {}, {}, {}, {}, {}};
  struct Entry {
    const char* id;
    const char* statement;
    Outcome (*run)(Context&);
  };
  static const Entry entries[] = {
      {"V1", "i-profile (filter route) and p-profile (witness route) are isomorphic", v1},
      {"V2", "In^-1(A + B) = In^-1(A) cap In^-1(B) on cyclic pairs", v2},
      {"V3", "profile(R x S) = profile(R) x profile(S)", v3},
      {"V4", "profiles are modular and coatomic", v4},
      {"V5", "chain ring: i-profile is a chain of length l(R) - 1", v5},
      {"V6", "QF ring: i-profile is the ideal lattice of R/Soc(R)", v6},
      {"V7", "middle class iff J(R) contains a proper nonzero ideal", v7},
      {"V8", "Pr^-1(R/I) = Mod-R/I for every ideal I <= J(R)", v8},
      {"V9", "R/J(R) is i-poor and the sum of simples is p-poor", v9},
      {"V10", "chain i-profile: a simple module is i-poor and R/I are sigma-comparable", v10},
      {"V11", "no i-middle class: J(R)^2 = 0", v11},
      {"V12", "super QF iff every factor ring is QF, with fingerprint spot check", v12},
      {"V13", "linear filters are exactly eta(I), I two-sided", v13},
      {"V14", "no i-middle class: quasi-injective non-semisimple modules are injective", v14},
      {"V15", "local ring: i-profile is a chain iff the ideal lattice is", v15},
      {"V16", "QF ring: R/Soc(R) simple iff J(R) has no proper ideals iff J(R) homogeneous", v16},
      {"V17", "super QF: every factor ring is super QF", v17},
  };
  VerifyReport rep;
  rep.ring_label = r->label();
  for (const auto& e : entries) {
    CheckResult res{e.id, e.statement, CheckStatus::skipped, ""};
    try {
      Outcome o = e.run(c);
      res.status = o.status;
      res.detail = std::move(o.detail);
    } catch (const BoundExceeded& ex) {
      res.status = CheckStatus::skipped;
      res.detail = std::string("bound exceeded: ") + ex.what();
    } catch (const InternalError& ex) {
      res.status = CheckStatus::fail;
      res.detail = ex.what();
    }
    rep.checks.push_back(std::move(res));
  }
  return rep;
}

}  // namespace ringscope
