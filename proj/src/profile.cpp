#include "ringscope/profile.hpp"

#include <algorithm>
#include <functional>

namespace ringscope {

CyclicCatalog::CyclicCatalog(RingPtr r, const Limits& limits)
    : ring_(std::move(r)), limits_(limits), modules_(cyclic_modules_up_to_iso(ring_, limits)) {
  for (const auto& m : modules_) {
    prepared_.emplace_back(m, limits);
    annihilators_.push_back(Submodule{ringscope::annihilator(m)});
    semisimple_.push_back(is_semisimple_module(m, limits));
  }
}

std::optional<std::size_t> CyclicCatalog::find(const RightModule& m) const {
  for (std::size_t i = 0; i < modules_.size(); ++i)
    if (modules_[i].order() == m.order() && is_isomorphic_modules(modules_[i], m, limits_).isomorphic)
      return i;
  return std::nullopt;
}

std::size_t CyclicFingerprint::count() const {
  return static_cast<std::size_t>(std::count(members.begin(), members.end(), true));
}

bool CyclicFingerprint::subset_of(const CyclicFingerprint& other) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] && !other.members[i]) return false;
  return true;
}

std::string kind_name(ProfileKind k) { return k == ProfileKind::i ? "i" : "p"; }

CyclicFingerprint inj_fingerprint(const CyclicCatalog& c, const RightModule& m) {
  CyclicFingerprint f{std::vector<bool>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i)
    f.members[i] = is_relatively_injective(m, c.prepared(i)).holds;
  return f;
}

CyclicFingerprint proj_fingerprint(const CyclicCatalog& c, const RightModule& m) {
  CyclicFingerprint f{std::vector<bool>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i)
    f.members[i] = is_relatively_projective(m, c.prepared(i)).holds;
  return f;
}

CyclicFingerprint fingerprint(const CyclicCatalog& c, const RightModule& m, ProfileKind k) {
  return k == ProfileKind::i ? inj_fingerprint(c, m) : proj_fingerprint(c, m);
}

CyclicFingerprint intersect(const CyclicFingerprint& a, const CyclicFingerprint& b) {
  CyclicFingerprint f{std::vector<bool>(a.members.size())};
  for (std::size_t i = 0; i < f.members.size(); ++i) f.members[i] = a.members[i] && b.members[i];
  return f;
}

CyclicFingerprint killed_by(const CyclicCatalog& c, const RightIdeal& i) {
  CyclicFingerprint f{std::vector<bool>(c.size())};
  for (std::size_t k = 0; k < c.size(); ++k) f.members[k] = c.annihilator(k).contains(i);
  return f;
}

CyclicFingerprint semisimple_cyclics(const CyclicCatalog& c) {
  CyclicFingerprint f{std::vector<bool>(c.size())};
  for (std::size_t k = 0; k < c.size(); ++k) f.members[k] = c.semisimple(k);
  return f;
}

bool is_poor(const CyclicCatalog& c, const RightModule& m, ProfileKind k) {
  return fingerprint(c, m, k) == semisimple_cyclics(c);
}

RightModule top_module(const RingPtr& r, const Limits& limits) {
  return cyclic_module(r, jacobson_radical(r, limits));
}

RightModule sum_of_simples(const CyclicCatalog& c) {
  std::vector<RightModule> simples;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (is_simple_module(c.module(k), c.limits())) simples.push_back(c.module(k));
  if (simples.empty()) return zero_module(c.ring());
  return direct_sum(simples);
}

namespace {

FiniteLattice order_lattice(const std::vector<std::string>& labels,
                            const std::function<bool(std::size_t, std::size_t)>& leq,
                            const char* where) {
  const std::size_t n = labels.size();
  std::vector<bool> order(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) order[a * n + b] = leq(a, b);
  try {
    return build_lattice_from_order(labels, std::move(order));
  } catch (const InvalidInput& e) {
    throw InternalError(std::string(where) + ": " + e.what());
  }
}

void finish(ProfileReport& rep, const IdealLattice& il, const Limits& limits, const char* where) {
  if (!are_isomorphic(rep.lattice, il.lattice, true, limits))
    throw InternalError(std::string(where) +
                        ": profile is not anti-isomorphic to the ideals inside J(R)");
  rep.structure = structure_report(rep.lattice, limits);
  rep.has_middle_class = rep.nodes.size() > 2;
}

std::size_t node_of(const IdealLattice& il, const RightIdeal& i) {
  for (std::size_t k = 0; k < il.ideals.size(); ++k)
    if (il.ideals[k] == i) return k;
  return il.ideals.size();
}

// Injectivity witnesses for every node, from one enumeration.
void attach_i_witnesses(ProfileReport& rep, const CyclicCatalog& c, const EnumerationBounds& b) {
  auto mods = enumerate_modules(c.ring(), b, c.limits());
  std::vector<bool> done(rep.nodes.size(), false);
  for (const auto& m : mods) {
    auto f = inj_fingerprint(c, m);
    for (std::size_t k = 0; k < rep.nodes.size(); ++k)
      if (!done[k] && f == rep.nodes[k].fingerprint) {
        done[k] = true;
        rep.nodes[k].witness = m;
        rep.nodes[k].witness_note = describe_module(m);
      }
  }
  for (std::size_t k = 0; k < rep.nodes.size(); ++k)
    if (!done[k])
      rep.nodes[k].witness_note = "not found among " + std::to_string(mods.size()) +
                                  " modules (rank <= " + std::to_string(b.max_free_rank) +
                                  ", order <= " + std::to_string(b.max_order) + ")";
}

}  // namespace

ProfileReport i_profile(const RingPtr& r, const ProfileOptions& opts, const Limits& limits) {
  const IdealLattice il = ideals_in_radical(r, limits);
  std::vector<LinearFilter> filters = all_linear_filters(r, true, limits);

  std::vector<LinearFilter> structural;
  for (const auto& i : il.ideals) structural.push_back(eta_filter(r, i, limits));
  std::sort(structural.begin(), structural.end());
  if (structural != filters)
    throw InternalError("i_profile: filters containing the maximal right ideals (" +
                        std::to_string(filters.size()) + ") differ from eta(I), I <= J(R) (" +
                        std::to_string(structural.size()) + ")");

  const CyclicCatalog c(r, limits);
  ProfileReport rep;
  rep.kind = ProfileKind::i;
  rep.ring_label = r->label();
  std::vector<std::string> labels;
  for (auto& f : filters) {
    auto base = filter_base(r, f, limits);
    if (!base || node_of(il, *base) == il.ideals.size())
      throw InternalError("i_profile: filter is not eta of an ideal inside J(R)");
    labels.push_back(format_ideal(*r, *base));
    rep.nodes.push_back(ProfileNode{*base, std::move(f), killed_by(c, *base), std::nullopt, ""});
  }
  rep.lattice = order_lattice(
      labels,
      [&](std::size_t a, std::size_t b) {
        const auto& x = rep.nodes[a].filter.members;
        const auto& y = rep.nodes[b].filter.members;
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
      },
      "i_profile");
  finish(rep, il, limits, "i_profile");
  if (opts.search_witnesses) attach_i_witnesses(rep, c, opts.bounds);
  return rep;
}

ProfileReport p_profile(const RingPtr& r, const ProfileOptions& opts, const Limits& limits) {
  (void)opts;
  const IdealLattice il = ideals_in_radical(r, limits);
  const CyclicCatalog c(r, limits);
  ProfileReport rep;
  rep.kind = ProfileKind::p;
  rep.ring_label = r->label();
  std::vector<std::string> labels;
  for (const auto& i : il.ideals) {
    RightModule ri = cyclic_module(r, i);
    CyclicFingerprint f = proj_fingerprint(c, ri);
    if (!(f == killed_by(c, i)))
      throw InternalError("p_profile: projectivity domain of R/I differs from Mod-R/I at I = " +
                          format_ideal(*r, i));
    labels.push_back(format_ideal(*r, i));
    rep.nodes.push_back(ProfileNode{i, eta_filter(r, i, limits), std::move(f), ri, "R/I"});
  }
  rep.lattice = order_lattice(
      labels,
      [&](std::size_t a, std::size_t b) {
        return rep.nodes[a].fingerprint.subset_of(rep.nodes[b].fingerprint);
      },
      "p_profile");
  finish(rep, il, limits, "p_profile");
  return rep;
}

ProfileReport profile(const RingPtr& r, ProfileKind k, const ProfileOptions& opts,
                      const Limits& limits) {
  return k == ProfileKind::i ? i_profile(r, opts, limits) : p_profile(r, opts, limits);
}

bool has_middle_class(const RingPtr& r, ProfileKind k, const Limits& limits) {
  return profile(r, k, {}, limits).has_middle_class;
}

RisesResult rises_bounded(const RightModule& m, const RightModule& n,
                          const EnumerationBounds& bounds, const Limits& limits) {
  const PreparedModule pm(m, limits), pn(n, limits);
  RisesResult res;
  for (const auto& e : enumerate_modules(m.ring_ptr(), bounds, limits)) {
    ++res.searched;
    if (is_relatively_injective(e, pm).holds && !is_relatively_injective(e, pn).holds) {
      res.refuted = true;
      res.witness = e;
      return res;
    }
  }
  return res;
}

WitnessResult find_witness(const CyclicCatalog& c, const RightIdeal& i, ProfileKind k,
                           const EnumerationBounds& bounds) {
  WitnessResult res;
  res.bounds = bounds;
  const CyclicFingerprint target = killed_by(c, i);
  if (k == ProfileKind::p) {
    RightModule ri = cyclic_module(c.ring(), i);
    if (!(proj_fingerprint(c, ri) == target))
      throw InternalError("find_witness: R/I does not realise Mod-R/I");
    res.module = ri;
    res.searched = 1;
    return res;
  }
  for (const auto& m : enumerate_modules(c.ring(), bounds, c.limits())) {
    ++res.searched;
    if (inj_fingerprint(c, m) == target) {
      res.module = m;
      return res;
    }
  }
  return res;
}

}  // namespace ringscope
