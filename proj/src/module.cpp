#include "ringscope/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ringscope/hom.hpp"
#include "ringscope/ideals.hpp"

namespace ringscope {

RightModule::RightModule(RingPtr ring, std::vector<Int> orders,
                         std::vector<ModMatrix> action) {
  if (!ring) throw InvalidInput("module: missing ring");
  const Int n = ring->characteristic();
  if (action.size() != ring->rank())
    throw InvalidInput("module: need one action matrix per ring generator");
  for (Int m : orders)
    if (m < 2 || n % m != 0)
      throw InvalidInput("module: generator orders must be > 1 and divide the characteristic");
  for (auto& a : action) {
    if (a.rows() != orders.size() || a.col_moduli() != orders || a.modulus() != n)
      throw InvalidInput("module: action matrix has the wrong shape");
  }
  data_ = std::make_shared<const Data>(Data{std::move(ring), std::move(orders), std::move(action)});
}

bool operator==(const RightModule& a, const RightModule& b) {
  if (a.data_ == b.data_) return true;
  if (!a.data_ || !b.data_) return false;
  return (a.data_->ring == b.data_->ring || *a.data_->ring == *b.data_->ring) &&
         a.data_->orders == b.data_->orders && a.data_->action == b.data_->action;
}

Coords RightModule::basis(std::size_t i) const {
  Coords x = zero();
  x[i] = 1;
  return x;
}

Coords RightModule::reduce(Coords x) const {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(x[k], orders()[k]);
  return x;
}

Coords RightModule::add(const Coords& a, const Coords& b) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(a[k] + b[k], orders()[k]);
  return x;
}

Coords RightModule::scale(const Coords& a, Int c) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod(a[k] * c, orders()[k]);
  return x;
}

Coords RightModule::act_generator(const Coords& x, std::size_t g) const {
  return vec_mat(x, action(g));
}

Coords RightModule::act(const Coords& x, const Coords& r) const {
  Coords y = zero();
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) y = add(y, scale(act_generator(x, j), r[j]));
  return y;
}

Coords RightModule::element(std::uint64_t index) const {
  Coords x(rank());
  for (std::size_t k = 0; k < x.size(); ++k) {
    auto m = static_cast<std::uint64_t>(orders()[k]);
    x[k] = static_cast<Int>(index % m);
    index /= m;
  }
  return x;
}

ModMatrix RightModule::full_span() const {
  ModMatrix m = empty_span();
  for (std::size_t i = 0; i < rank(); ++i) m.append_row(basis(i));
  return m;
}

std::optional<ActionViolation> verify_module(const RightModule& m) {
  const FiniteRing& r = m.ring();
  for (std::size_t p = 0; p < m.rank(); ++p) {
    Coords e = m.basis(p);
    for (std::size_t j = 0; j < r.rank(); ++j) {
      Coords y = m.act_generator(e, j);
      if (m.scale(y, m.orders()[p]) != m.zero())
        return ActionViolation{"action of generator " + std::to_string(j) +
                               " is not well defined on basis element " +
                               std::to_string(p)};
      if (m.scale(y, r.orders()[j]) != m.zero())
        return ActionViolation{"order of ring generator " + std::to_string(j) +
                               " does not kill its action"};
    }
    if (m.act(e, r.one()) != e)
      return ActionViolation{"the identity does not act as the identity"};
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j)
        if (m.act_generator(m.act_generator(e, i), j) != m.act(e, r.mul(i, j)))
          return ActionViolation{"action is not associative at generators (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")"};
  }
  return std::nullopt;
}

RightModule make_module(RingPtr ring, std::vector<Int> orders,
                        std::vector<ModMatrix> action) {
  RightModule m(std::move(ring), std::move(orders), std::move(action));
  if (auto v = verify_module(m)) throw InvalidInput("module: " + v->message);
  return m;
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  return ModuleMap{first.source, second.target, mat_mul(first.matrix, second.matrix)};
}

ModuleMap identity_map(const RightModule& m) { return ModuleMap{m, m, m.full_span()}; }

ModuleMap zero_map(const RightModule& a, const RightModule& b) {
  ModMatrix z(a.modulus(), b.orders());
  for (std::size_t i = 0; i < a.rank(); ++i) z.append_row(b.zero());
  return ModuleMap{a, b, z};
}

bool is_module_map(const ModuleMap& f) {
  const auto& a = f.source;
  const auto& b = f.target;
  if (f.matrix.rows() != a.rank() || f.matrix.col_moduli() != b.orders()) return false;
  for (std::size_t p = 0; p < a.rank(); ++p) {
    Coords img = f.matrix.row_vector(p);
    if (b.scale(img, a.orders()[p]) != b.zero()) return false;
    for (std::size_t g = 0; g < a.ring().rank(); ++g)
      if (f.apply(a.act_generator(a.basis(p), g)) != b.act_generator(img, g)) return false;
  }
  return true;
}

bool Submodule::contains(const Submodule& other) const {
  for (std::size_t i = 0; i < other.gens.rows(); ++i)
    if (!in_span(gens, other.gens.row(i))) return false;
  return true;
}

Submodule zero_submodule(const RightModule& m) { return {m.empty_span()}; }
Submodule whole_submodule(const RightModule& m) { return {howell_form(m.full_span())}; }

Submodule generated_submodule(const RightModule& m, const std::vector<Coords>& xs) {
  ModMatrix s = howell_form(ModMatrix(m.modulus(), m.orders(), xs));
  const auto& gens = m.ring().algebra_generators();
  while (true) {
    ModMatrix next = s;
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t g : gens) next.append_row(vec_mat(s.row(i), m.action(g)));
    next = howell_form(next);
    if (next == s) return {s};
    s = std::move(next);
  }
}

Submodule cyclic_submodule(const RightModule& n, const Coords& x) {
  return generated_submodule(n, {x});
}

Submodule sum(const Submodule& a, const Submodule& b) { return {sum_spans(a.gens, b.gens)}; }
Submodule intersection(const Submodule& a, const Submodule& b) {
  return {intersect_spans(a.gens, b.gens)};
}

bool is_submodule(const RightModule& m, const ModMatrix& gens) {
  ModMatrix h = howell_form(gens);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t g = 0; g < m.ring().rank(); ++g)
      if (!in_span(h, vec_mat(h.row(i), m.action(g)))) return false;
  return true;
}

// ---------------------------------------------------------------------------

RightModule regular_module(RingPtr r) {
  std::vector<ModMatrix> action;
  for (std::size_t j = 0; j < r->rank(); ++j)
    action.push_back(r->right_multiplication(r->generator(j)));
  auto orders = r->orders();
  return RightModule(std::move(r), std::move(orders), std::move(action));
}

RightModule zero_module(RingPtr r) {
  std::vector<ModMatrix> action(r->rank(), ModMatrix(r->characteristic(), {}));
  return RightModule(std::move(r), {}, std::move(action));
}

QuotientModule quotient_module(const RightModule& n, const Submodule& k) {
  if (k.gens.col_moduli() != n.orders() || !is_submodule(n, k.gens))
    throw InvalidInput("quotient_module: not a submodule");
  const std::size_t t = n.rank();
  std::vector<Coords> rels;
  for (std::size_t i = 0; i < t; ++i) {
    Coords e(t, 0);
    e[i] = n.orders()[i];
    rels.push_back(std::move(e));
  }
  for (auto& row : k.gens.to_rows()) rels.push_back(std::move(row));
  GroupPresentation pres = present_quotient(n.modulus(), t, rels);
  std::vector<Coords> lifts;
  for (const auto& l : pres.lifts) lifts.push_back(n.reduce(l));
  std::vector<ModMatrix> action;
  for (std::size_t g = 0; g < n.ring().rank(); ++g) {
    ModMatrix a(n.modulus(), pres.moduli);
    for (const auto& l : lifts) a.append_row(pres.project(n.act_generator(l, g)));
    action.push_back(std::move(a));
  }
  RightModule q(n.ring_ptr(), pres.moduli, std::move(action));
  ModMatrix proj(n.modulus(), pres.moduli);
  for (std::size_t i = 0; i < t; ++i) proj.append_row(pres.projection.row(i));
  return QuotientModule{q, ModuleMap{n, q, std::move(proj)}};
}

SubmoduleModule submodule_module(const RightModule& n, const Submodule& k) {
  const ModMatrix& h = k.gens;
  const std::size_t s = h.rows();
  const Int modulus = n.modulus();
  ModMatrix rel = kernel_of_map(std::vector<Int>(s, modulus), h);
  GroupPresentation pres = present_quotient(modulus, s, rel.to_rows());
  std::vector<Coords> elems;
  for (const auto& l : pres.lifts) elems.push_back(vec_mat(l, h));
  std::vector<ModMatrix> action;
  for (std::size_t g = 0; g < n.ring().rank(); ++g) {
    ModMatrix a(modulus, pres.moduli);
    for (const auto& e : elems) {
      auto c = express_in_span(h, n.act_generator(e, g));
      if (!c) throw InvalidInput("submodule_module: not a submodule");
      a.append_row(pres.project(*c));
    }
    action.push_back(std::move(a));
  }
  RightModule m(n.ring_ptr(), pres.moduli, std::move(action));
  ModMatrix inc(modulus, n.orders());
  for (const auto& e : elems) inc.append_row(e);
  return SubmoduleModule{m, ModuleMap{m, n, std::move(inc)}};
}

RightModule cyclic_module(RingPtr r, const Submodule& right_ideal) {
  return quotient_module(regular_module(std::move(r)), right_ideal).module;
}

RightModule direct_sum(const std::vector<RightModule>& summands) {
  if (summands.empty()) throw InvalidInput("direct_sum: no summands");
  RingPtr r = summands.front().ring_ptr();
  std::vector<Int> orders;
  for (const auto& m : summands) {
    if (!(m.ring() == *r)) throw InvalidInput("direct_sum: modules over different rings");
    orders.insert(orders.end(), m.orders().begin(), m.orders().end());
  }
  std::vector<ModMatrix> action;
  for (std::size_t g = 0; g < r->rank(); ++g) {
    ModMatrix a(r->characteristic(), orders);
    std::size_t off = 0;
    for (const auto& m : summands) {
      for (std::size_t i = 0; i < m.rank(); ++i) {
        Coords row(orders.size(), 0);
        auto src = m.action(g).row(i);
        std::copy(src.begin(), src.end(), row.begin() + static_cast<std::ptrdiff_t>(off));
        a.append_row(row);
      }
      off += m.rank();
    }
    action.push_back(std::move(a));
  }
  return RightModule(r, std::move(orders), std::move(action));
}

RightModule quotient_of_free(RingPtr r, std::size_t rank,
                             const std::vector<Coords>& relations) {
  if (rank == 0) return zero_module(r);
  RightModule f = direct_sum(std::vector<RightModule>(rank, regular_module(r)));
  for (const auto& rel : relations)
    if (rel.size() != f.rank())
      throw InvalidInput("quotient_of_free: relation has wrong length");
  return quotient_module(f, generated_submodule(f, relations)).module;
}

// ---------------------------------------------------------------------------

std::vector<Submodule> cyclic_submodules(const RightModule& n, const Limits& limits) {
  if (n.order() > limits.max_module_order)
    throw BoundExceeded("module of order " + std::to_string(n.order()) +
                        " exceeds the submodule enumeration bound " +
                        std::to_string(limits.max_module_order));
  std::set<Submodule> found;
  for (std::uint64_t i = 0; i < n.order(); ++i) found.insert(cyclic_submodule(n, n.element(i)));
  return {found.begin(), found.end()};
}

std::vector<Submodule> submodules(const RightModule& n, const Limits& limits) {
  auto cyclics = cyclic_submodules(n, limits);
  std::set<Submodule> all(cyclics.begin(), cyclics.end());
  std::vector<Submodule> queue(cyclics.begin(), cyclics.end());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Submodule a = queue[head];
    for (const auto& c : cyclics) {
      if (a.contains(c)) continue;
      Submodule s = sum(a, c);
      if (all.insert(s).second) {
        queue.push_back(s);
        if (all.size() > limits.max_candidates)
          throw BoundExceeded("submodule enumeration exceeded the candidate ceiling");
      }
    }
  }
  return {all.begin(), all.end()};
}

namespace {

std::vector<Submodule> minimal_submodules(const std::vector<Submodule>& cyclics) {
  std::vector<Submodule> out;
  for (const auto& c : cyclics) {
    if (c.order() == 1) continue;
    bool minimal = true;
    for (const auto& d : cyclics)
      if (d.order() > 1 && d.order() < c.order() && c.contains(d)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace

Submodule socle(const RightModule& m, const Limits& limits) {
  Submodule s = zero_submodule(m);
  for (const auto& c : minimal_submodules(cyclic_submodules(m, limits))) s = sum(s, c);
  return s;
}

SocleSeries socle_series(const RightModule& m, const Limits& limits) {
  SocleSeries out;
  Submodule cur = zero_submodule(m);
  Submodule whole = whole_submodule(m);
  out.chain.push_back(cur);
  while (!(cur == whole)) {
    QuotientModule q = quotient_module(m, cur);
    Submodule s = socle(q.module, limits);
    Submodule next{preimage_of_span(m.orders(), q.projection.matrix, s.gens)};
    if (next == cur) throw InternalError("socle_series: socle of a nonzero module is zero");
    out.chain.push_back(next);
    cur = std::move(next);
  }
  out.loewy_length = out.chain.size() - 1;
  return out;
}

Submodule module_times(const RightModule& m, const Submodule& sub, const ModMatrix& ideal) {
  std::vector<Coords> xs;
  for (std::size_t i = 0; i < sub.gens.rows(); ++i)
    for (std::size_t j = 0; j < ideal.rows(); ++j)
      xs.push_back(m.act(sub.gens.row_vector(i), ideal.row_vector(j)));
  return generated_submodule(m, xs);
}

Submodule radical(const RightModule& m, const Limits& limits) {
  return module_times(m, whole_submodule(m), jacobson_radical(m.ring_ptr(), limits).gens);
}

std::vector<Submodule> radical_series(const RightModule& m, const Limits& limits) {
  const ModMatrix j = jacobson_radical(m.ring_ptr(), limits).gens;
  std::vector<Submodule> out{whole_submodule(m)};
  while (!out.back().gens.empty()) {
    Submodule next = module_times(m, out.back(), j);
    if (next == out.back()) throw InternalError("radical_series: J does not act nilpotently");
    out.push_back(std::move(next));
  }
  return out;
}

// Over a right artinian ring a right ideal is essential iff it contains
// Soc(R_R), so Z(M) = {x : x Soc(R) = 0}.
Submodule singular_submodule(const RightModule& m, const Limits& limits) {
  const ModMatrix s = right_socle(m.ring_ptr(), limits).gens;
  std::vector<Int> moduli;
  for (std::size_t i = 0; i < s.rows(); ++i)
    moduli.insert(moduli.end(), m.orders().begin(), m.orders().end());
  ModMatrix images(m.modulus(), moduli);
  for (std::size_t p = 0; p < m.rank(); ++p) {
    Coords row;
    for (std::size_t i = 0; i < s.rows(); ++i) {
      Coords y = m.act(m.basis(p), s.row_vector(i));
      row.insert(row.end(), y.begin(), y.end());
    }
    images.append_row(row);
  }
  return {kernel_of_map(m.orders(), images)};
}

bool is_semisimple_module(const RightModule& m, const Limits& limits) {
  return socle(m, limits) == whole_submodule(m);
}

bool is_simple_module(const RightModule& m, const Limits& limits) {
  if (m.is_zero()) return false;
  if (m.order() > limits.max_module_order)
    throw BoundExceeded("is_simple_module: module too large");
  Submodule whole = whole_submodule(m);
  for (std::uint64_t i = 1; i < m.order(); ++i)
    if (!(cyclic_submodule(m, m.element(i)) == whole)) return false;
  return true;
}

ModMatrix element_annihilator(const RightModule& m, const Coords& x) {
  const FiniteRing& r = m.ring();
  ModMatrix images(m.modulus(), m.orders());
  for (std::size_t j = 0; j < r.rank(); ++j) images.append_row(m.act_generator(x, j));
  return kernel_of_map(r.orders(), images);
}

ModMatrix annihilator(const RightModule& m) {
  const FiniteRing& r = m.ring();
  std::vector<Int> moduli;
  for (std::size_t p = 0; p < m.rank(); ++p)
    moduli.insert(moduli.end(), m.orders().begin(), m.orders().end());
  ModMatrix images(m.modulus(), moduli);
  for (std::size_t j = 0; j < r.rank(); ++j) {
    Coords row;
    for (std::size_t p = 0; p < m.rank(); ++p) {
      auto a = m.action(j).row(p);
      row.insert(row.end(), a.begin(), a.end());
    }
    images.append_row(row);
  }
  return kernel_of_map(r.orders(), images);
}

ModuleInvariants module_invariants(const RightModule& m) {
  ModuleInvariants inv;
  inv.order = m.order();
  inv.elementary_divisors = elementary_divisors(m.orders());
  inv.annihilator = annihilator(m);
  for (std::size_t g : m.ring().algebra_generators())
    inv.kernel_orders.push_back(span_order(kernel_of_map(m.orders(), m.action(g))));
  return inv;
}

IsomorphismResult is_isomorphic_modules(const RightModule& a, const RightModule& b,
                                        const Limits& limits) {
  if (!(a.ring() == b.ring())) throw InvalidInput("is_isomorphic_modules: different rings");
  if (a.order() != b.order() || !(module_invariants(a) == module_invariants(b)))
    return {};
  if (a.is_zero()) return {true, zero_map(a, b)};
  HomGroup h = hom_group(a, b);
  const std::uint64_t target = b.order();
  auto bijective = [&](const Coords& flat) {
    return span_order(h.to_map(flat).image()) == target;
  };
  for (std::size_t i = 0; i < h.basis().rows(); ++i)
    if (bijective(h.basis().row_vector(i))) return {true, h.to_map(h.basis().row(i))};
  // random combinations of the basis find a unit quickly when End is local
  std::mt19937_64 rng(0x5eed);
  const auto moduli = h.ambient_moduli();
  for (int trial = 0; trial < 64 && h.basis().rows() > 1; ++trial) {
    Coords flat(moduli.size(), 0);
    for (std::size_t i = 0; i < h.basis().rows(); ++i) {
      Int c = static_cast<Int>(rng() % static_cast<std::uint64_t>(a.modulus()));
      auto row = h.basis().row(i);
      for (std::size_t k = 0; k < flat.size(); ++k)
        flat[k] = mod(flat[k] + c * row[k], moduli[k]);
    }
    if (bijective(flat)) return {true, h.to_map(flat)};
  }
  if (h.order() > limits.max_hom_exhaust)
    throw BoundExceeded("is_isomorphic_modules: Hom group too large to exhaust");
  if (auto f = find_span_element(h.basis(), bijective)) return {true, h.to_map(*f)};
  return {};
}

namespace {

struct IsoClassifier {
  const Limits& limits;
  std::vector<std::pair<ModuleInvariants, std::vector<std::size_t>>> buckets;
  std::vector<RightModule> reps;

  // Returns the index of the class of m, adding it when new.
  std::pair<std::size_t, bool> classify(const RightModule& m) {
    ModuleInvariants inv = module_invariants(m);
    for (auto& [key, members] : buckets) {
      if (!(key == inv)) continue;
      for (std::size_t idx : members)
        if (is_isomorphic_modules(reps[idx], m, limits).isomorphic) return {idx, false};
      members.push_back(reps.size());
      reps.push_back(m);
      return {reps.size() - 1, true};
    }
    buckets.push_back({std::move(inv), {reps.size()}});
    reps.push_back(m);
    return {reps.size() - 1, true};
  }
};

}  // namespace

std::vector<RightModule> cyclic_modules_up_to_iso(RingPtr r, const Limits& limits) {
  RightModule reg = regular_module(r);
  auto ideals = submodules(reg, limits);
  IsoClassifier iso{limits, {}, {}};
  for (auto it = ideals.rbegin(); it != ideals.rend(); ++it)
    iso.classify(quotient_module(reg, *it).module);
  std::vector<RightModule> out = iso.reps;
  std::stable_sort(out.begin(), out.end(), [](const RightModule& x, const RightModule& y) {
    return x.order() < y.order();
  });
  return out;
}

std::vector<RightModule> enumerate_modules(RingPtr r, const EnumerationBounds& bounds,
                                           const Limits& limits) {
  if (bounds.max_free_rank == 0) return {zero_module(r)};
  RightModule reg = regular_module(r);
  RightModule free = direct_sum(std::vector<RightModule>(bounds.max_free_rank, reg));

  std::vector<RightModule> simples;
  {
    IsoClassifier iso{limits, {}, {}};
    for (const auto& c : cyclic_modules_up_to_iso(r, limits))
      if (is_simple_module(c, limits)) iso.classify(c);
    simples = iso.reps;
  }

  // Top-down search: every submodule of finite index is reached from the
  // whole module through a chain of maximal submodules, and indices only grow
  // along such a chain.
  const std::uint64_t total = free.order();
  std::set<ModMatrix> visited;
  std::vector<Submodule> stack{whole_submodule(free)};
  visited.insert(stack.front().gens);
  std::vector<Submodule> found;
  while (!stack.empty()) {
    Submodule l = std::move(stack.back());
    stack.pop_back();
    found.push_back(l);
    if (l.order() == 1) continue;
    SubmoduleModule lm = submodule_module(free, l);
    for (const auto& s : simples) {
      if (total / (l.order() / s.order()) > bounds.max_order) continue;
      HomGroup h = hom_group(lm.module, s);
      if (h.order() > limits.max_hom_exhaust)
        throw BoundExceeded("enumerate_modules: Hom group too large to exhaust");
      for_each_span_element(h.basis(), [&](const Coords& flat) {
        ModuleMap f = h.to_map(flat);
        ModMatrix ker = f.kernel();
        if (span_order(ker) == lm.module.order()) return;
        Submodule child{howell_form(mat_mul(ker, lm.inclusion.matrix))};
        if (child.order() == l.order()) return;
        if (visited.insert(child.gens).second) {
          if (visited.size() > limits.max_candidates)
            throw BoundExceeded("enumerate_modules: candidate ceiling exceeded");
          stack.push_back(std::move(child));
        }
      });
    }
  }
  std::sort(found.begin(), found.end(), [](const Submodule& x, const Submodule& y) {
    return y < x;  // large submodules (small quotients) first
  });
  IsoClassifier iso{limits, {}, {}};
  for (const auto& l : found) iso.classify(quotient_module(free, l).module);
  std::vector<RightModule> out = iso.reps;
  std::stable_sort(out.begin(), out.end(), [](const RightModule& x, const RightModule& y) {
    return x.order() < y.order();
  });
  return out;
}

std::string describe_module(const RightModule& m) {
  std::ostringstream os;
  os << "order " << m.order() << ", group ";
  if (m.is_zero()) {
    os << "0";
  } else {
    for (std::size_t i = 0; i < m.rank(); ++i) os << (i ? " + " : "") << "Z/" << m.orders()[i];
  }
  return os.str();
}

}  // namespace ringscope
