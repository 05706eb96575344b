#include "ringscope/hom.hpp"

namespace ringscope {

HomGroup::HomGroup(RightModule source, RightModule target, ModMatrix basis)
    : source_(std::move(source)), target_(std::move(target)), basis_(std::move(basis)) {}

std::vector<Int> HomGroup::ambient_moduli() const {
  std::vector<Int> moduli;
  for (std::size_t p = 0; p < source_.rank(); ++p)
    moduli.insert(moduli.end(), target_.orders().begin(), target_.orders().end());
  return moduli;
}

ModuleMap HomGroup::to_map(std::span<const Int> flat) const {
  const std::size_t rb = target_.rank();
  ModMatrix m(source_.modulus(), target_.orders());
  for (std::size_t p = 0; p < source_.rank(); ++p) m.append_row(flat.subspan(p * rb, rb));
  return ModuleMap{source_, target_, std::move(m)};
}

Coords HomGroup::flatten(const ModuleMap& f) const { return f.matrix.data(); }

std::vector<ModuleMap> HomGroup::generators() const {
  std::vector<ModuleMap> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) out.push_back(to_map(basis_.row(i)));
  return out;
}

// Unknown X in B^rank(A), row p = image of e_p. Constraints: ord(e_p) X_p = 0
// and (e_p g) X = X_p g for each algebra generator g.
HomGroup hom_group(const RightModule& a, const RightModule& b) {
  if (!(a.ring() == b.ring())) throw InvalidInput("hom_group: modules over different rings");
  const std::size_t ra = a.rank(), rb = b.rank();
  const Int n = a.modulus();
  std::vector<Int> domain;
  for (std::size_t p = 0; p < ra; ++p)
    domain.insert(domain.end(), b.orders().begin(), b.orders().end());
  if (domain.empty()) return HomGroup(a, b, ModMatrix(n, domain));

  const auto& gens = a.ring().algebra_generators();
  const std::size_t blocks = ra * (1 + gens.size());
  std::vector<Int> target;
  for (std::size_t k = 0; k < blocks; ++k)
    target.insert(target.end(), b.orders().begin(), b.orders().end());
  ModMatrix images(n, target);
  Coords row(target.size());
  for (std::size_t p = 0; p < ra; ++p)
    for (std::size_t q = 0; q < rb; ++q) {
      std::fill(row.begin(), row.end(), 0);
      row[p * rb + q] = a.orders()[p];
      Coords eq = b.basis(q);
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const ModMatrix& ag = a.action(gens[gi]);
        Coords eqg = b.act_generator(eq, gens[gi]);
        for (std::size_t p2 = 0; p2 < ra; ++p2) {
          std::size_t off = ((1 + gi) * ra + p2) * rb;
          row[off + q] += ag(p2, p);
          if (p2 == p)
            for (std::size_t c = 0; c < rb; ++c) row[off + c] -= eqg[c];
        }
      }
      images.append_row(row);
    }
  return HomGroup(a, b, kernel_of_map(domain, images));
}

std::vector<ModuleMap> hom_basis(const RightModule& a, const RightModule& b) {
  return hom_group(a, b).generators();
}

PreparedModule::PreparedModule(RightModule n, const Limits& limits) : n_(std::move(n)) {
  for (auto& s : submodules(n_, limits)) {
    SubmoduleModule sm = submodule_module(n_, s);
    QuotientModule q = quotient_module(n_, s);
    frames_.push_back(Frame{std::move(s), std::move(sm.module), std::move(sm.inclusion),
                            std::move(q.module), std::move(q.projection)});
  }
}

namespace {

// Howell span of the images of the basis of h under a linear map on maps.
template <typename F>
ModMatrix image_span(const HomGroup& h, const std::vector<Int>& moduli, F&& transform) {
  ModMatrix out(h.source().modulus(), moduli);
  for (const auto& f : h.generators()) out.append_row(transform(f).matrix.data());
  return howell_form(out);
}

std::optional<Coords> outside(const ModMatrix& span, const HomGroup& h) {
  for (std::size_t i = 0; i < h.basis().rows(); ++i)
    if (!in_span(span, h.basis().row(i))) return h.basis().row_vector(i);
  return std::nullopt;
}

}  // namespace

InjectivityResult is_relatively_injective(const RightModule& m, const PreparedModule& n) {
  const HomGroup hn = hom_group(n.module(), m);
  const std::uint64_t whole = n.module().order();
  for (const auto& fr : n.frames()) {
    if (fr.sub.gens.empty() || fr.sub.order() == whole) continue;
    HomGroup hk = hom_group(fr.as_module, m);
    if (hk.order() == 1) continue;
    ModMatrix restricted = image_span(hn, hk.ambient_moduli(), [&](const ModuleMap& f) {
      return compose(fr.inclusion, f);
    });
    if (span_order(restricted) < hk.order()) {
      auto phi = outside(restricted, hk);
      return InjectivityResult{false, fr.sub, hk.to_map(*phi)};
    }
  }
  return {};
}

InjectivityResult is_relatively_injective(const RightModule& m, const RightModule& n,
                                          const Limits& limits) {
  return is_relatively_injective(m, PreparedModule(n, limits));
}

ProjectivityResult is_relatively_projective(const RightModule& m, const PreparedModule& n) {
  const HomGroup hn = hom_group(m, n.module());
  const std::uint64_t whole = n.module().order();
  for (const auto& fr : n.frames()) {
    if (fr.sub.gens.empty() || fr.sub.order() == whole) continue;
    HomGroup hq = hom_group(m, fr.quotient);
    if (hq.order() == 1) continue;
    ModMatrix lifted = image_span(hn, hq.ambient_moduli(), [&](const ModuleMap& f) {
      return compose(f, fr.projection);
    });
    if (span_order(lifted) < hq.order()) {
      auto psi = outside(lifted, hq);
      return ProjectivityResult{false, fr.sub, hq.to_map(*psi)};
    }
  }
  return {};
}

ProjectivityResult is_relatively_projective(const RightModule& m, const RightModule& n,
                                            const Limits& limits) {
  return is_relatively_projective(m, PreparedModule(n, limits));
}

bool is_injective(const RightModule& m, const Limits& limits) {
  return is_relatively_injective(m, regular_module(m.ring_ptr()), limits).holds;
}

// M finite gives an epimorphism R^k -> M. If M is R-projective it is
// R^k-projective (finite direct sums stay in the projectivity domain), so the
// identity of M lifts along R^k -> M, the epimorphism splits and M is a
// summand of R^k. The converse is clear.
bool is_projective(const RightModule& m, const Limits& limits) {
  return is_relatively_projective(m, regular_module(m.ring_ptr()), limits).holds;
}

bool is_quasi(const RightModule& m, Kind kind, const Limits& limits) {
  return kind == Kind::injective ? is_relatively_injective(m, m, limits).holds
                                 : is_relatively_projective(m, m, limits).holds;
}

Submodule trace(const std::vector<RightModule>& sources, const RightModule& target) {
  ModMatrix span = target.empty_span();
  for (const auto& s : sources)
    for (const auto& f : hom_basis(s, target))
      for (std::size_t i = 0; i < f.matrix.rows(); ++i) span.append_row(f.matrix.row(i));
  return {howell_form(span)};
}

}  // namespace ringscope
