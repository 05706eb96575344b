#include "ringscope/exactla.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ringscope/errors.hpp"

namespace ringscope {

Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

namespace {

struct Bezout {
  Int g, s, t;  // s*a + t*b = g
};

Bezout ext_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

// A unit u of Z/n with u*a = gcd(a, n) mod n, for 0 < a < n.
Int unit_normalizer(Int a, Int n) {
  Int g = gcd(a, n);
  Int a1 = a / g, n1 = n / g;
  Bezout e = ext_gcd(mod(a1, n1), n1);
  Int u = mod(e.s, n1);
  while (gcd(u, n) != 1) u += n1;
  return u;
}

void axpy(Coords& y, Int c, const Coords& x, Int n, std::size_t from = 0) {
  if (c == 0) return;
  for (std::size_t k = from; k < y.size(); ++k) y[k] = mod(y[k] + c * x[k], n);
}

bool is_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

// Howell basis of a span over a single modulus n.
struct Echelon {
  Int n = 1;
  std::vector<Coords> rows;
  std::vector<std::size_t> pivot_col;
};

Echelon echelonize(Int n, std::size_t cols, std::vector<Coords> work) {
  Echelon out;
  out.n = n;
  std::erase_if(work, is_zero);
  for (std::size_t col = 0; col < cols && !work.empty(); ++col) {
    auto first = std::find_if(work.begin(), work.end(),
                              [col](const Coords& r) { return r[col] != 0; });
    if (first == work.end()) continue;
    std::iter_swap(work.begin(), first);
    Coords& piv = work.front();
    for (std::size_t i = 1; i < work.size(); ++i) {
      Int b = work[i][col];
      if (b == 0) continue;
      Int a = piv[col];
      Bezout e = ext_gcd(a, b);
      Int ag = a / e.g, bg = b / e.g;
      for (std::size_t k = col; k < cols; ++k) {
        Int p = piv[k], q = work[i][k];
        piv[k] = mod(e.s * p + e.t * q, n);
        work[i][k] = mod(-bg * p + ag * q, n);
      }
    }
    Int u = unit_normalizer(piv[col], n);
    for (std::size_t k = col; k < cols; ++k) piv[k] = mod(piv[k] * u, n);
    Int g = piv[col];
    Coords saturated = piv;
    for (std::size_t k = col; k < cols; ++k)
      saturated[k] = mod(saturated[k] * (n / g), n);
    out.rows.push_back(std::move(piv));
    out.pivot_col.push_back(col);
    work.erase(work.begin());
    if (!is_zero(saturated)) work.push_back(std::move(saturated));
    std::erase_if(work, is_zero);
  }
  for (std::size_t p = 0; p < out.rows.size(); ++p) {
    std::size_t col = out.pivot_col[p];
    Int g = out.rows[p][col];
    for (std::size_t q = 0; q < p; ++q) {
      Int c = out.rows[q][col] / g;
      if (c != 0) axpy(out.rows[q], -c, out.rows[p], n, col);
    }
  }
  return out;
}

std::vector<Int> scales_of(const ModMatrix& m) {
  std::vector<Int> s(m.cols());
  for (std::size_t k = 0; k < m.cols(); ++k)
    s[k] = m.modulus() / m.col_moduli()[k];
  return s;
}

Coords scale_vector(std::span<const Int> v, const std::vector<Int>& scale,
                    const std::vector<Int>& col_moduli, Int n) {
  Coords out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    out[k] = mod(mod(v[k], col_moduli[k]) * scale[k], n);
  return out;
}

std::vector<Coords> scaled_rows(const ModMatrix& m) {
  auto scale = scales_of(m);
  std::vector<Coords> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(scale_vector(m.row(r), scale, m.col_moduli(), m.modulus()));
  return rows;
}

ModMatrix unscale(const Echelon& e, const ModMatrix& like) {
  auto scale = scales_of(like);
  ModMatrix out(like.modulus(), like.col_moduli());
  Coords v(like.cols());
  for (const auto& r : e.rows) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = r[k] / scale[k];
    out.append_row(v);
  }
  return out;
}

// Scaled view of a Howell-form matrix (the rows are already canonical).
Echelon view_howell(const ModMatrix& h) {
  Echelon e;
  e.n = h.modulus();
  e.rows = scaled_rows(h);
  for (const auto& r : e.rows) {
    auto it = std::find_if(r.begin(), r.end(), [](Int x) { return x != 0; });
    e.pivot_col.push_back(static_cast<std::size_t>(it - r.begin()));
  }
  return e;
}

// Reduces v (scaled) by the echelon rows; returns coefficients, leaves the
// remainder in v.
Coords reduce(const Echelon& e, Coords& v) {
  Coords coeff(e.rows.size(), 0);
  for (std::size_t p = 0; p < e.rows.size(); ++p) {
    std::size_t col = e.pivot_col[p];
    Int g = e.rows[p][col];
    if (v[col] % g != 0) break;
    Int c = v[col] / g;
    coeff[p] = c;
    axpy(v, -c, e.rows[p], e.n, col);
  }
  return coeff;
}

}  // namespace

ModMatrix::ModMatrix(Int modulus, std::vector<Int> col_moduli)
    : modulus_(modulus), col_moduli_(std::move(col_moduli)) {
  if (modulus_ < 1) throw InvalidInput("ModMatrix: modulus must be positive");
  for (Int m : col_moduli_)
    if (m < 1 || modulus_ % m != 0)
      throw InvalidInput("ModMatrix: column modulus must divide the modulus");
}

ModMatrix::ModMatrix(Int modulus, std::vector<Int> col_moduli,
                     const std::vector<Coords>& rows)
    : ModMatrix(modulus, std::move(col_moduli)) {
  for (const auto& r : rows) append_row(r);
}

Coords ModMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

std::vector<Coords> ModMatrix::to_rows() const {
  std::vector<Coords> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

void ModMatrix::append_row(std::span<const Int> v) {
  if (v.size() != cols())
    throw InvalidInput("ModMatrix: row length does not match column count");
  for (std::size_t k = 0; k < v.size(); ++k)
    data_.push_back(mod(v[k], col_moduli_[k]));
  ++rows_;
}

std::strong_ordering operator<=>(const ModMatrix& a, const ModMatrix& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  if (auto c = a.col_moduli_ <=> b.col_moduli_; c != 0) return c;
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  return a.data_ <=> b.data_;
}

std::size_t ModMatrixHash::operator()(const ModMatrix& m) const {
  std::size_t h = std::hash<Int>{}(m.modulus()) ^ (m.rows() * 0x9e3779b97f4a7c15ULL);
  for (Int x : m.data()) h = h * 1099511628211ULL ^ static_cast<std::size_t>(x);
  for (Int x : m.col_moduli()) h = h * 31 + static_cast<std::size_t>(x);
  return h;
}

Coords vec_mat(std::span<const Int> x, const ModMatrix& a) {
  if (x.size() != a.rows()) throw InvalidInput("vec_mat: dimension mismatch");
  const auto& cm = a.col_moduli();
  Coords y(a.cols(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    auto row = a.row(i);
    for (std::size_t k = 0; k < y.size(); ++k)
      if (row[k] != 0) y[k] = mod(y[k] + x[i] * row[k], cm[k]);
  }
  return y;
}

ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("mat_mul: dimension mismatch");
  ModMatrix out(b.modulus(), b.col_moduli());
  for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(vec_mat(a.row(i), b));
  return out;
}

ModMatrix howell_form(const ModMatrix& m) {
  Echelon e = echelonize(m.modulus(), m.cols(), scaled_rows(m));
  return unscale(e, m);
}

bool in_span(const ModMatrix& howell, std::span<const Int> v) {
  return express_in_span(howell, v).has_value();
}

std::optional<Coords> express_in_span(const ModMatrix& howell,
                                      std::span<const Int> v) {
  if (v.size() != howell.cols())
    throw InvalidInput("express_in_span: dimension mismatch");
  Echelon e = view_howell(howell);
  Coords w = scale_vector(v, scales_of(howell), howell.col_moduli(),
                          howell.modulus());
  Coords c = reduce(e, w);
  if (!is_zero(w)) return std::nullopt;
  return c;
}

std::uint64_t span_order(const ModMatrix& howell) {
  std::uint64_t order = 1;
  Echelon e = view_howell(howell);
  for (std::size_t p = 0; p < e.rows.size(); ++p) {
    auto f = static_cast<std::uint64_t>(e.n / e.rows[p][e.pivot_col[p]]);
    if (order > std::numeric_limits<std::uint64_t>::max() / f)
      return std::numeric_limits<std::uint64_t>::max();
    order *= f;
  }
  return order;
}

std::optional<Coords> find_span_element(
    const ModMatrix& howell, const std::function<bool(const Coords&)>& pred) {
  std::vector<Int> ranges;
  for (std::size_t r = 0; r < howell.rows(); ++r) {
    auto row = howell.row(r);
    auto it = std::find_if(row.begin(), row.end(), [](Int x) { return x != 0; });
    auto col = static_cast<std::size_t>(it - row.begin());
    ranges.push_back(howell.col_moduli()[col] / *it);
  }
  const auto& cm = howell.col_moduli();
  Coords c(ranges.size(), 0);
  Coords v(howell.cols(), 0);
  while (true) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (c[r] == 0) continue;
      auto row = howell.row(r);
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = mod(v[k] + c[r] * row[k], cm[k]);
    }
    if (pred(v)) return v;
    std::size_t k = 0;
    for (; k < c.size(); ++k) {
      if (++c[k] < ranges[k]) break;
      c[k] = 0;
    }
    if (k == c.size()) return std::nullopt;
  }
}

void for_each_span_element(const ModMatrix& howell,
                           const std::function<void(const Coords&)>& visit) {
  find_span_element(howell, [&](const Coords& v) {
    visit(v);
    return false;
  });
}

std::optional<LinearSolution> solve_linear(const ModMatrix& a,
                                           std::span<const Int> b) {
  if (b.size() != a.cols())
    throw InvalidInput("solve_linear: right-hand side has wrong length");
  const Int n = a.modulus();
  const std::size_t c = a.cols(), r = a.rows();
  std::vector<Int> moduli = a.col_moduli();
  moduli.insert(moduli.end(), r, n);
  ModMatrix aug(n, moduli);
  Coords line(c + r);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(line.begin(), line.end(), 0);
    auto ai = a.row(i);
    std::copy(ai.begin(), ai.end(), line.begin());
    line[c + i] = 1;
    aug.append_row(line);
  }
  Echelon e = echelonize(n, c + r, scaled_rows(aug));

  Echelon left;
  left.n = n;
  ModMatrix kernel(n, std::vector<Int>(r, n));
  for (std::size_t p = 0; p < e.rows.size(); ++p) {
    if (e.pivot_col[p] < c) {
      left.rows.push_back(e.rows[p]);
      left.pivot_col.push_back(e.pivot_col[p]);
    } else {
      kernel.append_row(std::span<const Int>(e.rows[p]).subspan(c));
    }
  }
  Coords w(c + r, 0);
  Coords bs = scale_vector(b, scales_of(a), a.col_moduli(), n);
  std::copy(bs.begin(), bs.end(), w.begin());
  reduce(left, w);
  if (!std::all_of(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(c),
                   [](Int x) { return x == 0; }))
    return std::nullopt;
  LinearSolution sol;
  sol.particular.resize(r);
  for (std::size_t i = 0; i < r; ++i) sol.particular[i] = mod(-w[c + i], n);
  sol.kernel = howell_form(kernel);
  return sol;
}

ModMatrix kernel_of_map(const std::vector<Int>& domain_moduli,
                        const ModMatrix& images) {
  if (domain_moduli.size() != images.rows())
    throw InvalidInput("kernel_of_map: one image per domain generator");
  const Int n = images.modulus();
  ModMatrix out(n, domain_moduli);
  if (images.rows() == 0) return out;
  auto sol = solve_linear(images, Coords(images.cols(), 0));
  for (std::size_t i = 0; i < sol->kernel.rows(); ++i)
    out.append_row(sol->kernel.row(i));
  return howell_form(out);
}

ModMatrix preimage_of_span(const std::vector<Int>& domain_moduli,
                           const ModMatrix& images, const ModMatrix& target) {
  if (images.col_moduli() != target.col_moduli())
    throw InvalidInput("preimage_of_span: codomain mismatch");
  const Int n = images.modulus();
  std::vector<Int> moduli = domain_moduli;
  ModMatrix stacked(n, images.col_moduli());
  for (std::size_t i = 0; i < images.rows(); ++i) stacked.append_row(images.row(i));
  for (std::size_t i = 0; i < target.rows(); ++i) {
    stacked.append_row(target.row(i));
    moduli.push_back(n);
  }
  ModMatrix ker = kernel_of_map(moduli, stacked);
  ModMatrix out(n, domain_moduli);
  for (std::size_t i = 0; i < ker.rows(); ++i)
    out.append_row(ker.row(i).subspan(0, domain_moduli.size()));
  return howell_form(out);
}

ModMatrix intersect_spans(const ModMatrix& a, const ModMatrix& b) {
  if (a.col_moduli() != b.col_moduli() || a.modulus() != b.modulus())
    throw InvalidInput("intersect_spans: ambient groups differ");
  const std::size_t c = a.cols();
  std::vector<Int> moduli = a.col_moduli();
  moduli.insert(moduli.end(), a.col_moduli().begin(), a.col_moduli().end());
  ModMatrix aug(a.modulus(), moduli);
  Coords line(2 * c);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    std::copy(row.begin(), row.end(), line.begin());
    std::copy(row.begin(), row.end(), line.begin() + static_cast<std::ptrdiff_t>(c));
    aug.append_row(line);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto row = b.row(i);
    std::copy(row.begin(), row.end(), line.begin());
    std::fill(line.begin() + static_cast<std::ptrdiff_t>(c), line.end(), 0);
    aug.append_row(line);
  }
  ModMatrix h = howell_form(aug);
  ModMatrix out(a.modulus(), a.col_moduli());
  for (std::size_t i = 0; i < h.rows(); ++i) {
    auto row = h.row(i);
    if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(c),
                    [](Int x) { return x == 0; }))
      out.append_row(row.subspan(c));
  }
  return howell_form(out);
}

ModMatrix sum_spans(const ModMatrix& a, const ModMatrix& b) {
  if (a.col_moduli() != b.col_moduli() || a.modulus() != b.modulus())
    throw InvalidInput("sum_spans: ambient groups differ");
  ModMatrix s = a;
  for (std::size_t i = 0; i < b.rows(); ++i) s.append_row(b.row(i));
  return howell_form(s);
}

Coords GroupPresentation::project(std::span<const Int> old_coords) const {
  Coords y(moduli.size(), 0);
  for (std::size_t i = 0; i < old_coords.size(); ++i) {
    Int c = old_coords[i];
    if (c == 0) continue;
    auto row = projection.row(i);
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = mod(y[j] + c * row[j], moduli[j]);
  }
  return y;
}

GroupPresentation present_quotient(Int n, std::size_t t,
                                   const std::vector<Coords>& relations) {
  std::vector<Coords> a;
  for (const auto& rel : relations) {
    if (rel.size() != t) throw InvalidInput("present_quotient: bad relation");
    Coords r(t);
    for (std::size_t k = 0; k < t; ++k) r[k] = mod(rel[k], n);
    if (!is_zero(r)) a.push_back(std::move(r));
  }
  // v accumulates the column operations, vinv their inverses (row operations)
  std::vector<Coords> v(t, Coords(t, 0)), vinv(t, Coords(t, 0));
  for (std::size_t i = 0; i < t; ++i) v[i][i] = vinv[i][i] = 1;

  auto col_op = [&](std::size_t k, std::size_t j, Int s, Int tt, Int aj, Int bk) {
    // new col k = s*col_k + tt*col_j ; new col j = -bk*col_k + aj*col_j
    auto apply = [&](std::vector<Coords>& m) {
      for (auto& row : m) {
        Int p = row[k], q = row[j];
        row[k] = mod(s * p + tt * q, n);
        row[j] = mod(-bk * p + aj * q, n);
      }
    };
    apply(a);
    apply(v);
    // inverse acts on rows k, j of vinv
    Coords rk = vinv[k], rj = vinv[j];
    for (std::size_t c = 0; c < t; ++c) {
      vinv[k][c] = mod(aj * rk[c] + bk * rj[c], n);
      vinv[j][c] = mod(-tt * rk[c] + s * rj[c], n);
    }
  };

  std::size_t rank = 0;
  for (std::size_t k = 0; k < t && k < a.size(); ++k) {
    // bring the entry generating the largest ideal to (k, k)
    std::size_t bi = a.size(), bj = t;
    Int best = n;
    for (std::size_t i = k; i < a.size(); ++i)
      for (std::size_t j = k; j < t; ++j)
        if (a[i][j] != 0 && gcd(a[i][j], n) < best) {
          best = gcd(a[i][j], n);
          bi = i;
          bj = j;
        }
    if (bi == a.size()) break;
    std::swap(a[k], a[bi]);
    if (bj != k) {
      for (auto& row : a) std::swap(row[k], row[bj]);
      for (auto& row : v) std::swap(row[k], row[bj]);
      std::swap(vinv[k], vinv[bj]);
    }
    // the pivot is kept a divisor of n; every Bezout step shrinks it
    auto normalize = [&] {
      Int u = unit_normalizer(a[k][k], n);
      for (std::size_t c = k; c < t; ++c) a[k][c] = mod(a[k][c] * u, n);
    };
    while (true) {
      normalize();
      for (std::size_t i = k + 1; i < a.size(); ++i) {
        Int b = a[i][k];
        if (b == 0) continue;
        Int d = a[k][k];
        if (b % d == 0) {
          axpy(a[i], -(b / d), a[k], n, k);
          continue;
        }
        Bezout e = ext_gcd(d, b);
        Int dg = d / e.g, bg = b / e.g;
        for (std::size_t c = k; c < t; ++c) {
          Int p = a[k][c], q = a[i][c];
          a[k][c] = mod(e.s * p + e.t * q, n);
          a[i][c] = mod(-bg * p + dg * q, n);
        }
        normalize();
      }
      for (std::size_t j = k + 1; j < t; ++j) {
        Int b = a[k][j];
        if (b == 0) continue;
        Int d = a[k][k];
        if (b % d == 0) {
          col_op(k, j, 1, 0, 1, b / d);
          continue;
        }
        Bezout e = ext_gcd(d, b);
        col_op(k, j, e.s, e.t, d / e.g, b / e.g);
        normalize();
      }
      // column operations may have refilled column k below the pivot
      bool clean = true;
      for (std::size_t i = k + 1; i < a.size(); ++i)
        if (a[i][k] != 0) clean = false;
      if (clean) break;
    }
    rank = k + 1;
  }

  GroupPresentation out;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < t; ++c) {
    Int m = (c < rank) ? gcd(a[c][c], n) : n;
    if (m > 1) {
      kept.push_back(c);
      out.moduli.push_back(m);
    }
  }
  out.projection = ModMatrix(std::max<Int>(n, 1), out.moduli);
  Coords line(kept.size());
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < kept.size(); ++j) line[j] = v[i][kept[j]];
    out.projection.append_row(line);
  }
  for (std::size_t c : kept) out.lifts.push_back(vinv[c]);
  return out;
}

void for_each_group_element(const std::vector<Int>& moduli,
                            const std::function<void(const Coords&)>& visit) {
  Coords c(moduli.size(), 0);
  while (true) {
    visit(c);
    std::size_t k = 0;
    for (; k < c.size(); ++k) {
      if (++c[k] < moduli[k]) break;
      c[k] = 0;
    }
    if (k == c.size()) return;
  }
}

std::uint64_t group_order(const std::vector<Int>& moduli) {
  std::uint64_t order = 1;
  for (Int m : moduli) {
    auto f = static_cast<std::uint64_t>(m);
    if (order > std::numeric_limits<std::uint64_t>::max() / f)
      return std::numeric_limits<std::uint64_t>::max();
    order *= f;
  }
  return order;
}

std::vector<Int> elementary_divisors(const std::vector<Int>& moduli) {
  std::vector<Int> out;
  for (Int m : moduli) {
    for (Int p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      Int q = 1;
      while (m % p == 0) {
        m /= p;
        q *= p;
      }
      out.push_back(q);
    }
    if (m > 1) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ringscope
