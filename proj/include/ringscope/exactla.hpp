#pragma once

// Exact linear algebra over Z/n for matrices whose columns carry their own
// moduli. A matrix with column moduli (m_1, ..., m_c) describes elements of
// the finite abelian group Z/m_1 + ... + Z/m_c; every m_k divides the global
// modulus n. Internally column k is embedded into Z/n by x -> x * (n / m_k),
// which turns every computation into one over a single modulus.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace ringscope {

using Int = std::int64_t;
using Coords = std::vector<Int>;

Int mod(Int a, Int m);
Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(Int modulus, std::vector<Int> col_moduli);
  ModMatrix(Int modulus, std::vector<Int> col_moduli,
            const std::vector<Coords>& rows);

  Int modulus() const { return modulus_; }
  const std::vector<Int>& col_moduli() const { return col_moduli_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return col_moduli_.size(); }
  bool empty() const { return rows_ == 0; }

  Int operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols() + c];
  }
  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols(), cols()};
  }
  Coords row_vector(std::size_t r) const;
  std::vector<Coords> to_rows() const;

  // Appends v, reducing column k modulo col_moduli[k].
  void append_row(std::span<const Int> v);

  const std::vector<Int>& data() const { return data_; }

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
  friend std::strong_ordering operator<=>(const ModMatrix& a,
                                          const ModMatrix& b);

 private:
  Int modulus_ = 1;
  std::vector<Int> col_moduli_;
  std::vector<Int> data_;
  std::size_t rows_ = 0;
};

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const;
};

// x * a, reduced by a's column moduli.
Coords vec_mat(std::span<const Int> x, const ModMatrix& a);
// a * b with b's column moduli; rows(b) must equal cols(a).
ModMatrix mat_mul(const ModMatrix& a, const ModMatrix& b);

// Canonical generating matrix of the row span: echelon form, pivots are the
// minimal positive representative of their ideal, entries above a pivot are
// reduced below it, and for every column j the rows with leading column >= j
// span all span elements vanishing before j. Zero rows are dropped.
ModMatrix howell_form(const ModMatrix& m);

// The following take a matrix already in Howell form.
bool in_span(const ModMatrix& howell, std::span<const Int> v);
// Coefficients c with sum c_i * row_i = v, each c_i < (col modulus / pivot).
std::optional<Coords> express_in_span(const ModMatrix& howell,
                                      std::span<const Int> v);
// Number of elements in the span (saturating at UINT64_MAX).
std::uint64_t span_order(const ModMatrix& howell);
// Visits each element of the span exactly once.
void for_each_span_element(const ModMatrix& howell,
                           const std::function<void(const Coords&)>& visit);

// First span element (in enumeration order) satisfying pred.
std::optional<Coords> find_span_element(
    const ModMatrix& howell, const std::function<bool(const Coords&)>& pred);

struct LinearSolution {
  Coords particular;
  // Howell basis of {x : x * a = 0}, x ranging over (Z/n)^rows(a).
  ModMatrix kernel;
};

// Solves x * a = b for x in (Z/n)^rows(a), where b lives in the group of a's
// columns. Returns nullopt when no solution exists.
std::optional<LinearSolution> solve_linear(const ModMatrix& a,
                                           std::span<const Int> b);

// Kernel of the group homomorphism Z/d_1 + ... + Z/d_r -> (columns of
// images) sending e_i to images.row(i). Requires d_i * images.row(i) = 0.
// Result is in Howell form with column moduli d.
ModMatrix kernel_of_map(const std::vector<Int>& domain_moduli,
                        const ModMatrix& images);

// Preimage of span(target) under the same kind of homomorphism.
ModMatrix preimage_of_span(const std::vector<Int>& domain_moduli,
                           const ModMatrix& images, const ModMatrix& target);

ModMatrix intersect_spans(const ModMatrix& a, const ModMatrix& b);
ModMatrix sum_spans(const ModMatrix& a, const ModMatrix& b);

// Result of diagonalizing relations of a group (Z/n)^t / span(relations).
struct GroupPresentation {
  // moduli of the new cyclic coordinates (all > 1)
  std::vector<Int> moduli;
  // projection.row(i) = image of the old generator e_i in new coordinates
  ModMatrix projection;
  // lifts[j] = old coordinates (mod n) of the new generator j
  std::vector<Coords> lifts;

  Coords project(std::span<const Int> old_coords) const;
};

GroupPresentation present_quotient(Int n, std::size_t generators,
                                   const std::vector<Coords>& relations);

// Mixed-radix enumeration of Z/m_1 + ... + Z/m_k.
void for_each_group_element(const std::vector<Int>& moduli,
                            const std::function<void(const Coords&)>& visit);
std::uint64_t group_order(const std::vector<Int>& moduli);
// Elementary divisors (prime powers, sorted) of Z/m_1 + ... + Z/m_k.
std::vector<Int> elementary_divisors(const std::vector<Int>& moduli);

}  // namespace ringscope
