#ifndef CGAFACT_ALGEBRA_HPP
#define CGAFACT_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "cgafact/errors.hpp"

//------------------------------------------------------------------------------
// Clifford algebra of signature (4,1): basis e1, e2, e3, e+, e- with
// e1^2 = e2^2 = e3^2 = e+^2 = +1 and e-^2 = -1.
//
// A basis blade is the bitset of its vector factors (bit 0..4 <-> e1 e2 e3 e+ e-),
// multiplied in ascending order. Multivectors are dense arrays of 32 reals
// indexed by that bitmask; products go through a precomputed 32x32 sign table.
//------------------------------------------------------------------------------

namespace cgafact {

inline constexpr double kDefaultTol = 1e-9;

inline constexpr int kBladeCount = 32;
inline constexpr unsigned kMinusBit = 1u << 4;

constexpr int grade_of(unsigned mask) { return std::popcount(mask); }

// Sign of the product of two basis blades: reordering parity of the merged
// factor list times the metric signs of the squared (shared) factors.
constexpr int blade_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  int sign = (swaps & 1) ? -1 : 1;
  if (a & b & kMinusBit) sign = -sign;  // only e- squares to -1
  return sign;
}

// grade k reverses with sign (-1)^(k(k-1)/2)
constexpr int reversion_sign(unsigned mask) {
  const int k = grade_of(mask);
  return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

namespace detail {

struct SignTable {
  std::array<std::array<std::int8_t, 32>, 32> s{};
};

constexpr SignTable make_sign_table() {
  SignTable t;
  for (unsigned a = 0; a < 32; ++a)
    for (unsigned b = 0; b < 32; ++b)
      t.s[a][b] = static_cast<std::int8_t>(blade_product_sign(a, b));
  return t;
}

inline constexpr SignTable kSigns = make_sign_table();

}  // namespace detail

//------------------------------------------------------------------------------
// Multivector
//------------------------------------------------------------------------------

struct Multivector {
  std::array<double, 32> c{};

  Multivector() = default;

  static Multivector scalar(double v) {
    Multivector m;
    m.c[0] = v;
    return m;
  }
  static Multivector blade(unsigned mask, double v = 1.0) {
    Multivector m;
    m.c[mask] = v;
    return m;
  }

  double operator[](unsigned mask) const { return c[mask]; }
  double& operator[](unsigned mask) { return c[mask]; }

  double scalar_part() const { return c[0]; }

  Multivector& operator+=(const Multivector& o) {
    for (int i = 0; i < 32; ++i) c[i] += o.c[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    for (int i = 0; i < 32; ++i) c[i] -= o.c[i];
    return *this;
  }
  Multivector& operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
  }

  Multivector reversed() const {
    Multivector r;
    for (unsigned m = 0; m < 32; ++m) r.c[m] = reversion_sign(m) * c[m];
    return r;
  }

  Multivector grade_part(int k) const {
    Multivector r;
    for (unsigned m = 0; m < 32; ++m)
      if (grade_of(m) == k) r.c[m] = c[m];
    return r;
  }

  Multivector even_part() const {
    Multivector r;
    for (unsigned m = 0; m < 32; ++m)
      if ((grade_of(m) & 1) == 0) r.c[m] = c[m];
    return r;
  }

  Multivector odd_part() const {
    Multivector r;
    for (unsigned m = 0; m < 32; ++m)
      if (grade_of(m) & 1) r.c[m] = c[m];
    return r;
  }

  double inf_norm() const {
    double n = 0.0;
    for (double x : c) n = std::max(n, std::abs(x));
    return n;
  }

  bool is_zero() const {
    for (double x : c)
      if (x != 0.0) return false;
    return true;
  }
};

inline Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
inline Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
inline Multivector operator-(const Multivector& a) {
  Multivector r;
  for (int i = 0; i < 32; ++i) r.c[i] = -a.c[i];
  return r;
}
inline Multivector operator*(Multivector a, double s) { return a *= s; }
inline Multivector operator*(double s, Multivector a) { return a *= s; }

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < 32; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < 32; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      r.c[i ^ j] += detail::kSigns.s[i][j] * ai * bj;
    }
  }
  return r;
}

// Outer product: the grade-raising part, i.e. terms with disjoint factor sets.
inline Multivector operator^(const Multivector& a, const Multivector& b) {
  Multivector r;
  for (unsigned i = 0; i < 32; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < 32; ++j) {
      if ((i & j) != 0) continue;
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      r.c[i | j] += detail::kSigns.s[i][j] * ai * bj;
    }
  }
  return r;
}

inline Multivector quadrance(const Multivector& a) { return a * a.reversed(); }

inline double max_abs(const Multivector& a) { return a.inf_norm(); }

inline bool approx_equal(const Multivector& a, const Multivector& b,
                         double tol = kDefaultTol) {
  const double scale = std::max({1.0, a.inf_norm(), b.inf_norm()});
  for (int i = 0; i < 32; ++i)
    if (std::abs(a.c[i] - b.c[i]) > tol * scale) return false;
  return true;
}

inline bool approx_zero(const Multivector& a, double tol = kDefaultTol,
                        double scale = 1.0) {
  return a.inf_norm() <= tol * std::max(1.0, scale);
}

// Largest coefficient outside grade 0.
inline double non_scalar_norm(const Multivector& a) {
  double n = 0.0;
  for (unsigned m = 1; m < 32; ++m) n = std::max(n, std::abs(a.c[m]));
  return n;
}

//------------------------------------------------------------------------------
// Blade names: "s" for the scalar slot, otherwise "e" followed by the factor
// characters 1,2,3,p,m in canonical order ("e12", "e3p", "e12pm").
//------------------------------------------------------------------------------

inline std::string blade_name(unsigned mask) {
  if (mask == 0) return "s";
  static constexpr char kChars[5] = {'1', '2', '3', 'p', 'm'};
  std::string n = "e";
  for (int b = 0; b < 5; ++b)
    if (mask & (1u << b)) n += kChars[b];
  return n;
}

inline unsigned parse_blade_name(const std::string& name) {
  if (name == "s") return 0;
  if (name.size() < 2 || name[0] != 'e')
    throw FormatError("invalid blade name: '" + name + "'");
  unsigned mask = 0;
  int last = -1;
  for (std::size_t i = 1; i < name.size(); ++i) {
    int bit;
    switch (name[i]) {
      case '1': bit = 0; break;
      case '2': bit = 1; break;
      case '3': bit = 2; break;
      case 'p': bit = 3; break;
      case 'm': bit = 4; break;
      default: throw FormatError("invalid blade name: '" + name + "'");
    }
    if (bit <= last)  // factors must be strictly ascending, no repeats
      throw FormatError("blade factors out of order in '" + name + "'");
    last = bit;
    mask |= 1u << bit;
  }
  return mask;
}

//------------------------------------------------------------------------------
// Even subalgebra: 1 scalar + 10 bivectors + 5 quadvectors, grade-major order.
// Closed under the geometric product (grades add mod 2), so it gets its own
// 16x16 table and the odd slots never exist at the type level.
//------------------------------------------------------------------------------

inline constexpr int kEvenCount = 16;

inline constexpr std::array<unsigned, 16> kEvenMasks = {
    0,                                       // scalar
    3, 5, 6, 9, 10, 12, 17, 18, 20, 24,      // e12 e13 e23 e1p e2p e3p e1m e2m e3m epm
    15, 23, 27, 29, 30};                     // e123p e123m e12pm e13pm e23pm

namespace detail {

constexpr std::array<int, 32> make_even_index() {
  std::array<int, 32> idx{};
  for (auto& v : idx) v = -1;
  for (int i = 0; i < 16; ++i) idx[kEvenMasks[i]] = i;
  return idx;
}
inline constexpr std::array<int, 32> kEvenIndex = make_even_index();

struct EvenTable {
  std::array<std::array<std::int8_t, 16>, 16> idx{};
  std::array<std::array<std::int8_t, 16>, 16> sign{};
};

constexpr EvenTable make_even_table() {
  EvenTable t;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const unsigned m = kEvenMasks[i] ^ kEvenMasks[j];
      t.idx[i][j] = static_cast<std::int8_t>(kEvenIndex[m]);
      t.sign[i][j] =
          static_cast<std::int8_t>(blade_product_sign(kEvenMasks[i], kEvenMasks[j]));
    }
  return t;
}
inline constexpr EvenTable kEvenTable = make_even_table();

}  // namespace detail

inline int even_index_of_mask(unsigned mask) { return detail::kEvenIndex[mask]; }

struct EvenMultivector {
  std::array<double, 16> c{};

  EvenMultivector() = default;

  static EvenMultivector scalar(double v) {
    EvenMultivector m;
    m.c[0] = v;
    return m;
  }
  static EvenMultivector blade(unsigned mask, double v = 1.0) {
    const int i = even_index_of_mask(mask);
    if (i < 0) throw std::invalid_argument("blade mask is odd-grade");
    EvenMultivector m;
    m.c[i] = v;
    return m;
  }

  double operator[](int even_index) const { return c[even_index]; }
  double& operator[](int even_index) { return c[even_index]; }

  double at_mask(unsigned mask) const {
    const int i = even_index_of_mask(mask);
    return i < 0 ? 0.0 : c[i];
  }
  void set_mask(unsigned mask, double v) {
    const int i = even_index_of_mask(mask);
    if (i < 0) throw std::invalid_argument("blade mask is odd-grade");
    c[i] = v;
  }

  double scalar_part() const { return c[0]; }

  EvenMultivector& operator+=(const EvenMultivector& o) {
    for (int i = 0; i < 16; ++i) c[i] += o.c[i];
    return *this;
  }
  EvenMultivector& operator-=(const EvenMultivector& o) {
    for (int i = 0; i < 16; ++i) c[i] -= o.c[i];
    return *this;
  }
  EvenMultivector& operator*=(double s) {
    for (double& x : c) x *= s;
    return *this;
  }

  // bivectors flip, scalar and grade 4 stay
  EvenMultivector reversed() const {
    EvenMultivector r = *this;
    for (int i = 1; i <= 10; ++i) r.c[i] = -r.c[i];
    return r;
  }

  Multivector embed() const {
    Multivector m;
    for (int i = 0; i < 16; ++i) m.c[kEvenMasks[i]] = c[i];
    return m;
  }

  // Projects the even part; throws when the odd part is not negligible.
  static EvenMultivector from_multivector(const Multivector& m,
                                          double tol = kDefaultTol) {
    const double odd = m.odd_part().inf_norm();
    if (odd > tol * std::max(1.0, m.inf_norm()))
      throw std::invalid_argument("multivector has a significant odd part");
    EvenMultivector e;
    for (int i = 0; i < 16; ++i) e.c[i] = m.c[kEvenMasks[i]];
    return e;
  }

  double inf_norm() const {
    double n = 0.0;
    for (double x : c) n = std::max(n, std::abs(x));
    return n;
  }

  bool is_zero() const {
    for (double x : c)
      if (x != 0.0) return false;
    return true;
  }
};

inline EvenMultivector operator+(EvenMultivector a, const EvenMultivector& b) {
  return a += b;
}
inline EvenMultivector operator-(EvenMultivector a, const EvenMultivector& b) {
  return a -= b;
}
inline EvenMultivector operator-(const EvenMultivector& a) {
  EvenMultivector r;
  for (int i = 0; i < 16; ++i) r.c[i] = -a.c[i];
  return r;
}
inline EvenMultivector operator*(EvenMultivector a, double s) { return a *= s; }
inline EvenMultivector operator*(double s, EvenMultivector a) { return a *= s; }

inline EvenMultivector operator*(const EvenMultivector& a, const EvenMultivector& b) {
  EvenMultivector r;
  for (int i = 0; i < 16; ++i) {
    const double ai = a.c[i];
    if (ai == 0.0) continue;
    for (int j = 0; j < 16; ++j) {
      const double bj = b.c[j];
      if (bj == 0.0) continue;
      r.c[detail::kEvenTable.idx[i][j]] += detail::kEvenTable.sign[i][j] * ai * bj;
    }
  }
  return r;
}

inline EvenMultivector quadrance(const EvenMultivector& a) { return a * a.reversed(); }

inline EvenMultivector commutator(const EvenMultivector& a, const EvenMultivector& b) {
  return a * b - b * a;
}

inline bool approx_equal(const EvenMultivector& a, const EvenMultivector& b,
                         double tol = kDefaultTol) {
  const double scale = std::max({1.0, a.inf_norm(), b.inf_norm()});
  for (int i = 0; i < 16; ++i)
    if (std::abs(a.c[i] - b.c[i]) > tol * scale) return false;
  return true;
}

inline double non_scalar_norm(const EvenMultivector& a) {
  double n = 0.0;
  for (int i = 1; i < 16; ++i) n = std::max(n, std::abs(a.c[i]));
  return n;
}

// Largest grade-4 coefficient; zero exactly when a + rev(a) is real.
inline double grade4_norm(const EvenMultivector& a) {
  double n = 0.0;
  for (int i = 11; i < 16; ++i) n = std::max(n, std::abs(a.c[i]));
  return n;
}

}  // namespace cgafact

#endif
