#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace singlink {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// malformed external data: files, CLI arguments, out-of-range numbers
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the requested object does not exist for the given data
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

struct IVec3 {
  std::array<Int, 3> c{};

  IVec3() = default;
  IVec3(Int x, Int y, Int z) : c{std::move(x), std::move(y), std::move(z)} {}

  Int& operator[](int i) { return c[i]; }
  const Int& operator[](int i) const { return c[i]; }

  bool operator==(const IVec3&) const = default;
};

// lexicographic; used as map key order and for deterministic output
inline bool operator<(const IVec3& a, const IVec3& b) { return a.c < b.c; }

inline IVec3 operator+(const IVec3& a, const IVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
inline IVec3 operator-(const IVec3& a, const IVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline IVec3 operator-(const IVec3& a) { return {-a[0], -a[1], -a[2]}; }
inline IVec3 operator*(const Int& s, const IVec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline bool is_zero(const IVec3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline Int dot(const IVec3& a, const IVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline IVec3 cross(const IVec3& a, const IVec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline Int coord_sum(const IVec3& a) { return a[0] + a[1] + a[2]; }

// coordinate permutation; (apply_perm(p, v))[i] == v[p[i]]
using Perm = std::array<int, 3>;

inline IVec3 apply_perm(const Perm& p, const IVec3& v) {
  return {v[p[0]], v[p[1]], v[p[2]]};
}

inline Perm inverse_perm(const Perm& p) {
  Perm q{};
  for (int i = 0; i < 3; ++i) q[p[i]] = i;
  return q;
}

// compose_perm(p, q) acts like applying q first, then p
inline Perm compose_perm(const Perm& p, const Perm& q) {
  return {q[p[0]], q[p[1]], q[p[2]]};
}

inline const std::array<Perm, 6>& all_perms() {
  static const std::array<Perm, 6> ps{{{0, 1, 2},
                                       {0, 2, 1},
                                       {1, 0, 2},
                                       {1, 2, 0},
                                       {2, 0, 1},
                                       {2, 1, 0}}};
  return ps;
}

std::string str(const IVec3& v);
std::string str(const Rat& r);

// checked narrowing for the serialization boundary
std::int64_t to_i64(const Int& v);

}  // namespace singlink
