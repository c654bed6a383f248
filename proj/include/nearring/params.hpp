#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nearring {

using Residue = std::int64_t;
using Rank = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid group parameters (p not an odd prime, ordering violated, capacity).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (table order, search scope) was exceeded.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Largest group order accepted by make_params. Ranks are 32-bit, and with
/// p^m < 2^28 every four-factor product in the multiplication formula fits
/// comfortably in a signed 128-bit accumulator.
inline constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 31;

/// Canonical coordinates of a^x1 b^x2 c^x3 (additively: a*x1 + b*x2 + c*x3).
struct Element {
  Residue x1 = 0;
  Residue x2 = 0;
  Residue x3 = 0;

  friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

inline constexpr Element kZero{0, 0, 0};
inline constexpr Element kGenA{1, 0, 0};
inline constexpr Element kGenB{0, 1, 0};
inline constexpr Element kGenC{0, 0, 1};

/// "x1,x2,x3"
std::string to_string(const Element& x);
std::ostream& operator<<(std::ostream& os, const Element& x);

bool is_prime(std::int64_t v);

/// The tuple (p, m, n, d) fixing one group G(p^m, p^n, p^d).
class GroupParams {
 public:
  /// Throws ParamError unless p is an odd prime, 1 <= d <= n <= m and the
  /// order p^(m+n+d) is at most kMaxGroupOrder.
  static GroupParams make(std::int64_t p, std::int64_t m, std::int64_t n, std::int64_t d);

  std::int64_t p() const { return p_; }
  std::int64_t m() const { return m_; }
  std::int64_t n() const { return n_; }
  std::int64_t d() const { return d_; }

  /// Moduli of the three coordinates: p^m, p^n, p^d.
  Residue mod1() const { return mod1_; }
  Residue mod2() const { return mod2_; }
  Residue mod3() const { return mod3_; }

  std::uint64_t order() const { return static_cast<std::uint64_t>(mod1_ * mod2_ * mod3_); }
  Residue exponent() const { return mod1_; }

  std::string to_string() const;

  friend bool operator==(const GroupParams& l, const GroupParams& r) {
    return l.p_ == r.p_ && l.m_ == r.m_ && l.n_ == r.n_ && l.d_ == r.d_;
  }

 private:
  GroupParams() = default;

  std::int64_t p_ = 3, m_ = 1, n_ = 1, d_ = 1;
  Residue mod1_ = 3, mod2_ = 3, mod3_ = 3;
};

inline GroupParams make_params(std::int64_t p, std::int64_t m, std::int64_t n, std::int64_t d) {
  return GroupParams::make(p, m, n, d);
}

}  // namespace nearring
