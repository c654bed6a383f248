#include "nearring/params.hpp"

#include <ostream>
#include <sstream>

namespace nearring {

std::string to_string(const Element& x) {
  return std::to_string(x.x1) + "," + std::to_string(x.x2) + "," + std::to_string(x.x3);
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t q = 2; q * q <= v; ++q) {
    if (v % q == 0) return false;
  }
  return true;
}

GroupParams GroupParams::make(std::int64_t p, std::int64_t m, std::int64_t n, std::int64_t d) {
  if (p == 2) throw ParamError("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw ParamError("p = " + std::to_string(p) + " is not prime");
  if (d < 1) throw ParamError("d must be at least 1");
  if (!(d <= n && n <= m)) {
    throw ParamError("exponents must satisfy 1 <= d <= n <= m (got m=" + std::to_string(m) +
                     ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  std::uint64_t order = 1;
  for (std::int64_t i = 0; i < m + n + d; ++i) {
    order *= static_cast<std::uint64_t>(p);
    if (order > kMaxGroupOrder) {
      throw ParamError("group order " + std::to_string(p) + "^" + std::to_string(m + n + d) +
                       " exceeds capacity 2^31");
    }
  }
  auto power = [p](std::int64_t e) {
    Residue r = 1;
    while (e-- > 0) r *= p;
    return r;
  };
  GroupParams g;
  g.p_ = p;
  g.m_ = m;
  g.n_ = n;
  g.d_ = d;
  g.mod1_ = power(m);
  g.mod2_ = power(n);
  g.mod3_ = power(d);
  return g;
}

std::string GroupParams::to_string() const {
  std::ostringstream os;
  os << "G(" << p_ << "^" << m_ << "," << p_ << "^" << n_ << "," << p_ << "^" << d_ << ")";
  return os.str();
}

}  // namespace nearring
