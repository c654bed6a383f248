#include "nearring/maps.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nearring/pgroup.hpp"

namespace nearring {

MapTriple::MapTriple(GroupParams params, std::vector<Residue> alpha, std::vector<Residue> beta,
                     std::vector<Residue> gamma)
    : params_(params), alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  const auto n = params_.order();
  auto check = [n](const std::vector<Residue>& t, Residue mod, const char* name) {
    if (t.size() != n) {
      throw MapFormatError(std::string(name) + " table has " + std::to_string(t.size()) +
                           " entries, expected " + std::to_string(n));
    }
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] < 0 || t[k] >= mod) {
        throw MapFormatError(std::string(name) + "[" + std::to_string(k) + "] = " +
                             std::to_string(t[k]) + " is outside [0, " + std::to_string(mod) + ")");
      }
    }
  };
  check(alpha_, params_.mod1(), "alpha");
  check(beta_, params_.mod2(), "beta");
  check(gamma_, params_.mod3(), "gamma");
}

std::optional<std::string> MapTriple::forced_row_violation() const {
  const Element r = row(rank(params_, kGenA));
  if (r == kGenB) return std::nullopt;
  return "row at a=(1,0,0) is (" + to_string(r) + "), but a*b = b forces (0,1,0)";
}

MapTriple canonical_maps(const GroupParams& g) {
  const auto n = g.order();
  std::vector<Residue> alpha(n, 0), beta(n, 0), gamma(n, 0);
  for (std::uint64_t k = 0; k < n; ++k) beta[k] = unrank(g, k).x1 % g.mod2();
  return MapTriple(g, std::move(alpha), std::move(beta), std::move(gamma));
}

Element xb(const MapTriple& maps, const Element& x) { return maps.row(rank(maps.params(), x)); }

Element mul_with_row(const GroupParams& g, const Element& r, const Element& x, const Element& y) {
  using W = __int128;
  const W al = r.x1, be = r.x2, ga = r.x3;
  const W x1 = x.x1, x2 = x.x2, x3 = x.x3;
  const W y1 = y.x1, y2 = y.x2, y3 = y.x3;
  W c = -x1 * x2 * binom2(y1);
  c -= binom2(y2) * al * be;
  c -= x2 * y1 * y2 * al;
  c += x3 * y1 + y2 * ga + x1 * y3 * be - x2 * y3 * al;
  return {reduce(x1 * y1 + y2 * al, g.mod1()), reduce(x2 * y1 + y2 * be, g.mod2()),
          reduce(c, g.mod3())};
}

Element mul(const MapTriple& maps, const Element& x, const Element& y) {
  return mul_with_row(maps.params(), xb(maps, x), x, y);
}

Element product_row(const GroupParams& g, const Element& x_row, const Element& x,
                    const Element& y_row) {
  return mul_with_row(g, x_row, x, y_row);
}

std::vector<Rank> left_mul_table(const MapTriple& maps, const Element& x) {
  const auto& g = maps.params();
  const Element r = xb(maps, x);
  std::vector<Rank> out;
  out.reserve(g.order());
  for (const auto& y : all_elements(g)) out.push_back(rank(g, mul_with_row(g, r, x, y)));
  return out;
}

OperationTable mul_table(const MapTriple& maps, std::size_t bound) {
  const auto& g = maps.params();
  check_table_bound(g.order(), bound, "multiplication table");
  const auto elems = all_elements(g);
  const std::size_t n = elems.size();
  std::vector<Rank> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element r = maps.row(static_cast<Rank>(i));
    for (std::size_t j = 0; j < n; ++j)
      cells[i * n + j] = rank(g, mul_with_row(g, r, elems[i], elems[j]));
  }
  return OperationTable(n, std::move(cells));
}

std::string to_json(const MapTriple& maps) {
  const auto& g = maps.params();
  nlohmann::ordered_json j;
  j["params"] = {{"p", g.p()}, {"m", g.m()}, {"n", g.n()}, {"d", g.d()}};
  j["alpha"] = maps.alpha();
  j["beta"] = maps.beta();
  j["gamma"] = maps.gamma();
  return j.dump() + "\n";
}

MapTriple map_triple_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MapFormatError("map file is not valid JSON at byte offset " + std::to_string(e.byte) +
                         ": " + e.what());
  }
  try {
    const auto& pj = j.at("params");
    auto g = make_params(pj.at("p").get<std::int64_t>(), pj.at("m").get<std::int64_t>(),
                         pj.at("n").get<std::int64_t>(), pj.at("d").get<std::int64_t>());
    return MapTriple(g, j.at("alpha").get<std::vector<Residue>>(),
                     j.at("beta").get<std::vector<Residue>>(),
                     j.at("gamma").get<std::vector<Residue>>());
  } catch (const nlohmann::json::exception& e) {
    throw MapFormatError(std::string("map file has the wrong shape: ") + e.what());
  }
}

MapTriple load_map_triple(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MapFormatError("cannot open map file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return map_triple_from_json(ss.str());
}

void save_map_triple(const MapTriple& maps, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << to_json(maps);
}

}  // namespace nearring
