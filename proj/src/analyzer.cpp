#include "nearring/analyzer.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

#include "nearring/cayley.hpp"
#include "nearring/pgroup.hpp"

namespace nearring {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void fail(Check& c, std::vector<Element> witness, std::string detail = {}) {
  if (c.passed) {
    c.counterexample = std::move(witness);
    if (!detail.empty()) c.detail = std::move(detail);
  }
  c.passed = false;
  ++c.failures;
}

std::vector<char> membership(std::size_t n, const std::vector<Rank>& members) {
  std::vector<char> in(n, 0);
  for (Rank r : members) in[r] = 1;
  return in;
}

}  // namespace

StructureProfile invertible_set(const MapTriple& maps, std::size_t bound) {
  const auto& g = maps.params();
  const auto table = mul_table(maps, bound);
  const auto n = static_cast<Rank>(g.order());
  const Rank one = rank(g, kGenA);

  StructureProfile prof{g};
  prof.inverse.assign(n, kNoInverse);
  for (Rank x = 0; x < n; ++x) {
    for (Rank y = 0; y < n; ++y) {
      if (table.at(x, y) == one && table.at(y, x) == one) {
        prof.inverse[x] = y;
        break;
      }
    }
    (prof.inverse[x] == kNoInverse ? prof.non_units : prof.units).push_back(x);
  }

  const auto in_l = membership(n, prof.non_units);
  bool closed = !prof.non_units.empty();
  for (Rank x : prof.non_units) {
    if (!closed) break;
    const Element ex = unrank(g, x);
    if (!in_l[rank(g, neg(g, ex))]) closed = false;
    for (Rank y : prof.non_units) {
      if (!in_l[rank(g, add(g, ex, unrank(g, y)))]) {
        closed = false;
        break;
      }
    }
  }
  prof.l_is_subgroup = closed;
  if (closed && n % prof.non_units.size() == 0) prof.index = n / prof.non_units.size();
  prof.index_is_p = prof.index == static_cast<std::uint64_t>(g.p());

  prof.x1_criterion_holds = true;
  for (Rank x = 0; x < n; ++x) {
    const bool by_formula = unrank(g, x).x1 % g.p() != 0;
    if (by_formula != (prof.inverse[x] != kNoInverse)) prof.x1_criterion_holds = false;
  }

  prof.identity_order = element_order(g, kGenA);
  for (Rank x = 0; x < n; ++x)
    prof.exponent = std::max(prof.exponent, element_order(g, unrank(g, x)));
  return prof;
}

Report check_theorem1(const MapTriple& maps, const StructureProfile& prof) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  const auto n = static_cast<Rank>(g.order());
  const auto p = static_cast<std::uint64_t>(g.p());
  const auto in_l = membership(n, prof.non_units);

  Check sub{"L_subgroup"}, index{"index_p"}, count{"unit_count"}, crit{"x1_criterion"},
      gen{"L_generated"};

  for (Rank x : prof.non_units) {
    const Element ex = unrank(g, x);
    ++sub.examined;
    if (!in_l[rank(g, neg(g, ex))]) fail(sub, {ex}, "-x is invertible for non-invertible x");
    for (Rank y : prof.non_units) {
      ++sub.examined;
      const Element ey = unrank(g, y);
      if (!in_l[rank(g, add(g, ex, ey))]) fail(sub, {ex, ey}, "x + y is invertible");
    }
  }
  if (prof.non_units.empty()) fail(sub, {}, "no non-invertible elements");

  index.examined = 1;
  if (!prof.index_is_p) {
    fail(index, {}, "index of L is " + std::to_string(prof.index) + " (0: L not a subgroup)");
  }

  const std::uint64_t expected_units = ipow(p, g.m() + g.n() + g.d() - 1) * (p - 1);
  count.examined = 1;
  if (prof.units.size() != expected_units) {
    fail(count, {}, "|R*| = " + std::to_string(prof.units.size()) + ", expected " +
                        std::to_string(expected_units));
  }

  for (Rank x = 0; x < n; ++x) {
    ++crit.examined;
    const Element ex = unrank(g, x);
    const bool by_formula = ex.x1 % g.p() != 0;
    if (by_formula != (prof.inverse[x] != kNoInverse)) {
      fail(crit, {ex}, "invertibility disagrees with x1 != 0 mod p");
    }
  }

  const std::vector<Element> gens{scalar(g, kGenA, p), kGenB, kGenC};
  const auto generated = subgroup_closure(g, gens);
  gen.examined = n;
  if (generated != prof.non_units) {
    std::set<Rank> diff;
    std::set_symmetric_difference(generated.begin(), generated.end(), prof.non_units.begin(),
                                  prof.non_units.end(), std::inserter(diff, diff.end()));
    fail(gen, {unrank(g, *diff.begin())}, "L differs from <a*p> + <b> + <c>");
  }

  Report r;
  r.subject = "non-invertible elements form an index-p subgroup";
  r.checks = {sub, index, count, crit, gen};
  r.metrics["units"] = prof.units.size();
  r.metrics["expected_units"] = expected_units;
  r.metrics["non_units"] = prof.non_units.size();
  r.metrics["index"] = prof.index;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report check_identity_order(const MapTriple& maps, const StructureProfile& prof) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  Check id{"identity_order"}, units{"unit_orders"};
  id.examined = 1;
  if (prof.identity_order != prof.exponent ||
      prof.exponent != static_cast<std::uint64_t>(g.exponent())) {
    fail(id, {kGenA}, "order(i) = " + std::to_string(prof.identity_order) + ", exponent = " +
                          std::to_string(prof.exponent));
  }
  for (Rank u : prof.units) {
    ++units.examined;
    const Element eu = unrank(g, u);
    if (element_order(g, eu) != prof.identity_order) fail(units, {eu}, "unit of smaller order");
  }
  Report r;
  r.subject = "additive order of the identity";
  r.checks = {id, units};
  r.metrics["identity_order"] = prof.identity_order;
  r.metrics["exponent"] = prof.exponent;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report lambda_embedding(const MapTriple& maps, const StructureProfile& prof) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  const auto n = static_cast<Rank>(g.order());
  const auto table = mul_table(maps);
  const auto add_t = addition_table(g);
  const Rank one = rank(g, kGenA);

  Check autos{"lambda_automorphisms"}, inj{"lambda_injective"}, multi{"lambda_multiplicative"},
      orbit{"identity_orbit"};

  std::set<std::vector<Rank>> distinct;
  std::vector<Rank> orbit_set;
  for (Rank u : prof.units) {
    const auto row = table.row(u);
    ++autos.examined;
    std::vector<char> hit(n, 0);
    bool bijective = true;
    for (Rank v : row) {
      if (hit[v]) bijective = false;
      hit[v] = 1;
    }
    if (!bijective) fail(autos, {unrank(g, u)}, "lambda_u is not a bijection");
    for (Rank x = 0; x < n; ++x)
      for (Rank y = 0; y < n; ++y) {
        if (row[add_t.at(x, y)] != add_t.at(row[x], row[y])) {
          fail(autos, {unrank(g, u), unrank(g, x), unrank(g, y)},
               "lambda_u(x + y) != lambda_u(x) + lambda_u(y)");
        }
      }
    distinct.emplace(row.begin(), row.end());
    orbit_set.push_back(row[one]);
  }

  inj.examined = prof.units.size();
  if (distinct.size() != prof.units.size()) {
    fail(inj, {}, std::to_string(distinct.size()) + " distinct maps for " +
                      std::to_string(prof.units.size()) + " units");
  }

  for (Rank u : prof.units)
    for (Rank v : prof.units) {
      ++multi.examined;
      const Rank uv = table.at(u, v);
      for (Rank x = 0; x < n; ++x) {
        if (table.at(uv, x) != table.at(u, table.at(v, x))) {
          fail(multi, {unrank(g, u), unrank(g, v), unrank(g, x)}, "lambda_uv != lambda_u o lambda_v");
          break;
        }
      }
    }

  std::sort(orbit_set.begin(), orbit_set.end());
  orbit_set.erase(std::unique(orbit_set.begin(), orbit_set.end()), orbit_set.end());
  orbit.examined = prof.units.size();
  if (orbit_set != prof.units) fail(orbit, {kGenA}, "orbit of i differs from R*");

  Report r;
  r.subject = "units embed into Aut(R+) by left multiplication";
  r.checks = {autos, inj, multi, orbit};
  r.metrics["distinct_automorphisms"] = distinct.size();
  r.metrics["orbit_size"] = orbit_set.size();
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report check_frattini_theorem(const MapTriple& maps, const StructureProfile& prof,
                              std::size_t bound) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  const auto n = static_cast<Rank>(g.order());
  const Rank one = rank(g, kGenA);
  Report r;
  r.subject = "Frattini characterization of L";
  auto done = [&] {
    r.elapsed_seconds = seconds_since(start);
    return r;
  };

  if (!prof.local()) {
    Check pre{"precondition"};
    fail(pre, {}, "non-invertible elements do not form a subgroup");
    r.checks.push_back(pre);
    return done();
  }
  const std::uint64_t h_order = static_cast<std::uint64_t>(n) * prof.non_units.size();
  r.metrics["H_order"] = h_order;
  if (h_order > bound) {
    r.metrics["status"] = "skipped";
    r.metrics["reason"] = "|H| = " + std::to_string(h_order) + " exceeds bound " + std::to_string(bound);
    return done();
  }
  r.metrics["status"] = "computed";

  const auto table = mul_table(maps, bound);
  const auto in_units = membership(n, prof.units);

  // i + L
  std::vector<Rank> coset;
  for (Rank l : prof.non_units) coset.push_back(rank(g, add(g, kGenA, unrank(g, l))));
  std::sort(coset.begin(), coset.end());
  const auto in_coset = membership(n, coset);

  Check group{"coset_is_group"};
  for (Rank u : coset) {
    ++group.examined;
    if (!in_units[u]) fail(group, {unrank(g, u)}, "element of i + L is not invertible");
    else if (!in_coset[prof.inverse[u]]) fail(group, {unrank(g, u)}, "inverse leaves i + L");
    for (Rank v : coset) {
      if (!in_coset[table.at(u, v)]) fail(group, {unrank(g, u), unrank(g, v)}, "i + L not closed");
    }
  }
  r.checks.push_back(group);
  if (!group.passed) return done();

  std::vector<Permutation> actors;
  std::size_t identity_pos = 0;
  for (Rank u : coset) {
    if (u == one) identity_pos = actors.size();
    const auto row = table.row(u);
    actors.emplace_back(row.begin(), row.end());
  }
  const auto carrier = CayleyGroup::from_params(g, bound);
  const auto h = semidirect_product(carrier, actors, bound);
  const std::size_t na = actors.size();

  Check sylow{"H_sylow_order"};
  sylow.examined = 1;
  {
    std::uint64_t total = static_cast<std::uint64_t>(n) * prof.units.size();
    std::uint64_t ppart = 1;
    while (total % static_cast<std::uint64_t>(g.p()) == 0) {
      total /= static_cast<std::uint64_t>(g.p());
      ppart *= static_cast<std::uint64_t>(g.p());
    }
    if (ppart != h.order()) {
      fail(sylow, {}, "|H| = " + std::to_string(h.order()) + " but the p-part of |R+||R*| is " +
                          std::to_string(ppart));
    }
  }
  r.checks.push_back(sylow);

  const std::uint64_t full_order = static_cast<std::uint64_t>(n) * prof.units.size();
  if (full_order <= bound) {
    // Normality of H inside R+ x| R*.
    std::vector<Permutation> all_actors;
    std::vector<std::size_t> unit_pos(n, 0);
    for (Rank u : prof.units) {
      unit_pos[u] = all_actors.size();
      const auto row = table.row(u);
      all_actors.emplace_back(row.begin(), row.end());
    }
    const auto big = semidirect_product(carrier, all_actors, bound);
    const std::size_t nu = all_actors.size();
    std::vector<char> in_h(big.order(), 0);
    for (Rank x = 0; x < n; ++x)
      for (Rank u : coset) in_h[x * nu + unit_pos[u]] = 1;
    Check normal{"H_normal"};
    for (Rank gg = 0; gg < big.order(); ++gg) {
      const Rank gi = big.inverse(gg);
      for (Rank hh = 0; hh < big.order(); ++hh) {
        if (!in_h[hh]) continue;
        ++normal.examined;
        if (!in_h[big.op(big.op(gg, hh), gi)]) {
          fail(normal, {}, "H is not normal in R+ x| R*");
          break;
        }
      }
    }
    r.checks.push_back(normal);
    r.metrics["G_order"] = full_order;
  }

  const auto phi_h = frattini_pgroup(h);
  std::vector<Rank> l_from_phi;
  for (Rank k : phi_h)
    if (k % na == identity_pos) l_from_phi.push_back(static_cast<Rank>(k / na));
  Check l_eq{"L_equals_R_cap_PhiH"};
  l_eq.examined = n;
  if (l_from_phi != prof.non_units) {
    fail(l_eq, {}, "R+ n Phi(H) has " + std::to_string(l_from_phi.size()) + " elements, L has " +
                       std::to_string(prof.non_units.size()));
  }
  r.checks.push_back(l_eq);

  const auto phi_r = frattini_pgroup(carrier);
  const auto in_l = membership(n, prof.non_units);
  Check phi_in_l{"PhiR_in_L"};
  for (Rank x : phi_r) {
    ++phi_in_l.examined;
    if (!in_l[x]) fail(phi_in_l, {unrank(g, x)}, "element of Phi(R+) is invertible");
  }
  r.checks.push_back(phi_in_l);

  if (h.order() <= kExhaustiveFrattiniOracleOrder) {
    Check cross{"PhiH_cross_oracle"};
    cross.examined = h.order();
    if (frattini_by_maximal_subgroups(h) != phi_h) {
      fail(cross, {}, "powers-and-commutators and maximal-subgroup routes disagree");
    }
    r.checks.push_back(cross);
  }
  r.metrics["PhiH_order"] = phi_h.size();
  r.metrics["PhiR_order"] = phi_r.size();
  r.metrics["R_cap_PhiH_order"] = l_from_phi.size();
  return done();
}

MultGroupInfo mult_group_structure(const MapTriple& maps, const StructureProfile& prof) {
  const auto& g = maps.params();
  const auto table = mul_table(maps);
  const Rank one = rank(g, kGenA);
  MultGroupInfo info;
  info.order = prof.units.size();
  for (Rank u : prof.units) {
    std::uint64_t k = 1;
    Rank acc = u;
    while (acc != one) {
      acc = table.at(acc, u);
      ++k;
    }
    ++info.order_histogram[k];
    for (Rank v : prof.units) {
      if (table.at(u, v) != table.at(v, u)) info.abelian = false;
    }
  }
  return info;
}

StructureProfile analyze(const MapTriple& maps, std::size_t bound) {
  auto prof = invertible_set(maps, bound);
  prof.mult = mult_group_structure(maps, prof);
  return prof;
}

bool is_local(const MapTriple& maps, std::size_t bound) {
  return invertible_set(maps, bound).local();
}

Json to_json(const StructureProfile& prof) {
  Json j;
  const auto& g = prof.params;
  j["params"] = {{"p", g.p()}, {"m", g.m()}, {"n", g.n()}, {"d", g.d()}};
  j["order"] = g.order();
  j["units"] = prof.units.size();
  j["non_units"] = prof.non_units.size();
  j["local"] = prof.local();
  j["index"] = prof.index;
  j["index_is_p"] = prof.index_is_p;
  j["x1_criterion_holds"] = prof.x1_criterion_holds;
  j["identity_order"] = prof.identity_order;
  j["exponent"] = prof.exponent;
  Json mult;
  mult["order"] = prof.mult.order;
  mult["abelian"] = prof.mult.abelian;
  // p^(N-1)(p-1) with |R+| = p^N, for comparison only
  const auto reference = g.order() / static_cast<std::uint64_t>(g.p()) * static_cast<std::uint64_t>(g.p() - 1);
  mult["reference_order"] = reference;
  mult["matches_reference"] = prof.mult.order == reference;
  Json hist = Json::object();
  for (const auto& [k, v] : prof.mult.order_histogram) hist[std::to_string(k)] = v;
  mult["order_histogram"] = hist;
  j["mult_group"] = mult;
  Json units = Json::array();
  for (Rank u : prof.units) units.push_back(to_string(unrank(g, u)));
  j["unit_elements"] = units;
  return j;
}

std::string format_profile(const StructureProfile& prof) {
  std::ostringstream os;
  auto line = [&os](const std::string& key, const std::string& value) {
    os << std::left << std::setw(24) << key << value << "\n";
  };
  auto yes = [](bool b) { return std::string(b ? "yes" : "no"); };
  line("group", prof.params.to_string());
  line("order", std::to_string(prof.params.order()));
  line("|R*|", std::to_string(prof.units.size()));
  line("|L|", std::to_string(prof.non_units.size()));
  line("local", yes(prof.local()));
  line("index of L", std::to_string(prof.index));
  line("index is p", yes(prof.index_is_p));
  line("x1 criterion", yes(prof.x1_criterion_holds));
  line("order of i", std::to_string(prof.identity_order));
  line("exponent", std::to_string(prof.exponent));
  line("R* abelian", yes(prof.mult.abelian));
  std::string hist;
  for (const auto& [k, v] : prof.mult.order_histogram) {
    if (!hist.empty()) hist += " ";
    hist += std::to_string(k) + ":" + std::to_string(v);
  }
  line("R* order histogram", hist);
  return os.str();
}

}  // namespace nearring
