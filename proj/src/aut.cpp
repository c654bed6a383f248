#include "nearring/aut.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <string>

#include "nearring/parallel.hpp"
#include "nearring/pgroup.hpp"

namespace nearring {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t checked_pow(std::uint64_t b, std::int64_t e) {
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b) throw Error("aut order formula overflows");
    r *= b;
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
    throw Error("aut order formula overflows");
  }
  return a * b;
}

bool has_order_dividing(const GroupParams& g, const Element& x, Residue mod) {
  return scalar(g, x, static_cast<std::uint64_t>(mod)) == kZero;
}

}  // namespace

std::uint64_t aut_order_formula(const GroupParams& g) {
  const auto p = static_cast<std::uint64_t>(g.p());
  if (g.m() == g.n()) {
    return checked_mul(checked_mul(checked_pow(p, 2 * g.d() + 4 * g.m() - 5), p * p - 1), p - 1);
  }
  return checked_mul(checked_pow(p, 2 * g.d() + 3 * g.n() + g.m() - 2), (p - 1) * (p - 1));
}

Permutation automorphism_table(const GroupParams& g, const Automorphism& phi) {
  const Element c_image = commutator(g, phi.a_image, phi.b_image);
  Permutation out;
  out.reserve(g.order());
  for (const auto& x : all_elements(g)) {
    const Element img = add(g, add(g, scalar(g, phi.a_image, static_cast<std::uint64_t>(x.x1)),
                                   scalar(g, phi.b_image, static_cast<std::uint64_t>(x.x2))),
                            scalar(g, c_image, static_cast<std::uint64_t>(x.x3)));
    out.push_back(rank(g, img));
  }
  return out;
}

AutRecord aut_brute(const GroupParams& g, const AutOptions& options) {
  const auto start = Clock::now();
  check_table_bound(g.order(), options.max_order, "automorphism search");
  const auto elems = all_elements(g);
  const std::size_t n = elems.size();
  const auto p = g.p();

  std::vector<Element> a_cands, b_cands;
  for (const auto& x : elems) {
    if (element_order(g, x) == static_cast<std::uint64_t>(g.exponent())) a_cands.push_back(x);
    if (has_order_dividing(g, x, g.mod2())) b_cands.push_back(x);
  }

  const std::size_t chunks = std::min<std::size_t>(a_cands.size(), 64);
  std::vector<std::vector<Automorphism>> found(chunks);
  std::vector<std::uint64_t> examined(chunks, 0);
  parallel_chunks(a_cands.size(), chunks, options.threads,
                  [&](std::size_t c, std::size_t lo, std::size_t hi) {
    std::vector<char> hit(n);
    for (std::size_t i = lo; i < hi; ++i) {
      const Element& a1 = a_cands[i];
      for (const Element& b1 : b_cands) {
        ++examined[c];
        // <a', b'> = G iff the images span G/Phi(G) = (Z_p)^2.
        if (((a1.x1 * b1.x2 - a1.x2 * b1.x1) % p + p) % p == 0) continue;
        const Element c1 = commutator(g, a1, b1);
        if (element_order(g, c1) != static_cast<std::uint64_t>(g.mod3())) continue;
        const Automorphism phi{a1, b1};
        const auto table = automorphism_table(g, phi);
        std::fill(hit.begin(), hit.end(), 0);
        bool ok = true;
        for (Rank v : table) {
          if (hit[v]) {
            ok = false;
            break;
          }
          hit[v] = 1;
        }
        for (std::size_t x = 0; ok && x < n; ++x) {
          if (table[rank(g, add(g, elems[x], kGenA))] != rank(g, add(g, elems[table[x]], a1)) ||
              table[rank(g, add(g, elems[x], kGenB))] != rank(g, add(g, elems[table[x]], b1))) {
            ok = false;
          }
        }
        if (ok && options.full_audit) {
          for (std::size_t x = 0; ok && x < n; ++x)
            for (std::size_t y = 0; ok && y < n; ++y)
              if (table[rank(g, add(g, elems[x], elems[y]))] !=
                  rank(g, add(g, elems[table[x]], elems[table[y]])))
                ok = false;
        }
        if (ok) found[c].push_back(phi);
      }
    }
  });

  AutRecord rec{g};
  for (std::size_t c = 0; c < chunks; ++c) {
    rec.automorphisms.insert(rec.automorphisms.end(), found[c].begin(), found[c].end());
    rec.candidates_examined += examined[c];
  }
  rec.brute_order = rec.automorphisms.size();
  rec.formula_order = aut_order_formula(g);
  rec.match = rec.brute_order == rec.formula_order;
  rec.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rec;
}

Report audit_automorphisms(const GroupParams& g, std::span<const Automorphism> autos) {
  const auto start = Clock::now();
  using Key = std::pair<Rank, Rank>;
  std::map<Key, std::size_t> index;
  std::vector<Permutation> tables;
  for (const auto& phi : autos) {
    index.emplace(Key{rank(g, phi.a_image), rank(g, phi.b_image)}, tables.size());
    tables.push_back(automorphism_table(g, phi));
  }
  const Rank ra = rank(g, kGenA), rb = rank(g, kGenB), rc = rank(g, kGenC);
  const auto elems = all_elements(g);

  Check ident{"contains_identity"}, comp{"closed_composition"}, inv{"closed_inverse"},
      orders{"preserves_orders"}, cimg{"commutator_image"};
  auto fail = [](Check& c, std::vector<Element> w, const char* detail) {
    if (c.passed) {
      c.counterexample = std::move(w);
      c.detail = detail;
    }
    c.passed = false;
    ++c.failures;
  };

  ident.examined = 1;
  if (!index.count({ra, rb})) fail(ident, {}, "identity automorphism missing");

  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    ++cimg.examined;
    if (t[rc] != rank(g, commutator(g, autos[i].a_image, autos[i].b_image))) {
      fail(cimg, {autos[i].a_image, autos[i].b_image}, "image of c is not [a', b']");
    }
    for (std::size_t x = 0; x < elems.size(); ++x) {
      ++orders.examined;
      if (element_order(g, elems[x]) != element_order(g, elems[t[x]])) {
        fail(orders, {autos[i].a_image, autos[i].b_image, elems[x]}, "element order changed");
      }
    }
    // The inverse sends a' -> a and b' -> b, so it maps a to t^-1(a).
    Rank pre_a = 0, pre_b = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      if (t[x] == ra) pre_a = static_cast<Rank>(x);
      if (t[x] == rb) pre_b = static_cast<Rank>(x);
    }
    ++inv.examined;
    if (!index.count({pre_a, pre_b})) {
      fail(inv, {autos[i].a_image, autos[i].b_image}, "inverse not in the set");
    }
    for (std::size_t j = 0; j < tables.size(); ++j) {
      ++comp.examined;
      const Key k{t[tables[j][ra]], t[tables[j][rb]]};
      if (!index.count(k)) {
        fail(comp, {autos[i].a_image, autos[i].b_image, autos[j].a_image, autos[j].b_image},
             "composition not in the set");
      }
    }
  }

  Report r;
  r.subject = "automorphism set forms a group";
  r.checks = {ident, comp, inv, orders, cimg};
  r.metrics["size"] = autos.size();
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Report check_lemma6(const GroupParams& g, std::size_t max_order) {
  const auto start = Clock::now();
  check_table_bound(g.order(), max_order, "generator-replacement search");
  const auto elems = all_elements(g);
  Check chk{"companion_exists"};
  std::uint64_t max_order_count = 0, with_companion = 0;
  Json without = Json::array();
  Json companion_of_a;
  for (const auto& x : elems) {
    if (element_order(g, x) != static_cast<std::uint64_t>(g.exponent())) continue;
    ++max_order_count;
    ++chk.examined;
    bool found = false;
    for (const auto& y : elems) {
      if (!has_order_dividing(g, y, g.mod2())) continue;
      const Element c1 = commutator(g, x, y);
      if (element_order(g, c1) != static_cast<std::uint64_t>(g.mod3())) continue;
      const std::vector<Element> gens{x, y};
      if (subgroup_closure(g, gens).size() != g.order()) continue;
      found = true;
      if (x == kGenA) companion_of_a = to_string(y);
      break;
    }
    if (found) {
      ++with_companion;
    } else {
      without.push_back(to_string(x));
      if (chk.passed) chk.counterexample = {x};
      chk.passed = false;
      ++chk.failures;
    }
  }
  if (!chk.passed) chk.detail = "element of maximal order with no companion generator";
  Report r;
  r.subject = "every element of order p^m can play the role of a";
  r.checks = {chk};
  r.metrics["max_order_elements"] = max_order_count;
  r.metrics["with_companion"] = with_companion;
  r.metrics["without_companion"] = without;
  r.metrics["companion_of_a"] = companion_of_a;
  r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

Json to_json(const AutRecord& rec, bool with_witnesses) {
  Json j;
  const auto& g = rec.params;
  j["params"] = {{"p", g.p()}, {"m", g.m()}, {"n", g.n()}, {"d", g.d()}};
  j["brute_order"] = rec.brute_order;
  j["formula_order"] = rec.formula_order;
  j["match"] = rec.match;
  if (!rec.match) {
    j["mismatch"] = "brute-force count differs from the closed-form value";
  }
  j["candidates_examined"] = rec.candidates_examined;
  if (with_witnesses) {
    Json autos = Json::array();
    for (const auto& phi : rec.automorphisms)
      autos.push_back(Json::array({to_string(phi.a_image), to_string(phi.b_image)}));
    j["automorphisms"] = autos;
  }
  j["elapsed_seconds"] = rec.elapsed_seconds;
  return j;
}

}  // namespace nearring
