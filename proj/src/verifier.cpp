#include "nearring/verifier.hpp"

#include <array>
#include <chrono>
#include <limits>
#include <mutex>
#include <optional>

#include "nearring/parallel.hpp"
#include "nearring/pgroup.hpp"

namespace nearring {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Triple = std::array<Rank, 3>;

/// Running tally for one triple check; merging is order-independent.
struct Tally {
  std::uint64_t examined = 0;
  std::uint64_t failures = 0;
  std::optional<Triple> first;

  void fail(const Triple& t) {
    ++failures;
    if (!first || t < *first) first = t;
  }
  void merge(const Tally& o) {
    examined += o.examined;
    failures += o.failures;
    if (o.first && (!first || *o.first < *first)) first = o.first;
  }
};

/// Runs `bad(x, y, z)` over the triples selected by `mode`.
template <class Bad>
Tally scan_triples(const NearringTables& t, const VerifyOptions& options, Bad bad) {
  const std::size_t n = t.add.order();
  const std::size_t chunks = 64;
  std::vector<Tally> partial(chunks);
  if (options.mode.kind == VerifyMode::Kind::Exhaustive) {
    parallel_chunks(n, chunks, options.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      Tally& tl = partial[c];
      for (std::size_t x = lo; x < hi; ++x)
        for (Rank y = 0; y < n; ++y)
          for (Rank z = 0; z < n; ++z) {
            ++tl.examined;
            if (bad(static_cast<Rank>(x), y, z)) tl.fail({static_cast<Rank>(x), y, z});
          }
    });
  } else {
    const std::uint64_t k = options.mode.samples;
    const std::uint64_t seed = options.mode.seed;
    parallel_chunks(k, chunks, options.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      Tally& tl = partial[c];
      for (std::size_t i = lo; i < hi; ++i) {
        const std::uint64_t h = splitmix64(seed ^ splitmix64(i));
        const std::uint64_t h2 = splitmix64(h);
        const std::uint64_t h3 = splitmix64(h2);
        const Triple tr{static_cast<Rank>(h % n), static_cast<Rank>(h2 % n),
                        static_cast<Rank>(h3 % n)};
        ++tl.examined;
        if (bad(tr[0], tr[1], tr[2])) tl.fail(tr);
      }
    });
    const std::array<Rank, 2> slice{rank(t.params, kGenB), rank(t.params, kGenC)};
    std::vector<Tally> slices(chunks);
    parallel_chunks(n, chunks, options.threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
      Tally& tl = slices[c];
      for (std::size_t x = lo; x < hi; ++x)
        for (Rank y = 0; y < n; ++y)
          for (Rank z : slice) {
            ++tl.examined;
            if (bad(static_cast<Rank>(x), y, z)) tl.fail({static_cast<Rank>(x), y, z});
          }
    });
    for (const auto& s : slices) partial.front().merge(s);
  }
  Tally total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

Check tally_check(const GroupParams& g, std::string name, const Tally& tl) {
  Check c;
  c.name = std::move(name);
  c.examined = tl.examined;
  c.failures = tl.failures;
  c.passed = tl.failures == 0;
  if (tl.first) {
    for (Rank r : *tl.first) c.counterexample.push_back(unrank(g, r));
  }
  return c;
}

Json mode_json(const VerifyMode& mode) {
  Json j;
  if (mode.kind == VerifyMode::Kind::Exhaustive) {
    j["kind"] = "exhaustive";
  } else {
    j["kind"] = "sampled";
    j["samples"] = mode.samples;
    j["seed"] = mode.seed;
  }
  return j;
}

}  // namespace

VerifyMode default_mode(const GroupParams& g, std::uint64_t seed) {
  if (g.order() <= kExhaustiveOrderLimit) return VerifyMode::exhaustive();
  return VerifyMode::sampled(kDefaultSamples, seed);
}

NearringTables build_tables(const MapTriple& maps, std::size_t bound) {
  return {maps.params(), addition_table(maps.params(), bound), mul_table(maps, bound)};
}

Report verify_left_distributive(const NearringTables& t, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto tl = scan_triples(t, options, [&](Rank x, Rank y, Rank z) {
    return t.mul.at(x, t.add.at(y, z)) != t.add.at(t.mul.at(x, y), t.mul.at(x, z));
  });
  Report r;
  r.subject = "left distributivity";
  r.checks.push_back(tally_check(t.params, "left_distributive", tl));
  if (!r.checks.back().passed) r.checks.back().detail = "x(y+z) != xy + xz for (x, y, z)";
  r.metrics["mode"] = mode_json(options.mode);
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report verify_associative(const NearringTables& t, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto tl = scan_triples(t, options, [&](Rank x, Rank y, Rank z) {
    return t.mul.at(t.mul.at(x, y), z) != t.mul.at(x, t.mul.at(y, z));
  });
  Report r;
  r.subject = "associativity";
  r.checks.push_back(tally_check(t.params, "associative", tl));
  if (!r.checks.back().passed) r.checks.back().detail = "(xy)z != x(yz) for (x, y, z)";
  r.metrics["mode"] = mode_json(options.mode);
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report verify_left_distributive(const MapTriple& maps, const VerifyOptions& options) {
  return verify_left_distributive(build_tables(maps, options.table_bound), options);
}

Report verify_associative(const MapTriple& maps, const VerifyOptions& options) {
  return verify_associative(build_tables(maps, options.table_bound), options);
}

Report verify_identity(const MapTriple& maps) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  Check left{"identity_left"}, right{"identity_right"};
  const Element a_row = xb(maps, kGenA);
  for (const auto& y : all_elements(g)) {
    ++left.examined;
    if (mul_with_row(g, a_row, kGenA, y) != y) {
      if (left.passed) left.counterexample = {y};
      left.passed = false;
      ++left.failures;
    }
    ++right.examined;
    if (mul(maps, y, kGenA) != y) {
      if (right.passed) right.counterexample = {y};
      right.passed = false;
      ++right.failures;
    }
  }
  if (!left.passed) left.detail = "a*y != y for y";
  if (!right.passed) right.detail = "x*a != x for x";
  Report r;
  r.subject = "two-sided identity a=(1,0,0)";
  r.checks = {left, right};
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report verify_zero_symmetric(const MapTriple& maps) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  Check rows{"zero_rows"}, absorbing{"zero_absorbing"};
  const Element zero_row = xb(maps, kZero);
  rows.examined = 1;
  if (zero_row != kZero) {
    rows.passed = false;
    rows.failures = 1;
    rows.counterexample = {kZero, zero_row};
    rows.detail = "row at 0 is (" + to_string(zero_row) + ")";
  }
  for (const auto& x : all_elements(g)) {
    ++absorbing.examined;
    if (mul_with_row(g, zero_row, kZero, x) != kZero) {
      if (absorbing.passed) absorbing.counterexample = {x};
      absorbing.passed = false;
      ++absorbing.failures;
    }
  }
  if (!absorbing.passed) absorbing.detail = "0*x != 0 for x";
  Report r;
  r.subject = "zero symmetry";
  r.checks = {rows, absorbing};
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report check_conditions(const MapTriple& maps) {
  const auto start = Clock::now();
  const auto& g = maps.params();
  const auto elems = all_elements(g);
  const auto zs = verify_zero_symmetric(maps);

  Check c0{"cond0"}, c1{"cond1"}, c2{"cond2"}, c3{"cond3"}, c4{"cond4"}, c5{"cond5"};
  auto fail = [](Check& c, std::vector<Element> witness) {
    if (c.passed) c.counterexample = std::move(witness);
    c.passed = false;
    ++c.failures;
  };

  c0.examined = 1;
  if (zs.at("zero_rows").passed != zs.at("zero_absorbing").passed) {
    fail(c0, zs.at("zero_rows").passed ? zs.at("zero_absorbing").counterexample
                                       : zs.at("zero_rows").counterexample);
    c0.detail = "zero rows and 0*x = 0 disagree";
  }

  for (std::size_t k = 0; k < elems.size(); ++k) {
    const Element& x = elems[k];
    const Element row = maps.row(static_cast<Rank>(k));
    ++c1.examined;
    if (row.x1 % g.p() != 0) fail(c1, {x});
    ++c2.examined;
    if (row.x2 % g.p() == 0 && x.x1 % g.p() != 0) fail(c2, {x});
  }
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Element& x = elems[i];
    const Element rx = maps.row(static_cast<Rank>(i));
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const Element& y = elems[j];
      const Element z = mul_with_row(g, rx, x, y);
      const Element actual = xb(maps, z);
      const Element wanted = product_row(g, rx, x, maps.row(static_cast<Rank>(j)));
      ++c3.examined;
      ++c4.examined;
      ++c5.examined;
      if (actual.x1 != wanted.x1) fail(c3, {x, y});
      if (actual.x2 != wanted.x2) fail(c4, {x, y});
      if (actual.x3 != wanted.x3) fail(c5, {x, y});
    }
  }
  if (!c1.passed) c1.detail = "alpha(x) is not divisible by p";
  if (!c2.passed) c2.detail = "beta(x) = 0 mod p but x1 != 0 mod p";
  if (!c3.passed) c3.detail = "alpha(xy) != x1 alpha(y) + alpha(x) beta(y)";
  if (!c4.passed) c4.detail = "beta(xy) != x2 alpha(y) + beta(x) beta(y)";
  if (!c5.passed) c5.detail = "gamma(xy) differs from the gamma congruence";

  Report r;
  r.subject = "row conditions (0)-(5)";
  r.checks = {c0, c1, c2, c3, c4, c5};
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report verify_axioms(const MapTriple& maps, const VerifyOptions& options) {
  const auto start = Clock::now();
  const auto tables = build_tables(maps, options.table_bound);
  Report r;
  r.subject = "zero-symmetric nearring axioms on " + maps.params().to_string();
  r.append(verify_left_distributive(tables, options));
  r.append(verify_associative(tables, options));
  r.append(verify_identity(maps));
  r.append(verify_zero_symmetric(maps));
  r.elapsed_seconds = seconds_since(start);
  return r;
}

Report verify_all(const MapTriple& maps, const VerifyOptions& options) {
  const auto start = Clock::now();
  Report r = verify_axioms(maps, options);
  r.subject = "nearring axioms and row conditions on " + maps.params().to_string();
  r.append(check_conditions(maps));

  const bool rows_ok = r.at("cond3").passed && r.at("cond4").passed && r.at("cond5").passed;
  const bool assoc_ok = r.at("associative").passed;
  r.metrics["order"] = maps.params().order();
  r.metrics["row_conditions_vs_associativity"] =
      !rows_ok ? "row conditions fail" : assoc_ok ? "row conditions hold, associativity holds"
                                                  : "row conditions hold, associativity fails";
  r.metrics["nearring_with_identity"] = r.at("left_distributive").passed && assoc_ok &&
                                        r.at("identity_left").passed &&
                                        r.at("identity_right").passed;
  r.elapsed_seconds = seconds_since(start);
  return r;
}

}  // namespace nearring
