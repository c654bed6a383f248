#include "nearring/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>

#include "nearring/analyzer.hpp"
#include "nearring/parallel.hpp"
#include "nearring/pgroup.hpp"
#include "nearring/verifier.hpp"

namespace nearring {

SearchState::SearchState(const GroupParams& g, const EnumerateOptions& options, Residue slope)
    : params_(g), options_(&options), slope_(reduce(slope, g.p())), elems_(all_elements(g)),
      rows_(elems_.size()), assigned_(elems_.size(), 0) {
  if (options.zero_symmetric) conflicted_ = !assign(rank(g, kZero), kZero);
  if (!conflicted_) conflicted_ = !assign(rank(g, kGenA), kGenB);
}

bool SearchState::in_l(const Element& y) const {
  return reduce(static_cast<__int128>(y.x1) - static_cast<__int128>(slope_) * y.x2, params_.p()) == 0;
}

bool SearchState::admissible(Rank x, const Element& row) const {
  const auto& opt = *options_;
  const Element& ex = elems_[x];
  if (opt.zero_symmetric && ex == kZero && row != kZero) return false;
  if (ex == kGenA && row != kGenB) return false;
  if (opt.pointwise_pruning) {
    // x*(b + k a) = xb + k x, read modulo Phi
    const Element image{row.x1 + slope_ * ex.x1, row.x2 + slope_ * ex.x2, 0};
    if (!in_l(image)) return false;
    if (!in_l(ex) && reduce(static_cast<__int128>(ex.x1) * row.x2 -
                                static_cast<__int128>(ex.x2) * row.x1,
                            params_.p()) == 0) {
      return false;
    }
  }
  const auto& sf = opt.subfamily;
  if (sf.alpha && row.x1 != sf.alpha->eval(ex, params_.mod1())) return false;
  if (sf.beta && row.x2 != sf.beta->eval(ex, params_.mod2())) return false;
  if (sf.gamma && row.x3 != sf.gamma->eval(ex, params_.mod3())) return false;
  return true;
}

std::vector<Element> SearchState::candidates(Rank x) const {
  const auto& opt = *options_;
  const Element& ex = elems_[x];
  auto values = [&](const std::optional<MapExpr>& expr, Residue mod) {
    std::vector<Residue> v;
    if (expr) {
      v.push_back(expr->eval(ex, mod));
    } else {
      for (Residue r = 0; r < mod; ++r) v.push_back(r);
    }
    return v;
  };
  const auto as = values(opt.subfamily.alpha, params_.mod1());
  const auto bs = values(opt.subfamily.beta, params_.mod2());
  const auto gs = values(opt.subfamily.gamma, params_.mod3());
  std::vector<Element> out;
  for (Residue a : as)
    for (Residue b : bs)
      for (Residue c : gs) {
        const Element row{a, b, c};
        if (admissible(x, row)) out.push_back(row);
      }
  return out;
}

// Exact without a subfamily: alpha is fixed mod p by beta, and outside L_k the
// second restriction reduces to beta + k x2 != 0 mod p.
std::uint64_t SearchState::candidate_count(Rank x) const {
  const auto& opt = *options_;
  const Element& ex = elems_[x];
  const auto p = params_.p();
  const std::uint64_t na =
      opt.subfamily.alpha ? 1 : static_cast<std::uint64_t>(params_.mod1() / (opt.pointwise_pruning ? p : 1));
  std::uint64_t nb = opt.subfamily.beta ? 1 : static_cast<std::uint64_t>(params_.mod2());
  if (!opt.subfamily.beta && opt.pointwise_pruning && !in_l(ex)) {
    nb -= static_cast<std::uint64_t>(params_.mod2() / p);
  }
  const std::uint64_t ng = opt.subfamily.gamma ? 1 : static_cast<std::uint64_t>(params_.mod3());
  return na * nb * ng;
}

bool SearchState::set_row(Rank x, const Element& row) {
  rows_[x] = row;
  assigned_[x] = 1;
  trail_.push_back(x);
  return true;
}

bool SearchState::assign(Rank x, const Element& row) {
  if (assigned_[x]) {
    if (rows_[x] == row) return true;
    ++stats.conflicts;
    return false;
  }
  if (!admissible(x, row)) {
    ++stats.pointwise_prunes;
    return false;
  }
  set_row(x, row);
  return propagate();
}

bool SearchState::propagate_pair(Rank x, Rank y) {
  const Element& rx = rows_[x];
  const Rank z = rank(params_, mul_with_row(params_, rx, elems_[x], elems_[y]));
  const Element derived = product_row(params_, rx, elems_[x], rows_[y]);
  if (assigned_[z]) {
    if (rows_[z] == derived) return true;
    ++stats.conflicts;
    return false;
  }
  if (!admissible(z, derived)) {
    ++stats.pointwise_prunes;
    return false;
  }
  return set_row(z, derived);
}

bool SearchState::propagate() {
  while (processed_ < trail_.size()) {
    const std::size_t q = processed_++;
    const Rank w = trail_[q];
    for (std::size_t i = 0; i <= q; ++i) {
      const Rank y = trail_[i];
      if (!propagate_pair(w, y)) return false;
      if (y != w && !propagate_pair(y, w)) return false;
    }
  }
  return true;
}

void SearchState::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    assigned_[trail_.back()] = 0;
    trail_.pop_back();
  }
  processed_ = std::min(processed_, mark);
}

std::optional<Rank> SearchState::choose_branch() const {
  std::optional<Rank> best;
  std::uint64_t best_count = 0;
  for (Rank x = 0; x < rows_.size(); ++x) {
    if (assigned_[x]) continue;
    const auto c = candidate_count(x);
    if (!best || c < best_count) {
      best = x;
      best_count = c;
    }
  }
  return best;
}

MapTriple SearchState::to_maps() const {
  std::vector<Residue> a(rows_.size()), b(rows_.size()), c(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    a[k] = rows_[k].x1;
    b[k] = rows_[k].x2;
    c[k] = rows_[k].x3;
  }
  return MapTriple(params_, std::move(a), std::move(b), std::move(c));
}

namespace {

using Decision = std::pair<Rank, Element>;

struct TaskOutput {
  std::vector<MapTriple> solutions;
  SearchStats stats;
  std::uint64_t complete = 0;
  std::uint64_t rejected_verifier = 0;
  std::uint64_t rejected_local = 0;
  std::uint64_t rejected_other_branch = 0;
};

/// Final filter on a complete assignment: full axioms, zero symmetry, locality,
/// and under pruning L = L_k so that no solution is found in two branches.
void accept(const SearchState& s, const EnumerateOptions& options, TaskOutput& out) {
  const auto maps = s.to_maps();
  ++out.complete;
  VerifyOptions vo;
  vo.threads = 1;
  const auto tables = build_tables(maps);
  const bool axioms = verify_left_distributive(tables, vo).passed() &&
                      verify_associative(tables, vo).passed() && verify_identity(maps).passed() &&
                      (!options.zero_symmetric || verify_zero_symmetric(maps).passed());
  if (!axioms) {
    ++out.rejected_verifier;
    return;
  }
  const auto prof = invertible_set(maps);
  if (!prof.local()) {
    ++out.rejected_local;
    return;
  }
  if (options.pointwise_pruning) {
    const auto& g = maps.params();
    for (Rank k = 0; k < g.order(); ++k) {
      if ((prof.inverse[k] == kNoInverse) != s.in_l(unrank(g, k))) {
        ++out.rejected_other_branch;
        return;
      }
    }
  }
  out.solutions.push_back(maps);
}

bool full(const EnumerateOptions& options, const TaskOutput& out) {
  return options.max_solutions && out.solutions.size() >= *options.max_solutions;
}

void dfs(SearchState& s, const EnumerateOptions& options, TaskOutput& out) {
  ++s.stats.nodes;
  if (s.complete()) {
    accept(s, options, out);
    return;
  }
  const Rank x = *s.choose_branch();
  for (const auto& row : s.candidates(x)) {
    const auto mk = s.mark();
    if (s.assign(x, row)) dfs(s, options, out);
    s.undo(mk);
    if (full(options, out)) return;
  }
}

void collect_tasks(SearchState& s, const EnumerateOptions& options, std::size_t depth,
                   std::vector<Decision>& decisions, std::vector<std::vector<Decision>>& tasks) {
  if (s.complete() || depth == options.split_depth) {
    tasks.push_back(decisions);
    return;
  }
  ++s.stats.nodes;
  const Rank x = *s.choose_branch();
  for (const auto& row : s.candidates(x)) {
    const auto mk = s.mark();
    if (s.assign(x, row)) {
      decisions.emplace_back(x, row);
      collect_tasks(s, options, depth + 1, decisions, tasks);
      decisions.pop_back();
    }
    s.undo(mk);
  }
}

}  // namespace

EnumerationResult enumerate_local(const GroupParams& g, const EnumerateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  check_table_bound(g.order(), options.max_order, "local nearring enumeration");

  EnumerationResult result;
  auto& sum = result.summary;
  const Residue branches = options.pointwise_pruning ? static_cast<Residue>(g.p()) : 1;
  std::vector<SearchState> roots;
  std::vector<std::pair<std::size_t, std::vector<Decision>>> tasks;
  for (Residue k = 0; k < branches; ++k) {
    SearchState root(g, options, k);
    sum.stats.merge(root.stats);
    if (root.conflicted()) continue;
    root.stats = {};
    SearchState splitter = root;
    std::vector<Decision> decisions;
    std::vector<std::vector<Decision>> prefixes;
    collect_tasks(splitter, options, 0, decisions, prefixes);
    sum.stats.merge(splitter.stats);
    for (auto& prefix : prefixes) tasks.emplace_back(roots.size(), std::move(prefix));
    roots.push_back(std::move(root));
  }

  std::vector<TaskOutput> outputs(tasks.size());
  parallel_chunks(tasks.size(), tasks.size(), options.threads,
                  [&](std::size_t t, std::size_t, std::size_t) {
    SearchState s = roots[tasks[t].first];
    for (const auto& [x, row] : tasks[t].second) {
      if (!s.assign(x, row)) throw Error("internal: task replay conflicted");
    }
    s.stats = {};
    dfs(s, options, outputs[t]);
    outputs[t].stats = s.stats;
  });

  sum.tasks = tasks.size();
  for (auto& out : outputs) {
    sum.stats.merge(out.stats);
    sum.complete_assignments += out.complete;
    sum.rejected_by_verifier += out.rejected_verifier;
    sum.rejected_non_local += out.rejected_local;
    sum.rejected_other_branch += out.rejected_other_branch;
    for (auto& m : out.solutions) result.solutions.push_back(std::move(m));
  }
  if (options.max_solutions && result.solutions.size() > *options.max_solutions) {
    result.solutions.erase(result.solutions.begin() + static_cast<std::ptrdiff_t>(*options.max_solutions), result.solutions.end());
    sum.truncated = true;
  } else if (options.max_solutions && result.solutions.size() == *options.max_solutions) {
    sum.truncated = true;
  }
  sum.count = result.solutions.size();
  sum.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::optional<MapTriple> transport(const MapTriple& maps, const Automorphism& phi) {
  const auto& g = maps.params();
  const auto table = automorphism_table(g, phi);
  const Rank ra = rank(g, kGenA);
  if (table[ra] != ra) return std::nullopt;
  Permutation inv(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) inv[table[x]] = static_cast<Rank>(x);
  const Element b_pre = unrank(g, inv[rank(g, kGenB)]);
  const auto n = g.order();
  std::vector<Residue> a(n), b(n), c(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const Element pre = unrank(g, inv[x]);
    const Element img = unrank(g, table[rank(g, mul(maps, pre, b_pre))]);
    a[x] = img.x1;
    b[x] = img.x2;
    c[x] = img.x3;
  }
  return MapTriple(g, std::move(a), std::move(b), std::move(c));
}

DedupResult dedup_up_to_aut(const GroupParams& g, std::span<const MapTriple> solutions,
                            std::span<const Automorphism> automorphisms) {
  using Key = std::vector<Residue>;
  auto key_of = [](const MapTriple& m) {
    Key k(m.alpha());
    k.insert(k.end(), m.beta().begin(), m.beta().end());
    k.insert(k.end(), m.gamma().begin(), m.gamma().end());
    return k;
  };
  std::map<Key, std::size_t> index;
  for (std::size_t i = 0; i < solutions.size(); ++i) index.emplace(key_of(solutions[i]), i);

  DedupResult res;
  const Rank ra = rank(g, kGenA);
  std::vector<Automorphism> stabilizer;
  for (const auto& phi : automorphisms) {
    if (automorphism_table(g, phi)[ra] == ra) stabilizer.push_back(phi);
    else ++res.excluded_automorphisms;
  }

  std::vector<char> seen(solutions.size(), 0);
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit{i};
    seen[i] = 1;
    for (const auto& phi : stabilizer) {
      const auto moved = transport(solutions[i], phi);
      const auto it = index.find(key_of(*moved));
      if (it == index.end()) {
        ++res.foreign_images;
        continue;
      }
      orbit.insert(it->second);
      seen[it->second] = 1;
    }
    res.representatives.push_back(i);
    res.orbit_sizes.push_back(orbit.size());
  }
  return res;
}

Json to_json(const EnumerationSummary& s) {
  Json j;
  j["count"] = s.count;
  j["nodes"] = s.stats.nodes;
  j["conflicts"] = s.stats.conflicts;
  j["pointwise_prunes"] = s.stats.pointwise_prunes;
  j["prunes"] = s.stats.conflicts + s.stats.pointwise_prunes;
  j["complete_assignments"] = s.complete_assignments;
  j["rejected_by_verifier"] = s.rejected_by_verifier;
  j["rejected_non_local"] = s.rejected_non_local;
  j["rejected_other_branch"] = s.rejected_other_branch;
  j["tasks"] = s.tasks;
  j["truncated"] = s.truncated;
  j["wall_seconds"] = s.wall_seconds;
  return j;
}

}  // namespace nearring
