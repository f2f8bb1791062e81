#include "gcx/reduction.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "gcx/graph.hpp"
#include "gcx/hall.hpp"

namespace gcx {

std::vector<int> ReductionPackage::residual_indices() const {
  std::vector<int> idx = I0;
  idx.insert(idx.end(), I1.begin(), I1.end());
  return sorted_unique(std::move(idx));
}

int ReductionPackage::s_total() const {
  int total = 0;
  for (int s : s_cap) total += s;
  return total;
}

bool PackageReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClauseCheck& c) { return c.pass; });
}

std::vector<std::string> PackageReport::failed_clauses() const {
  std::vector<std::string> failed;
  for (const ClauseCheck& c : checks) {
    if (!c.pass) failed.push_back(c.clause);
  }
  return failed;
}

namespace {

std::string join_indices(const std::vector<int>& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.size() && i < 8; ++i) os << (i ? "," : "") << idx[i];
  if (idx.size() > 8) os << ",...";
  return os.str();
}

bool shape_ok(const ReductionPackage& pkg, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (pkg.chi < 1) return fail("chi must be >= 1");
  if (pkg.k < 1) return fail("k must be >= 1");
  if (pkg.d < 0) return fail("d must be >= 0");
  const std::size_t n = static_cast<std::size_t>(pkg.chi);
  if (pkg.s_cap.size() != n || pkg.p.size() != n || pkg.q.size() != n || pkg.t_cls.size() != n ||
      pkg.x.size() != n || pkg.y.size() != n || pkg.used_outside.size() != n ||
      pkg.lists.size() != n) {
    return fail("per-class arrays must have length chi");
  }
  auto in_range = [&](const std::vector<int>& idx) {
    for (int i : idx) {
      if (i < 0 || i >= pkg.chi) return false;
    }
    return std::is_sorted(idx.begin(), idx.end()) &&
           std::adjacent_find(idx.begin(), idx.end()) == idx.end();
  };
  if (!in_range(pkg.I0) || !in_range(pkg.I1) || !in_range(pkg.I2)) {
    return fail("index sets must be sorted subsets of [chi]");
  }
  return true;
}

void require_shape(const ReductionPackage& pkg) {
  std::string why;
  if (!shape_ok(pkg, &why)) throw std::runtime_error("invalid package shape: " + why);
}

std::vector<std::vector<int>> residual_lists(const ReductionPackage& pkg,
                                             const std::vector<int>& indices) {
  std::vector<std::vector<int>> lists;
  lists.reserve(indices.size());
  for (int i : indices) lists.push_back(pkg.lists[i]);
  return lists;
}

}  // namespace

PackageReport validate_package(const ReductionPackage& pkg) {
  PackageReport report;
  std::string why;
  if (!shape_ok(pkg, &why)) {
    report.checks.push_back({"shape", false, why});
    return report;
  }
  report.checks.push_back({"shape", true, ""});

  const std::vector<int> I = pkg.residual_indices();
  std::vector<char> in_i0(pkg.chi, 0), in_i(pkg.chi, 0);
  for (int i : pkg.I0) in_i0[i] = 1;
  for (int i : I) in_i[i] = 1;

  auto add = [&](const std::string& clause, const std::vector<int>& bad,
                 const std::string& what) {
    if (bad.empty()) {
      report.checks.push_back({clause, true, ""});
    } else {
      report.checks.push_back({clause, false, what + " at class " + join_indices(bad)});
    }
  };

  {
    std::vector<int> bad;
    for (int i = 0; i < pkg.chi; ++i) {
      if (pkg.q[i] < 0 || pkg.t_cls[i] < 0 || pkg.p[i] != pkg.q[i] + pkg.t_cls[i]) bad.push_back(i);
    }
    add("decomposition", bad, "p_i = q_i + t_i with 0 <= q_i, t_i fails");
  }
  {
    std::vector<int> bad;
    long long sum = 0;
    for (int i = 0; i < pkg.chi; ++i) {
      if (pkg.x[i] < 0 || pkg.x[i] >= pkg.k) bad.push_back(i);
      sum += pkg.x[i];
    }
    const bool total_ok = sum < static_cast<long long>(pkg.k) * pkg.t_prime;
    if (!total_ok && bad.empty()) {
      report.checks.push_back({"budget inequality", false, "sum of x_i is not below k t'"});
    } else {
      add("budget inequality", bad, "x_i out of [0, k)");
      if (!total_ok) {
        report.checks.back().pass = false;
        report.checks.back().detail += " and sum of x_i is not below k t'";
      }
    }
  }
  {
    std::vector<int> bad;
    std::vector<int> owner(pkg.chi, -1);
    auto claim = [&](const std::vector<int>& set, int tag) {
      for (int i : set) {
        if (owner[i] != -1) bad.push_back(i);
        owner[i] = tag;
      }
    };
    claim(pkg.I0, 0);
    claim(pkg.I1, 1);
    claim(pkg.I2, 2);
    for (int i = 0; i < pkg.chi; ++i) {
      if (owner[i] == -1) bad.push_back(i);
      if ((pkg.t_cls[i] == 0) != (owner[i] == 0)) bad.push_back(i);
    }
    add("index-set consistency", sorted_unique(std::move(bad)),
        "I0, I1, I2 must partition the classes with I0 = {t_i = 0}");
  }
  {
    std::vector<int> bad;
    for (int i : I) {
      if (pkg.y[i] < 0 || pkg.y[i] >= pkg.k) bad.push_back(i);
    }
    for (int i : pkg.I0) {
      if (pkg.x[i] != pkg.y[i]) bad.push_back(i);
    }
    add("residual weights", sorted_unique(std::move(bad)),
        "y_i in [0, k) on I and x_i = y_i on I0 fails");
  }
  {
    std::vector<int> bad;
    for (int i : I) {
      const int cap = 2 * pkg.k - pkg.t_prime - pkg.s_cap[i] - pkg.p[i];
      if (pkg.used_outside[i] < 0 || pkg.used_outside[i] > cap) bad.push_back(i);
    }
    add("outside-colors bound", bad, "used_outside_i exceeds 2k - t' - |S n S_i| - p_i");
  }
  {
    std::vector<int> bad;
    for (int i : I) {
      const auto& list = pkg.lists[i];
      bool ok = std::is_sorted(list.begin(), list.end()) &&
                std::adjacent_find(list.begin(), list.end()) == list.end();
      for (int c : list) {
        if (c < 0 || c >= pkg.palette_size) ok = false;
      }
      if (static_cast<int>(list.size()) < pkg.palette_size - pkg.used_outside[i] - pkg.y[i]) {
        ok = false;
      }
      if (!ok) bad.push_back(i);
    }
    add("list-size bound", bad, "|L_i| >= |C| - used_outside_i - y_i over palette colors fails");
  }
  {
    std::vector<std::string> problems;
    long long p_sum = 0;
    for (int v : pkg.p) p_sum += v;
    if (pkg.p_total != p_sum) problems.push_back("p != sum p_i");
    for (int v : pkg.s_cap) {
      if (v < 0) {
        problems.push_back("negative s_cap");
        break;
      }
    }
    if (pkg.t != 2 * pkg.k - pkg.s_total()) problems.push_back("t != 2k - |S|");
    if (pkg.t_prime != pkg.t - pkg.p_total) problems.push_back("t' != t - p");
    long long s1 = 0;
    for (int i : pkg.I1) s1 += pkg.t_cls[i];
    if (pkg.s1 != s1) problems.push_back("s1 != sum of t_i over I1");
    if (pkg.palette_size != 3 * pkg.k - 1 + pkg.d) problems.push_back("|C| != 3k - 1 + d");
    std::string joined;
    for (const auto& s : problems) joined += (joined.empty() ? "" : "; ") + s;
    report.checks.push_back({"aggregate identities", problems.empty(), joined});
  }
  {
    std::vector<int> bad;
    for (int i : I) {
      const long long bound =
          static_cast<long long>(pkg.t_cls[i]) *
          (pkg.palette_size - 3 * pkg.k + pkg.t_prime + pkg.s1 + pkg.s_cap[i] + pkg.q[i]);
      if (pkg.x[i] < bound) bad.push_back(i);
    }
    add("excess lower bound", bad,
        "x_i >= t_i(|C| - 3k + t' + s1 + |S n S_i| + q_i) fails");
  }
  return report;
}

long long NumericalLemmaInstance::t_sum() const {
  long long sum = 0;
  for (int v : t) sum += v;
  return sum;
}

void validate_numerical_instance(const NumericalLemmaInstance& inst) {
  auto fail = [](const std::string& why) {
    throw std::runtime_error("invalid numerical lemma instance: " + why);
  };
  if (inst.d < 0) fail("d < 0");
  if (inst.r < 3 || inst.r > inst.k + inst.d) fail("r outside [3, k+d]");
  if (inst.t_prime < 1 || inst.t_prime > inst.r - inst.d - 2) fail("t' outside [1, r-d-2]");
  if (inst.b < 1) fail("b < 1");
  if (inst.a < 0 || inst.a + inst.b != inst.r) fail("a + b != r");
  if (static_cast<int>(inst.t.size()) != inst.b) fail("t vector length != b");
  for (int tj : inst.t) {
    if (tj < 1 || tj > inst.cap_m()) fail("t_j outside [1, M]");
  }
}

long long numerical_lemma_lhs(const NumericalLemmaInstance& inst) {
  validate_numerical_instance(inst);
  const long long a_slack = inst.slack_a();
  const long long m = inst.cap_m();
  const long long t_total = inst.t_sum();
  long long lhs = static_cast<long long>(inst.a) * a_slack;
  for (int tj : inst.t) {
    const long long u = static_cast<long long>(tj) * (inst.t_prime + t_total + inst.d - 1);
    const long long v = a_slack + static_cast<long long>(tj) * (tj - m);
    lhs += std::max(u, v);
  }
  return lhs;
}

long long numerical_lemma_d1(const NumericalLemmaInstance& inst) {
  validate_numerical_instance(inst);
  const long long a_slack = inst.slack_a();
  const long long t_total = inst.t_sum();
  const long long d1 = static_cast<long long>(inst.a) * a_slack +
                       t_total * (inst.t_prime + t_total + inst.d - 1) -
                       static_cast<long long>(inst.k) * inst.t_prime;
  // Expanded form in n = k+d-r.
  const long long n = inst.k + inst.d - inst.r;
  const long long m = inst.cap_m();
  const long long expanded = n * (m + inst.d + 1 - inst.b) + t_total * (t_total + inst.d - 1) +
                             static_cast<long long>(inst.t_prime) * (t_total + inst.d - inst.b);
  if (d1 != expanded) throw std::logic_error("D1 expansion identity failed");
  return d1;
}

long long numerical_lemma_d2(const NumericalLemmaInstance& inst) {
  validate_numerical_instance(inst);
  const long long a_slack = inst.slack_a();
  const long long m = inst.cap_m();
  long long d2 = static_cast<long long>(inst.a) * a_slack -
                 static_cast<long long>(inst.k) * inst.t_prime;
  for (int tj : inst.t) d2 += a_slack + static_cast<long long>(tj) * (tj - m);
  const long long n = inst.k + inst.d - inst.r;
  long long expanded = n * (m + inst.d + 1) + static_cast<long long>(inst.d) * inst.t_prime;
  for (int tj : inst.t) expanded += static_cast<long long>(tj) * (tj - m);
  if (d2 != expanded) throw std::logic_error("D2 expansion identity failed");
  return d2;
}

namespace {

void sweep_tuples(NumericalLemmaInstance& inst, int pos, int min_value, SweepResult& out,
                  const std::function<void(const SweepRow&)>& sink) {
  if (pos == inst.b) {
    ++out.instances;
    const long long lhs = numerical_lemma_lhs(inst);
    const long long rhs = static_cast<long long>(inst.k) * inst.t_prime;
    const long long d1 = numerical_lemma_d1(inst);
    const long long d2 = numerical_lemma_d2(inst);
    // max-decomposition bound: sum of maxima dominates both pure sums.
    if (lhs - rhs < std::max(d1, d2)) throw std::logic_error("max-decomposition bound failed");
    SweepRow row{inst.k, inst.d, inst.r, inst.t_prime, inst.a, inst.b, inst.t, lhs, rhs, d1, d2};
    if (sink) sink(row);
    if (lhs < rhs || std::max(d1, d2) < 0) out.counterexamples.push_back(row);
    return;
  }
  for (int v = min_value; v <= inst.cap_m(); ++v) {
    inst.t[pos] = v;
    sweep_tuples(inst, pos + 1, v, out, sink);
  }
}

}  // namespace

SweepResult numerical_lemma_sweep(int k_max, int d_max,
                                  const std::function<void(const SweepRow&)>& sink) {
  SweepResult out;
  for (int k = 1; k <= k_max; ++k) {
    for (int d = 0; d <= d_max; ++d) {
      for (int r = 3; r <= k + d; ++r) {
        for (int t_prime = 1; t_prime <= r - d - 2; ++t_prime) {
          for (int b = 1; b <= r; ++b) {
            NumericalLemmaInstance inst;
            inst.k = k;
            inst.d = d;
            inst.r = r;
            inst.t_prime = t_prime;
            inst.b = b;
            inst.a = r - b;
            inst.t.assign(b, 1);
            sweep_tuples(inst, 0, 1, out, sink);
          }
        }
      }
    }
  }
  return out;
}

bool check_no_large_obstruction(const ReductionPackage& pkg, const std::vector<int>& witness_j) {
  require_shape(pkg);
  const std::vector<int> I = pkg.residual_indices();
  std::vector<char> in_i(pkg.chi, 0), in_j(pkg.chi, 0);
  for (int i : I) in_i[i] = 1;

  const std::vector<int> j_set = sorted_unique(witness_j);
  for (int i : j_set) {
    if (i < 0 || i >= pkg.chi || !in_i[i]) {
      throw std::runtime_error("witness hypotheses violated: J not a subset of I");
    }
    in_j[i] = 1;
  }
  for (int i : pkg.I1) {
    if (!in_j[i]) throw std::runtime_error("witness hypotheses violated: I1 not contained in J");
  }
  if (static_cast<int>(j_set.size()) > pkg.palette_size - 2 * pkg.k + 1) {
    throw std::runtime_error("witness hypotheses violated: J larger than |C| - 2k + 1");
  }
  for (int i : I) {
    if (!in_j[i] && static_cast<int>(pkg.lists[i].size()) < static_cast<int>(I.size())) {
      throw std::runtime_error("witness hypotheses violated: short list outside J");
    }
  }

  HallInstance inst;
  inst.palette.resize(pkg.palette_size);
  for (int c = 0; c < pkg.palette_size; ++c) inst.palette[c] = c;
  inst.lists = residual_lists(pkg, I);
  if (solve_sdr(inst).feasible) return true;

  // A violating family only contains classes whose list is shorter than |I|
  // (otherwise one list alone covers |I| >= |A| colors), and all of those lie
  // in J, whose size is below the k+d+1 threshold.
  int confined = 0;
  for (int i : I) {
    if (static_cast<int>(pkg.lists[i].size()) < static_cast<int>(I.size())) ++confined;
  }
  if (confined >= pkg.k + pkg.d + 1) {
    throw std::logic_error("confinement bound failed despite validated witness");
  }
  return true;
}

std::vector<ObstructionFinding> check_middle_range(const ReductionPackage& pkg) {
  require_shape(pkg);
  const std::vector<int> I = pkg.residual_indices();
  if (static_cast<int>(I.size()) > 20) throw std::runtime_error("enumeration out of range");
  if (pkg.palette_size > 64) throw std::runtime_error("palette too large for enumeration");

  std::vector<char> in_i1(pkg.chi, 0);
  for (int i : pkg.I1) in_i1[i] = 1;
  std::vector<std::uint64_t> masks(I.size(), 0);
  for (std::size_t idx = 0; idx < I.size(); ++idx) {
    for (int c : pkg.lists[I[idx]]) {
      if (c >= 0 && c < 64) masks[idx] |= 1ULL << c;
    }
  }

  std::vector<ObstructionFinding> findings;
  const int max_size = std::min<int>(pkg.k + pkg.d, static_cast<int>(I.size()));
  std::vector<int> pick;
  auto recurse = [&](auto&& self, int next, std::uint64_t uni) -> void {
    const int size = static_cast<int>(pick.size());
    if (size >= 3 && static_cast<int>(std::popcount(uni)) < size) {
      ObstructionFinding f;
      for (int idx : pick) f.indices.push_back(I[idx]);
      f.union_size = static_cast<int>(std::popcount(uni));
      f.kind = "inside-I0";
      for (int cls : f.indices) {
        if (in_i1[cls]) f.kind = "touches-I1";
      }
      findings.push_back(std::move(f));
    }
    if (size == max_size) return;
    for (int idx = next; idx < static_cast<int>(I.size()); ++idx) {
      pick.push_back(idx);
      self(self, idx + 1, uni | masks[idx]);
      pick.pop_back();
    }
  };
  recurse(recurse, 0, 0);
  return findings;
}

ResidualCheck check_residual_feasibility(const ReductionPackage& pkg) {
  require_shape(pkg);
  if (pkg.d < 1) throw std::runtime_error("outside theorem range; use boundary search");
  const std::vector<int> I = pkg.residual_indices();

  HallInstance inst;
  inst.palette.resize(pkg.palette_size);
  for (int c = 0; c < pkg.palette_size; ++c) inst.palette[c] = c;
  inst.lists = residual_lists(pkg, I);

  ResidualCheck out;
  const HallResult res = solve_sdr(inst);
  out.feasible = res.feasible;
  if (!res.feasible) {
    for (int idx : res.violator) out.violator.push_back(I[idx]);
    for (int i : I) {
      const int len = static_cast<int>(pkg.lists[i].size());
      if (len < pkg.d + pkg.t_prime) {
        out.notes.push_back("class " + std::to_string(i) + ": list size " + std::to_string(len) +
                            " below d + t' = " + std::to_string(pkg.d + pkg.t_prime));
      }
      if (len < 2) {
        out.notes.push_back("class " + std::to_string(i) + ": list size below 2");
      }
    }
  }
  return out;
}

namespace {

// Distributes `total` unit increments over `slots` cells, uniformly at random.
std::vector<int> random_composition(int total, int slots, Rng& rng) {
  std::vector<int> cells(slots, 0);
  for (int u = 0; u < total; ++u) ++cells[rng.uniform_int(0, slots - 1)];
  return cells;
}

long long excess_floor(const ReductionPackage& pkg, int i, long long s1) {
  return static_cast<long long>(pkg.t_cls[i]) *
         (pkg.palette_size - 3 * pkg.k + pkg.t_prime + s1 + pkg.s_cap[i] + pkg.q[i]);
}

std::vector<int> sample_list(int size, int window, Rng& rng) {
  std::vector<int> pool(window);
  for (int c = 0; c < window; ++c) pool[c] = c;
  rng.shuffle(pool);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

bool try_generate(int k, int d, Rng& rng, const PackageGenOptions& opts, ReductionPackage& pkg) {
  const int palette = 3 * k - 1 + d;
  pkg = ReductionPackage{};
  pkg.k = k;
  pkg.d = d;
  pkg.palette_size = palette;
  pkg.chi = rng.uniform_int(1, k + d + 1);

  const int s_total = rng.uniform_int(0, std::min(2 * k - 1, pkg.chi + 2));
  pkg.s_cap = random_composition(s_total, pkg.chi, rng);
  pkg.t = 2 * k - s_total;
  pkg.t_prime = rng.uniform_int(1, pkg.t);
  pkg.p_total = pkg.t - pkg.t_prime;
  pkg.p = random_composition(pkg.p_total, pkg.chi, rng);

  pkg.q.resize(pkg.chi);
  pkg.t_cls.resize(pkg.chi);
  for (int i = 0; i < pkg.chi; ++i) {
    pkg.t_cls[i] = rng.uniform_int(0, pkg.p[i]);
    pkg.q[i] = pkg.p[i] - pkg.t_cls[i];
  }

  std::vector<int> candidates;
  for (int i = 0; i < pkg.chi; ++i) {
    if (pkg.t_cls[i] == 0) {
      pkg.I0.push_back(i);
    } else {
      candidates.push_back(i);
    }
  }
  // Move candidates into I1 while every member's excess floor stays below k.
  long long s1 = 0;
  for (int i : candidates) {
    if (!rng.chance(1, 2)) continue;
    const long long s1_next = s1 + pkg.t_cls[i];
    bool fits = excess_floor(pkg, i, s1_next) <= k - 1;
    for (int j : pkg.I1) {
      if (excess_floor(pkg, j, s1_next) > k - 1) fits = false;
    }
    if (fits) {
      pkg.I1.push_back(i);
      s1 = s1_next;
    }
  }
  pkg.s1 = static_cast<int>(s1);
  {
    std::vector<char> in_i1(pkg.chi, 0);
    for (int i : pkg.I1) in_i1[i] = 1;
    for (int i : candidates) {
      if (!in_i1[i]) pkg.I2.push_back(i);
    }
  }

  const long long budget = static_cast<long long>(k) * pkg.t_prime - 1;
  long long mins = 0;
  for (int i : pkg.I1) mins += excess_floor(pkg, i, pkg.s1);
  if (mins > budget) return false;
  long long slack = budget - mins;

  pkg.x.assign(pkg.chi, 0);
  pkg.y.assign(pkg.chi, 0);
  std::vector<char> in_i0(pkg.chi, 0), in_i1(pkg.chi, 0);
  for (int i : pkg.I0) in_i0[i] = 1;
  for (int i : pkg.I1) in_i1[i] = 1;
  for (int i = 0; i < pkg.chi; ++i) {
    if (in_i0[i]) {
      const int cap = static_cast<int>(std::min<long long>(k - 1, slack));
      pkg.y[i] = rng.uniform_int(0, cap);
      pkg.x[i] = pkg.y[i];
      slack -= pkg.y[i];
    } else if (in_i1[i]) {
      const long long lo = excess_floor(pkg, i, pkg.s1);
      pkg.y[i] = rng.uniform_int(0, k - 1);
      long long x_min = lo;
      if (opts.min_part_coherence) {
        auto coherent = [&](int yy) {
          return static_cast<long long>(pkg.t_cls[i] + 1) * yy -
                 static_cast<long long>(pkg.t_cls[i]) * k;
        };
        while (std::max(lo, coherent(pkg.y[i])) > lo + slack && pkg.y[i] > 0) --pkg.y[i];
        x_min = std::max(lo, coherent(pkg.y[i]));
      }
      const long long headroom = std::min<long long>(k - 1 - x_min, slack - (x_min - lo));
      const long long extra = headroom > 0 ? rng.uniform_int(0, static_cast<int>(headroom)) : 0;
      pkg.x[i] = static_cast<int>(x_min + extra);
      slack -= pkg.x[i] - lo;
    } else {
      const int cap = static_cast<int>(std::min<long long>(k - 1, slack));
      pkg.x[i] = rng.uniform_int(0, cap);
      slack -= pkg.x[i];
    }
  }

  const std::vector<int> I = pkg.residual_indices();
  std::vector<char> in_j(pkg.chi, 0);
  if (opts.attach_witness) {
    std::vector<int> j_set = pkg.I1;
    const int extra_cap = std::min<int>(static_cast<int>(pkg.I0.size()),
                                        (k + d) - static_cast<int>(pkg.I1.size()));
    const int extra = extra_cap > 0 ? rng.uniform_int(0, extra_cap) : 0;
    std::vector<int> pool = pkg.I0;
    rng.shuffle(pool);
    pool.resize(extra);
    j_set.insert(j_set.end(), pool.begin(), pool.end());
    pkg.witness_j = sorted_unique(std::move(j_set));
    for (int i : *pkg.witness_j) in_j[i] = 1;
  }

  pkg.used_outside.assign(pkg.chi, 0);
  pkg.lists.assign(pkg.chi, {});
  for (int i : I) {
    const int cap = 2 * k - pkg.t_prime - pkg.s_cap[i] - pkg.p[i];
    pkg.used_outside[i] = cap - rng.geometric(cap);
    int floor = palette - pkg.used_outside[i] - pkg.y[i];
    if (opts.attach_witness && !in_j[i]) floor = std::max(floor, static_cast<int>(I.size()));
    const int size = std::min(palette, floor + rng.geometric(2));
    const int window =
        opts.list_window > 0 ? std::min(palette, std::max(size, opts.list_window)) : palette;
    pkg.lists[i] = sample_list(size, window, rng);
  }
  return true;
}

}  // namespace

ReductionPackage generate_package(int k, int d, std::uint64_t seed, const PackageGenOptions& opts) {
  if (k < 1 || d < 0) throw std::runtime_error("k >= 1 and d >= 0 required");
  std::uint64_t mixed = seed;
  mixed ^= 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(k + 1);
  mixed ^= 0xbf58476d1ce4e5b9ULL * static_cast<std::uint64_t>(d + 1);
  Rng rng(mixed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    ReductionPackage pkg;
    if (!try_generate(k, d, rng, opts, pkg)) continue;
    const PackageReport report = validate_package(pkg);
    if (!report.all_pass()) {
      std::string what;
      for (const auto& clause : report.failed_clauses()) what += clause + " ";
      throw std::logic_error("generated package failed validation: " + what);
    }
    return pkg;
  }
  throw std::runtime_error("no package sampled: k=" + std::to_string(k) +
                           " d=" + std::to_string(d));
}

BoundaryReport boundary_search_d0(int k, int samples, std::uint64_t seed) {
  if (k < 1) throw std::runtime_error("k must be positive");
  BoundaryReport report;
  report.k = k;
  report.samples = samples;
  report.seed = seed;

  const std::vector<std::pair<std::string, PackageGenOptions>> modes = {
      {"constrained", PackageGenOptions{true, true, 0}},
      {"ledger-only", PackageGenOptions{false, false, 4}},
  };
  for (const auto& [name, opts] : modes) {
    BoundaryModeStats stats;
    stats.mode = name;
    for (int s = 0; s < samples; ++s) {
      ReductionPackage pkg;
      try {
        pkg = generate_package(k, 0, seed + static_cast<std::uint64_t>(s), opts);
      } catch (const std::runtime_error&) {
        continue;
      }
      ++stats.sampled;
      const std::vector<int> I = pkg.residual_indices();
      for (int i : I) {
        if (pkg.lists[i].size() == 1) {
          ++stats.singleton_lists;
          break;
        }
      }
      HallInstance inst;
      inst.palette.resize(pkg.palette_size);
      for (int c = 0; c < pkg.palette_size; ++c) inst.palette[c] = c;
      inst.lists = residual_lists(pkg, I);
      const HallResult res = solve_sdr(inst);
      if (res.feasible) continue;
      if (!validate_package(pkg).all_pass()) {
        throw std::logic_error("boundary search produced an invalid package");
      }
      ++stats.hall_bad;
      const int size = static_cast<int>(res.violator.size());
      if (size <= 2) {
        ++stats.bad_pairs;
      } else if (size <= k) {
        ++stats.bad_middle;
      } else {
        ++stats.bad_large;
      }
      if (stats.examples.size() < 2) {
        std::vector<int> classes;
        for (int idx : res.violator) classes.push_back(I[idx]);
        stats.examples.push_back(pkg);
        stats.example_violators.push_back(std::move(classes));
      }
    }
    report.modes.push_back(std::move(stats));
  }
  return report;
}

}  // namespace gcx
