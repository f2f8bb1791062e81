#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcx/rng.hpp"

namespace gcx {

// The numeric ledger of a reduction package: per-class parameters, index
// sets, residual lists and aggregate identities. Classes are indexed
// 0..chi-1; I0, I1, I2 partition them, and the residual indices are
// I = I0 u I1. Lists and residual parameters (y, used_outside) are only
// meaningful on I. Packages are data: they can be sampled synthetically or
// loaded from JSON, and every ledger clause is independently checkable.
struct ReductionPackage {
  int k = 1;
  int d = 0;
  int palette_size = 0;  // 3k - 1 + d
  int chi = 0;

  std::vector<int> s_cap;   // |S n S_i|
  std::vector<int> p;       // p_i = q_i + t_i
  std::vector<int> q;
  std::vector<int> t_cls;   // t_i
  std::vector<int> x;       // excess weights, 0 <= x_i < k, sum < k t'
  std::vector<int> y;       // residual weights, < k on I

  std::vector<int> I0, I1, I2;  // sorted partition of [chi]

  int t = 0;        // 2k - |S|
  int t_prime = 0;  // t - p_total
  int p_total = 0;
  int s1 = 0;       // sum of t_i over I1

  std::vector<int> used_outside;           // |c3 colors used outside class i|, on I
  std::vector<std::vector<int>> lists;     // residual lists over colors 0..palette_size-1, on I

  // Optional witness for the large-obstruction check: J with I1 <= J,
  // |J| <= palette_size - 2k + 1, and every list off J of size >= |I|.
  std::optional<std::vector<int>> witness_j;

  std::vector<int> residual_indices() const;  // I, ascending
  int s_total() const;
};

struct ClauseCheck {
  std::string clause;
  bool pass = true;
  std::string detail;
};

struct PackageReport {
  std::vector<ClauseCheck> checks;
  bool all_pass() const;
  std::vector<std::string> failed_clauses() const;
};

// Checks every ledger clause and reports pass/fail per clause. Clause names
// are stable: "shape", "decomposition", "budget inequality",
// "index-set consistency", "residual weights", "outside-colors bound",
// "list-size bound", "aggregate identities", "excess lower bound".
PackageReport validate_package(const ReductionPackage& pkg);

// Parameter box of the arithmetic inequality: integers with d >= 0,
// 3 <= r <= k+d, 1 <= t' <= r-d-2, b >= 1, a+b = r and 1 <= t_j <= M where
// M = r-d-1-t'. The claim: aA + sum_j max{t_j(t'+T+d-1), A+t_j(t_j-M)} >= kt'
// with A = k+d-r+t' and T = sum t_j.
struct NumericalLemmaInstance {
  int k = 0, d = 0, r = 0, t_prime = 0, a = 0, b = 0;
  std::vector<int> t;

  int slack_a() const { return k + d - r + t_prime; }
  int cap_m() const { return r - d - 1 - t_prime; }
  long long t_sum() const;
};

void validate_numerical_instance(const NumericalLemmaInstance& inst);
long long numerical_lemma_lhs(const NumericalLemmaInstance& inst);
// D1 = aA + T(t'+T+d-1) - kt' and D2 = aA + sum_j(A + t_j(t_j-M)) - kt'.
// Each is computed both from its definition and from its expanded form in
// n = k+d-r, as an internal identity check.
long long numerical_lemma_d1(const NumericalLemmaInstance& inst);
long long numerical_lemma_d2(const NumericalLemmaInstance& inst);

struct SweepRow {
  int k, d, r, t_prime, a, b;
  std::vector<int> t;
  long long lhs, rhs, d1, d2;
};

struct SweepResult {
  long long instances = 0;
  std::vector<SweepRow> counterexamples;  // lhs < rhs or max(d1,d2) < 0
};

// Exhaustive enumeration over all valid instances with k <= k_max,
// d <= d_max; t vectors are normalized nondecreasing (the left side is
// symmetric in the t_j). The optional sink receives every row.
SweepResult numerical_lemma_sweep(int k_max, int d_max,
                                  const std::function<void(const SweepRow&)>& sink = nullptr);

// True iff no residual subfamily of size >= k+d+1 violates Hall's condition,
// decided through the matching deficiency plus the witness-set confinement
// (any violating family consists of lists shorter than |I|, hence lives
// inside J, which is too small). Witness hypotheses are validated first.
bool check_no_large_obstruction(const ReductionPackage& pkg, const std::vector<int>& witness_j);

struct ObstructionFinding {
  std::vector<int> indices;  // class ids
  int union_size = 0;
  std::string kind;  // "touches-I1" or "inside-I0"
};

// Enumerates every Hall-violating residual subfamily of size in [3, k+d]
// (requires |I| <= 20) and reports each with its kind. Empty on every
// ledger-valid package; ledger violations in the lists are deliberately not
// rejected here so the checker's sensitivity can be demonstrated.
std::vector<ObstructionFinding> check_middle_range(const ReductionPackage& pkg);

struct ResidualCheck {
  bool feasible = false;
  std::vector<int> violator;             // class ids, when infeasible
  std::vector<std::string> notes;        // stepping-stone diagnostics on failure
};

// Hall feasibility of the residual family (L_i) over I. Only defined for
// d >= 1; at d = 0 use boundary_search_d0.
ResidualCheck check_residual_feasibility(const ReductionPackage& pkg);

struct PackageGenOptions {
  // Attach a witness set J and pad lists off J to length >= |I|.
  bool attach_witness = true;
  // Enforce x_i >= (t_i+1) y_i - k t_i on I1 (the minimum-weight-part
  // relation of the underlying construction; not a ledger clause).
  bool min_part_coherence = true;
  // When > 0, draw list colors from a prefix window of roughly this width so
  // that list collisions become likely (boundary exploration).
  int list_window = 0;
};

// Rejection sampler over the ledger constraint system; byte-identical output
// for a fixed (k, d, seed, options). Throws "no package sampled" when the
// attempt budget is exhausted.
ReductionPackage generate_package(int k, int d, std::uint64_t seed,
                                  const PackageGenOptions& opts = {});

struct BoundaryModeStats {
  std::string mode;  // "constrained" or "ledger-only"
  long long sampled = 0;
  long long hall_bad = 0;
  long long bad_pairs = 0;
  long long bad_middle = 0;  // sizes 3..k
  long long bad_large = 0;   // sizes >= k+1
  // Packages containing a singleton residual list. Only possible at d = 0,
  // where the per-class floor degrades to t'; a Hall-bad pair needs two of
  // them on the same color, which the global budget forbids.
  long long singleton_lists = 0;
  std::vector<ReductionPackage> examples;            // first few offenders
  std::vector<std::vector<int>> example_violators;   // class ids, parallel
};

struct BoundaryReport {
  int k = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::vector<BoundaryModeStats> modes;
};

// Exploration at d = 0, no pass/fail semantics: samples ledger-valid packages
// in both generator modes, runs the residual Hall check on each, re-validates
// any offender against the full ledger, and reports counts by obstruction
// size.
BoundaryReport boundary_search_d0(int k, int samples, std::uint64_t seed);

}  // namespace gcx
