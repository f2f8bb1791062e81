#include "gcx/hall.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace gcx {
namespace {

struct Indexed {
  int r = 0;
  int p = 0;
  std::vector<std::vector<int>> lists;  // palette indices, sorted
};

Indexed index_instance(const HallInstance& inst) {
  Indexed ix;
  const std::vector<int> palette = sorted_unique(inst.palette);
  if (palette.size() != inst.palette.size()) {
    throw std::runtime_error("palette not sorted unique");
  }
  ix.r = static_cast<int>(inst.lists.size());
  ix.p = static_cast<int>(palette.size());
  ix.lists.resize(ix.r);
  for (int i = 0; i < ix.r; ++i) {
    for (int c : inst.lists[i]) {
      auto it = std::lower_bound(palette.begin(), palette.end(), c);
      if (it == palette.end() || *it != c) {
        throw std::runtime_error("list color outside palette");
      }
      ix.lists[i].push_back(static_cast<int>(it - palette.begin()));
    }
    ix.lists[i] = sorted_unique(std::move(ix.lists[i]));
  }
  return ix;
}

bool augment(const Indexed& ix, int i, std::vector<char>& visited, std::vector<int>& match_left,
             std::vector<int>& match_right) {
  for (int c : ix.lists[i]) {
    if (visited[c]) continue;
    visited[c] = 1;
    if (match_right[c] < 0 || augment(ix, match_right[c], visited, match_left, match_right)) {
      match_left[i] = c;
      match_right[c] = i;
      return true;
    }
  }
  return false;
}

int union_size(const HallInstance& inst, const std::vector<int>& indices) {
  std::set<int> uni;
  for (int i : indices) uni.insert(inst.lists[i].begin(), inst.lists[i].end());
  return static_cast<int>(uni.size());
}

}  // namespace

HallResult solve_sdr(const HallInstance& inst) {
  const Indexed ix = index_instance(inst);
  std::vector<int> match_left(ix.r, -1), match_right(ix.p, -1);
  for (int i = 0; i < ix.r; ++i) {
    std::vector<char> visited(ix.p, 0);
    augment(ix, i, visited, match_left, match_right);
  }

  HallResult result;
  const bool perfect = std::none_of(match_left.begin(), match_left.end(),
                                    [](int m) { return m < 0; });
  if (perfect) {
    result.feasible = true;
    const std::vector<int> palette = sorted_unique(inst.palette);
    result.sdr.resize(ix.r);
    std::vector<char> taken(ix.p, 0);
    for (int i = 0; i < ix.r; ++i) {
      if (taken[match_left[i]]) throw std::logic_error("matching reused a color");
      taken[match_left[i]] = 1;
      result.sdr[i] = palette[match_left[i]];
    }
    return result;
  }

  // Alternating reachability from the unmatched lists. Every color seen from
  // this set is matched (else an augmenting path existed), so the reached
  // lists outnumber their color union by the number of unmatched starts.
  std::vector<char> in_set(ix.r, 0);
  std::queue<int> q;
  for (int i = 0; i < ix.r; ++i) {
    if (match_left[i] < 0) {
      in_set[i] = 1;
      q.push(i);
    }
  }
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (int c : ix.lists[i]) {
      const int j = match_right[c];
      if (j < 0) throw std::logic_error("free color reachable from an unmatched list");
      if (!in_set[j]) {
        in_set[j] = 1;
        q.push(j);
      }
    }
  }
  for (int i = 0; i < ix.r; ++i) {
    if (in_set[i]) result.violator.push_back(i);
  }
  if (union_size(inst, result.violator) >= static_cast<int>(result.violator.size())) {
    throw std::logic_error("extracted violator does not violate Hall's condition");
  }
  return result;
}

bool is_hall_feasible(const HallInstance& inst) { return solve_sdr(inst).feasible; }

namespace {

bool find_violator_of_size(const HallInstance& inst, int size, int next, std::vector<int>& pick) {
  if (static_cast<int>(pick.size()) == size) {
    return union_size(inst, pick) < size;
  }
  for (int i = next; i < static_cast<int>(inst.lists.size()); ++i) {
    pick.push_back(i);
    if (find_violator_of_size(inst, size, i + 1, pick)) return true;
    pick.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> min_violator(const HallInstance& inst) {
  const int r = static_cast<int>(inst.lists.size());
  if (r > 20) throw std::runtime_error("exhaustive violator search out of range");
  index_instance(inst);  // validation only
  for (int size = 1; size <= r; ++size) {
    std::vector<int> pick;
    if (find_violator_of_size(inst, size, 0, pick)) return pick;
  }
  return std::nullopt;
}

}  // namespace gcx
