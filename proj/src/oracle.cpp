#include "enumkit/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace enumkit {

SolutionSet::SolutionSet(std::vector<Solution> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool SolutionSet::contains(const Solution& s) const {
  return std::binary_search(items_.begin(), items_.end(), s);
}

SolutionSet solution_set_of(const Trace& t) {
  std::vector<Solution> items;
  items.reserve(t.events.size());
  for (const TraceEvent& e : t.events) items.push_back(e.solution);
  return SolutionSet(std::move(items));
}

namespace {

SolutionSet brute_fold(const SetSystem& x, bool intersect) {
  if (x.m() > 24) throw InstanceTooLarge("subfamily enumeration needs m <= 24");
  std::vector<Solution> out;
  const uint64_t subsets = uint64_t{1} << x.m();
  for (uint64_t mask = 1; mask < subsets; ++mask) {
    BitVec acc = intersect ? BitVec(x.n).complement() : BitVec(x.n);
    for (size_t i = 0; i < x.m(); ++i) {
      if ((mask >> i) & 1) {
        if (intersect)
          acc &= x.sets[i];
        else
          acc |= x.sets[i];
      }
    }
    out.push_back(std::move(acc));
  }
  return SolutionSet(std::move(out));
}

}  // namespace

SolutionSet brute_union(const SetSystem& x) { return brute_fold(x, false); }

SolutionSet brute_intersection(const SetSystem& x) { return brute_fold(x, true); }

SolutionSet brute_dnf(const DnfFormula& d) {
  if (d.n > 24) throw InstanceTooLarge("assignment filtering needs n <= 24");
  std::vector<Solution> out;
  const uint64_t total = uint64_t{1} << d.n;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Solution s(d.n);
    for (uint32_t i = 0; i < d.n; ++i)
      if ((mask >> i) & 1) s.set(i, true);
    if (d.evaluate(s)) out.push_back(std::move(s));
  }
  return SolutionSet(std::move(out));
}

namespace {

void all_paths_dfs(const Dag& g, uint32_t v, BitVec& on_path, std::vector<Solution>& out) {
  if (out.size() > (uint64_t{1} << 20))
    throw InstanceTooLarge("path count exceeds the 2^20 oracle ceiling");
  if (v == g.target) {
    out.push_back(on_path);
    return;
  }
  for (uint32_t w : g.adjacency[v]) {
    if (on_path.get(w - 1)) continue;  // unreachable in a DAG, kept for safety
    on_path.set(w - 1, true);
    all_paths_dfs(g, w, on_path, out);
    on_path.set(w - 1, false);
  }
}

}  // namespace

SolutionSet brute_paths(const Dag& g) {
  std::vector<Solution> out;
  BitVec on_path(g.vertex_count);
  on_path.set(g.source - 1, true);
  all_paths_dfs(g, g.source, on_path, out);
  return SolutionSet(std::move(out));
}

SolutionSet brute_gf2(const Gf2System& sys) {
  if (sys.cols > 20) throw InstanceTooLarge("vector filtering needs n <= 20");
  std::vector<Solution> out;
  const uint64_t total = uint64_t{1} << sys.cols;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Solution x(sys.cols);
    for (uint32_t i = 0; i < sys.cols; ++i)
      if ((mask >> i) & 1) x.set(i, true);
    bool ok = true;
    for (uint32_t r = 0; r < sys.rows && ok; ++r) {
      const uint32_t parity = (sys.row_coeffs[r] & x).count() & 1;
      ok = parity == (sys.rhs.get(r) ? 1u : 0u);
    }
    if (ok) out.push_back(std::move(x));
  }
  return SolutionSet(std::move(out));
}

std::vector<Solution> rbc_reference(uint32_t n) {
  if (n > 20) throw InstanceTooLarge("reflected code reference needs n <= 20");
  // Words of length k prefixed by 0, then the same list reversed prefixed by 1.
  std::vector<std::string> words{""};
  for (uint32_t k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(words.size() * 2);
    for (const std::string& w : words) next.push_back("0" + w);
    for (auto it = words.rbegin(); it != words.rend(); ++it) next.push_back("1" + *it);
    words = std::move(next);
  }
  std::vector<Solution> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(BitVec::from_string(w));
  return out;
}

CompareReport compare(const Trace& t, const SolutionSet& reference) {
  CompareReport rep;
  std::unordered_map<Solution, uint64_t> counts;
  for (const TraceEvent& e : t.events) ++counts[e.solution];
  for (const auto& [s, c] : counts) {
    if (c > 1) rep.duplicated.push_back(s);
    if (!reference.contains(s)) rep.extra.push_back(s);
  }
  for (const Solution& s : reference.items())
    if (counts.find(s) == counts.end()) rep.missing.push_back(s);
  std::sort(rep.duplicated.begin(), rep.duplicated.end());
  std::sort(rep.extra.begin(), rep.extra.end());
  return rep;
}

}  // namespace enumkit
