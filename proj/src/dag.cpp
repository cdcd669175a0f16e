#include "enumkit/dag.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "enumkit/errors.hpp"

namespace enumkit {

Dag Dag::make(uint32_t vertices, std::vector<std::pair<uint32_t, uint32_t>> arc_list,
              uint32_t source, uint32_t target) {
  Dag g;
  g.vertex_count = vertices;
  g.arcs = std::move(arc_list);
  g.source = source;
  g.target = target;
  if (vertices == 0) throw ValidationError("graph needs at least one vertex");
  auto check = [&](uint32_t v, const char* what) {
    if (v < 1 || v > vertices)
      throw ValidationError(std::string(what) + " vertex " + std::to_string(v) +
                            " out of range 1.." + std::to_string(vertices));
  };
  check(source, "source");
  check(target, "target");
  g.adjacency.assign(vertices + 1, {});
  std::vector<uint32_t> indegree(vertices + 1, 0);
  for (const auto& [u, v] : g.arcs) {
    check(u, "arc");
    check(v, "arc");
    g.adjacency[u].push_back(v);
    ++indegree[v];
  }
  // Kahn's algorithm; any leftover vertex sits on a cycle.
  std::deque<uint32_t> ready;
  for (uint32_t v = 1; v <= vertices; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  g.topo_rank.assign(vertices + 1, 0);
  uint32_t placed = 0;
  while (!ready.empty()) {
    const uint32_t v = ready.front();
    ready.pop_front();
    g.topo_rank[v] = ++placed;
    for (uint32_t w : g.adjacency[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (placed != vertices) throw ValidationError("arc list contains a cycle");
  return g;
}

std::vector<uint32_t> Dag::decode_path(const Solution& vertex_set) const {
  std::vector<uint32_t> seq;
  for (uint32_t pos : vertex_set.one_positions()) seq.push_back(pos + 1);
  std::sort(seq.begin(), seq.end(),
            [&](uint32_t a, uint32_t b) { return topo_rank[a] < topo_rank[b]; });
  return seq;
}

Dag make_layered_dag(uint32_t layers) {
  if (layers == 0) throw ValidationError("need at least one layer");
  // source, layers-1 ranks of two vertices, target
  const uint32_t source = 1;
  const uint32_t target = 2 * (layers - 1) + 2;
  std::vector<std::pair<uint32_t, uint32_t>> arcs;
  auto rank_vertex = [](uint32_t rank, uint32_t side) { return 2 + 2 * (rank - 1) + side; };
  if (layers == 1) {
    arcs.push_back({source, target});
  } else {
    for (uint32_t side = 0; side < 2; ++side) arcs.push_back({source, rank_vertex(1, side)});
    for (uint32_t rank = 1; rank + 1 <= layers - 1; ++rank)
      for (uint32_t a = 0; a < 2; ++a)
        for (uint32_t b = 0; b < 2; ++b)
          arcs.push_back({rank_vertex(rank, a), rank_vertex(rank + 1, b)});
    for (uint32_t side = 0; side < 2; ++side)
      arcs.push_back({rank_vertex(layers - 1, side), target});
  }
  return Dag::make(target, std::move(arcs), source, target);
}

namespace {

class DagPathEnumerator final : public Enumerator {
 public:
  explicit DagPathEnumerator(Dag g) : g_(std::make_shared<const Dag>(std::move(g))) {
    // Keep only vertices from which the target is reachable.
    marked_.assign(g_->vertex_count + 1, 0);
    std::vector<std::vector<uint32_t>> reverse(g_->vertex_count + 1);
    for (const auto& [u, v] : g_->arcs) reverse[v].push_back(u);
    std::deque<uint32_t> queue{g_->target};
    marked_[g_->target] = 1;
    while (!queue.empty()) {
      const uint32_t v = queue.front();
      queue.pop_front();
      for (uint32_t u : reverse[v]) {
        if (!marked_[u]) {
          marked_[u] = 1;
          queue.push_back(u);
        }
      }
    }
    if (marked_[g_->source]) {
      on_path_ = BitVec(g_->vertex_count);
      on_path_.set(g_->source - 1, true);
      stack_.push_back({g_->source, 0, false});
    }
  }

  StepOutcome step() override {
    if (stack_.empty()) return StepOutcome::make_done();
    Frame& f = stack_.back();
    if (f.vertex == g_->target) {
      if (!f.emitted) {
        f.emitted = true;
        return StepOutcome::make_emit(on_path_);
      }
      return backtrack();
    }
    // Every marked vertex other than the target has a marked successor, so
    // each descent is on a path that will be emitted.
    const auto& adj = g_->adjacency[f.vertex];
    while (f.next_arc < adj.size() && !marked_[adj[f.next_arc]]) ++f.next_arc;
    if (f.next_arc == adj.size()) return backtrack();
    const uint32_t w = adj[f.next_arc++];
    on_path_.set(w - 1, true);
    stack_.push_back({w, 0, false});
    return StepOutcome::make_continue();
  }

  std::unique_ptr<Enumerator> clone() const override {
    return std::make_unique<DagPathEnumerator>(*this);
  }

 private:
  struct Frame {
    uint32_t vertex;
    size_t next_arc;
    bool emitted;
  };

  StepOutcome backtrack() {
    on_path_.set(stack_.back().vertex - 1, false);
    stack_.pop_back();
    return stack_.empty() ? StepOutcome::make_done() : StepOutcome::make_continue();
  }

  std::shared_ptr<const Dag> g_;
  std::vector<uint8_t> marked_;
  BitVec on_path_;
  std::vector<Frame> stack_;
};

}  // namespace

Machine dag_paths(const Dag& g) { return Machine::make<DagPathEnumerator>(g); }

}  // namespace enumkit
