#include <algorithm>
#include <exception>
#include <set>
#include <string>
#include <thread>

#include "tilab/errors.hpp"
#include "tilab/metrics.hpp"
#include "tilab/search.hpp"

namespace tilab {
namespace {

struct Slot {
  bool seen = false;
  IndexValue best;
  std::vector<Graph> optimizers;
};

// Running optimum for every (m, objective) pair over some slice of graphs.
class Accumulator {
 public:
  Accumulator(int k, std::vector<int> ms, std::vector<Objective> objectives)
      : k_(k),
        ms_(std::move(ms)),
        objectives_(std::move(objectives)),
        class_size_(ms_.size(), 0),
        slots_(ms_.size() * objectives_.size()),
        max_m_(*std::max_element(ms_.begin(), ms_.end())) {}

  void offer(const Graph& g) {
    if (!is_connected(g)) return;
    const std::optional<int> vk = vertex_k_partiteness_at_most(g, k_, max_m_);
    if (!vk) return;

    const DistanceMetrics metrics = compute_metrics(g);
    values_.clear();
    for (const Objective& o : objectives_) values_.push_back(evaluate(o.kind, g, metrics));

    for (std::size_t i = 0; i < ms_.size(); ++i) {
      if (*vk > ms_[i]) continue;
      ++class_size_[i];
      for (std::size_t j = 0; j < objectives_.size(); ++j) {
        update(slots_[i * objectives_.size() + j], objectives_[j].sense, values_[j], g);
      }
    }
  }

  void absorb(Accumulator& other) {
    for (std::size_t i = 0; i < ms_.size(); ++i) class_size_[i] += other.class_size_[i];
    for (std::size_t s = 0; s < slots_.size(); ++s) {
      Slot& mine = slots_[s];
      Slot& theirs = other.slots_[s];
      if (!theirs.seen) continue;
      const Sense sense = objectives_[s % objectives_.size()].sense;
      if (!mine.seen || better(sense, theirs.best, mine.best)) {
        mine = std::move(theirs);
      } else if (theirs.best == mine.best) {
        for (Graph& g : theirs.optimizers) mine.optimizers.push_back(std::move(g));
      }
    }
  }

  std::vector<ExtremalReport> reports(int n) const {
    std::vector<ExtremalReport> out;
    for (std::size_t i = 0; i < ms_.size(); ++i) {
      const ClassParams params{n, ms_[i], k_};
      const Graph construction = extremal_graph(params);
      const CanonicalCode construction_code = canonical_form(construction);
      for (std::size_t j = 0; j < objectives_.size(); ++j) {
        const Slot& slot = slots_[i * objectives_.size() + j];
        // Cannot happen for full enumeration: the construction is a member.
        if (!slot.seen) throw Error("no member of class m=" + std::to_string(ms_[i]) + " found");

        ExtremalReport r;
        r.params = params;
        r.kind = objectives_[j].kind;
        r.sense = objectives_[j].sense;
        r.optimum = slot.best;
        r.class_size = class_size_[i];
        r.optimizer_count = slot.optimizers.size();
        std::set<CanonicalCode> codes;
        for (const Graph& g : slot.optimizers) codes.insert(canonical_form(g));
        r.optimizer_codes.assign(codes.begin(), codes.end());
        r.matches_construction = r.unique() && r.optimizer_codes.front() == construction_code;
        r.closed_form = closed_form(r.kind, params);
        r.matches_closed_form = r.optimum == r.closed_form.value;
        r.construction_value = evaluate(r.kind, construction);
        out.push_back(std::move(r));
      }
    }
    return out;
  }

 private:
  static bool better(Sense sense, const IndexValue& a, const IndexValue& b) {
    return sense == Sense::Minimize ? a < b : a > b;
  }

  static void update(Slot& slot, Sense sense, const IndexValue& value, const Graph& g) {
    if (!slot.seen || better(sense, value, slot.best)) {
      slot.seen = true;
      slot.best = value;
      slot.optimizers.clear();
      slot.optimizers.push_back(g);
    } else if (value == slot.best) {
      slot.optimizers.push_back(g);
    }
  }

  int k_;
  std::vector<int> ms_;
  std::vector<Objective> objectives_;
  std::vector<std::uint64_t> class_size_;
  std::vector<Slot> slots_;
  int max_m_;
  std::vector<IndexValue> values_;
};

void check_request(int n, int k, std::span<const int> ms, std::span<const Objective> objectives) {
  if (ms.empty()) throw InvalidArgument("no m values to scan");
  if (objectives.empty()) throw InvalidArgument("no objectives to scan");
  for (int m : ms) ClassParams{n, m, k}.validate();
}

}  // namespace

Sense natural_sense(IndexKind kind) {
  return direction(kind) == Direction::Decreasing ? Sense::Minimize : Sense::Maximize;
}

std::vector<ExtremalReport> scan_classes(int n, int k, std::span<const int> ms,
                                         std::span<const Objective> objectives,
                                         const ScanOptions& options) {
  check_request(n, k, ms, objectives);
  check_enumeration_order(n, options.large);
  if (options.workers < 1) throw InvalidArgument("worker count must be at least 1");

  const std::uint64_t total = labeled_graph_count(n);
  const std::uint64_t workers = std::min<std::uint64_t>(options.workers, total);
  std::vector<int> m_list(ms.begin(), ms.end());
  std::vector<Objective> objective_list(objectives.begin(), objectives.end());
  std::vector<Accumulator> partials(workers, Accumulator(k, m_list, objective_list));

  auto run_chunk = [&](std::uint64_t w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t code = lo; code < hi; ++code) {
      partials[w].offer(Graph::from_upper_triangle(n, code));
    }
  };

  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> threads;
    for (std::uint64_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          run_chunk(w);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& f : failures) {
      if (f) std::rethrow_exception(f);
    }
  }

  for (std::uint64_t w = 1; w < workers; ++w) partials[0].absorb(partials[w]);
  return partials[0].reports(n);
}

ExtremalReport scan_class(const ClassParams& params, IndexKind kind, const ScanOptions& options) {
  const int ms[] = {params.m};
  const Objective objectives[] = {{kind, natural_sense(kind)}};
  return scan_classes(params.n, params.k, ms, objectives, options).front();
}

std::vector<ExtremalReport> scan_corpus(std::span<const Graph> graphs, int n, int k,
                                        std::span<const int> ms,
                                        std::span<const Objective> objectives) {
  check_request(n, k, ms, objectives);
  Accumulator acc(k, {ms.begin(), ms.end()}, {objectives.begin(), objectives.end()});
  for (const Graph& g : graphs) {
    if (g.order() == n) acc.offer(g);
  }
  return acc.reports(n);
}

}  // namespace tilab
