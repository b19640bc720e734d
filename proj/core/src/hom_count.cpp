#include "unistab/hom_count.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "unistab/errors.hpp"

namespace unistab {
namespace {

using Element = FiniteGroupTable::Element;
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kMax : r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidInput("homomorphism count overflows 64 bits");
  return r;
}

class Search {
 public:
  Search(const GroupPresentation& p, const FiniteGroupTable& g) : g_(g), gens_(p.generators) {
    // a relator is checked as soon as its largest generator is assigned
    due_.resize(gens_);
    for (const auto& r : p.relators) {
      if (r.empty()) continue;
      std::uint32_t last = 0;
      for (const auto& l : r) last = std::max(last, l.gen);
      due_[last].push_back(r);
    }
    for (const auto& r : p.relators)
      if (!r.empty() && gens_ == 0) never_ = true;
  }

  // Completions with generator 0 fixed to x0.
  std::uint64_t count_from(Element x0) const {
    std::vector<Element> val(gens_, 0);
    val[0] = x0;
    if (!satisfied(0, val)) return 0;
    return recurse(1, val);
  }

  std::uint64_t count_without_generators() const { return never_ ? 0 : 1; }

 private:
  bool satisfied(std::uint32_t k, const std::vector<Element>& val) const {
    for (const auto& r : due_[k]) {
      Element cur = 0;
      for (const auto& l : r) cur = g_.mul(cur, l.exp > 0 ? val[l.gen] : g_.inv(val[l.gen]));
      if (cur != 0) return false;
    }
    return true;
  }

  std::uint64_t recurse(std::uint32_t k, std::vector<Element>& val) const {
    if (k == gens_) return 1;
    std::uint64_t total = 0;
    for (std::size_t x = 0; x < g_.order(); ++x) {
      val[k] = static_cast<Element>(x);
      if (satisfied(k, val)) total = checked_add(total, recurse(k + 1, val));
    }
    return total;
  }

  const FiniteGroupTable& g_;
  std::uint32_t gens_;
  std::vector<std::vector<Word>> due_;
  bool never_ = false;
};

}  // namespace

std::uint64_t search_estimate(const GroupPresentation& p, const FiniteGroupTable& g, const CountOptions& opts) {
  if (p.generators == 0) return 1;
  std::uint64_t est = opts.symmetry_reduction ? g.conjugacy_classes().size() : g.order();
  for (std::uint32_t i = 1; i < p.generators; ++i) est = saturating_mul(est, g.order());
  return est;
}

std::uint64_t count_homs(const GroupPresentation& p, const FiniteGroupTable& g, const CountOptions& opts) {
  const std::uint64_t est = search_estimate(p, g, opts);
  if (est > opts.budget)
    throw BudgetExceeded("homomorphism count into " + g.name(), est, opts.budget);

  const Search search(p, g);
  if (p.generators == 0) return search.count_without_generators();

  // outer loop items: (value of generator 0, weight)
  std::vector<std::pair<Element, std::uint64_t>> items;
  if (opts.symmetry_reduction) {
    for (const auto& cls : g.conjugacy_classes()) items.emplace_back(cls.front(), cls.size());
  } else {
    for (std::size_t x = 0; x < g.order(); ++x) items.emplace_back(static_cast<Element>(x), 1);
  }

  std::vector<std::uint64_t> partial(items.size(), 0);
  std::vector<std::string> errors(items.size());
  unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, items.size()));

  auto work = [&](std::size_t i) {
    try {
      partial[i] = search.count_from(items[i].first);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!errors[i].empty()) throw InvalidInput(errors[i]);
    std::uint64_t weighted = 0;
    if (__builtin_mul_overflow(partial[i], items[i].second, &weighted))
      throw InvalidInput("homomorphism count overflows 64 bits");
    total = checked_add(total, weighted);
  }
  return total;
}

}  // namespace unistab
