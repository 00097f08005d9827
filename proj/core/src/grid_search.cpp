#include "stoprank/grid_search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "stoprank/error.hpp"

namespace stoprank {

ParameterLattice::ParameterLattice(std::vector<std::vector<double>> axes) : axes_(std::move(axes)) {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i].empty()) {
      throw Error(ErrorKind::invalid_argument, "lattice axis " + std::to_string(i) + " is empty");
    }
  }
}

std::size_t ParameterLattice::size() const noexcept {
  if (axes_.empty()) return 0;
  std::size_t n = 1;
  for (const auto& a : axes_) n *= a.size();
  return n;
}

std::vector<double> ParameterLattice::point(std::size_t i) const {
  std::vector<double> p(axes_.size());
  for (std::size_t d = axes_.size(); d-- > 0;) {
    const auto& axis = axes_[d];
    p[d] = axis[i % axis.size()];
    i /= axis.size();
  }
  return p;
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {first};
  std::vector<double> out(count);
  const double span = last - first;
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + span * static_cast<double>(i) / steps;
  out.back() = last;
  return out;
}

namespace {

// Strictly better: a < b, with NaN worse than everything.
bool better(double a, double b) {
  if (std::isnan(a)) return false;
  if (std::isnan(b)) return true;
  return a < b;
}

struct Best {
  std::size_t index = std::numeric_limits<std::size_t>::max();
  double value = std::numeric_limits<double>::quiet_NaN();
};

Best scan(const Objective& objective, const ParameterLattice& lattice, std::size_t begin, std::size_t end) {
  Best best;
  for (std::size_t i = begin; i < end; ++i) {
    const auto p = lattice.point(i);
    const double v = objective(p);
    if (best.index == std::numeric_limits<std::size_t>::max() || better(v, best.value)) {
      best = {i, v};
    }
  }
  return best;
}

}  // namespace

GridSearchResult grid_search(const Objective& objective, const ParameterLattice& lattice,
                             const GridSearchOptions& options) {
  const std::size_t n = lattice.size();
  if (n == 0) throw Error(ErrorKind::precondition, "grid search over an empty lattice");

  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, n);
  Best best;
  if (threads == 1) {
    best = scan(objective, lattice, 0, n);
  } else {
    std::vector<Best> partial(threads);
    std::vector<std::exception_ptr> failures(threads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t b = std::min(n, t * chunk);
      const std::size_t e = std::min(n, b + chunk);
      pool.emplace_back([&, t, b, e] {
        try {
          partial[t] = scan(objective, lattice, b, e);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& f : failures) {
      if (f) std::rethrow_exception(f);
    }
    // Chunks are in lattice order, so keeping the earliest on ties matches
    // the sequential scan.
    for (const auto& p : partial) {
      if (p.index == std::numeric_limits<std::size_t>::max()) continue;
      if (best.index == std::numeric_limits<std::size_t>::max() || better(p.value, best.value)) best = p;
    }
  }
  return {lattice.point(best.index), best.value, best.index};
}

}  // namespace stoprank
