#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "periodmap/errors.hpp"
#include "periodmap/kernels.hpp"

namespace periodmap::kernels {

namespace {

double quadratic(const ShortVectorProblem& p, const std::vector<long>& w) {
  double s = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (w[i] == 0) continue;
    double row = 0;
    for (std::size_t j = 0; j < p.n; ++j) row += p.M[i * p.n + j] * static_cast<double>(w[j]);
    s += static_cast<double>(w[i]) * row;
  }
  return s;
}

Eigen::MatrixXd upper_factor(const ShortVectorProblem& p) {
  if (p.n == 0 || p.M.size() != p.n * p.n) throw InputError("short vector problem has a malformed matrix");
  const auto n = static_cast<Eigen::Index>(p.n);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = p.M[static_cast<std::size_t>(i * n + j)];
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) throw NumericalDomainError("quadratic form is not positive definite");
  return llt.matrixU();
}

// Fincke-Pohst descent over the upper Cholesky factor, innermost coordinate
// first; candidates at each level are visited outward from the center.
class Enumerator {
 public:
  Enumerator(const ShortVectorProblem& p, const Eigen::MatrixXd& r) : p_(p), r_(r), w_(p.n, 0) {}

  void run_from_top() { descend(static_cast<int>(p_.n) - 1, 0.0); }

  void run_with_top(long top) {
    const int last = static_cast<int>(p_.n) - 1;
    const double rii = r_(last, last);
    const double term = rii * rii * static_cast<double>(top) * static_cast<double>(top);
    if (term > bound()) return;
    w_[static_cast<std::size_t>(last)] = top;
    ++nodes_;
    if (last == 0) {
      record();
    } else {
      descend(last - 1, term);
    }
    w_[static_cast<std::size_t>(last)] = 0;
  }

  /// Candidate values of the top coordinate for the initial radius.
  std::vector<long> top_values() const { return values(static_cast<int>(p_.n) - 1, 0.0, 0.0); }

  double best() const { return best_; }
  std::size_t nodes() const { return nodes_; }
  std::vector<std::pair<double, std::vector<long>>>& found() { return found_; }

 private:
  double bound() const {
    return std::isinf(best_) ? p_.initial_radius2 : std::min(p_.initial_radius2, best_ * (1 + p_.tie_tolerance));
  }

  std::vector<long> values(int i, double center, double partial) const {
    const double rii = r_(i, i);
    const double budget = bound() - partial;
    if (budget < 0) return {};
    const double half = std::sqrt(budget) / rii;
    const long lo = std::max(-p_.box, static_cast<long>(std::ceil(center - half - 1e-12)));
    const long hi = std::min(p_.box, static_cast<long>(std::floor(center + half + 1e-12)));
    std::vector<long> out;
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    std::stable_sort(out.begin(), out.end(), [center](long a, long b) {
      return std::abs(static_cast<double>(a) - center) < std::abs(static_cast<double>(b) - center);
    });
    return out;
  }

  void descend(int i, double partial) {
    double shift = 0;
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < p_.n; ++j) {
      shift += r_(i, static_cast<Eigen::Index>(j)) * static_cast<double>(w_[j]);
    }
    const double rii = r_(i, i);
    const double center = -shift / rii;
    for (long v : values(i, center, partial)) {
      const double d = rii * (static_cast<double>(v) - center);
      const double q = partial + d * d;
      if (q > bound() * (1 + 1e-12)) break;
      w_[static_cast<std::size_t>(i)] = v;
      ++nodes_;
      if (i == 0) {
        record();
      } else {
        descend(i - 1, q);
      }
    }
    w_[static_cast<std::size_t>(i)] = 0;
  }

  void record() {
    if (std::all_of(w_.begin(), w_.end(), [](long c) { return c == 0; })) return;
    const double q = quadratic(p_, w_);
    if (q > bound()) return;
    found_.emplace_back(q, w_);
    if (q < best_) {
      best_ = q;
      const double keep = bound();
      std::erase_if(found_, [keep](const auto& e) { return e.first > keep; });
    }
  }

  const ShortVectorProblem& p_;
  const Eigen::MatrixXd& r_;
  std::vector<long> w_;
  double best_ = std::numeric_limits<double>::infinity();
  std::size_t nodes_ = 0;
  std::vector<std::pair<double, std::vector<long>>> found_;
};

ShortVectorResult finish(std::vector<std::pair<double, std::vector<long>>> found, double tol, std::size_t nodes) {
  ShortVectorResult r;
  r.nodes = nodes;
  r.minimum = std::numeric_limits<double>::infinity();
  for (const auto& e : found) r.minimum = std::min(r.minimum, e.first);
  for (auto& e : found)
    if (e.first <= r.minimum * (1 + tol)) r.vectors.push_back(std::move(e.second));
  std::sort(r.vectors.begin(), r.vectors.end());
  r.vectors.erase(std::unique(r.vectors.begin(), r.vectors.end()), r.vectors.end());
  return r;
}

}  // namespace

ShortVectorResult shortest_vectors_serial(const ShortVectorProblem& p) {
  const Eigen::MatrixXd r = upper_factor(p);
  Enumerator e(p, r);
  e.run_from_top();
  return finish(std::move(e.found()), p.tie_tolerance, e.nodes());
}

ShortVectorResult shortest_vectors_parallel(const ShortVectorProblem& p) {
  const Eigen::MatrixXd r = upper_factor(p);
  std::vector<long> tops = Enumerator(p, r).top_values();
  std::sort(tops.begin(), tops.end());
  const auto count = static_cast<long>(tops.size());
  std::vector<std::vector<std::pair<double, std::vector<long>>>> parts(tops.size());
  std::vector<std::size_t> nodes(tops.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    Enumerator e(p, r);
    e.run_with_top(tops[static_cast<std::size_t>(t)]);
    parts[static_cast<std::size_t>(t)] = std::move(e.found());
    nodes[static_cast<std::size_t>(t)] = e.nodes();
  }

  std::vector<std::pair<double, std::vector<long>>> all;
  std::size_t total_nodes = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    total_nodes += nodes[t];
    for (auto& e : parts[t]) all.push_back(std::move(e));
  }
  return finish(std::move(all), p.tie_tolerance, total_nodes);
}

std::vector<std::vector<long>> box_enumerate(const ShortVectorProblem& p, double radius2) {
  std::vector<std::vector<long>> out;
  std::vector<long> w(p.n, -p.box);
  for (;;) {
    if (std::any_of(w.begin(), w.end(), [](long c) { return c != 0; }) && quadratic(p, w) <= radius2) {
      out.push_back(w);
    }
    std::size_t i = 0;
    while (i < p.n && w[i] == p.box) w[i++] = -p.box;
    if (i == p.n) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace periodmap::kernels
