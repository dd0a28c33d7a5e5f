#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "flexrig/errors.hpp"
#include "flexrig/motion.hpp"

namespace flexrig {

class TrackerError : public MotionError {
 public:
  using MotionError::MotionError;
};

struct Point2 {
  double x = 0;
  double y = 0;
};

using Realization = std::vector<Point2>;

struct TrackerOptions {
  int steps = 200;
  double step_size = 1e-2;
  double tol = 1e-10;
  // Singular values below rank_tol * sigma_max count as zero.
  double rank_tol = 1e-8;
  double min_margin = 1e-6;
  int max_corrector_iterations = 30;
  int max_halvings = 20;
  // +1 or -1: which way along the kernel to start.
  int direction = 1;
  std::optional<Edge> watch;
  // Edges kept out of the Jacobian but still checked in the residual.
  std::vector<Edge> implied;
};

struct TrackSample {
  int step = 0;
  double arc = 0;
  Realization points;
  double residual = 0;
  double min_pair_distance = 0;
  double watched = std::numeric_limits<double>::quiet_NaN();
};

struct TrackResult {
  std::vector<TrackSample> samples;
  int kernel_dimension = 0;
  std::vector<int> low_margin_steps;

  double min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) m = std::min(m, s.min_pair_distance);
    return m;
  }

  double max_residual() const {
    double r = 0;
    for (const auto& s : samples) r = std::max(r, s.residual);
    return r;
  }

  double watched_variation() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& s : samples) {
      lo = std::min(lo, s.watched);
      hi = std::max(hi, s.watched);
    }
    return samples.empty() ? 0 : hi - lo;
  }
};

namespace detail {

class ConstraintSystem {
 public:
  ConstraintSystem(const Graph& g, std::vector<double> lambda_sq, Edge fixed, const std::vector<Edge>& implied)
      : g_(g), lambda_sq_(std::move(lambda_sq)), fixed_(fixed) {
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
      const bool skip = std::find(implied.begin(), implied.end(), g.edge(i)) != implied.end();
      if (!skip) active_.push_back(i);
    }
  }

  int unknowns() const { return 2 * g_.n(); }
  int equations() const { return static_cast<int>(active_.size()) + 3; }

  Eigen::VectorXd value(const Eigen::VectorXd& p) const {
    Eigen::VectorXd f(equations());
    int r = 0;
    for (std::size_t i : active_) f(r++) = edge_residual(p, i);
    f(r++) = p(2 * fixed_.u);
    f(r++) = p(2 * fixed_.u + 1);
    f(r++) = p(2 * fixed_.v + 1);
    return f;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& p) const {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(equations(), unknowns());
    int r = 0;
    for (std::size_t i : active_) {
      const Edge& e = g_.edge(i);
      const double dx = p(2 * e.u) - p(2 * e.v);
      const double dy = p(2 * e.u + 1) - p(2 * e.v + 1);
      j(r, 2 * e.u) = 2 * dx;
      j(r, 2 * e.u + 1) = 2 * dy;
      j(r, 2 * e.v) = -2 * dx;
      j(r, 2 * e.v + 1) = -2 * dy;
      ++r;
    }
    j(r++, 2 * fixed_.u) = 1;
    j(r++, 2 * fixed_.u + 1) = 1;
    j(r++, 2 * fixed_.v + 1) = 1;
    return j;
  }

  // Largest |d^2 - lambda^2| over all edges, implied ones included.
  double residual(const Eigen::VectorXd& p) const {
    double worst = 0;
    for (std::size_t i = 0; i < g_.num_edges(); ++i) worst = std::max(worst, std::abs(edge_residual(p, i)));
    return worst;
  }

 private:
  double edge_residual(const Eigen::VectorXd& p, std::size_t i) const {
    const Edge& e = g_.edge(i);
    const double dx = p(2 * e.u) - p(2 * e.v);
    const double dy = p(2 * e.u + 1) - p(2 * e.v + 1);
    return dx * dx + dy * dy - lambda_sq_[i];
  }

  const Graph& g_;
  std::vector<double> lambda_sq_;
  Edge fixed_;
  std::vector<std::size_t> active_;
};

inline Eigen::VectorXd flatten(const Realization& r) {
  Eigen::VectorXd p(2 * static_cast<Eigen::Index>(r.size()));
  for (std::size_t v = 0; v < r.size(); ++v) {
    p(2 * v) = r[v].x;
    p(2 * v + 1) = r[v].y;
  }
  return p;
}

inline Realization unflatten(const Eigen::VectorXd& p) {
  Realization r(static_cast<std::size_t>(p.size() / 2));
  for (std::size_t v = 0; v < r.size(); ++v) r[v] = {p(2 * v), p(2 * v + 1)};
  return r;
}

// Moves u to the origin and v onto the positive x-axis.
inline Realization pin(const Realization& r, Edge fixed) {
  const Point2 o = r[fixed.u];
  const double dx = r[fixed.v].x - o.x;
  const double dy = r[fixed.v].y - o.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) throw TrackerError("tracker: fixed edge has coinciding endpoints");
  const double c = dx / len;
  const double s = dy / len;
  Realization out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const double x = r[k].x - o.x;
    const double y = r[k].y - o.y;
    out[k] = {c * x + s * y, -s * x + c * y};
  }
  return out;
}

struct Kernel {
  int dimension = 0;
  Eigen::VectorXd direction;
};

inline Kernel kernel_of(const Eigen::MatrixXd& j, double rank_tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(j, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = rank_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cutoff) ++rank;
  Kernel out;
  out.dimension = static_cast<int>(j.cols()) - rank;
  if (out.dimension > 0) out.direction = svd.matrixV().col(rank).normalized();
  return out;
}

inline double min_pair_distance(const Realization& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = a + 1; b < r.size(); ++b) m = std::min(m, std::hypot(r[a].x - r[b].x, r[a].y - r[b].y));
  return m;
}

}  // namespace detail

// Predictor-corrector continuation of a realization along its configuration
// curve with the fixed edge pinned to the positive x-axis.
inline TrackResult track_motion(const Graph& g, const std::vector<double>& lambda_sq, const Realization& start,
                                Edge fixed, const TrackerOptions& opt = {}) {
  if (static_cast<int>(start.size()) != g.n()) throw PreconditionError("tracker: start realization has wrong size");
  if (lambda_sq.size() != g.num_edges()) throw PreconditionError("tracker: labeling size mismatch");
  if (!g.has_edge(fixed.u, fixed.v)) throw PreconditionError("tracker: fixed pair is not an edge");
  if (opt.steps < 0 || opt.step_size <= 0 || opt.tol <= 0) throw PreconditionError("tracker: bad options");
  if (opt.watch && (opt.watch->v >= g.n() || opt.watch->u == opt.watch->v)) {
    throw PreconditionError("tracker: watched pair out of range");
  }

  detail::ConstraintSystem sys(g, lambda_sq, fixed, opt.implied);
  Eigen::VectorXd p = detail::flatten(detail::pin(start, fixed));
  if (sys.residual(p) > opt.tol) {
    throw TrackerError("tracker: start realization violates the labeling (residual " + std::to_string(sys.residual(p)) +
                       ")");
  }
  const detail::Kernel k0 = detail::kernel_of(sys.jacobian(p), opt.rank_tol);
  if (k0.dimension == 0) throw TrackerError("tracker: start realization is infinitesimally rigid, no flex direction");
  if (k0.dimension > 1) {
    throw TrackerError("tracker: start realization is singular, kernel dimension " + std::to_string(k0.dimension));
  }

  TrackResult out;
  out.kernel_dimension = k0.dimension;
  auto record = [&](int step, double arc, const Eigen::VectorXd& q) {
    TrackSample s;
    s.step = step;
    s.arc = arc;
    s.points = detail::unflatten(q);
    s.residual = sys.residual(q);
    s.min_pair_distance = detail::min_pair_distance(s.points);
    if (opt.watch) {
      const Point2 a = s.points[opt.watch->u];
      const Point2 b = s.points[opt.watch->v];
      s.watched = std::hypot(a.x - b.x, a.y - b.y);
    }
    if (s.min_pair_distance < opt.min_margin) out.low_margin_steps.push_back(step);
    out.samples.push_back(std::move(s));
  };
  record(0, 0, p);

  Eigen::VectorXd tangent = k0.direction;
  {
    // Orient by the first clearly nonzero component.
    Eigen::Index lead = 0;
    tangent.cwiseAbs().maxCoeff(&lead);
    if ((tangent(lead) < 0) == (opt.direction > 0)) tangent = -tangent;
  }

  double arc = 0;
  double h = opt.step_size;
  for (int step = 1; step <= opt.steps; ++step) {
    double taken = h;
    Eigen::VectorXd next;
    bool ok = false;
    for (int halving = 0;; ++halving) {
      const Eigen::VectorXd guess = p + taken * tangent;
      Eigen::VectorXd q = guess;
      for (int it = 0; it < opt.max_corrector_iterations; ++it) {
        Eigen::MatrixXd j(sys.equations() + 1, sys.unknowns());
        j << sys.jacobian(q), tangent.transpose();
        Eigen::VectorXd f(sys.equations() + 1);
        f << sys.value(q), tangent.dot(q - guess);
        if (sys.residual(q) < opt.tol * 0.1 && std::abs(f(f.size() - 1)) < opt.tol) {
          ok = true;
          break;
        }
        const Eigen::VectorXd delta = j.colPivHouseholderQr().solve(-f);
        if (!delta.allFinite()) break;
        q += delta;
        if (delta.norm() > 10 * taken + 1) break;
      }
      if (!ok && sys.residual(q) < opt.tol) ok = true;
      if (ok) {
        next = q;
        break;
      }
      if (halving == opt.max_halvings) break;
      taken /= 2;
    }
    if (!ok) throw TrackerError("tracker: corrector diverged at step " + std::to_string(step));
    const detail::Kernel k = detail::kernel_of(sys.jacobian(next), opt.rank_tol);
    if (k.dimension != k0.dimension) {
      throw TrackerError("tracker: rank jump at step " + std::to_string(step) + ", kernel dimension " +
                         std::to_string(k.dimension));
    }
    Eigen::VectorXd t = k.direction;
    if (t.dot(tangent) < 0) t = -t;
    tangent = t;
    arc += (next - p).norm();
    p = next;
    record(step, arc, p);
    // Recover the step size after successful halvings.
    h = std::min(opt.step_size, taken * 4);
  }
  return out;
}

inline TrackResult track_motion(const Labeling& lab, const Realization& start, Edge fixed,
                                const TrackerOptions& opt = {}) {
  std::vector<double> l(lab.lambda_sq.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = lab.lambda_sq[i].get_d();
  return track_motion(lab.graph, l, start, fixed, opt);
}

// Floating-point realization of an exact motion at a rational parameter.
inline Realization realization_at(const ParametrizedMotion& m, const Rational& t) {
  Realization r;
  for (int v = 0; v < m.graph.n(); ++v) {
    const auto x = m.x[v](Gaussian(t));
    const auto y = m.y[v](Gaussian(t));
    if (!x || !y) throw MotionError("realization_at: pole at t = " + t.get_str());
    r.push_back({x->re.get_d(), y->re.get_d()});
  }
  return r;
}

inline void write_track_csv(std::ostream& out, const TrackResult& r) {
  if (r.samples.empty()) return;
  out << "step";
  for (std::size_t v = 0; v < r.samples.front().points.size(); ++v) out << ",x" << v << ",y" << v;
  out << ",residual,min_pair_distance\n";
  out.precision(17);
  for (const auto& s : r.samples) {
    out << s.step;
    for (const auto& pt : s.points) out << ',' << pt.x << ',' << pt.y;
    out << ',' << s.residual << ',' << s.min_pair_distance << '\n';
  }
}

}  // namespace flexrig
