#include "gme/states.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gme {

namespace {

// Cushion for parameters that land a few ulp outside their exact range
// through grid arithmetic (e.g. 0.7 + 3*0.1 > 1).
constexpr double kParamSlack = 1e-12;

double sqrt_nonneg(double r) { return std::sqrt(r < 0.0 ? 0.0 : r); }

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::ghz_qutrit_isotropic: return "ghz_qutrit_isotropic";
    case Family::ghz_w_qubit_mixture: return "ghz_w_qubit_mixture";
    case Family::ghz_pure: return "ghz_pure";
    case Family::w_pure: return "w_pure";
    case Family::product_pure: return "product_pure";
    case Family::maximally_mixed: return "maximally_mixed";
    case Family::haar_pure: return "haar_pure";
    case Family::random_biseparable: return "random_biseparable";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::ghz_qutrit_isotropic, Family::ghz_w_qubit_mixture, Family::ghz_pure,
                   Family::w_pure, Family::product_pure, Family::maximally_mixed,
                   Family::haar_pure, Family::random_biseparable}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'; expected one of " +
                              family_list());
}

std::string family_list() {
  return "ghz_qutrit_isotropic, ghz_w_qubit_mixture, ghz_pure, w_pure, product_pure, "
         "maximally_mixed, haar_pure, random_biseparable";
}

Vector ghz_vector(Index d) {
  if (d < 1) throw std::invalid_argument("ghz_vector: d must be positive");
  Vector v = Vector::Zero(d * d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) {
    v(i * d * d + i * d + i) = amp;
  }
  return v;
}

Vector w_vector() {
  Vector v = Vector::Zero(8);
  const double amp = 1.0 / std::sqrt(3.0);
  v(1) = amp;  // |001>
  v(2) = amp;  // |010>
  v(4) = amp;  // |100>
  return v;
}

TripartiteState pure_to_state(const PureStateVector& psi) {
  if (psi.amps.size() != psi.dims.total()) {
    throw std::invalid_argument("pure_to_state: amplitude length does not match dims");
  }
  validate_normalized(psi.amps);
  return {psi.dims, psi.amps * psi.amps.adjoint()};
}

TripartiteState maximally_mixed_state(Index d) {
  if (d < 1) throw std::invalid_argument("maximally_mixed_state: d must be positive");
  const Index n = d * d * d;
  return {{d, d, d}, Matrix::Identity(n, n) / static_cast<double>(n)};
}

TripartiteState make_example1(double x) {
  if (!(x >= 0.0 && x <= 1.0 + kParamSlack)) {
    std::ostringstream msg;
    msg << "make_example1: x must lie in [0, 1], got " << x;
    throw std::invalid_argument(msg.str());
  }
  const Vector ghz = ghz_vector(3);
  Matrix mat = ((1.0 - x) / 27.0) * Matrix::Identity(27, 27);
  mat += x * (ghz * ghz.adjoint());
  TripartiteState rho{{3, 3, 3}, std::move(mat)};
  validate_state(rho);
  return rho;
}

TripartiteState make_example2(double x, double y) {
  if (!(x >= 0.0 && y >= 0.0 && x + y <= 1.0 + kParamSlack)) {
    std::ostringstream msg;
    msg << "make_example2: (x, y) must satisfy x, y >= 0 and x + y <= 1, got (" << x << ", " << y
        << ")";
    throw std::invalid_argument(msg.str());
  }
  const Vector ghz = ghz_vector(2);
  const Vector w = w_vector();
  Matrix mat = ((1.0 - x - y) / 8.0) * Matrix::Identity(8, 8);
  mat += x * (ghz * ghz.adjoint());
  mat += y * (w * w.adjoint());
  TripartiteState rho{{2, 2, 2}, std::move(mat)};
  validate_state(rho);
  return rho;
}

double example1_score_closed_form(double x) {
  return (8.0 + 10.0 * x + std::abs(10.0 * x - 1.0)) / 9.0;
}

double example2_bound_closed_form(double x, double y) {
  const double a = x;
  const double b = y;
  const double inner1 = sqrt_nonneg((3.0 - 3.0 * a + b) * (3.0 - 3.0 * a + b) *
                                    (9.0 * a * a + b * b));
  const double inner2 = sqrt_nonneg((1.0 + a - b) * (1.0 + a - b) *
                                    (9.0 * a * a + 32.0 * b * b));
  const double q1 = 9.0 + 153.0 * a * a + 6.0 * b + 17.0 * b * b - 6.0 * a * (3.0 + b);
  const double q2 = 9.0 + 45.0 * a * a - 18.0 * a * (-1.0 + b) - 18.0 * b + 137.0 * b * b;
  const double sum = -40.0
      + 3.0 * sqrt_nonneg((-1.0 - 3.0 * a + b) * (-1.0 - 3.0 * a + b))
      + 6.0 * sqrt_nonneg((-1.0 + a + b) * (-1.0 + a + b))
      + sqrt_nonneg((3.0 - 3.0 * a + 13.0 * b) * (3.0 - 3.0 * a + 13.0 * b))
      + sqrt_nonneg(q1 - 8.0 * inner1)
      + sqrt_nonneg(q1 + 8.0 * inner1)
      + sqrt_nonneg(q2 - 12.0 * inner2)
      + sqrt_nonneg(q2 + 12.0 * inner2);
  return sum / (24.0 * std::sqrt(2.0));
}

PureStateVector haar_random_pure(const TripartiteDims& dims, std::uint64_t seed) {
  if (dims.d1 < 1 || dims.d2 < 1 || dims.d3 < 1) {
    throw std::invalid_argument("haar_random_pure: dims must be positive");
  }
  Rng rng(seed);
  return {dims, haar_random_vector(dims.total(), rng)};
}

Vector haar_random_vector(Index n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("haar_random_vector: length must be positive");
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
  return v / v.norm();
}

Vector biseparable_product_vector(const Vector& head, const Vector& tail,
                                  const TripartiteDims& dims, int head_subsystem) {
  const Index d_head = dims.dim(head_subsystem);
  const Index d_tail = dims.total() / d_head;
  if (head.size() != d_head || tail.size() != d_tail) {
    throw std::invalid_argument("biseparable_product_vector: factor lengths do not match cut");
  }
  Vector permuted(dims.total());
  for (Index i = 0; i < d_head; ++i) {
    for (Index j = 0; j < d_tail; ++j) {
      permuted(i * d_tail + j) = head(i) * tail(j);
    }
  }
  return permute_amps_from_front(permuted, dims, head_subsystem);
}

TripartiteState random_biseparable(Index d, int components, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("random_biseparable: d must be >= 2");
  if (components < 1) throw std::invalid_argument("random_biseparable: components must be >= 1");
  Rng rng(seed);
  const TripartiteDims dims{d, d, d};
  const std::vector<double> weights = rng.dirichlet(components);
  Matrix mat = Matrix::Zero(dims.total(), dims.total());
  for (int c = 0; c < components; ++c) {
    const int cut = 1 + rng.uniform_int(3);
    const Vector head = haar_random_vector(d, rng);
    const Vector tail = haar_random_vector(d * d, rng);
    const Vector v = biseparable_product_vector(head, tail, dims, cut);
    mat += weights[static_cast<size_t>(c)] * (v * v.adjoint());
  }
  TripartiteState rho{dims, std::move(mat)};
  validate_state(rho);
  return rho;
}

TripartiteState make_family(const FamilyParams& params) {
  const auto resolve_d = [&params](Index family_default, Index forced) -> Index {
    if (forced > 0) {
      if (params.d != 0 && params.d != forced) {
        std::ostringstream msg;
        msg << "make_family: family " << family_name(params.family) << " has fixed d = " << forced
            << ", got d = " << params.d;
        throw std::invalid_argument(msg.str());
      }
      return forced;
    }
    return params.d != 0 ? params.d : family_default;
  };
  switch (params.family) {
    case Family::ghz_qutrit_isotropic:
      resolve_d(3, 3);
      return make_example1(params.x);
    case Family::ghz_w_qubit_mixture:
      resolve_d(2, 2);
      return make_example2(params.x, params.y);
    case Family::ghz_pure: {
      const Index d = resolve_d(2, 0);
      return pure_to_state({{d, d, d}, ghz_vector(d)});
    }
    case Family::w_pure:
      resolve_d(2, 2);
      return pure_to_state({{2, 2, 2}, w_vector()});
    case Family::product_pure: {
      const Index d = resolve_d(2, 0);
      Vector v = Vector::Zero(d * d * d);
      v(0) = 1.0;
      return pure_to_state({{d, d, d}, std::move(v)});
    }
    case Family::maximally_mixed:
      return maximally_mixed_state(resolve_d(2, 0));
    case Family::haar_pure: {
      const Index d = resolve_d(2, 0);
      return pure_to_state(haar_random_pure({d, d, d}, params.seed));
    }
    case Family::random_biseparable:
      return random_biseparable(resolve_d(2, 0), 10, params.seed);
  }
  throw std::invalid_argument("make_family: unknown family");
}

}  // namespace gme
