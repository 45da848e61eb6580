#include "seqcpd/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "seqcpd/rng.hpp"

namespace seqcpd {

namespace {

constexpr std::size_t kAr1BurnIn = 100;
constexpr std::size_t kGarchBurnIn = 500;

// sequential draw stream over the counter-based generator
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}
  double uniform() { return counter_uniform(seed_, stream_, pos_++); }
  double normal() { return normal_quantile(uniform()); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t pos_ = 0;
};

// Marsaglia-Tsang; shape < 1 boosted through Gamma(shape+1) U^{1/shape}
double gamma_draw(Stream& rng, double shape, double rate) {
  if (shape < 1.0) {
    const double u = rng.uniform();
    return gamma_draw(rng, shape + 1.0, rate) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    const double z = rng.normal();
    const double v = 1.0 + c * z;
    if (v <= 0.0) continue;
    const double v3 = v * v * v;
    const double u = rng.uniform();
    if (std::log(u) < 0.5 * z * z + d - d * v3 + d * std::log(v3))
      return d * v3 / rate;
  }
}

void check_model(const ModelSpec& model) {
  if (const auto* ar = std::get_if<Ar1>(&model)) {
    if (std::fabs(ar->beta) >= 1.0)
      throw std::invalid_argument("AR(1) requires |beta| < 1");
  } else if (const auto* g = std::get_if<Garch11>(&model)) {
    if (g->omega <= 0.0 || g->alpha < 0.0 || g->beta < 0.0)
      throw std::invalid_argument("invalid GARCH(1,1) parameters");
    if (g->alpha + g->beta >= 1.0)
      std::fprintf(stderr, "seqcpd: warning: GARCH(1,1) with alpha + beta >= 1 "
                           "is not covariance stationary\n");
  } else if (const auto* c = std::get_if<NormalCopula>(&model)) {
    if (std::fabs(c->tau) >= 1.0)
      throw std::invalid_argument("normal copula requires |tau| < 1");
    if (c->dim < 2) throw std::invalid_argument("normal copula requires d >= 2");
    const double rho = std::sin(std::numbers::pi * c->tau / 2.0);
    if (rho <= -1.0 / static_cast<double>(c->dim - 1))
      throw std::invalid_argument("equicorrelation matrix not positive definite");
  } else if (const auto* gm = std::get_if<IidGamma>(&model)) {
    if (gm->shape <= 0.0 || gm->rate <= 0.0)
      throw std::invalid_argument("gamma parameters must be positive");
  } else if (const auto* nm = std::get_if<IidNormal>(&model)) {
    if (nm->var <= 0.0) throw std::invalid_argument("variance must be positive");
  }
}

// appends `count` rows of the model to `out`
void emit(const ModelSpec& model, std::size_t count, Stream& rng,
          ObservationMatrix& out) {
  if (const auto* u = std::get_if<IidUniform>(&model)) {
    std::vector<double> row(u->dim);
    for (std::size_t i = 0; i < count; ++i) {
      for (auto& v : row) v = rng.uniform();
      out.append_row(row);
    }
  } else if (const auto* nm = std::get_if<IidNormal>(&model)) {
    const double sd = std::sqrt(nm->var);
    std::vector<double> row(nm->dim);
    for (std::size_t i = 0; i < count; ++i) {
      for (auto& v : row) v = nm->mean + sd * rng.normal();
      out.append_row(row);
    }
  } else if (const auto* gm = std::get_if<IidGamma>(&model)) {
    for (std::size_t i = 0; i < count; ++i) {
      const double v = gamma_draw(rng, gm->shape, gm->rate);
      out.append_row(std::span<const double>(&v, 1));
    }
  } else if (const auto* ar = std::get_if<Ar1>(&model)) {
    double x = 0.0;
    for (std::size_t i = 0; i < kAr1BurnIn; ++i) x = ar->beta * x + rng.normal();
    for (std::size_t i = 0; i < count; ++i) {
      x = ar->beta * x + rng.normal();
      out.append_row(std::span<const double>(&x, 1));
    }
  } else if (const auto* g = std::get_if<Garch11>(&model)) {
    const double denom = 1.0 - g->alpha - g->beta;
    double sigma2 = denom > 0.0 ? g->omega / denom : g->omega;
    double x = std::sqrt(sigma2) * rng.normal();
    for (std::size_t i = 0; i < kGarchBurnIn; ++i) {
      sigma2 = g->omega + g->alpha * x * x + g->beta * sigma2;
      x = std::sqrt(sigma2) * rng.normal();
    }
    for (std::size_t i = 0; i < count; ++i) {
      sigma2 = g->omega + g->alpha * x * x + g->beta * sigma2;
      x = std::sqrt(sigma2) * rng.normal();
      out.append_row(std::span<const double>(&x, 1));
    }
  } else if (const auto* c = std::get_if<NormalCopula>(&model)) {
    const std::size_t d = c->dim;
    const double rho = std::sin(std::numbers::pi * c->tau / 2.0);
    // Cholesky factor of the equicorrelation matrix
    std::vector<double> chol(d * d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        double sum = i == j ? 1.0 : rho;
        for (std::size_t t = 0; t < j; ++t) sum -= chol[i * d + t] * chol[j * d + t];
        chol[i * d + j] = i == j ? std::sqrt(sum) : sum / chol[j * d + j];
      }
    }
    std::vector<double> z(d), row(d);
    for (std::size_t i = 0; i < count; ++i) {
      for (auto& v : z) v = rng.normal();
      for (std::size_t r = 0; r < d; ++r) {
        double acc = 0.0;
        for (std::size_t t = 0; t <= r; ++t) acc += chol[r * d + t] * z[t];
        row[r] = normal_cdf(acc);
      }
      out.append_row(row);
    }
  } else {
    throw std::logic_error("unknown model");
  }
}

}  // namespace

std::size_t model_dim(const ModelSpec& model) {
  if (const auto* u = std::get_if<IidUniform>(&model)) return u->dim;
  if (const auto* nm = std::get_if<IidNormal>(&model)) return nm->dim;
  if (const auto* c = std::get_if<NormalCopula>(&model)) return c->dim;
  return 1;
}

void Scenario::validate() const {
  if (n <= m || m < 1) throw std::invalid_argument("need n > m >= 1");
  check_model(null_model);
  if (change) {
    if (!(change->at > m && change->at < n))
      throw std::invalid_argument("change point must satisfy m < k* < n");
    check_model(change->post_model);
    if (model_dim(change->post_model) != model_dim(null_model))
      throw std::invalid_argument("pre and post models must share dimension");
  }
}

ObservationMatrix generate(const Scenario& scn, std::uint64_t seed) {
  scn.validate();
  ObservationMatrix out(0, 0);
  Stream pre(seed, 0);
  if (!scn.change) {
    emit(scn.null_model, scn.n, pre, out);
    return out;
  }
  emit(scn.null_model, scn.change->at, pre, out);
  Stream post(seed, 1);
  emit(scn.change->post_model, scn.n - scn.change->at, post, out);
  return out;
}

}  // namespace seqcpd
