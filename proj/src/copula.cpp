#include "qdc/copula.hpp"

#include <cmath>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr double kFdStep = 1e-6;
constexpr double kVolumeTol = 1e-12;

Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

}  // namespace

Copula::Copula(Parts parts) : parts_(std::move(parts)) {
  if (!parts_.cdf) throw DomainError("Copula: cdf is required");
}

double Copula::cdf(double u, double v) const {
  return parts_.cdf(clamp01(u), clamp01(v));
}

double Copula::cond_2given1(double v, double u, Side side) const {
  v = clamp01(v);
  u = clamp01(u);
  if (parts_.cond_2given1) return clamp01(parts_.cond_2given1(v, u, side));
  if (u <= 0.0 || u >= 1.0) {
    throw DegenerateBoundaryError(
        "cond_2given1: finite-difference fallback undefined at u in {0,1}");
  }
  if (side == Side::right) {
    const double h = std::min(kFdStep, 1.0 - u);
    return clamp01((cdf(u + h, v) - cdf(u, v)) / h);
  }
  const double h = std::min(kFdStep, u);
  return clamp01((cdf(u, v) - cdf(u - h, v)) / h);
}

double Copula::cond_1given2(double u, double v, Side side) const {
  u = clamp01(u);
  v = clamp01(v);
  if (parts_.cond_1given2) return clamp01(parts_.cond_1given2(u, v, side));
  if (v <= 0.0 || v >= 1.0) {
    throw DegenerateBoundaryError(
        "cond_1given2: finite-difference fallback undefined at v in {0,1}");
  }
  if (side == Side::right) {
    const double h = std::min(kFdStep, 1.0 - v);
    return clamp01((cdf(u, v + h) - cdf(u, v)) / h);
  }
  const double h = std::min(kFdStep, v);
  return clamp01((cdf(u, v) - cdf(u, v - h)) / h);
}

std::pair<double, double> Copula::sample(Rng& rng) const {
  if (!parts_.sampler) throw SamplerUnavailableError("Copula: no dedicated sampler");
  return parts_.sampler(rng);
}

std::optional<double> Copula::closed_form_qdc(double p, double q, Direction dir) const {
  if (!parts_.closed_form_qdc) return std::nullopt;
  return parts_.closed_form_qdc(p, q, dir);
}

Copula Copula::with_closed_form(ClosedFormFn fn) const {
  Parts p = parts_;
  p.closed_form_qdc = std::move(fn);
  return Copula(std::move(p));
}

Copula Copula::with_sampler(SamplerFn fn) const {
  Parts p = parts_;
  p.sampler = std::move(fn);
  return Copula(std::move(p));
}

Copula Copula::with_label(std::string label) const {
  Parts p = parts_;
  p.label = std::move(label);
  return Copula(std::move(p));
}

double c_volume_raw(const Copula& c, double u1, double u2, double v1, double v2) {
  return c.cdf(u2, v2) - c.cdf(u2, v1) - c.cdf(u1, v2) + c.cdf(u1, v1);
}

double c_volume(const Copula& c, const Rectangle& r) {
  const double v = c_volume_raw(c, r.u1.value(), r.u2.value(), r.v1.value(), r.v2.value());
  if (v < -kVolumeTol) {
    throw NegativeVolumeError("c_volume: four-corner sum " + std::to_string(v) +
                              " below -1e-12 (copula not 2-increasing)");
  }
  return v < 0.0 ? 0.0 : v;
}

Copula survival(const Copula& c) {
  Copula::Parts p;
  p.cdf = [c](double u, double v) {
    return u + v - 1.0 + c.cdf(1.0 - u, 1.0 - v);
  };
  if (c.has_cond_2given1()) {
    p.cond_2given1 = [c](double v, double u, Side side) {
      return 1.0 - c.cond_2given1(1.0 - v, 1.0 - u, flip(side));
    };
  }
  if (c.has_cond_1given2()) {
    p.cond_1given2 = [c](double u, double v, Side side) {
      return 1.0 - c.cond_1given2(1.0 - u, 1.0 - v, flip(side));
    };
  }
  if (c.has_sampler()) {
    p.sampler = [c](Rng& rng) {
      auto [a, b] = c.sample(rng);
      return std::make_pair(1.0 - a, 1.0 - b);
    };
  }
  if (c.has_closed_form()) {
    p.closed_form_qdc = [c](double pp, double qq, Direction dir) {
      return c.closed_form_qdc(1.0 - pp, 1.0 - qq, dir);
    };
  }
  p.label = "survival(" + c.label() + ")";
  return Copula(std::move(p));
}

Copula reflect_v(const Copula& c) {
  Copula::Parts p;
  p.cdf = [c](double u, double v) { return u - c.cdf(u, 1.0 - v); };
  if (c.has_cond_2given1()) {
    p.cond_2given1 = [c](double v, double u, Side side) {
      return 1.0 - c.cond_2given1(1.0 - v, u, side);
    };
  }
  if (c.has_cond_1given2()) {
    p.cond_1given2 = [c](double u, double v, Side side) {
      return c.cond_1given2(u, 1.0 - v, flip(side));
    };
  }
  if (c.has_sampler()) {
    p.sampler = [c](Rng& rng) {
      auto [a, b] = c.sample(rng);
      return std::make_pair(a, 1.0 - b);
    };
  }
  if (c.has_closed_form()) {
    p.closed_form_qdc = [c](double pp, double qq, Direction dir) {
      return c.closed_form_qdc(pp, 1.0 - qq, dir);
    };
  }
  p.label = "reflect_v(" + c.label() + ")";
  return Copula(std::move(p));
}

Copula reflect_u(const Copula& c) {
  Copula::Parts p;
  p.cdf = [c](double u, double v) { return v - c.cdf(1.0 - u, v); };
  if (c.has_cond_2given1()) {
    p.cond_2given1 = [c](double v, double u, Side side) {
      return c.cond_2given1(v, 1.0 - u, flip(side));
    };
  }
  if (c.has_cond_1given2()) {
    p.cond_1given2 = [c](double u, double v, Side side) {
      return 1.0 - c.cond_1given2(1.0 - u, v, side);
    };
  }
  if (c.has_sampler()) {
    p.sampler = [c](Rng& rng) {
      auto [a, b] = c.sample(rng);
      return std::make_pair(1.0 - a, b);
    };
  }
  if (c.has_closed_form()) {
    p.closed_form_qdc = [c](double pp, double qq, Direction dir) {
      return c.closed_form_qdc(1.0 - pp, qq, dir);
    };
  }
  p.label = "reflect_u(" + c.label() + ")";
  return Copula(std::move(p));
}

Copula convex_mix(const Copula& c1, const Copula& c2, UnitValue omega) {
  const double w = omega.value();
  Copula::Parts p;
  p.cdf = [c1, c2, w](double u, double v) {
    return w * c1.cdf(u, v) + (1.0 - w) * c2.cdf(u, v);
  };
  if (c1.has_cond_2given1() && c2.has_cond_2given1()) {
    p.cond_2given1 = [c1, c2, w](double v, double u, Side side) {
      return w * c1.cond_2given1(v, u, side) + (1.0 - w) * c2.cond_2given1(v, u, side);
    };
  }
  if (c1.has_cond_1given2() && c2.has_cond_1given2()) {
    p.cond_1given2 = [c1, c2, w](double u, double v, Side side) {
      return w * c1.cond_1given2(u, v, side) + (1.0 - w) * c2.cond_1given2(u, v, side);
    };
  }
  if (c1.has_sampler() && c2.has_sampler()) {
    p.sampler = [c1, c2, w](Rng& rng) {
      return rng.uniform() < w ? c1.sample(rng) : c2.sample(rng);
    };
  }
  if (c1.has_closed_form() && c2.has_closed_form()) {
    p.closed_form_qdc = [c1, c2, w](double pp, double qq,
                                    Direction dir) -> std::optional<double> {
      auto a = c1.closed_form_qdc(pp, qq, dir);
      auto b = c2.closed_form_qdc(pp, qq, dir);
      if (!a || !b) return std::nullopt;
      return w * *a + (1.0 - w) * *b;
    };
  }
  p.label = "mix(omega=" + std::to_string(w) + ", " + c1.label() + ", " + c2.label() + ")";
  return Copula(std::move(p));
}

}  // namespace qdc
