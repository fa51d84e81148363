#include "torusfs/lab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torusfs::lab {

const char* class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::Polynomial:
      return "polynomial";
    case FunctionClass::Smooth:
      return "smooth";
    case FunctionClass::Discontinuous:
      return "discontinuous";
    case FunctionClass::LlogLStress:
      return "llogl_stress";
  }
  return "?";
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

RandomTrigPolynomial::RandomTrigPolynomial(int degree_x, int degree_y, std::uint64_t seed)
    : dx_(degree_x), dy_(degree_y), coeffs_((2 * degree_x + 1) * (2 * degree_y + 1)) {
  SplitMix64 rng(seed);
  auto at = [this](int j, int k) -> cplx& { return coeffs_[(k + dy_) * (2 * dx_ + 1) + (j + dx_)]; };
  for (int k = -dy_; k <= dy_; ++k) {
    for (int j = -dx_; j <= dx_; ++j) {
      // fill one representative of each (j,k), (-j,-k) pair
      if (k < 0 || (k == 0 && j < 0)) continue;
      double re = 2.0 * rng.uniform() - 1.0;
      double im = (j == 0 && k == 0) ? 0.0 : 2.0 * rng.uniform() - 1.0;
      at(j, k) = cplx(re, im) * 0.5;
      at(-j, -k) = std::conj(at(j, k));
    }
  }
  at(0, 0) *= 2.0;
}

cplx RandomTrigPolynomial::coefficient(int j, int k) const {
  if (std::abs(j) > dx_ || std::abs(k) > dy_) return 0.0;
  return coeffs_[(k + dy_) * (2 * dx_ + 1) + (j + dx_)];
}

double RandomTrigPolynomial::operator()(double x, double y) const {
  cplx sum{};
  for (int k = -dy_; k <= dy_; ++k)
    for (int j = -dx_; j <= dx_; ++j) sum += coefficient(j, k) * std::polar(1.0, j * x + k * y);
  return sum.real();
}

namespace {

TestFunction polynomial(std::string id, RandomTrigPolynomial p) {
  const int dx = p.degree_x();
  const int dy = p.degree_y();
  return {std::move(id), [p = std::move(p)](double x, double y) { return cplx(p(x, y)); },
          FunctionClass::Polynomial, dx, dy};
}

TestFunction spike(double cap) {
  std::string id = "spike" + std::to_string(static_cast<int>(cap));
  return {std::move(id),
          [cap](double x, double y) {
            const double r = std::abs(x) + std::abs(y);
            if (r == 0.0) return cplx(cap);
            return cplx(std::min(cap, 1.0 / std::sqrt(r)));
          },
          FunctionClass::LlogLStress};
}

}  // namespace

std::vector<TestFunction> registry(std::uint64_t seed) {
  std::vector<TestFunction> out;
  out.push_back({"zero", [](double, double) { return cplx(0.0); }, FunctionClass::Polynomial, 0, 0});
  out.push_back({"one", [](double, double) { return cplx(1.0); }, FunctionClass::Polynomial, 0, 0});
  out.push_back({"cos_x", [](double x, double) { return cplx(std::cos(x)); }, FunctionClass::Polynomial, 1, 0});
  out.push_back({"cos_x_cos_y", [](double x, double y) { return cplx(std::cos(x) * std::cos(y)); },
                 FunctionClass::Polynomial, 1, 1});
  out.push_back({"cos_x_plus_cos_y", [](double x, double y) { return cplx(std::cos(x) + std::cos(y)); },
                 FunctionClass::Polynomial, 1, 1});
  out.push_back(polynomial("poly4", RandomTrigPolynomial(4, 4, seed)));
  out.push_back({"smooth_step",
                 [](double x, double y) { return cplx(std::tanh(10.0 * std::sin(x)) * std::tanh(10.0 * std::sin(y))); },
                 FunctionClass::Discontinuous});
  out.push_back(spike(10.0));
  out.push_back(spike(100.0));
  for (int r = 0; r < 10; ++r) {
    const int dx = 1 + r % 4;
    const int dy = 1 + (r / 2) % 4;
    out.push_back(polynomial("rpoly" + std::to_string(r), RandomTrigPolynomial(dx, dy, seed + 1000 + r)));
  }
  return out;
}

std::vector<std::string> default_sweep_ids() {
  return {"one", "cos_x", "cos_x_cos_y", "poly4", "smooth_step", "spike10", "spike100"};
}

std::vector<std::string> default_identity_ids() {
  std::vector<std::string> ids;
  for (int r = 0; r < 10; ++r) ids.push_back("rpoly" + std::to_string(r));
  return ids;
}

std::vector<TestFunction> select(const std::vector<std::string>& ids, std::uint64_t seed) {
  const std::vector<TestFunction> all = registry(seed);
  std::vector<TestFunction> out;
  for (const std::string& id : ids) {
    auto it = std::find_if(all.begin(), all.end(), [&](const TestFunction& f) { return f.id == id; });
    if (it == all.end()) throw std::invalid_argument("unknown test function '" + id + "'");
    out.push_back(*it);
  }
  return out;
}

}  // namespace torusfs::lab
