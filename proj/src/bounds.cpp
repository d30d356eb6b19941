#include "circum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace circum {

namespace {

double pw(double x) { return std::pow(x, kR); }

BoundConstants make_constants() {
  BoundConstants k{};
  k.r = kR;
  k.c = 1.0 / (pw(8) - pw(6));
  k.d = std::pow(k.c, 1.0 / (1.0 - kR));
  k.alpha = k.d / (1.0 - k.d);
  k.beta = pw(1.0 + 1.0 / 10.174);
  return k;
}

}  // namespace

const BoundConstants& constants() {
  static const BoundConstants k = make_constants();
  return k;
}

const char* to_string(BoundKind k) { return k == BoundKind::Adjacent ? "adjacent" : "nonadjacent"; }

double bound(BoundKind kind, Weight total) {
  double b = pw(static_cast<double>(total));
  return kind == BoundKind::Adjacent ? b : constants().c * b;
}

bool meets(Weight achieved, double required) {
  return static_cast<double>(achieved) + kTolerance >= required;
}

const char* to_string(Lemma4Part p) {
  switch (p) {
    case Lemma4Part::I: return "i";
    case Lemma4Part::II: return "ii";
    case Lemma4Part::III: return "iii";
    case Lemma4Part::IV: return "iv";
    case Lemma4Part::V: return "v";
    case Lemma4Part::VI: return "vi";
  }
  return "?";
}

int arity(Lemma4Part p) {
  switch (p) {
    case Lemma4Part::I: return 3;
    case Lemma4Part::II: return 2;
    case Lemma4Part::III: return 2;
    case Lemma4Part::IV: return 5;
    case Lemma4Part::V: return 4;
    case Lemma4Part::VI: return 3;
  }
  return 0;
}

bool lemma4_hypothesis(Lemma4Part p, std::span<const double> v) {
  if (static_cast<int>(v.size()) != arity(p)) throw Error(ErrorCode::InvalidGraph, "wrong lemma 4 arity");
  for (double a : v)
    if (a < 0) return false;
  switch (p) {
    case Lemma4Part::I: return v[0] >= 8.956 * v[2] && v[1] >= 1.036 * v[2];
    case Lemma4Part::II: return v[0] <= 10.174 * v[1];
    case Lemma4Part::III: return 0.5 * v[1] <= v[0] && v[0] <= 8.884 * v[1];
    case Lemma4Part::IV: {
      double t = v[0], w = v[1], x = v[2], y = v[3], z = v[4];
      return z < 1.98 * (t + w + x + y) && t > 0 &&
             t <= 2.072 * std::min({w / 1.036, x, y, z / 5.884});
    }
    case Lemma4Part::V: return v[0] <= std::min({v[1], v[2], v[3]});
    case Lemma4Part::VI: return v[0] >= 6 * v[2] && v[1] >= v[2];
  }
  return false;
}

double lemma4_margin(Lemma4Part p, std::span<const double> v) {
  if (static_cast<int>(v.size()) != arity(p)) throw Error(ErrorCode::InvalidGraph, "wrong lemma 4 arity");
  const double c = constants().c;
  switch (p) {
    case Lemma4Part::I: return pw(v[0]) + pw(v[1]) - pw(v[0] + v[1] + v[2]);
    case Lemma4Part::II: return c * pw(v[0]) + pw(v[1]) - pw(v[0] + v[1]);
    case Lemma4Part::III: return pw(v[0]) + pw(v[1]) - constants().beta * pw(v[0] + v[1]);
    case Lemma4Part::IV:
      return pw(v[1]) + pw(v[2]) + pw(v[3]) + c * pw(v[4]) - pw(v[0] + v[1] + v[2] + v[3] + v[4]);
    case Lemma4Part::V: return c * pw(v[1]) + pw(v[2]) + pw(v[3]) - c * pw(v[0] + v[1] + v[2] + v[3]);
    case Lemma4Part::VI: return c * pw(v[0]) + pw(v[1]) - c * pw(v[0] + v[1] + v[2]);
  }
  return 0;
}

Lemma4Outcome check_lemma4(Lemma4Part p, std::span<const double> v) {
  if (!lemma4_hypothesis(p, v)) return Lemma4Outcome::HypothesisFailed;
  return lemma4_margin(p, v) >= -1e-12 ? Lemma4Outcome::Holds : Lemma4Outcome::Fails;
}

double last_digit_unit(double printed) {
  double unit = 1;
  while (unit > 1e-15) {
    const double scaled = printed / unit;
    if (std::abs(scaled - std::round(scaled)) <= 1e-9 * std::max(1.0, std::abs(scaled))) return unit;
    unit /= 10;
  }
  return unit;
}

bool matches_printed(double value, double printed) {
  const double diff = std::abs(value - printed);
  return diff <= 0.01 * std::abs(printed) || diff < last_digit_unit(printed);
}

std::vector<NamedConstant> proof_constants_report() {
  const BoundConstants& k = constants();
  const double c = k.c;
  std::vector<NamedConstant> out = {
      {"c", "1/(8^r - 6^r)", c, 0.922},
      {"alpha", "d/(1 - d), d = c^(1/(1-r))", k.alpha, 1.983},
      {"d", "c^(1/(1-r))", k.d, 0},
      {"beta", "(1 + 1/10.174)^r", k.beta, 0},
      {"beta_root", "beta^(1/(1-r))", std::pow(k.beta, 1.0 / (1.0 - kR)), 1.455},
      {"lemma4_i", "8.956^r + 1.036^r - 10.992^r", pw(8.956) + pw(1.036) - pw(10.992), 2.918e-5},
      {"lemma4_ii", "10.174^r c + 1 - 11.174^r", pw(10.174) * c + 1 - pw(11.174), 0},
      {"lemma4_iii", "8.884^r + 1 - 9.884^r beta", pw(8.884) + 1 - pw(9.884) * k.beta, 0.0018},
      {"lemma4_iv", "1.036^r + 2 + 5.884^r c - 10.992^r", pw(1.036) + 2 + pw(5.884) * c - pw(10.992), 0.0275},
      {"lemma4_v", "c + 2 - 4^r c", c + 2 - pw(4) * c, 0.128},
      {"lemma4_vi", "6^r c + 1 - 8^r c", pw(6) * c + 1 - pw(8) * c, 0},
      {"lemma6_case1_f1", "9.92^r + 1 - 11.92^r", pw(9.92) + 1 - pw(11.92), 0.00775},
      {"lemma6_case1_x2", "2^r + 6^r - 9^r", pw(2) + pw(6) - pw(9), 0.134},
      {"lemma6_case1_x4a", "7^r + 2^r - 10^r", pw(7) + pw(2) - pw(10), 0.175},
      {"lemma6_case1_x4b", "3^r + 6^r - 10.5^r", pw(3) + pw(6) - pw(10.5), 0.04},
      {"lemma6_case1_x5", "13.76^r + 1 - 15.76^r", pw(13.76) + 1 - pw(15.76), 0.066},
      {"claim8_f1", "2 + 2^r - 5^r", 2 + pw(2) - pw(5), 0.117},
      {"claim8_f4", "4 - 5^r", 4 - pw(5), 0.376},
      {"case2_f2", "3^r c + 2^r + 1 - 8^r c", pw(3) * c + pw(2) + 1 - pw(8) * c, 0.096},
      {"case2_threshold", "(2c)^(1/(1-r))", std::pow(2 * c, 1.0 / (1.0 - kR)), 21.275},
      {"case3_f1", "c 2^r + 1 + 0.5^r - c 4.5^r", c * pw(2) + 1 + pw(0.5) - c * pw(4.5), 0.109},
  };
  return out;
}

RootResult optimal_exponent(double tol) {
  auto f = [](double r) {
    return std::pow(8.956, r) + std::pow(1.036, r) - std::pow(10.992, r);
  };
  double lo = 0.8, hi = 0.9;
  if (!(f(lo) > 0 && f(hi) < 0)) throw Error(ErrorCode::InternalError, "exponent bracket invalid");
  RootResult res{lo, f(lo), 0};
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    res = {mid, fm, it + 1};
    if (std::abs(fm) < tol || hi - lo < 1e-16) break;
    if (fm > 0) lo = mid; else hi = mid;
  }
  return res;
}

GridSummary grid_check(Lemma4Part p, int max, std::int64_t samples, std::uint64_t seed) {
  GridSummary s;
  s.part = p;
  const int k = arity(p);
  std::vector<double> v(k);
  auto visit = [&] {
    switch (check_lemma4(p, v)) {
      case Lemma4Outcome::Holds: ++s.checked; break;
      case Lemma4Outcome::Fails: ++s.checked; ++s.failures; break;
      case Lemma4Outcome::HypothesisFailed: ++s.vacuous; break;
    }
  };
  if (k <= 3) {
    std::vector<int> idx(k, 0);
    while (true) {
      for (int i = 0; i < k; ++i) v[i] = idx[i];
      visit();
      int i = 0;
      while (i < k && ++idx[i] > max) idx[i++] = 0;
      if (i == k) break;
    }
    return s;
  }
  s.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(0, max);
  for (std::int64_t n = 0; n < samples; ++n) {
    for (int i = 0; i < k; ++i) v[i] = dist(rng);
    visit();
  }
  return s;
}

}  // namespace circum
