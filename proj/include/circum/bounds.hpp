#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "circum/graph.hpp"

namespace circum {

inline constexpr double kR = 0.8;
inline constexpr double kTolerance = 1e-9;

struct BoundConstants {
  double r;
  double c;      // 1 / (8^r - 6^r)
  double d;      // c^(1/(1-r))
  double alpha;  // d / (1 - d)
  double beta;   // (1 + 1/10.174)^r
};

const BoundConstants& constants();

enum class BoundKind { Adjacent, Nonadjacent };

const char* to_string(BoundKind k);
double bound(BoundKind kind, Weight total);
bool meets(Weight achieved, double required);

enum class Lemma4Part { I = 1, II, III, IV, V, VI };
enum class Lemma4Outcome { Holds, Fails, HypothesisFailed };

const char* to_string(Lemma4Part p);
int arity(Lemma4Part p);
// Parameter order: (i) x,y,z  (ii) x,y  (iii) x,y  (iv) t,w,x,y,z
// (v) w,x,y,z  (vi) x,y,z.
bool lemma4_hypothesis(Lemma4Part p, std::span<const double> v);
// Left side minus right side of the conclusion.
double lemma4_margin(Lemma4Part p, std::span<const double> v);
Lemma4Outcome check_lemma4(Lemma4Part p, std::span<const double> v);

struct NamedConstant {
  std::string name;
  std::string expression;
  double value;
  double printed;  // value as printed in the source text, 0 when none
};

std::vector<NamedConstant> proof_constants_report();

// Place value of the last printed digit, e.g. 0.0018 -> 0.0001.
double last_digit_unit(double printed);
// Within 1% of the printed value, or within one unit of its last digit
// (printed values are often truncated).
bool matches_printed(double value, double printed);

struct RootResult {
  double root;
  double residual;
  int iterations;
};

// Root of 8.956^r + 1.036^r - 10.992^r on [0.8, 0.9].
RootResult optimal_exponent(double tol);

struct GridSummary {
  Lemma4Part part;
  std::int64_t checked = 0;   // hypothesis held
  std::int64_t vacuous = 0;   // hypothesis failed
  std::int64_t failures = 0;
  bool exhaustive = true;
};

// Integer grid [0, max]^arity; parts with arity above 3 are sampled.
GridSummary grid_check(Lemma4Part p, int max, std::int64_t samples, std::uint64_t seed);

}  // namespace circum
