// Samples figure shapes and piece weights and prints the first parameter set
// under which each candidate wins at the top level.
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "circum/figures.hpp"
#include "circum/long_cycle.hpp"

using namespace circum;

namespace {

std::string root_winner(const TraceNode& n) {
  for (const TraceEvent& ev : n.events)
    if (ev.kind == "candidate" && ev.winner) return ev.label;
  return {};
}

template <class A>
std::string list(const A& a) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? ", " : "") << a[i];
  os << "}";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figure weight search"};
  int shapes = 40, samples = 400, exhaustive = 0;
  std::uint64_t seed = 1;
  app.add_option("--shapes", shapes);
  app.add_option("--samples", samples);
  app.add_option("--seed", seed);
  app.add_option("--exhaustive", exhaustive, "try every weight in 0..K instead of sampling");
  std::string branch;
  int order = 10;
  app.add_option("--branch", branch, "search random graphs landing on this decomposition label");
  app.add_option("--n", order, "smallest order for --branch");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  const Weight levels[] = {0, 0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  const int odd[] = {1, 1, 1, 3, 5, 7};
  std::set<std::string> seen;
  LongCycleOptions opt;
  opt.verify_claims = false;
  for (int s = 0; s < shapes; ++s) {
    Instance in;
    std::ostringstream head;
    try {
      if (!branch.empty()) {
        const int n = order + 2 * (s % 3);
        const std::uint64_t gseed = 1 + rng() % 500;
        in = branch_instance(branch, n, gseed);
        head << "branch " << branch << " n=" << n << " seed=" << gseed;
      } else {
        const int fig = s % 3;
        std::array<int, 5> orders{};
        for (int& o : orders) o = odd[rng() % 6];
        const int z_order = 2 * static_cast<int>(rng() % 3);
        const std::uint64_t gseed = 1 + rng() % 50;
        if (fig == 0) {
          in = fig2_instance({{}, orders, z_order, 0, gseed});
        } else {
          Fig3Exit ex = fig == 1 ? Fig3Exit::None : Fig3Exit::SharedX1X3;
          in = fig3_instance({{}, orders, z_order, 0, ex, gseed});
        }
        head << (fig == 0 ? "fig2" : fig == 1 ? "fig3" : "fig3.shared") << " orders=" << list(orders)
             << " z_order=" << z_order << " seed=" << gseed;
      }
    } catch (const Error& err) {
      continue;
    }
    const std::size_t slots = in.slots.size();
    const int base = exhaustive + 1;
    long runs = samples;
    if (exhaustive > 0) {
      runs = 1;
      for (std::size_t i = 0; i < slots + (in.outside.empty() ? 0 : 1); ++i) runs *= base;
    }
    for (long k = 0; k < runs; ++k) {
      std::vector<Weight> x(slots);
      Weight z = 0;
      if (exhaustive > 0) {
        long code = k;
        for (Weight& v : x) {
          v = code % base;
          code /= base;
        }
        z = code;
      } else {
        for (Weight& v : x) v = levels[rng() % 12];
        z = in.outside.empty() ? 0 : levels[rng() % 12];
      }
      assign_weights(in, x, z);
      CycleResult r = long_cycle(in.graph, in.weights, in.e, in.f, opt);
      std::string key = head.str().substr(0, head.str().find(' ')) + ":" + root_winner(r.trace);
      if (seen.insert(key).second)
        std::cout << key << "  " << head.str() << " x=" << list(x) << " z=" << z << std::endl;
      for (const auto& [name, count] : r.stats.histogram)
        if ((name.rfind("win.", 0) == 0 || name == "L6.case1.vhs") && seen.insert(name).second)
          std::cout << "  nested " << name << "  " << head.str() << " x=" << list(x) << " z=" << z << std::endl;
    }
  }
}
