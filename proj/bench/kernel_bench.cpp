// Times the OpenMP kernels against their serial reference implementations
// and verifies that both produce identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hmat/serial_reference.hpp"

using namespace hmat;

namespace {

std::mt19937_64 rng(1234567);

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

struct Row {
  const char* name;
  double serial_ms;
  double parallel_ms;
  bool match;
};

void print_row(const Row& row) {
  std::printf("%-28s %12.1f %12.1f %10.2fx %8s\n", row.name, row.serial_ms,
              row.parallel_ms, row.serial_ms / row.parallel_ms,
              row.match ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  const int rank_n = quick ? 14 : 18;
  const int rank_generators = quick ? 200 : 1500;
  const int ext_n = quick ? 12 : 18;
  const int quad_h = quick ? 40 : 170;
  const int sub_n = quick ? 6 : 7;

  std::printf("%-28s %12s %12s %11s %8s\n", "kernel", "serial ms", "parallel ms",
              "speedup", "result");

  // Shared input: a constructible family built from random chains.
  GroundSet rank_ground(rank_n);
  std::set<subset_t> members{0};
  for (int i = 0; i < rank_generators; ++i) {
    subset_t s = static_cast<subset_t>(rng() % rank_ground.subset_count());
    while (s != 0) {
      members.insert(s);
      s ^= element_bit(std::countr_zero(s));
    }
  }
  SetFamily family(rank_ground, {members.begin(), members.end()});

  {
    double t0 = now_ms();
    RankTable slow = serial::rank_from_family(family);
    double t1 = now_ms();
    RankTable fast = rank_from_family(family);
    double t2 = now_ms();
    print_row({"rank_from_family", t1 - t0, t2 - t1, slow == fast});
  }

  {
    // The cardinality table satisfies the extension property everywhere, so
    // both sides scan the full (X, H) space.
    GroundSet ground(ext_n);
    std::vector<std::int32_t> cardinality(ground.subset_count());
    for (std::size_t s = 0; s < cardinality.size(); ++s)
      cardinality[s] = set_size(static_cast<subset_t>(s));
    RankTable rho(ground, cardinality);
    std::vector<subset_t> hs{0, ground.full()};
    for (int i = 0; i < 14; ++i)
      hs.push_back(static_cast<subset_t>(rng() % ground.subset_count()));
    HSpec h{SetFamily(ground, hs)};

    double t0 = now_ms();
    auto slow = serial::satisfies_extension_property(rho, h);
    double t1 = now_ms();
    auto fast = satisfies_extension_property(rho, h);
    double t2 = now_ms();
    print_row({"extension_property", t1 - t0, t2 - t1,
               slow.ok == fast.ok && slow.set == fast.set && slow.h == fast.h});
  }

  {
    // Cardinality again: no violating quadruple exists, full |H|^4 sweep.
    GroundSet ground(10);
    std::vector<std::int32_t> values(ground.subset_count());
    for (std::size_t s = 0; s < values.size(); ++s)
      values[s] = set_size(static_cast<subset_t>(s));
    RankTable rho(ground, values);
    std::vector<subset_t> hs{0, ground.full()};
    for (int i = 0; i < quad_h; ++i)
      hs.push_back(static_cast<subset_t>(rng() % ground.subset_count()));
    HSpec h{SetFamily(ground, hs)};

    double t0 = now_ms();
    auto slow = serial::rank_quadruple_submodularity(rho, h);
    double t1 = now_ms();
    auto fast = rank_quadruple_submodularity(rho, h);
    double t2 = now_ms();
    print_row({"quadruple_submodularity", t1 - t0, t2 - t1,
               slow.ok == fast.ok && slow.h1 == fast.h1 && slow.h2 == fast.h2 &&
                   slow.g1 == fast.g1 && slow.g2 == fast.g2});
  }

  {
    GroundSet ground(sub_n);
    std::vector<subset_t> all;
    for (std::size_t s = 0; s < ground.subset_count(); ++s)
      all.push_back(static_cast<subset_t>(s));
    LatticeFamily domain{SetFamily(ground, all)};
    std::vector<Rational> values;
    for (std::size_t s = 0; s < ground.subset_count(); ++s)
      values.emplace_back(static_cast<long long>(rng() % 17) - 4,
                          static_cast<long long>(1 + rng() % 4));
    ValuedSetFunction f(domain, std::move(values));
    std::vector<subset_t> hs{0, ground.full()};
    for (int i = 0; i < 12; ++i)
      hs.push_back(static_cast<subset_t>(rng() % ground.subset_count()));
    HSpec h{SetFamily(ground, hs)};

    double t0 = now_ms();
    auto slow = serial::is_h_submodular(f, h);
    double t1 = now_ms();
    auto fast = is_h_submodular(f, h);
    double t2 = now_ms();
    print_row({"h_submodular", t1 - t0, t2 - t1,
               slow.ok == fast.ok && slow.x == fast.x && slow.y == fast.y &&
                   slow.h1 == fast.h1 && slow.h2 == fast.h2 &&
                   slow.violation == fast.violation});
  }

  {
    double t0 = now_ms();
    SetFamily slow = serial::downward_closure(family);
    double t1 = now_ms();
    SetFamily fast = downward_closure(family);
    double t2 = now_ms();
    print_row({"downward_closure", t1 - t0, t2 - t1, slow == fast});
  }

  return 0;
}
