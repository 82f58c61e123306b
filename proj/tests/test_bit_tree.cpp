#include <doctest.h>

#include <random>
#include <set>

#include "zred/bit_tree.hpp"

using zred::HierarchicalBitset;
using zred::Index;
using zred::kNoIndex;

TEST_CASE("empty bitset") {
  HierarchicalBitset b(100);
  CHECK(b.none());
  CHECK(b.max() == kNoIndex);
  std::vector<Index> out;
  b.drain_sorted(out);
  CHECK(out.empty());
}

TEST_CASE("toggle, max and drain across word boundaries") {
  HierarchicalBitset b(5000);
  for (Index i : {0u, 63u, 64u, 4095u, 4096u, 4999u}) CHECK(b.toggle(i));
  CHECK(b.count() == 6);
  CHECK(b.max() == 4999);
  CHECK_FALSE(b.toggle(4999));
  CHECK(b.max() == 4096);
  b.reset(4096);
  b.reset(4096);
  CHECK(b.max() == 4095);
  b.set(63);
  CHECK(b.count() == 4);

  std::vector<Index> out{42};
  b.drain_sorted(out);
  CHECK(out == std::vector<Index>{42, 0, 63, 64, 4095});
  CHECK(b.none());
  CHECK(b.max() == kNoIndex);
}

TEST_CASE("matches std::set under random toggles") {
  std::mt19937_64 rng(17);
  for (std::size_t n : {1u, 64u, 65u, 4097u, 300000u}) {
    HierarchicalBitset b(n);
    std::set<Index> ref;
    for (int step = 0; step < 3000; ++step) {
      const auto i = static_cast<Index>(rng() % n);
      if (ref.erase(i) == 0) ref.insert(i);
      b.toggle(i);
      REQUIRE(b.count() == ref.size());
      REQUIRE(b.max() == (ref.empty() ? kNoIndex : *ref.rbegin()));
      if (step % 500 == 499) {
        std::vector<Index> out;
        b.drain_sorted(out);
        CHECK(out == std::vector<Index>(ref.begin(), ref.end()));
        ref.clear();
      }
    }
    b.clear();
    CHECK(b.none());
  }
}
