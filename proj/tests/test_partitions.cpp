#include <doctest.h>

#include "jk/partition.hpp"

using namespace jk;

namespace {

std::string joined(const std::vector<Partition>& ps) {
  std::string s;
  for (const auto& p : ps) s += p.to_string();
  return s;
}

}  // namespace

TEST_CASE("enumeration order") {
  CHECK(joined(enumerate(4, 1)) == "[4][3,1][2,2][2,1,1][1,1,1,1]");
  CHECK(joined(enumerate(0, 1)) == "[]");
  CHECK(joined(enumerate(6, 2)) == "[6][4,2][3,3][2,2,2]");
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int n = 0; n <= 12; ++n) CHECK(enumerate(n).size() == static_cast<std::size_t>(counts[n]));
}

TEST_CASE("conjugate") {
  CHECK(Partition{4, 3, 3, 3, 1}.conjugate() == Partition{5, 4, 4, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  for (int n = 0; n <= 12; ++n)
    for (const auto& l : enumerate(n)) {
      Partition c = l.conjugate();
      CHECK(c.conjugate() == l);
      CHECK(c.weight() == n);
      for (int i = 1; i <= l.largest(); ++i) CHECK(c.multiplicity(i) == l.part(i) - l.part(i + 1));
    }
}

TEST_CASE("stats") {
  auto s = stats(Partition{2, 2});
  CHECK(s.z == 8);
  CHECK(s.u == 1);
  CHECK(s.v == 1);
  CHECK(s.w == 4);
  auto t = stats(Partition{3, 2});
  CHECK(t.v == 2);
  CHECK(t.w == 7);
  CHECK(stats(Partition{2, 1, 1}).u == 3);
  // Class sizes of the symmetric group add up to n!.
  for (int n = 0; n <= 10; ++n) {
    Integer total = 0;
    for (const auto& mu : enumerate(n)) total += factorial(n) / stats(mu).z;
    CHECK(total == factorial(n));
  }
}

TEST_CASE("add_node and surgery") {
  CHECK(add_node(Partition{2, 2}, 1) == Partition{3, 2});
  CHECK(add_node(Partition{2, 2}, 3) == Partition{2, 2, 1});
  CHECK_THROWS_AS(add_node(Partition{2, 2}, 2), NoSuchPartition);
  CHECK(down(Partition{3, 2}, 3) == Partition{2, 2});
  CHECK(up(Partition{3, 2}, 2) == Partition{3, 3});
  CHECK_THROWS_AS(remove_part(Partition{3, 2}, 5), NoSuchPartition);
  CHECK(union_part(Partition{3, 1}, 2) == Partition{3, 2, 1});
  for (int n = 1; n <= 8; ++n)
    for (const auto& mu : enumerate(n))
      for (int r : mu.parts())
        if (r >= 2) CHECK(up(down(mu, r), r - 1) == mu);
}

TEST_CASE("text form") {
  CHECK(Partition{3, 2}.to_string() == "[3,2]");
  CHECK(Partition{}.to_string() == "[]");
  CHECK(Partition::parse("[3,2]") == Partition{3, 2});
  CHECK(Partition::parse("2,3") == Partition{3, 2});
  CHECK(Partition::parse("[]") == Partition{});
  CHECK_THROWS_AS(Partition::parse("[3,,2]"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("[3,-2]"), std::invalid_argument);
}

TEST_CASE("refinement counts") {
  // p_{1,1} = m_2 + 2 m_{1,1}
  CHECK(refinement_count(Partition{1, 1}, Partition{2}) == 1);
  CHECK(refinement_count(Partition{1, 1}, Partition{1, 1}) == 2);
  CHECK(refinement_count(Partition{2}, Partition{1, 1}) == 0);
  CHECK(refinement_count(Partition{2, 1}, Partition{2, 1}) == 1);
}
