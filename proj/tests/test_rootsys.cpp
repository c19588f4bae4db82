#include "bridge.hpp"
#include "twinv/errors.hpp"
#include "twinv/rootsys.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace twinv;
using bridge::levi;
using bridge::vec;

namespace {

const std::vector<std::string> kOracleTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2"};

oracle::Vec euclid_of(const oracle::Euclid& e, const RationalVector& v, long long scale) {
  oracle::Vec out(e.simple[0].size(), 0);
  for (int i = 0; i < e.rank; ++i) {
    Rational x = v[i] * Rational(static_cast<long>(scale));
    REQUIRE(x.get_den() == 1);
    out = oracle::add(out, e.simple[i], x.get_num().get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("positive root counts of small types") {
  auto a1 = build_root_system("A1");
  REQUIRE(a1->positive_roots().size() == 1);
  CHECK(a1->positive_roots()[0] == Root{1});

  auto a2 = build_root_system("A2");
  std::set<Root> got(a2->positive_roots().begin(), a2->positive_roots().end());
  CHECK(got == std::set<Root>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(build_root_system("G2")->positive_roots().size() == 6);
  CHECK(build_root_system("E6")->positive_roots().size() == 36);
  CHECK(build_root_system("F4")->positive_roots().size() == 24);
  CHECK(build_root_system("A2xB2")->positive_roots().size() == 7);
}

TEST_CASE("Cartan matrix and root set agree with Euclidean models") {
  for (const auto& t : kOracleTypes) {
    CAPTURE(t);
    auto rs = build_root_system(t);
    auto o = bridge::oracle_system(t);
    CHECK(rs->cartan() == o.group.cartan);
    std::set<Root> lib(rs->positive_roots().begin(), rs->positive_roots().end());
    std::set<Root> ora(o.group.positive.begin(), o.group.positive.end());
    CHECK(lib == ora);
  }
}

TEST_CASE("simple pairings") {
  auto a2 = build_root_system("A2");
  CHECK(a2->pair_simple(Root{1, 0}, 0) == 2);
  CHECK(a2->pair_simple(Root{1, 0}, 1) == -1);

  auto g2 = build_root_system("G2");
  int a = g2->pair_simple(Root{1, 0}, 1);
  int b = g2->pair_simple(Root{0, 1}, 0);
  CHECK(std::multiset<int>{a, b} == std::multiset<int>{-1, -3});
  CHECK(a != b);
  CHECK(b == -3);
}

TEST_CASE("pairing with every coroot matches 2(lambda, beta)/(beta, beta)") {
  for (const auto& t : kOracleTypes) {
    CAPTURE(t);
    auto rs = build_root_system(t);
    auto o = bridge::oracle_system(t);
    const int r = rs->rank();
    std::vector<RationalVector> probes;
    for (int i = 0; i < r; ++i) probes.push_back(rs->simple_root(i));
    probes.push_back(rs->rho());
    std::vector<Rational> mixed(r);
    for (int i = 0; i < r; ++i) {
      mixed[i] = Rational(i * i - 2 * i + 3, 2);
      mixed[i].canonicalize();
    }
    probes.emplace_back(mixed);
    for (const auto& lam : probes) {
      auto le = euclid_of(o.euclid, lam, 2);
      for (const auto& beta : rs->positive_roots()) {
        auto be = euclid_of(o.euclid, RationalVector::from_ints(beta), 1);
        Rational want(static_cast<long>(2 * oracle::dot(le, be)), static_cast<long>(2 * oracle::dot(be, be)));
        want.canonicalize();
        CHECK(pairing(*rs, lam, beta) == want);
      }
    }
  }
}

TEST_CASE("rho pairs to one with every simple coroot") {
  for (const auto& t : kOracleTypes) {
    auto rs = build_root_system(t);
    for (int i = 0; i < rs->rank(); ++i) CHECK(rs->pair_simple(rs->rho(), i) == 1);
  }
}

TEST_CASE("projection to the Levi dual") {
  auto a2 = build_root_system("A2");
  CHECK(project_to_levi_dual(*a2, vec({3, -2}), LeviSubset()) == vec({3, -2}));
  CHECK(project_to_levi_dual(*a2, vec({1, 0}), levi({1})).is_zero());
  RationalVector half({Rational(1, 2), Rational(1)});
  CHECK(project_to_levi_dual(*a2, vec({1, 1}), levi({1})) == half);
}

TEST_CASE("rho of parabolics") {
  auto a1 = build_root_system("A1");
  CHECK(rho(*a1, LeviSubset(), a1->full_levi()) == RationalVector({Rational(1, 2)}));
  auto a2 = build_root_system("A2");
  CHECK(rho(*a2, LeviSubset(), a2->full_levi()) == vec({1, 1}));
  CHECK(rho(*a2, levi({1}), a2->full_levi()) == RationalVector({Rational(1, 2), Rational(1)}));
  CHECK_THROWS_AS(rho(*a2, levi({1, 2}), levi({1})), PreconditionError);
}

TEST_CASE("relative roots in A1 and A2") {
  auto a2 = build_root_system("A2");
  auto all0 = relative_roots(*a2, LeviSubset());
  CHECK(all0.size() == 6);
  for (const auto& a : all0) {
    REQUIRE(a.lifts.size() == 1);
    CHECK(a.coroot == a2->coroot(a.lifts.front()));
  }
  auto r1 = relative_roots(*a2, levi({1}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].lifts == std::vector<Root>{{0, 1}, {1, 1}});
  CHECK(r1[0].sign == 1);
  CHECK(r1[1].sign == -1);
  CHECK(r1[0].simple_index == 1);

  auto a1 = build_root_system("A1");
  CHECK(relative_roots(*a1, levi({1})).empty());
}

TEST_CASE("relative roots match the oracle grouping by coordinates outside S") {
  for (const auto& t : kOracleTypes) {
    auto rs = build_root_system(t);
    auto o = bridge::oracle_system(t);
    const int r = rs->rank();
    for (auto s : all_levis(r)) {
      CAPTURE(t);
      CAPTURE(s.to_string());
      std::map<std::vector<int>, std::set<long long>> groups;
      for (std::size_t k = 0; k < o.euclid.positive.size(); ++k) {
        auto c = oracle::simple_coords(o.euclid, o.euclid.positive[k]);
        std::vector<int> key;
        for (int i = 0; i < r; ++i)
          if (!s.contains(i)) key.push_back(c[i]);
        if (std::all_of(key.begin(), key.end(), [](int x) { return x == 0; })) continue;
        groups[key].insert(oracle::dot(o.euclid.positive[k], o.euclid.positive[k]));
      }
      std::size_t mixed = 0;
      for (const auto& [key, lengths] : groups) mixed += lengths.size() > 1;

      auto pos = positive_relative_roots(*rs, s);
      CHECK(pos.size() == groups.size());
      std::size_t conflicts = 0;
      for (const auto& a : pos) conflicts += !a.coroot_conflicts.empty();
      CHECK(conflicts == mixed);
    }
  }
}

TEST_CASE("coroot of a relative root depends on the lift in B2") {
  auto b2 = build_root_system("B2");
  auto pos = positive_relative_roots(*b2, levi({2}));
  REQUIRE(pos.size() == 1);
  const auto& a = pos.front();
  CHECK(a.lifts == std::vector<Root>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(a.coroot_conflicts == std::vector<Root>{{1, 1}});
  auto first = project_coroot(*b2, b2->coroot(Root{1, 0}), levi({2}));
  auto second = project_coroot(*b2, b2->coroot(Root{1, 1}), levi({2}));
  CHECK(second[0] == 2 * first[0]);
  CHECK_THROWS_AS(positive_relative_roots(*b2, levi({2}), true), InvariantViolation);
}

TEST_CASE("simply-laced relative coroots are lift independent") {
  for (const char* t : {"A4", "D4", "D5", "E6"}) {
    auto rs = build_root_system(t);
    for (auto s : all_levis(rs->rank()))
      for (const auto& a : positive_relative_roots(*rs, s, true)) CHECK(a.coroot_conflicts.empty());
  }
}

TEST_CASE("malformed type strings are rejected") {
  for (const char* bad : {"", "A0", "B1", "D2", "E9", "G3", "X2", "A", "A2x", "2A"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_root_system(bad), InputError);
  }
}

TEST_CASE("pairing rejects non-roots") {
  auto a2 = build_root_system("A2");
  CHECK_THROWS_AS(pairing(*a2, vec({1, 0}), Root{2, 1}), InputError);
}

TEST_CASE("Levi subset ordering and rendering") {
  auto all = all_levis(3);
  REQUIRE(all.size() == 8);
  CHECK(all.front().empty());
  CHECK(all[1] == levi({1}));
  CHECK(all.back() == LeviSubset::full(3));
  CHECK(levi({1, 3}).to_string() == "{1,3}");
  CHECK(levi({1, 3}).one_based() == std::vector<int>{1, 3});
}
