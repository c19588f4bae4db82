#include "bridge.hpp"
#include "twinv/cones.hpp"
#include "twinv/errors.hpp"

#include <doctest.h>

using namespace twinv;
using bridge::levi;
using bridge::vec;
using bridge::word;

namespace {

DiagramInvolution flip(const RootSystemPtr& rs) { return DiagramInvolution::parse(rs, "2,1"); }

void grid(int r, int k, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == r) {
    f(cur);
    return;
  }
  for (int x = -k; x <= k; ++x) {
    cur.push_back(x);
    grid(r, k, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("minus eigenspace membership") {
  auto a2 = build_root_system("A2");
  auto th = flip(a2);
  auto e = make_vertex(th, LeviSubset(), WeylElement::identity(a2));
  CHECK(in_minus_eigenspace(th, e, vec({0, 0})));
  CHECK(in_minus_eigenspace(th, e, vec({1, -1})));
  CHECK_FALSE(in_minus_eigenspace(th, e, vec({1, 1})));
  auto a1 = build_root_system("A1");
  auto id1 = DiagramInvolution::identity(a1);
  CHECK(in_minus_eigenspace(id1, make_vertex(id1, LeviSubset(), word(a1, {1})), vec({1})));
}

TEST_CASE("D_{M,theta} examples") {
  auto a1 = build_root_system("A1");
  auto id1 = DiagramInvolution::identity(a1);
  auto s1 = make_vertex(id1, LeviSubset(), word(a1, {1}));
  RationalVector rho0 = a1->rho();
  CHECK(in_cone_DMtheta(id1, s1, Rational(3) * rho0, 2).pass);
  auto low = in_cone_DMtheta(id1, s1, rho0, 2);
  CHECK_FALSE(low.pass);
  REQUIRE(low.witness.has_value());
  CHECK(low.witness->lifts.front() == Root{1});
  CHECK(low.witness_pairing == 1);

  auto a2 = build_root_system("A2");
  auto th = flip(a2);
  auto w0 = make_vertex(th, LeviSubset(), word(a2, {1, 2, 1}));
  CHECK(in_cone_DMtheta(th, w0, vec({0, 0}), 0).pass == false);
  auto r = in_cone_DMtheta(th, w0, vec({1, -1}), 0);
  CHECK_FALSE(r.pass);
  CHECK(r.in_minus_eigenspace);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->lifts.front() == Root{0, 1});
  CHECK(r.witness_pairing == -3);
}

TEST_CASE("zero is accepted when no relative root is sent negative") {
  auto a2 = build_root_system("A2");
  auto id = DiagramInvolution::identity(a2);
  auto e = make_vertex(id, LeviSubset(), WeylElement::identity(a2));
  CHECK(in_cone_DMtheta(id, e, vec({0, 0}), 5).pass);
  auto s = sample_cone_point(id, e, 5);
  CHECK(s.scale == 1);
  CHECK(s.lambda.is_zero());
}

TEST_CASE("D^{M,w} examples") {
  auto a2 = build_root_system("A2");
  CHECK(in_cone_DMw(a2, LeviSubset(), WeylElement::identity(a2), vec({-7, 2}), 100).pass);
  auto w0 = word(a2, {1, 2, 1});
  CHECK(in_cone_DMw(a2, LeviSubset(), w0, a2->rho(), 0).pass);
  CHECK_FALSE(in_cone_DMw(a2, LeviSubset(), w0, a2->rho(), 1).pass);
  auto a1 = build_root_system("A1");
  CHECK(in_cone_DMw(a1, LeviSubset(), word(a1, {1}), Rational(3) * a1->rho(), 2).pass);
}

TEST_CASE("sampling examples") {
  auto a1 = build_root_system("A1");
  auto id1 = DiagramInvolution::identity(a1);
  auto s = sample_cone_point(id1, make_vertex(id1, LeviSubset(), word(a1, {1})), 2);
  CHECK(s.scale == 4);
  CHECK(s.lambda == Rational(4) * a1->rho());

  auto a2 = build_root_system("A2");
  auto th = flip(a2);
  auto w0 = sample_cone_point(th, make_vertex(th, LeviSubset(), word(a2, {1, 2, 1})), 1);
  CHECK(w0.scale == 2);
  CHECK(w0.lambda == Rational(2) * a2->rho());
}

TEST_CASE("membership agrees with a direct pairing table over the empty Levi") {
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    auto rs = build_root_system(t);
    auto o = bridge::oracle_system(t);
    const int r = rs->rank();
    for (const auto& th : all_diagram_involutions(rs)) {
      auto p = oracle::perm_matrix(th.perm());
      for (const auto& v : enumerate_admissible(th, LeviSubset())) {
        auto xt = oracle::mul(bridge::to_mat(v.xi), p, r);
        std::vector<int> cur;
        grid(r, r == 2 ? 3 : 2, cur, [&](const std::vector<int>& lam) {
          bool minus = oracle::apply(xt, lam, r) == [&] {
            auto n = lam;
            for (auto& x : n) x = -x;
            return n;
          }();
          for (int c : {-1, 0, 1}) {
            bool want = minus;
            for (std::size_t k = 0; want && k < o.euclid.positive.size(); ++k) {
              auto beta = o.group.positive[k];
              if (!oracle::is_negative(oracle::apply(xt, beta, r))) continue;
              oracle::Vec le(o.euclid.simple[0].size(), 0);
              for (int i = 0; i < r; ++i) le = oracle::add(le, o.euclid.simple[i], lam[i]);
              const auto& be = o.euclid.positive[k];
              // <lambda, beta^vee> > c  <=>  2 (lambda, beta) > c (beta, beta)
              if (!(2 * oracle::dot(le, be) > c * oracle::dot(be, be))) want = false;
            }
            RationalVector lv(std::vector<Rational>(lam.begin(), lam.end()));
            CHECK(in_cone_DMtheta(th, v, lv, c).pass == want);
          }
        });
      }
    }
  }
}

TEST_CASE("samples lie in their cones for every vertex") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2"}) {
    auto rs = build_root_system(t);
    for (const auto& th : all_diagram_involutions(rs)) {
      auto tw = enumerate_twisted(th);
      for (auto s : all_levis(rs->rank()))
        for (const auto& v : enumerate_admissible(th, s, tw))
          for (int c : {0, 1, 10}) {
            auto smp = sample_cone_point(th, v, c);
            CHECK(in_cone_DMtheta(th, v, smp.lambda, c).pass);
            CHECK(smp.lambda == smp.scale * smp.direction);
          }
    }
  }
}

TEST_CASE("modulus check examples") {
  auto a1 = build_root_system("A1");
  auto id1 = DiagramInvolution::identity(a1);
  auto m1 = modulus_root_check(id1, make_vertex(id1, LeviSubset(), word(a1, {1})));
  CHECK(m1.pass());
  CHECK(m1.levi_l.empty());
  CHECK(m1.rho_q == a1->rho());

  auto a2 = build_root_system("A2");
  auto th = flip(a2);
  auto m12 = modulus_root_check(th, make_vertex(th, LeviSubset(), word(a2, {1, 2})));
  CHECK(m12.pass());
  CHECK(m12.levi_l == levi({2}));
  CHECK(m12.rho_q == RationalVector({Rational(1), Rational(1, 2)}));
  auto mw0 = modulus_root_check(th, make_vertex(th, LeviSubset(), word(a2, {1, 2, 1})));
  CHECK(mw0.pass());
  CHECK(mw0.levi_l.empty());

  CHECK_THROWS_AS(modulus_root_check(th, make_vertex(th, LeviSubset(), WeylElement::identity(a2))), PreconditionError);
}
