#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "insep/matrix.hpp"
#include "insep/predict.hpp"
#include "insep/ring.hpp"
#include "insep/witness.hpp"

using namespace insep;

namespace {

extension_profile mk(std::uint64_t p, std::vector<std::uint32_t> es) {
  extension_profile pr;
  pr.p = p;
  pr.exponents = std::move(es);
  return pr;
}

bool cites(const prediction& pred, const std::string& rule) {
  for (const citation& c : pred.citations)
    if (c.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("group parsing") {
  CHECK(parse_group("GL", 3).display == "GL(3)");
  CHECK(parse_group("GL3", 0).display == "GL(3)");
  CHECK(parse_group("GL3", 3).rank == 3);
  CHECK(parse_group("GL1", 0).rank == 1);
  CHECK(parse_group("SL2", 0).family == group_family::sl2);
  CHECK(parse_group("PGL2", 0).family == group_family::pgl2);
  CHECK(parse_group("SL5", 0).family == group_family::simply_connected);
  CHECK(parse_group("SL5", 0).rank == 4);
  CHECK(parse_group("PGL4", 0).family == group_family::adjoint);
  CHECK(parse_group("PGL4", 0).rank == 3);
  CHECK(parse_group("SO7", 0).type == lie_type::B);
  CHECK(parse_group("SO7", 0).rank == 3);
  CHECK(parse_group("SO8", 0).type == lie_type::D);
  CHECK(parse_group("SO8", 0).rank == 4);
  CHECK(parse_group("Sp8", 0).type == lie_type::C);
  CHECK(parse_group("Sp8", 0).rank == 4);
  CHECK(parse_group("B3", 0).family == group_family::simply_connected);
  CHECK(parse_group("adjoint-B3", 0).family == group_family::adjoint);
  CHECK(parse_group("adjoint-E6", 0).display == "adjoint-E6");
  CHECK(parse_group("G2", 0).type == lie_type::G2);
  CHECK(parse_group("E7", 0).rank == 7);
  CHECK(parse_group("F4", 0).rank == 4);
  CHECK(parse_group("A4", 0).type == lie_type::A);

  CHECK_THROWS_AS(parse_group("GL", 0), error);    // missing rank
  CHECK_THROWS_AS(parse_group("GL3", 4), error);   // conflicting rank
  CHECK_THROWS_AS(parse_group("GL0", 0), error);
  CHECK_THROWS_AS(parse_group("A1", 0), error);
  CHECK_THROWS_AS(parse_group("SO4", 0), error);
  CHECK_THROWS_AS(parse_group("SO3", 0), error);
  CHECK_THROWS_AS(parse_group("Sp5", 0), error);
  CHECK_THROWS_AS(parse_group("Sp2", 0), error);
  CHECK_THROWS_AS(parse_group("E9", 0), error);
  CHECK_THROWS_AS(parse_group("F3", 0), error);
  CHECK_THROWS_AS(parse_group("G3", 0), error);
  CHECK_THROWS_AS(parse_group("D2", 0), error);
  CHECK_THROWS_AS(parse_group("adjoint-GL3", 0), error);
  CHECK_THROWS_AS(parse_group("adjoint-SO7", 0), error);
  CHECK_THROWS_AS(parse_group("Q5", 0), error);
  try {
    parse_group("X99", 0);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_family);
    CHECK(e.is_usage());
  }
}

TEST_CASE("frozen predictions") {
  // Characteristic-2 SL2 with a repeated leading exponent: the +1 jump.
  {
    const prediction p = predict(mk(2, {1, 1}), parse_group("SL2", 0));
    CHECK(p.applicable);
    REQUIRE(p.exact.has_value());
    CHECK(*p.exact == 2);
    CHECK(cites(p, "sl2-char-two"));
  }
  // Same profile, simple extension: no jump.
  {
    const prediction p = predict(mk(2, {1}), parse_group("SL2", 0));
    CHECK(*p.exact == 1);
  }
  {
    const prediction p = predict(mk(2, {2, 1}), parse_group("SL2", 0));
    CHECK(*p.exact == 2);  // e_2 < e_1: stays at e
  }
  // GL(3) in the exact case: pinned to ceil(log_2 m) = 3.
  {
    const prediction p = predict(mk(2, {2, 1}), parse_group("GL3", 0));
    CHECK(p.applicable);
    REQUIRE(p.exact.has_value());
    CHECK(*p.exact == 3);
    CHECK(*p.lower == 3);
    CHECK(*p.upper == 3);
    CHECK(cites(p, "gl-exact-case"));
    CHECK(cites(p, "gl-borel-lower"));
    CHECK(cites(p, "gl-m-bound"));
    CHECK(cites(p, "gl-ch-bound"));
  }
  // E6 in characteristic 3 is gated off.
  {
    const prediction p = predict(mk(3, {1}), parse_group("E6", 0));
    CHECK_FALSE(p.applicable);
    CHECK_FALSE(p.reason.empty());
    CHECK_FALSE(p.lower.has_value());
    CHECK_FALSE(p.upper.has_value());
  }
  // Sp(8) over p=5: exact case at rank 4.
  {
    const extension_profile pr = mk(5, {2, 1, 1});
    const prediction p = predict(pr, parse_group("Sp8", 0));
    CHECK(p.applicable);
    REQUIRE(p.exact.has_value());
    CHECK(*p.exact == 3);  // ceil(log_5 33)
    CHECK(*p.lower == 3);
    CHECK(cites(p, "simple-borel-lower"));
    CHECK(cites(p, "simple-exact-case"));
    CHECK(e_of(pr, 4) == 3);
  }
  // Trivial extension: exponent 0 for any family.
  for (const char* name : {"GL3", "SL2", "SO7", "E8"}) {
    const prediction p = predict(mk(7, {}), parse_group(name, 0));
    CHECK(p.applicable);
    CHECK(*p.exact == 0);
    CHECK(cites(p, "trivial-extension"));
  }
}

TEST_CASE("rank-one and small-rank general linear rules") {
  {
    const prediction p = predict(mk(3, {2}), parse_group("GL1", 0));
    CHECK(*p.exact == 2);
    CHECK(cites(p, "gl-rank-one"));
  }
  {
    const prediction p = predict(mk(3, {2, 2}), parse_group("GL2", 0));
    CHECK(*p.exact == 3);  // e + 1, since l >= 2 and r = 2 <= p
    CHECK(cites(p, "gl-rank-le-p"));
    CHECK(cites(p, "rank-one-trio"));
  }
  {
    const prediction p = predict(mk(5, {1, 1, 1}), parse_group("GL4", 0));
    CHECK(*p.exact == 2);  // 2 <= 4 <= 5
  }
  {
    // r > p: no small-rank rule; the exact case still pins the value here.
    const prediction p = predict(mk(2, {1, 1}), parse_group("GL3", 0));
    CHECK(p.applicable);
    CHECK(*p.exact == big_e_m(mk(2, {1, 1})));
    CHECK_FALSE(cites(p, "gl-rank-le-p"));
  }
}

TEST_CASE("the rank-one trio agrees") {
  for (const auto& pr : {mk(3, {1}), mk(3, {2, 1}), mk(5, {1, 1}), mk(7, {2})}) {
    const prediction gl2 = predict(pr, parse_group("GL2", 0));
    const prediction pgl2 = predict(pr, parse_group("PGL2", 0));
    const prediction sl2 = predict(pr, parse_group("SL2", 0));
    REQUIRE(gl2.exact.has_value());
    CHECK(*gl2.exact == *pgl2.exact);
    CHECK(*gl2.exact == *sl2.exact);
  }
  // In characteristic 2, SL2 may deviate from GL2 downward.
  {
    const extension_profile pr = mk(2, {2, 1});
    CHECK(*predict(pr, parse_group("GL2", 0)).exact == 3);
    CHECK(*predict(pr, parse_group("SL2", 0)).exact == 2);
  }
}

TEST_CASE("characteristic gates for simple groups") {
  const extension_profile p2 = mk(2, {1, 1});
  CHECK_FALSE(predict(p2, parse_group("B3", 0)).applicable);
  CHECK_FALSE(predict(p2, parse_group("C3", 0)).applicable);
  CHECK_FALSE(predict(p2, parse_group("D4", 0)).applicable);
  CHECK_FALSE(predict(p2, parse_group("F4", 0)).applicable);
  CHECK_FALSE(predict(p2, parse_group("adjoint-B3", 0)).applicable);
  CHECK(predict(p2, parse_group("SO7", 0)).applicable);
  CHECK(predict(p2, parse_group("Sp6", 0)).applicable);
  CHECK(predict(p2, parse_group("G2", 0)).applicable);
  CHECK(predict(p2, parse_group("E7", 0)).applicable);
  CHECK(predict(p2, parse_group("A4", 0)).applicable);

  const extension_profile p3 = mk(3, {1});
  CHECK_FALSE(predict(p3, parse_group("E6", 0)).applicable);
  CHECK_FALSE(predict(p3, parse_group("adjoint-E6", 0)).applicable);
  CHECK(predict(p3, parse_group("E7", 0)).applicable);
  CHECK(predict(p3, parse_group("B3", 0)).applicable);

  const extension_profile p5 = mk(5, {1});
  CHECK(predict(p5, parse_group("E6", 0)).applicable);
  CHECK(predict(p5, parse_group("F4", 0)).applicable);
}

TEST_CASE("merged bounds are coherent across a grid") {
  const std::vector<extension_profile> grid = {mk(2, {1}),    mk(2, {1, 1}), mk(2, {2, 1}),
                                               mk(2, {2, 2}), mk(3, {1, 1}), mk(3, {2}),
                                               mk(5, {1, 1}), mk(2, {1, 1, 1})};
  const std::vector<std::string> groups = {"GL1", "GL2", "GL3", "GL4", "SL2",       "PGL2",
                                           "SO7", "Sp6", "A4",  "E7",  "adjoint-A2"};
  for (const extension_profile& pr : grid) {
    for (const std::string& name : groups) {
      const prediction p = predict(pr, parse_group(name, 0));
      if (!p.applicable) {
        CHECK_FALSE(p.reason.empty());
        continue;
      }
      if (p.lower && p.upper) CHECK(*p.lower <= *p.upper);
      if (p.exact) {
        REQUIRE(p.lower.has_value());
        REQUIRE(p.upper.has_value());
        CHECK(*p.lower == *p.exact);
        CHECK(*p.upper == *p.exact);
      }
      CHECK_FALSE(p.citations.empty());
      for (const citation& c : p.citations) {
        CHECK_FALSE(c.rule.empty());
        CHECK_FALSE(c.quote.empty());
      }
    }
  }
}

TEST_CASE("cross validation against a real witness") {
  const extension_profile pr = mk(2, {2, 1});
  const ring_ptr r = ring::make(pr);
  for (std::uint32_t rank = 1; rank <= 4; ++rank) {
    const witness_report w = borel_witness(r, rank);
    const sample_stats stats = sample_max_exponent(r, rank, 16, 5, false);
    const cross_check_result cv = cross_validate(pr, rank, w, stats);
    CAPTURE(rank);
    std::string joined;
    for (const std::string& n : cv.notes) joined += n + "; ";
    CAPTURE(joined);
    CHECK(cv.pass);
  }
  // A lying witness is caught.
  witness_report w = borel_witness(r, 2);
  w.verified_exponent += 1;
  const cross_check_result cv = cross_validate(pr, 2, w, sample_stats{});
  CHECK_FALSE(cv.pass);
  CHECK_FALSE(cv.notes.empty());
}

TEST_CASE("prediction rejects invalid profiles") {
  CHECK_THROWS_AS(predict(mk(4, {1}), parse_group("GL2", 0)), error);
  CHECK_THROWS_AS(predict(mk(2, {1, 2}), parse_group("GL2", 0)), error);
}
