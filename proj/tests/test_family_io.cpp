#include <doctest.h>

#include <cmath>

#include "dynbax/errors.hpp"
#include "dynbax/family_io.hpp"
#include "dynbax/suite.hpp"

using namespace dynbax;

namespace {

double block_diff(const LocalOperatorMap& a, const LocalOperatorMap& b) {
  double m = 0.0;
  for (const auto& [v, op] : a) {
    for (const auto& blk : op.blocks()) {
      m = std::max(m, std::abs(blk.value - b.at(v).block(blk.in, blk.out)));
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("family-io") {

TEST_CASE("TL round trip") {
  const TLFamily tl = diagram_family("A5");
  const FamilyFile f = parse_family_file(family_to_json(tl));
  CHECK(f.kind() == FamilyFileKind::TL);
  const TLFamily back = tl_from_file(f);
  CHECK(back.graph().edges() == tl.graph().edges());
  CHECK(block_diff(tl.T, back.T) == 0.0);
  CHECK(block_diff(back.T, tl.T) == 0.0);
  CHECK(check_dTL(back, 1e-11).pass);
  CHECK_THROWS_AS(hecke_from_file(f), InputError);
}

TEST_CASE("Hecke and BMW round trips") {
  const HeckeFamily h = hecke_from_TL(diagram_family("A5"));
  const FamilyFile fh = parse_family_file(family_to_json(h));
  CHECK(fh.kind() == FamilyFileKind::Hecke);
  const HeckeFamily hb = hecke_from_file(fh);
  CHECK(block_diff(h.S, hb.S) == 0.0);
  CHECK(check_dHecke(hb, 1e-10).pass);

  const BMWFamily b = bmw_from_hecke(h, 1.0 / h.qbar.begin()->second);
  const FamilyFile fb = parse_family_file(family_to_json(b));
  CHECK(fb.kind() == FamilyFileKind::BMW);
  const BMWFamily bb = bmw_from_file(fb);
  CHECK(block_diff(b.U, bb.U) == 0.0);
  CHECK(check_dBMW(bb, 1e-9).pass);
  CHECK(family_file_kind_name(FamilyFileKind::BMW) == "BMW");
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(parse_family_file("{"), InputError);
  CHECK_THROWS_AS(parse_family_file("{\"graph\": [[1,2]], \"order\": 2, \"blocks\": []}"),
                  InputError);
  CHECK_THROWS_AS(
      parse_family_file("{\"graph\": [[1,2]], \"order\": 3, \"blocks\": [], "
                        "\"kappa\": [{\"vertex\":1,\"re\":0,\"im\":0},{\"vertex\":2,\"re\":0,\"im\":0}]}"),
      InputError);
  CHECK_THROWS_AS(
      parse_family_file("{\"graph\": [[1,2]], \"order\": 2, \"blocks\": [], "
                        "\"kappa\": [{\"vertex\":1,\"re\":0,\"im\":0}]}"),
      InputError);
  CHECK_THROWS_AS(read_family_file("/nonexistent/family.json"), InputError);
}

TEST_CASE("blocks breaking degree preservation") {
  const std::string text =
      "{\"graph\": [[1,2],[2,3]], \"order\": 2, "
      "\"blocks\": [{\"base\": 2, \"in\": [2,1,2], \"out\": [2,3,2], \"re\": 1, \"im\": 0},"
      "{\"base\": 1, \"in\": [1,2,1], \"out\": [1,2,3], \"re\": 1, \"im\": 0}], "
      "\"kappa\": [{\"vertex\":1,\"re\":1,\"im\":0},{\"vertex\":2,\"re\":1,\"im\":0},"
      "{\"vertex\":3,\"re\":1,\"im\":0}]}";
  CHECK_THROWS_AS(tl_from_file(parse_family_file(text)), ShapeError);
}

}  // TEST_SUITE
