#include <doctest.h>

#include <cstdlib>
#include <set>

#include "betamom/oeis.hpp"

using namespace betamom;
using namespace betamom::oeis;

TEST_CASE("b-file parsing") {
  const std::string text = "# comment\n\n0 1\n1 1\n2 2\n3 5\n";
  const auto e = parse_bfile(text, "A000108");
  CHECK(e.offset == 0);
  REQUIRE(e.terms.size() == 4);
  CHECK(e.terms[3] == Int(5));

  // nonzero offset and negative values
  const auto e2 = parse_bfile("2 -6\n3 20\n", "A000984");
  CHECK(e2.offset == 2);
  CHECK(e2.terms[0] == Int(-6));

  // an index gap ends the contiguous run
  const auto e3 = parse_bfile("0 1\n1 2\n5 99\n", "A000984");
  CHECK(e3.terms.size() == 2);

  CHECK_THROWS_AS(parse_bfile("0 1\n", "A00"), BfileParseError);
  CHECK_THROWS_AS(parse_bfile("x y\n", "A000108"), BfileParseError);
  CHECK_THROWS_AS(parse_bfile("0 12x\n", "A000108"), BfileParseError);
  CHECK_THROWS_AS(parse_bfile("# only comments\n", "A000108"), BfileParseError);
}

TEST_CASE("serialize/parse round-trip") {
  OeisEntry e{"A001006", -1, {Int(3), Int(-14), Int("123456789012345678901")}};
  const auto back = parse_bfile(serialize_bfile(e), e.id);
  CHECK(back.offset == e.offset);
  CHECK(back.terms == e.terms);
}

TEST_CASE("fixture fetch and caching") {
  OeisClient client;  // env set by ctest: offline + fixture dir
  const auto e = client.fetch("A000108");
  CHECK(e.offset == 0);
  REQUIRE(e.terms.size() >= 6);
  const long expect[] = {1, 1, 2, 5, 14, 42};
  for (int i = 0; i < 6; ++i) CHECK(e.terms[i] == Int(expect[i]));
  // second fetch hits the cache (same data)
  CHECK(client.fetch("A000108").terms == e.terms);

  CHECK_THROWS_AS(client.fetch("A00"), BfileParseError);
  CHECK_THROWS_AS(client.fetch("A999999"), NetworkUnavailableError);
}

TEST_CASE("all cited ids are present in the fixture snapshot") {
  OeisClient client;
  std::set<std::string> ids;
  for (const auto& entry : catalog())
    if (!entry.oeis_id.empty()) ids.insert(entry.oeis_id);
  for (const std::string extra :
       {"A004117", "A181161", "A000246", "A007272", "A007054"})
    ids.insert(extra);
  for (const auto& id : ids) CHECK_NOTHROW(client.fetch(id));
}

TEST_CASE("catalog claims all match their fixtures") {
  OeisClient client;
  const auto reports = verify_all_claims(client);
  CHECK(reports.size() >= 28);
  for (const auto& r : reports) {
    CAPTURE(r.label);
    CAPTURE(r.note);
    CHECK(r.status == ClaimStatus::exact_prefix_match);
    CHECK(r.compared >= 20);
  }
}

TEST_CASE("negative control: perturbed sequence mismatches") {
  OeisClient client;
  NamedSequenceEntry fake{
      "fake", "perturbed catalan", MomentSpec(Rational(0), Rational(1, 2),
                                              Rational(3, 2)),
      Rational(1), transforms::TransformSpec{{transforms::ConstantScale{
                       Rational(2)}}},
      "A000108", {}};
  const auto rep = verify_claim(fake, client);
  CHECK(rep.status == ClaimStatus::mismatch);
  CHECK(rep.first_mismatch == 0);
}

TEST_CASE("the two super-ballot candidates are both consulted") {
  // the 10 M_n(0,1/2,7/2) family matches A007272 and not A007054;
  // both fixtures ship, and the verdicts name the ids explicitly
  OeisClient client;
  NamedSequenceEntry base = [] {
    for (const auto& e : catalog())
      if (e.label == "pocz-g") return e;
    throw std::runtime_error("pocz-g row missing");
  }();
  CHECK(verify_claim(base, client).status == ClaimStatus::exact_prefix_match);
  NamedSequenceEntry other = base;
  other.oeis_id = "A007054";
  const auto rep = verify_claim(other, client);
  CHECK(rep.status == ClaimStatus::mismatch);
  CHECK(rep.oeis_id == "A007054");
}

TEST_CASE("claims are deterministic given fixtures") {
  OeisClient a, b;
  const auto ra = verify_all_claims(a);
  const auto rb = verify_all_claims(b);
  REQUIRE(ra.size() == rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].label == rb[i].label);
    CHECK(ra[i].status == rb[i].status);
    CHECK(ra[i].shift == rb[i].shift);
  }
}
