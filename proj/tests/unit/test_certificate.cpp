#include <gtest/gtest.h>

#include "rvc/certificate.hpp"
#include "rvc/errors.hpp"
#include "rvc/reductions.hpp"

using namespace rvc;

TEST(Certificate, RoundTrip) {
  const auto out = sat_to_st(make_formula(3, {{1, 2, -3}, {-1, -2, 3}}));
  const std::string text = serialize_certificate(out.certificate);
  const auto back = parse_certificate(text);
  EXPECT_EQ(back, out.certificate);
  EXPECT_EQ(serialize_certificate(back), text);
}

TEST(Certificate, Lookup) {
  ReductionCertificate c;
  c.reduction = "demo";
  c.roles = {{"s", 1}, {"t", 2}};
  c.colors = {{"c_1", 3}};
  EXPECT_EQ(c.role("t"), 2);
  EXPECT_EQ(c.color("c_1"), 3);
  EXPECT_EQ(c.label_of(1), "s");
  EXPECT_FALSE(c.label_of(9).has_value());
  EXPECT_THROW(c.role("a"), InvalidInput);
  EXPECT_THROW(c.color("c_2"), InvalidInput);
}

TEST(Certificate, RejectsNonInjectiveMaps) {
  EXPECT_THROW(parse_certificate("reduction x\nrole s 1\nrole t 1\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\nrole s 1\nrole s 2\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\ncolor a 1\ncolor b 1\n"), ParseError);
}

TEST(Certificate, ParseErrors) {
  EXPECT_THROW(parse_certificate("role s 1\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\nrole s\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\nbogus 1\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\nclause 1 2\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\nformula 1\nclause 1 2\n"), ParseError);
  EXPECT_THROW(parse_certificate("reduction x\noccurrence 2 1 1\n"), ParseError);
}
