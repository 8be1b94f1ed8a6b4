#include <gtest/gtest.h>

#include <sstream>

#include "prset/prset.hpp"

using namespace prset;

TEST(ParseRule, AllForms) {
  EXPECT_EQ(to_string(parse_rule("pow2")), "pow2");
  EXPECT_EQ(to_string(parse_rule("pow2:5")), "pow2:5");
  EXPECT_EQ(to_string(parse_rule("smooth:2,3")), "smooth:2,3");
  EXPECT_EQ(to_string(parse_rule("ap:3,2")), "ap:3,2");
  EXPECT_EQ(to_string(parse_rule("explicit:3,1,2")), "explicit:1,2,3");
  EXPECT_EQ(to_string(parse_rule("5,4")), "explicit:4,5");
  EXPECT_EQ(to_string(parse_rule("complement:3..7")), "complement:3..7");
  EXPECT_EQ(to_string(parse_rule("complement:3..7,mult:9")), "complement:3..7,mult:9");
  EXPECT_EQ(to_string(parse_rule("primes")), "primes");
  EXPECT_EQ(to_string(parse_rule("primes:3,7")), "primes:3,7");
  EXPECT_EQ(to_string(parse_rule("empty")), "explicit:");
  EXPECT_EQ(materialize(parse_rule("all"), 5), WindowSet::full(5));
  EXPECT_EQ(materialize(parse_choice("all"), 5).members(), (std::vector<std::uint64_t>{2, 3, 4, 5}));
}

TEST(ParseRule, RoundTrip) {
  for (const char* text : {"pow2", "pow2:3", "smooth:2,5,7", "ap:4,1", "explicit:1,2,9", "complement:2..9,mult:10",
                           "primes", "primes:2,11"})
    EXPECT_EQ(to_string(parse_rule(text)), text);
}

TEST(ParseRule, ErrorsCarryPosition) {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_rule(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return SIZE_MAX;
  };
  EXPECT_EQ(column_of("ap:3"), 4u);
  EXPECT_EQ(column_of("ap:3,x"), 5u);
  EXPECT_EQ(column_of("smooth:2,4"), 7u);
  EXPECT_EQ(column_of("1,2,,3"), 4u);
  EXPECT_EQ(column_of("1,0"), 2u);
  EXPECT_EQ(column_of("complement:7..3"), 14u);
  EXPECT_EQ(column_of("bogus"), 0u);
  EXPECT_EQ(column_of("pow2x"), 4u);
  EXPECT_EQ(column_of(""), 0u);
  EXPECT_EQ(column_of("99999999999999999999999"), 0u);
}

TEST(ParseSet, Values) {
  EXPECT_EQ(parse_set("3,1,3"), (FiniteSet{1, 3}));
  EXPECT_TRUE(parse_set("").empty());
  EXPECT_THROW(parse_set("1;2"), ParseError);
}

TEST(Output, List) {
  std::ostringstream out;
  write_list(out, {1, 2, 4});
  EXPECT_EQ(out.str(), "1 2 4\n");
  std::ostringstream empty;
  write_list(empty, {});
  EXPECT_EQ(empty.str(), "\n");
}

TEST(Output, Bfile) {
  std::ostringstream out;
  write_bfile(out, {1, 2, 4, 6, 8});
  EXPECT_EQ(out.str(), "1 1\n2 2\n3 4\n4 6\n5 8\n");
}

TEST(Output, Json) {
  std::ostringstream out;
  write_json(out, json_record(12, {1, 2, 3}, {1, 2, 4}));
  EXPECT_EQ(out.str(), "{\"window\":12,\"set\":[1,2,3],\"result\":[1,2,4]}\n");
  EXPECT_EQ(parse_format("bfile"), OutputFormat::bfile);
  EXPECT_THROW(parse_format("csv"), ParseError);
}
