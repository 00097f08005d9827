#include <gtest/gtest.h>

#include "utf8.hpp"

namespace u8 = stoprank::utf8;

TEST(Utf8, DecodesMultibyte) {
  const std::string s = "a\xC3\xA9\xE2\x80\x99\xF0\x9F\x98\x80";  // a é ’ 😀
  auto d = u8::decode(s, 0);
  EXPECT_EQ(d.code_point, U'a');
  d = u8::decode(s, 1);
  EXPECT_EQ(d.code_point, 0xE9u);
  EXPECT_EQ(d.length, 2u);
  d = u8::decode(s, 3);
  EXPECT_EQ(d.code_point, 0x2019u);
  EXPECT_EQ(d.length, 3u);
  d = u8::decode(s, 6);
  EXPECT_EQ(d.code_point, 0x1F600u);
  EXPECT_EQ(d.length, 4u);
  EXPECT_EQ(u8::length(s), 4u);
}

TEST(Utf8, RejectsMalformed) {
  EXPECT_FALSE(u8::first_invalid_byte("plain ascii").has_value());
  EXPECT_FALSE(u8::first_invalid_byte("caf\xC3\xA9").has_value());
  EXPECT_EQ(u8::first_invalid_byte("ab\xFF"), 2u);
  EXPECT_EQ(u8::first_invalid_byte("\xC0\xAF"), 0u);          // overlong '/'
  EXPECT_EQ(u8::first_invalid_byte("x\xED\xA0\x80"), 1u);     // surrogate
  EXPECT_EQ(u8::first_invalid_byte("\xF4\x90\x80\x80"), 0u);  // > U+10FFFF
  EXPECT_EQ(u8::first_invalid_byte("\xE2\x80"), 0u);          // truncated
}

TEST(Utf8, MalformedDecodesToReplacement) {
  const auto d = u8::decode("\xFF", 0);
  EXPECT_EQ(d.code_point, u8::kReplacement);
  EXPECT_EQ(d.length, 1u);
}

TEST(Utf8, Classification) {
  EXPECT_TRUE(u8::is_letter(U'z'));
  EXPECT_TRUE(u8::is_letter(0xE9));   // é
  EXPECT_TRUE(u8::is_letter(0x3B1));  // α
  EXPECT_TRUE(u8::is_letter(0x4E00));
  EXPECT_FALSE(u8::is_letter(U'7'));
  EXPECT_FALSE(u8::is_letter(U'-'));
  EXPECT_TRUE(u8::is_apostrophe(U'\''));
  EXPECT_TRUE(u8::is_apostrophe(0x2019));
  EXPECT_TRUE(u8::is_whitespace(0xA0));
  EXPECT_EQ(u8::to_lower(U'Q'), U'q');
  EXPECT_EQ(u8::to_lower("\xC3\x89T\xC3\x89"), "\xC3\xA9t\xC3\xA9");  // ÉTÉ
}

TEST(Utf8, AppendRoundTrips) {
  for (char32_t cp : {U'a', char32_t{0xE9}, char32_t{0x2019}, char32_t{0x1F600}}) {
    std::string s;
    u8::append(s, cp);
    const auto d = u8::decode(s, 0);
    EXPECT_EQ(d.code_point, cp);
    EXPECT_EQ(d.length, s.size());
  }
}
