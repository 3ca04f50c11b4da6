// Copyright 2026 The Guardgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "guardgate/core/error.h"
#include "guardgate/core/unicode.h"
#include "guardgate/rulepii/detector.h"
#include "guardgate/rulepii/validators.h"
#include "tests/oracles/checksum_oracles.h"

namespace guardgate::rulepii {
namespace {

std::string RandomDigits(std::mt19937_64& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + rng() % 10));
  return s;
}

TEST(LuhnTest, Examples) {
  EXPECT_TRUE(ValidateCardLuhn("4242424242424242"));
  EXPECT_TRUE(ValidateCardLuhn("0000000000000000"));
  EXPECT_FALSE(ValidateCardLuhn("4242424242424241"));
}

TEST(LuhnTest, LengthOutOfRange) {
  EXPECT_FALSE(ValidateCardLuhn("000000000000"));
  EXPECT_FALSE(ValidateCardLuhn("00000000000000000000"));
  EXPECT_FALSE(ValidateCardLuhn("42424242424242a2"));
}

TEST(InnTest, Examples) {
  EXPECT_TRUE(ValidateInn("0000000000"));
  // 2·1+4·2+10·3+3·4+5·5+9·6+4·7+6·8+8·9 = 279; 279 mod 11 = 4.
  EXPECT_TRUE(ValidateInn("1234567894"));
  EXPECT_FALSE(ValidateInn("1234567890"));
  EXPECT_TRUE(ValidateInn("500100732259"));
  EXPECT_FALSE(ValidateInn("500100732258"));
  EXPECT_FALSE(ValidateInn("12345678901"));
}

TEST(SnilsTest, Examples) {
  EXPECT_TRUE(ValidateSnils("00000000000"));
  // S = 1·9+1·8+2·7+2·6+3·5+3·4+4·3+4·2+5·1 = 95.
  EXPECT_TRUE(ValidateSnils("11223344595"));
  EXPECT_FALSE(ValidateSnils("11223344596"));
  EXPECT_FALSE(ValidateSnils("1122334459"));
}

TEST(SnilsTest, LargeSumsWrap) {
  // 999999999: S = 9·45 = 405, 405 mod 101 = 1.
  EXPECT_EQ(SnilsChecksum("999999999"), 1);
  // S = 117 wraps to 16; S = 100 and S = 101 both map to 00.
  EXPECT_EQ(SnilsChecksum("911111111"), 16);
  EXPECT_EQ(SnilsChecksum("920000100"), 0);
  EXPECT_EQ(SnilsChecksum("920000101"), 0);
}

TEST(OgrnTest, Examples) {
  EXPECT_TRUE(ValidateOgrn("0000000000000"));
  EXPECT_TRUE(ValidateOgrn("1027700132195"));
  EXPECT_FALSE(ValidateOgrn("1027700132196"));
  EXPECT_TRUE(ValidateOgrnip("333770009386691"));
  EXPECT_FALSE(ValidateOgrnip("333770009386690"));
  EXPECT_FALSE(ValidateOgrnip("0000000000000"));
}

TEST(KppTest, FormatOnly) {
  EXPECT_TRUE(ValidateKppFormat("770701001"));
  EXPECT_TRUE(ValidateKppFormat("7707AB001"));
  EXPECT_FALSE(ValidateKppFormat("7707ab001"));
  EXPECT_FALSE(ValidateKppFormat("77070100"));
}

TEST(PhoneTest, Normalize) {
  EXPECT_EQ(NormalizePhone("8 (916) 123-45-67"), "+79161234567");
  EXPECT_EQ(NormalizePhone("+7 916 123 45 67"), "+79161234567");
  EXPECT_EQ(NormalizePhone("12345"), std::nullopt);
  EXPECT_EQ(NormalizePhone("+1 916 123 45 67"), std::nullopt);
}

TEST(EntropyTest, Values) {
  EXPECT_DOUBLE_EQ(ShannonEntropy(U"aaaa"), 0.0);
  EXPECT_DOUBLE_EQ(ShannonEntropy(U"abcd"), 2.0);
}

// Each validator agrees with its independent oracle on random candidates.
TEST(ChecksumOracleTest, RandomAgreement) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    const std::string card = RandomDigits(rng, 13 + rng() % 7);
    ASSERT_EQ(ValidateCardLuhn(card), oracle::LuhnOracle(card)) << card;
    const std::string inn = RandomDigits(rng, rng() % 2 ? 10 : 12);
    ASSERT_EQ(ValidateInn(inn), oracle::InnOracle(inn)) << inn;
    const std::string snils = RandomDigits(rng, 11);
    ASSERT_EQ(ValidateSnils(snils), oracle::SnilsOracle(snils)) << snils;
    const std::string ogrn = RandomDigits(rng, 13);
    ASSERT_EQ(ValidateOgrn(ogrn), oracle::OgrnOracle(ogrn)) << ogrn;
    const std::string ogrnip = RandomDigits(rng, 15);
    ASSERT_EQ(ValidateOgrnip(ogrnip), oracle::OgrnipOracle(ogrnip)) << ogrnip;
  }
}

TEST(ChecksumOracleTest, ComputedCheckDigitsValidate) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const std::string b9 = RandomDigits(rng, 9);
    ASSERT_TRUE(oracle::InnOracle(b9 + std::to_string(Inn10CheckDigit(b9))));
    const std::string b10 = RandomDigits(rng, 10);
    char buf[3];
    std::snprintf(buf, sizeof(buf), "%02d", Inn12CheckDigits(b10));
    ASSERT_TRUE(oracle::InnOracle(b10 + buf));
    std::snprintf(buf, sizeof(buf), "%02d", SnilsChecksum(b9));
    ASSERT_TRUE(oracle::SnilsOracle(b9 + buf));
    const std::string b12 = RandomDigits(rng, 12);
    ASSERT_TRUE(oracle::OgrnOracle(b12 + std::to_string(OgrnCheckDigit(b12))));
    const std::string b14 = RandomDigits(rng, 14);
    ASSERT_TRUE(oracle::OgrnipOracle(b14 + std::to_string(OgrnipCheckDigit(b14))));
    const std::string b15 = RandomDigits(rng, 15);
    ASSERT_TRUE(oracle::LuhnOracle(b15 + std::to_string(LuhnCheckDigit(b15))));
  }
}

TEST(LuhnTest, DetectsEverySingleSubstitution) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 1000; ++i) {
    std::string body = RandomDigits(rng, 15);
    const std::string card = body + std::to_string(LuhnCheckDigit(body));
    ASSERT_TRUE(ValidateCardLuhn(card));
    for (size_t pos = 0; pos < card.size(); ++pos) {
      for (char d = '0'; d <= '9'; ++d) {
        if (d == card[pos]) continue;
        std::string mutated = card;
        mutated[pos] = d;
        ASSERT_FALSE(ValidateCardLuhn(mutated)) << mutated;
      }
    }
  }
}

class DetectTest : public ::testing::Test {
 protected:
  std::vector<Span> Detect(const std::string& text) {
    return DetectStructured(text, registry_);
  }
  DetectorRegistry registry_ = DetectorRegistry::Defaults();
};

TEST_F(DetectTest, Inn) {
  const auto spans = Detect("ИНН 1234567894");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 4);
  EXPECT_EQ(spans[0].end, 14);
  EXPECT_EQ(spans[0].label, "INN");
  EXPECT_EQ(spans[0].score, 1.0);
  EXPECT_EQ(spans[0].source, SpanSource::kRule);
}

TEST_F(DetectTest, InvalidInnChecksumIgnored) {
  EXPECT_TRUE(Detect("ИНН 1234567890").empty());
}

TEST_F(DetectTest, Email) {
  const auto spans = Detect("email: a@b.io");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0], (Span{7, 13, "EMAIL", 1.0, SpanSource::kRule}));
}

TEST_F(DetectTest, NothingInPlainText) {
  EXPECT_TRUE(Detect("привет, как дела").empty());
  EXPECT_TRUE(Detect("").empty());
}

TEST_F(DetectTest, PhoneShortRunsIgnored) {
  EXPECT_TRUE(Detect("позвоните 12345").empty());
  const auto spans = Detect("тел. 8 (916) 123-45-67.");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].label, "PHONE_NUMBER");
  EXPECT_EQ(spans[0].start, 5);
  EXPECT_EQ(spans[0].end, 22);
}

TEST_F(DetectTest, CardAndCvcWithContext) {
  const std::string text = "Карта 4242 4242 4242 4242, CVC 123";
  const auto spans = Detect(text);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].label, "BANK_CARD_NUMBER");
  EXPECT_EQ(Utf8Slice(text, spans[0].start, spans[0].end), "4242 4242 4242 4242");
  EXPECT_EQ(spans[1].label, "CVC");
  EXPECT_EQ(Utf8Slice(text, spans[1].start, spans[1].end), "123");
}

TEST_F(DetectTest, CvcNeedsContext) {
  EXPECT_TRUE(Detect("у нас 123 яблока").empty());
  EXPECT_EQ(Detect("CVV: 987").size(), 1u);
}

TEST_F(DetectTest, PassportNeedsContext) {
  EXPECT_TRUE(Detect("номер 4510 123456 в списке").empty());
  const std::string text = "Паспорт 4510 123456 выдан";
  const auto spans = Detect(text);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].label, "PASSPORT_NUMBER");
  EXPECT_EQ(Utf8Slice(text, spans[0].start, spans[0].end), "4510 123456");
}

TEST_F(DetectTest, StructuredIds) {
  const std::string text =
      "ОГРН 1027700132195, ОГРНИП 333770009386691, КПП 770701001, "
      "СНИЛС 112-233-445 95";
  const auto spans = Detect(text);
  ASSERT_EQ(spans.size(), 4u);
  EXPECT_EQ(spans[0].label, "OGRN");
  EXPECT_EQ(spans[1].label, "OGRNIP");
  EXPECT_EQ(spans[2].label, "KPP");
  EXPECT_EQ(spans[3].label, "SNILS");
  EXPECT_EQ(Utf8Slice(text, spans[3].start, spans[3].end), "112-233-445 95");
}

TEST_F(DetectTest, DigitRunsInsideLongerNumbersIgnored) {
  // 14 digits: not an INN, OGRN or OGRNIP.
  EXPECT_TRUE(Detect("номер 12345678941234").empty());
}

TEST_F(DetectTest, Token) {
  const std::string text = "ключ sk-9fA2kLm0QzX7vB4nR8tYp1Wc. Спасибо";
  const auto spans = Detect(text);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].label, "TOKEN");
  EXPECT_EQ(Utf8Slice(text, spans[0].start, spans[0].end),
            "sk-9fA2kLm0QzX7vB4nR8tYp1Wc");
  // Low entropy and no digits.
  EXPECT_TRUE(Detect("aaaaaaaaaaaaaaaaaaaaaaaaaaaa").empty());
  EXPECT_TRUE(Detect("abcdefghijklmnopqrstuvwxyzABCD").empty());
}

TEST_F(DetectTest, OutputInvariantsOnRandomText) {
  std::mt19937_64 rng(3);
  const std::u32string alphabet = U"0123456789 -()+@.abcxyzАБВгде№";
  for (int i = 0; i < 300; ++i) {
    std::u32string t;
    const int len = rng() % 80;
    for (int k = 0; k < len; ++k) t.push_back(alphabet[rng() % alphabet.size()]);
    const std::string text = EncodeUtf8(t);
    const auto spans = Detect(text);
    ASSERT_EQ(spans, Detect(text));
    ASSERT_TRUE(PairwiseDisjoint(spans));
    for (size_t k = 0; k < spans.size(); ++k) {
      ASSERT_TRUE(IsWellFormed(spans[k], len));
      if (k > 0) ASSERT_LE(spans[k - 1].start, spans[k].start);
    }
  }
}

TEST(RegistryTest, DefaultsCoverElevenLabelsOnce) {
  const auto registry = DetectorRegistry::Defaults();
  ASSERT_EQ(registry.specs().size(), 11u);
  for (const auto& label : StructuredLabels()) {
    int count = 0;
    for (const auto& spec : registry.specs()) count += spec.label == label;
    EXPECT_EQ(count, 1) << label;
  }
}

TEST(RegistryTest, JsonRoundTrip) {
  const auto registry = DetectorRegistry::Defaults();
  const auto reloaded = DetectorRegistry::FromJson(registry.ToJson());
  EXPECT_EQ(reloaded.ToJson(), registry.ToJson());
  const std::string text = "ИНН 1234567894, a@b.io";
  EXPECT_EQ(DetectStructured(text, reloaded), DetectStructured(text, registry));
}

TEST(RegistryTest, RejectsBadConfig) {
  using nlohmann::json;
  EXPECT_THROW(DetectorRegistry::FromJson(json::array({{{"label", "NAME"}, {"pattern", "x"}}})),
               ConfigError);
  EXPECT_THROW(DetectorRegistry::FromJson(json::array(
                   {{{"label", "EMAIL"}, {"pattern", "x"}, {"colour", 1}}})),
               ConfigError);
  EXPECT_THROW(DetectorRegistry::FromJson(json::array(
                   {{{"label", "EMAIL"}, {"pattern", "("}}})),
               ConfigError);
  EXPECT_THROW(DetectorRegistry::FromJson(json::array(
                   {{{"label", "EMAIL"}, {"pattern", "x"}, {"requires_checksum", true}}})),
               ConfigError);
}

TEST(ValidateCandidateTest, Outcomes) {
  auto card = ValidateCandidate("BANK_CARD_NUMBER", "4242 4242 4242 4241");
  EXPECT_TRUE(card.format_valid);
  EXPECT_EQ(card.checksum_valid, false);
  auto short_card = ValidateCandidate("BANK_CARD_NUMBER", "4242");
  EXPECT_FALSE(short_card.format_valid);
  EXPECT_EQ(short_card.checksum_valid, false);
  auto kpp = ValidateCandidate("KPP", "770701001");
  EXPECT_TRUE(kpp.format_valid);
  EXPECT_FALSE(kpp.checksum_valid.has_value());
}

}  // namespace
}  // namespace guardgate::rulepii
