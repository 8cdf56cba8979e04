#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "ontogen/ontogen.hpp"

using namespace ontogen;

namespace {

const std::string kData = ONTOGEN_DATA_DIR;

std::vector<std::string> clean_as(const std::string& text, DocFormat f) {
  return clean(RawDocument{text, f, "t"}).sentences;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST(IsSentence, Examples) {
  EXPECT_TRUE(is_sentence("Walmart reported higher revenues this quarter."));
  EXPECT_TRUE(is_sentence("The company is based in Arkansas!"));
  EXPECT_FALSE(is_sentence("Read more"));
  EXPECT_FALSE(is_sentence("Home | Markets | Tech | About"));
  EXPECT_FALSE(is_sentence("Revenue 12.4 13.9 15.2 17.0."));
  EXPECT_FALSE(is_sentence("The <b>company</b> is based in Arkansas."));
  EXPECT_FALSE(is_sentence("Walmart Amazon Apple Costco Target."));
}

TEST(IsSentence, MinWordsIsConfigurable) {
  CleanConfig cfg;
  cfg.min_words = 2;
  EXPECT_TRUE(is_sentence("Prices rose.", cfg));
  cfg.min_words = 4;
  EXPECT_FALSE(is_sentence("Prices rose.", cfg));
}

TEST(SplitSentences, AbbreviationsDoNotSplit) {
  auto s = split_sentences("Dr. Smith joined Acme Inc. in May. She was hired by J. Doe. It grew.");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], "Dr. Smith joined Acme Inc. in May.");
  EXPECT_EQ(s[2], "It grew.");
  for (const auto& piece : s) EXPECT_EQ(split_sentences(piece), std::vector<std::string>{piece});
}

TEST(Html, ParagraphKeptScriptDropped) {
  auto s = clean_as(
      "<html><head><script>var x = 'The script is running now.';</script></head>"
      "<body><p>Costco opened twelve new warehouses last month.</p></body></html>",
      DocFormat::kHtml);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], "Costco opened twelve new warehouses last month.");
}

TEST(Html, EntitiesDecodeAndWhitespaceNormalises) {
  auto s = clean_as("<p>AT&amp;T   said\n  profits   rose sharply.</p>", DocFormat::kHtml);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], "AT&T said profits rose sharply.");
}

TEST(Html, FacebookPluginIsStripped) {
  auto s = clean_as(
      "<div class=\"fb-plugin\"><p>Like our page on Facebook to see more stories.</p></div>"
      "<div id=\"main\"><p>Facebook announced a change to its privacy rules.</p></div>",
      DocFormat::kHtml);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], "Facebook announced a change to its privacy rules.");
}

TEST(StripAds, RemovesDenylistedContainers) {
  auto tree = html::parse(
      "<div class='ad-banner'>x</div><div class='content'><span id='promo_box'>y</span>keep</div>");
  std::size_t removed = 0;
  auto out = strip_ad_containers(tree, default_ad_denylist(), &removed);
  EXPECT_EQ(removed, 2u);
  EXPECT_EQ(normalize_whitespace(html::text_content(out)), "keep");
}

TEST(StripAds, WordsInsideOtherTokensDoNotMatch) {
  auto tree = html::parse("<div class='headline shadow'>keep</div><div class='loader'>also</div>");
  std::size_t removed = 0;
  auto out = strip_ad_containers(tree, default_ad_denylist(), &removed);
  EXPECT_EQ(removed, 0u);
  EXPECT_EQ(html::count_nodes(out), html::count_nodes(tree));
}

TEST(StripAds, CustomDenylistReplacesDefault) {
  auto tree = html::parse("<div class='ad'>a</div><div class='outbrain'>b</div>");
  auto out = strip_ad_containers(tree, {"outbrain"});
  EXPECT_EQ(normalize_whitespace(html::text_content(out)), "a");
}

TEST(StripAds, Idempotent) {
  auto tree = html::parse(read_file(kData + "/cleaning/docs/markets.html"));
  auto once = strip_ad_containers(tree, default_ad_denylist());
  std::size_t removed = 0;
  auto twice = strip_ad_containers(once, default_ad_denylist(), &removed);
  EXPECT_EQ(removed, 0u);
  EXPECT_EQ(html::text_content(once), html::text_content(twice));
}

TEST(Rss, TitlesAndDescriptionsPerItem) {
  std::string rss = "<rss><channel><title>Feed</title>";
  for (int i = 1; i <= 3; ++i) {
    rss += "<item><title>Company " + std::to_string(i) + " reported record earnings.</title>"
           "<description>&lt;p&gt;Analysts expected weaker results from company " + std::to_string(i) +
           ".&lt;/p&gt;</description></item>";
  }
  rss += "</channel></rss>";
  auto s = clean_as(rss, DocFormat::kRss);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_TRUE(contains(s, "Company 2 reported record earnings."));
  EXPECT_TRUE(contains(s, "Analysts expected weaker results from company 3."));
}

TEST(Xml, ElementTextIsSentenceTested) {
  auto s = clean_as(
      "<?xml version='1.0'?><r><id>17</id><body>The board approved a new dividend policy.</body></r>",
      DocFormat::kXml);
  EXPECT_EQ(s, std::vector<std::string>{"The board approved a new dividend policy."});
}

TEST(Plain, ParagraphsAreSplitIntoSentences) {
  auto s = clean_as("Boeing delivered fewer jets. Airbus delivered more jets.\n\nClick here\n", DocFormat::kPlain);
  EXPECT_EQ(s, (std::vector<std::string>{"Boeing delivered fewer jets.", "Airbus delivered more jets."}));
}

TEST(Clean, NoTagResidueOnBundledDocs) {
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/cleaning/docs")) {
    auto doc = RawDocument{read_file(entry.path()), format_from_extension(entry.path()), entry.path().string()};
    for (const auto& s : clean(doc).sentences) {
      EXPECT_EQ(s.find('<'), std::string::npos) << s;
      EXPECT_EQ(s.find("&lt;"), std::string::npos) << s;
    }
  }
}

TEST(Clean, IsIdempotentOnItsOwnOutput) {
  for (const auto& entry : std::filesystem::directory_iterator(kData + "/cleaning/docs")) {
    auto doc = RawDocument{read_file(entry.path()), format_from_extension(entry.path()), ""};
    auto first = clean(doc).sentences;
    std::string joined;
    for (const auto& s : first) joined += s + "\n\n";
    EXPECT_EQ(clean(RawDocument{joined, DocFormat::kPlain, ""}).sentences, first) << entry.path();
  }
}

TEST(Clean, RandomMarkupNeverLeaksTags) {
  std::mt19937_64 rng(17);
  const char* pieces[] = {"<p>", "</p>", "<div class='ad'>", "</div>", "<script>", "</script>",
                          "The firm reported gains.", " and ", "<b>", "</b>", "&amp;", "<br/>", "<!-- c -->",
                          "Profits increased sharply this year.", "<", ">", "<a href='x'>", "</a>"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string doc;
    for (int k = 0; k < 25; ++k) doc += pieces[rng() % std::size(pieces)];
    for (const auto& s : clean_as(doc, DocFormat::kHtml)) EXPECT_FALSE(detail::has_tag_residue(s)) << s;
  }
}

TEST(Format, DetectedFromExtension) {
  EXPECT_EQ(format_from_extension("a.HTML"), DocFormat::kHtml);
  EXPECT_EQ(format_from_extension("a.rss"), DocFormat::kRss);
  EXPECT_EQ(format_from_extension("a.xml"), DocFormat::kXml);
  EXPECT_EQ(format_from_extension("a.txt"), DocFormat::kPlain);
  EXPECT_THROW(parse_format("pdf"), Error);
}
