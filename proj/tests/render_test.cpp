#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "mdl/expr.hpp"
#include "mdl/render.hpp"
#include "support/fixtures.hpp"
#include "support/license_sections.hpp"

using namespace mdl;

using license_sections::section;
using license_sections::Section;

TEST(License, FullGrantContainsFixtureFragments) {
  std::string text = generate_license(GrantSet::full()).text;
  auto fragments = fixtures::license_fragments();
  ASSERT_EQ(fragments.size(), 12u);
  for (const auto& f : fragments) EXPECT_NE(text.find(f.text), std::string::npos) << f.anchor;
}

TEST(License, FragmentsAreVerbatimSourceText) {
  std::string paper = fixtures::paper_text();
  if (paper.empty()) GTEST_SKIP() << "paper.md not present";
  for (const auto& f : fixtures::license_fragments())
    EXPECT_NE(paper.find(f.text), std::string::npos) << f.anchor;
}

TEST(License, HeaderAndHash) {
  GrantSet g = parse_grant("MDL-1.0; data: access; model: research");
  LicenseDocument doc = generate_license(g);
  EXPECT_EQ(doc.text.rfind("MDL-Expression: MDL-1.0; data: access; model: research\n", 0), 0u);
  EXPECT_NE(doc.text.find("MDL-Template: MDL-1.0/verbatim\n"), std::string::npos);
  EXPECT_EQ(doc.template_version, "MDL-1.0/verbatim");
  EXPECT_EQ(doc.content_hash, sha256_hex(doc.text));
  EXPECT_EQ(doc.content_hash.size(), 64u);
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(License, Deterministic) {
  GrantSet g = parse_grant("MDL-1.0; data: access, label; model: publish; restrictions: parties(a|b), exclude(x)");
  LicenseDocument a = generate_license(g), b = generate_license(g);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.content_hash, b.content_hash);
  EXPECT_NE(generate_license(g, {.verbatim_typos = false}).content_hash, a.content_hash);
}

TEST(License, AccessOnlyExcludesTheRest) {
  std::string text = generate_license(parse_grant("MDL-1.0; data: access")).text;
  Section data = section(text, 3);
  EXPECT_EQ(data.b, (std::vector<std::string>{"Labelling", "Distribute", "Represent"}));
  Section model = section(text, 4);
  EXPECT_EQ(model.a, std::vector<std::string>{"(none)"});
  EXPECT_EQ(model.b, (std::vector<std::string>{"Benchmark", "Research", "Publish", "Internal Use",
                                               "Output Commercialization", "Model Commercialization"}));
}

TEST(License, EmptyGrant) {
  std::string text = generate_license(GrantSet{}).text;
  EXPECT_EQ(section(text, 3).a, std::vector<std::string>{"(none)"});
  EXPECT_EQ(section(text, 4).a, std::vector<std::string>{"(none)"});
  for (const auto& clause : LicenseTemplate::verbatim().general_clauses)
    EXPECT_NE(text.find(clause), std::string::npos);
  EXPECT_NE(text.find("Attribution should be made to"), std::string::npos);
}

TEST(License, ComplementPartitionsVocabularyForAllGrants) {
  for (std::uint32_t m = 0; m < (1u << kRightCount); ++m) {
    GrantSet g(RightSet::from_mask(m));
    auto split = license_sections::classify(generate_license(g).text, LicenseTemplate::verbatim());
    ASSERT_TRUE(split.error.empty()) << m << ": " << split.error;
    ASSERT_TRUE((split.granted & split.excluded).empty()) << m;
    ASSERT_EQ(split.granted | split.excluded, RightSet::all()) << m;
    ASSERT_EQ(split.granted, closure(g.rights())) << m;
  }
}

TEST(License, BenchmarkCaseOne) {
  std::string text = generate_license(parse_grant("MDL-1.0; model: benchmark")).text;
  Section model = section(text, 4);
  ASSERT_EQ(model.a.size(), 1u);
  EXPECT_NE(model.a[0].find("[case 1 only]"), std::string::npos);
  EXPECT_EQ(model.b[0].rfind("Benchmark (case 2", 0), 0u);
}

TEST(License, RestrictionsRendered) {
  GrantSet g = parse_grant("MDL-1.0; data: access, distribute; restrictions: parties(mila), no-sublicense, exclude(military)");
  std::string text = generate_license(g).text;
  Section data = section(text, 3);
  Section model = section(text, 4);
  auto contains = [](const std::vector<std::string>& v, const std::string& needle) {
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
  };
  EXPECT_TRUE(contains(data.b, "mila"));
  EXPECT_TRUE(contains(model.b, "mila"));
  EXPECT_TRUE(contains(data.b, "military"));
  EXPECT_TRUE(contains(model.b, "military"));
  EXPECT_TRUE(contains(data.b, LicenseTemplate::verbatim().exclude_sublicense));
  EXPECT_FALSE(contains(model.b, LicenseTemplate::verbatim().exclude_sublicense));
}

TEST(License, NoticeClauseFollowsRestrictions) {
  const LicenseTemplate& t = LicenseTemplate::verbatim();
  std::string plain = generate_license(parse_grant("MDL-1.0")).text;
  EXPECT_NE(plain.find(t.notice_attribution), std::string::npos);
  EXPECT_NE(plain.find(t.notice_confidential_conditional), std::string::npos);

  std::string attr = generate_license(parse_grant("MDL-1.0; restrictions: attribution")).text;
  EXPECT_NE(attr.find(t.notice_attribution), std::string::npos);
  EXPECT_EQ(attr.find("shall not publicly refer to Licensor"), std::string::npos);

  std::string conf = generate_license(parse_grant("MDL-1.0; restrictions: confidential")).text;
  EXPECT_EQ(conf.find(t.notice_attribution), std::string::npos);
  EXPECT_NE(conf.find("shall not publicly refer to Licensor"), std::string::npos);
}

TEST(License, VerbatimKeepsTyposCorrectedFixesThem) {
  std::string v = generate_license(GrantSet::full()).text;
  std::string c = generate_license(GrantSet::full(), {.verbatim_typos = false}).text;
  EXPECT_NE(v.find("use of the data consists acceptance"), std::string::npos);
  EXPECT_EQ(c.find("consists acceptance"), std::string::npos);
  EXPECT_NE(c.find("constitutes acceptance"), std::string::npos);
  EXPECT_NE(v.find("Output and/Model"), std::string::npos);
  EXPECT_NE(c.find("Output and/or Model"), std::string::npos);
  EXPECT_NE(c.find("MDL-Template: MDL-1.0/corrected"), std::string::npos);
  EXPECT_FALSE(LicenseTemplate::corrected().changelog.empty());
  EXPECT_TRUE(LicenseTemplate::verbatim().changelog.empty());
  // Tagged Data wording is kept in both.
  EXPECT_NE(c.find("Creation of Tagged Data."), std::string::npos);
}

TEST(License, TemplateJsonRoundTrip) {
  for (const LicenseTemplate* t : {&LicenseTemplate::verbatim(), &LicenseTemplate::corrected()}) {
    LicenseTemplate back = LicenseTemplate::from_json(t->to_json());
    EXPECT_EQ(generate_license(GrantSet::full(), back).text, generate_license(GrantSet::full(), *t).text);
  }
}

TEST(License, ShippedTemplatesMatchBuiltIns) {
  for (const LicenseTemplate* t : {&LicenseTemplate::verbatim(), &LicenseTemplate::corrected()}) {
    auto path = fixtures::source_dir() / "docs" / "templates" / (t->variant + ".json");
    LicenseTemplate loaded = LicenseTemplate::load(path);
    EXPECT_EQ(loaded.to_json(), t->to_json()) << path;
  }
}

TEST(TopSheet, Examples) {
  TopSheet pub = make_top_sheet(parse_grant("MDL-1.0; model: publish"));
  for (const auto& row : pub.rows) {
    RowStatus want = row.right == Right::Publish ? RowStatus::Granted
                     : (row.right == Right::Research || row.right == Right::Benchmark1 ||
                        row.right == Right::Benchmark2 || row.right == Right::Access)
                         ? RowStatus::Implied
                         : RowStatus::Excluded;
    EXPECT_EQ(row.status, want) << token(row.right);
  }
  for (const auto& row : make_top_sheet(GrantSet{}).rows) EXPECT_EQ(row.status, RowStatus::Excluded);
  for (const auto& row : make_top_sheet(GrantSet::full()).rows) EXPECT_EQ(row.status, RowStatus::Granted);
}

TEST(TopSheet, RowsAgreeWithDenoteForAllGrants) {
  for (std::uint32_t m = 0; m < (1u << kRightCount); ++m) {
    GrantSet g(RightSet::from_mask(m));
    TopSheet sheet = make_top_sheet(g);
    CapabilitySet caps = denote(g);
    RightSet closed = closure(g.rights());
    for (std::size_t i = 0; i < kRightCount; ++i) {
      const auto& row = sheet.rows[i];
      ASSERT_EQ(row.right, kAllRights[i]);
      ASSERT_EQ(row.status == RowStatus::Implied, closed.contains(row.right) && !g.has(row.right));
      ASSERT_EQ(row.status != RowStatus::Excluded, right_capabilities(row.right).is_subset_of(caps))
          << m << " " << token(row.right);
    }
  }
}

TEST(TopSheet, StructuredSchema) {
  GrantSet g = parse_grant("MDL-1.0; data: distribute; restrictions: attribution");
  auto j = nlohmann::json::parse(render_top_sheet(g, TopSheetFormat::Structured));
  EXPECT_EQ(j["version"], "MDL-1.0");
  EXPECT_EQ(j["expression"], serialize(g));
  ASSERT_EQ(j["rights"].size(), 11u);
  for (const auto& row : j["rights"]) {
    EXPECT_TRUE(row.contains("name"));
    EXPECT_TRUE(row.contains("family"));
    EXPECT_TRUE(row.contains("status"));
    EXPECT_TRUE(row.contains("definition"));
  }
  EXPECT_EQ(j["rights"][2]["status"], "granted");
  EXPECT_EQ(j["rights"][0]["status"], "implied");
  ASSERT_EQ(j["restrictions"].size(), 1u);
  std::vector<std::string> obligations;
  for (const auto& o : j["obligations"]) obligations.push_back(o["obligation"]);
  EXPECT_EQ(obligations, (std::vector<std::string>{"attribute", "same-terms-on-distribution"}));
}

TEST(TopSheet, HumanRenderings) {
  GrantSet g = parse_grant("MDL-1.0; model: publish; restrictions: exclude(<military>)");
  std::string md = render_top_sheet(g, TopSheetFormat::Markdown);
  EXPECT_NE(md.find("Summary of rights granted in conjunction with Models"), std::string::npos);
  EXPECT_NE(md.find("| Publish | Granted |"), std::string::npos);
  EXPECT_NE(md.find("| Research | Implied |"), std::string::npos);
  std::string html = render_top_sheet(g, TopSheetFormat::Html);
  EXPECT_NE(html.find("&lt;military&gt;"), std::string::npos);
  EXPECT_EQ(html.find("<military>"), std::string::npos);
  EXPECT_EQ(render_top_sheet(g, TopSheetFormat::Html), html);
}
