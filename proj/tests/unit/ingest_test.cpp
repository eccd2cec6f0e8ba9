// Copyright 2026 The k8s-atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <filesystem>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace k8s_atlas {
namespace {

using testing::fixture;
using testing::yaml_equal;

TEST(SourceSpecTest, StdinHasEmptyLocatorOthersDoNot) {
  EXPECT_TRUE(SourceSpec::stdin_source().valid());
  EXPECT_TRUE(SourceSpec::file("a.yaml").valid());
  EXPECT_FALSE(SourceSpec::file("").valid());
  EXPECT_FALSE((SourceSpec{SourceKind::Stdin, "x"}.valid()));
  EXPECT_TRUE(SourceSpec::live_cluster().valid());
}

TEST(SourceSpecTest, CommandsForExternalSources) {
  EXPECT_EQ(source_command(SourceSpec::helm_chart("c")),
            (std::pair<std::string, std::vector<std::string>>{"helm", {"template", "c"}}));
  EXPECT_EQ(source_command(SourceSpec::kustomization("d")).first, "kustomize");
  EXPECT_EQ(source_command(SourceSpec::helmfile("h.yaml")).second,
            (std::vector<std::string>{"-f", "h.yaml", "template"}));
  EXPECT_EQ(source_command(SourceSpec::live_cluster()).second,
            (std::vector<std::string>{"get", "all", "-o", "yaml"}));
}

TEST(AcquireTest, FileIsReturnedVerbatim) {
  const auto path = fixture("wordpress/secret.yaml");
  EXPECT_EQ(acquire(SourceSpec::file(path.string())), read_file(path));
  EXPECT_NE(acquire(SourceSpec::file(path.string())).find("kind: Secret"), std::string::npos);
}

TEST(AcquireTest, StdinIsReturnedVerbatim) {
  std::istringstream in("apiVersion: v1\nkind: List\nitems: []\n");
  EXPECT_EQ(acquire(SourceSpec::stdin_source(), in), "apiVersion: v1\nkind: List\nitems: []\n");
}

TEST(AcquireTest, UnreadableFileIsIoError) {
  EXPECT_THROW(acquire(SourceSpec::file("/nonexistent/x.yaml")), IoError);
  try {
    acquire(SourceSpec::file("/nonexistent/x.yaml"));
  } catch (const Error& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::Input);
  }
}

TEST(AcquireTest, MissingBinaryIsReported) {
  testing::ScopedEnv path("PATH", "/nonexistent-bin");
  try {
    acquire(SourceSpec::helm_chart("oci://example/chart"));
    FAIL() << "expected MissingBinary";
  } catch (const MissingBinary& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::Environment);
    EXPECT_NE(std::string(e.what()).find("helm"), std::string::npos);
  }
}

TEST(AcquireTest, SubprocessOutputIsCaptured) {
  testing::ScopedEnv path("PATH", K8S_ATLAS_FAKE_BIN_DIR ":/usr/bin:/bin");
  const auto text = acquire(SourceSpec::helm_chart(fixture("helm/mini-chart").string()));
  EXPECT_NE(text.find("# Source: mini-chart/templates/service.yaml"), std::string::npos);
  EXPECT_EQ(split_documents(text, SourceSpec::helm_chart("x")).size(), 2u);
}

TEST(AcquireTest, SubprocessFailureCarriesStderr) {
  testing::ScopedEnv path("PATH", K8S_ATLAS_FAKE_BIN_DIR ":/usr/bin:/bin");
  try {
    acquire(SourceSpec::kustomization("/nonexistent"));
    FAIL() << "expected SubprocessFailed";
  } catch (const SubprocessFailed& e) {
    EXPECT_EQ(e.error_class(), ErrorClass::Input);
    EXPECT_NE(std::string(e.what()).find("kustomization.yaml"), std::string::npos);
  }
}

TEST(ExpandSourceTest, DirectoryExpandsToSortedYamlFiles) {
  const auto expanded = expand_source(SourceSpec::file(fixture("wordpress").string()));
  ASSERT_EQ(expanded.size(), 3u);
  EXPECT_EQ(std::filesystem::path(expanded[0].locator).filename(), "mysql-deployment.yaml");
  EXPECT_EQ(std::filesystem::path(expanded[1].locator).filename(), "secret.yaml");
  EXPECT_EQ(std::filesystem::path(expanded[2].locator).filename(), "wordpress-deployment.yaml");
  EXPECT_EQ(expand_source(SourceSpec::stdin_source()), (std::vector<SourceSpec>{SourceSpec::stdin_source()}));
}

TEST(SplitDocumentsTest, TwoDocuments) {
  const auto docs = split_documents("a: 1\n---\nb: 2\n", SourceSpec::stdin_source());
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].index_in_stream, 0);
  EXPECT_EQ(docs[1].index_in_stream, 1);
  EXPECT_EQ(docs[1].tree["b"].as<int>(), 2);
}

TEST(SplitDocumentsTest, EmptyDocumentsAreDropped) {
  const auto docs = split_documents("---\n\n---\na: 1\n", SourceSpec::stdin_source());
  ASSERT_EQ(docs.size(), 1u);
  EXPECT_EQ(docs[0].index_in_stream, 0);
  EXPECT_EQ(split_documents("# only a comment\n---\n", SourceSpec::stdin_source()).size(), 0u);
}

TEST(SplitDocumentsTest, IssuerAndCertificateListing) {
  const auto path = fixture("cert-manager/issuer-certificate.yaml");
  const auto docs = split_documents(read_file(path), SourceSpec::file(path.string()));
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].tree["kind"].as<std::string>(), "Issuer");
  EXPECT_EQ(docs[1].tree["kind"].as<std::string>(), "Certificate");
}

TEST(SplitDocumentsTest, SyntaxErrorHasPositionAndOrigin) {
  try {
    split_documents("a: 1\nb: [unclosed\n", SourceSpec::file("broken.yaml"));
    FAIL() << "expected YamlSyntaxError";
  } catch (const YamlSyntaxError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("broken.yaml"), std::string::npos) << msg;
    EXPECT_GE(e.line(), 2);
  }
}

TEST(SplitDocumentsTest, RoundTripsAtValueLevel) {
  const std::string stream = "a: 1\n---\n# c\n---\nlist: [1, 2, {x: y}]\nname: 'q'\n---\nz: null\n";
  const auto docs = split_documents(stream, SourceSpec::stdin_source());
  std::string joined;
  for (const auto& d : docs) joined += "---\n" + d.text;
  // Filter by copying: erasing from a vector<YAML::Node> shifts elements
  // through Node::operator=, which writes into the referenced nodes.
  std::vector<YAML::Node> original;
  for (const auto& n : YAML::LoadAll(stream))
    if (!n.IsNull()) original.push_back(n);
  const auto reparsed = YAML::LoadAll(joined);
  ASSERT_EQ(reparsed.size(), original.size());
  for (std::size_t i = 0; i < original.size(); ++i) EXPECT_TRUE(yaml_equal(original[i], reparsed[i])) << i;
  for (const auto& d : docs) EXPECT_EQ(YAML::LoadAll(d.text).size(), 1u);
}

TEST(SplitDocumentsTest, ReorderingKeepsEachTreeWithItsText) {
  auto docs = split_documents("a: 1\n---\nb: 2\n---\nc: 3\n", SourceSpec::stdin_source());
  ASSERT_EQ(docs.size(), 3u);
  std::rotate(docs.begin(), docs.begin() + 1, docs.end());
  std::reverse(docs.begin(), docs.end());
  for (const auto& d : docs) EXPECT_TRUE(yaml_equal(d.tree, YAML::Load(d.text))) << d.text;
  std::vector<std::string> keys;
  for (const auto& d : docs) keys.push_back(d.tree.begin()->first.as<std::string>());
  EXPECT_EQ(keys, (std::vector<std::string>{"a", "c", "b"}));
}

TEST(FlattenListsTest, OneLevel) {
  const auto doc = YAML::Load("kind: List\nitems:\n- {kind: Pod, metadata: {name: podA}}\n"
                              "- {kind: Service, metadata: {name: svcB}}\n");
  const auto out = flatten_lists(doc);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0]["metadata"]["name"].as<std::string>(), "podA");
  EXPECT_EQ(out[1]["metadata"]["name"].as<std::string>(), "svcB");
}

TEST(FlattenListsTest, NonListIsIdentity) {
  const auto doc = YAML::Load("kind: Pod\nmetadata: {name: p}\n");
  const auto out = flatten_lists(doc);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(yaml_equal(out[0], doc));
}

TEST(FlattenListsTest, NestedListMatchesHandUnrolledFixture) {
  const auto nested = YAML::Load(
      "apiVersion: v1\nkind: List\nitems:\n"
      "- kind: List\n  items:\n  - {kind: ConfigMap, metadata: {name: x}}\n"
      "- {kind: Secret, metadata: {name: y}}\n");
  // Hand-unrolled expectation, written out independently of the input.
  const auto expected = YAML::LoadAll("{kind: ConfigMap, metadata: {name: x}}\n---\n"
                                      "{kind: Secret, metadata: {name: y}}\n");
  const auto out = flatten_lists(nested);
  ASSERT_EQ(out.size(), expected.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    EXPECT_TRUE(yaml_equal(out[i], expected[i])) << i;
    EXPECT_NE(out[i]["kind"].as<std::string>(), "List");
  }
}

TEST(FlattenListsTest, ListWithoutItemsIsMalformed) {
  EXPECT_THROW(flatten_lists(YAML::Load("kind: List\n")), MalformedList);
  EXPECT_THROW(flatten_lists(YAML::Load("kind: List\nitems: {a: 1}\n")), MalformedList);
}

TEST(LoadDocumentsTest, PreservesSourceOrder) {
  const auto docs = load_documents({SourceSpec::file(fixture("wordpress/secret.yaml").string()),
                                    SourceSpec::file(fixture("cert-manager/issuer-certificate.yaml").string())});
  ASSERT_EQ(docs.size(), 3u);
  EXPECT_EQ(docs[0].tree["kind"].as<std::string>(), "Secret");
  EXPECT_EQ(docs[1].tree["kind"].as<std::string>(), "Issuer");
  EXPECT_EQ(docs[2].index_in_stream, 1);
}

TEST(LoadDocumentsTest, NonMappingDocumentsAreSkippedWithWarning) {
  Diagnostics diag;
  const auto resources = testing::parse_text("just a scalar\n---\n- a\n- b\n---\n"
                                             "apiVersion: v1\nkind: ConfigMap\nmetadata: {name: c}\n",
                                             builtin_config(), &diag);
  ASSERT_EQ(resources.size(), 1u);
  EXPECT_EQ(diag.warnings().size(), 2u);
}

}  // namespace
}  // namespace k8s_atlas
