/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "latticelab/textio.h"

#include <gtest/gtest.h>

#include "latticelab/error.h"

namespace latticelab {
namespace {

TEST(TextDocumentTest, RoundTrip) {
  TextDocument doc("latticelab-test-v1");
  doc.Set("n", "4");
  doc.Set("row", "1,2");
  doc.Set("row", "3,4");
  doc.AddLine("5,6,7");
  TextDocument back = TextDocument::Parse(doc.ToString(), "latticelab-test-v1");
  EXPECT_EQ(back.Get("n"), "4");
  EXPECT_EQ(back.GetAll("row"), (std::vector<std::string>{"1,2", "3,4"}));
  EXPECT_EQ(back.Get("row"), "1,2");
  EXPECT_EQ(back.lines(), (std::vector<std::string>{"5,6,7"}));
}

TEST(TextDocumentTest, CommentsAndErrors) {
  TextDocument d = TextDocument::Parse("hdr\n# comment\n\nk=v\n", "hdr");
  EXPECT_TRUE(d.Has("k"));
  EXPECT_FALSE(d.Has("missing"));
  EXPECT_THROW(d.Get("missing"), Error);
  EXPECT_THROW(TextDocument::Parse("other\nk=v\n", "hdr"), Error);
}

TEST(ParseTest, Numbers) {
  EXPECT_EQ(ParseInt("-12"), -12);
  EXPECT_EQ(ParseUint("59393"), 59393u);
  EXPECT_DOUBLE_EQ(ParseDouble("3.2"), 3.2);
  EXPECT_THROW(ParseInt("12x"), Error);
  EXPECT_THROW(ParseUint("-1"), Error);
  EXPECT_EQ(ParseIntCsv("1,-2,3"), (std::vector<int64_t>{1, -2, 3}));
  EXPECT_EQ(ParseUintCsv("7"), (std::vector<uint64_t>{7}));
  EXPECT_EQ(JoinCsv(std::vector<int64_t>{1, -2}), "1,-2");
  EXPECT_DOUBLE_EQ(ParseDouble(FormatDouble(0.1 + 0.2)), 0.1 + 0.2);
}

}  // namespace
}  // namespace latticelab
