// Copyright 2026 The OK-IE Authors.
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

#ifndef OKIE_TEXT_H_
#define OKIE_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace okie {

std::string trim(std::string_view text);

// Lowercases A-Z only; multi-byte UTF-8 sequences pass through untouched.
std::string to_lower_ascii(std::string_view text);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view text);

std::vector<std::string> split(std::string_view text, char delimiter);

// Whitespace tokens, lowercased, with punctuation stripped from token
// edges. Tokens that become empty are dropped.
std::vector<std::string> normalized_tokens(std::string_view text);

// One sentinel occurrence inside a string: `<id_K>` at [begin, end).
struct SentinelHit {
  std::size_t begin = 0;
  std::size_t end = 0;
  int id = 0;
};

// All well-formed `<id_K>` occurrences, left to right. Malformed
// lookalikes (`<id_>`, `<id_3x>`) are skipped.
std::vector<SentinelHit> find_sentinels(std::string_view text);

bool contains_sentinel(std::string_view text);

// 64-bit FNV-1a, rendered as 16 hex digits. Used for run-directory names.
std::string fnv1a_hex(std::string_view data);

// Fixed-point rendering helpers ("98.5", "0.532000").
std::string format_fixed(double value, int decimals);

// Rounds to one decimal place, ties away from zero.
double round1(double value);

}  // namespace okie

#endif  // OKIE_TEXT_H_
