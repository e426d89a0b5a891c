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

#include "okie/text.h"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace okie {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

std::vector<std::string> split(std::string_view text, char delimiter) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (true) {
    std::size_t pos = text.find(delimiter, begin);
    if (pos == std::string_view::npos) {
      parts.emplace_back(text.substr(begin));
      return parts;
    }
    parts.emplace_back(text.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

std::vector<std::string> normalized_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i == begin) break;
    std::size_t end = i;
    // Strip punctuation at the token edges only.
    while (begin < end &&
           std::ispunct(static_cast<unsigned char>(text[begin]))) {
      ++begin;
    }
    while (end > begin &&
           std::ispunct(static_cast<unsigned char>(text[end - 1]))) {
      --end;
    }
    if (end > begin) {
      tokens.push_back(to_lower_ascii(text.substr(begin, end - begin)));
    }
  }
  return tokens;
}

std::vector<SentinelHit> find_sentinels(std::string_view text) {
  static constexpr std::string_view kPrefix = "<id_";
  std::vector<SentinelHit> hits;
  std::size_t pos = 0;
  while ((pos = text.find(kPrefix, pos)) != std::string_view::npos) {
    std::size_t digits = pos + kPrefix.size();
    std::size_t cursor = digits;
    while (cursor < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[cursor]))) {
      ++cursor;
    }
    if (cursor > digits && cursor < text.size() && text[cursor] == '>') {
      int id = 0;
      for (std::size_t d = digits; d < cursor; ++d) id = id * 10 + (text[d] - '0');
      hits.push_back({pos, cursor + 1, id});
      pos = cursor + 1;
    } else {
      pos += kPrefix.size();
    }
  }
  return hits;
}

bool contains_sentinel(std::string_view text) {
  return !find_sentinels(text).empty();
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string format_fixed(double value, int decimals) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", decimals, value);
  return buffer;
}

double round1(double value) { return std::round(value * 10.0) / 10.0; }

}  // namespace okie
